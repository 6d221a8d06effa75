//! Dissipative observables consuming Im α(ω): the blackbody friction
//! coefficient η_BB and the non-contact (quantum) friction coefficient η_QF
//! above a dielectric surface.
//!
//! Both are thermal integrals of the smooth one-loop imaginary part plus an
//! analytic sum over the resonant delta lines (delta contributions are never
//! broadened numerically). Integration runs in atomic units with the
//! substitution ω = t/β normalizing the thermal scale; results convert to SI
//! at the end.
//!
//! The one-loop integrand ω³[Re α]² has double poles at the line positions.
//! At laboratory temperatures the sinh⁻² weight suppresses those regions to
//! far below the quadrature error floor (≈e^{−395} for hydrogen's first line
//! at 300 K), so the adaptive rule accepts them untouched; at temperatures
//! where a pole region is no longer suppressed the integral genuinely
//! diverges and the quadrature reports non-convergence. A node landing inside
//! the resonance guard window contributes zero when the local thermal weight
//! is below 1e-50, else the guard error propagates.

use crate::polarizability::{im_alpha_oneloop, AlphaError, AlphaSource};
use crate::quadrature::{adaptive_gk15, QuadratureError};
use crate::spectrum::neumaier_sum;
use crate::units;
use thiserror::Error;

/// Default relative tolerance of the thermal quadrature.
pub const DEFAULT_QUADRATURE_TOL: f64 = 1e-9;
const MAX_INTERVALS: usize = 4000;

#[derive(Debug, Error)]
pub enum FrictionError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("polarizability evaluation failed: {0}")]
    Alpha(#[from] AlphaError),
    #[error("thermal quadrature failed: {0}")]
    Quadrature(String),
    #[error("integrand became negative at omega = {omega}: {value}")]
    NegativeIntegrand { omega: f64, value: f64 },
}

/// Temperature and integration window for the thermal weight sinh⁻²(βω/2).
#[derive(Debug, Clone, Copy)]
pub struct ThermalConfig {
    pub temperature_k: f64,
    /// β = 1/(k_B T) in 1/Hartree.
    pub beta: f64,
    /// Upper integration cutoff, Hartree.
    pub omega_cut: f64,
}

impl ThermalConfig {
    /// Default cutoff where the thermal weight drops below 1e-300.
    pub fn new(temperature_k: f64) -> Result<Self, FrictionError> {
        if temperature_k.is_nan() || temperature_k <= 0.0 {
            return Err(FrictionError::InvalidArgument(format!(
                "temperature must be positive, got {temperature_k} K"
            )));
        }
        let beta = units::beta_atomic(temperature_k);
        // sinh⁻²(βω/2) = 1e-300 at βω/2 = asinh(1e150)
        let omega_cut = 2.0 * (1e150f64).asinh() / beta;
        Ok(Self {
            temperature_k,
            beta,
            omega_cut,
        })
    }

    pub fn with_cutoff(temperature_k: f64, omega_cut: f64) -> Result<Self, FrictionError> {
        if omega_cut.is_nan() || omega_cut <= 0.0 {
            return Err(FrictionError::InvalidArgument(format!(
                "omega_cut must be positive, got {omega_cut}"
            )));
        }
        let mut cfg = Self::new(temperature_k)?;
        cfg.omega_cut = omega_cut;
        Ok(cfg)
    }

    /// sinh⁻²(βω/2); underflows gracefully to 0 past the cutoff.
    pub fn weight(&self, omega: f64) -> f64 {
        let s = (0.5 * self.beta * omega).sinh();
        let w = 1.0 / (s * s);
        if w.is_finite() {
            w
        } else {
            // sinh overflowed: the weight is an exact numerical zero
            0.0
        }
    }
}

/// Drude dielectric model ε(ω) = 1 − ω_p²/(ω(ω + iγ)).
#[derive(Debug, Clone, Copy)]
pub struct DrudeModel {
    /// Plasma frequency, Hartree.
    pub omega_p: f64,
    /// Damping rate, Hartree, ≥ 0.
    pub gamma: f64,
}

impl DrudeModel {
    pub fn new(omega_p: f64, gamma: f64) -> Result<Self, FrictionError> {
        if omega_p.is_nan() || omega_p <= 0.0 {
            return Err(FrictionError::InvalidArgument(format!(
                "plasma frequency must be positive, got {omega_p}"
            )));
        }
        if gamma.is_nan() || gamma < 0.0 {
            return Err(FrictionError::InvalidArgument(format!(
                "Drude damping must be nonnegative, got {gamma}"
            )));
        }
        Ok(Self { omega_p, gamma })
    }
}

/// Surface loss function Im[(ε(ω)−1)/(ε(ω)+1)]; pluggable, Drude shipped.
pub trait SurfaceResponse {
    fn surface_loss(&self, omega: f64) -> f64;
}

impl SurfaceResponse for DrudeModel {
    /// Im[(ε−1)/(ε+1)] = 2ω_p²ωγ / ((2ω² − ω_p²)² + 4ω²γ²) ≥ 0 for ω, γ ≥ 0.
    fn surface_loss(&self, omega: f64) -> f64 {
        let wp2 = self.omega_p * self.omega_p;
        let d = 2.0 * omega * omega - wp2;
        2.0 * wp2 * omega * self.gamma / (d * d + 4.0 * omega * omega * self.gamma * self.gamma)
    }
}

/// Friction coefficient with its smooth/resonant split and quadrature
/// diagnostics. All η values in SI kg/s; eta = eta_smooth + eta_resonant.
#[derive(Debug, Clone, Copy)]
pub struct FrictionReport {
    pub eta: f64,
    pub eta_smooth: f64,
    pub eta_resonant: f64,
    /// Relative error estimate of the smooth quadrature.
    pub quadrature_error_estimate: f64,
    pub n_evaluations: usize,
}

/// Shared engine: integrate pref_au · extra(ω) · Im_oneloop[α(ω)] · weight dω
/// plus the analytic delta-line sum pref_au · Σ w_n · extra(ω_n) · weight(ω_n),
/// then convert to SI.
fn eta_engine(
    source: &dyn AlphaSource,
    thermal: &ThermalConfig,
    prefactor_au: f64,
    extra: &dyn Fn(f64) -> f64,
    quad_rel_tol: f64,
) -> Result<FrictionReport, FrictionError> {
    let beta = thermal.beta;
    let t_cut = beta * thermal.omega_cut;
    let integrand = |t: f64| -> Result<f64, FrictionError> {
        if t <= 0.0 {
            return Ok(0.0);
        }
        let omega = t / beta;
        let weight = thermal.weight(omega);
        if weight == 0.0 {
            return Ok(0.0);
        }
        let alpha = match source.re_alpha(omega) {
            Ok(a) => a,
            Err(AlphaError::ResonanceProximity { .. }) if weight < 1e-50 => return Ok(0.0),
            Err(e) => return Err(e.into()),
        };
        let value = extra(omega) * im_alpha_oneloop(omega, alpha) * weight / beta;
        if value < 0.0 {
            return Err(FrictionError::NegativeIntegrand { omega, value });
        }
        Ok(value)
    };
    let quad = adaptive_gk15(integrand, 0.0, t_cut, quad_rel_tol, 1e-320, MAX_INTERVALS)
        .map_err(|e| match e {
            QuadratureError::Integrand { source, .. } => source,
            other => FrictionError::Quadrature(other.to_string()),
        })?;
    let smooth_au = prefactor_au * quad.value;
    let resonant_au = prefactor_au
        * neumaier_sum(source.resonance_poles().iter().map(|p| {
            p.weight * extra(p.omega_n) * thermal.weight(p.omega_n)
        }));
    let to_si = units::ATOMIC_FRICTION;
    let eta_smooth = smooth_au * to_si;
    let eta_resonant = resonant_au * to_si;
    Ok(FrictionReport {
        eta: eta_smooth + eta_resonant,
        eta_smooth,
        eta_resonant,
        quadrature_error_estimate: if quad.value != 0.0 {
            quad.error_estimate / quad.value.abs()
        } else {
            0.0
        },
        n_evaluations: quad.n_evaluations,
    })
}

/// Blackbody friction coefficient,
/// η_BB = (βℏ²/12π²ε₀c⁵) ∫ dω ω⁵ Im[α(ω)] / sinh²(βℏω/2),
/// which in atomic units carries the prefactor βα⁵_QED/(3π).
pub fn eta_bb(source: &dyn AlphaSource, thermal: &ThermalConfig) -> Result<FrictionReport, FrictionError> {
    eta_bb_with_tol(source, thermal, DEFAULT_QUADRATURE_TOL)
}

pub fn eta_bb_with_tol(
    source: &dyn AlphaSource,
    thermal: &ThermalConfig,
    quad_rel_tol: f64,
) -> Result<FrictionReport, FrictionError> {
    let a = units::ALPHA_QED;
    let pref = thermal.beta * a * a * a * a * a / (3.0 * std::f64::consts::PI);
    eta_engine(source, thermal, pref, &|omega| {
        let w2 = omega * omega;
        w2 * w2 * omega
    }, quad_rel_tol)
}

/// Quantum (non-contact) friction coefficient at distance `z_m` above a
/// dielectric surface,
/// η_QF = (3βℏ²/32π²ε₀Z⁵) ∫ dω Im[α(ω)] Im[(ε−1)/(ε+1)] / sinh²(βℏω/2),
/// atomic-unit prefactor 3β/(8πZ⁵) with Z in Bohr radii.
pub fn eta_qf(
    source: &dyn AlphaSource,
    thermal: &ThermalConfig,
    z_m: f64,
    surface: &dyn SurfaceResponse,
) -> Result<FrictionReport, FrictionError> {
    eta_qf_with_tol(source, thermal, z_m, surface, DEFAULT_QUADRATURE_TOL)
}

pub fn eta_qf_with_tol(
    source: &dyn AlphaSource,
    thermal: &ThermalConfig,
    z_m: f64,
    surface: &dyn SurfaceResponse,
    quad_rel_tol: f64,
) -> Result<FrictionReport, FrictionError> {
    if z_m.is_nan() || z_m <= 0.0 {
        return Err(FrictionError::InvalidArgument(format!(
            "surface distance must be positive, got {z_m} m"
        )));
    }
    let z_au = z_m / units::BOHR_RADIUS;
    let pref = 3.0 * thermal.beta / (8.0 * std::f64::consts::PI * z_au.powi(5));
    eta_engine(source, thermal, pref, &|omega| surface.surface_loss(omega), quad_rel_tol)
}
