//! Real part, resonant delta-line imaginary part, the ω³ one-loop imaginary
//! part, the radiation-damped resummation, and the naive width-replacement
//! heuristic.
//!
//! The total imaginary part assembled here is
//!
//!   Im α(ω) = Im α_R(ω) + (2α³_QED/3) ω³ [Re α(ω)]²   (atomic units)
//!
//! with Im α_R a sum of delta lines at the excitation energies, weight
//! (π/2) f_n/Δ_n, mirrored oddly at −Δ_n. Everything is arranged so parity is
//! exact in floating point: Re α is even and Im contributions odd, bit for
//! bit, under ω → −ω.

use crate::linalg::LinalgError;
use crate::spectrum::{neumaier_sum, SpectrumModel};
use crate::units;
use num_complex::Complex64;
use thiserror::Error;

/// Guard window for line-sum evaluation near a pole, Hartree.
pub const LINE_POLE_GUARD: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum AlphaError {
    #[error(
        "omega = {omega} Hartree is within the guard window of the resonance at {pole} Hartree"
    )]
    ResonanceProximity { omega: f64, pole: f64 },
    #[error("the velocity-gauge form carries a 1/omega^2 prefactor and is undefined at omega = 0")]
    SingularFrequency,
    #[error("{got} widths supplied for {expected} lines")]
    WidthCountMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaMethod {
    LineSum,
    GridSolve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gauge {
    Length,
    Velocity,
}

/// One resonance of Im α_R: a delta line at `omega_n` with weight
/// (π/2) f_n/Δ_n; the odd mirror at −omega_n is implicit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonancePole {
    pub omega_n: f64,
    pub weight: f64,
}

/// Complex α at one frequency with provenance.
#[derive(Debug, Clone, Copy)]
pub struct PolarizabilityResult {
    pub omega: f64,
    pub re_alpha: f64,
    pub im_alpha_oneloop: f64,
    /// Lorentzian-smeared resonant part; 0 when broadening = 0 (the resonant
    /// part is then distributional — see [`resonance_poles`]).
    pub im_alpha_resonant_broadened: f64,
    pub method: AlphaMethod,
    pub gauge: Gauge,
}

/// Anything that can serve polarizability evaluations: a line spectrum or a
/// radial grid.
pub trait AlphaSource {
    /// Re α(ω) in atomic units; even in ω.
    fn re_alpha(&self, omega: f64) -> Result<f64, AlphaError>;
    /// Resonance delta lines of Im α_R, sorted by frequency.
    fn resonance_poles(&self) -> Vec<ResonancePole>;
    fn method(&self) -> AlphaMethod;
}

impl AlphaSource for SpectrumModel {
    /// Sum over lines Σ f_n/(Δ_n² − ω²); the standard oscillator-strength
    /// expansion, normalized so the complete hydrogen spectrum gives 9/2 at
    /// ω = 0. Principal-value semantics: no broadening is added, and
    /// evaluation within 1e-9 Hartree of a line is refused.
    fn re_alpha(&self, omega: f64) -> Result<f64, AlphaError> {
        let w2 = omega * omega;
        for line in self.lines() {
            if (omega.abs() - line.delta_e).abs() < LINE_POLE_GUARD {
                return Err(AlphaError::ResonanceProximity {
                    omega,
                    pole: line.delta_e,
                });
            }
        }
        Ok(neumaier_sum(
            self.lines()
                .iter()
                .map(|l| l.f / (l.delta_e * l.delta_e - w2)),
        ))
    }

    fn resonance_poles(&self) -> Vec<ResonancePole> {
        self.lines()
            .iter()
            .map(|l| ResonancePole {
                omega_n: l.delta_e,
                weight: 0.5 * std::f64::consts::PI * l.f / l.delta_e,
            })
            .collect()
    }

    fn method(&self) -> AlphaMethod {
        AlphaMethod::LineSum
    }
}

/// Re α(ω) from any source.
pub fn re_alpha(source: &dyn AlphaSource, omega: f64) -> Result<f64, AlphaError> {
    source.re_alpha(omega)
}

/// Resonance poles of any source.
pub fn resonance_poles(source: &dyn AlphaSource) -> Vec<ResonancePole> {
    source.resonance_poles()
}

/// One-loop imaginary part (2α³_QED/3)·ω³·α², atomic units. Odd in ω by the
/// explicit ω·ω·ω factorization (exact under IEEE negation).
pub fn im_alpha_oneloop(omega: f64, alpha_value: f64) -> f64 {
    let pref = units::oneloop_prefactor(units::UnitSystem::Atomic);
    pref * (omega * omega * omega) * (alpha_value * alpha_value)
}

/// Lorentzian-broadened resonant imaginary part,
/// Σ_n w_n·[L_γ(ω−ω_n) − L_γ(ω+ω_n)]. A visualization device only; the
/// unbroadened resonant part is distributional.
pub fn im_alpha_resonant_broadened(poles: &[ResonancePole], omega: f64, gamma: f64) -> f64 {
    if gamma <= 0.0 {
        return 0.0;
    }
    let lorentz = |x: f64| (gamma / std::f64::consts::PI) / (x * x + gamma * gamma);
    neumaier_sum(
        poles
            .iter()
            .map(|p| p.weight * (lorentz(omega - p.omega_n) - lorentz(omega + p.omega_n))),
    )
}

/// Total imaginary-part assembly: one-loop term always, resonant term as a
/// broadened density when `broadening` > 0.
pub fn im_alpha_total(
    source: &dyn AlphaSource,
    omega: f64,
    broadening: f64,
) -> Result<PolarizabilityResult, AlphaError> {
    let re = source.re_alpha(omega)?;
    let oneloop = im_alpha_oneloop(omega, re);
    let broadened = if broadening > 0.0 {
        im_alpha_resonant_broadened(&source.resonance_poles(), omega, broadening)
    } else {
        0.0
    };
    Ok(PolarizabilityResult {
        omega,
        re_alpha: re,
        im_alpha_oneloop: oneloop,
        im_alpha_resonant_broadened: broadened,
        method: source.method(),
        gauge: Gauge::Length,
    })
}

/// Radiation-damped resummation α_TL/(1 − i·(2α³_QED/3)·ω³·α_TL).
pub fn damped_alpha(alpha_tl: f64, omega: f64) -> Complex64 {
    let pref = units::oneloop_prefactor(units::UnitSystem::Atomic);
    let x = pref * (omega * omega * omega) * alpha_tl;
    Complex64::new(alpha_tl, 0.0) / Complex64::new(1.0, -x)
}

/// Result of the width-replacement heuristic, flagged because the
/// prescription is not gauge invariant (and its imaginary part is even in ω,
/// violating the causal odd-parity requirement).
#[derive(Debug, Clone, Copy)]
pub struct NaiveGammaAlpha {
    pub value: Complex64,
}

impl NaiveGammaAlpha {
    pub const FLAG: &'static str = "non-gauge-invariant heuristic";
}

/// The naive replacement E_n → E_n − iΓ_n/2 in both ± propagator
/// denominators:
///
///   α_Γ(ω) = Σ_n (f_n/2Δ_n)·[1/(Δ_n − iΓ_n/2 + ω) + 1/(Δ_n − iΓ_n/2 − ω)]
///
/// For comparison only. With all Γ = 0 it reduces to the real line sum; with
/// the physical one-photon widths it reproduces the order of magnitude of the
/// one-loop imaginary part off resonance.
pub fn naive_gamma_alpha(
    model: &SpectrumModel,
    gammas: &[f64],
    omega: f64,
) -> Result<NaiveGammaAlpha, AlphaError> {
    if gammas.len() != model.lines().len() {
        return Err(AlphaError::WidthCountMismatch {
            expected: model.lines().len(),
            got: gammas.len(),
        });
    }
    let mut value = Complex64::new(0.0, 0.0);
    for (line, &gamma) in model.lines().iter().zip(gammas) {
        let coeff = line.f / (2.0 * line.delta_e);
        let z_plus = Complex64::new(line.delta_e + omega, -0.5 * gamma);
        let z_minus = Complex64::new(line.delta_e - omega, -0.5 * gamma);
        value += coeff * (z_plus.inv() + z_minus.inv());
    }
    Ok(NaiveGammaAlpha { value })
}
