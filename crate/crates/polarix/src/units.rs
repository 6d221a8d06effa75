//! Physical constants and unit conversions between SI, atomic and natural units.
//!
//! All other modules work in Hartree atomic units (ℏ = m = e = 1, energies in
//! Hartree, lengths in Bohr radii) and convert at this boundary only.
//!
//! The primary constants below are the CODATA-2018 recommended values. Every
//! derived constant is computed from the primaries rather than quoted
//! independently, so that conversion-chain identities (e.g. the units
//! triangle, or reproducing the natural-unit one-loop prefactor 1/6π from the
//! atomic-unit one) hold to machine precision. The derived values agree with
//! the CODATA listings to all published digits.

use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

/// Tag for the frozen constants set.
pub const CONSTANTS_VERSION: &str = "CODATA-2018";

// ── Primary constants (CODATA-2018) ─────────────────────────────────

/// Fine-structure constant α.
pub const ALPHA_QED: f64 = 7.297_352_569_3e-3;
/// Speed of light, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// Planck constant, J·s (exact).
pub const PLANCK: f64 = 6.626_070_15e-34;
/// Elementary charge, C (exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Electron mass, kg.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;
/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

// ── Derived constants ────────────────────────────────────────────────

/// Reduced Planck constant h/2π, J·s.
pub const HBAR: f64 = PLANCK / (2.0 * PI);

/// Vacuum permittivity ε₀ = e²/(4π α ℏ c), F/m.
pub const VACUUM_PERMITTIVITY: f64 =
    ELEMENTARY_CHARGE * ELEMENTARY_CHARGE / (4.0 * PI * ALPHA_QED * HBAR * SPEED_OF_LIGHT);
/// Bohr radius a₀ = ℏ/(α m c), m.
pub const BOHR_RADIUS: f64 = HBAR / (ALPHA_QED * ELECTRON_MASS * SPEED_OF_LIGHT);
/// Hartree energy E_h = α² m c², J.
pub const HARTREE: f64 =
    ALPHA_QED * ALPHA_QED * ELECTRON_MASS * SPEED_OF_LIGHT * SPEED_OF_LIGHT;
/// Atomic unit of time ℏ/E_h, s.
pub const ATOMIC_TIME: f64 = HBAR / HARTREE;
/// Atomic unit of polarizability e²a₀²/E_h, C²·m²/J.
pub const ATOMIC_POLARIZABILITY: f64 =
    ELEMENTARY_CHARGE * ELEMENTARY_CHARGE * BOHR_RADIUS * BOHR_RADIUS / HARTREE;
/// Atomic unit of the friction coefficient m_e/t_au, kg/s.
pub const ATOMIC_FRICTION: f64 = ELECTRON_MASS / ATOMIC_TIME;
/// Atomic unit of temperature E_h/k_B, K.
pub const ATOMIC_TEMPERATURE: f64 = HARTREE / BOLTZMANN;
/// Electron rest energy m c², J.
pub const ELECTRON_REST_ENERGY: f64 = ELECTRON_MASS * SPEED_OF_LIGHT * SPEED_OF_LIGHT;
/// Reduced Compton wavelength ℏ/(m c), m — the natural unit of length.
pub const COMPTON_LENGTH: f64 = HBAR / (ELECTRON_MASS * SPEED_OF_LIGHT);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UnitsError {
    #[error("conversion of {dimension:?} to {system:?} is not supported")]
    Unsupported {
        dimension: Dimension,
        system: UnitSystem,
    },
}

/// Physical dimension of a [`Quantity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Dimension {
    Polarizability,
    Frequency,
    Energy,
    FrictionCoefficient,
    Length,
    Temperature,
}

/// Unit system of a [`Quantity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnitSystem {
    /// SI mksA.
    Si,
    /// Hartree atomic units, ℏ = m = e = 1.
    Atomic,
    /// Natural units, ℏ = c = ε₀ = 1, scales set by the electron mass.
    Natural,
}

/// A number together with its dimension and unit system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quantity {
    pub value: f64,
    pub dimension: Dimension,
    pub system: UnitSystem,
}

impl Quantity {
    pub fn new(value: f64, dimension: Dimension, system: UnitSystem) -> Self {
        Self {
            value,
            dimension,
            system,
        }
    }
}

/// SI value of one atomic unit of `dim`.
fn atomic_unit_in_si(dim: Dimension) -> f64 {
    match dim {
        Dimension::Polarizability => ATOMIC_POLARIZABILITY,
        Dimension::Frequency => HARTREE / HBAR,
        Dimension::Energy => HARTREE,
        Dimension::FrictionCoefficient => ATOMIC_FRICTION,
        Dimension::Length => BOHR_RADIUS,
        Dimension::Temperature => ATOMIC_TEMPERATURE,
    }
}

/// Natural-unit (reduced) value of a quantity whose atomic-unit value is 1.
///
/// Frequencies, energies and temperatures are measured in units of the
/// electron rest energy, lengths in reduced Compton wavelengths, the
/// polarizability per e² = 4πα; a friction coefficient (mass/time = mass² at
/// ℏ = c = 1) scales like an energy.
fn atomic_unit_in_natural(dim: Dimension) -> f64 {
    let a2 = ALPHA_QED * ALPHA_QED;
    match dim {
        Dimension::Polarizability => 4.0 * PI / (ALPHA_QED * ALPHA_QED * ALPHA_QED),
        Dimension::Frequency | Dimension::Energy | Dimension::Temperature => a2,
        Dimension::FrictionCoefficient => a2,
        Dimension::Length => 1.0 / ALPHA_QED,
    }
}

/// Convert `q` to the target unit system.
///
/// Conversions route through atomic units; every (dimension, system) pair
/// above is supported and bijective.
pub fn convert(q: Quantity, target: UnitSystem) -> Result<Quantity, UnitsError> {
    let in_atomic = match q.system {
        UnitSystem::Atomic => q.value,
        UnitSystem::Si => q.value / atomic_unit_in_si(q.dimension),
        UnitSystem::Natural => q.value / atomic_unit_in_natural(q.dimension),
    };
    let value = match target {
        UnitSystem::Atomic => in_atomic,
        UnitSystem::Si => in_atomic * atomic_unit_in_si(q.dimension),
        UnitSystem::Natural => in_atomic * atomic_unit_in_natural(q.dimension),
    };
    Ok(Quantity::new(value, q.dimension, target))
}

/// The scalar multiplying ω³·α(ω)² in the one-loop imaginary part, in the
/// given unit system: 2α³_QED/3 (atomic), 1/6π (natural), 1/(6πε₀c³) (SI).
pub fn oneloop_prefactor(system: UnitSystem) -> f64 {
    match system {
        UnitSystem::Atomic => 2.0 * ALPHA_QED * ALPHA_QED * ALPHA_QED / 3.0,
        UnitSystem::Natural => 1.0 / (6.0 * PI),
        UnitSystem::Si => {
            1.0 / (6.0 * PI * VACUUM_PERMITTIVITY * SPEED_OF_LIGHT.powi(3))
        }
    }
}

/// Boltzmann factor β = 1/(k_B T) in atomic units (1/Hartree) for T in kelvin.
pub fn beta_atomic(temperature_k: f64) -> f64 {
    ATOMIC_TEMPERATURE / temperature_k
}

#[derive(Serialize)]
struct ConstantsTable {
    version: &'static str,
    primary: PrimaryConstants,
    derived: DerivedConstants,
}

#[derive(Serialize)]
struct PrimaryConstants {
    alpha_qed: f64,
    speed_of_light_m_per_s: f64,
    planck_j_s: f64,
    elementary_charge_c: f64,
    electron_mass_kg: f64,
    boltzmann_j_per_k: f64,
}

#[derive(Serialize)]
struct DerivedConstants {
    hbar_j_s: f64,
    vacuum_permittivity_f_per_m: f64,
    bohr_radius_m: f64,
    hartree_j: f64,
    atomic_time_s: f64,
    atomic_polarizability_si: f64,
    atomic_friction_kg_per_s: f64,
    atomic_temperature_k: f64,
}

/// The constants table as a documented JSON string, for auditing.
pub fn constants_json() -> String {
    let table = ConstantsTable {
        version: CONSTANTS_VERSION,
        primary: PrimaryConstants {
            alpha_qed: ALPHA_QED,
            speed_of_light_m_per_s: SPEED_OF_LIGHT,
            planck_j_s: PLANCK,
            elementary_charge_c: ELEMENTARY_CHARGE,
            electron_mass_kg: ELECTRON_MASS,
            boltzmann_j_per_k: BOLTZMANN,
        },
        derived: DerivedConstants {
            hbar_j_s: HBAR,
            vacuum_permittivity_f_per_m: VACUUM_PERMITTIVITY,
            bohr_radius_m: BOHR_RADIUS,
            hartree_j: HARTREE,
            atomic_time_s: ATOMIC_TIME,
            atomic_polarizability_si: ATOMIC_POLARIZABILITY,
            atomic_friction_kg_per_s: ATOMIC_FRICTION,
            atomic_temperature_k: ATOMIC_TEMPERATURE,
        },
    };
    serde_json::to_string_pretty(&table).expect("constants table serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL_DIMENSIONS: [Dimension; 6] = [
        Dimension::Polarizability,
        Dimension::Frequency,
        Dimension::Energy,
        Dimension::FrictionCoefficient,
        Dimension::Length,
        Dimension::Temperature,
    ];

    #[test]
    fn derived_constants_match_codata_listings() {
        // CODATA-2018 published values, to their quoted digits.
        assert!((HBAR - 1.054_571_817e-34).abs() < 1e-43);
        assert!((VACUUM_PERMITTIVITY - 8.854_187_812_8e-12).abs() < 1e-21);
        assert!((BOHR_RADIUS - 5.291_772_109_03e-11).abs() < 1e-21);
        assert!((HARTREE - 4.359_744_722_207_1e-18).abs() < 1e-28);
        assert!((ATOMIC_TIME - 2.418_884_326_585_7e-17).abs() < 1e-27);
    }

    #[test]
    fn polarizability_to_natural_units() {
        let q = Quantity::new(4.5, Dimension::Polarizability, UnitSystem::Atomic);
        let nu = convert(q, UnitSystem::Natural).unwrap();
        // 4.5 · 4π/α³ ≈ 1.455e8
        assert!((nu.value / 1.455e8 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn frequency_to_natural_units() {
        let q = Quantity::new(1.0, Dimension::Frequency, UnitSystem::Atomic);
        let nu = convert(q, UnitSystem::Natural).unwrap();
        assert_eq!(nu.value, ALPHA_QED * ALPHA_QED);
    }

    #[test]
    fn round_trips_are_tight() {
        for dim in ALL_DIMENSIONS {
            let q = Quantity::new(1.2345678912345, dim, UnitSystem::Si);
            let back = convert(
                convert(
                    convert(q, UnitSystem::Atomic).unwrap(),
                    UnitSystem::Natural,
                )
                .unwrap(),
                UnitSystem::Si,
            )
            .unwrap();
            assert!(
                (back.value / q.value - 1.0).abs() < 1e-14,
                "{dim:?}: {} vs {}",
                back.value,
                q.value
            );
        }
    }

    #[test]
    fn oneloop_prefactor_atomic_value() {
        let p = oneloop_prefactor(UnitSystem::Atomic);
        assert!((p / 2.591e-7 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn oneloop_prefactor_natural_is_one_over_six_pi() {
        assert_eq!(oneloop_prefactor(UnitSystem::Natural), 1.0 / (6.0 * PI));
    }

    #[test]
    fn oneloop_prefactor_chain_consistency() {
        // Converting Im α = pref·ω³·α² term by term from a.u. must reproduce
        // the n.u. and SI prefactors.
        let pref_au = oneloop_prefactor(UnitSystem::Atomic);
        let im_conv = atomic_unit_in_natural(Dimension::Polarizability);
        let om_conv = atomic_unit_in_natural(Dimension::Frequency);
        let chained = pref_au * im_conv / (om_conv.powi(3) * im_conv * im_conv);
        assert!(
            (chained / oneloop_prefactor(UnitSystem::Natural) - 1.0).abs() < 1e-12,
            "natural-unit chain: {chained}"
        );

        let im_si = atomic_unit_in_si(Dimension::Polarizability);
        let om_si = atomic_unit_in_si(Dimension::Frequency);
        let chained_si = pref_au * im_si / (om_si.powi(3) * im_si * im_si);
        assert!(
            (chained_si / oneloop_prefactor(UnitSystem::Si) - 1.0).abs() < 1e-12,
            "SI chain: {chained_si}"
        );
    }

    #[test]
    fn beta_at_room_temperature() {
        let b = beta_atomic(300.0);
        assert!((b / 1052.58 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn constants_json_parses_and_names_the_primaries() {
        let s = constants_json();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["version"], "CODATA-2018");
        assert_eq!(v["primary"]["alpha_qed"].as_f64().unwrap(), ALPHA_QED);
        assert_eq!(v["derived"]["bohr_radius_m"].as_f64().unwrap(), BOHR_RADIUS);
    }

    #[test]
    fn constants_defined_in_exactly_one_place() {
        // No other source file may restate the primary constant digits.
        let src_dir = concat!(env!("CARGO_MANIFEST_DIR"), "/src");
        let needles = [
            "7.297_352_569",
            "7.2973525693",
            "6.626_070_15",
            "6.62607015",
            "1.380_649e-23",
            "9.109_383_701",
        ];
        let mut offenders = Vec::new();
        scan(std::path::Path::new(src_dir), &needles, &mut offenders);
        assert_eq!(offenders, Vec::<String>::new());

        fn scan(dir: &std::path::Path, needles: &[&str], out: &mut Vec<String>) {
            for entry in std::fs::read_dir(dir).unwrap() {
                let path = entry.unwrap().path();
                if path.is_dir() {
                    scan(&path, needles, out);
                } else if path.extension().is_some_and(|e| e == "rs")
                    && !path.ends_with("units.rs")
                {
                    let text = std::fs::read_to_string(&path).unwrap();
                    for n in needles {
                        if text.contains(n) {
                            out.push(format!("{}: {n}", path.display()));
                        }
                    }
                }
            }
        }
    }
}
