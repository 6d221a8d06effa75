//! Dynamic dipole polarizability of hydrogen-like atoms, with the
//! gauge-invariant imaginary part and the dissipative observables that
//! consume it.
//!
//! The toolkit has two faces for the atom:
//!
//! - [`spectrum`]: discrete excitation lines (energy, oscillator strength) —
//!   the sum-over-states picture, with analytic hydrogen bound lines, file
//!   input/output and sum-rule validation;
//! - [`grid`]: a radial finite-difference realization of the hydrogen
//!   Hamiltonian — the resolvent picture, computing α(ω) by Dalgarno–Lewis
//!   linear solves in both the length and velocity gauges and verifying their
//!   identity numerically.
//!
//! On top of these, [`polarizability`] assembles the imaginary part
//!
//! ```text
//! Im α(ω) = Im α_R(ω) + (2 α³_QED / 3) ω³ [Re α(ω)]²   (atomic units)
//! ```
//!
//! as a resonant delta-line part plus the ω³ one-loop part (odd in ω, as
//! causality requires), together with the radiation-damped resummation and
//! the naive width-replacement heuristic for comparison. [`friction`]
//! evaluates the blackbody friction coefficient η_BB and the non-contact
//! quantum friction coefficient η_QF as thermal integrals over Im α, and
//! [`units`] owns all constants and SI/atomic/natural conversions.
//!
//! Everything computes in Hartree atomic units internally; all types are
//! immutable after construction and safe to share across threads.
//!
//! The `examples/` directory holds one runnable example per capability; the
//! `polarix` binary exposes the same operations as subcommands (`alpha`,
//! `gauge-check`, `friction bb`, `friction qf`, `spectrum export`).

pub mod cli;
pub mod friction;
pub mod grid;
pub mod linalg;
pub mod output;
pub mod polarizability;
pub mod quadrature;
pub mod spectrum;
pub mod units;

pub use friction::{eta_bb, eta_qf, DrudeModel, FrictionReport, SurfaceResponse, ThermalConfig};
pub use grid::{build_grid, GaugeReport, GridSystem};
pub use polarizability::{
    damped_alpha, im_alpha_oneloop, im_alpha_total, naive_gamma_alpha, re_alpha, resonance_poles,
    AlphaError, AlphaMethod, AlphaSource, Gauge, PolarizabilityResult, ResonancePole,
};
pub use spectrum::{
    hydrogen_bound_lines, load_spectrum, save_spectrum, trk_sum, SpectralLine, SpectrumModel,
    SpectrumSource,
};
pub use units::{convert, oneloop_prefactor, Dimension, Quantity, UnitSystem};
