//! Non-contact quantum friction above a Drude surface.
//!
//! η_QF couples Im α(ω) to the surface loss function Im[(ε−1)/(ε+1)] and
//! falls off as the fifth power of the distance. The Drude parameters here
//! are of the order of a metal's (ω_p ≈ 0.3 Hartree ≈ 8 eV).
//!
//! ```bash
//! cargo run -p polarix --example quantum_friction
//! ```

use polarix::friction::{eta_qf, DrudeModel, SurfaceResponse, ThermalConfig};
use polarix::build_grid;

fn main() {
    let sys = build_grid(120.0, 1500).expect("grid build");
    let thermal = ThermalConfig::new(300.0).expect("valid temperature");
    let drude = DrudeModel::new(0.3, 0.01).expect("valid Drude parameters");

    println!("surface loss function (plasmon pole at omega_p/sqrt(2) = {:.4}):", 0.3 / 2f64.sqrt());
    for omega in [0.05, 0.15, 0.212, 0.3] {
        println!("  S({omega:.3}) = {:.6e}", drude.surface_loss(omega));
    }

    println!();
    println!("{:>12} {:>16} {:>14}", "z (m)", "eta_QF (kg/s)", "z^5 * eta");
    for z in [5e-9, 1e-8, 2e-8, 4e-8] {
        let report = eta_qf(&sys, &thermal, z, &drude).expect("quadrature");
        println!(
            "{z:>12.1e} {:>16.6e} {:>14.6e}",
            report.eta,
            report.eta * z.powi(5)
        );
    }
    println!("(constant z^5*eta column = exact Z^-5 law; halving z costs a factor 32)");

    println!();
    let lossless = DrudeModel::new(0.3, 0.0).unwrap();
    let report = eta_qf(&sys, &thermal, 1e-8, &lossless).expect("quadrature");
    println!(
        "lossless surface (gamma = 0): eta_smooth = {:.1e} kg/s (off-plasmon loss vanishes)",
        report.eta_smooth
    );
}
