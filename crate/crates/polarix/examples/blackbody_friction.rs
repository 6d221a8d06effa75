//! Blackbody friction on ground-state hydrogen.
//!
//! η_BB integrates ω⁵·Im α(ω) against the thermal sinh⁻² weight; the smooth
//! one-loop part dominates at laboratory temperatures because every resonant
//! line is frozen out by the weight (e^{-395} for the first line at 300 K).
//!
//! ```bash
//! cargo run -p polarix --example blackbody_friction
//! ```

use polarix::friction::{eta_bb, ThermalConfig};
use polarix::build_grid;

fn main() {
    // A moderate grid keeps the sweep quick; the polarizability entering the
    // thermal integral is fully converged at these temperatures.
    let sys = build_grid(120.0, 1500).expect("grid build");

    println!("{:>8} {:>16} {:>16} {:>16} {:>8}", "T (K)", "eta (kg/s)", "smooth", "resonant", "evals");
    for t in [4.0, 77.0, 300.0, 1000.0] {
        let thermal = ThermalConfig::new(t).expect("valid temperature");
        let report = eta_bb(&sys, &thermal).expect("quadrature");
        println!(
            "{t:>8} {:>16.6e} {:>16.6e} {:>16.6e} {:>8}",
            report.eta, report.eta_smooth, report.eta_resonant, report.n_evaluations
        );
    }

    println!();
    let thermal = ThermalConfig::new(300.0).unwrap();
    let report = eta_bb(&sys, &thermal).unwrap();
    println!(
        "at 300 K: eta = {:.4e} kg/s, quadrature error estimate {:.1e} (relative)",
        report.eta, report.quadrature_error_estimate
    );
    println!("drag time-scale m_H/eta ~ {:.2e} s", 1.67e-27 / report.eta);

    // Past a few thousand kelvin the thermal weight reaches the first
    // resonance and the off-resonant one-loop form stops being integrable;
    // the adaptive quadrature then refuses with a diagnostic instead of
    // returning a tolerance-dependent number.
    println!();
    let hot = ThermalConfig::new(3000.0).unwrap();
    match eta_bb(&sys, &hot) {
        Ok(r) => println!("at 3000 K: eta = {:.4e} kg/s", r.eta),
        Err(e) => println!("at 3000 K the thermal window reaches the resonances: {e}"),
    }
}
