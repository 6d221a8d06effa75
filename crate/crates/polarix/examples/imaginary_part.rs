//! The imaginary part of α(ω): resonant delta lines plus the ω³ one-loop
//! term, the radiation-damped resummation, and the naive width-replacement
//! heuristic side by side.
//!
//! ```bash
//! cargo run -p polarix --example imaginary_part
//! ```

use polarix::polarizability::{
    damped_alpha, im_alpha_oneloop, naive_gamma_alpha, AlphaSource, NaiveGammaAlpha,
};
use polarix::units::ALPHA_QED;
use polarix::{build_grid, hydrogen_bound_lines, im_alpha_total};

fn main() {
    let model = hydrogen_bound_lines(8).expect("line list");

    println!("resonant delta lines of Im alpha (weights (pi/2) f_n / delta_n):");
    for pole in model.resonance_poles().iter().take(4) {
        println!(
            "  pole at {:.6} Hartree, weight {:.6} a.u.",
            pole.omega_n, pole.weight
        );
    }
    println!("  ... (odd mirrors at -omega_n implicit)");

    let sys = build_grid(200.0, 4000).expect("grid build");
    let omega = 0.1;
    let re = sys.alpha_length(omega).unwrap().re;
    let oneloop = im_alpha_oneloop(omega, re);
    println!();
    println!("off resonance at omega = {omega} Hartree:");
    println!("  Re alpha               = {re:.9} a.u.");
    println!("  Im alpha (one-loop)    = {oneloop:.6e} a.u.");
    println!("  Im/Re                  = {:.3e}  (one-loop radiative scale, ~alpha_QED^3)", oneloop / re);

    let damped = damped_alpha(re, omega);
    println!();
    println!("radiation-damped resummation alpha_TL/(1 - i w^3 alpha_TL/(6 pi eps0 c^3)):");
    println!("  damped alpha           = {:.9} + {:.6e} i", damped.re, damped.im);
    println!("  Im difference to one-loop: {:.3e}", (damped.im - oneloop).abs());

    // naive width replacement with the 2p one-photon decay width
    let line = &model.lines()[0];
    let gamma_2p = 2.0 * line.delta_e * line.delta_e * ALPHA_QED.powi(3) * line.f / 3.0;
    let mut gammas = vec![0.0; model.lines().len()];
    gammas[0] = gamma_2p;
    let naive = naive_gamma_alpha(&model, &gammas, omega).unwrap();
    println!();
    println!("naive replacement E_n -> E_n - i Gamma_n/2 ({}):", NaiveGammaAlpha::FLAG);
    println!("  Gamma(2p)              = {gamma_2p:.6e} Hartree");
    println!("  Im alpha (naive)       = {:.6e} a.u.", naive.value.im);
    println!("  naive / one-loop       = {:.2}  (right order of magnitude, wrong parity)", naive.value.im / oneloop);

    // broadened resonant density for plotting (sample points straddle the
    // line; the exact line position is refused by the principal-value guard)
    let gamma = 1e-4;
    println!();
    println!("Lorentzian-broadened resonant density near the first line (gamma = {gamma}):");
    for w in [0.3746, 0.3748, 0.37495, 0.37505, 0.3752, 0.3754] {
        let r = im_alpha_total(&model, w, gamma).unwrap();
        println!(
            "  omega = {w:.5}: Im_res = {:.4e}, Im_oneloop = {:.4e}",
            r.im_alpha_resonant_broadened, r.im_alpha_oneloop
        );
    }
}
