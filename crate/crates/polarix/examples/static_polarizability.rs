//! Static dipole polarizability of hydrogen from the radial grid.
//!
//! Builds the finite-difference grid system, solves the Dalgarno–Lewis
//! linear system at ω = 0 and compares with the exact value 9/2, then shows
//! the convergence under grid refinement.
//!
//! ```bash
//! cargo run -p polarix --example static_polarizability
//! ```

use polarix::build_grid;

fn main() {
    let sys = build_grid(200.0, 4000).expect("grid build");
    println!("reference grid: r_max = {} a0, n = {}", sys.r_max(), sys.n_points());
    println!("ground energy   E  = {:.12} Hartree (exact -0.5)", sys.ground_energy());
    println!("<r>                = {:.12} a0      (exact 1.5)", sys.r_expectation());
    println!("<r^2>              = {:.12} a0^2    (exact 3.0)", sys.r2_expectation());

    let alpha = sys.alpha_length(0.0).expect("off resonance").re;
    println!();
    println!("alpha(0)           = {alpha:.12} a.u.  (exact 9/2)");
    println!("relative error     = {:.3e}", (alpha - 4.5).abs() / 4.5);

    println!();
    println!("convergence under refinement (fourth-order stencil):");
    println!("{:>8} {:>14} {:>14}", "n", "E + 1/2", "alpha - 9/2");
    for n in [500, 1000, 2000, 4000] {
        let sys = build_grid(200.0, n).unwrap();
        let alpha = sys.alpha_length(0.0).unwrap().re;
        println!(
            "{n:>8} {:>14.3e} {:>14.3e}",
            sys.ground_energy() + 0.5,
            alpha - 4.5
        );
    }
}
