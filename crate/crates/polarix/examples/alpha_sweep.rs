//! Dynamic polarizability sweep below the first resonance, in plot-ready CSV.
//!
//! Compares the grid (Dalgarno–Lewis solve) against the sum over the
//! analytic bound lines: the bound lines alone miss the continuum share of
//! the response, visibly so as ω grows.
//!
//! ```bash
//! cargo run -p polarix --example alpha_sweep > alpha_sweep.csv
//! ```

use polarix::output::fmt_f64;
use polarix::polarizability::AlphaSource;
use polarix::{build_grid, hydrogen_bound_lines};

fn main() {
    let sys = build_grid(200.0, 4000).expect("grid build");
    let bound = hydrogen_bound_lines(20).expect("line list");

    println!("omega_hartree,alpha_grid_au,alpha_bound_lines_au");
    let n = 60;
    for i in 0..=n {
        let omega = 0.36 * i as f64 / n as f64;
        let from_grid = sys.alpha_length(omega).expect("off resonance").re;
        let from_lines = bound.re_alpha(omega).expect("off resonance");
        println!(
            "{},{},{}",
            fmt_f64(omega),
            fmt_f64(from_grid),
            fmt_f64(from_lines)
        );
    }
}
