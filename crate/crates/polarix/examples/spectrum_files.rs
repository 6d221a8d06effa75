//! Spectrum files: analytic hydrogen lines, grid pseudospectra, and the
//! Thomas–Reiche–Kuhn sum rule as the completeness meter.
//!
//! ```bash
//! cargo run -p polarix --example spectrum_files
//! ```

use polarix::spectrum::write_spectrum;
use polarix::{build_grid, hydrogen_bound_lines, load_spectrum, save_spectrum, trk_sum};

fn main() {
    let bound = hydrogen_bound_lines(20).expect("line list");
    println!("analytic 1s->np lines (first four):");
    for line in bound.lines().iter().take(4) {
        println!(
            "  {}  delta_e = {:.6} Hartree, f = {:.8}",
            line.label, line.delta_e, line.f
        );
    }
    println!(
        "TRK sum over {} bound lines: {:.6}  (the missing ~0.436 lives in the continuum)",
        bound.lines().len(),
        trk_sum(&bound)
    );

    // round-trip through the v1 file format
    let path = std::env::temp_dir().join("polarix-example-spectrum.csv");
    save_spectrum(&bound, &path).expect("write");
    let back = load_spectrum(&path).expect("read");
    assert_eq!(back.lines().len(), bound.lines().len());
    println!();
    println!("wrote and re-read {} (17-significant-digit records):", path.display());
    let mut preview = Vec::new();
    write_spectrum(&bound, &mut preview).unwrap();
    for line in String::from_utf8(preview).unwrap().lines().take(5) {
        println!("  {line}");
    }
    std::fs::remove_file(&path).ok();

    // the pseudospectrum closes the sum rule because it discretizes the
    // continuum as well as the bound states
    println!();
    let sys = build_grid(120.0, 1200).expect("grid build");
    let pseudo = sys.pseudospectrum().expect("eigendecomposition");
    println!(
        "grid pseudospectrum: {} lines, TRK sum = {:.9}",
        pseudo.lines().len(),
        trk_sum(pseudo)
    );
    let first = &pseudo.lines()[0];
    println!(
        "lowest line: delta_e = {:.8} (Bohr 0.375), f = {:.8} (Gordon 0.41619672)",
        first.delta_e, first.f
    );
}
