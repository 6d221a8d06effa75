//! Physical constants table and unit-conversion tour.
//!
//! Prints the frozen CODATA-2018 constants as the auditable JSON document and
//! walks the polarizability and one-loop prefactor through the three unit
//! systems.
//!
//! ```bash
//! cargo run -p polarix --example constants_table
//! cargo run -p polarix --example constants_table -- --json-only > constants.json
//! ```

use polarix::units::{
    constants_json, convert, oneloop_prefactor, Dimension, Quantity, UnitSystem,
};

fn main() {
    if std::env::args().any(|a| a == "--json-only") {
        println!("{}", constants_json());
        return;
    }

    println!("{}", constants_json());
    println!();

    let alpha_au = Quantity::new(4.5, Dimension::Polarizability, UnitSystem::Atomic);
    let alpha_nu = convert(alpha_au, UnitSystem::Natural).unwrap();
    let alpha_si = convert(alpha_au, UnitSystem::Si).unwrap();
    println!("hydrogen static polarizability 9/2 a.u.:");
    println!("  natural units (4 pi / alpha^3 scaling): {:.6e}", alpha_nu.value);
    println!("  SI (C^2 m^2 / J):                       {:.6e}", alpha_si.value);

    println!();
    println!("one-loop prefactor multiplying w^3 alpha^2:");
    println!("  atomic:  {:.12e}   (2 alpha_QED^3 / 3)", oneloop_prefactor(UnitSystem::Atomic));
    println!("  natural: {:.12e}   (1 / 6 pi)", oneloop_prefactor(UnitSystem::Natural));
    println!("  SI:      {:.12e}   (1 / 6 pi eps0 c^3)", oneloop_prefactor(UnitSystem::Si));

    let omega = Quantity::new(1.0, Dimension::Frequency, UnitSystem::Atomic);
    println!();
    println!("1 Hartree of driving frequency:");
    println!(
        "  SI:      {:.6e} rad/s",
        convert(omega, UnitSystem::Si).unwrap().value
    );
    println!(
        "  natural: {:.6e} electron masses (alpha_QED^2)",
        convert(omega, UnitSystem::Natural).unwrap().value
    );
}
