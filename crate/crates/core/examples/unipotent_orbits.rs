//! Orbit parameters, the Lusztig map and its section, codimensions.
use weylbraid::orbits::{codim, enumerate_orbits, lusztig_phi, lusztig_psi, Characteristic, Component, Setting};

fn main() -> weylbraid::Result<()> {
    let s = Setting::parse("C3", Characteristic::Two, Component::G)?;
    println!("C3, char 2: {} orbits", enumerate_orbits(&s).len());
    for o in enumerate_orbits(&s) {
        let psi = lusztig_psi(&s, &o)?;
        println!("  {:<22} codim {:>2}  Ψ = {}", o.to_string(), codim(&s, &o)?, psi);
    }

    let t = Setting::parse("2A3", Characteristic::Two, Component::D)?;
    let td = t.weyl_datum()?;
    println!("\n2A3, outer component, char 2:");
    for cp in td.enumerate_classes()? {
        println!("  Φ({}) = {}", cp, lusztig_phi(&t, &cp)?);
    }
    Ok(())
}
