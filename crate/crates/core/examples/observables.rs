//! Casimirs as definite-valued observables, and labels for states of
//! several free particles.

use lieq::mhi;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for group in mhi::GROUPS {
        let d = mhi::actual_valued_observables(group)?;
        println!("{group}");
        for o in &d.observables {
            println!(
                "  {:<9} {:<6} {:<16} eigenvalue {:<20} Casimir: {}",
                o.operator,
                o.casimir,
                o.quantity.to_string(),
                o.eigenvalue.to_string(),
                o.is_casimir()
            );
        }
    }
    for n in 1..=3 {
        let l = mhi::n_particle_labels(n)?;
        println!("n = {n}: mass {} = {}, spin {}, charge {}", l.mass, l.mass_value, l.spin, l.charge);
    }
    let combined = mhi::n_particle_labels(1)?.combine(&mhi::n_particle_labels(2)?);
    println!("1 + 2 particles: N = {}", combined.number_value);
    Ok(())
}
