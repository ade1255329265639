//! Walk the built-in algebras: validate each, print a few brackets, and
//! build the `Hb = H - M` basis by hand.

use lieq::catalog::{self, Catalog};
use lieq::{BasisChange, Scalar};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::standard()?;
    for name in cat.names() {
        let alg = cat.get(name)?;
        let verdict = if alg.validate().is_empty() { "valid" } else { "INVALID" };
        println!("{name:<24} dim {:>2}  {verdict}", alg.dim());
    }

    let g = cat.get("galilei_central")?;
    println!("\n{}:", g.name());
    for (a, b) in [("KGx", "Px"), ("KGx", "H"), ("Jx", "KGy"), ("KGx", "KGy")] {
        println!("  [{a}, {b}] = {}", g.bracket_named(a, b)?.display(g));
    }

    let ext = catalog::poincare_trivial_ext_h()?;
    let change = BasisChange::redefine(&ext, "H", "Hb", &[("H", Scalar::one()), ("M", Scalar::integer(-1))])?;
    let shifted = ext.change_basis(&change)?;
    println!("\nafter Hb = H - M:");
    println!("  [KPx, Px] = {}", shifted.bracket_named("KPx", "Px")?.display(&shifted));
    println!("  [KPx, Hb] = {}", shifted.bracket_named("KPx", "Hb")?.display(&shifted));
    Ok(())
}
