//! Check every printed Casimir and show which operator ordering, if any,
//! makes it commute with the whole algebra. The fourth-order invariants are
//! also checked with the opposite cross-term sign.

use lieq::casimir;
use lieq::catalog::Catalog;
use lieq::uea::CasimirCheck;
use lieq::LieAlgebra;

fn witness(alg: &LieAlgebra, c: &CasimirCheck) -> String {
    match &c.witness {
        None => "commutes".into(),
        Some(w) => format!("[e, {}] = {}", w.generator, w.residue.display(alg)),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::standard()?;
    for group in ["galilei_central", "poincare", "poincare_trivial_ext", "u1"] {
        let alg = cat.get(group)?;
        println!("{group}");
        for v in casimir::verify_all(&cat, group)? {
            match v.ordering {
                Some(o) => println!("  {:<6} Casimir ({o} ordering): {}", v.label, v.text),
                None => {
                    println!("  {:<6} not a Casimir", v.label);
                    println!("         verbatim:    {}", witness(alg, &v.verbatim));
                    if let Some(s) = &v.symmetrized {
                        println!("         symmetrized: {}", witness(alg, s));
                    }
                }
            }
        }
        for p in casimir::reversed_cross_term(group).unwrap_or_default() {
            let v = casimir::verify(alg, &p)?;
            let ordering = v.ordering.map_or("none".to_string(), |o| o.to_string());
            println!("  {}: Casimir = {}, ordering {ordering}", p.label, v.holds());
        }
    }
    Ok(())
}
