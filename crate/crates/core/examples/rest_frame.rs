//! Evaluate Casimirs on a particle at rest: momenta vanish and the central
//! and energy generators take their eigenvalues.

use lieq::casimir;
use lieq::catalog::Catalog;
use lieq::expr::Ordering;
use lieq::{Scalar, Uea};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cat = Catalog::standard()?;
    let cases = [
        ("poincare", "C2^P", vec![("H", Scalar::symbol("m0"))]),
        ("poincare", "C4^P", vec![("H", Scalar::symbol("m0"))]),
        ("galilei_central", "C2^G", vec![("M", Scalar::symbol("m")), ("H", Scalar::symbol("w"))]),
        ("galilei_central", "C4^G", vec![("M", Scalar::symbol("m"))]),
    ];
    for (group, label, values) in cases {
        let alg = cat.get(group)?;
        let e = casimir::element(alg, &casimir::printed_entry(group, label)?, Ordering::Verbatim)?;
        let at_rest = Uea::new(alg).substitute(&e, &casimir::rest_frame(alg, &values)?)?;
        println!("{label:<5} at rest = {}", at_rest.display(alg));
    }
    Ok(())
}
