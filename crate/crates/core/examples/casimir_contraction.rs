//! Rescale the extended Poincare Casimirs, find the power of eps that
//! gives a finite limit, and compare with the Galilei invariants.

use lieq::casimir;
use lieq::contraction::{conceptual_limit_check, contract_casimir, Pipeline, Power};
use lieq::expr::Ordering;
use lieq::Uea;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pipe = Pipeline::speed_space()?;
    let contracted = Uea::new(&pipe.contracted);
    for label in ["C1^PE", "C2^PE", "C4^PE"] {
        let printed = casimir::printed_entry("poincare_trivial_ext", label)?;
        let e = casimir::element(&pipe.shifted, &printed, Ordering::Symmetrized)?;
        let c = contract_casimir(&pipe.shifted, &e, &pipe.map, Power::Auto)?;
        let is_casimir = contracted.is_casimir(&c.element)?.holds();
        println!("{label}: power {}, Casimir after contraction: {is_casimir}", c.power);
        println!("  {}", c.element.display(&pipe.contracted));
    }

    match contract_casimir(
        &pipe.shifted,
        &casimir::element(
            &pipe.shifted,
            &casimir::printed_entry("poincare_trivial_ext", "C2^PE")?,
            Ordering::Verbatim,
        )?,
        &pipe.map,
        Power::Fixed(2),
    ) {
        Err(e) => println!("C2^PE at power 2: {e}"),
        Ok(c) => println!("C2^PE at power 2: {}", c.element.display(&pipe.contracted)),
    }

    for line in conceptual_limit_check(Ordering::Symmetrized)? {
        println!("{}: {}", line.name, if line.equal { "holds" } else { "fails" });
    }
    Ok(())
}
