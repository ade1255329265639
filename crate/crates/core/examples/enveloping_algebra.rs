//! Normal forms, commutators and the expression parser in the enveloping
//! algebra of the centrally extended Galilei algebra.

use lieq::catalog;
use lieq::expr::{parse_expression, weyl_symmetrize};
use lieq::Uea;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let alg = catalog::galilei_central()?;
    let uea = Uea::new(&alg);
    let (kx, px) = (uea.generator("KGx")?, uea.generator("Px")?);

    // Words are kept in PBW order H, P, J, KG, M.
    let kp = uea.product(&kx, &px)?;
    println!("KGx*Px           = {}", kp.display(&alg));
    println!("[KGx, Px]        = {}", uea.commutator(&kx, &px)?.display(&alg));

    let e = parse_expression("(KGx + Px)^2 - 2*M*H", &alg)?;
    println!("(KGx + Px)^2 - 2*M*H = {}", e.display(&alg));

    let printed = e.display(&alg).to_string();
    assert_eq!(parse_expression(&printed, &alg)?, e);
    println!("round trip through the printer: ok");

    // Weyl ordering averages every word over the orders of its letters.
    let free = kx.concat(&px);
    println!("Weyl(KGx*Px)     = {}", uea.normal_form(&weyl_symmetrize(&free)?)?.display(&alg));
    Ok(())
}
