//! Define an algebra in a JSON file, validate it, check a Casimir, and
//! export a catalog entry in the same format.

use std::path::Path;

use lieq::casimir::{self, Printed};
use lieq::catalog;
use lieq::io::{export_algebra, load_algebra, parse_algebra};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/su2.json");
    let su2 = load_algebra(&path)?;
    println!("{} valid: {}", su2.name(), su2.validate().is_empty());
    let j2 = Printed { label: "J^2".into(), text: "Jx^2 + Jy^2 + Jz^2".into() };
    println!("J^2 is a Casimir: {}", casimir::verify(&su2, &j2)?.holds());

    let broken = parse_algebra(
        r#"{"name": "broken", "generators": ["A", "B", "C"], "brackets": [
            {"a": "A", "b": "B", "result": [{"gen": "A", "coeff": "1"}]},
            {"a": "A", "b": "C", "result": [{"gen": "A", "coeff": "1"}]},
            {"a": "B", "b": "C", "result": [{"gen": "B", "coeff": "1"}]}]}"#,
    )?;
    println!("broken:\n{}", broken.validate());

    print!("{}", export_algebra(&catalog::u1()?));
    Ok(())
}
