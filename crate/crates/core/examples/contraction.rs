//! Inonu-Wigner contraction of the trivially extended Poincare algebra to
//! the centrally extended Galilei algebra, step by step.

use lieq::catalog;
use lieq::contraction::{contract, tables_equal, ContractionError, Pipeline, RescalingMap};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pipe = Pipeline::speed_space()?;
    println!("exponents:");
    for (g, k) in pipe.map.iter() {
        print!(" {g}:{k}");
    }
    println!();

    let r = &pipe.rescaled;
    for (a, b) in [("KPx", "KPy"), ("KPx", "Px"), ("KPx", "Hb")] {
        println!("rescaled   [{a}, {b}] = {}", r.bracket_named(a, b)?.display(r));
    }
    let c = &pipe.contracted;
    for (a, b) in [("KPx", "KPy"), ("KPx", "Px")] {
        println!("contracted [{a}, {b}] = {}", c.bracket_named(a, b)?.display(c));
    }

    let galilei = catalog::galilei_central()?;
    let diff = tables_equal(c, &galilei, &catalog::contraction_renaming())?;
    println!("table-equal to galilei_central: {}", diff.is_equal());

    // Without the shift to Hb the mass drops out of [K, P].
    let plain = contract(&pipe.extended, &RescalingMap::speed_space(&pipe.extended))?;
    let boosts = catalog::contraction_renaming();
    let diff = tables_equal(&plain, &galilei, &lieq::Renaming::from_pairs(boosts.pairs().filter(|(a, _)| *a != "Hb")))?;
    print!("unshifted basis differs:\n{diff}");

    // Shrinking the energy as well leaves poles.
    let bad = RescalingMap::speed_space(&pipe.shifted).plus(&RescalingMap::new([("Hb", 1)]));
    if let Err(ContractionError::DivergentContraction { poles }) = contract(&pipe.shifted, &bad) {
        for p in poles {
            println!("divergent: {p}");
        }
    }
    Ok(())
}
