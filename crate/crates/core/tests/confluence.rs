//! PBW normal forms agree with a naive rewriter run in several orders.

mod common;

use common::{brute_normal_form, element, Strategy};
use lieq::catalog;
use lieq::Uea;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(name: &str, seed: u64, count: u64) {
    let alg = catalog::algebra(name).unwrap();
    let uea = Uea::new(&alg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = Vec::new();
    for n in 0..count {
        let e = element(&mut rng, alg.dim());
        let nf = uea.normal_form(&e).unwrap();
        assert!(nf.is_normal());
        assert_eq!(uea.normal_form(&nf).unwrap(), nf, "normal form is not idempotent");
        for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Random(n), Strategy::Random(n ^ 0xff)] {
            let brute = brute_normal_form(&alg, &e, s);
            if brute != nf {
                mismatches.push(format!(
                    "{} via {s:?}: {} vs {}",
                    e.display(&alg),
                    brute.display(&alg),
                    nf.display(&alg)
                ));
            }
        }
    }
    assert!(mismatches.is_empty(), "{name}: {}", mismatches.join("\n"));
}

#[test]
fn galilei_central_200_elements() {
    check("galilei_central", 2024, 200);
}

#[test]
fn extended_poincare() {
    check("poincare_trivial_ext", 7, 100);
}

#[test]
fn heisenberg() {
    check("heisenberg3", 11, 100);
}

#[test]
fn abstract_galilei() {
    check("galilei", 3, 100);
}
