//! Algebraic invariants checked on generated inputs.

mod common;

use lieq::catalog::{self, Catalog};
use lieq::expr::parse_expression;
use lieq::uea::Substitution;
use lieq::{BasisChange, Element, LieAlgebra, LinComb, Scalar, Uea};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ratio() -> impl Strategy<Value = Scalar> {
    (-8i64..=8, 1i64..=8).prop_map(|(p, q)| Scalar::rational(p, q))
}

/// `a + b i` times a monomial in `eps`, `m0` and `c`.
fn scalar() -> impl Strategy<Value = Scalar> {
    (ratio(), ratio(), -2i32..=2, 0i32..=2, 0i32..=1).prop_map(|(re, im, e, m, c)| {
        let coeff = &re + &(&im * &Scalar::i());
        let mono =
            &(&Scalar::eps_pow(e) * &Scalar::symbol_pow("m0", m).unwrap()) * &Scalar::symbol_pow("c", c).unwrap();
        &coeff * &mono
    })
}

fn sum_of(parts: Vec<Scalar>) -> Scalar {
    parts.iter().fold(Scalar::zero(), |acc, s| &acc + s)
}

fn poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(scalar(), 1..4).prop_map(sum_of)
}

fn galilei() -> LieAlgebra {
    catalog::galilei_central().unwrap()
}

fn random(seed: u64, alg: &LieAlgebra) -> Element {
    common::element(&mut ChaCha8Rng::seed_from_u64(seed), alg.dim())
}

fn lincomb(alg: &LieAlgebra, coeffs: &[Scalar]) -> LinComb {
    let mut out = LinComb::zero();
    for (i, c) in coeffs.iter().enumerate().take(alg.dim()) {
        out.add_term(i, c.clone());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn scalar_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rationals_are_exact(p in -1000i64..1000, q in 1i64..1000) {
        let x = Scalar::rational(p, q);
        prop_assert_eq!(&x * &Scalar::integer(q), Scalar::integer(p));
        let third = Scalar::rational(1, 3);
        prop_assert_eq!(&(&third + &third) + &third, Scalar::one());
    }

    #[test]
    fn units_invert(re in ratio(), k in -3i32..=3) {
        prop_assume!(!re.is_zero());
        let u = &re * &Scalar::eps_pow(k);
        prop_assert_eq!(&u * &u.try_inverse().unwrap(), Scalar::one());
    }

    #[test]
    fn scalars_print_and_parse(s in poly()) {
        let symbols: Vec<String> = ["eps", "m0", "c"].iter().map(|x| x.to_string()).collect();
        prop_assert_eq!(lieq::expr::parse_scalar(&s.to_string(), &symbols).unwrap(), s);
    }

    #[test]
    fn commutator_is_a_derivation(x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let alg = galilei();
        let uea = Uea::new(&alg);
        let (x, y, z) = (random(x, &alg), random(y, &alg), random(z, &alg));
        let lhs = uea.commutator(&x, &uea.product(&y, &z).unwrap()).unwrap();
        let rhs = &uea.product(&uea.commutator(&x, &y).unwrap(), &z).unwrap()
            + &uea.product(&y, &uea.commutator(&x, &z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_is_associative(x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let alg = galilei();
        let uea = Uea::new(&alg);
        let (x, y, z) = (random(x, &alg), random(y, &alg), random(z, &alg));
        let left = uea.product(&uea.product(&x, &y).unwrap(), &z).unwrap();
        let right = uea.product(&x, &uea.product(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn normal_forms_print_and_parse(seed in any::<u64>()) {
        for name in ["galilei_central", "poincare_trivial_ext", "heisenberg3"] {
            let alg = catalog::algebra(name).unwrap();
            let e = Uea::new(&alg).normal_form(&random(seed, &alg)).unwrap();
            prop_assert_eq!(parse_expression(&e.display(&alg).to_string(), &alg).unwrap(), e);
        }
    }

    #[test]
    fn substitution_is_linear(x in any::<u64>(), y in any::<u64>(), k in poly(), m in poly()) {
        let alg = galilei();
        let uea = Uea::new(&alg);
        let sub = Substitution::new().with_scalar(alg.index_of("M").unwrap(), m);
        let (x, y) = (uea.normal_form(&random(x, &alg)).unwrap(), uea.normal_form(&random(y, &alg)).unwrap());
        let combined = uea.substitute(&(&x + &y.scale(&k)), &sub).unwrap();
        let separate = &uea.substitute(&x, &sub).unwrap() + &uea.substitute(&y, &sub).unwrap().scale(&k);
        prop_assert_eq!(combined, separate);
    }

    #[test]
    fn substituting_a_central_element_is_a_homomorphism(x in any::<u64>(), y in any::<u64>(), m in poly()) {
        let alg = galilei();
        let uea = Uea::new(&alg);
        let sub = Substitution::new().with_scalar(alg.index_of("M").unwrap(), m);
        let (x, y) = (random(x, &alg), random(y, &alg));
        let lhs = uea.substitute(&uea.product(&x, &y).unwrap(), &sub).unwrap();
        let sx = uea.substitute(&uea.normal_form(&x).unwrap(), &sub).unwrap();
        let sy = uea.substitute(&uea.normal_form(&y).unwrap(), &sub).unwrap();
        prop_assert_eq!(lhs, uea.substitute(&uea.product(&sx, &sy).unwrap(), &sub).unwrap());
    }

    #[test]
    fn bracket_satisfies_jacobi(a in prop::collection::vec(ratio(), 11), b in prop::collection::vec(ratio(), 11),
                                c in prop::collection::vec(ratio(), 11)) {
        for name in ["galilei_central", "poincare_trivial_ext", "poincare_trivial_ext_h"] {
            let alg = catalog::algebra(name).unwrap();
            let (x, y, z) = (lincomb(&alg, &a), lincomb(&alg, &b), lincomb(&alg, &c));
            let mut sum = alg.bracket(&alg.bracket(&x, &y), &z);
            sum += &alg.bracket(&alg.bracket(&y, &z), &x);
            sum += &alg.bracket(&alg.bracket(&z, &x), &y);
            prop_assert!(sum.is_zero(), "{}", name);
            prop_assert_eq!(alg.bracket(&x, &y), -&alg.bracket(&y, &x));
        }
    }

    #[test]
    fn basis_changes_compose(k1 in ratio(), k2 in ratio(), s in ratio()) {
        prop_assume!(!s.is_zero());
        let alg = catalog::poincare_trivial_ext_h().unwrap();
        let first = BasisChange::redefine(&alg, "H", "H1", &[("H", Scalar::one()), ("M", k1)]).unwrap();
        let mid = alg.change_basis(&first).unwrap();
        let second = BasisChange::redefine(&mid, "M", "M2", &[("M", s), ("H1", k2)]).unwrap();
        let stepwise = mid.change_basis(&second).unwrap();
        let composed = alg.change_basis(&first.then(&second)).unwrap();
        let same = lieq::contraction::tables_equal(&stepwise, &composed, &lieq::Renaming::identity()).unwrap();
        prop_assert!(same.is_equal(), "{}", same);
        prop_assert!(composed.validate().is_empty());
        let back = composed.change_basis(&first.then(&second).inverse(&alg).unwrap()).unwrap();
        prop_assert!(lieq::contraction::tables_equal(&back, &alg, &lieq::Renaming::identity()).unwrap().is_equal());
    }
}

#[test]
fn every_single_sign_flip_is_detected() {
    let cat = Catalog::standard().unwrap();
    for name in ["galilei_central", "poincare"] {
        let alg = cat.get(name).unwrap();
        let mut flips = 0;
        for ((a, b), comb) in alg.stored_brackets() {
            for (d, _) in comb.iter() {
                let mutant = catalog::flip_structure_constant(alg, a, b, d);
                assert!(!mutant.validate().is_empty(), "{name}: [{a}, {b}] -> {d}");
                flips += 1;
            }
        }
        assert!(flips > 20, "{name}: only {flips} constants");
    }
}

#[test]
fn particle_number_is_exact() {
    for n in 1..=100 {
        let l = lieq::mhi::n_particle_labels(n).unwrap();
        assert_eq!(l.number_value, n as u64);
        assert_eq!(l.mass_value, &Scalar::symbol("m0") * &Scalar::integer(n));
    }
    for (a, b) in [(1, 1), (2, 5), (40, 60)] {
        let sum = lieq::mhi::n_particle_labels(a).unwrap().combine(&lieq::mhi::n_particle_labels(b).unwrap());
        assert_eq!(sum, lieq::mhi::n_particle_labels(a + b).unwrap());
    }
}
