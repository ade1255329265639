//! Shared helpers: seeded random elements and an independent normalizer.
#![allow(dead_code)]

use std::collections::BTreeMap;

use lieq::uea::Word;
use lieq::{Element, LieAlgebra, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const MAX_WORD: usize = 4;
pub const MAX_NUM: i64 = 8;
pub const MAX_DEN: i64 = 8;

/// Coefficient `p/q` with `|p| <= 8`, `1 <= q <= 8`, `p != 0`.
pub fn coefficient(rng: &mut ChaCha8Rng) -> Scalar {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-MAX_NUM..=MAX_NUM);
    }
    Scalar::rational(p, rng.gen_range(1..=MAX_DEN))
}

pub fn word(rng: &mut ChaCha8Rng, dim: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=MAX_WORD);
    (0..len).map(|_| rng.gen_range(0..dim)).collect()
}

/// Sum of one to three arbitrary, usually unordered, words.
pub fn element(rng: &mut ChaCha8Rng, dim: usize) -> Element {
    let mut e = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        e += &Element::word(&word(rng, dim)).scale(&coefficient(rng));
    }
    e
}

/// Which out-of-order adjacent pair to rewrite next.
#[derive(Debug, Clone, Copy)]
pub enum Strategy {
    Leftmost,
    Rightmost,
    Random(u64),
}

/// Rewrites `..ba..` to `..ab.. + ..[b,a]..` for `a < b` until every
/// word is sorted, choosing the position by `strategy`.
pub fn brute_normal_form(alg: &LieAlgebra, e: &Element, strategy: Strategy) -> Element {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(match strategy {
        Strategy::Random(s) => s,
        _ => 0,
    });
    let mut pending: BTreeMap<Vec<u16>, Scalar> = BTreeMap::new();
    let mut done = Element::zero();
    let add = |map: &mut BTreeMap<Vec<u16>, Scalar>, w: Vec<u16>, c: Scalar| {
        let entry = map.entry(w.clone()).or_insert_with(Scalar::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            map.remove(&w);
        }
    };
    for (w, c) in e.terms() {
        add(&mut pending, w.letters().to_vec(), c.clone());
    }
    while let Some((w, c)) = pending.pop_first() {
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        if descents.is_empty() {
            done.add_term(Word(w), c);
            continue;
        }
        let i = match strategy {
            Strategy::Leftmost => descents[0],
            Strategy::Rightmost => descents[descents.len() - 1],
            Strategy::Random(_) => descents[rng.gen_range(0..descents.len())],
        };
        let (b, a) = (w[i], w[i + 1]);
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        add(&mut pending, swapped, c.clone());
        for (d, k) in alg.bracket_basis(b as usize, a as usize).iter() {
            let mut v = w[..i].to_vec();
            v.push(d as u16);
            v.extend_from_slice(&w[i + 2..]);
            add(&mut pending, v, &c * k);
        }
    }
    done
}
