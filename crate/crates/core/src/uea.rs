//! Universal enveloping algebra of a [`LieAlgebra`] with PBW normal forms.
//!
//! An [`Element`] is a finite sum of scalar-weighted words in generator
//! indices. It is in normal form when every word is nondecreasing in the
//! algebra's basis order; the normal form is unique, so equality of normal
//! forms decides equality in the enveloping algebra.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use thiserror::Error;

use crate::algebra::{LieAlgebra, LinComb};
use crate::scalar::{Scalar, ScalarError};

/// Default bound on the number of terms any intermediate element may hold.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Environment variable overriding [`DEFAULT_TERM_CAP`].
pub const TERM_CAP_ENV: &str = "LIEQ_TERM_CAP";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum UeaError {
    #[error("rewriting exceeded the term cap of {0} terms")]
    TermCapExceeded(usize),
    #[error("substitution for `{0}` requires it to be central (or mark the substitution formal)")]
    NonCentralSubstitution(String),
    #[error("generator index {0} is out of range for this algebra")]
    BadIndex(usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A word of generator indices, ordered by length and then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u16] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_ordered(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the enveloping algebra: `sum coeff * word`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The identity, i.e. the empty word.
    pub fn unit() -> Self {
        Element::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        Element::term(Word::empty(), s)
    }

    pub fn generator(index: usize) -> Self {
        Element::word(&[index])
    }

    pub fn word(letters: &[usize]) -> Self {
        Element::term(Word(letters.iter().map(|&l| l as u16).collect()), Scalar::one())
    }

    pub fn term(word: Word, coeff: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(word, coeff);
        e
    }

    /// Sum of the given terms; zero coefficients are dropped.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (&'a Word, &'a Scalar)>) -> Self {
        let mut out = Element::zero();
        for (w, c) in terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn from_lincomb(comb: &LinComb) -> Self {
        let mut e = Element::zero();
        for (idx, c) in comb.iter() {
            e.add_term(Word(vec![idx as u16]), c.clone());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &Word) -> Scalar {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    /// Highest word length present.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn is_normal(&self) -> bool {
        self.terms.keys().all(Word::is_ordered)
    }

    /// The scalar if this element is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(word.clone()).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Word concatenation, without normalizing.
    pub fn concat(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut letters = wa.0.clone();
                letters.extend_from_slice(&wb.0);
                out.add_term(Word(letters), ca * cb);
            }
        }
        out
    }

    /// Apply `f` to each coefficient together with its word.
    pub fn map_terms<E>(&self, mut f: impl FnMut(&Word, &Scalar) -> Result<Scalar, E>) -> Result<Element, E> {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(w, c)?);
        }
        Ok(out)
    }

    /// Relabel letters; the result is generally not normal.
    pub fn reindex(&self, map: &[usize]) -> Element {
        let mut out = Element::zero();
        for (w, c) in &self.terms {
            out.add_term(Word(w.0.iter().map(|&l| map[l as usize] as u16).collect()), c.clone());
        }
        out
    }

    /// Substitute a scalar symbol in every coefficient.
    pub fn substitute_symbol(&self, symbol: &str, value: &Scalar) -> Result<Element, ScalarError> {
        self.map_terms(|_, c| c.substitute(symbol, value))
    }

    /// Print with the generator names of `algebra`, in the expression grammar.
    pub fn display<'a>(&'a self, algebra: &'a LieAlgebra) -> impl fmt::Display + 'a {
        DisplayElement { element: self, names: algebra.generator_names() }
    }
}

struct DisplayElement<'a> {
    element: &'a Element,
    names: &'a [String],
}

fn fmt_word(word: &Word, names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let letters = &word.0;
    let mut k = 0;
    while k < letters.len() {
        let mut run = 1;
        while k + run < letters.len() && letters[k + run] == letters[k] {
            run += 1;
        }
        let name = &names[letters[k] as usize];
        parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
        k += run;
    }
    parts.join("*")
}

impl fmt::Display for DisplayElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, coeff) in &self.element.terms {
            let w = fmt_word(word, self.names);
            for (neg, body) in coeff.signed_terms() {
                let piece = match (w.is_empty(), body == "1") {
                    (true, _) => body,
                    (false, true) => w.clone(),
                    (false, false) => format!("{body}*{w}"),
                };
                match (first, neg) {
                    (true, true) => write!(f, "-{piece}")?,
                    (true, false) => write!(f, "{piece}")?,
                    (false, true) => write!(f, " - {piece}")?,
                    (false, false) => write!(f, " + {piece}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&Scalar::integer(-1))
    }
}

/// Generator-to-element replacement applied to normal forms.
#[derive(Debug, Clone, Default)]
pub struct Substitution {
    map: BTreeMap<usize, Element>,
    formal: bool,
}

impl Substitution {
    /// Only central generators may be replaced.
    pub fn new() -> Self {
        Substitution::default()
    }

    /// Applied term by term without a centrality check, as for rest-frame
    /// specializations.
    pub fn formal() -> Self {
        Substitution { map: BTreeMap::new(), formal: true }
    }

    pub fn with(mut self, generator: usize, value: Element) -> Self {
        self.map.insert(generator, value);
        self
    }

    pub fn with_scalar(self, generator: usize, value: Scalar) -> Self {
        self.with(generator, Element::scalar(value))
    }

    pub fn is_formal(&self) -> bool {
        self.formal
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// The first generator a candidate fails to commute with.
#[derive(Debug, Clone, PartialEq)]
pub struct CasimirWitness {
    pub generator: String,
    pub index: usize,
    /// `[e, G]` in normal form.
    pub residue: Element,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CasimirCheck {
    pub witness: Option<CasimirWitness>,
}

impl CasimirCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Enveloping algebra of a fixed Lie algebra.
#[derive(Debug, Clone, Copy)]
pub struct Uea<'a> {
    algebra: &'a LieAlgebra,
    term_cap: usize,
}

type Memo = HashMap<(u16, Vec<u16>), Element>;

impl<'a> Uea<'a> {
    /// Uses the term cap from `LIEQ_TERM_CAP`, if set and valid.
    pub fn new(algebra: &'a LieAlgebra) -> Self {
        let term_cap = std::env::var(TERM_CAP_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_TERM_CAP);
        Uea { algebra, term_cap }
    }

    pub fn with_term_cap(algebra: &'a LieAlgebra, term_cap: usize) -> Self {
        Uea { algebra, term_cap }
    }

    pub fn algebra(&self) -> &'a LieAlgebra {
        self.algebra
    }

    pub fn term_cap(&self) -> usize {
        self.term_cap
    }

    pub fn generator(&self, name: &str) -> Result<Element, crate::algebra::AlgebraError> {
        Ok(Element::generator(self.algebra.index_of(name)?))
    }

    /// PBW normal form. A descent `b*a` with `b > a` is rewritten as
    /// `a*b + [b, a]`; words are normalized right to left by inserting one
    /// letter at a time into an already ordered tail.
    pub fn normal_form(&self, e: &Element) -> Result<Element, UeaError> {
        let dim = self.algebra.dim();
        let mut memo = Memo::new();
        let mut out = Element::zero();
        for (word, coeff) in e.terms() {
            if let Some(&bad) = word.0.iter().find(|&&l| l as usize >= dim) {
                return Err(UeaError::BadIndex(bad as usize));
            }
            let nf = self.normal_word(&word.0, &mut memo)?;
            out += &nf.scale(coeff);
            self.check_cap(&out)?;
        }
        Ok(out)
    }

    fn check_cap(&self, e: &Element) -> Result<(), UeaError> {
        if e.len() > self.term_cap {
            Err(UeaError::TermCapExceeded(self.term_cap))
        } else {
            Ok(())
        }
    }

    fn normal_word(&self, letters: &[u16], memo: &mut Memo) -> Result<Element, UeaError> {
        if letters.windows(2).all(|w| w[0] <= w[1]) {
            return Ok(Element::term(Word(letters.to_vec()), Scalar::one()));
        }
        let tail = self.normal_word(&letters[1..], memo)?;
        self.left_mul(letters[0], &tail, memo)
    }

    /// `g * e` for `e` in normal form.
    fn left_mul(&self, g: u16, e: &Element, memo: &mut Memo) -> Result<Element, UeaError> {
        let mut out = Element::zero();
        for (word, coeff) in e.terms() {
            let ins = self.insert(g, &word.0, memo)?;
            out += &ins.scale(coeff);
            self.check_cap(&out)?;
        }
        Ok(out)
    }

    /// Normal form of `g * word` for an ordered `word`.
    fn insert(&self, g: u16, word: &[u16], memo: &mut Memo) -> Result<Element, UeaError> {
        if word.is_empty() || g <= word[0] {
            let mut letters = Vec::with_capacity(word.len() + 1);
            letters.push(g);
            letters.extend_from_slice(word);
            return Ok(Element::term(Word(letters), Scalar::one()));
        }
        let key = (g, word.to_vec());
        if let Some(hit) = memo.get(&key) {
            return Ok(hit.clone());
        }
        let head = word[0];
        let rest = &word[1..];
        // g * head * rest = head * (g * rest) + [g, head] * rest
        let moved = self.insert(g, rest, memo)?;
        let mut out = self.left_mul(head, &moved, memo)?;
        let bracket = self.algebra.bracket_basis(g as usize, head as usize);
        for (d, c) in bracket.iter() {
            let ins = self.insert(d as u16, rest, memo)?;
            out += &ins.scale(c);
        }
        self.check_cap(&out)?;
        memo.insert(key, out.clone());
        Ok(out)
    }

    /// Concatenate and normalize.
    pub fn product(&self, a: &Element, b: &Element) -> Result<Element, UeaError> {
        self.normal_form(&a.concat(b))
    }

    /// `a` raised to a nonnegative power.
    pub fn power(&self, a: &Element, n: u32) -> Result<Element, UeaError> {
        let mut acc = Element::unit();
        for _ in 0..n {
            acc = self.product(&acc, a)?;
        }
        Ok(acc)
    }

    /// `normal_form(a*b - b*a)`.
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element, UeaError> {
        let ab = a.concat(b);
        let ba = b.concat(a);
        self.normal_form(&(&ab - &ba))
    }

    /// Equality in the enveloping algebra.
    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool, UeaError> {
        Ok(self.normal_form(&(a - b))?.is_zero())
    }

    /// Checks `[e, G] = 0` for every generator in basis order.
    pub fn is_casimir(&self, e: &Element) -> Result<CasimirCheck, UeaError> {
        let e = self.normal_form(e)?;
        for g in self.algebra.generators() {
            let residue = self.commutator(&e, &Element::generator(g.index))?;
            if !residue.is_zero() {
                return Ok(CasimirCheck {
                    witness: Some(CasimirWitness { generator: g.name, index: g.index, residue }),
                });
            }
        }
        Ok(CasimirCheck { witness: None })
    }

    /// Replace generators term by term in the normal form of `e`, then
    /// renormalize.
    pub fn substitute(&self, e: &Element, s: &Substitution) -> Result<Element, UeaError> {
        if !s.formal {
            for &g in s.map.keys() {
                if g >= self.algebra.dim() {
                    return Err(UeaError::BadIndex(g));
                }
                if !self.algebra.is_central(g) {
                    return Err(UeaError::NonCentralSubstitution(self.algebra.generator_name(g).to_string()));
                }
            }
        }
        let e = self.normal_form(e)?;
        if s.map.is_empty() {
            return Ok(e);
        }
        let mut out = Element::zero();
        for (word, coeff) in e.terms() {
            let mut acc = Element::scalar(coeff.clone());
            for &l in &word.0 {
                let image = s.map.get(&(l as usize)).cloned().unwrap_or_else(|| Element::generator(l as usize));
                acc = acc.concat(&image);
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        self.normal_form(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn gen(alg: &LieAlgebra, name: &str) -> Element {
        Element::generator(alg.index_of(name).unwrap())
    }

    #[test]
    fn ordered_monomial_is_fixed() {
        // momenta precede boosts in the basis
        let g = catalog::galilei_central().unwrap();
        let u = Uea::new(&g);
        let pk = gen(&g, "Px").concat(&gen(&g, "KGx"));
        assert_eq!(u.normal_form(&pk).unwrap(), pk);
    }

    #[test]
    fn momentum_boost_reorders_with_mass() {
        // Px*KGx = KGx*Px + [Px, KGx] = KGx*Px - i M
        let g = catalog::galilei_central().unwrap();
        let u = Uea::new(&g);
        let pk = gen(&g, "Px").concat(&gen(&g, "KGx"));
        let expected = &gen(&g, "KGx").concat(&gen(&g, "Px")) - &gen(&g, "M").scale(&Scalar::i());
        assert!(u.equal(&pk, &expected).unwrap());
        // and the single rewrite step of KGx*Px
        let kp = gen(&g, "KGx").concat(&gen(&g, "Px"));
        assert_eq!(u.normal_form(&kp).unwrap(), &pk + &gen(&g, "M").scale(&Scalar::i()));
    }

    #[test]
    fn poincare_momentum_energy_commute() {
        let p = catalog::poincare().unwrap();
        let u = Uea::new(&p);
        let ph = gen(&p, "Px").concat(&gen(&p, "H"));
        assert_eq!(u.normal_form(&ph).unwrap(), gen(&p, "H").concat(&gen(&p, "Px")));
    }

    #[test]
    fn commutator_matches_lie_bracket() {
        for name in catalog::NAMES {
            let alg = catalog::algebra(name).unwrap();
            let u = Uea::new(&alg);
            for a in 0..alg.dim() {
                for b in 0..alg.dim() {
                    let c = u.commutator(&Element::generator(a), &Element::generator(b)).unwrap();
                    assert_eq!(c, Element::from_lincomb(&alg.bracket_basis(a, b)), "{name} [{a},{b}]");
                }
            }
        }
    }

    #[test]
    fn boost_energy_commutator() {
        let g = catalog::galilei_central().unwrap();
        let u = Uea::new(&g);
        let c = u.commutator(&gen(&g, "KGx"), &gen(&g, "H")).unwrap();
        assert_eq!(c, gen(&g, "Px").scale(&Scalar::i()));
    }

    #[test]
    fn leibniz_on_boost_square() {
        // [K^2, P] = K[K,P] + [K,P]K = 2 i M K
        let g = catalog::galilei_central().unwrap();
        let u = Uea::new(&g);
        let k = gen(&g, "KGx");
        let c = u.commutator(&k.concat(&k), &gen(&g, "Px")).unwrap();
        let expected = u.normal_form(&gen(&g, "M").concat(&k).scale(&(&Scalar::i() * &Scalar::integer(2)))).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn self_commutator_vanishes() {
        let g = catalog::galilei_central().unwrap();
        let u = Uea::new(&g);
        let e = &gen(&g, "Px").concat(&gen(&g, "KGy")) + &gen(&g, "H").scale(&Scalar::symbol("m"));
        assert!(u.commutator(&e, &e).unwrap().is_zero());
    }

    #[test]
    fn mass_is_casimir_energy_is_not() {
        let g = catalog::galilei_central().unwrap();
        let u = Uea::new(&g);
        assert!(u.is_casimir(&gen(&g, "M")).unwrap().holds());
        let check = u.is_casimir(&gen(&g, "H")).unwrap();
        let w = check.witness.unwrap();
        assert_eq!(w.generator, "KGx");
        assert_eq!(w.residue, gen(&g, "Px").scale(&-Scalar::i()));
    }

    #[test]
    fn term_cap_is_enforced() {
        let g = catalog::galilei_central().unwrap();
        let u = Uea::with_term_cap(&g, 2);
        let e = gen(&g, "KGz").concat(&gen(&g, "KGy")).concat(&gen(&g, "Pz")).concat(&gen(&g, "Py"));
        assert_eq!(u.normal_form(&e), Err(UeaError::TermCapExceeded(2)));
    }

    #[test]
    fn central_substitution_checks_centrality() {
        let g = catalog::galilei_central().unwrap();
        let u = Uea::new(&g);
        let m = g.index_of("M").unwrap();
        let h = g.index_of("H").unwrap();
        let e = gen(&g, "M").concat(&gen(&g, "H"));
        let s = Substitution::new().with_scalar(m, Scalar::symbol("m"));
        assert_eq!(u.substitute(&e, &s).unwrap(), gen(&g, "H").scale(&Scalar::symbol("m")));
        let bad = Substitution::new().with_scalar(h, Scalar::one());
        assert!(matches!(u.substitute(&e, &bad), Err(UeaError::NonCentralSubstitution(_))));
        assert_eq!(u.substitute(&e, &Substitution::new()).unwrap(), u.normal_form(&e).unwrap());
    }

    #[test]
    fn display_collapses_powers() {
        let g = catalog::galilei_central().unwrap();
        let e = &gen(&g, "Px").concat(&gen(&g, "Px")).scale(&Scalar::rational(-1, 2)) + &gen(&g, "M");
        assert_eq!(e.display(&g).to_string(), "M - 1/2*Px^2");
    }
}
