//! Exact coefficient ring: Laurent polynomials in commuting symbols with
//! Gaussian-rational coefficients.
//!
//! Only the contraction parameter [`EPS`] may carry negative exponents. Every
//! other symbol is polynomial, so a pole anywhere else is rejected at
//! construction time.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Name of the contraction parameter, the one symbol allowed negative powers.
pub const EPS: &str = "eps";

/// Symbols every catalog algebra declares.
pub const DEFAULT_SYMBOLS: &[&str] = &["eps", "c", "m0", "m", "w", "t", "s", "e"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("symbol `{0}` may not carry a negative exponent (only `eps` is Laurent)")]
    NegativeExponent(String),
    #[error("scalar `{0}` is not invertible in the coefficient ring")]
    NotInvertible(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// A complex number with rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(BigRational::new(BigInt::from(num), BigInt::from(den)), BigRational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn inverse(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(GaussianRational::new(&self.re / &norm, -&self.im / &norm))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// True when the number prints with a leading minus sign.
    fn is_negative_looking(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.im.is_zero() && self.re.is_negative()
        }
    }

    fn fmt_magnitude(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // prints |self| for the one-part cases, the full value otherwise
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_ratio(&self.re.abs())),
            (true, false) => {
                let m = self.im.abs();
                if m.is_one() {
                    write!(f, "i")
                } else {
                    write!(f, "{}*i", fmt_ratio(&m))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                let m = self.im.abs();
                if m.is_one() {
                    write!(f, "({} {} i)", fmt_ratio(&self.re), sign)
                } else {
                    write!(f, "({} {} {}*i)", fmt_ratio(&self.re), sign, fmt_ratio(&m))
                }
            }
        }
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_integer(1)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_negative_looking() {
            write!(f, "-")?;
        }
        self.fmt_magnitude(f)
    }
}

/// A power product of symbols, sorted by name, without zero exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(String, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, symbol: &str) -> i32 {
        self.0.iter().find(|(s, _)| s == symbol).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> impl Iterator<Item = (&str, i32)> {
        self.0.iter().map(|(s, e)| (s.as_str(), *e))
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut merged: BTreeMap<&str, i32> = BTreeMap::new();
        for (s, e) in self.0.iter().chain(other.0.iter()) {
            *merged.entry(s.as_str()).or_insert(0) += e;
        }
        Monomial(merged.into_iter().filter(|(_, e)| *e != 0).map(|(s, e)| (s.to_string(), e)).collect())
    }

    fn without(&self, symbol: &str) -> Monomial {
        Monomial(self.0.iter().filter(|(s, _)| s != symbol).cloned().collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Canonical-form Laurent polynomial over the Gaussian rationals.
///
/// Two scalars are equal iff their term maps are identical: terms are kept
/// sorted and zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(GaussianRational::one())
    }

    pub fn i() -> Self {
        Scalar::constant(GaussianRational::i())
    }

    pub fn integer(n: i64) -> Self {
        Scalar::constant(GaussianRational::from_integer(n))
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Scalar::constant(GaussianRational::from_ratio(num, den))
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Scalar { terms }
    }

    pub fn symbol(name: &str) -> Self {
        Scalar::symbol_pow(name, 1).expect("positive exponent is always valid")
    }

    /// `name^exp`; negative exponents are accepted only for [`EPS`].
    pub fn symbol_pow(name: &str, exp: i32) -> Result<Self, ScalarError> {
        if exp < 0 && name != EPS {
            return Err(ScalarError::NegativeExponent(name.to_string()));
        }
        if exp == 0 {
            return Ok(Scalar::one());
        }
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![(name.to_string(), exp)]), GaussianRational::one());
        Ok(Scalar { terms })
    }

    /// `eps^k`, valid for any integer `k`.
    pub fn eps_pow(k: i32) -> Self {
        Scalar::symbol_pow(EPS, k).expect("eps is Laurent")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The value if the scalar contains no symbols.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.iter().next().filter(|(m, _)| m.is_one()).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    /// Symbols with a nonzero exponent somewhere in the scalar.
    pub fn symbols(&self) -> Vec<String> {
        let mut out: Vec<String> = self.terms.keys().flat_map(|m| m.0.iter().map(|(s, _)| s.clone())).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Lowest power of `eps` present, `None` for zero.
    pub fn eps_valuation(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.exponent(EPS)).min()
    }

    /// Coefficient of `eps^k`, with `eps` removed.
    pub fn eps_coefficient(&self, k: i32) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            if m.exponent(EPS) == k {
                out.add_term(m.without(EPS), c.clone());
            }
        }
        out
    }

    /// `lim eps -> 0`. On a pole returns its order (a positive integer).
    pub fn eps_limit(&self) -> Result<Scalar, u32> {
        match self.eps_valuation() {
            Some(v) if v < 0 => Err(v.unsigned_abs()),
            _ => Ok(self.eps_coefficient(0)),
        }
    }

    /// Multiplicative inverse for units of the ring: nonzero constants times a
    /// power of `eps`.
    pub fn try_inverse(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.0.iter().all(|(s, _)| s == EPS) {
                let inv = c.inverse().ok_or(ScalarError::DivisionByZero)?;
                return Ok(Scalar::eps_pow(-m.exponent(EPS)).scale(&inv));
            }
        }
        Err(ScalarError::NotInvertible(self.to_string()))
    }

    /// Replace every occurrence of `symbol` by `value`.
    pub fn substitute(&self, symbol: &str, value: &Scalar) -> Result<Scalar, ScalarError> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(symbol);
            let rest = Scalar::from_term(m.without(symbol), c.clone());
            let factor = value.pow(e)?;
            out += &(&rest * &factor);
        }
        Ok(out)
    }

    pub fn pow(&self, e: i32) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.try_inverse()? } else { self.clone() };
        let mut acc = Scalar::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn conj(&self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    pub(crate) fn from_term(m: Monomial, c: GaussianRational) -> Scalar {
        let mut out = Scalar::zero();
        out.add_term(m, c);
        out
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Terms as `(sign, body)` pairs where body never starts with `-`.
    pub(crate) fn signed_terms(&self) -> Vec<(bool, String)> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let negative = c.is_negative_looking();
                let mag = if negative { -c.clone() } else { c.clone() };
                let body = if m.is_one() {
                    mag.to_string()
                } else if mag.is_one() {
                    m.to_string()
                } else {
                    format!("{mag}*{m}")
                };
                (negative, body)
            })
            .collect()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl From<GaussianRational> for Scalar {
    fn from(c: GaussianRational) -> Self {
        Scalar::constant(c)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(mut self, rhs: Scalar) -> Scalar {
        self -= &rhs;
        self
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.signed_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (neg, body)) in terms.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(s: &str) -> Scalar {
        Scalar::symbol(s)
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::integer(-1));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = &sym("c") + &Scalar::integer(2);
        let y = &x - &sym("c");
        assert_eq!(y, Scalar::integer(2));
        assert_eq!(y.term_count(), 1);
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn only_eps_is_laurent() {
        assert!(Scalar::symbol_pow("eps", -2).is_ok());
        assert_eq!(Scalar::symbol_pow("m0", -1), Err(ScalarError::NegativeExponent("m0".into())));
    }

    #[test]
    fn eps_limit_and_pole_order() {
        let x = &Scalar::eps_pow(2) + &sym("c");
        assert_eq!(x.eps_limit(), Ok(sym("c")));
        let y = &Scalar::eps_pow(-2) + &Scalar::one();
        assert_eq!(y.eps_limit(), Err(2));
        assert_eq!(y.eps_valuation(), Some(-2));
    }

    #[test]
    fn unit_inverse() {
        let u = Scalar::eps_pow(3)
            .scale(&GaussianRational::new(BigRational::from_integer(1.into()), BigRational::from_integer(1.into())));
        let inv = u.try_inverse().unwrap();
        assert!((&u * &inv).is_one());
        assert!(sym("c").try_inverse().is_err());
        assert_eq!(Scalar::zero().try_inverse(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn substitute_symbol() {
        // (c^2 m0 + t) with c -> 1
        let x = &(&sym("c") * &sym("c")) * &sym("m0");
        let x = &x + &sym("t");
        let y = x.substitute("c", &Scalar::one()).unwrap();
        assert_eq!(y, &sym("m0") + &sym("t"));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::rational(-3, 2).to_string(), "-3/2");
        let x = &Scalar::i() * &Scalar::eps_pow(2);
        assert_eq!(x.to_string(), "i*eps^2");
        let z = Scalar::constant(GaussianRational::new(
            BigRational::from_integer(1.into()),
            BigRational::from_integer((-2).into()),
        ));
        assert_eq!(z.to_string(), "(1 - 2*i)");
        assert_eq!(Scalar::zero().to_string(), "0");
    }
}
