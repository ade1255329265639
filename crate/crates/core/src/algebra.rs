//! Finite-dimensional Lie algebras given by structure constants.
//!
//! Brackets are stored for ordered pairs `a < b` only; `[b, a]` is derived by
//! negation and `[a, a]` is zero, so a built table is antisymmetric by
//! construction. Raw inputs that disagree with that (a nonzero `[a, a]`, or
//! both orientations given inconsistently) are kept as defects and surface
//! in [`LieAlgebra::validate`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use thiserror::Error;

use crate::scalar::{Scalar, ScalarError};

/// One bracket replacement `(a, b, [(generator, coefficient)])`.
pub type Override<'a> = (&'a str, &'a str, Vec<(&'a str, Scalar)>);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("central extension fails the Jacobi identity: {0}")]
    InvalidCocycle(ValidationReport),
    #[error("basis change is singular")]
    SingularBasisChange,
    #[error("basis change needs a non-unit pivot ({0}); only unit pivots are supported")]
    NonUnitPivot(String),
    #[error("basis change has {got} rows but the algebra has dimension {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("renaming is not a bijection: {0}")]
    BadRenaming(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A generator of an algebra: its name and basis position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub index: usize,
}

/// Scalar-weighted combination of generators, keyed by basis index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinComb(BTreeMap<usize, Scalar>);

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    pub fn basis(index: usize) -> Self {
        LinComb::term(index, Scalar::one())
    }

    pub fn term(index: usize, coeff: Scalar) -> Self {
        let mut out = LinComb::zero();
        out.add_term(index, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.0.get(&index).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }

    pub fn add_term(&mut self, index: usize, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.0.entry(index).or_default();
        *slot += &coeff;
        if slot.is_zero() {
            self.0.remove(&index);
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinComb {
        let mut out = LinComb::zero();
        for (k, v) in &self.0 {
            out.add_term(*k, v * s);
        }
        out
    }

    /// Apply `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs<E>(&self, mut f: impl FnMut(usize, &Scalar) -> Result<Scalar, E>) -> Result<LinComb, E> {
        let mut out = LinComb::zero();
        for (k, v) in &self.0 {
            out.add_term(*k, f(*k, v)?);
        }
        Ok(out)
    }

    pub fn reindex(&self, map: impl Fn(usize) -> usize) -> LinComb {
        let mut out = LinComb::zero();
        for (k, v) in &self.0 {
            out.add_term(map(*k), v.clone());
        }
        out
    }

    /// Render with the generator names of `algebra`.
    pub fn display<'a>(&'a self, algebra: &'a LieAlgebra) -> impl fmt::Display + 'a {
        DisplayLinComb { comb: self, names: &algebra.generators }
    }
}

struct DisplayLinComb<'a> {
    comb: &'a LinComb,
    names: &'a [String],
}

impl fmt::Display for DisplayLinComb<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comb.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, coeff) in self.comb.iter() {
            let name = &self.names[idx];
            for (neg, body) in coeff.signed_terms() {
                let piece = if body == "1" { name.clone() } else { format!("{body}*{name}") };
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

impl AddAssign<&LinComb> for LinComb {
    fn add_assign(&mut self, rhs: &LinComb) {
        for (k, v) in &rhs.0 {
            self.add_term(*k, v.clone());
        }
    }
}

impl Add<&LinComb> for &LinComb {
    type Output = LinComb;
    fn add(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LinComb> for &LinComb {
    type Output = LinComb;
    fn sub(self, rhs: &LinComb) -> LinComb {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Neg for &LinComb {
    type Output = LinComb;
    fn neg(self) -> LinComb {
        self.scale(&Scalar::integer(-1))
    }
}

/// A raw table entry that contradicts antisymmetry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntisymmetryViolation {
    pub a: String,
    pub b: String,
    pub detail: String,
}

/// A generator triple whose cyclic Jacobi sum is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: [String; 3],
    pub residue: String,
}

/// Outcome of [`LieAlgebra::validate`]. Empty means the table is a Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub antisymmetry: Vec<AntisymmetryViolation>,
    pub jacobi: Vec<JacobiViolation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "valid");
        }
        let mut parts = Vec::new();
        for v in &self.antisymmetry {
            parts.push(format!("antisymmetry [{}, {}]: {}", v.a, v.b, v.detail));
        }
        for v in &self.jacobi {
            parts.push(format!("jacobi ({}, {}, {}) = {}", v.triple[0], v.triple[1], v.triple[2], v.residue));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// A Lie algebra over [`Scalar`] with an ordered basis.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebra {
    name: String,
    symbols: Vec<String>,
    generators: Vec<String>,
    brackets: BTreeMap<(usize, usize), LinComb>,
    defects: Vec<AntisymmetryViolation>,
}

impl LieAlgebra {
    /// Start a table over the given generators. Fails on duplicate names.
    pub fn builder(name: &str, symbols: &[&str], generators: &[&str]) -> Result<AlgebraBuilder, AlgebraError> {
        AlgebraBuilder::new(
            name,
            symbols.iter().map(|s| s.to_string()).collect(),
            generators.iter().map(|s| s.to_string()).collect(),
        )
    }

    /// An algebra with every bracket zero.
    pub fn abelian(name: &str, symbols: &[&str], generators: &[&str]) -> Result<LieAlgebra, AlgebraError> {
        Ok(LieAlgebra::builder(name, symbols, generators)?.build())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.generators
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.generators.iter().enumerate().map(|(index, name)| Generator { name: name.clone(), index })
    }

    pub fn generator(&self, name: &str) -> Result<Generator, AlgebraError> {
        self.index_of(name).map(|index| Generator { name: name.to_string(), index })
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.generators.iter().position(|g| g == name).ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn generator_name(&self, index: usize) -> &str {
        &self.generators[index]
    }

    /// Stored `a < b` entries with nonzero result.
    pub fn stored_brackets(&self) -> impl Iterator<Item = ((usize, usize), &LinComb)> {
        self.brackets.iter().map(|(k, v)| (*k, v))
    }

    pub fn with_name(mut self, name: &str) -> LieAlgebra {
        self.name = name.to_string();
        self
    }

    /// Build a combination from `(generator name, coefficient)` pairs.
    pub fn lincomb(&self, terms: &[(&str, Scalar)]) -> Result<LinComb, AlgebraError> {
        let mut out = LinComb::zero();
        for (name, c) in terms {
            out.add_term(self.index_of(name)?, c.clone());
        }
        Ok(out)
    }

    /// `[G_a, G_b]` on basis elements.
    pub fn bracket_basis(&self, a: usize, b: usize) -> LinComb {
        use std::cmp::Ordering::*;
        match a.cmp(&b) {
            Equal => LinComb::zero(),
            Less => self.brackets.get(&(a, b)).cloned().unwrap_or_default(),
            Greater => self.brackets.get(&(b, a)).map(|c| -c).unwrap_or_default(),
        }
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &LinComb, y: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                let coeff = ca * cb;
                out += &self.bracket_basis(a, b).scale(&coeff);
            }
        }
        out
    }

    /// Bracket of two generators given by name.
    pub fn bracket_named(&self, a: &str, b: &str) -> Result<LinComb, AlgebraError> {
        Ok(self.bracket_basis(self.index_of(a)?, self.index_of(b)?))
    }

    pub fn is_central(&self, index: usize) -> bool {
        (0..self.dim()).all(|b| self.bracket_basis(index, b).is_zero())
    }

    /// Antisymmetry defects from construction plus every generator triple
    /// that violates Jacobi.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport { antisymmetry: self.defects.clone(), jacobi: Vec::new() };
        let n = self.dim();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let j = self.jacobi_sum(a, b, c);
                    if !j.is_zero() {
                        report.jacobi.push(JacobiViolation {
                            triple: [
                                self.generators[a].clone(),
                                self.generators[b].clone(),
                                self.generators[c].clone(),
                            ],
                            residue: j.display(self).to_string(),
                        });
                    }
                }
            }
        }
        report
    }

    /// `[[a,b],c] + [[b,c],a] + [[c,a],b]`.
    pub fn jacobi_sum(&self, a: usize, b: usize, c: usize) -> LinComb {
        let (ea, eb, ec) = (LinComb::basis(a), LinComb::basis(b), LinComb::basis(c));
        let mut sum = self.bracket(&self.bracket(&ea, &eb), &ec);
        sum += &self.bracket(&self.bracket(&eb, &ec), &ea);
        sum += &self.bracket(&self.bracket(&ec, &ea), &eb);
        sum
    }

    /// Append a generator that commutes with everything.
    pub fn trivial_extension(&self, name: &str) -> Result<LieAlgebra, AlgebraError> {
        if self.generators.iter().any(|g| g == name) {
            return Err(AlgebraError::DuplicateGenerator(name.to_string()));
        }
        let mut out = self.clone();
        out.generators.push(name.to_string());
        out.name = format!("{}+{}", self.name, name);
        Ok(out)
    }

    /// Append `central` and overwrite the listed brackets. Combinations are
    /// resolved against the extended basis, so they may mention `central`.
    /// The result must satisfy Jacobi.
    pub fn central_extension(&self, central: &str, overrides: &[Override]) -> Result<LieAlgebra, AlgebraError> {
        let mut out = self.trivial_extension(central)?;
        for (a, b, terms) in overrides {
            let ia = out.index_of(a)?;
            let ib = out.index_of(b)?;
            let comb = out.lincomb(terms)?;
            out.set_bracket(ia, ib, comb);
        }
        let report = out.validate();
        if !report.is_empty() {
            return Err(AlgebraError::InvalidCocycle(report));
        }
        Ok(out)
    }

    /// Set `[a, b]`, keeping the stored triangle `a < b`.
    pub(crate) fn set_bracket(&mut self, a: usize, b: usize, comb: LinComb) {
        use std::cmp::Ordering::*;
        let (key, value) = match a.cmp(&b) {
            Less => ((a, b), comb),
            Greater => ((b, a), -&comb),
            Equal => {
                if !comb.is_zero() {
                    self.defects.push(AntisymmetryViolation {
                        a: self.generators[a].clone(),
                        b: self.generators[b].clone(),
                        detail: format!("[{0}, {0}] = {1}, expected 0", self.generators[a], comb.display(self)),
                    });
                }
                return;
            }
        };
        if value.is_zero() {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, value);
        }
    }

    /// Rewrite the table in a new basis.
    pub fn change_basis(&self, change: &BasisChange) -> Result<LieAlgebra, AlgebraError> {
        let n = self.dim();
        if change.matrix.len() != n || change.matrix.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::DimensionMismatch { expected: n, got: change.matrix.len() });
        }
        let inverse = invert(&change.matrix)?;
        let rows: Vec<LinComb> = change
            .matrix
            .iter()
            .map(|row| {
                let mut c = LinComb::zero();
                for (j, s) in row.iter().enumerate() {
                    c.add_term(j, s.clone());
                }
                c
            })
            .collect();
        let mut builder = AlgebraBuilder::new(&self.name, self.symbols.clone(), change.names.clone())?;
        for a in 0..n {
            for b in a + 1..n {
                let old = self.bracket(&rows[a], &rows[b]);
                // old_d = sum_e inverse[d][e] new_e
                let mut new = LinComb::zero();
                for (d, coeff) in old.iter() {
                    for (e, inv) in inverse[d].iter().enumerate() {
                        new.add_term(e, coeff * inv);
                    }
                }
                builder.algebra.set_bracket(a, b, new);
            }
        }
        Ok(builder.build())
    }

    /// Direct sum; generator names clashing with `self` get a numeric suffix.
    pub fn direct_product(&self, other: &LieAlgebra) -> LieAlgebra {
        let mut names = self.generators.clone();
        for g in &other.generators {
            let mut candidate = g.clone();
            let mut k = 2;
            while names.contains(&candidate) {
                candidate = format!("{g}_{k}");
                k += 1;
            }
            names.push(candidate);
        }
        let mut symbols = self.symbols.clone();
        for s in &other.symbols {
            if !symbols.contains(s) {
                symbols.push(s.clone());
            }
        }
        let offset = self.dim();
        let mut brackets = self.brackets.clone();
        for ((a, b), c) in &other.brackets {
            brackets.insert((a + offset, b + offset), c.reindex(|k| k + offset));
        }
        let mut defects = self.defects.clone();
        defects.extend(other.defects.iter().cloned());
        LieAlgebra { name: format!("{}*{}", self.name, other.name), symbols, generators: names, brackets, defects }
    }

    /// Rename generators; the basis order is unchanged.
    pub fn rename_generators(&self, renaming: &Renaming) -> Result<LieAlgebra, AlgebraError> {
        let names: Vec<String> = self.generators.iter().map(|g| renaming.apply(g).to_string()).collect();
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(AlgebraError::BadRenaming("renamed generators collide".into()));
        }
        let mut out = self.clone();
        out.generators = names;
        Ok(out)
    }

    /// Apply `f` to every structure constant.
    pub(crate) fn map_structure_constants<E>(
        &self,
        name: &str,
        mut f: impl FnMut(usize, usize, usize, &Scalar) -> Result<Scalar, E>,
    ) -> Result<LieAlgebra, E> {
        let mut out = self.clone();
        out.name = name.to_string();
        out.brackets.clear();
        for (&(a, b), comb) in &self.brackets {
            let mapped = comb.map_coeffs(|d, c| f(a, b, d, c))?;
            if !mapped.is_zero() {
                out.brackets.insert((a, b), mapped);
            }
        }
        Ok(out)
    }

    pub(crate) fn add_symbol(&mut self, symbol: &str) {
        if !self.symbols.iter().any(|s| s == symbol) {
            self.symbols.push(symbol.to_string());
        }
    }
}

/// Incremental construction of a bracket table from raw entries.
#[derive(Debug, Clone)]
pub struct AlgebraBuilder {
    algebra: LieAlgebra,
    given: BTreeMap<(usize, usize), LinComb>,
}

impl AlgebraBuilder {
    pub fn new(name: &str, symbols: Vec<String>, generators: Vec<String>) -> Result<Self, AlgebraError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if !seen.insert(g.as_str()) {
                return Err(AlgebraError::DuplicateGenerator(g.clone()));
            }
        }
        Ok(AlgebraBuilder {
            algebra: LieAlgebra {
                name: name.to_string(),
                symbols,
                generators,
                brackets: BTreeMap::new(),
                defects: Vec::new(),
            },
            given: BTreeMap::new(),
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Record `[a, b] = result` by names. Entries may come in either
    /// orientation; contradicting orientations are recorded as defects.
    pub fn bracket(mut self, a: &str, b: &str, result: &[(&str, Scalar)]) -> Result<Self, AlgebraError> {
        let ia = self.algebra.index_of(a)?;
        let ib = self.algebra.index_of(b)?;
        let comb = self.algebra.lincomb(result)?;
        self.set(ia, ib, comb);
        Ok(self)
    }

    pub fn set(&mut self, a: usize, b: usize, comb: LinComb) {
        if a != b {
            let (key, oriented) = if a < b { ((a, b), comb.clone()) } else { ((b, a), -&comb) };
            if let Some(previous) = self.given.get(&key) {
                if *previous != oriented {
                    let alg = &self.algebra;
                    self.algebra.defects.push(AntisymmetryViolation {
                        a: alg.generators[a].clone(),
                        b: alg.generators[b].clone(),
                        detail: format!(
                            "[{}, {}] given as {} but the opposite entry implies {}",
                            alg.generators[key.0],
                            alg.generators[key.1],
                            oriented.display(alg),
                            previous.display(alg)
                        ),
                    });
                }
                return;
            }
            self.given.insert(key, oriented);
        }
        self.algebra.set_bracket(a, b, comb);
    }

    pub fn build(self) -> LieAlgebra {
        self.algebra
    }
}

/// Invertible change of generators: `new_i = sum_j matrix[i][j] * old_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisChange {
    pub names: Vec<String>,
    pub matrix: Vec<Vec<Scalar>>,
}

impl BasisChange {
    pub fn identity(algebra: &LieAlgebra) -> BasisChange {
        let n = algebra.dim();
        BasisChange {
            names: algebra.generators.clone(),
            matrix: (0..n)
                .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
                .collect(),
        }
    }

    /// Replace generator `old` by `new_name = combination`, keeping its slot.
    pub fn redefine(
        algebra: &LieAlgebra,
        old: &str,
        new_name: &str,
        combination: &[(&str, Scalar)],
    ) -> Result<BasisChange, AlgebraError> {
        let slot = algebra.index_of(old)?;
        let comb = algebra.lincomb(combination)?;
        let mut change = BasisChange::identity(algebra);
        change.names[slot] = new_name.to_string();
        change.matrix[slot] = (0..algebra.dim()).map(|j| comb.coeff(j)).collect();
        Ok(change)
    }

    /// `self` followed by `next`; the matrix of the composite is `next * self`.
    pub fn then(&self, next: &BasisChange) -> BasisChange {
        BasisChange { names: next.names.clone(), matrix: matmul(&next.matrix, &self.matrix) }
    }

    /// The change undoing `self`, mapping back to the generators of `original`.
    pub fn inverse(&self, original: &LieAlgebra) -> Result<BasisChange, AlgebraError> {
        Ok(BasisChange { names: original.generators.clone(), matrix: invert(&self.matrix)? })
    }
}

fn matmul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| {
                    let mut acc = Scalar::zero();
                    for (k, bk) in b.iter().enumerate() {
                        acc += &(&a[i][k] * &bk[j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Gauss-Jordan over the scalar ring. Pivots must be units.
fn invert(matrix: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>, AlgebraError> {
    let n = matrix.len();
    let mut a: Vec<Vec<Scalar>> = matrix.to_vec();
    let mut inv: Vec<Vec<Scalar>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| a[r][col].try_inverse().is_ok());
        let Some(p) = pivot_row else {
            return match (col..n).find(|&r| !a[r][col].is_zero()) {
                Some(r) => Err(AlgebraError::NonUnitPivot(a[r][col].to_string())),
                None => Err(AlgebraError::SingularBasisChange),
            };
        };
        a.swap(col, p);
        inv.swap(col, p);
        let pinv = a[col][col].try_inverse()?;
        for j in 0..n {
            a[col][j] = &a[col][j] * &pinv;
            inv[col][j] = &inv[col][j] * &pinv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let da = &factor * &a[col][j];
                let di = &factor * &inv[col][j];
                a[r][j] = &a[r][j] - &da;
                inv[r][j] = &inv[r][j] - &di;
            }
        }
    }
    Ok(inv)
}

/// Name map between two algebras. Names not listed map to themselves.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Renaming(BTreeMap<String, String>);

impl Renaming {
    pub fn identity() -> Self {
        Renaming::default()
    }

    pub fn from_pairs<I, A, B>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<String>,
        B: Into<String>,
    {
        Renaming(pairs.into_iter().map(|(a, b)| (a.into(), b.into())).collect())
    }

    pub fn apply<'a>(&'a self, name: &'a str) -> &'a str {
        self.0.get(name).map_or(name, String::as_str)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    /// Index map from `from` to `to`; must be a total bijection.
    pub fn index_map(&self, from: &LieAlgebra, to: &LieAlgebra) -> Result<Vec<usize>, AlgebraError> {
        if from.dim() != to.dim() {
            return Err(AlgebraError::BadRenaming(format!("dimensions differ ({} vs {})", from.dim(), to.dim())));
        }
        for key in self.0.keys() {
            if from.index_of(key).is_err() {
                return Err(AlgebraError::BadRenaming(format!("`{key}` is not a generator of {}", from.name)));
            }
        }
        let mut map = Vec::with_capacity(from.dim());
        let mut hit = BTreeSet::new();
        for g in &from.generators {
            let target = self.apply(g);
            let idx = to
                .index_of(target)
                .map_err(|_| AlgebraError::BadRenaming(format!("`{g}` maps to `{target}`, absent from {}", to.name)))?;
            if !hit.insert(idx) {
                return Err(AlgebraError::BadRenaming(format!("`{target}` is hit twice")));
            }
            map.push(idx);
        }
        Ok(map)
    }

    pub fn inverse(&self) -> Renaming {
        Renaming(self.0.iter().map(|(a, b)| (b.clone(), a.clone())).collect())
    }
}

/// Totally antisymmetric symbol on `{x, y, z}` with `eps_xyz = +1`.
pub fn levi_civita(i: usize, j: usize, k: usize) -> i64 {
    if i == j || j == k || i == k {
        return 0;
    }
    // even permutations of (0, 1, 2)
    if (i, j, k) == (0, 1, 2) || (i, j, k) == (1, 2, 0) || (i, j, k) == (2, 0, 1) {
        1
    } else {
        -1
    }
}
