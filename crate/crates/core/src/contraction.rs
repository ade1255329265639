//! Inonu-Wigner contractions.
//!
//! A [`RescalingMap`] assigns each generator an exponent `k`, with
//! `G' = eps^k G`. Structure constants become `eps^(k_a + k_b - k_d) c_ab^d`;
//! contracting keeps the `eps^0` part and fails on any pole. Enveloping
//! algebra elements are rescaled through `G = eps^-k G'`, multiplied by a
//! compensating power and sent to the same limit.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra, Renaming, ValidationReport};
use crate::casimir::{self, CasimirError, Printed};
use crate::catalog;
use crate::expr::Ordering;
use crate::scalar::{Scalar, EPS};
use crate::uea::{Element, Substitution, Uea, UeaError};

/// Auto power search window.
pub const POWER_WINDOW: i32 = 10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ContractionError {
    #[error("rescaling map has no exponent for {}", .0.join(", "))]
    MissingExponents(Vec<String>),
    #[error("rescaling map names `{0}`, which is not a generator")]
    UnknownGenerator(String),
    #[error("divergent contraction: {}", poles.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    DivergentContraction { poles: Vec<Pole> },
    #[error("contracted table is not a Lie algebra:\n{0}")]
    InvalidResult(ValidationReport),
    #[error("limit diverges at power {power}: residual pole of order {pole_order}")]
    DivergentLimit { power: i32, pole_order: u32 },
    #[error("no power in [-{w}, {w}] gives a finite nonzero limit", w = POWER_WINDOW)]
    NoFinitePower,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Uea(#[from] UeaError),
}

/// A structure constant with a negative power of `eps` after rescaling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pole {
    pub a: String,
    pub b: String,
    pub target: String,
    pub order: u32,
}

impl fmt::Display for Pole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] -> {} has a pole of order {}", self.a, self.b, self.target, self.order)
    }
}

/// Per-generator `eps` exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RescalingMap(BTreeMap<String, i32>);

impl RescalingMap {
    pub fn new<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, i32)>,
        S: Into<String>,
    {
        RescalingMap(pairs.into_iter().map(|(g, k)| (g.into(), k)).collect())
    }

    /// Every generator of `algebra` with exponent 0.
    pub fn zero(algebra: &LieAlgebra) -> Self {
        RescalingMap::new(algebra.generator_names().iter().map(|g| (g.clone(), 0)))
    }

    /// `P, KP -> 1`, `M -> 2`, the rest 0.
    pub fn speed_space(algebra: &LieAlgebra) -> Self {
        RescalingMap(catalog::speed_space_exponents(algebra))
    }

    pub fn exponent(&self, generator: &str) -> Option<i32> {
        self.0.get(generator).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i32)> {
        self.0.iter().map(|(g, &k)| (g.as_str(), k))
    }

    /// Exponentwise sum; generators missing from one side count as 0.
    pub fn plus(&self, other: &RescalingMap) -> RescalingMap {
        let mut out = self.0.clone();
        for (g, k) in &other.0 {
            *out.entry(g.clone()).or_insert(0) += k;
        }
        RescalingMap(out)
    }

    /// Exponents in basis order; the map must cover exactly the generators.
    pub fn exponents(&self, algebra: &LieAlgebra) -> Result<Vec<i32>, ContractionError> {
        if let Some(extra) = self.0.keys().find(|g| algebra.index_of(g).is_err()) {
            return Err(ContractionError::UnknownGenerator(extra.clone()));
        }
        let missing: Vec<String> =
            algebra.generator_names().iter().filter(|g| !self.0.contains_key(*g)).cloned().collect();
        if !missing.is_empty() {
            return Err(ContractionError::MissingExponents(missing));
        }
        Ok(algebra.generator_names().iter().map(|g| self.0[g]).collect())
    }
}

/// Structure constants with `eps` weights, before any limit.
pub fn rescale_algebra(algebra: &LieAlgebra, map: &RescalingMap) -> Result<LieAlgebra, ContractionError> {
    let k = map.exponents(algebra)?;
    let mut out = algebra.map_structure_constants(&format!("{}_rescaled", algebra.name()), |a, b, d, c| {
        Ok::<_, ContractionError>(c * &Scalar::eps_pow(k[a] + k[b] - k[d]))
    })?;
    out.add_symbol(EPS);
    let report = out.validate();
    if !report.is_empty() {
        return Err(ContractionError::InvalidResult(report));
    }
    Ok(out)
}

/// `eps -> 0` limit of the rescaled table, validated.
pub fn contract(algebra: &LieAlgebra, map: &RescalingMap) -> Result<LieAlgebra, ContractionError> {
    let k = map.exponents(algebra)?;
    let mut poles = Vec::new();
    let out = algebra.map_structure_constants(&format!("{}_contracted", algebra.name()), |a, b, d, c| {
        let scaled = c * &Scalar::eps_pow(k[a] + k[b] - k[d]);
        Ok::<_, ContractionError>(match scaled.eps_limit() {
            Ok(v) => v,
            Err(order) => {
                poles.push(Pole {
                    a: algebra.generator_name(a).to_string(),
                    b: algebra.generator_name(b).to_string(),
                    target: algebra.generator_name(d).to_string(),
                    order,
                });
                Scalar::zero()
            }
        })
    })?;
    if !poles.is_empty() {
        return Err(ContractionError::DivergentContraction { poles });
    }
    let report = out.validate();
    if !report.is_empty() {
        return Err(ContractionError::InvalidResult(report));
    }
    Ok(out)
}

/// One bracket that differs between two tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BracketMismatch {
    pub left: String,
    pub right: String,
}

/// Result of [`tables_equal`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct TableDiff {
    pub mismatches: Vec<BracketMismatch>,
}

impl TableDiff {
    pub fn is_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for TableDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_equal() {
            return write!(f, "tables equal");
        }
        for m in &self.mismatches {
            writeln!(f, "{}  vs  {}", m.left, m.right)?;
        }
        Ok(())
    }
}

/// Compare every bracket of `a` with the corresponding bracket of `b`,
/// identifying generators through `renaming`.
pub fn tables_equal(a: &LieAlgebra, b: &LieAlgebra, renaming: &Renaming) -> Result<TableDiff, ContractionError> {
    let map = renaming.index_map(a, b)?;
    let mut diff = TableDiff::default();
    for x in 0..a.dim() {
        for y in x + 1..a.dim() {
            let left = a.bracket_basis(x, y);
            let right = b.bracket_basis(map[x], map[y]);
            if left.reindex(|d| map[d]) != right {
                diff.mismatches.push(BracketMismatch {
                    left: format!("[{}, {}] = {}", a.generator_name(x), a.generator_name(y), left.display(a)),
                    right: format!(
                        "[{}, {}] = {}",
                        b.generator_name(map[x]),
                        b.generator_name(map[y]),
                        right.display(b)
                    ),
                });
            }
        }
    }
    Ok(diff)
}

/// Carry an element of `from` into `to` through `renaming`, renormalized.
pub fn map_element(
    e: &Element,
    from: &LieAlgebra,
    to: &LieAlgebra,
    renaming: &Renaming,
) -> Result<Element, ContractionError> {
    let map = renaming.index_map(from, to)?;
    Ok(Uea::new(to).normal_form(&e.reindex(&map))?)
}

/// Rewrite `e` in rescaled generators: each letter `a` contributes
/// `eps^-k_a`.
pub fn rescale_element(algebra: &LieAlgebra, e: &Element, map: &RescalingMap) -> Result<Element, ContractionError> {
    let k = map.exponents(algebra)?;
    let e = Uea::new(algebra).normal_form(e)?;
    e.map_terms(|w, c| {
        let total: i32 = w.letters().iter().map(|&l| k[l as usize]).sum();
        Ok::<_, ContractionError>(c * &Scalar::eps_pow(-total))
    })
}

/// Compensating power for [`contract_casimir`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Power {
    Auto,
    Fixed(i32),
}

/// Outcome of [`contract_casimir`].
#[derive(Debug, Clone, PartialEq)]
pub struct ContractedElement {
    pub element: Element,
    pub power: i32,
    /// Set when the requested power sends everything to zero.
    pub zero_limit: bool,
}

fn limit_at(rescaled: &Element, power: i32) -> Result<Element, u32> {
    let factor = Scalar::eps_pow(power);
    rescaled.map_terms(|_, c| (c * &factor).eps_limit())
}

/// `lim eps^power * rescale_element(e)`. With [`Power::Auto`] the smallest
/// power in the window giving a finite nonzero limit is used.
pub fn contract_casimir(
    algebra: &LieAlgebra,
    e: &Element,
    map: &RescalingMap,
    power: Power,
) -> Result<ContractedElement, ContractionError> {
    let rescaled = rescale_element(algebra, e, map)?;
    match power {
        Power::Fixed(p) => match limit_at(&rescaled, p) {
            Ok(element) => {
                Ok(ContractedElement { zero_limit: element.is_zero() && !rescaled.is_zero(), element, power: p })
            }
            Err(pole_order) => Err(ContractionError::DivergentLimit { power: p, pole_order }),
        },
        Power::Auto => {
            for p in -POWER_WINDOW..=POWER_WINDOW {
                if let Ok(element) = limit_at(&rescaled, p) {
                    if !element.is_zero() {
                        return Ok(ContractedElement { element, power: p, zero_limit: false });
                    }
                }
            }
            Err(ContractionError::NoFinitePower)
        }
    }
}

/// Every stage of the speed-space contraction of extended Poincare.
#[derive(Debug, Clone)]
pub struct Pipeline {
    /// Trivially extended Poincare in the `H` basis.
    pub extended: LieAlgebra,
    /// Same algebra in the `Hb = H - M` basis.
    pub shifted: LieAlgebra,
    pub map: RescalingMap,
    pub rescaled: LieAlgebra,
    pub contracted: LieAlgebra,
}

impl Pipeline {
    pub fn speed_space() -> Result<Pipeline, ContractionError> {
        let extended = catalog::poincare_trivial_ext_h()?;
        let shifted = extended.change_basis(&catalog::hbar_basis_change(&extended)?)?.with_name("poincare_trivial_ext");
        Pipeline::from_shifted(extended, shifted)
    }

    pub fn from_shifted(extended: LieAlgebra, shifted: LieAlgebra) -> Result<Pipeline, ContractionError> {
        let map = RescalingMap::speed_space(&shifted);
        let rescaled = rescale_algebra(&shifted, &map)?;
        let contracted = contract(&shifted, &map)?;
        Ok(Pipeline { extended, shifted, map, rescaled, contracted })
    }
}

#[derive(Debug, Error)]
pub enum LimitCheckError {
    #[error(transparent)]
    Contraction(#[from] ContractionError),
    #[error(transparent)]
    Casimir(#[from] CasimirError),
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error(transparent)]
    Scalar(#[from] crate::scalar::ScalarError),
}

/// One line of [`conceptual_limit_check`].
#[derive(Debug, Clone)]
pub struct LimitComparison {
    pub name: String,
    pub left: Element,
    pub right: Element,
    pub equal: bool,
    /// `left - right`, printed in the algebra both sides live in.
    pub residue: String,
}

impl LimitComparison {
    fn new(name: &str, left: Element, right: Element, algebra: &LieAlgebra) -> Self {
        let residue = (&left - &right).display(algebra).to_string();
        LimitComparison { name: name.to_string(), equal: left == right, left, right, residue }
    }
}

/// Contracted Casimirs compared with their Galilei counterparts: in the
/// rest frame `P -> 0, Hb -> w, M -> m` and then `m = w = m0`, C2 equals C1
/// squared; C4 matches the Galilei C4 under the contraction renaming; C1 is
/// the mass.
pub fn conceptual_limit_check(ordering: Ordering) -> Result<Vec<LimitComparison>, LimitCheckError> {
    let pipe = Pipeline::speed_space()?;
    let name = "poincare_trivial_ext";
    let contracted_of = |label: &str| -> Result<Element, LimitCheckError> {
        let e = casimir::element(&pipe.shifted, &casimir::printed_entry(name, label)?, ordering)?;
        Ok(contract_casimir(&pipe.shifted, &e, &pipe.map, Power::Auto)?.element)
    };
    let c1 = contracted_of("C1^PE")?;
    let c2 = contracted_of("C2^PE")?;
    let c4 = contracted_of("C4^PE")?;
    let alg = &pipe.contracted;
    let uea = Uea::new(alg);

    let idx = |g: &str| alg.index_of(g).map_err(ContractionError::from);
    let mut rest =
        Substitution::formal().with_scalar(idx("Hb")?, Scalar::symbol("w")).with_scalar(idx("M")?, Scalar::symbol("m"));
    for a in catalog::AXES {
        rest = rest.with_scalar(idx(&format!("P{a}"))?, Scalar::zero());
    }
    let at_rest = |e: &Element| -> Result<Element, LimitCheckError> {
        let s = uea.substitute(e, &rest)?;
        let s = s.substitute_symbol("m", &Scalar::symbol("m0"))?;
        Ok(s.substitute_symbol("w", &Scalar::symbol("m0"))?)
    };
    let mut out = Vec::new();
    let c1_sq = uea.power(&c1, 2)?;
    let (l, r) = (at_rest(&c2)?, at_rest(&c1_sq)?);
    out.push(LimitComparison::new("C2 = (C1)^2 at rest, m = w = m0", l, r, alg));

    let galilei = catalog::galilei_central().map_err(ContractionError::from)?;
    let g4 = casimir::element(&galilei, &casimir::printed_entry("galilei_central", "C4^G")?, ordering)?;
    let mapped = map_element(&c4, alg, &galilei, &catalog::contraction_renaming())?;
    out.push(LimitComparison::new("C4 = Galilei C4 under renaming", mapped, g4, &galilei));

    let m = Element::generator(idx("M")?);
    out.push(LimitComparison::new("C1 = M", c1, m, alg));
    Ok(out)
}

/// Printed rescaled forms of the extended Casimirs, in rescaled generators.
pub fn printed_rescaled() -> Vec<Printed> {
    let pp = casimir::dot("P", "P");
    vec![
        Printed { label: "C1^PE rescaled".into(), text: "eps^-2*M".into() },
        Printed { label: "C2^PE rescaled".into(), text: format!("-eps^-2*{pp} + Hb^2 + eps^-4*M^2 + 2*eps^-2*Hb*M") },
        Printed {
            label: "C4^PE rescaled".into(),
            text: format!(
                "(Hb + eps^-2*M)^2*{} - eps^-2*{}^2 + eps^-4*{pp}*{} - eps^-4*{}^2 - 2*eps^-2*(Hb + eps^-2*M)*{}",
                casimir::dot("J", "J"),
                casimir::dot("J", "P"),
                casimir::dot("KP", "KP"),
                casimir::dot("P", "KP"),
                casimir::triple("J", "P", "KP")
            ),
        },
    ]
}

/// Printed contracted forms, in contracted generators.
pub fn printed_contracted() -> Vec<Printed> {
    vec![
        Printed { label: "C1^PE contracted".into(), text: "M".into() },
        Printed { label: "C2^PE contracted".into(), text: "M^2".into() },
        Printed {
            label: "C4^PE contracted".into(),
            text: format!(
                "M^2*{} + {}*{} - {}^2 - 2*M*{}",
                casimir::dot("J", "J"),
                casimir::dot("P", "P"),
                casimir::dot("KP", "KP"),
                casimir::dot("P", "KP"),
                casimir::triple("J", "P", "KP")
            ),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expression;

    fn lc(alg: &LieAlgebra, text: &str) -> Element {
        parse_expression(text, alg).unwrap()
    }

    fn bracket_el(alg: &LieAlgebra, a: &str, b: &str) -> Element {
        Element::from_lincomb(&alg.bracket_named(a, b).unwrap())
    }

    #[test]
    fn rescaled_brackets() {
        let pipe = Pipeline::speed_space().unwrap();
        let r = &pipe.rescaled;
        assert_eq!(bracket_el(r, "KPx", "KPy"), lc(r, "-i*eps^2*Jz"));
        assert_eq!(bracket_el(r, "KPx", "Px"), lc(r, "i*eps^2*Hb + i*M"));
        assert_eq!(bracket_el(r, "KPx", "Hb"), lc(r, "i*Px"));
    }

    #[test]
    fn zero_map_is_identity() {
        let p = catalog::poincare().unwrap();
        let zero = RescalingMap::zero(&p);
        let c = contract(&p, &zero).unwrap();
        assert!(tables_equal(&c, &p, &Renaming::identity()).unwrap().is_equal());
        let r = rescale_algebra(&p, &zero).unwrap();
        assert!(tables_equal(&r, &p, &Renaming::identity()).unwrap().is_equal());
    }

    #[test]
    fn extended_poincare_contracts_to_mass_extended_galilei() {
        let pipe = Pipeline::speed_space().unwrap();
        let g = catalog::galilei_central().unwrap();
        let diff = tables_equal(&pipe.contracted, &g, &catalog::contraction_renaming()).unwrap();
        assert!(diff.is_equal(), "{diff}");
    }

    #[test]
    fn plain_poincare_contracts_to_plain_galilei() {
        let p = catalog::poincare().unwrap();
        let map = RescalingMap::speed_space(&p);
        let c = contract(&p, &map).unwrap();
        let g = catalog::galilei().unwrap();
        assert!(tables_equal(&c, &g, &catalog::poincare_to_galilei_renaming()).unwrap().is_equal());
    }

    #[test]
    fn poincare_and_galilei_tables_differ() {
        let p = catalog::poincare().unwrap();
        let g = catalog::galilei().unwrap();
        let diff = tables_equal(&p, &g, &catalog::poincare_to_galilei_renaming()).unwrap();
        assert!(diff.mismatches.iter().any(|m| m.left == "[KPx, KPy] = -i*Jz" && m.right == "[Gux, Guy] = 0"));
    }

    #[test]
    fn divergent_contraction_lists_poles() {
        // shrinking the energy instead of the boosts blows up [K, P]
        let p = catalog::poincare().unwrap();
        let mut map = RescalingMap::zero(&p);
        map.0.insert("H".into(), 1);
        match contract(&p, &map) {
            Err(ContractionError::DivergentContraction { poles }) => {
                assert!(poles.iter().any(|q| q.a == "Px" && q.b == "KPx" && q.target == "H" && q.order == 1));
                assert_eq!(poles.len(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn map_must_be_total() {
        let p = catalog::poincare().unwrap();
        let map = RescalingMap::new([("H", 0)]);
        assert!(matches!(contract(&p, &map), Err(ContractionError::MissingExponents(_))));
        let map = RescalingMap::zero(&p).plus(&RescalingMap::new([("Nope", 1)]));
        assert_eq!(contract(&p, &map), Err(ContractionError::UnknownGenerator("Nope".into())));
    }

    #[test]
    fn exponent_additivity() {
        let ext = catalog::poincare_trivial_ext().unwrap();
        let m1 = RescalingMap::speed_space(&ext);
        let m2 = RescalingMap::new(
            ext.generator_names().iter().map(|g| (g.clone(), if g.starts_with('J') { 1 } else { 0 })),
        );
        let twice = rescale_algebra(&rescale_algebra(&ext, &m1).unwrap(), &m2).unwrap();
        let once = rescale_algebra(&ext, &m1.plus(&m2)).unwrap();
        assert!(tables_equal(&twice, &once, &Renaming::identity()).unwrap().is_equal());
    }

    #[test]
    fn mass_casimir_rescales_and_contracts() {
        let pipe = Pipeline::speed_space().unwrap();
        let m = lc(&pipe.shifted, "M");
        assert_eq!(rescale_element(&pipe.shifted, &m, &pipe.map).unwrap(), lc(&pipe.rescaled, "eps^-2*M"));
        let c = contract_casimir(&pipe.shifted, &m, &pipe.map, Power::Fixed(2)).unwrap();
        assert_eq!((c.element, c.power, c.zero_limit), (lc(&pipe.contracted, "M"), 2, false));
        let z = contract_casimir(&pipe.shifted, &m, &pipe.map, Power::Fixed(3)).unwrap();
        assert!(z.zero_limit && z.element.is_zero());
    }

    #[test]
    fn quadratic_casimir_powers() {
        let pipe = Pipeline::speed_space().unwrap();
        let c2 = casimir::element(
            &pipe.shifted,
            &casimir::printed_entry("poincare_trivial_ext", "C2^PE").unwrap(),
            Ordering::Verbatim,
        )
        .unwrap();
        let auto = contract_casimir(&pipe.shifted, &c2, &pipe.map, Power::Auto).unwrap();
        assert_eq!((auto.power, auto.element), (4, lc(&pipe.contracted, "M^2")));
        assert_eq!(
            contract_casimir(&pipe.shifted, &c2, &pipe.map, Power::Fixed(2)),
            Err(ContractionError::DivergentLimit { power: 2, pole_order: 2 })
        );
    }
}
