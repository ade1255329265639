//! Printed Casimir operators of the catalog groups.
//!
//! Each entry is kept as expression text with index sums written out, in
//! the operator order of the printed formula. [`verify`] checks the text as
//! written and falls back to the symmetrized reading when that fails.
//!
//! The printed fourth-order invariants carry a cross term
//! `-2 E J^k eps_ijk P^i K^j` whose sign does not match the bracket tables
//! (`[K_i, P_j] = i delta_ij E`): the invariant of those tables is
//! `(E J - K x P)^2`, which has the opposite sign there. No reordering can
//! fix a leading-order sign, so the printed entries fail in both orderings.
//! [`reversed_cross_term`] builds the same expressions with that one sign
//! flipped for comparison; they pass once symmetrized.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{levi_civita, LieAlgebra};
use crate::catalog::{self, Catalog, CatalogError, AXES};
use crate::expr::{self, ExprError, Ordering, Resolver};
use crate::scalar::Scalar;
use crate::uea::{CasimirCheck, Element, Substitution, Uea, UeaError};

#[derive(Debug, Error)]
pub enum CasimirError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{label}: {source}")]
    Expr { label: String, source: ExprError },
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error("no Casimir labeled {label}")]
    UnknownLabel { label: String },
}

/// A Casimir as printed: label plus expression text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Printed {
    pub label: String,
    pub text: String,
}

/// Result of checking one printed Casimir.
#[derive(Debug, Clone)]
pub struct Verification {
    pub label: String,
    pub text: String,
    pub verbatim: CasimirCheck,
    /// Only computed when the verbatim reading fails.
    pub symmetrized: Option<CasimirCheck>,
    /// Ordering that passed, if any.
    pub ordering: Option<Ordering>,
    /// Element in the passing ordering, or the last one tried.
    pub element: Element,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.ordering.is_some()
    }
}

fn sum_of(terms: &[String]) -> String {
    format!("({})", terms.join(" + "))
}

/// `a_x*b_x + a_y*b_y + a_z*b_z`, parenthesized.
pub fn dot(a: &str, b: &str) -> String {
    sum_of(&AXES.iter().map(|x| format!("{a}{x}*{b}{x}")).collect::<Vec<_>>())
}

/// `eps_ijk J^k P^i K^j` written out as six signed triple products.
pub fn triple(j: &str, p: &str, k: &str) -> String {
    let mut out = String::from("(");
    for (i, xi) in AXES.iter().enumerate() {
        for (jj, xj) in AXES.iter().enumerate() {
            for (kk, xk) in AXES.iter().enumerate() {
                let sign = levi_civita(i, jj, kk);
                if sign == 0 {
                    continue;
                }
                let word = format!("{j}{xk}*{p}{xi}*{k}{xj}");
                if out.len() == 1 {
                    out.push_str(if sign < 0 { "-" } else { "" });
                } else {
                    out.push_str(if sign < 0 { " - " } else { " + " });
                }
                out.push_str(&word);
            }
        }
    }
    out.push(')');
    out
}

/// Sign in front of the `2 E J.(P x K)` term of a fourth-order invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossTerm {
    /// As printed: `- 2*E*(...)`.
    Printed,
    /// Flipped: `+ 2*E*(...)`.
    Reversed,
}

impl CrossTerm {
    fn op(self) -> &'static str {
        match self {
            CrossTerm::Printed => "-",
            CrossTerm::Reversed => "+",
        }
    }
}

fn entry(label: &str, text: String) -> Printed {
    Printed { label: label.to_string(), text }
}

fn galilei_set(cross: CrossTerm) -> Vec<Printed> {
    vec![
        entry("C1^G", "M".into()),
        entry("C2^G", format!("M*H - {}/2", dot("P", "P"))),
        entry(
            "C4^G",
            format!(
                "M^2*{} + {}*{} - {}^2 {} 2*M*{}",
                dot("J", "J"),
                dot("P", "P"),
                dot("KG", "KG"),
                dot("P", "KG"),
                cross.op(),
                triple("J", "P", "KG")
            ),
        ),
    ]
}

fn poincare_set(cross: CrossTerm) -> Vec<Printed> {
    vec![
        entry("C2^P", format!("H^2 - {}", dot("P", "P"))),
        entry(
            "C4^P",
            format!(
                "H^2*{} + {}*{} - {}^2 - {}^2 {} 2*H*{}",
                dot("J", "J"),
                dot("P", "P"),
                dot("KP", "KP"),
                dot("J", "P"),
                dot("P", "KP"),
                cross.op(),
                triple("J", "P", "KP")
            ),
        ),
    ]
}

/// Extended-Poincaré set with the shifted energy written as `hb`.
fn extended_set(hb: &str, cross: CrossTerm) -> Vec<Printed> {
    vec![
        entry("C1^PE", "M".into()),
        entry("C2^PE", format!("-{} + {hb}^2 + M^2 + 2*{hb}*M", dot("P", "P"))),
        entry(
            "C4^PE",
            format!(
                "({hb} + M)^2*{} - {}^2 + {}*{} - {}^2 {} 2*({hb} + M)*{}",
                dot("J", "J"),
                dot("J", "P"),
                dot("P", "P"),
                dot("KP", "KP"),
                dot("P", "KP"),
                cross.op(),
                triple("J", "P", "KP")
            ),
        ),
    ]
}

fn u1_set() -> Vec<Printed> {
    vec![entry("C1^U", "Q".into())]
}

fn casimir_set(name: &str, cross: CrossTerm) -> Result<Vec<Printed>, CasimirError> {
    Ok(match name {
        "galilei" | "heisenberg3" => Vec::new(),
        "galilei_central" => galilei_set(cross),
        "poincare" => poincare_set(cross),
        "poincare_trivial_ext" => extended_set("Hb", cross),
        "poincare_trivial_ext_h" => extended_set("(H - M)", cross),
        "u1" => u1_set(),
        "full_relativistic" => [extended_set("Hb", cross), u1_set()].concat(),
        "full_nonrelativistic" => [galilei_set(cross), u1_set()].concat(),
        other => return Err(CatalogError::UnknownAlgebra(other.to_string()).into()),
    })
}

/// Printed Casimirs for a catalog name. Groups with no printed Casimirs
/// (`galilei`, `heisenberg3`) give an empty list.
pub fn printed(name: &str) -> Result<Vec<Printed>, CasimirError> {
    casimir_set(name, CrossTerm::Printed)
}

/// The fourth-order entries of `name` with the cross-term sign flipped.
pub fn reversed_cross_term(name: &str) -> Result<Vec<Printed>, CasimirError> {
    Ok(casimir_set(name, CrossTerm::Reversed)?
        .into_iter()
        .filter(|p| p.label.starts_with("C4"))
        .map(|p| Printed { label: format!("{} (reversed cross term)", p.label), text: p.text })
        .collect())
}

/// Look up one printed entry by label.
pub fn printed_entry(name: &str, label: &str) -> Result<Printed, CasimirError> {
    printed(name)?
        .into_iter()
        .find(|p| p.label == label)
        .ok_or_else(|| CasimirError::UnknownLabel { label: label.to_string() })
}

/// Check `printed` on `algebra`: verbatim first, then symmetrized.
pub fn verify(algebra: &LieAlgebra, printed: &Printed) -> Result<Verification, CasimirError> {
    let uea = Uea::new(algebra);
    let wrap = |source| CasimirError::Expr { label: printed.label.clone(), source };
    let tree = expr::parse(&printed.text, &Resolver::for_algebra(algebra)).map_err(wrap)?;
    let verbatim_el = tree.evaluate(&uea, Ordering::Verbatim).map_err(wrap)?;
    let verbatim = uea.is_casimir(&verbatim_el)?;
    let mut v = Verification {
        label: printed.label.clone(),
        text: printed.text.clone(),
        verbatim,
        symmetrized: None,
        ordering: None,
        element: verbatim_el,
    };
    if v.verbatim.holds() {
        v.ordering = Some(Ordering::Verbatim);
        return Ok(v);
    }
    let sym_el = tree.evaluate(&uea, Ordering::Symmetrized).map_err(wrap)?;
    let sym = uea.is_casimir(&sym_el)?;
    if sym.holds() {
        v.ordering = Some(Ordering::Symmetrized);
    }
    v.symmetrized = Some(sym);
    v.element = sym_el;
    Ok(v)
}

/// Verify every printed Casimir of `name` against the algebra in `catalog`.
pub fn verify_all(catalog: &Catalog, name: &str) -> Result<Vec<Verification>, CasimirError> {
    let algebra = catalog.get(name)?;
    printed(name)?.iter().map(|p| verify(algebra, p)).collect()
}

/// Every printed Casimir of `name` in the standard catalog, verified.
pub fn casimir_catalog(name: &str) -> Result<Vec<Verification>, CasimirError> {
    let algebra = catalog::algebra(name)?;
    printed(name)?.iter().map(|p| verify(&algebra, p)).collect()
}

/// Element of a printed entry in the given ordering.
pub fn element(algebra: &LieAlgebra, printed: &Printed, ordering: Ordering) -> Result<Element, CasimirError> {
    let wrap = |source| CasimirError::Expr { label: printed.label.clone(), source };
    let tree = expr::parse(&printed.text, &Resolver::for_algebra(algebra)).map_err(wrap)?;
    tree.evaluate(&Uea::new(algebra), ordering).map_err(wrap)
}

/// Formal rest-frame substitution: `Px, Py, Pz -> 0` plus the given
/// generator values.
pub fn rest_frame(algebra: &LieAlgebra, values: &[(&str, Scalar)]) -> Result<Substitution, CasimirError> {
    let mut s = Substitution::formal();
    for a in AXES {
        s = s.with_scalar(index(algebra, &format!("P{a}"))?, Scalar::zero());
    }
    for (g, v) in values {
        s = s.with_scalar(index(algebra, g)?, v.clone());
    }
    Ok(s)
}

fn index(algebra: &LieAlgebra, name: &str) -> Result<usize, CasimirError> {
    algebra.index_of(name).map_err(|_| CasimirError::UnknownLabel { label: name.to_string() })
}
