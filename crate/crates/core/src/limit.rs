//! Small-velocity boosts realized in the Heisenberg algebra.
//!
//! With `K_i = m0 c^2 X_i - c t P_i` and `J_i = eps_ijk X_j P_k`, the boost
//! relations of the mass-extended Galilei algebra are recovered once the
//! central element `Z` is set to 1 and then `c` to 1. The energy
//! `m0 c^2 + P.P/(2 m0)` has a `1/m0`, so its bracket is checked after
//! multiplying through by `2 m0`.

use serde::Serialize;

use crate::algebra::{levi_civita, AlgebraError, LieAlgebra};
use crate::catalog::{self, AXES};
use crate::scalar::{Scalar, ScalarError};
use crate::uea::{Element, Substitution, Uea, UeaError};

#[derive(Debug, thiserror::Error)]
pub enum LimitError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `lhs = rhs` after specialization, with the difference kept.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: Element,
    pub rhs: Element,
    pub residue: Element,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.residue.is_zero()
    }
}

/// Serializable summary of an [`IdentityCheck`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityLine {
    pub name: String,
    pub holds: bool,
    pub residue: String,
}

/// All identities checked, and the algebra they live in.
#[derive(Debug, Clone)]
pub struct LimitReport {
    pub algebra: LieAlgebra,
    pub checks: Vec<IdentityCheck>,
}

impl LimitReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }

    pub fn lines(&self) -> Vec<IdentityLine> {
        self.checks
            .iter()
            .map(|c| IdentityLine {
                name: c.name.clone(),
                holds: c.holds(),
                residue: c.residue.display(&self.algebra).to_string(),
            })
            .collect()
    }
}

struct Realization<'a> {
    uea: Uea<'a>,
    x: [Element; 3],
    p: [Element; 3],
    specialize: Substitution,
}

impl Realization<'_> {
    fn boost(&self, i: usize) -> Element {
        let m0c2 = &Scalar::symbol("m0") * &Scalar::symbol("c").pow(2).expect("nonnegative power");
        let ct = &Scalar::symbol("c") * &Scalar::symbol("t");
        &self.x[i].scale(&m0c2) - &self.p[i].scale(&ct)
    }

    fn rotation(&self, i: usize) -> Result<Element, UeaError> {
        let mut out = Element::zero();
        for j in 0..3 {
            for k in 0..3 {
                let s = levi_civita(i, j, k);
                if s != 0 {
                    out += &self.uea.product(&self.x[j], &self.p[k])?.scale(&Scalar::integer(s));
                }
            }
        }
        Ok(out)
    }

    /// `2 m0` times the small-velocity energy.
    fn scaled_energy(&self) -> Result<Element, UeaError> {
        let m0c = &Scalar::symbol("m0") * &Scalar::symbol("c");
        let mut out = Element::scalar(&(&m0c * &m0c) * &Scalar::integer(2));
        for p in &self.p {
            out += &self.uea.product(p, p)?;
        }
        Ok(out)
    }

    /// `Z -> 1`, then `c -> 1`.
    fn special(&self, e: &Element) -> Result<Element, LimitError> {
        let e = self.uea.substitute(e, &self.specialize)?;
        Ok(e.substitute_symbol("c", &Scalar::one())?)
    }

    fn check(&self, name: String, lhs: &Element, rhs: &Element) -> Result<IdentityCheck, LimitError> {
        let lhs = self.special(lhs)?;
        let rhs = self.special(rhs)?;
        let residue = &lhs - &rhs;
        Ok(IdentityCheck { name, lhs, rhs, residue })
    }
}

/// Boost relations recovered from the Heisenberg realization.
pub fn traditional_limit_report() -> Result<LimitReport, LimitError> {
    let algebra = catalog::heisenberg3()?;
    let checks = {
        let uea = Uea::new(&algebra);
        let gen = |name: String| uea.generator(&name);
        let r = Realization {
            uea,
            x: [gen("Xx".into())?, gen("Xy".into())?, gen("Xz".into())?],
            p: [gen("Px".into())?, gen("Py".into())?, gen("Pz".into())?],
            specialize: Substitution::new().with_scalar(algebra.index_of("Z")?, Scalar::one()),
        };
        let k: Vec<Element> = (0..3).map(|i| r.boost(i)).collect();
        let j: Vec<Element> = (0..3).map(|i| r.rotation(i)).collect::<Result<_, _>>()?;
        let energy = r.scaled_energy()?;
        let i_unit = Scalar::i();
        let m0 = Scalar::symbol("m0");
        let mut checks = Vec::new();

        for a in 0..3 {
            for b in 0..3 {
                let name = format!("[K{}, K{}] = 0", AXES[a], AXES[b]);
                checks.push(r.check(name, &uea.commutator(&k[a], &k[b])?, &Element::zero())?);
            }
        }
        for a in 0..3 {
            for b in 0..3 {
                let mut rhs = Element::zero();
                let mut text = "0".to_string();
                for c in 0..3 {
                    let s = levi_civita(a, b, c);
                    if s != 0 {
                        rhs += &k[c].scale(&(&i_unit * &Scalar::integer(s)));
                        text = format!("{}i K{}", if s < 0 { "-" } else { "" }, AXES[c]);
                    }
                }
                let name = format!("[J{}, K{}] = {text}", AXES[a], AXES[b]);
                checks.push(r.check(name, &uea.commutator(&j[a], &k[b])?, &rhs)?);
            }
        }
        for a in 0..3 {
            let name = format!("[K{}, 2 m0 H] = 2 m0 i P{}", AXES[a], AXES[a]);
            let rhs = r.p[a].scale(&(&(&m0 * &Scalar::integer(2)) * &i_unit));
            checks.push(r.check(name, &uea.commutator(&k[a], &energy)?, &rhs)?);
        }
        for a in 0..3 {
            for b in 0..3 {
                let rhs = if a == b { Element::scalar(&i_unit * &m0) } else { Element::zero() };
                let name = format!("[K{}, P{}] = {}", AXES[a], AXES[b], if a == b { "i m0" } else { "0" });
                checks.push(r.check(name, &uea.commutator(&k[a], &r.p[b])?, &rhs)?);
            }
        }
        checks
    };
    Ok(LimitReport { algebra, checks })
}
