//! Casimir operators read as the definite-valued observables of a group.
//!
//! A [`GroupDescriptor`] pairs each catalog Casimir with a physical quantity
//! and an eigenvalue label. States of `n` free particles are represented
//! only by `n`; square roots of Casimirs stay symbolic.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::casimir::{self, CasimirError, Verification};
use crate::catalog::Catalog;
use crate::scalar::Scalar;
use crate::uea::Element;

#[derive(Debug, Error)]
pub enum MhiError {
    #[error("no observables are defined for `{0}`")]
    UnknownGroup(String),
    #[error("particle number must be at least 1, got {0}")]
    NonPositive(i64),
    #[error(transparent)]
    Casimir(#[from] CasimirError),
}

/// Groups with a descriptor.
pub const GROUPS: &[&str] =
    &["galilei_central", "poincare_trivial_ext", "full_relativistic", "full_nonrelativistic", "u1"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Mass,
    InternalEnergy,
    Spin,
    Charge,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::Mass => "mass",
            Quantity::InternalEnergy => "internal energy",
            Quantity::Spin => "spin",
            Quantity::Charge => "charge",
        })
    }
}

/// One Casimir with its reading.
#[derive(Debug, Clone)]
pub struct Observable {
    pub casimir: String,
    /// Operator as named physically, e.g. `mW` or `m^2 S^2`.
    pub operator: String,
    pub quantity: Quantity,
    pub eigenvalue: Scalar,
    pub verification: Verification,
}

impl Observable {
    pub fn element(&self) -> &Element {
        &self.verification.element
    }

    pub fn is_casimir(&self) -> bool {
        self.verification.holds()
    }
}

#[derive(Debug, Clone)]
pub struct GroupDescriptor {
    pub group: String,
    pub observables: Vec<Observable>,
}

impl GroupDescriptor {
    pub fn quantities(&self) -> Vec<Quantity> {
        let mut q: Vec<Quantity> = self.observables.iter().map(|o| o.quantity).collect();
        q.sort();
        q.dedup();
        q
    }

    pub fn operators(&self) -> Vec<&str> {
        self.observables.iter().map(|o| o.operator.as_str()).collect()
    }

    pub fn all_casimir(&self) -> bool {
        self.observables.iter().all(Observable::is_casimir)
    }
}

fn sym(name: &str) -> Scalar {
    Scalar::symbol(name)
}

/// `base^2 * s * (s + 1)`
fn spin_label(base: &str) -> Scalar {
    let s = sym("s");
    &(&sym(base) * &sym(base)) * &(&s * &(&s + &Scalar::one()))
}

struct Reading {
    casimir: &'static str,
    operator: &'static str,
    quantity: Quantity,
    eigenvalue: Scalar,
}

fn readings(group: &str) -> Option<Vec<Reading>> {
    let galilei = || {
        vec![
            Reading { casimir: "C1^G", operator: "M", quantity: Quantity::Mass, eigenvalue: sym("m") },
            Reading {
                casimir: "C2^G",
                operator: "mW",
                quantity: Quantity::InternalEnergy,
                eigenvalue: &sym("m") * &sym("w"),
            },
            Reading { casimir: "C4^G", operator: "m^2 S^2", quantity: Quantity::Spin, eigenvalue: spin_label("m") },
        ]
    };
    let extended = || {
        vec![
            Reading { casimir: "C1^PE", operator: "M", quantity: Quantity::Mass, eigenvalue: sym("m0") },
            Reading {
                casimir: "C2^PE",
                operator: "M^2",
                quantity: Quantity::Mass,
                eigenvalue: &sym("m0") * &sym("m0"),
            },
            Reading { casimir: "C4^PE", operator: "m0^2 S^2", quantity: Quantity::Spin, eigenvalue: spin_label("m0") },
        ]
    };
    let charge = || vec![Reading { casimir: "C1^U", operator: "Q", quantity: Quantity::Charge, eigenvalue: sym("e") }];
    Some(match group {
        "galilei_central" => galilei(),
        "poincare_trivial_ext" => extended(),
        "u1" => charge(),
        "full_relativistic" => [extended(), charge()].into_iter().flatten().collect(),
        "full_nonrelativistic" => [galilei(), charge()].into_iter().flatten().collect(),
        _ => return None,
    })
}

/// Observables of `group`, each checked against the algebra in `catalog`.
pub fn actual_valued_observables_in(catalog: &Catalog, group: &str) -> Result<GroupDescriptor, MhiError> {
    let readings = readings(group).ok_or_else(|| MhiError::UnknownGroup(group.to_string()))?;
    let verifications = casimir::verify_all(catalog, group)?;
    let mut observables = Vec::new();
    for r in readings {
        let verification = verifications
            .iter()
            .find(|v| v.label == r.casimir)
            .cloned()
            .ok_or_else(|| CasimirError::UnknownLabel { label: r.casimir.to_string() })?;
        observables.push(Observable {
            casimir: r.casimir.to_string(),
            operator: r.operator.to_string(),
            quantity: r.quantity,
            eigenvalue: r.eigenvalue,
            verification,
        });
    }
    Ok(GroupDescriptor { group: group.to_string(), observables })
}

/// [`actual_valued_observables_in`] on the standard catalog.
pub fn actual_valued_observables(group: &str) -> Result<GroupDescriptor, MhiError> {
    let catalog = Catalog::standard().map_err(CasimirError::from)?;
    actual_valued_observables_in(&catalog, group)
}

/// Symbolic operator label; square roots are never expanded.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorLabel {
    Casimir(String),
    Number,
    Sqrt(Box<OperatorLabel>),
    Product(Vec<OperatorLabel>),
}

impl fmt::Display for OperatorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorLabel::Casimir(c) => write!(f, "{c}"),
            OperatorLabel::Number => write!(f, "N"),
            OperatorLabel::Sqrt(inner) => write!(f, "({inner})^(1/2)"),
            OperatorLabel::Product(parts) => {
                let texts: Vec<String> = parts.iter().map(ToString::to_string).collect();
                write!(f, "{}", texts.join("*"))
            }
        }
    }
}

/// Labeled observables of `n` free particles.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NParticleLabels {
    pub n: u64,
    pub mass: OperatorLabel,
    pub spin: OperatorLabel,
    pub charge: OperatorLabel,
    pub particle_number: OperatorLabel,
    /// Mass on the state with `n` particles.
    #[serde(serialize_with = "as_display")]
    pub mass_value: Scalar,
    /// Particle number on the state with `n` particles.
    pub number_value: u64,
}

fn as_display<S: serde::Serializer>(s: &Scalar, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_str(s)
}

impl NParticleLabels {
    /// Labels of the combined state, particle numbers added.
    pub fn combine(&self, other: &NParticleLabels) -> NParticleLabels {
        labels_for(self.n + other.n)
    }
}

fn labels_for(n: u64) -> NParticleLabels {
    let c = |s: &str| OperatorLabel::Casimir(s.to_string());
    NParticleLabels {
        n,
        mass: OperatorLabel::Product(vec![OperatorLabel::Sqrt(Box::new(c("C2^PE"))), OperatorLabel::Number]),
        spin: OperatorLabel::Sqrt(Box::new(c("C4^PE"))),
        charge: c("Q"),
        particle_number: OperatorLabel::Number,
        mass_value: &Scalar::symbol("m0") * &Scalar::integer(n as i64),
        number_value: n,
    }
}

/// Observable labels for `n >= 1` particles. The charge label is `Q`,
/// without the factor `N` that the mass label carries.
pub fn n_particle_labels(n: i64) -> Result<NParticleLabels, MhiError> {
    if n < 1 {
        return Err(MhiError::NonPositive(n));
    }
    Ok(labels_for(n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn galilei_labels() {
        let d = actual_valued_observables("galilei_central").unwrap();
        assert_eq!(d.operators(), ["M", "mW", "m^2 S^2"]);
        assert_eq!(d.observables[1].eigenvalue.to_string(), "m*w");
        assert_eq!(d.observables[2].eigenvalue, spin_label("m"));
        assert_eq!(d.quantities(), [Quantity::Mass, Quantity::InternalEnergy, Quantity::Spin]);
    }

    #[test]
    fn charge_only_for_u1() {
        let d = actual_valued_observables("u1").unwrap();
        assert_eq!(d.operators(), ["Q"]);
        assert_eq!(d.observables[0].eigenvalue, Scalar::symbol("e"));
        assert!(d.all_casimir());
    }

    #[test]
    fn nonrelativistic_is_union() {
        let full = actual_valued_observables("full_nonrelativistic").unwrap();
        let g = actual_valued_observables("galilei_central").unwrap();
        let u = actual_valued_observables("u1").unwrap();
        let mut parts: Vec<&str> = g.operators();
        parts.extend(u.operators());
        assert_eq!(full.operators(), parts);
    }

    #[test]
    fn relativistic_quantities() {
        let d = actual_valued_observables("full_relativistic").unwrap();
        assert_eq!(d.quantities(), [Quantity::Mass, Quantity::Spin, Quantity::Charge]);
        assert_eq!(d.operators(), ["M", "M^2", "m0^2 S^2", "Q"]);
    }

    #[test]
    fn unknown_group() {
        assert!(matches!(actual_valued_observables("poincare"), Err(MhiError::UnknownGroup(_))));
    }

    #[test]
    fn particle_labels() {
        let one = n_particle_labels(1).unwrap();
        assert_eq!((one.number_value, one.mass_value.to_string()), (1, "m0".to_string()));
        let three = n_particle_labels(3).unwrap();
        assert_eq!((three.number_value, three.mass_value.to_string()), (3, "3*m0".to_string()));
        assert_eq!(one.combine(&one), n_particle_labels(2).unwrap());
        assert_eq!(three.mass.to_string(), "(C2^PE)^(1/2)*N");
        assert_eq!(three.spin.to_string(), "(C4^PE)^(1/2)");
        assert!(matches!(n_particle_labels(0), Err(MhiError::NonPositive(0))));
    }
}
