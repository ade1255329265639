//! The kinematical algebras: Galilei (plain and mass-extended), Poincare
//! (plain and trivially extended, in the `H` and `Hb = H - M` bases), U(1),
//! the Heisenberg algebra, and the two full product groups.
//!
//! Generator order is the PBW order used by [`crate::uea`]. Within each
//! kinematical algebra it is: energy, momenta, rotations, boosts, then mass.
//!
//! | surface name | meaning |
//! |---|---|
//! | `H`, `Hb` | energy, `Hb = H - M` |
//! | `Jx..Jz` | rotations |
//! | `KGx..KGz` | Galilei boosts |
//! | `KPx..KPz` | Lorentz boosts |
//! | `Px..Pz` | momenta |
//! | `M` | mass (central) |
//! | `Q` | U(1) charge |
//! | `Xx..Xz`, `Z` | Heisenberg positions and central element |
//! | `Gt`, `Gthx..`, `Gux..`, `Grx..` | abstract Galilei generators |

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{levi_civita, AlgebraError, BasisChange, LieAlgebra, LinComb, Renaming};
use crate::scalar::{Scalar, DEFAULT_SYMBOLS};

pub const AXES: [&str; 3] = ["x", "y", "z"];

/// Names accepted by [`algebra`], in listing order.
pub const NAMES: &[&str] = &[
    "galilei",
    "galilei_central",
    "poincare",
    "poincare_trivial_ext",
    "poincare_trivial_ext_h",
    "u1",
    "heisenberg3",
    "full_relativistic",
    "full_nonrelativistic",
];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}` (known: {known})", known = NAMES.join(", "))]
    UnknownAlgebra(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn vec3(prefix: &str) -> [String; 3] {
    AXES.map(|a| format!("{prefix}{a}"))
}

/// Generator list of an energy + rotation + boost + momentum algebra.
struct Kinematical {
    name: String,
    generators: Vec<String>,
}

impl Kinematical {
    fn new(name: &str, energy: &str, rot: &str, boost: &str, mom: &str) -> Self {
        let mut generators = vec![energy.to_string()];
        generators.extend(vec3(mom));
        generators.extend(vec3(rot));
        generators.extend(vec3(boost));
        Kinematical { name: name.to_string(), generators }
    }

    fn table(&self) -> Result<crate::algebra::AlgebraBuilder, AlgebraError> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        LieAlgebra::builder(&self.name, DEFAULT_SYMBOLS, &gens)
    }
}

fn i_times(n: i64) -> Scalar {
    &Scalar::i() * &Scalar::integer(n)
}

/// Rotation part shared by every kinematical table: J rotates J, K and P.
fn add_rotations(
    mut b: crate::algebra::AlgebraBuilder,
    rot: &str,
    vectors: &[&str],
) -> Result<crate::algebra::AlgebraBuilder, AlgebraError> {
    let j = vec3(rot);
    let mut families = vec![rot];
    families.extend_from_slice(vectors);
    for fam in families {
        let v = vec3(fam);
        for i in 0..3 {
            for jj in 0..3 {
                for k in 0..3 {
                    let e = levi_civita(i, jj, k);
                    if e != 0 && !(fam == rot && i > jj) {
                        b = b.bracket(&j[i], &v[jj], &[(&v[k], i_times(e))])?;
                    }
                }
            }
        }
    }
    Ok(b)
}

/// Galilei algebra in the abstract basis: `Gt`, displacements `Gr*`,
/// rotations `Gth*`, boost velocities `Gu*`.
pub fn galilei() -> Result<LieAlgebra, AlgebraError> {
    let k = Kinematical::new("galilei", "Gt", "Gth", "Gu", "Gr");
    let mut b = add_rotations(k.table()?, "Gth", &["Gu", "Gr"])?;
    let (u, r) = (vec3("Gu"), vec3("Gr"));
    for i in 0..3 {
        // [G_u_i, G_tau] = i G_r_i
        b = b.bracket(&u[i], "Gt", &[(&r[i], Scalar::i())])?;
    }
    Ok(b.build())
}

/// The mass central extension of [`galilei`], renamed to the physical basis
/// `H, P, J, KG, M` (hbar = 1).
pub fn galilei_central() -> Result<LieAlgebra, AlgebraError> {
    let g = galilei()?;
    let (u, r) = (vec3("Gu"), vec3("Gr"));
    let overrides: Vec<crate::algebra::Override> =
        (0..3).map(|i| (u[i].as_str(), r[i].as_str(), vec![("M", Scalar::i())])).collect();
    let ext = g.central_extension("M", &overrides)?;
    Ok(ext.rename_generators(&galilei_physical_renaming())?.with_name("galilei_central"))
}

/// Abstract Galilei names to physical ones.
pub fn galilei_physical_renaming() -> Renaming {
    let mut pairs = vec![("Gt".to_string(), "H".to_string())];
    for a in AXES {
        pairs.push((format!("Gth{a}"), format!("J{a}")));
        pairs.push((format!("Gu{a}"), format!("KG{a}")));
        pairs.push((format!("Gr{a}"), format!("P{a}")));
    }
    Renaming::from_pairs(pairs)
}

/// Poincare algebra in its 3+1 split.
pub fn poincare() -> Result<LieAlgebra, AlgebraError> {
    let k = Kinematical::new("poincare", "H", "J", "KP", "P");
    let mut b = add_rotations(k.table()?, "J", &["KP", "P"])?;
    let (kp, p, j) = (vec3("KP"), vec3("P"), vec3("J"));
    for i in 0..3 {
        for jj in 0..3 {
            for kk in 0..3 {
                let e = levi_civita(i, jj, kk);
                if e != 0 && i < jj {
                    // [K_i, K_j] = -i eps_ijk J_k
                    b = b.bracket(&kp[i], &kp[jj], &[(&j[kk], i_times(-e))])?;
                }
            }
        }
        // [K_i, P_i] = i H
        b = b.bracket(&kp[i], &p[i], &[("H", Scalar::i())])?;
        // [K_i, H] = i P_i
        b = b.bracket(&kp[i], "H", &[(&p[i], Scalar::i())])?;
    }
    Ok(b.build())
}

/// Poincare plus a central `M`, in the original `H` basis.
pub fn poincare_trivial_ext_h() -> Result<LieAlgebra, AlgebraError> {
    Ok(poincare()?.trivial_extension("M")?.with_name("poincare_trivial_ext_h"))
}

/// The basis change `Hb = H - M` on [`poincare_trivial_ext_h`].
pub fn hbar_basis_change(algebra: &LieAlgebra) -> Result<BasisChange, AlgebraError> {
    BasisChange::redefine(algebra, "H", "Hb", &[("H", Scalar::one()), ("M", Scalar::integer(-1))])
}

/// Trivially extended Poincare in the `Hb, P, J, KP, M` basis.
pub fn poincare_trivial_ext() -> Result<LieAlgebra, AlgebraError> {
    let h = poincare_trivial_ext_h()?;
    Ok(h.change_basis(&hbar_basis_change(&h)?)?.with_name("poincare_trivial_ext"))
}

pub fn u1() -> Result<LieAlgebra, AlgebraError> {
    LieAlgebra::abelian("u1", DEFAULT_SYMBOLS, &["Q"])
}

/// `[X_i, P_j] = i delta_ij Z`, `Z` central (hbar = 1).
pub fn heisenberg3() -> Result<LieAlgebra, AlgebraError> {
    let mut gens: Vec<String> = vec3("X").into();
    gens.extend(vec3("P"));
    gens.push("Z".into());
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    let mut b = LieAlgebra::builder("heisenberg3", DEFAULT_SYMBOLS, &refs)?;
    let (x, p) = (vec3("X"), vec3("P"));
    for i in 0..3 {
        b = b.bracket(&x[i], &p[i], &[("Z", Scalar::i())])?;
    }
    Ok(b.build())
}

/// Trivially extended Poincare (Hb basis) times U(1).
pub fn full_relativistic() -> Result<LieAlgebra, AlgebraError> {
    Ok(poincare_trivial_ext()?.direct_product(&u1()?).with_name("full_relativistic"))
}

/// Mass-extended Galilei times U(1).
pub fn full_nonrelativistic() -> Result<LieAlgebra, AlgebraError> {
    Ok(galilei_central()?.direct_product(&u1()?).with_name("full_nonrelativistic"))
}

/// Look up one catalog algebra by name.
pub fn algebra(name: &str) -> Result<LieAlgebra, CatalogError> {
    let alg = match name {
        "galilei" => galilei()?,
        "galilei_central" => galilei_central()?,
        "poincare" => poincare()?,
        "poincare_trivial_ext" => poincare_trivial_ext()?,
        "poincare_trivial_ext_h" => poincare_trivial_ext_h()?,
        "u1" => u1()?,
        "heisenberg3" => heisenberg3()?,
        "full_relativistic" => full_relativistic()?,
        "full_nonrelativistic" => full_nonrelativistic()?,
        other => return Err(CatalogError::UnknownAlgebra(other.to_string())),
    };
    Ok(alg)
}

/// The standard Inonu-Wigner data for `Hb`-basis Poincare: exponents
/// `P, KP -> 1`, `M -> 2`, everything else 0.
pub fn speed_space_exponents(algebra: &LieAlgebra) -> BTreeMap<String, i32> {
    algebra
        .generator_names()
        .iter()
        .map(|g| {
            let k = if g.starts_with("KP") || (g.starts_with('P') && g.len() == 2) {
                1
            } else if g == "M" {
                2
            } else {
                0
            };
            (g.clone(), k)
        })
        .collect()
}

/// Contracted Poincare names to Galilei ones: `KP* -> KG*`, `Hb -> H`.
pub fn contraction_renaming() -> Renaming {
    let mut pairs = vec![("Hb".to_string(), "H".to_string())];
    for a in AXES {
        pairs.push((format!("KP{a}"), format!("KG{a}")));
    }
    Renaming::from_pairs(pairs)
}

/// Poincare names to abstract Galilei names.
pub fn poincare_to_galilei_renaming() -> Renaming {
    let mut pairs = vec![("H".to_string(), "Gt".to_string())];
    for a in AXES {
        pairs.push((format!("J{a}"), format!("Gth{a}")));
        pairs.push((format!("KP{a}"), format!("Gu{a}")));
        pairs.push((format!("P{a}"), format!("Gr{a}")));
    }
    Renaming::from_pairs(pairs)
}

/// A set of named algebras, normally the standard catalog. Entries can be
/// replaced, which is how corrupted tables are injected in tests.
#[derive(Debug, Clone)]
pub struct Catalog {
    algebras: BTreeMap<String, LieAlgebra>,
}

impl Catalog {
    pub fn standard() -> Result<Catalog, CatalogError> {
        let mut algebras = BTreeMap::new();
        for name in NAMES {
            algebras.insert(name.to_string(), algebra(name)?);
        }
        Ok(Catalog { algebras })
    }

    pub fn get(&self, name: &str) -> Result<&LieAlgebra, CatalogError> {
        self.algebras.get(name).ok_or_else(|| CatalogError::UnknownAlgebra(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        NAMES.iter().copied().filter(|n| self.algebras.contains_key(*n))
    }

    pub fn replace(&mut self, name: &str, algebra: LieAlgebra) {
        self.algebras.insert(name.to_string(), algebra);
    }
}

/// Flip the sign of one stored structure constant `c_ab^d`.
pub fn flip_structure_constant(algebra: &LieAlgebra, a: usize, b: usize, d: usize) -> LieAlgebra {
    let mut out = algebra.clone();
    let comb = algebra.bracket_basis(a, b);
    let mut flipped = LinComb::zero();
    for (k, c) in comb.iter() {
        if k == d {
            flipped.add_term(k, -c);
        } else {
            flipped.add_term(k, c.clone());
        }
    }
    out.set_bracket(a, b, flipped);
    out
}
