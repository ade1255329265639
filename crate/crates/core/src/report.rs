//! Check reports and the end-to-end reproduction run.
//!
//! A [`Report`] is a flat list of named checks grouped by section. Every
//! field except the timings is a pure function of the inputs, so
//! [`Report::without_timing`] gives byte-stable JSON.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt::{self, Write as _};
use std::time::Instant;

use serde::Serialize;

use crate::algebra::{LieAlgebra, Renaming};
use crate::casimir::{self, Verification};
use crate::catalog::{self, Catalog};
use crate::contraction::{
    self, conceptual_limit_check, contract, contract_casimir, rescale_element, tables_equal, ContractionError,
    Pipeline, Power, RescalingMap,
};
use crate::expr::{parse_expression, Ordering};
use crate::limit::traditional_limit_report;
use crate::mhi::{self, Quantity};
use crate::scalar::Scalar;
use crate::uea::{CasimirCheck, Element, Uea};

type CheckResult = Result<Outcome, Box<dyn Error>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub section: String,
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Printed difference from the expected value, for failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

/// Result of one check before it is named and timed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub detail: Option<String>,
    pub residue: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome { status: Status::Pass, detail: None, residue: None }
    }

    pub fn fail(residue: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, detail: None, residue: Some(residue.into()) }
    }

    pub fn warn(detail: impl Into<String>) -> Self {
        Outcome { status: Status::Warn, detail: Some(detail.into()), residue: None }
    }

    /// Pass when `ok`, otherwise fail with the lazily built residue.
    pub fn expect(ok: bool, residue: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::pass()
        } else {
            Outcome::fail(residue())
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub warn: usize,
}

/// Which reading of a printed Casimir passed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderingLine {
    pub group: String,
    pub label: String,
    pub verbatim: bool,
    pub symmetrized: Option<bool>,
    pub ordering: Option<Ordering>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub summary: Summary,
    pub casimir_orderings: Vec<OrderingLine>,
    pub auto_powers: BTreeMap<String, i32>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(title: &str) -> Self {
        Report {
            title: title.to_string(),
            summary: Summary::default(),
            casimir_orderings: Vec::new(),
            auto_powers: BTreeMap::new(),
            checks: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn section(&mut self, name: &str) -> Section<'_> {
        Section { report: self, name: name.to_string() }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Warn => self.summary.warn += 1,
        }
        self.checks.push(check);
    }

    /// No failures; warnings allowed.
    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, section: &str, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.section == section && c.name == name)
    }

    pub fn in_section<'a>(&'a self, section: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.section == section)
    }

    /// Copy with every timing removed.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        r.elapsed_ms = None;
        for c in &mut r.checks {
            c.elapsed_us = None;
        }
        r
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.title);
        let mut section = "";
        for c in &self.checks {
            if c.section != section {
                section = &c.section;
                let _ = writeln!(out, "\n[{section}]");
            }
            let _ = write!(out, "  {}  {}", c.status, c.name);
            if let Some(d) = &c.detail {
                let _ = write!(out, "  ({d})");
            }
            out.push('\n');
            if let Some(r) = &c.residue {
                let _ = writeln!(out, "        residue: {r}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "\n{} pass, {} fail, {} warn", s.pass, s.fail, s.warn);
        out
    }
}

/// Adds checks to one section of a report.
pub struct Section<'r> {
    report: &'r mut Report,
    name: String,
}

impl Section<'_> {
    /// Run `f`, time it, and record the outcome. Errors become failures.
    pub fn check(&mut self, name: impl Into<String>, f: impl FnOnce() -> CheckResult) -> Status {
        let start = Instant::now();
        let outcome = f().unwrap_or_else(|e| Outcome::fail(String::new()).with_detail(format!("error: {e}")));
        let residue = outcome.residue.filter(|r| !r.is_empty());
        let status = outcome.status;
        self.report.push(Check {
            section: self.name.clone(),
            name: name.into(),
            status,
            detail: outcome.detail,
            residue,
            elapsed_us: Some(start.elapsed().as_micros() as u64),
        });
        status
    }

    pub fn record(&mut self, name: impl Into<String>, outcome: Outcome) -> Status {
        self.check(name, || Ok(outcome))
    }
}

fn one_line(text: &str) -> String {
    text.trim_end().replace('\n', "; ")
}

fn compare(algebra: &LieAlgebra, got: &Element, expected: &Element) -> Outcome {
    Outcome::expect(got == expected, || (got - expected).display(algebra).to_string())
}

fn witness_text(algebra: &LieAlgebra, check: &CasimirCheck) -> String {
    match &check.witness {
        None => "commutes with every generator".into(),
        Some(w) => format!("[e, {}] = {}", w.generator, w.residue.display(algebra)),
    }
}

/// Groups whose printed Casimirs are verified.
pub const CASIMIR_GROUPS: &[&str] = &[
    "galilei_central",
    "poincare",
    "poincare_trivial_ext",
    "poincare_trivial_ext_h",
    "u1",
    "full_relativistic",
    "full_nonrelativistic",
];

/// The whole reproduction pipeline, run against `catalog`.
pub fn report_paper(catalog: &Catalog) -> Report {
    let start = Instant::now();
    let mut report = Report::new("kinematical algebras: Galilei, Poincare and the contraction between them");
    validation(&mut report, catalog);
    let verifications = casimirs(&mut report, catalog);
    sign_diagnostic(&mut report, catalog);
    round_trip(&mut report, catalog, &verifications);
    basis_change(&mut report, catalog);
    let pipeline = speed_space_contraction(&mut report, catalog);
    let ordering = verifications
        .get(&("poincare_trivial_ext".to_string(), "C4^PE".to_string()))
        .and_then(|v| v.ordering)
        .unwrap_or(Ordering::Symmetrized);
    if let Some(pipe) = &pipeline {
        casimir_contraction(&mut report, pipe, &verifications);
    }
    conceptual(&mut report, ordering);
    rest_frame(&mut report, catalog);
    traditional(&mut report);
    full_group(&mut report, catalog);
    observables(&mut report, catalog);
    particles(&mut report);
    report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    report
}

type Verified = BTreeMap<(String, String), Verification>;

fn validation(report: &mut Report, catalog: &Catalog) {
    let mut s = report.section("validation");
    for name in catalog.names() {
        s.check(name, || {
            let r = catalog.get(name)?.validate();
            Ok(Outcome::expect(r.is_empty(), || r.to_string()))
        });
    }
}

fn casimirs(report: &mut Report, catalog: &Catalog) -> Verified {
    let mut found = Verified::new();
    let mut lines = Vec::new();
    let mut s = report.section("casimir");
    for &group in CASIMIR_GROUPS {
        let list = match casimir::verify_all(catalog, group) {
            Ok(list) => list,
            Err(e) => {
                s.record(group, Outcome::fail("").with_detail(format!("error: {e}")));
                continue;
            }
        };
        let alg = catalog.get(group).expect("verify_all found it");
        for v in list {
            let outcome = match v.ordering {
                Some(Ordering::Verbatim) => Outcome::pass().with_detail("verbatim ordering"),
                Some(Ordering::Symmetrized) => Outcome::pass()
                    .with_detail(format!("symmetrized ordering; verbatim fails: {}", witness_text(alg, &v.verbatim))),
                None => {
                    let sym = v.symmetrized.as_ref().unwrap_or(&v.verbatim);
                    Outcome::fail(witness_text(alg, sym))
                        .with_detail(format!("fails in both orderings; verbatim: {}", witness_text(alg, &v.verbatim)))
                }
            };
            s.record(format!("{group} {}", v.label), outcome);
            lines.push(OrderingLine {
                group: group.to_string(),
                label: v.label.clone(),
                verbatim: v.verbatim.holds(),
                symmetrized: v.symmetrized.as_ref().map(CasimirCheck::holds),
                ordering: v.ordering,
            });
            found.insert((group.to_string(), v.label.clone()), v);
        }
    }
    report.casimir_orderings = lines;
    found
}

/// Fourth-order invariants with the opposite cross-term sign.
fn sign_diagnostic(report: &mut Report, catalog: &Catalog) {
    let mut s = report.section("cross-term sign");
    for group in ["galilei_central", "poincare", "poincare_trivial_ext"] {
        let entries = match casimir::reversed_cross_term(group) {
            Ok(e) => e,
            Err(e) => {
                s.record(group, Outcome::fail("").with_detail(format!("error: {e}")));
                continue;
            }
        };
        for p in entries {
            s.check(format!("{group} {}", p.label), || {
                let alg = catalog.get(group)?;
                let v = casimir::verify(alg, &p)?;
                Ok(match v.ordering {
                    Some(o) => Outcome::pass().with_detail(format!("Casimir in {o} ordering")),
                    None => Outcome::fail(witness_text(alg, v.symmetrized.as_ref().unwrap_or(&v.verbatim))),
                })
            });
        }
    }
}

fn round_trip(report: &mut Report, catalog: &Catalog, verified: &Verified) {
    let mut s = report.section("parser round trip");
    for ((group, label), v) in verified {
        s.check(format!("{group} {label}"), || {
            let alg = catalog.get(group)?;
            let printed = v.element.display(alg).to_string();
            let back = parse_expression(&printed, alg)?;
            Ok(compare(alg, &back, &v.element))
        });
    }
}

fn basis_change(report: &mut Report, catalog: &Catalog) {
    let mut s = report.section("basis change");
    s.check("Hb = H - M reproduces poincare_trivial_ext", || {
        let ext_h = catalog.get("poincare_trivial_ext_h")?;
        let changed = ext_h.change_basis(&catalog::hbar_basis_change(ext_h)?)?;
        let diff = tables_equal(&changed, catalog.get("poincare_trivial_ext")?, &Renaming::identity())?;
        Ok(Outcome::expect(diff.is_equal(), || one_line(&diff.to_string())))
    });
    s.check("[KPx, Px] = i*(Hb + M)", || {
        let ext = catalog.get("poincare_trivial_ext")?;
        let got = ext.bracket_named("KPx", "Px")?;
        let expected = ext.lincomb(&[("Hb", Scalar::i()), ("M", Scalar::i())])?;
        Ok(Outcome::expect(got == expected, || (&got - &expected).display(ext).to_string()))
    });
    s.check("inverse change restores the H basis", || {
        let ext_h = catalog.get("poincare_trivial_ext_h")?;
        let change = catalog::hbar_basis_change(ext_h)?;
        let there = ext_h.change_basis(&change)?;
        let back = there.change_basis(&change.inverse(ext_h)?)?;
        let diff = tables_equal(&back, ext_h, &Renaming::identity())?;
        Ok(Outcome::expect(diff.is_equal(), || one_line(&diff.to_string())))
    });
}

fn speed_space_contraction(report: &mut Report, catalog: &Catalog) -> Option<Pipeline> {
    let mut s = report.section("contraction");
    let built = catalog.get("poincare_trivial_ext_h").and_then(|h| Ok((h, catalog.get("poincare_trivial_ext")?)));
    let pipe = match built
        .map_err(Box::<dyn Error>::from)
        .and_then(|(h, ext)| Pipeline::from_shifted(h.clone(), ext.clone()).map_err(Box::<dyn Error>::from))
    {
        Ok(p) => p,
        Err(e) => {
            s.record("speed-space rescaling", Outcome::fail("").with_detail(format!("error: {e}")));
            return None;
        }
    };
    let bracket = |name: &str, a: &str, b: &str, expected: &[(&str, Scalar)]| {
        let alg = &pipe.rescaled;
        (
            name.to_string(),
            (|| -> CheckResult {
                let got = alg.bracket_named(a, b)?;
                let want = alg.lincomb(expected)?;
                Ok(Outcome::expect(got == want, || (&got - &want).display(alg).to_string()))
            })(),
        )
    };
    let eps2 = Scalar::eps_pow(2);
    let i_eps2 = &Scalar::i() * &eps2;
    let checks = [
        bracket("rescaled [KPx, KPy] = -i*eps^2*Jz", "KPx", "KPy", &[("Jz", -&i_eps2)]),
        bracket("rescaled [KPx, Px] = i*eps^2*Hb + i*M", "KPx", "Px", &[("Hb", i_eps2.clone()), ("M", Scalar::i())]),
        bracket("rescaled [KPx, Hb] = i*Px", "KPx", "Hb", &[("Px", Scalar::i())]),
        bracket("rescaled [Jx, KPy] = i*KPz", "Jx", "KPy", &[("KPz", Scalar::i())]),
    ];
    for (name, result) in checks {
        s.check(name, || result);
    }
    s.check("contracted table equals galilei_central", || {
        let diff = tables_equal(&pipe.contracted, catalog.get("galilei_central")?, &catalog::contraction_renaming())?;
        Ok(Outcome::expect(diff.is_equal(), || one_line(&diff.to_string())))
    });
    s.check("plain poincare contracts to galilei", || {
        let p = catalog.get("poincare")?;
        let c = contract(p, &RescalingMap::speed_space(p))?;
        let diff = tables_equal(&c, catalog.get("galilei")?, &catalog::poincare_to_galilei_renaming())?;
        Ok(Outcome::expect(diff.is_equal(), || one_line(&diff.to_string())))
    });
    s.check("without the energy shift the mass decouples", || {
        let ext_h = &pipe.extended;
        let c = contract(ext_h, &RescalingMap::speed_space(ext_h))?;
        let boosts = Renaming::from_pairs(catalog::AXES.iter().map(|a| (format!("KP{a}"), format!("KG{a}"))));
        let diff = tables_equal(&c, catalog.get("galilei_central")?, &boosts)?;
        let names_boost = diff.mismatches.iter().any(|m| m.left.starts_with("[Px, KPx]"));
        Ok(Outcome::expect(names_boost, || diff.to_string()).with_detail(one_line(&diff.to_string())))
    });
    Some(pipe)
}

const EXPECTED_POWERS: [(&str, i32); 3] = [("C1^PE", 2), ("C2^PE", 4), ("C4^PE", 4)];

fn casimir_contraction(report: &mut Report, pipe: &Pipeline, verified: &Verified) {
    let mut powers = BTreeMap::new();
    let mut s = report.section("casimir contraction");
    let rescaled_forms = contraction::printed_rescaled();
    let contracted_forms = contraction::printed_contracted();
    for (i, (label, expected_power)) in EXPECTED_POWERS.into_iter().enumerate() {
        let ordering = verified
            .get(&("poincare_trivial_ext".to_string(), label.to_string()))
            .and_then(|v| v.ordering)
            .unwrap_or(Ordering::Symmetrized);
        let source = casimir::printed_entry("poincare_trivial_ext", label)
            .map_err(Box::<dyn Error>::from)
            .and_then(|p| Ok(casimir::element(&pipe.shifted, &p, ordering)?));
        let e = match source {
            Ok(e) => e,
            Err(err) => {
                s.record(label, Outcome::fail("").with_detail(format!("error: {err}")));
                continue;
            }
        };
        s.check(format!("{label} rescaled form"), || {
            let got = rescale_element(&pipe.shifted, &e, &pipe.map)?;
            let want = casimir::element(&pipe.rescaled, &rescaled_forms[i], ordering)?;
            Ok(compare(&pipe.rescaled, &got, &want).with_detail(format!("{ordering} ordering")))
        });
        let contracted = match contract_casimir(&pipe.shifted, &e, &pipe.map, Power::Auto) {
            Ok(c) => c,
            Err(err) => {
                s.record(format!("{label} auto power"), Outcome::fail("").with_detail(format!("error: {err}")));
                continue;
            }
        };
        powers.insert(label.to_string(), contracted.power);
        s.record(
            format!("{label} auto power is {expected_power}"),
            Outcome::expect(contracted.power == expected_power, || format!("found power {}", contracted.power)),
        );
        s.check(format!("{label} contracted form"), || {
            let want = casimir::element(&pipe.contracted, &contracted_forms[i], ordering)?;
            Ok(compare(&pipe.contracted, &contracted.element, &want))
        });
        s.check(format!("{label} contracted is a Casimir"), || {
            let c = Uea::new(&pipe.contracted).is_casimir(&contracted.element)?;
            Ok(Outcome::expect(c.holds(), || witness_text(&pipe.contracted, &c)))
        });
    }
    s.check("C2^PE at power 2 diverges", || {
        let e = casimir::element(
            &pipe.shifted,
            &casimir::printed_entry("poincare_trivial_ext", "C2^PE")?,
            Ordering::Verbatim,
        )?;
        Ok(match contract_casimir(&pipe.shifted, &e, &pipe.map, Power::Fixed(2)) {
            Err(ContractionError::DivergentLimit { power: 2, pole_order }) => {
                Outcome::pass().with_detail(format!("pole of order {pole_order}"))
            }
            other => Outcome::fail(format!("{other:?}")),
        })
    });
    s.check("C1^PE at power 3 vanishes", || {
        let e = casimir::element(
            &pipe.shifted,
            &casimir::printed_entry("poincare_trivial_ext", "C1^PE")?,
            Ordering::Verbatim,
        )?;
        let c = contract_casimir(&pipe.shifted, &e, &pipe.map, Power::Fixed(3))?;
        Ok(Outcome::expect(c.zero_limit, || c.element.display(&pipe.contracted).to_string()))
    });
    s.record(
        "rescaled quartic label",
        Outcome::warn("the rescaled quartic is printed under the unrescaled label C4^PE; read as the rescaled form"),
    );
    report.auto_powers = powers;
}

fn conceptual(report: &mut Report, ordering: Ordering) {
    let mut s = report.section("conceptual limit");
    match conceptual_limit_check(ordering) {
        Ok(lines) => {
            for l in lines {
                s.record(
                    l.name.clone(),
                    Outcome::expect(l.equal, || l.residue.clone()).with_detail(format!("{ordering} ordering")),
                );
            }
        }
        Err(e) => {
            s.record("contracted Casimirs", Outcome::fail("").with_detail(format!("error: {e}")));
        }
    }
}

fn j_squared(alg: &LieAlgebra, mass: &Scalar) -> Result<Element, Box<dyn Error>> {
    Ok(parse_expression(&casimir::dot("J", "J"), alg)?.scale(&(mass * mass)))
}

fn at_rest(
    catalog: &Catalog,
    group: &str,
    label: &str,
    values: &[(&str, Scalar)],
    expected: impl FnOnce(&LieAlgebra) -> Result<Element, Box<dyn Error>>,
) -> CheckResult {
    let alg = catalog.get(group)?;
    let e = casimir::element(alg, &casimir::printed_entry(group, label)?, Ordering::Verbatim)?;
    let got = Uea::new(alg).substitute(&e, &casimir::rest_frame(alg, values)?)?;
    Ok(compare(alg, &got, &expected(alg)?).with_detail("verbatim ordering"))
}

fn rest_frame(report: &mut Report, catalog: &Catalog) {
    let m0 = Scalar::symbol("m0");
    let m = Scalar::symbol("m");
    let w = Scalar::symbol("w");
    let mut s = report.section("rest frame");
    s.check("C2^P -> m0^2", || {
        at_rest(catalog, "poincare", "C2^P", &[("H", m0.clone())], |_| Ok(Element::scalar(&m0 * &m0)))
    });
    s.check("C4^P -> m0^2 J.J", || {
        at_rest(catalog, "poincare", "C4^P", &[("H", m0.clone())], |alg| j_squared(alg, &m0))
    });
    s.check("C2^G -> m*w", || {
        at_rest(catalog, "galilei_central", "C2^G", &[("M", m.clone()), ("H", w.clone())], |_| {
            Ok(Element::scalar(&m * &w))
        })
    });
    s.check("C4^G -> m^2 J.J", || {
        at_rest(catalog, "galilei_central", "C4^G", &[("M", m.clone())], |alg| j_squared(alg, &m))
    });
}

fn traditional(report: &mut Report) {
    let mut s = report.section("traditional limit");
    match traditional_limit_report() {
        Ok(r) => {
            for line in r.lines() {
                let residue = line.residue;
                s.record(line.name, Outcome::expect(line.holds, || residue));
            }
        }
        Err(e) => {
            s.record("heisenberg realization", Outcome::fail("").with_detail(format!("error: {e}")));
        }
    }
}

fn full_group(report: &mut Report, catalog: &Catalog) {
    let mut s = report.section("full group");
    s.check("full_relativistic contracts to full_nonrelativistic", || {
        let rel = catalog.get("full_relativistic")?;
        let c = contract(rel, &RescalingMap::speed_space(rel))?;
        let diff = tables_equal(&c, catalog.get("full_nonrelativistic")?, &catalog::contraction_renaming())?;
        Ok(Outcome::expect(diff.is_equal(), || one_line(&diff.to_string())))
    });
    s.check("charge is not rescaled", || {
        let rel = catalog.get("full_relativistic")?;
        let k = RescalingMap::speed_space(rel).exponent("Q");
        Ok(Outcome::expect(k == Some(0), || format!("exponent {k:?}")))
    });
}

fn observables(report: &mut Report, catalog: &Catalog) {
    let mut s = report.section("observables");
    let mut descriptors = BTreeMap::new();
    for &group in mhi::GROUPS {
        let d = match mhi::actual_valued_observables_in(catalog, group) {
            Ok(d) => d,
            Err(e) => {
                s.record(group, Outcome::fail("").with_detail(format!("error: {e}")));
                continue;
            }
        };
        let alg = catalog.get(group).expect("descriptor was built from it");
        for o in &d.observables {
            let v = &o.verification;
            let outcome =
                Outcome::expect(o.is_casimir(), || witness_text(alg, v.symmetrized.as_ref().unwrap_or(&v.verbatim)));
            s.record(
                format!("{group} {} ({}) is a Casimir", o.operator, o.casimir),
                outcome.with_detail(format!("{} = {}", o.quantity, o.eigenvalue)),
            );
        }
        descriptors.insert(group, d);
    }
    let operators = |g: &str| descriptors.get(g).map(|d| d.operators().join(", "));
    for (full, parts) in
        [("full_nonrelativistic", ["galilei_central", "u1"]), ("full_relativistic", ["poincare_trivial_ext", "u1"])]
    {
        let union = parts.iter().map(|p| operators(p)).collect::<Option<Vec<_>>>().map(|v| v.join(", "));
        let got = operators(full);
        s.record(
            format!("{full} = {} + {}", parts[0], parts[1]),
            Outcome::expect(got.is_some() && got == union, || format!("{got:?} vs {union:?}")),
        );
    }
    let quantities = |g: &str| descriptors.get(g).map(|d| d.quantities());
    for (group, expected) in [
        ("full_nonrelativistic", vec![Quantity::Mass, Quantity::InternalEnergy, Quantity::Spin, Quantity::Charge]),
        ("full_relativistic", vec![Quantity::Mass, Quantity::Spin, Quantity::Charge]),
    ] {
        let got = quantities(group);
        let names = expected.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
        s.record(
            format!("{group} quantities are {names}"),
            Outcome::expect(got.as_ref() == Some(&expected), || format!("{got:?}")),
        );
    }
}

fn particles(report: &mut Report) {
    let mut s = report.section("n particles");
    for n in 1..=3 {
        s.check(format!("n = {n}"), || {
            let l = mhi::n_particle_labels(n)?;
            let mass = &Scalar::symbol("m0") * &Scalar::integer(n);
            Ok(Outcome::expect(l.number_value == n as u64 && l.mass_value == mass, || {
                format!("N = {}, mass = {}", l.number_value, l.mass_value)
            })
            .with_detail(format!("mass {} = {}, spin {}, charge {}", l.mass, l.mass_value, l.spin, l.charge)))
        });
    }
    s.check("1 + 2 particles combine to 3", || {
        let (one, two) = (mhi::n_particle_labels(1)?, mhi::n_particle_labels(2)?);
        let three = mhi::n_particle_labels(3)?;
        let got = one.combine(&two);
        Ok(Outcome::expect(got == three, || format!("{got:?}")))
    });
    s.record("charge label", Outcome::warn("total charge is labeled Q, while the mass label carries the factor N"));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_lists_sections_and_summary() {
        let mut r = Report::new("t");
        r.section("a").record("x", Outcome::pass());
        r.section("a").record("y", Outcome::fail("Px"));
        r.section("b").record("z", Outcome::warn("note"));
        let text = r.to_text();
        assert!(text.contains("[a]\n  PASS  x\n  FAIL  y\n        residue: Px\n"));
        assert!(text.contains("[b]\n  WARN  z  (note)"));
        assert!(text.ends_with("1 pass, 1 fail, 1 warn\n"));
        assert!(!r.all_pass());
    }

    #[test]
    fn errors_become_failures() {
        let mut r = Report::new("t");
        let st = r.section("s").check("boom", || Err("bad input".into()));
        assert_eq!(st, Status::Fail);
        assert_eq!(r.checks[0].detail.as_deref(), Some("error: bad input"));
        assert_eq!(r.checks[0].residue, None);
    }

    #[test]
    fn json_without_timing_has_no_timing_fields() {
        let mut r = Report::new("t");
        r.section("s").record("x", Outcome::pass());
        let json = r.without_timing().to_json();
        assert!(!json.contains("elapsed"));
        assert!(json.contains("\"status\": \"pass\""));
    }
}
