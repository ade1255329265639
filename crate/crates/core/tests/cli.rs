//! Exit-code contract of the command line: 0 all pass, 1 a check fails,
//! 2 usage, parse or file error. Faults come from fixtures.

use std::path::{Path, PathBuf};
use std::process::Command;

use lieq::catalog::{self, Catalog};
use lieq::report::{report_paper, Status};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn path(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join(rel).display().to_string()
}

fn lieq(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("lieq").chain(args.iter().copied());
    let code = lieq::cli::run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

/// Exit 0 exactly when no output line reports a failure.
fn consistent(r: &Run) -> bool {
    let any_fail = r.out.lines().any(|l| l.starts_with("FAIL"));
    (r.code == 0 && !any_fail) || (r.code == 1 && any_fail)
}

const C2P: &str = "H^2 - Px*Px - Py*Py - Pz*Pz";

#[test]
fn validate_catalog_and_file() {
    let r = lieq(&["validate", "galilei_central"]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("valid Lie algebra"));
    assert_eq!(lieq(&["validate", &path("data/su2.json")]).code, 0);
}

#[test]
fn corrupted_table_fails_validation() {
    let r = lieq(&["validate", &path("tests/fixtures/corrupt-galilei-central.json")]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("not a Lie algebra"));
    assert!(r.out.contains("jacobi"), "{}", r.out);
}

#[test]
fn unreadable_inputs_are_usage_errors() {
    let r = lieq(&["validate", &path("tests/fixtures/bad-syntax.json")]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("line 4"), "{}", r.err);
    assert_eq!(lieq(&["validate", &path("tests/fixtures/bad-coefficient.json")]).code, 2);
    assert_eq!(lieq(&["validate", "no_such_algebra"]).code, 2);
    assert_eq!(lieq(&["frobnicate"]).code, 2);
    assert_eq!(lieq(&[]).code, 2);
    assert_eq!(lieq(&["--help"]).code, 0);
}

#[test]
fn catalog_browsing() {
    let r = lieq(&["catalog", "list"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out.lines().count(), 9);
    let r = lieq(&["catalog", "show", "poincare_trivial_ext", "--json"]);
    assert_eq!(r.code, 0);
    let back = lieq::io::parse_algebra(&r.out).unwrap();
    assert_eq!(lieq::io::export_algebra(&back), r.out);
    assert_eq!(lieq(&["catalog", "show", "nope"]).code, 2);
}

#[test]
fn bracket_lookup() {
    let r = lieq(&["bracket", "poincare_trivial_ext", "KPx", "Px"]);
    assert_eq!((r.code, r.out.trim()), (0, "[KPx, Px] = i*Hb + i*M"));
    assert_eq!(lieq(&["bracket", "poincare", "KPx", "Qz"]).code, 2);
}

#[test]
fn casimir_verify_expression() {
    let r = lieq(&["casimir", "verify", "poincare", "--expr", C2P]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
    assert!(r.out.starts_with("PASS"));
    let r = lieq(&["casimir", "verify", "poincare", "--expr", "H*Px"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("verbatim: [e, "));
}

#[test]
fn casimir_verify_parse_errors() {
    let r = lieq(&["casimir", "verify", "poincare", "--expr", "H^2 - Px*"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("1:10"), "{}", r.err);
    assert_eq!(lieq(&["casimir", "verify", "poincare", "--expr", "H*Qx"]).code, 2);
    assert_eq!(lieq(&["casimir", "verify", "poincare"]).code, 2);
    assert_eq!(lieq(&["casimir", "verify", "poincare", "--all", "--expr", "H"]).code, 2);
    assert_eq!(lieq(&["casimir", "verify", &path("data/su2.json"), "--all"]).code, 2);
}

#[test]
fn casimir_verify_all_exit_matches_lines() {
    for name in ["galilei_central", "poincare", "poincare_trivial_ext", "u1", "galilei"] {
        let r = lieq(&["casimir", "verify", name, "--all"]);
        assert!(consistent(&r), "{name}: {} / {}", r.code, r.out);
    }
    assert_eq!(lieq(&["casimir", "verify", "u1", "--all"]).code, 0);
}

#[test]
fn contraction_against_galilei() {
    let r = lieq(&[
        "contract",
        "poincare_trivial_ext",
        "--map",
        &path("data/std-map.json"),
        "--check-against",
        "galilei_central",
        "--rename",
        &path("data/std-rename.json"),
    ]);
    assert_eq!(r.code, 0, "{}{}", r.out, r.err);
    assert!(r.out.starts_with("PASS"));
    let r = lieq(&["contract", "poincare_trivial_ext", "--map", &path("data/std-map.json")]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("[Px, KPx] = -i*M"), "{}", r.out);
}

#[test]
fn contraction_faults() {
    let map = path("data/std-map.json");
    let r = lieq(&[
        "contract",
        "poincare_trivial_ext",
        "--map",
        &map,
        "--check-against",
        &path("tests/fixtures/corrupt-galilei-central.json"),
        "--rename",
        &path("data/std-rename.json"),
    ]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("[Px, KGx] = i*M"), "{}", r.out);

    let r = lieq(&["contract", "poincare_trivial_ext", "--map", &path("tests/fixtures/divergent-map.json")]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("divergent"));

    assert_eq!(
        lieq(&["contract", "poincare_trivial_ext", "--map", &path("tests/fixtures/incomplete-map.json")]).code,
        2
    );
    assert_eq!(lieq(&["contract", "poincare_trivial_ext", "--map", &path("missing.json")]).code, 2);
    let r = lieq(&[
        "contract",
        "poincare_trivial_ext",
        "--map",
        &map,
        "--check-against",
        "galilei_central",
        "--rename",
        &path("tests/fixtures/clashing-rename.json"),
    ]);
    assert_eq!(r.code, 2, "{}", r.err);
    assert_eq!(lieq(&["contract", "poincare_trivial_ext", "--map", &map, "--rename", &map]).code, 2);
}

#[test]
fn casimir_contraction_powers() {
    let map = path("data/std-map.json");
    let c2 = "Hb^2 - Px*Px - Py*Py - Pz*Pz + 2*Hb*M + M^2";
    let r = lieq(&["casimir", "contract", "poincare_trivial_ext", "--map", &map, "--expr", c2]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("power: 4\nlimit: M^2\n"), "{}", r.out);

    let r = lieq(&["casimir", "contract", "poincare_trivial_ext", "--map", &map, "--expr", c2, "--power", "2"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("pole of order 2"));

    let r = lieq(&["casimir", "contract", "poincare_trivial_ext", "--map", &map, "--expr", "M", "--power", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("WARN"));

    assert_eq!(
        lieq(&["casimir", "contract", "poincare_trivial_ext", "--map", &map, "--expr", "M", "--power", "-1"]).code,
        1
    );
    assert_eq!(
        lieq(&["casimir", "contract", "poincare_trivial_ext", "--map", &map, "--expr", "M", "--power", "x"]).code,
        2
    );
}

#[test]
fn traditional_limit_passes() {
    let r = lieq(&["limit", "traditional"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("PASS")).count(), 30);
}

#[test]
fn observables_and_particles() {
    for group in lieq::mhi::GROUPS {
        let r = lieq(&["mhi", "show", group]);
        assert!(consistent(&r), "{group}: {}", r.out);
    }
    assert_eq!(lieq(&["mhi", "show", "u1"]).code, 0);
    assert_eq!(lieq(&["mhi", "show", "poincare"]).code, 2);
    let r = lieq(&["mhi", "nparticle", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.out.contains("(C2^PE)^(1/2)*N = 3*m0"));
    assert_eq!(lieq(&["mhi", "nparticle", "0"]).code, 2);
    assert_eq!(lieq(&["mhi", "nparticle", "-2"]).code, 2);
}

fn temp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("lieq-{}-{name}", std::process::id()))
}

#[test]
fn report_to_file() {
    let file = temp("report.json");
    let r = lieq(&["report", "paper", "--format", "json", "--out", file.to_str().unwrap()]);
    let text = std::fs::read_to_string(&file).unwrap();
    std::fs::remove_file(&file).ok();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let fails = v["summary"]["fail"].as_u64().unwrap();
    assert_eq!(r.code, if fails == 0 { 0 } else { 1 });
    assert_eq!(v["auto_powers"], serde_json::json!({"C1^PE": 2, "C2^PE": 4, "C4^PE": 4}));
    assert!(r.out.contains("written to"));
    let dir = std::env::temp_dir().join("lieq-no-such-dir").join("x.json");
    assert_eq!(lieq(&["report", "paper", "--out", dir.to_str().unwrap()]).code, 2);
}

#[test]
fn report_names_corrupted_bracket() {
    let mut cat = Catalog::standard().unwrap();
    let g = cat.get("galilei_central").unwrap().clone();
    let (px, kgx, m) = (g.index_of("Px").unwrap(), g.index_of("KGx").unwrap(), g.index_of("M").unwrap());
    cat.replace("galilei_central", catalog::flip_structure_constant(&g, px, kgx, m));
    let report = report_paper(&cat);
    let validation = report.find("validation", "galilei_central").unwrap();
    assert_eq!(validation.status, Status::Fail);
    let table = report.find("contraction", "contracted table equals galilei_central").unwrap();
    assert_eq!(table.status, Status::Fail);
    assert!(table.residue.as_deref().unwrap().contains("[Px, KGx]"), "{table:?}");
    let pristine = report_paper(&Catalog::standard().unwrap());
    assert_eq!(pristine.find("contraction", "contracted table equals galilei_central").unwrap().status, Status::Pass);
}

#[test]
fn report_json_is_deterministic() {
    let cat = Catalog::standard().unwrap();
    let a = report_paper(&cat).without_timing().to_json();
    let b = report_paper(&cat).without_timing().to_json();
    assert_eq!(a, b);
}

#[test]
fn binary_honors_term_cap() {
    let exe = env!("CARGO_BIN_EXE_lieq");
    let ok = Command::new(exe).args(["casimir", "verify", "poincare", "--expr", C2P]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let capped = Command::new(exe)
        .env("LIEQ_TERM_CAP", "5")
        .args(["casimir", "verify", "poincare", "--expr", "(H + Px + KPx + Jy)^6"])
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("term"), "{}", String::from_utf8_lossy(&capped.stderr));
}
