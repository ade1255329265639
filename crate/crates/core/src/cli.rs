//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for
//! usage, parse and file errors. An algebra argument is a catalog name or
//! the path of an algebra file.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra, Renaming};
use crate::casimir::{self, CasimirError, Printed, Verification};
use crate::catalog::{Catalog, CatalogError};
use crate::contraction::{contract, contract_casimir, tables_equal, ContractionError, Power};
use crate::expr::{self, ExprError, Ordering, Resolver};
use crate::io as files;
use crate::limit::traditional_limit_report;
use crate::mhi::{self, MhiError};
use crate::report::report_paper;
use crate::uea::{CasimirCheck, Uea};

#[derive(Debug, Error)]
enum CliError {
    /// Bad arguments or unreadable input.
    #[error("{0}")]
    Input(String),
    /// The computation itself could not finish.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

fn input(e: impl Display) -> CliError {
    CliError::Input(e.to_string())
}

fn failed(e: impl Display) -> CliError {
    CliError::Failed(e.to_string())
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        failed(e)
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        match e {
            ExprError::Uea(inner) => failed(inner),
            other => input(other),
        }
    }
}

impl From<CasimirError> for CliError {
    fn from(e: CasimirError) -> Self {
        match e {
            CasimirError::Uea(inner) => failed(inner),
            CasimirError::Expr { source: ExprError::Uea(inner), .. } => failed(inner),
            other => input(other),
        }
    }
}

impl From<ContractionError> for CliError {
    fn from(e: ContractionError) -> Self {
        match e {
            ContractionError::MissingExponents(_)
            | ContractionError::UnknownGenerator(_)
            | ContractionError::Algebra(AlgebraError::BadRenaming(_)) => input(e),
            other => failed(other),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "lieq", version, about = "Exact computations with kinematical Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Browse the built-in algebras.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Check antisymmetry and the Jacobi identity.
    Validate { algebra: String },
    /// Print one bracket.
    Bracket { algebra: String, a: String, b: String },
    /// Verify or contract Casimir elements.
    #[command(subcommand)]
    Casimir(CasimirCommand),
    /// Contract an algebra along a rescaling map.
    Contract {
        algebra: String,
        #[arg(long)]
        map: PathBuf,
        /// Compare the contracted table with this algebra.
        #[arg(long)]
        check_against: Option<String>,
        /// Renaming applied before comparing; unlisted names map to themselves.
        #[arg(long, requires = "check_against")]
        rename: Option<PathBuf>,
    },
    /// Small-velocity limit checks.
    #[command(subcommand)]
    Limit(LimitCommand),
    /// Casimirs read as observables.
    #[command(subcommand)]
    Mhi(MhiCommand),
    /// End-to-end reports.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    List,
    Show {
        name: String,
        /// Print as an algebra file.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
enum CasimirCommand {
    /// Check that elements commute with every generator.
    Verify {
        algebra: String,
        /// Every printed Casimir of a catalog algebra.
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        all: bool,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Rescale an element and take the limit.
    Contract {
        algebra: String,
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        expr: String,
        /// Compensating power of eps, or `auto`.
        #[arg(long, default_value = "auto", value_parser = parse_power, allow_hyphen_values = true)]
        power: Power,
        #[arg(long, value_enum, default_value_t = OrderingArg::Verbatim)]
        ordering: OrderingArg,
    },
}

#[derive(Debug, Subcommand)]
enum LimitCommand {
    /// Boost relations from the Heisenberg realization.
    Traditional,
}

#[derive(Debug, Subcommand)]
enum MhiCommand {
    Show {
        group: String,
    },
    Nparticle {
        #[arg(allow_hyphen_values = true)]
        n: i64,
    },
}

#[derive(Debug, Subcommand)]
enum ReportCommand {
    /// Run every reproduction check.
    Paper {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderingArg {
    Verbatim,
    Symmetrized,
}

impl From<OrderingArg> for Ordering {
    fn from(o: OrderingArg) -> Self {
        match o {
            OrderingArg::Verbatim => Ordering::Verbatim,
            OrderingArg::Symmetrized => Ordering::Symmetrized,
        }
    }
}

fn parse_power(s: &str) -> Result<Power, String> {
    if s == "auto" {
        return Ok(Power::Auto);
    }
    s.parse().map(Power::Fixed).map_err(|_| format!("expected an integer or `auto`, got `{s}`"))
}

/// Run with `args` (program name first) and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn catalog() -> Result<Catalog, CliError> {
    Catalog::standard().map_err(failed)
}

fn load(catalog: &Catalog, arg: &str) -> Result<LieAlgebra, CliError> {
    if let Ok(alg) = catalog.get(arg) {
        return Ok(alg.clone());
    }
    let path = Path::new(arg);
    if path.exists() {
        return files::load_algebra(path).map_err(input);
    }
    Err(input(format!("`{arg}` is neither a catalog algebra nor a readable file")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<bool, CliError> {
    let cat = catalog()?;
    match command {
        Command::Catalog(CatalogCommand::List) => {
            for name in cat.names() {
                let alg = cat.get(name).map_err(failed)?;
                writeln!(out, "{name:<24} {:>2} generators: {}", alg.dim(), alg.generator_names().join(" "))?;
            }
            Ok(true)
        }
        Command::Catalog(CatalogCommand::Show { name, json }) => {
            let alg = cat.get(&name).map_err(input)?;
            if json {
                write!(out, "{}", files::export_algebra(alg))?;
            } else {
                show(alg, out)?;
            }
            Ok(true)
        }
        Command::Validate { algebra } => {
            let alg = load(&cat, &algebra)?;
            let report = alg.validate();
            if report.is_empty() {
                writeln!(out, "{}: valid Lie algebra ({} generators)", alg.name(), alg.dim())?;
            } else {
                writeln!(out, "{}: not a Lie algebra", alg.name())?;
                write!(out, "{report}")?;
            }
            Ok(report.is_empty())
        }
        Command::Bracket { algebra, a, b } => {
            let alg = load(&cat, &algebra)?;
            let comb = alg.bracket_named(&a, &b).map_err(input)?;
            writeln!(out, "[{a}, {b}] = {}", comb.display(&alg))?;
            Ok(true)
        }
        Command::Casimir(CasimirCommand::Verify { algebra, all, expr }) => {
            let verifications = if all {
                match casimir::verify_all(&cat, &algebra) {
                    Err(CasimirError::Catalog(CatalogError::UnknownAlgebra(_))) => {
                        return Err(input(format!("`{algebra}` is not a catalog algebra; use --expr")))
                    }
                    other => other?,
                }
            } else {
                let alg = load(&cat, &algebra)?;
                let text = expr.expect("clap requires --all or --expr");
                vec![casimir::verify(&alg, &Printed { label: "expr".into(), text })?]
            };
            let alg = load(&cat, &algebra)?;
            if verifications.is_empty() {
                writeln!(out, "no printed Casimirs for {algebra}")?;
            }
            let mut ok = true;
            for v in &verifications {
                ok &= v.holds();
                print_verification(&alg, v, out)?;
            }
            Ok(ok)
        }
        Command::Casimir(CasimirCommand::Contract { algebra, map, expr, power, ordering }) => {
            let alg = load(&cat, &algebra)?;
            let map = files::load_rescaling(&map).map_err(input)?;
            let uea = Uea::new(&alg);
            let e = expr::parse(&expr, &Resolver::for_algebra(&alg))?.evaluate(&uea, ordering.into())?;
            let c = match contract_casimir(&alg, &e, &map, power) {
                Ok(c) => c,
                Err(e @ (ContractionError::DivergentLimit { .. } | ContractionError::NoFinitePower)) => {
                    writeln!(out, "FAIL  {e}")?;
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "power: {}", c.power)?;
            writeln!(out, "limit: {}", c.element.display(&alg))?;
            if c.zero_limit {
                writeln!(out, "WARN  eps^{} sends every term to zero", c.power)?;
            }
            match contract(&alg, &map) {
                Ok(contracted) => {
                    let check = Uea::new(&contracted).is_casimir(&c.element).map_err(failed)?;
                    writeln!(out, "{}  Casimir of {}", status(check.holds()), contracted.name())?;
                    if !check.holds() {
                        writeln!(out, "      {}", witness(&contracted, &check))?;
                    }
                    Ok(check.holds())
                }
                Err(ContractionError::DivergentContraction { poles }) => {
                    writeln!(out, "WARN  the algebra itself has no limit: {} pole(s)", poles.len())?;
                    Ok(true)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Contract { algebra, map, check_against, rename } => {
            let alg = load(&cat, &algebra)?;
            let map = files::load_rescaling(&map).map_err(input)?;
            let contracted = match contract(&alg, &map) {
                Ok(c) => c,
                Err(ContractionError::DivergentContraction { poles }) => {
                    writeln!(out, "FAIL  no limit; divergent brackets:")?;
                    for p in poles {
                        writeln!(out, "      {p}")?;
                    }
                    return Ok(false);
                }
                Err(e) => return Err(e.into()),
            };
            let Some(target) = check_against else {
                show(&contracted, out)?;
                return Ok(true);
            };
            let target = load(&cat, &target)?;
            let renaming = match rename {
                Some(path) => files::load_renaming(&path).map_err(input)?,
                None => Renaming::identity(),
            };
            let diff = tables_equal(&contracted, &target, &renaming)?;
            if diff.is_equal() {
                writeln!(out, "PASS  {} is table-equal to {}", contracted.name(), target.name())?;
            } else {
                writeln!(out, "FAIL  {} differs from {}:", contracted.name(), target.name())?;
                write!(out, "{diff}")?;
            }
            Ok(diff.is_equal())
        }
        Command::Limit(LimitCommand::Traditional) => {
            let report = traditional_limit_report().map_err(failed)?;
            for line in report.lines() {
                writeln!(out, "{}  {}", status(line.holds), line.name)?;
                if !line.holds {
                    writeln!(out, "      residue: {}", line.residue)?;
                }
            }
            Ok(report.all_hold())
        }
        Command::Mhi(MhiCommand::Show { group }) => {
            let d = match mhi::actual_valued_observables_in(&cat, &group) {
                Err(e @ MhiError::UnknownGroup(_)) => return Err(input(e)),
                other => other.map_err(failed)?,
            };
            writeln!(out, "{}", d.group)?;
            for o in &d.observables {
                let ordering = o.verification.ordering.map_or("no ordering".to_string(), |o| format!("{o}"));
                writeln!(
                    out,
                    "{}  {:<10} {:<7} {:<16} eigenvalue {}  ({ordering})",
                    status(o.is_casimir()),
                    o.operator,
                    o.casimir,
                    o.quantity.to_string(),
                    o.eigenvalue
                )?;
            }
            Ok(d.all_casimir())
        }
        Command::Mhi(MhiCommand::Nparticle { n }) => {
            let l = mhi::n_particle_labels(n).map_err(input)?;
            writeln!(out, "particles: {}", l.n)?;
            writeln!(out, "mass:            {} = {}", l.mass, l.mass_value)?;
            writeln!(out, "spin:            {}", l.spin)?;
            writeln!(out, "charge:          {}", l.charge)?;
            writeln!(out, "particle number: {} = {}", l.particle_number, l.number_value)?;
            Ok(true)
        }
        Command::Report(ReportCommand::Paper { format, out: path }) => {
            let report = report_paper(&cat);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            match path {
                Some(p) => {
                    std::fs::write(&p, text).map_err(|e| input(format!("{}: {e}", p.display())))?;
                    let s = &report.summary;
                    writeln!(out, "{} pass, {} fail, {} warn; written to {}", s.pass, s.fail, s.warn, p.display())?;
                }
                None => write!(out, "{text}")?,
            }
            Ok(report.all_pass())
        }
    }
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn witness(alg: &LieAlgebra, check: &CasimirCheck) -> String {
    match &check.witness {
        None => "commutes with every generator".into(),
        Some(w) => format!("[e, {}] = {}", w.generator, w.residue.display(alg)),
    }
}

fn print_verification(alg: &LieAlgebra, v: &Verification, out: &mut dyn Write) -> io::Result<()> {
    match v.ordering {
        Some(o) => writeln!(out, "PASS  {}  ({o} ordering)", v.label)?,
        None => writeln!(out, "FAIL  {}", v.label)?,
    }
    if !v.verbatim.holds() {
        writeln!(out, "      verbatim: {}", witness(alg, &v.verbatim))?;
    }
    if let Some(sym) = &v.symmetrized {
        if !sym.holds() {
            writeln!(out, "      symmetrized: {}", witness(alg, sym))?;
        }
    }
    Ok(())
}

fn show(alg: &LieAlgebra, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{}", alg.name())?;
    writeln!(out, "generators: {}", alg.generator_names().join(" "))?;
    if !alg.symbols().is_empty() {
        writeln!(out, "symbols: {}", alg.symbols().join(" "))?;
    }
    for ((a, b), comb) in alg.stored_brackets() {
        writeln!(out, "[{}, {}] = {}", alg.generator_name(a), alg.generator_name(b), comb.display(alg))?;
    }
    Ok(())
}
