//! Command-line front end: loads documents, runs validators and queries, and
//! prints witnesses with stable exit codes.
//!
//! Exit codes: `0` when the property holds or the query succeeds, `1` when a
//! property fails (the witness is printed), `2` on usage or format errors.
//! Reports are deterministic; `--out json` emits one object with the fields
//! `command`, `valid`, `witnesses`, and `counts`, plus a `result` payload for
//! value-producing commands.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::bases::{structure_from_cbase, validate_cbase, SoftConvexBase};
use crate::convexity::{family_slice, induced_from_crisp, single_set_from_crisp, validate_structure,
    CrispConvexStructure, SoftConvexStructure};
use crate::document::{CrispDocument, Document, DocumentError};
use crate::error::Error;
use crate::morphisms::{is_sbp, is_scc, is_scp, is_sdp, PropertyVerdict};
use crate::operators::{structure_from_cderived, structure_from_hull_operator,
    validate_cderived_operator, validate_hull_operator};
use crate::oracle::{enumerate_soft_sets, enumerate_structures_seeded, verify_suite_seeded,
    EnumerationBudget, DEFAULT_SEED};
use crate::report::{CheckMode, ValidationReport, DEFAULT_SUBFAMILY_CAP};
use crate::soft_set::format_crisp;
use crate::space::Space;

#[derive(Parser)]
#[command(
    name = "softconvex",
    about = "Validators and queries for finite soft convex structures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Fast,
    Literal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OperatorKind {
    Hull,
    Derived,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenerateSource {
    Base,
    Operator,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Scp,
    Scc,
    Sdp,
    Sbp,
}

#[derive(Args)]
struct CommonArgs {
    /// Validation mode for directed-family axioms.
    #[arg(long, value_enum, default_value = "fast")]
    mode: ModeArg,
    /// Subfamily size cap for literal mode.
    #[arg(long, default_value_t = DEFAULT_SUBFAMILY_CAP)]
    cap: usize,
    /// Report format.
    #[arg(long, value_enum, default_value = "text")]
    out: OutFormat,
}

impl CommonArgs {
    fn mode(&self) -> CheckMode {
        match self.mode {
            ModeArg::Fast => CheckMode::Fast,
            ModeArg::Literal => CheckMode::Literal { cap: self.cap },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the soft convex structure axioms on a family.
    Validate {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Check the soft convex base axioms on a family.
    ValidateBase {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Check hull-operator or derived-operator laws on a table.
    ValidateOperator {
        #[arg(long, value_enum)]
        kind: OperatorKind,
        #[arg(long)]
        operator: String,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Soft convex hull of a target soft set in a structure.
    Hull {
        #[arg(long)]
        family: String,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Parameter-wise crisp hull of a target soft set.
    PointwiseHull {
        #[arg(long)]
        family: String,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// The crisp structure a family induces at one parameter.
    Slice {
        #[arg(long)]
        family: String,
        #[arg(long)]
        param: String,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Build the soft structure induced by a crisp structure file.
    Induce {
        /// Path to a crisp structure file `{"universe": [...], "members": [[...]]}`.
        #[arg(long)]
        crisp: PathBuf,
        /// Use only the diagonal assignments (one per crisp member).
        #[arg(long)]
        single_set: bool,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Generate the structure induced by a base or an operator.
    Generate {
        #[arg(long, value_enum)]
        from: GenerateSource,
        /// Base family name (with `--from base`).
        #[arg(long)]
        family: Option<String>,
        /// Operator name (with `--from operator`).
        #[arg(long)]
        operator: Option<String>,
        /// Operator law family (with `--from operator`).
        #[arg(long, value_enum, default_value = "hull")]
        kind: OperatorKind,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Check a preservation property of a declared point function.
    CheckFn {
        #[arg(long, value_enum)]
        property: PropertyArg,
        /// Function name in the domain document.
        #[arg(long = "fn")]
        function: String,
        /// Domain-side name: a family (scp/scc/sbp) or an operator (sdp).
        #[arg(long)]
        family: String,
        /// Codomain-side name, resolved in the codomain document.
        #[arg(long)]
        target: String,
        #[command(flatten)]
        common: CommonArgs,
        document: PathBuf,
    },
    /// Count soft sets and structures on small spaces.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        max_elems: usize,
        #[arg(long, default_value_t = 2)]
        max_params: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the exhaustive law suite on one small space.
    VerifySuite {
        #[arg(long, default_value_t = 2)]
        max_elems: usize,
        #[arg(long, default_value_t = 2)]
        max_params: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Everything `run` prints, with the exit code, for in-process testing.
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses and executes a command line; `args` includes the program name.
pub fn execute<I, S>(args: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successful output, not errors.
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            if benign {
                return CommandResult {
                    exit_code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            return CommandResult {
                exit_code: 2,
                stdout: String::new(),
                stderr: e.to_string(),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(output) => CommandResult {
            exit_code: if output.valid { 0 } else { 1 },
            stdout: output.rendered,
            stderr: String::new(),
        },
        Err(failure) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {failure}\n"),
        },
    }
}

/// Executes a command line and prints the result; returns the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let result = execute(args);
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    result.exit_code
}

struct Output {
    valid: bool,
    rendered: String,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Doc(#[from] DocumentError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

/// Accumulates the report in both formats and renders the requested one.
struct Report {
    command: &'static str,
    valid: bool,
    text: String,
    witnesses: Vec<Value>,
    counts: BTreeMap<String, u64>,
    result: Option<Value>,
}

impl Report {
    fn new(command: &'static str) -> Report {
        Report {
            command,
            valid: true,
            text: String::new(),
            witnesses: Vec::new(),
            counts: BTreeMap::new(),
            result: None,
        }
    }

    fn line(&mut self, line: impl AsRef<str>) {
        self.text.push_str(line.as_ref());
        self.text.push('\n');
    }

    fn count(&mut self, name: &str, value: u64) {
        self.counts.insert(name.to_string(), value);
    }

    fn witness_value(&mut self, value: Value) {
        self.witnesses.push(value);
    }

    /// Folds a validation report in: witnesses are printed with document
    /// names where possible and the validity flag is lowered on failure.
    fn absorb_validation(&mut self, doc: &Document, report: &ValidationReport) {
        if !report.is_valid() {
            self.valid = false;
        }
        for w in report.witnesses() {
            let members: Vec<String> = {
                let mut names: Vec<String> =
                    w.members.iter().map(|m| doc.display_name(m)).collect();
                names.sort();
                names
            };
            let computed = w.computed.as_ref().map(|c| c.to_string());
            let mut line = format!("witness {}: {}", w.axiom.id(), members.join(", "));
            if let Some(c) = &computed {
                let _ = write!(line, " -> {c}");
            }
            self.line(line);
            self.witness_value(json!({
                "axiom": w.axiom.id(),
                "members": members,
                "computed": computed,
            }));
        }
        for note in report.notes() {
            self.line(format!("note: {note}"));
        }
    }

    fn render(mut self, format: OutFormat) -> Output {
        let rendered = match format {
            OutFormat::Text => std::mem::take(&mut self.text),
            OutFormat::Json => {
                let mut obj = Map::new();
                obj.insert("command".to_string(), json!(self.command));
                obj.insert("valid".to_string(), json!(self.valid));
                obj.insert("witnesses".to_string(), Value::Array(self.witnesses.clone()));
                obj.insert("counts".to_string(), json!(self.counts));
                if let Some(result) = self.result.take() {
                    obj.insert("result".to_string(), result);
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(obj))
                    .expect("report serializes");
                s.push('\n');
                s
            }
        };
        Output {
            valid: self.valid,
            rendered,
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_document(path: &Path) -> Result<Document, Failure> {
    Ok(Document::parse(&read_file(path)?)?)
}

fn dispatch(command: Command) -> Result<Output, Failure> {
    match command {
        Command::Validate {
            family,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let fam = doc.family(&family)?;
            let validation = validate_structure(&fam, common.mode());
            let mut report = Report::new("validate");
            report.count("members", fam.len() as u64);
            report.line(format!(
                "validate {family}: {}",
                if validation.is_valid() { "VALID" } else { "INVALID" }
            ));
            report.absorb_validation(&doc, &validation);
            Ok(report.render(common.out))
        }
        Command::ValidateBase {
            family,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let fam = doc.family(&family)?;
            let validation = validate_cbase(&fam, common.mode());
            let mut report = Report::new("validate-base");
            report.count("members", fam.len() as u64);
            report.line(format!(
                "validate-base {family}: {}",
                if validation.is_valid() { "VALID" } else { "INVALID" }
            ));
            report.absorb_validation(&doc, &validation);
            Ok(report.render(common.out))
        }
        Command::ValidateOperator {
            kind,
            operator,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let table = doc.operator(&operator)?;
            let validation = match kind {
                OperatorKind::Hull => validate_hull_operator(&table, common.mode()),
                OperatorKind::Derived => validate_cderived_operator(&table, common.mode()),
            };
            let mut report = Report::new("validate-operator");
            report.count("entries", table.len() as u64);
            report.line(format!(
                "validate-operator {operator}: {}",
                if validation.is_valid() { "VALID" } else { "INVALID" }
            ));
            report.absorb_validation(&doc, &validation);
            Ok(report.render(common.out))
        }
        Command::Hull {
            family,
            target,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let mut report = Report::new("hull");
            if let Some(structure) = require_structure(&doc, &family, &common, &mut report)? {
                let set = doc.resolve(&target)?;
                let hull = structure.hull(&set)?;
                let name = doc.display_name(&hull);
                report.count("members", structure.len() as u64);
                report.line(&name);
                report.result = Some(json!(name));
            }
            Ok(report.render(common.out))
        }
        Command::PointwiseHull {
            family,
            target,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let mut report = Report::new("pointwise-hull");
            if let Some(structure) = require_structure(&doc, &family, &common, &mut report)? {
                let set = doc.resolve(&target)?;
                let hull = structure.pointwise_hull(&set)?;
                let name = doc.display_name(&hull);
                report.count("members", structure.len() as u64);
                report.line(&name);
                report.result = Some(json!(name));
            }
            Ok(report.render(common.out))
        }
        Command::Slice {
            family,
            param,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let fam = doc.family(&family)?;
            let sets = family_slice(&fam, &param)?;
            let mut report = Report::new("slice");
            report.count("sets", sets.len() as u64);
            let rendered: Vec<String> = sets
                .iter()
                .map(|s| {
                    // Render elements in universe order, not name order.
                    let ordered: Vec<&String> = doc
                        .space()
                        .universe()
                        .iter()
                        .filter(|x| s.contains(*x))
                        .collect();
                    format_crisp(&ordered)
                })
                .collect();
            for line in &rendered {
                report.line(line);
            }
            report.result = Some(json!(rendered));
            Ok(report.render(common.out))
        }
        Command::Induce {
            crisp,
            single_set,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let crisp_doc = CrispDocument::parse(&read_file(&crisp)?)?;
            if crisp_doc.universe != doc.space().universe() {
                return Err(Failure::Usage(format!(
                    "crisp universe {:?} differs from the document universe {:?}",
                    crisp_doc.universe,
                    doc.space().universe()
                )));
            }
            let mut report = Report::new("induce");
            let members = crisp_doc
                .members
                .iter()
                .map(|m| m.iter().cloned().collect())
                .collect::<Vec<std::collections::BTreeSet<String>>>();
            let crisp_validation = CrispConvexStructure::validate(
                crisp_doc.universe.clone(),
                members.clone(),
                common.mode(),
            )?;
            if !crisp_validation.is_valid() {
                report.valid = false;
                report.line("induce: crisp structure INVALID");
                report.absorb_validation(&doc, &crisp_validation);
                return Ok(report.render(common.out));
            }
            let crisp_structure = CrispConvexStructure::new(crisp_doc.universe, members)?;
            let induced = if single_set {
                single_set_from_crisp(&crisp_structure, doc.space().parameters())?
            } else {
                induced_from_crisp(&crisp_structure, doc.space().parameters())?
            };
            emit_structure(&mut report, &doc, &induced);
            Ok(report.render(common.out))
        }
        Command::Generate {
            from,
            family,
            operator,
            kind,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let mut report = Report::new("generate");
            match from {
                GenerateSource::Base => {
                    let name = family.ok_or_else(|| {
                        Failure::Usage("--from base requires --family".to_string())
                    })?;
                    let fam = doc.family(&name)?;
                    let validation = validate_cbase(&fam, common.mode());
                    if !validation.is_valid() {
                        report.valid = false;
                        report.line(format!("generate: base {name} INVALID"));
                        report.absorb_validation(&doc, &validation);
                        return Ok(report.render(common.out));
                    }
                    let base = SoftConvexBase::with_mode(fam, common.mode())
                        .expect("validated above");
                    let generated = structure_from_cbase(&base)?;
                    emit_structure(&mut report, &doc, &generated);
                }
                GenerateSource::Operator => {
                    let name = operator.ok_or_else(|| {
                        Failure::Usage("--from operator requires --operator".to_string())
                    })?;
                    let table = doc.operator(&name)?;
                    let validation = match kind {
                        OperatorKind::Hull => validate_hull_operator(&table, common.mode()),
                        OperatorKind::Derived => validate_cderived_operator(&table, common.mode()),
                    };
                    if !validation.is_valid() {
                        report.valid = false;
                        report.line(format!("generate: operator {name} INVALID"));
                        report.absorb_validation(&doc, &validation);
                        return Ok(report.render(common.out));
                    }
                    let generated = match kind {
                        OperatorKind::Hull => {
                            structure_from_hull_operator(&table, common.mode())?
                        }
                        OperatorKind::Derived => structure_from_cderived(&table, common.mode())?,
                    };
                    emit_structure(&mut report, &doc, &generated);
                }
            }
            Ok(report.render(common.out))
        }
        Command::CheckFn {
            property,
            function,
            family,
            target,
            common,
            document,
        } => {
            let doc = load_document(&document)?;
            let decl = doc.function_decl(&function)?;
            let codomain_path = resolve_codomain_path(&document, &decl.codomain);
            let codomain = load_document(&codomain_path)?;
            let f = doc.function(&function, &codomain)?;
            let mut report = Report::new("check-fn");

            let verdict: PropertyVerdict = match property {
                PropertyArg::Scp | PropertyArg::Scc => {
                    let zeta_x = structure_or_fail(&doc, &family, &common, &mut report)?;
                    let zeta_y = structure_or_fail(&codomain, &target, &common, &mut report)?;
                    match (zeta_x, zeta_y) {
                        (Some(zx), Some(zy)) => {
                            if property == PropertyArg::Scp {
                                is_scp(&f, &zx, &zy)?
                            } else {
                                is_scc(&f, &zx, &zy)?
                            }
                        }
                        _ => return Ok(report.render(common.out)),
                    }
                }
                PropertyArg::Sdp => {
                    let d_x = doc.operator(&family)?;
                    let d_y = codomain.operator(&target)?;
                    is_sdp(&f, &d_x, &d_y)?
                }
                PropertyArg::Sbp => {
                    let beta_x = base_or_fail(&doc, &family, &common, &mut report)?;
                    let beta_y = base_or_fail(&codomain, &target, &common, &mut report)?;
                    match (beta_x, beta_y) {
                        (Some(bx), Some(by)) => is_sbp(&f, &bx, &by)?,
                        _ => return Ok(report.render(common.out)),
                    }
                }
            };

            let label = match property {
                PropertyArg::Scp => "scp",
                PropertyArg::Scc => "scc",
                PropertyArg::Sdp => "sdp",
                PropertyArg::Sbp => "sbp",
            };
            if verdict.holds {
                report.line(format!("check-fn {function} {label}: HOLDS"));
            } else {
                report.valid = false;
                report.line(format!("check-fn {function} {label}: FAILS"));
                if let Some(witness) = &verdict.witness {
                    // SCP/SBP witnesses live in the codomain, SCC/SDP
                    // witnesses in the domain; try both name tables.
                    let name = match property {
                        PropertyArg::Scp | PropertyArg::Sbp => codomain.display_name(witness),
                        PropertyArg::Scc | PropertyArg::Sdp => doc.display_name(witness),
                    };
                    report.line(format!("witness: {name}"));
                    report.witness_value(json!({
                        "axiom": label,
                        "members": [name],
                        "computed": Value::Null,
                    }));
                }
            }
            Ok(report.render(common.out))
        }
        Command::Enumerate {
            max_elems,
            max_params,
            seed,
            common,
        } => {
            let budget = EnumerationBudget {
                max_universe: max_elems,
                max_parameters: max_params,
                ..EnumerationBudget::default()
            };
            let mut report = Report::new("enumerate");
            for ne in 1..=max_elems {
                for np in 1..=max_params {
                    let space = build_space(ne, np)?;
                    if space.bit_count() > crate::oracle::MAX_ENUMERATION_BITS {
                        report.line(format!("space {ne}x{np}: skipped (over budget)"));
                        continue;
                    }
                    let sets = enumerate_soft_sets(&space)?;
                    let structures = enumerate_structures_seeded(&space, &budget, seed)?;
                    let exhaustive = sets.len() <= budget.max_family_bits;
                    report.line(format!(
                        "space {ne}x{np}: soft-sets={} structures={}{}",
                        sets.len(),
                        structures.len(),
                        if exhaustive { "" } else { " (sampled)" }
                    ));
                    report.count(&format!("soft-sets-{ne}x{np}"), sets.len() as u64);
                    report.count(&format!("structures-{ne}x{np}"), structures.len() as u64);
                }
            }
            Ok(report.render(common.out))
        }
        Command::VerifySuite {
            max_elems,
            max_params,
            seed,
            common,
        } => {
            let budget = EnumerationBudget {
                max_universe: max_elems,
                max_parameters: max_params,
                subfamily_cap: common.cap,
                ..EnumerationBudget::default()
            };
            let space = build_space(max_elems, max_params)?;
            let suite = verify_suite_seeded(&space, &budget, seed)?;
            let mut report = Report::new("verify-suite");
            report.valid = suite.passed();
            report.line(suite.to_string().trim_end());
            for (name, value) in &suite.counts {
                report.count(name, *value);
            }
            for section in &suite.sections {
                report.count(&format!("checked-{}", section.name), section.checked);
                if let Some(failure) = &section.first_failure {
                    report.witness_value(json!({
                        "axiom": section.name,
                        "members": [],
                        "computed": failure,
                    }));
                }
            }
            Ok(report.render(common.out))
        }
    }
}

fn build_space(elements: usize, parameters: usize) -> Result<Arc<Space>, Failure> {
    let xs: Vec<String> = (1..=elements).map(|i| format!("x{i}")).collect();
    let es: Vec<String> = (1..=parameters).map(|i| format!("e{i}")).collect();
    Ok(Space::new(xs, es)?)
}

fn resolve_codomain_path(document: &Path, reference: &str) -> PathBuf {
    let referenced = Path::new(reference);
    if referenced.is_absolute() {
        referenced.to_path_buf()
    } else {
        document
            .parent()
            .unwrap_or_else(|| Path::new("."))
            .join(referenced)
    }
}

/// Validates the named family as a structure, folding witnesses into the
/// report on failure (the command then exits 1).
fn require_structure(
    doc: &Document,
    family: &str,
    common: &CommonArgs,
    report: &mut Report,
) -> Result<Option<SoftConvexStructure>, Failure> {
    let fam = doc.family(family)?;
    let validation = validate_structure(&fam, common.mode());
    if validation.is_valid() {
        Ok(Some(
            SoftConvexStructure::with_mode(fam, common.mode()).expect("validated above"),
        ))
    } else {
        report.valid = false;
        report.line(format!("family {family} is not a soft convex structure"));
        report.absorb_validation(doc, &validation);
        Ok(None)
    }
}

fn structure_or_fail(
    doc: &Document,
    family: &str,
    common: &CommonArgs,
    report: &mut Report,
) -> Result<Option<SoftConvexStructure>, Failure> {
    require_structure(doc, family, common, report)
}

fn base_or_fail(
    doc: &Document,
    family: &str,
    common: &CommonArgs,
    report: &mut Report,
) -> Result<Option<SoftConvexBase>, Failure> {
    let fam = doc.family(family)?;
    let validation = validate_cbase(&fam, common.mode());
    if validation.is_valid() {
        Ok(Some(
            SoftConvexBase::with_mode(fam, common.mode()).expect("validated above"),
        ))
    } else {
        report.valid = false;
        report.line(format!("family {family} is not a soft convex base"));
        report.absorb_validation(doc, &validation);
        Ok(None)
    }
}

fn emit_structure(report: &mut Report, doc: &Document, structure: &SoftConvexStructure) {
    report.count("members", structure.len() as u64);
    let rendered: Vec<String> = structure
        .members()
        .iter()
        .map(|m| doc.display_name(m))
        .collect();
    for name in &rendered {
        report.line(name);
    }
    report.result = Some(json!(rendered));
}
