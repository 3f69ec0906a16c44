//! Command-line front end: loads interchange documents, runs the exact
//! computations from the library, and prints canonical reports.
//!
//! Exit codes: 0 = success (and "yes" for predicate subcommands), 1 = usage
//! error, 2 = input or validation error, 3 = negative mathematical verdict.
//! All reports are deterministic and byte-stable for fixed inputs.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclohopf::field::parse_scalar;
use cyclohopf::io::{GrouplikesFile, HopfSource, RepFile};
use cyclohopf::{
    ake, check_cocycle, check_pseudo_twist, compute_closure, corep_level2_checker, cotwist_hopf,
    cyclic_group, dihedral_group, find_grouplikes, function_algebra, group_algebra, hopf_image,
    hopf_to_file, parse_algebra, parse_cocycle, parse_comodule, parse_comodules, parse_grouplikes,
    parse_hopf, parse_twist, pointed_criterion, rep_from_file, rep_to_file, skew_primitives,
    symmetric_group, taft, tannaka_equality_check, tensor_rep, to_json, twist_hopf,
    Cyclotomic, CyclotomicContext, GroupTable, HopfAlgebraData, Matrix, Representation,
    TwistKind, ValidationReport,
};

#[derive(Parser)]
#[command(
    name = "cyclohopf",
    version,
    about = "Exact computations with finite-dimensional Hopf algebras over cyclotomic fields"
)]
struct Cli {
    /// Output mode for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable text report.
    Text,
    /// The same report as a structured JSON document.
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check every algebra and Hopf axiom of a structure-constant file.
    Validate {
        /// Hopf algebra or plain algebra document.
        file: PathBuf,
    },
    /// Compute the Hopf image of a representation: smallest quotient through
    /// which the representation factors.
    HopfImage {
        /// Host Hopf algebra document.
        hopf: PathBuf,
        /// Representation document over that host.
        rep: PathBuf,
    },
    /// Decide inner faithfulness: exit 0 = yes, exit 3 = no.
    InnerFaithful {
        hopf: PathBuf,
        rep: PathBuf,
    },
    /// List the group-like elements of a Hopf algebra.
    Grouplikes {
        hopf: PathBuf,
        /// Extra candidate elements to verify and include in the search.
        #[arg(long)]
        candidates: Option<PathBuf>,
    },
    /// Solve for the (g, h)-skew primitive space of a Hopf algebra.
    SkewPrimitives {
        hopf: PathBuf,
        /// Group-like g as comma-separated coordinates, e.g. "0,1,0,0".
        #[arg(long = "g", allow_hyphen_values = true)]
        g: String,
        /// Group-like h in the same coordinate syntax.
        #[arg(long = "h", allow_hyphen_values = true)]
        h: String,
    },
    /// Test the pointed-algebra criterion for inner faithfulness:
    /// exit 0 = injective on group-likes and skew primitives, exit 3 = not.
    PointedCriterion {
        hopf: PathBuf,
        rep: PathBuf,
        /// Complete group-like set of the host.
        #[arg(long)]
        grouplikes: PathBuf,
    },
    /// Classify an invertible element of H (x) H and emit the twisted
    /// Hopf algebra when the comultiplication deformation closes up.
    Twist {
        hopf: PathBuf,
        twist: PathBuf,
    },
    /// Deform the multiplication by a convolution-invertible 2-cocycle and
    /// emit the cotwisted Hopf algebra.
    Cotwist {
        hopf: PathBuf,
        cocycle: PathBuf,
    },
    /// Emit the tensor product of two Hopf algebras.
    Tensor {
        hopf1: PathBuf,
        hopf2: PathBuf,
    },
    /// Emit the exterior tensor product of two representations.
    TensorRep {
        rep1: PathBuf,
        rep2: PathBuf,
    },
    /// Compare Hom spaces of two comodules over the host, over the Hopf
    /// image, and as morphisms of the underlying representation.
    PiHom {
        /// Representation document (must carry or reference its host).
        rep: PathBuf,
        comodule1: PathBuf,
        comodule2: PathBuf,
    },
    /// Run the level-2 corepresentation criterion for inner faithfulness on
    /// a representation with known group-likes and two-dimensional comodules:
    /// exit 0 = all conditions hold, exit 3 = some condition fails.
    Level2Check {
        rep: PathBuf,
        #[arg(long)]
        grouplikes: PathBuf,
        /// Two-dimensional comodules spanning the degree-2 part.
        #[arg(long)]
        comodules: PathBuf,
    },
    /// Emit a built-in Hopf algebra as an interchange document.
    #[command(subcommand)]
    Builder(Builder),
}

#[derive(Subcommand)]
enum Builder {
    /// Group algebra k[G] with group-like basis.
    GroupAlgebra {
        /// Group spec: comma-separated factors "cyclic:N", "dihedral:N", "sym:N".
        #[arg(long)]
        group: String,
        #[arg(long)]
        conductor: u64,
        /// Also write the verified group-like set to this file.
        #[arg(long)]
        grouplikes_out: Option<PathBuf>,
    },
    /// Function algebra k^G with pointwise multiplication.
    FunctionAlgebra {
        #[arg(long)]
        group: String,
        #[arg(long)]
        conductor: u64,
        #[arg(long)]
        grouplikes_out: Option<PathBuf>,
    },
    /// Taft algebra of dimension n^2 with parameter q of order n.
    Taft {
        #[arg(long)]
        n: usize,
        /// Primitive n-th root of unity in the scalar grammar, e.g. "z^4".
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        conductor: u64,
        #[arg(long)]
        grouplikes_out: Option<PathBuf>,
    },
    /// The 4k-dimensional Hopf algebra A(k, e) presented by a 2x2
    /// multiplicative matrix with relations of word length k.
    Ake {
        #[arg(long)]
        k: usize,
        /// Sign parameter, "+1" or "-1".
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long)]
        conductor: u64,
        #[arg(long)]
        grouplikes_out: Option<PathBuf>,
        /// Also write the standard two-dimensional comodules to this file.
        #[arg(long)]
        comodules_out: Option<PathBuf>,
    },
    /// Function algebra of the symmetric group S_n (n <= 4), with the
    /// characters of S_n as its verified group-likes.
    Sym {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        conductor: u64,
        #[arg(long)]
        grouplikes_out: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Input(cyclohopf::Error),
}

impl From<cyclohopf::Error> for CliError {
    fn from(e: cyclohopf::Error) -> Self {
        CliError::Input(e)
    }
}

/// One fully assembled report: text lines, the JSON mirror, and the exit code.
struct Report {
    exit: u8,
    lines: Vec<String>,
    json: Value,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = cli.format;
    match run(cli.command) {
        Ok(report) => {
            match format {
                Format::Text => emit_lines(&report.lines),
                Format::Json => match serde_json::to_string_pretty(&report.json) {
                    Ok(s) => emit_lines(&[s]),
                    Err(e) => {
                        eprintln!("error: {e}");
                        return ExitCode::from(2);
                    }
                },
            }
            ExitCode::from(report.exit)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Validate { file } => cmd_validate(&file),
        Command::HopfImage { hopf, rep } => cmd_hopf_image(&hopf, &rep),
        Command::InnerFaithful { hopf, rep } => cmd_inner_faithful(&hopf, &rep),
        Command::Grouplikes { hopf, candidates } => cmd_grouplikes(&hopf, candidates.as_deref()),
        Command::SkewPrimitives { hopf, g, h } => cmd_skew_primitives(&hopf, &g, &h),
        Command::PointedCriterion {
            hopf,
            rep,
            grouplikes,
        } => cmd_pointed_criterion(&hopf, &rep, &grouplikes),
        Command::Twist { hopf, twist } => cmd_twist(&hopf, &twist),
        Command::Cotwist { hopf, cocycle } => cmd_cotwist(&hopf, &cocycle),
        Command::Tensor { hopf1, hopf2 } => cmd_tensor(&hopf1, &hopf2),
        Command::TensorRep { rep1, rep2 } => cmd_tensor_rep(&rep1, &rep2),
        Command::PiHom {
            rep,
            comodule1,
            comodule2,
        } => cmd_pi_hom(&rep, &comodule1, &comodule2),
        Command::Level2Check {
            rep,
            grouplikes,
            comodules,
        } => cmd_level2_check(&rep, &grouplikes, &comodules),
        Command::Builder(b) => cmd_builder(b),
    }
}

/// Writes report lines to stdout, stopping quietly if the consumer has
/// closed the pipe.
fn emit_lines(lines: &[String]) {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for line in lines {
        if writeln!(out, "{line}").is_err() {
            return;
        }
    }
    let _ = out.flush();
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| {
        CliError::Input(cyclohopf::Error::InvalidInput(format!(
            "cannot read {}: {e}",
            path.display()
        )))
    })
}

fn load_hopf(path: &Path) -> Result<HopfAlgebraData, CliError> {
    Ok(parse_hopf(&read_file(path)?)?)
}

/// Loads a representation, resolving a host file reference relative to the
/// directory of the representation document itself.
fn load_rep(path: &Path, host: Option<HopfAlgebraData>) -> Result<Representation, CliError> {
    let text = read_file(path)?;
    let file: RepFile =
        serde_json::from_str(&text).map_err(|e| CliError::Input(cyclohopf::Error::Json(e)))?;
    let host = match (host, &file.hopf) {
        (Some(h), _) => Some(h),
        (None, Some(HopfSource::Path(p))) => {
            let base = path.parent().unwrap_or_else(|| Path::new("."));
            Some(load_hopf(&base.join(p))?)
        }
        (None, _) => None,
    };
    Ok(rep_from_file(&file, host)?)
}

fn write_side_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| {
        CliError::Input(cyclohopf::Error::InvalidInput(format!(
            "cannot write {}: {e}",
            path.display()
        )))
    })
}

fn fmt_dense(v: &[Cyclotomic]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn dense_strings(v: &[Cyclotomic]) -> Vec<String> {
    v.iter().map(|c| c.to_string()).collect()
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| dense_strings(m.row(i))).collect()
}

fn push_matrix(lines: &mut Vec<String>, m: &Matrix) {
    for i in 0..m.rows() {
        lines.push(format!("  {}", fmt_dense(m.row(i))));
    }
}

fn checks_json(report: &ValidationReport) -> Value {
    let entries: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "passed": c.passed,
                "witness": c.witness,
            })
        })
        .collect();
    json!(entries)
}

fn push_checks(lines: &mut Vec<String>, report: &ValidationReport) {
    for c in &report.checks {
        if c.passed {
            lines.push(format!("ok   {}", c.name));
        } else {
            let w = c.witness.as_deref().unwrap_or("");
            lines.push(format!("FAIL {} ({w})", c.name));
        }
    }
}

fn hopf_doc(h: &HopfAlgebraData) -> Value {
    serde_json::to_value(hopf_to_file(h)).expect("structure constants serialize")
}

/// Parses comma-separated scalars against the context of `h` as a dense
/// coordinate vector of the right length.
fn parse_vector_arg(h: &HopfAlgebraData, arg: &str, what: &str) -> Result<Vec<Cyclotomic>, CliError> {
    let ctx = h.context();
    let mut out = Vec::new();
    for part in arg.split(',') {
        out.push(parse_scalar(ctx, part.trim())?);
    }
    if out.len() != h.dim() {
        return Err(CliError::Usage(format!(
            "{what} has {} coordinates, expected {}",
            out.len(),
            h.dim()
        )));
    }
    Ok(out)
}

fn cmd_validate(file: &Path) -> Result<Report, CliError> {
    let text = read_file(file)?;
    // A document with comultiplication fields is a Hopf algebra; otherwise
    // fall back to the plain algebra format.
    let (report, conductor, dim) = match parse_hopf(&text) {
        Ok(h) => (h.validate(), h.context().conductor(), h.dim()),
        Err(hopf_err) => match parse_algebra(&text) {
            Ok(a) => (a.validate(), a.context().conductor(), a.dim()),
            Err(_) => return Err(CliError::Input(hopf_err)),
        },
    };
    let mut lines = vec![format!("conductor {conductor}, dimension {dim}")];
    push_checks(&mut lines, &report);
    let failed = report.checks.iter().filter(|c| !c.passed).count();
    if failed == 0 {
        lines.push(format!("all {} checks passed", report.checks.len()));
    } else {
        lines.push(format!(
            "{failed} of {} checks failed",
            report.checks.len()
        ));
    }
    Ok(Report {
        exit: if failed == 0 { 0 } else { 2 },
        json: json!({
            "conductor": conductor,
            "dim": dim,
            "checks": checks_json(&report),
            "all_passed": failed == 0,
        }),
        lines,
    })
}

fn cmd_hopf_image(hopf: &Path, rep: &Path) -> Result<Report, CliError> {
    let h = load_hopf(hopf)?;
    let r = load_rep(rep, Some(h))?;
    let res = hopf_image(&r)?;
    let mut lines = vec![
        format!("dim I_pi = {}", res.ideal.dim()),
        format!("dim H_pi = {}", res.image.dim()),
        format!("s-closure dims: {:?}", res.trace.s_closure_dims),
        format!("convolution dims: {:?}", res.trace.convolution_dims),
        "projection rows:".to_string(),
    ];
    push_matrix(&mut lines, &res.projection.matrix);
    lines.push("quotient document:".to_string());
    lines.push(to_json(&hopf_to_file(&res.image)).trim_end().to_string());
    Ok(Report {
        exit: 0,
        json: json!({
            "dim_ideal": res.ideal.dim(),
            "dim_image": res.image.dim(),
            "s_closure_dims": res.trace.s_closure_dims,
            "convolution_dims": res.trace.convolution_dims,
            "projection": matrix_rows(&res.projection.matrix),
            "quotient": hopf_doc(&res.image),
        }),
        lines,
    })
}

fn cmd_inner_faithful(hopf: &Path, rep: &Path) -> Result<Report, CliError> {
    let h = load_hopf(hopf)?;
    let r = load_rep(rep, Some(h))?;
    let closure = compute_closure(&r)?;
    let dim_ideal = closure.ideal.dim();
    let faithful = dim_ideal == 0;
    Ok(Report {
        exit: if faithful { 0 } else { 3 },
        lines: vec![
            format!("inner faithful: {}", if faithful { "yes" } else { "no" }),
            format!("dim I_pi = {dim_ideal}"),
        ],
        json: json!({
            "inner_faithful": faithful,
            "dim_ideal": dim_ideal,
        }),
    })
}

fn cmd_grouplikes(hopf: &Path, candidates: Option<&Path>) -> Result<Report, CliError> {
    let h = load_hopf(hopf)?;
    let declared = match candidates {
        Some(path) => {
            let text = read_file(path)?;
            let file: GrouplikesFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(cyclohopf::Error::Json(e)))?;
            let ctx = h.context();
            let mut out = Vec::new();
            for v in &file.elements {
                if v.len() != h.dim() {
                    return Err(CliError::Input(cyclohopf::Error::InvalidInput(format!(
                        "candidate has {} coordinates, expected {}",
                        v.len(),
                        h.dim()
                    ))));
                }
                let mut dense = Vec::with_capacity(v.len());
                for s in v {
                    dense.push(parse_scalar(ctx, s)?);
                }
                out.push(dense);
            }
            out
        }
        None => Vec::new(),
    };
    let gl = find_grouplikes(&h, &declared)?;
    let n = gl.len();
    let mut lines = vec![format!(
        "found {n} group-like elements ({})",
        if gl.complete {
            "search complete"
        } else {
            "search not proven complete"
        }
    )];
    for (i, g) in gl.elements.iter().enumerate() {
        lines.push(format!("g{i} = {}", fmt_dense(g)));
    }
    lines.push("product table rows:".to_string());
    let mut table_rows = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<usize> = (0..n).map(|j| gl.table[i * n + j]).collect();
        lines.push(format!("  {row:?}"));
        table_rows.push(row);
    }
    lines.push(format!("inverses: {:?}", gl.inverse));
    Ok(Report {
        exit: 0,
        json: json!({
            "count": n,
            "complete": gl.complete,
            "elements": gl.elements.iter().map(|g| dense_strings(g)).collect::<Vec<_>>(),
            "table": table_rows,
            "inverses": gl.inverse,
        }),
        lines,
    })
}

fn cmd_skew_primitives(hopf: &Path, g: &str, k: &str) -> Result<Report, CliError> {
    let h = load_hopf(hopf)?;
    let gv = parse_vector_arg(&h, g, "--g")?;
    let kv = parse_vector_arg(&h, k, "--h")?;
    let sp = skew_primitives(&h, &gv, &kv)?;
    let mut lines = vec![format!("dim = {}", sp.space.dim())];
    if sp.space.dim() == 0 {
        lines.push("basis: (empty)".to_string());
    } else {
        lines.push("basis:".to_string());
        push_matrix(&mut lines, sp.space.basis());
    }
    Ok(Report {
        exit: 0,
        json: json!({
            "dim": sp.space.dim(),
            "basis": matrix_rows(sp.space.basis()),
        }),
        lines,
    })
}

fn cmd_pointed_criterion(hopf: &Path, rep: &Path, grouplikes: &Path) -> Result<Report, CliError> {
    let h = load_hopf(hopf)?;
    let gl = parse_grouplikes(&read_file(grouplikes)?, &h)?;
    let r = load_rep(rep, Some(h))?;
    let res = pointed_criterion(&r, &gl)?;
    let mut lines = vec![format!(
        "pointed criterion: {}",
        if res.injective { "pass" } else { "fail" }
    )];
    let witness_json = match &res.witness {
        Some(w) => {
            lines.push(format!("witness group-like: {}", fmt_dense(&w.grouplike)));
            lines.push(format!("witness skew primitive: {}", fmt_dense(&w.vector)));
            json!({
                "grouplike": dense_strings(&w.grouplike),
                "vector": dense_strings(&w.vector),
            })
        }
        None => Value::Null,
    };
    Ok(Report {
        exit: if res.injective { 0 } else { 3 },
        json: json!({
            "injective": res.injective,
            "witness": witness_json,
        }),
        lines,
    })
}

fn cmd_twist(hopf: &Path, twist: &Path) -> Result<Report, CliError> {
    let h = load_hopf(hopf)?;
    let t = parse_twist(&read_file(twist)?, &h)?;
    let classification = check_pseudo_twist(&t);
    let kind = match classification.kind {
        TwistKind::Twist => "twist",
        TwistKind::PseudoTwist => "pseudo-twist",
        TwistKind::Neither => {
            let w = classification.witness.unwrap_or_default();
            return Err(CliError::Input(cyclohopf::Error::NotATwist(w)));
        }
    };
    let twisted = twist_hopf(&t)?;
    let lines = vec![
        format!("classification: {kind}"),
        "twisted Hopf algebra:".to_string(),
        to_json(&hopf_to_file(&twisted)).trim_end().to_string(),
    ];
    Ok(Report {
        exit: 0,
        json: json!({
            "classification": kind,
            "hopf": hopf_doc(&twisted),
        }),
        lines,
    })
}

fn cmd_cotwist(hopf: &Path, cocycle: &Path) -> Result<Report, CliError> {
    let h = load_hopf(hopf)?;
    let c = parse_cocycle(&read_file(cocycle)?, &h)?;
    let report = check_cocycle(&c);
    let twisted = cotwist_hopf(&c)?;
    let mut lines = Vec::new();
    push_checks(&mut lines, &report);
    lines.push("cotwisted Hopf algebra:".to_string());
    lines.push(to_json(&hopf_to_file(&twisted)).trim_end().to_string());
    Ok(Report {
        exit: 0,
        json: json!({
            "checks": checks_json(&report),
            "hopf": hopf_doc(&twisted),
        }),
        lines,
    })
}

fn cmd_tensor(hopf1: &Path, hopf2: &Path) -> Result<Report, CliError> {
    let a = load_hopf(hopf1)?;
    let b = load_hopf(hopf2)?;
    let t = a.tensor(&b)?;
    Ok(Report {
        exit: 0,
        lines: vec![to_json(&hopf_to_file(&t)).trim_end().to_string()],
        json: hopf_doc(&t),
    })
}

fn cmd_tensor_rep(rep1: &Path, rep2: &Path) -> Result<Report, CliError> {
    let r = load_rep(rep1, None)?;
    let s = load_rep(rep2, None)?;
    let t = tensor_rep(&r, &s)?;
    let file = rep_to_file(&t);
    Ok(Report {
        exit: 0,
        lines: vec![to_json(&file).trim_end().to_string()],
        json: serde_json::to_value(&file).expect("representation serializes"),
    })
}

fn cmd_pi_hom(rep: &Path, comodule1: &Path, comodule2: &Path) -> Result<Report, CliError> {
    let r = load_rep(rep, None)?;
    let u = parse_comodule(&read_file(comodule1)?, &r.source)?;
    let v = parse_comodule(&read_file(comodule2)?, &r.source)?;
    let report = tannaka_equality_check(&r, &[(u, v)])?;
    let row = &report.rows[0];
    Ok(Report {
        exit: 0,
        lines: vec![
            format!("dim Hom_H(U, V) = {}", row.dim_hom_host),
            format!("dim Hom_image(U, V) = {}", row.dim_hom_image),
            format!("dim Hom_pi(U, V) = {}", row.dim_hom_pi),
            format!(
                "image Hom agrees with pi morphisms: {}",
                if row.image_equals_pi { "yes" } else { "no" }
            ),
            format!(
                "host Hom strictly smaller: {}",
                if row.host_strictly_smaller { "yes" } else { "no" }
            ),
        ],
        json: json!({
            "dim_hom_host": row.dim_hom_host,
            "dim_hom_image": row.dim_hom_image,
            "dim_hom_pi": row.dim_hom_pi,
            "image_equals_pi": row.image_equals_pi,
            "host_strictly_smaller": row.host_strictly_smaller,
        }),
    })
}

fn cmd_level2_check(rep: &Path, grouplikes: &Path, comodules: &Path) -> Result<Report, CliError> {
    let r = load_rep(rep, None)?;
    let gl = parse_grouplikes(&read_file(grouplikes)?, &r.source)?;
    let mods = parse_comodules(&read_file(comodules)?, &r.source)?;
    let report = corep_level2_checker(&r, &gl, &mods)?;
    let passed = report.all_passed();
    let mut lines = Vec::new();
    push_checks(&mut lines, &report);
    lines.push(format!(
        "level 2 criterion: {}",
        if passed { "pass" } else { "fail" }
    ));
    Ok(Report {
        exit: if passed { 0 } else { 3 },
        json: json!({
            "checks": checks_json(&report),
            "all_passed": passed,
        }),
        lines,
    })
}

fn make_context(conductor: u64) -> Result<Arc<CyclotomicContext>, CliError> {
    Ok(CyclotomicContext::new(conductor)?)
}

fn parse_group_spec(spec: &str) -> Result<GroupTable, CliError> {
    let mut factors = spec.split(',');
    let first = factors.next().expect("split yields at least one part");
    let mut table = parse_group_factor(first)?;
    for f in factors {
        table = table.direct_product(&parse_group_factor(f)?);
    }
    Ok(table)
}

fn parse_group_factor(s: &str) -> Result<GroupTable, CliError> {
    let err = || {
        CliError::Usage(format!(
            "group factor '{s}' must look like cyclic:N, dihedral:N, or sym:N"
        ))
    };
    let (kind, n) = s.split_once(':').ok_or_else(err)?;
    let n: usize = n.trim().parse().map_err(|_| err())?;
    let table = match kind.trim() {
        "cyclic" => cyclic_group(n),
        "dihedral" => dihedral_group(n),
        "sym" => symmetric_group(n),
        _ => return Err(err()),
    };
    Ok(table?)
}

fn parse_sign(s: &str) -> Result<i64, CliError> {
    match s {
        "+1" | "1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(CliError::Usage(format!(
            "sign parameter must be +1 or -1, got '{s}'"
        ))),
    }
}

/// Emits a built Hopf algebra on stdout (identical bytes in both output
/// modes) and the optional side files.
fn builder_report(
    h: &HopfAlgebraData,
    grouplikes: Option<(&cyclohopf::GroupLikeSet, &Path)>,
    comodules: Option<(&[cyclohopf::Comodule], &Path)>,
) -> Result<Report, CliError> {
    if let Some((gl, path)) = grouplikes {
        write_side_file(path, &to_json(&cyclohopf::grouplikes_to_file(gl)))?;
    }
    if let Some((mods, path)) = comodules {
        let docs: Vec<_> = mods.iter().map(cyclohopf::io::comodule_to_file).collect();
        let file = cyclohopf::ComodulesFile { comodules: docs };
        write_side_file(path, &to_json(&file))?;
    }
    Ok(Report {
        exit: 0,
        lines: vec![to_json(&hopf_to_file(h)).trim_end().to_string()],
        json: hopf_doc(h),
    })
}

fn cmd_builder(b: Builder) -> Result<Report, CliError> {
    match b {
        Builder::GroupAlgebra {
            group,
            conductor,
            grouplikes_out,
        } => {
            let ctx = make_context(conductor)?;
            let table = parse_group_spec(&group)?;
            let (h, gl) = group_algebra(&ctx, &table)?;
            builder_report(&h, grouplikes_out.as_deref().map(|p| (&gl, p)), None)
        }
        Builder::FunctionAlgebra {
            group,
            conductor,
            grouplikes_out,
        } => {
            let ctx = make_context(conductor)?;
            let table = parse_group_spec(&group)?;
            let (h, gl) = function_algebra(&ctx, &table)?;
            builder_report(&h, grouplikes_out.as_deref().map(|p| (&gl, p)), None)
        }
        Builder::Taft {
            n,
            q,
            conductor,
            grouplikes_out,
        } => {
            let ctx = make_context(conductor)?;
            let qv = parse_scalar(&ctx, &q)?;
            let (h, gl) = taft(&ctx, n, &qv)?;
            builder_report(&h, grouplikes_out.as_deref().map(|p| (&gl, p)), None)
        }
        Builder::Ake {
            k,
            e,
            conductor,
            grouplikes_out,
            comodules_out,
        } => {
            let ctx = make_context(conductor)?;
            let sign = parse_sign(&e)?;
            let a = ake(&ctx, k, sign)?;
            builder_report(
                &a.hopf,
                grouplikes_out.as_deref().map(|p| (&a.grouplikes, p)),
                comodules_out.as_deref().map(|p| (a.comodules.as_slice(), p)),
            )
        }
        Builder::Sym {
            n,
            conductor,
            grouplikes_out,
        } => {
            let ctx = make_context(conductor)?;
            let table = symmetric_group(n)?;
            let (h, gl) = function_algebra(&ctx, &table)?;
            builder_report(&h, grouplikes_out.as_deref().map(|p| (&gl, p)), None)
        }
    }
}
