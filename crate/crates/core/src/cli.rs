//! Batch command-line front end. Exit codes: 0 success, 1 a verification
//! failed, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::canonical::{basis, ideal_components, paper_algebra};
use crate::coadjoint::{
    classify, genericity_crosscheck, isotropy_algebra, linear_form, verdict_json, XiParams,
};
use crate::error::Error;
use crate::lattice::{enumerate_ideals, to_dot, to_json, CertStatus, DEFAULT_MAX_COUNT};
use crate::lie::LieAlgebra;
use crate::linalg::{rational, Rational, Subspace};
use crate::model::suites::run_all;
use crate::model::{act, from_params, verify_model, GroupParams, SiegelPoint, MODEL_PAIRS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "vinberg",
    version,
    about = "Exact checks for the tube-domain automorphism algebra"
)]
pub struct Cli {
    /// Algebra file; the bundled algebra when omitted.
    #[arg(long, global = true)]
    pub algebra: Option<PathBuf>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Structure-constant checks.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Enumerate and certify the ideal lattice.
    Ideals(IdealsArgs),
    /// Coadjoint classification.
    #[command(subcommand)]
    Coadjoint(CoadjointCmd),
    /// The 6×6 model and its actions.
    #[command(subcommand)]
    Model(ModelCmd),
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    /// Jacobi identity and agreement with the matrix model.
    Verify,
}

#[derive(Debug, Args)]
pub struct IdealsArgs {
    /// Write the Hasse diagram here in DOT format.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_MAX_COUNT)]
    pub max: usize,
    /// Fail unless exactly this many ideals are found.
    #[arg(long)]
    pub expect: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum CoadjointCmd {
    Classify(ClassifyArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub xi3: String,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub eta3: String,
    #[arg(long, allow_hyphen_values = true)]
    pub n: i64,
    #[arg(long, allow_hyphen_values = true)]
    pub nprime: i64,
    /// Also compute the isotropy algebra and cross-check genericity.
    #[arg(long)]
    pub kernel: bool,
}

#[derive(Debug, Subcommand)]
pub enum ModelCmd {
    /// Run the seeded verification suites.
    Test {
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Apply a group element to a point of the domain.
    Act {
        /// Group parameters as a JSON record of rational strings.
        #[arg(long)]
        params: String,
        /// Ten doubles: re/im pairs of z¹…z⁵.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        point: Vec<f64>,
    },
}

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            EXIT_FAILED
        }
    }
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::AmbientMismatch(..)
            | Error::IdealCountExceeded(_)
            | Error::BadDeterminant(_)
            | Error::NonPositiveA3(_)
            | Error::OutsideDomain => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn load_algebra(cli: &Cli) -> std::result::Result<LieAlgebra, Failure> {
    match &cli.algebra {
        None => Ok(paper_algebra()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(LieAlgebra::from_json(&text)?)
        }
    }
}

fn has_canonical_basis(alg: &LieAlgebra) -> bool {
    alg.names().iter().map(String::as_str).eq(basis::NAMES)
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("json value")
    )
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Algebra(AlgebraCmd::Verify) => algebra_verify(cli, out),
        Command::Ideals(args) => ideals(cli, args, out),
        Command::Coadjoint(CoadjointCmd::Classify(args)) => coadjoint_classify(cli, args, out),
        Command::Model(ModelCmd::Test { samples }) => model_test(cli, *samples, out),
        Command::Model(ModelCmd::Act { params, point }) => model_act(cli, params, point, out),
    }
}

fn algebra_verify(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let alg = load_algebra(cli)?;
    let jacobi = alg.jacobi_violations();
    let model = if has_canonical_basis(&alg) {
        Some(verify_model(&alg)?)
    } else {
        None
    };
    let model_ok = model.as_ref().is_none_or(Vec::is_empty);
    if cli.json {
        let mismatches: Option<Vec<_>> = model.as_ref().map(|m| {
            m.iter()
                .map(|x| [alg.names()[x.i].clone(), alg.names()[x.j].clone()])
                .collect()
        });
        emit(
            out,
            &json!({
                "jacobi_violations": jacobi.len(),
                "model_pairs": MODEL_PAIRS,
                "model_mismatches": mismatches,
            }),
        )?;
    } else {
        let model_line = match &model {
            None => "model: skipped (non-canonical basis)".to_string(),
            Some(m) if m.is_empty() => format!("model: {MODEL_PAIRS} pairs OK"),
            Some(m) => format!("model: {} of {MODEL_PAIRS} pairs mismatched", m.len()),
        };
        writeln!(out, "jacobi: {} violations / {model_line}", jacobi.len())?;
        for (i, j, k, _) in jacobi.iter().take(10) {
            let n = alg.names();
            writeln!(out, "  jacobi fails on ({}, {}, {})", n[*i], n[*j], n[*k])?;
        }
        for m in model.iter().flatten().take(10) {
            let n = alg.names();
            writeln!(
                out,
                "  [{}, {}]: table {} / model {}",
                n[m.i],
                n[m.j],
                alg.format_vec(&m.expected),
                alg.format_vec(&m.actual)
            )?;
        }
    }
    Ok(if jacobi.is_empty() && model_ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn ideals(cli: &Cli, args: &IdealsArgs, out: &mut dyn Write) -> Outcome {
    let alg = load_algebra(cli)?;
    let lattice = enumerate_ideals(&alg, args.max)?;
    let components: Vec<(String, Subspace)> = if has_canonical_basis(&alg) {
        ideal_components()
    } else {
        Vec::new()
    };
    if let Some(path) = &args.dot {
        std::fs::write(path, to_dot(&lattice, &components))?;
    }
    let status = lattice.certificate.status;
    if cli.json {
        emit(out, &to_json(&lattice, &components))?;
    } else {
        writeln!(out, "{} ideals, {}", lattice.len(), status.label())?;
    }
    if let Some(expected) = args.expect {
        if expected != lattice.len() {
            return Err(Failure::Verification(format!(
                "expected {expected} ideals, found {}",
                lattice.len()
            )));
        }
    }
    Ok(if status == CertStatus::InfiniteFamilyDetected {
        EXIT_FAILED
    } else {
        EXIT_OK
    })
}

fn coadjoint_classify(cli: &Cli, args: &ClassifyArgs, out: &mut dyn Write) -> Outcome {
    let parse = |s: &str| -> std::result::Result<Rational, Failure> { Ok(rational::parse(s)?) };
    let p = XiParams::new(parse(&args.xi3)?, parse(&args.eta3)?, args.n, args.nprime);
    let alg = load_algebra(cli)?;
    if args.kernel && !has_canonical_basis(&alg) {
        return Err(Failure::Usage(
            "isotropy needs the canonical 12-element basis".into(),
        ));
    }
    let mut crosscheck = true;
    if cli.json {
        let doc = verdict_json(&alg, &p, args.kernel)?;
        crosscheck = doc
            .get("crosscheck")
            .and_then(|v| v.as_bool())
            .unwrap_or(true);
        emit(out, &doc)?;
    } else {
        let mut line = classify(&p).to_string();
        if args.kernel {
            let iso = isotropy_algebra(&alg, &linear_form(&p))?;
            crosscheck = genericity_crosscheck(&alg, &p)?;
            line.push_str(&format!(
                "; isotropy = {}; crosscheck {}",
                alg.format_subspace(&iso),
                if crosscheck { "OK" } else { "FAILED" }
            ));
        }
        writeln!(out, "{line}")?;
    }
    Ok(if crosscheck { EXIT_OK } else { EXIT_FAILED })
}

fn model_test(cli: &Cli, samples: usize, out: &mut dyn Write) -> Outcome {
    if samples == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    let reports = run_all(cli.seed, samples, cli.tol)?;
    if cli.json {
        emit(
            out,
            &json!({ "seed": cli.seed, "tol": cli.tol, "suites": reports }),
        )?;
    } else {
        writeln!(
            out,
            "seed {}, {samples} samples, tol {:e}",
            cli.seed, cli.tol
        )?;
        for r in &reports {
            let detail = if r.exact {
                format!("exact, {} failures", r.failures)
            } else {
                format!("max residual {:.3e}", r.max_residual)
            };
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            writeln!(out, "  {verdict}  {:<26} {detail}", r.name)?;
        }
    }
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    })
}

fn model_act(cli: &Cli, params: &str, point: &[f64], out: &mut dyn Write) -> Outcome {
    let g = from_params(&GroupParams::from_json(params)?)?;
    let pairs: [f64; 10] = point
        .try_into()
        .map_err(|_| Failure::Usage("--point needs exactly 10 numbers".into()))?;
    let w = act(&g, &SiegelPoint::from_pairs(&pairs))?;
    if cli.json {
        emit(out, &json!({ "image": w }))?;
    } else {
        let coords: Vec<String> =
            w.z.iter()
                .map(|c| format!("{:.12} {:+.12}i", c.re, c.im))
                .collect();
        writeln!(out, "{}", coords.join(", "))?;
    }
    Ok(EXIT_OK)
}
