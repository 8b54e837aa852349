//! Batch front end: bound tables, Monte-Carlo verification, sharpness
//! certificates and high-dimensional margin reports as JSON or CSV.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use toeplitz_lab::extremal::{certify, extremal_g, ExtremalCertificate};
use toeplitz_lab::highdim::{
    ball_margins, polydisc_margins, sample_points, BallMargins, Direction, NormKind, NormedPoint,
    PolydiscMargins, MARGIN_TOL,
};
use toeplitz_lab::sampler::{
    g_from_schwarz, lift, montecarlo_verify, oracle_sup, sample_words, MonteCarloConfig,
    OracleResult, Target, Theorem, ORACLE_TOL, SAMPLE_TOL,
};
use toeplitz_lab::series::DEFAULT_ORDER;
use toeplitz_lab::{report, Complex64, Error, PhiSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;
pub const EXIT_REFUSED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "toeplitz-lab",
    version,
    about = "Sharp Toeplitz determinant bounds for subordination classes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bounds, hypotheses and a Fekete–Szegő table.
    Bounds(BoundsArgs),
    /// Monte-Carlo check of a determinant bound on sampled class members.
    Verify(VerifyArgs),
    /// Extremal-function certificate plus brute-force oracle.
    Sharpness(SharpnessArgs),
    /// CSV of bounds over a parameter sweep.
    Table(TableArgs),
    /// Ball and polydisc margins for lifted mappings.
    Highdim(HighdimArgs),
}

#[derive(Debug, Args)]
pub struct Common {
    /// starlike | alpha:<a> | janowski:<D>:<E> | power:<g> | custom:<path>
    #[arg(long, default_value = "starlike")]
    pub family: String,
    /// Truncation order of the series engine.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub common: Common,
    /// Fekete–Szegő parameters as `re` or `re,im`; repeatable.
    #[arg(long = "lambda", default_values_t = ["0".to_string(), "0.5".to_string(), "1".to_string(), "2".to_string()])]
    pub lambdas: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value = "t22")]
    pub theorem: String,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, env = "TOEPLITZ_LAB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = SAMPLE_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = 3)]
    pub max_factors: usize,
}

#[derive(Debug, Args)]
pub struct SharpnessArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 200)]
    pub grid: usize,
    /// Allowed oracle deficit below the closed form.
    #[arg(long, default_value_t = ORACLE_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// `<alpha|power>:<start>:<stop>:<step>`
    #[arg(long, default_value = "alpha:0:0.9:0.1")]
    pub sweep: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HighdimArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    #[arg(long, default_value = "sup")]
    pub norm: String,
    /// Radii of the extremal points `(r, 0, ..., 0)`, comma separated.
    #[arg(long = "r", value_delimiter = ',', default_values_t = [0.3, 0.6, 0.9])]
    pub radii: Vec<f64>,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, env = "TOEPLITZ_LAB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = MARGIN_TOL)]
    pub tol: f64,
    /// t22 | t31 | both
    #[arg(long, default_value = "both")]
    pub theorem: String,
}

/// Rendered output and the process exit code it maps to.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub code: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self {
            output,
            code: EXIT_OK,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub message: String,
    pub code: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundViolated(_) | Error::CertificationFailed { .. } => EXIT_VIOLATION,
            Error::ConditionNotMet(_) => EXIT_REFUSED,
            _ => EXIT_USAGE,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: EXIT_USAGE,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Bounds(a) => cmd_bounds(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Sharpness(a) => cmd_sharpness(a),
        Command::Table(a) => cmd_table(a),
        Command::Highdim(a) => cmd_highdim(a),
    }
}

pub fn output_path(cli: &Cli) -> Option<&PathBuf> {
    match &cli.command {
        Command::Bounds(a) => a.common.out.as_ref(),
        Command::Verify(a) => a.common.out.as_ref(),
        Command::Sharpness(a) => a.common.out.as_ref(),
        Command::Table(a) => a.out.as_ref(),
        Command::Highdim(a) => a.common.out.as_ref(),
    }
}

fn parse_lambda(s: &str) -> Result<Complex64, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| usage(format!("bad lambda '{s}': {e}")))
    };
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(usage(format!("bad lambda '{s}'"))),
    }
}

pub fn cmd_bounds(a: &BoundsArgs) -> Result<Outcome, Failure> {
    let phi = PhiSpec::parse(&a.common.family)?;
    let lambdas = a
        .lambdas
        .iter()
        .map(|s| parse_lambda(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Outcome::ok(to_json(&report(&phi, &lambdas)?)))
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let phi = PhiSpec::parse(&a.common.family)?;
    let theorem = Theorem::parse(&a.theorem)?;
    let cfg = MonteCarloConfig {
        samples: a.samples,
        seed: a.seed,
        max_factors: a.max_factors,
        order: a.common.order,
        tol: a.tol,
    };
    let r = montecarlo_verify(&phi, theorem, &cfg)?;
    let code = if r.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    Ok(Outcome {
        output: to_json(&r),
        code,
    })
}

#[derive(Debug, Serialize)]
struct OracleEntry {
    theorem: Theorem,
    asserted: bool,
    bound: f64,
    oracle: f64,
    deficit: f64,
    argmax: toeplitz_lab::sampler::JetBodyPoint,
}

#[derive(Debug, Serialize)]
struct SharpnessReport {
    certificate: ExtremalCertificate,
    grid: usize,
    oracle: Vec<OracleEntry>,
}

pub fn cmd_sharpness(a: &SharpnessArgs) -> Result<Outcome, Failure> {
    let phi = PhiSpec::parse(&a.common.family)?;
    let certificate = certify(&phi, a.common.order)?;
    let mut oracle = Vec::new();
    let mut code = EXIT_OK;
    for theorem in [Theorem::T22, Theorem::T31] {
        let jet = phi.jet2()?;
        let bound = theorem.bound(jet);
        let OracleResult { value, argmax } = oracle_sup(&phi, Target::from(theorem), a.grid)?;
        let asserted = theorem.condition(jet);
        let deficit = bound - value;
        if asserted && (deficit < -1e-9 || deficit > a.tol) {
            code = EXIT_VIOLATION;
        }
        oracle.push(OracleEntry {
            theorem,
            asserted,
            bound,
            oracle: value,
            deficit,
            argmax,
        });
    }
    Ok(Outcome {
        output: to_json(&SharpnessReport {
            certificate,
            grid: a.grid,
            oracle,
        }),
        code,
    })
}

/// Parameters `start, start + step, ...` up to `stop` inclusive, rounded to
/// twelve decimals so that e.g. `0.1 * 3` prints as `0.3`.
fn sweep_values(start: f64, stop: f64, step: f64) -> Vec<f64> {
    if step.is_nan() || step <= 0.0 || stop < start {
        return Vec::new();
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    (0..count)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
        .collect()
}

pub fn cmd_table(a: &TableArgs) -> Result<Outcome, Failure> {
    let parts: Vec<&str> = a.sweep.split(':').collect();
    let [family, start, stop, step] = parts.as_slice() else {
        return Err(usage(format!(
            "sweep must be <family>:<start>:<stop>:<step>, got '{}'",
            a.sweep
        )));
    };
    let num = |t: &str| {
        t.parse::<f64>()
            .map_err(|e| usage(format!("bad sweep value '{t}': {e}")))
    };
    let make: fn(f64) -> PhiSpec = match *family {
        "alpha" => PhiSpec::Alpha,
        "power" | "gamma" => PhiSpec::Power,
        other => return Err(usage(format!("unsupported sweep family '{other}'"))),
    };
    let mut csv = String::from("param,t22,t31,cond_t22,cond_t31\n");
    for p in sweep_values(num(start)?, num(stop)?, num(step)?) {
        let r = report(&make(p), &[])?;
        let cell = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
        writeln!(
            csv,
            "{p},{},{},{},{}",
            cell(r.t22.asserted()),
            cell(r.t31.asserted()),
            r.cond_t22,
            r.cond_t31
        )
        .expect("writing to a String cannot fail");
    }
    Ok(Outcome::ok(csv))
}

#[derive(Debug, Serialize)]
struct ExtremalPoint {
    r: f64,
    ball: BallMargins,
    #[serde(skip_serializing_if = "Option::is_none")]
    polydisc: Option<PolydiscMargins>,
}

#[derive(Debug, Serialize)]
struct SampleViolation {
    /// Sample index; absent for the extremal points.
    index: Option<usize>,
    kind: &'static str,
    z: Vec<Complex64>,
}

#[derive(Debug, Serialize)]
struct HighdimReport {
    family: String,
    n: usize,
    norm: NormKind,
    seed: u64,
    samples: usize,
    extremal: Vec<ExtremalPoint>,
    min_margins: serde_json::Value,
    violations: Vec<SampleViolation>,
}

fn min_or_null(v: f64) -> serde_json::Value {
    if v.is_finite() {
        json!(v)
    } else {
        serde_json::Value::Null
    }
}

pub fn cmd_highdim(a: &HighdimArgs) -> Result<Outcome, Failure> {
    let phi = PhiSpec::parse(&a.common.family)?;
    let kind = NormKind::parse(&a.norm)?;
    if a.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let (check_t22, check_t31) = match a.theorem.as_str() {
        "t22" => (true, false),
        "t31" => (false, true),
        "both" => (true, true),
        other => {
            return Err(usage(format!(
                "--theorem must be t22, t31 or both, got '{other}'"
            )))
        }
    };
    let keep = |v: &str| (check_t22 && v.ends_with("t22")) || (check_t31 && v.ends_with("t31"));
    let order = a.common.order.max(3);
    let dir = Direction::Coordinate(0);
    let mut violations = Vec::new();

    let h_ext = lift(&extremal_g(&phi, order)?);
    let mut extremal = Vec::new();
    for &r in &a.radii {
        let mut coords = vec![Complex64::new(0.0, 0.0); a.n];
        coords[0] = Complex64::new(r, 0.0);
        let z = NormedPoint::new(coords, kind)?;
        let ball = ball_margins(&phi, &h_ext, &z, &dir)?;
        let polydisc = match kind {
            NormKind::Sup => Some(polydisc_margins(&phi, &h_ext, &z, &dir)?),
            NormKind::Euclidean => None,
        };
        let names = ball
            .violations(a.tol)
            .into_iter()
            .chain(polydisc.iter().flat_map(|p| p.violations(a.tol)));
        for name in names.filter(|v| keep(v)) {
            violations.push(SampleViolation {
                index: None,
                kind: name,
                z: z.coords().to_vec(),
            });
        }
        extremal.push(ExtremalPoint { r, ball, polydisc });
    }

    let words = sample_words(a.samples, a.seed, 3);
    let points = sample_points(a.samples, a.n, kind, a.seed.wrapping_add(1));
    let mut mins = [f64::INFINITY; 4];
    for (i, (w, z)) in words.iter().zip(&points).enumerate() {
        let h = lift(&g_from_schwarz(&phi, w, order)?);
        let ball = ball_margins(&phi, &h, z, &dir)?;
        mins[0] = mins[0].min(ball.t22_margin);
        mins[1] = mins[1].min(ball.t31_margin);
        let mut names = ball.violations(a.tol);
        if kind == NormKind::Sup {
            let p = polydisc_margins(&phi, &h, z, &dir)?;
            mins[2] = mins[2].min(p.t22_margin);
            mins[3] = mins[3].min(p.t31_margin);
            names.extend(p.violations(a.tol));
        }
        for name in names.into_iter().filter(|v| keep(v)) {
            violations.push(SampleViolation {
                index: Some(i),
                kind: name,
                z: z.coords().to_vec(),
            });
        }
    }

    let code = if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    let report = HighdimReport {
        family: phi.descriptor(),
        n: a.n,
        norm: kind,
        seed: a.seed,
        samples: a.samples,
        extremal,
        min_margins: json!({
            "ball_t22": min_or_null(mins[0]),
            "ball_t31": min_or_null(mins[1]),
            "polydisc_t22": min_or_null(mins[2]),
            "polydisc_t31": min_or_null(mins[3]),
        }),
        violations,
    };
    Ok(Outcome {
        output: to_json(&report),
        code,
    })
}
