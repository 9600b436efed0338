//! Command-line interface: field/curve/semigroup inspection, code
//! construction, distance computation, minimum-weight support operations,
//! the exhaustive oracles, and frozen reference scenarios.
//!
//! Conventions shared by every subcommand:
//!
//! * stdout is machine-readable and byte-deterministic for identical
//!   invocations (JSON objects print with sorted keys and integer values;
//!   field elements appear as their packed decimal encoding); timings go
//!   to stderr;
//! * `--out FILE` writes the exact stdout bytes to the file as well;
//! * exit codes: 0 success, 1 reference-scenario mismatch, 2 argument or
//!   input errors, 3 search-budget refusal, 4 theorem-violation detection
//!   (an exhaustive search disagreeing with a formula or classification).

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::code::HermitianCode;
use crate::curve::{enumerate_points, Divisor};
use crate::field::FieldContext;
use crate::groebner::Polynomial;
use crate::minwords::{
    classify_support, construct_line_union_support, construct_phase1_support,
    construct_type_ii_support, distance, sample_type_i_support, type_ii_label, type_ii_mu,
    MinwordsError, Phase1Mode, SupportCertificate,
};
use crate::oracle::{
    brute_force_distance, enumerate_min_supports, Budget, OracleError,
};
use crate::semigroup::{self, code_label_info};

#[derive(Parser)]
#[command(
    name = "hermicode",
    version,
    about = "Hermitian codes over GF(q^2): distances, minimum-weight supports, exhaustive oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Field selection: either `--q` (a prime power) or `--p` with `--k`.
/// The working field is always GF(q²) = GF(p^{2k}).
#[derive(Args, Clone)]
struct FieldSel {
    /// Prime power q; the code alphabet is GF(q²)
    #[arg(long, conflicts_with_all = ["p", "k"])]
    q: Option<u32>,
    /// Characteristic p (use together with --k; q = p^k)
    #[arg(long, requires = "k")]
    p: Option<u64>,
    /// Exponent k with q = p^k (use together with --p)
    #[arg(long, requires = "p")]
    k: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the parameters of GF(q²) and its distinguished subfield GF(q)
    FieldInfo(FieldSelOnly),
    /// Curve queries
    Curve {
        #[command(subcommand)]
        sub: CurveCmd,
    },
    /// Weierstrass-semigroup queries
    Semigroup {
        #[command(subcommand)]
        sub: SemigroupCmd,
    },
    /// Code construction and export
    Code {
        #[command(subcommand)]
        sub: CodeCmd,
    },
    /// Minimum distance of C_m from the closed-form expression
    Distance(DistanceArgs),
    /// Minimum-weight support construction and classification
    Minwords {
        #[command(subcommand)]
        sub: MinwordsCmd,
    },
    /// Exhaustive brute-force oracles
    Oracle {
        #[command(subcommand)]
        sub: OracleCmd,
    },
    /// Recompute a built-in reference scenario and diff it against its
    /// golden file
    Repro(ReproArgs),
}

#[derive(Args)]
struct FieldSelOnly {
    #[command(flatten)]
    field: FieldSel,
}

#[derive(Subcommand)]
enum CurveCmd {
    /// List the rational affine points (norm(x) = trace(y)), ascending
    Points {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SemigroupCmd {
    /// The gaps of the semigroup ⟨q, q+1⟩, comma-separated
    Gaps {
        #[command(flatten)]
        field: FieldSel,
    },
    /// CSV table of m, m̃, δ, δ̃, phase for every code label in a range
    Table {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum CodeCmd {
    /// The code parameters [n, k, d] and semigroup data for C_m
    Params {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The parity-check matrix of C_m with point and basis metadata
    Matrix {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct DistanceArgs {
    #[command(flatten)]
    field: FieldSel,
    #[arg(long)]
    m: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    /// Single curve cutting the support (canonical union of lines)
    #[value(name = "i")]
    I,
    /// Two curves with leading monomials x^q and y^μ (norm/trace grid)
    #[value(name = "ii")]
    Ii,
    /// Vertical line carrying d(m) points (small-m regime)
    #[value(name = "vertical")]
    Vertical,
    /// Non-vertical line carrying d(m) points (small-m regime, m+1 = h·q)
    #[value(name = "nonvertical")]
    NonVertical,
}

#[derive(Subcommand)]
enum MinwordsCmd {
    /// Rejection-sample a single-curve minimum support and certify it
    Sample {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value = "0")]
        seed: u64,
        /// Attempt budget (default 10·q²)
        #[arg(long)]
        attempts: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Deterministically construct a minimum support of the chosen kind
    Construct {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        m: u64,
        #[arg(long = "type", value_enum)]
        kind: ConstructKind,
        /// Row count μ for --type ii (default: derived from m)
        #[arg(long)]
        mu: Option<u32>,
        /// Shared norm/trace target for --type ii, as a packed field
        /// element (default: the first nonzero subfield element)
        #[arg(long)]
        c: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a divisor, given as comma-separated point indices
    Classify {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        m: u64,
        /// Point indices into the ascending point order, e.g. "0,1,2,3"
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Exhaustively search the minimum distance and compare with the
    /// formula (disagreement exits 4)
    Distance {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        m: u64,
        /// Largest subset size to search (default: the formula distance)
        #[arg(long)]
        w_max: Option<u32>,
        /// Subset budget (default: HERMICODE_BUDGET or 50000000)
        #[arg(long)]
        budget: Option<String>,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively enumerate every minimum-weight support and classify
    /// each one
    Census {
        #[command(flatten)]
        field: FieldSel,
        #[arg(long)]
        m: u64,
        /// Subset budget (default: HERMICODE_BUDGET or 50000000)
        #[arg(long)]
        budget: Option<String>,
        /// Worker threads (default: all cores)
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ReproArgs {
    /// Scenario id: example-2_7, example-2_9, example-solito3,
    /// example-4_1, example-4_4 (dots accepted in place of underscores)
    id: String,
    /// Optional q check; every built-in scenario runs at q = 4
    #[arg(long)]
    q: Option<u32>,
    /// Rewrite the golden file with the freshly computed output
    #[arg(long, hide = true)]
    bless: bool,
}

/// A failure carrying the process exit code it maps to.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

impl From<MinwordsError> for Failure {
    fn from(e: MinwordsError) -> Self {
        let code = match &e {
            MinwordsError::TheoremViolation(_) => 4,
            _ => 2,
        };
        fail(code, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        let code = match &e {
            OracleError::BudgetExceeded { .. } => 3,
            OracleError::TheoremViolation(_) => 4,
            OracleError::Minwords(MinwordsError::TheoremViolation(_)) => 4,
            _ => 2,
        };
        fail(code, e.to_string())
    }
}

/// Entry point: parse `argv`, run, and return the process exit code.
pub fn main_with_args<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout and usage errors to
            // stderr, with exit code 0 or 2 respectively.
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary: parse the process arguments.
pub fn run() -> i32 {
    main_with_args(std::env::args_os())
}

fn resolve_field(sel: &FieldSel) -> Result<FieldContext, Failure> {
    let (p, k) = match (sel.q, sel.p, sel.k) {
        (Some(q), None, None) => factor_prime_power(q)?,
        (None, Some(p), Some(k)) => (p, k),
        _ => {
            return Err(fail(
                2,
                "select the field with either --q or both --p and --k",
            ))
        }
    };
    FieldContext::new(p, k).map_err(|e| fail(2, e.to_string()))
}

fn factor_prime_power(q: u32) -> Result<(u64, u32), Failure> {
    if q < 2 {
        return Err(fail(2, format!("q must be at least 2, got {q}")));
    }
    let mut p = 2u64;
    while p * p <= q as u64 {
        if q as u64 % p == 0 {
            break;
        }
        p += 1;
    }
    let p = if q as u64 % p == 0 { p } else { q as u64 };
    let mut rest = q as u64;
    let mut k = 0u32;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(fail(
            2,
            format!("q must be a prime power, got {q} = p^k·{rest} with p = {p}"),
        ));
    }
    Ok((p, k))
}

/// Print `text` to stdout and, when requested, to a file as well.
fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, text)
            .map_err(|e| fail(2, format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn points_json(points: &[crate::curve::CurvePoint]) -> serde_json::Value {
    serde_json::Value::Array(
        points
            .iter()
            .map(|p| serde_json::json!([p.x.value(), p.y.value()]))
            .collect(),
    )
}

/// The JSON body shared by every certificate-producing subcommand.
fn certificate_json(code: &HermitianCode, cert: &SupportCertificate) -> serde_json::Value {
    let indices = cert.divisor.to_indices(code.points());
    serde_json::json!({
        "q": code.q(),
        "m": cert.m,
        "distance": code.distance(),
        "verdict": cert.verdict.to_string(),
        "divisor": points_json(cert.divisor.points()),
        "indices": indices,
        "witnesses": cert.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "footprint": cert.footprint.monomials().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "codeword": cert.codeword.as_ref().map(|w| {
            w.coords().iter().map(|c| c.value()).collect::<Vec<_>>()
        }),
    })
}

fn build_code(ctx: FieldContext, m: u64) -> Result<HermitianCode, Failure> {
    HermitianCode::build(Arc::new(ctx), m).map_err(|e| fail(2, e.to_string()))
}

fn budget_from(flag: &Option<String>) -> Result<Budget, Failure> {
    match flag {
        Some(s) => Ok(Budget::parse(s)?),
        None => Ok(Budget::from_env()?),
    }
}

/// Run `body` on a rayon pool with the requested thread count (the global
/// pool when unspecified).
fn with_jobs<T: Send>(jobs: Option<usize>, body: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(body()),
        Some(n) => {
            if n == 0 {
                return Err(fail(2, "--jobs must be at least 1"));
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| fail(2, format!("cannot build thread pool: {e}")))?;
            Ok(pool.install(body))
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::FieldInfo(args) => field_info(&args.field),
        Command::Curve { sub } => match sub {
            CurveCmd::Points { field, out } => curve_points(&field, &out),
        },
        Command::Semigroup { sub } => match sub {
            SemigroupCmd::Gaps { field } => semigroup_gaps(&field),
            SemigroupCmd::Table {
                field,
                from,
                to,
                out,
            } => {
                let ctx = resolve_field(&field)?;
                let text = semigroup_table_csv(ctx.q(), from, to)?;
                emit(&out, &text)
            }
        },
        Command::Code { sub } => match sub {
            CodeCmd::Params { field, m, format, out } => code_params(&field, m, format, &out),
            CodeCmd::Matrix { field, m, format, out } => code_matrix(&field, m, format, &out),
        },
        Command::Distance(args) => {
            let ctx = resolve_field(&args.field)?;
            let d = distance(ctx.q(), args.m)?;
            println!("{d}");
            Ok(())
        }
        Command::Minwords { sub } => match sub {
            MinwordsCmd::Sample {
                field,
                m,
                seed,
                attempts,
                out,
            } => minwords_sample(&field, m, seed, attempts, &out),
            MinwordsCmd::Construct {
                field,
                m,
                kind,
                mu,
                c,
                out,
            } => minwords_construct(&field, m, kind, mu, &c, &out),
            MinwordsCmd::Classify {
                field,
                m,
                divisor,
                out,
            } => minwords_classify(&field, m, &divisor, &out),
        },
        Command::Oracle { sub } => match sub {
            OracleCmd::Distance {
                field,
                m,
                w_max,
                budget,
                jobs,
                out,
            } => oracle_distance(&field, m, w_max, &budget, jobs, &out),
            OracleCmd::Census {
                field,
                m,
                budget,
                jobs,
                out,
            } => oracle_census(&field, m, &budget, jobs, &out),
        },
        Command::Repro(args) => repro(&args),
    }
}

fn field_info(sel: &FieldSel) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let value = serde_json::json!({
        "p": ctx.p(),
        "k": ctx.k(),
        "q": ctx.q(),
        "field_size": ctx.size(),
        "subfield_size": ctx.q(),
        "modulus": ctx.modulus_string(),
    });
    print!("{}", json_text(&value));
    Ok(())
}

fn curve_points(sel: &FieldSel, out: &Option<PathBuf>) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let points = enumerate_points(&ctx);
    let value = serde_json::json!({
        "q": ctx.q(),
        "count": points.len(),
        "points": points_json(&points),
    });
    emit(out, &json_text(&value))
}

fn semigroup_gaps(sel: &FieldSel) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let gaps: Vec<String> = semigroup::gaps(ctx.q()).iter().map(u64::to_string).collect();
    println!("{}", gaps.join(","));
    Ok(())
}

/// The CSV table of semigroup data for every code label in [from, to].
fn semigroup_table_csv(q: u32, from: u64, to: u64) -> Result<String, Failure> {
    if from > to {
        return Err(fail(2, format!("--from {from} exceeds --to {to}")));
    }
    let mut text = String::from("m,m_tilde,delta,delta_tilde,phase\n");
    for m in from..=to {
        if !semigroup::is_code_label(q, m) {
            continue;
        }
        let info = code_label_info(q, m).map_err(|e| fail(2, e.to_string()))?;
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            m, info.m_tilde, info.delta, info.delta_tilde, info.phase
        ));
    }
    Ok(text)
}

fn code_params(
    sel: &FieldSel,
    m: u64,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let code = build_code(ctx, m)?;
    let info = code.info();
    let text = match format {
        Format::Json => json_text(&serde_json::json!({
            "q": code.q(),
            "m": code.m(),
            "n": code.n(),
            "dim": code.dim(),
            "distance": code.distance(),
            "basis_size": code.basis_monomials().len(),
            "m_tilde": info.m_tilde,
            "delta": info.delta,
            "delta_tilde": info.delta_tilde,
            "phase": info.phase.to_string(),
            "mu": info.mu,
            "lambda": info.lambda,
        })),
        Format::Csv => format!(
            "q,m,n,dim,distance,basis_size,m_tilde,delta,delta_tilde,phase,mu,lambda\n\
             {},{},{},{},{},{},{},{},{},{},{},{}\n",
            code.q(),
            code.m(),
            code.n(),
            code.dim(),
            code.distance(),
            code.basis_monomials().len(),
            info.m_tilde,
            info.delta,
            info.delta_tilde,
            info.phase,
            info.mu,
            info.lambda,
        ),
    };
    emit(out, &text)
}

fn code_matrix(
    sel: &FieldSel,
    m: u64,
    format: Format,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let code = build_code(ctx, m)?;
    let parity = code.parity_check();
    let text = match format {
        Format::Json => {
            let rows: Vec<Vec<u32>> = (0..parity.rows()).map(|i| parity.row(i).to_vec()).collect();
            json_text(&serde_json::json!({
                "q": code.q(),
                "m": code.m(),
                "rows": parity.rows(),
                "cols": parity.cols(),
                "basis": code.basis_monomials().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                "points": points_json(code.points()),
                "matrix": rows,
            }))
        }
        Format::Csv => {
            // Two metadata rows (point coordinates), then one row per
            // basis monomial; the first column labels the row.
            let mut text = String::new();
            let xs: Vec<String> = code.points().iter().map(|p| p.x.value().to_string()).collect();
            let ys: Vec<String> = code.points().iter().map(|p| p.y.value().to_string()).collect();
            text.push_str(&format!("x,{}\n", xs.join(",")));
            text.push_str(&format!("y,{}\n", ys.join(",")));
            for (i, mono) in code.basis_monomials().iter().enumerate() {
                let row: Vec<String> = parity.row(i).iter().map(u32::to_string).collect();
                text.push_str(&format!("{},{}\n", mono, row.join(",")));
            }
            text
        }
    };
    emit(out, &text)
}

fn minwords_sample(
    sel: &FieldSel,
    m: u64,
    seed: u64,
    attempts: Option<u64>,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let code = build_code(resolve_field(sel)?, m)?;
    let q = code.q();
    match sample_type_i_support(code.ctx(), m, seed, attempts)? {
        None => {
            let budget = attempts.unwrap_or(10 * q as u64 * q as u64);
            let value = serde_json::json!({
                "q": q,
                "m": m,
                "seed": seed,
                "found": false,
                "attempts": budget,
            });
            emit(out, &json_text(&value))
        }
        Some((divisor, curve)) => {
            let cert = classify_support(&code, &divisor)?;
            let mut value = certificate_json(&code, &cert);
            let obj = value.as_object_mut().expect("certificate is an object");
            obj.insert("found".to_string(), serde_json::json!(true));
            obj.insert("seed".to_string(), serde_json::json!(seed));
            obj.insert("sampled_curve".to_string(), serde_json::json!(curve.to_string()));
            emit(out, &json_text(&value))
        }
    }
}

fn minwords_construct(
    sel: &FieldSel,
    m: u64,
    kind: ConstructKind,
    mu: Option<u32>,
    c: &Option<String>,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let code = build_code(resolve_field(sel)?, m)?;
    let ctx = code.ctx();
    let (divisor, construction, curves): (Divisor, &str, Vec<Polynomial>) = match kind {
        ConstructKind::Vertical => {
            let (d, line) = construct_phase1_support(ctx, m, Phase1Mode::Vertical)?;
            (d, "vertical-line", vec![line])
        }
        ConstructKind::NonVertical => {
            let (d, line) = construct_phase1_support(ctx, m, Phase1Mode::NonVertical)?;
            (d, "nonvertical-line", vec![line])
        }
        ConstructKind::I => {
            let (d, f) = construct_line_union_support(ctx, m)?;
            (d, "line-union", vec![f])
        }
        ConstructKind::Ii => {
            let mu = match (mu, type_ii_mu(ctx.q(), m)) {
                (Some(given), derived) => {
                    if type_ii_label(ctx.q(), given) != Some(m) {
                        return Err(fail(
                            2,
                            format!(
                                "--mu {given} serves m = {:?}, not m = {m}{}",
                                type_ii_label(ctx.q(), given),
                                derived
                                    .map(|d| format!(" (m = {m} takes --mu {d})"))
                                    .unwrap_or_default()
                            ),
                        ));
                    }
                    given
                }
                (None, Some(derived)) => derived,
                (None, None) => {
                    return Err(fail(
                        2,
                        format!("m = {m} is not a two-curve label; it has no --mu"),
                    ))
                }
            };
            let target = match c {
                Some(text) => ctx.parse_element(text).map_err(|e| fail(2, e.to_string()))?,
                None => ctx
                    .elements()
                    .find(|&e| !e.is_zero() && ctx.is_in_subfield(e))
                    .expect("every subfield has a nonzero element"),
            };
            let (d, f1, f2) = construct_type_ii_support(ctx, mu, target, None, None)?;
            (d, "norm-trace-grid", vec![f1, f2])
        }
    };
    let cert = classify_support(&code, &divisor)?;
    let mut value = certificate_json(&code, &cert);
    let obj = value.as_object_mut().expect("certificate is an object");
    obj.insert("construction".to_string(), serde_json::json!(construction));
    obj.insert(
        "construction_curves".to_string(),
        serde_json::json!(curves.iter().map(|f| f.to_string()).collect::<Vec<_>>()),
    );
    emit(out, &json_text(&value))
}

fn minwords_classify(
    sel: &FieldSel,
    m: u64,
    divisor: &str,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let code = build_code(ctx, m)?;
    let mut indices = Vec::new();
    for part in divisor.split(',') {
        let trimmed = part.trim();
        if trimmed.is_empty() {
            continue;
        }
        let i: usize = trimmed
            .parse()
            .map_err(|e| fail(2, format!("bad point index {trimmed:?}: {e}")))?;
        indices.push(i);
    }
    let d = Divisor::from_indices(code.ctx(), code.points(), &indices)
        .map_err(|e| fail(2, e.to_string()))?;
    let cert = classify_support(&code, &d)?;
    emit(out, &json_text(&certificate_json(&code, &cert)))
}

fn oracle_distance(
    sel: &FieldSel,
    m: u64,
    w_max: Option<u32>,
    budget: &Option<String>,
    jobs: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let code = build_code(ctx, m)?;
    let formula = code.distance();
    let w_max = w_max.unwrap_or(formula as u32);
    let budget = budget_from(budget)?;
    let started = std::time::Instant::now();
    let found = with_jobs(jobs, || brute_force_distance(&code, w_max, &budget))??;
    eprintln!(
        "oracle distance: searched subsets of size <= {w_max} in {} ms",
        started.elapsed().as_millis()
    );
    match found {
        Some(d) if d != formula => Err(fail(
            4,
            format!(
                "exhaustive search found distance {d}, but the formula gives {formula} \
                 at q = {}, m = {m}",
                code.q()
            ),
        )),
        None if (w_max as u64) >= formula => Err(fail(
            4,
            format!(
                "no dependent subset of size <= {w_max} exists, but the formula promises \
                 weight-{formula} codewords at q = {}, m = {m}",
                code.q()
            ),
        )),
        found => {
            let value = serde_json::json!({
                "q": code.q(),
                "m": m,
                "w_max": w_max,
                "formula": formula,
                "exhaustive": found,
                "consistent": true,
            });
            emit(out, &json_text(&value))
        }
    }
}

fn oracle_census(
    sel: &FieldSel,
    m: u64,
    budget: &Option<String>,
    jobs: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let ctx = resolve_field(sel)?;
    let code = build_code(ctx, m)?;
    let budget = budget_from(budget)?;
    let report = with_jobs(jobs, || enumerate_min_supports(&code, &budget))??;
    eprintln!(
        "oracle census: {} members in {} ms",
        report.member_count(),
        report.wall_ms
    );
    emit(out, &json_text(&report.to_json()))
}

// ---------------------------------------------------------------------
// Reference scenarios
// ---------------------------------------------------------------------

const SCENARIOS: [&str; 5] = [
    "example-2_7",
    "example-2_9",
    "example-4_1",
    "example-4_4",
    "example-solito3",
];

fn canonical_scenario_id(raw: &str) -> Option<&'static str> {
    let norm = raw.trim().to_ascii_lowercase().replace('.', "_");
    let norm = norm.strip_prefix("example-").unwrap_or(&norm).to_string();
    // "solito3" is the informal name of example 3_1.
    let norm = if norm == "3_1" { "solito3".to_string() } else { norm };
    SCENARIOS
        .iter()
        .copied()
        .find(|s| s.strip_prefix("example-") == Some(norm.as_str()))
}

fn golden_path(id: &str, ext: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("goldens")
        .join(format!("{id}.{ext}"))
}

fn scenario_q4_context() -> Result<FieldContext, Failure> {
    FieldContext::new(2, 2).map_err(|e| fail(2, e.to_string()))
}

/// Compute one scenario's output; returns (file extension, text).
fn scenario_output(id: &str) -> Result<(&'static str, String), Failure> {
    match id {
        // The stabilization table for m = 11..22 at q = 4.
        "example-2_9" => Ok(("csv", semigroup_table_csv(4, 11, 22)?)),
        // Distance and gap values around m = 11 at q = 4.
        "example-2_7" => {
            let value = serde_json::json!({
                "q": 4,
                "m": 11,
                "distance_11": distance(4, 11)?,
                "delta_10": semigroup::delta(4, 10),
                "delta_11": semigroup::delta(4, 11),
            });
            Ok(("json", json_text(&value)))
        }
        // Four codes sharing distance 4, and the full census at m = 14.
        "example-solito3" => {
            let mut distances = serde_json::Map::new();
            for m in 11..=14u64 {
                distances.insert(m.to_string(), serde_json::json!(distance(4, m)?));
            }
            let code = build_code(scenario_q4_context()?, 14)?;
            let report = enumerate_min_supports(&code, &Budget::default())?;
            let value = serde_json::json!({
                "q": 4,
                "distances": distances,
                "census_m14": report.to_json(),
            });
            Ok(("json", json_text(&value)))
        }
        // The canonical two-fiber support of C_18 and its certificate.
        "example-4_1" => {
            let code = build_code(scenario_q4_context()?, 18)?;
            let (divisor, _) = construct_line_union_support(code.ctx(), 18)?;
            let cert = classify_support(&code, &divisor)?;
            let mut value = certificate_json(&code, &cert);
            let obj = value.as_object_mut().expect("certificate is an object");
            obj.insert("construction".to_string(), serde_json::json!("line-union"));
            Ok(("json", json_text(&value)))
        }
        // A norm/trace grid lives in the m = 16 census but carries no
        // codeword of the (equal-distance) m = 18 code.
        "example-4_4" => {
            let ctx = Arc::new(scenario_q4_context()?);
            let c16 = HermitianCode::build(ctx.clone(), 16)
                .map_err(|e| fail(2, e.to_string()))?;
            let c18 = HermitianCode::build(ctx.clone(), 18)
                .map_err(|e| fail(2, e.to_string()))?;
            let target = ctx
                .elements()
                .find(|&e| !e.is_zero() && ctx.is_in_subfield(e))
                .expect("nonzero subfield element");
            let (grid, _, _) = construct_type_ii_support(&ctx, 2, target, None, None)?;
            let cert = classify_support(&c16, &grid)?;
            let absent = matches!(
                c18.codeword_supported_exactly(&grid)
                    .map_err(|e| fail(2, e.to_string()))?,
                crate::code::ExactSupportSearch::ProvenAbsent
            );
            let value = serde_json::json!({
                "q": 4,
                "distance_m16": distance(4, 16)?,
                "distance_m18": distance(4, 18)?,
                "grid": points_json(grid.points()),
                "verdict_m16": cert.verdict.to_string(),
                "absent_in_m18": absent,
            });
            Ok(("json", json_text(&value)))
        }
        _ => unreachable!("canonical ids are filtered before dispatch"),
    }
}

fn repro(args: &ReproArgs) -> Result<(), Failure> {
    let id = canonical_scenario_id(&args.id).ok_or_else(|| {
        fail(
            2,
            format!(
                "unknown scenario {:?}; known ids: {}",
                args.id,
                SCENARIOS.join(", ")
            ),
        )
    })?;
    if let Some(q) = args.q {
        if q != 4 {
            return Err(fail(
                2,
                format!("scenario {id} runs at q = 4, not q = {q}"),
            ));
        }
    }
    let (ext, computed) = scenario_output(id)?;
    let path = golden_path(id, ext);
    if args.bless {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)
                .map_err(|e| fail(2, format!("cannot create {}: {e}", dir.display())))?;
        }
        std::fs::write(&path, &computed)
            .map_err(|e| fail(2, format!("cannot write {}: {e}", path.display())))?;
        eprintln!("blessed {}", path.display());
        return Ok(());
    }
    let golden = std::fs::read_to_string(&path).map_err(|e| {
        fail(
            2,
            format!(
                "cannot read golden file {}: {e}; compute it with --bless",
                path.display()
            ),
        )
    })?;
    if golden == computed {
        print!("{computed}");
        eprintln!("repro {id}: OK");
        Ok(())
    } else {
        let mismatch = golden
            .lines()
            .zip(computed.lines())
            .enumerate()
            .find(|(_, (g, c))| g != c)
            .map(|(i, (g, c))| format!("line {}: golden {:?} vs computed {:?}", i + 1, g, c))
            .unwrap_or_else(|| {
                format!(
                    "line counts differ: golden {} vs computed {}",
                    golden.lines().count(),
                    computed.lines().count()
                )
            });
        Err(fail(
            1,
            format!("scenario {id} diverged from its golden file: {mismatch}"),
        ))
    }
}
