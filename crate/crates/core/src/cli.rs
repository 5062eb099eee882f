//! The `lacuna` command line: `decompose`, `bound`, `crossover` and
//! `verify`.
//!
//! Exit codes: 0 success (or a consistent verification), 1 inconsistent,
//! 2 usage error, 3 data error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::record::{BoundArgs, Real};
use crate::bounds::{
    crossover_gammas, optimal_c, quoted_crossover_gammas, BoundKind, BoundRecord, Crossover,
};
use crate::density::{
    check_applicable, constrained_set, estimate_density, model_density, verify_bound, DensityError,
    EstimateOptions, DEFAULT_SLACK,
};
use crate::satake::{
    clebsch_gordan, dihedral_tensor, gl3_adjoint_tensor, pole_order, self_pairing,
    tensor_power_decompose, tensor_power_split, DihedralPair, Gl2Type, IsobaricRep, Quotient,
    SatakeError,
};
use crate::sources::q8::CHI_SQUARE_THRESHOLD;
use crate::sources::{GenerateOptions, SourceSpec, StreamCache};

pub const EXIT_CONSISTENT: i32 = 0;
pub const EXIT_INCONSISTENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

/// Environment variable overriding the default cache directory.
pub const CACHE_ENV: &str = "LACUNA_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".lacuna-cache";

#[derive(Debug, Parser)]
#[command(
    name = "lacuna",
    version,
    about = "Pole orders, lacunarity bounds and their numerical checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decompose a tensor expression into isobaric constituents.
    Decompose {
        /// `pi^k x pibar^l`, `sym^a x sym^b`, `gl3-adjoint`, `dihedral` or
        /// `pi x pi'`.
        expr: String,
        #[arg(long = "type", default_value = "non-solvable")]
        ty: String,
        /// Also report pole orders at s = 1.
        #[arg(long)]
        pole_order: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Evaluate a named density bound.
    Bound {
        /// thm-c, thm-d, corollary, propf, serre or ramakrishnan.
        name: String,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        m_prime: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        gamma: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        /// For thm-d: also maximize the two-moment ratio over c.
        #[arg(long)]
        optimal_c: bool,
    },
    /// Where the two-pole-order bound meets the single-pole-order bound.
    Crossover {
        #[arg(long, default_value_t = 14)]
        m: u64,
        #[arg(long, default_value_t = 5)]
        m_prime: u64,
        #[arg(long, default_value_t = 2)]
        m_ref: u64,
    },
    /// Estimate a density from a source and check it against a bound.
    Verify(VerifyArgs),
}

#[derive(Debug, clap::Args)]
struct VerifyArgs {
    /// `ec:a1,a2,a3,a4,a6`, `ec:a4,a6`, `q8[:polyfile]`, `cheb:modelfile`,
    /// `serre:r` or `dirichlet:modulus,index`.
    #[arg(long)]
    source: String,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// `name[:key=value,...]`, e.g. `thm-c:m=4` or `thm-d:m=14,m-prime=5`.
    #[arg(long)]
    bound: String,
    /// Report the set the bound constrains directly instead of the level
    /// set (or vice versa).
    #[arg(long)]
    complement: bool,
    /// Largest prime scanned.
    #[arg(long, default_value_t = 100_000)]
    limit: u64,
    /// Number of draws for `serre:` and `cheb:` sources.
    #[arg(long, default_value_t = 100_000)]
    limit_samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated, strictly decreasing values of s in (1, 1.25].
    #[arg(long)]
    schedule: Option<String>,
    /// Tolerance on |a|^2 for streams of floating-point values.
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SLACK)]
    slack: f64,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    no_cache: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write `(s-1, ratio)` columns to this file.
    #[arg(long)]
    plot_data: Option<PathBuf>,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_CONSISTENT,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

type CmdResult = Result<Outcome, Outcome>;

fn usage(msg: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_USAGE, msg)
}

fn data(msg: impl std::fmt::Display) -> Outcome {
    Outcome::fail(EXIT_DATA, msg)
}

/// Parse and run a command line (including the program name).
pub fn run_with<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_CONSISTENT
            };
            return if code == EXIT_CONSISTENT {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = match cli.command {
        Command::Decompose {
            expr,
            ty,
            pole_order,
            format,
        } => cmd_decompose(&expr, &ty, pole_order, format),
        Command::Bound {
            name,
            m,
            m_prime,
            gamma,
            alpha,
            r,
            k,
            optimal_c,
        } => {
            let parsed = (|| {
                Ok::<_, Outcome>(BoundArgs {
                    m,
                    m_prime,
                    gamma: gamma.as_deref().map(parse_real).transpose()?,
                    alpha,
                    r,
                    k: k.as_deref().map(parse_real).transpose()?,
                })
            })();
            parsed.and_then(|args| cmd_bound(&name, &args, optimal_c))
        }
        Command::Crossover { m, m_prime, m_ref } => cmd_crossover(m, m_prime, m_ref),
        Command::Verify(args) => cmd_verify(&args),
    };
    result.unwrap_or_else(|e| e)
}

/// Run with the process arguments, print, and return the exit code.
pub fn run() -> i32 {
    let out = run_with(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

fn parse_real(s: &str) -> Result<Real, Outcome> {
    s.parse::<Real>().map_err(usage)
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

// ---- decompose ----

enum Expr {
    Power(u32, u32),
    Sym(u32, u32),
    Gl3Adjoint,
    Dihedral,
    DistinctDihedral,
}

fn parse_power(term: &str, name: &str) -> Option<u32> {
    let rest = term.strip_prefix(name)?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^')?.parse().ok()
}

fn parse_expr(expr: &str) -> Result<Expr, SatakeError> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let lower = compact.to_ascii_lowercase();
    match lower.as_str() {
        "gl3-adjoint" | "gl3adjoint" => return Ok(Expr::Gl3Adjoint),
        "dihedral" | "pixpibar-dihedral" => return Ok(Expr::Dihedral),
        "pixpi'" => return Ok(Expr::DistinctDihedral),
        _ => {}
    }
    let bad = || SatakeError::Parse(format!("cannot read `{expr}`"));
    let factors: Vec<&str> = lower.split('x').collect();
    if factors.iter().all(|f| f.starts_with("sym")) && factors.len() == 2 {
        let a = parse_power(factors[0], "sym").ok_or_else(bad)?;
        let b = parse_power(factors[1], "sym").ok_or_else(bad)?;
        return Ok(Expr::Sym(a, b));
    }
    let (mut k, mut l) = (0, 0);
    for f in factors {
        if let Some(n) = parse_power(f, "pibar") {
            l += n;
        } else if let Some(n) = parse_power(f, "pi") {
            k += n;
        } else {
            return Err(bad());
        }
    }
    Ok(Expr::Power(k, l))
}

#[derive(Serialize)]
struct DecomposeJson {
    expression: String,
    #[serde(rename = "type")]
    ty: String,
    decomposition: String,
    dimension: u64,
    constituents: crate::satake::isobaric::IsobaricJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    l_function_pole_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    self_pairing_pole_order: Option<u64>,
}

fn cmd_decompose(expr: &str, ty: &str, with_poles: bool, format: Format) -> CmdResult {
    let gl2 = Gl2Type::parse(ty).ok_or_else(|| usage(format!("unknown type `{ty}`")))?;
    let parsed = parse_expr(expr).map_err(usage)?;
    let satake = |e: SatakeError| match e {
        SatakeError::UnsupportedType(_) | SatakeError::Range(_) | SatakeError::Parse(_) => usage(e),
        other => data(other),
    };
    // the L-function pole order pairs the two halves of a tensor power
    let (rep, l_pole): (IsobaricRep, Option<u64>) = match parsed {
        Expr::Power(k, l) => {
            let rep = tensor_power_decompose(gl2, k, l).map_err(satake)?;
            let pole = if with_poles {
                let (a, b) = tensor_power_split(gl2, k, l).map_err(satake)?;
                Some(pole_order(&a, &b).map_err(satake)?)
            } else {
                None
            };
            (rep, pole)
        }
        Expr::Sym(a, b) => (clebsch_gordan(a, b), None),
        Expr::Gl3Adjoint => (gl3_adjoint_tensor(gl2).map_err(satake)?, None),
        Expr::Dihedral => {
            let Gl2Type::Dihedral(q) = gl2 else {
                return Err(usage(
                    "`dihedral` needs --type dihedral, dihedral-invariant or dihedral-trivial",
                ));
            };
            if q == Quotient::Trivial {
                return Err(usage(
                    "a trivial quotient gives a reducible (Eisenstein) representation",
                ));
            }
            (dihedral_tensor(DihedralPair::Contragredient(q)), None)
        }
        Expr::DistinctDihedral => (dihedral_tensor(DihedralPair::DistinctExtensions), None),
    };
    // undefined when a constituent's cuspidality is unknown
    let self_pole = if with_poles && rep.is_resolved() {
        Some(self_pairing(&rep).map_err(satake)?)
    } else {
        None
    };
    let json = DecomposeJson {
        expression: expr.to_string(),
        ty: gl2.name().to_string(),
        decomposition: rep.to_string(),
        dimension: rep.dimension(),
        constituents: rep.to_json(),
        l_function_pole_order: l_pole,
        self_pairing_pole_order: self_pole,
    };
    let out = match format {
        Format::Json => pretty(&json),
        Format::Csv => format!(
            "expression,type,decomposition,dimension,l_function_pole_order,self_pairing_pole_order\n\"{}\",{},\"{}\",{},{},{}\n",
            json.expression,
            json.ty,
            json.decomposition,
            json.dimension,
            l_pole.map_or(String::new(), |v| v.to_string()),
            self_pole.map_or(String::new(), |v| v.to_string()),
        ),
        Format::Table => {
            let mut s = format!("{}\n", json.decomposition);
            if let Some(p) = l_pole {
                s.push_str(&format!("l_function_pole_order {p}\n"));
            }
            if let Some(p) = self_pole {
                s.push_str(&format!("self_pairing_pole_order {p}\n"));
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

// ---- bound ----

fn cmd_bound(name: &str, args: &BoundArgs, with_c: bool) -> CmdResult {
    let kind: BoundKind = name.parse().map_err(usage)?;
    let rec = BoundRecord::evaluate(kind, args).map_err(usage)?;
    let mut value = serde_json::to_value(&rec).expect("records serialize");
    if with_c {
        if kind != BoundKind::ThmD {
            return Err(usage("--optimal-c applies to thm-d only"));
        }
        let (m, mp) = (args.m.unwrap_or(0), args.m_prime.unwrap_or(0));
        let g = args.gamma.as_ref().map_or(0.0, |g| g.value);
        let opt = optimal_c(m, mp, g).map_err(usage)?;
        value["optimal_c"] = json!({
            "c": if opt.c.is_finite() { json!(opt.c) } else { json!("infinity") },
            "value": opt.value,
        });
    }
    Ok(Outcome::ok(format!(
        "{}\n",
        serde_json::to_string(&value).expect("json")
    )))
}

fn cmd_crossover(m: u64, mp: u64, m_ref: u64) -> CmdResult {
    let found = crossover_gammas(m, mp, m_ref).map_err(usage)?;
    let quoted: Vec<f64> = quoted_crossover_gammas().to_vec();
    let computed = match &found {
        Crossover::Identical => json!("identical"),
        Crossover::Points(points) => json!(points),
    };
    let residuals: Vec<f64> = match &found {
        Crossover::Points(points) => points
            .iter()
            .map(|p| {
                let u = p.gamma * p.gamma;
                u * u - 3.0 * u + 1.0
            })
            .collect(),
        Crossover::Identical => Vec::new(),
    };
    let v = json!({
        "m": m,
        "m_prime": mp,
        "m_ref": m_ref,
        "computed": computed,
        "residual_gamma4_minus_3gamma2_plus_1": residuals,
        "quoted": quoted,
    });
    Ok(Outcome::ok(pretty(&v)))
}

// ---- verify ----

/// `name[:key=value,...]`.
fn parse_bound_selection(text: &str) -> Result<(BoundKind, Vec<(String, String)>), Outcome> {
    let (name, rest) = text.split_once(':').unwrap_or((text, ""));
    let kind: BoundKind = name.trim().parse().map_err(usage)?;
    let mut params = Vec::new();
    for kv in rest.split(',').filter(|s| !s.trim().is_empty()) {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| usage(format!("bound parameter `{kv}` is not key=value")))?;
        params.push((k.trim().replace('-', "_"), v.trim().to_string()));
    }
    Ok((kind, params))
}

fn parse_schedule(text: &str) -> Result<Vec<f64>, Outcome> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| usage(format!("bad schedule value `{t}`")))
        })
        .collect()
}

fn density_error(e: DensityError) -> Outcome {
    match e {
        DensityError::InsufficientData { .. } => data(e),
        _ => usage(e),
    }
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let source: SourceSpec = a.source.parse().map_err(usage)?;
    let (kind, params) = parse_bound_selection(&a.bound)?;
    if a.limit < 100 {
        return Err(usage("--limit must be at least 100"));
    }
    if !(a.slack >= 0.0 && a.slack.is_finite()) {
        return Err(usage("--slack must be a non-negative number"));
    }
    let user_schedule = a.schedule.as_deref().map(parse_schedule).transpose()?;
    let mut opts = EstimateOptions::default();
    if let Some(s) = &user_schedule {
        opts.schedule = s.clone();
    }
    crate::density::estimate::check_schedule(&opts.schedule).map_err(usage)?;

    let cache = if a.no_cache {
        None
    } else {
        let dir = a
            .cache_dir
            .clone()
            .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
            .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR));
        Some(StreamCache::new(dir))
    };
    let generated = source
        .generate(&GenerateOptions {
            limit: a.limit,
            samples: a.limit_samples,
            seed: a.seed,
            cache,
        })
        .map_err(data)?;
    let info = &generated.info;

    // bound inputs: --bound parameters, then the target flags, then
    // defaults taken from the source
    let mut args = BoundArgs {
        gamma: a.gamma.as_deref().map(parse_real).transpose()?,
        alpha: a.alpha.clone(),
        k: a.k.as_deref().map(parse_real).transpose()?,
        ..Default::default()
    };
    for (key, value) in &params {
        let int = || {
            value
                .parse::<u64>()
                .map_err(|_| usage(format!("`{key}` needs an integer")))
        };
        match key.as_str() {
            "m" => args.m = Some(int()?),
            "m_prime" => args.m_prime = Some(int()?),
            "r" => args.r = Some(int()?),
            "gamma" => args.gamma = Some(parse_real(value)?),
            "alpha" => args.alpha = Some(value.clone()),
            "k" => args.k = Some(parse_real(value)?),
            _ => return Err(usage(format!("unknown bound parameter `{key}`"))),
        }
    }
    let po = info.pole_orders;
    match kind {
        BoundKind::ThmC => {
            args.m = args.m.or(Some(po.k2));
        }
        BoundKind::ThmD => {
            args.m = args.m.or(po.k4);
            args.m_prime = args.m_prime.or(po.k3);
        }
        BoundKind::Serre => {
            args.r = args.r.or(Some(u64::from(info.dimension)));
            if args.gamma.as_ref().is_some_and(|g| g.value != 0.0) {
                return Err(usage(
                    "serre bounds the density of zero traces; drop --gamma or use 0",
                ));
            }
        }
        BoundKind::Ramakrishnan if args.k.is_none() => {
            args.k = Some(Real::from_f64(f64::from(info.dimension)));
        }
        _ => {}
    }
    let record = BoundRecord::evaluate(kind, &args).map_err(usage)?;
    check_applicable(info, &record).map_err(usage)?;

    let (native, _) = constrained_set(&record).map_err(usage)?;
    // level sets {|a| = gamma} by default for the S_gamma bounds, the
    // constrained set itself for the others
    let default_set = match kind {
        BoundKind::ThmC | BoundKind::ThmD | BoundKind::Corollary => native.complement(),
        _ => native,
    };
    let mut set = if a.complement {
        default_set.complement()
    } else {
        default_set
    };
    if let Some(t) = a.tolerance {
        set = set.with_tolerance(t);
    }
    if let Some(s) = &user_schedule {
        let horizon = generated.stream.entries.last().map_or(0, |e| e.p);
        if let Some(bad) = s
            .iter()
            .find(|&&s| !crate::density::estimate::is_reliable(s, horizon))
        {
            return Err(usage(format!(
                "s = {bad} violates (s-1) ln N >= 2 for N = {horizon}; raise --limit or s"
            )));
        }
    }

    let estimate = estimate_density(&generated.stream, &set, &opts).map_err(density_error)?;
    let mut report =
        verify_bound(&info.id, estimate, &set, &record, a.slack).map_err(density_error)?;
    report
        .extras
        .insert("dimension".into(), json!(info.dimension));
    report
        .extras
        .insert("pole_orders".into(), json!(info.pole_orders));
    if let Some(t) = info.gl2_type {
        report.extras.insert("gl2_type".into(), json!(t.name()));
    }
    if !generated.stream.excluded.is_empty() {
        report
            .extras
            .insert("excluded_primes".into(), json!(generated.stream.excluded));
    }
    if let Some(orders) = generated.q8_orders {
        report.extras.insert(
            "frobenius_orders".into(),
            json!({
                "counts": [orders.order1, orders.order2, orders.order4],
                "frequencies": orders.frequencies(),
                "chi_square": orders.chi_square(),
                "chi_square_threshold": CHI_SQUARE_THRESHOLD,
            }),
        );
    }
    if let Some(model) = source.model().map_err(data)? {
        let exact = model_density(&model, &set).map_err(density_error)?;
        report.extras.insert(
            "model_density".into(),
            Value::String(if exact.denom() == &1.into() {
                exact.numer().to_string()
            } else {
                format!("{}/{}", exact.numer(), exact.denom())
            }),
        );
    }

    if let Some(path) = &a.plot_data {
        std::fs::write(path, report.plot_data())
            .map_err(|e| data(format!("{}: {e}", path.display())))?;
    }
    let stdout = match a.format {
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => report.to_csv(),
        Format::Table => report.to_table(),
    };
    Ok(Outcome {
        code: if report.consistent {
            EXIT_CONSISTENT
        } else {
            EXIT_INCONSISTENT
        },
        stdout,
        stderr: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_with(std::iter::once("lacuna").chain(args.iter().copied()))
    }

    #[test]
    fn decompose_examples() {
        let out = run(&["decompose", "pi x pibar", "--type", "non-solvable"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout, "Ad(pi) (+) 1\n");
        let out = run(&[
            "decompose",
            "pi^4 x pibar^4",
            "--type",
            "non-solvable",
            "--pole-order",
            "--format",
            "json",
        ]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["l_function_pole_order"], 14);
        let out = run(&[
            "decompose",
            "pi x pibar",
            "--type",
            "dihedral-invariant",
            "--pole-order",
        ]);
        assert!(
            out.stdout.contains("self_pairing_pole_order 4"),
            "{}",
            out.stdout
        );
        let out = run(&["decompose", "gl3-adjoint", "--pole-order"]);
        assert!(out.stdout.contains("self_pairing_pole_order 3"));
        assert_eq!(
            run(&["decompose", "sym^2 x sym^2"])
                .stdout
                .matches("(+)")
                .count(),
            2
        );
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(run(&["decompose", "pi^5 x pibar^4"]).code, EXIT_USAGE);
        assert_eq!(run(&["decompose", "foo"]).code, EXIT_USAGE);
        assert_eq!(
            run(&["decompose", "pi x pibar", "--type", "tetrahedral"]).code,
            EXIT_USAGE
        );
        assert_eq!(run(&["decompose", "pi", "--type", "nope"]).code, EXIT_USAGE);
        assert_eq!(run(&["nope"]).code, EXIT_USAGE);
    }

    #[test]
    fn bound_examples() {
        let v = |args: &[&str]| -> Value { serde_json::from_str(&run(args).stdout).unwrap() };
        assert_eq!(
            v(&["bound", "thm-c", "--m", "4", "--gamma", "0"])["value"],
            0.25
        );
        let c = v(&["bound", "corollary", "--gamma", "0"]);
        assert!((c["value"].as_f64().unwrap() - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(c["exact"], "2/3");
        assert_eq!(v(&["bound", "propf", "--alpha", "1+0i"])["value"], 0.5);
        assert_eq!(v(&["bound", "propf", "--alpha", "-1"])["value"], 0.5);
        let d = v(&[
            "bound",
            "thm-d",
            "--m",
            "14",
            "--m-prime",
            "5",
            "--gamma",
            "0",
            "--optimal-c",
        ]);
        assert!((d["optimal_c"]["c"].as_f64().unwrap() - 4.0).abs() < 1e-6);
        assert_eq!(run(&["bound", "thm-c", "--gamma", "0"]).code, EXIT_USAGE);
        assert_eq!(run(&["bound", "bogus"]).code, EXIT_USAGE);
    }

    #[test]
    fn crossover_report() {
        let out = run(&["crossover"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["quoted"].as_array().unwrap().len(), 4);
        for r in v["residual_gamma4_minus_3gamma2_plus_1"]
            .as_array()
            .unwrap()
        {
            assert!(r.as_f64().unwrap().abs() < 1e-9);
        }
        let v: Value = serde_json::from_str(
            &run(&["crossover", "--m", "4", "--m-prime", "2", "--m-ref", "1"]).stdout,
        )
        .unwrap();
        assert!(v["computed"].is_string() || v["computed"].is_array());
    }

    #[test]
    fn verify_small_runs() {
        let out = run(&[
            "verify",
            "--source",
            "dirichlet:4,1",
            "--alpha",
            "1",
            "--bound",
            "propf",
            "--limit",
            "100000",
            "--no-cache",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["set"], "a != 1");
        assert!((v["natural"].as_f64().unwrap() - 0.5).abs() < 0.01);

        let out = run(&[
            "verify",
            "--source",
            "serre:3",
            "--gamma",
            "0",
            "--bound",
            "serre",
            "--limit-samples",
            "20000",
            "--seed",
            "7",
            "--no-cache",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["extras"]["model_density"], "8/9");
        assert_eq!(v["bound"]["exact"], "8/9");

        // corollary needs a non-CM curve
        let out = run(&[
            "verify",
            "--source",
            "ec:0,0,0,-1,0",
            "--gamma",
            "0",
            "--bound",
            "corollary",
            "--limit",
            "1000",
            "--no-cache",
        ]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.stderr.contains("inapplicable"));
        let out = run(&[
            "verify",
            "--source",
            "q8",
            "--gamma",
            "0",
            "--bound",
            "thm-c:m=4",
            "--limit",
            "1000",
            "--schedule",
            "1.01",
            "--no-cache",
        ]);
        assert_eq!(out.code, EXIT_USAGE);
        let out = run(&[
            "verify",
            "--source",
            "q8:/nonexistent/poly",
            "--gamma",
            "0",
            "--bound",
            "thm-c",
            "--limit",
            "1000",
            "--no-cache",
        ]);
        assert_eq!(out.code, EXIT_DATA);
    }
}
