use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use qscheme_core::catalog::{self, registry, RegistryEntry};
use qscheme_core::classifier::{build_graph, emit, label_of, pattern_of, GraphFormat};
use qscheme_core::engine::{a0_coeff, recurrence_coeffs, ParameterVector, PolySystem};
use qscheme_core::exact::Rational;
use qscheme_core::verify::{run_suite, Suite, SuiteOptions, SuiteReport};

const DEFAULT_HARD_CAP: usize = 24;
const HARD_CAP_ENV: &str = "QSCHEME_HARD_CAP";
/// Failures printed per suite before truncating.
const SHOWN_FAILURES: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "qscheme", version, about = "Exact q-hypergeometric orthogonal polynomial schemes")]
struct Cli {
    /// JSON file with defaults: {"q", "params": {family: {name: value}}, "n_max", "depth", "seed"}.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List catalog families.
    List(ListArgs),
    /// Print u_0..u_n with recurrence coefficients and values.
    Eval(EvalArgs),
    /// Emit the scheme graph.
    Graph(GraphArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct ListArgs {
    /// Only families at this node label.
    #[arg(long)]
    node: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct EvalArgs {
    /// Catalog id; omit to give coefficients with --a/--b/--d1/--d2.
    family: Option<String>,
    #[arg(long)]
    q: Option<String>,
    /// Parameter override `name=value`, repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Evaluation point, repeatable.
    #[arg(long = "x", value_name = "X", allow_hyphen_values = true)]
    xs: Vec<String>,
    /// `a0,a1,a2`
    #[arg(long, conflicts_with = "family", requires = "b", allow_hyphen_values = true)]
    a: Option<String>,
    /// `b0,b1,b2`
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    d1: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    d2: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[arg(long, value_enum, default_value = "dot")]
    format: FormatArg,
    /// Output file; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// constraints, recurrence, eigen, duality, catalog, limits, charts, symmetry, graph or all.
    suite: String,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    depth: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Number of random parameter vectors.
    #[arg(long)]
    samples: Option<usize>,
    /// Write the JSON report here; `-` for stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    sequential: bool,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Config {
    q: Option<String>,
    #[serde(default)]
    params: BTreeMap<String, BTreeMap<String, String>>,
    n_max: Option<usize>,
    depth: Option<usize>,
    seed: Option<u64>,
}

fn load_config(path: Option<&Path>) -> Result<Config> {
    let Some(path) = path else { return Ok(Config::default()) };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
}

fn hard_cap() -> Result<usize> {
    match std::env::var(HARD_CAP_ENV) {
        Ok(v) => v.trim().parse().with_context(|| format!("{HARD_CAP_ENV}={v:?} is not a degree")),
        Err(_) => Ok(DEFAULT_HARD_CAP),
    }
}

fn check_cap(what: &str, value: usize) -> Result<()> {
    let cap = hard_cap()?;
    if value > cap {
        bail!("{what} = {value} exceeds the degree cap {cap} (set {HARD_CAP_ENV} to raise it)");
    }
    Ok(())
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim().parse().map_err(|e| anyhow::anyhow!("{e}")).with_context(|| format!("bad rational {s:?}"))
}

fn parse_triple(s: &str) -> Result<[Rational; 3]> {
    let parts: Vec<Rational> = s.split(',').map(parse_rational).collect::<Result<_>>()?;
    parts.try_into().map_err(|_| anyhow::anyhow!("expected three comma-separated rationals, got {s:?}"))
}

fn cmd_list(args: &ListArgs) -> Result<ExitCode> {
    let mut rows: Vec<RegistryEntry> = registry();
    if let Some(node) = &args.node {
        let node = qscheme_core::classifier::normalize_label(node);
        rows.retain(|r| r.node_label == node);
    }
    rows.sort_by(|x, y| (&x.node_label, &x.name).cmp(&(&y.node_label, &y.name)));
    let mut out = String::new();
    if args.json {
        out = serde_json::to_string_pretty(&rows)? + "\n";
    } else {
        for r in &rows {
            let section = r.kls_section.map_or_else(|| "-".to_string(), |s| s.to_string());
            let params: Vec<String> = r.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
            writeln!(out, "{}\t{}\t{}\t{}\t{}", r.node_label, r.id, r.name, section, params.join(" "))?;
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

struct EvalSubject {
    title: String,
    pv: ParameterVector,
    max_degree: Option<usize>,
}

fn eval_subject(args: &EvalArgs, config: &Config) -> Result<EvalSubject> {
    let q = args.q.as_deref().or(config.q.as_deref());
    if let Some(id) = &args.family {
        let spec = catalog::family(id)?;
        let mut params: BTreeMap<String, Rational> = BTreeMap::new();
        for key in [id.as_str(), spec.id] {
            if let Some(preset) = config.params.get(key) {
                for (k, v) in preset {
                    params.insert(k.clone(), parse_rational(v)?);
                }
            }
        }
        for kv in &args.params {
            let (k, v) = kv.split_once('=').with_context(|| format!("expected NAME=VALUE, got {kv:?}"))?;
            params.insert(k.trim().to_string(), parse_rational(v)?);
        }
        let q = q.map(parse_rational).transpose()?.unwrap_or_else(catalog::default_q);
        let ctx = spec.ctx(&q, &params)?;
        let pv = spec.vector(&ctx)?;
        let values: Vec<String> = ctx.values().iter().map(|(k, v)| format!("{k}={v}")).collect();
        return Ok(EvalSubject {
            title: format!("{} ({}) q={} {}", spec.id, spec.name, q, values.join(" ")).trim_end().to_string(),
            pv,
            max_degree: spec.max_degree(&ctx)?,
        });
    }
    let (Some(a), Some(b)) = (&args.a, &args.b) else {
        bail!("give a family id or --a, --b and --q");
    };
    let q = parse_rational(q.context("--q is required with --a/--b")?)?;
    let pv = ParameterVector::from_free(
        q,
        parse_triple(a)?,
        parse_triple(b)?,
        parse_rational(&args.d1)?,
        parse_rational(&args.d2)?,
    )?;
    let title = match pattern_of(&pv) {
        Ok(p) => match label_of(&p) {
            Some(label) => format!("vector at node {label}"),
            None => format!("vector with unlisted pattern {}", p.to_code()),
        },
        Err(e) => format!("vector outside the scheme ({e})"),
    };
    Ok(EvalSubject { title, pv, max_degree: None })
}

fn cmd_eval(args: &EvalArgs, config: &Config) -> Result<ExitCode> {
    check_cap("n", args.n)?;
    let subject = eval_subject(args, config)?;
    if let Some(m) = subject.max_degree {
        if args.n > m {
            bail!("degree {} exceeds the last degree {m} of this finite family", args.n);
        }
    }
    let xs: Vec<Rational> = args.xs.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?;
    let sys = PolySystem::new(&subject.pv, args.n)?;
    let mut rows = Vec::new();
    for n in 0..=args.n {
        let (a_n, b_n) = if n == 0 {
            (a0_coeff(&subject.pv).ok(), None)
        } else {
            recurrence_coeffs(&subject.pv, n).ok().map_or((None, None), |(a, b)| (Some(a), Some(b)))
        };
        let u = sys.u(n);
        rows.push(serde_json::json!({
            "n": n,
            "u": u.pretty(),
            "coefficients": u.coeffs().iter().map(Rational::to_string).collect::<Vec<_>>(),
            "A": a_n.map(|v| v.to_string()),
            "B": b_n.map(|v| v.to_string()),
            "values": xs.iter().map(|x| u.eval(x).to_string()).collect::<Vec<_>>(),
        }));
    }
    let mut out = String::new();
    if args.json {
        let doc = serde_json::json!({
            "subject": subject.title,
            "x": xs.iter().map(Rational::to_string).collect::<Vec<_>>(),
            "rows": rows,
        });
        out = serde_json::to_string_pretty(&doc)? + "\n";
    } else {
        writeln!(out, "# {}", subject.title)?;
        let mut header = vec!["n".to_string(), "u_n".into(), "A_n".into(), "B_n".into()];
        header.extend(xs.iter().map(|x| format!("u_n({x})")));
        writeln!(out, "{}", header.join("\t"))?;
        let dash = |v: &serde_json::Value| v.as_str().unwrap_or("-").to_string();
        for r in &rows {
            let mut cols = vec![r["n"].to_string(), dash(&r["u"]), dash(&r["A"]), dash(&r["B"])];
            cols.extend(r["values"].as_array().into_iter().flatten().map(dash));
            writeln!(out, "{}", cols.join("\t"))?;
        }
    }
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_graph(args: &GraphArgs) -> Result<ExitCode> {
    let format = match args.format {
        FormatArg::Dot => GraphFormat::Dot,
        FormatArg::Json => GraphFormat::Json,
    };
    let bytes = emit(&build_graph(), format);
    match &args.output {
        Some(path) => std::fs::write(path, &bytes).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: &VerifyArgs, config: &Config) -> Result<ExitCode> {
    let suites: Vec<Suite> =
        if args.suite.eq_ignore_ascii_case("all") { Suite::ALL.to_vec() } else { vec![args.suite.parse()?] };
    let mut opts = SuiteOptions {
        n_max: args.n_max.or(config.n_max),
        depth: args.depth.or(config.depth),
        ..SuiteOptions::default()
    };
    if let Some(n) = opts.n_max {
        check_cap("n-max", n)?;
    }
    if let Some(d) = opts.depth {
        check_cap("depth", d)?;
    }
    if let Some(seed) = args.seed.or(config.seed) {
        opts.seed = seed;
    }
    if let Some(samples) = args.samples {
        opts.random_vectors = samples;
        opts.perturbed_vectors = opts.perturbed_vectors.min(samples);
    }
    if args.sequential {
        opts.exec = qscheme_core::par::Exec::Sequential;
    }
    println!("seed {:#x}", opts.seed);
    let mut reports: Vec<SuiteReport> = Vec::new();
    for suite in suites {
        let report = run_suite(suite, &opts)?;
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        println!("{verdict} {} ({} checks)", report.suite, report.checks);
        for w in &report.warnings {
            println!("  warning: {w}");
        }
        for f in report.failures.iter().take(SHOWN_FAILURES) {
            println!("  failure: {f}");
        }
        if report.failures.len() > SHOWN_FAILURES {
            println!("  ... {} more failures", report.failures.len() - SHOWN_FAILURES);
        }
        reports.push(report);
    }
    if let Some(path) = &args.json {
        let text = serde_json::to_string_pretty(&reports)? + "\n";
        if path.as_os_str() == "-" {
            print!("{text}");
        } else {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(if reports.iter().all(|r| r.pass) { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let config = load_config(cli.config.as_deref())?;
    match &cli.command {
        Command::List(a) => cmd_list(a),
        Command::Eval(a) => cmd_eval(a, &config),
        Command::Graph(a) => cmd_graph(a),
        Command::Verify(a) => cmd_verify(a, &config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
