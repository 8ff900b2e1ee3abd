//! Batch command-line front end.
//!
//! Three subcommands: `count` (exact class counts and structure statistics
//! of given colorings), `search` (extremal colorings by exhaustive
//! enumeration, local descent, or block sweep), and `verify` (suites that
//! measure recipes, identities, and fitted leading coefficients, written
//! as CSV).  Every run's output carries a manifest — command line,
//! parameters, seed, and the frozen tolerance constants — and identical
//! manifests reproduce byte-identical output except for wall-clock fields.
//!
//! Exit codes: 0 ok; 1 assertion failure (a `verify` suite found a violated
//! claim) or I/O failure; 2 usage error; 3 search budget refused.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::coloring::{Color, Coloring};
use crate::counting::{
    count_classes, d2_identity_residual, d_bound_slack, pair_estimate_gap2, region_bound_slack,
    region_stats, ClassCounts, RegionStats,
};
use crate::equations::Equation;
use crate::search::{
    block_sweep, exhaustive, local_search, Direction, ExtremumReport, Objective, ObjectiveClass,
    SearchConfig, SearchError,
};
use crate::theory::{canonical_coloring, predicted_min, verify, VerifyMode, VerifyRow};
use crate::tolerances;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable giving the default worker-thread count.
pub const THREADS_ENV: &str = "RADOCOUNT_THREADS";

const DEFAULT_SEED: u64 = 0x5eed_cafe;

#[derive(Parser)]
#[command(
    name = "radocount",
    version,
    about = "Exact solution-class counts and extremal colorings for linear equations over colored integer intervals",
    after_help = "Equations: schur | x+ay=z:a=N (N>=2) | ax+by=az:a=N,b=M (coprime, both >=2) | x+y+w=z\n\
                  Colorings: run-length text like \"R4 B6 R1\" (letters R, B, G), or @file with one coloring per line.\n\
                  CSV outputs always carry a header row; JSON outputs embed the run manifest with stable key order."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count monochromatic / non-monochromatic / rainbow solutions of one
    /// or more colorings
    Count(CountArgs),
    /// Find extremal colorings for an objective
    Search(SearchArgs),
    /// Run a verification suite and write per-check CSV reports
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct CountArgs {
    /// Equation text (see --help tail for the grammar)
    #[arg(long)]
    eq: String,
    /// Interval length; every coloring must have exactly this many cells
    #[arg(long)]
    n: usize,
    /// Run-length coloring, or @path to a file with one coloring per line
    #[arg(long)]
    coloring: String,
    /// Print the class counts (the default; flag kept for explicit scripts)
    #[arg(long)]
    classes: bool,
    /// Also print per-color counts, reflected-pair patterns, and — for
    /// 2-colorings of x+ay=z — region counts, the d statistic, and the
    /// per-slot bichromaticity split
    #[arg(long)]
    stats: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ObjectiveArg {
    MinMono,
    MaxMono,
    MinRainbow,
    MaxRainbow,
}

impl ObjectiveArg {
    fn class_and_direction(self) -> (ObjectiveClass, Direction) {
        match self {
            ObjectiveArg::MinMono => (ObjectiveClass::Mono, Direction::Min),
            ObjectiveArg::MaxMono => (ObjectiveClass::Mono, Direction::Max),
            ObjectiveArg::MinRainbow => (ObjectiveClass::Rainbow, Direction::Min),
            ObjectiveArg::MaxRainbow => (ObjectiveClass::Rainbow, Direction::Max),
        }
    }

    fn name(self) -> &'static str {
        match self {
            ObjectiveArg::MinMono => "min-mono",
            ObjectiveArg::MaxMono => "max-mono",
            ObjectiveArg::MinRainbow => "min-rainbow",
            ObjectiveArg::MaxRainbow => "max-rainbow",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Local,
    Sweep,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    eq: String,
    #[arg(long)]
    n: usize,
    /// Number of colors (2 or 3); sweep mode infers it from --pattern
    #[arg(long, default_value_t = 2)]
    r: u8,
    #[arg(long, value_enum, default_value_t = ObjectiveArg::MinMono)]
    objective: ObjectiveArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Fixed per-color cell counts, comma-separated ("14,6"); exhaustive
    /// mode then enumerates exactly the colorings with those counts
    #[arg(long)]
    constraint: Option<String>,
    /// Maximum number of objective evaluations; exhaustive and sweep runs
    /// refuse up front (exit 3) when the space is larger
    #[arg(long, default_value_t = 1u64 << 30)]
    budget: u64,
    /// Random seed for local-search restarts
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: RADOCOUNT_THREADS, else 1)
    #[arg(long)]
    threads: Option<usize>,
    /// Block color pattern for sweep mode, e.g. RBR
    #[arg(long)]
    pattern: Option<String>,
    /// Boundary grid step for sweep mode
    #[arg(long, default_value_t = 1)]
    granularity: usize,
    /// Extra random starts for local mode
    #[arg(long, default_value_t = 8)]
    restarts: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum SuiteArg {
    /// Minimum-count recipes and their fitted leading coefficients
    /// (asserted against frozen tolerances)
    Theorems,
    /// Exact counting identities and bound slacks on seeded random and
    /// recipe colorings (asserted)
    Identities,
    /// Conjectured recipes, measured and reported only
    Conjectures,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// Comma-separated interval lengths, e.g. 22,44,88
    #[arg(long = "n-list")]
    n_list: String,
    /// Directory the CSV reports and manifest are written into
    #[arg(long)]
    out: PathBuf,
    /// Evaluation budget per exhaustive cross-check; larger spaces are
    /// skipped (column left empty), never truncated
    #[arg(long, default_value_t = 1u64 << 22)]
    budget: u64,
    /// Random seed for the identity-suite sample colorings
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: RADOCOUNT_THREADS, else 1)
    #[arg(long)]
    threads: Option<usize>,
}

/// Everything needed to reproduce a run, serialized with its output.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub version: &'static str,
    pub command: Vec<String>,
    pub equation: Option<String>,
    pub n: Option<usize>,
    pub n_list: Option<Vec<usize>>,
    pub r: Option<u8>,
    pub objective: Option<String>,
    pub mode: Option<String>,
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub threads: usize,
    pub tolerances: tolerances::FrozenTolerances,
    pub wall_seconds: f64,
}

impl RunManifest {
    fn new(command: Vec<String>, threads: usize) -> RunManifest {
        RunManifest {
            version: env!("CARGO_PKG_VERSION"),
            command,
            equation: None,
            n: None,
            n_list: None,
            r: None,
            objective: None,
            mode: None,
            seed: None,
            budget: None,
            threads,
            tolerances: tolerances::frozen(),
            wall_seconds: 0.0,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

/// Print a line to stdout; a closed pipe downstream ends the run quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{text}").is_err() {
        std::process::exit(EXIT_OK);
    }
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn usage(message: impl Into<String>) -> Failure {
    fail(EXIT_USAGE, message)
}

/// Parse and run; returns the process exit code.  The binary is a thin
/// wrapper around this.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<String> = args
        .into_iter()
        .map(|a| a.clone().into().to_string_lossy().into_owned())
        .collect();
    let cli = match Cli::try_parse_from(argv.clone()) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.exit_code() == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let started = Instant::now();
    let outcome = match cli.command {
        Command::Count(a) => cmd_count(a, argv, started),
        Command::Search(a) => cmd_search(a, argv, started),
        Command::Verify(a) => cmd_verify(a, argv, started),
    };
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

fn thread_count(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1)
}

fn parse_equation(text: &str) -> Result<Equation, Failure> {
    text.parse::<Equation>().map_err(|e| usage(e.to_string()))
}

fn load_colorings(spec: &str, n: usize) -> Result<Vec<Coloring>, Failure> {
    let texts: Vec<String> = if let Some(path) = spec.strip_prefix('@') {
        let body = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read coloring file {path}: {e}")))?;
        body.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from).collect()
    } else {
        vec![spec.to_string()]
    };
    if texts.is_empty() {
        return Err(usage("no colorings given"));
    }
    texts
        .iter()
        .map(|text| {
            let c = Coloring::parse_runlength(text).map_err(|e| usage(e.to_string()))?;
            if c.n() != n {
                return Err(usage(format!("coloring \"{text}\" has {} cells, not n={n}", c.n())));
            }
            Ok(c)
        })
        .collect()
}

#[derive(Serialize)]
struct OutClasses {
    mono: u64,
    nonmono: u64,
    rainbow: u64,
    total: u64,
}

impl From<ClassCounts> for OutClasses {
    fn from(c: ClassCounts) -> OutClasses {
        OutClasses { mono: c.mono, nonmono: c.nonmono, rainbow: c.rainbow, total: c.total() }
    }
}

#[derive(Serialize)]
struct StatsRecord {
    mu: crate::coloring::MuStats,
    pair: crate::coloring::PairStats,
    regions: Option<RegionStats>,
}

#[derive(Serialize)]
struct CountRecord {
    coloring: String,
    n: usize,
    r: u8,
    classes: OutClasses,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<StatsRecord>,
}

#[derive(Serialize)]
struct CountOutput {
    manifest: RunManifest,
    records: Vec<CountRecord>,
}

#[derive(Serialize)]
struct CountCsvRow {
    coloring: String,
    n: usize,
    r: u8,
    mono: u64,
    nonmono: u64,
    rainbow: u64,
    total: u64,
    mu_r: Option<u64>,
    mu_b: Option<u64>,
    mu_g: Option<u64>,
    gamma: Option<u64>,
    d: Option<i64>,
    nu1: Option<u64>,
    nu2: Option<u64>,
    nu3: Option<u64>,
}

fn cmd_count(args: CountArgs, argv: Vec<String>, started: Instant) -> Result<(), Failure> {
    let eq = parse_equation(&args.eq)?;
    let colorings = load_colorings(&args.coloring, args.n)?;
    let _ = args.classes; // class counts are always printed

    let records: Vec<CountRecord> = colorings
        .iter()
        .map(|c| {
            let classes = OutClasses::from(count_classes(&eq, c));
            let stats = if args.stats {
                let split = match eq {
                    Equation::SchurLike { a } => a,
                    _ => 1,
                };
                Some(StatsRecord {
                    mu: c.mu_stats(split),
                    pair: c.pair_stats(c.n()).expect("len=n is always valid"),
                    regions: region_stats(&eq, c).ok(),
                })
            } else {
                None
            };
            CountRecord { coloring: c.format_runlength(), n: c.n(), r: c.r(), classes, stats }
        })
        .collect();

    let mut manifest = RunManifest::new(argv, 1);
    manifest.equation = Some(eq.to_string());
    manifest.n = Some(args.n);
    manifest.wall_seconds = started.elapsed().as_secs_f64();

    match args.format {
        Format::Json => {
            let out = CountOutput { manifest, records };
            emit(&serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(std::io::stdout());
            for rec in &records {
                let row = CountCsvRow {
                    coloring: rec.coloring.clone(),
                    n: rec.n,
                    r: rec.r,
                    mono: rec.classes.mono,
                    nonmono: rec.classes.nonmono,
                    rainbow: rec.classes.rainbow,
                    total: rec.classes.total,
                    mu_r: rec.stats.as_ref().map(|s| s.mu.mu[0]),
                    mu_b: rec.stats.as_ref().map(|s| s.mu.mu[1]),
                    mu_g: rec.stats.as_ref().map(|s| s.mu.mu[2]),
                    gamma: rec.stats.as_ref().map(|s| s.pair.gamma),
                    d: rec.stats.as_ref().and_then(|s| s.regions.as_ref()).map(|r| r.d),
                    nu1: rec.stats.as_ref().and_then(|s| s.regions.as_ref()).map(|r| r.nu1),
                    nu2: rec.stats.as_ref().and_then(|s| s.regions.as_ref()).map(|r| r.nu2),
                    nu3: rec.stats.as_ref().and_then(|s| s.regions.as_ref()).map(|r| r.nu3),
                };
                w.serialize(row).map_err(|e| fail(EXIT_ASSERTION, e.to_string()))?;
            }
            w.flush().map_err(|e| fail(EXIT_ASSERTION, e.to_string()))?;
            // stdout stays clean CSV; the manifest goes to stderr
            eprintln!("{}", serde_json::to_string(&manifest).expect("serializable"));
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SearchOutput {
    manifest: RunManifest,
    report: ExtremumReport,
}

fn map_search_error(e: SearchError) -> Failure {
    match e {
        SearchError::BudgetExceeded { .. } => fail(EXIT_BUDGET, e.to_string()),
        _ => usage(e.to_string()),
    }
}

fn parse_pattern(text: &str) -> Result<Vec<Color>, Failure> {
    text.chars()
        .map(|ch| {
            Color::from_letter(ch).ok_or_else(|| usage(format!("bad pattern letter '{ch}'")))
        })
        .collect()
}

fn cmd_search(args: SearchArgs, argv: Vec<String>, started: Instant) -> Result<(), Failure> {
    let eq = parse_equation(&args.eq)?;
    let (class, direction) = args.objective.class_and_direction();
    let objective = Objective::new(eq, class, direction);
    let threads = thread_count(args.threads);
    let config = SearchConfig { budget: args.budget, threads };

    let constraint: Option<Vec<u64>> = match &args.constraint {
        None => None,
        Some(text) => Some(
            text.split(',')
                .map(|part| part.trim().parse::<u64>())
                .collect::<Result<Vec<u64>, _>>()
                .map_err(|e| usage(format!("bad constraint: {e}")))?,
        ),
    };
    if constraint.is_some() && args.mode != ModeArg::Exhaustive {
        return Err(usage("--constraint applies to exhaustive mode only"));
    }

    let (report, r_used) = match args.mode {
        ModeArg::Exhaustive => {
            let rep = exhaustive(args.n, args.r, &objective, constraint.as_deref(), &config)
                .map_err(map_search_error)?;
            (rep, args.r)
        }
        ModeArg::Local => {
            let rep = local_search(args.n, args.r, &objective, args.restarts, args.seed)
                .map_err(map_search_error)?;
            (rep, args.r)
        }
        ModeArg::Sweep => {
            let text = args
                .pattern
                .as_deref()
                .ok_or_else(|| usage("sweep mode needs --pattern, e.g. RBR"))?;
            let pattern = parse_pattern(text)?;
            let r = if pattern.contains(&Color::G) { 3 } else { 2 };
            let rep = block_sweep(args.n, &objective, &pattern, args.granularity, &config)
                .map_err(map_search_error)?;
            (rep, r)
        }
    };

    let mut manifest = RunManifest::new(argv, threads);
    manifest.equation = Some(eq.to_string());
    manifest.n = Some(args.n);
    manifest.r = Some(r_used);
    manifest.objective = Some(args.objective.name().to_string());
    manifest.mode = Some(format!("{:?}", args.mode).to_lowercase());
    manifest.seed = Some(args.seed);
    manifest.budget = Some(args.budget);
    manifest.wall_seconds = started.elapsed().as_secs_f64();

    let out = SearchOutput { manifest, report };
    emit(&serde_json::to_string_pretty(&out).expect("serializable"));
    Ok(())
}

/// File-name-safe label for an equation.
fn eq_label(eq: &Equation) -> String {
    match *eq {
        Equation::SchurLike { a: 1 } => "schur".into(),
        Equation::SchurLike { a } => format!("x-ay-z-a{a}"),
        Equation::TwoCoef { a, b } => format!("ax-by-az-a{a}-b{b}"),
        Equation::FourVar => "x-y-w-z".into(),
    }
}

fn write_csv<S: Serialize>(path: &Path, rows: &[S]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_path(path)
        .map_err(|e| fail(EXIT_ASSERTION, format!("cannot write {}: {e}", path.display())))?;
    for row in rows {
        w.serialize(row).map_err(|e| fail(EXIT_ASSERTION, e.to_string()))?;
    }
    w.flush().map_err(|e| fail(EXIT_ASSERTION, e.to_string()))
}

/// One identity-suite sample: every exact identity's residual and every
/// bound's slack that applies to the sampled coloring.
#[derive(Serialize)]
struct IdentityRow {
    equation: String,
    n: usize,
    sample: String,
    nu_residual: i64,
    d2_residual: Option<i64>,
    d_bound_slack: Option<i64>,
    pair_gap2: Option<i64>,
    region_bound_slack: Option<i64>,
}

const IDENTITY_SAMPLES_PER_N: usize = 50;

fn identity_rows(
    n_list: &[usize],
    seed: u64,
    failures: &mut Vec<String>,
) -> Result<Vec<IdentityRow>, Failure> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for &n in n_list {
        let mut samples: Vec<(String, Coloring)> = Vec::new();
        for (label, a) in [("canonical-a1", 1u32), ("canonical-a2", 2u32)] {
            let eq = Equation::schur_like(a).expect("a>=1");
            let c = canonical_coloring(&eq, n, None, Direction::Min)
                .expect("minimum recipe exists");
            samples.push((label.to_string(), c));
        }
        for i in 0..IDENTITY_SAMPLES_PER_N {
            let cells: Vec<Color> =
                (0..n).map(|_| Color((rng.next_u32() % 2) as u8)).collect();
            let c = Coloring::new(2, cells).expect("valid random coloring");
            samples.push((format!("random-{i}"), c));
        }
        for (sample, c) in samples {
            for a in [1u32, 2] {
                let eq = Equation::schur_like(a).expect("a>=1");
                let stats = region_stats(&eq, &c).expect("2-coloring");
                let nonmono = count_classes(&eq, &c).nonmono;
                let nu_residual =
                    (stats.nu1 + stats.nu2 + stats.nu3) as i64 - 2 * nonmono as i64;
                if nu_residual != 0 {
                    failures.push(format!(
                        "nu split identity violated: n={n} a={a} sample={sample} residual={nu_residual}"
                    ));
                }
                let (d2_residual, region_slack) = if a == 2 {
                    let res = if n % 2 == 0 {
                        let r = d2_identity_residual(&c).expect("a=2 2-coloring");
                        if r != 0 {
                            failures.push(format!(
                                "product identity violated: n={n} sample={sample} residual={r}"
                            ));
                        }
                        Some(r)
                    } else {
                        None
                    };
                    let slack = region_bound_slack(&c, 2).expect("a=2 2-coloring");
                    let floor = -2 * 2 * tolerances::REGION_BOUND_HEADROOM_PER_N * n as i64;
                    if slack < floor {
                        failures.push(format!(
                            "region bound slack {slack} below {floor}: n={n} sample={sample}"
                        ));
                    }
                    (res, Some(slack))
                } else {
                    (None, None)
                };
                let (d_slack, pair_gap) = if a == 1 {
                    let slack = d_bound_slack(&c).expect("2-coloring");
                    if slack < -tolerances::D_BOUND_HEADROOM_PER_N * n as i64 {
                        failures.push(format!(
                            "d bound slack {slack} below -{n}: n={n} sample={sample}"
                        ));
                    }
                    let gap = pair_estimate_gap2(&c).expect("2-coloring");
                    if gap.abs() > 2 * tolerances::PAIR_ESTIMATE_HEADROOM_PER_N * n as i64 {
                        failures.push(format!(
                            "pair estimate gap {gap} beyond 2n: n={n} sample={sample}"
                        ));
                    }
                    (Some(slack), Some(gap))
                } else {
                    (None, None)
                };
                rows.push(IdentityRow {
                    equation: eq.to_string(),
                    n,
                    sample: sample.clone(),
                    nu_residual,
                    d2_residual,
                    d_bound_slack: d_slack,
                    pair_gap2: pair_gap,
                    region_bound_slack: region_slack,
                });
            }
        }
    }
    Ok(rows)
}

fn check_theorem_rows(eq: &Equation, rows: &[VerifyRow], failures: &mut Vec<String>) {
    if let Some(alpha) = rows.first().and_then(|r| r.alpha_fit) {
        let coeff = predicted_min(eq, 1).expect("closed form exists").coefficient.to_f64();
        let rel = (alpha / coeff - 1.0).abs();
        if rel > tolerances::ALPHA_FIT_REL_TOL_TRIPLES {
            failures.push(format!(
                "fitted leading coefficient for {eq} off by {:.2}%: alpha={alpha:.6e} vs {coeff:.6e}",
                rel * 100.0
            ));
        }
    }
    for row in rows {
        if let Some(opt) = row.exhaustive_opt {
            if opt > row.canonical_count {
                failures.push(format!(
                    "{eq} n={}: exhaustive optimum {opt} above recipe count {}",
                    row.n, row.canonical_count
                ));
            }
            if row.canonical_count - opt > tolerances::RECIPE_GAP_PER_N * row.n as u64 {
                failures.push(format!(
                    "{eq} n={}: recipe count {} too far above exhaustive optimum {opt}",
                    row.n, row.canonical_count
                ));
            }
        }
    }
}

fn cmd_verify(args: VerifyArgs, argv: Vec<String>, started: Instant) -> Result<(), Failure> {
    let n_list: Vec<usize> = args
        .n_list
        .split(',')
        .map(|part| part.trim().parse::<usize>())
        .collect::<Result<Vec<usize>, _>>()
        .map_err(|e| usage(format!("bad n-list: {e}")))?;
    if n_list.is_empty() || n_list.contains(&0) {
        return Err(usage("n-list must be nonempty positive integers"));
    }
    let threads = thread_count(args.threads);
    let config = SearchConfig { budget: args.budget, threads };
    std::fs::create_dir_all(&args.out)
        .map_err(|e| usage(format!("cannot create {}: {e}", args.out.display())))?;

    let mut failures: Vec<String> = Vec::new();
    match args.suite {
        SuiteArg::Theorems => {
            for a in [1u32, 2, 3, 4] {
                let eq = Equation::schur_like(a).expect("a>=1");
                let rows = verify(&eq, &n_list, VerifyMode::Theorem, &config)
                    .map_err(|e| usage(e.to_string()))?;
                check_theorem_rows(&eq, &rows, &mut failures);
                let path = args.out.join(format!("theorems_{}.csv", eq_label(&eq)));
                write_csv(&path, &rows)?;
            }
        }
        SuiteArg::Identities => {
            let rows = identity_rows(&n_list, args.seed, &mut failures)?;
            write_csv(&args.out.join("identities.csv"), &rows)?;
        }
        SuiteArg::Conjectures => {
            let targets: Vec<Equation> = vec![
                Equation::schur(), // rainbow maximum over 3 colors
                Equation::two_coef(3, 2).expect("coprime"),
                Equation::two_coef(2, 3).expect("coprime"),
                Equation::four_var(),
            ];
            for eq in targets {
                let rows = verify(&eq, &n_list, VerifyMode::Conjecture, &config)
                    .map_err(|e| usage(e.to_string()))?;
                let name = if eq == Equation::schur() {
                    "conjectures_rainbow.csv".to_string()
                } else {
                    format!("conjectures_{}.csv", eq_label(&eq))
                };
                write_csv(&args.out.join(name), &rows)?;
            }
        }
    }

    let mut manifest = RunManifest::new(argv, threads);
    manifest.n_list = Some(n_list);
    manifest.seed = Some(args.seed);
    manifest.budget = Some(args.budget);
    manifest.mode = Some(format!("{:?}", args.suite).to_lowercase());
    manifest.wall_seconds = started.elapsed().as_secs_f64();
    let manifest_json = serde_json::to_string_pretty(&manifest).expect("serializable");
    std::fs::write(args.out.join("manifest.json"), manifest_json + "\n")
        .map_err(|e| fail(EXIT_ASSERTION, e.to_string()))?;

    if failures.is_empty() {
        emit(&format!("{}: all asserted checks pass", format!("{:?}", args.suite).to_lowercase()));
        Ok(())
    } else {
        for f in &failures {
            eprintln!("failed: {f}");
        }
        Err(fail(EXIT_ASSERTION, format!("{} asserted check(s) failed", failures.len())))
    }
}
