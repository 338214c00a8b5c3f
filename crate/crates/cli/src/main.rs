use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ctl_core::classify::{classify, ClassificationReport};
use ctl_core::cluster::{ar_quiver_c, mod_gamma_quiver, ClusterCategory, DotOptions};
use ctl_core::selfcheck::{selfcheck, Scope};
use ctl_core::tilt::{enumerate_cluster_tilting, selfinjective_candidates, TiltingObject};
use ctl_core::{DynkinType, Family, OrientationPolicy, Quiver, SCHEMA_VERSION};

mod cache;

use cache::Cache;

const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "ctl", version, about = "Self-injective cluster tilted algebras of Dynkin type")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Print phase timings to stderr.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline and report the self-injective finalists.
    Classify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: TextOrJson,
        /// Ignore the on-disk cache.
        #[arg(long)]
        no_cache: bool,
        /// Recompute and require the cached report to match byte for byte.
        #[arg(long, conflicts_with = "no_cache")]
        verify_cache: bool,
    },
    /// List the τ_c-orbits with lengths and representatives.
    Orbits {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
    /// Emit the AR quiver of C(H), or of mod End(T), as DOT or JSON.
    ArQuiver {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_enum, default_value = "cluster")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "dot")]
        format: DotOrJson,
        /// Objects to star, e.g. "M(0,1,0) P(1)[1]"; repeatable.
        #[arg(long)]
        mark: Vec<String>,
        /// Star the k-th τ_c²-fixed candidate (1-based).
        #[arg(long, conflicts_with = "mark")]
        mark_candidate: Option<usize>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Stream every cluster-tilting object as a JSON array.
    Tilting {
        #[command(flatten)]
        ty: TypeArgs,
        /// Only the τ_c²-fixed ones.
        #[arg(long)]
        candidates: bool,
    },
    /// Run the invariant suites.
    Selfcheck {
        #[arg(long, value_enum, default_value = "fast")]
        scope: ScopeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
    },
}

#[derive(Args)]
struct TypeArgs {
    /// Dynkin family: A, D or E.
    #[arg(long = "type", value_name = "A|D|E")]
    family: Family,
    #[arg(long)]
    rank: usize,
    /// `default`, or one `f`/`b` per edge in canonical edge order.
    #[arg(long, default_value = "default")]
    orientation: OrientationPolicy,
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum DotOrJson {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Cluster,
    ModGamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    Fast,
    Full,
}

/// Error carrying the exit code.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

fn classify_error(err: anyhow::Error) -> Failure {
    let code = match err.downcast_ref::<ctl_core::Error>() {
        Some(e) if e.is_internal() => EXIT_INTERNAL,
        Some(_) => EXIT_USAGE,
        None => 1,
    };
    Failure { code, err }
}

fn internal(msg: String) -> Failure {
    Failure {
        code: EXIT_INTERNAL,
        err: anyhow!(msg),
    }
}

struct Timer {
    on: bool,
    start: Instant,
}

impl Timer {
    fn lap(&self, what: &str) {
        if self.on {
            eprintln!("[timing] {what}: {:.3}s", self.start.elapsed().as_secs_f64());
        }
    }
}

fn quiver(ty: &TypeArgs) -> Result<Quiver> {
    let d = DynkinType::new(ty.family, ty.rank)?;
    let ceiling = match ty.family {
        Family::D => 9,
        _ => 8,
    };
    if ty.rank > ceiling {
        return Err(ctl_core::Error::Unsupported(format!(
            "rank {} exceeds the supported ceiling {ceiling} for type {}",
            ty.rank,
            ty.family.letter()
        ))
        .into());
    }
    Ok(Quiver::new(d, &ty.orientation)?)
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn report_json(r: &ClassificationReport) -> Result<String> {
    Ok(serde_json::to_string_pretty(r)? + "\n")
}

fn run_classify(ty: &TypeArgs, format: TextOrJson, no_cache: bool, verify: bool, timer: &Timer) -> Result<(), Failure> {
    let q = quiver(ty).map_err(classify_error)?;
    let cache = Cache::from_env();
    let dynkin = q.dynkin().to_string();
    let orientation = q.orientation_code();
    let cached = if no_cache { None } else { cache.load(&dynkin, &orientation) };
    let report = match (&cached, verify) {
        (Some(r), false) => r.clone(),
        _ => {
            let r = classify(&q).map_err(|e| classify_error(e.into()))?;
            timer.lap("classify");
            r
        }
    };
    if verify {
        if let Some(c) = &cached {
            let (a, b) = (
                report_json(c).map_err(classify_error)?,
                report_json(&report).map_err(classify_error)?,
            );
            if a != b {
                return Err(internal(format!("cached report for {dynkin} differs from a fresh run")));
            }
            eprintln!("cache verified for {dynkin}");
        }
    }
    if cached.is_none() && !no_cache {
        if let Err(e) = cache.store(&report) {
            eprintln!("warning: cache not written: {e:#}");
        }
    }
    let text = match format {
        TextOrJson::Json => report_json(&report).map_err(classify_error)?,
        TextOrJson::Text => report.to_text(),
    };
    emit(&text, None).map_err(classify_error)
}

fn run_orbits(ty: &TypeArgs, format: TextOrJson) -> Result<()> {
    let q = quiver(ty)?;
    let cat = ClusterCategory::shared(&q)?;
    let orbits = cat.orbits();
    match format {
        TextOrJson::Text => {
            let mut s = format!("{} (orientation {}): {} orbits\n", q.dynkin(), q.orientation_code(), orbits.len());
            for o in &orbits {
                let members: Vec<String> = o.iter().map(|&i| cat.label(i).to_string()).collect();
                s.push_str(&format!("  length {:>3}  {}\n", o.len(), members.join(" ")));
            }
            emit(&s, None)
        }
        TextOrJson::Json => {
            let doc = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "dynkin": q.dynkin().to_string(),
                "orientation": q.orientation_code(),
                "orbits": orbits.iter().map(|o| serde_json::json!({
                    "length": o.len(),
                    "representative": cat.label(o[0]),
                    "members": o.iter().map(|&i| cat.label(i)).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            emit(&(serde_json::to_string_pretty(&doc)? + "\n"), None)
        }
    }
}

fn parse_marks(cat: &ClusterCategory, marks: &[String]) -> Result<Vec<usize>> {
    marks
        .iter()
        .flat_map(|m| m.split(|c: char| c.is_whitespace() || c == ';'))
        .filter(|s| !s.is_empty())
        .map(|s| Ok(cat.parse_label(s)?))
        .collect()
}

fn run_ar_quiver(
    ty: &TypeArgs,
    mode: Mode,
    format: DotOrJson,
    mark: &[String],
    mark_candidate: Option<usize>,
    output: Option<&PathBuf>,
) -> Result<()> {
    let q = quiver(ty)?;
    let cat = ClusterCategory::shared(&q)?;
    let marks = match mark_candidate {
        Some(k) => {
            let all = enumerate_cluster_tilting(&cat)?;
            let cands = selfinjective_candidates(&cat, &all);
            let t = k
                .checked_sub(1)
                .and_then(|i| cands.get(i))
                .ok_or_else(|| ctl_core::Error::Unsupported(format!("{} has {} candidates", q.dynkin(), cands.len())))?;
            t.summands.clone()
        }
        None => parse_marks(&cat, mark)?,
    };
    let (quiver_c, title) = match mode {
        Mode::Cluster => (ar_quiver_c(&cat, &marks)?, format!("C({})", q.dynkin())),
        Mode::ModGamma => (mod_gamma_quiver(&cat, &marks)?, format!("mod End_C(T), {}", q.dynkin())),
    };
    let text = match format {
        DotOrJson::Dot => quiver_c.to_dot(&title, &DotOptions::default()),
        DotOrJson::Json => {
            serde_json::to_string_pretty(&quiver_c.to_json(&q.dynkin().to_string(), &q.orientation_code()))? + "\n"
        }
    };
    emit(&text, output)
}

fn run_tilting(ty: &TypeArgs, candidates: bool) -> Result<()> {
    let q = quiver(ty)?;
    let cat: Arc<ClusterCategory> = ClusterCategory::shared(&q)?;
    let all = enumerate_cluster_tilting(&cat)?;
    let list: Vec<TiltingObject> = if candidates {
        selfinjective_candidates(&cat, &all)
    } else {
        all
    };
    let mut out = BufWriter::new(io::stdout().lock());
    out.write_all(b"[")?;
    for (i, t) in list.iter().enumerate() {
        let sep = if i == 0 { "\n  " } else { ",\n  " };
        write!(out, "{sep}{}", serde_json::to_string(&t.labels(&cat))?)?;
    }
    out.write_all(if list.is_empty() { b"]\n" } else { b"\n]\n" })?;
    out.flush()?;
    Ok(())
}

fn run_selfcheck(scope: ScopeArg, format: TextOrJson) -> Result<(), Failure> {
    let outcomes = selfcheck(match scope {
        ScopeArg::Fast => Scope::Fast,
        ScopeArg::Full => Scope::Full,
    });
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let text = match format {
        TextOrJson::Text => {
            let mut s = String::new();
            for o in &outcomes {
                s.push_str(&format!("{} {}: {}\n", if o.passed { "PASS" } else { "FAIL" }, o.suite, o.detail));
            }
            s.push_str(&format!("{} suites, {failed} failed\n", outcomes.len()));
            s
        }
        TextOrJson::Json => {
            let doc = serde_json::json!({
                "schema_version": SCHEMA_VERSION,
                "outcomes": outcomes,
                "failed": failed,
            });
            serde_json::to_string_pretty(&doc).map_err(|e| classify_error(e.into()))? + "\n"
        }
    };
    emit(&text, None).map_err(classify_error)?;
    if failed > 0 {
        return Err(internal(format!("{failed} selfcheck suites failed")));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(j) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build_global()
            .map_err(|e| classify_error(e.into()))?;
    }
    let timer = Timer {
        on: cli.timing,
        start: Instant::now(),
    };
    let res = match &cli.command {
        Command::Classify {
            ty,
            format,
            no_cache,
            verify_cache,
        } => return run_classify(ty, *format, *no_cache, *verify_cache, &timer),
        Command::Selfcheck { scope, format } => {
            let r = run_selfcheck(*scope, *format);
            timer.lap("selfcheck");
            return r;
        }
        Command::Orbits { ty, format } => run_orbits(ty, *format),
        Command::ArQuiver {
            ty,
            mode,
            format,
            mark,
            mark_candidate,
            output,
        } => run_ar_quiver(ty, *mode, *format, mark, *mark_candidate, output.as_ref()),
        Command::Tilting { ty, candidates } => run_tilting(ty, *candidates),
    };
    timer.lap("done");
    res.map_err(classify_error)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, err }) => {
            if err.downcast_ref::<io::Error>().map(|e| e.kind()) == Some(io::ErrorKind::BrokenPipe) {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {err:#}");
            ExitCode::from(code)
        }
    }
}
