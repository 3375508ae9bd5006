use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use schurlc::battery::{self, Outcome};
use schurlc::json;
use schurlc::partition::{Partition, SkewShape};
use schurlc::schur::lr::{self, MemoEntry};
use schurlc::sweep::{sweep, Family, Grid, Property, SweepReport};
use schurlc::{dimension_poly, is_log_concave, q_dimension_poly, skew_expand, CheckReport, Error};

#[derive(Parser)]
#[command(name = "schurlc", version, about = "Exact Schur expansions and induced log-concavity checks")]
struct Cli {
    #[command(flatten)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    /// Emit canonical JSON
    #[arg(long, global = true)]
    json: bool,
    /// Emit human-readable text
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of a skew shape such as "6,5,4/3,2"
    Expand { shape: String },
    /// Frobenius image of an invariant of U_{m,d}
    #[command(allow_negative_numbers = true)]
    Invariant {
        family: Family,
        m: i64,
        d: i64,
        /// Dimensions of the coefficients instead
        #[arg(long, conflicts_with = "qdims")]
        dims: bool,
        /// Unipotent dimensions at this prime power
        #[arg(long, value_name = "Q")]
        qdims: Option<u64>,
    },
    /// Check a property of one polynomial
    #[command(allow_negative_numbers = true)]
    Check {
        property: Property,
        family: Option<Family>,
        m: Option<i64>,
        d: Option<i64>,
        /// Read the polynomial from a JSON file instead
        #[arg(long, value_name = "FILE", conflicts_with_all = ["family", "m", "d"])]
        data: Option<PathBuf>,
    },
    /// Check a property over a grid of (m, d)
    #[command(allow_negative_numbers = true)]
    Sweep {
        family: Family,
        property: Property,
        #[arg(long, default_value_t = 0)]
        min_m: i64,
        #[arg(long)]
        max_m: Option<i64>,
        #[arg(long, default_value_t = 1)]
        min_d: i64,
        #[arg(long)]
        max_d: Option<i64>,
        /// Keep only cells with m + d <= N
        #[arg(long, value_name = "N")]
        max_sum: Option<i64>,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Also report log-concavity of q-dimensions at these q
        #[arg(long, value_delimiter = ',', value_name = "Q,...")]
        q: Vec<u64>,
        /// Default bound m + d <= 15 instead of 12
        #[arg(long)]
        extended: bool,
    },
    /// Run the acceptance battery
    VerifyPaper {
        #[arg(long, value_name = "SUITE")]
        only: Option<String>,
        #[arg(long)]
        extended: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Degenerate(_)) { 3 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

// Writes a line to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn print_json(v: &Value) {
    out!("{}", json::canonical(v));
}

fn verdict_code(ok: bool) -> u8 {
    if ok {
        0
    } else {
        1
    }
}

fn expand(shape: &str, text: bool) -> Result<u8, Failure> {
    let shape: SkewShape = shape.parse()?;
    let v = skew_expand(&shape);
    if text {
        out!("{v}");
    } else {
        print_json(&json::schur_vector(&v));
    }
    Ok(0)
}

fn invariant(family: Family, m: i64, d: i64, dims: bool, qdims: Option<u64>, text: bool) -> Result<u8, Failure> {
    let p = family.signed_poly(m, d)?;
    if dims || qdims.is_some() {
        let ip = match qdims {
            Some(q) if q < 2 => return Err(usage("--qdims needs q >= 2")),
            Some(q) => q_dimension_poly(&p, q),
            None => dimension_poly(&p),
        };
        if text {
            out!("{ip}");
        } else {
            print_json(&json::int_poly(&ip));
        }
    } else if text {
        out!("{p}");
    } else {
        print_json(&json::schur_poly(&p));
    }
    Ok(0)
}

fn print_report(r: &CheckReport, text: bool) {
    if !text {
        print_json(&json::check_report(r));
        return;
    }
    out!("verdict: {} ({} cells checked)", r.verdict, r.cells_checked);
    for w in &r.witnesses {
        out!("  ({}, {}): {}", w.i, w.j, w.difference);
    }
}

fn check(
    property: Property,
    target: (Option<Family>, Option<i64>, Option<i64>),
    data: Option<PathBuf>,
    text: bool,
) -> Result<u8, Failure> {
    let p = match (data, target) {
        (Some(path), _) => {
            let body = std::fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            json::parse_poly_document(&body)?
        }
        (None, (Some(f), Some(m), Some(d))) => f.poly(m, d)?,
        _ => return Err(usage("check needs FAMILY M D or --data FILE")),
    };
    let r = property.check(&p)?;
    print_report(&r, text);
    Ok(verdict_code(r.verdict))
}

fn cell_dims(report: &SweepReport, qs: &[u64]) -> Result<Vec<Map<String, Value>>, Error> {
    report
        .cells
        .iter()
        .map(|c| {
            let p = report.family.poly(c.m, c.d)?;
            let mut m = Map::new();
            m.insert("1".into(), json!(is_log_concave(&dimension_poly(&p))));
            for &q in qs {
                m.insert(q.to_string(), json!(is_log_concave(&q_dimension_poly(&p, q))));
            }
            Ok(m)
        })
        .collect()
}

fn run_sweep(
    family: Family,
    property: Property,
    grid: Grid,
    jobs: usize,
    qs: Vec<u64>,
    text: bool,
) -> Result<u8, Failure> {
    if let Some(&q) = qs.iter().find(|&&q| q < 2) {
        return Err(usage(format!("--q values must be >= 2, got {q}")));
    }
    if grid.cells().is_empty() {
        return Err(usage("the sweep grid is empty"));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| usage(e.to_string()))?;
    let start = Instant::now();
    let (report, dims) = pool.install(|| -> Result<_, Error> {
        let report = sweep(family, property, &grid)?;
        let dims = if qs.is_empty() { None } else { Some(cell_dims(&report, &qs)?) };
        Ok((report, dims))
    })?;
    let elapsed = start.elapsed();

    let failed = report.failures().count();
    if text {
        for (k, c) in report.cells.iter().enumerate() {
            let mut line = format!("m={:<3} d={:<3} {}", c.m, c.d, if c.report.verdict { "pass" } else { "FAIL" });
            if let Some(dims) = &dims {
                for (q, ok) in &dims[k] {
                    line.push_str(&format!("  q={q}:{}", if ok.as_bool() == Some(true) { "lc" } else { "not-lc" }));
                }
            }
            out!("{line}");
            for w in &c.report.witnesses {
                out!("    ({}, {}): {}", w.i, w.j, w.difference);
            }
        }
        out!("{} {}: {} of {} cells pass", family, property, report.cells.len() - failed, report.cells.len());
    } else {
        let cells: Vec<Value> = report
            .cells
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let mut m = Map::new();
                m.insert("m".into(), json!(c.m));
                m.insert("d".into(), json!(c.d));
                m.insert("verdict".into(), json!(c.report.verdict));
                m.insert("cells_checked".into(), json!(c.report.cells_checked));
                m.insert("witnesses".into(), json::check_report(&c.report)["witnesses"].clone());
                if let Some(dims) = &dims {
                    m.insert("dimensions_log_concave".into(), Value::Object(dims[k].clone()));
                }
                Value::Object(m)
            })
            .collect();
        let mut out = Map::new();
        out.insert("family".into(), json!(family.name()));
        out.insert("property".into(), json!(property.name()));
        out.insert("all_pass".into(), json!(failed == 0));
        out.insert("cells".into(), json!(report.cells.len()));
        out.insert("failed".into(), json!(failed));
        out.insert("differences_checked".into(), json!(report.cells_checked()));
        out.insert("results".into(), Value::Array(cells));
        print_json(&Value::Object(out));
    }
    eprintln!("wall time: {:.3}s", elapsed.as_secs_f64());
    Ok(verdict_code(failed == 0))
}

fn outcome_json(o: &Outcome) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), json!(o.id));
    m.insert("name".into(), json!(o.name));
    m.insert("passed".into(), json!(o.passed));
    m.insert("detail".into(), json!(o.detail));
    m.insert("seconds".into(), json!(o.elapsed.as_secs_f64()));
    Value::Object(m)
}

fn verify_paper(only: Option<String>, extended: bool, json_out: bool) -> Result<u8, Failure> {
    let name = only.as_deref().unwrap_or("all");
    let ids = battery::suite(name)
        .ok_or_else(|| usage(format!("unknown suite {name:?} (expected one of {})", battery::SUITES.join(", "))))?;
    let mut outcomes = Vec::new();
    for id in ids {
        let o = battery::run_criterion(id, extended);
        if !json_out {
            out!(
                "[{}] {:>2}. {} ({:.2?}): {}",
                if o.passed { "PASS" } else { "FAIL" },
                o.id,
                o.name,
                o.elapsed,
                o.detail
            );
        }
        outcomes.push(o);
    }
    let all = outcomes.iter().all(|o| o.passed);
    if json_out {
        print_json(&json!({ "all_pass": all, "criteria": outcomes.iter().map(outcome_json).collect::<Vec<_>>() }));
    }
    Ok(verdict_code(all))
}

fn memo_to_json() -> Value {
    let entries: Vec<Value> = lr::memo_snapshot()
        .into_iter()
        .map(|(a, b, terms)| {
            let terms: Vec<Value> = terms.into_iter().map(|(p, c)| json!([p.parts(), c])).collect();
            json!([a.parts(), b.parts(), terms])
        })
        .collect();
    json!({ "version": 1, "entries": entries })
}

fn memo_from_json(v: &Value) -> Option<Vec<MemoEntry>> {
    let part = |v: &Value| -> Option<Partition> {
        let parts = v.as_array()?.iter().map(|x| x.as_u64().map(|x| x as usize)).collect::<Option<Vec<_>>>()?;
        Partition::new(parts).ok()
    };
    v.get("entries")?
        .as_array()?
        .iter()
        .map(|e| {
            let terms = e.get(2)?.as_array()?.iter().map(|t| Some((part(t.get(0)?)?, t.get(1)?.as_u64()?)));
            Some((part(e.get(0)?)?, part(e.get(1)?)?, terms.collect::<Option<Vec<_>>>()?))
        })
        .collect()
}

fn load_memo(path: &Path) {
    let Ok(body) = std::fs::read_to_string(path) else { return };
    match serde_json::from_str(&body).ok().as_ref().and_then(memo_from_json) {
        Some(entries) => lr::memo_preload(entries),
        None => eprintln!("warning: ignoring unreadable cache {}", path.display()),
    }
}

fn save_memo(path: &Path) {
    if let Err(e) = std::fs::write(path, json::canonical(&memo_to_json())) {
        eprintln!("warning: could not write cache {}: {e}", path.display());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = std::env::var_os("SCHURLC_CACHE").filter(|v| !v.is_empty());
    let cache_file = match cache {
        Some(v) if v == "off" => {
            lr::set_memo_enabled(false);
            None
        }
        Some(v) => Some(PathBuf::from(v)),
        None => None,
    };
    if let Some(path) = &cache_file {
        load_memo(path);
    }

    let text = cli.format.text;
    let result = match cli.command {
        Command::Expand { shape } => expand(&shape, text),
        Command::Invariant { family, m, d, dims, qdims } => invariant(family, m, d, dims, qdims, text),
        Command::Check { property, family, m, d, data } => check(property, (family, m, d), data, text),
        Command::Sweep { family, property, min_m, max_m, min_d, max_d, max_sum, jobs, q, extended } => {
            let bound = if extended { 15 } else { 12 };
            let grid = if max_m.is_none() && max_d.is_none() {
                let mut g = Grid::sum_at_most(max_sum.unwrap_or(bound));
                g.min_m = min_m;
                g.min_d = min_d.max(1);
                g
            } else {
                let mut g = Grid::new(min_m, max_m.unwrap_or(bound - 1), min_d, max_d.unwrap_or(bound));
                g.max_sum = max_sum;
                g
            };
            run_sweep(family, property, grid, jobs, q, text)
        }
        Command::VerifyPaper { only, extended } => verify_paper(only, extended, cli.format.json),
    };

    if let Some(path) = &cache_file {
        save_memo(path);
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
