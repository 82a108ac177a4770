//! `frieze`: generate, flip, verify and render Conway-Coxeter friezes.
//!
//! Exit status is 0 on success, 1 on invalid input and 2 when a check or
//! pipeline comparison finds a violation.

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frieze_core::checks::{
    conway_coxeter, frieze_difference, structure, support_law, CheckOutcome,
};
use frieze_core::frieze::{
    frieze_from_quiddity, frieze_from_triangulation, frieze_from_triangulation_quiddity, verify,
    Frieze,
};
use frieze_core::mutation::{DeltaContext, DeltaReport};
use frieze_core::polygon::{enumerate_triangulations, flip, validate, Arc, Triangulation};
use frieze_core::strings::fit_admissibility;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "frieze",
    version,
    about = "Conway-Coxeter friezes of polygon triangulations"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Pipeline {
    Quiddity,
    Ccmap,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Frieze of a triangulation or quiddity sequence.
    Gen {
        #[command(flatten)]
        input: TriangulationInput,
        /// Quiddity sequence, comma separated; replaces the triangulation.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["diagonals", "input"])]
        quiddity: Option<Vec<u64>>,
        #[arg(long, value_enum, default_value_t = Pipeline::Both)]
        pipeline: Pipeline,
        /// Columns shown by the text grid; defaults to n.
        #[arg(long)]
        window: Option<usize>,
    },
    /// Flips one diagonal, or a sequence of them in order.
    Flip {
        #[command(flatten)]
        input: TriangulationInput,
        #[arg(long, value_parser = parse_arc, required_unless_present = "seq", conflicts_with = "seq")]
        at: Option<Arc>,
        #[arg(long, value_parser = parse_arc, value_delimiter = ',')]
        seq: Option<Vec<Arc>>,
        #[arg(long)]
        window: Option<usize>,
    },
    /// Frieze differences under the flip at a diagonal.
    Delta {
        #[command(flatten)]
        input: TriangulationInput,
        #[arg(long, value_parser = parse_arc)]
        at: Arc,
        /// A single frieze position; every position when omitted.
        #[arg(long, value_parser = parse_arc)]
        arc: Option<Arc>,
    },
    /// Runs every invariant check over all triangulations up to `--n-max`.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Lists the triangulations of an n-gon.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Fits the closed submodule formula against brute-force counts.
    Fit {
        #[arg(long, default_value_t = 10)]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Renders frieze JSON as a staggered grid.
    Render {
        /// Frieze JSON, inline or as a file path.
        input: String,
        #[arg(long)]
        window: Option<usize>,
    },
}

#[derive(Args)]
struct TriangulationInput {
    /// Triangulation JSON `{"n":..,"diagonals":[[i,j],..]}`, inline or as a file path.
    input: Option<String>,
    #[arg(long, requires = "diagonals")]
    n: Option<usize>,
    /// Diagonals as `i-j`, comma separated.
    #[arg(long, value_parser = parse_arc, value_delimiter = ',', requires = "n")]
    diagonals: Option<Vec<Arc>>,
}

/// Why a command stopped early.
enum Failure {
    Input(String),
    Violation(Value),
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn parse_arc(s: &str) -> Result<Arc, String> {
    let (i, j) = s
        .trim()
        .split_once('-')
        .ok_or_else(|| format!("expected i-j, got {s:?}"))?;
    let i: usize = i
        .trim()
        .parse()
        .map_err(|_| format!("bad vertex in {s:?}"))?;
    let j: usize = j
        .trim()
        .parse()
        .map_err(|_| format!("bad vertex in {s:?}"))?;
    if i == 0 || j == 0 || i == j {
        return Err(format!("{s:?} is not an arc"));
    }
    Ok(Arc::new(i, j))
}

/// Inline JSON, a file path, or a path under `FRIEZE_SEED_GOLDEN`.
fn read_source(src: &str) -> Result<String, Failure> {
    let trimmed = src.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(src.to_string());
    }
    let path = PathBuf::from(src);
    if path.exists() {
        return Ok(std::fs::read_to_string(&path)?);
    }
    if let Some(dir) = std::env::var_os("FRIEZE_SEED_GOLDEN") {
        let golden = PathBuf::from(dir).join(src);
        if golden.exists() {
            return Ok(std::fs::read_to_string(golden)?);
        }
    }
    Err(Failure::Input(format!("{src}: no such file")))
}

impl TriangulationInput {
    fn load(&self) -> Result<Triangulation, Failure> {
        match (&self.input, self.n, &self.diagonals) {
            (Some(src), None, None) => Ok(serde_json::from_str(&read_source(src)?)?),
            (None, Some(n), Some(ds)) => Ok(validate(n, ds)?),
            _ => Err(Failure::Input(
                "give a triangulation as JSON or with --n and --diagonals".into(),
            )),
        }
    }
}

fn number(v: impl Display) -> Value {
    let s = v.to_string();
    s.parse::<i64>()
        .map(Value::from)
        .or_else(|_| s.parse::<u64>().map(Value::from))
        .unwrap_or(Value::String(s))
}

fn arc_json(a: Arc) -> Value {
    json!([a.lo(), a.hi()])
}

fn report_json(r: &DeltaReport) -> Value {
    let projections: Vec<Value> = r
        .projections
        .map(|p| {
            p.ordered()
                .iter()
                .map(|x| json!({"ray": x.ray, "position": arc_json(x.position)}))
                .collect()
        })
        .unwrap_or_default();
    json!({
        "arc": arc_json(r.position),
        "region": r.region,
        "projections": projections,
        "values": r.values.iter().map(number).collect::<Vec<_>>(),
        "delta": number(&r.delta),
    })
}

fn show_diagonals(t: &Triangulation) -> String {
    t.diagonals()
        .iter()
        .map(|d| format!("{}-{}", d.lo(), d.hi()))
        .collect::<Vec<_>>()
        .join(",")
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("values serialize"));
}

fn checked_frieze(f: Frieze) -> Result<Frieze, Failure> {
    match verify(&f) {
        Ok(()) => Ok(f),
        Err(v) => Err(Failure::Violation(
            json!({"violation": format!("{v:?}"), "frieze": f}),
        )),
    }
}

fn gen(
    format: Format,
    input: &TriangulationInput,
    quiddity: Option<&[u64]>,
    pipeline: Pipeline,
    window: Option<usize>,
) -> Outcome {
    let f = match quiddity {
        Some(q) => frieze_from_quiddity(q)?,
        None => {
            let t = input.load()?;
            match pipeline {
                Pipeline::Quiddity => frieze_from_triangulation_quiddity(&t)?,
                Pipeline::Ccmap => frieze_from_triangulation(&t)?,
                Pipeline::Both => {
                    let a = frieze_from_triangulation(&t)?;
                    let b = frieze_from_triangulation_quiddity(&t)?;
                    if a != b {
                        return Err(Failure::Violation(json!({
                            "violation": "pipelines disagree",
                            "triangulation": t,
                            "ccmap": a,
                            "quiddity": b,
                        })));
                    }
                    a
                }
            }
        }
    };
    let f = checked_frieze(f)?;
    match format {
        Format::Json => print_json(&json!(f)),
        Format::Text => print!("{}", f.render(window.unwrap_or(f.n()))),
    }
    Ok(())
}

fn flip_cmd(
    format: Format,
    input: &TriangulationInput,
    seq: Vec<Arc>,
    window: Option<usize>,
) -> Outcome {
    let mut t = input.load()?;
    let mut steps = Vec::new();
    for a in seq {
        let (t2, a2) = flip(&t, a)?;
        let f = checked_frieze(frieze_from_triangulation(&t2)?)?;
        match format {
            Format::Json => steps.push(json!({
                "flipped": arc_json(a),
                "new_diagonal": arc_json(a2),
                "triangulation": t2,
                "frieze": f,
            })),
            Format::Text => {
                println!(
                    "flip {}-{} -> {}-{}: {}",
                    a.lo(),
                    a.hi(),
                    a2.lo(),
                    a2.hi(),
                    show_diagonals(&t2)
                );
                print!("{}", f.render(window.unwrap_or(f.n())));
            }
        }
        t = t2;
    }
    if format == Format::Json {
        print_json(&Value::Array(steps));
    }
    Ok(())
}

fn delta_cmd(format: Format, input: &TriangulationInput, at: Arc, arc: Option<Arc>) -> Outcome {
    let t = input.load()?;
    let ctx = DeltaContext::new(&t, at)?;
    let positions = match arc {
        Some(d) => {
            Arc::checked(t.n(), d.lo(), d.hi())?;
            vec![d]
        }
        None => frieze_core::polygon::all_arcs(t.n()),
    };
    let reports: Vec<DeltaReport> = positions.into_iter().map(|d| ctx.delta(d)).collect();
    match format {
        Format::Json if arc.is_some() => print_json(&report_json(&reports[0])),
        Format::Json => print_json(&Value::Array(reports.iter().map(report_json).collect())),
        Format::Text => {
            for r in &reports {
                let values: Vec<String> = r.values.iter().map(ToString::to_string).collect();
                println!(
                    "{}-{} {} delta {} values ({})",
                    r.position.lo(),
                    r.position.hi(),
                    r.region,
                    r.delta,
                    values.join(",")
                );
            }
        }
    }
    Ok(())
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()?)
}

fn verify_cmd(format: Format, n_max: usize, jobs: Option<usize>) -> Outcome {
    if n_max < 4 {
        return Err(Failure::Input("--n-max must be at least 4".into()));
    }
    let outcomes = pool(jobs)?.install(|| -> Result<Vec<CheckOutcome>, Failure> {
        let mut all = Vec::new();
        for n in 4..=n_max {
            all.push(structure(n)?);
            all.push(conway_coxeter(n)?);
            all.push(frieze_difference(n)?);
            all.push(support_law(n)?);
        }
        Ok(all)
    })?;
    let failed: Vec<&CheckOutcome> = outcomes.iter().filter(|o| !o.passed()).collect();
    if let Some(first) = failed.first() {
        return Err(Failure::Violation(json!(first)));
    }
    match format {
        Format::Json => print_json(&json!(outcomes)),
        Format::Text => {
            for o in &outcomes {
                println!("n={:<3} {:<18} {:>6} cases ok", o.n, o.name, o.cases);
            }
        }
    }
    Ok(())
}

fn enumerate_cmd(format: Format, n: usize) -> Outcome {
    let ts = enumerate_triangulations(n)?;
    match format {
        Format::Json => print_json(&json!(ts)),
        Format::Text => {
            for t in &ts {
                println!("{}", show_diagonals(t));
            }
        }
    }
    Ok(())
}

fn fit_cmd(format: Format, n_max: usize, jobs: Option<usize>) -> Outcome {
    let report = pool(jobs)?.install(|| fit_admissibility(n_max))?;
    match format {
        Format::Json => {
            let candidates: Vec<Value> = report
                .candidates
                .iter()
                .map(|c| {
                    json!({
                        "reading": c.reading,
                        "rule": c.rule,
                        "agreeing": c.agreeing,
                        "total": c.total,
                        "smallest_failure": c.smallest_failure.as_ref().map(|f| json!({
                            "dirs": f.dirs,
                            "shape": f.shape,
                            "oracle": f.oracle,
                            "formula": number(&f.formula),
                        })),
                    })
                })
                .collect();
            print_json(
                &json!({"n_max": report.max_n, "strings": report.strings, "candidates": candidates}),
            );
        }
        Format::Text => {
            println!(
                "{} string patterns from polygons up to n={}",
                report.strings, report.max_n
            );
            for c in &report.candidates {
                let mark = if c.fits() { "fits" } else { "fails" };
                println!(
                    "{:?}/{:?}: {}/{} {mark}",
                    c.reading, c.rule, c.agreeing, c.total
                );
            }
        }
    }
    if report.fitted().is_empty() {
        return Err(Failure::Violation(
            json!({"violation": "no admissibility rule fits"}),
        ));
    }
    Ok(())
}

fn render_cmd(format: Format, input: &str, window: Option<usize>) -> Outcome {
    let f: Frieze = serde_json::from_str(&read_source(input)?)?;
    let f = checked_frieze(f)?;
    match format {
        Format::Json => print_json(&json!({"grid": f.render(window.unwrap_or(f.n()))})),
        Format::Text => print!("{}", f.render(window.unwrap_or(f.n()))),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let format = cli.format;
    let outcome = match cli.command {
        Command::Gen {
            input,
            quiddity,
            pipeline,
            window,
        } => gen(format, &input, quiddity.as_deref(), pipeline, window),
        Command::Flip {
            input,
            at,
            seq,
            window,
        } => {
            let seq = seq.unwrap_or_default().into_iter().chain(at).collect();
            flip_cmd(format, &input, seq, window)
        }
        Command::Delta { input, at, arc } => delta_cmd(format, &input, at, arc),
        Command::Verify { n_max, jobs } => verify_cmd(format, n_max, jobs),
        Command::Enumerate { n } => enumerate_cmd(format, n),
        Command::Fit { n_max, jobs } => fit_cmd(format, n_max, jobs),
        Command::Render { input, window } => render_cmd(format, &input, window),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violation(dump)) => {
            eprintln!(
                "violation: {}",
                serde_json::to_string(&dump).expect("values serialize")
            );
            ExitCode::from(2)
        }
    }
}
