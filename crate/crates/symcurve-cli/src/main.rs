//! Command-line frontend for the symcurve engine.
//!
//! `detect` decides central and mirror symmetry of a parametrized curve
//! read from a file or stdin; `bench` times the corpus and a generated
//! degree ladder; `gen` writes a curve with a planted symmetry next to a
//! sidecar file recording the planted truth.
//!
//! Exit codes for `detect`: 0 the analysis ran (the verdicts are in the
//! report), 1 the input did not parse, 2 the input is degenerate or
//! retraces its image (no symmetry analysis is possible), 3 an internal
//! consistency check failed.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symcurve::fixtures::{
    appendix_corpus, plant_central_random, plant_mirror_ladder, plant_mirror_random,
    PlantedCurve, PlantedTruth,
};
use symcurve::mirror::{mirror_beta, verify_system};
use symcurve::report::{canonical_curve_text, render_text, report_json, AxisJson, PointJson};
use symcurve::{detect_all, parse_curve, CurveClass, SymmetryReport};

#[derive(Parser)]
#[command(name = "symcurve", version, about = "Exact symmetry detection for polynomial plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide central and mirror symmetry of a curve file (or stdin).
    Detect(DetectArgs),
    /// Time the frozen corpus and/or a generated degree ladder.
    Bench(BenchArgs),
    /// Write a curve with a planted symmetry plus a sidecar truth file.
    Gen(GenArgs),
}

#[derive(clap::Args)]
struct DetectArgs {
    /// Curve file to analyze; use "-" or omit to read stdin.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Run the frozen corpus suite.
    #[arg(long, value_enum)]
    suite: Option<Suite>,
    /// Run the scaling ladder of planted mirror curves.
    #[arg(long)]
    scaling: bool,
    /// Degrees for the scaling ladder.
    #[arg(long, value_delimiter = ',', default_value = "25,50,100,200")]
    degrees: Vec<usize>,
    /// Seed for the generated ladder curves.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Only benchmark the corpus entry with this id.
    #[arg(long)]
    only: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(clap::Args)]
struct GenArgs {
    /// Which symmetry to plant.
    #[arg(long, value_enum)]
    kind: Kind,
    /// Degree of the generated curve (odd for central).
    #[arg(long)]
    degree: usize,
    /// Generator seed; the same seed always yields the same curve.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output path for the curve file (the truth file adds ".truth.json").
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Appendix,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Central,
    Mirror,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = u8::from(err.use_stderr());
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::Detect(args) => run_detect(&args),
        Command::Bench(args) => run_bench(&args),
        Command::Gen(args) => run_gen(&args),
    }
}

fn read_input(input: &Option<PathBuf>) -> std::io::Result<String> {
    match input {
        Some(path) if path.as_os_str() != "-" => fs::read_to_string(path),
        _ => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn emit_report(report: &SymmetryReport, format: Format) {
    match format {
        Format::Text => print!("{}", render_text(report)),
        Format::Json => {
            let json = serde_json::to_string_pretty(&report_json(report))
                .expect("report serialization cannot fail");
            println!("{json}");
        }
    }
}

fn run_detect(args: &DetectArgs) -> ExitCode {
    let text = match read_input(&args.input) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: cannot read input: {err}");
            return ExitCode::from(1);
        }
    };
    let curve = match parse_curve(&text) {
        Ok(curve) => curve,
        Err(err) => {
            eprintln!("parse error: {err}");
            return ExitCode::from(1);
        }
    };
    let report = match detect_all(&curve) {
        Ok(report) => report,
        Err(err) => {
            eprintln!("internal consistency failure: {err}");
            return ExitCode::from(3);
        }
    };
    emit_report(&report, args.format);
    match report.curve_class {
        CurveClass::Proper => ExitCode::SUCCESS,
        _ => ExitCode::from(2),
    }
}

#[derive(Serialize)]
struct SuiteRow {
    id: String,
    degree: usize,
    central: bool,
    mirror: bool,
    millis: f64,
}

#[derive(Serialize)]
struct ScalingRow {
    degree: usize,
    seconds: f64,
}

#[derive(Serialize)]
struct BenchJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    suite: Option<Vec<SuiteRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    scaling: Option<Vec<ScalingRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    slope: Option<f64>,
}

fn run_bench(args: &BenchArgs) -> ExitCode {
    let run_suite = args.suite.is_some() || !args.scaling;
    let mut out = BenchJson {
        suite: None,
        scaling: None,
        slope: None,
    };

    if run_suite {
        let mut rows = Vec::new();
        for fixture in appendix_corpus() {
            if let Some(only) = &args.only {
                if fixture.id != only {
                    continue;
                }
            }
            let curve = fixture.parametrization();
            let start = Instant::now();
            let report = match detect_all(&curve) {
                Ok(report) => report,
                Err(err) => {
                    eprintln!("internal consistency failure on {}: {err}", fixture.id);
                    return ExitCode::from(3);
                }
            };
            let millis = start.elapsed().as_secs_f64() * 1e3;
            rows.push(SuiteRow {
                id: fixture.id.to_string(),
                degree: report.degrees.map_or(0, |(_, _, n)| n),
                central: report.central.as_ref().is_some_and(|c| c.is_symmetric()),
                mirror: report.mirror.as_ref().is_some_and(|m| m.is_symmetric()),
                millis,
            });
        }
        out.suite = Some(rows);
    }

    if args.scaling {
        let mut rows = Vec::new();
        for &degree in &args.degrees {
            let planted = plant_mirror_ladder(degree, args.seed);
            let complex = planted
                .curve
                .to_complex()
                .expect("ladder curves are proper by construction");
            let beta = mirror_beta(&complex);
            let seconds = time_kernel(|| {
                std::hint::black_box(verify_system(&complex, &beta));
            });
            rows.push(ScalingRow { degree, seconds });
        }
        out.slope = log_log_slope(&rows);
        out.scaling = Some(rows);
    }

    match args.format {
        Format::Json => {
            let json = serde_json::to_string_pretty(&out).expect("rows serialize");
            println!("{json}");
        }
        Format::Text => {
            if let Some(rows) = &out.suite {
                println!("corpus suite:");
                println!("{:<14} {:>6} {:>8} {:>7} {:>10}", "id", "degree", "central", "mirror", "millis");
                for row in rows {
                    println!(
                        "{:<14} {:>6} {:>8} {:>7} {:>10.2}",
                        row.id,
                        row.degree,
                        if row.central { "yes" } else { "no" },
                        if row.mirror { "yes" } else { "no" },
                        row.millis
                    );
                }
            }
            if let Some(rows) = &out.scaling {
                println!("scaling (planted mirror curves, seed {}):", args.seed);
                println!("{:<8} {:>12}", "degree", "seconds");
                for row in rows {
                    println!("{:<8} {:>12.6}", row.degree, row.seconds);
                }
                if let Some(slope) = out.slope {
                    println!("log-log slope: {slope:.2}");
                }
            }
        }
    }
    ExitCode::SUCCESS
}

/// Average seconds per run, repeating the closure until the measurement
/// is long enough to be stable.
fn time_kernel(mut run: impl FnMut()) -> f64 {
    run(); // warm-up
    let mut reps = 0u32;
    let start = Instant::now();
    loop {
        run();
        reps += 1;
        let elapsed = start.elapsed().as_secs_f64();
        if (reps >= 3 && elapsed >= 0.05) || reps >= 10_000 {
            return elapsed / f64::from(reps);
        }
    }
}

/// Least-squares slope of ln(seconds) against ln(degree).
fn log_log_slope(rows: &[ScalingRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|row| ((row.degree as f64).ln(), row.seconds.max(1e-12).ln()))
        .collect();
    let n = points.len() as f64;
    let mean_x = points.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = points.iter().map(|(_, y)| y).sum::<f64>() / n;
    let cov: f64 = points
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let var: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    (var > 0.0).then(|| cov / var)
}

#[derive(Serialize)]
struct TruthJson {
    kind: &'static str,
    beta: String,
    beta_float: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    center: Option<PointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    axis: Option<AxisJson>,
}

fn truth_json(planted: &PlantedCurve) -> TruthJson {
    match &planted.truth {
        PlantedTruth::Central(center) => TruthJson {
            kind: "central",
            beta: planted.beta.to_string(),
            beta_float: planted.beta.to_f64(),
            center: Some(PointJson {
                x: center.x.to_string(),
                y: center.y.to_string(),
                x_float: center.x.to_f64(),
                y_float: center.y.to_f64(),
            }),
            axis: None,
        },
        PlantedTruth::Mirror(axis) => TruthJson {
            kind: "mirror",
            beta: planted.beta.to_string(),
            beta_float: planted.beta.to_f64(),
            center: None,
            axis: Some(AxisJson {
                a: axis.a().to_string(),
                b: axis.b().to_string(),
                c: axis.c().to_string(),
                a_float: axis.a().to_f64(),
                b_float: axis.b().to_f64(),
                c_float: axis.c().to_f64(),
            }),
        },
    }
}

fn run_gen(args: &GenArgs) -> ExitCode {
    let planted = match args.kind {
        Kind::Central => {
            if args.degree % 2 == 0 || args.degree < 3 {
                eprintln!(
                    "error: a centrally symmetric curve must have odd degree >= 3; \
                     got {}",
                    args.degree
                );
                return ExitCode::from(1);
            }
            plant_central_random(args.degree, args.seed)
        }
        Kind::Mirror => {
            if args.degree < 2 {
                eprintln!("error: degree must be >= 2; got {}", args.degree);
                return ExitCode::from(1);
            }
            plant_mirror_random(args.degree, args.seed)
        }
    };
    let kind_name = match args.kind {
        Kind::Central => "central",
        Kind::Mirror => "mirror",
    };
    let curve_path = args.out.clone().unwrap_or_else(|| {
        PathBuf::from(format!("{kind_name}-{}-{}.curve", args.degree, args.seed))
    });
    let truth_path = sidecar_path(&curve_path);
    let curve_text = canonical_curve_text(&planted.curve);
    let truth_text = serde_json::to_string_pretty(&truth_json(&planted)).expect("truth serializes");
    for (path, text) in [(&curve_path, &curve_text), (&truth_path, &truth_text)] {
        if let Err(err) = fs::write(path, text) {
            eprintln!("error: cannot write {}: {err}", path.display());
            return ExitCode::from(1);
        }
    }
    println!("wrote {}", curve_path.display());
    println!("wrote {}", truth_path.display());
    ExitCode::SUCCESS
}

fn sidecar_path(curve_path: &Path) -> PathBuf {
    let mut name = curve_path.as_os_str().to_os_string();
    name.push(".truth.json");
    PathBuf::from(name)
}
