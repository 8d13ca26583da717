//! Command-line front end: enumeration statistics, traversal traces, and
//! exhaustive verification of the predicted maj range per involution
//! class, with text, JSON, and CSV output.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use invmaj::majrange::{
    algorithm_trace, class_bounds, missing_values, verify_theorem, EnumerationMethod,
    GapAnnotation, TraceEntry, VerificationReport,
};
use invmaj::partition::Partition;
use invmaj::permutation::Permutation;
use invmaj::qpoly::{stanley_maj_poly, QPolynomial};

const EXIT_VERIFICATION_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "invmaj",
    version,
    about = "Major index statistics on involution conjugacy classes",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the maj generating polynomial over the standard tableaux of a shape.
    #[command(name = "maj-poly")]
    MajPoly {
        /// Shape in bracket form, e.g. "[4,3,1,1]" or "[2^4,1]".
        shape: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Minimum, maximum, and missing maj values of an involution class.
    Range {
        /// Size of the symmetric group.
        #[arg(long)]
        n: usize,
        /// Number of fixed points r (n - r must be even).
        #[arg(long = "fixed-points")]
        fixed_points: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Walk the diagram traversal from the minimum shape to the terminal hook.
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long = "fixed-points")]
        fixed_points: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustively verify the predicted maj range (exit 1 on any failure).
    Verify {
        #[arg(long)]
        n: usize,
        /// Restrict to one class; all valid classes when omitted.
        #[arg(long = "fixed-points")]
        fixed_points: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Raise the resource cap (default n <= 16 for syt, n <= 12 for involutions).
        #[arg(long = "max-n-unsafe")]
        max_n_unsafe: Option<usize>,
    },
    /// RSK image and descent statistics of a permutation.
    Rsk {
        /// One-line form "5,3,2,1,4,7,6" (or "53214" for single digits),
        /// or cycle form "(1 2)(3 4)".
        permutation: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Method {
    #[default]
    Syt,
    Involutions,
}

impl From<Method> for EnumerationMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Syt => EnumerationMethod::Syt,
            Method::Involutions => EnumerationMethod::Involutions,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::MajPoly { shape, format } => {
            let shape: Partition = shape.parse().map_err(|e| format!("{e}"))?;
            let poly = stanley_maj_poly(&shape);
            print_maj_poly(&shape, &poly, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Range {
            n,
            fixed_points,
            format,
        } => {
            let class = class_bounds(n, fixed_points).map_err(|e| format!("{e}"))?;
            let missing = missing_values(n, fixed_points).expect("same validation");
            print_range(n, fixed_points, &class, &missing, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace {
            n,
            fixed_points,
            format,
        } => {
            let entries: Vec<TraceEntry> = algorithm_trace(n, fixed_points)
                .map_err(|e| format!("{e}"))?
                .collect();
            print_trace(&entries, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n,
            fixed_points,
            method,
            format,
            max_n_unsafe,
        } => {
            if n == 0 {
                return Err("n must be at least 1".into());
            }
            let default_cap = match method {
                Method::Syt => 16,
                Method::Involutions => 12,
            };
            let cap = max_n_unsafe.unwrap_or(default_cap);
            if n > cap {
                return Err(format!(
                    "resource cap exceeded: n={n} > {cap}; pass --max-n-unsafe {n} to override"
                ));
            }
            let classes: Vec<usize> = match fixed_points {
                Some(r) => vec![r],
                None => (n % 2..=n).step_by(2).collect(),
            };
            let reports: Vec<VerificationReport> = classes
                .into_iter()
                .map(|r| verify_theorem(n, r, method.into()))
                .collect();
            print_verify(&reports, format);
            if reports.iter().all(|r| r.verdict) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_VERIFICATION_FAILED))
            }
        }
        Command::Rsk {
            permutation,
            format,
        } => {
            let pi: Permutation = permutation.parse().map_err(|e| format!("{e}"))?;
            print_rsk(&pi, format);
            Ok(ExitCode::SUCCESS)
        }
    }
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

fn emit_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("output types serialize")
    );
}

/// Minimal CSV quoting: always quote, double any inner quotes.
fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

fn join_u64<'a>(values: impl Iterator<Item = &'a u64>, sep: &str) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(sep)
}

#[derive(Serialize)]
struct MajPolyOutput<'a> {
    shape: &'a Partition,
    maj_poly: &'a QPolynomial,
}

fn print_maj_poly(shape: &Partition, poly: &QPolynomial, format: Format) {
    match format {
        Format::Text => println!("{poly}"),
        Format::Json => emit_json(&MajPolyOutput {
            shape,
            maj_poly: poly,
        }),
        Format::Csv => {
            println!("exponent,coefficient");
            for (exp, coeff) in poly.coeffs().iter().enumerate() {
                println!("{exp},{coeff}");
            }
        }
    }
}

#[derive(Serialize)]
struct RangeOutput {
    n: usize,
    r: usize,
    k: usize,
    min: u64,
    max: u64,
    min_shape: Partition,
    max_shape: Partition,
    missing: Vec<u64>,
}

fn print_range(
    n: usize,
    r: usize,
    class: &invmaj::majrange::ClassBounds,
    missing: &std::collections::BTreeSet<u64>,
    format: Format,
) {
    let k = (n - r) / 2;
    match format {
        Format::Text => {
            println!("class: n = {n}, fixed points r = {r} (k = {k} transpositions)");
            println!(
                "min maj = {}  attained by {}",
                class.bounds.m, class.min_shape
            );
            println!(
                "max maj = {}  attained by {}",
                class.bounds.big_m, class.max_shape
            );
            if missing.is_empty() {
                println!("missing values: none");
            } else {
                println!("missing values: {}", join_u64(missing.iter(), ", "));
            }
        }
        Format::Json => emit_json(&RangeOutput {
            n,
            r,
            k,
            min: class.bounds.m,
            max: class.bounds.big_m,
            min_shape: class.min_shape.clone(),
            max_shape: class.max_shape.clone(),
            missing: missing.iter().copied().collect(),
        }),
        Format::Csv => {
            println!("n,r,k,min,max,min_shape,max_shape,missing");
            println!(
                "{n},{r},{k},{},{},{},{},{}",
                class.bounds.m,
                class.bounds.big_m,
                csv_quote(&class.min_shape.to_string()),
                csv_quote(&class.max_shape.to_string()),
                csv_quote(&join_u64(missing.iter(), ";"))
            );
        }
    }
}

fn annotation_note(a: &GapAnnotation) -> String {
    match a {
        GapAnnotation::BenignBoundary => "benign boundary".into(),
        GapAnnotation::ExpectedGap { missing } => format!("expected gap at {missing}"),
        GapAnnotation::RectangleStart { missing } => {
            format!("rectangle start, {missing} unattained")
        }
    }
}

fn annotation_code(a: &GapAnnotation) -> String {
    match a {
        GapAnnotation::BenignBoundary => "benign_boundary".into(),
        GapAnnotation::ExpectedGap { missing } => format!("expected_gap:{missing}"),
        GapAnnotation::RectangleStart { missing } => format!("rectangle_start:{missing}"),
    }
}

fn print_trace(entries: &[TraceEntry], format: Format) {
    match format {
        Format::Text => {
            let notes: Vec<String> = entries
                .iter()
                .map(|e| {
                    e.annotations
                        .iter()
                        .map(annotation_note)
                        .collect::<Vec<_>>()
                        .join("; ")
                })
                .collect();
            let shape_width = entries
                .iter()
                .map(|e| e.shape.to_string().len())
                .chain(["shape".len()])
                .max()
                .unwrap_or(5);
            let has_notes = notes.iter().any(|s| !s.is_empty());
            let mut header = format!(
                "{:>3}  {:<shape_width$}  {:>4}  {:>4}  {:<4}",
                "i", "shape", "min", "max", "step"
            );
            if has_notes {
                header.push_str("  note");
            }
            println!("{}", header.trim_end());
            for (entry, note) in entries.iter().zip(&notes) {
                let mut line = format!(
                    "{:>3}  {:<shape_width$}  {:>4}  {:>4}  {:<4}",
                    entry.index,
                    entry.shape.to_string(),
                    entry.bounds.m,
                    entry.bounds.big_m,
                    entry.step_used.code(),
                );
                if has_notes && !note.is_empty() {
                    line.push_str("  ");
                    line.push_str(note);
                }
                println!("{}", line.trim_end());
            }
        }
        Format::Json => emit_json(&entries),
        Format::Csv => {
            println!("i,shape,min,max,step,annotations");
            for entry in entries {
                let codes: Vec<String> = entry.annotations.iter().map(annotation_code).collect();
                println!(
                    "{},{},{},{},{},{}",
                    entry.index,
                    csv_quote(&entry.shape.to_string()),
                    entry.bounds.m,
                    entry.bounds.big_m,
                    entry.step_used.code(),
                    csv_quote(&codes.join(";"))
                );
            }
        }
    }
}

fn method_name(method: EnumerationMethod) -> &'static str {
    match method {
        EnumerationMethod::Syt => "syt",
        EnumerationMethod::Involutions => "involutions",
    }
}

fn print_verify(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Text => {
            for report in reports {
                if report.empty_class {
                    println!(
                        "n={} r={} method={}: empty conjugacy class, vacuously OK",
                        report.n,
                        report.r,
                        method_name(report.method)
                    );
                    continue;
                }
                let range = format!(
                    "[{},{}]",
                    report.predicted_min.unwrap(),
                    report.predicted_max.unwrap()
                );
                let missing = if report.predicted_missing.is_empty() {
                    "{}".to_string()
                } else {
                    format!("{{{}}}", join_u64(report.predicted_missing.iter(), ","))
                };
                println!(
                    "n={} r={} k={} method={}: predicted {} minus {}, observed {} values: {}",
                    report.n,
                    report.r,
                    report.k,
                    method_name(report.method),
                    range,
                    missing,
                    report.observed_values.len(),
                    if report.verdict { "OK" } else { "FAILED" }
                );
            }
            let failures = reports.iter().filter(|r| !r.verdict).count();
            if failures == 0 {
                println!("all {} class(es) verified", reports.len());
            } else {
                println!("{failures} of {} class(es) FAILED", reports.len());
            }
        }
        Format::Json => emit_json(&reports),
        Format::Csv => {
            println!(
                "n,k,r,method,predicted_min,predicted_max,predicted_missing,\
                 observed_count,observed_min,observed_max,verdict,empty_class"
            );
            for report in reports {
                let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
                println!(
                    "{},{},{},{},{},{},{},{},{},{},{},{}",
                    report.n,
                    report.k,
                    report.r,
                    method_name(report.method),
                    opt(report.predicted_min),
                    opt(report.predicted_max),
                    csv_quote(&join_u64(report.predicted_missing.iter(), ";")),
                    report.observed_values.len(),
                    opt(report.observed_values.iter().next().copied()),
                    opt(report.observed_values.iter().last().copied()),
                    report.verdict,
                    report.empty_class
                );
            }
        }
    }
}

#[derive(Serialize)]
struct RskOutput {
    permutation: Permutation,
    p: String,
    q: String,
    shape: Partition,
    descent_set: Vec<usize>,
    maj: u64,
    fixed_points: usize,
    odd_columns: usize,
}

fn print_rsk(pi: &Permutation, format: Format) {
    let pair = pi.rsk();
    let shape = pair.p().shape().clone();
    let output = RskOutput {
        permutation: pi.clone(),
        p: pair.p().to_string(),
        q: pair.q().to_string(),
        shape: shape.clone(),
        descent_set: pi.descent_set(),
        maj: pi.maj(),
        fixed_points: pi.fixed_point_count(),
        odd_columns: shape.odd_column_count(),
    };
    match format {
        Format::Text => {
            println!("P = {}", output.p);
            println!("Q = {}", output.q);
            println!("shape = {}", output.shape);
            println!(
                "descents = {{{}}}",
                output
                    .descent_set
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            println!("maj = {}", output.maj);
            println!("fixed points = {}", output.fixed_points);
            println!("odd columns = {}", output.odd_columns);
        }
        Format::Json => emit_json(&output),
        Format::Csv => {
            println!("permutation,p,q,shape,descent_set,maj,fixed_points,odd_columns");
            println!(
                "{},{},{},{},{},{},{},{}",
                csv_quote(&output.permutation.to_string()),
                csv_quote(&output.p),
                csv_quote(&output.q),
                csv_quote(&output.shape.to_string()),
                csv_quote(
                    &output
                        .descent_set
                        .iter()
                        .map(|d| d.to_string())
                        .collect::<Vec<_>>()
                        .join(";")
                ),
                output.maj,
                output.fixed_points,
                output.odd_columns
            );
        }
    }
}
