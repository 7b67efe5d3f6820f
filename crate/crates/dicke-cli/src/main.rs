//! `dicke` — exact entanglement analysis of Dicke states from the command
//! line. Spectra, entropy sweeps, the maximal-entropy fit, balanced-cut
//! purities, witness robustness maps, and a brute-force verification suite.

mod output;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::Serialize;

use dicke_core::exact::rational_to_f64;
use dicke_core::{analysis, oracle, witness, Cut, DickeIndex, WitnessScenario};
use output::{fmt_f64, open_sink, Format};

#[derive(Parser)]
#[command(
    name = "dicke",
    version,
    about = "Exact Schmidt spectra, entanglement entropies, and witness robustness for Dicke states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Comma-separated integer list, or "all".
#[derive(Clone, Debug)]
enum Selection {
    All,
    List(Vec<u32>),
}

impl FromStr for Selection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(Self::All);
        }
        let mut values = s
            .split(',')
            .map(|item| {
                item.trim().parse::<u32>().map_err(|_| {
                    format!("expected 'all' or a comma-separated integer list, got '{s}'")
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if values.is_empty() {
            return Err("selection list is empty".into());
        }
        values.sort_unstable();
        values.dedup();
        Ok(Self::List(values))
    }
}

impl Selection {
    fn values_up_to(&self, n: u32) -> Vec<u32> {
        match self {
            Self::All => (0..=n).collect(),
            Self::List(v) => v.iter().copied().filter(|&x| x <= n).collect(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact Schmidt spectrum of one cut, with entropy and purity.
    Spectrum {
        /// Number of qubits.
        #[arg(long)]
        n: u32,
        /// Number of excitations.
        #[arg(long)]
        k: u32,
        /// Size of the singled-out block.
        #[arg(long)]
        j: u32,
        /// Also print each probability as an exact fraction.
        #[arg(long)]
        exact: bool,
    },
    /// Sweep entanglement entropies over a grid of (n, k, j).
    EntropyTable {
        /// Smallest n of the sweep.
        #[arg(long)]
        from: u32,
        /// Largest n of the sweep (inclusive).
        #[arg(long)]
        to: u32,
        /// Step between consecutive n.
        #[arg(long, default_value_t = 1)]
        stride: u32,
        /// Excitation counts: "all" or a comma-separated list.
        #[arg(long, default_value = "all")]
        k: Selection,
        /// Block sizes: "all" or a comma-separated list.
        #[arg(long, default_value = "all")]
        j: Selection,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output path; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximal bipartite entropy over even system sizes.
    Smax {
        /// Smallest (even) n.
        #[arg(long)]
        from: u32,
        /// Largest (even) n, inclusive.
        #[arg(long)]
        to: u32,
        /// Step between consecutive n (even).
        #[arg(long, default_value_t = 2)]
        stride: u32,
        /// Append the least-squares fit of s_max against log2(n/2).
        #[arg(long)]
        fit: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Balanced-cut purity: the potential of multipartite entanglement.
    Purity {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Witness expectation for a noisy, asymmetric Dicke state.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Asymmetry amplitude in [0, 1].
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        /// White-noise fraction in [0, 1].
        #[arg(long, default_value_t = 0.0)]
        p: f64,
    },
    /// Detection boundary p(a) of the witness in the (a, p) plane.
    Separatrix {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Number of asymmetry grid points over [0, 1].
        #[arg(long = "a-steps", default_value_t = 1000)]
        a_steps: u32,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the brute-force verification suite.
    Verify {
        /// Largest system size to verify exhaustively.
        #[arg(long = "n-max", default_value_t = 12)]
        n_max: u32,
        /// Seed for the randomly chosen qubit subsets.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// State-vector size cap.
        #[arg(long, default_value_t = oracle::DEFAULT_VECTOR_CAP)]
        cap: u32,
    },
}

/// Failure classes mapped onto process exit codes: validation problems exit
/// 2, I/O problems 3, a failed verification run 1.
pub(crate) enum CliError {
    Validation(String),
    Io(String),
    VerificationFailed,
}

impl From<dicke_core::Error> for CliError {
    fn from(e: dicke_core::Error) -> Self {
        Self::Validation(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::VerificationFailed) => ExitCode::from(1),
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Spectrum { n, k, j, exact } => cmd_spectrum(n, k, j, exact),
        Command::EntropyTable {
            from,
            to,
            stride,
            k,
            j,
            format,
            out,
        } => cmd_entropy_table(from, to, stride, &k, &j, format, out.as_deref()),
        Command::Smax {
            from,
            to,
            stride,
            fit,
            format,
            out,
        } => cmd_smax(from, to, stride, fit, format, out.as_deref()),
        Command::Purity { n, k } => cmd_purity(n, k),
        Command::Witness { n, k, a, p } => cmd_witness(n, k, a, p),
        Command::Separatrix {
            n,
            k,
            a_steps,
            format,
            out,
        } => cmd_separatrix(n, k, a_steps, format, out.as_deref()),
        Command::Verify { n_max, seed, cap } => {
            if verify::run(n_max, seed, cap)? {
                Ok(())
            } else {
                Err(CliError::VerificationFailed)
            }
        }
    }
}

fn cmd_spectrum(n: u32, k: u32, j: u32, exact: bool) -> Result<(), CliError> {
    let d = DickeIndex::new(n, k)?;
    let spectrum = analysis::schmidt_spectrum(d, Cut(j))?;
    if exact {
        println!("{:>4}  {:>14}  {:>21}", "q", "lambda", "lambda_f64");
        for ((q, lambda), lf) in spectrum.iter().zip(spectrum.probs_f64()) {
            println!("{q:>4}  {:>14}  {:>21}", lambda.to_string(), fmt_f64(*lf));
        }
    } else {
        println!("{:>4}  {:>21}", "q", "lambda_f64");
        for (i, lf) in spectrum.probs_f64().iter().enumerate() {
            println!("{:>4}  {:>21}", spectrum.q_min() + i as u32, fmt_f64(*lf));
        }
    }
    let e = analysis::entropy(d, Cut(j))?;
    let pi = analysis::purity(d, Cut(j))?;
    println!("S = {} bits", fmt_f64(e.bits));
    println!("purity = {pi} ({})", fmt_f64(rational_to_f64(&pi)));
    Ok(())
}

#[derive(Serialize)]
struct EntropyRow {
    n: u32,
    k: u32,
    j: u32,
    entropy_bits: f64,
}

fn cmd_entropy_table(
    from: u32,
    to: u32,
    stride: u32,
    k_sel: &Selection,
    j_sel: &Selection,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<(), CliError> {
    if from == 0 || to < from || stride == 0 {
        return Err(CliError::Validation(format!(
            "empty sweep range: from={from} to={to} stride={stride}"
        )));
    }
    let mut rows = Vec::new();
    for n in (from..=to).step_by(stride as usize) {
        for k in k_sel.values_up_to(n) {
            let d = DickeIndex::new(n, k)?;
            for j in j_sel.values_up_to(n) {
                rows.push(EntropyRow {
                    n,
                    k,
                    j,
                    entropy_bits: analysis::entropy(d, Cut(j))?.bits,
                });
            }
        }
    }
    let mut sink = open_sink(out)?;
    match format {
        Format::Csv => {
            writeln!(sink, "n,k,j,entropy_bits")?;
            for r in &rows {
                writeln!(sink, "{},{},{},{}", r.n, r.k, r.j, fmt_f64(r.entropy_bits))?;
            }
        }
        Format::Json => write_json(&mut sink, &serde_json::json!({ "rows": rows }))?,
    }
    Ok(())
}

#[derive(Serialize)]
struct SmaxRow {
    n: u32,
    s_max_bits: f64,
}

#[derive(Serialize)]
struct FitLine {
    slope: f64,
    intercept: f64,
}

fn cmd_smax(
    from: u32,
    to: u32,
    stride: u32,
    fit: bool,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<(), CliError> {
    if from == 0 || !from.is_multiple_of(2) || !to.is_multiple_of(2) {
        return Err(CliError::Validation(format!(
            "s_max sweeps even n only: from={from} to={to}"
        )));
    }
    if to < from || stride == 0 || !stride.is_multiple_of(2) {
        return Err(CliError::Validation(format!(
            "invalid sweep: from={from} to={to} stride={stride} (stride must be even)"
        )));
    }
    let mut rows = Vec::new();
    for n in (from..=to).step_by(stride as usize) {
        rows.push(SmaxRow {
            n,
            s_max_bits: analysis::s_max(n)?.bits,
        });
    }
    let fit_line = if fit {
        let (slope, intercept) = analysis::s_max_fit(from, to)?;
        Some(FitLine { slope, intercept })
    } else {
        None
    };
    let mut sink = open_sink(out)?;
    match format {
        Format::Csv => {
            writeln!(sink, "n,s_max_bits")?;
            for r in &rows {
                writeln!(sink, "{},{}", r.n, fmt_f64(r.s_max_bits))?;
            }
            if let Some(f) = &fit_line {
                writeln!(
                    sink,
                    "# fit: slope={} intercept={}",
                    fmt_f64(f.slope),
                    fmt_f64(f.intercept)
                )?;
            }
        }
        Format::Json => {
            let mut doc = serde_json::json!({ "rows": rows });
            if let Some(f) = fit_line {
                doc["fit"] = serde_json::json!(f);
            }
            write_json(&mut sink, &doc)?;
        }
    }
    Ok(())
}

fn cmd_purity(n: u32, k: u32) -> Result<(), CliError> {
    let d = DickeIndex::new(n, k)?;
    let pi = analysis::potential_me(d)?;
    println!("potential_me = {pi} ({})", fmt_f64(rational_to_f64(&pi)));
    if n.is_multiple_of(2) {
        let asymptote = analysis::potential_me_asymptote(n)?;
        println!("asymptote 2/sqrt(pi n) = {}", fmt_f64(asymptote));
    }
    Ok(())
}

fn cmd_witness(n: u32, k: u32, a: f64, p: f64) -> Result<(), CliError> {
    let d = DickeIndex::new(n, k)?;
    let scenario = WitnessScenario::new(d, a, p)?;
    let value = witness::expectation_combined(&scenario);
    let boundary = witness::separatrix(d, &[a])?[0];
    println!("<W> = {}", fmt_f64(value));
    println!(
        "{}",
        if value < 0.0 {
            "entanglement detected"
        } else {
            "no entanglement detected"
        }
    );
    println!("p_max at a={a}: {}", fmt_f64(boundary.p));
    Ok(())
}

#[derive(Serialize)]
struct SeparatrixRow {
    a: f64,
    p: f64,
    flag: String,
}

fn cmd_separatrix(
    n: u32,
    k: u32,
    a_steps: u32,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<(), CliError> {
    if a_steps < 2 {
        return Err(CliError::Validation(format!(
            "--a-steps must be at least 2, got {a_steps}"
        )));
    }
    let d = DickeIndex::new(n, k)?;
    let grid: Vec<f64> = (0..a_steps)
        .map(|i| i as f64 / (a_steps - 1) as f64)
        .collect();
    let points = witness::separatrix(d, &grid)?;
    let (a_star, p_star) = witness::separatrix_peak(d)?;
    let mut sink = open_sink(out)?;
    match format {
        Format::Csv => {
            writeln!(sink, "a,p,flag")?;
            for pt in &points {
                writeln!(sink, "{},{},{}", fmt_f64(pt.a), fmt_f64(pt.p), pt.flag)?;
            }
            writeln!(
                sink,
                "# peak: a_star={} p_star={}",
                fmt_f64(a_star),
                fmt_f64(p_star)
            )?;
        }
        Format::Json => {
            let rows: Vec<SeparatrixRow> = points
                .iter()
                .map(|pt| SeparatrixRow {
                    a: pt.a,
                    p: pt.p,
                    flag: pt.flag.to_string(),
                })
                .collect();
            write_json(
                &mut sink,
                &serde_json::json!({
                    "rows": rows,
                    "peak": { "a_star": a_star, "p_star": p_star },
                }),
            )?;
        }
    }
    Ok(())
}

fn write_json(sink: &mut Box<dyn std::io::Write>, doc: &serde_json::Value) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *sink, doc).map_err(|e| CliError::Io(e.to_string()))?;
    writeln!(sink)?;
    Ok(())
}
