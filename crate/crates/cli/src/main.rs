//! `energy-lab`: spherical Riesz/log energy computations from the shell.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 domain/pole error.

use clap::{Args, Parser, Subcommand};
use energy_lab_core::energy::{
    circle_exact, circle_exact_log, circle_expansion, distance_histogram, Configuration,
    EnergyKind,
};
use energy_lab_core::harness::{
    berezin_estimate, fit_constants, ingest_table_path, summarize,
    verify_bounds, write_remainder_csv, EnergyTable, FitModel, FitNorm, Source,
};
use energy_lab_core::optimize::{multistart, separation_ratio, OptimizerSettings};
use energy_lab_core::theory::{self, SphereDim};
use energy_lab_core::Error;
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "energy-lab", version, about = "Riesz and logarithmic energy on spheres")]
struct Cli {
    /// Thread count for pair sums and restarts (or ENERGY_LAB_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Emit machine-readable JSON wherever a table would be printed.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named theory constant as JSON.
    Constants(ConstantsArgs),
    /// Multistart projected-gradient optimization on S^d.
    Optimize(OptimizeArgs),
    /// Exact circle energies and their asymptotic expansion.
    Circle(CircleArgs),
    /// Remainder sequence of an energy table.
    Remainder(TableArgs),
    /// Fit next-order coefficients of a log-energy table.
    Fit(FitArgs),
    /// Check an energy table against proven bounds.
    Verify(TableArgs),
    /// Semicontinuum estimate of the d=2 Riesz energy.
    Berezin(BerezinArgs),
    /// Pairwise distance histogram of a configuration file.
    Histogram(HistogramArgs),
}

#[derive(Args)]
struct ConstantsArgs {
    /// Constant name (see --list).
    #[arg(long, required_unless_present = "list")]
    name: Option<String>,
    #[arg(long)]
    d: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<f64>,
    #[arg(long)]
    k: Option<u32>,
    /// List available constant names.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct OptimizeArgs {
    #[arg(long = "N", visible_alias = "n")]
    n: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Energy kind: log | riesz.
    #[arg(long, default_value = "log")]
    kind: String,
    /// Riesz exponent (required with --kind riesz).
    #[arg(long, allow_hyphen_values = true)]
    s: Option<f64>,
    /// Restart count (default: 16 for N <= 100, 4 beyond).
    #[arg(long)]
    restarts: Option<u32>,
    #[arg(long, default_value_t = 0x5eed_cafe)]
    seed: u64,
    /// Tangential gradient sup-norm tolerance.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[arg(long, default_value_t = 50_000)]
    max_iters: u64,
    /// Write the optimized configuration ("d N" header + rows).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the best restart's (iter, energy, gradnorm) trace CSV.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Append "N,energy" to a table CSV (header written when new).
    #[arg(long)]
    append_table: Option<PathBuf>,
}

#[derive(Args)]
struct CircleArgs {
    #[arg(long = "N", visible_alias = "n")]
    n: u64,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<f64>,
    /// Use the logarithmic kernel instead of a Riesz exponent.
    #[arg(long)]
    log: bool,
    /// Expansion truncation order p.
    #[arg(long, default_value_t = 3)]
    p: usize,
    /// Print exact vs expansion agreement.
    #[arg(long)]
    compare: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Input CSV with header "N,energy".
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value = "log")]
    kind: String,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<f64>,
    #[arg(long, default_value_t = 2)]
    d: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FitArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 2)]
    d: u32,
    /// Model: c (N term only) or c-dlog (N, log N, constant).
    #[arg(long, default_value = "c")]
    model: String,
    /// Norm: l1 or l2.
    #[arg(long, default_value = "l1")]
    norm: String,
    /// Restrict to rows with N >= this.
    #[arg(long)]
    n_min: Option<u64>,
    /// Restrict to rows with N <= this.
    #[arg(long)]
    n_max: Option<u64>,
}

#[derive(Args)]
struct BerezinArgs {
    #[arg(long, allow_hyphen_values = true)]
    s: f64,
    #[arg(long = "N", visible_alias = "n")]
    n: u64,
    #[arg(long, default_value_t = 7)]
    shells: usize,
}

#[derive(Args)]
struct HistogramArgs {
    /// Configuration file ("d N" header + coordinate rows).
    #[arg(long)]
    config: PathBuf,
    #[arg(long, default_value_t = 64)]
    bins: usize,
    #[arg(long, default_value_t = 2.0)]
    dmax: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_kind(kind: &str, s: Option<f64>) -> Result<EnergyKind, Error> {
    match kind {
        "log" => Ok(EnergyKind::Log),
        "riesz" => {
            let s = s.ok_or_else(|| Error::domain("--kind riesz requires --s"))?;
            EnergyKind::riesz(s)
        }
        other => Err(Error::domain(format!("unknown kind '{other}' (log | riesz)"))),
    }
}

fn open_sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn run_constants(a: &ConstantsArgs) -> Result<(), Error> {
    if a.list {
        for (name, params) in theory::catalog() {
            if params.is_empty() {
                println!("{name}");
            } else {
                println!("{name} (requires {params})");
            }
        }
        return Ok(());
    }
    let c = theory::lookup(a.name.as_deref().unwrap(), a.d, a.s, a.k)?;
    println!("{}", serde_json::to_string_pretty(&c).expect("serializable"));
    Ok(())
}

fn run_optimize(a: &OptimizeArgs, json: bool) -> Result<(), Error> {
    let kind = parse_kind(&a.kind, a.s)?;
    let mut settings = OptimizerSettings::for_problem_size(a.n);
    if let Some(r) = a.restarts {
        settings.restarts = r;
    }
    settings.seed = a.seed;
    settings.grad_tol = a.tol;
    settings.max_iters = a.max_iters;
    settings.record_trace = a.trace.is_some();

    let result = multistart(a.n, a.d, kind, &settings)?;
    if let Some(path) = &a.out {
        result.config.write_to_path(path)?;
    }
    if let Some(path) = &a.trace {
        let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
        writeln!(w, "iter,energy,gradnorm")?;
        for t in &result.trace {
            writeln!(w, "{},{},{}", t.iter, t.energy, t.grad_norm)?;
        }
    }
    if let Some(path) = &a.append_table {
        let new = !path.exists();
        let mut f = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
        if new {
            writeln!(f, "N,energy")?;
        }
        writeln!(f, "{},{}", a.n, result.energy)?;
    }

    let separation = separation_ratio(&result.config).ok();
    // Gap diagnostic against the conjectured d=2 log asymptotics.
    let excess = if kind == EnergyKind::Log && a.d == 2 {
        let d2 = SphereDim::new(2)?;
        let nf = a.n as f64;
        let conj = theory::v_log_sphere(d2) * nf * nf - 0.5 * nf * nf.ln()
            + theory::c_log_2() * nf;
        Some(result.energy - conj)
    } else {
        None
    };

    if json {
        let payload = json!({
            "n": a.n,
            "d": a.d,
            "kind": a.kind,
            "s": a.s,
            "energy": result.energy,
            "grad_norm": result.grad_norm,
            "iterations": result.iterations,
            "restart_index": result.restart_index,
            "converged": result.converged,
            "separation_ratio": separation,
            "excess_over_conjectured": excess,
            "excess_per_log_n": excess.map(|e| e / (a.n as f64).ln()),
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        println!(
            "N={} d={} kind={kind}: energy {:.12} (grad {:.3e}, {} iters, restart {}, converged {})",
            a.n, a.d, result.energy, result.grad_norm, result.iterations, result.restart_index,
            result.converged
        );
        if let Some(r) = separation {
            if r < 0.5 {
                eprintln!("warning: separation ratio {r:.3} is below 0.5");
            }
        }
        if let Some(e) = excess {
            println!(
                "excess over conjectured asymptotics: {:.6e} ({:.6e} per log N)",
                e,
                e / (a.n as f64).ln()
            );
        }
    }
    Ok(())
}

fn run_circle(a: &CircleArgs, json: bool) -> Result<(), Error> {
    if a.log {
        let exact = circle_exact_log(a.n)?;
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({"n": a.n, "kind": "log", "exact": exact}))
                    .expect("serializable")
            );
        } else {
            println!("L_log({}) = {exact:.12} (exactly -N log N)", a.n);
        }
        return Ok(());
    }
    let s = a.s.ok_or_else(|| Error::domain("circle: provide --s or --log"))?;
    let exact = circle_exact(s, a.n)?;
    let expansion = circle_expansion(s, a.n, a.p)?;
    let rel = ((exact - expansion) / exact).abs();
    let digits = if rel == 0.0 { f64::INFINITY } else { -rel.log10() };
    if json {
        let payload = json!({
            "n": a.n, "s": s, "p": a.p,
            "exact": exact,
            "expansion": expansion,
            "relative_difference": rel,
            "digits_of_agreement": digits,
        });
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        println!("L_s({}) exact      = {exact:.15e}", a.n);
        println!("expansion (p = {}) = {expansion:.15e}", a.p);
        if a.compare {
            println!("relative difference {rel:.3e} ({digits:.1} digits)");
        }
    }
    Ok(())
}

fn load_table(a: &TableArgs) -> Result<EnergyTable, Error> {
    let kind = parse_kind(&a.kind, a.s)?;
    ingest_table_path(&a.input, kind, SphereDim::new(a.d)?)
}

fn run_remainder(a: &TableArgs, json: bool) -> Result<(), Error> {
    let table = load_table(a)?;
    let mut sink = open_sink(&a.out)?;
    write_remainder_csv(&table, &mut sink)?;
    sink.flush()?;
    if json {
        let summary = summarize(&table)?;
        eprintln!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
    }
    Ok(())
}

fn run_fit(a: &FitArgs, json: bool) -> Result<(), Error> {
    let full = ingest_table_path(&a.input, EnergyKind::Log, SphereDim::new(a.d)?)?;
    let mut table = EnergyTable::new(EnergyKind::Log, SphereDim::new(a.d)?);
    for row in full.rows() {
        if a.n_min.is_none_or(|m| row.n >= m) && a.n_max.is_none_or(|m| row.n <= m) {
            table.push(row.n, row.energy, Source::Ingested)?;
        }
    }
    let model = match a.model.as_str() {
        "c" => FitModel::C,
        "c-dlog" => FitModel::CAndDlog,
        other => return Err(Error::domain(format!("unknown model '{other}' (c | c-dlog)"))),
    };
    let norm = match a.norm.as_str() {
        "l1" => FitNorm::L1,
        "l2" => FitNorm::L2,
        other => return Err(Error::domain(format!("unknown norm '{other}' (l1 | l2)"))),
    };
    let fit = fit_constants(&table, model, norm)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&fit).expect("serializable"));
    } else {
        println!("model {} ({} rows):", fit.model, table.len());
        for (name, value) in &fit.coefficients {
            println!("  {name} = {value:.8}");
        }
        println!("  residual l1 = {:.3e}, l2 = {:.3e}", fit.residual_l1, fit.residual_l2);
    }
    Ok(())
}

fn run_verify(a: &TableArgs, json: bool) -> Result<(), Error> {
    let table = load_table(a)?;
    let report = verify_bounds(&table)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        for row in &report.rows {
            for c in &row.checks {
                println!(
                    "N={:<6} {:<28} value {:+.8e} in [{}, {}] -> {:?}",
                    row.n,
                    c.name,
                    c.value,
                    c.lower.map_or("-inf".into(), |v| format!("{v:+.6e}")),
                    c.upper.map_or("+inf".into(), |v| format!("{v:+.6e}")),
                    c.status
                );
            }
        }
        println!("hard violations: {}", report.hard_violations);
    }
    if report.hard_violations > 0 {
        eprintln!("{} hard bound violations detected", report.hard_violations);
    }
    Ok(())
}

fn run_berezin(a: &BerezinArgs, json: bool) -> Result<(), Error> {
    let estimate = berezin_estimate(a.s, a.n, a.shells)?;
    if json {
        let payload = json!({"s": a.s, "n": a.n, "shells": a.shells, "estimate": estimate});
        println!("{}", serde_json::to_string_pretty(&payload).expect("serializable"));
    } else {
        println!("semicontinuum estimate (s={}, N={}, {} shells): {estimate:.10e}", a.s, a.n, a.shells);
    }
    Ok(())
}

fn run_histogram(a: &HistogramArgs, json: bool) -> Result<(), Error> {
    let config = Configuration::read_from_path(&a.config)?;
    let hist = distance_histogram(&config, a.bins, a.dmax)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&hist).expect("serializable"));
    } else {
        let mut sink = open_sink(&a.out)?;
        hist.write_csv(&mut sink)?;
        sink.flush()?;
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Constants(a) => run_constants(a),
        Command::Optimize(a) => run_optimize(a, cli.json),
        Command::Circle(a) => run_circle(a, cli.json),
        Command::Remainder(a) => run_remainder(a, cli.json),
        Command::Fit(a) => run_fit(a, cli.json),
        Command::Verify(a) => run_verify(a, cli.json),
        Command::Berezin(a) => run_berezin(a, cli.json),
        Command::Histogram(a) => run_histogram(a, cli.json),
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Domain(_)
        | Error::Pole { .. }
        | Error::Unsupported(_)
        | Error::SingularConfiguration { .. }
        | Error::InvalidConfiguration(_)
        | Error::RankDeficient => 2,
        Error::Io(_) | Error::Parse { .. } | Error::Stagnation { .. } => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's help/version pseudo-errors exit 0; real usage errors exit 1.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    #[cfg(feature = "parallel")]
    {
        let threads = cli.threads.or_else(|| {
            std::env::var("ENERGY_LAB_THREADS").ok().and_then(|v| v.parse().ok())
        });
        if let Some(t) = threads {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
        }
    }

    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
