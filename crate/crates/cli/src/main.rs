use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use kanlim::derived::sseq_pages;
use kanlim::franke::{roundtrip, smash_pipeline_with, PipelineOptions};
use kanlim::io::{complex_from_json, complex_to_json, diagram_from_json, page_to_json};
use kanlim::palgebra::is_odd_prime;
use kanlim::posets::{by_name, FinPoset, PosetJson, PosetMap};
use kanlim::random::{random_complex, rng, Bounds};
use kanlim::suites::{acceptable, SuiteConfig, SUITES};

const USAGE: u8 = 64;

/// Exact p-local homological algebra over finite posets.
#[derive(Parser)]
#[command(name = "kanlim", version)]
struct Cli {
    /// odd prime
    #[arg(long, global = true, default_value_t = 3)]
    p: u64,
    /// seed for random instances; KANLIM_SEED takes precedence
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// random cases per suite or files to generate
    #[arg(long, global = true, default_value_t = 50)]
    cases: usize,
    #[arg(long, global = true, default_value_t = 3)]
    max_rank: usize,
    #[arg(long, global = true, default_value_t = 3)]
    max_exp: u32,
    /// write the JSON report (or generated files) here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every acceptance suite
    Verify,
    /// Run the smash product pipeline on two complexes
    Smash {
        a: PathBuf,
        b: PathBuf,
        /// reject inputs with torsion instead of replacing them
        #[arg(long)]
        flat: bool,
    },
    /// Decompose a complex into a crown and rebuild it
    Reconstruct { c: PathBuf },
    /// Spectral sequence pages of the homotopy Kan extension
    Sseq {
        diagram: PathBuf,
        /// `point`, `identity`, or a JSON file {"target": poset, "images": {element: element}}
        #[arg(long, default_value = "point")]
        map: String,
    },
    /// Print a named poset: I, V, IxI, C_N, D_N
    Poset {
        name: String,
        #[arg(long)]
        dot: bool,
    },
    /// Write seeded random complexes
    Randomgen {
        /// torsion-free modules only
        #[arg(long)]
        flat: bool,
    },
}

enum Failure {
    Checks,
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, v: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(v)?;
    match out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print_stdout(&(text + "\n"));
            Ok(())
        }
    }
}

/// Writes to stdout, tolerating a closed pipe.
fn print_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn config(cli: &Cli) -> Result<SuiteConfig, Failure> {
    if !is_odd_prime(cli.p) {
        return Err(Failure::Input(format!("{} is not an odd prime", cli.p)));
    }
    if cli.max_rank == 0 || cli.max_exp == 0 {
        return Err(Failure::Input("bounds must be positive".into()));
    }
    let seed = match std::env::var("KANLIM_SEED") {
        Ok(s) => s.parse().map_err(|_| Failure::Input(format!("KANLIM_SEED={s} is not an integer")))?,
        Err(_) => cli.seed,
    };
    Ok(SuiteConfig { p: cli.p, seed, cases: cli.cases, bounds: Bounds { max_rank: cli.max_rank, max_exp: cli.max_exp } })
}

fn verify(cli: &Cli) -> Outcome {
    let cfg = config(cli)?;
    let reports: Vec<_> = SUITES.iter().map(|s| s(&cfg)).collect();
    for r in &reports {
        eprintln!("{}", r.line());
    }
    emit(&cli.out, &json!({ "p": cfg.p, "seed": cfg.seed, "cases": cfg.cases, "suites": reports }))?;
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        if acceptable(&reports) {
            eprintln!("only the characterised membership failure remains");
        }
        Err(Failure::Checks)
    }
}

fn smash(cli: &Cli, a: &Path, b: &Path, flat: bool) -> Outcome {
    let (c, ct) = (complex_from_json(&read_json(a)?)?, complex_from_json(&read_json(b)?)?);
    let opts = PipelineOptions { auto_flat: !flat, ..PipelineOptions::default() };
    let r = smash_pipeline_with(&c, &ct, &opts)?;
    for ch in &r.checks {
        eprintln!("{:<28} {}", ch.anchor, if ch.passed { "pass" } else { "fail" });
    }
    emit(&cli.out, &serde_json::to_value(&r)?)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn reconstruct(cli: &Cli, path: &Path) -> Outcome {
    let c = complex_from_json(&read_json(path)?)?;
    let r = roundtrip(&c)?;
    println!("roundtrip: {}", if r.exact() { "exact" } else { "inexact" });
    if cli.out.is_some() {
        emit(&cli.out, &serde_json::to_value(&r)?)?;
    }
    if r.exact() {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn poset_map(source: &Arc<FinPoset>, which: &str) -> Result<PosetMap, Failure> {
    match which {
        "point" => Ok(PosetMap::constant(source, &Arc::new(FinPoset::point()), 0)),
        "identity" => Ok(PosetMap::identity(source)),
        file => {
            let v = read_json(Path::new(file))?;
            let pj: PosetJson = serde_json::from_value(v["target"].clone())?;
            let target = Arc::new(FinPoset::from_json(&pj)?);
            let images = v["images"].as_object().ok_or_else(|| Failure::Input("map needs \"images\"".into()))?;
            Ok(PosetMap::from_names(source.clone(), target, |s| {
                images.get(s).and_then(Value::as_str).unwrap_or_default().to_string()
            })?)
        }
    }
}

fn sseq(cli: &Cli, path: &Path, map: &str) -> Outcome {
    let x = diagram_from_json(&read_json(path)?)?;
    let f = poset_map(x.shape(), map)?;
    let p = x.object(0).p();
    let r = sseq_pages(&f, &x, p)?;
    let vertices: Vec<Value> = r
        .vertices
        .iter()
        .zip(&r.pages)
        .map(|(name, pg)| {
            json!({
                "vertex": name,
                "pages": [page_to_json(2, &pg.e2), page_to_json(pg.max_stage + 1, &pg.e_inf)],
                "abutment": pg.abutment,
            })
        })
        .collect();
    emit(&cli.out, &json!({ "vertices": vertices, "e2_matches_derived": r.e2_matches_derived, "converges": r.converges }))?;
    if r.e2_matches_derived && r.converges {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn poset(cli: &Cli, name: &str, dot: bool) -> Outcome {
    let p = by_name(name)?;
    if dot {
        match &cli.out {
            Some(path) => fs::write(path, p.to_dot())?,
            None => print_stdout(&p.to_dot()),
        }
        Ok(())
    } else {
        emit(&cli.out, &serde_json::to_value(p.to_json())?)
    }
}

fn randomgen(cli: &Cli, flat: bool) -> Outcome {
    let cfg = config(cli)?;
    let mut g = rng(cfg.seed);
    let complexes: Vec<Value> =
        (0..cfg.cases).map(|_| complex_to_json(&random_complex(&mut g, cfg.p, cfg.bounds, flat))).collect();
    match &cli.out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            for (i, c) in complexes.iter().enumerate() {
                fs::write(dir.join(format!("complex-{i:03}.json")), serde_json::to_string_pretty(c)? + "\n")?;
            }
            Ok(())
        }
        None => emit(&None, &Value::Array(complexes)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let outcome = match &cli.command {
        Command::Verify => verify(&cli),
        Command::Smash { a, b, flat } => smash(&cli, a, b, *flat),
        Command::Reconstruct { c } => reconstruct(&cli, c),
        Command::Sseq { diagram, map } => sseq(&cli, diagram, map),
        Command::Poset { name, dot } => poset(&cli, name, *dot),
        Command::Randomgen { flat } => randomgen(&cli, *flat),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
