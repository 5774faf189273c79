use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use spatch::convert::Algorithm;
use spatch::io::{self, bench};
use spatch::sampling::dome_spatch;
use spatch::{Error, SPatch};

#[derive(Parser)]
#[command(name = "spatch", version, about = "Convert S-patches into trimmed rational Bezier patches")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Convert an S-patch file into a trimmed tensor-product patch.
    Convert {
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Also write an OBJ mesh of the converted patch.
        #[arg(long)]
        mesh: Option<PathBuf>,
        #[arg(long, default_value_t = 16)]
        resolution: usize,
        /// Write a JSON diagnostics report.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Interior sample count for the report's error check.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Evaluate an S-patch at a domain point.
    Eval {
        input: PathBuf,
        /// Domain point as `u,v`.
        #[arg(long, value_parser = parse_point)]
        at: [f64; 2],
    },
    /// Time the quadrilateral conversion on a seeded random patch.
    Bench {
        #[arg(long)]
        sides: usize,
        #[arg(long)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Algo::Efficient)]
        algo: Algo,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        runs: usize,
    },
    /// Write a dome-shaped sample S-patch.
    Sample {
        #[arg(long)]
        sides: usize,
        #[arg(long)]
        depth: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Naive,
    Efficient,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Naive => Algorithm::Naive,
            Algo::Efficient => Algorithm::Efficient,
        }
    }
}

fn parse_point(s: &str) -> Result<[f64; 2], String> {
    let (u, v) = s.split_once(',').ok_or("expected u,v")?;
    let u = u.trim().parse::<f64>().map_err(|e| e.to_string())?;
    let v = v.trim().parse::<f64>().map_err(|e| e.to_string())?;
    Ok([u, v])
}

fn read_spatch(path: &Path) -> Result<SPatch, Error> {
    io::parse_spatch(&fs::read_to_string(path)?)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Convert {
            input,
            output,
            mesh,
            resolution,
            report,
            samples,
        } => {
            let s = read_spatch(&input)?;
            let (t, timings) = io::convert_timed(&s)?;
            fs::write(&output, io::trimmed_to_json(&t))?;
            if let Some(path) = mesh {
                fs::write(path, io::trimmed_mesh(&t, resolution)?.to_obj())?;
            }
            let (du, dv) = t.patch.degree();
            println!("degree [{du},{dv}], {} control points", t.patch.control().len());
            if let Some(path) = report {
                let r = io::build_report(&s, &t, timings, samples, 0)?;
                println!(
                    "max error {:.3e} ({:.3e} of box diagonal), {} outlier control points",
                    r.max_oracle_error, r.relative_oracle_error, r.outlier_count
                );
                fs::write(path, serde_json::to_string_pretty(&r)?)?;
            }
        }
        Command::Eval { input, at } => {
            let s = read_spatch(&input)?;
            let p = s.eval_uv(at)?;
            println!("{} {} {}", p[0], p[1], p[2]);
        }
        Command::Bench {
            sides,
            depth,
            algo,
            seed,
            runs,
        } => {
            let t = bench::benchmark_best(sides, depth, algo.into(), seed, runs)?;
            let name = match algo {
                Algo::Naive => "naive",
                Algo::Efficient => "efficient",
            };
            println!(
                "sides={sides} depth={depth} algo={name} seed={seed} ms={:.3}",
                t.as_secs_f64() * 1e3
            );
            if sides == 5 && depth == 8 {
                println!("reference: more than 5 minutes reported for this case on a 2.8 GHz processor");
            }
        }
        Command::Sample {
            sides,
            depth,
            seed,
            output,
        } => {
            let s = dome_spatch(sides, depth, seed)?;
            fs::write(output, io::spatch_to_json(&s))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 2 } else { 1 })
        }
    }
}
