//! `vkmax` — exact vertex-k-maximal r-uniform hypergraph toolkit.
//!
//! Exit codes: 0 on success / all claims verified, 1 on a violated claim or
//! failed check, 2 on usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use vkmax::connectivity::{kappa_bar, kappa_bar_bruteforce, min_vertex_cut, separation_triple};
use vkmax::harness::{
    claim_report_csv, claim_report_json, exhaustive_extremal, sample_saturations, verify_claim,
    write_claim_report, write_search_result, CellStatus, ClaimId, GridSpec, SearchLimits,
    ALL_CLAIMS,
};
use vkmax::maximality::{is_vertex_k_maximal, saturate, SaturationOrder, Verdict};
use vkmax::{bounds, io, HgError, Hypergraph};

const DEFAULT_SEED: u64 = 0xC0FFEE;

fn claims_help() -> String {
    let mut out = String::from("Claim identifiers:\n");
    for claim in ALL_CLAIMS {
        out.push_str(&format!("  {:<9} {}\n", claim.id(), claim.statement()));
    }
    out
}

#[derive(Parser)]
#[command(name = "vkmax", version, about = "Exact toolkit for vertex-k-maximal r-uniform hypergraphs")]
struct Cli {
    /// Worker threads for the parallel kernels (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized orders; fixed by default so bare runs reproduce.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Hl,
    Hu,
    Complete,
    Empty,
    Complement,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum KappaBarAlgo {
    Decomp,
    Brute,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sample,
}

#[derive(Args)]
struct GenArgs {
    /// Which construction to build.
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Input file for complement/join.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Second input file for join.
    #[arg(long)]
    input2: Option<PathBuf>,
    /// Output path (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a hypergraph (hl, hu, complete, empty, complement, join).
    Gen(GenArgs),
    /// Vertex connectivity and a lexicographically smallest minimum cut.
    Kappa { file: PathBuf },
    /// Maximum connectivity over subhypergraphs, with witness.
    KappaBar {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KappaBarAlgo::Decomp)]
        algo: KappaBarAlgo,
    },
    /// Separation triple (minimum cut plus the two sides).
    Separate { file: PathBuf },
    /// Decide vertex-k-maximality; exit 1 when not maximal.
    CheckMaximal {
        #[arg(short, long)]
        k: usize,
        file: PathBuf,
    },
    /// Grow the input to a vertex-k-maximal hypergraph.
    Saturate {
        #[arg(short, long)]
        k: usize,
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Order::Lex)]
        order: Order,
        /// Output path (stdout when omitted).
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact size bounds over a parameter range (CSV-friendly).
    Bounds {
        /// Vertex counts, `A..B` inclusive or a single value.
        #[arg(long)]
        n: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Extremal search at one parameter cell.
    Search {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        /// Saturation trials in sample mode.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Largest edge universe accepted by exhaustive mode.
        #[arg(long, default_value_t = 24)]
        max_universe: usize,
        #[arg(long)]
        node_budget: Option<u64>,
        #[arg(long)]
        time_budget_ms: Option<u64>,
        /// Directory to receive the run report and witnesses.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Verify one claim over a parameter grid; exit 1 on any violation.
    #[command(after_help = claims_help())]
    Verify {
        /// Claim identifier (see below).
        #[arg(long)]
        claim: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Values of k to sweep (claim default when omitted).
        #[arg(long = "k")]
        ks: Vec<usize>,
        /// Values of r to sweep (claim default when omitted).
        #[arg(long = "r")]
        rs: Vec<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        max_universe: Option<usize>,
        /// Directory to receive report.json / report.csv / witnesses.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // ignore failure: the global pool can only be initialized once
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &HgError) -> u8 {
    match e {
        // an inadmissible input is a failed check, not a usage error
        HgError::NotAdmissible { .. } => 1,
        _ => 2,
    }
}

/// Echo the fully resolved configuration; in JSON mode it is embedded in the
/// output object instead.
fn echo_config(cli: &Cli, command: &str, resolved: serde_json::Value) -> serde_json::Value {
    let config = json!({
        "command": command,
        "threads": cli.threads,
        "format": match cli.format { Format::Text => "text", Format::Json => "json", Format::Csv => "csv" },
        "seed": cli.seed,
        "args": resolved,
    });
    if cli.format != Format::Json {
        println!("# config {config}");
    }
    config
}

fn emit(cli: &Cli, config: serde_json::Value, result: serde_json::Value, text: String) {
    match cli.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "config": config, "result": result }))
                    .expect("serializable")
            );
        }
        _ => println!("{text}"),
    }
}

fn write_or_print(cli: &Cli, h: &Hypergraph, output: &Option<PathBuf>) -> vkmax::Result<()> {
    let body = match cli.format {
        Format::Json => io::to_json_string(h) + "\n",
        _ => io::to_hg_string(h),
    };
    match output {
        Some(path) => std::fs::write(path, body).map_err(HgError::from),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn parse_n_range(s: &str) -> vkmax::Result<(usize, usize)> {
    let parse = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| HgError::ParameterRange(format!("bad vertex count {t:?}")))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok((parse(a)?, parse(b)?)),
        None => {
            let v = parse(s)?;
            Ok((v, v))
        }
    }
}

fn run(cli: &Cli) -> vkmax::Result<u8> {
    match &cli.command {
        Command::Gen(args) => gen(cli, args),
        Command::Kappa { file } => {
            let config = echo_config(cli, "kappa", json!({ "file": file.display().to_string() }));
            let h = io::read_hg_file(file)?;
            let res = min_vertex_cut(&h);
            let text = match &res.cut {
                Some(cut) => format!("kappa {}\ncut {}", res.kappa, cut),
                None => format!("kappa {}\nno cut", res.kappa),
            };
            emit(cli, config, serde_json::to_value(&res)?, text);
            Ok(0)
        }
        Command::KappaBar { file, algo } => {
            let config = echo_config(
                cli,
                "kappa-bar",
                json!({
                    "file": file.display().to_string(),
                    "algo": match algo { KappaBarAlgo::Decomp => "decomp", KappaBarAlgo::Brute => "brute" },
                }),
            );
            let h = io::read_hg_file(file)?;
            let res = match algo {
                KappaBarAlgo::Decomp => kappa_bar(&h),
                KappaBarAlgo::Brute => kappa_bar_bruteforce(&h)?,
            };
            let text = format!("kappa-bar {}\nwitness {}", res.value, res.witness);
            emit(cli, config, serde_json::to_value(&res)?, text);
            Ok(0)
        }
        Command::Separate { file } => {
            let config = echo_config(cli, "separate", json!({ "file": file.display().to_string() }));
            let h = io::read_hg_file(file)?;
            let t = separation_triple(&h)?;
            let text = format!(
                "cut {}\nside1 {}\nside2 {}\norders {} {}",
                t.s, t.side1, t.side2, t.n1, t.n2
            );
            emit(cli, config, serde_json::to_value(&t)?, text);
            Ok(0)
        }
        Command::CheckMaximal { k, file } => {
            let config = echo_config(
                cli,
                "check-maximal",
                json!({ "k": k, "file": file.display().to_string() }),
            );
            let h = io::read_hg_file(file)?;
            let report = is_vertex_k_maximal(&h, *k)?;
            let mut text = format!(
                "verdict {:?}\nkappa {}\nkappa-bar {}",
                report.verdict, report.kappa, report.kappa_bar
            );
            if let Some(ce) = &report.counterexample {
                text.push_str(&format!("\ncounterexample {ce}"));
            }
            emit(cli, config, serde_json::to_value(&report)?, text);
            Ok(if report.verdict == Verdict::Maximal { 0 } else { 1 })
        }
        Command::Saturate {
            k,
            file,
            order,
            output,
        } => {
            let config = echo_config(
                cli,
                "saturate",
                json!({
                    "k": k,
                    "file": file.display().to_string(),
                    "order": match order { Order::Lex => "lex", Order::Random => "random" },
                    "seed": cli.seed,
                    "output": output.as_ref().map(|p| p.display().to_string()),
                }),
            );
            let h = io::read_hg_file(file)?;
            let sat_order = match order {
                Order::Lex => SaturationOrder::Lex,
                Order::Random => SaturationOrder::SeededRandom { seed: cli.seed },
            };
            let sat = saturate(&h, *k, sat_order)?;
            if cli.format == Format::Json && output.is_none() {
                emit(cli, config, serde_json::to_value(&sat)?, String::new());
            } else {
                write_or_print(cli, &sat, output)?;
            }
            Ok(0)
        }
        Command::Bounds { n, k, r } => {
            let (lo, hi) = parse_n_range(n)?;
            let config = echo_config(cli, "bounds", json!({ "n": [lo, hi], "k": k, "r": r }));
            let mut records = Vec::new();
            for n in lo..=hi {
                records.push(bounds::bounds_record(n, *k, *r)?);
            }
            match cli.format {
                Format::Json => emit(cli, config, serde_json::to_value(&records)?, String::new()),
                _ => print!("{}", bounds::bounds_csv(&records)),
            }
            Ok(0)
        }
        Command::Search {
            mode,
            n,
            k,
            r,
            trials,
            max_universe,
            node_budget,
            time_budget_ms,
            out_dir,
        } => {
            let limits = SearchLimits {
                max_edge_universe: *max_universe,
                node_budget: *node_budget,
                time_budget_ms: *time_budget_ms,
            };
            let config = echo_config(
                cli,
                "search",
                json!({
                    "mode": match mode { Mode::Exhaustive => "exhaustive", Mode::Sample => "sample" },
                    "n": n, "k": k, "r": r, "trials": trials, "seed": cli.seed,
                    "limits": serde_json::to_value(&limits)?,
                    "out_dir": out_dir.as_ref().map(|p| p.display().to_string()),
                }),
            );
            let result = match mode {
                Mode::Exhaustive => exhaustive_extremal(*n, *k, *r, &limits)?,
                Mode::Sample => sample_saturations(*n, *k, *r, *trials, cli.seed)?,
            };
            if let Some(dir) = out_dir {
                let run_dir = write_search_result(&result, dir)?;
                eprintln!("run directory: {}", run_dir.display());
            }
            let mut text = format!(
                "mode {:?}\ncount {:?}\nmin {:?}\nmax {:?}\ntruncated {}",
                result.mode, result.count_maximal, result.min_size, result.max_size,
                result.truncated
            );
            if !result.samples.is_empty() {
                text.push_str(&format!("\nhistogram {:?}", result.samples));
            }
            emit(cli, config, serde_json::to_value(&result)?, text);
            Ok(0)
        }
        Command::Verify {
            claim,
            n_max,
            ks,
            rs,
            trials,
            max_universe,
            out_dir,
        } => {
            let claim: ClaimId = claim.parse()?;
            let mut grid: GridSpec = claim.default_grid();
            grid.seed = cli.seed;
            if let Some(n_max) = n_max {
                grid.n_max = *n_max;
            }
            if !ks.is_empty() {
                grid.ks = ks.clone();
            }
            if !rs.is_empty() {
                grid.rs = rs.clone();
            }
            if let Some(trials) = trials {
                grid.trials = *trials;
            }
            if let Some(mu) = max_universe {
                grid.limits.max_edge_universe = *mu;
            }
            let config = echo_config(
                cli,
                "verify",
                json!({ "claim": claim.id(), "grid": serde_json::to_value(&grid)? }),
            );
            let report = verify_claim(claim, &grid);
            if let Some(dir) = out_dir {
                let run_dir = write_claim_report(&report, dir)?;
                eprintln!("run directory: {}", run_dir.display());
            }
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(
                        &json!({ "config": config, "result": serde_json::to_value(&report)? })
                    )?
                ),
                Format::Csv => print!("{}", claim_report_csv(&report)),
                Format::Text => {
                    for cell in &report.cells {
                        println!(
                            "{} n={} k={} r={}: {}",
                            report.claim, cell.n, cell.k, cell.r, cell.status
                        );
                    }
                    let checked = report
                        .cells
                        .iter()
                        .filter(|c| !matches!(c.status, CellStatus::Skipped(_)))
                        .count();
                    println!(
                        "{}: {} cells checked, {} violations",
                        report.claim,
                        checked,
                        report.violations()
                    );
                }
            }
            let _ = claim_report_json(&report); // exercised for determinism
            Ok(if report.all_verified() { 0 } else { 1 })
        }
    }
}

fn gen(cli: &Cli, args: &GenArgs) -> vkmax::Result<u8> {
    let need = |v: Option<usize>, what: &str| {
        v.ok_or_else(|| HgError::ParameterRange(format!("gen: missing --{what}")))
    };
    let family = match args.family {
        Family::Hl => "hl",
        Family::Hu => "hu",
        Family::Complete => "complete",
        Family::Empty => "empty",
        Family::Complement => "complement",
        Family::Join => "join",
    };
    let config = echo_config(
        cli,
        "gen",
        json!({
            "family": family,
            "n": args.n, "k": args.k, "r": args.r,
            "input": args.input.as_ref().map(|p| p.display().to_string()),
            "input2": args.input2.as_ref().map(|p| p.display().to_string()),
            "output": args.output.as_ref().map(|p| p.display().to_string()),
        }),
    );
    let h = match args.family {
        Family::Hl => Hypergraph::h_l(
            need(args.n, "n")?,
            need(args.k, "k")?,
            need(args.r, "r")?,
        )?,
        Family::Hu => Hypergraph::h_u(
            need(args.n, "n")?,
            need(args.k, "k")?,
            need(args.r, "r")?,
        )?,
        Family::Complete => Hypergraph::complete(need(args.n, "n")?, need(args.r, "r")?)?,
        Family::Empty => Hypergraph::empty(need(args.n, "n")?, need(args.r, "r")?)?,
        Family::Complement => {
            let input = args.input.as_ref().ok_or_else(|| {
                HgError::ParameterRange("gen --family complement needs --input".into())
            })?;
            io::read_hg_file(input)?.complement()
        }
        Family::Join => {
            let input = args.input.as_ref().ok_or_else(|| {
                HgError::ParameterRange("gen --family join needs --input".into())
            })?;
            let input2 = args.input2.as_ref().ok_or_else(|| {
                HgError::ParameterRange("gen --family join needs --input2".into())
            })?;
            io::read_hg_file(input)?.r_join(&io::read_hg_file(input2)?)?
        }
    };
    let _ = config;
    write_or_print(cli, &h, &args.output)?;
    Ok(0)
}
