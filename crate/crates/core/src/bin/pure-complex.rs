use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use pure_complex::claims::{run_verify_paper, Fixtures, VerifyConfig, PINNED_FLIP_MODE};
use pure_complex::constructions::{complex_k, complex_s, cycle_family, dirac_complex, triple_apex};
use pure_complex::dual::{
    dual_graph, graph_connected, graph_hamiltonian, graph_two_connected, is_k_strongly_connected, DualGraph,
};
use pure_complex::flips::{enumerate_flips, square, FlipMode};
use pure_complex::format::{parse_complex, write_complex};
use pure_complex::hamiltonicity::{
    find_hamiltonian_bruteforce, find_hamiltonian_with, verify_chain, Absence, ChainPolicy, HamKind, HamOutcome,
    HamShape, SearchOptions, WindowChain,
};
use pure_complex::iso::are_isomorphic;
use pure_complex::{complement, skeleton, PureComplex};

#[derive(Parser)]
#[command(
    version,
    about = "Pure simplicial complexes: Hamiltonicity, duals, squares, isomorphism"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one of the built-in complexes
    Gen {
        #[command(subcommand)]
        which: Generator,
    },
    /// Search for (or verify) a Hamiltonian path or cycle
    Check(CheckArgs),
    /// Write the square of a complex, or list its flips
    Square {
        file: PathBuf,
        #[arg(long, default_value_t = FlipMode::default())]
        flip_mode: FlipMode,
        #[arg(long)]
        list_moves: bool,
    },
    /// Print the dual graph as an edge list, or analyse it
    Dual {
        file: PathBuf,
        /// Print connectivity and Hamiltonicity of the dual graph instead
        #[arg(long)]
        analyze: bool,
        /// Report whether the complex is k-strongly connected
        #[arg(long, value_name = "K")]
        strong: Option<usize>,
    },
    /// Write the complement in the full d-skeleton
    Complement { file: PathBuf },
    /// Find a vertex bijection carrying one complex onto another
    Iso { first: PathBuf, second: PathBuf },
    /// Run the built-in claim suite
    VerifyPaper(VerifyArgs),
}

#[derive(Subcommand)]
enum Generator {
    Dirac {
        #[arg(long)]
        d: usize,
    },
    TripleApex {
        #[arg(long)]
        d: usize,
    },
    #[command(name = "S")]
    S,
    #[command(name = "K")]
    K,
    CycleFamily {
        #[arg(long)]
        d: usize,
    },
    /// All d-faces on n vertices
    Skeleton {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(clap::Args)]
struct CheckArgs {
    file: PathBuf,
    /// Defaults to every kind
    #[arg(long)]
    kind: Option<HamKind>,
    /// Defaults to both shapes
    #[arg(long)]
    shape: Option<HamShape>,
    #[arg(long, default_value_t = ChainPolicy::default())]
    chain: ChainPolicy,
    /// Use exhaustive enumeration (n <= 8)
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Give up after this many seconds
    #[arg(long)]
    timeout: Option<u64>,
    /// Verify this certificate file instead of searching
    #[arg(long, value_name = "CERT", conflicts_with_all = ["kind", "shape", "oracle"])]
    verify: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Tsv,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Run only claims whose id matches this glob
    #[arg(long, value_name = "GLOB")]
    only: Option<glob::Pattern>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[arg(long, default_value_t = PINNED_FLIP_MODE)]
    flip_mode: FlipMode,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Print 0 for every elapsed time so reports compare byte for byte
    #[arg(long)]
    no_timing: bool,
}

type CliResult<T = ()> = Result<T, String>;

fn read_input(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn read_complex(path: &Path) -> CliResult<PureComplex> {
    parse_complex(&read_input(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(out: &mut impl Write, c: &PureComplex) -> CliResult {
    let text = write_complex(c).map_err(|e| e.to_string())?;
    out.write_all(text.as_bytes()).map_err(|e| e.to_string())
}

fn generate(which: Generator) -> CliResult<PureComplex> {
    let c = match which {
        Generator::Dirac { d } => dirac_complex(d),
        Generator::TripleApex { d } => triple_apex(d),
        Generator::S => Ok(complex_s()),
        Generator::K => Ok(complex_k()),
        Generator::CycleFamily { d } => cycle_family(d),
        Generator::Skeleton { d, n } => skeleton(d, n),
    };
    c.map_err(|e| e.to_string())
}

fn check(args: CheckArgs, out: &mut impl Write) -> CliResult<bool> {
    let c = read_complex(&args.file)?;
    if let Some(cert) = &args.verify {
        let chain: WindowChain = read_input(cert)?.parse()?;
        return match verify_chain(&c, &chain, args.chain).map_err(|e| e.to_string())? {
            Ok(()) => {
                writeln!(out, "VALID").map_err(|e| e.to_string())?;
                Ok(true)
            }
            Err(v) => {
                writeln!(out, "INVALID ({}): {v}", v.clause()).map_err(|e| e.to_string())?;
                Ok(false)
            }
        };
    }
    let kinds = args.kind.map_or(HamKind::ALL.to_vec(), |k| vec![k]);
    let shapes = args.shape.map_or(HamShape::ALL.to_vec(), |s| vec![s]);
    let options = SearchOptions {
        threads: args.threads,
        deadline: args.timeout.map(|s| Instant::now() + Duration::from_secs(s)),
    };
    let several = kinds.len() * shapes.len() > 1;
    for &kind in &kinds {
        for &shape in &shapes {
            let outcome = if args.oracle {
                find_hamiltonian_bruteforce(&c, kind, shape, args.chain)
            } else {
                find_hamiltonian_with(&c, kind, shape, args.chain, &options)
            }
            .map_err(|e| format!("{kind} {shape}: {e}"))?;
            if several {
                writeln!(out, "# {kind} {shape}").map_err(|e| e.to_string())?;
            }
            let text = match outcome {
                HamOutcome::Found(chain) => chain.to_string(),
                HamOutcome::Absent(Absence::Exhausted) => "ABSENT\n".to_string(),
                HamOutcome::Absent(Absence::Divisibility) => "ABSENT (divisibility)\n".to_string(),
            };
            out.write_all(text.as_bytes()).map_err(|e| e.to_string())?;
        }
    }
    Ok(true)
}

fn analyze(g: &DualGraph, out: &mut impl Write) -> CliResult {
    let e = |e: pure_complex::Error| e.to_string();
    let yes = |b: bool| if b { "yes" } else { "no" };
    let path = graph_hamiltonian(g, HamShape::Path).map_err(e)?;
    let cycle = if g.node_count() >= 3 {
        graph_hamiltonian(g, HamShape::Cycle).map_err(e)?
    } else {
        None
    };
    let names = |seq: &[usize]| seq.iter().map(|&u| g.name(u)).collect::<Vec<_>>().join(" ");
    let mut lines = vec![
        format!("nodes: {}", g.node_count()),
        format!("edges: {}", g.edge_count()),
        format!("connected: {}", yes(graph_connected(g).map_err(e)?)),
        format!("2-connected: {}", yes(graph_two_connected(g).map_err(e)?)),
    ];
    lines.push(match path {
        Some(p) => format!("hamiltonian path: {}", names(&p)),
        None => "hamiltonian path: none".into(),
    });
    lines.push(match cycle {
        Some(c) => format!("hamiltonian cycle: {}", names(&c)),
        None => "hamiltonian cycle: none".into(),
    });
    for line in lines {
        writeln!(out, "{line}").map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> CliResult<bool> {
    let io_err = |e: io::Error| e.to_string();
    match cli.command {
        Command::Gen { which } => emit(out, &generate(which)?)?,
        Command::Check(args) => return check(args, out),
        Command::Square {
            file,
            flip_mode,
            list_moves,
        } => {
            let c = read_complex(&file)?;
            if list_moves {
                for m in enumerate_flips(&c, flip_mode).map_err(|e| e.to_string())? {
                    writeln!(out, "{m}").map_err(io_err)?;
                }
            } else {
                emit(out, &square(&c, flip_mode).map_err(|e| e.to_string())?)?;
            }
        }
        Command::Dual {
            file,
            analyze: an,
            strong,
        } => {
            let c = read_complex(&file)?;
            let g = dual_graph(&c).map_err(|e| e.to_string())?;
            if let Some(k) = strong {
                let ok = is_k_strongly_connected(&c, k).map_err(|e| e.to_string())?;
                writeln!(out, "{k}-strongly connected: {}", if ok { "yes" } else { "no" }).map_err(io_err)?;
            } else if an {
                analyze(&g, out)?;
            } else {
                out.write_all(g.to_edge_list().as_bytes()).map_err(io_err)?;
            }
        }
        Command::Complement { file } => {
            let c = read_complex(&file)?;
            emit(out, &complement(&c).map_err(|e| e.to_string())?)?;
        }
        Command::Iso { first, second } => {
            let a = read_complex(&first)?;
            let b = read_complex(&second)?;
            match are_isomorphic(&a, &b).map_err(|e| e.to_string())? {
                Some(map) => {
                    for (u, v) in map.pairs() {
                        writeln!(out, "{u} -> {v}").map_err(io_err)?;
                    }
                }
                None => writeln!(out, "NOT ISOMORPHIC").map_err(io_err)?,
            }
        }
        Command::VerifyPaper(args) => {
            let config = VerifyConfig {
                flip_mode: args.flip_mode,
                threads: args.threads,
                only: args.only,
            };
            let report = run_verify_paper(&Fixtures::default(), &config);
            let timing = !args.no_timing;
            let text = match args.format {
                ReportFormat::Text => report.to_text(timing),
                ReportFormat::Tsv => report.to_tsv(timing),
            };
            out.write_all(text.as_bytes()).map_err(io_err)?;
            return Ok(report.all_passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
