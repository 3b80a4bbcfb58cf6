use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sc_hadwiger::bounds::conjecture_report;
use sc_hadwiger::catalog::{
    driver_orders, emit_catalog, search_sc_with_h, CatalogBuilder, CatalogOptions, SearchMode,
};
use sc_hadwiger::constructions::{
    default_x, extend, extend_with, five_cycle, vertex_added, Construction,
};
use sc_hadwiger::graph6::encode_graph6_string;
use sc_hadwiger::io::parse_graph;
use sc_hadwiger::minors::{
    check_witness, greedy_witness, hadwiger, trivial_upper_bound, Budget, HadwigerResult,
    MinorWitness,
};
use sc_hadwiger::sc::{enumerate_sc, find_antimorphism};
use sc_hadwiger::Graph;

/// Self-complementary graphs and their Hadwiger numbers.
#[derive(Parser)]
#[command(name = "hf", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct BudgetArgs {
    /// Wall-clock limit per decision, in seconds.
    #[arg(long, default_value_t = 60)]
    budget_secs: u64,
    /// Search-node limit per decision.
    #[arg(long, default_value_t = 100_000_000)]
    max_nodes: u64,
}

impl BudgetArgs {
    fn budget(self) -> Budget {
        Budget::nodes(self.max_nodes).with_time(Duration::from_secs(self.budget_secs))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    FiveCycle,
    VertexAdded,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find an antimorphism; exit 1 if the graph is not self-complementary.
    VerifySc { file: PathBuf },
    /// Write every SC graph of order N (up to isomorphism) with its certificate.
    EnumerateSc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
        /// Permit n = 12 and 13.
        #[arg(long)]
        allow_large: bool,
    },
    /// Build a block composition.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        /// Self-complementary X (graph6 or JSON); generated from the seed otherwise.
        #[arg(long)]
        x: Option<PathBuf>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, env = "HF_SEED", default_value_t = 0)]
        seed: u64,
        /// Write PREFIX.g6 and PREFIX.json instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply the order-raising extension T times.
    Extend {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hadwiger number with a witness.
    Hadwiger {
        file: PathBuf,
        /// Exact search (default).
        #[arg(long, conflicts_with = "bounds")]
        exact: bool,
        /// Greedy witness and counting bound only, no search.
        #[arg(long)]
        bounds: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Witness utilities.
    Witness {
        #[command(subcommand)]
        cmd: WitnessCmd,
    },
    /// Bounds, chromatic number and flags for an SC graph.
    Report {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Certified catalog of every attainable h for the given orders.
    Theorem1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, env = "HF_SEED", default_value_t = 0)]
        seed: u64,
        /// Include n = 12 mod 20 beyond 12.
        #[arg(long)]
        all_classes: bool,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search for an SC graph of order N with Hadwiger number exactly H.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target_h: usize,
        #[arg(long)]
        exhaustive: bool,
        #[arg(long, env = "HF_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_candidates: u64,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
enum WitnessCmd {
    /// Validate a witness JSON against a graph; exit 1 if invalid.
    Check { graph: PathBuf, witness: PathBuf },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_graph(&text)?)
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn sidecar(c: &Construction) -> Value {
    json!({
        "graph6": encode_graph6_string(&c.graph),
        "blocks": c.blocks,
        "sigma": c.sigma,
    })
}

fn write_construction(c: &Construction, out: Option<&Path>) -> Result<()> {
    let g6 = encode_graph6_string(&c.graph);
    let side = serde_json::to_string_pretty(&sidecar(c))?;
    match out {
        Some(prefix) => {
            fs::write(prefix.with_extension("g6"), format!("{g6}\n"))?;
            fs::write(prefix.with_extension("json"), format!("{side}\n"))?;
        }
        None => {
            println!("{g6}");
            println!("{side}");
        }
    }
    Ok(())
}

fn hadwiger_json(r: &HadwigerResult, millis: u128) -> Value {
    match r {
        HadwigerResult::Exact { h, witness, nodes } => {
            json!({ "h": h, "witness": witness, "nodes": nodes, "millis": millis })
        }
        HadwigerResult::Bounds {
            lo,
            hi,
            witness,
            nodes,
        } => {
            json!({ "lo": lo, "hi": hi, "witness": witness, "nodes": nodes, "millis": millis })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.cmd {
        Cmd::VerifySc { file } => {
            let g = read_graph(&file)?;
            match find_antimorphism(&g) {
                Some(sigma) => {
                    print_json(&json!({ "sigma": sigma }));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    print_json(&json!({ "sigma": null }));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::EnumerateSc {
            n,
            out,
            allow_large,
        } => {
            let all = enumerate_sc(n, allow_large)?;
            fs::create_dir_all(&out)?;
            for (i, (g, sigma)) in all.iter().enumerate() {
                let stem = out.join(format!("sc{n}-{i:04}"));
                let g6 = encode_graph6_string(g);
                fs::write(stem.with_extension("g6"), format!("{g6}\n"))?;
                let cert = json!({ "graph6": g6, "sigma": sigma });
                fs::write(
                    stem.with_extension("json"),
                    format!("{}\n", serde_json::to_string_pretty(&cert)?),
                )?;
            }
            println!("{} graphs", all.len());
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Construct {
            family,
            r,
            q,
            x,
            s,
            seed,
            out,
        } => {
            let c = match family {
                Family::FiveCycle => {
                    let (Some(r), Some(q)) = (r, q) else {
                        bail!("five-cycle needs --r and --q")
                    };
                    let xg = match &x {
                        Some(path) => read_graph(path)?,
                        None => default_x(r, seed)?.0,
                    };
                    if xg.n() != r {
                        bail!("X has {} vertices, --r is {r}", xg.n());
                    }
                    five_cycle(&xg, q)?
                }
                Family::VertexAdded => {
                    let Some(s) = s else {
                        bail!("vertex-added needs --s")
                    };
                    let xg = match &x {
                        Some(path) => read_graph(path)?,
                        None => default_x(4 * s + 4, seed)?.0,
                    };
                    vertex_added(s, &xg)?
                }
            };
            write_construction(&c, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Extend { input, times, out } => {
            if times == 0 {
                bail!("--times must be at least 1");
            }
            let g = read_graph(&input)?;
            let mut c = extend(&g)?;
            for _ in 1..times {
                c = extend_with(&c.graph, &c.sigma)?;
            }
            write_construction(&c, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hadwiger {
            file,
            exact: _,
            bounds,
            budget,
        } => {
            let g = read_graph(&file)?;
            let started = Instant::now();
            if bounds {
                let w = greedy_witness(&g);
                let r = HadwigerResult::Bounds {
                    lo: w.size(),
                    hi: trivial_upper_bound(&g),
                    witness: w,
                    nodes: 0,
                };
                print_json(&hadwiger_json(&r, started.elapsed().as_millis()));
                return Ok(ExitCode::SUCCESS);
            }
            let r = hadwiger(&g, &budget.budget());
            print_json(&hadwiger_json(&r, started.elapsed().as_millis()));
            Ok(if r.exact().is_some() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Cmd::Witness {
            cmd: WitnessCmd::Check { graph, witness },
        } => {
            let g = read_graph(&graph)?;
            let text = fs::read_to_string(&witness)
                .with_context(|| format!("reading {}", witness.display()))?;
            let w: MinorWitness = serde_json::from_str(&text).context("parsing witness")?;
            let valid = check_witness(&g, &w)?;
            print_json(&json!({ "valid": valid, "h": w.size() }));
            Ok(if valid {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Cmd::Report { file, budget } => {
            let g = read_graph(&file)?;
            let report = conjecture_report(&g, &budget.budget())?;
            print_json(&serde_json::to_value(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Theorem1 {
            n,
            max_n,
            seed,
            all_classes,
            out,
            budget,
        } => {
            let orders = match max_n {
                Some(m) => driver_orders(n, m, all_classes),
                None => vec![n],
            };
            if orders.is_empty() {
                bail!("no admissible orders in range");
            }
            let opts = CatalogOptions {
                seed,
                budget: budget.budget(),
                ..CatalogOptions::default()
            };
            let mut builder = CatalogBuilder::new(opts);
            let mut reports = Vec::new();
            for &order in &orders {
                let r = builder.catalog(order)?.clone();
                for e in &r.entries {
                    eprintln!("{}: {} [{}]", e.id(), e.provenance, e.upper_proof);
                }
                for h in &r.missing {
                    eprintln!("n{order}-h{h}: missing");
                }
                reports.push(r);
            }
            emit_catalog(&reports, &out)?;
            let complete = reports.iter().all(|r| r.is_complete());
            Ok(if complete {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Cmd::Search {
            n,
            target_h,
            exhaustive,
            seed,
            max_candidates,
            budget,
        } => {
            let mode = if exhaustive {
                SearchMode::Exhaustive
            } else {
                SearchMode::Seeded
            };
            let opts = CatalogOptions {
                seed,
                budget: budget.budget(),
                max_candidates,
            };
            match search_sc_with_h(n, target_h, mode, seed, &opts)? {
                Some(e) => {
                    e.certify()?;
                    print_json(&serde_json::to_value(&e)?);
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    print_json(&json!({ "found": false }));
                    Ok(ExitCode::from(2))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
