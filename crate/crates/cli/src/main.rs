use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use wlplanar::catalog::{self, generate_named};
use wlplanar::decompose::{self, DecompositionContext};
use wlplanar::experiments::{run_experiment, ExperimentConfig, EXPERIMENTS};
use wlplanar::graph::{connectivity, min_separators, parse_graph, write_graph};
use wlplanar::tutte::{link_check, to_svg, TutteParams};
use wlplanar::wl::{distinguishes, individualize, is_discrete, stable_coloring};
use wlplanar::{ColoredGraph, Vertex};

#[derive(Parser)]
#[command(
    name = "wlplanar",
    version,
    about = "Weisfeiler-Leman experiments on small planar graphs"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the stable k-WL coloring of a graph file as JSON.
    Wl {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Vertices to individualize, in order, e.g. `0,3`.
        #[arg(long, value_delimiter = ',')]
        ind: Vec<Vertex>,
    },
    /// Exit 0 if k-WL distinguishes the graphs, 1 if not, 2 on error.
    Distinguish {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Run a named experiment and write its JSON report.
    Experiment {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest order of the exhaustive corpus part.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 100)]
        relabelings: usize,
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        /// Record wall-times in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Generated graphs and the corpus.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Barycentric iteration pinned at three vertices of a face.
    Tutte {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        face: Vec<Vertex>,
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
        #[arg(long, default_value_t = 100_000)]
        max_iter: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Minimum separators, P, P0 and the reduced graph.
    Decompose { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Write a generated graph, e.g. `cube`, `bipyramid(7)`, `prism(5)`.
    Dump {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every corpus graph plus `manifest.json` into a directory.
    Corpus {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// List experiment names.
    Experiments,
}

fn read_graph(path: &Path) -> Result<ColoredGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn file_name(entry: &str) -> String {
    let mut s: String = entry
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' {
                c
            } else {
                '-'
            }
        })
        .collect();
    while s.contains("--") {
        s = s.replace("--", "-");
    }
    format!("{}.g", s.trim_matches('-'))
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring worker threads")?;
    }
    match cli.command {
        Command::Wl { file, k, ind } => {
            let g = individualize(&read_graph(&file)?, &ind)?;
            let chi = stable_coloring(&g, k)?;
            println!("{}", chi.to_json());
            if k == 1 {
                let verdict = if is_discrete(&chi)? {
                    "discrete"
                } else {
                    "not discrete"
                };
                eprintln!(
                    "{verdict}: {} classes on {} vertices",
                    chi.class_count(),
                    g.n()
                );
            } else {
                eprintln!("{} classes", chi.class_count());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Distinguish { a, b, k } => {
            let (g, h) = (read_graph(&a)?, read_graph(&b)?);
            if distinguishes(&g, &h, k)? {
                println!("distinguished");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not distinguished");
                Ok(ExitCode::from(1))
            }
        }
        Command::Experiment {
            name,
            out,
            seed,
            max_n,
            relabelings,
            eps,
            max_iter,
            timings,
        } => {
            let cfg = ExperimentConfig {
                max_n,
                seed,
                relabelings,
                timings,
                tutte: TutteParams {
                    eps,
                    max_iter,
                    ..TutteParams::default()
                },
            };
            let report = run_experiment(&name, &cfg)?;
            emit(out.as_deref(), &report.to_json())?;
            let failed = report.failed_cases().count();
            eprintln!(
                "{}: {} ({} cases, {failed} failed)",
                report.experiment,
                if report.passed { "PASS" } else { "FAIL" },
                report.cases.len()
            );
            for req in report.failed_requirements() {
                eprintln!("  requirement failed: {req}");
            }
            Ok(if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Catalog { command } => match command {
            CatalogCommand::Dump { name, out } => {
                let g = generate_named(&name)?;
                emit(out.as_deref(), &write_graph(&g))?;
                Ok(ExitCode::SUCCESS)
            }
            CatalogCommand::Corpus { dir, max_n } => {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                let entries = catalog::corpus(max_n)?;
                let mut manifest = Vec::with_capacity(entries.len());
                for e in &entries {
                    let name = file_name(&e.name);
                    fs::write(dir.join(&name), write_graph(&e.graph))?;
                    manifest.push(json!({
                        "path": name,
                        "name": e.name,
                        "family": e.family,
                        "planar": e.planar,
                        "canonical_id": e.canonical_id(),
                    }));
                }
                let text = serde_json::to_string_pretty(&manifest)? + "\n";
                fs::write(dir.join("manifest.json"), text)?;
                eprintln!("wrote {} graphs to {}", entries.len(), dir.display());
                Ok(ExitCode::SUCCESS)
            }
            CatalogCommand::Experiments => {
                for name in EXPERIMENTS {
                    println!("{name}");
                }
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Tutte {
            file,
            face,
            eps,
            max_iter,
            svg,
        } => {
            let g = read_graph(&file)?;
            let Ok(face3) = <[Vertex; 3]>::try_from(face.as_slice()) else {
                bail!("--face takes exactly three vertices");
            };
            let params = TutteParams {
                eps,
                max_iter,
                ..TutteParams::default()
            };
            let rep = link_check(&g, face3, &params)?;
            let s = &rep.embedding;
            let report = json!({
                "pins": s.fixed,
                "iterations": s.iteration,
                "last_movement": s.last_movement,
                "converged": s.converged,
                "injective": s.injective,
                "discrete": rep.discrete,
                "link_holds": rep.link_holds,
                "positions": s.positions,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
            if let Some(path) = svg {
                fs::write(&path, to_svg(&g, s, &rep.coloring))
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { file } => {
            let g = read_graph(&file)?;
            let seps = min_separators(&g)?;
            let p = decompose::p_set(&g)?;
            let p0 = decompose::p0_set(&g)?;
            let reduced = match DecompositionContext::default().g_bot(&g) {
                Ok(r) => json!({"vertices": r.vertices, "graph": write_graph(&r.base)}),
                Err(e) => json!({"unavailable": e.to_string()}),
            };
            let report = json!({
                "connectivity": connectivity(&g),
                "min_separators": seps,
                "p": p,
                "p0": p0,
                "reduced": reduced,
            });
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
