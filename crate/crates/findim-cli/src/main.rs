//! `findim`: decide finite dimensionality of the Lie algebra generated by a
//! finite set of homogeneous derivations of a polynomial ring, and compute
//! explicit bases, structure constants and series data when it is finite.

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use findim_core::closure::close;
use findim_core::criteria::{decide, Verdict};
use render::Analysis;

const DEFAULT_MAX_WEIGHT: u32 = 100;
const DEFAULT_MAX_ELEMENTS: usize = 10_000;

/// Exit codes: 0 = verdict produced, 1 = invalid input or usage,
/// 2 = honest indeterminacy (undecided or cap exceeded).
#[derive(Parser)]
#[command(
    name = "findim",
    about = "Finite dimensionality of Lie algebras of homogeneous polynomial vector fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify each generator: class, degree, weight
    Classify {
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
        /// Input document (JSON)
        input: PathBuf,
    },
    /// Build the generator graph of the detected type
    Graph {
        /// Emit DOT instead of a text summary
        #[arg(long)]
        dot: bool,
        input: PathBuf,
    },
    /// Decide finite dimensionality and print a checkable witness
    Decide {
        #[arg(long)]
        json: bool,
        input: PathBuf,
    },
    /// Saturate the generators under the bracket, with caps
    Closure {
        #[arg(long)]
        json: bool,
        /// Stop when a bracket exceeds this absolute weight
        #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
        max_weight: u32,
        /// Stop when the basis exceeds this many elements
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
        input: PathBuf,
    },
    /// Classification, graph, decision and closure in one report
    Report {
        #[arg(long)]
        json: bool,
        /// Include DOT output in the graph section
        #[arg(long)]
        dot: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_WEIGHT)]
        max_weight: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &PathBuf) -> Result<(usize, Analysis), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let (doc, gens) = input::parse(&text).map_err(|e| e.to_string())?;
    Ok((doc.n, Analysis::new(gens)))
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Classify { json, input } => {
            let (n, analysis) = load(&input)?;
            if json {
                print_json(&render::classify_json(&analysis, n));
            } else {
                print!("{}", render::classify_text(&analysis, n));
            }
            Ok(0)
        }
        Command::Graph { dot, input } => {
            let (_, analysis) = load(&input)?;
            match analysis.generator_graph() {
                Some((kind, graph)) => {
                    if dot {
                        print!("{}", graph.to_dot());
                    } else {
                        print!("{}", render::graph_text(kind, &graph));
                    }
                    Ok(0)
                }
                None => {
                    println!(
                        "no generator graph: the set is mixed or contains laurent-only elements"
                    );
                    Ok(2)
                }
            }
        }
        Command::Decide { json, input } => {
            let (_, analysis) = load(&input)?;
            let report = decide(&analysis.gens);
            if json {
                print_json(&render::decide_json(&report));
            } else {
                print!("{}", render::decide_text(&analysis, &report));
            }
            Ok(verdict_code(report.verdict))
        }
        Command::Closure {
            json,
            max_weight,
            max_elements,
            input,
        } => {
            let (_, analysis) = load(&input)?;
            let result =
                close(&analysis.gens, max_weight, max_elements).map_err(|e| e.to_string())?;
            if json {
                print_json(&render::closure_json(
                    &analysis,
                    &result,
                    max_weight,
                    max_elements,
                ));
            } else {
                print!(
                    "{}",
                    render::closure_text(&analysis, &result, max_weight, max_elements)
                );
            }
            Ok(if result.is_closed() { 0 } else { 2 })
        }
        Command::Report {
            json,
            dot,
            max_weight,
            max_elements,
            input,
        } => {
            let (n, analysis) = load(&input)?;
            let report = decide(&analysis.gens);
            let result =
                close(&analysis.gens, max_weight, max_elements).map_err(|e| e.to_string())?;
            let graph = analysis.generator_graph();
            let code = verdict_code(report.verdict).max(if result.is_closed() { 0 } else { 2 });

            if json {
                let graph_value = match &graph {
                    Some((kind, g)) => render::graph_json(kind, g),
                    None => serde_json::Value::Null,
                };
                print_json(&json!({
                    "classification": render::classify_json(&analysis, n),
                    "graph": graph_value,
                    "decision": render::decide_json(&report),
                    "closure": render::closure_json(&analysis, &result, max_weight, max_elements),
                }));
            } else {
                println!("== classification ==");
                print!("{}", render::classify_text(&analysis, n));
                println!();
                println!("== generator graph ==");
                match &graph {
                    Some((kind, g)) => {
                        print!("{}", render::graph_text(kind, g));
                        if dot {
                            print!("{}", g.to_dot());
                        }
                    }
                    None => println!("(no graph: empty, mixed, or laurent-only set)"),
                }
                println!();
                println!("== decision ==");
                print!("{}", render::decide_text(&analysis, &report));
                println!();
                println!("== closure ==");
                print!(
                    "{}",
                    render::closure_text(&analysis, &result, max_weight, max_elements)
                );
            }
            Ok(code)
        }
    }
}

fn verdict_code(verdict: Verdict) -> u8 {
    match verdict {
        Verdict::Undecided => 2,
        _ => 0,
    }
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable value")
    );
}
