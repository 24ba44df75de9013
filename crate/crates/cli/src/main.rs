mod render;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use toric_graph::analysis::{analyze, AnalysisOptions, NEEDS_NORMALITY, SECTIONS};
use toric_graph::{parse_graph, Error};

use crate::sweep::{Family, SweepArgs};

#[derive(Parser)]
#[command(
    name = "toric-graph",
    version,
    about = "Divisorial data of toric rings of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full analysis on an edge-list file.
    Analyze {
        path: PathBuf,
        /// Print JSON instead of `key = value` lines.
        #[arg(long)]
        json: bool,
        /// Cross-check against the brute-force oracles.
        #[arg(long)]
        verify: bool,
        /// Degree bound for canonical module generators (default n + 2).
        #[arg(long, value_name = "B")]
        omega_max_deg: Option<i64>,
        /// Skip the pseudo-Gorenstein and canonical module sections.
        #[arg(long)]
        no_canonical: bool,
        /// Print only these sections; exits with 3 if one of them needs a
        /// normal ring and the ring is not normal.
        #[arg(long = "section", value_name = "S", value_parser = clap::builder::PossibleValuesParser::new(SECTIONS))]
        sections: Vec<String>,
    },
    /// Print the edge list of a named graph.
    Family {
        name: FamilyName,
        /// `k` for cycle and path, `a_1,...,a_k` for whiskered, `m n` for
        /// complete_bipartite.
        #[arg(required = true, allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Tabulate verdicts over a range of graphs.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Cycle,
    Whiskered,
    CompleteBipartite,
    Path,
}

/// Exit status 2: bad input. Exit status 3: a requested section needs a
/// normal ring.
enum Failure {
    Invalid(String),
    NotNormal(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse { .. }
            | Error::IsolatedVertex(_)
            | Error::NoEdges
            | Error::TooManyVertices { .. }
            | Error::Precondition(_)
            | Error::NotACover(_)
            | Error::Disconnected => Failure::Invalid(e.to_string()),
            Error::NotNormal(_) => Failure::NotNormal(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            path,
            json,
            verify,
            omega_max_deg,
            no_canonical,
            sections,
        } => {
            let opts = AnalysisOptions {
                verify,
                omega_max_deg,
                no_canonical,
            };
            cmd_analyze(&path, &opts, json, &sections)
        }
        Command::Family { name, params } => cmd_family(name, &params),
        Command::Sweep(args) => sweep::run(&args).map_err(Failure::from),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NotNormal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_analyze(
    path: &PathBuf,
    opts: &AnalysisOptions,
    json: bool,
    sections: &[String],
) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let g = parse_graph(&text)?;
    let report = analyze(&g, opts)?;
    let mut value = serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?;
    if !sections.is_empty() {
        let obj = value.as_object_mut().expect("report is an object");
        obj.retain(|k, _| sections.iter().any(|s| s == k));
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("values serialize")
        );
    } else {
        print!("{}", render::flatten(&value));
    }
    let blocked: Vec<&str> = sections
        .iter()
        .map(String::as_str)
        .filter(|s| NEEDS_NORMALITY.contains(s))
        .collect();
    if !report.normality.normal && !blocked.is_empty() {
        return Err(Failure::NotNormal(format!(
            "{} requested",
            blocked.join(", ")
        )));
    }
    Ok(())
}

fn cmd_family(name: FamilyName, params: &[String]) -> Result<(), Failure> {
    let family = match name {
        FamilyName::Cycle => Family::Cycle(one_count(params)?),
        FamilyName::Path => Family::Path(one_count(params)?),
        FamilyName::Whiskered => {
            let [list] = params else {
                return Err(Failure::Invalid(
                    "expected one comma-separated list a_1,...,a_k".into(),
                ));
            };
            let a = list
                .split(',')
                .map(|s| count(s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            Family::Whiskered(a)
        }
        FamilyName::CompleteBipartite => {
            let [m, n] = params else {
                return Err(Failure::Invalid("expected two side sizes m n".into()));
            };
            Family::CompleteBipartite(count(m)?, count(n)?)
        }
    };
    print!("{}", family.build()?.to_edge_list());
    Ok(())
}

fn one_count(params: &[String]) -> Result<usize, Failure> {
    match params {
        [k] => count(k),
        _ => Err(Failure::Invalid("expected a single size parameter".into())),
    }
}

fn count(s: &str) -> Result<usize, Failure> {
    match s.parse::<i64>() {
        Ok(x) if x < 0 => Err(Failure::Invalid(format!("negative parameter {x}"))),
        Ok(x) => Ok(x as usize),
        Err(_) => Err(Failure::Invalid(format!("not an integer: {s:?}"))),
    }
}
