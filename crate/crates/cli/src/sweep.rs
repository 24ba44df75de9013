use std::io;
use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use toric_graph::divisor::gorenstein_of_ring;
use toric_graph::families::{
    complete_bipartite, connected_graphs, cycle, path, whiskered_cycle, whiskered_types,
};
use toric_graph::graph::{dominated_odd_cycle_condition, is_unmixed};
use toric_graph::omega::is_pseudo_gorenstein;
use toric_graph::primes::{predicted_prime_set, primes_of_ring, PrimeKind};
use toric_graph::{Error, Graph, Result, ToricRing};

#[derive(Args)]
pub struct SweepArgs {
    family: SweepFamily,
    /// Inclusive size range `a..b`, or a single size. For whiskered cycles
    /// this is the cycle length, for connected graphs the vertex count, for
    /// complete_bipartite the side sizes `m <= n`.
    #[arg(value_parser = parse_range)]
    range: RangeInclusive<usize>,
    /// Whisker budget for the whiskered family.
    #[arg(long, default_value_t = 3)]
    max_total: usize,
    /// Restrict the connected family to bipartite graphs.
    #[arg(long)]
    bipartite_only: bool,
    /// Keep only odd sizes.
    #[arg(long)]
    odd: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum SweepFamily {
    Cycle,
    Path,
    Whiskered,
    CompleteBipartite,
    Connected,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("not a size: {t:?}"))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = parse(s)?;
            Ok(a..=a)
        }
    }
}

/// A named family member.
pub enum Family {
    Cycle(usize),
    Path(usize),
    Whiskered(Vec<usize>),
    CompleteBipartite(usize, usize),
    Given(Graph),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Cycle(k) => cycle(*k),
            Family::Path(k) => path(*k),
            Family::Whiskered(a) => whiskered_cycle(a),
            Family::CompleteBipartite(m, n) => complete_bipartite(*m, *n),
            Family::Given(g) => Ok(g.clone()),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Family::Cycle(_) => "cycle",
            Family::Path(_) => "path",
            Family::Whiskered(_) => "whiskered",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::Given(_) => "connected",
        }
    }

    fn params(&self) -> String {
        match self {
            Family::Cycle(k) | Family::Path(k) => k.to_string(),
            Family::Whiskered(a) => a.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
            Family::CompleteBipartite(m, n) => format!("{m},{n}"),
            Family::Given(g) => g
                .edges()
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

/// One sweep row. Columns that need a normal ring are empty otherwise, and
/// `error` carries any failure of the pipeline on this instance.
#[derive(Serialize)]
struct Row {
    family: &'static str,
    params: String,
    n: usize,
    edges: usize,
    bipartite: bool,
    normal: bool,
    unmixed: bool,
    dominated_odd_cycle_condition: bool,
    primes: Option<usize>,
    cover_primes: Option<usize>,
    variable_primes: Option<usize>,
    zero_primes: Option<usize>,
    exceptional_primes: Option<usize>,
    prime_set_equals_prediction: Option<bool>,
    gorenstein: Option<bool>,
    a: Option<i64>,
    pseudo_gorenstein: Option<bool>,
    initial_degree: Option<i64>,
    initial_count: Option<usize>,
    error: Option<String>,
}

fn instances(args: &SweepArgs) -> Vec<Family> {
    let sizes = args.range.clone().filter(|k| !args.odd || k % 2 == 1);
    match args.family {
        SweepFamily::Cycle => sizes.map(Family::Cycle).collect(),
        SweepFamily::Path => sizes.map(Family::Path).collect(),
        SweepFamily::Whiskered => sizes
            .flat_map(|k| whiskered_types(k, args.max_total))
            .map(Family::Whiskered)
            .collect(),
        SweepFamily::CompleteBipartite => sizes
            .clone()
            .flat_map(|m| {
                args.range
                    .clone()
                    .filter(move |&n| n >= m)
                    .map(move |n| Family::CompleteBipartite(m, n))
            })
            .collect(),
        SweepFamily::Connected => sizes
            .flat_map(|n| connected_graphs(n, args.bipartite_only))
            .map(Family::Given)
            .collect(),
    }
}

fn row(family: &Family) -> Result<Row> {
    let g = family.build()?;
    let ring = ToricRing::new(&g)?;
    let mut row = Row {
        family: family.name(),
        params: family.params(),
        n: g.n(),
        edges: g.num_edges(),
        bipartite: g.is_bipartite(),
        normal: ring.normality().normal,
        unmixed: is_unmixed(&g).unmixed,
        dominated_odd_cycle_condition: dominated_odd_cycle_condition(&g),
        primes: None,
        cover_primes: None,
        variable_primes: None,
        zero_primes: None,
        exceptional_primes: None,
        prime_set_equals_prediction: None,
        gorenstein: None,
        a: None,
        pseudo_gorenstein: None,
        initial_degree: None,
        initial_count: None,
        error: None,
    };
    if row.normal {
        if let Err(e) = fill_normal(&ring, &mut row) {
            row.error = Some(e.to_string());
        }
    }
    Ok(row)
}

fn fill_normal(ring: &ToricRing, row: &mut Row) -> Result<()> {
    let primes = primes_of_ring(ring)?;
    let count = |f: fn(&PrimeKind) -> bool| Some(primes.iter().filter(|p| f(&p.kind)).count());
    row.primes = Some(primes.len());
    row.cover_primes = count(|k| matches!(k, PrimeKind::Cover(_)));
    row.variable_primes = count(|k| matches!(k, PrimeKind::Variable(_)));
    row.zero_primes = count(|k| matches!(k, PrimeKind::Zero));
    row.exceptional_primes = count(|k| matches!(k, PrimeKind::Exceptional));
    if ring.graph().is_connected() {
        row.prime_set_equals_prediction = Some(predicted_prime_set(ring.graph())?.equals(&primes));
    }
    let verdict = gorenstein_of_ring(ring, &primes)?;
    row.gorenstein = Some(verdict.gorenstein);
    row.a = verdict.a;
    let pg = is_pseudo_gorenstein(ring, None)?;
    row.pseudo_gorenstein = Some(pg.pseudo_gorenstein);
    row.initial_degree = Some(pg.initial_degree);
    row.initial_count = Some(pg.count);
    Ok(())
}

pub fn run(args: &SweepArgs) -> Result<()> {
    let rows = instances(args)
        .par_iter()
        .map(row)
        .collect::<Result<Vec<Row>>>()?;
    let io_err = |e: String| Error::Invariant(format!("writing output: {e}"));
    match args.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(io::stdout().lock());
            for r in &rows {
                w.serialize(r).map_err(|e| io_err(e.to_string()))?;
            }
            w.flush().map_err(|e| io_err(e.to_string()))?;
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).map_err(|e| io_err(e.to_string()))?
            );
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("3..11").unwrap(), 3..=11);
        assert_eq!(parse_range("3..=5").unwrap(), 3..=5);
        assert_eq!(parse_range("4").unwrap(), 4..=4);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn cycle_rows() {
        let r = row(&Family::Cycle(5)).unwrap();
        assert_eq!(
            (r.gorenstein, r.a, r.pseudo_gorenstein),
            (Some(true), Some(3), Some(true))
        );
        assert_eq!(r.prime_set_equals_prediction, Some(true));
    }
}
