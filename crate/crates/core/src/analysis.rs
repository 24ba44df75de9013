//! The full pipeline for one graph, as a serializable report.
//!
//! Sections that need a normal `R_G` are `None` on non-normal input; the
//! reason is listed under `normality.omitted_sections`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::divisor::{
    canonical_class, class_group, gorenstein_of_ring, t_forms, GorensteinVerdict,
};
use crate::error::{Error, Result};
use crate::graph::{
    connected_components, dominated_odd_cycle_condition, is_unicyclic, recognize_whiskered_cycle,
    Graph,
};
use crate::normality::{NormalityReason, NormalityVerdict};
use crate::omega::{is_pseudo_gorenstein, omega_generators, OmegaGenerators, PseudoGorenstein};
use crate::oracle::{
    check_facets, check_minimal_covers, check_normality, check_omega, check_primes, OracleReport,
};
use crate::primes::{predicted_prime_set, primes_of_ring, PredictionBasis, PrimeKind};
use crate::ring::ToricRing;

#[derive(Clone, Debug, Default)]
pub struct AnalysisOptions {
    pub verify: bool,
    /// Degree bound for ω generators; `n + 2` when unset.
    pub omega_max_deg: Option<i64>,
    /// Skip the pseudo-Gorenstein and ω sections.
    pub no_canonical: bool,
}

/// Report sections, in output order.
pub const SECTIONS: [&str; 9] = [
    "graph",
    "normality",
    "primes",
    "class_group",
    "canonical_class",
    "gorenstein",
    "pseudo_gorenstein",
    "omega_generators",
    "verification",
];

/// Sections that are only defined for normal `R_G`.
pub const NEEDS_NORMALITY: [&str; 6] = [
    "primes",
    "class_group",
    "canonical_class",
    "gorenstein",
    "pseudo_gorenstein",
    "omega_generators",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub normality: NormalitySection,
    pub primes: Option<PrimeSection>,
    pub class_group: Option<ClassGroupSection>,
    pub canonical_class: Option<CanonicalSection>,
    pub gorenstein: Option<GorensteinVerdict>,
    pub pseudo_gorenstein: Option<PseudoGorenstein>,
    pub omega_generators: Option<OmegaGenerators>,
    pub verification: Option<Vec<OracleReport>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub components: usize,
    pub bipartite: bool,
    pub unicyclic: bool,
    pub whiskered: Option<WhiskeredSummary>,
    pub dominated_odd_cycle_condition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiskeredSummary {
    pub k: usize,
    pub a: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Omitted {
    pub field: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalitySection {
    pub normal: bool,
    pub reason: NormalityReason,
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
    pub omitted_sections: Vec<Omitted>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeEntry {
    #[serde(flatten)]
    pub kind: PrimeKind,
    pub form: Vec<i64>,
    pub contains_t: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictionSummary {
    pub basis: PredictionBasis,
    pub exact: bool,
    pub equals_prediction: bool,
    pub includes_prediction: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSection {
    pub count: usize,
    pub count_by_kind: BTreeMap<&'static str, usize>,
    pub list: Vec<PrimeEntry>,
    /// Only for connected graphs.
    pub prediction: Option<PredictionSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGroupSection {
    pub r: usize,
    pub relation: Vec<i64>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalSection {
    pub kappa: Vec<i64>,
    pub is_zero: bool,
}

pub fn analyze(g: &Graph, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let ring = ToricRing::new(g)?;
    let NormalityVerdict {
        normal,
        reason,
        witness,
    } = ring.normality().clone();
    let mut omitted = Vec::new();
    let mut report = AnalysisReport {
        graph: summarize(g),
        normality: NormalitySection {
            normal,
            reason,
            witness,
            omitted_sections: Vec::new(),
        },
        primes: None,
        class_group: None,
        canonical_class: None,
        gorenstein: None,
        pseudo_gorenstein: None,
        omega_generators: None,
        verification: None,
    };
    if normal {
        fill_normal_sections(&ring, opts, &mut report, &mut omitted)?;
    } else {
        for field in NEEDS_NORMALITY {
            omitted.push(Omitted {
                field: field.into(),
                reason: "R_G is not normal".into(),
            });
        }
    }
    if opts.verify {
        report.verification = Some(verify(&ring)?);
    } else {
        omitted.push(Omitted {
            field: "verification".into(),
            reason: "not requested".into(),
        });
    }
    report.normality.omitted_sections = omitted;
    Ok(report)
}

fn summarize(g: &Graph) -> GraphSummary {
    GraphSummary {
        n: g.n(),
        edges: g.num_edges(),
        components: connected_components(g).len(),
        bipartite: g.is_bipartite(),
        unicyclic: is_unicyclic(g),
        whiskered: recognize_whiskered_cycle(g).map(|s| WhiskeredSummary { k: s.k, a: s.a }),
        dominated_odd_cycle_condition: dominated_odd_cycle_condition(g),
    }
}

fn fill_normal_sections(
    ring: &ToricRing,
    opts: &AnalysisOptions,
    report: &mut AnalysisReport,
    omitted: &mut Vec<Omitted>,
) -> Result<()> {
    let g = ring.graph();
    let primes = primes_of_ring(ring)?;
    let mut count_by_kind = BTreeMap::new();
    for p in &primes {
        *count_by_kind.entry(p.kind.name()).or_insert(0) += 1;
    }
    let prediction = if g.is_connected() {
        let pred = predicted_prime_set(g)?;
        Some(PredictionSummary {
            basis: pred.basis,
            exact: pred.is_exact(),
            equals_prediction: pred.equals(&primes),
            includes_prediction: pred.included_in(&primes),
        })
    } else {
        None
    };
    report.primes = Some(PrimeSection {
        count: primes.len(),
        count_by_kind,
        list: primes
            .iter()
            .map(|p| PrimeEntry {
                kind: p.kind.clone(),
                form: p.prime.form.as_i64().to_vec(),
                contains_t: p.prime.contains_t,
            })
            .collect(),
        prediction,
    });

    let forms = t_forms(&primes);
    let pres = class_group(&forms)?;
    let kappa = canonical_class(&pres, &forms)?;
    report.canonical_class = Some(CanonicalSection {
        is_zero: pres.is_zero(&kappa),
        kappa: kappa.coeffs,
    });
    report.class_group = Some(ClassGroupSection {
        r: pres.r,
        relation: pres.relation,
        rank: pres.rank,
    });
    report.gorenstein = Some(gorenstein_of_ring(ring, &primes)?);

    if opts.no_canonical {
        for field in ["pseudo_gorenstein", "omega_generators"] {
            omitted.push(Omitted {
                field: field.into(),
                reason: "skipped by --no-canonical".into(),
            });
        }
    } else {
        let b_max = opts.omega_max_deg.unwrap_or(g.n() as i64 + 2);
        if b_max < 0 {
            return Err(Error::Precondition("negative omega degree bound".into()));
        }
        report.pseudo_gorenstein = Some(is_pseudo_gorenstein(ring, None)?);
        report.omega_generators = Some(omega_generators(ring, b_max)?);
    }
    Ok(())
}

/// Oracle cross-checks sized for small graphs.
fn verify(ring: &ToricRing) -> Result<Vec<OracleReport>> {
    let g = ring.graph();
    let mut out = vec![
        check_normality(g, g.n())?,
        check_facets(g)?,
        check_minimal_covers(g),
    ];
    if ring.normality().normal {
        out.push(check_primes(ring, 3)?);
        out.push(check_omega(ring, g.n().min(5))?);
    }
    Ok(out)
}
