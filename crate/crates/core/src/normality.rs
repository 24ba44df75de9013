//! Normality of `R_G`: the combinatorial criterion and a bounded
//! saturation check.
//!
//! `R_G` is normal exactly when at most one connected component of `G` is
//! non-bipartite and that component satisfies the odd cycle condition.

use std::collections::HashSet;

use serde::Serialize;

use crate::cone::{graph_facets, semigroup_generators, FaceLabel, LatticePoint, SupportForm};
use crate::error::Result;
use crate::graph::{connected_components, induced_odd_cycles, odd_cycle_condition_failure, Graph};
use crate::ring::lattice_points_at_degree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalityReason {
    BipartiteAll,
    #[serde(rename = "single-odd-component-OCC")]
    SingleOddComponentOcc,
    MultipleOddComponents,
    #[serde(rename = "OCC-failure")]
    OccFailure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalityVerdict {
    pub normal: bool,
    pub reason: NormalityReason,
    /// Two vertex-disjoint induced odd cycles with no edge between them.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

pub fn is_normal(g: &Graph) -> NormalityVerdict {
    let mut odd: Vec<Vec<usize>> = Vec::new();
    let mut odd_components = 0;
    for comp in connected_components(g) {
        let cycles: Vec<Vec<usize>> = induced_odd_cycles(g)
            .into_iter()
            .filter(|c| comp.contains(&c[0]))
            .collect();
        if let Some(c) = cycles.into_iter().next() {
            odd_components += 1;
            odd.push(c);
        }
    }
    match odd_components {
        0 => NormalityVerdict {
            normal: true,
            reason: NormalityReason::BipartiteAll,
            witness: None,
        },
        1 => match odd_cycle_condition_failure(g) {
            None => NormalityVerdict {
                normal: true,
                reason: NormalityReason::SingleOddComponentOcc,
                witness: None,
            },
            Some(pair) => NormalityVerdict {
                normal: false,
                reason: NormalityReason::OccFailure,
                witness: Some(pair),
            },
        },
        _ => NormalityVerdict {
            normal: false,
            reason: NormalityReason::MultipleOddComponents,
            witness: Some((odd[0].clone(), odd[1].clone())),
        },
    }
}

/// The form `f_0 = -sum x_i + 2 t` takes the value 2 on `t`, 1 on every
/// `x_i t` and 0 on every `x_i x_j t`, so it supports the cone and cuts out
/// the prime `(t, x_1 t, ..., x_n t)`. Holds for every graph.
pub fn p0_supporting_check(g: &Graph) -> bool {
    let mut c = vec![-1i64; g.n() + 1];
    c[g.n()] = 2;
    let f0 = SupportForm::from_i64(&c).expect("f_0 is primitive");
    semigroup_generators(g).iter().all(|(label, p)| {
        let want = match label {
            FaceLabel::Empty => 2,
            FaceLabel::Vertex(_) => 1,
            FaceLabel::Edge(..) => 0,
        };
        f0.eval(p.coords()) == want
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SaturationOutcome {
    /// Every cone lattice point with `t`-degree at most `b_max` is a sum of
    /// generators.
    Saturated { b_max: usize },
    /// The first cone lattice point (by degree, then lexicographically) that
    /// is not a sum of generators.
    Gap { point: Vec<i64> },
}

/// Bounded saturation check: compares the cone's lattice points with the
/// sums of generators, degree by degree up to `b_max`.
///
/// The cone is described by its facets, which does not depend on normality.
/// Since every generator has `t`-degree 1, the sums of degree `b` are the
/// sums of degree `b - 1` plus one generator.
pub fn normality_oracle(g: &Graph, b_max: usize) -> Result<SaturationOutcome> {
    let facets = graph_facets(g)?;
    let gens: Vec<LatticePoint> = semigroup_generators(g)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let mut reachable: HashSet<Vec<i64>> = HashSet::from([vec![0i64; g.n() + 1]]);
    for b in 1..=b_max {
        let mut next = HashSet::with_capacity(reachable.len() * 4);
        for p in &reachable {
            for q in &gens {
                next.insert(
                    p.iter()
                        .zip(q.coords())
                        .map(|(x, y)| x + y)
                        .collect::<Vec<i64>>(),
                );
            }
        }
        reachable = next;
        for point in lattice_points_at_degree(&facets, g.n(), b as i64, false)? {
            if !reachable.contains(&point) {
                return Ok(SaturationOutcome::Gap { point });
            }
        }
    }
    Ok(SaturationOutcome::Saturated { b_max })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormalityAgreement {
    Agree,
    /// Non-normal by the criterion, but no gap below the degree bound.
    Inconclusive,
    Disagree,
}

/// Compares [`is_normal`] with [`normality_oracle`].
pub fn cross_check_normality(g: &Graph, b_max: usize) -> Result<NormalityAgreement> {
    let verdict = is_normal(g);
    let outcome = normality_oracle(g, b_max)?;
    Ok(match (verdict.normal, outcome) {
        (true, SaturationOutcome::Saturated { .. }) => NormalityAgreement::Agree,
        (true, SaturationOutcome::Gap { .. }) => NormalityAgreement::Disagree,
        (false, SaturationOutcome::Gap { .. }) => NormalityAgreement::Agree,
        (false, SaturationOutcome::Saturated { .. }) => NormalityAgreement::Inconclusive,
    })
}
