//! Height-one monomial primes of `R_G`.
//!
//! A supporting form `f` cuts out the monomial prime generated by the
//! `x_F t` with `f(p_F) > 0`; in the normal case the facets give exactly the
//! height-one monomial primes. Each facet prime is matched against the
//! named families:
//!
//! * `P_C = (x_F t : F ⊆ C)` for a minimal vertex cover `C`, with support
//!   form `-sum_{i ∉ C} x_i + t`;
//! * `Q_i = (x_F t : i ∈ F)`, the only ones not containing `t`;
//! * `P_0 = (t, x_1 t, ..., x_n t)`, a facet prime exactly when the graph
//!   is connected and non-bipartite;
//! * anything else is reported as exceptional.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cone::{FaceLabel, LatticePoint, SupportForm};
use crate::error::{Error, Result};
use crate::graph::{
    bit, induced_odd_cycles, is_minimal_cover, minimal_vertex_covers, recognize_whiskered_cycle,
    vec_to_mask, Graph, VertexCover,
};
use crate::ring::ToricRing;

/// A monomial prime cut out by a supporting form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPrime {
    pub form: SupportForm,
    /// Faces `F` whose generator `x_F t` lies in the prime.
    pub generator_faces: BTreeSet<FaceLabel>,
    pub contains_t: bool,
}

impl MonomialPrime {
    pub fn from_form(
        form: SupportForm,
        gens: &[(FaceLabel, LatticePoint)],
    ) -> Result<MonomialPrime> {
        let mut generator_faces = BTreeSet::new();
        for (label, p) in gens {
            match form.eval(p.coords()) {
                x if x < 0 => return Err(Error::NotSupporting(label.to_string())),
                0 => {}
                _ => {
                    generator_faces.insert(*label);
                }
            }
        }
        let contains_t = generator_faces.contains(&FaceLabel::Empty);
        Ok(MonomialPrime {
            form,
            generator_faces,
            contains_t,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum PrimeKind {
    /// `P_C` for a minimal vertex cover `C`.
    Cover(VertexCover),
    /// `Q_i`.
    Variable(usize),
    /// `P_0 = (t, x_1 t, ..., x_n t)`.
    Zero,
    Exceptional,
}

impl PrimeKind {
    pub fn name(&self) -> &'static str {
        match self {
            PrimeKind::Cover(_) => "cover",
            PrimeKind::Variable(_) => "variable",
            PrimeKind::Zero => "zero",
            PrimeKind::Exceptional => "exceptional",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifiedPrime {
    pub prime: MonomialPrime,
    pub kind: PrimeKind,
}

fn all_faces(g: &Graph) -> impl Iterator<Item = FaceLabel> + '_ {
    std::iter::once(FaceLabel::Empty)
        .chain(g.vertices().map(FaceLabel::Vertex))
        .chain(g.edges().iter().map(|&(u, v)| FaceLabel::Edge(u, v)))
}

/// Matches a prime against the named families, in the order zero prime,
/// variable prime, cover prime.
pub fn classify(g: &Graph, prime: &MonomialPrime) -> PrimeKind {
    let edges: BTreeSet<FaceLabel> = g
        .edges()
        .iter()
        .map(|&(u, v)| FaceLabel::Edge(u, v))
        .collect();
    let zero_face: BTreeSet<FaceLabel> = all_faces(g)
        .filter(|f| !prime.generator_faces.contains(f))
        .collect();
    if zero_face == edges {
        return PrimeKind::Zero;
    }
    if !prime.contains_t {
        for i in g.vertices() {
            let with_i: BTreeSet<FaceLabel> = all_faces(g).filter(|f| f.contains(i)).collect();
            if prime.generator_faces == with_i {
                return PrimeKind::Variable(i);
            }
        }
    }
    let c: Vec<usize> = g
        .vertices()
        .filter(|&i| prime.generator_faces.contains(&FaceLabel::Vertex(i)))
        .collect();
    let cm = vec_to_mask(&c);
    let inside: BTreeSet<FaceLabel> = all_faces(g)
        .filter(|f| f.vertices().iter().all(|&v| cm & bit(v) != 0))
        .collect();
    if prime.generator_faces == inside {
        if let Ok(cover) = VertexCover::new(g, c) {
            if is_minimal_cover(g, &cover) {
                return PrimeKind::Cover(cover);
            }
        }
    }
    PrimeKind::Exceptional
}

fn listing_key(p: &ClassifiedPrime) -> (u8, Option<&VertexCover>, Option<&SupportForm>, usize) {
    match &p.kind {
        PrimeKind::Cover(c) => (0, Some(c), None, 0),
        PrimeKind::Zero => (1, None, None, 0),
        PrimeKind::Exceptional => (2, None, Some(&p.prime.form), 0),
        PrimeKind::Variable(i) => (3, None, None, *i),
    }
}

/// One classified prime per facet of the cone. Primes containing `t` come
/// first (cover primes by cover, then `P_0`, then exceptional ones by
/// form), followed by `Q_1, ..., Q_n`.
pub fn height_one_primes(g: &Graph) -> Result<Vec<ClassifiedPrime>> {
    primes_of_ring(&ToricRing::normal(g)?)
}

pub fn primes_of_ring(ring: &ToricRing) -> Result<Vec<ClassifiedPrime>> {
    ring.require_normal()?;
    let mut out = ring
        .facets()
        .iter()
        .map(|f| {
            let prime = MonomialPrime::from_form(f.clone(), ring.generators())?;
            let kind = classify(ring.graph(), &prime);
            Ok(ClassifiedPrime { prime, kind })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| listing_key(a).cmp(&listing_key(b)));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPrime {
    pub prime: MonomialPrime,
    /// Only minimal covers give height-one primes.
    pub minimal: bool,
}

/// The prime `P_C` with support form `-sum_{i ∉ C} x_i + t`.
pub fn cover_prime(g: &Graph, c: &VertexCover) -> Result<CoverPrime> {
    let checked = VertexCover::new(g, c.vertices().to_vec())?;
    let mut coeffs: Vec<i64> = g
        .vertices()
        .map(|i| if checked.contains(i) { 0 } else { -1 })
        .collect();
    coeffs.push(1);
    let form = SupportForm::from_i64(&coeffs)?;
    let prime = MonomialPrime::from_form(form, &crate::cone::semigroup_generators(g))?;
    Ok(CoverPrime {
        prime,
        minimal: is_minimal_cover(g, &checked),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredictionBasis {
    /// Connected bipartite: covers and variables, exactly.
    Bipartite,
    /// Whiskered odd cycle: covers, `P_0` and variables, exactly.
    WhiskeredOddCycle,
    /// Other connected non-bipartite graphs: a lower bound only.
    InclusionOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePrediction {
    pub kinds: Vec<PrimeKind>,
    pub basis: PredictionBasis,
}

impl PrimePrediction {
    pub fn is_exact(&self) -> bool {
        self.basis != PredictionBasis::InclusionOnly
    }

    /// Whether `actual` equals the predicted set of kinds.
    pub fn equals(&self, actual: &[ClassifiedPrime]) -> bool {
        let want: BTreeSet<&PrimeKind> = self.kinds.iter().collect();
        let got: BTreeSet<&PrimeKind> = actual.iter().map(|p| &p.kind).collect();
        want == got && actual.len() == self.kinds.len()
    }

    /// Whether every predicted kind occurs in `actual`.
    pub fn included_in(&self, actual: &[ClassifiedPrime]) -> bool {
        let got: BTreeSet<&PrimeKind> = actual.iter().map(|p| &p.kind).collect();
        self.kinds.iter().all(|k| got.contains(k))
    }

    /// Equality when the prediction is exact, inclusion otherwise.
    pub fn consistent_with(&self, actual: &[ClassifiedPrime]) -> bool {
        if self.is_exact() {
            self.equals(actual)
        } else {
            self.included_in(actual)
        }
    }
}

/// The prime set forced by the structure of a connected graph with normal
/// toric ring.
pub fn predicted_prime_set(g: &Graph) -> Result<PrimePrediction> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    ToricRing::normal(g)?;
    let mut kinds: Vec<PrimeKind> = minimal_vertex_covers(g)
        .into_iter()
        .map(PrimeKind::Cover)
        .collect();
    let basis = if g.is_bipartite() {
        PredictionBasis::Bipartite
    } else {
        kinds.push(PrimeKind::Zero);
        match recognize_whiskered_cycle(g) {
            Some(shape) if shape.k % 2 == 1 => PredictionBasis::WhiskeredOddCycle,
            _ => PredictionBasis::InclusionOnly,
        }
    };
    kinds.extend(g.vertices().map(PrimeKind::Variable));
    Ok(PrimePrediction { kinds, basis })
}

/// The supporting form `-sum_{i ∉ N(v) ∪ {v}} x_i - 2 x_v + 2t` for a vertex
/// `v` that is neither on nor adjacent to the induced odd cycle `cycle`.
///
/// Its prime contains `t` but differs from `P_0` (it misses `x_v t`) and
/// from every cover prime (it misses `x_i x_j t` for adjacent `i, j` on the
/// cycle, and every vertex cover contains such a pair).
pub fn exceptional_witness_form(g: &Graph, cycle: &[usize], v: usize) -> Result<SupportForm> {
    let n = g.n();
    if v == 0 || v > n {
        return Err(Error::Precondition(format!("vertex {v} out of range")));
    }
    let cycles = induced_odd_cycles(g);
    let cm = vec_to_mask(cycle);
    if !cycles
        .iter()
        .any(|c| c.len() == cycle.len() && vec_to_mask(c) == cm)
    {
        return Err(Error::Precondition(format!(
            "{cycle:?} is not an induced odd cycle"
        )));
    }
    if cm & bit(v) != 0 || g.adj_mask(v) & cm != 0 {
        return Err(Error::Precondition(format!(
            "vertex {v} lies on or next to the cycle"
        )));
    }
    let mut coeffs: Vec<i64> = g
        .vertices()
        .map(|i| {
            if i == v {
                -2
            } else if g.has_edge(i, v) {
                0
            } else {
                -1
            }
        })
        .collect();
    coeffs.push(2);
    let form = SupportForm::from_i64(&coeffs)?;
    let gens = crate::cone::semigroup_generators(g);
    if let Some((label, _)) = gens.iter().find(|(_, p)| form.eval(p.coords()) < 0) {
        return Err(Error::Invariant(format!(
            "witness form negative on {label}"
        )));
    }
    Ok(form)
}
