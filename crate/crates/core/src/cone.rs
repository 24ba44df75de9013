//! The affine semigroup of `R_G` and the facets of the cone it spans.
//!
//! A monomial `x^a t^b` is identified with the lattice point `(a, b)`. The
//! ring is generated by `p_F = sum_{i in F} e_i + e_{n+1}` for the faces `F`
//! of the graph viewed as a 1-dimensional simplicial complex: the empty
//! face, each vertex, and each edge.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::{kernel_basis, primitive_normalize, rank, IntMatrix, IntVector};

/// A face of the graph's simplicial complex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FaceLabel {
    Empty,
    Vertex(usize),
    /// Stored with the smaller endpoint first.
    Edge(usize, usize),
}

impl FaceLabel {
    pub fn contains(&self, v: usize) -> bool {
        match *self {
            FaceLabel::Empty => false,
            FaceLabel::Vertex(i) => i == v,
            FaceLabel::Edge(i, j) => i == v || j == v,
        }
    }

    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            FaceLabel::Empty => vec![],
            FaceLabel::Vertex(i) => vec![i],
            FaceLabel::Edge(i, j) => vec![i, j],
        }
    }

    /// `p_F` in `Z^{n+1}`.
    pub fn point(&self, n: usize) -> LatticePoint {
        let mut c = vec![0i64; n + 1];
        for v in self.vertices() {
            c[v - 1] = 1;
        }
        c[n] = 1;
        LatticePoint(c)
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceLabel::Empty => write!(f, "{{}}"),
            FaceLabel::Vertex(i) => write!(f, "{{{i}}}"),
            FaceLabel::Edge(i, j) => write!(f, "{{{i},{j}}}"),
        }
    }
}

/// An exponent vector `(a_1, ..., a_n, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// A primitive integer linear form `c_1 x_1 + ... + c_n x_n + c_{n+1} x_{n+1}`.
///
/// The coefficients are kept exactly; a machine-integer copy is cached for
/// evaluation on exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportForm {
    coeffs: IntVector,
    small: Vec<i64>,
}

impl SupportForm {
    /// Normalizes `v` to its primitive multiple.
    pub fn new(v: &IntVector) -> Result<SupportForm> {
        let coeffs = primitive_normalize(v)?;
        let small = coeffs.to_i64_vec()?;
        Ok(SupportForm { coeffs, small })
    }

    pub fn from_i64(c: &[i64]) -> Result<SupportForm> {
        SupportForm::new(&IntVector::from_i64(c))
    }

    pub fn coeffs(&self) -> &IntVector {
        &self.coeffs
    }

    pub fn as_i64(&self) -> &[i64] {
        &self.small
    }

    pub fn dim(&self) -> usize {
        self.small.len()
    }

    /// Coefficient of the `t` coordinate.
    pub fn t_coeff(&self) -> i64 {
        *self.small.last().unwrap()
    }

    /// Coefficient of `x_i`, 1-indexed.
    pub fn vertex_coeff(&self, i: usize) -> i64 {
        self.small[i - 1]
    }

    pub fn eval(&self, point: &[i64]) -> i64 {
        debug_assert_eq!(point.len(), self.small.len());
        self.small.iter().zip(point).map(|(c, x)| c * x).sum()
    }

    pub fn eval_face(&self, face: &FaceLabel) -> i64 {
        self.t_coeff()
            + face
                .vertices()
                .iter()
                .map(|&v| self.vertex_coeff(v))
                .sum::<i64>()
    }
}

impl fmt::Debug for SupportForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// `p_F` for every face: empty face, vertices ascending, edges lexicographic.
pub fn semigroup_generators(g: &Graph) -> Vec<(FaceLabel, LatticePoint)> {
    let n = g.n();
    std::iter::once(FaceLabel::Empty)
        .chain(g.vertices().map(FaceLabel::Vertex))
        .chain(g.edges().iter().map(|&(u, v)| FaceLabel::Edge(u, v)))
        .map(|f| (f, f.point(n)))
        .collect()
}

struct Ray {
    v: IntVector,
    zeros: FixedBitSet,
}

/// Support forms of all facets of the cone spanned by `gens`, one per
/// facet, sorted lexicographically.
///
/// Double description: the facet normals are the extreme rays of the dual
/// cone `{f : f(g) >= 0 for all g}`. Starting from a simplicial cone cut out
/// by an initial basis, the remaining generators are inserted one at a time
/// in the given order; new rays come from combinatorially adjacent pairs
/// straddling the inserted hyperplane.
pub fn facet_support_forms(gens: &[LatticePoint]) -> Result<Vec<SupportForm>> {
    let d = gens.first().map_or(0, |g| g.dim());
    let vecs: Vec<IntVector> = gens
        .iter()
        .map(|g| IntVector::from_i64(g.coords()))
        .collect();

    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for (i, v) in vecs.iter().enumerate() {
        if basis.len() == d {
            break;
        }
        let mut rows: Vec<IntVector> = basis.iter().map(|&j| vecs[j].clone()).collect();
        rows.push(v.clone());
        if rank(&IntMatrix::new(rows, d)) == basis.len() + 1 {
            basis.push(i);
        }
    }
    if d == 0 || basis.len() < d {
        return Err(Error::Degenerate {
            rank: basis.len(),
            dim: d,
        });
    }

    let m = gens.len();
    let mut rays: Vec<Ray> = Vec::with_capacity(d);
    for &i in &basis {
        let others: Vec<IntVector> = basis
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| vecs[j].clone())
            .collect();
        let ker = kernel_basis(&IntMatrix::new(others, d));
        if ker.len() != 1 {
            return Err(Error::Invariant(
                "simplicial start cone has a non-line kernel".into(),
            ));
        }
        let mut r = ker.into_iter().next().unwrap();
        if vecs[i].dot(&r).is_negative() {
            r = r.neg();
        }
        let mut zeros = FixedBitSet::with_capacity(m);
        basis
            .iter()
            .filter(|&&j| j != i)
            .for_each(|&j| zeros.insert(j));
        rays.push(Ray {
            v: primitive_normalize(&r)?,
            zeros,
        });
    }

    let in_basis: BTreeSet<usize> = basis.iter().copied().collect();
    for k in (0..m).filter(|k| !in_basis.contains(k)) {
        let vals: Vec<BigInt> = rays.iter().map(|r| vecs[k].dot(&r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                if !adjacent(&rays, p, q, d) {
                    continue;
                }
                let combined = IntVector::combine(&vals[p], &rays[q].v, &-&vals[q], &rays[p].v);
                let mut zeros = rays[p].zeros.clone();
                zeros.intersect_with(&rays[q].zeros);
                zeros.insert(k);
                created.push(Ray {
                    v: primitive_normalize(&combined)?,
                    zeros,
                });
            }
        }

        let mut next = Vec::with_capacity(pos.len() + created.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_zero() {
                r.zeros.insert(k);
                next.push(r);
            } else if vals[i].is_positive() {
                next.push(r);
            }
        }
        next.extend(created);
        rays = next;
    }

    let mut forms: Vec<SupportForm> = rays
        .iter()
        .map(|r| SupportForm::new(&r.v))
        .collect::<Result<_>>()?;
    forms.sort();
    forms.dedup();
    Ok(forms)
}

fn adjacent(rays: &[Ray], p: usize, q: usize, d: usize) -> bool {
    let mut common = rays[p].zeros.clone();
    common.intersect_with(&rays[q].zeros);
    if common.count_ones(..) + 2 < d {
        return false;
    }
    !rays
        .iter()
        .enumerate()
        .any(|(i, r)| i != p && i != q && common.is_subset(&r.zeros))
}

/// Facets of the cone of `g`'s semigroup.
pub fn graph_facets(g: &Graph) -> Result<Vec<SupportForm>> {
    let pts: Vec<LatticePoint> = semigroup_generators(g)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    facet_support_forms(&pts)
}

/// The faces `F` with `f(p_F) = 0`.
pub fn face_of_form(
    f: &SupportForm,
    gens: &[(FaceLabel, LatticePoint)],
) -> Result<BTreeSet<FaceLabel>> {
    let mut out = BTreeSet::new();
    for (label, p) in gens {
        match f.eval(p.coords()) {
            0 => {
                out.insert(*label);
            }
            x if x < 0 => return Err(Error::NotSupporting(label.to_string())),
            _ => {}
        }
    }
    Ok(out)
}
