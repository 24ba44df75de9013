//! The canonical module `ω` of a normal `R_G`.
//!
//! `ω` is the intersection of the height-one primes, and a monomial lies in
//! a facet prime exactly when the support form is positive on it, so `ω` is
//! spanned by the lattice points strictly inside the cone.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{lattice_points_at_degree, ToricRing};

/// The monomial `x^a t^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SemigroupMonomial {
    pub exps: Vec<i64>,
    pub t_deg: i64,
}

impl SemigroupMonomial {
    pub fn new(exps: Vec<i64>, t_deg: i64) -> SemigroupMonomial {
        SemigroupMonomial { exps, t_deg }
    }

    fn from_point(mut p: Vec<i64>) -> SemigroupMonomial {
        let t_deg = p.pop().expect("points carry a t-coordinate");
        SemigroupMonomial { exps: p, t_deg }
    }

    pub fn to_point(&self) -> Vec<i64> {
        let mut p = self.exps.clone();
        p.push(self.t_deg);
        p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaSlice {
    pub degree: i64,
    /// Lexicographically ordered.
    pub points: Vec<SemigroupMonomial>,
}

/// Whether `x^a t^b` lies in the semigroup, i.e. in the cone.
pub fn semigroup_membership(ring: &ToricRing, m: &SemigroupMonomial) -> Result<bool> {
    ring.require_normal()?;
    if m.exps.len() != ring.n() {
        return Err(Error::Precondition(format!(
            "expected {} exponents",
            ring.n()
        )));
    }
    let p = m.to_point();
    Ok(ring.facets().iter().all(|f| f.eval(&p) >= 0))
}

pub fn is_interior(ring: &ToricRing, p: &[i64]) -> bool {
    ring.facets().iter().all(|f| f.eval(p) > 0)
}

/// Interior lattice points of `t`-degree `b`.
pub fn omega_slice(ring: &ToricRing, b: i64) -> Result<OmegaSlice> {
    ring.require_normal()?;
    if b < 0 {
        return Err(Error::Precondition("negative degree".into()));
    }
    let points = lattice_points_at_degree(ring.facets(), ring.n(), b, true)?
        .into_iter()
        .map(SemigroupMonomial::from_point)
        .collect();
    Ok(OmegaSlice { degree: b, points })
}

/// `dim ω_b` for `b = 0..=b_max`.
pub fn omega_hilbert(ring: &ToricRing, b_max: i64) -> Result<Vec<usize>> {
    (0..=b_max)
        .map(|b| Ok(omega_slice(ring, b)?.points.len()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoGorenstein {
    pub pseudo_gorenstein: bool,
    pub initial_degree: i64,
    /// Size of the first nonempty slice.
    pub count: usize,
}

/// Scans `b = 1, 2, ..., cap` (default `n + 2`) for the first nonempty
/// slice. `ω` is generated in degrees at most `n`, so the default cap is
/// never reached on a normal ring.
pub fn is_pseudo_gorenstein(ring: &ToricRing, cap: Option<i64>) -> Result<PseudoGorenstein> {
    let cap = cap.unwrap_or(ring.n() as i64 + 2);
    for b in 1..=cap {
        let slice = omega_slice(ring, b)?;
        if !slice.points.is_empty() {
            let count = slice.points.len();
            return Ok(PseudoGorenstein {
                pseudo_gorenstein: count == 1,
                initial_degree: b,
                count,
            });
        }
    }
    Err(Error::NoInteriorPoint { cap })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaGenerators {
    pub generators: Vec<SemigroupMonomial>,
    pub b_max: i64,
    /// Set when `b_max` is below the degree bound `n` on the generators, so
    /// the list may be incomplete.
    pub truncated: bool,
}

/// Minimal monomial generators of `ω` up to `t`-degree `b_max`: interior
/// points `s` such that `s - p_F` is interior for no generator `p_F`.
///
/// `R_G` is Cohen-Macaulay of dimension `n + 1` with a presentation by
/// quadrics, so the last module of its minimal free resolution is generated
/// in degrees at least one above its homological position, and dually `ω` is
/// generated in degrees at most `n`.
pub fn omega_generators(ring: &ToricRing, b_max: i64) -> Result<OmegaGenerators> {
    let mut generators = Vec::new();
    for b in 1..=b_max {
        for s in omega_slice(ring, b)?.points {
            let p = s.to_point();
            let reducible = ring.generators().iter().any(|(_, q)| {
                let diff: Vec<i64> = p.iter().zip(q.coords()).map(|(x, y)| x - y).collect();
                is_interior(ring, &diff)
            });
            if !reducible {
                generators.push(s);
            }
        }
    }
    Ok(OmegaGenerators {
        generators,
        b_max,
        truncated: b_max < ring.n() as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, whiskered_cycle};

    fn ring(g: crate::graph::Graph) -> ToricRing {
        ToricRing::normal(&g).unwrap()
    }

    fn m(exps: &[i64], b: i64) -> SemigroupMonomial {
        SemigroupMonomial::new(exps.to_vec(), b)
    }

    #[test]
    fn membership_examples() {
        let c3 = ring(cycle(3).unwrap());
        assert!(semigroup_membership(&c3, &m(&[1, 1, 1], 2)).unwrap());
        assert!(!semigroup_membership(&c3, &m(&[1, 1, 1], 1)).unwrap());
        let e = ring(path(2).unwrap());
        assert!(!semigroup_membership(&e, &m(&[2, 0], 1)).unwrap());
    }

    #[test]
    fn slice_examples() {
        let c3 = ring(cycle(3).unwrap());
        assert_eq!(omega_slice(&c3, 2).unwrap().points, vec![m(&[1, 1, 1], 2)]);
        assert!(omega_slice(&c3, 0).unwrap().points.is_empty());
        let c5 = ring(cycle(5).unwrap());
        assert_eq!(
            omega_slice(&c5, 3).unwrap().points,
            vec![m(&[1, 1, 1, 1, 1], 3)]
        );
    }

    #[test]
    fn hilbert_examples() {
        let w = ring(whiskered_cycle(&[1, 1, 1]).unwrap());
        assert_eq!(omega_hilbert(&w, 4).unwrap(), vec![0, 0, 0, 0, 1]);
        let c3 = ring(cycle(3).unwrap());
        let h = omega_hilbert(&c3, 3).unwrap();
        assert_eq!(h[..3], [0, 0, 1]);
        assert_eq!(h[3], omega_slice(&c3, 3).unwrap().points.len());
    }

    #[test]
    fn pseudo_gorenstein_examples() {
        let pg = is_pseudo_gorenstein(&ring(cycle(7).unwrap()), None).unwrap();
        assert_eq!(
            (pg.pseudo_gorenstein, pg.initial_degree, pg.count),
            (true, 4, 1)
        );
        assert!(
            is_pseudo_gorenstein(&ring(cycle(9).unwrap()), None)
                .unwrap()
                .pseudo_gorenstein
        );
        assert!(
            is_pseudo_gorenstein(&ring(whiskered_cycle(&[1, 1, 1]).unwrap()), None)
                .unwrap()
                .pseudo_gorenstein
        );
        assert!(
            !is_pseudo_gorenstein(&ring(whiskered_cycle(&[1, 1, 2]).unwrap()), None)
                .unwrap()
                .pseudo_gorenstein
        );
        assert!(matches!(
            is_pseudo_gorenstein(&ring(cycle(7).unwrap()), Some(3)),
            Err(Error::NoInteriorPoint { cap: 3 })
        ));
    }

    #[test]
    fn generator_examples() {
        let w = ring(whiskered_cycle(&[1, 1, 1]).unwrap());
        let gens = omega_generators(&w, 5).unwrap();
        assert_eq!(
            gens.generators,
            vec![m(&[1, 1, 1, 1, 1, 1], 4), m(&[2, 2, 2, 1, 1, 1], 5)]
        );
        assert!(gens.truncated);
        let c3 = ring(cycle(3).unwrap());
        assert_eq!(
            omega_generators(&c3, 2).unwrap().generators,
            vec![m(&[1, 1, 1], 2)]
        );
        let c5 = ring(cycle(5).unwrap());
        assert_eq!(omega_generators(&c5, 4).unwrap().generators.len(), 1);
    }

    #[test]
    fn interior_is_an_ideal() {
        let r = ring(whiskered_cycle(&[2, 0, 1]).unwrap());
        for b in 1..=4 {
            for s in omega_slice(&r, b).unwrap().points {
                let p = s.to_point();
                assert!(semigroup_membership(&r, &s).unwrap());
                for (_, q) in r.generators() {
                    let sum: Vec<i64> = p.iter().zip(q.coords()).map(|(x, y)| x + y).collect();
                    assert!(is_interior(&r, &sum));
                }
            }
        }
    }
}
