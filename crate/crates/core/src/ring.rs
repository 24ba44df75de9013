use crate::cone::{graph_facets, semigroup_generators, FaceLabel, LatticePoint, SupportForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::normality::{is_normal, NormalityVerdict};

/// A graph together with its semigroup generators, cone facets and
/// normality verdict, computed once and shared by the downstream modules.
#[derive(Clone, Debug)]
pub struct ToricRing {
    graph: Graph,
    generators: Vec<(FaceLabel, LatticePoint)>,
    facets: Vec<SupportForm>,
    normality: NormalityVerdict,
}

impl ToricRing {
    pub fn new(g: &Graph) -> Result<ToricRing> {
        Ok(ToricRing {
            graph: g.clone(),
            generators: semigroup_generators(g),
            facets: graph_facets(g)?,
            normality: is_normal(g),
        })
    }

    /// Like [`ToricRing::new`], but fails unless `R_G` is normal.
    pub fn normal(g: &Graph) -> Result<ToricRing> {
        let ring = ToricRing::new(g)?;
        ring.require_normal()?;
        Ok(ring)
    }

    pub fn require_normal(&self) -> Result<()> {
        if self.normality.normal {
            Ok(())
        } else {
            Err(Error::NotNormal(format!("{:?}", self.normality.reason)))
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn generators(&self) -> &[(FaceLabel, LatticePoint)] {
        &self.generators
    }

    pub fn facets(&self) -> &[SupportForm] {
        &self.facets
    }

    pub fn normality(&self) -> &NormalityVerdict {
        &self.normality
    }
}

/// Lattice points `(a, b)` of the cone with `t`-coordinate `b`, in
/// lexicographic order. With `strict`, only points where every facet form
/// is positive.
///
/// The facets must include the coordinate forms `x_i` and bound every
/// coordinate through some form whose `x`-coefficients are all nonpositive;
/// graph cones satisfy both (the cover forms do the bounding). The search
/// runs depth-first over `a_1, a_2, ...` and prunes a branch as soon as some
/// facet cannot reach the required sign whatever the remaining coordinates.
pub fn lattice_points_at_degree(
    facets: &[SupportForm],
    n: usize,
    b: i64,
    strict: bool,
) -> Result<Vec<Vec<i64>>> {
    let need = i64::from(strict);
    let lo = vec![need; n];
    let mut hi = vec![i64::MAX; n];
    for f in facets {
        let c = f.as_i64();
        if c[..n].iter().any(|&x| x > 0) {
            continue;
        }
        for i in 0..n {
            if c[i] < 0 {
                let rest: i64 = (0..n).filter(|&j| j != i).map(|j| c[j] * lo[j]).sum();
                let bound = (c[n] * b + rest - need).div_euclid(-c[i]);
                hi[i] = hi[i].min(bound);
            }
        }
    }
    if hi.contains(&i64::MAX) {
        return Err(Error::Invariant("cone slice is unbounded".into()));
    }
    if (0..n).any(|i| hi[i] < lo[i]) {
        return Ok(Vec::new());
    }
    // best achievable contribution of coordinates k.. for each facet
    let suffix: Vec<Vec<i64>> = facets
        .iter()
        .map(|f| {
            let c = f.as_i64();
            let mut s = vec![0i64; n + 1];
            for k in (0..n).rev() {
                s[k] = s[k + 1] + (c[k] * lo[k]).max(c[k] * hi[k]);
            }
            s
        })
        .collect();
    let mut out = Vec::new();
    let mut partial: Vec<i64> = facets.iter().map(|f| f.t_coeff() * b).collect();
    let mut point = vec![0i64; n + 1];
    point[n] = b;
    slice_dfs(
        facets,
        &suffix,
        &lo,
        &hi,
        need,
        0,
        &mut partial,
        &mut point,
        &mut out,
    );
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn slice_dfs(
    facets: &[SupportForm],
    suffix: &[Vec<i64>],
    lo: &[i64],
    hi: &[i64],
    need: i64,
    k: usize,
    partial: &mut Vec<i64>,
    point: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let n = lo.len();
    if (0..facets.len()).any(|f| partial[f] + suffix[f][k] < need) {
        return;
    }
    if k == n {
        out.push(point.clone());
        return;
    }
    for x in lo[k]..=hi[k] {
        point[k] = x;
        for (f, form) in facets.iter().enumerate() {
            partial[f] += form.as_i64()[k] * x;
        }
        slice_dfs(facets, suffix, lo, hi, need, k + 1, partial, point, out);
        for (f, form) in facets.iter().enumerate() {
            partial[f] -= form.as_i64()[k] * x;
        }
    }
    point[k] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn slices_of_an_edge() {
        let g = path(2).unwrap();
        let facets = graph_facets(&g).unwrap();
        // the cone is 0 <= a_i <= b
        let pts = lattice_points_at_degree(&facets, 2, 1, false).unwrap();
        assert_eq!(
            pts,
            vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 1]]
        );
        assert!(lattice_points_at_degree(&facets, 2, 1, true)
            .unwrap()
            .is_empty());
        assert_eq!(
            lattice_points_at_degree(&facets, 2, 2, true).unwrap(),
            vec![vec![1, 1, 2]]
        );
    }

    #[test]
    fn slice_points_satisfy_every_facet() {
        let g = cycle(5).unwrap();
        let facets = graph_facets(&g).unwrap();
        for b in 0..5 {
            for p in lattice_points_at_degree(&facets, 5, b, false).unwrap() {
                assert!(facets.iter().all(|f| f.eval(&p) >= 0));
            }
            for p in lattice_points_at_degree(&facets, 5, b, true).unwrap() {
                assert!(facets.iter().all(|f| f.eval(&p) > 0));
            }
        }
    }

    #[test]
    fn non_normal_ring_is_flagged() {
        let g = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(ToricRing::new(&g).is_ok());
        assert!(matches!(ToricRing::normal(&g), Err(Error::NotNormal(_))));
    }
}
