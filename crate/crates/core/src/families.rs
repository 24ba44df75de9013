//! Named graph families and small exhaustive graph corpora.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{bipartition, bit, mask_to_vec, Bipartition, Graph};

/// The cycle on `1..=k`.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Precondition(format!("cycles need k >= 3, got {k}")));
    }
    Graph::new(k, (1..=k).map(|i| (i, i % k + 1)))
}

/// The path on `k >= 2` vertices `1 - 2 - ... - k`.
pub fn path(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::Precondition(format!(
            "paths need k >= 2 vertices, got {k}"
        )));
    }
    Graph::new(k, (1..k).map(|i| (i, i + 1)))
}

/// `K_{m,n}` with sides `1..=m` and `m+1..=m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition(
            "complete bipartite sides must be nonempty".into(),
        ));
    }
    Graph::new(
        m + n,
        (1..=m).flat_map(|i| (m + 1..=m + n).map(move |j| (i, j))),
    )
}

/// The whiskered cycle `C(a_1, ..., a_k)`: cycle vertices `1..=k`, then the
/// whiskers of vertex 1, of vertex 2, and so on.
pub fn whiskered_cycle(a: &[usize]) -> Result<Graph> {
    let k = a.len();
    if k < 3 {
        return Err(Error::Precondition(format!(
            "whiskered cycles need k >= 3, got {k}"
        )));
    }
    let n = k + a.iter().sum::<usize>();
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (i, i % k + 1)).collect();
    let mut next = k + 1;
    for (i, &count) in a.iter().enumerate() {
        for _ in 0..count {
            edges.push((i + 1, next));
            next += 1;
        }
    }
    Graph::new(n, edges)
}

/// The lexicographically least rotation or reflection of a cyclic sequence.
pub fn canonical_cyclic(a: &[usize]) -> Vec<usize> {
    let k = a.len();
    let mut best = a.to_vec();
    for shift in 0..k {
        let fwd: Vec<usize> = (0..k).map(|i| a[(shift + i) % k]).collect();
        let bwd: Vec<usize> = (0..k).map(|i| a[(shift + k - i) % k]).collect();
        best = best.min(fwd).min(bwd);
    }
    best
}

/// Whisker sequences of length `k` with total at most `max_total`, one per
/// rotation/reflection class, in lexicographic order.
pub fn whiskered_types(k: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut HashSet<Vec<usize>>) {
        if cur.len() == k {
            out.insert(canonical_cyclic(cur));
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(k, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = HashSet::new();
    rec(k, max_total, &mut Vec::new(), &mut out);
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort();
    v
}

/// Canonical adjacency rows: equal for two graphs iff they are isomorphic.
///
/// Individualization-refinement without automorphism pruning; fine for the
/// small graphs this crate enumerates.
pub fn canonical_key(g: &Graph) -> Vec<u64> {
    let cells = vec![g.vertices().collect::<Vec<_>>()];
    let mut best = None;
    search_labelings(g, cells, &mut best);
    best.unwrap()
}

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0, |m, &v| m | bit(v)))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    (
                        masks
                            .iter()
                            .map(|m| (g.adj_mask(v) & m).count_ones())
                            .collect(),
                        v,
                    )
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search_labelings(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u64>>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let mut label = vec![0usize; g.n() + 1];
            for (i, &v) in order.iter().enumerate() {
                label[v] = i;
            }
            let key: Vec<u64> = order
                .iter()
                .map(|&v| {
                    mask_to_vec(g.adj_mask(v))
                        .iter()
                        .fold(0, |m, &w| m | (1u64 << label[w]))
                })
                .collect();
            if best.as_ref().is_none_or(|b| key < *b) {
                *best = Some(key);
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut split = cells[..i].to_vec();
                split.push(vec![v]);
                split.push(cells[i].iter().copied().filter(|&w| w != v).collect());
                split.extend(cells[i + 1..].iter().cloned());
                search_labelings(g, split, best);
            }
        }
    }
}

/// One representative per isomorphism class of connected graphs on exactly
/// `n >= 2` vertices, optionally restricted to bipartite graphs. Ordered by
/// edge count, then canonical key.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes on `n` vertices are reached by attaching a new vertex to the
/// classes on `n - 1` vertices.
pub fn connected_graphs(n: usize, bipartite_only: bool) -> Vec<Graph> {
    assert!(
        n >= 2,
        "connected graphs without isolated vertices need n >= 2"
    );
    let mut level = vec![Graph::new(2, [(1, 2)]).unwrap()];
    for m in 3..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            let allowed: Vec<u64> = if bipartite_only {
                match bipartition(base) {
                    Bipartition::Coloring { side_a, side_b } => vec![
                        side_a.iter().fold(0, |acc, &v| acc | bit(v)),
                        side_b.iter().fold(0, |acc, &v| acc | bit(v)),
                    ],
                    Bipartition::OddWalk(_) => unreachable!("bipartite level"),
                }
            } else {
                vec![(1u64 << (m - 1)) - 1]
            };
            for side in allowed {
                // every nonempty subset of `side`
                let mut s = side;
                while s != 0 {
                    let mut edges = base.edges().to_vec();
                    edges.extend(mask_to_vec(s).into_iter().map(|v| (v, m)));
                    let candidate = Graph::new(m, edges).expect("augmented graph is valid");
                    if seen.insert(canonical_key(&candidate)) {
                        next.push(candidate);
                    }
                    s = (s - 1) & side;
                }
            }
        }
        level = next;
    }
    let mut keyed: Vec<(usize, Vec<u64>, Graph)> = level
        .into_iter()
        .map(|g| (g.num_edges(), canonical_key(&g), g))
        .collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    keyed.into_iter().map(|x| x.2).collect()
}
