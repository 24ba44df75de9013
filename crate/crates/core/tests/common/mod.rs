#![allow(dead_code)]

use toric_graph::families::{complete_bipartite, connected_graphs, cycle, path, whiskered_cycle};
use toric_graph::Graph;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

pub fn triangle_with_tail() -> Graph {
    graph(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])
}

pub fn two_triangles() -> Graph {
    graph(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
}

/// Connected bipartite graphs with at most 8 vertices, one per
/// isomorphism class.
pub fn bipartite_corpus() -> Vec<Graph> {
    (2..=8).flat_map(|n| connected_graphs(n, true)).collect()
}

/// Every whisker sequence (not reduced by symmetry) of length `k` with sum
/// at most `max_total`.
pub fn whisker_sequences(k: usize, max_total: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(k, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, max_total, &mut Vec::new(), &mut out);
    out
}

/// All connected graphs up to 6 vertices, connected bipartite graphs up to
/// 8, cycles up to 11, whiskered cycles, and a few disconnected and
/// non-normal graphs.
pub fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = (2..=6).flat_map(|n| connected_graphs(n, false)).collect();
    out.extend((7..=8).flat_map(|n| connected_graphs(n, true)));
    out.extend((7..=11).map(|k| cycle(k).unwrap()));
    out.extend((7..=9).map(|k| path(k).unwrap()));
    out.push(complete_bipartite(3, 5).unwrap());
    for k in [3, 5, 7] {
        for a in toric_graph::families::whiskered_types(k, 4) {
            if a.iter().sum::<usize>() + k > 6 {
                out.push(whiskered_cycle(&a).unwrap());
            }
        }
    }
    for a in [[1, 1, 1, 1], [2, 0, 1, 0], [1, 0, 0, 0]] {
        out.push(whiskered_cycle(&a).unwrap());
    }
    out.push(triangle_with_tail());
    out.push(two_triangles());
    out.push(graph(
        7,
        &[
            (1, 2),
            (2, 3),
            (1, 3),
            (4, 5),
            (5, 6),
            (4, 6),
            (3, 7),
            (7, 4),
        ],
    ));
    out.push(graph(5, &[(1, 2), (2, 3), (1, 3), (4, 5)]));
    out.push(graph(4, &[(1, 2), (3, 4)]));
    out.push(graph(7, &[(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (5, 7)]));
    out
}
