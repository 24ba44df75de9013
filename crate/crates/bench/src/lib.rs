//! Graphs shared by the benchmarks.

use toric_graph::families::{complete_bipartite, cycle, whiskered_cycle};
use toric_graph::Graph;

/// Named graphs of increasing size, all with normal toric ring.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("C_7", cycle(7).unwrap()),
        ("C_11", cycle(11).unwrap()),
        ("C(1,1,1)", whiskered_cycle(&[1, 1, 1]).unwrap()),
        ("C(3,2,1,0,1)", whiskered_cycle(&[3, 2, 1, 0, 1]).unwrap()),
        ("K_4,4", complete_bipartite(4, 4).unwrap()),
    ]
}
