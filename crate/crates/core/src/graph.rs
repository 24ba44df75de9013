//! Simple undirected graphs and the combinatorial predicates used by the
//! rest of the crate.
//!
//! Vertices are labelled `1..=n`. Vertex sets are stored as `u64` bit masks
//! (bit `v - 1` for vertex `v`), which caps graphs at [`MAX_VERTICES`]; all
//! enumerations here are exponential anyway and meant for small graphs.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, ParseErrorKind, Result};

pub const MAX_VERTICES: usize = 64;

pub(crate) fn bit(v: usize) -> u64 {
    1u64 << (v - 1)
}

pub(crate) fn mask_to_vec(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out.push(i + 1);
        m &= m - 1;
    }
    out
}

pub(crate) fn vec_to_mask(vs: &[usize]) -> u64 {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

/// A finite simple graph on `1..=n` without isolated vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a validated graph. Edges may be given in either orientation and
    /// any order; they are stored as sorted pairs `(u, v)` with `u < v`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                got: n,
                max: MAX_VERTICES,
            });
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Precondition(format!("loop edge at vertex {u}")));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::Precondition(format!(
                    "edge {{{u},{v}}} out of range 1..={n}"
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::Precondition(format!("duplicate edge {{{u},{v}}}")));
            }
        }
        if set.is_empty() {
            return Err(Error::NoEdges);
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adj = vec![0u64; n + 1];
        for &(u, v) in &edges {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        if let Some(v) = (1..=n).find(|&v| adj[v] == 0) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(Graph { n, edges, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub(crate) fn all_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub(crate) fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_to_vec(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && v >= 1 && v <= self.n && self.adj[u] & bit(v) != 0
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() == 1
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(bipartition(self), Bipartition::Coloring { .. })
    }

    /// Renders the edge-list format with an explicit header.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for (u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Parses the edge-list format: an optional first line `n <count>`, then
/// one `u v` pair per line. `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let err = |line, kind| Error::Parse { line, kind };
    let mut header: Option<(usize, usize)> = None;
    let mut seen_content = false;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if !seen_content && tokens[0] == "n" {
            seen_content = true;
            let count = match tokens.as_slice() {
                [_, c] => c.parse::<usize>().ok().filter(|&c| c > 0),
                _ => None,
            };
            let count = count.ok_or(err(line, ParseErrorKind::BadHeader))?;
            header = Some((count, line));
            continue;
        }
        seen_content = true;
        let [a, b] = tokens.as_slice() else {
            return Err(err(line, ParseErrorKind::Malformed));
        };
        let parse = |s: &str| -> Result<usize> {
            let x: i64 = s
                .parse()
                .map_err(|_| err(line, ParseErrorKind::Malformed))?;
            if x <= 0 {
                return Err(err(line, ParseErrorKind::NonPositiveLabel));
            }
            Ok(x as usize)
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(err(line, ParseErrorKind::LoopEdge));
        }
        if let Some((n, _)) = header {
            if u > n || v > n {
                return Err(err(line, ParseErrorKind::LabelOutOfRange(n)));
            }
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, ParseErrorKind::DuplicateEdge));
        }
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let n = match header {
        Some((n, _)) => n,
        None => edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0),
    };
    Graph::new(n, edges)
}

/// A vertex cover, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct VertexCover(Vec<usize>);

impl VertexCover {
    /// Checks the cover property against `g`.
    pub fn new(g: &Graph, mut vertices: Vec<usize>) -> Result<VertexCover> {
        vertices.sort_unstable();
        vertices.dedup();
        if vertices.iter().any(|&v| v == 0 || v > g.n()) {
            return Err(Error::NotACover(vertices));
        }
        let m = vec_to_mask(&vertices);
        if !covers(g, m) {
            return Err(Error::NotACover(vertices));
        }
        Ok(VertexCover(vertices))
    }

    pub(crate) fn from_mask(m: u64) -> VertexCover {
        VertexCover(mask_to_vec(m))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub(crate) fn mask(&self) -> u64 {
        vec_to_mask(&self.0)
    }
}

pub(crate) fn covers(g: &Graph, m: u64) -> bool {
    g.edges().iter().all(|&(u, v)| m & (bit(u) | bit(v)) != 0)
}

pub fn is_minimal_cover(g: &Graph, c: &VertexCover) -> bool {
    let m = c.mask();
    covers(g, m) && c.vertices().iter().all(|&v| !covers(g, m & !bit(v)))
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = 0u64;
    let mut comps = Vec::new();
    for s in g.vertices() {
        if seen & bit(s) != 0 {
            continue;
        }
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let next = mask_to_vec(frontier)
                .into_iter()
                .fold(0, |m, v| m | g.adj_mask(v));
            frontier = next & !comp;
            comp |= next;
        }
        seen |= comp;
        comps.push(mask_to_vec(comp));
    }
    comps
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// `side_a` holds the smallest vertex of every component.
    Coloring {
        side_a: Vec<usize>,
        side_b: Vec<usize>,
    },
    /// A closed walk of odd length; first and last entries coincide.
    OddWalk(Vec<usize>),
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut color: Vec<Option<u8>> = vec![None; n + 1];
    let mut parent = vec![0usize; n + 1];
    for root in g.vertices() {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                match color[w] {
                    None => {
                        color[w] = Some(1 - color[u].unwrap());
                        parent[w] = u;
                        queue.push_back(w);
                    }
                    Some(c) if c == color[u].unwrap() => {
                        return Bipartition::OddWalk(odd_walk(&parent, root, u, w));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let side = |c| g.vertices().filter(|&v| color[v] == Some(c)).collect();
    Bipartition::Coloring {
        side_a: side(0),
        side_b: side(1),
    }
}

fn odd_walk(parent: &[usize], root: usize, u: usize, w: usize) -> Vec<usize> {
    let to_root = |mut x: usize| {
        let mut p = vec![x];
        while x != root {
            x = parent[x];
            p.push(x);
        }
        p.reverse();
        p
    };
    let (pu, pw) = (to_root(u), to_root(w));
    // drop the shared prefix down to the last common ancestor
    let mut k = 0;
    while k + 1 < pu.len() && k + 1 < pw.len() && pu[k + 1] == pw[k + 1] {
        k += 1;
    }
    let mut walk: Vec<usize> = pu[k..].to_vec();
    walk.extend(pw[k..].iter().rev());
    walk
}

/// Inclusion-minimal vertex covers, as complements of maximal independent
/// sets found by pivoting Bron–Kerbosch on the complement graph.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<VertexCover> {
    let all = g.all_mask();
    let comp: Vec<u64> = (0..=g.n())
        .map(|v| {
            if v == 0 {
                0
            } else {
                !g.adj_mask(v) & all & !bit(v)
            }
        })
        .collect();
    let mut independent = Vec::new();
    bron_kerbosch(&comp, 0, all, 0, &mut independent);
    let mut out: Vec<VertexCover> = independent
        .into_iter()
        .map(|s| VertexCover::from_mask(all & !s))
        .collect();
    out.sort();
    out
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = mask_to_vec(p | x)
        .into_iter()
        .max_by_key(|&u| (p & nbr[u]).count_ones())
        .expect("p is nonempty");
    for v in mask_to_vec(p & !nbr[pivot]) {
        bron_kerbosch(nbr, r | bit(v), p & nbr[v], x & nbr[v], out);
        p &= !bit(v);
        x |= bit(v);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unmixedness {
    pub unmixed: bool,
    /// cover size -> number of minimal covers of that size
    pub sizes: BTreeMap<usize, usize>,
}

pub fn is_unmixed(g: &Graph) -> Unmixedness {
    let mut sizes = BTreeMap::new();
    for c in minimal_vertex_covers(g) {
        *sizes.entry(c.len()).or_insert(0) += 1;
    }
    Unmixedness {
        unmixed: sizes.len() == 1,
        sizes,
    }
}

/// All chordless cycles of odd length.
///
/// Each cycle starts at its smallest vertex and continues towards the
/// smaller of that vertex's two cycle neighbours. The search extends
/// chordless paths depth-first and is exponential in the worst case.
pub fn induced_odd_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in g.vertices() {
        let mut path = vec![s];
        extend_chordless(g, s, &mut path, bit(s), &mut out);
    }
    out.retain(|c| c.len() % 2 == 1);
    out.sort();
    out
}

fn extend_chordless(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    on_path: u64,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    let interior = on_path & !bit(s) & !bit(last);
    for w in g.neighbors(last) {
        if w <= s || on_path & bit(w) != 0 || g.adj_mask(w) & interior != 0 {
            continue;
        }
        if path.len() >= 2 && g.has_edge(w, s) {
            if path[1] < w {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(cycle);
            }
            continue;
        }
        path.push(w);
        extend_chordless(g, s, path, on_path | bit(w), out);
        path.pop();
    }
}

/// Every two induced odd cycles share a vertex or are joined by an edge.
pub fn odd_cycle_condition(g: &Graph) -> bool {
    odd_cycle_condition_failure(g).is_none()
}

/// A pair of induced odd cycles that are vertex-disjoint and not joined by
/// any edge, if one exists.
pub fn odd_cycle_condition_failure(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let cycles = induced_odd_cycles(g);
    let masks: Vec<u64> = cycles.iter().map(|c| vec_to_mask(c)).collect();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if masks[i] & masks[j] != 0 {
                continue;
            }
            let bridged = cycles[i].iter().any(|&u| g.adj_mask(u) & masks[j] != 0);
            if !bridged {
                return Some((cycles[i].clone(), cycles[j].clone()));
            }
        }
    }
    None
}

pub fn is_unicyclic(g: &Graph) -> bool {
    g.is_connected() && g.num_edges() == g.n()
}

/// The combinatorial type of a whiskered cycle `C(a_1, ..., a_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiskeredShape {
    pub k: usize,
    /// Whisker counts, canonicalized to the lexicographically least
    /// rotation or reflection.
    pub a: Vec<usize>,
    /// Graph vertex carrying each abstract vertex, in the order
    /// `x_1..x_k, x_{1,1}..x_{1,a_1}, x_{2,1}, ...`.
    pub vertex_map: Vec<usize>,
}

pub fn recognize_whiskered_cycle(g: &Graph) -> Option<WhiskeredShape> {
    if !is_unicyclic(g) {
        return None;
    }
    let leaves: u64 = g
        .vertices()
        .filter(|&v| g.degree(v) == 1)
        .fold(0, |m, v| m | bit(v));
    let core = g.all_mask() & !leaves;
    let core_vs = mask_to_vec(core);
    if core_vs.len() < 3 {
        return None;
    }
    if core_vs
        .iter()
        .any(|&v| (g.adj_mask(v) & core).count_ones() != 2)
    {
        return None;
    }
    // leaves hang directly off the core
    if mask_to_vec(leaves)
        .iter()
        .any(|&l| g.adj_mask(l) & core == 0)
    {
        return None;
    }
    // walk the core cycle starting from its smallest vertex
    let start = core_vs[0];
    let mut order = vec![start];
    let (mut prev, mut cur) = (0, start);
    loop {
        let nbrs = mask_to_vec(g.adj_mask(cur) & core);
        let next = if nbrs[0] == prev { nbrs[1] } else { nbrs[0] };
        if next == start || order.len() > core_vs.len() {
            break;
        }
        order.push(next);
        (prev, cur) = (cur, next);
    }
    if order.len() != core_vs.len() {
        return None;
    }
    let k = order.len();
    let whiskers: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| mask_to_vec(g.adj_mask(v) & leaves))
        .collect();

    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for reflect in [false, true] {
        for shift in 0..k {
            let idx: Vec<usize> = (0..k)
                .map(|i| {
                    if reflect {
                        (shift + k - i) % k
                    } else {
                        (shift + i) % k
                    }
                })
                .collect();
            let a: Vec<usize> = idx.iter().map(|&i| whiskers[i].len()).collect();
            let mut map: Vec<usize> = idx.iter().map(|&i| order[i]).collect();
            for &i in &idx {
                map.extend(&whiskers[i]);
            }
            let better = match &best {
                None => true,
                Some((ba, bm)) => (&a, &map) < (ba, bm),
            };
            if better {
                best = Some((a, map));
            }
        }
    }
    let (a, vertex_map) = best.unwrap();
    Some(WhiskeredShape { k, a, vertex_map })
}

/// Non-bipartite, and every vertex off any induced odd cycle has a
/// neighbour on that cycle.
pub fn dominated_odd_cycle_condition(g: &Graph) -> bool {
    let cycles = induced_odd_cycles(g);
    if cycles.is_empty() {
        return false;
    }
    cycles.iter().all(|c| {
        let m = vec_to_mask(c);
        g.vertices()
            .filter(|&v| m & bit(v) == 0)
            .all(|v| g.adj_mask(v) & m != 0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path, whiskered_cycle};

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::new(n, edges.iter().copied()).unwrap()
    }

    fn triangle_with_tail() -> Graph {
        g(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])
    }

    #[test]
    fn parse_examples() {
        let t = parse_graph("1 2\n2 3\n1 3").unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.num_edges(), 3);
        let two = parse_graph("n 4\n1 2\n3 4").unwrap();
        assert_eq!(two.n(), 4);
        assert_eq!(connected_components(&two).len(), 2);
        match parse_graph("1 1") {
            Err(Error::Parse {
                line: 1,
                kind: ParseErrorKind::LoopEdge,
            }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let cases = [
            ("1 2\n# c\n2 1", 3, ParseErrorKind::DuplicateEdge),
            ("1 2\n0 1", 2, ParseErrorKind::NonPositiveLabel),
            ("1 2\n-3 1", 2, ParseErrorKind::NonPositiveLabel),
            ("1 2\n1 2 3", 2, ParseErrorKind::Malformed),
            ("1 x", 1, ParseErrorKind::Malformed),
            ("n 2\n1 3", 2, ParseErrorKind::LabelOutOfRange(2)),
            ("n zero\n1 2", 1, ParseErrorKind::BadHeader),
        ];
        for (text, line, kind) in cases {
            match parse_graph(text) {
                Err(Error::Parse { line: l, kind: k }) => {
                    assert_eq!((l, k), (line, kind.clone()), "{text:?}");
                }
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
        assert!(matches!(
            parse_graph("n 3\n1 2"),
            Err(Error::IsolatedVertex(3))
        ));
        assert!(matches!(parse_graph("# nothing\n"), Err(Error::NoEdges)));
        assert!(matches!(
            parse_graph("1 65"),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn parse_accepts_comments_and_blank_lines() {
        let t = parse_graph("# triangle\n\nn 3 # three vertices\n1 2\t\n 2   3\n3 1 # closing\n")
            .unwrap();
        assert_eq!(t.edges(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(parse_graph(&t.to_edge_list()).unwrap(), t);
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            connected_components(&cycle(3).unwrap()),
            vec![vec![1, 2, 3]]
        );
        assert_eq!(
            connected_components(&g(4, &[(1, 2), (3, 4)])),
            vec![vec![1, 2], vec![3, 4]]
        );
        assert_eq!(
            connected_components(&cycle(6).unwrap()),
            vec![(1..=6).collect::<Vec<_>>()]
        );
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            bipartition(&cycle(4).unwrap()),
            Bipartition::Coloring {
                side_a: vec![1, 3],
                side_b: vec![2, 4]
            }
        );
        assert_eq!(
            bipartition(&cycle(3).unwrap()),
            Bipartition::OddWalk(vec![1, 2, 3, 1])
        );
        assert_eq!(
            bipartition(&cycle(6).unwrap()),
            Bipartition::Coloring {
                side_a: vec![1, 3, 5],
                side_b: vec![2, 4, 6]
            }
        );
    }

    #[test]
    fn odd_walk_is_a_closed_odd_walk() {
        for graph in [
            cycle(7).unwrap(),
            triangle_with_tail(),
            whiskered_cycle(&[1, 0, 2, 0, 1]).unwrap(),
        ] {
            let Bipartition::OddWalk(w) = bipartition(&graph) else {
                panic!("odd graph colored")
            };
            assert_eq!(w.first(), w.last());
            assert_eq!((w.len() - 1) % 2, 1);
            assert!(w.windows(2).all(|p| graph.has_edge(p[0], p[1])));
        }
    }

    #[test]
    fn covers_examples() {
        let c6: Vec<Vec<usize>> = minimal_vertex_covers(&cycle(6).unwrap())
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect();
        assert!(c6.contains(&vec![1, 3, 5]));
        assert!(c6.contains(&vec![1, 2, 4, 5]));
        let c3: Vec<Vec<usize>> = minimal_vertex_covers(&cycle(3).unwrap())
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect();
        assert_eq!(c3, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let w = minimal_vertex_covers(&whiskered_cycle(&[1, 1, 1]).unwrap());
        assert_eq!(w.len(), 4);
        assert!(w.iter().all(|c| c.len() == 3));
        assert!(w.iter().any(|c| c.vertices() == [1, 2, 3]));
    }

    #[test]
    fn unmixed_examples() {
        let c5 = is_unmixed(&cycle(5).unwrap());
        assert!(c5.unmixed);
        assert_eq!(c5.sizes, BTreeMap::from([(3, 5)]));
        let c6 = is_unmixed(&cycle(6).unwrap());
        assert!(!c6.unmixed);
        assert!(c6.sizes.contains_key(&3) && c6.sizes.contains_key(&4));
        let c9 = is_unmixed(&cycle(9).unwrap());
        assert!(!c9.unmixed);
        assert!(c9.sizes.contains_key(&5) && c9.sizes.contains_key(&6));
    }

    #[test]
    fn odd_cycle_examples() {
        assert_eq!(
            induced_odd_cycles(&cycle(5).unwrap()),
            vec![vec![1, 2, 3, 4, 5]]
        );
        assert!(induced_odd_cycles(&cycle(4).unwrap()).is_empty());
        let bridged = g(
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
        );
        assert_eq!(
            induced_odd_cycles(&bridged),
            vec![vec![1, 2, 3], vec![4, 5, 6]]
        );
        assert!(!odd_cycle_condition(&bridged));
        assert!(odd_cycle_condition(&cycle(3).unwrap()));
        assert!(odd_cycle_condition(&cycle(8).unwrap()));
    }

    #[test]
    fn chordless_cycles_skip_chorded_ones() {
        // K4 has four triangles and no induced 4-cycle
        let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(induced_odd_cycles(&k4).len(), 4);
        // C5 plus the chord 1-3: triangle 1-2-3 and induced C4 1-3-4-5
        let chorded = g(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3)]);
        assert_eq!(induced_odd_cycles(&chorded), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn unicyclic_examples() {
        assert!(is_unicyclic(&whiskered_cycle(&[3, 2, 1, 0, 1]).unwrap()));
        assert!(is_unicyclic(&cycle(4).unwrap()));
        assert!(!is_unicyclic(&path(3).unwrap()));
    }

    #[test]
    fn whiskered_recognition_examples() {
        let fig = whiskered_cycle(&[3, 2, 1, 0, 1]).unwrap();
        assert_eq!(fig.n(), 12);
        let shape = recognize_whiskered_cycle(&fig).unwrap();
        assert_eq!(shape.k, 5);
        assert_eq!(shape.a, vec![0, 1, 2, 3, 1]);
        assert_eq!(
            recognize_whiskered_cycle(&cycle(5).unwrap()).unwrap().a,
            vec![0; 5]
        );
        assert!(recognize_whiskered_cycle(&triangle_with_tail()).is_none());
        assert!(recognize_whiskered_cycle(&path(4).unwrap()).is_none());
    }

    #[test]
    fn whiskered_vertex_map_is_an_isomorphism() {
        let graph = whiskered_cycle(&[2, 0, 1, 1]).unwrap();
        let shape = recognize_whiskered_cycle(&graph).unwrap();
        let abstract_graph = whiskered_cycle(&shape.a).unwrap();
        let mapped: BTreeSet<(usize, usize)> = abstract_graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (x, y) = (shape.vertex_map[u - 1], shape.vertex_map[v - 1]);
                (x.min(y), x.max(y))
            })
            .collect();
        assert_eq!(mapped, graph.edges().iter().copied().collect());
    }

    #[test]
    fn dominated_examples() {
        assert!(dominated_odd_cycle_condition(
            &whiskered_cycle(&[1, 2, 0]).unwrap()
        ));
        assert!(dominated_odd_cycle_condition(
            &whiskered_cycle(&[0, 1, 0, 2, 1]).unwrap()
        ));
        assert!(!dominated_odd_cycle_condition(&triangle_with_tail()));
        assert!(!dominated_odd_cycle_condition(&cycle(4).unwrap()));
    }
}
