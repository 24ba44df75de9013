//! Brute-force re-derivations of the polyhedral and combinatorial steps.
//!
//! Everything here is exponential and meant for small instances. None of it
//! shares code with the algorithms it checks beyond the generator list.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::cone::{graph_facets, semigroup_generators, FaceLabel, LatticePoint, SupportForm};
use crate::error::Result;
use crate::graph::{bit, covers, mask_to_vec, minimal_vertex_covers, Graph, VertexCover};
use crate::normality::{cross_check_normality, NormalityAgreement};
use crate::primes::primes_of_ring;
use crate::ring::ToricRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub subject: String,
    pub instance: String,
    pub agreement: bool,
    pub discrepancy: Option<String>,
}

impl OracleReport {
    fn new(subject: &str, g: &Graph, discrepancy: Option<String>) -> OracleReport {
        OracleReport {
            subject: subject.to_string(),
            instance: describe(g),
            agreement: discrepancy.is_none(),
            discrepancy,
        }
    }
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn reduce(row: &mut [i128]) {
    let g = row.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        row.iter_mut().for_each(|x| *x /= g);
    }
}

/// Rows in echelon form, with pivot columns, grown one generator at a time.
struct Echelon {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Echelon {
    /// Reduces `v` against the current rows; `None` if it is dependent.
    fn reduce(&self, v: &[i64]) -> Option<(usize, Vec<i128>)> {
        let mut r: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, row) in &self.rows {
            if r[*p] != 0 {
                let (a, b) = (row[*p], r[*p]);
                r.iter_mut().zip(row).for_each(|(x, y)| *x = a * *x - b * y);
                reduce(&mut r);
            }
        }
        let p = r.iter().position(|&x| x != 0)?;
        Some((p, r))
    }

    /// The primitive normal of a hyperplane spanned by `dim - 1` rows.
    fn normal(&self, dim: usize) -> Vec<i64> {
        // back-substitute into reduced row echelon form
        let mut rows: Vec<(usize, Vec<i128>)> = self.rows.clone();
        rows.sort_by_key(|(p, _)| *p);
        for i in (0..rows.len()).rev() {
            let (p, pivot_row) = rows[i].clone();
            for (_, row) in rows.iter_mut().take(i) {
                if row[p] != 0 {
                    let (a, b) = (pivot_row[p], row[p]);
                    row.iter_mut()
                        .zip(&pivot_row)
                        .for_each(|(x, y)| *x = a * *x - b * y);
                    reduce(row);
                }
            }
        }
        let pivots: HashSet<usize> = rows.iter().map(|(p, _)| *p).collect();
        let free = (0..dim)
            .find(|c| !pivots.contains(c))
            .expect("one free column");
        let l = rows.iter().fold(1i128, |l, (p, row)| {
            let a = row[*p].abs();
            l / gcd(l, a) * a
        });
        let mut x = vec![0i128; dim];
        x[free] = l;
        for (p, row) in &rows {
            x[*p] = -row[free] * l / row[*p];
        }
        reduce(&mut x);
        x.into_iter().map(|v| v as i64).collect()
    }
}

/// Every hyperplane spanned by generators that leaves all generators on
/// one side, found by trying each independent `(dim - 1)`-subset.
pub fn brute_facets(gens: &[LatticePoint]) -> Vec<SupportForm> {
    let dim = gens.first().map_or(0, LatticePoint::dim);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut out = BTreeSet::new();
    let mut ech = Echelon { rows: Vec::new() };
    subsets(gens, dim, 0, &mut ech, &mut seen, &mut out);
    out.into_iter().collect()
}

fn subsets(
    gens: &[LatticePoint],
    dim: usize,
    start: usize,
    ech: &mut Echelon,
    seen: &mut HashSet<Vec<i64>>,
    out: &mut BTreeSet<SupportForm>,
) {
    if ech.rows.len() + 1 == dim {
        let mut h = ech.normal(dim);
        if !seen.insert(h.clone()) {
            return;
        }
        let values: Vec<i64> = gens
            .iter()
            .map(|p| p.coords().iter().zip(&h).map(|(x, y)| x * y).sum())
            .collect();
        if values.iter().all(|&v| v <= 0) {
            h.iter_mut().for_each(|x| *x = -*x);
        } else if values.iter().any(|&v| v < 0) {
            return;
        }
        out.insert(SupportForm::from_i64(&h).expect("nonzero normal"));
        return;
    }
    let missing = dim - 1 - ech.rows.len();
    for i in start..gens.len() {
        if gens.len() - i < missing {
            break;
        }
        if let Some(row) = ech.reduce(gens[i].coords()) {
            ech.rows.push(row);
            subsets(gens, dim, i + 1, ech, seen, out);
            ech.rows.pop();
        }
    }
}

/// Minimal vertex covers by testing every vertex subset.
pub fn brute_minimal_covers(g: &Graph) -> Vec<VertexCover> {
    let mut out: Vec<VertexCover> = (0u64..1 << g.n())
        .filter(|&m| covers(g, m) && mask_to_vec(m).into_iter().all(|v| !covers(g, m & !bit(v))))
        .map(VertexCover::from_mask)
        .collect();
    out.sort();
    out
}

fn add(p: &[i64], q: &[i64]) -> Vec<i64> {
    p.iter().zip(q).map(|(x, y)| x + y).collect()
}

/// For every product of at most `d_max` generators, the set of ideals
/// (bit `k` for `ideals[k]`) that contain it. A product lies in the ideal
/// generated by some generators exactly when one of its factorizations uses
/// one of them.
fn membership_table(
    ideals: &[BTreeSet<FaceLabel>],
    gens: &[(FaceLabel, LatticePoint)],
    d_max: usize,
) -> Vec<HashMap<Vec<i64>, u128>> {
    assert!(ideals.len() <= 128, "at most 128 ideals");
    let gen_masks: Vec<u128> = gens
        .iter()
        .map(|(f, _)| {
            ideals
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(f))
                .fold(0, |m, (k, _)| m | 1 << k)
        })
        .collect();
    let dim = gens.first().map_or(0, |(_, p)| p.dim());
    let mut table = vec![HashMap::from([(vec![0i64; dim], 0u128)])];
    for d in 1..=d_max {
        let mut next: HashMap<Vec<i64>, u128> = HashMap::new();
        for (p, mask) in &table[d - 1] {
            for ((_, q), gm) in gens.iter().zip(&gen_masks) {
                *next.entry(add(p, q.coords())).or_insert(0) |= mask | gm;
            }
        }
        table.push(next);
    }
    table
}

/// Whether the products of at most `d_max` generators outside the ideal
/// generated by `faces` are closed under multiplication.
pub fn brute_prime_test(
    faces: &BTreeSet<FaceLabel>,
    gens: &[(FaceLabel, LatticePoint)],
    d_max: usize,
) -> bool {
    let table = membership_table(std::slice::from_ref(faces), gens, d_max);
    let outside: Vec<Vec<&Vec<i64>>> = table
        .iter()
        .map(|t| t.iter().filter(|(_, &m)| m == 0).map(|(p, _)| p).collect())
        .collect();
    for d1 in 1..=d_max {
        for d2 in d1..=d_max - d1 {
            for u in &outside[d1] {
                for v in &outside[d2] {
                    if table[d1 + d2][&add(u, v)] != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `dim ω_b` for `b = 0..=b_max`, counting the products of generators that
/// lie in every one of the given primes.
pub fn brute_omega_counts(
    primes: &[BTreeSet<FaceLabel>],
    gens: &[(FaceLabel, LatticePoint)],
    b_max: usize,
) -> Vec<usize> {
    let all = if primes.len() == 128 {
        u128::MAX
    } else {
        (1u128 << primes.len()) - 1
    };
    membership_table(primes, gens, b_max)
        .iter()
        .map(|t| t.values().filter(|&&m| m == all).count())
        .collect()
}

pub fn check_facets(g: &Graph) -> Result<OracleReport> {
    let gens: Vec<LatticePoint> = semigroup_generators(g)
        .into_iter()
        .map(|(_, p)| p)
        .collect();
    let mut fast = graph_facets(g)?;
    fast.sort();
    let brute = brute_facets(&gens);
    let discrepancy =
        (fast != brute).then(|| format!("double description {fast:?}, exhaustion {brute:?}"));
    Ok(OracleReport::new("facets", g, discrepancy))
}

pub fn check_minimal_covers(g: &Graph) -> OracleReport {
    let fast = minimal_vertex_covers(g);
    let brute = brute_minimal_covers(g);
    let discrepancy = (fast != brute).then(|| format!("enumeration {fast:?}, subsets {brute:?}"));
    OracleReport::new("minimal-covers", g, discrepancy)
}

/// Every facet prime passes [`brute_prime_test`].
pub fn check_primes(ring: &ToricRing, d_max: usize) -> Result<OracleReport> {
    let failing: Vec<String> = primes_of_ring(ring)?
        .iter()
        .filter(|p| !brute_prime_test(&p.prime.generator_faces, ring.generators(), d_max))
        .map(|p| format!("{:?}", p.prime.form))
        .collect();
    let discrepancy = (!failing.is_empty()).then(|| format!("not closed: {}", failing.join(", ")));
    Ok(OracleReport::new(
        "prime-closure",
        ring.graph(),
        discrepancy,
    ))
}

/// Interior point counts against the intersection of the facet primes.
pub fn check_omega(ring: &ToricRing, b_max: usize) -> Result<OracleReport> {
    let primes: Vec<BTreeSet<FaceLabel>> = primes_of_ring(ring)?
        .into_iter()
        .map(|p| p.prime.generator_faces)
        .collect();
    let brute = brute_omega_counts(&primes, ring.generators(), b_max);
    let fast = crate::omega::omega_hilbert(ring, b_max as i64)?;
    let discrepancy =
        (fast != brute).then(|| format!("interior points {fast:?}, intersection {brute:?}"));
    Ok(OracleReport::new("omega-counts", ring.graph(), discrepancy))
}

/// Combinatorial normality against bounded saturation. An inconclusive
/// outcome counts as agreement and is noted.
pub fn check_normality(g: &Graph, b_max: usize) -> Result<OracleReport> {
    let mut report = OracleReport::new("normality", g, None);
    match cross_check_normality(g, b_max)? {
        NormalityAgreement::Agree => {}
        NormalityAgreement::Inconclusive => report.subject.push_str(" (inconclusive)"),
        NormalityAgreement::Disagree => {
            report.agreement = false;
            report.discrepancy = Some(format!(
                "normal by criterion, gap found below degree {b_max}"
            ));
        }
    }
    Ok(report)
}
