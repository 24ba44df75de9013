//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers. Matrices are
//! small (a few dozen columns at most), so the algorithms favour clarity
//! over asymptotics: unimodular row reduction for kernels and rank, and the
//! textbook pivot-and-clear loop for the Smith normal form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A fixed-length vector of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(len: usize) -> Self {
        IntVector(vec![BigInt::zero(); len])
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.len(), other.len(), "dot product of mismatched lengths");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Dot product against a small-integer point.
    pub fn dot_i64(&self, point: &[i64]) -> BigInt {
        assert_eq!(self.len(), point.len(), "dot product of mismatched lengths");
        self.0
            .iter()
            .zip(point)
            .filter(|(_, &p)| p != 0)
            .map(|(a, &p)| a * p)
            .sum()
    }

    /// `a * self + b * other`
    pub fn combine(a: &BigInt, x: &IntVector, b: &BigInt, y: &IntVector) -> IntVector {
        assert_eq!(x.len(), y.len());
        IntVector(x.0.iter().zip(&y.0).map(|(u, v)| a * u + b * v).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.len(), other.len());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    /// gcd of the absolute values of all entries (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn to_i64_vec(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|x| x.to_i64().ok_or(Error::Overflow))
            .collect()
    }
}

impl std::ops::Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A rectangular integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    /// Panics if the rows are not all of width `ncols`.
    pub fn new(rows: Vec<IntVector>, ncols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        IntMatrix { rows, ncols }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], ncols: usize) -> Self {
        IntMatrix::new(rows.iter().map(|r| IntVector::from_i64(r)).collect(), ncols)
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                let mut v = IntVector::zeros(n);
                v.0[i] = BigInt::one();
                v
            })
            .collect();
        IntMatrix { rows, ncols: n }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn mul_vec(&self, v: &IntVector) -> IntVector {
        IntVector(self.rows.iter().map(|r| r.dot(v)).collect())
    }

    pub fn transpose(&self) -> IntMatrix {
        let rows = (0..self.ncols)
            .map(|j| IntVector(self.rows.iter().map(|r| r.0[j].clone()).collect()))
            .collect();
        IntMatrix {
            rows,
            ncols: self.rows.len(),
        }
    }
}

/// Divides `v` by the gcd of its entries. The sign pattern is preserved.
pub fn primitive_normalize(v: &IntVector) -> Result<IntVector> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(IntVector(v.0.iter().map(|x| x / &g).collect()))
}

/// Row-reduces `work` in place with unimodular operations applied to the
/// pairs `(work[r], companion[r])`, looking only at the first `width`
/// columns of `work`. Returns the number of pivot rows; rows from that index
/// on are zero in `work`.
fn unimodular_echelon(
    work: &mut [Vec<BigInt>],
    companion: &mut [Vec<BigInt>],
    width: usize,
) -> usize {
    let nrows = work.len();
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == nrows {
            break;
        }
        loop {
            // smallest nonzero entry in this column at or below pivot_row
            let best = (pivot_row..nrows)
                .filter(|&r| !work[r][col].is_zero())
                .min_by(|&a, &b| work[a][col].abs().cmp(&work[b][col].abs()));
            let Some(best) = best else { break };
            work.swap(pivot_row, best);
            companion.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..nrows {
                if work[r][col].is_zero() {
                    continue;
                }
                let q = work[r][col].div_floor(&work[pivot_row][col]);
                for c in 0..work[r].len() {
                    let delta = &q * &work[pivot_row][c];
                    work[r][c] -= delta;
                }
                for c in 0..companion[r].len() {
                    let delta = &q * &companion[pivot_row][c];
                    companion[r][c] -= delta;
                }
                if !work[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot_row += 1;
                break;
            }
        }
    }
    pivot_row
}

/// A lattice basis of the integer kernel `{v : m v = 0}`.
///
/// The basis is saturated: any integer kernel vector is an integer
/// combination of the returned vectors.
pub fn kernel_basis(m: &IntMatrix) -> Vec<IntVector> {
    let k = m.ncols();
    // rows of m^T, each tracked by the unimodular transform acting on them
    let mut work: Vec<Vec<BigInt>> = m.transpose().rows.into_iter().map(|r| r.0).collect();
    let mut transform: Vec<Vec<BigInt>> = IntMatrix::identity(k)
        .rows
        .into_iter()
        .map(|r| r.0)
        .collect();
    let width = m.nrows();
    if width == 0 {
        return transform.into_iter().map(IntVector).collect();
    }
    let rank = unimodular_echelon(&mut work, &mut transform, width);
    transform.into_iter().skip(rank).map(IntVector).collect()
}

pub fn rank(m: &IntMatrix) -> usize {
    m.ncols() - kernel_basis(m).len()
}

/// Elementary divisors `d_1 | d_2 | ...` of `m` (nonzero ones only, positive).
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a: Vec<Vec<BigInt>> = m.rows.iter().map(|r| r.0.clone()).collect();
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut invariants = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        let pivot = (t..nr)
            .flat_map(|i| (t..nc).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i1, j1), &(i2, j2)| a[i1][j1].abs().cmp(&a[i2][j2].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..nc {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..nc {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..nr {
                    let delta = &q * &a[i][t];
                    a[i][j] -= delta;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if clean {
                // the pivot must divide the rest of the block
                let offender = (t + 1..nr)
                    .flat_map(|i| (t + 1..nc).map(move |j| (i, j)))
                    .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
                match offender {
                    None => break,
                    Some((i, _)) => {
                        for j in t..nc {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                }
            }
            // move the smallest entry of row/column t onto the diagonal
            let best_row = (t..nr)
                .filter(|&i| !a[i][t].is_zero())
                .min_by(|&x, &y| a[x][t].abs().cmp(&a[y][t].abs()));
            let best_col = (t..nc)
                .filter(|&j| !a[t][j].is_zero())
                .min_by(|&x, &y| a[t][x].abs().cmp(&a[t][y].abs()));
            match (best_row, best_col) {
                (Some(i), Some(j)) => {
                    if a[i][t].abs() < a[t][j].abs() {
                        a.swap(t, i);
                    } else {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
                (Some(i), None) => a.swap(t, i),
                (None, Some(j)) => {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                }
                (None, None) => unreachable!("pivot vanished"),
            }
        }
        invariants.push(a[t][t].abs());
        t += 1;
    }
    invariants
}
