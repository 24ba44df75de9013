//! Divisor class group, canonical class and the Gorenstein property.
//!
//! With `P_1, ..., P_r` the height-one primes containing `t` and
//! `f_i = sum_j c_{i,j} x_j` their support forms, `Cl(R_G)` is generated by
//! the `[P_i]` subject to the single relation `sum_i c_{i,n+1} [P_i] = 0`,
//! and `[Q_j] = -sum_i c_{i,j} [P_i]`. Classes are stored as coefficient
//! vectors over the `[P_i]`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::cone::SupportForm;
use crate::error::{Error, Result};
use crate::graph::{is_unmixed, recognize_whiskered_cycle, Graph};
use crate::lattice::{smith_normal_form, IntMatrix, IntVector};
use crate::primes::{primes_of_ring, ClassifiedPrime};
use crate::ring::ToricRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGroupPresentation {
    /// Number of height-one primes containing `t`.
    pub r: usize,
    /// `rho_i = c_{i,n+1}`.
    pub relation: Vec<i64>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DivisorClass {
    pub coeffs: Vec<i64>,
}

impl ClassGroupPresentation {
    /// Whether `u - v` is an integer multiple of the relation.
    pub fn equivalent(&self, u: &DivisorClass, v: &DivisorClass) -> bool {
        let d: Vec<i64> = u.coeffs.iter().zip(&v.coeffs).map(|(x, y)| x - y).collect();
        self.multiple_of_relation(&d).is_some()
    }

    pub fn is_zero(&self, u: &DivisorClass) -> bool {
        self.multiple_of_relation(&u.coeffs).is_some()
    }

    /// The integer `a` with `d = a * rho`, if any.
    pub fn multiple_of_relation(&self, d: &[i64]) -> Option<i64> {
        if d.len() != self.r {
            return None;
        }
        let a = d[0].checked_div(self.relation[0])?;
        (d.iter().zip(&self.relation).all(|(x, rho)| *x == a * rho)).then_some(a)
    }

    pub fn add(&self, u: &DivisorClass, v: &DivisorClass) -> DivisorClass {
        DivisorClass {
            coeffs: u.coeffs.iter().zip(&v.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    /// The class `[P_i]`.
    pub fn generator(&self, i: usize) -> DivisorClass {
        let mut coeffs = vec![0; self.r];
        coeffs[i] = 1;
        DivisorClass { coeffs }
    }
}

/// Presentation of `Cl(R_G)` from the support forms of the primes
/// containing `t`.
pub fn class_group(forms: &[SupportForm]) -> Result<ClassGroupPresentation> {
    if forms.is_empty() {
        return Err(Error::Precondition("no primes containing t".into()));
    }
    let relation: Vec<i64> = forms.iter().map(SupportForm::t_coeff).collect();
    if let Some(bad) = forms.iter().find(|f| f.t_coeff() < 1) {
        return Err(Error::Invariant(format!("{bad:?} does not contain t")));
    }
    let snf = smith_normal_form(&IntMatrix::new(
        vec![IntVector::from_i64(&relation)],
        relation.len(),
    ));
    if snf != [BigInt::one()] {
        return Err(Error::Invariant(format!(
            "relation {relation:?} is not primitive"
        )));
    }
    Ok(ClassGroupPresentation {
        r: forms.len(),
        relation,
        rank: forms.len() - 1,
    })
}

/// `[Q_j] = -sum_i c_{i,j} [P_i]`, for `1 <= j <= n`.
pub fn q_class(
    j: usize,
    pres: &ClassGroupPresentation,
    forms: &[SupportForm],
) -> Result<DivisorClass> {
    let n = forms.first().map_or(0, |f| f.dim() - 1);
    if j == 0 || j > n || forms.len() != pres.r {
        return Err(Error::Precondition(format!("vertex {j} out of range")));
    }
    Ok(DivisorClass {
        coeffs: forms.iter().map(|f| -f.vertex_coeff(j)).collect(),
    })
}

/// `kappa_i = 1 - sum_{j <= n} c_{i,j}`.
pub fn canonical_class(
    pres: &ClassGroupPresentation,
    forms: &[SupportForm],
) -> Result<DivisorClass> {
    if forms.len() != pres.r {
        return Err(Error::Precondition(
            "forms do not match the presentation".into(),
        ));
    }
    Ok(DivisorClass {
        coeffs: forms
            .iter()
            .map(|f| 1 - f.as_i64()[..f.dim() - 1].iter().sum::<i64>())
            .collect(),
    })
}

/// Support forms of the primes containing `t`, in listing order.
pub fn t_forms(primes: &[ClassifiedPrime]) -> Vec<SupportForm> {
    primes
        .iter()
        .filter(|p| p.prime.contains_t)
        .map(|p| p.prime.form.clone())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    /// The `a` with `kappa = a * rho`.
    pub a: Option<i64>,
    /// For connected bipartite graphs: whether `G` is unmixed.
    pub bipartite_fast_path: Option<bool>,
    /// For whiskered odd cycles: whether `n` is odd and `G` is unmixed.
    pub odd_shape_fast_path: Option<bool>,
}

pub fn is_gorenstein(g: &Graph) -> Result<GorensteinVerdict> {
    let ring = ToricRing::normal(g)?;
    gorenstein_of_ring(&ring, &primes_of_ring(&ring)?)
}

/// Decides `kappa = a * rho` and checks the result against the structural
/// shortcuts where they apply; a mismatch is an [`Error::Invariant`].
pub fn gorenstein_of_ring(
    ring: &ToricRing,
    primes: &[ClassifiedPrime],
) -> Result<GorensteinVerdict> {
    let g = ring.graph();
    let forms = t_forms(primes);
    let pres = class_group(&forms)?;
    let kappa = canonical_class(&pres, &forms)?;
    let a = pres.multiple_of_relation(&kappa.coeffs);
    let gorenstein = a.is_some();

    let unmixed = || is_unmixed(g).unmixed;
    let bipartite_fast_path = (g.is_connected() && g.is_bipartite()).then(unmixed);
    let odd_shape_fast_path = recognize_whiskered_cycle(g)
        .filter(|s| s.k % 2 == 1)
        .map(|_| g.n() % 2 == 1 && unmixed());
    for (name, fast) in [
        ("bipartite", bipartite_fast_path),
        ("whiskered odd cycle", odd_shape_fast_path),
    ] {
        if fast.is_some_and(|f| f != gorenstein) {
            return Err(Error::Invariant(format!(
                "{name} shortcut disagrees with kappa = a rho"
            )));
        }
    }
    Ok(GorensteinVerdict {
        gorenstein,
        a,
        bipartite_fast_path,
        odd_shape_fast_path,
    })
}
