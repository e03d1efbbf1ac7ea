//! Unimodular triangulations of toric-interval polytopes and the
//! subdivision of linked ones.
//!
//! The cube `[0,1]^n` is cut into the order simplices
//! `0 <= x_{w(1)} <= ... <= x_{w(n)} <= 1`. The map `phi` sends the simplex of
//! `w` affinely onto a lattice simplex via
//! `y_n = x_1`, `y_{n-i} = x_{i+1} - x_i + [w^-1(i+1) < w^-1(i)]`,
//! and the image lands in `P(Delta[S, S u {n}])` for
//! `S = {n - d : d in des(w^-1)}`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::LpdmSpec;
use crate::order::gale_leq;
use crate::perm::{count_perms_with_descent_set, factorial_big, permutations_with_descent_set, Permutation};
use crate::polytope::is_linked;
use crate::rational::{Rational, RationalPoint};
use crate::subset::{Profile, SubsetMask};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeSimplex {
    pub perm: Permutation,
    pub vertices: Vec<Vec<i64>>,
}

impl LatticeSimplex {
    pub fn dim(&self) -> usize {
        self.perm.n()
    }

    pub fn vertex_points(&self) -> Vec<RationalPoint> {
        self.vertices.iter().map(|v| RationalPoint::from_ints(v)).collect()
    }

    /// Sum of the vertices; `n + 1` times the barycenter.
    pub fn vertex_sum(&self) -> Vec<i64> {
        let mut s = vec![0; self.dim()];
        for v in &self.vertices {
            for (a, b) in s.iter_mut().zip(v) {
                *a += b;
            }
        }
        s
    }
}

/// Fractional parts of the prefix sums.
pub fn stanley_psi(x: &RationalPoint) -> Result<RationalPoint> {
    let zero = Rational::zero();
    let one = Rational::from_integer(BigInt::from(1));
    if x.coords().iter().any(|c| *c < zero || *c > one) {
        return Err(Error::arg(format!("{x} is not in the unit cube")));
    }
    let mut prefix = Rational::zero();
    let coords = x
        .coords()
        .iter()
        .map(|c| {
            prefix += c;
            &prefix - prefix.floor()
        })
        .collect();
    Ok(RationalPoint::new(coords))
}

/// Vertices of the order simplex of `w`: `e_{w(k+1)} + ... + e_{w(n)}`, `k = 0..n`.
fn order_simplex(w: &Permutation) -> Vec<Vec<i64>> {
    let n = w.n();
    (0..=n)
        .map(|k| {
            let mut v = vec![0; n];
            for j in k + 1..=n {
                v[w.at(j) - 1] = 1;
            }
            v
        })
        .collect()
}

pub fn phi_simplex(w: &Permutation) -> LatticeSimplex {
    let n = w.n();
    let inv = w.inverse();
    let shift: Vec<i64> = (1..n).map(|i| (inv.at(i + 1) < inv.at(i)) as i64).collect();
    let vertices = order_simplex(w)
        .into_iter()
        .map(|x| {
            let mut y = vec![0; n];
            if n > 0 {
                y[n - 1] = x[0];
            }
            for i in 1..n {
                y[n - i - 1] = x[i] - x[i - 1] + shift[i - 1];
            }
            y
        })
        .collect();
    LatticeSimplex { perm: w.clone(), vertices }
}

/// The `S` with `phi(w)` inside `P(Delta[S, S u {n}])`, read off the simplex:
/// `|S_{>=i}|` is the least `i`-th suffix sum over its vertices.
pub fn snake_label(w: &Permutation) -> SubsetMask {
    let s = phi_simplex(w);
    let n = w.n();
    let counts = (1..=n)
        .map(|i| s.vertices.iter().map(|v| v[i - 1..].iter().sum::<i64>()).min().unwrap_or(0) as usize)
        .collect();
    Profile::from_counts(counts).expect("suffix minima form a profile").to_subset()
}

/// `{n - d : d in des(w^-1)}`, the cell containing `phi(w)`.
pub fn cell_label(w: &Permutation) -> SubsetMask {
    let n = w.n();
    let d = w.inverse().descent_set();
    SubsetMask::from_members(n, d.members().map(|i| n - i)).expect("reflected descents lie in [n-1]")
}

fn reflect_within(s: &SubsetMask) -> SubsetMask {
    let n = s.n();
    SubsetMask::from_members(n, s.members().map(|i| n - i)).expect("reflected members lie in [n-1]")
}

/// `S` when `m = Delta[S, S u {n}]` with `n notin S`.
pub fn toric_base(m: &LpdmSpec) -> Option<SubsetMask> {
    let n = m.n();
    let s = m.lower();
    (n >= 1 && !s.contains(n) && m.upper() == s.with(n)).then_some(s)
}

pub fn triangulate_toric(m: &LpdmSpec) -> Result<Vec<LatticeSimplex>> {
    let s = toric_base(m).ok_or_else(|| Error::domain(format!("{m} is not a toric interval [S, S u {{n}}]")))?;
    // cell_label(w) = S  iff  des(w^-1) = n - S
    let mut perms: Vec<Permutation> =
        permutations_with_descent_set(&reflect_within(&s))?.iter().map(Permutation::inverse).collect();
    perms.sort();
    Ok(perms.par_iter().map(phi_simplex).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Subdivision {
    pub cells: Vec<LpdmSpec>,
}

/// Cells `Delta[R, R u {n}]` for `S <= R <= T - {n}`, `R` a subset of `[n-1]`.
pub fn subdivide(m: &LpdmSpec) -> Result<Subdivision> {
    let n = m.n();
    if n == 0 {
        return Err(Error::arg("subdivision needs n >= 1"));
    }
    if !is_linked(m) {
        return Err(Error::domain(format!("{m} is not linked")));
    }
    let top = m.upper().without(n);
    let mut rs: Vec<SubsetMask> = SubsetMask::all(n - 1)
        .map(|r| r.extend(n))
        .filter(|r| gale_leq(&m.lower(), r).unwrap_or(false) && gale_leq(r, &top).unwrap_or(false))
        .collect();
    rs.sort();
    let cells = rs
        .into_iter()
        .map(|r| LpdmSpec::with_ground(m.ground().to_vec(), r, r.with(n)))
        .collect::<Result<_>>()?;
    Ok(Subdivision { cells })
}

/// `sum_R beta_n(R) / n!` over the subdivision cells; zero when not linked.
pub fn volume(m: &LpdmSpec) -> Result<Rational> {
    let n = m.n();
    if n == 0 {
        return Ok(Rational::from_integer(BigInt::from(1)));
    }
    if !is_linked(m) {
        return Ok(Rational::zero());
    }
    let cells = subdivide(m)?.cells;
    let mut total = BigInt::zero();
    for c in &cells {
        total += BigInt::from(count_perms_with_descent_set(&c.lower())?);
    }
    Ok(Rational::new(total, BigInt::from(factorial_big(n))))
}
