//! Independent ground truth: Ehrhart counting for volumes, determinants for
//! simplices, and exact linear programming for hull membership and edges.

pub mod brute;
pub mod lp;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::factorial_big;
use crate::polytope::HRep;
use crate::rational::{Rational, RationalPoint};
use crate::triangulation::LatticeSimplex;
use lp::LpOutcome;

/// Counts up to `u64` serialize as JSON numbers, larger ones as strings.
pub fn serialize_count<S: Serializer>(c: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match c.to_u64() {
        Some(v) => s.serialize_u64(v),
        None => s.collect_str(c),
    }
}

/// Integer points `x in {0..t}^n` with `t lo_i <= x_i + ... + x_n <= t hi_i`.
///
/// Dynamic programme over the running suffix sum, from `x_n` back to `x_1`.
pub fn count_suffix_box_points(lo: &[usize], hi: &[usize], t: u64) -> BigUint {
    let n = lo.len();
    assert_eq!(n, hi.len());
    let t = t as usize;
    let width = n * t + 1;
    let mut ways = vec![BigUint::zero(); width];
    ways[0] = BigUint::one();
    for i in (0..n).rev() {
        let (min, max) = (t * lo[i], (t * hi[i]).min(width - 1));
        let mut next = vec![BigUint::zero(); width];
        for (s, w) in ways.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for x in 0..=t {
                let s2 = s + x;
                if s2 > max {
                    break;
                }
                if s2 >= min {
                    next[s2] += w;
                }
            }
        }
        ways = next;
    }
    ways.into_iter().sum()
}

pub fn count_lattice_points(h: &HRep, t: u64) -> BigUint {
    count_suffix_box_points(h.lower().counts(), h.upper().counts(), t)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartEntry {
    pub t: u64,
    #[serde(serialize_with = "serialize_count")]
    pub count: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartTable {
    pub counts: Vec<EhrhartEntry>,
}

impl EhrhartTable {
    /// Counts at `t = 0..=max_t`.
    pub fn compute(h: &HRep, max_t: u64) -> Self {
        EhrhartTable { counts: (0..=max_t).map(|t| EhrhartEntry { t, count: count_lattice_points(h, t) }).collect() }
    }
}

/// A polynomial with exact coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial(pub Vec<Rational>);

impl Polynomial {
    pub fn eval(&self, t: i64) -> Rational {
        let t = Rational::from_integer(BigInt::from(t));
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * &t + c)
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|c| c.to_string()))
    }
}

/// Interpolates values at `t = 0..values.len()-1` through Newton forward
/// differences, `p(t) = sum_k D^k p(0) C(t, k)`.
pub fn interpolate(values: &[BigUint]) -> Polynomial {
    let d = values.len();
    let mut diffs: Vec<BigInt> = values.iter().map(|v| BigInt::from(v.clone())).collect();
    let mut leading = Vec::with_capacity(d);
    for k in 0..d {
        leading.push(diffs[0].clone());
        for j in 0..d - k - 1 {
            diffs[j] = &diffs[j + 1] - &diffs[j];
        }
    }
    let mut coeffs = vec![Rational::zero(); d];
    // falling factorial t (t-1) ... (t-k+1), constant term first
    let mut falling = vec![Rational::one()];
    for (k, delta) in leading.iter().enumerate() {
        let scale = Rational::new(delta.clone(), BigInt::from(factorial_big(k)));
        for (c, f) in coeffs.iter_mut().zip(&falling) {
            *c += &scale * f;
        }
        let root = Rational::from_integer(BigInt::from(k));
        let mut next = vec![Rational::zero(); falling.len() + 1];
        for (j, f) in falling.iter().enumerate() {
            next[j + 1] += f;
            next[j] -= &root * f;
        }
        falling = next;
    }
    Polynomial(coeffs)
}

/// The Ehrhart polynomial, interpolated from `t = 0..=n`.
pub fn ehrhart_polynomial(h: &HRep) -> Polynomial {
    let n = h.n() as u64;
    let values: Vec<BigUint> = (0..=n).map(|t| count_lattice_points(h, t)).collect();
    interpolate(&values)
}

/// Leading coefficient of the Ehrhart polynomial.
pub fn ehrhart_volume(h: &HRep) -> Rational {
    ehrhart_polynomial(h).coefficient(h.n())
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return Rational::zero() };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        let pivot = m[c][c].clone();
        det *= &pivot;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &pivot;
            for k in c..n {
                let delta = &f * &m[c][k];
                m[r][k] -= delta;
            }
        }
    }
    det
}

/// `|det(v_1 - v_0, ..., v_n - v_0)| / n!`.
pub fn simplex_volume(s: &LatticeSimplex) -> Result<Rational> {
    let n = s.dim();
    if s.vertices.len() != n + 1 || s.vertices.iter().any(|v| v.len() != n) {
        return Err(Error::arg(format!("a simplex in dimension {n} needs {} vertices", n + 1)));
    }
    let v0 = &s.vertices[0];
    let rows = s.vertices[1..]
        .iter()
        .map(|v| v.iter().zip(v0).map(|(a, b)| Rational::from_integer(BigInt::from(a - b))).collect())
        .collect();
    let det = determinant(rows);
    if det.is_zero() {
        return Err(Error::domain("degenerate simplex"));
    }
    Ok(det.abs() / Rational::from_integer(BigInt::from(factorial_big(n))))
}

/// Dimension of the affine hull; zero for an empty list.
pub fn affine_rank(points: &[RationalPoint]) -> usize {
    let Some(p0) = points.first() else { return 0 };
    let mut rows: Vec<Vec<Rational>> = points[1..].iter().map(|p| p.sub(p0).into_coords()).collect();
    let cols = p0.dim();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r == rank || rows[r][c].is_zero() {
                continue;
            }
            let f = &rows[r][c] / &pivot;
            for k in c..cols {
                let delta = &f * &rows[rank][k];
                rows[r][k] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

fn check_dims(points: &[RationalPoint], x: &RationalPoint) -> Result<()> {
    if points.is_empty() {
        return Err(Error::arg("the point set is empty"));
    }
    if let Some(bad) = points.iter().find(|p| p.dim() != x.dim()) {
        return Err(Error::arg(format!("{bad} and {x} have different dimensions")));
    }
    Ok(())
}

/// Constraints `sum_v l_v v = x`, `sum_v l_v = 1`.
fn hull_system(points: &[RationalPoint], x: &RationalPoint) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let d = x.dim();
    let mut a: Vec<Vec<Rational>> = (0..d).map(|i| points.iter().map(|p| p[i].clone()).collect()).collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut b: Vec<Rational> = x.coords().to_vec();
    b.push(Rational::one());
    (a, b)
}

/// `x in conv(points)`, decided by exact LP feasibility.
pub fn hull_membership(points: &[RationalPoint], x: &RationalPoint) -> Result<bool> {
    check_dims(points, x)?;
    let (a, b) = hull_system(points, x);
    let zero = vec![Rational::zero(); points.len()];
    Ok(!matches!(lp::maximize(&a, &b, &zero), LpOutcome::Infeasible))
}

/// Whether `points[u]` and `points[v]` span an edge of `conv(points)`, for
/// points in convex position.
///
/// The midpoint is written as a convex combination putting as much weight as
/// possible off `u` and `v`; the segment is an edge exactly when that weight
/// is forced to zero.
pub fn is_edge(points: &[RationalPoint], u: usize, v: usize) -> Result<bool> {
    if u == v || u >= points.len() || v >= points.len() {
        return Err(Error::arg(format!("({u}, {v}) is not a pair of distinct point indices")));
    }
    let mid = points[u].midpoint(&points[v]);
    check_dims(points, &mid)?;
    let (a, b) = hull_system(points, &mid);
    let c: Vec<Rational> =
        (0..points.len()).map(|k| if k == u || k == v { Rational::zero() } else { Rational::one() }).collect();
    match lp::maximize(&a, &b, &c) {
        LpOutcome::Optimal { value, .. } => Ok(value.is_zero()),
        other => unreachable!("the midpoint is always in the hull: {other:?}"),
    }
}

/// All edges of `conv(points)` as index pairs `u < v`.
pub fn edges(points: &[RationalPoint]) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for u in 0..points.len() {
        for v in u + 1..points.len() {
            if is_edge(points, u, v)? {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::LpdmSpec;
    use crate::perm::Permutation;
    use crate::polytope::{hrep, vertex_set};
    use crate::rational::{int, rat};
    use crate::subset::SubsetMask;

    fn spec(n: usize, s: &[usize], t: &[usize]) -> LpdmSpec {
        LpdmSpec::new(SubsetMask::of(n, s), SubsetMask::of(n, t)).unwrap()
    }

    #[test]
    fn lattice_point_counts() {
        let cube = hrep(&spec(3, &[], &[1, 2, 3]));
        for t in 0..5u64 {
            assert_eq!(count_lattice_points(&cube, t), BigUint::from((t + 1).pow(3)));
        }
        assert_eq!(count_lattice_points(&hrep(&spec(3, &[1], &[1, 3])), 1), BigUint::from(5u32));
        let point = hrep(&spec(4, &[2, 4], &[2, 4]));
        for t in 0..4 {
            assert_eq!(count_lattice_points(&point, t), BigUint::one());
        }
    }

    #[test]
    fn ehrhart_volumes() {
        assert_eq!(ehrhart_volume(&hrep(&spec(4, &[], &[1, 2, 3, 4]))), int(1));
        assert_eq!(ehrhart_volume(&hrep(&spec(2, &[1], &[1, 2]))), rat(1, 2));
        assert_eq!(ehrhart_volume(&hrep(&spec(3, &[], &[1, 3]))), rat(1, 2));
        assert_eq!(ehrhart_volume(&hrep(&spec(3, &[1], &[1, 3]))), rat(1, 3));
    }

    #[test]
    fn interpolation_extrapolates() {
        let h = hrep(&spec(4, &[1], &[2, 4]));
        let p = ehrhart_polynomial(&h);
        for t in 0..8u64 {
            assert_eq!(p.eval(t as i64), Rational::from_integer(BigInt::from(count_lattice_points(&h, t))));
        }
        // (t+1)^2
        let q = interpolate(&[1u32, 4, 9].map(BigUint::from));
        assert_eq!(q.0, vec![int(1), int(2), int(1)]);
    }

    #[test]
    fn simplex_volumes() {
        let standard = LatticeSimplex {
            perm: Permutation::identity(3),
            vertices: vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        };
        assert_eq!(simplex_volume(&standard).unwrap(), rat(1, 6));
        let mut doubled = standard.clone();
        doubled.vertices[1] = vec![2, 0, 0];
        assert_eq!(simplex_volume(&doubled).unwrap(), rat(2, 6));
        let mut flat = standard;
        flat.vertices[3] = vec![1, 1, 0];
        assert!(matches!(simplex_volume(&flat), Err(Error::Domain(_))));
    }

    #[test]
    fn affine_ranks() {
        assert_eq!(affine_rank(&vertex_set(&spec(5, &[3, 4], &[2, 3, 5]))), 3);
        assert_eq!(affine_rank(&vertex_set(&spec(3, &[], &[1, 2, 3]))), 3);
        assert_eq!(affine_rank(&vertex_set(&spec(3, &[2], &[2]))), 0);
    }

    #[test]
    fn membership() {
        let v = vertex_set(&spec(2, &[], &[1, 2]));
        assert!(hull_membership(&v, &v[2]).unwrap());
        assert!(hull_membership(&v, &RationalPoint::new(vec![rat(1, 2), rat(1, 2)])).unwrap());
        assert!(!hull_membership(&v, &RationalPoint::new(vec![rat(3, 2), rat(1, 2)])).unwrap());
        assert!(hull_membership(&v, &RationalPoint::from_ints(&[1])).is_err());
        assert!(hull_membership(&[], &RationalPoint::from_ints(&[1])).is_err());
    }

    #[test]
    fn square_edges() {
        let sq = vec![
            RationalPoint::from_ints(&[0, 0]),
            RationalPoint::from_ints(&[1, 0]),
            RationalPoint::from_ints(&[0, 1]),
            RationalPoint::from_ints(&[1, 1]),
        ];
        assert!(is_edge(&sq, 0, 1).unwrap());
        assert!(!is_edge(&sq, 0, 3).unwrap());
        assert!(!is_edge(&sq, 1, 2).unwrap());
        assert_eq!(edges(&sq).unwrap().len(), 4);
        assert!(is_edge(&sq[..2], 0, 1).unwrap());
        assert!(is_edge(&sq, 0, 0).is_err());
    }

    #[test]
    fn diagonal_off_the_other_points() {
        // (1, 1) misses the segment between the two remaining corners, yet
        // (0,0)-(2,2) is a diagonal
        let quad = vec![
            RationalPoint::from_ints(&[0, 0]),
            RationalPoint::from_ints(&[2, 2]),
            RationalPoint::from_ints(&[1, 0]),
            RationalPoint::from_ints(&[0, 1]),
        ];
        assert!(!hull_membership(&quad[2..], &quad[0].midpoint(&quad[1])).unwrap());
        assert!(!is_edge(&quad, 0, 1).unwrap());
        assert!(is_edge(&quad, 0, 2).unwrap());
        assert!(is_edge(&quad, 1, 2).unwrap());
    }
}
