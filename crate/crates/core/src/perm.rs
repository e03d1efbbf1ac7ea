//! Permutations in one-line notation, descent/ascent sets, and the count
//! `beta_n(S)` of permutations with a prescribed descent set.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::SubsetMask;

/// A permutation of `[n]` in one-line notation `(w(1), ..., w(n))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::arg(format!("{images:?} is not a permutation of [{n}]")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// Positions `i` with `w(i) > w(i+1)`, on a ground set of size `n`.
    pub fn descent_set(&self) -> SubsetMask {
        let n = self.n();
        let d = (1..n).filter(|&i| self.at(i) > self.at(i + 1));
        SubsetMask::from_members(n, d).expect("descents lie in [n-1]")
    }

    pub fn ascent_set(&self) -> SubsetMask {
        let n = self.n();
        let a = (1..n).filter(|&i| self.at(i) < self.at(i + 1));
        SubsetMask::from_members(n, a).expect("ascents lie in [n-1]")
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some(Permutation::identity(n));
        std::iter::from_fn(move || {
            let current = next.take()?;
            next = current.lex_successor();
            Some(current)
        })
    }

    fn lex_successor(&self) -> Option<Permutation> {
        let mut v = self.0.clone();
        let i = (1..v.len()).rev().find(|&i| v[i - 1] < v[i])?;
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1])?;
        v.swap(i - 1, j);
        v[i..].reverse();
        Some(Permutation(v))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(descents, ascents)`; together they partition `[n-1]`.
pub fn descent_ascent_sets(p: &Permutation) -> (SubsetMask, SubsetMask) {
    (p.descent_set(), p.ascent_set())
}

fn check_below_n(s: &SubsetMask) -> Result<()> {
    let n = s.n();
    if n > 0 && s.contains(n) {
        return Err(Error::arg(format!("{s} is not a subset of [{}]", n - 1)));
    }
    Ok(())
}

/// Permutations of `[n]` (with `n = s.n()`) whose descent set is exactly `s`,
/// in lexicographic order.
pub fn permutations_with_descent_set(s: &SubsetMask) -> Result<Vec<Permutation>> {
    check_below_n(s)?;
    let n = s.n();
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut prefix = Vec::with_capacity(n);
    extend_with_descents(s, &mut prefix, &mut used, &mut out);
    Ok(out)
}

fn extend_with_descents(
    s: &SubsetMask,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    let n = s.n();
    if prefix.len() == n {
        out.push(Permutation(prefix.clone()));
        return;
    }
    let pos = prefix.len();
    for v in 1..=n {
        if used[v] {
            continue;
        }
        if let Some(&prev) = prefix.last() {
            // position `pos` (1-based) compares w(pos) with w(pos + 1) = v
            if s.contains(pos) != (prev > v) {
                continue;
            }
        }
        used[v] = true;
        prefix.push(v);
        extend_with_descents(s, prefix, used, out);
        prefix.pop();
        used[v] = false;
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `n!` as an exact integer.
pub fn factorial_big(n: usize) -> BigUint {
    factorial(n)
}

/// `beta_n(S) = #{w in S_n : des(w) = S}` by inclusion-exclusion over the
/// subsets `R` of `S`: `beta(S) = sum_R (-1)^{|S - R|} alpha(R)`, where
/// `alpha(R) = n! / (r_1! (r_2 - r_1)! ... (n - r_k)!)` counts permutations
/// whose descents lie inside `R`.
pub fn count_perms_with_descent_set(s: &SubsetMask) -> Result<BigUint> {
    check_below_n(s)?;
    let n = s.n();
    let members = s.to_vec();
    let k = members.len();
    let n_fact = factorial(n);
    let mut total = BigInt::zero();
    for sub in 0u64..(1u64 << k) {
        let mut denom = BigUint::one();
        let mut last = 0;
        for (j, &m) in members.iter().enumerate() {
            if sub >> j & 1 == 1 {
                denom *= factorial(m - last);
                last = m;
            }
        }
        denom *= factorial(n - last);
        let alpha = BigInt::from(&n_fact / denom);
        if (k - sub.count_ones() as usize) % 2 == 0 {
            total += alpha;
        } else {
            total -= alpha;
        }
    }
    Ok(total.to_biguint().expect("inclusion-exclusion count is non-negative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descents_and_ascents() {
        let w = Permutation::new(vec![3, 2, 5, 4, 6, 1]).unwrap();
        let (d, a) = descent_ascent_sets(&w);
        assert_eq!(d.to_vec(), [1, 3, 5]);
        assert_eq!(a.to_vec(), [2, 4]);
        assert!(Permutation::identity(4).descent_set().is_empty());
        assert_eq!(Permutation::new(vec![2, 1]).unwrap().descent_set().to_vec(), [1]);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn all_enumerates_factorial_many() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        let v: Vec<_> = Permutation::all(3).map(|p| p.images().to_vec()).collect();
        assert_eq!(v[0], [1, 2, 3]);
        assert_eq!(v[5], [3, 2, 1]);
    }

    #[test]
    fn beta_small_values() {
        // {213, 312} have descent set exactly {1}
        assert_eq!(count_perms_with_descent_set(&SubsetMask::of(3, &[1])).unwrap(), 2u32.into());
        for n in 0..7 {
            assert_eq!(count_perms_with_descent_set(&SubsetMask::empty(n)).unwrap(), 1u32.into());
        }
        assert_eq!(
            count_perms_with_descent_set(&SubsetMask::of(6, &[1, 3, 5])).unwrap(),
            61u32.into()
        );
    }

    #[test]
    fn beta_rejects_n() {
        assert!(count_perms_with_descent_set(&SubsetMask::of(3, &[3])).is_err());
    }

    #[test]
    fn beta_matches_enumeration() {
        for n in 0..=8 {
            let mut counts = std::collections::HashMap::new();
            for w in Permutation::all(n) {
                *counts.entry(w.descent_set()).or_insert(0u64) += 1;
            }
            let mut sum = BigUint::zero();
            for s in SubsetMask::all(n).filter(|s| n == 0 || !s.contains(n)) {
                let beta = count_perms_with_descent_set(&s).unwrap();
                assert_eq!(beta, counts.get(&s).copied().unwrap_or(0).into(), "n={n} S={s}");
                sum += beta;
            }
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn generator_matches_filter() {
        for n in 0..=6 {
            for s in SubsetMask::all(n).filter(|s| n == 0 || !s.contains(n)) {
                let gen = permutations_with_descent_set(&s).unwrap();
                let filt: Vec<_> = Permutation::all(n).filter(|w| w.descent_set() == s).collect();
                assert_eq!(gen, filt);
            }
        }
    }
}
