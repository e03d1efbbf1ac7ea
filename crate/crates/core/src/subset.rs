//! Subsets of a linearly ordered ground set `[n] = {1, ..., n}` and their
//! suffix-count profiles.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A subset of `{1, ..., n}` stored as a bitmask (bit `i - 1` holds member `i`).
///
/// The ordering is the canonical one used for every listing and serialization:
/// ground size first, then cardinality, then the sorted member lists
/// lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    n: u8,
    bits: u64,
}

impl SubsetMask {
    /// Largest supported ground set.
    pub const MAX_N: usize = 63;

    pub fn empty(n: usize) -> Self {
        assert!(n <= Self::MAX_N, "ground set of size {n} exceeds {}", Self::MAX_N);
        SubsetMask { n: n as u8, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        s.bits = Self::universe_bits(n);
        s
    }

    fn universe_bits(n: usize) -> u64 {
        if n == 0 {
            0
        } else {
            u64::MAX >> (64 - n)
        }
    }

    /// Builds a subset from 1-based members, rejecting anything outside `[n]`.
    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        if n > Self::MAX_N {
            return Err(Error::arg(format!("ground set size {n} exceeds {}", Self::MAX_N)));
        }
        let mut s = Self::empty(n);
        for m in members {
            if m == 0 || m > n {
                return Err(Error::arg(format!("element {m} is outside [1, {n}]")));
            }
            s.bits |= 1 << (m - 1);
        }
        Ok(s)
    }

    /// Panicking variant of [`from_members`](Self::from_members) for literals.
    pub fn of(n: usize, members: &[usize]) -> Self {
        Self::from_members(n, members.iter().copied()).expect("members within [n]")
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        let s = Self::empty(n);
        assert_eq!(bits & !Self::universe_bits(n), 0, "bits outside the ground set");
        SubsetMask { bits, ..s }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.bits >> (i - 1) & 1 == 1
    }

    pub fn with(mut self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.n(), "element {i} outside [1, {}]", self.n);
        self.bits |= 1 << (i - 1);
        self
    }

    pub fn without(mut self, i: usize) -> Self {
        if i >= 1 && i <= self.n() {
            self.bits &= !(1 << (i - 1));
        }
        self
    }

    /// Members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n()).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members().collect()
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize + 1)
    }

    pub fn last(&self) -> Option<usize> {
        (self.bits != 0).then(|| 64 - self.bits.leading_zeros() as usize)
    }

    pub fn complement(&self) -> Self {
        SubsetMask { n: self.n, bits: !self.bits & Self::universe_bits(self.n()) }
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask { n: self.n, bits: self.bits | other.bits }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetMask { n: self.n, bits: self.bits ^ other.bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// `|S_{>=i}|`: members at least `i`. Zero for `i > n`.
    #[inline]
    pub fn suffix_count(&self, i: usize) -> usize {
        if i > self.n() {
            return 0;
        }
        let i = i.max(1);
        (self.bits >> (i - 1)).count_ones() as usize
    }

    /// The suffix-count profile `(|S_{>=1}|, ..., |S_{>=n}|)`.
    pub fn profile(&self) -> Profile {
        Profile((1..=self.n()).map(|i| self.suffix_count(i)).collect())
    }

    /// `sum_{i in S} i`, the rank of `S` in the type C Gale order.
    pub fn rank(&self) -> usize {
        self.members().sum()
    }

    /// Every subset of `[n]`, in bit order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        let top = Self::universe_bits(n);
        (0..=top).map(move |bits| SubsetMask::from_bits(n, bits))
    }

    /// Restriction to the members in `[1, k]`, re-read on a ground of size `k`.
    pub fn truncate(&self, k: usize) -> Self {
        assert!(k <= self.n());
        SubsetMask::from_bits(k, self.bits & Self::universe_bits(k))
    }

    /// Same members on a larger ground set.
    pub fn extend(&self, n: usize) -> Self {
        assert!(n >= self.n());
        SubsetMask::from_bits(n, self.bits)
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.members().cmp(other.members()))
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, m) in self.members().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.n)
    }
}

impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members())
    }
}

/// Suffix counts `p_i = |S_{>=i}|` for `i = 1..n`.
///
/// A valid profile has `p_n` in `{0, 1}` and consecutive drops in `{0, 1}`;
/// it then determines its subset uniquely.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Profile(Vec<usize>);

impl Profile {
    pub fn from_counts(counts: Vec<usize>) -> Result<Self> {
        let p = Profile(counts);
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let n = self.0.len();
        for i in 0..n {
            let next = if i + 1 < n { self.0[i + 1] } else { 0 };
            let step = self.0[i].wrapping_sub(next);
            if step > 1 {
                return Err(Error::arg(format!("not a profile: {:?}", self.0)));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `p_i` for 1-based `i`; zero past the end.
    pub fn at(&self, i: usize) -> usize {
        if i == 0 || i > self.0.len() {
            0
        } else {
            self.0[i - 1]
        }
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn to_subset(&self) -> SubsetMask {
        let n = self.n();
        let members = (1..=n).filter(|&i| self.at(i) > self.at(i + 1));
        SubsetMask::from_members(n, members).expect("profile indices lie in [n]")
    }

    /// Componentwise `<=`.
    pub fn leq(&self, other: &Profile) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_examples() {
        assert_eq!(SubsetMask::of(5, &[3, 4]).profile().counts(), &[2, 2, 2, 1, 0]);
        assert_eq!(SubsetMask::empty(3).profile().counts(), &[0, 0, 0]);
        assert_eq!(SubsetMask::of(5, &[2, 3, 5]).profile().counts(), &[3, 3, 2, 1, 1]);
    }

    #[test]
    fn profile_round_trip() {
        for n in 0..=7 {
            for s in SubsetMask::all(n) {
                let p = s.profile();
                assert_eq!(Profile::from_counts(p.counts().to_vec()).unwrap().to_subset(), s);
            }
        }
    }

    #[test]
    fn invalid_profiles_rejected() {
        assert!(Profile::from_counts(vec![2, 0]).is_err());
        assert!(Profile::from_counts(vec![1, 2]).is_err());
        assert!(Profile::from_counts(vec![0, 2]).is_err());
        assert!(Profile::from_counts(vec![2, 1]).is_ok());
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mut v = vec![
            SubsetMask::of(4, &[1, 3]),
            SubsetMask::of(4, &[2]),
            SubsetMask::of(4, &[1, 2]),
            SubsetMask::empty(4),
            SubsetMask::of(4, &[3]),
            SubsetMask::of(4, &[1]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}"]);
    }

    #[test]
    fn out_of_range_member() {
        assert!(SubsetMask::from_members(3, [4]).is_err());
        assert!(SubsetMask::from_members(3, [0]).is_err());
    }

    #[test]
    fn min_max_and_suffix() {
        let s = SubsetMask::of(6, &[2, 5]);
        assert_eq!(s.first(), Some(2));
        assert_eq!(s.last(), Some(5));
        assert_eq!(s.suffix_count(3), 1);
        assert_eq!(s.suffix_count(7), 0);
        assert_eq!(SubsetMask::full(63).len(), 63);
    }
}
