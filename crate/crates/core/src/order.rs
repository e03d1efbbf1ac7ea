//! The type C Gale order on subsets of `[n]`: comparison, rank, intervals,
//! cover relations and maximal chains.
//!
//! `A <= B` holds exactly when `|A_{>=i}| <= |B_{>=i}|` for every `i`, so all
//! comparisons here go through suffix counts. The rank of `S` is the sum of
//! its members, and a cover `A <. B` either moves one member `i` to a vacant
//! `i + 1` or adds the element `1`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::subset::{Profile, SubsetMask};

fn same_ground(s: &SubsetMask, t: &SubsetMask) -> Result<()> {
    if s.n() != t.n() {
        return Err(Error::arg(format!(
            "subsets live on different ground sets ([{}] vs [{}])",
            s.n(),
            t.n()
        )));
    }
    Ok(())
}

pub fn gale_leq(s: &SubsetMask, t: &SubsetMask) -> Result<bool> {
    same_ground(s, t)?;
    Ok((1..=s.n()).all(|i| s.suffix_count(i) <= t.suffix_count(i)))
}

pub(crate) fn require_leq(s: &SubsetMask, t: &SubsetMask) -> Result<()> {
    if gale_leq(s, t)? {
        Ok(())
    } else {
        Err(Error::Order { lower: *s, upper: *t })
    }
}

pub fn gale_rank(s: &SubsetMask) -> usize {
    s.rank()
}

/// All `A` with `S <= A <= T`, in canonical order.
pub fn interval(s: &SubsetMask, t: &SubsetMask) -> Result<Vec<SubsetMask>> {
    require_leq(s, t)?;
    let mut out = profile_box(&s.profile(), &t.profile());
    out.sort();
    Ok(out)
}

/// Subsets whose profiles lie componentwise between `lower` and `upper`.
///
/// Builds profiles from `p_n` down to `p_1`; each step either keeps the count
/// or raises it by one, so only live branches are explored.
pub(crate) fn profile_box(lower: &Profile, upper: &Profile) -> Vec<SubsetMask> {
    let n = lower.n();
    debug_assert_eq!(n, upper.n());
    let mut out = Vec::new();
    fn walk(i: usize, count: usize, bits: u64, lo: &Profile, hi: &Profile, out: &mut Vec<SubsetMask>) {
        if i == 0 {
            out.push(SubsetMask::from_bits(lo.n(), bits));
            return;
        }
        for take in [false, true] {
            let c = count + take as usize;
            if c < lo.at(i) || c > hi.at(i) {
                continue;
            }
            let b = if take { bits | 1 << (i - 1) } else { bits };
            walk(i - 1, c, b, lo, hi, out);
        }
    }
    walk(n, 0, 0, lower, upper, &mut out);
    out
}

/// `|[lower, upper]|` counted over suffix-count states without listing members.
pub(crate) fn profile_box_size(lower: &Profile, upper: &Profile) -> BigUint {
    let n = lower.n();
    // ways[c] = number of suffixes {i..n} with |.| = c satisfying the bounds so far
    let mut ways = vec![BigUint::zero(); n + 2];
    ways[0] = BigUint::one();
    for i in (1..=n).rev() {
        let mut next = vec![BigUint::zero(); n + 2];
        for c in 0..=n {
            if ways[c].is_zero() {
                continue;
            }
            for c2 in [c, c + 1] {
                if c2 >= lower.at(i) && c2 <= upper.at(i) {
                    next[c2] += &ways[c];
                }
            }
        }
        ways = next;
    }
    ways.into_iter().fold(BigUint::zero(), |a, b| a + b)
}

/// Upper covers of `S`: `S - {i} + {i+1}` for `i in S`, `i+1 notin S`, and
/// `S + {1}` when `1 notin S`.
pub fn cover_successors(s: &SubsetMask) -> Vec<SubsetMask> {
    let n = s.n();
    let mut out = Vec::new();
    if n >= 1 && !s.contains(1) {
        out.push(s.with(1));
    }
    for i in s.members() {
        if i < n && !s.contains(i + 1) {
            out.push(s.without(i).with(i + 1));
        }
    }
    out.sort();
    out
}

/// Number of saturated chains from `S` to `T`.
pub fn count_maximal_chains(s: &SubsetMask, t: &SubsetMask) -> Result<BigUint> {
    require_leq(s, t)?;
    let target = t.profile();
    let mut layer: HashMap<SubsetMask, BigUint> = HashMap::from([(*s, BigUint::one())]);
    for _ in s.rank()..t.rank() {
        let mut next: HashMap<SubsetMask, BigUint> = HashMap::new();
        for (a, ways) in &layer {
            for b in cover_successors(a) {
                if b.profile().leq(&target) {
                    *next.entry(b).or_insert_with(BigUint::zero) += ways;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(t).unwrap_or_default())
}

/// Every maximal chain of `[S, T]`, each listed bottom to top.
pub fn maximal_chains(s: &SubsetMask, t: &SubsetMask) -> Result<Vec<GaleChain>> {
    require_leq(s, t)?;
    let target = t.profile();
    let mut out = Vec::new();
    let mut path = vec![*s];
    fn dfs(path: &mut Vec<SubsetMask>, t: &SubsetMask, target: &Profile, out: &mut Vec<GaleChain>) {
        let top = *path.last().expect("nonempty chain");
        if top == *t {
            out.push(GaleChain { steps: path.clone() });
            return;
        }
        for b in cover_successors(&top) {
            if b.profile().leq(target) {
                path.push(b);
                dfs(path, t, target, out);
                path.pop();
            }
        }
    }
    dfs(&mut path, t, &target, &mut out);
    Ok(out)
}

/// A chain of cover relations in the type C Gale order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct GaleChain {
    steps: Vec<SubsetMask>,
}

impl GaleChain {
    pub fn new(steps: Vec<SubsetMask>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::arg("a chain needs at least one element"));
        }
        for w in steps.windows(2) {
            same_ground(&w[0], &w[1])?;
            if !cover_successors(&w[0]).contains(&w[1]) {
                return Err(Error::domain(format!("{} is not covered by {}", w[0], w[1])));
            }
        }
        Ok(GaleChain { steps })
    }

    pub fn steps(&self) -> &[SubsetMask] {
        &self.steps
    }

    pub fn bottom(&self) -> SubsetMask {
        self.steps[0]
    }

    pub fn top(&self) -> SubsetMask {
        *self.steps.last().expect("nonempty chain")
    }
}

impl fmt::Display for GaleChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaleChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The element `l` such that the cover `a <. b` moves `l - 1` to `l`
/// (`l = 1` when `1` is added).
fn cover_target(a: &SubsetMask, b: &SubsetMask) -> usize {
    let added = b.bits() & !a.bits();
    debug_assert_eq!(added.count_ones(), 1);
    added.trailing_zeros() as usize + 1
}

/// Maps a maximal chain of the toric interval `[S, S + {n}]` to the
/// permutation `pi` where `pi(l)` is the step at which `l - 1` moves to `l`
/// (or `1` is added, for `l = 1`). The result has descent set `S`.
pub fn chain_to_permutation(c: &GaleChain) -> Result<Permutation> {
    let s = c.bottom();
    let n = s.n();
    if n == 0 || s.contains(n) || c.top() != s.with(n) || c.steps().len() != n + 1 {
        return Err(Error::domain(format!(
            "chain {c} is not a maximal chain from S to S + {{n}} with S in [n-1]"
        )));
    }
    let mut images = vec![0; n];
    for (step, w) in c.steps().windows(2).enumerate() {
        let l = cover_target(&w[0], &w[1]);
        if images[l - 1] != 0 {
            return Err(Error::domain(format!("element {l} is reached twice in {c}")));
        }
        images[l - 1] = step + 1;
    }
    let p = Permutation::new(images)?;
    debug_assert_eq!(p.descent_set(), s);
    Ok(p)
}

/// Inverse of [`chain_to_permutation`]: step `i` moves `b_i - 1` to `b_i`
/// (or adds `1`), where `b = p^{-1}`.
pub fn permutation_to_chain(p: &Permutation, s: &SubsetMask) -> Result<GaleChain> {
    let n = p.n();
    if s.n() != n {
        return Err(Error::arg(format!("{s} does not live on [{n}]")));
    }
    if p.descent_set() != *s {
        return Err(Error::domain(format!("{p} has descent set {}, not {s}", p.descent_set())));
    }
    let inv = p.inverse();
    let mut cur = *s;
    let mut steps = vec![cur];
    for i in 1..=n {
        let b = inv.at(i);
        cur = if b == 1 {
            if cur.contains(1) {
                return Err(Error::domain(format!("cannot add 1 to {cur}")));
            }
            cur.with(1)
        } else {
            if !cur.contains(b - 1) || cur.contains(b) {
                return Err(Error::domain(format!("cannot move {} to {b} in {cur}", b - 1)));
            }
            cur.without(b - 1).with(b)
        };
        steps.push(cur);
    }
    GaleChain::new(steps)
}
