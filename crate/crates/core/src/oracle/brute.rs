//! Definition-level reimplementations used to cross-check the fast paths.
//! Nothing here goes through suffix-count profiles.

use std::collections::HashMap;

use crate::subset::SubsetMask;

/// `S <= T` iff `|S| <= |T|` and, listing both in decreasing order, each
/// member of `S` is at most the member of `T` in the same place.
pub fn gale_leq(s: &SubsetMask, t: &SubsetMask) -> bool {
    if s.n() != t.n() || s.len() > t.len() {
        return false;
    }
    let mut sv = s.to_vec();
    let mut tv = t.to_vec();
    sv.reverse();
    tv.reverse();
    sv.iter().zip(&tv).all(|(a, b)| a <= b)
}

pub fn interval(s: &SubsetMask, t: &SubsetMask) -> Vec<SubsetMask> {
    let mut v: Vec<SubsetMask> = SubsetMask::all(s.n()).filter(|a| gale_leq(s, a) && gale_leq(a, t)).collect();
    v.sort();
    v
}

/// Covers read off the rank function: `A < B` with `rank B = rank A + 1`.
pub fn covers(s: &SubsetMask) -> Vec<SubsetMask> {
    let mut v: Vec<SubsetMask> =
        SubsetMask::all(s.n()).filter(|b| b.rank() == s.rank() + 1 && gale_leq(s, b)).collect();
    v.sort();
    v
}

/// Maximal chains from `s` to `t` by memoised search over `covers`.
pub fn count_chains(s: &SubsetMask, t: &SubsetMask) -> u64 {
    fn go(a: SubsetMask, t: &SubsetMask, memo: &mut HashMap<SubsetMask, u64>) -> u64 {
        if a == *t {
            return 1;
        }
        if let Some(&c) = memo.get(&a) {
            return c;
        }
        let c = covers(&a).into_iter().filter(|b| gale_leq(b, t)).map(|b| go(b, t, memo)).sum();
        memo.insert(a, c);
        c
    }
    if !gale_leq(s, t) {
        return 0;
    }
    go(*s, t, &mut HashMap::new())
}

/// Elements in every member / in no member of a family.
pub fn coloops_and_loops(family: &[SubsetMask], n: usize) -> (SubsetMask, SubsetMask) {
    let mut coloops = SubsetMask::full(n);
    let mut loops = SubsetMask::full(n);
    for f in family {
        coloops = SubsetMask::from_bits(n, coloops.bits() & f.bits());
        loops = SubsetMask::from_bits(n, loops.bits() & !f.bits());
    }
    (loops, coloops)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order;

    #[test]
    fn agrees_with_profiles() {
        for n in 0..=6 {
            for s in SubsetMask::all(n) {
                for t in SubsetMask::all(n) {
                    assert_eq!(gale_leq(&s, &t), order::gale_leq(&s, &t).unwrap(), "{s} {t}");
                }
                assert_eq!(covers(&s), order::cover_successors(&s), "{s}");
            }
        }
    }

    #[test]
    fn chain_counts() {
        let s = SubsetMask::of(6, &[1, 3, 5]);
        assert_eq!(count_chains(&s, &s.with(6)), 61);
        assert_eq!(count_chains(&SubsetMask::of(2, &[2]), &SubsetMask::of(2, &[1])), 0);
    }
}
