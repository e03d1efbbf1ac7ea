//! Type A lattice path matroids: homogeneous components and the enveloping
//! matroid on `[+-n]`.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{check_labels, Label, LpdmSpec, SetFamily};
use crate::error::{Error, Result};
use crate::order::profile_box;
use crate::paths::path_from_subset;
use crate::rational::{rat, RationalPoint};
use crate::subset::{Profile, SubsetMask};

/// Sorted-members comparison of two `k`-subsets.
pub fn type_a_leq(a: &SubsetMask, b: &SubsetMask) -> Result<bool> {
    if a.n() != b.n() || a.len() != b.len() {
        return Err(Error::arg(format!("{a:?} and {b:?} are not comparable in the type A order")));
    }
    Ok(a.members().zip(b.members()).all(|(x, y)| x <= y))
}

/// `M[S, T]`: the `k`-subsets lying between `S` and `T` elementwise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TypeALpmSpec {
    ground: Vec<Label>,
    lower: SubsetMask,
    upper: SubsetMask,
}

impl TypeALpmSpec {
    pub fn new(ground: Vec<Label>, lower: SubsetMask, upper: SubsetMask) -> Result<Self> {
        check_labels(&ground)?;
        if lower.n() != ground.len() || upper.n() != ground.len() {
            return Err(Error::arg("bounds do not match the ground set"));
        }
        if !type_a_leq(&lower, &upper)? {
            return Err(Error::Order { lower, upper });
        }
        Ok(TypeALpmSpec { ground, lower, upper })
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> SubsetMask {
        self.lower
    }

    pub fn upper(&self) -> SubsetMask {
        self.upper
    }

    pub fn lower_labels(&self) -> Vec<Label> {
        self.lower.members().map(|p| self.ground[p - 1]).collect()
    }

    pub fn upper_labels(&self) -> Vec<Label> {
        self.upper.members().map(|p| self.ground[p - 1]).collect()
    }

    /// For `k`-subsets the elementwise order is the comparison of suffix
    /// counts, so the bases are a profile box.
    pub fn bases(&self) -> SetFamily {
        let members = profile_box(&self.lower.profile(), &self.upper.profile());
        SetFamily::new(self.ground.clone(), members).expect("members live on the ground")
    }
}

impl fmt::Display for TypeALpmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{:?}, {:?}]", self.lower_labels(), self.upper_labels())
    }
}

impl fmt::Debug for TypeALpmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for TypeALpmSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            k: usize,
            #[serde(rename = "S")]
            s: Vec<Label>,
            #[serde(rename = "T")]
            t: Vec<Label>,
            ground: &'a [Label],
        }
        Repr { n: self.n(), k: self.rank(), s: self.lower_labels(), t: self.upper_labels(), ground: &self.ground }
            .serialize(serializer)
    }
}

/// Clips the box `[a, b]` to profiles of `k`-subsets: `p_1 = k`, and
/// `k + 1 - i <= p_i <= k`. `None` when nothing is left.
fn clip_to_rank(a: &Profile, b: &Profile, k: usize) -> Option<(Profile, Profile)> {
    let n = a.n();
    if k > n || a.at(1) > k || b.at(1) < k {
        return None;
    }
    let lo: Vec<usize> = (1..=n).map(|i| a.at(i).max((k + 1).saturating_sub(i))).collect();
    let hi: Vec<usize> = (1..=n).map(|i| b.at(i).min(k)).collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return None;
    }
    Some((Profile::from_counts(lo).ok()?, Profile::from_counts(hi).ok()?))
}

/// `Delta^k`: the size-`k` feasible sets, as a type A lattice path matroid.
pub fn homogeneous_component(m: &LpdmSpec, k: usize) -> Option<TypeALpmSpec> {
    let (lo, hi) = clip_to_rank(&m.lower().profile(), &m.upper().profile(), k)?;
    Some(
        TypeALpmSpec::new(m.ground().to_vec(), lo.to_subset(), hi.to_subset())
            .expect("clipped profiles stay ordered"),
    )
}

/// Labels of `[+-n]` in the order `-n < ... < -1 < 1 < ... < n`.
pub fn envelope_ground(n: usize) -> Vec<Label> {
    let n = n as Label;
    (-n..=-1).chain(1..=n).collect()
}

/// Position in `[2n]` of the envelope label `l`.
fn envelope_position(n: usize, l: Label) -> usize {
    if l < 0 {
        (n as Label + 1 + l) as usize
    } else {
        n + l as usize
    }
}

/// `lab^L(F)`: the admissible `n`-subset `{i : i in F} u {-i : i notin F}`,
/// as a mask over the envelope ground.
pub fn lagrangian_image(f: &SubsetMask) -> SubsetMask {
    let n = f.n();
    let pos = (1..=n).map(|i| envelope_position(n, if f.contains(i) { i as Label } else { -(i as Label) }));
    SubsetMask::from_members(2 * n, pos).expect("positions lie in [2n]")
}

/// At most one of `i, -i` for every `i`.
pub fn is_admissible(b: &SubsetMask) -> bool {
    let n = b.n() / 2;
    (1..=n).all(|i| !(b.contains(n + i) && b.contains(n + 1 - i)))
}

/// The type A lattice path matroid on `[+-n]` cut out by the `E`-step label
/// sets of the two bounding symmetric paths.
pub fn envelope_matroid(m: &LpdmSpec) -> Result<TypeALpmSpec> {
    let n = m.n();
    if 2 * n > SubsetMask::MAX_N {
        return Err(Error::arg(format!("envelope of a ground set of size {n} is too large")));
    }
    let east = |s: &SubsetMask| {
        SubsetMask::from_members(2 * n, path_from_subset(s).word().east_positions()).expect("positions lie in [2n]")
    };
    TypeALpmSpec::new(envelope_ground(n), east(&m.lower()), east(&m.upper()))
}

pub fn envelope_bases(m: &LpdmSpec) -> Result<SetFamily> {
    Ok(envelope_matroid(m)?.bases())
}

/// `pi(e_B)`: coordinate `i` is `((x_i - x_{-i}) + 1) / 2`.
pub fn envelope_project(b: &SubsetMask) -> Result<RationalPoint> {
    if b.n() % 2 != 0 || b.len() != b.n() / 2 {
        return Err(Error::arg(format!("{b:?} is not an n-subset of [+-n]")));
    }
    let n = b.n() / 2;
    let coords = (1..=n)
        .map(|i| {
            let x = b.contains(n + i) as i64 - b.contains(n + 1 - i) as i64;
            rat(x + 1, 2)
        })
        .collect();
    Ok(RationalPoint::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(n: usize, s: &[usize], t: &[usize]) -> LpdmSpec {
        LpdmSpec::new(SubsetMask::of(n, s), SubsetMask::of(n, t)).unwrap()
    }

    #[test]
    fn components_of_a_six_element_interval() {
        let m = spec(6, &[1, 3, 5], &[2, 4, 5, 6]);
        let c3 = homogeneous_component(&m, 3).unwrap();
        assert_eq!((c3.lower_labels(), c3.upper_labels()), (vec![1, 3, 5], vec![4, 5, 6]));
        let c4 = homogeneous_component(&m, 4).unwrap();
        assert_eq!((c4.lower_labels(), c4.upper_labels()), (vec![1, 2, 3, 5], vec![2, 4, 5, 6]));
        assert!(homogeneous_component(&m, 2).is_none());
        assert!(homogeneous_component(&m, 5).is_none());
    }

    #[test]
    fn components_are_size_filters() {
        for n in 0..=5 {
            for s in SubsetMask::all(n) {
                for t in SubsetMask::all(n) {
                    let Ok(m) = LpdmSpec::new(s, t) else { continue };
                    let feas = m.feasible_sets();
                    for k in 0..=n {
                        let want = feas.filter(|f| f.len() == k);
                        match homogeneous_component(&m, k) {
                            Some(c) => assert_eq!(c.bases(), want, "{m} k={k}"),
                            None => assert!(want.is_empty(), "{m} k={k}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn type_a_order() {
        assert!(type_a_leq(&SubsetMask::of(6, &[1, 3, 5]), &SubsetMask::of(6, &[4, 5, 6])).unwrap());
        assert!(!type_a_leq(&SubsetMask::of(3, &[3]), &SubsetMask::of(3, &[1])).unwrap());
        assert!(type_a_leq(&SubsetMask::of(3, &[3]), &SubsetMask::of(3, &[1, 2])).is_err());
    }

    #[test]
    fn envelope_examples() {
        let m = spec(1, &[], &[1]);
        assert_eq!(envelope_bases(&m).unwrap().label_sets(), vec![vec![-1], vec![1]]);
        let b = SubsetMask::of(10, &[1, 5, 7, 8, 9]);
        assert_eq!(envelope_project(&b).unwrap(), RationalPoint::from_ints(&[0, 1, 1, 1, 0]));
        // {-1, 1}: both coordinates cancel
        let b = SubsetMask::of(4, &[2, 3]);
        assert_eq!(envelope_project(&b).unwrap(), RationalPoint::new(vec![rat(1, 2), rat(1, 2)]));
        // {-2, 1}
        let b = SubsetMask::of(4, &[1, 3]);
        assert_eq!(envelope_project(&b).unwrap(), RationalPoint::from_ints(&[1, 0]));
        assert!(envelope_project(&SubsetMask::of(4, &[1])).is_err());
    }

    #[test]
    fn admissible_bases_match_feasible_sets() {
        for n in 1..=4 {
            for s in SubsetMask::all(n) {
                for t in SubsetMask::all(n) {
                    let Ok(m) = LpdmSpec::new(s, t) else { continue };
                    let env = envelope_bases(&m).unwrap();
                    let adm: Vec<SubsetMask> = env.members().copied().filter(is_admissible).collect();
                    let mut images: Vec<SubsetMask> = m.feasible_masks().iter().map(lagrangian_image).collect();
                    images.sort();
                    assert_eq!(adm, images, "{m}");
                }
            }
        }
    }

    #[test]
    fn catalan_envelope_sizes() {
        // bases are the Dyck paths of length 4n: Catalan numbers C_2, C_4
        let c1 = crate::paths::catalan_spec(1).unwrap();
        assert_eq!(envelope_bases(&c1).unwrap().len(), 2);
        let c2 = crate::paths::catalan_spec(2).unwrap();
        assert_eq!(envelope_bases(&c2).unwrap().len(), 14);
    }
}
