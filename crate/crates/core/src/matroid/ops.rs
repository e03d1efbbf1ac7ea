//! Duality, deletion, contraction, ordered direct sums and projections.

use serde::Serialize;

use super::{Label, LpdmSpec, SetFamily};
use crate::error::{Error, Result};
use crate::order::{profile_box, profile_box_size};
use crate::subset::{Profile, SubsetMask};

/// Removes position `p` and shifts the later positions down by one.
pub(crate) fn drop_position(s: &SubsetMask, p: usize) -> SubsetMask {
    let bits = s.bits();
    let low = bits & ((1u64 << (p - 1)) - 1);
    let high = (bits >> p) << (p - 1);
    SubsetMask::from_bits(s.n() - 1, low | high)
}

fn ground_without(m: &[Label], p: usize) -> Vec<Label> {
    m.iter().enumerate().filter(|(i, _)| i + 1 != p).map(|(_, &l)| l).collect()
}

/// `Delta[[n] - T, [n] - S]`: feasible sets are the complements.
pub fn dual(m: &LpdmSpec) -> LpdmSpec {
    LpdmSpec::with_ground(m.ground().to_vec(), m.upper().complement(), m.lower().complement())
        .expect("complementing reverses the Gale order")
}

fn is_balanced_at(m: &LpdmSpec, p: usize) -> bool {
    m.lower().suffix_count(p + 1) == m.upper().suffix_count(p + 1)
}

/// Deletion `m \ l`: feasible sets of `m` avoiding `l`, on the ground without `l`.
pub fn delete(m: &LpdmSpec, label: Label) -> Result<LpdmSpec> {
    let p = m.require_position(label)?;
    let (s, t) = (m.lower(), m.upper());
    if s.contains(p) && t.contains(p) && is_balanced_at(m, p) {
        return Err(Error::domain(format!("{label} is a coloop of {m}; nothing survives deletion")));
    }
    let n = m.n();
    let a = if s.contains(p) {
        let up = (p + 1..=n).find(|&i| !s.contains(i)).expect("a non-coloop has a vacancy above it in S");
        s.without(p).with(up)
    } else {
        s
    };
    let b = if t.contains(p) {
        match (1..p).rev().find(|&i| !t.contains(i)) {
            Some(down) => t.without(p).with(down),
            None => t.without(p),
        }
    } else {
        t
    };
    LpdmSpec::with_ground(ground_without(m.ground(), p), drop_position(&a, p), drop_position(&b, p))
}

/// Contraction `m / l`: `F - l` for the feasible sets containing `l`.
pub fn contract(m: &LpdmSpec, label: Label) -> Result<LpdmSpec> {
    let p = m.require_position(label)?;
    let (s, t) = (m.lower(), m.upper());
    if !s.contains(p) && !t.contains(p) && is_balanced_at(m, p) {
        return Err(Error::domain(format!("{label} is a loop of {m}; nothing survives contraction")));
    }
    let n = m.n();
    let a = if s.contains(p) {
        s.without(p)
    } else {
        match (1..p).rev().find(|&i| s.contains(i)) {
            Some(down) => s.without(down),
            None => s,
        }
    };
    let b = if t.contains(p) {
        t.without(p)
    } else {
        let up = (p + 1..=n).find(|&i| t.contains(i)).expect("a non-loop has a member of T above it");
        t.without(up)
    };
    LpdmSpec::with_ground(ground_without(m.ground(), p), drop_position(&a, p), drop_position(&b, p))
}

/// Ordered direct sum on the concatenated ground, `m1`'s labels first.
///
/// The concatenated bounds always describe an interval containing every
/// `F1 u F2`; when the interval is strictly larger the ordered sum is not a
/// lattice path delta matroid on this order and a domain error is returned.
pub fn direct_sum(m1: &LpdmSpec, m2: &LpdmSpec) -> Result<LpdmSpec> {
    if let Some(l) = m1.ground().iter().find(|l| m2.ground().contains(l)) {
        return Err(Error::arg(format!("label {l} appears in both ground sets")));
    }
    let (n1, n) = (m1.n(), m1.n() + m2.n());
    if n > SubsetMask::MAX_N {
        return Err(Error::arg(format!("combined ground of size {n} is too large")));
    }
    let join = |a: SubsetMask, b: SubsetMask| SubsetMask::from_bits(n, a.bits() | b.bits() << n1);
    let lower = join(m1.lower(), m2.lower());
    let upper = join(m1.upper(), m2.upper());
    let ground: Vec<Label> = m1.ground().iter().chain(m2.ground()).copied().collect();
    let sum = LpdmSpec::with_ground(ground, lower, upper)?;
    let product = interval_size(m1) * interval_size(m2);
    let size = interval_size(&sum);
    if size != product {
        return Err(Error::domain(format!(
            "{sum} has {size} feasible sets but the ordered sum of {m1} and {m2} has {product}"
        )));
    }
    Ok(sum)
}

fn interval_size(m: &LpdmSpec) -> num_bigint::BigUint {
    profile_box_size(&m.lower().profile(), &m.upper().profile())
}

/// `{F - i : F in f}` on the ground without `i`.
pub fn project_element(f: &SetFamily, label: Label) -> Result<SetFamily> {
    let p = f
        .ground()
        .iter()
        .position(|&l| l == label)
        .map(|p| p + 1)
        .ok_or_else(|| Error::arg(format!("{label} is not in the ground set {:?}", f.ground())))?;
    SetFamily::new(ground_without(f.ground(), p), f.members().map(|s| drop_position(s, p)))
}

/// The smallest Gale interval containing a family, and whether the family fills it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalTest {
    pub lower: Vec<Label>,
    pub upper: Vec<Label>,
    pub interval_size: usize,
    pub family_size: usize,
    pub is_interval: bool,
    /// First member of the interval absent from the family, in canonical order.
    pub missing: Option<Vec<Label>>,
}

/// Meet and join of a family in the Gale order (componentwise min and max of
/// profiles), followed by a fill check.
pub fn gale_interval_of(f: &SetFamily) -> Result<IntervalTest> {
    let mut it = f.members();
    let first = it.next().ok_or_else(|| Error::domain("an empty family spans no interval"))?;
    let mut lo = first.profile().counts().to_vec();
    let mut hi = lo.clone();
    for m in it {
        for (i, c) in m.profile().counts().iter().enumerate() {
            lo[i] = lo[i].min(*c);
            hi[i] = hi[i].max(*c);
        }
    }
    let lo = Profile::from_counts(lo).expect("meets of profiles are profiles");
    let hi = Profile::from_counts(hi).expect("joins of profiles are profiles");
    let mut members = profile_box(&lo, &hi);
    members.sort();
    let missing = members.iter().find(|s| !f.contains(s)).map(|s| f.labels_of(s));
    Ok(IntervalTest {
        lower: f.labels_of(&lo.to_subset()),
        upper: f.labels_of(&hi.to_subset()),
        interval_size: members.len(),
        family_size: f.len(),
        is_interval: missing.is_none(),
        missing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::classify_elements;

    fn spec(n: usize, s: &[usize], t: &[usize]) -> LpdmSpec {
        LpdmSpec::new(SubsetMask::of(n, s), SubsetMask::of(n, t)).unwrap()
    }

    fn labels(m: &LpdmSpec) -> (Vec<Label>, Vec<Label>) {
        (m.labels_of(&m.lower()), m.labels_of(&m.upper()))
    }

    #[test]
    fn dual_examples() {
        let m = spec(5, &[3, 4], &[2, 3, 5]);
        assert_eq!(dual(&m), spec(5, &[1, 4], &[1, 2, 5]));
        assert_eq!(dual(&dual(&m)), m);
        let cube = spec(3, &[], &[1, 2, 3]);
        assert_eq!(dual(&cube), cube);
    }

    #[test]
    fn delete_and_contract_examples() {
        let m = spec(5, &[3, 4], &[2, 3, 5]);
        let d = delete(&m, 5).unwrap();
        assert_eq!(d.ground(), [1, 2, 3, 4]);
        assert_eq!(labels(&d), (vec![3, 4], vec![2, 3, 4]));
        assert_eq!(d.feasible_sets().label_sets(), vec![vec![3, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        let c = contract(&m, 5).unwrap();
        assert_eq!(labels(&c), (vec![3], vec![2, 3]));
        assert_eq!(c.feasible_sets().label_sets(), vec![vec![3], vec![1, 3], vec![2, 3]]);
        assert!(matches!(delete(&m, 3), Err(Error::Domain(_))));
        assert!(matches!(delete(&m, 9), Err(Error::Argument(_))));
    }

    #[test]
    fn loops_and_coloops_of_a_point() {
        let m = spec(4, &[1, 3], &[1, 3]);
        let c = contract(&m, 3).unwrap();
        assert_eq!(c.feasible_sets().label_sets(), vec![vec![1]]);
        assert!(matches!(contract(&m, 2), Err(Error::Domain(_))));
        let d = delete(&m, 2).unwrap();
        assert_eq!(d.feasible_sets().label_sets(), vec![vec![1, 3]]);
    }

    #[test]
    fn labels_survive_repeated_minors() {
        let m = spec(5, &[1, 3], &[2, 3, 5]);
        let d = delete(&m, 2).unwrap();
        let dc = contract(&d, 4).unwrap();
        assert_eq!(dc.ground(), [1, 3, 5]);
        let expect: Vec<Vec<Label>> = m
            .feasible_sets()
            .label_sets()
            .into_iter()
            .filter(|f| !f.contains(&2) && f.contains(&4))
            .map(|f| f.into_iter().filter(|&l| l != 4).collect())
            .collect();
        assert_eq!(dc.feasible_sets().label_sets(), expect);
    }

    #[test]
    fn minors_match_filters_exhaustively() {
        for n in 1..=5 {
            for s in SubsetMask::all(n) {
                for t in SubsetMask::all(n) {
                    let Ok(m) = LpdmSpec::new(s, t) else { continue };
                    let feas = m.feasible_sets();
                    let (loops, coloops) = classify_elements(&m);
                    for l in 1..=n as Label {
                        let p = l as usize;
                        assert_eq!(coloops.contains(p), feas.members().all(|f| f.contains(p)), "{m} {l}");
                        assert_eq!(loops.contains(p), feas.members().all(|f| !f.contains(p)), "{m} {l}");
                        let del = delete(&m, l);
                        assert_eq!(del.is_err(), coloops.contains(p));
                        if let Ok(d) = del {
                            let want = feas.filter(|f| !f.contains(p));
                            let want = project_element(&want, l).unwrap();
                            assert!(d.feasible_sets().same_sets(&want), "{m} \\ {l}");
                            assert_eq!(dual(&d), contract(&dual(&m), l).unwrap());
                        }
                        if let Ok(c) = contract(&m, l) {
                            let want = project_element(&feas.filter(|f| f.contains(p)), l).unwrap();
                            assert!(c.feasible_sets().same_sets(&want), "{m} / {l}");
                        } else {
                            assert!(loops.contains(p));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn direct_sum_checks_the_product() {
        let a = LpdmSpec::from_labels(1, &[], &[1], None).unwrap();
        let b = LpdmSpec::from_labels(1, &[2], &[2], Some(vec![2])).unwrap();
        let ab = direct_sum(&a, &b).unwrap();
        assert_eq!(labels(&ab), (vec![2], vec![1, 2]));
        assert_eq!(ab.feasible_sets().label_sets(), vec![vec![2], vec![1, 2]]);
        // the other order spans {2} as well, which no product member is
        let b1 = LpdmSpec::from_labels(1, &[1], &[1], None).unwrap();
        let a2 = LpdmSpec::from_labels(1, &[], &[2], Some(vec![2])).unwrap();
        assert!(matches!(direct_sum(&b1, &a2), Err(Error::Domain(_))));
        assert!(matches!(direct_sum(&a, &b1), Err(Error::Argument(_))));
        let empty = LpdmSpec::new(SubsetMask::empty(0), SubsetMask::empty(0)).unwrap();
        assert_eq!(direct_sum(&ab, &empty).unwrap(), ab);
    }

    #[test]
    fn projection_is_not_closed() {
        let m = spec(5, &[3, 4], &[2, 3, 5]);
        let p = project_element(&m.feasible_sets(), 4).unwrap();
        assert_eq!(p.ground(), [1, 2, 3, 5]);
        assert_eq!(
            p.label_sets(),
            vec![vec![3], vec![1, 3], vec![2, 3], vec![3, 5], vec![1, 3, 5], vec![2, 3, 5]]
        );
        let test = gale_interval_of(&p).unwrap();
        assert!(!test.is_interval);
        assert_eq!(test.missing, Some(vec![5]));
        assert!(gale_interval_of(&m.feasible_sets()).unwrap().is_interval);
    }
}
