//! Lattice path delta matroids `Delta[S, T]`: feasible sets, the symmetric
//! exchange axiom, loops and coloops, and the matroid operations.
//!
//! Bounds are stored as positional masks over an ordered list of ground
//! labels. Positions drive every order-theoretic computation; labels only
//! travel with the value so that deletions and contractions keep the
//! original element names.

mod components;
mod ops;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::order::{interval, require_leq};
use crate::subset::SubsetMask;

pub use components::{
    envelope_bases, envelope_ground, envelope_matroid, envelope_project, homogeneous_component, is_admissible,
    lagrangian_image, type_a_leq, TypeALpmSpec,
};
pub use ops::{contract, delete, direct_sum, dual, gale_interval_of, project_element, IntervalTest};

/// Name of a ground-set element.
pub type Label = i64;

fn default_ground(n: usize) -> Vec<Label> {
    (1..=n as Label).collect()
}

fn check_labels(ground: &[Label]) -> Result<()> {
    let mut seen = HashSet::new();
    if let Some(dup) = ground.iter().find(|l| !seen.insert(**l)) {
        return Err(Error::arg(format!("ground label {dup} appears twice")));
    }
    if ground.len() > SubsetMask::MAX_N {
        return Err(Error::arg(format!("ground set of size {} is too large", ground.len())));
    }
    Ok(())
}

/// `Delta[S, T]` with `S <= T` in the type C Gale order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LpdmSpec {
    ground: Vec<Label>,
    lower: SubsetMask,
    upper: SubsetMask,
}

impl LpdmSpec {
    /// Bounds on the default ground `1..=n`.
    pub fn new(lower: SubsetMask, upper: SubsetMask) -> Result<Self> {
        Self::with_ground(default_ground(lower.n()), lower, upper)
    }

    pub fn with_ground(ground: Vec<Label>, lower: SubsetMask, upper: SubsetMask) -> Result<Self> {
        check_labels(&ground)?;
        if lower.n() != ground.len() || upper.n() != ground.len() {
            return Err(Error::arg(format!(
                "bounds {lower:?}, {upper:?} do not match a ground set of size {}",
                ground.len()
            )));
        }
        require_leq(&lower, &upper)?;
        Ok(LpdmSpec { ground, lower, upper })
    }

    /// Bounds given as label lists; `ground` defaults to `1..=n`.
    pub fn from_labels(n: usize, s: &[Label], t: &[Label], ground: Option<Vec<Label>>) -> Result<Self> {
        let ground = ground.unwrap_or_else(|| default_ground(n));
        if ground.len() != n {
            return Err(Error::arg(format!("n = {n} but {} ground labels given", ground.len())));
        }
        check_labels(&ground)?;
        let lower = mask_of_labels(&ground, s)?;
        let upper = mask_of_labels(&ground, t)?;
        Self::with_ground(ground, lower, upper)
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn lower(&self) -> SubsetMask {
        self.lower
    }

    pub fn upper(&self) -> SubsetMask {
        self.upper
    }

    pub fn label(&self, pos: usize) -> Label {
        self.ground[pos - 1]
    }

    pub fn position(&self, label: Label) -> Option<usize> {
        self.ground.iter().position(|&l| l == label).map(|p| p + 1)
    }

    pub(crate) fn require_position(&self, label: Label) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::arg(format!("{label} is not in the ground set {:?}", self.ground)))
    }

    pub fn labels_of(&self, s: &SubsetMask) -> Vec<Label> {
        s.members().map(|p| self.label(p)).collect()
    }

    /// Feasible sets as positional masks, in canonical order.
    pub fn feasible_masks(&self) -> Vec<SubsetMask> {
        interval(&self.lower, &self.upper).expect("bounds are ordered")
    }

    pub fn feasible_sets(&self) -> SetFamily {
        SetFamily { ground: self.ground.clone(), members: self.feasible_masks().into_iter().collect() }
    }
}

impl fmt::Display for LpdmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Delta[{:?}, {:?}] on {:?}", self.labels_of(&self.lower), self.labels_of(&self.upper), self.ground)
    }
}

impl fmt::Debug for LpdmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON shape `{"n": .., "S": [..], "T": [..], "ground": [..]}` with bounds as labels.
impl Serialize for LpdmSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            #[serde(rename = "S")]
            s: Vec<Label>,
            #[serde(rename = "T")]
            t: Vec<Label>,
            ground: &'a [Label],
        }
        Repr { n: self.n(), s: self.labels_of(&self.lower), t: self.labels_of(&self.upper), ground: &self.ground }
            .serialize(serializer)
    }
}

pub(crate) fn mask_of_labels(ground: &[Label], labels: &[Label]) -> Result<SubsetMask> {
    let mut mask = SubsetMask::empty(ground.len());
    for l in labels {
        let p = ground
            .iter()
            .position(|g| g == l)
            .ok_or_else(|| Error::arg(format!("{l} is not in the ground set {ground:?}")))?;
        mask = mask.with(p + 1);
    }
    Ok(mask)
}

/// A family of subsets of an ordered ground set.
#[derive(Clone, PartialEq, Eq)]
pub struct SetFamily {
    ground: Vec<Label>,
    members: BTreeSet<SubsetMask>,
}

impl SetFamily {
    pub fn new(ground: Vec<Label>, members: impl IntoIterator<Item = SubsetMask>) -> Result<Self> {
        check_labels(&ground)?;
        let members: BTreeSet<SubsetMask> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|m| m.n() != ground.len()) {
            return Err(Error::arg(format!("{bad:?} does not live on the ground {ground:?}")));
        }
        Ok(SetFamily { ground, members })
    }

    pub fn from_label_sets(ground: Vec<Label>, sets: &[Vec<Label>]) -> Result<Self> {
        check_labels(&ground)?;
        let members = sets.iter().map(|s| mask_of_labels(&ground, s)).collect::<Result<Vec<_>>>()?;
        Self::new(ground, members)
    }

    pub fn ground(&self) -> &[Label] {
        &self.ground
    }

    pub fn members(&self) -> impl Iterator<Item = &SubsetMask> {
        self.members.iter()
    }

    pub fn member_set(&self) -> &BTreeSet<SubsetMask> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: &SubsetMask) -> bool {
        self.members.contains(s)
    }

    pub fn contains_labels(&self, labels: &[Label]) -> bool {
        mask_of_labels(&self.ground, labels).map(|m| self.contains(&m)).unwrap_or(false)
    }

    pub fn labels_of(&self, s: &SubsetMask) -> Vec<Label> {
        let mut v: Vec<Label> = s.members().map(|p| self.ground[p - 1]).collect();
        v.sort_unstable();
        v
    }

    /// Members as sorted label lists, ordered by size then lexicographically.
    pub fn label_sets(&self) -> Vec<Vec<Label>> {
        let mut out: Vec<Vec<Label>> = self.members.iter().map(|m| self.labels_of(m)).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Subfamily of members passing `keep`.
    pub fn filter(&self, keep: impl Fn(&SubsetMask) -> bool) -> SetFamily {
        SetFamily { ground: self.ground.clone(), members: self.members.iter().copied().filter(|m| keep(m)).collect() }
    }

    /// Same family, compared as label sets (ground order ignored).
    pub fn same_sets(&self, other: &SetFamily) -> bool {
        let mut g1 = self.ground.clone();
        let mut g2 = other.ground.clone();
        g1.sort_unstable();
        g2.sort_unstable();
        g1 == g2 && self.label_sets() == other.label_sets()
    }
}

impl fmt::Debug for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.label_sets())
    }
}

impl Serialize for SetFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.label_sets().serialize(serializer)
    }
}

/// Outcome of checking the symmetric exchange axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ExchangeCheck {
    Holds,
    /// For this pair and `e`, no `f` repairs the exchange.
    Violated { a1: Vec<Label>, a2: Vec<Label>, e: Label },
}

impl ExchangeCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ExchangeCheck::Holds)
    }
}

/// Checks that for all feasible `A1, A2` and `e in A1 ^ A2` some
/// `f in A1 ^ A2` has `A1 ^ {e, f}` feasible.
pub fn verify_exchange(f: &SetFamily) -> Result<ExchangeCheck> {
    if f.is_empty() {
        return Err(Error::domain("the exchange axiom needs a nonempty family"));
    }
    let members = f.member_set();
    for a1 in members {
        for a2 in members {
            let diff = a1.symmetric_difference(a2);
            for e in diff.members() {
                let repaired = diff.members().any(|g| {
                    let swapped = if e == g {
                        a1.symmetric_difference(&SubsetMask::empty(a1.n()).with(e))
                    } else {
                        a1.symmetric_difference(&SubsetMask::empty(a1.n()).with(e).with(g))
                    };
                    members.contains(&swapped)
                });
                if !repaired {
                    return Ok(ExchangeCheck::Violated {
                        a1: f.labels_of(a1),
                        a2: f.labels_of(a2),
                        e: f.ground()[e - 1],
                    });
                }
            }
        }
    }
    Ok(ExchangeCheck::Holds)
}

/// `(loops, coloops)` as positional masks.
///
/// `l` is a coloop iff `l in S n T` and `|S_{>=l+1}| = |T_{>=l+1}|`; loops are
/// the coloops of the dual, i.e. `l notin S u T` with the same equality.
pub fn classify_elements(m: &LpdmSpec) -> (SubsetMask, SubsetMask) {
    let (s, t) = (m.lower(), m.upper());
    let n = m.n();
    let mut loops = SubsetMask::empty(n);
    let mut coloops = SubsetMask::empty(n);
    for l in 1..=n {
        if s.suffix_count(l + 1) != t.suffix_count(l + 1) {
            continue;
        }
        if s.contains(l) && t.contains(l) {
            coloops = coloops.with(l);
        } else if !s.contains(l) && !t.contains(l) {
            loops = loops.with(l);
        }
    }
    (loops, coloops)
}
