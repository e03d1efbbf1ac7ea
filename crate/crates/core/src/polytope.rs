//! The feasible polytope `P(Delta[S, T])` through its suffix-sum description
//! `a_i <= x_i + ... + x_n <= b_i`, `0 <= x <= 1`, with `a`, `b` the profiles
//! of the bounds.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{classify_elements, contract, delete, Label, LpdmSpec, SetFamily};
use crate::paths::common_points_above_antidiagonal;
use crate::rational::{int, RationalPoint};
use crate::subset::{Profile, SubsetMask};

/// Suffix-sum bounds; the cube bounds are implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HRep {
    a: Profile,
    b: Profile,
}

impl HRep {
    pub fn new(a: Profile, b: Profile) -> Result<Self> {
        if a.n() != b.n() || !a.leq(&b) {
            return Err(Error::arg(format!("profiles {:?} and {:?} are not ordered", a.counts(), b.counts())));
        }
        Ok(HRep { a, b })
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn lower(&self) -> &Profile {
        &self.a
    }

    pub fn upper(&self) -> &Profile {
        &self.b
    }
}

pub fn hrep(m: &LpdmSpec) -> HRep {
    HRep { a: m.lower().profile(), b: m.upper().profile() }
}

/// Membership in `C(S, T)`.
pub fn contains(h: &HRep, x: &RationalPoint) -> Result<bool> {
    if x.dim() != h.n() {
        return Err(Error::arg(format!("point of dimension {} against a polytope in dimension {}", x.dim(), h.n())));
    }
    let zero = num_rational::BigRational::zero();
    let one = num_rational::BigRational::one();
    if x.coords().iter().any(|c| *c < zero || *c > one) {
        return Ok(false);
    }
    let mut suffix = zero;
    for i in (1..=h.n()).rev() {
        suffix += &x[i - 1];
        if suffix < int(h.a.at(i) as i64) || suffix > int(h.b.at(i) as i64) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership of a 0/1 vertex `e_A`.
pub fn contains_indicator(h: &HRep, s: &SubsetMask) -> bool {
    s.n() == h.n() && (1..=h.n()).all(|i| (h.a.at(i)..=h.b.at(i)).contains(&s.suffix_count(i)))
}

/// `n - #{i : a_i = b_i}`.
pub fn dimension(m: &LpdmSpec) -> usize {
    let h = hrep(m);
    m.n() - (1..=m.n()).filter(|&i| h.a.at(i) == h.b.at(i)).count()
}

/// `n - k + 1`, with `k` the lattice points shared by the two bounding
/// paths on or above the antidiagonal.
pub fn dimension_from_paths(m: &LpdmSpec) -> usize {
    let k = common_points_above_antidiagonal(&m.lower(), &m.upper()).expect("bounds are ordered");
    m.n() + 1 - k
}

pub fn is_linked(m: &LpdmSpec) -> bool {
    dimension(m) == m.n()
}

/// `P(m1) n P(m2)`: max of the lower profiles, min of the upper ones.
pub fn intersect(m1: &LpdmSpec, m2: &LpdmSpec) -> Result<Option<LpdmSpec>> {
    if m1.ground() != m2.ground() {
        return Err(Error::arg(format!("ground sets {:?} and {:?} differ", m1.ground(), m2.ground())));
    }
    let (h1, h2) = (hrep(m1), hrep(m2));
    let n = m1.n();
    let c: Vec<usize> = (1..=n).map(|i| h1.a.at(i).max(h2.a.at(i))).collect();
    let d: Vec<usize> = (1..=n).map(|i| h1.b.at(i).min(h2.b.at(i))).collect();
    if c.iter().zip(&d).any(|(x, y)| x > y) {
        return Ok(None);
    }
    let c = Profile::from_counts(c).expect("max of profiles is a profile");
    let d = Profile::from_counts(d).expect("min of profiles is a profile");
    LpdmSpec::with_ground(m1.ground().to_vec(), c.to_subset(), d.to_subset()).map(Some)
}

pub fn vertex_set(m: &LpdmSpec) -> Vec<RationalPoint> {
    m.feasible_masks().iter().map(RationalPoint::indicator).collect()
}

/// A facet-defining (or at least valid) equality of `C(S, T)`, with 1-based
/// coordinate index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Facet {
    CoordZero(usize),
    CoordOne(usize),
    SuffixLower(usize),
    SuffixUpper(usize),
}

impl Facet {
    pub fn index(&self) -> usize {
        match *self {
            Facet::CoordZero(i) | Facet::CoordOne(i) | Facet::SuffixLower(i) | Facet::SuffixUpper(i) => i,
        }
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Facet::CoordZero(i) => write!(f, "x{i}=0"),
            Facet::CoordOne(i) => write!(f, "x{i}=1"),
            Facet::SuffixLower(i) => write!(f, "suffix{i}=a"),
            Facet::SuffixUpper(i) => write!(f, "suffix{i}=b"),
        }
    }
}

/// Accepts `x3=0`, `x3=1`, `suffix3=a`, `suffix3=b`.
impl FromStr for Facet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::arg(format!("{s:?} is not a facet (try x3=0, x3=1, suffix3=a, suffix3=b)"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (lhs, rhs) = t.split_once('=').ok_or_else(bad)?;
        let (kind, idx) = if let Some(rest) = lhs.strip_prefix("suffix") {
            ("suffix", rest)
        } else if let Some(rest) = lhs.strip_prefix('x') {
            ("x", rest)
        } else {
            return Err(bad());
        };
        let i: usize = idx.parse().map_err(|_| bad())?;
        if i == 0 {
            return Err(bad());
        }
        match (kind, rhs) {
            ("x", "0") => Ok(Facet::CoordZero(i)),
            ("x", "1") => Ok(Facet::CoordOne(i)),
            ("suffix", "a") => Ok(Facet::SuffixLower(i)),
            ("suffix", "b") => Ok(Facet::SuffixUpper(i)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Facet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// How a face splits as a direct sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FaceCertificate {
    /// No feasible set meets the equality.
    Empty,
    /// `Delta[{e},{e}]` (value 1) or `Delta[{}, {}]` on `{e}` (value 0), summed
    /// with the contraction or deletion of `e`.
    ElementFactor { element: Label, value: u8, minor: LpdmSpec },
    /// Two path segments: the positions before the index and those from it on.
    SuffixSplit { low: LpdmSpec, high: LpdmSpec },
}

impl FaceCertificate {
    /// The family described by the certificate, on `ground`.
    pub fn family(&self, ground: &[Label]) -> Result<SetFamily> {
        let masks: Vec<SubsetMask> = match self {
            FaceCertificate::Empty => Vec::new(),
            FaceCertificate::ElementFactor { element, value, minor } => {
                let p = ground.iter().position(|l| l == element).ok_or_else(|| Error::arg("element not in ground"))?;
                minor
                    .feasible_masks()
                    .iter()
                    .map(|f| {
                        let lifted = insert_position(f, p + 1);
                        if *value == 1 {
                            lifted.with(p + 1)
                        } else {
                            lifted
                        }
                    })
                    .collect()
            }
            FaceCertificate::SuffixSplit { low, high } => {
                let shift = low.n();
                let n = ground.len();
                let highs = high.feasible_masks();
                low.feasible_masks()
                    .iter()
                    .flat_map(|l| highs.iter().map(move |h| SubsetMask::from_bits(n, l.bits() | h.bits() << shift)))
                    .collect()
            }
        };
        SetFamily::new(ground.to_vec(), masks)
    }
}

fn insert_position(s: &SubsetMask, p: usize) -> SubsetMask {
    let bits = s.bits();
    let low = bits & ((1u64 << (p - 1)) - 1);
    let high = (bits >> (p - 1)) << p;
    SubsetMask::from_bits(s.n() + 1, low | high)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub facet: Facet,
    pub family: SetFamily,
    pub certificate: FaceCertificate,
}

/// The feasible sets on a facet equality, plus its direct-sum decomposition.
pub fn face(m: &LpdmSpec, facet: Facet) -> Result<Face> {
    let n = m.n();
    let i = facet.index();
    if i == 0 || i > n {
        return Err(Error::arg(format!("facet {facet} refers to a coordinate outside [{n}]")));
    }
    let h = hrep(m);
    let feas = m.feasible_sets();
    let (family, certificate) = match facet {
        Facet::CoordOne(_) | Facet::CoordZero(_) => {
            let value = matches!(facet, Facet::CoordOne(_));
            let (loops, coloops) = classify_elements(m);
            let family = feas.filter(|f| f.contains(i) == value);
            let label = m.label(i);
            let cert = if value && loops.contains(i) || !value && coloops.contains(i) {
                FaceCertificate::Empty
            } else {
                let minor = if value { contract(m, label)? } else { delete(m, label)? };
                FaceCertificate::ElementFactor { element: label, value: value as u8, minor }
            };
            (family, cert)
        }
        Facet::SuffixLower(_) | Facet::SuffixUpper(_) => {
            let v = if matches!(facet, Facet::SuffixLower(_)) { h.a.at(i) } else { h.b.at(i) };
            let family = feas.filter(|f| f.suffix_count(i) == v);
            (family, suffix_split(m, &h, i, v)?)
        }
    };
    Ok(Face { facet, family, certificate })
}

/// Factors of `{F : |F_{>=i}| = v}`: `F n [1, i-1]` and `F n [i, n]` vary
/// independently inside clipped profile boxes.
fn suffix_split(m: &LpdmSpec, h: &HRep, i: usize, v: usize) -> Result<FaceCertificate> {
    let n = m.n();
    let (a, b) = (&h.a, &h.b);
    let low_lo: Vec<usize> = (1..i).map(|j| a.at(j).saturating_sub(v)).collect();
    let low_hi: Vec<usize> = (1..i).map(|j| b.at(j).saturating_sub(v).min(i - j)).collect();
    let high_lo: Vec<usize> = (i..=n).map(|j| a.at(j).max(v.saturating_sub(j - i))).collect();
    let high_hi: Vec<usize> = (i..=n).map(|j| b.at(j).min(v)).collect();
    let box_of = |lo: Vec<usize>, hi: Vec<usize>, ground: &[Label]| -> Result<Option<LpdmSpec>> {
        if lo.iter().zip(&hi).any(|(x, y)| x > y) {
            return Ok(None);
        }
        let lo = Profile::from_counts(lo)?;
        let hi = Profile::from_counts(hi)?;
        LpdmSpec::with_ground(ground.to_vec(), lo.to_subset(), hi.to_subset()).map(Some)
    };
    let ground = m.ground();
    let low = box_of(low_lo, low_hi, &ground[..i - 1])?;
    let high = box_of(high_lo, high_hi, &ground[i - 1..])?;
    Ok(match (low, high) {
        (Some(low), Some(high)) => FaceCertificate::SuffixSplit { low, high },
        _ => FaceCertificate::Empty,
    })
}
