//! Lattice path words over `{E, N}` and the symmetric-path model of subsets.
//!
//! Coordinates: `E` is the step `(1, 0)`, `N` is `(0, 1)`. An `n`-symmetric
//! path runs from `(0, 0)` to `(n, n)` and is invariant under reflection in
//! the antidiagonal `y = n - x`. Steps are labelled `-n, ..., -1, 1, ..., n`
//! in order; the subset attached to a symmetric path is the set of positive
//! labels on `E` steps.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matroid::LpdmSpec;
use crate::order::require_leq;
use crate::subset::SubsetMask;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    E,
    N,
}

/// A lattice path from `(0, 0)`, stored as its step word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PathWord(Vec<Step>);

impl PathWord {
    /// A balanced word: equal numbers of `E` and `N` steps.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let east = steps.iter().filter(|&&s| s == Step::E).count();
        if 2 * east != steps.len() {
            return Err(Error::arg(format!(
                "path with {east} E steps out of {} is not balanced",
                steps.len()
            )));
        }
        Ok(PathWord(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Half the length: the path ends at `(n, n)`.
    pub fn n(&self) -> usize {
        self.0.len() / 2
    }

    /// `E` steps among `alpha_k ... alpha_{2n}` for 1-based `k`.
    pub fn east_suffix(&self, k: usize) -> usize {
        self.0[k.saturating_sub(1)..].iter().filter(|&&s| s == Step::E).count()
    }

    /// Lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.0.len() + 1);
        let (mut x, mut y) = (0, 0);
        pts.push((x, y));
        for s in &self.0 {
            match s {
                Step::E => x += 1,
                Step::N => y += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// Height at which the path crosses column `c` (the `y` of its `E` step
    /// from `x = c` to `x = c + 1`).
    pub fn column_heights(&self) -> Vec<usize> {
        let mut h = Vec::with_capacity(self.n());
        let mut y = 0;
        for s in &self.0 {
            match s {
                Step::E => h.push(y),
                Step::N => y += 1,
            }
        }
        h
    }

    /// `lab^A`: the 1-based positions of the `E` steps.
    pub fn east_positions(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Step::E)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_char(match s {
                Step::E => 'E',
                Step::N => 'N',
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'E' | 'e' => Ok(Step::E),
                'N' | 'n' => Ok(Step::N),
                other => Err(Error::arg(format!("unexpected step {other:?} in path word"))),
            })
            .collect::<Result<Vec<_>>>()?;
        PathWord::new(steps)
    }
}

impl Serialize for PathWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub fn is_symmetric(p: &PathWord) -> bool {
    let len = p.0.len();
    (0..p.n()).all(|i| p.0[i] != p.0[len - 1 - i])
}

/// A path word known to satisfy `alpha_i != alpha_{2n-i+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SymmetricPathWord(PathWord);

impl SymmetricPathWord {
    pub fn new(p: PathWord) -> Result<Self> {
        if !is_symmetric(&p) {
            return Err(Error::domain(format!("{p} is not symmetric about y = n - x")));
        }
        Ok(SymmetricPathWord(p))
    }

    pub fn word(&self) -> &PathWord {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }
}

impl fmt::Display for SymmetricPathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for SymmetricPathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for SymmetricPathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SymmetricPathWord::new(s.parse()?)
    }
}

/// Positive labels carried by `E` steps: step `n + i` has label `i`.
pub fn subset_from_path(p: &SymmetricPathWord) -> SubsetMask {
    let n = p.n();
    let steps = p.word().steps();
    let members = (1..=n).filter(|&i| steps[n + i - 1] == Step::E);
    SubsetMask::from_members(n, members).expect("labels lie in [n]")
}

/// The symmetric path whose positive `E` labels are exactly `S`.
pub fn path_from_subset(s: &SubsetMask) -> SymmetricPathWord {
    let n = s.n();
    let mut steps = vec![Step::N; 2 * n];
    for i in 1..=n {
        let (hi, lo) = if s.contains(i) { (Step::E, Step::N) } else { (Step::N, Step::E) };
        steps[n + i - 1] = hi;
        steps[n - i] = lo;
    }
    SymmetricPathWord(PathWord(steps))
}

/// `p <= q` (p weakly below q): every suffix of `p` has at most as many `E`
/// steps as the same suffix of `q`.
pub fn path_leq(p: &PathWord, q: &PathWord) -> Result<bool> {
    if p.0.len() != q.0.len() {
        return Err(Error::arg(format!("paths {p} and {q} have different lengths")));
    }
    Ok((1..=p.0.len()).all(|k| p.east_suffix(k) <= q.east_suffix(k)))
}

/// Unit cells `(column, row)` of the skew diagram between two paths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkewBoxSet {
    pub n: usize,
    pub boxes: BTreeSet<(usize, usize)>,
}

impl SkewBoxSet {
    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// The cell's mirror image under `(x, y) -> (n - y, n - x)`.
    pub fn reflect(&self, (c, r): (usize, usize)) -> (usize, usize) {
        (self.n - 1 - r, self.n - 1 - c)
    }

    pub fn is_antidiagonally_symmetric(&self) -> bool {
        self.boxes.iter().all(|&b| self.boxes.contains(&self.reflect(b)))
    }

    pub fn contains_two_by_two(&self) -> bool {
        self.boxes.iter().any(|&(c, r)| {
            self.boxes.contains(&(c + 1, r))
                && self.boxes.contains(&(c, r + 1))
                && self.boxes.contains(&(c + 1, r + 1))
        })
    }
}

/// Cells lying above the lower path of `S` and below the upper path of `T`.
pub fn skew_boxes(s: &SubsetMask, t: &SubsetMask) -> Result<SkewBoxSet> {
    require_leq(s, t)?;
    let lo = path_from_subset(s).word().column_heights();
    let hi = path_from_subset(t).word().column_heights();
    let boxes = (0..s.n())
        .flat_map(|c| (lo[c]..hi[c]).map(move |r| (c, r)))
        .collect();
    Ok(SkewBoxSet { n: s.n(), boxes })
}

pub fn is_snake(s: &SubsetMask, t: &SubsetMask) -> Result<bool> {
    Ok(!skew_boxes(s, t)?.contains_two_by_two())
}

/// Lattice points shared by both bounding paths on or above the antidiagonal.
pub fn common_points_above_antidiagonal(s: &SubsetMask, t: &SubsetMask) -> Result<usize> {
    require_leq(s, t)?;
    let n = s.n();
    let p = path_from_subset(s).word().points();
    let q = path_from_subset(t).word().points();
    // points at step index k satisfy x + y = k
    Ok((n..=2 * n).filter(|&k| p[k] == q[k]).count())
}

/// The type C Catalan delta matroid on `[2n]`: lower path the bottom of the
/// box, upper path the staircase starting with `E`, i.e. `Delta[{}, {1,3,...,2n-1}]`.
pub fn catalan_spec(n: usize) -> Result<LpdmSpec> {
    if n == 0 {
        return Err(Error::arg("the Catalan delta matroid needs n >= 1"));
    }
    let ground = 2 * n;
    let upper = SubsetMask::from_members(ground, (1..ground).step_by(2))?;
    LpdmSpec::new(SubsetMask::empty(ground), upper)
}

/// SVG picture of the skew diagram of `[S, T]`: unit cells, both bounding
/// paths and the dashed antidiagonal. Output depends only on the inputs.
pub fn render_svg(s: &SubsetMask, t: &SubsetMask) -> Result<String> {
    let boxes = skew_boxes(s, t)?;
    let n = s.n();
    const UNIT: usize = 40;
    const PAD: usize = 20;
    let size = n * UNIT + 2 * PAD;
    // y grows downward in SVG
    let px = |x: usize| PAD + x * UNIT;
    let py = |y: usize| PAD + (n - y) * UNIT;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        out,
        r##"  <rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#cccccc"/>"##,
        px(0),
        py(n),
        n * UNIT,
        n * UNIT
    );
    for &(c, r) in &boxes.boxes {
        let _ = writeln!(
            out,
            r##"  <rect class="cell" x="{}" y="{}" width="{UNIT}" height="{UNIT}" fill="#cfe8cf" stroke="#555555"/>"##,
            px(c),
            py(r + 1)
        );
    }
    for (class, subset, color) in [("lower", s, "#1f4e9c"), ("upper", t, "#b22222")] {
        let pts: Vec<String> = path_from_subset(subset)
            .word()
            .points()
            .into_iter()
            .map(|(x, y)| format!("{},{}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"  <polyline class="{class}" points="{}" fill="none" stroke="{color}" stroke-width="3"/>"#,
            pts.join(" ")
        );
    }
    let _ = writeln!(
        out,
        r##"  <line class="antidiagonal" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-dasharray="6,4"/>"##,
        px(0),
        py(n),
        px(n),
        py(0)
    );
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, v: &[usize]) -> SubsetMask {
        SubsetMask::of(n, v)
    }

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn symmetry_checks() {
        assert!(is_symmetric(&w("ENNNENEEEN")));
        assert!(is_symmetric(&w("EN")));
        assert!("EE".parse::<PathWord>().is_err());
        assert!(is_symmetric(&w("ENEN")));
        assert!(is_symmetric(&w("NNEE")));
        assert!(!is_symmetric(&w("ENNE")));
    }

    #[test]
    fn signed_labels_of_a_path() {
        let p: SymmetricPathWord = "ENNNENEEEN".parse().unwrap();
        assert_eq!(subset_from_path(&p).to_vec(), [2, 3, 4]);
        assert_eq!(path_from_subset(&m(5, &[2, 3, 4])), p);
        // E steps sit at labels -5, -1, 2, 3, 4
        assert_eq!(p.word().east_positions(), [1, 5, 7, 8, 9]);
    }

    #[test]
    fn extreme_paths() {
        assert_eq!(path_from_subset(&m(2, &[])).to_string(), "EENN");
        assert_eq!(path_from_subset(&SubsetMask::full(3)).to_string(), "NNNEEE");
        assert_eq!(subset_from_path(&"EEENNN".parse().unwrap()), m(3, &[]));
        assert!("ENNE".parse::<SymmetricPathWord>().is_err());
    }

    #[test]
    fn path_order_examples() {
        assert!(path_leq(&w("EENN"), &w("ENEN")).unwrap());
        assert!(path_leq(&w("ENEN"), &w("NENE")).unwrap());
        assert!(path_leq(&w("ENEN"), &w("ENEN")).unwrap());
        assert!(!path_leq(&w("NENE"), &w("ENEN")).unwrap());
        assert!(path_leq(&w("EN"), &w("ENEN")).is_err());
    }

    #[test]
    fn skew_box_examples() {
        let s = m(3, &[1, 3]);
        assert!(skew_boxes(&s, &s).unwrap().is_empty());
        assert_eq!(skew_boxes(&m(2, &[]), &m(2, &[1, 2])).unwrap().len(), 4);
        // ENEN below NNEE: column 0 rows 0..2, column 1 row 1
        let b = skew_boxes(&m(2, &[1]), &m(2, &[1, 2])).unwrap();
        assert_eq!(b.boxes.iter().copied().collect::<Vec<_>>(), [(0, 0), (0, 1), (1, 1)]);
        // ENEN below NENE: a two-cell snake meeting at (1, 1)
        assert_eq!(skew_boxes(&m(2, &[1]), &m(2, &[2])).unwrap().len(), 2);
        assert!(skew_boxes(&m(2, &[2]), &m(2, &[1])).is_err());
    }

    #[test]
    fn snake_examples() {
        assert!(is_snake(&m(3, &[1]), &m(3, &[1, 3])).unwrap());
        for n in 2..6 {
            assert!(!is_snake(&m(n, &[]), &SubsetMask::full(n)).unwrap());
        }
        let s = m(4, &[2, 3]);
        assert!(is_snake(&s, &s).unwrap());
    }

    #[test]
    fn catalan_examples() {
        let c1 = catalan_spec(1).unwrap();
        assert_eq!(c1.lower(), m(2, &[]));
        assert_eq!(c1.upper(), m(2, &[1]));
        assert_eq!(c1.feasible_sets().len(), 2);
        let c2 = catalan_spec(2).unwrap();
        assert_eq!(c2.upper(), m(4, &[1, 3]));
        assert_eq!(c2.feasible_sets().len(), 6);
        assert_eq!(catalan_spec(3).unwrap().feasible_sets().len(), 20);
        assert!(catalan_spec(0).is_err());
    }

    #[test]
    fn common_points() {
        let s = m(3, &[1, 2]);
        assert_eq!(common_points_above_antidiagonal(&s, &s).unwrap(), 4);
        assert_eq!(common_points_above_antidiagonal(&m(3, &[]), &SubsetMask::full(3)).unwrap(), 1);
    }

    #[test]
    fn svg_is_deterministic() {
        let a = render_svg(&m(3, &[1]), &m(3, &[1, 3])).unwrap();
        let b = render_svg(&m(3, &[1]), &m(3, &[1, 3])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.matches("class=\"cell\"").count(), skew_boxes(&m(3, &[1]), &m(3, &[1, 3])).unwrap().len());
        assert!(a.contains("stroke-dasharray"));
        assert!(a.contains("class=\"lower\"") && a.contains("class=\"upper\""));
    }
}
