//! Dense two-phase simplex method over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: Rational, x: Vec<Rational> },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, r: usize) -> &Rational {
        &self.rows[r][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximises `cost . x` over columns `< allowed`; false when unbounded.
    fn optimise(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            // Bland: lowest-index improving column
            let entering = (0..allowed).find(|&j| {
                if self.basis.contains(&j) {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !self.rows[r][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[r][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(c) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r) / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn value(&self, cost: &[Rational]) -> Rational {
        self.basis.iter().enumerate().map(|(r, &b)| &cost[b] * self.rhs(r)).sum()
    }
}

/// Maximises `c . x` subject to `A x = b`, `x >= 0`.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert_eq!(b.len(), m);
    assert!(a.iter().all(|row| row.len() == n));
    let cols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<Rational> = row.iter().map(|v| if flip { -v } else { v.clone() }).collect();
        r.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        r.push(if flip { -&b[i] } else { b[i].clone() });
        rows.push(r);
    }
    let mut t = Tableau { rows, basis: (n..n + m).collect(), cols };

    let phase1: Vec<Rational> = (0..cols).map(|j| if j < n { Rational::zero() } else { -Rational::one() }).collect();
    t.optimise(&phase1, cols);
    if !t.value(&phase1).is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive artificial variables out of the basis, dropping redundant rows
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(j) => t.pivot(r, j),
                None => {
                    t.rows.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    let mut cost = c.to_vec();
    cost.extend((0..m).map(|_| Rational::zero()));
    if !t.optimise(&cost, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &bcol) in t.basis.iter().enumerate() {
        x[bcol] = t.rhs(r).clone();
    }
    LpOutcome::Optimal { value: t.value(&cost), x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn small_programs() {
        // max x + y, x + y + s = 4, x + 3y + t = 6
        let a = vec![v(&[1, 1, 1, 0]), v(&[1, 3, 0, 1])];
        match maximize(&a, &v(&[4, 6]), &v(&[1, 1, 0, 0])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(4)),
            other => panic!("{other:?}"),
        }
        // max 2x + 3y with x + 3y <= 6, x + y <= 4 -> (3, 1), value 9
        match maximize(&a, &v(&[4, 6]), &v(&[2, 3, 0, 0])) {
            LpOutcome::Optimal { value, x } => {
                assert_eq!(value, int(9));
                assert_eq!(x[..2], v(&[3, 1])[..]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn infeasible_and_unbounded() {
        assert_eq!(maximize(&[v(&[1, 1])], &v(&[-1]), &v(&[0, 0])), LpOutcome::Infeasible);
        assert_eq!(maximize(&[v(&[1, -1])], &v(&[0]), &v(&[1, 0])), LpOutcome::Unbounded);
    }

    #[test]
    fn redundant_rows() {
        let a = vec![v(&[1, 1]), v(&[2, 2])];
        match maximize(&a, &v(&[1, 2]), &v(&[1, 0])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, int(1)),
            other => panic!("{other:?}"),
        }
        let a = vec![v(&[2, 1])];
        match maximize(&a, &[rat(1, 2)], &v(&[0, 1])) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat(1, 2)),
            other => panic!("{other:?}"),
        }
    }
}
