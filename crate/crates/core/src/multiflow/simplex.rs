//! Exact two-phase simplex over arbitrary-precision rationals, with Bland's
//! rule so that degenerate pivots cannot cycle.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

/// `max c·x` subject to `rows` and `x >= 0`.
#[derive(Debug, Clone)]
pub struct Lp {
    pub c: Vec<Q>,
    pub rows: Vec<(Vec<Q>, Sense, Q)>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Q>, value: Q },
    Infeasible,
    Unbounded,
}

struct Tableau {
    t: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cols: usize,
    allowed: Vec<bool>,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Q {
        &self.t[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for v in self.t[r].iter_mut() {
            *v = &*v / &p;
        }
        let row = self.t[r].clone();
        for (i, other) in self.t.iter_mut().enumerate() {
            if i == r || other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for (v, w) in other.iter_mut().zip(&row) {
                if !w.is_zero() {
                    *v -= &f * w;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `obj` (indexed by column); `false` when unbounded.
    fn optimize(&mut self, obj: &[Q]) -> bool {
        loop {
            let entering = (0..self.cols).find(|&j| {
                if !self.allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut r = obj[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !self.t[i][j].is_zero() {
                        r -= &obj[b] * &self.t[i][j];
                    }
                }
                r.is_positive()
            });
            let Some(j) = entering else { return true };
            let mut best: Option<(Q, usize, usize)> = None;
            for i in 0..self.t.len() {
                if self.t[i][j].is_positive() {
                    let ratio = self.rhs(i) / &self.t[i][j];
                    let better = match &best {
                        None => true,
                        Some((q, _, b)) => ratio < *q || (ratio == *q && self.basis[i] < *b),
                    };
                    if better {
                        best = Some((ratio, i, self.basis[i]));
                    }
                }
            }
            match best {
                Some((_, i, _)) => self.pivot(i, j),
                None => return false,
            }
        }
    }

    fn value(&self, obj: &[Q]) -> Q {
        self.basis.iter().enumerate().map(|(i, &b)| &obj[b] * self.rhs(i)).sum()
    }
}

pub fn solve(lp: &Lp) -> LpOutcome {
    let n = lp.c.len();
    let m = lp.rows.len();
    let mut slack_cols = 0;
    let mut art_cols = 0;
    for (_, s, b) in &lp.rows {
        let s = normalized(*s, b);
        slack_cols += usize::from(s != Sense::Eq);
        art_cols += usize::from(s != Sense::Le);
    }
    let cols = n + slack_cols + art_cols;
    let mut t = vec![vec![Q::zero(); cols + 1]; m];
    let mut basis = vec![0; m];
    let (mut next_slack, mut next_art) = (n, n + slack_cols);
    for (i, (a, s, b)) in lp.rows.iter().enumerate() {
        let flip = b.is_negative();
        let sign = if flip { -Q::one() } else { Q::one() };
        for (j, v) in a.iter().enumerate() {
            t[i][j] = v * &sign;
        }
        t[i][cols] = b * &sign;
        match normalized(*s, b) {
            Sense::Le => {
                t[i][next_slack] = Q::one();
                basis[i] = next_slack;
                next_slack += 1;
            }
            Sense::Ge => {
                t[i][next_slack] = -Q::one();
                next_slack += 1;
                t[i][next_art] = Q::one();
                basis[i] = next_art;
                next_art += 1;
            }
            Sense::Eq => {
                t[i][next_art] = Q::one();
                basis[i] = next_art;
                next_art += 1;
            }
        }
    }
    let mut tab = Tableau { t, basis, cols, allowed: vec![true; cols] };
    if art_cols > 0 {
        let mut phase1 = vec![Q::zero(); cols];
        for v in phase1.iter_mut().skip(n + slack_cols) {
            *v = -Q::one();
        }
        tab.optimize(&phase1);
        if tab.value(&phase1).is_negative() {
            return LpOutcome::Infeasible;
        }
        // drive remaining artificial variables out of the basis
        let mut i = 0;
        while i < tab.t.len() {
            if tab.basis[i] >= n + slack_cols {
                match (0..n + slack_cols).find(|&j| !tab.t[i][j].is_zero()) {
                    Some(j) => tab.pivot(i, j),
                    None => {
                        tab.t.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
        for a in tab.allowed.iter_mut().skip(n + slack_cols) {
            *a = false;
        }
    }
    let mut obj = vec![Q::zero(); cols];
    obj[..n].clone_from_slice(&lp.c);
    if !tab.optimize(&obj) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Q::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rhs(i).clone();
        }
    }
    let value = tab.value(&obj);
    LpOutcome::Optimal { x, value }
}

fn normalized(s: Sense, b: &Q) -> Sense {
    match (s, b.is_negative()) {
        (Sense::Le, true) => Sense::Ge,
        (Sense::Ge, true) => Sense::Le,
        (s, _) => s,
    }
}
