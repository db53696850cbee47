//! Smith normal form over ℤ.
//!
//! `D = U · A · V` with `U`, `V` unimodular and `D` diagonal, its nonzero
//! entries positive with each dividing the next. Pivots are chosen as the
//! nonzero entry of least absolute value, ties broken by lowest (row, column),
//! so the transforms are reproducible.

use super::{cmul, csub, IntMatrix};
use crate::error::Result;

/// A unimodular transform together with its inverse.
#[derive(Clone, Debug)]
pub struct Transform {
    pub forward: IntMatrix,
    pub inverse: IntMatrix,
}

#[derive(Clone, Debug)]
pub struct Smith {
    /// Nonzero diagonal entries `d_1 | d_2 | …`, all positive.
    pub diagonal: Vec<i64>,
    /// `U` and `U⁻¹`, if requested.
    pub left: Option<Transform>,
    /// `V` and `V⁻¹`, if requested.
    pub right: Option<Transform>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }
}

struct Work {
    a: IntMatrix,
    left: Option<Transform>,
    right: Option<Transform>,
}

fn row_combine(m: &mut IntMatrix, target: usize, source: usize, q: i64) -> Result<()> {
    // row_target -= q * row_source
    for j in 0..m.cols() {
        let s = m.get(source, j);
        if s != 0 {
            let v = csub(m.get(target, j), cmul(q, s)?)?;
            m.set(target, j, v);
        }
    }
    Ok(())
}

fn col_combine(m: &mut IntMatrix, target: usize, source: usize, q: i64) -> Result<()> {
    // col_target -= q * col_source
    for i in 0..m.rows() {
        let s = m.get(i, source);
        if s != 0 {
            let v = csub(m.get(i, target), cmul(q, s)?)?;
            m.set(i, target, v);
        }
    }
    Ok(())
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for j in 0..m.cols() {
            let t = m.get(a, j);
            m.set(a, j, m.get(b, j));
            m.set(b, j, t);
        }
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a != b {
        for i in 0..m.rows() {
            let t = m.get(i, a);
            m.set(i, a, m.get(i, b));
            m.set(i, b, t);
        }
    }
}

impl Work {
    fn row_op(&mut self, target: usize, source: usize, q: i64) -> Result<()> {
        row_combine(&mut self.a, target, source, q)?;
        if let Some(t) = &mut self.left {
            row_combine(&mut t.forward, target, source, q)?;
            // inverse: col_source += q * col_target
            col_combine(&mut t.inverse, source, target, -q)?;
        }
        Ok(())
    }

    fn col_op(&mut self, target: usize, source: usize, q: i64) -> Result<()> {
        col_combine(&mut self.a, target, source, q)?;
        if let Some(t) = &mut self.right {
            col_combine(&mut t.forward, target, source, q)?;
            // inverse: row_source += q * row_target
            row_combine(&mut t.inverse, source, target, -q)?;
        }
        Ok(())
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        swap_rows(&mut self.a, a, b);
        if let Some(t) = &mut self.left {
            swap_rows(&mut t.forward, a, b);
            swap_cols(&mut t.inverse, a, b);
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        swap_cols(&mut self.a, a, b);
        if let Some(t) = &mut self.right {
            swap_cols(&mut t.forward, a, b);
            swap_rows(&mut t.inverse, a, b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.a.cols() {
            let v = self.a.get(r, j);
            self.a.set(r, j, -v);
        }
        if let Some(t) = &mut self.left {
            for j in 0..t.forward.cols() {
                let v = t.forward.get(r, j);
                t.forward.set(r, j, -v);
            }
            for i in 0..t.inverse.rows() {
                let v = t.inverse.get(i, r);
                t.inverse.set(i, r, -v);
            }
        }
    }

    fn global_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in t..self.a.rows() {
            for (j, &v) in self.a.row(i).iter().enumerate().skip(t) {
                if v != 0 {
                    let abs = v.unsigned_abs() as i64;
                    if best.is_none_or(|(b, _, _)| abs < b) {
                        best = Some((abs, i, j));
                        if abs == 1 {
                            return Some((i, j));
                        }
                    }
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn cross_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i64, usize, usize)> = None;
        let mut consider = |abs: i64, i: usize, j: usize| {
            let better = match best {
                None => true,
                Some((b, bi, bj)) => abs < b || (abs == b && (i, j) < (bi, bj)),
            };
            if better {
                best = Some((abs, i, j));
            }
        };
        for i in t..self.a.rows() {
            let v = self.a.get(i, t);
            if v != 0 {
                consider(v.unsigned_abs() as i64, i, t);
            }
        }
        for j in t + 1..self.a.cols() {
            let v = self.a.get(t, j);
            if v != 0 {
                consider(v.unsigned_abs() as i64, t, j);
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn bring_to(&mut self, t: usize, (i, j): (usize, usize)) {
        self.row_swap(t, i);
        self.col_swap(t, j);
    }
}

/// Computes the Smith normal form of `a`, tracking the left and/or right
/// transforms on request.
pub fn smith(a: &IntMatrix, want_left: bool, want_right: bool) -> Result<Smith> {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        left: want_left.then(|| Transform { forward: IntMatrix::identity(m), inverse: IntMatrix::identity(m) }),
        right: want_right.then(|| Transform { forward: IntMatrix::identity(n), inverse: IntMatrix::identity(n) }),
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < m.min(n) {
        let Some(p) = w.global_pivot(t) else { break };
        w.bring_to(t, p);
        loop {
            let pivot = w.a.get(t, t);
            let mut clean = true;
            for i in t + 1..m {
                let v = w.a.get(i, t);
                if v != 0 {
                    w.row_op(i, t, v / pivot)?;
                    clean &= w.a.get(i, t) == 0;
                }
            }
            for j in t + 1..n {
                let v = w.a.get(t, j);
                if v != 0 {
                    w.col_op(j, t, v / pivot)?;
                    clean &= w.a.get(t, j) == 0;
                }
            }
            if !clean {
                let p = w.cross_pivot(t).expect("nonzero remainder present");
                w.bring_to(t, p);
                continue;
            }
            let offender = (t + 1..m).find(|&i| w.a.row(i)[t + 1..].iter().any(|&v| v % pivot != 0));
            match offender {
                // row_t += row_i, then eliminate again
                Some(i) => w.row_op(t, i, -1)?,
                None => break,
            }
        }
        if w.a.get(t, t) < 0 {
            w.negate_row(t);
        }
        diagonal.push(w.a.get(t, t));
        t += 1;
    }
    Ok(Smith { diagonal, left: w.left, right: w.right })
}
