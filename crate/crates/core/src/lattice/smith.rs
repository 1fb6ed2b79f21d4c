use super::Matrix;
use crate::IntScalar;

/// Smith normal form `U * M * V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    /// Nonzero diagonal entries of `D`, positive, each dividing the next.
    pub factors: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
    pub diagonal: Matrix<T>,
}

impl<T: IntScalar> SmithForm<T> {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

pub fn smith<T: IntScalar>(m: &Matrix<T>) -> SmithForm<T> {
    let (factors, diagonal, left, right) = reduce(m, true, true);
    SmithForm {
        factors,
        left: left.expect("requested"),
        right: right.expect("requested"),
        diagonal,
    }
}

/// Invariant factors only.
pub(crate) fn smith_factors<T: IntScalar>(m: &Matrix<T>) -> Vec<T> {
    reduce(m, false, false).0
}

/// Invariant factors and the right transform `V`.
pub(crate) fn smith_right<T: IntScalar>(m: &Matrix<T>) -> (Vec<T>, Matrix<T>) {
    let (factors, _, _, right) = reduce(m, false, true);
    (factors, right.expect("requested"))
}

type Reduced<T> = (Vec<T>, Matrix<T>, Option<Matrix<T>>, Option<Matrix<T>>);

/// Transforms that are not requested are not tracked; they dominate the cost
/// on large sparse inputs.
fn reduce<T: IntScalar>(m: &Matrix<T>, want_left: bool, want_right: bool) -> Reduced<T> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = if want_left { Matrix::identity(rows) } else { Matrix::zeros(rows, 0) };
    let mut v = if want_right { Matrix::identity(cols) } else { Matrix::zeros(0, cols) };
    let mut factors = Vec::new();

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let Some((pr, pc)) = min_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = d.get(i, t).div_floor(d.get(t, t));
                d.row_sub(i, t, &q);
                u.row_sub(i, t, &q);
                if !d.get(i, t).is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = d.get(t, j).div_floor(d.get(t, t));
                d.col_sub(j, t, &q);
                v.col_sub(j, t, &q);
                if !d.get(t, j).is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let p = d.get(t, t).clone();
            if p.abs().is_one() {
                break;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| {
                    let x = d.get(i, j);
                    !x.is_zero() && !x.is_multiple_of(&p)
                })
            });
            match offender {
                Some(i) => {
                    let neg_one = -T::one();
                    d.row_sub(t, i, &neg_one);
                    u.row_sub(t, i, &neg_one);
                }
                None => break,
            }
        }

        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        factors.push(d.get(t, t).clone());
    }

    (factors, d, want_left.then_some(u), want_right.then_some(v))
}

fn min_nonzero<T: IntScalar>(d: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for r in t..d.rows() {
        for c in t..d.cols() {
            if d.get(r, c).is_zero() {
                continue;
            }
            let a = d.get(r, c).abs();
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                best = Some((r, c, a));
            }
        }
    }
    best.map(|(r, c, _)| (r, c))
}
