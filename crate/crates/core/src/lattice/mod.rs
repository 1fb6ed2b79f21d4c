//! Exact integer linear algebra: Smith normal form, integer kernels and
//! cokernels, definiteness, and embeddings into the negative definite
//! diagonal lattice.
//!
//! Everything here is generic over [`IntScalar`]. No floating point is used.

mod embed;
mod matrix;
mod smith;

pub use embed::{diagonal_embedding, DiagonalEmbedding, EmbeddingOutcome, EmbeddingSearch, MAX_SEARCH_RANK};
pub use matrix::{dot, Matrix};
pub use smith::{smith, SmithForm};

use crate::{IntScalar, Result};

/// A saturated basis of the integer kernel `{b : M b = 0}`.
///
/// The basis is canonical: the Hermite normal form of the kernel lattice,
/// followed by a deterministic pairwise norm reduction. Every returned vector
/// is primitive and has a positive first nonzero entry.
pub fn kernel_basis<T: IntScalar>(m: &Matrix<T>) -> Vec<Vec<T>> {
    let (factors, right) = smith::smith_right(m);
    let raw: Vec<Vec<T>> = (factors.len()..m.cols()).map(|c| right.column(c)).collect();
    let mut basis = hermite_rows(raw);
    reduce_pairwise(&mut basis);
    for v in &mut basis {
        normalize_sign(v);
    }
    basis
}

/// Invariant factors of `Z^rows / colspan(M)` in divisibility order: the
/// non-unit torsion coefficients followed by one zero per free summand.
pub fn cokernel_invariants<T: IntScalar>(m: &Matrix<T>) -> Vec<T> {
    let factors = smith::smith_factors(m);
    let mut out: Vec<T> = factors.iter().filter(|d| !d.is_one()).cloned().collect();
    out.extend((factors.len()..m.rows()).map(|_| T::zero()));
    out
}

/// True iff every leading principal minor `d_k` has sign `(-1)^k`.
/// The empty form is (vacuously) negative definite.
pub fn is_negative_definite<T: IntScalar>(q: &Matrix<T>) -> Result<bool> {
    q.check_symmetric()?;
    Ok(q.leading_minors().iter().enumerate().all(|(k, d)| match d {
        Some(d) if k % 2 == 0 => d.is_negative(),
        Some(d) => d.is_positive(),
        None => false,
    }))
}

/// Gram matrix of the given vectors under the negative diagonal form
/// `<u, v> = -sum u_i v_i`.
pub fn negative_gram<T: IntScalar>(vectors: &[Vec<T>]) -> Matrix<T> {
    let n = vectors.len();
    Matrix::from_fn(n, n, |s, t| -dot(&vectors[s], &vectors[t]))
}

/// Row-style Hermite normal form of the lattice spanned by `rows`; zero rows
/// are dropped. Pivots are positive and entries above each pivot lie in
/// `[0, pivot)`.
pub fn hermite_rows<T: IntScalar>(rows: Vec<Vec<T>>) -> Vec<Vec<T>> {
    let Some(width) = rows.first().map(Vec::len) else {
        return rows;
    };
    let mut a = rows;
    let mut pivot_row = 0;
    for col in 0..width {
        if pivot_row == a.len() {
            break;
        }
        // gcd-reduce the column below pivot_row into a single entry
        loop {
            let best = (pivot_row..a.len())
                .filter(|&i| !a[i][col].is_zero())
                .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
            let Some(b) = best else { break };
            a.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..a.len() {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = a[i][col].div_floor(&a[pivot_row][col]);
                sub_scaled(&mut a, i, pivot_row, &q);
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[pivot_row][col].is_zero() {
            continue;
        }
        if a[pivot_row][col].is_negative() {
            for x in &mut a[pivot_row] {
                *x = -x.clone();
            }
        }
        for i in 0..pivot_row {
            let q = a[i][col].div_floor(&a[pivot_row][col]);
            sub_scaled(&mut a, i, pivot_row, &q);
        }
        pivot_row += 1;
    }
    a.truncate(pivot_row);
    a
}

fn sub_scaled<T: IntScalar>(a: &mut [Vec<T>], target: usize, source: usize, q: &T) {
    if q.is_zero() {
        return;
    }
    let src = a[source].clone();
    for (x, y) in a[target].iter_mut().zip(src) {
        *x = x.clone() - q.clone() * y;
    }
}

/// Repeatedly replace `b_s` by `b_s - q b_t` whenever that strictly shortens
/// it. Unimodular, so the span is unchanged; terminates because the total
/// squared norm strictly decreases.
fn reduce_pairwise<T: IntScalar>(basis: &mut [Vec<T>]) {
    let two = T::one() + T::one();
    loop {
        let mut improved = false;
        for s in 0..basis.len() {
            for t in 0..basis.len() {
                if s == t {
                    continue;
                }
                let nt = dot(&basis[t], &basis[t]);
                let st = dot(&basis[s], &basis[t]);
                // nearest integer to st / nt
                let q = (two.clone() * st.clone() + nt.clone()).div_floor(&(two.clone() * nt.clone()));
                if q.is_zero() {
                    continue;
                }
                // |b_s - q b_t|^2 - |b_s|^2 = q^2 nt - 2 q st
                let delta = q.clone() * q.clone() * nt - two.clone() * q.clone() * st;
                if delta.is_negative() {
                    let bt = basis[t].clone();
                    for (x, y) in basis[s].iter_mut().zip(bt) {
                        *x = x.clone() - q.clone() * y;
                    }
                    improved = true;
                }
            }
        }
        if !improved {
            break;
        }
    }
}

fn normalize_sign<T: IntScalar>(v: &mut [T]) {
    if v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in v.iter_mut() {
            *x = -x.clone();
        }
    }
}
