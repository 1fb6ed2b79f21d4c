//! Brute-force oracles shared by the property and acceptance tests. None of
//! these go through the crate's lattice code.
#![allow(dead_code)]

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use planarity::obstruct::WeightedIntersectionGraph;
use planarity::page::Factorization;
use planarity::Int;
use rand::Rng;

/// 0/1 winding rows, one per cycle.
pub fn winding_rows(f: &Factorization) -> Vec<Vec<i64>> {
    f.cycles()
        .iter()
        .map(|c| c.winding().iter().map(|&w| i64::from(w)).collect())
        .collect()
}

pub fn random_factorization<R: Rng>(rng: &mut R, max_holes: usize, max_cycles: usize) -> Factorization {
    let holes = rng.gen_range(1..=max_holes);
    let cycles = rng.gen_range(0..=max_cycles);
    let rows: Vec<Vec<u8>> = (0..cycles)
        .map(|_| {
            let mask = rng.gen_range(1u32..1 << holes);
            (0..holes).map(|h| (mask >> h & 1) as u8).collect()
        })
        .collect();
    Factorization::from_bits(holes, &rows).unwrap()
}

/// Every nonzero `b` with entries in `[-bound, bound]` and `sum_i b_i
/// rows[i] = 0`.
pub fn brute_kernel(rows: &[Vec<i64>], holes: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for_each_kernel_vector(rows, holes, bound, |b| out.push(b.to_vec()));
    out
}

/// Depth-first enumeration of the same set, with a reachability cut.
pub fn for_each_kernel_vector(rows: &[Vec<i64>], holes: usize, bound: i64, mut visit: impl FnMut(&[i64])) {
    let m = rows.len();
    // reach[i][h]: how far cycles i.. can still move hole h
    let mut reach = vec![vec![0i64; holes]; m + 1];
    for i in (0..m).rev() {
        for h in 0..holes {
            reach[i][h] = reach[i + 1][h] + bound * rows[i][h].abs();
        }
    }
    let mut b = vec![0i64; m];
    let mut acc = vec![0i64; holes];
    fn go(
        i: usize,
        rows: &[Vec<i64>],
        reach: &[Vec<i64>],
        bound: i64,
        b: &mut Vec<i64>,
        acc: &mut Vec<i64>,
        visit: &mut dyn FnMut(&[i64]),
    ) {
        if acc.iter().zip(&reach[i]).any(|(a, r)| a.abs() > *r) {
            return;
        }
        if i == rows.len() {
            if b.iter().any(|&x| x != 0) {
                visit(b);
            }
            return;
        }
        for x in -bound..=bound {
            b[i] = x;
            for (a, w) in acc.iter_mut().zip(&rows[i]) {
                *a += x * w;
            }
            go(i + 1, rows, reach, bound, b, acc, visit);
            for (a, w) in acc.iter_mut().zip(&rows[i]) {
                *a -= x * w;
            }
        }
        b[i] = 0;
    }
    go(0, rows, &reach, bound, &mut b, &mut acc, &mut visit);
}

/// Determinant by exact rational elimination.
pub fn determinant(m: &[Vec<i64>]) -> Ratio<i64> {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut det = Ratio::from_integer(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Ratio::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                let sub = f * a[c][k];
                a[r][k] -= sub;
            }
        }
    }
    det
}

/// Pairing of two handle combinations counted handle by handle: cores of the
/// same handle meet with the Lefschetz framing, which is one less than the
/// page framing (zero); distinct handles and page pieces are disjoint after
/// pushing into different fibers.
pub fn chain_intersection(a: &[i64], b: &[i64]) -> i64 {
    let lefschetz_framing = -1;
    let mut total = 0;
    for i in 0..a.len() {
        total += a[i] * b[i] * lefschetz_framing;
    }
    total
}

pub fn to_i64(v: &[Int]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().unwrap()).collect()
}

/// Whether `v` is an integer combination of `basis` (rows), by exact
/// rational elimination.
pub fn in_integer_span(basis: &[Vec<i64>], v: &[i64]) -> bool {
    let k = basis.len();
    let n = v.len();
    if k == 0 {
        return v.iter().all(|&x| x == 0);
    }
    // columns are basis vectors, augmented with v
    let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|r| {
            let mut row: Vec<Ratio<i64>> = (0..k).map(|c| Ratio::from_integer(basis[c][r])).collect();
            row.push(Ratio::from_integer(v[r]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = a[row][col].recip();
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..=k {
                    let sub = f * a[row][c];
                    a[r][c] -= sub;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..n).any(|r| !a[r][k].is_zero()) {
        return false;
    }
    // independent basis: the solution is unique
    assert_eq!(pivots.len(), k, "basis vectors must be independent");
    (0..k).all(|r| a[r][k].is_integer())
}

/// Sphere classes by brute force: kernel vectors with entries in
/// `{-2, -1, 0, 1}`, exactly one `+1`, and `sum (b + b^2) = 2`.
pub fn brute_sphere_classes(rows: &[Vec<i64>], holes: usize) -> Vec<Vec<i64>> {
    let m = rows.len();
    let mut out = Vec::new();
    let total = 4usize.pow(m as u32);
    for code in 0..total {
        let b: Vec<i64> = (0..m).map(|i| (code / 4usize.pow(i as u32) % 4) as i64 - 2).collect();
        let in_kernel = (0..holes).all(|h| (0..m).map(|i| b[i] * rows[i][h]).sum::<i64>() == 0);
        let adjunction: i64 = b.iter().map(|x| x + x * x).sum();
        let ones = b.iter().filter(|&&x| x == 1).count();
        if in_kernel && adjunction == 2 && ones == 1 {
            out.push(b);
        }
    }
    out.sort();
    out
}

pub fn random_intersection_graph<R: Rng>(rng: &mut R, max_vertices: usize) -> WeightedIntersectionGraph {
    let n = rng.gen_range(1..=max_vertices);
    let squares: Vec<i64> = (0..n).map(|_| -rng.gen_range(1..=4)).collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let roll = rng.gen_range(0..10);
            let mult = match roll {
                0..=5 => 0,
                6..=8 => 1,
                _ => 2,
            };
            edges.push((a, b, mult));
        }
    }
    WeightedIntersectionGraph::new(squares, &edges).unwrap()
}

/// Every (center, arm set) satisfying the configuration conditions, by
/// walking all subsets of the other vertices.
pub fn exhaustive_bad_configurations(g: &WeightedIntersectionGraph) -> Vec<(usize, Vec<usize>)> {
    let n = g.len();
    let mut out = Vec::new();
    for x in 0..n {
        let others: Vec<usize> = (0..n).filter(|&y| y != x).collect();
        for mask in 1u32..1 << others.len() {
            let arms: Vec<usize> = (0..others.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| others[i])
                .collect();
            let ok_arms = arms
                .iter()
                .all(|&b| g.intersection(b, x) == 1 && (g.square(b) == -2 || g.square(b) == -3));
            let pairwise = arms
                .iter()
                .enumerate()
                .all(|(i, &a)| arms[i + 1..].iter().all(|&b| g.intersection(a, b) == 0));
            if ok_arms && pairwise && g.square(x) > -(arms.len() as i64) {
                out.push((x, arms));
            }
        }
    }
    out
}

/// Brute-force search for vectors in `Z^n` realizing the negative Gram `q`
/// in `-I_n`, with no symmetry reduction.
pub fn brute_diagonal_embedding(q: &[Vec<i64>], n: usize) -> Option<Vec<Vec<i64>>> {
    let r = q.len();
    let max_norm = q.iter().enumerate().map(|(i, row)| -row[i]).max().unwrap_or(0);
    let mut by_norm: Vec<Vec<Vec<i64>>> = vec![Vec::new(); max_norm as usize + 1];
    let limit = (0..).find(|x| x * x > max_norm).unwrap();
    let total = (2 * limit + 1).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let v: Vec<i64> = (0..n)
            .map(|_| {
                let x = c % (2 * limit + 1) - limit;
                c /= 2 * limit + 1;
                x
            })
            .collect();
        let norm: i64 = v.iter().map(|x| x * x).sum();
        if norm > 0 && norm <= max_norm {
            by_norm[norm as usize].push(v);
        }
    }
    fn go(q: &[Vec<i64>], by_norm: &[Vec<Vec<i64>>], chosen: &mut Vec<Vec<i64>>) -> bool {
        let i = chosen.len();
        if i == q.len() {
            return true;
        }
        for v in &by_norm[(-q[i][i]) as usize] {
            let fits = chosen
                .iter()
                .enumerate()
                .all(|(j, w)| -v.iter().zip(w).map(|(a, b)| a * b).sum::<i64>() == q[i][j]);
            if fits {
                chosen.push(v.clone());
                if go(q, by_norm, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(r);
    go(q, &by_norm, &mut chosen).then_some(chosen)
}
