//! Embeddings of a negative definite form into the standard negative
//! diagonal lattice `-I_N`.
//!
//! An image vector `v` of a basis element with square `q` satisfies
//! `v.v = |q|`, so it has at most `|q|` nonzero coordinates. The union of all
//! supports therefore has at most `sum |q_ii|` coordinates, and searching that
//! many coordinates decides embeddability.
//!
//! The search is a depth-first backtrack over basis elements. Coordinates are
//! treated up to signed permutation:
//! - coordinates not touched by any earlier image ("fresh" coordinates) are
//!   only opened in order, with positive, non-increasing entries;
//! - two touched coordinates with identical history must receive
//!   non-increasing entries.
//!
//! Both rules keep at least one representative of every orbit of solutions,
//! so the search stays complete and its first witness is deterministic.

use serde::Serialize;

use super::{is_negative_definite, negative_gram, Matrix};
use crate::{Error, Int, IntScalar, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalEmbedding {
    /// Number of coordinates the witness actually uses.
    pub rank: usize,
    /// Image of each basis element, in input order, as vectors of length `rank`.
    #[serde(serialize_with = "crate::serde_int::rows")]
    pub images: Vec<Vec<Int>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum EmbeddingOutcome {
    Embedded(DiagonalEmbedding),
    NotEmbeddable { searched_rank: usize },
}

impl EmbeddingOutcome {
    pub fn witness(&self) -> Option<&DiagonalEmbedding> {
        match self {
            EmbeddingOutcome::Embedded(e) => Some(e),
            EmbeddingOutcome::NotEmbeddable { .. } => None,
        }
    }
}

/// Largest diagonal lattice the search will explore. Also keeps coordinates
/// and inner products well inside `i64`.
pub const MAX_SEARCH_RANK: usize = 4096;

/// Configurable search; [`diagonal_embedding`] runs it with defaults.
#[derive(Clone, Debug, Default)]
pub struct EmbeddingSearch {
    bound: Option<usize>,
}

impl EmbeddingSearch {
    pub fn new() -> Self {
        Self::default()
    }

    /// Search more coordinates than the complete bound. Lowering the bound
    /// would make a refusal meaningless, so that is rejected at run time.
    pub fn with_bound(mut self, bound: usize) -> Self {
        self.bound = Some(bound);
        self
    }

    /// The complete search bound `sum |q_ii|`.
    pub fn complete_bound<T: IntScalar>(q: &Matrix<T>) -> Result<usize> {
        let mut total = 0usize;
        for i in 0..q.rows() {
            let d = q
                .get(i, i)
                .abs()
                .to_usize()
                .ok_or_else(|| Error::Invalid("diagonal entry too large to search".into()))?;
            total = total
                .checked_add(d)
                .ok_or_else(|| Error::Invalid("search bound overflows".into()))?;
        }
        Ok(total)
    }

    pub fn run<T: IntScalar>(&self, q: &Matrix<T>) -> Result<EmbeddingOutcome> {
        if !is_negative_definite(q)? {
            return Err(Error::NotNegativeDefinite);
        }
        let minimum = Self::complete_bound(q)?;
        let bound = match self.bound {
            Some(b) if b < minimum => {
                return Err(Error::BoundTooSmall {
                    requested: b,
                    minimum,
                })
            }
            Some(b) => b,
            None => minimum,
        };
        if bound > MAX_SEARCH_RANK {
            return Err(Error::Invalid(format!(
                "search over {bound} coordinates exceeds the supported {MAX_SEARCH_RANK}"
            )));
        }

        let n = q.rows();
        let mut gram = vec![vec![0i64; n]; n];
        for (s, row) in gram.iter_mut().enumerate() {
            for (t, g) in row.iter_mut().enumerate() {
                *g = (-q.get(s, t).clone())
                    .to_i64()
                    .ok_or_else(|| Error::Invalid("form entry too large to search".into()))?;
            }
        }

        let order = processing_order(&gram);
        let mut search = Search {
            gram: &gram,
            order: &order,
            bound,
            placed: Vec::with_capacity(n),
            used: 0,
        };
        if !search.place(0) {
            return Ok(EmbeddingOutcome::NotEmbeddable {
                searched_rank: bound,
            });
        }

        let rank = search.used;
        let mut images = vec![Vec::new(); n];
        for (k, &s) in order.iter().enumerate() {
            let mut v: Vec<Int> = search.placed[k].iter().map(|&x| Int::from(x)).collect();
            v.resize(rank, Int::from(0));
            images[s] = v;
        }

        // re-check the witness independently of the search bookkeeping
        let expected = q.map(|v| Int::from(v.to_i64().expect("checked above")));
        assert_eq!(negative_gram(&images), expected, "embedding witness does not reproduce the form");

        Ok(EmbeddingOutcome::Embedded(DiagonalEmbedding { rank, images }))
    }
}

/// Decide whether the negative definite form `q` embeds in some `-I_N`.
pub fn diagonal_embedding<T: IntScalar>(q: &Matrix<T>) -> Result<EmbeddingOutcome> {
    EmbeddingSearch::new().run(q)
}

/// Greedy order: start from the element of smallest norm, then always take
/// the element with the most nonzero products against those already chosen
/// (ties by norm, then index). Constraints bite earlier this way.
fn processing_order(gram: &[Vec<i64>]) -> Vec<usize> {
    let n = gram.len();
    let mut chosen = Vec::with_capacity(n);
    let mut taken = vec![false; n];
    while chosen.len() < n {
        let next = (0..n)
            .filter(|&i| !taken[i])
            .min_by_key(|&i| {
                let links = chosen.iter().filter(|&&j: &&usize| gram[i][j] != 0).count();
                (std::cmp::Reverse(links), gram[i][i], i)
            })
            .expect("an untaken element remains");
        taken[next] = true;
        chosen.push(next);
    }
    chosen
}

struct Search<'a> {
    gram: &'a [Vec<i64>],
    order: &'a [usize],
    bound: usize,
    /// Images placed so far, in processing order, each of length `used`
    /// at the time it was placed (shorter ones are implicitly zero-padded).
    placed: Vec<Vec<i64>>,
    used: usize,
}

impl Search<'_> {
    fn place(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let s = self.order[k];
        let norm = self.gram[s][s];
        let targets: Vec<i64> = self.order[..k].iter().map(|&t| self.gram[s][t]).collect();

        let used = self.used;
        let history: Vec<Vec<i64>> = (0..used)
            .map(|c| self.placed.iter().map(|v| v.get(c).copied().unwrap_or(0)).collect())
            .collect();
        // tail[c][t] = squared norm of placed[t] on coordinates c..used
        let mut tail = vec![vec![0i64; k]; used + 1];
        for c in (0..used).rev() {
            for t in 0..k {
                tail[c][t] = tail[c + 1][t] + history[c][t] * history[c][t];
            }
        }
        let same_as_prev: Vec<bool> = (0..used).map(|c| c > 0 && history[c] == history[c - 1]).collect();

        let mut ctx = Candidate {
            history: &history,
            tail: &tail,
            same_as_prev: &same_as_prev,
            targets: &targets,
            entries: vec![0; used],
            partial: vec![0; k],
        };
        let mut found = false;
        let saved_used = self.used;
        ctx.touched(0, norm, &mut |entries, rest| {
            // all products with earlier images are settled; spend the rest
            // of the norm on fresh coordinates
            let room = self.bound - used;
            let mut fresh = Vec::new();
            squares_partitions(rest, rest, room, &mut fresh, &mut |parts| {
                let mut v = entries.to_vec();
                v.extend_from_slice(parts);
                self.used = used + parts.len();
                self.placed.push(v);
                if self.place(k + 1) {
                    found = true;
                    return true;
                }
                self.placed.pop();
                self.used = saved_used;
                false
            })
        });
        found
    }
}

struct Candidate<'a> {
    history: &'a [Vec<i64>],
    tail: &'a [Vec<i64>],
    same_as_prev: &'a [bool],
    targets: &'a [i64],
    entries: Vec<i64>,
    partial: Vec<i64>,
}

impl Candidate<'_> {
    /// Enumerate entries on touched coordinates `c..`, with `budget` of the
    /// squared norm left. Calls `emit` once all products match; stops as soon
    /// as `emit` returns true.
    fn touched(&mut self, c: usize, budget: i64, emit: &mut dyn FnMut(&[i64], i64) -> bool) -> bool {
        // Cauchy-Schwarz: the remaining coordinates must be able to close
        // every residual product
        for t in 0..self.targets.len() {
            let r = self.targets[t] - self.partial[t];
            if r * r > budget * self.tail[c][t] {
                return false;
            }
        }
        if c == self.history.len() {
            return emit(&self.entries, budget);
        }
        let mut hi = isqrt(budget);
        if self.same_as_prev[c] {
            hi = hi.min(self.entries[c - 1]);
        }
        let mut x = -isqrt(budget);
        while x <= hi {
            self.entries[c] = x;
            for t in 0..self.targets.len() {
                self.partial[t] += x * self.history[c][t];
            }
            let stop = self.touched(c + 1, budget - x * x, emit);
            for t in 0..self.targets.len() {
                self.partial[t] -= x * self.history[c][t];
            }
            if stop {
                return true;
            }
            x += 1;
        }
        self.entries[c] = 0;
        false
    }
}

/// Write `rest` as a sum of at most `room` positive squares, parts
/// non-increasing and each at most `max`, in lexicographic order.
fn squares_partitions(
    rest: i64,
    max: i64,
    room: usize,
    parts: &mut Vec<i64>,
    emit: &mut dyn FnMut(&[i64]) -> bool,
) -> bool {
    if rest == 0 {
        return emit(parts);
    }
    if room == 0 || rest > room as i64 * max * max {
        return false;
    }
    for x in 1..=isqrt(rest).min(max) {
        parts.push(x);
        if squares_partitions(rest - x * x, x, room - 1, parts, emit) {
            return true;
        }
        parts.pop();
    }
    false
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    // Newton iteration from above
    let mut r = n;
    loop {
        let next = (r + n / r) / 2;
        if next >= r {
            return r;
        }
        r = next;
    }
}
