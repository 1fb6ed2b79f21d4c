//! Homology of the Lefschetz fibration over the disk built from a
//! factorization.
//!
//! The total space is the product of the page with a disk plus one 2-handle
//! per vanishing cycle. Second homology is the lattice of null-homologous
//! integer combinations of the cycles; two such combinations `b`, `b'`
//! intersect in `-sum b_i b'_i` and `c1` evaluates to `sum b_i`. Since only
//! 2-handles are attached, `H1` is the first homology of the page modulo the
//! cycle classes.

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::lattice::{self, Matrix};
use crate::page::Factorization;
use crate::{Int, IntMatrix};

/// The `holes x cycles` matrix whose column `i` is the winding vector of
/// cycle `i`.
pub fn winding_matrix(f: &Factorization) -> IntMatrix {
    Matrix::from_fn(f.holes(), f.len(), |h, i| {
        if f.cycles()[i].winding()[h] {
            Int::one()
        } else {
            Int::zero()
        }
    })
}

/// Basis of `H2` as coefficient vectors over the cycles.
pub fn second_homology(f: &Factorization) -> Vec<Vec<Int>> {
    lattice::kernel_basis(&winding_matrix(f))
}

/// Invariant factors of `H1` (zeros for free summands).
pub fn first_homology(f: &Factorization) -> Vec<Int> {
    lattice::cokernel_invariants(&winding_matrix(f))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionLattice {
    pub holes: usize,
    pub cycles: usize,
    #[serde(serialize_with = "crate::serde_int::rows")]
    pub basis: Vec<Vec<Int>>,
    #[serde(serialize_with = "serialize_matrix")]
    pub gram: IntMatrix,
    #[serde(serialize_with = "crate::serde_int::vec")]
    pub c1: Vec<Int>,
}

impl IntersectionLattice {
    /// Intersection data for an arbitrary basis of null-homologous
    /// combinations. The caller is responsible for the basis spanning `H2`.
    pub fn from_basis(holes: usize, cycles: usize, basis: Vec<Vec<Int>>) -> Self {
        let gram = lattice::negative_gram(&basis);
        let c1 = basis
            .iter()
            .map(|b| b.iter().fold(Int::zero(), |acc, x| acc + x))
            .collect();
        IntersectionLattice {
            holes,
            cycles,
            basis,
            gram,
            c1,
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Pairing of two coefficient vectors.
    pub fn pair(a: &[Int], b: &[Int]) -> Int {
        -lattice::dot(a, b)
    }
}

pub(crate) fn serialize_matrix<S: serde::Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
    crate::serde_int::rows(&m.to_rows(), s)
}

pub fn intersection_form(f: &Factorization) -> IntersectionLattice {
    let lat = IntersectionLattice::from_basis(f.holes(), f.len(), second_homology(f));
    debug_assert!(
        lattice::is_negative_definite(&lat.gram).unwrap_or(false),
        "intersection form of a planar fibration must be negative definite"
    );
    lat
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    #[serde(serialize_with = "crate::serde_int::vec")]
    pub h1: Vec<Int>,
    pub h2_rank: usize,
    pub euler: i64,
    pub signature: i64,
    pub chi_plus_sigma: i64,
}

impl HomologyReport {
    /// `H1` has no free part, so the boundary is a rational homology sphere
    /// whenever the filling is negative definite.
    pub fn h1_is_torsion(&self) -> bool {
        self.h1.iter().all(|d| !d.is_zero())
    }

    pub fn h1_order(&self) -> Option<Int> {
        self.h1_is_torsion()
            .then(|| self.h1.iter().fold(Int::one(), |acc, d| acc * d.abs()))
    }
}

pub fn homology_report(f: &Factorization) -> HomologyReport {
    let h1 = first_homology(f);
    let h2_rank = second_homology(f).len();
    // page has Euler characteristic 1 - n, each 2-handle adds one
    let euler = 1 - f.holes() as i64 + f.len() as i64;
    let signature = -(h2_rank as i64);
    HomologyReport {
        h1,
        h2_rank,
        euler,
        signature,
        chi_plus_sigma: euler + signature,
    }
}

pub fn is_integral_homology_ball(f: &Factorization) -> bool {
    first_homology(f).is_empty() && second_homology(f).is_empty()
}

/// Everything `check-fibration` reports about the filling itself.
#[derive(Clone, Debug, Serialize)]
pub struct FillingReport {
    #[serde(flatten)]
    pub homology: HomologyReport,
    #[serde(serialize_with = "serialize_matrix")]
    pub gram: IntMatrix,
    #[serde(serialize_with = "crate::serde_int::vec")]
    pub c1: Vec<Int>,
    #[serde(serialize_with = "crate::serde_int::rows")]
    pub basis: Vec<Vec<Int>>,
}

pub fn filling_report(f: &Factorization) -> FillingReport {
    let lat = intersection_form(f);
    FillingReport {
        homology: homology_report(f),
        gram: lat.gram,
        c1: lat.c1,
        basis: lat.basis,
    }
}

/// Smallest self-intersection among the basis vectors, if any.
pub fn min_basis_square(lat: &IntersectionLattice) -> Option<i64> {
    (0..lat.rank())
        .filter_map(|s| lat.gram.get(s, s).to_i64())
        .min()
}
