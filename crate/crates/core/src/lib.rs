//! Planarity checks for contact 3-manifolds.
//!
//! The crate works from purely combinatorial data: vanishing-cycle
//! factorizations on a planar page, weighted plumbing graphs, Seifert
//! invariants, and finite group presentations. From these it computes the
//! homology and intersection lattice of the associated Lefschetz fibration and
//! runs the obstructions that rule out (or, for resolution graphs, certify)
//! planarity of the contact structure on the boundary.
//!
//! Exact integer linear algebra lives in [`lattice`] and is generic over any
//! [`IntScalar`]; the domain modules use the arbitrary precision aliases
//! defined here.

pub mod error;
pub mod fillhomology;
pub mod grouppres;
pub mod lattice;
pub mod obstruct;
pub mod page;
pub mod plumbing;
mod serde_int;

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

pub use error::{Error, ParseError, Result};

/// Integer types the exact linear algebra runs over.
///
/// Implemented for every signed primitive integer and for [`num_bigint::BigInt`].
/// The fixed-width types are convenient in tests and for small inputs; they
/// panic on overflow in debug builds, so anything user-facing goes through
/// [`Int`].
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Arbitrary precision integer used by the domain modules.
pub type Int = num_bigint::BigInt;

/// Exact rational with machine-word components, used for Seifert invariants.
pub type Rational = num_rational::Ratio<i64>;

/// Arbitrary precision rational.
pub type BigRational = num_rational::Ratio<Int>;

/// Big-integer matrix; the default matrix type across the crate.
pub type IntMatrix = lattice::Matrix<Int>;

/// Machine-word matrix, handy for small fixtures.
pub type SmallMatrix = lattice::Matrix<i64>;

pub type SmithDecomposition = lattice::SmithForm<Int>;
