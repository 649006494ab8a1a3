//! Exact classification of convex lattice polytopes.
//!
//! The crate decides affine, unimodular and determinant-one affine
//! equivalence between lattice polytopes from their volume vectors, builds
//! canonical forms for lattice polygons, computes the sublattice generated by
//! a polytope (and shrinks it to the minimum volume of its affine class), and
//! runs small exhaustive censuses of lattice polygons.
//!
//! All algorithms are generic over the integer [`Scalar`]; the aliases at the
//! crate root fix it to [`BigInt`](num_bigint::BigInt) for unbounded inputs
//! or `i64` for fast enumeration on small coordinates.

pub mod enumeration;
pub mod equivalence;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod lattice;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::{Rat, Scalar};

pub type Int = num_bigint::BigInt;
pub type Rational = Rat<Int>;
pub type Point = geometry::LatticePoint<Int>;
pub type Polytope = geometry::LatticePolytope<Int>;
pub type AffineMap = geometry::RationalAffineMap<Int>;

pub type Point64 = geometry::LatticePoint<i64>;
pub type Polytope64 = geometry::LatticePolytope<i64>;
pub type AffineMap64 = geometry::RationalAffineMap<i64>;
