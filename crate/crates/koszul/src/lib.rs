//! Exact computation of homological invariants of monomial ideals.
//!
//! The central objects are monomial ideals given by their minimal generators
//! (exponent vectors in `N^n`). On top of the basic ideal algebra the crate
//! computes multigraded Betti numbers, Koszul homology generators, free
//! resolutions (Taylor, Lyubeznik, Scarf and the mapping-cone resolution
//! supported on a Mayer-Vietoris tree), multigraded Hilbert series,
//! Stanley/irreducible/primary decompositions, closed-form Betti numbers for
//! several ideal families, and reliability polynomials of coherent systems.
//!
//! All homological linear algebra is generic over the coefficient scalar via
//! [`scalar::Scalar`]; the concrete instantiation used throughout the tests is
//! the exact rational alias [`Coeff`]. Floating point scalars satisfy the same
//! bound and are adequate for evaluation-style uses, but ranks and homology
//! should be computed with an exact type.

pub mod chain;
pub mod decomp;
pub mod families;
pub mod hilbert;
pub mod homology;
pub mod linalg;
pub mod monomial;
pub mod mvtree;
pub mod reliability;
pub mod resolution;
pub mod scalar;
pub mod simplicial;

/// Exact coefficient field used by default for all homology computations.
pub type Coeff = num_rational::BigRational;

/// Arbitrary-precision tree positions (deep right spines overflow `u64`).
pub type Position = num_bigint::BigUint;

pub use monomial::{Multidegree, MonomialIdeal};
