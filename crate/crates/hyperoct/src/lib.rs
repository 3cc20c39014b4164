//! Exact-arithmetic toolkit for the hyperoctahedral group `B(n)`.
//!
//! The crate computes, entirely over exact rationals and bivariate
//! polynomials in the two deformation parameters `q+` and `q-`:
//!
//! - signed permutations, their cycle types and reflection lengths, minimal
//!   non-mixing factorizations into long/short reflections, and the
//!   group-algebra factorization of the signed reflection function
//!   ([`group`], [`group_algebra`]);
//! - irreducible characters of the symmetric and hyperoctahedral groups, the
//!   expansion of the signed reflection function into irreducible characters,
//!   its positive-definiteness classification, exact Gram/LDL^T tests, and the
//!   extreme-character evaluator for the infinite group ([`chars`],
//!   [`linalg`]);
//! - the tensor-space representation whose normalized character realizes the
//!   signed reflection function ([`schur_weyl`]);
//! - symmetric pair partitions with their hat matching, cycle and semi-cycle
//!   decomposition and Wick-type moment formulas ([`pairpart`]);
//! - the cyclic Fock space of type B: deformed inner product,
//!   creation/annihilation, commutation relation, exclusion principle and the
//!   Gaussian operator ([`fock`]);
//! - orthogonal-polynomial moment routes and their cross checks ([`moments`]);
//! - the type-D subgroup, its class splitting and the restricted
//!   classification ([`type_d`]);
//! - machine-readable verification reports behind the `hyperoct` binary
//!   ([`report`]).
//!
//! Every identity is checked exactly; no floating point is used anywhere.

pub mod chars;
pub mod fock;
pub mod group;
pub mod group_algebra;
pub mod linalg;
pub mod moments;
pub mod pairpart;
pub mod partition;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod schur_weyl;
pub mod type_d;

pub use group::{CycleType, SignedPermutation};
pub use partition::Partition;
pub use poly::BivarPoly;
pub use scalar::Scalar;
