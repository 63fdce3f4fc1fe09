//! Exact symbolic analysis of series-parallel LCR networks.
//!
//! The crate builds the constitutive differential equation `f1 V = f2 I`
//! of a two-terminal network of resistors, inductors, and capacitors,
//! composed from series and parallel combinations. On top of that single
//! construction it offers:
//!
//! - local identifiability of the element parameters from the equation's
//!   coefficients, decided by generic Jacobian rank over a prime field
//!   ([`identify`]);
//! - coefficient-counting criteria for two-kind networks ([`identify`]);
//! - a small type algebra classifying equations by degree gaps and
//!   coefficient alternation, with its closed set of 22 reachable types
//!   ([`typesys`]);
//! - discovery and exact verification of polynomial relations among the
//!   constitutive coefficients ([`relations`]).
//!
//! All arithmetic is exact: arbitrary-precision integers for symbolic
//! coefficients, and the prime field `F_p` with `p = 2^61 - 1` for
//! randomized rank and kernel computations.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std`
//! feature only adds `std::error::Error` impls for the error types.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod constitutive;
pub mod identify;
pub mod network;
pub mod polyalg;
pub mod relations;
pub mod typesys;

pub use constitutive::{
    build_consteq, CoeffEntry, CoefficientMap, ConstEq, Parameterization, Side,
};
pub use identify::{count_criterion, is_locally_identifiable, GhProblem, IdentVerdict, Method};
pub use network::{CombineOp, Element, ElementKind, Network};
pub use polyalg::diffop::{Alternation, DiffOp, Shape};
pub use polyalg::fp::Fp;
pub use polyalg::linalg::FieldMatrix;
pub use polyalg::poly::{MultiPoly, VarRegistry};
pub use relations::{
    find_relations, monomial_stratum, scaling_invariance_check, verify_relation_exact, RelationPoly,
};
pub use typesys::{type_closure, LcClass, LcTableRow, TypeQuad, FORBIDDEN_TYPES};
