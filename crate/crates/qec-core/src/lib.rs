//! Exact computational algebra for quasi-elliptic cohomology of finite groups.
//!
//! The crate computes, in exact arithmetic throughout, the degree-zero
//! quasi-elliptic cohomology of a finite group acting on a finite set:
//! Laurent polynomials over `Z`, cyclotomic numbers, permutation groups and
//! their character tables, representation rings of the extended groups
//! `Λ_K(g) = K × R / ⟨(g, -1)⟩`, the cohomology decomposition itself with
//! its restriction and change-of-group maps, and the faithful-representation
//! constructions on `Λ`-groups.
//!
//! No floating point is used anywhere; every value is an integer, rational,
//! Laurent polynomial, or cyclotomic number, and every map is assembled as a
//! matrix over `Z[q^±]` whose properties (ring map, unit determinant) are
//! certified exactly.
//!
//! The crate is `no_std` + `alloc`; IO, parsing, and serialization live in
//! the companion `qec` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chartab;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod gset;
pub mod hom;
pub mod lambda;
pub mod laurent;
pub mod matrix;
mod modp;
pub mod perm;
pub mod qell;
pub mod rep;

pub use chartab::{CharacterTable, ClassFunction};
pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{FiniteGroup, LambdaGroupDescriptor};
pub use gset::FiniteGSet;
pub use hom::GroupHom;
pub use lambda::{LambdaBasis, LambdaRingElement};
pub use laurent::LaurentPoly;
pub use matrix::LaurentMatrix;
pub use perm::Perm;
pub use qell::{QEllDecomposition, QEllElement, QEllMap};
pub use rep::{GRep, LambdaRepDescriptor};

/// Rational phases `m/l` of central elements acting on irreducibles.
pub type Phase = num_rational::Ratio<i64>;
