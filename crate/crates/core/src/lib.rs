//! Computational core for graded ideals over prime fields.
//!
//! Gröbner bases and syzygies, minimal free resolutions, Hilbert functions and
//! regularity, the degree-0 tangent and obstruction spaces `Hom(I, S/I)_0` and
//! `Ext^1(I, S/I)_0`, and two constructions built on them: truncating a graded
//! ideal by a power of the maximal ideal, and cutting a cone by a regular
//! sequence of two forms. A dense brute-force [`oracle`] recomputes the
//! invariants without Gröbner bases.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod corpus;
pub mod deform;
pub mod error;
pub mod field;
pub mod groebner;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod ring;
pub mod strata;

pub use error::{ArithmeticError, Error, Result};
pub use field::{FieldElement, PrimeField};
pub use groebner::Ideal;
pub use ring::{GradedFreeModule, GradedMap, Monomial, MonomialOrder, Polynomial, Ring};
