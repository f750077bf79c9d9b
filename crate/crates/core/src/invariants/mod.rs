//! Order-independent graded invariants: Hilbert functions and series, Krull
//! dimension, minimal free resolutions, Betti tables and regularity.
//!
//! `h_d` always means `dim_k (S/I)_d`.

mod hilbert;
mod resolution;

pub(crate) use hilbert::poly_mul;
pub use hilbert::{
    hilbert_function, hilbert_series, krull_dim, monomial_numerator, one_minus_t_pow, HilbertSeries,
};
pub use resolution::{
    betti_table, minimal_free_resolution, quotient_regularity, regularity, BettiEntry, BettiTable, Resolution,
};
