//! Multivariate polynomials, Buchberger's algorithm, and the ideal-level
//! queries (dimension, elimination, saturation, emptiness) used by the
//! smoothness and singular-pencil computations.

pub mod buchberger;
pub mod ideals;
pub mod mpoly;
pub mod queries;

pub use buchberger::{buchberger, normal_form, GroebnerBasis};
pub use ideals::{
    pencil_singularity_ideal, singular_locus_ideal, tangency_minor_ideal, SingularChart,
};
pub use mpoly::{MPoly, Mono, MonomialOrder};
pub use queries::{
    eliminate, is_empty_variety, quotient_dimension, saturate, QuotientDim,
};
