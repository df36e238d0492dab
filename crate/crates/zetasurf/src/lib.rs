//! Exact reconstruction of zeta functions for a family of double-cover
//! surfaces fibered in genus-2 curves over an elliptic base, by brute-force
//! point counting over small finite fields, together with a Groebner engine
//! for the family's singular-pencil analysis and a Picard-number bound.

pub mod coeff;
pub mod count;
pub mod elliptic;
pub mod error;

pub mod factor;
pub mod field;



pub mod intpoly;
pub mod series;
pub mod surface;
pub mod zeta;


pub use error::{Error, Result};
