//! Exact arithmetic for tropical differential algebraic geometry.
//!
//! This crate implements the semiring of vertex polynomials `VB[T]` (finite
//! subsets of `N^m` that are the vertex sets of their own Newton polyhedra),
//! boolean and rational power-series arithmetic with partial derivatives,
//! support and tropicalization maps, tropical differential equation solution
//! checking, initial forms, and weight-vector translations. All geometry is
//! done in exact rational arithmetic; there is no floating point anywhere.
//!
//! The coefficient field is a type parameter bounded by [`Scalar`], a
//! num-traits bundle satisfied by exact rational types. The crate-root
//! aliases fix the default instantiation at arbitrary-precision rationals.

pub mod diffpoly;
pub mod error;
pub mod json;
pub mod lattice;
pub mod lp;
pub mod multi_index;
pub mod newton;
pub mod parse;
pub mod scalar;
pub mod series;
pub mod vertex;

pub use error::{Error, Result};
pub use lattice::GeneratorSet;
pub use multi_index::MultiIndex;
pub use scalar::Scalar;
pub use series::{BoolSeries, Series, SeriesFraction};
pub use vertex::{VertexFraction, VertexPolynomial};

pub use diffpoly::{Coefficient, DiffMonomial, DiffPoly, Evaluation, SolutionCheck};

/// Default exact coefficient scalar: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Finitely supported rational power series (the default [`Series`] instantiation).
pub type RatSeries = Series<Rat>;

/// Fraction of two rational series (an element of the fraction field).
pub type RatFraction = SeriesFraction<Rat>;

/// Differential polynomial with boolean power-series coefficients.
pub type BoolDiffPoly = DiffPoly<BoolSeries>;

/// Differential polynomial with rational series coefficients.
pub type RatDiffPoly = DiffPoly<RatSeries>;

/// Differential polynomial with rational fraction coefficients.
pub type RatFracDiffPoly = DiffPoly<RatFraction>;
