//! Exact symbolic computations for quantum flag manifolds of `su(N)`.
//!
//! Scalars are Laurent polynomials in `v = q^(1/2)` with rational
//! coefficients ([`scalar`]). On top of them sit the noncommutative
//! coordinate algebras with a normal-ordering rewriting system ([`ncalg`]),
//! dense matrices over scalars or algebra elements ([`matrix`]), the
//! R-matrix and its identities ([`rmatrix`]), flag and Grassmann coordinates
//! ([`grassmann`]), the Chevalley-generator actions ([`action`]), extracted
//! finite-dimensional modules ([`irreps`]) and the module structure in the
//! R-matrix picture ([`frt`]). Every verifier returns a [`report::Report`].

pub mod action;
pub mod cli;
pub mod frt;
pub mod grassmann;
pub mod irreps;
pub mod literal;
pub mod matrix;
pub mod ncalg;
pub mod report;
pub mod rmatrix;
pub mod scalar;
pub mod serialize;
