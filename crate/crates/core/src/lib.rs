//! Exact functional decomposition of univariate polynomials over the
//! rationals, with indecomposability criteria, Dickson polynomial tools,
//! lacunary structure results, a finiteness engine for `f(x) = g(y)`, and a
//! numeric monodromy cross-check.

pub mod certificate;
pub mod criteria;
pub mod decompose;
pub mod dickson;
pub mod diophantine;
pub mod error;
pub mod lacunary;
pub mod monodromy;
pub mod parse;
pub mod poly;
pub mod rational;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use parse::parse;
pub use poly::{LinearPoly, Polynomial};
pub use rational::Rational;
