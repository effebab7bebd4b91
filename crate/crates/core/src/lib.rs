//! Exact computation of independence polynomials and of the two-row Schur
//! projections of chromatic symmetric functions, with certificates for
//! log-concavity and 2-Schur-positivity and instance-level audits of the
//! spider and pineapple elimination arguments.
//!
//! The algebra is generic over an exact [`Coefficient`] ring; the aliases
//! below fix the choices used by the graph-facing operations.

pub mod chromatic;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod iso;
pub mod poly;
pub mod scalar;
pub mod schur2;
pub mod verifier;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use graph::{make_pineapple, make_spider, Graph, SpiderShape, WeightMap};
pub use poly::{Certificate, Poly, Verdict};
pub use scalar::Coefficient;
pub use schur2::{Partition2, Profile, TwoVarPoly};

/// Polynomials with arbitrary-precision integer coefficients.
pub type IntPolynomial = Poly<BigInt>;
/// Two-row profiles with integer coefficients (e.g. `X_G` itself).
pub type IntProfile = Profile<BigInt>;
/// Two-row profiles with rational coefficients (`X_G^alpha`, `Y_G`).
pub type TwoRowProfile = Profile<BigRational>;
/// Symmetric two-variable polynomials over the rationals.
pub type RationalTwoVarPoly = TwoVarPoly<BigRational>;
