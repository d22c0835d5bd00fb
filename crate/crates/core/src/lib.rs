//! Hochschild cohomology and the Gerstenhaber bracket of monomial quadratic
//! path algebras, computed on the minimal (Bardzell) complex, together with
//! the Ext, string-module and admissible-cycle machinery that interprets the
//! bracket in the module category.
//!
//! The numeric code is generic over [`Scalar`]; [`Rational`] is the default
//! field and `Fp<P>` gives prime fields.

pub mod algebra;
pub mod barcheck;
pub mod cochains;
pub mod cycles;
pub mod error;
pub mod examples;
pub mod ext;
pub mod gen;
pub mod gamma;
pub mod linalg;
pub mod quiver;
pub mod scalar;
pub mod selftest;
pub mod strings;

pub use error::{Error, Result};
pub use scalar::{Fp, Scalar};

/// Exact rationals, the default ground field.
pub type Rational = num_rational::BigRational;
pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
