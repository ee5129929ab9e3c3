//! Exact computational algebra for quartic etale algebras.
//!
//! Given a separable quartic P over Q or F_p (p odd), the crate constructs
//! the resolvent quadratic extension S/C of L = k[x]/(P), realizes the
//! norm-compatible unit-group maps between L and S, and computes the
//! quadratic-form and Brauer-class invariants attached to the construction.
//! All arithmetic is exact; numeric root finding appears only inside test
//! oracles.

pub mod error;
pub mod etale;
pub mod factor;
pub mod fmat;
pub mod gamma;
pub mod intutil;
pub mod orbit;
pub mod poly;
pub mod qform;
pub mod quotient;
pub mod resolvent;
pub mod scalar;
pub mod zmat;

pub use error::{Error, Result};
// TEMP pub use etale::{AlgElement, EtaleAlgebra, QuadraticEtale, SquareClass};
pub use fmat::{FMatrix, LinearSolve};
pub use poly::UniPoly;
// TEMP pub use qform::{BrauerClass2, Place, QuadForm};
// TEMP pub use quotient::{QElt, QuotientRing};
// TEMP pub use resolvent::ResolventData;
pub use scalar::{Field, Scalar};
pub use zmat::IntMatrix;
