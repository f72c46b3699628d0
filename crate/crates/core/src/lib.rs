//! Exact minimal polynomials of simple highest weight modules over `gl_n`,
//! `sp_2n` and `o_N`.
//!
//! ```
//! use minpoly_core::{AlgebraSpec, Certifier, Family, Weight};
//!
//! let spec = AlgebraSpec::new(Family::Sp, 1)?;
//! let out = Certifier::new(&spec).certified_minpoly(&Weight::from_ints(&[1]), None)?;
//! assert_eq!(out.polynomial.to_string(), "u^2 - 2u - 3");
//! # Ok::<(), minpoly_core::Error>(())
//! ```

pub mod arith;
pub mod error;
pub mod howe;
pub mod lie;
pub mod matrix;
pub mod oracle;
pub mod shuffle;
pub mod verify;

pub use arith::{Rat, UniPoly};
pub use error::{Error, Result};
pub use lie::{AlgebraSpec, Family, UElement, Weight};
pub use matrix::{MatrixU, ProjectedPowers, ResolventCoeffs};
pub use shuffle::{minpoly_from_weight, predict, Erratum, Mode, Parity, Prediction, ShuffleDecomposition};
pub use verify::{Certificate, Certifier, DiagnosticReport};
