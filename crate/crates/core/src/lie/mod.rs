//! Classical Lie algebras `gl_n`, `o_N`, `sp_N`: presentations, PBW normal
//! forms in `U(g)`, and Harish-Chandra projections.

mod pbw;
mod projection;
mod spec;

pub use pbw::{Monomial, UElement};
pub use projection::{ParabolicData, Weight};
pub use spec::{AlgebraSpec, Family, Gen, GenInfo, TriClass};
