//! Inputs shared by the benchmarks.

use minpoly_core::{AlgebraSpec, Family, Weight};

/// Algebras and weights small enough to iterate on, large enough to show
/// the cost of the enveloping-algebra normal forms.
pub fn workloads() -> Vec<(AlgebraSpec, Weight)> {
    [
        (Family::Gl, 3, vec![1, 1, 0]),
        (Family::Gl, 4, vec![2, 0, 0, -1]),
        (Family::Sp, 2, vec![1, 0]),
        (Family::OEven, 2, vec![1, 1]),
        (Family::OOdd, 2, vec![0, 0]),
    ]
    .into_iter()
    .map(|(f, n, w)| (AlgebraSpec::new(f, n).expect("valid rank"), Weight::from_ints(&w)))
    .collect()
}
