use num_traits::{One, Zero};
use serde::Serialize;

use super::{RatMatrix, Rat, UniPoly};
use crate::error::{Error, Result};

/// A Laurent series at `u = ∞`: a polynomial part plus the coefficients of
/// `u⁻¹ … u⁻ᴷ`. Nothing beyond order `K` is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LaurentTrunc {
    poly_part: UniPoly,
    #[serde(serialize_with = "super::ser::rats")]
    tail: Vec<Rat>,
}

impl LaurentTrunc {
    /// `tail[k]` is the coefficient of `u^{-(k+1)}`.
    pub fn new(poly_part: UniPoly, tail: Vec<Rat>) -> Self {
        LaurentTrunc { poly_part, tail }
    }

    pub fn from_tail(tail: Vec<Rat>) -> Self {
        Self::new(UniPoly::zero(), tail)
    }

    pub fn poly_part(&self) -> &UniPoly {
        &self.poly_part
    }

    pub fn tail(&self) -> &[Rat] {
        &self.tail
    }

    /// Truncation order `K`.
    pub fn order(&self) -> usize {
        self.tail.len()
    }

    /// Coefficient of `u^exp`; panics if `exp < -K`.
    pub fn coeff(&self, exp: i64) -> Rat {
        if exp >= 0 {
            self.poly_part.coeff(exp as usize)
        } else {
            let k = (-exp) as usize;
            assert!(k <= self.tail.len(), "coefficient beyond truncation order");
            self.tail[k - 1].clone()
        }
    }

    /// Multiply by a polynomial. Only orders that the truncation determines
    /// are kept, so the result has order `K - deg p`.
    pub fn mul_poly(&self, p: &UniPoly) -> LaurentTrunc {
        let Some(dp) = p.degree() else {
            return LaurentTrunc::from_tail(vec![Rat::zero(); self.order()]);
        };
        let order = self.order().saturating_sub(dp);
        let mut poly = &self.poly_part * p;
        let mut extra = vec![Rat::zero(); dp];
        let mut tail = vec![Rat::zero(); order];
        for (j, b) in p.coeffs().iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            for (k, c) in self.tail.iter().enumerate() {
                // b u^j · c u^{-(k+1)} = u^{j-k-1}
                let e = j as i64 - k as i64 - 1;
                if e >= 0 {
                    extra[e as usize] += b * c;
                } else if ((-e) as usize) <= order {
                    tail[(-e) as usize - 1] += b * c;
                }
            }
        }
        poly = &poly + &UniPoly::new(extra);
        LaurentTrunc::new(poly, tail)
    }

    /// Term-wise difference; the order is the smaller of the two.
    pub fn sub(&self, rhs: &LaurentTrunc) -> LaurentTrunc {
        let order = self.order().min(rhs.order());
        LaurentTrunc::new(
            &self.poly_part - &rhs.poly_part,
            (0..order).map(|k| &self.tail[k] - &rhs.tail[k]).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.poly_part.is_zero() && self.tail.iter().all(Zero::is_zero)
    }
}

/// Expansion of `num / den` at `u = ∞`, truncated after `u⁻ᴷ`.
pub fn series_of_rational(num: &UniPoly, den: &UniPoly, order: usize) -> Result<LaurentTrunc> {
    let Some(d) = den.degree() else {
        return Err(Error::ZeroDenominator);
    };
    let (quot, rem) = num.div_rem(den);
    let lead_inv = den.leading().unwrap().recip();
    let b = den.coeffs();
    let mut c: Vec<Rat> = Vec::with_capacity(order);
    for m in 1..=order {
        // coefficient of u^{d-m} in den·S must equal rem_{d-m}
        let mut acc = if m <= d { rem.coeff(d - m) } else { Rat::zero() };
        for (j, bj) in b.iter().enumerate().take(d) {
            let idx = m as i64 - d as i64 + j as i64;
            if idx >= 1 && !bj.is_zero() {
                acc -= bj * &c[idx as usize - 1];
            }
        }
        c.push(acc * &lead_inv);
    }
    Ok(LaurentTrunc::new(quot, c))
}

/// Recover `num / den` (monic `den` of least degree `≤ dmax`, coprime to
/// `num`) from a truncated expansion. Requires `K ≥ 2·dmax + 1`.
pub fn pade_reconstruct(series: &LaurentTrunc, dmax: usize) -> Result<(UniPoly, UniPoly)> {
    let k = series.order();
    if k < 2 * dmax + 1 {
        return Err(Error::TruncationTooShort {
            order: k,
            needed: 2 * dmax + 1,
        });
    }
    let c = series.tail();
    for d in 0..=dmax {
        let equations = k - d;
        // Σ_{j<d} b_j c_{m+j} = -c_{m+d}, m = 1..=K-d (1-based c)
        let mut a = RatMatrix::zeros(equations, d);
        let mut rhs = Vec::with_capacity(equations);
        for m in 1..=equations {
            for j in 0..d {
                a[(m - 1, j)] = c[m + j - 1].clone();
            }
            rhs.push(-c[m + d - 1].clone());
        }
        let Some(b) = a.solve(&rhs) else {
            continue;
        };
        let mut den_coeffs = b;
        den_coeffs.push(Rat::one());
        let den = UniPoly::new(den_coeffs);
        // polynomial part of den · tail: u^p collects b_j c_{j-p}, j-p ≥ 1
        let tail_num = UniPoly::new(
            (0..d)
                .map(|p| {
                    (p + 1..=d).fold(Rat::zero(), |acc, j| acc + den.coeff(j) * &c[j - p - 1])
                })
                .collect(),
        );
        let num = &(&den * series.poly_part()) + &tail_num;
        let g = num.gcd(&den);
        if g.is_zero() || g.degree() == Some(0) {
            return Ok((num, den));
        }
        return Ok((num.div_rem(&g).0, den.div_rem(&g).0));
    }
    Err(Error::NoRationalFit { dmax })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn geometric_series() {
        let s = series_of_rational(&p(&[1]), &p(&[-2, 1]), 3).unwrap();
        assert_eq!(s.tail(), &ints(&[1, 2, 4])[..]);
        assert!(s.poly_part().is_zero());
        let s = series_of_rational(&p(&[1]), &p(&[0, 1]), 2).unwrap();
        assert_eq!(s.tail(), &ints(&[1, 0])[..]);
        let s = series_of_rational(&p(&[2]), &p(&[1, 1]), 2).unwrap();
        assert_eq!(s.tail(), &ints(&[2, -2])[..]);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            series_of_rational(&p(&[1]), &UniPoly::zero(), 3),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn polynomial_part_is_kept() {
        // (u^2 + 1)/(u - 1) = u + 1 + 2/(u-1)
        let s = series_of_rational(&p(&[1, 0, 1]), &p(&[-1, 1]), 3).unwrap();
        assert_eq!(s.poly_part(), &p(&[1, 1]));
        assert_eq!(s.tail(), &ints(&[2, 2, 2])[..]);
        assert_eq!(s.coeff(1), int(1));
        assert_eq!(s.coeff(-2), int(2));
    }

    #[test]
    fn pade_single_pole() {
        let s = LaurentTrunc::from_tail(ints(&[1, 3, 9, 27, 81]));
        assert_eq!(pade_reconstruct(&s, 1).unwrap(), (p(&[1]), p(&[-3, 1])));
    }

    #[test]
    fn pade_two_poles() {
        // u/(u^2-2) = u^-1 + 2u^-3 + 4u^-5 + ...; independent check by expansion
        let expanded = series_of_rational(&p(&[0, 1]), &p(&[-2, 0, 1]), 5).unwrap();
        assert_eq!(expanded.tail(), &ints(&[1, 0, 2, 0, 4])[..]);
        let s = LaurentTrunc::from_tail(ints(&[1, 0, 2, 0, 4]));
        assert_eq!(pade_reconstruct(&s, 2).unwrap(), (p(&[0, 1]), p(&[-2, 0, 1])));
    }

    #[test]
    fn pade_zero_series() {
        let s = LaurentTrunc::from_tail(ints(&[0, 0, 0, 0, 0]));
        assert_eq!(pade_reconstruct(&s, 2).unwrap(), (UniPoly::zero(), UniPoly::one()));
    }

    #[test]
    fn pade_rejects_short_and_unfittable() {
        let s = LaurentTrunc::from_tail(ints(&[1, 3, 9]));
        assert!(matches!(
            pade_reconstruct(&s, 2),
            Err(Error::TruncationTooShort { .. })
        ));
        // 1/(u-1)(u-2)(u-3) needs degree 3
        let s = series_of_rational(&p(&[1]), &UniPoly::from_roots(&ints(&[1, 2, 3])), 7).unwrap();
        assert!(matches!(pade_reconstruct(&s, 2), Err(Error::NoRationalFit { dmax: 2 })));
        assert_eq!(pade_reconstruct(&s, 3).unwrap().1, UniPoly::from_roots(&ints(&[1, 2, 3])));
    }

    #[test]
    fn pade_with_rational_poles() {
        let den = UniPoly::from_roots(&[rat(1, 2), rat(-3, 2)]);
        let num = p(&[5, 2]);
        let s = series_of_rational(&num, &den, 6).unwrap();
        assert_eq!(pade_reconstruct(&s, 2).unwrap(), (num, den));
    }

    fn roots_strategy() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-4i64..=4, 0..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig { rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]

        #[test]
        fn multiply_back_reproduces_numerator(
            num in prop::collection::vec(-5i64..=5, 0..5),
            roots in roots_strategy(),
            order in 1usize..8,
        ) {
            let num = UniPoly::from_ints(&num);
            let den = UniPoly::from_roots(&ints(&roots));
            let s = series_of_rational(&num, &den, order + den.degree().unwrap()).unwrap();
            let back = s.mul_poly(&den);
            prop_assert_eq!(back.poly_part(), &num);
            prop_assert!(back.tail().iter().all(Zero::is_zero));
        }

        #[test]
        fn pade_inverts_expansion(
            num in prop::collection::vec(-5i64..=5, 0..4),
            roots in roots_strategy(),
            slack in 0usize..2,
        ) {
            let den = UniPoly::from_roots(&ints(&roots));
            let num = UniPoly::from_ints(&num);
            let g = num.gcd(&den);
            let (num, den) = if num.is_zero() {
                (UniPoly::zero(), UniPoly::one())
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            };
            let dmax = den.degree().unwrap() + slack;
            let s = series_of_rational(&num, &den, 2 * dmax + 1).unwrap();
            prop_assert_eq!(pade_reconstruct(&s, dmax).unwrap(), (num, den));
        }
    }
}
