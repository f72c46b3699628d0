//! Exact rational arithmetic: scalars, univariate polynomials, truncated
//! Laurent series in `u⁻¹`, Padé reconstruction and dense linear algebra.

mod laurent;
mod linalg;
mod poly;
pub mod ser;

pub use laurent::{pade_reconstruct, series_of_rational, LaurentTrunc};
pub use linalg::RatMatrix;
pub use poly::{monic_lcm, UniPoly};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rat = num_rational::BigRational;

/// `n / d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parse `"p"`, `"-p/q"` or a plain decimal such as `"0.5"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = whole.trim_start().starts_with('-');
        let w: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().ok()?,
        };
        let f: BigInt = frac.parse().ok()?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mut value = Rat::from_integer(w.abs()) + Rat::new(f, scale);
        if negative {
            value = -value;
        }
        return Some(value);
    }
    s.parse::<BigInt>().ok().map(Rat::from_integer)
}

/// `true` when `x` is an integer.
pub fn is_integral(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rat("3"), Some(int(3)));
        assert_eq!(parse_rat("-4/6"), Some(rat(-2, 3)));
        assert_eq!(parse_rat("0.5"), Some(rat(1, 2)));
        assert_eq!(parse_rat("-1.25"), Some(rat(-5, 4)));
        assert_eq!(parse_rat("-0.5"), Some(rat(-1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(parse_rat(""), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(3, 4), int(0));
    }
}
