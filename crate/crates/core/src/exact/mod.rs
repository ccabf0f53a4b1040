//! Exact rational arithmetic and univariate polynomial algebra.
//!
//! `Rational` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator (zero is 0/1); `UPoly` is a dense univariate
//! polynomial over `Rational` with coefficients stored lowest-degree first.
//! Everything here is exact — no floats.

mod factor;
mod poly;

pub use poly::{
    discriminant_in_parameter, format_poly, lagrange_interpolate, parse_poly, rational_roots,
    rational_sqrt, resultant, squarefree_part, UPoly,
};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
///
/// `num_rational::BigRational` maintains exactly the invariants we need:
/// numerator and denominator coprime, denominator strictly positive, zero
/// represented as 0/1.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `"p"` or `"p/q"` with optional sign, arbitrary precision.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::invalid(format!("not an integer: {t:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(Error::invalid(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(parse_int(p)?, den))
        }
    }
}

/// Render a rational as `"p"` or `"p/q"`; inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Least common multiple of two positive integers.
pub(crate) fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

/// All positive divisors of `n` (|n| is factored; n must be nonzero).
///
/// Used by the rational root theorem. Factorization is trial division with a
/// Pollard-rho fallback, so arbitrarily large coefficients stay correct.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero(), "divisors of zero requested");
    let factors = factor::factorize(&n.to_biguint().unwrap());
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let p = BigInt::from(p);
        let mut extended = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                extended.push(d * &pk);
                pk *= &p;
            }
        }
        divs = extended;
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normal_form() {
        let r = rat(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(rat(0, 5), rat_int(0));
        assert_eq!(rat(0, 5).denom(), &BigInt::from(1));
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7", "100000000000000000000/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn divisors_of_small_numbers() {
        let divs = positive_divisors(&BigInt::from(12));
        let expect: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&n| BigInt::from(n)).collect();
        assert_eq!(divs, expect);
        assert_eq!(positive_divisors(&BigInt::from(-1)), vec![BigInt::one()]);
    }

    #[test]
    fn divisors_with_large_prime_factor() {
        // 2^4 * 1000003 — forces the factorizer past pure trial division
        // territory and checks divisor completeness.
        let n = BigInt::from(16i64 * 1_000_003);
        let divs = positive_divisors(&n);
        assert_eq!(divs.len(), 10);
        assert!(divs.contains(&BigInt::from(1_000_003)));
        assert!(divs.contains(&n));
    }
}
