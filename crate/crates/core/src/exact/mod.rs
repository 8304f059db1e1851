//! Exact integer and rational arithmetic.
//!
//! Ambient coordinates, quadratic forms and perturbation parameters are
//! [`ExactScalar`]s (arbitrary-precision rationals). Coordinates relative to a
//! lattice basis are small machine integers ([`IntVector`]); anything that can
//! grow, such as determinants and normal-form transforms, runs over `BigInt`.

pub(crate) mod lattice;
mod matrix;
pub(crate) mod normal_form;
pub(crate) mod small;

pub use lattice::{
    is_direct_summand, lattice_index, primitive, AffineLattice, LatticeSubgroup,
};
pub use matrix::{IntMatrix, RatMatrix};
pub use normal_form::{hnf, snf};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactScalar = BigRational;
pub type IntVector = Vec<i64>;
pub type RatVector = Vec<ExactScalar>;

pub fn rat(n: i64, d: i64) -> ExactScalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat_vec(v: &[i64]) -> RatVector {
    v.iter().map(|&x| int(x)).collect()
}

/// Parses `"p/q"` or `"n"` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<ExactScalar> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or(Error::CoordinateOverflow)
}

/// Integral value of a rational, if it is one and fits in `i64`.
pub fn as_i64(x: &ExactScalar) -> Option<i64> {
    if x.denom().is_one() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn dot_rat(a: &[ExactScalar], b: &[ExactScalar]) -> ExactScalar {
    a.iter().zip(b).fold(ExactScalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

pub fn lcm_of_denominators(v: &[ExactScalar]) -> BigInt {
    v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// Scales a rational vector to the primitive integer vector with the same
/// direction. Returns the vector and the positive factor used.
pub fn clear_denominators(v: &[ExactScalar]) -> (Vec<BigInt>, ExactScalar) {
    let l = lcm_of_denominators(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return (ints, ExactScalar::one());
    }
    let prim = ints.iter().map(|x| x / &g).collect();
    (prim, BigRational::new(l, g.abs()))
}

pub fn floor_i64(x: &ExactScalar) -> Result<i64> {
    to_i64(&x.floor().to_integer())
}

pub fn ceil_i64(x: &ExactScalar) -> Result<i64> {
    to_i64(&x.ceil().to_integer())
}

pub fn lex_cmp_rat(a: &[ExactScalar], b: &[ExactScalar]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

pub fn is_positive(x: &ExactScalar) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert_eq!(parse_rational(" 2/-4 ").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(format_rational(&rat(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn denominators_cleared_to_primitive() {
        let (v, f) = clear_denominators(&[rat(1, 2), rat(-3, 4), int(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
        assert_eq!(f, int(4));
    }
}
