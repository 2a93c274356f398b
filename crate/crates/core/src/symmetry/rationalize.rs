use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Best rational approximation of `x` with denominator at most `max_denominator`.
///
/// Walks the continued-fraction convergents of the exact binary value of `x`
/// and, once the next convergent would exceed the bound, compares the last
/// convergent with the largest admissible semiconvergent. On equal distance the
/// smaller denominator wins.
pub fn rationalize(x: f64, max_denominator: u64) -> Result<Rational> {
    if max_denominator == 0 {
        return Err(Error::InvalidParam(
            "max_denominator must be at least 1".into(),
        ));
    }
    let target = BigRational::from_float(x).ok_or_else(|| Error::Rationalize(format!("{x}")))?;
    let max_den = BigInt::from(max_denominator);

    // (p0/q0, p1/q1) are the two most recent convergents.
    let (mut p0, mut q0) = (BigInt::zero(), BigInt::one());
    let (mut p1, mut q1) = (BigInt::one(), BigInt::zero());
    let mut rest = target.clone();
    loop {
        let a = rest.floor().to_integer();
        let q2 = &q0 + &a * &q1;
        if q2 > max_den {
            break;
        }
        let p2 = &p0 + &a * &p1;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            return to_small(p1, q1, x);
        }
        rest = frac.recip();
    }

    let k = (&max_den - &q0).div_floor(&q1);
    let semi = BigRational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let conv = BigRational::new(p1, q1);
    let d_semi = (&semi - &target).abs();
    let d_conv = (&conv - &target).abs();
    let pick = match d_semi.cmp(&d_conv) {
        std::cmp::Ordering::Less => semi,
        std::cmp::Ordering::Greater => conv,
        std::cmp::Ordering::Equal => match semi.denom().cmp(conv.denom()) {
            std::cmp::Ordering::Less => semi,
            std::cmp::Ordering::Greater => conv,
            std::cmp::Ordering::Equal => semi.min(conv),
        },
    };
    let (p, q) = pick.into();
    to_small(p, q, x)
}

fn to_small(p: BigInt, q: BigInt, x: f64) -> Result<Rational> {
    match (p.to_i64(), q.to_i64()) {
        (Some(p), Some(q)) => Ok(Rational::new(p, q)),
        _ => Err(Error::Rationalize(format!(
            "{x} does not fit in 64-bit numerator"
        ))),
    }
}
