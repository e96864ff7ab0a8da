//! Arbitrary-precision rational scalars and their `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` (or a bare integer `p`).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| format!("bad integer `{num}`"))?;
    let d: BigInt = den.parse().map_err(|_| format!("bad integer `{den}`"))?;
    if d.is_zero() {
        return Err("zero denominator".to_owned());
    }
    Ok(Rational::new(n, d))
}

/// Canonical `p/q` form (denominator always written, so round trips are byte-stable).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact display form: omits `/1` on integers.
pub fn display_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64()
        .unwrap_or_else(|| r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN))
}

pub fn sign_of(r: &Rational) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::from(1);
    for k in 2..=n as u64 {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}
