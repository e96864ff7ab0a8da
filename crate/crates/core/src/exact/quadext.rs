//! Exact arithmetic in the real quadratic fields Q(sqrt(3)) and Q(sqrt(5)).
//!
//! A `QuadExt` is `a + b*sqrt(d)` with rational `a`, `b` and `d` in {3, 5}.
//! Every coefficient appearing in the constructions of this crate lives in
//! one of these two fields; mixing discriminants is a hard error rather than
//! an implicit embedding into the composite field.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::rational::{display_rational, rat, rational_to_f64, sign_of, Rational};

/// Discriminant tag of the quadratic field.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Disc {
    Sqrt3,
    Sqrt5,
}

impl Disc {
    pub fn radicand(self) -> u32 {
        match self {
            Disc::Sqrt3 => 3,
            Disc::Sqrt5 => 5,
        }
    }

    pub fn from_radicand(d: u32) -> Option<Disc> {
        match d {
            3 => Some(Disc::Sqrt3),
            5 => Some(Disc::Sqrt5),
            _ => None,
        }
    }

    pub fn sqrt_f64(self) -> f64 {
        (self.radicand() as f64).sqrt()
    }
}

impl fmt::Display for Disc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.radicand())
    }
}

/// Exact element `a + b*sqrt(d)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: Disc,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: Disc) -> Self {
        QuadExt { a, b, d }
    }

    pub fn from_rational(a: Rational, d: Disc) -> Self {
        QuadExt { a, b: Rational::zero(), d }
    }

    pub fn from_int(n: i64, d: Disc) -> Self {
        Self::from_rational(crate::exact::rational::rat_int(n), d)
    }

    pub fn zero(d: Disc) -> Self {
        Self::from_int(0, d)
    }

    pub fn one(d: Disc) -> Self {
        Self::from_int(1, d)
    }

    pub fn sqrt_d(d: Disc) -> Self {
        QuadExt { a: Rational::zero(), b: crate::exact::rational::rat_int(1), d }
    }

    /// The golden ratio (1 + sqrt(5))/2.
    pub fn phi() -> Self {
        QuadExt { a: rat(1, 2), b: rat(1, 2), d: Disc::Sqrt5 }
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_part(&self) -> &Rational {
        &self.b
    }

    pub fn disc(&self) -> Disc {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn check_disc(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::DiscMismatch(self.d.radicand(), other.d.radicand()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_disc(other)?;
        Ok(QuadExt { a: &self.a + &other.a, b: &self.b + &other.b, d: self.d })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_disc(other)?;
        Ok(QuadExt { a: &self.a - &other.a, b: &self.b - &other.b, d: self.d })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_disc(other)?;
        let rad = Rational::from_integer(other.d.radicand().into());
        Ok(QuadExt {
            a: &self.a * &other.a + &self.b * &other.b * &rad,
            b: &self.a * &other.b + &self.b * &other.a,
            d: self.d,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check_disc(other)?;
        self.try_mul(&other.try_inverse()?)
    }

    /// Field inverse `(a - b*sqrt(d)) / (a^2 - d*b^2)`.
    pub fn try_inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = self.norm();
        // norm != 0 for nonzero elements because d is not a perfect square
        Ok(QuadExt { a: &self.a / &norm, b: -(&self.b) / &norm, d: self.d })
    }

    /// Field norm `a^2 - d*b^2`.
    pub fn norm(&self) -> Rational {
        let rad = Rational::from_integer(self.d.radicand().into());
        &self.a * &self.a - &self.b * &self.b * rad
    }

    pub fn neg(&self) -> Self {
        QuadExt { a: -(&self.a), b: -(&self.b), d: self.d }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        QuadExt { a: &self.a * r, b: &self.b * r, d: self.d }
    }

    pub fn powi(&self, mut n: u32) -> Self {
        let mut acc = QuadExt::one(self.d);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Exact sign of `a + b*sqrt(d)` via case analysis and comparison of
    /// `a^2` against `d*b^2`; no floating point involved.
    pub fn sign(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                let rad = Rational::from_integer(self.d.radicand().into());
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * rad;
                let cmp = match lhs.cmp(&rhs) {
                    Ordering::Greater => 1,
                    Ordering::Less => -1,
                    Ordering::Equal => 0,
                };
                // a > 0, b < 0: positive iff a^2 > d b^2; mirrored otherwise
                if sa > 0 {
                    cmp
                } else {
                    -cmp
                }
            }
        }
    }

    /// The nontrivial field automorphism `a + b*sqrt(d) -> a - b*sqrt(d)`.
    pub fn galois_conj(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -(&self.b), d: self.d }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * self.d.sqrt_f64()
    }

    /// Rendering without outer parentheses; used by the term printer.
    pub(crate) fn display_bare(&self) -> String {
        let rad = self.d.radicand();
        if self.b.is_zero() {
            display_rational(&self.a)
        } else if self.a.is_zero() {
            match display_rational(&self.b).as_str() {
                "1" => format!("\u{221a}{rad}"),
                "-1" => format!("-\u{221a}{rad}"),
                b => format!("{b}\u{221a}{rad}"),
            }
        } else {
            let b_abs = self.b.clone();
            let (op, b_abs) = if sign_of(&b_abs) < 0 { ("-", -b_abs) } else { ("+", b_abs) };
            let b_txt = match display_rational(&b_abs).as_str() {
                "1" => format!("\u{221a}{rad}"),
                b => format!("{b}\u{221a}{rad}"),
            };
            format!("{} {} {}", display_rational(&self.a), op, b_txt)
        }
    }

    /// True when the display form needs parentheses inside a product.
    pub(crate) fn is_compound(&self) -> bool {
        !self.a.is_zero() && !self.b.is_zero()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_compound() {
            write!(f, "({})", self.display_bare())
        } else {
            write!(f, "{}", self.display_bare())
        }
    }
}

macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs).expect("discriminant mismatch in exact arithmetic")
            }
        }
        impl std::ops::$trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&QuadExt> for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                (&self).$method(rhs)
            }
        }
    };
}

quad_binop!(Add, add, try_add);
quad_binop!(Sub, sub, try_sub);
quad_binop!(Mul, mul, try_mul);
quad_binop!(Div, div, try_div);

impl std::ops::Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::neg(self)
    }
}

impl std::ops::Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::neg(&self)
    }
}
