//! Linear forms `c1*x1 + ... + cn*xn` appearing inside trig factors.

use std::cmp::Ordering;
use std::fmt;

use crate::error::Result;
use crate::exact::{Disc, ExactMatrix, ExactVector, QuadExt};

/// A linear form over exact coefficients.
///
/// Canonical orientation (first nonzero coefficient positive) is not enforced
/// by the constructor; the term normalizer applies it before any form is
/// stored inside a `SymFun`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearForm {
    coeffs: ExactVector,
}

impl LinearForm {
    pub fn new(coeffs: ExactVector) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_quads(coeffs: Vec<QuadExt>) -> Result<Self> {
        Ok(LinearForm { coeffs: ExactVector::new(coeffs)? })
    }

    pub fn coordinate(dim: usize, axis: usize, disc: Disc) -> Self {
        LinearForm { coeffs: ExactVector::basis(dim, axis, disc).expect("valid axis") }
    }

    pub fn zero(dim: usize, disc: Disc) -> Self {
        LinearForm { coeffs: ExactVector::zero(dim, disc).expect("valid dim") }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.dim()
    }

    pub fn disc(&self) -> Disc {
        self.coeffs.disc()
    }

    pub fn coeff(&self, i: usize) -> &QuadExt {
        self.coeffs.entry(i)
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        self.coeffs.entries()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn neg(&self) -> Self {
        LinearForm { coeffs: self.coeffs.neg() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(LinearForm { coeffs: self.coeffs.add(&other.coeffs)? })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        LinearForm { coeffs: self.coeffs.scale(c) }
    }

    /// Orientation normal form: flips the sign so that the first nonzero
    /// coefficient is positive. Returns the sign that was factored out
    /// (+1 unchanged, -1 negated). The zero form is returned unchanged.
    pub fn canonical(&self) -> (Self, i32) {
        for c in self.coeffs.entries() {
            match c.sign() {
                0 => continue,
                1 => return (self.clone(), 1),
                _ => return (self.neg(), -1),
            }
        }
        (self.clone(), 1)
    }

    /// The form `x -> self(A x)`, i.e. coefficient vector `A^T c`.
    pub fn compose_matrix(&self, a: &ExactMatrix) -> Result<Self> {
        let v = a.transpose().apply(&self.coeffs)?;
        Ok(LinearForm { coeffs: v })
    }

    /// Substitutes each variable by a linear form: the result of
    /// `self(f1(y), ..., fn(y))`, a form in the target variables.
    pub fn compose_forms(&self, forms: &[LinearForm]) -> Result<Self> {
        assert_eq!(forms.len(), self.dim(), "one substitution form per variable");
        let out_dim = forms[0].dim();
        let mut acc = ExactVector::zero(out_dim, forms[0].disc())?;
        for (c, f) in self.coeffs.entries().iter().zip(forms) {
            acc = acc.add(&f.coeffs.scale(c))?;
        }
        Ok(LinearForm { coeffs: acc })
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.coeffs
            .entries()
            .iter()
            .zip(point)
            .map(|(c, x)| c.to_f64() * x)
            .sum()
    }

    pub fn coeffs_f64(&self) -> Vec<f64> {
        self.coeffs.to_f64()
    }

    pub fn galois_conj(&self) -> Self {
        LinearForm {
            coeffs: ExactVector::new(self.coeffs.entries().iter().map(QuadExt::galois_conj).collect())
                .expect("same shape"),
        }
    }
}

impl PartialOrd for LinearForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.entries().cmp(other.coeffs.entries())
    }
}

pub(crate) const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.entries().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = VAR_NAMES[i];
            let (sign, mag) = if c.sign() < 0 { ("-", c.neg()) } else { ("+", c.clone()) };
            let piece = match mag.display_bare().as_str() {
                "1" => var.to_string(),
                m if mag.is_compound() => format!("({m}) {var}"),
                m => format!("{m} {var}"),
            };
            if first {
                if sign == "-" {
                    write!(f, "-{piece}")?;
                } else {
                    write!(f, "{piece}")?;
                }
                first = false;
            } else {
                write!(f, " {sign} {piece}")?;
            }
        }
        Ok(())
    }
}
