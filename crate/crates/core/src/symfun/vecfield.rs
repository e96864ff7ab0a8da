//! Vector fields whose components are canonical trig-term sums.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Disc, QuadExt, Rational};
use crate::symfun::SymFun;

/// An n-dimensional vector field with `n` components in `n` variables,
/// all over the same discriminant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VecField {
    components: Vec<SymFun>,
}

impl VecField {
    pub fn new(components: Vec<SymFun>) -> Result<Self> {
        let n = components.len();
        if !(2..=3).contains(&n) {
            return Err(Error::BadDimension(n));
        }
        let disc = components[0].disc();
        for c in &components {
            if c.dim() != n {
                return Err(Error::DimensionMismatch(c.dim(), n));
            }
            if c.disc() != disc {
                return Err(Error::DiscMismatch(disc.radicand(), c.disc().radicand()));
            }
        }
        Ok(VecField { components })
    }

    pub fn zero(dim: usize, disc: Disc) -> Self {
        VecField { components: vec![SymFun::zero(dim, disc); dim] }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn disc(&self) -> Disc {
        self.components[0].disc()
    }

    pub fn component(&self, i: usize) -> &SymFun {
        &self.components[i]
    }

    pub fn components(&self) -> &[SymFun] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SymFun::is_zero)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        VecField::new(components)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        VecField { components: self.components.iter().map(SymFun::neg).collect() }
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        VecField { components: self.components.iter().map(|f| f.scale(c)).collect() }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        VecField { components: self.components.iter().map(|f| f.scale_rat(r)).collect() }
    }

    pub fn map<F: Fn(&SymFun) -> SymFun>(&self, op: F) -> Self {
        VecField { components: self.components.iter().map(op).collect() }
    }

    pub fn eval_f64(&self, point: &[f64]) -> Vec<f64> {
        self.components.iter().map(|f| f.eval_f64(point)).collect()
    }

    pub fn parity_negate(&self) -> Self {
        self.map(SymFun::parity_negate)
    }

    pub fn is_even_parity(&self) -> bool {
        self.components.iter().all(SymFun::is_even_parity)
    }

    pub fn even_part(&self) -> Self {
        self.map(SymFun::even_part)
    }

    pub fn galois_conj(&self) -> Self {
        self.map(SymFun::galois_conj)
    }

    pub fn taylor_part(&self, k: u32) -> Self {
        self.map(|f| f.taylor_part(k))
    }
}

impl std::ops::Add for &VecField {
    type Output = VecField;
    fn add(self, rhs: &VecField) -> VecField {
        self.try_add(rhs).expect("incompatible fields")
    }
}

impl std::ops::Sub for &VecField {
    type Output = VecField;
    fn sub(self, rhs: &VecField) -> VecField {
        self.try_sub(rhs).expect("incompatible fields")
    }
}

impl fmt::Display for VecField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        for (i, c) in self.components.iter().enumerate() {
            writeln!(f, "F_{} = {}", NAMES[i], c)?;
        }
        Ok(())
    }
}
