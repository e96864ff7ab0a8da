//! Term keys of the canonical sum representation.

use std::cmp::Ordering;

use crate::exact::QuadExt;
use crate::symfun::form::LinearForm;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum TrigKind {
    Sin,
    Cos,
}

impl TrigKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TrigKind::Sin => "sin",
            TrigKind::Cos => "cos",
        }
    }
}

/// Key of one canonical term: a monomial exponent vector together with an
/// optional single trig factor whose form is in canonical orientation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TermKey {
    pub exponents: Vec<u32>,
    pub trig: Option<(TrigKind, LinearForm)>,
}

impl TermKey {
    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    fn trig_rank(&self) -> u8 {
        match &self.trig {
            None => 0,
            Some((TrigKind::Sin, _)) => 1,
            Some((TrigKind::Cos, _)) => 2,
        }
    }
}

impl PartialOrd for TermKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TermKey {
    // lexicographic on (total degree, exponent vector, trig tag, form coefficients)
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exponents.cmp(&other.exponents))
            .then_with(|| self.trig_rank().cmp(&other.trig_rank()))
            .then_with(|| match (&self.trig, &other.trig) {
                (Some((_, f)), Some((_, g))) => f.cmp(g),
                _ => Ordering::Equal,
            })
    }
}

/// Unnormalized input term: any number of trig factors is allowed here.
/// `SymFun::from_raw` rewrites products until at most one factor remains.
#[derive(Clone, Debug)]
pub struct RawTerm {
    pub coeff: QuadExt,
    pub exponents: Vec<u32>,
    pub trig: Vec<(TrigKind, LinearForm)>,
}

impl RawTerm {
    pub fn new(coeff: QuadExt, exponents: Vec<u32>, trig: Vec<(TrigKind, LinearForm)>) -> Self {
        RawTerm { coeff, exponents, trig }
    }

    pub fn monomial(coeff: QuadExt, exponents: Vec<u32>) -> Self {
        RawTerm { coeff, exponents, trig: Vec::new() }
    }
}
