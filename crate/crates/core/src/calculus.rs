//! Exact differential operators and the lambent-property verification suite.

use crate::error::{Error, Result};
use crate::groups::{is_invariant, FiniteGroup};
use crate::symfun::{SymFun, VecField};

pub fn grad(f: &SymFun) -> VecField {
    VecField::new((0..f.dim()).map(|i| f.partial(i)).collect()).expect("scalar dims are valid")
}

pub fn div(field: &VecField) -> SymFun {
    let mut acc = SymFun::zero(field.dim(), field.disc());
    for i in 0..field.dim() {
        acc = &acc + &field.component(i).partial(i);
    }
    acc
}

pub fn curl(field: &VecField) -> Result<VecField> {
    if field.dim() != 3 {
        return Err(Error::CurlDimension(field.dim()));
    }
    let f = |i: usize| field.component(i);
    VecField::new(vec![
        &f(2).partial(1) - &f(1).partial(2),
        &f(0).partial(2) - &f(2).partial(0),
        &f(1).partial(0) - &f(0).partial(1),
    ])
}

pub fn scalar_laplacian(f: &SymFun) -> SymFun {
    let mut acc = SymFun::zero(f.dim(), f.disc());
    for i in 0..f.dim() {
        acc = &acc + &f.partial(i).partial(i);
    }
    acc
}

pub fn laplacian(field: &VecField) -> VecField {
    field.map(scalar_laplacian)
}

/// Exact residual attached to a failed check.
#[derive(Clone, Debug)]
pub enum Residual {
    Scalar(SymFun),
    Field(VecField),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Scalar(f) => f.is_zero(),
            Residual::Field(f) => f.is_zero(),
        }
    }
}

impl std::fmt::Display for Residual {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Residual::Scalar(s) => write!(f, "{s}"),
            Residual::Field(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// Exact residual, kept for failures so transcription issues can be
    /// inspected rather than reduced to a boolean.
    pub residual: Option<Residual>,
    /// Indices of group elements violating invariance (invariance check only).
    pub failing_elements: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LambentMode {
    /// 3-D check: `curl F = F`.
    Beltrami3d,
    /// Any-dimension check: `lap F = -F` and `div F = 0`.
    HelmholtzNd,
}

fn residual_check(name: &'static str, residual: Residual) -> CheckResult {
    CheckResult { name, passed: residual.is_zero(), residual: Some(residual), failing_elements: Vec::new() }
}

/// Runs every defining property of a lambent field exactly: the curl
/// identity in 3-D mode, or the Helmholtz/solenoidal identities plus even
/// compound degree in n-D mode, and invariance under conjugation by the
/// whole group. Entirety of the components is structural: the term class
/// contains only entire functions.
///
/// Even parity is a Helmholtz-mode property only: a nonzero curl eigenfield
/// always mixes parities, since the curl of an even field is odd.
pub fn check_lambent(field: &VecField, group: &FiniteGroup, mode: LambentMode) -> Result<VerificationReport> {
    let mut checks = Vec::new();
    match mode {
        LambentMode::Beltrami3d => {
            let r = &curl(field)? - field;
            checks.push(residual_check("curl_eigen", Residual::Field(r)));
        }
        LambentMode::HelmholtzNd => {
            let r = &laplacian(field) + field;
            checks.push(residual_check("helmholtz", Residual::Field(r)));
            checks.push(residual_check("solenoidal", Residual::Scalar(div(field))));
            let parity = &field.parity_negate() - field;
            checks.push(residual_check("even_parity", Residual::Field(parity)));
        }
    }

    let inv = is_invariant(field, group)?;
    checks.push(CheckResult {
        name: "invariance",
        passed: inv.invariant,
        residual: None,
        failing_elements: inv.violations,
    });
    Ok(VerificationReport { checks })
}
