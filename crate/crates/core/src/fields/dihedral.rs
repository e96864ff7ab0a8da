//! The 2-D construction: a 12-parameter ansatz of order-0/1 Helmholtz terms,
//! the exact linear constraints pinning it down to a one-parameter family,
//! and the two distinguished members of that family.

use crate::calculus::div;
use crate::error::{Error, Result};
use crate::exact::{rat, solve_affine, Disc, QuadExt, Rational};
use crate::groups::dihedral_beta;
use crate::symfun::{LinearForm, RawTerm, SymFun, TrigKind, VecField};

const D: Disc = Disc::Sqrt3;

fn q(a: (i64, i64), b: (i64, i64)) -> QuadExt {
    QuadExt::new(rat(a.0, a.1), rat(b.0, b.1), D)
}

/// The four unit forms at 30/60 degrees to the axes:
/// `lx0 = x/2 + sqrt(3) y/2`, `lx1 = -x/2 + sqrt(3) y/2`,
/// `ly0 = sqrt(3) x/2 + y/2`, `ly1 = sqrt(3) x/2 - y/2`.
pub fn hex_forms() -> [LinearForm; 4] {
    let lf = |a: QuadExt, b: QuadExt| LinearForm::from_quads(vec![a, b]).expect("2-D form");
    [
        lf(q((1, 2), (0, 1)), q((0, 1), (1, 2))),
        lf(q((-1, 2), (0, 1)), q((0, 1), (1, 2))),
        lf(q((0, 1), (1, 2)), q((1, 2), (0, 1))),
        lf(q((0, 1), (1, 2)), q((-1, 2), (0, 1))),
    ]
}

/// The solenoidal quadratic pair `(2xy - x^2 + y^2, 2xy + x^2 - y^2)`.
pub fn quadratic_pair() -> (SymFun, SymFun) {
    let x = SymFun::coordinate(2, 0, D);
    let y = SymFun::coordinate(2, 1, D);
    let xy2 = (&x * &y).scale_rat(&rat(2, 1));
    let x2 = &x * &x;
    let y2 = &y * &y;
    let pi = &(&xy2 - &x2) + &y2;
    let rho = &(&xy2 + &x2) - &y2;
    (pi, rho)
}

fn trig_term(kind: TrigKind, form: &LinearForm) -> SymFun {
    SymFun::from_raw(2, D, vec![RawTerm::new(QuadExt::one(D), vec![0, 0], vec![(kind, form.clone())])])
        .expect("valid term")
}

/// The twelve basis scalars of the ansatz, in coefficient order a..l.
pub fn ansatz_basis() -> Vec<SymFun> {
    let [lx0, lx1, ly0, ly1] = hex_forms();
    let x = SymFun::coordinate(2, 0, D);
    let y = SymFun::coordinate(2, 1, D);
    let ex = LinearForm::coordinate(2, 0, D);
    let ey = LinearForm::coordinate(2, 1, D);
    vec![
        trig_term(TrigKind::Cos, &ex),
        trig_term(TrigKind::Cos, &ey),
        trig_term(TrigKind::Cos, &lx0),
        trig_term(TrigKind::Cos, &lx1),
        trig_term(TrigKind::Cos, &ly0),
        trig_term(TrigKind::Cos, &ly1),
        &y * &trig_term(TrigKind::Sin, &ex),
        &x * &trig_term(TrigKind::Sin, &ey),
        &SymFun::from_form(&ly1) * &trig_term(TrigKind::Sin, &lx0),
        &SymFun::from_form(&ly0) * &trig_term(TrigKind::Sin, &lx1),
        &SymFun::from_form(&lx1) * &trig_term(TrigKind::Sin, &ly0),
        &SymFun::from_form(&lx0) * &trig_term(TrigKind::Sin, &ly1),
    ]
}

/// Coefficient tuple `(a, ..., l)` over Q(sqrt(3)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DihedralAnsatz {
    coeffs: Vec<QuadExt>,
}

impl DihedralAnsatz {
    pub fn new(coeffs: Vec<QuadExt>) -> Result<Self> {
        if coeffs.len() != 12 {
            return Err(Error::DimensionMismatch(coeffs.len(), 12));
        }
        for c in &coeffs {
            if c.disc() != D {
                return Err(Error::DiscMismatch(3, c.disc().radicand()));
            }
        }
        Ok(DihedralAnsatz { coeffs })
    }

    pub fn zero() -> Self {
        DihedralAnsatz { coeffs: vec![QuadExt::zero(D); 12] }
    }

    pub fn coeffs(&self) -> &[QuadExt] {
        &self.coeffs
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        DihedralAnsatz { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    pub fn scalar(&self) -> SymFun {
        let basis = ansatz_basis();
        let mut acc = SymFun::zero(2, D);
        for (c, b) in self.coeffs.iter().zip(&basis) {
            acc = &acc + &b.scale(c);
        }
        acc
    }

    pub fn field(&self) -> VecField {
        swap_lift(&self.scalar()).expect("2-D scalar")
    }
}

/// Lifts a 2-D scalar to the swap-symmetric field `(G(x,y), G(y,x))`.
pub fn swap_lift(g: &SymFun) -> Result<VecField> {
    if g.dim() != 2 {
        return Err(Error::BadDimension(g.dim()));
    }
    let swapped = g.substitute_matrix(dihedral_beta().matrix())?;
    VecField::new(vec![g.clone(), swapped])
}

/// The one-parameter affine family of ansatz tuples solving all constraints,
/// parameterized so that `at(a)` has first coefficient exactly `a`.
#[derive(Clone, Debug)]
pub struct DihedralFamily {
    base: Vec<QuadExt>,
    direction: Vec<QuadExt>,
}

impl DihedralFamily {
    pub fn at(&self, a: &Rational) -> DihedralAnsatz {
        let coeffs = self
            .base
            .iter()
            .zip(&self.direction)
            .map(|(b, v)| b + &v.scale(a))
            .collect();
        DihedralAnsatz::new(coeffs).expect("family tuples are valid")
    }

    pub fn direction(&self) -> &[QuadExt] {
        &self.direction
    }
}

/// Builds the full exact constraint system on the 12 coefficients:
/// the Taylor expansion of the scalar must start at the quadratic `pi`
/// (degrees 0..2), the lifted field must be solenoidal, and the field must be
/// invariant under the order-3 rotation, written on the scalar as
/// `-1/2 G(-lx0, ly1) + sqrt(3)/2 G(ly1, -lx0) = G(x, y)`.
/// (Invariance under the coordinate swap is automatic for swap lifts.)
pub fn dihedral_constraint_system() -> (Vec<Vec<QuadExt>>, Vec<QuadExt>) {
    let basis = ansatz_basis();
    let (pi, _) = quadratic_pair();
    let [lx0, _, _, ly1] = hex_forms();
    let zero = SymFun::zero(2, D);

    let mut rows: Vec<Vec<QuadExt>> = Vec::new();
    let mut rhs: Vec<QuadExt> = Vec::new();

    let mut push_block = |images: &[SymFun], target: &SymFun| {
        let mut keys: std::collections::BTreeSet<_> = target.terms().map(|(k, _)| k.clone()).collect();
        for im in images {
            keys.extend(im.terms().map(|(k, _)| k.clone()));
        }
        for key in keys {
            let row = images
                .iter()
                .map(|im| im.coeff(&key).cloned().unwrap_or_else(|| QuadExt::zero(D)))
                .collect();
            rows.push(row);
            rhs.push(target.coeff(&key).cloned().unwrap_or_else(|| QuadExt::zero(D)));
        }
    };

    for k in 0..=2u32 {
        let images: Vec<SymFun> = basis.iter().map(|b| b.taylor_part(k)).collect();
        let target = if k == 2 { &pi } else { &zero };
        push_block(&images, target);
    }

    let div_images: Vec<SymFun> = basis
        .iter()
        .map(|b| div(&swap_lift(b).expect("2-D basis")))
        .collect();
    push_block(&div_images, &zero);

    let rot_images: Vec<SymFun> = basis
        .iter()
        .map(|b| {
            let first = b
                .substitute_forms(&[lx0.neg(), ly1.clone()])
                .expect("2-D substitution")
                .scale(&q((-1, 2), (0, 1)));
            let second = b
                .substitute_forms(&[ly1.clone(), lx0.neg()])
                .expect("2-D substitution")
                .scale(&q((0, 1), (1, 2)));
            &(&first + &second) - b
        })
        .collect();
    push_block(&rot_images, &zero);

    (rows, rhs)
}

/// Solves the constraint system exactly. The solution set must be an affine
/// line along which the first coefficient is free; anything else means the
/// system was entered wrongly.
pub fn solve_dihedral_constraints() -> Result<DihedralFamily> {
    let (rows, rhs) = dihedral_constraint_system();
    let solution = solve_affine(&rows, &rhs, D)?;
    if solution.nullspace.len() != 1 {
        return Err(Error::InconsistentSystem);
    }
    let mut direction = solution.nullspace.into_iter().next().expect("one vector");
    let lead = direction[0].clone();
    if lead.is_zero() {
        return Err(Error::InconsistentSystem);
    }
    let inv = lead.try_inverse()?;
    for v in &mut direction {
        *v = &*v * &inv;
    }
    let shift = solution.particular[0].clone();
    let base: Vec<QuadExt> = solution
        .particular
        .iter()
        .zip(&direction)
        .map(|(p, v)| p - &(v * &shift))
        .collect();
    Ok(DihedralFamily { base, direction })
}

/// The specialization `a = 0` of the family, as a plain tuple:
/// `(0, -8/3, -4 sqrt(3)/3, 4 sqrt(3)/3, 4/3, 4/3, 0, ..., 0)`.
pub fn order0_tuple() -> DihedralAnsatz {
    DihedralAnsatz::new(vec![
        q((0, 1), (0, 1)),
        q((-8, 3), (0, 1)),
        q((0, 1), (-4, 3)),
        q((0, 1), (4, 3)),
        q((4, 3), (0, 1)),
        q((4, 3), (0, 1)),
        q((0, 1), (0, 1)),
        q((0, 1), (0, 1)),
        q((0, 1), (0, 1)),
        q((0, 1), (0, 1)),
        q((0, 1), (0, 1)),
        q((0, 1), (0, 1)),
    ])
    .expect("12 coefficients")
}

/// The specialization `a = 4/3` rescaled by `3/2`:
/// `(2, 2, sqrt(3)-1, -sqrt(3)-1, -sqrt(3)-1, sqrt(3)-1, 0, 2, -sqrt(3), sqrt(3), 1, 1)`.
pub fn companion_tuple() -> DihedralAnsatz {
    DihedralAnsatz::new(vec![
        q((2, 1), (0, 1)),
        q((2, 1), (0, 1)),
        q((-1, 1), (1, 1)),
        q((-1, 1), (-1, 1)),
        q((-1, 1), (-1, 1)),
        q((-1, 1), (1, 1)),
        q((0, 1), (0, 1)),
        q((2, 1), (0, 1)),
        q((0, 1), (-1, 1)),
        q((0, 1), (1, 1)),
        q((1, 1), (0, 1)),
        q((1, 1), (0, 1)),
    ])
    .expect("12 coefficients")
}

/// The distinguished order-0 member: the `a = 0` tuple rescaled by `3/8`.
pub fn dihedral_v() -> VecField {
    order0_tuple().scale_rat(&rat(3, 8)).field()
}

/// The companion member, already carrying its `3/2` normalization.
pub fn dihedral_q() -> VecField {
    companion_tuple().field()
}
