//! Hand-expanded closed forms of the constructed fields, kept as independent
//! cross-checks: the constructors build each family from its defining recipe
//! (precurl plus curl completion, conjugation averaging, constraint solving),
//! while these expressions spell the same fields out termwise. The test suite
//! asserts exact agreement between the two routes.

use crate::error::Result;
use crate::exact::{rat, rat_int, Disc, QuadExt};
use crate::fields::dihedral::swap_lift;
use crate::fields::polyhedral::{cyclic_lift, harmonic_at, HarmonicKind, Variant};
use crate::symfun::{LinearForm, RawTerm, SymFun, TrigKind, VecField};

use TrigKind::{Cos, Sin};

fn trig3(kind: TrigKind, axis: usize) -> SymFun {
    crate::fields::polyhedral::coordinate_trig(kind, 3, axis, Disc::Sqrt5)
}

/// Closed form of the symmetric (tetrahedral) family of the given degree.
pub fn tetra_closed_form(ell: u32, variant: Variant) -> Result<VecField> {
    let d = Disc::Sqrt5;
    let ell = ell as i32;
    let q = |n: i32, axes: (usize, usize)| harmonic_at(n, HarmonicKind::Q, 3, axes, d);
    let p = |n: i32, axes: (usize, usize)| harmonic_at(n, HarmonicKind::P, 3, axes, d);
    let g = match variant {
        Variant::Deg4LPlus1 => {
            let n = 4 * ell + 1;
            let body = &(&q(n, (0, 1)) * &trig3(Sin, 2)) + &(&q(n, (0, 2)) * &trig3(Sin, 1));
            &body + &(&(&q(n, (2, 0)) * &trig3(Cos, 1)) - &(&q(n, (1, 0)) * &trig3(Cos, 2)))
        }
        Variant::Deg4LPlus3 => {
            let n = 4 * ell + 3;
            let c = rat_int((8 * ell + 6) as i64);
            let cc = rat_int(((8 * ell + 6) * (4 * ell + 2)) as i64);
            let body = &(&(&q(n, (0, 1)) * &trig3(Sin, 2)) + &(&q(n, (0, 2)) * &trig3(Sin, 1)))
                + &(&q(n - 1, (1, 2)) * &trig3(Cos, 0)).scale_rat(&c);
            let curl_part = &(&(&q(n, (2, 0)) * &trig3(Cos, 1)) - &(&q(n, (1, 0)) * &trig3(Cos, 2)))
                - &(&p(n - 1, (1, 2)) * &trig3(Sin, 0)).scale_rat(&c);
            let tail = &(&p(n - 2, (0, 1)) * &trig3(Cos, 2)).scale_rat(&cc)
                - &(&p(n - 2, (0, 2)) * &trig3(Cos, 1)).scale_rat(&cc);
            &(&body + &curl_part) + &tail
        }
    };
    cyclic_lift(&g)
}

/// Closed form of the antisymmetric (octahedral) family of the given degree.
pub fn octa_closed_form(ell: u32, variant: Variant) -> Result<VecField> {
    let d = Disc::Sqrt5;
    let ell = ell as i32;
    let q = |n: i32, axes: (usize, usize)| harmonic_at(n, HarmonicKind::Q, 3, axes, d);
    let p = |n: i32, axes: (usize, usize)| harmonic_at(n, HarmonicKind::P, 3, axes, d);
    let g = match variant {
        Variant::Deg4LPlus3 => {
            let n = 4 * ell + 3;
            let body = &(&q(n, (0, 1)) * &trig3(Sin, 2)) - &(&q(n, (0, 2)) * &trig3(Sin, 1));
            &body + &(&(&q(n, (2, 0)) * &trig3(Cos, 1)) + &(&q(n, (1, 0)) * &trig3(Cos, 2)))
        }
        Variant::Deg4LPlus1 => {
            let n = 4 * ell + 1;
            let c = rat_int((8 * ell + 2) as i64);
            let cc = rat_int((4 * ell * (8 * ell + 2)) as i64);
            let body = &(&(&q(n, (0, 1)) * &trig3(Sin, 2)) - &(&q(n, (0, 2)) * &trig3(Sin, 1)))
                + &(&q(n - 1, (1, 2)) * &trig3(Cos, 0)).scale_rat(&c);
            let curl_part = &(&(&q(n, (2, 0)) * &trig3(Cos, 1)) + &(&q(n, (1, 0)) * &trig3(Cos, 2)))
                - &(&p(n - 1, (1, 2)) * &trig3(Sin, 0)).scale_rat(&c);
            let tail = &(&p(n - 2, (0, 1)) * &trig3(Cos, 2)).scale_rat(&cc)
                + &(&p(n - 2, (0, 2)) * &trig3(Cos, 1)).scale_rat(&cc);
            &(&body + &curl_part) + &tail
        }
    };
    cyclic_lift(&g)
}

/// Termwise transcription of the induced icosahedral field (first coordinate;
/// the remaining two follow by the cyclic symmetry). Triple trig products are
/// entered verbatim and expanded by the canonicalizer.
pub fn icosa_induced_closed_form() -> VecField {
    let d = Disc::Sqrt5;
    let zero = QuadExt::zero(d);
    let one = QuadExt::one(d);
    let two = QuadExt::from_int(2, d);
    let phi = QuadExt::phi();
    let two_phi = &two * &phi;
    let two_inv_phi = &two * &phi.try_inverse().expect("phi nonzero");

    let half = QuadExt::new(rat(1, 2), rat(0, 1), d);
    let phi_half = QuadExt::new(rat(1, 4), rat(1, 4), d);
    let inv_two_phi = QuadExt::new(rat(-1, 4), rat(1, 4), d);

    let form = |cs: [&QuadExt; 3]| {
        LinearForm::from_quads(vec![cs[0].clone(), cs[1].clone(), cs[2].clone()]).expect("3-D form")
    };
    let x_half = form([&half, &zero, &zero]);
    let y_half = form([&zero, &half, &zero]);
    let z_half = form([&zero, &zero, &half]);
    let phi_x = form([&phi_half, &zero, &zero]);
    let phi_y = form([&zero, &phi_half, &zero]);
    let phi_z = form([&zero, &zero, &phi_half]);
    let x_over = form([&inv_two_phi, &zero, &zero]);
    let y_over = form([&zero, &inv_two_phi, &zero]);
    let z_over = form([&zero, &zero, &inv_two_phi]);
    let ey = LinearForm::coordinate(3, 1, d);
    let ez = LinearForm::coordinate(3, 2, d);

    let raw = vec![
        RawTerm::new(two.clone(), vec![1, 0, 0], vec![(Sin, x_half.clone()), (Sin, phi_y.clone()), (Sin, z_over.clone())]),
        RawTerm::new(-&two_phi, vec![1, 0, 0], vec![(Sin, x_over.clone()), (Sin, y_half.clone()), (Sin, phi_z.clone())]),
        RawTerm::new(two_inv_phi, vec![1, 0, 0], vec![(Sin, phi_x.clone()), (Sin, y_over.clone()), (Sin, z_half.clone())]),
        RawTerm::new(one.clone(), vec![0, 1, 0], vec![(Sin, ez)]),
        RawTerm::new(two.clone(), vec![0, 1, 0], vec![(Cos, x_half.clone()), (Cos, phi_y.clone()), (Sin, z_over.clone())]),
        RawTerm::new(-&two, vec![0, 1, 0], vec![(Cos, x_over), (Cos, y_half), (Sin, phi_z)]),
        RawTerm::new(one, vec![0, 0, 1], vec![(Sin, ey)]),
        RawTerm::new(-&two, vec![0, 0, 1], vec![(Cos, x_half), (Sin, phi_y), (Cos, z_over)]),
        RawTerm::new(two, vec![0, 0, 1], vec![(Cos, phi_x), (Sin, y_over), (Cos, z_half)]),
    ];
    let g = SymFun::from_raw(3, d, raw).expect("valid transcription");
    cyclic_lift(&g).expect("3-dimensional scalar")
}

/// Termwise transcription of the order-0 dihedral field (first component;
/// the second follows by the coordinate swap).
pub fn dihedral_v_closed_form() -> VecField {
    let d = Disc::Sqrt3;
    let zero = QuadExt::zero(d);
    let one = QuadExt::one(d);
    let sqrt3 = QuadExt::sqrt_d(d);
    let half = QuadExt::new(rat(1, 2), rat(0, 1), d);
    let s3_half = QuadExt::new(rat(0, 1), rat(1, 2), d);
    let form = |a: &QuadExt, b: &QuadExt| LinearForm::from_quads(vec![a.clone(), b.clone()]).expect("2-D form");

    let raw = vec![
        RawTerm::new(-&one, vec![0, 0], vec![(Cos, LinearForm::coordinate(2, 1, d))]),
        RawTerm::new(sqrt3, vec![0, 0], vec![(Sin, form(&half, &zero)), (Sin, form(&zero, &s3_half))]),
        RawTerm::new(one, vec![0, 0], vec![(Cos, form(&s3_half, &zero)), (Cos, form(&zero, &half))]),
    ];
    let g = SymFun::from_raw(2, d, raw).expect("valid transcription");
    swap_lift(&g).expect("2-dimensional scalar")
}

/// Termwise transcription of the companion dihedral field.
pub fn dihedral_q_closed_form() -> VecField {
    let d = Disc::Sqrt3;
    let zero = QuadExt::zero(d);
    let one = QuadExt::one(d);
    let two = QuadExt::from_int(2, d);
    let three = QuadExt::from_int(3, d);
    let sqrt3 = QuadExt::sqrt_d(d);
    let two_sqrt3 = &two * &sqrt3;
    let half = QuadExt::new(rat(1, 2), rat(0, 1), d);
    let s3_half = QuadExt::new(rat(0, 1), rat(1, 2), d);
    let form = |a: &QuadExt, b: &QuadExt| LinearForm::from_quads(vec![a.clone(), b.clone()]).expect("2-D form");
    let ex = LinearForm::coordinate(2, 0, d);
    let ey = LinearForm::coordinate(2, 1, d);

    let sx_half = form(&half, &zero);
    let sy_half = form(&zero, &half);
    let sx_s3 = form(&s3_half, &zero);
    let sy_s3 = form(&zero, &s3_half);

    let raw = vec![
        RawTerm::new(two.clone(), vec![0, 0], vec![(Cos, ex)]),
        RawTerm::new(two.clone(), vec![0, 0], vec![(Cos, ey.clone())]),
        RawTerm::new(two.clone(), vec![1, 0], vec![(Sin, ey)]),
        RawTerm::new(two_sqrt3.clone(), vec![0, 0], vec![(Sin, sx_s3.clone()), (Sin, sy_half.clone())]),
        RawTerm::new(-&one, vec![1, 0], vec![(Cos, sx_s3.clone()), (Sin, sy_half.clone())]),
        RawTerm::new(sqrt3.clone(), vec![0, 1], vec![(Sin, sx_s3.clone()), (Cos, sy_half.clone())]),
        RawTerm::new(-&two, vec![0, 0], vec![(Cos, sx_half.clone()), (Cos, sy_s3.clone())]),
        RawTerm::new(sqrt3, vec![0, 1], vec![(Cos, sx_half.clone()), (Sin, sy_s3.clone())]),
        RawTerm::new(-&two_sqrt3, vec![0, 0], vec![(Sin, sx_half.clone()), (Sin, sy_s3.clone())]),
        RawTerm::new(-&three, vec![1, 0], vec![(Sin, sx_half), (Cos, sy_s3)]),
        RawTerm::new(-&two, vec![0, 0], vec![(Cos, sx_s3), (Cos, sy_half)]),
    ];
    let g = SymFun::from_raw(2, d, raw).expect("valid transcription");
    swap_lift(&g).expect("2-dimensional scalar")
}
