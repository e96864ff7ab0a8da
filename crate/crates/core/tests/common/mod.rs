//! Shared helpers for the integration tests: seeded random generators for
//! exact values and term sums, plus finite-difference oracles.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lambent::exact::{rat, Disc, QuadExt};
use lambent::symfun::{LinearForm, RawTerm, SymFun, TrigKind, VecField};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(r: &mut ChaCha8Rng) -> lambent::exact::Rational {
    rat(r.gen_range(-9..=9), r.gen_range(1..=9))
}

pub fn random_quad(r: &mut ChaCha8Rng, d: Disc) -> QuadExt {
    QuadExt::new(random_rational(r), random_rational(r), d)
}

pub fn random_nonzero_quad(r: &mut ChaCha8Rng, d: Disc) -> QuadExt {
    loop {
        let q = random_quad(r, d);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Random form with small rational coefficients, not identically zero.
pub fn random_form(r: &mut ChaCha8Rng, dim: usize, d: Disc) -> LinearForm {
    loop {
        let coeffs: Vec<QuadExt> = (0..dim)
            .map(|_| QuadExt::from_rational(rat(r.gen_range(-3..=3), r.gen_range(1..=2)), d))
            .collect();
        let form = LinearForm::from_quads(coeffs).unwrap();
        if !form.is_zero() {
            return form;
        }
    }
}

pub fn random_raw_term(r: &mut ChaCha8Rng, dim: usize, d: Disc) -> RawTerm {
    let coeff = random_nonzero_quad(r, d);
    let exps: Vec<u32> = (0..dim).map(|_| r.gen_range(0..=2)).collect();
    let n_trig = r.gen_range(0..=2);
    let trig = (0..n_trig)
        .map(|_| {
            let kind = if r.gen_bool(0.5) { TrigKind::Sin } else { TrigKind::Cos };
            (kind, random_form(r, dim, d))
        })
        .collect();
    RawTerm::new(coeff, exps, trig)
}

pub fn random_symfun(r: &mut ChaCha8Rng, dim: usize, d: Disc, max_terms: usize) -> SymFun {
    let n = r.gen_range(1..=max_terms);
    let raw = (0..n).map(|_| random_raw_term(r, dim, d)).collect();
    SymFun::from_raw(dim, d, raw).unwrap()
}

pub fn random_vecfield(r: &mut ChaCha8Rng, dim: usize, d: Disc, max_terms: usize) -> VecField {
    VecField::new((0..dim).map(|_| random_symfun(r, dim, d, max_terms)).collect()).unwrap()
}

pub fn random_point(r: &mut ChaCha8Rng, dim: usize, radius: f64) -> Vec<f64> {
    (0..dim).map(|_| r.gen_range(-radius..radius)).collect()
}

pub const FD_H: f64 = 1e-5;
pub const FD_TOL: f64 = 1e-6;

/// Central difference of a scalar along one axis.
pub fn central_diff(f: &dyn Fn(&[f64]) -> f64, x: &[f64], axis: usize) -> f64 {
    let mut hi = x.to_vec();
    let mut lo = x.to_vec();
    hi[axis] += FD_H;
    lo[axis] -= FD_H;
    (f(&hi) - f(&lo)) / (2.0 * FD_H)
}

/// Checks symbolic div/curl/laplacian of `field` against central differences
/// at `n_points` random points in `[-3, 3]^dim`. The laplacian is validated
/// by differencing the exact first partials (a direct second difference at
/// h = 1e-5 would drown in f64 cancellation noise).
pub fn fd_cross_validate(field: &VecField, seed: u64, n_points: usize) {
    let dim = field.dim();
    let mut r = rng(seed);
    let div_sym = lambent::calculus::div(field);
    let lap_sym = lambent::calculus::laplacian(field);
    let curl_sym = if dim == 3 { Some(lambent::calculus::curl(field).unwrap()) } else { None };
    let partials: Vec<Vec<SymFun>> = field
        .components()
        .iter()
        .map(|c| (0..dim).map(|j| c.partial(j)).collect())
        .collect();

    for _ in 0..n_points {
        let p = random_point(&mut r, dim, 3.0);

        // divergence vs first-order differences of the field itself
        let mut div_fd = 0.0;
        for i in 0..dim {
            let comp = field.component(i).clone();
            let f = move |q: &[f64]| comp.eval_f64(q);
            div_fd += central_diff(&f, &p, i);
        }
        assert!(
            (div_fd - div_sym.eval_f64(&p)).abs() <= FD_TOL,
            "div mismatch at {p:?}: fd {div_fd} vs {}",
            div_sym.eval_f64(&p)
        );

        if let Some(curl_sym) = &curl_sym {
            let comp = |i: usize| {
                let c = field.component(i).clone();
                move |q: &[f64]| c.eval_f64(q)
            };
            let curl_fd = [
                central_diff(&comp(2), &p, 1) - central_diff(&comp(1), &p, 2),
                central_diff(&comp(0), &p, 2) - central_diff(&comp(2), &p, 0),
                central_diff(&comp(1), &p, 0) - central_diff(&comp(0), &p, 1),
            ];
            let curl_ex = curl_sym.eval_f64(&p);
            for i in 0..3 {
                assert!(
                    (curl_fd[i] - curl_ex[i]).abs() <= FD_TOL,
                    "curl[{i}] mismatch at {p:?}: fd {} vs {}",
                    curl_fd[i],
                    curl_ex[i]
                );
            }
        }

        // laplacian: difference the exact gradient componentwise
        for i in 0..dim {
            let mut lap_fd = 0.0;
            for j in 0..dim {
                let pj = partials[i][j].clone();
                let f = move |q: &[f64]| pj.eval_f64(q);
                lap_fd += central_diff(&f, &p, j);
            }
            let lap_ex = lap_sym.component(i).eval_f64(&p);
            assert!(
                (lap_fd - lap_ex).abs() <= FD_TOL,
                "lap[{i}] mismatch at {p:?}: fd {lap_fd} vs {lap_ex}"
            );
        }
    }
}
