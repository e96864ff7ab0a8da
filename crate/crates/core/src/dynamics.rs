//! Floating-point evaluation, fixed-step orbit integration, and diagonal
//! fixed-point location.

use std::io::{self, Write};

use crate::error::{Error, Result};
use crate::symfun::{TrigKind, VecField};

struct CompiledTerm {
    coeff: f64,
    exps: Vec<u32>,
    trig: Option<(TrigKind, Vec<f64>)>,
}

struct CompiledScalar {
    terms: Vec<CompiledTerm>,
}

impl CompiledScalar {
    fn eval(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for t in &self.terms {
            let mut v = t.coeff;
            for (e, xi) in t.exps.iter().zip(x) {
                if *e > 0 {
                    v *= xi.powi(*e as i32);
                }
            }
            if let Some((kind, form)) = &t.trig {
                let arg: f64 = form.iter().zip(x).map(|(c, xi)| c * xi).sum();
                v *= match kind {
                    TrigKind::Sin => arg.sin(),
                    TrigKind::Cos => arg.cos(),
                };
            }
            acc += v;
        }
        acc
    }
}

/// Double-precision compilation of an exact field, for the integrator's
/// inner loop.
pub struct CompiledField {
    dim: usize,
    comps: Vec<CompiledScalar>,
}

impl CompiledField {
    pub fn compile(field: &VecField) -> Self {
        let comps = field
            .components()
            .iter()
            .map(|f| CompiledScalar {
                terms: f
                    .terms()
                    .map(|(key, c)| CompiledTerm {
                        coeff: c.to_f64(),
                        exps: key.exponents.clone(),
                        trig: key.trig.as_ref().map(|(k, form)| (*k, form.coeffs_f64())),
                    })
                    .collect(),
            })
            .collect();
        CompiledField { dim: field.dim(), comps }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval_into(&self, x: &[f64], out: &mut [f64]) {
        for (o, c) in out.iter_mut().zip(&self.comps) {
            *o = c.eval(x);
        }
    }

    pub fn eval(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.eval_into(x, &mut out);
        out
    }
}

#[derive(Clone, Debug)]
pub struct OrbitMeta {
    pub initial: Vec<f64>,
    pub dt: f64,
    pub method: &'static str,
}

/// Time-stamped polyline of a trajectory, samples in strictly increasing time.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub samples: Vec<(f64, Vec<f64>)>,
    pub meta: OrbitMeta,
}

impl Orbit {
    pub fn dim(&self) -> usize {
        self.meta.initial.len()
    }

    pub fn last_point(&self) -> &[f64] {
        &self.samples.last().expect("orbit is never empty").1
    }

    /// CSV with header `t,x,y[,z]`; floats in shortest round-trip form, so
    /// repeated runs are byte-identical.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        let names = ["x", "y", "z"];
        write!(w, "t")?;
        for n in names.iter().take(self.dim()) {
            write!(w, ",{n}")?;
        }
        writeln!(w)?;
        for (t, p) in &self.samples {
            write!(w, "{t}")?;
            for v in p {
                write!(w, ",{v}")?;
            }
            writeln!(w)?;
        }
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }
}

/// One classical Runge-Kutta step of size `h` (which may be negative).
pub fn rk4_step(f: &CompiledField, x: &[f64], h: f64) -> Vec<f64> {
    let n = x.len();
    let k1 = f.eval(x);
    let stage = |k: &[f64], c: f64| -> Vec<f64> { (0..n).map(|i| x[i] + c * h * k[i]).collect() };
    let k2 = f.eval(&stage(&k1, 0.5));
    let k3 = f.eval(&stage(&k2, 0.5));
    let k4 = f.eval(&stage(&k3, 1.0));
    (0..n)
        .map(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

fn check_finite(x: &[f64], t: f64, last_good_t: f64) -> Result<()> {
    if x.iter().all(|v| v.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFiniteState { t, last_good_t })
    }
}

/// Fixed-step RK4 trajectory of `x' = F(x)` with `x(t0) = x0`, sampled at
/// every step. The step count is `round((t1 - t0) / dt)`.
pub fn integrate_orbit(field: &VecField, x0: &[f64], t_span: (f64, f64), dt: f64) -> Result<Orbit> {
    assert!(dt > 0.0, "dt must be positive");
    assert!(t_span.1 > t_span.0, "t1 must exceed t0");
    assert_eq!(x0.len(), field.dim(), "initial point dimension mismatch");
    let f = CompiledField::compile(field);
    let steps = ((t_span.1 - t_span.0) / dt).round() as usize;
    let mut samples = Vec::with_capacity(steps + 1);
    let mut x = x0.to_vec();
    for k in 0..=steps {
        let t = t_span.0 + (k as f64) * dt;
        check_finite(&x, t, t - dt)?;
        samples.push((t, x.clone()));
        if k < steps {
            x = rk4_step(&f, &x, dt);
        }
    }
    Ok(Orbit { samples, meta: OrbitMeta { initial: x0.to_vec(), dt, method: "rk4" } })
}

/// Trajectory through `x(0) = x0` traced in both time directions and joined
/// into one increasing-time polyline on `[-t_back, t_fwd]`.
pub fn trace_bidirectional(field: &VecField, x0: &[f64], t_back: f64, t_fwd: f64, dt: f64) -> Result<Orbit> {
    assert!(dt > 0.0, "dt must be positive");
    assert!(t_back >= 0.0 && t_fwd >= 0.0, "spans must be nonnegative");
    let f = CompiledField::compile(field);
    let n_back = (t_back / dt).round() as usize;
    let n_fwd = (t_fwd / dt).round() as usize;

    let mut samples = Vec::with_capacity(n_back + n_fwd + 1);
    let mut x = x0.to_vec();
    for k in 0..=n_back {
        let t = -(k as f64) * dt;
        check_finite(&x, t, t + dt)?;
        samples.push((t, x.clone()));
        if k < n_back {
            x = rk4_step(&f, &x, -dt);
        }
    }
    samples.reverse();
    let mut x = x0.to_vec();
    for k in 1..=n_fwd {
        x = rk4_step(&f, &x, dt);
        let t = (k as f64) * dt;
        check_finite(&x, t, t - dt)?;
        samples.push((t, x.clone()));
    }
    Ok(Orbit { samples, meta: OrbitMeta { initial: x0.to_vec(), dt, method: "rk4" } })
}

/// A located zero of the diagonal restriction `g(x) = F_x(x, x)`.
#[derive(Clone, Debug)]
pub struct DiagonalZero {
    pub x: f64,
    /// Scan bracket containing the zero, `lo < x < hi`.
    pub bracket: (f64, f64),
    pub residual: f64,
}

/// Sign-change scan of `g(x) = F_x(x, x)` on `(0, x_max]` followed by
/// bisection to machine resolution. By the swap symmetry of the fields in
/// this suite, zeros of `g` are exactly the diagonal equilibria.
pub fn find_diagonal_zeros(field: &VecField, x_max: f64, scan_step: f64) -> Result<Vec<DiagonalZero>> {
    if field.dim() != 2 {
        return Err(Error::BadDimension(field.dim()));
    }
    assert!(x_max > 0.0 && scan_step > 0.0);
    let f = CompiledField::compile(field);
    let g = |x: f64| f.comps[0].eval(&[x, x]);

    let mut zeros: Vec<DiagonalZero> = Vec::new();
    let n = (x_max / scan_step).ceil() as usize;
    for k in 0..n {
        let lo = k as f64 * scan_step;
        let hi = ((k + 1) as f64 * scan_step).min(x_max);
        let (glo, ghi) = (g(lo), g(hi));
        let found = if ghi == 0.0 && hi < x_max {
            Some(hi)
        } else if glo * ghi < 0.0 {
            Some(bisect(&g, lo, hi))
        } else {
            None
        };
        if let Some(x) = found {
            if zeros.last().is_none_or(|z| (x - z.x).abs() > scan_step / 4.0) {
                zeros.push(DiagonalZero { x, bracket: (lo - scan_step, hi + scan_step), residual: g(x).abs() });
            }
        }
    }
    // tighten bracket metadata to the scan cell around each zero
    for z in &mut zeros {
        z.bracket = (z.x - scan_step, z.x + scan_step);
    }
    Ok(zeros)
}

fn bisect(g: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut glo = g(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let gm = g(mid);
        if gm == 0.0 {
            return mid;
        }
        if glo * gm < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            glo = gm;
        }
    }
    // pick the endpoint with the smaller residual
    let mid = 0.5 * (lo + hi);
    let mut best = mid;
    for cand in [lo, hi] {
        if g(cand).abs() < g(best).abs() {
            best = cand;
        }
    }
    best
}

#[derive(Clone, Debug)]
pub struct ConfinementReport {
    pub orbit: Orbit,
    /// Worst |x - y| over the whole trajectory.
    pub max_abs_diff: f64,
    pub final_point: Vec<f64>,
    /// Nearest diagonal equilibrium to the final point, when one exists.
    pub nearest_zero: Option<f64>,
    pub distance_to_zero: Option<f64>,
}

/// Integrates from a diagonal initial point and reports how far the
/// trajectory strays from the diagonal, plus the equilibrium it approaches.
pub fn diagonal_confinement(
    field: &VecField,
    x0: (f64, f64),
    t_span: (f64, f64),
    dt: f64,
) -> Result<ConfinementReport> {
    if field.dim() != 2 {
        return Err(Error::BadDimension(field.dim()));
    }
    if x0.0 != x0.1 {
        return Err(Error::NotOnDiagonal(x0.0, x0.1));
    }
    let orbit = integrate_orbit(field, &[x0.0, x0.1], t_span, dt)?;
    let max_abs_diff = orbit
        .samples
        .iter()
        .map(|(_, p)| (p[0] - p[1]).abs())
        .fold(0.0, f64::max);
    let final_point = orbit.last_point().to_vec();
    let reach = final_point[0].abs().max(final_point[1].abs()) + 2.0;
    let zeros = find_diagonal_zeros(field, reach.max(1.0), 0.05)?;
    let target = 0.5 * (final_point[0] + final_point[1]);
    let nearest = zeros
        .iter()
        .map(|z| z.x)
        .chain(std::iter::once(0.0))
        .min_by(|a, b| (a - target).abs().total_cmp(&(b - target).abs()));
    Ok(ConfinementReport {
        max_abs_diff,
        final_point: final_point.clone(),
        nearest_zero: nearest,
        distance_to_zero: nearest.map(|z| (z - target).abs()),
        orbit,
    })
}
