//! Canonical representation for finite sums of `coeff * monomial * trig(form)`.
//!
//! The class is closed under products (via product-to-sum rewriting), partial
//! derivatives, linear substitutions and Taylor truncation. After rewriting,
//! terms `monomial * {1, sin(l), cos(l)}` with distinct canonically oriented
//! nonzero forms are linearly independent over the polynomial ring, so map
//! equality of the canonical form is a complete zero test. That independence
//! is what every exact identity check in this crate rests on.

pub mod form;
pub mod term;
pub mod vecfield;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{factorial, rat, Disc, ExactMatrix, QuadExt, Rational};

pub use form::LinearForm;
pub use term::{RawTerm, TermKey, TrigKind};
pub use vecfield::VecField;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFun {
    dim: usize,
    disc: Disc,
    terms: BTreeMap<TermKey, QuadExt>,
}

fn add_term(map: &mut BTreeMap<TermKey, QuadExt>, key: TermKey, coeff: QuadExt) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get() + &coeff;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl SymFun {
    pub fn zero(dim: usize, disc: Disc) -> Self {
        assert!((2..=3).contains(&dim), "dimension must be 2 or 3");
        SymFun { dim, disc, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: QuadExt) -> Self {
        let mut f = SymFun::zero(dim, c.disc());
        add_term(&mut f.terms, TermKey { exponents: vec![0; dim], trig: None }, c);
        f
    }

    pub fn coordinate(dim: usize, axis: usize, disc: Disc) -> Self {
        let mut exps = vec![0u32; dim];
        exps[axis] = 1;
        let mut f = SymFun::zero(dim, disc);
        add_term(&mut f.terms, TermKey { exponents: exps, trig: None }, QuadExt::one(disc));
        f
    }

    /// Normalizes a list of raw (possibly multi-trig) terms into canonical
    /// form: product-to-sum rewriting until one trig factor remains, form
    /// orientation, `sin(0)` elimination, `cos(0) = 1`, merging of like terms.
    pub fn from_raw(dim: usize, disc: Disc, raw: Vec<RawTerm>) -> Result<Self> {
        assert!((2..=3).contains(&dim), "dimension must be 2 or 3");
        let half = QuadExt::from_rational(rat(1, 2), disc);
        let mut out = SymFun::zero(dim, disc);
        let mut work = raw;
        while let Some(t) = work.pop() {
            if t.coeff.is_zero() {
                continue;
            }
            if t.coeff.disc() != disc {
                return Err(Error::DiscMismatch(disc.radicand(), t.coeff.disc().radicand()));
            }
            if t.exponents.len() != dim {
                return Err(Error::DimensionMismatch(t.exponents.len(), dim));
            }
            match t.trig.len() {
                0 => add_term(&mut out.terms, TermKey { exponents: t.exponents, trig: None }, t.coeff),
                1 => {
                    let (kind, form) = t.trig.into_iter().next().expect("one factor");
                    if form.dim() != dim {
                        return Err(Error::DimensionMismatch(form.dim(), dim));
                    }
                    if form.disc() != disc {
                        return Err(Error::DiscMismatch(disc.radicand(), form.disc().radicand()));
                    }
                    if form.is_zero() {
                        if kind == TrigKind::Cos {
                            add_term(&mut out.terms, TermKey { exponents: t.exponents, trig: None }, t.coeff);
                        }
                        continue;
                    }
                    let (canon, sign) = form.canonical();
                    let coeff = if sign < 0 && kind == TrigKind::Sin { -&t.coeff } else { t.coeff };
                    add_term(
                        &mut out.terms,
                        TermKey { exponents: t.exponents, trig: Some((kind, canon)) },
                        coeff,
                    );
                }
                _ => {
                    // expand the first two factors by the product-to-sum rules
                    let mut factors = t.trig;
                    let rest = factors.split_off(2);
                    let (k1, a) = factors[0].clone();
                    let (k2, b) = factors[1].clone();
                    let sum = a.add(&b)?;
                    let diff = a.sub(&b)?;
                    let pieces: [(QuadExt, TrigKind, LinearForm); 2] = match (k1, k2) {
                        (TrigKind::Sin, TrigKind::Sin) => {
                            [(half.clone(), TrigKind::Cos, diff), (-&half, TrigKind::Cos, sum)]
                        }
                        (TrigKind::Sin, TrigKind::Cos) => {
                            [(half.clone(), TrigKind::Sin, sum), (half.clone(), TrigKind::Sin, diff)]
                        }
                        (TrigKind::Cos, TrigKind::Sin) => {
                            [(half.clone(), TrigKind::Sin, sum), (-&half, TrigKind::Sin, diff)]
                        }
                        (TrigKind::Cos, TrigKind::Cos) => {
                            [(half.clone(), TrigKind::Cos, diff), (half.clone(), TrigKind::Cos, sum)]
                        }
                    };
                    for (c, kind, form) in pieces {
                        let mut trig = vec![(kind, form)];
                        trig.extend(rest.iter().cloned());
                        work.push(RawTerm::new(&t.coeff * &c, t.exponents.clone(), trig));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn disc(&self) -> Disc {
        self.disc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey, &QuadExt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &TermKey) -> Option<&QuadExt> {
        self.terms.get(key)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        if self.disc != other.disc {
            return Err(Error::DiscMismatch(self.disc.radicand(), other.disc.radicand()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SymFun {
            dim: self.dim,
            disc: self.disc,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        assert_eq!(c.disc(), self.disc, "scalar discriminant must match");
        if c.is_zero() {
            return SymFun::zero(self.dim, self.disc);
        }
        SymFun {
            dim: self.dim,
            disc: self.disc,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        self.scale(&QuadExt::from_rational(r.clone(), self.disc))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let exps = k1
                    .exponents
                    .iter()
                    .zip(&k2.exponents)
                    .map(|(a, b)| a + b)
                    .collect();
                let mut trig = Vec::new();
                if let Some(t) = &k1.trig {
                    trig.push(t.clone());
                }
                if let Some(t) = &k2.trig {
                    trig.push(t.clone());
                }
                raw.push(RawTerm::new(c1 * c2, exps, trig));
            }
        }
        SymFun::from_raw(self.dim, self.disc, raw)
    }

    /// Exact partial derivative along one coordinate axis.
    pub fn partial(&self, axis: usize) -> Self {
        assert!(axis < self.dim, "axis out of range");
        let mut out = SymFun::zero(self.dim, self.disc);
        for (key, c) in &self.terms {
            // product rule: monomial part
            if key.exponents[axis] > 0 {
                let e = key.exponents[axis];
                let mut exps = key.exponents.clone();
                exps[axis] = e - 1;
                add_term(
                    &mut out.terms,
                    TermKey { exponents: exps, trig: key.trig.clone() },
                    c.scale(&rat(e as i64, 1)),
                );
            }
            // trig part; forms stay canonical so keys remain valid
            if let Some((kind, form)) = &key.trig {
                let slope = form.coeff(axis);
                if slope.is_zero() {
                    continue;
                }
                let (new_kind, factor) = match kind {
                    TrigKind::Sin => (TrigKind::Cos, c * slope),
                    TrigKind::Cos => (TrigKind::Sin, -&(c * slope)),
                };
                add_term(
                    &mut out.terms,
                    TermKey { exponents: key.exponents.clone(), trig: Some((new_kind, form.clone())) },
                    factor,
                );
            }
        }
        out
    }

    /// The linear polynomial `sum_i form_i x_i` as a `SymFun`.
    pub fn from_form(form: &LinearForm) -> Self {
        let mut f = SymFun::zero(form.dim(), form.disc());
        for (i, c) in form.coeffs().iter().enumerate() {
            let mut exps = vec![0u32; form.dim()];
            exps[i] = 1;
            add_term(&mut f.terms, TermKey { exponents: exps, trig: None }, c.clone());
        }
        f
    }

    /// Exact composition with a linear map: variable `i` of `self` is
    /// replaced by `forms[i]` (a form in the target variables). Monomials
    /// expand multinomially; trig arguments compose linearly.
    pub fn substitute_forms(&self, forms: &[LinearForm]) -> Result<Self> {
        if forms.len() != self.dim {
            return Err(Error::DimensionMismatch(forms.len(), self.dim));
        }
        let out_dim = forms[0].dim();
        for f in forms {
            if f.dim() != out_dim {
                return Err(Error::DimensionMismatch(f.dim(), out_dim));
            }
            if f.disc() != self.disc {
                return Err(Error::DiscMismatch(self.disc.radicand(), f.disc().radicand()));
            }
        }
        let mut pow_cache: HashMap<(usize, u32), SymFun> = HashMap::new();
        let one = SymFun::constant(out_dim, QuadExt::one(self.disc));
        let mut raw = Vec::new();
        for (key, c) in &self.terms {
            let mut poly = one.clone();
            for (i, &e) in key.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = pow_cache
                    .entry((i, e))
                    .or_insert_with(|| {
                        let base = SymFun::from_form(&forms[i]);
                        let mut acc = base.clone();
                        for _ in 1..e {
                            acc = acc.try_mul(&base).expect("same context");
                        }
                        acc
                    })
                    .clone();
                poly = poly.try_mul(&p)?;
            }
            let new_trig: Vec<(TrigKind, LinearForm)> = match &key.trig {
                None => Vec::new(),
                Some((kind, form)) => vec![(*kind, form.compose_forms(forms)?)],
            };
            for (pk, pc) in &poly.terms {
                debug_assert!(pk.trig.is_none());
                raw.push(RawTerm::new(c * pc, pk.exponents.clone(), new_trig.clone()));
            }
        }
        SymFun::from_raw(out_dim, self.disc, raw)
    }

    /// `x -> self(A x)` for a square matrix of matching dimension.
    pub fn substitute_matrix(&self, a: &ExactMatrix) -> Result<Self> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch(a.dim(), self.dim));
        }
        let forms: Vec<LinearForm> = (0..a.dim()).map(|i| LinearForm::new(a.row(i))).collect();
        self.substitute_forms(&forms)
    }

    /// `f(-x)`. A term is even exactly when monomial degree plus trig parity
    /// is even (sin odd, cos even), so the keys survive unchanged.
    pub fn parity_negate(&self) -> Self {
        let mut out = SymFun::zero(self.dim, self.disc);
        for (key, c) in &self.terms {
            let mut odd = key.total_degree() % 2 == 1;
            if matches!(key.trig, Some((TrigKind::Sin, _))) {
                odd = !odd;
            }
            let coeff = if odd { -c } else { c.clone() };
            add_term(&mut out.terms, key.clone(), coeff);
        }
        out
    }

    pub fn is_even_parity(&self) -> bool {
        self.parity_negate() == *self
    }

    pub fn even_part(&self) -> Self {
        self.try_add(&self.parity_negate())
            .expect("same context")
            .scale_rat(&rat(1, 2))
    }

    /// Exact homogeneous degree-`k` part of the Taylor expansion at the
    /// origin, via the sin/cos Maclaurin series and exact powers of forms.
    pub fn taylor_part(&self, k: u32) -> Self {
        let mut out = SymFun::zero(self.dim, self.disc);
        let mut pow_cache: HashMap<(LinearForm, u32), SymFun> = HashMap::new();
        for (key, c) in &self.terms {
            let m = key.total_degree();
            match &key.trig {
                None => {
                    if m == k {
                        add_term(&mut out.terms, key.clone(), c.clone());
                    }
                }
                Some((kind, form)) => {
                    if m > k {
                        continue;
                    }
                    let j = k - m;
                    let keep = match kind {
                        TrigKind::Sin => j % 2 == 1,
                        TrigKind::Cos => j % 2 == 0,
                    };
                    if !keep {
                        continue;
                    }
                    let sign_exp = match kind {
                        TrigKind::Sin => (j - 1) / 2,
                        TrigKind::Cos => j / 2,
                    };
                    let mut scalar = Rational::from_integer(1.into()) / factorial(j);
                    if sign_exp % 2 == 1 {
                        scalar = -scalar;
                    }
                    let form_pow = pow_cache
                        .entry((form.clone(), j))
                        .or_insert_with(|| {
                            let base = SymFun::from_form(form);
                            let mut acc = SymFun::constant(self.dim, QuadExt::one(self.disc));
                            for _ in 0..j {
                                acc = acc.try_mul(&base).expect("same context");
                            }
                            acc
                        })
                        .clone();
                    let monomial = SymFun {
                        dim: self.dim,
                        disc: self.disc,
                        terms: BTreeMap::from([(
                            TermKey { exponents: key.exponents.clone(), trig: None },
                            c.scale(&scalar),
                        )]),
                    };
                    let contrib = monomial.try_mul(&form_pow).expect("same context");
                    for (ck, cc) in contrib.terms {
                        add_term(&mut out.terms, ck, cc);
                    }
                }
            }
        }
        out
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.dim, "point dimension mismatch");
        let mut acc = 0.0;
        for (key, c) in &self.terms {
            let mut v = c.to_f64();
            for (e, x) in key.exponents.iter().zip(point) {
                if *e > 0 {
                    v *= x.powi(*e as i32);
                }
            }
            if let Some((kind, form)) = &key.trig {
                let arg = form.eval_f64(point);
                v *= match kind {
                    TrigKind::Sin => arg.sin(),
                    TrigKind::Cos => arg.cos(),
                };
            }
            acc += v;
        }
        acc
    }

    /// Applies the field automorphism `sqrt(d) -> -sqrt(d)` to every
    /// coefficient, including the trig form coefficients.
    pub fn galois_conj(&self) -> Self {
        let raw = self
            .terms
            .iter()
            .map(|(k, c)| {
                let trig = k
                    .trig
                    .iter()
                    .map(|(kind, form)| (*kind, form.galois_conj()))
                    .collect();
                RawTerm::new(c.galois_conj(), k.exponents.clone(), trig)
            })
            .collect();
        SymFun::from_raw(self.dim, self.disc, raw).expect("same context")
    }

    /// Extracts the function as a linear form when it is one (homogeneous
    /// degree 1 polynomial with no trig factors).
    pub fn as_linear_form(&self) -> Option<LinearForm> {
        let mut coeffs = vec![QuadExt::zero(self.disc); self.dim];
        for (key, c) in &self.terms {
            if key.trig.is_some() || key.total_degree() != 1 {
                return None;
            }
            let axis = key.exponents.iter().position(|&e| e == 1).expect("degree 1");
            coeffs[axis] = c.clone();
        }
        Some(LinearForm::from_quads(coeffs).expect("valid dims"))
    }

    /// True when no term carries a trig factor.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|k| k.trig.is_none())
    }
}

impl fmt::Display for SymFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (key, c) in &self.terms {
            let (sign_neg, mag) = if c.sign() < 0 { (true, -c) } else { (false, c.clone()) };
            let mut pieces = Vec::new();
            let has_factor = key.exponents.iter().any(|&e| e > 0) || key.trig.is_some();
            let coeff_txt = mag.display_bare();
            if coeff_txt != "1" || !has_factor {
                if mag.is_compound() {
                    pieces.push(format!("({coeff_txt})"));
                } else {
                    pieces.push(coeff_txt);
                }
            }
            for (i, &e) in key.exponents.iter().enumerate() {
                match e {
                    0 => {}
                    1 => pieces.push(form::VAR_NAMES[i].to_string()),
                    _ => pieces.push(format!("{}^{}", form::VAR_NAMES[i], e)),
                }
            }
            if let Some((kind, form)) = &key.trig {
                pieces.push(format!("{}({})", kind.as_str(), form));
            }
            let body = pieces.join(" ");
            if first {
                if sign_neg {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
                first = false;
            } else if sign_neg {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &SymFun {
    type Output = SymFun;
    fn add(self, rhs: &SymFun) -> SymFun {
        self.try_add(rhs).expect("incompatible operands")
    }
}

impl std::ops::Sub for &SymFun {
    type Output = SymFun;
    fn sub(self, rhs: &SymFun) -> SymFun {
        self.try_sub(rhs).expect("incompatible operands")
    }
}

impl std::ops::Mul for &SymFun {
    type Output = SymFun;
    fn mul(self, rhs: &SymFun) -> SymFun {
        self.try_mul(rhs).expect("incompatible operands")
    }
}

impl std::ops::Neg for &SymFun {
    type Output = SymFun;
    fn neg(self) -> SymFun {
        SymFun::neg(self)
    }
}
