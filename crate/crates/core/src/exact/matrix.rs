//! Small exact vectors and square matrices over a quadratic field.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::quadext::{Disc, QuadExt};
use crate::exact::rational::Rational;

/// Exact vector of length 2 or 3.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactVector {
    disc: Disc,
    entries: Vec<QuadExt>,
}

impl ExactVector {
    pub fn new(entries: Vec<QuadExt>) -> Result<Self> {
        let n = entries.len();
        if !(2..=3).contains(&n) {
            return Err(Error::BadDimension(n));
        }
        let disc = entries[0].disc();
        for e in &entries {
            if e.disc() != disc {
                return Err(Error::DiscMismatch(disc.radicand(), e.disc().radicand()));
            }
        }
        Ok(ExactVector { disc, entries })
    }

    pub fn zero(n: usize, disc: Disc) -> Result<Self> {
        Self::new(vec![QuadExt::zero(disc); n])
    }

    pub fn basis(n: usize, axis: usize, disc: Disc) -> Result<Self> {
        let mut v = vec![QuadExt::zero(disc); n];
        v[axis] = QuadExt::one(disc);
        Self::new(v)
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn disc(&self) -> Disc {
        self.disc
    }

    pub fn entry(&self, i: usize) -> &QuadExt {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[QuadExt] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn dot(&self, other: &Self) -> Result<QuadExt> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let mut acc = QuadExt::zero(self.disc);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = &acc + &a.try_mul(b)?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }

    pub fn neg(&self) -> Self {
        ExactVector { disc: self.disc, entries: self.entries.iter().map(|e| -e).collect() }
    }

    pub fn scale(&self, c: &QuadExt) -> Self {
        ExactVector { disc: self.disc, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn scale_rat(&self, r: &Rational) -> Self {
        ExactVector { disc: self.disc, entries: self.entries.iter().map(|e| e.scale(r)).collect() }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.to_f64()).collect()
    }
}

/// Exact square matrix (2x2 or 3x3), row major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactMatrix {
    disc: Disc,
    n: usize,
    entries: Vec<QuadExt>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<QuadExt>>) -> Result<Self> {
        let n = rows.len();
        if !(2..=3).contains(&n) {
            return Err(Error::BadDimension(n));
        }
        let disc = rows[0][0].disc();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch(row.len(), n));
            }
            for e in row {
                if e.disc() != disc {
                    return Err(Error::DiscMismatch(disc.radicand(), e.disc().radicand()));
                }
                entries.push(e);
            }
        }
        Ok(ExactMatrix { disc, n, entries })
    }

    /// Builds a matrix from integer rows, tagged with the given discriminant.
    pub fn from_int_rows(rows: &[&[i64]], disc: Disc) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| QuadExt::from_int(v, disc)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize, disc: Disc) -> Result<Self> {
        let mut rows = vec![vec![QuadExt::zero(disc); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = QuadExt::one(disc);
        }
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn disc(&self) -> Disc {
        self.disc
    }

    pub fn entry(&self, i: usize, j: usize) -> &QuadExt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> ExactVector {
        ExactVector::new(self.entries[i * self.n..(i + 1) * self.n].to_vec()).expect("valid row")
    }

    pub fn col(&self, j: usize) -> ExactVector {
        ExactVector::new((0..self.n).map(|i| self.entry(i, j).clone()).collect()).expect("valid col")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch(self.n, other.n));
        }
        if self.disc != other.disc {
            return Err(Error::DiscMismatch(self.disc.radicand(), other.disc.radicand()));
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = QuadExt::zero(self.disc);
                for k in 0..n {
                    acc = &acc + &(self.entry(i, k) * other.entry(k, j));
                }
                entries.push(acc);
            }
        }
        Ok(ExactMatrix { disc: self.disc, n, entries })
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.entry(j, i).clone());
            }
        }
        ExactMatrix { disc: self.disc, n, entries }
    }

    pub fn det(&self) -> QuadExt {
        let e = |i, j| self.entry(i, j);
        match self.n {
            2 => &(e(0, 0) * e(1, 1)) - &(e(0, 1) * e(1, 0)),
            3 => {
                let m = |a: &QuadExt, b: &QuadExt| a * b;
                let t1 = e(0, 0) * &(&m(e(1, 1), e(2, 2)) - &m(e(1, 2), e(2, 1)));
                let t2 = e(0, 1) * &(&m(e(1, 0), e(2, 2)) - &m(e(1, 2), e(2, 0)));
                let t3 = e(0, 2) * &(&m(e(1, 0), e(2, 1)) - &m(e(1, 1), e(2, 0)));
                &(&t1 - &t2) + &t3
            }
            _ => unreachable!("dimension checked at construction"),
        }
    }

    /// Exact inverse via the adjugate; errors on zero determinant.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let inv_det = det.try_inverse()?;
        let e = |i, j| self.entry(i, j);
        let entries = match self.n {
            2 => vec![
                e(1, 1) * &inv_det,
                -(e(0, 1)) * &inv_det,
                -(e(1, 0)) * &inv_det,
                e(0, 0) * &inv_det,
            ],
            3 => {
                let cof = |i: usize, j: usize| {
                    let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
                    let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
                    let minor = &(e(r[0], c[0]) * e(r[1], c[1])) - &(e(r[0], c[1]) * e(r[1], c[0]));
                    if (i + j) % 2 == 0 {
                        minor
                    } else {
                        -minor
                    }
                };
                // adjugate = transpose of the cofactor matrix
                let mut v = Vec::with_capacity(9);
                for i in 0..3 {
                    for j in 0..3 {
                        v.push(&cof(j, i) * &inv_det);
                    }
                }
                v
            }
            _ => unreachable!(),
        };
        Ok(ExactMatrix { disc: self.disc, n: self.n, entries })
    }

    pub fn apply(&self, v: &ExactVector) -> Result<ExactVector> {
        if v.dim() != self.n {
            return Err(Error::DimensionMismatch(v.dim(), self.n));
        }
        let entries = (0..self.n)
            .map(|i| self.row(i).dot(v))
            .collect::<Result<Vec<_>>>()?;
        ExactVector::new(entries)
    }

    pub fn is_orthogonal(&self) -> bool {
        let prod = self.mul(&self.transpose()).expect("same shape");
        prod == ExactMatrix::identity(self.n, self.disc).expect("valid identity")
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = ExactMatrix::identity(self.n, self.disc).expect("valid identity");
        for _ in 0..k {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    pub fn neg(&self) -> Self {
        ExactMatrix { disc: self.disc, n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_f64()).collect()
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.entry(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
