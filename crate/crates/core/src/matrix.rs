//! Dense square complex matrices.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result};

pub type C64 = Complex<f64>;

#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    Complex::new(re, im)
}

/// A dense n×n complex matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![C64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, c64(1.0, 0.0))
    }

    pub fn scalar(n: usize, c: C64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = c;
        }
        m
    }

    pub fn diag(d: &[C64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Builds a matrix from rows; every row must have as many entries as
    /// there are rows.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Shape("matrix has no rows".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            data.extend_from_slice(row);
        }
        Ok(Self { n, data })
    }

    /// Real-valued convenience constructor.
    pub fn from_real(rows: &[&[f64]]) -> Result<Self> {
        let rows: Vec<Vec<C64>> = rows.iter().map(|r| r.iter().map(|&x| c64(x, 0.0)).collect()).collect();
        Self::from_rows(&rows)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<C64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Max-entry norm.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max-entry distance; `f64::INFINITY` for mismatched shapes.
    pub fn dist(&self, other: &CMatrix) -> f64 {
        if self.n != other.n {
            return f64::INFINITY;
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Equality up to `eps` relative to the larger operand (absolute below
    /// unit scale).
    pub fn approx_eq(&self, other: &CMatrix, eps: f64) -> bool {
        let scale = self.max_norm().max(other.max_norm()).max(1.0);
        self.dist(other) <= eps * scale
    }

    pub fn is_identity(&self, eps: f64) -> bool {
        self.dist(&Self::identity(self.n)) <= eps
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[C64]) -> Vec<C64> {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        self.data
            .chunks(self.n)
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn try_mul(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_shape(other)?;
        Ok(self * other)
    }

    pub fn same_shape(&self, other: &CMatrix) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.n, self.n, other.n, other.n
            )));
        }
        Ok(())
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_shape(other)?;
        Ok(&(self * other) - &(other * self))
    }

    /// Nonnegative integer power by repeated squaring.
    pub fn powu(&self, mut k: u64) -> CMatrix {
        let mut acc = Self::identity(self.n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn powi(&self, k: i64) -> Result<CMatrix> {
        if k >= 0 {
            Ok(self.powu(k as u64))
        } else {
            Ok(self.inverse()?.powu(k.unsigned_abs()))
        }
    }

    /// Evaluates `c[0] E + c[1] A + c[2] A² + …` by Horner's rule.
    pub fn polynomial(&self, coeffs: &[C64]) -> CMatrix {
        let mut acc = Self::zeros(self.n);
        for &c in coeffs.iter().rev() {
            acc = &acc * self;
            for i in 0..self.n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    fn lu(&self) -> Lu {
        let n = self.n;
        let mut a = self.data.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        let mut min_pivot = f64::INFINITY;
        for k in 0..n {
            let (p, pmax) =
                (k..n)
                    .map(|i| (i, a[i * n + k].norm()))
                    .fold((k, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
            min_pivot = min_pivot.min(pmax);
            if pmax == 0.0 {
                continue;
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / pivot;
                a[i * n + k] = f;
                for j in k + 1..n {
                    let t = a[k * n + j];
                    a[i * n + j] -= f * t;
                }
            }
        }
        Lu {
            a,
            perm,
            sign,
            min_pivot,
        }
    }

    pub fn det(&self) -> C64 {
        let lu = self.lu();
        let mut d = c64(lu.sign, 0.0);
        for i in 0..self.n {
            d *= lu.a[i * self.n + i];
        }
        d
    }

    /// True when Gaussian elimination meets a pivot at rounding level
    /// relative to the matrix scale.
    pub fn is_numerically_singular(&self) -> bool {
        let scale = self.max_norm();
        if scale == 0.0 {
            return true;
        }
        let lu = self.lu();
        lu.min_pivot <= scale * f64::EPSILON * (self.n as f64) * 16.0
    }

    pub fn inverse(&self) -> Result<CMatrix> {
        if self.n == 0 || self.is_numerically_singular() {
            return Err(Error::SingularInput);
        }
        let lu = self.lu();
        let n = self.n;
        let mut inv = Self::zeros(n);
        for col in 0..n {
            // forward substitution on P·e_col
            let mut y = vec![C64::new(0.0, 0.0); n];
            for i in 0..n {
                let mut s = if lu.perm[i] == col {
                    c64(1.0, 0.0)
                } else {
                    c64(0.0, 0.0)
                };
                for (j, yj) in y.iter().enumerate().take(i) {
                    s -= lu.a[i * n + j] * yj;
                }
                y[i] = s;
            }
            for i in (0..n).rev() {
                let mut s = y[i];
                for j in i + 1..n {
                    s -= lu.a[i * n + j] * inv[(j, col)];
                }
                inv[(i, col)] = s / lu.a[i * n + i];
            }
        }
        Ok(inv)
    }
}

struct Lu {
    a: Vec<C64>,
    perm: Vec<usize>,
    sign: f64,
    min_pivot: f64,
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        let n = self.n;
        let mut out = CMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.n, rhs.n, "matrix dimension mismatch");
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        self.scale(c64(-1.0, 0.0))
    }
}

/// Max-entry norm of a vector.
pub fn vec_max_norm(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
