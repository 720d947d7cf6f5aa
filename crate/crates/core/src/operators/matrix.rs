//! Dense truncations and the operator abstraction used by norm estimates.

use alloc::vec;
use alloc::vec::Vec;

use crate::spectral::FourierSeries;
use crate::{Error, Result, C64};

/// Anything that can act on coefficient vectors together with its adjoint.
pub trait LinearOperator {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    fn apply(&self, x: &[C64]) -> Result<Vec<C64>>;
    fn apply_adjoint(&self, y: &[C64]) -> Result<Vec<C64>>;
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, dim, |j, k| if j == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for j in 0..rows {
            for k in 0..cols {
                data.push(f(j, k));
            }
        }
        Self { rows, cols, data }
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let n = values.len();
        Self::from_fn(n, n, |j, k| if j == k { values[j] } else { C64::new(0.0, 0.0) })
    }

    #[inline]
    pub fn get(&self, j: usize, k: usize) -> C64 {
        self.data[j * self.cols + k]
    }

    pub fn row(&self, j: usize) -> &[C64] {
        &self.data[j * self.cols..(j + 1) * self.cols]
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        check_len(self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for j in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(j, l);
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                let dst = &mut out.data[j * other.cols..(j + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(other.row(l)) {
                    *d += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Largest entrywise deviation on the leading `window × window` block.
    pub fn window_diff(&self, other: &Self, window: usize) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..window.min(self.rows).min(other.rows) {
            for k in 0..window.min(self.cols).min(other.cols) {
                worst = worst.max((self.get(j, k) - other.get(j, k)).norm());
            }
        }
        worst
    }
}

impl LinearOperator for DenseMatrix {
    fn nrows(&self) -> usize {
        self.rows
    }

    fn ncols(&self) -> usize {
        self.cols
    }

    fn apply(&self, x: &[C64]) -> Result<Vec<C64>> {
        check_len(self.cols, x.len())?;
        Ok((0..self.rows).map(|j| self.row(j).iter().zip(x).map(|(a, b)| a * b).sum()).collect())
    }

    fn apply_adjoint(&self, y: &[C64]) -> Result<Vec<C64>> {
        check_len(self.rows, y.len())?;
        let mut out = vec![C64::new(0.0, 0.0); self.cols];
        for (j, yj) in y.iter().enumerate() {
            for (o, a) in out.iter_mut().zip(self.row(j)) {
                *o += a.conj() * yj;
            }
        }
        Ok(out)
    }
}

/// Truncation of `f ↦ P₊(ḡf)`: `M[j,k] = conj(ĝ(k - j))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ToeplitzMatrix {
    symbol: FourierSeries,
    matrix: DenseMatrix,
}

impl ToeplitzMatrix {
    pub fn new(g: &FourierSeries, dim: usize) -> Self {
        let matrix = DenseMatrix::from_fn(dim, dim, |j, k| g.get(k as i64 - j as i64).conj());
        Self { symbol: g.clone(), matrix }
    }

    pub fn symbol(&self) -> &FourierSeries {
        &self.symbol
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }
}

/// Truncation of `f ↦ P₋(φf)` for a general symbol `φ`. Row `j` is the
/// output Fourier index `-(j + 1)`: `H[j,k] = φ̂(-(j + k + 1))`.
#[derive(Clone, Debug, PartialEq)]
pub struct HankelMatrix {
    symbol: FourierSeries,
    matrix: DenseMatrix,
}

impl HankelMatrix {
    /// `H_φ`; only the negative-index coefficients of `φ` enter.
    pub fn of_symbol(phi: &FourierSeries, dim: usize) -> Self {
        let matrix = DenseMatrix::from_fn(dim, dim, |j, k| phi.get(-((j + k + 1) as i64)));
        Self { symbol: phi.clone(), matrix }
    }

    /// `H_m̄`: `H[j,k] = conj(m̂(j + k + 1))`.
    pub fn new(m: &FourierSeries, dim: usize) -> Self {
        let mut h = Self::of_symbol(&m.conj_series(), dim);
        h.symbol = m.clone();
        h
    }

    pub fn symbol(&self) -> &FourierSeries {
        &self.symbol
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }
}

pub fn toeplitz_matrix(g: &FourierSeries, dim: usize) -> ToeplitzMatrix {
    ToeplitzMatrix::new(g, dim)
}

pub fn hankel_matrix(m: &FourierSeries, dim: usize) -> HankelMatrix {
    HankelMatrix::new(m, dim)
}

macro_rules! delegate_operator {
    ($t:ty) => {
        impl LinearOperator for $t {
            fn nrows(&self) -> usize {
                self.matrix.nrows()
            }
            fn ncols(&self) -> usize {
                self.matrix.ncols()
            }
            fn apply(&self, x: &[C64]) -> Result<Vec<C64>> {
                self.matrix.apply(x)
            }
            fn apply_adjoint(&self, y: &[C64]) -> Result<Vec<C64>> {
                self.matrix.apply_adjoint(y)
            }
        }
    };
}

delegate_operator!(ToeplitzMatrix);
delegate_operator!(HankelMatrix);

/// Matrix–vector product.
pub fn apply<A: LinearOperator + ?Sized>(op: &A, x: &[C64]) -> Result<Vec<C64>> {
    op.apply(x)
}

/// `A·B`, applied lazily.
pub struct Product<'a> {
    pub left: &'a dyn LinearOperator,
    pub right: &'a dyn LinearOperator,
}

impl LinearOperator for Product<'_> {
    fn nrows(&self) -> usize {
        self.left.nrows()
    }

    fn ncols(&self) -> usize {
        self.right.ncols()
    }

    fn apply(&self, x: &[C64]) -> Result<Vec<C64>> {
        self.left.apply(&self.right.apply(x)?)
    }

    fn apply_adjoint(&self, y: &[C64]) -> Result<Vec<C64>> {
        self.right.apply_adjoint(&self.left.apply_adjoint(y)?)
    }
}

/// `A*`, applied lazily.
pub struct Adjoint<'a>(pub &'a dyn LinearOperator);

impl LinearOperator for Adjoint<'_> {
    fn nrows(&self) -> usize {
        self.0.ncols()
    }

    fn ncols(&self) -> usize {
        self.0.nrows()
    }

    fn apply(&self, x: &[C64]) -> Result<Vec<C64>> {
        self.0.apply_adjoint(x)
    }

    fn apply_adjoint(&self, y: &[C64]) -> Result<Vec<C64>> {
        self.0.apply(y)
    }
}
