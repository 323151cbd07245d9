//! Dense row-major complex matrix, just enough linear algebra for the
//! assembly and factorization kernels.

use crate::cx::Cx;
use crate::scalar::Real;

#[derive(Clone, Debug)]
pub struct Mat<R> {
    rows: usize,
    cols: usize,
    data: Vec<Cx<R>>,
}

impl<R: Real> Mat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Cx::zero(); rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cx<R>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { Cx::one() } else { Cx::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Cx<R> {
        &self.data[i * self.cols + j]
    }
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Cx<R> {
        &mut self.data[i * self.cols + j]
    }

    pub fn col(&self, j: usize) -> Vec<Cx<R>> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn set_col(&mut self, j: usize, v: &[Cx<R>]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            *self.at_mut(i, j) = v[i].clone();
        }
    }

    /// A * x
    pub fn mat_vec(&self, x: &[Cx<R>]) -> Vec<Cx<R>> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Cx::zero();
                for j in 0..self.cols {
                    acc.mul_acc(self.at(i, j), &x[j]);
                }
                acc
            })
            .collect()
    }

    /// A^* x (conjugate transpose times vector)
    pub fn conj_t_vec(&self, x: &[Cx<R>]) -> Vec<Cx<R>> {
        assert_eq!(x.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = Cx::zero();
                for i in 0..self.rows {
                    acc.conj_mul_acc(self.at(i, j), &x[i]);
                }
                acc
            })
            .collect()
    }

    /// A * B
    pub fn mul(&self, other: &Mat<R>) -> Mat<R> {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k).clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.at_mut(i, j).mul_acc(&a, other.at(k, j));
                }
            }
        }
        out
    }

    /// A^* B
    pub fn conj_t_mul(&self, other: &Mat<R>) -> Mat<R> {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.cols, other.cols);
        for k in 0..self.rows {
            for i in 0..self.cols {
                let a = self.at(k, i).conj();
                for j in 0..other.cols {
                    out.at_mut(i, j).mul_acc(&a, other.at(k, j));
                }
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Mat<R> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    /// x^* A y quadratic/sesquilinear form.
    pub fn form(&self, x: &[Cx<R>], y: &[Cx<R>]) -> Cx<R> {
        let ay = self.mat_vec(y);
        let mut acc = Cx::zero();
        for i in 0..self.rows {
            acc.conj_mul_acc(&x[i], &ay[i]);
        }
        acc
    }

    pub fn max_abs(&self) -> R {
        let mut m = R::zero();
        for v in &self.data {
            let a = v.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn to_f64(&self) -> Mat<f64> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.to_f64()).collect(),
        }
    }

    /// Largest |A - B| entry; panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Mat<R>) -> R {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut m = R::zero();
        for (a, b) in self.data.iter().zip(&other.data) {
            let d = (a.clone() - b.clone()).abs();
            if d > m {
                m = d;
            }
        }
        m
    }
}
