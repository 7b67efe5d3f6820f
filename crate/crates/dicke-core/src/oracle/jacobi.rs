//! Cyclic Jacobi diagonalization of dense symmetric matrices.
//!
//! Deliberately self-contained: the oracle must not share a code path with
//! the closed forms it checks, so no external linear algebra is used. The
//! scheme follows the classic threshold-cyclic formulation (Numerical
//! Recipes 11.1): sweep the strict upper triangle, annihilate each pivot
//! with a plane rotation, accumulate the rotations, stop when the
//! off-diagonal mass underflows to zero.

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> f64 {
        self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.data[row * self.dim + col] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.at(i, i)).sum()
    }
}

const MAX_SWEEPS: usize = 64;

/// Eigenvalues and eigenvectors of a symmetric matrix.
///
/// Returns `(values, vectors)` with `vectors` holding the eigenvector of
/// `values[i]` in column `i`; pairs are unsorted. Only the upper triangle of
/// the input is read.
pub fn jacobi_eigh(input: &SquareMatrix) -> (Vec<f64>, SquareMatrix) {
    let n = input.dim();
    let mut a = input.clone();
    let mut v = SquareMatrix::identity(n);
    let mut d: Vec<f64> = (0..n).map(|i| a.at(i, i)).collect();
    let mut b = d.clone();
    let mut z = vec![0.0; n];

    for sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a.at(p, q).abs();
            }
        }
        if off == 0.0 {
            return (d, v);
        }
        let tresh = if sweep < 3 {
            0.2 * off / (n * n) as f64
        } else {
            0.0
        };
        for p in 0..n.saturating_sub(1) {
            for q in (p + 1)..n {
                let g = 100.0 * a.at(p, q).abs();
                // once rotations are small, pivots drowned out by the
                // diagonal can be zeroed outright
                if sweep > 3 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    a.set(p, q, 0.0);
                } else if a.at(p, q).abs() > tresh {
                    let mut h = d[q] - d[p];
                    let t = if h.abs() + g == h.abs() {
                        a.at(p, q) / h
                    } else {
                        let theta = 0.5 * h / a.at(p, q);
                        let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                        if theta < 0.0 {
                            -t
                        } else {
                            t
                        }
                    };
                    let c = 1.0 / (1.0 + t * t).sqrt();
                    let s = t * c;
                    let tau = s / (1.0 + c);
                    h = t * a.at(p, q);
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a.set(p, q, 0.0);
                    let rot = |m: &mut SquareMatrix, i: usize, j: usize, k: usize, l: usize| {
                        let g = m.at(i, j);
                        let h = m.at(k, l);
                        m.set(i, j, g - s * (h + g * tau));
                        m.set(k, l, h + s * (g - h * tau));
                    };
                    for i in 0..p {
                        rot(&mut a, i, p, i, q);
                    }
                    for i in (p + 1)..q {
                        rot(&mut a, p, i, i, q);
                    }
                    for i in (q + 1)..n {
                        rot(&mut a, p, i, q, i);
                    }
                    for i in 0..n {
                        rot(&mut v, i, p, i, q);
                    }
                }
            }
        }
        for i in 0..n {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    // quadratic convergence makes this unreachable for any sane input; the
    // accumulated estimates are still the best available
    (d, v)
}
