//! Dense column-major LU with partial pivoting for the tiny systems the
//! ellipse solver assembles (dimension at most a few hundred).

use alloc::vec;
use alloc::vec::Vec;


/// Column-major dense matrix.
#[derive(Clone, Debug)]
pub(crate) struct DenseMatrix {
    pub n: usize,
    /// entry (i, j) at `data[i + j*n]`
    pub data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![0.0; n * n] }
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i + j * self.n] = v;
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i + j * self.n]
    }

    /// Maximum absolute column sum.
    pub fn norm1(&self) -> f64 {
        let mut best = 0.0f64;
        for j in 0..self.n {
            let col: f64 = (0..self.n).map(|i| self.get(i, j).abs()).sum();
            best = best.max(col);
        }
        best
    }
}

pub(crate) struct LuFactors {
    n: usize,
    lu: Vec<f64>,
    pivots: Vec<usize>,
}

/// Factors `A = P·L·U` in place with partial pivoting. Returns `None` when a
/// pivot vanishes exactly.
pub(crate) fn lu_factor(a: &DenseMatrix) -> Option<LuFactors> {
    let n = a.n;
    let mut lu = a.data.clone();
    let mut pivots = vec![0usize; n];
    for k in 0..n {
        let mut p = k;
        let mut best = lu[k + k * n].abs();
        for i in (k + 1)..n {
            let v = lu[i + k * n].abs();
            if v > best {
                best = v;
                p = i;
            }
        }
        if best == 0.0 {
            return None;
        }
        pivots[k] = p;
        if p != k {
            for j in 0..n {
                lu.swap(k + j * n, p + j * n);
            }
        }
        let diag = lu[k + k * n];
        for i in (k + 1)..n {
            let factor = lu[i + k * n] / diag;
            lu[i + k * n] = factor;
            for j in (k + 1)..n {
                lu[i + j * n] -= factor * lu[k + j * n];
            }
        }
    }
    Some(LuFactors { n, lu, pivots })
}

impl LuFactors {
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut x = b.to_vec();
        // apply all row interchanges before the triangular solves
        for k in 0..n {
            x.swap(k, self.pivots[k]);
        }
        for k in 0..n {
            for i in (k + 1)..n {
                let f = self.lu[i + k * n];
                x[i] -= f * x[k];
            }
        }
        for k in (0..n).rev() {
            x[k] /= self.lu[k + k * n];
            for i in 0..k {
                let f = self.lu[i + k * n];
                x[i] -= f * x[k];
            }
        }
        x
    }

    /// 1-norm of the inverse, formed column by column. Cheap at these sizes
    /// and gives `cond₁ = ‖A‖₁·‖A⁻¹‖₁` exactly rather than an estimate.
    pub fn inverse_norm1(&self) -> f64 {
        let n = self.n;
        let mut best = 0.0f64;
        let mut e = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            let col = self.solve(&e);
            e[j] = 0.0;
            let sum: f64 = col.iter().map(|v| v.abs()).sum();
            best = best.max(sum);
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_a_small_system() {
        let mut a = DenseMatrix::zeros(3);
        let rows = [[2.0, 1.0, -1.0], [-3.0, -1.0, 2.0], [-2.0, 1.0, 2.0]];
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                a.set(i, j, *v);
            }
        }
        let lu = lu_factor(&a).unwrap();
        let x = lu.solve(&[8.0, -11.0, -3.0]);
        let expect = [2.0, 3.0, -1.0];
        for (xi, ei) in x.iter().zip(expect.iter()) {
            assert!((xi - ei).abs() < 1e-12, "{x:?}");
        }
    }

    #[test]
    fn singular_matrix_is_detected() {
        let mut a = DenseMatrix::zeros(2);
        a.set(0, 0, 1.0);
        a.set(0, 1, 2.0);
        a.set(1, 0, 2.0);
        a.set(1, 1, 4.0);
        assert!(lu_factor(&a).is_none());
    }

    #[test]
    fn condition_of_identity_is_one() {
        let mut a = DenseMatrix::zeros(4);
        for i in 0..4 {
            a.set(i, i, 1.0);
        }
        let lu = lu_factor(&a).unwrap();
        assert!((a.norm1() * lu.inverse_norm1() - 1.0).abs() < 1e-15);
    }
}
