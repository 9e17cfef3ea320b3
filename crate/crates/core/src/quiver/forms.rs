use std::fmt;

use serde::Serialize;

use super::{DimVector, Quiver, QuiverError};
use crate::linalg::{Matrix, Rational};

/// Square integer matrix indexed by vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    pub rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.rows.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.order();
        IntMatrix { rows: (0..n).map(|j| (0..n).map(|i| self.rows[i][j]).collect()).collect() }
    }

    pub fn to_rational(&self) -> Matrix {
        Matrix::from_rows(
            self.rows.iter().map(|r| r.iter().map(|&v| Rational::from_int(v)).collect()).collect(),
        )
    }

    fn from_rational(m: &Matrix) -> Option<IntMatrix> {
        m.to_i64_rows().map(|rows| IntMatrix { rows })
    }

    pub fn inverse(&self) -> Option<IntMatrix> {
        self.to_rational().inverse().as_ref().and_then(IntMatrix::from_rational)
    }

    pub fn determinant(&self) -> i64 {
        // Integer matrices here are tiny and unimodular-ish; go through the
        // rational echelon form.
        let m = self.to_rational();
        let n = self.order();
        if m.rank() < n {
            return 0;
        }
        let mut a = m;
        let mut det = Rational::one();
        for col in 0..n {
            let p = (col..n).find(|&r| !a.get(r, col).is_zero()).expect("full rank");
            if p != col {
                for c in 0..n {
                    let (x, y) = (a.get(col, c).clone(), a.get(p, c).clone());
                    a.set(col, c, y);
                    a.set(p, c, x);
                }
                det = -det;
            }
            let pivot = a.get(col, col).clone();
            det = &det * &pivot;
            for r in col + 1..n {
                let f = a.get(r, col) / &pivot;
                for c in col..n {
                    let v = a.get(r, c) - &(&f * a.get(col, c));
                    a.set(r, c, v);
                }
            }
        }
        det.to_i64().expect("determinant of an integer matrix is an integer")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Quiver {
    /// Entry `(i, j)` counts paths `i -> j`; row `i` is the dimension
    /// vector of the indecomposable projective at `i`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.n();
        IntMatrix {
            rows: (0..n).map(|i| (0..n).map(|j| self.paths_between(i, j).len() as i64).collect()).collect(),
        }
    }

    pub fn projective_dim(&self, i: usize) -> DimVector {
        DimVector((0..self.n()).map(|j| self.paths_between(i, j).len()).collect())
    }

    pub fn injective_dim(&self, i: usize) -> DimVector {
        DimVector((0..self.n()).map(|j| self.paths_between(j, i).len()).collect())
    }

    /// The Coxeter matrix, characterized by `Phi * dim P_i = -dim I_i`.
    pub fn coxeter_matrix(&self) -> IntMatrix {
        let n = self.n();
        let cartan = self.cartan_matrix().to_rational();
        // Columns of `cartan^T` are the dim P_i; columns of `cartan` are the dim I_i.
        let proj_cols = cartan.transpose();
        let inv = proj_cols.inverse().expect("projective dimension vectors form a basis");
        let phi = cartan.mul(&inv).neg();
        let m = IntMatrix::from_rational(&phi).expect("Coxeter matrix of a path algebra is integral");
        debug_assert_eq!(m.order(), n);
        m
    }

    /// Inverse of the Coxeter matrix; computes `dim tau^- M` for
    /// non-injective indecomposables.
    pub fn inverse_coxeter_matrix(&self) -> IntMatrix {
        self.coxeter_matrix().inverse().expect("Coxeter matrix is unimodular")
    }

    /// `<d, e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j`.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> Result<i64, QuiverError> {
        let n = self.n();
        for v in [d, e] {
            if v.len() != n {
                return Err(QuiverError::SizeMismatch { expected: n, got: v.len() });
            }
        }
        let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows().iter().map(|a| d[a.source] * e[a.target]).sum();
        Ok(diag - off)
    }

    pub fn euler_form_dims(&self, d: &DimVector, e: &DimVector) -> Result<i64, QuiverError> {
        self.euler_form(&d.to_i64(), &e.to_i64())
    }

    /// Gram matrix of the Euler form, `<d, e> = d^T E e`; equals the
    /// inverse of the Cartan matrix.
    pub fn euler_matrix(&self) -> IntMatrix {
        let n = self.n();
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        for a in self.arrows() {
            rows[a.source][a.target] -= 1;
        }
        IntMatrix { rows }
    }
}

#[cfg(test)]
mod tests {
    use super::super::presets;

    #[test]
    fn cartan_examples() {
        let a2 = presets::dynkin_a(2);
        assert_eq!(a2.cartan_matrix().rows, vec![vec![1, 0], vec![1, 1]]);
        let empty = crate::quiver::Quiver::new::<&str>("E", &["1", "2", "3"], &[]).unwrap();
        assert_eq!(empty.cartan_matrix().rows, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let w4 = presets::w4();
        assert_eq!(w4.cartan_matrix().rows[2], vec![2, 1, 1, 1]);
    }

    #[test]
    fn coxeter_w4_matches_reference() {
        let phi = presets::w4().coxeter_matrix();
        assert_eq!(
            phi.rows,
            vec![vec![-1, 2, 0, 0], vec![-2, 3, 1, 0], vec![-2, 3, 1, -1], vec![0, 0, 1, -1]]
        );
        assert_eq!(phi.apply(&[0, 0, 1, 0]), vec![0, 1, 1, 1]);
        assert_eq!(phi.apply(&[5, 7, 0, 0])[3], 0);
    }

    #[test]
    fn euler_examples() {
        let a2 = presets::dynkin_a(2);
        assert_eq!(a2.euler_form(&[0, 1], &[1, 0]).unwrap(), -1);
        assert_eq!(a2.euler_form(&[3, 4], &[0, 0]).unwrap(), 0);
        let k = presets::kronecker();
        assert_eq!(k.euler_form(&[1, 1], &[1, 1]).unwrap(), 0);
        assert!(k.euler_form(&[1], &[1, 1]).is_err());
    }

    #[test]
    fn euler_matrix_is_cartan_inverse() {
        for q in [presets::dynkin_d(5), presets::w4(), presets::dynkin_e(6)] {
            let inv = q.cartan_matrix().inverse().unwrap();
            assert_eq!(inv, q.euler_matrix(), "{}", q.name());
        }
    }
}
