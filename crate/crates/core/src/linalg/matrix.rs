use std::fmt;

use super::Rational;

/// Dense row-major matrix over the rationals. Zero-row and zero-column
/// shapes are valid.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Outcome of `Matrix::solve`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// A particular solution (free variables set to zero).
    Consistent(Vec<Rational>),
    Inconsistent,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Builds from integer rows. `cols` is needed to express `0 x n`.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, data: entries.iter().map(|&v| Rational::from_int(v)).collect() }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn column_vector(values: Vec<Rational>) -> Self {
        Matrix { rows: values.len(), cols: 1, data: values }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = &out.data[i * other.cols + j] + &(a * b);
                    out.data[i * other.cols + j] = cur;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    /// Horizontal concatenation; all blocks need the same row count.
    pub fn hstack(rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.set_block(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Vertical concatenation; all blocks need the same column count.
    pub fn vstack(cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Matrix::zeros(rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            out.set_block(off, 0, b);
            off += b.rows;
        }
        out
    }

    pub fn block_diagonal(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "block out of range");
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                out.set(r, c, self.get(r0 + r, c0 + c).clone());
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Gauss-Jordan reduction to reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            if !inv.is_one() {
                for c in col..m.cols {
                    let v = m.get(row, c) * &inv;
                    m.set(row, c, v);
                }
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pv = m.get(row, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &(&factor * pv);
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.echelon().pivots.len()
    }

    /// Columns spanning the null space, one per free column of the
    /// echelon form. Integer inputs yield columns scaled to coprime
    /// integers.
    pub fn kernel_basis(&self) -> Matrix {
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut columns = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (i, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.reduced.get(i, f);
            }
            columns.push(clear_denominators(v));
        }
        Matrix::from_columns(self.cols, &columns)
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Surjection `q` with `q * self = 0` whose rows span the left null
    /// space, i.e. the projection onto the cokernel.
    pub fn cokernel_projection(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// Solves `self * x = b`.
    pub fn solve(&self, b: &[Rational]) -> Solution {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = Matrix::hstack(self.rows, &[self, &Matrix::column_vector(b.to_vec())]);
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return Solution::Inconsistent;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced.get(i, self.cols).clone();
        }
        Solution::Consistent(x)
    }

    /// Solves `self * X = rhs` column by column; `None` if any column is
    /// inconsistent.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(rhs.rows, self.rows);
        let aug = Matrix::hstack(self.rows, &[self, rhs]);
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (i, &p) in ech.pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, ech.reduced.get(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let x = self.solve_matrix(&Matrix::identity(n))?;
        if self.rank() == n { Some(x) } else { None }
    }

    /// Indices of columns forming a basis of the column space, chosen
    /// greedily from the left.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.echelon().pivots
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(Rational::to_i64).collect::<Option<Vec<_>>>())
            .collect()
    }
}

/// Rescales a vector so that integer-only vectors become primitive; vectors
/// with fractional entries are multiplied by the common denominator.
fn clear_denominators(v: Vec<Rational>) -> Vec<Rational> {
    if let Some(fast) = clear_denominators_small(&v) {
        return fast;
    }
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let mut lcm = num_bigint::BigInt::one();
    let mut gcd = num_bigint::BigInt::zero();
    for x in &v {
        let b = x.to_big();
        lcm = lcm.lcm(b.denom());
    }
    let scaled: Vec<_> = v.iter().map(|x| x.to_big() * num_rational::BigRational::from_integer(lcm.clone())).collect();
    for s in &scaled {
        gcd = gcd.gcd(s.numer());
    }
    if gcd.is_zero() {
        return v;
    }
    let gcd = gcd.abs();
    scaled
        .into_iter()
        .map(|s| {
            let q = s.numer() / &gcd;
            match num_traits::ToPrimitive::to_i64(&q) {
                Some(i) => Rational::from_int(i),
                None => Rational::Big(num_rational::BigRational::from_integer(q)),
            }
        })
        .collect()
}

fn clear_denominators_small(v: &[Rational]) -> Option<Vec<Rational>> {
    use num_integer::Integer;
    let mut lcm: i64 = 1;
    for x in v {
        let Rational::Small(r) = x else { return None };
        let d = *r.denom();
        lcm = lcm.checked_mul(d / lcm.gcd(&d))?;
    }
    let mut scaled = Vec::with_capacity(v.len());
    let mut gcd: i64 = 0;
    for x in v {
        let Rational::Small(r) = x else { return None };
        let s = r.numer().checked_mul(lcm / r.denom())?;
        gcd = gcd.gcd(&s);
        scaled.push(s);
    }
    if gcd == 0 {
        return Some(v.to_vec());
    }
    Some(scaled.into_iter().map(|s| Rational::from_int(s / gcd)).collect())
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
        assert_eq!(Matrix::from_ints(2, 2, &[1, 2, 2, 4]).rank(), 1);
        assert_eq!(Matrix::zeros(0, 5).rank(), 0);
        assert_eq!(Matrix::zeros(5, 0).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(3).kernel_basis().cols(), 0);
        let k = Matrix::zeros(2, 3).kernel_basis();
        assert_eq!(k.shape(), (3, 3));
        assert_eq!(k.rank(), 3);
        let k = Matrix::from_ints(1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k.shape(), (2, 1));
        assert_eq!(k.get(0, 0), &-k.get(1, 0));
        assert!(!k.get(0, 0).is_zero());
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q(-1), q(7)];
        assert_eq!(Matrix::identity(3).solve(&b), Solution::Consistent(b.clone()));
        match Matrix::from_ints(1, 2, &[1, 1]).solve(&[q(0)]) {
            Solution::Consistent(x) => assert!(x.iter().all(Rational::is_zero)),
            Solution::Inconsistent => panic!("consistent system"),
        }
        assert_eq!(Matrix::from_ints(2, 1, &[1, 1]).solve(&[q(1), q(2)]), Solution::Inconsistent);
    }

    #[test]
    fn cokernel_examples() {
        let zero = Matrix::zeros(3, 2);
        let c = zero.cokernel_projection();
        assert_eq!(c.shape(), (3, 3));
        assert_eq!(c.rank(), 3);
        let surj = Matrix::from_ints(2, 3, &[1, 0, 2, 0, 1, 1]);
        assert_eq!(surj.cokernel_projection().rows(), 0);
        let m = Matrix::from_ints(2, 1, &[1, 0]);
        let c = m.cokernel_projection();
        assert_eq!(c, Matrix::from_ints(1, 2, &[0, 1]));
        assert!(c.mul(&m).is_zero());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_ints(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(3));
        assert!(Matrix::from_ints(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }
}
