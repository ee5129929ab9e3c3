//! Dense matrices over the base field: exact elimination, kernels, a typed
//! solve outcome, and division-free characteristic polynomials.

use crate::poly::UniPoly;
use crate::scalar::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of an exact linear solve: a particular solution or a proof of
/// inconsistency. Underdetermined systems report one solution; the kernel
/// carries the rest.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LinearSolve {
    Solution(Vec<Scalar>),
    Inconsistent,
}

impl FMatrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> FMatrix {
        FMatrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> FMatrix {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> FMatrix {
        let mut m = Self::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_columns(field: Field, cols: &[Vec<Scalar>]) -> FMatrix {
        let rows = cols.first().map_or(0, Vec::len);
        Self::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = &out[(i, j)] + &(a * &other[(k, j)]);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    acc = &acc + &(&self[(i, j)] * &v[j]);
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> FMatrix {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn sub(&self, other: &FMatrix) -> FMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        Self::from_fn(self.field, self.rows, self.cols, |i, j| {
            &self[(i, j)] - &other[(i, j)]
        })
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv().unwrap();
            for j in c..self.cols {
                self[(r, j)] = &self[(r, j)] * &inv;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        self[(i, j)] = &self[(i, j)] - &(&f * &self[(r, j)]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Exact particular solution of self * x = b.
    pub fn solve(&self, b: &[Scalar]) -> LinearSolve {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return LinearSolve::Inconsistent;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        LinearSolve::Solution(x)
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[(r, free)];
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut det = self.field.one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return self.field.zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -&det;
            }
            det = &det * &m[(c, c)];
            let inv = m[(c, c)].inv().unwrap();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    m[(i, j)] = &m[(i, j)] - &(&f * &m[(c, j)]);
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<FMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = self.field.one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
            return None;
        }
        Some(Self::from_fn(self.field, n, n, |i, j| aug[(i, n + j)].clone()))
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = &acc + &self[(i, i)];
        }
        acc
    }

    /// Monic characteristic polynomial det(xI - M) by the Berkowitz
    /// division-free scheme.
    pub fn charpoly(&self) -> UniPoly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let field = self.field;
        if n == 0 {
            return UniPoly::one(field);
        }
        // c holds the coefficients of the charpoly of the leading principal
        // r x r block, highest degree first, length r+1.
        let mut c = vec![field.one(), -&self[(0, 0)]];
        for r in 1..n {
            // s_i = Row * M^i * Col for the bordering row/column
            let row: Vec<Scalar> = (0..r).map(|j| self[(r, j)].clone()).collect();
            let col: Vec<Scalar> = (0..r).map(|i| self[(i, r)].clone()).collect();
            let mut mp = col.clone();
            let mut s = Vec::with_capacity(r);
            // s[0] = row . col
            let dot = |a: &[Scalar], b: &[Scalar]| {
                let mut acc = field.zero();
                for (x, y) in a.iter().zip(b) {
                    acc = &acc + &(x * y);
                }
                acc
            };
            s.push(dot(&row, &mp));
            for _ in 1..r {
                let mut next = vec![field.zero(); r];
                for i in 0..r {
                    for k in 0..r {
                        if !self[(i, k)].is_zero() {
                            next[i] = &next[i] + &(&self[(i, k)] * &mp[k]);
                        }
                    }
                }
                mp = next;
                s.push(dot(&row, &mp));
            }
            // Toeplitz column: [1, -a_rr, -s_0, -s_1, ...]
            let mut t = Vec::with_capacity(r + 2);
            t.push(field.one());
            t.push(-&self[(r, r)]);
            for v in &s {
                t.push(-v);
            }
            // new coefficients: c_new[k] = sum_j t[k - j] * c[j]
            let mut c_new = vec![field.zero(); r + 2];
            for (k, item) in c_new.iter_mut().enumerate() {
                for (j, cj) in c.iter().enumerate() {
                    if k >= j && k - j < t.len() {
                        *item = &*item + &(&t[k - j] * cj);
                    }
                }
            }
            c = c_new;
        }
        c.reverse();
        UniPoly::from_coeffs(field, c)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for FMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for FMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m(field: Field, rows: &[&[i64]]) -> FMatrix {
        FMatrix::from_fn(field, rows.len(), rows[0].len(), |i, j| {
            field.from_i64(rows[i][j])
        })
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let id = FMatrix::identity(Field::Q, 3);
        let b = vec![rat(1, 2), rat(-3, 1), rat(0, 1)];
        assert_eq!(id.solve(&b), LinearSolve::Solution(b.clone()));
        let zero = FMatrix::zero(Field::Q, 2, 2);
        assert_eq!(
            zero.solve(&[Field::Q.one(), Field::Q.zero()]),
            LinearSolve::Inconsistent
        );
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(Field::Q, &[&[1, 2, 3], &[2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn det_and_inverse() {
        let a = m(Field::Q, &[&[2, 1], &[5, 3]]);
        assert_eq!(a.det(), Field::Q.one());
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), FMatrix::identity(Field::Q, 2));
        let f7 = Field::prime(7).unwrap();
        let b = m(f7, &[&[3, 1], &[2, 5]]);
        let binv = b.inverse().unwrap();
        assert_eq!(b.mul(&binv), FMatrix::identity(f7, 2));
    }

    #[test]
    fn charpoly_diagonal() {
        let a = m(Field::Q, &[&[2, 0], &[0, 3]]);
        // (x-2)(x-3)
        assert_eq!(a.charpoly(), UniPoly::from_i64(Field::Q, &[6, -5, 1]));
    }

    #[test]
    fn charpoly_single_entry() {
        let a = m(Field::Q, &[&[-4]]);
        assert_eq!(a.charpoly(), UniPoly::from_i64(Field::Q, &[4, 1]));
    }

    #[test]
    fn charpoly_companion_of_quartic() {
        // companion matrix of x^4 + x + 1 is the multiplication-by-x matrix
        // in the quotient ring
        let f = Field::Q;
        let mut a = FMatrix::zero(f, 4, 4);
        for i in 1..4 {
            a[(i, i - 1)] = f.one();
        }
        a[(0, 3)] = f.from_i64(-1);
        a[(1, 3)] = f.from_i64(-1);
        assert_eq!(a.charpoly(), UniPoly::from_i64(f, &[1, 1, 0, 0, 1]));
    }

    #[test]
    fn charpoly_constant_term_is_det() {
        let a = m(Field::Q, &[&[2, 0, 1], &[1, -3, 2], &[4, 1, 1]]);
        let cp = a.charpoly();
        // det = (-1)^n * cp(0)
        assert_eq!(-&cp.coeff(0), a.det());
        assert_eq!(a.det(), Field::Q.from_i64(3));
        // next-to-leading coefficient is -trace
        assert_eq!(cp.coeff(2), -&a.trace());
        let f5 = Field::prime(5).unwrap();
        let b = m(f5, &[&[2, 0, 1], &[1, 3, 2], &[4, 1, 1]]);
        let cpb = b.charpoly();
        assert_eq!(-&cpb.coeff(0), b.det());
    }
}
