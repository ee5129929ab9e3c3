//! Arbitrary-precision integer matrices with Smith normal form.
//!
//! SNF drives every lattice computation in the crate: kernels, integral
//! solvability, cokernel invariants, and homology of complexes of lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// D = U * M * V with U, V unimodular, D diagonal, d_i | d_{i+1}.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> i64) -> IntMatrix {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = BigInt::from(f(i, j));
            }
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(r, c, |i, j| rows[i][j])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn scale(&self, s: i64) -> IntMatrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    /// Horizontal concatenation [self | other].
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Vertical concatenation [self; other].
    pub fn vcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut out = Self::zero(self.rows + other.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..self.cols {
                out[(self.rows + i, j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> IntMatrix {
        let mut out = Self::zero(self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.data.clone();
        let idx = |i: usize, j: usize| i * n + j;
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[idx(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[idx(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    a.swap(idx(k, j), idx(p, j));
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[idx(i, j)] * &a[idx(k, k)] - &a[idx(i, k)] * &a[idx(k, j)];
                    a[idx(i, j)] = &t / &prev;
                }
                a[idx(i, k)] = BigInt::zero();
            }
            prev = a[idx(k, k)].clone();
        }
        sign * a[idx(n - 1, n - 1)].clone()
    }

    /// Smith normal form with unimodular transforms.
    pub fn snf(&self) -> Snf {
        let mut d = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut v = IntMatrix::identity(self.cols);
        let n = self.rows.min(self.cols);
        let mut t = 0;
        while t < n {
            // find a pivot of least absolute value in the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..self.rows {
                for j in t..self.cols {
                    if !d[(i, j)].is_zero()
                        && pivot.is_none_or(|(pi, pj)| d[(i, j)].abs() < d[(pi, pj)].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = true;
            while dirty {
                dirty = false;
                for i in t + 1..self.rows {
                    if d[(i, t)].is_zero() {
                        continue;
                    }
                    let q = rounded_div(&d[(i, t)], &d[(t, t)]);
                    if !q.is_zero() {
                        d.row_sub(i, t, &q);
                        u.row_sub(i, t, &q);
                    }
                    if !d[(i, t)].is_zero() {
                        // remainder smaller than pivot: swap up and restart
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        dirty = true;
                    }
                }
                for j in t + 1..self.cols {
                    if d[(t, j)].is_zero() {
                        continue;
                    }
                    let q = rounded_div(&d[(t, j)], &d[(t, t)]);
                    if !q.is_zero() {
                        d.col_sub(j, t, &q);
                        v.col_sub(j, t, &q);
                    }
                    if !d[(t, j)].is_zero() {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        dirty = true;
                    }
                }
            }

            // divisibility: pivot must divide every remaining entry
            let mut fixed = true;
            'scan: for i in t + 1..self.rows {
                for j in t + 1..self.cols {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        // fold that row into the pivot row and redo this step
                        d.row_add(t, i);
                        u.row_add(t, i);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                t += 1;
            }
        }
        // normalize signs
        for i in 0..n {
            if d[(i, i)].is_negative() {
                for j in 0..self.cols {
                    let x = -d[(i, j)].clone();
                    d[(i, j)] = x;
                }
                for j in 0..self.rows {
                    let x = -u[(i, j)].clone();
                    u[(i, j)] = x;
                }
            }
        }
        Snf { d, u, v }
    }

    /// Nonzero diagonal entries of the SNF.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let snf = self.snf();
        (0..self.rows.min(self.cols))
            .map(|i| snf.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Basis of the integer kernel (columns are basis vectors; the lattice is
    /// saturated since V is unimodular).
    pub fn kernel(&self) -> IntMatrix {
        let snf = self.snf();
        let r = (0..self.rows.min(self.cols))
            .filter(|&i| !snf.d[(i, i)].is_zero())
            .count();
        let free: Vec<usize> = (r..self.cols).collect();
        snf.v.submatrix_cols(&free)
    }

    /// One integral solution of self * x = b, if any.
    pub fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(b.len(), self.rows);
        let snf = self.snf();
        // D = U M V, M x = b  <=>  D y = U b with x = V y
        let ub: Vec<BigInt> = (0..self.rows)
            .map(|i| (0..self.rows).map(|j| &snf.u[(i, j)] * &b[j]).sum())
            .collect();
        let mut y = vec![BigInt::zero(); self.cols];
        for i in 0..self.rows {
            let di = if i < self.cols { snf.d[(i, i)].clone() } else { BigInt::zero() };
            if di.is_zero() {
                if !ub[i].is_zero() {
                    return None;
                }
            } else {
                let (q, r) = ub[i].div_rem(&di);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
        }
        let x: Vec<BigInt> = (0..self.cols)
            .map(|i| (0..self.cols).map(|j| &snf.v[(i, j)] * &y[j]).sum())
            .collect();
        Some(x)
    }

    /// Solves self * X = B column by column; None if any column fails.
    pub fn solve_matrix(&self, b: &IntMatrix) -> Option<IntMatrix> {
        assert_eq!(b.rows, self.rows);
        let mut out = IntMatrix::zero(self.cols, b.cols);
        for j in 0..b.cols {
            let x = self.solve(&b.column(j))?;
            for i in 0..self.cols {
                out[(i, j)] = x[i].clone();
            }
        }
        Some(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let idx_a = a * self.cols + j;
            let idx_b = b * self.cols + j;
            self.data.swap(idx_a, idx_b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a -= q * row b
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = q * &self[(b, j)];
            self[(a, j)] -= t;
        }
    }

    /// row a += row b
    fn row_add(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            let t = self[(b, j)].clone();
            self[(a, j)] += t;
        }
    }

    /// col a -= q * col b
    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = q * &self[(i, b)];
            self[(i, a)] -= t;
        }
    }
}

/// Division rounded to nearest (ties toward zero), so remainders satisfy
/// |r| <= |d|/2.
fn rounded_div(a: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(d);
    let r2 = r.abs() * 2;
    if r2 > d.abs() {
        if (a.is_negative()) == (d.is_negative()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) {
        let snf = m.snf();
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.d, "U*M*V = D fails");
        assert_eq!(snf.u.det().abs(), BigInt::one(), "U not unimodular");
        assert_eq!(snf.v.det().abs(), BigInt::one(), "V not unimodular");
        let n = m.rows().min(m.cols());
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
        for i in 0..n.saturating_sub(1) {
            let a = &snf.d[(i, i)];
            let b = &snf.d[(i + 1, i + 1)];
            if !a.is_zero() {
                assert!((b % a).is_zero(), "divisibility chain broken");
            } else {
                assert!(b.is_zero());
            }
        }
    }

    #[test]
    fn snf_identity_and_zero() {
        let id = IntMatrix::identity(3);
        check_snf(&id);
        assert_eq!(id.snf().d, id);
        let z = IntMatrix::zero(2, 4);
        check_snf(&z);
        assert!(z.snf().d.is_zero());
    }

    #[test]
    fn snf_reference_case() {
        let m = IntMatrix::from_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        check_snf(&m);
        let inv = m.invariant_factors();
        assert_eq!(inv, vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]);
    }

    #[test]
    fn snf_rectangular_and_torsion() {
        let m = IntMatrix::from_rows(&[&[1, 0, 0, 2], &[0, 3, 0, 0]]);
        check_snf(&m);
        for _ in 0..1 {
            let m2 = IntMatrix::from_rows(&[&[6, 0], &[0, 10], &[0, 0]]);
            check_snf(&m2);
            assert_eq!(m2.invariant_factors(), vec![BigInt::from(2), BigInt::from(30)]);
        }
    }

    #[test]
    fn kernel_and_solve() {
        let m = IntMatrix::from_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).is_zero());
        let b = vec![BigInt::from(6), BigInt::from(12)];
        let x = m.solve(&b).unwrap();
        let mx: Vec<BigInt> = (0..2)
            .map(|i| (0..3).map(|j| &m[(i, j)] * &x[j]).sum())
            .collect();
        assert_eq!(mx, b);
        assert!(m.solve(&[BigInt::from(1), BigInt::from(1)]).is_none());
        // 2x = 3 has no integral solution
        let two = IntMatrix::from_rows(&[&[2]]);
        assert!(two.solve(&[BigInt::from(3)]).is_none());
        assert!(two.solve(&[BigInt::from(4)]).is_some());
    }

    #[test]
    fn det_bareiss() {
        let m = IntMatrix::from_rows(&[&[2, 0, 1], &[1, -3, 2], &[4, 1, 1]]);
        assert_eq!(m.det(), BigInt::from(3));
        let singular = IntMatrix::from_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det(), BigInt::zero());
    }
}
