//! Arbitrary-precision integer matrices and the Smith normal form engine
//! behind canonical forms of finitely presented abelian groups.

use num::bigint::BigInt;
use num::traits::{One, Signed, Zero};
use num::Integer;

/// A dense integer matrix. Rows of length `cols`; `rows` may be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> IntMat {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> IntMat {
        for r in &rows {
            assert_eq!(r.len(), cols, "ragged integer matrix");
        }
        IntMat {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], cols: usize) -> IntMat {
        IntMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = &self.data[i][k] * &other.data[k][j];
                    out.data[i][j] += t;
                }
            }
        }
        out
    }

    pub fn mul_row_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        // v * self for a row vector v of length rows.
        assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                out[j] += vi * &self.data[i][j];
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -std::mem::take(x);
        }
    }

    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() || dst == src {
            return;
        }
        for j in 0..self.cols {
            let t = c * &self.data[src][j];
            self.data[dst][j] += t;
        }
    }

    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() || dst == src {
            return;
        }
        for i in 0..self.rows {
            let t = c * &self.data[i][src];
            self.data[i][dst] += t;
        }
    }

    /// Fraction-free determinant (Bareiss).
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let pivot = (k + 1..n).find(|&i| !m[i][k].is_zero());
                match pivot {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = &num / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

/// Result of Smith normal form: `s = row_ops * input * col_ops`, with both
/// transforms unimodular and `col_ops_inv = col_ops^-1`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMat,
    pub row_ops: IntMat,
    pub col_ops: IntMat,
    pub col_ops_inv: IntMat,
}

impl Snf {
    /// Nonzero diagonal entries (the invariant factors, including any 1s).
    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.s.nrows().min(self.s.ncols());
        (0..n)
            .map(|i| self.s.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }
}

/// Smith normal form with transforms. Pivot selection takes the minimal
/// absolute value nonzero entry, ties broken in row-major order; only the
/// diagonal is canonical, the transforms are not.
pub fn smith_normal_form(m: &IntMat) -> Snf {
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut s = m.clone();
    let mut u = IntMat::identity(nr);
    let mut v = IntMat::identity(nc);
    let mut vinv = IntMat::identity(nc);

    let find_pivot = |s: &IntMat, k: usize| -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in k..nr {
            for j in k..nc {
                let x = s.get(i, j);
                if x.is_zero() {
                    continue;
                }
                match &best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if x.abs() < s.get(*bi, *bj).abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    };

    for k in 0..nr.min(nc) {
        'outer: loop {
            let Some((pi, pj)) = find_pivot(&s, k) else {
                return finish(s, u, v, vinv, nr, nc);
            };
            if pi != k {
                s.swap_rows(k, pi);
                u.swap_rows(k, pi);
            }
            if pj != k {
                s.swap_cols(k, pj);
                v.swap_cols(k, pj);
                vinv.swap_rows(k, pj);
            }
            if s.get(k, k).is_negative() {
                s.negate_row(k);
                u.negate_row(k);
            }
            // Reduce the pivot column and row.
            let mut dirty = false;
            for i in k + 1..nr {
                if !s.get(i, k).is_zero() {
                    let q = -(s.get(i, k) / s.get(k, k));
                    s.add_row_multiple(i, k, &q);
                    u.add_row_multiple(i, k, &q);
                    if !s.get(i, k).is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in k + 1..nc {
                if !s.get(k, j).is_zero() {
                    let q = -(s.get(k, j) / s.get(k, k));
                    s.add_col_multiple(j, k, &q);
                    v.add_col_multiple(j, k, &q);
                    // inverse of col_j += q*col_k is row_k -= q*row_j on vinv
                    let nq = -&q;
                    vinv.add_row_multiple(k, j, &nq);
                    if !s.get(k, j).is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot row/column are clear; enforce divisibility.
            for i in k + 1..nr {
                for j in k + 1..nc {
                    if !s.get(i, j).mod_floor(s.get(k, k)).is_zero() {
                        s.add_row_multiple(k, i, &BigInt::one());
                        u.add_row_multiple(k, i, &BigInt::one());
                        continue 'outer;
                    }
                }
            }
            break;
        }
    }
    finish(s, u, v, vinv, nr, nc)
}

fn finish(mut s: IntMat, mut u: IntMat, v: IntMat, vinv: IntMat, nr: usize, nc: usize) -> Snf {
    for k in 0..nr.min(nc) {
        if s.get(k, k).is_negative() {
            s.negate_row(k);
            u.negate_row(k);
        }
    }
    Snf {
        s,
        row_ops: u,
        col_ops: v,
        col_ops_inv: vinv,
    }
}

/// Basis (as rows) of the left kernel `{ x : x * m = 0 }`.
pub fn left_kernel_basis(m: &IntMat) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.nrows())
        .map(|i| snf.row_ops.row(i).to_vec())
        .collect()
}

/// One integer solution of `x * m = t`, if any.
pub fn solve_left(m: &IntMat, t: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(t.len(), m.ncols());
    let snf = smith_normal_form(m);
    let w = snf.col_ops.mul_row_vec(t);
    let mut z = vec![BigInt::zero(); m.nrows()];
    let k = m.nrows().min(m.ncols());
    for i in 0..m.ncols() {
        if i < k && !snf.s.get(i, i).is_zero() {
            let (q, r) = w[i].div_rem(snf.s.get(i, i));
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        } else if !w[i].is_zero() {
            return None;
        }
    }
    Some(snf.row_ops.mul_row_vec(&z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(entries: &[i64]) -> IntMat {
        let n = entries.len();
        let mut m = IntMat::zero(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, BigInt::from(e));
        }
        m
    }

    fn check_snf(m: &IntMat) -> Snf {
        let snf = smith_normal_form(m);
        // s = u * m * v exactly
        assert_eq!(snf.s, snf.row_ops.mul(m).mul(&snf.col_ops));
        // transforms are unimodular, and the stored inverse is an inverse
        assert_eq!(snf.row_ops.det().abs(), BigInt::one());
        assert_eq!(snf.col_ops.det().abs(), BigInt::one());
        assert_eq!(
            snf.col_ops.mul(&snf.col_ops_inv),
            IntMat::identity(m.ncols())
        );
        // diagonal, nonnegative, divisibility chain
        for i in 0..snf.s.nrows() {
            for j in 0..snf.s.ncols() {
                if i != j {
                    assert!(snf.s.get(i, j).is_zero());
                }
            }
        }
        let d = snf.diagonal();
        for w in d.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero());
        }
        snf
    }

    #[test]
    fn snf_diag_2_3() {
        let snf = check_snf(&diag(&[2, 3]));
        assert_eq!(
            snf.diagonal(),
            vec![BigInt::from(1), BigInt::from(6)]
        );
    }

    #[test]
    fn snf_zero_and_identity() {
        let z = IntMat::zero(2, 3);
        let snf = check_snf(&z);
        assert!(snf.diagonal().is_empty());
        let id = IntMat::identity(4);
        let snf = check_snf(&id);
        assert_eq!(snf.diagonal(), vec![BigInt::one(); 4]);
    }

    #[test]
    fn snf_rectangular() {
        let m = IntMat::from_i64_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]], 3);
        let snf = check_snf(&m);
        assert_eq!(
            snf.diagonal(),
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(156)]
        );
    }

    #[test]
    fn left_kernel() {
        // rows v1=(1), v2=(2): kernel spanned by (2,-1)
        let m = IntMat::from_i64_rows(&[vec![1], vec![2]], 1);
        let basis = left_kernel_basis(&m);
        assert_eq!(basis.len(), 1);
        let k = &basis[0];
        assert!(( &k[0] + &k[1] * BigInt::from(2) ).is_zero());
    }

    #[test]
    fn solve_left_example() {
        let m = IntMat::from_i64_rows(&[vec![2, 0], vec![0, 3]], 2);
        let sol = solve_left(&m, &[BigInt::from(4), BigInt::from(9)]).unwrap();
        assert_eq!(sol, vec![BigInt::from(2), BigInt::from(3)]);
        assert!(solve_left(&m, &[BigInt::from(1), BigInt::from(0)]).is_none());
    }
}
