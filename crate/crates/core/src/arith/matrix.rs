//! Dense arbitrary-precision integer and rational matrices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ArithError;

/// Row-major rational matrix.
pub type RatMatrix = Vec<Vec<BigRational>>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have `cols` entries.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Convenience constructor for small literal matrices.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let owned: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        IntMatrix::from_rows(cols, &owned)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    /// Entries as `i64`, if they all fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| i64::try_from(x).ok())
                    .collect::<Option<Vec<_>>>()
            })
            .collect()
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) {
        if self.rows == 0 && self.cols == 0 {
            self.cols = row.len();
        }
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Sub-matrix made of the given rows, in the given order.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = idx.iter().map(|&i| self.row_vec(i)).collect();
        IntMatrix::from_rows(self.cols, &rows)
    }

    /// Applies a simultaneous row and column permutation: `out[a][b] = self[p[a]][p[b]]`.
    pub fn permute_symmetric(&self, p: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zeros(p.len(), p.len());
        for (a, &pa) in p.iter().enumerate() {
            for (b, &pb) in p.iter().enumerate() {
                out.set(a, b, self.get(pa, pb).clone());
            }
        }
        out
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rational_rank(&to_rational(self))
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

pub fn to_rational(m: &IntMatrix) -> RatMatrix {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

fn rational_rank(m: &RatMatrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &pivot;
            for j in c..cols {
                let v = &a[rank][j] * &f;
                a[r][j] -= v;
            }
        }
        rank += 1;
    }
    rank
}

/// Exact inverse of a lower triangular matrix with positive diagonal.
pub fn triangular_inverse(m: &IntMatrix) -> Result<RatMatrix, ArithError> {
    if !m.is_square() {
        return Err(ArithError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_lower_triangular() {
        return Err(ArithError::NotLowerTriangular);
    }
    let n = m.rows();
    if let Some(i) = (0..n).find(|&i| !m.get(i, i).is_positive()) {
        return Err(ArithError::BadDiagonal { index: i });
    }
    let q = |i: usize, j: usize| BigRational::from_integer(m.get(i, j).clone());
    let mut inv = vec![vec![BigRational::zero(); n]; n];
    // Column by column forward substitution.
    for j in 0..n {
        inv[j][j] = BigRational::one() / q(j, j);
        for i in j + 1..n {
            let mut s = BigRational::zero();
            for k in j..i {
                if !m.get(i, k).is_zero() {
                    s += q(i, k) * &inv[k][j];
                }
            }
            inv[i][j] = -s / q(i, i);
        }
    }
    Ok(inv)
}

/// Naive integral upper-triangularisation of a symmetric positive
/// semidefinite matrix.
///
/// For each pivot row `k`, integer multiples of row `k` are subtracted from
/// the rows below it. A zero pivot is allowed only when the rest of its
/// column is zero as well. Zero rows are deleted at the end. Returns
/// `(h_tilde, u_tilde)` with `u_tilde * m == h_tilde`.
pub fn row_reduce_upper(m: &IntMatrix) -> Result<(IntMatrix, IntMatrix), ArithError> {
    if !m.is_square() {
        return Err(ArithError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut h = m.to_rows();
    let mut u = IntMatrix::identity(n).to_rows();
    for k in 0..n {
        let pivot = h[k][k].clone();
        if pivot.is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !h[i][k].is_zero()) {
                return Err(ArithError::ZeroPivot { row: k, blocking_row: i });
            }
            continue;
        }
        for i in k + 1..n {
            if h[i][k].is_zero() {
                continue;
            }
            let (q, r) = h[i][k].div_rem(&pivot);
            if !r.is_zero() {
                return Err(ArithError::NonIntegralMultiplier {
                    row: i,
                    pivot_row: k,
                    numerator: h[i][k].to_string(),
                    denominator: pivot.to_string(),
                });
            }
            for j in 0..n {
                let hv = &q * &h[k][j];
                h[i][j] -= hv;
                let uv = &q * &u[k][j];
                u[i][j] -= uv;
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&i| h[i].iter().any(|x| !x.is_zero())).collect();
    let h_rows: Vec<Vec<BigInt>> = keep.iter().map(|&i| h[i].clone()).collect();
    let u_rows: Vec<Vec<BigInt>> = keep.iter().map(|&i| u[i].clone()).collect();
    Ok((IntMatrix::from_rows(n, &h_rows), IntMatrix::from_rows(n, &u_rows)))
}

/// Solves `x * a = b` over the rationals for a row vector `x`. Returns
/// `None` when the system is inconsistent. When the solution is not unique
/// the free variables are set to zero.
pub fn solve_left(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let r = a.len();
    let c = b.len();
    // Transposed system: a^T x^T = b^T, i.e. c equations in r unknowns.
    let mut aug: Vec<Vec<BigRational>> = (0..c)
        .map(|j| {
            let mut row: Vec<BigRational> = (0..r).map(|i| a[i][j].clone()).collect();
            row.push(b[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..r {
        let Some(p) = (rank..c).find(|&i| !aug[i][col].is_zero()) else {
            continue;
        };
        aug.swap(rank, p);
        let inv = BigRational::one() / &aug[rank][col];
        for v in aug[rank].iter_mut() {
            *v *= &inv;
        }
        for i in 0..c {
            if i != rank && !aug[i][col].is_zero() {
                let f = aug[i][col].clone();
                for j in col..=r {
                    let v = &aug[rank][j] * &f;
                    aug[i][j] -= v;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if aug[rank..].iter().any(|row| !row[r].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); r];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = aug[i][r].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn inverse_identity() {
        let inv = triangular_inverse(&IntMatrix::identity(3)).unwrap();
        for (i, row) in inv.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(*v, if i == j { q(1, 1) } else { q(0, 1) });
            }
        }
    }

    #[test]
    fn inverse_small() {
        let inv = triangular_inverse(&IntMatrix::from_i64(&[&[2, 0], &[1, 1]])).unwrap();
        assert_eq!(inv, vec![vec![q(1, 2), q(0, 1)], vec![q(-1, 2), q(1, 1)]]);
        let m = IntMatrix::from_i64(&[&[4, 0, 0], &[2, 2, 0], &[1, 1, 1]]);
        let inv = triangular_inverse(&m).unwrap();
        assert_eq!(
            inv,
            vec![
                vec![q(1, 4), q(0, 1), q(0, 1)],
                vec![q(-1, 4), q(1, 2), q(0, 1)],
                vec![q(0, 1), q(-1, 2), q(1, 1)],
            ]
        );
    }

    #[test]
    fn inverse_rejects_bad_input() {
        assert!(matches!(
            triangular_inverse(&IntMatrix::from_i64(&[&[1, 1], &[0, 1]])),
            Err(ArithError::NotLowerTriangular)
        ));
        assert!(matches!(
            triangular_inverse(&IntMatrix::from_i64(&[&[1, 0], &[1, 0]])),
            Err(ArithError::BadDiagonal { index: 1 })
        ));
    }

    #[test]
    fn reduce_c3() {
        let m = IntMatrix::from_i64(&[&[3, 1], &[1, 1]]);
        assert!(matches!(
            row_reduce_upper(&m),
            Err(ArithError::NonIntegralMultiplier { .. })
        ));
        let m = IntMatrix::from_i64(&[&[1, 1], &[1, 3]]);
        let (h, u) = row_reduce_upper(&m).unwrap();
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 1], &[0, 2]]));
        assert_eq!(u, IntMatrix::from_i64(&[&[1, 0], &[-1, 1]]));
    }

    #[test]
    fn reduce_q8_drops_zero_row() {
        let m = IntMatrix::from_i64(&[
            &[1, 1, 1, 1, 1, 1],
            &[1, 2, 1, 1, 2, 2],
            &[1, 1, 2, 1, 2, 2],
            &[1, 1, 1, 2, 2, 2],
            &[1, 2, 2, 2, 4, 4],
            &[1, 2, 2, 2, 4, 8],
        ]);
        let (h, u) = row_reduce_upper(&m).unwrap();
        assert_eq!(h.rows(), 5);
        assert_eq!(h.row_vec(4), [0, 0, 0, 0, 0, 4].map(BigInt::from).to_vec());
        assert_eq!(u.mul(&m), h);
    }

    #[test]
    fn reduce_trivial() {
        let m = IntMatrix::from_i64(&[&[1]]);
        assert_eq!(row_reduce_upper(&m).unwrap(), (m.clone(), m));
    }

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        assert_eq!(m.determinant(), BigInt::from(-4));
        assert_eq!(m.rank(), 3);
    }

    #[test]
    fn left_solve() {
        let a = to_rational(&IntMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1]]));
        let b = [q(2, 1), q(5, 1), q(3, 1)];
        assert_eq!(solve_left(&a, &b), Some(vec![q(2, 1), q(3, 1)]));
        assert_eq!(solve_left(&a, &[q(1, 1), q(0, 1), q(1, 1)]), None);
    }
}
