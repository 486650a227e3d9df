//! Smith and Hermite normal forms, integer kernels, and lattice quotients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{solve_left, IntMatrix};

/// `left * a * right = diag(invariant_factors, 0, ...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub invariant_factors: Vec<BigInt>,
    pub left_transform: IntMatrix,
    pub right_transform: IntMatrix,
    /// Inverse of `right_transform`, tracked alongside it.
    pub right_inverse: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

type Rows = Vec<Vec<BigInt>>;

fn swap_cols(m: &mut Rows, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// `col_dst += q * col_src`
fn add_col(m: &mut Rows, dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let v = &row[src] * q;
        row[dst] += v;
    }
}

/// `row_dst += q * row_src`
fn add_row(m: &mut Rows, dst: usize, src: usize, q: &BigInt) {
    let (d, s) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in d.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x += y * q;
        }
    }
}

struct Snf {
    d: Rows,
    l: Rows,
    r: Rows,
    rinv: Rows,
}

impl Snf {
    fn row_swap(&mut self, a: usize, b: usize) {
        if a != b {
            self.d.swap(a, b);
            self.l.swap(a, b);
        }
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        if a != b {
            swap_cols(&mut self.d, a, b);
            swap_cols(&mut self.r, a, b);
            self.rinv.swap(a, b);
        }
    }

    fn row_add(&mut self, dst: usize, src: usize, q: &BigInt) {
        add_row(&mut self.d, dst, src, q);
        add_row(&mut self.l, dst, src, q);
    }

    fn col_add(&mut self, dst: usize, src: usize, q: &BigInt) {
        add_col(&mut self.d, dst, src, q);
        add_col(&mut self.r, dst, src, q);
        // R' = R E with E = I + q e_src e_dst^T, so R'^{-1} = (I - q e_src e_dst^T) R^{-1}.
        add_row(&mut self.rinv, src, dst, &-q);
    }

    fn row_negate(&mut self, i: usize) {
        for x in self.d[i].iter_mut() {
            *x = -&*x;
        }
        for x in self.l[i].iter_mut() {
            *x = -&*x;
        }
    }
}

fn identity_rows(n: usize) -> Rows {
    IntMatrix::identity(n).to_rows()
}

/// Smith normal form with unimodular transforms.
///
/// The pivot is always the nonzero entry of least absolute value in the
/// remaining block (or in the current pivot row and column while clearing).
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let m = a.rows();
    let n = a.cols();
    let mut s = Snf {
        d: a.to_rows(),
        l: identity_rows(m),
        r: identity_rows(n),
        rinv: identity_rows(n),
    };
    let mut factors = Vec::new();
    for t in 0..m.min(n) {
        // Smallest nonzero entry in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let v = &s.d[i][j];
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < s.d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        s.row_swap(t, bi);
        s.col_swap(t, bj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if s.d[i][t].is_zero() {
                    continue;
                }
                let q = s.d[i][t].div_floor(&s.d[t][t]);
                s.row_add(i, t, &-q);
                dirty |= !s.d[i][t].is_zero();
            }
            for j in t + 1..n {
                if s.d[t][j].is_zero() {
                    continue;
                }
                let q = s.d[t][j].div_floor(&s.d[t][t]);
                s.col_add(j, t, &-q);
                dirty |= !s.d[t][j].is_zero();
            }
            if dirty {
                // Move the smallest remainder in row/column t into the pivot.
                let mut best = (t, t);
                for i in t + 1..m {
                    if !s.d[i][t].is_zero() && s.d[i][t].abs() < s.d[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !s.d[t][j].is_zero() && s.d[t][j].abs() < s.d[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                s.row_swap(t, best.0);
                s.col_swap(t, best.1);
                continue;
            }
            // Divisibility condition on the trailing block.
            let pivot = s.d[t][t].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s.d[i][j].is_multiple_of(&pivot)));
            match offender {
                Some(i) => s.row_add(t, i, &BigInt::one()),
                None => break,
            }
        }
        if s.d[t][t].is_negative() {
            s.row_negate(t);
        }
        factors.push(s.d[t][t].clone());
    }
    SmithDecomposition {
        invariant_factors: factors,
        left_transform: IntMatrix::from_rows(m, &s.l),
        right_transform: IntMatrix::from_rows(n, &s.r),
        right_inverse: IntMatrix::from_rows(n, &s.rinv),
    }
}

/// Row-style Hermite normal form of the row lattice of `a`. Zero rows are
/// dropped, pivots are positive, and entries above a pivot lie in
/// `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let mut h = a.to_rows();
    let rows = h.len();
    let cols = a.cols();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let nz: Vec<usize> = (r..rows).filter(|&i| !h[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let &p = nz.iter().min_by_key(|&&i| h[i][c].abs()).unwrap();
            h.swap(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if !h[i][c].is_zero() {
                    let q = h[i][c].div_floor(&h[r][c]);
                    add_row(&mut h, i, r, &-q);
                    done &= h[i][c].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                add_row(&mut h, i, r, &-q);
            }
        }
        r += 1;
    }
    h.truncate(r);
    IntMatrix::from_rows(cols, &h)
}

/// Basis (rows, in HNF) of `{x in Z^n : c * x = 0}` where `c` is `k x n`.
pub fn integer_kernel(c: &IntMatrix) -> IntMatrix {
    let n = c.cols();
    let snf = smith_normal_form(c);
    let rank = snf.rank();
    let r = &snf.right_transform;
    let rows: Vec<Vec<BigInt>> = (rank..n)
        .map(|j| (0..n).map(|i| r.get(i, j).clone()).collect())
        .collect();
    hermite_normal_form(&IntMatrix::from_rows(n, &rows))
}

/// Intersection of the row lattices of `b1` and `b2` (same ambient rank).
pub fn intersect_lattices(b1: &IntMatrix, b2: &IntMatrix) -> IntMatrix {
    let n = b1.cols();
    assert_eq!(n, b2.cols(), "ambient rank mismatch");
    // y1 B1 = y2 B2  <=>  (y1, y2) [B1; -B2] = 0.
    let mut stacked = b1.clone();
    for i in 0..b2.rows() {
        stacked.push_row(b2.row(i).iter().map(|x| -x).collect());
    }
    if stacked.rows() == 0 {
        return IntMatrix::zeros(0, n);
    }
    let ker = integer_kernel(&stacked.transpose());
    let mut out = IntMatrix::zeros(0, n);
    for k in 0..ker.rows() {
        let y1 = &ker.row(k)[..b1.rows()];
        let mut v = vec![BigInt::zero(); n];
        for (i, yi) in y1.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            for (j, vj) in v.iter_mut().enumerate() {
                *vj += yi * b1.get(i, j);
            }
        }
        out.push_row(v);
    }
    hermite_normal_form(&out)
}

/// Integer solution `y` of `y * basis = v`, if one exists.
pub fn solve_integer(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let a = super::matrix::to_rational(basis);
    let b: Vec<BigRational> = v.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    let y = solve_left(&a, &b)?;
    if y.iter().all(|q| q.is_integer()) {
        let y: Vec<BigInt> = y.into_iter().map(|q| q.to_integer()).collect();
        // Free variables were zeroed; confirm the candidate really solves it.
        let check: Vec<BigInt> = (0..basis.cols())
            .map(|j| y.iter().enumerate().map(|(i, yi)| yi * basis.get(i, j)).sum())
            .collect();
        (check == v).then_some(y)
    } else {
        None
    }
}

/// Reduces `v` modulo a lattice given by its row HNF.
pub fn reduce_modulo(v: &[BigInt], hnf: &IntMatrix) -> Vec<BigInt> {
    let mut v = v.to_vec();
    for i in 0..hnf.rows() {
        let row = hnf.row(i);
        let Some(c) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        let q = v[c].div_floor(&row[c]);
        if !q.is_zero() {
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
    }
    v
}

/// The finitely generated abelian group `Z^n / span(relations)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeQuotient {
    pub ambient_rank: usize,
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// One generator per torsion summand, in ambient coordinates.
    pub torsion_generators: Vec<Vec<BigInt>>,
    /// Generators of a free complement, in ambient coordinates.
    pub free_generators: Vec<Vec<BigInt>>,
}

impl LatticeQuotient {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Factors as machine integers (they are tiny in practice).
    pub fn factors_u64(&self) -> Vec<u64> {
        self.invariant_factors
            .iter()
            .map(|f| u64::try_from(f).expect("invariant factor exceeds u64"))
            .collect()
    }
}

/// Quotient of `Z^ambient_rank` by the row span of `relations`.
pub fn lattice_quotient(ambient_rank: usize, relations: &IntMatrix) -> LatticeQuotient {
    if relations.rows() == 0 {
        return LatticeQuotient {
            ambient_rank,
            free_rank: ambient_rank,
            invariant_factors: vec![],
            torsion_generators: vec![],
            free_generators: IntMatrix::identity(ambient_rank).to_rows(),
        };
    }
    assert_eq!(relations.cols(), ambient_rank, "relation width mismatch");
    let snf = smith_normal_form(relations);
    let hnf = hermite_normal_form(relations);
    let rinv = &snf.right_inverse;
    let mut factors = Vec::new();
    let mut torsion = Vec::new();
    for (i, f) in snf.invariant_factors.iter().enumerate() {
        if !f.is_one() {
            factors.push(f.clone());
            torsion.push(reduce_modulo(rinv.row(i), &hnf));
        }
    }
    let free: Vec<Vec<BigInt>> = (snf.rank()..ambient_rank)
        .map(|i| reduce_modulo(rinv.row(i), &hnf))
        .collect();
    LatticeQuotient {
        ambient_rank,
        free_rank: ambient_rank - snf.rank(),
        invariant_factors: factors,
        torsion_generators: torsion,
        free_generators: free,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(a: &IntMatrix, s: &SmithDecomposition) {
        let d = s.left_transform.mul(a).mul(&s.right_transform);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expect = if i == j && i < s.rank() {
                    s.invariant_factors[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(*d.get(i, j), expect);
            }
        }
        assert_eq!(s.left_transform.determinant().abs(), BigInt::one());
        assert_eq!(s.right_transform.determinant().abs(), BigInt::one());
        assert_eq!(
            s.right_transform.mul(&s.right_inverse),
            IntMatrix::identity(a.cols())
        );
        for w in s.invariant_factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn snf_identity() {
        let a = IntMatrix::identity(2);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, big(&[1, 1]));
        check(&a, &s);
    }

    #[test]
    fn snf_two_by_two() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[6, 8]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, big(&[2, 4]));
        check(&a, &s);
    }

    #[test]
    fn snf_icosahedral_relations() {
        // 2rho2+2rho3, rho4+rho5, 2rho7, 2rho9 in the six-dimensional lattice
        // spanned by rho2, rho3, rho4, rho5, rho7, rho9.
        let a = IntMatrix::from_i64(&[
            &[2, 2, 0, 0, 0, 0],
            &[0, 0, 1, 1, 0, 0],
            &[0, 0, 0, 0, 2, 0],
            &[0, 0, 0, 0, 0, 2],
        ]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, big(&[1, 2, 2, 2]));
        check(&a, &s);
        let q = lattice_quotient(6, &a);
        assert_eq!(q.free_rank, 2);
        assert_eq!(q.factors_u64(), vec![2, 2, 2]);
    }

    #[test]
    fn quotient_torsion_generator() {
        let a = IntMatrix::from_i64(&[
            &[1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 2],
        ]);
        let q = lattice_quotient(5, &a);
        assert_eq!(q.free_rank, 0);
        assert_eq!(q.factors_u64(), vec![2]);
        assert_eq!(q.torsion_generators, vec![big(&[0, 0, 0, 0, 1])]);
    }

    #[test]
    fn quotient_free_part() {
        let a = IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1]]);
        let q = lattice_quotient(3, &a);
        assert_eq!(q.free_rank, 1);
        assert!(q.invariant_factors.is_empty());
        assert_eq!(q.free_generators.len(), 1);
        let full = lattice_quotient(4, &IntMatrix::identity(4));
        assert!(full.is_trivial());
    }

    #[test]
    fn hnf_and_kernel() {
        let a = IntMatrix::from_i64(&[&[3, 3, 1, 4], &[0, 1, 0, 0], &[0, 0, 19, 16], &[0, 0, 0, 3]]);
        let h = hermite_normal_form(&a);
        assert_eq!(
            h,
            IntMatrix::from_i64(&[&[3, 0, 1, 1], &[0, 1, 0, 0], &[0, 0, 19, 1], &[0, 0, 0, 3]])
        );
        let k = integer_kernel(&IntMatrix::from_i64(&[&[0, 1, -1]]));
        assert_eq!(k, IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1]]));
    }

    #[test]
    fn intersection() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        let b = IntMatrix::from_i64(&[&[1, 0], &[0, 3]]);
        assert_eq!(intersect_lattices(&a, &b), IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
    }

    #[test]
    fn integer_solve() {
        let b = IntMatrix::from_i64(&[&[1, 1, 0], &[0, 2, 2]]);
        assert_eq!(solve_integer(&b, &big(&[1, 3, 2])), Some(big(&[1, 1])));
        assert_eq!(solve_integer(&b, &big(&[0, 1, 1])), None);
    }
}
