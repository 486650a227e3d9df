use burnside::arith::{
    hermite_normal_form, lattice_quotient, smith_normal_form, solve_integer, to_rational, triangular_inverse, Cyclotomic, IntMatrix,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn cyclotomic(order: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-5i64..=5, 1i64..=3), order as usize).prop_map(move |cs| {
        let coeffs = cs.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect();
        Cyclotomic::from_coeffs(order, coeffs)
    })
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(prop::collection::vec(-6i64..=6, cols), rows)
        .prop_map(move |r| IntMatrix::from_rows(cols, &r))
}

fn submatrix(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> IntMatrix {
    let r: Vec<Vec<BigInt>> = rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j).clone()).collect()).collect();
    IntMatrix::from_rows(cols.len(), &r)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

/// gcd of all k by k minors.
fn minor_gcd(m: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(m.rows(), k) {
        for cs in subsets(m.cols(), k) {
            g = g.gcd(&submatrix(m, &rs, &cs).determinant());
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in cyclotomic(12), b in cyclotomic(12), c in cyclotomic(12)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(&a * &Cyclotomic::one(12), a.clone());
    }

    #[test]
    fn galois_is_a_ring_map(a in cyclotomic(10), b in cyclotomic(10), k in prop::sample::select(vec![1i64, 3, 7, 9])) {
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
        prop_assert_eq!(a.conj().conj(), a.clone());
    }

    #[test]
    fn lift_and_reduce_preserve_value(a in cyclotomic(6)) {
        let big = a.lift(12);
        prop_assert_eq!(big.order(), 12);
        prop_assert_eq!(&big, &a);
        let r = big.reduced();
        prop_assert_eq!(&r, &a);
        prop_assert!(r.order() <= 6);
    }

    #[test]
    fn smith_form(m in small_matrix(4, 4)) {
        let s = smith_normal_form(&m);
        let d = &s.invariant_factors;
        for w in d.windows(2) {
            prop_assert!(w[0].is_positive());
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert_eq!(s.rank(), m.rank());
        // transforms
        let prod = s.left_transform.mul(&m).mul(&s.right_transform);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j && i < d.len() { d[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(prod.get(i, j), &want);
            }
        }
        prop_assert_eq!(s.right_transform.mul(&s.right_inverse), IntMatrix::identity(4));
        prop_assert!(s.left_transform.determinant().abs().is_one());
        // products of invariant factors are the minor gcds
        let mut acc = BigInt::one();
        for k in 1..=4 {
            let g = minor_gcd(&m, k);
            if k <= d.len() {
                acc *= &d[k - 1];
                prop_assert_eq!(&g, &acc);
            } else {
                prop_assert!(g.is_zero());
            }
        }
    }

    #[test]
    fn quotient_matches_smith(m in small_matrix(3, 4)) {
        let q = lattice_quotient(4, &m);
        let s = smith_normal_form(&m);
        prop_assert_eq!(q.free_rank, 4 - s.rank());
        let nontrivial: Vec<BigInt> = s.invariant_factors.iter().filter(|f| !f.is_one()).cloned().collect();
        prop_assert_eq!(&q.invariant_factors, &nontrivial);
        prop_assert_eq!(q.torsion_generators.len(), nontrivial.len());
        prop_assert_eq!(q.free_generators.len(), q.free_rank);
        // the row span is unchanged by Hermite reduction
        let h = hermite_normal_form(&m);
        let qh = lattice_quotient(4, &h);
        prop_assert_eq!((qh.free_rank, &qh.invariant_factors), (q.free_rank, &q.invariant_factors));
        // each torsion generator has exactly the advertised order
        for (g, d) in q.torsion_generators.iter().zip(&q.invariant_factors) {
            let dg: Vec<BigInt> = g.iter().map(|x| x * d).collect();
            prop_assert!(solve_integer(&h, &dg).is_some());
            let d: u64 = d.try_into().unwrap();
            for e in 1..d {
                let eg: Vec<BigInt> = g.iter().map(|x| x * e).collect();
                prop_assert!(solve_integer(&h, &eg).is_none());
            }
        }
    }

    #[test]
    fn triangular_inverse_is_inverse(
        diag in prop::collection::vec(1i64..=6, 4),
        below in prop::collection::vec(-4i64..=4, 6),
    ) {
        let mut rows = vec![vec![0i64; 4]; 4];
        let mut it = below.into_iter();
        for i in 0..4 {
            rows[i][i] = diag[i];
            for j in 0..i {
                rows[i][j] = it.next().unwrap();
            }
        }
        let m = IntMatrix::from_rows(4, &rows);
        let inv = triangular_inverse(&m).unwrap();
        let mr = to_rational(&m);
        for i in 0..4 {
            for j in 0..4 {
                let mut s = BigRational::zero();
                for k in 0..4 {
                    s += &mr[i][k] * &inv[k][j];
                }
                let want = if i == j { BigRational::one() } else { BigRational::zero() };
                prop_assert_eq!(s, want);
            }
        }
    }
}
