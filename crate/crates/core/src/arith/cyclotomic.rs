//! Exact arithmetic in cyclotomic fields `Q(zeta_e)`.
//!
//! A value is stored as its coordinate vector in the power basis
//! `1, zeta, ..., zeta^(phi(e)-1)` after reduction modulo the `e`-th
//! cyclotomic polynomial, so two values of the same order are equal exactly
//! when their coordinate vectors are equal. Values of different orders are
//! compared and combined after lifting both into `Q(zeta_lcm)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n > 0, "euler_phi(0) is undefined");
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn poly_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = poly_cache().read().expect("poisoned cache").get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by every Phi_d with d | n, d < n.
    let mut quotient: Vec<i128> = vec![0; n as usize + 1];
    quotient[0] = -1;
    quotient[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            quotient = exact_monic_division(&quotient, &divisor);
        }
    }
    let coeffs: Vec<i64> = quotient
        .into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect();
    let coeffs = Arc::new(coeffs);
    poly_cache()
        .write()
        .expect("poisoned cache")
        .insert(n, coeffs.clone());
    coeffs
}

fn exact_monic_division(dividend: &[i128], divisor: &[i64]) -> Vec<i128> {
    let dd = divisor.len() - 1;
    let nd = dividend.len() - 1;
    let mut rem = dividend.to_vec();
    let mut quot = vec![0i128; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &b) in divisor.iter().enumerate() {
                rem[k + j] -= c * b as i128;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0), "inexact polynomial division");
    quot
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// An element of the cyclotomic field `Q(zeta_order)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// Builds a value from power-basis coordinates. `coeffs` may have any
    /// length; entry `j` multiplies `zeta^j` and the result is reduced.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let coeffs = reduce(order, coeffs);
        Cyclotomic { order, coeffs }
    }

    /// `sum_j c_j * zeta^(k_j)` for the given `(k_j, c_j)` terms.
    pub fn from_terms<I>(order: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, BigRational)>,
    {
        let mut poly = vec![BigRational::zero(); order as usize];
        for (k, c) in terms {
            let idx = (k % order as u64) as usize;
            poly[idx] += c;
        }
        Cyclotomic::from_coeffs(order, poly)
    }

    pub fn zero(order: u32) -> Self {
        Cyclotomic::from_rational(order, BigRational::zero())
    }

    pub fn one(order: u32) -> Self {
        Cyclotomic::from_rational(order, BigRational::one())
    }

    pub fn from_integer(order: u32, n: impl Into<BigInt>) -> Self {
        Cyclotomic::from_rational(order, BigRational::from_integer(n.into()))
    }

    pub fn from_rational(order: u32, q: BigRational) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        let mut coeffs = vec![BigRational::zero(); euler_phi(order) as usize];
        coeffs[0] = q;
        Cyclotomic { order, coeffs }
    }

    /// `zeta_order^k`.
    pub fn root_of_unity(order: u32, k: i64) -> Self {
        let k = k.rem_euclid(order as i64) as u64;
        Cyclotomic::from_terms(order, [(k, BigRational::one())])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Power-basis coordinates, length `phi(order)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-expresses the value in `Q(zeta_target)`. Panics unless `order`
    /// divides `target`.
    pub fn lift(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "cannot lift order {} into order {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as u64;
        Cyclotomic::from_terms(
            target,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j as u64 * step, c.clone())),
        )
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let l = lcm(a.order, b.order);
        (a.lift(l), b.lift(l))
    }

    /// The Galois automorphism `zeta -> zeta^a`. Panics unless `a` is a unit
    /// modulo the order.
    pub fn galois(&self, a: i64) -> Self {
        let e = self.order as i64;
        let a = a.rem_euclid(e);
        assert!(
            (a as u64).gcd(&(e as u64)) == 1 || e == 1,
            "{a} is not a unit modulo {e}"
        );
        Cyclotomic::from_terms(
            self.order,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| ((j as i64 * a).rem_euclid(e) as u64, c.clone())),
        )
    }

    /// The same number written in the smallest cyclotomic field containing it.
    pub fn reduced(&self) -> Self {
        let e = self.order;
        let units: Vec<u32> = (1..=e).filter(|a| a.gcd(&e) == 1).collect();
        for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
            let fixed = units
                .iter()
                .filter(|&&a| a % d == 1 % d)
                .all(|&a| self.galois(a as i64) == *self);
            if !fixed {
                continue;
            }
            let rows: Vec<Vec<BigRational>> = (0..euler_phi(d) as i64)
                .map(|j| Cyclotomic::root_of_unity(d, j).lift(e).coeffs)
                .collect();
            if let Some(x) = super::matrix::solve_left(&rows, &self.coeffs) {
                return Cyclotomic::from_coeffs(d, x);
            }
        }
        self.clone()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Units modulo the order, i.e. the exponents indexing the Galois group.
    pub fn galois_exponents(order: u32) -> Vec<i64> {
        (1..=order.max(1) as i64)
            .filter(|&a| (a as u64).gcd(&(order as u64)) == 1)
            .collect()
    }

    /// Sum of all Galois conjugates, a rational number.
    pub fn trace(&self) -> BigRational {
        let mut acc = Cyclotomic::zero(self.order);
        for a in Cyclotomic::galois_exponents(self.order) {
            acc = &acc + &self.galois(a);
        }
        acc.to_rational()
            .expect("trace of a cyclotomic is always rational")
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// True when every coordinate is an integer, i.e. the value lies in
    /// `Z[zeta]`.
    pub fn is_algebraic_integer(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Lexicographic comparison of power-basis coordinates in a common field.
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs.cmp(&b.coeffs)
    }

    /// Human-readable form such as `1 + zeta8 - zeta8^3`.
    pub fn pretty(&self) -> String {
        if let Some(q) = self.to_rational() {
            return q.to_string();
        }
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let monomial = match j {
                0 => String::new(),
                1 => format!("zeta{}", self.order),
                _ => format!("zeta{}^{}", self.order, j),
            };
            if monomial.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&format!("{mag}*{monomial}"));
            }
        }
        out
    }
}

/// Reduces an arbitrary-length coefficient vector: exponents are folded
/// modulo `order`, then the polynomial is reduced modulo `Phi_order`.
fn reduce(order: u32, coeffs: Vec<BigRational>) -> Vec<BigRational> {
    let e = order as usize;
    let mut folded = vec![BigRational::zero(); e];
    for (j, c) in coeffs.into_iter().enumerate() {
        if !c.is_zero() {
            folded[j % e] += c;
        }
    }
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    for k in (deg..e).rev() {
        if folded[k].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut folded[k], BigRational::zero());
        for (j, &b) in phi.iter().enumerate().take(deg) {
            if b != 0 {
                folded[k - deg + j] -= &c * BigRational::from_integer(BigInt::from(b));
            }
        }
    }
    folded.truncate(deg);
    folded
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Cyclotomic::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order == rhs.order {
            return Cyclotomic {
                order: self.order,
                coeffs: self
                    .coeffs
                    .iter()
                    .zip(&rhs.coeffs)
                    .map(|(a, b)| a + b)
                    .collect(),
            };
        }
        let (a, b) = Cyclotomic::common(self, rhs);
        &a + &b
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.order != rhs.order {
            let (a, b) = Cyclotomic::common(self, rhs);
            return &a * &b;
        }
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclotomic::from_coeffs(self.order, prod)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Multiplies two cyclotomics, lifting to a common order if needed.
pub fn cyclotomic_mul(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    a * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(order: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(order, k)
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(60), 16);
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).iter().filter(|&&c| c == -2).count(), 2);
    }

    #[test]
    fn cube_roots_sum_to_minus_one() {
        let s = &z(3, 1) + &z(3, 2);
        assert_eq!(s, Cyclotomic::from_integer(1, -1));
        assert_eq!(s.to_integer(), Some(BigInt::from(-1)));
    }

    #[test]
    fn golden_ratio_product() {
        let a = &z(5, 1) + &z(5, 4);
        let b = &z(5, 2) + &z(5, 3);
        assert_eq!(cyclotomic_mul(&a, &b), Cyclotomic::from_integer(5, -1));
    }

    #[test]
    fn sqrt_two_squared() {
        let r2 = &z(8, 1) + &z(8, 7);
        assert_eq!(&r2 * &r2, Cyclotomic::from_integer(8, 2));
        assert_eq!(r2.pretty(), "zeta8 - zeta8^3");
    }

    #[test]
    fn lifting_and_mixed_orders() {
        let i = z(4, 1);
        let w = z(3, 1);
        let prod = &i * &w;
        assert_eq!(prod.order(), 12);
        assert_eq!(prod, z(12, 7));
        assert_eq!(z(4, 2), Cyclotomic::from_integer(1, -1));
    }

    #[test]
    fn conjugation_and_trace() {
        let i = z(4, 1);
        assert_eq!(i.conj(), z(4, 3));
        assert_eq!(z(7, 3).trace(), BigRational::from_integer((-1).into()));
        assert_eq!(Cyclotomic::from_integer(7, 2).trace(), BigRational::from_integer(12.into()));
    }

    #[test]
    fn reduce_to_conductor() {
        let phi = (&z(5, 2) + &z(5, 3)).lift(60);
        let r = phi.reduced();
        assert_eq!(r.order(), 5);
        assert_eq!(r, phi);
        let r2 = (&z(8, 1) + &z(8, 7)).lift(24).reduced();
        assert_eq!(r2.order(), 8);
        assert_eq!(z(12, 4).reduced().order(), 3);
        assert_eq!(Cyclotomic::from_integer(60, 3).reduced().order(), 1);
    }
}
