//! Concrete element domains in which groups are realised.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::arith::Cyclotomic;

/// The ambient domain shared by a set of generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Permutation { degree: usize },
    MatrixModP { p: u32, dim: usize },
    MatrixCyclotomic { order: u32, dim: usize },
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Permutation { degree } => write!(f, "permutation {degree}"),
            Domain::MatrixModP { p, dim } => write!(f, "gf {p} {dim}"),
            Domain::MatrixCyclotomic { order, dim } => write!(f, "cyclotomic {order} {dim}"),
        }
    }
}

/// A single group element.
///
/// Composition is left-to-right function application for permutations,
/// `(a * b)(x) = a(b(x))`, and the usual matrix product otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DomainElement {
    Permutation(Vec<u32>),
    MatrixModP {
        p: u32,
        dim: usize,
        entries: Vec<u32>,
    },
    /// All entries are stored in `Q(zeta_order)` so that coordinate vectors
    /// can be hashed directly.
    MatrixCyclotomic {
        order: u32,
        dim: usize,
        entries: Vec<Cyclotomic>,
    },
}

impl Hash for DomainElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            DomainElement::Permutation(images) => {
                0u8.hash(state);
                images.hash(state);
            }
            DomainElement::MatrixModP { p, dim, entries } => {
                1u8.hash(state);
                p.hash(state);
                dim.hash(state);
                entries.hash(state);
            }
            DomainElement::MatrixCyclotomic { order, dim, entries } => {
                2u8.hash(state);
                order.hash(state);
                dim.hash(state);
                for e in entries {
                    e.coeffs().hash(state);
                }
            }
        }
    }
}

impl DomainElement {
    pub fn permutation(images: Vec<u32>) -> Self {
        DomainElement::Permutation(images)
    }

    /// Builds a matrix over `F_p` from signed row-major entries.
    pub fn matrix_mod_p(p: u32, rows: &[&[i64]]) -> Self {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), dim, "matrix must be square");
                r.iter().map(move |&x| x.rem_euclid(p as i64) as u32)
            })
            .collect();
        DomainElement::MatrixModP { p, dim, entries }
    }

    /// Builds a cyclotomic matrix; every entry is lifted to `order`.
    pub fn matrix_cyclotomic(order: u32, dim: usize, entries: Vec<Cyclotomic>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix must be square");
        let entries = entries.into_iter().map(|e| e.lift(order)).collect();
        DomainElement::MatrixCyclotomic {
            order,
            dim,
            entries,
        }
    }

    pub fn domain(&self) -> Domain {
        match self {
            DomainElement::Permutation(images) => Domain::Permutation {
                degree: images.len(),
            },
            DomainElement::MatrixModP { p, dim, .. } => Domain::MatrixModP { p: *p, dim: *dim },
            DomainElement::MatrixCyclotomic { order, dim, .. } => Domain::MatrixCyclotomic {
                order: *order,
                dim: *dim,
            },
        }
    }

    pub fn identity(domain: Domain) -> Self {
        match domain {
            Domain::Permutation { degree } => {
                DomainElement::Permutation((0..degree as u32).collect())
            }
            Domain::MatrixModP { p, dim } => DomainElement::MatrixModP {
                p,
                dim,
                entries: (0..dim * dim)
                    .map(|k| u32::from(k / dim == k % dim))
                    .collect(),
            },
            Domain::MatrixCyclotomic { order, dim } => DomainElement::MatrixCyclotomic {
                order,
                dim,
                entries: (0..dim * dim)
                    .map(|k| Cyclotomic::from_integer(order, i64::from(k / dim == k % dim)))
                    .collect(),
            },
        }
    }

    /// Product `self * other`. Both operands must live in the same domain.
    pub fn compose(&self, other: &Self) -> Self {
        match (self, other) {
            (DomainElement::Permutation(a), DomainElement::Permutation(b)) => {
                DomainElement::Permutation(b.iter().map(|&x| a[x as usize]).collect())
            }
            (
                DomainElement::MatrixModP { p, dim, entries: a },
                DomainElement::MatrixModP { entries: b, .. },
            ) => {
                let n = *dim;
                let p64 = *p as u64;
                let mut out = vec![0u32; n * n];
                for i in 0..n {
                    for j in 0..n {
                        let s: u64 = (0..n)
                            .map(|k| a[i * n + k] as u64 * b[k * n + j] as u64)
                            .sum();
                        out[i * n + j] = (s % p64) as u32;
                    }
                }
                DomainElement::MatrixModP {
                    p: *p,
                    dim: n,
                    entries: out,
                }
            }
            (
                DomainElement::MatrixCyclotomic {
                    order,
                    dim,
                    entries: a,
                },
                DomainElement::MatrixCyclotomic { entries: b, .. },
            ) => {
                let n = *dim;
                let mut out = Vec::with_capacity(n * n);
                for i in 0..n {
                    for j in 0..n {
                        let mut s = Cyclotomic::zero(*order);
                        for k in 0..n {
                            let (x, y) = (&a[i * n + k], &b[k * n + j]);
                            if !x.is_zero() && !y.is_zero() {
                                s = &s + &(x * y);
                            }
                        }
                        out.push(s);
                    }
                }
                DomainElement::MatrixCyclotomic {
                    order: *order,
                    dim: n,
                    entries: out,
                }
            }
            _ => panic!("composition across different element domains"),
        }
    }

    /// Whether the element is a bijection / has nonzero determinant.
    pub fn is_invertible(&self) -> bool {
        match self {
            DomainElement::Permutation(images) => {
                let n = images.len();
                let mut seen = vec![false; n];
                images.iter().all(|&x| {
                    let x = x as usize;
                    x < n && !std::mem::replace(&mut seen[x], true)
                })
            }
            DomainElement::MatrixModP { p, dim, entries } => det_mod_p(*p, *dim, entries) != 0,
            DomainElement::MatrixCyclotomic { dim, entries, .. } => {
                !det_cyclotomic(*dim, entries).is_zero()
            }
        }
    }

    /// Matrix trace, when the domain is a matrix domain.
    pub fn trace(&self) -> Option<Cyclotomic> {
        match self {
            DomainElement::Permutation(_) => None,
            DomainElement::MatrixModP { p, dim, entries } => {
                let t: u64 = (0..*dim).map(|i| entries[i * dim + i] as u64).sum();
                Some(Cyclotomic::from_integer(1, (t % *p as u64) as i64))
            }
            DomainElement::MatrixCyclotomic { order, dim, entries } => {
                let mut t = Cyclotomic::zero(*order);
                for i in 0..*dim {
                    t = &t + &entries[i * dim + i];
                }
                Some(t)
            }
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn det_mod_p(p: u32, n: usize, entries: &[u32]) -> u64 {
    let p = p as u64;
    let mut a: Vec<u64> = entries.iter().map(|&x| x as u64 % p).collect();
    let mut det = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| a[r * n + c] != 0) else {
            return 0;
        };
        if r != c {
            for j in 0..n {
                a.swap(r * n + j, c * n + j);
            }
            det = (p - det) % p;
        }
        let piv = a[c * n + c];
        det = det * piv % p;
        let inv = pow_mod(piv, p - 2, p);
        for r in c + 1..n {
            let f = a[r * n + c] * inv % p;
            if f == 0 {
                continue;
            }
            for j in c..n {
                a[r * n + j] = (a[r * n + j] + p * p - f * a[c * n + j] % p) % p;
            }
        }
    }
    det
}

/// Laplace expansion; dimensions are tiny.
fn det_cyclotomic(n: usize, entries: &[Cyclotomic]) -> Cyclotomic {
    let order = entries.first().map_or(1, |e| e.order());
    if n == 0 {
        return Cyclotomic::one(order);
    }
    if n == 1 {
        return entries[0].clone();
    }
    let mut total = Cyclotomic::zero(order);
    for c in 0..n {
        let a = &entries[c];
        if a.is_zero() {
            continue;
        }
        let minor: Vec<Cyclotomic> = (1..n)
            .flat_map(|r| (0..n).filter(move |&j| j != c).map(move |j| (r, j)))
            .map(|(r, j)| entries[r * n + j].clone())
            .collect();
        let term = a * &det_cyclotomic(n - 1, &minor);
        total = if c % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

impl fmt::Display for DomainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainElement::Permutation(images) => {
                let s: Vec<String> = images.iter().map(u32::to_string).collect();
                write!(f, "{}", s.join(" "))
            }
            DomainElement::MatrixModP { dim, entries, .. } => {
                let rows: Vec<String> = entries
                    .chunks(*dim)
                    .map(|r| {
                        let s: Vec<String> = r.iter().map(u32::to_string).collect();
                        format!("[{}]", s.join(","))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(","))
            }
            DomainElement::MatrixCyclotomic { dim, entries, .. } => {
                let rows: Vec<String> = entries
                    .chunks(*dim)
                    .map(|r| {
                        let s: Vec<String> = r.iter().map(|c| c.pretty()).collect();
                        format!("[{}]", s.join(", "))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_composition_order() {
        let a = DomainElement::permutation(vec![1, 0, 2]);
        let b = DomainElement::permutation(vec![0, 2, 1]);
        // a(b(0)) = a(0) = 1, a(b(1)) = a(2) = 2, a(b(2)) = a(1) = 0
        assert_eq!(a.compose(&b), DomainElement::permutation(vec![1, 2, 0]));
        assert!(!DomainElement::permutation(vec![0, 0, 1]).is_invertible());
    }

    #[test]
    fn gf_determinant() {
        assert!(DomainElement::matrix_mod_p(3, &[&[1, 1], &[0, 1]]).is_invertible());
        assert!(!DomainElement::matrix_mod_p(3, &[&[1, 2], &[2, 1]]).is_invertible());
        assert!(DomainElement::matrix_mod_p(5, &[&[0, -1], &[1, 0]]).is_invertible());
    }

    #[test]
    fn cyclotomic_matrices() {
        let z = Cyclotomic::root_of_unity(4, 1);
        let o = Cyclotomic::zero(4);
        let i = DomainElement::matrix_cyclotomic(4, 2, vec![z.clone(), o.clone(), o, z.conj()]);
        let sq = i.compose(&i);
        let minus_one = DomainElement::matrix_cyclotomic(
            4,
            2,
            vec![
                Cyclotomic::from_integer(4, -1),
                Cyclotomic::zero(4),
                Cyclotomic::zero(4),
                Cyclotomic::from_integer(4, -1),
            ],
        );
        assert_eq!(sq, minus_one);
        assert!(i.is_invertible());
        assert_eq!(i.trace().unwrap(), Cyclotomic::zero(1));
    }
}
