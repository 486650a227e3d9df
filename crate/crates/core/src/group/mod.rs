//! Materialised finite groups: element lists, Cayley tables, classes.

mod classes;
mod domain;

pub use classes::{conjugacy_classes, power_map, ConjClasses};
pub use domain::{Domain, DomainElement};

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};
use thiserror::Error;

/// Default cap on the order of groups built by closure.
pub const DEFAULT_ORDER_CAP: usize = 1000;

/// Order cap honouring the `BURNSIDE_ORDER_CAP` environment variable.
pub fn order_cap_from_env() -> usize {
    std::env::var("BURNSIDE_ORDER_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("no generators given")]
    NoGenerators,
    #[error("generator {index} lives in {found}, expected {expected}")]
    DomainMismatch {
        index: usize,
        expected: Domain,
        found: Domain,
    },
    #[error("generator {index} is not invertible")]
    NotInvertible { index: usize },
    #[error("group order exceeds the cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("Cayley table check failed: {0}")]
    BadTable(String),
}

/// A finite group with every product precomputed.
///
/// Element `0` is always the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<DomainElement>,
    cayley: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[DomainElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &DomainElement {
        &self.elements[i]
    }

    pub fn domain(&self) -> Domain {
        self.elements[0].domain()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g * x * g^-1`
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.orders[a] as i64;
        let k = k.rem_euclid(ord);
        let mut r = 0;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u32 {
        use num_integer::Integer;
        self.orders.iter().fold(1u32, |acc, &o| acc.lcm(&o))
    }

    /// Index of an element, by linear search.
    pub fn index_of(&self, x: &DomainElement) -> Option<usize> {
        self.elements.iter().position(|e| e == x)
    }

    /// Indices of the subgroup generated by the given elements, sorted.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.order();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut out = vec![0];
        let mut head = 0;
        while head < out.len() {
            let x = out[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of elements `g` with `g^2 = 1`.
    pub fn involution_count_with_identity(&self) -> usize {
        (0..self.order()).filter(|&g| self.mul(g, g) == 0).count()
    }
}

/// Closes a set of generators under multiplication.
///
/// Elements are discovered breadth first from the identity, right
/// multiplying by the generators in the order given.
pub fn close_generators(gens: &[DomainElement], order_cap: usize) -> Result<FiniteGroup, GroupError> {
    let first = gens.first().ok_or(GroupError::NoGenerators)?;
    let domain = first.domain();
    for (index, g) in gens.iter().enumerate() {
        if g.domain() != domain {
            return Err(GroupError::DomainMismatch {
                index,
                expected: domain,
                found: g.domain(),
            });
        }
        if !g.is_invertible() {
            return Err(GroupError::NotInvertible { index });
        }
    }

    let identity = DomainElement::identity(domain);
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<DomainElement, usize> = HashMap::new();
    index.insert(identity, 0);
    // right[g][i] = index of elements[i] * gens[g]
    let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
    // BFS tree: element i = elements[parent[i]] * gens[via[i]]
    let mut parent = vec![0usize];
    let mut via = vec![0usize];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        for (gi, g) in gens.iter().enumerate() {
            let y = x.compose(g);
            let idx = match index.get(&y) {
                Some(&i) => i,
                None => {
                    if elements.len() >= order_cap {
                        return Err(GroupError::OrderCapExceeded { cap: order_cap });
                    }
                    let i = elements.len();
                    index.insert(y.clone(), i);
                    elements.push(y);
                    parent.push(head);
                    via.push(gi);
                    i
                }
            };
            right[gi].push(idx as u32);
        }
        head += 1;
    }

    let n = elements.len();
    let mut cayley = vec![0u32; n * n];
    for a in 0..n {
        let row = &mut cayley[a * n..(a + 1) * n];
        row[0] = a as u32;
        for b in 1..n {
            let prev = row[parent[b]] as usize;
            row[b] = right[via[b]][prev];
        }
    }

    let mut inverse = vec![0u32; n];
    for a in 0..n {
        let b = (0..n)
            .find(|&b| cayley[a * n + b] == 0)
            .ok_or_else(|| GroupError::BadTable(format!("element {a} has no inverse")))?;
        inverse[a] = b as u32;
    }
    let mut orders = vec![1u32; n];
    for (a, ord) in orders.iter_mut().enumerate().skip(1) {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = cayley[x * n + a] as usize;
            k += 1;
        }
        *ord = k;
    }

    let group = FiniteGroup {
        elements,
        cayley,
        inverse,
        orders,
    };
    verify_table(&group)?;
    Ok(group)
}

const EXHAUSTIVE_CHECK_LIMIT: usize = 64;
const SAMPLED_CHECKS: usize = 4000;

fn verify_table(g: &FiniteGroup) -> Result<(), GroupError> {
    let n = g.order();
    // Latin square.
    let mut seen = vec![0usize; n];
    for a in 0..n {
        for b in 0..n {
            let row = g.mul(a, b);
            let col = g.mul(b, a);
            seen[row] += 1;
            seen[col] += 1;
        }
        if seen.iter().any(|&c| c != 2) {
            return Err(GroupError::BadTable(format!("row/column {a} is not a permutation")));
        }
        seen.iter_mut().for_each(|c| *c = 0);
    }
    for a in 0..n {
        if g.mul(a, 0) != a || g.mul(0, a) != a || g.mul(g.inv(a), a) != 0 {
            return Err(GroupError::BadTable(format!("identity or inverse law fails at {a}")));
        }
    }
    let check_triple = |a: usize, b: usize, c: usize| -> Result<(), GroupError> {
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
            return Err(GroupError::BadTable(format!("not associative at ({a},{b},{c})")));
        }
        Ok(())
    };
    let check_product = |a: usize, b: usize| -> Result<(), GroupError> {
        if g.elements[a].compose(&g.elements[b]) != g.elements[g.mul(a, b)] {
            return Err(GroupError::BadTable(format!("table disagrees with domain at ({a},{b})")));
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_CHECK_LIMIT {
        for a in 0..n {
            for b in 0..n {
                check_product(a, b)?;
                for c in 0..n {
                    check_triple(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = StdRng::seed_from_u64(0x6275_726e_7369_6465);
        for _ in 0..SAMPLED_CHECKS {
            let (a, b, c) = (
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            );
            check_product(a, b)?;
            check_triple(a, b, c)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Cyclotomic;

    #[test]
    fn three_cycle() {
        let g = close_generators(&[DomainElement::permutation(vec![1, 2, 0])], 100).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.exponent(), 3);
    }

    #[test]
    fn quaternion_from_dicyclic_generators() {
        let z = |k| Cyclotomic::root_of_unity(4, k);
        let zero = Cyclotomic::zero(4);
        let one = Cyclotomic::one(4);
        let r = DomainElement::matrix_cyclotomic(4, 2, vec![z(1), zero.clone(), zero.clone(), z(3)]);
        let s = DomainElement::matrix_cyclotomic(4, 2, vec![zero.clone(), -&one, one, zero]);
        let g = close_generators(&[r, s], 100).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.involution_count_with_identity(), 2);
    }

    #[test]
    fn sl25() {
        let a = DomainElement::matrix_mod_p(5, &[&[1, 1], &[0, 1]]);
        let b = DomainElement::matrix_mod_p(5, &[&[0, -1], &[1, 0]]);
        let g = close_generators(&[a, b], 1000).unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.exponent(), 60);
    }

    #[test]
    fn errors() {
        let a = DomainElement::matrix_mod_p(5, &[&[1, 1], &[0, 1]]);
        let b = DomainElement::matrix_mod_p(5, &[&[0, -1], &[1, 0]]);
        assert_eq!(
            close_generators(&[a.clone(), b], 50).unwrap_err(),
            GroupError::OrderCapExceeded { cap: 50 }
        );
        let singular = DomainElement::matrix_mod_p(5, &[&[1, 1], &[1, 1]]);
        assert_eq!(
            close_generators(&[a.clone(), singular], 50).unwrap_err(),
            GroupError::NotInvertible { index: 1 }
        );
        let perm = DomainElement::permutation(vec![1, 0]);
        assert!(matches!(
            close_generators(&[a, perm], 50),
            Err(GroupError::DomainMismatch { index: 1, .. })
        ));
        assert_eq!(close_generators(&[], 5).unwrap_err(), GroupError::NoGenerators);
    }
}
