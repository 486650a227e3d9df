//! Subgroup enumeration up to conjugacy and the table of marks.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::IntMatrix;
use crate::group::FiniteGroup;

/// Default limit on the total number of subgroups enumerated.
pub const DEFAULT_SUBGROUP_CAP: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubgroupError {
    #[error("more than {cap} subgroups; raise the subgroup cap")]
    TooManySubgroups { cap: usize },
    #[error("ordering is not a linear extension: class {smaller} lies in class {larger} but comes later")]
    NotLinearExtension { smaller: usize, larger: usize },
}

/// A subset of the elements of a group, as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: Vec<u64>,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet {
            bits: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_indices(n: usize, idx: impl IntoIterator<Item = usize>) -> Self {
        let mut s = ElementSet::empty(n);
        for i in idx {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubgroupClass {
    /// Sorted element indices of the lexicographically least conjugate.
    pub representative: Vec<usize>,
    pub order: usize,
    /// Number of cosets, `|G| / order`.
    pub index: usize,
    pub conjugate_count: usize,
    pub is_cyclic: bool,
    #[serde(skip)]
    pub conjugates: Vec<ElementSet>,
}

impl SubgroupClass {
    pub fn normalizer_order(&self, group_order: usize) -> usize {
        group_order / self.conjugate_count
    }
}

fn conjugate_set(g: &FiniteGroup, h: &[usize], x: usize) -> ElementSet {
    ElementSet::from_indices(g.order(), h.iter().map(|&e| g.conjugate(e, x)))
}

/// All conjugates of `h`, deduplicated, in order of first appearance.
fn all_conjugates(g: &FiniteGroup, h: &[usize]) -> Vec<ElementSet> {
    let mut seen: HashMap<ElementSet, ()> = HashMap::new();
    let mut out = Vec::new();
    for x in 0..g.order() {
        let c = conjugate_set(g, h, x);
        if seen.insert(c.clone(), ()).is_none() {
            out.push(c);
        }
    }
    out
}

/// Enumerates conjugacy classes of subgroups, sorted by order and then by
/// representative.
pub fn enumerate_subgroup_classes(g: &FiniteGroup) -> Result<Vec<SubgroupClass>, SubgroupError> {
    enumerate_with_cap(g, DEFAULT_SUBGROUP_CAP)
}

pub fn enumerate_with_cap(g: &FiniteGroup, cap: usize) -> Result<Vec<SubgroupClass>, SubgroupError> {
    let n = g.order();
    let mut known: HashMap<ElementSet, usize> = HashMap::new();
    // (generators, conjugates) per class, in discovery order.
    let mut found: Vec<(Vec<usize>, Vec<ElementSet>)> = Vec::new();

    let register = |gens: Vec<usize>,
                        elems: Vec<usize>,
                        known: &mut HashMap<ElementSet, usize>,
                        found: &mut Vec<(Vec<usize>, Vec<ElementSet>)>|
     -> Result<bool, SubgroupError> {
        let set = ElementSet::from_indices(n, elems.iter().copied());
        if known.contains_key(&set) {
            return Ok(false);
        }
        let conj = all_conjugates(g, &elems);
        if known.len() + conj.len() > cap {
            return Err(SubgroupError::TooManySubgroups { cap });
        }
        for c in &conj {
            known.insert(c.clone(), found.len());
        }
        found.push((gens, conj));
        Ok(true)
    };

    for x in 0..n {
        let elems = g.generated_subgroup(&[x]);
        register(vec![x], elems, &mut known, &mut found)?;
    }
    let mut head = 0;
    while head < found.len() {
        let gens = found[head].0.clone();
        let h = found[head].1[0].clone();
        let mut covered = h.clone();
        for x in 0..n {
            if covered.contains(x) {
                continue;
            }
            // Every element of the coset Hx generates the same overgroup.
            for e in h.iter() {
                covered.insert(g.mul(e, x));
            }
            let mut kgens = gens.clone();
            kgens.push(x);
            let elems = g.generated_subgroup(&kgens);
            register(kgens, elems, &mut known, &mut found)?;
        }
        head += 1;
    }

    let mut classes: Vec<SubgroupClass> = found
        .into_iter()
        .map(|(_, conj)| {
            let representative = conj.iter().map(ElementSet::to_vec).min().unwrap();
            let order = representative.len();
            let is_cyclic = representative
                .iter()
                .any(|&x| g.element_order(x) as usize == order);
            SubgroupClass {
                order,
                index: n / order,
                conjugate_count: conj.len(),
                is_cyclic,
                representative,
                conjugates: conj,
            }
        })
        .collect();
    classes.sort_by(|a, b| (a.order, &a.representative).cmp(&(b.order, &b.representative)));
    Ok(classes)
}

/// Whether some conjugate of class `a` is contained in the representative
/// of class `b`.
pub fn is_subconjugate(a: &SubgroupClass, b: &SubgroupClass) -> bool {
    let rep_b = b
        .conjugates
        .iter()
        .find(|c| c.to_vec() == b.representative)
        .expect("representative is one of the conjugates");
    a.conjugates.iter().any(|c| c.is_subset(rep_b))
}

/// Returns an ordering of `classes` (indices into it) that extends
/// inclusion up to conjugacy, checked exhaustively.
pub fn linear_extension(classes: &[SubgroupClass]) -> Result<Vec<usize>, SubgroupError> {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by(|&a, &b| {
        (classes[a].order, &classes[a].representative).cmp(&(classes[b].order, &classes[b].representative))
    });
    for (pos_i, &i) in order.iter().enumerate() {
        for &j in &order[..pos_i] {
            if is_subconjugate(&classes[i], &classes[j]) {
                return Err(SubgroupError::NotLinearExtension { smaller: i, larger: j });
            }
        }
    }
    Ok(order)
}

/// The subgroup classes in increasing linear-extension order with their
/// table of marks.
#[derive(Clone, Debug)]
pub struct MarksTable {
    pub classes: Vec<SubgroupClass>,
    pub marks: IntMatrix,
    lookup: HashMap<ElementSet, usize>,
}

impl MarksTable {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Class index of an arbitrary subgroup given as an element set.
    pub fn class_of_subgroup(&self, h: &ElementSet) -> Option<usize> {
        self.lookup.get(h).copied()
    }

    pub fn cyclic_count(&self) -> usize {
        self.classes.iter().filter(|c| c.is_cyclic).count()
    }
}

/// `m[i][j] = |(G/H_i)^{H_j}|`, the number of cosets of `H_i` fixed by `H_j`.
pub fn table_of_marks(g: &FiniteGroup, classes: &[SubgroupClass], ordering: &[usize]) -> MarksTable {
    let n = g.order();
    let ordered: Vec<SubgroupClass> = ordering.iter().map(|&i| classes[i].clone()).collect();
    let k = ordered.len();
    let reps: Vec<ElementSet> = ordered
        .iter()
        .map(|c| ElementSet::from_indices(n, c.representative.iter().copied()))
        .collect();
    let mut marks = IntMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..=i {
            // #{x : x^-1 H_j x <= H_i} = |N(H_j)| * #{conjugates of H_j inside H_i}
            let inside = ordered[j]
                .conjugates
                .iter()
                .filter(|c| c.is_subset(&reps[i]))
                .count();
            let count = ordered[j].normalizer_order(n) * inside;
            marks.set(i, j, BigInt::from(count / ordered[i].order));
        }
    }
    let mut lookup = HashMap::new();
    for (idx, c) in ordered.iter().enumerate() {
        for s in &c.conjugates {
            lookup.insert(s.clone(), idx);
        }
    }
    MarksTable {
        classes: ordered,
        marks,
        lookup,
    }
}

/// Convenience: enumerate, order, and tabulate.
pub fn marks_for(g: &FiniteGroup) -> Result<MarksTable, SubgroupError> {
    let classes = enumerate_subgroup_classes(g)?;
    let ordering = linear_extension(&classes)?;
    Ok(table_of_marks(g, &classes, &ordering))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{close_generators, DomainElement};

    fn cyclic(n: u32) -> FiniteGroup {
        let images = (0..n).map(|i| (i + 1) % n).collect();
        close_generators(&[DomainElement::permutation(images)], 1000).unwrap()
    }

    fn q8() -> FiniteGroup {
        let i = DomainElement::matrix_mod_p(3, &[&[1, 1], &[1, -1]]);
        let j = DomainElement::matrix_mod_p(3, &[&[-1, 1], &[1, 1]]);
        close_generators(&[i, j], 100).unwrap()
    }

    #[test]
    fn element_set_ops() {
        let a = ElementSet::from_indices(130, [0, 64, 129]);
        let b = ElementSet::from_indices(130, [0, 1, 64, 129]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.len(), 3);
        assert_eq!(b.to_vec(), vec![0, 1, 64, 129]);
    }

    #[test]
    fn marks_c2_c4() {
        let t = marks_for(&cyclic(2)).unwrap();
        assert_eq!(t.marks, IntMatrix::from_i64(&[&[2, 0], &[1, 1]]));
        let t = marks_for(&cyclic(4)).unwrap();
        assert_eq!(t.marks, IntMatrix::from_i64(&[&[4, 0, 0], &[2, 2, 0], &[1, 1, 1]]));
    }

    #[test]
    fn q8_lattice() {
        let g = q8();
        let classes = enumerate_subgroup_classes(&g).unwrap();
        let orders: Vec<usize> = classes.iter().map(|c| c.order).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
        assert_eq!(classes.iter().filter(|c| c.is_cyclic).count(), 5);
        let t = marks_for(&g).unwrap();
        assert!(t.marks.is_lower_triangular());
        assert_eq!(t.marks.row_vec(0)[0], BigInt::from(8));
        assert!(t.marks.row(5).iter().all(|x| *x == BigInt::from(1)));
    }

    #[test]
    fn trivial_group_has_one_class() {
        let t = marks_for(&cyclic(1)).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.marks, IntMatrix::from_i64(&[&[1]]));
    }

    #[test]
    fn marks_match_coset_fixed_points() {
        // Brute-force oracle: count cosets xH_i with H_j x H_i = x H_i.
        let g = q8();
        let t = marks_for(&g).unwrap();
        let n = g.order();
        for (i, ci) in t.classes.iter().enumerate() {
            let h = &ci.representative;
            let mut cosets: Vec<Vec<usize>> = (0..n)
                .map(|x| {
                    let mut c: Vec<usize> = h.iter().map(|&e| g.mul(x, e)).collect();
                    c.sort_unstable();
                    c
                })
                .collect();
            cosets.sort();
            cosets.dedup();
            for (j, cj) in t.classes.iter().enumerate() {
                let fixed = cosets
                    .iter()
                    .filter(|c| {
                        cj.representative.iter().all(|&k| {
                            let mut moved: Vec<usize> = c.iter().map(|&e| g.mul(k, e)).collect();
                            moved.sort_unstable();
                            &moved == *c
                        })
                    })
                    .count();
                assert_eq!(*t.marks.get(i, j), BigInt::from(fixed), "m[{i}][{j}]");
            }
        }
    }
}
