use serde::{Deserialize, Serialize};

use super::FiniteGroup;

/// Conjugacy classes of elements.
///
/// Classes are sorted by element order, then by the index of their first
/// element. Labels are the element order, with a letter suffix when several
/// classes share that order (`"4A"`, `"4B"`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjClasses {
    pub class_of: Vec<usize>,
    pub representatives: Vec<usize>,
    pub sizes: Vec<usize>,
    pub labels: Vec<String>,
    pub element_orders: Vec<u32>,
    pub members: Vec<Vec<usize>>,
}

impl ConjClasses {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn centralizer_order(&self, group_order: usize, class: usize) -> usize {
        group_order / self.sizes[class]
    }
}

pub fn conjugacy_classes(g: &FiniteGroup) -> ConjClasses {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut raw: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if assigned[x] {
            continue;
        }
        let mut orbit: Vec<usize> = Vec::new();
        for h in 0..n {
            let y = g.conjugate(x, h);
            if !assigned[y] {
                assigned[y] = true;
                orbit.push(y);
            }
        }
        orbit.sort_unstable();
        raw.push(orbit);
    }
    raw.sort_by_key(|orbit| (g.element_order(orbit[0]), orbit[0]));

    let element_orders: Vec<u32> = raw.iter().map(|c| g.element_order(c[0])).collect();
    let labels = element_orders
        .iter()
        .enumerate()
        .map(|(i, &o)| {
            let same: Vec<usize> = (0..raw.len()).filter(|&j| element_orders[j] == o).collect();
            if same.len() == 1 {
                o.to_string()
            } else {
                let pos = same.iter().position(|&j| j == i).unwrap();
                format!("{o}{}", letter_suffix(pos))
            }
        })
        .collect();
    let mut class_of = vec![0; n];
    for (c, members) in raw.iter().enumerate() {
        for &x in members {
            class_of[x] = c;
        }
    }
    ConjClasses {
        class_of,
        representatives: raw.iter().map(|c| c[0]).collect(),
        sizes: raw.iter().map(Vec::len).collect(),
        labels,
        element_orders,
        members: raw,
    }
}

fn letter_suffix(mut k: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'A' + (k % 26) as u8);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).unwrap()
}

/// Class of `g^k` as a function of the class of `g`.
///
/// Panics if the image depends on the representative, which would mean the
/// class partition is wrong.
pub fn power_map(g: &FiniteGroup, classes: &ConjClasses, k: i64) -> Vec<usize> {
    classes
        .members
        .iter()
        .map(|members| {
            let image = classes.class_of[g.pow(members[0], k)];
            assert!(
                members.iter().all(|&x| classes.class_of[g.pow(x, k)] == image),
                "power map not constant on a class"
            );
            image
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{close_generators, DomainElement};

    fn q8() -> FiniteGroup {
        // Quaternion units inside SL(2,3).
        let i = DomainElement::matrix_mod_p(3, &[&[1, 1], &[1, -1]]);
        let j = DomainElement::matrix_mod_p(3, &[&[-1, 1], &[1, 1]]);
        close_generators(&[i, j], 100).unwrap()
    }

    #[test]
    fn q8_classes_and_squares() {
        let g = q8();
        assert_eq!(g.order(), 8);
        let c = conjugacy_classes(&g);
        assert_eq!(c.sizes, vec![1, 1, 2, 2, 2]);
        assert_eq!(c.labels, vec!["1", "2", "4A", "4B", "4C"]);
        let sq = power_map(&g, &c, 2);
        assert_eq!(sq, vec![0, 0, 1, 1, 1]);
        assert_eq!(power_map(&g, &c, 1), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cyclic_power_to_exponent() {
        let g = close_generators(&[DomainElement::permutation(vec![1, 2, 0])], 10).unwrap();
        let c = conjugacy_classes(&g);
        assert_eq!(c.len(), 3);
        assert_eq!(power_map(&g, &c, 3), vec![0, 0, 0]);
    }

    #[test]
    fn trivial_group() {
        let g = close_generators(&[DomainElement::permutation(vec![0])], 10).unwrap();
        let c = conjugacy_classes(&g);
        assert_eq!(c.len(), 1);
        assert_eq!(c.labels, vec!["1"]);
    }

    #[test]
    fn class_equation() {
        let g = q8();
        let c = conjugacy_classes(&g);
        for x in 0..g.order() {
            let cent = (0..g.order()).filter(|&h| g.mul(h, x) == g.mul(x, h)).count();
            assert_eq!(cent * c.sizes[c.class_of[x]], g.order());
        }
    }
}
