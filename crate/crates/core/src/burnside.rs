//! Burnside ring structure constants, the multiplicity (Gram) matrix, and
//! the triangular reduction giving an orthogonal basis of the image of the
//! linearisation map.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{row_reduce_upper, triangular_inverse, ArithError, IntMatrix};
use crate::group::{ConjClasses, FiniteGroup};
use crate::subgroups::{ElementSet, MarksTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BurnsideError {
    #[error("structure constant n[{i}][{j}][{l}] = {value} is not a non-negative integer")]
    BadConstant {
        i: usize,
        j: usize,
        l: usize,
        value: String,
    },
    #[error("triangular reduction failed: {0}")]
    Reduction(#[from] ArithError),
    #[error("basis vectors {i} and {j} are not orthogonal")]
    NotOrthogonal { i: usize, j: usize },
    #[error("norm {norm} of row {i} does not divide the triangular row")]
    NormDoesNotDivide { i: usize, norm: String },
    #[error("point stabilizer is not a known subgroup")]
    UnknownStabilizer,
}

/// `constants[i][j][l] = n_{ij}^l` and `multiplicities[i][j] = sum_l n_{ij}^l`,
/// all indexed by the increasing subgroup-class order.
#[derive(Clone, Debug, Serialize)]
pub struct BurnsideStructure {
    pub constants: Vec<Vec<Vec<u64>>>,
    pub multiplicities: IntMatrix,
}

impl BurnsideStructure {
    pub fn len(&self) -> usize {
        self.constants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constants.is_empty()
    }
}

/// `n_{ij}^l = sum_k m_{ik} m_{jk} (m^-1)_{kl}`.
pub fn structure_constants(marks: &MarksTable) -> Result<BurnsideStructure, BurnsideError> {
    let m = &marks.marks;
    let n = m.rows();
    let inv = triangular_inverse(m)?;
    let mut constants = vec![vec![vec![0u64; n]; n]; n];
    let mut mult = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let mut total = BigInt::zero();
            for l in 0..n {
                let mut s = BigRational::zero();
                // m is lower triangular, so only k >= l and k <= min(i, j) contribute.
                for k in l..=i.min(j) {
                    let a = m.get(i, k);
                    let b = m.get(j, k);
                    if a.is_zero() || b.is_zero() || inv[k][l].is_zero() {
                        continue;
                    }
                    s += BigRational::from_integer(a * b) * &inv[k][l];
                }
                if !s.is_integer() || s.is_negative() {
                    return Err(BurnsideError::BadConstant {
                        i,
                        j,
                        l,
                        value: s.to_string(),
                    });
                }
                let v = s.to_integer();
                total += &v;
                let v = v.to_u64().expect("structure constant fits in u64");
                constants[i][j][l] = v;
                constants[j][i][l] = v;
            }
            mult.set(i, j, total.clone());
            mult.set(j, i, total);
        }
    }
    Ok(BurnsideStructure {
        constants,
        multiplicities: mult,
    })
}

/// Left cosets of a subgroup and the action of the group on them.
struct CosetAction {
    /// act[g * count + c] = coset index of g * (coset c)
    act: Vec<u32>,
    count: usize,
}

impl CosetAction {
    fn new(g: &FiniteGroup, h: &[usize]) -> Self {
        let n = g.order();
        let mut coset_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &e in h {
                coset_of[g.mul(x, e)] = c;
            }
        }
        let count = reps.len();
        let mut act = vec![0u32; n * count];
        for a in 0..n {
            for (c, &x) in reps.iter().enumerate() {
                act[a * count + c] = coset_of[g.mul(a, x)];
            }
        }
        CosetAction { act, count }
    }

    fn image(&self, g: usize, c: usize) -> usize {
        self.act[g * self.count + c] as usize
    }
}

/// Decomposes `(G/H_i) x (G/H_j)` into orbits and returns, for each class
/// `l`, how many orbits are isomorphic to `G/H_l`.
pub fn oracle_structure_constants(
    g: &FiniteGroup,
    marks: &MarksTable,
    i: usize,
    j: usize,
) -> Result<Vec<u64>, BurnsideError> {
    let n = g.order();
    let a = CosetAction::new(g, &marks.classes[i].representative);
    let b = CosetAction::new(g, &marks.classes[j].representative);
    let points = a.count * b.count;
    let mut seen = vec![false; points];
    let mut out = vec![0u64; marks.len()];
    for start in 0..points {
        if seen[start] {
            continue;
        }
        let (p, q) = (start / b.count, start % b.count);
        let mut stab = ElementSet::empty(n);
        for x in 0..n {
            let (p2, q2) = (a.image(x, p), b.image(x, q));
            seen[p2 * b.count + q2] = true;
            if p2 == p && q2 == q {
                stab.insert(x);
            }
        }
        let l = marks
            .class_of_subgroup(&stab)
            .ok_or(BurnsideError::UnknownStabilizer)?;
        out[l] += 1;
    }
    Ok(out)
}

/// `|(G/H)^x|` for `x` in each conjugacy class, computed as
/// `|C_G(x)| * |class(x) ∩ H| / |H|`.
pub fn fixed_point_counts(g: &FiniteGroup, classes: &ConjClasses, h: &[usize]) -> Vec<u64> {
    let mut meet = vec![0usize; classes.len()];
    for &x in h {
        meet[classes.class_of[x]] += 1;
    }
    (0..classes.len())
        .map(|c| {
            let cent = classes.centralizer_order(g.order(), c);
            ((cent * meet[c]) / h.len()) as u64
        })
        .collect()
}

/// `(1/|G|) sum_g |(G/H_i)^g| |(G/H_j)^g|`, the dimension of the space of
/// equivariant maps between the two permutation representations.
pub fn hom_count(g: &FiniteGroup, classes: &ConjClasses, marks: &MarksTable, i: usize, j: usize) -> BigRational {
    let fi = fixed_point_counts(g, classes, &marks.classes[i].representative);
    let fj = fixed_point_counts(g, classes, &marks.classes[j].representative);
    let s: u64 = (0..classes.len())
        .map(|c| classes.sizes[c] as u64 * fi[c] * fj[c])
        .sum();
    BigRational::new(BigInt::from(s), BigInt::from(g.order()))
}

/// Orthogonal basis `V_i = sum_l u_tilde[i][l] [G/H_{order[l]}]` of the image.
#[derive(Clone, Debug, Serialize)]
pub struct ImageBasis {
    /// Canonical class indices, in the order the columns were reduced.
    pub reduction_order: Vec<usize>,
    /// Columns follow `reduction_order`.
    pub u_tilde: IntMatrix,
    /// Columns follow `reduction_order`.
    pub h_tilde: IntMatrix,
    /// `v_defs[i][k]` is the coefficient of the class with canonical index `k`.
    pub v_defs: Vec<Vec<BigInt>>,
    pub norms: Vec<BigInt>,
}

impl ImageBasis {
    pub fn rank(&self) -> usize {
        self.norms.len()
    }
}

/// Reduction in decreasing order (the whole group first, trivial subgroup
/// last). Reducing from the trivial end can need non-integral multipliers
/// already for `C_3`.
pub fn image_basis(structure: &BurnsideStructure) -> Result<ImageBasis, BurnsideError> {
    let order: Vec<usize> = (0..structure.len()).rev().collect();
    image_basis_in_order(structure, &order)
}

/// Runs the triangular reduction with the columns arranged as `order`.
pub fn image_basis_in_order(structure: &BurnsideStructure, order: &[usize]) -> Result<ImageBasis, BurnsideError> {
    let n = structure.len();
    let m = structure.multiplicities.permute_symmetric(order);
    let (h, u) = row_reduce_upper(&m)?;
    let gram = u.mul(&m).mul(&u.transpose());
    let r = u.rows();
    let mut norms = Vec::with_capacity(r);
    for i in 0..r {
        for j in 0..r {
            if i != j && !gram.get(i, j).is_zero() {
                return Err(BurnsideError::NotOrthogonal { i, j });
            }
        }
        let d = gram.get(i, i).clone();
        if !d.is_positive() || h.row(i).iter().any(|x| !x.is_multiple_of(&d)) {
            return Err(BurnsideError::NormDoesNotDivide {
                i,
                norm: d.to_string(),
            });
        }
        norms.push(d);
    }
    let v_defs = (0..r)
        .map(|i| {
            let mut v = vec![BigInt::zero(); n];
            for (pos, &k) in order.iter().enumerate() {
                v[k] = u.get(i, pos).clone();
            }
            v
        })
        .collect();
    Ok(ImageBasis {
        reduction_order: order.to_vec(),
        u_tilde: u,
        h_tilde: h,
        v_defs,
        norms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, CatalogId};
    use crate::group::conjugacy_classes;
    use crate::subgroups::marks_for;

    fn setup(id: CatalogId) -> (FiniteGroup, MarksTable, BurnsideStructure) {
        let g = build(id).unwrap();
        let t = marks_for(&g).unwrap();
        let s = structure_constants(&t).unwrap();
        (g, t, s)
    }

    #[test]
    fn c2_regular_square() {
        let (_, _, s) = setup(CatalogId::Cyclic(2));
        assert_eq!(s.constants[0][0], vec![2, 0]);
    }

    #[test]
    fn c3_multiplicities_and_basis() {
        let (_, _, s) = setup(CatalogId::Cyclic(3));
        // Increasing order: trivial subgroup first.
        assert_eq!(s.multiplicities, IntMatrix::from_i64(&[&[3, 1], &[1, 1]]));
        let b = image_basis(&s).unwrap();
        assert_eq!(b.h_tilde, IntMatrix::from_i64(&[&[1, 1], &[0, 2]]));
        assert_eq!(b.u_tilde, IntMatrix::from_i64(&[&[1, 0], &[-1, 1]]));
        assert_eq!(b.norms, vec![BigInt::from(1), BigInt::from(2)]);
        // V_2 = [G/1] - [G/G]
        assert_eq!(b.v_defs[1], vec![BigInt::from(1), BigInt::from(-1)]);
    }

    #[test]
    fn increasing_order_reduction_fails_for_c3() {
        let (_, _, s) = setup(CatalogId::Cyclic(3));
        assert!(matches!(
            image_basis_in_order(&s, &[0, 1]),
            Err(BurnsideError::Reduction(ArithError::NonIntegralMultiplier { .. }))
        ));
    }

    #[test]
    fn q8_basis_and_product() {
        let (_, t, s) = setup(CatalogId::BinaryDihedral(2));
        let b = image_basis(&s).unwrap();
        assert_eq!(b.rank(), 5);
        assert_eq!(b.norms[4], BigInt::from(4));
        // Two distinct index-2 subgroups multiply to the center.
        let fours: Vec<usize> = (0..t.len()).filter(|&k| t.classes[k].order == 4).collect();
        let center = (0..t.len()).find(|&k| t.classes[k].order == 2).unwrap();
        let prod = &s.constants[fours[0]][fours[1]];
        assert_eq!(prod.iter().sum::<u64>(), 1);
        assert_eq!(prod[center], 1);
    }

    #[test]
    fn oracle_agrees_small() {
        for id in [
            CatalogId::Cyclic(4),
            CatalogId::BinaryDihedral(3),
            CatalogId::Symmetric(4),
        ] {
            let (g, t, s) = setup(id);
            let classes = conjugacy_classes(&g);
            for i in 0..t.len() {
                for j in 0..t.len() {
                    let o = oracle_structure_constants(&g, &t, i, j).unwrap();
                    assert_eq!(o, s.constants[i][j], "{id} ({i},{j})");
                    let h = hom_count(&g, &classes, &t, i, j);
                    assert_eq!(h, BigRational::from_integer(s.multiplicities.get(i, j).clone()));
                }
            }
        }
    }

    #[test]
    fn binary_dihedral_six_square() {
        // The class of order 4 subgroups (three conjugates) squares to
        // itself plus the order 2 class.
        let (g, t, s) = setup(CatalogId::BinaryDihedral(3));
        let c = (0..t.len()).find(|&k| t.classes[k].order == 4).unwrap();
        let two = (0..t.len()).find(|&k| t.classes[k].order == 2).unwrap();
        let mut expect = vec![0u64; t.len()];
        expect[c] = 1;
        expect[two] = 1;
        assert_eq!(s.constants[c][c], expect);
        assert_eq!(oracle_structure_constants(&g, &t, c, c).unwrap(), expect);
    }

    #[test]
    fn unit_of_the_product() {
        let (g, t, _) = setup(CatalogId::BinaryTetrahedral);
        let top = t.len() - 1;
        for j in 0..t.len() {
            let o = oracle_structure_constants(&g, &t, top, j).unwrap();
            let mut expect = vec![0u64; t.len()];
            expect[j] = 1;
            assert_eq!(o, expect);
        }
    }
}
