//! Published tables for the groups of the reference suite: subgroup classes
//! (largest first), multiplicities, the upper triangular form, the image
//! characters and the cokernels over Q, R and C.
//!
//! Subgroup labels follow the tables: index 0 is the whole group. Image
//! character columns carry their element orders and class sizes so that
//! they can be matched against computed classes.

use burnside::catalog::CatalogId;

/// `(free rank, invariant factors)`.
pub type CokernelShape = (usize, &'static [u64]);

pub struct ReferenceGroup {
    pub id: CatalogId,
    /// `(order, cosets, conjugates, cyclic)`, whole group first.
    pub subgroups: &'static [(usize, usize, usize, bool)],
    pub multiplicities: &'static [&'static [i64]],
    /// Rows `V_1, V_2, ...`; columns follow `subgroups`.
    pub triangular: &'static [&'static [i64]],
    pub class_orders: &'static [u32],
    pub class_sizes: &'static [usize],
    pub image: &'static [&'static [i64]],
    pub coker_q: Option<CokernelShape>,
    pub coker_r: Option<CokernelShape>,
    pub coker_c: Option<CokernelShape>,
}

pub const REFERENCE: &[ReferenceGroup] = &[
    ReferenceGroup {
        id: CatalogId::Cyclic(2),
        subgroups: &[(2, 1, 1, true), (1, 2, 1, true)],
        multiplicities: &[&[1, 1], &[1, 2]],
        triangular: &[&[1, 1], &[0, 1]],
        class_orders: &[1, 2],
        class_sizes: &[1, 1],
        image: &[&[1, 1], &[1, -1]],
        coker_q: Some((0, &[])),
        coker_r: Some((0, &[])),
        coker_c: Some((0, &[])),
    },
    ReferenceGroup {
        id: CatalogId::Cyclic(3),
        subgroups: &[(3, 1, 1, true), (1, 3, 1, true)],
        multiplicities: &[&[1, 1], &[1, 3]],
        triangular: &[&[1, 1], &[0, 2]],
        class_orders: &[1, 3, 3],
        class_sizes: &[1, 1, 1],
        image: &[&[1, 1, 1], &[2, -1, -1]],
        coker_q: Some((0, &[])),
        coker_r: Some((0, &[])),
        coker_c: Some((1, &[])),
    },
    ReferenceGroup {
        id: CatalogId::Cyclic(4),
        subgroups: &[(4, 1, 1, true), (2, 2, 1, true), (1, 4, 1, true)],
        multiplicities: &[&[1, 1, 1], &[1, 2, 2], &[1, 2, 4]],
        triangular: &[&[1, 1, 1], &[0, 1, 1], &[0, 0, 2]],
        class_orders: &[1, 4, 2, 4],
        class_sizes: &[1, 1, 1, 1],
        image: &[&[1, 1, 1, 1], &[1, -1, 1, -1], &[2, 0, -2, 0]],
        coker_q: Some((0, &[])),
        coker_r: Some((0, &[])),
        coker_c: Some((1, &[])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryDihedral(2),
        subgroups: &[(8, 1, 1, false), (4, 2, 1, true), (4, 2, 1, true), (4, 2, 1, true), (2, 4, 1, true), (1, 8, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1], &[1, 2, 1, 1, 2, 2], &[1, 1, 2, 1, 2, 2], &[1, 1, 1, 2, 2, 2], &[1, 2, 2, 2, 4, 4], &[1, 2, 2, 2, 4, 8]],
        triangular: &[&[1, 1, 1, 1, 1, 1], &[0, 1, 0, 0, 1, 1], &[0, 0, 1, 0, 1, 1], &[0, 0, 0, 1, 1, 1], &[0, 0, 0, 0, 0, 4]],
        class_orders: &[1, 2, 4, 4, 4],
        class_sizes: &[1, 1, 2, 2, 2],
        image: &[&[1, 1, 1, 1, 1], &[1, 1, -1, 1, -1], &[1, 1, -1, -1, 1], &[1, 1, 1, -1, -1], &[4, -4, 0, 0, 0]],
        coker_q: Some((0, &[])),
        coker_r: Some((0, &[])),
        coker_c: Some((0, &[2])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryDihedral(3),
        subgroups: &[(12, 1, 1, false), (6, 2, 1, true), (4, 3, 3, true), (3, 4, 1, true), (2, 6, 1, true), (1, 12, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1], &[1, 2, 1, 2, 2, 2], &[1, 1, 2, 1, 3, 3], &[1, 2, 1, 4, 2, 4], &[1, 2, 3, 2, 6, 6], &[1, 2, 3, 4, 6, 12]],
        triangular: &[&[1, 1, 1, 1, 1, 1], &[0, 1, 0, 1, 1, 1], &[0, 0, 1, 0, 2, 2], &[0, 0, 0, 2, 0, 2], &[0, 0, 0, 0, 0, 4]],
        class_orders: &[1, 2, 3, 4, 4, 6],
        class_sizes: &[1, 1, 2, 3, 3, 2],
        image: &[&[1, 1, 1, 1, 1, 1], &[1, 1, 1, -1, -1, 1], &[2, 2, -1, 0, 0, -1], &[2, -2, 2, 0, 0, -2], &[4, -4, -2, 0, 0, 2]],
        coker_q: Some((0, &[])),
        coker_r: Some((0, &[])),
        coker_c: Some((1, &[2])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryDihedral(4),
        subgroups: &[(16, 1, 1, false), (8, 2, 1, true), (8, 2, 1, false), (8, 2, 1, false), (4, 4, 2, true), (4, 4, 1, true), (4, 4, 2, true), (2, 8, 1, true), (1, 16, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 2, 1, 1, 1, 2, 1, 2, 2], &[1, 1, 2, 1, 2, 2, 1, 2, 2], &[1, 1, 1, 2, 1, 2, 2, 2, 2], &[1, 1, 2, 1, 3, 2, 2, 4, 4], &[1, 2, 2, 2, 2, 4, 2, 4, 4], &[1, 1, 1, 2, 2, 2, 3, 4, 4], &[1, 2, 2, 2, 4, 4, 4, 8, 8], &[1, 2, 2, 2, 4, 4, 4, 8, 16]],
        triangular: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 0, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1, 1, 0, 1, 1], &[0, 0, 0, 1, 0, 1, 1, 1, 1], &[0, 0, 0, 0, 1, 0, 1, 2, 2], &[0, 0, 0, 0, 0, 0, 0, 0, 8]],
        class_orders: &[1, 2, 4, 4, 4, 8, 8],
        class_sizes: &[1, 1, 2, 4, 4, 2, 2],
        image: &[&[1, 1, 1, 1, 1, 1, 1], &[1, 1, 1, -1, 1, -1, -1], &[1, 1, 1, -1, -1, 1, 1], &[1, 1, 1, 1, -1, -1, -1], &[2, 2, -2, 0, 0, 0, 0], &[8, -8, 0, 0, 0, 0, 0]],
        coker_q: Some((0, &[])),
        coker_r: Some((1, &[])),
        coker_c: Some((1, &[2])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryDihedral(5),
        subgroups: &[(20, 1, 1, false), (10, 2, 1, true), (5, 4, 1, true), (4, 5, 5, true), (2, 10, 1, true), (1, 20, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1], &[1, 2, 2, 1, 2, 2], &[1, 2, 4, 1, 2, 4], &[1, 1, 1, 3, 5, 5], &[1, 2, 2, 5, 10, 10], &[1, 2, 4, 5, 10, 20]],
        triangular: &[&[1, 1, 1, 1, 1, 1], &[0, 1, 1, 0, 1, 1], &[0, 0, 2, 0, 0, 2], &[0, 0, 0, 2, 4, 4], &[0, 0, 0, 0, 0, 8]],
        class_orders: &[1, 2, 4, 4, 5, 5, 10, 10],
        class_sizes: &[1, 1, 5, 5, 2, 2, 2, 2],
        image: &[&[1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, -1, -1, 1, 1, 1, 1], &[2, -2, 0, 0, 2, 2, -2, -2], &[4, 4, 0, 0, -1, -1, -1, -1], &[8, -8, 0, 0, -2, -2, 2, 2]],
        coker_q: Some((0, &[])),
        coker_r: Some((2, &[])),
        coker_c: Some((3, &[2])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryDihedral(6),
        subgroups: &[(24, 1, 1, false), (12, 2, 1, true), (12, 2, 1, false), (12, 2, 1, false), (8, 3, 3, false), (6, 4, 1, true), (4, 6, 3, true), (4, 6, 1, true), (4, 6, 3, true), (3, 8, 1, true), (2, 12, 1, true), (1, 24, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2], &[1, 1, 2, 1, 1, 2, 2, 1, 1, 2, 2, 2], &[1, 1, 1, 2, 1, 2, 1, 1, 2, 2, 2, 2], &[1, 1, 1, 1, 2, 1, 2, 3, 2, 1, 3, 3], &[1, 2, 2, 2, 1, 4, 2, 2, 2, 4, 4, 4], &[1, 1, 2, 1, 2, 2, 4, 3, 3, 2, 6, 6], &[1, 2, 1, 1, 3, 2, 3, 6, 3, 2, 6, 6], &[1, 1, 1, 2, 2, 2, 3, 3, 4, 2, 6, 6], &[1, 2, 2, 2, 1, 4, 2, 2, 2, 8, 4, 8], &[1, 2, 2, 2, 3, 4, 6, 6, 6, 4, 12, 12], &[1, 2, 2, 2, 3, 4, 6, 6, 6, 8, 12, 24]],
        triangular: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1], &[0, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1], &[0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 1, 1], &[0, 0, 0, 0, 1, 0, 1, 2, 1, 0, 2, 2], &[0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2, 2], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 4], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8]],
        class_orders: &[1, 2, 3, 4, 4, 4, 6, 12, 12],
        class_sizes: &[1, 1, 2, 6, 6, 2, 2, 2, 2],
        image: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, 1, -1, -1, 1, 1, 1, 1], &[1, 1, 1, -1, 1, -1, 1, -1, -1], &[1, 1, 1, 1, -1, -1, 1, -1, -1], &[2, 2, -1, 0, 0, 2, -1, -1, -1], &[2, 2, -1, 0, 0, -2, -1, 1, 1], &[4, -4, 4, 0, 0, 0, -4, 0, 0], &[8, -8, -4, 0, 0, 0, 4, 0, 0]],
        coker_q: Some((0, &[])),
        coker_r: Some((1, &[])),
        coker_c: Some((1, &[2, 2])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryDihedral(7),
        subgroups: &[(28, 1, 1, false), (14, 2, 1, true), (7, 4, 1, true), (4, 7, 7, true), (2, 14, 1, true), (1, 28, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1], &[1, 2, 2, 1, 2, 2], &[1, 2, 4, 1, 2, 4], &[1, 1, 1, 4, 7, 7], &[1, 2, 2, 7, 14, 14], &[1, 2, 4, 7, 14, 28]],
        triangular: &[&[1, 1, 1, 1, 1, 1], &[0, 1, 1, 0, 1, 1], &[0, 0, 2, 0, 0, 2], &[0, 0, 0, 3, 6, 6], &[0, 0, 0, 0, 0, 12]],
        class_orders: &[1, 2, 4, 4, 7, 7, 7, 14, 14, 14],
        class_sizes: &[1, 1, 7, 7, 2, 2, 2, 2, 2, 2],
        image: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, -1, -1, 1, 1, 1, 1, 1, 1], &[2, -2, 0, 0, 2, 2, 2, -2, -2, -2], &[6, 6, 0, 0, -1, -1, -1, -1, -1, -1], &[12, -12, 0, 0, -2, -2, -2, 2, 2, 2]],
        coker_q: None,
        coker_r: None,
        coker_c: None,
    },
    ReferenceGroup {
        id: CatalogId::BinaryDihedral(8),
        subgroups: &[(32, 1, 1, false), (16, 2, 1, false), (16, 2, 1, true), (16, 2, 1, false), (8, 4, 1, true), (8, 4, 2, false), (8, 4, 2, false), (4, 8, 4, true), (4, 8, 4, true), (4, 8, 1, true), (2, 16, 1, true), (1, 32, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 2, 2], &[1, 1, 2, 1, 2, 1, 1, 1, 1, 2, 2, 2], &[1, 1, 1, 2, 2, 2, 1, 1, 2, 2, 2, 2], &[1, 2, 2, 2, 4, 2, 2, 2, 2, 4, 4, 4], &[1, 1, 1, 2, 2, 3, 2, 2, 3, 4, 4, 4], &[1, 2, 1, 1, 2, 2, 3, 3, 2, 4, 4, 4], &[1, 2, 1, 1, 2, 2, 3, 5, 4, 4, 8, 8], &[1, 1, 1, 2, 2, 3, 2, 4, 5, 4, 8, 8], &[1, 2, 2, 2, 4, 4, 4, 4, 4, 8, 8, 8], &[1, 2, 2, 2, 4, 4, 4, 8, 8, 8, 16, 16], &[1, 2, 2, 2, 4, 4, 4, 8, 8, 8, 16, 32]],
        triangular: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1], &[0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 1], &[0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1], &[0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2], &[0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 4, 4], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 16]],
        class_orders: &[1, 2, 4, 4, 4, 8, 8, 16, 16, 16, 16],
        class_sizes: &[1, 1, 8, 8, 2, 2, 2, 2, 2, 2, 2],
        image: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1], &[1, 1, -1, -1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, -1, 1, 1, 1, 1, -1, -1, -1, -1], &[2, 2, 0, 0, 2, -2, -2, 0, 0, 0, 0], &[4, 4, 0, 0, -4, 0, 0, 0, 0, 0, 0], &[16, -16, 0, 0, 0, 0, 0, 0, 0, 0, 0]],
        coker_q: None,
        coker_r: None,
        coker_c: None,
    },
    ReferenceGroup {
        id: CatalogId::BinaryTetrahedral,
        subgroups: &[(24, 1, 1, false), (8, 3, 1, false), (6, 4, 4, true), (4, 6, 3, true), (3, 8, 4, true), (2, 12, 1, true), (1, 24, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1, 1], &[1, 3, 1, 3, 1, 3, 3], &[1, 1, 2, 2, 2, 4, 4], &[1, 3, 2, 4, 2, 6, 6], &[1, 1, 2, 2, 4, 4, 8], &[1, 3, 4, 6, 4, 12, 12], &[1, 3, 4, 6, 8, 12, 24]],
        triangular: &[&[1, 1, 1, 1, 1, 1, 1], &[0, 2, 0, 2, 0, 2, 2], &[0, 0, 1, 1, 1, 3, 3], &[0, 0, 0, 0, 2, 0, 4], &[0, 0, 0, 0, 0, 0, 4]],
        class_orders: &[1, 2, 3, 3, 4, 6, 6],
        class_sizes: &[1, 1, 4, 4, 6, 4, 4],
        image: &[&[1, 1, 1, 1, 1, 1, 1], &[2, 2, -1, -1, 2, -1, -1], &[3, 3, 0, 0, -1, 0, 0], &[4, -4, 1, 1, 0, -1, -1], &[4, -4, -2, -2, 0, 2, 2]],
        coker_q: Some((0, &[])),
        coker_r: Some((0, &[])),
        coker_c: Some((2, &[2])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryOctahedral,
        subgroups: &[(48, 1, 1, false), (24, 2, 1, false), (16, 3, 3, false), (12, 4, 4, false), (8, 6, 3, false), (8, 6, 1, false), (8, 6, 3, true), (6, 8, 4, true), (4, 12, 6, true), (4, 12, 3, true), (3, 16, 4, true), (2, 24, 1, true), (1, 48, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 2, 1, 1, 1, 2, 1, 2, 1, 2, 2, 2, 2], &[1, 1, 2, 1, 2, 3, 2, 1, 2, 3, 1, 3, 3], &[1, 1, 1, 2, 2, 1, 1, 2, 3, 2, 2, 4, 4], &[1, 1, 2, 2, 3, 3, 2, 2, 4, 4, 2, 6, 6], &[1, 2, 3, 1, 3, 6, 3, 2, 3, 6, 2, 6, 6], &[1, 1, 2, 1, 2, 3, 3, 2, 3, 4, 2, 6, 6], &[1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 4, 8, 8], &[1, 1, 2, 3, 4, 3, 3, 4, 7, 6, 4, 12, 12], &[1, 2, 3, 2, 4, 6, 4, 4, 6, 8, 4, 12, 12], &[1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 8, 8, 16], &[1, 2, 3, 4, 6, 6, 6, 8, 12, 12, 8, 24, 24], &[1, 2, 3, 4, 6, 6, 6, 8, 12, 12, 16, 24, 48]],
        triangular: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1], &[0, 0, 1, 0, 1, 2, 1, 0, 1, 2, 0, 2, 2], &[0, 0, 0, 1, 1, 0, 0, 1, 2, 1, 1, 3, 3], &[0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 3, 3], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 8], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8]],
        class_orders: &[1, 2, 3, 4, 4, 6, 8, 8],
        class_sizes: &[1, 1, 8, 6, 12, 8, 6, 6],
        image: &[&[1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, 1, 1, -1, 1, -1, -1], &[2, 2, -1, 2, 0, -1, 0, 0], &[3, 3, 0, -1, 1, 0, -1, -1], &[3, 3, 0, -1, -1, 0, 1, 1], &[8, -8, 2, 0, 0, -2, 0, 0], &[8, -8, -4, 0, 0, 4, 0, 0]],
        coker_q: Some((0, &[])),
        coker_r: Some((1, &[])),
        coker_c: Some((1, &[2, 2])),
    },
    ReferenceGroup {
        id: CatalogId::BinaryIcosahedral,
        subgroups: &[(120, 1, 1, false), (24, 5, 5, false), (20, 6, 6, false), (12, 10, 10, false), (10, 12, 6, true), (8, 15, 5, false), (6, 20, 10, true), (5, 24, 6, true), (4, 30, 15, true), (3, 40, 10, true), (2, 60, 1, true), (1, 120, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 2, 1, 2, 1, 2, 3, 1, 3, 3, 5, 5], &[1, 1, 2, 2, 2, 3, 2, 2, 4, 2, 6, 6], &[1, 2, 2, 3, 2, 4, 4, 2, 6, 4, 10, 10], &[1, 1, 2, 2, 4, 3, 4, 4, 6, 4, 12, 12], &[1, 2, 3, 4, 3, 6, 5, 3, 9, 5, 15, 15], &[1, 3, 2, 4, 4, 5, 8, 4, 10, 8, 20, 20], &[1, 1, 2, 2, 4, 3, 4, 8, 6, 8, 12, 24], &[1, 3, 4, 6, 6, 9, 10, 6, 16, 10, 30, 30], &[1, 3, 2, 4, 4, 5, 8, 8, 10, 16, 20, 40], &[1, 5, 6, 10, 12, 15, 20, 12, 30, 20, 60, 60], &[1, 5, 6, 10, 12, 15, 20, 24, 30, 40, 60, 120]],
        triangular: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 1, 0, 1, 2, 0, 2, 2, 4, 4], &[0, 0, 1, 1, 1, 2, 1, 1, 3, 1, 5, 5], &[0, 0, 0, 0, 2, 0, 2, 2, 2, 2, 6, 6], &[0, 0, 0, 0, 0, 0, 0, 4, 0, 4, 0, 12], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 8], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 8]],
        class_orders: &[1, 2, 3, 4, 5, 5, 6, 10, 10],
        class_sizes: &[1, 1, 20, 30, 12, 12, 20, 12, 12],
        image: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1], &[4, 4, 1, 0, -1, -1, 1, -1, -1], &[5, 5, -1, 1, 0, 0, -1, 0, 0], &[6, 6, 0, -2, 1, 1, 0, 1, 1], &[12, -12, 0, 0, 2, 2, 0, -2, -2], &[8, -8, 2, 0, -2, -2, -2, 2, 2], &[8, -8, -4, 0, -2, -2, 4, 2, 2]],
        coker_q: Some((0, &[])),
        coker_r: Some((2, &[])),
        coker_c: Some((2, &[2, 2, 2])),
    },
    ReferenceGroup {
        id: CatalogId::GL2F3,
        subgroups: &[(48, 1, 1, false), (24, 2, 1, false), (16, 3, 3, false), (12, 4, 4, false), (8, 6, 3, true), (8, 6, 1, false), (8, 6, 3, false), (6, 8, 4, false), (6, 8, 4, false), (6, 8, 4, true), (4, 12, 6, false), (4, 12, 3, true), (3, 16, 4, true), (2, 24, 1, true), (2, 24, 12, true), (1, 48, 1, true)],
        multiplicities: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[1, 2, 1, 1, 1, 2, 1, 2, 1, 1, 1, 2, 2, 1, 2, 2], &[1, 1, 2, 1, 2, 3, 2, 1, 1, 1, 2, 3, 1, 2, 3, 3], &[1, 1, 1, 2, 1, 1, 2, 2, 2, 2, 3, 2, 2, 3, 4, 4], &[1, 1, 2, 1, 3, 3, 2, 2, 1, 1, 3, 4, 2, 3, 6, 6], &[1, 2, 3, 1, 3, 6, 3, 2, 1, 1, 3, 6, 2, 3, 6, 6], &[1, 1, 2, 2, 2, 3, 3, 2, 2, 2, 4, 4, 2, 4, 6, 6], &[1, 2, 1, 2, 2, 2, 2, 4, 2, 2, 4, 4, 4, 4, 8, 8], &[1, 1, 1, 2, 1, 1, 2, 2, 3, 3, 3, 2, 4, 5, 4, 8], &[1, 1, 1, 2, 1, 1, 2, 2, 3, 3, 3, 2, 4, 5, 4, 8], &[1, 1, 2, 3, 3, 3, 4, 4, 3, 3, 7, 6, 4, 7, 12, 12], &[1, 2, 3, 2, 4, 6, 4, 4, 2, 2, 6, 8, 4, 6, 12, 12], &[1, 2, 1, 2, 2, 2, 2, 4, 4, 4, 4, 4, 8, 8, 8, 16], &[1, 1, 2, 3, 3, 3, 4, 4, 5, 5, 7, 6, 8, 13, 12, 24], &[1, 2, 3, 4, 6, 6, 6, 8, 4, 4, 12, 12, 8, 12, 24, 24], &[1, 2, 3, 4, 6, 6, 6, 8, 8, 8, 12, 12, 16, 24, 24, 48]],
        triangular: &[&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1], &[0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1], &[0, 0, 1, 0, 1, 2, 1, 0, 0, 0, 1, 2, 0, 1, 2, 2], &[0, 0, 0, 1, 0, 0, 1, 1, 1, 1, 2, 1, 1, 2, 3, 3], &[0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 3, 3], &[0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 2, 2, 0, 4], &[0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 4]],
        class_orders: &[1, 2, 2, 3, 4, 6, 8, 8],
        class_sizes: &[1, 1, 12, 8, 6, 8, 6, 6],
        image: &[&[1, 1, 1, 1, 1, 1, 1, 1], &[1, 1, -1, 1, 1, 1, -1, -1], &[2, 2, 0, -1, 2, -1, 0, 0], &[3, 3, 1, 0, -1, 0, -1, -1], &[3, 3, -1, 0, -1, 0, 1, 1], &[4, -4, 0, 1, 0, -1, 0, 0], &[4, -4, 0, -2, 0, 2, 0, 0]],
        coker_q: Some((0, &[])),
        coker_r: Some((0, &[])),
        coker_c: Some((1, &[])),
    },
];
