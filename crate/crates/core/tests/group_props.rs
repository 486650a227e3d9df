use burnside::analysis::{all_fields, analyze_group};
use burnside::burnside::{oracle_structure_constants, structure_constants};
use burnside::catalog::{build, CatalogId};
use burnside::characters::FieldTag;
use burnside::subgroups::marks_for;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn small_group() -> impl Strategy<Value = CatalogId> {
    prop_oneof![
        (1u32..=24).prop_map(CatalogId::Cyclic),
        (2u32..=6).prop_map(CatalogId::BinaryDihedral),
        (2u32..=4).prop_map(CatalogId::Symmetric),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn marks_are_triangular_with_index_column(id in small_group()) {
        let g = build(id).unwrap();
        let t = marks_for(&g).unwrap();
        prop_assert!(t.marks.is_lower_triangular());
        for (i, c) in t.classes.iter().enumerate() {
            prop_assert_eq!(t.marks.get(i, 0), &BigInt::from(c.index));
            prop_assert_eq!(t.marks.get(i, i), &BigInt::from(c.normalizer_order(g.order()) / c.order));
        }
        prop_assert_eq!(t.classes.last().unwrap().order, g.order());
    }

    #[test]
    fn products_multiply_marks(id in small_group()) {
        let g = build(id).unwrap();
        let t = marks_for(&g).unwrap();
        let s = structure_constants(&t).unwrap();
        let n = t.len();
        for i in 0..n {
            for j in 0..n {
                for col in 0..n {
                    let lhs = t.marks.get(i, col) * t.marks.get(j, col);
                    let rhs = (0..n).fold(BigInt::zero(), |acc, k| acc + BigInt::from(s.constants[i][j][k]) * t.marks.get(k, col));
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
        let (i, j) = (n / 2, n - 1 - n / 3);
        prop_assert_eq!(&oracle_structure_constants(&g, &t, i, j).unwrap(), &s.constants[i][j]);
    }

    #[test]
    fn kernel_rank_and_rational_surjectivity(id in small_group()) {
        let g = build(id).unwrap();
        let r = analyze_group(&id.name(), &g, &all_fields()).unwrap();
        prop_assert_eq!(r.kernel_rank, r.subgroup_class_count() - r.cyclic_class_count());
        prop_assert_eq!(r.surjective(FieldTag::Rational), Some(true));
        prop_assert_eq!(r.surjective(FieldTag::IntegerReal), Some(true));
    }
}
