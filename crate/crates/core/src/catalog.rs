//! Named groups and their construction.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::arith::Cyclotomic;
use crate::group::{
    close_generators, conjugacy_classes, order_cap_from_env, DomainElement, FiniteGroup, GroupError,
};
use crate::subgroups::{enumerate_subgroup_classes, SubgroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown group '{0}'")]
    Unknown(String),
    #[error("invalid parameter for {name}: {reason}")]
    BadParameter { name: String, reason: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{name} closed to order {got}, expected {expected}")]
    WrongOrder {
        name: String,
        got: usize,
        expected: usize,
    },
}

/// The named groups known to the tool.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    Cyclic(u32),
    /// `BinaryDihedral(n)` has order `4n` and is written `2D<2n>`.
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    GL2F3,
    Symmetric(u32),
}

pub const MAX_SYMMETRIC_DEGREE: u32 = 8;

impl CatalogId {
    pub fn name(&self) -> String {
        match self {
            CatalogId::Cyclic(n) => format!("C{n}"),
            CatalogId::BinaryDihedral(n) => format!("2D{}", 2 * n),
            CatalogId::BinaryTetrahedral => "2T".into(),
            CatalogId::BinaryOctahedral => "2O".into(),
            CatalogId::BinaryIcosahedral => "2I".into(),
            CatalogId::GL2F3 => "GL2F3".into(),
            CatalogId::Symmetric(n) => format!("S{n}"),
        }
    }

    pub fn description(&self) -> String {
        match self {
            CatalogId::Cyclic(n) => format!("cyclic group of order {n}"),
            CatalogId::BinaryDihedral(n) => format!("binary dihedral group of order {}", 4 * n),
            CatalogId::BinaryTetrahedral => "binary tetrahedral group SL(2,3)".into(),
            CatalogId::BinaryOctahedral => "binary octahedral group".into(),
            CatalogId::BinaryIcosahedral => "binary icosahedral group SL(2,5)".into(),
            CatalogId::GL2F3 => "general linear group GL(2,3)".into(),
            CatalogId::Symmetric(n) => format!("symmetric group on {n} letters"),
        }
    }

    pub fn expected_order(&self) -> usize {
        match *self {
            CatalogId::Cyclic(n) => n as usize,
            CatalogId::BinaryDihedral(n) => 4 * n as usize,
            CatalogId::BinaryTetrahedral => 24,
            CatalogId::BinaryOctahedral | CatalogId::GL2F3 => 48,
            CatalogId::BinaryIcosahedral => 120,
            CatalogId::Symmetric(n) => (1..=n as usize).product(),
        }
    }

    /// A representative list for `list-groups`.
    pub fn examples() -> Vec<CatalogId> {
        let mut v: Vec<CatalogId> = [1, 2, 3, 4, 8, 9].into_iter().map(CatalogId::Cyclic).collect();
        v.extend((2..=8).map(CatalogId::BinaryDihedral));
        v.extend([
            CatalogId::BinaryTetrahedral,
            CatalogId::BinaryOctahedral,
            CatalogId::BinaryIcosahedral,
            CatalogId::GL2F3,
        ]);
        v.extend((2..=5).map(CatalogId::Symmetric));
        v
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CatalogId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| CatalogError::BadParameter {
            name: s.to_string(),
            reason: reason.to_string(),
        };
        let number = |t: &str| -> Result<u32, CatalogError> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(CatalogError::Unknown(s.to_string()));
            }
            t.parse().map_err(|_| bad("number out of range"))
        };
        match s {
            "2T" => return Ok(CatalogId::BinaryTetrahedral),
            "2O" => return Ok(CatalogId::BinaryOctahedral),
            "2I" => return Ok(CatalogId::BinaryIcosahedral),
            "GL2F3" => return Ok(CatalogId::GL2F3),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("2D") {
            let m = number(rest)?;
            if m % 2 != 0 || m < 4 {
                return Err(bad("binary dihedral groups are 2D<2n> with n >= 2"));
            }
            return Ok(CatalogId::BinaryDihedral(m / 2));
        }
        if let Some(rest) = s.strip_prefix('C') {
            let n = number(rest)?;
            if n == 0 {
                return Err(bad("order must be positive"));
            }
            return Ok(CatalogId::Cyclic(n));
        }
        if let Some(rest) = s.strip_prefix('S') {
            let n = number(rest)?;
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(bad("symmetric groups are supported for 1 <= n <= 8"));
            }
            return Ok(CatalogId::Symmetric(n));
        }
        Err(CatalogError::Unknown(s.to_string()))
    }
}

fn cyc(order: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(order, k)
}

fn int(order: u32, n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(order, n)
}

fn diag_root(order: u32) -> DomainElement {
    DomainElement::matrix_cyclotomic(
        order,
        2,
        vec![cyc(order, 1), int(order, 0), int(order, 0), cyc(order, -1)],
    )
}

/// Generators for the given group, in a fixed order.
pub fn generators(id: CatalogId) -> Result<Vec<DomainElement>, CatalogError> {
    let gens = match id {
        CatalogId::Cyclic(n) => {
            if n == 0 {
                return Err(CatalogError::BadParameter {
                    name: id.name(),
                    reason: "order must be positive".into(),
                });
            }
            vec![diag_root(n)]
        }
        CatalogId::BinaryDihedral(n) => {
            if n < 2 {
                return Err(CatalogError::BadParameter {
                    name: id.name(),
                    reason: "n must be at least 2".into(),
                });
            }
            let e = 2 * n;
            let s = DomainElement::matrix_cyclotomic(e, 2, vec![int(e, 0), int(e, -1), int(e, 1), int(e, 0)]);
            vec![diag_root(e), s]
        }
        CatalogId::BinaryTetrahedral => vec![
            DomainElement::matrix_mod_p(3, &[&[1, 1], &[0, 1]]),
            DomainElement::matrix_mod_p(3, &[&[0, -1], &[1, 0]]),
        ],
        CatalogId::BinaryIcosahedral => vec![
            DomainElement::matrix_mod_p(5, &[&[1, 1], &[0, 1]]),
            DomainElement::matrix_mod_p(5, &[&[0, -1], &[1, 0]]),
        ],
        CatalogId::BinaryOctahedral => {
            // Unit quaternions as SU(2) matrices over Q(zeta_8), with
            // i = diag(i, -i), j = [[0,1],[-1,0]], k = ij.
            let e = 8;
            let i = cyc(e, 2);
            let half = BigRational::new(1.into(), 2.into());
            let qi = DomainElement::matrix_cyclotomic(e, 2, vec![i.clone(), int(e, 0), int(e, 0), -&i]);
            let qj = DomainElement::matrix_cyclotomic(e, 2, vec![int(e, 0), int(e, 1), int(e, -1), int(e, 0)]);
            // (1 + i + j + k) / 2
            let one_plus_i = &int(e, 1) + &i;
            let minus_one_plus_i = &int(e, -1) + &i;
            let one_minus_i = &int(e, 1) - &i;
            let omega = DomainElement::matrix_cyclotomic(
                e,
                2,
                vec![
                    one_plus_i.scale(&half),
                    one_plus_i.scale(&half),
                    minus_one_plus_i.scale(&half),
                    one_minus_i.scale(&half),
                ],
            );
            // (1 + i) / sqrt(2), of trace sqrt(2).
            vec![qi, qj, omega, diag_root(e)]
        }
        CatalogId::GL2F3 => vec![
            DomainElement::matrix_mod_p(3, &[&[1, 1], &[0, 1]]),
            DomainElement::matrix_mod_p(3, &[&[0, 2], &[1, 0]]),
            DomainElement::matrix_mod_p(3, &[&[2, 0], &[0, 1]]),
        ],
        CatalogId::Symmetric(n) => {
            if n == 0 || n > MAX_SYMMETRIC_DEGREE {
                return Err(CatalogError::BadParameter {
                    name: id.name(),
                    reason: "symmetric groups are supported for 1 <= n <= 8".into(),
                });
            }
            let n = n as usize;
            let mut swap: Vec<u32> = (0..n as u32).collect();
            if n >= 2 {
                swap.swap(0, 1);
            }
            let cycle: Vec<u32> = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
            vec![DomainElement::permutation(swap), DomainElement::permutation(cycle)]
        }
    };
    Ok(gens)
}

/// Builds the group, using the order cap from the environment.
pub fn build(id: CatalogId) -> Result<FiniteGroup, CatalogError> {
    build_with_cap(id, order_cap_from_env())
}

pub fn build_with_cap(id: CatalogId, cap: usize) -> Result<FiniteGroup, CatalogError> {
    let g = close_generators(&generators(id)?, cap)?;
    if g.order() != id.expected_order() {
        return Err(CatalogError::WrongOrder {
            name: id.name(),
            got: g.order(),
            expected: id.expected_order(),
        });
    }
    Ok(g)
}

/// Known counts for a catalog group; `None` where no table is available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReferenceCounts {
    pub order: usize,
    pub element_classes: Option<usize>,
    pub subgroup_classes: Option<usize>,
    pub cyclic_subgroup_classes: Option<usize>,
}

pub fn reference_counts(id: CatalogId) -> ReferenceCounts {
    let [_, element_classes, subgroup_classes, cyclic_subgroup_classes] = counts_table(id);
    ReferenceCounts {
        order: id.expected_order(),
        element_classes,
        subgroup_classes,
        cyclic_subgroup_classes,
    }
}

/// (order, element classes, subgroup classes, cyclic subgroup classes).
fn counts_table(id: CatalogId) -> [Option<usize>; 4] {
    let order = Some(id.expected_order());
    match id {
        CatalogId::Cyclic(n) => {
            let d = (1..=n).filter(|k| n % k == 0).count();
            [order, Some(n as usize), Some(d), Some(d)]
        }
        CatalogId::BinaryDihedral(n) => {
            let sub = match n {
                2 => Some((6, 5)),
                3 => Some((6, 5)),
                4 => Some((9, 6)),
                5 => Some((6, 5)),
                6 => Some((12, 8)),
                7 => Some((6, 5)),
                8 => Some((12, 7)),
                _ => None,
            };
            [order, Some(n as usize + 3), sub.map(|s| s.0), sub.map(|s| s.1)]
        }
        CatalogId::BinaryTetrahedral => [order, Some(7), Some(7), Some(5)],
        CatalogId::BinaryOctahedral => [order, Some(8), Some(13), Some(7)],
        CatalogId::BinaryIcosahedral => [order, Some(9), Some(12), Some(7)],
        CatalogId::GL2F3 => [order, Some(8), Some(16), Some(7)],
        CatalogId::Symmetric(n) => {
            const PARTITIONS: [usize; 9] = [1, 1, 2, 3, 5, 7, 11, 15, 22];
            const SUBGROUP_CLASSES: [usize; 9] = [1, 1, 2, 4, 11, 19, 56, 96, 296];
            let p = PARTITIONS[n as usize];
            [order, Some(p), Some(SUBGROUP_CLASSES[n as usize]), Some(p)]
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub expected: usize,
    pub actual: usize,
}

impl ValidationCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub group: String,
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(ValidationCheck::passed)
    }
}

/// Compares a built group against the reference counts for its id.
pub fn validate_reference_counts(id: CatalogId, g: &FiniteGroup) -> Result<ValidationReport, SubgroupError> {
    let expected = counts_table(id);
    let classes = conjugacy_classes(g);
    let subgroups = enumerate_subgroup_classes(g)?;
    let actual = [
        g.order(),
        classes.len(),
        subgroups.len(),
        subgroups.iter().filter(|c| c.is_cyclic).count(),
    ];
    let names = [
        "order",
        "element classes",
        "subgroup classes",
        "cyclic subgroup classes",
    ];
    let checks = (0..4)
        .filter_map(|k| {
            expected[k].map(|e| ValidationCheck {
                name: names[k],
                expected: e,
                actual: actual[k],
            })
        })
        .collect();
    Ok(ValidationReport {
        group: id.name(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!("C7".parse::<CatalogId>(), Ok(CatalogId::Cyclic(7)));
        assert_eq!("2D12".parse::<CatalogId>(), Ok(CatalogId::BinaryDihedral(6)));
        assert_eq!("2O".parse::<CatalogId>(), Ok(CatalogId::BinaryOctahedral));
        assert_eq!("S5".parse::<CatalogId>(), Ok(CatalogId::Symmetric(5)));
        assert!(matches!("2D7".parse::<CatalogId>(), Err(CatalogError::BadParameter { .. })));
        assert!(matches!("S9".parse::<CatalogId>(), Err(CatalogError::BadParameter { .. })));
        assert!(matches!("Q8".parse::<CatalogId>(), Err(CatalogError::Unknown(_))));
        assert!(matches!("C".parse::<CatalogId>(), Err(CatalogError::Unknown(_))));
        for id in CatalogId::examples() {
            assert_eq!(id.name().parse::<CatalogId>(), Ok(id));
        }
    }

    #[test]
    fn small_orders() {
        let g = build(CatalogId::BinaryDihedral(3)).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(conjugacy_classes(&g).len(), 6);
        assert_eq!(build(CatalogId::Symmetric(3)).unwrap().order(), 6);
        assert_eq!(build(CatalogId::Cyclic(1)).unwrap().order(), 1);
    }

    #[test]
    fn exceptional_groups() {
        for (id, order) in [
            (CatalogId::BinaryTetrahedral, 24),
            (CatalogId::BinaryOctahedral, 48),
            (CatalogId::BinaryIcosahedral, 120),
            (CatalogId::GL2F3, 48),
        ] {
            let g = build(id).unwrap();
            assert_eq!(g.order(), order);
            let report = validate_reference_counts(id, &g).unwrap();
            assert!(report.all_passed(), "{report:?}");
        }
    }

    #[test]
    fn unique_central_involution() {
        for id in [
            CatalogId::BinaryTetrahedral,
            CatalogId::BinaryOctahedral,
            CatalogId::BinaryIcosahedral,
        ] {
            let g = build(id).unwrap();
            assert_eq!(g.involution_count_with_identity(), 2, "{id}");
        }
    }
}
