//! Character tables and character lattices.

mod dixon;

pub use dixon::choose_prime;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{hermite_normal_form, integer_kernel, intersect_lattices, solve_integer, Cyclotomic, IntMatrix};
use crate::burnside::fixed_point_counts;
use crate::group::{power_map, ConjClasses, FiniteGroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharacterError {
    #[error("class-sum matrices are not diagonalisable over the chosen prime field")]
    NotDiagonalizable,
    #[error("could not split a common eigenspace of dimension {dimension}")]
    CannotSplit { dimension: usize },
    #[error("lifting to exact values failed: {0}")]
    LiftInconsistent(String),
    #[error("computed table is not orthonormal (rows {0} and {1})")]
    NotOrthonormal(usize, usize),
    #[error("Frobenius-Schur indicator {0} is not -1, 0 or 1")]
    BadIndicator(String),
    #[error("character {0} has indicator 0 but no distinct complex conjugate")]
    MissingConjugate(usize),
    #[error("{found} rational basis vectors but {expected} rational classes; Schur indices are not all 1 or 2 here")]
    RationalCountMismatch { found: usize, expected: usize },
    #[error("inner product {0} is not an integer")]
    NonIntegralInnerProduct(String),
    #[error("class function does not lie in the {0} lattice")]
    NotInLattice(String),
}

/// A function on conjugacy classes with cyclotomic values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn from_integers(order: u32, values: &[BigInt]) -> Self {
        ClassFunction::new(
            values
                .iter()
                .map(|v| Cyclotomic::from_integer(order, v.clone()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value at the identity class, when it is a rational integer.
    pub fn degree(&self) -> Option<BigInt> {
        self.values.first().and_then(Cyclotomic::to_integer)
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction::new(self.values.iter().map(Cyclotomic::conj).collect())
    }

    pub fn galois(&self, a: i64) -> ClassFunction {
        ClassFunction::new(self.values.iter().map(|v| v.galois(a)).collect())
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction::new(self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: &BigInt) -> ClassFunction {
        let q = BigRational::from_integer(k.clone());
        ClassFunction::new(self.values.iter().map(|v| v.scale(&q)).collect())
    }

    /// All values as rational integers, if they are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(Cyclotomic::to_integer).collect()
    }

    pub fn is_integer_valued(&self) -> bool {
        self.to_integers().is_some()
    }

    /// Integer combination `sum_i c_i f_i`.
    pub fn combination(order: u32, coeffs: &[BigInt], funcs: &[ClassFunction]) -> ClassFunction {
        let len = funcs.first().map_or(0, ClassFunction::len);
        let mut values = vec![Cyclotomic::zero(order); len];
        for (c, f) in coeffs.iter().zip(funcs) {
            if c.is_zero() {
                continue;
            }
            let q = BigRational::from_integer(c.clone());
            for (v, x) in values.iter_mut().zip(&f.values) {
                *v = &*v + &x.scale(&q);
            }
        }
        ClassFunction::new(values)
    }
}

/// `(1/|G|) sum_c |c| chi(c) conj(psi(c))`, exactly.
pub fn inner_product_rational(classes: &ConjClasses, group_order: usize, chi: &ClassFunction, psi: &ClassFunction) -> Cyclotomic {
    let order = chi.values.first().map_or(1, Cyclotomic::order);
    let mut s = Cyclotomic::zero(order);
    for (c, (a, b)) in chi.values.iter().zip(&psi.values).enumerate() {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let term = a * &b.conj();
        s = &s + &term.scale(&BigRational::from_integer(classes.sizes[c].into()));
    }
    s.scale(&BigRational::new(BigInt::one(), BigInt::from(group_order)))
}

/// Inner product of two (virtual) characters; must be a rational integer.
pub fn inner_product(classes: &ConjClasses, group_order: usize, chi: &ClassFunction, psi: &ClassFunction) -> Result<BigInt, CharacterError> {
    let v = inner_product_rational(classes, group_order, chi, psi);
    v.to_integer()
        .ok_or_else(|| CharacterError::NonIntegralInnerProduct(v.pretty()))
}

/// Permutation character of `G/H`: the number of fixed cosets per class.
pub fn permutation_character(g: &FiniteGroup, classes: &ConjClasses, h: &[usize]) -> ClassFunction {
    let counts = fixed_point_counts(g, classes, h);
    let e = g.exponent();
    ClassFunction::new(counts.into_iter().map(|c| Cyclotomic::from_integer(e, c)).collect())
}

/// The complex irreducible characters with their Frobenius-Schur indicators.
#[derive(Clone, Debug)]
pub struct IrreducibleTable {
    pub group_order: usize,
    /// Exponent of the group; every value lives in `Q(zeta_exponent)`.
    pub exponent: u32,
    pub class_sizes: Vec<usize>,
    pub class_labels: Vec<String>,
    pub chars: Vec<ClassFunction>,
    pub degrees: Vec<u64>,
    pub fs_indicators: Vec<i8>,
    /// Number of classes of cyclic subgroups, computed from power maps.
    pub rational_class_count: usize,
    classes: ConjClasses,
}

impl IrreducibleTable {
    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn classes(&self) -> &ConjClasses {
        &self.classes
    }

    pub fn inner_product(&self, chi: &ClassFunction, psi: &ClassFunction) -> Result<BigInt, CharacterError> {
        inner_product(&self.classes, self.group_order, chi, psi)
    }

    /// Index of the complex conjugate of each irreducible.
    pub fn conjugate_index(&self) -> Vec<usize> {
        self.chars
            .iter()
            .map(|c| {
                let cc = c.conj();
                self.chars.iter().position(|d| *d == cc).expect("table closed under conjugation")
            })
            .collect()
    }

    /// Coordinates of a class function over the irreducibles.
    pub fn decompose_complex(&self, chi: &ClassFunction) -> Result<Vec<BigInt>, CharacterError> {
        self.chars.iter().map(|rho| self.inner_product(chi, rho)).collect()
    }
}

/// Classes of cyclic subgroups correspond to classes of elements modulo
/// `x ~ x^a` for units `a`.
fn rational_classes(g: &FiniteGroup, classes: &ConjClasses) -> usize {
    let e = g.exponent() as i64;
    let mut label: Vec<usize> = (0..classes.len()).collect();
    for a in 2..e {
        if a.gcd(&e) != 1 {
            continue;
        }
        let pm = power_map(g, classes, a);
        for (c, &d) in pm.iter().enumerate() {
            let (x, y) = (find(&mut label, c), find(&mut label, d));
            if x != y {
                label[x.max(y)] = x.min(y);
            }
        }
    }
    (0..classes.len()).filter(|&c| find(&mut label, c) == c).count()
}

fn find(label: &mut [usize], mut x: usize) -> usize {
    while label[x] != x {
        label[x] = label[label[x]];
        x = label[x];
    }
    x
}

fn row_cmp(a: &ClassFunction, b: &ClassFunction) -> Ordering {
    for (x, y) in a.values.iter().zip(&b.values) {
        match x.cmp_coeffs(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

/// The complex character table. Rows are sorted by degree, with the
/// trivial character first and ties broken by descending coordinate order.
pub fn complex_irreducibles(g: &FiniteGroup, classes: &ConjClasses) -> Result<IrreducibleTable, CharacterError> {
    let mut chars = dixon::dixon_schneider(g, classes)?;
    let degree = |c: &ClassFunction| c.degree().and_then(|d| d.to_u64()).unwrap_or(0);
    let trivial = |c: &ClassFunction| c.values.iter().all(|v| *v == Cyclotomic::one(1));
    chars.sort_by(|a, b| {
        degree(a)
            .cmp(&degree(b))
            .then_with(|| trivial(b).cmp(&trivial(a)))
            .then_with(|| row_cmp(a, b))
    });
    let n = g.order();
    for i in 0..chars.len() {
        for j in 0..=i {
            let ip = inner_product_rational(classes, n, &chars[i], &chars[j]);
            let expect = if i == j { Cyclotomic::one(1) } else { Cyclotomic::zero(1) };
            if ip != expect {
                return Err(CharacterError::NotOrthonormal(i, j));
            }
        }
    }
    let squares = power_map(g, classes, 2);
    let fs_indicators = chars
        .iter()
        .map(|c| fs_indicator_with(classes, n, &squares, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IrreducibleTable {
        group_order: n,
        exponent: g.exponent(),
        class_sizes: classes.sizes.clone(),
        class_labels: classes.labels.clone(),
        degrees: chars.iter().map(degree).collect(),
        chars,
        fs_indicators,
        rational_class_count: rational_classes(g, classes),
        classes: classes.clone(),
    })
}

fn fs_indicator_with(classes: &ConjClasses, n: usize, squares: &[usize], chi: &ClassFunction) -> Result<i8, CharacterError> {
    let order = chi.values[0].order();
    let mut s = Cyclotomic::zero(order);
    for c in 0..classes.len() {
        let v = &chi.values[squares[c]];
        s = &s + &v.scale(&BigRational::from_integer(classes.sizes[c].into()));
    }
    let s = s.scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
    match s.to_integer().and_then(|v| v.to_i8()) {
        Some(v @ -1..=1) => Ok(v),
        _ => Err(CharacterError::BadIndicator(s.pretty())),
    }
}

/// `(1/|G|) sum_g chi(g^2)`: +1 real, 0 complex, -1 quaternionic type.
pub fn fs_indicator(g: &FiniteGroup, classes: &ConjClasses, chi: &ClassFunction) -> Result<i8, CharacterError> {
    let squares = power_map(g, classes, 2);
    fs_indicator_with(classes, g.order(), &squares, chi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FieldTag {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
    /// Integer-valued virtual characters.
    #[serde(rename = "INT")]
    Integer,
    /// Integer-valued characters of real virtual representations.
    #[serde(rename = "INT_R")]
    IntegerReal,
}

impl FieldTag {
    pub fn short(&self) -> &'static str {
        match self {
            FieldTag::Rational => "q",
            FieldTag::Real => "r",
            FieldTag::Complex => "c",
            FieldTag::Integer => "int",
            FieldTag::IntegerReal => "int-r",
        }
    }
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FieldTag::Rational => "Q",
            FieldTag::Real => "R",
            FieldTag::Complex => "C",
            FieldTag::Integer => "INT",
            FieldTag::IntegerReal => "INT_R",
        })
    }
}

/// A sublattice of the complex representation ring, given by integer
/// coordinates over the irreducibles.
#[derive(Clone, Debug)]
pub struct CharacterLattice {
    pub tag: FieldTag,
    pub names: Vec<String>,
    pub basis: Vec<ClassFunction>,
    /// Row `i` expresses basis vector `i` over the complex irreducibles.
    pub coords_in_complex: IntMatrix,
}

impl CharacterLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn from_coords(tag: FieldTag, table: &IrreducibleTable, coords: IntMatrix) -> Self {
        let names = (0..coords.rows())
            .map(|i| combination_name(coords.row(i)))
            .collect();
        let basis = (0..coords.rows())
            .map(|i| ClassFunction::combination(table.exponent, coords.row(i), &table.chars))
            .collect();
        CharacterLattice {
            tag,
            names,
            basis,
            coords_in_complex: coords,
        }
    }

    /// Integer coordinates of a virtual character (given over the complex
    /// irreducibles) in this lattice's basis.
    pub fn coordinates_of(&self, complex_coords: &[BigInt]) -> Result<Vec<BigInt>, CharacterError> {
        solve_integer(&self.coords_in_complex, complex_coords)
            .ok_or_else(|| CharacterError::NotInLattice(self.tag.to_string()))
    }
}

/// Name of an integer combination of irreducibles, e.g. `rho2+rho3`, `2rho5`.
pub fn combination_name(coords: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&format!("rho{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn unit_rows(k: usize, rows: impl IntoIterator<Item = Vec<(usize, i64)>>) -> IntMatrix {
    let mut m = IntMatrix::zeros(0, k);
    for entries in rows {
        let mut v = vec![BigInt::zero(); k];
        for (i, c) in entries {
            v[i] += c;
        }
        m.push_row(v);
    }
    m
}

pub fn complex_basis(table: &IrreducibleTable) -> CharacterLattice {
    CharacterLattice::from_coords(FieldTag::Complex, table, IntMatrix::identity(table.len()))
}

/// One vector per real irreducible: `chi` (real type), `chi + conj(chi)`
/// (complex type, once per pair), `2 chi` (quaternionic type).
pub fn real_irreducible_basis(table: &IrreducibleTable) -> Result<CharacterLattice, CharacterError> {
    let k = table.len();
    let conj = table.conjugate_index();
    let mut rows = Vec::new();
    for i in 0..k {
        match table.fs_indicators[i] {
            1 => rows.push(vec![(i, 1)]),
            -1 => rows.push(vec![(i, 2)]),
            _ => {
                if conj[i] == i {
                    return Err(CharacterError::MissingConjugate(i));
                }
                if conj[i] > i {
                    rows.push(vec![(i, 1), (conj[i], 1)]);
                }
            }
        }
    }
    Ok(CharacterLattice::from_coords(FieldTag::Real, table, unit_rows(k, rows)))
}

/// One vector per Galois orbit, doubled for quaternionic orbits.
pub fn rational_irreducible_basis(table: &IrreducibleTable) -> Result<CharacterLattice, CharacterError> {
    let k = table.len();
    let units = Cyclotomic::galois_exponents(table.exponent);
    let mut seen = vec![false; k];
    let mut rows = Vec::new();
    for i in 0..k {
        if seen[i] {
            continue;
        }
        let mut orbit = Vec::new();
        for &a in &units {
            let img = table.chars[i].galois(a);
            let j = table
                .chars
                .iter()
                .position(|c| *c == img)
                .expect("table closed under Galois action");
            if !seen[j] {
                seen[j] = true;
                orbit.push(j);
            }
        }
        orbit.sort_unstable();
        let mult = if table.fs_indicators[i] == -1 { 2 } else { 1 };
        rows.push(orbit.into_iter().map(|j| (j, mult)).collect());
    }
    if rows.len() != table.rational_class_count {
        return Err(CharacterError::RationalCountMismatch {
            found: rows.len(),
            expected: table.rational_class_count,
        });
    }
    Ok(CharacterLattice::from_coords(FieldTag::Rational, table, unit_rows(k, rows)))
}

/// All integer combinations of irreducibles whose values are rational
/// integers at every class.
pub fn integer_character_sublattice(table: &IrreducibleTable) -> CharacterLattice {
    let k = table.len();
    // One constraint per (class, non-constant power-basis coordinate).
    let mut constraints = IntMatrix::zeros(0, k);
    let nclasses = table.class_sizes.len();
    let phi = table.chars.first().map_or(1, |c| c.values[0].coeffs().len());
    for c in 0..nclasses {
        for j in 1..phi {
            let row: Vec<BigInt> = table
                .chars
                .iter()
                .map(|chi| {
                    let v = &chi.values[c].coeffs()[j];
                    debug_assert!(v.is_integer(), "character values are algebraic integers");
                    v.to_integer()
                })
                .collect();
            if row.iter().any(|x| !x.is_zero()) {
                constraints.push_row(row);
            }
        }
    }
    let coords = if constraints.rows() == 0 {
        IntMatrix::identity(k)
    } else {
        integer_kernel(&constraints)
    };
    CharacterLattice::from_coords(FieldTag::Integer, table, coords)
}

/// Integer-valued characters of real virtual representations: the
/// intersection of the real and integer lattices.
pub fn integer_real_sublattice(real: &CharacterLattice, int: &CharacterLattice, table: &IrreducibleTable) -> CharacterLattice {
    let coords = intersect_lattices(&real.coords_in_complex, &int.coords_in_complex);
    CharacterLattice::from_coords(FieldTag::IntegerReal, table, hermite_normal_form(&coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, CatalogId};
    use crate::group::conjugacy_classes;

    fn table(id: CatalogId) -> IrreducibleTable {
        let g = build(id).unwrap();
        let c = conjugacy_classes(&g);
        complex_irreducibles(&g, &c).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn c2_table() {
        let t = table(CatalogId::Cyclic(2));
        assert_eq!(t.chars[0].to_integers(), Some(ints(&[1, 1])));
        assert_eq!(t.chars[1].to_integers(), Some(ints(&[1, -1])));
        let r = real_irreducible_basis(&t).unwrap();
        assert_eq!(r.coords_in_complex, IntMatrix::identity(2));
    }

    #[test]
    fn q8_table() {
        let t = table(CatalogId::BinaryDihedral(2));
        assert_eq!(t.degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(t.chars[4].to_integers(), Some(ints(&[2, -2, 0, 0, 0])));
        assert_eq!(t.fs_indicators, vec![1, 1, 1, 1, -1]);
        let q = rational_irreducible_basis(&t).unwrap();
        assert_eq!(q.names, vec!["rho1", "rho2", "rho3", "rho4", "2rho5"]);
        assert_eq!(integer_character_sublattice(&t).rank(), 5);
    }

    #[test]
    fn c3_lattices() {
        let t = table(CatalogId::Cyclic(3));
        assert_eq!(t.fs_indicators, vec![1, 0, 0]);
        let r = real_irreducible_basis(&t).unwrap();
        assert_eq!(r.names, vec!["rho1", "rho2+rho3"]);
        let q = rational_irreducible_basis(&t).unwrap();
        assert_eq!(q.names, vec!["rho1", "rho2+rho3"]);
        let int = integer_character_sublattice(&t);
        assert_eq!(int.coords_in_complex, IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 1]]));
    }

    #[test]
    fn icosahedral_golden_ratio() {
        let t = table(CatalogId::BinaryIcosahedral);
        assert_eq!(t.len(), 9);
        assert_eq!(t.degrees.iter().map(|d| d * d).sum::<u64>(), 120);
        // The two faithful 2-dimensional characters take the values
        // phi - 1 and -phi on the classes of order 5 (in some order).
        let z5 = |k| Cyclotomic::root_of_unity(5, k);
        let phi = -&(&z5(2) + &z5(3));
        let phi_minus_one = &phi - &Cyclotomic::one(5);
        let minus_phi = -&phi;
        let fives: Vec<usize> = (0..9).filter(|&c| t.classes().element_orders[c] == 5).collect();
        let twos: Vec<&ClassFunction> = t
            .chars
            .iter()
            .filter(|c| c.degree() == Some(BigInt::from(2)))
            .collect();
        assert_eq!(twos.len(), 2);
        for chi in twos {
            let vals = [chi.values[fives[0]].clone(), chi.values[fives[1]].clone()];
            assert!(vals.contains(&phi_minus_one) && vals.contains(&minus_phi));
        }
        let q = rational_irreducible_basis(&t).unwrap();
        assert_eq!(q.rank(), 7);
    }

    #[test]
    fn permutation_characters() {
        let g = build(CatalogId::Cyclic(4)).unwrap();
        let c = conjugacy_classes(&g);
        let h = g.generated_subgroup(&[c.members[1][0]]);
        assert_eq!(h.len(), 2);
        let chi = permutation_character(&g, &c, &h);
        // classes ordered by element order: 1, -1, then i, -i
        assert_eq!(chi.to_integers(), Some(ints(&[2, 2, 0, 0])));
        let full: Vec<usize> = (0..g.order()).collect();
        let one = permutation_character(&g, &c, &full);
        let t = complex_irreducibles(&g, &c).unwrap();
        assert_eq!(inner_product(&c, 4, &one, &t.chars[0]).unwrap(), BigInt::one());
        assert_eq!(inner_product(&c, 4, &chi, &one).unwrap(), BigInt::one());
    }

    #[test]
    fn names() {
        assert_eq!(combination_name(&ints(&[0, 2, -1, 0])), "2rho2-rho3");
        assert_eq!(combination_name(&ints(&[0, 0])), "0");
    }
}
