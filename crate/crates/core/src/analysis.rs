//! End-to-end computation of the image, kernel rank and cokernels of the
//! linearisation map from the Burnside ring to the representation rings.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{lattice_quotient, IntMatrix, LatticeQuotient};
use crate::burnside::{image_basis, structure_constants, BurnsideError, BurnsideStructure, ImageBasis};
use crate::catalog::{build_with_cap, CatalogError, CatalogId};
use crate::characters::{
    combination_name, complex_basis, complex_irreducibles, integer_character_sublattice, integer_real_sublattice,
    rational_irreducible_basis, real_irreducible_basis, CharacterError, CharacterLattice,
    ClassFunction, FieldTag, IrreducibleTable,
};
use crate::group::{close_generators, conjugacy_classes, order_cap_from_env, ConjClasses, DomainElement, FiniteGroup, GroupError};
use crate::subgroups::{marks_for, MarksTable, SubgroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("[catalog] {0}")]
    Catalog(#[from] CatalogError),
    #[error("[group] {0}")]
    Group(#[from] GroupError),
    #[error("[subgroups] {0}")]
    Subgroups(#[from] SubgroupError),
    #[error("[burnside] {0}")]
    Burnside(#[from] BurnsideError),
    #[error("[characters] {0}")]
    Characters(#[from] CharacterError),
    #[error("[image] {0}")]
    Image(String),
}

impl AnalysisError {
    pub fn stage(&self) -> &'static str {
        match self {
            AnalysisError::Catalog(_) => "catalog",
            AnalysisError::Group(_) => "group",
            AnalysisError::Subgroups(_) => "subgroups",
            AnalysisError::Burnside(_) => "burnside",
            AnalysisError::Characters(_) => "characters",
            AnalysisError::Image(_) => "image",
        }
    }
}

/// Where the group comes from.
#[derive(Clone, Debug)]
pub enum GroupSource {
    Catalog(CatalogId),
    Generators { name: String, gens: Vec<DomainElement> },
}

impl GroupSource {
    pub fn name(&self) -> String {
        match self {
            GroupSource::Catalog(id) => id.name(),
            GroupSource::Generators { name, .. } => name.clone(),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, AnalysisError> {
        let cap = order_cap_from_env();
        Ok(match self {
            GroupSource::Catalog(id) => build_with_cap(*id, cap)?,
            GroupSource::Generators { gens, .. } => close_generators(gens, cap)?,
        })
    }
}

/// Parses a comma separated field list such as `q,r,c,int`.
pub fn parse_fields(s: &str) -> Result<BTreeSet<FieldTag>, String> {
    let mut out = BTreeSet::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.to_ascii_lowercase().as_str() {
            "q" => {
                out.insert(FieldTag::Rational);
            }
            "r" => {
                out.insert(FieldTag::Real);
            }
            "c" => {
                out.insert(FieldTag::Complex);
            }
            "int" => {
                out.insert(FieldTag::Integer);
                out.insert(FieldTag::IntegerReal);
            }
            other => return Err(format!("unknown field '{other}' (expected q, r, c or int)")),
        }
    }
    if out.is_empty() {
        return Err("empty field list".into());
    }
    Ok(out)
}

pub fn all_fields() -> BTreeSet<FieldTag> {
    [
        FieldTag::Rational,
        FieldTag::Real,
        FieldTag::Complex,
        FieldTag::Integer,
        FieldTag::IntegerReal,
    ]
    .into_iter()
    .collect()
}

/// The cokernel in one lattice together with a readable presentation.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub tag: FieldTag,
    pub quotient: LatticeQuotient,
    /// Lattice basis names (the ambient generators).
    pub basis_names: Vec<String>,
    /// Images of the `V_i`, written over the irreducibles.
    pub relation_names: Vec<String>,
    /// Presentation left after cancelling every relation that is a single
    /// basis vector.
    pub reduced_basis: Vec<String>,
    pub reduced_relations: Vec<String>,
    /// Torsion generators followed by free generators, each as
    /// `(name of the corresponding virtual character, summand order)`; order 0 means free.
    pub generators: Vec<(Vec<(String, BigInt)>, u64)>,
}

impl Cokernel {
    pub fn is_zero(&self) -> bool {
        self.quotient.is_trivial()
    }

    /// E.g. `Z^2 + (Z/2)^3`, or `0`.
    pub fn structure(&self) -> String {
        let mut parts = Vec::new();
        match self.quotient.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for f in self.quotient.factors_u64() {
            *counts.entry(f).or_default() += 1;
        }
        for (f, c) in counts {
            if c == 1 {
                parts.push(format!("Z/{f}"));
            } else {
                parts.push(format!("(Z/{f})^{c}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// `Z[basis]/Z[relations]` after cancelling unit relations, or `0`.
    pub fn presentation(&self) -> String {
        if self.reduced_basis.is_empty() {
            return "0".into();
        }
        let rel = if self.reduced_relations.is_empty() {
            "0".to_string()
        } else {
            self.reduced_relations.join(", ")
        };
        format!("Z[{}]/Z[{}]", self.reduced_basis.join(", "), rel)
    }
}

/// Everything computed for one group.
#[derive(Clone, Debug)]
pub struct BetaReport {
    pub group: String,
    pub order: usize,
    pub exponent: u32,
    pub classes: ConjClasses,
    pub marks: MarksTable,
    pub structure: BurnsideStructure,
    pub basis: ImageBasis,
    pub image_characters: Vec<Vec<BigInt>>,
    pub table: IrreducibleTable,
    pub lattices: BTreeMap<FieldTag, CharacterLattice>,
    /// Coordinates of each `V_i` over the complex irreducibles.
    pub v_complex: Vec<Vec<BigInt>>,
    /// Coordinates of each `V_i` in each requested lattice basis.
    pub v_coords: BTreeMap<FieldTag, Vec<Vec<BigInt>>>,
    pub cokernels: BTreeMap<FieldTag, Cokernel>,
    pub kernel_rank: usize,
    /// Whether each `V_i` has non-negative coordinates over the irreducibles.
    pub v_actual: Vec<bool>,
}

impl BetaReport {
    pub fn subgroup_class_count(&self) -> usize {
        self.marks.len()
    }

    pub fn cyclic_class_count(&self) -> usize {
        self.marks.cyclic_count()
    }

    pub fn surjective(&self, tag: FieldTag) -> Option<bool> {
        self.cokernels.get(&tag).map(Cokernel::is_zero)
    }
}

/// `chi_{V_i}(c) = sum_l U_il |(G/H_l)^c|`, checked to be orthogonal with
/// norms `d_i`.
pub fn image_characters(
    g: &FiniteGroup,
    classes: &ConjClasses,
    marks: &MarksTable,
    basis: &ImageBasis,
) -> Result<Vec<Vec<BigInt>>, AnalysisError> {
    let perm: Vec<Vec<u64>> = marks
        .classes
        .iter()
        .map(|c| crate::burnside::fixed_point_counts(g, classes, &c.representative))
        .collect();
    let k = classes.len();
    let chars: Vec<Vec<BigInt>> = basis
        .v_defs
        .iter()
        .map(|v| {
            (0..k)
                .map(|c| {
                    v.iter()
                        .zip(&perm)
                        .map(|(u, p)| u * BigInt::from(p[c]))
                        .sum()
                })
                .collect()
        })
        .collect();
    let n = BigInt::from(g.order());
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate().take(i + 1) {
            let s: BigInt = (0..k)
                .map(|c| BigInt::from(classes.sizes[c]) * &a[c] * &b[c])
                .sum();
            let expect = if i == j { &basis.norms[i] * &n } else { BigInt::zero() };
            if s != expect {
                return Err(AnalysisError::Image(format!(
                    "image characters {i} and {j} have inner product {s}/{n}"
                )));
            }
        }
    }
    Ok(chars)
}

/// Integer coordinates of `chi` in `lattice`.
pub fn decompose(table: &IrreducibleTable, chi: &ClassFunction, lattice: &CharacterLattice) -> Result<Vec<BigInt>, AnalysisError> {
    let complex = decompose_over_irreducibles(table, chi)?;
    Ok(lattice.coordinates_of(&complex)?)
}

/// Cokernel of the image (given over the irreducibles) inside `lattice`.
pub fn cokernel(lattice: &CharacterLattice, v_complex: &[Vec<BigInt>]) -> Result<(Cokernel, Vec<Vec<BigInt>>), AnalysisError> {
    let mut rel = IntMatrix::zeros(0, lattice.rank());
    let mut coords = Vec::new();
    for v in v_complex {
        let c = lattice.coordinates_of(v)?;
        rel.push_row(c.clone());
        coords.push(c);
    }
    let quotient = lattice_quotient(lattice.rank(), &rel);
    // Generators are only defined up to sign; make the leading coefficient positive.
    let as_terms = |gen: &[BigInt]| -> Vec<(String, BigInt)> {
        let flip = gen.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        let gen: Vec<BigInt> = gen.iter().map(|c| if flip { -c } else { c.clone() }).collect();
        gen.iter()
            .zip(&lattice.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| (name.clone(), c.clone()))
            .collect()
    };
    let mut generators = Vec::new();
    for (gen, f) in quotient.torsion_generators.iter().zip(quotient.factors_u64()) {
        generators.push((as_terms(gen), f));
    }
    for gen in &quotient.free_generators {
        generators.push((as_terms(gen), 0));
    }
    let relation_names = v_complex.iter().map(|v| combination_name(v)).collect();
    let (keep, rows) = cancel_unit_relations(lattice.rank(), &coords);
    let reduced_basis = keep.iter().map(|&k| lattice.names[k].clone()).collect();
    let reduced_relations = rows
        .iter()
        .map(|r| {
            let mut complex = vec![BigInt::zero(); lattice.coords_in_complex.cols()];
            for (c, &k) in r.iter().zip(&keep) {
                for (t, x) in complex.iter_mut().zip(lattice.coords_in_complex.row(k)) {
                    *t += c * x;
                }
            }
            combination_name(&complex)
        })
        .collect();
    Ok((
        Cokernel {
            tag: lattice.tag,
            quotient,
            basis_names: lattice.names.clone(),
            relation_names,
            reduced_basis,
            reduced_relations,
            generators,
        },
        coords,
    ))
}

/// Repeatedly quotients out relations of the form `+-e_k`. Returns the
/// surviving basis indices and the remaining nonzero relations over them.
fn cancel_unit_relations(rank: usize, rows: &[Vec<BigInt>]) -> (Vec<usize>, Vec<Vec<BigInt>>) {
    let mut keep: Vec<usize> = (0..rank).collect();
    let mut rows: Vec<Vec<BigInt>> = rows.to_vec();
    loop {
        rows.retain(|r| r.iter().any(|c| !c.is_zero()));
        let unit = rows.iter().find_map(|r| {
            let nz: Vec<usize> = (0..r.len()).filter(|&i| !r[i].is_zero()).collect();
            (nz.len() == 1 && r[nz[0]].abs() == BigInt::from(1)).then_some(nz[0])
        });
        let Some(col) = unit else { break };
        keep.remove(col);
        for r in rows.iter_mut() {
            r.remove(col);
        }
    }
    rows.sort_by(|a, b| {
        let lead = |r: &[BigInt]| r.iter().position(|c| !c.is_zero());
        lead(a).cmp(&lead(b)).then_with(|| a.cmp(b))
    });
    rows.dedup();
    (keep, rows)
}

/// Runs the whole pipeline for a group.
pub fn analyze(source: &GroupSource, fields: &BTreeSet<FieldTag>) -> Result<BetaReport, AnalysisError> {
    let g = source.build()?;
    analyze_group(&source.name(), &g, fields)
}

pub fn analyze_group(name: &str, g: &FiniteGroup, fields: &BTreeSet<FieldTag>) -> Result<BetaReport, AnalysisError> {
    let classes = conjugacy_classes(g);
    let marks = marks_for(g)?;
    let structure = structure_constants(&marks)?;
    let basis = image_basis(&structure)?;
    let image = image_characters(g, &classes, &marks, &basis)?;
    let table = complex_irreducibles(g, &classes)?;

    let e = table.exponent;
    let v_complex: Vec<Vec<BigInt>> = image
        .iter()
        .map(|v| decompose_over_irreducibles(&table, &ClassFunction::from_integers(e, v)))
        .collect::<Result<_, _>>()?;
    let v_actual = v_complex
        .iter()
        .map(|v| v.iter().all(|c| !c.is_negative()))
        .collect();

    let mut lattices = BTreeMap::new();
    let need_real = fields.contains(&FieldTag::Real) || fields.contains(&FieldTag::IntegerReal);
    let need_int = fields.contains(&FieldTag::Integer) || fields.contains(&FieldTag::IntegerReal);
    if fields.contains(&FieldTag::Complex) {
        lattices.insert(FieldTag::Complex, complex_basis(&table));
    }
    if fields.contains(&FieldTag::Rational) {
        lattices.insert(FieldTag::Rational, rational_irreducible_basis(&table)?);
    }
    let real = if need_real { Some(real_irreducible_basis(&table)?) } else { None };
    let int = if need_int { Some(integer_character_sublattice(&table)) } else { None };
    if fields.contains(&FieldTag::IntegerReal) {
        let (r, i) = (real.as_ref().unwrap(), int.as_ref().unwrap());
        lattices.insert(FieldTag::IntegerReal, integer_real_sublattice(r, i, &table));
    }
    if fields.contains(&FieldTag::Real) {
        lattices.insert(FieldTag::Real, real.unwrap());
    }
    if fields.contains(&FieldTag::Integer) {
        lattices.insert(FieldTag::Integer, int.unwrap());
    }

    let mut cokernels = BTreeMap::new();
    let mut v_coords = BTreeMap::new();
    for (tag, lattice) in &lattices {
        let (coker, coords) = cokernel(lattice, &v_complex)?;
        cokernels.insert(*tag, coker);
        v_coords.insert(*tag, coords);
    }

    let kernel_rank = marks.len() - basis.rank();
    if let Some(q) = cokernels.get(&FieldTag::Rational) {
        if q.quotient.free_rank == 0 && kernel_rank != marks.len() - marks.cyclic_count() {
            return Err(AnalysisError::Image(format!(
                "kernel rank {kernel_rank} disagrees with the cyclic subgroup count"
            )));
        }
    }

    Ok(BetaReport {
        group: name.to_string(),
        order: g.order(),
        exponent: e,
        classes,
        marks,
        structure,
        basis,
        image_characters: image,
        table,
        lattices,
        v_complex,
        v_coords,
        cokernels,
        kernel_rank,
        v_actual,
    })
}

fn decompose_over_irreducibles(table: &IrreducibleTable, chi: &ClassFunction) -> Result<Vec<BigInt>, AnalysisError> {
    let complex = table.decompose_complex(chi)?;
    let rebuilt = ClassFunction::combination(table.exponent, &complex, &table.chars);
    if rebuilt != *chi {
        return Err(AnalysisError::Image("class function is not a virtual character".into()));
    }
    Ok(complex)
}

/// Number of subgroup classes minus the rank of the image.
pub fn kernel_rank(report: &BetaReport) -> usize {
    report.kernel_rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(id: CatalogId) -> BetaReport {
        analyze(&GroupSource::Catalog(id), &all_fields()).unwrap()
    }

    fn factors(r: &BetaReport, tag: FieldTag) -> (usize, Vec<u64>) {
        let q = &r.cokernels[&tag].quotient;
        (q.free_rank, q.factors_u64())
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quaternion_group() {
        let r = run(CatalogId::BinaryDihedral(2));
        assert_eq!(r.kernel_rank, 1);
        assert_eq!(factors(&r, FieldTag::Complex), (0, vec![2]));
        assert_eq!(factors(&r, FieldTag::Real), (0, vec![]));
        assert_eq!(factors(&r, FieldTag::Rational), (0, vec![]));
        // The last basis vector is twice the 2-dimensional irreducible.
        assert!(r.image_characters.contains(&ints(&[4, -4, 0, 0, 0])));
        assert!(r.v_complex.contains(&ints(&[0, 0, 0, 0, 2])));
        let gens = &r.cokernels[&FieldTag::Complex].generators;
        assert_eq!(gens, &vec![(vec![("rho5".to_string(), BigInt::from(1))], 2)]);
    }

    #[test]
    fn trivial_group() {
        let r = run(CatalogId::Cyclic(1));
        assert_eq!(r.kernel_rank, 0);
        assert!(r.cokernels.values().all(Cokernel::is_zero));
    }

    #[test]
    fn c3_and_c4() {
        let r = run(CatalogId::Cyclic(3));
        assert_eq!(factors(&r, FieldTag::Complex), (1, vec![]));
        assert_eq!(factors(&r, FieldTag::Real), (0, vec![]));
        assert!(r.cokernels[&FieldTag::Integer].is_zero());
        let r = run(CatalogId::Cyclic(4));
        assert_eq!(factors(&r, FieldTag::Complex), (1, vec![]));
    }

    #[test]
    fn icosahedral() {
        let r = run(CatalogId::BinaryIcosahedral);
        assert_eq!(r.kernel_rank, 5);
        assert_eq!(factors(&r, FieldTag::Complex), (2, vec![2, 2, 2]));
        assert_eq!(factors(&r, FieldTag::Real), (2, vec![]));
        assert_eq!(factors(&r, FieldTag::Rational), (0, vec![]));
        assert!(r.cokernels[&FieldTag::IntegerReal].is_zero());
    }

    #[test]
    fn field_parsing() {
        let f = parse_fields("q, c").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(parse_fields("int").unwrap().len(), 2);
        assert!(parse_fields("x").is_err());
        assert!(parse_fields("").is_err());
    }
}
