//! Serializable view of an analysis, shared by the JSON, text and LaTeX
//! emitters.

use std::collections::BTreeMap;

use burnside::analysis::BetaReport;
use burnside::arith::Cyclotomic;
use burnside::characters::{CharacterLattice, ClassFunction, FieldTag};
use burnside::group::ConjClasses;
use burnside::subgroups::MarksTable;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocumentError {
    #[error("integer {0} does not fit in 64 bits")]
    Overflow(BigInt),
}

fn int(x: &BigInt) -> Result<i64, DocumentError> {
    x.to_i64().ok_or_else(|| DocumentError::Overflow(x.clone()))
}

fn ints(xs: &[BigInt]) -> Result<Vec<i64>, DocumentError> {
    xs.iter().map(int).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub label: String,
    pub size: u64,
    pub element_order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupEntry {
    pub label: String,
    pub order: u64,
    pub cosets: u64,
    pub conjugates: u64,
    pub cyclic: bool,
}

/// `left x right = sum coeff * label`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<(String, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularForm {
    /// Subgroup labels of the columns, in reduction order.
    pub columns: Vec<String>,
    pub h_tilde: Vec<Vec<i64>>,
    pub u_tilde: Vec<Vec<i64>>,
    pub norms: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageEntry {
    pub name: String,
    /// Coefficients over the subgroup classes, in the order of `subgroups`.
    pub definition: Vec<i64>,
    pub values: Vec<i64>,
    /// Coordinates over the complex irreducibles.
    pub irreducible_coordinates: Vec<i64>,
    pub decomposition: String,
    /// True when every coordinate is non-negative.
    pub actual: bool,
}

/// Exact cyclotomic number in its smallest field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicValue {
    pub order: u32,
    /// Rational power-basis coordinates, e.g. `"-1/2"`.
    pub coefficients: Vec<String>,
    pub pretty: String,
}

impl CyclotomicValue {
    pub fn new(c: &Cyclotomic) -> Self {
        let r = c.reduced();
        CyclotomicValue {
            order: r.order(),
            coefficients: r.coeffs().iter().map(ToString::to_string).collect(),
            pretty: r.pretty(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub name: String,
    pub values: Vec<CyclotomicValue>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fs_indicator: Option<i8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTableDoc {
    pub field: String,
    pub rows: Vec<CharacterRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorDoc {
    /// Order of the cyclic summand; 0 for a free summand.
    pub order: u64,
    pub terms: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CokernelDoc {
    pub field: String,
    pub free_rank: u64,
    pub invariant_factors: Vec<u64>,
    pub structure: String,
    pub presentation: String,
    pub generators: Vec<GeneratorDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub group: String,
    pub order: u64,
    pub exponent: u32,
    pub classes: Vec<ClassEntry>,
    /// Increasing order: the trivial subgroup first, the whole group last.
    pub subgroups: Vec<SubgroupEntry>,
    /// `marks[i][j]` is the number of points of `G/H_i` fixed by `H_j`.
    pub marks: Vec<Vec<i64>>,
    pub products: Vec<ProductEntry>,
    pub multiplicities: Vec<Vec<i64>>,
    pub triangular: TriangularForm,
    pub image: Vec<ImageEntry>,
    pub character_tables: Vec<CharacterTableDoc>,
    pub cokernels: Vec<CokernelDoc>,
    pub kernel_rank: u64,
    pub surjective: BTreeMap<String, bool>,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Output of the `marks` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarksDocument {
    pub schema_version: u32,
    pub group: String,
    pub order: u64,
    pub subgroups: Vec<SubgroupEntry>,
    pub marks: Vec<Vec<i64>>,
}

/// Output of the `chartab` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTableDocument {
    pub schema_version: u32,
    pub group: String,
    pub order: u64,
    pub classes: Vec<ClassEntry>,
    pub table: CharacterTableDoc,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("document serializes");
    s.push('\n');
    s
}

pub fn subgroup_entries(marks: &MarksTable) -> Vec<SubgroupEntry> {
    let labels = subgroup_labels(marks.len());
    marks
        .classes
        .iter()
        .zip(&labels)
        .map(|(c, label)| SubgroupEntry {
            label: label.clone(),
            order: c.order as u64,
            cosets: c.index as u64,
            conjugates: c.conjugate_count as u64,
            cyclic: c.is_cyclic,
        })
        .collect()
}

pub fn class_entries(classes: &ConjClasses) -> Vec<ClassEntry> {
    classes
        .labels
        .iter()
        .enumerate()
        .map(|(c, label)| ClassEntry {
            label: label.clone(),
            size: classes.sizes[c] as u64,
            element_order: classes.element_orders[c],
        })
        .collect()
}

pub fn marks_document(group: &str, order: usize, marks: &MarksTable) -> Result<MarksDocument, DocumentError> {
    Ok(MarksDocument {
        schema_version: SCHEMA_VERSION,
        group: group.to_string(),
        order: order as u64,
        subgroups: subgroup_entries(marks),
        marks: rows(&marks.marks.to_rows())?,
    })
}

/// Spreadsheet-style letters: A..Z, AA, AB, ...
pub fn letter(mut i: usize) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'A' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    out.reverse();
    String::from_utf8(out).expect("ascii")
}

/// Letters for subgroup classes given in increasing order, so that the
/// whole group is `A` and the trivial subgroup gets the last letter.
pub fn subgroup_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| letter(n - 1 - i)).collect()
}

pub fn character_table(lattice: &CharacterLattice, fs: Option<&[i8]>) -> CharacterTableDoc {
    let rows = lattice
        .basis
        .iter()
        .zip(&lattice.names)
        .enumerate()
        .map(|(i, (chi, name))| CharacterRow {
            name: name.clone(),
            values: values(chi),
            fs_indicator: fs.map(|f| f[i]),
        })
        .collect();
    CharacterTableDoc {
        field: lattice.tag.to_string(),
        rows,
    }
}

fn values(chi: &ClassFunction) -> Vec<CyclotomicValue> {
    chi.values.iter().map(CyclotomicValue::new).collect()
}

pub fn build(report: &BetaReport) -> Result<ReportDocument, DocumentError> {
    let n = report.marks.len();
    let labels = subgroup_labels(n);
    let classes = class_entries(&report.classes);
    let subgroups = subgroup_entries(&report.marks);

    let mut products = Vec::new();
    for i in 0..n {
        for j in i..n {
            let terms = report.structure.constants[i][j]
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(l, &c)| (labels[l].clone(), c))
                .collect();
            products.push(ProductEntry {
                left: labels[i].clone(),
                right: labels[j].clone(),
                terms,
            });
        }
    }

    let basis = &report.basis;
    let triangular = TriangularForm {
        columns: basis.reduction_order.iter().map(|&k| labels[k].clone()).collect(),
        h_tilde: rows(&basis.h_tilde.to_rows())?,
        u_tilde: rows(&basis.u_tilde.to_rows())?,
        norms: ints(&basis.norms)?,
    };

    let mut image = Vec::new();
    for (i, values) in report.image_characters.iter().enumerate() {
        let coords = &report.v_complex[i];
        image.push(ImageEntry {
            name: format!("V{}", i + 1),
            definition: ints(&basis.v_defs[i])?,
            values: ints(values)?,
            irreducible_coordinates: ints(coords)?,
            decomposition: burnside::characters::combination_name(coords),
            actual: report.v_actual[i],
        });
    }

    let character_tables = report
        .lattices
        .iter()
        .map(|(tag, lattice)| {
            let fs = (*tag == FieldTag::Complex).then_some(report.table.fs_indicators.as_slice());
            character_table(lattice, fs)
        })
        .collect();

    let mut cokernels = Vec::new();
    for (tag, c) in &report.cokernels {
        let mut generators = Vec::new();
        for (terms, order) in &c.generators {
            generators.push(GeneratorDoc {
                order: *order,
                terms: terms
                    .iter()
                    .map(|(name, k)| Ok((name.clone(), int(k)?)))
                    .collect::<Result<_, DocumentError>>()?,
            });
        }
        cokernels.push(CokernelDoc {
            field: tag.to_string(),
            free_rank: c.quotient.free_rank as u64,
            invariant_factors: c.quotient.factors_u64(),
            structure: c.structure(),
            presentation: c.presentation(),
            generators,
        });
    }

    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        group: report.group.clone(),
        order: report.order as u64,
        exponent: report.exponent,
        classes,
        subgroups,
        marks: rows(&report.marks.marks.to_rows())?,
        products,
        multiplicities: rows(&report.structure.multiplicities.to_rows())?,
        triangular,
        image,
        character_tables,
        cokernels,
        kernel_rank: report.kernel_rank as u64,
        surjective: report
            .cokernels
            .iter()
            .map(|(t, c)| (t.to_string(), c.is_zero()))
            .collect(),
    })
}

fn rows(m: &[Vec<BigInt>]) -> Result<Vec<Vec<i64>>, DocumentError> {
    m.iter().map(|r| ints(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters() {
        assert_eq!(letter(0), "A");
        assert_eq!(letter(25), "Z");
        assert_eq!(letter(26), "AA");
        assert_eq!(letter(27), "AB");
        assert_eq!(letter(26 * 27), "AAA");
        assert_eq!(subgroup_labels(3), vec!["C", "B", "A"]);
    }

    #[test]
    fn json_round_trip() {
        use burnside::analysis::{all_fields, analyze, GroupSource};
        use burnside::catalog::CatalogId;
        let r = analyze(&GroupSource::Catalog(CatalogId::BinaryDihedral(3)), &all_fields()).unwrap();
        let doc = build(&r).unwrap();
        let json = doc.to_json();
        let back = ReportDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
        assert_eq!(doc.schema_version, SCHEMA_VERSION);
    }
}
