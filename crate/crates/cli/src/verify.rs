//! Reference-table comparison and the acceptance checks run by
//! `verify-paper`.

use std::collections::BTreeMap;
use std::time::Instant;

use burnside::analysis::{all_fields, analyze_group, image_characters, BetaReport};
use burnside::arith::Cyclotomic;
use burnside::burnside::{hom_count, image_basis_in_order, oracle_structure_constants};
use burnside::catalog::{build, CatalogId};
use burnside::characters::FieldTag;
use burnside::group::FiniteGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{RngExt, SeedableRng};

use crate::document;
use crate::reference::{CokernelShape, ReferenceGroup, REFERENCE};

/// Analyses shared between checks.
#[derive(Default)]
pub struct Suite {
    cache: BTreeMap<CatalogId, Result<(FiniteGroup, BetaReport), String>>,
}

impl Suite {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, id: CatalogId) -> Result<&(FiniteGroup, BetaReport), String> {
        self.cache
            .entry(id)
            .or_insert_with(|| {
                let g = build(id).map_err(|e| e.to_string())?;
                let r = analyze_group(&id.name(), &g, &all_fields()).map_err(|e| e.to_string())?;
                Ok((g, r))
            })
            .as_ref()
            .map_err(Clone::clone)
    }
}

/// One row of the reference matrix.
#[derive(Clone, Debug)]
pub struct GroupCheck {
    pub group: String,
    pub cells: Vec<(&'static str, Option<bool>)>,
    pub error: Option<String>,
    pub seconds: f64,
}

impl GroupCheck {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.cells.iter().all(|(_, c)| *c != Some(false))
    }
}

pub const GROUP_COLUMNS: [&str; 8] = ["subgroups", "M", "H~", "V", "Q", "R", "C", "int-R"];

/// Every assignment of a computed class to each reference subgroup (whole
/// group first) with the same order and index under which the
/// multiplicity matrices agree. The cyclic flag and conjugate count are
/// compared separately as a multiset, since relabelling subgroups of equal
/// order must stay possible.
pub fn match_subgroups(report: &BetaReport, r: &ReferenceGroup, limit: usize) -> Vec<Vec<usize>> {
    let classes = &report.marks.classes;
    let m = &report.structure.multiplicities;
    let n = r.subgroups.len();
    if classes.len() != n || r.multiplicities.len() != n {
        return Vec::new();
    }
    struct Search<'a> {
        ok: &'a dyn Fn(usize, usize, &[usize]) -> bool,
        n: usize,
        limit: usize,
        found: Vec<Vec<usize>>,
    }
    fn extend(s: &mut Search<'_>, assign: &mut Vec<usize>, used: &mut [bool]) {
        let a = assign.len();
        if a == s.n {
            s.found.push(assign.clone());
            return;
        }
        for c in 0..s.n {
            if s.found.len() >= s.limit {
                return;
            }
            if !used[c] && (s.ok)(a, c, assign) {
                used[c] = true;
                assign.push(c);
                extend(s, assign, used);
                assign.pop();
                used[c] = false;
            }
        }
    }
    let ok = |a: usize, c: usize, assign: &[usize]| -> bool {
        let (order, cosets, _, _) = r.subgroups[a];
        if (classes[c].order, classes[c].index) != (order, cosets) {
            return false;
        }
        let want = |x: usize, y: usize| BigInt::from(r.multiplicities[x][y]);
        if *m.get(c, c) != want(a, a) {
            return false;
        }
        assign
            .iter()
            .enumerate()
            .all(|(b, &d)| *m.get(c, d) == want(a, b) && *m.get(d, c) == want(b, a))
    };
    let mut search = Search {
        ok: &ok,
        n,
        limit,
        found: Vec::new(),
    };
    extend(&mut search, &mut Vec::with_capacity(n), &mut vec![false; n]);
    search.found
}

/// True when some bijection of columns, preserving element order and class
/// size, maps the rows of `want` onto the rows of `got` as multisets.
pub fn rows_match_up_to_columns(
    got: &[Vec<BigInt>],
    got_orders: &[u32],
    got_sizes: &[usize],
    want: &[&[i64]],
    want_orders: &[u32],
    want_sizes: &[usize],
) -> bool {
    let k = got_orders.len();
    if want_orders.len() != k || got.len() != want.len() || want.iter().any(|r| r.len() != k) {
        return false;
    }
    let mut expected: Vec<Vec<BigInt>> = Vec::new();
    let mut sigma = vec![usize::MAX; k];
    let mut used = vec![false; k];
    let mut sorted_got: Vec<Vec<BigInt>> = got.to_vec();
    sorted_got.sort();

    fn search(
        col: usize,
        sigma: &mut [usize],
        used: &mut [bool],
        st: &(&[u32], &[usize], &[u32], &[usize]),
        check: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = sigma.len();
        if col == k {
            return check(sigma);
        }
        for c in 0..k {
            if !used[c] && st.0[c] == st.2[col] && st.1[c] == st.3[col] {
                used[c] = true;
                sigma[col] = c;
                if search(col + 1, sigma, used, st, check) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    let st = (got_orders, got_sizes, want_orders, want_sizes);
    let mut check = |sigma: &[usize]| {
        expected.clear();
        for row in want {
            let mut v = vec![BigInt::from(0); k];
            for (col, &x) in row.iter().enumerate() {
                v[sigma[col]] = BigInt::from(x);
            }
            expected.push(v);
        }
        expected.sort();
        expected == sorted_got
    };
    search(0, &mut sigma, &mut used, &st, &mut check)
}

fn shape_of(report: &BetaReport, tag: FieldTag) -> Option<(usize, Vec<u64>)> {
    report
        .cokernels
        .get(&tag)
        .map(|c| (c.quotient.free_rank, c.quotient.factors_u64()))
}

fn shape_matches(report: &BetaReport, tag: FieldTag, want: Option<CokernelShape>) -> Option<bool> {
    want.map(|(free, factors)| shape_of(report, tag) == Some((free, factors.to_vec())))
}

pub fn check_reference_group(suite: &mut Suite, r: &ReferenceGroup) -> GroupCheck {
    let start = Instant::now();
    let mut out = GroupCheck {
        group: r.id.name(),
        cells: GROUP_COLUMNS.iter().map(|&c| (c, None)).collect(),
        error: None,
        seconds: 0.0,
    };
    let (g, report) = match suite.get(r.id) {
        Ok(x) => x,
        Err(e) => {
            out.error = Some(e);
            return out;
        }
    };
    let set = |out: &mut GroupCheck, col: &str, v: Option<bool>| {
        if let Some(cell) = out.cells.iter_mut().find(|(c, _)| *c == col) {
            cell.1 = v;
        }
    };

    let tuples_ok = {
        let mut got: Vec<_> = report
            .marks
            .classes
            .iter()
            .map(|s| (s.order, s.index, s.conjugate_count, s.is_cyclic))
            .collect();
        let mut want = r.subgroups.to_vec();
        got.sort();
        want.sort();
        got == want
    };
    set(&mut out, "subgroups", Some(tuples_ok));
    let matchings = match_subgroups(report, r, 64);
    set(&mut out, "M", Some(!matchings.is_empty()));
    if !matchings.is_empty() {
        let want: Vec<Vec<BigInt>> = r
            .triangular
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let mut h_ok = false;
        let mut v_ok = false;
        for order in &matchings {
            match image_basis_in_order(&report.structure, order) {
                Ok(basis) => {
                    if basis.h_tilde.to_rows() != want {
                        continue;
                    }
                    h_ok = true;
                    v_ok = image_characters(g, &report.classes, &report.marks, &basis).is_ok_and(|rows| {
                        rows_match_up_to_columns(
                            &rows,
                            &report.classes.element_orders,
                            &report.classes.sizes,
                            r.image,
                            r.class_orders,
                            r.class_sizes,
                        )
                    });
                    if v_ok {
                        break;
                    }
                }
                Err(e) => out.error = Some(e.to_string()),
            }
        }
        set(&mut out, "H~", Some(h_ok));
        set(&mut out, "V", Some(v_ok));
    }
    set(&mut out, "Q", shape_matches(report, FieldTag::Rational, r.coker_q));
    set(&mut out, "R", shape_matches(report, FieldTag::Real, r.coker_r));
    set(&mut out, "C", shape_matches(report, FieldTag::Complex, r.coker_c));
    set(
        &mut out,
        "int-R",
        report.surjective(FieldTag::IntegerReal),
    );
    out.seconds = start.elapsed().as_secs_f64();
    out
}

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub failures: Vec<String>,
}

impl CriterionResult {
    fn new(id: u8, title: &'static str, failures: Vec<String>) -> Self {
        CriterionResult {
            id,
            title,
            passed: failures.is_empty(),
            failures,
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("[{status}] criterion {:>2}: {}", self.id, self.title);
        if !self.passed {
            s.push_str(&format!(" ({})", self.failures.join("; ")));
        }
        s
    }
}

/// The twelve groups with full reference tables and cokernels.
pub fn reference_groups() -> impl Iterator<Item = &'static ReferenceGroup> {
    REFERENCE.iter().filter(|r| r.coker_c.is_some())
}

pub fn criterion_1(suite: &mut Suite) -> (CriterionResult, Vec<GroupCheck>) {
    let start = Instant::now();
    let checks: Vec<GroupCheck> = reference_groups().map(|r| check_reference_group(suite, r)).collect();
    let mut failures: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| {
            let bad: Vec<&str> = c
                .cells
                .iter()
                .filter(|(_, v)| *v == Some(false))
                .map(|(n, _)| *n)
                .collect();
            match &c.error {
                Some(e) => format!("{}: {e}", c.group),
                None => format!("{}: {}", c.group, bad.join(",")),
            }
        })
        .collect();
    let total = start.elapsed().as_secs_f64();
    if total > 300.0 {
        failures.push(format!("suite took {total:.1}s"));
    }
    if let Some(c) = checks.iter().find(|c| c.group == "2I") {
        if c.seconds > 60.0 {
            failures.push(format!("2I took {:.1}s", c.seconds));
        }
    }
    (
        CriterionResult::new(1, "reference tables for the twelve groups", failures),
        checks,
    )
}

pub fn criterion_2(suite: &mut Suite) -> CriterionResult {
    let mut failures = Vec::new();
    for r in REFERENCE {
        match suite.get(r.id) {
            Ok((_, report)) => {
                if report.surjective(FieldTag::IntegerReal) != Some(true) {
                    failures.push(format!("{}: {}", r.id, report.cokernels[&FieldTag::IntegerReal].structure()));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", r.id)),
        }
    }
    CriterionResult::new(2, "integer-valued real cokernel vanishes", failures)
}

pub fn criterion_3(suite: &mut Suite) -> CriterionResult {
    let mut failures = Vec::new();
    let check_pair = |name: &str, g: &FiniteGroup, report: &BetaReport, i: usize, j: usize, failures: &mut Vec<String>| {
        match oracle_structure_constants(g, &report.marks, i, j) {
            Ok(v) if v == report.structure.constants[i][j] => {}
            Ok(_) => failures.push(format!("{name}: pair ({i},{j})")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    };
    for id in CatalogId::examples().into_iter().filter(|id| id.expected_order() <= 48) {
        match suite.get(id) {
            Ok((g, report)) => {
                let n = report.marks.len();
                for i in 0..n {
                    for j in 0..n {
                        check_pair(&id.name(), g, report, i, j, &mut failures);
                    }
                }
            }
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    match suite.get(CatalogId::BinaryIcosahedral) {
        Ok((g, report)) => {
            let mut rng = StdRng::seed_from_u64(0x2a);
            let n = report.marks.len();
            for _ in 0..200 {
                let (i, j) = (rng.random_range(0..n), rng.random_range(0..n));
                check_pair("2I", g, report, i, j, &mut failures);
            }
        }
        Err(e) => failures.push(format!("2I: {e}")),
    }
    CriterionResult::new(3, "structure constants agree with orbit counting", failures)
}

pub fn criterion_4(suite: &mut Suite) -> CriterionResult {
    let mut failures = Vec::new();
    for id in CatalogId::examples() {
        match suite.get(id) {
            Ok((g, report)) => {
                let n = report.marks.len();
                for i in 0..n {
                    for j in 0..n {
                        let h = hom_count(g, &report.classes, &report.marks, i, j);
                        let m = BigRational::from_integer(report.structure.multiplicities.get(i, j).clone());
                        if h != m {
                            failures.push(format!("{id}: M[{i}][{j}]"));
                        }
                    }
                }
            }
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    CriterionResult::new(4, "multiplicities equal averaged fixed-point products", failures)
}

fn table_sanity(g: &FiniteGroup, report: &BetaReport) -> Vec<String> {
    let t = &report.table;
    let mut bad = Vec::new();
    let n = g.order();
    let deg2: u64 = t.degrees.iter().map(|d| d * d).sum();
    if deg2 != n as u64 {
        bad.push(format!("sum of squared degrees {deg2}"));
    }
    for (i, a) in t.chars.iter().enumerate() {
        for (j, b) in t.chars.iter().enumerate() {
            match t.inner_product(a, b) {
                Ok(x) if x == BigInt::from((i == j) as i64) => {}
                _ => bad.push(format!("<rho{},rho{}>", i + 1, j + 1)),
            }
        }
    }
    let k = t.class_sizes.len();
    let e = t.exponent;
    for a in 0..k {
        for b in 0..k {
            let s = t.chars.iter().fold(Cyclotomic::zero(e), |acc, chi| {
                &acc + &(&chi.values[a] * &chi.values[b].conj())
            });
            let want = if a == b { (n / t.class_sizes[a]) as i64 } else { 0 };
            if s != Cyclotomic::from_integer(e, want) {
                bad.push(format!("columns {a},{b}"));
            }
        }
    }
    if t.fs_indicators.iter().any(|f| !(-1..=1).contains(f)) {
        bad.push("indicator out of range".into());
    }
    let fs_sum: i64 = t
        .fs_indicators
        .iter()
        .zip(&t.degrees)
        .map(|(&f, &d)| f as i64 * d as i64)
        .sum();
    if fs_sum != g.involution_count_with_identity() as i64 {
        bad.push(format!("sum FS*deg = {fs_sum}"));
    }
    bad
}

pub fn criterion_5(suite: &mut Suite) -> CriterionResult {
    let mut failures = Vec::new();
    for id in CatalogId::examples() {
        match suite.get(id) {
            Ok((g, report)) => failures.extend(table_sanity(g, report).into_iter().map(|b| format!("{id}: {b}"))),
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    CriterionResult::new(5, "character tables are orthonormal with consistent indicators", failures)
}

pub fn criterion_6(suite: &mut Suite) -> CriterionResult {
    let mut failures = Vec::new();
    let mut ids = CatalogId::examples();
    ids.extend((1..=30).map(CatalogId::Cyclic));
    ids.sort();
    ids.dedup();
    for id in ids {
        match suite.get(id) {
            Ok((_, report)) => {
                let want = report.subgroup_class_count() - report.cyclic_class_count();
                if report.kernel_rank != want {
                    failures.push(format!("{id}: {} vs {want}", report.kernel_rank));
                }
                let pinned = match id {
                    CatalogId::Cyclic(_) => Some(0),
                    CatalogId::BinaryDihedral(2) => Some(1),
                    CatalogId::BinaryIcosahedral => Some(5),
                    _ => None,
                };
                if pinned.is_some_and(|p| p != report.kernel_rank) {
                    failures.push(format!("{id}: kernel rank {}", report.kernel_rank));
                }
            }
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    CriterionResult::new(6, "kernel rank counts the non-cyclic subgroup classes", failures)
}

fn zero_cokernels(suite: &mut Suite, ids: &[CatalogId], tags: &[FieldTag]) -> Vec<String> {
    let mut failures = Vec::new();
    for &id in ids {
        match suite.get(id) {
            Ok((_, report)) => {
                for &t in tags {
                    if report.surjective(t) != Some(true) {
                        failures.push(format!("{id} over {t}"));
                    }
                }
            }
            Err(e) => failures.push(format!("{id}: {e}")),
        }
    }
    failures
}

pub fn criterion_7(suite: &mut Suite) -> CriterionResult {
    use CatalogId::*;
    let ids = [
        Cyclic(2),
        Cyclic(4),
        Cyclic(8),
        BinaryDihedral(2),
        BinaryDihedral(4),
        BinaryDihedral(8),
        Cyclic(9),
    ];
    CriterionResult::new(
        7,
        "surjective over Q for the listed p-groups",
        zero_cokernels(suite, &ids, &[FieldTag::Rational]),
    )
}

pub fn criterion_8(suite: &mut Suite) -> CriterionResult {
    let ids: Vec<CatalogId> = (2..=5).map(CatalogId::Symmetric).collect();
    CriterionResult::new(
        8,
        "symmetric groups S2..S5 surjective over Q, R and C",
        zero_cokernels(suite, &ids, &[FieldTag::Rational, FieldTag::Real, FieldTag::Complex]),
    )
}

/// Renders the JSON report for 2I twice from scratch.
pub fn criterion_9() -> CriterionResult {
    let render = || -> Result<String, String> {
        let g = build(CatalogId::BinaryIcosahedral).map_err(|e| e.to_string())?;
        let r = analyze_group("2I", &g, &all_fields()).map_err(|e| e.to_string())?;
        Ok(document::build(&r).map_err(|e| e.to_string())?.to_json())
    };
    let failures = match (render(), render()) {
        (Ok(a), Ok(b)) if a == b => vec![],
        (Ok(_), Ok(_)) => vec!["outputs differ".into()],
        (Err(e), _) | (_, Err(e)) => vec![e],
    };
    CriterionResult::new(9, "JSON output for 2I is byte-identical across runs", failures)
}

pub fn criterion_10(suite: &mut Suite) -> CriterionResult {
    let mut failures = Vec::new();
    let mut get = |id: CatalogId| suite.get(id).map(|(_, r)| r.clone());
    match (get(CatalogId::BinaryOctahedral), get(CatalogId::GL2F3)) {
        (Ok(o), Ok(gl)) => {
            let want = [
                (&o, FieldTag::Complex, (1, vec![2, 2])),
                (&gl, FieldTag::Complex, (1, vec![])),
                (&o, FieldTag::Real, (1, vec![])),
                (&gl, FieldTag::Real, (0, vec![])),
            ];
            for (r, tag, shape) in want {
                if shape_of(r, tag) != Some(shape.clone()) {
                    failures.push(format!("{} over {tag}: {:?}", r.group, shape_of(r, tag)));
                }
            }
            let (lo, lg) = (&o.lattices[&FieldTag::Real], &gl.lattices[&FieldTag::Real]);
            let same_real = lo.names == lg.names && lo.coords_in_complex == lg.coords_in_complex;
            if same_real {
                failures.push("real lattices coincide".into());
            }
            if (o.subgroup_class_count(), gl.subgroup_class_count()) != (13, 16) {
                failures.push(format!(
                    "subgroup classes {} vs {}",
                    o.subgroup_class_count(),
                    gl.subgroup_class_count()
                ));
            }
        }
        (Err(e), _) | (_, Err(e)) => failures.push(e),
    }
    CriterionResult::new(10, "2O and GL(2,3) are told apart", failures)
}

/// Runs everything; the reference matrix comes back alongside and also
/// covers the groups whose tables carry no cokernel.
pub fn run_all() -> (Vec<CriterionResult>, Vec<GroupCheck>) {
    let mut suite = Suite::new();
    let (c1, mut checks) = criterion_1(&mut suite);
    for r in REFERENCE.iter().filter(|r| r.coker_c.is_none()) {
        checks.push(check_reference_group(&mut suite, r));
    }
    let results = vec![
        c1,
        criterion_2(&mut suite),
        criterion_3(&mut suite),
        criterion_4(&mut suite),
        criterion_5(&mut suite),
        criterion_6(&mut suite),
        criterion_7(&mut suite),
        criterion_8(&mut suite),
        criterion_9(),
        criterion_10(&mut suite),
    ];
    (results, checks)
}

/// Pass/fail matrix, one row per reference group.
pub fn matrix_text(checks: &[GroupCheck]) -> String {
    let mut rows = vec![std::iter::once("group".to_string())
        .chain(GROUP_COLUMNS.iter().map(|s| s.to_string()))
        .chain(std::iter::once("time".to_string()))
        .collect::<Vec<_>>()];
    for c in checks {
        let mut row = vec![c.group.clone()];
        row.extend(c.cells.iter().map(|(_, v)| match v {
            Some(true) => "ok".to_string(),
            Some(false) => "FAIL".to_string(),
            None => "-".to_string(),
        }));
        row.push(format!("{:.2}s", c.seconds));
        rows.push(row);
    }
    let mut out = crate::emit::text_table(&rows);
    for c in checks {
        if let Some(e) = &c.error {
            out.push_str(&format!("  {}: {e}\n", c.group));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_matching() {
        let got = vec![
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(3)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(5)],
        ];
        let want: &[&[i64]] = &[&[1, 5, 0], &[1, 3, 2]];
        assert!(rows_match_up_to_columns(&got, &[1, 2, 2], &[1, 1, 1], want, &[1, 2, 2], &[1, 1, 1]));
        assert!(!rows_match_up_to_columns(&got, &[1, 2, 3], &[1, 1, 1], want, &[1, 2, 3], &[1, 1, 1]));
    }

    #[test]
    fn quaternion_reference() {
        let mut suite = Suite::new();
        let r = REFERENCE.iter().find(|r| r.id == CatalogId::BinaryDihedral(2)).unwrap();
        let c = check_reference_group(&mut suite, r);
        assert!(c.passed(), "{c:?}");
    }
}
