//! Plain-text and LaTeX renderings of a [`ReportDocument`].

use std::fmt::Write;

use crate::document::{CharacterTableDoc, ClassEntry, ReportDocument, SubgroupEntry};

/// Right-aligned columns separated by two spaces.
pub fn text_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::from(" ");
        for (c, cell) in r.iter().enumerate() {
            let pad = widths[c] - cell.chars().count();
            line.push_str("  ");
            line.push_str(&" ".repeat(pad));
            line.push_str(cell);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn s<T: ToString>(x: T) -> String {
    x.to_string()
}

fn labelled_matrix(corner: &str, cols: &[String], rows: &[String], m: &[Vec<i64>], dot_zero: bool) -> Vec<Vec<String>> {
    let mut out = vec![std::iter::once(corner.to_string()).chain(cols.iter().cloned()).collect::<Vec<_>>()];
    for (label, row) in rows.iter().zip(m) {
        let mut r = vec![label.clone()];
        r.extend(row.iter().map(|&x| if dot_zero && x == 0 { ".".into() } else { s(x) }));
        out.push(r);
    }
    out
}

fn product_rhs(terms: &[(String, u64)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .iter()
        .map(|(l, c)| if *c == 1 { l.clone() } else { format!("{c}{l}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn character_rows(classes: &[ClassEntry], t: &CharacterTableDoc) -> Vec<Vec<String>> {
    let mut rows = vec![class_header(classes), size_header(classes)];
    for r in &t.rows {
        let mut row = vec![r.name.clone()];
        row.extend(r.values.iter().map(|v| v.pretty.clone()));
        if let Some(fs) = r.fs_indicator {
            row.push(if fs > 0 { format!("FS +{fs}") } else { format!("FS {fs}") });
        }
        rows.push(row);
    }
    rows
}

/// `k*name`, bracketing composite names.
fn term(k: i64, name: &str) -> String {
    let composite = name.contains(['+', '-']);
    let name = if composite && k != 1 { format!("({name})") } else { name.to_string() };
    match k {
        1 => name,
        -1 => format!("-{name}"),
        _ => format!("{k}*{name}"),
    }
}

fn class_header(classes: &[ClassEntry]) -> Vec<String> {
    std::iter::once("class".to_string())
        .chain(classes.iter().map(|c| c.label.clone()))
        .collect()
}

fn size_header(classes: &[ClassEntry]) -> Vec<String> {
    std::iter::once("size".to_string())
        .chain(classes.iter().map(|c| s(c.size)))
        .collect()
}

/// The marks table on its own, as printed by `marks`.
pub fn marks_text(group: &str, subgroups: &[SubgroupEntry], marks: &[Vec<i64>]) -> String {
    let labels: Vec<String> = subgroups.iter().map(|g| g.label.clone()).collect();
    let mut out = format!("Table of marks of {group} (row G/H_i, column H_j)\n");
    out.push_str(&text_table(&labelled_matrix("", &labels, &labels, marks, false)));
    out
}

pub fn character_table_text(classes: &[ClassEntry], t: &CharacterTableDoc) -> String {
    let mut out = format!("Character table over {}\n", t.field);
    out.push_str(&text_table(&character_rows(classes, t)));
    out
}

pub fn to_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Group {} (order {}, exponent {})", doc.group, doc.order, doc.exponent);
    out.push('\n');

    out.push_str("Conjugacy classes\n");
    out.push_str(&text_table(&[class_header(&doc.classes), size_header(&doc.classes)]));
    out.push('\n');

    out.push_str("Subgroups\n");
    let mut rows = vec![vec![s("subgroup"), s("order"), s("cosets"), s("conjugates"), s("cyclic")]];
    for g in doc.subgroups.iter().rev() {
        rows.push(vec![
            g.label.clone(),
            s(g.order),
            s(g.cosets),
            s(g.conjugates),
            s(if g.cyclic { "yes" } else { "no" }),
        ]);
    }
    out.push_str(&text_table(&rows));
    out.push('\n');

    out.push_str(&marks_text(&doc.group, &doc.subgroups, &doc.marks));
    out.push('\n');

    out.push_str("Burnside ring product\n");
    for p in &doc.products {
        let _ = writeln!(out, "  {} x {} = {}", p.left, p.right, product_rhs(&p.terms));
    }
    out.push('\n');

    let labels: Vec<String> = doc.subgroups.iter().map(|g| g.label.clone()).collect();
    out.push_str("Table of multiplicities\n");
    out.push_str(&text_table(&labelled_matrix("", &labels, &labels, &doc.multiplicities, false)));
    out.push('\n');

    let vnames: Vec<String> = doc.image.iter().map(|v| v.name.clone()).collect();
    out.push_str("Upper triangular form\n");
    out.push_str(&text_table(&labelled_matrix(
        "",
        &doc.triangular.columns,
        &vnames,
        &doc.triangular.h_tilde,
        true,
    )));
    out.push('\n');

    out.push_str("Image characters\n");
    let values: Vec<Vec<i64>> = doc.image.iter().map(|v| v.values.clone()).collect();
    let mut rows = vec![class_header(&doc.classes), size_header(&doc.classes)];
    rows.extend(labelled_matrix("", &[], &vnames, &values, false).into_iter().skip(1));
    out.push_str(&text_table(&rows));
    for v in &doc.image {
        let note = if v.actual { "" } else { "  (virtual)" };
        let _ = writeln!(out, "  {} = {}{}", v.name, v.decomposition, note);
    }
    out.push('\n');

    for t in &doc.character_tables {
        out.push_str(&character_table_text(&doc.classes, t));
        out.push('\n');
    }

    out.push_str("Cokernels\n");
    for c in &doc.cokernels {
        let _ = writeln!(out, "  {}: {}    {}", c.field, c.structure, c.presentation);
        for g in &c.generators {
            let terms = g
                .terms
                .iter()
                .map(|(n, k)| term(*k, n))
                .collect::<Vec<_>>()
                .join(" + ")
                .replace("+ -", "- ");
            if g.order == 0 {
                let _ = writeln!(out, "    free generator {terms}");
            } else {
                let _ = writeln!(out, "    generator {terms} of order {}", g.order);
            }
        }
    }
    out.push('\n');
    let _ = writeln!(out, "Kernel rank: {}", doc.kernel_rank);
    out
}

/// Converts names such as `2rho6+rho7`, `zeta8^3`, `Z/2` and `-1/2*zeta5`
/// into LaTeX math.
pub fn tex(src: &str) -> String {
    let chars: Vec<char> = src.chars().collect();
    let mut out = String::new();
    let mut i = 0;
    let digits = |from: usize| -> usize {
        let mut j = from;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let rest: String = chars[i..].iter().collect();
        if let Some(word) = ["rho", "zeta"].iter().find(|w| rest.starts_with(**w)) {
            let j = digits(i + word.len());
            let sub: String = chars[i + word.len()..j].iter().collect();
            let _ = write!(out, "\\{word}_{{{sub}}}");
            i = j;
        } else if chars[i] == '^' {
            let j = digits(i + 1);
            let sup: String = chars[i + 1..j].iter().collect();
            let _ = write!(out, "^{{{sup}}}");
            i = j;
        } else if chars[i].is_ascii_digit() {
            let j = digits(i);
            let num: String = chars[i..j].iter().collect();
            if j < chars.len() && chars[j] == '/' && j + 1 < chars.len() && chars[j + 1].is_ascii_digit() {
                let k = digits(j + 1);
                let den: String = chars[j + 1..k].iter().collect();
                let _ = write!(out, "\\tfrac{{{num}}}{{{den}}}");
                i = k;
            } else {
                out.push_str(&num);
                i = j;
            }
        } else if chars[i] == 'Z' {
            out.push_str("\\mathbb{Z}");
            i += 1;
        } else if chars[i] == '*' {
            i += 1;
        } else if rest.starts_with(" + ") && src.contains('Z') {
            out.push_str(" \\oplus ");
            i += 3;
        } else {
            out.push(chars[i]);
            i += 1;
        }
    }
    out
}

fn tex_array(rows: &[Vec<String>], header_rows: usize) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "\\[");
    let _ = writeln!(out, "\\begin{{array}}{{r|{}}}", "r".repeat(cols.saturating_sub(1)));
    for (k, r) in rows.iter().enumerate() {
        let _ = writeln!(out, "{} \\\\", r.join(" & "));
        if k + 1 == header_rows {
            let _ = writeln!(out, "\\hline");
        }
    }
    let _ = writeln!(out, "\\end{{array}}");
    let _ = writeln!(out, "\\]");
    out
}

fn math(x: impl ToString) -> String {
    tex(&x.to_string())
}

pub fn to_latex(doc: &ReportDocument) -> String {
    let mut out = String::new();
    out.push_str("\\documentclass{article}\n");
    out.push_str("\\usepackage{amsmath,amssymb}\n");
    out.push_str("\\usepackage[margin=2cm]{geometry}\n");
    out.push_str("\\begin{document}\n\n");
    let _ = writeln!(out, "\\section*{{Group \\texttt{{{}}}}}\n", doc.group);
    let _ = writeln!(out, "Order {}, exponent {}.\n", doc.order, doc.exponent);

    out.push_str("\\subsection*{Subgroups}\n");
    let mut rows = vec![vec![
        s("\\text{subgroup}"),
        s("\\text{order}"),
        s("\\text{cosets}"),
        s("\\text{conjugates}"),
        s("\\text{cyclic}"),
    ]];
    for g in doc.subgroups.iter().rev() {
        rows.push(vec![
            g.label.clone(),
            s(g.order),
            s(g.cosets),
            s(g.conjugates),
            s(if g.cyclic { "\\checkmark" } else { "" }),
        ]);
    }
    out.push_str(&tex_array(&rows, 1));

    let labels: Vec<String> = doc.subgroups.iter().map(|g| g.label.clone()).collect();
    out.push_str("\n\\subsection*{Table of marks}\n");
    out.push_str(&tex_array(&labelled_matrix("", &labels, &labels, &doc.marks, false), 1));

    out.push_str("\n\\subsection*{Burnside ring product}\n");
    out.push_str("\\begin{align*}\n");
    let lines: Vec<String> = doc
        .products
        .iter()
        .map(|p| format!("{} \\times {} &= {}", p.left, p.right, product_rhs(&p.terms)))
        .collect();
    let _ = writeln!(out, "{}", lines.join(" \\\\\n"));
    out.push_str("\\end{align*}\n");

    out.push_str("\n\\subsection*{Table of multiplicities}\n");
    out.push_str(&tex_array(
        &labelled_matrix("", &labels, &labels, &doc.multiplicities, false),
        1,
    ));

    let vnames: Vec<String> = (1..=doc.image.len()).map(|i| format!("V_{{{i}}}")).collect();
    out.push_str("\n\\subsection*{Upper triangular form}\n");
    out.push_str(&tex_array(
        &labelled_matrix("", &doc.triangular.columns, &vnames, &doc.triangular.h_tilde, true),
        1,
    ));

    let class_row: Vec<String> = std::iter::once(s("\\mathrm{class}"))
        .chain(doc.classes.iter().map(|c| c.label.clone()))
        .collect();
    let size_row: Vec<String> = std::iter::once(s("\\mathrm{size}"))
        .chain(doc.classes.iter().map(|c| s(c.size)))
        .collect();

    out.push_str("\n\\subsection*{Image characters}\n");
    let mut rows = vec![class_row.clone(), size_row.clone()];
    for (name, v) in vnames.iter().zip(&doc.image) {
        rows.push(std::iter::once(name.clone()).chain(v.values.iter().map(s)).collect());
    }
    out.push_str(&tex_array(&rows, 2));
    out.push_str("\\begin{align*}\n");
    let lines: Vec<String> = vnames
        .iter()
        .zip(&doc.image)
        .map(|(n, v)| format!("{n} &= {}", math(&v.decomposition)))
        .collect();
    let _ = writeln!(out, "{}", lines.join(" \\\\\n"));
    out.push_str("\\end{align*}\n");

    for t in &doc.character_tables {
        let field = match t.field.as_str() {
            "C" => s("$\\mathbb{C}$"),
            "R" => s("$\\mathbb{R}$"),
            "Q" => s("$\\mathbb{Q}$"),
            "INT" => s("integer-valued characters"),
            _ => s("integer-valued real characters"),
        };
        let _ = writeln!(out, "\n\\subsection*{{Characters over {field}}}");
        let mut rows = vec![class_row.clone(), size_row.clone()];
        for r in &t.rows {
            let mut row = vec![math(&r.name)];
            row.extend(r.values.iter().map(|v| math(&v.pretty)));
            rows.push(row);
        }
        out.push_str(&tex_array(&rows, 2));
    }

    out.push_str("\n\\subsection*{Cokernels}\n");
    out.push_str("\\[\n\\begin{array}{l|l|l}\n");
    for c in &doc.cokernels {
        let field = match c.field.as_str() {
            "C" | "R" | "Q" => format!("\\mathbb{{{}}}", c.field),
            "INT" => s("\\text{int}, \\mathbb{C}"),
            _ => s("\\text{int}, \\mathbb{R}"),
        };
        let pres = match c.presentation.split_once('/') {
            Some((num, den)) => format!("\\dfrac{{{}}}{{{}}}", math(num), math(den)),
            None => math(&c.presentation),
        };
        let _ = writeln!(out, "{field} & {} & {pres} \\\\", math(&c.structure));
    }
    out.push_str("\\end{array}\n\\]\n");
    let _ = writeln!(out, "\nKernel rank: {}.\n", doc.kernel_rank);
    out.push_str("\\end{document}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tex_names() {
        assert_eq!(tex("2rho6+2rho7"), "2\\rho_{6}+2\\rho_{7}");
        assert_eq!(tex("zeta8 - zeta8^3"), "\\zeta_{8} - \\zeta_{8}^{3}");
        assert_eq!(tex("-1/2*zeta5"), "-\\tfrac{1}{2}\\zeta_{5}");
        assert_eq!(tex("Z^2 + (Z/2)^3"), "\\mathbb{Z}^{2} \\oplus (\\mathbb{Z}/2)^{3}");
        assert_eq!(tex("Z[rho5]"), "\\mathbb{Z}[\\rho_{5}]");
    }

    #[test]
    fn aligned_table() {
        let t = text_table(&[vec!["a".into(), "10".into()], vec!["bb".into(), "2".into()]]);
        assert_eq!(t, "    a  10\n   bb   2\n");
    }
}
