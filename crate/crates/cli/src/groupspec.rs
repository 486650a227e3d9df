//! Text format for custom groups given by generators.
//!
//! ```text
//! # comments start with '#'
//! name: SL(2,3)
//! domain: gf 3 2
//! [[1,1],[0,1]]
//! [[0,2],[1,0]]
//! ```
//!
//! The header is `domain: permutation <n>`, `domain: gf <p> <dim>` or
//! `domain: cyclotomic <e> <dim>`. Each following line is one generator:
//! a 0-based image list for permutations, `dim*dim` row-major entries for
//! matrices. Matrix entries over `F_p` may be separated by spaces, commas or
//! brackets. Cyclotomic entries are separated by whitespace or `;` and
//! written `a0,a1,...,ak/den`, meaning `(a0 + a1 z + ... + ak z^k)/den` with
//! `z = exp(2 pi i/e)`; the `/den` part is optional.

use burnside::arith::Cyclotomic;
use burnside::group::{Domain, DomainElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, SpecError> {
    Err(SpecError {
        line,
        column,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub domain: Domain,
    pub generators: Vec<DomainElement>,
}

/// Splits `text` at any character in `seps`, returning `(1-based column, token)`.
fn tokens<'a>(text: &'a str, seps: &[char]) -> Vec<(usize, &'a str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (byte, ch) in text.char_indices() {
        let sep = ch.is_whitespace() || seps.contains(&ch);
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &text[s..byte]));
                start = None;
            }
            (false, None) => start = Some(byte),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(|(b, t)| (text[..b].chars().count() + 1, t))
        .collect()
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn number<T: std::str::FromStr>(line: usize, col: usize, tok: &str, what: &str) -> Result<T, SpecError> {
    tok.parse()
        .or_else(|_| err(line, col, format!("expected {what}, found '{tok}'")))
}

fn parse_domain(line: usize, offset: usize, rest: &str) -> Result<Domain, SpecError> {
    let toks = tokens(rest, &[]);
    let at = |k: usize| toks.get(k).map_or(offset + rest.chars().count(), |t| offset + t.0 - 1);
    let Some(&(_, kind)) = toks.first() else {
        return err(line, at(0), "missing domain kind (permutation, gf or cyclotomic)");
    };
    let expect = match kind {
        "permutation" => 2,
        "gf" | "cyclotomic" => 3,
        other => return err(line, at(0), format!("unknown domain kind '{other}'")),
    };
    if toks.len() != expect {
        return err(
            line,
            at(toks.len().min(expect)),
            format!("domain '{kind}' takes {} parameter(s)", expect - 1),
        );
    }
    let param = |k: usize, what: &str| -> Result<u32, SpecError> {
        let v: u32 = number(line, at(k), toks[k].1, what)?;
        if v == 0 {
            return err(line, at(k), format!("{what} must be positive"));
        }
        Ok(v)
    };
    Ok(match kind {
        "permutation" => Domain::Permutation {
            degree: param(1, "degree")? as usize,
        },
        "gf" => {
            let p = param(1, "prime")?;
            if !is_prime(p) {
                return err(line, at(1), format!("{p} is not prime"));
            }
            Domain::MatrixModP {
                p,
                dim: param(2, "dimension")? as usize,
            }
        }
        _ => Domain::MatrixCyclotomic {
            order: param(1, "order")?,
            dim: param(2, "dimension")? as usize,
        },
    })
}

fn parse_cyclotomic(line: usize, col: usize, tok: &str, order: u32) -> Result<Cyclotomic, SpecError> {
    let (nums, den) = match tok.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (tok, None),
    };
    let den: BigInt = match den {
        Some(d) => number(line, col + nums.chars().count() + 1, d, "denominator")?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return err(line, col, "zero denominator");
    }
    let mut coeffs = Vec::new();
    let mut c = col;
    for part in nums.split(',') {
        let a: BigInt = number(line, c, part, "integer coefficient")?;
        coeffs.push(BigRational::new(a, den.clone()));
        c += part.chars().count() + 1;
    }
    if coeffs.len() > order as usize {
        return err(line, col, format!("more than {order} coefficients"));
    }
    Ok(Cyclotomic::from_coeffs(order, coeffs))
}

fn parse_generator(line: usize, text: &str, domain: Domain) -> Result<DomainElement, SpecError> {
    let end = text.chars().count() + 1;
    match domain {
        Domain::Permutation { degree } => {
            let toks = tokens(text, &[',', '[', ']']);
            if toks.len() != degree {
                return err(line, end, format!("expected {degree} images, found {}", toks.len()));
            }
            let mut seen = vec![false; degree];
            let mut images = Vec::with_capacity(degree);
            for (col, t) in toks {
                let x: u32 = number(line, col, t, "point")?;
                if x as usize >= degree {
                    return err(line, col, format!("point {x} out of range 0..{degree}"));
                }
                if std::mem::replace(&mut seen[x as usize], true) {
                    return err(line, col, format!("point {x} repeated; not a permutation"));
                }
                images.push(x);
            }
            Ok(DomainElement::permutation(images))
        }
        Domain::MatrixModP { p, dim } => {
            let toks = tokens(text, &[',', '[', ']', ';']);
            if toks.len() != dim * dim {
                return err(line, end, format!("expected {} entries, found {}", dim * dim, toks.len()));
            }
            let vals = toks
                .iter()
                .map(|&(col, t)| number::<i64>(line, col, t, "integer entry"))
                .collect::<Result<Vec<_>, _>>()?;
            let rows: Vec<&[i64]> = vals.chunks(dim).collect();
            let m = DomainElement::matrix_mod_p(p, &rows);
            if !m.is_invertible() {
                return err(line, 1, format!("matrix is singular over F_{p}"));
            }
            Ok(m)
        }
        Domain::MatrixCyclotomic { order, dim } => {
            let toks = tokens(text, &[';']);
            if toks.len() != dim * dim {
                return err(line, end, format!("expected {} entries, found {}", dim * dim, toks.len()));
            }
            let entries = toks
                .iter()
                .map(|&(col, t)| parse_cyclotomic(line, col, t, order))
                .collect::<Result<Vec<_>, _>>()?;
            let m = DomainElement::matrix_cyclotomic(order, dim, entries);
            if !m.is_invertible() {
                return err(line, 1, "matrix is singular");
            }
            Ok(m)
        }
    }
}

pub fn parse_group_spec(doc: &str) -> Result<GroupSpec, SpecError> {
    let mut name = None;
    let mut domain = None;
    let mut generators = Vec::new();
    let mut last_line = 0;
    for (k, raw) in doc.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let text = raw.split('#').next().unwrap_or("");
        if text.trim().is_empty() {
            continue;
        }
        let indent = text.chars().take_while(|c| c.is_whitespace()).count();
        let body = text.trim_start();
        if let Some(rest) = body.strip_prefix("name:") {
            if domain.is_some() {
                return err(line, indent + 1, "'name:' must come before 'domain:'");
            }
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = body.strip_prefix("domain:") {
            if domain.is_some() {
                return err(line, indent + 1, "duplicate 'domain:' header");
            }
            domain = Some(parse_domain(line, indent + "domain:".len() + 1, rest)?);
        } else {
            let Some(d) = domain else {
                return err(line, indent + 1, "expected 'domain:' header before generators");
            };
            // Columns inside the generator are relative to the raw line.
            let g = parse_generator(line, text, d)?;
            generators.push(g);
        }
    }
    let Some(domain) = domain else {
        return err(last_line.max(1), 1, "missing 'domain:' header");
    };
    if generators.is_empty() {
        return err(last_line.max(1), 1, "no generators given");
    }
    Ok(GroupSpec {
        name,
        domain,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use burnside::group::close_generators;

    #[test]
    fn three_cycle() {
        let s = parse_group_spec("domain: permutation 3\n1 2 0\n").unwrap();
        assert_eq!(s.generators, vec![DomainElement::permutation(vec![1, 2, 0])]);
        let g = close_generators(&s.generators, 1000).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn sl25_is_binary_icosahedral() {
        let doc = "# SL(2,5)\nname: SL25\ndomain: gf 5 2\n[[1,1],[0,1]]\n[[0,4],[1,0]]\n";
        let s = parse_group_spec(doc).unwrap();
        assert_eq!(s.name.as_deref(), Some("SL25"));
        let g = close_generators(&s.generators, 1000).unwrap();
        assert_eq!(g.order(), 120);
    }

    #[test]
    fn gl23_subgroup() {
        let s = parse_group_spec("domain: gf 3 2\n[[1,1],[0,1]], \n [[0,1],[2,0]]\n").unwrap();
        let g = close_generators(&s.generators, 1000).unwrap();
        // Brute force: all products of the generators inside GL(2,3).
        let gens = &s.generators;
        let mut set = vec![DomainElement::identity(s.domain)];
        let mut i = 0;
        while i < set.len() {
            for x in gens {
                let y = set[i].compose(x);
                if !set.contains(&y) {
                    set.push(y);
                }
            }
            i += 1;
        }
        assert_eq!(g.order(), set.len());
        assert_eq!(g.order(), 24);
    }

    #[test]
    fn cyclotomic_entries() {
        let doc = "domain: cyclotomic 4 2\n0,1 0 ; 0 0,-1\n";
        let s = parse_group_spec(doc).unwrap();
        let g = close_generators(&s.generators, 1000).unwrap();
        assert_eq!(g.order(), 4);
        let half = parse_group_spec("domain: cyclotomic 3 1\n1,2/1\n");
        // 1 + 2 zeta3 = sqrt(-3) has infinite order; rejected only at closure time.
        assert!(half.is_ok());
    }

    #[test]
    fn errors_report_positions() {
        let e = parse_group_spec("domain: permutation 3\n1 x 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_group_spec("domain: permutation 3\n1 1 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_group_spec("domain: gf 4 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 12));
        let e = parse_group_spec("domain: lie 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 9));
        let e = parse_group_spec("1 2 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse_group_spec("domain: gf 3 2\n1 0 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("expected 4 entries"));
        let e = parse_group_spec("domain: gf 3 2\n1 0 0 0x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 7));
        let e = parse_group_spec("domain: cyclotomic 4 1\n1,z\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_group_spec("domain: gf 3 2\n1 1 1 1\n").unwrap_err();
        assert!(e.message.contains("singular"));
    }
}
