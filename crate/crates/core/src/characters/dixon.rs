//! Complex irreducible characters by simultaneous diagonalisation of the
//! class-sum matrices over a prime field, followed by an exact lift of the
//! eigenvalue multiplicities to cyclotomic values.

use num_rational::BigRational;

use super::{CharacterError, ClassFunction};
use crate::arith::Cyclotomic;
use crate::group::{ConjClasses, FiniteGroup};

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p), "inverse of zero");
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `p = 1 (mod e)` with `p > 2 sqrt(|G|)`.
pub fn choose_prime(group_order: usize, exponent: u32) -> u64 {
    let e = exponent as u64;
    let four_n = 4 * group_order as u64;
    let mut p = e + 1;
    while p * p <= four_n || !is_prime(p) {
        p += e;
    }
    p
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime field has a primitive root")
}

/// Reduced row echelon form in place; drops zero rows and returns the pivot
/// column of each remaining row.
fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c];
                for j in 0..cols {
                    rows[k][j] = (rows[k][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : m x = 0}` for a square matrix `m`.
fn nullspace(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = m.first().map_or(0, Vec::len);
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - rows[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Class multiplication coefficients: `a[r][t][s] = #{x in C_r : x^-1 z_s in C_t}`
/// for a fixed `z_s` in `C_s`, so that the vector of central character
/// values is a common eigenvector of every `a[r]`.
fn class_matrices(g: &FiniteGroup, classes: &ConjClasses) -> Vec<Vec<Vec<u64>>> {
    let k = classes.len();
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for (r, members) in classes.members.iter().enumerate() {
        for (s, &z) in classes.representatives.iter().enumerate() {
            for &x in members {
                let t = classes.class_of[g.mul(g.inv(x), z)];
                a[r][t][s] += 1;
            }
        }
    }
    a
}

/// Splits `F_p^k` into common one-dimensional eigenspaces.
fn common_eigenvectors(mats: &[Vec<Vec<u64>>], k: usize, p: u64) -> Result<Vec<Vec<u64>>, CharacterError> {
    let mut identity = vec![vec![0u64; k]; k];
    for (i, row) in identity.iter_mut().enumerate() {
        row[i] = 1;
    }
    let mut todo = vec![identity];
    let mut done = Vec::new();
    while let Some(mut space) = todo.pop() {
        if space.len() == 1 {
            done.push(space.pop().unwrap());
            continue;
        }
        let pivots = rref(&mut space, p);
        let d = space.len();
        let mut split = false;
        for a in mats.iter().skip(1) {
            // Restriction: A b_i = sum_j R[j][i] b_j, read off on pivot rows.
            let images: Vec<Vec<u64>> = space
                .iter()
                .map(|b| {
                    (0..k)
                        .map(|t| (0..k).map(|s| a[t][s] * b[s] % p).sum::<u64>() % p)
                        .collect()
                })
                .collect();
            let r: Vec<Vec<u64>> = (0..d)
                .map(|j| (0..d).map(|i| images[i][pivots[j]]).collect())
                .collect();
            let mut pieces = Vec::new();
            let mut covered = 0;
            for lambda in 0..p {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|j| {
                        (0..d)
                            .map(|i| if i == j { (r[j][i] + p - lambda) % p } else { r[j][i] })
                            .collect()
                    })
                    .collect();
                let ns = nullspace(&shifted, p);
                if ns.is_empty() {
                    continue;
                }
                covered += ns.len();
                pieces.push(ns);
                if covered == d {
                    break;
                }
            }
            if covered != d {
                return Err(CharacterError::NotDiagonalizable);
            }
            if pieces.len() == 1 {
                continue;
            }
            for ns in pieces {
                let sub: Vec<Vec<u64>> = ns
                    .iter()
                    .map(|coef| {
                        (0..k)
                            .map(|t| (0..d).map(|i| coef[i] * space[i][t] % p).sum::<u64>() % p)
                            .collect()
                    })
                    .collect();
                todo.push(sub);
            }
            split = true;
            break;
        }
        if !split {
            return Err(CharacterError::CannotSplit { dimension: d });
        }
    }
    Ok(done)
}

/// Computes every complex irreducible character (unsorted).
pub(super) fn dixon_schneider(g: &FiniteGroup, classes: &ConjClasses) -> Result<Vec<ClassFunction>, CharacterError> {
    let n = g.order();
    let k = classes.len();
    let e = g.exponent();
    let p = choose_prime(n, e);
    let z = pow_mod(primitive_root(p), (p - 1) / e as u64, p);

    let mats = class_matrices(g, classes);
    let vectors = common_eigenvectors(&mats, k, p)?;
    if vectors.len() != k {
        return Err(CharacterError::CannotSplit { dimension: k });
    }
    let inverse_class: Vec<usize> = classes
        .representatives
        .iter()
        .map(|&x| classes.class_of[g.inv(x)])
        .collect();
    let sizes: Vec<u64> = classes.sizes.iter().map(|&s| s as u64).collect();
    let max_degree = (n as f64).sqrt().floor() as u64;

    let mut out = Vec::with_capacity(k);
    for w in vectors {
        if w[0] == 0 {
            return Err(CharacterError::LiftInconsistent("eigenvector vanishes at the identity".into()));
        }
        let s0 = inv_mod(w[0], p);
        let w: Vec<u64> = w.iter().map(|&x| x * s0 % p).collect();
        let norm = (0..k).fold(0u64, |acc, s| {
            (acc + w[s] * w[inverse_class[s]] % p * inv_mod(sizes[s] % p, p)) % p
        });
        if norm == 0 {
            return Err(CharacterError::LiftInconsistent("zero norm".into()));
        }
        let target = n as u64 % p * inv_mod(norm, p) % p;
        let degree = (1..=max_degree)
            .find(|&d| d * d % p == target && (n as u64).is_multiple_of(d))
            .ok_or_else(|| CharacterError::LiftInconsistent("no admissible degree".into()))?;
        let theta: Vec<u64> = (0..k)
            .map(|t| degree % p * w[t] % p * inv_mod(sizes[t] % p, p) % p)
            .collect();

        let mut values = Vec::with_capacity(k);
        for (t, &rep) in classes.representatives.iter().enumerate() {
            let o = classes.element_orders[t] as u64;
            let zo = pow_mod(z, e as u64 / o, p);
            let zo_inv = inv_mod(zo, p);
            let powers: Vec<usize> = (0..o as i64).map(|l| classes.class_of[g.pow(rep, l)]).collect();
            let inv_o = inv_mod(o % p, p);
            let mut terms = Vec::new();
            let mut total = 0u64;
            for j in 0..o {
                let step = pow_mod(zo_inv, j, p);
                let mut acc = 0u64;
                let mut root = 1u64;
                for &c in &powers {
                    acc = (acc + theta[c] * root) % p;
                    root = root * step % p;
                }
                let m = acc * inv_o % p;
                if m > degree {
                    return Err(CharacterError::LiftInconsistent(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                total += m;
                if m > 0 {
                    terms.push((j * (e as u64 / o), BigRational::from_integer(m.into())));
                }
            }
            if total != degree {
                return Err(CharacterError::LiftInconsistent(format!(
                    "multiplicities sum to {total}, expected {degree}"
                )));
            }
            values.push(Cyclotomic::from_terms(e, terms));
        }
        out.push(ClassFunction::new(values));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(choose_prime(120, 60), 61);
        assert_eq!(choose_prime(8, 4), 13);
        assert_eq!(choose_prime(2, 2), 3);
        let p = 61;
        let g = primitive_root(p);
        assert_eq!(pow_mod(g, 60, p), 1);
        assert!((1..60).all(|k| pow_mod(g, k, p) != 1));
    }

    #[test]
    fn nullspace_mod_p() {
        let m = vec![vec![1, 2], vec![2, 4]];
        let ns = nullspace(&m, 7);
        assert_eq!(ns, vec![vec![5, 1]]);
    }
}
