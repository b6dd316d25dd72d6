//! Character tables of enumerated groups by the Dixon–Schneider method.
//!
//! Class multiplication coefficients give commuting matrices over a prime
//! field GF(ℓ) with ℓ ≡ 1 (mod exponent). Their common eigenvectors are the
//! central characters; degrees follow from the norm relation and the values
//! are lifted to cyclotomic integers through the power maps.

use rayon::prelude::*;

use crate::arith::{inv_mod, is_prime, isqrt, pow_mod, primitive_root};
use crate::cyclotomic::CycNum;
use crate::groups::FiniteGroup;
use crate::table::{CharTable, TableError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DixonError {
    #[error("eigenspaces of dimension {0} could not be split")]
    Unsplit(usize),
    #[error("no valid degree for a central character")]
    Degree,
    #[error("lifted value has inconsistent multiplicities on class {0}")]
    Lift(usize),
    #[error("oracle table failed validation: {0}")]
    Inconsistent(#[from] TableError),
}

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ > 2·sqrt(order)`.
pub fn modular_prime(exponent: u64, order: u64) -> u64 {
    let bound = 2 * isqrt(order) + 1;
    let mut l = exponent + 1;
    while l <= bound || !is_prime(l) {
        l += exponent;
    }
    l
}

/// `a[i][j][k]` for all classes, stored flat as `(k * r + i) * r + j`.
#[derive(Debug, Clone)]
pub struct ClassConstants {
    r: usize,
    data: Vec<u64>,
}

impl ClassConstants {
    pub fn compute(g: &FiniteGroup) -> ClassConstants {
        let r = g.classes().len();
        let elems = g.elements();
        let inv_class: Vec<(usize, crate::groups::GroupElement)> =
            elems.par_iter().enumerate().map(|(i, x)| (g.class_of_index(i), g.inv(x))).collect();
        let data: Vec<u64> = (0..r)
            .into_par_iter()
            .flat_map_iter(|k| {
                let z = &g.classes()[k].representative;
                let mut block = vec![0u64; r * r];
                for (ci, xi) in &inv_class {
                    let y = g.mul(xi, z);
                    let cj = g.class_of(&y).expect("closed");
                    block[ci * r + cj] += 1;
                }
                block
            })
            .collect();
        ClassConstants { r, data }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(k * self.r + i) * self.r + j]
    }
}

/// `a[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = z}` for a fixed `z ∈ C_k`, over all `k`.
pub fn class_mult_coeffs(g: &FiniteGroup, i: usize, j: usize) -> Vec<u64> {
    let members = g.class_members(i);
    g.classes()
        .iter()
        .map(|ck| {
            let z = &ck.representative;
            members
                .iter()
                .filter(|&&x| {
                    let y = g.mul(&g.inv(&g.elements()[x]), z);
                    g.class_of(&y) == Some(j)
                })
                .count() as u64
        })
        .collect()
}

/// Row-reduced basis `rows` with pivot columns.
struct Basis {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Basis {
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(sel) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, sel);
        let s = inv_mod(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = *v * s % p;
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..n {
                    rows[i][c] = (rows[i][c] + p - f * rows[rank][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Basis { rows, pivots }
}

/// Basis of `{y : A y = 0}` for a square matrix over GF(p).
fn nullspace(a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let b = rref(a, p);
    let free: Vec<usize> = (0..n).filter(|c| !b.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![0; n];
            y[f] = 1;
            for (row, &pc) in b.rows.iter().zip(&b.pivots) {
                y[pc] = (p - row[f]) % p;
            }
            y
        })
        .collect()
}

fn det_mod(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1;
    for col in 0..n {
        let Some(sel) = (col..n).find(|&i| a[i][col] != 0) else { return 0 };
        if sel != col {
            a.swap(sel, col);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let s = inv_mod(a[col][col], p);
        for i in col + 1..n {
            let f = a[i][col] * s % p;
            if f != 0 {
                for c in col..n {
                    a[i][c] = (a[i][c] + p - f * a[col][c] % p) % p;
                }
            }
        }
    }
    det
}

/// Splits the space spanned by `basis` into eigenspaces of `M_j`.
fn split(basis: &Basis, cc: &ClassConstants, j: usize, p: u64) -> Vec<Basis> {
    let r = cc.r;
    let d = basis.rows.len();
    // restricted matrix: column t holds the coordinates of M_j b_t
    let mut restricted = vec![vec![0u64; d]; d];
    for (t, b) in basis.rows.iter().enumerate() {
        for (s, &pc) in basis.pivots.iter().enumerate() {
            let mut acc = 0u64;
            for k in 0..r {
                acc = (acc + cc.get(pc, j, k) % p * b[k]) % p;
            }
            restricted[s][t] = acc;
        }
    }
    let mut out = Vec::new();
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|s| {
                (0..d).map(|t| if s == t { (restricted[s][t] + p - lambda) % p } else { restricted[s][t] }).collect()
            })
            .collect();
        if d > 1 && det_mod(shifted.clone(), p) != 0 {
            continue;
        }
        let null = nullspace(shifted, p);
        if null.is_empty() {
            continue;
        }
        let vecs: Vec<Vec<u64>> = null
            .iter()
            .map(|y| {
                let mut v = vec![0u64; r];
                for (t, &c) in y.iter().enumerate() {
                    for k in 0..r {
                        v[k] = (v[k] + c * basis.rows[t][k]) % p;
                    }
                }
                v
            })
            .collect();
        out.push(rref(vecs, p));
        if out.iter().map(|b| b.rows.len()).sum::<usize>() == d {
            break;
        }
    }
    out
}

/// Full character table of `g`, validated before it is returned.
pub fn character_table(g: &FiniteGroup) -> Result<CharTable, DixonError> {
    let classes = g.classes();
    let r = classes.len();
    let order = g.order();
    let e = g.exponent();
    let p = modular_prime(e, order);
    let cc = ClassConstants::compute(g);
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|k| (i == k) as u64).collect()).collect();
    let mut spaces = vec![rref(identity, p)];
    for j in 1..r {
        if spaces.iter().all(|b| b.rows.len() == 1) {
            break;
        }
        spaces =
            spaces.into_iter().flat_map(|b| if b.rows.len() == 1 { vec![b] } else { split(&b, &cc, j, p) }).collect();
    }
    if let Some(b) = spaces.iter().find(|b| b.rows.len() != 1) {
        return Err(DixonError::Unsplit(b.rows.len()));
    }
    let inverse: Vec<usize> = g.inverse_classes();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size % p).collect();
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);
    let mut characters = Vec::with_capacity(r);
    for b in &spaces {
        let v = &b.rows[0];
        let w0 = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * w0 % p).collect();
        let mut s = 0;
        for i in 0..r {
            s = (s + omega[i] * omega[inverse[i]] % p * inv_mod(sizes[i], p)) % p;
        }
        let target = order % p * inv_mod(s, p) % p;
        let d = (1..=isqrt(order)).find(|&d| d * d % p == target && order % d == 0).ok_or(DixonError::Degree)?;
        let modular: Vec<u64> = (0..r).map(|i| d * omega[i] % p * inv_mod(sizes[i], p) % p).collect();
        let mut row = Vec::with_capacity(r);
        for (i, c) in classes.iter().enumerate() {
            let o = c.element_order;
            let zo = pow_mod(z, e / o, p);
            let oinv = inv_mod(o % p, p);
            let mut terms = Vec::new();
            let mut total = 0;
            for t in 0..o {
                let mut acc = 0;
                for s in 0..o {
                    let root = pow_mod(zo, (o - t * s % o) % o, p);
                    acc = (acc + modular[c.power(s as i64)] * root) % p;
                }
                let m = acc * oinv % p;
                if m > d {
                    return Err(DixonError::Lift(i));
                }
                total += m;
                if m != 0 {
                    terms.push((t as i64, m as i64));
                }
            }
            if total != d {
                return Err(DixonError::Lift(i));
            }
            row.push(CycNum::from_int_terms(o as u32, terms).expect("positive order"));
        }
        characters.push(row);
    }
    let mut table = CharTable { label: g.label().to_string(), order, classes: CharTable::classes_of(g), characters };
    table.sort_characters();
    table.validate()?;
    Ok(table)
}
