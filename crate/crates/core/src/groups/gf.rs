//! Finite fields GF(p^f) with log/antilog tables.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! coefficients of the residue polynomial (least significant digit = constant
//! term). The defining polynomial is the Conway polynomial when it is listed in
//! [`CONWAY`], otherwise the lexicographically least primitive monic
//! polynomial; either way `x` is a primitive element and has encoding `p`.
//! For prime fields the generator is the least primitive root.
//!
//! | q | polynomial |
//! |---|------------|
//! | 4 | x^2+x+1 |
//! | 8 | x^3+x+1 |
//! | 9 | x^2+2x+2 |
//! | 16 | x^4+x+1 |
//! | 25 | x^2+4x+2 |
//! | 27 | x^3+2x+1 |
//! | 32 | x^5+x^2+1 |
//! | 49 | x^2+6x+3 |
//! | 64 | x^6+x^4+x^3+x+1 |
//! | 81 | x^4+2x^3+2 |

use crate::arith::{pow_mod, prime_power, primitive_root};

/// Conway polynomials as `(p, f, low coefficients c_0..c_{f-1})` of the monic
/// polynomial `x^f + c_{f-1} x^{f-1} + ... + c_0`.
pub const CONWAY: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (3, 5, &[1, 2, 0, 0, 0]),
    (5, 2, &[2, 4]),
    (5, 3, &[3, 3, 0]),
    (7, 2, &[3, 6]),
    (7, 3, &[4, 0, 6]),
    (11, 2, &[2, 7]),
    (13, 2, &[2, 12]),
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GfError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {0} is larger than supported")]
    TooLarge(u64),
}

/// A field element, encoded as described in the module docs.
pub type Fq = u32;

#[derive(Debug, Clone)]
pub struct Gf {
    p: u32,
    f: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<Fq>,
    log: Vec<u32>,
}

fn digits(x: u32, p: u32, f: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(f as usize);
    let mut x = x;
    for _ in 0..f {
        v.push(x % p);
        x /= p;
    }
    v
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplies the encoded polynomial by `x` modulo the monic `modulus`.
fn times_x(v: u32, p: u32, f: u32, modulus: &[u32]) -> u32 {
    let mut d = digits(v, p, f);
    let top = d[f as usize - 1];
    for i in (1..f as usize).rev() {
        d[i] = d[i - 1];
    }
    d[0] = 0;
    for i in 0..f as usize {
        d[i] = (d[i] + p * p - top * modulus[i] % p) % p;
    }
    encode(&d, p)
}

/// Powers of `x` modulo `modulus`; `None` unless `x` has order `q - 1`.
fn power_table(p: u32, f: u32, modulus: &[u32]) -> Option<Vec<Fq>> {
    let q = p.pow(f);
    let mut exp = Vec::with_capacity(q as usize - 1);
    let mut v = 1;
    for i in 0..q - 1 {
        if i > 0 && v == 1 {
            return None;
        }
        exp.push(v);
        v = times_x(v, p, f, modulus);
    }
    (v == 1).then_some(exp)
}

impl Gf {
    pub fn new(q: u64) -> Result<Gf, GfError> {
        let (p, f) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        if q > 1 << 16 {
            return Err(GfError::TooLarge(q));
        }
        let (p, q) = (p as u32, q as u32);
        let (modulus, exp) = if f == 1 {
            let g = primitive_root(p as u64);
            let exp: Vec<Fq> = (0..p - 1).map(|i| pow_mod(g, i as u64, p as u64) as u32).collect();
            (vec![(p - g as u32) % p], exp)
        } else {
            let listed = CONWAY
                .iter()
                .find(|(pp, ff, _)| *pp == p && *ff == f)
                .map(|(_, _, c)| c.to_vec())
                .and_then(|m| power_table(p, f, &m).map(|e| (m, e)));
            match listed {
                Some(found) => found,
                None => (0..q)
                    .map(|c| digits(c, p, f))
                    .find_map(|m| power_table(p, f, &m).map(|e| (m, e)))
                    .expect("a primitive polynomial exists"),
            }
        };
        let mut log = vec![0; q as usize];
        for (i, &v) in exp.iter().enumerate() {
            log[v as usize] = i as u32;
        }
        Ok(Gf { p, f, q, modulus, exp, log })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    /// Low coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element used for logarithms.
    pub fn generator(&self) -> Fq {
        self.exp[1 % self.exp.len()]
    }

    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.f == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.f {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Fq) -> Fq {
        if self.f == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.f {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: Fq) -> Option<Fq> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    pub fn pow(&self, a: Fq, e: u64) -> Fq {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// Discrete logarithm to the base [`Gf::generator`].
    pub fn log(&self, a: Fq) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `ω^i` for the primitive element `ω`.
    pub fn exp(&self, i: i64) -> Fq {
        self.exp[i.rem_euclid((self.q - 1) as i64) as usize]
    }

    /// The Frobenius map `x -> x^p`.
    pub fn frobenius(&self, a: Fq) -> Fq {
        self.pow(a, self.p as u64)
    }

    /// `x -> x^(p^k)`.
    pub fn frobenius_pow(&self, a: Fq, k: u32) -> Fq {
        (0..k % self.f).fold(a, |x, _| self.frobenius(x))
    }

    pub fn is_square(&self, a: Fq) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize] % 2 == 0
    }

    /// Embeds an integer through the prime field.
    pub fn from_int(&self, v: i64) -> Fq {
        v.rem_euclid(self.p as i64) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_examples() {
        let gf4 = Gf::new(4).unwrap();
        let x = gf4.generator();
        assert_eq!(x, 2);
        assert_eq!(gf4.mul(x, x), gf4.add(x, 1));
        let gf5 = Gf::new(5).unwrap();
        assert_eq!(gf5.inv(2), Some(3));
        let gf9 = Gf::new(9).unwrap();
        let g = gf9.generator();
        assert_eq!(gf9.frobenius(g), gf9.pow(g, 3));
        assert_eq!(Gf::new(12).unwrap_err(), GfError::NotPrimePower(12));
    }

    #[test]
    fn listed_polynomials_are_primitive() {
        for &(p, f, c) in CONWAY {
            assert!(power_table(p, f, c).is_some(), "GF({p}^{f})");
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 7, 8, 9, 16, 25, 27] {
            let k = Gf::new(q).unwrap();
            let q = q as u32;
            for a in 0..q {
                assert_eq!(k.add(a, k.neg(a)), 0);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for c in [0, 1, q - 1] {
                        let lhs = k.mul(a, k.add(b, c));
                        let rhs = k.add(k.mul(a, b), k.mul(a, c));
                        assert_eq!(lhs, rhs);
                    }
                }
                // Frobenius is additive
                assert_eq!(k.frobenius(k.add(a, 1)), k.add(k.frobenius(a), 1));
            }
            assert_eq!(k.frobenius_pow(k.generator(), k.degree()), k.generator());
        }
    }
}
