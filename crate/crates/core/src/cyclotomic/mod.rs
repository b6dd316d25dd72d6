//! Exact arithmetic in cyclotomic fields.
//!
//! A [`CycNum`] is an element of `Q(E(n))` where `E(n) = exp(2πi/n)`. Values are
//! kept in a canonical form: the order `n` is the conductor of the value (the
//! least `n` with the value in `Q(E(n))`, never `2 mod 4`), and the coefficients
//! are the coordinates in the Zumbroich basis of `Q(E(n))`. The Zumbroich basis
//! is a subset of the powers `E(n)^k`, so a value is stored as a sparse map from
//! exponents to rationals and equality of values is literal equality of the
//! representation.
//!
//! For `n = Π p^e` the exponent `k` belongs to the basis when, for every prime
//! `p`, the top base-`p` digit `i` of `k mod p^e` (that is `(k mod p^e) / p^(e-1)`)
//! satisfies `i != 0` for odd `p` and `i == 0` for `p = 2`. Non-basis powers are
//! rewritten with `1 + E(p) + ... + E(p)^(p-1) = 0` and `E(2) = -1`.

mod literal;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{factorize, gcd, lcm};

pub use literal::ParseCycError;

#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum CycError {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,
    #[error("galois exponent {k} is not coprime to the order {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("division by zero")]
    DivisionByZero,
}

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    order: u32,
    terms: BTreeMap<u32, BigRational>,
}

type Terms = BTreeMap<u32, BigRational>;

fn add_term(terms: &mut Terms, k: u32, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let entry = terms.entry(k).or_insert_with(BigRational::zero);
    *entry += c;
    if entry.is_zero() {
        terms.remove(&k);
    }
}

/// Rewrites `terms` (exponents mod `n`) into Zumbroich coordinates.
fn reduce(n: u32, mut terms: Terms) -> Terms {
    let n64 = n as u64;
    for (p, e) in factorize(n64) {
        let pe = p.pow(e);
        let top = pe / p;
        let step = (n64 / p) as u32;
        let bad: Vec<u32> = terms
            .keys()
            .copied()
            .filter(|&k| {
                let digit = (k as u64 % pe) / top;
                if p == 2 {
                    digit != 0
                } else {
                    digit == 0
                }
            })
            .collect();
        for k in bad {
            let c = match terms.remove(&k) {
                Some(c) => c,
                None => continue,
            };
            if p == 2 {
                add_term(&mut terms, (k + step) % n, -c);
            } else {
                for t in 1..p as u32 {
                    let kk = ((k as u64 + t as u64 * step as u64) % n64) as u32;
                    add_term(&mut terms, kk, -c.clone());
                }
            }
        }
    }
    terms
}

/// Tries to move a reduced value of order `n` into a maximal subfield `Q(E(n/p))`.
fn shrink_once(n: u32, terms: &Terms) -> Option<(u32, Terms)> {
    if n == 1 {
        return None;
    }
    if terms.is_empty() {
        return Some((1, Terms::new()));
    }
    for (p, e) in factorize(n as u64) {
        let p = p as u32;
        let m = n / p;
        if p == 2 && e == 1 || e >= 2 {
            if terms.keys().all(|k| k % p == 0) {
                let moved = terms.iter().map(|(k, c)| (k / p, c.clone())).collect();
                return Some((m, moved));
            }
            continue;
        }
        // p odd, exactly dividing n: every residue class mod m must carry the
        // same coefficient on all p-1 of its members.
        let mut groups: BTreeMap<u32, Vec<&BigRational>> = BTreeMap::new();
        for (k, c) in terms {
            groups.entry(k % m).or_default().push(c);
        }
        let fits = groups.values().all(|cs| cs.len() == (p - 1) as usize && cs.iter().all(|c| *c == cs[0]));
        if !fits {
            continue;
        }
        let mut moved = Terms::new();
        for (r, cs) in groups {
            // exponent k0 with k0 = r (mod m) and k0 = 0 (mod p), divided by p
            let k0 = (0..p).map(|t| r + t * m).find(|k| k % p == 0).unwrap();
            add_term(&mut moved, k0 / p, -cs[0].clone());
        }
        return Some((m, moved));
    }
    None
}

impl CycNum {
    /// Builds `Σ c·E(n)^k` from arbitrary (exponent, coefficient) pairs.
    pub fn from_terms<I>(n: u32, terms: I) -> Result<Self, CycError>
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        if n == 0 {
            return Err(CycError::ZeroOrder);
        }
        let mut raw = Terms::new();
        for (k, c) in terms {
            add_term(&mut raw, k.rem_euclid(n as i64) as u32, c);
        }
        Ok(Self::canonical(n, raw))
    }

    /// Same as [`CycNum::from_terms`] with integer coefficients.
    pub fn from_int_terms<I>(n: u32, terms: I) -> Result<Self, CycError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        Self::from_terms(n, terms.into_iter().map(|(k, c)| (k, BigRational::from_integer(BigInt::from(c)))))
    }

    fn canonical(n: u32, raw: Terms) -> Self {
        let mut n = n;
        let mut terms = reduce(n, raw);
        while let Some((m, moved)) = shrink_once(n, &terms) {
            n = m;
            terms = reduce(n, moved);
        }
        CycNum { order: n, terms }
    }

    pub fn zero() -> Self {
        CycNum { order: 1, terms: Terms::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, 0, r);
        CycNum { order: 1, terms }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `E(n)^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::from_int_terms(n, [(k, 1)]).expect("positive order")
    }

    /// Conductor of the value; rationals have order 1.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical (exponent, coefficient) pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.order == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.order != 1 {
            return None;
        }
        Some(self.terms.get(&0).cloned().unwrap_or_else(BigRational::zero))
    }

    /// The value as a machine integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        let r = self.as_rational()?;
        if !r.is_integer() {
            return None;
        }
        i64::try_from(r.to_integer()).ok()
    }

    fn lifted(&self, n: u32) -> impl Iterator<Item = (i64, BigRational)> + '_ {
        let scale = (n / self.order) as i64;
        self.terms.iter().map(move |(k, c)| (*k as i64 * scale, c.clone()))
    }

    pub fn add(&self, other: &CycNum) -> CycNum {
        let n = lcm(self.order as u64, other.order as u64) as u32;
        let mut raw = Terms::new();
        for (k, c) in self.lifted(n).chain(other.lifted(n)) {
            add_term(&mut raw, (k % n as i64) as u32, c);
        }
        Self::canonical(n, raw)
    }

    pub fn sub(&self, other: &CycNum) -> CycNum {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum { order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, -c.clone())).collect() }
    }

    pub fn mul(&self, other: &CycNum) -> CycNum {
        if self.is_zero() || other.is_zero() {
            return CycNum::zero();
        }
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        let n = lcm(self.order as u64, other.order as u64) as u32;
        let a: Vec<(i64, BigRational)> = self.lifted(n).collect();
        let b: Vec<(i64, BigRational)> = other.lifted(n).collect();
        let mut raw = Terms::new();
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                add_term(&mut raw, ((ka + kb) % n as i64) as u32, ca * cb);
            }
        }
        Self::canonical(n, raw)
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        if r.is_zero() {
            return CycNum::zero();
        }
        CycNum { order: self.order, terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    pub fn scale_int(&self, v: i64) -> CycNum {
        self.scale(&BigRational::from_integer(BigInt::from(v)))
    }

    /// Complex conjugation, `E(n) -> E(n)^-1`.
    pub fn conj(&self) -> CycNum {
        self.galois(-1).expect("-1 is a unit modulo every order")
    }

    /// The Galois automorphism `E(n) -> E(n)^k`; `k` must be coprime to the order.
    pub fn galois(&self, k: i64) -> Result<CycNum, CycError> {
        let n = self.order as i64;
        if gcd(k.rem_euclid(n) as u64, n as u64) != 1 {
            return Err(CycError::NotCoprime { k, n: self.order });
        }
        let mut raw = Terms::new();
        for (e, c) in &self.terms {
            add_term(&mut raw, ((*e as i64 * k).rem_euclid(n)) as u32, c.clone());
        }
        Ok(Self::canonical(self.order, raw))
    }

    /// Galois automorphism by an exponent coprime to some multiple `m` of the
    /// order (as used by power maps); `k` is reduced modulo the order first.
    pub fn galois_mod(&self, k: i64) -> CycNum {
        self.galois(k.rem_euclid(self.order as i64)).expect("exponent coprime to a multiple of the order")
    }

    /// Multiplicative inverse through the Galois norm.
    pub fn inv(&self) -> Result<CycNum, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(CycNum::from_rational(r.recip()));
        }
        let n = self.order as i64;
        let mut others = CycNum::one();
        for k in 2..n {
            if gcd(k as u64, n as u64) == 1 {
                others = others.mul(&self.galois(k)?);
            }
        }
        let norm = self.mul(&others).as_rational().expect("the field norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn pow(&self, mut e: u32) -> CycNum {
        let mut base = self.clone();
        let mut acc = CycNum::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Floating point value, for display and sanity checks only.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.order as f64;
        self.terms.iter().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = rational_to_f64(c);
            let t = 2.0 * std::f64::consts::PI * *k as f64 / n;
            (re + c * t.cos(), im + c * t.sin())
        })
    }

    /// Parses the `c*E(n)^k` literal grammar.
    pub fn parse(s: &str) -> Result<CycNum, ParseCycError> {
        literal::parse(s)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Canonical total order: by conductor, then term by term with exponents
/// ascending and, at equal exponents, larger coefficients first. Under this
/// order the rational 1 precedes every other root of unity.
impl Ord for CycNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| {
            let mut a = self.terms.iter();
            let mut b = other.terms.iter();
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((ka, ca)), Some((kb, cb))) => {
                        let o = ka.cmp(kb).then_with(|| cb.cmp(ca));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for CycNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if *k == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "E({})", self.order)?;
            if *k != 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

impl From<i64> for CycNum {
    fn from(v: i64) -> Self {
        CycNum::from_int(v)
    }
}

impl std::ops::Add for &CycNum {
    type Output = CycNum;
    fn add(self, rhs: &CycNum) -> CycNum {
        CycNum::add(self, rhs)
    }
}

impl std::ops::Sub for &CycNum {
    type Output = CycNum;
    fn sub(self, rhs: &CycNum) -> CycNum {
        CycNum::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycNum {
    type Output = CycNum;
    fn mul(self, rhs: &CycNum) -> CycNum {
        CycNum::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum::neg(self)
    }
}

/// `Σ_{k=1}^{p-1} (k/p) E(p)^k`, whose square is `(-1)^((p-1)/2) p`.
pub fn quadratic_gauss_sum(p: u64) -> CycNum {
    CycNum::from_int_terms(p as u32, (1..p as i64).map(|k| (k, crate::arith::legendre(k, p)))).expect("positive order")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn z(n: u32, k: i64) -> CycNum {
        CycNum::root_of_unity(n, k)
    }

    #[test]
    fn make_examples() {
        assert!(CycNum::from_int_terms(3, [(0, 1), (1, 1), (2, 1)]).unwrap().is_zero());
        assert_eq!(CycNum::from_int_terms(4, [(2, 1)]).unwrap(), CycNum::from_int(-1));
        assert_eq!(CycNum::from_int_terms(5, [(1, 1), (2, 1), (3, 1), (4, 1)]).unwrap(), CycNum::from_int(-1));
        assert_eq!(CycNum::from_terms(1, [(0, r(3, 4))]).unwrap().as_rational(), Some(r(3, 4)));
        assert_eq!(CycNum::from_int_terms(0, [(0, 1)]), Err(CycError::ZeroOrder));
    }

    #[test]
    fn arithmetic_examples() {
        let a = CycNum::from_int_terms(5, [(1, 1), (4, 1)]).unwrap();
        let b = CycNum::from_int_terms(5, [(2, 1), (3, 1)]).unwrap();
        assert_eq!(&a + &b, CycNum::from_int(-1));
        assert!((&z(6, 1) * &z(6, 5)).is_one());
    }

    /// Brute-force expansion of a product of two exponent sums, reduced with
    /// Φ_7 = 1 + x + ... + x^6 by hand: collect x^k coefficients mod 7, then
    /// subtract the x^6 coefficient from all others.
    fn naive_square_mod_phi7(coeffs: &[i64; 7]) -> [i64; 6] {
        let mut full = [0i64; 7];
        for i in 0..7 {
            for j in 0..7 {
                full[(i + j) % 7] += coeffs[i] * coeffs[j];
            }
        }
        let mut out = [0i64; 6];
        for k in 0..6 {
            out[k] = full[k] - full[6];
        }
        out
    }

    #[test]
    fn gauss_sum_square_is_minus_seven() {
        let mut coeffs = [0i64; 7];
        for k in 1..7 {
            coeffs[k] = crate::arith::legendre(k as i64, 7);
        }
        // oracle: the power-basis coordinates of s^2 are (-7, 0, ..., 0)
        assert_eq!(naive_square_mod_phi7(&coeffs), [-7, 0, 0, 0, 0, 0]);
        let s = quadratic_gauss_sum(7);
        assert_eq!(&s * &s, CycNum::from_int(-7));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(z(3, 1).conj(), z(3, 2));
        assert_eq!(CycNum::from_int(5).conj(), CycNum::from_int(5));
        // |(-1+s)/2|^2 = (1 + 7)/4 = 2 since s is purely imaginary with s^2 = -7
        let s = quadratic_gauss_sum(7);
        let v = (&s - &CycNum::one()).scale(&r(1, 2));
        assert_eq!(&v.conj() * &v, CycNum::from_int(2));
    }

    #[test]
    fn galois_examples() {
        assert_eq!(z(5, 1).galois(2).unwrap(), z(5, 2));
        assert_eq!(CycNum::from_int(3).galois(7).unwrap(), CycNum::from_int(3));
        // (-1+√5)/2 = E(5)+E(5)^4, and E(5)->E(5)^2 sends it to E(5)^2+E(5)^3
        let golden = CycNum::from_int_terms(5, [(1, 1), (4, 1)]).unwrap();
        let other = CycNum::from_int_terms(5, [(2, 1), (3, 1)]).unwrap();
        assert_eq!(golden.galois(2).unwrap(), other);
        let sqrt5 = &golden.scale_int(2) + &CycNum::one();
        assert_eq!(&sqrt5 * &sqrt5, CycNum::from_int(5));
        assert_eq!(z(3, 1).galois(3), Err(CycError::NotCoprime { k: 3, n: 3 }));
    }

    #[test]
    fn zero_test_examples() {
        assert!(CycNum::from_int_terms(7, (0..7).map(|k| (k, 1))).unwrap().is_zero());
        // in Q(E(8)): E(8)^5 = -E(8), so the sum collapses to E(8)^3 = -E(8)^7
        let v = CycNum::from_int_terms(8, [(1, 1), (3, 1), (5, 1)]).unwrap();
        assert!(!v.is_zero());
        assert_eq!(v, z(8, 7).neg());
        assert!(!CycNum::one().is_zero());
    }

    #[test]
    fn order_is_minimised() {
        // E(6) = -E(3)^2
        assert_eq!(z(6, 1).order(), 3);
        assert_eq!(z(6, 1), z(3, 2).neg());
        // E(12)^4 = E(3)
        assert_eq!(z(12, 4), z(3, 1));
        // i = E(4) inside Q(E(20))
        assert_eq!(z(20, 5).order(), 4);
        // √-3 = E(3) - E(3)^2 read from E(15) and E(9) expressions
        let s3 = &z(3, 1) - &z(3, 2);
        let via15 = &z(15, 5) - &z(15, 10);
        let via9 = &z(9, 3) - &z(9, 6);
        assert_eq!(s3, via15);
        assert_eq!(s3, via9);
        // E(7)+E(7)^6 + E(7)^2+E(7)^5 + E(7)^3+E(7)^4 = -1
        assert_eq!(CycNum::from_int_terms(7, (1..7).map(|k| (k, 1))).unwrap(), CycNum::from_int(-1));
    }

    #[test]
    fn inverse_and_display() {
        let a = CycNum::from_int_terms(7, [(0, 2), (1, 1), (3, -1)]).unwrap();
        let ai = a.inv().unwrap();
        assert!((&a * &ai).is_one());
        assert_eq!(CycNum::zero().inv(), Err(CycError::DivisionByZero));
        let v = CycNum::parse("-1/2+1/2*E(7)+1/2*E(7)^2+1/2*E(7)^4").unwrap();
        assert_eq!(CycNum::parse(&v.to_string()).unwrap(), v);
        assert_eq!(z(8, 3).to_string(), "E(8)^3");
        assert_eq!(CycNum::from_int(-2).to_string(), "-2");
    }

    #[test]
    fn ordering_puts_one_first_among_roots() {
        let mut v = vec![z(3, 1), CycNum::from_int(-1), CycNum::one(), z(4, 1)];
        v.sort();
        assert!(v[0].is_one());
    }
}
