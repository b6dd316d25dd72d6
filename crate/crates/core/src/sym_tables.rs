//! Symmetric group characters by the Murnaghan–Nakayama rule, restrictions
//! to alternating groups, and the zero witnesses for characters of degree 2^r.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::arith::{gcd, lcm};
use crate::cyclotomic::CycNum;
use crate::table::{class_names, CharTable, ClassInfo};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("parts must be positive and weakly decreasing")]
    NotAPartition,
    #[error("partitions of {0} and {1} cannot be paired")]
    SizeMismatch(u32, u32),
    #[error("r = {0} is too small for a witness")]
    RTooSmall(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition, SymError> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::NotAPartition);
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(mut parts: Vec<u32>) -> Result<Partition, SymError> {
        parts.sort_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    pub fn is_self_associate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Order of a permutation of this cycle type.
    pub fn cycle_order(&self) -> u64 {
        self.0.iter().fold(1, |acc, &p| lcm(acc, p as u64))
    }

    /// Whether a permutation of this cycle type is even.
    pub fn is_even_type(&self) -> bool {
        (self.n() - self.0.len() as u32) % 2 == 0
    }

    /// Cycle type of `g^k` for `g` of this type.
    pub fn power(&self, k: u64) -> Partition {
        let mut parts = Vec::new();
        for &c in &self.0 {
            let g = gcd(c as u64, k) as u32;
            parts.extend(std::iter::repeat(c / g).take(g as usize));
        }
        Partition::from_parts(parts).expect("positive parts")
    }

    /// Size of the S_n class of this cycle type.
    pub fn class_size(&self) -> u64 {
        let mut denom = BigUint::one();
        let mut counts: HashMap<u32, u32> = HashMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        for (&p, &m) in &counts {
            denom *= BigUint::from(p).pow(m) * factorial(m);
        }
        (factorial(self.n()) / denom).to_u64().expect("class size fits")
    }

    /// Parts all odd and distinct: the S_n class splits in A_n.
    pub fn splits_in_an(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1) && self.0.windows(2).all(|w| w[0] != w[1])
    }

    fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut h = Vec::new();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                h.push(row - j + conj.0[j as usize] - i as u32 - 1);
            }
        }
        h
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

type MemoKey = (Vec<u32>, Vec<u32>);

fn memo() -> &'static Mutex<HashMap<MemoKey, i64>> {
    static MEMO: OnceLock<Mutex<HashMap<MemoKey, i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// χ_λ on the class of cycle type μ.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64, SymError> {
    if lambda.n() != mu.n() {
        return Err(SymError::SizeMismatch(lambda.n(), mu.n()));
    }
    Ok(mn_rec(&lambda.0, &mu.0))
}

fn mn_rec(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo().lock().expect("memo lock").get(&key) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    // beta numbers, strictly decreasing
    let k = lambda.len();
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &p)| p + (k - 1 - i) as u32).collect();
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_by(|a, c| c.cmp(a));
        let len = nb.len();
        let shape: Vec<u32> =
            nb.iter().enumerate().map(|(i, &x)| x - (len - 1 - i) as u32).filter(|&p| p > 0).collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&shape, rest);
    }
    memo().lock().expect("memo lock").insert(key, total);
    total
}

/// Degree by the hook length formula.
pub fn sym_degree(lambda: &Partition) -> u128 {
    let prod = lambda.hooks().iter().fold(BigUint::one(), |acc, &h| acc * BigUint::from(h));
    (factorial(lambda.n()) / prod).to_u128().expect("degree fits")
}

/// Character table of S_n from the rule; classes ordered by element order,
/// size, then cycle type.
pub fn sn_table(n: u32) -> CharTable {
    let mut types = partitions(n);
    types.sort_by_key(|t| (t.cycle_order(), t.class_size(), t.clone()));
    let index: HashMap<Partition, usize> = types.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let orders: Vec<u64> = types.iter().map(|t| t.cycle_order()).collect();
    let classes = types
        .iter()
        .zip(class_names(&orders))
        .map(|(t, name)| ClassInfo {
            name,
            size: t.class_size(),
            element_order: t.cycle_order(),
            power_map: (0..t.cycle_order()).map(|k| index[&t.power(k)]).collect(),
        })
        .collect();
    let characters =
        partitions(n).iter().map(|l| types.iter().map(|t| CycNum::from_int(mn_rec(&l.0, &t.0))).collect()).collect();
    let mut table =
        CharTable { label: format!("S{n}"), order: factorial(n).to_u64().expect("fits"), classes, characters };
    table.sort_characters();
    table
}

/// A class of A_n: a cycle type, plus a half label when the S_n class splits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnClass {
    pub cycle_type: Partition,
    pub half: Option<char>,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnRow {
    Row(Vec<(AnClass, i64)>),
    /// λ is self-associate; its restriction splits and the values on split
    /// classes are not given by the rule.
    SplitCase,
}

/// Classes of A_n in the order used by [`an_character_values`].
pub fn an_classes(n: u32) -> Vec<AnClass> {
    let mut types: Vec<Partition> = partitions(n).into_iter().filter(|t| t.is_even_type()).collect();
    types.sort_by_key(|t| (t.cycle_order(), t.class_size(), t.clone()));
    let mut out = Vec::new();
    for t in types {
        let size = t.class_size();
        if t.splits_in_an() && n > 1 {
            for h in ['a', 'b'] {
                out.push(AnClass { cycle_type: t.clone(), half: Some(h), size: size / 2 });
            }
        } else {
            out.push(AnClass { cycle_type: t, half: None, size });
        }
    }
    out
}

/// Restriction of χ_λ to A_n.
pub fn an_character_values(lambda: &Partition) -> AnRow {
    if lambda.is_self_associate() {
        return AnRow::SplitCase;
    }
    AnRow::Row(
        an_classes(lambda.n())
            .into_iter()
            .map(|c| {
                let v = mn_rec(&lambda.0, &c.cycle_type.0);
                (c, v)
            })
            .collect(),
    )
}

/// `λ = (2^r, 1)` and a cycle type on which χ_λ is predicted to vanish.
pub fn two_power_zero_witness(r: u32) -> Result<(Partition, Partition), SymError> {
    if r < 3 {
        return Err(SymError::RTooSmall(r));
    }
    let n = (1u32 << r) + 1;
    let lambda = Partition(vec![1 << r, 1]);
    let mut mu = if n % 4 == 3 {
        let mut v = vec![4];
        v.extend(std::iter::repeat(2).take(((n - 5) / 2) as usize));
        v
    } else {
        let mut v = vec![4, 4];
        v.extend(std::iter::repeat(2).take(((n - 9) / 2) as usize));
        v
    };
    mu.push(1);
    Ok((lambda, Partition(mu)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_value(&p(&[5, 1]), &p(&[1; 6])).unwrap(), 5);
        assert_eq!(mn_value(&p(&[3, 2]), &p(&[5])).unwrap(), 0);
        assert_eq!(mn_value(&p(&[3, 2]), &p(&[4, 1])).unwrap(), -1);
        assert_eq!(mn_value(&p(&[3, 2]), &p(&[4])), Err(SymError::SizeMismatch(5, 4)));
    }

    #[test]
    fn degree_examples() {
        assert_eq!(sym_degree(&p(&[8, 1])), 8);
        assert_eq!(sym_degree(&p(&[2, 1, 1, 1, 1, 1, 1, 1])), 8);
        assert_eq!(sym_degree(&p(&[1; 7])), 1);
        for l in partitions(7) {
            assert_eq!(sym_degree(&l) as i64, mn_value(&l, &p(&[1; 7])).unwrap());
        }
    }

    #[test]
    fn an_examples() {
        match an_character_values(&p(&[4, 1])) {
            AnRow::Row(row) => {
                assert_eq!(row[0].1, 4);
                let zeros: Vec<u64> = row.iter().filter(|c| c.1 == 0).map(|c| c.0.cycle_type.cycle_order()).collect();
                assert_eq!(zeros, vec![2]);
            }
            AnRow::SplitCase => panic!("(4,1) is not self-associate"),
        }
        assert_eq!(an_character_values(&p(&[3, 1, 1])), AnRow::SplitCase);
        assert_eq!(sym_degree(&p(&[6, 1])), 6);
    }

    #[test]
    fn witnesses() {
        let (l, mu) = two_power_zero_witness(3).unwrap();
        assert_eq!((l.clone(), mu.clone()), (p(&[8, 1]), p(&[4, 4, 1])));
        assert_eq!(mn_value(&l, &mu).unwrap(), 0);
        assert_eq!(mu.cycle_order(), 4);
        let (l, mu) = two_power_zero_witness(4).unwrap();
        assert_eq!(mu, p(&[4, 4, 2, 2, 2, 2, 1]));
        assert_eq!(mn_value(&l, &mu).unwrap(), 0);
        assert_eq!(two_power_zero_witness(2), Err(SymError::RTooSmall(2)));
    }

    #[test]
    fn partition_basics() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[4, 1]).conjugate(), p(&[2, 1, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1]).class_size(), 3);
        assert_eq!(p(&[4, 2]).power(2), p(&[2, 2, 1, 1]));
    }

    #[test]
    fn sn_matches_oracle() {
        for n in 2..=6 {
            let t = sn_table(n);
            t.validate().unwrap();
            let g = crate::groups::construct_family(&format!("sn:{n}")).unwrap();
            let oracle = crate::dixon::character_table(&g).unwrap();
            assert!(t.equivalent(&oracle), "S{n}");
        }
    }
}
