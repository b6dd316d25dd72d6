//! Character tables with exact values, their invariants, and comparison up to
//! a relabelling of classes.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::prime_of_power;
use crate::cyclotomic::CycNum;
use crate::groups::{CenterInfo, FiniteGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    pub element_order: u64,
    /// `power_map[k]` is the class of `g^k` for `0 <= k < element_order`.
    pub power_map: Vec<usize>,
}

impl ClassInfo {
    pub fn power(&self, k: i64) -> usize {
        self.power_map[k.rem_euclid(self.element_order as i64) as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTable {
    pub label: String,
    pub order: u64,
    pub classes: Vec<ClassInfo>,
    pub characters: Vec<Vec<CycNum>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("table shape: {0}")]
    Shape(String),
    #[error("class equation fails: {0}")]
    ClassEquation(String),
    #[error("column orthogonality fails for classes {0} and {1}")]
    ColumnOrthogonality(usize, usize),
    #[error("row orthogonality fails for characters {0} and {1}")]
    RowOrthogonality(usize, usize),
    #[error("sum of squared degrees is not the group order")]
    DegreeSum,
    #[error("first character is not the trivial character")]
    FirstNotTrivial,
}

/// Atlas-style names `1a, 2a, 7a, 7b, ...` from element orders in class order.
pub fn class_names(orders: &[u64]) -> Vec<String> {
    let mut seen = std::collections::HashMap::new();
    orders
        .iter()
        .map(|&o| {
            let n = seen.entry(o).or_insert(0usize);
            let name = format!("{o}{}", letters(*n));
            *n += 1;
            name
        })
        .collect()
}

fn letters(mut n: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push((b'a' + (n % 26) as u8) as char);
        if n < 26 {
            break;
        }
        n = n / 26 - 1;
    }
    s.iter().rev().collect()
}

impl CharTable {
    /// Class data taken from an enumerated group; no characters yet.
    pub fn classes_of(g: &FiniteGroup) -> Vec<ClassInfo> {
        let orders: Vec<u64> = g.classes().iter().map(|c| c.element_order).collect();
        g.classes()
            .iter()
            .zip(class_names(&orders))
            .map(|(c, name)| ClassInfo {
                name,
                size: c.size,
                element_order: c.element_order,
                power_map: c.power_map.clone(),
            })
            .collect()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.characters[i][0].as_integer().expect("degree is an integer") as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.characters.len()).map(|i| self.degree(i)).collect()
    }

    pub fn centralizer_order(&self, k: usize) -> u64 {
        self.order / self.classes[k].size
    }

    /// Index of the class containing inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.classes[k].power(-1)
    }

    /// Orders characters by degree, then by their values.
    pub fn sort_characters(&mut self) {
        let mut rows = std::mem::take(&mut self.characters);
        rows.sort_by(|a, b| {
            let da = a[0].as_integer();
            let db = b[0].as_integer();
            da.cmp(&db).then_with(|| a.cmp(b))
        });
        self.characters = rows;
    }

    /// Classes where character `i` vanishes, as `(class, element order)`.
    pub fn vanishing_classes(&self, i: usize) -> Vec<(usize, u64)> {
        self.characters[i]
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_zero())
            .map(|(k, _)| (k, self.classes[k].element_order))
            .collect()
    }

    pub fn vanishing_profile(&self) -> Vec<Vec<(usize, u64)>> {
        (0..self.characters.len()).map(|i| self.vanishing_classes(i)).collect()
    }

    /// Classes on which character `i` takes its degree.
    pub fn kernel_classes(&self, i: usize) -> Vec<usize> {
        let d = &self.characters[i][0];
        (0..self.classes.len()).filter(|&k| &self.characters[i][k] == d).collect()
    }

    /// `⟨χ_i, χ_j⟩` as an exact rational.
    pub fn inner_product(&self, i: usize, j: usize) -> CycNum {
        let mut acc = CycNum::zero();
        for k in 0..self.classes.len() {
            let t = self.characters[i][k].mul(&self.characters[j][k].conj());
            acc = acc.add(&t.scale_int(self.classes[k].size as i64));
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(self.order)))
    }

    /// The center read off the table: central classes have size 1, and it is
    /// cyclic when one of them has order `|Z|`.
    pub fn center_info(&self) -> CenterInfo {
        let central: Vec<&ClassInfo> = self.classes.iter().filter(|c| c.size == 1).collect();
        let order = central.len() as u64;
        CenterInfo { order, cyclic: central.iter().any(|c| c.element_order == order) }
    }

    /// Every nonlinear character vanishes somewhere.
    pub fn burnside_holds(&self) -> bool {
        (0..self.characters.len()).all(|i| self.degree(i) == 1 || !self.vanishing_classes(i).is_empty())
    }

    /// Every nonlinear character vanishes on some element of prime power order.
    pub fn prime_power_zero_holds(&self) -> bool {
        (0..self.characters.len())
            .all(|i| self.degree(i) == 1 || self.vanishing_classes(i).iter().any(|&(_, o)| prime_of_power(o).is_some()))
    }

    pub fn validate(&self) -> Result<(), TableError> {
        let r = self.classes.len();
        if r == 0 {
            return Err(TableError::Shape("no classes".into()));
        }
        if self.characters.len() != r {
            return Err(TableError::Shape(format!("{} characters for {r} classes", self.characters.len())));
        }
        if let Some(i) = self.characters.iter().position(|row| row.len() != r) {
            return Err(TableError::Shape(format!("character {i} has {} values", self.characters[i].len())));
        }
        for (k, c) in self.classes.iter().enumerate() {
            if c.element_order == 0 || c.power_map.len() as u64 != c.element_order {
                return Err(TableError::Shape(format!("class {k} power map has the wrong length")));
            }
            if c.power_map.iter().any(|&t| t >= r) {
                return Err(TableError::Shape(format!("class {k} power map leaves the table")));
            }
        }
        if self.classes[0].size != 1 || self.classes[0].element_order != 1 {
            return Err(TableError::ClassEquation("first class is not the identity".into()));
        }
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            return Err(TableError::ClassEquation(format!("class sizes sum to {total}, not {}", self.order)));
        }
        if let Some(k) = self.classes.iter().position(|c| c.size == 0 || self.order % c.size != 0) {
            return Err(TableError::ClassEquation(format!("size of class {k} does not divide the order")));
        }
        if !self.characters[0].iter().all(|v| v.is_one()) {
            return Err(TableError::FirstNotTrivial);
        }
        let conj: Vec<Vec<CycNum>> = self.characters.iter().map(|row| row.iter().map(|v| v.conj()).collect()).collect();
        for k in 0..r {
            for l in k..r {
                let mut acc = CycNum::zero();
                for i in 0..r {
                    acc = acc.add(&self.characters[i][k].mul(&conj[i][l]));
                }
                let want = if k == l { CycNum::from_int(self.centralizer_order(k) as i64) } else { CycNum::zero() };
                if acc != want {
                    return Err(TableError::ColumnOrthogonality(k, l));
                }
            }
        }
        let n = BigRational::from_integer(BigInt::from(self.order));
        for i in 0..r {
            for j in i..r {
                let mut acc = CycNum::zero();
                for k in 0..r {
                    let t = self.characters[i][k].mul(&conj[j][k]);
                    acc = acc.add(&t.scale_int(self.classes[k].size as i64));
                }
                let want = if i == j { CycNum::from_rational(n.clone()) } else { CycNum::zero() };
                if acc != want {
                    return Err(TableError::RowOrthogonality(i, j));
                }
            }
        }
        let mut sq = BigRational::zero();
        for row in &self.characters {
            match row[0].as_rational() {
                Some(d) if d > BigRational::zero() && d.is_integer() => sq += &d * &d,
                _ => return Err(TableError::DegreeSum),
            }
        }
        if sq != n {
            return Err(TableError::DegreeSum);
        }
        Ok(())
    }

    /// Equality up to reordering classes (respecting size, element order and
    /// power maps) and reordering characters.
    pub fn equivalent(&self, other: &CharTable) -> bool {
        let r = self.classes.len();
        if self.order != other.order || r != other.classes.len() || self.characters.len() != other.characters.len() {
            return false;
        }
        let mut ours: Vec<u64> = self.degrees();
        let mut theirs: Vec<u64> = other.degrees();
        ours.sort();
        theirs.sort();
        if ours != theirs {
            return false;
        }
        let mut assign = vec![usize::MAX; r];
        let mut used = vec![false; r];
        self.match_column(other, 0, &mut assign, &mut used)
    }

    fn prefixes_match(&self, other: &CharTable, assign: &[usize], depth: usize) -> bool {
        let mut a: Vec<Vec<&CycNum>> =
            self.characters.iter().map(|row| (0..depth).map(|k| &row[k]).collect()).collect();
        let mut b: Vec<Vec<&CycNum>> =
            other.characters.iter().map(|row| (0..depth).map(|k| &row[assign[k]]).collect()).collect();
        a.sort();
        b.sort();
        a == b
    }

    fn match_column(&self, other: &CharTable, depth: usize, assign: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let r = self.classes.len();
        if depth == r {
            return (0..r).all(|k| {
                let c = &self.classes[k];
                let d = &other.classes[assign[k]];
                c.power_map.iter().zip(&d.power_map).all(|(&x, &y)| assign[x] == y)
            });
        }
        let c = &self.classes[depth];
        for cand in 0..r {
            let d = &other.classes[cand];
            if used[cand] || d.size != c.size || d.element_order != c.element_order {
                continue;
            }
            assign[depth] = cand;
            used[cand] = true;
            if self.prefixes_match(other, assign, depth + 1) && self.match_column(other, depth + 1, assign, used) {
                return true;
            }
            used[cand] = false;
        }
        assign[depth] = usize::MAX;
        false
    }
}

impl fmt::Display for CharTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (order {})", self.label, self.order)?;
        let names: Vec<&str> = self.classes.iter().map(|c| c.name.as_str()).collect();
        writeln!(f, "classes: {}", names.join(" "))?;
        let sizes: Vec<String> = self.classes.iter().map(|c| c.size.to_string()).collect();
        writeln!(f, "sizes:   {}", sizes.join(" "))?;
        for (i, row) in self.characters.iter().enumerate() {
            let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "X.{}: {}", i + 1, vals.join(" | "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> CharTable {
        let cls = |name: &str, size, o, pm: Vec<usize>| ClassInfo {
            name: name.into(),
            size,
            element_order: o,
            power_map: pm,
        };
        CharTable {
            label: "S3".into(),
            order: 6,
            classes: vec![cls("1a", 1, 1, vec![0]), cls("2a", 3, 2, vec![0, 1]), cls("3a", 2, 3, vec![0, 2, 2])],
            characters: vec![
                vec![1.into(), 1.into(), 1.into()],
                vec![1.into(), (-1).into(), 1.into()],
                vec![2.into(), 0.into(), (-1).into()],
            ],
        }
    }

    #[test]
    fn validates_s3() {
        let t = s3();
        t.validate().unwrap();
        assert_eq!(t.vanishing_classes(2), vec![(1, 2)]);
        assert_eq!(t.kernel_classes(1), vec![0, 2]);
        assert!(t.inner_product(2, 2).is_one());
        assert!(t.burnside_holds() && t.prime_power_zero_holds());
        assert_eq!(t.center_info(), CenterInfo { order: 1, cyclic: true });
    }

    #[test]
    fn forged_value_names_column_pair() {
        let mut t = s3();
        t.characters[2][2] = 1.into();
        assert_eq!(t.validate(), Err(TableError::ColumnOrthogonality(0, 2)));
    }

    #[test]
    fn equivalence_up_to_permutation() {
        let t = s3();
        let mut u = s3();
        u.classes.swap(1, 2);
        for row in &mut u.characters {
            row.swap(1, 2);
        }
        for c in &mut u.classes {
            for x in &mut c.power_map {
                *x = [0, 2, 1][*x];
            }
        }
        u.characters.swap(1, 2);
        assert!(t.equivalent(&u));
        let mut v = s3();
        v.characters[1][1] = 1.into();
        assert!(!t.equivalent(&v));
    }

    #[test]
    fn names() {
        assert_eq!(class_names(&[1, 2, 3, 7, 7]), vec!["1a", "2a", "3a", "7a", "7b"]);
        assert_eq!(letters(26), "aa");
    }
}
