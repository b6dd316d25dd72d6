//! Finite groups given by generators, enumerated in full, with conjugacy
//! class data.

pub mod construct;
mod data;
pub mod element;
pub mod gf;

use std::collections::{HashMap, HashSet, VecDeque};

use crate::arith::{gcd, lcm, prime_of_power};

pub use construct::{construct_family, construct_with_budget};
pub use element::{Arith, GroupElement, Mat, Twist};

/// Default element budget when neither a flag nor the environment sets one.
pub const DEFAULT_MAX_ORDER: usize = 2_000_000;

/// Environment variable overriding the element budget.
pub const MAX_ORDER_ENV: &str = "CHARTAB_MAX_ORDER";

pub fn default_max_order() -> usize {
    std::env::var(MAX_ORDER_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_MAX_ORDER)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("unknown group spec '{0}'")]
    UnknownSpec(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("group exceeds the element budget of {limit}")]
    BudgetExceeded { limit: usize },
    #[error("stored generators for {label} failed validation: {reason}")]
    Validation { label: String, reason: String },
}

#[derive(Debug, Clone)]
pub struct ConjClass {
    /// Smallest member under the element ordering.
    pub representative: GroupElement,
    pub size: u64,
    pub element_order: u64,
    /// `power_map[k]` is the class of `g^k`, for `0 <= k < element_order`.
    pub power_map: Vec<usize>,
}

impl ConjClass {
    /// Class index of `g^k` for any integer `k`.
    pub fn power(&self, k: i64) -> usize {
        self.power_map[k.rem_euclid(self.element_order as i64) as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterInfo {
    pub order: u64,
    pub cyclic: bool,
}

impl CenterInfo {
    /// The prime `p` when the center is a nontrivial `p`-group.
    pub fn prime(&self) -> Option<u64> {
        prime_of_power(self.order)
    }

    pub fn cyclic_prime_power(&self) -> bool {
        self.cyclic && self.prime().is_some()
    }
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    label: String,
    arith: Arith,
    gens: Vec<GroupElement>,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    classes: Vec<ConjClass>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    /// Enumerates the closure of `gens` and its conjugacy classes.
    pub fn generate(
        label: impl Into<String>,
        arith: Arith,
        gens: Vec<GroupElement>,
        max_order: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let gens: Vec<GroupElement> = gens.into_iter().map(|g| arith.canonical(g)).collect();
        let id = arith.identity();
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in &gens {
                let y = arith.mul(&elements[i], g);
                if !index.contains_key(&y) {
                    if elements.len() >= max_order {
                        return Err(GroupError::BudgetExceeded { limit: max_order });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let mut g = FiniteGroup {
            label: label.into(),
            arith,
            gens,
            elements,
            index,
            classes: Vec::new(),
            class_of: Vec::new(),
        };
        g.compute_classes();
        Ok(g)
    }

    fn compute_classes(&mut self) {
        let n = self.elements.len();
        let ar = &self.arith;
        let conj: Vec<(GroupElement, GroupElement)> = self.gens.iter().map(|g| (ar.inv(g), g.clone())).collect();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            orbit_of[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = &self.elements[members[head]];
                head += 1;
                for (gi, g) in &conj {
                    let y = ar.mul(&ar.mul(gi, x), g);
                    let j = self.index[&y];
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        members.push(j);
                    }
                }
            }
            orbits.push(members);
        }
        let mut keyed: Vec<(u64, u64, GroupElement, usize)> = orbits
            .iter()
            .enumerate()
            .map(|(o, m)| {
                let rep = m.iter().map(|&i| &self.elements[i]).min().expect("nonempty").clone();
                (ar.order(&rep), m.len() as u64, rep, o)
            })
            .collect();
        keyed.sort();
        let mut relabel = vec![0; orbits.len()];
        for (new, k) in keyed.iter().enumerate() {
            relabel[k.3] = new;
        }
        self.class_of = orbit_of.iter().map(|&o| relabel[o]).collect();
        let mut classes = Vec::with_capacity(keyed.len());
        for (order, size, rep, _) in keyed {
            let mut power_map = Vec::with_capacity(order as usize);
            let mut y = ar.identity();
            for _ in 0..order {
                power_map.push(self.class_of[self.index[&y]]);
                y = ar.mul(&y, &rep);
            }
            classes.push(ConjClass { representative: rep, size, element_order: order, power_map });
        }
        self.classes = classes;
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn arith(&self) -> &Arith {
        &self.arith
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.gens
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn index_of(&self, x: &GroupElement) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    /// Class index of the element with index `i`.
    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_of(&self, x: &GroupElement) -> Option<usize> {
        self.index_of(x).map(|i| self.class_of[i])
    }

    pub fn class_members(&self, c: usize) -> Vec<usize> {
        (0..self.elements.len()).filter(|&i| self.class_of[i] == c).collect()
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        self.arith.mul(x, y)
    }

    pub fn inv(&self, x: &GroupElement) -> GroupElement {
        self.arith.inv(x)
    }

    pub fn element_order(&self, x: &GroupElement) -> u64 {
        self.arith.order(x)
    }

    pub fn centralizer_order(&self, x: &GroupElement) -> Option<u64> {
        let c = self.class_of(x)?;
        Some(self.order() / self.classes[c].size)
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.classes.iter().fold(1, |e, c| lcm(e, c.element_order))
    }

    /// Class indices of the inverse of each class.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.power(-1)).collect()
    }

    pub fn center_info(&self) -> CenterInfo {
        let central: Vec<&ConjClass> = self.classes.iter().filter(|c| c.size == 1).collect();
        let order = central.len() as u64;
        let cyclic = central.iter().any(|c| c.element_order == order);
        CenterInfo { order, cyclic }
    }

    pub fn center(&self) -> FiniteGroup {
        let gens = self.classes.iter().filter(|c| c.size == 1).map(|c| c.representative.clone()).collect();
        self.subgroup(format!("Z({})", self.label), gens)
    }

    /// Normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> FiniteGroup {
        let ar = &self.arith;
        let mut gens: Vec<GroupElement> = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                gens.push(ar.commutator(a, b));
            }
        }
        let conj: Vec<(GroupElement, GroupElement)> = self.gens.iter().map(|g| (ar.inv(g), g.clone())).collect();
        loop {
            let h = self.subgroup(String::new(), gens.clone());
            let members: HashSet<&GroupElement> = h.elements.iter().collect();
            let mut added = false;
            for s in h.gens.clone() {
                for (gi, g) in &conj {
                    let y = ar.mul(&ar.mul(gi, &s), g);
                    if !members.contains(&y) {
                        gens.push(y);
                        added = true;
                    }
                }
            }
            if !added {
                let mut h = h;
                h.label = format!("{}'", self.label);
                return h;
            }
        }
    }

    /// Subgroup generated by elements of this group.
    pub fn subgroup(&self, label: String, gens: Vec<GroupElement>) -> FiniteGroup {
        FiniteGroup::generate(label, self.arith.clone(), gens, usize::MAX).expect("no budget for subgroups")
    }

    /// Number of elements of each order, sorted by order.
    pub fn order_statistics(&self) -> Vec<(u64, u64)> {
        let mut m: std::collections::BTreeMap<u64, u64> = Default::default();
        for c in &self.classes {
            *m.entry(c.element_order).or_default() += c.size;
        }
        m.into_iter().collect()
    }

    /// Classes whose elements are central.
    pub fn central_classes(&self) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| self.classes[c].size == 1).collect()
    }

    /// Whether the class equation and divisibility hold.
    pub fn class_equation_holds(&self) -> bool {
        let n = self.order();
        self.classes.iter().map(|c| c.size).sum::<u64>() == n
            && self.classes.iter().all(|c| n % c.size == 0 && n % c.element_order == 0)
    }

    /// Whether `gcd(k, o) = 1` power maps preserve element order.
    pub fn power_maps_consistent(&self) -> bool {
        self.classes.iter().enumerate().all(|(i, c)| {
            c.power_map[1 % c.element_order as usize] == i
                && (1..c.element_order).all(|k| {
                    gcd(k, c.element_order) != 1 || self.classes[c.power(k as i64)].element_order == c.element_order
                })
        })
    }
}
