//! Decision predicates on character tables: faithfulness, the three
//! vanishing-class conditions, one-class detection and the primitivity gate.

mod drivers;

pub use drivers::*;

use crate::arith::{prime_of_power, prime_power};
use crate::groups::CenterInfo;
use crate::table::CharTable;

/// Facts about the group that a character table alone does not carry.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Metadata {
    pub center: Option<CenterInfo>,
    pub out_order: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl Verdict {
    fn all(parts: &[Option<bool>]) -> Verdict {
        if parts.contains(&Some(false)) {
            Verdict::Fail
        } else if parts.contains(&None) {
            Verdict::Unknown
        } else {
            Verdict::Pass
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    ImprimitiveShapePossible,
    Unknown,
}

impl Primitivity {
    pub fn as_str(self) -> &'static str {
        match self {
            Primitivity::Primitive => "primitive",
            Primitivity::ImprimitiveShapePossible => "imprimitive-shape-possible",
            Primitivity::Unknown => "unknown",
        }
    }
}

/// Outcome of the three conditions for one faithful character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub index: usize,
    /// `p` when every vanishing class has the same order, a power of `p`.
    pub prime: Option<u64>,
    pub same_prime: bool,
    pub within_out: Option<bool>,
    pub center_ok: Option<bool>,
    pub verdict: Verdict,
}

/// Indices of characters whose kernel is the identity class alone.
pub fn faithful_characters(table: &CharTable) -> Vec<usize> {
    (0..table.characters.len()).filter(|&i| table.kernel_classes(i).len() == 1).collect()
}

/// Faithful characters vanishing on exactly one class.
pub fn one_class_characters(table: &CharTable) -> Vec<usize> {
    faithful_characters(table).into_iter().filter(|&i| table.vanishing_classes(i).len() == 1).collect()
}

/// The prime `p` when all orders are one and the same power of `p`.
fn common_prime(orders: &[u64]) -> Option<u64> {
    let first = *orders.first()?;
    if orders.iter().any(|&o| o != first) {
        return None;
    }
    prime_of_power(first)
}

fn check_one(table: &CharTable, i: usize, meta: &Metadata, p: Option<u64>) -> ConditionCheck {
    let zeros = table.vanishing_classes(i);
    let orders: Vec<u64> = zeros.iter().map(|z| z.1).collect();
    let prime = common_prime(&orders);
    let same_prime = prime.is_some() && (p.is_none() || p == prime);
    let within_out = meta.out_order.map(|b| zeros.len() as u64 <= b);
    let center_ok =
        meta.center.map(|c| c.order == 1 || (c.cyclic && same_prime && prime_power(c.order).map(|x| x.0) == prime));
    ConditionCheck {
        index: i,
        prime,
        same_prime,
        within_out,
        center_ok,
        verdict: Verdict::all(&[Some(same_prime), within_out, center_ok]),
    }
}

/// Evaluates the conditions for every faithful character. A given `p`
/// restricts the first condition to that prime.
pub fn vanishing_conditions(table: &CharTable, meta: &Metadata, p: Option<u64>) -> Vec<ConditionCheck> {
    faithful_characters(table).into_iter().map(|i| check_one(table, i, meta, p)).collect()
}

fn is_a5(label: &str) -> bool {
    matches!(label, "an:5" | "psl2:4" | "psl2:5" | "sl2:4" | "pgl2:4" | "sl2:5" | "2a5")
}

fn non_solvable(label: &str) -> bool {
    if matches!(label, "m10" | "m11" | "2a5" | "3a6" | "3a6:2_3") {
        return true;
    }
    let Some((fam, arg)) = label.split_once(':') else { return false };
    let Ok(n) = arg.parse::<u64>() else { return false };
    match fam {
        "sn" | "an" => n >= 5,
        "sl2" | "gl2" | "psl2" | "pgl2" | "psigmal2" => n >= 4 && prime_power(n).is_some(),
        _ => false,
    }
}

/// Shortcut against the two non-solvable imprimitivity shapes: an A5 quotient
/// with a subgroup of index 6, and PSL2(8):3 with a subgroup of index 14.
pub fn primitivity_gate(label: &str, degree: u64) -> Primitivity {
    if is_a5(label) {
        if degree < 6 {
            Primitivity::Primitive
        } else {
            Primitivity::ImprimitiveShapePossible
        }
    } else if label == "psigmal2:8" {
        if degree < 14 {
            Primitivity::Primitive
        } else {
            Primitivity::ImprimitiveShapePossible
        }
    } else if non_solvable(label) {
        Primitivity::Primitive
    } else {
        Primitivity::Unknown
    }
}

/// `|Out(G)|` for the constructible groups where it is known.
pub fn known_out_order(label: &str) -> Option<u64> {
    match label {
        "m10" => return Some(2),
        "m11" => return Some(1),
        "2a5" => return Some(2),
        "3a6" => return Some(4),
        "3a6:2_3" => return Some(2),
        _ => {}
    }
    let (fam, arg) = label.split_once(':')?;
    let n: u64 = arg.parse().ok()?;
    match fam {
        "an" if n >= 4 => Some(if n == 6 { 4 } else { 2 }),
        "sn" if n >= 3 => Some(if n == 6 { 2 } else { 1 }),
        "sl2" | "psl2" if n >= 4 => crate::lie_tables::out_order(n).ok(),
        "pgl2" if n >= 4 => prime_power(n).map(|(_, f)| f as u64),
        "psigmal2" if n >= 4 && n % 2 == 0 => Some(1),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterRecord {
    pub index: usize,
    pub degree: u64,
    pub faithful: bool,
    pub vanishing: Vec<(usize, u64)>,
    pub one_class: bool,
    pub primitivity: Primitivity,
    pub conditions: Option<ConditionCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub label: String,
    pub order: u64,
    pub meta: Metadata,
    pub records: Vec<CharacterRecord>,
    /// Pass when some faithful character passes all three conditions.
    pub verdict: Verdict,
}

pub fn classify(table: &CharTable, meta: &Metadata, p: Option<u64>) -> ClassificationReport {
    let faithful = faithful_characters(table);
    let mut records = Vec::with_capacity(table.characters.len());
    for i in 0..table.characters.len() {
        let is_faithful = faithful.contains(&i);
        let vanishing = table.vanishing_classes(i);
        records.push(CharacterRecord {
            index: i,
            degree: table.degree(i),
            faithful: is_faithful,
            one_class: is_faithful && vanishing.len() == 1,
            vanishing,
            primitivity: primitivity_gate(&table.label, table.degree(i)),
            conditions: is_faithful.then(|| check_one(table, i, meta, p)),
        });
    }
    let verdicts: Vec<Verdict> = records.iter().filter_map(|r| r.conditions.as_ref().map(|c| c.verdict)).collect();
    let verdict = if verdicts.contains(&Verdict::Pass) {
        Verdict::Pass
    } else if verdicts.contains(&Verdict::Unknown) {
        Verdict::Unknown
    } else {
        Verdict::Fail
    };
    ClassificationReport { label: table.label.clone(), order: table.order, meta: *meta, records, verdict }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dixon::character_table;
    use crate::groups::construct_family;

    fn oracle(spec: &str) -> (CharTable, Metadata) {
        let g = construct_family(spec).unwrap();
        let meta = Metadata { center: Some(g.center_info()), out_order: known_out_order(spec) };
        (character_table(&g).unwrap(), meta)
    }

    fn degrees(t: &CharTable, idx: &[usize]) -> Vec<u64> {
        idx.iter().map(|&i| t.degree(i)).collect()
    }

    #[test]
    fn faithful_examples() {
        let (t, _) = oracle("psl2:7");
        assert_eq!(faithful_characters(&t), (1..t.characters.len()).collect::<Vec<_>>());
        let (t, _) = oracle("sl2:5");
        let mut d = degrees(&t, &faithful_characters(&t));
        d.sort();
        assert_eq!(d, vec![2, 2, 4, 6]);
    }

    #[test]
    fn one_class_examples() {
        let (t, _) = oracle("an:5");
        assert_eq!(degrees(&t, &one_class_characters(&t)), vec![3, 3, 4]);
        let (t, _) = oracle("sl2:5");
        assert_eq!(degrees(&t, &one_class_characters(&t)), vec![2, 2, 4]);
        let (t, _) = oracle("pgl2:7");
        assert!(degrees(&t, &one_class_characters(&t)).contains(&7));
    }

    #[test]
    fn vanishing_condition_examples() {
        let (t, meta) = oracle("psl2:11");
        let fives: Vec<ConditionCheck> =
            vanishing_conditions(&t, &meta, None).into_iter().filter(|c| t.degree(c.index) == 5).collect();
        assert_eq!(fives.len(), 2);
        assert!(fives.iter().all(|c| c.verdict == Verdict::Pass));
        let (t, meta) = oracle("sl2:9");
        assert!(vanishing_conditions(&t, &meta, None).iter().all(|c| c.verdict == Verdict::Fail));
        let (t, _) = oracle("an:5");
        let unknown = vanishing_conditions(&t, &Metadata::default(), None);
        assert!(unknown.iter().all(|c| c.verdict != Verdict::Pass));
        assert!(unknown.iter().any(|c| c.verdict == Verdict::Unknown));
    }

    #[test]
    fn gate_examples() {
        assert_eq!(primitivity_gate("an:5", 4), Primitivity::Primitive);
        assert_eq!(primitivity_gate("psigmal2:8", 7), Primitivity::Primitive);
        assert_eq!(primitivity_gate("an:5", 6), Primitivity::ImprimitiveShapePossible);
        assert_eq!(primitivity_gate("psigmal2:8", 14), Primitivity::ImprimitiveShapePossible);
        assert_eq!(primitivity_gate("pgl2:7", 7), Primitivity::Primitive);
        assert_eq!(primitivity_gate("sn:3", 2), Primitivity::Unknown);
        assert_eq!(primitivity_gate("whatever", 2), Primitivity::Unknown);
    }

    #[test]
    fn common_prime_rule() {
        assert_eq!(common_prime(&[11, 11]), Some(11));
        assert_eq!(common_prime(&[4, 4]), Some(2));
        assert_eq!(common_prime(&[4, 8, 8]), None);
        assert_eq!(common_prime(&[2, 3]), None);
        assert_eq!(common_prime(&[6]), None);
        assert_eq!(common_prime(&[]), None);
    }
}
