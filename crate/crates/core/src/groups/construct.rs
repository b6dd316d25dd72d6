//! Group spec strings and the standard constructions behind them.
//!
//! | spec | group |
//! |------|-------|
//! | `sn:<n>`, `an:<n>` | symmetric / alternating group on `n` points |
//! | `sl2:<q>`, `gl2:<q>` | 2×2 matrices over GF(q) |
//! | `psl2:<q>`, `pgl2:<q>` | the same modulo scalars |
//! | `psigmal2:<q>` | PSL2(q) extended by all field automorphisms |
//! | `m10` | PSL2(9) extended by `diag(ω,1)` composed with Frobenius |
//! | `2a5` | alias of `sl2:5` |
//! | `3a6`, `3a6:2_3` | stored 3-dimensional matrices over GF(4) |
//! | `m11` | stored permutations of degree 11 |

use super::data;
use super::element::{Arith, GroupElement, Mat, Twist};
use super::gf::Gf;
use super::{default_max_order, FiniteGroup, GroupError};
use crate::arith::prime_power;

/// Parses a spec and builds the group under the default element budget.
pub fn construct_family(spec: &str) -> Result<FiniteGroup, GroupError> {
    construct_with_budget(spec, default_max_order())
}

pub fn construct_with_budget(spec: &str, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let spec = spec.trim();
    match spec {
        "m10" => return m10(max_order),
        "2a5" => return linear("2a5", 5, Linear::Sl, max_order),
        "3a6" => return three_a6(false, max_order),
        "3a6:2_3" => return three_a6(true, max_order),
        "m11" => return m11(max_order),
        _ => {}
    }
    let (family, arg) = spec.split_once(':').ok_or_else(|| GroupError::UnknownSpec(spec.to_string()))?;
    let n: u64 = arg.parse().map_err(|_| GroupError::InvalidParameter(format!("'{arg}' is not a positive integer")))?;
    match family {
        "sn" => symmetric(spec, n, max_order),
        "an" => alternating(spec, n, max_order),
        "sl2" => linear(spec, n, Linear::Sl, max_order),
        "gl2" => linear(spec, n, Linear::Gl, max_order),
        "psl2" => linear(spec, n, Linear::Psl, max_order),
        "pgl2" => linear(spec, n, Linear::Pgl, max_order),
        "psigmal2" => linear(spec, n, Linear::Psigmal, max_order),
        _ => Err(GroupError::UnknownSpec(spec.to_string())),
    }
}

fn symmetric(label: &str, n: u64, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("n must be at least 1".into()));
    }
    let n = n as usize;
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(GroupElement::perm_from_cycles(n, &[&[0, 1]]));
        let cycle: Vec<u32> = (0..n as u32).collect();
        gens.push(GroupElement::perm_from_cycles(n, &[&cycle]));
    }
    FiniteGroup::generate(label, Arith::Perm { degree: n }, gens, max_order)
}

fn alternating(label: &str, n: u64, max_order: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidParameter("n must be at least 1".into()));
    }
    let n = n as usize;
    let gens = (2..n as u32).map(|i| GroupElement::perm_from_cycles(n, &[&[0, 1, i]])).collect();
    FiniteGroup::generate(label, Arith::Perm { degree: n }, gens, max_order)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Linear {
    Sl,
    Gl,
    Psl,
    Pgl,
    Psigmal,
}

fn field(q: u64) -> Result<Gf, GroupError> {
    if prime_power(q).is_none() {
        return Err(GroupError::NotPrimePower(q));
    }
    Gf::new(q).map_err(|e| GroupError::InvalidParameter(e.to_string()))
}

/// Generators of SL2(q), plus `diag(ω, 1)` when `gl` is set.
fn sl2_mats(k: &Gf, gl: bool) -> Vec<Mat> {
    let w = k.generator();
    let wi = k.inv(w).expect("unit");
    let mut v =
        vec![Mat::new(2, vec![1, 1, 0, 1]), Mat::new(2, vec![0, k.neg(1), 1, 0]), Mat::new(2, vec![w, 0, 0, wi])];
    if gl {
        v.push(Mat::new(2, vec![w, 0, 0, 1]));
    }
    v
}

fn linear(label: &str, q: u64, kind: Linear, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let k = field(q)?;
    let mats = sl2_mats(&k, kind == Linear::Gl || kind == Linear::Pgl);
    let (arith, gens) = match kind {
        Linear::Sl | Linear::Gl => (
            Arith::Matrix { field: k, dim: 2, projective: false },
            mats.into_iter().map(GroupElement::Matrix).collect::<Vec<_>>(),
        ),
        Linear::Psl | Linear::Pgl => (
            Arith::Matrix { field: k, dim: 2, projective: true },
            mats.into_iter().map(GroupElement::Projective).collect(),
        ),
        Linear::Psigmal => {
            let mut gens: Vec<GroupElement> =
                mats.into_iter().map(|mat| GroupElement::Semilinear { mat, power: 0 }).collect();
            gens.push(GroupElement::Semilinear { mat: Mat::identity(2), power: 1 });
            (Arith::Semilinear { field: k, dim: 2, projective: true, twist: Twist::Frobenius }, gens)
        }
    };
    FiniteGroup::generate(label, arith, gens, max_order)
}

fn invalid(label: &str, reason: impl Into<String>) -> GroupError {
    GroupError::Validation { label: label.to_string(), reason: reason.into() }
}

fn has_order(g: &FiniteGroup, o: u64) -> bool {
    g.classes().iter().any(|c| c.element_order == o)
}

fn m10(max_order: usize) -> Result<FiniteGroup, GroupError> {
    let k = field(9)?;
    let w = k.generator();
    let mut gens: Vec<GroupElement> =
        sl2_mats(&k, false).into_iter().map(|mat| GroupElement::Semilinear { mat, power: 0 }).collect();
    gens.push(GroupElement::Semilinear { mat: Mat::new(2, vec![w, 0, 0, 1]), power: 1 });
    let arith = Arith::Semilinear { field: k, dim: 2, projective: true, twist: Twist::Frobenius };
    let g = FiniteGroup::generate("m10", arith, gens, max_order)?;
    if g.order() != 720 {
        return Err(invalid("m10", format!("order {} instead of 720", g.order())));
    }
    if !has_order(&g, 8) || has_order(&g, 10) || has_order(&g, 12) {
        return Err(invalid("m10", "element orders do not match M10"));
    }
    Ok(g)
}

/// Orders of elements modulo the center, as a sorted set.
pub fn orders_mod_center(g: &FiniteGroup, only: impl Fn(&GroupElement) -> bool) -> Vec<u64> {
    let central = g.central_classes();
    let mut out: Vec<u64> = g
        .classes()
        .iter()
        .filter(|c| only(&c.representative))
        .map(|c| (1..=c.element_order).find(|&k| central.contains(&c.power(k as i64))).expect("g^o = 1"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Class sizes of `G/Z(G)`.
pub fn central_quotient_class_sizes(g: &FiniteGroup) -> Vec<u64> {
    let z: Vec<GroupElement> = g.central_classes().iter().map(|&c| g.classes()[c].representative.clone()).collect();
    let mut seen = vec![false; g.classes().len()];
    let mut sizes = Vec::new();
    for (i, c) in g.classes().iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut coset: Vec<usize> =
            z.iter().map(|s| g.class_of(&g.mul(s, &c.representative)).expect("in group")).collect();
        coset.sort();
        coset.dedup();
        for &j in &coset {
            seen[j] = true;
        }
        sizes.push(c.size * coset.len() as u64 / z.len() as u64);
    }
    sizes.sort();
    sizes
}

/// Certifies simplicity from class sizes: no proper union of classes
/// containing the identity has a size dividing the group order.
pub fn simple_by_class_sizes(sizes: &[u64]) -> bool {
    let order: u64 = sizes.iter().sum();
    let rest: Vec<u64> = sizes.iter().skip(1).copied().collect();
    if rest.len() > 24 {
        return false;
    }
    for mask in 1u64..(1 << rest.len()) - 1 {
        let s: u64 = 1 + (0..rest.len()).filter(|&i| mask >> i & 1 == 1).map(|i| rest[i]).sum::<u64>();
        if order % s == 0 {
            return false;
        }
    }
    order > 1
}

fn gf4_mats(rows: &[[u32; 9]]) -> Vec<Mat> {
    rows.iter().map(|r| Mat::new(3, r.to_vec())).collect()
}

fn three_a6(extended: bool, max_order: usize) -> Result<FiniteGroup, GroupError> {
    let label = if extended { "3a6:2_3" } else { "3a6" };
    let k = field(4)?;
    let base = gf4_mats(&data::THREE_A6_GENS);
    let g = if extended {
        let mut gens: Vec<GroupElement> =
            base.into_iter().map(|mat| GroupElement::Semilinear { mat, power: 0 }).collect();
        gens.push(GroupElement::Semilinear { mat: Mat::new(3, data::THREE_A6_OUTER.to_vec()), power: 1 });
        let arith = Arith::Semilinear { field: k, dim: 3, projective: false, twist: Twist::FrobeniusInverseTranspose };
        FiniteGroup::generate(label, arith, gens, max_order)?
    } else {
        let gens = base.into_iter().map(GroupElement::Matrix).collect();
        FiniteGroup::generate(label, Arith::Matrix { field: k, dim: 3, projective: false }, gens, max_order)?
    };
    let want = if extended { 2160 } else { 1080 };
    if g.order() != want {
        return Err(invalid(label, format!("order {} instead of {want}", g.order())));
    }
    let z = g.center_info();
    if z.order != 3 || !z.cyclic {
        return Err(invalid(label, format!("center of order {}", z.order)));
    }
    if extended {
        let outer = orders_mod_center(&g, |x| matches!(x, GroupElement::Semilinear { power: 1, .. }));
        if !outer.contains(&8) || outer.contains(&10) {
            return Err(invalid(label, format!("outer element orders {outer:?} are not of M10 type")));
        }
    } else if !simple_by_class_sizes(&central_quotient_class_sizes(&g)) {
        return Err(invalid(label, "central quotient is not simple"));
    }
    Ok(g)
}

fn m11(max_order: usize) -> Result<FiniteGroup, GroupError> {
    let gens = data::M11_GENS.iter().map(|cycles| GroupElement::perm_from_cycles(11, cycles)).collect();
    let g = FiniteGroup::generate("m11", Arith::Perm { degree: 11 }, gens, max_order)?;
    if g.order() != 7920 {
        return Err(invalid("m11", format!("order {} instead of 7920", g.order())));
    }
    if g.center_info().order != 1 || !simple_by_class_sizes(&central_quotient_class_sizes(&g)) {
        return Err(invalid("m11", "not simple"));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(g: &FiniteGroup) -> Vec<u64> {
        g.classes().iter().map(|c| c.element_order).collect()
    }

    #[test]
    fn published_examples() {
        assert_eq!(construct_family("pgl2:5").unwrap().order(), 120);
        let sl25 = construct_family("sl2:5").unwrap();
        assert_eq!(sl25.order(), 120);
        assert_eq!(sl25.center_info().order, 2);
        let g = construct_family("3a6").unwrap();
        assert_eq!(g.order(), 1080);
        assert_eq!(g.center_info().order, 3);
        assert!(g.center_info().cyclic_prime_power());
    }

    #[test]
    fn class_examples() {
        let g = construct_family("psl2:7").unwrap();
        assert_eq!(orders(&g), vec![1, 2, 3, 4, 7, 7]);
        assert_eq!(construct_family("sl2:5").unwrap().classes().len(), 9);
        let s3 = construct_family("sn:3").unwrap();
        let sizes: Vec<u64> = s3.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
    }

    #[test]
    fn subgroup_examples() {
        let z = construct_family("sl2:9").unwrap().center_info();
        assert_eq!((z.order, z.cyclic), (2, true));
        assert_eq!(construct_family("pgl2:7").unwrap().derived_subgroup().order(), 168);
    }

    #[test]
    fn family_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let base = q * (q * q - 1);
            let d = crate::arith::gcd(2, q - 1);
            let f = prime_power(q).unwrap().1 as u64;
            assert_eq!(construct_family(&format!("sl2:{q}")).unwrap().order(), base);
            assert_eq!(construct_family(&format!("gl2:{q}")).unwrap().order(), base * (q - 1));
            assert_eq!(construct_family(&format!("psl2:{q}")).unwrap().order(), base / d);
            assert_eq!(construct_family(&format!("pgl2:{q}")).unwrap().order(), base);
            assert_eq!(construct_family(&format!("psigmal2:{q}")).unwrap().order(), f * base / d);
        }
        assert_eq!(construct_family("an:6").unwrap().order(), 360);
        assert_eq!(construct_family("sn:5").unwrap().order(), 120);
    }

    #[test]
    fn stored_and_derived_constructions() {
        let m10 = construct_family("m10").unwrap();
        assert_eq!(m10.order(), 720);
        let pgl9 = construct_family("pgl2:9").unwrap();
        assert!(has_order(&pgl9, 10) && has_order(&pgl9, 8));
        let g = construct_family("3a6:2_3").unwrap();
        assert_eq!(g.order(), 2160);
        assert_eq!(g.center_info().order, 3);
        assert_eq!(g.derived_subgroup().order(), 1080);
        assert_eq!(construct_family("m11").unwrap().classes().len(), 10);
        assert_eq!(construct_family("2a5").unwrap().order(), 120);
    }

    #[test]
    fn simplicity_certificate() {
        assert!(simple_by_class_sizes(&[1, 12, 12, 15, 20]));
        assert!(!simple_by_class_sizes(&[1, 3, 8, 6, 6]));
        let g = construct_family("sl2:5").unwrap();
        assert!(simple_by_class_sizes(&central_quotient_class_sizes(&g)));
    }

    #[test]
    fn rejects_bad_specs() {
        assert_eq!(construct_family("foo:3").unwrap_err(), GroupError::UnknownSpec("foo:3".into()));
        assert_eq!(construct_family("sl2:6").unwrap_err(), GroupError::NotPrimePower(6));
        assert!(matches!(construct_family("sn:x"), Err(GroupError::InvalidParameter(_))));
        assert!(matches!(construct_with_budget("an:8", 1000), Err(GroupError::BudgetExceeded { .. })));
    }
}
