use std::sync::OnceLock;

use chartab::classifier::Metadata;
use chartab::cyclotomic::CycNum;
use chartab::dixon::character_table;
use chartab::groups::{construct_family, FiniteGroup};
use chartab::io::{parse_table, table_to_json};
use chartab::sym_tables::{an_character_values, mn_value, partitions, sn_table, AnRow};
use chartab::table::CharTable;
use proptest::prelude::*;

fn cyc() -> impl Strategy<Value = CycNum> {
    let orders = prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 9, 12, 15]);
    (orders, prop::collection::vec((0u32..24, -4i64..5), 0..5))
        .prop_map(|(n, terms)| CycNum::from_int_terms(n, terms.into_iter().map(|(k, c)| ((k % n) as i64, c))).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn cyclotomic_ring_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn cyclotomic_inverse_and_norm(a in cyc()) {
        let norm = a.mul(&a.conj());
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
            prop_assert!(norm.is_zero());
        } else {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
            prop_assert!(!norm.is_zero());
            prop_assert!(norm.to_complex().0 > 0.0);
        }
    }

    #[test]
    fn cyclotomic_conj_and_galois(a in cyc(), k1 in 1i64..60, k2 in 1i64..60) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        let n = 2520i64;
        if chartab::arith::gcd(k1 as u64, n as u64) == 1 && chartab::arith::gcd(k2 as u64, n as u64) == 1 {
            let twice = a.galois(k2).unwrap().galois(k1).unwrap();
            prop_assert_eq!(twice, a.galois(k1 * k2 % n).unwrap());
        }
    }

    #[test]
    fn cyclotomic_literal_round_trip(a in cyc()) {
        prop_assert_eq!(CycNum::parse(&a.to_string()).unwrap(), a);
    }
}

const SPECS: &[&str] = &[
    "sn:3",
    "sn:4",
    "sn:5",
    "an:4",
    "an:5",
    "an:6",
    "sl2:3",
    "sl2:4",
    "sl2:5",
    "sl2:7",
    "psl2:7",
    "psl2:9",
    "pgl2:5",
    "pgl2:7",
    "gl2:3",
    "psigmal2:8",
    "m10",
    "2a5",
];

fn cached() -> &'static Vec<(FiniteGroup, CharTable)> {
    static CACHE: OnceLock<Vec<(FiniteGroup, CharTable)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        SPECS
            .iter()
            .map(|s| {
                let g = construct_family(s).unwrap();
                let t = character_table(&g).unwrap();
                (g, t)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn group_class_invariants(idx in 0..SPECS.len()) {
        let (g, _) = &cached()[idx];
        prop_assert!(g.class_equation_holds());
        prop_assert!(g.power_maps_consistent());
        for c in g.classes() {
            prop_assert_eq!(g.order() % c.size, 0);
            for k in 1..c.element_order {
                if chartab::arith::gcd(k, c.element_order) == 1 {
                    prop_assert_eq!(g.classes()[c.power(k as i64)].element_order, c.element_order);
                }
            }
        }
    }

    #[test]
    fn oracle_table_invariants(idx in 0..SPECS.len()) {
        let (g, t) = &cached()[idx];
        prop_assert!(t.validate().is_ok());
        prop_assert!(t.burnside_holds());
        prop_assert!(t.prime_power_zero_holds());
        prop_assert_eq!(t.center_info(), g.center_info());
        for d in t.degrees() {
            prop_assert_eq!(t.order % d, 0);
        }
        for i in 0..t.characters.len() {
            prop_assert!(t.inner_product(i, i).is_one());
        }
    }

    #[test]
    fn table_file_round_trip(idx in 0..SPECS.len()) {
        let (g, t) = &cached()[idx];
        let meta = Metadata { center: Some(g.center_info()), out_order: None };
        let (back, m) = parse_table(&table_to_json(t, &meta)).unwrap();
        prop_assert_eq!(&back, t);
        prop_assert_eq!(m, meta);
    }

    #[test]
    fn associate_characters(n in 2u32..=10, seed in any::<u64>()) {
        let ps = partitions(n);
        let lambda = &ps[(seed % ps.len() as u64) as usize];
        let conj = lambda.conjugate();
        for mu in &ps {
            let sign = if mu.is_even_type() { 1 } else { -1 };
            prop_assert_eq!(mn_value(&conj, mu).unwrap(), sign * mn_value(lambda, mu).unwrap());
        }
    }

    #[test]
    fn an_rows_have_norm_one(n in 2u32..=10, seed in any::<u64>()) {
        let ps = partitions(n);
        let lambda = &ps[(seed % ps.len() as u64) as usize];
        match an_character_values(lambda) {
            AnRow::SplitCase => prop_assert!(lambda.is_self_associate()),
            AnRow::Row(row) => {
                let total: u64 = row.iter().map(|(c, _)| c.size).sum();
                let norm: i64 = row.iter().map(|(c, v)| c.size as i64 * v * v).sum();
                prop_assert_eq!(norm as u64, total);
                let an_order: u64 = (1..=n as u64).product::<u64>() / 2;
                prop_assert_eq!(total, an_order);
            }
        }
    }
}

#[test]
fn sn_tables_column_orthogonal_to_ten() {
    for n in 1..=10 {
        sn_table(n).validate().unwrap_or_else(|e| panic!("S{n}: {e}"));
    }
}

#[test]
fn mn_matches_oracle_to_eight() {
    for n in 2..=8 {
        let g = construct_family(&format!("sn:{n}")).unwrap();
        let oracle = character_table(&g).unwrap();
        assert!(sn_table(n).equivalent(&oracle), "S{n}");
    }
}
