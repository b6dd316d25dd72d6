//! One line per acceptance criterion. All values are exact; the only
//! tolerances are the wall-clock budgets below.

use std::time::{Duration, Instant};

use chartab::classifier::{
    one_class_candidates, verify_central_commutators, verify_negatives, verify_one_class_list, verify_out_inequality,
    verify_psl2_11_bridge, verify_vanishing_counts, verify_witnesses, DriverReport, NEGATIVE_CONTROLS,
};
use chartab::dixon::character_table;
use chartab::groups::{construct_family, default_max_order};

const BUDGET_ONE_CLASS: Duration = Duration::from_secs(180);
const BUDGET_COUNTS: Duration = Duration::from_secs(120);
const BUDGET_ORACLE: Duration = Duration::from_secs(600);
const BUDGET_NEGATIVES: Duration = Duration::from_secs(600);
const BUDGET_WITNESSES: Duration = Duration::from_secs(60);
const BUDGET_INEQUALITY: Duration = Duration::from_secs(10);
const BUDGET_COMMUTATORS: Duration = Duration::from_secs(60);
const BUDGET_BRIDGE: Duration = Duration::from_secs(60);

const ORACLE_GROUPS: &[&str] = &[
    "sn:3", "sn:4", "sn:5", "an:5", "an:6", "an:7", "an:8", "sl2:3", "sl2:5", "sl2:9", "psl2:7", "psl2:11", "pgl2:11",
    "m10", "m11", "3a6",
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_report(r: &DriverReport) -> Outcome {
    let failures: Vec<String> = r.failures().iter().map(|i| format!("{} ({})", i.name, i.detail)).collect();
    let detail = if failures.is_empty() {
        format!("{} checks", r.items.len())
    } else {
        format!("failing: {}", failures.join("; "))
    };
    Outcome { passed: r.passed(), detail }
}

fn oracle_soundness() -> Outcome {
    let mut bad = Vec::new();
    for spec in ORACLE_GROUPS {
        let g = match construct_family(spec) {
            Ok(g) => g,
            Err(e) => {
                bad.push(format!("{spec}: {e}"));
                continue;
            }
        };
        match character_table(&g) {
            Err(e) => bad.push(format!("{spec}: {e}")),
            Ok(t) => {
                if let Err(e) = t.validate() {
                    bad.push(format!("{spec}: {e}"));
                }
                if !t.burnside_holds() {
                    bad.push(format!("{spec}: Burnside"));
                }
                if !t.prime_power_zero_holds() {
                    bad.push(format!("{spec}: prime-power zero"));
                }
            }
        }
    }
    let detail = if bad.is_empty() { format!("{} groups", ORACLE_GROUPS.len()) } else { bad.join("; ") };
    Outcome { passed: bad.is_empty(), detail }
}

fn run(n: usize, title: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    let passed = out.passed && in_time;
    println!(
        "criterion {n} [{}] {title}: {} ({:.2}s of {}s)",
        if passed { "PASS" } else { "FAIL" },
        out.detail,
        elapsed.as_secs_f64(),
        budget.as_secs()
    );
    passed
}

fn main() {
    let max = default_max_order();
    let results = [
        run(1, "one-class primitive characters", BUDGET_ONE_CLASS, || {
            from_report(&verify_one_class_list(&one_class_candidates(&[5, 7, 9, 11, 13]), max))
        }),
        run(2, "SL2/PSL2 vanishing counts, q in 5..=101", BUDGET_COUNTS, || {
            from_report(&verify_vanishing_counts(5, 101, 13, max))
        }),
        run(3, "oracle soundness", BUDGET_ORACLE, oracle_soundness),
        run(4, "negative controls", BUDGET_NEGATIVES, || from_report(&verify_negatives(NEGATIVE_CONTROLS, max))),
        run(5, "degree 2^r witnesses, r = 3, 4", BUDGET_WITNESSES, || from_report(&verify_witnesses(&[3, 4]))),
        run(6, "inequality for odd q in 33..=9999", BUDGET_INEQUALITY, || from_report(&verify_out_inequality(9999))),
        run(7, "central commutator sweep", BUDGET_COMMUTATORS, || {
            from_report(&verify_central_commutators(&["sl2:5", "psl2:7"], max))
        }),
        run(8, "PSL2(11) and PGL2(11)", BUDGET_BRIDGE, || from_report(&verify_psl2_11_bridge(max))),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
