use chartab::cli::run_cli;
use chartab::io::load_table;

fn run(args: &[&str]) -> i32 {
    run_cli(std::iter::once("chartab").chain(args.iter().copied()))
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "lemma45", "--qmax", "9999"]), 0);
    assert_eq!(run(&["verify", "prop43", "--r", "3,4"]), 0);
    assert_eq!(run(&["verify", "prop43", "--r", "2"]), 1);
    assert_eq!(run(&["verify", "negatives"]), 0);
    assert_eq!(run(&["table", "--family", "psl2", "--q", "6"]), 2);
    assert_eq!(run(&["table", "--family", "nope", "--q", "5"]), 2);
    assert_eq!(run(&["classify", "--group", "psl2:7"]), 0);
    assert_eq!(run(&["frobnicate"]), 2);
}

#[test]
fn crosscheck_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pgl2_11.json");
    let p = path.to_str().unwrap();
    assert_eq!(run(&["table", "--family", "pgl2", "--q", "11", "--oracle", "--crosscheck", "--out", p]), 0);
    let (t, meta) = load_table(&path).unwrap();
    assert_eq!(t.order, 1320);
    assert_eq!(meta.out_order, Some(1));
    assert_eq!(run(&["ingest", "--file", p, "classify"]), 0);
    let csv = dir.path().join("a5.csv");
    assert_eq!(run(&["table", "--family", "an", "--q", "5", "--format", "csv", "--out", csv.to_str().unwrap()]), 0);
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("class,1a,2a,3a,5a,5b"));
}

#[test]
fn ingest_errors() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(run(&["ingest", "--file", empty.to_str().unwrap(), "classify"]), 2);
    assert_eq!(run(&["ingest", "--file", "/nonexistent/table.json", "classify"]), 2);
}

#[test]
fn shipped_m11_sample() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/m11.table.json");
    let (t, meta) = load_table(path).unwrap();
    assert_eq!(t.classes.len(), 10);
    assert_eq!(t.order, 7920);
    assert_eq!(meta.out_order, Some(1));
    let report = chartab::classifier::classify(&t, &meta, None);
    assert_eq!(report.verdict, chartab::classifier::Verdict::Fail);
}
