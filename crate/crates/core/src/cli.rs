//! Command-line entry point.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::classifier::{
    classify, known_out_order, one_class_candidates, prime_powers, verify_central_commutators, verify_negatives,
    verify_one_class_list, verify_out_inequality, verify_psl2_11_bridge, verify_vanishing_counts, verify_witnesses,
    DriverReport, Metadata, NEGATIVE_CONTROLS,
};
use crate::dixon::character_table;
use crate::groups::{construct_with_budget, default_max_order};
use crate::io::{classification_json, driver_json, load_table, table_to_csv, table_to_json};
use crate::lie_tables::{pgl2_table, psl2_table, sl2_table};
use crate::sym_tables::sn_table;
use crate::table::CharTable;

#[derive(Parser, Debug)]
#[command(name = "chartab", version, about = "Exact character tables and vanishing-class checks")]
struct Cli {
    /// Element budget for group enumeration (overrides CHARTAB_MAX_ORDER).
    #[arg(long, global = true)]
    max_order: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a character table.
    Table {
        /// Family name: sl2, psl2, pgl2, sn, an, gl2, psigmal2, or a fixed
        /// group (m10, m11, 2a5, 3a6, 3a6:2_3).
        #[arg(long)]
        family: String,
        /// Field size or degree parameter.
        #[arg(long)]
        q: Option<u64>,
        /// Compute with the Dixon–Schneider oracle.
        #[arg(long)]
        oracle: bool,
        /// Compute both ways and compare.
        #[arg(long)]
        crosscheck: bool,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify the characters of a constructible group.
    Classify {
        #[arg(long)]
        group: String,
        /// Require the vanishing orders to be powers of this prime.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Run a verification driver.
    Verify {
        #[arg(value_enum)]
        driver: Driver,
        #[arg(long)]
        qmax: Option<u64>,
        /// Comma-separated r values for the witness driver.
        #[arg(long, value_delimiter = ',')]
        r: Option<Vec<u32>>,
    },
    /// Load an external table file.
    Ingest {
        #[arg(long)]
        file: std::path::PathBuf,
        #[command(subcommand)]
        action: IngestAction,
    },
}

#[derive(Subcommand, Debug)]
enum IngestAction {
    /// Classify the ingested table using its metadata.
    Classify {
        #[arg(long)]
        p: Option<u64>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Driver {
    Thm15,
    Prop46,
    Prop43,
    Lemma45,
    Negatives,
    #[value(name = "psl2-11")]
    Psl211,
    Lemma23,
}

struct Failure(i32, String);

fn input_error(e: impl std::fmt::Display) -> Failure {
    Failure(2, e.to_string())
}

fn spec_of(family: &str, q: Option<u64>) -> String {
    match q {
        Some(q) => format!("{family}:{q}"),
        None => family.to_string(),
    }
}

fn analytic(family: &str, q: Option<u64>) -> Option<Result<CharTable, Failure>> {
    let q = q?;
    let t = match family {
        "sl2" => sl2_table(q).map(|t| t.table),
        "psl2" => psl2_table(q).map(|t| t.table),
        "pgl2" => pgl2_table(q).map(|t| t.table),
        "sn" if (1..=30).contains(&q) => return Some(Ok(sn_table(q as u32))),
        _ => return None,
    };
    Some(t.map_err(input_error))
}

fn oracle(spec: &str, max_order: usize) -> Result<CharTable, Failure> {
    let g = construct_with_budget(spec, max_order).map_err(input_error)?;
    character_table(&g).map_err(|e| Failure(1, e.to_string()))
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(input_error),
        None => {
            let mut stdout = std::io::stdout().lock();
            writeln!(stdout, "{text}").map_err(input_error)
        }
    }
}

fn driver_exit(report: &DriverReport) -> Result<i32, Failure> {
    emit(&serde_json::to_string_pretty(&driver_json(report)).expect("json"), None)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let max_order = cli.max_order.unwrap_or_else(default_max_order);
    match cli.command {
        Command::Table { family, q, oracle: use_oracle, crosscheck, out, format } => {
            let spec = spec_of(&family, q);
            let analytic_table = if use_oracle && !crosscheck { None } else { analytic(&family, q).transpose()? };
            let oracle_table = if use_oracle || crosscheck || analytic_table.is_none() {
                Some(oracle(&spec, max_order)?)
            } else {
                None
            };
            let mut code = 0;
            if crosscheck {
                match (&analytic_table, &oracle_table) {
                    (Some(a), Some(o)) => {
                        let same = a.equivalent(o);
                        eprintln!("crosscheck {spec}: {}", if same { "analytic = oracle" } else { "tables differ" });
                        if !same {
                            code = 1;
                        }
                    }
                    _ => return Err(Failure(2, format!("no analytic table for {spec}"))),
                }
            }
            let table = if use_oracle { oracle_table } else { analytic_table.or(oracle_table) }.expect("one table");
            let meta = Metadata { center: Some(table.center_info()), out_order: known_out_order(&spec) };
            let text = match format {
                Format::Json => table_to_json(&table, &meta),
                Format::Csv => table_to_csv(&table),
            };
            emit(&text, out.as_deref())?;
            Ok(code)
        }
        Command::Classify { group, p } => {
            let table = oracle(&group, max_order)?;
            let meta = Metadata { center: Some(table.center_info()), out_order: known_out_order(&group) };
            let report = classify(&table, &meta, p);
            emit(&serde_json::to_string_pretty(&classification_json(&report, "oracle")).expect("json"), None)?;
            Ok(0)
        }
        Command::Verify { driver, qmax, r } => {
            let report = match driver {
                Driver::Thm15 => {
                    verify_one_class_list(&one_class_candidates(&prime_powers(5, qmax.unwrap_or(13))), max_order)
                }
                Driver::Prop46 => verify_vanishing_counts(5, qmax.unwrap_or(101), 13, max_order),
                Driver::Prop43 => verify_witnesses(&r.unwrap_or_else(|| vec![3, 4])),
                Driver::Lemma45 => verify_out_inequality(qmax.unwrap_or(9999)),
                Driver::Negatives => verify_negatives(NEGATIVE_CONTROLS, max_order),
                Driver::Psl211 => verify_psl2_11_bridge(max_order),
                Driver::Lemma23 => verify_central_commutators(&["sl2:5", "psl2:7"], max_order),
            };
            driver_exit(&report)
        }
        Command::Ingest { file, action: IngestAction::Classify { p } } => {
            let (table, meta) = load_table(&file).map_err(input_error)?;
            let report = classify(&table, &meta, p);
            emit(&serde_json::to_string_pretty(&classification_json(&report, "ingested")).expect("json"), None)?;
            Ok(0)
        }
    }
}

/// Runs the command line and returns the process exit code: 0 on success,
/// 1 when a verification fails, 2 on bad input or construction errors.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}
