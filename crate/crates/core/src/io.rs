//! Table interchange files and report rendering.
//!
//! A table file is JSON:
//!
//! ```json
//! {
//!   "group_name": "A5",
//!   "order": 60,
//!   "classes": [{"name": "1a", "size": 1, "element_order": 1, "power_map": [0]}, ...],
//!   "characters": [["1", "1", ...], ["3", "-1", "0", "-E(5)-E(5)^4", ...], ...],
//!   "metadata": {"center": {"order": 1, "cyclic": true}, "out_order": 2}
//! }
//! ```
//!
//! Values use the cyclotomic literal grammar. `power_map[k]` is the class of
//! `g^k` for `k` in `0..element_order`. `metadata` and its fields are optional.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classifier::{ClassificationReport, DriverReport, Metadata};
use crate::cyclotomic::{CycNum, ParseCycError};
use crate::groups::CenterInfo;
use crate::table::{CharTable, ClassInfo, TableError};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("JSON error at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("character {row}, class {col}: bad value at offset {}: {}", .source.position, .source.message)]
    Value { row: usize, col: usize, source: ParseCycError },
    #[error("invalid table: {0}")]
    Invalid(#[from] TableError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    pub name: String,
    pub size: u64,
    pub element_order: u64,
    pub power_map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterEntry {
    pub order: u64,
    pub cyclic: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub center: Option<CenterEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub out_order: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub group_name: String,
    pub order: u64,
    pub classes: Vec<ClassEntry>,
    pub characters: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<MetaEntry>,
}

impl TableFile {
    pub fn from_table(table: &CharTable, meta: &Metadata) -> TableFile {
        let metadata = (meta.center.is_some() || meta.out_order.is_some()).then(|| MetaEntry {
            center: meta.center.map(|c| CenterEntry { order: c.order, cyclic: c.cyclic }),
            out_order: meta.out_order,
        });
        TableFile {
            group_name: table.label.clone(),
            order: table.order,
            classes: table
                .classes
                .iter()
                .map(|c| ClassEntry {
                    name: c.name.clone(),
                    size: c.size,
                    element_order: c.element_order,
                    power_map: c.power_map.clone(),
                })
                .collect(),
            characters: table.characters.iter().map(|row| row.iter().map(|v| v.to_string()).collect()).collect(),
            metadata,
        }
    }

    /// Parses every value and validates the result.
    pub fn into_table(self) -> Result<(CharTable, Metadata), IoError> {
        let mut characters = Vec::with_capacity(self.characters.len());
        for (row, values) in self.characters.iter().enumerate() {
            let parsed = values
                .iter()
                .enumerate()
                .map(|(col, s)| CycNum::parse(s).map_err(|source| IoError::Value { row, col, source }))
                .collect::<Result<Vec<_>, _>>()?;
            characters.push(parsed);
        }
        let table = CharTable {
            label: self.group_name,
            order: self.order,
            classes: self
                .classes
                .into_iter()
                .map(|c| ClassInfo {
                    name: c.name,
                    size: c.size,
                    element_order: c.element_order,
                    power_map: c.power_map,
                })
                .collect(),
            characters,
        };
        table.validate()?;
        let m = self.metadata.unwrap_or_default();
        let meta = Metadata {
            center: m.center.map(|c| CenterInfo { order: c.order, cyclic: c.cyclic }),
            out_order: m.out_order,
        };
        Ok((table, meta))
    }
}

pub fn parse_table(text: &str) -> Result<(CharTable, Metadata), IoError> {
    let file: TableFile = serde_json::from_str(text).map_err(|e| IoError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.into_table()
}

pub fn load_table(path: impl AsRef<Path>) -> Result<(CharTable, Metadata), IoError> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|source| IoError::Read { path: path.display().to_string(), source })?;
    parse_table(&text)
}

pub fn table_to_json(table: &CharTable, meta: &Metadata) -> String {
    serde_json::to_string_pretty(&TableFile::from_table(table, meta)).expect("serializable")
}

/// One header row of class names, then size and order rows, then one row
/// per character. Values are cyclotomic literals.
pub fn table_to_csv(table: &CharTable) -> String {
    let mut out = String::new();
    let names: Vec<&str> = table.classes.iter().map(|c| c.name.as_str()).collect();
    out.push_str(&format!("class,{}\n", names.join(",")));
    let sizes: Vec<String> = table.classes.iter().map(|c| c.size.to_string()).collect();
    out.push_str(&format!("size,{}\n", sizes.join(",")));
    let orders: Vec<String> = table.classes.iter().map(|c| c.element_order.to_string()).collect();
    out.push_str(&format!("order,{}\n", orders.join(",")));
    for (i, row) in table.characters.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("X.{},{}\n", i + 1, vals.join(",")));
    }
    out
}

fn meta_json(meta: &Metadata) -> Value {
    json!({
        "center": meta.center.map(|c| json!({"order": c.order, "cyclic": c.cyclic})),
        "out_order": meta.out_order,
    })
}

pub fn classification_json(report: &ClassificationReport, source: &str) -> Value {
    let records: Vec<Value> = report
        .records
        .iter()
        .map(|r| {
            let p13 = r.conditions.as_ref().map(|c| {
                json!({
                    "prime": c.prime,
                    "same_p_power_order": c.same_prime,
                    "count_within_out": c.within_out,
                    "center_ok": c.center_ok,
                    "verdict": c.verdict.as_str(),
                })
            });
            json!({
                "index": r.index,
                "degree": r.degree,
                "faithful": r.faithful,
                "vanishing": r.vanishing.iter().map(|&(k, o)| json!({"class": k, "element_order": o})).collect::<Vec<_>>(),
                "one_class": r.one_class,
                "primitivity": r.primitivity.as_str(),
                "conditions": p13,
            })
        })
        .collect();
    json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "source": source,
        "group": report.label,
        "order": report.order,
        "metadata": meta_json(&report.meta),
        "characters": records,
        "verdict": report.verdict.as_str(),
    })
}

pub fn driver_json(report: &DriverReport) -> Value {
    json!({
        "tool_version": env!("CARGO_PKG_VERSION"),
        "driver": report.name,
        "passed": report.passed(),
        "items": report.items.iter().map(|i| json!({"name": i.name, "passed": i.passed, "detail": i.detail})).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dixon::character_table;
    use crate::groups::construct_family;

    fn a5() -> CharTable {
        character_table(&construct_family("an:5").unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        let t = a5();
        let meta = Metadata { center: Some(CenterInfo { order: 1, cyclic: true }), out_order: Some(2) };
        let (back, m) = parse_table(&table_to_json(&t, &meta)).unwrap();
        assert_eq!(back, t);
        assert_eq!(m, meta);
        let (_, m) = parse_table(&table_to_json(&t, &Metadata::default())).unwrap();
        assert_eq!(m, Metadata::default());
    }

    #[test]
    fn forged_value_names_columns() {
        let t = a5();
        let mut f = TableFile::from_table(&t, &Metadata::default());
        let k = t.classes.iter().position(|c| c.element_order == 3).unwrap();
        f.characters[1][k] = "1".into();
        match f.into_table() {
            Err(IoError::Invalid(TableError::ColumnOrthogonality(a, b))) => assert!(a == k || b == k),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_table(""), Err(IoError::Json { line: 1, .. })));
        let mut f = TableFile::from_table(&a5(), &Metadata::default());
        f.characters[2][1] = "3*E(".into();
        match f.into_table() {
            Err(IoError::Value { row: 2, col: 1, source }) => assert_eq!(source.position, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn csv_has_literals() {
        let csv = table_to_csv(&a5());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 8);
        assert!(lines[0].starts_with("class,1a,2a,3a,5a,5b"));
        assert!(csv.contains("E(5)"));
        assert!(lines[3..].iter().all(|l| l.split(',').skip(1).all(|v| !v.contains('.'))));
    }
}
