use serde_json::{json, Map, Value};

use crate::OutputFormat;

/// A command result before formatting.
///
/// `plain` is rendered by the command itself because each command has its own
/// line shape; CSV and JSON come from `columns`/`rows` so that they always
/// carry the same values.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub params: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub plain: Vec<String>,
}

impl Report {
    pub fn new(columns: &[&str]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Report::default()
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Plain => {
                let mut out = self.plain.join("\n");
                if !out.is_empty() {
                    out.push('\n');
                }
                out
            }
            OutputFormat::Csv => {
                let mut writer = csv::WriterBuilder::new()
                    .terminator(csv::Terminator::Any(b'\n'))
                    .from_writer(Vec::new());
                writer.write_record(&self.columns).expect("in-memory write");
                for row in &self.rows {
                    writer.write_record(row).expect("in-memory write");
                }
                let bytes = writer.into_inner().expect("in-memory flush");
                String::from_utf8(bytes).expect("fields are UTF-8")
            }
            OutputFormat::Json => {
                let params: Map<String, Value> = self
                    .params
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect();
                let doc = json!({
                    "params": params,
                    "columns": self.columns,
                    "rows": self.rows,
                });
                let mut out = serde_json::to_string_pretty(&doc).expect("strings always serialize");
                out.push('\n');
                out
            }
        }
    }

    /// Plain lines of the form `v1,v2,...`, one per run of rows that agree on
    /// the first `key_len` columns; the value is the last column.
    pub fn grouped_plain(&self, key_len: usize) -> Vec<String> {
        let mut lines = Vec::new();
        let mut current: Option<(&[String], Vec<&str>)> = None;
        for row in &self.rows {
            let key = &row[..key_len];
            let value = row.last().map(String::as_str).unwrap_or_default();
            match &mut current {
                Some((k, values)) if *k == key => values.push(value),
                _ => {
                    if let Some((_, values)) = current.take() {
                        lines.push(values.join(","));
                    }
                    current = Some((key, vec![value]));
                }
            }
        }
        if let Some((_, values)) = current {
            lines.push(values.join(","));
        }
        lines
    }
}
