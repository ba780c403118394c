//! Tabular output in markdown, CSV and JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total: Option<Vec<String>>,
}

impl TableDocument {
    pub fn new(title: impl Into<String>, headers: &[&str]) -> Self {
        TableDocument {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            total: None,
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn set_total<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        self.total = Some(row.into_iter().map(|c| c.to_string()).collect());
    }

    fn markdown(&self, out: &mut String) {
        let esc = |c: &str| c.replace('|', "\\|");
        let line = |cells: &[String]| format!("| {} |", cells.iter().map(|c| esc(c)).collect::<Vec<_>>().join(" | "));
        writeln!(out, "### {}", self.title).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "{}", line(&self.headers)).unwrap();
        writeln!(out, "|{}", "---|".repeat(self.headers.len())).unwrap();
        for r in &self.rows {
            writeln!(out, "{}", line(r)).unwrap();
        }
        if let Some(t) = &self.total {
            let bold: Vec<String> = t.iter().map(|c| if c.is_empty() { String::new() } else { format!("**{c}**") }).collect();
            writeln!(out, "{}", line(&bold)).unwrap();
        }
    }

    fn csv(&self, out: &mut String) {
        writeln!(out, "# {}", self.title).unwrap();
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        w.write_record(&self.headers).unwrap();
        for r in &self.rows {
            w.write_record(r).unwrap();
        }
        if let Some(t) = &self.total {
            w.write_record(t).unwrap();
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 input"));
    }
}

/// Renders a list of tables. Output depends only on the tables.
pub fn render(docs: &[TableDocument], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Markdown => {
            for (i, d) in docs.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                d.markdown(&mut out);
            }
        }
        Format::Csv => {
            for (i, d) in docs.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                d.csv(&mut out);
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(docs).expect("plain data");
            out.push('\n');
        }
    }
    out
}

pub fn parse_json(text: &str) -> Result<Vec<TableDocument>, serde_json::Error> {
    serde_json::from_str(text)
}
