use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

/// Rows shown in human output and flattened into csv.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        Table {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows
            .push(row.into_iter().map(|c| c.to_string()).collect());
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub result: Value,
    pub provenance: Vec<String>,
    /// First line of human output.
    #[serde(skip)]
    pub headline: String,
    /// The first table is the one written as csv.
    #[serde(skip)]
    pub tables: Vec<Table>,
    /// Free-form remarks printed under the tables.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, result: impl Serialize) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            parameters: BTreeMap::new(),
            result: serde_json::to_value(result).expect("results serialize"),
            provenance: Vec::new(),
            headline: String::new(),
            tables: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).expect("parameters serialize");
        self.parameters.insert(key.to_string(), v);
        self
    }

    pub fn source(mut self, note: impl Into<String>) -> Self {
        self.provenance.push(note.into());
        self
    }

    pub fn headline(mut self, line: impl Into<String>) -> Self {
        self.headline = line.into();
        self
    }

    pub fn table(mut self, table: Table) -> Self {
        self.tables.push(table);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Human => render_human(report),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report),
    }
}

fn render_human(report: &Report) -> String {
    let mut out = String::new();
    if !report.headline.is_empty() {
        writeln!(out, "{}", report.headline).unwrap();
    }
    for table in &report.tables {
        out.push('\n');
        if !table.title.is_empty() {
            writeln!(out, "{}", table.title).unwrap();
        }
        out.push_str(&markdown_table(table));
    }
    if !report.notes.is_empty() {
        out.push('\n');
        for n in &report.notes {
            writeln!(out, "note: {n}").unwrap();
        }
    }
    if !report.provenance.is_empty() {
        out.push('\n');
        for p in &report.provenance {
            writeln!(out, "source: {p}").unwrap();
        }
    }
    out
}

fn markdown_table(table: &Table) -> String {
    let mut widths: Vec<usize> = table.columns.iter().map(|c| c.chars().count()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(&table.columns);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&format!("|-{}-|\n", rule.join("-|-")));
    for row in &table.rows {
        out.push_str(&line(row));
    }
    out
}

fn render_csv(report: &Report) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(table) = report.tables.first() {
        w.write_record(&table.columns).expect("in-memory write");
        for row in &table.rows {
            w.write_record(row).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}
