//! Table rendering for the four output formats.

use std::io::IsTerminal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Tsv,
    Json,
}

/// Markdown on a terminal, CSV when piped, unless overridden.
pub fn effective_format(explicit: Option<Format>) -> Format {
    explicit.unwrap_or_else(|| {
        if std::io::stdout().is_terminal() {
            Format::Md
        } else {
            Format::Csv
        }
    })
}

pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self::from_columns(columns.iter().map(|c| c.to_string()).collect())
    }

    pub fn from_columns(columns: Vec<String>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Md => self.render_markdown(),
            Format::Csv => self.render_delimited(','),
            Format::Tsv => self.render_delimited('\t'),
            Format::Json => self.render_json(),
        }
    }

    fn render_markdown(&self) -> String {
        let mut out = String::from("|");
        for c in &self.columns {
            out.push_str(&format!(" {c} |"));
        }
        out.push_str("\n|");
        for _ in &self.columns {
            out.push_str("---|");
        }
        out.push('\n');
        for row in &self.rows {
            out.push('|');
            for cell in row {
                out.push_str(&format!(" {cell} |"));
            }
            out.push('\n');
        }
        out
    }

    fn render_delimited(&self, sep: char) -> String {
        let mut out = self.columns.join(&sep.to_string());
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(&sep.to_string()));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let value = serde_json::json!({
            "columns": self.columns,
            "rows": self.rows,
        });
        let mut text = serde_json::to_string_pretty(&value).expect("table serializes");
        text.push('\n');
        text
    }
}
