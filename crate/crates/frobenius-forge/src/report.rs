//! Deterministic report structure with human and machine renderings.
//!
//! Reports are ordered key/value items plus aligned tables. Rendering is
//! byte-reproducible for identical input except for the one timestamp
//! line, which consumers are expected to strip before comparing (the
//! input digest never covers it).

use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone)]
pub enum Value {
    Text(String),
    Table {
        headers: Vec<String>,
        rows: Vec<Vec<String>>,
    },
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub digest: String,
    pub exit_code: i32,
    items: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str, digest: &str) -> Report {
        Report {
            command: command.to_string(),
            digest: digest.to_string(),
            exit_code: 0,
            items: Vec::new(),
        }
    }

    pub fn put(&mut self, key: &str, value: impl Into<String>) {
        self.items
            .push((key.to_string(), Value::Text(value.into())));
    }

    pub fn put_table(&mut self, key: &str, headers: Vec<String>, rows: Vec<Vec<String>>) {
        self.items
            .push((key.to_string(), Value::Table { headers, rows }));
    }

    pub fn render(&self, format: Format, timestamp: u64) -> String {
        match format {
            Format::Human => self.render_human(timestamp),
            Format::Machine => self.render_machine(timestamp),
        }
    }

    fn render_human(&self, timestamp: u64) -> String {
        let mut out = String::new();
        out.push_str(&format!("command          : {}\n", self.command));
        out.push_str(&format!("input-digest     : {}\n", self.digest));
        out.push_str(&format!("generated-unix   : {timestamp}\n"));
        for (key, value) in &self.items {
            match value {
                Value::Text(text) => {
                    out.push_str(&format!("{key:<17}: {text}\n"));
                }
                Value::Table { headers, rows } => {
                    out.push_str(&format!("{key}:\n"));
                    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
                    for row in rows {
                        for (i, cell) in row.iter().enumerate() {
                            if cell.len() > widths[i] {
                                widths[i] = cell.len();
                            }
                        }
                    }
                    let fmt_row = |cells: &[String]| -> String {
                        let mut line = String::from(" ");
                        for (i, cell) in cells.iter().enumerate() {
                            line.push_str(&format!(" {cell:<width$}", width = widths[i]));
                        }
                        line.trim_end().to_string()
                    };
                    out.push_str(&fmt_row(headers));
                    out.push('\n');
                    for row in rows {
                        out.push_str(&fmt_row(row));
                        out.push('\n');
                    }
                }
            }
        }
        out
    }

    fn render_machine(&self, timestamp: u64) -> String {
        let mut out = String::new();
        out.push_str(&format!("report.command = {}\n", self.command));
        out.push_str(&format!("report.input_digest = {}\n", self.digest));
        out.push_str(&format!("report.generated_unix = {timestamp}\n"));
        for (key, value) in &self.items {
            let slug = key.replace(' ', "_");
            match value {
                Value::Text(text) => {
                    out.push_str(&format!("{slug} = {text}\n"));
                }
                Value::Table { headers, rows } => {
                    for (r, row) in rows.iter().enumerate() {
                        for (h, cell) in headers.iter().zip(row) {
                            let hslug = h.replace(' ', "_");
                            out.push_str(&format!("{slug}.{r}.{hslug} = {cell}\n"));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Hex SHA-256 of the raw input bytes; stable across platforms.
pub fn digest_bytes(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

/// Strip the timestamp line so two renderings can be compared.
pub fn strip_timestamp(rendered: &str) -> String {
    rendered
        .lines()
        .filter(|l| !l.starts_with("generated-unix") && !l.starts_with("report.generated_unix"))
        .collect::<Vec<_>>()
        .join("\n")
}
