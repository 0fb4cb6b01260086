use std::io::Write;

use oddzeta::Real;
use serde_json::{Map, Value};

use crate::CliError;

/// Output encodings accepted by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Text,
}

/// One value in a report row.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Bool(bool),
    Text(String),
    Real(Real),
    Missing,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn plain(&self) -> String {
        match self {
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Real(r) => r.to_decimal_string(),
            Cell::Missing => String::new(),
        }
    }

    fn short(&self) -> String {
        match self {
            Cell::Real(r) if r.is_finite() && !r.is_zero() => r.to_sci(16),
            Cell::Missing => "-".into(),
            other => other.plain(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::from(*b),
            Cell::Text(s) => Value::from(s.clone()),
            // decimal strings keep every digit; binary floats would not
            Cell::Real(r) => Value::from(r.to_decimal_string()),
            Cell::Missing => Value::Null,
        }
    }
}

impl From<Real> for Cell {
    fn from(r: Real) -> Self {
        Cell::Real(r)
    }
}

impl From<&Real> for Cell {
    fn from(r: &Real) -> Self {
        Cell::Real(r.clone())
    }
}

/// A rectangular report: fixed columns, rows in presentation order.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Report {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Report {
            command,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(
        &self,
        format: OutputFormat,
        digits: u32,
        tol: &Real,
        out: &mut dyn Write,
    ) -> Result<(), CliError> {
        match format {
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => self.write_json(digits, tol, out),
            OutputFormat::Text => self.write_text(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::plain))?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_json(&self, digits: u32, tol: &Real, out: &mut dyn Write) -> Result<(), CliError> {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, v)| (c.to_string(), v.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut doc = Map::new();
        doc.insert("command".into(), Value::from(self.command));
        doc.insert("digits".into(), Value::from(digits));
        doc.insert("tol".into(), Value::from(tol.to_decimal_string()));
        doc.insert("rows".into(), Value::Array(rows));
        serde_json::to_writer_pretty(&mut *out, &Value::Object(doc))?;
        writeln!(out)?;
        Ok(())
    }

    fn write_text(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::short).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([c.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |items: Vec<&str>| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(self.columns.clone()))?;
        for row in &cells {
            writeln!(out, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }
}
