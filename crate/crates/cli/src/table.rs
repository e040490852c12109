use std::io::Write;

use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

/// Scientific notation with `precision` digits after the point.
fn format_num(v: f64, precision: usize) -> String {
    if v.is_finite() {
        format!("{v:.precision$e}")
    } else if v.is_nan() {
        "NaN".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

impl Cell {
    fn csv(&self, precision: usize) -> String {
        match self {
            Cell::Num(v) => format_num(*v, precision),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    /// The JSON number is the CSV text re-read, so both outputs carry the
    /// same rounded value.
    fn json(&self, precision: usize) -> Value {
        match self {
            Cell::Num(v) if v.is_finite() => {
                let rounded: f64 = format_num(*v, precision).parse().expect("formatted float parses");
                Value::from(rounded)
            }
            Cell::Num(_) | Cell::Empty => Value::Null,
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

/// Column-keyed rows plus run metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub meta: Map<String, Value>,
}

impl Table {
    pub fn new(command: &str, columns: &[&'static str]) -> Self {
        let mut meta = Map::new();
        meta.insert("command".into(), Value::from(command));
        Self { columns: columns.to_vec(), rows: Vec::new(), meta }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        let params = self.meta.entry("parameters").or_insert_with(|| Value::Object(Map::new()));
        params.as_object_mut().expect("parameters object").insert(key.into(), value.into());
    }

    pub fn write_csv<W: Write>(&self, out: W, precision: usize) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.csv(precision)))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self, precision: usize) -> Value {
        let mut meta = self.meta.clone();
        meta.insert("precision".into(), Value::from(precision));
        meta.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().zip(row).map(|(k, c)| ((*k).to_owned(), c.json(precision))).collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::json!({ "meta": meta, "rows": rows })
    }

    pub fn write<W: Write>(&self, mut out: W, format: Format, precision: usize) -> Result<(), CliError> {
        match format {
            Format::Csv => self.write_csv(out, precision),
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.to_json(precision))?;
                writeln!(out)?;
                Ok(())
            }
        }
    }
}

pub fn complex_text(z: Complex64) -> String {
    if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
