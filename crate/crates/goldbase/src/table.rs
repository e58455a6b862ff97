//! Side-by-side expansion tables over a range of naturals, in plain
//! text (tab-separated, headerless), CSV, or JSON.

use std::error::Error;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::digits::RadixGlyph;
use crate::representation::{expansion_of, type_code, Scheme, TypeCode};
use crate::scan;
use crate::silver::{silver_canonical_of, silver_standard_of};

/// Output format for the table renderers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TableFormat {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFormat(pub String);

impl fmt::Display for UnknownFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown table format `{}`; expected text, csv, or json", self.0)
    }
}

impl Error for UnknownFormat {}

impl FromStr for TableFormat {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<TableFormat, UnknownFormat> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(UnknownFormat(other.to_string())),
        }
    }
}

/// One row of the base-φ table: both expansions and the type code.
#[derive(Clone, Debug, Serialize)]
pub struct PhiRow {
    pub n: u64,
    pub beta: String,
    pub gamma: String,
    #[serde(rename = "type")]
    pub type_code: TypeCode,
}

/// One row of the base-σ table: standard and canonical expansions.
#[derive(Clone, Debug, Serialize)]
pub struct SilverRow {
    pub n: u64,
    pub standard: String,
    pub canonical: String,
}

pub fn phi_rows(from: u64, to: u64, glyph: RadixGlyph) -> Vec<PhiRow> {
    assert!(1 <= from && from <= to, "bad table range [{from}, {to}]");
    scan::map_range(from, to, |n| PhiRow {
        n,
        beta: expansion_of(n, Scheme::Bergman).render(glyph),
        gamma: expansion_of(n, Scheme::Canonical).render(glyph),
        type_code: type_code(n),
    })
}

pub fn silver_rows(from: u64, to: u64, glyph: RadixGlyph) -> Vec<SilverRow> {
    assert!(1 <= from && from <= to, "bad table range [{from}, {to}]");
    scan::map_range(from, to, |n| SilverRow {
        n,
        standard: silver_standard_of(n).render(glyph),
        canonical: silver_canonical_of(n).render(glyph),
    })
}

pub fn render_phi_table(rows: &[PhiRow], format: TableFormat) -> String {
    match format {
        TableFormat::Text => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    row.n, row.beta, row.gamma, row.type_code
                ));
            }
            out
        }
        TableFormat::Csv => {
            let mut out = String::from("N,beta,gamma,type\n");
            for row in rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    row.n, row.beta, row.gamma, row.type_code
                ));
            }
            out
        }
        TableFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("table serializes");
            out.push('\n');
            out
        }
    }
}

pub fn render_silver_table(rows: &[SilverRow], format: TableFormat) -> String {
    match format {
        TableFormat::Text => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&format!("{}\t{}\t{}\n", row.n, row.standard, row.canonical));
            }
            out
        }
        TableFormat::Csv => {
            let mut out = String::from("N,standard,canonical\n");
            for row in rows {
                out.push_str(&format!("{},{},{}\n", row.n, row.standard, row.canonical));
            }
            out
        }
        TableFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("table serializes");
            out.push('\n');
            out
        }
    }
}
