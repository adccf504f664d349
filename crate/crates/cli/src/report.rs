//! Renders verification records as JSON, CSV, or Markdown.

use crate::records::{to_json, TheoremRecord, Verdict};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(format!("unknown format '{other}' (expected json, csv, or md)")),
        }
    }
}

pub fn render(records: &[TheoremRecord], format: Format) -> String {
    match format {
        Format::Json => to_json(records),
        Format::Csv => render_csv(records),
        Format::Markdown => render_markdown(records),
    }
}

/// RFC 4180 quoting: always quote, double any embedded quotes. Instance and
/// expectation strings routinely contain commas.
fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn render_csv(records: &[TheoremRecord]) -> String {
    let mut out = String::from("theorem,instance,expected,computed,verdict,wall_ms\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            csv_field(&r.theorem),
            csv_field(&r.instance),
            csv_field(&r.expected),
            csv_field(&r.computed),
            r.verdict,
            r.wall_ms
        );
    }
    out
}

/// Escapes Markdown table cell content: pipes would break the row.
fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn render_markdown(records: &[TheoremRecord]) -> String {
    let total = records.len();
    let failed = records.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let mut out = String::from("# Verification report\n\n");
    let _ = writeln!(
        out,
        "{} records, {} passed, {} failed.\n",
        total,
        total - failed,
        failed
    );
    let mut i = 0;
    while i < total {
        let theorem = &records[i].theorem;
        let _ = writeln!(out, "## {theorem}\n");
        out.push_str("| instance | expected | computed | verdict |\n");
        out.push_str("| --- | --- | --- | --- |\n");
        while i < total && records[i].theorem == *theorem {
            let r = &records[i];
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                md_cell(&r.instance),
                md_cell(&r.expected),
                md_cell(&r.computed),
                r.verdict
            );
            i += 1;
        }
        out.push('\n');
    }
    out
}

// ===========================================================================
// tests
// ===========================================================================
