use serde_json::Value;

use crate::config::Format;
use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Table {
    pub title: String,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: impl Into<String>, header: &[&str]) -> Self {
        Table {
            title: title.into(),
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

/// A command result: one JSON document plus its tabular views.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub json: Value,
    pub tables: Vec<Table>,
}

impl Report {
    /// Several per-point reports: a JSON array, tables concatenated.
    pub fn merge(parts: Vec<Report>) -> Report {
        if parts.len() == 1 {
            return parts.into_iter().next().unwrap();
        }
        let mut json = Vec::with_capacity(parts.len());
        let mut tables = Vec::new();
        for p in parts {
            json.push(p.json);
            tables.extend(p.tables);
        }
        Report {
            json: Value::Array(json),
            tables,
        }
    }
}

fn render_table(t: &Table, out: &mut String) {
    let cols = t.header.len().max(t.rows.iter().map(Vec::len).max().unwrap_or(0));
    let mut width = vec![0; cols];
    for row in std::iter::once(&t.header).chain(&t.rows) {
        for (k, c) in row.iter().enumerate() {
            width[k] = width[k].max(c.chars().count());
        }
    }
    if !t.title.is_empty() {
        out.push_str(&t.title);
        out.push('\n');
    }
    for row in std::iter::once(&t.header).chain(&t.rows) {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(k, c)| format!("{c}{}", " ".repeat(width[k] - c.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
}

/// Bytes for `format`. JSON keys come out sorted (serde_json's default map),
/// so output is byte-stable.
pub fn emit_report(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json).map_err(std::io::Error::from)?;
            s.push('\n');
            Ok(s)
        }
        Format::Table => {
            let mut s = String::new();
            for (k, t) in report.tables.iter().enumerate() {
                if k > 0 {
                    s.push('\n');
                }
                render_table(t, &mut s);
            }
            Ok(s)
        }
        Format::Csv => {
            let mut s = String::new();
            for (k, t) in report.tables.iter().enumerate() {
                if k > 0 {
                    s.push('\n');
                }
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
                let mut header = vec![format!("table:{}", t.title)];
                header.extend(t.header.iter().cloned());
                w.write_record(&header).map_err(std::io::Error::from)?;
                for row in &t.rows {
                    let mut rec = vec![t.title.clone()];
                    rec.extend(row.iter().cloned());
                    w.write_record(&rec).map_err(std::io::Error::from)?;
                }
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                s.push_str(&String::from_utf8(bytes).expect("csv writer emits utf-8"));
            }
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_a_valid_document() {
        let r = Report::default();
        assert_eq!(emit_report(&r, Format::Json).unwrap(), "null\n");
        assert_eq!(emit_report(&r, Format::Table).unwrap(), "");
        assert_eq!(emit_report(&r, Format::Csv).unwrap(), "");
    }

    #[test]
    fn table_alignment_and_csv_header() {
        let mut t = Table::new("demo", &["k", "value"]);
        t.row(vec!["1".into(), "a,b".into()]);
        t.row(vec!["10".into(), "c".into()]);
        let r = Report {
            json: Value::Null,
            tables: vec![t],
        };
        assert_eq!(emit_report(&r, Format::Table).unwrap(), "demo\nk   value\n1   a,b\n10  c\n");
        assert_eq!(
            emit_report(&r, Format::Csv).unwrap(),
            "table:demo,k,value\ndemo,1,\"a,b\"\ndemo,10,c\n"
        );
    }
}
