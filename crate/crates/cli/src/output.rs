use anyhow::Result;
use serde::Serialize;
use serde_json::Value;

use crate::config::Format;

/// One command result in all three formats.
#[derive(Debug)]
pub struct Rendered {
    pub json: Value,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Extra lines shown after the table in text mode.
    pub notes: Vec<String>,
}

impl Rendered {
    pub fn new<T: Serialize>(
        value: &T,
        header: Vec<&'static str>,
        rows: Vec<Vec<String>>,
    ) -> Result<Self> {
        Ok(Rendered {
            json: serde_json::to_value(value)?,
            header,
            rows,
            notes: Vec::new(),
        })
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes = notes;
        self
    }

    pub fn format(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Csv => self.csv(),
            Format::Text => Ok(self.text()),
        }
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut out = line(self.header.clone());
        for row in &self.rows {
            out += &line(row.iter().map(String::as_str).collect());
        }
        for note in &self.notes {
            out += note;
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Rendered {
        let rows = vec![
            vec!["((),(3,1))".into(), "3".into()],
            vec!["a, b".into(), "12".into()],
        ];
        Rendered::new(&serde_json::json!({"k": 1}), vec!["label", "dim"], rows)
            .unwrap()
            .with_notes(vec!["done".into()])
    }

    #[test]
    fn csv_quotes_fields() {
        assert_eq!(
            sample().format(Format::Csv).unwrap(),
            "label,dim\n\"((),(3,1))\",3\n\"a, b\",12\n"
        );
    }

    #[test]
    fn text_aligns_columns() {
        assert_eq!(
            sample().format(Format::Text).unwrap(),
            "label       dim\n((),(3,1))  3\na, b        12\ndone\n"
        );
    }

    #[test]
    fn json_ends_with_newline() {
        assert_eq!(sample().format(Format::Json).unwrap(), "{\n  \"k\": 1\n}\n");
    }
}
