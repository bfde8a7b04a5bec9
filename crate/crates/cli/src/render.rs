use std::io::Write;

use serde::Serialize;

use crate::CliError;

/// Aligned plain-text table; the first column is left aligned, the rest right aligned.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: Into<String>>(&mut self, cells: impl IntoIterator<Item = S>) {
        self.rows.push(cells.into_iter().map(Into::into).collect());
    }

    pub fn write(&self, out: &mut dyn Write) -> Result<(), CliError> {
        let cols = self.header.len();
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let mut s = String::new();
            for (i, c) in cells.iter().enumerate().take(cols) {
                let pad = widths[i] - c.chars().count();
                if i == 0 {
                    s.push_str(c);
                    s.push_str(&" ".repeat(pad));
                } else {
                    s.push_str("  ");
                    s.push_str(&" ".repeat(pad));
                    s.push_str(c);
                }
            }
            s.trim_end().to_string()
        };
        writeln!(out, "{}", line(&self.header))?;
        let rule: usize = widths.iter().sum::<usize>() + 2 * (cols - 1);
        writeln!(out, "{}", "-".repeat(rule))?;
        for r in &self.rows {
            writeln!(out, "{}", line(r))?;
        }
        Ok(())
    }
}

/// Two-column key/value listing.
pub fn key_values(pairs: &[(&str, String)], out: &mut dyn Write) -> Result<(), CliError> {
    let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in pairs {
        writeln!(out, "{k:<width$}  {v}")?;
    }
    Ok(())
}

pub fn json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Output(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

pub fn csv<T: Serialize>(rows: &[T], out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Output(e.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
