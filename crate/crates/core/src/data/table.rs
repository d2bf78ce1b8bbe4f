//! Delimiter-separated text: `#` comments, a header row of names, then rows
//! of fields separated by commas or by whitespace.

use crate::{Error, Result};

#[derive(Debug)]
pub(crate) struct Record<'a> {
    pub line: usize,
    pub fields: Vec<&'a str>,
}

#[derive(Debug)]
pub(crate) struct Table<'a> {
    pub header: Vec<&'a str>,
    pub records: Vec<Record<'a>>,
}

fn split(line: &str, comma: bool) -> Vec<&str> {
    if comma {
        line.split(',').map(str::trim).collect()
    } else {
        line.split_whitespace().collect()
    }
}

pub(crate) fn parse_table(text: &str) -> Result<Table<'_>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header_text) = lines.next().ok_or_else(|| Error::Parse {
        line: 0,
        column: 0,
        message: "input is empty".into(),
    })?;
    let comma = header_text.contains(',');
    let header = split(header_text, comma);
    if let Some(pos) = header.iter().position(|h| h.is_empty()) {
        return Err(Error::Parse {
            line: header_line,
            column: pos + 1,
            message: "empty column name".into(),
        });
    }
    for (i, name) in header.iter().enumerate() {
        if header[..i].contains(name) {
            return Err(Error::Parse {
                line: header_line,
                column: i + 1,
                message: format!("duplicate column name `{name}`"),
            });
        }
    }

    let records = lines
        .map(|(line, l)| Record {
            line,
            fields: split(l, comma),
        })
        .collect();
    Ok(Table { header, records })
}

/// Parses one numeric field; rejects missing markers and non-finite values.
pub(crate) fn parse_number(field: &str, line: usize, column: usize) -> Result<f64> {
    let bad = |message: String| Error::Parse { line, column, message };
    if field.is_empty() || field.eq_ignore_ascii_case("na") || field == "." {
        return Err(bad("missing value".into()));
    }
    let value: f64 = field
        .parse()
        .map_err(|_| bad(format!("`{field}` is not a number")))?;
    if !value.is_finite() {
        return Err(bad(format!("`{field}` is not finite")));
    }
    Ok(value)
}
