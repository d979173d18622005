//! Matrix text format.
//!
//! ```text
//! N
//! re(0,0) im(0,0) re(0,1) im(0,1) ...   (N lines of 2N numbers)
//! ```
//!
//! Fields are separated by any run of spaces or tabs. Entries are written
//! with 17 significant digits, which reproduces every `f64` exactly.

use csdc_core::{ComplexMatrix, C64};
use std::fmt::Write;

use crate::FormatError;

pub fn write_matrix(m: &ComplexMatrix) -> String {
    let n = m.dim();
    let mut out = String::with_capacity(n * n * 50);
    writeln!(out, "{n}").unwrap();
    for r in 0..n {
        let fields: Vec<String> = m
            .row(r)
            .iter()
            .flat_map(|z| [format!("{:.16e}", z.re), format!("{:.16e}", z.im)])
            .collect();
        writeln!(out, "{}", fields.join(" ")).unwrap();
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines.next().ok_or_else(|| FormatError::new(1, "empty matrix file"))?;
    let n: usize = header
        .parse()
        .map_err(|_| FormatError::new(first, format!("expected the dimension, found `{header}`")))?;
    if n == 0 {
        return Err(FormatError::new(first, "dimension must be positive"));
    }

    let mut entries = Vec::with_capacity(n * n);
    let mut last = first;
    for row in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| FormatError::new(last + 1, format!("expected {n} rows, found {row}")))?;
        last = ln;
        let fields: Vec<&str> = line.split([' ', '\t']).filter(|f| !f.is_empty()).collect();
        if fields.len() != 2 * n {
            return Err(FormatError::new(
                ln,
                format!("expected {} numbers, found {}", 2 * n, fields.len()),
            ));
        }
        let mut values = Vec::with_capacity(2 * n);
        for f in fields {
            let v: f64 = f
                .parse()
                .map_err(|_| FormatError::new(ln, format!("`{f}` is not a number")))?;
            if !v.is_finite() {
                return Err(FormatError::new(ln, format!("`{f}` is not finite")));
            }
            values.push(v);
        }
        entries.extend(values.chunks(2).map(|p| C64::new(p[0], p[1])));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(FormatError::new(ln, format!("unexpected data after {n} rows")));
    }
    Ok(ComplexMatrix::from_row_major(entries).expect("n² entries"))
}
