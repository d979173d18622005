//! SEO text format, one instruction per line:
//!
//! ```text
//! PHAS <ang>
//! CNOT <α> <T|F> <β>
//! ROTY <α> <ang>
//! ROTZ <α> <ang>
//! ```
//!
//! Angles are in degrees. Blank lines are ignored and `#` starts a comment.
//! The writer uses single spaces and six decimals unless six decimals would
//! not read back as the same `f64`, in which case it prints the shortest
//! exact decimal.

use csdc_core::seo::{Instruction, SeoProgram};
use std::fmt::Write;

use crate::FormatError;

pub fn format_angle(degrees: f64) -> String {
    let fixed = format!("{degrees:.6}");
    if fixed.parse::<f64>() == Ok(degrees) {
        fixed
    } else {
        format!("{degrees}")
    }
}

pub fn format_instruction(i: &Instruction) -> String {
    match *i {
        Instruction::Phase { degrees } => format!("PHAS {}", format_angle(degrees)),
        Instruction::Cnot { control, value, target } => {
            format!("CNOT {control} {} {target}", if value { 'T' } else { 'F' })
        }
        Instruction::RotY { bit, degrees } => format!("ROTY {bit} {}", format_angle(degrees)),
        Instruction::RotZ { bit, degrees } => format!("ROTZ {bit} {}", format_angle(degrees)),
    }
}

pub fn write_seo(p: &SeoProgram) -> String {
    let mut out = String::with_capacity(p.len() * 20);
    for i in p.instructions() {
        writeln!(out, "{}", format_instruction(i)).unwrap();
    }
    out
}

fn parse_bit(field: &str, line: usize) -> Result<usize, FormatError> {
    field
        .parse()
        .map_err(|_| FormatError::new(line, format!("`{field}` is not a bit index")))
}

fn parse_angle(field: &str, line: usize) -> Result<f64, FormatError> {
    match field.parse::<f64>() {
        Ok(a) if a.is_finite() => Ok(a),
        _ => Err(FormatError::new(line, format!("`{field}` is not a finite angle"))),
    }
}

pub fn parse_instruction(text: &str, line: usize) -> Result<Instruction, FormatError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    let arity = |n: usize| {
        if fields.len() == n + 1 {
            Ok(())
        } else {
            Err(FormatError::new(
                line,
                format!("{} takes {n} fields, found {}", fields[0], fields.len() - 1),
            ))
        }
    };
    match fields[0] {
        "PHAS" => {
            arity(1)?;
            Ok(Instruction::Phase {
                degrees: parse_angle(fields[1], line)?,
            })
        }
        "CNOT" => {
            arity(3)?;
            let control = parse_bit(fields[1], line)?;
            let value = match fields[2] {
                "T" => true,
                "F" => false,
                other => return Err(FormatError::new(line, format!("expected T or F, found `{other}`"))),
            };
            let target = parse_bit(fields[3], line)?;
            if control == target {
                return Err(FormatError::new(line, format!("control and target are both bit {control}")));
            }
            Ok(Instruction::Cnot { control, value, target })
        }
        kw @ ("ROTY" | "ROTZ") => {
            arity(2)?;
            let bit = parse_bit(fields[1], line)?;
            let degrees = parse_angle(fields[2], line)?;
            Ok(if kw == "ROTY" {
                Instruction::RotY { bit, degrees }
            } else {
                Instruction::RotZ { bit, degrees }
            })
        }
        other => Err(FormatError::new(line, format!("unknown keyword `{other}`"))),
    }
}

/// Parses a program. The register size is `nbits` when given, else the
/// largest bit index plus one (1 for programs without bit indices).
pub fn parse_seo(text: &str, nbits: Option<usize>) -> Result<SeoProgram, FormatError> {
    let mut instructions = Vec::new();
    let mut widest = (0, 0);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let i = parse_instruction(body, line)?;
        if let Some(b) = i.max_bit() {
            if b + 1 > widest.0 {
                widest = (b + 1, line);
            }
        }
        instructions.push(i);
    }
    let n = match nbits {
        Some(0) => return Err(FormatError::new(1, "register size must be positive")),
        Some(n) if n < widest.0 => {
            return Err(FormatError::new(
                widest.1,
                format!("bit {} does not fit in {n} bits", widest.0 - 1),
            ))
        }
        Some(n) => n,
        None => widest.0.max(1),
    };
    Ok(SeoProgram::new(n, instructions).expect("instructions validated while parsing"))
}
