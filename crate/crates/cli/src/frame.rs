//! The frame file format.
//!
//! ```text
//! format: 1
//! n: 2
//! # comments start with '#'
//! field Z1:
//!   z1 = 1
//!   w11 = -zb1
//!   w12 = -zb2
//! field Z2:
//!   z2 = 1
//!   w22 = -zb2
//! base_point:
//!   z1 = 0
//! ```
//!
//! Field bodies list `coordinate = expression` pairs over the standard chart
//! of CR dimension `n`. The optional base point assigns Gaussian-rational
//! constants to coordinates; the conjugate coordinates follow. Omitted
//! coordinates are zero.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use freecr_core::exactfield::parse::ParseErrorKind;
use freecr_core::exactfield::{parse_scalar, Chart, Scalar, GQ};
use freecr_core::vfields::VectorField;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: unknown coordinate `{name}`")]
    UnknownCoordinate {
        line: usize,
        column: usize,
        name: String,
    },
    #[error("expected {expected} fields, got {got}")]
    WrongFieldCount { expected: usize, got: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldEntry {
    pub name: String,
    /// `(coordinate, expression text)` in file order.
    pub components: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameDocument {
    pub n: usize,
    pub fields: Vec<FieldEntry>,
    pub base_point: Option<BTreeMap<String, String>>,
}

fn perr(line: usize, column: usize, message: impl Into<String>) -> FrameError {
    FrameError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Column (1-based, in characters) of the first non-blank character.
fn indent_col(raw: &str) -> usize {
    raw.chars().take_while(|c| c.is_whitespace()).count() + 1
}

enum Section {
    None,
    Field,
    Base,
}

pub fn parse_frame(text: &str) -> Result<FrameDocument, FrameError> {
    let mut format = None;
    let mut n = None;
    let mut fields: Vec<FieldEntry> = Vec::new();
    let mut base: Option<BTreeMap<String, String>> = None;
    let mut chart: Option<Chart> = None;
    let mut section = Section::None;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let col = indent_col(content);
        let trimmed = content.trim();
        let indented = col > 1;
        if !indented {
            if let Some(v) = trimmed.strip_prefix("format:") {
                if v.trim() != "1" {
                    return Err(perr(
                        line,
                        col,
                        format!("unsupported format `{}`", v.trim()),
                    ));
                }
                format = Some(1);
                section = Section::None;
            } else if let Some(v) = trimmed.strip_prefix("n:") {
                if format.is_none() {
                    return Err(perr(line, col, "expected `format: 1` first"));
                }
                let v: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| perr(line, col + 2, "n must be a positive integer"))?;
                if v < 2 {
                    return Err(perr(line, col + 2, "n must be at least 2"));
                }
                n = Some(v);
                chart = Some(Chart::standard(v));
                section = Section::None;
            } else if let Some(rest) = trimmed.strip_prefix("field ") {
                if chart.is_none() {
                    return Err(perr(line, col, "expected `n:` before fields"));
                }
                let name = rest
                    .strip_suffix(':')
                    .ok_or_else(|| perr(line, col + trimmed.len(), "expected `:`"))?
                    .trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(perr(line, col + 6, "bad field name"));
                }
                fields.push(FieldEntry {
                    name: name.to_string(),
                    components: Vec::new(),
                });
                section = Section::Field;
            } else if trimmed == "base_point:" {
                if chart.is_none() {
                    return Err(perr(line, col, "expected `n:` before base_point"));
                }
                if base.is_some() {
                    return Err(perr(line, col, "duplicate base_point"));
                }
                base = Some(BTreeMap::new());
                section = Section::Base;
            } else {
                return Err(perr(line, col, format!("unexpected `{trimmed}`")));
            }
            continue;
        }

        let (Some(chart), Section::Field | Section::Base) = (chart.as_ref(), &section) else {
            return Err(perr(line, col, "indented line outside a section"));
        };
        let Some(eq) = trimmed.find('=') else {
            return Err(perr(
                line,
                col + trimmed.len(),
                "expected `coordinate = expression`",
            ));
        };
        let coord = trimmed[..eq].trim().to_string();
        let expr = trimmed[eq + 1..].trim().to_string();
        if chart.index_of(&coord).is_err() {
            return Err(FrameError::UnknownCoordinate {
                line,
                column: col,
                name: coord,
            });
        }
        let expr_col = col
            + trimmed[..eq + 1].chars().count()
            + (trimmed[eq + 1..].chars().count() - trimmed[eq + 1..].trim_start().chars().count());
        let value = parse_scalar(&expr, chart).map_err(|e| {
            let message = match &e.kind {
                ParseErrorKind::UnknownSymbol(s) => {
                    return FrameError::UnknownCoordinate {
                        line,
                        column: expr_col + e.column - 1,
                        name: s.clone(),
                    }
                }
                ParseErrorKind::Syntax(m) => m.clone(),
                ParseErrorKind::DivisionByZero => "division by zero".to_string(),
            };
            perr(line, expr_col + e.column - 1, message)
        })?;
        match section {
            Section::Field => {
                let f = fields.last_mut().expect("inside a field");
                if f.components.iter().any(|(c, _)| *c == coord) {
                    return Err(perr(line, col, format!("duplicate coordinate `{coord}`")));
                }
                f.components.push((coord.clone(), expr.clone()));
            }
            Section::Base => {
                if !value.is_constant() {
                    return Err(perr(line, expr_col, "base point values must be constants"));
                }
                let b = base.as_mut().expect("inside base_point");
                if b.insert(coord.clone(), expr.clone()).is_some() {
                    return Err(perr(line, col, format!("duplicate coordinate `{coord}`")));
                }
            }
            Section::None => return Err(perr(line, col, "indented line outside a section")),
        }
    }

    let n = n.ok_or_else(|| perr(1, 1, "missing `n:`"))?;
    if fields.len() != n {
        return Err(FrameError::WrongFieldCount {
            expected: n,
            got: fields.len(),
        });
    }
    let doc = FrameDocument {
        n,
        fields,
        base_point: base,
    };
    doc.base_point_values()?;
    Ok(doc)
}

impl FrameDocument {
    pub fn chart(&self) -> Arc<Chart> {
        Arc::new(Chart::standard(self.n))
    }

    /// Fields named `Z1, Z2, …` with canonical coefficient texts.
    pub fn from_fields(fields: &[VectorField]) -> Self {
        let chart = fields[0].chart().clone();
        let entries = fields
            .iter()
            .enumerate()
            .map(|(k, f)| FieldEntry {
                name: format!("Z{}", k + 1),
                components: f
                    .components()
                    .map(|(a, s)| (chart.name(a).to_string(), s.to_text(&chart)))
                    .collect(),
            })
            .collect();
        FrameDocument {
            n: chart.n(),
            fields: entries,
            base_point: None,
        }
    }

    pub fn vector_fields(&self) -> Result<Vec<VectorField>, FrameError> {
        let chart = self.chart();
        self.fields
            .iter()
            .map(|f| {
                let mut comps = Vec::new();
                for (c, e) in &f.components {
                    let a = chart
                        .index_of(c)
                        .map_err(|_| FrameError::UnknownCoordinate {
                            line: 0,
                            column: 0,
                            name: c.clone(),
                        })?;
                    let s =
                        parse_scalar(e, &chart).map_err(|e| perr(0, e.column, e.to_string()))?;
                    comps.push((a, s));
                }
                Ok(VectorField::from_components(&chart, comps))
            })
            .collect()
    }

    /// Full coordinate vector of the base point, or `None` for the origin.
    pub fn base_point_values(&self) -> Result<Option<Vec<GQ>>, FrameError> {
        let Some(base) = &self.base_point else {
            return Ok(None);
        };
        let chart = self.chart();
        let mut vals: Vec<Option<GQ>> = vec![None; chart.len()];
        for (c, e) in base {
            let a = chart
                .index_of(c)
                .map_err(|_| FrameError::UnknownCoordinate {
                    line: 0,
                    column: 0,
                    name: c.clone(),
                })?;
            let v = parse_scalar(e, &chart)
                .ok()
                .and_then(|s: Scalar| s.constant_value())
                .ok_or_else(|| {
                    perr(0, 0, format!("base point value of `{c}` is not a constant"))
                })?;
            let (b, sign) = chart.conj_of(a);
            let cv = if sign < 0 { -v.conj() } else { v.conj() };
            for (slot, val) in [(a, v), (b, cv)] {
                match &vals[slot] {
                    Some(old) if *old != val => {
                        return Err(perr(
                            0,
                            0,
                            format!("base point values of `{c}` and its conjugate disagree"),
                        ))
                    }
                    _ => vals[slot] = Some(val),
                }
            }
        }
        Ok(Some(
            vals.into_iter()
                .map(|v| v.unwrap_or_else(GQ::zero))
                .collect(),
        ))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "format: 1").unwrap();
        writeln!(out, "n: {}", self.n).unwrap();
        for f in &self.fields {
            writeln!(out, "field {}:", f.name).unwrap();
            for (c, e) in &f.components {
                writeln!(out, "  {c} = {e}").unwrap();
            }
        }
        if let Some(b) = &self.base_point {
            writeln!(out, "base_point:").unwrap();
            for (c, e) in b {
                writeln!(out, "  {c} = {e}").unwrap();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use freecr_core::model::flat_frame;

    #[test]
    fn flat_frame_round_trips() {
        let doc = FrameDocument::from_fields(&flat_frame(2).unwrap());
        let text = doc.to_text();
        assert_eq!(parse_frame(&text).unwrap(), doc);
        assert_eq!(doc.vector_fields().unwrap(), flat_frame(2).unwrap());
    }

    #[test]
    fn conj_expression() {
        let text =
            "format: 1\nn: 2\nfield Z1:\n  z1 = 1\n  w12 = conj(z2)*(-1)\nfield Z2:\n  z2 = 1\n";
        let doc = parse_frame(text).unwrap();
        let f = doc.vector_fields().unwrap();
        let c = Chart::standard(2);
        assert_eq!(f[0].component(c.w(0, 1).0), Scalar::var(c.zb(1)).neg());
    }

    #[test]
    fn positioned_errors() {
        let text = "format: 1\nn: 2\nfield Z1:\n  z1 = z1^^2\nfield Z2:\n  z2 = 1\n";
        assert_eq!(
            parse_frame(text).unwrap_err(),
            FrameError::Parse {
                line: 4,
                column: 11,
                message: "expected an integer exponent".into()
            }
        );
        let text = "format: 1\nn: 2\nfield Z1:\n  q1 = 1\nfield Z2:\n  z2 = 1\n";
        assert!(matches!(
            parse_frame(text).unwrap_err(),
            FrameError::UnknownCoordinate {
                line: 4,
                column: 3,
                ..
            }
        ));
        let text = "format: 1\nn: 2\nfield Z1:\n  z1 = 1\n";
        assert_eq!(
            parse_frame(text).unwrap_err(),
            FrameError::WrongFieldCount {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn base_point_fills_conjugates() {
        let text = "format: 1\nn: 2\nfield Z1:\n  z1 = 1\nfield Z2:\n  z2 = 1\nbase_point:\n  z1 = 1+i\n  w11 = i\n";
        let doc = parse_frame(text).unwrap();
        let p = doc.base_point_values().unwrap().unwrap();
        let c = Chart::standard(2);
        assert_eq!(p[c.zb(0)], GQ::from_parts(1, 1, -1, 1));
        assert_eq!(p[c.w(0, 0).0], GQ::i());
        let bad =
            "format: 1\nn: 2\nfield Z1:\n  z1 = 1\nfield Z2:\n  z2 = 1\nbase_point:\n  w11 = 1\n";
        assert!(parse_frame(bad).is_err());
    }
}
