//! Facet-list text format: one face per line as whitespace-separated positive
//! integers. Lines whose first non-blank character is `#` are comments; blank
//! lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::face::{Face, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

pub fn parse_facet_list(text: &str) -> Result<Vec<Face>, ParseError> {
    let mut faces = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| ParseError {
            line: n + 1,
            message,
        };
        let mut labels = Vec::new();
        for tok in line.split_whitespace() {
            let x: u64 = tok
                .parse()
                .map_err(|_| err(format!("expected a positive integer, found {tok:?}")))?;
            if x == 0 {
                return Err(err("vertex labels must be >= 1".into()));
            }
            let x = Label::try_from(x).map_err(|_| err(format!("label {x} is too large")))?;
            labels.push(x);
        }
        let face = Face::new(labels).map_err(|e| err(e.to_string()))?;
        faces.push(face);
    }
    Ok(faces)
}

pub fn render_facet_list<'a, I: IntoIterator<Item = &'a Face>>(faces: I) -> String {
    let mut out = String::new();
    for f in faces {
        for (j, x) in f.labels().iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write!(out, "{x}").unwrap();
        }
        out.push('\n');
    }
    out
}
