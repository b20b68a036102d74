//! The `.rg` text format.
//!
//! ```text
//! # an orientable loop and a bridge
//! vertex u: h1 h2 h3
//! vertex v: h4
//! edge a: h1 h2 +
//! edge b: h3 h4 +
//! ```
//!
//! Rotations are cyclic, read clockwise. The canonical serializer sorts
//! vertices and edges by label and starts each rotation at its
//! lexicographically least half-edge.

use thiserror::Error;

use super::{RibbonGraph, RibbonError, Sign};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RgParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error(transparent)]
    Ribbon(#[from] RibbonError),
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> RgParseError {
    RgParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses an `.rg` document.
pub fn parse_rg(text: &str) -> Result<RibbonGraph, RgParseError> {
    let mut vertices: Vec<(String, Vec<String>)> = Vec::new();
    let mut edges: Vec<(String, String, String, Sign)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let colon = line
            .find(':')
            .ok_or_else(|| syntax(line_no, 1, "expected `vertex <id>:` or `edge <label>:`"))?;
        let head: Vec<&str> = line[..colon].split_whitespace().collect();
        let tail: Vec<&str> = line[colon + 1..].split_whitespace().collect();
        match head.as_slice() {
            ["vertex", id] => {
                vertices.push((id.to_string(), tail.iter().map(|s| s.to_string()).collect()));
            }
            ["edge", label] => {
                if tail.len() != 3 {
                    return Err(syntax(
                        line_no,
                        colon + 2,
                        "edge lines need two half-edges and a sign",
                    ));
                }
                let sign = match tail[2] {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => {
                        return Err(syntax(
                            line_no,
                            colon + 2,
                            format!("sign must be `+` or `-`, got `{other}`"),
                        ))
                    }
                };
                edges.push((label.to_string(), tail[0].to_string(), tail[1].to_string(), sign));
            }
            _ => {
                return Err(syntax(line_no, 1, "expected `vertex <id>:` or `edge <label>:`"));
            }
        }
    }
    Ok(RibbonGraph::build(vertices, edges)?)
}

impl RibbonGraph {
    /// Canonical `.rg` serialization.
    pub fn to_rg_string(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str("vertex ");
            out.push_str(&v.id);
            out.push(':');
            for &h in &v.rotation {
                out.push(' ');
                out.push_str(&self.half_ids[h as usize]);
            }
            out.push('\n');
        }
        for e in &self.edges {
            out.push_str("edge ");
            out.push_str(&e.label);
            out.push_str(": ");
            out.push_str(&self.half_ids[e.a as usize]);
            out.push(' ');
            out.push_str(&self.half_ids[e.b as usize]);
            out.push(' ');
            out.push(match e.sign {
                Sign::Plus => '+',
                Sign::Minus => '-',
            });
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_serialize_roundtrip() {
        let text = "vertex u: h1 h2 h3\nvertex v: h4\nedge a: h1 h2 +\nedge b: h3 h4 -\n";
        let g = parse_rg(text).unwrap();
        assert_eq!(g.to_rg_string(), text);
        let again = parse_rg(&g.to_rg_string()).unwrap();
        assert_eq!(again, g);
    }

    #[test]
    fn rotations_canonicalize_to_least_start() {
        let g = parse_rg("vertex u: h2 h3 h1\nedge a: h1 h2 +\nedge b: h3 h4 +\nvertex v: h4\n")
            .unwrap();
        // Cyclic order h2 h3 h1 rotates to h1 h2 h3.
        assert_eq!(
            g.to_rg_string(),
            "vertex u: h1 h2 h3\nvertex v: h4\nedge a: h1 h2 +\nedge b: h3 h4 +\n"
        );
    }

    #[test]
    fn errors_carry_position() {
        assert!(matches!(
            parse_rg("vertex u h1\n"),
            Err(RgParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_rg("edge a: h1 h2 ?\nvertex u: h1 h2\n"),
            Err(RgParseError::Syntax { line: 1, .. })
        ));
        assert_eq!(
            parse_rg("vertex u: h1\n"),
            Err(RgParseError::Ribbon(RibbonError::DanglingHalfEdge(
                "h1".into()
            )))
        );
        assert_eq!(
            parse_rg("vertex u: h1 h1\nedge a: h1 h1 +\n"),
            Err(RgParseError::Ribbon(RibbonError::MalformedRotation(
                "half-edge `h1` appears twice in the rotations".into()
            )))
        );
    }
}
