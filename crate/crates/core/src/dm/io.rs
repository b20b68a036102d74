//! The `.dm` text format.
//!
//! ```text
//! ground: e1 e2 e3
//! feasible: e1
//! feasible: e1 e2 e3
//! ```
//!
//! `feasible:` with nothing after it is the empty set. `#` starts a comment.

use thiserror::Error;

use super::{DeltaMatroid, DmError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error(transparent)]
    Dm(#[from] DmError),
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses a `.dm` document.
pub fn parse_dm(text: &str) -> Result<DeltaMatroid, ParseError> {
    let mut ground: Option<Vec<String>> = None;
    let mut feasible: Vec<Vec<String>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let (key, rest) = match line.find(':') {
            Some(p) => (line[..p].trim(), &line[p + 1..]),
            None => return Err(syntax(line_no, 1, "expected `ground:` or `feasible:`")),
        };
        let items: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        match key {
            "ground" => {
                if ground.is_some() {
                    return Err(syntax(line_no, 1, "duplicate `ground:` line"));
                }
                ground = Some(items);
            }
            "feasible" => {
                if ground.is_none() {
                    return Err(syntax(line_no, 1, "`feasible:` before `ground:`"));
                }
                feasible.push(items);
            }
            other => {
                return Err(syntax(line_no, 1, format!("unknown directive `{other}`")));
            }
        }
    }
    let ground = ground.ok_or_else(|| syntax(1, 1, "missing `ground:` line"))?;
    if feasible.is_empty() {
        return Err(ParseError::Dm(DmError::EmptyFeasibleFamily));
    }
    let sets: Vec<Vec<&str>> = feasible
        .iter()
        .map(|s| s.iter().map(String::as_str).collect())
        .collect();
    DeltaMatroid::new(ground, sets.iter().map(Vec::as_slice)).map_err(ParseError::Dm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_canonical() {
        let d = DeltaMatroid::new(["b", "a"], [&["a"][..], &[][..], &["a", "b"][..]]).unwrap();
        let text = d.to_dm_string();
        assert_eq!(text, "ground: a b\nfeasible:\nfeasible: a\nfeasible: a b\n");
        let back = parse_dm(&text).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn comments_and_blank_lines_ignored() {
        let d = parse_dm("# header\nground: x y\n\nfeasible: x # tail\n").unwrap();
        assert_eq!(d.ground().labels(), &["x", "y"]);
        assert_eq!(d.feasible(), &[0b01]);
    }

    #[test]
    fn errors_carry_position() {
        match parse_dm("bogus x y\n") {
            Err(ParseError::Syntax { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_dm("feasible: x\nground: x\n") {
            Err(ParseError::Syntax { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            parse_dm("ground: x\n"),
            Err(ParseError::Dm(DmError::EmptyFeasibleFamily))
        );
        assert!(matches!(parse_dm("ground: x\nfeasible: z\n"), Err(_)));
    }
}
