//! The sign-matrix file format.
//!
//! One line per row, characters `+`, `-`, `0`, with optional single spaces
//! between them. An optional first line `rows cols` declares the
//! dimensions; when present it must match the body. The serializer emits
//! the compact body-only form, so `parse(serialize(m)) == m` for every
//! matrix.

use std::fmt;

use orthokit::SignMatrix;

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return None;
    }
    let rows: usize = tokens[0].parse().ok()?;
    let cols: usize = tokens[1].parse().ok()?;
    if rows >= 1 && cols >= 1 {
        Some((rows, cols))
    } else {
        None
    }
}

fn parse_body_line(line: &str, line_no: usize) -> Result<Vec<i8>, ParseError> {
    let mut entries = Vec::new();
    let mut after_space = false;
    for (i, ch) in line.chars().enumerate() {
        let col = i + 1;
        match ch {
            '+' => {
                entries.push(1);
                after_space = false;
            }
            '-' => {
                entries.push(-1);
                after_space = false;
            }
            '0' => {
                entries.push(0);
                after_space = false;
            }
            ' ' => {
                if after_space || entries.is_empty() {
                    return Err(ParseError::new(line_no, col, "unexpected space"));
                }
                after_space = true;
            }
            other => {
                return Err(ParseError::new(
                    line_no,
                    col,
                    format!("invalid character {other:?}, expected '+', '-', '0', or space"),
                ));
            }
        }
    }
    if entries.is_empty() {
        return Err(ParseError::new(line_no, 1, "empty line"));
    }
    Ok(entries)
}

/// Parses the text form of a sign matrix.
pub fn parse_sign_matrix(text: &str) -> Result<SignMatrix, ParseError> {
    let mut lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .collect();
    while matches!(lines.last(), Some((_, l)) if l.is_empty()) {
        lines.pop();
    }
    if lines.is_empty() {
        return Err(ParseError::new(1, 1, "empty input"));
    }

    let mut header = None;
    let mut body_start = 0;
    if let Some(dims) = parse_header(lines[0].1) {
        header = Some(dims);
        body_start = 1;
    }

    let mut rows: Vec<Vec<i8>> = Vec::new();
    let mut width = None;
    for &(line_no, line) in &lines[body_start..] {
        if line.is_empty() {
            return Err(ParseError::new(line_no, 1, "empty line"));
        }
        let entries = parse_body_line(line, line_no)?;
        match width {
            None => width = Some(entries.len()),
            Some(w) if w != entries.len() => {
                return Err(ParseError::new(
                    line_no,
                    1,
                    format!("row has {} entries, expected {w}", entries.len()),
                ));
            }
            _ => {}
        }
        rows.push(entries);
    }
    if rows.is_empty() {
        return Err(ParseError::new(lines[0].0, 1, "header without matrix body"));
    }

    if let Some((hr, hc)) = header {
        if hr != rows.len() || hc != width.unwrap() {
            return Err(ParseError::new(
                1,
                1,
                format!(
                    "header declares {hr}x{hc} but the body is {}x{}",
                    rows.len(),
                    width.unwrap()
                ),
            ));
        }
    }

    SignMatrix::from_rows(&rows).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Serializes a matrix in the compact body-only form, one `+`/`-`/`0`
/// character per entry and a newline after each row.
pub fn serialize_sign_matrix(m: &SignMatrix) -> String {
    let mut out = String::with_capacity(m.rows() * (m.cols() + 1));
    for r in 0..m.rows() {
        for &v in m.row(r) {
            out.push(match v {
                1 => '+',
                -1 => '-',
                _ => '0',
            });
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_compact_and_spaced_forms() {
        let compact = parse_sign_matrix("++++\n+-+-\n++--\n+--+\n").unwrap();
        let spaced = parse_sign_matrix("+ + + +\n+ - + -\n+ + - -\n+ - - +\n").unwrap();
        assert_eq!(compact, spaced);
        assert_eq!(compact, orthokit::sylvester(2).unwrap());
    }

    #[test]
    fn parses_optional_header() {
        let with_header = parse_sign_matrix("2 4\n+++-\n+--+\n").unwrap();
        let without = parse_sign_matrix("+++-\n+--+\n").unwrap();
        assert_eq!(with_header, without);
    }

    #[test]
    fn header_mismatch_is_an_error() {
        let err = parse_sign_matrix("3 4\n+++-\n+--+\n").unwrap_err();
        assert!(err.message.contains("header declares 3x4"));
    }

    #[test]
    fn zeros_parse_as_body_when_not_a_valid_header() {
        // "0 0" cannot be a header (dimensions must be positive), so it is
        // a two-entry body row
        let m = parse_sign_matrix("0 0\n+ -\n").unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.row(0), &[0, 0]);
    }

    #[test]
    fn invalid_character_is_located() {
        let err = parse_sign_matrix("++\n+x\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 2));
        assert!(err.message.contains("invalid character"));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let err = parse_sign_matrix("++\n+++\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("expected 2"));
    }

    #[test]
    fn double_space_is_rejected() {
        let err = parse_sign_matrix("+  -\n").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(parse_sign_matrix("").is_err());
        assert!(parse_sign_matrix("\n\n").is_err());
    }

    #[test]
    fn serializer_is_compact() {
        let m = orthokit::sylvester(1).unwrap();
        assert_eq!(serialize_sign_matrix(&m), "++\n+-\n");
    }
}
