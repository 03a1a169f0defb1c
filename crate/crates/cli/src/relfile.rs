//! Relation files: one basis row of `U` per line, 12 scalar tokens each.
//! Lines starting with `#` and blank lines are skipped.

use std::fmt;

use selfdual_core::{Matrix, RelationSpace, Scalar};

pub const MAX_ROWS: usize = 12;
const WIDTH: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFile {
    pub rows: Vec<Vec<Scalar>>,
}

impl RelationFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut rows = Vec::new();
        let mut last_line = 1;
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            last_line = lineno;
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if rows.len() == MAX_ROWS {
                return Err(ParseError {
                    line: lineno,
                    column: 1,
                    message: format!("more than {MAX_ROWS} rows"),
                });
            }
            rows.push(parse_row(line, lineno)?);
        }
        if rows.is_empty() {
            return Err(ParseError {
                line: last_line,
                column: 1,
                message: "no rows".into(),
            });
        }
        Ok(RelationFile { rows })
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(WIDTH, self.rows.clone()).expect("rows have 12 entries")
    }

    pub fn space(&self) -> RelationSpace {
        RelationSpace::from_matrix(&self.matrix()).expect("12 columns")
    }
}

fn parse_row(line: &str, lineno: usize) -> Result<Vec<Scalar>, ParseError> {
    let mut row = Vec::with_capacity(WIDTH);
    let mut column = 0;
    let mut start_col = 0;
    let mut token = String::new();
    let flush =
        |token: &mut String, start_col: usize, row: &mut Vec<Scalar>| -> Result<(), ParseError> {
            if token.is_empty() {
                return Ok(());
            }
            if row.len() == WIDTH {
                return Err(ParseError {
                    line: lineno,
                    column: start_col,
                    message: format!("more than {WIDTH} entries"),
                });
            }
            let value = token.parse::<Scalar>().map_err(|_| ParseError {
                line: lineno,
                column: start_col,
                message: format!("invalid scalar {token:?}"),
            })?;
            row.push(value);
            token.clear();
            Ok(())
        };
    for c in line.chars() {
        column += 1;
        if c.is_whitespace() {
            flush(&mut token, start_col, &mut row)?;
        } else {
            if token.is_empty() {
                start_col = column;
            }
            token.push(c);
        }
    }
    flush(&mut token, start_col, &mut row)?;
    if row.len() != WIDTH {
        return Err(ParseError {
            line: lineno,
            column: column.max(1),
            message: format!("expected {WIDTH} entries, found {}", row.len()),
        });
    }
    Ok(row)
}

/// Canonical text form: a comment header, then one row per line.
pub fn format_rows(header: &str, m: &Matrix) -> String {
    let mut out = String::new();
    for line in header.lines() {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for row in m.row_iter() {
        let tokens: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}
