//! Plain-text problem files describing a group action and primary
//! invariants.
//!
//! Format: named sections introduced by a header keyword followed by a
//! colon. Content may follow the header on the same line or on
//! subsequent lines, until the next header. `#` starts a comment, blank
//! lines are ignored.
//!
//! ```text
//! variables: x1, x2
//! order: degrevlex
//! generators:
//!   0, 1; 1, 0
//! primaries:
//!   x1 + x2
//!   x1 * x2
//! ```
//!
//! Each line of `generators:` is one square matrix, rows separated by
//! semicolons, entries by commas. The matrix acts on variables by
//! substitution: variable j is sent to the linear form given by column j.

use crate::error::{Error, Result};
use crate::group::{GroupRepresentation, QMatrix};
use crate::monomial::MonomialOrder;
use crate::parser::{parse_polynomial, parse_rational};
use crate::poly::Polynomial;

#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub variables: Vec<String>,
    pub order: MonomialOrder,
    pub generators: Vec<QMatrix>,
    pub primaries: Vec<Polynomial>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Variables,
    Order,
    Generators,
    Primaries,
}

fn problem_err(line_no: usize, msg: impl Into<String>) -> Error {
    Error::Problem(format!("line {}: {}", line_no, msg.into()))
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<ProblemFile> {
        let mut variables: Vec<String> = Vec::new();
        let mut order: Option<MonomialOrder> = None;
        let mut matrix_lines: Vec<(usize, String)> = Vec::new();
        let mut primary_lines: Vec<(usize, String)> = Vec::new();
        let mut section = Section::None;

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (new_section, rest) = match line.split_once(':') {
                Some((head, rest)) => match head.trim().to_ascii_lowercase().as_str() {
                    "variables" => (Some(Section::Variables), rest.trim().to_string()),
                    "order" => (Some(Section::Order), rest.trim().to_string()),
                    "generators" => (Some(Section::Generators), rest.trim().to_string()),
                    "primaries" => (Some(Section::Primaries), rest.trim().to_string()),
                    other => {
                        return Err(problem_err(line_no, format!("unknown section `{other}`")))
                    }
                },
                None => (None, line.to_string()),
            };
            if let Some(s) = new_section {
                section = s;
                if rest.is_empty() {
                    continue;
                }
            }
            let content = if new_section.is_some() {
                rest
            } else {
                line.to_string()
            };
            match section {
                Section::None => {
                    return Err(problem_err(line_no, "content before any section header"))
                }
                Section::Variables => {
                    for name in content.split(',') {
                        let name = name.trim();
                        if name.is_empty() {
                            return Err(problem_err(line_no, "empty variable name"));
                        }
                        if variables.iter().any(|v| v == name) {
                            return Err(problem_err(
                                line_no,
                                format!("duplicate variable `{name}`"),
                            ));
                        }
                        variables.push(name.to_string());
                    }
                }
                Section::Order => {
                    if order.is_some() {
                        return Err(problem_err(line_no, "order specified twice"));
                    }
                    order = Some(MonomialOrder::from_name(&content).ok_or_else(|| {
                        problem_err(
                            line_no,
                            format!(
                                "unknown order `{content}` (expected degrevlex, deglex or lex)"
                            ),
                        )
                    })?);
                }
                Section::Generators => matrix_lines.push((line_no, content)),
                Section::Primaries => primary_lines.push((line_no, content)),
            }
        }

        if variables.is_empty() {
            return Err(Error::Problem("missing `variables:` section".into()));
        }
        let n = variables.len();
        let order = order.unwrap_or(MonomialOrder::DegRevLex);

        let mut generators = Vec::new();
        for (line_no, text) in matrix_lines {
            generators.push(parse_matrix(&text, n).map_err(|e| match e {
                Error::Problem(m) => problem_err(line_no, m),
                other => other,
            })?);
        }
        if generators.is_empty() {
            return Err(Error::Problem("missing `generators:` section".into()));
        }

        let mut primaries = Vec::new();
        for (line_no, text) in primary_lines {
            let p = parse_polynomial(&text, &variables, order).map_err(|e| {
                problem_err(line_no, format!("in primary invariant: {e}"))
            })?;
            primaries.push(p);
        }

        Ok(ProblemFile {
            variables,
            order,
            generators,
            primaries,
        })
    }

    pub fn close_group(&self) -> Result<GroupRepresentation> {
        GroupRepresentation::close(self.generators.clone())
    }
}

fn parse_matrix(text: &str, n: usize) -> Result<QMatrix> {
    let rows: Vec<&str> = text.split(';').collect();
    if rows.len() != n {
        return Err(Error::Problem(format!(
            "matrix has {} rows, expected {n}",
            rows.len()
        )));
    }
    let mut entries = Vec::with_capacity(n * n);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != n {
            return Err(Error::Problem(format!(
                "matrix row has {} entries, expected {n}",
                cells.len()
            )));
        }
        for cell in cells {
            entries.push(parse_rational(cell.trim()).map_err(|e| {
                Error::Problem(format!("bad matrix entry `{}`: {e}", cell.trim()))
            })?);
        }
    }
    QMatrix::new(n, entries)
}
