//! Text formats: the edge-list format and the dice file format.
//!
//! Edge list: a `n <N>` header, then one `<u> <v>` edge per line. Dice file:
//! one die per line as whitespace-separated integers. In both formats blank
//! lines are skipped and a line whose first non-blank character is `#` is a
//! comment.

use std::collections::HashSet;

use crate::dice::DiceSet;
use crate::error::ParseError;
use crate::graph::StrictDigraph;

/// Largest vertex count accepted in an edge-list header.
pub const MAX_VERTICES: usize = 1_000_000;

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_index(token: &str) -> Option<usize> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

fn malformed(line: usize, content: &str) -> ParseError {
    ParseError::Malformed {
        line,
        content: content.to_string(),
    }
}

/// Parses the `n <N>` header line.
pub(crate) fn parse_header(line: usize, content: &str) -> Result<usize, ParseError> {
    let mut tokens = content.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some("n"), Some(count), None) => {
            let n = parse_index(count).ok_or_else(|| malformed(line, content))?;
            if n > MAX_VERTICES {
                return Err(ParseError::TooManyVertices {
                    line,
                    n,
                    max: MAX_VERTICES,
                });
            }
            Ok(n)
        }
        _ => Err(ParseError::MissingHeader),
    }
}

/// Parses an edge line into the digraph. The line must hold exactly two indices.
pub(crate) fn parse_edge_line(
    g: &mut StrictDigraph,
    line: usize,
    content: &str,
) -> Result<(), ParseError> {
    let mut tokens = content.split_whitespace();
    let (u, v) = match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(a), Some(b), None) => (
            parse_index(a).ok_or_else(|| malformed(line, content))?,
            parse_index(b).ok_or_else(|| malformed(line, content))?,
        ),
        _ => return Err(malformed(line, content)),
    };
    g.add_edge(u, v)
        .map(|_| ())
        .map_err(|e| ParseError::from_graph(line, e))
}

/// Parses the edge-list format. Repeated edges are accepted once.
pub fn parse_edge_list(text: &str) -> Result<StrictDigraph, ParseError> {
    parse_edge_list_lines(content_lines(text))
}

pub(crate) fn parse_edge_list_lines<'a, I>(mut lines: I) -> Result<StrictDigraph, ParseError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let n = parse_header(line, header)?;
    let mut g = StrictDigraph::new(n);
    for (line, content) in lines {
        parse_edge_line(&mut g, line, content)?;
    }
    Ok(g)
}

/// Parses a dice file into a validated [`DiceSet`].
pub fn parse_dice(text: &str) -> Result<DiceSet, ParseError> {
    let mut dice: Vec<Vec<i64>> = Vec::new();
    let mut seen = HashSet::new();
    for (line, content) in content_lines(text) {
        let mut die = Vec::new();
        for token in content.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| malformed(line, content))?;
            if !seen.insert(value) {
                return Err(ParseError::DuplicateFace { line, value });
            }
            die.push(value);
        }
        if let Some(first) = dice.first() {
            if die.len() != first.len() {
                return Err(ParseError::DieSize {
                    line,
                    found: die.len(),
                    expected: first.len(),
                });
            }
        }
        dice.push(die);
    }
    if dice.is_empty() {
        return Err(ParseError::NoDice);
    }
    // Sizes and disjointness were checked above.
    Ok(DiceSet::new(dice).expect("validated dice"))
}
