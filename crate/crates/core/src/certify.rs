//! Certificates for strong connectability and its absence.
//!
//! A yes-certificate is a strong extension: `+ u v` lines for the added
//! edges, optionally followed by the resulting digraph in edge-list format.
//! A no-certificate is a complete dicut, written `dicut: {v1, v2, ...}`.
//! Both can be checked in polynomial time without trusting the producer.

use std::fmt;

use crate::dicut::{find_complete_dicut, verify_complete_dicut, DicutCertificate};
use crate::error::{Error, ParseError};
use crate::extend::{extend, ExtensionPlan};
use crate::graph::{is_strong, StrictDigraph};
use crate::parse::{content_lines, parse_edge_list_lines, parse_index};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Extension {
        added: Vec<(usize, usize)>,
        resulting: Option<StrictDigraph>,
    },
    Dicut(DicutCertificate),
}

impl From<ExtensionPlan> for Certificate {
    fn from(plan: ExtensionPlan) -> Self {
        Certificate::Extension {
            added: plan.added,
            resulting: Some(plan.resulting),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::Extension { added, resulting } => {
                for (u, v) in added {
                    writeln!(f, "+ {u} {v}")?;
                }
                if let Some(g) = resulting {
                    f.write_str(&g.to_edge_list())?;
                }
                Ok(())
            }
            Certificate::Dicut(c) => writeln!(f, "{c}"),
        }
    }
}

/// Produces whichever certificate applies to `g`.
pub fn certify(g: &StrictDigraph) -> Result<Certificate, Error> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    match find_complete_dicut(g) {
        Some(cert) => Ok(Certificate::Dicut(cert)),
        None => Ok(extend(g)?.into()),
    }
}

/// Outcome of checking a certificate against a digraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// Checks a certificate against `g`.
pub fn verify_certificate(g: &StrictDigraph, cert: &Certificate) -> Verdict {
    match cert {
        Certificate::Dicut(c) => match verify_complete_dicut(g, c) {
            Ok(true) => Verdict::Valid,
            Ok(false) => Verdict::Invalid(format!("{c} is not a complete dicut")),
            Err(e) => Verdict::Invalid(e.to_string()),
        },
        Certificate::Extension { added, resulting } => {
            let mut h = g.clone();
            for &(u, v) in added {
                if h.has_edge(u, v) {
                    return Verdict::Invalid(format!("added edge {u} -> {v} already present"));
                }
                if let Err(e) = h.add_edge(u, v) {
                    return Verdict::Invalid(format!("added edge {u} -> {v}: {e}"));
                }
            }
            if let Some(r) = resulting {
                if *r != h {
                    return Verdict::Invalid(
                        "resulting digraph does not match input plus added edges".into(),
                    );
                }
            }
            if is_strong(&h) {
                Verdict::Valid
            } else {
                Verdict::Invalid("extended digraph is not strongly connected".into())
            }
        }
    }
}

fn parse_dicut_line(line: usize, content: &str) -> Result<DicutCertificate, ParseError> {
    let malformed = || ParseError::Malformed {
        line,
        content: content.to_string(),
    };
    let body = content
        .strip_prefix("dicut:")
        .ok_or_else(malformed)?
        .trim();
    let inner = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .ok_or_else(malformed)?
        .trim();
    if inner.is_empty() {
        return Ok(DicutCertificate::new(Vec::new()));
    }
    let x = inner
        .split(',')
        .map(|t| parse_index(t.trim()).ok_or_else(malformed))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DicutCertificate::new(x))
}

fn parse_added_line(line: usize, content: &str) -> Result<(usize, usize), ParseError> {
    let mut tokens = content.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next(), tokens.next()) {
        (Some("+"), Some(a), Some(b), None) => parse_index(a).zip(parse_index(b)),
        _ => None,
    }
    .ok_or_else(|| ParseError::Malformed {
        line,
        content: content.to_string(),
    })
}

/// Parses either certificate form.
pub fn parse_certificate(text: &str) -> Result<Certificate, ParseError> {
    let mut lines = content_lines(text).peekable();
    let &(first_line, first) = lines.peek().ok_or(ParseError::EmptyCertificate)?;
    if first.starts_with("dicut") {
        let cert = parse_dicut_line(first_line, first)?;
        lines.next();
        if let Some((line, content)) = lines.next() {
            return Err(ParseError::Malformed {
                line,
                content: content.to_string(),
            });
        }
        return Ok(Certificate::Dicut(cert));
    }
    let mut added = Vec::new();
    while let Some(&(line, content)) = lines.peek() {
        if !content.starts_with('+') {
            break;
        }
        added.push(parse_added_line(line, content)?);
        lines.next();
    }
    let resulting = if lines.peek().is_some() {
        Some(parse_edge_list_lines(lines)?)
    } else {
        None
    };
    Ok(Certificate::Extension { added, resulting })
}
