//! Plain-text edge-list format and DOT export.
//!
//! Edge-list grammar: the first non-comment line is `n m`, followed by `m`
//! lines `u v` (0-indexed). Lines starting with `#` and blank lines are
//! ignored wherever they appear.

use thiserror::Error;

use crate::digraph::{Digraph, DigraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("line {line}: expected two whitespace-separated integers, got `{text}`")]
    BadLine { line: usize, text: String },
    #[error("line {line}: `{token}` is not a valid integer")]
    BadInteger { line: usize, token: String },
    #[error("header declares {declared} arcs but {found} arc lines found")]
    ArcCountMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut nums = Vec::with_capacity(2);
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(ParseError::BadLine {
            line,
            text: text.to_string(),
        });
    }
    for token in tokens {
        nums.push(token.parse::<usize>().map_err(|_| ParseError::BadInteger {
            line,
            token: token.to_string(),
        })?);
    }
    Ok((nums[0], nums[1]))
}

/// Shared reader for both directed and undirected edge lists: returns the
/// declared vertex count and the raw pairs.
pub(crate) fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize)>), ParseError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = parse_pair(line, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line, text) in lines {
        pairs.push(parse_pair(line, text)?);
    }
    if pairs.len() != m {
        return Err(ParseError::ArcCountMismatch {
            declared: m,
            found: pairs.len(),
        });
    }
    Ok((n, pairs))
}

pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let (n, arcs) = parse_pairs(text)?;
    Ok(Digraph::new(n, arcs)?)
}

/// Canonical edge-list text: header plus one arc per line in lexicographic
/// order. `parse_digraph(serialize_digraph(d)) == d` for every digraph.
pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    serialize_digraph_into(&mut out, d, None);
    out
}

/// Edge-list text with leading comment lines carrying vertex labels.
pub fn serialize_digraph_labeled(d: &Digraph, labels: &[String]) -> String {
    let mut out = String::new();
    serialize_digraph_into(&mut out, d, Some(labels));
    out
}

fn serialize_digraph_into(out: &mut String, d: &Digraph, labels: Option<&[String]>) {
    use std::fmt::Write;
    if let Some(labels) = labels {
        let map = labels
            .iter()
            .enumerate()
            .map(|(i, l)| format!("{i}={l}"))
            .collect::<Vec<_>>()
            .join(" ");
        writeln!(out, "# labels: {map}").unwrap();
    }
    writeln!(out, "{} {}", d.n(), d.arc_count()).unwrap();
    for &(u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
}

/// DOT digraph with optional vertex labels.
pub fn to_dot(d: &Digraph, labels: Option<&[String]>) -> String {
    use std::fmt::Write;
    let mut out = String::from("digraph {\n");
    if let Some(labels) = labels {
        for (i, label) in labels.iter().enumerate() {
            writeln!(out, "  {i} [label=\"{label}\"];").unwrap();
        }
    }
    for &(u, v) in d.arcs() {
        writeln!(out, "  {u} -> {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_triangle() {
        let d = parse_digraph("3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(d.arcs(), &[(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let d = parse_digraph("# a path\n2 1\n\n0 1\n# trailing note\n").unwrap();
        assert_eq!(d.n(), 2);
        assert_eq!(d.arcs(), &[(0, 1)]);
    }

    #[test]
    fn serializes_wheel4_in_lexicographic_order() {
        let d = crate::digraph::tests::wheel4_a();
        assert_eq!(
            serialize_digraph(&d),
            "5 8\n0 1\n0 3\n1 2\n1 4\n2 0\n3 2\n3 4\n4 0\n"
        );
    }

    #[test]
    fn round_trips_serialized_form() {
        let d = crate::digraph::tests::wheel4_a();
        assert_eq!(parse_digraph(&serialize_digraph(&d)).unwrap(), d);
    }

    #[test]
    fn labeled_form_round_trips_too() {
        let d = Digraph::directed_cycle(3);
        let labels = vec!["a".into(), "b".into(), "c".into()];
        let text = serialize_digraph_labeled(&d, &labels);
        assert!(text.starts_with("# labels: 0=a 1=b 2=c\n"));
        assert_eq!(parse_digraph(&text).unwrap(), d);
    }

    #[test]
    fn missing_header_is_an_error() {
        assert_eq!(parse_digraph("# only comments\n"), Err(ParseError::MissingHeader));
    }

    #[test]
    fn non_integer_token_is_an_error() {
        let err = parse_digraph("3 1\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::BadInteger {
                line: 2,
                token: "x".into()
            }
        );
    }

    #[test]
    fn wrong_token_count_is_an_error() {
        let err = parse_digraph("3 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::BadLine { line: 2, .. }));
    }

    #[test]
    fn arc_count_mismatch_is_an_error() {
        assert_eq!(
            parse_digraph("3 2\n0 1\n"),
            Err(ParseError::ArcCountMismatch {
                declared: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_digraph("3 1\n0 1\n1 2\n"),
            Err(ParseError::ArcCountMismatch {
                declared: 1,
                found: 2
            })
        );
    }

    #[test]
    fn digraph_invariant_violations_propagate() {
        let err = parse_digraph("2 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err, ParseError::Digraph(DigraphError::OppositeArcs(0, 1)));
    }

    #[test]
    fn dot_export_lists_labels_then_arcs() {
        let d = Digraph::directed_cycle(3);
        let labels = vec!["c".to_string(), "v1".to_string(), "v2".to_string()];
        let dot = to_dot(&d, Some(&labels));
        assert!(dot.starts_with("digraph {\n"));
        assert!(dot.contains("  0 [label=\"c\"];\n"));
        assert!(dot.contains("  2 -> 0;\n"));
        assert!(dot.ends_with("}\n"));
    }
}
