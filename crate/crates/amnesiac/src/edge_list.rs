//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated tokens. Tokens are
//! non-negative integers or bare-word labels; blank lines and lines starting
//! with `#` are skipped. Nodes get dense ids in order of first appearance.
//! When that renames any token (a label, or a number that does not equal its
//! assigned id) the graph keeps the original tokens as labels.

use std::collections::HashMap;
use std::fmt::Write as _;

use amnesiac_core::Graph;

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: self-loop on {token:?}")]
    SelfLoop { line: usize, token: String },

    #[error("line {line}: expected 2 tokens, found {found}")]
    TokenCount { line: usize, found: usize },

    #[error("edge list contains no edges")]
    Empty,
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut ids: HashMap<&str, usize> = HashMap::new();
    let mut names: Vec<&str> = Vec::new();
    let mut edges = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(ParseError::TokenCount { line, found: tokens.len() });
        };
        if u == v {
            return Err(ParseError::SelfLoop { line, token: u.to_owned() });
        }
        let mut id = |token| {
            *ids.entry(token).or_insert_with(|| {
                names.push(token);
                names.len() - 1
            })
        };
        let (a, b) = (id(u), id(v));
        edges.push((a, b));
    }
    if names.is_empty() {
        return Err(ParseError::Empty);
    }
    let graph = Graph::new(names.len(), edges).expect("ids are dense and loops were rejected");
    let renamed = names.iter().enumerate().any(|(id, name)| *name != id.to_string());
    Ok(if renamed {
        graph
            .with_labels(names.iter().map(|s| s.to_string()).collect())
            .expect("one label per node")
    } else {
        graph
    })
}

/// Renders `g` with a `# n=.. m=..` header and one edge per line, using
/// labels when the graph has them.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("# n={} m={}\n", g.node_count(), g.edge_count());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} {}", g.display_name(u), g.display_name(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    use amnesiac_core::graph::NamedGraph;
    use proptest::prelude::*;

    #[test]
    fn numeric_path() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 2));
        assert!(g.labels().is_none());
    }

    #[test]
    fn labeled_triangle() {
        let g = parse_edge_list("a b\nb c\nc a").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 3));
        assert_eq!(g.resolve("b"), Some(1));
        assert_eq!(g.labels().unwrap(), &["a", "b", "c"]);
    }

    #[test]
    fn comments_blanks_and_duplicates() {
        let g = parse_edge_list("# header\n\n  # indented comment\n0 1\n1 0\n0 1\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn renumbered_integers_keep_labels() {
        let g = parse_edge_list("5 7\n7 9").unwrap();
        assert_eq!(g.labels().unwrap(), &["5", "7", "9"]);
        assert_eq!(g.resolve("9"), Some(2));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list("0 0").unwrap_err(),
            ParseError::SelfLoop { line: 1, token: "0".into() }
        );
        assert_eq!(
            parse_edge_list("0 1\n# c\n1 2 3").unwrap_err(),
            ParseError::TokenCount { line: 3, found: 3 }
        );
        assert_eq!(parse_edge_list("1\n").unwrap_err(), ParseError::TokenCount { line: 1, found: 1 });
        assert_eq!(parse_edge_list("# nothing\n").unwrap_err(), ParseError::Empty);
    }

    #[test]
    fn render_has_header() {
        let g = Graph::named(NamedGraph::Path(3)).unwrap();
        assert_eq!(render_edge_list(&g), "# n=3 m=2\n0 1\n1 2\n");
    }

    fn named_edges(g: &Graph) -> BTreeSet<(String, String)> {
        g.edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (g.display_name(u), g.display_name(v));
                if a < b { (a, b) } else { (b, a) }
            })
            .collect()
    }

    proptest! {
        #[test]
        fn render_then_parse_preserves_named_edges(n in 2usize..12, p in 0.2f64..0.9, seed: u64) {
            let g = Graph::random(n, p, seed).unwrap();
            prop_assume!((0..n).all(|v| g.degree(v) > 0));
            let back = parse_edge_list(&render_edge_list(&g)).unwrap();
            prop_assert_eq!(back.node_count(), g.node_count());
            prop_assert_eq!(named_edges(&back), named_edges(&g));
            // A second pass is a fixed point.
            let again = parse_edge_list(&render_edge_list(&back)).unwrap();
            prop_assert_eq!(named_edges(&again), named_edges(&g));
        }
    }
}
