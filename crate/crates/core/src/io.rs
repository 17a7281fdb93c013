//! Edge-list reading and writing.
//!
//! The format is one `u v` pair of non-negative integers per line, separated
//! by whitespace. Blank lines and anything after `#` are ignored. Node ids
//! need not be contiguous: the reader relabels them densely in increasing
//! order and reports the mapping.
//!
//! A leading `# nodes N` line fixes the node count instead, so isolated
//! nodes survive a round trip. The writer always emits it.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReadReport {
    pub lines: usize,
    pub self_loops: usize,
    pub duplicates: usize,
    /// `original_ids[k]` is the id that node `k` had in the file.
    pub original_ids: Vec<u64>,
}

impl ReadReport {
    pub fn relabeled(&self) -> bool {
        self.original_ids
            .iter()
            .enumerate()
            .any(|(k, &id)| id != k as u64)
    }
}

pub fn parse_edge_list(text: &str) -> Result<(Graph, ReadReport)> {
    let mut raw = Vec::new();
    let mut report = ReadReport::default();
    let mut declared: Option<u64> = None;
    for (lineno, line) in text.lines().enumerate() {
        if raw.is_empty() && declared.is_none() {
            if let Some(rest) = line.trim().strip_prefix("# nodes ") {
                declared = Some(rest.trim().parse().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    message: format!("malformed node count {rest:?}"),
                })?);
                continue;
            }
        }
        let body = line.split('#').next().unwrap_or("");
        let mut fields = body.split_whitespace();
        let Some(first) = fields.next() else { continue };
        let parse = |s: &str| {
            s.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno + 1,
                message: format!("expected a non-negative integer node id, found {s:?}"),
            })
        };
        let u = parse(first)?;
        let v = match fields.next() {
            Some(s) => parse(s)?,
            None => {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: "expected two node ids".into(),
                })
            }
        };
        if fields.next().is_some() {
            return Err(Error::Parse {
                line: lineno + 1,
                message: "expected exactly two node ids".into(),
            });
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(Error::Parse {
                    line: lineno + 1,
                    message: format!("node id exceeds the declared node count {n}"),
                });
            }
        }
        report.lines += 1;
        raw.push((u, v));
    }

    let ids: Vec<u64> = match declared {
        Some(n) => (0..n).collect(),
        None => {
            let mut ids: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
            ids.sort_unstable();
            ids.dedup();
            ids
        }
    };
    let dense = |id: u64| ids.binary_search(&id).unwrap();

    let mut edges = Vec::with_capacity(raw.len());
    for &(u, v) in &raw {
        if u == v {
            report.self_loops += 1;
            continue;
        }
        let (a, b) = (dense(u), dense(v));
        edges.push((a.min(b), a.max(b)));
    }
    let before = edges.len();
    edges.sort_unstable();
    edges.dedup();
    report.duplicates = before - edges.len();
    let graph = Graph::from_canonical(ids.len(), &edges);
    report.original_ids = ids;
    Ok((graph, report))
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<(Graph, ReadReport)> {
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text)
}

/// Canonical text: a `# nodes N` line, then ascending `u v` lines with
/// `u < v`, LF-terminated.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(g.m() * 12 + 16);
    out.push_str(&format!("# nodes {}\n", g.n()));
    for (u, v) in g.edges() {
        out.push_str(&u.to_string());
        out.push(' ');
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let mut f = fs::File::create(path)?;
    f.write_all(format_edge_list(g).as_bytes())?;
    f.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_text() {
        let (g, rep) = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(rep.lines, 3);
        assert!(!rep.relabeled());
    }

    #[test]
    fn duplicates_and_loops_are_reported() {
        let (g, rep) = parse_edge_list("0 1\n1 0\n0 0").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(rep.duplicates, 1);
        assert_eq!(rep.self_loops, 1);
    }

    #[test]
    fn comments_gaps_and_errors() {
        let (g, rep) = parse_edge_list("# header\n10 30 # trailing\n\n30 20\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(rep.original_ids, vec![10, 20, 30]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);

        match parse_edge_list("0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_edge_list("0 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_edge_list("-1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn canonical_writer() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(format_edge_list(&g), "# nodes 4\n0 1\n0 2\n1 3\n");
    }

    #[test]
    fn declared_node_count_keeps_isolated_nodes() {
        let g = Graph::from_edges(5, [(1, 3)]).unwrap();
        let (h, rep) = parse_edge_list(&format_edge_list(&g)).unwrap();
        assert_eq!(h, g);
        assert!(!rep.relabeled());
        assert!(parse_edge_list("# nodes 2\n0 2\n").is_err());
    }
}
