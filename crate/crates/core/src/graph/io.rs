//! graph6 for simple graphs and a plain edge-list format for multigraphs.
//!
//! Edge-list records start with a header line `n m` followed by `m` lines
//! `u v`. A file may hold several records separated by blank lines; `#`
//! starts a comment.

use super::{CubicGraph, GraphError};

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::Malformed(msg.into())
}

/// Parses one graph6 line. Edges come out in lexicographic pair order.
pub fn parse_graph6(line: &str) -> Result<CubicGraph, GraphError> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty graph6 line"));
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(malformed("graph6 byte outside 63..=126"));
    }
    let (n, rest) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] < 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(malformed("graph6 sizes beyond 258047 vertices are not supported"));
    };
    let nbits = n * n.saturating_sub(1) / 2;
    if rest.len() != nbits.div_ceil(6) {
        return Err(malformed(format!(
            "graph6 body has {} bytes, expected {} for n={n}",
            rest.len(),
            nbits.div_ceil(6)
        )));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i as u32, j as u32));
            }
            k += 1;
        }
    }
    edges.sort();
    CubicGraph::new(n, &edges)
}

/// Encodes a simple graph as graph6. Returns `None` for multigraphs.
pub fn to_graph6(g: &CubicGraph) -> Option<String> {
    if !g.is_simple() {
        return None;
    }
    let n = g.n();
    let mut adj = vec![false; n * n];
    for (a, b) in g.edge_list() {
        adj[a as usize * n + b as usize] = true;
        adj[b as usize * n + a as usize] = true;
    }
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | adj[i * n + j] as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    Some(out)
}

/// Parses every edge-list record in `text`.
pub fn parse_edge_lists(text: &str) -> Vec<Result<CubicGraph, GraphError>> {
    let mut out = Vec::new();
    let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).peekable();
    while let Some(header) = lines.next() {
        let nums: Vec<&str> = header.split_whitespace().collect();
        let parsed = match nums.as_slice() {
            [n, m] => n.parse::<usize>().ok().zip(m.parse::<usize>().ok()),
            _ => None,
        };
        let Some((n, m)) = parsed else {
            out.push(Err(malformed(format!("bad header line {header:?}"))));
            continue;
        };
        let mut edges = Vec::with_capacity(m);
        let mut err = None;
        for _ in 0..m {
            let Some(line) = lines.next() else {
                err = Some(malformed("record ended early"));
                break;
            };
            let pair: Vec<u32> = line.split_whitespace().filter_map(|x| x.parse().ok()).collect();
            match pair.as_slice() {
                [a, b] => edges.push((*a, *b)),
                _ => {
                    err = Some(malformed(format!("bad edge line {line:?}")));
                    break;
                }
            }
        }
        out.push(match err {
            Some(e) => Err(e),
            None => CubicGraph::new(n, &edges),
        });
    }
    out
}

/// Parses text holding exactly one edge-list record.
pub fn parse_edge_list(text: &str) -> Result<CubicGraph, GraphError> {
    let mut all = parse_edge_lists(text);
    match all.len() {
        1 => all.pop().unwrap(),
        0 => Err(malformed("no edge-list record")),
        k => Err(malformed(format!("expected one record, found {k}"))),
    }
}

pub fn to_edge_list(g: &CubicGraph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (a, b) in g.edge_list() {
        s.push_str(&format!("{a} {b}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn k4_and_petersen_codes() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.n(), k4.m()), (4, 6));
        assert_eq!(k4, generators::k4());
        let p = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(to_graph6(&generators::k4()).unwrap(), "C~");
    }

    #[test]
    fn star_is_not_cubic() {
        assert!(matches!(parse_graph6("Cs"), Err(GraphError::NonCubic { degree: 1, .. })));
    }

    #[test]
    fn garbage() {
        assert!(matches!(parse_graph6(""), Err(GraphError::Malformed(_))));
        assert!(matches!(parse_graph6("C~~"), Err(GraphError::Malformed(_))));
        assert!(matches!(parse_graph6("C\u{7f}"), Err(GraphError::Malformed(_))));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = generators::theta();
        let text = to_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        let two = format!("{text}\n# second\n{}", to_edge_list(&generators::k4()));
        let all = parse_edge_lists(&two);
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].as_ref().unwrap(), &generators::k4());
    }

    #[test]
    fn truncated_record() {
        assert!(parse_edge_list("2 3\n0 1\n0 1\n").is_err());
    }
}
