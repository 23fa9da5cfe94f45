//! Graph file formats: plain edge lists and graph6.
//!
//! Edge list: first line holds the vertex count `n`, then one `u v` pair
//! per line, 0-based. Either endpoint order is accepted on input; output
//! is normalized to `u < v` in lexicographic order.
//!
//! graph6: the standard bit-packed ASCII format for simple undirected
//! graphs, bit-exact with the published definition for n <= 62.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the edge-list text format.
pub fn read_edge_list(input: &str) -> Result<Graph> {
    let mut lines = input.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing vertex-count header".into(),
    })?;
    let n: usize = header.trim().parse().map_err(|_| Error::Parse {
        line: 1,
        msg: format!("invalid vertex count {:?}", header.trim()),
    })?;
    let mut edges = Vec::new();
    for (idx, line) in lines {
        let lineno = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            let tok = tok.ok_or(Error::Parse {
                line: lineno,
                msg: "expected \"u v\"".into(),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid vertex index {tok:?}"),
            })
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: "trailing tokens after edge".into(),
            });
        }
        for x in [u, v] {
            if x >= n {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("vertex index {x} out of range for n={n}"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        let e = (u.min(v), u.max(v));
        if edges.contains(&e) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate edge {} {}", e.0, e.1),
            });
        }
        edges.push(e);
    }
    Graph::from_edges(n, &edges)
}

/// Writes the edge-list text format with `u < v` pairs in sorted order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Encodes a graph in graph6 (n <= 62).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(Error::Graph6TooLarge(n));
    }
    let mut bytes = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut filled = 0;
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 output is ASCII"))
}

/// Decodes a graph6 string (n <= 62). Trailing whitespace is tolerated.
pub fn read_graph6(input: &str) -> Result<Graph> {
    let s = input.trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            msg: "empty graph6 string".into(),
        });
    }
    let first = bytes[0];
    if first == 126 {
        return Err(Error::Graph6TooLarge(63));
    }
    if !(63..=125).contains(&first) {
        return Err(Error::Parse {
            line: 1,
            msg: format!("invalid graph6 size byte {first}"),
        });
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let nbits = n * (n - 1) / 2;
    let expect = nbits.div_ceil(6);
    if bytes.len() - 1 != expect {
        return Err(Error::Parse {
            line: 1,
            msg: format!(
                "graph6 body has {} bytes, expected {expect} for n={n}",
                bytes.len() - 1
            ),
        });
    }
    let mut bits = Vec::with_capacity(expect * 6);
    for (pos, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                line: 1,
                msg: format!("invalid graph6 byte {b} at position {}", pos + 1),
            });
        }
        let g = b - 63;
        for k in (0..6).rev() {
            bits.push((g >> k) & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_parses_path() {
        let g = read_edge_list("3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(g.is_connected());
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match read_edge_list("x\n") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match read_edge_list("3\n0 5\n") {
            Err(Error::Parse { line: 2, msg }) => assert!(msg.contains("out of range")),
            other => panic!("unexpected {other:?}"),
        }
        match read_edge_list("3\n0 1\n1 0\n") {
            Err(Error::Parse { line: 3, msg }) => assert!(msg.contains("duplicate")),
            other => panic!("unexpected {other:?}"),
        }
        match read_edge_list("3\n1 1\n") {
            Err(Error::Parse { line: 2, msg }) => assert!(msg.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn graph6_known_values() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(write_graph6(&k2).unwrap(), "A_");
        assert_eq!(read_graph6("A_").unwrap().edges(), vec![(0, 1)]);

        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(write_graph6(&k4).unwrap(), "C~");

        // 5 vertices, edges {0-2, 0-4, 1-3, 3-4}
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
        assert_eq!(read_graph6("DQc").unwrap().edges(), g.edges());
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(read_graph6("").is_err());
        assert!(read_graph6("C").is_err());
        assert!(matches!(read_graph6("~~"), Err(Error::Graph6TooLarge(_))));
        let big = Graph::from_edges(63, &[(0, 1)]);
        assert!(big.is_ok());
        assert!(matches!(write_graph6(&big.unwrap()), Err(Error::Graph6TooLarge(63))));
    }

    #[test]
    fn fig2_tree_round_trips() {
        let edges = [
            (0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7), (2, 8), (2, 9),
            (3, 10), (3, 11), (4, 12), (4, 13), (5, 14), (5, 15), (6, 16), (7, 17), (8, 18),
        ];
        let g = Graph::from_edges(19, &edges).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(read_edge_list(&text).unwrap().edges(), g.edges());
        let g6 = write_graph6(&g).unwrap();
        assert_eq!(read_graph6(&g6).unwrap().edges(), g.edges());
    }
}
