use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line.
///
/// Vertex order is the encoder's. The optional `>>graph6<<` prefix and a
/// trailing newline are accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::NonPrintable(b));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::MalformedHeader),
        [126, 126, ..] => {
            // 8-byte form encodes n >= 258048, far beyond the supported width.
            if bytes.len() < 8 {
                return Err(Error::MalformedHeader);
            }
            let n = bytes[2..8].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, &bytes[8..])
        }
        [126, ..] => {
            if bytes.len() < 4 {
                return Err(Error::MalformedHeader);
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            if n < 63 {
                return Err(Error::MalformedHeader);
            }
            (n, &bytes[4..])
        }
        [b, rest @ ..] => ((b - 63) as usize, rest),
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let nbits = n * (n - 1) / 2;
    let needed = nbits.div_ceil(6);
    if body.len() < needed {
        return Err(Error::Truncated);
    }
    if body.len() > needed {
        return Err(Error::TrailingBytes(body.len() - needed));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes a graph as graph6 without header or newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn decodes_hand_checked_strings() {
        let k2 = from_graph6("A_").unwrap();
        assert_eq!(k2.edges(), vec![(0, 1)]);
        let k3 = from_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        // five vertices, edges 0-2, 0-4, 1-3, 3-4
        let g = from_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(from_graph6(">>graph6<<A_\n").unwrap(), k2);
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(from_graph6(""), Err(Error::MalformedHeader));
        assert_eq!(from_graph6("D"), Err(Error::Truncated));
        assert_eq!(from_graph6("A__"), Err(Error::TrailingBytes(1)));
        assert_eq!(from_graph6("A\x07"), Err(Error::NonPrintable(7)));
        assert_eq!(from_graph6("~?"), Err(Error::MalformedHeader));
        assert_eq!(from_graph6("?"), Err(Error::EmptyGraph));
    }

    #[test]
    fn long_header_for_63_and_64_vertices() {
        for n in [63, 64] {
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let s = to_graph6(&g);
            assert!(s.starts_with('~'));
            assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn reencoding_is_byte_identical(n in 1usize..=20, seed in proptest::collection::vec(any::<bool>(), 190)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if seed[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edge_list(n, &edges).unwrap();
            let s = to_graph6(&g);
            let back = from_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_graph6(&back), s);
        }
    }
}
