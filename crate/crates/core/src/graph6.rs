//! graph6 encoding: a size header followed by the upper adjacency triangle,
//! read column by column `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits
//! per byte (big-endian within the group) and offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ORDER: u64 = 68_719_476_735;
const OPTIONAL_HEADER: &[u8] = b">>graph6<<";

fn encode_order(n: u64, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// Encodes `g` as graph6 bytes (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n as u64 > MAX_ORDER {
        return Err(Error::Domain(format!("graph6 cannot encode order {n}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(8 + bits.div_ceil(6));
    encode_order(n as u64, &mut out);

    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(out)
}

/// Encodes `g` as a graph6 string.
pub fn to_graph6_string(g: &Graph) -> Result<String> {
    // graph6 bytes are always printable ASCII.
    encode_graph6(g).map(|b| String::from_utf8(b).expect("graph6 is ASCII"))
}

fn sextet(byte: u8) -> Result<u64> {
    if (63..=126).contains(&byte) {
        Ok((byte - 63) as u64)
    } else {
        Err(Error::MalformedGraph6(format!("byte 0x{byte:02x} outside 63..=126")))
    }
}

/// Decodes one graph6 record. Surrounding whitespace and the optional
/// `>>graph6<<` prefix are ignored; padding bits are not checked.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes.trim_ascii();
    if let Some(rest) = data.strip_prefix(OPTIONAL_HEADER) {
        data = rest;
    }
    let first = *data
        .first()
        .ok_or_else(|| Error::MalformedGraph6("empty input".into()))?;

    let (n, body) = if first != 126 {
        (sextet(first)?, &data[1..])
    } else if data.get(1) != Some(&126) {
        if data.len() < 4 {
            return Err(Error::MalformedGraph6("truncated 18-bit size header".into()));
        }
        let mut n = 0;
        for &b in &data[1..4] {
            n = (n << 6) | sextet(b)?;
        }
        if n <= 62 {
            return Err(Error::MalformedGraph6(format!("non-minimal size header for n = {n}")));
        }
        (n, &data[4..])
    } else {
        if data.len() < 8 {
            return Err(Error::MalformedGraph6("truncated 36-bit size header".into()));
        }
        let mut n = 0;
        for &b in &data[2..8] {
            n = (n << 6) | sextet(b)?;
        }
        if n <= 258_047 {
            return Err(Error::MalformedGraph6(format!("non-minimal size header for n = {n}")));
        }
        (n, &data[8..])
    };

    let n = usize::try_from(n)
        .map_err(|_| Error::MalformedGraph6(format!("order {n} does not fit in memory")))?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            if k >= bits {
                break 'outer;
            }
            let value = sextet(body[k / 6])?;
            if (value >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    for &b in body {
        sextet(b)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_vectors() {
        assert_eq!(encode_graph6(&Graph::empty(0)).unwrap(), b"?");
        assert_eq!(encode_graph6(&Graph::complete(3)).unwrap(), b"Bw");
        assert_eq!(decode_graph6(b"Bw").unwrap(), Graph::complete(3));
        assert_eq!(decode_graph6(b"?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn matches_reference_five_vertex_graph() {
        // Edges 0-2, 0-4, 1-3, 3-4 encode as "DQc" in standard tools.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6_string(&g).unwrap(), "DQc");
    }

    #[test]
    fn large_headers_round_trip() {
        for n in [62, 63, 64, 200] {
            let g = Graph::cycle(n);
            let bytes = encode_graph6(&g).unwrap();
            if n > 62 {
                assert_eq!(bytes[0], 126);
            }
            assert_eq!(decode_graph6(&bytes).unwrap(), g);
        }
    }

    #[test]
    fn tolerates_header_and_newline() {
        assert_eq!(decode_graph6(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(decode_graph6(b""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode_graph6(b"B"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode_graph6(b"Bww"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode_graph6(b"B\x01"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(decode_graph6(b"~??"), Err(Error::MalformedGraph6(_))));
    }
}
