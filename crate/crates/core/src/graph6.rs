//! graph6 codec: the printable-ASCII encoding of the upper-triangular
//! adjacency bitstring used by the usual graph-enumeration toolchains.
//!
//! Bit-exact with the de facto format: column-major upper triangle,
//! 6 bits per byte offset by 63, long vertex-count form (`~` prefix)
//! for n >= 63, zero padding required.

use crate::graph::{Graph, MAX_VERTICES};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    /// Byte outside the printable range 63..=126.
    InvalidByte { pos: usize, byte: u8 },
    /// Input ended before the adjacency bits did.
    Truncated { expected_bytes: usize, got: usize },
    /// Padding bits after the upper triangle must be zero.
    NonzeroPadding { pos: usize },
    Empty,
    TooLarge { n: usize },
    /// Long-form sizes beyond 2^18-1 are not representable here.
    UnsupportedSizeForm { pos: usize },
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph6Error::InvalidByte { pos, byte } => {
                write!(f, "invalid graph6 byte 0x{byte:02x} at position {pos}")
            }
            Graph6Error::Truncated { expected_bytes, got } => {
                write!(f, "truncated graph6: expected {expected_bytes} bytes, got {got}")
            }
            Graph6Error::NonzeroPadding { pos } => {
                write!(f, "nonzero padding bits in graph6 byte at position {pos}")
            }
            Graph6Error::Empty => write!(f, "empty graph6 string"),
            Graph6Error::TooLarge { n } => {
                write!(f, "graph6 declares {n} vertices; cap is {MAX_VERTICES}")
            }
            Graph6Error::UnsupportedSizeForm { pos } => {
                write!(f, "unsupported graph6 size form at position {pos}")
            }
        }
    }
}

impl std::error::Error for Graph6Error {}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // 63 <= n < 2^18: '~' then three 6-bit groups, most significant first.
        out.push(b'~');
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).unwrap()
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(Graph6Error::UnsupportedSizeForm { pos: 1 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                expected_bytes: 4,
                got: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Graph6Error::Empty);
    }
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge { n });
    }

    let bit_count = n * (n - 1) / 2;
    let body_bytes = bit_count.div_ceil(6);
    if bytes.len() < pos + body_bytes {
        return Err(Graph6Error::Truncated {
            expected_bytes: pos + body_bytes,
            got: bytes.len(),
        });
    }
    if bytes.len() > pos + body_bytes {
        // Trailing junk counts as an invalid byte at the first extra position.
        return Err(Graph6Error::InvalidByte {
            pos: pos + body_bytes,
            byte: bytes[pos + body_bytes],
        });
    }

    let mut g = Graph::new(n);
    let mut acc = 0u8;
    let mut have = 0u8;
    for j in 1..n {
        for i in 0..j {
            if have == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                have = 6;
            }
            have -= 1;
            if (acc >> have) & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    if have > 0 && acc & ((1 << have) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding { pos: pos - 1 });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Reference vector from the format's own documentation: 5 vertices,
    /// edges {0-2, 0-4, 1-3, 3-4} encode to "DQc".
    #[test]
    fn reference_vector() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::new(1);
        assert_eq!(encode(&g), "@");
        assert_eq!(decode("@").unwrap(), g);
    }

    #[test]
    fn long_form_roundtrip() {
        let g = families::cycle(100);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn header_is_stripped() {
        let g = families::path(4);
        let s = format!(">>graph6<<{}", encode(&g));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn invalid_byte_position_is_reported() {
        let err = decode("D\x20Qc").unwrap_err();
        assert_eq!(err, Graph6Error::InvalidByte { pos: 1, byte: 0x20 });
    }

    #[test]
    fn truncation_is_reported() {
        let err = decode("D").unwrap_err();
        assert!(matches!(err, Graph6Error::Truncated { .. }));
    }

    #[test]
    fn nonzero_padding_rejected() {
        // n=2 uses one adjacency bit; the five padding bits must be zero.
        // '@' = 63 + 0b000001 sets the lowest padding bit.
        let err = decode("A@").unwrap_err();
        assert!(matches!(err, Graph6Error::NonzeroPadding { .. }));
        // 'o' = 63 + 0b110000: edge bit and a padding bit.
        let err = decode("Ao").unwrap_err();
        assert!(matches!(err, Graph6Error::NonzeroPadding { .. }));
    }
}
