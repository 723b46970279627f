//! graph6 interchange: a size header followed by the upper-triangle adjacency
//! bits in column-major order, packed six to a byte and offset by 63.

use crate::error::{Error, Result};
use crate::graph::{pair_count, pairs, Graph, MAX_VERTICES};

const OFFSET: u8 = 63;
const OPTIONAL_HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + pair_count(n).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in pairs(n) {
        acc = acc << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(acc + OFFSET);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let (base, bytes) = match text.strip_prefix(OPTIONAL_HEADER) {
        Some(rest) => (OPTIONAL_HEADER.len(), rest.as_bytes()),
        None => (0, text.as_bytes()),
    };
    let err = |offset: usize, reason: String| Error::Parse {
        offset: base + offset,
        reason,
    };
    let sextet = |offset: usize| -> Result<u8> {
        match bytes.get(offset) {
            Some(&b) if (63..=126).contains(&b) => Ok(b - OFFSET),
            Some(&b) => Err(err(offset, format!("byte {b:#04x} outside graph6 range"))),
            None => Err(err(offset, "unexpected end of input".into())),
        }
    };

    let (n, body_start) = match bytes.first() {
        None => return Err(err(0, "empty input".into())),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(err(1, format!("graphs above {MAX_VERTICES} vertices unsupported")));
            }
            let n = (0..3).try_fold(0usize, |acc, k| Ok::<_, Error>(acc << 6 | sextet(1 + k)? as usize))?;
            if n <= 62 {
                return Err(err(1, format!("long size form used for n = {n}")));
            }
            (n, 4)
        }
        Some(_) => (sextet(0)? as usize, 1),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(err(0, format!("vertex count {n} unsupported")));
    }

    let body_len = pair_count(n).div_ceil(6);
    let expected = body_start + body_len;
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }

    let mut g = Graph::empty(n)?;
    for (k, (i, j)) in pairs(n).enumerate() {
        let byte = sextet(body_start + k / 6)?;
        if byte >> (5 - k % 6) & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    let pad = body_len * 6 - pair_count(n);
    if pad > 0 {
        let last = body_start + body_len - 1;
        if sextet(last)? & ((1 << pad) - 1) != 0 {
            return Err(err(last, "nonzero padding bits".into()));
        }
    }
    Ok(g)
}
