//! graph6 encoding of the underlying simple graph. The embedding is dropped.

fn push_size(out: &mut Vec<u8>, n: usize) {
    let n = n as u64;
    if n <= 62 {
        out.push(n as u8 + 63);
        return;
    }
    let (prefix, width) = if n <= 258_047 { (1, 3) } else { (2, 6) };
    out.extend(std::iter::repeat_n(126, prefix));
    for k in (0..width).rev() {
        out.push(((n >> (6 * k)) & 63) as u8 + 63);
    }
}

/// graph6 line (without newline) for a graph on `n` vertices.
pub fn encode(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adjacent = vec![false; n * n];
    for &(a, b) in edges {
        adjacent[a * n + b] = true;
        adjacent[b * n + a] = true;
    }
    let mut out = Vec::new();
    push_size(&mut out, n);
    let mut bits = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | u8::from(adjacent[i * n + j]);
            filled += 1;
            if filled == 6 {
                out.push(bits + 63);
                bits = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((bits << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        let k4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        assert_eq!(encode(4, &k4), "C~");
        assert_eq!(encode(0, &[]), "?");
        assert_eq!(encode(1, &[]), "@");
        // Bits 101001 0001(00) for the path 0-1-2-3-4.
        assert_eq!(encode(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]), "DhC");
    }

    #[test]
    fn long_size_prefix() {
        let s = encode(63, &[]);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 126]);
    }
}
