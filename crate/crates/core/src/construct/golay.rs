//! The extended binary Golay code, its 759 octads, and the 276-line Witt
//! construction in R^23.

use super::LineSystem;

/// Generator polynomial of the [23,12] binary Golay code:
/// x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1.
const GOLAY_GEN: u32 = (1 << 11) | (1 << 10) | (1 << 6) | (1 << 5) | (1 << 4) | (1 << 2) | 1;

/// All 4096 codewords of the extended [24,12,8] Golay code as bitmasks over
/// coordinates {0..23}; bit 23 is the parity extension.
pub fn golay_codewords() -> Vec<u32> {
    let mut words = Vec::with_capacity(1 << 12);
    for msg in 0u32..(1 << 12) {
        // cyclic encoding: c(x) = m(x) * g(x) in GF(2)[x], degree < 23
        let mut c: u32 = 0;
        for b in 0..12 {
            if msg >> b & 1 == 1 {
                c ^= GOLAY_GEN << b;
            }
        }
        debug_assert!(c < 1 << 23);
        let parity = (c.count_ones() % 2) << 23;
        words.push(c | parity);
    }
    words
}

/// The 759 octads: supports of weight-8 codewords.
pub fn octads() -> Vec<u32> {
    let mut out: Vec<u32> = golay_codewords()
        .into_iter()
        .filter(|w| w.count_ones() == 8)
        .collect();
    out.sort_unstable();
    out
}

/// Build the 276 equiangular lines in R^23 from the Witt design: for each
/// octad B containing point 0, v_B = 4*sum_{i in B} e_i - 4 e_0 - e_P, and
/// w_i = 8 e_i + 4 e_0 - e_P for i in {1..23}. All 276 vectors have squared
/// norm 80 and pairwise inner products +-16, and are orthogonal to
/// 4 e_0 + e_P.
pub fn witt_276() -> LineSystem {
    let blocks = octads();
    assert_eq!(blocks.len(), 759, "octad count");
    let through_zero: Vec<u32> = blocks.iter().copied().filter(|b| b & 1 == 1).collect();
    assert_eq!(through_zero.len(), 253, "octads through the point 0");

    let mut columns: Vec<Vec<i64>> = Vec::with_capacity(276);
    for &b in &through_zero {
        let mut v = vec![-1i64; 24];
        for i in 0..24 {
            if b >> i & 1 == 1 {
                v[i] += 4;
            }
        }
        v[0] -= 4;
        columns.push(v);
    }
    for i in 1..24 {
        let mut v = vec![-1i64; 24];
        v[i] += 8;
        v[0] += 4;
        columns.push(v);
    }
    assert_eq!(columns.len(), 276);

    // internal consistency: orthogonal to 4 e_0 + e_P
    for v in &columns {
        let dot = 4 * v[0] + v.iter().sum::<i64>();
        assert_eq!(dot, 0, "vector not orthogonal to 4 e_0 + e_P");
    }

    // rows = 24 x 276 matrix
    let rows: Vec<Vec<i64>> = (0..24)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    LineSystem::verify(&rows, 80, 16).expect("Witt system verifies")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_enumerator() {
        let words = golay_codewords();
        assert_eq!(words.len(), 4096);
        let mut weights = [0usize; 25];
        for w in &words {
            weights[w.count_ones() as usize] += 1;
        }
        assert_eq!(weights[0], 1);
        assert_eq!(weights[8], 759);
        assert_eq!(weights[12], 2576);
        assert_eq!(weights[16], 759);
        assert_eq!(weights[24], 1);
        assert!(weights.iter().enumerate().all(|(k, &c)| c == 0
            || k == 0
            || k == 8
            || k == 12
            || k == 16
            || k == 24));
    }

    #[test]
    fn octad_intersections() {
        let blocks = octads();
        for (a, &x) in blocks.iter().enumerate().step_by(97) {
            for &y in blocks.iter().skip(a + 1).step_by(89) {
                let c = (x & y).count_ones();
                assert!(c == 0 || c == 2 || c == 4, "octads intersect in 0/2/4");
            }
        }
    }
}
