//! Seidel matrices: symmetric {0, +1, -1} matrices with zero diagonal,
//! switching, the unique odd-order Euler switch, exact characteristic
//! polynomials, and mod-4 residue products.

mod charpoly;
mod spectral;

pub use charpoly::berkowitz_charpoly_bigint;
pub use spectral::{
    angle_square, spectral_data, AngleValue, EigenvalueClass, SpectralData, SpectralError,
};

use crate::num::BigInt;
use crate::poly::IntPoly;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeidelError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagonal entry at ({0},{0}) is not zero")]
    NonzeroDiagonal(usize),
    #[error("entry at ({0},{1}) is not +1 or -1")]
    BadEntry(usize, usize),
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("euler switch requires odd order, got {0}")]
    EvenOrder(usize),
    #[error("sign vector length {0} does not match order {1}")]
    BadSignLength(usize, usize),
}

/// A vector of signs, one per row or per class; by convention the first
/// entry is +1 when used canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignVector(pub Vec<i8>);

impl SignVector {
    pub fn all_plus(n: usize) -> SignVector {
        SignVector(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Symmetric {0, ±1} matrix with zero diagonal, stored as the strict upper
/// triangle in row-major order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeidelMatrix {
    n: usize,
    upper: Vec<i8>,
}

impl SeidelMatrix {
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        // offset of row i = i*n - i(i+3)/2 - 1 ... keep it simple:
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if i == j {
            0
        } else if i < j {
            self.upper[self.idx(i, j)] as i64
        } else {
            self.upper[self.idx(j, i)] as i64
        }
    }

    /// Build from explicit upper-triangle entries (row-major, each ±1).
    pub fn from_upper(n: usize, upper: Vec<i8>) -> Result<SeidelMatrix, SeidelError> {
        assert_eq!(upper.len(), n * n.saturating_sub(1) / 2);
        for (k, &e) in upper.iter().enumerate() {
            if e != 1 && e != -1 {
                return Err(SeidelError::BadEntry(k, k));
            }
        }
        Ok(SeidelMatrix { n, upper })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<SeidelMatrix, SeidelError> {
        let n = rows.len();
        for r in rows {
            if r.len() != n {
                return Err(SeidelError::NotSquare);
            }
        }
        for i in 0..n {
            if rows[i][i] != 0 {
                return Err(SeidelError::NonzeroDiagonal(i));
            }
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(SeidelError::NotSymmetric(i, j));
                }
                if rows[i][j] != 1 && rows[i][j] != -1 {
                    return Err(SeidelError::BadEntry(i, j));
                }
            }
        }
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                upper.push(rows[i][j] as i8);
            }
        }
        Ok(SeidelMatrix { n, upper })
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Uniformly random Seidel matrix of order `n`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> SeidelMatrix {
        let upper = (0..n * n.saturating_sub(1) / 2)
            .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
            .collect();
        SeidelMatrix { n, upper }
    }

    /// Conjugate by the diagonal sign matrix: `D S D`.
    pub fn switch(&self, d: &SignVector) -> Result<SeidelMatrix, SeidelError> {
        if d.len() != self.n {
            return Err(SeidelError::BadSignLength(d.len(), self.n));
        }
        let mut upper = self.upper.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let k = self.idx(i, j);
                upper[k] = self.upper[k] * d.0[i] * d.0[j];
            }
        }
        Ok(SeidelMatrix { n: self.n, upper })
    }

    /// Adjacency matrix of the underlying graph `(J - I - S)/2`.
    pub fn underlying_adjacency(&self) -> Vec<Vec<u8>> {
        let mut a = vec![vec![0u8; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.entry(i, j) == -1 {
                    a[i][j] = 1;
                }
            }
        }
        a
    }

    /// Degree parities of the underlying graph.
    fn degree_parities(&self) -> Vec<u8> {
        (0..self.n)
            .map(|i| {
                let d: i64 = (0..self.n)
                    .filter(|&j| j != i && self.entry(i, j) == -1)
                    .count() as i64;
                (d % 2) as u8
            })
            .collect()
    }

    /// The unique switch (odd order) whose underlying graph is an Euler
    /// graph; the returned sign vector has first entry +1.
    pub fn euler_switch(&self) -> Result<(SeidelMatrix, SignVector), SeidelError> {
        if self.n % 2 == 0 {
            return Err(SeidelError::EvenOrder(self.n));
        }
        // Write delta_j = (-1)^{x_j}. Edge(i,j) of the switched graph is
        // s_ij xor x_i xor x_j, so for odd n the even-degree system reads
        // x_i = d_i xor X with X the total parity; the two solutions are a
        // vector and its complement, which induce the same switch.
        let d = self.degree_parities();
        let x: Vec<u8> = if d[0] == 0 {
            d.clone()
        } else {
            d.iter().map(|&b| 1 - b).collect()
        };
        let signs = SignVector(x.iter().map(|&b| if b == 0 { 1 } else { -1 }).collect());
        let switched = self.switch(&signs)?;
        debug_assert!(switched.degree_parities().iter().all(|&p| p == 0));
        Ok((switched, signs))
    }

    /// Exact characteristic polynomial `det(xI - S)`.
    pub fn char_poly(&self) -> IntPoly {
        let p = charpoly::charpoly_crt(self);
        // trace identities: coefficient of x^{n-1} is 0, of x^{n-2} is
        // -n(n-1)/2
        debug_assert!(self.n < 2 || p.coeff(self.n - 1) == BigInt::from(0));
        debug_assert!(
            self.n < 2
                || p.coeff(self.n - 2)
                    == BigInt::from(-((self.n as i64) * (self.n as i64 - 1) / 2))
        );
        p
    }

    /// Characteristic polynomial coefficients modulo `2^e`, descending
    /// degree order (leading 1 first), length `n + 1`.
    pub fn char_poly_mod2e(&self, e: u32) -> Vec<u8> {
        charpoly::berkowitz_charpoly_mod2e(self, e)
    }

    /// Principal submatrix with row/column `i` deleted.
    pub fn principal_submatrix(&self, remove: usize) -> SeidelMatrix {
        let keep: Vec<usize> = (0..self.n).filter(|&k| k != remove).collect();
        let mut upper = Vec::with_capacity((self.n - 1) * (self.n - 2) / 2);
        for a in 0..keep.len() {
            for b in a + 1..keep.len() {
                upper.push(self.entry(keep[a], keep[b]) as i8);
            }
        }
        SeidelMatrix {
            n: self.n - 1,
            upper,
        }
    }
}

/// Entrywise residue mod 4 of `prod (S - shift_k I)`.
pub fn mod4_residue(s: &SeidelMatrix, shifts: &[i64]) -> Vec<Vec<u8>> {
    let n = s.order();
    let mut acc: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = s.entry(i, j);
                    if i == j {
                        v -= shifts[0];
                    }
                    v
                })
                .collect()
        })
        .collect();
    for lam in &shifts[1..] {
        let mut next = vec![vec![0i64; n]; n];
        for i in 0..n {
            for k in 0..n {
                let a = acc[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let mut b = s.entry(k, j);
                    if k == j {
                        b -= lam;
                    }
                    next[i][j] += a * b;
                }
            }
        }
        acc = next;
    }
    acc.iter()
        .map(|row| row.iter().map(|&v| (v.rem_euclid(4)) as u8).collect())
        .collect()
}

/// Exact check of the derivative identity
/// `sum_i Char_{S[i]}(x) = Char_S'(x)`.
pub fn submatrix_charpoly_sum_check(s: &SeidelMatrix) -> bool {
    assert!(s.order() >= 2);
    let mut sum = IntPoly::zero();
    for i in 0..s.order() {
        sum = sum.add(&s.principal_submatrix(i).char_poly());
    }
    sum == s.char_poly().derivative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn swap2() -> SeidelMatrix {
        SeidelMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap()
    }

    #[test]
    fn order_one_charpoly() {
        let s = SeidelMatrix::from_upper(1, vec![]).unwrap();
        assert_eq!(s.char_poly(), IntPoly::x());
    }

    #[test]
    fn switching_is_involution_and_spectrum_preserving() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s = SeidelMatrix::random(9, &mut rng);
        let d = SignVector(vec![1, -1, 1, 1, -1, -1, 1, -1, 1]);
        let t = s.switch(&d).unwrap();
        assert_eq!(t.switch(&d).unwrap(), s);
        assert_eq!(t.char_poly(), s.char_poly());
        assert_eq!(s.switch(&SignVector::all_plus(9)).unwrap(), s);
        // n=2 explicit example
        let d2 = SignVector(vec![1, -1]);
        assert_eq!(
            swap2().switch(&d2).unwrap().to_rows(),
            vec![vec![0, -1], vec![-1, 0]]
        );
    }

    #[test]
    fn charpoly_small_cases() {
        assert_eq!(swap2().char_poly(), IntPoly::from_desc_i64(&[1, 0, -1]));
        // order 3 all +1: eigenvalues 2, -1, -1
        let s = SeidelMatrix::from_upper(3, vec![1, 1, 1]).unwrap();
        assert_eq!(
            s.char_poly(),
            IntPoly::from_desc_i64(&[1, 0, -3, -2])
        );
    }

    #[test]
    fn charpoly_matches_berkowitz_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for n in [3usize, 5, 8, 12] {
            let s = SeidelMatrix::random(n, &mut rng);
            assert_eq!(s.char_poly(), berkowitz_charpoly_bigint(&s), "n={n}");
        }
    }

    #[test]
    fn charpoly_mod2e_matches_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [5usize, 9, 13] {
            let s = SeidelMatrix::random(n, &mut rng);
            let exact = s.char_poly();
            let m = s.char_poly_mod2e(7);
            let desc = exact.desc_coeffs(n + 1);
            for (k, c) in desc.iter().enumerate() {
                let r = crate::num::to_i64(&(c % crate::num::big(128)).clone());
                let r = r.rem_euclid(128) as u8;
                assert_eq!(m[k], r, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn euler_switch_basics() {
        // order 1
        let s1 = SeidelMatrix::from_upper(1, vec![]).unwrap();
        let (t, d) = s1.euler_switch().unwrap();
        assert_eq!(t, s1);
        assert_eq!(d, SignVector(vec![1]));
        // order 3 all +1: empty underlying graph, already Euler
        let s3 = SeidelMatrix::from_upper(3, vec![1, 1, 1]).unwrap();
        let (t, _) = s3.euler_switch().unwrap();
        assert_eq!(t, s3);
        // even order refused
        let s2 = swap2();
        assert!(matches!(s2.euler_switch(), Err(SeidelError::EvenOrder(2))));
    }

    #[test]
    fn euler_switch_unique_by_exhaustion() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for n in [5usize, 7, 9] {
            let s = SeidelMatrix::random(n, &mut rng);
            let (euler, _) = s.euler_switch().unwrap();
            let mut count = 0;
            for mask in 0..(1u32 << (n - 1)) {
                let mut signs = vec![1i8; n];
                for b in 0..n - 1 {
                    if mask >> b & 1 == 1 {
                        signs[b + 1] = -1;
                    }
                }
                let t = s.switch(&SignVector(signs)).unwrap();
                if t.degree_parities().iter().all(|&p| p == 0) {
                    assert_eq!(t, euler);
                    count += 1;
                }
            }
            assert_eq!(count, 1, "n={n}");
        }
    }

    #[test]
    fn euler_mod4_congruences() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in [5usize, 7, 9, 11] {
            let s = SeidelMatrix::random(n, &mut rng);
            let (e, _) = s.euler_switch().unwrap();
            for lam in [-3i64, -1, 1, 3] {
                for mu in [-3i64, -1, 1, 3] {
                    let r = mod4_residue(&e, &[lam, mu]);
                    let want = (n as i64 - 2 - lam - mu).rem_euclid(4) as u8;
                    assert!(
                        r.iter().all(|row| row.iter().all(|&v| v == want)),
                        "two-factor congruence failed n={n} lam={lam} mu={mu}"
                    );
                    for nu in [-2i64, -1, 0, 1, 2] {
                        let r3 = mod4_residue(&e, &[lam, mu, nu]);
                        let want3 = ((n as i64 - 2 - lam - mu) * (n as i64 - 1 - nu))
                            .rem_euclid(4) as u8;
                        assert!(
                            r3.iter().all(|row| row.iter().all(|&v| v == want3)),
                            "three-factor congruence failed n={n}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn derivative_sum_identity() {
        assert!(submatrix_charpoly_sum_check(&swap2()));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = SeidelMatrix::random(7, &mut rng);
        assert!(submatrix_charpoly_sum_check(&s));
    }
}
