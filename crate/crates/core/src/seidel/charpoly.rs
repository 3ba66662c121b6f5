//! Exact characteristic polynomials of Seidel matrices.
//!
//! The main path runs Hessenberg reduction over several 62-bit prime fields
//! and CRT-combines the results; coefficient bounds for orders up to 60 fit
//! comfortably in five primes. A division-free Berkowitz pass over Z/2^e
//! serves the modular class sampler, and a BigInt Berkowitz doubles as an
//! independent oracle in tests.

use super::SeidelMatrix;
use crate::num::{big, BigInt};
use crate::poly::IntPoly;
use num_integer::Integer;
use num_traits::{One, Zero};

/// 62-bit primes for the CRT; a prefix is selected per matrix order so that
/// the product exceeds twice the Hadamard coefficient bound.
const PRIMES: [u64; 24] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
    4611686018427387701,
    4611686018427387631,
    4611686018427387617,
    4611686018427387587,
    4611686018427387461,
    4611686018427387421,
    4611686018427387409,
    4611686018427387329,
    4611686018427387323,
    4611686018427387301,
    4611686018427387271,
    4611686018427387241,
    4611686018427387139,
    4611686018427387131,
    4611686018427387127,
    4611686018427387113,
];

/// Number of primes needed for order `n`: coefficients are bounded by
/// `binom(n,k) * k^(k/2) <= 2^n * n^(n/2)`.
fn primes_needed(n: usize) -> usize {
    let bits = 2.0 + n as f64 + 0.5 * n as f64 * (n.max(2) as f64).log2();
    let count = (bits / 61.9).ceil() as usize;
    assert!(count <= PRIMES.len(), "order too large for the prime table");
    count.max(1)
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

/// Characteristic polynomial of the Hessenberg form modulo `p`, coefficients
/// ascending, length n+1.
fn charpoly_mod(s: &SeidelMatrix, p: u64) -> Vec<u64> {
    let n = s.order();
    let mut a: Vec<Vec<u64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = s.entry(i, j);
                    if e >= 0 {
                        e as u64
                    } else {
                        p - 1
                    }
                })
                .collect()
        })
        .collect();

    // similarity reduction to upper Hessenberg
    for col in 0..n.saturating_sub(2) {
        let piv = (col + 1..n).find(|&r| a[r][col] != 0);
        let piv = match piv {
            Some(r) => r,
            None => continue,
        };
        if piv != col + 1 {
            a.swap(piv, col + 1);
            for row in a.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = invmod(a[col + 1][col], p);
        for r in col + 2..n {
            if a[r][col] == 0 {
                continue;
            }
            let f = mulmod(a[r][col], inv, p);
            for c in col..n {
                let t = mulmod(f, a[col + 1][c], p);
                a[r][c] = (a[r][c] + p - t) % p;
            }
            for rr in 0..n {
                let t = mulmod(f, a[rr][r], p);
                a[rr][col + 1] = (a[rr][col + 1] + t) % p;
            }
        }
    }

    // p_0 = 1; p_k = (x - h_kk) p_{k-1} - sum_i h_ik (prod subdiag) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let hkk = a[k - 1][k - 1];
        let prev = &polys[k - 1];
        let mut cur = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            cur[i + 1] = (cur[i + 1] + c) % p;
            let t = mulmod(hkk, c, p);
            cur[i] = (cur[i] + p - t) % p;
        }
        let mut beta = 1u64; // prod of subdiagonal entries h_{j+1,j}
        for i in (1..k).rev() {
            // term: h_{i,k} * prod_{j=i..k-2} h_{j+1,j} * p_{i-1}
            beta = mulmod(beta, a[i][i - 1], p);
            let coeff = mulmod(a[i - 1][k - 1], beta, p);
            if coeff == 0 {
                continue;
            }
            for (t, &c) in polys[i - 1].iter().enumerate() {
                let v = mulmod(coeff, c, p);
                cur[t] = (cur[t] + p - v) % p;
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// Exact characteristic polynomial via CRT over the prime table.
pub fn charpoly_crt(s: &SeidelMatrix) -> IntPoly {
    let n = s.order();
    if n == 0 {
        return IntPoly::one();
    }
    let primes = &PRIMES[..primes_needed(n)];
    let residues: Vec<Vec<u64>> = primes.iter().map(|&p| charpoly_mod(s, p)).collect();
    let mut modulus = BigInt::one();
    for &p in primes {
        modulus *= big(p as i64);
    }
    let half = &modulus / big(2);
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        // Garner-style combination
        let mut x = BigInt::zero();
        let mut m = BigInt::one();
        for (pi, &p) in primes.iter().enumerate() {
            let pb = big(p as i64);
            let r = big(residues[pi][k] as i64);
            // x += m * t where t = (r - x)/m mod p
            let xr = x.mod_floor(&pb);
            let minv = mod_inverse_big(&m.mod_floor(&pb), &pb);
            let t = ((r - xr) * minv).mod_floor(&pb);
            x += &m * t;
            m *= pb;
        }
        let x = x.mod_floor(&modulus);
        coeffs.push(if x > half { x - &modulus } else { x });
    }
    IntPoly::new(coeffs)
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Division-free Berkowitz characteristic polynomial over Z/2^e.
/// Returns coefficients in descending order (leading 1 first), length n+1.
pub fn berkowitz_charpoly_mod2e(s: &SeidelMatrix, e: u32) -> Vec<u8> {
    assert!(e >= 1 && e <= 8);
    let n = s.order();
    let mask: u32 = (1u32 << e) - 1;
    let a = |i: usize, j: usize| -> u32 { (s.entry(i, j) as i32 as u32) & mask };

    // Coefficient vector of the leading 1x1 block: [1, -a00]; a00 = 0.
    let mut c: Vec<u32> = vec![1, 0];
    for m in 1..n {
        // block A_{m+1}: previous block M = A[0..m][0..m], col v = A[0..m][m],
        // row r = A[m][0..m], corner alpha = A[m][m] = 0.
        // Toeplitz column: t0 = 1, t1 = -alpha, t_{k+2} = -(r . M^k v)
        let mut t = vec![0u32; m + 2];
        t[0] = 1;
        t[1] = 0;
        let mut w: Vec<u32> = (0..m).map(|i| a(i, m)).collect();
        for k in 0..m {
            // t_{k+2} = -(r . w)
            let mut dot: u32 = 0;
            for i in 0..m {
                dot = dot.wrapping_add(a(m, i).wrapping_mul(w[i])) & mask;
            }
            t[k + 2] = (mask + 1 - dot) & mask;
            if k + 1 < m {
                // w <- M w
                let mut nw = vec![0u32; m];
                for i in 0..m {
                    let mut acc: u32 = 0;
                    for j in 0..m {
                        acc = acc.wrapping_add(a(i, j).wrapping_mul(w[j])) & mask;
                    }
                    nw[i] = acc;
                }
                w = nw;
            }
        }
        // c <- T * c (lower triangular Toeplitz by first column t)
        let mut nc = vec![0u32; m + 2];
        for (i, &ci) in c.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for k in 0..t.len() - i {
                nc[i + k] = nc[i + k].wrapping_add(t[k].wrapping_mul(ci)) & mask;
            }
        }
        c = nc;
    }
    c.iter().map(|&v| (v & mask) as u8).collect()
}

/// BigInt Berkowitz: an independent exact route used as an oracle in tests.
pub fn berkowitz_charpoly_bigint(s: &SeidelMatrix) -> IntPoly {
    let n = s.order();
    if n == 0 {
        return IntPoly::one();
    }
    let a = |i: usize, j: usize| -> BigInt { big(s.entry(i, j)) };
    let mut c: Vec<BigInt> = vec![BigInt::one(), BigInt::zero()];
    for m in 1..n {
        let mut t = vec![BigInt::zero(); m + 2];
        t[0] = BigInt::one();
        let mut w: Vec<BigInt> = (0..m).map(|i| a(i, m)).collect();
        for k in 0..m {
            let mut dot = BigInt::zero();
            for i in 0..m {
                dot += a(m, i) * &w[i];
            }
            t[k + 2] = -dot;
            if k + 1 < m {
                let mut nw = vec![BigInt::zero(); m];
                for (i, slot) in nw.iter_mut().enumerate() {
                    let mut acc = BigInt::zero();
                    for j in 0..m {
                        acc += a(i, j) * &w[j];
                    }
                    *slot = acc;
                }
                w = nw;
            }
        }
        let mut nc = vec![BigInt::zero(); m + 2];
        for (i, ci) in c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for k in 0..t.len() - i {
                let v = &t[k] * ci;
                nc[i + k] += v;
            }
        }
        c = nc;
    }
    c.reverse();
    IntPoly::new(c)
}
