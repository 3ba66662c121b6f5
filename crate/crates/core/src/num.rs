//! Small exact-arithmetic helpers on big integers and rationals.

pub use num_bigint::BigInt;
use num_bigint::Sign;
use num_integer::Integer;
pub use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact integer square root test: `Some(s)` with `s*s == n`, `s >= 0`.
pub fn perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &s * &s == *n {
        Some(s)
    } else {
        None
    }
}

/// Exact rational square root: `Some(s)` with `s*s == q`, `s >= 0`.
pub fn rat_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = perfect_square(q.numer())?;
    let d = perfect_square(q.denom())?;
    Some(BigRational::new(n, d))
}

/// Decompose a positive integer as `s * k^2` with `s` squarefree.
///
/// Returns `(s, k)`. Trial division up to 10^6 followed by a square test on
/// the cofactor; exact for all `|n| <= 10^18` and for larger `n` whose
/// non-smooth part is a prime, a prime square, or a product of two distinct
/// primes. Inputs in this crate are far below that threshold.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(n.is_positive(), "squarefree_decompose needs n > 0");
    let mut s = BigInt::one();
    let mut k = BigInt::one();
    let mut m = n.clone();
    let mut d: u64 = 2;
    while d <= 1_000_000 {
        let db = BigInt::from(d);
        if &db * &db > m {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = m.div_rem(&db);
            if r.is_zero() {
                m = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            if e % 2 == 1 {
                s *= &db;
            }
            k *= db.pow(e / 2);
        }
        d = if d == 2 { 3 } else { d + 2 };
    }
    if let Some(r) = perfect_square(&m) {
        k *= r;
    } else {
        s *= m;
    }
    (s, k)
}

/// Squarefree kernel of a positive rational: `q = s * r^2` with `s` a
/// squarefree positive integer, returned as `(s, r)`.
pub fn rat_squarefree_decompose(q: &BigRational) -> (BigInt, BigRational) {
    assert!(q.is_positive());
    let (sn, kn) = squarefree_decompose(q.numer());
    let (sd, kd) = squarefree_decompose(q.denom());
    // n/d = sn*kn^2 / (sd*kd^2) = (sn*sd) * (kn/(kd*sd))^2
    let s = &sn * &sd;
    let r = BigRational::new(kn, kd * sd);
    (s, r)
}

/// True iff the rational is an integer.
pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// Parity of an integer-valued rational (panics on non-integers).
pub fn integer_parity(q: &BigRational) -> u8 {
    assert!(is_integer(q), "parity of non-integer {q}");
    if q.numer().is_even() {
        0
    } else {
        1
    }
}

/// Sign of a big integer as -1, 0, 1.
pub fn sign_of(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Checked conversion used where values are known to be small.
pub fn to_i64(n: &BigInt) -> i64 {
    n.to_i64().expect("value out of i64 range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_kernels() {
        let (s, k) = squarefree_decompose(&big(73 * 219 * 219));
        assert_eq!((s, k), (big(73), big(219)));
        let (s, k) = squarefree_decompose(&big(1));
        assert_eq!((s, k), (big(1), big(1)));
        let (s, k) = squarefree_decompose(&big(2 * 2 * 3 * 3 * 3));
        assert_eq!((s, k), (big(3), big(6)));
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(rat_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt(&rat(2, 1)), None);
        assert_eq!(rat_sqrt(&rat(-4, 1)), None);
    }

    #[test]
    fn rat_kernel() {
        // 3/3675 = 1/1225 * 3... indeed 3/3675 = 1/1225, kernel 1, root 1/35.
        let (s, r) = rat_squarefree_decompose(&rat(3, 3675));
        assert_eq!(s, big(1));
        assert_eq!(r, rat(1, 35));
    }
}
