//! Dense univariate polynomials over Z and Q.
//!
//! `IntPoly` is the universal currency of the crate: coefficients are
//! arbitrary-precision integers stored in ascending degree order with a
//! nonzero leading coefficient (the zero polynomial is the empty vector).

mod factor;
mod gcd;
mod interlace;
mod parse;
mod sturm;

pub use factor::{factor_q, is_irreducible};
pub use gcd::{poly_gcd, squarefree_decomposition, squarefree_part};
pub use interlace::{cmp_algebraic, interlaces, real_roots, smallest_real_root, AlgebraicRoot};
pub use parse::{parse_poly, ParseError};
pub use sturm::{
    is_totally_real, isolate_roots, sturm_count, Bound, RootInterval, RootIsolation, SturmChain,
    SturmError,
};

use crate::num::{sign_of, BigInt, BigRational};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Monic-or-not dense integer polynomial, coefficients ascending by degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn x() -> Self {
        IntPoly::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `x - r`
    pub fn x_minus(r: i64) -> Self {
        IntPoly::new(vec![BigInt::from(-r), BigInt::one()])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients in descending degree order (leading first).
    pub fn from_desc_i64(coeffs: &[i64]) -> Self {
        let mut v: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
        v.reverse();
        IntPoly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient vector in descending degree order, padded to `len`.
    pub fn desc_coeffs(&self, len: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[len - 1 - i] = c.clone();
        }
        v
    }

    pub fn lc(&self) -> &BigInt {
        self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.lc().is_one()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `p(x)` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        // Evaluate p(n/d) * d^deg, which stays integral; only the sign matters.
        if self.is_zero() {
            return 0;
        }
        let n = x.numer();
        let d = x.denom();
        let deg = self.degree();
        let mut acc = BigInt::zero();
        let mut dp = BigInt::one();
        for k in (0..=deg).rev() {
            acc = acc * n + &self.coeffs[k] * &dp;
            if k > 0 {
                dp *= d;
            }
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.is_zero() || self.degree() == 0 {
            return IntPoly::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(v)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(v)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `p(x + c)` via Horner-style Taylor shift.
    pub fn taylor_shift(&self, c: &BigInt) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut acc = IntPoly::zero();
        let shift = IntPoly::new(vec![c.clone(), BigInt::one()]);
        for k in (0..self.coeffs.len()).rev() {
            acc = acc.mul(&shift);
            acc = acc.add(&IntPoly::constant(self.coeffs[k].clone()));
        }
        acc
    }

    /// `p(x^2)`
    pub fn compose_x2(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); 2 * self.coeffs.len() - 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = c.clone();
        }
        IntPoly::new(v)
    }

    /// `p(-x)`
    pub fn compose_neg(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Content: gcd of coefficients, with the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.is_zero() || self.lc().is_positive() {
            g
        } else {
            -g
        }
    }

    /// Primitive part (positive leading coefficient).
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Divide out the positive gcd of the coefficients, keeping the sign.
    /// Sturm chains need this: sign normalization would corrupt them.
    pub fn primitive_keep_sign(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content().abs();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact division: `Some(q)` with `self = q * d`, else `None`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let n = self.degree();
        let m = d.degree();
        let mut q = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = rem[k + m].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(d.lc());
            if !r.is_zero() {
                return None;
            }
            for j in 0..=m {
                rem[k + j] -= &qc * &d.coeffs[j];
            }
            q[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        other.div_exact(self).is_some()
    }

    /// Multiplicity of `d` as a factor of `self`.
    pub fn multiplicity_of(&self, d: &IntPoly) -> u32 {
        let mut m = 0;
        let mut p = self.clone();
        while let Some(q) = p.div_exact(d) {
            m += 1;
            p = q;
            if p.is_zero() {
                break;
            }
        }
        m
    }

    /// Pseudo-remainder `prem(self, d)` adjusted so that it equals
    /// `c * (self mod d)` with `c > 0`.
    pub fn signed_pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero());
        let mut r = self.clone();
        if r.is_zero() || r.degree() < d.degree() {
            return r;
        }
        let delta = r.degree() - d.degree() + 1;
        let mut mult_sign = 1i32;
        let lc = d.lc().clone();
        let lc_neg = lc.is_negative();
        let mut steps = 0usize;
        while !r.is_zero() && r.degree() >= d.degree() {
            let k = r.degree() - d.degree();
            let rl = r.lc().clone();
            // r <- lc(d) * r - rl * x^k * d
            let mut v = vec![BigInt::zero(); r.coeffs.len()];
            for (i, c) in r.coeffs.iter().enumerate() {
                v[i] = c * &lc;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                v[k + j] -= &rl * c;
            }
            if lc_neg {
                mult_sign = -mult_sign;
            }
            r = IntPoly::new(v);
            steps += 1;
            if steps > delta {
                break;
            }
        }
        if mult_sign < 0 {
            r.neg()
        } else {
            r
        }
    }

    /// Max |coefficient|.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Cauchy bound: every real root lies in `(-B, B)` with
    /// `B = 1 + height / |lc|`.
    pub fn root_bound(&self) -> BigRational {
        assert!(!self.is_zero());
        let h = self.height();
        BigRational::one() + BigRational::new(h, self.lc().abs())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Newton power sums p_1..p_k of the roots (monic input).
    pub fn power_sums(&self, k: usize) -> Vec<BigRational> {
        assert!(self.is_monic());
        let d = self.degree();
        // e_i = (-1)^i * a_{d-i} for monic p = sum a_j x^j
        let e = |i: usize| -> BigRational {
            if i > d {
                BigRational::zero()
            } else {
                let c = BigRational::from_integer(self.coeffs[d - i].clone());
                if i % 2 == 1 {
                    -c
                } else {
                    c
                }
            }
        };
        let mut p = vec![BigRational::zero(); k + 1];
        for m in 1..=k {
            // p_m = (-1)^{m-1} m e_m + sum_{i=1}^{m-1} (-1)^{m-1-i} e_{m-i} p_i
            let mut s = e(m) * BigRational::from_integer(BigInt::from(m as i64));
            if (m - 1) % 2 == 1 {
                s = -s;
            }
            for i in 1..m {
                let t = e(m - i) * &p[i];
                if (m - 1 - i) % 2 == 1 {
                    s -= t;
                } else {
                    s += t;
                }
            }
            p[m] = s;
        }
        p
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expanded())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expanded())
    }
}

impl IntPoly {
    /// Expanded text form, e.g. `x^4 - 36*x^3 + 454*x^2 - 2356*x + 4241`.
    pub fn expanded(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for k in (0..=self.degree()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && k > 0 {
                String::new()
            } else {
                mag.to_string()
            };
            let var_part = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (coeff_part.is_empty(), var_part.is_empty()) {
                (true, _) => out.push_str(&var_part),
                (_, true) => out.push_str(&coeff_part),
                _ => {
                    out.push_str(&coeff_part);
                    out.push('*');
                    out.push_str(&var_part);
                }
            }
        }
        out
    }

    /// Compact form without spaces, used inside factored output.
    fn compact(&self) -> String {
        self.expanded().replace(' ', "")
    }
}

/// Dense rational polynomial; `num-rational` keeps every coefficient in
/// lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        assert!(!self.is_zero(), "degree of zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn lc(&self) -> &BigRational {
        self.coeffs.last().expect("lc of zero polynomial")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }

    pub fn mul_scalar(&self, s: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero());
        let mut r = self.coeffs.clone();
        if self.is_zero() || self.degree() < d.degree() {
            return (RatPoly::zero(), self.clone());
        }
        let n = self.degree();
        let m = d.degree();
        let mut q = vec![BigRational::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let qc = &r[k + m] / d.lc();
            if qc.is_zero() {
                continue;
            }
            for j in 0..=m {
                let t = &qc * &d.coeffs[j];
                r[k + j] -= t;
            }
            q[k] = qc;
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.div_rem(d).1
    }

    /// Clear denominators to a primitive integer polynomial (sign preserved up
    /// to the returned positive scalar): `self = (num / den) * primitive`.
    pub fn to_int_primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        IntPoly::new(ints).primitive_part()
    }

    /// Exact conversion to an integer polynomial (all denominators 1).
    pub fn to_int_exact(&self) -> Option<IntPoly> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            v.push(c.numer().clone());
        }
        Some(IntPoly::new(v))
    }

    pub fn monic(&self) -> RatPoly {
        assert!(!self.is_zero());
        let l = self.lc().clone();
        RatPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn derivative(&self) -> RatPoly {
        if self.is_zero() || self.degree() == 0 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }
}

/// A polynomial kept in factored form: `content * prod factors[i]^mult[i]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredPoly {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl FactoredPoly {
    pub fn from_parts(content: BigInt, factors: Vec<(IntPoly, u32)>) -> Self {
        let mut fp = FactoredPoly { content, factors };
        fp.sort_canonical();
        fp
    }

    pub fn expand(&self) -> IntPoly {
        let mut p = IntPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            p = p.mul(&f.pow(*m));
        }
        p
    }

    /// Canonical order: ascending smallest real root; factors with no real
    /// root sort last by (degree, coefficients).
    pub fn sort_canonical(&mut self) {
        use std::cmp::Ordering;
        let mut keyed: Vec<(Option<AlgebraicRoot>, IntPoly, u32)> = self
            .factors
            .drain(..)
            .map(|(f, m)| (interlace::smallest_real_root(&f), f, m))
            .collect();
        keyed.sort_by(|a, b| match (&a.0, &b.0) {
            (Some(ra), Some(rb)) => cmp_algebraic(ra, rb),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => (a.1.degree(), a.1.coeffs())
                .cmp(&(b.1.degree(), b.1.coeffs())),
        });
        self.factors = keyed.into_iter().map(|(_, f, m)| (f, m)).collect();
    }

    /// Factored text form, e.g. `(x+5)^32*(x-9)^13*(x^2-21*x+92)`.
    pub fn factored(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.content.is_one() || self.factors.is_empty() {
            parts.push(self.content.to_string());
        }
        for (f, m) in &self.factors {
            let base = format!("({})", f.compact());
            if *m == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{m}"));
            }
        }
        parts.join("*")
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factored())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{big, rat};

    #[test]
    fn basic_arith() {
        let p = IntPoly::from_desc_i64(&[1, -3, 2]); // x^2 - 3x + 2
        let q = IntPoly::from_desc_i64(&[1, -1]); // x - 1
        assert_eq!(p.div_exact(&q), Some(IntPoly::from_desc_i64(&[1, -2])));
        assert_eq!(p.eval_i64(3), big(2));
        assert_eq!(p.derivative(), IntPoly::from_desc_i64(&[2, -3]));
        assert!(IntPoly::from_desc_i64(&[1, -2]).divides(&p));
        assert!(!IntPoly::from_desc_i64(&[1, -5]).divides(&p));
    }

    #[test]
    fn taylor_shift_matches_eval() {
        let p = IntPoly::from_desc_i64(&[2, 0, -7, 3, 11]);
        let s = p.taylor_shift(&big(-1)); // p(x - 1)
        for x in -5..=5 {
            assert_eq!(s.eval_i64(x), p.eval_i64(x - 1));
        }
    }

    #[test]
    fn power_sums_monic() {
        // (x-1)(x-2)(x-3): p1 = 6, p2 = 14, p3 = 36
        let p = IntPoly::from_desc_i64(&[1, -6, 11, -6]);
        let ps = p.power_sums(3);
        assert_eq!(ps[1], rat(6, 1));
        assert_eq!(ps[2], rat(14, 1));
        assert_eq!(ps[3], rat(36, 1));
    }

    #[test]
    fn display_expanded() {
        let p = IntPoly::from_desc_i64(&[1, -36, 454, -2356, 4241]);
        assert_eq!(p.expanded(), "x^4 - 36*x^3 + 454*x^2 - 2356*x + 4241");
        assert_eq!(IntPoly::from_desc_i64(&[1, 5]).expanded(), "x + 5");
        assert_eq!(IntPoly::from_desc_i64(&[-1, 0]).expanded(), "-x");
    }

    #[test]
    fn signed_pseudo_rem_sign() {
        // rem of x^3 by (x - 2) is 8 > 0; the signed pseudo-remainder must
        // agree in sign whatever the internal multipliers were.
        let a = IntPoly::from_desc_i64(&[1, 0, 0, 0]);
        let b = IntPoly::from_desc_i64(&[-2, 4]); // -2x + 4, root 2, negative lc
        let r = a.signed_pseudo_rem(&b);
        assert_eq!(r.coeffs().len(), 1);
        assert!(r.coeffs()[0].is_positive());
    }
}
