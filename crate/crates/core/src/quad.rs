//! Real quadratic field elements `a + b*sqrt(D)`, square detection, minimal
//! polynomials of algebraic expressions, and small-degree Galois groups.

use crate::num::{big, perfect_square, rat_sqrt, squarefree_decompose, BigInt, BigRational};
use crate::poly::{factor_q, is_irreducible, IntPoly, RatPoly};
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuadError {
    #[error("modulus is reducible over Q")]
    ReducibleModulus,
    #[error("polynomial is reducible over Q")]
    Reducible,
    #[error("mixed radicands {0} and {1}")]
    MixedRadicands(u64, u64),
}

/// Element `a + b*sqrt(d)` of a real quadratic field; `d` squarefree, `> 1`.
/// Rational numbers are carried as `b = 0` (any `d`).
#[derive(Clone, PartialEq, Eq)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
    pub d: u64,
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl QuadElem {
    pub fn new(a: BigRational, b: BigRational, d: u64) -> QuadElem {
        let (s, _) = squarefree_decompose(&big(d as i64));
        assert!(d > 1, "radicand must exceed 1");
        assert_eq!(s, big(d as i64), "radicand must be squarefree");
        QuadElem { a, b, d }
    }

    pub fn rational(a: BigRational, d: u64) -> QuadElem {
        QuadElem {
            a,
            b: BigRational::zero(),
            d,
        }
    }

    pub fn zero(d: u64) -> QuadElem {
        QuadElem::rational(BigRational::zero(), d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Rational value when `b = 0`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    pub fn conj(&self) -> QuadElem {
        QuadElem {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    pub fn trace(&self) -> BigRational {
        &self.a + &self.a
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(big(self.d as i64))
    }

    fn check_same(&self, other: &QuadElem) -> u64 {
        if self.d != other.d && !self.b.is_zero() && !other.b.is_zero() {
            panic!("mixed radicands {} and {}", self.d, other.d);
        }
        if self.b.is_zero() {
            other.d
        } else {
            self.d
        }
    }

    pub fn add(&self, other: &QuadElem) -> QuadElem {
        let d = self.check_same(other);
        QuadElem {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            d,
        }
    }

    pub fn sub(&self, other: &QuadElem) -> QuadElem {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QuadElem {
        QuadElem {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    pub fn mul(&self, other: &QuadElem) -> QuadElem {
        let d = self.check_same(other);
        let dd = BigRational::from_integer(big(d as i64));
        QuadElem {
            a: &self.a * &other.a + &self.b * &other.b * dd,
            b: &self.a * &other.b + &self.b * &other.a,
            d,
        }
    }

    pub fn mul_rat(&self, s: &BigRational) -> QuadElem {
        QuadElem {
            a: &self.a * s,
            b: &self.b * s,
            d: self.d,
        }
    }

    pub fn inv(&self) -> QuadElem {
        let n = self.norm();
        assert!(!n.is_zero(), "inverse of zero");
        self.conj().mul_rat(&n.recip())
    }

    pub fn div(&self, other: &QuadElem) -> QuadElem {
        self.mul(&other.inv())
    }

    /// Sign under the embedding with `sqrt(d) > 0`.
    pub fn sign(&self) -> i32 {
        let sa = if self.a.is_positive() {
            1
        } else if self.a.is_negative() {
            -1
        } else {
            0
        };
        let sb = if self.b.is_positive() {
            1
        } else if self.b.is_negative() {
            -1
        } else {
            0
        };
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // opposite signs: compare a^2 with b^2 d
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(big(self.d as i64));
        match a2.cmp(&b2d) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// True iff the element is a rational integer.
    pub fn is_integer(&self) -> bool {
        self.b.is_zero() && self.a.denom().is_one()
    }

    /// Minimal polynomial over Q (degree 1 when rational, else 2, primitive).
    pub fn min_poly(&self) -> IntPoly {
        if self.is_rational() {
            // x - a, cleared: denom*x - numer
            IntPoly::new(vec![-self.a.numer().clone(), self.a.denom().clone()])
        } else {
            let t = self.trace();
            let n = self.norm();
            RatPoly::new(vec![n, -t, BigRational::one()]).to_int_primitive()
        }
    }
}

/// Exact square root inside the quadratic field: `Some(s)` with `s^2 = e`
/// and `s >= 0` under the real embedding, or `None` when `e` is not a square
/// in `Q(sqrt(d))`.
pub fn sqrt_in_quadratic(e: &QuadElem) -> Option<QuadElem> {
    assert!(e.sign() >= 0, "square root of a negative element");
    if e.is_zero() {
        return Some(QuadElem::zero(e.d));
    }
    let d_rat = BigRational::from_integer(big(e.d as i64));
    if e.b.is_zero() {
        // s = u rational or s = v*sqrt(d)
        if let Some(u) = rat_sqrt(&e.a) {
            return Some(QuadElem::rational(u, e.d));
        }
        if let Some(v) = rat_sqrt(&(&e.a / &d_rat)) {
            return Some(QuadElem::new(BigRational::zero(), v, e.d));
        }
        return None;
    }
    // (u + v sqrt(d))^2 = u^2 + v^2 d + 2uv sqrt(d):
    //   u^2 + d v^2 = a,  2uv = b  =>  4u^4 - 4a u^2 + d b^2 = 0
    //   u^2 = (a ± sqrt(a^2 - d b^2)) / 2 = (a ± sqrt(norm)) / 2
    let n = e.norm();
    let r = rat_sqrt(&n)?;
    for root in [&r, &(-r.clone())] {
        let u2 = (&e.a + root) / BigRational::from_integer(big(2));
        if u2.is_negative() {
            continue;
        }
        if let Some(u) = rat_sqrt(&u2) {
            if u.is_zero() {
                continue;
            }
            let v = &e.b / (BigRational::from_integer(big(2)) * &u);
            let s = QuadElem::new(u, v, e.d);
            debug_assert_eq!(s.mul(&s), *e);
            return Some(if s.sign() >= 0 { s } else { s.neg() });
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Minimal polynomials of algebraic expressions
// ---------------------------------------------------------------------------

/// Minimal polynomial over Q of `h(lambda)` for `lambda` a root of the
/// irreducible polynomial `xi`: the characteristic polynomial of
/// multiplication-by-`h` on `Q[x]/(xi)` is a power of it.
pub fn minpoly_mod(h: &RatPoly, xi: &IntPoly) -> Result<IntPoly, QuadError> {
    if !is_irreducible(xi) {
        return Err(QuadError::ReducibleModulus);
    }
    let m = xi.degree();
    let xi_rat = xi.to_rat().monic();
    let h = h.rem(&xi_rat);
    // Columns of the multiplication matrix: h * x^j mod xi.
    let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut cur = h.clone();
    for _ in 0..m {
        let mut col = vec![BigRational::zero(); m];
        for (i, c) in cur.coeffs().iter().enumerate() {
            col[i] = c.clone();
        }
        cols.push(col);
        // cur <- cur * x mod xi
        let mut shifted = vec![BigRational::zero()];
        shifted.extend(cur.coeffs().iter().cloned());
        cur = RatPoly::new(shifted).rem(&xi_rat);
    }
    let charpoly = char_poly_rational(&cols);
    let prim = charpoly.to_int_primitive();
    let (_, factors) = factor_q(&prim);
    // xi irreducible makes all h(lambda_i) conjugate: every factor is equal.
    let rho = factors[0].0.clone();
    debug_assert!(factors.iter().all(|(f, _)| *f == rho));
    Ok(rho)
}

/// Characteristic polynomial of a small rational matrix (columns given),
/// monic, via exact Faddeev-LeVerrier.
fn char_poly_rational(cols: &[Vec<BigRational>]) -> RatPoly {
    let n = cols.len();
    let at = |m: &Vec<Vec<BigRational>>, i: usize, j: usize| m[j][i].clone();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    // M_1 = A, c_{n-1} = -tr(A); M_{k+1} = A (M_k + c I)
    let a = cols.to_vec();
    let mut mk = a.clone();
    let mut ck;
    for k in 1..=n {
        let mut tr = BigRational::zero();
        for i in 0..n {
            tr += at(&mk, i, i);
        }
        ck = -tr / BigRational::from_integer(big(k as i64));
        coeffs[n - k] = ck.clone();
        if k == n {
            break;
        }
        // mk <- A * (mk + ck I)
        let mut shifted = mk.clone();
        for i in 0..n {
            let v = at(&shifted, i, i) + &ck;
            shifted[i][i] = v;
        }
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for j in 0..n {
            for i in 0..n {
                let mut s = BigRational::zero();
                for t in 0..n {
                    s += at(&a, i, t) * at(&shifted, t, j);
                }
                next[j][i] = s;
            }
        }
        mk = next;
    }
    RatPoly::new(coeffs)
}

// ---------------------------------------------------------------------------
// Small-degree Galois groups
// ---------------------------------------------------------------------------

/// Galois group of an irreducible polynomial of degree <= 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum GaloisGroup {
    C1,
    S2,
    C3,
    S3,
    C4,
    V4,
    D4,
    A4,
    S4,
}

impl GaloisGroup {
    pub fn order(&self) -> u32 {
        match self {
            GaloisGroup::C1 => 1,
            GaloisGroup::S2 => 2,
            GaloisGroup::C3 => 3,
            GaloisGroup::S3 => 6,
            GaloisGroup::C4 => 4,
            GaloisGroup::V4 => 4,
            GaloisGroup::D4 => 8,
            GaloisGroup::A4 => 12,
            GaloisGroup::S4 => 24,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GaloisGroup::C1 => "C1",
            GaloisGroup::S2 => "S2",
            GaloisGroup::C3 => "C3",
            GaloisGroup::S3 => "S3",
            GaloisGroup::C4 => "C4",
            GaloisGroup::V4 => "V4",
            GaloisGroup::D4 => "D4",
            GaloisGroup::A4 => "A4",
            GaloisGroup::S4 => "S4",
        }
    }
}

/// Result of `galois_order_small`: decided group or `Undecided` past degree 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum GaloisOutcome {
    Decided(GaloisGroup),
    Undecided,
}

/// Exact Galois group for irreducible polynomials of degree <= 4 via the
/// discriminant-square test (degrees 2, 3) and resolvent-cubic
/// classification (degree 4); `Undecided` beyond degree 4.
pub fn galois_order_small(p: &IntPoly) -> Result<GaloisOutcome, QuadError> {
    if !is_irreducible(p) {
        return Err(QuadError::Reducible);
    }
    let deg = p.degree();
    if deg > 4 {
        return Ok(GaloisOutcome::Undecided);
    }
    let mp = p.to_rat().monic();
    let group = match deg {
        1 => GaloisGroup::C1,
        2 => GaloisGroup::S2,
        3 => {
            let disc = discriminant(&mp);
            if rat_sqrt(&disc).is_some() {
                GaloisGroup::C3
            } else {
                GaloisGroup::S3
            }
        }
        4 => quartic_group(&mp),
        _ => unreachable!(),
    };
    Ok(GaloisOutcome::Decided(group))
}

/// Discriminant of a monic rational polynomial via the derivative resultant.
pub fn discriminant(p: &RatPoly) -> BigRational {
    let n = p.degree();
    let r = resultant(p, &p.derivative());
    let sign = if (n * (n - 1) / 2) % 2 == 1 { -1 } else { 1 };
    r * BigRational::from_integer(big(sign))
}

/// Resultant of two rational polynomials (Sylvester determinant by exact
/// Gaussian elimination).
pub fn resultant(f: &RatPoly, g: &RatPoly) -> BigRational {
    assert!(!f.is_zero() && !g.is_zero());
    let n = f.degree();
    let m = g.degree();
    if n == 0 {
        return pow_rat(f.lc(), m as u32);
    }
    if m == 0 {
        return pow_rat(g.lc(), n as u32);
    }
    let size = n + m;
    let mut mat = vec![vec![BigRational::zero(); size]; size];
    for row in 0..m {
        for (k, c) in f.coeffs().iter().enumerate() {
            mat[row][row + n - k] = c.clone();
        }
    }
    for row in 0..n {
        for (k, c) in g.coeffs().iter().enumerate() {
            mat[m + row][row + m - k] = c.clone();
        }
    }
    // exact determinant
    let mut det = BigRational::one();
    for col in 0..size {
        let piv = (col..size).find(|&r| !mat[r][col].is_zero());
        let piv = match piv {
            Some(r) => r,
            None => return BigRational::zero(),
        };
        if piv != col {
            mat.swap(piv, col);
            det = -det;
        }
        let pv = mat[col][col].clone();
        det *= &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            for c in col..size {
                let t = &mat[col][c] * &factor;
                mat[r][c] -= t;
            }
        }
    }
    det
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn quartic_group(p: &RatPoly) -> GaloisGroup {
    // p = x^4 + a x^3 + b x^2 + c x + d
    let a = p.coeff(3);
    let b = p.coeff(2);
    let c = p.coeff(1);
    let d = p.coeff(0);
    // resolvent cubic: y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4 b d + c^2)
    let resolvent = RatPoly::new(vec![
        -(&a * &a * &d - BigRational::from_integer(big(4)) * &b * &d + &c * &c),
        &a * &c - BigRational::from_integer(big(4)) * &d,
        -b.clone(),
        BigRational::one(),
    ]);
    let disc = discriminant(p);
    let disc_square = rat_sqrt(&disc).is_some();
    let res_int = resolvent.to_int_primitive();
    let (_, factors) = factor_q(&res_int);
    let rational_roots: Vec<BigRational> = factors
        .iter()
        .filter(|(f, _)| f.degree() == 1)
        .map(|(f, _)| {
            -BigRational::new(f.coeff(0), f.coeff(1))
        })
        .collect();
    match rational_roots.len() {
        0 => {
            if disc_square {
                GaloisGroup::A4
            } else {
                GaloisGroup::S4
            }
        }
        3 => GaloisGroup::V4,
        1 => {
            // C4 vs D4 (Kappe-Warren): C4 iff both x^2 - beta x + d and
            // x^2 + a x + (b - beta) split over Q(sqrt(disc)).
            let beta = &rational_roots[0];
            let d1 = beta * beta - BigRational::from_integer(big(4)) * &d;
            let d2 = &a * &a - BigRational::from_integer(big(4)) * (&b - beta);
            if splits_over(&d1, &disc) && splits_over(&d2, &disc) {
                GaloisGroup::C4
            } else {
                GaloisGroup::D4
            }
        }
        _ => unreachable!("resolvent cubic of an irreducible quartic"),
    }
}

/// True iff a quadratic with discriminant `d0` splits over `Q(sqrt(disc))`.
fn splits_over(d0: &BigRational, disc: &BigRational) -> bool {
    if d0.is_zero() || rat_sqrt(d0).is_some() {
        return true;
    }
    let prod = d0 * disc;
    !prod.is_negative() && rat_sqrt(&prod).is_some()
}

/// Quadratic root bookkeeping: for a monic irreducible `x^2 - t x + m`, the
/// roots are `(t ± sqrt(disc)) / 2` with `disc = t^2 - 4m = d * k^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticRoots {
    pub xi: IntPoly,
    /// squarefree radicand
    pub d: u64,
    /// roots are (t ± k sqrt(d)) / 2
    pub t: BigInt,
    pub k: BigInt,
}

impl QuadraticRoots {
    /// Decompose a monic integer quadratic with positive non-square
    /// discriminant.
    pub fn new(xi: &IntPoly) -> Option<QuadraticRoots> {
        if xi.is_zero() || xi.degree() != 2 || !xi.is_monic() {
            return None;
        }
        let t = -xi.coeff(1);
        let m = xi.coeff(0);
        let disc = &t * &t - big(4) * &m;
        if !disc.is_positive() || perfect_square(&disc).is_some() {
            return None;
        }
        let (s, k) = squarefree_decompose(&disc);
        let d = crate::num::to_i64(&s) as u64;
        Some(QuadraticRoots {
            xi: xi.clone(),
            d,
            t,
            k,
        })
    }

    /// The root `(t - k sqrt(d))/2` (index 0) or `(t + k sqrt(d))/2` (index 1).
    pub fn root(&self, index: usize) -> QuadElem {
        let half = BigRational::new(big(1), big(2));
        let sign = if index == 0 { -1 } else { 1 };
        QuadElem::new(
            BigRational::from_integer(self.t.clone()) * &half,
            BigRational::from_integer(&self.k * big(sign)) * &half,
            self.d,
        )
    }

    /// Evaluate an integer polynomial at the given root.
    pub fn eval_poly(&self, p: &IntPoly, index: usize) -> QuadElem {
        let root = self.root(index);
        let mut acc = QuadElem::zero(self.d);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(&root).add(&QuadElem::rational(
                BigRational::from_integer(c.clone()),
                self.d,
            ));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};
    use crate::poly::parse_poly;

    fn poly(desc: &[i64]) -> IntPoly {
        IntPoly::from_desc_i64(desc)
    }

    #[test]
    fn sqrt_rational_cases() {
        let four = QuadElem::rational(rat_int(4), 73);
        assert_eq!(sqrt_in_quadratic(&four).unwrap().as_rational(), Some(rat_int(2)));
    }

    #[test]
    fn sqrt_paper_h_example() {
        // xi = x^2 - 21x + 92, lambda = (21 - sqrt(73))/2.
        // e = 1107*lambda - 6363 must be (9*lambda - 33)^2.
        let xi = poly(&[1, -21, 92]);
        let roots = QuadraticRoots::new(&xi).unwrap();
        assert_eq!(roots.d, 73);
        let lam = roots.root(0);
        let e = lam.mul_rat(&rat_int(1107)).add(&QuadElem::rational(rat_int(-6363), 73));
        let s = sqrt_in_quadratic(&e).expect("is a square");
        let h_at_lam = lam.mul_rat(&rat_int(9)).add(&QuadElem::rational(rat_int(-33), 73));
        assert!(s == h_at_lam || s == h_at_lam.neg());
        // oracle: reduce (9x-33)^2 - (1107x - 6363) mod xi must vanish
        let h2 = poly(&[9, -33]).pow(2).sub(&poly(&[1107, -6363]));
        let rem = h2.to_rat().rem(&xi.to_rat());
        assert!(rem.is_zero());
    }

    #[test]
    fn minpoly_of_fg_first_example() {
        // f, g of the worked compatibility example over xi = x^2-21x+92:
        // rho = x^2 - 10521x + 5308416.
        let f = poly(&[1, -36, 454, -2356, 4241]);
        let g = poly(&[1, -36, 454, -2348, 4169]);
        let xi = poly(&[1, -21, 92]);
        let rho = minpoly_mod(&f.mul(&g).to_rat(), &xi).unwrap();
        assert_eq!(rho, poly(&[1, -10521, 5308416]));
    }

    #[test]
    fn minpoly_of_fg_second_example() {
        let f = poly(&[1, -38, 508, -2810, 5363]);
        let g = poly(&[1, -38, 508, -2802, 5291]);
        let xi = poly(&[1, -23, 116]);
        let rho = minpoly_mod(&f.mul(&g).to_rat(), &xi).unwrap();
        assert_eq!(rho, poly(&[1, -11105, 1433600]));
    }

    #[test]
    fn minpoly_constant() {
        let xi = poly(&[1, -21, 92]);
        let rho = minpoly_mod(&RatPoly::constant(rat(7, 1)), &xi).unwrap();
        assert_eq!(rho, poly(&[1, -7]));
    }

    #[test]
    fn galois_small_cases() {
        // paper: rho = x^2 - 11105x + 1433600 has G = S2,
        // rho(x^2) has H = D4.
        let rho = poly(&[1, -11105, 1433600]);
        assert_eq!(
            galois_order_small(&rho).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::S2)
        );
        assert_eq!(
            galois_order_small(&rho.compose_x2()).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::D4)
        );
        // x^3 - 3x - 1: discriminant 81, cyclic
        assert_eq!(
            galois_order_small(&poly(&[1, 0, -3, -1])).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::C3)
        );
        // x^3 - 2: S3
        assert_eq!(
            galois_order_small(&poly(&[1, 0, 0, -2])).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::S3)
        );
        // x^4 + 1: V4; x^4 - 2: D4; x^4 + 8x + 12: A4; x^4 - x - 1: S4;
        // x^4 + x^3 + x^2 + x + 1: C4
        assert_eq!(
            galois_order_small(&poly(&[1, 0, 0, 0, 1])).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::V4)
        );
        assert_eq!(
            galois_order_small(&poly(&[1, 0, 0, 0, -2])).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::D4)
        );
        assert_eq!(
            galois_order_small(&poly(&[1, 0, 0, 8, 12])).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::A4)
        );
        assert_eq!(
            galois_order_small(&poly(&[1, 0, 0, -1, -1])).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::S4)
        );
        assert_eq!(
            galois_order_small(&parse_poly("x^4+x^3+x^2+x+1").unwrap()).unwrap(),
            GaloisOutcome::Decided(GaloisGroup::C4)
        );
        // degree 5: undecided
        assert_eq!(
            galois_order_small(&poly(&[1, 0, 0, 0, 0, -2])).unwrap(),
            GaloisOutcome::Undecided
        );
        // reducible input is an error
        assert!(galois_order_small(&poly(&[1, 0, -1])).is_err());
    }

    #[test]
    fn quad_sign() {
        // 21 - sqrt(73) > 0 ; 8 - sqrt(73) < 0
        let x = QuadElem::new(rat_int(21), rat_int(-1), 73);
        assert_eq!(x.sign(), 1);
        let y = QuadElem::new(rat_int(8), rat_int(-1), 73);
        assert_eq!(y.sign(), -1);
    }
}
