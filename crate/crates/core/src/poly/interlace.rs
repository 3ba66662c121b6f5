//! Exact comparison of real algebraic numbers and the interlacing predicate.

use super::sturm::{common_root_in, isolate_roots, RootInterval};
use super::{is_totally_real, IntPoly};
use crate::num::BigRational;
use std::cmp::Ordering;

/// A real algebraic number: one isolated root of a squarefree polynomial.
#[derive(Clone, Debug)]
pub struct AlgebraicRoot {
    pub poly: IntPoly,
    pub interval: RootInterval,
}

impl AlgebraicRoot {
    pub fn refine(&mut self) {
        // The single root in a squarefree isolating interval is simple, so the
        // polynomial changes sign across it and plain bisection applies.
        let two = BigRational::from_integer(2.into());
        let mut m = (&self.interval.lo + &self.interval.hi) / &two;
        let mut step = self.interval.width() / BigRational::from_integer(4.into());
        while self.poly.sign_at(&m) == 0 {
            m += &step;
            step /= &two;
        }
        let slo = self.poly.sign_at(&self.interval.lo);
        let sm = self.poly.sign_at(&m);
        if slo != sm {
            self.interval.hi = m;
        } else {
            self.interval.lo = m;
        }
    }
}

/// All real roots of `p` as algebraic numbers (distinct roots of the
/// squarefree part, ascending).
pub fn real_roots(p: &IntPoly) -> Vec<AlgebraicRoot> {
    let iso = isolate_roots(p);
    let sf = iso.poly().clone();
    iso.intervals
        .into_iter()
        .map(|interval| AlgebraicRoot {
            poly: sf.clone(),
            interval,
        })
        .collect()
}

pub fn smallest_real_root(p: &IntPoly) -> Option<AlgebraicRoot> {
    real_roots(p).into_iter().next()
}

/// Exact order comparison of two real algebraic numbers.
///
/// Termination relies on shared roots being detectable: after a few rounds of
/// refinement a gcd check decides equality, so the inputs may be arbitrary
/// squarefree polynomials.
pub fn cmp_algebraic(a: &AlgebraicRoot, b: &AlgebraicRoot) -> Ordering {
    let mut a = a.clone();
    let mut b = b.clone();
    for round in 0.. {
        if a.interval.hi <= b.interval.lo {
            return Ordering::Less;
        }
        if b.interval.hi <= a.interval.lo {
            return Ordering::Greater;
        }
        if round % 3 == 2 {
            let lo = a.interval.lo.clone().max(b.interval.lo.clone());
            let hi = a.interval.hi.clone().min(b.interval.hi.clone());
            // The overlap endpoints are non-roots of both polynomials, so a
            // shared root in the closed overlap lies strictly inside.
            if lo < hi && common_root_in(&a.poly, &b.poly, &lo, &hi) {
                return Ordering::Equal;
            }
        }
        a.refine();
        b.refine();
    }
    unreachable!()
}

/// The interlacing relation on totally real polynomials:
/// `deg f = deg g + 1` and, for ascending roots with multiplicity
/// `l_0 <= ... <= l_e` of `f` and `m_1 <= ... <= m_e` of `g`,
/// `l_0 <= m_1 <= l_1 <= ... <= m_e <= l_e` (weak inequalities).
pub fn interlaces(g: &IntPoly, f: &IntPoly) -> bool {
    assert!(!f.is_zero() && !g.is_zero());
    assert_eq!(
        f.degree(),
        g.degree() + 1,
        "interlaces requires deg f = deg g + 1"
    );
    if !is_totally_real(f) || !is_totally_real(g) {
        return false;
    }
    // Equivalent counting form: for all t, the number of f-roots <= t exceeds
    // the number of g-roots <= t by 0 or 1 (multiplicities included).
    let mut events: Vec<(AlgebraicRoot, u64, u64)> = Vec::new();
    for (part, mult) in super::gcd::squarefree_decomposition(f) {
        for r in real_roots(&part) {
            events.push((r, mult as u64, 0));
        }
    }
    for (part, mult) in super::gcd::squarefree_decomposition(g) {
        for r in real_roots(&part) {
            events.push((r, 0, mult as u64));
        }
    }
    // Exact sort; equal events merge their multiplicities.
    events.sort_by(|x, y| cmp_algebraic(&x.0, &y.0));
    let mut i = 0usize;
    let mut nf: i64 = 0;
    let mut ng: i64 = 0;
    while i < events.len() {
        let mut mf = events[i].1 as i64;
        let mut mg = events[i].2 as i64;
        let mut j = i + 1;
        while j < events.len() && cmp_algebraic(&events[i].0, &events[j].0) == Ordering::Equal {
            mf += events[j].1 as i64;
            mg += events[j].2 as i64;
            j += 1;
        }
        nf += mf;
        ng += mg;
        let diff = nf - ng;
        if diff < 0 || diff > 1 {
            return false;
        }
        i = j;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(desc: &[i64]) -> IntPoly {
        IntPoly::from_desc_i64(desc)
    }

    #[test]
    fn simple_interlacing() {
        // g = x-1 interlaces f = x(x-2)
        assert!(interlaces(&poly(&[1, -1]), &poly(&[1, -2, 0])));
        // g = x-3 does not interlace f = (x-1)(x-2)
        assert!(!interlaces(&poly(&[1, -3]), &poly(&[1, -3, 2])));
    }

    #[test]
    fn shared_roots_weak() {
        // g = (x-1) interlaces f = (x-1)^2
        assert!(interlaces(&poly(&[1, -1]), &poly(&[1, -2, 1])));
        // g = (x-1)(x-5) does not interlace f = (x-1)^3
        let f = poly(&[1, -1]).pow(3);
        let g = poly(&[1, -1]).mul(&poly(&[1, -5]));
        assert!(!interlaces(&g, &f));
    }

    #[test]
    fn paper_reduced_parts() {
        // f_part = x^4-36x^3+454x^2-2356x+4241 interlaces
        // Min = (x+5)(x-9)(x-11)(x^2-21x+92)
        let g = poly(&[1, -36, 454, -2356, 4241]);
        let f = poly(&[1, 5])
            .mul(&poly(&[1, -9]))
            .mul(&poly(&[1, -11]))
            .mul(&poly(&[1, -21, 92]));
        assert!(interlaces(&g, &f));
    }

    #[test]
    fn algebraic_ordering() {
        // sqrt(2) < 3/2 < sqrt(3)
        let r2 = smallest_real_root(&poly(&[1, 0, -2])).unwrap();
        let r3 = smallest_real_root(&poly(&[1, 0, -3])).unwrap();
        // smallest roots are the negative ones
        assert_eq!(cmp_algebraic(&r3, &r2), Ordering::Less);
        let p2 = real_roots(&poly(&[1, 0, -2]))[1].clone();
        let p3 = real_roots(&poly(&[1, 0, -3]))[1].clone();
        assert_eq!(cmp_algebraic(&p2, &p3), Ordering::Less);
        // equality across equal polynomials
        let a = real_roots(&poly(&[1, 0, -2]))[1].clone();
        let b = real_roots(&poly(&[2, 0, -4]))[1].clone();
        assert_eq!(cmp_algebraic(&a, &b), Ordering::Equal);
    }
}
