//! Sturm chains, exact real-root counting, and root isolation with rational
//! interval endpoints.

use super::gcd::{poly_gcd, squarefree_part};
use super::IntPoly;
use crate::num::BigRational;
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SturmError {
    #[error("interval endpoint is a root of the polynomial")]
    EndpointIsRoot,
    #[error("empty interval")]
    EmptyInterval,
}

/// Interval endpoint, allowing the two infinities.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

/// Sturm chain of the squarefree part of a polynomial.
///
/// Sign-variation differences therefore count *distinct* real roots.
pub struct SturmChain {
    sf: IntPoly,
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> SturmChain {
        assert!(!p.is_zero(), "Sturm chain of zero polynomial");
        let sf = squarefree_part(p);
        let mut chain = vec![sf.clone()];
        if sf.degree() >= 1 {
            chain.push(sf.derivative().primitive_keep_sign());
            loop {
                let k = chain.len();
                let r = chain[k - 2].signed_pseudo_rem(&chain[k - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(r.neg().primitive_keep_sign());
                if chain.last().unwrap().degree() == 0 {
                    break;
                }
            }
        }
        SturmChain { sf, chain }
    }

    pub fn squarefree(&self) -> &IntPoly {
        &self.sf
    }

    fn variations_at(&self, b: &Bound) -> usize {
        let mut last = 0i32;
        let mut v = 0usize;
        for p in &self.chain {
            let s = match b {
                Bound::Finite(x) => p.sign_at(x),
                Bound::PosInf => {
                    if p.lc().is_positive() {
                        1
                    } else {
                        -1
                    }
                }
                Bound::NegInf => {
                    let s = if p.lc().is_positive() { 1 } else { -1 };
                    if p.is_zero() || p.degree() % 2 == 0 {
                        s
                    } else {
                        -s
                    }
                }
            };
            if s != 0 {
                if last != 0 && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct real roots in the half-open interval `(lo, hi]`.
    /// Finite endpoints must not be roots of the squarefree part, so the
    /// count is also the open-interval count.
    pub fn count_open(&self, lo: &Bound, hi: &Bound) -> Result<usize, SturmError> {
        for b in [lo, hi] {
            if let Bound::Finite(x) = b {
                if self.sf.sign_at(x) == 0 {
                    return Err(SturmError::EndpointIsRoot);
                }
            }
        }
        match (lo, hi) {
            (Bound::Finite(a), Bound::Finite(b)) if a >= b => {
                return Err(SturmError::EmptyInterval)
            }
            (Bound::PosInf, _) | (_, Bound::NegInf) => return Err(SturmError::EmptyInterval),
            _ => {}
        }
        Ok(self.variations_at(lo) - self.variations_at(hi))
    }
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
pub fn sturm_count(p: &IntPoly, lo: &Bound, hi: &Bound) -> Result<usize, SturmError> {
    SturmChain::new(p).count_open(lo, hi)
}

/// True iff every complex root of `p` is real.
pub fn is_totally_real(p: &IntPoly) -> bool {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return true;
    }
    let chain = SturmChain::new(p);
    let d = chain.sf.degree();
    chain.count_open(&Bound::NegInf, &Bound::PosInf).unwrap() == d
}

/// Half-open isolating interval `(lo, hi]`; neither endpoint is a root of the
/// isolated polynomial's squarefree part and exactly one distinct root lies
/// inside.
#[derive(Clone, Debug, PartialEq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// All real roots of a polynomial, isolated into pairwise disjoint rational
/// intervals in ascending order.
pub struct RootIsolation {
    chain: SturmChain,
    pub intervals: Vec<RootInterval>,
}

impl RootIsolation {
    /// Squarefree part of the isolated polynomial.
    pub fn poly(&self) -> &IntPoly {
        &self.chain.sf
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Halve (at least) the width of interval `i`.
    pub fn refine(&mut self, i: usize) {
        let iv = self.intervals[i].clone();
        let m = self.pick_split(&iv);
        let left = self
            .chain
            .count_open(&Bound::Finite(iv.lo.clone()), &Bound::Finite(m.clone()))
            .expect("endpoints are non-roots");
        if left == 1 {
            self.intervals[i].hi = m;
        } else {
            self.intervals[i].lo = m;
        }
    }

    /// Refine interval `i` until its width is at most `w`.
    pub fn refine_to_width(&mut self, i: usize, w: &BigRational) {
        while self.intervals[i].width() > *w {
            self.refine(i);
        }
    }

    /// A split point strictly inside the interval that is not a root.
    fn pick_split(&self, iv: &RootInterval) -> BigRational {
        let two = BigRational::from_integer(2.into());
        let mut m = (&iv.lo + &iv.hi) / &two;
        let mut step = iv.width() / BigRational::from_integer(4.into());
        while self.chain.sf.sign_at(&m) == 0 {
            m += &step;
            step /= &two;
        }
        m
    }
}

/// Isolate all real roots of `p` (distinct roots of the squarefree part).
pub fn isolate_roots(p: &IntPoly) -> RootIsolation {
    let chain = SturmChain::new(p);
    let mut iso = RootIsolation {
        chain,
        intervals: vec![],
    };
    if iso.chain.sf.degree() == 0 {
        return iso;
    }
    let bound = iso.chain.sf.root_bound();
    let lo = -bound.clone();
    let total = iso
        .chain
        .count_open(&Bound::Finite(lo.clone()), &Bound::Finite(bound.clone()))
        .expect("Cauchy bound excludes roots");
    let mut stack = vec![(lo, bound, total)];
    let mut found = Vec::new();
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => found.push(RootInterval { lo: a, hi: b }),
            _ => {
                let m = iso.pick_split(&RootInterval {
                    lo: a.clone(),
                    hi: b.clone(),
                });
                let left = iso
                    .chain
                    .count_open(&Bound::Finite(a.clone()), &Bound::Finite(m.clone()))
                    .expect("split point is a non-root");
                stack.push((a, m.clone(), left));
                stack.push((m, b, count - left));
            }
        }
    }
    found.sort_by(|x, y| x.lo.cmp(&y.lo));
    iso.intervals = found;
    iso
}

/// Shared-root detection for interval overlap tests: true iff `gcd(p, q)` has
/// a root in `(lo, hi)`.
pub fn common_root_in(p: &IntPoly, q: &IntPoly, lo: &BigRational, hi: &BigRational) -> bool {
    let g = poly_gcd(p, q);
    if g.degree() == 0 {
        return false;
    }
    // Endpoints of comparison overlaps are non-roots of both inputs, hence of g.
    sturm_count(&g, &Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())).unwrap_or(0) > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    fn poly(desc: &[i64]) -> IntPoly {
        IntPoly::from_desc_i64(desc)
    }

    #[test]
    fn counting() {
        // x^2 + 1: no real roots
        assert_eq!(
            sturm_count(&poly(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf),
            Ok(0)
        );
        // x^2 - 2 on (0, 2): one root
        assert_eq!(
            sturm_count(
                &poly(&[1, 0, -2]),
                &Bound::Finite(rat_int(0)),
                &Bound::Finite(rat_int(2))
            ),
            Ok(1)
        );
        // x^2 - 21x + 92: discriminant 73 > 0
        assert_eq!(
            sturm_count(&poly(&[1, -21, 92]), &Bound::NegInf, &Bound::PosInf),
            Ok(2)
        );
        // endpoint root reported
        assert_eq!(
            sturm_count(
                &poly(&[1, 0, -4]),
                &Bound::Finite(rat_int(2)),
                &Bound::Finite(rat_int(3))
            ),
            Err(SturmError::EndpointIsRoot)
        );
    }

    #[test]
    fn totally_real() {
        assert!(!is_totally_real(&poly(&[1, 0, 1])));
        // (x-1)^2 (x+3)
        let p = poly(&[1, -1]).pow(2).mul(&poly(&[1, 3]));
        assert!(is_totally_real(&p));
        assert!(is_totally_real(&poly(&[1, -36, 454, -2356, 4241])));
        assert!(!is_totally_real(&poly(&[1, 0, 0, -2, 1])));
    }

    #[test]
    fn isolation_finds_all_roots() {
        // roots: -1, 1/2, 3 (and a double root at 3 collapses to one interval)
        let p = poly(&[1, 1]).mul(&poly(&[2, -1])).mul(&poly(&[1, -3]).pow(2));
        let iso = isolate_roots(&p);
        assert_eq!(iso.len(), 3);
        let mut iso = iso;
        for i in 0..3 {
            iso.refine_to_width(i, &rat(1, 100));
        }
        let approx: Vec<f64> = iso
            .intervals
            .iter()
            .map(|iv| {
                let m = (&iv.lo + &iv.hi) / rat_int(2);
                let n: f64 = m.numer().to_string().parse().unwrap();
                let d: f64 = m.denom().to_string().parse().unwrap();
                n / d
            })
            .collect();
        assert!((approx[0] + 1.0).abs() < 0.02);
        assert!((approx[1] - 0.5).abs() < 0.02);
        assert!((approx[2] - 3.0).abs() < 0.02);
    }
}
