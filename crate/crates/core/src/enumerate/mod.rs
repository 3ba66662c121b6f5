//! Enumeration of totally-real monic integer polynomials with fixed top
//! coefficients and divisibility / interlacing / modular-class side
//! conditions.
//!
//! The search walks coefficients c_3..c_d depth-first. At each level the
//! scaled derivative q_j = f^(d-j) * j!/d! (an integer polynomial whose
//! constant term is c_j) must be totally real with all roots inside a fixed
//! rational interval; sign-alternation of q_j at the critical points (the
//! roots of q_{j-1}) turns that requirement into a rational interval of
//! admissible c_j, evaluated conservatively by interval arithmetic and then
//! verified exactly by Sturm counts per candidate.

mod classes;
mod interlacing;

pub mod candidates;
pub use classes::{
    cache_file, default_cache_dir, extend_class_set, load_or_sample, sample_class_set, ClassSet,
    ClassSetError,
};
pub use interlacing::{interlacing_charpolys, InterlacingSet};

use crate::num::{big, BigInt, BigRational};
use crate::poly::{
    interlaces, isolate_roots, squarefree_decomposition, squarefree_part, IntPoly, SturmChain,
};
use crate::poly::{Bound, RootInterval};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumError {
    #[error("node budget exhausted after {visited} nodes ({found} results so far)")]
    Budget { visited: u64, found: usize },
    #[error("class set for order {0} exponent {1} is not saturated")]
    UnsaturatedClassSet(usize, u32),
    #[error("inconsistent degrees: fixed degree {fixed} + phi degree {phi} != order {n}")]
    InconsistentDegrees { fixed: usize, phi: usize, n: usize },
}

/// Divisibility flags of a monic integer polynomial `sum a_i x^{n-i}`:
/// weakly type 2 means `2^{i-1} | a_i` for `i >= 1`; type 2 means
/// `2^i | a_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeFlags {
    pub weakly_type2: bool,
    pub type2: bool,
}

pub fn type_flags(p: &IntPoly) -> TypeFlags {
    assert!(p.is_monic(), "type flags of non-monic polynomial");
    let d = p.degree();
    let desc = p.desc_coeffs(d + 1);
    let mut weakly = true;
    let mut full = true;
    for (i, c) in desc.iter().enumerate().skip(1) {
        let iu = i as u32;
        if !(c % (BigInt::one() << (iu - 1))).is_zero() {
            weakly = false;
        }
        if !(c % (BigInt::one() << iu)).is_zero() {
            full = false;
        }
        if !weakly {
            break;
        }
    }
    TypeFlags {
        weakly_type2: weakly,
        type2: weakly && full,
    }
}

/// Divisibility condition imposed on `f(x-1)` during enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeCondition {
    None,
    WeaklyType2,
    Type2,
}

/// The top coefficients `(b1, b2)` of the cofactor forced by `tr S = 0` and
/// `tr S^2 = n(n-1)` given an already-fixed factor of the characteristic
/// polynomial.
pub fn newton_top_coeffs(
    n: usize,
    fixed: &IntPoly,
    deg_phi: usize,
) -> Result<(BigInt, BigInt), EnumError> {
    assert!(fixed.is_monic());
    let fixed_deg = fixed.degree();
    if fixed_deg + deg_phi != n {
        return Err(EnumError::InconsistentDegrees {
            fixed: fixed_deg,
            phi: deg_phi,
            n,
        });
    }
    let ps = fixed.power_sums(2);
    let s1 = ps[1].clone();
    let s2 = ps[2].clone();
    let q1 = -s1; // power sums of phi: p1(total) = 0
    let q2 = BigRational::from_integer(big((n * (n - 1)) as i64)) - s2;
    let b1 = -q1.clone();
    let b2 = (&q1 * &q1 - q2) / BigRational::from_integer(big(2));
    assert!(
        b1.denom().is_one() && b2.denom().is_one(),
        "forced coefficients must be integers"
    );
    Ok((b1.numer().clone(), b2.numer().clone()))
}

/// Modular-class side condition: `fixed_factor * f mod 2^e` must be one of
/// the classes.
#[derive(Clone)]
pub struct ClassCondition<'a> {
    pub fixed_factor: IntPoly,
    pub classes: &'a ClassSet,
}

/// Full enumeration specification.
pub struct EnumSpec<'a> {
    pub degree: usize,
    pub b1: BigInt,
    pub b2: BigInt,
    pub type_condition: TypeCondition,
    /// when set, `f` must interlace this (squarefree totally-real) target
    pub interlace_target: Option<IntPoly>,
    pub class_condition: Option<ClassCondition<'a>>,
    /// explicit root-interval override (otherwise power-sum bounds)
    pub root_interval: Option<(BigRational, BigRational)>,
    pub node_budget: u64,
}

impl<'a> EnumSpec<'a> {
    pub fn new(degree: usize, b1: BigInt, b2: BigInt) -> EnumSpec<'a> {
        EnumSpec {
            degree,
            b1,
            b2,
            type_condition: TypeCondition::None,
            interlace_target: None,
            class_condition: None,
            root_interval: None,
            node_budget: 1_000_000_000,
        }
    }
}

/// Rational enclosure `[lo, hi]` of all roots forced by the power sums:
/// every root of a totally-real monic polynomial with `sum = s1` and
/// `sum of squares = s2` lies in `[(s1 - sqrt(D))/d, (s1 + sqrt(D))/d]`
/// with `D = (d-1)(d*s2 - s1^2)`. Returns `None` when no real spectrum fits.
pub fn power_sum_interval(
    degree: usize,
    b1: &BigInt,
    b2: &BigInt,
) -> Option<(BigRational, BigRational)> {
    let d = big(degree as i64);
    let s1 = -b1.clone();
    let s2 = b1 * b1 - big(2) * b2;
    let disc = (&d - big(1)) * (&d * &s2 - &s1 * &s1);
    if disc.is_negative() {
        return None;
    }
    // rational enclosure of sqrt(disc) with denominator 2^20
    let scale: BigInt = BigInt::one() << 40;
    let lo_num = (&disc * &scale).sqrt();
    let hi_num = &lo_num + 1;
    let denom: BigInt = BigInt::one() << 20;
    let sq_hi = BigRational::new(hi_num, denom);
    let s1r = BigRational::from_integer(s1);
    let dr = BigRational::from_integer(d);
    Some(((&s1r - &sq_hi) / &dr, (&s1r + &sq_hi) / &dr))
}

/// One isolated critical point with its multiplicity in q_{j-1}.
struct Critical {
    poly: IntPoly, // squarefree part owning the interval
    interval: RootInterval,
    mult: u32,
    index_hi: u32, // cumulative multiplicity N(t) counting from the left
}

struct Dfs<'a, 'b> {
    spec: &'b EnumSpec<'a>,
    d: usize,
    lo: BigRational,
    hi: BigRational,
    /// residue and modulus constraints per level (c_j = res mod 2^k), from
    /// the type condition on f(x-1)
    type_mod: Vec<BigInt>,
    /// binomial table binom[a][b]
    binom: Vec<Vec<BigInt>>,
    /// descending coefficients of the fixed class factor mod 2^e
    class_fix: Vec<u8>,
    class_prefix: Vec<std::collections::HashSet<Vec<u8>>>,
    visited: u64,
    results: Vec<IntPoly>,
}

/// Run the search; results are in ascending lexicographic coefficient order
/// (descending-degree coefficient vectors).
pub fn enumerate(spec: &EnumSpec) -> Result<Vec<IntPoly>, EnumError> {
    let d = spec.degree;
    // root interval
    let ps = power_sum_interval(d, &spec.b1, &spec.b2);
    let mut interval = match (&spec.root_interval, ps) {
        (Some(iv), Some(psiv)) => (iv.0.clone().max(psiv.0), iv.1.clone().min(psiv.1)),
        (None, Some(psiv)) => psiv,
        // no real spectrum fits the fixed power sums
        (_, None) => return Ok(vec![]),
    };
    if let Some(target) = &spec.interlace_target {
        // roots of f lie within the hull of the target's roots
        let mut iso = isolate_roots(target);
        if iso.is_empty() {
            return Ok(vec![]);
        }
        let k = iso.len();
        for i in [0, k - 1] {
            iso.refine_to_width(i, &BigRational::new(big(1), big(16)));
        }
        interval.0 = interval.0.max(iso.intervals[0].lo.clone());
        interval.1 = interval.1.min(iso.intervals[k - 1].hi.clone());
    }
    if interval.0 > interval.1 {
        return Ok(vec![]);
    }

    // binomials up to d
    let mut binom = vec![vec![BigInt::zero(); d + 1]; d + 1];
    for a in 0..=d {
        binom[a][0] = BigInt::one();
        for b in 1..=a {
            binom[a][b] = &binom[a - 1][b - 1]
                + if b <= a - 1 {
                    binom[a - 1][b].clone()
                } else {
                    BigInt::zero()
                };
        }
    }

    // type-condition modulus per level: c_j constrained mod 2^{j-1} or 2^j
    let type_mod: Vec<BigInt> = (0..=d)
        .map(|j| match spec.type_condition {
            TypeCondition::None => BigInt::one(),
            TypeCondition::WeaklyType2 => {
                if j >= 1 {
                    BigInt::one() << (j as u32 - 1)
                } else {
                    BigInt::one()
                }
            }
            TypeCondition::Type2 => BigInt::one() << (j as u32),
        })
        .collect();

    // class prefix sets
    let (class_fix, class_prefix) = match &spec.class_condition {
        None => (vec![], vec![]),
        Some(cc) => {
            let e = cc.classes.e;
            let mask = (1u16 << e) - 1;
            let fix_deg = cc.fixed_factor.degree();
            let full_deg = fix_deg + d;
            let fix: Vec<u8> = cc
                .fixed_factor
                .desc_coeffs(fix_deg + 1)
                .iter()
                .map(|c| (c.mod_floor(&big(1i64 << e)).to_string().parse::<i64>().unwrap() as u16 & mask) as u8)
                .collect();
            let mut prefixes: Vec<std::collections::HashSet<Vec<u8>>> = Vec::with_capacity(d + 1);
            for j in 0..=d.min(full_deg) {
                let mut set = std::collections::HashSet::new();
                for cls in cc.classes.classes.iter() {
                    set.insert(cls[0..=j].to_vec());
                }
                prefixes.push(set);
            }
            (fix, prefixes)
        }
    };

    let mut dfs = Dfs {
        spec,
        d,
        lo: interval.0,
        hi: interval.1,
        type_mod,
        binom,
        class_fix,
        class_prefix,
        visited: 0,
        results: vec![],
    };
    dfs.run()?;
    Ok(dfs.results)
}

impl<'a, 'b> Dfs<'a, 'b> {
    /// Reduced derivative q_j for prefix c_0..c_j (descending coefficients):
    /// coefficient of x^{j-i} is binom(d-i, j-i) * c_i.
    fn reduced_derivative(&self, prefix: &[BigInt], j: usize) -> IntPoly {
        let mut asc = vec![BigInt::zero(); j + 1];
        for (i, c) in prefix.iter().enumerate().take(j + 1) {
            asc[j - i] = &self.binom[self.d - i][j - i] * c;
        }
        IntPoly::new(asc)
    }

    /// Base part of q_j (without the constant c_j term), given c_0..c_{j-1}.
    fn base_poly(&self, prefix: &[BigInt], j: usize) -> IntPoly {
        let mut asc = vec![BigInt::zero(); j + 1];
        for (i, c) in prefix.iter().enumerate().take(j) {
            asc[j - i] = &self.binom[self.d - i][j - i] * c;
        }
        IntPoly::new(asc)
    }

    fn run(&mut self) -> Result<(), EnumError> {
        let d = self.d;
        // degenerate degrees: everything fixed
        if d <= 2 {
            let mut coeffs = vec![BigInt::one()];
            if d >= 1 {
                coeffs.push(self.spec.b1.clone());
            }
            if d >= 2 {
                coeffs.push(self.spec.b2.clone());
            }
            let f = {
                let mut asc = coeffs.clone();
                asc.reverse();
                IntPoly::new(asc)
            };
            if self.accept_leaf(&f) {
                self.results.push(f);
            }
            return Ok(());
        }
        let prefix = vec![BigInt::one(), self.spec.b1.clone(), self.spec.b2.clone()];
        let q2 = self.reduced_derivative(&prefix, 2);
        if !self.totally_real_in(&q2) {
            return Ok(());
        }
        let crits = self.critical_points(&q2);
        self.descend(prefix, crits, 3)
    }

    /// Exact check: all roots (with multiplicity) real and within [lo, hi].
    fn totally_real_in(&self, q: &IntPoly) -> bool {
        debug_assert!(!q.is_zero());
        if q.degree() == 0 {
            return true;
        }
        let sf = squarefree_part(q);
        let target = sf.degree();
        let mut count = 0usize;
        let mut p = sf.clone();
        // strip roots at the rational endpoints
        for endpoint in [&self.lo, &self.hi] {
            let num = endpoint.numer();
            let den = endpoint.denom();
            let lin = IntPoly::new(vec![-num.clone(), den.clone()]);
            if let Some(qt) = p.div_exact(&lin) {
                p = qt;
                count += 1;
            }
        }
        if p.degree() > 0 {
            let chain = SturmChain::new(&p);
            count += chain
                .count_open(
                    &Bound::Finite(self.lo.clone()),
                    &Bound::Finite(self.hi.clone()),
                )
                .expect("endpoint roots were stripped");
        }
        count == target
    }

    /// Critical points for the next level: roots of q with multiplicities.
    fn critical_points(&self, q: &IntPoly) -> Vec<Critical> {
        let mut crits: Vec<(IntPoly, RootInterval, u32, BigRational)> = Vec::new();
        for (part, mult) in squarefree_decomposition(q) {
            let iso = isolate_roots(&part);
            let sf = iso.poly().clone();
            for iv in iso.intervals {
                // sort key: midpoint after the ordering refinement below
                let mid = (&iv.lo + &iv.hi) / BigRational::from_integer(big(2));
                crits.push((sf.clone(), iv, mult, mid));
            }
        }
        // Disjointify intervals across parts so ordering by interval is exact.
        let mut changed = true;
        let mut guard = 0;
        while changed && guard < 64 {
            changed = false;
            guard += 1;
            for a in 0..crits.len() {
                for b in a + 1..crits.len() {
                    if crits[a].0 == crits[b].0 {
                        continue; // same squarefree part: already disjoint
                    }
                    let (alo, ahi) = (&crits[a].1.lo, &crits[a].1.hi);
                    let (blo, bhi) = (&crits[b].1.lo, &crits[b].1.hi);
                    if ahi > blo && bhi > alo {
                        // overlap: refine both (distinct parts share no root)
                        refine_interval(&crits[a].0.clone(), &mut crits[a].1);
                        refine_interval(&crits[b].0.clone(), &mut crits[b].1);
                        changed = true;
                    }
                }
            }
        }
        crits.sort_by(|x, y| x.1.lo.cmp(&y.1.lo));
        let mut out = Vec::with_capacity(crits.len());
        let mut cum = 0u32;
        for (poly, interval, mult, _) in crits {
            cum += mult;
            out.push(Critical {
                poly,
                interval,
                mult,
                index_hi: cum,
            });
        }
        out
    }

    fn descend(
        &mut self,
        prefix: Vec<BigInt>,
        crits: Vec<Critical>,
        j: usize,
    ) -> Result<(), EnumError> {
        self.visited += 1;
        if self.visited > self.spec.node_budget {
            return Err(EnumError::Budget {
                visited: self.visited,
                found: self.results.len(),
            });
        }
        let base = self.base_poly(&prefix, j);
        // admissible interval for c_j from sign alternation
        let mut crits = crits;
        let (mut clo, chi) = match self.candidate_range(&base, &mut crits, j) {
            Some(r) => r,
            None => return Ok(()),
        };
        // residue constraint from the type condition (on f(x-1)): the shifted
        // coefficient a_j = sum_i c_i binom(d-i, j-i) (-1)^{j-i} must be
        // divisible by the level modulus; a_j = c_j + known.
        let modulus = self.type_mod[j].clone();
        let mut residue = BigInt::zero();
        if !modulus.is_one() {
            let mut known = BigInt::zero();
            for (i, c) in prefix.iter().enumerate() {
                let t = &self.binom[self.d - i][j - i] * c;
                if (j - i) % 2 == 1 {
                    known -= t;
                } else {
                    known += t;
                }
            }
            residue = (-known).mod_floor(&modulus);
        }
        // first candidate >= clo in the residue class
        if !modulus.is_one() {
            let shift = (&residue - &clo).mod_floor(&modulus);
            clo += shift;
        }
        let mut c = clo;
        while c <= chi {
            let mut next_prefix = prefix.clone();
            next_prefix.push(c.clone());
            if self.class_prefix_ok(&next_prefix, j) {
                let q = self.reduced_derivative(&next_prefix, j);
                if self.totally_real_in(&q) {
                    if j == self.d {
                        let mut asc = next_prefix.clone();
                        asc.reverse();
                        let f = IntPoly::new(asc);
                        if self.accept_leaf(&f) {
                            self.results.push(f);
                        }
                    } else {
                        let crits_next = self.critical_points(&q);
                        self.descend(next_prefix, crits_next, j + 1)?;
                    }
                }
            }
            c += if modulus.is_one() {
                BigInt::one()
            } else {
                modulus.clone()
            };
        }
        Ok(())
    }

    /// Conservative integer range for c_j from the alternation conditions.
    fn candidate_range(
        &self,
        base: &IntPoly,
        crits: &mut [Critical],
        j: usize,
    ) -> Option<(BigInt, BigInt)> {
        // endpoint conditions, exact:
        //   (-1)^j q_j(lo) >= 0 and q_j(hi) >= 0 with q_j = base + c
        let mut lower: Vec<BigRational> = Vec::new();
        let mut upper: Vec<BigRational> = Vec::new();
        let blo = base.eval_rat(&self.lo);
        let bhi = base.eval_rat(&self.hi);
        if j % 2 == 0 {
            lower.push(-blo);
        } else {
            upper.push(-blo);
        }
        lower.push(-bhi);

        // refine critical intervals a little before the first pass
        for crit in crits.iter_mut() {
            let w = crit.interval.width();
            if w > BigRational::new(big(1), big(4)) {
                while crit.interval.width() > BigRational::new(big(1), big(4)) {
                    refine_interval(&crit.poly, &mut crit.interval);
                }
            }
        }

        let mut rounds = 0;
        loop {
            let mut lo_b = lower.clone();
            let mut hi_b = upper.clone();
            for crit in crits.iter() {
                let (bmin, bmax) = interval_eval(base, &crit.interval.lo, &crit.interval.hi);
                // indices i = index_hi - mult + 1 ..= index_hi, sign (-1)^{j-i}
                for t in 0..crit.mult {
                    let i = crit.index_hi - t;
                    if (j as u32).wrapping_sub(i) % 2 == 0 {
                        // q_j(theta) >= 0: c >= -base(theta) >= -bmax
                        lo_b.push(-bmax.clone());
                    } else {
                        // q_j(theta) <= 0: c <= -base(theta) <= -bmin
                        hi_b.push(-bmin.clone());
                    }
                }
            }
            let lo = lo_b.into_iter().max()?;
            let hi = hi_b.into_iter().min()?;
            if lo > hi {
                return None;
            }
            let ilo = lo.ceil().to_integer();
            let ihi = hi.floor().to_integer();
            if ilo > ihi {
                return None;
            }
            let span = &ihi - &ilo;
            if span <= big(16) || rounds >= 8 {
                return Some((ilo, ihi));
            }
            for crit in crits.iter_mut() {
                refine_interval(&crit.poly, &mut crit.interval);
                refine_interval(&crit.poly, &mut crit.interval);
            }
            rounds += 1;
        }
    }

    fn class_prefix_ok(&self, prefix: &[BigInt], j: usize) -> bool {
        let Some(cc) = &self.spec.class_condition else {
            return true;
        };
        if j >= self.class_prefix.len() {
            return true;
        }
        let e = cc.classes.e;
        let mask = ((1u32 << e) - 1) as i64;
        let mut pfx = Vec::with_capacity(j + 1);
        for t in 0..=j {
            let mut acc: i64 = 0;
            for (u, fu) in self.class_fix.iter().enumerate() {
                if u > t {
                    break;
                }
                let ci = &prefix[t - u];
                let cm = ci.mod_floor(&big(mask + 1));
                let cm: i64 = crate::num::to_i64(&cm);
                acc = (acc + *fu as i64 * cm) & mask;
            }
            pfx.push(acc as u8);
        }
        self.class_prefix[j].contains(&pfx)
    }

    fn accept_leaf(&mut self, f: &IntPoly) -> bool {
        if f.degree() >= 1 && !self.totally_real_in(f) {
            return false;
        }
        if self.spec.type_condition != TypeCondition::None {
            let shifted = f.taylor_shift(&big(-1));
            let flags = type_flags(&shifted);
            match self.spec.type_condition {
                TypeCondition::WeaklyType2 => {
                    if !flags.weakly_type2 {
                        return false;
                    }
                }
                TypeCondition::Type2 => {
                    if !flags.type2 {
                        return false;
                    }
                }
                TypeCondition::None => {}
            }
        }
        if let Some(target) = &self.spec.interlace_target {
            if !interlaces(f, target) {
                return false;
            }
        }
        if let Some(cc) = &self.spec.class_condition {
            let full = cc.fixed_factor.mul(f);
            let e = cc.classes.e;
            let modulus = big(1i64 << e);
            let vec: Vec<u8> = full
                .desc_coeffs(full.degree() + 1)
                .iter()
                .map(|c| crate::num::to_i64(&c.mod_floor(&modulus)) as u8)
                .collect();
            if !cc.classes.contains(&vec) {
                return false;
            }
        }
        true
    }
}

fn refine_interval(sf: &IntPoly, iv: &mut RootInterval) {
    let two = BigRational::from_integer(big(2));
    let mut m = (&iv.lo + &iv.hi) / &two;
    let mut step = iv.width() / BigRational::from_integer(big(4));
    while sf.sign_at(&m) == 0 {
        m += &step;
        step /= &two;
    }
    let slo = sf.sign_at(&iv.lo);
    let sm = sf.sign_at(&m);
    if slo != sm {
        iv.hi = m;
    } else {
        iv.lo = m;
    }
}

/// Interval Horner evaluation of an integer polynomial over `[lo, hi]`.
fn interval_eval(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    let mut min = BigRational::zero();
    let mut max = BigRational::zero();
    for c in p.coeffs().iter().rev() {
        // [min,max] * [lo,hi] + c
        let candidates = [
            &min * lo,
            &min * hi,
            &max * lo,
            &max * hi,
        ];
        let mut nmin = candidates[0].clone();
        let mut nmax = candidates[0].clone();
        for cand in &candidates[1..] {
            if *cand < nmin {
                nmin = cand.clone();
            }
            if *cand > nmax {
                nmax = cand.clone();
            }
        }
        let cr = BigRational::from_integer(c.clone());
        min = nmin + &cr;
        max = nmax + cr;
    }
    (min, max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn flags() {
        let p = parse_poly("x^2 + 2*x + 4").unwrap();
        assert_eq!(
            type_flags(&p),
            TypeFlags {
                weakly_type2: true,
                type2: true
            }
        );
        let q = parse_poly("x^2 + 2*x + 2").unwrap();
        assert_eq!(
            type_flags(&q),
            TypeFlags {
                weakly_type2: true,
                type2: false
            }
        );
        let r = parse_poly("x^3 + x^2 + 4*x + 8").unwrap();
        assert_eq!(
            type_flags(&r),
            TypeFlags {
                weakly_type2: true,
                type2: false
            }
        );
        let s = parse_poly("x^2 + x + 1").unwrap();
        assert_eq!(
            type_flags(&s),
            TypeFlags {
                weakly_type2: false,
                type2: false
            }
        );
    }

    #[test]
    fn shifted_charpoly_flags_random() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 3..=12usize {
            for _ in 0..20 {
                let s = crate::seidel::SeidelMatrix::random(n, &mut rng);
                let p = s.char_poly().taylor_shift(&big(1)); // Char(x+1)
                let flags = type_flags(&p);
                assert!(flags.weakly_type2, "n={n}");
                if n % 2 == 0 {
                    assert!(flags.type2, "n={n}");
                }
            }
        }
    }

    #[test]
    fn newton_coeffs_examples() {
        // n=49, fixed=(x+5)^32 (x-9)^4, deg phi = 13 -> (-124, 7074)
        let fixed = parse_poly("(x+5)^32*(x-9)^4").unwrap();
        let (b1, b2) = newton_top_coeffs(49, &fixed, 13).unwrap();
        assert_eq!((b1, b2), (big(-124), big(7074)));
        // n=2, fixed=1 -> x^2 - 1
        let (b1, b2) = newton_top_coeffs(2, &IntPoly::one(), 2).unwrap();
        assert_eq!((b1, b2), (big(0), big(-1)));
        // degree mismatch reported
        assert!(newton_top_coeffs(49, &parse_poly("(x+5)^32").unwrap(), 13).is_err());
    }

    #[test]
    fn newton_cross_check_against_s1() {
        // n=57, fixed=(x+5)^39, deg phi=18: compare against the verified
        // S1 characteristic polynomial divided by (x+5)^39.
        let fixed = parse_poly("(x+5)^39").unwrap();
        let (b1, b2) = newton_top_coeffs(57, &fixed, 18).unwrap();
        let s1 = parse_poly("(x-4)*(x-7)*(x-9)^2*(x-11)^9*(x-13)^4*(x-15)").unwrap();
        let desc = s1.desc_coeffs(19);
        assert_eq!(b1, desc[1]);
        assert_eq!(b2, desc[2]);
    }

    #[test]
    fn enumerate_degree2_determined() {
        let spec = EnumSpec::new(2, big(0), big(-2));
        let out = enumerate(&spec).unwrap();
        assert_eq!(out, vec![parse_poly("x^2 - 2").unwrap()]);
    }

    #[test]
    fn enumerate_degree3_scan() {
        // totally real x^3 - 2x + c forces |c| <= 1 (disc = 32 - 27 c^2 >= 0)
        let spec = EnumSpec::new(3, big(0), big(-2));
        let out = enumerate(&spec).unwrap();
        let expect: Vec<IntPoly> = ["x^3 - 2*x - 1", "x^3 - 2*x", "x^3 - 2*x + 1"]
            .iter()
            .map(|s| parse_poly(s).unwrap())
            .collect();
        assert_eq!(out, expect);
    }

    #[test]
    fn enumerate_matches_bruteforce_small() {
        // exhaustive cross-check at degree 4 with a divisibility condition
        for (b1, b2) in [(0i64, -4i64), (-2, -2), (-4, 2)] {
            let mut spec = EnumSpec::new(4, big(b1), big(b2));
            spec.type_condition = TypeCondition::WeaklyType2;
            let fast = enumerate(&spec).unwrap();
            // brute force over c3, c4 using the coarse coefficient bound
            // |c_j| <= binom(4,j) R^j with R from the power-sum interval
            let mut brute = Vec::new();
            let (lo, hi) = power_sum_interval(4, &big(b1), &big(b2)).unwrap();
            let r = lo.abs().max(hi.abs()).ceil().to_integer();
            let r3 = crate::num::to_i64(&(big(4) * &r * &r * &r));
            let r4 = crate::num::to_i64(&(&r * &r * &r * &r));
            for c3 in -r3..=r3 {
                for c4 in -r4..=r4 {
                    let f = IntPoly::new(vec![big(c4), big(c3), big(b2), big(b1), big(1)]);
                    if !crate::poly::is_totally_real(&f) {
                        continue;
                    }
                    let flags = type_flags(&f.taylor_shift(&big(-1)));
                    if !flags.weakly_type2 {
                        continue;
                    }
                    brute.push(f);
                }
            }
            brute.sort_by(|a, b| a.desc_coeffs(5).cmp(&b.desc_coeffs(5)));
            assert_eq!(fast, brute, "b1={b1} b2={b2}");
        }
    }
}
