//! Factorization over Q: squarefree split, factorization mod p, Hensel
//! lifting, and subset recombination. The artifact bound of degree 24 keeps
//! recombination trivial.

use super::gcd::squarefree_decomposition;
use super::IntPoly;
use crate::num::{big, BigInt};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Complete factorization into irreducibles over Q with content separated:
/// `p = content * prod factors[i]^mult[i]`, each factor primitive with
/// positive leading coefficient.
///
/// Panics if `deg p > 24` (artifact bound; nothing in the pipelines exceeds
/// degree 8 here).
pub fn factor_q(p: &IntPoly) -> (BigInt, Vec<(IntPoly, u32)>) {
    assert!(!p.is_zero(), "factor of zero polynomial");
    assert!(p.degree() <= 24, "factor_q degree bound exceeded");
    let content = p.content();
    let mut out: Vec<(IntPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        for f in factor_squarefree(&part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs())));
    (content, out)
}

/// True iff `p` is irreducible over Q (degree >= 1).
pub fn is_irreducible(p: &IntPoly) -> bool {
    if p.is_zero() || p.degree() == 0 {
        return false;
    }
    let (_, f) = factor_q(p);
    f.len() == 1 && f[0].1 == 1
}

fn factor_squarefree(p: &IntPoly) -> Vec<IntPoly> {
    let p = p.primitive_part();
    let d = p.degree();
    if d <= 1 {
        return vec![p];
    }
    // Pick an odd prime where p stays squarefree and the leading coefficient
    // is a unit.
    let mut prime = 3u64;
    loop {
        if !(p.lc() % big(prime as i64)).is_zero() {
            let fp = ModPoly::from_int(&p, prime);
            if fp.is_squarefree() {
                break;
            }
        }
        prime = next_prime(prime + 1);
    }

    let fp = ModPoly::from_int(&p, prime).monic();
    let modular = fp.factor();
    if modular.len() == 1 {
        return vec![p];
    }

    // Landau-Mignotte style bound on the coefficients of any factor of p
    // (times lc): 2^d * height(p) * |lc(p)| is comfortably above it.
    let bound: BigInt = (BigInt::one() << (d as u32 + 1)) * p.height() * p.lc().abs();
    let mut pk = big(prime as i64);
    let mut k = 1u32;
    while pk < big(2) * &bound {
        pk = &pk * big(prime as i64);
        k += 1;
    }
    let lifted = hensel_lift(&p, &modular, prime, k);
    recombine(&p, lifted, &pk)
}

/// Subset recombination of lifted modular factors.
fn recombine(p: &IntPoly, mut lifted: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<IntPoly> {
    let mut remaining = p.clone();
    let mut out = Vec::new();
    let mut subset_size = 1usize;
    while 2 * subset_size <= lifted.len() {
        let mut found = true;
        while found && 2 * subset_size <= lifted.len() {
            found = false;
            let idxs: Vec<usize> = (0..lifted.len()).collect();
            for combo in subsets(&idxs, subset_size) {
                if let Some(f) = try_subset(&remaining, &lifted, &combo, pk) {
                    remaining = remaining.div_exact(&f).expect("verified divisor");
                    out.push(f);
                    let keep: Vec<Vec<BigInt>> = lifted
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !combo.contains(i))
                        .map(|(_, v)| v.clone())
                        .collect();
                    lifted = keep;
                    found = true;
                    break;
                }
            }
        }
        subset_size += 1;
    }
    if remaining.degree() > 0 {
        out.push(remaining.primitive_part());
    }
    out.sort_by(|a, b| (a.degree(), a.coeffs()).cmp(&(b.degree(), b.coeffs())));
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

fn try_subset(
    remaining: &IntPoly,
    lifted: &[Vec<BigInt>],
    combo: &[usize],
    pk: &BigInt,
) -> Option<IntPoly> {
    // candidate = lc(remaining) * prod_{i in combo} g_i mod p^k, lifted to
    // symmetric residues and made primitive.
    let mut prod = vec![remaining.lc().mod_floor(pk)];
    for &i in combo {
        prod = mul_mod(&prod, &lifted[i], pk);
    }
    let sym: Vec<BigInt> = prod
        .iter()
        .map(|c| {
            let c = c.mod_floor(pk);
            if &c * big(2) > *pk {
                c - pk
            } else {
                c
            }
        })
        .collect();
    let cand = IntPoly::new(sym).primitive_part();
    if cand.degree() == 0 {
        return None;
    }
    if cand.divides(remaining) {
        Some(cand)
    } else {
        None
    }
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    for c in &mut v {
        *c = c.mod_floor(m);
    }
    v
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Lift the monic modular factorization `p/lc = prod f_i (mod prime)` to
/// monic factors mod `prime^k` of `p* = p * lc^(n-1)` normalized... in
/// practice: lift monic factors of `monic(p) mod prime` so that their product
/// times `lc(p)` matches `p` modulo `prime^k`.
fn hensel_lift(p: &IntPoly, factors: &[ModPoly], prime: u64, k: u32) -> Vec<Vec<BigInt>> {
    // Work with the monic image of p modulo p^k: multiply p by the inverse of
    // its leading coefficient mod p^k.
    let mut pk = big(prime as i64);
    for _ in 1..k {
        pk = &pk * big(prime as i64);
    }
    let lc_inv = mod_inverse(&p.lc().mod_floor(&pk), &pk);
    let target: Vec<BigInt> = (0..=p.degree())
        .map(|i| (p.coeff(i) * &lc_inv).mod_floor(&pk))
        .collect();

    // Iteratively lift each factor against the product of the others using
    // linear Hensel steps on the full multifactor product.
    let mut cur: Vec<Vec<BigInt>> = factors
        .iter()
        .map(|f| f.coeffs.iter().map(|&c| big(c as i64)).collect())
        .collect();
    let mut modulus = big(prime as i64);
    while modulus < pk {
        let next = &modulus * &modulus;
        let next = if next > pk { pk.clone() } else { next };
        cur = lift_step(&target, &cur, &modulus, &next, prime);
        modulus = next;
    }
    cur
}

/// One multifactor lift from `modulus` to `next` (next | modulus^2).
fn lift_step(
    target: &[BigInt],
    factors: &[Vec<BigInt>],
    modulus: &BigInt,
    next: &BigInt,
    prime: u64,
) -> Vec<Vec<BigInt>> {
    // error = target - prod(factors) mod next, divisible by modulus.
    let mut prod = vec![BigInt::one()];
    for f in factors {
        prod = mul_mod(&prod, f, next);
    }
    let deg = target.len() - 1;
    let mut err = vec![BigInt::zero(); deg + 1];
    for i in 0..=deg {
        let t = target.get(i).cloned().unwrap_or_else(BigInt::zero);
        let pr = prod.get(i).cloned().unwrap_or_else(BigInt::zero);
        err[i] = (t - pr).mod_floor(next);
    }
    let e_div: Vec<BigInt> = err
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(modulus);
            debug_assert!(r.is_zero(), "lift error not divisible by modulus");
            q
        })
        .collect();

    // Solve sum_i delta_i * prod_{j != i} f_j = e_div (mod modulus') where
    // modulus' = next/modulus, deg delta_i < deg f_i, via CRT over the f_i
    // images: delta_i = e_div * inverse(prod_{j!=i} f_j) mod f_i.
    let mstep = next / modulus;
    let mut out = Vec::with_capacity(factors.len());
    for i in 0..factors.len() {
        let fi = &factors[i];
        let mut others = vec![BigInt::one()];
        for (j, fj) in factors.iter().enumerate() {
            if j != i {
                others = mul_mod(&others, fj, &mstep);
            }
        }
        let others_mod_fi = poly_mod_reduce(&others, fi, &mstep);
        let inv = poly_mod_inverse(&others_mod_fi, fi, &mstep, prime);
        let e_mod_fi = poly_mod_reduce(&e_div, fi, &mstep);
        let delta = poly_mod_reduce(&mul_mod(&e_mod_fi, &inv, &mstep), fi, &mstep);
        // f_i' = f_i + modulus * delta
        let mut nf = vec![BigInt::zero(); fi.len()];
        for (t, c) in nf.iter_mut().enumerate() {
            *c = fi.get(t).cloned().unwrap_or_else(BigInt::zero);
        }
        for (t, d) in delta.iter().enumerate() {
            nf[t] = (&nf[t] + modulus * d).mod_floor(next);
        }
        out.push(nf);
    }
    out
}

/// Reduce `a` modulo the monic polynomial `f`, coefficients mod `m`.
fn poly_mod_reduce(a: &[BigInt], f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let df = f.len() - 1;
    let mut r: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    while r.len() > df {
        let top = r.last().unwrap().clone();
        let k = r.len() - 1 - df;
        if !top.is_zero() {
            for j in 0..=df {
                let t = (&r[k + j] - &top * &f[j]).mod_floor(m);
                r[k + j] = t;
            }
        }
        r.pop();
    }
    while r.last().map_or(false, |c| c.is_zero()) {
        r.pop();
    }
    if r.is_empty() {
        r.push(BigInt::zero());
    }
    r
}

/// Inverse of `a` in (Z/m)[x]/(f) for `m` a prime power, via Hensel from the
/// prime field inverse.
fn poly_mod_inverse(a: &[BigInt], f: &[BigInt], m: &BigInt, prime: u64) -> Vec<BigInt> {
    // Inverse mod prime by extended Euclid in GF(prime)[x].
    let ap = ModPoly {
        p: prime,
        coeffs: a.iter().map(|c| to_mod(c, prime)).collect::<Vec<_>>(),
    }
    .trim();
    let fp = ModPoly {
        p: prime,
        coeffs: f.iter().map(|c| to_mod(c, prime)).collect::<Vec<_>>(),
    }
    .trim();
    let inv0 = ap.inverse_mod(&fp);
    let mut inv: Vec<BigInt> = inv0.coeffs.iter().map(|&c| big(c as i64)).collect();
    // Newton: inv <- inv * (2 - a*inv) mod (f, m'), doubling precision.
    let mut modulus = big(prime as i64);
    while modulus < *m {
        modulus = (&modulus * &modulus).min(m.clone());
        let ai = poly_mod_reduce(&mul_mod(a, &inv, &modulus), f, &modulus);
        let mut two_minus = vec![BigInt::zero(); ai.len().max(1)];
        two_minus[0] = big(2);
        for (i, c) in ai.iter().enumerate() {
            two_minus[i] = (&two_minus[i] - c).mod_floor(&modulus);
        }
        inv = poly_mod_reduce(&mul_mod(&inv, &two_minus, &modulus), f, &modulus);
    }
    inv
}

fn to_mod(c: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    c.mod_floor(&big(p as i64)).to_u64().unwrap()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

fn next_prime(mut n: u64) -> u64 {
    fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    }
    while !is_prime(n) {
        n += 1;
    }
    n
}

// ---------------------------------------------------------------------------
// GF(p)[x]
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
struct ModPoly {
    p: u64,
    coeffs: Vec<u64>, // ascending, trimmed
}

impl ModPoly {
    fn from_int(q: &IntPoly, p: u64) -> ModPoly {
        ModPoly {
            p,
            coeffs: q.coeffs().iter().map(|c| to_mod(c, p)).collect(),
        }
        .trim()
    }

    fn trim(mut self) -> ModPoly {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    fn zero(p: u64) -> ModPoly {
        ModPoly { p, coeffs: vec![] }
    }

    fn one(p: u64) -> ModPoly {
        ModPoly { p, coeffs: vec![1] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_scalar(&self, a: u64) -> u64 {
        // Fermat
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(acc, a);
            }
            a = self.mulmod(a, a);
            e >>= 1;
        }
        acc
    }

    fn mul(&self, other: &ModPoly) -> ModPoly {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut v = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + self.mulmod(a, b)) % self.p;
            }
        }
        ModPoly { p: self.p, coeffs: v }.trim()
    }

    fn sub(&self, other: &ModPoly) -> ModPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![0u64; n];
        for (i, c) in v.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *c = (a + self.p - b) % self.p;
        }
        ModPoly { p: self.p, coeffs: v }.trim()
    }

    fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.inv_scalar(*self.coeffs.last().unwrap());
        ModPoly {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&c| self.mulmod(c, inv)).collect(),
        }
    }

    fn rem(&self, d: &ModPoly) -> ModPoly {
        assert!(!d.is_zero());
        let mut r = self.coeffs.clone();
        let dd = d.degree();
        let lc_inv = self.inv_scalar(*d.coeffs.last().unwrap());
        while r.len() > dd {
            let top = *r.last().unwrap();
            let k = r.len() - 1 - dd;
            if top != 0 {
                let q = self.mulmod(top, lc_inv);
                for j in 0..=dd {
                    r[k + j] = (r[k + j] + self.p - self.mulmod(q, d.coeffs[j])) % self.p;
                }
            }
            r.pop();
        }
        ModPoly { p: self.p, coeffs: r }.trim()
    }

    fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn derivative(&self) -> ModPoly {
        if self.is_zero() || self.degree() == 0 {
            return ModPoly::zero(self.p);
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulmod(c, (i as u64) % self.p))
            .collect();
        ModPoly { p: self.p, coeffs: v }.trim()
    }

    fn is_squarefree(&self) -> bool {
        if self.is_zero() || self.degree() == 0 {
            return false;
        }
        let d = self.derivative();
        if d.is_zero() {
            return false;
        }
        let g = self.gcd(&d);
        g.degree() == 0
    }

    fn pow_mod(&self, e: &BigInt, modulus: &ModPoly) -> ModPoly {
        let mut base = self.rem(modulus);
        let mut acc = ModPoly::one(self.p);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    fn inverse_mod(&self, modulus: &ModPoly) -> ModPoly {
        // extended Euclid
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus));
        let (mut t0, mut t1) = (ModPoly::zero(self.p), ModPoly::one(self.p));
        while !r1.is_zero() {
            // r0 = q r1 + r2
            let q = div_quot(&r0, &r1);
            let r2 = r0.sub(&q.mul(&r1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r2;
            t0 = t1;
            t1 = t2;
        }
        assert_eq!(r0.degree(), 0, "not invertible mod f");
        let inv = self.inv_scalar(r0.coeffs[0]);
        ModPoly {
            p: self.p,
            coeffs: t0.coeffs.iter().map(|&c| self.mulmod(c, inv)).collect(),
        }
        .trim()
    }

    /// Factor a squarefree monic polynomial into monic irreducibles:
    /// distinct-degree then deterministic equal-degree splitting.
    fn factor(&self) -> Vec<ModPoly> {
        let mut out = Vec::new();
        let mut f = self.monic();
        // distinct degree
        let x = ModPoly {
            p: self.p,
            coeffs: vec![0, 1],
        };
        let mut h = x.clone();
        let mut d = 1usize;
        let mut groups: Vec<(usize, ModPoly)> = Vec::new();
        while !f.is_zero() && f.degree() >= 2 * d {
            h = h.pow_mod(&big(self.p as i64), &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree() > 0 {
                groups.push((d, g.clone()));
                f = div_quot(&f, &g);
                h = h.rem(&f.clone().monic());
            }
            d += 1;
        }
        if !f.is_zero() && f.degree() > 0 {
            groups.push((f.degree(), f.clone()));
        }
        for (deg, g) in groups {
            split_equal_degree(&g, deg, &mut out);
        }
        out.sort_by(|a, b| (a.degree(), a.coeffs.clone()).cmp(&(b.degree(), b.coeffs.clone())));
        out
    }
}

fn div_quot(a: &ModPoly, d: &ModPoly) -> ModPoly {
    assert!(!d.is_zero());
    if a.is_zero() || a.degree() < d.degree() {
        return ModPoly::zero(a.p);
    }
    let mut r = a.coeffs.clone();
    let dd = d.degree();
    let lc_inv = a.inv_scalar(*d.coeffs.last().unwrap());
    let mut q = vec![0u64; a.degree() - dd + 1];
    while r.len() > dd {
        let top = *r.last().unwrap();
        let k = r.len() - 1 - dd;
        if top != 0 {
            let qc = a.mulmod(top, lc_inv);
            q[k] = qc;
            for j in 0..=dd {
                r[k + j] = (r[k + j] + a.p - a.mulmod(qc, d.coeffs[j])) % a.p;
            }
        }
        r.pop();
    }
    ModPoly { p: a.p, coeffs: q }.trim()
}

/// Cantor-Zassenhaus equal-degree splitting with a deterministic
/// pseudo-random trial family; p is odd.
fn split_equal_degree(g: &ModPoly, d: usize, out: &mut Vec<ModPoly>) {
    if g.degree() == d {
        out.push(g.monic());
        return;
    }
    let p = g.p;
    let e: BigInt = (big(p as i64).pow(d as u32) - 1) / 2;
    let mut state: u64 = 0x9E3779B97F4A7C15;
    for _trial in 0..10_000 {
        // deterministic "random" polynomial of degree < deg g
        let mut coeffs = vec![0u64; g.degree()];
        for c in coeffs.iter_mut() {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            *c = (state >> 33) % p;
        }
        let a = ModPoly { p, coeffs }.trim();
        if a.is_zero() || a.degree() == 0 {
            continue;
        }
        // a shared factor with a already splits g
        let shared = g.gcd(&a);
        if !shared.is_zero() && shared.degree() > 0 && shared.degree() < g.degree() {
            let other = div_quot(g, &shared);
            split_equal_degree(&shared, d, out);
            split_equal_degree(&other, d, out);
            return;
        }
        let t = a.pow_mod(&e, g);
        let h = g.gcd(&t.sub(&ModPoly::one(p)));
        if !h.is_zero() && h.degree() > 0 && h.degree() < g.degree() {
            let other = div_quot(g, &h);
            split_equal_degree(&h, d, out);
            split_equal_degree(&other, d, out);
            return;
        }
    }
    panic!("equal-degree splitting exhausted its trial family");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(desc: &[i64]) -> IntPoly {
        IntPoly::from_desc_i64(desc)
    }

    #[test]
    fn simple_factorizations() {
        // x^2 - 1 = (x-1)(x+1)
        let (c, f) = factor_q(&poly(&[1, 0, -1]));
        assert!(c.is_one());
        assert_eq!(f, vec![(poly(&[1, -1]), 1), (poly(&[1, 1]), 1)]);
        // irreducible quadratic
        let (_, f) = factor_q(&poly(&[1, -21, 92]));
        assert_eq!(f.len(), 1);
        assert!(is_irreducible(&poly(&[1, -21, 92])));
    }

    #[test]
    fn rho_x2_of_first_example() {
        // rho = x^2 - 10521x + 5308416; rho(x^2) = (x^2-123x+2304)(x^2+123x+2304)
        let rho = poly(&[1, -10521, 5308416]);
        let (c, f) = factor_q(&rho.compose_x2());
        assert!(c.is_one());
        assert_eq!(
            f,
            vec![
                (poly(&[1, -123, 2304]), 1),
                (poly(&[1, 123, 2304]), 1),
            ]
        );
    }

    #[test]
    fn rho_x2_of_second_example_irreducible() {
        let rho = poly(&[1, -11105, 1433600]);
        let (_, f) = factor_q(&rho.compose_x2());
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].0.degree(), 4);
    }

    #[test]
    fn multiplicities_and_content() {
        // 6 (x-1)^2 (x^2+1)
        let p = IntPoly::constant(big(6))
            .mul(&poly(&[1, -1]).pow(2))
            .mul(&poly(&[1, 0, 1]));
        let (c, f) = factor_q(&p);
        assert_eq!(c, big(6));
        assert_eq!(f, vec![(poly(&[1, -1]), 2), (poly(&[1, 0, 1]), 1)]);
        // product identity
        let mut back = IntPoly::constant(c);
        for (q, m) in &f {
            back = back.mul(&q.pow(*m));
        }
        assert_eq!(back, p);
    }

    #[test]
    fn high_multiplicity_char_poly_shape() {
        let p = poly(&[1, 5])
            .pow(8)
            .mul(&poly(&[1, -9]).pow(3))
            .mul(&poly(&[1, -21, 92]));
        let (c, f) = factor_q(&p);
        assert!(c.is_one());
        assert_eq!(
            f,
            vec![
                (poly(&[1, -9]), 3),
                (poly(&[1, 5]), 8),
                (poly(&[1, -21, 92]), 1),
            ]
        );
    }
}
