//! The per-configuration rule-out checks: trace bounds from zero angles,
//! integrality of q(S) entries, the delta sign search for two simple
//! conjugate eigenvalues, and the Euler mod-4 epsilon search.

use crate::num::{big, rat_squarefree_decompose, BigInt, BigRational};
use crate::poly::IntPoly;
use crate::quad::{QuadElem, QuadraticRoots};
use crate::seidel::{EigenvalueClass, SpectralData};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

/// Contradiction found by the principal-submatrix trace bound: `k` rows force
/// an order-(n-k) Seidel matrix with eigenvalue `lambda` of multiplicity
/// >= `mult`, but `mult * lambda^2 > (n-k)(n-k-1)`.
#[derive(Clone, Debug, Serialize)]
pub struct TraceContradiction {
    pub lambda: String,
    pub mult: u32,
    pub k: u64,
    pub sub_order: i64,
    pub lhs: String,
    pub rhs: i64,
}

/// Try every eigenvalue class against the configuration; `Some` on the first
/// contradiction.
pub fn trace_bound_check(
    spec: &SpectralData,
    rows: &[IntPoly],
    counts: &[u64],
) -> Option<TraceContradiction> {
    let n = spec.n as i64;
    for (class, mult) in &spec.classes {
        let Some(lam) = class.as_rational() else {
            continue;
        };
        let mut k: u64 = 0;
        for (f, c) in rows.iter().zip(counts) {
            if *c > 0 && f.eval_rat(lam).is_zero() {
                k += *c;
            }
        }
        if k == 0 {
            continue;
        }
        let sub = n - k as i64;
        if sub < 0 {
            continue;
        }
        let lhs = BigRational::from_integer(big(*mult as i64)) * lam * lam;
        let rhs = sub * (sub - 1);
        if lhs > BigRational::from_integer(big(rhs)) {
            return Some(TraceContradiction {
                lambda: lam.to_string(),
                mult: *mult,
                k,
                sub_order: sub,
                lhs: lhs.to_string(),
                rhs,
            });
        }
    }
    None
}

/// A real value of the form `c * sqrt(d)` with `c` rational and `d` a
/// squarefree positive integer (`d = 1` for rationals).
#[derive(Clone, Debug, PartialEq)]
pub struct Radical {
    pub c: BigRational,
    pub d: BigInt,
}

impl Radical {
    pub fn rational(c: BigRational) -> Radical {
        Radical { c, d: BigInt::one() }
    }

    pub fn is_integer(&self) -> bool {
        (self.d.is_one() && self.c.denom().is_one()) || self.c.is_zero()
    }

    pub fn render(&self) -> String {
        if self.d.is_one() || self.c.is_zero() {
            self.c.to_string()
        } else {
            format!("({})*sqrt({})", self.c, self.d)
        }
    }
}

/// Contradiction from a non-integral entry of a polynomial image q(S).
#[derive(Clone, Debug, Serialize)]
pub struct EntryContradiction {
    pub class_i: usize,
    pub class_j: usize,
    pub q_poly: String,
    pub values: Vec<String>,
}

/// The simple (multiplicity-1) eigenvalue classes, split into the rational
/// ones and at most one conjugate quadratic pair.
struct ActiveClasses {
    rationals: Vec<BigRational>,
    quad: Option<QuadraticRoots>,
}

fn active_classes(spec: &SpectralData) -> Option<ActiveClasses> {
    let mut rationals = Vec::new();
    let mut quad: Option<QuadraticRoots> = None;
    for (class, mult) in &spec.classes {
        if *mult != 1 {
            continue;
        }
        match class {
            EigenvalueClass::Rational(q) => rationals.push(q.clone()),
            EigenvalueClass::Quadratic { roots, index } => {
                if *index == 0 {
                    if quad.is_some() {
                        return None; // two distinct quadratic factors: skip
                    }
                    quad = Some(roots.clone());
                }
            }
            EigenvalueClass::Higher { .. } => return None,
        }
    }
    Some(ActiveClasses { rationals, quad })
}

/// `q(lambda)^2 * fg(lambda) / Min'(lambda)^2` at a rational eigenvalue.
fn rational_term(
    spec: &SpectralData,
    q: &IntPoly,
    fg: &IntPoly,
    lam: &BigRational,
) -> BigRational {
    let minp = spec.min.derivative();
    let ql = q.eval_rat(lam);
    let fgl = fg.eval_rat(lam);
    let mp = minp.eval_rat(lam);
    &ql * &ql * fgl / (&mp * &mp)
}

/// All attainable entry values for a class pair, as renderable radicals plus
/// opaque (certainly irrational) descriptions.
fn entry_value_set(
    spec: &SpectralData,
    q: &IntPoly,
    fi: &IntPoly,
    fj: &IntPoly,
    active: &ActiveClasses,
) -> (Vec<Radical>, Vec<String>) {
    let fg = fi.mul(fj);
    let mut rad_terms: Vec<Radical> = Vec::new();
    for lam in &active.rationals {
        let v2 = rational_term(spec, q, &fg, lam);
        if v2.is_zero() {
            continue;
        }
        // sqrt of v2 as c*sqrt(d): v2 = d * c^2
        let (d, c) = rat_squarefree_decompose(&v2);
        rad_terms.push(Radical { c, d });
    }
    let mut pair_mags: Vec<Radical> = Vec::new();
    let mut opaque: Vec<String> = Vec::new();
    if let Some(roots) = &active.quad {
        let minp = spec.min.derivative();
        let ql = roots.eval_poly(q, 0);
        let fgl = roots.eval_poly(&fg, 0);
        let mp = roots.eval_poly(&minp, 0);
        let t1sq = ql.mul(&ql).mul(&fgl).div(&mp.mul(&mp));
        if !t1sq.is_zero() {
            let tr = t1sq.trace();
            let nrm = t1sq.norm();
            match crate::num::rat_sqrt(&nrm) {
                Some(nu) => {
                    for sign in [1i64, -1] {
                        let s2 = &tr + BigRational::from_integer(big(2 * sign)) * &nu;
                        debug_assert!(!s2.is_negative());
                        if s2.is_zero() {
                            pair_mags.push(Radical::rational(BigRational::zero()));
                            continue;
                        }
                        let (d, _) = rat_squarefree_decompose(&s2);
                        match crate::num::rat_sqrt(&(&s2 / BigRational::from_integer(d.clone()))) {
                            Some(cp) => pair_mags.push(Radical { c: cp, d }),
                            None => opaque.push(format!("sqrt({s2})")),
                        }
                    }
                }
                None => {
                    opaque.push(format!("sqrt({tr} + 2*sqrt({nrm}))"));
                    opaque.push(format!("sqrt({tr} - 2*sqrt({nrm}))"));
                }
            }
        }
    }
    // attainable totals: choose signs for every rational term, plus one of
    // the pair magnitudes (with sign) when present
    let mut partials: Vec<BTreeMap<BigInt, BigRational>> = vec![BTreeMap::new()];
    for t in &rad_terms {
        let mut next = Vec::new();
        for p in &partials {
            for sign in [1i64, -1] {
                let mut m = p.clone();
                *m.entry(t.d.clone()).or_insert_with(BigRational::zero) +=
                    &t.c * BigRational::from_integer(big(sign));
                next.push(m);
            }
        }
        partials = next;
    }
    let mut final_maps: Vec<BTreeMap<BigInt, BigRational>> = Vec::new();
    if pair_mags.is_empty() {
        final_maps = partials;
    } else {
        for p in &partials {
            for t in &pair_mags {
                for sign in [1i64, -1] {
                    let mut m = p.clone();
                    *m.entry(t.d.clone()).or_insert_with(BigRational::zero) +=
                        &t.c * BigRational::from_integer(big(sign));
                    final_maps.push(m);
                }
            }
        }
    }
    let mut values = Vec::new();
    for m in final_maps {
        let nonzero: Vec<(&BigInt, &BigRational)> =
            m.iter().filter(|(_, c)| !c.is_zero()).collect();
        match nonzero.len() {
            0 => values.push(Radical::rational(BigRational::zero())),
            1 => values.push(Radical {
                c: nonzero[0].1.clone(),
                d: nonzero[0].0.clone(),
            }),
            _ => {
                // sum of radicals over distinct kernels: irrational, render
                let desc: Vec<String> = nonzero
                    .iter()
                    .map(|(d, c)| Radical {
                        c: (*c).clone(),
                        d: (*d).clone(),
                    }
                    .render())
                    .collect();
                opaque.push(desc.join(" + "));
            }
        }
    }
    values.sort_by(|a, b| (a.d.clone(), a.c.clone()).partial_cmp(&(b.d.clone(), b.c.clone())).unwrap());
    values.dedup();
    opaque.sort();
    opaque.dedup();
    (values, opaque)
}

/// Search all class pairs of a configuration for an entry of some `q(S)`
/// whose finitely many possible exact values are all non-integral.
pub fn integrality_entry_check(
    spec: &SpectralData,
    rows: &[IntPoly],
    counts: &[u64],
) -> Option<EntryContradiction> {
    let active = active_classes(spec)?;
    // multiple eigenvalue factors: each must vanish at f_i or f_j, else it
    // is killed by a factor of q
    let multiples: Vec<(IntPoly, u32)> = spec
        .char_factored
        .factors
        .iter()
        .filter(|(_, m)| *m >= 2)
        .cloned()
        .collect();
    let m = rows.len();
    for i in 0..m {
        for j in i..m {
            if counts[i] == 0 || counts[j] == 0 {
                continue;
            }
            if i == j && counts[i] < 2 {
                continue;
            }
            let mut q = IntPoly::one();
            for (xi, _) in &multiples {
                let vanishes = xi.divides(&rows[i]) || xi.divides(&rows[j]);
                if !vanishes {
                    q = q.mul(xi);
                }
            }
            let (values, opaque) = entry_value_set(spec, &q, &rows[i], &rows[j], &active);
            if values.is_empty() && opaque.is_empty() {
                continue; // everything vanished: entry 0 is an integer
            }
            let any_integral = values.iter().any(|v| v.is_integer());
            if !any_integral {
                let mut rendered: Vec<String> =
                    values.iter().map(|v| format!("+-{}", v.render())).collect();
                rendered.extend(opaque.iter().map(|o| format!("+-{o}")));
                return Some(EntryContradiction {
                    class_i: i,
                    class_j: j,
                    q_poly: q.expanded(),
                    values: rendered,
                });
            }
        }
    }
    None
}

/// Outcome of the delta search for two simple conjugate eigenvalues.
#[derive(Clone, Debug)]
pub struct DeltaOutcome {
    /// whether the uniqueness precondition (all entries of
    /// 2 q(l) a_l a_l^T non-integral) held
    pub precondition: bool,
    /// surviving class-level sign vectors (one entry per configuration
    /// class; zero-angle and zero-count classes are fixed to +1)
    pub deltas: Vec<Vec<i8>>,
    /// for each delta, the integer class matrix Psi(delta) = q(S) over the
    /// live (positive-count) classes
    pub psi_matrices: Vec<Vec<Vec<BigInt>>>,
}

/// Exact integer value of `u + s*w` where `u = q(l1) a_1(i) a_1(j)`,
/// `w = q(l2) a_2(i) a_2(j)`, given their squares in the quadratic field;
/// `None` when the value is not a rational integer.
fn pair_entry_integer(
    usq: &QuadElem,   // u^2 as element of Q(sqrt d), embedding l1
    qsign1: i32,
    qsign2: i32,
    s: i32,
) -> Option<BigInt> {
    if usq.is_zero() {
        return Some(BigInt::zero());
    }
    // v = u + s w; v^2 = tr(u^2) + 2 s * sign(u w) * sqrt(norm)
    let tr = usq.trace();
    let nrm = usq.norm();
    let nu = crate::num::rat_sqrt(&nrm)?;
    let sgn = qsign1 * qsign2 * s;
    let v2 = &tr + BigRational::from_integer(big(2 * sgn as i64)) * &nu;
    debug_assert!(!v2.is_negative(), "squared entry must be nonnegative");
    let k = crate::num::rat_sqrt(&v2)?;
    if !k.denom().is_one() {
        return None;
    }
    // sign of v = u + s w: u, w vanish together (a shared conjugate zero),
    // and otherwise sign(u) = qsign1, sign(w) = qsign2
    let sign_v = if usq.is_zero() {
        0
    } else if qsign1 == s * qsign2 {
        qsign1
    } else {
        // opposite signs: compare |u| and |w| via u^2 - w^2
        let diff = usq.sub(&usq.conj());
        match diff.sign() {
            1 => qsign1,
            -1 => s * qsign2,
            _ => 0,
        }
    };
    Some(big(sign_v as i64) * k.numer())
}

/// Delta sign search over configuration classes (Lemma on two simple
/// conjugate eigenvalues): find all class-level sign vectors, first active
/// class +1, making `q(l1) a1 a1^T + q(l2) (d o a2)(d o a2)^T` an integer
/// matrix with `a1` orthogonal to `d o a2`. Classes with equal `a1` values
/// are merged (they must share a sign).
pub fn delta_search(
    spec: &SpectralData,
    rows: &[IntPoly],
    counts: &[u64],
) -> Option<DeltaOutcome> {
    let active = active_classes(spec)?;
    let roots = active.quad.clone()?;
    let xi = roots.xi.clone();
    let q = spec.min.div_exact(&xi)?;
    let minp = spec.min.derivative();
    let m = rows.len();
    let live: Vec<usize> = (0..m).filter(|&i| counts[i] > 0).collect();

    // signs of q at the two roots
    let qs1 = roots.eval_poly(&q, 0).sign();
    let qs2 = roots.eval_poly(&q, 1).sign();

    // f_i(l1) values for merging; zero-angle classes take no part in the
    // sign search
    let fvals: Vec<QuadElem> = rows.iter().map(|f| roots.eval_poly(f, 0)).collect();

    // u^2 for a pair (i, j): q(l1)^2 f_i(l1) f_j(l1) / Min'(l1)^2
    let usq = |i: usize, j: usize| -> QuadElem {
        let ql = roots.eval_poly(&q, 0);
        let mp = roots.eval_poly(&minp, 0);
        ql.mul(&ql)
            .mul(&fvals[i])
            .mul(&fvals[j])
            .div(&mp.mul(&mp))
    };

    // precondition: all entries of 2 q(l1) a1 a1^T non-integral, over live
    // class pairs
    let mut precondition = true;
    'outer: for (ai, &i) in live.iter().enumerate() {
        for &j in live.iter().skip(ai) {
            let x = usq(i, j).mul_rat(&BigRational::from_integer(big(4)));
            // 2u: (2u)^2 = 4 u^2; integer iff 4u^2 is the square of an integer
            if let Some(r) = x.as_rational() {
                if let Some(k) = crate::num::rat_sqrt(&r) {
                    if k.denom().is_one() {
                        precondition = false;
                        break 'outer;
                    }
                }
            }
        }
    }

    // merge groups: classes with equal f(l1) (hence equal angles) share a
    // sign; zero-angle classes are excluded from the search
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut group_of: Vec<Option<usize>> = vec![None; m];
    for &i in &live {
        if fvals[i].is_zero() {
            continue;
        }
        let mut placed = false;
        for (gi, g) in groups.iter_mut().enumerate() {
            if fvals[g[0]] == fvals[i] {
                g.push(i);
                group_of[i] = Some(gi);
                placed = true;
                break;
            }
        }
        if !placed {
            group_of[i] = Some(groups.len());
            groups.push(vec![i]);
        }
    }
    let g = groups.len();
    let mut deltas = Vec::new();
    let mut psis = Vec::new();
    // orthogonality terms: n_i * a1(i) a2(i) = n_i sqrt(Norm(f_i(l1)) /
    // Norm(Min'(l1)))   (all nonnegative)
    let npl1 = roots.eval_poly(&minp, 0);
    let minp_norm = npl1.norm();
    for mask in 0..(1u64 << g.max(1).saturating_sub(1).min(63)) {
        // group 0 fixed +1
        let mut gsign = vec![1i32; g.max(1)];
        for b in 0..g.saturating_sub(1) {
            if mask >> b & 1 == 1 {
                gsign[b + 1] = -1;
            }
        }
        let sign_of = |i: usize| -> i32 {
            match group_of[i] {
                Some(gi) => gsign[gi],
                None => 1,
            }
        };
        // integrality of all live pairs
        let mut ok = true;
        let mut psi: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); live.len()]; live.len()];
        'pairs: for (ai, &i) in live.iter().enumerate() {
            for (aj, &j) in live.iter().enumerate().skip(ai) {
                let s = sign_of(i) * sign_of(j);
                match pair_entry_integer(&usq(i, j), qs1, qs2, s) {
                    Some(v) => {
                        psi[ai][aj] = v.clone();
                        psi[aj][ai] = v;
                    }
                    None => {
                        ok = false;
                        break 'pairs;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        // orthogonality: sum n_i delta_i sqrt(Norm(f_i(l1))) / sqrt(...)
        let mut kernels: BTreeMap<BigInt, BigRational> = BTreeMap::new();
        for &i in &live {
            let fnorm = fvals[i].norm();
            if fnorm.is_zero() {
                continue;
            }
            let v2 = &fnorm / &minp_norm;
            debug_assert!(!v2.is_negative(), "interlacing forces nonnegative products");
            let (d, c) = rat_squarefree_decompose(&v2);
            let signed = c
                * BigRational::from_integer(big(counts[i] as i64))
                * BigRational::from_integer(big(sign_of(i) as i64));
            *kernels.entry(d).or_insert_with(BigRational::zero) += signed;
        }
        if !kernels.values().all(|c| c.is_zero()) {
            continue;
        }
        deltas.push((0..m).map(|i| sign_of(i) as i8).collect());
        psis.push(psi);
    }
    Some(DeltaOutcome {
        precondition,
        deltas,
        psi_matrices: psis,
    })
}

/// Result of the Euler-switch epsilon search on an integer class matrix.
#[derive(Clone, Debug, Serialize)]
pub struct EpsilonOutcome {
    pub residue: u8,
    /// all class-level sign vectors (first live class +1) conjugating the
    /// matrix into the required residue class
    pub epsilons: Vec<Vec<i8>>,
    /// the conjugated class matrix for the first epsilon
    pub class_matrix: Option<Vec<Vec<String>>>,
}

/// The mod-4 residue forced on `prod (S - lambda_t I)` for the Euler
/// representative at odd order: `(n - 2 - l1 - l2) * prod_{t>=3} (n-1-l_t)`.
/// The first two shifts must be odd.
pub fn euler_residue(n: usize, shifts: &[&BigRational]) -> u8 {
    assert!(shifts.len() >= 2);
    let as_int = |q: &BigRational| -> i64 {
        assert!(q.denom().is_one());
        crate::num::to_i64(q.numer())
    };
    let l1 = as_int(shifts[0]);
    let l2 = as_int(shifts[1]);
    assert!(l1 % 2 != 0 && l2 % 2 != 0, "first two shifts must be odd");
    let mut r = (n as i64 - 2 - l1 - l2).rem_euclid(4);
    for s in &shifts[2..] {
        r = (r * (n as i64 - 1 - as_int(s))).rem_euclid(4);
    }
    r as u8
}

/// Exhaustive epsilon search: all class-level sign vectors making
/// `eps o T o eps` congruent to `residue * J` mod 4. The diagonal and
/// within-class entries are epsilon-invariant, so their residues are
/// checked first.
pub fn epsilon_search(
    t_matrix: &[Vec<BigInt>],
    counts: &[u64],
    residue: u8,
) -> EpsilonOutcome {
    let k = t_matrix.len();
    let live: Vec<usize> = (0..k).filter(|&i| counts[i] > 0).collect();
    let r = big(residue as i64);
    let four = big(4);
    // diagonal / within-class residues are fixed
    for &i in &live {
        if t_matrix[i][i].mod_floor(&four) != r {
            return EpsilonOutcome {
                residue,
                epsilons: vec![],
                class_matrix: None,
            };
        }
    }
    let mut epsilons = Vec::new();
    let mut first_matrix = None;
    let l = live.len();
    if l == 0 {
        return EpsilonOutcome {
            residue,
            epsilons: vec![],
            class_matrix: None,
        };
    }
    for mask in 0..(1u64 << (l - 1)) {
        let mut sign = vec![1i32; l];
        for b in 0..l - 1 {
            if mask >> b & 1 == 1 {
                sign[b + 1] = -1;
            }
        }
        let mut ok = true;
        'pairs: for a in 0..l {
            for b in a + 1..l {
                let v = &t_matrix[live[a]][live[b]] * big((sign[a] * sign[b]) as i64);
                if v.mod_floor(&four) != r {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if !ok {
            continue;
        }
        let mut eps = vec![1i8; k];
        for (a, &i) in live.iter().enumerate() {
            eps[i] = sign[a] as i8;
        }
        if first_matrix.is_none() {
            let mat: Vec<Vec<String>> = live
                .iter()
                .enumerate()
                .map(|(a, &i)| {
                    live.iter()
                        .enumerate()
                        .map(|(b, &j)| {
                            (&t_matrix[i][j] * big((sign[a] * sign[b]) as i64)).to_string()
                        })
                        .collect()
                })
                .collect();
            first_matrix = Some(mat);
        }
        epsilons.push(eps);
    }
    EpsilonOutcome {
        residue,
        epsilons,
        class_matrix: first_matrix,
    }
}
