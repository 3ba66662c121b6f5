//! The linear-algebraic core: coefficient systems in the reduced
//! (divided-by-Quo) space, exact rational simplex for feasibility, Farkas
//! certificates of infeasibility and warranty, and enumeration of integer
//! interlacing configurations.

use crate::num::{big, BigInt, BigRational};
use crate::poly::IntPoly;
use crate::seidel::SpectralData;
use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FeasError {
    #[error("certificate length {got} does not match coefficient space {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("row count {0} exceeds the configuration-enumeration bound")]
    TooManyRows(usize),
}

/// Rows are reduced interlacing polynomials (monic, degree e-1, coefficient
/// vectors of length e in descending order); the target is the coefficient
/// vector of p'/Quo (leading coefficient n).
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub rows: Vec<IntPoly>,
    pub row_vecs: Vec<Vec<BigInt>>,
    pub target: Vec<BigInt>,
    pub order: usize,
}

impl ReducedSystem {
    /// Build from the spectrum of the candidate and its reduced interlacing
    /// polynomials.
    pub fn new(spec: &SpectralData, rows: Vec<IntPoly>) -> ReducedSystem {
        let e = spec.min.degree();
        let dp = spec.char_poly.derivative();
        let target_poly = dp
            .div_exact(&spec.quo)
            .expect("Quo = gcd(p, p') divides p'");
        let target = target_poly.desc_coeffs(e);
        let row_vecs = rows.iter().map(|f| f.desc_coeffs(e)).collect();
        ReducedSystem {
            rows,
            row_vecs,
            target,
            order: spec.n,
        }
    }

    pub fn width(&self) -> usize {
        self.target.len()
    }

    /// Subsystem with the given row indices removed.
    pub fn without(&self, excluded: &[usize]) -> ReducedSystem {
        let keep: Vec<usize> = (0..self.rows.len())
            .filter(|i| !excluded.contains(i))
            .collect();
        ReducedSystem {
            rows: keep.iter().map(|&i| self.rows[i].clone()).collect(),
            row_vecs: keep.iter().map(|&i| self.row_vecs[i].clone()).collect(),
            target: self.target.clone(),
            order: self.order,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub enum CertKind {
    Infeasibility,
    /// indices (into the owning system's rows) of the warranted subset
    Warranty(Vec<usize>),
}

/// A rational Farkas vector.
#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    #[serde(serialize_with = "ser_rat_vec")]
    pub y: Vec<BigRational>,
    pub kind: CertKind,
}

fn ser_rat_vec<S: serde::Serializer>(v: &Vec<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for q in v {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

impl Certificate {
    pub fn from_integers(y: &[i64], kind: CertKind) -> Certificate {
        Certificate {
            y: y.iter().map(|&v| BigRational::from_integer(big(v))).collect(),
            kind,
        }
    }
}

fn dot(row: &[BigInt], y: &[BigRational]) -> BigRational {
    row.iter()
        .zip(y)
        .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
        .sum()
}

/// Exact verification of a Farkas certificate against a system.
///
/// Infeasibility: `A y >= 0` componentwise and `b . y < 0`.
/// Warranty(W): `(A y)_w < 0` for all `w` in `W`, `(A y)_f >= 0` for all
/// other rows, and `b . y < 0`.
pub fn verify_certificate(sys: &ReducedSystem, cert: &Certificate) -> Result<bool, FeasError> {
    if cert.y.len() != sys.width() {
        return Err(FeasError::DimensionMismatch {
            got: cert.y.len(),
            want: sys.width(),
        });
    }
    let by = dot(&sys.target, &cert.y);
    if !by.is_negative() {
        return Ok(false);
    }
    match &cert.kind {
        CertKind::Infeasibility => Ok(sys
            .row_vecs
            .iter()
            .all(|r| !dot(r, &cert.y).is_negative())),
        CertKind::Warranty(w) => {
            for (i, r) in sys.row_vecs.iter().enumerate() {
                let v = dot(r, &cert.y);
                if w.contains(&i) {
                    if !v.is_negative() {
                        return Ok(false);
                    }
                } else if v.is_negative() {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// Search for a certificate of infeasibility of `x^T A = b^T, x >= 0` with
/// the rows in `excluded` removed. Exact rational phase-1 simplex with
/// Bland's rule; `None` means the subsystem is feasible over the rationals.
/// Any returned certificate has been re-verified.
pub fn find_certificate(sys: &ReducedSystem, excluded: &[usize]) -> Option<Certificate> {
    let sub = if excluded.is_empty() {
        sys.clone()
    } else {
        sys.without(excluded)
    };
    let y = phase1_farkas(&sub)?;
    let cert = Certificate {
        y,
        kind: if excluded.is_empty() {
            CertKind::Infeasibility
        } else {
            CertKind::Warranty(excluded.to_vec())
        },
    };
    // re-verify on the subsystem as a plain infeasibility certificate
    let plain = Certificate {
        y: cert.y.clone(),
        kind: CertKind::Infeasibility,
    };
    assert!(
        verify_certificate(&sub, &plain).unwrap(),
        "simplex returned an invalid Farkas certificate"
    );
    Some(cert)
}

/// Phase-1 simplex on `A^T x = b, x >= 0` (columns = system rows). Returns
/// the Farkas vector `y` with `A y >= 0`, `b . y < 0` when infeasible.
fn phase1_farkas(sys: &ReducedSystem) -> Option<Vec<BigRational>> {
    let e = sys.width();
    let m = sys.rows.len();
    // constraints: sigma_i * sum_j x_j row_j[i] + z_i = sigma_i b[i] >= 0
    let mut sigma = vec![BigRational::from_integer(big(1)); e];
    let mut rhs: Vec<BigRational> = sys
        .target
        .iter()
        .map(|b| BigRational::from_integer(b.clone()))
        .collect();
    for i in 0..e {
        if rhs[i].is_negative() {
            sigma[i] = BigRational::from_integer(big(-1));
            rhs[i] = -rhs[i].clone();
        }
    }
    // tableau: e rows, m + e columns
    let mut t: Vec<Vec<BigRational>> = (0..e)
        .map(|i| {
            let mut row: Vec<BigRational> = Vec::with_capacity(m + e);
            for j in 0..m {
                row.push(
                    BigRational::from_integer(sys.row_vecs[j][i].clone()) * &sigma[i],
                );
            }
            for k in 0..e {
                row.push(if k == i {
                    BigRational::from_integer(big(1))
                } else {
                    BigRational::zero()
                });
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + e).collect();

    loop {
        // reduced costs: c_j - sum over basic rows with c_basic = 1 for
        // artificial basics
        let mut entering = None;
        for j in 0..m + e {
            if basis.contains(&j) {
                continue;
            }
            let cj = if j >= m {
                BigRational::from_integer(big(1))
            } else {
                BigRational::zero()
            };
            let mut dual = BigRational::zero();
            for (i, &bi) in basis.iter().enumerate() {
                if bi >= m {
                    dual += &t[i][j];
                }
            }
            let red = cj - dual;
            if red.is_negative() {
                entering = Some(j);
                break; // Bland: first (smallest index) negative
            }
        }
        let Some(enter) = entering else {
            // optimal: objective is sum of basic artificial values
            let mut obj = BigRational::zero();
            for (i, &bi) in basis.iter().enumerate() {
                if bi >= m {
                    obj += &rhs[i];
                }
            }
            if obj.is_zero() {
                return None; // feasible
            }
            // infeasible: y'_i = 1 - redcost(z_i); redcost(z_i) = 1 - dual_i
            // so y'_i = dual over column m+i
            let mut y = Vec::with_capacity(e);
            for i in 0..e {
                let mut dual = BigRational::zero();
                for (r, &br) in basis.iter().enumerate() {
                    if br >= m {
                        dual += &t[r][m + i];
                    }
                }
                // Farkas for the original orientation: flip sigma and negate
                y.push(-(dual * &sigma[i]));
            }
            return Some(y);
        };
        // ratio test (Bland tie-break: smallest basis index)
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..e {
            if t[i][enter].is_positive() {
                let ratio = &rhs[i] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave.expect("phase-1 objective is bounded");
        // pivot
        let piv = t[leave][enter].clone();
        for v in t[leave].iter_mut() {
            *v /= &piv;
        }
        rhs[leave] /= &piv;
        for i in 0..e {
            if i == leave || t[i][enter].is_zero() {
                continue;
            }
            let f = t[i][enter].clone();
            for j in 0..m + e {
                let delta = &t[leave][j] * &f;
                t[i][j] -= delta;
            }
            let delta = &rhs[leave] * &f;
            rhs[i] -= delta;
        }
        basis[leave] = enter;
    }
}

/// A nonnegative integer solution of the reduced system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub counts: Vec<u64>,
}

/// Complete enumeration of nonnegative integer solutions, plus the unique
/// rational solution when the system is uniquely solvable (reported so the
/// non-integrality argument is visible).
pub fn enumerate_configurations(
    sys: &ReducedSystem,
) -> Result<(Vec<Configuration>, Option<Vec<BigRational>>), FeasError> {
    let m = sys.rows.len();
    if m > 64 {
        return Err(FeasError::TooManyRows(m));
    }
    let mut configs = Vec::new();
    let mut counts = vec![0u64; m];
    // residual starts at the target; its leading coordinate is the
    // remaining total count
    let mut residual: Vec<BigInt> = sys.target.clone();
    fn rec(
        sys: &ReducedSystem,
        i: usize,
        counts: &mut Vec<u64>,
        residual: &mut Vec<BigInt>,
        configs: &mut Vec<Configuration>,
    ) {
        let m = sys.rows.len();
        let e = sys.width();
        if residual[0].is_negative() {
            return;
        }
        if i == m {
            if residual.iter().all(|v| v.is_zero()) {
                configs.push(Configuration {
                    counts: counts.clone(),
                });
            }
            return;
        }
        // per-coordinate interval feasibility of the residual against the
        // remaining rows
        let remaining = residual[0].clone();
        for c in 1..e {
            let mut lo: Option<&BigInt> = None;
            let mut hi: Option<&BigInt> = None;
            for j in i..m {
                let v = &sys.row_vecs[j][c];
                lo = Some(lo.map_or(v, |l| l.min(v)));
                hi = Some(hi.map_or(v, |h| h.max(v)));
            }
            let (lo, hi) = (lo.unwrap(), hi.unwrap());
            if residual[c] < lo * &remaining || residual[c] > hi * &remaining {
                return;
            }
        }
        let cap = crate::num::to_i64(&remaining) as u64;
        for k in 0..=cap {
            counts[i] = k;
            rec(sys, i + 1, counts, residual, configs);
            if k < cap {
                for c in 0..e {
                    residual[c] -= &sys.row_vecs[i][c];
                }
            }
        }
        // restore the cap subtractions
        for c in 0..e {
            residual[c] += &sys.row_vecs[i][c] * big(cap as i64);
        }
        counts[i] = 0;
    }
    rec(sys, 0, &mut counts, &mut residual, &mut configs);
    configs.sort_by(|a, b| a.counts.cmp(&b.counts));

    // unique rational solution diagnostics: solve A^T x = b exactly
    let unique = unique_rational_solution(sys);
    Ok((configs, unique))
}

/// Solve `sum_j x_j row_j = target` exactly; `Some(x)` iff the solution
/// exists and is unique.
pub fn unique_rational_solution(sys: &ReducedSystem) -> Option<Vec<BigRational>> {
    let m = sys.rows.len();
    let e = sys.width();
    // augmented system: e equations, m unknowns
    let mut aug: Vec<Vec<BigRational>> = (0..e)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..m)
                .map(|j| BigRational::from_integer(sys.row_vecs[j][i].clone()))
                .collect();
            row.push(BigRational::from_integer(sys.target[i].clone()));
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0usize;
    for c in 0..m {
        if r >= e {
            break;
        }
        let piv = (r..e).find(|&i| !aug[i][c].is_zero());
        let Some(p) = piv else { continue };
        aug.swap(r, p);
        let pv = aug[r][c].clone();
        for v in aug[r].iter_mut() {
            *v /= &pv;
        }
        for i in 0..e {
            if i != r && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                for j in 0..=m {
                    let d = &aug[r][j] * &f;
                    aug[i][j] -= d;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    // consistency
    for i in r..e {
        if !aug[i][m].is_zero() {
            return None;
        }
    }
    if pivots.len() < m {
        return None; // underdetermined
    }
    let mut x = vec![BigRational::zero(); m];
    for &(row, col) in &pivots {
        x[col] = aug[row][m].clone();
    }
    Some(x)
}

/// All minimal warranted subsets up to the given size, each with a verified
/// certificate of warranty. Singletons are searched first; pairs are only
/// reported when no singleton is warranted (so that every certificate also
/// satisfies the strict-negativity characterization on its subset).
pub fn find_warranted_subsets(
    sys: &ReducedSystem,
    max_size: usize,
) -> Vec<(Vec<usize>, Certificate)> {
    let m = sys.rows.len();
    let mut out = Vec::new();
    for i in 0..m {
        if let Some(cert) = find_certificate(sys, &[i]) {
            let w = Certificate {
                y: cert.y,
                kind: CertKind::Warranty(vec![i]),
            };
            debug_assert!(verify_certificate(sys, &w).unwrap());
            out.push((vec![i], w));
        }
    }
    if !out.is_empty() || max_size < 2 {
        return out;
    }
    for i in 0..m {
        for j in i + 1..m {
            if let Some(cert) = find_certificate(sys, &[i, j]) {
                let w = Certificate {
                    y: cert.y,
                    kind: CertKind::Warranty(vec![i, j]),
                };
                debug_assert!(verify_certificate(sys, &w).unwrap());
                out.push((vec![i, j], w));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::interlacing_charpolys;
    use crate::poly::parse_poly;

    fn quad92_system() -> ReducedSystem {
        let p = parse_poly("(x+5)^32*(x-9)^13*(x-11)^2*(x^2-21*x+92)").unwrap();
        let set = interlacing_charpolys(&p, None, 1_000_000_000).unwrap();
        ReducedSystem::new(&set.spec, set.reduced)
    }

    #[test]
    fn trivial_certificate() {
        // A = [1] (single row "polynomial" stand-in), b = (-1), y = (1)
        let sys = ReducedSystem {
            rows: vec![IntPoly::one()],
            row_vecs: vec![vec![big(1)]],
            target: vec![big(-1)],
            order: 1,
        };
        let cert = Certificate::from_integers(&[1], CertKind::Infeasibility);
        assert!(verify_certificate(&sys, &cert).unwrap());
        // dimension mismatch reported
        let bad = Certificate::from_integers(&[1, 2], CertKind::Infeasibility);
        assert!(verify_certificate(&sys, &bad).is_err());
    }

    #[test]
    fn quad92_paper_warranty_verifies() {
        let sys = quad92_system();
        assert_eq!(sys.rows.len(), 51);
        let w1 = parse_poly("x^4-36*x^3+454*x^2-2356*x+4241").unwrap();
        let w2 = parse_poly("(x-11)*(x^3-25*x^2+179*x-379)").unwrap();
        let i1 = sys.rows.iter().position(|f| *f == w1).unwrap();
        let i2 = sys.rows.iter().position(|f| *f == w2).unwrap();
        let cert = Certificate::from_integers(
            &[-17507602, 0, 0, -9281, -1031],
            CertKind::Warranty(vec![i1, i2]),
        );
        assert!(verify_certificate(&sys, &cert).unwrap());
        // and the full system is feasible (no infeasibility certificate)
        assert!(find_certificate(&sys, &[]).is_none());
        // find_warranted_subsets re-derives some warranted pair containing
        // no singleton
        let subsets = find_warranted_subsets(&sys, 2);
        assert!(!subsets.is_empty());
        assert!(subsets.iter().all(|(s, _)| s.len() == 2));
        assert!(subsets.iter().any(|(s, _)| s == &vec![i1.min(i2), i2.max(i1)]));
    }

    #[test]
    fn feasible_when_target_is_row_multiple() {
        // target = n * (a single row): trivially feasible
        let p = parse_poly("(x+5)^32*(x-9)^13*(x-11)^2*(x^2-21*x+92)").unwrap();
        let set = interlacing_charpolys(&p, None, 1_000_000_000).unwrap();
        let f = set.reduced[0].clone();
        let e = set.spec.min.degree();
        let mut target = f.desc_coeffs(e);
        for t in target.iter_mut() {
            *t *= big(48);
        }
        let sys = ReducedSystem {
            rows: vec![f.clone()],
            row_vecs: vec![f.desc_coeffs(e)],
            target,
            order: 49,
        };
        assert!(find_certificate(&sys, &[]).is_none());
        let (configs, unique) = enumerate_configurations(&sys).unwrap();
        assert_eq!(configs, vec![Configuration { counts: vec![48] }]);
        assert_eq!(
            unique.unwrap(),
            vec![BigRational::from_integer(big(48))]
        );
    }
}
