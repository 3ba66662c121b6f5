//! Exact spectral data of totally-real monic integer polynomials: the
//! Char/Min/Quo/Sim/Rad quintuple, eigenvalue classes with multiplicities,
//! and angle values `f(lambda)/Min'(lambda)`.

use crate::num::BigRational;
use crate::poly::{
    cmp_algebraic, factor_q, interlaces, is_totally_real, poly_gcd, real_roots, AlgebraicRoot,
    FactoredPoly, IntPoly,
};
use crate::quad::{QuadElem, QuadraticRoots};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectralError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not totally real")]
    NotTotallyReal,
    #[error("angle polynomial degree must be deg Min - 1")]
    DegreeMismatch,
    #[error("angle polynomial does not interlace Min")]
    NotInterlacing,
    #[error("negative angle square (non-interlacing input slipped through)")]
    NegativeAngle,
    #[error("angle values at classes of degree > 2 are not supported")]
    UnsupportedClass,
}

/// One eigenvalue of a totally-real polynomial, exactly described.
#[derive(Clone, Debug)]
pub enum EigenvalueClass {
    Rational(BigRational),
    /// `index` 0 is the smaller root `(t - k sqrt(d))/2`.
    Quadratic { roots: QuadraticRoots, index: usize },
    /// Root `index` (ascending real order) of an irreducible factor of
    /// degree >= 3.
    Higher { poly: IntPoly, index: usize },
}

impl EigenvalueClass {
    pub fn defining_poly(&self) -> IntPoly {
        match self {
            EigenvalueClass::Rational(q) => {
                IntPoly::new(vec![-q.numer().clone(), q.denom().clone()])
            }
            EigenvalueClass::Quadratic { roots, .. } => roots.xi.clone(),
            EigenvalueClass::Higher { poly, .. } => poly.clone(),
        }
    }

    pub fn as_algebraic(&self) -> AlgebraicRoot {
        match self {
            EigenvalueClass::Rational(_) => {
                real_roots(&self.defining_poly()).pop().expect("linear root")
            }
            EigenvalueClass::Quadratic { roots, index } => {
                real_roots(&roots.xi).swap_remove(*index)
            }
            EigenvalueClass::Higher { poly, index } => real_roots(poly).swap_remove(*index),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            EigenvalueClass::Rational(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for EigenvalueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenvalueClass::Rational(q) => write!(f, "{q}"),
            EigenvalueClass::Quadratic { roots, index } => {
                let sign = if *index == 0 { '-' } else { '+' };
                write!(f, "({} {} {}*sqrt({}))/2", roots.t, sign, roots.k, roots.d)
            }
            EigenvalueClass::Higher { poly, index } => {
                write!(f, "root #{index} of {}", poly.expanded())
            }
        }
    }
}

/// Exact angle-square value: rational or an element of a real quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub enum AngleValue {
    Rational(BigRational),
    Quad(QuadElem),
}

impl AngleValue {
    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        match self {
            AngleValue::Rational(q) => q.is_zero(),
            AngleValue::Quad(q) => q.is_zero(),
        }
    }

    pub fn sign(&self) -> i32 {
        use num_traits::Signed;
        match self {
            AngleValue::Rational(q) => {
                if q.is_positive() {
                    1
                } else if q.is_negative() {
                    -1
                } else {
                    0
                }
            }
            AngleValue::Quad(q) => q.sign(),
        }
    }
}

impl fmt::Display for AngleValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AngleValue::Rational(q) => write!(f, "{q}"),
            AngleValue::Quad(q) => write!(f, "{q}"),
        }
    }
}

/// Factored spectral quintuple of a monic totally-real polynomial.
#[derive(Clone, Debug)]
pub struct SpectralData {
    pub n: usize,
    pub char_factored: FactoredPoly,
    pub char_poly: IntPoly,
    pub min: IntPoly,
    pub quo: IntPoly,
    pub sim: IntPoly,
    pub rad: IntPoly,
    /// Eigenvalue classes in ascending real order with multiplicities.
    pub classes: Vec<(EigenvalueClass, u32)>,
}

impl SpectralData {
    /// Multiplicity of the irreducible factor `xi` in the characteristic
    /// polynomial.
    pub fn factor_multiplicity(&self, xi: &IntPoly) -> u32 {
        self.char_factored
            .factors
            .iter()
            .find(|(f, _)| f == xi)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// Irreducible factors of Sim.
    pub fn sim_factors(&self) -> Vec<IntPoly> {
        self.char_factored
            .factors
            .iter()
            .filter(|(_, m)| *m == 1)
            .map(|(f, _)| f.clone())
            .collect()
    }
}

/// Compute the spectral quintuple of a monic totally-real polynomial.
pub fn spectral_data(p: &IntPoly) -> Result<SpectralData, SpectralError> {
    if p.is_zero() || !p.is_monic() {
        return Err(SpectralError::NotMonic);
    }
    if !is_totally_real(p) {
        return Err(SpectralError::NotTotallyReal);
    }
    let n = p.degree();
    let quo = if n == 0 {
        IntPoly::one()
    } else {
        poly_gcd(p, &p.derivative())
    };
    let min = p.div_exact(&quo).expect("gcd divides p");
    let (_, factors) = factor_q(&min);
    let mut fac_mult: Vec<(IntPoly, u32)> = Vec::new();
    let mut sim = IntPoly::one();
    for (xi, m) in &factors {
        debug_assert_eq!(*m, 1, "Min is squarefree");
        let mult = p.multiplicity_of(xi);
        if mult == 1 {
            sim = sim.mul(xi);
        }
        fac_mult.push((xi.clone(), mult));
    }
    // eigenvalue classes, ascending
    let mut keyed: Vec<(AlgebraicRoot, EigenvalueClass, u32)> = Vec::new();
    for (xi, mult) in &fac_mult {
        match xi.degree() {
            1 => {
                let val = BigRational::new(-xi.coeff(0), xi.coeff(1));
                let class = EigenvalueClass::Rational(val);
                keyed.push((class.as_algebraic(), class, *mult));
            }
            2 => {
                let roots = QuadraticRoots::new(xi).expect("totally real irreducible quadratic");
                for index in 0..2 {
                    let class = EigenvalueClass::Quadratic {
                        roots: roots.clone(),
                        index,
                    };
                    keyed.push((class.as_algebraic(), class, *mult));
                }
            }
            d => {
                for index in 0..d {
                    let class = EigenvalueClass::Higher {
                        poly: xi.clone(),
                        index,
                    };
                    keyed.push((class.as_algebraic(), class, *mult));
                }
            }
        }
    }
    keyed.sort_by(|a, b| cmp_algebraic(&a.0, &b.0));
    let classes: Vec<(EigenvalueClass, u32)> =
        keyed.into_iter().map(|(_, c, m)| (c, m)).collect();
    debug_assert_eq!(classes.iter().map(|(_, m)| *m as usize).sum::<usize>(), n);

    let char_factored = FactoredPoly::from_parts(num_traits::One::one(), fac_mult);
    Ok(SpectralData {
        n,
        char_factored,
        char_poly: p.clone(),
        min: min.clone(),
        quo,
        sim,
        rad: min,
        classes,
    })
}

/// Exact angle square `f(lambda) / Min'(lambda)` for an eigenvalue class.
///
/// `f` must be monic of degree `deg Min - 1` and `Quo * f` must interlace
/// the characteristic polynomial (checked via `f` interlacing `Min`).
pub fn angle_square(
    spec: &SpectralData,
    f: &IntPoly,
    class: &EigenvalueClass,
) -> Result<AngleValue, SpectralError> {
    if f.is_zero() || !f.is_monic() {
        return Err(SpectralError::NotMonic);
    }
    if f.degree() + 1 != spec.min.degree() {
        return Err(SpectralError::DegreeMismatch);
    }
    if !interlaces(f, &spec.min) {
        return Err(SpectralError::NotInterlacing);
    }
    let v = angle_square_unchecked(spec, f, class)?;
    if v.sign() < 0 {
        return Err(SpectralError::NegativeAngle);
    }
    Ok(v)
}

/// The same value without the interlacing precondition check (used by the
/// search pipelines, which already hold verified interlacing sets).
pub fn angle_square_unchecked(
    spec: &SpectralData,
    f: &IntPoly,
    class: &EigenvalueClass,
) -> Result<AngleValue, SpectralError> {
    let minp = spec.min.derivative();
    match class {
        EigenvalueClass::Rational(q) => {
            let num = f.eval_rat(q);
            let den = minp.eval_rat(q);
            Ok(AngleValue::Rational(num / den))
        }
        EigenvalueClass::Quadratic { roots, index } => {
            let num = roots.eval_poly(f, *index);
            let den = roots.eval_poly(&minp, *index);
            Ok(AngleValue::Quad(num.div(&den)))
        }
        EigenvalueClass::Higher { .. } => Err(SpectralError::UnsupportedClass),
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

    fn quad92_char() -> IntPoly {
        parse_poly("(x+5)^32*(x-9)^13*(x-11)^2*(x^2-21*x+92)").unwrap()
    }

    #[test]
    fn quintuple_of_section4_example() {
        let spec = spectral_data(&quad92_char()).unwrap();
        assert_eq!(
            spec.min,
            parse_poly("(x+5)*(x-9)*(x-11)*(x^2-21*x+92)").unwrap()
        );
        assert_eq!(
            spec.quo,
            parse_poly("(x+5)^31*(x-9)^12*(x-11)").unwrap()
        );
        assert_eq!(spec.sim, poly(&[1, -21, 92]));
        assert_eq!(spec.rad, spec.min);
        // classes ascending: -5, lam1=(21-s73)/2 (~6.2), 9, 11, lam2 (~14.8)
        assert_eq!(spec.classes.len(), 5);
        assert_eq!(spec.classes[0].0.as_rational(), Some(&rat_int(-5)));
        assert_eq!(spec.classes[0].1, 32);
        assert!(matches!(
            spec.classes[1].0,
            EigenvalueClass::Quadratic { index: 0, .. }
        ));
        assert_eq!(spec.classes[1].1, 1);
        assert_eq!(spec.classes[2].0.as_rational(), Some(&rat_int(9)));
        assert_eq!(spec.classes[2].1, 13);
        assert_eq!(spec.classes[3].0.as_rational(), Some(&rat_int(11)));
        assert_eq!(spec.classes[3].1, 2);
        assert!(matches!(
            spec.classes[4].0,
            EigenvalueClass::Quadratic { index: 1, .. }
        ));
    }

    #[test]
    fn squarefree_quintuple() {
        let p = parse_poly("(x-1)*(x-2)*(x-4)").unwrap();
        let spec = spectral_data(&p).unwrap();
        assert!(spec.quo.is_monic() && spec.quo.degree() == 0);
        assert_eq!(spec.sim, p);
        assert_eq!(spec.min, p);
    }

    #[test]
    fn sim_reads_multiplicity_one_factors() {
        let p = parse_poly("(x+5)^32*(x-7)*(x-9)^10*(x-11)^4*(x^2-19*x+76)").unwrap();
        let spec = spectral_data(&p).unwrap();
        assert_eq!(
            spec.sim,
            parse_poly("(x-7)*(x^2-19*x+76)").unwrap()
        );
    }

    #[test]
    fn rejects_non_totally_real() {
        assert_eq!(
            spectral_data(&poly(&[1, 0, 1])).unwrap_err(),
            SpectralError::NotTotallyReal
        );
    }

    #[test]
    fn quad92_angles() {
        let spec = spectral_data(&quad92_char()).unwrap();
        // f1 = x^4-36x^3+454x^2-2356x+4241 (the paper's f_2 reduced part),
        // class 11 -> 1/36; f3-part -> 0 at 11; f1-part -> 1/9 at 11.
        let f1 = poly(&[1, -36, 454, -2364, 4281]);
        let f2 = poly(&[1, -36, 454, -2356, 4241]);
        let f3 = poly(&[1, -11]).mul(&poly(&[1, -25, 179, -379]));
        let eleven = EigenvalueClass::Rational(rat_int(11));
        assert_eq!(
            angle_square(&spec, &f1, &eleven).unwrap(),
            AngleValue::Rational(rat(1, 9))
        );
        assert_eq!(
            angle_square(&spec, &f2, &eleven).unwrap(),
            AngleValue::Rational(rat(1, 36))
        );
        assert_eq!(
            angle_square(&spec, &f3, &eleven).unwrap(),
            AngleValue::Rational(rat(0, 1))
        );
        // quadratic class lam1: f1-part angle = (949+107*sqrt73)/97236
        let lam1 = spec.classes[1].0.clone();
        let v = angle_square(&spec, &f1, &lam1).unwrap();
        match v {
            AngleValue::Quad(q) => {
                assert_eq!(q.a, rat(949, 97236));
                assert_eq!(q.b, rat(107, 97236));
                assert_eq!(q.d, 73);
            }
            _ => panic!("expected quadratic value"),
        }
    }
}
