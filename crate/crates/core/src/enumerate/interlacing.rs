//! Interlacing characteristic polynomials: for a putative characteristic
//! polynomial `p` of order n, all monic `f` of degree `deg Min - 1` such
//! that `Quo * f` could be the characteristic polynomial of an order-(n-1)
//! principal submatrix.

use super::{enumerate, ClassCondition, ClassSet, EnumError, EnumSpec, TypeCondition};
use crate::num::big;
use crate::poly::IntPoly;
use crate::seidel::{spectral_data, SpectralData};

/// The interlacing set of a candidate: reduced polynomials `f` and their
/// full forms `Quo * f`, in deterministic lexicographic order.
#[derive(Clone, Debug)]
pub struct InterlacingSet {
    pub spec: SpectralData,
    pub reduced: Vec<IntPoly>,
    pub full: Vec<IntPoly>,
}

impl InterlacingSet {
    pub fn len(&self) -> usize {
        self.reduced.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reduced.is_empty()
    }
}

/// Enumerate the interlacing characteristic polynomials of `p`.
///
/// Required conditions on the reduced `f` of degree `e-1`
/// (`Min = sum a_i x^{e-i}`):
/// top coefficients `b_0 = 1`, `b_1 = a_1`, `b_2 = a_2 + n - 1`;
/// `f` interlaces `Rad(p)`; `f(x-1)` weakly type 2, and type 2 when `n-1`
/// is even; and when `n-1` is odd, `Quo * f mod 2^7` lies in `P_{n-1,7}`
/// (pass the saturated set in `class_set`).
pub fn interlacing_charpolys(
    p: &IntPoly,
    class_set: Option<&ClassSet>,
    node_budget: u64,
) -> Result<InterlacingSet, EnumError> {
    let spec = spectral_data(p).expect("candidate characteristic polynomials are totally real");
    let n = spec.n;
    let e = spec.min.degree();
    assert!(e >= 3, "minimal polynomial too small for enumeration");
    let a1 = spec.min.coeff(e - 1);
    let a2 = spec.min.coeff(e - 2);
    let b1 = a1;
    let b2 = a2 + big((n - 1) as i64);

    let mut es = EnumSpec::new(e - 1, b1, b2);
    es.node_budget = node_budget;
    es.interlace_target = Some(spec.min.clone());
    es.type_condition = if (n - 1) % 2 == 0 {
        TypeCondition::Type2
    } else {
        TypeCondition::WeaklyType2
    };
    if (n - 1) % 2 == 1 {
        let set = class_set.expect("odd child order requires a class set");
        if !set.saturated {
            return Err(EnumError::UnsaturatedClassSet(set.n, set.e));
        }
        assert_eq!(set.n, n - 1, "class set order mismatch");
        es.class_condition = Some(ClassCondition {
            fixed_factor: spec.quo.clone(),
            classes: set,
        });
    }
    let reduced = enumerate(&es)?;
    let full = reduced.iter().map(|f| spec.quo.mul(f)).collect();
    Ok(InterlacingSet { spec, reduced, full })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn quad92_has_51_interlacing_polys() {
        let p = parse_poly("(x+5)^32*(x-9)^13*(x-11)^2*(x^2-21*x+92)").unwrap();
        let set = interlacing_charpolys(&p, None, 1_000_000_000).unwrap();
        assert_eq!(set.len(), 51);
        // the two warranted polynomials of the lemma are present
        let w1 = parse_poly("x^4-36*x^3+454*x^2-2356*x+4241").unwrap();
        let w2 = parse_poly("(x-11)*(x^3-25*x^2+179*x-379)").unwrap();
        assert!(set.reduced.contains(&w1));
        assert!(set.reduced.contains(&w2));
    }

    #[test]
    fn set_b_polynomials_have_empty_interlacing_sets() {
        for s in [
            "(x+5)^32*(x-8)*(x-9)^8*(x^2-20*x+95)^4",
            "(x+5)^32*(x-8)*(x-9)^12*(x^2-22*x+113)^2",
        ] {
            let p = parse_poly(s).unwrap();
            let set = interlacing_charpolys(&p, None, 1_000_000_000).unwrap();
            assert!(set.is_empty(), "{s} should have no interlacing polys");
        }
    }

    #[test]
    fn fiveint_has_36() {
        let p = parse_poly("(x+5)^32*(x-7)*(x-9)^14*(x-12)*(x-15)").unwrap();
        let set = interlacing_charpolys(&p, None, 1_000_000_000).unwrap();
        assert_eq!(set.len(), 36);
        let w = parse_poly("(x-7)*(x^3-31*x^2+291*x-757)").unwrap();
        assert!(set.reduced.contains(&w));
    }
}
