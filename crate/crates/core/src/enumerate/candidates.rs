//! Candidate characteristic polynomials for 49 equiangular lines in R^17:
//! all monic totally-real phi of degree 13 with the forced top coefficients
//! such that (x+5)^32 (x-9)^4 phi passes the divisibility and mod-2^7 class
//! conditions.

use super::{enumerate, newton_top_coeffs, ClassCondition, ClassSet, EnumError, EnumSpec,
    TypeCondition};
use crate::poly::{parse_poly, IntPoly};

pub const ORDER: usize = 49;
pub const PHI_DEGREE: usize = 13;

/// `(x+5)^32 (x-9)^4`
pub fn fixed_factor() -> IntPoly {
    parse_poly("(x+5)^32*(x-9)^4").expect("static polynomial parses")
}

/// All candidate cofactors `phi` in lexicographic order. The full candidate
/// characteristic polynomials are `fixed_factor() * phi`.
pub fn candidate_charpolys(
    class_set: &ClassSet,
    node_budget: u64,
) -> Result<Vec<IntPoly>, EnumError> {
    if !(class_set.n == ORDER && class_set.e == 7 && class_set.saturated) {
        return Err(EnumError::UnsaturatedClassSet(class_set.n, class_set.e));
    }
    let fixed = fixed_factor();
    let (b1, b2) = newton_top_coeffs(ORDER, &fixed, PHI_DEGREE)?;
    let mut es = EnumSpec::new(PHI_DEGREE, b1, b2);
    es.node_budget = node_budget;
    es.type_condition = TypeCondition::WeaklyType2;
    es.class_condition = Some(ClassCondition {
        fixed_factor: fixed,
        classes: class_set,
    });
    enumerate(&es)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::big;

    #[test]
    fn forced_top_coefficients() {
        let (b1, b2) = newton_top_coeffs(ORDER, &fixed_factor(), PHI_DEGREE).unwrap();
        assert_eq!((b1, b2), (big(-124), big(7074)));
    }
}
