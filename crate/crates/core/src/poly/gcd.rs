//! Polynomial gcd over Z via the primitive remainder sequence, plus Yun's
//! squarefree decomposition.

use super::IntPoly;

/// Gcd of two integer polynomials in primitive form with positive leading
/// coefficient. For inputs with a common factor `r`, `poly_gcd(p*r, q*r)`
/// equals `poly_gcd(p, q) * r` up to sign normalization.
pub fn poly_gcd(p: &IntPoly, q: &IntPoly) -> IntPoly {
    assert!(!(p.is_zero() && q.is_zero()), "gcd of two zero polynomials");
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    let mut a = p.primitive_part();
    let mut b = q.primitive_part();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    // Primitive PRS: contents are stripped every step, so coefficient growth
    // stays modest at the degrees this crate handles.
    loop {
        let r = a.signed_pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive_part();
        }
        if r.degree() == 0 {
            return IntPoly::one();
        }
        a = b;
        b = r.primitive_part();
    }
}

/// `p / gcd(p, p')`: the squarefree part (primitive, positive lc).
pub fn squarefree_part(p: &IntPoly) -> IntPoly {
    assert!(!p.is_zero());
    if p.degree() == 0 {
        return IntPoly::one();
    }
    let g = poly_gcd(p, &p.derivative());
    if g.degree() == 0 {
        return p.primitive_part();
    }
    p.primitive_part()
        .div_exact(&g)
        .expect("gcd must divide p")
}

/// Yun's algorithm: returns `[(g_1, 1), (g_2, 2), ...]` with
/// `p = content * prod g_i^i` and the `g_i` pairwise coprime squarefree
/// (factors of multiplicity zero are omitted).
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, u32)> {
    assert!(!p.is_zero());
    let p = p.primitive_part();
    if p.degree() == 0 {
        return vec![];
    }
    let dp = p.derivative();
    let a0 = poly_gcd(&p, &dp);
    if a0.degree() == 0 {
        return vec![(p, 1)];
    }
    let mut out = Vec::new();
    let mut b = p.div_exact(&a0).expect("a0 | p");
    let mut c = dp.div_exact(&a0).expect("a0 | p'");
    let mut i = 1u32;
    loop {
        let d = c.sub(&b.derivative());
        if d.is_zero() {
            if b.degree() > 0 {
                out.push((b, i));
            }
            break;
        }
        let a = poly_gcd(&b, &d);
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).expect("a | b");
        c = d.div_exact(&a).expect("a | d");
        if b.degree() == 0 {
            break;
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(desc: &[i64]) -> IntPoly {
        IntPoly::from_desc_i64(desc)
    }

    #[test]
    fn shared_linear_factor() {
        // gcd(x^2 - 1, x - 1) = x - 1
        assert_eq!(poly_gcd(&poly(&[1, 0, -1]), &poly(&[1, -1])), poly(&[1, -1]));
    }

    #[test]
    fn factored_inputs() {
        // gcd((x+5)^2 (x-9), (x+5)(x-9)^2) = (x+5)(x-9)
        let a = poly(&[1, 5]).pow(2).mul(&poly(&[1, -9]));
        let b = poly(&[1, 5]).mul(&poly(&[1, -9]).pow(2));
        let g = poly(&[1, 5]).mul(&poly(&[1, -9]));
        assert_eq!(poly_gcd(&a, &b), g);
    }

    #[test]
    fn quo_of_section4_example() {
        // p = (x+5)^32 (x-9)^13 (x-11)^2 (x^2-21x+92)
        // gcd(p, p') = (x+5)^31 (x-9)^12 (x-11)
        let p = poly(&[1, 5])
            .pow(32)
            .mul(&poly(&[1, -9]).pow(13))
            .mul(&poly(&[1, -11]).pow(2))
            .mul(&poly(&[1, -21, 92]));
        let expect = poly(&[1, 5])
            .pow(31)
            .mul(&poly(&[1, -9]).pow(12))
            .mul(&poly(&[1, -11]));
        assert_eq!(poly_gcd(&p, &p.derivative()), expect);
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^3 (x+2)^2 (x-5)
        let p = poly(&[1, -1])
            .pow(3)
            .mul(&poly(&[1, 2]).pow(2))
            .mul(&poly(&[1, -5]));
        let d = squarefree_decomposition(&p);
        assert_eq!(
            d,
            vec![
                (poly(&[1, -5]), 1),
                (poly(&[1, 2]), 2),
                (poly(&[1, -1]), 3),
            ]
        );
        assert_eq!(squarefree_part(&p), poly(&[1, -1]).mul(&poly(&[1, 2])).mul(&poly(&[1, -5])).primitive_part());
    }
}
