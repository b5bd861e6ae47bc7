//! The twist-coefficient polynomials `v1` and `v2` of the k-move expansion
//! of the Kauffman polynomial.
//!
//! `v1^{(k)}(x)` is the shifted Chebyshev polynomial satisfying
//! `v1^{(k)}(p + p^{-1}) = (p^k - p^{-k})/(p - p^{-1})`, built from the
//! recurrence `v1^{(k)} = x v1^{(k-1)} - v1^{(k-2)}` with `v1^{(1)} = 1`,
//! `v1^{(2)} = x`. `v2^{(k)}(a, x) = sum_{i=1}^{k-1} v1^{(i)}(x) a^{i-k}`.

use super::laurent::{LaurentPoly, Var};
use super::laurent2::LaurentPoly2;

/// `v1^{(k)}` in the variable `x`. `v1^{(0)} = 0`.
pub fn chebyshev_v1(k: u32) -> LaurentPoly {
    let x = LaurentPoly::variable(Var::X);
    let mut prev = LaurentPoly::zero(Var::X); // v1^{(0)}
    let mut cur = LaurentPoly::one(Var::X); // v1^{(1)}
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &(&x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `v2^{(k)}` in the variables `(a, x)`. Empty sum (zero) for `k = 1`.
pub fn chebyshev_v2(k: u32) -> LaurentPoly2 {
    assert!(k >= 1);
    let vars = (Var::SmallA, Var::X);
    let mut acc = LaurentPoly2::zero(vars);
    for i in 1..k {
        let v1 = chebyshev_v1(i);
        for (e, c) in v1.terms() {
            acc.add_term(i as i64 - k as i64, e, c);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn closed_form(k: u32) -> LaurentPoly {
        // (p^k - p^{-k}) / (p - p^{-1})
        let num = LaurentPoly::from_terms(Var::P, &[(k as i64, 1), (-(k as i64), -1)]);
        let den = LaurentPoly::from_terms(Var::P, &[(1, 1), (-1, -1)]);
        num.div_exact(&den)
    }

    #[test]
    fn base_cases() {
        assert_eq!(chebyshev_v1(1), LaurentPoly::one(Var::X));
        assert_eq!(chebyshev_v1(2), LaurentPoly::variable(Var::X));
    }

    #[test]
    fn v1_5_explicit() {
        // x^4 - 3x^2 + 1
        assert_eq!(
            chebyshev_v1(5),
            LaurentPoly::from_terms(Var::X, &[(4, 1), (2, -3), (0, 1)])
        );
    }

    #[test]
    fn v1_closed_form_identity_up_to_12() {
        let sub = LaurentPoly::from_terms(Var::P, &[(1, 1), (-1, 1)]);
        for k in 1..=12 {
            let lhs = chebyshev_v1(k).substitute(&sub);
            assert_eq!(lhs, closed_form(k), "k = {k}");
        }
    }

    #[test]
    fn v2_5_at_x_equals_a_plus_ainv() {
        // v2^{(5)}(a, a + a^{-1}) = a^2 + 2 + 3a^{-2} + 4a^{-4}
        let v2 = chebyshev_v2(5);
        let collapsed = v2.substitute_second_by_first_plus_inv();
        assert_eq!(
            collapsed,
            LaurentPoly::from_terms(Var::SmallA, &[(2, 1), (0, 2), (-2, 3), (-4, 4)])
        );
    }

    #[test]
    fn v2_defining_identity_up_to_8() {
        // (a + a^{-1} - x) v2^{(k)} = (p - a^{-1}) v1^{(k)} + a^{-k} - p^k
        // as polynomials in (a, p) under x = p + p^{-1}.
        let vars_ap = (Var::SmallA, Var::P);
        for k in 1..=8u32 {
            let lhs = {
                let factor = LaurentPoly2::from_terms(
                    vars_ap,
                    &[(1, 0, 1), (-1, 0, 1), (0, 1, -1), (0, -1, -1)],
                );
                let v2 = chebyshev_v2(k).substitute_second_by_w_plus_winv(Var::P);
                &factor * &v2
            };
            let rhs = {
                let v1 = chebyshev_v1(k);
                let v1p = {
                    let sub = LaurentPoly::from_terms(Var::P, &[(1, 1), (-1, 1)]);
                    v1.substitute(&sub)
                };
                let mut r = LaurentPoly2::zero(vars_ap);
                for (e, c) in v1p.terms() {
                    r.add_term(0, e + 1, c); // p * v1
                    r.add_term(-1, e, -c); // -a^{-1} * v1
                }
                r.add_term(-(k as i64), 0, 1); // a^{-k}
                r.add_term(0, k as i64, -1); // -p^k
                r
            };
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }
}
