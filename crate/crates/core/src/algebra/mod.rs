//! Exact arithmetic: Laurent polynomials, the cyclotomic ring of the special
//! evaluation points, quotient reduction modulo the 5-move ideals, and the
//! twist-coefficient polynomials.

mod chebyshev;
mod cyclo;
mod laurent;
mod laurent2;
mod reduce;

pub use chebyshev::{chebyshev_v1, chebyshev_v2};
pub use cyclo::{Cyclo40, DEG};
pub use laurent::{LaurentPoly, Var};
pub use laurent2::LaurentPoly2;
pub use reduce::{
    eq_mod_up_to_unit, eval_cyclo, eval_cyclo2, reduce_mod, reduce_mod_ideal_5,
    standard_assignment, Ideal, QuotClass,
};

#[cfg(test)]
mod ring_axiom_tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-6i64..=6, -9i64..=9), 0..6)
            .prop_map(|terms| LaurentPoly::from_terms(Var::A, &terms))
    }

    fn arb_laurent2() -> impl Strategy<Value = LaurentPoly2> {
        proptest::collection::vec((-4i64..=4, -4i64..=4, -9i64..=9), 0..5)
            .prop_map(|terms| LaurentPoly2::from_terms((Var::SmallA, Var::X), &terms))
    }

    fn arb_cyclo() -> impl Strategy<Value = Cyclo40> {
        proptest::collection::vec(-5i64..=5, DEG).prop_map(|v| {
            let mut coords = [0i64; DEG];
            coords.copy_from_slice(&v);
            Cyclo40::from_coords(coords)
        })
    }

    proptest! {
        #[test]
        fn laurent_ring_axioms(a in arb_laurent(), b in arb_laurent(), c in arb_laurent()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &LaurentPoly::one(Var::A), a.clone());
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn laurent2_ring_axioms(a in arb_laurent2(), b in arb_laurent2(), c in arb_laurent2()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn cyclo_ring_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &Cyclo40::one(), a);
        }

        #[test]
        fn reduce_mod_is_homomorphism(a in arb_laurent(), b in arb_laurent()) {
            let ra = reduce_mod(&a, Ideal::IA).unwrap();
            let rb = reduce_mod(&b, Ideal::IA).unwrap();
            let rab = reduce_mod(&(&a * &b), Ideal::IA).unwrap();
            prop_assert_eq!(ra.mul(&rb), rab.clone());
            let sab = reduce_mod(&(&a + &b), Ideal::IA).unwrap();
            prop_assert_eq!(ra.add(&rb), sab);
        }

        #[test]
        fn eval_commutes_with_reduction(a in arb_laurent()) {
            let assignment = standard_assignment();
            let direct = eval_cyclo(&a, &assignment).unwrap();
            let reduced = reduce_mod(&a, Ideal::IA).unwrap();
            let via = eval_cyclo(reduced.rep(), &assignment).unwrap();
            prop_assert_eq!(direct, via);
        }

        #[test]
        fn norm_squared_nonnegative(a in arb_cyclo()) {
            let n = a.norm_squared();
            prop_assert!(n.is_real());
            prop_assert!(n.to_real() >= -1e-9);
        }
    }
}
