//! Rational tangle calculus: continued fractions, the twelve 5-move tangle
//! classes, the four rational-link classes, and tangle closures.

use std::fmt;

use serde::Serialize;

use crate::diagram::{tangle::Tangle, LinkDiagram};
use crate::error::Error;
use crate::notation::Fraction;

/// Continued fraction `[a_k, ..., a_1]` evaluating to
/// `a_k + 1/(a_{k-1} + 1/(...))`, stored outermost term first, with all
/// terms of one sign (the alternating-diagram form). `([], infinity)` is
/// the infinity tangle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContinuedFraction {
    terms: Vec<i64>,
    infinity: bool,
}

impl ContinuedFraction {
    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn is_infinity(&self) -> bool {
        self.infinity
    }

    pub fn crossing_count(&self) -> usize {
        self.terms.iter().map(|a| a.unsigned_abs() as usize).sum()
    }
}

/// The all-same-sign continued fraction expansion of a fraction.
pub fn cf_of(f: &Fraction) -> ContinuedFraction {
    if f.is_infinity() {
        return ContinuedFraction { terms: Vec::new(), infinity: true };
    }
    let negate = f.p() < 0;
    let mut p = f.p().abs();
    let mut q = f.q();
    let mut terms = Vec::new();
    loop {
        let a = p / q;
        let r = p - a * q;
        terms.push(if negate { -a } else { a });
        if r == 0 {
            break;
        }
        p = q;
        q = r;
    }
    ContinuedFraction { terms, infinity: false }
}

/// Evaluates a continued fraction back to a normalized fraction.
pub fn fraction_of(cf: &ContinuedFraction) -> Result<Fraction, Error> {
    if cf.infinity {
        return Ok(Fraction::infinity());
    }
    // fold from the innermost term; the empty tail is the infinity tangle
    let mut p: i64 = 1;
    let mut q: i64 = 0;
    for &a in cf.terms.iter().rev() {
        // next = a + 1/(p/q) = (a*p + q)/p, with projective handling of 0
        let (np, nq) = (a * p + q, p);
        p = np;
        q = nq;
        if p == 0 && q == 0 {
            return Err(Error::ZeroFraction);
        }
    }
    Fraction::new(p, q)
}

/// The twelve 5-move classes of rational tangles.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum TangleClass12 {
    Infinity,
    Zero,
    One,
    MinusOne,
    Two,
    MinusTwo,
    TwoFifths,
    FiveHalves,
    ThreeHalves,
    MinusThreeHalves,
    Half,
    MinusHalf,
}

impl TangleClass12 {
    /// The representative fraction of the class.
    pub fn representative(self) -> Fraction {
        let (p, q) = match self {
            TangleClass12::Infinity => (1, 0),
            TangleClass12::Zero => (0, 1),
            TangleClass12::One => (1, 1),
            TangleClass12::MinusOne => (-1, 1),
            TangleClass12::Two => (2, 1),
            TangleClass12::MinusTwo => (-2, 1),
            TangleClass12::TwoFifths => (2, 5),
            TangleClass12::FiveHalves => (5, 2),
            TangleClass12::ThreeHalves => (3, 2),
            TangleClass12::MinusThreeHalves => (-3, 2),
            TangleClass12::Half => (1, 2),
            TangleClass12::MinusHalf => (-1, 2),
        };
        Fraction::new(p, q).unwrap()
    }

    pub fn all() -> [TangleClass12; 12] {
        [
            TangleClass12::Infinity,
            TangleClass12::Zero,
            TangleClass12::One,
            TangleClass12::MinusOne,
            TangleClass12::Two,
            TangleClass12::MinusTwo,
            TangleClass12::TwoFifths,
            TangleClass12::FiveHalves,
            TangleClass12::ThreeHalves,
            TangleClass12::MinusThreeHalves,
            TangleClass12::Half,
            TangleClass12::MinusHalf,
        ]
    }

    /// The class of the mirror tangle.
    pub fn mirror(self) -> TangleClass12 {
        classify12(&self.representative().negated())
    }

    pub fn label(self) -> &'static str {
        match self {
            TangleClass12::Infinity => "1/0",
            TangleClass12::Zero => "0/1",
            TangleClass12::One => "1/1",
            TangleClass12::MinusOne => "-1/1",
            TangleClass12::Two => "2/1",
            TangleClass12::MinusTwo => "-2/1",
            TangleClass12::TwoFifths => "2/5",
            TangleClass12::FiveHalves => "5/2",
            TangleClass12::ThreeHalves => "3/2",
            TangleClass12::MinusThreeHalves => "-3/2",
            TangleClass12::Half => "1/2",
            TangleClass12::MinusHalf => "-1/2",
        }
    }
}

impl fmt::Display for TangleClass12 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Two rational tangles are 5-move equivalent exactly when their fraction
/// pairs agree modulo 5 up to a global sign; this matches each coprime
/// residue pair to the unique class representative.
pub fn classify12(f: &Fraction) -> TangleClass12 {
    let pr = f.p().rem_euclid(5);
    let qr = f.q().rem_euclid(5);
    for class in TangleClass12::all() {
        let rep = class.representative();
        let rp = rep.p().rem_euclid(5);
        let rq = rep.q().rem_euclid(5);
        if (pr == rp && qr == rq) || (pr == (-rep.p()).rem_euclid(5) && qr == (-rep.q()).rem_euclid(5))
        {
            return class;
        }
    }
    unreachable!("coprime residue pairs are covered by the twelve classes");
}

/// The explicit twelve-rule table, kept as an independent check of the
/// succinct residue criterion.
pub fn classify12_by_rules(f: &Fraction) -> TangleClass12 {
    let p = f.p().rem_euclid(5);
    let q = f.q().rem_euclid(5);
    let is = |v: i64, targets: &[i64]| targets.iter().any(|&t| v == t.rem_euclid(5));
    if is(q, &[0]) && is(p, &[1, -1]) {
        TangleClass12::Infinity
    } else if is(q, &[0]) && is(p, &[2, -2]) {
        TangleClass12::TwoFifths
    } else if is(q, &[1, -1]) && p == 0 {
        TangleClass12::Zero
    } else if is(q, &[2, -2]) && p == 0 {
        TangleClass12::FiveHalves
    } else if is(q, &[1, -1]) && p == (-q).rem_euclid(5) {
        TangleClass12::MinusOne
    } else if is(q, &[2, -2]) && p == (-q).rem_euclid(5) {
        TangleClass12::ThreeHalves
    } else if is(q, &[1, -1]) && p == q {
        TangleClass12::One
    } else if is(q, &[2, -2]) && p == q {
        TangleClass12::MinusThreeHalves
    } else if is(q, &[1, -1]) && p == (-2 * q).rem_euclid(5) {
        TangleClass12::MinusTwo
    } else if is(q, &[2, -2]) && p == (-2 * q).rem_euclid(5) {
        TangleClass12::Half
    } else if is(q, &[1, -1]) && p == (2 * q).rem_euclid(5) {
        TangleClass12::Two
    } else if is(q, &[2, -2]) && p == (2 * q).rem_euclid(5) {
        TangleClass12::MinusHalf
    } else {
        unreachable!("rules are total on coprime pairs: {f}")
    }
}

/// The four 5-move classes of rational links.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum RationalLinkClass {
    T1,
    T2,
    H,
    FigureEight,
}

impl RationalLinkClass {
    pub fn label(self) -> &'static str {
        match self {
            RationalLinkClass::T1 => "T_1",
            RationalLinkClass::T2 => "T_2",
            RationalLinkClass::H => "H",
            RationalLinkClass::FigureEight => "4_1",
        }
    }

    /// `|V(e^{i pi/5})|` of the class representative.
    pub fn v_value(self) -> f64 {
        match self {
            RationalLinkClass::T1 => 1.0,
            RationalLinkClass::T2 => 1.902113032590307,
            RationalLinkClass::H => 1.618033988749895,
            RationalLinkClass::FigureEight => 0.0,
        }
    }
}

impl fmt::Display for RationalLinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// 5-move class of the rational link `[p/q]^N` from the residues of `(p, q)`.
pub fn classify_rational_link(f: &Fraction) -> RationalLinkClass {
    let p = f.p().rem_euclid(5);
    let q = f.q().rem_euclid(5);
    if p == 1 || p == 4 {
        RationalLinkClass::T1
    } else if p == 2 || p == 3 {
        RationalLinkClass::H
    } else if q == 1 || q == 4 {
        RationalLinkClass::T2
    } else {
        debug_assert!(q == 2 || q == 3);
        RationalLinkClass::FigureEight
    }
}

/// Numerator closure of the rational tangle `[p/q]`.
pub fn closure_n(f: &Fraction) -> LinkDiagram {
    Tangle::from_fraction(f).closure_n()
}

/// Denominator closure of the rational tangle `[p/q]`.
pub fn closure_d(f: &Fraction) -> LinkDiagram {
    Tangle::from_fraction(f).closure_d()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fr(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn cf_examples() {
        assert_eq!(cf_of(&fr(5, 2)).terms(), &[2, 2]);
        assert_eq!(cf_of(&fr(3, 2)).terms(), &[1, 2]);
        assert_eq!(cf_of(&fr(2, 5)).terms(), &[0, 2, 2]);
        assert!(cf_of(&fr(1, 0)).is_infinity());
        assert_eq!(cf_of(&fr(-5, 2)).terms(), &[-2, -2]);
    }

    #[test]
    fn classify12_examples() {
        // q = 0 mod 5, p = +-2: the 2/5 class
        assert_eq!(classify12(&fr(3, 5)), TangleClass12::TwoFifths);
        // (9,4) = -(1,1) mod 5: the [1] class, whose closure is trivial
        assert_eq!(classify12(&fr(9, 4)), TangleClass12::One);
        assert_eq!(classify_rational_link(&fr(9, 4)), RationalLinkClass::T1);
        assert_eq!(classify12(&fr(1, 0)), TangleClass12::Infinity);
    }

    #[test]
    fn classify_link_examples() {
        assert_eq!(classify_rational_link(&fr(5, 2)), RationalLinkClass::FigureEight);
        assert_eq!(classify_rational_link(&fr(20, 9)), RationalLinkClass::T2);
        assert_eq!(classify_rational_link(&fr(3, 1)), RationalLinkClass::H);
    }

    #[test]
    fn rules_are_exhaustive_and_match_residue_criterion() {
        let mut hit = std::collections::HashSet::new();
        for p in -20i64..=20 {
            for q in 0i64..=20 {
                let Ok(f) = Fraction::new(p, q) else { continue };
                let by_residue = classify12(&f);
                let by_rules = classify12_by_rules(&f);
                assert_eq!(by_residue, by_rules, "{f}");
                hit.insert(by_residue);
            }
        }
        assert_eq!(hit.len(), 12);
    }

    #[test]
    fn classify12_respects_mirror() {
        let pairs = [
            (TangleClass12::Infinity, TangleClass12::Infinity),
            (TangleClass12::Zero, TangleClass12::Zero),
            (TangleClass12::One, TangleClass12::MinusOne),
            (TangleClass12::Two, TangleClass12::MinusTwo),
            (TangleClass12::TwoFifths, TangleClass12::TwoFifths),
            (TangleClass12::FiveHalves, TangleClass12::FiveHalves),
            (TangleClass12::ThreeHalves, TangleClass12::MinusThreeHalves),
            (TangleClass12::Half, TangleClass12::MinusHalf),
        ];
        for (c, m) in pairs {
            assert_eq!(c.mirror(), m);
            assert_eq!(m.mirror(), c);
        }
        for p in -20i64..=20 {
            for q in 0i64..=20 {
                let Ok(f) = Fraction::new(p, q) else { continue };
                assert_eq!(classify12(&f.negated()), classify12(&f).mirror(), "{f}");
            }
        }
    }

    proptest! {
        #[test]
        fn cf_roundtrip(p in -99i64..=99, q in -99i64..=99) {
            prop_assume!(p != 0 || q != 0);
            let f = Fraction::new(p, q).unwrap();
            let cf = cf_of(&f);
            // all terms share a sign
            let pos = cf.terms().iter().all(|&a| a >= 0);
            let neg = cf.terms().iter().all(|&a| a <= 0);
            prop_assert!(pos || neg);
            prop_assert_eq!(fraction_of(&cf).unwrap(), f);
        }
    }
}
