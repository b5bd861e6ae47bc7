//! Sparse one-variable Laurent polynomials over `i64` with a declared
//! variable role.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Role of the variable of a [`LaurentPoly`].
///
/// `A` is the bracket variable, `U` is `t^{1/2}` (the Jones half-variable),
/// `T` is the Jones variable itself, `X` and `P` are the auxiliary variables
/// of the twist formulas (`x = p + p^{-1}`), `SmallA` is the framing variable
/// of the two-variable polynomial when it appears alone.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    U,
    T,
    X,
    P,
    SmallA,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::U => "u",
            Var::T => "t",
            Var::X => "x",
            Var::P => "p",
            Var::SmallA => "a",
        }
    }
}

/// Sparse integer Laurent polynomial in a single tagged variable.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, coeffs: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, 1)
    }

    pub fn variable(var: Var) -> Self {
        Self::monomial(var, 1, 1)
    }

    pub fn monomial(var: Var, exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { var, coeffs }
    }

    pub fn from_terms(var: Var, terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero(var);
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn constant(var: Var, c: i64) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Reinterprets the polynomial in another variable, keeping exponents.
    pub fn with_var(&self, var: Var) -> Self {
        LaurentPoly { var, coeffs: self.coeffs.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        *self.coeffs.get(&exp).unwrap_or(&0)
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `var^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (e + shift, c)).collect();
        LaurentPoly { var: self.var, coeffs }
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.var);
        }
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (e, c * k)).collect();
        LaurentPoly { var: self.var, coeffs }
    }

    /// Substitutes `var -> var^{-1}`.
    pub fn inverted_var(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect();
        LaurentPoly { var: self.var, coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, divisor.var, "variable mismatch in division");
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = Self::zero(self.var);
        let dtop = divisor.max_exp().unwrap();
        let dcoef = divisor.coeff(dtop);
        while !rem.is_zero() {
            let rtop = rem.max_exp().unwrap();
            let rcoef = rem.coeff(rtop);
            assert!(
                rcoef % dcoef == 0,
                "non-exact division: leading coefficient {rcoef} not divisible by {dcoef}"
            );
            let q = LaurentPoly::monomial(self.var, rtop - dtop, rcoef / dcoef);
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        quot
    }

    /// Substitutes the variable by an explicit Laurent polynomial
    /// (possibly in another variable).
    pub fn substitute(&self, value: &LaurentPoly) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(value.var);
        for (e, c) in self.terms() {
            let term = if e >= 0 {
                value.pow(e as u32)
            } else {
                value.inverted_var().pow((-e) as u32)
            };
            acc = &acc + &term.scaled(c);
        }
        acc
    }

    /// `[exponent, coefficient]` pairs sorted by exponent.
    pub fn to_pairs(&self) -> Vec<[i64; 2]> {
        self.terms().map(|(e, c)| [e, c]).collect()
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, rhs.var, "variable mismatch in addition");
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, rhs.var, "variable mismatch in subtraction");
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.var, rhs.var, "variable mismatch in multiplication");
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scaled(-1)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let body = match e {
                0 => format!("{mag}"),
                1 if mag == 1 => sym.to_string(),
                1 => format!("{mag}{sym}"),
                _ if mag == 1 => format!("{sym}^{e}"),
                _ => format!("{mag}{sym}^{e}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let a = LaurentPoly::from_terms(Var::A, &[(-2, 1), (2, 1)]);
        let b = LaurentPoly::from_terms(Var::A, &[(0, 1), (2, -1)]);
        let s = &a + &b;
        assert_eq!(s.to_pairs(), vec![[-2, 1], [0, 1]]);
        let p = &a * &b;
        assert_eq!(p.coeff(4), -1);
        assert_eq!(p.coeff(0), -1);
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let a = LaurentPoly::from_terms(Var::U, &[(1, 3)]);
        let b = LaurentPoly::from_terms(Var::U, &[(1, -3)]);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn exact_division() {
        // (A^4 - A^-4) / (A^2 + A^-2) = A^2 - A^-2
        let num = LaurentPoly::from_terms(Var::A, &[(4, 1), (-4, -1)]);
        let den = LaurentPoly::from_terms(Var::A, &[(2, 1), (-2, 1)]);
        let q = num.div_exact(&den);
        assert_eq!(q.to_pairs(), vec![[-2, -1], [2, 1]]);
    }

    #[test]
    #[should_panic]
    fn non_exact_division_panics() {
        let num = LaurentPoly::from_terms(Var::A, &[(1, 1), (0, 1)]);
        let den = LaurentPoly::from_terms(Var::A, &[(1, 2)]);
        let _ = num.div_exact(&den);
    }
}
