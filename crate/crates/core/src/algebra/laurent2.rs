//! Sparse two-variable Laurent polynomials, used for the Kauffman
//! polynomial in `(a, x)` and for twist-formula identities in `(a, p)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::laurent::{LaurentPoly, Var};

/// Sparse integer Laurent polynomial in an ordered pair of tagged variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly2 {
    vars: (Var, Var),
    coeffs: BTreeMap<(i64, i64), i64>,
}

impl LaurentPoly2 {
    pub fn zero(vars: (Var, Var)) -> Self {
        LaurentPoly2 { vars, coeffs: BTreeMap::new() }
    }

    pub fn one(vars: (Var, Var)) -> Self {
        Self::monomial(vars, 0, 0, 1)
    }

    pub fn monomial(vars: (Var, Var), e1: i64, e2: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert((e1, e2), coeff);
        }
        LaurentPoly2 { vars, coeffs }
    }

    pub fn from_terms(vars: (Var, Var), terms: &[(i64, i64, i64)]) -> Self {
        let mut p = Self::zero(vars);
        for &(e1, e2, c) in terms {
            p.add_term(e1, e2, c);
        }
        p
    }

    pub fn vars(&self) -> (Var, Var) {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e1: i64, e2: i64) -> i64 {
        *self.coeffs.get(&(e1, e2)).unwrap_or(&0)
    }

    pub fn add_term(&mut self, e1: i64, e2: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.coeffs.entry((e1, e2)).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&(e1, e2));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64, i64)> + '_ {
        self.coeffs.iter().map(|(&(e1, e2), &c)| (e1, e2, c))
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero(self.vars);
        }
        let coeffs = self.coeffs.iter().map(|(&e, &c)| (e, c * k)).collect();
        LaurentPoly2 { vars: self.vars, coeffs }
    }

    /// Multiplies by `v1^s1 * v2^s2`.
    pub fn shifted(&self, s1: i64, s2: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&(e1, e2), &c)| ((e1 + s1, e2 + s2), c))
            .collect();
        LaurentPoly2 { vars: self.vars, coeffs }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Embeds a one-variable polynomial as a polynomial in the first variable.
    pub fn from_first(vars: (Var, Var), p: &LaurentPoly) -> Self {
        assert_eq!(p.var(), vars.0);
        let mut out = Self::zero(vars);
        for (e, c) in p.terms() {
            out.add_term(e, 0, c);
        }
        out
    }

    /// Embeds a one-variable polynomial as a polynomial in the second variable.
    pub fn from_second(vars: (Var, Var), p: &LaurentPoly) -> Self {
        assert_eq!(p.var(), vars.1);
        let mut out = Self::zero(vars);
        for (e, c) in p.terms() {
            out.add_term(0, e, c);
        }
        out
    }

    /// Substitutes the second variable by `w + w^{-1}` where `w` is a fresh
    /// variable role. Requires all second-variable exponents nonnegative.
    pub fn substitute_second_by_w_plus_winv(&self, w: Var) -> LaurentPoly2 {
        let out_vars = (self.vars.0, w);
        let mut out = LaurentPoly2::zero(out_vars);
        let binom = LaurentPoly::from_terms(w, &[(1, 1), (-1, 1)]);
        for (ea, ex, c) in self.terms() {
            assert!(ex >= 0, "negative exponent in substitution");
            let expanded = binom.pow(ex as u32);
            for (ew, cw) in expanded.terms() {
                out.add_term(ea, ew, c * cw);
            }
        }
        out
    }

    /// Substitutes the second variable by `first + first^{-1}`, collapsing to
    /// a one-variable polynomial in the first variable.
    pub fn substitute_second_by_first_plus_inv(&self) -> LaurentPoly {
        let var = self.vars.0;
        let binom = LaurentPoly::from_terms(var, &[(1, 1), (-1, 1)]);
        let mut out = LaurentPoly::zero(var);
        for (ea, ex, c) in self.terms() {
            let expanded = if ex >= 0 {
                binom.pow(ex as u32)
            } else {
                // x^{-1} is not a polynomial in a; callers must clear x-denominators first.
                panic!("negative exponent in substitution");
            };
            for (ew, cw) in expanded.terms() {
                out.add_term(ea + ew, c * cw);
            }
        }
        out
    }

    /// Collapses to a one-variable polynomial when the second variable is absent.
    pub fn try_into_first(&self) -> Option<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.vars.0);
        for (e1, e2, c) in self.terms() {
            if e2 != 0 {
                return None;
            }
            out.add_term(e1, c);
        }
        Some(out)
    }

    /// Sorted `[e1, e2, coefficient]` triples.
    pub fn to_triples(&self) -> Vec<[i64; 3]> {
        self.terms().map(|(e1, e2, c)| [e1, e2, c]).collect()
    }

    pub fn min_exp_second(&self) -> Option<i64> {
        self.terms().map(|(_, e2, _)| e2).min()
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (e1, e2, c) in rhs.terms() {
            out.add_term(e1, e2, c);
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        assert_eq!(self.vars, rhs.vars);
        let mut out = self.clone();
        for (e1, e2, c) in rhs.terms() {
            out.add_term(e1, e2, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        assert_eq!(self.vars, rhs.vars);
        let mut out = LaurentPoly2::zero(self.vars);
        for (a1, x1, c1) in self.terms() {
            for (a2, x2, c2) in rhs.terms() {
                out.add_term(a1 + a2, x1 + x2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;
    fn neg(self) -> LaurentPoly2 {
        self.scaled(-1)
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let (s1, s2) = (self.vars.0.symbol(), self.vars.1.symbol());
        let mut first = true;
        for (e1, e2, c) in self.terms() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let mut body = String::new();
            if mag != 1 || (e1 == 0 && e2 == 0) {
                body.push_str(&mag.to_string());
            }
            for (sym, e) in [(s1, e1), (s2, e2)] {
                match e {
                    0 => {}
                    1 => body.push_str(sym),
                    _ => body.push_str(&format!("{sym}^{e}")),
                }
            }
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const AX: (Var, Var) = (Var::SmallA, Var::X);

    #[test]
    fn ring_ops() {
        let p = LaurentPoly2::from_terms(AX, &[(1, 0, 1), (-1, 0, 1)]);
        let q = LaurentPoly2::from_terms(AX, &[(0, 1, 1)]);
        let r = &p * &q;
        assert_eq!(r.coeff(1, 1), 1);
        assert_eq!(r.coeff(-1, 1), 1);
        assert!((&r - &r).is_zero());
    }

    #[test]
    fn substitution_x_to_p_plus_pinv() {
        // x^2 -> p^2 + 2 + p^-2
        let x2 = LaurentPoly2::monomial(AX, 0, 2, 1);
        let s = x2.substitute_second_by_w_plus_winv(Var::P);
        assert_eq!(s.coeff(0, 2), 1);
        assert_eq!(s.coeff(0, 0), 2);
        assert_eq!(s.coeff(0, -2), 1);
    }
}
