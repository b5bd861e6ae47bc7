//! Reduction modulo the cyclotomic ideals `I_A = (A^16 - A^12 + A^8 - A^4 + 1)`
//! and `I_t = (t^4 - t^3 + t^2 - t + 1)`, plus evaluation into [`Cyclo40`]
//! and the mod-(5, (a^2-1)^3) reduction used by the twist congruence.

use std::collections::HashMap;
use std::fmt;

use super::cyclo::Cyclo40;
use super::laurent::{LaurentPoly, Var};
use super::laurent2::LaurentPoly2;
use crate::error::Error;

/// The two ideals governing 5-move invariance of bracket and Jones values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ideal {
    /// `(A^20 + 1)/(A^4 + 1) = A^16 - A^12 + A^8 - A^4 + 1` in the bracket variable.
    IA,
    /// `(t^5 + 1)/(t + 1) = t^4 - t^3 + t^2 - t + 1` in the Jones variable.
    IT,
}

impl Ideal {
    pub fn var(self) -> Var {
        match self {
            Ideal::IA => Var::A,
            Ideal::IT => Var::T,
        }
    }

    pub fn generator(self) -> LaurentPoly {
        match self {
            Ideal::IA => LaurentPoly::from_terms(
                Var::A,
                &[(16, 1), (12, -1), (8, 1), (4, -1), (0, 1)],
            ),
            Ideal::IT => {
                LaurentPoly::from_terms(Var::T, &[(4, 1), (3, -1), (2, 1), (1, -1), (0, 1)])
            }
        }
    }

    fn degree(self) -> i64 {
        match self {
            Ideal::IA => 16,
            Ideal::IT => 4,
        }
    }

    /// The inverse of the variable in the quotient ring (the generator has
    /// unit constant term, so the variable is a unit).
    fn var_inverse(self) -> LaurentPoly {
        // gen = v^d - ... + 1  =>  1 = v * (-(gen - 1)/v), reduced.
        let gen = self.generator();
        let var = self.var();
        let mut inv = LaurentPoly::zero(var);
        for (e, c) in gen.terms() {
            if e == 0 {
                continue;
            }
            inv.add_term(e - 1, -c);
        }
        inv
    }
}

/// Canonical representative of a Laurent polynomial in the quotient by an
/// ideal: negative exponents are substituted by the variable's quotient
/// inverse, then the polynomial remainder modulo the generator is taken, so
/// the map is an honest ring homomorphism.
#[derive(Clone, PartialEq, Eq)]
pub struct QuotClass {
    ideal: Ideal,
    rep: LaurentPoly,
}

impl QuotClass {
    pub fn ideal(&self) -> Ideal {
        self.ideal
    }

    pub fn rep(&self) -> &LaurentPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn mul(&self, other: &QuotClass) -> QuotClass {
        assert_eq!(self.ideal, other.ideal);
        reduce_mod(&(&self.rep * &other.rep), self.ideal).expect("reps have matching role")
    }

    pub fn add(&self, other: &QuotClass) -> QuotClass {
        assert_eq!(self.ideal, other.ideal);
        reduce_mod(&(&self.rep + &other.rep), self.ideal).expect("reps have matching role")
    }
}

impl fmt::Debug for QuotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] mod {:?}", self.rep, self.ideal)
    }
}

/// Remainder of a plain polynomial (nonnegative exponents) modulo the
/// monic generator.
fn poly_rem(p: &LaurentPoly, ideal: Ideal) -> LaurentPoly {
    let gen = ideal.generator();
    let d = ideal.degree();
    let mut rem = p.clone();
    while let Some(top) = rem.max_exp() {
        if top < d {
            break;
        }
        let c = rem.coeff(top);
        rem = &rem - &gen.shifted(top - d).scaled(c);
    }
    rem
}

/// Reduces a Laurent polynomial modulo `I_A` or `I_t`.
///
/// The variable role must match the ideal (`U`-polynomials with even
/// exponents are accepted for `I_t` and converted to `t` first).
pub fn reduce_mod(p: &LaurentPoly, ideal: Ideal) -> Result<QuotClass, Error> {
    let p = match (p.var(), ideal) {
        (Var::A, Ideal::IA) | (Var::T, Ideal::IT) => p.clone(),
        (Var::U, Ideal::IT) => {
            let mut q = LaurentPoly::zero(Var::T);
            for (e, c) in p.terms() {
                if e % 2 != 0 {
                    return Err(Error::RoleMismatch {
                        expected: "even powers of u".into(),
                        got: format!("u^{e}"),
                    });
                }
                q.add_term(e / 2, c);
            }
            q
        }
        (v, i) => {
            return Err(Error::RoleMismatch {
                expected: i.var().symbol().into(),
                got: v.symbol().into(),
            })
        }
    };
    let min = p.min_exp().unwrap_or(0);
    let cleared = if min < 0 {
        let inv = ideal.var_inverse();
        let mut inv_pow = LaurentPoly::one(ideal.var());
        for _ in 0..(-min) {
            inv_pow = poly_rem(&(&inv_pow * &inv), ideal);
        }
        let shifted = p.shifted(-min); // now nonnegative exponents
        &shifted * &inv_pow
    } else {
        p
    };
    Ok(QuotClass { ideal, rep: poly_rem(&cleared, ideal) })
}

/// True when `p` and `q` agree modulo the ideal up to a unit `+-v^i`.
pub fn eq_mod_up_to_unit(p: &LaurentPoly, q: &LaurentPoly, ideal: Ideal) -> bool {
    let rp = match reduce_mod(p, ideal) {
        Ok(r) => r,
        Err(_) => return false,
    };
    let v = LaurentPoly::variable(ideal.var());
    let mut shifted = q.with_var(ideal.var());
    if q.var() == Var::U && ideal == Ideal::IT {
        // compare u-polynomials through t where possible, else scale by u.
        if q.terms().any(|(e, _)| e % 2 != 0) {
            return false;
        }
        shifted = LaurentPoly::zero(Var::T);
        for (e, c) in q.terms() {
            shifted.add_term(e / 2, c);
        }
    }
    // v has multiplicative order 2*(deg roots): 40 for I_A, 10 for I_t;
    // running i over that range covers the sign as well.
    let order = match ideal {
        Ideal::IA => 40,
        Ideal::IT => 10,
    };
    let mut cur = shifted;
    for _ in 0..order {
        if let Ok(r) = reduce_mod(&cur, ideal) {
            if r == rp {
                return true;
            }
        }
        cur = &cur * &v;
    }
    false
}

/// Exact evaluation of a one-variable Laurent polynomial in `Cyclo40`.
pub fn eval_cyclo(p: &LaurentPoly, assignment: &HashMap<Var, Cyclo40>) -> Result<Cyclo40, Error> {
    let value = assignment
        .get(&p.var())
        .ok_or_else(|| Error::UnassignedVariable(p.var().symbol().into()))?;
    eval_with(p, value)
}

fn eval_with(p: &LaurentPoly, value: &Cyclo40) -> Result<Cyclo40, Error> {
    let mut inv = None;
    let mut acc = Cyclo40::zero();
    for (e, c) in p.terms() {
        let base = if e >= 0 {
            value.pow(e as u32)
        } else {
            let iv = match &inv {
                Some(v) => v,
                None => {
                    inv = Some(
                        value
                            .invert()
                            .ok_or_else(|| Error::NotInvertible(format!("{value:?}")))?,
                    );
                    inv.as_ref().unwrap()
                }
            };
            iv.pow((-e) as u32)
        };
        acc = &acc + &base.scaled(c);
    }
    Ok(acc)
}

/// Exact evaluation of a two-variable Laurent polynomial in `Cyclo40`.
pub fn eval_cyclo2(
    p: &LaurentPoly2,
    assignment: &HashMap<Var, Cyclo40>,
) -> Result<Cyclo40, Error> {
    let (v1, v2) = p.vars();
    let a = assignment
        .get(&v1)
        .ok_or_else(|| Error::UnassignedVariable(v1.symbol().into()))?;
    let x = assignment
        .get(&v2)
        .ok_or_else(|| Error::UnassignedVariable(v2.symbol().into()))?;
    let a_inv = || a.invert().ok_or_else(|| Error::NotInvertible(format!("{a:?}")));
    let x_inv = || x.invert().ok_or_else(|| Error::NotInvertible(format!("{x:?}")));
    let mut ai = None;
    let mut xi = None;
    let mut acc = Cyclo40::zero();
    for (e1, e2, c) in p.terms() {
        let b1 = if e1 >= 0 {
            a.pow(e1 as u32)
        } else {
            if ai.is_none() {
                ai = Some(a_inv()?);
            }
            ai.as_ref().unwrap().pow((-e1) as u32)
        };
        let b2 = if e2 >= 0 {
            x.pow(e2 as u32)
        } else {
            if xi.is_none() {
                xi = Some(x_inv()?);
            }
            xi.as_ref().unwrap().pow((-e2) as u32)
        };
        acc = &acc + &(&b1 * &b2).scaled(c);
    }
    Ok(acc)
}

/// Canonical remainder of a Laurent polynomial in `a` modulo the ideal
/// `(5, (a^2-1)^3)`: coefficients reduced into `0..5`, negative powers
/// cleared by the unit `a`, then division by `(a^2-1)^3`.
pub fn reduce_mod_ideal_5(p: &LaurentPoly) -> LaurentPoly {
    assert_eq!(p.var(), Var::SmallA, "expected a polynomial in a");
    let min = p.min_exp().unwrap_or(0);
    // a is a unit mod (a^2-1)^3 since the generator has unit constant term;
    // clearing by a^{-min} changes the class by a unit, and we additionally
    // normalize by stripping the a-content so the remainder is canonical.
    let mut cleared = if min < 0 { p.shifted(-min) } else { p.clone() };
    // (a^2 - 1)^3 = a^6 - 3a^4 + 3a^2 - 1
    let gen = LaurentPoly::from_terms(Var::SmallA, &[(6, 1), (4, -3), (2, 3), (0, -1)]);
    loop {
        // coefficients into 0..5
        let mut normd = LaurentPoly::zero(Var::SmallA);
        for (e, c) in cleared.terms() {
            normd.add_term(e, c.rem_euclid(5));
        }
        cleared = normd;
        let top = match cleared.max_exp() {
            Some(t) if t >= 6 => t,
            _ => break,
        };
        let c = cleared.coeff(top);
        cleared = &cleared - &gen.shifted(top - 6).scaled(c);
    }
    let mut out = LaurentPoly::zero(Var::SmallA);
    for (e, c) in cleared.terms() {
        out.add_term(e, c.rem_euclid(5));
    }
    out
}

/// Standard assignment: `A -> zeta^{-1}` so that `t = A^{-4} = e^{i pi/5}`,
/// together with `u = t^{1/2}`, `t`, `x = 2cos(2 pi/5)` and `a = 1`.
pub fn standard_assignment() -> HashMap<Var, Cyclo40> {
    let mut m = HashMap::new();
    m.insert(Var::A, Cyclo40::zeta_pow(-1));
    m.insert(Var::U, Cyclo40::zeta_pow(-2));
    m.insert(Var::T, Cyclo40::zeta_pow(-4));
    m.insert(Var::X, &Cyclo40::zeta_pow(8) + &Cyclo40::zeta_pow(-8));
    m.insert(Var::SmallA, Cyclo40::one());
    m
}
