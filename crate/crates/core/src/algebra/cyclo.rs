//! Exact arithmetic in `Z[zeta]` for a primitive 40th root of unity `zeta`,
//! with minimal polynomial `z^16 - z^12 + z^8 - z^4 + 1`.
//!
//! The float embedding fixes `zeta = e^{-i pi/20}`, so that `A = zeta` gives
//! `t = A^{-4} = e^{i pi/5}`. All special evaluation points used by the
//! invariants live here: `t = zeta^{-4}`, `u = t^{1/2} = zeta^{-2}`,
//! `x0 = 2cos(2 pi/5) = zeta^8 + zeta^{-8}` and `a0 = e^{4 pi i/5} = zeta^{-16}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const DEG: usize = 16;

/// Element of `Z[zeta]/(zeta^16 - zeta^12 + zeta^8 - zeta^4 + 1)` in the
/// power basis `1, zeta, ..., zeta^15`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cyclo40 {
    coords: [i64; DEG],
}

impl Cyclo40 {
    pub fn zero() -> Self {
        Cyclo40 { coords: [0; DEG] }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        let mut coords = [0; DEG];
        coords[0] = n;
        Cyclo40 { coords }
    }

    pub fn from_coords(coords: [i64; DEG]) -> Self {
        Cyclo40 { coords }
    }

    pub fn coords(&self) -> [i64; DEG] {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `zeta^k` for any integer exponent.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(40) as usize;
        // zeta^20 = -1, so exponents fold into 0..20 with a sign.
        let (k, sign) = if k >= 20 { (k - 20, -1) } else { (k, 1) };
        if k < DEG {
            let mut coords = [0; DEG];
            coords[k] = sign;
            Cyclo40 { coords }
        } else {
            // zeta^16 = zeta^12 - zeta^8 + zeta^4 - 1, shifted up by k-16.
            let mut acc = Cyclo40::zero();
            let shift = k - DEG;
            for (e, c) in [(12i64, 1i64), (8, -1), (4, 1), (0, -1)] {
                acc = &acc + &Self::zeta_pow(e + shift as i64).scaled(c * sign);
            }
            acc
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        let mut coords = self.coords;
        for c in &mut coords {
            *c *= k;
        }
        Cyclo40 { coords }
    }

    /// The complex conjugate, i.e. the ring map `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let mut acc = Cyclo40::zero();
        for (i, &c) in self.coords.iter().enumerate() {
            if c != 0 {
                acc = &acc + &Self::zeta_pow(-(i as i64)).scaled(c);
            }
        }
        acc
    }

    /// Squared modulus `z * conj(z)`; lies in the real subfield.
    pub fn norm_squared(&self) -> Cyclo40 {
        let n = self * &self.conj();
        debug_assert!(n.is_real());
        n
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Cyclo40::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact inverse, when the element is a unit of the field of fractions
    /// with an integral inverse representation. Solves a 16x16 integer
    /// linear system by fraction-free elimination.
    pub fn invert(&self) -> Option<Cyclo40> {
        if self.is_zero() {
            return None;
        }
        // Column j of the multiplication matrix is self * zeta^j.
        let mut m = [[0i128; DEG + 1]; DEG];
        for j in 0..DEG {
            let col = self * &Self::zeta_pow(j as i64);
            for i in 0..DEG {
                m[i][j] = col.coords[i] as i128;
            }
        }
        m[0][DEG] = 1; // right-hand side: the element 1

        // Fraction-free Gaussian elimination (Bareiss).
        let n = DEG;
        let mut prev = 1i128;
        for k in 0..n {
            // pivot
            let piv = (k..n).find(|&r| m[r][k] != 0)?;
            if piv != k {
                m.swap(piv, k);
                for c in &mut m[k] {
                    *c = -*c;
                }
            }
            for i in 0..n {
                if i == k {
                    continue;
                }
                for j in 0..=n {
                    if j == k {
                        continue;
                    }
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        let det = m[n - 1][n - 1];
        if det == 0 {
            return None;
        }
        let mut coords = [0i64; DEG];
        for i in 0..n {
            let num = m[i][DEG];
            if num % det != 0 {
                return None; // inverse is not integral
            }
            coords[i] = i64::try_from(num / det).ok()?;
        }
        let candidate = Cyclo40 { coords };
        if &candidate * self == Cyclo40::one() {
            Some(candidate)
        } else {
            None
        }
    }

    /// Float embedding with `zeta = e^{-i pi/20}`.
    pub fn to_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, &c) in self.coords.iter().enumerate() {
            let theta = -(i as f64) * std::f64::consts::PI / 20.0;
            re += c as f64 * theta.cos();
            im += c as f64 * theta.sin();
        }
        (re, im)
    }

    pub fn abs(&self) -> f64 {
        let (re, im) = self.to_complex();
        re.hypot(im)
    }

    /// Real-part float of a real-subfield element.
    pub fn to_real(&self) -> f64 {
        debug_assert!(self.is_real());
        self.to_complex().0
    }

    /// `sqrt(5) = 2(zeta^4 + zeta^{-4}) - 1`.
    pub fn sqrt5() -> Self {
        let t = &Self::zeta_pow(4) + &Self::zeta_pow(-4);
        &t.scaled(2) - &Self::one()
    }
}

impl Add for &Cyclo40 {
    type Output = Cyclo40;
    fn add(self, rhs: &Cyclo40) -> Cyclo40 {
        let mut coords = self.coords;
        for i in 0..DEG {
            coords[i] += rhs.coords[i];
        }
        Cyclo40 { coords }
    }
}

impl Sub for &Cyclo40 {
    type Output = Cyclo40;
    fn sub(self, rhs: &Cyclo40) -> Cyclo40 {
        let mut coords = self.coords;
        for i in 0..DEG {
            coords[i] -= rhs.coords[i];
        }
        Cyclo40 { coords }
    }
}

impl Mul for &Cyclo40 {
    type Output = Cyclo40;
    fn mul(self, rhs: &Cyclo40) -> Cyclo40 {
        // Schoolbook product into degree < 31, then reduce top powers.
        let mut raw = [0i64; 2 * DEG - 1];
        for (i, &a) in self.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coords.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        // zeta^16 = zeta^12 - zeta^8 + zeta^4 - 1 applied from the top down.
        for k in (DEG..2 * DEG - 1).rev() {
            let c = raw[k];
            if c == 0 {
                continue;
            }
            raw[k] = 0;
            raw[k - 4] += c;
            raw[k - 8] -= c;
            raw[k - 12] += c;
            raw[k - 16] -= c;
        }
        let mut coords = [0i64; DEG];
        coords.copy_from_slice(&raw[..DEG]);
        Cyclo40 { coords }
    }
}

impl Neg for &Cyclo40 {
    type Output = Cyclo40;
    fn neg(self) -> Cyclo40 {
        self.scaled(-1)
    }
}

impl fmt::Debug for Cyclo40 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo40{:?}", self.coords)
    }
}

impl fmt::Display for Cyclo40 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_complex();
        if im.abs() < 1e-9 {
            write!(f, "{re:.6}")
        } else {
            write!(f, "{re:.6}{im:+.6}i")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_orders() {
        assert_eq!(Cyclo40::zeta_pow(40), Cyclo40::one());
        assert_eq!(Cyclo40::zeta_pow(20), Cyclo40::from_int(-1));
        assert_eq!(
            &Cyclo40::zeta_pow(7) * &Cyclo40::zeta_pow(-7),
            Cyclo40::one()
        );
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        // A^16 - A^12 + A^8 - A^4 + 1 at A = zeta^{-1}
        let z = Cyclo40::zeta_pow(-1);
        let val = &(&(&z.pow(16) - &z.pow(12)) + &(&z.pow(8) - &z.pow(4))) + &Cyclo40::one();
        assert!(val.is_zero());
    }

    #[test]
    fn golden_ratio_at_t() {
        // t + t^{-1} = 2cos(pi/5) at t = e^{i pi/5} = zeta^{-4}
        let t = Cyclo40::zeta_pow(-4);
        let s = &t + &t.conj();
        assert!(s.is_real());
        assert!((s.to_real() - 1.6180339887498949).abs() < 1e-12);
    }

    #[test]
    fn abs_one_plus_t() {
        let t = Cyclo40::zeta_pow(-4);
        let z = &Cyclo40::one() + &t;
        assert!((z.abs() - 1.902113032590307).abs() < 1e-12);
        // exact squared modulus is real and nonnegative in the embedding
        let n = z.norm_squared();
        assert!(n.to_real() > 0.0);
    }

    #[test]
    fn conj_is_involution() {
        let z = &Cyclo40::zeta_pow(3).scaled(2) + &Cyclo40::zeta_pow(17).scaled(-5);
        assert_eq!(z.conj().conj(), z);
    }

    #[test]
    fn inverse_of_x0() {
        // x0 = 2cos(2 pi/5) has inverse x0 + 1
        let x0 = &Cyclo40::zeta_pow(8) + &Cyclo40::zeta_pow(-8);
        let inv = x0.invert().expect("x0 is a unit");
        assert_eq!(inv, &x0 + &Cyclo40::one());
    }

    #[test]
    fn sqrt5_squares_to_five() {
        let s = Cyclo40::sqrt5();
        assert_eq!(&s * &s, Cyclo40::from_int(5));
        assert!(s.to_real() > 0.0);
    }
}
