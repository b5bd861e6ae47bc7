//! Port-based construction of 2-tangles and their closures.
//!
//! A tangle is a partial diagram with four boundary ports NW, NE, SW, SE.
//! The `[0]` tangle is the horizontal pair (NW-NE, SW-SE), the infinity
//! tangle the vertical pair. Twist regions use the Conway handedness in
//! which the `[1/2]` tangle has bracket vector `(1 - A^{-4}) e_h + A^2 e_v`;
//! the elementary twist inserted by `apply_twist_move(+1)` is the mirror of
//! the Conway `[1]` crossing and closes up to the positive `-A^3` kink.

use super::LinkDiagram;
use crate::notation::Fraction;
use crate::tangles::{cf_of, ContinuedFraction};

#[derive(Clone, Debug)]
pub(crate) struct Tangle {
    crossings: Vec<[usize; 4]>,
    free_circles: usize,
    next_id: usize,
    pub nw: usize,
    pub ne: usize,
    pub sw: usize,
    pub se: usize,
}

/// Crossing tuple of a Conway-positive crossing with the given port edges.
/// The under-strand runs SW -> NE; the bracket A-smoothing is the vertical
/// pairing, so `<[1]> = A^{-1} e_h + A e_v`.
pub(crate) fn conway_pos(nw: usize, sw: usize, se: usize, ne: usize) -> [usize; 4] {
    [sw, se, ne, nw]
}

/// Mirror crossing (rotation by one slot).
pub(crate) fn conway_neg(nw: usize, sw: usize, se: usize, ne: usize) -> [usize; 4] {
    [se, ne, nw, sw]
}

fn fresh(next_id: &mut usize) -> usize {
    let id = *next_id;
    *next_id += 1;
    id
}

impl Tangle {
    /// The `[0]` tangle (two horizontal strands).
    pub fn zero() -> Tangle {
        Tangle { crossings: Vec::new(), free_circles: 0, next_id: 2, nw: 0, ne: 0, sw: 1, se: 1 }
    }

    /// The infinity tangle (two vertical strands).
    pub fn infinity() -> Tangle {
        Tangle { crossings: Vec::new(), free_circles: 0, next_id: 2, nw: 0, ne: 1, sw: 0, se: 1 }
    }

    /// Horizontal region of `n` Conway twists (sign of `n` = Conway sign).
    pub fn horizontal(n: i64) -> Tangle {
        if n == 0 {
            return Tangle::zero();
        }
        let k = n.unsigned_abs() as usize;
        let mut next_id = 0;
        let nw = fresh(&mut next_id);
        let sw = fresh(&mut next_id);
        let (mut top, mut bot) = (nw, sw);
        let mut crossings = Vec::with_capacity(k);
        for _ in 0..k {
            let ne = fresh(&mut next_id);
            let se = fresh(&mut next_id);
            crossings.push(if n > 0 {
                conway_pos(top, bot, se, ne)
            } else {
                conway_neg(top, bot, se, ne)
            });
            top = ne;
            bot = se;
        }
        Tangle { crossings, free_circles: 0, next_id, nw, ne: top, sw, se: bot }
    }

    /// Vertical region of `n` Conway twists.
    pub fn vertical(n: i64) -> Tangle {
        if n == 0 {
            return Tangle::infinity();
        }
        let k = n.unsigned_abs() as usize;
        let mut next_id = 0;
        let nw = fresh(&mut next_id);
        let ne = fresh(&mut next_id);
        let (mut left, mut right) = (nw, ne);
        let mut crossings = Vec::with_capacity(k);
        for _ in 0..k {
            let sw = fresh(&mut next_id);
            let se = fresh(&mut next_id);
            crossings.push(if n > 0 {
                conway_pos(left, sw, se, right)
            } else {
                conway_neg(left, sw, se, right)
            });
            left = sw;
            right = se;
        }
        Tangle { crossings, free_circles: 0, next_id, nw, ne, sw: left, se: right }
    }

    fn offset(&mut self, by: usize) {
        for t in &mut self.crossings {
            for e in t.iter_mut() {
                *e += by;
            }
        }
        self.nw += by;
        self.ne += by;
        self.sw += by;
        self.se += by;
        self.next_id += by;
    }

    /// Renames edge `b` to edge `a` everywhere (ports included); a
    /// self-join closes a circle.
    fn join(&mut self, a: usize, b: usize) {
        if a == b {
            self.free_circles += 1;
            return;
        }
        for t in &mut self.crossings {
            for e in t.iter_mut() {
                if *e == b {
                    *e = a;
                }
            }
        }
        for port in [&mut self.nw, &mut self.ne, &mut self.sw, &mut self.se] {
            if *port == b {
                *port = a;
            }
        }
    }

    /// Attaches `right` to the east side (the tangle product `T * S`).
    pub fn attach_right(&mut self, mut right: Tangle) {
        right.offset(self.next_id);
        self.next_id = right.next_id;
        self.crossings.append(&mut right.crossings);
        self.free_circles += right.free_circles;
        let (old_ne, old_se) = (self.ne, self.se);
        let (r_nw, r_sw) = (right.nw, right.sw);
        self.ne = right.ne;
        self.se = right.se;
        self.join(old_ne, r_nw);
        let se_src = if r_sw == r_nw { old_ne } else { r_sw };
        self.join(old_se, se_src);
    }

    /// Attaches `below` to the south side (vertical stacking).
    pub fn attach_below(&mut self, mut below: Tangle) {
        below.offset(self.next_id);
        self.next_id = below.next_id;
        self.crossings.append(&mut below.crossings);
        self.free_circles += below.free_circles;
        let (old_sw, old_se) = (self.sw, self.se);
        let (b_nw, b_ne) = (below.nw, below.ne);
        self.sw = below.sw;
        self.se = below.se;
        self.join(old_sw, b_nw);
        let se_src = if b_ne == b_nw { old_sw } else { b_ne };
        self.join(old_se, se_src);
    }

    /// Numerator closure: caps NW-NE and SW-SE.
    pub fn closure_n(mut self) -> LinkDiagram {
        let (nw, ne) = (self.nw, self.ne);
        self.join(nw, ne);
        let (sw, se) = (self.sw, self.se);
        self.join(sw, se);
        LinkDiagram::from_parts_unchecked(self.crossings, self.free_circles)
    }

    /// Denominator closure: caps NW-SW and NE-SE.
    pub fn closure_d(mut self) -> LinkDiagram {
        let (nw, sw) = (self.nw, self.sw);
        self.join(nw, sw);
        let (ne, se) = (self.ne, self.se);
        self.join(ne, se);
        LinkDiagram::from_parts_unchecked(self.crossings, self.free_circles)
    }

    pub(crate) fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub(crate) fn free_circles(&self) -> usize {
        self.free_circles
    }

    /// Upper bound on edge ids (offsetting by this clears the id space).
    pub(crate) fn span(&self) -> usize {
        self.next_id
    }

    /// Builds the rational tangle of a continued fraction, alternating
    /// twist regions from the innermost term outward so the outermost term
    /// is the integer part (a horizontal region).
    pub fn rational(cf: &ContinuedFraction) -> Tangle {
        if cf.is_infinity() {
            return Tangle::infinity();
        }
        let terms = cf.terms();
        if terms.is_empty() {
            return Tangle::zero();
        }
        let n = terms.len();
        let mut tangle: Option<Tangle> = None;
        for (idx, &a) in terms.iter().rev().enumerate() {
            let horizontal = (n - 1 - idx) % 2 == 0;
            match tangle.as_mut() {
                None => {
                    tangle = Some(if horizontal {
                        Tangle::horizontal(a)
                    } else {
                        Tangle::vertical(a)
                    });
                }
                Some(t) => {
                    if horizontal {
                        t.attach_right(Tangle::horizontal(a));
                    } else {
                        t.attach_below(Tangle::vertical(a));
                    }
                }
            }
        }
        tangle.unwrap()
    }

    pub fn from_fraction(f: &Fraction) -> Tangle {
        Tangle::rational(&cf_of(f))
    }
}
