//! Kauffman bracket by exact state sum, the Jones polynomial `V` and its
//! orientation-free version, the 5-move invariant `|V(e^{i pi/5})|`, and
//! the canonical 5-element Jones class modulo `I_t`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{reduce_mod, Cyclo40, Ideal, LaurentPoly, Var};
use crate::diagram::LinkDiagram;
use crate::error::Error;

pub const DEFAULT_BRACKET_LIMIT: usize = 20;

fn d_loop() -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, &[(2, -1), (-2, -1)])
}

/// Kauffman bracket with the default crossing limit.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<LaurentPoly, Error> {
    kauffman_bracket_with_limit(d, DEFAULT_BRACKET_LIMIT)
}

pub fn kauffman_bracket_with_limit(d: &LinkDiagram, limit: usize) -> Result<LaurentPoly, Error> {
    if d.crossing_count() > limit {
        return Err(Error::LimitExceeded { crossings: d.crossing_count(), limit });
    }
    Ok(sweep_bracket(d))
}

/// Plain `2^n` state sum with union-find loop counting; the oracle
/// implementation cross-checked against the sweep.
pub fn state_sum_bracket(d: &LinkDiagram, limit: usize) -> Result<LaurentPoly, Error> {
    let n = d.crossing_count();
    if n > limit {
        return Err(Error::LimitExceeded { crossings: n, limit });
    }
    let dd = d_loop();
    let mut d_pows = vec![LaurentPoly::one(Var::A)];
    for _ in 0..(n + d.free_circles() + 2) {
        let last = d_pows.last().unwrap();
        d_pows.push(last * &dd);
    }
    let mut total = LaurentPoly::zero(Var::A);
    let crossings = d.crossings();
    let mut parent: Vec<usize> = Vec::new();
    for mask in 0u64..(1u64 << n) {
        parent.clear();
        parent.extend(0..d.edge_count());
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != c {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        let mut loops = d.free_circles();
        let mut exp = 0i64;
        for (i, t) in crossings.iter().enumerate() {
            let arcs = if mask & (1 << i) == 0 {
                exp += 1;
                [(t[0], t[3]), (t[1], t[2])]
            } else {
                exp -= 1;
                [(t[0], t[1]), (t[2], t[3])]
            };
            for (x, y) in arcs {
                let rx = find(&mut parent, x);
                let ry = find(&mut parent, y);
                if rx == ry {
                    loops += 1;
                } else {
                    parent[rx] = ry;
                }
            }
        }
        debug_assert!(loops >= 1);
        total = &total + &d_pows[loops - 1].shifted(exp);
    }
    Ok(total)
}

/// Frontier sweep: crossings are absorbed one at a time while a map from
/// open-strand pairings to accumulated polynomials is maintained. Fast on
/// diagrams of bounded frontier width (braid closures, pretzel chains).
pub fn sweep_bracket(d: &LinkDiagram) -> LaurentPoly {
    let n = d.crossing_count();
    let dd = d_loop();
    if n == 0 {
        let k = d.free_circles();
        assert!(k >= 1, "empty diagram has no bracket");
        return dd.pow((k - 1) as u32);
    }
    let order = sweep_order(d);
    // pairing: sorted list of (end, end); value accumulated per pairing
    let mut states: HashMap<Vec<(usize, usize)>, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one(Var::A));
    for &ci in &order {
        let t = d.crossings()[ci];
        let mut next: HashMap<Vec<(usize, usize)>, LaurentPoly> = HashMap::new();
        for (pairing, value) in &states {
            for (exp, arcs) in [
                (1i64, [(t[0], t[3]), (t[1], t[2])]),
                (-1, [(t[0], t[1]), (t[2], t[3])]),
            ] {
                let mut map: HashMap<usize, usize> =
                    pairing.iter().flat_map(|&(x, y)| [(x, y), (y, x)]).collect();
                let mut loops = 0usize;
                for (x, y) in arcs {
                    if x == y {
                        // both occurrences of this edge are at the crossing
                        loops += 1;
                        continue;
                    }
                    let end_a = match map.remove(&x) {
                        Some(p) => {
                            map.remove(&p);
                            p
                        }
                        None => x,
                    };
                    if end_a == y {
                        loops += 1;
                        continue;
                    }
                    let end_b = match map.remove(&y) {
                        Some(p) => {
                            map.remove(&p);
                            p
                        }
                        None => y,
                    };
                    if end_a == end_b {
                        loops += 1;
                    } else {
                        map.insert(end_a, end_b);
                        map.insert(end_b, end_a);
                    }
                }
                let mut key: Vec<(usize, usize)> = map
                    .iter()
                    .filter(|&(x, y)| x < y)
                    .map(|(&x, &y)| (x, y))
                    .collect();
                key.sort_unstable();
                let mut add = value.shifted(exp);
                for _ in 0..loops {
                    add = &add * &dd;
                }
                match next.get_mut(&key) {
                    Some(v) => *v = &*v + &add,
                    None => {
                        next.insert(key, add);
                    }
                }
            }
        }
        states = next;
    }
    assert_eq!(states.len(), 1, "sweep must close all strands");
    let total = states.remove(&Vec::new()).expect("closed diagram");
    let mut result = total;
    for _ in 0..d.free_circles() {
        result = &result * &dd;
    }
    result.div_exact(&dd)
}

/// Order minimizing frontier growth: greedily pick the crossing sharing the
/// most edges with the processed region.
fn sweep_order(d: &LinkDiagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut open: HashMap<usize, usize> = HashMap::new(); // edge -> seen count
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = usize::MAX;
        let mut best_score = -1i64;
        for (c, t) in d.crossings().iter().enumerate() {
            if used[c] {
                continue;
            }
            let score = t.iter().filter(|e| open.contains_key(e)).count() as i64;
            if score > best_score {
                best_score = score;
                best = c;
            }
        }
        used[best] = true;
        order.push(best);
        for &e in &d.crossings()[best] {
            let cnt = open.entry(e).or_insert(0);
            *cnt += 1;
            if *cnt == 2 {
                open.remove(&e);
            }
        }
    }
    order
}

/// Converts a bracket-variable polynomial times `(-A^3)^{-w}` into the
/// Jones variable `u = t^{1/2} = A^{-2}`.
fn normalize_to_u(bracket: &LaurentPoly, w: i64) -> LaurentPoly {
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let shifted = bracket.shifted(-3 * w).scaled(sign);
    let mut out = LaurentPoly::zero(Var::U);
    for (e, c) in shifted.terms() {
        assert!(e % 2 == 0, "bracket normalization must have even A-powers");
        out.add_term(-e / 2, c);
    }
    out
}

/// Jones polynomial in `u = t^{1/2}`, computed with the traced orientation.
pub fn jones(d: &LinkDiagram) -> Result<LaurentPoly, Error> {
    let b = kauffman_bracket(d)?;
    Ok(normalize_to_u(&b, d.stats().writhe))
}

/// Orientation-free Jones polynomial, normalized by the self-writhe.
pub fn jones_tilde(d: &LinkDiagram) -> Result<LaurentPoly, Error> {
    let b = kauffman_bracket(d)?;
    Ok(normalize_to_u(&b, d.stats().self_writhe))
}

pub fn jones_tilde_with_limit(d: &LinkDiagram, limit: usize) -> Result<LaurentPoly, Error> {
    let b = kauffman_bracket_with_limit(d, limit)?;
    Ok(normalize_to_u(&b, d.stats().self_writhe))
}

/// `|V(e^{i pi/5})|` with its exact squared modulus.
#[derive(Clone, Debug)]
pub struct VAbs {
    squared: Cyclo40,
}

impl VAbs {
    pub fn from_u_poly(v: &LaurentPoly) -> VAbs {
        let u = Cyclo40::zeta_pow(-2);
        let u_inv = Cyclo40::zeta_pow(2);
        let mut value = Cyclo40::zero();
        for (e, c) in v.terms() {
            let base = if e >= 0 { u.pow(e as u32) } else { u_inv.pow((-e) as u32) };
            value = &value + &base.scaled(c);
        }
        VAbs { squared: value.norm_squared() }
    }

    pub fn squared(&self) -> &Cyclo40 {
        &self.squared
    }

    pub fn value(&self) -> f64 {
        self.squared.to_real().max(0.0).sqrt()
    }
}

impl PartialEq for VAbs {
    fn eq(&self, other: &Self) -> bool {
        self.squared == other.squared
    }
}
impl Eq for VAbs {}

/// The 5-move invariant `V(L) = |tilde V_L(e^{i pi/5})|`.
pub fn v_abs(d: &LinkDiagram) -> Result<VAbs, Error> {
    Ok(VAbs::from_u_poly(&jones_tilde(d)?))
}

pub fn v_abs_with_limit(d: &LinkDiagram, limit: usize) -> Result<VAbs, Error> {
    Ok(VAbs::from_u_poly(&jones_tilde_with_limit(d, limit)?))
}

/// Canonical form of the 5-element set of degree-at-most-3 polynomials
/// representing the Jones polynomial modulo `I_t` up to `+-t^i`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JonesClass5 {
    vectors: [[i64; 4]; 5],
    half_shift: bool,
}

impl JonesClass5 {
    /// Builds the class from a Jones polynomial in `u`.
    pub fn from_u_poly(v: &LaurentPoly) -> JonesClass5 {
        assert_eq!(v.var(), Var::U);
        if v.is_zero() {
            return JonesClass5 { vectors: [[0; 4]; 5], half_shift: false };
        }
        let parities: Vec<i64> = v.terms().map(|(e, _)| e.rem_euclid(2)).collect();
        assert!(
            parities.windows(2).all(|w| w[0] == w[1]),
            "u-exponents must share parity"
        );
        let half_shift = parities[0] == 1;
        let v = if half_shift { v.shifted(1) } else { v.clone() };
        let mut t_poly = LaurentPoly::zero(Var::T);
        for (e, c) in v.terms() {
            t_poly.add_term(e / 2, c);
        }
        let mut rep = reduce_mod(&t_poly, Ideal::IT).expect("t-polynomial");
        let t = LaurentPoly::variable(Var::T);
        let mut vectors = [[0i64; 4]; 5];
        for vec in &mut vectors {
            let mut coeffs = [0i64; 4];
            for (e, c) in rep.rep().terms() {
                coeffs[e as usize] = c;
            }
            if let Some(first) = coeffs.iter().find(|&&c| c != 0) {
                if *first < 0 {
                    for c in &mut coeffs {
                        *c = -*c;
                    }
                }
            }
            *vec = coeffs;
            rep = reduce_mod(&(rep.rep() * &t), Ideal::IT).expect("t-polynomial");
        }
        vectors.sort();
        JonesClass5 { vectors, half_shift }
    }

    pub fn vectors(&self) -> &[[i64; 4]; 5] {
        &self.vectors
    }

    pub fn half_shift(&self) -> bool {
        self.half_shift
    }

    /// Whether the sign-normalized coefficient vector appears in the set.
    pub fn contains(&self, member: &[i64; 4]) -> bool {
        let mut m = *member;
        if let Some(first) = m.iter().find(|&&c| c != 0) {
            if *first < 0 {
                for c in &mut m {
                    *c = -*c;
                }
            }
        }
        self.vectors.contains(&m)
    }

    /// Equality that ignores the half-shift flag (the flag is metadata).
    pub fn same_class(&self, other: &JonesClass5) -> bool {
        self.vectors == other.vectors
    }
}

impl fmt::Debug for JonesClass5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        for v in &self.vectors {
            let p = LaurentPoly::from_terms(
                Var::T,
                &v.iter().enumerate().map(|(e, &c)| (e as i64, c)).collect::<Vec<_>>(),
            );
            items.push(format!("{p}"));
        }
        write!(f, "{{{}}}", items.join(", "))
    }
}

/// The 5-move class of a diagram.
pub fn jones_class5(d: &LinkDiagram) -> Result<JonesClass5, Error> {
    Ok(JonesClass5::from_u_poly(&jones_tilde(d)?))
}

pub fn jones_class5_with_limit(d: &LinkDiagram, limit: usize) -> Result<JonesClass5, Error> {
    Ok(JonesClass5::from_u_poly(&jones_tilde_with_limit(d, limit)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_diagram;
    use crate::notation::parse_spec;

    fn diagram(s: &str) -> LinkDiagram {
        build_diagram(&parse_spec(s).unwrap()).unwrap()
    }

    #[test]
    fn unknot_bracket_is_one() {
        let d = diagram("braid:1:[]");
        assert_eq!(kauffman_bracket(&d).unwrap(), LaurentPoly::one(Var::A));
        let two = diagram("braid:2:[]");
        assert_eq!(kauffman_bracket(&two).unwrap(), d_loop());
    }

    #[test]
    fn hopf_link_bracket() {
        // numerator closure of the Conway [2] tangle
        let d = diagram("rational:2/1");
        let b = kauffman_bracket(&d).unwrap();
        assert_eq!(b, LaurentPoly::from_terms(Var::A, &[(4, -1), (-4, -1)]));
    }

    #[test]
    fn sweep_agrees_with_state_sum() {
        for spec in [
            "braid:2:[1,1,1]",
            "braid:3:[1,-2,1,-2]",
            "pretzel:[2,2,2]",
            "montesinos:[2/5,1/2,1/2]",
            "rational:9/4",
            "braid:3:[1,-2,1,-2,1,-2]",
            "pretzel:[2,-2,2,-2]",
        ] {
            let d = diagram(spec);
            assert_eq!(
                sweep_bracket(&d),
                state_sum_bracket(&d, 20).unwrap(),
                "{spec}"
            );
        }
    }

    #[test]
    fn jones_of_figure_eight() {
        // V(4_1) = t^2 - t + 1 - t^{-1} + t^{-2}
        let d = diagram("braid:3:[1,-2,1,-2]");
        let v = jones(&d).unwrap();
        let expected =
            LaurentPoly::from_terms(Var::U, &[(4, 1), (2, -1), (0, 1), (-2, -1), (-4, 1)]);
        assert_eq!(v, expected);
    }

    #[test]
    fn jones_equals_tilde_on_knots() {
        for spec in ["braid:2:[1,1,1]", "braid:3:[1,-2,1,-2]"] {
            let d = diagram(spec);
            assert_eq!(jones(&d).unwrap(), jones_tilde(&d).unwrap(), "{spec}");
        }
    }

    #[test]
    fn v_abs_values() {
        // V(T_2) = 2cos(pi/10), V(H) = 2cos(pi/5), V(4_1) = 0
        let t2 = v_abs(&diagram("braid:2:[]")).unwrap();
        assert!((t2.value() - 1.902113032590307).abs() < 1e-12);
        let h = v_abs(&diagram("rational:2/1")).unwrap();
        assert!((h.value() - 1.618033988749895).abs() < 1e-12);
        let f8 = v_abs(&diagram("braid:3:[1,-2,1,-2]")).unwrap();
        assert!(f8.value() < 1e-12);
        let trefoil = v_abs(&diagram("braid:2:[1,1,1]")).unwrap();
        assert!((trefoil.value() - 1.618033988749895).abs() < 1e-12);
        let borromean = v_abs(&diagram("braid:3:[1,-2,1,-2,1,-2]")).unwrap();
        assert!((borromean.value() - 3.23606797749979).abs() < 1e-12);
    }

    #[test]
    fn class5_of_unknot() {
        let c = jones_class5(&diagram("braid:1:[]")).unwrap();
        let mut expected = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
            [1, -1, 1, -1],
        ];
        expected.sort();
        assert_eq!(c.vectors(), &expected);
        assert!(c.contains(&[1, 0, 0, 0]));
    }

    #[test]
    fn class5_of_pretzel_222_and_mirror() {
        let d = diagram("pretzel:[2,2,2]");
        let c = jones_class5(&d).unwrap();
        assert!(c.contains(&[1, 0, 2, 0]), "P[2,2,2] carries 1+2t^2: {c:?}");
        let cm = jones_class5(&d.mirror()).unwrap();
        assert!(cm.contains(&[2, 0, 1, 0]), "mirror carries 2+t^2: {cm:?}");
        assert!(!c.same_class(&cm));
    }

    #[test]
    fn mirror_inverts_jones_variable() {
        for spec in ["pretzel:[2,2,2]", "braid:2:[1,1,1]", "rational:9/4"] {
            let d = diagram(spec);
            let v = jones_tilde(&d).unwrap();
            let vm = jones_tilde(&d.mirror()).unwrap();
            assert_eq!(vm, v.inverted_var(), "{spec}");
        }
    }

    #[test]
    fn bracket_multiplicativity_under_sums() {
        let a = diagram("braid:2:[1,1,1]");
        let b = diagram("rational:2/1");
        let conn = a.connected_sum(&b, None, None);
        let expected = &kauffman_bracket(&a).unwrap() * &kauffman_bracket(&b).unwrap();
        assert_eq!(kauffman_bracket(&conn).unwrap(), expected);
        let disj = a.disjoint_sum(&b);
        assert_eq!(kauffman_bracket(&disj).unwrap(), &expected * &d_loop());
    }

    #[test]
    fn limit_is_enforced() {
        let d = diagram("braid:3:[1,2,1,2,1,2]");
        assert!(matches!(
            kauffman_bracket_with_limit(&d, 3),
            Err(Error::LimitExceeded { .. })
        ));
    }
}
