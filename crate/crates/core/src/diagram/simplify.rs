//! Greedy R1 loop and R2 bigon removal, applied until fixpoint.
//!
//! R1 removal changes the bracket by `(-A^3)^{sign}` and the Kauffman
//! polynomial by `a^{sign}`; the accumulated kink sign sum is returned so
//! callers can restore the factor.

use super::LinkDiagram;

/// Simplifies `d` by R1 and R2 moves. Returns the reduced diagram and the
/// signed count of removed R1 kinks.
pub fn simplify_r1_r2(d: &LinkDiagram) -> (LinkDiagram, i64) {
    let mut cur = d.clone();
    let mut kinks = 0i64;
    loop {
        if let Some((next, sign)) = remove_one_r1(&cur) {
            kinks += sign;
            cur = next;
            continue;
        }
        if let Some(next) = remove_one_r2(&cur) {
            cur = next;
            continue;
        }
        return (cur, kinks);
    }
}

/// Finds a crossing with a loop edge at cyclically adjacent slots and
/// removes it. Loop at slots (3,0) or (1,2): positive kink; (0,1) or
/// (2,3): negative kink.
fn remove_one_r1(d: &LinkDiagram) -> Option<(LinkDiagram, i64)> {
    for (c, t) in d.crossings().iter().enumerate() {
        for p in 0..4usize {
            let q = (p + 1) % 4;
            if t[p] != t[q] {
                continue;
            }
            let sign = if (p, q) == (3, 0) || (p, q) == (1, 2) { 1 } else { -1 };
            // The two remaining slots splice together.
            let r = (q + 1) % 4;
            let s = (q + 2) % 4;
            let (e1, e2) = (t[r], t[s]);
            let mut crossings: Vec<[usize; 4]> = d
                .crossings()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != c)
                .map(|(_, t)| *t)
                .collect();
            let mut free = d.free_circles();
            if e1 == e2 {
                // kinked circle standing alone
                free += 1;
            } else {
                for t in &mut crossings {
                    for e in t.iter_mut() {
                        if *e == e2 {
                            *e = e1;
                        }
                    }
                }
            }
            return Some((LinkDiagram::from_parts_unchecked(crossings, free), sign));
        }
    }
    None
}

/// Finds a bigon face whose two boundary edges have equal slot parity at
/// both crossings (over-over and under-under) and cancels the pair.
fn remove_one_r2(d: &LinkDiagram) -> Option<LinkDiagram> {
    let crossings = d.crossings();
    for face in d.faces() {
        if face.len() != 2 {
            continue;
        }
        let (c1, p1) = face[0];
        let (c2, p2) = face[1];
        if c1 == c2 {
            continue; // kink bigon, handled by R1
        }
        let e = crossings[c1][p1 as usize];
        let f = crossings[c2][p2 as usize];
        if e == f {
            continue;
        }
        // e must be over at both crossings or under at both.
        let parity_at = |c: usize, edge: usize| -> Option<usize> {
            let t = &crossings[c];
            let slots: Vec<usize> = (0..4).filter(|&p| t[p] == edge).collect();
            if slots.len() == 1 {
                Some(slots[0] % 2)
            } else {
                None // repeated edge at this crossing; leave to R1
            }
        };
        let (Some(pe1), Some(pe2)) = (parity_at(c1, e), parity_at(c2, e)) else {
            continue;
        };
        let (Some(pf1), Some(pf2)) = (parity_at(c1, f), parity_at(c2, f)) else {
            continue;
        };
        if pe1 != pe2 || pf1 != pf2 || pe1 == pf1 {
            continue; // clasp, not an R2 bigon
        }
        // Splice: on each strand, the two external edges merge.
        let external = |c: usize, parity: usize| -> Vec<usize> {
            (0..4)
                .filter(|&p| p % 2 == parity && crossings[c][p] != e && crossings[c][p] != f)
                .map(|p| crossings[c][p])
                .collect()
        };
        let mut splices = Vec::new();
        for parity in [1usize, 0] {
            let x1 = external(c1, parity);
            let x2 = external(c2, parity);
            if x1.len() != 1 || x2.len() != 1 {
                return None; // degenerate; bail out of simplification
            }
            splices.push((x1[0], x2[0]));
        }
        let mut new_crossings: Vec<[usize; 4]> = crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c1 && i != c2)
            .map(|(_, t)| *t)
            .collect();
        let circles = super::splice_unions(&mut new_crossings, &splices);
        return Some(LinkDiagram::from_parts_unchecked(
            new_crossings,
            d.free_circles() + circles,
        ));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::build_diagram;
    use crate::notation::parse_spec;

    #[test]
    fn kinked_unknot_reduces_to_circle() {
        // closure of s1 in B2: one positive kink
        let d = build_diagram(&parse_spec("braid:2:[1]").unwrap()).unwrap();
        let (r, kinks) = simplify_r1_r2(&d);
        assert_eq!(r.crossing_count(), 0);
        assert_eq!(r.free_circles(), 1);
        assert_eq!(kinks, 1);
    }

    #[test]
    fn negative_kink_counts_negative() {
        let d = build_diagram(&parse_spec("braid:2:[-1]").unwrap()).unwrap();
        let (r, kinks) = simplify_r1_r2(&d);
        assert_eq!(r.free_circles(), 1);
        assert_eq!(kinks, -1);
    }

    #[test]
    fn r2_pair_cancels() {
        let d = build_diagram(&parse_spec("braid:2:[1,-1]").unwrap()).unwrap();
        let (r, kinks) = simplify_r1_r2(&d);
        assert_eq!(r.crossing_count(), 0);
        assert_eq!(r.free_circles(), 2);
        assert_eq!(kinks, 0);
    }

    #[test]
    fn hopf_clasp_does_not_cancel() {
        let d = build_diagram(&parse_spec("braid:2:[1,1]").unwrap()).unwrap();
        let (r, kinks) = simplify_r1_r2(&d);
        assert_eq!(r.crossing_count(), 2);
        assert_eq!(kinks, 0);
    }

    #[test]
    fn figure_eight_is_reduced() {
        let d = build_diagram(&parse_spec("braid:3:[1,-2,1,-2]").unwrap()).unwrap();
        let (r, _) = simplify_r1_r2(&d);
        assert_eq!(r.crossing_count(), 4);
    }
}
