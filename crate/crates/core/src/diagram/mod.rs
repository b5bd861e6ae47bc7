//! Planar link diagrams in PD form and their combinatorics: components,
//! orientation tracing, writhe statistics, faces, mirrors and sums.
//!
//! Conventions, fixed once and verified by the bracket tests:
//!
//! * A crossing `[a, b, c, d]` lists the four incident edge ends in
//!   counterclockwise order; the under-strand occupies slots 0 and 2, the
//!   over-strand slots 1 and 3.
//! * The bracket A-smoothing joins slot pairs `(0,3)` and `(1,2)`; the
//!   B-smoothing joins `(0,1)` and `(2,3)`.
//! * With traced orientations, a crossing is positive exactly when the
//!   under-strand enters at slot 0 and the over-strand at slot 1, or both
//!   shifted by two. A positive kink then contributes `-A^3` to the bracket,
//!   and the elementary positive twist closes up to the diagram with bracket
//!   `A d + A^{-1}`.

mod build;
mod moves;
mod simplify;
pub(crate) mod tangle;

pub use build::build_diagram;
pub use moves::{
    apply_rational_move, apply_twist_move, enumerate_sites, smooth_site, MoveSite, StrandRef,
};
pub use simplify::simplify_r1_r2;

use serde::Serialize;

use crate::error::Error;

pub type Dart = (usize, u8);

/// A link diagram: PD crossings plus a count of crossing-free circles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkDiagram {
    crossings: Vec<[usize; 4]>,
    edge_count: usize,
    free_circles: usize,
}

/// Signed crossing statistics of a diagram under the traced orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub writhe: i64,
    pub linking_total: i64,
    pub self_writhe: i64,
    pub components: usize,
}

/// Traced orientation data: for every crossing, the slot at which each
/// strand enters, and the link component of every edge.
#[derive(Clone, Debug)]
pub struct Orientation {
    pub under_in: Vec<u8>,
    pub over_in: Vec<u8>,
    pub comp_of_edge: Vec<usize>,
    pub components: usize,
}

impl LinkDiagram {
    pub fn new(crossings: Vec<[usize; 4]>, free_circles: usize) -> Result<Self, Error> {
        let edge_count = crossings
            .iter()
            .flatten()
            .copied()
            .max()
            .map_or(0, |m| m + 1);
        let mut d = LinkDiagram { crossings, edge_count, free_circles };
        d.compact_ids();
        d.normalize_tuples();
        d.validate()?;
        Ok(d)
    }

    pub fn unknot() -> Self {
        LinkDiagram { crossings: Vec::new(), edge_count: 0, free_circles: 1 }
    }

    pub fn unlink(n: usize) -> Self {
        LinkDiagram { crossings: Vec::new(), edge_count: 0, free_circles: n }
    }

    pub(crate) fn from_parts_unchecked(
        crossings: Vec<[usize; 4]>,
        free_circles: usize,
    ) -> Self {
        let mut d = LinkDiagram { crossings, edge_count: 0, free_circles };
        d.compact_ids();
        d.normalize_tuples();
        debug_assert!(d.validate().is_ok(), "internal diagram invalid");
        d
    }

    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn free_circles(&self) -> usize {
        self.free_circles
    }

    /// Every edge id below `edge_count` occurs exactly twice.
    pub fn validate(&self) -> Result<(), Error> {
        let mut seen = vec![0usize; self.edge_count];
        for t in &self.crossings {
            for &e in t {
                if e >= self.edge_count {
                    return Err(Error::InvalidPd(format!("edge id {e} out of range")));
                }
                seen[e] += 1;
            }
        }
        if let Some(e) = seen.iter().position(|&c| c != 2) {
            return Err(Error::InvalidPd(format!(
                "edge {e} occurs {} times (expected 2)",
                seen[e]
            )));
        }
        Ok(())
    }

    /// Relabels edges to the contiguous range `0..edge_count`.
    fn compact_ids(&mut self) {
        let mut map = std::collections::HashMap::new();
        let mut next = 0usize;
        for t in &mut self.crossings {
            for e in t.iter_mut() {
                let id = *map.entry(*e).or_insert_with(|| {
                    let id = next;
                    next += 1;
                    id
                });
                *e = id;
            }
        }
        self.edge_count = next;
    }

    /// Rotates each tuple to the lexicographically smaller of its two valid
    /// readings (rotation by two preserves the crossing).
    fn normalize_tuples(&mut self) {
        for t in &mut self.crossings {
            let rot = [t[2], t[3], t[0], t[1]];
            if rot < *t {
                *t = rot;
            }
        }
    }

    /// The two occurrence darts of each edge, in scan order.
    pub fn occurrences(&self) -> Vec<[Dart; 2]> {
        let mut occ: Vec<Vec<Dart>> = vec![Vec::new(); self.edge_count];
        for (c, t) in self.crossings.iter().enumerate() {
            for (p, &e) in t.iter().enumerate() {
                occ[e].push((c, p as u8));
            }
        }
        occ.into_iter()
            .map(|v| {
                debug_assert_eq!(v.len(), 2);
                [v[0], v[1]]
            })
            .collect()
    }

    /// Traces every component once, from its lowest edge id, recording the
    /// entering slots of both strands at each crossing.
    pub fn orientation(&self) -> Orientation {
        let occ = self.occurrences();
        let n = self.crossings.len();
        let mut under_in = vec![u8::MAX; n];
        let mut over_in = vec![u8::MAX; n];
        let mut comp_of_edge = vec![usize::MAX; self.edge_count];
        let mut components = 0;
        for start in 0..self.edge_count {
            if comp_of_edge[start] != usize::MAX {
                continue;
            }
            let comp = components;
            components += 1;
            // Walk from `start` toward its second occurrence; the walk is a
            // permutation on directed edges, so it returns to the start state.
            let mut edge = start;
            let mut toward = 1usize;
            loop {
                comp_of_edge[edge] = comp;
                let (c, p) = occ[edge][toward];
                // The strand enters crossing c at slot p.
                if p % 2 == 0 {
                    if under_in[c] == u8::MAX {
                        under_in[c] = p;
                    }
                } else if over_in[c] == u8::MAX {
                    over_in[c] = p;
                }
                let q = (p + 2) % 4;
                let next_edge = self.crossings[c][q as usize];
                let next_toward = if occ[next_edge][0] == (c, q) { 1 } else { 0 };
                edge = next_edge;
                toward = next_toward;
                if edge == start && toward == 1 {
                    break;
                }
            }
        }
        debug_assert!(under_in.iter().all(|&p| p == 0 || p == 2));
        debug_assert!(over_in.iter().all(|&p| p == 1 || p == 3));
        Orientation { under_in, over_in, comp_of_edge, components }
    }

    /// Per-crossing signs under the traced orientation, with optional
    /// component flips (used to test orientation independence).
    pub fn signs_with_flips(&self, o: &Orientation, flips: &[bool]) -> Vec<i64> {
        self.crossings
            .iter()
            .enumerate()
            .map(|(c, t)| {
                let base = if (o.under_in[c] == 0 && o.over_in[c] == 1)
                    || (o.under_in[c] == 2 && o.over_in[c] == 3)
                {
                    1
                } else {
                    -1
                };
                let cu = o.comp_of_edge[t[0]];
                let co = o.comp_of_edge[t[1]];
                let fu = flips.get(cu).copied().unwrap_or(false);
                let fo = flips.get(co).copied().unwrap_or(false);
                if fu != fo {
                    -base
                } else {
                    base
                }
            })
            .collect()
    }

    pub fn stats(&self) -> DiagramStats {
        let o = self.orientation();
        self.stats_with_flips(&o, &vec![false; o.components])
    }

    pub fn stats_with_flips(&self, o: &Orientation, flips: &[bool]) -> DiagramStats {
        let signs = self.signs_with_flips(o, flips);
        let mut writhe = 0;
        let mut mixed = 0;
        for (c, t) in self.crossings.iter().enumerate() {
            writhe += signs[c];
            if o.comp_of_edge[t[0]] != o.comp_of_edge[t[1]] {
                mixed += signs[c];
            }
        }
        debug_assert_eq!(mixed % 2, 0, "mixed crossing signs must sum evenly");
        DiagramStats {
            writhe,
            linking_total: mixed / 2,
            self_writhe: writhe - mixed,
            components: o.components + self.free_circles,
        }
    }

    /// Faces as orbits of darts under `d -> rotate(other_end(d))`.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let occ = self.occurrences();
        let n = self.crossings.len();
        let mut seen = vec![false; 4 * n];
        let mut faces = Vec::new();
        for c0 in 0..n {
            for p0 in 0..4u8 {
                if seen[4 * c0 + p0 as usize] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut c, mut p) = (c0, p0);
                loop {
                    if seen[4 * c + p as usize] {
                        break;
                    }
                    seen[4 * c + p as usize] = true;
                    face.push((c, p));
                    let e = self.crossings[c][p as usize];
                    let other = if occ[e][0] == (c, p) { occ[e][1] } else { occ[e][0] };
                    c = other.0;
                    p = (other.1 + 1) % 4;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Connected components of the 4-valent graph (crossing indices).
    pub fn connected_parts(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut comp = vec![usize::MAX; n];
        let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); self.edge_count];
        for (c, t) in self.crossings.iter().enumerate() {
            for &e in t {
                by_edge[e].push(c);
            }
        }
        let mut parts = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(c) = stack.pop() {
                members.push(c);
                for &e in &self.crossings[c] {
                    for &c2 in &by_edge[e] {
                        if comp[c2] == usize::MAX {
                            comp[c2] = id;
                            stack.push(c2);
                        }
                    }
                }
            }
            members.sort_unstable();
            parts.push(members);
        }
        parts
    }

    /// Splits into connected crossing-diagrams; free circles are returned
    /// as the second value.
    pub fn split_parts(&self) -> (Vec<LinkDiagram>, usize) {
        let parts = self.connected_parts();
        let diagrams = parts
            .into_iter()
            .map(|members| {
                let crossings = members.iter().map(|&c| self.crossings[c]).collect();
                LinkDiagram::from_parts_unchecked(crossings, 0)
            })
            .collect();
        (diagrams, self.free_circles)
    }

    /// Euler check `V - E + F = 2` on each connected part of the 4-valent graph.
    pub fn euler_ok(&self) -> bool {
        let (parts, _) = self.split_parts();
        parts.into_iter().all(|part| {
            let v = part.crossing_count() as i64;
            let e = part.edge_count() as i64;
            let f = part.faces().len() as i64;
            v - e + f == 2
        })
    }

    /// The same diagram with one crossing switched, edge labels untouched.
    /// Keeping labels stable keeps traversal order stable, which the
    /// descending recursion's termination measure relies on.
    pub(crate) fn with_crossing_switched(&self, c: usize) -> LinkDiagram {
        let mut crossings = self.crossings.clone();
        let t = crossings[c];
        crossings[c] = [t[1], t[2], t[3], t[0]];
        LinkDiagram { crossings, edge_count: self.edge_count, free_circles: self.free_circles }
    }

    /// Mirror image: every crossing switched.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|&[a, b, c, d]| [b, c, d, a])
            .collect();
        LinkDiagram::from_parts_unchecked(crossings, self.free_circles)
    }

    /// Connected sum along marked edges (default: edge 0 of each summand).
    pub fn connected_sum(
        &self,
        other: &LinkDiagram,
        marked_self: Option<usize>,
        marked_other: Option<usize>,
    ) -> LinkDiagram {
        if self.crossings.is_empty() {
            // T_k # X = X with k-1 extra circles
            let mut out = other.clone();
            out.free_circles += self.free_circles.saturating_sub(1);
            return out;
        }
        if other.crossings.is_empty() {
            let mut out = self.clone();
            out.free_circles += other.free_circles.saturating_sub(1);
            return out;
        }
        let e1 = marked_self.unwrap_or(0);
        let e2 = marked_other.unwrap_or(0);
        let offset = self.edge_count;
        let mut crossings = self.crossings.clone();
        crossings.extend(
            other
                .crossings
                .iter()
                .map(|t| [t[0] + offset, t[1] + offset, t[2] + offset, t[3] + offset]),
        );
        let e2 = e2 + offset;
        // Cut both marked edges and cross-join the four loose ends.
        let mut occ1 = Vec::new();
        let mut occ2 = Vec::new();
        for (c, t) in crossings.iter().enumerate() {
            for (p, &e) in t.iter().enumerate() {
                if e == e1 {
                    occ1.push((c, p));
                } else if e == e2 {
                    occ2.push((c, p));
                }
            }
        }
        let fresh = offset + other.edge_count;
        // e1 stays at occ1[0] and takes over occ2[0]; a fresh edge joins the
        // two remaining ends.
        let (c, p) = occ2[0];
        crossings[c][p] = e1;
        let (c, p) = occ1[1];
        crossings[c][p] = fresh;
        let (c, p) = occ2[1];
        crossings[c][p] = fresh;
        LinkDiagram::from_parts_unchecked(crossings, self.free_circles + other.free_circles)
    }

    pub fn disjoint_sum(&self, other: &LinkDiagram) -> LinkDiagram {
        let offset = self.edge_count;
        let mut crossings = self.crossings.clone();
        crossings.extend(
            other
                .crossings
                .iter()
                .map(|t| [t[0] + offset, t[1] + offset, t[2] + offset, t[3] + offset]),
        );
        LinkDiagram::from_parts_unchecked(crossings, self.free_circles + other.free_circles)
    }

    /// Canonical key, invariant under edge relabeling, crossing reordering
    /// and tuple rotation. Connected parts are canonicalized independently
    /// and sorted.
    pub fn canonical_key(&self) -> CanonicalKey {
        let (parts, free) = self.split_parts();
        let mut encodings: Vec<Vec<u32>> = parts.iter().map(canonical_part).collect();
        encodings.sort();
        CanonicalKey { parts: encodings, free_circles: free }
    }

    pub fn to_pd_json(&self) -> serde_json::Value {
        serde_json::json!({
            "crossings": self.crossings,
            "free_circles": self.free_circles,
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalKey {
    parts: Vec<Vec<u32>>,
    free_circles: usize,
}

/// Applies edge identifications to a crossing list, returning the number of
/// circles closed (a join of already-identified ends closes a loop).
pub(crate) fn splice_unions(crossings: &mut [[usize; 4]], joins: &[(usize, usize)]) -> usize {
    use std::collections::HashMap;
    fn find(parent: &mut HashMap<usize, usize>, x: usize) -> usize {
        let p = *parent.get(&x).unwrap_or(&x);
        if p == x {
            x
        } else {
            let r = find(parent, p);
            parent.insert(x, r);
            r
        }
    }
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut circles = 0;
    for &(x, y) in joins {
        let rx = find(&mut parent, x);
        let ry = find(&mut parent, y);
        if rx == ry {
            circles += 1;
        } else {
            parent.insert(ry, rx);
        }
    }
    for t in crossings.iter_mut() {
        for e in t.iter_mut() {
            *e = find(&mut parent, *e);
        }
    }
    circles
}

/// Minimal BFS encoding over all (seed crossing, even rotation) choices.
fn canonical_part(d: &LinkDiagram) -> Vec<u32> {
    let n = d.crossing_count();
    if n == 0 {
        return Vec::new();
    }
    let occ = d.occurrences();
    let mut best: Option<Vec<u32>> = None;
    for seed in 0..n {
        for rot in [0u8, 2] {
            let mut order: Vec<(usize, u8)> = vec![(seed, rot)];
            let mut placed = vec![false; n];
            placed[seed] = true;
            let mut edge_label = std::collections::HashMap::new();
            let mut next_label = 0u32;
            let mut encoding = Vec::with_capacity(4 * n);
            let mut qi = 0;
            while qi < order.len() {
                let (c, r) = order[qi];
                qi += 1;
                for k in 0..4u8 {
                    let p = ((r + k) % 4) as usize;
                    let e = d.crossings()[c][p];
                    let label = *edge_label.entry(e).or_insert_with(|| {
                        let l = next_label;
                        next_label += 1;
                        l
                    });
                    encoding.push(label);
                    // discover the neighbor across this edge
                    let (c2, p2) = if occ[e][0] == (c, p as u8) { occ[e][1] } else { occ[e][0] };
                    if !placed[c2] {
                        placed[c2] = true;
                        let r2 = if p2 % 2 == 0 { p2 } else { (p2 + 3) % 4 };
                        order.push((c2, r2));
                    }
                }
            }
            if best.as_ref().map_or(true, |b| encoding < *b) {
                best = Some(encoding);
            }
        }
    }
    best.unwrap()
}
