//! The tangle-move rewriting engine: twist insertions (k-moves), rational
//! n/m-moves, and the infinity smoothing, at user-chosen co-facial sites.

use super::tangle::Tangle;
use super::{Dart, LinkDiagram};
use crate::error::Error;
use crate::notation::Fraction;
use crate::tangles::cf_of;

/// One strand of a move site: a PD edge or a crossing-free circle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StrandRef {
    Edge(usize),
    Circle(usize),
}

/// A `[0]`-tangle site: two distinct parallel strands bounding a common
/// face (crossing-free circles are co-facial with everything). When the
/// strands bound more than one shared face, `face` pins the choice;
/// otherwise the first shared face is used.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MoveSite {
    pub a: StrandRef,
    pub b: StrandRef,
    pub face: Option<usize>,
}

impl MoveSite {
    pub fn edges(a: usize, b: usize) -> MoveSite {
        MoveSite { a: StrandRef::Edge(a), b: StrandRef::Edge(b), face: None }
    }

    pub fn edges_in_face(a: usize, b: usize, face: usize) -> MoveSite {
        MoveSite { a: StrandRef::Edge(a), b: StrandRef::Edge(b), face: Some(face) }
    }
}

/// All valid sites: co-facial distinct edge pairs (with their face pinned),
/// plus every pairing that involves a crossing-free circle.
pub fn enumerate_sites(d: &LinkDiagram) -> Vec<MoveSite> {
    let mut sites = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (fi, face) in d.faces().iter().enumerate() {
        let edges: Vec<usize> = face.iter().map(|&(c, p)| d.crossings()[c][p as usize]).collect();
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                let (a, b) = (edges[i].min(edges[j]), edges[i].max(edges[j]));
                if a != b && seen.insert((fi, a, b)) {
                    sites.push(MoveSite::edges_in_face(a, b, fi));
                }
            }
        }
    }
    for ci in 0..d.free_circles() {
        for e in 0..d.edge_count() {
            sites.push(MoveSite { a: StrandRef::Edge(e), b: StrandRef::Circle(ci), face: None });
        }
        for cj in (ci + 1)..d.free_circles() {
            sites.push(MoveSite {
                a: StrandRef::Circle(ci),
                b: StrandRef::Circle(cj),
                face: None,
            });
        }
    }
    sites
}

/// Replaces the `[0]` site by `k` half-twists of the positive kind (the
/// rational `-k/1` tangle in Conway terms). `k = 0` is the identity.
pub fn apply_twist_move(d: &LinkDiagram, site: &MoveSite, k: i64) -> Result<LinkDiagram, Error> {
    if k == 0 {
        return Ok(d.clone());
    }
    insert_tangle(d, site, Tangle::horizontal(-k))
}

/// Replaces the `[0]` site by the Conway `[n/m]` rational tangle. The
/// `(2,2)`-move is `frac = 5/2`; a twist move by `k` equals `frac = -k/1`.
pub fn apply_rational_move(
    d: &LinkDiagram,
    site: &MoveSite,
    frac: &Fraction,
) -> Result<LinkDiagram, Error> {
    if frac.is_zero() {
        return Ok(d.clone());
    }
    insert_tangle(d, site, Tangle::rational(&cf_of(frac)))
}

/// Replaces the `[0]` site by the infinity tangle (the other smoothing).
pub fn smooth_site(d: &LinkDiagram, site: &MoveSite) -> Result<LinkDiagram, Error> {
    insert_tangle(d, site, Tangle::infinity())
}

struct CutStrand {
    /// Edge id kept on the face-walk entry side.
    kept: usize,
    /// Slot holding the far end, to receive a fresh edge id (None for a
    /// crossing-free circle, whose two tangle ports share one fresh id).
    far_slot: Option<Dart>,
}

/// Splices `tangle` into the site so that the identity tangle restores the
/// diagram and the inserted twists read in the face orientation.
fn insert_tangle(d: &LinkDiagram, site: &MoveSite, tangle: Tangle) -> Result<LinkDiagram, Error> {
    let (cut_a, cut_b, mut crossings, mut free_circles, mut next_id) = prepare_site(d, site)?;

    let offset = next_id;
    next_id += tangle.span();
    let mut t_crossings: Vec<[usize; 4]> = tangle
        .crossings()
        .iter()
        .map(|t| [t[0] + offset, t[1] + offset, t[2] + offset, t[3] + offset])
        .collect();
    free_circles += tangle.free_circles();
    let (nw, ne, sw, se) = (
        tangle.nw + offset,
        tangle.ne + offset,
        tangle.sw + offset,
        tangle.se + offset,
    );

    // Fresh ids for the far sides.
    let far_a = match cut_a.far_slot {
        Some((c, p)) => {
            let id = next_id;
            next_id += 1;
            crossings[c][p as usize] = id;
            id
        }
        None => cut_a.kept, // circle: both ports share one id
    };
    let far_b = match cut_b.far_slot {
        Some((c, p)) => {
            let id = next_id;
            crossings[c][p as usize] = id;
            id
        }
        None => cut_b.kept,
    };

    // Join tangle ports to the four strand ends. The face walk runs along
    // strand a from its kept end to its far end and later along strand b;
    // the tangle disk glues in with NW-NE carrying strand a and SE-SW
    // carrying strand b, matching the boundary cyclic order.
    let mut all = crossings;
    all.append(&mut t_crossings);
    let joins = [
        (nw, cut_a.kept),
        (ne, far_a),
        (se, cut_b.kept),
        (sw, far_b),
    ];
    free_circles += super::splice_unions(&mut all, &joins);
    Ok(LinkDiagram::from_parts_unchecked(all, free_circles))
}

type PreparedSite = (CutStrand, CutStrand, Vec<[usize; 4]>, usize, usize);

/// Validates the site and cuts both strands, returning the kept near-side
/// ids and the far-side slots awaiting fresh ids.
fn prepare_site(d: &LinkDiagram, site: &MoveSite) -> Result<PreparedSite, Error> {
    let crossings = d.crossings().to_vec();
    let mut free_circles = d.free_circles();
    let next_id = d.edge_count();

    match (site.a, site.b) {
        (StrandRef::Edge(a), StrandRef::Edge(b)) => {
            if a == b {
                return Err(Error::InvalidSite("site strands must be distinct".into()));
            }
            if a >= d.edge_count() || b >= d.edge_count() {
                return Err(Error::InvalidSite("edge id out of range".into()));
            }
            let (da, db) = cofacial_darts(d, a, b, site.face)
                .ok_or_else(|| Error::InvalidSite(format!("edges {a} and {b} not co-facial")))?;
            let occ = d.occurrences();
            let far_a = if occ[a][0] == da { occ[a][1] } else { occ[a][0] };
            let far_b = if occ[b][0] == db { occ[b][1] } else { occ[b][0] };
            Ok((
                CutStrand { kept: a, far_slot: Some(far_a) },
                CutStrand { kept: b, far_slot: Some(far_b) },
                crossings,
                free_circles,
                next_id,
            ))
        }
        (StrandRef::Edge(a), StrandRef::Circle(ci)) | (StrandRef::Circle(ci), StrandRef::Edge(a)) => {
            if a >= d.edge_count() || ci >= d.free_circles() {
                return Err(Error::InvalidSite("strand out of range".into()));
            }
            free_circles -= 1;
            let occ = d.occurrences();
            let far_a = occ[a][1];
            // The circle becomes a strand whose two tangle ports share one
            // fresh id; order strands canonically: a first.
            let circle = CutStrand { kept: next_id, far_slot: None };
            let cut_a = CutStrand { kept: a, far_slot: Some(far_a) };
            if matches!(site.a, StrandRef::Edge(_)) {
                Ok((cut_a, circle, crossings, free_circles, next_id + 1))
            } else {
                Ok((circle, cut_a, crossings, free_circles, next_id + 1))
            }
        }
        (StrandRef::Circle(ci), StrandRef::Circle(cj)) => {
            if ci == cj {
                return Err(Error::InvalidSite("site strands must be distinct".into()));
            }
            if ci >= d.free_circles() || cj >= d.free_circles() {
                return Err(Error::InvalidSite("circle index out of range".into()));
            }
            free_circles -= 2;
            Ok((
                CutStrand { kept: next_id, far_slot: None },
                CutStrand { kept: next_id + 1, far_slot: None },
                crossings,
                free_circles,
                next_id + 2,
            ))
        }
    }
}

/// Finds darts of edges `a` and `b` on a shared face (the given one, or
/// the first that contains both).
fn cofacial_darts(
    d: &LinkDiagram,
    a: usize,
    b: usize,
    face: Option<usize>,
) -> Option<(Dart, Dart)> {
    let faces = d.faces();
    let candidates: Vec<&Vec<Dart>> = match face {
        Some(fi) => vec![faces.get(fi)?],
        None => faces.iter().collect(),
    };
    for face in candidates {
        let mut da = None;
        let mut db = None;
        for &(c, p) in face {
            let e = d.crossings()[c][p as usize];
            if e == a && da.is_none() {
                da = Some((c, p));
            }
            if e == b && db.is_none() {
                db = Some((c, p));
            }
        }
        if let (Some(da), Some(db)) = (da, db) {
            return Some((da, db));
        }
    }
    None
}
