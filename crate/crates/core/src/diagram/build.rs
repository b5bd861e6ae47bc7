//! Diagram constructors for every buildable spec form.

use super::tangle::{conway_neg, conway_pos, Tangle};
use super::LinkDiagram;
use crate::error::Error;
use crate::notation::{Fraction, LinkSpec};

/// Builds the diagram of a spec. `Named` specs must be resolved by the
/// caller first (see `crate::build_link`).
pub fn build_diagram(spec: &LinkSpec) -> Result<LinkDiagram, Error> {
    match spec {
        LinkSpec::Braid { strands, word } => braid_closure(*strands, word),
        LinkSpec::Pd { crossings } => LinkDiagram::new(crossings.clone(), 0),
        LinkSpec::Rational(f) => Ok(Tangle::from_fraction(f).closure_n()),
        LinkSpec::Pretzel(ns) => {
            let fracs: Vec<Fraction> = ns
                .iter()
                .map(|&n| Fraction::new(1, n).map_err(|_| Error::Invalid("pretzel column 0".into())))
                .collect::<Result<_, _>>()?;
            montesinos(&fracs)
        }
        LinkSpec::Montesinos(fs) => montesinos(fs),
        LinkSpec::Named(key) => Err(Error::UnknownNamedLink(key.clone())),
        LinkSpec::Mirror(inner) => Ok(build_diagram(inner)?.mirror()),
        LinkSpec::ConnSum(parts) => {
            let mut acc: Option<LinkDiagram> = None;
            for p in parts {
                let d = build_diagram(p)?;
                acc = Some(match acc {
                    None => d,
                    Some(a) => a.connected_sum(&d, None, None),
                });
            }
            acc.ok_or_else(|| Error::Invalid("empty connected sum".into()))
        }
        LinkSpec::Disjoint(parts) => {
            let mut acc: Option<LinkDiagram> = None;
            for p in parts {
                let d = build_diagram(p)?;
                acc = Some(match acc {
                    None => d,
                    Some(a) => a.disjoint_sum(&d),
                });
            }
            acc.ok_or_else(|| Error::Invalid("empty disjoint sum".into()))
        }
    }
}

/// Montesinos link: columns juxtaposed left to right, numerator closure.
/// Pretzel columns `[1/n]` are vertical twist regions; integer columns are
/// horizontal twist regions.
pub(crate) fn montesinos(columns: &[Fraction]) -> Result<LinkDiagram, Error> {
    if columns.is_empty() {
        return Err(Error::Invalid("montesinos needs at least one column".into()));
    }
    let mut acc: Option<Tangle> = None;
    for f in columns {
        let col = Tangle::from_fraction(f);
        match acc.as_mut() {
            None => acc = Some(col),
            Some(t) => t.attach_right(col),
        }
    }
    Ok(acc.unwrap().closure_n())
}

/// Closure of a braid word on `strands` strands. The generator `s_i`
/// (letter `+i`) is the crossing that is positive under the sign rule when
/// all strands are oriented the same way along the braid.
fn braid_closure(strands: usize, word: &[i64]) -> Result<LinkDiagram, Error> {
    if strands == 0 {
        return Err(Error::Invalid("braid needs at least one strand".into()));
    }
    for &letter in word {
        if letter == 0 || letter.unsigned_abs() as usize >= strands {
            return Err(Error::BraidLetterOutOfRange { letter, strands });
        }
    }
    let mut next_id = 0usize;
    let mut fresh = || {
        let id = next_id;
        next_id += 1;
        id
    };
    let start: Vec<usize> = (0..strands).map(|_| fresh()).collect();
    let mut cur = start.clone();
    let mut touched = vec![false; strands];
    let mut crossings = Vec::with_capacity(word.len());
    for &letter in word {
        let i = letter.unsigned_abs() as usize - 1;
        let (tl, tr) = (cur[i], cur[i + 1]);
        let bl = fresh();
        let br = fresh();
        // Ports of the braid crossing, read as a tangle: NW=TL, SW=BL,
        // SE=BR, NE=TR. A positive generator is Conway-positive here (its
        // A-smoothing continues the strands straight down).
        crossings.push(if letter > 0 {
            conway_pos(tl, bl, br, tr)
        } else {
            conway_neg(tl, bl, br, tr)
        });
        cur[i] = bl;
        cur[i + 1] = br;
        touched[i] = true;
        touched[i + 1] = true;
    }
    // Close the braid: identify bottom ends with top ends. Untouched
    // strands close into crossing-free circles; touched strands have
    // distinct current ids, so the renames cannot collide.
    let mut free_circles = 0;
    for s in 0..strands {
        if !touched[s] {
            free_circles += 1;
            continue;
        }
        let (a, b) = (start[s], cur[s]);
        for t in &mut crossings {
            for e in t.iter_mut() {
                if *e == b {
                    *e = a;
                }
            }
        }
    }
    Ok(LinkDiagram::from_parts_unchecked(crossings, free_circles))
}
