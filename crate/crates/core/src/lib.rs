//! Exact computation of the 5-move and (2,2)-move invariants of links:
//! Kauffman bracket and Jones specializations, the two-variable Kauffman
//! polynomial, Fox colorings, rational tangle and Montesinos classifiers,
//! and a bundled catalog of the 45 conjugacy classes of `B_3/(s_i^5)`.

pub mod algebra;
pub mod bracket;
pub mod catalog;
pub mod colorings;
pub mod diagram;
pub mod error;
pub mod kauffman;
pub mod montesinos;
pub mod notation;
pub mod report;
pub mod tangles;

pub use error::Error;

use diagram::LinkDiagram;
use notation::LinkSpec;

/// Builds a diagram, resolving `named:` specs through the catalog.
pub fn build_link(spec: &LinkSpec) -> Result<LinkDiagram, Error> {
    diagram::build_diagram(&resolve_named(spec)?)
}

/// Replaces every `Named` node by its catalog spec.
pub fn resolve_named(spec: &LinkSpec) -> Result<LinkSpec, Error> {
    Ok(match spec {
        LinkSpec::Named(key) => {
            let entry = catalog::named(key)?;
            resolve_named(&entry.spec)?
        }
        LinkSpec::Mirror(inner) => LinkSpec::Mirror(Box::new(resolve_named(inner)?)),
        LinkSpec::ConnSum(parts) => LinkSpec::ConnSum(
            parts.iter().map(resolve_named).collect::<Result<_, _>>()?,
        ),
        LinkSpec::Disjoint(parts) => LinkSpec::Disjoint(
            parts.iter().map(resolve_named).collect::<Result<_, _>>()?,
        ),
        other => other.clone(),
    })
}
