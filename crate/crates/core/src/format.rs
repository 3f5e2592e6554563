//! Plain-text complex format.
//!
//! ```text
//! # comment
//! vertices 6
//! 1 2 3
//! 2 3 4
//! ```
//!
//! `#` lines are comments, the optional `vertices <n>` header fixes the
//! universe to `{1..n}`, and every other nonempty line is one facet written
//! as strictly increasing labels. The writer emits facets in lexicographic
//! order, so writing a parsed file again reproduces it byte for byte.

use std::fmt::Write as _;

use crate::complex::{vertex_ids, Facet, PureComplex, VertexId};
use crate::error::{Error, Result};

pub fn parse_complex(text: &str) -> Result<PureComplex> {
    let mut universe: Option<Vec<VertexId>> = None;
    let mut facets: Vec<Facet> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("vertices") {
            let token = rest.trim();
            let n: u32 = token.parse().map_err(|_| Error::BadToken {
                line,
                token: token.to_string(),
            })?;
            let labels: Vec<u32> = (1..=n).collect();
            universe = Some(vertex_ids(&labels).map_err(|e| e.at_line(line))?);
            continue;
        }
        let mut labels = Vec::new();
        for token in trimmed.split_whitespace() {
            let v: u32 = token.parse().map_err(|_| Error::BadToken {
                line,
                token: token.to_string(),
            })?;
            labels.push(v);
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing { line });
        }
        let facet = Facet::from_labels(&labels).map_err(|e| e.at_line(line))?;
        if let Some(first) = facets.first() {
            if first.len() != facet.len() {
                return Err(Error::NonUniformCardinality {
                    expected: first.len(),
                    found: facet.len(),
                }
                .at_line(line));
            }
        }
        if facets.contains(&facet) {
            return Err(Error::DuplicateFacet(facet.vertices().to_vec()).at_line(line));
        }
        if let Some(u) = &universe {
            if let Some(v) = facet.vertices().iter().find(|v| u.binary_search(v).is_err()) {
                return Err(Error::VertexOutsideUniverse(*v).at_line(line));
            }
        }
        facets.push(facet);
        lines.push(line);
    }
    PureComplex::from_facets(facets.clone(), universe).map_err(|e| match e {
        Error::VertexOutsideUniverse(v) => {
            let at = facets.iter().position(|f| f.contains(v)).map_or(0, |i| lines[i]);
            e.at_line(at)
        }
        Error::DimensionTooSmall(_) => e.at_line(lines[0]),
        other => other,
    })
}

/// Renders a complex. Fails if the universe is neither the facet support nor
/// `{1..n}`, since the format cannot express that.
pub fn write_complex(c: &PureComplex) -> Result<String> {
    let support: std::collections::BTreeSet<VertexId> =
        c.facets().iter().flat_map(|f| f.vertices().iter().copied()).collect();
    let mut out = String::new();
    if support.len() != c.n() {
        if !c.is_canonical_universe() {
            return Err(Error::UnrepresentableUniverse);
        }
        writeln!(out, "vertices {}", c.n()).unwrap();
    }
    for f in c.sorted_facets() {
        let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    Ok(out)
}
