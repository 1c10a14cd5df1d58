//! Parsing and printing of the surface syntax: paths `a.b` / `v`, lassos
//! `a.b(b)^inf`, elements `2*[a.b|b] + -1*[v|v]` (`[mu]` abbreviates
//! `[mu|mu]`), compact opens `{a, b.b}` and scalars `-3`, `2+3i`.
//!
//! Everything printed re-parses to an equal value; printed term order is
//! lexicographic on the `(ν, μ)` edge-name sequences.

use crate::algebra::AlgebraElement;
use crate::graph::{EdgeId, Graph};
use crate::path::{FinPath, LassoPath};
use crate::ring::{RingKind, RingScalar};
use crate::stone::CompactOpen;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{0}")]
pub struct TextError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, TextError> {
    Err(TextError(msg.into()))
}

/// Resolves one dot-segment to a sequence of edges. A segment is an edge
/// name, or a string of single-character edge names (`ab` for `a.b`).
fn segment_edges(g: &Graph, seg: &str) -> Result<Vec<EdgeId>, TextError> {
    if let Some(e) = g.edge_by_name(seg) {
        return Ok(vec![e]);
    }
    let mut edges = Vec::new();
    for ch in seg.chars() {
        match g.edge_by_name(&ch.to_string()) {
            Some(e) => edges.push(e),
            None => return err(format!("unknown edge in segment `{seg}`")),
        }
    }
    if edges.is_empty() {
        return err(format!("empty path segment `{seg}`"));
    }
    Ok(edges)
}

/// Parses `v` (a vertex) or a dotted edge sequence.
pub fn parse_path(g: &Graph, input: &str) -> Result<FinPath, TextError> {
    let s = input.trim();
    if s.is_empty() {
        return err("empty path literal");
    }
    if !s.contains('.') {
        // bare segment: vertex wins only when it is not also an edge
        match (g.edge_by_name(s), g.vertex_by_name(s)) {
            (Some(_), Some(_)) => return err(format!("ambiguous id `{s}` (vertex and edge)")),
            (None, Some(v)) => return Ok(FinPath::vertex(v)),
            _ => {}
        }
    }
    let mut edges = Vec::new();
    for seg in s.split('.') {
        edges.extend(segment_edges(g, seg.trim())?);
    }
    FinPath::from_edges(g, &edges).map_err(|_| TextError(format!("`{s}` is not composable")))
}

pub fn print_path(g: &Graph, p: &FinPath) -> String {
    if p.is_empty() {
        g.vertex_name(p.range()).to_string()
    } else {
        p.edges()
            .iter()
            .map(|&e| g.edge_name(e).to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Parses `prefix(cycle)^inf`; the prefix may be empty.
pub fn parse_lasso(g: &Graph, input: &str) -> Result<LassoPath, TextError> {
    let s = input.trim();
    let open = s.find('(').ok_or_else(|| TextError(format!("`{s}` is not a lasso literal")))?;
    let rest = &s[open + 1..];
    let Some(body_end) = rest.find(')') else {
        return err(format!("`{s}` is missing `)`"));
    };
    let suffix = rest[body_end + 1..].trim();
    if suffix != "^inf" {
        return err(format!("`{s}` must end with `)^inf`"));
    }
    let cycle = parse_path(g, &rest[..body_end])?;
    if cycle.is_empty() {
        return err("lasso cycle cannot be a vertex");
    }
    let prefix_text = s[..open].trim();
    let lasso = if prefix_text.is_empty() {
        LassoPath::cycle_only(g, cycle)
    } else {
        LassoPath::new(g, parse_path(g, prefix_text)?, cycle)
    };
    lasso.map_err(|e| TextError(format!("invalid lasso `{s}`: {e}")))
}

pub fn print_lasso(g: &Graph, x: &LassoPath) -> String {
    let prefix = if x.prefix().is_empty() {
        String::new()
    } else {
        print_path(g, x.prefix())
    };
    format!("{prefix}({})^inf", print_path(g, x.cycle()))
}

/// Parses an element literal: `r*[mu|nu]` terms joined by `+`.
pub fn parse_element(
    g: &Graph,
    ring: RingKind,
    input: &str,
) -> Result<AlgebraElement, TextError> {
    let s = input.trim();
    if s == "0" {
        return Ok(AlgebraElement::zero(ring));
    }
    let mut raw = Vec::new();
    let mut rest = s;
    loop {
        let Some(open) = rest.find('[') else {
            return err(format!("expected `[` in `{rest}`"));
        };
        let head = rest[..open].trim();
        let coeff_text = match head.strip_suffix('*') {
            Some(c) => c.trim(),
            None if head.is_empty() => "",
            None => return err(format!("expected `*` before `[` in `{head}[`")),
        };
        let coeff = if coeff_text.is_empty() {
            RingScalar::one(ring)
        } else {
            RingScalar::parse(ring, coeff_text).map_err(|e| TextError(e.to_string()))?
        };
        let Some(close) = rest[open..].find(']') else {
            return err("unterminated `[`");
        };
        let inner = &rest[open + 1..open + close];
        let (mu, nu) = match inner.find('|') {
            Some(bar) => (
                parse_path(g, &inner[..bar])?,
                parse_path(g, &inner[bar + 1..])?,
            ),
            None => {
                let p = parse_path(g, inner)?;
                (p.clone(), p)
            }
        };
        raw.push((mu, nu, coeff));
        rest = rest[open + close + 1..].trim_start();
        if rest.is_empty() {
            break;
        }
        rest = rest
            .strip_prefix('+')
            .ok_or_else(|| TextError(format!("expected `+` between terms near `{rest}`")))?
            .trim_start();
    }
    AlgebraElement::from_terms(g, ring, raw).map_err(|e| TextError(e.to_string()))
}

pub fn print_element(g: &Graph, el: &AlgebraElement) -> String {
    if el.is_zero() {
        return "0".to_string();
    }
    el.terms()
        .map(|(cyl, r)| {
            format!(
                "{}*[{}|{}]",
                r,
                print_path(g, cyl.mu()),
                print_path(g, cyl.nu())
            )
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Parses a compact-open literal `{a, b.b}`.
pub fn parse_compact_open(g: &Graph, input: &str) -> Result<CompactOpen, TextError> {
    let s = input.trim();
    let body = s
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| TextError(format!("`{s}` is not a compact-open literal")))?;
    let body = body.trim();
    if body.is_empty() {
        return Ok(CompactOpen::empty());
    }
    let mut prefixes = Vec::new();
    for part in body.split(',') {
        prefixes.push(parse_path(g, part)?);
    }
    Ok(CompactOpen::new(g, prefixes))
}

pub fn print_compact_open(g: &Graph, a: &CompactOpen) -> String {
    let parts: Vec<String> = a.prefixes().iter().map(|p| print_path(g, p)).collect();
    format!("{{{}}}", parts.join(", "))
}
