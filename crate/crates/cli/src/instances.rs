//! Instance and parameter parsing for the command line: shorthand strings,
//! descriptor JSON (inline or @file), corpus specifications, and exact
//! rational arguments.

use num_rational::BigRational;
use num_traits::Zero;

use tuttelab::catalog;
use tuttelab::graph::Multigraph;
use tuttelab::lab::search::{self, InstanceList};
use tuttelab::matroid::Descriptor;
use tuttelab::{Error, Limits, Matroid};

/// An instance argument: a family shorthand, `@path` to a descriptor JSON
/// file, or an inline JSON descriptor.
pub fn parse_matroid(spec: &str, limits: &Limits) -> Result<(String, Matroid), Error> {
    let spec = spec.trim();
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidConstruction(format!("cannot read '{path}': {e}")))?;
        let descriptor: Descriptor = serde_json::from_str(&text)
            .map_err(|e| Error::InvalidConstruction(format!("bad descriptor JSON: {e}")))?;
        let m = Matroid::from_descriptor(&descriptor, limits)?;
        return Ok((path.to_string(), m));
    }
    if spec.starts_with('{') {
        let descriptor: Descriptor = serde_json::from_str(spec)
            .map_err(|e| Error::InvalidConstruction(format!("bad descriptor JSON: {e}")))?;
        let m = Matroid::from_descriptor(&descriptor, limits)?;
        return Ok((spec.to_string(), m));
    }
    let m = catalog::parse_shorthand(spec)?;
    Ok((spec.to_string(), m))
}

/// A graph argument: a graph shorthand, `@path`, or inline JSON of the form
/// {"vertices": V, "edges": [[u, v], ...]}.
pub fn parse_graph(spec: &str) -> Result<(String, Multigraph), Error> {
    let spec = spec.trim();
    let from_json = |text: &str| -> Result<Multigraph, Error> {
        let raw: serde_json::Value = serde_json::from_str(text)
            .map_err(|e| Error::InvalidConstruction(format!("bad graph JSON: {e}")))?;
        let g: Multigraph = serde_json::from_value(raw)
            .map_err(|e| Error::InvalidConstruction(format!("bad graph JSON: {e}")))?;
        Multigraph::new(g.vertices, g.edges)
    };
    if let Some(path) = spec.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidConstruction(format!("cannot read '{path}': {e}")))?;
        return Ok((path.to_string(), from_json(&text)?));
    }
    if spec.starts_with('{') {
        return Ok((spec.to_string(), from_json(spec)?));
    }
    Ok((spec.to_string(), catalog::parse_graph_shorthand(spec)?))
}

/// Corpus specifications, comma separated:
///   family=lo..hi      parameter sweep (e.g. wheel=2..8, Knm=2..5)
///   multigraphs<=N     all connected multigraphs with at most N edges
///   @path              JSON-lines file of descriptors
pub fn parse_corpus(spec: &str, limits: &Limits) -> Result<InstanceList, Error> {
    let mut out: InstanceList = Vec::new();
    for term in spec.split(',') {
        let term = term.trim();
        if term.is_empty() {
            continue;
        }
        if let Some(path) = term.strip_prefix('@') {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidConstruction(format!("cannot read '{path}': {e}")))?;
            for (lineno, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let descriptor: Descriptor = serde_json::from_str(line).map_err(|e| {
                    Error::InvalidConstruction(format!("{path}:{}: bad descriptor: {e}", lineno + 1))
                })?;
                let m = Matroid::from_descriptor(&descriptor, limits)?;
                out.push((format!("{path}:{}", lineno + 1), m));
            }
        } else if let Some(rest) = term.strip_prefix("multigraphs<=") {
            let max: usize = rest.parse().map_err(|_| {
                Error::InvalidConstruction(format!("bad multigraph edge bound '{rest}'"))
            })?;
            if max > 12 {
                return Err(Error::ResourceLimit(format!(
                    "multigraph corpus capped at 12 edges, requested {max}"
                )));
            }
            out.extend(search::multigraph_corpus(max)?);
        } else if let Some((family, range)) = term.split_once('=') {
            let (lo, hi) = range.split_once("..").ok_or_else(|| {
                Error::InvalidConstruction(format!("range must look like lo..hi in '{term}'"))
            })?;
            let lo: usize = lo.trim().parse().map_err(|_| {
                Error::InvalidConstruction(format!("bad range start in '{term}'"))
            })?;
            let hi: usize = hi.trim().parse().map_err(|_| {
                Error::InvalidConstruction(format!("bad range end in '{term}'"))
            })?;
            out.extend(search::family_range_corpus(family.trim(), lo, hi)?);
        } else {
            return Err(Error::InvalidConstruction(format!("unrecognized corpus term '{term}'")));
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidConstruction("corpus specification is empty".into()));
    }
    Ok(out)
}

/// Exact rationals from "p/q", integers, or finite decimals ("2.5").
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || Error::InvalidConstruction(format!("cannot parse '{s}' as an exact rational"));
    if let Some((num, den)) = s.split_once('/') {
        let n: num_bigint::BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: num_bigint::BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let digits = frac_part.len() as u32;
        let joined = format!("{int_part}{frac_part}");
        let n: num_bigint::BigInt = joined.parse().map_err(|_| bad())?;
        return Ok(BigRational::new(n, num_bigint::BigInt::from(10u32).pow(digits)));
    }
    let n: num_bigint::BigInt = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from(n))
}

/// Comma-separated rational list.
pub fn parse_rational_list(s: &str) -> Result<Vec<BigRational>, Error> {
    s.split(',').map(parse_rational).collect()
}
