//! Line-oriented text format for resolution data.
//!
//! ```text
//! # exceptional data for the cusp
//! ambient_dim 2
//! origin_mult 2
//! divisor id=1 N=2 nu=1 m=1 neighbors=3 strict=0
//! divisor id=2 N=3 nu=2 m=1 neighbors=3 strict=0
//! divisor id=3 N=6 nu=4 m=2 neighbors=1,2 strict=1
//! ```
//!
//! Blank lines are skipped and `#` starts a comment (outside quotes).
//! `ambient_dim` is required and must be at least 2; `origin_mult` and
//! `h2` (a polynomial in `L`, needed as the recursion seed when the
//! ambient dimension exceeds 2) are optional. Each `divisor` line takes
//! `key=value` fields: `id`, `N`, `nu`, `m` are required, `strict`
//! defaults to 0, `neighbors` is a comma-separated id list, and
//! `class_open` / `class_strict` override the derived classes with
//! polynomials in `L` (quote values containing spaces). Decorations are
//! capped at 10^9 so downstream exponent arithmetic cannot overflow.
//! Neighbor references must point at declared divisors, symmetrically.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::parse::parse_laurent;
use crate::resolve::{Divisor, ResolutionData};

/// Largest accepted value for `N`, `nu`, `m`, and `strict`.
pub const MAX_DECORATION: u64 = 1_000_000_000;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::ResolutionFile {
        line,
        message: message.into(),
    }
}

/// Truncate `raw` at the first `#` that is not inside double quotes.
fn strip_comment(raw: &str) -> &str {
    let mut in_quotes = false;
    for (i, ch) in raw.char_indices() {
        match ch {
            '"' => in_quotes = !in_quotes,
            '#' if !in_quotes => return &raw[..i],
            _ => {}
        }
    }
    raw
}

/// Split `key=value` fields on whitespace, keeping quoted values whole.
fn split_fields(rest: &str, line: usize) -> Result<Vec<(String, String)>> {
    let mut fields = Vec::new();
    let mut token = String::new();
    let mut in_quotes = false;
    let mut flush = |token: &mut String| -> Result<()> {
        if token.is_empty() {
            return Ok(());
        }
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| err(line, format!("expected key=value, found `{token}`")))?;
        let value = value.strip_prefix('"').map_or(value, |v| {
            v.strip_suffix('"').unwrap_or(v)
        });
        if key.is_empty() {
            return Err(err(line, "empty field key"));
        }
        fields.push((key.to_string(), value.to_string()));
        token.clear();
        Ok(())
    };
    for ch in rest.chars() {
        match ch {
            '"' => {
                in_quotes = !in_quotes;
                token.push(ch);
            }
            c if c.is_whitespace() && !in_quotes => flush(&mut token)?,
            c => token.push(c),
        }
    }
    if in_quotes {
        return Err(err(line, "unterminated quote"));
    }
    flush(&mut token)?;
    Ok(fields)
}

fn parse_decoration(value: &str, key: &str, line: usize) -> Result<u64> {
    let n: u64 = value
        .parse()
        .map_err(|_| err(line, format!("{key} must be a positive integer, found `{value}`")))?;
    if n == 0 || n > MAX_DECORATION {
        return Err(err(
            line,
            format!("{key} must lie in 1..={MAX_DECORATION}, found {n}"),
        ));
    }
    Ok(n)
}

fn parse_class(value: &str, key: &str, line: usize) -> Result<LaurentPoly> {
    parse_laurent(value).map_err(|e| err(line, format!("invalid {key}: {e}")))
}

fn parse_divisor(rest: &str, line: usize) -> Result<Divisor> {
    let mut id = None;
    let mut n = None;
    let mut nu = None;
    let mut m = None;
    let mut strict = 0u64;
    let mut neighbors = BTreeSet::new();
    let mut class_open = None;
    let mut class_strict = None;
    for (key, value) in split_fields(rest, line)? {
        match key.as_str() {
            "id" => {
                let v: u32 = value
                    .parse()
                    .map_err(|_| err(line, format!("id must be an integer, found `{value}`")))?;
                id = Some(v);
            }
            "N" => n = Some(parse_decoration(&value, "N", line)?),
            "nu" => nu = Some(parse_decoration(&value, "nu", line)?),
            "m" => m = Some(parse_decoration(&value, "m", line)?),
            "strict" => {
                let v: u64 = value.parse().map_err(|_| {
                    err(line, format!("strict must be an integer, found `{value}`"))
                })?;
                if v > MAX_DECORATION {
                    return Err(err(line, format!("strict must be at most {MAX_DECORATION}")));
                }
                strict = v;
            }
            "neighbors" => {
                for part in value.split(',').filter(|p| !p.trim().is_empty()) {
                    let v: u32 = part.trim().parse().map_err(|_| {
                        err(line, format!("bad neighbor id `{}`", part.trim()))
                    })?;
                    neighbors.insert(v);
                }
            }
            "class_open" => class_open = Some(parse_class(&value, "class_open", line)?),
            "class_strict" => class_strict = Some(parse_class(&value, "class_strict", line)?),
            other => return Err(err(line, format!("unknown divisor field `{other}`"))),
        }
    }
    let id = id.ok_or_else(|| err(line, "divisor line is missing id"))?;
    let n = n.ok_or_else(|| err(line, "divisor line is missing N"))?;
    let nu = nu.ok_or_else(|| err(line, "divisor line is missing nu"))?;
    let m = m.ok_or_else(|| err(line, "divisor line is missing m"))?;
    if neighbors.contains(&id) {
        return Err(err(line, format!("divisor {id} lists itself as a neighbor")));
    }
    Ok(Divisor {
        id,
        n,
        nu,
        m,
        neighbors,
        strict_meets: strict,
        class_open,
        class_strict,
    })
}

/// Parse the text format into resolution data, validating ids, neighbor
/// symmetry, and decoration bounds.
pub fn parse_resolution_file(src: &str) -> Result<ResolutionData> {
    let mut ambient_dim: Option<(u32, usize)> = None;
    let mut origin_mult: Option<u64> = None;
    let mut h2: Option<LaurentPoly> = None;
    let mut divisors: Vec<(usize, Divisor)> = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let text = strip_comment(raw).trim();
        if text.is_empty() {
            continue;
        }
        let (head, rest) = text
            .split_once(char::is_whitespace)
            .map_or((text, ""), |(h, r)| (h, r.trim()));
        match head {
            "ambient_dim" => {
                if ambient_dim.is_some() {
                    return Err(err(line, "duplicate ambient_dim"));
                }
                let v: u32 = rest.parse().map_err(|_| {
                    err(line, format!("ambient_dim must be an integer, found `{rest}`"))
                })?;
                if v < 2 {
                    return Err(err(line, "ambient_dim must be at least 2"));
                }
                ambient_dim = Some((v, line));
            }
            "origin_mult" => {
                if origin_mult.is_some() {
                    return Err(err(line, "duplicate origin_mult"));
                }
                origin_mult = Some(parse_decoration(rest, "origin_mult", line)?);
            }
            "h2" => {
                if h2.is_some() {
                    return Err(err(line, "duplicate h2"));
                }
                h2 = Some(parse_class(rest, "h2", line)?);
            }
            "divisor" => divisors.push((line, parse_divisor(rest, line)?)),
            other => return Err(err(line, format!("unknown directive `{other}`"))),
        }
    }
    let (ambient_dim, _) =
        ambient_dim.ok_or_else(|| err(src.lines().count() + 1, "missing ambient_dim"))?;
    let mut seen: BTreeMap<u32, usize> = BTreeMap::new();
    for (line, d) in &divisors {
        if let Some(first) = seen.insert(d.id, *line) {
            return Err(err(
                *line,
                format!("duplicate divisor id {} (first declared on line {first})", d.id),
            ));
        }
    }
    let by_id: BTreeMap<u32, &Divisor> = divisors.iter().map(|(_, d)| (d.id, d)).collect();
    for (line, d) in &divisors {
        for nb in &d.neighbors {
            let other = by_id.get(nb).ok_or_else(|| {
                err(*line, format!("divisor {} names unknown neighbor {nb}", d.id))
            })?;
            if !other.neighbors.contains(&d.id) {
                return Err(err(
                    *line,
                    format!("adjacency {} - {nb} is not symmetric", d.id),
                ));
            }
        }
    }
    ResolutionData::from_divisors(
        ambient_dim,
        origin_mult,
        h2,
        divisors.into_iter().map(|(_, d)| d).collect(),
    )
}

/// Render resolution data in the text format accepted by
/// [`parse_resolution_file`].
pub fn serialize_resolution(res: &ResolutionData) -> String {
    let mut out = String::new();
    out.push_str(&format!("ambient_dim {}\n", res.ambient_dim));
    if let Some(m) = res.origin_mult {
        out.push_str(&format!("origin_mult {m}\n"));
    }
    if let Some(h2) = &res.h2 {
        out.push_str(&format!("h2 {}\n", h2.render("L")));
    }
    for d in res.divisors() {
        out.push_str(&format!(
            "divisor id={} N={} nu={} m={} strict={}",
            d.id, d.n, d.nu, d.m, d.strict_meets
        ));
        if !d.neighbors.is_empty() {
            let list: Vec<String> = d.neighbors.iter().map(|n| n.to_string()).collect();
            out.push_str(&format!(" neighbors={}", list.join(",")));
        }
        if let Some(c) = &d.class_open {
            out.push_str(&format!(" class_open=\"{}\"", c.render("L")));
        }
        if let Some(c) = &d.class_strict {
            out.push_str(&format!(" class_strict=\"{}\"", c.render("L")));
        }
        out.push('\n');
    }
    out
}
