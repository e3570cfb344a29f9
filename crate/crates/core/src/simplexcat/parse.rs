use std::str::FromStr;

use super::MonotoneMap;
use crate::error::{Error, Result};

const MAX_DIM: usize = 4096;

/// Parses `(v_0,...,v_m):[m]→[n]`; `->` is accepted for the arrow and
/// whitespace is ignored.
impl FromStr for MonotoneMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |why: &str| Error::Parse(format!("{why} in map {s:?}"));
        let rest = text.strip_prefix('(').ok_or_else(|| bad("missing '('"))?;
        let close = rest.find(')').ok_or_else(|| bad("missing ')'"))?;
        let (list, rest) = rest.split_at(close);
        let rest = rest[1..].strip_prefix(':').ok_or_else(|| bad("missing ':'"))?;
        let values = list
            .split(',')
            .map(|v| parse_num(v).ok_or_else(|| bad("bad value")))
            .collect::<Result<Vec<_>>>()?;
        let (m, rest) = bracket(rest).ok_or_else(|| bad("bad source"))?;
        let rest = rest.strip_prefix('→').or_else(|| rest.strip_prefix("->")).ok_or_else(|| bad("missing arrow"))?;
        let (n, rest) = bracket(rest).ok_or_else(|| bad("bad target"))?;
        if !rest.is_empty() {
            return Err(bad("trailing input"));
        }
        if values.len() != m + 1 {
            return Err(bad("value count does not match the source"));
        }
        MonotoneMap::new(values, n)
    }
}

fn parse_num(s: &str) -> Option<usize> {
    if s.is_empty() || s.len() > 6 || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok().filter(|&v| v <= MAX_DIM)
}

fn bracket(s: &str) -> Option<(usize, &str)> {
    let s = s.strip_prefix('[')?;
    let end = s.find(']')?;
    Some((parse_num(&s[..end])?, &s[end + 1..]))
}

impl MonotoneMap {
    pub fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}
