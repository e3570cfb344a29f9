use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{K0Simplex, RankTriangle};
use crate::doldkan::ChainComplexFp;
use crate::error::{Error, Result};
use crate::intlin::WireInt;
use crate::twocat::mask_label;

/// `{"n": 2, "classes": {"{0,1}": [1], ...}}`; absent subsets are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct K0SimplexWire {
    pub n: usize,
    #[serde(default)]
    pub classes: BTreeMap<String, Vec<WireInt>>,
}

/// `{"n": 2, "vertices": [[0], ...], "edges": {"0,1": [1], ...}}`; absent
/// edges are zero.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankTriangleWire {
    pub n: usize,
    pub vertices: Vec<Vec<WireInt>>,
    #[serde(default)]
    pub edges: BTreeMap<String, Vec<WireInt>>,
}

fn ints(xs: &[WireInt]) -> Result<Vec<BigInt>> {
    xs.iter().map(WireInt::parse).collect()
}

fn wire(xs: &[BigInt]) -> Vec<WireInt> {
    xs.iter().map(WireInt::compact).collect()
}

/// `{0,2}` or `02`.
fn parse_subset(key: &str, n: usize) -> Result<u64> {
    let t = key.trim();
    let parts: Vec<String> = match t.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        Some(inner) => inner.split(',').map(|p| p.trim().to_string()).collect(),
        None => t.chars().map(String::from).collect(),
    };
    let mut mask = 0u64;
    let mut last = None;
    for p in parts {
        let i: usize = p.parse().map_err(|_| Error::Parse(format!("bad subset key {key:?}")))?;
        if i > n || last.is_some_and(|l| l >= i) {
            return Err(Error::Parse(format!("subset key {key:?} is not increasing inside [{n}]")));
        }
        last = Some(i);
        mask |= 1 << i;
    }
    if mask == 0 {
        return Err(Error::Parse(format!("empty subset key {key:?}")));
    }
    Ok(mask)
}

fn parse_pair(key: &str, n: usize) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bad edge key {key:?}, expected \"i,j\""));
    let (i, j) = key.split_once(',').ok_or_else(bad)?;
    let (i, j): (usize, usize) = (i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?);
    if i > j || j > n {
        return Err(Error::Parse(format!("edge key {key:?} outside i <= j <= {n}")));
    }
    Ok((i, j))
}

impl K0SimplexWire {
    pub fn decode(&self, b: &ChainComplexFp) -> Result<K0Simplex> {
        if self.n >= 63 {
            return Err(Error::Index(format!("dimension {} is too large", self.n)));
        }
        let mut classes = BTreeMap::new();
        for (key, xs) in &self.classes {
            if classes.insert(parse_subset(key, self.n)?, ints(xs)?).is_some() {
                return Err(Error::Parse(format!("subset {key:?} given twice")));
            }
        }
        K0Simplex::new(b, self.n, classes)
    }
}

impl From<&K0Simplex> for K0SimplexWire {
    fn from(s: &K0Simplex) -> Self {
        let classes = s.classes.iter().map(|(&m, x)| (mask_label(m), wire(x))).collect();
        K0SimplexWire { n: s.n, classes }
    }
}

impl RankTriangleWire {
    pub fn decode(&self, b: &ChainComplexFp) -> Result<RankTriangle> {
        if self.n > 64 {
            return Err(Error::Index(format!("dimension {} is too large", self.n)));
        }
        let mut t = RankTriangle::zero(b, self.n);
        t.vertices = self.vertices.iter().map(|v| ints(v)).collect::<Result<_>>()?;
        let mut seen = std::collections::BTreeSet::new();
        for (key, xs) in &self.edges {
            let pair = parse_pair(key, self.n)?;
            if !seen.insert(pair) {
                return Err(Error::Parse(format!("edge {key:?} given twice")));
            }
            t.edges.insert(pair, ints(xs)?);
        }
        t.validate(b)?;
        Ok(t)
    }
}

impl From<&RankTriangle> for RankTriangleWire {
    fn from(t: &RankTriangle) -> Self {
        RankTriangleWire {
            n: t.n,
            vertices: t.vertices.iter().map(|v| wire(v)).collect(),
            edges: t.edges.iter().map(|(&(i, j), x)| (format!("{i},{j}"), wire(x))).collect(),
        }
    }
}

impl K0Simplex {
    pub fn from_json(text: &str, b: &ChainComplexFp) -> Result<Self> {
        let w: K0SimplexWire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        w.decode(b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&K0SimplexWire::from(self)).expect("serializable")
    }
}

impl RankTriangle {
    pub fn from_json(text: &str, b: &ChainComplexFp) -> Result<Self> {
        let w: RankTriangleWire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        w.decode(b)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&RankTriangleWire::from(self)).expect("serializable")
    }
}
