use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::IntMatrix;
use crate::error::{Error, Result};

/// One matrix entry on the wire. Emitted as a decimal string; plain JSON
/// integers are accepted on input.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WireInt {
    Text(String),
    Number(i64),
}

impl WireInt {
    /// A JSON number when it fits in `i64`, a decimal string otherwise.
    pub fn compact(x: &BigInt) -> Self {
        match i64::try_from(x) {
            Ok(n) => WireInt::Number(n),
            Err(_) => WireInt::Text(x.to_string()),
        }
    }

    pub fn parse(&self) -> Result<BigInt> {
        match self {
            WireInt::Number(n) => Ok(BigInt::from(*n)),
            WireInt::Text(s) => {
                let t = s.trim();
                if t.is_empty() || t.len() > 4096 {
                    return Err(Error::Parse(format!("bad integer literal {s:?}")));
                }
                BigInt::from_str(t).map_err(|_| Error::Parse(format!("bad integer literal {s:?}")))
            }
        }
    }
}

/// `{"rows": r, "cols": c, "entries": [[row], ...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixWire {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<WireInt>>,
}

impl From<&IntMatrix> for MatrixWire {
    fn from(m: &IntMatrix) -> Self {
        MatrixWire {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.to_rows().into_iter().map(|r| r.into_iter().map(|x| WireInt::Text(x.to_string())).collect()).collect(),
        }
    }
}

impl TryFrom<MatrixWire> for IntMatrix {
    type Error = Error;

    fn try_from(w: MatrixWire) -> Result<Self> {
        if w.entries.len() != w.rows {
            return Err(Error::Parse(format!("matrix declares {} rows but lists {}", w.rows, w.entries.len())));
        }
        let total = w.rows.checked_mul(w.cols).ok_or_else(|| Error::Parse("matrix too large".into()))?;
        let mut entries = Vec::with_capacity(total.min(1 << 16));
        for (i, row) in w.entries.iter().enumerate() {
            if row.len() != w.cols {
                return Err(Error::Parse(format!("row {i} has {} entries, expected {}", row.len(), w.cols)));
            }
            for x in row {
                entries.push(x.parse()?);
            }
        }
        IntMatrix::new(w.rows, w.cols, entries)
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        IntMatrix::try_from(w).map_err(serde::de::Error::custom)
    }
}

impl IntMatrix {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }
}
