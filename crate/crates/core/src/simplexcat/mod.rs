//! Monotone maps `[m] -> [n]`, the generators of the simplex category, and
//! the cube vertex maps used by the idempotent `π` and the nerve conditions.

mod parse;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly increasing map `[m] -> [n]`, stored as its list of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MapWire", into = "MapWire")]
pub struct MonotoneMap {
    target: usize,
    values: Vec<usize>,
}

/// `{"values": [v_0, ..., v_m], "target": n}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapWire {
    pub values: Vec<usize>,
    pub target: usize,
}

impl TryFrom<MapWire> for MonotoneMap {
    type Error = Error;
    fn try_from(w: MapWire) -> Result<Self> {
        MonotoneMap::new(w.values, w.target)
    }
}

impl From<MonotoneMap> for MapWire {
    fn from(f: MonotoneMap) -> Self {
        MapWire { values: f.values, target: f.target }
    }
}

/// One factor of a face/degeneracy word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `δ_i : [n-1] -> [n]`
    Face { i: usize, n: usize },
    /// `σ_i : [n+1] -> [n]`
    Degeneracy { i: usize, n: usize },
}

impl Generator {
    pub fn to_map(self) -> MonotoneMap {
        match self {
            Generator::Face { i, n } => MonotoneMap::face(i, n).expect("valid face"),
            Generator::Degeneracy { i, n } => MonotoneMap::degeneracy(i, n).expect("valid degeneracy"),
        }
    }
}

impl MonotoneMap {
    pub fn new(values: Vec<usize>, target: usize) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Invalid("monotone map needs a nonempty source".into()));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!("values {values:?} are not weakly increasing")));
        }
        if let Some(v) = values.iter().find(|&&v| v > target) {
            return Err(Error::Index(format!("value {v} outside [{target}]")));
        }
        Ok(Self { target, values })
    }

    pub fn identity(n: usize) -> Self {
        Self { target: n, values: (0..=n).collect() }
    }

    /// `δ_i : [n-1] -> [n]`, the injection skipping `i`.
    pub fn face(i: usize, n: usize) -> Result<Self> {
        if n == 0 || i > n {
            return Err(Error::Index(format!("face δ_{i} into [{n}]")));
        }
        Ok(Self { target: n, values: (0..n).map(|x| if x < i { x } else { x + 1 }).collect() })
    }

    /// `σ_i : [n+1] -> [n]`, the surjection hitting `i` twice.
    pub fn degeneracy(i: usize, n: usize) -> Result<Self> {
        if i > n {
            return Err(Error::Index(format!("degeneracy σ_{i} onto [{n}]")));
        }
        Ok(Self { target: n, values: (0..=n + 1).map(|x| if x <= i { x } else { x - 1 }).collect() })
    }

    /// The constant map `[m] -> [n]` at `v`.
    pub fn constant(m: usize, n: usize, v: usize) -> Result<Self> {
        Self::new(vec![v; m + 1], n)
    }

    /// The inclusion of a nonempty subset of `[n]`, given as a bitmask.
    pub fn from_subset(mask: u64, n: usize) -> Result<Self> {
        let values: Vec<usize> = (0..=n).filter(|&i| mask >> i & 1 == 1).collect();
        if mask >> (n + 1) != 0 {
            return Err(Error::Index(format!("subset {mask:#b} not inside [{n}]")));
        }
        Self::new(values, n)
    }

    /// `m` for a map out of `[m]`.
    pub fn source_dim(&self) -> usize {
        self.values.len() - 1
    }

    /// `n` for a map into `[n]`.
    pub fn target_dim(&self) -> usize {
        self.target
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// Image as a bitmask over `[n]`.
    pub fn image_mask(&self) -> u64 {
        self.values.iter().fold(0, |acc, &v| acc | 1 << v)
    }

    /// `self ∘ g`
    pub fn compose(&self, g: &MonotoneMap) -> Result<MonotoneMap> {
        if g.target != self.source_dim() {
            return Err(Error::Shape(format!(
                "cannot compose {} after {}: [{}] vs [{}]",
                self,
                g,
                g.target,
                self.source_dim()
            )));
        }
        Ok(Self { target: self.target, values: g.values.iter().map(|&v| self.values[v]).collect() })
    }

    pub fn is_identity(&self) -> bool {
        self.target == self.source_dim() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0 && self.values[self.source_dim()] == self.target && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `self = mono ∘ epi` with `epi` surjective and `mono` injective.
    pub fn epi_mono_factorize(&self) -> (MonotoneMap, MonotoneMap) {
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let k = image.len() - 1;
        let epi = self.values.iter().map(|v| image.binary_search(v).expect("value in image")).collect();
        (Self { target: k, values: epi }, Self { target: self.target, values: image })
    }

    /// Generators whose composite, read left to right as `g_1 ∘ g_2 ∘ ...`,
    /// equals `self`: faces for the missing values (largest first), then
    /// degeneracies for the repeated positions (smallest first).
    pub fn generator_word(&self) -> Vec<Generator> {
        let (epi, mono) = self.epi_mono_factorize();
        let mut word = Vec::new();
        let missing: Vec<usize> = (0..=mono.target).filter(|v| !mono.values.contains(v)).collect();
        let mut dim = mono.target;
        for &c in missing.iter().rev() {
            word.push(Generator::Face { i: c, n: dim });
            dim -= 1;
        }
        let repeats: Vec<usize> = (0..epi.source_dim()).filter(|&j| epi.values[j] == epi.values[j + 1]).collect();
        let mut dim = epi.target;
        for &j in &repeats {
            word.push(Generator::Degeneracy { i: j, n: dim });
            dim += 1;
        }
        word
    }

    /// `[m] -> [n]` monotone maps in lexicographic order of values.
    pub fn all(m: usize, n: usize) -> Vec<MonotoneMap> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(m + 1);
        fn go(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<MonotoneMap>) {
            if cur.len() == m + 1 {
                out.push(MonotoneMap { target: n, values: cur.clone() });
                return;
            }
            for v in lo..=n {
                cur.push(v);
                go(m, n, v, cur, out);
                cur.pop();
            }
        }
        go(m, n, 0, &mut cur, &mut out);
        out
    }

    /// Injective maps `[k] -> [n]`, lexicographic.
    pub fn all_injective(k: usize, n: usize) -> Vec<MonotoneMap> {
        Self::all(k, n).into_iter().filter(MonotoneMap::is_injective).collect()
    }

    /// Digits of the values, e.g. `002`; the labels used for cube vertices.
    pub fn label(&self) -> String {
        self.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(if self.target >= 10 { "," } else { "" })
    }
}

impl fmt::Display for MonotoneMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({}):[{}]→[{}]", vals.join(","), self.source_dim(), self.target)
    }
}

/// A vertex `(j_1, ..., j_k)` of the cube `{0,1}^k`. `bits[0]` is `j_1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BitVector {
    pub bits: Vec<bool>,
}

impl BitVector {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Self { bits: bits.iter().map(|&b| b != 0).collect() }
    }

    /// The vertex with index `Σ j_i 2^(i-1)`.
    pub fn from_index(k: usize, index: usize) -> Self {
        Self { bits: (0..k).map(|i| index >> i & 1 == 1).collect() }
    }

    pub fn index(&self) -> usize {
        self.bits.iter().enumerate().map(|(i, &b)| (b as usize) << i).sum()
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// `|j|`, the number of ones.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// `j_i` for `1 <= i <= k`.
    pub fn j(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    /// All `2^k` vertices, by index.
    pub fn all(k: usize) -> Vec<BitVector> {
        (0..1usize << k).map(|x| Self::from_index(k, x)).collect()
    }

    pub fn label(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// `f(j) : [k] -> [k]`, `i ↦ i - 1 + j_i` with `j_0 = 1`.
pub fn f_vertex(k: usize, j: &BitVector) -> Result<MonotoneMap> {
    check_len(k, j)?;
    let values = (0..=k).map(|i| if i == 0 { 0 } else { i - 1 + j.j(i) as usize }).collect();
    Ok(MonotoneMap { target: k, values })
}

/// `b(j) : [k-1] -> [k]`, `i ↦ i + j_(i+1)`.
pub fn b_vertex(k: usize, j: &BitVector) -> Result<MonotoneMap> {
    check_len(k, j)?;
    if k == 0 {
        return Err(Error::Index("b cube needs k >= 1".into()));
    }
    let values = (0..k).map(|i| i + j.j(i + 1) as usize).collect();
    Ok(MonotoneMap { target: k, values })
}

/// `q(j_0, j)`: `b(j)` when `j_0 = 0`, `f(j)` when `j_0 = 1`.
pub fn q_vertex(k: usize, j0: bool, j: &BitVector) -> Result<MonotoneMap> {
    if j0 {
        f_vertex(k, j)
    } else {
        b_vertex(k, j)
    }
}

fn check_len(k: usize, j: &BitVector) -> Result<()> {
    if j.len() != k {
        return Err(Error::Shape(format!("bit vector of length {} for a {k}-cube", j.len())));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
