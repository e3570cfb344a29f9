use serde::{Deserialize, Serialize};

use crate::abgrp::{AbHom, FpAbelianGroup, NormalForm};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;

/// A connective chain complex `B_0 <- B_1 <- ... <- B_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexFp {
    levels: Vec<FpAbelianGroup>,
    /// `diffs[k - 1] = d_k : B_k -> B_(k-1)`.
    diffs: Vec<AbHom>,
}

/// A family `g_k : B_k -> B'_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub levels: Vec<AbHom>,
}

impl ChainComplexFp {
    /// Checks shapes and `d_k ∘ d_(k+1) = 0`.
    pub fn new(levels: Vec<FpAbelianGroup>, diffs: Vec<AbHom>) -> Result<Self> {
        let c = Self::unchecked(levels, diffs)?;
        for d in &c.diffs {
            if !d.is_well_defined()? {
                return Err(Error::IllDefined("differential".into()));
            }
        }
        for k in 1..c.truncation() {
            if !c.d(k)?.compose(c.d(k + 1)?)?.is_zero()? {
                return Err(Error::Invalid(format!("d_{k} ∘ d_{} is not zero", k + 1)));
            }
        }
        Ok(c)
    }

    pub(crate) fn unchecked(levels: Vec<FpAbelianGroup>, diffs: Vec<AbHom>) -> Result<Self> {
        if levels.is_empty() || diffs.len() + 1 != levels.len() {
            return Err(Error::Shape(format!("{} levels need {} differentials", levels.len(), levels.len().saturating_sub(1))));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.source() != &levels[k + 1] || d.target() != &levels[k] {
                return Err(Error::Presentation(format!("d_{} has the wrong source or target", k + 1)));
            }
        }
        Ok(Self { levels, diffs })
    }

    /// `G` placed in degree `k`, zero elsewhere, truncated at `m`.
    pub fn concentrated(g: &FpAbelianGroup, k: usize, m: usize) -> Self {
        let levels: Vec<FpAbelianGroup> = (0..=m).map(|i| if i == k { g.clone() } else { FpAbelianGroup::trivial() }).collect();
        let diffs = (1..=m).map(|i| AbHom::zero(&levels[i], &levels[i - 1])).collect();
        Self { levels, diffs }
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, k: usize) -> &FpAbelianGroup {
        &self.levels[k]
    }

    pub fn levels(&self) -> &[FpAbelianGroup] {
        &self.levels
    }

    pub fn d(&self, k: usize) -> Result<&AbHom> {
        if k == 0 || k > self.truncation() {
            return Err(Error::Index(format!("no differential d_{k} at truncation {}", self.truncation())));
        }
        Ok(&self.diffs[k - 1])
    }

    pub fn differentials(&self) -> &[AbHom] {
        &self.diffs
    }

    /// `Ω(B)`: drop `B_0` and shift down.
    pub fn omega(&self) -> Result<Self> {
        if self.truncation() == 0 {
            return Err(Error::Truncation { level: 1, truncation: 0 });
        }
        Self::unchecked(self.levels[1..].to_vec(), self.diffs[1..].to_vec())
    }

    /// The complex cut down to truncation `m`, padding with zero groups.
    pub fn resize(&self, m: usize) -> Self {
        let mut levels: Vec<FpAbelianGroup> = self.levels.iter().take(m + 1).cloned().collect();
        while levels.len() <= m {
            levels.push(FpAbelianGroup::trivial());
        }
        let diffs = (1..=m)
            .map(|k| if k <= self.truncation() { self.diffs[k - 1].clone() } else { AbHom::zero(&levels[k], &levels[k - 1]) })
            .collect();
        Self { levels, diffs }
    }

    /// `H_k = ker d_k / im d_(k+1)` for `k < M`; at `k = M` only cycles are known.
    pub fn homology(&self, k: usize) -> Result<NormalForm> {
        if k >= self.truncation() {
            return Err(Error::Truncation { level: k + 1, truncation: self.truncation() });
        }
        let cycles = if k == 0 { self.levels[0].whole() } else { self.d(k)?.kernel()? };
        let bounds = self.d(k + 1)?.factor_through(&cycles.inclusion)?;
        Ok(bounds.cokernel()?.group.normal_form())
    }

    pub fn direct_sum(parts: &[&ChainComplexFp]) -> Result<Self> {
        let m = parts.first().map(|b| b.truncation()).ok_or_else(|| Error::Shape("empty direct sum".into()))?;
        if parts.iter().any(|b| b.truncation() != m) {
            return Err(Error::Shape("direct sum of different truncations".into()));
        }
        let levels = (0..=m).map(|k| FpAbelianGroup::direct_sum(&parts.iter().map(|b| &b.levels[k]).collect::<Vec<_>>())).collect();
        let diffs = (0..m).map(|k| AbHom::direct_sum(&parts.iter().map(|b| &b.diffs[k]).collect::<Vec<_>>())).collect();
        Self::unchecked(levels, diffs)
    }

    /// Transports along level isomorphisms `φ_k` with inverses `ψ_k`.
    pub fn transport(&self, phi: &[AbHom], psi: &[AbHom]) -> Result<(Self, ChainMap)> {
        let m = self.truncation();
        if phi.len() != m + 1 || psi.len() != m + 1 {
            return Err(Error::Shape("one isomorphism per level".into()));
        }
        let diffs = (1..=m).map(|k| phi[k - 1].compose(&self.diffs[k - 1].compose(&psi[k])?)).collect::<Result<_>>()?;
        let levels = phi.iter().map(|h| h.target().clone()).collect();
        Ok((Self::unchecked(levels, diffs)?, ChainMap { levels: phi.to_vec() }))
    }
}

impl ChainMap {
    pub fn identity(b: &ChainComplexFp) -> Self {
        Self { levels: b.levels.iter().map(AbHom::identity).collect() }
    }

    /// Commutation with the differentials.
    pub fn check(&self, source: &ChainComplexFp, target: &ChainComplexFp) -> Result<std::result::Result<(), String>> {
        let m = self.levels.len() - 1;
        if source.truncation() < m || target.truncation() < m {
            return Err(Error::Truncation { level: m, truncation: source.truncation().min(target.truncation()) });
        }
        for k in 0..=m {
            if self.levels[k].source() != source.level(k) || self.levels[k].target() != target.level(k) {
                return Err(Error::Presentation(format!("level {k} map has the wrong source or target")));
            }
            if k > 0 {
                let lhs = self.levels[k - 1].compose(source.d(k)?)?;
                let rhs = target.d(k)?.compose(&self.levels[k])?;
                if !lhs.equals_as_map(&rhs)? {
                    return Ok(Err(format!("does not commute with d_{k}")));
                }
            }
        }
        Ok(Ok(()))
    }

    pub fn first_non_iso(&self) -> Result<Option<usize>> {
        for (k, f) in self.levels.iter().enumerate() {
            if !f.is_isomorphism()? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    /// `g ∘ self`
    pub fn then(&self, g: &ChainMap) -> Result<ChainMap> {
        Ok(ChainMap { levels: self.levels.iter().zip(&g.levels).map(|(f, g)| g.compose(f)).collect::<Result<_>>()? })
    }
}

/// `{"truncation": M, "levels": [...], "differentials": [d_1, ..., d_M]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainComplexWire {
    pub truncation: usize,
    pub levels: Vec<FpAbelianGroup>,
    pub differentials: Vec<IntMatrix>,
}

impl From<&ChainComplexFp> for ChainComplexWire {
    fn from(b: &ChainComplexFp) -> Self {
        ChainComplexWire { truncation: b.truncation(), levels: b.levels.clone(), differentials: b.diffs.iter().map(|d| d.matrix().clone()).collect() }
    }
}

impl TryFrom<ChainComplexWire> for ChainComplexFp {
    type Error = Error;
    fn try_from(w: ChainComplexWire) -> Result<Self> {
        if w.levels.len() != w.truncation + 1 || w.differentials.len() != w.truncation {
            return Err(Error::Shape(format!("truncation {} needs {} levels and {} differentials", w.truncation, w.truncation + 1, w.truncation)));
        }
        let diffs = w
            .differentials
            .iter()
            .enumerate()
            .map(|(k, m)| AbHom::new(w.levels[k + 1].clone(), w.levels[k].clone(), m.clone()))
            .collect::<Result<_>>()?;
        ChainComplexFp::new(w.levels, diffs)
    }
}

impl Serialize for ChainComplexFp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChainComplexWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ChainComplexFp {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        ChainComplexFp::try_from(ChainComplexWire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl ChainComplexFp {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("complex serializes")
    }
}
