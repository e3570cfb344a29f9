use std::collections::HashMap;

use num_bigint::BigInt;

use super::{ChainComplexFp, ChainMap};
use crate::abgrp::{intersection_of_kernels, AbHom, FpAbelianGroup, Subgroup};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::sabgrp::{SimplicialAbGroup, SimplicialMap};
use crate::simplexcat::MonotoneMap;

/// `N(B)` with each level presented as a subgroup of `⊕_σ B_k` over the
/// injective `σ : [k] -> [n]`.
#[derive(Clone, Debug)]
pub struct Nerve {
    pub group: SimplicialAbGroup,
    /// `⊕_σ B_(dim σ)` at each level.
    pub ambient: Vec<FpAbelianGroup>,
    /// `N(B)_n -> ⊕_σ B_(dim σ)`.
    pub inclusions: Vec<AbHom>,
    index: Vec<Vec<MonotoneMap>>,
    position: Vec<HashMap<MonotoneMap, usize>>,
    offsets: Vec<Vec<usize>>,
    complex: ChainComplexFp,
}

impl Nerve {
    /// The injective `σ` indexing level `n`, by dimension then values.
    pub fn index(&self, n: usize) -> &[MonotoneMap] {
        &self.index[n]
    }

    /// `⊕_σ B_(dim σ) -> B_n`, reading the `σ = id` coordinate.
    pub fn top_projection(&self, n: usize) -> Result<AbHom> {
        let id = self.position[n][&MonotoneMap::identity(n)];
        self.coordinate(n, id)
    }

    /// `⊕_σ B_(dim σ) -> B_(dim σ)` for the `p`-th index.
    pub fn coordinate(&self, n: usize, p: usize) -> Result<AbHom> {
        let k = self.index[n][p].source_dim();
        let gk = self.complex.level(k);
        let mut mat = IntMatrix::zeros(gk.generators(), self.ambient[n].generators());
        for g in 0..gk.generators() {
            mat.set(g, self.offsets[n][p] + g, BigInt::from(1));
        }
        Ok(AbHom::unchecked(self.ambient[n].clone(), gk.clone(), mat))
    }

    /// The ambient map `{b_σ} ↦ {b_(α∘τ)}_τ`, zero where `α∘τ` is not injective.
    fn ambient_action(&self, alpha: &MonotoneMap) -> AbHom {
        let (m, n) = (alpha.source_dim(), alpha.target_dim());
        let mut mat = IntMatrix::zeros(self.ambient[m].generators(), self.ambient[n].generators());
        for (q, tau) in self.index[m].iter().enumerate() {
            let image = alpha.compose(tau).expect("composable");
            if !image.is_injective() {
                continue;
            }
            let p = self.position[n][&image];
            for g in 0..self.complex.level(tau.source_dim()).generators() {
                mat.set(self.offsets[m][q] + g, self.offsets[n][p] + g, BigInt::from(1));
            }
        }
        AbHom::unchecked(self.ambient[n].clone(), self.ambient[m].clone(), mat)
    }
}

/// `N(B)` up to level `m`: level `n` is cut out of `⊕_σ B_k` by
/// `d b_σ = Σ (-1)^i b_(σ∘δ_i)`.
pub fn dold_kan_nerve(b: &ChainComplexFp, m: usize) -> Result<Nerve> {
    if m > b.truncation() {
        return Err(Error::Truncation { level: m, truncation: b.truncation() });
    }
    let mut index = Vec::with_capacity(m + 1);
    let mut position = Vec::with_capacity(m + 1);
    let mut offsets = Vec::with_capacity(m + 1);
    let mut ambient = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let idx: Vec<MonotoneMap> = (0..=n).flat_map(|k| MonotoneMap::all_injective(k, n)).collect();
        let pos: HashMap<MonotoneMap, usize> = idx.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let mut off = Vec::with_capacity(idx.len());
        let mut acc = 0;
        for s in &idx {
            off.push(acc);
            acc += b.level(s.source_dim()).generators();
        }
        let groups: Vec<&FpAbelianGroup> = idx.iter().map(|s| b.level(s.source_dim())).collect();
        ambient.push(FpAbelianGroup::direct_sum(&groups));
        index.push(idx);
        position.push(pos);
        offsets.push(off);
    }
    let mut subgroups: Vec<Subgroup> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let eq = equations(b, &index[n], &position[n], &offsets[n], &ambient[n])?;
        subgroups.push(intersection_of_kernels(&ambient[n], &eq.iter().collect::<Vec<_>>())?);
    }
    let mut nerve = Nerve {
        group: SimplicialAbGroup::constant(&FpAbelianGroup::trivial(), 0),
        ambient,
        inclusions: subgroups.iter().map(|s| s.inclusion.clone()).collect(),
        index,
        position,
        offsets,
        complex: b.clone(),
    };
    // Everything landing in level t is factored through subgroups[t] in one batch.
    let mut into: Vec<Vec<AbHom>> = vec![Vec::new(); m + 1];
    for n in 1..=m {
        for i in 0..=n {
            into[n - 1].push(nerve.ambient_action(&MonotoneMap::face(i, n)?).compose(&subgroups[n].inclusion)?);
        }
    }
    for n in 0..m {
        for i in 0..=n {
            into[n + 1].push(nerve.ambient_action(&MonotoneMap::degeneracy(i, n)?).compose(&subgroups[n].inclusion)?);
        }
    }
    let mut factored: Vec<std::vec::IntoIter<AbHom>> =
        into.iter().zip(&subgroups).map(|(fs, s)| s.factor_all(fs).map(Vec::into_iter)).collect::<Result<_>>()?;
    let mut faces = Vec::with_capacity(m + 1);
    let mut degeneracies = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let fl: Vec<AbHom> = if n > 0 { factored[n - 1].by_ref().take(n + 1).collect() } else { Vec::new() };
        faces.push(fl);
    }
    for n in 0..=m {
        let dl: Vec<AbHom> = if n < m { factored[n + 1].by_ref().take(n + 1).collect() } else { Vec::new() };
        degeneracies.push(dl);
    }
    nerve.group = SimplicialAbGroup::unchecked(subgroups.into_iter().map(|s| s.group).collect(), faces, degeneracies)?;
    Ok(nerve)
}

/// One equation map `⊕_τ B_(dim τ) -> B_(k-1)` per `σ : [k] -> [n]` with `k >= 1`.
fn equations(
    b: &ChainComplexFp,
    index: &[MonotoneMap],
    position: &HashMap<MonotoneMap, usize>,
    offsets: &[usize],
    ambient: &FpAbelianGroup,
) -> Result<Vec<AbHom>> {
    let mut out = Vec::new();
    for (p, sigma) in index.iter().enumerate().filter(|(_, s)| s.source_dim() >= 1) {
        let k = sigma.source_dim();
        let target = b.level(k - 1);
        let mut mat = IntMatrix::zeros(target.generators(), ambient.generators());
        let d = b.d(k)?.matrix();
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                mat.set(r, offsets[p] + c, d.get(r, c).clone());
            }
        }
        for i in 0..=k {
            let face = sigma.compose(&MonotoneMap::face(i, k)?)?;
            let q = position[&face];
            let sign = if i % 2 == 0 { -1 } else { 1 };
            for g in 0..target.generators() {
                let cur = mat.get(g, offsets[q] + g).clone();
                mat.set(g, offsets[q] + g, cur + sign);
            }
        }
        out.push(AbHom::unchecked(ambient.clone(), target.clone(), mat));
    }
    Ok(out)
}

/// `N(g) : N(B) -> N(B')` for a chain map `g`, on nerves of equal height.
pub fn nerve_map(g: &ChainMap, source: &Nerve, target: &Nerve) -> Result<SimplicialMap> {
    let m = source.group.truncation();
    if target.group.truncation() != m {
        return Err(Error::Shape("nerves of different heights".into()));
    }
    let mut levels = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let blocks: Vec<&AbHom> = source.index[n].iter().map(|s| &g.levels[s.source_dim()]).collect();
        let amb = AbHom::direct_sum(&blocks);
        let s = Subgroup { group: source.group.level(n).clone(), inclusion: source.inclusions[n].clone() };
        let t = Subgroup { group: target.group.level(n).clone(), inclusion: target.inclusions[n].clone() };
        levels.push(amb.restrict(&s, &t)?);
    }
    Ok(SimplicialMap { levels })
}
