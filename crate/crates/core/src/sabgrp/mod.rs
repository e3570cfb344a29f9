//! Truncated simplicial abelian groups `A_0, ..., A_M` with face and
//! degeneracy homomorphisms, and the normalization machinery on them.

mod json;

pub use json::SimplicialGroupWire;

use num_bigint::BigInt;

use crate::abgrp::{intersection_of_kernels, AbHom, FpAbelianGroup, Subgroup};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::simplexcat::{f_vertex, BitVector, Generator, MonotoneMap};
use crate::sset::TruncSimplicialSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialAbGroup {
    levels: Vec<FpAbelianGroup>,
    /// `faces[n][i] = d_i : A_n -> A_(n-1)`; empty at `n = 0`.
    faces: Vec<Vec<AbHom>>,
    /// `degeneracies[n][i] = s_i : A_n -> A_(n+1)`; empty at the top level.
    degeneracies: Vec<Vec<AbHom>>,
}

/// A family `f_n : A_n -> A'_n` commuting with all structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub levels: Vec<AbHom>,
}

impl SimplicialAbGroup {
    /// Checks shapes, well-definedness and every simplicial identity.
    pub fn new(levels: Vec<FpAbelianGroup>, faces: Vec<Vec<AbHom>>, degeneracies: Vec<Vec<AbHom>>) -> Result<Self> {
        let a = Self::unchecked(levels, faces, degeneracies)?;
        for lv in a.faces.iter().chain(&a.degeneracies) {
            for h in lv {
                if !h.is_well_defined()? {
                    return Err(Error::IllDefined("structure map".into()));
                }
            }
        }
        a.check_identities().map_err(Error::Invalid)?;
        Ok(a)
    }

    /// Shape checks only.
    pub(crate) fn unchecked(levels: Vec<FpAbelianGroup>, faces: Vec<Vec<AbHom>>, degeneracies: Vec<Vec<AbHom>>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Shape("simplicial group needs level 0".into()));
        }
        let m = levels.len() - 1;
        if faces.len() != m + 1 || degeneracies.len() != m + 1 {
            return Err(Error::Shape("structure maps do not cover every level".into()));
        }
        for n in 0..=m {
            let nf = if n == 0 { 0 } else { n + 1 };
            let nd = if n < m { n + 1 } else { 0 };
            if faces[n].len() != nf || degeneracies[n].len() != nd {
                return Err(Error::Shape(format!("level {n} has {} faces and {} degeneracies", faces[n].len(), degeneracies[n].len())));
            }
            for d in &faces[n] {
                if d.source() != &levels[n] || d.target() != &levels[n - 1] {
                    return Err(Error::Presentation(format!("face at level {n} has the wrong source or target")));
                }
            }
            for s in &degeneracies[n] {
                if s.source() != &levels[n] || s.target() != &levels[n + 1] {
                    return Err(Error::Presentation(format!("degeneracy at level {n} has the wrong source or target")));
                }
            }
        }
        Ok(Self { levels, faces, degeneracies })
    }

    /// `G` in every level with identity structure maps.
    pub fn constant(g: &FpAbelianGroup, truncation: usize) -> Self {
        let id = AbHom::identity(g);
        Self {
            levels: vec![g.clone(); truncation + 1],
            faces: (0..=truncation).map(|n| vec![id.clone(); if n == 0 { 0 } else { n + 1 }]).collect(),
            degeneracies: (0..=truncation).map(|n| vec![id.clone(); if n < truncation { n + 1 } else { 0 }]).collect(),
        }
    }

    /// `Z[X]`: level `n` free on the `n`-simplices of `X`.
    pub fn free(x: &TruncSimplicialSet) -> Self {
        let m = x.truncation();
        let levels: Vec<FpAbelianGroup> = (0..=m).map(|n| FpAbelianGroup::free(x.count(n))).collect();
        let basis_map = |src: usize, tgt: usize, image: &dyn Fn(usize) -> usize| {
            let mut mat = IntMatrix::zeros(levels[tgt].generators(), levels[src].generators());
            for col in 0..levels[src].generators() {
                mat.set(image(col), col, BigInt::from(1));
            }
            AbHom::unchecked(levels[src].clone(), levels[tgt].clone(), mat)
        };
        let faces = (0..=m)
            .map(|n| if n == 0 { vec![] } else { (0..=n).map(|i| basis_map(n, n - 1, &|y| x.face(n, y, i))).collect() })
            .collect();
        let degeneracies = (0..=m)
            .map(|n| if n == m { vec![] } else { (0..=n).map(|i| basis_map(n, n + 1, &|y| x.degeneracy(n, y, i))).collect() })
            .collect();
        Self { levels, faces, degeneracies }
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &FpAbelianGroup {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[FpAbelianGroup] {
        &self.levels
    }

    pub fn face(&self, n: usize, i: usize) -> &AbHom {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &AbHom {
        &self.degeneracies[n][i]
    }

    pub fn faces(&self) -> &[Vec<AbHom>] {
        &self.faces
    }

    pub fn degeneracies(&self) -> &[Vec<AbHom>] {
        &self.degeneracies
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n > self.truncation() {
            return Err(Error::Truncation { level: n, truncation: self.truncation() });
        }
        Ok(())
    }

    /// Every simplicial identity, as equalities of maps.
    pub fn check_identities(&self) -> std::result::Result<(), String> {
        let m = self.truncation();
        let eq = |a: AbHom, b: &AbHom, what: String| match a.equals_as_map(b) {
            Ok(true) => Ok(()),
            Ok(false) => Err(what),
            Err(e) => Err(format!("{what}: {e}")),
        };
        let comp = |g: &AbHom, f: &AbHom| g.compose(f).map_err(|e| e.to_string());
        for n in 2..=m {
            for j in 1..=n {
                for i in 0..j {
                    eq(
                        comp(&self.faces[n - 1][i], &self.faces[n][j])?,
                        &comp(&self.faces[n - 1][j - 1], &self.faces[n][i])?,
                        format!("d_{i} d_{j} = d_{} d_{i} fails at level {n}", j - 1),
                    )?;
                }
            }
        }
        for n in 0..m {
            for j in 0..=n {
                let s = &self.degeneracies[n][j];
                for i in 0..=n + 1 {
                    let lhs = comp(&self.faces[n + 1][i], s)?;
                    let rhs = if i < j {
                        comp(&self.degeneracies[n - 1][j - 1], &self.faces[n][i])?
                    } else if i == j || i == j + 1 {
                        AbHom::identity(&self.levels[n])
                    } else {
                        comp(&self.degeneracies[n - 1][j], &self.faces[n][i - 1])?
                    };
                    eq(lhs, &rhs, format!("d_{i} s_{j} identity fails at level {n}"))?;
                }
            }
        }
        for n in 0..m.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    eq(
                        comp(&self.degeneracies[n + 1][i], &self.degeneracies[n][j])?,
                        &comp(&self.degeneracies[n + 1][j + 1], &self.degeneracies[n][i])?,
                        format!("s_{i} s_{j} = s_{} s_{i} fails at level {n}", j + 1),
                    )?;
                }
            }
        }
        Ok(())
    }

    /// `A(f) : A_n -> A_m` for `f : [m] -> [n]`.
    pub fn act(&self, f: &MonotoneMap) -> Result<AbHom> {
        let n = f.target_dim();
        self.check_level(n)?;
        self.check_level(f.source_dim())?;
        let mut acc = AbHom::identity(&self.levels[n]);
        for g in f.generator_word() {
            let h = match g {
                Generator::Face { i, n } => &self.faces[n][i],
                Generator::Degeneracy { i, n } => &self.degeneracies[n][i],
            };
            acc = h.compose(&acc)?;
        }
        Ok(acc)
    }

    /// `d = Σ (-1)^i d_i : A_n -> A_(n-1)`.
    pub fn moore_differential(&self, n: usize) -> Result<AbHom> {
        if n == 0 {
            return Err(Error::Index("Moore differential starts at level 1".into()));
        }
        self.check_level(n)?;
        let mut d = AbHom::zero(&self.levels[n], &self.levels[n - 1]);
        for (i, di) in self.faces[n].iter().enumerate() {
            d = if i % 2 == 0 { d.add(di)? } else { d.sub(di)? };
        }
        Ok(d)
    }

    /// `Ā_n = ∩_{i >= 1} ker d_i`; `Ā_0 = A_0`.
    pub fn normalized_subgroup(&self, n: usize) -> Result<Subgroup> {
        self.check_level(n)?;
        let fs: Vec<&AbHom> = if n == 0 { vec![] } else { self.faces[n][1..].iter().collect() };
        intersection_of_kernels(&self.levels[n], &fs)
    }

    /// `D_n`, generated by the images of all `s_i : A_(n-1) -> A_n`; zero at `n = 0`.
    pub fn degenerate_subgroup(&self, n: usize) -> Result<Subgroup> {
        self.check_level(n)?;
        if n == 0 {
            return AbHom::zero(&FpAbelianGroup::trivial(), &self.levels[0]).image();
        }
        let ss: Vec<&AbHom> = self.degeneracies[n - 1].iter().collect();
        AbHom::costack(&self.levels[n], &ss)?.image()
    }

    /// `π = Σ_j (-1)^(n-|j|) f_j^*`, an endomorphism of `A_n`.
    pub fn pi(&self, n: usize) -> Result<AbHom> {
        self.check_level(n)?;
        let mut acc = AbHom::zero(&self.levels[n], &self.levels[n]);
        for j in BitVector::all(n) {
            let term = self.act(&f_vertex(n, &j)?)?;
            acc = if (n - j.weight()) % 2 == 0 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        Ok(acc)
    }

    /// `π∘π = π`, `im π = Ā_n` and `ker π = D_n` at level `n`; `Err` names the
    /// first failure.
    pub fn check_pi(&self, n: usize) -> Result<std::result::Result<(), String>> {
        let p = self.pi(n)?;
        if !p.compose(&p)?.equals_as_map(&p)? {
            return Ok(Err(format!("π∘π != π at level {n}")));
        }
        if !p.image()?.same_as(&self.normalized_subgroup(n)?)? {
            return Ok(Err(format!("im π differs from the normalized subgroup at level {n}")));
        }
        if !p.kernel()?.same_as(&self.degenerate_subgroup(n)?)? {
            return Ok(Err(format!("ker π differs from the degenerate subgroup at level {n}")));
        }
        Ok(Ok(()))
    }

    /// `P(A)_n = A_(n+1)` with `d_i, s_i` for `i <= n`, truncated at `M - 1`.
    pub fn path_object(&self) -> Result<Self> {
        let m = self.truncation();
        if m == 0 {
            return Err(Error::Truncation { level: 1, truncation: 0 });
        }
        let levels = self.levels[1..].to_vec();
        let faces = (0..m).map(|n| if n == 0 { vec![] } else { self.faces[n + 1][..=n].to_vec() }).collect();
        let degeneracies = (0..m).map(|n| if n + 1 == m { vec![] } else { self.degeneracies[n + 1][..=n].to_vec() }).collect();
        Self::unchecked(levels, faces, degeneracies)
    }

    /// `d_(n+1) : P(A)_n -> A_n`, as a map into `A` cut down to `M - 1`.
    pub fn boundary_map(&self) -> Result<SimplicialMap> {
        if self.truncation() == 0 {
            return Err(Error::Truncation { level: 1, truncation: 0 });
        }
        let levels = (0..self.truncation()).map(|n| self.faces[n + 1][n + 1].clone()).collect();
        Ok(SimplicialMap { levels })
    }

    /// `Ω(A)`, the levelwise kernel of the boundary map, with its inclusion
    /// into `P(A)`.
    pub fn loop_object(&self) -> Result<(Self, SimplicialMap)> {
        let p = self.path_object()?;
        let dmap = self.boundary_map()?;
        let kernels: Vec<Subgroup> = dmap.levels.iter().map(AbHom::kernel).collect::<Result<_>>()?;
        let m = p.truncation();
        let mut faces = Vec::with_capacity(m + 1);
        let mut degeneracies = Vec::with_capacity(m + 1);
        for n in 0..=m {
            let mut fl = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    fl.push(p.faces[n][i].restrict(&kernels[n], &kernels[n - 1])?);
                }
            }
            let mut dl = Vec::new();
            if n < m {
                for i in 0..=n {
                    dl.push(p.degeneracies[n][i].restrict(&kernels[n], &kernels[n + 1])?);
                }
            }
            faces.push(fl);
            degeneracies.push(dl);
        }
        let levels = kernels.iter().map(|k| k.group.clone()).collect();
        let inclusion = SimplicialMap { levels: kernels.into_iter().map(|k| k.inclusion).collect() };
        Ok((Self::unchecked(levels, faces, degeneracies)?, inclusion))
    }

    /// The same object cut down to truncation `m`.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        self.check_level(m)?;
        let mut degeneracies = self.degeneracies[..=m].to_vec();
        degeneracies[m].clear();
        Self::unchecked(self.levels[..=m].to_vec(), self.faces[..=m].to_vec(), degeneracies)
    }

    pub fn direct_sum(parts: &[&SimplicialAbGroup]) -> Result<Self> {
        let m = parts.first().map(|a| a.truncation()).ok_or_else(|| Error::Shape("empty direct sum".into()))?;
        if parts.iter().any(|a| a.truncation() != m) {
            return Err(Error::Shape("direct sum of different truncations".into()));
        }
        let levels = (0..=m).map(|n| FpAbelianGroup::direct_sum(&parts.iter().map(|a| &a.levels[n]).collect::<Vec<_>>())).collect();
        let sum = |pick: &dyn Fn(&SimplicialAbGroup) -> &AbHom| AbHom::direct_sum(&parts.iter().map(|a| pick(a)).collect::<Vec<_>>());
        let faces = (0..=m).map(|n| (0..self_faces(n)).map(|i| sum(&|a| &a.faces[n][i])).collect()).collect();
        let degeneracies = (0..=m).map(|n| (0..if n < m { n + 1 } else { 0 }).map(|i| sum(&|a| &a.degeneracies[n][i])).collect()).collect();
        Self::unchecked(levels, faces, degeneracies)
    }

    /// `A ⊗ Z/k`, by adding `k` times every generator as a relation.
    pub fn tensor_mod(&self, k: i64) -> Result<Self> {
        let levels: Vec<FpAbelianGroup> = self
            .levels
            .iter()
            .map(|g| {
                let extra = IntMatrix::identity(g.generators()).scale(&BigInt::from(k));
                FpAbelianGroup::new(g.generators(), g.relations().hstack(&extra)?)
            })
            .collect::<Result<_>>()?;
        self.relabel(&levels)
    }

    /// Same matrices over new level presentations on the same generators.
    fn relabel(&self, levels: &[FpAbelianGroup]) -> Result<Self> {
        let re = |h: &AbHom, s: usize, t: usize| AbHom::new(levels[s].clone(), levels[t].clone(), h.matrix().clone());
        let m = self.truncation();
        let faces = (0..=m).map(|n| self.faces[n].iter().map(|h| re(h, n, n - 1)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        let degeneracies =
            (0..=m).map(|n| self.degeneracies[n].iter().map(|h| re(h, n, n + 1)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        Self::unchecked(levels.to_vec(), faces, degeneracies)
    }

    /// Transports the structure along isomorphisms `φ_n : A_n -> B_n`
    /// with inverses `ψ_n`; returns the new object and `φ` as a simplicial map.
    pub fn transport(&self, phi: &[AbHom], psi: &[AbHom]) -> Result<(Self, SimplicialMap)> {
        let m = self.truncation();
        if phi.len() != m + 1 || psi.len() != m + 1 {
            return Err(Error::Shape("one isomorphism per level".into()));
        }
        let conj = |h: &AbHom, s: usize, t: usize| phi[t].compose(&h.compose(&psi[s])?);
        let faces = (0..=m).map(|n| self.faces[n].iter().map(|h| conj(h, n, n - 1)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        let degeneracies =
            (0..=m).map(|n| self.degeneracies[n].iter().map(|h| conj(h, n, n + 1)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
        let levels = phi.iter().map(|h| h.target().clone()).collect();
        Ok((Self::unchecked(levels, faces, degeneracies)?, SimplicialMap { levels: phi.to_vec() }))
    }
}

fn self_faces(n: usize) -> usize {
    if n == 0 {
        0
    } else {
        n + 1
    }
}

impl SimplicialMap {
    pub fn identity(a: &SimplicialAbGroup) -> Self {
        Self { levels: a.levels.iter().map(AbHom::identity).collect() }
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    /// Commutation with every face and degeneracy up to the common truncation.
    pub fn check(&self, source: &SimplicialAbGroup, target: &SimplicialAbGroup) -> Result<std::result::Result<(), String>> {
        let m = self.truncation();
        if source.truncation() < m || target.truncation() < m {
            return Err(Error::Truncation { level: m, truncation: source.truncation().min(target.truncation()) });
        }
        for n in 0..=m {
            let f = &self.levels[n];
            if f.source() != source.level(n) || f.target() != target.level(n) {
                return Err(Error::Presentation(format!("level {n} map has the wrong source or target")));
            }
            if n > 0 {
                for i in 0..=n {
                    let lhs = self.levels[n - 1].compose(source.face(n, i))?;
                    let rhs = target.face(n, i).compose(f)?;
                    if !lhs.equals_as_map(&rhs)? {
                        return Ok(Err(format!("does not commute with d_{i} at level {n}")));
                    }
                }
            }
            if n < m {
                for i in 0..=n {
                    let lhs = self.levels[n + 1].compose(source.degeneracy(n, i))?;
                    let rhs = target.degeneracy(n, i).compose(f)?;
                    if !lhs.equals_as_map(&rhs)? {
                        return Ok(Err(format!("does not commute with s_{i} at level {n}")));
                    }
                }
            }
        }
        Ok(Ok(()))
    }

    /// `g ∘ self`
    pub fn then(&self, g: &SimplicialMap) -> Result<SimplicialMap> {
        let levels = self.levels.iter().zip(&g.levels).map(|(f, g)| g.compose(f)).collect::<Result<_>>()?;
        Ok(SimplicialMap { levels })
    }

    /// The first level that is not an isomorphism, if any.
    pub fn first_non_iso(&self) -> Result<Option<usize>> {
        for (n, f) in self.levels.iter().enumerate() {
            if !f.is_isomorphism()? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests;
