//! The normalized chains functor `C`, the nerve `N`, the unit and counit
//! between them, and the `P`/`Ω` ladder used to show `C` is conservative.

mod complex;
mod nerve;

pub use complex::{ChainComplexFp, ChainComplexWire, ChainMap};
pub use nerve::{dold_kan_nerve, nerve_map, Nerve};

use serde::Serialize;

use crate::abgrp::{AbHom, Subgroup};
use crate::error::{Error, Result};
use crate::sabgrp::{SimplicialAbGroup, SimplicialMap};

/// `C(A)` together with the inclusions `Ā_n -> A_n`.
#[derive(Clone, Debug)]
pub struct NormalizedChains {
    pub complex: ChainComplexFp,
    pub inclusions: Vec<AbHom>,
}

/// `C(A)`: levels `Ā_n`, differential `d_0` restricted.
pub fn normalized_chains(a: &SimplicialAbGroup) -> Result<NormalizedChains> {
    let subs: Vec<Subgroup> = (0..=a.truncation()).map(|n| a.normalized_subgroup(n)).collect::<Result<_>>()?;
    let diffs = (1..=a.truncation()).map(|n| a.face(n, 0).restrict(&subs[n], &subs[n - 1])).collect::<Result<Vec<_>>>()?;
    let levels = subs.iter().map(|s| s.group.clone()).collect();
    Ok(NormalizedChains { complex: ChainComplexFp::unchecked(levels, diffs)?, inclusions: subs.into_iter().map(|s| s.inclusion).collect() })
}

/// `(A_•, Σ (-1)^i d_i)`.
pub fn moore_complex(a: &SimplicialAbGroup) -> Result<ChainComplexFp> {
    let diffs = (1..=a.truncation()).map(|n| a.moore_differential(n)).collect::<Result<_>>()?;
    ChainComplexFp::unchecked(a.levels().to_vec(), diffs)
}

/// `(A, d) ≅ (Ā, d_0) ⊕ (D, d)`, with inclusions and projections.
#[derive(Clone, Debug)]
pub struct SplitDecomposition {
    pub moore: ChainComplexFp,
    pub normalized: ChainComplexFp,
    pub degenerate: ChainComplexFp,
    pub normalized_inclusion: ChainMap,
    pub degenerate_inclusion: ChainMap,
    /// Levelwise `π` corestricted to `Ā_n`.
    pub normalized_projection: ChainMap,
    /// Levelwise `1 - π` corestricted to `D_n`.
    pub degenerate_projection: ChainMap,
}

pub fn split_decomposition(a: &SimplicialAbGroup) -> Result<SplitDecomposition> {
    let moore = moore_complex(a)?;
    let m = a.truncation();
    let norm: Vec<Subgroup> = (0..=m).map(|n| a.normalized_subgroup(n)).collect::<Result<_>>()?;
    let deg: Vec<Subgroup> = (0..=m).map(|n| a.degenerate_subgroup(n)).collect::<Result<_>>()?;
    let sub_complex = |subs: &[Subgroup]| -> Result<ChainComplexFp> {
        let diffs = (1..=m).map(|n| moore.d(n)?.restrict(&subs[n], &subs[n - 1])).collect::<Result<Vec<_>>>()?;
        ChainComplexFp::unchecked(subs.iter().map(|s| s.group.clone()).collect(), diffs)
    };
    let normalized = sub_complex(&norm)?;
    let degenerate = sub_complex(&deg)?;
    let mut p_norm = Vec::new();
    let mut p_deg = Vec::new();
    for n in 0..=m {
        let pi = a.pi(n)?;
        let rest = AbHom::identity(a.level(n)).sub(&pi)?;
        p_norm.push(pi.factor_through(&norm[n].inclusion)?);
        p_deg.push(rest.factor_through(&deg[n].inclusion)?);
    }
    Ok(SplitDecomposition {
        moore,
        normalized,
        degenerate,
        normalized_inclusion: ChainMap { levels: norm.into_iter().map(|s| s.inclusion).collect() },
        degenerate_inclusion: ChainMap { levels: deg.into_iter().map(|s| s.inclusion).collect() },
        normalized_projection: ChainMap { levels: p_norm },
        degenerate_projection: ChainMap { levels: p_deg },
    })
}

impl SplitDecomposition {
    /// All chain-map and splitting identities, exactly; `Err` names the first failure.
    pub fn verify(&self) -> Result<std::result::Result<(), String>> {
        let checks = [
            (&self.normalized_inclusion, &self.normalized, &self.moore, "normalized inclusion"),
            (&self.degenerate_inclusion, &self.degenerate, &self.moore, "degenerate inclusion"),
            (&self.normalized_projection, &self.moore, &self.normalized, "normalized projection"),
            (&self.degenerate_projection, &self.moore, &self.degenerate, "degenerate projection"),
        ];
        for (map, s, t, what) in checks {
            if let Err(e) = map.check(s, t)? {
                return Ok(Err(format!("{what} is not a chain map: {e}")));
            }
        }
        for n in 0..=self.moore.truncation() {
            let (i_n, i_d) = (&self.normalized_inclusion.levels[n], &self.degenerate_inclusion.levels[n]);
            let (p_n, p_d) = (&self.normalized_projection.levels[n], &self.degenerate_projection.levels[n]);
            let round = i_n.compose(p_n)?.add(&i_d.compose(p_d)?)?;
            if !round.equals_as_map(&AbHom::identity(self.moore.level(n)))? {
                return Ok(Err(format!("inclusions ∘ projections != id at level {n}")));
            }
            if !p_n.compose(i_n)?.equals_as_map(&AbHom::identity(self.normalized.level(n)))?
                || !p_d.compose(i_d)?.equals_as_map(&AbHom::identity(self.degenerate.level(n)))?
                || !p_n.compose(i_d)?.is_zero()?
                || !p_d.compose(i_n)?.is_zero()?
            {
                return Ok(Err(format!("projections are not a splitting at level {n}")));
            }
        }
        Ok(Ok(()))
    }
}

/// `C(N(B)) -> B`: `{b_σ} ↦ b_id` on normalized simplices.
pub fn counit(b: &ChainComplexFp, m: usize) -> Result<(Nerve, NormalizedChains, ChainMap)> {
    let nerve = dold_kan_nerve(b, m)?;
    let chains = normalized_chains(&nerve.group)?;
    let levels =
        (0..=m).map(|n| nerve.top_projection(n)?.compose(&nerve.inclusions[n])?.compose(&chains.inclusions[n])).collect::<Result<_>>()?;
    Ok((nerve, chains, ChainMap { levels }))
}

/// `A -> N(C(A))`: `a ↦ {π(σ^* a)}_σ`.
pub fn unit(a: &SimplicialAbGroup) -> Result<(NormalizedChains, Nerve, SimplicialMap)> {
    let m = a.truncation();
    let chains = normalized_chains(a)?;
    let nerve = dold_kan_nerve(&chains.complex, m)?;
    let subs: Vec<Subgroup> =
        chains.inclusions.iter().map(|inc| Subgroup { group: inc.source().clone(), inclusion: inc.clone() }).collect();
    let pis: Vec<AbHom> = (0..=m).map(|k| a.pi(k)).collect::<Result<_>>()?;
    let mut levels = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let blocks = nerve
            .index(n)
            .iter()
            .map(|sigma| pis[sigma.source_dim()].compose(&a.act(sigma)?)?.factor_through(&subs[sigma.source_dim()].inclusion))
            .collect::<Result<Vec<_>>>()?;
        let refs: Vec<&AbHom> = blocks.iter().collect();
        let into_ambient = AbHom::stack(a.level(n), &refs)?;
        levels.push(into_ambient.factor_through(&nerve.inclusions[n])?);
    }
    Ok((chains, nerve, SimplicialMap { levels }))
}

/// Checks `C(Ω(A)) = Ω(C(A))`: both sit inside `A_(n+1)` as the same
/// subgroup, and the canonical identification commutes with differentials.
pub fn omega_compat_check(a: &SimplicialAbGroup) -> Result<bool> {
    let (omega, into_path) = a.loop_object()?;
    let c_omega = normalized_chains(&omega)?;
    let omega_c = normalized_chains(a)?;
    let shifted = omega_c.complex.omega()?;
    let m = omega.truncation();
    let mut ident = Vec::with_capacity(m + 1);
    for n in 0..=m {
        // Both sides inside A_(n+1).
        let left = into_path.levels[n].compose(&c_omega.inclusions[n])?;
        let right = &omega_c.inclusions[n + 1];
        let l = Subgroup { group: left.source().clone(), inclusion: left.clone() };
        let r = Subgroup { group: right.source().clone(), inclusion: right.clone() };
        if !l.same_as(&r)? {
            return Ok(false);
        }
        let phi = left.factor_through(right)?;
        if !phi.is_isomorphism()? || c_omega.complex.level(n).normal_form() != shifted.level(n).normal_form() {
            return Ok(false);
        }
        ident.push(phi);
    }
    Ok(ChainMap { levels: ident }.check(&c_omega.complex, &shifted.resize(m))?.is_ok())
}

/// One rung of the induction: the rows `Ω(A) -> P(A) -> A` at a level.
#[derive(Clone, Debug, Serialize)]
pub struct LadderRung {
    /// How many times `Ω` has been applied.
    pub depth: usize,
    pub level: usize,
    pub rows_exact: bool,
    pub omega_iso: bool,
    pub base_iso: bool,
    pub path_iso: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConservativityReport {
    /// `f_n` is an isomorphism, checked directly.
    pub direct: Vec<bool>,
    pub ladder: Vec<LadderRung>,
    pub verdict: bool,
}

/// For `f` with `C(f)` an isomorphism up to `m`: checks every `f_n` directly
/// and replays the `P`/`Ω` induction rung by rung. A failing precondition
/// is an `Error::Precondition`.
pub fn conservativity_check(f: &SimplicialMap, source: &SimplicialAbGroup, target: &SimplicialAbGroup, m: usize) -> Result<ConservativityReport> {
    if m > f.truncation() || m > source.truncation() || m > target.truncation() {
        return Err(Error::Truncation { level: m, truncation: f.truncation().min(source.truncation()).min(target.truncation()) });
    }
    let f = SimplicialMap { levels: f.levels[..=m].to_vec() };
    let (source, target) = (source.truncate(m)?, target.truncate(m)?);
    if let Err(e) = f.check(&source, &target)? {
        return Err(Error::Precondition(format!("not a simplicial map: {e}")));
    }
    if let Some(n) = chains_map(&f, &source, &target)?.first_non_iso()? {
        return Err(Error::Precondition(format!("C(f) is not an isomorphism in degree {n}")));
    }
    let direct = f.levels.iter().map(AbHom::is_isomorphism).collect::<Result<Vec<_>>>()?;
    let mut ladder = Vec::new();
    climb(&f, &source, &target, 0, &mut ladder)?;
    let verdict = direct.iter().all(|&x| x) && ladder.iter().all(|r| r.rows_exact && r.omega_iso && r.base_iso && r.path_iso);
    Ok(ConservativityReport { direct, ladder, verdict })
}

/// `C(f)`: `f_n` restricted to normalized subgroups.
pub fn chains_map(f: &SimplicialMap, source: &SimplicialAbGroup, target: &SimplicialAbGroup) -> Result<ChainMap> {
    let levels = (0..=f.truncation())
        .map(|n| f.levels[n].restrict(&source.normalized_subgroup(n)?, &target.normalized_subgroup(n)?))
        .collect::<Result<_>>()?;
    Ok(ChainMap { levels })
}

/// `Ω(f) : Ω(A) -> Ω(A')`, with the loop objects.
pub fn loop_map(f: &SimplicialMap, source: &SimplicialAbGroup, target: &SimplicialAbGroup) -> Result<(SimplicialAbGroup, SimplicialAbGroup, SimplicialMap)> {
    let (os, is) = source.loop_object()?;
    let (ot, it) = target.loop_object()?;
    let levels = (0..=os.truncation())
        .map(|n| {
            let s = Subgroup { group: os.level(n).clone(), inclusion: is.levels[n].clone() };
            let t = Subgroup { group: ot.level(n).clone(), inclusion: it.levels[n].clone() };
            f.levels[n + 1].restrict(&s, &t)
        })
        .collect::<Result<_>>()?;
    Ok((os, ot, SimplicialMap { levels }))
}

fn climb(f: &SimplicialMap, source: &SimplicialAbGroup, target: &SimplicialAbGroup, depth: usize, out: &mut Vec<LadderRung>) -> Result<()> {
    if source.truncation() == 0 {
        return Ok(());
    }
    let (os, ot, of) = loop_map(f, source, target)?;
    let (_, into_path) = source.loop_object()?;
    let boundary = source.boundary_map()?;
    for n in 0..=os.truncation() {
        let inc = &into_path.levels[n];
        let d = &boundary.levels[n];
        let image = Subgroup { group: inc.source().clone(), inclusion: inc.clone() };
        let rows_exact = inc.is_injective()? && d.is_surjective()? && d.kernel()?.same_as(&image)?;
        out.push(LadderRung {
            depth,
            level: n,
            rows_exact,
            omega_iso: of.levels[n].is_isomorphism()?,
            base_iso: f.levels[n].is_isomorphism()?,
            path_iso: f.levels[n + 1].is_isomorphism()?,
        });
    }
    climb(&of, &os, &ot, depth + 1, out)
}

#[cfg(test)]
mod tests;
