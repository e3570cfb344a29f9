use std::collections::BTreeSet;

use serde::Serialize;

use super::nerve::{scaled_nerve_model, NerveSimplex};
use super::poset::n_over_slice;
use super::slice::{LaxOver, SliceMorphism};
use super::{cube_f, cube_q, delta_prime, Full, Op2, SimplexTwoCat, TwoCategory};
use crate::error::{Error, Result};
use crate::simplexcat::MonotoneMap;
use crate::sset::{pushout, Budget, SimplicialSetMap, TruncSimplicialSet};

/// `Δ'_{/[n]}` on the objects `[m] -> [n]` with `m <= max_obj`.
pub fn slice_over_simplex(n: usize, max_obj: usize) -> Full<LaxOver<Op2<SimplexTwoCat>>> {
    let over = LaxOver::new(delta_prime(n.max(max_obj)), n);
    let objects = over.objects().into_iter().filter(|phi| phi.source_dim() <= max_obj).collect();
    Full { base: over, objects }
}

/// `i ↦ i + m' - m`, the image of a morphism of `ℕ`.
fn shift(m: usize, m2: usize) -> MonotoneMap {
    MonotoneMap::new((0..=m).map(|i| i + m2 - m).collect(), m2).expect("shift is monotone")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeObligation {
    pub sigma: String,
    pub vertices: Vec<String>,
}

/// Proof obligations for an `n`-simplex of the categorified nerve and of
/// the functor built on `ℳ_n`:
///
/// * `zero_obligations`: degenerate `τ` met by a pulled-back `q` cube,
/// * `limit_cubes`: `σ ∘ q` for nondegenerate `σ : [k] ↪ [n]`, `k >= 1`,
/// * `bicartesian_cubes`: `σ ∘ f` for the same `σ`,
/// * `cartesian_edges`: nonidentity strictly commuting triangles of
///   `Δ'_{/[n]}` with sources of dimension at most `max_obj`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NerveConditionReport {
    pub n: usize,
    pub max_obj: usize,
    pub zero_obligations: Vec<String>,
    pub limit_cubes: Vec<CubeObligation>,
    pub bicartesian_cubes: Vec<CubeObligation>,
    pub cartesian_edges: Vec<String>,
}

pub fn nerve_condition_report(n: usize, max_obj: usize) -> Result<NerveConditionReport> {
    let mut zero: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    let mut limit_cubes = Vec::new();
    let mut bicartesian_cubes = Vec::new();
    for k in 1..=n {
        for sigma in MonotoneMap::all_injective(k, n) {
            let q = cube_q(k)?.postcompose(&sigma)?;
            for v in &q.vertices {
                if !v.is_injective() {
                    zero.insert((v.source_dim(), v.values().to_vec()));
                }
            }
            limit_cubes.push(CubeObligation { sigma: sigma.label(), vertices: q.labels() });
            let f = cube_f(k)?.postcompose(&sigma)?;
            bicartesian_cubes.push(CubeObligation { sigma: sigma.label(), vertices: f.labels() });
        }
    }
    let zero_obligations = zero.into_iter().map(|(_, v)| MonotoneMap::new(v, n).expect("cube vertex").label()).collect();
    let slice = slice_over_simplex(n, max_obj);
    let objects = slice.objects();
    let mut cartesian_edges = Vec::new();
    for phi in &objects {
        for psi in &objects {
            for m in slice.hom(phi, psi) {
                if slice.is_marked(&m) && m != slice.identity(phi) {
                    cartesian_edges.push(format!("{} -{}-> {}", phi.label(), m.f.label(), psi.label()));
                }
            }
        }
    }
    Ok(NerveConditionReport { n, max_obj, zero_obligations, limit_cubes, bicartesian_cubes, cartesian_edges })
}

impl NerveConditionReport {
    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `ℳ_n` with its two inclusions `r : N^sc(Δ'_{/[n]}) -> ℳ_n` and
/// `s = {1} × id : N(ℕ_{/[n]}) -> ℳ_n`.
#[derive(Clone, Debug)]
pub struct MPoset {
    pub set: TruncSimplicialSet,
    pub slice_nerve: TruncSimplicialSet,
    pub poset_nerve: TruncSimplicialSet,
    pub r: SimplicialSetMap,
    pub s: SimplicialSetMap,
}

pub fn m_poset(n: usize, max_obj: usize, truncation: usize, budget: &mut Budget) -> Result<MPoset> {
    let slice = slice_over_simplex(n, max_obj);
    let x = scaled_nerve_model(&slice, truncation, budget)?;
    let poset = n_over_slice(n, max_obj);
    let a = scaled_nerve_model(&poset, truncation, budget)?;
    let product = poset.interval_product();
    let y = scaled_nerve_model(&product, truncation, budget)?;
    let p = poset.len();
    let mut ax = Vec::with_capacity(truncation + 1);
    let mut ay = Vec::with_capacity(truncation + 1);
    let mut a1 = Vec::with_capacity(truncation + 1);
    for level in 0..=truncation {
        let mut lx = Vec::with_capacity(a.simplices[level].len());
        let mut ly = Vec::with_capacity(a.simplices[level].len());
        let mut l1 = Vec::with_capacity(a.simplices[level].len());
        for chain in &a.simplices[level] {
            let objects: Vec<MonotoneMap> = chain.objects.iter().map(|&i| poset.elements[i].clone()).collect();
            let edges = chain
                .edges
                .iter()
                .map(|&(u, v)| {
                    let (from, to) = (poset.elements[u].clone(), poset.elements[v].clone());
                    let f = shift(from.source_dim(), to.source_dim());
                    SliceMorphism { from, to, f }
                })
                .collect();
            let image = NerveSimplex { objects, edges };
            lx.push(x.lookup(level, &image).ok_or_else(|| Error::Invalid(format!("{} has no image in the slice nerve", a.set.label(level, lx.len()))))?);
            ly.push(y.lookup(level, chain).ok_or_else(|| Error::Invalid("chain missing from {0} x N".into()))?);
            let top = NerveSimplex { objects: chain.objects.iter().map(|&i| i + p).collect(), edges: chain.edges.iter().map(|&(u, v)| (u + p, v + p)).collect() };
            l1.push(y.lookup(level, &top).ok_or_else(|| Error::Invalid("chain missing from {1} x N".into()))?);
        }
        ax.push(lx);
        ay.push(ly);
        a1.push(l1);
    }
    let (ax, ay, a1) = (SimplicialSetMap { levels: ax }, SimplicialSetMap { levels: ay }, SimplicialSetMap { levels: a1 });
    let (set, r, y_to_m) = pushout(&a.set, &x.set, &ax, &y.set, &ay)?;
    Ok(MPoset { set, slice_nerve: x.set, poset_nerve: a.set, r, s: a1.then(&y_to_m) })
}
