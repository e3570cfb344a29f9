use std::collections::{BTreeMap, HashMap, HashSet};

use serde_json::{json, Value};

use super::chi::{Chi, FiberedSimplicialSet};
use super::functor::{enumerate_functors, is_iso, CatValuedFunctor, FunctorData, LevelwiseFunctor};
use crate::error::{Error, Result};
use crate::simplexcat::MonotoneMap;
use crate::sset::{materialize, Budget, Materialized, SimplicialModel, SimplicialSetMap};
use crate::twocat::{
    bits, g_category, mask_label, max_of, min_of, nerve_simplex_label, scaled_nerve_model, GCategory, GMorphism, NerveSimplex,
    PosetEnriched2Cat, TwoCategory,
};

/// `G(I)` with index tables matching its tabulated category.
#[derive(Clone, Debug)]
pub struct IndexedG {
    pub g: GCategory,
    pub category: PosetEnriched2Cat,
    pub morphism_list: Vec<GMorphism>,
    object_position: HashMap<u64, usize>,
    morphism_position: HashMap<GMorphism, usize>,
}

impl IndexedG {
    pub fn new(mask: u64) -> Result<Self> {
        let g = g_category(&bits(mask))?;
        let category = g.to_category()?;
        let objects = g.object_list().to_vec();
        let mut morphism_list: Vec<GMorphism> = objects.iter().map(|s| g.identity(s)).collect();
        let mut seen: HashSet<GMorphism> = morphism_list.iter().copied().collect();
        for x in &objects {
            for y in &objects {
                for f in g.hom(x, y) {
                    if seen.insert(f) {
                        morphism_list.push(f);
                    }
                }
            }
        }
        // the tabulation lists morphisms in the same order
        debug_assert!(morphism_list.iter().zip(category.morphisms()).skip(objects.len()).all(|(f, r)| r.name == g.mor_label(f)));
        let object_position = objects.iter().enumerate().map(|(p, &s)| (s, p)).collect();
        let morphism_position = morphism_list.iter().enumerate().map(|(p, &f)| (f, p)).collect();
        Ok(Self { g, category, morphism_list, object_position, morphism_position })
    }

    pub fn object(&self, s: u64) -> usize {
        self.object_position[&s]
    }

    pub fn morphism(&self, f: &GMorphism) -> usize {
        self.morphism_position[f]
    }
}

/// An `n`-simplex of the lax construction: a base simplex `σ : Σ^n -> ℂ` and
/// functors `y_I : G(I) -> F(σ(min I))`, stored at `data[mask(I) - 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaxSimplex {
    pub base: NerveSimplex<usize, usize>,
    pub data: Vec<FunctorData>,
}

fn image_mask(a: &MonotoneMap, mask: u64) -> u64 {
    bits(mask).into_iter().fold(0, |m, b| m | 1 << a.apply(b))
}

pub struct LaxModel<'a> {
    functor: &'a CatValuedFunctor,
    base: &'a Materialized<NerveSimplex<usize, usize>>,
    gs: HashMap<u64, IndexedG>,
}

impl<'a> LaxModel<'a> {
    pub fn new(functor: &'a CatValuedFunctor, base: &'a Materialized<NerveSimplex<usize, usize>>, max: usize) -> Result<Self> {
        let gs = (1u64..1 << (max + 1)).map(|m| Ok((m, IndexedG::new(m)?))).collect::<Result<_>>()?;
        Ok(Self { functor, base, gs })
    }

    pub fn g(&self, mask: u64) -> &IndexedG {
        &self.gs[&mask]
    }

    /// `σ(T)` for `T ⊆ [n]`: the composite of the edges along `T`.
    fn sigma_of(&self, s: &NerveSimplex<usize, usize>, t: u64) -> usize {
        let c = self.functor.base();
        let e = bits(t);
        e.windows(2).fold(s.objects[e[0]], |acc, w| c.compose(&acc, s.edge(w[0], w[1])))
    }

    /// The compatibility of `y_small` and `y_large` for `small ⊆ large`.
    fn compatible(&self, s: &NerveSimplex<usize, usize>, small: u64, large: u64, y_small: &FunctorData, y_large: &FunctorData) -> bool {
        let f = self.functor;
        let (gi, gj) = (self.g(small), self.g(large));
        let fiber = f.fiber(s.objects[min_of(large)]);
        let prefixes = gj.g.sigma().hom(&min_of(large), &min_of(small));
        let images: Vec<usize> = prefixes.iter().map(|&t| self.sigma_of(s, t)).collect();
        for (&t, &st) in prefixes.iter().zip(&images) {
            for (p, &sub) in gi.g.object_list().iter().enumerate() {
                if y_large.objects[gj.object(t | sub)] != f.on_object(st, y_small.objects[p]) {
                    return false;
                }
            }
        }
        for (&t, &st) in prefixes.iter().zip(&images) {
            for (&t2, &st2) in prefixes.iter().zip(&images) {
                if t2 & !t != 0 {
                    continue;
                }
                for (k, u) in gi.morphism_list.iter().enumerate() {
                    let image = GMorphism { source: t | u.source, target: t2 | u.target, t: u.t };
                    let z = y_small.objects[gi.object(u.target)];
                    let want = fiber.compose(&f.on_morphism(st, y_small.morphisms[k]), &f.theta(st2, st, z));
                    if y_large.morphisms[gj.morphism(&image)] != want {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        s: &NerveSimplex<usize, usize>,
        order: &[u64],
        k: usize,
        data: &mut Vec<Option<FunctorData>>,
        out: &mut Vec<LaxSimplex>,
        budget: &mut Budget,
    ) -> Result<()> {
        if k == order.len() {
            budget.charge(1)?;
            out.push(LaxSimplex { base: s.clone(), data: data.iter().map(|d| d.clone().expect("filled")).collect() });
            return Ok(());
        }
        let f = self.functor;
        let mask = order[k];
        let gi = self.g(mask);
        let low = min_of(mask);
        let fixed: Vec<Option<usize>> = if mask.count_ones() == 1 {
            vec![None]
        } else {
            gi.g.object_list()
                .iter()
                .map(|&sub| {
                    let rest = sub & !(1 << low);
                    if rest == 0 {
                        return Some(data[(1usize << low) - 1].as_ref().expect("singletons first").objects[0]);
                    }
                    let y = data[rest as usize - 1].as_ref().expect("smaller subsets first");
                    let arrow = self.sigma_of(s, 1 << low | 1 << min_of(rest));
                    Some(f.on_object(arrow, y.objects[self.g(rest).object(rest)]))
                })
                .collect()
        };
        let candidates = enumerate_functors(&gi.category, f.fiber(s.objects[low]), &fixed, budget)?;
        for y in candidates {
            let ok = (1..mask).filter(|&sub| sub & !mask == 0).all(|sub| {
                self.compatible(s, sub, mask, data[sub as usize - 1].as_ref().expect("smaller subsets first"), &y)
            });
            if ok {
                data[mask as usize - 1] = Some(y);
                self.fill(s, order, k + 1, data, out, budget)?;
                data[mask as usize - 1] = None;
            }
        }
        Ok(())
    }
}

impl SimplicialModel for LaxModel<'_> {
    type Simplex = LaxSimplex;

    fn simplices(&self, n: usize, _lower: &[Vec<LaxSimplex>], budget: &mut Budget) -> Result<Vec<LaxSimplex>> {
        let mut order: Vec<u64> = (1u64..1 << (n + 1)).collect();
        order.sort_by_key(|m| (m.count_ones(), *m));
        let mut out = Vec::new();
        for s in &self.base.simplices[n] {
            let mut data = vec![None; order.len()];
            self.fill(s, &order, 0, &mut data, &mut out, budget)?;
        }
        Ok(out)
    }

    fn pullback(&self, x: &LaxSimplex, a: &MonotoneMap) -> LaxSimplex {
        let c = self.functor.base();
        let m = a.source_dim();
        let objects: Vec<usize> = (0..=m).map(|i| x.base.objects[a.apply(i)]).collect();
        let mut edges = Vec::new();
        for i in 0..=m {
            for j in i + 1..=m {
                let (p, q) = (a.apply(i), a.apply(j));
                edges.push(if p == q { c.identity(&objects[i]) } else { *x.base.edge(p, q) });
            }
        }
        let data = (1u64..1 << (m + 1))
            .map(|mask| {
                let (small, large) = (self.g(mask), self.g(image_mask(a, mask)));
                let y = &x.data[image_mask(a, mask) as usize - 1];
                FunctorData {
                    objects: small.g.object_list().iter().map(|&sub| y.objects[large.object(image_mask(a, sub))]).collect(),
                    morphisms: small
                        .morphism_list
                        .iter()
                        .map(|u| {
                            let image = GMorphism { source: image_mask(a, u.source), target: image_mask(a, u.target), t: image_mask(a, u.t) };
                            y.morphisms[large.morphism(&image)]
                        })
                        .collect(),
                }
            })
            .collect();
        LaxSimplex { base: NerveSimplex { objects, edges }, data }
    }

    fn label(&self, x: &LaxSimplex) -> String {
        let f = self.functor;
        let mut parts = vec![nerve_simplex_label(f.base(), &x.base)];
        for (k, y) in x.data.iter().enumerate() {
            let mask = k as u64 + 1;
            let fiber = f.fiber(x.base.objects[min_of(mask)]);
            let names: Vec<&str> = y.objects.iter().map(|&o| fiber.object_names()[o].as_str()).collect();
            let extra: Vec<&str> = y.morphisms[y.objects.len()..].iter().map(|&h| fiber.morphisms()[h].name.as_str()).collect();
            parts.push(format!("{}:{}/{}", mask_label(mask), names.join(","), extra.join(",")));
        }
        parts.join("|")
    }

    /// The component at `{0} -> {0,1}` of `y_[1]` is invertible.
    fn is_marked_edge(&self, x: &LaxSimplex) -> bool {
        let g = self.g(0b11);
        let k = g.morphism(&GMorphism { source: 0b01, target: 0b11, t: 0b11 });
        is_iso(self.functor.fiber(x.base.objects[0]), x.data[2].morphisms[k])
    }
}

/// The lax construction with its simplices.
pub struct LaxChi {
    pub fibered: FiberedSimplicialSet,
    pub model: Materialized<LaxSimplex>,
    pub gs: HashMap<u64, IndexedG>,
}

pub fn lax_chi(f: &CatValuedFunctor, truncation: usize, budget: &mut Budget) -> Result<LaxChi> {
    if truncation > 2 {
        return Err(Error::Precondition(format!("the lax construction is enumerated to level 2, not {truncation}")));
    }
    let base = scaled_nerve_model(f.base(), truncation, budget)?;
    let model = LaxModel::new(f, &base, truncation)?;
    let set = materialize(&model, truncation, budget)?;
    let levels = set
        .simplices
        .iter()
        .enumerate()
        .map(|(n, lv)| lv.iter().map(|x| base.lookup(n, &x.base).expect("base simplex is enumerated")).collect())
        .collect();
    let gs = model.gs;
    let fibered = FiberedSimplicialSet::new(f.base().clone(), base, set.set.clone(), SimplicialSetMap { levels })?;
    Ok(LaxChi { fibered, model: set, gs })
}

pub fn lax_simplex_json(f: &CatValuedFunctor, x: &LaxSimplex) -> Value {
    let mut data = BTreeMap::new();
    for (k, y) in x.data.iter().enumerate() {
        let mask = k as u64 + 1;
        let fiber = f.fiber(x.base.objects[min_of(mask)]);
        let objects: Vec<&str> = y.objects.iter().map(|&o| fiber.object_names()[o].as_str()).collect();
        let morphisms: Vec<&str> = y.morphisms.iter().map(|&h| fiber.morphisms()[h].name.as_str()).collect();
        data.insert(mask_label(mask), json!({"objects": objects, "morphisms": morphisms}));
    }
    json!({"level": x.base.dim(), "base": nerve_simplex_label(f.base(), &x.base), "fiber_data": data})
}

/// `χ(F) -> 𝕏(F)` over a 1-category: `y_I = x_I ∘ (S ↦ max S)`.
pub fn compare_chi_lax(f: &CatValuedFunctor, x: &Chi, lax: &LaxChi) -> Result<SimplicialSetMap> {
    if !f.base().is_discrete() {
        return Err(Error::Precondition("the comparison needs a base 1-category".into()));
    }
    let arrow = |s: &NerveSimplex<usize, usize>, i: usize, j: usize| if i == j { s.objects[i] } else { *s.edge(i, j) };
    let mut levels = Vec::new();
    for (n, lv) in x.model.simplices.iter().enumerate().take(lax.fibered.truncation() + 1) {
        let mut out = Vec::with_capacity(lv.len());
        for s in lv {
            let data = (1u64..1 << (n + 1))
                .map(|mask| {
                    let g = &lax.gs[&mask];
                    let low = min_of(mask);
                    FunctorData {
                        objects: g.g.object_list().iter().map(|&sub| f.on_object(arrow(&s.base, low, max_of(sub)), s.y[max_of(sub)])).collect(),
                        morphisms: g
                            .morphism_list
                            .iter()
                            .map(|u| {
                                let (a, b) = (max_of(u.source), max_of(u.target));
                                f.on_morphism(arrow(&s.base, low, a), s.edge(a, b))
                            })
                            .collect(),
                    }
                })
                .collect();
            let image = LaxSimplex { base: s.base.clone(), data };
            out.push(lax.model.lookup(n, &image).ok_or_else(|| Error::Invalid("comparison image is not a lax simplex".into()))?);
        }
        levels.push(out);
    }
    Ok(SimplicialSetMap { levels })
}

/// The lax construction applied to a levelwise functor.
pub fn lax_map(phi: &LevelwiseFunctor, from: &LaxChi, to: &LaxChi) -> Result<SimplicialSetMap> {
    let mut levels = Vec::new();
    for (n, lv) in from.model.simplices.iter().enumerate() {
        let mut out = Vec::with_capacity(lv.len());
        for s in lv {
            let data = s
                .data
                .iter()
                .enumerate()
                .map(|(k, y)| y.then(&phi.components[s.base.objects[min_of(k as u64 + 1)]]))
                .collect();
            let image = LaxSimplex { base: s.base.clone(), data };
            out.push(to.model.lookup(n, &image).ok_or_else(|| Error::Invalid("image simplex is missing from the target".into()))?);
        }
        levels.push(out);
    }
    Ok(SimplicialSetMap { levels })
}

/// Checks on the comparison map over a 1-category.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ComparisonReport {
    pub chi_counts: Vec<usize>,
    pub lax_counts: Vec<usize>,
    pub injective: bool,
    /// Per base object: vertices over it in `χ(F)` and in the lax construction.
    pub fiber_vertices: Vec<(usize, usize)>,
    pub failures: Vec<String>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn check_comparison(f: &CatValuedFunctor, x: &Chi, lax: &LaxChi, map: &SimplicialSetMap) -> ComparisonReport {
    let mut failures = Vec::new();
    let chi_set = x.fibered.total.truncate(lax.fibered.truncation()).expect("lax level is within χ");
    if let Err(e) = map.check(&chi_set, &lax.fibered.total, true) {
        failures.push(format!("not a map of marked simplicial sets: {e}"));
    }
    for (n, lv) in map.levels.iter().enumerate() {
        for (s, &t) in lv.iter().enumerate() {
            if x.fibered.projection.apply(n, s) != lax.fibered.projection.apply(n, t) {
                failures.push(format!("projections disagree on {}", chi_set.label(n, s)));
            }
        }
    }
    let mut fiber_vertices = Vec::new();
    for c in 0..f.base().object_count() {
        let b = x.fibered.constant_base_simplex(0, c).expect("base vertex");
        let over_chi: Vec<usize> = (0..chi_set.count(0)).filter(|&v| x.fibered.projection.apply(0, v) == b).collect();
        let over_lax: HashSet<usize> = (0..lax.fibered.total.count(0)).filter(|&v| lax.fibered.projection.apply(0, v) == b).collect();
        let images: HashSet<usize> = over_chi.iter().map(|&v| map.apply(0, v)).collect();
        if images.len() != over_chi.len() || images != over_lax {
            failures.push(format!("vertices over {} do not correspond", f.base().object_names()[c]));
        }
        fiber_vertices.push((over_chi.len(), over_lax.len()));
    }
    ComparisonReport {
        chi_counts: chi_set.counts(),
        lax_counts: lax.fibered.total.counts(),
        injective: map.is_injective(),
        fiber_vertices,
        failures,
    }
}
