use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::functor::{is_iso, CatValuedFunctor, FunctorData};
use crate::error::{Error, Result};
use crate::simplexcat::MonotoneMap;
use crate::sset::{materialize, Budget, Materialized, SimplicialModel, SimplicialSetMap, TruncSimplicialSet};
use crate::twocat::{nerve_simplex_label, pair_index, scaled_nerve_model, NerveSimplex, PosetEnriched2Cat, TwoCategory};

/// A simplicial set with a map to the nerve of a finite category.
#[derive(Clone, Debug)]
pub struct FiberedSimplicialSet {
    pub base_category: PosetEnriched2Cat,
    pub base: Materialized<NerveSimplex<usize, usize>>,
    pub total: TruncSimplicialSet,
    pub projection: SimplicialSetMap,
}

impl FiberedSimplicialSet {
    pub fn new(
        base_category: PosetEnriched2Cat,
        base: Materialized<NerveSimplex<usize, usize>>,
        total: TruncSimplicialSet,
        projection: SimplicialSetMap,
    ) -> Result<Self> {
        projection.check(&total, &base.set, false).map_err(Error::Invalid)?;
        Ok(Self { base_category, base, total, projection })
    }

    /// `N(C)` over itself with every edge marked.
    pub fn identity(c: &PosetEnriched2Cat, truncation: usize, budget: &mut Budget) -> Result<Self> {
        let base = scaled_nerve_model(c, truncation, budget)?;
        let total = base.set.with_all_edges_marked();
        let projection = SimplicialSetMap::identity(&total);
        Self::new(c.clone(), base, total, projection)
    }

    pub fn truncation(&self) -> usize {
        self.total.truncation()
    }

    /// Index of the `n`-simplex of the base that is constant at `c`.
    pub fn constant_base_simplex(&self, n: usize, c: usize) -> Option<usize> {
        self.base.lookup(n, &NerveSimplex { objects: vec![c; n + 1], edges: vec![c; n * (n + 1) / 2] })
    }

    /// Index of the base edge `f`.
    pub fn base_edge(&self, f: usize) -> Option<usize> {
        let c = &self.base_category;
        self.base.lookup(1, &NerveSimplex { objects: vec![c.source(&f), c.target(&f)], edges: vec![f] })
    }

    /// The fiber over `c` with its inclusion.
    pub fn fiber(&self, c: usize) -> Result<(TruncSimplicialSet, SimplicialSetMap)> {
        let constant: Vec<Option<usize>> = (0..=self.truncation()).map(|n| self.constant_base_simplex(n, c)).collect();
        self.total.subset(|n, x| Some(self.projection.apply(n, x)) == constant[n])
    }
}

/// An `n`-simplex of `χ(F)`: a base simplex `c_0 -> … -> c_n`, objects
/// `y_i ∈ F(c_i)` and `g_ij : y_i -> F(c_i -> c_j)(y_j)` in `F(c_i)` for
/// `i < j` (see [`pair_index`]) with `g_ik = g_ij ; F(c_i -> c_j)(g_jk)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChiSimplex {
    pub base: NerveSimplex<usize, usize>,
    pub y: Vec<usize>,
    pub g: Vec<usize>,
}

impl ChiSimplex {
    pub fn dim(&self) -> usize {
        self.y.len() - 1
    }

    /// `g_ij`, or the identity of `y_i` when `i == j`.
    pub fn edge(&self, i: usize, j: usize) -> usize {
        if i == j {
            self.y[i]
        } else {
            self.g[pair_index(self.dim(), i, j)]
        }
    }
}

/// `c_i -> c_j` in the base, or the identity.
fn base_arrow(s: &NerveSimplex<usize, usize>, i: usize, j: usize) -> usize {
    if i == j {
        s.objects[i]
    } else {
        *s.edge(i, j)
    }
}

pub struct ChiModel<'a> {
    pub functor: &'a CatValuedFunctor,
    pub base: &'a Materialized<NerveSimplex<usize, usize>>,
}

impl ChiModel<'_> {
    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        s: &NerveSimplex<usize, usize>,
        i: usize,
        y: &mut Vec<usize>,
        g: &mut Vec<Vec<usize>>,
        out: &mut Vec<ChiSimplex>,
        budget: &mut Budget,
    ) -> Result<()> {
        let f = self.functor;
        let n = s.dim();
        let fiber = f.fiber(s.objects[i]);
        for yi in 0..fiber.object_count() {
            y[i] = yi;
            let next: Vec<usize> = if i == n { vec![usize::MAX] } else { fiber.hom(&yi, &f.on_object(*s.edge(i, i + 1), y[i + 1])) };
            for step in next {
                if i < n {
                    let a = *s.edge(i, i + 1);
                    g[i][i + 1] = step;
                    for j in i + 2..=n {
                        g[i][j] = fiber.compose(&step, &f.on_morphism(a, g[i + 1][j]));
                    }
                }
                if i == 0 {
                    budget.charge(1)?;
                    let mut flat = Vec::with_capacity(n * (n + 1) / 2);
                    for a in 0..n {
                        for b in a + 1..=n {
                            flat.push(g[a][b]);
                        }
                    }
                    out.push(ChiSimplex { base: s.clone(), y: y.clone(), g: flat });
                } else {
                    self.fill(s, i - 1, y, g, out, budget)?;
                }
            }
        }
        Ok(())
    }
}

impl SimplicialModel for ChiModel<'_> {
    type Simplex = ChiSimplex;

    fn simplices(&self, n: usize, _lower: &[Vec<ChiSimplex>], budget: &mut Budget) -> Result<Vec<ChiSimplex>> {
        let mut out = Vec::new();
        for s in &self.base.simplices[n] {
            let mut y = vec![0; n + 1];
            let mut g = vec![vec![0; n + 1]; n + 1];
            self.fill(s, n, &mut y, &mut g, &mut out, budget)?;
        }
        Ok(out)
    }

    fn pullback(&self, x: &ChiSimplex, a: &MonotoneMap) -> ChiSimplex {
        let m = a.source_dim();
        let objects: Vec<usize> = (0..=m).map(|i| x.base.objects[a.apply(i)]).collect();
        let mut edges = Vec::with_capacity(m * (m + 1) / 2);
        let mut g = Vec::with_capacity(m * (m + 1) / 2);
        for i in 0..=m {
            for j in i + 1..=m {
                edges.push(base_arrow(&x.base, a.apply(i), a.apply(j)));
                g.push(x.edge(a.apply(i), a.apply(j)));
            }
        }
        ChiSimplex { base: NerveSimplex { objects, edges }, y: (0..=m).map(|i| x.y[a.apply(i)]).collect(), g }
    }

    fn label(&self, x: &ChiSimplex) -> String {
        let f = self.functor;
        let ys: Vec<&str> = x.y.iter().zip(&x.base.objects).map(|(&y, &c)| f.fiber(c).object_names()[y].as_str()).collect();
        let mut out = format!("{}|{}", nerve_simplex_label(f.base(), &x.base), ys.join(","));
        if !x.g.is_empty() {
            let n = x.dim();
            let mut gs = Vec::new();
            for i in 0..n {
                for j in i + 1..=n {
                    gs.push(f.fiber(x.base.objects[i]).morphisms()[x.edge(i, j)].name.clone());
                }
            }
            out.push('|');
            out.push_str(&gs.join(","));
        }
        out
    }

    /// Cartesian edges: the fiber component `g_01` is invertible.
    fn is_marked_edge(&self, x: &ChiSimplex) -> bool {
        is_iso(self.functor.fiber(x.base.objects[0]), x.g[0])
    }
}

/// `χ(F)` with its simplices.
#[derive(Clone, Debug)]
pub struct Chi {
    pub fibered: FiberedSimplicialSet,
    pub model: Materialized<ChiSimplex>,
}

/// `χ(F)` up to level `truncation`. The base must be a 1-category.
pub fn chi(f: &CatValuedFunctor, truncation: usize, budget: &mut Budget) -> Result<Chi> {
    if !f.base().is_discrete() {
        return Err(Error::Precondition("χ needs a base 1-category; use the lax construction for 2-cells".into()));
    }
    let base = scaled_nerve_model(f.base(), truncation, budget)?;
    let model = materialize(&ChiModel { functor: f, base: &base }, truncation, budget)?;
    let levels = model
        .simplices
        .iter()
        .enumerate()
        .map(|(n, lv)| lv.iter().map(|x| base.lookup(n, &x.base).expect("base simplex is enumerated")).collect())
        .collect();
    let fibered = FiberedSimplicialSet::new(f.base().clone(), base, model.set.clone(), SimplicialSetMap { levels })?;
    Ok(Chi { fibered, model })
}

/// The functors `x_I : Δ^I -> F(σ(min I))` of a simplex, keyed by the mask
/// of `I`, as tables on the interval category.
pub fn chi_restrictions(f: &CatValuedFunctor, x: &ChiSimplex) -> BTreeMap<u64, FunctorData> {
    let n = x.dim();
    let mut out = BTreeMap::new();
    for mask in 1u64..1 << (n + 1) {
        let elems: Vec<usize> = (0..=n).filter(|&i| mask >> i & 1 == 1).collect();
        let m = elems[0];
        let fiber = f.fiber(x.base.objects[m]);
        let mut objects = Vec::with_capacity(elems.len());
        for &a in &elems {
            objects.push(f.on_object(base_arrow(&x.base, m, a), x.y[a]));
        }
        let mut morphisms = objects.clone();
        for (p, &a) in elems.iter().enumerate() {
            for &b in &elems[p + 1..] {
                morphisms.push(f.on_morphism(base_arrow(&x.base, m, a), x.edge(a, b)));
            }
        }
        debug_assert!(morphisms.iter().all(|&h| h < fiber.morphisms().len()));
        out.insert(mask, FunctorData { objects, morphisms });
    }
    out
}

/// `{"level": n, "base": …, "fiber_data": {"objects": […], "morphisms": {"ij": …}}}`
pub fn chi_simplex_json(f: &CatValuedFunctor, x: &ChiSimplex) -> Value {
    let n = x.dim();
    let objects: Vec<&str> = x.y.iter().zip(&x.base.objects).map(|(&y, &c)| f.fiber(c).object_names()[y].as_str()).collect();
    let mut morphisms = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..=n {
            morphisms.insert(format!("{i}{j}"), f.fiber(x.base.objects[i]).morphisms()[x.edge(i, j)].name.clone());
        }
    }
    json!({
        "level": n,
        "base": nerve_simplex_label(f.base(), &x.base),
        "fiber_data": {"objects": objects, "morphisms": morphisms},
    })
}

/// The fiber of `χ(F)` over `c` and its identification with `N(F(c))`.
pub struct FiberComparison {
    pub fiber: TruncSimplicialSet,
    pub inclusion: SimplicialSetMap,
    pub nerve: Materialized<NerveSimplex<usize, usize>>,
    pub to_nerve: SimplicialSetMap,
}

impl FiberComparison {
    /// The identification is a simplicial bijection.
    pub fn check(&self) -> std::result::Result<(), String> {
        self.to_nerve.check(&self.fiber, &self.nerve.set, false)?;
        if !self.to_nerve.is_bijective(&self.nerve.set) {
            return Err("fiber and nerve have different simplices".into());
        }
        Ok(())
    }
}

pub fn fiber_comparison(f: &CatValuedFunctor, x: &Chi, c: usize, budget: &mut Budget) -> Result<FiberComparison> {
    let (fiber, inclusion) = x.fibered.fiber(c)?;
    let nerve = scaled_nerve_model(f.fiber(c), x.fibered.truncation(), budget)?;
    let mut levels = Vec::new();
    for (n, lv) in inclusion.levels.iter().enumerate() {
        let mut out = Vec::with_capacity(lv.len());
        for &t in lv {
            let s = &x.model.simplices[n][t];
            let key = NerveSimplex { objects: s.y.clone(), edges: s.g.clone() };
            out.push(nerve.lookup(n, &key).ok_or_else(|| Error::Invalid(format!("fiber simplex {} is not in the nerve", fiber.label(n, out.len()))))?);
        }
        levels.push(out);
    }
    Ok(FiberComparison { fiber, inclusion, nerve, to_nerve: SimplicialSetMap { levels } })
}

/// `χ(φ)` for a levelwise functor `φ : F -> G`.
pub fn chi_map(phi: &super::functor::LevelwiseFunctor, from: &Chi, to: &Chi) -> Result<SimplicialSetMap> {
    let mut levels = Vec::new();
    for (n, lv) in from.model.simplices.iter().enumerate() {
        let mut out = Vec::with_capacity(lv.len());
        for s in lv {
            let comp = |i: usize| &phi.components[s.base.objects[i]];
            let y = (0..=n).map(|i| comp(i).objects[s.y[i]]).collect();
            let mut g = Vec::with_capacity(s.g.len());
            for i in 0..n {
                for j in i + 1..=n {
                    g.push(comp(i).morphisms[s.edge(i, j)]);
                }
            }
            let image = ChiSimplex { base: s.base.clone(), y, g };
            out.push(to.model.lookup(n, &image).ok_or_else(|| Error::Invalid("image simplex is missing from the target".into()))?);
        }
        levels.push(out);
    }
    Ok(SimplicialSetMap { levels })
}
