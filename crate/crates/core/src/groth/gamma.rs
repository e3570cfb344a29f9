use std::collections::HashMap;

use super::chi::{chi, fiber_comparison, Chi, ChiSimplex, FiberComparison, FiberedSimplicialSet};
use super::functor::CatValuedFunctor;
use crate::error::{Error, Result};
use crate::simplexcat::MonotoneMap;
use crate::sset::{materialize, Budget, Materialized, SimplicialModel, SimplicialSetMap, TruncSimplicialSet};
use crate::twocat::{NerveSimplex, PosetEnriched2Cat, TwoCategory};

/// A non-identity morphism `(i, u) -> (i', u')` of `[k] × C_{/c}`, lying
/// over `f` with `f ; u' = u`. Endpoints index [`SliceGrid::objects`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridMorphism {
    pub source: usize,
    pub target: usize,
    pub f: usize,
}

/// The category `[k] × C_{/c}` with its composable pairs.
#[derive(Clone, Debug)]
pub struct SliceGrid {
    pub k: usize,
    /// `(i, u)` with `u : c' -> c`.
    pub objects: Vec<(usize, usize)>,
    pub morphisms: Vec<GridMorphism>,
    object_index: HashMap<(usize, usize), usize>,
    morphism_index: HashMap<GridMorphism, usize>,
    /// `(m1, m2, m1;m2)` with `None` for an identity composite.
    pairs: Vec<(usize, usize, Option<usize>)>,
}

impl SliceGrid {
    pub fn new(c: &PosetEnriched2Cat, over: usize, k: usize) -> Self {
        let slice: Vec<usize> = c.objects().iter().flat_map(|x| c.hom(x, &over)).collect();
        let objects: Vec<(usize, usize)> = (0..=k).flat_map(|i| slice.iter().map(move |&u| (i, u))).collect();
        let object_index: HashMap<(usize, usize), usize> = objects.iter().enumerate().map(|(p, &o)| (o, p)).collect();
        let mut morphisms = Vec::new();
        for (s, &(i, u)) in objects.iter().enumerate() {
            for (t, &(i2, u2)) in objects.iter().enumerate() {
                if i > i2 {
                    continue;
                }
                for f in c.hom(&c.source(&u), &c.source(&u2)) {
                    if c.compose(&f, &u2) == u && !(s == t && f == c.source(&u)) {
                        morphisms.push(GridMorphism { source: s, target: t, f });
                    }
                }
            }
        }
        let morphism_index: HashMap<GridMorphism, usize> = morphisms.iter().enumerate().map(|(p, &m)| (m, p)).collect();
        let mut pairs = Vec::new();
        for (a, m1) in morphisms.iter().enumerate() {
            for (b, m2) in morphisms.iter().enumerate() {
                if m1.target != m2.source {
                    continue;
                }
                let composite = GridMorphism { source: m1.source, target: m2.target, f: c.compose(&m1.f, &m2.f) };
                pairs.push((a, b, morphism_index.get(&composite).copied()));
            }
        }
        Self { k, objects, morphisms, object_index, morphism_index, pairs }
    }

    pub fn object(&self, i: usize, u: usize) -> usize {
        self.object_index[&(i, u)]
    }

    /// `None` for an identity.
    pub fn morphism(&self, source: usize, target: usize, f: usize) -> Option<usize> {
        self.morphism_index.get(&GridMorphism { source, target, f }).copied()
    }

    /// Morphisms inside one copy of the slice.
    pub fn is_slice_edge(&self, m: &GridMorphism) -> bool {
        self.objects[m.source].0 == self.objects[m.target].0
    }
}

/// A map `[k] × C_{/c} -> X` over `C`: images of objects (vertices of `X`)
/// and of non-identity morphisms (edges of `X`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GammaSimplex {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

pub struct GammaModel<'a> {
    x: &'a FiberedSimplicialSet,
    grids: Vec<SliceGrid>,
    triangles: HashMap<(usize, usize, usize), usize>,
    edges_between: HashMap<(usize, usize), Vec<usize>>,
}

impl<'a> GammaModel<'a> {
    pub fn new(x: &'a FiberedSimplicialSet, c: usize, max: usize) -> Result<Self> {
        let total = &x.total;
        if total.truncation() < 2 {
            return Err(Error::Precondition("Γ reads 2-simplices; the total space must reach level 2".into()));
        }
        if !x.base_category.is_discrete() {
            return Err(Error::Precondition("Γ needs a base 1-category".into()));
        }
        let mut triangles = HashMap::new();
        for t in 0..total.count(2) {
            let key = (total.face(2, t, 2), total.face(2, t, 0), total.face(2, t, 1));
            if triangles.insert(key, t).is_some() {
                return Err(Error::Precondition("two 2-simplices share a boundary; Γ is only computed for such X".into()));
            }
        }
        let mut edges_between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for e in 0..total.count(1) {
            edges_between.entry((total.face(1, e, 1), total.face(1, e, 0))).or_default().push(e);
        }
        let grids = (0..=max).map(|k| SliceGrid::new(&x.base_category, c, k)).collect();
        Ok(Self { x, grids, triangles, edges_between })
    }

    pub fn grid(&self, k: usize) -> &SliceGrid {
        &self.grids[k]
    }

    fn degenerate(&self, v: usize) -> usize {
        self.x.total.degeneracy(0, v, 0)
    }

    fn edge_image(&self, s: &GammaSimplex, m: Option<usize>, object: usize) -> usize {
        match m {
            Some(m) => s.edges[m],
            None => self.degenerate(s.vertices[object]),
        }
    }
}

struct GammaSearch<'a, 'b> {
    model: &'b GammaModel<'a>,
    grid: &'b SliceGrid,
    /// pair constraints keyed by the largest morphism index involved
    checks: Vec<Vec<(usize, usize, Option<usize>)>>,
    vertex_choices: Vec<Vec<usize>>,
    base_edges: Vec<usize>,
}

impl GammaSearch<'_, '_> {
    fn vertices(&self, p: usize, current: &mut GammaSimplex, out: &mut Vec<GammaSimplex>, budget: &mut Budget) -> Result<()> {
        if p == self.grid.objects.len() {
            return self.edges(0, current, out, budget);
        }
        for &v in &self.vertex_choices[p] {
            current.vertices[p] = v;
            self.vertices(p + 1, current, out, budget)?;
        }
        Ok(())
    }

    fn edges(&self, m: usize, current: &mut GammaSimplex, out: &mut Vec<GammaSimplex>, budget: &mut Budget) -> Result<()> {
        if m == self.grid.morphisms.len() {
            budget.charge(1)?;
            out.push(current.clone());
            return Ok(());
        }
        let x = self.model.x;
        let gm = self.grid.morphisms[m];
        let ends = (current.vertices[gm.source], current.vertices[gm.target]);
        let marked = self.grid.is_slice_edge(&gm);
        let Some(candidates) = self.model.edges_between.get(&ends) else { return Ok(()) };
        for &e in candidates {
            if x.projection.apply(1, e) != self.base_edges[m] || (marked && !x.total.is_marked(e)) {
                continue;
            }
            current.edges[m] = e;
            let ok = self.checks[m].iter().all(|&(a, b, h)| {
                let composite = self.model.edge_image(current, h, self.grid.morphisms[a].source);
                self.model.triangles.contains_key(&(current.edges[a], current.edges[b], composite))
            });
            if ok {
                self.edges(m + 1, current, out, budget)?;
            }
        }
        Ok(())
    }
}

impl SimplicialModel for GammaModel<'_> {
    type Simplex = GammaSimplex;

    fn simplices(&self, k: usize, _lower: &[Vec<GammaSimplex>], budget: &mut Budget) -> Result<Vec<GammaSimplex>> {
        let grid = &self.grids[k];
        let x = self.x;
        let c = &x.base_category;
        let mut vertex_choices = Vec::with_capacity(grid.objects.len());
        for &(_, u) in &grid.objects {
            let b = x.constant_base_simplex(0, c.source(&u)).expect("base vertex");
            vertex_choices.push((0..x.total.count(0)).filter(|&v| x.projection.apply(0, v) == b).collect());
        }
        let base_edges = grid.morphisms.iter().map(|m| x.base_edge(m.f).expect("base edge")).collect();
        let mut checks = vec![Vec::new(); grid.morphisms.len()];
        for &(a, b, h) in &grid.pairs {
            checks[a.max(b).max(h.unwrap_or(0))].push((a, b, h));
        }
        let search = GammaSearch { model: self, grid, checks, vertex_choices, base_edges };
        let mut current = GammaSimplex { vertices: vec![0; grid.objects.len()], edges: vec![0; grid.morphisms.len()] };
        let mut out = Vec::new();
        search.vertices(0, &mut current, &mut out, budget)?;
        Ok(out)
    }

    /// Precomposition with `a × id`.
    fn pullback(&self, s: &GammaSimplex, a: &MonotoneMap) -> GammaSimplex {
        let (small, large) = (&self.grids[a.source_dim()], &self.grids[a.target_dim()]);
        let place: Vec<usize> = small.objects.iter().map(|&(i, u)| large.object(a.apply(i), u)).collect();
        let vertices = place.iter().map(|&p| s.vertices[p]).collect();
        let edges = small
            .morphisms
            .iter()
            .map(|m| {
                let (p, q) = (place[m.source], place[m.target]);
                self.edge_image(s, large.morphism(p, q, m.f), p)
            })
            .collect();
        GammaSimplex { vertices, edges }
    }

    fn label(&self, s: &GammaSimplex) -> String {
        let t = &self.x.total;
        let vs: Vec<&str> = s.vertices.iter().map(|&v| t.label(0, v)).collect();
        let es: Vec<&str> = s.edges.iter().map(|&e| t.label(1, e)).collect();
        format!("[{}] [{}]", vs.join("; "), es.join("; "))
    }
}

/// `Γ(X)(c)`: the mapping object, up to level `max <= 2`.
pub struct Gamma {
    pub model: Materialized<GammaSimplex>,
    pub grids: Vec<SliceGrid>,
}

impl Gamma {
    pub fn set(&self) -> &TruncSimplicialSet {
        &self.model.set
    }
}

pub fn gamma(x: &FiberedSimplicialSet, c: usize, max: usize, budget: &mut Budget) -> Result<Gamma> {
    if max > 2 {
        return Err(Error::Precondition(format!("mapping spaces are enumerated to dimension 2, not {max}")));
    }
    let model = GammaModel::new(x, c, max)?;
    let set = materialize(&model, max, budget)?;
    Ok(Gamma { model: set, grids: model.grids })
}

/// `η : N(F(c)) -> Γ(χ(F))(c)`.
pub struct Eta {
    pub nerve: Materialized<NerveSimplex<usize, usize>>,
    pub map: SimplicialSetMap,
}

pub fn eta(f: &CatValuedFunctor, x: &Chi, g: &Gamma, c: usize, budget: &mut Budget) -> Result<Eta> {
    let base = f.base();
    let max = g.set().truncation();
    let nerve = crate::twocat::scaled_nerve_model(f.fiber(c), max, budget)?;
    let mut levels = Vec::with_capacity(max + 1);
    for (k, lv) in nerve.simplices.iter().enumerate() {
        let grid = &g.grids[k];
        let mut out = Vec::with_capacity(lv.len());
        for s in lv {
            let chain = |i: usize, j: usize| if i == j { s.objects[i] } else { *s.edge(i, j) };
            let mut vertices = Vec::with_capacity(grid.objects.len());
            for &(i, u) in &grid.objects {
                let v = ChiSimplex {
                    base: NerveSimplex { objects: vec![base.source(&u)], edges: Vec::new() },
                    y: vec![f.on_object(u, s.objects[i])],
                    g: Vec::new(),
                };
                vertices.push(x.model.lookup(0, &v).ok_or_else(|| Error::Invalid("η: vertex missing from χ".into()))?);
            }
            let mut edges = Vec::with_capacity(grid.morphisms.len());
            for m in &grid.morphisms {
                let ((i, u), (i2, u2)) = (grid.objects[m.source], grid.objects[m.target]);
                let e = ChiSimplex {
                    base: NerveSimplex { objects: vec![base.source(&m.f), base.target(&m.f)], edges: vec![m.f] },
                    y: vec![f.on_object(u, s.objects[i]), f.on_object(u2, s.objects[i2])],
                    g: vec![f.on_morphism(u, chain(i, i2))],
                };
                edges.push(x.model.lookup(1, &e).ok_or_else(|| Error::Invalid("η: edge missing from χ".into()))?);
            }
            let image = GammaSimplex { vertices, edges };
            out.push(g.model.lookup(k, &image).ok_or_else(|| Error::Invalid("η: image is not a simplex of Γ".into()))?);
        }
        levels.push(out);
    }
    Ok(Eta { nerve, map: SimplicialSetMap { levels } })
}

/// `ev_c : Γ(χ(F))(c) -> χ(F)_c`, restriction along `id_c`, landing in the
/// fiber as indexed by `comparison`.
pub fn ev(x: &Chi, g: &Gamma, c: usize, comparison: &FiberComparison) -> Result<SimplicialSetMap> {
    let max = g.set().truncation();
    let mut position: Vec<HashMap<usize, usize>> = Vec::with_capacity(max + 1);
    for lv in comparison.inclusion.levels.iter().take(max + 1) {
        position.push(lv.iter().enumerate().map(|(p, &t)| (t, p)).collect());
    }
    let mut levels = Vec::with_capacity(max + 1);
    for (k, lv) in g.model.simplices.iter().enumerate() {
        let grid = &g.grids[k];
        let mut out = Vec::with_capacity(lv.len());
        for s in lv {
            let at = |i: usize| grid.object(i, c);
            let vertex = |i: usize| &x.model.simplices[0][s.vertices[at(i)]];
            let edge = |i: usize, j: usize| &x.model.simplices[1][s.edges[grid.morphism(at(i), at(j), c).expect("non-identity")]];
            let y = (0..=k).map(|i| vertex(i).y[0]).collect();
            let mut gs = Vec::new();
            for i in 0..k {
                for j in i + 1..=k {
                    gs.push(edge(i, j).g[0]);
                }
            }
            let simplex = ChiSimplex { base: NerveSimplex { objects: vec![c; k + 1], edges: vec![c; k * (k + 1) / 2] }, y, g: gs };
            let t = x.model.lookup(k, &simplex).ok_or_else(|| Error::Invalid("ev: restriction is not a simplex of χ".into()))?;
            out.push(*position[k].get(&t).ok_or_else(|| Error::Invalid("ev: restriction leaves the fiber".into()))?);
        }
        levels.push(out);
    }
    Ok(SimplicialSetMap { levels })
}

/// Result of checking `ev_c ∘ η = id` on `N(F(c))`.
#[derive(Clone, Debug, serde::Serialize)]
pub struct EtaEvCheck {
    pub c: usize,
    pub gamma_counts: Vec<usize>,
    pub nerve_counts: Vec<usize>,
    /// `(level, nerve simplex)` where the composite is not the identity.
    pub failures: Vec<(usize, String)>,
}

impl EtaEvCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Builds `χ(F)`, `Γ(χ(F))(c)`, `η` and `ev_c`, checks that both are
/// simplicial, that `η` sends slice edges to marked edges, and compares
/// `ev_c ∘ η` with the identity through the fiber identification.
pub fn check_eta_ev(f: &CatValuedFunctor, c: usize, max: usize, budget: &mut Budget) -> Result<EtaEvCheck> {
    let x = chi(f, max.max(2), budget)?;
    let g = gamma(&x.fibered, c, max, budget)?;
    let e = eta(f, &x, &g, c, budget)?;
    e.map.check(&e.nerve.set, g.set(), false).map_err(|m| Error::Invalid(format!("η is not simplicial: {m}")))?;
    let comparison = fiber_comparison(f, &x, c, budget)?;
    comparison.check().map_err(Error::Invalid)?;
    let evc = ev(&x, &g, c, &comparison)?;
    let fiber_trunc = comparison.fiber.truncate(max)?;
    evc.check(g.set(), &fiber_trunc, false).map_err(|m| Error::Invalid(format!("ev is not simplicial: {m}")))?;
    let composite = e.map.then(&evc);
    let mut failures = Vec::new();
    for (k, lv) in composite.levels.iter().enumerate() {
        for (s, &t) in lv.iter().enumerate() {
            if comparison.to_nerve.apply(k, t) != s {
                failures.push((k, e.nerve.set.label(k, s).to_string()));
            }
        }
    }
    Ok(EtaEvCheck { c, gamma_counts: g.set().counts(), nerve_counts: e.nerve.set.counts(), failures })
}

