use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::sset::Budget;
use crate::twocat::{check_two_functor, PosetEnriched2Cat, TwoCategory};

/// A functor between two tabulated categories, as index tables. `morphisms`
/// covers identities too.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctorData {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl FunctorData {
    pub fn identity(c: &PosetEnriched2Cat) -> Self {
        Self { objects: (0..c.object_count()).collect(), morphisms: (0..c.morphisms().len()).collect() }
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &FunctorData) -> Self {
        Self {
            objects: self.objects.iter().map(|&y| next.objects[y]).collect(),
            morphisms: self.morphisms.iter().map(|&m| next.morphisms[m]).collect(),
        }
    }

    pub fn check(&self, source: &PosetEnriched2Cat, target: &PosetEnriched2Cat) -> std::result::Result<(), String> {
        if self.objects.len() != source.object_count() || self.morphisms.len() != source.morphisms().len() {
            return Err("functor tables do not match the source category".into());
        }
        if self.objects.iter().any(|&y| y >= target.object_count()) || self.morphisms.iter().any(|&m| m >= target.morphisms().len()) {
            return Err("functor table points outside the target category".into());
        }
        check_two_functor(source, target, |&x| self.objects[x], |&f| self.morphisms[f])
    }
}

/// Whether `m` has a two-sided inverse in `c`.
pub fn is_iso(c: &PosetEnriched2Cat, m: usize) -> bool {
    let (x, y) = (c.source(&m), c.target(&m));
    c.hom(&y, &x).into_iter().any(|n| c.compose(&m, &n) == x && c.compose(&n, &m) == y)
}

/// Every functor `source -> target`, optionally with some object images
/// prescribed. Results are in lexicographic order of the tables.
pub fn enumerate_functors(
    source: &PosetEnriched2Cat,
    target: &PosetEnriched2Cat,
    fixed: &[Option<usize>],
    budget: &mut Budget,
) -> Result<Vec<FunctorData>> {
    let n = source.object_count();
    let total = source.morphisms().len();
    // composition constraints, keyed by the largest index involved
    let mut checks: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); total];
    for (f, g, h) in source.composition_table() {
        checks[f.max(g).max(h)].push((f, g, h));
    }
    let mut objects = vec![0; n];
    let mut out = Vec::new();
    let mut search = FunctorSearch { source, target, fixed, checks, out: &mut out, budget };
    search.objects(0, &mut objects)?;
    Ok(out)
}

struct FunctorSearch<'a> {
    source: &'a PosetEnriched2Cat,
    target: &'a PosetEnriched2Cat,
    fixed: &'a [Option<usize>],
    checks: Vec<Vec<(usize, usize, usize)>>,
    out: &'a mut Vec<FunctorData>,
    budget: &'a mut Budget,
}

impl FunctorSearch<'_> {
    fn objects(&mut self, x: usize, objects: &mut Vec<usize>) -> Result<()> {
        let n = self.source.object_count();
        if x == n {
            let mut morphisms = objects.clone();
            morphisms.resize(self.source.morphisms().len(), 0);
            return self.morphisms(n, objects, &mut morphisms);
        }
        let choices: Vec<usize> = match self.fixed.get(x).copied().flatten() {
            Some(y) => vec![y],
            None => (0..self.target.object_count()).collect(),
        };
        for y in choices {
            objects[x] = y;
            self.objects(x + 1, objects)?;
        }
        Ok(())
    }

    fn morphisms(&mut self, f: usize, objects: &[usize], morphisms: &mut Vec<usize>) -> Result<()> {
        if f == morphisms.len() {
            self.budget.charge(1)?;
            self.out.push(FunctorData { objects: objects.to_vec(), morphisms: morphisms.clone() });
            return Ok(());
        }
        let (s, t) = (self.source.source(&f), self.source.target(&f));
        for g in self.target.hom(&objects[s], &objects[t]) {
            morphisms[f] = g;
            let ok = self.checks[f].iter().all(|&(a, b, c)| self.target.compose(&morphisms[a], &morphisms[b]) == morphisms[c]);
            if ok {
                self.morphisms(f + 1, objects, morphisms)?;
            }
        }
        Ok(())
    }
}

/// A strict functor `F : C^op -> Cat` into finite categories, where `C` is
/// poset-enriched. `F(f) : F(target f) -> F(source f)`, and a 2-cell
/// `g ≤ h` of `C` carries a natural transformation `F(h) ⇒ F(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatValuedFunctor {
    base: PosetEnriched2Cat,
    fibers: Vec<PosetEnriched2Cat>,
    transitions: Vec<FunctorData>,
    /// `(lower, upper)` to the components, indexed by objects of `F(target)`.
    cells: BTreeMap<(usize, usize), Vec<usize>>,
}

impl CatValuedFunctor {
    /// `transitions` covers the non-identity morphisms of `base` in order.
    pub fn new(
        base: PosetEnriched2Cat,
        fibers: Vec<PosetEnriched2Cat>,
        transitions: Vec<FunctorData>,
        cells: BTreeMap<(usize, usize), Vec<usize>>,
    ) -> Result<Self> {
        let n = base.object_count();
        if fibers.len() != n {
            return Err(Error::Shape(format!("{} fibers for {n} base objects", fibers.len())));
        }
        if transitions.len() + n != base.morphisms().len() {
            return Err(Error::Shape(format!("{} transition functors for {} non-identity morphisms", transitions.len(), base.morphisms().len() - n)));
        }
        if let Some(x) = fibers.iter().position(|f| !f.is_discrete()) {
            return Err(Error::Invalid(format!("fiber over {} has 2-cells", base.object_names()[x])));
        }
        let mut all: Vec<FunctorData> = fibers.iter().map(FunctorData::identity).collect();
        all.extend(transitions);
        let f = Self { base, fibers, transitions: all, cells };
        f.validate().map_err(Error::Invalid)?;
        Ok(f)
    }

    /// `F(c) = fiber` for every `c`, every transition the identity.
    pub fn constant(base: PosetEnriched2Cat, fiber: PosetEnriched2Cat) -> Result<Self> {
        let n = base.object_count();
        let transitions = vec![FunctorData::identity(&fiber); base.morphisms().len() - n];
        let cells = base.order_pairs().into_iter().map(|p| (p, (0..fiber.object_count()).collect())).collect();
        Self::new(base, vec![fiber; n], transitions, cells)
    }

    fn validate(&self) -> std::result::Result<(), String> {
        let b = &self.base;
        for f in 0..b.morphisms().len() {
            let (x, y) = (b.source(&f), b.target(&f));
            self.transitions[f].check(&self.fibers[y], &self.fibers[x]).map_err(|e| format!("F({}): {e}", b.mor_label(&f)))?;
        }
        for f in 0..b.morphisms().len() {
            for g in b.objects().iter().flat_map(|z| b.hom(&b.target(&f), z)) {
                let expected = self.transitions[g].then(&self.transitions[f]);
                if self.transitions[b.compose(&f, &g)] != expected {
                    return Err(format!("F({};{}) differs from F({}) after F({})", b.mor_label(&f), b.mor_label(&g), b.mor_label(&f), b.mor_label(&g)));
                }
            }
        }
        let pairs = b.order_pairs();
        for key in self.cells.keys() {
            if !pairs.contains(key) {
                return Err(format!("component data for a non-relation {} ≤ {}", b.mor_label(&key.0), b.mor_label(&key.1)));
            }
        }
        for &(lo, up) in &pairs {
            let comps = self.cells.get(&(lo, up)).ok_or_else(|| format!("missing 2-cell data for {} ≤ {}", b.mor_label(&lo), b.mor_label(&up)))?;
            let (x, y) = (b.source(&lo), b.target(&lo));
            let (src, tgt) = (&self.fibers[y], &self.fibers[x]);
            if comps.len() != src.object_count() {
                return Err("2-cell components do not cover the fiber".into());
            }
            for z in 0..src.object_count() {
                let m = comps[z];
                if m >= tgt.morphisms().len() || tgt.source(&m) != self.on_object(up, z) || tgt.target(&m) != self.on_object(lo, z) {
                    return Err(format!("component at {} has the wrong endpoints", src.obj_label(&z)));
                }
            }
            for m in 0..src.morphisms().len() {
                let (z, z2) = (src.source(&m), src.target(&m));
                if tgt.compose(&self.on_morphism(up, m), &comps[z2]) != tgt.compose(&comps[z], &self.on_morphism(lo, m)) {
                    return Err(format!("2-cell {} ≤ {} is not natural at {}", b.mor_label(&lo), b.mor_label(&up), src.mor_label(&m)));
                }
            }
        }
        // vertical composition and whiskering
        let hom_pairs = |x: usize, y: usize| -> Vec<(usize, usize)> {
            let h = b.hom(&x, &y);
            h.iter().flat_map(|&f| h.iter().filter(move |&&g| b.leq(&f, &g)).map(move |&g| (f, g))).collect()
        };
        for x in b.objects() {
            for y in b.objects() {
                let rel = hom_pairs(x, y);
                for &(f, g) in &rel {
                    for &(g2, h) in &rel {
                        if g2 != g {
                            continue;
                        }
                        for z in 0..self.fibers[y].object_count() {
                            let want = self.fibers[x].compose(&self.theta(g, h, z), &self.theta(f, g, z));
                            if self.theta(f, h, z) != want {
                                return Err("2-cell data do not compose vertically".into());
                            }
                        }
                    }
                    for w in b.objects() {
                        for k in b.hom(&w, &x) {
                            let (kf, kg) = (b.compose(&k, &f), b.compose(&k, &g));
                            for z in 0..self.fibers[y].object_count() {
                                if self.theta(kf, kg, z) != self.on_morphism(k, self.theta(f, g, z)) {
                                    return Err(format!("2-cell data are not compatible with precomposition by {}", b.mor_label(&k)));
                                }
                            }
                        }
                        for h in b.hom(&y, &w) {
                            let (fh, gh) = (b.compose(&f, &h), b.compose(&g, &h));
                            for z in 0..self.fibers[w].object_count() {
                                if self.theta(fh, gh, z) != self.theta(f, g, self.on_object(h, z)) {
                                    return Err(format!("2-cell data are not compatible with postcomposition by {}", b.mor_label(&h)));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &PosetEnriched2Cat {
        &self.base
    }

    pub fn fiber(&self, c: usize) -> &PosetEnriched2Cat {
        &self.fibers[c]
    }

    pub fn fibers(&self) -> &[PosetEnriched2Cat] {
        &self.fibers
    }

    /// `F(f)` for any morphism of the base, identities included.
    pub fn transition(&self, f: usize) -> &FunctorData {
        &self.transitions[f]
    }

    pub fn cells(&self) -> &BTreeMap<(usize, usize), Vec<usize>> {
        &self.cells
    }

    pub fn on_object(&self, f: usize, y: usize) -> usize {
        self.transitions[f].objects[y]
    }

    pub fn on_morphism(&self, f: usize, m: usize) -> usize {
        self.transitions[f].morphisms[m]
    }

    /// The component at `z` of `F(upper) ⇒ F(lower)`; an identity when
    /// `lower == upper`.
    pub fn theta(&self, lower: usize, upper: usize, z: usize) -> usize {
        if lower == upper {
            return self.on_object(lower, z);
        }
        self.cells[&(lower, upper)][z]
    }
}

/// Levelwise functors `φ_c : F(c) -> G(c)` commuting with every transition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelwiseFunctor {
    pub components: Vec<FunctorData>,
}

impl LevelwiseFunctor {
    pub fn check(&self, from: &CatValuedFunctor, to: &CatValuedFunctor) -> std::result::Result<(), String> {
        let b = from.base();
        if b != to.base() || self.components.len() != b.object_count() {
            return Err("levelwise functor between functors on different bases".into());
        }
        for c in 0..b.object_count() {
            self.components[c].check(from.fiber(c), to.fiber(c))?;
        }
        for f in 0..b.morphisms().len() {
            let (x, y) = (b.source(&f), b.target(&f));
            let left = from.transition(f).then(&self.components[x]);
            let right = self.components[y].then(to.transition(f));
            if left != right {
                return Err(format!("components do not commute with F({})", b.mor_label(&f)));
            }
        }
        for (&(lo, up), comps) in from.cells() {
            let y = b.target(&lo);
            let x = b.source(&lo);
            for (z, &m) in comps.iter().enumerate() {
                if self.components[x].morphisms[m] != to.theta(lo, up, self.components[y].objects[z]) {
                    return Err("components do not respect the 2-cell data".into());
                }
            }
        }
        Ok(())
    }
}

/// Index lookups for the objects and morphisms of a tabulated category by
/// name.
pub(crate) fn name_index(c: &PosetEnriched2Cat) -> (HashMap<String, usize>, HashMap<String, usize>) {
    let objects = c.object_names().iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
    let morphisms = c.morphisms().iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
    (objects, morphisms)
}
