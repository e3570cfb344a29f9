use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write;

use super::{check_two_category, TwoCategory};
use crate::error::{Error, Result};
use crate::sset::dot_id;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismRecord {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite 2-category stored as tables. Morphism `x` for `x < objects.len()`
/// is the identity of object `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetEnriched2Cat {
    objects: Vec<String>,
    morphisms: Vec<MorphismRecord>,
    composition: HashMap<(usize, usize), usize>,
    /// `above[f]` holds every `g` with `f ≤ g`, including `f`.
    above: Vec<BTreeSet<usize>>,
}

impl PosetEnriched2Cat {
    /// `morphisms` lists the non-identity morphisms; `compositions` must
    /// cover every composable pair of them. `order` generates the hom orders.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<MorphismRecord>,
        compositions: &[(usize, usize, usize)],
        order: &[(usize, usize)],
    ) -> Result<Self> {
        let n = objects.len();
        let distinct: BTreeSet<&String> = objects.iter().collect();
        if distinct.len() != n {
            return Err(Error::Invalid("object names must be distinct".into()));
        }
        let mut all: Vec<MorphismRecord> =
            (0..n).map(|x| MorphismRecord { name: format!("id_{}", objects[x]), source: x, target: x }).collect();
        for m in morphisms {
            if m.source >= n || m.target >= n {
                return Err(Error::Index(format!("morphism {} has an unknown endpoint", m.name)));
            }
            all.push(m);
        }
        let names: BTreeSet<&String> = all.iter().map(|m| &m.name).collect();
        if names.len() != all.len() {
            return Err(Error::Invalid("morphism names must be distinct (identities are named id_<object>)".into()));
        }
        let total = all.len();
        let mut composition = HashMap::new();
        for f in 0..total {
            composition.insert((all[f].source, f), f);
            composition.insert((f, all[f].target), f);
        }
        for &(f, g, h) in compositions {
            if f >= total || g >= total || h >= total {
                return Err(Error::Index("composition refers to an unknown morphism".into()));
            }
            if all[f].target != all[g].source || all[h].source != all[f].source || all[h].target != all[g].target {
                return Err(Error::Invalid(format!("composite {};{} = {} has mismatched endpoints", all[f].name, all[g].name, all[h].name)));
            }
            if let Some(&old) = composition.get(&(f, g)) {
                if old != h {
                    return Err(Error::Invalid(format!("composite {};{} given twice", all[f].name, all[g].name)));
                }
            }
            composition.insert((f, g), h);
        }
        for f in n..total {
            for g in n..total {
                if all[f].target == all[g].source && !composition.contains_key(&(f, g)) {
                    return Err(Error::Invalid(format!("composite {};{} is missing", all[f].name, all[g].name)));
                }
            }
        }
        let mut above: Vec<BTreeSet<usize>> = (0..total).map(|f| BTreeSet::from([f])).collect();
        for &(f, g) in order {
            if f >= total || g >= total {
                return Err(Error::Index("order refers to an unknown morphism".into()));
            }
            if all[f].source != all[g].source || all[f].target != all[g].target {
                return Err(Error::Invalid(format!("2-cell {} ⇒ {} between non-parallel morphisms", all[f].name, all[g].name)));
            }
            above[f].insert(g);
        }
        // transitive closure
        loop {
            let mut changed = false;
            for f in 0..total {
                let reach: BTreeSet<usize> = above[f].iter().flat_map(|&g| above[g].iter().copied()).collect();
                if reach.len() > above[f].len() {
                    above[f] = reach;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let c = Self { objects, morphisms: all, composition, above };
        check_two_category(&c).map_err(Error::Invalid)?;
        Ok(c)
    }

    /// A 1-category: every hom poset discrete.
    pub fn category(objects: Vec<String>, morphisms: Vec<MorphismRecord>, compositions: &[(usize, usize, usize)]) -> Result<Self> {
        Self::new(objects, morphisms, compositions, &[])
    }

    /// The linear order `[n]` as a 1-category, morphisms named `ij`.
    pub fn interval(n: usize) -> Self {
        let objects = (0..=n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut id = BTreeMap::new();
        for i in 0..=n {
            for j in i + 1..=n {
                id.insert((i, j), n + 1 + morphisms.len());
                morphisms.push(MorphismRecord { name: format!("{i}{j}"), source: i, target: j });
            }
        }
        let mut comps = Vec::new();
        for (&(i, j), &f) in &id {
            for (&(j2, k), &g) in &id {
                if j == j2 {
                    comps.push((f, g, id[&(i, k)]));
                }
            }
        }
        Self::category(objects, morphisms, &comps).expect("interval is a category")
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[MorphismRecord] {
        &self.morphisms
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn is_discrete(&self) -> bool {
        self.above.iter().all(|a| a.len() == 1)
    }

    /// Non-identity composable pairs with their composite.
    pub fn composition_table(&self) -> Vec<(usize, usize, usize)> {
        let n = self.objects.len();
        let mut out: Vec<(usize, usize, usize)> =
            self.composition.iter().filter(|((f, g), _)| *f >= n && *g >= n).map(|(&(f, g), &h)| (f, g, h)).collect();
        out.sort_unstable();
        out
    }

    /// Strict relations `f < g`.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (f, a) in self.above.iter().enumerate() {
            out.extend(a.iter().filter(|&&g| g != f).map(|&g| (f, g)));
        }
        out
    }

    /// The underlying 1-category.
    pub fn discard_two_cells(&self) -> Self {
        Self { above: (0..self.morphisms.len()).map(|f| BTreeSet::from([f])).collect(), ..self.clone() }
    }

    /// Objects and non-identity morphisms.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", dot_id(name)).unwrap();
        for (x, o) in self.objects.iter().enumerate() {
            writeln!(out, "  o{x} [label={}];", dot_id(o)).unwrap();
        }
        for m in &self.morphisms[self.objects.len()..] {
            writeln!(out, "  o{} -> o{} [label={}];", m.source, m.target, dot_id(&m.name)).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl TwoCategory for PosetEnriched2Cat {
    type Obj = usize;
    type Mor = usize;

    fn objects(&self) -> Vec<usize> {
        (0..self.objects.len()).collect()
    }
    fn hom(&self, x: &usize, y: &usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&f| self.morphisms[f].source == *x && self.morphisms[f].target == *y).collect()
    }
    fn source(&self, f: &usize) -> usize {
        self.morphisms[*f].source
    }
    fn target(&self, f: &usize) -> usize {
        self.morphisms[*f].target
    }
    fn identity(&self, x: &usize) -> usize {
        *x
    }
    fn compose(&self, f: &usize, g: &usize) -> usize {
        self.composition[&(*f, *g)]
    }
    fn leq(&self, f: &usize, g: &usize) -> bool {
        self.above[*f].contains(g)
    }
    fn obj_label(&self, x: &usize) -> String {
        self.objects[*x].clone()
    }
    fn mor_label(&self, f: &usize) -> String {
        self.morphisms[*f].name.clone()
    }
}

/// Tabulates any finite 2-category. Labels become names, made unique by a
/// `#k` suffix when they collide.
pub fn materialize<C: TwoCategory>(c: &C) -> Result<PosetEnriched2Cat> {
    let objects = c.objects();
    let obj_index: HashMap<&C::Obj, usize> = objects.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut names = BTreeSet::new();
    let object_names: Vec<String> = objects.iter().map(|x| unique(&mut names, c.obj_label(x))).collect();
    let mut mor_index: HashMap<C::Mor, usize> = HashMap::new();
    for (i, x) in objects.iter().enumerate() {
        mor_index.insert(c.identity(x), i);
        names.insert(format!("id_{}", object_names[i]));
    }
    let mut records = Vec::new();
    let mut list: Vec<C::Mor> = objects.iter().map(|x| c.identity(x)).collect();
    for x in &objects {
        for y in &objects {
            for f in c.hom(x, y) {
                if mor_index.contains_key(&f) {
                    continue;
                }
                mor_index.insert(f.clone(), list.len());
                records.push(MorphismRecord { name: unique(&mut names, c.mor_label(&f)), source: obj_index[x], target: obj_index[y] });
                list.push(f);
            }
        }
    }
    let n = objects.len();
    let mut comps = Vec::new();
    let mut order = Vec::new();
    for (fi, f) in list.iter().enumerate().skip(n) {
        let (x, y) = (c.source(f), c.target(f));
        for z in &objects {
            for g in c.hom(&y, z) {
                let gi = mor_index[&g];
                if gi >= n {
                    let h = c.compose(f, &g);
                    let hi = *mor_index.get(&h).ok_or_else(|| Error::Invalid("composite outside the listed homs".into()))?;
                    comps.push((fi, gi, hi));
                }
            }
        }
        for g in c.hom(&x, &y) {
            if &g != f && c.leq(f, &g) {
                order.push((fi, mor_index[&g]));
            }
        }
    }
    for (i, x) in objects.iter().enumerate() {
        for g in c.hom(x, x) {
            if mor_index[&g] != i && c.leq(&c.identity(x), &g) {
                order.push((i, mor_index[&g]));
            }
            if mor_index[&g] != i && c.leq(&g, &c.identity(x)) {
                order.push((mor_index[&g], i));
            }
        }
    }
    PosetEnriched2Cat::new(object_names, records, &comps, &order)
}

fn unique(names: &mut BTreeSet<String>, s: String) -> String {
    let mut name = s.clone();
    let mut k = 1;
    while !names.insert(name.clone()) {
        name = format!("{s}#{k}");
        k += 1;
    }
    name
}
