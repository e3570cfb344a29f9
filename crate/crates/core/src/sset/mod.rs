//! Truncated simplicial sets with optional markings (distinguished edges and
//! thin 2-simplices), materialized from a combinatorial model.

mod dot;

pub(crate) use dot::dot_id;

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplexcat::{Generator, MonotoneMap};

/// Caps the total number of simplices an enumeration may produce.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: usize,
    used: usize,
}

impl Budget {
    pub fn new(limit: usize) -> Self {
        Self { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(usize::MAX)
    }

    pub fn charge(&mut self, k: usize) -> Result<()> {
        self.used = self.used.saturating_add(k);
        if self.used > self.limit {
            return Err(Error::Budget { budget: self.limit });
        }
        Ok(())
    }

    pub fn used(&self) -> usize {
        self.used
    }

    pub fn limit(&self) -> usize {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(200_000)
    }
}

/// A simplicial set given by its simplices and the action of monotone maps.
pub trait SimplicialModel {
    type Simplex: Clone + Eq + Hash;

    /// All `n`-simplices. `lower` holds the already enumerated levels below `n`.
    fn simplices(&self, n: usize, lower: &[Vec<Self::Simplex>], budget: &mut Budget) -> Result<Vec<Self::Simplex>>;

    /// `f^* x` for `f : [m] -> [n]` and `x` an `n`-simplex.
    fn pullback(&self, x: &Self::Simplex, f: &MonotoneMap) -> Self::Simplex;

    fn label(&self, x: &Self::Simplex) -> String;

    fn is_marked_edge(&self, _x: &Self::Simplex) -> bool {
        false
    }

    fn is_thin(&self, _x: &Self::Simplex) -> bool {
        false
    }
}

/// Face and degeneracy tables up to the truncation level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncSimplicialSet {
    truncation: usize,
    labels: Vec<Vec<String>>,
    /// `faces[n][x][i]` for `n >= 1`; `faces[0]` is empty per simplex.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][x][i]` for `n < truncation`.
    degeneracies: Vec<Vec<Vec<usize>>>,
    marked_edges: BTreeSet<usize>,
    thin_triangles: BTreeSet<usize>,
}

/// A materialized model: the table plus the simplices in index order.
#[derive(Clone, Debug)]
pub struct Materialized<S> {
    pub set: TruncSimplicialSet,
    pub simplices: Vec<Vec<S>>,
    pub index: Vec<HashMap<S, usize>>,
}

impl<S: Clone + Eq + Hash> Materialized<S> {
    pub fn lookup(&self, n: usize, x: &S) -> Option<usize> {
        self.index.get(n)?.get(x).copied()
    }
}

pub fn materialize<M: SimplicialModel>(model: &M, truncation: usize, budget: &mut Budget) -> Result<Materialized<M::Simplex>> {
    let mut simplices: Vec<Vec<M::Simplex>> = Vec::with_capacity(truncation + 1);
    for n in 0..=truncation {
        let level = model.simplices(n, &simplices, budget)?;
        simplices.push(level);
    }
    let index: Vec<HashMap<M::Simplex, usize>> =
        simplices.iter().map(|lv| lv.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect()).collect();
    for (n, lv) in simplices.iter().enumerate() {
        if index[n].len() != lv.len() {
            return Err(Error::Invalid(format!("model lists a duplicate {n}-simplex")));
        }
    }
    let find = |n: usize, x: &M::Simplex| {
        index[n].get(x).copied().ok_or_else(|| Error::Invalid(format!("model is not closed under pullback at level {n}: {}", model.label(x))))
    };
    let mut faces = Vec::with_capacity(truncation + 1);
    let mut degeneracies = Vec::with_capacity(truncation + 1);
    for n in 0..=truncation {
        let mut fl = Vec::with_capacity(simplices[n].len());
        let mut dl = Vec::with_capacity(simplices[n].len());
        for x in &simplices[n] {
            let mut f = Vec::new();
            if n > 0 {
                for i in 0..=n {
                    f.push(find(n - 1, &model.pullback(x, &MonotoneMap::face(i, n)?))?);
                }
            }
            let mut d = Vec::new();
            if n < truncation {
                for i in 0..=n {
                    d.push(find(n + 1, &model.pullback(x, &MonotoneMap::degeneracy(i, n)?))?);
                }
            }
            fl.push(f);
            dl.push(d);
        }
        faces.push(fl);
        degeneracies.push(dl);
    }
    let labels = simplices.iter().map(|lv| lv.iter().map(|x| model.label(x)).collect()).collect();
    let mut set = TruncSimplicialSet { truncation, labels, faces, degeneracies, marked_edges: BTreeSet::new(), thin_triangles: BTreeSet::new() };
    if truncation >= 1 {
        for (e, x) in simplices[1].iter().enumerate() {
            if model.is_marked_edge(x) || set.is_degenerate(1, e) {
                set.marked_edges.insert(e);
            }
        }
    }
    if truncation >= 2 {
        for (t, x) in simplices[2].iter().enumerate() {
            if model.is_thin(x) || set.is_degenerate(2, t) {
                set.thin_triangles.insert(t);
            }
        }
    }
    Ok(Materialized { set, simplices, index })
}

impl TruncSimplicialSet {
    /// Builds a set from raw tables, checking shapes, identities and markings.
    pub fn from_tables(
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
        marked_edges: BTreeSet<usize>,
        thin_triangles: BTreeSet<usize>,
    ) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Shape("simplicial set needs level 0".into()));
        }
        let truncation = labels.len() - 1;
        if faces.len() != labels.len() || degeneracies.len() != labels.len() {
            return Err(Error::Shape("face/degeneracy tables do not cover every level".into()));
        }
        for n in 0..=truncation {
            let count = labels[n].len();
            if faces[n].len() != count || degeneracies[n].len() != count {
                return Err(Error::Shape(format!("level {n} tables have the wrong length")));
            }
            for x in 0..count {
                let nf = if n == 0 { 0 } else { n + 1 };
                let nd = if n < truncation { n + 1 } else { 0 };
                if faces[n][x].len() != nf || degeneracies[n][x].len() != nd {
                    return Err(Error::Shape(format!("simplex {x} at level {n} has the wrong number of faces/degeneracies")));
                }
                if faces[n][x].iter().any(|&y| y >= labels[n - 1].len()) || degeneracies[n][x].iter().any(|&y| y >= labels[n + 1].len()) {
                    return Err(Error::Index(format!("simplex {x} at level {n} refers outside the next level")));
                }
            }
        }
        let edges = labels.get(1).map_or(0, Vec::len);
        let tris = labels.get(2).map_or(0, Vec::len);
        if marked_edges.iter().any(|&e| e >= edges) || thin_triangles.iter().any(|&t| t >= tris) {
            return Err(Error::Index("marking refers to a missing simplex".into()));
        }
        let set = Self { truncation, labels, faces, degeneracies, marked_edges, thin_triangles };
        set.check_identities().map_err(Error::Invalid)?;
        set.check_markings().map_err(Error::Invalid)?;
        Ok(set)
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    pub fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.faces[n][x][i]
    }

    pub fn degeneracy(&self, n: usize, x: usize, i: usize) -> usize {
        self.degeneracies[n][x][i]
    }

    pub fn marked_edges(&self) -> &BTreeSet<usize> {
        &self.marked_edges
    }

    pub fn thin_triangles(&self) -> &BTreeSet<usize> {
        &self.thin_triangles
    }

    pub fn is_marked(&self, e: usize) -> bool {
        self.marked_edges.contains(&e)
    }

    pub fn is_thin(&self, t: usize) -> bool {
        self.thin_triangles.contains(&t)
    }

    /// Whether `x` is in the image of some degeneracy from level `n - 1`.
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..n).any(|i| self.degeneracies[n - 1][self.faces[n][x][i]][i] == x)
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        (0..self.count(n)).filter(|&x| !self.is_degenerate(n, x)).collect()
    }

    /// The vertices `x(0), ..., x(n)` of an `n`-simplex.
    pub fn vertices(&self, n: usize, x: usize) -> Result<Vec<usize>> {
        (0..=n).map(|v| self.act(n, x, &MonotoneMap::constant(0, n, v)?)).collect()
    }

    /// `f^* x` via a face/degeneracy word for `f`.
    pub fn act(&self, n: usize, x: usize, f: &MonotoneMap) -> Result<usize> {
        if f.target_dim() != n {
            return Err(Error::Shape(format!("map {f} does not act on {n}-simplices")));
        }
        let top = n.max(f.source_dim());
        if top > self.truncation {
            return Err(Error::Truncation { level: top, truncation: self.truncation });
        }
        let mut y = x;
        for g in f.generator_word() {
            y = match g {
                Generator::Face { i, n } => self.faces[n][y][i],
                Generator::Degeneracy { i, n } => self.degeneracies[n][y][i],
            };
        }
        Ok(y)
    }

    /// Checks every simplicial identity on every simplex.
    pub fn check_identities(&self) -> std::result::Result<(), String> {
        let m = self.truncation;
        let d = |n: usize, x: usize, i: usize| self.faces[n][x][i];
        let s = |n: usize, x: usize, i: usize| self.degeneracies[n][x][i];
        for n in 0..=m {
            for x in 0..self.count(n) {
                if n >= 2 {
                    for j in 1..=n {
                        for i in 0..j {
                            if d(n - 1, d(n, x, j), i) != d(n - 1, d(n, x, i), j - 1) {
                                return Err(format!("d_{i} d_{j} != d_{} d_{i} on {n}-simplex {}", j - 1, self.labels[n][x]));
                            }
                        }
                    }
                }
                if n < m {
                    for j in 0..=n {
                        let y = s(n, x, j);
                        for i in 0..=n + 1 {
                            let lhs = d(n + 1, y, i);
                            let ok = if i < j {
                                lhs == s(n - 1, d(n, x, i), j - 1)
                            } else if i == j || i == j + 1 {
                                lhs == x
                            } else {
                                lhs == s(n - 1, d(n, x, i - 1), j)
                            };
                            if !ok {
                                return Err(format!("d_{i} s_{j} identity fails on {n}-simplex {}", self.labels[n][x]));
                            }
                        }
                    }
                }
                if n + 2 <= m {
                    for j in 0..=n {
                        for i in 0..=j {
                            if s(n + 1, s(n, x, j), i) != s(n + 1, s(n, x, i), j + 1) {
                                return Err(format!("s_{i} s_{j} != s_{} s_{i} on {n}-simplex {}", j + 1, self.labels[n][x]));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Degenerate edges must be marked and degenerate 2-simplices thin.
    pub fn check_markings(&self) -> std::result::Result<(), String> {
        if self.truncation >= 1 {
            for e in 0..self.count(1) {
                if self.is_degenerate(1, e) && !self.is_marked(e) {
                    return Err(format!("degenerate edge {} is not marked", self.labels[1][e]));
                }
            }
        }
        if self.truncation >= 2 {
            for t in 0..self.count(2) {
                if self.is_degenerate(2, t) && !self.is_thin(t) {
                    return Err(format!("degenerate triangle {} is not thin", self.labels[2][t]));
                }
            }
        }
        Ok(())
    }

    /// The same set cut down to a lower truncation.
    pub fn truncate(&self, m: usize) -> Result<Self> {
        if m > self.truncation {
            return Err(Error::Truncation { level: m, truncation: self.truncation });
        }
        let mut out = self.clone();
        out.truncation = m;
        out.labels.truncate(m + 1);
        out.faces.truncate(m + 1);
        out.degeneracies.truncate(m + 1);
        for x in &mut out.degeneracies[m] {
            x.clear();
        }
        if m < 2 {
            out.thin_triangles.clear();
        }
        if m < 1 {
            out.marked_edges.clear();
        }
        Ok(out)
    }
}

/// Levelwise functions between two truncated simplicial sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialSetMap {
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialSetMap {
    pub fn identity(x: &TruncSimplicialSet) -> Self {
        Self { levels: (0..=x.truncation).map(|n| (0..x.count(n)).collect()).collect() }
    }

    pub fn apply(&self, n: usize, x: usize) -> usize {
        self.levels[n][x]
    }

    /// Commutation with every face and degeneracy; optionally also that
    /// marked edges and thin triangles are preserved.
    pub fn check(&self, source: &TruncSimplicialSet, target: &TruncSimplicialSet, markings: bool) -> std::result::Result<(), String> {
        let m = source.truncation;
        if m > target.truncation || self.levels.len() != m + 1 {
            return Err("map does not cover the source levels".into());
        }
        for n in 0..=m {
            if self.levels[n].len() != source.count(n) {
                return Err(format!("level {n} of the map has the wrong length"));
            }
            for x in 0..source.count(n) {
                let y = self.levels[n][x];
                if y >= target.count(n) {
                    return Err(format!("level {n}: image {y} out of range"));
                }
                if n > 0 {
                    for i in 0..=n {
                        if self.levels[n - 1][source.face(n, x, i)] != target.face(n, y, i) {
                            return Err(format!("map does not commute with d_{i} on {}", source.label(n, x)));
                        }
                    }
                }
                if n < m {
                    for i in 0..=n {
                        if self.levels[n + 1][source.degeneracy(n, x, i)] != target.degeneracy(n, y, i) {
                            return Err(format!("map does not commute with s_{i} on {}", source.label(n, x)));
                        }
                    }
                }
            }
        }
        if markings {
            if m >= 1 {
                for &e in &source.marked_edges {
                    if !target.is_marked(self.levels[1][e]) {
                        return Err(format!("marked edge {} is sent to an unmarked edge", source.label(1, e)));
                    }
                }
            }
            if m >= 2 {
                for &t in &source.thin_triangles {
                    if !target.is_thin(self.levels[2][t]) {
                        return Err(format!("thin triangle {} is sent to a non-thin one", source.label(2, t)));
                    }
                }
            }
        }
        Ok(())
    }

    /// `g ∘ f`
    pub fn then(&self, g: &SimplicialSetMap) -> Self {
        Self { levels: self.levels.iter().enumerate().map(|(n, lv)| lv.iter().map(|&x| g.levels[n][x]).collect()).collect() }
    }

    pub fn is_injective(&self) -> bool {
        self.levels.iter().all(|lv| {
            let set: BTreeSet<usize> = lv.iter().copied().collect();
            set.len() == lv.len()
        })
    }

    pub fn is_bijective(&self, target: &TruncSimplicialSet) -> bool {
        self.is_injective() && self.levels.iter().enumerate().all(|(n, lv)| lv.len() == target.count(n))
    }
}

impl TruncSimplicialSet {
    /// The same simplicial set with every edge marked.
    pub fn with_all_edges_marked(&self) -> Self {
        let mut out = self.clone();
        if out.truncation >= 1 {
            out.marked_edges = (0..out.count(1)).collect();
        }
        out
    }

    /// The simplicial subset on the simplices selected by `keep`, which must
    /// be closed under faces and degeneracies, with its inclusion.
    pub fn subset(&self, keep: impl Fn(usize, usize) -> bool) -> Result<(TruncSimplicialSet, SimplicialSetMap)> {
        let m = self.truncation;
        let chosen: Vec<Vec<usize>> = (0..=m).map(|n| (0..self.count(n)).filter(|&x| keep(n, x)).collect()).collect();
        let mut position: Vec<HashMap<usize, usize>> = Vec::with_capacity(m + 1);
        for lv in &chosen {
            position.push(lv.iter().enumerate().map(|(i, &x)| (x, i)).collect());
        }
        let find = |n: usize, x: usize| {
            position[n].get(&x).copied().ok_or_else(|| Error::Invalid(format!("selection is not closed: misses {}", self.label(n, x))))
        };
        let mut labels = Vec::with_capacity(m + 1);
        let mut faces = Vec::with_capacity(m + 1);
        let mut degeneracies = Vec::with_capacity(m + 1);
        for n in 0..=m {
            labels.push(chosen[n].iter().map(|&x| self.labels[n][x].clone()).collect());
            faces.push(chosen[n].iter().map(|&x| self.faces[n][x].iter().map(|&y| find(n - 1, y)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?);
            degeneracies.push(
                chosen[n].iter().map(|&x| self.degeneracies[n][x].iter().map(|&y| find(n + 1, y)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?,
            );
        }
        let marked = if m >= 1 { self.marked_edges.iter().filter_map(|&e| position[1].get(&e).copied()).collect() } else { BTreeSet::new() };
        let thin = if m >= 2 { self.thin_triangles.iter().filter_map(|&t| position[2].get(&t).copied()).collect() } else { BTreeSet::new() };
        let sub = TruncSimplicialSet::from_tables(labels, faces, degeneracies, marked, thin)?;
        Ok((sub, SimplicialSetMap { levels: chosen }))
    }
}

/// The pushout `X ∐_A Y` of two injective simplicial maps `A -> X` and
/// `A -> Y`. Simplices of `X` keep their indices; the simplices of `Y` outside
/// the image of `A` follow. Markings are the union of both images.
pub fn pushout(
    a: &TruncSimplicialSet,
    x: &TruncSimplicialSet,
    ax: &SimplicialSetMap,
    y: &TruncSimplicialSet,
    ay: &SimplicialSetMap,
) -> Result<(TruncSimplicialSet, SimplicialSetMap, SimplicialSetMap)> {
    let m = a.truncation;
    if x.truncation != m || y.truncation != m {
        return Err(Error::Shape("pushout legs must share the truncation".into()));
    }
    ax.check(a, x, false).map_err(Error::Invalid)?;
    ay.check(a, y, false).map_err(Error::Invalid)?;
    if !ax.is_injective() || !ay.is_injective() {
        return Err(Error::Precondition("pushout is only formed along injective maps".into()));
    }
    let mut y_to_p: Vec<Vec<usize>> = Vec::with_capacity(m + 1);
    let mut labels = x.labels.clone();
    for n in 0..=m {
        let mut from_a = vec![None; y.count(n)];
        for (s, &t) in ay.levels[n].iter().enumerate() {
            from_a[t] = Some(ax.levels[n][s]);
        }
        let mut next = x.count(n);
        let mut level = Vec::with_capacity(y.count(n));
        for (t, image) in from_a.into_iter().enumerate() {
            level.push(image.unwrap_or_else(|| {
                labels[n].push(y.labels[n][t].clone());
                next += 1;
                next - 1
            }));
        }
        y_to_p.push(level);
    }
    let mut faces = x.faces.clone();
    let mut degeneracies = x.degeneracies.clone();
    for n in 0..=m {
        for t in 0..y.count(n) {
            if y_to_p[n][t] < x.count(n) {
                continue;
            }
            faces[n].push(y.faces[n][t].iter().map(|&u| y_to_p[n - 1][u]).collect());
            degeneracies[n].push(y.degeneracies[n][t].iter().map(|&u| y_to_p[n + 1][u]).collect());
        }
    }
    let mut marked = x.marked_edges.clone();
    let mut thin = x.thin_triangles.clone();
    if m >= 1 {
        marked.extend(y.marked_edges.iter().map(|&e| y_to_p[1][e]));
    }
    if m >= 2 {
        thin.extend(y.thin_triangles.iter().map(|&t| y_to_p[2][t]));
    }
    let p = TruncSimplicialSet::from_tables(labels, faces, degeneracies, marked, thin)?;
    let x_to_p = SimplicialSetMap::identity(x);
    Ok((p, x_to_p, SimplicialSetMap { levels: y_to_p }))
}

/// `Δ^k`: the `n`-simplices are the monotone maps `[n] -> [k]`.
#[derive(Clone, Copy, Debug)]
pub struct StandardSimplex {
    pub k: usize,
}

impl SimplicialModel for StandardSimplex {
    type Simplex = MonotoneMap;

    fn simplices(&self, n: usize, _lower: &[Vec<MonotoneMap>], budget: &mut Budget) -> Result<Vec<MonotoneMap>> {
        let out = MonotoneMap::all(n, self.k);
        budget.charge(out.len())?;
        Ok(out)
    }

    fn pullback(&self, x: &MonotoneMap, f: &MonotoneMap) -> MonotoneMap {
        x.compose(f).expect("sizes match")
    }

    fn label(&self, x: &MonotoneMap) -> String {
        x.label()
    }
}

pub fn standard_simplex(k: usize, truncation: usize) -> Result<TruncSimplicialSet> {
    Ok(materialize(&StandardSimplex { k }, truncation, &mut Budget::unlimited())?.set)
}

#[cfg(test)]
mod tests;
