use std::collections::HashMap;

use super::TwoCategory;
use crate::error::Result;
use crate::simplexcat::MonotoneMap;
use crate::sset::{materialize, Budget, Materialized, SimplicialModel, TruncSimplicialSet};

/// A 2-functor `Σ^[n] -> ℂ`, determined by its objects `x_i` and edges
/// `f_ij` (`i < j`, see [`pair_index`]) subject to `f_ik ≤ f_ij ; f_jk`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NerveSimplex<O, M> {
    pub objects: Vec<O>,
    pub edges: Vec<M>,
}

impl<O, M> NerveSimplex<O, M> {
    pub fn dim(&self) -> usize {
        self.objects.len() - 1
    }

    pub fn edge(&self, i: usize, j: usize) -> &M {
        &self.edges[pair_index(self.dim(), i, j)]
    }
}

/// Position of the pair `i < j` in the lexicographic list of pairs of `[n]`.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j <= n);
    i * (2 * n + 1 - i) / 2 + (j - i - 1)
}

pub fn nerve_simplex_label<C: TwoCategory>(c: &C, x: &NerveSimplex<C::Obj, C::Mor>) -> String {
    let objs: Vec<String> = x.objects.iter().map(|o| c.obj_label(o)).collect();
    if x.edges.is_empty() {
        return objs.join(",");
    }
    let edges: Vec<String> = x.edges.iter().map(|f| c.mor_label(f)).collect();
    format!("{}|{}", objs.join(","), edges.join(","))
}

/// `N^sc(ℂ)` as a model: level `n` is enumerated by extending each
/// `(n-1)`-simplex by a last vertex.
pub struct ScaledNerve<'a, C: TwoCategory> {
    pub category: &'a C,
    objects: Vec<C::Obj>,
    homs: HashMap<(C::Obj, C::Obj), Vec<C::Mor>>,
}

impl<'a, C: TwoCategory> ScaledNerve<'a, C> {
    pub fn new(category: &'a C) -> Self {
        let objects = category.objects();
        let mut homs = HashMap::new();
        for x in &objects {
            for y in &objects {
                homs.insert((x.clone(), y.clone()), category.hom(x, y));
            }
        }
        Self { category, objects, homs }
    }

    pub fn hom(&self, x: &C::Obj, y: &C::Obj) -> &[C::Mor] {
        self.homs.get(&(x.clone(), y.clone())).map_or(&[], Vec::as_slice)
    }

    /// Whether the data satisfy the lax composition condition.
    pub fn is_simplex(&self, x: &NerveSimplex<C::Obj, C::Mor>) -> bool {
        let n = x.dim();
        let c = self.category;
        for i in 0..n {
            for j in i + 1..=n {
                let f = x.edge(i, j);
                if c.source(f) != x.objects[i] || c.target(f) != x.objects[j] {
                    return false;
                }
            }
        }
        (0..=n).all(|i| {
            (i + 1..=n).all(|j| (j + 1..=n).all(|k| c.leq(x.edge(i, k), &c.compose(x.edge(i, j), x.edge(j, k)))))
        })
    }

    fn extend(&self, x: &NerveSimplex<C::Obj, C::Mor>, out: &mut Vec<NerveSimplex<C::Obj, C::Mor>>, budget: &mut Budget) -> Result<()> {
        let n = x.dim() + 1;
        for y in &self.objects {
            // new[i] = f_{i,n}, filled from i = n-1 down to 0
            let mut new: Vec<Option<C::Mor>> = vec![None; n];
            self.fill(x, y, n, n - 1, &mut new, out, budget)?;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn fill(
        &self,
        x: &NerveSimplex<C::Obj, C::Mor>,
        y: &C::Obj,
        n: usize,
        i: usize,
        new: &mut Vec<Option<C::Mor>>,
        out: &mut Vec<NerveSimplex<C::Obj, C::Mor>>,
        budget: &mut Budget,
    ) -> Result<()> {
        let c = self.category;
        for f in self.hom(&x.objects[i], y) {
            let ok = (i + 1..n).all(|j| c.leq(f, &c.compose(x.edge(i, j), new[j].as_ref().expect("filled"))));
            if !ok {
                continue;
            }
            new[i] = Some(f.clone());
            if i == 0 {
                budget.charge(1)?;
                let mut objects = x.objects.clone();
                objects.push(y.clone());
                let mut edges = Vec::with_capacity(n * (n + 1) / 2);
                for a in 0..n {
                    for b in a + 1..n {
                        edges.push(x.edge(a, b).clone());
                    }
                    edges.push(new[a].clone().expect("filled"));
                }
                out.push(NerveSimplex { objects, edges });
            } else {
                self.fill(x, y, n, i - 1, new, out, budget)?;
            }
        }
        new[i] = None;
        Ok(())
    }
}

impl<C: TwoCategory> SimplicialModel for ScaledNerve<'_, C> {
    type Simplex = NerveSimplex<C::Obj, C::Mor>;

    fn simplices(&self, n: usize, lower: &[Vec<Self::Simplex>], budget: &mut Budget) -> Result<Vec<Self::Simplex>> {
        let mut out = Vec::new();
        if n == 0 {
            budget.charge(self.objects.len())?;
            out.extend(self.objects.iter().map(|o| NerveSimplex { objects: vec![o.clone()], edges: Vec::new() }));
            return Ok(out);
        }
        for x in &lower[n - 1] {
            self.extend(x, &mut out, budget)?;
        }
        Ok(out)
    }

    fn pullback(&self, x: &Self::Simplex, f: &MonotoneMap) -> Self::Simplex {
        let c = self.category;
        let m = f.source_dim();
        let objects: Vec<C::Obj> = (0..=m).map(|i| x.objects[f.apply(i)].clone()).collect();
        let mut edges = Vec::with_capacity(m * (m + 1) / 2);
        for i in 0..=m {
            for j in i + 1..=m {
                let (a, b) = (f.apply(i), f.apply(j));
                edges.push(if a == b { c.identity(&objects[i]) } else { x.edge(a, b).clone() });
            }
        }
        NerveSimplex { objects, edges }
    }

    fn label(&self, x: &Self::Simplex) -> String {
        nerve_simplex_label(self.category, x)
    }

    fn is_marked_edge(&self, x: &Self::Simplex) -> bool {
        self.category.is_marked(&x.edges[0])
    }

    /// The interior 2-cell is invertible exactly when it is an equality.
    fn is_thin(&self, x: &Self::Simplex) -> bool {
        *x.edge(0, 2) == self.category.compose(x.edge(0, 1), x.edge(1, 2))
    }
}

/// `N^sc(ℂ)` up to level `truncation`, with its simplices for lookups.
pub fn scaled_nerve_model<C: TwoCategory>(
    c: &C,
    truncation: usize,
    budget: &mut Budget,
) -> Result<Materialized<NerveSimplex<C::Obj, C::Mor>>> {
    materialize(&ScaledNerve::new(c), truncation, budget)
}

pub fn scaled_nerve<C: TwoCategory>(c: &C, truncation: usize, budget: &mut Budget) -> Result<TruncSimplicialSet> {
    Ok(scaled_nerve_model(c, truncation, budget)?.set)
}
