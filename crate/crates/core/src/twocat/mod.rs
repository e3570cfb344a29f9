//! Finite poset-enriched 2-categories: `Σ^I`, scaled nerves, lax slices,
//! `G(I)`, the poset `ℕ_{/[n]}`, its cubes, and the `ℳ_n` obligation schema.

mod concrete;
mod cube;
mod gcat;
mod json;
mod nerve;
mod obligations;
mod poset;
mod sigma;
mod slice;

use std::fmt::Debug;
use std::hash::Hash;

use crate::simplexcat::MonotoneMap;

pub use concrete::{materialize, MorphismRecord, PosetEnriched2Cat};
pub use cube::{cube_b, cube_f, cube_q, n_over_leq, Cube};
pub use gcat::{g_category, g_pullback, GCategory, GMorphism, GPullback};
pub use json::{CategoryWire, MorphismWire};
pub use nerve::{nerve_simplex_label, pair_index, scaled_nerve, scaled_nerve_model, NerveSimplex, ScaledNerve};
pub use obligations::{m_poset, nerve_condition_report, slice_over_simplex, CubeObligation, MPoset, NerveConditionReport};
pub use poset::{n_over_slice, FinitePoset};
pub use sigma::{sigma, sigma_category, sigma_map, mask_label, Sigma, SigmaMap};
pub use slice::{LaxOver, LaxUnder, SliceMorphism};
pub(crate) use sigma::{bits, max_of, min_of};

/// A strict 2-category whose hom categories are posets.
///
/// `compose(f, g)` is `f` followed by `g`. `leq(f, g)` asks for a 2-cell
/// `f ⇒ g` between parallel morphisms.
pub trait TwoCategory {
    type Obj: Clone + Eq + Hash + Ord + Debug;
    type Mor: Clone + Eq + Hash + Ord + Debug;

    fn objects(&self) -> Vec<Self::Obj>;
    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> Vec<Self::Mor>;
    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;
    fn leq(&self, f: &Self::Mor, g: &Self::Mor) -> bool;
    fn obj_label(&self, x: &Self::Obj) -> String;
    fn mor_label(&self, f: &Self::Mor) -> String;

    /// Edges marked in the scaled nerve beyond the degenerate ones.
    fn is_marked(&self, _f: &Self::Mor) -> bool {
        false
    }
}

/// `ℂ^{(-,op)}`: the same 1-category with every hom poset reversed.
#[derive(Clone, Debug)]
pub struct Op2<C>(pub C);

impl<C: TwoCategory> TwoCategory for Op2<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn objects(&self) -> Vec<C::Obj> {
        self.0.objects()
    }
    fn hom(&self, x: &C::Obj, y: &C::Obj) -> Vec<C::Mor> {
        self.0.hom(x, y)
    }
    fn source(&self, f: &C::Mor) -> C::Obj {
        self.0.source(f)
    }
    fn target(&self, f: &C::Mor) -> C::Obj {
        self.0.target(f)
    }
    fn identity(&self, x: &C::Obj) -> C::Mor {
        self.0.identity(x)
    }
    fn compose(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        self.0.compose(f, g)
    }
    fn leq(&self, f: &C::Mor, g: &C::Mor) -> bool {
        self.0.leq(g, f)
    }
    fn obj_label(&self, x: &C::Obj) -> String {
        self.0.obj_label(x)
    }
    fn mor_label(&self, f: &C::Mor) -> String {
        self.0.mor_label(f)
    }
    fn is_marked(&self, f: &C::Mor) -> bool {
        self.0.is_marked(f)
    }
}

/// The full sub-2-category on a list of objects.
#[derive(Clone, Debug)]
pub struct Full<C: TwoCategory> {
    pub base: C,
    pub objects: Vec<C::Obj>,
}

impl<C: TwoCategory> TwoCategory for Full<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn objects(&self) -> Vec<C::Obj> {
        self.objects.clone()
    }
    fn hom(&self, x: &C::Obj, y: &C::Obj) -> Vec<C::Mor> {
        self.base.hom(x, y)
    }
    fn source(&self, f: &C::Mor) -> C::Obj {
        self.base.source(f)
    }
    fn target(&self, f: &C::Mor) -> C::Obj {
        self.base.target(f)
    }
    fn identity(&self, x: &C::Obj) -> C::Mor {
        self.base.identity(x)
    }
    fn compose(&self, f: &C::Mor, g: &C::Mor) -> C::Mor {
        self.base.compose(f, g)
    }
    fn leq(&self, f: &C::Mor, g: &C::Mor) -> bool {
        self.base.leq(f, g)
    }
    fn obj_label(&self, x: &C::Obj) -> String {
        self.base.obj_label(x)
    }
    fn mor_label(&self, f: &C::Mor) -> String {
        self.base.mor_label(f)
    }
    fn is_marked(&self, f: &C::Mor) -> bool {
        self.base.is_marked(f)
    }
}

/// `Δ_{≤max}` with 2-cells `φ ⇒ ψ` whenever `φ(i) <= ψ(i)` for all `i`.
#[derive(Clone, Copy, Debug)]
pub struct SimplexTwoCat {
    pub max: usize,
}

impl TwoCategory for SimplexTwoCat {
    type Obj = usize;
    type Mor = MonotoneMap;

    fn objects(&self) -> Vec<usize> {
        (0..=self.max).collect()
    }
    fn hom(&self, x: &usize, y: &usize) -> Vec<MonotoneMap> {
        MonotoneMap::all(*x, *y)
    }
    fn source(&self, f: &MonotoneMap) -> usize {
        f.source_dim()
    }
    fn target(&self, f: &MonotoneMap) -> usize {
        f.target_dim()
    }
    fn identity(&self, x: &usize) -> MonotoneMap {
        MonotoneMap::identity(*x)
    }
    fn compose(&self, f: &MonotoneMap, g: &MonotoneMap) -> MonotoneMap {
        g.compose(f).expect("composable monotone maps")
    }
    fn leq(&self, f: &MonotoneMap, g: &MonotoneMap) -> bool {
        f.values().iter().zip(g.values()).all(|(a, b)| a <= b)
    }
    fn obj_label(&self, x: &usize) -> String {
        format!("[{x}]")
    }
    fn mor_label(&self, f: &MonotoneMap) -> String {
        f.label()
    }
}

/// `Δ' = Δ^{(-,op)}` truncated at `max`.
pub fn delta_prime(max: usize) -> Op2<SimplexTwoCat> {
    Op2(SimplexTwoCat { max })
}

/// Checks that the assignments `fo`, `fm` define a strict 2-functor `C -> D`:
/// sources, targets, identities and composites are preserved exactly and
/// 2-cells go to 2-cells.
pub fn check_two_functor<C: TwoCategory, D: TwoCategory>(
    c: &C,
    d: &D,
    fo: impl Fn(&C::Obj) -> D::Obj,
    fm: impl Fn(&C::Mor) -> D::Mor,
) -> Result<(), String> {
    let objects = c.objects();
    for x in &objects {
        if fm(&c.identity(x)) != d.identity(&fo(x)) {
            return Err(format!("identity of {} is not preserved", c.obj_label(x)));
        }
    }
    for x in &objects {
        for y in &objects {
            let hom = c.hom(x, y);
            for f in &hom {
                let g = fm(f);
                if d.source(&g) != fo(x) || d.target(&g) != fo(y) {
                    return Err(format!("{} lands in the wrong hom", c.mor_label(f)));
                }
                for f2 in &hom {
                    if c.leq(f, f2) && !d.leq(&g, &fm(f2)) {
                        return Err(format!("2-cell {} ⇒ {} is not preserved", c.mor_label(f), c.mor_label(f2)));
                    }
                }
                for z in &objects {
                    for h in c.hom(y, z) {
                        if fm(&c.compose(f, &h)) != d.compose(&g, &fm(&h)) {
                            return Err(format!("composite {};{} is not preserved", c.mor_label(f), c.mor_label(&h)));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks associativity, unitality, and monotonicity of composition, and that
/// every hom relation is a partial order.
pub fn check_two_category<C: TwoCategory>(c: &C) -> Result<(), String> {
    let objects = c.objects();
    let homs: Vec<Vec<Vec<C::Mor>>> = objects.iter().map(|x| objects.iter().map(|y| c.hom(x, y)).collect()).collect();
    for (a, x) in objects.iter().enumerate() {
        for (b, _) in objects.iter().enumerate() {
            for f in &homs[a][b] {
                if c.compose(&c.identity(x), f) != *f || c.compose(f, &c.identity(&objects[b])) != *f {
                    return Err(format!("identity law fails for {}", c.mor_label(f)));
                }
                for f2 in &homs[a][b] {
                    if c.leq(f, f2) && c.leq(f2, f) && f != f2 {
                        return Err(format!("{} and {} are mutually below each other", c.mor_label(f), c.mor_label(f2)));
                    }
                    if !c.leq(f, f2) {
                        continue;
                    }
                    for f3 in &homs[a][b] {
                        if c.leq(f2, f3) && !c.leq(f, f3) {
                            return Err("hom order is not transitive".into());
                        }
                    }
                }
                if !c.leq(f, f) {
                    return Err(format!("{} is not below itself", c.mor_label(f)));
                }
                for (k, _) in objects.iter().enumerate() {
                    for g in &homs[b][k] {
                        let fg = c.compose(f, g);
                        if c.source(&fg) != *x || c.target(&fg) != objects[k] {
                            return Err("composite has the wrong endpoints".into());
                        }
                        for f2 in &homs[a][b] {
                            if c.leq(f, f2) && !c.leq(&fg, &c.compose(f2, g)) {
                                return Err("composition is not monotone in the first argument".into());
                            }
                        }
                        for g2 in &homs[b][k] {
                            if c.leq(g, g2) && !c.leq(&fg, &c.compose(f, g2)) {
                                return Err("composition is not monotone in the second argument".into());
                            }
                        }
                        for (l, _) in objects.iter().enumerate() {
                            for h in &homs[k][l] {
                                if c.compose(&fg, h) != c.compose(f, &c.compose(g, h)) {
                                    return Err(format!("associativity fails at {};{};{}", c.mor_label(f), c.mor_label(g), c.mor_label(h)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
