use super::sigma::{max_of, Sigma};
use super::{check_two_functor, materialize, mask_label, PosetEnriched2Cat, TwoCategory};
use crate::error::{Error, Result};

/// A morphism `S -> S'` of `G(I)`: a subset `T ∈ Σ^I(max S, max S')` with
/// `S' ⊆ S ∪ T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GMorphism {
    pub source: u64,
    pub target: u64,
    pub t: u64,
}

/// `G(I)`: the lax undercategory of `(Σ^I)^{(-,op)}` at `min I` with its
/// 2-cells discarded. Objects are the subsets `S ⊆ I` with `min S = min I`.
#[derive(Clone, Debug)]
pub struct GCategory {
    sigma: Sigma,
    objects: Vec<u64>,
}

impl GCategory {
    pub fn i_mask(&self) -> u64 {
        self.sigma.mask()
    }

    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    pub fn object_list(&self) -> &[u64] {
        &self.objects
    }

    pub fn morphisms(&self) -> Vec<GMorphism> {
        let mut out = Vec::new();
        for &s in &self.objects {
            for &s2 in &self.objects {
                out.extend(self.hom(&s, &s2));
            }
        }
        out
    }

    /// The functor `G(I) -> I`, `S ↦ max S`.
    pub fn endpoint(&self, s: u64) -> usize {
        max_of(s)
    }

    pub fn to_category(&self) -> Result<PosetEnriched2Cat> {
        materialize(self)
    }
}

pub fn g_category(elements: &[usize]) -> Result<GCategory> {
    let sigma = Sigma::new(elements)?;
    let min = sigma.min();
    let rest: Vec<usize> = sigma.elements()[1..].to_vec();
    let mut objects: Vec<u64> = (0..1u64 << rest.len())
        .map(|c| rest.iter().enumerate().filter(|(k, _)| c >> k & 1 == 1).fold(1u64 << min, |m, (_, &e)| m | 1 << e))
        .collect();
    objects.sort_unstable_by_key(|&s| (max_of(s), s));
    Ok(GCategory { sigma, objects })
}

impl TwoCategory for GCategory {
    type Obj = u64;
    type Mor = GMorphism;

    fn objects(&self) -> Vec<u64> {
        self.objects.clone()
    }

    fn hom(&self, s: &u64, s2: &u64) -> Vec<GMorphism> {
        self.sigma
            .hom(&max_of(*s), &max_of(*s2))
            .into_iter()
            .filter(|t| s2 & !(s | t) == 0)
            .map(|t| GMorphism { source: *s, target: *s2, t })
            .collect()
    }

    fn source(&self, f: &GMorphism) -> u64 {
        f.source
    }

    fn target(&self, f: &GMorphism) -> u64 {
        f.target
    }

    fn identity(&self, s: &u64) -> GMorphism {
        GMorphism { source: *s, target: *s, t: 1 << max_of(*s) }
    }

    fn compose(&self, f: &GMorphism, g: &GMorphism) -> GMorphism {
        GMorphism { source: f.source, target: g.target, t: f.t | g.t }
    }

    fn leq(&self, f: &GMorphism, g: &GMorphism) -> bool {
        f == g
    }

    fn obj_label(&self, s: &u64) -> String {
        mask_label(*s)
    }

    fn mor_label(&self, f: &GMorphism) -> String {
        format!("{}:{}->{}", mask_label(f.t), mask_label(f.source), mask_label(f.target))
    }
}

/// The functor `Σ^J(min J, min I)^op × G(I) -> G(J)` for `I ⊆ J`:
/// `(T, S) ↦ T ∪ S` on objects, and a pair `(T ⊇ T', U : S -> S')` goes to
/// `U : T ∪ S -> T' ∪ S'`.
#[derive(Clone, Debug)]
pub struct GPullback {
    pub small: GCategory,
    pub large: GCategory,
}

pub fn g_pullback(i: &[usize], j: &[usize]) -> Result<GPullback> {
    let small = g_category(i)?;
    let large = g_category(j)?;
    if small.i_mask() & !large.i_mask() != 0 {
        return Err(Error::Precondition(format!("{} is not contained in {}", mask_label(small.i_mask()), mask_label(large.i_mask()))));
    }
    Ok(GPullback { small, large })
}

/// The source category `Σ^J(min J, min I)^op × G(I)` of [`GPullback`].
struct PullbackSource<'a> {
    p: &'a GPullback,
    prefixes: Vec<u64>,
}

impl TwoCategory for PullbackSource<'_> {
    type Obj = (u64, u64);
    type Mor = (u64, u64, GMorphism);

    fn objects(&self) -> Vec<(u64, u64)> {
        self.prefixes.iter().flat_map(|&t| self.p.small.objects.iter().map(move |&s| (t, s))).collect()
    }
    fn hom(&self, x: &(u64, u64), y: &(u64, u64)) -> Vec<(u64, u64, GMorphism)> {
        if y.0 & !x.0 != 0 {
            return Vec::new();
        }
        self.p.small.hom(&x.1, &y.1).into_iter().map(|u| (x.0, y.0, u)).collect()
    }
    fn source(&self, f: &(u64, u64, GMorphism)) -> (u64, u64) {
        (f.0, f.2.source)
    }
    fn target(&self, f: &(u64, u64, GMorphism)) -> (u64, u64) {
        (f.1, f.2.target)
    }
    fn identity(&self, x: &(u64, u64)) -> (u64, u64, GMorphism) {
        (x.0, x.0, self.p.small.identity(&x.1))
    }
    fn compose(&self, f: &(u64, u64, GMorphism), g: &(u64, u64, GMorphism)) -> (u64, u64, GMorphism) {
        (f.0, g.1, self.p.small.compose(&f.2, &g.2))
    }
    fn leq(&self, f: &(u64, u64, GMorphism), g: &(u64, u64, GMorphism)) -> bool {
        f == g
    }
    fn obj_label(&self, x: &(u64, u64)) -> String {
        format!("({},{})", mask_label(x.0), mask_label(x.1))
    }
    fn mor_label(&self, f: &(u64, u64, GMorphism)) -> String {
        format!("({}>={},{})", mask_label(f.0), mask_label(f.1), self.p.small.mor_label(&f.2))
    }
}

impl GPullback {
    /// `Σ^J(min J, min I)`
    pub fn prefixes(&self) -> Vec<u64> {
        self.large.sigma.hom(&self.large.sigma.min(), &self.small.sigma.min())
    }

    pub fn on_object(&self, t: u64, s: u64) -> u64 {
        t | s
    }

    pub fn on_morphism(&self, t: u64, t2: u64, u: &GMorphism) -> GMorphism {
        GMorphism { source: t | u.source, target: t2 | u.target, t: u.t }
    }

    /// Exhaustive functor check, including that every image is a morphism
    /// of `G(J)`.
    pub fn check(&self) -> std::result::Result<(), String> {
        let src = PullbackSource { p: self, prefixes: self.prefixes() };
        let objects = src.objects();
        for x in &objects {
            for y in &objects {
                for (t, t2, u) in src.hom(x, y) {
                    let image = self.on_morphism(t, t2, &u);
                    if !self.large.hom(&image.source, &image.target).contains(&image) {
                        return Err(format!("image of {} is not a morphism of G(J)", src.mor_label(&(t, t2, u))));
                    }
                }
            }
        }
        check_two_functor(&src, &self.large, |&(t, s)| self.on_object(t, s), |(t, t2, u)| self.on_morphism(*t, *t2, u))
    }
}

