use super::TwoCategory;

/// A 1-morphism of a lax slice: the underlying `f : from -> to` of `ℂ`
/// together with its endpoints as slice objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceMorphism<M> {
    pub from: M,
    pub to: M,
    pub f: M,
}

/// `ℂ_{/c}`: objects are `φ : x -> c`; a morphism `φ -> ψ` is `f : x -> y`
/// with a 2-cell `f ; ψ ⇒ φ`. Hom posets are ordered as in `ℂ`.
#[derive(Clone, Debug)]
pub struct LaxOver<C: TwoCategory> {
    pub base: C,
    pub c: C::Obj,
}

impl<C: TwoCategory> LaxOver<C> {
    pub fn new(base: C, c: C::Obj) -> Self {
        Self { base, c }
    }

    /// The forgetful 2-functor to `ℂ` on objects.
    pub fn forget_object(&self, phi: &C::Mor) -> C::Obj {
        self.base.source(phi)
    }

    pub fn forget_morphism(&self, m: &SliceMorphism<C::Mor>) -> C::Mor {
        m.f.clone()
    }

    /// Whether the triangle of `m` commutes on the nose.
    pub fn is_strict(&self, m: &SliceMorphism<C::Mor>) -> bool {
        self.base.compose(&m.f, &m.to) == m.from
    }
}

impl<C: TwoCategory> TwoCategory for LaxOver<C> {
    type Obj = C::Mor;
    type Mor = SliceMorphism<C::Mor>;

    fn objects(&self) -> Vec<C::Mor> {
        self.base.objects().iter().flat_map(|x| self.base.hom(x, &self.c)).collect()
    }

    fn hom(&self, phi: &C::Mor, psi: &C::Mor) -> Vec<Self::Mor> {
        let b = &self.base;
        b.hom(&b.source(phi), &b.source(psi))
            .into_iter()
            .filter(|f| b.leq(&b.compose(f, psi), phi))
            .map(|f| SliceMorphism { from: phi.clone(), to: psi.clone(), f })
            .collect()
    }

    fn source(&self, m: &Self::Mor) -> C::Mor {
        m.from.clone()
    }

    fn target(&self, m: &Self::Mor) -> C::Mor {
        m.to.clone()
    }

    fn identity(&self, phi: &C::Mor) -> Self::Mor {
        SliceMorphism { from: phi.clone(), to: phi.clone(), f: self.base.identity(&self.base.source(phi)) }
    }

    fn compose(&self, m: &Self::Mor, n: &Self::Mor) -> Self::Mor {
        SliceMorphism { from: m.from.clone(), to: n.to.clone(), f: self.base.compose(&m.f, &n.f) }
    }

    fn leq(&self, m: &Self::Mor, n: &Self::Mor) -> bool {
        self.base.leq(&m.f, &n.f)
    }

    fn obj_label(&self, phi: &C::Mor) -> String {
        self.base.mor_label(phi)
    }

    fn mor_label(&self, m: &Self::Mor) -> String {
        format!("{}:{}->{}", self.base.mor_label(&m.f), self.base.mor_label(&m.from), self.base.mor_label(&m.to))
    }

    fn is_marked(&self, m: &Self::Mor) -> bool {
        self.is_strict(m)
    }
}

/// `ℂ_{c/}`: objects are `φ : c -> x`; a morphism `φ -> ψ` is `f : x -> y`
/// with a 2-cell `φ ; f ⇒ ψ`. Hom posets are ordered as in `ℂ`.
#[derive(Clone, Debug)]
pub struct LaxUnder<C: TwoCategory> {
    pub base: C,
    pub c: C::Obj,
}

impl<C: TwoCategory> LaxUnder<C> {
    pub fn new(base: C, c: C::Obj) -> Self {
        Self { base, c }
    }

    pub fn forget_object(&self, phi: &C::Mor) -> C::Obj {
        self.base.target(phi)
    }

    pub fn forget_morphism(&self, m: &SliceMorphism<C::Mor>) -> C::Mor {
        m.f.clone()
    }

    pub fn is_strict(&self, m: &SliceMorphism<C::Mor>) -> bool {
        self.base.compose(&m.from, &m.f) == m.to
    }
}

impl<C: TwoCategory> TwoCategory for LaxUnder<C> {
    type Obj = C::Mor;
    type Mor = SliceMorphism<C::Mor>;

    fn objects(&self) -> Vec<C::Mor> {
        self.base.objects().iter().flat_map(|x| self.base.hom(&self.c, x)).collect()
    }

    fn hom(&self, phi: &C::Mor, psi: &C::Mor) -> Vec<Self::Mor> {
        let b = &self.base;
        b.hom(&b.target(phi), &b.target(psi))
            .into_iter()
            .filter(|f| b.leq(&b.compose(phi, f), psi))
            .map(|f| SliceMorphism { from: phi.clone(), to: psi.clone(), f })
            .collect()
    }

    fn source(&self, m: &Self::Mor) -> C::Mor {
        m.from.clone()
    }

    fn target(&self, m: &Self::Mor) -> C::Mor {
        m.to.clone()
    }

    fn identity(&self, phi: &C::Mor) -> Self::Mor {
        SliceMorphism { from: phi.clone(), to: phi.clone(), f: self.base.identity(&self.base.target(phi)) }
    }

    fn compose(&self, m: &Self::Mor, n: &Self::Mor) -> Self::Mor {
        SliceMorphism { from: m.from.clone(), to: n.to.clone(), f: self.base.compose(&m.f, &n.f) }
    }

    fn leq(&self, m: &Self::Mor, n: &Self::Mor) -> bool {
        self.base.leq(&m.f, &n.f)
    }

    fn obj_label(&self, phi: &C::Mor) -> String {
        self.base.mor_label(phi)
    }

    fn mor_label(&self, m: &Self::Mor) -> String {
        format!("{}:{}->{}", self.base.mor_label(&m.f), self.base.mor_label(&m.from), self.base.mor_label(&m.to))
    }

    fn is_marked(&self, m: &Self::Mor) -> bool {
        self.is_strict(m)
    }
}
