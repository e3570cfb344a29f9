use super::{materialize, PosetEnriched2Cat, TwoCategory};
use crate::error::{Error, Result};
use crate::simplexcat::MonotoneMap;

/// `Σ^I` for a finite `I ⊂ {0, ..., 63}`. A morphism `i -> j` is a subset `S`
/// (bit mask) with `min S = i`, `max S = j`; composition is union and the hom
/// posets are ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma {
    elements: Vec<usize>,
    mask: u64,
}

impl Sigma {
    pub fn new(elements: &[usize]) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Precondition("Σ^I needs a nonempty I".into()));
        }
        if let Some(&e) = elements.iter().find(|&&e| e >= 64) {
            return Err(Error::Index(format!("element {e} exceeds 63")));
        }
        let mask = elements.iter().fold(0u64, |m, &e| m | 1 << e);
        Ok(Self { elements: bits(mask), mask })
    }

    /// `Σ^[n]`
    pub fn standard(n: usize) -> Result<Self> {
        Self::new(&(0..=n).collect::<Vec<_>>())
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn min(&self) -> usize {
        self.elements[0]
    }
}

pub(crate) fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&b| mask >> b & 1 == 1).collect()
}

pub(crate) fn min_of(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

pub(crate) fn max_of(mask: u64) -> usize {
    63 - mask.leading_zeros() as usize
}

/// `{0,2}` style label of a subset.
pub fn mask_label(mask: u64) -> String {
    let parts: Vec<String> = bits(mask).iter().map(|b| b.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl TwoCategory for Sigma {
    type Obj = usize;
    type Mor = u64;

    fn objects(&self) -> Vec<usize> {
        self.elements.clone()
    }

    fn hom(&self, x: &usize, y: &usize) -> Vec<u64> {
        if x > y || self.mask >> x & 1 == 0 || self.mask >> y & 1 == 0 {
            return Vec::new();
        }
        let ends = 1u64 << x | 1u64 << y;
        let interior: Vec<usize> = self.elements.iter().copied().filter(|e| e > x && e < y).collect();
        (0..1u64 << interior.len())
            .map(|choice| interior.iter().enumerate().filter(|(k, _)| choice >> k & 1 == 1).fold(ends, |m, (_, &e)| m | 1 << e))
            .collect()
    }

    fn source(&self, f: &u64) -> usize {
        min_of(*f)
    }

    fn target(&self, f: &u64) -> usize {
        max_of(*f)
    }

    fn identity(&self, x: &usize) -> u64 {
        1 << x
    }

    fn compose(&self, f: &u64, g: &u64) -> u64 {
        f | g
    }

    fn leq(&self, f: &u64, g: &u64) -> bool {
        f & !g == 0
    }

    fn obj_label(&self, x: &usize) -> String {
        x.to_string()
    }

    fn mor_label(&self, f: &u64) -> String {
        mask_label(*f)
    }
}

/// `Σ^I` tabulated.
pub fn sigma(elements: &[usize]) -> Result<PosetEnriched2Cat> {
    materialize(&Sigma::new(elements)?)
}

/// `Σ^I` as a lazily evaluated 2-category.
pub fn sigma_category(elements: &[usize]) -> Result<Sigma> {
    Sigma::new(elements)
}

/// The 2-functor `Σ^[m] -> Σ^[n]` induced by `α : [m] -> [n]`: `i ↦ α(i)`,
/// `S ↦ α(S)`.
#[derive(Clone, Debug)]
pub struct SigmaMap {
    pub alpha: MonotoneMap,
}

pub fn sigma_map(alpha: &MonotoneMap) -> SigmaMap {
    SigmaMap { alpha: alpha.clone() }
}

impl SigmaMap {
    pub fn on_object(&self, i: usize) -> usize {
        self.alpha.apply(i)
    }

    pub fn on_morphism(&self, s: u64) -> u64 {
        bits(s).into_iter().fold(0, |m, b| m | 1 << self.alpha.apply(b))
    }

    pub fn source(&self) -> Sigma {
        Sigma::standard(self.alpha.source_dim()).expect("standard Σ")
    }

    pub fn target(&self) -> Sigma {
        Sigma::standard(self.alpha.target_dim()).expect("standard Σ")
    }

    /// Verifies the 2-functor laws exhaustively.
    pub fn check(&self) -> std::result::Result<(), String> {
        super::check_two_functor(&self.source(), &self.target(), |&i| self.on_object(i), |&s| self.on_morphism(s))
    }
}
