//! Grothendieck constructions of category-valued functors on finite
//! categories: `χ(F)`, the section functor `Γ`, the maps `η` and `ev_c`, and
//! the lax construction over poset-enriched 2-categories.

mod chi;
pub mod fixtures;
mod functor;
mod gamma;
mod json;
mod lax;

pub use chi::{chi, chi_map, chi_restrictions, chi_simplex_json, fiber_comparison, Chi, ChiModel, ChiSimplex, FiberComparison, FiberedSimplicialSet};
pub use functor::{enumerate_functors, is_iso, CatValuedFunctor, FunctorData, LevelwiseFunctor};
pub use gamma::{check_eta_ev, eta, ev, gamma, Eta, EtaEvCheck, Gamma, GammaModel, GammaSimplex, GridMorphism, SliceGrid};
pub use json::{CellWire, FunctorWire, FunctorWireFile};
pub use lax::{check_comparison, compare_chi_lax, lax_chi, lax_map, lax_simplex_json, ComparisonReport, IndexedG, LaxChi, LaxModel, LaxSimplex};

#[cfg(test)]
mod tests;
