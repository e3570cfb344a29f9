//! Small functors used by the tests, the acceptance suite, and the CLI.

use std::collections::BTreeMap;

use super::functor::{CatValuedFunctor, FunctorData, LevelwiseFunctor};
use crate::twocat::{MorphismRecord, PosetEnriched2Cat};

pub fn terminal_category() -> PosetEnriched2Cat {
    PosetEnriched2Cat::category(vec!["*".into()], Vec::new(), &[]).expect("terminal category")
}

pub fn discrete_category(names: &[&str]) -> PosetEnriched2Cat {
    PosetEnriched2Cat::category(names.iter().map(|s| s.to_string()).collect(), Vec::new(), &[]).expect("discrete category")
}

/// `C = [0]` and `F(0) = [1]`.
pub fn point_base_example() -> CatValuedFunctor {
    CatValuedFunctor::constant(PosetEnriched2Cat::interval(0), PosetEnriched2Cat::interval(1)).expect("valid functor")
}

/// `C = [1]`, `F(0)` terminal, `F(1)` discrete on `a, b`.
pub fn interval_example() -> CatValuedFunctor {
    let base = PosetEnriched2Cat::interval(1);
    let fibers = vec![terminal_category(), discrete_category(&["a", "b"])];
    let collapse = FunctorData { objects: vec![0, 0], morphisms: vec![0, 0] };
    CatValuedFunctor::new(base, fibers, vec![collapse], BTreeMap::new()).expect("valid functor")
}

/// The constant functor at the terminal category over `[1]`.
pub fn terminal_over_interval() -> CatValuedFunctor {
    CatValuedFunctor::constant(PosetEnriched2Cat::interval(1), terminal_category()).expect("valid functor")
}

/// [`interval_example`] collapsed onto [`terminal_over_interval`].
pub fn collapse_map() -> LevelwiseFunctor {
    LevelwiseFunctor {
        components: vec![
            FunctorData { objects: vec![0], morphisms: vec![0] },
            FunctorData { objects: vec![0, 0], morphisms: vec![0, 0] },
        ],
    }
}

/// One object `*` with an idempotent `e` and a 2-cell `id ⇒ e`, acting on
/// `[1]` by the constant functor at `0`; the 2-cell goes to the unique
/// transformation from it to the identity.
pub fn idempotent_example() -> CatValuedFunctor {
    let base = PosetEnriched2Cat::new(
        vec!["*".into()],
        vec![MorphismRecord { name: "e".into(), source: 0, target: 0 }],
        &[(1, 1, 1)],
        &[(0, 1)],
    )
    .expect("valid 2-category");
    let fiber = PosetEnriched2Cat::interval(1);
    // fiber morphisms: id_0, id_1, 01
    let constant = FunctorData { objects: vec![0, 0], morphisms: vec![0, 0, 0] };
    let cells = BTreeMap::from([((0, 1), vec![0, 2])]);
    CatValuedFunctor::new(base, vec![fiber], vec![constant], cells).expect("valid functor")
}
