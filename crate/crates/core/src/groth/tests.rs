use std::collections::{BTreeMap, BTreeSet};

use super::fixtures::*;
use super::*;
use crate::simplexcat::MonotoneMap;
use crate::sset::Budget;
use crate::twocat::{pair_index, scaled_nerve_model, NerveSimplex, PosetEnriched2Cat};

fn budget() -> Budget {
    Budget::new(2_000_000)
}

/// `C = [1]`, `F(0) = [1]`, `F(1)` discrete on `a, b`, `F(01)` the
/// inclusion of the endpoints.
fn endpoints_example() -> CatValuedFunctor {
    let fibers = vec![PosetEnriched2Cat::interval(1), discrete_category(&["a", "b"])];
    let inclusion = FunctorData { objects: vec![0, 1], morphisms: vec![0, 1] };
    CatValuedFunctor::new(PosetEnriched2Cat::interval(1), fibers, vec![inclusion], BTreeMap::new()).unwrap()
}

/// `C = [2]` with `F(i) = [1]` and every transition the identity but
/// `F(12)`, which is constant at `1`.
fn three_step_example() -> CatValuedFunctor {
    let base = PosetEnriched2Cat::interval(2);
    let fiber = PosetEnriched2Cat::interval(1);
    // base morphisms after the identities: 01, 02, 12
    let id = FunctorData::identity(&fiber);
    let top = FunctorData { objects: vec![1, 1], morphisms: vec![1, 1, 1] };
    CatValuedFunctor::new(base, vec![fiber; 3], vec![id, top.clone(), top], BTreeMap::new()).unwrap()
}

fn fixtures() -> Vec<(&'static str, CatValuedFunctor)> {
    vec![
        ("point", point_base_example()),
        ("interval", interval_example()),
        ("terminal", terminal_over_interval()),
        ("endpoints", endpoints_example()),
        ("three-step", three_step_example()),
    ]
}

#[test]
fn functor_validation() {
    for (name, f) in fixtures() {
        let back = CatValuedFunctor::from_json(&f.to_json()).unwrap();
        assert_eq!(back, f, "{name}");
    }
    let lax = idempotent_example();
    assert_eq!(CatValuedFunctor::from_json(&lax.to_json()).unwrap(), lax);

    // F(12) ∘ F(01) must equal F(02)
    let base = PosetEnriched2Cat::interval(2);
    let fiber = PosetEnriched2Cat::interval(1);
    let id = FunctorData::identity(&fiber);
    let top = FunctorData { objects: vec![1, 1], morphisms: vec![1, 1, 1] };
    let bad = CatValuedFunctor::new(base, vec![fiber.clone(); 3], vec![id.clone(), id, top], BTreeMap::new());
    assert!(matches!(bad, Err(crate::Error::Invalid(_))));

    // a transformation to the identity that is not natural
    let base = idempotent_example().base().clone();
    let constant = FunctorData { objects: vec![0, 0], morphisms: vec![0, 0, 0] };
    let unnatural = CatValuedFunctor::new(base.clone(), vec![fiber.clone()], vec![constant.clone()], BTreeMap::from([((0, 1), vec![0, 0])]));
    assert!(unnatural.is_err());
    let missing = CatValuedFunctor::new(base, vec![fiber], vec![constant], BTreeMap::new());
    assert!(missing.is_err());

    assert!(CatValuedFunctor::from_json("{\"base\": {\"objects\": [\"0\"]}, \"fibers\": {}}").is_err());
    assert!(CatValuedFunctor::from_json("not json").is_err());
}

#[test]
fn functor_enumeration() {
    let mut b = budget();
    for n in 0..=3 {
        for m in 0..=2 {
            let all = enumerate_functors(&PosetEnriched2Cat::interval(n), &PosetEnriched2Cat::interval(m), &vec![None; n + 1], &mut b).unwrap();
            assert_eq!(all.len(), MonotoneMap::all(n, m).len(), "[{n}] -> [{m}]");
            for f in &all {
                f.check(&PosetEnriched2Cat::interval(n), &PosetEnriched2Cat::interval(m)).unwrap();
            }
        }
    }
    let fixed = enumerate_functors(&PosetEnriched2Cat::interval(2), &PosetEnriched2Cat::interval(2), &[Some(0), None, Some(2)], &mut b).unwrap();
    assert_eq!(fixed.len(), 3);
    let tiny = &mut Budget::new(2);
    assert!(enumerate_functors(&PosetEnriched2Cat::interval(1), &PosetEnriched2Cat::interval(2), &[None, None], tiny).is_err());
}

/// Every family `{x_I}` of functors `Δ^I -> F(σ(min I))` over `σ` with the
/// restriction squares, found by testing all families.
fn literal_families(f: &CatValuedFunctor, s: &NerveSimplex<usize, usize>) -> BTreeSet<BTreeMap<u64, FunctorData>> {
    let n = s.dim();
    let arrow = |i: usize, j: usize| if i == j { s.objects[i] } else { *s.edge(i, j) };
    let masks: Vec<u64> = (1u64..1 << (n + 1)).collect();
    let elems = |m: u64| -> Vec<usize> { (0..=n).filter(|&i| m >> i & 1 == 1).collect() };
    let mut b = Budget::unlimited();
    let candidates: Vec<Vec<FunctorData>> = masks
        .iter()
        .map(|&m| {
            let e = elems(m);
            enumerate_functors(&PosetEnriched2Cat::interval(e.len() - 1), f.fiber(s.objects[e[0]]), &vec![None; e.len()], &mut b).unwrap()
        })
        .collect();
    let compatible = |i: u64, xi: &FunctorData, j: u64, xj: &FunctorData| {
        let (ei, ej) = (elems(i), elems(j));
        let t = arrow(ej[0], ei[0]);
        let pos: Vec<usize> = ei.iter().map(|a| ej.iter().position(|b| b == a).unwrap()).collect();
        for p in 0..ei.len() {
            if xj.objects[pos[p]] != f.on_object(t, xi.objects[p]) {
                return false;
            }
            for q in p + 1..ei.len() {
                let small = ei.len() + pair_index(ei.len() - 1, p, q);
                let large = ej.len() + pair_index(ej.len() - 1, pos[p], pos[q]);
                if xj.morphisms[large] != f.on_morphism(t, xi.morphisms[small]) {
                    return false;
                }
            }
        }
        true
    };
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; masks.len()];
    loop {
        let ok = masks.iter().enumerate().all(|(a, &i)| {
            masks.iter().enumerate().all(|(b2, &j)| i == j || i & !j != 0 || compatible(i, &candidates[a][choice[a]], j, &candidates[b2][choice[b2]]))
        });
        if ok {
            out.insert(masks.iter().enumerate().map(|(a, &m)| (m, candidates[a][choice[a]].clone())).collect());
        }
        let mut k = 0;
        loop {
            if k == masks.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn chi_matches_the_literal_definition() {
    for (name, f) in fixtures() {
        let x = chi(&f, 2, &mut budget()).unwrap();
        for n in 0..=2 {
            for s in &x.fibered.base.simplices[n] {
                let ours: BTreeSet<BTreeMap<u64, FunctorData>> =
                    x.model.simplices[n].iter().filter(|t| &t.base == s).map(|t| chi_restrictions(&f, t)).collect();
                let count = x.model.simplices[n].iter().filter(|t| &t.base == s).count();
                assert_eq!(ours.len(), count, "{name}: restrictions determine the simplex");
                assert_eq!(ours, literal_families(&f, s), "{name} over {s:?}");
            }
        }
    }
}

#[test]
fn chi_examples() {
    let mut b = budget();
    // constant at the terminal category
    for base in [PosetEnriched2Cat::interval(2), idempotent_example().base().discard_two_cells()] {
        let f = CatValuedFunctor::constant(base.clone(), terminal_category()).unwrap();
        let x = chi(&f, 3, &mut b).unwrap();
        assert_eq!(x.fibered.total.counts(), x.fibered.base.set.counts());
        assert!(x.fibered.projection.is_bijective(&x.fibered.base.set));
        assert_eq!(x.fibered.total.marked_edges().len(), x.fibered.total.count(1));
    }

    // C = [0]
    let f = point_base_example();
    let x = chi(&f, 3, &mut b).unwrap();
    let nerve = scaled_nerve_model(f.fiber(0), 3, &mut b).unwrap();
    assert_eq!(x.fibered.total.counts(), nerve.set.counts());
    let cmp = fiber_comparison(&f, &x, 0, &mut b).unwrap();
    cmp.check().unwrap();
    assert_eq!(cmp.fiber.counts(), x.fibered.total.counts());

    // C = [1], F(0) terminal, F(1) = {a, b}
    let f = interval_example();
    let x = chi(&f, 2, &mut b).unwrap();
    assert_eq!(x.fibered.total.count(0), 3);
    let over = x.fibered.base_edge(2).unwrap();
    let edges: Vec<usize> = x.fibered.total.nondegenerate(1).into_iter().filter(|&e| x.fibered.projection.apply(1, e) == over).collect();
    assert_eq!(edges.len(), 2);
    assert!(edges.iter().all(|&e| x.fibered.total.is_marked(e)));

    // a non-invertible fiber component is not Cartesian
    let f = endpoints_example();
    let x = chi(&f, 1, &mut b).unwrap();
    let over = x.fibered.base_edge(2).unwrap();
    let marked = (0..x.fibered.total.count(1)).filter(|&e| x.fibered.projection.apply(1, e) == over && x.fibered.total.is_marked(e)).count();
    let all = (0..x.fibered.total.count(1)).filter(|&e| x.fibered.projection.apply(1, e) == over).count();
    // over 01: y0 ∈ [1], y1 ∈ {a, b}, g : y0 -> F(01)(y1); three edges, two invertible
    assert_eq!((marked, all), (2, 3));

    let json = chi_simplex_json(&f, &x.model.simplices[1][0]);
    assert_eq!(json["level"], 1);
    assert!(json["fiber_data"]["morphisms"].is_object());

    assert!(matches!(chi(&idempotent_example(), 1, &mut b), Err(crate::Error::Precondition(_))));
    assert!(matches!(chi(&f, 3, &mut Budget::new(5)), Err(crate::Error::Budget { .. })));
}

#[test]
fn chi_is_a_marked_simplicial_set_with_nerve_fibers() {
    let mut b = budget();
    for (name, f) in fixtures() {
        let x = chi(&f, 3, &mut b).unwrap();
        x.fibered.total.check_identities().unwrap_or_else(|e| panic!("{name}: {e}"));
        x.fibered.total.check_markings().unwrap_or_else(|e| panic!("{name}: {e}"));
        for c in 0..f.base().object_count() {
            fiber_comparison(&f, &x, c, &mut b).unwrap().check().unwrap_or_else(|e| panic!("{name} over {c}: {e}"));
        }
    }
}

#[test]
fn gamma_examples() {
    let mut b = budget();
    for base in [PosetEnriched2Cat::interval(1), PosetEnriched2Cat::interval(2)] {
        let x = FiberedSimplicialSet::identity(&base, 2, &mut b).unwrap();
        for c in 0..base.object_count() {
            let g = gamma(&x, c, 2, &mut b).unwrap();
            assert_eq!(g.set().counts(), vec![1, 1, 1]);
            g.set().check_identities().unwrap();
        }
    }

    let f = point_base_example();
    let x = chi(&f, 2, &mut b).unwrap();
    let g = gamma(&x.fibered, 0, 2, &mut b).unwrap();
    let e = eta(&f, &x, &g, 0, &mut b).unwrap();
    assert_eq!(g.set().counts(), e.nerve.set.counts());
    e.map.check(&e.nerve.set, g.set(), false).unwrap();
    assert!(e.map.is_bijective(g.set()));

    for (name, f) in fixtures() {
        let x = chi(&f, 2, &mut b).unwrap();
        for c in 0..f.base().object_count() {
            let g = gamma(&x.fibered, c, 2, &mut b).unwrap();
            g.set().check_identities().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(g.set().count(0) >= f.fiber(c).object_count(), "{name}");
            let e = eta(&f, &x, &g, c, &mut b).unwrap();
            let vertices: BTreeSet<usize> = e.map.levels[0].iter().copied().collect();
            assert_eq!(vertices.len(), f.fiber(c).object_count(), "{name}: η is injective on vertices");
        }
    }

    assert!(matches!(gamma(&x.fibered, 0, 3, &mut b), Err(crate::Error::Precondition(_))));
}

#[test]
fn ev_after_eta_is_the_identity() {
    let mut b = budget();
    for (name, f) in fixtures() {
        for c in 0..f.base().object_count() {
            let report = check_eta_ev(&f, c, 2, &mut b).unwrap();
            assert!(report.passed(), "{name} over {c}: {:?}", report.failures);
            assert_eq!(report.nerve_counts.len(), 3);
        }
    }
}

#[test]
fn lax_examples() {
    let mut b = budget();
    let trivial = CatValuedFunctor::constant(PosetEnriched2Cat::interval(0), terminal_category()).unwrap();
    let l = lax_chi(&trivial, 2, &mut b).unwrap();
    assert_eq!(l.fibered.total.counts(), vec![1, 1, 1]);

    for (name, f) in fixtures() {
        let x = chi(&f, 2, &mut b).unwrap();
        let l = lax_chi(&f, 2, &mut b).unwrap();
        l.fibered.total.check_identities().unwrap_or_else(|e| panic!("{name}: {e}"));
        l.fibered.total.check_markings().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(l.fibered.total.count(0), x.fibered.total.count(0), "{name}");
        for c in 0..f.base().object_count() {
            let (fiber, _) = l.fibered.fiber(c).unwrap();
            assert_eq!(fiber.count(0), f.fiber(c).object_count(), "{name}");
        }
        let map = compare_chi_lax(&f, &x, &l).unwrap();
        let report = check_comparison(&f, &x, &l, &map);
        assert!(report.passed(), "{name}: {:?}", report.failures);
        if f.base().object_count() == 1 {
            assert!(report.injective, "{name}");
        }
    }

    let f = idempotent_example();
    let l = lax_chi(&f, 2, &mut b).unwrap();
    l.fibered.total.check_identities().unwrap();
    assert_eq!(l.fibered.total.count(0), 2);
    let json = lax_simplex_json(&f, &l.model.simplices[1][0]);
    assert_eq!(json["level"], 1);
    assert!(matches!(compare_chi_lax(&f, &chi(&point_base_example(), 2, &mut b).unwrap(), &l), Err(crate::Error::Precondition(_))));
    assert!(matches!(lax_chi(&f, 3, &mut b), Err(crate::Error::Precondition(_))));
}

#[test]
fn comparison_is_natural() {
    let mut b = budget();
    let (from, to, phi) = (interval_example(), terminal_over_interval(), collapse_map());
    phi.check(&from, &to).unwrap();
    let (x, y) = (chi(&from, 2, &mut b).unwrap(), chi(&to, 2, &mut b).unwrap());
    let (lx, ly) = (lax_chi(&from, 2, &mut b).unwrap(), lax_chi(&to, 2, &mut b).unwrap());
    let chi_phi = chi_map(&phi, &x, &y).unwrap();
    let lax_phi = lax_map(&phi, &lx, &ly).unwrap();
    chi_phi.check(&x.fibered.total, &y.fibered.total, true).unwrap();
    lax_phi.check(&lx.fibered.total, &ly.fibered.total, true).unwrap();
    let (cx, cy) = (compare_chi_lax(&from, &x, &lx).unwrap(), compare_chi_lax(&to, &y, &ly).unwrap());
    assert_eq!(chi_phi.then(&cy), cx.then(&lax_phi));
    assert!(LevelwiseFunctor { components: phi.components.clone() }.check(&to, &from).is_err());
}

#[test]
fn lax_edges_over_an_idempotent() {
    // an edge is (f, y0, y1, g : y0 -> F(f)(y1)); over id: y0 <= y1, three
    // choices; over e: F(e)(y1) = 0 forces y0 = 0, two choices. Invertible g:
    // the two identities over id and both edges over e.
    let l = lax_chi(&idempotent_example(), 2, &mut budget()).unwrap();
    assert_eq!(l.fibered.total.count(1), 5);
    assert_eq!(l.fibered.total.marked_edges().len(), 4);
}
