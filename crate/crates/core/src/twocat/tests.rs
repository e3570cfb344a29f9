use std::collections::BTreeSet;

use proptest::prelude::*;

use super::*;
use crate::simplexcat::BitVector;
use crate::sset::Budget;

fn rec(name: &str, source: usize, target: usize) -> MorphismRecord {
    MorphismRecord { name: name.into(), source, target }
}

/// One object `*`, an idempotent `e` with `id ⇒ e`.
fn idempotent_with_cell() -> PosetEnriched2Cat {
    PosetEnriched2Cat::new(vec!["*".into()], vec![rec("e", 0, 0)], &[(1, 1, 1)], &[(0, 1)]).unwrap()
}

/// Brute force: subsets of `0..=n` with the prescribed min and max.
fn brute_hom(n: usize, i: usize, j: usize) -> usize {
    (0u64..1 << (n + 1)).filter(|&s| s != 0 && s.trailing_zeros() as usize == i && 63 - s.leading_zeros() as usize == j).count()
}

/// Brute force 2-simplex count of a tabulated 2-category.
fn brute_triangles(c: &PosetEnriched2Cat) -> usize {
    let mors = c.morphisms();
    let mut count = 0;
    for f in 0..mors.len() {
        for g in 0..mors.len() {
            if mors[f].target != mors[g].source {
                continue;
            }
            for h in 0..mors.len() {
                if mors[h].source == mors[f].source && mors[h].target == mors[g].target && c.leq(&h, &c.compose(&f, &g)) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Brute force: strings of `n` composable morphisms of a 1-category.
fn brute_chains(c: &PosetEnriched2Cat, n: usize) -> usize {
    let mors = c.morphisms();
    let mut chains: Vec<usize> = (0..mors.len()).collect();
    if n == 0 {
        return c.object_count();
    }
    for _ in 1..n {
        chains = chains.iter().flat_map(|&last| (0..mors.len()).filter(move |&g| mors[g].source == mors[last].target)).collect();
    }
    chains.len()
}

#[test]
fn sigma_homs() {
    let s2 = Sigma::standard(2).unwrap();
    let hom: BTreeSet<String> = s2.hom(&0, &2).iter().map(|&m| mask_label(m)).collect();
    assert_eq!(hom, BTreeSet::from(["{0,2}".to_string(), "{0,1,2}".to_string()]));
    assert_eq!(s2.hom(&1, &1), vec![0b10]);
    assert!(s2.hom(&2, &1).is_empty());
    for n in 1..=6 {
        let s = Sigma::standard(n).unwrap();
        assert_eq!(s.hom(&0, &n).len(), 1 << (n - 1));
        for i in 0..=n {
            for j in 0..=n {
                assert_eq!(s.hom(&i, &j).len(), brute_hom(n, i, j));
            }
        }
    }
    assert!(matches!(Sigma::new(&[]), Err(crate::Error::Precondition(_))));
}

#[test]
fn sigma_is_a_two_category() {
    for mask in 1u64..1 << 6 {
        let elements: Vec<usize> = (0..6).filter(|b| mask >> b & 1 == 1).collect();
        if elements.len() <= 5 {
            check_two_category(&Sigma::new(&elements).unwrap()).unwrap();
        }
    }
    let tab = sigma(&[0, 1, 2]).unwrap();
    assert_eq!(tab.object_count(), 3);
    assert_eq!(tab.morphisms().len(), 3 + 3 + 1);
}

#[test]
fn sigma_maps() {
    let d0 = MonotoneMap::face(0, 2).unwrap();
    let f = sigma_map(&d0);
    assert_eq!(f.on_morphism(0b11), 0b110);
    f.check().unwrap();
    let id = sigma_map(&MonotoneMap::identity(3));
    assert!((0u64..16).all(|s| id.on_morphism(s) == s));
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                for alpha in MonotoneMap::all(a, b) {
                    for beta in MonotoneMap::all(b, c) {
                        let composite = sigma_map(&beta.compose(&alpha).unwrap());
                        let (fa, fb) = (sigma_map(&alpha), sigma_map(&beta));
                        for s in 1u64..1 << (a + 1) {
                            assert_eq!(composite.on_morphism(s), fb.on_morphism(fa.on_morphism(s)));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn scaled_nerve_small_cases() {
    let point = PosetEnriched2Cat::category(vec!["*".into()], vec![], &[]).unwrap();
    let n = scaled_nerve(&point, 3, &mut Budget::unlimited()).unwrap();
    assert_eq!(n.counts(), vec![1, 1, 1, 1]);
    let interval = PosetEnriched2Cat::interval(1);
    let n = scaled_nerve(&interval, 2, &mut Budget::unlimited()).unwrap();
    assert_eq!(n.counts(), vec![2, 3, 4]);
    let s2 = sigma(&[0, 1, 2]).unwrap();
    let n = scaled_nerve(&s2, 2, &mut Budget::unlimited()).unwrap();
    assert_eq!(n.count(2), brute_triangles(&s2));
    // non-thin: objects 012, 002, 022 with long edge {0,2} strictly below {0,1,2}
    assert_eq!(n.count(2) - n.thin_triangles().len(), 3);
    let e = idempotent_with_cell();
    let n = scaled_nerve(&e, 2, &mut Budget::unlimited()).unwrap();
    assert_eq!(n.count(2), brute_triangles(&e));
}

#[test]
fn scaled_nerve_identities_to_dimension_three() {
    let fixtures = [sigma(&[0, 1, 2]).unwrap(), idempotent_with_cell(), materialize(&delta_prime(1)).unwrap()];
    for c in &fixtures {
        let n = scaled_nerve(c, 3, &mut Budget::unlimited()).unwrap();
        n.check_identities().unwrap();
        n.check_markings().unwrap();
    }
}

#[test]
fn discrete_nerve_is_ordinary() {
    let mut cats = vec![PosetEnriched2Cat::interval(2), idempotent_with_cell().discard_two_cells()];
    // two parallel arrows
    cats.push(PosetEnriched2Cat::category(vec!["a".into(), "b".into()], vec![rec("f", 0, 1), rec("g", 0, 1)], &[]).unwrap());
    for c in &cats {
        let n = scaled_nerve(c, 3, &mut Budget::unlimited()).unwrap();
        for k in 0..=3 {
            assert_eq!(n.count(k), brute_chains(c, k), "level {k}");
        }
        // every triangle is thin
        assert_eq!(n.thin_triangles().len(), n.count(2));
    }
}

#[test]
fn nerve_budget() {
    let s = sigma(&[0, 1, 2, 3]).unwrap();
    let err = scaled_nerve(&s, 3, &mut Budget::new(10)).unwrap_err();
    assert_eq!(err, crate::Error::Budget { budget: 10 });
}

#[test]
fn lax_slices() {
    let s2 = Sigma::standard(2).unwrap();
    let over = LaxOver::new(s2.clone(), 2);
    assert_eq!(over.objects().len(), 2 + 1 + 1);
    check_two_category(&over).unwrap();
    check_two_functor(&over, &s2, |p| over.forget_object(p), |m| over.forget_morphism(m)).unwrap();
    let under = LaxUnder::new(s2.clone(), 0);
    assert_eq!(under.objects().len(), 1 + 1 + 2);
    check_two_functor(&under, &s2, |p| under.forget_object(p), |m| under.forget_morphism(m)).unwrap();
    // discrete base: the ordinary slice
    let c = PosetEnriched2Cat::interval(2);
    let over = LaxOver::new(c.clone(), 2);
    for phi in over.objects() {
        for psi in over.objects() {
            let expected: Vec<usize> = c.hom(&c.source(&phi), &c.source(&psi)).into_iter().filter(|f| c.compose(f, &psi) == phi).collect();
            let got: Vec<usize> = over.hom(&phi, &psi).into_iter().map(|m| m.f).collect();
            assert_eq!(got, expected);
        }
    }
    let tab = materialize(&over).unwrap();
    assert!(tab.is_discrete());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn forgetful_functors_on_random_subcategories(mask in 1u32..8, reversed in any::<bool>(), pick in 0usize..3) {
        let objects: Vec<usize> = (0..3).filter(|b| mask >> b & 1 == 1).collect();
        let c = pick.min(objects.len() - 1);
        let base = Full { base: SimplexTwoCat { max: 2 }, objects: objects.clone() };
        if reversed {
            let base = Op2(base);
            let over = LaxOver::new(base.clone(), objects[c]);
            prop_assert!(check_two_functor(&over, &base, |p| over.forget_object(p), |m| over.forget_morphism(m)).is_ok());
            let under = LaxUnder::new(base.clone(), objects[c]);
            prop_assert!(check_two_functor(&under, &base, |p| under.forget_object(p), |m| under.forget_morphism(m)).is_ok());
        } else {
            let over = LaxOver::new(base.clone(), objects[c]);
            prop_assert!(check_two_functor(&over, &base, |p| over.forget_object(p), |m| over.forget_morphism(m)).is_ok());
            let under = LaxUnder::new(base.clone(), objects[c]);
            prop_assert!(check_two_functor(&under, &base, |p| under.forget_object(p), |m| under.forget_morphism(m)).is_ok());
        }
    }
}

#[test]
fn slice_poset() {
    let p = n_over_slice(2, 2);
    assert_eq!(p.len(), 3 + 6 + 10);
    let a = p.position(&MonotoneMap::new(vec![0, 1], 2).unwrap()).unwrap();
    let b = p.position(&MonotoneMap::new(vec![0, 1, 2], 2).unwrap()).unwrap();
    assert!(p.leq(a, b));
    assert!(!p.leq(b, a));
    assert!((0..p.len()).all(|x| p.leq(x, x)));
    for n in 0..=3 {
        for m in 0..=3 {
            n_over_slice(n, m).check_partial_order().unwrap();
        }
    }
    assert!(p.to_dot("N/[2]").starts_with("digraph \"N/[2]\" {\n"));
}

#[test]
fn slice_order_matches_lax_overcategory() {
    // φ ≤ φ' in ℕ_{/[n]} iff the shift map is a morphism φ -> φ' of Δ'_{/[n]}
    for n in 0..=2 {
        let slice = slice_over_simplex(n, 2);
        let p = n_over_slice(n, 2);
        for (a, phi) in p.elements.iter().enumerate() {
            for (b, psi) in p.elements.iter().enumerate() {
                let (m, m2) = (phi.source_dim(), psi.source_dim());
                let via_slice = m <= m2
                    && slice.hom(phi, psi).iter().any(|s| s.f.values().iter().enumerate().all(|(i, &v)| v == i + m2 - m));
                assert_eq!(p.leq(a, b), via_slice, "{phi} vs {psi}");
            }
        }
    }
}

#[test]
fn cubes() {
    let q = cube_q(2).unwrap();
    let mut labels = q.labels();
    labels.sort();
    assert_eq!(labels, ["001", "002", "011", "012", "01", "02", "11", "12"].iter().map(|s| s.to_string()).collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>());
    let f1 = cube_f(1).unwrap();
    assert_eq!(f1.vertices, vec![MonotoneMap::new(vec![0, 0], 1).unwrap(), MonotoneMap::identity(1)]);
    for k in 1..=6 {
        let (f, b, q) = (cube_f(k).unwrap(), cube_b(k).unwrap(), cube_q(k).unwrap());
        assert_eq!(f.precompose(&MonotoneMap::face(0, k).unwrap()).unwrap(), b);
        f.check_edges().unwrap();
        b.check_edges().unwrap();
        q.check_edges().unwrap();
        assert_eq!(q.face(1, true).unwrap(), f);
        assert_eq!(q.face(1, false).unwrap(), b);
    }
    assert!(cube_f(0).is_err());
    assert_eq!(q.vertex(&BitVector::from_bits(&[0, 0, 0])).label(), "01");
}

#[test]
fn g_categories() {
    let g0 = g_category(&[0]).unwrap();
    assert_eq!(g0.objects().len(), 1);
    assert_eq!(g0.morphisms().len(), 1);
    let g01 = g_category(&[0, 1]).unwrap();
    let labels: Vec<String> = g01.objects().iter().map(|&s| mask_label(s)).collect();
    assert_eq!(labels, ["{0}", "{0,1}"]);
    assert_eq!(g_category(&[0, 1, 2]).unwrap().objects().len(), 4);
    for elements in [vec![0], vec![0, 1], vec![0, 1, 2], vec![1, 3], vec![0, 2, 3, 5]] {
        let g = g_category(&elements).unwrap();
        check_two_category(&g).unwrap();
        // the recipe: lax undercategory of (Σ^I)^{(-,op)} at min I, 2-cells dropped
        let sigma = Sigma::new(&elements).unwrap();
        let recipe = materialize(&LaxUnder::new(Op2(sigma.clone()), sigma.min())).unwrap().discard_two_cells();
        let direct = g.to_category().unwrap();
        assert_eq!(recipe.object_count(), direct.object_count());
        assert_eq!(recipe.morphisms().len(), direct.morphisms().len());
        assert_eq!(recipe.composition_table().len(), direct.composition_table().len());
    }
}

#[test]
fn g_pullbacks() {
    for (i, j) in [(vec![0], vec![0]), (vec![1], vec![0, 1]), (vec![1, 2], vec![0, 1, 2]), (vec![2], vec![0, 1, 2]), (vec![0, 2], vec![0, 1, 2, 3])] {
        g_pullback(&i, &j).unwrap().check().unwrap();
    }
    assert!(matches!(g_pullback(&[0, 4], &[0, 1]), Err(crate::Error::Precondition(_))));
}

#[test]
fn reports() {
    let r0 = nerve_condition_report(0, 0).unwrap();
    assert!(r0.zero_obligations.is_empty() && r0.limit_cubes.is_empty() && r0.cartesian_edges.is_empty());
    let r1 = nerve_condition_report(1, 1).unwrap();
    assert_eq!(r1.zero_obligations, ["00"]);
    assert_eq!(r1.limit_cubes.len(), 1);
    assert_eq!(r1.limit_cubes[0].vertices, ["0", "00", "1", "01"]);
    let r2 = nerve_condition_report(2, 2).unwrap();
    assert_eq!(r2.zero_obligations, ["00", "11", "001", "002", "011"]);
    let sigmas: Vec<&str> = r2.limit_cubes.iter().map(|c| c.sigma.as_str()).collect();
    assert_eq!(sigmas, ["01", "02", "12", "012"]);
    let top: BTreeSet<&str> = r2.limit_cubes[3].vertices.iter().map(String::as_str).collect();
    assert_eq!(top, BTreeSet::from(["01", "02", "11", "12", "001", "002", "011", "012"]));
    assert_eq!(r2.bicartesian_cubes[3].vertices, ["001", "011", "002", "012"]);
    assert!(r2.cartesian_edges.contains(&"0 -0-> 01".to_string()));
}

#[test]
fn m_poset_pushout() {
    let m = m_poset(1, 1, 2, &mut Budget::unlimited()).unwrap();
    m.set.check_identities().unwrap();
    let p = n_over_slice(1, 1).len();
    assert_eq!(m.set.count(0), m.slice_nerve.count(0) + p);
    m.r.check(&m.slice_nerve, &m.set, true).unwrap();
    m.s.check(&m.poset_nerve, &m.set, false).unwrap();
    assert!(m.r.is_injective() && m.s.is_injective());
    // {0} × N and {1} × N are disjoint in ℳ_n
    let r_vertices: BTreeSet<usize> = m.r.levels[0].iter().copied().collect();
    assert!(m.s.levels[0].iter().all(|v| !r_vertices.contains(v)));
}

#[test]
fn json_round_trip() {
    let c = idempotent_with_cell();
    let text = c.to_json();
    assert_eq!(text, r#"{"objects":["*"],"morphisms":[{"name":"e","source":"*","target":"*"}],"compositions":[["e","e","e"]],"order":[["id_*","e"]]}"#);
    assert_eq!(PosetEnriched2Cat::from_json(&text).unwrap(), c);
    let missing = r#"{"objects":["*"],"morphisms":[{"name":"e","source":"*","target":"*"}]}"#;
    assert!(PosetEnriched2Cat::from_json(missing).is_err());
    let not_assoc = r#"{"objects":["*"],"morphisms":[{"name":"a","source":"*","target":"*"},{"name":"b","source":"*","target":"*"}],
        "compositions":[["a","a","b"],["a","b","b"],["b","a","a"],["b","b","b"]]}"#;
    assert!(PosetEnriched2Cat::from_json(not_assoc).is_err());
    let cycle = r#"{"objects":["*"],"morphisms":[{"name":"e","source":"*","target":"*"}],"compositions":[["e","e","e"]],"order":[["id_*","e"],["e","id_*"]]}"#;
    assert!(PosetEnriched2Cat::from_json(cycle).is_err());
    assert!(PosetEnriched2Cat::from_json(r#"{"objects":["a"],"morphisms":[{"name":"f","source":"a","target":"b"}]}"#).is_err());
}
