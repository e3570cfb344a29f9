use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::abgrp::FpAbelianGroup;
use crate::intlin::{int_vec, IntMatrix};
use crate::random::{random_complex, random_simplicial_group};
use crate::sset::standard_simplex;

fn z() -> FpAbelianGroup {
    FpAbelianGroup::cyclic(0)
}

fn z_delta(k: usize, m: usize) -> SimplicialAbGroup {
    SimplicialAbGroup::free(&standard_simplex(k, m).unwrap())
}

fn ranks(b: &ChainComplexFp) -> Vec<usize> {
    b.levels().iter().map(|g| g.normal_form().free_rank).collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn complex_basics() {
    let b = ChainComplexFp::concentrated(&z(), 1, 3);
    assert_eq!(b.omega().unwrap(), ChainComplexFp::concentrated(&z(), 0, 2));
    assert_eq!(b.omega().unwrap().omega().unwrap(), ChainComplexFp::concentrated(&FpAbelianGroup::trivial(), 0, 1));
    assert_eq!(ChainComplexFp::from_json(&b.to_json()).unwrap(), b);
    let bad = r#"{"truncation":2,"levels":[{"generators":1,"relations":{"rows":1,"cols":0,"entries":[[]]}},{"generators":1,"relations":{"rows":1,"cols":0,"entries":[[]]}},{"generators":1,"relations":{"rows":1,"cols":0,"entries":[[]]}}],"differentials":[{"rows":1,"cols":1,"entries":[["1"]]},{"rows":1,"cols":1,"entries":[["1"]]}]}"#;
    assert!(matches!(ChainComplexFp::from_json(bad), Err(crate::Error::Parse(_))));
    let disk = ChainComplexFp::new(vec![z(), z()], vec![AbHom::new(z(), z(), IntMatrix::from_rows(&[[2]])).unwrap()]).unwrap();
    assert_eq!(disk.homology(0).unwrap().invariant_factors, int_vec(&[2]));
}

#[test]
fn normalized_chain_examples() {
    let c = SimplicialAbGroup::constant(&FpAbelianGroup::cyclic(4), 3);
    let ch = normalized_chains(&c).unwrap().complex;
    assert_eq!(ch.level(0).normal_form(), FpAbelianGroup::cyclic(4).normal_form());
    assert!(ch.levels()[1..].iter().all(FpAbelianGroup::is_trivial));
    let a = z_delta(1, 2);
    let ch = normalized_chains(&a).unwrap();
    assert_eq!(ranks(&ch.complex), vec![2, 1, 0]);
    // d_0 of the normalized generator is ±([1] - [0]) inside A_0.
    let gen = ch.complex.d(1).unwrap();
    let image = ch.inclusions[0].compose(gen).unwrap().matrix().column(0);
    assert!(image == int_vec(&[-1, 1]) || image == int_vec(&[1, -1]));
    for n in 0..=3 {
        let ch = normalized_chains(&z_delta(n, 3)).unwrap().complex;
        let expected: Vec<usize> = (0..=3).map(|k| binomial(n + 1, k + 1)).collect();
        assert_eq!(ranks(&ch), expected, "C(ZΔ^{n})");
        assert!(ChainComplexFp::new(ch.levels().to_vec(), ch.differentials().to_vec()).is_ok());
    }
}

#[test]
fn split_examples() {
    let c = SimplicialAbGroup::constant(&z(), 2);
    let s = split_decomposition(&c).unwrap();
    assert_eq!(s.verify().unwrap(), Ok(()));
    for n in 1..=2 {
        assert!(s.normalized.level(n).is_trivial());
        assert_eq!(s.degenerate.level(n).normal_form(), z().normal_form());
    }
    let s = split_decomposition(&z_delta(2, 3)).unwrap();
    assert_eq!(s.verify().unwrap(), Ok(()));
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..3 {
        let a = random_simplicial_group(&mut rng, 3, 2).unwrap();
        let s = split_decomposition(&a).unwrap();
        assert_eq!(s.verify().unwrap(), Ok(()));
        for n in 0..=3 {
            let total = a.level(n).normal_form().free_rank;
            assert_eq!(total, s.normalized.level(n).normal_form().free_rank + s.degenerate.level(n).normal_form().free_rank);
        }
    }
}

#[test]
fn nerve_of_shifted_z() {
    let b = ChainComplexFp::concentrated(&z(), 1, 5);
    let n = dold_kan_nerve(&b, 5).unwrap();
    let r: Vec<usize> = n.group.levels().iter().map(|g| g.normal_form().free_rank).collect();
    assert_eq!(r, vec![0, 1, 2, 3, 4, 5]);
    assert!(n.group.levels().iter().all(|g| g.normal_form().invariant_factors.is_empty()));
    assert!(n.group.truncate(3).unwrap().check_identities().is_ok());
    // Level 2: only the three edges carry generators; b_01 - b_02 + b_12 = 0.
    let idx: Vec<String> = n.index(2).iter().map(|s| s.label()).collect();
    assert_eq!(idx, ["0", "1", "2", "01", "02", "12", "012"]);
    let ker = n.inclusions[2].matrix();
    for c in 0..ker.cols() {
        let col = ker.column(c);
        assert_eq!(col.len(), 3);
        assert_eq!(&col[0] - &col[1] + &col[2], 0.into());
    }
    let d0 = dold_kan_nerve(&ChainComplexFp::concentrated(&FpAbelianGroup::cyclic(6), 0, 2), 2).unwrap();
    assert_eq!(d0.group.level(0).normal_form(), FpAbelianGroup::cyclic(6).normal_form());
}

#[test]
fn counit_examples() {
    let b = ChainComplexFp::concentrated(&z(), 1, 4);
    let (_, chains, eps) = counit(&b, 4).unwrap();
    assert_eq!(eps.first_non_iso().unwrap(), None);
    assert_eq!(eps.check(&chains.complex, &b).unwrap(), Ok(()));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..4 {
        let b = random_complex(&mut rng, 4, 3).unwrap().complex;
        let (_, chains, eps) = counit(&b, 4).unwrap();
        assert_eq!(eps.first_non_iso().unwrap(), None);
        assert_eq!(eps.check(&chains.complex, &b).unwrap(), Ok(()));
        for k in 0..4 {
            assert_eq!(chains.complex.homology(k).unwrap(), b.homology(k).unwrap());
        }
    }
    let g = FpAbelianGroup::cyclic(5);
    let (_, _, eps) = counit(&ChainComplexFp::concentrated(&g, 0, 2), 2).unwrap();
    assert_eq!(eps.levels[0], AbHom::identity(&g));
}

#[test]
fn unit_examples() {
    let a = z_delta(1, 3);
    let (_, nerve, eta) = unit(&a).unwrap();
    assert_eq!(eta.check(&a, &nerve.group).unwrap(), Ok(()));
    assert_eq!(eta.first_non_iso().unwrap(), None);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let a = random_simplicial_group(&mut rng, 3, 2).unwrap();
    let (_, nerve, eta) = unit(&a).unwrap();
    assert_eq!(eta.check(&a, &nerve.group).unwrap(), Ok(()));
    assert_eq!(eta.first_non_iso().unwrap(), None);
    // Naturality against 3·id.
    let three = SimplicialMap { levels: a.levels().iter().map(|g| AbHom::identity(g).scale(3)).collect() };
    let n_three = SimplicialMap { levels: nerve.group.levels().iter().map(|g| AbHom::identity(g).scale(3)).collect() };
    let lhs = three.then(&eta).unwrap();
    let rhs = eta.then(&n_three).unwrap();
    for (l, r) in lhs.levels.iter().zip(&rhs.levels) {
        assert!(l.equals_as_map(r).unwrap());
    }
}

#[test]
fn nerve_functoriality() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let r = random_complex(&mut rng, 3, 3).unwrap();
    let b = &r.complex;
    let (nerve, chains, eps) = counit(b, 3).unwrap();
    let ng = nerve_map(&r.automorphism, &nerve, &nerve).unwrap();
    assert_eq!(ng.check(&nerve.group, &nerve.group).unwrap(), Ok(()));
    let cng = chains_map(&ng, &nerve.group, &nerve.group).unwrap();
    assert_eq!(cng.check(&chains.complex, &chains.complex).unwrap(), Ok(()));
    // ε ∘ C(N(g)) = g ∘ ε
    let lhs = cng.then(&eps).unwrap();
    let rhs = eps.then(&r.automorphism).unwrap();
    for (l, r) in lhs.levels.iter().zip(&rhs.levels) {
        assert!(l.equals_as_map(r).unwrap());
    }
}

#[test]
fn omega_checks() {
    assert!(omega_compat_check(&z_delta(2, 3)).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..2 {
        let b = random_complex(&mut rng, 3, 2).unwrap().complex;
        assert!(omega_compat_check(&dold_kan_nerve(&b, 3).unwrap().group).unwrap());
    }
}

#[test]
fn conservativity() {
    let a = z_delta(1, 3);
    let id = SimplicialMap::identity(&a);
    let rep = conservativity_check(&id, &a, &a, 3).unwrap();
    assert!(rep.verdict);
    assert_eq!(rep.ladder.len(), 3 + 2 + 1);
    let (_, nerve, eta) = unit(&a).unwrap();
    assert!(conservativity_check(&eta, &a, &nerve.group, 3).unwrap().verdict);
    let two = SimplicialMap { levels: a.levels().iter().map(|g| AbHom::identity(g).scale(2)).collect() };
    assert!(matches!(conservativity_check(&two, &a, &a, 3), Err(crate::Error::Precondition(_))));
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let r = random_complex(&mut rng, 3, 2).unwrap();
    let n = dold_kan_nerve(&r.complex, 3).unwrap();
    let ng = nerve_map(&r.automorphism, &n, &n).unwrap();
    assert!(conservativity_check(&ng, &n.group, &n.group, 3).unwrap().verdict);
}
