//! Seeded generators for random complexes and simplicial groups.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::abgrp::{AbHom, FpAbelianGroup};
use crate::doldkan::{dold_kan_nerve, ChainComplexFp, ChainMap};
use crate::error::Result;
use crate::intlin::IntMatrix;
use crate::sabgrp::{SimplicialAbGroup, SimplicialMap};
use crate::sset::standard_simplex;

/// A random unimodular `n x n` matrix and its inverse.
pub fn unimodular<R: Rng>(rng: &mut R, n: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n == 0 {
        return (u, inv);
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        let mut e = IntMatrix::identity(n);
        let mut e_inv = IntMatrix::identity(n);
        if i == j {
            e.set(i, i, BigInt::from(-1));
            e_inv.set(i, i, BigInt::from(-1));
        } else {
            let c = *[-2i64, -1, 1, 2].choose(rng).expect("nonempty");
            e.set(i, j, BigInt::from(c));
            e_inv.set(i, j, BigInt::from(-c));
        }
        u = &e * &u;
        inv = &inv * &e_inv;
    }
    (u, inv)
}

/// New generators `P x` for `G`, with the isomorphism and its inverse.
pub fn rebase<R: Rng>(rng: &mut R, g: &FpAbelianGroup) -> Result<(AbHom, AbHom)> {
    let (p, p_inv) = unimodular(rng, g.generators());
    let (v, _) = unimodular(rng, g.relations().cols());
    let rel = &(&p * g.relations()) * &v;
    let h = FpAbelianGroup::new(g.generators(), rel)?;
    Ok((AbHom::unchecked(g.clone(), h.clone(), p), AbHom::unchecked(h, g.clone(), p_inv)))
}

/// A random complex with its chain automorphism made of a sign per summand.
#[derive(Clone, Debug)]
pub struct RandomComplex {
    pub complex: ChainComplexFp,
    pub automorphism: ChainMap,
}

/// Direct sums of `Z/m[k]`, `Z[k]` and disks `Z/m --×c--> Z/m`, at most
/// `max_gens` generators per level, then scrambled by unimodular changes of
/// generators and relators.
pub fn random_complex<R: Rng>(rng: &mut R, truncation: usize, max_gens: usize) -> Result<RandomComplex> {
    let mut room = vec![max_gens; truncation + 1];
    let mut parts: Vec<(ChainComplexFp, i64)> = Vec::new();
    let attempts = rng.gen_range(1..=2 * (truncation + 1));
    for _ in 0..attempts {
        let k = rng.gen_range(0..=truncation);
        let modulus = *[0i64, 0, 2, 3, 4, 6].choose(rng).expect("nonempty");
        let g = FpAbelianGroup::cyclic(modulus);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        if k < truncation && rng.gen_bool(0.5) && room[k] > 0 && room[k + 1] > 0 {
            let c = *[1i64, -1, 2, 3, -2].choose(rng).expect("nonempty");
            let levels: Vec<FpAbelianGroup> =
                (0..=truncation).map(|i| if i == k || i == k + 1 { g.clone() } else { FpAbelianGroup::trivial() }).collect();
            let diffs = (1..=truncation)
                .map(|i| {
                    if i == k + 1 {
                        AbHom::unchecked(g.clone(), g.clone(), IntMatrix::from_rows(&[[c]]))
                    } else {
                        AbHom::zero(&levels[i], &levels[i - 1])
                    }
                })
                .collect();
            let b = ChainComplexFp::unchecked(levels, diffs)?;
            room[k] -= 1;
            room[k + 1] -= 1;
            parts.push((b, sign));
        } else if room[k] > 0 {
            room[k] -= 1;
            parts.push((ChainComplexFp::concentrated(&g, k, truncation), sign));
        }
    }
    if parts.is_empty() {
        parts.push((ChainComplexFp::concentrated(&FpAbelianGroup::cyclic(0), 0, truncation), 1));
    }
    let refs: Vec<&ChainComplexFp> = parts.iter().map(|(b, _)| b).collect();
    let base = ChainComplexFp::direct_sum(&refs)?;
    let signs: Vec<AbHom> = (0..=truncation)
        .map(|k| {
            let blocks: Vec<AbHom> = parts.iter().map(|(b, s)| AbHom::identity(b.level(k)).scale(*s)).collect();
            AbHom::direct_sum(&blocks.iter().collect::<Vec<_>>())
        })
        .collect();
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    for k in 0..=truncation {
        let (f, g) = rebase(rng, base.level(k))?;
        phi.push(f);
        psi.push(g);
    }
    let (complex, _) = base.transport(&phi, &psi)?;
    let automorphism = ChainMap {
        levels: (0..=truncation).map(|k| phi[k].compose(&signs[k])?.compose(&psi[k])).collect::<Result<_>>()?,
    };
    Ok(RandomComplex { complex, automorphism })
}

/// `N(B) ⊕ ZΔ^k` (`k <= 2`, sometimes tensored with `Z/m`), with every level
/// re-presented by a random unimodular change of generators.
pub fn random_simplicial_group<R: Rng>(rng: &mut R, truncation: usize, max_gens: usize) -> Result<SimplicialAbGroup> {
    let b = random_complex(rng, truncation, max_gens)?.complex;
    let nerve = dold_kan_nerve(&b, truncation)?.group;
    let k = rng.gen_range(0..=2);
    let mut free = SimplicialAbGroup::free(&standard_simplex(k, truncation)?);
    if rng.gen_bool(0.3) {
        free = free.tensor_mod(*[2i64, 3].choose(rng).expect("nonempty"))?;
    }
    let sum = SimplicialAbGroup::direct_sum(&[&nerve, &free])?;
    scramble(rng, &sum).map(|(a, _)| a)
}

/// Re-presents every level; returns the new object and the isomorphism to it.
pub fn scramble<R: Rng>(rng: &mut R, a: &SimplicialAbGroup) -> Result<(SimplicialAbGroup, SimplicialMap)> {
    let mut phi = Vec::new();
    let mut psi = Vec::new();
    for g in a.levels() {
        let (f, h) = rebase(rng, g)?;
        phi.push(f);
        psi.push(h);
    }
    a.transport(&phi, &psi)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn unimodular_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 0..5 {
            let (u, v) = unimodular(&mut rng, n);
            assert_eq!(&u * &v, IntMatrix::identity(n));
        }
    }

    #[test]
    fn random_objects_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let r = random_complex(&mut rng, 4, 3).unwrap();
            let b = ChainComplexFp::new(r.complex.levels().to_vec(), r.complex.differentials().to_vec()).unwrap();
            assert!(b.levels().iter().all(|g| g.generators() <= 3));
            assert_eq!(r.automorphism.check(&b, &b).unwrap(), Ok(()));
            assert_eq!(r.automorphism.first_non_iso().unwrap(), None);
        }
        let a = random_simplicial_group(&mut rng, 2, 2).unwrap();
        assert!(a.check_identities().is_ok());
    }

    #[test]
    fn deterministic_per_seed() {
        let a = random_complex(&mut ChaCha8Rng::seed_from_u64(3), 3, 3).unwrap().complex;
        let b = random_complex(&mut ChaCha8Rng::seed_from_u64(3), 3, 3).unwrap().complex;
        assert_eq!(a, b);
    }
}
