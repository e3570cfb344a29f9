use super::*;

fn map(v: &[usize], n: usize) -> MonotoneMap {
    MonotoneMap::new(v.to_vec(), n).unwrap()
}

fn bits(b: &[u8]) -> BitVector {
    BitVector::from_bits(b)
}

fn compose_word(word: &[Generator], source: usize) -> MonotoneMap {
    word.iter().rev().fold(MonotoneMap::identity(source), |acc, g| g.to_map().compose(&acc).unwrap())
}

#[test]
fn faces_and_degeneracies() {
    assert_eq!(MonotoneMap::face(0, 1).unwrap(), map(&[1], 1));
    assert_eq!(MonotoneMap::face(1, 1).unwrap(), map(&[0], 1));
    assert_eq!(MonotoneMap::degeneracy(0, 1).unwrap(), map(&[0, 0, 1], 1));
    let s0 = MonotoneMap::degeneracy(0, 0).unwrap();
    assert_eq!(s0.compose(&MonotoneMap::face(0, 1).unwrap()).unwrap(), MonotoneMap::identity(0));
    assert!(MonotoneMap::face(3, 2).is_err());
    assert!(MonotoneMap::face(0, 0).is_err());
    assert!(MonotoneMap::degeneracy(3, 2).is_err());
    assert!(MonotoneMap::new(vec![1, 0], 1).is_err());
}

/// `x ↦ x` if below the skipped point, else `x + 1`, written independently.
fn face_oracle(i: usize, n: usize) -> Vec<usize> {
    let mut v: Vec<usize> = (0..=n).collect();
    v.remove(i);
    v
}

#[test]
fn cosimplicial_identities() {
    let d = |i, n| MonotoneMap::face(i, n).unwrap();
    let s = |i, n| MonotoneMap::degeneracy(i, n).unwrap();
    let id = MonotoneMap::identity;
    for n in 1..=6 {
        for i in 0..=n {
            assert_eq!(d(i, n).values(), &face_oracle(i, n)[..]);
        }
    }
    for n in 2..=6 {
        // δ_j δ_i = δ_i δ_(j-1), i < j, maps [n-2] -> [n]
        for j in 0..=n {
            for i in 0..j {
                assert_eq!(d(j, n).compose(&d(i, n - 1)).unwrap(), d(i, n).compose(&d(j - 1, n - 1)).unwrap());
            }
        }
    }
    for n in 0..=5 {
        // σ_j σ_i = σ_i σ_(j+1), i <= j, maps [n+2] -> [n]
        for j in 0..=n {
            for i in 0..=j {
                assert_eq!(s(j, n).compose(&s(i, n + 1)).unwrap(), s(i, n).compose(&s(j + 1, n + 1)).unwrap());
            }
        }
    }
    for n in 1..=6 {
        // σ_j δ_i for maps [n] -> [n] through [n+1]
        for j in 0..n {
            for i in 0..=n + 1 {
                let lhs = s(j, n).compose(&d(i, n + 1)).unwrap();
                let rhs = if i < j {
                    d(i, n).compose(&s(j - 1, n - 1)).unwrap()
                } else if i == j || i == j + 1 {
                    id(n)
                } else {
                    d(i - 1, n).compose(&s(j, n - 1)).unwrap()
                };
                assert_eq!(lhs, rhs, "σ_{j} δ_{i} at n={n}");
            }
        }
    }
}

#[test]
fn epi_mono_examples() {
    let f = map(&[0, 0, 2], 2);
    let (e, m) = f.epi_mono_factorize();
    assert_eq!(e, map(&[0, 0, 1], 1));
    assert_eq!(m, map(&[0, 2], 2));
    let inj = map(&[0, 2], 3);
    assert_eq!(inj.epi_mono_factorize(), (MonotoneMap::identity(1), inj.clone()));
    let sur = map(&[0, 1, 1], 1);
    assert_eq!(sur.epi_mono_factorize(), (sur.clone(), MonotoneMap::identity(1)));
}

#[test]
fn epi_mono_exhaustive_uniqueness() {
    for m in 0..=4 {
        for n in 0..=4 {
            for f in MonotoneMap::all(m, n) {
                let (e, mo) = f.epi_mono_factorize();
                assert!(e.is_surjective() && mo.is_injective());
                assert_eq!(mo.compose(&e).unwrap(), f);
                // Oracle: search every epi/mono pair through every middle ordinal.
                let mut found = 0;
                for k in 0..=m.min(n) {
                    for e2 in MonotoneMap::all(m, k).into_iter().filter(MonotoneMap::is_surjective) {
                        for m2 in MonotoneMap::all_injective(k, n) {
                            if m2.compose(&e2).unwrap() == f {
                                found += 1;
                                assert_eq!((e2.clone(), m2), (e.clone(), mo.clone()));
                            }
                        }
                    }
                }
                assert_eq!(found, 1);
                assert_eq!(compose_word(&f.generator_word(), m), f);
            }
        }
    }
}

#[test]
fn map_counts() {
    // C(m+n+1, m+1)
    assert_eq!(MonotoneMap::all(1, 2).len(), 6);
    assert_eq!(MonotoneMap::all(2, 2).len(), 10);
    assert_eq!(MonotoneMap::all(0, 2).len(), 3);
    assert_eq!(MonotoneMap::all_injective(1, 3).len(), 6);
}

#[test]
fn f_vertex_values() {
    assert_eq!(f_vertex(2, &bits(&[1, 1])).unwrap(), MonotoneMap::identity(2));
    assert_eq!(f_vertex(2, &bits(&[0, 1])).unwrap().label(), "002");
    assert_eq!(f_vertex(2, &bits(&[1, 0])).unwrap().label(), "011");
    assert_eq!(f_vertex(2, &bits(&[0, 0])).unwrap().label(), "001");
    for k in 0..=6 {
        let all: Vec<MonotoneMap> = BitVector::all(k).iter().map(|j| f_vertex(k, j).unwrap()).collect();
        for (j, f) in BitVector::all(k).iter().zip(&all) {
            assert_eq!(f.is_injective(), j.weight() == k, "k={k} j={}", j.label());
        }
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }
}

#[test]
fn b_vertex_values() {
    let labels: Vec<String> = [[0, 0], [0, 1], [1, 0], [1, 1]].iter().map(|b| b_vertex(2, &bits(b)).unwrap().label()).collect();
    assert_eq!(labels, ["01", "02", "11", "12"]);
    for k in 1..=6 {
        let d0 = MonotoneMap::face(0, k).unwrap();
        for j in BitVector::all(k) {
            assert_eq!(f_vertex(k, &j).unwrap().compose(&d0).unwrap(), b_vertex(k, &j).unwrap());
        }
    }
    assert_eq!(q_vertex(2, true, &bits(&[1, 1])).unwrap(), MonotoneMap::identity(2));
    assert!(b_vertex(0, &bits(&[])).is_err());
    assert!(f_vertex(2, &bits(&[1])).is_err());
}

#[test]
fn bitvector_indexing() {
    let j = bits(&[1, 0, 1]);
    assert_eq!(j.index(), 5);
    assert_eq!(BitVector::from_index(3, 5), j);
    assert!(j.j(1) && !j.j(2) && j.j(3));
    assert_eq!(j.weight(), 2);
    assert_eq!(j.label(), "101");
}

#[test]
fn text_notation() {
    let f = map(&[0, 0, 2], 2);
    assert_eq!(f.to_string(), "(0,0,2):[2]→[2]");
    assert_eq!(MonotoneMap::parse("(0,0,2):[2]→[2]").unwrap(), f);
    assert_eq!(MonotoneMap::parse(" ( 0, 0 ,2 ) : [2] -> [2] ").unwrap(), f);
    for bad in ["", "(0,1):[2]→[2]", "(1,0):[1]→[1]", "(0,3):[1]→[2]", "(0,1)[1]→[2]", "(0,1):[1]→[2]x", "(a):[0]→[0]", "():[0]→[0]"] {
        assert!(MonotoneMap::parse(bad).is_err(), "{bad}");
    }
    let json = serde_json::to_string(&f).unwrap();
    assert_eq!(json, r#"{"values":[0,0,2],"target":2}"#);
    assert_eq!(serde_json::from_str::<MonotoneMap>(&json).unwrap(), f);
    assert!(serde_json::from_str::<MonotoneMap>(r#"{"values":[2,0],"target":2}"#).is_err());
}

#[test]
fn subsets() {
    assert_eq!(MonotoneMap::from_subset(0b101, 2).unwrap(), map(&[0, 2], 2));
    assert_eq!(map(&[0, 2], 2).image_mask(), 0b101);
    assert!(MonotoneMap::from_subset(0b1000, 2).is_err());
    assert!(MonotoneMap::from_subset(0, 2).is_err());
}
