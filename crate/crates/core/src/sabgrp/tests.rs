use super::*;
use crate::intlin::int_vec;
use crate::sset::standard_simplex;

fn z_delta(k: usize, m: usize) -> SimplicialAbGroup {
    SimplicialAbGroup::free(&standard_simplex(k, m).unwrap())
}

fn map(v: &[usize], n: usize) -> MonotoneMap {
    MonotoneMap::new(v.to_vec(), n).unwrap()
}

fn rank(g: &FpAbelianGroup) -> usize {
    g.normal_form().free_rank
}

#[test]
fn free_ranks() {
    let a = z_delta(1, 3);
    assert_eq!(a.levels().iter().map(FpAbelianGroup::generators).collect::<Vec<_>>(), vec![2, 3, 4, 5]);
    assert_eq!(z_delta(2, 1).level(1).generators(), 6);
    assert!(a.check_identities().is_ok());
    assert_eq!(z_delta(0, 3), SimplicialAbGroup::constant(&FpAbelianGroup::free(1), 3));
}

#[test]
fn act_generators_and_factorizations() {
    let a = z_delta(2, 3);
    assert_eq!(a.act(&MonotoneMap::identity(2)).unwrap(), AbHom::identity(a.level(2)));
    for i in 0..=2 {
        assert_eq!(&a.act(&MonotoneMap::face(i, 2).unwrap()).unwrap(), a.face(2, i));
    }
    // (0,0,2) = σ_0 δ_2 = δ_1 σ_0, so A(f) = d_2 s_0 = s_0 d_1.
    let f = a.act(&map(&[0, 0, 2], 2)).unwrap();
    assert!(f.equals_as_map(&a.face(3, 2).compose(a.degeneracy(2, 0)).unwrap()).unwrap());
    assert!(f.equals_as_map(&a.degeneracy(1, 0).compose(a.face(2, 1)).unwrap()).unwrap());
    // Contravariance on every pair of composable maps into [2].
    for m in 0..=2 {
        for f in MonotoneMap::all(m, 2) {
            for l in 0..=2 {
                for g in MonotoneMap::all(l, m) {
                    let lhs = a.act(&f.compose(&g).unwrap()).unwrap();
                    let rhs = a.act(&g).unwrap().compose(&a.act(&f).unwrap()).unwrap();
                    assert!(lhs.equals_as_map(&rhs).unwrap());
                }
            }
        }
    }
    assert!(matches!(a.act(&MonotoneMap::identity(4)), Err(Error::Truncation { .. })));
}

#[test]
fn moore_differential() {
    let a = z_delta(1, 2);
    let d = a.moore_differential(1).unwrap();
    // Level-1 basis 00, 01, 11; level-0 basis 0, 1.
    assert_eq!(d.apply(&int_vec(&[0, 1, 0])).unwrap(), int_vec(&[-1, 1]));
    assert!(d.compose(&a.moore_differential(2).unwrap()).unwrap().is_zero().unwrap());
    let c = SimplicialAbGroup::constant(&FpAbelianGroup::cyclic(5), 2);
    assert!(c.moore_differential(1).unwrap().is_zero().unwrap());
    assert!(c.moore_differential(0).is_err());
}

#[test]
fn normalized_and_degenerate() {
    let a = z_delta(1, 2);
    assert_eq!(a.normalized_subgroup(0).unwrap().group, *a.level(0));
    assert_eq!(rank(&a.normalized_subgroup(1).unwrap().group), 1);
    let c = SimplicialAbGroup::constant(&FpAbelianGroup::free(2), 3);
    for n in 1..=3 {
        assert!(c.normalized_subgroup(n).unwrap().group.is_trivial());
    }
    let pt = z_delta(0, 2);
    assert!(pt.degenerate_subgroup(1).unwrap().same_as(&pt.level(1).whole()).unwrap());
    let d1 = a.degenerate_subgroup(1).unwrap();
    assert_eq!(rank(&d1.group), 2);
    assert!(d1.contains(&int_vec(&[1, 0, 0])).unwrap());
    assert!(!d1.contains(&int_vec(&[0, 1, 0])).unwrap());
}

#[test]
fn pi_examples() {
    let a = z_delta(2, 3);
    assert_eq!(a.pi(0).unwrap(), AbHom::identity(a.level(0)));
    let expected = AbHom::identity(a.level(1)).sub(&a.degeneracy(0, 0).compose(a.face(1, 1)).unwrap()).unwrap();
    assert!(a.pi(1).unwrap().equals_as_map(&expected).unwrap());
    for n in 0..=3 {
        let p = a.pi(n).unwrap();
        assert!(p.compose(&p).unwrap().equals_as_map(&p).unwrap());
        let norm = a.normalized_subgroup(n).unwrap();
        assert!(p.compose(&norm.inclusion).unwrap().equals_as_map(&norm.inclusion).unwrap());
        let deg = a.degenerate_subgroup(n).unwrap();
        assert!(p.compose(&deg.inclusion).unwrap().is_zero().unwrap());
        assert_eq!(a.check_pi(n).unwrap(), Ok(()));
    }
}

#[test]
fn path_and_loop() {
    let c = SimplicialAbGroup::constant(&FpAbelianGroup::cyclic(3), 3);
    assert_eq!(c.path_object().unwrap(), SimplicialAbGroup::constant(&FpAbelianGroup::cyclic(3), 2));
    let a = z_delta(2, 3);
    let p = a.path_object().unwrap();
    assert!(p.check_identities().is_ok());
    let b = a.boundary_map().unwrap();
    assert_eq!(b.check(&p, &a).unwrap(), Ok(()));
    let (omega, inc) = z_delta(0, 3).loop_object().unwrap();
    assert!(omega.levels().iter().all(FpAbelianGroup::is_trivial));
    assert_eq!(inc.truncation(), 2);
    let (omega, inc) = a.loop_object().unwrap();
    assert!(omega.check_identities().is_ok());
    assert_eq!(inc.check(&omega, &p).unwrap(), Ok(()));
    assert!(SimplicialAbGroup::constant(&FpAbelianGroup::free(1), 0).path_object().is_err());
}

#[test]
fn tensor_and_sum() {
    let a = z_delta(1, 2);
    let t = a.tensor_mod(3).unwrap();
    assert!(t.check_identities().is_ok());
    assert_eq!(t.level(1).normal_form().invariant_factors, int_vec(&[3, 3, 3]));
    let s = SimplicialAbGroup::direct_sum(&[&a, &t]).unwrap();
    assert!(s.check_identities().is_ok());
    assert_eq!(s.level(2).generators(), 8);
}

#[test]
fn json_round_trip() {
    let a = z_delta(1, 2).tensor_mod(2).unwrap();
    let text = a.to_json();
    assert_eq!(SimplicialAbGroup::from_json(&text).unwrap(), a);
    // Break d_0 on level 1: identities must fail.
    let mut w: serde_json::Value = serde_json::from_str(&text).unwrap();
    w["faces"][1][0]["entries"][0][1] = serde_json::json!("1");
    w["faces"][1][0]["entries"][1][1] = serde_json::json!("0");
    assert!(SimplicialAbGroup::from_json(&w.to_string()).is_err());
    assert!(SimplicialAbGroup::from_json(r#"{"truncation":1,"levels":[],"faces":[],"degeneracies":[]}"#).is_err());
}
