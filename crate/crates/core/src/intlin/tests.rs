use super::*;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(rows)
}

/// k-th determinantal divisor: gcd of all k x k minors.
fn determinantal_divisor(a: &IntMatrix, k: usize) -> BigInt {
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let mut g = BigInt::zero();
    for rs in subsets(a.rows(), k) {
        for cs in subsets(a.cols(), k) {
            let minor = a.select_rows(&rs).select_columns(&cs).determinant().unwrap();
            g = g.gcd(&minor);
        }
    }
    g
}

fn check_snf(a: &IntMatrix) {
    let f = smith_normal_form(a);
    assert_eq!(&(&f.u * a) * &f.v, f.s, "U M V = S for {a:?}");
    assert!(f.s.is_diagonal());
    assert!(f.u.is_unimodular() && f.v.is_unimodular());
    assert_eq!(&f.u * &f.u_inv, IntMatrix::identity(a.rows()));
    let d = f.invariants();
    assert!(d.iter().all(|x| x.is_positive()));
    for w in d.windows(2) {
        assert!((&w[1] % &w[0]).is_zero(), "divisibility chain {d:?}");
    }
    for i in f.rank..a.rows().min(a.cols()) {
        assert!(f.s.get(i, i).is_zero());
    }
}

#[test]
fn snf_identity_and_zero() {
    let id = IntMatrix::identity(3);
    let f = smith_normal_form(&id);
    assert_eq!(f.s, id);
    assert_eq!(f.u, id);
    assert_eq!(f.v, id);
    let z = IntMatrix::zeros(2, 2);
    assert_eq!(smith_normal_form(&z).s, z);
}

#[test]
fn snf_two_by_two_matches_determinantal_divisors() {
    let a = m(&[&[2, 4], &[6, 8]]);
    let d1 = determinantal_divisor(&a, 1);
    let d2 = determinantal_divisor(&a, 2) / &d1;
    assert_eq!((d1.clone(), d2.clone()), (BigInt::from(2), BigInt::from(4)));
    let f = smith_normal_form(&a);
    assert_eq!(f.s, m(&[&[2, 0], &[0, 4]]));
    check_snf(&a);
}

#[test]
fn snf_is_deterministic() {
    let a = m(&[&[3, 1, 4], &[1, 5, 9], &[2, 6, 5]]);
    assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
}

#[test]
fn snf_falls_back_to_bigint_on_overflow() {
    let big = 1i64 << 61;
    let a = m(&[&[big, big - 1], &[big - 3, big - 7]]);
    check_snf(&a);
    let a = m(&[&[big, 3], &[5, big]]);
    check_snf(&a);
    let d = determinantal_divisor(&a, 2);
    assert_eq!(smith_normal_form(&a).invariants().iter().product::<BigInt>(), d);
}

#[test]
fn solve_examples() {
    let id = IntMatrix::identity(2);
    assert_eq!(solve(&id, &int_vec(&[3, -1])).unwrap(), Some(int_vec(&[3, -1])));
    assert_eq!(solve(&m(&[&[2]]), &int_vec(&[3])).unwrap(), None);
    let a = m(&[&[2, 3]]);
    // Oracle: exhaustive search over |x_i| <= 3.
    let oracle = (-3..=3).flat_map(|x| (-3..=3).map(move |y| (x, y))).find(|(x, y)| 2 * x + 3 * y == 1);
    assert!(oracle.is_some());
    let x = solve(&a, &int_vec(&[1])).unwrap().expect("solvable");
    assert_eq!(a.mul_vec(&x).unwrap(), int_vec(&[1]));
    assert!(matches!(solve(&a, &int_vec(&[1, 2])), Err(Error::Shape(_))));
}

#[test]
fn kernel_examples() {
    assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
    assert_eq!(kernel_basis(&IntMatrix::zeros(1, 2)).cols(), 2);
    let a = m(&[&[1, -1, 1]]);
    let k = kernel_basis(&a);
    assert_eq!(k.cols(), 2);
    assert!((&a * &k).is_zero());
    // Every small kernel vector lies in the lattice spanned by the basis.
    for x in -2..=2i64 {
        for y in -2..=2i64 {
            for z in -2..=2i64 {
                if x - y + z == 0 {
                    assert!(solve(&k, &int_vec(&[x, y, z])).unwrap().is_some());
                }
            }
        }
    }
    // Saturated: the basis has trivial elementary divisors.
    assert!(smith_normal_form(&k).invariants().iter().all(One::is_one));
}

#[test]
fn image_basis_spans_columns() {
    let a = m(&[&[2, 4, 6], &[0, 6, 6]]);
    let b = image_basis(&a);
    assert_eq!(b.cols(), 2);
    for c in a.columns() {
        assert!(solve(&b, &c).unwrap().is_some());
    }
    for c in b.columns() {
        assert!(solve(&a, &c).unwrap().is_some());
    }
}

#[test]
fn json_round_trip_and_errors() {
    let a = m(&[&[1, -2], &[3, 4]]);
    let text = a.to_json();
    assert_eq!(text, r#"{"rows":2,"cols":2,"entries":[["1","-2"],["3","4"]]}"#);
    assert_eq!(IntMatrix::from_json(&text).unwrap(), a);
    assert_eq!(IntMatrix::from_json(r#"{"rows":1,"cols":2,"entries":[[1,"2"]]}"#).unwrap(), m(&[&[1, 2]]));
    assert!(IntMatrix::from_json(r#"{"rows":1,"cols":2,"entries":[["1"]]}"#).is_err());
    assert!(IntMatrix::from_json(r#"{"rows":1,"cols":1,"entries":[["x"]]}"#).is_err());
    let huge = "123456789012345678901234567890";
    let b = IntMatrix::from_json(&format!(r#"{{"rows":1,"cols":1,"entries":[["{huge}"]]}}"#)).unwrap();
    assert_eq!(b.get(0, 0).to_string(), huge);
}

fn small_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |v| IntMatrix::new(r, c, int_vec(&v)).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn snf_invariants_random(a in small_matrix(6)) {
        check_snf(&a);
    }

    #[test]
    fn snf_matches_determinantal_divisors(a in small_matrix(4)) {
        let f = smith_normal_form(&a);
        let mut prefix = BigInt::one();
        for (k, d) in f.invariants().iter().enumerate() {
            prefix *= d;
            prop_assert_eq!(&prefix, &determinantal_divisor(&a, k + 1));
        }
        prop_assert!(determinantal_divisor(&a, f.rank + 1).is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn solve_agrees_with_box_search(
        rows in 1usize..=3,
        cols in 1usize..=3,
        seed in proptest::collection::vec(-4i64..=4, 9),
        x0 in proptest::collection::vec(-2i64..=2, 3),
        b_noise in proptest::collection::vec(-3i64..=3, 3),
    ) {
        let a = IntMatrix::new(rows, cols, int_vec(&seed[..rows * cols])).unwrap();
        // A right-hand side that certainly has a solution, and one that may not.
        let b_good = a.mul_vec(&int_vec(&x0[..cols])).unwrap();
        let x = solve(&a, &b_good).unwrap().expect("constructed solvable");
        prop_assert_eq!(a.mul_vec(&x).unwrap(), b_good);

        let b = int_vec(&b_noise[..rows]);
        let found = solve(&a, &b).unwrap();
        if let Some(x) = &found {
            prop_assert_eq!(&a.mul_vec(x).unwrap(), &b);
        }
        let boxed = (0..7i64.pow(cols as u32)).any(|mut code| {
            let v: Vec<i64> = (0..cols).map(|_| { let d = code % 7 - 3; code /= 7; d }).collect();
            a.mul_vec(&int_vec(&v)).unwrap() == b
        });
        if boxed {
            prop_assert!(found.is_some());
        }
    }

    #[test]
    fn kernel_agrees_with_box_search(
        rows in 1usize..=3,
        cols in 1usize..=3,
        seed in proptest::collection::vec(-3i64..=3, 9),
    ) {
        let a = IntMatrix::new(rows, cols, int_vec(&seed[..rows * cols])).unwrap();
        let k = kernel_basis(&a);
        prop_assert!((&a * &k).is_zero());
        prop_assert_eq!(k.cols(), cols - rank(&a));
        for mut code in 0..5i64.pow(cols as u32) {
            let v: Vec<i64> = (0..cols).map(|_| { let d = code % 5 - 2; code /= 5; d }).collect();
            let v = int_vec(&v);
            if a.mul_vec(&v).unwrap().iter().all(Zero::is_zero) {
                prop_assert!(solve(&k, &v).unwrap().is_some());
            }
        }
    }
}

#[test]
fn hermite_examples() {
    let h = hermite_basis(&m(&[&[4, 6], &[0, 3]]));
    assert_eq!(h.pivots, vec![0, 1]);
    assert_eq!(h.basis, m(&[&[2, 0], &[3, 6]]));
    assert_eq!(hermite_basis(&IntMatrix::zeros(3, 2)).basis.cols(), 0);
    let mut v = int_vec(&[7, 5]);
    h.reduce(&mut v);
    assert_eq!(v, int_vec(&[1, 2]));
}

#[test]
fn hermite_falls_back_to_bigint() {
    let big = BigInt::from(1u64 << 61);
    let a = IntMatrix::new(2, 2, vec![big.clone(), BigInt::from(3), big, BigInt::from(5)]).unwrap();
    let h = hermite_basis(&a);
    assert_eq!(h.basis.cols(), 2);
    assert!(solve(&h.basis, &a.column(0)).unwrap().is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn hermite_spans_the_same_lattice(a in small_matrix(5)) {
        let h = hermite_basis(&a);
        prop_assert_eq!(h.basis.cols(), rank(&a));
        prop_assert!(solve_many(&a, &h.basis).unwrap().is_some());
        prop_assert!(solve_many(&h.basis, &a).unwrap().is_some());
        for (k, &row) in h.pivots.iter().enumerate() {
            let p = h.basis.get(row, k);
            prop_assert!(p.is_positive());
            for j in 0..h.basis.cols() {
                if j < k {
                    prop_assert!(!h.basis.get(row, j).is_negative() && h.basis.get(row, j) < p);
                } else if j > k {
                    prop_assert!(h.basis.get(row, j).is_zero());
                }
                for i in 0..row {
                    prop_assert!(h.basis.get(i, k).is_zero());
                }
            }
        }
    }

    #[test]
    fn hermite_reduction_is_canonical(
        a in small_matrix(4),
        v in proptest::collection::vec(-20i64..=20, 4),
        x in proptest::collection::vec(-3i64..=3, 4),
    ) {
        let h = hermite_basis(&a);
        let v = int_vec(&v[..a.rows()]);
        let shifted: Vec<BigInt> = a.mul_vec(&int_vec(&x[..a.cols()])).unwrap().iter().zip(&v).map(|(s, t)| s + t).collect();
        let (mut r1, mut r2) = (v.clone(), shifted);
        h.reduce(&mut r1);
        h.reduce(&mut r2);
        prop_assert_eq!(&r1, &r2);
        let diff: Vec<BigInt> = v.iter().zip(&r1).map(|(s, t)| s - t).collect();
        prop_assert!(solve(&a, &diff).unwrap().is_some());
    }
}
