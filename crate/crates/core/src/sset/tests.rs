use super::*;

#[test]
fn standard_simplex_counts() {
    let d1 = standard_simplex(1, 3).unwrap();
    assert_eq!(d1.counts(), vec![2, 3, 4, 5]);
    assert!(d1.check_identities().is_ok());
    assert!(d1.check_markings().is_ok());
    let d2 = standard_simplex(2, 2).unwrap();
    assert_eq!(d2.counts(), vec![3, 6, 10]);
    assert_eq!(d2.nondegenerate(1).len(), 3);
    assert_eq!(d2.nondegenerate(2).len(), 1);
    assert_eq!(standard_simplex(0, 3).unwrap().counts(), vec![1, 1, 1, 1]);
}

#[test]
fn act_agrees_with_model() {
    let model = StandardSimplex { k: 2 };
    let mat = materialize(&model, 3, &mut Budget::unlimited()).unwrap();
    for n in 0..=3 {
        for (x, s) in mat.simplices[n].iter().enumerate() {
            for m in 0..=3 {
                for f in MonotoneMap::all(m, n) {
                    let y = mat.set.act(n, x, &f).unwrap();
                    assert_eq!(&mat.simplices[m][y], &s.compose(&f).unwrap());
                }
            }
            let verts = mat.set.vertices(n, x).unwrap();
            assert_eq!(verts, s.values().to_vec());
        }
    }
}

#[test]
fn budget_is_enforced() {
    let err = materialize(&StandardSimplex { k: 3 }, 3, &mut Budget::new(20)).unwrap_err();
    assert_eq!(err, Error::Budget { budget: 20 });
}

#[test]
fn broken_tables_rejected() {
    let d1 = standard_simplex(1, 1).unwrap();
    let mut faces = d1.faces.clone();
    faces[1][0] = vec![1, 0];
    let err = TruncSimplicialSet::from_tables(d1.labels.clone(), faces, d1.degeneracies.clone(), d1.marked_edges.clone(), BTreeSet::new());
    assert!(err.is_err());
    let ok = TruncSimplicialSet::from_tables(d1.labels.clone(), d1.faces.clone(), d1.degeneracies.clone(), d1.marked_edges.clone(), BTreeSet::new());
    assert_eq!(ok.unwrap(), d1);
    let unmarked = TruncSimplicialSet::from_tables(d1.labels.clone(), d1.faces.clone(), d1.degeneracies.clone(), BTreeSet::new(), BTreeSet::new());
    assert!(unmarked.is_err());
}

#[test]
fn maps_and_truncation() {
    let d2 = standard_simplex(2, 2).unwrap();
    let id = SimplicialSetMap::identity(&d2);
    assert!(id.check(&d2, &d2, true).is_ok());
    assert!(id.is_bijective(&d2));
    let d1 = d2.truncate(1).unwrap();
    assert_eq!(d1.counts(), vec![3, 6]);
    assert!(d1.check_identities().is_ok());
    let mut bad = id.clone();
    bad.levels[0].swap(0, 1);
    assert!(bad.check(&d2, &d2, false).is_err());
}

#[test]
fn dot_export() {
    let dot = standard_simplex(1, 1).unwrap().to_dot("d1");
    assert_eq!(dot, "digraph \"d1\" {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  v0 -> v1 [label=\"01\"];\n}\n");
}
