use comat::fixtures::{coloop, ex4, ex4_arrangement, gen3, gen3_arrangement};
use comat::minors::{tope_trichotomy, verify_tope_recursion};
use comat::realize::geometric_circuits;
use comat::rings::{Mode, RelationKind};
use comat::{
    circuits, covectors, hilbert_series, nbc_basis_matrix, nbc_sets, presentation, topes, determinant,
    verify_nbc_recursion, verify_presentation, Com, LinearOrder, SignVector,
};

fn words(v: &[SignVector]) -> Vec<String> {
    v.iter().map(|x| x.word()).collect()
}

#[test]
fn gen3_from_its_arrangement() {
    let l = covectors(&gen3_arrangement());
    assert_eq!(l, gen3());
    assert_eq!((l.len(), topes(&l).len()), (13, 6));
    assert_eq!(words(&circuits(&l).circuits), ["--+", "++-"]);
}

#[test]
fn ex4_realized_circuits() {
    let l = ex4();
    assert_eq!(l.len(), 23);
    assert_eq!(topes(&l).len(), 9);
    let c = circuits(&l);
    assert_eq!(words(&c.circuits), ["-+-0", "-+0-", "00+-", "+-+0"]);
    assert_eq!(geometric_circuits(&ex4_arrangement()), c.circuits);
}

#[test]
fn ex4_counts_and_recursions() {
    let l = ex4();
    let o = LinearOrder::natural(4);
    assert_eq!(hilbert_series(&l, &o).unwrap(), vec![1, 4, 4]);
    assert_eq!(nbc_sets(&l, &o).unwrap().len(), 9);
    let r = verify_presentation(&l, &o).unwrap();
    assert!(r.holds, "{:?}", r.failures);
    assert_eq!(r.nbc_det.magnitude(), &1u32.into());
    let expected = [(6, 3), (6, 3), (7, 2), (6, 3)];
    for (i, &(del, con)) in expected.iter().enumerate() {
        let t = verify_tope_recursion(&l, i).unwrap();
        assert!(t.holds);
        assert_eq!((t.deletion_topes, t.contraction_topes), (del, con));
        assert!(verify_nbc_recursion(&l, &LinearOrder::with_max(4, i).unwrap()).unwrap().holds);
    }
    let parts = tope_trichotomy(&l, 2).unwrap();
    assert_eq!(parts.wall_plus.len() + parts.wall_minus.len() + parts.not_wall.len(), 9);
}

#[test]
fn ex4_reduced_rees_relations() {
    let p = presentation(&ex4(), Mode::Rees, true, false).unwrap();
    let names = p.variable_names();
    let rendered: Vec<(RelationKind, String)> = p
        .relations
        .iter()
        .map(|r| (r.kind, r.poly.render(&names, "*")))
        .collect();
    let expected = [
        (RelationKind::Diag, "e0+^2 - e0+*u"),
        (RelationKind::Diag, "e1+^2 - e1+*u"),
        (RelationKind::Diag, "e2+^2 - e2+*u"),
        (RelationKind::Diag, "e3+^2 - e3+*u"),
        (RelationKind::Circuit, "e0+*e1+*e3+ - e0+*e1+*u - e1+*e3+*u + e1+*u^2"),
        (RelationKind::Circuit, "e2+*e3+ - e2+*u"),
        (RelationKind::Pair, "e0+*e1+ - e0+*e2+ + e1+*e2+ - e1+*u"),
    ];
    let expected: Vec<(RelationKind, String)> = expected.iter().map(|(k, s)| (*k, s.to_string())).collect();
    assert_eq!(rendered, expected);
}

#[test]
fn gen3_matrix_and_series() {
    let g = gen3();
    let o = LinearOrder::natural(3);
    assert_eq!(hilbert_series(&g, &o).unwrap(), vec![1, 3, 2]);
    let d = determinant(&nbc_basis_matrix(&g, &o).unwrap()).unwrap();
    assert_eq!(d.magnitude(), &1u32.into());
}

#[test]
fn degenerate_instances() {
    let empty = Com::empty(2);
    assert_eq!(words(&circuits(&empty).circuits), ["00"]);
    assert!(nbc_sets(&empty, &LinearOrder::natural(2)).unwrap().is_empty());
    assert!(topes(&empty).is_empty());
    let c = coloop();
    assert_eq!(words(&circuits(&c).circuits), ["-", "+"]);
    assert!(nbc_sets(&c, &LinearOrder::natural(1)).unwrap().is_empty());
    assert!(topes(&c).is_empty());
}
