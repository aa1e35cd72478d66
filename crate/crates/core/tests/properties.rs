use std::collections::BTreeSet;

use comat::minors::{contract, delete, verify_tope_recursion};
use comat::realize::{covector_witness, geometric_circuits};
use comat::rings::{Mode, Poly};
use comat::{
    check_face_symmetry, circuits, coloops, covectors, determinant, gr_multiply, hermite_normal_form, heaviside,
    in_generator_set, in_row_span, is_com, nbc_sets, om_circuits, presentation, rank, row_span_coefficients,
    sign_vector_at_point, topes, verify_nbc_recursion, Arrangement, Com, IndexSet, IntMatrix, Integer, LinearOrder,
    Matrix, Rational, Sign, SignVector,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn sign_vec(n: usize) -> impl Strategy<Value = SignVector> {
    prop::collection::vec(-1i8..=1, n).prop_map(|v| {
        let signs: Vec<Sign> = v
            .into_iter()
            .map(|s| match s {
                -1 => Sign::Minus,
                0 => Sign::Zero,
                _ => Sign::Plus,
            })
            .collect();
        SignVector::from_signs(&signs).unwrap()
    })
}

fn normal(d: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, d).prop_filter("nonzero normal", |a| a.iter().any(|&x| x != 0))
}

/// Small rational arrangements in the plane; the region may be empty.
fn arrangement(max_n: usize, max_k: usize) -> impl Strategy<Value = Arrangement> {
    let hyp = prop::collection::vec((normal(2), -3i64..=3), 1..=max_n);
    let reg = prop::collection::vec((normal(2), -3i64..=3), 0..=max_k);
    (hyp, reg).prop_map(|(h, r)| {
        let h: Vec<(&[i64], i64)> = h.iter().map(|(a, b)| (a.as_slice(), *b)).collect();
        let r: Vec<(&[i64], i64)> = r.iter().map(|(a, b)| (a.as_slice(), *b)).collect();
        Arrangement::from_integers(2, &h, &r).unwrap()
    })
}

fn realized(max_n: usize, max_k: usize) -> impl Strategy<Value = (Arrangement, Com)> {
    arrangement(max_n, max_k).prop_map(|a| {
        let l = covectors(&a);
        (a, l)
    })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-6i64..=6, rows * cols)
        .prop_map(move |v| Matrix::new(rows, cols, v.into_iter().map(Integer::from).collect()).unwrap())
}

/// Rank over the rationals by plain Gaussian elimination.
fn rational_rank(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<Rational>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Rational::from_integer).collect())
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn poly_set(ps: impl IntoIterator<Item = Poly>) -> BTreeSet<String> {
    ps.into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| format!("{:?}", p.normalized().terms()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative_and_idempotent(x in sign_vec(5), y in sign_vec(5), z in sign_vec(5)) {
        prop_assert_eq!(x.compose(&x).unwrap(), x);
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(x.compose(&y).unwrap().compose(&x).unwrap(), x.compose(&y).unwrap());
    }

    #[test]
    fn realized_sets_are_coms_closed_under_composition((_a, l) in realized(4, 2)) {
        prop_assert!(is_com(&l));
        prop_assert!(check_face_symmetry(&l).is_ok());
        for x in l.iter() {
            for y in l.iter() {
                prop_assert!(l.contains(&x.compose(y).unwrap()));
            }
        }
        if l.contains_zero() {
            for x in l.iter() {
                prop_assert!(l.contains(&x.negate()));
            }
        }
    }

    #[test]
    fn circuits_agree_with_orthogonality_on_oriented_matroids((_a, l) in realized(5, 0)) {
        prop_assume!(l.contains_zero());
        prop_assert_eq!(circuits(&l), om_circuits(&l).unwrap());
    }

    #[test]
    fn generator_set_is_upward_closed((_a, l) in realized(4, 2), x in sign_vec(4), z in sign_vec(4)) {
        prop_assume!(l.n() == 4);
        if in_generator_set(&l, &x).unwrap() && x.compose(&z).unwrap() == z {
            prop_assert!(in_generator_set(&l, &z).unwrap());
        }
        let c = circuits(&l);
        let supports = c.supports();
        for s in &supports {
            for t in &supports {
                prop_assert!(s == t || !s.is_subset(*t));
            }
        }
        for x in c.iter() {
            prop_assert!(in_generator_set(&l, x).unwrap());
        }
    }

    #[test]
    fn minors_commute((_a, l) in realized(5, 2), i in 0usize..5, j in 0usize..5) {
        let n = l.n();
        prop_assume!(n >= 2);
        let (i, j) = (i % n, j % n);
        prop_assume!(i < j);
        type Op = fn(&Com, usize) -> comat::Result<Com>;
        let ops: [Op; 2] = [delete, contract];
        for f in ops {
            for g in ops {
                // f at i then g at j, versus g at j then f at i
                let a = g(&f(&l, i).unwrap(), j - 1).unwrap();
                let b = f(&g(&l, j).unwrap(), i).unwrap();
                prop_assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn minors_of_realized_coms_are_coms((_a, l) in realized(5, 3)) {
        for i in 0..l.n() {
            prop_assert!(is_com(&delete(&l, i).unwrap()));
            prop_assert!(is_com(&contract(&l, i).unwrap()));
        }
    }

    #[test]
    fn nbc_family_is_downward_closed_and_counts_topes((_a, l) in realized(5, 2), perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let n = l.n();
        let perm: Vec<usize> = perm.into_iter().filter(|&k| k < n).collect();
        let o1 = LinearOrder::natural(n);
        let o2 = LinearOrder::new(perm).unwrap();
        let f1 = nbc_sets(&l, &o1).unwrap();
        let f2 = nbc_sets(&l, &o2).unwrap();
        let t = topes(&l).len();
        prop_assert_eq!(f1.len(), t);
        prop_assert_eq!(f2.len(), t);
        for s in &f1.sets {
            for sub in s.subsets() {
                prop_assert!(f1.contains(sub));
            }
        }
        if !coloops(&l).is_empty() {
            prop_assert!(f1.is_empty());
        }
    }

    #[test]
    fn recursions_hold_at_every_non_coloop((_a, l) in realized(5, 2)) {
        let loops = coloops(&l);
        for i in 0..l.n() {
            if loops.contains(i) {
                continue;
            }
            let r = verify_tope_recursion(&l, i).unwrap();
            prop_assert!(r.holds, "{:?}", r);
            let r = verify_nbc_recursion(&l, &LinearOrder::with_max(l.n(), i).unwrap()).unwrap();
            prop_assert!(r.holds, "{:?}", r);
        }
    }

    #[test]
    fn hermite_form_is_a_unimodular_transform(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| int_matrix(r, c))) {
        let (h, u) = hermite_normal_form(&m);
        prop_assert_eq!(u.mul(&m).unwrap(), h.clone());
        let d = determinant(&u).unwrap();
        prop_assert!(d == Integer::one() || d == -Integer::one());
        prop_assert_eq!(rank(&m), rational_rank(&m));
        prop_assert_eq!(rank(&h), rational_rank(&m));
    }

    #[test]
    fn row_span_membership(m in int_matrix(3, 4), c in prop::collection::vec(-4i64..=4, 3), v in prop::collection::vec(-6i64..=6, 4)) {
        let c: Vec<Integer> = c.into_iter().map(Integer::from).collect();
        let inside = m.left_mul_vec(&c).unwrap();
        prop_assert!(in_row_span(&m, &inside).unwrap());
        let v: Vec<Integer> = v.into_iter().map(Integer::from).collect();
        match row_span_coefficients(&m, &v).unwrap() {
            Some(k) => prop_assert_eq!(m.left_mul_vec(&k).unwrap(), v),
            None => {
                // either rationally independent, or only a fractional combination
                let mut rows = m.to_rows();
                rows.push(v.clone());
                let grown = Matrix::from_rows(4, rows).unwrap();
                let rational = rational_rank(&grown) == rational_rank(&m);
                if rational {
                    prop_assert!(!in_row_span(&m, &v).unwrap());
                } else {
                    prop_assert!(rational_rank(&grown) > rational_rank(&m));
                }
            }
        }
    }

    #[test]
    fn circuits_lie_in_the_kernel((_a, l) in realized(4, 2)) {
        let c = circuits(&l);
        for x in c.iter() {
            prop_assert!(comat::e_x_eval(&l, x).unwrap().is_zero());
            if !x.is_zero() && c.contains(&x.negate()) {
                prop_assert!(comat::f_x_eval(&l, x).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn specializations_of_the_rees_presentation((_a, l) in realized(4, 2), reduced in any::<bool>(), symmetric in any::<bool>()) {
        let rees = presentation(&l, Mode::Rees, reduced, symmetric).unwrap();
        let u = rees.layout.u_index().unwrap();
        for (mode, value) in [(Mode::Vg, 1), (Mode::Gr, 0)] {
            let special = presentation(&l, mode, reduced, symmetric).unwrap();
            let from_rees = poly_set(rees.polys().into_iter().map(|p| p.substitute(u, &Integer::from(value)).drop_var(u)));
            let direct = poly_set(special.polys().into_iter().cloned());
            prop_assert_eq!(from_rees, direct);
        }
        for r in &rees.relations {
            prop_assert!(r.poly.is_homogeneous());
            prop_assert_eq!(r.cohomological_degree(), 2 * r.filtration_level());
        }
    }

    #[test]
    fn graded_product_is_commutative_with_unit((_a, l) in realized(4, 2)) {
        let o = LinearOrder::natural(l.n());
        let fam = nbc_sets(&l, &o).unwrap();
        for s in &fam.sets {
            prop_assert_eq!(gr_multiply(&l, &o, IndexSet::default(), *s).unwrap(), vec![(*s, Integer::one())]);
            for t in &fam.sets {
                prop_assert_eq!(gr_multiply(&l, &o, *s, *t).unwrap(), gr_multiply(&l, &o, *t, *s).unwrap());
            }
        }
    }

    #[test]
    fn heaviside_functions_are_idempotent((_a, l) in realized(4, 2)) {
        for i in 0..l.n() {
            let p = heaviside(&l, i, Sign::Plus).unwrap();
            let m = heaviside(&l, i, Sign::Minus).unwrap();
            prop_assert_eq!(p.mul(&p).unwrap(), p.clone());
            prop_assert!(p.mul(&m).unwrap().is_zero());
        }
    }

    #[test]
    fn witnesses_round_trip((a, l) in realized(4, 2)) {
        for x in l.iter() {
            let p = covector_witness(&a, x).unwrap().expect("every covector has a witness");
            prop_assert_eq!(sign_vector_at_point(&a, &p).unwrap(), *x);
        }
        prop_assert_eq!(geometric_circuits(&a), circuits(&l).circuits);
    }

    #[test]
    fn deleting_a_hyperplane_deletes_the_element((a, l) in realized(4, 2), i in 0usize..4) {
        let i = i % l.n();
        prop_assert_eq!(covectors(&a.delete(i).unwrap()), delete(&l, i).unwrap());
    }

    #[test]
    fn com_json_round_trips((_a, l) in realized(4, 2)) {
        let text = serde_json::to_string(&l).unwrap();
        let back: Com = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, l);
    }
}
