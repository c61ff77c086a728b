use quiverlab::klr::{center_embed, elementary_inputs, graded_dim_pbw, induct_dim, parse_expression};
use quiverlab::lweight::{deg, l_dominance_leq, l_root};
use quiverlab::reflect::{check_f_compat, reflected_height, s_i_on_kp};
use quiverlab::repmod::{enumerate_kp, f_bijection, indecomposable};
use quiverlab::*;

fn a2() -> OrientedQuiver {
    OrientedQuiver::parse(CartanDatum::parse("A2").unwrap(), "1>2").unwrap()
}

fn w(terms: &[(usize, i64, i64)]) -> LWeight {
    LWeight::from_terms(terms.iter().map(|&(i, p, c)| (i - 1, p, c)))
}

#[test]
fn cartan_and_roots() {
    let a2d = CartanDatum::parse("A2").unwrap();
    assert_eq!(a2d.cartan_matrix(), &[vec![2, -1], vec![-1, 2]]);
    assert_eq!(CartanDatum::parse("A1").unwrap().cartan_matrix(), &[vec![2]]);
    let d4 = CartanDatum::parse("D4").unwrap();
    assert_eq!(d4.cartan_matrix()[1], vec![-1, 2, -1, -1]);
    assert_eq!(d4.num_positive_roots(), 12);
    assert_eq!(d4.num_positive_roots(), d4.rank() * d4.coxeter_number() / 2);
    assert_eq!(a2d.positive_roots().len(), 3);
    assert_eq!(a2d.coxeter_number(), 3);
    assert_eq!(a2d.bar_involution(0), 1);
    assert!((0..4).all(|i| d4.bar_involution(i) == i));
    let s2 = a2d.element_from_word(&[1]);
    assert_eq!(a2d.apply_element(&s2, &[1, 0]), vec![1, 1]);
    let a1 = WeightVector::alpha(vec![1, 0]);
    let a2r = WeightVector::alpha(vec![0, 1]);
    assert!(!a2d.dominance_leq(&a1, &a2r) && !a2d.dominance_leq(&a2r, &a1));
}

#[test]
fn quiver_combinatorics() {
    let q = a2();
    assert_eq!(q.sources(), vec![0]);
    assert_eq!(q.sinks(), vec![1]);
    assert_eq!(q.reflect(0).orientation_string(), "2>1");
    assert_eq!(q.reflect(0).reflect(0), q);
    let a3 = OrientedQuiver::parse(CartanDatum::parse("A3").unwrap(), "1>2,3>2").unwrap();
    assert_eq!(a3.reflect(1).orientation_string(), "2>1,2>3");
    let (word, gammas) = q.adapted_w0().unwrap();
    assert_eq!(word.letters, vec![0, 1, 0]);
    assert_eq!(gammas, vec![vec![1, 0], vec![1, 1], vec![0, 1]]);
    assert_eq!(q.height_function().xi, vec![1, 0]);
}

#[test]
fn ar_quiver_a2() {
    let q = a2();
    let ar = ArQuiver::new(&q, &q.height_function()).unwrap();
    assert_eq!(ar.phi(&[1, 0], 0).unwrap(), ArVertex::new(0, 1));
    assert_eq!(ar.phi(&[1, 1], 0).unwrap(), ArVertex::new(1, 0));
    assert_eq!(ar.phi(&[0, 1], 0).unwrap(), ArVertex::new(0, -1));
    let arrows: Vec<_> = ar.arrows().to_vec();
    assert_eq!(arrows.len(), 2);
    assert!(arrows.contains(&(ArVertex::new(1, 0), ArVertex::new(0, 1))));
    assert!(arrows.contains(&(ArVertex::new(0, -1), ArVertex::new(1, 0))));
    assert_eq!(ar.j_hat_q(), vec![ArVertex::new(0, 0)]);
    assert!(ar.has_path(ArVertex::new(0, -1), ArVertex::new(0, 1)));
    assert!(!ar.has_path(ArVertex::new(0, 1), ArVertex::new(0, -1)));
}

#[test]
fn lweights_a2() {
    let q = a2();
    let d = q.datum();
    let ar = ArQuiver::new(&q, &q.height_function()).unwrap();
    assert_eq!(l_root(d, 0, 0), w(&[(1, 1, 1), (1, -1, 1), (2, 0, -1)]));
    assert_eq!(deg(&ar, &w(&[(2, 0, 1)])).unwrap(), vec![1, 1]);
    assert_eq!(deg(&ar, &l_root(d, 0, 0)).unwrap(), vec![0, 0]);
    let nu = l_dominance_leq(d, &w(&[(2, 0, 1)]), &w(&[(1, 1, 1), (1, -1, 1)])).unwrap();
    assert_eq!(nu, w(&[(1, 0, 1)]));
    assert!(l_dominance_leq(d, &w(&[(1, 1, 1)]), &w(&[(1, -1, 1)])).is_none());
    assert!(l_dominance_leq(d, &w(&[(1, -1, 1)]), &w(&[(1, 1, 1)])).is_none());
}

#[test]
fn representations_a2() {
    let q = a2();
    let m = indecomposable(&q, &[1, 1]).unwrap();
    assert_eq!(m.dims(), &[1, 1]);
    let table = HomTable::new(&q).unwrap();
    let d = q.datum();
    let (s2, p) = (d.root_index(&[0, 1]).unwrap(), d.root_index(&[1, 1]).unwrap());
    assert_eq!(table.hom(s2, p), 1);
    assert_eq!(table.hom(p, s2), 0);
    let roots = d.positive_roots();
    assert_eq!(enumerate_kp(roots, &[1, 1]).unwrap().len(), 2);
    assert_eq!(enumerate_kp(roots, &[2, 2]).unwrap().len(), 3);
    let big = KostantPartition::from_pairs(roots, &[(vec![1, 1], 1)]).unwrap();
    let split = KostantPartition::from_pairs(roots, &[(vec![1, 0], 1), (vec![0, 1], 1)]).unwrap();
    assert!(table.kp_leq(&big, &split).unwrap());
    assert!(!table.kp_leq(&split, &big).unwrap());
    let ar = ArQuiver::new(&q, &q.height_function()).unwrap();
    assert_eq!(f_bijection(&ar, &big), w(&[(2, 0, 1)]));
    assert_eq!(f_bijection(&ar, &split), w(&[(1, 1, 1), (1, -1, 1)]));
}

#[test]
fn klr_examples() {
    let q = a2();
    let h = KlrAlgebra::new(&q, &[1, 1]).unwrap();
    let lhs = parse_expression(&h, "t1 t1 e(1,2)").unwrap();
    assert_eq!(lhs, parse_expression(&h, "(x2 - x1) e(1,2)").unwrap());
    assert_eq!(h.dump_text(&lhs), "1 * x2 * e(1,2)\n-1 * x1 * e(1,2)\n");
    assert!(parse_expression(&h, "e(1,2) e(2,1)").unwrap().is_zero());
    assert_eq!(graded_dim_pbw(&h, 0), 2);

    let a1 = OrientedQuiver::standard(CartanDatum::parse("A1").unwrap());
    let nh = KlrAlgebra::new(&a1, &[2]).unwrap();
    let lhs = parse_expression(&nh, "t1 x2 e(1,1)").unwrap();
    assert_eq!(lhs, parse_expression(&nh, "(x1 t1 + 1) e(1,1)").unwrap());
    assert_eq!(nh.degree(&nh.x(0).unwrap()), Degree::Homogeneous(2));
    assert_eq!(nh.degree(&nh.tau(0).unwrap()), Degree::Homogeneous(-2));
    assert_eq!(graded_dim_pbw(&nh, -2), 1);
    assert!(!nh.is_central(&nh.x(0).unwrap()).unwrap());
    let sum = center_embed(&nh, &elementary_inputs(&[2], &[1])).unwrap();
    assert_eq!(sum, parse_expression(&nh, "x1 + x2").unwrap());
    assert!(nh.is_central(&sum).unwrap());
    assert_eq!(induct_dim(1, 1, 1, 1), 2);
}

#[test]
fn reflection_a2() {
    let q = a2();
    let h = reflected_height(&q, &q.height_function(), 1).unwrap();
    assert_eq!(h.xi, vec![1, 2]);
    let d = q.datum();
    let roots = d.positive_roots();
    let m = KostantPartition::from_pairs(roots, &[(vec![1, 0], 2)]).unwrap();
    let expect = KostantPartition::from_pairs(roots, &[(vec![1, 1], 2)]).unwrap();
    assert_eq!(s_i_on_kp(d, &m, 1).unwrap(), expect);
    assert!(check_f_compat(&q, &q.height_function(), &[1, 1], 1).unwrap().ok());
}
