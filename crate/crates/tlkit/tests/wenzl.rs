use tlkit::coeff::{qfact, qint, Generic, Ring, RingElem, RootOfUnity};
use tlkit::diagrams::{enumerate_diagrams, LinkDiagram, LinkPattern};
use tlkit::wenzl::*;
use tlkit::Error;

fn r(a: i64, b: i64) -> RingElem {
    qint(a) / qint(b)
}

#[test]
fn p3_frozen_coefficients() {
    let p = projector_recursive(&Generic, 3).unwrap().expansion;
    assert_eq!(p.len(), 5);
    let u1 = LinkDiagram::u(3, 1).unwrap();
    let u2 = LinkDiagram::u(3, 2).unwrap();
    assert_eq!(p.coeff_of(&u1), r(2, 3));
    assert_eq!(p.coeff_of(&u2), r(2, 3));
    let u1u2 = LinkDiagram::from_pairs(3, &[(1, 2), (3, 6), (4, 5)]).unwrap();
    let u2u1 = LinkDiagram::from_pairs(3, &[(1, 4), (2, 3), (5, 6)]).unwrap();
    assert_eq!(p.coeff_of(&u1u2), qint(3).inv().unwrap());
    assert_eq!(p.coeff_of(&u2u1), qint(3).inv().unwrap());
}

#[test]
fn recursion_matches_recipe() {
    for n in 0..=6 {
        let a = projector_recursive(&Generic, n).unwrap();
        let b = projector_closed_form(&Generic, n).unwrap();
        assert_eq!(a, b, "n = {n}");
    }
}

#[test]
fn projector_properties() {
    for n in 0..=6 {
        let rep = verify_projector(&projector_recursive(&Generic, n).unwrap());
        assert!(rep.passed(), "n = {n}: {:?}", rep.failures());
    }
}

#[test]
fn every_coefficient_is_nonzero() {
    let p = projector_recursive(&Generic, 5).unwrap().expansion;
    assert_eq!(p.len(), enumerate_diagrams(5).len());
}

#[test]
fn labelings_of_worked_example() {
    let alpha = LinkPattern::from_links(8, &[(1, 2), (3, 6), (4, 5), (7, 8)]).unwrap();
    let s: Vec<Vec<usize>> = enumerate_labelings(&alpha).unwrap().into_iter().map(|e| e.theta).collect();
    assert_eq!(s, vec![vec![1, 4, 3, 7], vec![4, 1, 3, 7], vec![4, 3, 1, 7]]);
}

#[test]
fn special_family() {
    for n in 0..=6usize {
        let p = projector_recursive(&Generic, n).unwrap().expansion;
        for i in 0..=n / 2 {
            for j in 0..=n - 2 * i {
                for k in 0..=n - 2 * i - j {
                    let m = n - 2 * i - j - k;
                    let d = special_t_diagram(i, j, k, m);
                    let c = coefficient_special(&Generic, n, i, j, k, m).unwrap();
                    assert_eq!(p.coeff_of(&d), c, "({i},{j},{k},{m})");
                }
            }
        }
    }
}

#[test]
fn sum_formula() {
    for b in 2..=6 {
        for i in 1..b {
            for k in 0..=4 {
                let (l, r) = sum_formula_sides(b, i, k);
                assert_eq!(l, r, "b={b} i={i} k={k}");
            }
        }
    }
}

#[test]
fn root_of_unity_obstruction() {
    let ring = RootOfUnity::new(4, 1).unwrap();
    assert!(projector_recursive(&ring, 3).is_ok());
    assert!(matches!(projector_recursive(&ring, 4), Err(Error::RootOfUnityObstruction { .. })));
    let p = projector_recursive(&ring, 3).unwrap();
    assert!(verify_projector(&p).passed());
    let d = LinkDiagram::u(3, 1).unwrap();
    assert!(ring.eq(&p.expansion.coeff_of(&d), &ring.lift(&r(2, 3)).unwrap()));
}

#[test]
fn factorial_normalization() {
    assert_eq!(qfact(3), qint(2) * qint(3));
}
