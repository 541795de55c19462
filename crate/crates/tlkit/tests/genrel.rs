use tlkit::coeff::{fugacity, qint, Generic, RingElem};
use tlkit::genrel::*;
use tlkit::jw::{dimension, JWTangle, Multiindex};
use tlkit::tangle::Tangle;
use tlkit::wenzl::projector_tangle;

fn mi(s: &str) -> Multiindex {
    Multiindex::parse(s).unwrap()
}

#[test]
fn small_generators() {
    let m = mi("1,1");
    let u = build_u(&Generic, &m, 1).unwrap();
    assert_eq!(u.expanded, Tangle::generator_u(&Generic, 2, 1).unwrap());
    assert_eq!(u.multiply(&u).unwrap(), u.scale(&fugacity()));
    assert_eq!(build_turnback(&Generic, &m, 1, 1).unwrap(), u);
    assert_eq!(build_turnback(&Generic, &m, 1, 0).unwrap(), JWTangle::unit(&Generic, &m).unwrap());
    assert_eq!(build_v(&Generic, &m, 1, 2).unwrap().expanded, projector_tangle(&Generic, 2).unwrap());
    assert_eq!(build_v(&Generic, &m, 1, 0).unwrap(), u);
    assert!(build_v(&Generic, &m, 1, 1).is_err());
    // U² for one single box next to a box of size k
    let m = mi("1,3");
    let u = build_u(&Generic, &m, 1).unwrap();
    assert_eq!(u.multiply(&u).unwrap(), u.scale(&-(&qint(4) / &qint(3))));
}

#[test]
fn v_matches_three_vertex_drawing() {
    for m in ["1,1", "2,2", "1,2", "2,3", "1,2,1", "3,1"] {
        let m = mi(m);
        for i in 1..m.d() {
            assert!(upper_tri_check(&Generic, &m, i).unwrap(), "{m} i={i}");
        }
    }
}

#[test]
fn span_ranks() {
    let (u, _) = generator_ranks(&Generic, &mi("1,1")).unwrap();
    assert_eq!(u.rank, 2);
    let (u, v) = generator_ranks(&Generic, &mi("2,3")).unwrap();
    assert_eq!((u.rank, v.rank), (3, 3));
    let (u, v) = generator_ranks(&Generic, &mi("1,2,1")).unwrap();
    assert_eq!((u.rank, v.rank), (6, 6));
    let u2 = build_turnback(&Generic, &mi("2,2"), 1, 2).unwrap();
    let fam = [
        JWTangle::unit(&Generic, &mi("2,2")).unwrap(),
        build_turnback(&Generic, &mi("2,2"), 1, 1).unwrap(),
        u2,
    ];
    assert_eq!(span_rank(&Generic, &mi("2,2"), &fam.iter().collect::<Vec<_>>(), 1).unwrap().rank, 3);
}

#[test]
fn minimality() {
    assert!(minimality_check(&Generic, &u_generators(&Generic, &mi("1,1,1")).unwrap()).unwrap());
    assert!(minimality_check(&Generic, &v_generators(&Generic, &mi("2,2")).unwrap()).unwrap());
    let m = mi("1,1");
    let u = build_u(&Generic, &m, 1).unwrap();
    let set = GeneratorSet::custom(&m, vec![JWTangle::unit(&Generic, &m).unwrap(), u.clone(), u.multiply(&u).unwrap()]);
    assert!(!minimality_check(&Generic, &set).unwrap());
}

#[test]
fn relation_suites() {
    for n in 2..=5 {
        for m in Multiindex::all_with_n(n) {
            if m.max_entry() > 3 {
                continue;
            }
            let rep = relation_suite(&Generic, &m).unwrap();
            // the pure power relation only holds when one of two boxes has size 1
            let power_fails = m.d() == 2 && m.entries().iter().min() > Some(&1);
            let expected: Vec<&str> = if power_fails { vec!["U^(min+1) = cU^min"] } else { vec![] };
            assert_eq!(rep.failures(), expected, "{m}");
            let rep = idempotent_check(&Generic, &m).unwrap();
            assert!(rep.passed(), "{m}: {:?}", rep.failures());
        }
    }
}

#[test]
fn basis_families() {
    for m in ["1,1", "2,2", "2,3", "3,3", "1,1,2", "1,3,1", "2,1,1", "1,1,3"] {
        let m = mi(m);
        let rep = basis_claims(&Generic, &m).unwrap();
        assert!(!rep.checks.is_empty() && rep.passed(), "{m}: {:?}", rep.failures());
    }
}

#[test]
fn valenced_parameters() {
    let (lam, mu) = abstract_parameters(&Generic, &mi("2,1,1,3")).unwrap();
    assert_eq!(mu[&1], fugacity());
    assert_eq!(lam[&1], RingElem::one());
    assert_eq!(mu[&2], -(&qint(3) / &qint(2)));
    assert_eq!(lam[&2], &RingElem::one() / &(&qint(2) * &qint(2)));
    let rep = valenced_relations_check(&Generic, &mi("2,1,1,2")).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures());
    assert!(valenced_relations_check(&Generic, &mi("1,2")).is_err());
}

#[test]
fn dimensions_agree_with_generated_span() {
    for m in Multiindex::all_with_n(4) {
        let (u, v) = generator_ranks(&Generic, &m).unwrap();
        assert_eq!(u.rank as u64, dimension(&m), "{m}");
        assert_eq!(v.rank as u64, dimension(&m), "{m}");
    }
}
