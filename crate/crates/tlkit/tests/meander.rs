use tlkit::coeff::{fugacity, qfact, qint, Generic, RingElem, RootOfUnity};
use tlkit::diagrams::LinkPattern;
use tlkit::meander::*;
use tlkit::wenzl::projector_recursive;
use tlkit::Error;

fn sign(n: usize) -> RingElem {
    if n % 2 == 0 { RingElem::one() } else { -RingElem::one() }
}

#[test]
fn small_meander_matrices() {
    let m = meander_matrix(1).unwrap();
    assert_eq!(m.entries(), vec![vec![fugacity()]]);
    let m = meander_matrix(2).unwrap();
    let nu = fugacity();
    let e = m.entries();
    assert_eq!(e[0][0], nu.pow(2));
    assert_eq!(e[1][1], nu.pow(2));
    assert_eq!(e[0][1], nu);
    for n in 1..=5 {
        assert!(meander_matrix(n).unwrap().is_symmetric());
    }
}

#[test]
fn exact_inverse() {
    for n in 1..=4 {
        let m = meander_matrix(n).unwrap();
        let inv = meander_inverse(&m, DEFAULT_INVERSION_LIMIT).unwrap();
        assert!(inverse_is_exact(&m, &inv), "n={n}");
    }
    assert!(matches!(meander_inverse(&meander_matrix(6).unwrap(), DEFAULT_INVERSION_LIMIT), Err(Error::InvalidInput(_))));
}

#[test]
fn rainbow_row_matches_inverse() {
    for n in 1..=4 {
        let exact = inverse_row_exact(n, DEFAULT_INVERSION_LIMIT).unwrap();
        let recipe = inverse_row_rainbow(&Generic, n).unwrap();
        assert_eq!(exact, recipe, "n={n}");
        let diag = &recipe[&LinkPattern::rainbow(n)];
        assert_eq!(*diag, &sign(n) / &qint(n as i64 + 1));
    }
}

#[test]
fn rainbow_row_n3() {
    let row = inverse_row_rainbow(&Generic, 3).unwrap();
    let q = |k: i64| qint(k);
    let mut got: Vec<RingElem> = row.values().cloned().collect();
    let mut want = vec![
        -(&RingElem::one() / &q(4)),
        -(&q(2) / &(&q(3) * &q(4))),
        -(&RingElem::one() / &(&q(3) * &q(4))),
        -(&RingElem::one() / &(&q(3) * &q(4))),
        -(&(&q(1) + &q(3)) / &qfact(4)),
    ];
    let key = |x: &RingElem| x.to_string();
    got.sort_by_key(key);
    want.sort_by_key(key);
    assert_eq!(got, want);
}

#[test]
fn special_entries() {
    // a single rainbow
    for n in 1..=5 {
        assert_eq!(inverse_entry_special(&Generic, n, 0, 0, 0, 0, n).unwrap(), &sign(n) / &qint(n as i64 + 1));
        assert_eq!(special_pattern(0, 0, 0, 0, n), LinkPattern::rainbow(n));
    }
    assert!(matches!(inverse_entry_special(&Generic, 3, 1, 1, 1, 1, 1), Err(Error::ParameterMismatch(_))));
    // the formula holds when the l-cable is at least as large as the i-cable, or k = 0
    for n in 1..=5 {
        let row = inverse_row_rainbow(&Generic, n).unwrap();
        for i in 0..=n {
            for j in 0..=n - i {
                for k in 0..=n - i - j {
                    for l in 0..=n - i - j - k {
                        let m = n - i - j - k - l;
                        if l < i && k > 0 {
                            continue;
                        }
                        let v = inverse_entry_special(&Generic, n, i, j, k, l, m).unwrap();
                        assert_eq!(row[&special_pattern(i, j, k, l, m)], v, "{:?}", (i, j, k, l, m));
                    }
                }
            }
        }
    }
}

#[test]
fn special_entry_counterexample() {
    // two side-by-side links: the exact entry is 1/([2][3])
    let row = inverse_row_exact(2, 2).unwrap();
    let exact = &row[&special_pattern(1, 0, 1, 0, 0)];
    assert_eq!(*exact, &RingElem::one() / &(&qint(2) * &qint(3)));
    assert_ne!(*exact, inverse_entry_special(&Generic, 2, 1, 0, 1, 0, 0).unwrap());
}

#[test]
fn rainbow_row_n5() {
    assert_eq!(inverse_row_exact(5, 5).unwrap(), inverse_row_rainbow(&Generic, 5).unwrap());
}

#[test]
fn projector_from_meander() {
    for n in 1..=4 {
        let p = projector_from_inverse(&Generic, n).unwrap();
        assert_eq!(p.expansion, projector_recursive(&Generic, n).unwrap().expansion, "n={n}");
    }
    let ring = RootOfUnity::new(4, 1).unwrap();
    assert!(matches!(projector_from_inverse(&ring, 3), Err(Error::RootOfUnityObstruction { .. })));
}
