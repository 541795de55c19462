use tlkit::coeff::{Generic, RingElem, RootOfUnity};
use tlkit::jw::*;
use tlkit::Error;

fn mi(s: &str) -> Multiindex {
    Multiindex::parse(s).unwrap()
}

#[test]
fn defect_sets_and_dimensions() {
    let e = defect_set(&mi("2,3"));
    assert_eq!(e.values(), vec![1, 3, 5]);
    let d = dimension_data(&mi("1,1,1"));
    assert_eq!(d.get(&1), Some(&2));
    assert_eq!(d.get(&3), Some(&1));
    assert_eq!(dimension(&mi("1,1,1")), 5);
    for k in 2..=4 {
        for s in [format!("1,{k},1"), format!("1,1,{k}"), format!("{k},1,1")] {
            assert_eq!(dimension(&mi(&s)), 6, "{s}");
        }
    }
    for (a, b) in [(1, 1), (2, 3), (4, 2), (3, 3)] {
        assert_eq!(dimension(&mi(&format!("{a},{b}"))), a.min(b) as u64 + 1);
    }
}

#[test]
fn pattern_counts_match_dimension_recursion() {
    for n in 1..=7 {
        for m in Multiindex::all_with_n(n) {
            for (s, c) in dimension_data(&m) {
                assert_eq!(enumerate_jw_patterns(&m, s).unwrap().len() as u64, c, "{m} s={s}");
            }
        }
    }
}

#[test]
fn zero_patterns_are_box_internal_links() {
    for n in 1..=5 {
        for m in Multiindex::all_with_n(n) {
            assert!(zero_pattern_check(&Generic, &m).unwrap(), "{m}");
        }
    }
}

#[test]
fn gram_and_radical() {
    // a single box has one link state, with ⟨P|P⟩ = 1
    let g = gram_matrix(&Generic, &mi("3"), 3).unwrap();
    assert_eq!(g, vec![vec![RingElem::one()]]);
    assert!(matches!(gram_matrix(&Generic, &mi("1,1"), 1), Err(Error::InvalidDefectCount { .. })));
    for m in [mi("1,1,1,1"), mi("2,2"), mi("1,2,1")] {
        for s in defect_set(&m).values() {
            assert!(radical(&Generic, &m, s).unwrap().is_empty());
        }
    }
    // at q = i the loop weight vanishes and the cap state spans the radical
    let ring = RootOfUnity::new(2, 1).unwrap();
    let rad = radical(&ring, &mi("1,1"), 0).unwrap();
    assert_eq!(rad.len(), 1);
}

#[test]
fn dual_states() {
    let m = mi("1,1,1,1");
    let g = gram_matrix(&Generic, &m, 0).unwrap();
    for i in 0..g.len() {
        let d = dual_state(&Generic, &m, 0, i).unwrap();
        for j in 0..g.len() {
            let mut acc = RingElem::zero();
            for (k, c) in d.iter().enumerate() {
                acc = &acc + &(c * &g[k][j]);
            }
            assert_eq!(acc, if i == j { RingElem::one() } else { RingElem::zero() });
        }
    }
}

#[test]
fn cellularity_small() {
    for n in 1..=4 {
        for m in Multiindex::all_with_n(n) {
            let rep = verify_cellularity(&Generic, &m).unwrap();
            assert!(rep.passed(), "{m}: {:?}", rep.failures());
            assert!(product_rule_check(&Generic, &m).unwrap(), "{m}");
        }
    }
}

#[test]
fn sandwich_families_full_rank() {
    for m in Multiindex::all_with_n(4) {
        for boxed in [false, true] {
            let b = sandwich_basis(&Generic, &m, &m, boxed).unwrap();
            assert_eq!(b.rank(&Generic) as u64, dimension(&m));
        }
    }
    let b = sandwich_basis(&Generic, &mi("2,1"), &mi("1,1,1"), true).unwrap();
    assert_eq!(b.rank(&Generic), b.len());
}

#[test]
fn change_of_basis_instances() {
    let c = change_of_basis(&Generic, &mi("1,1"), 0, 2, 0, Insertion::Single).unwrap();
    assert!(c.is_basis && c.unitriangular);
    for (m, i, j, s) in [("1,1,1,1", 1, 3, 0), ("1,1,1,1", 0, 2, 2), ("2,1,2,1", 1, 4, 2), ("1,2,1", 0, 3, 2)] {
        for ins in [Insertion::Single, Insertion::Halves] {
            let c = change_of_basis(&Generic, &mi(m), i, j, s, ins).unwrap();
            assert!(c.is_basis, "{m} {i} {j} {s}");
            assert!(c.unitriangular, "{m} {i} {j} {s} {ins:?}");
        }
    }
}

#[test]
fn defect_lemma_items() {
    assert!(defect_lemma_check(&mi("2,3")).unwrap());
    assert!(defect_lemma_check(&mi("4")).unwrap());
    for n in 1..=7 {
        for m in Multiindex::all_with_n(n) {
            let r = defect_lemma(&m).unwrap();
            assert!(r.common_box && r.weak_bound, "{m}");
        }
    }
    // the strict bound fails once a size-s_min box can carry the defects
    let r = defect_lemma(&mi("2,2,1")).unwrap();
    assert!(r.common_box && !r.strict_bound);
    assert!(!defect_lemma_check(&mi("1,1,1")).unwrap());
}

#[test]
fn faithful_and_invariant() {
    for m in [mi("1,1,1"), mi("2,2"), mi("1,2,1"), mi("1,1,1,1")] {
        assert_eq!(action_rank(&Generic, &m).unwrap() as u64, dimension(&m));
        assert!(invariance_check(&Generic, &m).unwrap());
    }
}
