use proptest::prelude::*;

use tlkit::cache;
use tlkit::coeff::{qint, Generic, RingElem};
use tlkit::diagrams::{compose, dagger, enumerate_diagrams, tensor, LinkDiagram};
use tlkit::jw::{dimension, dimension_data, enumerate_jw_patterns, Multiindex};
use tlkit::render::quantum_form;
use tlkit::tangle::Tangle;
use tlkit::wenzl::generic_projector;

fn diagram(n: usize, k: usize) -> LinkDiagram {
    let all = enumerate_diagrams(n);
    all[k % all.len()].clone()
}

fn qmonomial(c: i64, ks: &[(i64, bool)]) -> RingElem {
    ks.iter().fold(RingElem::from_int(c), |acc, &(k, up)| if up { acc * qint(k) } else { acc / qint(k) })
}

fn arb_elem() -> impl Strategy<Value = RingElem> {
    (prop_oneof![-5i64..=-1, 1i64..=5], prop::collection::vec((2i64..=6, any::<bool>()), 0..4))
        .prop_map(|(c, ks)| qmonomial(c, &ks))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(n in 1usize..=5, a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let (x, y, z) = (diagram(n, a), diagram(n, b), diagram(n, c));
        let (xy, l1) = compose(&x, &y).unwrap();
        let (xy_z, l2) = compose(&xy, &z).unwrap();
        let (yz, l3) = compose(&y, &z).unwrap();
        let (x_yz, l4) = compose(&x, &yz).unwrap();
        prop_assert_eq!(xy_z, x_yz);
        prop_assert_eq!(l1 + l2, l3 + l4);
    }

    #[test]
    fn dagger_reverses_products(n in 1usize..=5, a in 0usize..64, b in 0usize..64) {
        let (x, y) = (diagram(n, a), diagram(n, b));
        let (xy, l) = compose(&x, &y).unwrap();
        let (yx, m) = compose(&dagger(&y), &dagger(&x)).unwrap();
        prop_assert_eq!(dagger(&xy), yx);
        prop_assert_eq!(l, m);
    }

    #[test]
    fn tensor_is_functorial(n in 1usize..=3, m in 1usize..=3, a in 0usize..16, b in 0usize..16, c in 0usize..16, d in 0usize..16) {
        let (x1, x2, y1, y2) = (diagram(n, a), diagram(n, b), diagram(m, c), diagram(m, d));
        let (x, lx) = compose(&x1, &x2).unwrap();
        let (y, ly) = compose(&y1, &y2).unwrap();
        let (t, lt) = compose(&tensor(&x1, &y1), &tensor(&x2, &y2)).unwrap();
        prop_assert_eq!(t, tensor(&x, &y));
        prop_assert_eq!(lt, lx + ly);
    }

    #[test]
    fn projector_absorbs_diagrams(n in 2usize..=5, a in 0usize..64) {
        // P·T = (coefficient of identity in T-as-cup-free) · P: zero unless T = 1
        let p = generic_projector(n);
        let d = diagram(n, a);
        let t = Tangle::from_diagram(&Generic, &d);
        let pt = p.compose(&t).unwrap();
        if d.is_identity() {
            prop_assert_eq!(&pt, p.as_ref());
        } else {
            prop_assert!(pt.is_zero());
        }
    }

    #[test]
    fn field_division_inverts_multiplication(a in arb_elem(), b in arb_elem()) {
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert_eq!(&a - &a, RingElem::zero());
    }

    #[test]
    fn quantum_form_evaluates_back(a in arb_elem()) {
        let f = quantum_form(&a).expect("products of quantum integers factor");
        let ks: Vec<(i64, bool)> = f
            .factors
            .iter()
            .flat_map(|&(k, e)| std::iter::repeat((k as i64, e > 0)).take(e.unsigned_abs() as usize))
            .collect();
        let v = ks.iter().fold(RingElem::from_rational(f.constant.clone()), |acc, &(k, up)| {
            if up { acc * qint(k) } else { acc / qint(k) }
        });
        prop_assert_eq!(v, a);
    }

    #[test]
    fn cache_roundtrip_is_bit_exact(n in 1usize..=4, coeffs in prop::collection::vec(arb_elem(), 14)) {
        let terms = enumerate_diagrams(n).into_iter().zip(coeffs).map(|(d, c)| (d.into_planar(), c));
        let t = Tangle::from_terms(&Generic, n, n, terms);
        let text = cache::encode(&[(n, &t)]);
        let back = cache::decode(&text).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(&back[0].1, &t);
        let again = cache::encode(&[(back[0].0, &back[0].1)]);
        prop_assert_eq!(again, text);
    }

    #[test]
    fn dimension_is_reversal_invariant(entries in prop::collection::vec(1usize..=3, 1..=4)) {
        let m = Multiindex::new(entries).unwrap();
        prop_assert_eq!(dimension(&m), dimension(&m.reversed()));
        prop_assert_eq!(dimension_data(&m), dimension_data(&m.reversed()));
    }

    #[test]
    fn defect_counts_match_pattern_enumeration(entries in prop::collection::vec(1usize..=3, 1..=3)) {
        let m = Multiindex::new(entries).unwrap();
        for (s, c) in dimension_data(&m) {
            prop_assert_eq!(enumerate_jw_patterns(&m, s).unwrap().len() as u64, c);
        }
    }
}
