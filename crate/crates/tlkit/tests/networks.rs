use tlkit::coeff::{fugacity, qint, Generic, RingElem};
use tlkit::networks::*;

#[test]
fn theta_matches_oracle() {
    for r in 0..=5 {
        for s in 0..=5 {
            for t in 0..=5 {
                if !admissible(r, s, t) {
                    continue;
                }
                let net = build_theta(&Generic, r, s, t).unwrap().evaluate();
                assert_eq!(net, theta_closed(&Generic, r, s, t).unwrap(), "({r},{s},{t})");
            }
        }
    }
}

#[test]
fn small_thetas() {
    assert_eq!(theta_closed(&Generic, 1, 1, 0).unwrap(), fugacity());
    assert_eq!(theta_closed(&Generic, 1, 1, 2).unwrap(), qint(3));
}

#[test]
fn delta() {
    for n in 0..=6 {
        for s in 0..=n {
            assert!(delta_tangle_check(&Generic, n - s, s).unwrap(), "r={} s={s}", n - s);
        }
    }
}

#[test]
fn loop_erasure() {
    for r in 0..=4 {
        for t in 0..=4 {
            for s in 0..=4 {
                for s2 in 0..=4 {
                    if admissible(r, s, t) && admissible(r, s2, t) {
                        assert!(loop_erasure_check(&Generic, r, s, s2, t).unwrap(), "{r} {s} {s2} {t}");
                    }
                }
            }
        }
    }
}

#[test]
fn pre_loop() {
    for s in 0..=4 {
        for i in 0..=s {
            let net = build_pre_loop_box(&Generic, s, i).unwrap().evaluate();
            assert_eq!(net, pre_loop_box(&Generic, s, i).unwrap(), "s={s} i={i}");
        }
    }
}

#[test]
fn loops() {
    for s in 0..=4 {
        for i in 0..=2 * s {
            for j in 0..=2 * s {
                for k in 0..=s {
                    let Ok(v) = loop_box(&Generic, s, i, j, k) else { continue };
                    let net = build_loop_box(&Generic, s, i, j, k).unwrap().evaluate();
                    assert_eq!(net, v, "s={s} i={i} j={j} k={k}");
                }
            }
        }
    }
}

#[test]
fn tet() {
    for a in 0..=4 {
        for b in 0..=2 {
            for f in 0..=4 {
                let Ok(v) = tet_special(&Generic, a, b, f) else { continue };
                let net = build_tet_special(&Generic, a, b, f).unwrap().evaluate();
                assert_eq!(net, v, "A={a} B={b} F={f}");
            }
        }
    }
    let _ = RingElem::one();
}
