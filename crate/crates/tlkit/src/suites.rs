//! Named verification suites over a coefficient ring: each returns a
//! [`Report`] of individually named exact checks.
//!
//! Checks whose preconditions fail at the chosen root of unity (a
//! RootOfUnityObstruction) are skipped; any other error is a failed check.

use crate::coeff::{Generic, Ring};
use crate::error::{Error, Result};
use crate::genrel;
use crate::jw::{self, Multiindex};
use crate::meander;
use crate::networks::{self, admissible};
use crate::wenzl::{self, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Projector,
    Networks,
    Meander,
    Relations,
    Cellular,
    All,
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "projector" => Suite::Projector,
            "networks" => Suite::Networks,
            "meander" => Suite::Meander,
            "relations" => Suite::Relations,
            "cellular" => Suite::Cellular,
            "all" => Suite::All,
            _ => return Err(Error::InvalidInput(format!("unknown suite {s:?}"))),
        })
    }
}

/// Size bounds used by the suites.
#[derive(Clone, Debug)]
pub struct Bounds {
    /// projectors P_0..P_n
    pub projector_n: usize,
    /// largest label in network checks
    pub network_label: usize,
    /// meander matrices of LP_{2n}^(0), n ≤ this
    pub meander_n: usize,
    /// multiindices for the relation and cellularity suites; `None` means
    /// every multiindex up to `multiindex_n`
    pub multiindices: Option<Vec<Multiindex>>,
    pub multiindex_n: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { projector_n: 5, network_label: 3, meander_n: 3, multiindices: None, multiindex_n: 4 }
    }
}

impl Bounds {
    fn multiindices(&self) -> Vec<Multiindex> {
        match &self.multiindices {
            Some(v) => v.clone(),
            None => (1..=self.multiindex_n).flat_map(Multiindex::all_with_n).collect(),
        }
    }
}

/// Record a boolean check, skipping obstructions.
fn record(rep: &mut Report, name: String, r: Result<bool>) {
    match r {
        Ok(ok) => rep.push(name, ok),
        Err(Error::RootOfUnityObstruction { .. }) => {}
        Err(_) => rep.push(name, false),
    }
}

fn record_report(rep: &mut Report, prefix: String, r: Result<Report>) {
    match r {
        Ok(sub) => rep.extend(&prefix, sub),
        Err(Error::RootOfUnityObstruction { .. }) => {}
        Err(_) => rep.push(prefix, false),
    }
}

pub fn projector_suite<R: Ring>(ring: &R, max_n: usize) -> Report {
    let mut rep = Report::default();
    for n in 0..=max_n {
        let rec = wenzl::projector_recursive(ring, n);
        let cf = wenzl::projector_closed_form(ring, n);
        match (rec, cf) {
            (Err(Error::RootOfUnityObstruction { .. }), _) => continue,
            (Ok(p), Ok(c)) => {
                rep.push(format!("P_{n}: recursion = closed form"), p.expansion == c.expansion);
                rep.extend(&format!("P_{n}: "), wenzl::verify_projector(&p));
            }
            _ => rep.push(format!("P_{n}: construction"), false),
        }
    }
    rep
}

pub fn networks_suite<R: Ring>(ring: &R, max_label: usize) -> Report {
    let mut rep = Report::default();
    let l = max_label;
    for r in 0..=l {
        for s in r..=l {
            for t in s..=l {
                if !admissible(r, s, t) {
                    continue;
                }
                let v = networks::theta_closed(ring, r, s, t)
                    .and_then(|c| Ok(ring.eq(&networks::build_theta(ring, r, s, t)?.evaluate(), &c)));
                record(&mut rep, format!("theta({r},{s},{t})"), v);
            }
        }
    }
    for n in 0..=l.min(6) {
        for s in 0..=n {
            record(&mut rep, format!("delta({},{s})", n - s), networks::delta_tangle_check(ring, n - s, s));
        }
    }
    let k = l.min(3);
    for r in 0..=k {
        for t in 0..=k {
            for s in 0..=k {
                for s2 in 0..=k {
                    if admissible(r, s, t) && admissible(r, s2, t) {
                        record(
                            &mut rep,
                            format!("loop erasure({r},{s},{s2},{t})"),
                            networks::loop_erasure_check(ring, r, s, s2, t),
                        );
                    }
                }
            }
        }
    }
    for s in 0..=k {
        for i in 0..=s {
            let v = networks::pre_loop_box(ring, s, i)
                .and_then(|c| Ok(ring.eq(&networks::build_pre_loop_box(ring, s, i)?.evaluate(), &c)));
            record(&mut rep, format!("pre-loop box({s},{i})"), v);
        }
    }
    for a in 0..=k {
        for b in 0..=k.min(2) {
            for f in 0..=k {
                let Ok(c) = networks::tet_special(ring, a, b, f) else { continue };
                let v = networks::build_tet_special(ring, a, b, f).map(|net| ring.eq(&net.evaluate(), &c));
                record(&mut rep, format!("tet({a},{b},{f})"), v);
            }
        }
    }
    rep
}

/// Exact inversion is carried out over Q(q) and compared after
/// specialization.
pub fn meander_suite<R: Ring>(ring: &R, max_n: usize) -> Report {
    let mut rep = Report::default();
    for n in 1..=max_n {
        let mm = match meander::meander_matrix(n) {
            Ok(m) => m,
            Err(_) => {
                rep.push(format!("n={n}: meander matrix"), false);
                continue;
            }
        };
        rep.push(format!("n={n}: symmetric"), mm.is_symmetric());
        let inv = meander::meander_inverse(&mm, meander::DEFAULT_INVERSION_LIMIT.max(max_n));
        rep.push(format!("n={n}: G G^-1 = 1"), inv.as_ref().map(|i| meander::inverse_is_exact(&mm, i)).unwrap_or(false));
        let row = || -> Result<bool> {
            let exact = meander::inverse_row_exact(n, meander::DEFAULT_INVERSION_LIMIT.max(max_n))?;
            let recipe = meander::inverse_row_rainbow(ring, n)?;
            for (p, x) in &exact {
                if !ring.eq(&ring.lift(x)?, &recipe[p]) {
                    return Ok(false);
                }
            }
            Ok(exact.len() == recipe.len())
        };
        record(&mut rep, format!("n={n}: rainbow row = recipe"), row());
        let proj = meander::projector_from_inverse(ring, n)
            .and_then(|p| Ok(p.expansion == wenzl::projector_recursive(ring, n)?.expansion));
        record(&mut rep, format!("n={n}: projector from inverse"), proj);
    }
    rep
}

pub fn relations_suite<R: Ring>(ring: &R, ms: &[Multiindex]) -> Report {
    let mut rep = Report::default();
    for m in ms {
        record_report(&mut rep, format!("{m}: "), genrel::relation_suite(ring, m));
        record_report(&mut rep, format!("{m}: "), genrel::idempotent_check(ring, m));
    }
    rep
}

pub fn cellular_suite<R: Ring>(ring: &R, ms: &[Multiindex]) -> Report {
    let mut rep = Report::default();
    for m in ms {
        record_report(&mut rep, format!("{m}: "), jw::verify_cellularity(ring, m));
        record(&mut rep, format!("{m}: product rule"), jw::product_rule_check(ring, m));
    }
    rep
}

pub fn run<R: Ring>(ring: &R, suite: Suite, b: &Bounds) -> Report {
    let mut rep = Report::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Projector {
        rep.extend("projector: ", projector_suite(ring, b.projector_n));
    }
    if all || suite == Suite::Networks {
        rep.extend("networks: ", networks_suite(ring, b.network_label));
    }
    if all || suite == Suite::Meander {
        rep.extend("meander: ", meander_suite(ring, b.meander_n));
    }
    let ms = b.multiindices();
    if all || suite == Suite::Relations {
        rep.extend("relations: ", relations_suite(ring, &ms));
    }
    if all || suite == Suite::Cellular {
        rep.extend("cellular: ", cellular_suite(ring, &ms));
    }
    rep
}

/// The generic suites with default bounds.
pub fn run_generic(suite: Suite) -> Report {
    run(&Generic, suite, &Bounds::default())
}
