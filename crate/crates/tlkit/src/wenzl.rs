//! Jones-Wenzl projectors: Wenzl's recursion, the closed-form coefficient
//! recipe over link-pattern labelings, and property checks.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::RwLock;
use rayon::prelude::*;

use crate::coeff::{qfact, qint, Generic, Ring, RingElem};
use crate::diagrams::{enumerate_diagrams, fold_open, LinkDiagram, LinkPattern, Planar};
use crate::error::{Error, Result};
use crate::tangle::Tangle;

/// P_n together with its full expansion over LD_n.
#[derive(Clone, Debug, PartialEq)]
pub struct Projector<R: Ring = Generic> {
    pub n: usize,
    pub expansion: Tangle<R>,
}

/// Pass/fail list of named checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<(String, bool)>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push((name.into(), ok));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.1)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.1).map(|c| c.0.as_str()).collect()
    }

    pub fn extend(&mut self, prefix: &str, o: Report) {
        for (n, ok) in o.checks {
            self.checks.push((format!("{prefix}{n}"), ok));
        }
    }
}

pub(crate) fn obstruction<R: Ring>(ring: &R, n: usize) -> Result<()> {
    if ring.pbar().exceeds(n) {
        Ok(())
    } else {
        Err(Error::RootOfUnityObstruction { n, pbar: ring.pbar().to_string() })
    }
}

/// Lift a generic value, reporting a vanishing denominator as an obstruction at size `n`.
pub(crate) fn lift_at<R: Ring>(ring: &R, x: &RingElem, n: usize) -> Result<R::Elem> {
    ring.lift(x).map_err(|e| match e {
        Error::DenominatorVanishes => Error::RootOfUnityObstruction { n, pbar: ring.pbar().to_string() },
        e => e,
    })
}

type Cache = RwLock<HashMap<usize, Arc<Tangle<Generic>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Seed the in-process cache (e.g. from a cache file). Values are trusted.
pub fn cache_insert(n: usize, t: Tangle<Generic>) {
    cache().write().insert(n, Arc::new(t));
}

/// Cached generic expansions currently held, by size.
pub fn cache_snapshot() -> Vec<(usize, Arc<Tangle<Generic>>)> {
    let mut v: Vec<_> = cache().read().iter().map(|(k, t)| (*k, t.clone())).collect();
    v.sort_by_key(|x| x.0);
    v
}

/// Generic P_n by Wenzl's recursion, memoized.
pub fn generic_projector(n: usize) -> Arc<Tangle<Generic>> {
    if let Some(t) = cache().read().get(&n) {
        return t.clone();
    }
    let t = if n <= 1 {
        Tangle::unit(&Generic, n)
    } else {
        let s = n - 1;
        let prev = generic_projector(s);
        let p = prev.tensor(&Tangle::unit(&Generic, 1));
        let u = Tangle::generator_u(&Generic, n, s).expect("index in range");
        let pup = p.compose(&u).unwrap().compose(&p).unwrap();
        let c = qint(s as i64) / qint(n as i64);
        p.add(&pup.scale(&c)).unwrap()
    };
    let t = Arc::new(t);
    // identical values on concurrent fills
    cache().write().entry(n).or_insert_with(|| t.clone());
    t
}

/// P_n over `ring` by the recursion P_{s+1} = P_s + ([s]/[s+1]) P_s U_s P_s.
pub fn projector_recursive<R: Ring>(ring: &R, n: usize) -> Result<Projector<R>> {
    obstruction(ring, n)?;
    let g = generic_projector(n);
    let expansion = g.lift_to(ring).map_err(|_| Error::RootOfUnityObstruction { n, pbar: ring.pbar().to_string() })?;
    Ok(Projector { n, expansion })
}

/// Tangle of P_s as an element of TL_s over `ring`.
pub fn projector_tangle<R: Ring>(ring: &R, s: usize) -> Result<Tangle<R>> {
    Ok(projector_recursive(ring, s)?.expansion)
}

/// One admissible labeling of a defect-free pattern.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Enumeration {
    /// left endpoints a_1..a_n, in label order (1-based)
    pub theta: Vec<usize>,
    /// γ_i = 2 #{j < i : a_j < a_i}
    pub gamma: Vec<usize>,
}

/// All labelings of the links of a (2n,0)-pattern such that no link nests
/// a later-labeled link and the t-th link's right endpoint is ≤ t + n.
pub fn enumerate_labelings(alpha: &LinkPattern) -> Result<Vec<Enumeration>> {
    if alpha.s() != 0 {
        return Err(Error::InvalidInput("labelings need a defect-free pattern".into()));
    }
    let links = alpha.links();
    let n = links.len();
    // nests[x] = links strictly inside link x
    let inside: Vec<Vec<usize>> = links
        .iter()
        .map(|&(a, b)| (0..n).filter(|&y| links[y].0 > a && links[y].1 < b).collect())
        .collect();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    let mut seq = Vec::with_capacity(n);
    label_rec(&links, &inside, n, &mut used, &mut seq, &mut out);
    let mut res: Vec<Enumeration> = out
        .into_iter()
        .map(|theta: Vec<usize>| {
            let gamma = (0..theta.len()).map(|i| 2 * (0..i).filter(|&j| theta[j] < theta[i]).count()).collect();
            Enumeration { theta, gamma }
        })
        .collect();
    res.sort();
    Ok(res)
}

fn label_rec(
    links: &[(usize, usize)],
    inside: &[Vec<usize>],
    n: usize,
    used: &mut Vec<bool>,
    seq: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let t = seq.len() + 1;
    if t > n {
        out.push(seq.clone());
        return;
    }
    for x in 0..n {
        if used[x] || links[x].1 > t + n || inside[x].iter().any(|&y| !used[y]) {
            continue;
        }
        used[x] = true;
        seq.push(links[x].0);
        label_rec(links, inside, n, used, seq, out);
        seq.pop();
        used[x] = false;
    }
}

/// Σ_{ϑ ∈ S(α)} Π_i [a_i − γ(ϑ)_i]
pub fn recipe_sum(alpha: &LinkPattern) -> Result<RingElem> {
    let mut acc = RingElem::zero();
    for e in enumerate_labelings(alpha)? {
        let term: RingElem = e.theta.iter().zip(&e.gamma).map(|(&a, &g)| qint(a as i64 - g as i64)).product();
        acc = acc + term;
    }
    Ok(acc)
}

/// coef_T = (1/[n]!) Σ_ϑ Π [a_i − γ_i], with α_T = fold_open(T).
pub fn coefficient_closed_form<R: Ring>(ring: &R, t: &LinkDiagram) -> Result<R::Elem> {
    let n = t.n();
    obstruction(ring, n)?;
    let v = recipe_sum(&fold_open(t))? / qfact(n as u64);
    lift_at(ring, &v, n)
}

/// The full projector built coefficient-by-coefficient from the recipe.
pub fn projector_closed_form<R: Ring>(ring: &R, n: usize) -> Result<Projector<R>> {
    obstruction(ring, n)?;
    let generic = enumerate_diagrams(n)
        .into_par_iter()
        .map(|d| {
            let v = recipe_sum(&fold_open(&d))?;
            Ok((d.into_planar(), v))
        })
        .collect::<Result<Vec<_>>>()?;
    let norm = qfact(n as u64);
    let terms = generic
        .into_iter()
        .map(|(p, v)| Ok((p, lift_at(ring, &(&v / &norm), n)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Projector { n, expansion: Tangle::from_terms(ring, n, n, terms) })
}

/// [i+k]! [i+m]! [i+j+k+m]! / ([n]! [i]! [k]! [m]!)
pub fn coefficient_special<R: Ring>(ring: &R, n: usize, i: usize, j: usize, k: usize, m: usize) -> Result<R::Elem> {
    if 2 * i + j + k + m != n {
        return Err(Error::ParameterMismatch(format!("2i+j+k+m = {} ≠ n = {n}", 2 * i + j + k + m)));
    }
    obstruction(ring, n)?;
    let f = |x: usize| qfact(x as u64);
    let v = f(i + k) * f(i + m) * f(i + j + k + m) / (f(n) * f(i) * f(k) * f(m));
    lift_at(ring, &v, n)
}

/// Parenthesis word → sorted links (1-based).
pub(crate) fn links_of_word(word: &[bool]) -> Vec<(usize, usize)> {
    let mut st = Vec::new();
    let mut links = Vec::new();
    for (p, &open) in word.iter().enumerate() {
        if open {
            st.push(p + 1);
        } else {
            links.push((st.pop().expect("balanced"), p + 1));
        }
    }
    links.sort();
    links
}

/// Word of `c` nested links wrapped around `inner`.
pub(crate) fn wrap(c: usize, inner: Vec<bool>) -> Vec<bool> {
    let mut w = vec![true; c];
    w.extend(inner);
    w.extend(std::iter::repeat(false).take(c));
    w
}

/// The diagram with i nested turn-backs on each side, k through-strands on
/// one side of the turn-backs, m on the other, and j strands passing from
/// beside one cup to beside the other: unfold of m( i, j( k, i ) ).
pub fn special_t_diagram(i: usize, j: usize, k: usize, m: usize) -> LinkDiagram {
    let n = 2 * i + j + k + m;
    let mut w = wrap(i, vec![]);
    w.extend(wrap(j, {
        let mut v = wrap(k, vec![]);
        v.extend(wrap(i, vec![]));
        v
    }));
    let w = wrap(m, w);
    let links = links_of_word(&w);
    LinkPattern::from_links(2 * n, &links).expect("balanced word").unfold().expect("defect-free")
}

/// Both sides of the sum formula
/// Σ_{a=0}^k [a+i−1]! [b−i+a−1]! / ([a]! [a+b]!) = [i+k]! [b+k−i]! / ([i][b−i] [k]! [b+k]!).
pub fn sum_formula_sides(b: usize, i: usize, k: usize) -> (RingElem, RingElem) {
    assert!(i >= 1 && i < b, "needs 1 ≤ i ≤ b−1");
    let f = |x: usize| qfact(x as u64);
    let lhs: RingElem = (0..=k).map(|a| f(a + i - 1) * f(b - i + a - 1) / (f(a) * f(a + b))).sum();
    let rhs = f(i + k) * f(b + k - i) / (qint(i as i64) * qint((b - i) as i64) * f(k) * f(b + k));
    (lhs, rhs)
}

/// Check P² = P, U_i P = P U_i = 0 and absorption of smaller projectors.
pub fn verify_projector<R: Ring>(p: &Projector<R>) -> Report {
    let mut rep = Report::default();
    let t = &p.expansion;
    let ring = t.ring();
    let n = p.n;
    rep.push("unit coefficient is 1", ring.eq(&t.coeff(&Planar::identity(n)), &ring.one()));
    match t.compose(t) {
        Ok(sq) => rep.push("P^2 = P", sq == *t),
        Err(_) => rep.push("P^2 = P", false),
    }
    for i in 1..n {
        let u = Tangle::generator_u(ring, n, i).expect("in range");
        rep.push(format!("U_{i} P = 0"), u.compose(t).map(|x| x.is_zero()).unwrap_or(false));
        rep.push(format!("P U_{i} = 0"), t.compose(&u).map(|x| x.is_zero()).unwrap_or(false));
    }
    for s in 1..n {
        let Ok(ps) = projector_tangle(ring, s) else {
            rep.push(format!("P_{s} absorbed"), false);
            continue;
        };
        for offset in [0, n - s] {
            let emb = Tangle::unit(ring, offset).tensor(&ps).tensor(&Tangle::unit(ring, n - s - offset));
            let l = emb.compose(t).map(|x| x == *t).unwrap_or(false);
            let r = t.compose(&emb).map(|x| x == *t).unwrap_or(false);
            rep.push(format!("P_{s} (offset {offset}) absorbed"), l && r);
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p2_coefficient() {
        let p = projector_recursive(&Generic, 2).unwrap();
        let u = LinkDiagram::u(2, 1).unwrap();
        assert_eq!(p.expansion.coeff_of(&u), qint(2).inv().unwrap());
    }
}
