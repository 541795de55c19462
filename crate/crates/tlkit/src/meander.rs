//! Meander matrices of defect-free link patterns, their exact inversion, and
//! closed-form entries of the inverse along the rainbow row.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::coeff::{qfact, qint, Generic, Ring, RingElem, ZPoly};
use crate::diagrams::{enumerate_diagrams, enumerate_patterns, fold_open, LinkPattern};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::tangle::Tangle;
use crate::wenzl::{links_of_word, obstruction, recipe_sum, wrap, Projector};

/// Largest n inverted symbolically unless a caller raises the limit.
pub const DEFAULT_INVERSION_LIMIT: usize = 5;

/// Gram matrix of LP_{2n}^(0): entry (α,β) = ν^{#loops}.
#[derive(Clone, Debug, PartialEq)]
pub struct MeanderMatrix {
    pub n: usize,
    pub patterns: Vec<LinkPattern>,
    /// loop counts
    pub loops: Vec<Vec<usize>>,
}

impl MeanderMatrix {
    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn entries(&self) -> Matrix<RingElem> {
        let nu = crate::coeff::fugacity();
        self.loops.iter().map(|r| r.iter().map(|&k| nu.pow(k as u32)).collect()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.len()).all(|i| (0..i).all(|j| self.loops[i][j] == self.loops[j][i]))
    }

    pub fn position(&self, a: &LinkPattern) -> Option<usize> {
        self.patterns.iter().position(|p| p == a)
    }
}

pub fn meander_matrix(n: usize) -> Result<MeanderMatrix> {
    if n == 0 {
        return Err(Error::InvalidInput("meander matrix needs n ≥ 1".into()));
    }
    let patterns = enumerate_patterns(2 * n, 0)?;
    let loops = patterns
        .par_iter()
        .map(|a| patterns.iter().map(|b| a.planar().dagger().compose_unchecked(b.planar()).1).collect())
        .collect();
    Ok(MeanderMatrix { n, patterns, loops })
}

/// (−1)^k (q²+1)^k q^{n−k}, the entry ν^k scaled by q^n (ν = −q − q^{-1}).
fn scaled_entry(n: usize, k: usize) -> ZPoly {
    let mut p = ZPoly::one();
    let base = ZPoly::from_vec(vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
    for _ in 0..k {
        p = p.mul(&base);
    }
    let p = p.shift(n - k);
    if k % 2 == 1 { p.neg() } else { p }
}

/// Exact inverse by fraction-free elimination on q^n·G, which has entries in
/// Z[q]; the single division happens at the end.
pub fn meander_inverse(m: &MeanderMatrix, limit: usize) -> Result<Matrix<RingElem>> {
    if m.n > limit {
        return Err(Error::InvalidInput(format!("symbolic inversion capped at n = {limit}")));
    }
    let z: Vec<Vec<ZPoly>> = m.loops.iter().map(|r| r.iter().map(|&k| scaled_entry(m.n, k)).collect()).collect();
    let (adj, d) = linalg::bareiss_inverse(&z).ok_or(Error::SingularGram)?;
    // G^{-1} = q^n · adj / d
    Ok(adj
        .par_iter()
        .map(|row| row.iter().map(|x| RingElem::from_zparts(x, m.n as i32, &d)).collect())
        .collect())
}

/// Entries of the rainbow row of the inverse meander matrix from the
/// labeling recipe: ((−1)^n/[n+1]!) Σ_ϑ Π_i [a_i − γ(ϑ)_i].
pub fn inverse_row_rainbow<R: Ring>(ring: &R, n: usize) -> Result<BTreeMap<LinkPattern, R::Elem>> {
    obstruction(ring, n + 1)?;
    let sign = if n % 2 == 0 { RingElem::one() } else { -RingElem::one() };
    let norm = &sign / &qfact(n as u64 + 1);
    let pats = enumerate_patterns(2 * n, 0)?;
    let vals = pats.par_iter().map(|a| Ok(&recipe_sum(a)? * &norm)).collect::<Result<Vec<_>>>()?;
    pats.into_iter().zip(vals).map(|(a, v)| Ok((a, ring.lift(&v)?))).collect()
}

/// The pattern m( i, j( k, l ) ): a cable of m links around a cable of i links
/// followed by a cable of j links around cables of k and l links.
pub fn special_pattern(i: usize, j: usize, k: usize, l: usize, m: usize) -> LinkPattern {
    let mut inner = wrap(k, vec![]);
    inner.extend(wrap(l, vec![]));
    let mut w = wrap(i, vec![]);
    w.extend(wrap(j, inner));
    let w = wrap(m, w);
    LinkPattern::from_links(w.len(), &links_of_word(&w)).expect("balanced word")
}

/// ((−1)^n/[n+1]!) · [i+k]![i+m]![i+j+k+m]![j+l+m]! / ([i]![k]![i+j+m]![m]!).
pub fn inverse_entry_special<R: Ring>(ring: &R, n: usize, i: usize, j: usize, k: usize, l: usize, m: usize) -> Result<R::Elem> {
    if i + j + k + l + m != n {
        return Err(Error::ParameterMismatch(format!("i+j+k+l+m = {} ≠ n = {n}", i + j + k + l + m)));
    }
    obstruction(ring, n + 1)?;
    let f = |x: usize| qfact(x as u64);
    let sign = if n % 2 == 0 { RingElem::one() } else { -RingElem::one() };
    let num = &(&(&f(i + k) * &f(i + m)) * &(&f(i + j + k + m) * &f(j + l + m))) * &sign;
    let den = &(&(&f(i) * &f(k)) * &(&f(i + j + m) * &f(m))) * &f(n + 1);
    ring.lift(&(&num / &den))
}

/// Row `r` of G^{-1}, from a single fraction-free solve (G is symmetric).
pub fn meander_inverse_row(m: &MeanderMatrix, r: usize) -> Result<Vec<RingElem>> {
    let z: Vec<Vec<ZPoly>> = m.loops.iter().map(|row| row.iter().map(|&k| scaled_entry(m.n, k)).collect()).collect();
    let e: Vec<Vec<ZPoly>> = (0..m.len()).map(|i| vec![if i == r { ZPoly::one() } else { ZPoly::zero() }]).collect();
    let (x, d) = linalg::bareiss_solve(&z, &e).ok_or(Error::SingularGram)?;
    Ok(x.par_iter().map(|v| RingElem::from_zparts(&v[0], m.n as i32, &d)).collect())
}

/// P_n = Σ_T (−1)^n [n+1] · [G^{-1}]_{Cap, α_T} · T with the inverse row read
/// from the exact inverse of the meander matrix.
pub fn projector_from_inverse<R: Ring>(ring: &R, n: usize) -> Result<Projector<R>> {
    obstruction(ring, n + 1)?;
    let m = meander_matrix(n)?;
    let cap = m.position(&LinkPattern::rainbow(n)).expect("rainbow is a pattern");
    let row = meander_inverse_row(&m, cap)?;
    let sign = if n % 2 == 0 { RingElem::one() } else { -RingElem::one() };
    let scale = &sign * &qint(n as i64 + 1);
    let index: BTreeMap<&LinkPattern, usize> = m.patterns.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let diagrams = if n == 0 { vec![] } else { enumerate_diagrams(n) };
    let terms = diagrams
        .into_iter()
        .map(|d| {
            let c = &row[index[&fold_open(&d)]] * &scale;
            Ok((d.into_planar(), ring.lift(&c)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Projector { n, expansion: Tangle::from_terms(ring, n, n, terms) })
}

/// The rainbow row of the exact inverse, keyed by pattern.
pub fn inverse_row_exact(n: usize, limit: usize) -> Result<BTreeMap<LinkPattern, RingElem>> {
    let m = meander_matrix(n)?;
    if n > limit {
        return Err(Error::InvalidInput(format!("symbolic inversion capped at n = {limit}")));
    }
    let cap = m.position(&LinkPattern::rainbow(n)).expect("rainbow is a pattern");
    Ok(m.patterns.iter().cloned().zip(meander_inverse_row(&m, cap)?).collect())
}

/// G · G^{-1} = 1 exactly.
pub fn inverse_is_exact(m: &MeanderMatrix, inv: &Matrix<RingElem>) -> bool {
    linalg::is_identity(&Generic, &linalg::mat_mul(&Generic, &m.entries(), inv))
}
