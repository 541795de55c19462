//! Exact linear algebra over a coefficient ring: incremental sparse echelon
//! forms, dense Gauss-Jordan (kernel, inverse, solve), and fraction-free
//! Bareiss elimination over Z[q].

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::coeff::{Ring, ZPoly};
use crate::error::{Error, Result};

pub type SparseVec<E> = BTreeMap<usize, E>;
pub type Matrix<E> = Vec<Vec<E>>;

/// Row echelon basis; each stored row has pivot = its smallest key, with
/// coefficient 1 there.
#[derive(Clone, Debug)]
pub struct Echelon<R: Ring> {
    ring: R,
    rows: BTreeMap<usize, SparseVec<R::Elem>>,
}

impl<R: Ring> Echelon<R> {
    pub fn new(ring: &R) -> Self {
        Echelon { ring: ring.clone(), rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, mut v: SparseVec<R::Elem>) -> SparseVec<R::Elem> {
        let ring = &self.ring;
        let mut cursor = 0usize;
        loop {
            let Some((&k, c)) = v.range(cursor..).next() else { break };
            cursor = k + 1;
            let Some(row) = self.rows.get(&k) else { continue };
            let c = c.clone();
            for (j, x) in row {
                let delta = ring.mul(&c, x);
                match v.get_mut(j) {
                    Some(y) => {
                        let z = ring.sub(y, &delta);
                        if ring.is_zero(&z) {
                            v.remove(j);
                        } else {
                            *y = z;
                        }
                    }
                    None => {
                        v.insert(*j, ring.neg(&delta));
                    }
                }
            }
            debug_assert!(!v.contains_key(&k));
        }
        v
    }

    /// Add `v` to the basis; true if it was independent.
    pub fn insert(&mut self, v: SparseVec<R::Elem>) -> bool {
        let r = self.reduce(v);
        let Some((&k, c)) = r.iter().next() else { return false };
        let inv = self.ring.inv(c).expect("nonzero pivot");
        let row = r.into_iter().map(|(j, x)| (j, self.ring.mul(&x, &inv))).collect();
        self.rows.insert(k, row);
        true
    }

    pub fn contains(&self, v: SparseVec<R::Elem>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<R: Ring>(ring: &R, vs: impl IntoIterator<Item = SparseVec<R::Elem>>) -> usize {
    let mut e = Echelon::new(ring);
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

fn to_sparse<R: Ring>(ring: &R, row: &[R::Elem]) -> SparseVec<R::Elem> {
    row.iter().enumerate().filter(|(_, x)| !ring.is_zero(x)).map(|(j, x)| (j, x.clone())).collect()
}

pub fn rank<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> usize {
    sparse_rank(ring, m.iter().map(|r| to_sparse(ring, r)))
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref<R: Ring>(ring: &R, a: &mut Matrix<R::Elem>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !ring.is_zero(&a[i][c])) else { continue };
        a.swap(r, p);
        let inv = ring.inv(&a[r][c]).expect("nonzero pivot");
        for x in a[r].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || ring.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !ring.is_zero(y) {
                    *x = ring.sub(x, &ring.mul(&f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    pivots
}

/// Basis of {x : m·x = 0}.
pub fn kernel<R: Ring>(ring: &R, m: &Matrix<R::Elem>, cols: usize) -> Vec<Vec<R::Elem>> {
    let mut a = m.clone();
    let pivots = rref(ring, &mut a, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![ring.zero(); cols];
            x[f] = ring.one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = ring.neg(&a[r][f]);
            }
            x
        })
        .collect()
}

pub fn inverse<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let n = m.len();
    let mut a: Matrix<R::Elem> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
            r
        })
        .collect();
    let pivots = rref(ring, &mut a, n);
    if pivots.len() < n {
        return Err(Error::SingularGram);
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solve m·x = b for square invertible m.
pub fn solve<R: Ring>(ring: &R, m: &Matrix<R::Elem>, b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let inv = inverse(ring, m)?;
    Ok(mat_vec(ring, &inv, b))
}

pub fn mat_vec<R: Ring>(ring: &R, m: &Matrix<R::Elem>, v: &[R::Elem]) -> Vec<R::Elem> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b))))
        .collect()
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(ring.zero(), |acc, (x, br)| ring.add(&acc, &ring.mul(x, &br[j]))))
                .collect()
        })
        .collect()
}

pub fn is_identity<R: Ring>(ring: &R, m: &Matrix<R::Elem>) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| if i == j { ring.eq(x, &ring.one()) } else { ring.is_zero(x) })
    })
}

/// Fraction-free Gauss-Jordan elimination: returns (adj, d) with m·adj = d·I,
/// every intermediate division exact. `None` if m is singular.
pub fn bareiss_inverse(m: &[Vec<ZPoly>]) -> Option<(Vec<Vec<ZPoly>>, ZPoly)> {
    let n = m.len();
    let id: Vec<Vec<ZPoly>> = (0..n).map(|i| (0..n).map(|j| if i == j { ZPoly::one() } else { ZPoly::zero() }).collect()).collect();
    bareiss_solve(m, &id)
}

/// Fraction-free solve: (x, d) with m·x = d·b for the right-hand sides `b`
/// (one row of `b` per row of m).
pub fn bareiss_solve(m: &[Vec<ZPoly>], b: &[Vec<ZPoly>]) -> Option<(Vec<Vec<ZPoly>>, ZPoly)> {
    let n = m.len();
    let mut a: Vec<Vec<ZPoly>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.extend(rhs.iter().cloned());
            r
        })
        .collect();
    let mut prev = ZPoly::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let pivot_row = a[k].clone();
        let akk = pivot_row[k].clone();
        a.par_iter_mut().enumerate().for_each(|(i, row)| {
            if i == k {
                return;
            }
            let aik = row[k].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                let v = akk.mul(x).sub(&aik.mul(y));
                *x = v.div_exact(&prev).expect("Bareiss divisions are exact");
            }
        });
        prev = akk;
    }
    let x = a.into_iter().map(|r| r[n..].to_vec()).collect();
    Some((x, prev))
}
