//! Planar matchings: link diagrams, link patterns and general planar
//! morphisms between columns of nodes.
//!
//! Boundary convention: the `left` nodes are numbered top to bottom, then
//! the `right` nodes bottom to top, so the boundary reads as one cycle and
//! planarity is the noncrossing condition on that cycle. Indices are 0-based
//! internally and 1-based in every textual form.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A planar perfect matching between `left` nodes and `right` nodes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Planar {
    left: u8,
    right: u8,
    partner: Vec<u8>,
}

impl Planar {
    pub fn left(&self) -> usize {
        self.left as usize
    }

    pub fn right(&self) -> usize {
        self.right as usize
    }

    pub fn size(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    fn from_partner(left: usize, right: usize, partner: Vec<u8>) -> Self {
        Planar { left: left as u8, right: right as u8, partner }
    }

    /// From 1-based pairs; checks perfectness and planarity.
    pub fn from_pairs(left: usize, right: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let size = left + right;
        if size > 255 {
            return Err(Error::InvalidInput("at most 255 boundary nodes".into()));
        }
        let mut partner = vec![u8::MAX; size];
        for &(a, b) in pairs {
            if a == 0 || b == 0 || a > size || b > size || a == b {
                return Err(Error::InvalidInput(format!("bad pair ({a},{b})")));
            }
            let (a, b) = (a - 1, b - 1);
            if partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(Error::InvalidInput("node used twice".into()));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        if partner.iter().any(|&p| p == u8::MAX) {
            return Err(Error::InvalidInput("matching is not perfect".into()));
        }
        let p = Self::from_partner(left, right, partner);
        if !p.is_noncrossing() {
            return Err(Error::InvalidInput("pairs cross".into()));
        }
        Ok(p)
    }

    fn is_noncrossing(&self) -> bool {
        let mut stack = Vec::new();
        for i in 0..self.size() {
            let j = self.partner(i);
            if j > i {
                stack.push(i);
            } else if stack.pop() != Some(j) {
                return false;
            }
        }
        true
    }

    /// Sorted 1-based pair list.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size()).filter(|&i| self.partner(i) > i).map(|i| (i + 1, self.partner(i) + 1)).collect()
    }

    /// Index of the right node at top-down position `t`.
    pub fn right_index(&self, t: usize) -> usize {
        self.left() + self.right() - 1 - t
    }

    /// Top-down position of the right node with boundary index `i`.
    pub fn right_pos(&self, i: usize) -> usize {
        self.left() + self.right() - 1 - i
    }

    pub fn is_left(&self, i: usize) -> bool {
        i < self.left()
    }

    pub fn identity(n: usize) -> Self {
        let partner = (0..2 * n).map(|i| (2 * n - 1 - i) as u8).collect();
        Self::from_partner(n, n, partner)
    }

    /// `k` nested caps closing `2k` left nodes: a morphism 2k → 0.
    pub fn cap(k: usize) -> Self {
        let partner = (0..2 * k).map(|i| (2 * k - 1 - i) as u8).collect();
        Self::from_partner(2 * k, 0, partner)
    }

    /// `k` nested cups opening `2k` right nodes: a morphism 0 → 2k.
    pub fn cup(k: usize) -> Self {
        let partner = (0..2 * k).map(|i| (2 * k - 1 - i) as u8).collect();
        Self::from_partner(0, 2 * k, partner)
    }

    /// Number of links joining the two sides.
    pub fn crossing_count(&self) -> usize {
        (0..self.left()).filter(|&i| !self.is_left(self.partner(i))).count()
    }

    /// Glue the right side of `self` to the left side of `o`; returns the
    /// composite and the number of closed loops formed.
    pub fn compose(&self, o: &Planar) -> Result<(Planar, usize)> {
        if self.right() != o.left() {
            return Err(Error::SizeMismatch(self.right(), o.left()));
        }
        Ok(self.compose_unchecked(o))
    }

    pub(crate) fn compose_unchecked(&self, o: &Planar) -> (Planar, usize) {
        let m = self.left();
        let k = self.right();
        let n = o.right();
        let out_size = m + n;
        // visited marks for interface nodes, indexed by position top-down
        let mut seen = vec![false; k];

        // follow a strand entering `a` at node x; returns the output index
        let walk_from_a = |mut x: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                let y = self.partner(x);
                if y < m {
                    return y;
                }
                let t = self.right_pos(y);
                seen[t] = true;
                let z = o.partner(t);
                if z >= k {
                    return m + (z - k);
                }
                seen[z] = true;
                x = self.right_index(z);
            }
        };
        let walk_from_b = |mut x: usize, seen: &mut Vec<bool>| -> usize {
            loop {
                let y = o.partner(x);
                if y >= k {
                    return m + (y - k);
                }
                seen[y] = true;
                let z = self.partner(self.right_index(y));
                if z < m {
                    return z;
                }
                let t = self.right_pos(z);
                seen[t] = true;
                x = t;
            }
        };
        let mut partner = vec![u8::MAX; out_size];
        for start in 0..out_size {
            if partner[start] != u8::MAX {
                continue;
            }
            let end = if start < m { walk_from_a(start, &mut seen) } else { walk_from_b(k + (start - m), &mut seen) };
            partner[start] = end as u8;
            partner[end] = start as u8;
        }
        // remaining interface nodes lie on closed loops
        let mut loops = 0;
        for t in 0..k {
            if seen[t] {
                continue;
            }
            loops += 1;
            let mut x = t;
            loop {
                seen[x] = true;
                let y = o.partner(x);
                // y must be an interface node of `o`
                seen[y] = true;
                let z = self.partner(self.right_index(y));
                let tz = self.right_pos(z);
                if seen[tz] {
                    break;
                }
                x = tz;
            }
        }
        (Planar::from_partner(m, n, partner), loops)
    }

    /// Mirror image about a vertical axis: swaps the two sides.
    pub fn dagger(&self) -> Planar {
        let m = self.left();
        let n = self.right();
        let map = |i: usize| -> usize {
            if i < m {
                n + (m - 1 - i)
            } else {
                n - 1 - (i - m)
            }
        };
        let mut partner = vec![0u8; m + n];
        for i in 0..m + n {
            partner[map(i)] = map(self.partner(i)) as u8;
        }
        Planar::from_partner(n, m, partner)
    }

    /// `self` placed above `o`.
    pub fn tensor(&self, o: &Planar) -> Planar {
        let (m1, n1, m2, n2) = (self.left(), self.right(), o.left(), o.right());
        let mt = m1 + m2;
        let map_a = |i: usize| if i < m1 { i } else { mt + n2 + (i - m1) };
        let map_b = |i: usize| if i < m2 { m1 + i } else { mt + (i - m2) };
        let mut partner = vec![0u8; mt + n1 + n2];
        for i in 0..self.size() {
            partner[map_a(i)] = map_a(self.partner(i)) as u8;
        }
        for i in 0..o.size() {
            partner[map_b(i)] = map_b(o.partner(i)) as u8;
        }
        Planar::from_partner(mt, n1 + n2, partner)
    }

    /// Relabel the boundary cycle by `i -> i + k (mod size)`, keeping the
    /// side sizes. Rotation preserves planarity.
    pub fn rotate(&self, k: isize) -> Planar {
        let s = self.size() as isize;
        let f = |i: usize| ((i as isize + k).rem_euclid(s)) as usize;
        let mut partner = vec![0u8; self.size()];
        for i in 0..self.size() {
            partner[f(i)] = f(self.partner(i)) as u8;
        }
        Planar::from_partner(self.left(), self.right(), partner)
    }

    /// Reinterpret with a different split of the boundary cycle.
    pub fn reshape(&self, left: usize, right: usize) -> Planar {
        assert_eq!(left + right, self.size());
        Planar::from_partner(left, right, self.partner.clone())
    }

    /// True if some link joins two right nodes.
    pub fn has_right_turnback(&self) -> bool {
        (self.left()..self.size()).any(|i| self.partner(i) >= self.left())
    }

    pub fn has_left_turnback(&self) -> bool {
        (0..self.left()).any(|i| self.partner(i) < self.left())
    }

    /// Split into left and right halves: `self = a · dagger(b)`, both halves
    /// link patterns with one defect per crossing link.
    pub fn cut_in_half(&self) -> (LinkPattern, LinkPattern) {
        let m = self.left();
        let n = self.right();
        let c = self.crossing_count();
        // left half: nodes 0..m, defects in top-down order
        let mut pa = vec![0u8; m + c];
        let mut d = 0;
        for i in 0..m {
            let j = self.partner(i);
            if j < m {
                pa[i] = j as u8;
            } else {
                let di = m + c - 1 - d;
                pa[i] = di as u8;
                pa[di] = i as u8;
                d += 1;
            }
        }
        let mirrored = self.dagger();
        let mut pb = vec![0u8; n + c];
        let mut d = 0;
        for i in 0..n {
            let j = mirrored.partner(i);
            if j < n {
                pb[i] = j as u8;
            } else {
                let di = n + c - 1 - d;
                pb[i] = di as u8;
                pb[di] = i as u8;
                d += 1;
            }
        }
        (
            LinkPattern(Planar::from_partner(m, c, pa)),
            LinkPattern(Planar::from_partner(n, c, pb)),
        )
    }

    pub fn encode(&self) -> String {
        encode_pairs(&self.pairs())
    }
}

fn encode_pairs(p: &[(usize, usize)]) -> String {
    let inner: Vec<String> = p.iter().map(|(a, b)| format!("[{a},{b}]")).collect();
    format!("[{}]", inner.join(","))
}

fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    let v: Vec<[usize; 2]> =
        serde_json::from_str(s.trim()).map_err(|e| Error::InvalidInput(format!("pair list: {e}")))?;
    Ok(v.into_iter().map(|[a, b]| (a.min(b), a.max(b))).collect())
}

impl Ord for Planar {
    fn cmp(&self, o: &Self) -> Ordering {
        (self.left, self.right).cmp(&(o.left, o.right)).then_with(|| {
            let a = (0..self.size()).filter(|&i| self.partner(i) > i).map(|i| (i, self.partner(i)));
            let b = (0..o.size()).filter(|&i| o.partner(i) > i).map(|i| (i, o.partner(i)));
            a.cmp(b)
        })
    }
}

impl PartialOrd for Planar {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Planar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{}:{}", self.left, self.right, self.encode())
    }
}

/// Noncrossing perfect matchings of `2n` points on a line, in
/// lexicographic order of their sorted pair lists.
fn matchings(points: &[usize], out: &mut Vec<Vec<(usize, usize)>>) {
    if points.is_empty() {
        out.push(Vec::new());
        return;
    }
    let first = points[0];
    for j in (1..points.len()).step_by(2) {
        let mut inner = Vec::new();
        matchings(&points[1..j], &mut inner);
        let mut outer = Vec::new();
        matchings(&points[j + 1..], &mut outer);
        for a in &inner {
            for b in &outer {
                let mut v = Vec::with_capacity(points.len() / 2);
                v.push((first, points[j]));
                v.extend_from_slice(a);
                v.extend_from_slice(b);
                out.push(v);
            }
        }
    }
}

/// An n-link diagram: a planar matching with `n` nodes on each side.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkDiagram(Planar);

impl LinkDiagram {
    pub fn new(p: Planar) -> Result<Self> {
        if p.left() != p.right() {
            return Err(Error::SizeMismatch(p.left(), p.right()));
        }
        Ok(LinkDiagram(p))
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Ok(LinkDiagram(Planar::from_pairs(n, n, pairs)?))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let p = parse_pairs(s)?;
        Self::from_pairs(p.len(), &p)
    }

    pub fn identity(n: usize) -> Self {
        LinkDiagram(Planar::identity(n))
    }

    /// U_i: cup-cap at strands i, i+1 (1-based).
    pub fn u(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut pairs = Vec::new();
        for t in 1..=n {
            if t == i || t == i + 1 {
                continue;
            }
            pairs.push((t, 2 * n + 1 - t));
        }
        pairs.push((i, i + 1));
        pairs.push((2 * n - i, 2 * n + 1 - i));
        Self::from_pairs(n, &pairs)
    }

    pub fn n(&self) -> usize {
        self.0.left()
    }

    pub fn planar(&self) -> &Planar {
        &self.0
    }

    pub fn into_planar(self) -> Planar {
        self.0
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.pairs()
    }

    pub fn is_identity(&self) -> bool {
        self.0.crossing_count() == self.n()
    }

    pub fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    pub fn encode(&self) -> String {
        self.0.encode()
    }
}

impl fmt::Debug for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

/// An (n,s)-link pattern: `n` nodes (top to bottom), some paired by
/// noncrossing links, the `s` others defects. Stored as a planar morphism
/// from the `n` nodes to `s` defect endpoints.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern(Planar);

impl LinkPattern {
    pub fn new(p: Planar) -> Result<Self> {
        if p.has_right_turnback() {
            return Err(Error::InvalidInput("defects may not pair with each other".into()));
        }
        Ok(LinkPattern(p))
    }

    /// From 1-based links among `n` nodes; unpaired nodes become defects.
    pub fn from_links(n: usize, links: &[(usize, usize)]) -> Result<Self> {
        let mut used = vec![false; n + 1];
        for &(a, b) in links {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidInput(format!("bad link ({a},{b})")));
            }
            used[a] = true;
            used[b] = true;
        }
        let defects: Vec<usize> = (1..=n).filter(|&i| !used[i]).collect();
        let s = defects.len();
        let mut pairs: Vec<(usize, usize)> = links.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        // top-down defect t ↦ right node with top-down index t
        for (t, &d) in defects.iter().enumerate() {
            pairs.push((d, n + s - t));
        }
        Ok(LinkPattern(Planar::from_pairs(n, s, &pairs)?))
    }

    /// Text form `[[a,b],…]|[d1,d2,…]`.
    pub fn parse(s: &str) -> Result<Self> {
        let (links, defects) = match s.split_once('|') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let l = parse_pairs(links)?;
        let d: Vec<usize> = match defects {
            Some(b) => serde_json::from_str(b.trim()).map_err(|e| Error::InvalidInput(format!("defects: {e}")))?,
            None => vec![],
        };
        let n = 2 * l.len() + d.len();
        let p = Self::from_links(n, &l)?;
        if p.defects() != d {
            return Err(Error::InvalidInput("defect list inconsistent with links".into()));
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.0.left()
    }

    pub fn s(&self) -> usize {
        self.0.right()
    }

    pub fn planar(&self) -> &Planar {
        &self.0
    }

    /// 1-based links among the nodes.
    pub fn links(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n).filter(|&i| self.0.partner(i) > i && self.0.partner(i) < n).map(|i| (i + 1, self.0.partner(i) + 1)).collect()
    }

    /// 1-based defect nodes, top to bottom.
    pub fn defects(&self) -> Vec<usize> {
        let n = self.n();
        (0..n).filter(|&i| self.0.partner(i) >= n).map(|i| i + 1).collect()
    }

    /// Partner node (1-based) of node `a`, or `None` for a defect.
    pub fn partner(&self, a: usize) -> Option<usize> {
        let j = self.0.partner(a - 1);
        (j < self.n()).then_some(j + 1)
    }

    pub fn encode(&self) -> String {
        let d: Vec<String> = self.defects().iter().map(|x| x.to_string()).collect();
        format!("{}|[{}]", encode_pairs(&self.links()), d.join(","))
    }

    /// The (2n,0) pattern of a (2n,0) diagram-shaped pattern back to a diagram.
    pub fn unfold(&self) -> Result<LinkDiagram> {
        if self.s() != 0 || self.n() % 2 != 0 {
            return Err(Error::InvalidInput("unfold needs a defect-free pattern on 2n nodes".into()));
        }
        let h = self.n() / 2;
        Ok(LinkDiagram(self.0.reshape(h, h)))
    }

    /// The rainbow pattern Cap_n on 2n nodes.
    pub fn rainbow(n: usize) -> Self {
        LinkPattern(Planar::cap(n))
    }
}

impl fmt::Debug for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

/// All n-link diagrams, lexicographic in the sorted pair list.
pub fn enumerate_diagrams(n: usize) -> Vec<LinkDiagram> {
    let pts: Vec<usize> = (1..=2 * n).collect();
    let mut out = Vec::new();
    matchings(&pts, &mut out);
    out.into_iter().map(|p| LinkDiagram::from_pairs(n, &p).expect("noncrossing by construction")).collect()
}

/// Defect counts E_n = {n mod 2, …, n}.
pub fn defect_counts(n: usize) -> Vec<usize> {
    (n % 2..=n).step_by(2).collect()
}

/// All (n,s)-link patterns, lexicographic in (links, defects).
pub fn enumerate_patterns(n: usize, s: usize) -> Result<Vec<LinkPattern>> {
    if s > n || (n - s) % 2 != 0 {
        return Err(Error::InvalidDefectCount { n, s });
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    patterns_rec(1, n, s, 0, &mut Vec::new(), &mut cur, &mut out);
    let mut v: Vec<LinkPattern> = out.into_iter().map(|l| LinkPattern::from_links(n, &l).expect("valid")).collect();
    v.sort_by(|a, b| (a.links(), a.defects()).cmp(&(b.links(), b.defects())));
    Ok(v)
}

fn patterns_rec(
    i: usize,
    n: usize,
    s_left: usize,
    _depth: usize,
    open: &mut Vec<usize>,
    cur: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if i > n {
        if open.is_empty() && s_left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let remaining = n - i + 1;
    // defect: only at depth zero
    if open.is_empty() && s_left > 0 {
        patterns_rec(i + 1, n, s_left - 1, 0, open, cur, out);
    }
    // open a link
    if open.len() + 1 + s_left <= remaining - 1 {
        open.push(i);
        patterns_rec(i + 1, n, s_left, 0, open, cur, out);
        open.pop();
    }
    // close a link
    if let Some(a) = open.pop() {
        cur.push((a, i));
        patterns_rec(i + 1, n, s_left, 0, open, cur, out);
        cur.pop();
        open.push(a);
    }
}

/// Glue the right side of `a` to the left side of `b`.
pub fn compose(a: &LinkDiagram, b: &LinkDiagram) -> Result<(LinkDiagram, usize)> {
    let (p, k) = a.0.compose(&b.0)?;
    Ok((LinkDiagram(p), k))
}

/// Concatenate `d` to the left of the pattern; `None` on a turn-back path.
pub fn act_on_pattern(d: &LinkDiagram, p: &LinkPattern) -> Result<Option<(LinkPattern, usize)>> {
    let (r, k) = d.0.compose(&p.0)?;
    if r.has_right_turnback() {
        return Ok(None);
    }
    Ok(Some((LinkPattern(r), k)))
}

pub fn dagger(d: &LinkDiagram) -> LinkDiagram {
    LinkDiagram(d.0.dagger())
}

pub fn tensor(a: &LinkDiagram, b: &LinkDiagram) -> LinkDiagram {
    LinkDiagram(a.0.tensor(&b.0))
}

/// The (2n,0)-pattern sharing the diagram's pair list.
pub fn fold_open(d: &LinkDiagram) -> LinkPattern {
    LinkPattern(d.0.reshape(2 * d.n(), 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_squared_has_a_loop() {
        let u = LinkDiagram::u(2, 1).unwrap();
        let (d, k) = compose(&u, &u).unwrap();
        assert_eq!(d, u);
        assert_eq!(k, 1);
    }

    #[test]
    fn pattern_roundtrip() {
        let p = LinkPattern::from_links(4, &[(2, 3)]).unwrap();
        assert_eq!(p.defects(), vec![1, 4]);
        assert_eq!(LinkPattern::parse(&p.encode()).unwrap(), p);
    }
}
