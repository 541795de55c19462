//! Jones-Wenzl algebras JW_ς = P_ς · TL_{n_ς} · P_ς: multiindices, defect
//! sets and dimensions, Jones-Wenzl link states and their bilinear form,
//! sandwich bases, and cellularity checks.
//!
//! Coordinates. A (ς,ϖ)-Jones-Wenzl diagram is a diagram with no link joining
//! two nodes of one box on the same side. For such a diagram D the sandwich
//! P_ς D P_ϖ has coefficient 1 on D and 0 on every other Jones-Wenzl diagram
//! (all other terms acquire a box-internal link), so the coefficients of an
//! element on Jones-Wenzl diagrams are its coordinates in the plain sandwich
//! basis. Link states work the same way with Jones-Wenzl link patterns.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::coeff::{Generic, Ring};
use crate::diagrams::{enumerate_patterns, LinkPattern, Planar};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, Matrix, SparseVec};
use crate::tangle::{act, bilinear_form, LinkState, Tangle};
use crate::wenzl::{obstruction, projector_tangle, Report};

/// ς = (s_1, …, s_d) with positive entries, or the singleton (0).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiindex(Vec<usize>);

impl Multiindex {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Ok(Multiindex(vec![0]));
        }
        if entries.len() > 1 && entries.contains(&0) {
            return Err(Error::InvalidInput("entries must be positive unless ς = (0)".into()));
        }
        Ok(Multiindex(entries))
    }

    /// Parse "1,2,1" (also accepts surrounding parentheses).
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::InvalidInput(format!("multiindex entry {x:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(v)
    }

    /// (1, …, 1), n times.
    pub fn ones(n: usize) -> Self {
        Multiindex(if n == 0 { vec![0] } else { vec![1; n] })
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn d(&self) -> usize {
        self.0.len()
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn max_entry(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// ς̂: the last entry removed.
    pub fn hat(&self) -> Option<Self> {
        (self.d() > 1).then(|| Multiindex(self.0[..self.d() - 1].to_vec()))
    }

    /// ς̌: the first entry removed.
    pub fn check(&self) -> Option<Self> {
        (self.d() > 1).then(|| Multiindex(self.0[1..].to_vec()))
    }

    pub fn reversed(&self) -> Self {
        Multiindex(self.0.iter().rev().copied().collect())
    }

    /// Box containing the 0-based node `i`.
    pub fn box_of(&self, i: usize) -> usize {
        let mut acc = 0;
        for (b, &s) in self.0.iter().enumerate() {
            acc += s;
            if i < acc {
                return b;
            }
        }
        panic!("node {i} outside n = {}", self.n())
    }

    /// Node offset of each box.
    pub fn offsets(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.d());
        let mut acc = 0;
        for &s in &self.0 {
            v.push(acc);
            acc += s;
        }
        v
    }

    /// All multiindices (compositions) with n_ς = n.
    pub fn all_with_n(n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Multiindex(vec![0])];
        }
        let mut out = Vec::new();
        compositions(n, &mut Vec::new(), &mut out);
        out.into_iter().map(Multiindex).collect()
    }
}

fn compositions(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 0 {
        out.push(cur.clone());
        return;
    }
    for k in 1..=n {
        cur.push(k);
        compositions(n - k, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Multiindex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// E_ς = {min, min+2, …, max}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectSet {
    pub min: usize,
    pub max: usize,
}

impl DefectSet {
    pub fn contains(&self, s: usize) -> bool {
        s >= self.min && s <= self.max && (s - self.min) % 2 == 0
    }

    pub fn values(&self) -> Vec<usize> {
        (self.min..=self.max).step_by(2).collect()
    }
}

/// E_(r,t) = {|r−t|, …, r+t}.
pub fn pair_defects(r: usize, t: usize) -> BTreeSet<usize> {
    (r.abs_diff(t)..=r + t).step_by(2).collect()
}

fn fused_defects(m: &Multiindex) -> BTreeSet<usize> {
    let mut e: BTreeSet<usize> = [m.0[0]].into();
    for &t in &m.0[1..] {
        e = e.iter().flat_map(|&r| pair_defects(r, t)).collect();
    }
    e
}

/// E_ς by iterated fusion.
pub fn defect_set(m: &Multiindex) -> DefectSet {
    let e = fused_defects(m);
    let set = DefectSet { min: *e.first().unwrap(), max: *e.last().unwrap() };
    debug_assert!(set.values().into_iter().collect::<BTreeSet<_>>() == e, "contiguous in steps of 2");
    set
}

/// D_ς^(s) from D_ς^(s) = Σ_{r ∈ E_ς̂ ∩ E_(s,t)} D_ς̂^(r), D_(s)^(s) = 1.
pub fn dimension_data(m: &Multiindex) -> BTreeMap<usize, u64> {
    let mut d: BTreeMap<usize, u64> = [(m.0[0], 1)].into();
    for &t in &m.0[1..] {
        let mut next = BTreeMap::new();
        for (&r, &c) in &d {
            for s in pair_defects(r, t) {
                *next.entry(s).or_insert(0) += c;
            }
        }
        d = next;
    }
    d
}

/// dim JW_ς = Σ_s (D_ς^(s))².
pub fn dimension(m: &Multiindex) -> u64 {
    dimension_data(m).values().map(|c| c * c).sum()
}

/// P_ς = P_{s_1} ⊗ … ⊗ P_{s_d}.
pub fn composite_projector<R: Ring>(ring: &R, m: &Multiindex) -> Result<Tangle<R>> {
    obstruction(ring, m.max_entry())?;
    let mut t = Tangle::unit(ring, 0);
    for &s in m.entries() {
        t = t.tensor(&projector_tangle(ring, s)?);
    }
    Ok(t)
}

/// No link joins two nodes of a single box.
pub fn is_jw_pattern(m: &Multiindex, a: &LinkPattern) -> bool {
    a.n() == m.n() && a.links().iter().all(|&(x, y)| m.box_of(x - 1) != m.box_of(y - 1))
}

/// Jones-Wenzl diagram for boxes ς on the left and ϖ on the right.
pub fn is_jw_diagram(left: &Multiindex, right: &Multiindex, p: &Planar) -> bool {
    if p.left() != left.n() || p.right() != right.n() {
        return false;
    }
    (0..p.size()).all(|i| {
        let j = p.partner(i);
        match (p.is_left(i), p.is_left(j)) {
            (true, true) => left.box_of(i) != left.box_of(j),
            (false, false) => right.box_of(p.right_pos(i)) != right.box_of(p.right_pos(j)),
            _ => true,
        }
    })
}

/// (ς, s)-Jones-Wenzl link patterns, in pattern enumeration order.
pub fn enumerate_jw_patterns(m: &Multiindex, s: usize) -> Result<Vec<LinkPattern>> {
    Ok(enumerate_patterns(m.n(), s)?.into_iter().filter(|a| is_jw_pattern(m, a)).collect())
}

/// P_ς·α expanded.
pub fn jw_link_state<R: Ring>(ring: &R, m: &Multiindex, a: &LinkPattern) -> Result<LinkState<R>> {
    act(&composite_projector(ring, m)?, &LinkState::from_pattern(ring, a))
}

/// Cross-check of the combinatorial predicate: P_ς·α = 0 exactly when α has
/// a box-internal link.
pub fn zero_pattern_check<R: Ring>(ring: &R, m: &Multiindex) -> Result<bool> {
    let p = composite_projector(ring, m)?;
    for s in crate::diagrams::defect_counts(m.n()) {
        for a in enumerate_patterns(m.n(), s)? {
            let v = act(&p, &LinkState::from_pattern(ring, &a))?;
            if v.is_zero() == is_jw_pattern(m, &a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Gram matrix ⟨P_ς α | P_ς β⟩ over the (ς,s)-Jones-Wenzl patterns.
pub fn gram_matrix<R: Ring>(ring: &R, m: &Multiindex, s: usize) -> Result<Matrix<R::Elem>> {
    if !defect_set(m).contains(s) {
        return Err(Error::InvalidDefectCount { n: m.n(), s });
    }
    let pats = enumerate_jw_patterns(m, s)?;
    let states = pats.iter().map(|a| jw_link_state(ring, m, a)).collect::<Result<Vec<_>>>()?;
    let plain: Vec<LinkState<R>> = pats.iter().map(|a| LinkState::from_pattern(ring, a)).collect();
    // ⟨P α | P β⟩ = ⟨α | P β⟩ since P is a self-adjoint idempotent
    (0..pats.len())
        .map(|i| (0..pats.len()).map(|j| bilinear_form(&plain[i], &states[j])).collect())
        .collect()
}

/// Kernel of the Gram matrix specialized into `ring`.
pub fn radical<R: Ring>(ring: &R, m: &Multiindex, s: usize) -> Result<Vec<Vec<R::Elem>>> {
    let g = gram_matrix(&Generic, m, s)?;
    let spec: Matrix<R::Elem> = g.iter().map(|row| row.iter().map(|x| ring.lift(x)).collect()).collect::<Result<_>>()?;
    Ok(linalg::kernel(ring, &spec, g.len()))
}

/// Coefficients of α∨ (index `i` among the JW patterns) with ⟨α∨|β⟩ = δ.
pub fn dual_state<R: Ring>(ring: &R, m: &Multiindex, s: usize, i: usize) -> Result<Vec<R::Elem>> {
    let g = gram_matrix(ring, m, s)?;
    if i >= g.len() {
        return Err(Error::IndexOutOfRange { index: i, max: g.len() });
    }
    let inv = linalg::inverse(ring, &g)?;
    Ok(inv[i].clone())
}

/// An element of JW_ς in its expanded form.
#[derive(Clone, Debug)]
pub struct JWTangle<R: Ring = Generic> {
    pub multiindex: Multiindex,
    pub expanded: Tangle<R>,
}

impl<R: Ring> PartialEq for JWTangle<R> {
    fn eq(&self, o: &Self) -> bool {
        self.multiindex == o.multiindex && self.expanded == o.expanded
    }
}

impl<R: Ring> JWTangle<R> {
    /// P_ς · t · P_ς.
    pub fn sandwiched(ring: &R, m: &Multiindex, t: &Tangle<R>) -> Result<Self> {
        let p = composite_projector(ring, m)?;
        Ok(JWTangle { multiindex: m.clone(), expanded: p.compose(t)?.compose(&p)? })
    }

    pub fn unit(ring: &R, m: &Multiindex) -> Result<Self> {
        Ok(JWTangle { multiindex: m.clone(), expanded: composite_projector(ring, m)? })
    }

    fn same(&self, o: &Self) -> Result<()> {
        if self.multiindex != o.multiindex {
            return Err(Error::SizeMismatch(self.multiindex.n(), o.multiindex.n()));
        }
        Ok(())
    }

    pub fn multiply(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(JWTangle { multiindex: self.multiindex.clone(), expanded: self.expanded.compose(&o.expanded)? })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(JWTangle { multiindex: self.multiindex.clone(), expanded: self.expanded.add(&o.expanded)? })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same(o)?;
        Ok(JWTangle { multiindex: self.multiindex.clone(), expanded: self.expanded.sub(&o.expanded)? })
    }

    pub fn scale(&self, k: &R::Elem) -> Self {
        JWTangle { multiindex: self.multiindex.clone(), expanded: self.expanded.scale(k) }
    }

    pub fn dagger(&self) -> Self {
        JWTangle { multiindex: self.multiindex.clone(), expanded: self.expanded.dagger() }
    }

    pub fn is_zero(&self) -> bool {
        self.expanded.is_zero()
    }

    pub fn ring(&self) -> &R {
        self.expanded.ring()
    }

    /// P_ς X P_ς = X.
    pub fn absorbs_projector(&self) -> Result<bool> {
        let p = composite_projector(self.ring(), &self.multiindex)?;
        Ok(p.compose(&self.expanded)?.compose(&p)? == self.expanded)
    }
}

/// One (s, α, β) label of a sandwich basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SandwichLabel {
    pub s: usize,
    pub left: LinkPattern,
    pub right: LinkPattern,
}

/// Jones-Wenzl diagrams of JW_ς^ϖ, ordered by decreasing crossing count; index
/// i corresponds to the label with the same position.
#[derive(Clone, Debug)]
pub struct JwIndex {
    pub left: Multiindex,
    pub right: Multiindex,
    pub labels: Vec<SandwichLabel>,
    pub diagrams: Vec<Planar>,
    lookup: HashMap<Planar, usize>,
}

impl JwIndex {
    pub fn new(left: &Multiindex, right: &Multiindex) -> Result<Self> {
        if (left.n() + right.n()) % 2 != 0 {
            return Err(Error::InvalidInput("n_ς + n_ϖ must be even".into()));
        }
        let el = defect_set(left);
        let er = defect_set(right);
        let mut labels = Vec::new();
        for s in el.values().into_iter().rev().filter(|&s| er.contains(s)) {
            let a = enumerate_jw_patterns(left, s)?;
            let b = enumerate_jw_patterns(right, s)?;
            for x in &a {
                for y in &b {
                    labels.push(SandwichLabel { s, left: x.clone(), right: y.clone() });
                }
            }
        }
        let diagrams: Vec<Planar> = labels.iter().map(|l| l.left.planar().compose_unchecked(&l.right.planar().dagger()).0).collect();
        let lookup = diagrams.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        Ok(JwIndex { left: left.clone(), right: right.clone(), labels, diagrams, lookup })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, d: &Planar) -> Option<usize> {
        self.lookup.get(d).copied()
    }

    /// Coefficients of `t` on Jones-Wenzl diagrams.
    pub fn coords<R: Ring>(&self, t: &Tangle<R>) -> SparseVec<R::Elem> {
        t.terms().filter_map(|(p, c)| self.position(p).map(|i| (i, c.clone()))).collect()
    }
}

fn pattern_tangle<R: Ring>(ring: &R, a: &LinkPattern) -> Tangle<R> {
    Tangle::from_planar(ring, a.planar().clone(), ring.one())
}

/// ⟦α β⟧ = P_ς α β† P_ϖ, or ⟦α □ β⟧ = P_ς α P_s β† P_ϖ when `boxed`.
pub fn sandwich<R: Ring>(ring: &R, left: &Multiindex, right: &Multiindex, l: &SandwichLabel, boxed: bool) -> Result<Tangle<R>> {
    let a = pattern_tangle(ring, &l.left);
    let b = pattern_tangle(ring, &l.right).dagger();
    let mid = if boxed { a.compose(&projector_tangle(ring, l.s)?)?.compose(&b)? } else { a.compose(&b)? };
    composite_projector(ring, left)?.compose(&mid)?.compose(&composite_projector(ring, right)?)
}

/// A sandwich basis with its Jones-Wenzl coordinates.
pub struct SandwichBasis<R: Ring> {
    pub index: JwIndex,
    pub boxed: bool,
    pub elements: Vec<Tangle<R>>,
    pub coords: Vec<SparseVec<R::Elem>>,
}

pub fn sandwich_basis<R: Ring>(ring: &R, left: &Multiindex, right: &Multiindex, boxed: bool) -> Result<SandwichBasis<R>> {
    if boxed {
        obstruction(ring, left.n().min(right.n()))?;
    }
    let index = JwIndex::new(left, right)?;
    let elements = index.labels.iter().map(|l| sandwich(ring, left, right, l, boxed)).collect::<Result<Vec<_>>>()?;
    let coords = elements.iter().map(|t| index.coords(t)).collect();
    Ok(SandwichBasis { index, boxed, elements, coords })
}

impl<R: Ring> SandwichBasis<R> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Exact rank of the family.
    pub fn rank(&self, ring: &R) -> usize {
        linalg::sparse_rank(ring, self.coords.iter().cloned())
    }

    /// Coordinates of `t` in this basis: a triangular solve, since every
    /// element has coefficient 1 on its own diagram and otherwise only
    /// diagrams with fewer crossing links. Returns `None` when `t` carries
    /// weight outside the span.
    pub fn coordinates(&self, t: &Tangle<R>) -> Option<Vec<R::Elem>> {
        let ring = t.ring();
        let mut rest = self.index.coords(t);
        let mut y = vec![ring.zero(); self.len()];
        for i in 0..self.len() {
            let Some(c) = rest.get(&i).cloned() else { continue };
            for (j, x) in &self.coords[i] {
                let v = ring.sub(&rest.get(j).cloned().unwrap_or_else(|| ring.zero()), &ring.mul(&c, x));
                if ring.is_zero(&v) {
                    rest.remove(j);
                } else {
                    rest.insert(*j, v);
                }
            }
            y[i] = c;
        }
        rest.is_empty().then_some(y)
    }
}

/// U at the interface after box `i` (1-based), sandwiched by P_ς.
pub fn interface_u<R: Ring>(ring: &R, m: &Multiindex, i: usize) -> Result<JWTangle<R>> {
    if i == 0 || i >= m.d() {
        return Err(Error::IndexOutOfRange { index: i, max: m.d().saturating_sub(1) });
    }
    let pos: usize = m.entries()[..i].iter().sum();
    JWTangle::sandwiched(ring, m, &Tangle::generator_u(ring, m.n(), pos)?)
}

/// Cellularity of JW_ς with the box-inserted basis C_{α,β} = ⟦α □ β⟧:
/// (c1) basis, (c2) C_{α,β}† = C_{β,α}, (c3) for each generator T,
/// T·C_{α,β} ≡ Σ_η c_T(η,α) C_{η,β} modulo fewer defects, c independent of β.
pub fn verify_cellularity<R: Ring>(ring: &R, m: &Multiindex) -> Result<Report> {
    let mut rep = Report::default();
    let basis = sandwich_basis(ring, m, m, true)?;
    let dim = dimension(m) as usize;
    rep.push("c1: family size = dim", basis.len() == dim);
    rep.push("c1: full rank", basis.rank(ring) == dim);
    let pos: HashMap<(usize, &LinkPattern, &LinkPattern), usize> =
        basis.index.labels.iter().enumerate().map(|(i, l)| ((l.s, &l.left, &l.right), i)).collect();
    let c2 = basis.index.labels.iter().enumerate().all(|(i, l)| {
        let j = pos[&(l.s, &l.right, &l.left)];
        basis.elements[i].dagger() == basis.elements[j]
    });
    rep.push("c2: dagger swaps the factors", c2);

    let mut gens = vec![("unit".to_string(), JWTangle::unit(ring, m)?)];
    for i in 1..m.d() {
        gens.push((format!("U_{i}"), interface_u(ring, m, i)?));
    }
    for (name, g) in &gens {
        let mut ok = true;
        let mut spanned = true;
        // (s, α, η) → coefficient, checked for equality across β
        let mut seen: HashMap<(usize, LinkPattern, LinkPattern), Option<R::Elem>> = HashMap::new();
        for (i, l) in basis.index.labels.iter().enumerate() {
            let prod = g.expanded.compose(&basis.elements[i])?;
            let Some(y) = basis.coordinates(&prod) else {
                spanned = false;
                continue;
            };
            for (j, lj) in basis.index.labels.iter().enumerate() {
                let c = &y[j];
                if ring.is_zero(c) || lj.s < l.s {
                    continue;
                }
                if lj.s > l.s || lj.right != l.right {
                    ok = false;
                }
            }
            for (j, lj) in basis.index.labels.iter().enumerate() {
                if lj.s != l.s || lj.right != l.right {
                    continue;
                }
                let key = (l.s, l.left.clone(), lj.left.clone());
                let c = y[j].clone();
                match seen.get(&key) {
                    Some(Some(prev)) if !ring.eq(prev, &c) => ok = false,
                    Some(_) => {}
                    None => {
                        seen.insert(key, Some(c));
                    }
                }
            }
        }
        rep.push(format!("c3: {name}·C lies in the span"), spanned);
        rep.push(format!("c3: {name} coefficients independent of β"), ok);
    }
    Ok(rep)
}

/// ⟦α□β⟧⟦γ□δ⟧ = ⟨β|γ⟩ ⟦α□δ⟧ for all basis pairs.
pub fn product_rule_check<R: Ring>(ring: &R, m: &Multiindex) -> Result<bool> {
    let basis = sandwich_basis(ring, m, m, true)?;
    let labels = &basis.index.labels;
    let pos: HashMap<(usize, &LinkPattern, &LinkPattern), usize> =
        labels.iter().enumerate().map(|(i, l)| ((l.s, &l.left, &l.right), i)).collect();
    let mut states: HashMap<LinkPattern, LinkState<R>> = HashMap::new();
    for l in labels {
        for p in [&l.left, &l.right] {
            if !states.contains_key(p) {
                states.insert(p.clone(), jw_link_state(ring, m, p)?);
            }
        }
    }
    for (i, x) in labels.iter().enumerate() {
        for (j, y) in labels.iter().enumerate() {
            let lhs = basis.elements[i].compose(&basis.elements[j])?;
            let form = bilinear_form(&states[&x.right], &states[&y.left])?;
            let rhs = if x.s == y.s { basis.elements[pos[&(x.s, &x.left, &y.right)]].scale(&form) } else { Tangle::zero(ring, m.n(), m.n()) };
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// How boxes are inserted on the t connecting strands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insertion {
    /// no box (the identity map)
    None,
    /// one box of size t
    Single,
    /// boxes of sizes ⌈t/2⌉ and ⌊t/2⌋
    Halves,
}

/// Result of a change-of-basis instance: the matrix of the box-insertion map in
/// the basis α = α₂ ∘ α₁ (grouped by t_α), and whether it is unitriangular.
#[derive(Clone, Debug)]
pub struct ChangeOfBasis<R: Ring> {
    pub t_values: Vec<usize>,
    pub matrix: Matrix<R::Elem>,
    pub is_basis: bool,
    pub unitriangular: bool,
}

/// Boxes `i..j` (0-based, half-open) are first joined by α₁ into t strands,
/// then α₂ ∈ P_{(s_1..s_i, t, s_{j+1}..)} finishes the (ς,s) pattern; the map
/// inserts boxes on the t middle strands.
pub fn change_of_basis<R: Ring>(ring: &R, m: &Multiindex, i: usize, j: usize, s: usize, ins: Insertion) -> Result<ChangeOfBasis<R>> {
    if !(i < j && j <= m.d()) {
        return Err(Error::IndexOutOfRange { index: j, max: m.d() });
    }
    obstruction(ring, m.max_entry())?;
    let e = m.entries();
    let inner = Multiindex::new(e[i..j].to_vec())?;
    let a: usize = e[..i].iter().sum();
    let b: usize = e[j..].iter().sum();
    let target = enumerate_jw_patterns(m, s)?;
    let tindex: HashMap<&LinkPattern, usize> = target.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let p = composite_projector(ring, m)?;
    let mut t_values = Vec::new();
    let mut before: Vec<Vec<R::Elem>> = Vec::new();
    let mut after: Vec<Vec<R::Elem>> = Vec::new();
    let coords = |st: &LinkState<R>| -> Vec<R::Elem> {
        let mut v = vec![ring.zero(); target.len()];
        for (pat, c) in st.terms() {
            if let Some(&k) = tindex.get(pat) {
                v[k] = c.clone();
            }
        }
        v
    };
    for t in defect_set(&inner).values() {
        let mut outer: Vec<usize> = e[..i].to_vec();
        if t > 0 {
            outer.push(t);
        }
        outer.extend_from_slice(&e[j..]);
        let outer = Multiindex::new(outer)?;
        if !defect_set(&outer).contains(s) {
            continue;
        }
        let boxes = match (ins, t) {
            (_, 0) | (Insertion::None, _) => Tangle::unit(ring, t),
            (Insertion::Single, _) => projector_tangle(ring, t)?,
            (Insertion::Halves, _) => projector_tangle(ring, t.div_ceil(2))?.tensor(&projector_tangle(ring, t / 2)?),
        };
        for a1 in enumerate_jw_patterns(&inner, t)? {
            for a2 in enumerate_jw_patterns(&outer, s)? {
                let mid = Tangle::unit(ring, a).tensor(&pattern_tangle(ring, &a1)).tensor(&Tangle::unit(ring, b));
                let tail = pattern_tangle(ring, &a2);
                let plain = mid.compose(&tail)?;
                let inserted = Tangle::unit(ring, a)
                    .tensor(&pattern_tangle(ring, &a1).compose(&boxes)?)
                    .tensor(&Tangle::unit(ring, b))
                    .compose(&tail)?;
                let to_state = |x: &Tangle<R>| -> Result<LinkState<R>> {
                    let mut st = LinkState::zero(ring, m.n(), s);
                    for (pl, c) in x.terms() {
                        if !pl.has_right_turnback() {
                            st.add_term(LinkPattern::new(pl.clone())?, c.clone());
                        }
                    }
                    act(&p, &st)
                };
                before.push(coords(&to_state(&plain)?));
                after.push(coords(&to_state(&inserted)?));
                t_values.push(t);
            }
        }
    }
    let n = target.len();
    let square = before.len() == n;
    // columns are basis vectors: B · M = A
    let bmat: Matrix<R::Elem> = (0..n).map(|r| before.iter().map(|v| v[r].clone()).collect()).collect();
    let amat: Matrix<R::Elem> = (0..n).map(|r| after.iter().map(|v| v[r].clone()).collect()).collect();
    let (is_basis, matrix) = match square.then(|| linalg::inverse(ring, &bmat)) {
        Some(Ok(inv)) => (true, linalg::mat_mul(ring, &inv, &amat)),
        _ => (false, vec![]),
    };
    let unitriangular = is_basis
        && (0..n).all(|r| {
            (0..n).all(|c| {
                let x = &matrix[r][c];
                if r == c {
                    ring.eq(x, &ring.one())
                } else {
                    ring.is_zero(x) || t_values[r] < t_values[c]
                }
            })
        });
    Ok(ChangeOfBasis { t_values, matrix, is_basis, unitriangular })
}

/// The two items of the defect lemma, evaluated on every (ς, s_min)-pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectLemma {
    /// all defects attach to one box
    pub common_box: bool,
    /// that box has s_min < s_b when d > 1 (s_min = s_1 when d = 1)
    pub strict_bound: bool,
    /// the same with s_min ≤ s_b
    pub weak_bound: bool,
}

pub fn defect_lemma(m: &Multiindex) -> Result<DefectLemma> {
    let smin = defect_set(m).min;
    if m.d() == 1 {
        let ok = smin == m.entries()[0];
        return Ok(DefectLemma { common_box: true, strict_bound: ok, weak_bound: ok });
    }
    let mut r = DefectLemma { common_box: true, strict_bound: true, weak_bound: true };
    for a in enumerate_jw_patterns(m, smin)? {
        let boxes: BTreeSet<usize> = a.defects().iter().map(|&x| m.box_of(x - 1)).collect();
        if boxes.len() > 1 {
            r.common_box = false;
        }
        for &b in &boxes {
            r.strict_bound &= smin < m.entries()[b];
            r.weak_bound &= smin <= m.entries()[b];
        }
    }
    Ok(r)
}

/// Both items of the defect lemma, with the strict bound.
pub fn defect_lemma_check(m: &Multiindex) -> Result<bool> {
    let r = defect_lemma(m)?;
    Ok(r.common_box && r.strict_bound)
}

/// Rank of the action of JW_ς on ⊕_s P_ς^(s), over the plain sandwich basis.
/// Faithful exactly when this equals dim JW_ς.
pub fn action_rank<R: Ring>(ring: &R, m: &Multiindex) -> Result<usize> {
    let basis = sandwich_basis(ring, m, m, false)?;
    let mut pats: Vec<LinkPattern> = Vec::new();
    for s in defect_set(m).values() {
        pats.extend(enumerate_jw_patterns(m, s)?);
    }
    let pindex: HashMap<&LinkPattern, usize> = pats.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let states = pats.iter().map(|a| jw_link_state(ring, m, a)).collect::<Result<Vec<_>>>()?;
    let np = pats.len();
    let mut e = Echelon::new(ring);
    for t in &basis.elements {
        let mut v = SparseVec::new();
        for (col, st) in states.iter().enumerate() {
            for (pat, c) in act(t, st)?.terms() {
                if let Some(&row) = pindex.get(pat) {
                    v.insert(row * np + col, c.clone());
                }
            }
        }
        e.insert(v);
    }
    Ok(e.rank())
}

/// ⟨α|Tβ⟩ = ⟨T†α|β⟩ over the plain sandwich basis and all JW link states.
pub fn invariance_check<R: Ring>(ring: &R, m: &Multiindex) -> Result<bool> {
    let basis = sandwich_basis(ring, m, m, false)?;
    let mut states = Vec::new();
    for s in defect_set(m).values() {
        for a in enumerate_jw_patterns(m, s)? {
            states.push(jw_link_state(ring, m, &a)?);
        }
    }
    for t in &basis.elements {
        let td = t.dagger();
        for a in &states {
            let ta = act(&td, a)?;
            for b in &states {
                if a.s() != b.s() {
                    continue;
                }
                let l = bilinear_form(a, &act(t, b)?)?;
                let r = bilinear_form(&ta, b)?;
                if !ring.eq(&l, &r) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
