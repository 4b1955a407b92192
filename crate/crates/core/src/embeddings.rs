//! Explicit monoid and group maps out of `T(Γ)` and `A(Γ)`, and bounded
//! brute-force checks of their injectivity.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use rayon::prelude::*;

use crate::concrete::{AffineElement, HnnTrefoilElement, TrefoilElement};
use crate::error::{Error, Result};
use crate::graphs::SimpGraph;
use crate::raag::{self, RaagElement};
use crate::trace::{self, Trace};
use crate::words::{FreeWord, PositiveWord};

/// Elements of a monoid with decidable equality.
pub trait MonoidTarget: Clone + Eq + Hash + Send + Sync {
    fn op(&self, other: &Self) -> Self;
}

/// Monoid targets in which every element is invertible.
pub trait GroupTarget: MonoidTarget {
    fn inv(&self) -> Self;
}

impl MonoidTarget for PositiveWord {
    fn op(&self, other: &Self) -> Self {
        self.concat(other)
    }
}

impl MonoidTarget for Trace {
    fn op(&self, other: &Self) -> Self {
        self.concat(other).expect("images live over one graph")
    }
}

impl MonoidTarget for RaagElement {
    fn op(&self, other: &Self) -> Self {
        self.multiply(other).expect("images live over one graph")
    }
}

impl GroupTarget for RaagElement {
    fn inv(&self) -> Self {
        self.invert()
    }
}

impl MonoidTarget for AffineElement {
    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }
}

impl GroupTarget for AffineElement {
    fn inv(&self) -> Self {
        self.invert()
    }
}

impl MonoidTarget for TrefoilElement {
    fn op(&self, other: &Self) -> Self {
        self.multiply(other)
    }
}

impl GroupTarget for TrefoilElement {
    fn inv(&self) -> Self {
        self.invert()
    }
}

impl MonoidTarget for HnnTrefoilElement {
    fn op(&self, other: &Self) -> Self {
        self.multiply(other)
    }
}

impl GroupTarget for HnnTrefoilElement {
    fn inv(&self) -> Self {
        self.invert()
    }
}

impl<A: MonoidTarget, B: MonoidTarget, C: MonoidTarget> MonoidTarget for (A, B, C) {
    fn op(&self, other: &Self) -> Self {
        (self.0.op(&other.0), self.1.op(&other.1), self.2.op(&other.2))
    }
}

impl<A: GroupTarget, B: GroupTarget, C: GroupTarget> GroupTarget for (A, B, C) {
    fn inv(&self) -> Self {
        (self.0.inv(), self.1.inv(), self.2.inv())
    }
}

/// `x^n`, with negative powers through the inverse.
pub fn power<E: GroupTarget>(identity: &E, x: &E, n: i64) -> E {
    let base = if n < 0 { x.inv() } else { x.clone() };
    (0..n.unsigned_abs()).fold(identity.clone(), |acc, _| acc.op(&base))
}

/// A homomorphism determined by the images of the vertices of `source`.
#[derive(Debug, Clone)]
pub struct MonoidMap<E> {
    source: Arc<SimpGraph>,
    identity: E,
    images: Vec<E>,
}

impl<E: MonoidTarget> MonoidMap<E> {
    /// Checks that adjacent vertices have commuting images.
    pub fn new(source: &Arc<SimpGraph>, identity: E, images: Vec<E>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::ImageCountMismatch { expected: source.len(), got: images.len() });
        }
        for (u, v) in source.edges() {
            if images[u].op(&images[v]) != images[v].op(&images[u]) {
                return Err(Error::NonCommutingImages(
                    source.name(u).to_string(),
                    source.name(v).to_string(),
                ));
            }
        }
        Ok(MonoidMap { source: Arc::clone(source), identity, images })
    }

    pub fn source(&self) -> &Arc<SimpGraph> {
        &self.source
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn images(&self) -> &[E] {
        &self.images
    }

    pub fn apply_positive(&self, w: &PositiveWord) -> Result<E> {
        w.check_rank(self.source.len())?;
        Ok(w.0.iter().fold(self.identity.clone(), |acc, &v| acc.op(&self.images[v])))
    }

    pub fn apply_trace(&self, t: &Trace) -> Result<E> {
        if !trace::same_graph(t.graph(), &self.source) {
            return Err(Error::GraphMismatch);
        }
        self.apply_positive(t.nf())
    }
}

impl<E: GroupTarget> MonoidMap<E> {
    pub fn apply_word(&self, w: &FreeWord) -> Result<E> {
        w.check_rank(self.source.len())?;
        let inverses: Vec<E> = self.images.iter().map(|e| e.inv()).collect();
        Ok(w.0.iter().fold(self.identity.clone(), |acc, l| {
            acc.op(if l.inverse { &inverses[l.gen] } else { &self.images[l.gen] })
        }))
    }

    pub fn apply_raag(&self, g: &RaagElement) -> Result<E> {
        if !trace::same_graph(g.graph(), &self.source) {
            return Err(Error::GraphMismatch);
        }
        self.apply_word(g.nf())
    }
}

/// Outcome of [`verify_monoid_injective`]: pairs of distinct traces with
/// equal images, sorted by `(length, lex)` of the later trace, then the earlier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub max_len: usize,
    pub checked: usize,
    pub collisions: Vec<(Trace, Trace)>,
}

/// Outcome of [`verify_no_kernel`]: non-trivial elements mapped to the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub max_len: usize,
    pub checked: usize,
    pub kernel: Vec<RaagElement>,
}

impl InjectivityReport {
    pub fn is_injective(&self) -> bool {
        self.collisions.is_empty()
    }
}

impl KernelReport {
    pub fn is_empty(&self) -> bool {
        self.kernel.is_empty()
    }
}

impl fmt::Display for InjectivityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "checked={} collisions={}", self.checked, self.collisions.len())?;
        for (a, b) in &self.collisions {
            writeln!(f, "collision {} == {}", a.display(), b.display())?;
        }
        write!(f, "note=bounded certificate up to length {}", self.max_len)
    }
}

impl fmt::Display for KernelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "checked={} collisions={}", self.checked, self.kernel.len())?;
        for g in &self.kernel {
            writeln!(f, "kernel {}", g.display())?;
        }
        write!(f, "note=bounded certificate up to length {}", self.max_len)
    }
}

fn len_lex(a: &PositiveWord, b: &PositiveWord) -> std::cmp::Ordering {
    (a.len(), a).cmp(&(b.len(), b))
}

/// Maps every trace of length at most `max_len` and reports image collisions.
pub fn verify_monoid_injective<E: MonoidTarget>(m: &MonoidMap<E>, max_len: usize) -> InjectivityReport {
    let traces: Vec<Trace> = trace::enumerate(&m.source, max_len).collect();
    let images: Vec<E> = traces
        .par_iter()
        .map(|t| m.apply_positive(t.nf()).expect("enumerated over the source graph"))
        .collect();
    let mut first: HashMap<&E, usize> = HashMap::with_capacity(images.len());
    let mut collisions = Vec::new();
    for (i, img) in images.iter().enumerate() {
        if let Some(&j) = first.get(img) {
            collisions.push((traces[j].clone(), traces[i].clone()));
        } else {
            first.insert(img, i);
        }
    }
    collisions.sort_by(|x, y| len_lex(x.1.nf(), y.1.nf()).then_with(|| len_lex(x.0.nf(), y.0.nf())));
    InjectivityReport { max_len, checked: traces.len(), collisions }
}

/// Maps every non-trivial element of `A(Γ)` with canonical length at most
/// `max_len` and reports those sent to the identity.
pub fn verify_no_kernel<E: GroupTarget>(m: &MonoidMap<E>, max_len: usize) -> KernelReport {
    let elements = raag::enumerate_elements(&m.source, max_len);
    let inverses: Vec<E> = m.images.iter().map(|e| e.inv()).collect();
    let kernel: Vec<RaagElement> = elements
        .par_iter()
        .filter(|g| !g.is_trivial())
        .filter(|g| {
            let img = g.nf().0.iter().fold(m.identity.clone(), |acc, l| {
                acc.op(if l.inverse { &inverses[l.gen] } else { &m.images[l.gen] })
            });
            img == m.identity
        })
        .cloned()
        .collect();
    KernelReport { max_len, checked: elements.len() - 1, kernel }
}

// ---------------------------------------------------------------------------
// The maps themselves

/// The path `a – b – c – … ` on `n` vertices named `a, b, c, …`.
pub fn named_path(n: usize) -> Result<Arc<SimpGraph>> {
    let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
    Ok(Arc::new(SimpGraph::path_named(&names)?))
}

fn is_p4(g: &SimpGraph) -> bool {
    g.len() == 4 && g.edges().collect::<Vec<_>>() == vec![(0, 1), (1, 2), (2, 3)]
}

/// Generator images `α ↦ (x,y,1)`, `β ↦ (x,1,x)`, `γ ↦ (1,x,1)`, `δ ↦ (y,x,y)`
/// in the cube of the free monoid on `x = 0`, `y = 1`.
pub fn phi_p4_images() -> Vec<(PositiveWord, PositiveWord, PositiveWord)> {
    let w = |v: &[usize]| PositiveWord(v.to_vec());
    vec![
        (w(&[0]), w(&[1]), w(&[])),
        (w(&[0]), w(&[]), w(&[0])),
        (w(&[]), w(&[0]), w(&[])),
        (w(&[1]), w(&[0]), w(&[1])),
    ]
}

/// `T(P₄) → M₂ × M₂ × M₂`.
pub fn phi_p4_map(p4: &Arc<SimpGraph>) -> Result<MonoidMap<(PositiveWord, PositiveWord, PositiveWord)>> {
    if !is_p4(p4) {
        return Err(Error::WrongGraph);
    }
    MonoidMap::new(p4, Default::default(), phi_p4_images())
}

pub fn phi_p4(t: &Trace) -> Result<(PositiveWord, PositiveWord, PositiveWord)> {
    phi_p4_map(t.graph())?.apply_trace(t)
}

/// `T(Γ) ≅ A(Γ)⁺`: a positive word read as a group element.
pub fn paris(g: &Arc<SimpGraph>, w: &PositiveWord) -> Result<RaagElement> {
    RaagElement::from_positive(g, w)
}

/// `F_k × ℤ ↪ A(P₃)`: the star with centre 0 and leaves `1..=k` goes to
/// `centre ↦ β`, `leaf_i ↦ αⁱγα⁻ⁱ`.
pub fn star_images(k: usize) -> Result<(Arc<SimpGraph>, Vec<RaagElement>)> {
    if k == 0 {
        return Err(Error::TooFewVertices(0));
    }
    let p3 = named_path(3)?;
    let alpha = RaagElement::generator(&p3, 0)?;
    let beta = RaagElement::generator(&p3, 1)?;
    let gamma = RaagElement::generator(&p3, 2)?;
    let mut images = vec![beta];
    for i in 1..=k as i64 {
        let a = alpha.pow(i);
        images.push(a.multiply(&gamma)?.multiply(&a.invert())?);
    }
    Ok((p3, images))
}

/// The star graph `K_{1,k}` with centre `c` and leaves `l1 … lk`.
pub fn star_graph(k: usize) -> Result<Arc<SimpGraph>> {
    let mut names = vec!["c".to_string()];
    names.extend((1..=k).map(|i| format!("l{i}")));
    let edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    Ok(Arc::new(SimpGraph::new(&names, &edges)?))
}

pub fn star_embed(k: usize, w: &FreeWord) -> Result<RaagElement> {
    let (p3, images) = star_images(k)?;
    w.check_rank(k + 1)?;
    let m = MonoidMap::new(&star_graph(k)?, RaagElement::identity(&p3), images)?;
    m.apply_word(w)
}

/// A syllable of `A(P_{d+1}) * ⟨f⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FpSyllable {
    Raag(RaagElement),
    F(i64),
}

/// Element of `A(P_{d+1}) * ⟨f⟩` in alternating normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeProductElement {
    graph: Arc<SimpGraph>,
    syllables: Vec<FpSyllable>,
}

impl FreeProductElement {
    pub fn identity(graph: &Arc<SimpGraph>) -> Self {
        FreeProductElement { graph: Arc::clone(graph), syllables: Vec::new() }
    }

    pub fn f_power(graph: &Arc<SimpGraph>, k: i64) -> Self {
        let mut e = Self::identity(graph);
        e.push(FpSyllable::F(k));
        e
    }

    pub fn from_raag(g: RaagElement) -> Self {
        let mut e = Self::identity(g.graph());
        e.push(FpSyllable::Raag(g));
        e
    }

    pub fn syllables(&self) -> &[FpSyllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    fn push(&mut self, s: FpSyllable) {
        let merged = match (self.syllables.last(), &s) {
            (Some(FpSyllable::F(a)), FpSyllable::F(b)) => Some(FpSyllable::F(a + b)),
            (Some(FpSyllable::Raag(a)), FpSyllable::Raag(b)) => {
                Some(FpSyllable::Raag(a.multiply(b).expect("one factor graph")))
            }
            _ => None,
        };
        let s = match merged {
            Some(m) => {
                self.syllables.pop();
                m
            }
            None => s,
        };
        let trivial = match &s {
            FpSyllable::F(k) => *k == 0,
            FpSyllable::Raag(g) => g.is_trivial(),
        };
        if !trivial {
            self.syllables.push(s);
        }
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.clone());
        }
        out
    }

    pub fn invert(&self) -> Self {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| match s {
                FpSyllable::F(k) => FpSyllable::F(-k),
                FpSyllable::Raag(g) => FpSyllable::Raag(g.invert()),
            })
            .collect();
        FreeProductElement { graph: Arc::clone(&self.graph), syllables }
    }
}

impl fmt::Display for FreeProductElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .syllables
            .iter()
            .map(|s| match s {
                FpSyllable::F(1) => "f".to_string(),
                FpSyllable::F(k) => format!("f^{k}"),
                FpSyllable::Raag(g) => format!("({})", g.display()),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl MonoidTarget for FreeProductElement {
    fn op(&self, other: &Self) -> Self {
        self.multiply(other)
    }
}

impl GroupTarget for FreeProductElement {
    fn inv(&self) -> Self {
        self.invert()
    }
}

/// Generator images of the forest embedding `A(Γ) ↪ A(P_{d+1}) * ⟨f⟩`.
///
/// Components are taken in order of their least vertex; component `i` is
/// embedded into `A(P_{d+1})` and then conjugated by `fⁱ`. For `d = 2` every
/// component is a star and goes through [`star_images`] with its least
/// non-central vertex as first leaf; for `d = 1` an edge `u < v` goes to
/// `u ↦ α, v ↦ β`. Isolated vertices go to `α` (`d = 1`) or `β` (`d = 2`).
pub fn forest_images(g: &SimpGraph) -> Result<(Arc<SimpGraph>, Vec<FreeProductElement>)> {
    if !g.is_forest() {
        return Err(Error::NotForest);
    }
    let d = g.max_component_diameter()?;
    if d == 0 {
        return Err(Error::DiameterOutOfRange(
            "d = 0: the theorem does not generalise to totally disconnected graphs; \
             two non-commuting elements freely generate a free submonoid in BS(1,2)"
                .into(),
        ));
    }
    if d >= 3 {
        return Err(Error::DiameterOutOfRange(format!("d = {d}: only 1 and 2 are supported")));
    }
    let target = named_path(d + 1)?;
    let mut images: Vec<Option<FreeProductElement>> = vec![None; g.len()];
    for (i, comp) in g.component_vertices().into_iter().enumerate() {
        let local: Vec<RaagElement> = if d == 1 {
            comp.iter()
                .enumerate()
                .map(|(j, _)| RaagElement::generator(&target, j))
                .collect::<Result<_>>()?
        } else if comp.len() == 1 {
            vec![RaagElement::generator(&target, 1)?]
        } else {
            let centre = *comp.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))).expect("non-empty");
            let (_, star) = star_images(comp.len() - 1)?;
            let mut out = Vec::with_capacity(comp.len());
            let mut leaf = 1;
            for &v in &comp {
                if v == centre {
                    out.push(star[0].clone());
                } else {
                    out.push(star[leaf].clone());
                    leaf += 1;
                }
            }
            out
        };
        let conj = FreeProductElement::f_power(&target, i as i64);
        for (&v, img) in comp.iter().zip(local) {
            let e = conj.multiply(&FreeProductElement::from_raag(img)).multiply(&conj.invert());
            images[v] = Some(e);
        }
    }
    Ok((target, images.into_iter().map(|e| e.expect("every vertex lies in a component")).collect()))
}

pub fn forest_map(g: &Arc<SimpGraph>) -> Result<MonoidMap<FreeProductElement>> {
    let (target, images) = forest_images(g)?;
    MonoidMap::new(g, FreeProductElement::identity(&target), images)
}

pub fn forest_embed(g: &Arc<SimpGraph>, w: &FreeWord) -> Result<FreeProductElement> {
    forest_map(g)?.apply_word(w)
}

/// `(a·c^k·a⁻¹, b^l, c^m, d⁻¹·bⁿ·d)`.
#[allow(clippy::too_many_arguments)]
pub fn prop14_elements<E: GroupTarget>(
    identity: &E,
    a: &E,
    b: &E,
    c: &E,
    d: &E,
    k: i64,
    l: i64,
    m: i64,
    n: i64,
) -> Result<[E; 4]> {
    if [k, l, m, n].contains(&0) {
        return Err(Error::ZeroExponent(format!("k={k} l={l} m={m} n={n}")));
    }
    let p = |x: &E, e: i64| power(identity, x, e);
    Ok([
        a.op(&p(c, k)).op(&a.inv()),
        p(b, l),
        p(c, m),
        d.inv().op(&p(b, n)).op(d),
    ])
}

/// `x ↦ t`, `y ↦ at` in `BS(1,2)`, applied to each factor of `φ`.
pub fn composite_bs_images(n: i64) -> Result<Vec<(AffineElement, AffineElement, AffineElement)>> {
    let g = crate::concrete::BsGroup::new(n)?;
    let x = g.t();
    let y = g.a().compose(&g.t());
    let eval = |w: &PositiveWord| {
        w.0.iter().fold(g.identity(), |acc, &l| acc.compose(if l == 0 { &x } else { &y }))
    };
    Ok(phi_p4_images().iter().map(|(p, q, r)| (eval(p), eval(q), eval(r))).collect())
}

pub fn composite_bs_map(p4: &Arc<SimpGraph>) -> Result<MonoidMap<(AffineElement, AffineElement, AffineElement)>> {
    if !is_p4(p4) {
        return Err(Error::WrongGraph);
    }
    let g = crate::concrete::BsGroup::new(2)?;
    let id = (g.identity(), g.identity(), g.identity());
    MonoidMap::new(p4, id, composite_bs_images(2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concrete::{HnnTrefoil, Trefoil};
    use crate::stallings::StallingsGraph;
    use crate::words::Letter;
    use proptest::prelude::*;
    use std::collections::{BTreeSet, HashSet, VecDeque};

    fn pw(v: &[usize]) -> PositiveWord {
        PositiveWord(v.to_vec())
    }

    #[test]
    fn phi_examples() {
        let p4 = named_path(4).unwrap();
        let t = |v: &[usize]| Trace::normalize(&p4, &pw(v)).unwrap();
        assert_eq!(phi_p4(&t(&[0])).unwrap(), (pw(&[0]), pw(&[1]), pw(&[])));
        assert_eq!(phi_p4(&t(&[0, 1])).unwrap(), (pw(&[0, 0]), pw(&[1]), pw(&[0])));
        assert_eq!(phi_p4(&t(&[])).unwrap(), (pw(&[]), pw(&[]), pw(&[])));
        let p3 = named_path(3).unwrap();
        assert_eq!(phi_p4(&Trace::identity(&p3)), Err(Error::WrongGraph));
    }

    /// All words equivalent to `w` under adjacent swaps of commuting letters.
    fn swap_class(g: &SimpGraph, w: &[usize]) -> BTreeSet<Vec<usize>> {
        let mut seen = BTreeSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(u) = queue.pop_front() {
            for i in 1..u.len() {
                if u[i] != u[i - 1] && g.adjacent(u[i], u[i - 1]) {
                    let mut v = u.clone();
                    v.swap(i, i - 1);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn phi_well_defined_on_swap_classes() {
        let p4 = named_path(4).unwrap();
        let m = phi_p4_map(&p4).unwrap();
        for len in 0..=5u32 {
            for code in 0..4usize.pow(len) {
                let w: Vec<usize> = (0..len).map(|i| code / 4usize.pow(i) % 4).collect();
                let img = m.apply_positive(&pw(&w)).unwrap();
                for v in swap_class(&p4, &w) {
                    assert_eq!(m.apply_positive(&pw(&v)).unwrap(), img);
                }
            }
        }
    }

    #[test]
    fn broken_map_collides() {
        let p4 = named_path(4).unwrap();
        let x = (pw(&[0]), pw(&[]), pw(&[]));
        let images = vec![x.clone(), x.clone(), x.clone(), x];
        let m = MonoidMap::new(&p4, Default::default(), images).unwrap();
        let r = verify_monoid_injective(&m, 2);
        assert!(!r.is_injective());
        assert_eq!(r.collisions[0].1.len(), 1);
        assert!(r.to_string().starts_with(&format!("checked={} collisions=", r.checked)));
    }

    #[test]
    fn non_commuting_images_rejected() {
        let p3 = named_path(3).unwrap();
        let (a, b, c) = (Trefoil::a(), Trefoil::b(), Trefoil::c());
        assert!(MonoidMap::new(&p3, TrefoilElement::identity(), vec![a.clone(), b, c.clone()]).is_ok());
        let bad = MonoidMap::new(&p3, TrefoilElement::identity(), vec![a, c.clone(), c]);
        assert!(matches!(bad, Err(Error::NonCommutingImages(_, _))));
    }

    #[test]
    fn paris_examples() {
        let p4 = named_path(4).unwrap();
        let ba = paris(&p4, &pw(&[1, 0])).unwrap();
        assert_eq!(ba, paris(&p4, &pw(&[0, 1])).unwrap());
        assert!(paris(&p4, &pw(&[])).unwrap().is_trivial());
        assert_ne!(paris(&p4, &pw(&[3, 0])).unwrap(), paris(&p4, &pw(&[0, 3])).unwrap());
        assert_eq!(paris(&p4, &pw(&[4])), Err(Error::InvalidLetter(4)));
    }

    #[test]
    fn paris_injective_on_traces() {
        let p4 = named_path(4).unwrap();
        let traces: Vec<Trace> = trace::enumerate(&p4, 5).collect();
        let images: HashSet<RaagElement> = traces.iter().map(|t| paris(&p4, t.nf()).unwrap()).collect();
        assert_eq!(images.len(), traces.len());
    }

    #[test]
    fn star_examples() {
        let k = 3;
        let sg = star_graph(k).unwrap();
        let w = |s: &str| sg.alphabet().parse_word(s).unwrap();
        assert_eq!(star_embed(k, &w("c l1")).unwrap(), star_embed(k, &w("l1 c")).unwrap());
        assert!(!star_embed(k, &w("l1 l2 l1^-1 l2^-1")).unwrap().is_trivial());
        assert!(star_embed(k, &FreeWord::empty()).unwrap().is_trivial());
        assert!(star_embed(0, &FreeWord::empty()).is_err());
    }

    #[test]
    fn star_leaf_images_are_free() {
        // αⁱγα⁻ⁱ in the free group ⟨α, γ⟩ (α = 0, γ = 1)
        for k in 1..=5usize {
            let gens: Vec<FreeWord> = (1..=k as i64)
                .map(|i| FreeWord::power_of_gen(0, i).concat(&FreeWord::power_of_gen(1, 1)).concat(&FreeWord::power_of_gen(0, -i)))
                .collect();
            assert_eq!(StallingsGraph::from_generators(2, &gens).unwrap().subgroup_rank(), k);
        }
    }

    #[test]
    fn star_embedding_has_no_small_kernel() {
        let k = 2;
        let (p3, images) = star_images(k).unwrap();
        let m = MonoidMap::new(&star_graph(k).unwrap(), RaagElement::identity(&p3), images).unwrap();
        assert!(verify_no_kernel(&m, 4).is_empty());
    }

    fn two_edges() -> Arc<SimpGraph> {
        Arc::new(SimpGraph::new(&["p", "q", "r", "s"], &[(0, 1), (2, 3)]).unwrap())
    }

    #[test]
    fn forest_examples() {
        let g = two_edges();
        let w = |s: &str| g.alphabet().parse_word(s).unwrap();
        let e = forest_embed(&g, &w("r")).unwrap();
        assert_eq!(e.syllables().len(), 3);
        assert_eq!(e.syllables()[0], FpSyllable::F(1));
        assert_eq!(e.syllables()[2], FpSyllable::F(-1));
        assert_eq!(e.to_string(), "f (a) f^-1");
        let single = Arc::new(SimpGraph::path_named(&["u", "v"]).unwrap());
        let e = forest_embed(&single, &single.alphabet().parse_word("u v u").unwrap()).unwrap();
        assert_eq!(e.syllables().len(), 1);
        assert!(matches!(&e.syllables()[0], FpSyllable::Raag(_)));
        assert!(!forest_embed(&g, &w("p r p^-1 r^-1")).unwrap().is_identity());
        assert!(forest_embed(&g, &w("p q p^-1 q^-1")).unwrap().is_identity());
    }

    #[test]
    fn forest_errors() {
        let tri = Arc::new(SimpGraph::new(&["a", "b", "c"], &[(0, 1), (1, 2), (0, 2)]).unwrap());
        assert_eq!(forest_embed(&tri, &FreeWord::empty()), Err(Error::NotForest));
        let p4 = named_path(4).unwrap();
        assert!(matches!(forest_embed(&p4, &FreeWord::empty()), Err(Error::DiameterOutOfRange(_))));
        let dots = Arc::new(SimpGraph::edgeless(&["a", "b"]).unwrap());
        assert!(matches!(forest_embed(&dots, &FreeWord::empty()), Err(Error::DiameterOutOfRange(_))));
    }

    #[test]
    fn forest_no_small_kernel() {
        let g = Arc::new(SimpGraph::new(&["p", "q", "r", "s", "u"], &[(0, 1), (0, 2), (3, 4)]).unwrap());
        let m = forest_map(&g).unwrap();
        assert!(verify_no_kernel(&m, 4).is_empty());
    }

    #[test]
    fn trefoil_maps() {
        let p3 = named_path(3).unwrap();
        let m = MonoidMap::new(&p3, TrefoilElement::identity(), vec![Trefoil::a(), Trefoil::b(), Trefoil::c()]).unwrap();
        assert!(verify_monoid_injective(&m, 5).is_injective());
        let witness = p3.alphabet().parse_word("b^-1 a c^-1 a c^-1 a c^-1").unwrap();
        assert!(m.apply_word(&witness).unwrap().is_identity());
        let k = verify_no_kernel(&m, 7);
        assert!(k.kernel.contains(&RaagElement::normalize(&p3, &witness).unwrap()));
        assert!(k.kernel.iter().all(|g| g.len() == 7));
    }

    #[test]
    fn identity_map_has_no_kernel() {
        let p4 = named_path(4).unwrap();
        let images = (0..4).map(|v| RaagElement::generator(&p4, v).unwrap()).collect();
        let m = MonoidMap::new(&p4, RaagElement::identity(&p4), images).unwrap();
        let r = verify_no_kernel(&m, 4);
        assert!(r.is_empty());
        assert!(r.checked > 0);
    }

    #[test]
    fn prop14_examples() {
        let id = HnnTrefoilElement::identity();
        let (a, b, c, d) = (HnnTrefoil::a(), HnnTrefoil::b(), HnnTrefoil::c(), HnnTrefoil::d());
        let [e0, e1, e2, e3] = prop14_elements(&id, &a, &b, &c, &d, 1, 1, 1, 1).unwrap();
        assert_eq!(e0.op(&e1), e1.op(&e0));
        assert_eq!(e1.op(&e2), e2.op(&e1));
        assert_eq!(e2.op(&e3), e3.op(&e2));
        let p4 = named_path(4).unwrap();
        assert!(MonoidMap::new(&p4, id.clone(), vec![e0, e1, e2, e3]).is_ok());
        assert!(prop14_elements(&id, &a, &b, &c, &d, 0, 1, 1, 1).is_err());
        // with a and b swapped, the images of b^l and c^m stop commuting
        let [f0, f1, f2, f3] = prop14_elements(&id, &b, &a, &c, &d, 1, 1, 1, 1).unwrap();
        assert!(matches!(MonoidMap::new(&p4, id, vec![f0, f1, f2, f3]), Err(Error::NonCommutingImages(_, _))));
    }

    #[test]
    fn composite_images() {
        let imgs = composite_bs_images(2).unwrap();
        // γ ↦ (1, t, 1)
        assert!(imgs[2].0.is_identity() && imgs[2].2.is_identity());
        assert_eq!(imgs[2].1.power(), 1);
        let p4 = named_path(4).unwrap();
        assert!(verify_monoid_injective(&composite_bs_map(&p4).unwrap(), 5).is_injective());
    }

    fn arb_word(rank: usize) -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((0..rank, any::<bool>()), 0..=5)
            .prop_map(|v| FreeWord(v.into_iter().map(|(gen, inverse)| Letter { gen, inverse }).collect()))
    }

    proptest! {
        #[test]
        fn forest_embed_is_multiplicative(u in arb_word(5), v in arb_word(5)) {
            let g = Arc::new(SimpGraph::new(&["p", "q", "r", "s", "u"], &[(0, 1), (0, 2), (3, 4)]).unwrap());
            let eu = forest_embed(&g, &u).unwrap();
            let ev = forest_embed(&g, &v).unwrap();
            prop_assert_eq!(eu.multiply(&ev), forest_embed(&g, &u.concat(&v)).unwrap());
            // alternation and no trivial syllables
            for p in eu.syllables().windows(2) {
                prop_assert!(matches!((&p[0], &p[1]), (FpSyllable::F(_), FpSyllable::Raag(_)) | (FpSyllable::Raag(_), FpSyllable::F(_))));
            }
        }

        #[test]
        fn star_embed_is_multiplicative(u in arb_word(4), v in arb_word(4)) {
            let eu = star_embed(3, &u).unwrap();
            let ev = star_embed(3, &v).unwrap();
            prop_assert_eq!(eu.multiply(&ev).unwrap(), star_embed(3, &u.concat(&v)).unwrap());
        }
    }
}
