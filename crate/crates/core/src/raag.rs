//! Right-angled Artin groups `A(Γ)`.
//!
//! A word is *reduced* when no letter can be shuffled (moved past letters
//! it commutes with) next to its inverse. Reduced words for the same element
//! differ only by shuffles, so the lex-least shuffle of a reduced word is a
//! canonical form. Letters are ordered `g0 < g0⁻¹ < g1 < g1⁻¹ < …`.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graphs::SimpGraph;
use crate::trace::same_graph;
use crate::words::{FreeWord, Letter, PositiveWord};

#[derive(Debug, Clone)]
pub struct RaagElement {
    graph: Arc<SimpGraph>,
    nf: FreeWord,
}

impl PartialEq for RaagElement {
    fn eq(&self, other: &Self) -> bool {
        self.nf == other.nf && same_graph(&self.graph, &other.graph)
    }
}

impl Eq for RaagElement {}

impl std::hash::Hash for RaagElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.nf.hash(state);
    }
}

#[inline]
fn commute(g: &SimpGraph, a: Letter, b: Letter) -> bool {
    a.gen != b.gen && g.adjacent(a.gen, b.gen)
}

/// Appends `x` to the reduced word `w`, cancelling against the last
/// occurrence of `x⁻¹` that can be shuffled to the end.
fn push_reduced(g: &SimpGraph, w: &mut Vec<Letter>, x: Letter) {
    for i in (0..w.len()).rev() {
        let y = w[i];
        if y == x.inv() {
            w.remove(i);
            return;
        }
        if !commute(g, x, y) {
            break;
        }
    }
    w.push(x);
}

/// A reduced word equal to `word` in `A(Γ)`.
pub fn shuffle_reduce(g: &SimpGraph, word: &[Letter]) -> Vec<Letter> {
    let mut w = Vec::with_capacity(word.len());
    for &x in word {
        push_reduced(g, &mut w, x);
    }
    w
}

/// Lex-least word among the shuffles of `word`.
pub fn lex_least_shuffle(g: &SimpGraph, word: &[Letter]) -> Vec<Letter> {
    let mut rest = word.to_vec();
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let mut best: Option<usize> = None;
        for i in 0..rest.len() {
            let x = rest[i];
            if best.is_some_and(|b| rest[b] <= x) {
                continue;
            }
            if rest[..i].iter().all(|&y| commute(g, x, y)) {
                best = Some(i);
            }
        }
        out.push(rest.remove(best.expect("first letter is available")));
    }
    out
}

fn canonical(g: &SimpGraph, word: &[Letter]) -> FreeWord {
    FreeWord(lex_least_shuffle(g, &shuffle_reduce(g, word)))
}

impl RaagElement {
    pub fn normalize(graph: &Arc<SimpGraph>, word: &FreeWord) -> Result<RaagElement> {
        word.check_rank(graph.len())?;
        Ok(RaagElement { graph: Arc::clone(graph), nf: canonical(graph, &word.0) })
    }

    pub fn from_positive(graph: &Arc<SimpGraph>, word: &PositiveWord) -> Result<RaagElement> {
        Self::normalize(graph, &word.to_free())
    }

    pub fn identity(graph: &Arc<SimpGraph>) -> RaagElement {
        RaagElement { graph: Arc::clone(graph), nf: FreeWord::empty() }
    }

    pub fn generator(graph: &Arc<SimpGraph>, v: usize) -> Result<RaagElement> {
        Self::normalize(graph, &FreeWord(vec![Letter::pos(v)]))
    }

    pub fn graph(&self) -> &Arc<SimpGraph> {
        &self.graph
    }

    pub fn nf(&self) -> &FreeWord {
        &self.nf
    }

    pub fn len(&self) -> usize {
        self.nf.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.nf.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }

    pub fn multiply(&self, other: &RaagElement) -> Result<RaagElement> {
        if !same_graph(&self.graph, &other.graph) {
            return Err(Error::GraphMismatch);
        }
        let mut w = self.nf.0.clone();
        for &x in &other.nf.0 {
            push_reduced(&self.graph, &mut w, x);
        }
        Ok(RaagElement { graph: Arc::clone(&self.graph), nf: FreeWord(lex_least_shuffle(&self.graph, &w)) })
    }

    pub fn invert(&self) -> RaagElement {
        let inv = self.nf.inverse();
        RaagElement { graph: Arc::clone(&self.graph), nf: FreeWord(lex_least_shuffle(&self.graph, &inv.0)) }
    }

    pub fn pow(&self, n: i64) -> RaagElement {
        let base = self.nf.pow(n);
        RaagElement { graph: Arc::clone(&self.graph), nf: canonical(&self.graph, &base.0) }
    }

    /// Membership in the positive monoid `A(Γ)⁺`.
    pub fn is_positive(&self) -> bool {
        self.nf.is_positive()
    }

    /// Image under the Bestvina–Brady character sending every vertex to 1.
    pub fn bb_degree(&self) -> i64 {
        self.nf.0.iter().map(|l| l.sign()).sum()
    }

    pub fn display(&self) -> String {
        self.graph.alphabet().format_word(&self.nf)
    }
}

impl fmt::Display for RaagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// Free basis `α₁⁻¹α₂, …, α_{n−1}⁻¹α_n` of the Bestvina–Brady subgroup of `A(P_n)`.
pub fn bb_basis(n: usize) -> Result<Vec<FreeWord>> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    Ok((1..n).map(|i| FreeWord(vec![Letter::neg(i - 1), Letter::pos(i)])).collect())
}

/// All elements with canonical length at most `max_len`, ordered by
/// `(length, lex of normal form)`.
pub fn enumerate_elements(graph: &Arc<SimpGraph>, max_len: usize) -> Vec<RaagElement> {
    let letters: Vec<Letter> =
        (0..graph.len()).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let mut level: Vec<Vec<Letter>> = vec![Vec::new()];
    let mut out: Vec<RaagElement> = vec![RaagElement::identity(graph)];
    for len in 1..=max_len {
        let mut next: BTreeSet<Vec<Letter>> = BTreeSet::new();
        for w in &level {
            for &x in &letters {
                let mut ext = w.clone();
                push_reduced(graph, &mut ext, x);
                if ext.len() == len {
                    next.insert(lex_least_shuffle(graph, &ext));
                }
            }
        }
        level = next.into_iter().collect();
        out.extend(level.iter().map(|w| RaagElement { graph: Arc::clone(graph), nf: FreeWord(w.clone()) }));
    }
    out
}
