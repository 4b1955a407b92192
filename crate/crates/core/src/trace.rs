//! The trace monoid `T(Γ)`: positive words modulo commutation of adjacent
//! vertices.
//!
//! Elements are stored by their lexicographically least representative,
//! computed greedily: repeatedly emit the least letter that can be moved to
//! the front of what is left.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graphs::SimpGraph;
use crate::words::PositiveWord;

#[derive(Debug, Clone)]
pub struct Trace {
    graph: Arc<SimpGraph>,
    nf: PositiveWord,
}

impl PartialEq for Trace {
    fn eq(&self, other: &Self) -> bool {
        self.nf == other.nf && same_graph(&self.graph, &other.graph)
    }
}

impl Eq for Trace {}

impl std::hash::Hash for Trace {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.nf.hash(state);
    }
}

pub(crate) fn same_graph(a: &Arc<SimpGraph>, b: &Arc<SimpGraph>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Letters `a`, `b` commute in `T(Γ)` iff they are distinct and adjacent.
#[inline]
fn commute(g: &SimpGraph, a: usize, b: usize) -> bool {
    a != b && g.adjacent(a, b)
}

/// Lex-least representative of the trace of `word`.
pub fn lex_normal_form(g: &SimpGraph, word: &[usize]) -> Vec<usize> {
    let mut rest: Vec<usize> = word.to_vec();
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
        let i = best.expect("the first letter is always available");
        out.push(rest.remove(i));
    }
    out
}

/// Removes one occurrence of `x` from the front of the trace `rest`, if
/// `x` is a possible first letter.
fn remove_first(g: &SimpGraph, rest: &mut Vec<usize>, x: usize) -> bool {
    for i in 0..rest.len() {
        if rest[i] == x {
            rest.remove(i);
            return true;
        }
        if !commute(g, x, rest[i]) {
            return false;
        }
    }
    false
}

impl Trace {
    pub fn normalize(graph: &Arc<SimpGraph>, word: &PositiveWord) -> Result<Trace> {
        word.check_rank(graph.len())?;
        Ok(Trace { graph: Arc::clone(graph), nf: PositiveWord(lex_normal_form(graph, &word.0)) })
    }

    pub fn identity(graph: &Arc<SimpGraph>) -> Trace {
        Trace { graph: Arc::clone(graph), nf: PositiveWord::empty() }
    }

    pub fn letter(graph: &Arc<SimpGraph>, v: usize) -> Result<Trace> {
        Self::normalize(graph, &PositiveWord(vec![v]))
    }

    pub fn graph(&self) -> &Arc<SimpGraph> {
        &self.graph
    }

    /// The canonical representative.
    pub fn nf(&self) -> &PositiveWord {
        &self.nf
    }

    pub fn len(&self) -> usize {
        self.nf.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nf.is_empty()
    }

    pub fn equal(&self, other: &Trace) -> Result<bool> {
        if !same_graph(&self.graph, &other.graph) {
            return Err(Error::GraphMismatch);
        }
        Ok(self.nf == other.nf)
    }

    pub fn concat(&self, other: &Trace) -> Result<Trace> {
        if !same_graph(&self.graph, &other.graph) {
            return Err(Error::GraphMismatch);
        }
        let w = self.nf.concat(&other.nf);
        Ok(Trace { graph: Arc::clone(&self.graph), nf: PositiveWord(lex_normal_form(&self.graph, &w.0)) })
    }

    /// True iff some representative of `self` begins with `prefix`.
    pub fn starts_with(&self, prefix: &PositiveWord) -> Result<bool> {
        prefix.check_rank(self.graph.len())?;
        let mut rest = self.nf.0.clone();
        Ok(prefix.0.iter().all(|&x| remove_first(&self.graph, &mut rest, x)))
    }

    /// The letters that can start a representative, ascending.
    pub fn first_letters(&self) -> Vec<usize> {
        let w = &self.nf.0;
        let mut out: Vec<usize> = (0..w.len())
            .filter(|&i| w[..i].iter().all(|&y| commute(&self.graph, w[i], y)))
            .map(|i| w[i])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn display(&self) -> String {
        self.graph.alphabet().format_positive(&self.nf)
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// All traces of length at most `max_len`, each once, ordered by
/// `(length, lex of normal form)`.
pub fn enumerate(graph: &Arc<SimpGraph>, max_len: usize) -> TraceEnumerator {
    TraceEnumerator {
        graph: Arc::clone(graph),
        max_len,
        level: vec![Vec::new()],
        level_len: 0,
        pos: 0,
    }
}

/// Level-by-level enumeration; level `L+1` is the set of normal forms of
/// `t·v` for `t` at level `L`.
pub struct TraceEnumerator {
    graph: Arc<SimpGraph>,
    max_len: usize,
    level: Vec<Vec<usize>>,
    level_len: usize,
    pos: usize,
}

impl TraceEnumerator {
    fn advance_level(&mut self) -> bool {
        if self.level_len >= self.max_len {
            return false;
        }
        let n = self.graph.len();
        let mut next: BTreeSet<Vec<usize>> = BTreeSet::new();
        for w in &self.level {
            for v in 0..n {
                let mut ext = w.clone();
                ext.push(v);
                next.insert(lex_normal_form(&self.graph, &ext));
            }
        }
        self.level = next.into_iter().collect();
        self.level_len += 1;
        self.pos = 0;
        !self.level.is_empty()
    }
}

impl Iterator for TraceEnumerator {
    type Item = Trace;

    fn next(&mut self) -> Option<Trace> {
        while self.pos >= self.level.len() {
            if !self.advance_level() {
                return None;
            }
        }
        let nf = PositiveWord(self.level[self.pos].clone());
        self.pos += 1;
        Some(Trace { graph: Arc::clone(&self.graph), nf })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::all_graphs;
    use std::collections::{HashMap, VecDeque};

    fn p(n: usize) -> Arc<SimpGraph> {
        let names = ["a", "b", "c", "d", "e"];
        Arc::new(SimpGraph::path_named(&names[..n]).unwrap())
    }

    fn tr(g: &Arc<SimpGraph>, text: &str) -> Trace {
        Trace::normalize(g, &g.alphabet().parse_positive(text).unwrap()).unwrap()
    }

    /// Equivalence class of `w` under single swaps of adjacent commuting letters.
    fn swap_closure(g: &SimpGraph, w: &[usize]) -> BTreeSet<Vec<usize>> {
        let mut seen = BTreeSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(u) = queue.pop_front() {
            for i in 1..u.len() {
                if u[i - 1] != u[i] && g.adjacent(u[i - 1], u[i]) {
                    let mut v = u.clone();
                    v.swap(i - 1, i);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    fn all_words(n: usize, len: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| (0..n).map(move |x| [w.clone(), vec![x]].concat()))
                .collect();
        }
        out
    }

    #[test]
    fn normalize_examples() {
        let g = p(3);
        assert_eq!(tr(&g, "b a").nf().0, vec![0, 1]);
        let g = p(4);
        assert_eq!(tr(&g, "d a").nf().0, vec![3, 0]);
        assert_ne!(tr(&g, "d a"), tr(&g, "a d"));
        assert!(tr(&g, "").is_empty());
        assert_eq!(
            Trace::normalize(&g, &PositiveWord(vec![4])),
            Err(Error::InvalidLetter(4))
        );
    }

    #[test]
    fn equality_examples() {
        let g = p(4);
        assert!(tr(&g, "a b").equal(&tr(&g, "b a")).unwrap());
        assert!(!tr(&g, "a d").equal(&tr(&g, "d a")).unwrap());
        assert!(tr(&g, "b c b").equal(&tr(&g, "c b b")).unwrap());
        assert!(swap_closure(&g, &[1, 2, 1]).contains(&vec![2, 1, 1]));
        let other = p(3);
        assert_eq!(tr(&g, "a").equal(&tr(&other, "a")), Err(Error::GraphMismatch));
    }

    #[test]
    fn concat_examples() {
        let g = p(4);
        let t = tr(&g, "c a d");
        assert_eq!(t.concat(&Trace::identity(&g)).unwrap(), t);
        assert_eq!(tr(&g, "a").concat(&tr(&g, "b")).unwrap(), tr(&g, "b").concat(&tr(&g, "a")).unwrap());
        let (a, b, c) = (tr(&g, "a"), tr(&g, "b"), tr(&g, "c"));
        assert_eq!(
            a.concat(&b).unwrap().concat(&c).unwrap(),
            a.concat(&b.concat(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn prefix_examples() {
        let g = p(4);
        let alpha = g.alphabet().parse_positive("a").unwrap();
        assert!(tr(&g, "b a").starts_with(&alpha).unwrap());
        assert!(!tr(&g, "d a").starts_with(&alpha).unwrap());
        assert!(tr(&g, "d a").starts_with(&PositiveWord::empty()).unwrap());
        assert_eq!(tr(&g, "b c").first_letters(), vec![1, 2]);
    }

    #[test]
    fn enumerate_counts() {
        let g = p(4);
        assert_eq!(enumerate(&g, 1).count(), 5);
        // 16 two-letter words, the pairs ab/ba, bc/cb, cd/dc collapse: 13
        let two: BTreeSet<Vec<usize>> =
            all_words(4, 2).iter().map(|w| swap_closure(&g, w).into_iter().next().unwrap()).collect();
        assert_eq!(two.len(), 13);
        assert_eq!(enumerate(&g, 2).count(), 18);
        let e = Arc::new(SimpGraph::edgeless(&["a", "b"]).unwrap());
        assert_eq!(enumerate(&e, 2).count(), 7);
    }

    #[test]
    fn enumerate_is_ordered_and_free_counts() {
        let g = p(4);
        let all: Vec<Trace> = enumerate(&g, 4).collect();
        for pair in all.windows(2) {
            let (a, b) = (&pair[0].nf().0, &pair[1].nf().0);
            assert!((a.len(), a) < (b.len(), b));
        }
        for k in 1..=3usize {
            let names: Vec<String> = (0..k).map(|i| format!("x{i}")).collect();
            let e = Arc::new(SimpGraph::edgeless(&names).unwrap());
            for l in 0..=4u32 {
                let expected: usize = (0..=l).map(|i| k.pow(i)).sum();
                assert_eq!(enumerate(&e, l as usize).count(), expected);
            }
        }
    }

    #[test]
    fn enumerate_matches_swap_closure_classes() {
        let g = p(4);
        for len in 0..=5 {
            let classes: BTreeSet<Vec<usize>> = all_words(4, len)
                .iter()
                .map(|w| swap_closure(&g, w).into_iter().next().unwrap())
                .collect();
            let counted = enumerate(&g, len).filter(|t| t.len() == len).count();
            assert_eq!(counted, classes.len(), "length {len}");
        }
    }

    #[test]
    fn oracle_equivalence_small_graphs() {
        for n in 1..=4 {
            for g in all_graphs(n) {
                let ga = Arc::new(g.clone());
                for len in 0..=6 {
                    let words = all_words(n, len);
                    let mut class_of: HashMap<Vec<usize>, usize> = HashMap::new();
                    let mut nf_of_class: HashMap<usize, Vec<usize>> = HashMap::new();
                    let mut next = 0;
                    for w in &words {
                        let id = match class_of.get(w) {
                            Some(&id) => id,
                            None => {
                                for u in swap_closure(&g, w) {
                                    class_of.insert(u, next);
                                }
                                next += 1;
                                next - 1
                            }
                        };
                        let t = Trace::normalize(&ga, &PositiveWord(w.clone())).unwrap();
                        let nf = t.nf().0.clone();
                        assert_eq!(lex_normal_form(&g, &nf), nf);
                        match nf_of_class.get(&id) {
                            Some(prev) => assert_eq!(prev, &nf),
                            None => {
                                nf_of_class.insert(id, nf);
                            }
                        }
                    }
                    let distinct: BTreeSet<&Vec<usize>> = nf_of_class.values().collect();
                    assert_eq!(distinct.len(), next, "distinct classes must get distinct forms");
                }
            }
        }
    }

    #[test]
    fn starts_with_matches_divisibility() {
        let g = p(4);
        let traces: Vec<Trace> = enumerate(&g, 5).collect();
        let mut divides: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
        for u in &traces {
            for s in traces.iter().take_while(|s| s.len() + u.len() <= 5) {
                divides.insert((u.nf().0.clone(), u.concat(s).unwrap().nf().0.clone()));
            }
        }
        for t in &traces {
            for u in &traces {
                let expected = divides.contains(&(u.nf().0.clone(), t.nf().0.clone()));
                assert_eq!(t.starts_with(u.nf()).unwrap(), expected, "{t} / {u}");
            }
        }
    }
}
