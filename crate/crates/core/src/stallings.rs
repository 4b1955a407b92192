//! Stallings graphs: folded, basepointed, labeled core graphs representing
//! finitely generated subgroups of a free group.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::words::{FreeWord, Letter};

/// Frozen folded core graph. Vertices are numbered by breadth-first search
/// from the basepoint (vertex 0), exploring `a0, a0⁻¹, a1, a1⁻¹, …` in
/// order, so two graphs are isomorphic iff they are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StallingsGraph {
    rank: usize,
    /// `out[v][a]`: target of the edge labeled `a` leaving `v`.
    out: Vec<Vec<Option<usize>>>,
    /// `inc[v][a]`: source of the edge labeled `a` entering `v`.
    inc: Vec<Vec<Option<usize>>>,
}

/// Order in which the folding worklist is processed. The result does not
/// depend on it; both are exposed so that can be tested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldOrder {
    Forward,
    Reverse,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
}

/// Folds the labeled multigraph given by `edges` (`(from, to, label)`) and
/// returns the canonical core graph at `basepoint`.
fn fold(
    rank: usize,
    vertex_count: usize,
    mut edges: Vec<(usize, usize, usize)>,
    basepoint: usize,
    order: FoldOrder,
) -> StallingsGraph {
    if order == FoldOrder::Reverse {
        edges.reverse();
    }
    let mut uf = UnionFind((0..vertex_count).collect());
    loop {
        let mut changed = false;
        let mut out: HashMap<(usize, usize), usize> = HashMap::new();
        let mut inc: HashMap<(usize, usize), usize> = HashMap::new();
        for &(s, t, a) in &edges {
            let (s, t) = (uf.find(s), uf.find(t));
            match out.get(&(s, a)).copied() {
                Some(t2) => {
                    let t2 = uf.find(t2);
                    if t2 != t {
                        uf.0[t] = t2;
                        changed = true;
                    }
                }
                None => {
                    out.insert((s, a), t);
                }
            }
            let t = uf.find(t);
            match inc.get(&(t, a)).copied() {
                Some(s2) => {
                    let s2 = uf.find(s2);
                    let s = uf.find(s);
                    if s2 != s {
                        uf.0[s] = s2;
                        changed = true;
                    }
                }
                None => {
                    inc.insert((t, a), uf.find(s));
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut folded: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    for &(s, t, a) in &edges {
        folded.insert((uf.find(s), uf.find(t), a));
    }
    let base = uf.find(basepoint);
    canonical_core(rank, folded.into_iter().collect(), base)
}

/// Restricts a folded graph to the component of `base`, prunes hanging
/// trees not containing `base`, and renumbers by BFS.
fn canonical_core(rank: usize, edges: Vec<(usize, usize, usize)>, base: usize) -> StallingsGraph {
    let mut alive: BTreeSet<(usize, usize, usize)> = edges.into_iter().collect();
    loop {
        let mut degree: HashMap<usize, usize> = HashMap::new();
        for &(s, t, _) in &alive {
            *degree.entry(s).or_default() += 1;
            *degree.entry(t).or_default() += 1;
        }
        let before = alive.len();
        alive.retain(|&(s, t, _)| {
            let leaf = |v: usize| v != base && degree[&v] == 1;
            !(leaf(s) || leaf(t))
        });
        if alive.len() == before {
            break;
        }
    }
    let mut out_map: HashMap<(usize, usize), usize> = HashMap::new();
    let mut inc_map: HashMap<(usize, usize), usize> = HashMap::new();
    for &(s, t, a) in &alive {
        out_map.insert((s, a), t);
        inc_map.insert((t, a), s);
    }
    let mut number: HashMap<usize, usize> = HashMap::from([(base, 0)]);
    let mut order = vec![base];
    let mut queue = VecDeque::from([base]);
    while let Some(v) = queue.pop_front() {
        for a in 0..rank {
            for next in [out_map.get(&(v, a)), inc_map.get(&(v, a))].into_iter().flatten() {
                if !number.contains_key(next) {
                    number.insert(*next, order.len());
                    order.push(*next);
                    queue.push_back(*next);
                }
            }
        }
    }
    let n = order.len();
    let mut out = vec![vec![None; rank]; n];
    let mut inc = vec![vec![None; rank]; n];
    for (&(s, a), &t) in &out_map {
        if let (Some(&s), Some(&t)) = (number.get(&s), number.get(&t)) {
            out[s][a] = Some(t);
            inc[t][a] = Some(s);
        }
    }
    StallingsGraph { rank, out, inc }
}

impl StallingsGraph {
    /// Folded core graph of `⟨gens⟩ ≤ F(rank)`.
    pub fn from_generators(rank: usize, gens: &[FreeWord]) -> Result<Self> {
        Self::from_generators_with_order(rank, gens, FoldOrder::Forward)
    }

    pub fn from_generators_with_order(rank: usize, gens: &[FreeWord], order: FoldOrder) -> Result<Self> {
        let mut edges = Vec::new();
        let mut vertex_count = 1;
        for g in gens {
            g.check_rank(rank)?;
            let g = g.reduce();
            if g.is_empty() {
                continue;
            }
            let mut prev = 0;
            for (i, l) in g.0.iter().enumerate() {
                let next = if i + 1 == g.len() {
                    0
                } else {
                    vertex_count += 1;
                    vertex_count - 1
                };
                if l.inverse {
                    edges.push((next, prev, l.gen));
                } else {
                    edges.push((prev, next, l.gen));
                }
                prev = next;
            }
        }
        Ok(fold(rank, vertex_count, edges, 0, order))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    /// Directed labeled edges `(from, to, label)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut e: Vec<(usize, usize, usize)> = self
            .out
            .iter()
            .enumerate()
            .flat_map(|(s, row)| row.iter().enumerate().filter_map(move |(a, t)| t.map(|t| (s, t, a))))
            .collect();
        e.sort_unstable();
        e
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().flatten().filter(|t| t.is_some()).count()
    }

    fn step(&self, v: usize, l: Letter) -> Option<usize> {
        if l.inverse {
            self.inc[v][l.gen]
        } else {
            self.out[v][l.gen]
        }
    }

    /// Membership of `w` in the subgroup.
    pub fn contains(&self, w: &FreeWord) -> Result<bool> {
        w.check_rank(self.rank)?;
        let mut v = 0;
        for &l in &w.reduce().0 {
            match self.step(v, l) {
                Some(next) => v = next,
                None => return Ok(false),
            }
        }
        Ok(v == 0)
    }

    /// Rank of the subgroup, `|E| − |V| + 1`.
    pub fn subgroup_rank(&self) -> usize {
        self.edge_count() + 1 - self.vertex_count()
    }

    /// Subgroup intersection via the fiber product.
    pub fn intersect(&self, other: &StallingsGraph) -> Result<StallingsGraph> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let mut index: HashMap<(usize, usize), usize> = HashMap::from([((0, 0), 0)]);
        let mut queue = VecDeque::from([(0usize, 0usize)]);
        let mut edges = Vec::new();
        while let Some((u, v)) = queue.pop_front() {
            let here = index[&(u, v)];
            for a in 0..self.rank {
                for l in [Letter::pos(a), Letter::neg(a)] {
                    if let (Some(u2), Some(v2)) = (self.step(u, l), other.step(v, l)) {
                        let next_id = index.len();
                        let there = *index.entry((u2, v2)).or_insert_with(|| {
                            queue.push_back((u2, v2));
                            next_id
                        });
                        if !l.inverse {
                            edges.push((here, there, a));
                        }
                    }
                }
            }
        }
        Ok(canonical_core(self.rank, edges, 0))
    }

    /// Finite index iff every vertex has an outgoing and incoming edge for every label.
    pub fn is_finite_index(&self) -> bool {
        self.out.iter().chain(&self.inc).all(|row| row.iter().all(Option::is_some))
    }

    /// Index in the ambient free group, when finite.
    pub fn index(&self) -> Option<usize> {
        self.is_finite_index().then(|| self.vertex_count())
    }

    /// A free basis read off a BFS spanning tree: one generator per non-tree edge.
    pub fn basis(&self) -> Vec<FreeWord> {
        let n = self.vertex_count();
        let mut path: Vec<Option<FreeWord>> = vec![None; n];
        path[0] = Some(FreeWord::empty());
        let mut tree: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for a in 0..self.rank {
                for l in [Letter::pos(a), Letter::neg(a)] {
                    if let Some(u) = self.step(v, l) {
                        if path[u].is_none() {
                            let mut p = path[v].clone().expect("visited");
                            p.0.push(l);
                            path[u] = Some(p);
                            tree.insert(if l.inverse { (u, v, a) } else { (v, u, a) });
                            queue.push_back(u);
                        }
                    }
                }
            }
        }
        self.edges()
            .into_iter()
            .filter(|e| !tree.contains(e))
            .map(|(s, t, a)| {
                let ps = path[s].as_ref().expect("core graph is connected");
                let pt = path[t].as_ref().expect("core graph is connected");
                ps.concat(&FreeWord(vec![Letter::pos(a)])).concat(&pt.inverse()).reduce()
            })
            .collect()
    }
}

/// Least `r ≤ r_max` such that `h₁^r, …, h_k^r` freely generate a free
/// subgroup of rank `k`.
///
/// The elements must be non-trivial with pairwise trivially intersecting
/// cyclic subgroups; existence of some `r` is guaranteed then, but no bound
/// is known, hence `r_max`.
pub fn find_free_power(rank: usize, elts: &[FreeWord], r_max: usize) -> Result<Option<usize>> {
    let mut cyclic = Vec::with_capacity(elts.len());
    for (i, h) in elts.iter().enumerate() {
        h.check_rank(rank)?;
        if h.reduce().is_empty() {
            return Err(Error::TrivialElement(i));
        }
        cyclic.push(StallingsGraph::from_generators(rank, std::slice::from_ref(h))?);
    }
    for i in 0..cyclic.len() {
        for j in (i + 1)..cyclic.len() {
            if cyclic[i].intersect(&cyclic[j])?.subgroup_rank() > 0 {
                return Err(Error::PowersShareRoot(i, j));
            }
        }
    }
    for r in 1..=r_max {
        let powers: Vec<FreeWord> = elts.iter().map(|h| h.pow(r as i64)).collect();
        if StallingsGraph::from_generators(rank, &powers)?.subgroup_rank() == elts.len() {
            return Ok(Some(r));
        }
    }
    Ok(None)
}
