//! Finite simplicial graphs: the dependence data for trace monoids and
//! right-angled Artin groups.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::words::Alphabet;

/// Simplicial graph with named vertices. Vertex order is declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpGraph {
    names: Alphabet,
    /// `(u, v)` with `u < v`.
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<bool>>,
}

impl SimpGraph {
    /// Builds a graph from vertex names and edges given by index.
    pub fn new<S: AsRef<str>>(names: &[S], edges: &[(usize, usize)]) -> Result<Self> {
        for (i, name) in names.iter().enumerate() {
            if names[..i].iter().any(|m| m.as_ref() == name.as_ref()) {
                return Err(Error::DuplicateVertex(name.as_ref().to_string()));
            }
        }
        let alphabet = Alphabet::new(names)?;
        let n = alphabet.len();
        let mut g = SimpGraph { names: alphabet, edges: BTreeSet::new(), adj: vec![vec![false; n]; n] };
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.len();
        if u >= n {
            return Err(Error::UnknownEndpoint(u.to_string()));
        }
        if v >= n {
            return Err(Error::UnknownEndpoint(v.to_string()));
        }
        if u == v {
            return Err(Error::LoopEdge(self.name(u).to_string()));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(Error::DuplicateEdge(self.name(key.0).to_string(), self.name(key.1).to_string()));
        }
        self.adj[u][v] = true;
        self.adj[v][u] = true;
        Ok(())
    }

    /// Parses `vertices: a b c` followed by lines `edge: u v`. Blank lines
    /// and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedGraph("missing `vertices:` line".into()))?;
        let names: Vec<&str> = header
            .strip_prefix("vertices:")
            .ok_or_else(|| Error::MalformedGraph(format!("expected `vertices:`, found `{header}`")))?
            .split_whitespace()
            .collect();
        let mut g = SimpGraph::new(&names, &[])?;
        for line in lines {
            let rest = line
                .strip_prefix("edge:")
                .ok_or_else(|| Error::MalformedGraph(format!("expected `edge:`, found `{line}`")))?;
            let ends: Vec<&str> = rest.split_whitespace().collect();
            if ends.len() != 2 {
                return Err(Error::MalformedGraph(format!("edge needs two endpoints: `{line}`")));
            }
            let lookup = |name: &str| {
                g.names.index_of(name).ok_or_else(|| Error::UnknownEndpoint(name.to_string()))
            };
            let (u, v) = (lookup(ends[0])?, lookup(ends[1])?);
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Serializes back into the text format accepted by [`SimpGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.names.names().join(" "));
        for &(u, v) in &self.edges {
            s.push_str(&format!("edge: {} {}\n", self.name(u), self.name(v)));
        }
        s
    }

    /// The path `v1 – v2 – … – vn`.
    pub fn path(n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        Self::path_named(&names)
    }

    /// A path through the given vertex names in order.
    pub fn path_named<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::ZeroVertices);
        }
        let edges: Vec<(usize, usize)> = (1..names.len()).map(|i| (i - 1, i)).collect();
        Self::new(names, &edges)
    }

    /// Graph with no edges.
    pub fn edgeless<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Self::new(names, &[])
    }

    /// Complete multipartite graph `K_{2,2,2}` (octahedron) on `a1 a2 b1 b2 c1 c2`.
    pub fn octahedron() -> Self {
        let names = ["a1", "a2", "b1", "b2", "c1", "c2"];
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in (u + 1)..6 {
                if u / 2 != v / 2 {
                    edges.push((u, v));
                }
            }
        }
        Self::new(&names, &edges).expect("static graph")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        self.names.name(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().enumerate().filter(|(_, &a)| a).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Vertex sets of the connected components, each sorted, ordered by least vertex.
    pub fn component_vertices(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraphs on the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<SimpGraph> {
        self.component_vertices().iter().map(|vs| self.induced_subgraph(vs)).collect()
    }

    /// Induced subgraph on `vertices`, keeping their relative order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> SimpGraph {
        let names: Vec<&str> = vertices.iter().map(|&v| self.name(v)).collect();
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        SimpGraph::new(&names, &edges).expect("induced subgraph of a valid graph")
    }

    pub fn is_forest(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (u, v) in self.edges() {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
        true
    }

    fn eccentricity(&self, start: usize) -> usize {
        let mut dist = vec![usize::MAX; self.len()];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        let mut far = 0;
        while let Some(v) = queue.pop_front() {
            far = far.max(dist[v]);
            for u in self.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        far
    }

    /// `d(Γ)`: the largest diameter of a connected component. Isolated
    /// vertices contribute 0.
    pub fn max_component_diameter(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(Error::EmptyGraph);
        }
        Ok((0..self.len()).map(|v| self.eccentricity(v)).max().unwrap_or(0))
    }

    /// Lexicographically least vertex sequence spanning an induced path on
    /// `n` vertices, if there is one.
    pub fn find_induced_path(&self, n: usize) -> Option<Vec<usize>> {
        if n == 0 || n > self.len() {
            return None;
        }
        let mut path = Vec::with_capacity(n);
        for start in 0..self.len() {
            path.push(start);
            if self.extend_induced_path(&mut path, n) {
                return Some(path);
            }
            path.pop();
        }
        None
    }

    fn extend_induced_path(&self, path: &mut Vec<usize>, n: usize) -> bool {
        if path.len() == n {
            return true;
        }
        let last = *path.last().expect("non-empty");
        for next in self.neighbors(last) {
            let ok = !path.contains(&next)
                && path[..path.len() - 1].iter().all(|&p| !self.adjacent(p, next));
            if ok {
                path.push(next);
                if self.extend_induced_path(path, n) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
}

/// Every labeled simple graph on `n` vertices named `v0…`, in edge-mask order.
pub fn all_graphs(n: usize) -> Vec<SimpGraph> {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
    (0u64..(1 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            SimpGraph::new(&names, &edges).expect("valid by construction")
        })
        .collect()
}
