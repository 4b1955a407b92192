//! Generalised Baumslag–Solitar groups given by labeled graphs.
//!
//! An edge `(u, v, α, ω)` has its cyclic edge group included into the vertex
//! group at `u` with index `α` and into the one at `v` with index `ω` (signs
//! included). Loops and multi-edges are allowed.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GbsEdge {
    pub u: usize,
    pub v: usize,
    pub alpha: i64,
    pub omega: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GbsGraph {
    vertices: usize,
    edges: Vec<GbsEdge>,
}

/// Generators of the image of the modular homomorphism in `ℚ*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularImage {
    pub generators: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    CstarSimple,
    NotCstarSimpleSolvableBs(i64),
    NotCstarSimpleUnimodular,
    Cyclic,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub reason: String,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::CstarSimple => write!(f, "CstarSimple"),
            Verdict::NotCstarSimpleSolvableBs(n) => write!(f, "NotCstarSimple_SolvableBS({n})"),
            Verdict::NotCstarSimpleUnimodular => write!(f, "NotCstarSimple_Unimodular"),
            Verdict::Cyclic => write!(f, "Cyclic"),
            Verdict::Unknown => write!(f, "Unknown"),
        }
    }
}

impl Verdict {
    /// Whether the verdict says the group is not C*-simple.
    pub fn is_not_cstar_simple(&self) -> bool {
        matches!(
            self,
            Verdict::NotCstarSimpleSolvableBs(_) | Verdict::NotCstarSimpleUnimodular | Verdict::Cyclic
        )
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verdict={} reason={}", self.verdict, self.reason)
    }
}

impl Classification {
    fn new(verdict: Verdict, reason: impl Into<String>) -> Self {
        Classification { verdict, reason: reason.into() }
    }
}

impl ModularImage {
    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(|g| g.is_one())
    }
}

impl fmt::Display for ModularImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl GbsGraph {
    pub fn new(vertices: usize, edges: Vec<GbsEdge>) -> Result<Self> {
        for e in &edges {
            if e.u >= vertices || e.v >= vertices {
                return Err(Error::MalformedGbs(format!("edge {} {} out of range", e.u, e.v)));
            }
            if e.alpha == 0 || e.omega == 0 {
                return Err(Error::MalformedGbs(format!("zero label on edge {} {}", e.u, e.v)));
            }
        }
        Ok(GbsGraph { vertices, edges })
    }

    /// One vertex with a loop `(α, ω)`: the group `BS(α, ω)`.
    pub fn bs_loop(alpha: i64, omega: i64) -> Result<Self> {
        Self::new(1, vec![GbsEdge { u: 0, v: 0, alpha, omega }])
    }

    /// Two vertices joined by one edge `(α, ω)`: `ℤ *_ℤ ℤ`.
    pub fn amalgam(alpha: i64, omega: i64) -> Result<Self> {
        Self::new(2, vec![GbsEdge { u: 0, v: 1, alpha, omega }])
    }

    /// `gbs-vertices: <n>` followed by `gbs-edge: <u> <v> <alpha> <omega>` lines.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertices = None;
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gbs-vertices:") {
                if vertices.is_some() {
                    return Err(Error::MalformedGbs("repeated vertex count".into()));
                }
                let n = rest.trim().parse::<usize>().map_err(|_| Error::MalformedGbs(line.to_string()))?;
                vertices = Some(n);
            } else if let Some(rest) = line.strip_prefix("gbs-edge:") {
                let nums: Vec<&str> = rest.split_whitespace().collect();
                if nums.len() != 4 {
                    return Err(Error::MalformedGbs(line.to_string()));
                }
                let bad = || Error::MalformedGbs(line.to_string());
                edges.push(GbsEdge {
                    u: nums[0].parse().map_err(|_| bad())?,
                    v: nums[1].parse().map_err(|_| bad())?,
                    alpha: nums[2].parse().map_err(|_| bad())?,
                    omega: nums[3].parse().map_err(|_| bad())?,
                });
            } else {
                return Err(Error::MalformedGbs(line.to_string()));
            }
        }
        let vertices = vertices.ok_or_else(|| Error::MalformedGbs("missing gbs-vertices".into()))?;
        Self::new(vertices, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("gbs-vertices: {}\n", self.vertices);
        for e in &self.edges {
            s.push_str(&format!("gbs-edge: {} {} {} {}\n", e.u, e.v, e.alpha, e.omega));
        }
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[GbsEdge] {
        &self.edges
    }

    /// Vertices in BFS order from 0 together with the parent edge of each.
    fn bfs_tree(&self) -> (Vec<Option<usize>>, Vec<usize>) {
        let mut parent: Vec<Option<usize>> = vec![None; self.vertices];
        let mut seen = vec![false; self.vertices];
        let mut order = Vec::new();
        if self.vertices == 0 {
            return (parent, order);
        }
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for (i, e) in self.edges.iter().enumerate() {
                let other = if e.u == x {
                    e.v
                } else if e.v == x {
                    e.u
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    parent[other] = Some(i);
                    queue.push_back(other);
                }
            }
        }
        (parent, order)
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_tree().1.len() == self.vertices
    }

    fn check_connected(&self) -> Result<()> {
        if self.vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

/// Collapses non-loop edges with a label of absolute value one, scanning in
/// input order and restarting after every collapse.
pub fn reduce_gbs(g: &GbsGraph) -> Result<GbsGraph> {
    g.check_connected()?;
    let mut vertices = g.vertices;
    let mut edges = g.edges.clone();
    while let Some(i) = edges
        .iter()
        .position(|e| e.u != e.v && (e.alpha.abs() == 1 || e.omega.abs() == 1))
    {
        let e = edges.remove(i);
        // the vertex group at `gone` is the edge group, which sits in `keep`
        // with index `factor`
        let (gone, keep) = if e.alpha.abs() == 1 { (e.u, e.v) } else { (e.v, e.u) };
        let factor = e.alpha * e.omega;
        for f in edges.iter_mut() {
            if f.u == gone {
                f.u = keep;
                f.alpha *= factor;
            }
            if f.v == gone {
                f.v = keep;
                f.omega *= factor;
            }
        }
        for f in edges.iter_mut() {
            if f.u > gone {
                f.u -= 1;
            }
            if f.v > gone {
                f.v -= 1;
            }
        }
        vertices -= 1;
    }
    GbsGraph::new(vertices, edges)
}

/// Cycle ratios `∏ ω/α` over the fundamental cycles of a BFS spanning tree
/// (edges scanned in input order), one generator per non-tree edge.
pub fn modular_image(g: &GbsGraph) -> Result<ModularImage> {
    g.check_connected()?;
    let (parent, order) = g.bfs_tree();
    // weight(x) = product of ω/α along the tree path from vertex 0 to x
    let mut weight = vec![BigRational::one(); g.vertices];
    for &x in &order {
        if let Some(i) = parent[x] {
            let e = g.edges[i];
            weight[x] = if e.v == x {
                &weight[e.u] * ratio(e.omega, e.alpha)
            } else {
                &weight[e.v] * ratio(e.alpha, e.omega)
            };
        }
    }
    let tree: Vec<bool> = (0..g.edges.len()).map(|i| parent.contains(&Some(i))).collect();
    let generators = g
        .edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !tree[*i])
        .map(|(_, e)| &weight[e.u] * ratio(e.omega, e.alpha) / &weight[e.v])
        .collect();
    Ok(ModularImage { generators })
}

pub fn is_unimodular(g: &GbsGraph) -> Result<bool> {
    Ok(modular_image(g)?.generators.iter().all(|q| q.abs().is_one()))
}

/// `Some(n)` iff the reduced graph is a single loop `(±1, ±n)` or `(±n, ±1)`
/// with `|n| ≥ 2`; `n` carries the product of the two signs.
pub fn detect_solvable_bs(g: &GbsGraph) -> Result<Option<i64>> {
    let r = reduce_gbs(g)?;
    if r.vertices != 1 || r.edges.len() != 1 {
        return Ok(None);
    }
    let e = r.edges[0];
    let (a, w) = (e.alpha.abs(), e.omega.abs());
    Ok(((a == 1 && w >= 2) || (w == 1 && a >= 2)).then_some(e.alpha * e.omega))
}

pub fn classify_cstar(g: &GbsGraph) -> Result<Classification> {
    let r = reduce_gbs(g)?;
    if r.edges.is_empty() {
        return Ok(Classification::new(
            Verdict::Cyclic,
            "no edges survive collapsing trivial edges: the group is infinite cyclic",
        ));
    }
    if let Some(n) = detect_solvable_bs(&r)? {
        return Ok(Classification::new(
            Verdict::NotCstarSimpleSolvableBs(n),
            format!("reduces to a single loop with index 1 on one side: solvable BS(1,{n})"),
        ));
    }
    if is_unimodular(&r)? {
        let e = r.edges[0];
        let reason = if r.vertices == 1 && r.edges.len() == 1 && e.alpha.abs() == 1 && e.omega.abs() == 1 {
            "loop (±1,±1) is both BS(1,±1) and unimodular; reported as unimodular (normal infinite cyclic subgroup)"
                .to_string()
        } else {
            "modular image contained in {-1,1}: unimodular GBS group with a normal infinite cyclic subgroup".to_string()
        };
        return Ok(Classification::new(Verdict::NotCstarSimpleUnimodular, reason));
    }
    Ok(Classification::new(
        Verdict::CstarSimple,
        "GBS group that is neither solvable BS nor unimodular",
    ))
}

/// GBS groups never have `P_nai`: they commensurate an infinite cyclic subgroup.
pub fn p_nai_verdict(g: &GbsGraph) -> Result<bool> {
    if g.vertices == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(false)
}
