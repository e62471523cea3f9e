//! Simple graphs, bowtie (K5-C4) detection, Havel-Hakimi realization and the
//! exhaustive realization oracle.
//!
//! K5 minus the edges of a 4-cycle is two triangles sharing one vertex, so a
//! copy of it is a center vertex with four distinct neighbours `a, b, c, d`
//! such that `ab` and `cd` are edges.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::seqcore::{is_graphic, terms_are_graphic, DegreeSequence};

/// Largest order the realization enumerator accepts.
pub const ENUMERATION_LIMIT: usize = 10;

/// Labeled simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SimpleGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); vertex_count],
        }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::Graph(format!(
                "edge {u}-{v} out of range for n = {n}"
            )));
        }
        if u == v {
            return Err(Error::Graph(format!("self-loop at {u}")));
        }
        if !self.adj[u].insert(v) {
            return Err(Error::Graph(format!("duplicate edge {u}-{v}")));
        }
        self.adj[v].insert(u);
        Ok(())
    }

    /// Removes `u-v`, returning whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.vertex_count() || v >= self.vertex_count() {
            return false;
        }
        let present = self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        present
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Whether every edge of `self` is an edge of `other` on the same vertex set.
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vertex_count() == other.vertex_count()
            && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Renumbers vertices so that `new_label[old] = position`.
    pub fn relabel(&self, new_label: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.vertex_count());
        for (u, v) in self.edges() {
            let (a, b) = (new_label[u], new_label[v]);
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        g
    }

    /// Relabels so that vertex degrees are nonincreasing, ties kept in
    /// original order.
    pub fn sorted_by_degree(&self) -> SimpleGraph {
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut new_label = vec![0; order.len()];
        for (pos, &old) in order.iter().enumerate() {
            new_label[old] = pos;
        }
        self.relabel(&new_label)
    }
}

/// Center plus two disjoint adjacent pairs among its neighbours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BowtieWitness {
    pub center: usize,
    pub wing1: (usize, usize),
    pub wing2: (usize, usize),
}

impl BowtieWitness {
    pub fn vertices(&self) -> [usize; 5] {
        [
            self.center,
            self.wing1.0,
            self.wing1.1,
            self.wing2.0,
            self.wing2.1,
        ]
    }

    /// The six edges of the embedded K5-C4.
    pub fn edges(&self) -> [(usize, usize); 6] {
        let c = self.center;
        let (a, b) = self.wing1;
        let (x, y) = self.wing2;
        [(c, a), (c, b), (c, x), (c, y), (a, b), (x, y)]
    }

    /// Checks distinctness and that all six edges exist in `g`.
    pub fn is_valid_in(&self, g: &SimpleGraph) -> bool {
        let vs = self.vertices();
        let distinct = (0..5).all(|i| (i + 1..5).all(|j| vs[i] != vs[j]));
        distinct && self.edges().iter().all(|&(u, v)| g.has_edge(u, v))
    }
}

/// Sorted degree multiset of `g`. Fails on isolated vertices.
pub fn degree_sequence(g: &SimpleGraph) -> Result<DegreeSequence> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) == 0) {
        return Err(Error::ZeroDegreeVertex(v));
    }
    let degrees = (0..g.vertex_count()).map(|v| g.degree(v) as u32).collect();
    DegreeSequence::new(degrees)
}

/// The lexicographically least bowtie witness in `g`, if any.
pub fn contains_bowtie(g: &SimpleGraph) -> Option<BowtieWitness> {
    for center in 0..g.vertex_count() {
        if g.degree(center) < 4 {
            continue;
        }
        let nb: Vec<usize> = g.neighbors(center).collect();
        let pairs: Vec<(usize, usize)> = nb
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| nb[i + 1..].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| g.has_edge(a, b))
            .collect();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if let Some(&(c, d)) = pairs[i + 1..]
                .iter()
                .find(|&&(c, d)| c != a && c != b && d != a && d != b)
            {
                return Some(BowtieWitness {
                    center,
                    wing1: (a, b),
                    wing2: (c, d),
                });
            }
        }
    }
    None
}

/// Havel-Hakimi in lay-off form: repeatedly remove the vertex of smallest
/// remaining degree and join it to the vertices of largest remaining degree.
/// Vertex `i` of the result has degree `d_(i+1)`.
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<SimpleGraph> {
    if !is_graphic(seq) {
        return Err(Error::NotGraphic(seq.clone()));
    }
    let n = seq.len();
    let mut rem: Vec<u32> = seq.terms().to_vec();
    let mut g = SimpleGraph::new(n);
    loop {
        let mut live: Vec<usize> = (0..n).filter(|&v| rem[v] > 0).collect();
        // stable: ties stay in index order
        live.sort_by_key(|&v| std::cmp::Reverse(rem[v]));
        let Some(v) = live.pop() else { break };
        let k = rem[v] as usize;
        if k > live.len() {
            return Err(Error::NotGraphic(seq.clone()));
        }
        for &w in &live[..k] {
            g.add_edge(v, w)?;
            rem[w] -= 1;
        }
        rem[v] = 0;
    }
    Ok(g)
}

#[derive(Debug, Clone)]
struct Frame {
    vertex: usize,
    need: u32,
    candidates: Vec<usize>,
    combo: Vec<usize>,
    started: bool,
    applied: bool,
}

impl Frame {
    fn new(vertex: usize, rem: &[u32]) -> Self {
        let candidates = (vertex + 1..rem.len()).filter(|&w| rem[w] > 0).collect();
        Frame {
            vertex,
            need: rem[vertex],
            candidates,
            combo: Vec::new(),
            started: false,
            applied: false,
        }
    }

    /// Moves to the next `need`-subset of candidates in lexicographic order.
    fn advance(&mut self) -> bool {
        let k = self.need as usize;
        let len = self.candidates.len();
        if !self.started {
            self.started = true;
            if k > len {
                return false;
            }
            self.combo = (0..k).collect();
            return true;
        }
        let Some(j) = (0..k).rev().find(|&j| self.combo[j] < len - k + j) else {
            return false;
        };
        self.combo[j] += 1;
        for t in j + 1..k {
            self.combo[t] = self.combo[t - 1] + 1;
        }
        true
    }
}

/// Every labeled simple graph in which vertex `i` has degree `d_(i+1)`,
/// each exactly once. Vertices are processed in order; each vertex picks its
/// later neighbours as a lexicographically ordered subset. Branches whose
/// residual degrees are not graphic are pruned.
#[derive(Debug, Clone)]
pub struct Realizations {
    n: usize,
    rem: Vec<u32>,
    adj: Vec<u16>,
    stack: Vec<Frame>,
    budget: usize,
    emitted: usize,
}

impl Realizations {
    fn apply(&mut self, idx: usize) {
        let frame = &self.stack[idx];
        let v = frame.vertex;
        for &c in &frame.combo {
            let w = frame.candidates[c];
            self.adj[v] |= 1 << w;
            self.adj[w] |= 1 << v;
            self.rem[w] -= 1;
        }
        self.rem[v] = 0;
        self.stack[idx].applied = true;
    }

    fn undo(&mut self, idx: usize) {
        let frame = &self.stack[idx];
        if !frame.applied {
            return;
        }
        let v = frame.vertex;
        for &c in &frame.combo {
            let w = frame.candidates[c];
            self.adj[v] &= !(1 << w);
            self.adj[w] &= !(1 << v);
            self.rem[w] += 1;
        }
        self.rem[v] = frame.need;
        self.stack[idx].applied = false;
    }

    fn snapshot(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u] & (1 << v) != 0 {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }
}

impl Iterator for Realizations {
    type Item = SimpleGraph;

    fn next(&mut self) -> Option<SimpleGraph> {
        if self.budget != 0 && self.emitted >= self.budget {
            return None;
        }
        loop {
            let top = self.stack.len().checked_sub(1)?;
            self.undo(top);
            if !self.stack[top].advance() {
                self.stack.pop();
                continue;
            }
            self.apply(top);
            let v = self.stack[top].vertex;
            if !terms_are_graphic(&self.rem[v + 1..]) {
                continue;
            }
            if v + 1 == self.n {
                self.emitted += 1;
                return Some(self.snapshot());
            }
            let frame = Frame::new(v + 1, &self.rem);
            self.stack.push(frame);
        }
    }
}

/// Streams every labeled realization of `seq` (vertex `i` gets degree
/// `d_(i+1)`). `budget` caps the number emitted; 0 means unlimited.
pub fn enumerate_realizations(seq: &DegreeSequence, budget: usize) -> Result<Realizations> {
    if seq.len() > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n: seq.len(),
            limit: ENUMERATION_LIMIT,
        });
    }
    if !is_graphic(seq) {
        return Err(Error::NotGraphic(seq.clone()));
    }
    let rem = seq.terms().to_vec();
    let n = rem.len();
    let stack = if n == 0 {
        Vec::new()
    } else {
        vec![Frame::new(0, &rem)]
    };
    Ok(Realizations {
        n,
        rem,
        adj: vec![0; n],
        stack,
        budget,
        emitted: 0,
    })
}

/// First realization (in enumeration order) containing a bowtie, with its
/// witness.
pub fn oracle_first_bowtie_realization(
    seq: &DegreeSequence,
) -> Result<Option<(SimpleGraph, BowtieWitness)>> {
    Ok(enumerate_realizations(seq, 0)?.find_map(|g| contains_bowtie(&g).map(|w| (g, w))))
}

/// Brute-force: does any realization of `seq` contain K5-C4?
pub fn oracle_has_bowtie_realization(seq: &DegreeSequence) -> Result<bool> {
    Ok(oracle_first_bowtie_realization(seq)?.is_some())
}

/// One `u v` line per edge, 0-based, lexicographic order.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses `u v` lines. Blank lines and lines starting with `#` are
/// skipped. The vertex count is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
        match parsed.as_deref() {
            Some(&[u, v]) => edges.push((u, v)),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected two vertex ids, got {line:?}",
                    lineno + 1
                )))
            }
        }
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    SimpleGraph::from_edges(n, &edges)
}

/// Undirected DOT with plain integer node ids.
pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
