//! Explicit realizations containing K5-C4 for every accepted sequence.
//!
//! Small sequences (at most [`ORACLE_THRESHOLD`] terms) take the first
//! bowtie realization found by exhaustive search. Larger ones are laid off
//! while the residual stays accepted, and the removed vertices are attached
//! back afterwards. When the residual is rejected, the sequence belongs to
//! one of the [`FamilyPattern`]s, each built as a bowtie core plus a
//! completion made of ladders, paths, cycles and matchings.

use std::fmt;

use crate::characterize::check_potentially;
use crate::error::{Error, Result};
use crate::graphkit::{
    contains_bowtie, degree_sequence, oracle_first_bowtie_realization, BowtieWitness, SimpleGraph,
};
use crate::seqcore::{lay_off, DegreeSequence, LayoffTrace};

/// Sequences up to this length are realized by exhaustive search.
pub const ORACLE_THRESHOLD: usize = 10;

/// Sequence families whose residual is rejected although they are accepted.
///
/// Run counts are named `a` (threes), `b` (twos) and `c` (ones).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyPattern {
    /// `(4^3, 3^(n-3))`, `n` odd.
    ThreeFoursThrees { n: usize },
    /// `(4^2, 3^(n-2))`, `n` even.
    TwoFoursThrees { n: usize },
    /// `(4, 3^(n-1))`, `n` odd.
    OneFourThrees { n: usize },
    /// `(4^2, 3^a, 2^b)`, `a` even and positive, `b >= 1`.
    TwoFoursThreesTwos { a: usize, b: usize },
    /// `(4, 3^a, 2^b)`, `a` even and positive, `b >= 1`.
    OneFourThreesTwos { a: usize, b: usize },
    /// `(4, 3^a, 2^b, 1^c)`, all runs nonempty, `a + c` even.
    OneFourThreesTwosOnes { a: usize, b: usize, c: usize },
    /// `(4, 3^a, 1^c)`, `a >= 4`, `a + c` even.
    OneFourThreesOnes { a: usize, c: usize },
    /// `(n-2, n-3, 2^(n-3), 1)`, `n >= 6`.
    NearStarTail { n: usize },
    /// `(4^2, 2^(n-2))`, `n >= 7`.
    TwoFoursTwos { n: usize },
    /// `(4, 2^(n-1))`, `n = 5` or `n >= 8`.
    OneFourTwos { n: usize },
    /// `(4, 2^a, 1^c)`, `a >= 4`, `c` even and positive.
    OneFourTwosOnes { a: usize, c: usize },
}

impl fmt::Display for FamilyPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyPattern::*;
        match *self {
            ThreeFoursThrees { n } => write!(f, "(4^3,3^(n-3)) n={n}"),
            TwoFoursThrees { n } => write!(f, "(4^2,3^(n-2)) n={n}"),
            OneFourThrees { n } => write!(f, "(4,3^(n-1)) n={n}"),
            TwoFoursThreesTwos { a, b } => write!(f, "(4^2,3^a,2^b) a={a} b={b}"),
            OneFourThreesTwos { a, b } => write!(f, "(4,3^a,2^b) a={a} b={b}"),
            OneFourThreesTwosOnes { a, b, c } => write!(f, "(4,3^a,2^b,1^c) a={a} b={b} c={c}"),
            OneFourThreesOnes { a, c } => write!(f, "(4,3^a,1^c) a={a} c={c}"),
            NearStarTail { n } => write!(f, "(n-2,n-3,2^(n-3),1) n={n}"),
            TwoFoursTwos { n } => write!(f, "(4^2,2^(n-2)) n={n}"),
            OneFourTwos { n } => write!(f, "(4,2^(n-1)) n={n}"),
            OneFourTwosOnes { a, c } => write!(f, "(4,2^a,1^c) a={a} c={c}"),
        }
    }
}

fn bad(p: &FamilyPattern) -> Error {
    Error::BadParams(p.to_string())
}

impl FamilyPattern {
    /// Run-length description `[(4, x), (3, a), (2, b), (1, c)]` or the
    /// near-star shape.
    fn runs(&self) -> Vec<(u32, usize)> {
        use FamilyPattern::*;
        match *self {
            ThreeFoursThrees { n } => vec![(4, 3), (3, n.saturating_sub(3))],
            TwoFoursThrees { n } => vec![(4, 2), (3, n.saturating_sub(2))],
            OneFourThrees { n } => vec![(4, 1), (3, n.saturating_sub(1))],
            TwoFoursThreesTwos { a, b } => vec![(4, 2), (3, a), (2, b)],
            OneFourThreesTwos { a, b } => vec![(4, 1), (3, a), (2, b)],
            OneFourThreesTwosOnes { a, b, c } => vec![(4, 1), (3, a), (2, b), (1, c)],
            OneFourThreesOnes { a, c } => vec![(4, 1), (3, a), (1, c)],
            NearStarTail { n } => vec![
                (n.saturating_sub(2) as u32, 1),
                (n.saturating_sub(3) as u32, 1),
                (2, n.saturating_sub(3)),
                (1, 1),
            ],
            TwoFoursTwos { n } => vec![(4, 2), (2, n.saturating_sub(2))],
            OneFourTwos { n } => vec![(4, 1), (2, n.saturating_sub(1))],
            OneFourTwosOnes { a, c } => vec![(4, 1), (2, a), (1, c)],
        }
    }

    fn shape_ok(&self) -> bool {
        use FamilyPattern::*;
        let even = |x: usize| x.is_multiple_of(2);
        match *self {
            ThreeFoursThrees { n } => n >= 5 && !even(n),
            TwoFoursThrees { n } => n >= 6 && even(n),
            OneFourThrees { n } => n >= 5 && !even(n),
            TwoFoursThreesTwos { a, b } => a >= 2 && even(a) && b >= 1,
            OneFourThreesTwos { a, b } => a >= 2 && even(a) && b >= 1 && a + b >= 4,
            OneFourThreesTwosOnes { a, b, c } => {
                a >= 1 && b >= 1 && c >= 1 && a + b >= 4 && even(a + c)
            }
            OneFourThreesOnes { a, c } => a >= 4 && c >= 1 && even(a + c),
            NearStarTail { n } => n >= 6,
            TwoFoursTwos { n } => n >= 7,
            OneFourTwos { n } => n == 5 || n >= 8,
            OneFourTwosOnes { a, c } => a >= 4 && c >= 2 && even(c),
        }
    }

    /// The degree sequence this pattern describes, if its parameters are in
    /// range and the sequence is accepted.
    pub fn sequence(&self) -> Result<DegreeSequence> {
        if !self.shape_ok() {
            return Err(bad(self));
        }
        let seq = DegreeSequence::from_runs(&self.runs()).map_err(|_| bad(self))?;
        if !check_potentially(&seq).potentially {
            return Err(bad(self));
        }
        Ok(seq)
    }

    /// Recognizes the family `seq` belongs to, if any.
    pub fn classify(seq: &DegreeSequence) -> Option<FamilyPattern> {
        use FamilyPattern::*;
        let n = seq.len();
        let t = seq.terms();
        if n >= 6 {
            let tail = NearStarTail { n };
            if tail.shape_ok() && tail.runs_match(seq) {
                return Some(tail);
            }
        }
        if seq.max_degree() != 4 {
            return None;
        }
        let (x, a, b, c) = (
            seq.count_of(4),
            seq.count_of(3),
            seq.count_of(2),
            seq.count_of(1),
        );
        debug_assert_eq!(x + a + b + c, t.len());
        let candidate = match (x, a > 0, b > 0, c > 0) {
            (1, false, true, false) => OneFourTwos { n },
            (1, false, true, true) => OneFourTwosOnes { a: b, c },
            (1, true, false, false) => OneFourThrees { n },
            (1, true, true, false) => OneFourThreesTwos { a, b },
            (1, true, false, true) => OneFourThreesOnes { a, c },
            (1, true, true, true) => OneFourThreesTwosOnes { a, b, c },
            (2, false, true, false) => TwoFoursTwos { n },
            (2, true, false, false) => TwoFoursThrees { n },
            (2, true, true, false) => TwoFoursThreesTwos { a, b },
            (3, true, false, false) => ThreeFoursThrees { n },
            _ => return None,
        };
        candidate.shape_ok().then_some(candidate)
    }

    fn runs_match(&self, seq: &DegreeSequence) -> bool {
        DegreeSequence::from_runs(&self.runs()).is_ok_and(|s| &s == seq)
    }
}

/// Incremental graph construction with fallible edge insertion.
struct Builder {
    g: SimpleGraph,
}

impl Builder {
    fn new() -> Self {
        Builder {
            g: SimpleGraph::new(0),
        }
    }

    fn vertex(&mut self) -> usize {
        self.g.add_vertex()
    }

    fn vertices(&mut self, count: usize) -> Vec<usize> {
        (0..count).map(|_| self.vertex()).collect()
    }

    fn edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.g.add_edge(u, v)
    }

    /// Center and wings `[w0, w1, w2, w3]`, with `w0w1` and `w2w3` edges.
    fn core(&mut self) -> Result<(usize, [usize; 4])> {
        let c = self.vertex();
        let w = [self.vertex(), self.vertex(), self.vertex(), self.vertex()];
        for &x in &w {
            self.edge(c, x)?;
        }
        self.edge(w[0], w[1])?;
        self.edge(w[2], w[3])?;
        Ok((c, w))
    }

    fn path(&mut self, vs: &[usize]) -> Result<()> {
        vs.windows(2).try_for_each(|p| self.edge(p[0], p[1]))
    }

    /// Pairs `(x_j, y_j)` with rungs `x_j y_j` and rails between consecutive
    /// pairs. Returns the end pairs. Inner pairs get degree 3, end pairs 2
    /// (or 1 each when there is a single pair).
    fn ladder(&mut self, vs: &[usize]) -> Result<((usize, usize), (usize, usize))> {
        debug_assert!(!vs.is_empty() && vs.len().is_multiple_of(2));
        let pairs: Vec<(usize, usize)> = vs.chunks(2).map(|p| (p[0], p[1])).collect();
        for &(x, y) in &pairs {
            self.edge(x, y)?;
        }
        for w in pairs.windows(2) {
            self.edge(w[0].0, w[1].0)?;
            self.edge(w[0].1, w[1].1)?;
        }
        Ok((pairs[0], pairs[pairs.len() - 1]))
    }

    /// Gives each of four ports one more edge and each vertex of `cubic`
    /// degree 3. `cubic` must have even length. Returns an edge of the
    /// completion incident to `ports[0]`.
    fn attach_even(&mut self, ports: [usize; 4], cubic: &[usize]) -> Result<(usize, usize)> {
        if cubic.is_empty() {
            self.edge(ports[0], ports[2])?;
            self.edge(ports[1], ports[3])?;
            return Ok((ports[0], ports[2]));
        }
        let ((x0, y0), (xl, yl)) = self.ladder(cubic)?;
        self.edge(ports[0], x0)?;
        self.edge(ports[1], y0)?;
        self.edge(ports[2], xl)?;
        self.edge(ports[3], yl)?;
        Ok((ports[0], x0))
    }

    /// Same for three ports and `cubic` of odd length.
    fn attach_odd(&mut self, ports: [usize; 3], cubic: &[usize]) -> Result<(usize, usize)> {
        let (&z, rest) = cubic.split_first().expect("odd cubic set is nonempty");
        self.edge(z, ports[0])?;
        if rest.is_empty() {
            self.edge(z, ports[1])?;
            self.edge(z, ports[2])?;
        } else {
            let ((x0, y0), (xl, yl)) = self.ladder(rest)?;
            self.edge(z, x0)?;
            self.edge(z, y0)?;
            self.edge(ports[1], xl)?;
            self.edge(ports[2], yl)?;
        }
        Ok((ports[0], z))
    }

    /// Replaces edge `uv` by the path `u, chain..., v`.
    fn subdivide(&mut self, (u, v): (usize, usize), chain: &[usize]) -> Result<()> {
        if chain.is_empty() {
            return Ok(());
        }
        if !self.g.remove_edge(u, v) {
            return Err(Error::Graph(format!(
                "cannot subdivide missing edge {u}-{v}"
            )));
        }
        let mut walk = Vec::with_capacity(chain.len() + 2);
        walk.push(u);
        walk.extend_from_slice(chain);
        walk.push(v);
        self.path(&walk)
    }

    fn matching(&mut self, leaves: &[usize]) -> Result<()> {
        if !leaves.len().is_multiple_of(2) {
            return Err(Error::Graph("odd number of leaves left".into()));
        }
        leaves.chunks(2).try_for_each(|p| self.edge(p[0], p[1]))
    }
}

fn take_leaf(leaves: &mut Vec<usize>) -> Result<usize> {
    leaves
        .pop()
        .ok_or_else(|| Error::Graph("family needs a leaf it does not have".into()))
}

/// `(4, 3^a, 2^b, 1^c)`.
fn build_single_four(a: usize, b: usize, c: usize) -> Result<SimpleGraph> {
    let mut bld = Builder::new();
    let (_, w) = bld.core()?;
    let wing_threes = a.min(4);
    let twos_needed = 4 - wing_threes;
    if b < twos_needed {
        return Err(Error::Graph(
            "not enough vertices of degree >= 2 for the wings".into(),
        ));
    }
    let mut cubic = bld.vertices(a - wing_threes);
    let mut chain = bld.vertices(b - twos_needed);
    let mut leaves = bld.vertices(c);

    let anchor = match wing_threes {
        4 => {
            if cubic.len() % 2 == 1 {
                // a degree-3 vertex with a pendant acts as a degree-2 vertex
                let t = cubic.pop().unwrap();
                let leaf = take_leaf(&mut leaves)?;
                bld.edge(t, leaf)?;
                chain.push(t);
            }
            Some(bld.attach_even(w, &cubic)?)
        }
        3 => {
            // wings: w0, w1 | w2 are threes, w3 a two
            bld.edge(w[0], w[2])?;
            let leaf = take_leaf(&mut leaves)?;
            bld.edge(w[1], leaf)?;
            Some((w[0], w[2]))
        }
        2 => {
            // threes at w0 and w2, one per wing
            bld.edge(w[0], w[2])?;
            Some((w[0], w[2]))
        }
        1 => {
            let leaf = take_leaf(&mut leaves)?;
            bld.edge(w[0], leaf)?;
            Some((w[0], leaf))
        }
        _ => {
            if leaves.len() >= 2 {
                let (l1, l2) = (leaves.pop().unwrap(), leaves.pop().unwrap());
                bld.edge(l1, l2)?;
                Some((l1, l2))
            } else {
                None
            }
        }
    };
    match anchor {
        Some(e) => bld.subdivide(e, &chain)?,
        None if chain.is_empty() => {}
        None if chain.len() >= 3 => {
            bld.path(&chain)?;
            bld.edge(chain[chain.len() - 1], chain[0])?;
        }
        None => return Err(Error::Graph("two or fewer spare degree-2 vertices".into())),
    }
    bld.matching(&leaves)?;
    Ok(bld.g)
}

/// `(4^2, 3^a, 2^b)`.
fn build_double_four(a: usize, b: usize) -> Result<SimpleGraph> {
    let mut bld = Builder::new();
    let (_, w) = bld.core()?;
    // w0 carries the second 4
    let p = w[0];
    match a {
        0 => {
            // w1..w3 are twos; w0 closes a cycle through the spare twos
            let chain = bld.vertices(b.checked_sub(3).filter(|&k| k >= 2).ok_or_else(|| {
                Error::Graph("too few degree-2 vertices to close a cycle".into())
            })?);
            let mut walk = vec![p];
            walk.extend_from_slice(&chain);
            walk.push(p);
            bld.path(&walk)?;
        }
        2 => {
            // w1 a two, w2 and w3 threes
            bld.edge(p, w[2])?;
            bld.edge(p, w[3])?;
            let chain = bld.vertices(
                b.checked_sub(1)
                    .ok_or_else(|| Error::Graph("family needs a degree-2 vertex".into()))?,
            );
            bld.subdivide((p, w[2]), &chain)?;
        }
        _ => {
            // w1, w2, w3 threes
            bld.edge(p, w[2])?;
            let cubic = bld.vertices(a - 3);
            bld.attach_odd([p, w[1], w[3]], &cubic)?;
            let chain = bld.vertices(b);
            bld.subdivide((p, w[2]), &chain)?;
        }
    }
    Ok(bld.g)
}

/// `(4^3, 3^a)`, `a >= 2` even.
fn build_triple_four(a: usize) -> Result<SimpleGraph> {
    let mut bld = Builder::new();
    let (_, w) = bld.core()?;
    // fours at w0 and w2, threes at w1 and w3
    bld.edge(w[0], w[2])?;
    let cubic = bld.vertices(a - 2);
    bld.attach_even([w[0], w[2], w[3], w[1]], &cubic)?;
    Ok(bld.g)
}

/// `(n-2, n-3, 2^(n-3), 1)`.
fn build_near_star_tail(n: usize) -> Result<SimpleGraph> {
    let mut bld = Builder::new();
    let hub = bld.vertex();
    let second = bld.vertex();
    let twos = bld.vertices(n - 3);
    let leaf = bld.vertex();
    bld.edge(hub, second)?;
    for &t in &twos {
        bld.edge(hub, t)?;
    }
    // triangles hub-second-twos[0] and hub-twos[1]-twos[2]
    bld.edge(second, twos[0])?;
    bld.edge(twos[1], twos[2])?;
    for &t in &twos[3..] {
        bld.edge(second, t)?;
    }
    bld.edge(second, leaf)?;
    Ok(bld.g)
}

/// Builds a realization of the family's sequence containing a bowtie.
/// Vertices are labeled in nonincreasing degree order.
pub fn construct_family(p: &FamilyPattern) -> Result<SimpleGraph> {
    use FamilyPattern::*;
    let seq = p.sequence()?;
    let g = match *p {
        ThreeFoursThrees { n } => build_triple_four(n - 3)?,
        TwoFoursThrees { n } => build_double_four(n - 2, 0)?,
        OneFourThrees { n } => build_single_four(n - 1, 0, 0)?,
        TwoFoursThreesTwos { a, b } => build_double_four(a, b)?,
        OneFourThreesTwos { a, b } => build_single_four(a, b, 0)?,
        OneFourThreesTwosOnes { a, b, c } => build_single_four(a, b, c)?,
        OneFourThreesOnes { a, c } => build_single_four(a, 0, c)?,
        NearStarTail { n } => build_near_star_tail(n)?,
        TwoFoursTwos { n } => build_double_four(0, n - 2)?,
        OneFourTwos { n } => build_single_four(0, n - 1, 0)?,
        OneFourTwosOnes { a, c } => build_single_four(0, a, c)?,
    }
    .sorted_by_degree();
    ensure_bowtie_realization(&g, &seq)?;
    Ok(g)
}

fn ensure_bowtie_realization(g: &SimpleGraph, seq: &DegreeSequence) -> Result<()> {
    let ok = degree_sequence(g).is_ok_and(|d| &d == seq) && contains_bowtie(g).is_some();
    if ok {
        Ok(())
    } else {
        Err(Error::InternalExhaustion(seq.clone()))
    }
}

/// Adds a vertex joined to one existing vertex per decremented degree,
/// choosing the lowest-index unused vertex of each required degree. The
/// result realizes the trace's parent sequence.
pub fn reattach(g: &SimpleGraph, trace: &LayoffTrace) -> Result<SimpleGraph> {
    let matches_child = if trace.child.is_empty() {
        g.vertex_count() == 0
    } else {
        degree_sequence(g).is_ok_and(|d| d == trace.child)
    };
    if !matches_child {
        return Err(Error::TraceMismatch(format!(
            "graph on {} vertices does not realize {}",
            g.vertex_count(),
            trace.child
        )));
    }
    let degrees: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut used = vec![false; degrees.len()];
    let mut out = g.clone();
    let fresh = out.add_vertex();
    for required in trace.decremented_degrees() {
        let target = if required == 0 {
            // a former degree-1 vertex that the lay-off dropped
            out.add_vertex()
        } else {
            let v = (0..degrees.len())
                .find(|&v| !used[v] && degrees[v] == required as usize)
                .ok_or_else(|| {
                    Error::TraceMismatch(format!("no unused vertex of degree {required}"))
                })?;
            used[v] = true;
            v
        };
        out.add_edge(fresh, target)?;
    }
    Ok(out)
}

/// Where the innermost graph of a realization came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealizationBase {
    /// First bowtie realization found by exhaustive search.
    Search,
    Family(FamilyPattern),
}

/// A verified realization together with how it was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub graph: SimpleGraph,
    pub witness: BowtieWitness,
    /// Lay-off steps undone by [`reattach`].
    pub layoffs: usize,
    pub base: RealizationBase,
}

/// Like [`realize_with_bowtie`], also reporting the construction path.
pub fn realize_detailed(seq: &DegreeSequence) -> Result<Realization> {
    if !check_potentially(seq).potentially {
        return Err(Error::NotPotentially(seq.clone()));
    }
    let mut traces: Vec<LayoffTrace> = Vec::new();
    let mut current = seq.clone();
    let (mut g, base) = loop {
        if current.len() <= ORACLE_THRESHOLD {
            let g = oracle_first_bowtie_realization(&current)?
                .map(|(g, _)| g)
                .ok_or_else(|| Error::InternalExhaustion(current.clone()))?;
            break (g, RealizationBase::Search);
        }
        let trace = lay_off(&current)?;
        if check_potentially(&trace.child).potentially {
            current = trace.child.clone();
            traces.push(trace);
            continue;
        }
        let family = FamilyPattern::classify(&current)
            .ok_or_else(|| Error::InternalExhaustion(current.clone()))?;
        break (construct_family(&family)?, RealizationBase::Family(family));
    };
    for trace in traces.iter().rev() {
        g = reattach(&g, trace)?;
    }
    let graph = g.sorted_by_degree();
    ensure_bowtie_realization(&graph, seq)?;
    let witness = contains_bowtie(&graph).expect("checked above");
    Ok(Realization {
        graph,
        witness,
        layoffs: traces.len(),
        base,
    })
}

/// A realization of an accepted sequence that contains K5-C4, labeled in
/// nonincreasing degree order.
pub fn realize_with_bowtie(seq: &DegreeSequence) -> Result<SimpleGraph> {
    realize_detailed(seq).map(|r| r.graph)
}
