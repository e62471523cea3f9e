//! Brute-force helpers shared by the integration suites. Nothing here calls
//! the lay-off, the enumerator or the bowtie scanner under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use potentially_bowtie::{DegreeSequence, SimpleGraph};
use rand::Rng;

/// All unordered pairs of `0..n`, in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled graph on `n` vertices, as edge masks over [`all_pairs`].
pub fn for_each_labeled_graph(n: usize, mut f: impl FnMut(&[(usize, usize)], u64)) {
    let pairs = all_pairs(n);
    for mask in 0u64..(1u64 << pairs.len()) {
        f(&pairs, mask);
    }
}

pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> SimpleGraph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    SimpleGraph::from_edges(n, &edges).unwrap()
}

pub fn degrees_of_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Vec<u32> {
    let mut deg = vec![0u32; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    deg
}

/// Sorted degree vectors (zeros allowed) of all graphs on `n` vertices.
pub fn brute_force_degree_sequences(n: usize) -> BTreeSet<Vec<u32>> {
    let mut out = BTreeSet::new();
    for_each_labeled_graph(n, |pairs, mask| {
        let mut d = degrees_of_mask(n, pairs, mask);
        d.sort_unstable_by(|a, b| b.cmp(a));
        out.insert(d);
    });
    out
}

/// Every nonincreasing sequence of `n` terms in `1..=max`.
pub fn nonincreasing_sequences(n: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in (1..=cap).rev() {
            cur.push(d);
            rec(n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if max >= 1 {
        rec(n, max, &mut Vec::new(), &mut out);
    }
    out
}

/// K5-C4 embedding by exhaustive search over 5-subsets, center choice and
/// the three ways to split the other four into two pairs.
pub fn brute_force_has_bowtie(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let verts: Vec<usize> = (0..n).collect();
    for_each_subset(&verts, 5, |s| {
        (0..5).any(|ci| {
            let c = s[ci];
            let o: Vec<usize> = s.iter().copied().filter(|&v| v != c).collect();
            let splits = [
                ((o[0], o[1]), (o[2], o[3])),
                ((o[0], o[2]), (o[1], o[3])),
                ((o[0], o[3]), (o[1], o[2])),
            ];
            o.iter().all(|&v| g.has_edge(c, v))
                && splits
                    .iter()
                    .any(|&((a, b), (x, y))| g.has_edge(a, b) && g.has_edge(x, y))
        })
    })
}

/// Calls `f` on each `k`-subset; stops at the first `true`.
pub fn for_each_subset(items: &[usize], k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..items.len() {
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, k, 0, &mut Vec::new(), &mut f)
}

/// Degree sequence of a random graph G(n, p) with isolated vertices
/// removed, if any vertex remains.
pub fn random_graphic_sequence(rng: &mut impl Rng, n: usize, p: f64) -> Option<DegreeSequence> {
    let mut deg = vec![0u32; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
    }
    deg.retain(|&d| d > 0);
    DegreeSequence::new(deg).ok()
}

/// Random nonincreasing positive sequence of length `n` with terms at most `max`.
pub fn random_sequence(rng: &mut impl Rng, n: usize, max: u32) -> DegreeSequence {
    let terms = (0..n).map(|_| rng.gen_range(1..=max)).collect();
    DegreeSequence::new(terms).unwrap()
}
