//! Chromatic polynomials by deletion–contraction, and a brute-force
//! proper-coloring counter to check them against.
//!
//! The engine works on adjacency bitmasks and applies the reduction
//! `P(G) = P(G - uv) - P(G / uv)` on the edge whose endpoints have the
//! largest degree sum. Edgeless graphs, complete graphs and disjoint unions
//! are closed out directly. Graphs with at most [`MEMO_MAX_VERTICES`]
//! vertices are cached under a canonical code when memoization is on.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::Poly;

pub const DEFAULT_VERTEX_LIMIT: usize = 14;
/// Hard ceiling of the bitmask representation.
pub const MAX_VERTICES: usize = 32;
pub const MEMO_MAX_VERTICES: usize = 9;
/// Class-respecting relabelings tried per canonical code before giving up on caching.
const MAX_CANON_PERMUTATIONS: usize = 5040;

pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChromaticEngine {
    pub vertex_limit: usize,
    pub memoize: bool,
}

impl Default for ChromaticEngine {
    fn default() -> Self {
        ChromaticEngine {
            vertex_limit: DEFAULT_VERTEX_LIMIT,
            memoize: true,
        }
    }
}

/// Chromatic polynomial with the default engine settings.
pub fn chromatic_poly(g: &Graph) -> Result<Poly> {
    ChromaticEngine::default().chromatic_poly(g)
}

pub fn eval_poly(p: &Poly, lambda: u64) -> BigInt {
    p.eval_u64(lambda)
}

impl ChromaticEngine {
    pub fn with_vertex_limit(mut self, limit: usize) -> Self {
        self.vertex_limit = limit;
        self
    }

    pub fn with_memo(mut self, memoize: bool) -> Self {
        self.memoize = memoize;
        self
    }

    pub fn chromatic_poly(&self, g: &Graph) -> Result<Poly> {
        let n = g.vertex_count();
        let limit = self.vertex_limit.min(MAX_VERTICES);
        if n > limit {
            return Err(Error::VertexLimit { vertices: n, limit });
        }
        let mut adj = vec![0u32; n];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut run = Run {
            memo: HashMap::new(),
            memoize: self.memoize,
        };
        Ok(run.poly(&adj))
    }

    /// `P(G, lambda)`.
    pub fn count(&self, g: &Graph, lambda: u64) -> Result<BigInt> {
        Ok(self.chromatic_poly(g)?.eval_u64(lambda))
    }
}

struct Run {
    memo: HashMap<(usize, u64), Poly>,
    memoize: bool,
}

impl Run {
    fn poly(&mut self, adj: &[u32]) -> Poly {
        let n = adj.len();
        let degree_sum: u32 = adj.iter().map(|a| a.count_ones()).sum();
        if degree_sum == 0 {
            return Poly::monomial(n);
        }
        if degree_sum as usize == n * (n - 1) {
            return Poly::falling(n);
        }

        let comps = components(adj);
        if comps.len() > 1 {
            return comps.iter().fold(Poly::monomial(0), |acc, comp| {
                let sub = induced(adj, comp);
                &acc * &self.poly(&sub)
            });
        }

        let key = if self.memoize && n <= MEMO_MAX_VERTICES {
            canonical_code(adj).map(|code| (n, code))
        } else {
            None
        };
        if let Some(key) = key {
            if let Some(hit) = self.memo.get(&key) {
                return hit.clone();
            }
        }

        let (u, v) = pick_edge(adj);
        let deleted = delete(adj, u, v);
        let contracted = contract(adj, u, v);
        let result = &self.poly(&deleted) - &self.poly(&contracted);

        if let Some(key) = key {
            self.memo.insert(key, result.clone());
        }
        result
    }
}

fn pick_edge(adj: &[u32]) -> (usize, usize) {
    let mut best = None;
    let mut best_score = 0;
    for u in 0..adj.len() {
        let mut rest = adj[u] & !((2u32 << u) - 1);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let score = adj[u].count_ones() + adj[v].count_ones();
            if best.is_none() || score > best_score {
                best = Some((u, v));
                best_score = score;
            }
        }
    }
    best.expect("graph has an edge")
}

fn delete(adj: &[u32], u: usize, v: usize) -> Vec<u32> {
    let mut out = adj.to_vec();
    out[u] &= !(1 << v);
    out[v] &= !(1 << u);
    out
}

/// Merges `v` into `u` (with `u < v`), dropping `v` and shifting higher ids down.
fn contract(adj: &[u32], u: usize, v: usize) -> Vec<u32> {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    let squeeze = |mask: u32| -> u32 {
        let mut m = mask;
        if m & (1 << v) != 0 {
            m = (m & !(1 << v)) | (1 << u);
        }
        let low = m & ((1u32 << v) - 1);
        let high = (m >> (v + 1)) << v;
        low | high
    };
    let mut out = Vec::with_capacity(adj.len() - 1);
    for (w, &mask) in adj.iter().enumerate() {
        if w == v {
            continue;
        }
        let merged = if w == u { mask | adj[v] } else { mask };
        let mut m = squeeze(merged);
        if w == u {
            m &= !(1 << u);
        }
        out.push(m);
    }
    out
}

fn components(adj: &[u32]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..n {
        if seen & (1 << start) != 0 {
            continue;
        }
        let mut comp = 0u32;
        let mut frontier = 1u32 << start;
        while frontier != 0 {
            comp |= frontier;
            let mut next = 0u32;
            let mut f = frontier;
            while f != 0 {
                let w = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[w];
            }
            frontier = next & !comp;
        }
        seen |= comp as u64;
        out.push((0..n).filter(|&w| comp & (1 << w) != 0).collect());
    }
    out
}

fn induced(adj: &[u32], vertices: &[usize]) -> Vec<u32> {
    vertices
        .iter()
        .map(|&w| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(_, &x)| adj[w] & (1 << x) != 0)
                .fold(0u32, |acc, (i, _)| acc | (1 << i))
        })
        .collect()
}

/// Colour refinement: vertices start coloured by degree and are split by the
/// multiset of neighbour colours until stable. Returns a colour per vertex;
/// colours are ranks, so they are invariant under relabeling.
fn refine(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|w| {
                let mut ns: Vec<usize> = (0..n)
                    .filter(|&x| adj[w] & (1 << x) != 0)
                    .map(|x| colors[x])
                    .collect();
                ns.sort_unstable();
                (colors[w], ns)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let before = colors
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        if distinct.len() == before {
            return next;
        }
        colors = next;
    }
}

/// Canonical code of a graph with at most [`MEMO_MAX_VERTICES`] vertices:
/// the least upper-triangle adjacency string over all relabelings that place
/// refinement classes in colour order. `None` when the classes are too large
/// to search.
fn canonical_code(adj: &[u32]) -> Option<u64> {
    let n = adj.len();
    debug_assert!(n <= MEMO_MAX_VERTICES);
    let colors = refine(adj);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&w| colors[w]);

    // Contiguous class blocks in `order`.
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || colors[order[i]] != colors[order[start]] {
            blocks.push((start, i));
            start = i;
        }
    }
    let mut count: usize = 1;
    for &(a, b) in &blocks {
        for k in 1..=(b - a) {
            count = count.saturating_mul(k);
        }
    }
    if count > MAX_CANON_PERMUTATIONS {
        return None;
    }

    let mut best = u64::MAX;
    permute_blocks(adj, &mut order, &blocks, 0, &mut best);
    Some(best)
}

fn permute_blocks(
    adj: &[u32],
    order: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    b: usize,
    best: &mut u64,
) {
    if b == blocks.len() {
        let code = encode(adj, order);
        if code < *best {
            *best = code;
        }
        return;
    }
    let (lo, hi) = blocks[b];
    heap_permute(adj, order, blocks, b, lo, hi - lo, best);
}

// Heap's algorithm over order[lo..lo + k], recursing into the next block at each leaf.
fn heap_permute(
    adj: &[u32],
    order: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    b: usize,
    lo: usize,
    k: usize,
    best: &mut u64,
) {
    if k <= 1 {
        permute_blocks(adj, order, blocks, b + 1, best);
        return;
    }
    for i in 0..k {
        heap_permute(adj, order, blocks, b, lo, k - 1, best);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        if i + 1 < k {
            order.swap(lo + j, lo + k - 1);
        }
    }
}

/// Upper-triangle adjacency bits of the graph relabeled so position `i` holds `order[i]`.
fn encode(adj: &[u32], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            code <<= 1;
            if adj[order[i]] & (1 << order[j]) != 0 {
                code |= 1;
            }
        }
    }
    code
}

/// Counts proper colorings with colors `1..=lambda` by backtracking.
///
/// Every color tried at every vertex counts toward `node_budget`.
pub fn count_colorings_bruteforce(g: &Graph, lambda: u64, node_budget: u64) -> Result<BigInt> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    if lambda == 0 {
        return Ok(BigInt::zero());
    }
    let neighbors: Vec<Vec<usize>> = (0..n)
        .map(|v| g.neighbors(v).into_iter().filter(|&w| w < v).collect())
        .collect();
    let mut search = ColoringSearch {
        neighbors: &neighbors,
        lambda,
        colors: vec![0; n],
        nodes: 0,
        budget: node_budget,
        count: 0,
    };
    search.go(0)?;
    Ok(BigInt::from(search.count))
}

struct ColoringSearch<'a> {
    /// Earlier-indexed neighbours only.
    neighbors: &'a [Vec<usize>],
    lambda: u64,
    colors: Vec<u64>,
    nodes: u64,
    budget: u64,
    count: u128,
}

impl ColoringSearch<'_> {
    fn go(&mut self, v: usize) -> Result<()> {
        if v == self.colors.len() {
            self.count += 1;
            return Ok(());
        }
        for c in 0..self.lambda {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    budget: self.budget,
                });
            }
            if self.neighbors[v].iter().any(|&w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            self.go(v + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_gn, delete_edge, disjoint_union, identify};

    fn to_adj(g: &Graph) -> Vec<u32> {
        let mut adj = vec![0u32; g.vertex_count()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    fn from_adj(adj: &[u32]) -> Graph {
        let n = adj.len();
        let edges = (0..n).flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| adj[u] & (1 << v) != 0)
                .map(move |v| (u, v))
        });
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn base_cases() {
        assert_eq!(chromatic_poly(&Graph::empty(3)).unwrap(), Poly::monomial(3));
        assert_eq!(
            chromatic_poly(&Graph::complete(3)).unwrap(),
            Poly::from_i64(&[0, 2, -3, 1])
        );
        assert_eq!(chromatic_poly(&Graph::empty(0)).unwrap(), Poly::monomial(0));
    }

    #[test]
    fn path_and_cycle() {
        // P(P_n) = x (x-1)^(n-1); P(C_n) = (x-1)^n + (-1)^n (x-1)
        for n in 1..=7 {
            let p = chromatic_poly(&Graph::path(n)).unwrap();
            for x in 0..6u64 {
                let want = BigInt::from(x) * BigInt::from(x as i64 - 1).pow(n as u32 - 1);
                assert_eq!(p.eval_u64(x), want);
            }
        }
        for n in 3..=8 {
            let p = chromatic_poly(&Graph::cycle(n)).unwrap();
            for x in 0..6i64 {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let want = BigInt::from(x - 1).pow(n as u32) + BigInt::from(sign * (x - 1));
                assert_eq!(p.eval_u64(x as u64), want);
            }
        }
    }

    #[test]
    fn k4_at_four() {
        let p = chromatic_poly(&Graph::complete(4)).unwrap();
        assert_eq!(eval_poly(&p, 4), BigInt::from(24));
        assert_eq!(
            count_colorings_bruteforce(&Graph::complete(4), 4, DEFAULT_NODE_BUDGET).unwrap(),
            BigInt::from(24)
        );
    }

    #[test]
    fn prism_matches_bruteforce() {
        let prism = build_gn(2);
        let p = chromatic_poly(&prism).unwrap();
        assert_eq!(p.degree(), Some(6));
        for x in 0..=5 {
            assert_eq!(
                p.eval_u64(x),
                count_colorings_bruteforce(&prism, x, DEFAULT_NODE_BUDGET).unwrap()
            );
        }
    }

    #[test]
    fn bruteforce_small_values() {
        let k3 = Graph::complete(3);
        assert_eq!(
            count_colorings_bruteforce(&k3, 2, 1000).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            count_colorings_bruteforce(&k3, 3, 1000).unwrap(),
            BigInt::from(6)
        );
        assert_eq!(
            count_colorings_bruteforce(&Graph::empty(0), 0, 1).unwrap(),
            BigInt::from(1)
        );
        assert!(matches!(
            count_colorings_bruteforce(&build_gn(3), 5, 100),
            Err(Error::BudgetExceeded { budget: 100 })
        ));
    }

    #[test]
    fn vertex_limit_guard() {
        let err = ChromaticEngine::default()
            .chromatic_poly(&Graph::empty(15))
            .unwrap_err();
        assert_eq!(
            err,
            Error::VertexLimit {
                vertices: 15,
                limit: 14
            }
        );
        assert!(ChromaticEngine::default()
            .with_vertex_limit(15)
            .chromatic_poly(&Graph::empty(15))
            .is_ok());
    }

    #[test]
    fn contraction_matches_graph_identify() {
        let g = build_gn(3);
        let adj = to_adj(&g);
        for (u, v) in g.edges() {
            assert_eq!(
                from_adj(&contract(&adj, u, v)),
                identify(&g, u, v).unwrap().graph
            );
            assert_eq!(
                from_adj(&delete(&adj, u, v)),
                delete_edge(&g, u, v).unwrap()
            );
        }
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let g = build_gn(2);
        let adj = to_adj(&g);
        let code = canonical_code(&adj).unwrap();
        let perm = [4, 0, 5, 2, 1, 3];
        let relabeled = Graph::new(6, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(canonical_code(&to_adj(&relabeled)), Some(code));
        assert_ne!(canonical_code(&to_adj(&Graph::cycle(6))), Some(code));
    }

    #[test]
    fn memo_on_and_off_agree() {
        for g in [
            build_gn(2),
            build_gn(3),
            Graph::cycle(7),
            disjoint_union(&Graph::complete(3), &Graph::path(4)),
        ] {
            let on = ChromaticEngine::default().chromatic_poly(&g).unwrap();
            let off = ChromaticEngine::default()
                .with_memo(false)
                .chromatic_poly(&g)
                .unwrap();
            assert_eq!(on, off);
            assert!(on.has_alternating_signs());
            assert_eq!(on.coeff(g.vertex_count()), BigInt::from(1));
            assert!(on.coeff(0).is_zero());
        }
    }
}
