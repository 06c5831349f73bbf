//! Simple undirected graphs and the surgery used to build `G(n, p, q)`.
//!
//! Vertex labeling of `G(n) = K3 □ Kn`: the vertex `x_j^i` (row `i` in
//! `1..=3`, column `j` in `1..=n`) has id `(i-1)*n + (j-1)`. This is also the
//! id the edge `(row i, column j)` of `K_{3,n}` receives in
//! [`line_graph`]`(`[`complete_bipartite`]`(3, n))`, so the two constructions
//! agree as labeled graphs.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Immutable simple graph on vertices `0..vertex_count`.
///
/// Edges are stored as ordered pairs `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if !set.insert(ordered(u, v)) {
                return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    // Callers guarantee the pairs are ordered, in range and loop-free.
    fn from_set(vertex_count: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        debug_assert!(edges.iter().all(|&(u, v)| u < v && v < vertex_count));
        Graph {
            vertex_count,
            edges,
        }
    }

    pub fn empty(vertex_count: usize) -> Self {
        Graph::from_set(vertex_count, BTreeSet::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_set(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_set(n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.edges.insert((0, n - 1));
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn neighbors(&self, v: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Graph text format: vertex count on the first line, then one `u v` per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the graph text format. Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut vertex_count = None;
        let mut edges = BTreeSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match vertex_count {
                None => {
                    if fields.len() != 1 {
                        return Err(err(format!("expected a vertex count, found {line:?}")));
                    }
                    let n = fields[0]
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad vertex count {:?}: {e}", fields[0])))?;
                    vertex_count = Some(n);
                }
                Some(n) => {
                    if fields.len() != 2 {
                        return Err(err(format!("expected `u v`, found {line:?}")));
                    }
                    let mut ends = [0usize; 2];
                    for (slot, field) in ends.iter_mut().zip(&fields) {
                        *slot = field
                            .parse::<usize>()
                            .map_err(|e| err(format!("bad vertex {field:?}: {e}")))?;
                    }
                    let [u, v] = ends;
                    if u == v {
                        return Err(err(format!("loop at vertex {u}")));
                    }
                    if u >= n || v >= n {
                        return Err(err(format!("vertex out of range 0..{n}")));
                    }
                    if !edges.insert(ordered(u, v)) {
                        return Err(err(format!("duplicate edge ({u}, {v})")));
                    }
                }
            }
        }
        let n = vertex_count.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            message: "missing vertex count".into(),
        })?;
        Ok(Graph::from_set(n, edges))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `K_{a,b}`: vertices `0..a` on one side, `a..a+b` on the other.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a)
        .flat_map(|u| (0..b).map(move |v| (u, a + v)))
        .collect();
    Graph::from_set(a + b, edges)
}

/// Line graph; vertex `i` is the `i`-th edge of `g` in ascending order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut out = BTreeSet::new();
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.insert((i, j));
            }
        }
    }
    Graph::from_set(edges.len(), out)
}

/// Cartesian product; the pair `(u, v)` becomes `u * |h| + v`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    let mut out = BTreeSet::new();
    for u in 0..g.vertex_count() {
        for (v, w) in h.edges() {
            out.insert((u * m + v, u * m + w));
        }
    }
    for (u, w) in g.edges() {
        for v in 0..m {
            out.insert((u * m + v, w * m + v));
        }
    }
    Graph::from_set(g.vertex_count() * m, out)
}

/// Vertices of `h` are shifted past those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.vertex_count();
    let mut edges = g.edges.clone();
    edges.extend(h.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::from_set(shift + h.vertex_count(), edges)
}

pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let key = ordered(u, v);
    if !g.edges.contains(&key) {
        return Err(Error::MissingEdge(u, v));
    }
    let mut edges = g.edges.clone();
    edges.remove(&key);
    Ok(Graph::from_set(g.vertex_count, edges))
}

/// Result of merging two vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identified {
    pub graph: Graph,
    /// `map[old]` is the new id of vertex `old`; `u` and `v` share an id.
    pub map: Vec<usize>,
    /// Id of the merged vertex.
    pub merged: usize,
}

/// Merges `u` and `v` into one vertex adjacent to `(N(u) ∪ N(v)) \ {u, v}`.
///
/// The merged vertex takes id `min(u, v)`; vertices above `max(u, v)` shift
/// down by one. The relabeling depends only on the unordered pair.
pub fn identify(g: &Graph, u: usize, v: usize) -> Result<Identified> {
    if u == v {
        return Err(Error::invalid(format!(
            "cannot identify vertex {u} with itself"
        )));
    }
    let n = g.vertex_count();
    if u >= n || v >= n {
        return Err(Error::invalid(format!("vertex out of range 0..{n}")));
    }
    let (lo, hi) = ordered(u, v);
    let map: Vec<usize> = (0..n)
        .map(|w| match w.cmp(&hi) {
            std::cmp::Ordering::Less => w,
            std::cmp::Ordering::Equal => lo,
            std::cmp::Ordering::Greater => w - 1,
        })
        .collect();
    let edges = g
        .edges()
        .map(|(a, b)| (map[a], map[b]))
        .filter(|&(a, b)| a != b)
        .map(|(a, b)| ordered(a, b))
        .collect();
    Ok(Identified {
        graph: Graph::from_set(n - 1, edges),
        map,
        merged: lo,
    })
}

/// Structural name of a vertex of `G(n, p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    /// `x_col^row`, both 1-based.
    X { row: usize, col: usize },
    /// `y_col`, the vertex replacing `x_col^1` and `x_col^2`.
    Y { col: usize },
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::X { row, col } => write!(f, "x{col}^{row}"),
            VertexLabel::Y { col } => write!(f, "y{col}"),
        }
    }
}

/// Bijection between structural labels and vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabeling {
    labels: Vec<VertexLabel>,
}

impl VertexLabeling {
    fn for_gn(n: usize) -> Self {
        let labels = (1..=3)
            .flat_map(|row| (1..=n).map(move |col| VertexLabel::X { row, col }))
            .collect();
        VertexLabeling { labels }
    }

    pub fn label(&self, id: usize) -> Option<VertexLabel> {
        self.labels.get(id).copied()
    }

    pub fn id(&self, label: VertexLabel) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, VertexLabel)> + '_ {
        self.labels.iter().copied().enumerate()
    }
}

/// Parameters of the surgery producing `G(n, p, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplitParams {
    pub n: usize,
    /// Rungs `x_j^1 x_j^2` deleted, `j = 1..=p`.
    pub p: usize,
    /// Rungs identified into `y_j`, `j = p+1..=p+q`.
    pub q: usize,
}

impl SplitParams {
    pub fn new(n: usize, p: usize, q: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if p + q > n {
            return Err(Error::invalid(format!(
                "need p + q <= n, got n={n}, p={p}, q={q}"
            )));
        }
        Ok(SplitParams { n, p, q })
    }
}

/// `G(n) = K3 □ Kn` with the canonical labeling.
pub fn build_gn(n: usize) -> Graph {
    cartesian_product(&Graph::complete(3), &Graph::complete(n))
}

pub fn build_gn_labeled(n: usize) -> (Graph, VertexLabeling) {
    (build_gn(n), VertexLabeling::for_gn(n))
}

pub fn build_gnpq(n: usize, p: usize, q: usize) -> Result<Graph> {
    build_gnpq_labeled(SplitParams::new(n, p, q)?).map(|(g, _)| g)
}

/// Builds `G(n, p, q)`: deletes the first `p` rungs `x_j^1 x_j^2`, then merges
/// the next `q` rungs into `y_j`, recording where every label ends up.
pub fn build_gnpq_labeled(params: SplitParams) -> Result<(Graph, VertexLabeling)> {
    let SplitParams { n, p, q } = params;
    let (mut g, mut labeling) = build_gn_labeled(n);
    for col in 1..=p {
        g = delete_edge(&g, col - 1, n + col - 1)?;
    }
    for col in p + 1..=p + q {
        let top = labeling
            .id(VertexLabel::X { row: 1, col })
            .expect("label present");
        let mid = labeling
            .id(VertexLabel::X { row: 2, col })
            .expect("label present");
        let Identified { graph, map, merged } = identify(&g, top, mid)?;
        let mut labels = vec![VertexLabel::Y { col }; graph.vertex_count()];
        for (old, &new) in map.iter().enumerate() {
            if new != merged {
                labels[new] = labeling.labels[old];
            }
        }
        g = graph;
        labeling = VertexLabeling { labels };
    }
    Ok((g, labeling))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_sizes() {
        for (a, b, e) in [(1, 1, 1), (3, 2, 6), (3, 4, 12)] {
            let g = complete_bipartite(a, b);
            assert_eq!(g.vertex_count(), a + b);
            assert_eq!(g.edge_count(), e);
        }
    }

    #[test]
    fn line_graph_small() {
        assert_eq!(line_graph(&Graph::path(3)), Graph::complete(2));
        assert_eq!(line_graph(&Graph::complete(3)), Graph::complete(3));
        let prism = line_graph(&complete_bipartite(3, 2));
        assert_eq!((prism.vertex_count(), prism.edge_count()), (6, 9));
    }

    #[test]
    fn line_graph_edge_count_matches_degree_formula() {
        // |E(L(G))| = sum over vertices of C(deg, 2)
        for n in 1..=5 {
            let g = complete_bipartite(3, n);
            let want: usize = (0..g.vertex_count())
                .map(|v| {
                    let d = g.degree(v);
                    d * d.saturating_sub(1) / 2
                })
                .sum();
            assert_eq!(line_graph(&g).edge_count(), want);
        }
    }

    #[test]
    fn cartesian_products() {
        assert_eq!(
            cartesian_product(&Graph::complete(1), &Graph::complete(3)),
            Graph::complete(3)
        );
        let square = cartesian_product(&Graph::complete(2), &Graph::complete(2));
        assert_eq!(square.vertex_count(), 4);
        assert_eq!(square.edge_count(), 4);
        assert!((0..4).all(|v| square.degree(v) == 2));
        let rook = cartesian_product(&Graph::complete(3), &Graph::complete(3));
        assert_eq!((rook.vertex_count(), rook.edge_count()), (9, 18));
    }

    #[test]
    fn gn_sizes() {
        for (n, e) in [(1, 3), (2, 9), (3, 18)] {
            let g = build_gn(n);
            assert_eq!(g.vertex_count(), 3 * n);
            assert_eq!(g.edge_count(), e);
            assert_eq!(e, 3 * n * (n - 1) / 2 + 3 * n);
        }
        assert_eq!(build_gn(1), Graph::complete(3));
    }

    #[test]
    fn gn_is_labeled_line_graph_of_k3n() {
        for n in 1..=5 {
            assert_eq!(build_gn(n), line_graph(&complete_bipartite(3, n)), "n={n}");
        }
    }

    #[test]
    fn gn_labeling_is_row_major() {
        let (g, labels) = build_gn_labeled(4);
        assert_eq!(labels.len(), g.vertex_count());
        assert_eq!(labels.id(VertexLabel::X { row: 2, col: 3 }), Some(4 + 2));
        assert_eq!(labels.label(11), Some(VertexLabel::X { row: 3, col: 4 }));
    }

    #[test]
    fn delete_edge_cases() {
        assert_eq!(
            delete_edge(&Graph::complete(3), 0, 2).unwrap(),
            Graph::path(3)
        );
        assert_eq!(
            delete_edge(&Graph::complete(2), 1, 0).unwrap(),
            Graph::empty(2)
        );
        let prism = build_gn(2);
        let cut = delete_edge(&prism, 0, 2).unwrap();
        assert_eq!((cut.vertex_count(), cut.edge_count()), (6, 8));
        assert_eq!(
            delete_edge(&Graph::path(3), 0, 2),
            Err(Error::MissingEdge(0, 2))
        );
    }

    #[test]
    fn identify_cases() {
        let k1 = identify(&Graph::complete(2), 0, 1).unwrap().graph;
        assert_eq!(k1, Graph::empty(1));
        assert_eq!(
            identify(&Graph::complete(3), 0, 2).unwrap().graph,
            Graph::complete(2)
        );
        assert_eq!(
            identify(&Graph::path(3), 0, 2).unwrap().graph,
            Graph::complete(2)
        );
        assert!(identify(&Graph::complete(3), 1, 1).is_err());
    }

    #[test]
    fn identify_is_symmetric() {
        let g = build_gn(3);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                if u != v {
                    assert_eq!(identify(&g, u, v).unwrap(), identify(&g, v, u).unwrap());
                }
            }
        }
    }

    #[test]
    fn gnpq_small_cases() {
        assert_eq!(build_gnpq(3, 0, 0).unwrap(), build_gn(3));
        assert_eq!(
            build_gnpq(1, 1, 0).unwrap(),
            Graph::path(3).relabel_for_test(&[0, 2, 1])
        );
        assert_eq!(build_gnpq(1, 0, 1).unwrap(), Graph::complete(2));
        assert!(build_gnpq(2, 2, 1).is_err());
    }

    #[test]
    fn gnpq_vertex_counts_and_simplicity() {
        for n in 1..=5 {
            for p in 0..=n {
                for q in 0..=n - p {
                    let (g, labels) =
                        build_gnpq_labeled(SplitParams::new(n, p, q).unwrap()).unwrap();
                    assert_eq!(g.vertex_count(), 3 * n - q);
                    assert_eq!(labels.len(), g.vertex_count());
                    // Graph::new re-validates simplicity
                    assert_eq!(Graph::new(g.vertex_count(), g.edges()).unwrap(), g);
                    let ys = labels
                        .iter()
                        .filter(|(_, l)| matches!(l, VertexLabel::Y { .. }))
                        .count();
                    assert_eq!(ys, q);
                }
            }
        }
    }

    #[test]
    fn gnpq_labels_track_structure() {
        let (g, labels) = build_gnpq_labeled(SplitParams::new(3, 1, 1).unwrap()).unwrap();
        let id = |l| labels.id(l).unwrap();
        let x = |row, col| id(VertexLabel::X { row, col });
        assert!(!g.has_edge(x(1, 1), x(2, 1)));
        assert!(g.has_edge(x(1, 3), x(2, 3)));
        let y = id(VertexLabel::Y { col: 2 });
        // y2 sits in both row cliques and its column triangle collapses to an edge
        for col in [1, 3] {
            assert!(g.has_edge(y, x(1, col)));
            assert!(g.has_edge(y, x(2, col)));
        }
        assert!(g.has_edge(y, x(3, 2)));
        assert_eq!(g.degree(y), 5);
    }

    #[test]
    fn text_format_round_trip_and_errors() {
        let g = build_gn(2);
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        let text = "# triangle\n3\n\n0 1\n1 2 # rung\n0 2\n";
        assert_eq!(Graph::parse(text).unwrap(), Graph::complete(3));
        match Graph::parse("3\n0 1\n1 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            Graph::parse("2\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("2\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("# nothing\n"),
            Err(Error::Parse { .. })
        ));
    }

    impl Graph {
        fn relabel_for_test(&self, perm: &[usize]) -> Graph {
            Graph::new(
                self.vertex_count,
                self.edges().map(|(u, v)| (perm[u], perm[v])),
            )
            .unwrap()
        }
    }
}
