//! Finite rooted factor graphs: builtin families, parsing, validation.
//!
//! A factor of a free product is a finite simple connected graph with at
//! least two vertices and a distinguished root. Vertices are dense indices
//! `0..n`, adjacency lists are kept sorted, and every constructor validates
//! the full invariant set, so downstream code can rely on well-formedness.
//!
//! The external edge-list format is line oriented ASCII:
//!
//! ```text
//! # comment
//! root 0
//! edge 0 1
//! edge 1 2
//! ```
//!
//! Exactly one `root` line is required (self-avoiding walk counts depend on
//! the root whenever the graph is not vertex-transitive); vertex ids are the
//! same dense indices used in memory, and the `edge` lines define the vertex
//! set, so the root must appear in at least one edge.

use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("{0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge between {u} and {v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("adjacency not symmetric between {u} and {v}")]
    Asymmetric { u: usize, v: usize },
    #[error("missing `root <id>` line")]
    MissingRoot,
    #[error("line {line}: more than one `root` line")]
    RepeatedRoot { line: usize },
    #[error("root {root} out of range for {vertex_count} vertices")]
    RootOutOfRange { root: usize, vertex_count: usize },
    #[error("vertex {vertex} is unreachable from the root")]
    Disconnected { vertex: usize },
    #[error("a factor needs at least 2 vertices, got {vertex_count}")]
    TooFewVertices { vertex_count: usize },
}

/// Finite simple connected graph with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedGraph {
    adjacency: Vec<Vec<usize>>,
    root: usize,
}

impl RootedGraph {
    /// Validates and constructs: simple, symmetric, connected, `n ≥ 2`,
    /// root in range. Adjacency lists are sorted on the way in.
    pub fn new(mut adjacency: Vec<Vec<usize>>, root: usize) -> Result<Self, GraphError> {
        let n = adjacency.len();
        if n < 2 {
            return Err(GraphError::TooFewVertices { vertex_count: n });
        }
        if root >= n {
            return Err(GraphError::RootOutOfRange { root, vertex_count: n });
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            for (k, &u) in nbrs.iter().enumerate() {
                if u == v {
                    return Err(GraphError::SelfLoop { vertex: v });
                }
                if u >= n {
                    return Err(GraphError::InvalidParameter(format!(
                        "neighbor {u} of vertex {v} out of range"
                    )));
                }
                if k > 0 && nbrs[k - 1] == u {
                    return Err(GraphError::DuplicateEdge { u: v, v: u });
                }
            }
        }
        for v in 0..n {
            for &u in &adjacency[v] {
                if adjacency[u].binary_search(&v).is_err() {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
        }
        let g = RootedGraph { adjacency, root };
        if let Some(unreached) = g.first_unreachable() {
            return Err(GraphError::Disconnected { vertex: unreached });
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        while let Some(v) = stack.pop() {
            for &u in &self.adjacency[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().position(|&s| !s)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Canonical edge-list rendering: the `root` line, then `edge u v` with
    /// `u < v` in lexicographic order. `parse_graph(render(g)) == g`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "root {}", self.root);
        for u in 0..self.vertex_count() {
            for &v in &self.adjacency[u] {
                if u < v {
                    let _ = writeln!(out, "edge {u} {v}");
                }
            }
        }
        out
    }
}

/// Complete graph `K_n`, rooted at vertex 0 (vertex-transitive, so the
/// choice is immaterial).
pub fn build_complete(n: usize) -> Result<RootedGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidParameter(format!(
            "complete graph needs n >= 2, got {n}"
        )));
    }
    let adjacency = (0..n)
        .map(|v| (0..n).filter(|&u| u != v).collect())
        .collect();
    RootedGraph::new(adjacency, 0)
}

/// Cycle `C_n` for `n ≥ 3`, rooted at vertex 0. A 2-cycle would be a
/// multigraph; the two-vertex cycle of the literature is realized as `K_2`.
pub fn build_cycle(n: usize) -> Result<RootedGraph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter(format!(
            "cycle needs n >= 3, got {n} (use a complete graph on 2 vertices for C_2)"
        )));
    }
    let adjacency = (0..n).map(|v| vec![(v + n - 1) % n, (v + 1) % n]).collect();
    RootedGraph::new(adjacency, 0)
}

/// Finite truncation of the two-sided diamond chain: `k` diamonds (4-cycles
/// glued at opposite corners) on each side of a central root of degree 4.
///
/// Vertex layout per side: diamond `j` contributes two middle vertices and
/// the next hub, so the graph has `1 + 6k` vertices in total. Walks of
/// length at most `2k` never see the truncation boundary, which is what the
/// finite-truncation sanity tests rely on.
pub fn build_ladder_segment(k: usize) -> Result<RootedGraph, GraphError> {
    if k < 1 {
        return Err(GraphError::InvalidParameter(format!(
            "ladder segment needs k >= 1, got {k}"
        )));
    }
    let n = 1 + 6 * k;
    let mut adjacency = vec![Vec::new(); n];
    let add = |adj: &mut Vec<Vec<usize>>, u: usize, v: usize| {
        adj[u].push(v);
        adj[v].push(u);
    };
    for side in 0..2 {
        let offset = 3 * k * side;
        let mut hub = 0; // the root starts both chains
        for j in 0..k {
            let top = offset + 1 + 3 * j;
            let bottom = offset + 2 + 3 * j;
            let next_hub = offset + 3 + 3 * j;
            add(&mut adjacency, hub, top);
            add(&mut adjacency, hub, bottom);
            add(&mut adjacency, top, next_hub);
            add(&mut adjacency, bottom, next_hub);
            hub = next_hub;
        }
    }
    RootedGraph::new(adjacency, 0)
}

/// Parses the edge-list format described in the module docs.
pub fn parse_graph(text: &str) -> Result<RootedGraph, GraphError> {
    let mut root: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_vertex = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let keyword = parts.next().expect("non-empty line has a first token");
        let parse_id = |tok: Option<&str>| -> Result<usize, GraphError> {
            let tok = tok.ok_or_else(|| GraphError::Syntax {
                line: line_no,
                message: format!("`{keyword}` needs a vertex id"),
            })?;
            tok.parse::<usize>().map_err(|_| GraphError::Syntax {
                line: line_no,
                message: format!("invalid vertex id `{tok}`"),
            })
        };
        match keyword {
            "root" => {
                let id = parse_id(parts.next())?;
                if root.replace(id).is_some() {
                    return Err(GraphError::RepeatedRoot { line: line_no });
                }
            }
            "edge" => {
                let u = parse_id(parts.next())?;
                let v = parse_id(parts.next())?;
                if u == v {
                    return Err(GraphError::SelfLoop { vertex: u });
                }
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    return Err(GraphError::DuplicateEdge { u: key.0, v: key.1 });
                }
                edges.push(key);
                max_vertex = max_vertex.max(key.1);
            }
            other => {
                return Err(GraphError::Syntax {
                    line: line_no,
                    message: format!("unknown directive `{other}`"),
                });
            }
        }
        if let Some(extra) = parts.next() {
            return Err(GraphError::Syntax {
                line: line_no,
                message: format!("unexpected trailing token `{extra}`"),
            });
        }
    }

    let root = root.ok_or(GraphError::MissingRoot)?;
    let n = max_vertex + 1;
    let mut adjacency = vec![Vec::new(); n];
    for (u, v) in edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    RootedGraph::new(adjacency, root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn complete_graphs_have_all_edges() {
        for n in 2..=6 {
            let g = build_complete(n).unwrap();
            assert_eq!(g.vertex_count(), n);
            assert_eq!(g.edge_count(), n * (n - 1) / 2);
            assert_eq!(g.degree(g.root()), n - 1);
        }
        assert!(matches!(build_complete(1), Err(GraphError::InvalidParameter(_))));
    }

    #[test]
    fn cycles_are_two_regular() {
        for n in 3..=8 {
            let g = build_cycle(n).unwrap();
            assert_eq!(g.edge_count(), n);
            for v in 0..n {
                assert_eq!(g.degree(v), 2);
            }
        }
        assert!(build_cycle(2).is_err());
        assert_eq!(build_cycle(3).unwrap(), build_complete(3).unwrap());
    }

    #[test]
    fn ladder_segment_shape() {
        let g1 = build_ladder_segment(1).unwrap();
        assert_eq!(g1.vertex_count(), 7);
        assert_eq!(g1.degree(g1.root()), 4);
        let g2 = build_ladder_segment(2).unwrap();
        assert_eq!(g2.vertex_count(), 13);
        assert_eq!(g2.degree(g2.root()), 4);
        // Interior hubs have degree 4, middle vertices degree 2, the two far
        // ends degree 2.
        let deg4 = (0..g2.vertex_count()).filter(|&v| g2.degree(v) == 4).count();
        assert_eq!(deg4, 3); // root and one interior hub per side
        assert!(build_ladder_segment(0).is_err());
    }

    #[test]
    fn parse_accepts_comments_and_blank_lines() {
        let g = parse_graph("# a triangle\n\nroot 1\nedge 0 1\nedge 1 2\nedge 2 0\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.root(), 1);
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!(parse_graph("root 0\nedge 0 0\n"), Err(GraphError::SelfLoop { vertex: 0 }));
        assert_eq!(
            parse_graph("root 0\nedge 0 1\nedge 1 0\n"),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            parse_graph("root 0\nedge 0 1\nedge 2 3\n"),
            Err(GraphError::Disconnected { vertex: 2 })
        );
        assert_eq!(parse_graph("edge 0 1\n"), Err(GraphError::MissingRoot));
        assert_eq!(
            parse_graph("root 5\nedge 0 1\n"),
            Err(GraphError::RootOutOfRange { root: 5, vertex_count: 2 })
        );
        assert!(matches!(
            parse_graph("root 0\nedge 0 one\n"),
            Err(GraphError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("root 0\nroot 1\nedge 0 1\n"),
            Err(GraphError::RepeatedRoot { line: 2 })
        ));
        assert!(matches!(parse_graph("root 0\n"), Err(GraphError::TooFewVertices { .. })));
    }

    #[test]
    fn render_round_trips_builtins() {
        for g in [
            build_complete(4).unwrap(),
            build_cycle(7).unwrap(),
            build_ladder_segment(2).unwrap(),
        ] {
            assert_eq!(parse_graph(&g.render()).unwrap(), g);
        }
    }

    /// Random connected graph: a spanning path plus arbitrary extra edges.
    fn arb_graph() -> impl Strategy<Value = RootedGraph> {
        (2usize..=8).prop_flat_map(|n| {
            let extra = prop::collection::vec((0..n, 0..n), 0..=n * 2);
            (Just(n), extra, 0..n).prop_map(|(n, extra, root)| {
                let mut adjacency = vec![Vec::new(); n];
                for v in 1..n {
                    adjacency[v - 1].push(v);
                    adjacency[v].push(v - 1);
                }
                for (u, v) in extra {
                    if u != v && !adjacency[u].contains(&v) {
                        adjacency[u].push(v);
                        adjacency[v].push(u);
                    }
                }
                RootedGraph::new(adjacency, root).expect("construction is valid")
            })
        })
    }

    proptest! {
        #[test]
        fn parse_render_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph(&g.render()).unwrap(), g);
        }

        #[test]
        fn handshake_lemma(g in arb_graph()) {
            let degree_sum: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
            prop_assert_eq!(degree_sum, 2 * g.edge_count());
        }
    }
}
