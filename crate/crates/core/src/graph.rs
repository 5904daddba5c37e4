//! Simple undirected graphs with dense vertex ids.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`, adjacency is kept
//! as sorted neighbor lists, and for graphs up to [`DENSE_LIMIT`] vertices an
//! adjacency bit matrix is kept alongside for constant-time edge queries.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Largest vertex count for which the adjacency bit matrix is materialized.
pub const DENSE_LIMIT: usize = 2048;

#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    matrix: Option<FixedBitSet>,
    m: usize,
    labels: Option<Vec<String>>,
}

/// How [`GraphBuilder`] treats self-loops and repeated edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ParseMode {
    #[default]
    Strict,
    Lenient,
}

/// Result of building a graph in lenient mode: how many input pairs were dropped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildWarnings {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl BuildWarnings {
    pub fn total(&self) -> usize {
        self.self_loops + self.duplicates
    }
}

impl Graph {
    /// Strict construction: out-of-range endpoints, self-loops and duplicate
    /// pairs are all errors.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::build(n, edges, ParseMode::Strict).map(|(g, _)| g)
    }

    pub fn build(
        n: usize,
        edges: &[(usize, usize)],
        mode: ParseMode,
    ) -> Result<(Graph, BuildWarnings)> {
        let mut adj = vec![Vec::new(); n];
        let mut warnings = BuildWarnings::default();
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                if mode == ParseMode::Strict {
                    return Err(Error::SelfLoop(u));
                }
                warnings.self_loops += 1;
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                if mode == ParseMode::Strict {
                    let dup = first_duplicate(edges, u);
                    return Err(Error::DuplicateEdge(dup.0, dup.1));
                }
                // each duplicated pair is seen from both endpoints
                warnings.duplicates += before - list.len();
            }
        }
        warnings.duplicates /= 2;
        Ok((Graph::from_sorted_adjacency(adj), warnings))
    }

    /// Builds from adjacency lists that are already symmetric, sorted and
    /// free of loops and duplicates.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Graph {
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let matrix = (n <= DENSE_LIMIT).then(|| {
            let mut bits = FixedBitSet::with_capacity(n * n);
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    bits.insert(u * n + v);
                }
            }
            bits
        });
        Graph { adj, matrix, m, labels: None }
    }

    /// Builds from unsorted but otherwise valid adjacency lists.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph::from_sorted_adjacency(adj)
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_adjacency(vec![Vec::new(); n])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::Precondition(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn set_labels(&mut self, labels: Option<Vec<String>>) {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.n()));
        self.labels = labels;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.matrix {
            Some(bits) => bits.contains(u * self.n() + v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when present, otherwise the id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub(crate) fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        let mut g = Graph::from_sorted_adjacency(adj);
        g.labels = self.labels.clone();
        g
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        let mut g = Graph::from_adjacency(adj);
        if let Some(l) = &self.labels {
            g.labels = Some(vertices.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    /// Subgraph induced by all vertices except `removed`, with the id mapping.
    pub fn without_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep = vec![true; self.n()];
        for &v in removed {
            keep[v] = false;
        }
        let kept: Vec<usize> = (0..self.n()).filter(|&v| keep[v]).collect();
        (self.induced(&kept), kept)
    }

    pub fn without_edges(&self, removed: &[(usize, usize)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
        }
        let mut g = Graph::from_sorted_adjacency(adj);
        g.labels = self.labels.clone();
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + shift).collect()));
        Graph::from_sorted_adjacency(adj)
    }

    pub fn components(&self) -> ComponentDecomposition {
        let n = self.n();
        let mut component = vec![usize::MAX; n];
        let mut vertices: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if component[s] != usize::MAX {
                continue;
            }
            let id = vertices.len();
            let mut members = vec![s];
            component[s] = id;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if component[w] == usize::MAX {
                        component[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            vertices.push(members);
        }
        let odd_degree_counts = vertices
            .iter()
            .map(|c| c.iter().filter(|&&v| self.degree(v) % 2 == 1).count())
            .collect();
        let edge_counts = vertices
            .iter()
            .map(|c| c.iter().map(|&v| self.degree(v)).sum::<usize>() / 2)
            .collect();
        ComponentDecomposition { component, vertices, odd_degree_counts, edge_counts }
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_count() == 1
    }

    /// `|E| - |V| + c`, the number of independent cycles.
    pub fn cyclomatic_number(&self) -> usize {
        self.m + self.component_count() - self.n()
    }

    /// Returns a triangle when one exists (lexicographically least `u < v < w`).
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            for &w in &self.adj[v] {
                if w > v && self.has_edge(u, w) {
                    return Some([u, v, w]);
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> (bool, Option<[usize; 3]>) {
        let t = self.find_triangle();
        (t.is_none(), t)
    }

    /// `α(G) ≤ 2` iff the complement has no triangle; the witness is an
    /// independent triple.
    pub fn independence_at_most_two(&self) -> (bool, Option<[usize; 3]>) {
        let n = self.n();
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v) {
                    continue;
                }
                for w in v + 1..n {
                    if !self.has_edge(u, w) && !self.has_edge(v, w) {
                        return (false, Some([u, v, w]));
                    }
                }
            }
        }
        (true, None)
    }

    pub fn is_bipartite(&self) -> Bipartition {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => {
                            return Bipartition::OddCycle(tree_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartition::Coloring(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for s in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Shortest path from `from` to `to` using only vertices allowed by `allowed`.
    pub(crate) fn shortest_path_within(
        &self,
        from: usize,
        to: usize,
        allowed: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                let mut path = vec![to];
                let mut x = to;
                while x != from {
                    x = parent[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adj[u] {
                if !seen[w] && allowed(w) {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

fn first_duplicate(edges: &[(usize, usize)], u: usize) -> (usize, usize) {
    let mut seen = std::collections::HashSet::new();
    for &(a, b) in edges {
        let key = (a.min(b), a.max(b));
        if (key.0 == u || key.1 == u) && !seen.insert(key) {
            return key;
        }
    }
    (u, u)
}

/// Cycle closed by the non-tree edge `u-w` in a BFS forest.
fn tree_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edge_list())
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    Coloring(Vec<bool>),
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Coloring(_))
    }
}

/// Connected components, numbered by their smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentDecomposition {
    pub component: Vec<usize>,
    pub vertices: Vec<Vec<usize>>,
    pub odd_degree_counts: Vec<usize>,
    pub edge_counts: Vec<usize>,
}

impl ComponentDecomposition {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Components without odd-degree vertices (isolated vertices included).
    pub fn even_component_count(&self) -> usize {
        self.odd_degree_counts.iter().filter(|&&c| c == 0).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn c4_and_single_vertex() {
        let g = cycle(4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.edge_list(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn strict_and_lenient_modes() {
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(Graph::new(3, &[(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1))));
        let (g, w) = Graph::build(3, &[(0, 1), (1, 0), (2, 2), (1, 2)], ParseMode::Lenient).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(w, BuildWarnings { self_loops: 1, duplicates: 1 });
    }

    #[test]
    fn complement_basics() {
        let k4 = complete(4);
        assert_eq!(k4.complement().m(), 0);
        // C5 is self-complementary: the complement is again a 5-cycle
        let c5c = cycle(5).complement();
        assert!(c5c.degrees().iter().all(|&d| d == 2));
        assert!(c5c.is_connected());
    }

    #[test]
    fn component_decomposition() {
        let g = cycle(4).disjoint_union(&Graph::new(3, &[(0, 1), (1, 2)]).unwrap());
        let cc = g.components();
        assert_eq!(cc.len(), 2);
        assert_eq!(cc.odd_degree_counts, vec![0, 2]);
        assert_eq!(cc.edge_counts, vec![4, 2]);
        let cc = complete(4).components();
        assert_eq!(cc.odd_degree_counts, vec![4]);
        let cc = Graph::empty(3).components();
        assert_eq!(cc.len(), 3);
        assert_eq!(cc.even_component_count(), 3);
    }

    #[test]
    fn predicates() {
        assert!(cycle(4).is_triangle_free().0);
        let (ok, t) = complete(4).is_triangle_free();
        assert!(!ok);
        assert_eq!(t, Some([0, 1, 2]));
        assert!(complete(4).independence_at_most_two().0);
        assert!(cycle(4).independence_at_most_two().0);
        assert_eq!(cycle(6).independence_at_most_two(), (false, Some([0, 2, 4])));
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap().girth(), None);
        assert_eq!(complete(4).girth(), Some(3));
        match cycle(5).is_bipartite() {
            Bipartition::OddCycle(c) => {
                assert_eq!(c.len(), 5);
                for i in 0..5 {
                    assert!(cycle(5).has_edge(c[i], c[(i + 1) % 5]));
                }
            }
            _ => panic!("C5 is not bipartite"),
        }
        assert!(cycle(6).is_bipartite().is_bipartite());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut e = vec![];
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            e.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, &e).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(8)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn odd_degree_counts_are_even(g in arb_graph(9)) {
            for c in g.components().odd_degree_counts {
                prop_assert_eq!(c % 2, 0);
            }
        }

        #[test]
        fn alpha_two_matches_brute_force(g in arb_graph(7)) {
            let n = g.n();
            let mut alpha = 0;
            for mask in 0u32..(1 << n) {
                let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                let independent = vs.iter().enumerate()
                    .all(|(i, &a)| vs[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
                if independent {
                    alpha = alpha.max(vs.len());
                }
            }
            prop_assert_eq!(g.independence_at_most_two().0, alpha <= 2);
        }
    }
}
