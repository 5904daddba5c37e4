//! Certified recognition of chordal, interval, unit interval, caterpillar
//! forest, path-union, forest and tree graphs.
//!
//! Every negative answer carries a witness that can be checked by looking at an
//! induced subgraph, and every positive answer carries a certificate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Chordal,
    Interval,
    UnitInterval,
    CaterpillarForest,
    UnionOfPaths,
    Forest,
    Tree,
}

impl GraphClass {
    pub const ALL: [GraphClass; 7] = [
        GraphClass::Chordal,
        GraphClass::Interval,
        GraphClass::UnitInterval,
        GraphClass::CaterpillarForest,
        GraphClass::UnionOfPaths,
        GraphClass::Forest,
        GraphClass::Tree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Chordal => "chordal",
            GraphClass::Interval => "interval",
            GraphClass::UnitInterval => "unit-interval",
            GraphClass::CaterpillarForest => "caterpillar-forest",
            GraphClass::UnionOfPaths => "union-of-paths",
            GraphClass::Forest => "forest",
            GraphClass::Tree => "tree",
        }
    }

    /// Closed under induced subgraphs. Trees are the only non-hereditary class here.
    pub fn is_hereditary(self) -> bool {
        self != GraphClass::Tree
    }

    /// Every member is acyclic.
    pub fn is_acyclic(self) -> bool {
        matches!(
            self,
            GraphClass::CaterpillarForest | GraphClass::UnionOfPaths | GraphClass::Forest | GraphClass::Tree
        )
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "graph class", name: s.to_string() })
    }
}

/// Small forbidden patterns searched for as induced subgraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Claw,
    Net,
    Tent,
    T2,
    Cycle(usize),
}

impl Pattern {
    /// Pattern graph; vertex 0 is the claw/T2 center, and every vertex after
    /// the first is adjacent to an earlier one.
    pub fn graph(self) -> Graph {
        let edges: Vec<(usize, usize)> = match self {
            Pattern::Claw => vec![(0, 1), (0, 2), (0, 3)],
            Pattern::Net => vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)],
            Pattern::Tent => vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)],
            Pattern::T2 => vec![(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)],
            Pattern::Cycle(k) => (0..k).map(|i| (i, (i + 1) % k)).collect(),
        };
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::new(n, &edges).expect("pattern graphs are simple")
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::Claw => 4,
            Pattern::Net | Pattern::Tent => 6,
            Pattern::T2 => 7,
            Pattern::Cycle(k) => k,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Claw => f.write_str("claw"),
            Pattern::Net => f.write_str("net"),
            Pattern::Tent => f.write_str("tent"),
            Pattern::T2 => f.write_str("T2"),
            Pattern::Cycle(k) => write!(f, "C{k}"),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "claw" => Ok(Pattern::Claw),
            "net" => Ok(Pattern::Net),
            "tent" => Ok(Pattern::Tent),
            "T2" | "t2" => Ok(Pattern::T2),
            _ => s
                .strip_prefix('C')
                .or_else(|| s.strip_prefix('c'))
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|&k| k >= 3)
                .map(Pattern::Cycle)
                .ok_or_else(|| Error::Unknown { kind: "pattern", name: s.to_string() }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Perfect elimination ordering: each vertex is simplicial among the later ones.
    EliminationOrder(Vec<usize>),
    /// One spine per component, in component order; isolated edges have an empty spine.
    Spines(Vec<Vec<usize>>),
    /// The path components, each listed end to end.
    Paths(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Chordless cycle, listed in cyclic order.
    InducedCycle(Vec<usize>),
    /// `map[i]` is the image of pattern vertex `i`.
    Pattern { pattern: Pattern, map: Vec<usize> },
    AsteroidalTriple([usize; 3]),
    /// A vertex whose degree is too large for the class.
    Degree(usize),
    /// Two vertices in different components.
    Disconnected(usize, usize),
}

impl Witness {
    /// Vertex set inducing a subgraph outside the class the witness refutes.
    pub fn vertices(&self, g: &Graph) -> Vec<usize> {
        let mut vs = match self {
            Witness::InducedCycle(c) => c.clone(),
            Witness::Pattern { map, .. } => map.clone(),
            Witness::AsteroidalTriple(t) => asteroidal_paths(g, *t).into_iter().flatten().collect(),
            Witness::Degree(v) => {
                let mut s = vec![*v];
                s.extend(g.neighbors(*v).iter().take(3));
                s
            }
            Witness::Disconnected(a, b) => vec![*a, *b],
        };
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionReport {
    pub class: GraphClass,
    pub verdict: bool,
    pub certificate: Option<Certificate>,
    pub witness: Option<Witness>,
}

impl RecognitionReport {
    fn yes(class: GraphClass, cert: Certificate) -> Self {
        RecognitionReport { class, verdict: true, certificate: Some(cert), witness: None }
    }

    fn no(class: GraphClass, witness: Witness) -> Self {
        RecognitionReport { class, verdict: false, certificate: None, witness: Some(witness) }
    }

    fn relabel(mut self, class: GraphClass) -> Self {
        self.class = class;
        self
    }

    /// Key/value lines of the text form: `VERDICT`, then `CERT` or `WITNESS`.
    pub fn lines(&self) -> Vec<(String, String)> {
        let mut out = vec![("VERDICT".to_string(), self.verdict.to_string())];
        if let Some(c) = &self.certificate {
            let v = match c {
                Certificate::EliminationOrder(o) => format!("order {}", join(o)),
                Certificate::Spines(s) => format!("spine {}", s.iter().map(|p| join(p)).collect::<Vec<_>>().join(" | ")),
                Certificate::Paths(p) => format!("paths {}", p.iter().map(|p| join(p)).collect::<Vec<_>>().join(" | ")),
            };
            out.push(("CERT".into(), v.trim_end().to_string()));
        }
        if let Some(w) = &self.witness {
            let v = match w {
                Witness::InducedCycle(c) => format!("cycle {}", join(c)),
                Witness::Pattern { pattern, map } => format!("{pattern} {}", join(map)),
                Witness::AsteroidalTriple(t) => format!("asteroidal-triple {}", join(t)),
                Witness::Degree(v) => format!("degree {v}"),
                Witness::Disconnected(a, b) => format!("disconnected {a} {b}"),
            };
            out.push(("WITNESS".into(), v));
        }
        out
    }
}

pub(crate) fn join(vs: &[usize]) -> String {
    vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn recognize(g: &Graph, class: GraphClass) -> RecognitionReport {
    match class {
        GraphClass::Chordal => is_chordal(g),
        GraphClass::Interval => is_interval(g),
        GraphClass::UnitInterval => is_unit_interval(g),
        GraphClass::CaterpillarForest => is_caterpillar_forest(g),
        GraphClass::UnionOfPaths => is_union_of_paths(g),
        GraphClass::Forest => is_forest(g),
        GraphClass::Tree => is_tree(g),
    }
}

/// Membership only; skips witness extraction where that is the expensive part.
pub fn is_member(g: &Graph, class: GraphClass) -> bool {
    match class {
        GraphClass::Chordal => peo_failure(g, &mcs_elimination_order(g)).is_none(),
        GraphClass::UnionOfPaths => g.max_degree() <= 2 && g.cyclomatic_number() == 0,
        GraphClass::Forest => g.cyclomatic_number() == 0,
        GraphClass::Tree => g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected(),
        _ => recognize(g, class).verdict,
    }
}

/// Elimination order from maximum cardinality search: the reverse of the visit order.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut buckets: Vec<Vec<usize>> = vec![(0..n).rev().collect()];
    let mut top = 0usize;
    let mut visit = Vec::with_capacity(n);
    while visit.len() < n {
        let v = loop {
            match buckets[top].pop() {
                Some(v) if !numbered[v] && weight[v] == top => break v,
                Some(_) => {}
                None => top -= 1,
            }
        };
        numbered[v] = true;
        visit.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
                let k = weight[w];
                if buckets.len() <= k {
                    buckets.resize(k + 1, Vec::new());
                }
                buckets[k].push(w);
                top = top.max(k);
            }
        }
    }
    visit.reverse();
    visit
}

/// First vertex (in `order`) whose later neighborhood is not a clique, with
/// two non-adjacent later neighbors.
pub fn peo_failure(g: &Graph, order: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else { continue };
        if let Some(&w) = later.iter().find(|&&w| w != parent && !g.has_edge(parent, w)) {
            return Some((v, parent.min(w), parent.max(w)));
        }
    }
    None
}

/// Checks that `order` is a permutation and a perfect elimination ordering.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut seen = vec![false; g.n()];
    if order.len() != g.n() {
        return false;
    }
    for &v in order {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] > pos[v]).collect();
        later.iter().enumerate().all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Shortest chordless cycle through `v` that uses two non-adjacent neighbors of `v`.
fn shortest_induced_cycle_through(g: &Graph, v: usize) -> Option<Vec<usize>> {
    let nb = g.neighbors(v);
    let mut best: Option<Vec<usize>> = None;
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if g.has_edge(x, y) {
                continue;
            }
            let allowed = |w: usize| w != v && (w == y || !g.has_edge(v, w));
            if let Some(path) = g.shortest_path_within(x, y, allowed) {
                let mut cycle = vec![v];
                cycle.extend(path);
                let cycle = normalize_cycle(cycle);
                let better = match &best {
                    None => true,
                    Some(b) => (cycle.len(), &cycle) < (b.len(), b),
                };
                if better {
                    best = Some(cycle);
                }
            }
        }
    }
    best
}

/// Rotates a cycle to start at its smallest vertex, walking toward the
/// smaller of that vertex's two cycle neighbors.
pub(crate) fn normalize_cycle(mut c: Vec<usize>) -> Vec<usize> {
    if let Some(pos) = (0..c.len()).min_by_key(|&i| c[i]) {
        c.rotate_left(pos);
        if c.len() > 2 && c[c.len() - 1] < c[1] {
            c[1..].reverse();
        }
    }
    c
}

pub fn is_chordal(g: &Graph) -> RecognitionReport {
    let order = mcs_elimination_order(g);
    match peo_failure(g, &order) {
        None => RecognitionReport::yes(GraphClass::Chordal, Certificate::EliminationOrder(order)),
        Some((v, _, _)) => {
            let cycle = shortest_induced_cycle_through(g, v)
                .or_else(|| (0..g.n()).find_map(|u| shortest_induced_cycle_through(g, u)))
                .expect("a graph without perfect elimination ordering has a chordless cycle");
            RecognitionReport::no(GraphClass::Chordal, Witness::InducedCycle(cycle))
        }
    }
}

/// For each vertex `z`, the component id of every vertex in `G - N[z]`
/// (`usize::MAX` for vertices of `N[z]`).
fn avoidance_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    (0..n)
        .map(|z| {
            let mut comp = vec![usize::MAX; n];
            let mut blocked = vec![false; n];
            blocked[z] = true;
            for &w in g.neighbors(z) {
                blocked[w] = true;
            }
            let mut next = 0;
            let mut stack = Vec::new();
            for s in 0..n {
                if blocked[s] || comp[s] != usize::MAX {
                    continue;
                }
                comp[s] = next;
                stack.push(s);
                while let Some(u) = stack.pop() {
                    for &w in g.neighbors(u) {
                        if !blocked[w] && comp[w] == usize::MAX {
                            comp[w] = next;
                            stack.push(w);
                        }
                    }
                }
                next += 1;
            }
            comp
        })
        .collect()
}

/// Lexicographically least asteroidal triple, if any.
pub fn find_asteroidal_triple(g: &Graph) -> Option<[usize; 3]> {
    let n = g.n();
    let comp = avoidance_components(g);
    let linked = |a: usize, b: usize, z: usize| comp[z][a] != usize::MAX && comp[z][a] == comp[z][b];
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if linked(a, b, c) && linked(a, c, b) && linked(b, c, a) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// For a triple `[a, b, c]`, shortest paths a-b avoiding N[c], a-c avoiding
/// N[b], and b-c avoiding N[a]. Missing paths are omitted.
pub fn asteroidal_paths(g: &Graph, t: [usize; 3]) -> Vec<Vec<usize>> {
    let [a, b, c] = t;
    [(a, b, c), (a, c, b), (b, c, a)]
        .into_iter()
        .filter_map(|(x, y, z)| g.shortest_path_within(x, y, |w| w != z && !g.has_edge(z, w)))
        .collect()
}

pub fn is_asteroidal_triple(g: &Graph, t: [usize; 3]) -> bool {
    let [a, b, c] = t;
    a != b
        && b != c
        && a != c
        && !g.has_edge(a, b)
        && !g.has_edge(a, c)
        && !g.has_edge(b, c)
        && asteroidal_paths(g, t).len() == 3
}

pub fn is_interval(g: &Graph) -> RecognitionReport {
    let chordal = is_chordal(g);
    if !chordal.verdict {
        return chordal.relabel(GraphClass::Interval);
    }
    match find_asteroidal_triple(g) {
        Some(t) => RecognitionReport::no(GraphClass::Interval, Witness::AsteroidalTriple(t)),
        None => chordal.relabel(GraphClass::Interval),
    }
}

pub fn is_unit_interval(g: &Graph) -> RecognitionReport {
    let chordal = is_chordal(g);
    if !chordal.verdict {
        return chordal.relabel(GraphClass::UnitInterval);
    }
    for pattern in [Pattern::Claw, Pattern::Net, Pattern::Tent] {
        if let Some(map) = find_induced(g, pattern) {
            return RecognitionReport::no(GraphClass::UnitInterval, Witness::Pattern { pattern, map });
        }
    }
    chordal.relabel(GraphClass::UnitInterval)
}

/// A shortest cycle (always chordless), listed from its smallest vertex.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let girth = g.girth()?;
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x > v).collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if girth == 3 {
                    if g.has_edge(x, y) {
                        return Some(vec![v, x, y]);
                    }
                    continue;
                }
                if let Some(path) = g.shortest_path_within(x, y, |w| w > v) {
                    if path.len() + 1 == girth {
                        let mut c = vec![v];
                        c.extend(path);
                        return Some(c);
                    }
                }
            }
        }
    }
    unreachable!("girth reported a cycle")
}

/// Peels leaves; for a forest this is a perfect elimination ordering.
fn leaf_peeling_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<usize> = (0..n).rev().filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] <= 1 {
                    stack.push(w);
                }
            }
        }
    }
    order
}

pub fn is_forest(g: &Graph) -> RecognitionReport {
    if g.cyclomatic_number() > 0 {
        let c = shortest_cycle(g).expect("positive cyclomatic number implies a cycle");
        return RecognitionReport::no(GraphClass::Forest, Witness::InducedCycle(c));
    }
    RecognitionReport::yes(GraphClass::Forest, Certificate::EliminationOrder(leaf_peeling_order(g)))
}

pub fn is_tree(g: &Graph) -> RecognitionReport {
    let forest = is_forest(g);
    if !forest.verdict {
        return forest.relabel(GraphClass::Tree);
    }
    let cc = g.components();
    if cc.len() != 1 {
        if cc.is_empty() {
            // the empty graph is not a tree; report it as disconnected from nothing
            return RecognitionReport { class: GraphClass::Tree, verdict: false, certificate: None, witness: None };
        }
        return RecognitionReport::no(GraphClass::Tree, Witness::Disconnected(cc.vertices[0][0], cc.vertices[1][0]));
    }
    forest.relabel(GraphClass::Tree)
}

pub fn is_caterpillar_forest(g: &Graph) -> RecognitionReport {
    let forest = is_forest(g);
    if !forest.verdict {
        return forest.relabel(GraphClass::CaterpillarForest);
    }
    let inner = |v: usize| g.degree(v) >= 2;
    for v in 0..g.n() {
        let big: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| inner(w)).collect();
        if big.len() >= 3 {
            let mut map = vec![v];
            for &a in &big[..3] {
                let tip = *g.neighbors(a).iter().find(|&&x| x != v).unwrap();
                map.push(a);
                map.push(tip);
            }
            return RecognitionReport::no(
                GraphClass::CaterpillarForest,
                Witness::Pattern { pattern: Pattern::T2, map },
            );
        }
    }
    let spines = g
        .components()
        .vertices
        .iter()
        .map(|comp| {
            let spine: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) != 1).collect();
            order_path(g, &spine)
        })
        .collect();
    RecognitionReport::yes(GraphClass::CaterpillarForest, Certificate::Spines(spines))
}

/// Orders a vertex set that induces a path, starting from its smaller end.
fn order_path(g: &Graph, vs: &[usize]) -> Vec<usize> {
    if vs.len() <= 1 {
        return vs.to_vec();
    }
    let inside = |w: usize| vs.binary_search(&w).is_ok();
    let inner_deg = |v: usize| g.neighbors(v).iter().filter(|&&w| inside(w)).count();
    let start = *vs.iter().find(|&&v| inner_deg(v) <= 1).expect("path has an end");
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev && inside(w)) {
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

pub fn is_union_of_paths(g: &Graph) -> RecognitionReport {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 2) {
        return RecognitionReport::no(GraphClass::UnionOfPaths, Witness::Degree(v));
    }
    let forest = is_forest(g);
    if !forest.verdict {
        return forest.relabel(GraphClass::UnionOfPaths);
    }
    let paths = g.components().vertices.iter().map(|c| order_path(g, c)).collect();
    RecognitionReport::yes(GraphClass::UnionOfPaths, Certificate::Paths(paths))
}

/// Lexicographically least induced occurrence of `pattern` as a map from
/// pattern vertices to vertices of `g`.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    let p = pattern.graph();
    find_induced_graph(g, &p)
}

/// Induced subgraph isomorphism by backtracking in pattern-vertex order.
/// Each pattern vertex after the first must have an earlier neighbor, or the
/// search falls back to scanning all host vertices.
pub fn find_induced_graph(g: &Graph, p: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    visit_induced(g, p, &mut |map| {
        found = Some(map.to_vec());
        true
    });
    found
}

/// Induced occurrences of `p` in lexicographic order, one per vertex set, at
/// most `limit` of them.
pub fn find_induced_all(g: &Graph, p: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    visit_induced(g, p, &mut |map| {
        let mut set = map.to_vec();
        set.sort_unstable();
        if seen.insert(set) {
            out.push(map.to_vec());
        }
        out.len() >= limit
    });
    out
}

/// Calls `visit` on every induced occurrence until it returns true.
fn visit_induced(g: &Graph, p: &Graph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    if p.n() > g.n() {
        return;
    }
    let mut map = Vec::with_capacity(p.n());
    let mut used = vec![false; g.n()];
    extend_map(g, p, &mut map, &mut used, visit);
}

fn extend_map(g: &Graph, p: &Graph, map: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let i = map.len();
    if i == p.n() {
        return visit(map);
    }
    let anchor = p.neighbors(i).iter().copied().find(|&j| j < i);
    let all: Vec<usize>;
    let candidates: &[usize] = match anchor {
        Some(j) => g.neighbors(map[j]),
        None => {
            all = (0..g.n()).collect();
            &all
        }
    };
    for &x in candidates {
        if used[x] || g.degree(x) < p.degree(i) {
            continue;
        }
        if (0..i).any(|j| p.has_edge(i, j) != g.has_edge(x, map[j])) {
            continue;
        }
        used[x] = true;
        map.push(x);
        let stop = extend_map(g, p, map, used, visit);
        map.pop();
        used[x] = false;
        if stop {
            return true;
        }
    }
    false
}

/// Whether `map` is an induced occurrence of `p` in `g`.
pub fn is_induced_occurrence(g: &Graph, p: &Graph, map: &[usize]) -> bool {
    if map.len() != p.n() || map.iter().any(|&x| x >= g.n()) {
        return false;
    }
    let mut sorted = map.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != map.len() {
        return false;
    }
    (0..p.n()).all(|i| (i + 1..p.n()).all(|j| p.has_edge(i, j) == g.has_edge(map[i], map[j])))
}

pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    cycle.len() >= 3 && is_induced_occurrence(g, &Pattern::Cycle(cycle.len()).graph(), cycle)
}

pub fn verify_certificate(g: &Graph, class: GraphClass, cert: &Certificate) -> bool {
    match cert {
        Certificate::EliminationOrder(order) => {
            if !is_perfect_elimination_order(g, order) {
                return false;
            }
            match class {
                GraphClass::Chordal => true,
                GraphClass::Forest => g.cyclomatic_number() == 0,
                GraphClass::Tree => g.cyclomatic_number() == 0 && g.is_connected() && g.n() > 0,
                GraphClass::Interval => find_asteroidal_triple(g).is_none(),
                GraphClass::UnitInterval => [Pattern::Claw, Pattern::Net, Pattern::Tent]
                    .iter()
                    .all(|&p| find_induced(g, p).is_none()),
                _ => false,
            }
        }
        Certificate::Spines(spines) => {
            if class != GraphClass::CaterpillarForest || g.cyclomatic_number() != 0 {
                return false;
            }
            let cc = g.components();
            spines.len() == cc.len()
                && spines.iter().zip(&cc.vertices).all(|(spine, comp)| {
                    let path_ok = spine.windows(2).all(|w| g.has_edge(w[0], w[1]));
                    let on_spine = |v: usize| spine.contains(&v);
                    let dominated = comp
                        .iter()
                        .all(|&v| on_spine(v) || g.neighbors(v).iter().any(|&w| on_spine(w)) || spine.is_empty());
                    let rest_are_leaves = comp.iter().all(|&v| on_spine(v) || g.degree(v) <= 1);
                    path_ok && dominated && rest_are_leaves && (!spine.is_empty() || comp.len() <= 2)
                })
        }
        Certificate::Paths(paths) => {
            if class != GraphClass::UnionOfPaths {
                return false;
            }
            let total: usize = paths.iter().map(Vec::len).sum();
            let edges: usize = paths.iter().map(|p| p.len().saturating_sub(1)).sum();
            total == g.n()
                && edges == g.m()
                && paths.iter().all(|p| p.windows(2).all(|w| g.has_edge(w[0], w[1])))
        }
    }
}

pub fn verify_witness(g: &Graph, class: GraphClass, witness: &Witness) -> bool {
    match witness {
        Witness::InducedCycle(c) => {
            let min_len = if class.is_acyclic() { 3 } else { 4 };
            c.len() >= min_len && is_induced_cycle(g, c)
        }
        Witness::Pattern { pattern, map } => is_induced_occurrence(g, &pattern.graph(), map),
        Witness::AsteroidalTriple(t) => is_asteroidal_triple(g, *t),
        Witness::Degree(v) => *v < g.n() && g.degree(*v) > 2,
        Witness::Disconnected(a, b) => {
            let cc = g.components();
            *a < g.n() && *b < g.n() && cc.component[*a] != cc.component[*b]
        }
    }
}

/// Checks whichever of certificate / witness the report carries.
pub fn verify_report(g: &Graph, report: &RecognitionReport) -> bool {
    match (report.verdict, &report.certificate, &report.witness) {
        (true, Some(c), None) => verify_certificate(g, report.class, c),
        (false, None, Some(w)) => verify_witness(g, report.class, w),
        (false, None, None) => g.n() == 0 && report.class == GraphClass::Tree,
        _ => false,
    }
}
