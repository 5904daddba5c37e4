//! Vertex splitting.
//!
//! Splitting `v` with parts `(A, B)`, where `A ∪ B = N(v)`, replaces `v` by two
//! non-adjacent copies: the first keeps the id `v` and is adjacent to `A`, the
//! second gets the next fresh id and is adjacent to `B`. A split is exclusive
//! when `A ∩ B = ∅`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{recognize, GraphClass, RecognitionReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Split {
    pub target: usize,
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

impl Split {
    /// Parts are sorted and deduplicated.
    pub fn new(target: usize, part_a: impl Into<Vec<usize>>, part_b: impl Into<Vec<usize>>) -> Split {
        let mut part_a = part_a.into();
        let mut part_b = part_b.into();
        part_a.sort_unstable();
        part_a.dedup();
        part_b.sort_unstable();
        part_b.dedup();
        Split { target, part_a, part_b }
    }

    pub fn is_exclusive(&self) -> bool {
        self.overlap().is_empty()
    }

    /// `A ∩ B`, sorted.
    pub fn overlap(&self) -> Vec<usize> {
        self.part_a.iter().copied().filter(|x| self.part_b.binary_search(x).is_ok()).collect()
    }
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &[usize]| p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let a = side(&self.part_a);
        let b = side(&self.part_b);
        // blank sides stay blank: `3 :  | 1,2` would not round-trip through trim
        let a = if a.is_empty() { String::new() } else { format!(" {a}") };
        let b = if b.is_empty() { String::new() } else { format!(" {b}") };
        write!(f, "{} :{a} |{b}", self.target)
    }
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Split> {
        let bad = |msg: &str| Error::Parse { line: 0, msg: format!("{msg} in `{s}`") };
        let (target, rest) = s.split_once(':').ok_or_else(|| bad("missing `:`"))?;
        let (a, b) = rest.split_once('|').ok_or_else(|| bad("missing `|`"))?;
        let target = target.trim().parse().map_err(|_| bad("bad target"))?;
        let side = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| bad("bad vertex id")))
                .collect()
        };
        Ok(Split::new(target, side(a)?, side(b)?))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SplitSequence(pub Vec<Split>);

impl SplitSequence {
    pub fn new() -> Self {
        SplitSequence(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Split> {
        self.0.iter()
    }

    pub fn push(&mut self, s: Split) {
        self.0.push(s);
    }

    pub fn is_exclusive(&self) -> bool {
        self.0.iter().all(Split::is_exclusive)
    }

    /// Parses the one-split-per-line text form; `#` starts a comment.
    pub fn parse(text: &str) -> Result<SplitSequence> {
        let mut seq = SplitSequence::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let split = line.parse::<Split>().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
                other => other,
            })?;
            seq.push(split);
        }
        Ok(seq)
    }

    pub fn to_text(&self) -> String {
        self.0.iter().map(|s| format!("{s}\n")).collect()
    }
}

impl FromIterator<Split> for SplitSequence {
    fn from_iter<I: IntoIterator<Item = Split>>(iter: I) -> Self {
        SplitSequence(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a SplitSequence {
    type Item = &'a Split;
    type IntoIter = std::slice::Iter<'a, Split>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

pub fn is_exclusive(seq: &SplitSequence) -> bool {
    seq.is_exclusive()
}

/// Original vertex → its current copies, and the reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescendantMap {
    pub descendants: Vec<Vec<usize>>,
    pub origin: Vec<usize>,
}

impl DescendantMap {
    pub fn identity(n: usize) -> Self {
        DescendantMap { descendants: (0..n).map(|v| vec![v]).collect(), origin: (0..n).collect() }
    }

    /// Original vertices that were split at least once.
    pub fn split_vertices(&self) -> Vec<usize> {
        (0..self.descendants.len()).filter(|&v| self.descendants[v].len() > 1).collect()
    }
}

/// Mutable adjacency used to apply many splits without rebuilding a [`Graph`]
/// after each one. Neighbor lists stay sorted: new ids are always the largest.
pub(crate) struct SplitState {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    label_roots: HashMap<String, usize>,
    map: DescendantMap,
}

impl SplitState {
    pub(crate) fn new(g: &Graph) -> Self {
        let labels = g.labels().map(<[String]>::to_vec);
        let mut label_roots = HashMap::new();
        if let Some(l) = &labels {
            for name in l {
                *label_roots.entry(label_root(name).to_string()).or_insert(0) += 1;
            }
        }
        SplitState { adj: g.adjacency().to_vec(), labels, label_roots, map: DescendantMap::identity(g.n()) }
    }

    pub(crate) fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub(crate) fn apply(&mut self, s: &Split) -> Result<usize> {
        let v = s.target;
        let n = self.adj.len();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let nv = &self.adj[v];
        let covers = nv.iter().all(|x| s.part_a.binary_search(x).is_ok() || s.part_b.binary_search(x).is_ok());
        let within = s.part_a.iter().chain(&s.part_b).all(|x| nv.binary_search(x).is_ok());
        if !covers || !within {
            return Err(Error::InvalidSplit { vertex: v });
        }
        let copy = n;
        let old = std::mem::replace(&mut self.adj[v], s.part_a.clone());
        self.adj.push(s.part_b.clone());
        for w in old {
            let in_a = s.part_a.binary_search(&w).is_ok();
            let in_b = s.part_b.binary_search(&w).is_ok();
            let list = &mut self.adj[w];
            if !in_a {
                let pos = list.binary_search(&v).expect("adjacency is symmetric");
                list.remove(pos);
            }
            if in_b {
                list.push(copy);
            }
        }
        let origin = self.map.origin[v];
        self.map.origin.push(origin);
        self.map.descendants[origin].push(copy);
        if let Some(labels) = &mut self.labels {
            let root = label_root(&labels[v]).to_string();
            let count = self.label_roots.entry(root.clone()).or_insert(1);
            *count += 1;
            labels.push(format!("{root}#{count}"));
        }
        Ok(copy)
    }

    pub(crate) fn finish(self) -> (Graph, DescendantMap) {
        let mut g = Graph::from_sorted_adjacency(self.adj);
        g.set_labels(self.labels);
        (g, self.map)
    }
}

fn label_root(name: &str) -> &str {
    name.split('#').next().unwrap_or(name)
}

pub fn apply_split(g: &Graph, s: &Split) -> Result<Graph> {
    let mut state = SplitState::new(g);
    state.apply(s)?;
    Ok(state.finish().0)
}

pub fn apply_sequence(g: &Graph, seq: &SplitSequence) -> Result<(Graph, DescendantMap)> {
    let mut state = SplitState::new(g);
    for (index, s) in seq.iter().enumerate() {
        state.apply(s).map_err(|e| Error::InvalidSequence { index, source: Box::new(e) })?;
    }
    Ok(state.finish())
}

/// Applies `seq` and recognizes the result.
pub fn verify(g: &Graph, seq: &SplitSequence, target: GraphClass) -> Result<(bool, RecognitionReport)> {
    let (h, _) = apply_sequence(g, seq)?;
    let report = recognize(&h, target);
    Ok((report.verdict, report))
}

/// Replaces each edge deletion `xy` by the split `(x, {y}, N(x) \ {y})`: the
/// copy keeping the id of `x` becomes a pendant of `y`, and the rest of the
/// neighborhood moves to the fresh copy. Deletions name original vertices;
/// later splits address whichever copy currently carries the remaining edges.
pub fn edge_deletions_to_splits(g: &Graph, deletions: &[(usize, usize)]) -> Result<SplitSequence> {
    let mut state = SplitState::new(g);
    let mut main: Vec<usize> = (0..g.n()).collect();
    let mut seq = SplitSequence::new();
    for &(x, y) in deletions {
        if x >= g.n() || y >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: x.max(y), n: g.n() });
        }
        let (mx, my) = (main[x], main[y]);
        if state.neighbors(mx).binary_search(&my).is_err() {
            return Err(Error::MissingEdge(x, y));
        }
        let rest: Vec<usize> = state.neighbors(mx).iter().copied().filter(|&w| w != my).collect();
        let s = Split::new(mx, vec![my], rest);
        main[x] = state.apply(&s)?;
        seq.push(s);
    }
    Ok(seq)
}

/// Turns a split sequence on a triangle-free graph into an exclusive one of the
/// same length reaching the same target class.
///
/// Works backwards from the last non-exclusive split `(v, A, B)`: it becomes
/// `(v, A, B \ A)`, and every later split drops the parts that would keep an
/// edge between the descendants of the second copy and the descendants of
/// `A ∩ B`. The result is a subgraph of the original outcome, and on
/// triangle-free inputs the three target classes are closed under subgraphs.
pub fn make_exclusive(g: &Graph, seq: &SplitSequence, target: GraphClass) -> Result<SplitSequence> {
    if !matches!(target, GraphClass::Chordal | GraphClass::Interval | GraphClass::UnitInterval) {
        return Err(Error::Precondition(format!("make_exclusive does not handle target {target}")));
    }
    if let Some(t) = g.find_triangle() {
        return Err(Error::Precondition(format!("input graph has triangle {t:?}")));
    }
    let (result, _) = apply_sequence(g, seq)?;
    if !recognize(&result, target).verdict {
        return Err(Error::Precondition(format!("the input sequence does not reach a {target} graph")));
    }

    let n0 = g.n();
    let parent: Vec<usize> = seq.iter().map(|s| s.target).collect();
    let mut splits = seq.0.clone();
    while let Some(i) = splits.iter().rposition(|s| !s.is_exclusive()) {
        // ancestor among the vertices present right after split i
        let ancestor = |mut x: usize| {
            while x > n0 + i {
                x = parent[x - n0];
            }
            x
        };
        let second_copy = n0 + i;
        let overlap = splits[i].overlap();
        let in_overlap = |x: usize| overlap.binary_search(&ancestor(x)).is_ok();
        for s in splits.iter_mut().skip(i + 1) {
            let root = ancestor(s.target);
            if overlap.binary_search(&root).is_ok() {
                s.part_a.retain(|&x| ancestor(x) != second_copy);
                s.part_b.retain(|&x| ancestor(x) != second_copy);
            } else if root == second_copy {
                s.part_a.retain(|&x| !in_overlap(x));
                s.part_b.retain(|&x| !in_overlap(x));
            }
        }
        let s = &mut splits[i];
        let a = s.part_a.clone();
        s.part_b.retain(|x| a.binary_search(x).is_err());
    }

    let out = SplitSequence(splits);
    let (ok, _) = verify(g, &out, target)?;
    if !ok {
        return Err(Error::Internal("exclusive rewrite left the target class".into()));
    }
    Ok(out)
}
