//! Optimal splitting into a disjoint union of paths.
//!
//! A component with `2p` odd-degree vertices splits into `max(p, 1)` trails;
//! splitting every vertex once per trail visit turns each trail into its own
//! path. The resulting count, `Σ(⌈d(v)/2⌉ − 1)` plus one per component that
//! has edges but no odd-degree vertex, is optimal.

use crate::graph::Graph;
use crate::splitting::{Split, SplitSequence, SplitState};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trail {
    pub component: usize,
    /// Consecutive vertices; a closed trail repeats its first vertex at the end.
    pub walk: Vec<usize>,
}

impl Trail {
    pub fn len(&self) -> usize {
        self.walk.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        !self.is_empty() && self.walk.first() == self.walk.last()
    }

    /// Edges in walk order, each as `(min, max)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.walk.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrailPartition {
    /// Grouped by component, in component order.
    pub trails: Vec<Trail>,
}

impl TrailPartition {
    pub fn len(&self) -> usize {
        self.trails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trails.is_empty()
    }

    pub fn count_in_component(&self, component: usize) -> usize {
        self.trails.iter().filter(|t| t.component == component).count()
    }

    /// Number of times each vertex occurs on a trail, counting both ends of a
    /// closed trail. This is the number of copies the splitter makes.
    pub fn visits(&self, n: usize) -> Vec<usize> {
        let mut t = vec![0; n];
        for trail in &self.trails {
            let closed = trail.is_closed();
            let walk = if closed { &trail.walk[..trail.walk.len() - 1] } else { &trail.walk[..] };
            for &v in walk {
                t[v] += 1;
            }
            if closed {
                t[trail.walk[0]] += 1;
            }
        }
        t
    }

    /// Walks are genuine trails of `g` and together use every edge exactly once.
    pub fn is_partition_of(&self, g: &Graph) -> bool {
        let mut used: Vec<(usize, usize)> = Vec::with_capacity(g.m());
        for t in &self.trails {
            if t.is_empty() || t.walk.iter().any(|&v| v >= g.n()) {
                return false;
            }
            for (u, v) in t.edges() {
                if !g.has_edge(u, v) {
                    return false;
                }
                used.push((u, v));
            }
        }
        used.sort_unstable();
        used == g.edge_list()
    }
}

pub fn min_splits_to_paths(g: &Graph) -> usize {
    let cc = g.components();
    let degree_part: usize = (0..g.n()).map(|v| g.degree(v).div_ceil(2).saturating_sub(1)).sum();
    let eulerian = (0..cc.len()).filter(|&c| cc.edge_counts[c] > 0 && cc.odd_degree_counts[c] == 0).count();
    degree_part + eulerian
}

struct EdgeTrail {
    component: usize,
    walk: Vec<usize>,
    edges: Vec<usize>,
}

/// Trails with the ids of their edges in `g.edges()` order.
fn edge_trails(g: &Graph) -> (Vec<(usize, usize)>, Vec<EdgeTrail>) {
    let n = g.n();
    let edge_list = g.edge_list();
    let m = edge_list.len();
    let mut inc: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in edge_list.iter().enumerate() {
        inc[u].push((v, id));
        inc[v].push((u, id));
    }
    let cc = g.components();
    // pair the odd vertices of each component past the first two
    let mut next_id = m;
    let mut starts = Vec::with_capacity(cc.len());
    for c in 0..cc.len() {
        if cc.edge_counts[c] == 0 {
            continue;
        }
        let odd: Vec<usize> = cc.vertices[c].iter().copied().filter(|&v| g.degree(v) % 2 == 1).collect();
        for pair in odd.get(2..).unwrap_or(&[]).chunks(2) {
            inc[pair[0]].push((pair[1], next_id));
            inc[pair[1]].push((pair[0], next_id));
            next_id += 1;
        }
        starts.push((c, odd.first().copied().unwrap_or(cc.vertices[c][0])));
    }

    let mut used = vec![false; next_id];
    let mut ptr = vec![0usize; n];
    let mut trails = Vec::new();
    for (c, start) in starts {
        let mut stack: Vec<(usize, usize)> = vec![(start, usize::MAX)];
        let mut walk = Vec::new();
        let mut edges = Vec::new();
        while let Some(&(v, e_in)) = stack.last() {
            while ptr[v] < inc[v].len() && used[inc[v][ptr[v]].1] {
                ptr[v] += 1;
            }
            if let Some(&(w, e)) = inc[v].get(ptr[v]) {
                used[e] = true;
                stack.push((w, e));
            } else {
                stack.pop();
                walk.push(v);
                if e_in != usize::MAX {
                    edges.push(e_in);
                }
            }
        }
        walk.reverse();
        edges.reverse();
        // cut at the virtual edges
        let mut cur_walk = vec![walk[0]];
        let mut cur_edges = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            if e >= m {
                trails.push(EdgeTrail { component: c, walk: std::mem::take(&mut cur_walk), edges: std::mem::take(&mut cur_edges) });
                cur_walk.push(walk[i + 1]);
            } else {
                cur_edges.push(e);
                cur_walk.push(walk[i + 1]);
            }
        }
        trails.push(EdgeTrail { component: c, walk: cur_walk, edges: cur_edges });
    }
    (edge_list, trails)
}

/// Minimum trail partition: per component, odd-degree vertices are paired in
/// increasing order (first two excepted) by virtual edges, an Euler trail is
/// walked from the smallest odd vertex (or the smallest vertex when there is
/// none), and the trail is cut at the virtual edges.
pub fn trail_partition(g: &Graph) -> TrailPartition {
    let (_, trails) = edge_trails(g);
    TrailPartition { trails: trails.into_iter().map(|t| Trail { component: t.component, walk: t.walk }).collect() }
}

/// Optimal split sequence into a union of paths; every split is exclusive.
pub fn split_sequence_to_paths(g: &Graph) -> SplitSequence {
    let (edge_list, trails) = edge_trails(g);
    // one block of incident trail edges per visit
    let mut blocks: Vec<Vec<Vec<usize>>> = vec![Vec::new(); g.n()];
    for t in &trails {
        let l = t.edges.len();
        for i in 0..=l {
            let mut b = Vec::with_capacity(2);
            if i > 0 {
                b.push(t.edges[i - 1]);
            }
            if i < l {
                b.push(t.edges[i]);
            }
            blocks[t.walk[i]].push(b);
        }
    }
    let mut ends: Vec<[usize; 2]> = edge_list.iter().map(|&(u, v)| [u, v]).collect();
    let mut state = SplitState::new(g);
    let mut seq = SplitSequence::new();
    for v in 0..g.n() {
        if blocks[v].len() > 1 {
            let bs = std::mem::take(&mut blocks[v]);
            peel(v, v, &bs, &edge_list, &mut ends, &mut state, &mut seq);
        }
    }
    seq
}

/// Splits `copy` (a copy of `v` holding exactly the edges of `bs`) into one
/// copy per block, halving each time so parts stay short.
fn peel(
    v: usize,
    copy: usize,
    bs: &[Vec<usize>],
    edge_list: &[(usize, usize)],
    ends: &mut [[usize; 2]],
    state: &mut SplitState,
    seq: &mut SplitSequence,
) {
    if bs.len() < 2 {
        return;
    }
    let side = |e: usize| usize::from(edge_list[e].0 != v);
    let (first, second) = bs.split_at(bs.len() / 2);
    let far = |blocks: &[Vec<usize>], ends: &[[usize; 2]]| -> Vec<usize> {
        blocks.iter().flatten().map(|&e| ends[e][1 - side(e)]).collect()
    };
    let s = Split::new(copy, far(first, ends), far(second, ends));
    let fresh = state.apply(&s).expect("blocks partition the copy's neighborhood");
    seq.push(s);
    for &e in second.iter().flatten() {
        ends[e][side(e)] = fresh;
    }
    peel(v, copy, first, edge_list, ends, state, seq);
    peel(v, fresh, second, edge_list, ends, state, seq);
}
