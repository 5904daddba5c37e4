//! The Hamiltonian path reduction to exclusive splitting into interval graphs.
//!
//! A connected cubic graph `G` on `n` vertices has a Hamiltonian path exactly
//! when its one-time subdivision `G'` becomes interval after `n/2 + 1`
//! exclusive splits. Both directions are constructive here.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{is_caterpillar_forest, is_member, Certificate, GraphClass};
use crate::splitting::{apply_sequence, Split, SplitSequence};

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub source: Graph,
    /// Subdivision: ids `0..n` are the original vertices `u_i`, id `n + t` is
    /// the vertex on the `t`-th source edge in sorted order.
    pub graph: Graph,
    pub budget: usize,
}

impl ReductionInstance {
    /// Source edge subdivided by vertex `id` of the reduced graph, if any.
    pub fn edge_of(&self, id: usize) -> Option<(usize, usize)> {
        let n = self.source.n();
        (id >= n).then(|| self.source.edge_list().get(id - n).copied()).flatten()
    }
}

/// Replaces every edge `ij` by a path `u_i – u_ij – u_j`. Labels are 1-based:
/// `u1`, …, and `u1,2` for the vertex on edge `(0, 1)`.
pub fn subdivide_once(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edge_list();
    let mut e = Vec::with_capacity(2 * edges.len());
    let mut labels: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    for (t, &(i, j)) in edges.iter().enumerate() {
        e.push((i, n + t));
        e.push((n + t, j));
        labels.push(format!("u{},{}", i + 1, j + 1));
    }
    Graph::new(n + edges.len(), &e)
        .and_then(|h| h.with_labels(labels))
        .expect("subdivision of a simple graph is simple")
}

pub fn reduce_hampath_to_ivxs(g: &Graph) -> Result<ReductionInstance> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(Error::Precondition(format!("vertex {v} has degree {}, the input must be cubic", g.degree(v))));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("the input must be connected".into()));
    }
    Ok(ReductionInstance { source: g.clone(), graph: subdivide_once(g), budget: g.n() / 2 + 1 })
}

fn check_hamiltonian(g: &Graph, path: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in path {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::Precondition(format!("vertex {v} repeated or out of range")));
        }
    }
    if path.len() != g.n() {
        return Err(Error::Precondition(format!("path has {} vertices, expected {}", path.len(), g.n())));
    }
    if let Some(w) = path.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
        return Err(Error::Precondition(format!("{} and {} are not adjacent", w[0], w[1])));
    }
    Ok(())
}

/// Splits every subdivision vertex off the path into two pendant copies.
pub fn forward_witness(inst: &ReductionInstance, hampath: &[usize]) -> Result<SplitSequence> {
    check_hamiltonian(&inst.source, hampath)?;
    let n = inst.source.n();
    let mut on_path: Vec<(usize, usize)> = hampath.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
    on_path.sort_unstable();
    Ok(inst
        .source
        .edge_list()
        .into_iter()
        .enumerate()
        .filter(|(_, e)| on_path.binary_search(e).is_err())
        .map(|(t, (i, j))| Split::new(n + t, vec![i], vec![j]))
        .collect())
}

/// Reads a Hamiltonian path of the source off a solution: the result is a
/// caterpillar, and its spine, extended at both ends by a leaf copy of an
/// original vertex, visits the original vertices in path order.
pub fn extract_hampath(inst: &ReductionInstance, seq: &SplitSequence) -> Result<Vec<usize>> {
    if !seq.is_exclusive() || seq.len() > inst.budget {
        return Err(Error::Precondition(format!(
            "expected at most {} exclusive splits, got {} ({})",
            inst.budget,
            seq.len(),
            if seq.is_exclusive() { "exclusive" } else { "inclusive" }
        )));
    }
    let (t, map) = apply_sequence(&inst.graph, seq)?;
    if !is_member(&t, GraphClass::Interval) {
        return Err(Error::Precondition("the sequence does not produce an interval graph".into()));
    }
    if !(t.is_connected() && t.m() + 1 == t.n()) {
        return Err(Error::Internal("interval solution is not a tree".into()));
    }
    let report = is_caterpillar_forest(&t);
    let Some(Certificate::Spines(spines)) = report.certificate else {
        return Err(Error::Internal("interval tree is not a caterpillar".into()));
    };
    let n = inst.source.n();
    let origin = |x: usize| map.origin[x];
    let mut spine = spines.into_iter().next().unwrap_or_default();
    if spine.is_empty() {
        return Err(Error::Internal("caterpillar has no spine".into()));
    }
    // leaf copies of original vertices hanging off the spine ends
    let leaf_end = |end: usize, taken: Option<usize>| {
        t.neighbors(end)
            .iter()
            .copied()
            .filter(|&x| t.degree(x) == 1 && origin(x) < n && Some(x) != taken)
            .min_by_key(|&x| (origin(x), x))
    };
    let head = leaf_end(spine[0], None);
    let tail = leaf_end(*spine.last().unwrap(), head);
    if let Some(h) = head {
        spine.insert(0, h);
    }
    if let Some(x) = tail {
        spine.push(x);
    }

    let mut order: Vec<usize> = Vec::with_capacity(n);
    for &x in &spine {
        let o = origin(x);
        if o < n && order.last() != Some(&o) {
            order.push(o);
        }
    }
    if check_hamiltonian(&inst.source, &order).is_ok() {
        return Ok(order);
    }
    // every original vertex at the spine position of its first copy
    let mut position = vec![usize::MAX; t.n()];
    for (i, &x) in spine.iter().enumerate() {
        position[x] = 2 * i;
        for &y in t.neighbors(x) {
            if position[y] == usize::MAX {
                position[y] = 2 * i + 1;
            }
        }
    }
    let mut first = vec![usize::MAX; n];
    for x in 0..t.n() {
        let o = origin(x);
        if o < n {
            first[o] = first[o].min(position[x]);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (first[v], v));
    check_hamiltonian(&inst.source, &order)
        .map(|_| order)
        .map_err(|e| Error::Internal(format!("extracted order is not a Hamiltonian path: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cubic_sample, cycle};
    use crate::recognition::{is_caterpillar_forest, Certificate};

    #[test]
    fn subdivision_counts() {
        let k4 = cubic_sample("k4").unwrap();
        let h = subdivide_once(&k4);
        assert_eq!((h.n(), h.m()), (10, 12));
        assert!(h.is_bipartite().is_bipartite());
        assert_eq!(h.max_degree(), 3);
        assert_eq!(h.label(4), "u1,2");
        assert_eq!(subdivide_once(&cycle(3).unwrap()), cycle(6).unwrap().induced(&[0, 2, 4, 1, 5, 3]));
    }

    #[test]
    fn budgets() {
        let inst = reduce_hampath_to_ivxs(&cubic_sample("fig2").unwrap()).unwrap();
        assert_eq!(inst.budget, 4);
        assert_eq!(inst.graph.n(), 15);
        assert_eq!(inst.edge_of(6), Some((0, 1)));
        assert_eq!(inst.edge_of(7), Some((0, 2)));
        assert_eq!(inst.edge_of(2), None);
        let inst = reduce_hampath_to_ivxs(&cubic_sample("k4").unwrap()).unwrap();
        assert_eq!((inst.budget, inst.graph.n()), (3, 10));
        assert!(matches!(reduce_hampath_to_ivxs(&cycle(4).unwrap()), Err(Error::Precondition(_))));
        let two = cubic_sample("k4").unwrap().disjoint_union(&cubic_sample("k4").unwrap());
        assert!(matches!(reduce_hampath_to_ivxs(&two), Err(Error::Precondition(_))));
    }

    #[test]
    fn fig2_forward_witness_gives_nineteen_vertex_caterpillar() {
        let inst = reduce_hampath_to_ivxs(&cubic_sample("fig2").unwrap()).unwrap();
        let seq = forward_witness(&inst, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(seq.len(), 4);
        assert!(seq.is_exclusive());
        let (t, _) = apply_sequence(&inst.graph, &seq).unwrap();
        assert_eq!(t.n(), 19);
        assert_eq!(t.m(), inst.graph.m());
        let r = is_caterpillar_forest(&t);
        // u1, u1,2, u2, …, u6
        let spine: Vec<String> = match r.certificate {
            Some(Certificate::Spines(s)) => s[0].iter().map(|&v| t.label(v)).collect(),
            _ => panic!("not a caterpillar"),
        };
        let expected = ["u1", "u1,2", "u2", "u2,3", "u3", "u3,4", "u4", "u4,5", "u5", "u5,6", "u6"];
        assert_eq!(spine, expected);
        assert_eq!(extract_hampath(&inst, &seq).unwrap(), vec![0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn k4_round_trip() {
        let inst = reduce_hampath_to_ivxs(&cubic_sample("k4").unwrap()).unwrap();
        let seq = forward_witness(&inst, &[0, 1, 2, 3]).unwrap();
        assert_eq!(seq.len(), 3);
        let p = extract_hampath(&inst, &seq).unwrap();
        assert_eq!(p.len(), 4);
        assert!(matches!(forward_witness(&inst, &[0, 1, 2]), Err(Error::Precondition(_))));
        assert!(matches!(forward_witness(&inst, &[0, 1, 1, 2]), Err(Error::Precondition(_))));
    }

    #[test]
    fn failing_sequences_are_rejected() {
        let inst = reduce_hampath_to_ivxs(&cubic_sample("k4").unwrap()).unwrap();
        assert!(matches!(extract_hampath(&inst, &SplitSequence::new()), Err(Error::Precondition(_))));
        let inclusive = SplitSequence(vec![Split::new(0, vec![4, 5], vec![5, 6])]);
        assert!(matches!(extract_hampath(&inst, &inclusive), Err(Error::Precondition(_))));
    }
}
