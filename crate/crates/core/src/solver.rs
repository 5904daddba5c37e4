//! Exact solvers for desk-scale instances, plus independent oracles used to
//! cross-check the recognizers.
//!
//! The split search is iterative deepening over the sequence length. Each node
//! picks a small vertex set `O` inducing a graph outside the target class; some
//! vertex of `O` has to be split eventually, and since the final graph only
//! depends on how many copies each vertex gets and which copies carry which
//! edges, that split can be done first. Branch `i` splits `O`'s `i`-th vertex
//! and freezes the ones before it.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::recognition::{
    find_induced_all, is_induced_cycle, is_member, recognize, shortest_cycle, GraphClass, Pattern,
};
use crate::splitting::{apply_sequence, apply_split, Split, SplitSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SplitMode {
    Inclusive,
    Exclusive,
}

impl fmt::Display for SplitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitMode::Inclusive => "inclusive",
            SplitMode::Exclusive => "exclusive",
        })
    }
}

impl FromStr for SplitMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inclusive" => Ok(SplitMode::Inclusive),
            "exclusive" => Ok(SplitMode::Exclusive),
            _ => Err(Error::Unknown { kind: "split mode", name: s.to_string() }),
        }
    }
}

/// The named modification parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum Param {
    ChVS,
    ChVXS,
    IVS,
    IVXS,
    UIVS,
    UIVXS,
    PVS,
    ChVD,
    ChED,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    Splits(GraphClass, SplitMode),
    VertexDeletion(GraphClass),
    EdgeDeletion(GraphClass),
}

impl Param {
    pub const ALL: [Param; 9] = [
        Param::ChVS,
        Param::ChVXS,
        Param::IVS,
        Param::IVXS,
        Param::UIVS,
        Param::UIVXS,
        Param::PVS,
        Param::ChVD,
        Param::ChED,
    ];

    pub fn problem(self) -> Problem {
        use GraphClass::*;
        use SplitMode::*;
        match self {
            Param::ChVS => Problem::Splits(Chordal, Inclusive),
            Param::ChVXS => Problem::Splits(Chordal, Exclusive),
            Param::IVS => Problem::Splits(Interval, Inclusive),
            Param::IVXS => Problem::Splits(Interval, Exclusive),
            Param::UIVS => Problem::Splits(UnitInterval, Inclusive),
            Param::UIVXS => Problem::Splits(UnitInterval, Exclusive),
            Param::PVS => Problem::Splits(UnionOfPaths, Inclusive),
            Param::ChVD => Problem::VertexDeletion(Chordal),
            Param::ChED => Problem::EdgeDeletion(Chordal),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.problem().name())
    }
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Param::ALL
            .into_iter()
            .find(|p| p.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "parameter", name: s.to_string() })
    }
}

impl Problem {
    /// `ChVS`-style name; classes without a conventional prefix get a short one.
    pub fn name(&self) -> String {
        let prefix = |c: GraphClass| match c {
            GraphClass::Chordal => "Ch",
            GraphClass::Interval => "I",
            GraphClass::UnitInterval => "UI",
            GraphClass::UnionOfPaths => "P",
            GraphClass::CaterpillarForest => "Cat",
            GraphClass::Forest => "F",
            GraphClass::Tree => "T",
        };
        match *self {
            Problem::Splits(c, SplitMode::Inclusive) => format!("{}VS", prefix(c)),
            Problem::Splits(c, SplitMode::Exclusive) => format!("{}VXS", prefix(c)),
            Problem::VertexDeletion(c) => format!("{}VD", prefix(c)),
            Problem::EdgeDeletion(c) => format!("{}ED", prefix(c)),
        }
    }

    pub fn target(&self) -> GraphClass {
        match *self {
            Problem::Splits(c, _) | Problem::VertexDeletion(c) | Problem::EdgeDeletion(c) => c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Optimum {
    Exact(usize),
    /// Nothing up to the cutoff works.
    AtLeast(usize),
}

impl Optimum {
    pub fn exact(self) -> Option<usize> {
        match self {
            Optimum::Exact(k) => Some(k),
            Optimum::AtLeast(_) => None,
        }
    }

    pub fn lower_bound(self) -> usize {
        match self {
            Optimum::Exact(k) | Optimum::AtLeast(k) => k,
        }
    }
}

impl fmt::Display for Optimum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Optimum::Exact(k) => write!(f, "{k}"),
            Optimum::AtLeast(k) => write!(f, ">={k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolverWitness {
    Splits(SplitSequence),
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SearchStats {
    pub nodes: u64,
    pub secs: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverReport {
    pub param: String,
    pub optimum: Optimum,
    pub witness: Option<SolverWitness>,
    pub stats: SearchStats,
}

impl SolverReport {
    /// `PARAM`, `OPT`, one `WITNESS` line per split (or one for a vertex or
    /// edge set), `NODES`, `SECS`.
    pub fn lines(&self) -> Vec<(String, String)> {
        let mut out = vec![("PARAM".to_string(), self.param.clone()), ("OPT".to_string(), self.optimum.to_string())];
        match &self.witness {
            Some(SolverWitness::Splits(seq)) => {
                out.extend(seq.iter().map(|s| ("WITNESS".to_string(), s.to_string())));
            }
            Some(SolverWitness::Vertices(vs)) if !vs.is_empty() => {
                out.push(("WITNESS".into(), vs.iter().map(usize::to_string).join(" ")));
            }
            Some(SolverWitness::Edges(es)) if !es.is_empty() => {
                out.push(("WITNESS".into(), es.iter().map(|(u, v)| format!("{u}-{v}")).join(" ")));
            }
            _ => {}
        }
        out.push(("NODES".into(), self.stats.nodes.to_string()));
        out.push(("SECS".into(), format!("{:.3}", self.stats.secs)));
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOptions {
    pub k_max: usize,
    pub max_nodes: Option<u64>,
    pub max_secs: Option<f64>,
    /// Obstruction branching, lower bounds and cover pruning. Turning this off
    /// tries every split at every vertex.
    pub pruned: bool,
}

impl SearchOptions {
    pub fn new(k_max: usize) -> Self {
        SearchOptions { k_max, max_nodes: None, max_secs: None, pruned: true }
    }

    pub fn max_nodes(mut self, nodes: u64) -> Self {
        self.max_nodes = Some(nodes);
        self
    }

    pub fn max_secs(mut self, secs: f64) -> Self {
        self.max_secs = Some(secs);
        self
    }

    pub fn unpruned(mut self) -> Self {
        self.pruned = false;
        self
    }
}

struct Budget {
    start: Instant,
    nodes: u64,
    max_nodes: Option<u64>,
    max_secs: Option<f64>,
}

impl Budget {
    fn new(opts: &SearchOptions) -> Self {
        Budget { start: Instant::now(), nodes: 0, max_nodes: opts.max_nodes, max_secs: opts.max_secs }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        let over_nodes = self.max_nodes.is_some_and(|m| self.nodes > m);
        let over_time = self.nodes.is_multiple_of(64) && self.max_secs.is_some_and(|s| self.secs() > s);
        if over_nodes || over_time {
            return Err(Error::BudgetExceeded { nodes: self.nodes, secs: self.secs() });
        }
        Ok(())
    }

    fn secs(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }

    fn stats(&self) -> SearchStats {
        SearchStats { nodes: self.nodes, secs: self.secs() }
    }
}

pub fn solve(g: &Graph, param: Param, opts: &SearchOptions) -> Result<SolverReport> {
    solve_problem(g, param.problem(), opts)
}

pub fn solve_problem(g: &Graph, problem: Problem, opts: &SearchOptions) -> Result<SolverReport> {
    match problem {
        Problem::Splits(c, mode) => min_splits(g, c, mode, opts),
        Problem::VertexDeletion(c) => min_vertex_deletions(g, c, opts),
        Problem::EdgeDeletion(c) => min_edge_deletions(g, c, opts),
    }
}

pub fn brute_min_splits(g: &Graph, target: GraphClass, mode: SplitMode, k_max: usize) -> Result<SolverReport> {
    min_splits(g, target, mode, &SearchOptions::new(k_max))
}

pub fn brute_min_vertex_deletions(g: &Graph, target: GraphClass, k_max: usize) -> Result<SolverReport> {
    min_vertex_deletions(g, target, &SearchOptions::new(k_max))
}

pub fn brute_min_edge_deletions(g: &Graph, target: GraphClass, k_max: usize) -> Result<SolverReport> {
    min_edge_deletions(g, target, &SearchOptions::new(k_max))
}

pub fn min_splits(g: &Graph, target: GraphClass, mode: SplitMode, opts: &SearchOptions) -> Result<SolverReport> {
    if !target.is_hereditary() {
        return Err(Error::Precondition(format!("split search needs a hereditary class, not {target}")));
    }
    let triangle_free = g.find_triangle().is_none();
    // splits never create triangles, and triangle-free chordal graphs are forests
    let chordal_like = matches!(target, GraphClass::Chordal | GraphClass::Interval | GraphClass::UnitInterval);
    let mut search = SplitSearch {
        target,
        mode,
        pruned: opts.pruned,
        cycle_bound: target.is_acyclic() || (triangle_free && chordal_like),
        degree_bound: target == GraphClass::UnionOfPaths || (triangle_free && target == GraphClass::UnitInterval),
        budget: Budget::new(opts),
    };
    let param = Problem::Splits(target, mode).name();
    let frozen = vec![false; g.n()];
    for k in 0..=opts.k_max {
        if let Some(mut splits) = search.dfs(g, k, &frozen)? {
            splits.reverse();
            let seq = SplitSequence(splits);
            let (h, _) = apply_sequence(g, &seq)?;
            if !is_member(&h, target) || (mode == SplitMode::Exclusive && !seq.is_exclusive()) {
                return Err(Error::Internal("split search returned a non-solution".into()));
            }
            return Ok(SolverReport {
                param,
                optimum: Optimum::Exact(seq.len()),
                witness: Some(SolverWitness::Splits(seq)),
                stats: search.budget.stats(),
            });
        }
    }
    Ok(SolverReport { param, optimum: Optimum::AtLeast(opts.k_max + 1), witness: None, stats: search.budget.stats() })
}

type Cover = (Vec<usize>, Vec<usize>);

/// Subsets enumerated by the deletion filter before it gives up.
const FILTER_LIMIT: usize = 500;
/// Pattern occurrences considered as branching candidates per node.
const CANDIDATE_LIMIT: usize = 256;

struct SplitSearch {
    target: GraphClass,
    mode: SplitMode,
    pruned: bool,
    /// The result must be a forest, and a split lowers the cyclomatic number by at most one.
    cycle_bound: bool,
    /// The result has maximum degree 2, so `v` needs `⌈d(v)/2⌉` copies.
    degree_bound: bool,
    budget: Budget,
}

struct Slack {
    r: usize,
    beta: usize,
    deficit: usize,
}

fn deficit(d: usize) -> usize {
    d.div_ceil(2).saturating_sub(1)
}

impl SplitSearch {
    /// A sequence of at most `r` splits into the class, last split first.
    fn dfs(&mut self, g: &Graph, r: usize, frozen: &[bool]) -> Result<Option<Vec<Split>>> {
        self.budget.tick()?;
        if is_member(g, self.target) {
            return Ok(Some(Vec::new()));
        }
        if r == 0 {
            return Ok(None);
        }
        if !self.pruned {
            return self.branch_everywhere(g, r);
        }
        let n = g.n();
        let beta = if self.cycle_bound { g.cyclomatic_number() } else { 0 };
        if beta > r {
            return Ok(None);
        }
        let mut total_deficit = 0;
        if self.degree_bound {
            total_deficit = (0..n).map(|v| deficit(g.degree(v))).sum();
            if total_deficit > r || (0..n).any(|v| frozen[v] && g.degree(v) >= 3) {
                return Ok(None);
            }
        }
        let mut frozen = frozen.to_vec();
        if let Some(allowed) = self.deletion_filter(g, r, &frozen) {
            if !allowed.iter().any(|&a| a) {
                return Ok(None);
            }
            for v in 0..n {
                frozen[v] |= !allowed[v];
            }
        }

        let slack = Slack { r, beta, deficit: total_deficit };
        let mut covers: HashMap<usize, Vec<Cover>> = HashMap::new();
        let mut best: Option<(usize, Vec<usize>)> = None;
        for o in self.obstructions(g) {
            let mut branching = 0;
            for &x in o.iter().filter(|&&x| !frozen[x]) {
                branching += covers.entry(x).or_insert_with(|| self.viable_covers(g, x, &slack)).len();
            }
            if best.as_ref().is_none_or(|(b, _)| branching < *b) {
                best = Some((branching, o));
            }
            if branching == 0 {
                break;
            }
        }
        let (branching, obstruction) = best.ok_or_else(|| Error::Internal("no obstruction found".into()))?;
        if branching == 0 || self.packing(g, &frozen, &obstruction, r) > r {
            return Ok(None);
        }

        let mut order: Vec<usize> = obstruction.into_iter().filter(|&x| !frozen[x]).collect();
        order.sort_by_key(|x| (covers[x].len(), *x));
        let mut child_frozen = frozen;
        child_frozen.push(false);
        for x in order {
            for (a, b) in covers.remove(&x).unwrap_or_default() {
                let s = Split { target: x, part_a: a, part_b: b };
                let h = apply_split(g, &s)?;
                if let Some(mut seq) = self.dfs(&h, r - 1, &child_frozen)? {
                    seq.push(s);
                    return Ok(Some(seq));
                }
            }
            child_frozen[x] = true;
        }
        Ok(None)
    }

    fn branch_everywhere(&mut self, g: &Graph, r: usize) -> Result<Option<Vec<Split>>> {
        for x in 0..g.n() {
            for (a, b) in enumerate_covers(g.neighbors(x), self.mode, false) {
                let s = Split { target: x, part_a: a, part_b: b };
                let h = apply_split(g, &s)?;
                if let Some(mut seq) = self.dfs(&h, r - 1, &[])? {
                    seq.push(s);
                    return Ok(Some(seq));
                }
            }
        }
        Ok(None)
    }

    /// Vertices that can belong to a set `S` of at most `r` unfrozen vertices
    /// with `G - S` in the class. Only such vertices are ever split, since
    /// `G` minus its split vertices is an induced subgraph of the result.
    /// `None` when there are too many subsets to check.
    fn deletion_filter(&self, g: &Graph, r: usize, frozen: &[bool]) -> Option<Vec<bool>> {
        let free: Vec<usize> = (0..g.n()).filter(|&v| !frozen[v]).collect();
        let mut cost = 0usize;
        for s in 1..=r.min(free.len()) {
            cost = cost.saturating_add(binomial(free.len(), s));
            if cost > FILTER_LIMIT {
                return None;
            }
        }
        for s in 1..=r.min(free.len()) {
            let mut allowed = vec![false; g.n()];
            let mut any = false;
            for combo in free.iter().copied().combinations(s) {
                if is_member(&g.without_vertices(&combo).0, self.target) {
                    any = true;
                    for v in combo {
                        allowed[v] = true;
                    }
                }
            }
            if any {
                if s < r {
                    // a smaller set leaves room for any extra vertex
                    return Some((0..g.n()).map(|v| !frozen[v]).collect());
                }
                return Some(allowed);
            }
        }
        Some(vec![false; g.n()])
    }

    /// Candidate obstructions: the recognizer's witness, a shortest cycle and
    /// small forbidden patterns, each as a sorted vertex set.
    fn obstructions(&self, g: &Graph) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let report = recognize(g, self.target);
        if let Some(w) = &report.witness {
            out.push(self.shrink(g, w.vertices(g)));
        }
        if let Some(c) = shortest_cycle(g) {
            if self.target.is_acyclic() || c.len() >= 4 {
                out.push(c);
            }
        }
        let patterns: &[Pattern] = match self.target {
            GraphClass::Chordal => &[Pattern::Cycle(4)],
            GraphClass::Interval => &[Pattern::Cycle(4), Pattern::T2],
            GraphClass::UnitInterval => &[Pattern::Cycle(4), Pattern::Claw],
            GraphClass::CaterpillarForest => &[Pattern::T2],
            _ => &[],
        };
        for p in patterns {
            out.extend(find_induced_all(g, &p.graph(), CANDIDATE_LIMIT));
        }
        if self.target == GraphClass::UnionOfPaths {
            for v in (0..g.n()).filter(|&v| g.degree(v) >= 3) {
                for legs in g.neighbors(v).iter().copied().combinations(3).take(CANDIDATE_LIMIT) {
                    out.push([vec![v], legs].concat());
                }
            }
        }
        for o in &mut out {
            o.sort_unstable();
        }
        out.dedup();
        out
    }

    /// Greedily drops vertices while the induced subgraph stays outside the class.
    fn shrink(&self, g: &Graph, mut set: Vec<usize>) -> Vec<usize> {
        let mut i = 0;
        while i < set.len() {
            let mut smaller = set.clone();
            smaller.remove(i);
            if !is_member(&g.induced(&smaller), self.target) {
                set = smaller;
            } else {
                i += 1;
            }
        }
        set
    }

    /// Size of a greedy family of obstructions whose unfrozen parts are
    /// pairwise disjoint, stopping once it exceeds `r`. Each one needs its
    /// own split vertex.
    fn packing(&self, g: &Graph, frozen: &[bool], first: &[usize], r: usize) -> usize {
        let mut removed: Vec<usize> = first.iter().copied().filter(|&x| !frozen[x]).collect();
        let mut count = 1;
        while count <= r {
            let (h, kept) = g.without_vertices(&removed);
            let report = recognize(&h, self.target);
            let Some(w) = report.witness else { break };
            let free: Vec<usize> =
                self.shrink(&h, w.vertices(&h)).into_iter().map(|i| kept[i]).filter(|&x| !frozen[x]).collect();
            if free.is_empty() {
                return usize::MAX;
            }
            removed.extend(free);
            count += 1;
        }
        count
    }

    /// Non-dominated covers of `N(x)` whose split keeps the lower bounds
    /// within the remaining budget.
    fn viable_covers(&self, g: &Graph, x: usize, slack: &Slack) -> Vec<Cover> {
        let nb = g.neighbors(x);
        if nb.len() < 2 {
            return Vec::new();
        }
        let comp = if self.cycle_bound { Some(components_avoiding(g, x)) } else { None };
        let budget = slack.r as i64 - 1;
        let mut out = Vec::new();
        for (a, b) in enumerate_covers(nb, self.mode, true) {
            let overlap: Vec<usize> = a.iter().copied().filter(|w| b.binary_search(w).is_ok()).collect();
            if let Some(comp) = &comp {
                let joined = !overlap.is_empty() || a.iter().any(|&p| b.iter().any(|&q| comp[p] == comp[q]));
                let beta = slack.beta as i64 - 1 + overlap.len() as i64 + i64::from(!joined);
                if beta > budget {
                    continue;
                }
            }
            if self.degree_bound {
                let mut d = slack.deficit as i64 - deficit(nb.len()) as i64
                    + deficit(a.len()) as i64
                    + deficit(b.len()) as i64;
                for &w in &overlap {
                    d += deficit(g.degree(w) + 1) as i64 - deficit(g.degree(w)) as i64;
                }
                if d > budget {
                    continue;
                }
            }
            out.push((a, b));
        }
        out
    }
}

/// Component label of every vertex in `G - x`.
fn components_avoiding(g: &Graph, x: usize) -> Vec<usize> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in (0..n).filter(|&s| s != x) {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if w != x && comp[w] == usize::MAX {
                    comp[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Covers `(A, B)` of `nb` up to swapping the parts: the first neighbor not in
/// both parts goes to `A`. With `pruned`, parts equal to the whole
/// neighborhood are skipped; a copy keeping every neighbor makes the other
/// copy removable.
pub(crate) fn enumerate_covers(nb: &[usize], mode: SplitMode, pruned: bool) -> Vec<Cover> {
    let d = nb.len();
    let mut out = Vec::new();
    match mode {
        SplitMode::Exclusive => {
            if d == 0 {
                if !pruned {
                    out.push((Vec::new(), Vec::new()));
                }
                return out;
            }
            let full = (1u64 << d) - 1;
            for mask in (1..=full).filter(|m| m & 1 == 1) {
                if pruned && mask == full {
                    continue;
                }
                let (a, b): (Vec<usize>, Vec<usize>) = (0..d).partition_map(|i| {
                    if mask >> i & 1 == 1 {
                        itertools::Either::Left(nb[i])
                    } else {
                        itertools::Either::Right(nb[i])
                    }
                });
                out.push((a, b));
            }
        }
        SplitMode::Inclusive => {
            // digit 0: A only, 1: B only, 2: both
            let total = 3usize.pow(d as u32);
            let mut digits = vec![0u8; d];
            for code in 0..total {
                let mut c = code;
                for digit in digits.iter_mut() {
                    *digit = (c % 3) as u8;
                    c /= 3;
                }
                if digits.iter().find(|&&t| t != 2).is_some_and(|&t| t != 0) {
                    continue;
                }
                if pruned && !(digits.contains(&0) && digits.contains(&1)) {
                    continue;
                }
                let a = (0..d).filter(|&i| digits[i] != 1).map(|i| nb[i]).collect();
                let b = (0..d).filter(|&i| digits[i] != 0).map(|i| nb[i]).collect();
                out.push((a, b));
            }
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn min_vertex_deletions(g: &Graph, target: GraphClass, opts: &SearchOptions) -> Result<SolverReport> {
    let mut budget = Budget::new(opts);
    let param = Problem::VertexDeletion(target).name();
    for s in 0..=opts.k_max.min(g.n()) {
        // highest ids first
        for mut combo in (0..g.n()).rev().combinations(s) {
            budget.tick()?;
            if is_member(&g.without_vertices(&combo).0, target) {
                combo.reverse();
                return Ok(SolverReport {
                    param,
                    optimum: Optimum::Exact(s),
                    witness: Some(SolverWitness::Vertices(combo)),
                    stats: budget.stats(),
                });
            }
        }
    }
    Ok(SolverReport { param, optimum: Optimum::AtLeast(opts.k_max + 1), witness: None, stats: budget.stats() })
}

pub fn min_edge_deletions(g: &Graph, target: GraphClass, opts: &SearchOptions) -> Result<SolverReport> {
    let mut budget = Budget::new(opts);
    let param = Problem::EdgeDeletion(target).name();
    let edges = g.edge_list();
    for s in 0..=opts.k_max.min(edges.len()) {
        for combo in edges.iter().copied().combinations(s) {
            budget.tick()?;
            if is_member(&g.without_edges(&combo), target) {
                return Ok(SolverReport {
                    param,
                    optimum: Optimum::Exact(s),
                    witness: Some(SolverWitness::Edges(combo)),
                    stats: budget.stats(),
                });
            }
        }
    }
    Ok(SolverReport { param, optimum: Optimum::AtLeast(opts.k_max + 1), witness: None, stats: budget.stats() })
}

pub const HAMILTONIAN_LIMIT: usize = 24;

/// Subset dynamic program: `ends[S]` holds the possible last vertices of a
/// path through exactly the vertex set `S`.
pub fn hamiltonian_path_exists(g: &Graph) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > HAMILTONIAN_LIMIT {
        return Err(Error::TooLarge { n, limit: HAMILTONIAN_LIMIT });
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let full = (1usize << n) - 1;
    let mut ends = vec![0u32; full + 1];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for mask in 1..=full {
        let mut e = ends[mask];
        while e != 0 {
            let v = e.trailing_zeros() as usize;
            e &= e - 1;
            let mut next = adj[v] & !(mask as u32);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                ends[mask | 1 << w] |= 1 << w;
            }
        }
    }
    if ends[full] == 0 {
        return Ok(None);
    }
    let mut v = ends[full].trailing_zeros() as usize;
    let mut mask = full;
    let mut path = vec![v];
    while mask.count_ones() > 1 {
        mask ^= 1 << v;
        let prev = ends[mask] & adj[v];
        v = prev.trailing_zeros() as usize;
        path.push(v);
    }
    Ok(Some(path))
}

/// Maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    fn expand(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                let mut c = r.clone();
                c.sort_unstable();
                out.push(c);
            }
            return;
        }
        let pivot = p.iter().chain(&x).copied().max_by_key(|&u| p.iter().filter(|&&w| g.has_edge(u, w)).count());
        let pivot = pivot.expect("p is non-empty");
        let mut p = p;
        for v in p.clone().into_iter().filter(|&v| !g.has_edge(pivot, v)) {
            let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
            r.push(v);
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(g, &mut Vec::new(), (0..g.n()).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

pub const CLIQUE_LIMIT: usize = 9;

/// Interval test by searching for an order of the maximal cliques in which
/// the cliques containing any given vertex are consecutive.
pub fn interval_oracle_consecutive_cliques(g: &Graph) -> Result<bool> {
    let cliques = maximal_cliques(g);
    if cliques.len() > CLIQUE_LIMIT {
        return Err(Error::Precondition(format!(
            "{} maximal cliques, the oracle handles at most {CLIQUE_LIMIT}",
            cliques.len()
        )));
    }
    // 0: not yet seen, 1: in the last placed clique, 2: finished
    fn place(cliques: &[Vec<usize>], used: &mut [bool], state: &mut Vec<u8>, placed: usize, g: &Graph) -> bool {
        if placed == cliques.len() {
            return true;
        }
        for i in 0..cliques.len() {
            if used[i] || cliques[i].iter().any(|&v| state[v] == 2) {
                continue;
            }
            let saved = state.clone();
            for v in 0..g.n() {
                if state[v] == 1 && cliques[i].binary_search(&v).is_err() {
                    state[v] = 2;
                }
            }
            for &v in &cliques[i] {
                state[v] = 1;
            }
            used[i] = true;
            if place(cliques, used, state, placed + 1, g) {
                return true;
            }
            used[i] = false;
            *state = saved;
        }
        false
    }
    let mut used = vec![false; cliques.len()];
    let mut state = vec![0u8; g.n()];
    Ok(place(&cliques, &mut used, &mut state, 0, g))
}

/// For `α(G) ≤ 2` and `G - v` chordal, splits `v` along a cover of `G - v`
/// by two cliques; both copies end up simplicial.
pub fn chvs1_witness_from_chvd1(g: &Graph) -> Result<Split> {
    if let (false, Some(t)) = g.independence_at_most_two() {
        return Err(Error::Precondition(format!("independent triple {t:?}")));
    }
    for v in 0..g.n() {
        let (h, kept) = g.without_vertices(&[v]);
        if !is_member(&h, GraphClass::Chordal) {
            continue;
        }
        let Bipartition::Coloring(color) = h.complement().is_bipartite() else {
            return Err(Error::Internal(format!("complement of G - {v} is not bipartite")));
        };
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, &u) in kept.iter().enumerate() {
            if g.has_edge(u, v) {
                if color[i] {
                    b.push(u);
                } else {
                    a.push(u);
                }
            }
        }
        let split = Split::new(v, a, b);
        if !is_member(&apply_split(g, &split)?, GraphClass::Chordal) {
            return Err(Error::Internal(format!("clique-cover split of {v} is not chordal")));
        }
        return Ok(split);
    }
    Err(Error::Precondition("no single vertex deletion makes the graph chordal".into()))
}

/// For `α(G) ≤ 2` with a non-bipartite complement, an induced `C4` or `C5` in
/// cyclic order. A shortest odd cycle of the complement is chordless; length 5
/// complements to a `C5`, and on longer ones `v1, v2, v4, v5` induce two
/// disjoint edges of the complement, which is a `C4` in `G`.
pub fn find_induced_c4_or_c5(g: &Graph) -> Result<Vec<usize>> {
    if let (false, Some(t)) = g.independence_at_most_two() {
        return Err(Error::Precondition(format!("independent triple {t:?}")));
    }
    let comp = g.complement();
    let c = shortest_odd_cycle(&comp)
        .ok_or_else(|| Error::Precondition("the complement is bipartite, so two cliques cover the graph".into()))?;
    let found = match c.len() {
        5 => vec![c[0], c[2], c[4], c[1], c[3]],
        k if k >= 7 => vec![c[0], c[4], c[1], c[3]],
        k => return Err(Error::Internal(format!("shortest odd cycle of length {k} in a triangle-free complement"))),
    };
    if !is_induced_cycle(g, &found) {
        return Err(Error::Internal("complement cycle did not give an induced cycle".into()));
    }
    Ok(found)
}

/// BFS from every root; an edge between two vertices at equal depth closes an
/// odd walk, and the globally shortest such walk is a chordless cycle.
fn shortest_odd_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut found = None;
        'bfs: while let Some(u) = queue.pop_front() {
            if best.as_ref().is_some_and(|b| 2 * dist[u] + 1 >= b.len()) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if dist[w] == dist[u] && u < w {
                    found = Some((u, w));
                    break 'bfs;
                }
            }
        }
        if let Some((u, w)) = found {
            let climb = |mut x: usize| {
                let mut p = vec![x];
                while x != s {
                    x = parent[x];
                    p.push(x);
                }
                p
            };
            let pu = climb(u);
            let pw = climb(w);
            let mut cycle: Vec<usize> = pu.into_iter().rev().collect();
            cycle.extend(pw.into_iter().take_while(|&x| x != s));
            let distinct = cycle.iter().copied().sorted().dedup().count() == cycle.len();
            if distinct && best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    best
}
