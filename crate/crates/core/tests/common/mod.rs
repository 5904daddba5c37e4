//! Independent oracles for the integration tests. Nothing here calls into the
//! recognizers or solvers under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};

use rand::Rng;
use vsplit::Graph;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                e.push((u, v));
            }
        }
    }
    Graph::new(n, &e).unwrap()
}

/// Random maximal-ish triangle-free graph: edges offered in random order,
/// kept when they close no triangle.
pub fn random_triangle_free<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut a = vec![vec![false; n]; n];
    let mut e = Vec::new();
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    for (u, v) in pairs {
        if rng.gen_bool(p) && !(0..n).any(|w| a[u][w] && a[v][w]) {
            a[u][v] = true;
            a[v][u] = true;
            e.push((u, v));
        }
    }
    Graph::new(n, &e).unwrap()
}

pub fn complement(g: &Graph) -> Graph {
    let a = adjacency(g);
    let n = g.n();
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !a[u][v]).collect();
    Graph::new(n, &e).unwrap()
}

pub fn independence_number(g: &Graph) -> usize {
    let a = adjacency(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| (u + 1..n).all(|v| s >> u & 1 == 0 || s >> v & 1 == 0 || !a[u][v])))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn is_connected_subset(a: &[Vec<bool>], vs: &[usize]) -> bool {
    if vs.is_empty() {
        return true;
    }
    let mut seen = vec![false; vs.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..vs.len() {
            if !seen[j] && a[vs[i]][vs[j]] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Some vertex subset of size at least 4 induces a cycle.
pub fn has_long_induced_cycle(g: &Graph) -> bool {
    let a = adjacency(g);
    let n = g.n();
    assert!(n <= 20);
    (0u32..1 << n).filter(|s| s.count_ones() >= 4).any(|s| {
        let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
        vs.iter().all(|&u| vs.iter().filter(|&&v| a[u][v]).count() == 2) && is_connected_subset(&a, &vs)
    })
}

pub fn is_chordal_brute(g: &Graph) -> bool {
    !has_long_induced_cycle(g)
}

/// `cycle` lists the vertices of an induced cycle in cyclic order.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let a = adjacency(g);
    let k = cycle.len();
    k >= 3
        && cycle.iter().collect::<HashSet<_>>().len() == k
        && (0..k).all(|i| {
            (0..k).all(|j| {
                let d = (i + k - j) % k;
                a[cycle[i]][cycle[j]] == (d == 1 || d == k - 1)
            })
        })
}

pub fn is_forest(g: &Graph) -> bool {
    g.m() + component_count(g) == g.n()
}

pub fn component_count(g: &Graph) -> usize {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut count = n;
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            count -= 1;
        }
    }
    count
}

pub fn is_union_of_paths(g: &Graph) -> bool {
    is_forest(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// A forest whose non-leaf vertices form a union of paths.
pub fn is_caterpillar_forest(g: &Graph) -> bool {
    if !is_forest(g) {
        return false;
    }
    let inner: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    inner.iter().all(|&v| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count() <= 2)
}

/// Sum over vertices of `ceil(d/2) - 1`, plus one per component with edges
/// and no odd-degree vertex.
pub fn path_split_formula(g: &Graph) -> usize {
    let n = g.n();
    let base: isize = (0..n).map(|v| (g.degree(v) as isize + 1) / 2 - 1).sum();
    let mut label = vec![usize::MAX; n];
    let mut eulerian = 0;
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        label[s] = s;
        let mut comp = vec![];
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = s;
                    stack.push(w);
                }
            }
        }
        if comp.iter().all(|&v| g.degree(v).is_multiple_of(2)) {
            eulerian += 1;
        }
    }
    // edgeless components count -1 in the sum and +1 here
    (base + eulerian as isize) as usize
}

/// Fewest edge-disjoint trails covering every edge, by dynamic programming
/// over (used edges, current endpoint).
pub fn min_trail_count(g: &Graph) -> usize {
    let edges = g.edge_list();
    let m = edges.len();
    assert!(m <= 16);
    let full = (1u32 << m) - 1;
    let n = g.n();
    // dist[mask][end], end == n means no open trail
    let mut dist = vec![vec![usize::MAX; n + 1]; 1 << m];
    dist[0][n] = 0;
    let mut order: Vec<u32> = (0..=full).collect();
    order.sort_by_key(|s| s.count_ones());
    for mask in order {
        for end in 0..=n {
            let d = dist[mask as usize][end];
            if d == usize::MAX {
                continue;
            }
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    continue;
                }
                let next = (mask | 1 << i) as usize;
                for (from, to) in [(u, v), (v, u)] {
                    let cost = if end == from { d } else { d + 1 };
                    if cost < dist[next][to] {
                        dist[next][to] = cost;
                    }
                }
            }
        }
    }
    dist[full as usize].iter().copied().min().unwrap()
}

pub fn hamiltonian_path(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        if path.len() == g.n() {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if !used[w] {
                used[w] = true;
                path.push(w);
                if extend(g, path, used) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    for s in 0..n {
        let mut used = vec![false; n];
        used[s] = true;
        let mut path = vec![s];
        if extend(g, &mut path, &mut used) {
            return Some(path);
        }
    }
    None
}

pub fn is_hamiltonian_path(g: &Graph, p: &[usize]) -> bool {
    p.len() == g.n()
        && p.iter().collect::<HashSet<_>>().len() == g.n()
        && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Canonical form of a small graph: the lexicographically largest adjacency
/// bit string over all vertex permutations.
pub fn canonical_small(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8);
    let a = adjacency(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0u64;
    loop {
        let mut code = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                code = code << 1 | a[perm[u]][perm[v]] as u64;
            }
        }
        best = best.max(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every connected graph on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        if e.len() + 1 < n {
            continue;
        }
        let g = Graph::new(n, &e).unwrap();
        if component_count(&g) != 1 {
            continue;
        }
        if seen.insert(canonical_small(&g)) {
            out.push(g);
        }
    }
    out
}

/// Rooted canonical string of `v` in the tree, children sorted.
fn ahu(g: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = g.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| ahu(g, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in g.neighbors(v) {
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer
}

pub fn tree_canonical(g: &Graph) -> String {
    tree_centers(g).into_iter().map(|c| ahu(g, c, usize::MAX)).min().unwrap_or_default()
}

/// Free trees on `n` vertices up to isomorphism, grown leaf by leaf.
pub fn trees(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::new(1, &[]).unwrap()];
    for size in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let mut e = t.edge_list();
                e.push((v, size - 1));
                let g = Graph::new(size, &e).unwrap();
                if seen.insert(tree_canonical(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return vec![];
    }
    level
}

/// Cubic graphs on `n` vertices with `N(0) = {1, 2, 3}`, by backtracking over
/// the remaining degree slots. Every connected cubic graph is isomorphic to at
/// least one of them.
pub fn cubic_graphs(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut deg = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut has: HashMap<(usize, usize), bool> = HashMap::new();
    for v in 1..=3 {
        edges.push((0, v));
        has.insert((0, v), true);
        deg[0] += 1;
        deg[v] += 1;
    }
    fn go(
        n: usize,
        deg: &mut Vec<usize>,
        edges: &mut Vec<(usize, usize)>,
        has: &mut HashMap<(usize, usize), bool>,
        out: &mut Vec<Graph>,
    ) {
        let Some(u) = (0..n).find(|&v| deg[v] < 3) else {
            out.push(Graph::new(n, edges).unwrap());
            return;
        };
        for w in u + 1..n {
            if deg[w] < 3 && !has.contains_key(&(u, w)) {
                deg[u] += 1;
                deg[w] += 1;
                has.insert((u, w), true);
                edges.push((u, w));
                go(n, deg, edges, has, out);
                edges.pop();
                has.remove(&(u, w));
                deg[u] -= 1;
                deg[w] -= 1;
            }
        }
    }
    if n >= 4 && n.is_multiple_of(2) {
        go(n, &mut deg, &mut edges, &mut has, &mut out);
    }
    out
}

/// Keeps the edges selected by `bits` (pairs in lexicographic order) that do
/// not close a triangle.
pub fn triangle_free_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut a = vec![vec![false; n]; n];
    let mut e = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] && !(0..n).any(|w| a[u][w] && a[v][w]) {
                a[u][v] = true;
                a[v][u] = true;
                e.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &e).unwrap()
}
