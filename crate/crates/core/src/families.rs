//! Generators for the named graphs and families.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::Pattern;

pub const FAMILY_TAGS: [&str; 11] =
    ["fig4_gk", "star_of_c4", "fig6", "claw", "net", "tent", "t2", "t_d_star", "cycle", "path", "cubic_sample"];

pub const CUBIC_SAMPLES: [&str; 5] = ["k4", "prism", "cube", "fig2", "no16"];

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        return Err(Error::Precondition(format!("{name} must be at least {min}, got {value}")));
    }
    Ok(())
}

/// `v = 0`, cliques `a = 1..=k`, `b = k+1..=2k`, `c = 2k+1..=3k`, with `v`
/// joined to all of `a` and `c`, and `a`–`b`, `b`–`c` complete.
pub fn fig4_gk(k: usize) -> Result<Graph> {
    at_least("k", k, 1)?;
    let a: Vec<usize> = (1..=k).collect();
    let b: Vec<usize> = (k + 1..=2 * k).collect();
    let c: Vec<usize> = (2 * k + 1..=3 * k).collect();
    let mut e = Vec::new();
    for part in [&a, &b, &c] {
        for (i, &x) in part.iter().enumerate() {
            for &y in &part[i + 1..] {
                e.push((x, y));
            }
        }
    }
    for (p, q) in [(&a, &b), (&b, &c)] {
        for &x in p.iter() {
            for &y in q.iter() {
                e.push((x, y));
            }
        }
    }
    e.extend(a.iter().chain(&c).map(|&x| (0, x)));
    let labels = std::iter::once("v".to_string())
        .chain(["a", "b", "c"].iter().flat_map(|p| (1..=k).map(move |i| format!("{p}{i}"))))
        .collect();
    Graph::new(3 * k + 1, &e)?.with_labels(labels)
}

/// A star with `k` edges, each turned into a 4-cycle through the center `0`:
/// `0 – 3i+1 – 3i+2 – 3i+3 – 0`.
pub fn star_of_c4(k: usize) -> Result<Graph> {
    at_least("k", k, 1)?;
    let e: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| {
            let (x, y, z) = (3 * i + 1, 3 * i + 2, 3 * i + 3);
            [(0, x), (x, y), (y, z), (z, 0)]
        })
        .collect();
    Graph::new(3 * k + 1, &e)
}

/// Nine vertices, independence number 2, two vertex deletions to chordal but
/// more than two splits.
pub fn fig6() -> Graph {
    const E: [(usize, usize); 26] = [
        (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6), (3, 4), (3, 5), (3, 6), (2, 5),
        (2, 6), (1, 6), (7, 0), (7, 1), (7, 3), (7, 4), (7, 6), (7, 8), (8, 0), (8, 1), (8, 2), (8, 4), (8, 5),
    ];
    Graph::new(9, &E).expect("fixed edge list")
}

pub fn claw() -> Graph {
    Pattern::Claw.graph()
}

pub fn net() -> Graph {
    Pattern::Net.graph()
}

pub fn tent() -> Graph {
    Pattern::Tent.graph()
}

pub fn t2() -> Graph {
    Pattern::T2.graph()
}

/// Center `0` with `t` paths of `d` edges; path `i` is `0, id+1, …, id+d`.
pub fn t_d_star(t: usize, d: usize) -> Result<Graph> {
    at_least("d", d, 1)?;
    let mut e = Vec::new();
    for i in 0..t {
        let mut prev = 0;
        for j in 1..=d {
            let v = i * d + j;
            e.push((prev, v));
            prev = v;
        }
    }
    Graph::new(t * d + 1, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle length", n, 3)?;
    Ok(Pattern::Cycle(n).graph())
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path order", n, 1)?;
    Graph::new(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// Connected cubic graphs: `k4`, `prism`, `cube`, `fig2` (a 6-cycle with
/// chords 0–2, 3–5, 1–4) and `no16`, which has no Hamiltonian path.
pub fn cubic_sample(name: &str) -> Result<Graph> {
    let e: Vec<(usize, usize)> = match name {
        "k4" => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        "prism" => vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        "cube" => (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|&(u, v)| u < v).collect(),
        "fig2" => vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2), (3, 5), (1, 4)],
        "no16" => return Ok(non_traceable_cubic()),
        _ => return Err(Error::Unknown { kind: "cubic sample", name: name.to_string() }),
    };
    let n = e.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::new(n, &e)
}

/// Three copies of `K4` with one edge subdivided, hung by bridges from a
/// common vertex `0`. A path enters at most two of the three blocks.
pub fn non_traceable_cubic() -> Graph {
    let mut e = Vec::new();
    for i in 0..3 {
        let s = 1 + 5 * i;
        let (a, b, c, d) = (s + 1, s + 2, s + 3, s + 4);
        e.extend([(0, s), (s, a), (s, b), (a, c), (a, d), (b, c), (b, d), (c, d)]);
    }
    Graph::new(16, &e).expect("fixed edge list")
}

/// Dispatch by tag, with numeric or named parameters as strings.
pub fn gen_family(tag: &str, params: &[&str]) -> Result<Graph> {
    let num = |i: usize| -> Result<usize> {
        let s = params.get(i).ok_or_else(|| Error::Precondition(format!("`{tag}` needs {} parameter(s)", i + 1)))?;
        s.parse().map_err(|_| Error::Precondition(format!("`{s}` is not a number")))
    };
    let arity = |k: usize| -> Result<()> {
        if params.len() != k {
            return Err(Error::Precondition(format!("`{tag}` takes {k} parameter(s), got {}", params.len())));
        }
        Ok(())
    };
    match tag {
        "fig4_gk" => arity(1).and_then(|_| fig4_gk(num(0)?)),
        "star_of_c4" => arity(1).and_then(|_| star_of_c4(num(0)?)),
        "fig6" => arity(0).map(|_| fig6()),
        "claw" => arity(0).map(|_| claw()),
        "net" => arity(0).map(|_| net()),
        "tent" => arity(0).map(|_| tent()),
        "t2" => arity(0).map(|_| t2()),
        "t_d_star" => arity(2).and_then(|_| t_d_star(num(0)?, num(1)?)),
        "cycle" => arity(1).and_then(|_| cycle(num(0)?)),
        "path" => arity(1).and_then(|_| path(num(0)?)),
        "cubic_sample" => arity(1).and_then(|_| cubic_sample(params[0])),
        _ => Err(Error::Unknown { kind: "family", name: tag.to_string() }),
    }
}
