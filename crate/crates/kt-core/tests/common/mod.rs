//! Shared oracles and generators for the integration tests. Everything here
//! is deliberately independent of the library's algorithmic paths: path
//! counting is plain DFS enumeration, bridges and girth are recomputed from
//! first principles.

#![allow(dead_code)]

use kt_core::graph::{Graph, Vertex};
use kt_core::orientation::Orientation;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Counts simple directed paths from `u` to `v` by exhaustive DFS, stopping
/// at `cap`.
fn count_simple_paths(out: &[Vec<Vertex>], u: Vertex, v: Vertex, cap: u32) -> u32 {
    fn dfs(out: &[Vec<Vertex>], cur: Vertex, goal: Vertex, seen: &mut [bool], cap: u32) -> u32 {
        if cur == goal {
            return 1;
        }
        let mut total = 0;
        seen[cur as usize] = true;
        for &w in &out[cur as usize] {
            if !seen[w as usize] {
                total += dfs(out, w, goal, seen, cap - total);
                if total >= cap {
                    break;
                }
            }
        }
        seen[cur as usize] = false;
        total
    }
    let mut seen = vec![false; out.len()];
    dfs(out, u, v, &mut seen, cap)
}

/// The definitional KT check: every unordered pair of vertices carries at
/// most one simple directed path, both directions combined. Works for cyclic
/// orientations too (a directed cycle always yields an offending pair).
pub fn naive_is_kt(d: &Orientation) -> bool {
    let out = d.out_adjacency();
    let n = d.n();
    for u in 1..=n {
        for v in u + 1..=n {
            let total = count_simple_paths(&out, u, v, 2) + count_simple_paths(&out, v, u, 2);
            if total >= 2 {
                return false;
            }
        }
    }
    true
}

/// Bridge oracle: remove each edge in turn and recount components.
pub fn naive_bridges(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let base_components = g.connected_components().len();
    let mut out = Vec::new();
    for (i, &e) in g.edges().iter().enumerate() {
        let rest: Vec<(Vertex, Vertex)> = g
            .edges()
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &p)| p)
            .collect();
        let h = Graph::from_edges(g.n(), &rest).unwrap();
        if h.connected_components().len() > base_components {
            out.push(e);
        }
    }
    out
}

/// Girth oracle: exhaustive DFS enumeration of simple cycles.
pub fn naive_girth(g: &Graph) -> Option<u32> {
    let mut best: Option<u32> = None;
    // Enumerate simple paths starting at each root (the cycle's minimum
    // vertex) and close them back to the root.
    fn dfs(
        g: &Graph,
        root: Vertex,
        cur: Vertex,
        len: u32,
        seen: &mut [bool],
        best: &mut Option<u32>,
    ) {
        for &w in g.neighbors(cur) {
            if w == root && len >= 2 {
                if best.is_none_or(|b| len + 1 < b) {
                    *best = Some(len + 1);
                }
            } else if w > root && !seen[w as usize] {
                seen[w as usize] = true;
                dfs(g, root, w, len + 1, seen, best);
                seen[w as usize] = false;
            }
        }
    }
    for root in 1..=g.n() {
        let mut seen = vec![false; g.n() as usize + 1];
        seen[root as usize] = true;
        dfs(g, root, root, 0, &mut seen, &mut best);
    }
    best
}

/// Exhaustive maximum-independent-set oracle for graphs of at most 20
/// vertices.
pub fn naive_alpha(g: &Graph) -> u32 {
    assert!(g.n() <= 20);
    let mut best = 0;
    'mask: for mask in 0u32..1 << g.n() {
        let size = mask.count_ones();
        if size <= best {
            continue;
        }
        for &(u, v) in g.edges() {
            if mask >> (u - 1) & 1 == 1 && mask >> (v - 1) & 1 == 1 {
                continue 'mask;
            }
        }
        best = size;
    }
    best
}

/// All graphs on exactly `n` labeled vertices (every edge subset of K_n).
pub fn all_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(Vertex, Vertex)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// A deterministic random graph with `n` vertices and edge probability
/// `p_percent` / 100.
pub fn random_graph(rng: &mut StdRng, n: u32, p_percent: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_range(0..100) < p_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A deterministic random connected graph (retries until connected).
pub fn random_connected_graph(rng: &mut StdRng, n: u32, p_percent: u32) -> Graph {
    loop {
        let g = random_graph(rng, n, p_percent);
        if g.is_connected() {
            return g;
        }
    }
}

/// A deterministic random connected graph of maximum degree at most 3:
/// a random tree respecting the degree bound plus random chords.
pub fn random_connected_subcubic(rng: &mut StdRng, n: u32, extra_edges: usize) -> Graph {
    assert!(n >= 1);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut degree = vec![0usize; n as usize + 1];
    for v in 2..=n {
        // Attach v to a random earlier vertex with spare degree.
        let candidates: Vec<Vertex> = (1..v).filter(|&u| degree[u as usize] < 3).collect();
        let u = candidates[rng.random_range(0..candidates.len())];
        edges.push((u, v));
        degree[u as usize] += 1;
        degree[v as usize] += 1;
    }
    let mut tries = 0;
    let mut added = 0;
    while added < extra_edges && tries < 200 {
        tries += 1;
        let u = rng.random_range(1..=n);
        let v = rng.random_range(1..=n);
        let (u, v) = (u.min(v), u.max(v));
        if u == v || degree[u as usize] >= 3 || degree[v as usize] >= 3 {
            continue;
        }
        if edges.contains(&(u, v)) {
            continue;
        }
        edges.push((u, v));
        degree[u as usize] += 1;
        degree[v as usize] += 1;
        added += 1;
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A deterministic random orientation of `g`.
pub fn random_orientation(rng: &mut StdRng, g: &Graph) -> Orientation {
    let forward: Vec<bool> = (0..g.m()).map(|_| rng.random_bool(0.5)).collect();
    Orientation::new(g.clone(), forward).unwrap()
}

pub fn seeded(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
