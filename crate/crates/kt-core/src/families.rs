//! Generators for the graph families the toolkit is organized around:
//! ladders, twincut graphs, d-copycut graphs with their constructive KT
//! orientations, a handful of named small graphs, and the exact rational
//! sequence F_1 = 1, F_{k+1} = F_k + 1/F_k that governs copycut independence
//! numbers.

use crate::graph::{Graph, Vertex};
use crate::orientation::Orientation;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

/// Vertex-count guard for the recursive generators.
pub const SIZE_GUARD: u64 = 10_000_000;

/// Largest index served exactly by [`f_sequence`]. The numerator and
/// denominator digit counts double at every step, so exact values beyond
/// this are astronomically large; use [`f_sequence_f64`] for asymptotics.
pub const F_EXACT_MAX: u32 = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("index must be at least 1")]
    BadIndex,
    #[error("exact F_k is limited to k <= {limit}; use the floating-point form", limit = F_EXACT_MAX)]
    FTooLarge,
    #[error("generated graph would exceed {SIZE_GUARD} vertices or edges")]
    TooLarge,
    #[error("d-sequence entries must be at least 1 (got {0})")]
    ZeroD(u64),
    #[error("d-sequence has {got} entries; {needed} are needed for k = {k}")]
    ShortD { got: usize, needed: usize, k: u32 },
    #[error("unknown named graph {0:?}")]
    UnknownName(String),
}

/// Exact rational F_k: F_1 = 1, F_{k+1} = F_k + 1/F_k.
pub fn f_sequence(k: u32) -> Result<BigRational, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadIndex);
    }
    if k > F_EXACT_MAX {
        return Err(FamilyError::FTooLarge);
    }
    let mut f = BigRational::one();
    for _ in 1..k {
        f = &f + f.recip();
    }
    Ok(f)
}

/// Floating-point F_k for asymptotic checks (F_k / sqrt(2k) -> 1).
pub fn f_sequence_f64(k: u32) -> f64 {
    assert!(k >= 1);
    let mut f = 1.0f64;
    for _ in 1..k {
        f += 1.0 / f;
    }
    f
}

/// Canonical vertex labels of a generated ladder: `v[i]`, `w[i]` hold the
/// ids of v_{i+1}, w_{i+1}.
#[derive(Clone, Debug)]
pub struct LadderLabels {
    pub v: Vec<Vertex>,
    pub w: Vec<Vertex>,
}

/// The 2×k grid: rungs v_i w_i, rails v_i v_{i+1} and w_i w_{i+1}.
/// Vertices are numbered v_i = i, w_i = k + i.
pub fn gen_ladder(k: u32) -> (Graph, LadderLabels) {
    assert!(k >= 1);
    let mut edges = Vec::new();
    for i in 1..=k {
        edges.push((i, k + i));
    }
    for i in 1..k {
        edges.push((i, i + 1));
        edges.push((k + i, k + i + 1));
    }
    let g = Graph::from_edges(2 * k, &edges).expect("ladder edges are valid");
    let labels = LadderLabels {
        v: (1..=k).collect(),
        w: (k + 1..=2 * k).collect(),
    };
    (g, labels)
}

/// A twincut graph with its branch-vertex set.
#[derive(Clone, Debug)]
pub struct TwincutFamily {
    pub k: u32,
    pub graph: Graph,
    pub branch: Vec<Vertex>,
}

/// Iterated twincut construction. Step k -> k+1: for each branch vertex v,
/// add a disjoint copy of the current graph, replace v by n_k copies with
/// v's old neighborhood, and join the i-th copy of v to the i-th vertex
/// (in id order) of v's new copy.
pub fn gen_twincut(k: u32) -> Result<TwincutFamily, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadIndex);
    }
    let mut graph = Graph::from_edges(1, &[]).expect("one vertex");
    let mut branch: Vec<Vertex> = vec![1];
    for _ in 1..k {
        (graph, branch) = twincut_step(&graph, &branch)?;
    }
    Ok(TwincutFamily { k, graph, branch })
}

fn twincut_step(g: &Graph, branch: &[Vertex]) -> Result<(Graph, Vec<Vertex>), FamilyError> {
    let n = g.n() as u64;
    let beta = branch.len() as u64;
    let new_n = (n - beta) + beta * n + beta * n;
    let m_branch: u64 = branch.iter().map(|&b| g.degree(b) as u64).sum();
    let m_inner = g.m() as u64 - m_branch;
    let new_m = m_inner + n * m_branch + beta * g.m() as u64 + beta * n;
    if new_n > SIZE_GUARD || new_m > SIZE_GUARD {
        return Err(FamilyError::TooLarge);
    }
    let is_branch: Vec<bool> = {
        let mut b = vec![false; g.n() as usize + 1];
        for &v in branch {
            b[v as usize] = true;
        }
        b
    };
    // Ids: inner originals first (in id order), then per branch vertex (in id
    // order) its n copies followed by its attached copy of g.
    let mut inner_id = vec![0u32; g.n() as usize + 1];
    let mut next = 0u32;
    for v in 1..=g.n() {
        if !is_branch[v as usize] {
            next += 1;
            inner_id[v as usize] = next;
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for &(a, b) in g.edges() {
        if !is_branch[a as usize] && !is_branch[b as usize] {
            edges.push((inner_id[a as usize], inner_id[b as usize]));
        }
    }
    let mut new_branch = Vec::new();
    for &v in branch {
        let copies_base = next;
        next += g.n(); // v_1 .. v_n
        let copy_base = next;
        next += g.n(); // attached copy of g
        for i in 1..=g.n() {
            new_branch.push(copies_base + i);
            // Copies inherit v's neighborhood; branch sets are independent,
            // so all neighbors are inner.
            for &w in g.neighbors(v) {
                edges.push((copies_base + i, inner_id[w as usize]));
            }
            // Attachment: i-th copy of v to x_i in v's copy of g.
            edges.push((copies_base + i, copy_base + i));
        }
        for &(a, b) in g.edges() {
            edges.push((copy_base + a, copy_base + b));
        }
    }
    let graph = Graph::from_edges(next, &edges).expect("twincut edges are valid");
    Ok((graph, new_branch))
}

/// A d-copycut graph with its constructive KT orientation.
#[derive(Clone, Debug)]
pub struct CopycutFamily {
    pub k: u32,
    pub graph: Graph,
    /// Branch vertices; an independent set, each a source of `orientation`.
    pub branch: Vec<Vertex>,
    pub orientation: Orientation,
    /// The d-sequence actually used (d_1 .. d_{k-1}).
    pub d_seq: Vec<u64>,
    pub n_k: u64,
    /// Number of branch vertices; equals the independence number for the
    /// canonical d-sequence.
    pub alpha_k: u64,
}

/// Generates the k-th d-copycut graph. With `d = None` the canonical
/// sequence is used: d_1 = 1 and d_k = n_k - alpha_k afterwards, which makes
/// the branch set a maximum independent set of size n_k / F_k.
pub fn gen_copycut(k: u32, d: Option<&[u64]>) -> Result<CopycutFamily, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadIndex);
    }
    if let Some(seq) = d {
        if seq.len() + 1 < k as usize {
            return Err(FamilyError::ShortD {
                got: seq.len(),
                needed: k as usize - 1,
                k,
            });
        }
        if let Some(&z) = seq.iter().take(k as usize - 1).find(|&&x| x == 0) {
            return Err(FamilyError::ZeroD(z));
        }
    }
    let mut level = CopycutLevel {
        graph: Graph::from_edges(1, &[]).expect("one vertex"),
        branch: vec![1],
        arcs: Vec::new(),
    };
    let mut d_seq = Vec::new();
    for step in 0..k.saturating_sub(1) {
        let n = level.graph.n() as u64;
        let alpha = level.branch.len() as u64;
        let dk = match d {
            Some(seq) => seq[step as usize],
            // Canonical: d_1 = 1 (the k = 1 formula n_1 - alpha_1 would be 0).
            None => {
                if step == 0 {
                    1
                } else {
                    n - alpha
                }
            }
        };
        d_seq.push(dk);
        level = copycut_step(&level, dk)?;
    }
    let n_k = level.graph.n() as u64;
    let alpha_k = level.branch.len() as u64;
    let orientation = Orientation::from_arcs(level.graph.clone(), &level.arcs)
        .expect("constructive arcs cover each edge once");
    Ok(CopycutFamily {
        k,
        graph: level.graph,
        branch: level.branch,
        orientation,
        d_seq,
        n_k,
        alpha_k,
    })
}

struct CopycutLevel {
    graph: Graph,
    branch: Vec<Vertex>,
    /// The constructive orientation, as arcs (tails first).
    arcs: Vec<(Vertex, Vertex)>,
}

fn copycut_step(level: &CopycutLevel, dk: u64) -> Result<CopycutLevel, FamilyError> {
    let g = &level.graph;
    let n = g.n() as u64;
    let alpha = level.branch.len() as u64;
    let new_n = dk * (n - alpha) + 2 * n * alpha;
    // Branch degrees multiply by d_k each step, so edge counts outpace
    // vertex counts; guard both.
    let m_branch: u64 = level.branch.iter().map(|&b| g.degree(b) as u64).sum();
    let m_inner = g.m() as u64 - m_branch;
    let new_m = dk * m_inner + n * dk * m_branch + alpha * g.m() as u64 + alpha * n;
    if new_n > SIZE_GUARD || new_m > SIZE_GUARD || dk > SIZE_GUARD {
        return Err(FamilyError::TooLarge);
    }
    let mut is_branch = vec![false; g.n() as usize + 1];
    for &v in &level.branch {
        is_branch[v as usize] = true;
    }
    // Step 1 (implicit): the identified union G* of dk copies of g, with the
    // dk copies of each branch vertex merged. We never materialize G*; its
    // branch vertices are the merged c_r and its inner vertices are the
    // per-copy inner vertices.
    //
    // Step 2: take G*, add a fresh copy of g per branch vertex c_r, replace
    // each c_r by n copies carrying c_r's G*-neighborhood, and join the i-th
    // copy to the i-th vertex (id order) of c_r's fresh copy of g.
    //
    // Ids: G*'s inner vertices first (copy-major, id order within a copy),
    // then per branch vertex (id order): its n copies, then its fresh copy
    // of g (id order).
    let mut inner_id = vec![vec![0u32; g.n() as usize + 1]; dk as usize];
    let mut next = 0u32;
    for ids in inner_id.iter_mut() {
        for v in 1..=g.n() {
            if !is_branch[v as usize] {
                next += 1;
                ids[v as usize] = next;
            }
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    // Inner-inner edges of each copy, oriented as in the previous level.
    for ids in &inner_id {
        for &(t, h) in &level.arcs {
            if !is_branch[t as usize] && !is_branch[h as usize] {
                let (nt, nh) = (ids[t as usize], ids[h as usize]);
                edges.push((nt, nh));
                arcs.push((nt, nh));
            }
        }
    }
    let mut new_branch = Vec::new();
    for &b in &level.branch {
        let copies_base = next;
        next += g.n();
        let fresh_base = next;
        next += g.n();
        for i in 1..=g.n() {
            let vi = copies_base + i;
            new_branch.push(vi);
            // c_r's neighborhood in G*: the old neighbors of b inside every
            // copy. Branch vertices are sources, so each such edge leaves vi.
            for ids in &inner_id {
                for &w in g.neighbors(b) {
                    debug_assert!(!is_branch[w as usize], "branch set is independent");
                    let nw = ids[w as usize];
                    edges.push((vi, nw));
                    arcs.push((vi, nw));
                }
            }
            // Attachment edge to x_i in the fresh copy, oriented outward.
            edges.push((vi, fresh_base + i));
            arcs.push((vi, fresh_base + i));
        }
        // The fresh copy of g keeps the previous orientation wholesale.
        for &(t, h) in &level.arcs {
            edges.push((fresh_base + t, fresh_base + h));
            arcs.push((fresh_base + t, fresh_base + h));
        }
    }
    debug_assert_eq!(next as u64, new_n);
    let graph = Graph::from_edges(next, &edges).expect("copycut edges are valid");
    Ok(CopycutLevel {
        graph,
        branch: new_branch,
        arcs,
    })
}

/// Named small graphs used across the test corpus and the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    Cube,
    K23,
    K33,
    K33MinusEdge,
    Petersen,
    Cycle(u32),
    CubeMinusVertex,
    CubeMinusEdge,
}

impl std::str::FromStr for NamedGraph {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cube" => Ok(NamedGraph::Cube),
            "k23" => Ok(NamedGraph::K23),
            "k33" => Ok(NamedGraph::K33),
            "k33e" => Ok(NamedGraph::K33MinusEdge),
            "petersen" => Ok(NamedGraph::Petersen),
            "cubeMinusVertex" => Ok(NamedGraph::CubeMinusVertex),
            "cubeMinusEdge" => Ok(NamedGraph::CubeMinusEdge),
            other => Err(FamilyError::UnknownName(other.to_string())),
        }
    }
}

/// Canonical labeled instances. The cube is the 4-prism: top cycle 1-2-3-4,
/// bottom cycle 5-6-7-8, rungs i to i+4; the minus-vertex and minus-edge
/// variants delete vertex 8 and rung (4, 8) respectively.
pub fn gen_named(name: NamedGraph) -> Graph {
    match name {
        NamedGraph::Cube => Graph::from_edges(
            8,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4),
                (5, 6),
                (6, 7),
                (7, 8),
                (5, 8),
                (1, 5),
                (2, 6),
                (3, 7),
                (4, 8),
            ],
        )
        .unwrap(),
        NamedGraph::CubeMinusVertex => Graph::from_edges(
            7,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4),
                (5, 6),
                (6, 7),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap(),
        NamedGraph::CubeMinusEdge => Graph::from_edges(
            8,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 4),
                (5, 6),
                (6, 7),
                (7, 8),
                (5, 8),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap(),
        NamedGraph::K23 => {
            Graph::from_edges(5, &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap()
        }
        NamedGraph::K33 => Graph::from_edges(
            6,
            &[
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 4),
                (3, 5),
                (3, 6),
            ],
        )
        .unwrap(),
        NamedGraph::K33MinusEdge => Graph::from_edges(
            6,
            &[
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 4),
                (2, 5),
                (2, 6),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap(),
        NamedGraph::Petersen => Graph::from_edges(
            10,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (1, 5), // outer cycle
                (6, 8),
                (7, 9),
                (8, 10),
                (6, 9),
                (7, 10), // inner pentagram
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 10), // spokes
            ],
        )
        .unwrap(),
        NamedGraph::Cycle(n) => {
            assert!(n >= 3, "cycles need at least three vertices");
            let mut edges: Vec<(Vertex, Vertex)> = (1..n).map(|i| (i, i + 1)).collect();
            edges.push((1, n));
            Graph::from_edges(n, &edges).unwrap()
        }
    }
}
