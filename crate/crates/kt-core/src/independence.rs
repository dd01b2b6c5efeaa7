//! Exact maximum-independent-set computation, used to validate the copycut
//! independence numbers and as a general oracle.

use crate::graph::{Graph, Vertex};
use thiserror::Error;

/// Default node budget for [`alpha_exact`].
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndependenceError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: Vertex, n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaResult {
    pub alpha: u32,
    /// A maximum independent set; deterministic (lowest-id tie-breaking).
    pub witness: Vec<Vertex>,
}

/// Whether `set` is independent in `g`.
pub fn is_independent(g: &Graph, set: &[Vertex]) -> Result<bool, IndependenceError> {
    for &v in set {
        if v == 0 || v > g.n() {
            return Err(IndependenceError::VertexOutOfRange { v, n: g.n() });
        }
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Branch-and-bound maximum independent set: branch on a maximum-degree
/// vertex of the candidate subgraph (include and delete its closed
/// neighborhood, or exclude it), bounding by a greedy clique-cover estimate.
pub fn alpha_exact(g: &Graph, budget: Option<u64>) -> Result<AlphaResult, IndependenceError> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    let mut solver = Mis::new(g, budget);
    let all = BitSet::full(g.n());
    solver.search(all, Vec::new())?;
    let mut witness = solver.best_set;
    witness.sort_unstable();
    Ok(AlphaResult {
        alpha: solver.best,
        witness,
    })
}

#[derive(Clone, PartialEq, Eq)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn full(n: u32) -> BitSet {
        let mut words = vec![u64::MAX; (n as usize + 64) / 64 + 1];
        // Vertices are 1-based; clear bit 0 and everything past n.
        for (i, w) in words.iter_mut().enumerate() {
            let lo = i as u32 * 64;
            *w = 0;
            for b in 0..64u32 {
                let v = lo + b;
                if v >= 1 && v <= n {
                    *w |= 1 << b;
                }
            }
        }
        BitSet { words }
    }

    fn contains(&self, v: Vertex) -> bool {
        self.words[v as usize / 64] >> (v % 64) & 1 == 1
    }

    fn remove(&mut self, v: Vertex) {
        self.words[v as usize / 64] &= !(1u64 << (v % 64));
    }

    fn count(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i as u32 * 64;
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros();
                    bits &= bits - 1;
                    Some(base + b)
                }
            })
        })
    }
}

struct Mis<'g> {
    g: &'g Graph,
    budget: u64,
    nodes: u64,
    best: u32,
    best_set: Vec<Vertex>,
}

impl<'g> Mis<'g> {
    fn new(g: &'g Graph, budget: u64) -> Self {
        Mis {
            g,
            budget,
            nodes: 0,
            best: 0,
            best_set: Vec::new(),
        }
    }

    fn search(
        &mut self,
        mut cand: BitSet,
        mut current: Vec<Vertex>,
    ) -> Result<(), IndependenceError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(IndependenceError::BudgetExceeded {
                budget: self.budget,
            });
        }
        // Peel degree-0 and degree-1 candidates greedily; both choices are
        // safe and keep witnesses deterministic.
        loop {
            let mut peeled = false;
            let verts: Vec<Vertex> = cand.iter().collect();
            for v in verts {
                if !cand.contains(v) {
                    continue;
                }
                let deg = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| cand.contains(w))
                    .count();
                if deg == 0 {
                    cand.remove(v);
                    current.push(v);
                    peeled = true;
                } else if deg == 1 {
                    let w = *self
                        .g
                        .neighbors(v)
                        .iter()
                        .find(|&&w| cand.contains(w))
                        .unwrap();
                    cand.remove(v);
                    cand.remove(w);
                    current.push(v);
                    peeled = true;
                }
            }
            if !peeled {
                break;
            }
        }
        if cand.count() == 0 {
            if current.len() as u32 > self.best {
                self.best = current.len() as u32;
                self.best_set = current;
            }
            return Ok(());
        }
        if current.len() as u32 + self.clique_cover_bound(&cand) <= self.best {
            return Ok(());
        }
        // Branch vertex: maximum candidate degree, lowest id on ties.
        let v = cand
            .iter()
            .max_by_key(|&v| {
                let deg = self
                    .g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| cand.contains(w))
                    .count();
                (deg, std::cmp::Reverse(v))
            })
            .unwrap();
        // Include v.
        let mut included = cand.clone();
        included.remove(v);
        for &w in self.g.neighbors(v) {
            included.remove(w);
        }
        let mut with_v = current.clone();
        with_v.push(v);
        self.search(included, with_v)?;
        // Exclude v.
        let mut excluded = cand;
        excluded.remove(v);
        self.search(excluded, current)
    }

    /// Upper bound on the independent set inside `cand`: greedily partition
    /// into cliques; an independent set meets each clique at most once.
    fn clique_cover_bound(&self, cand: &BitSet) -> u32 {
        let mut remaining = cand.clone();
        let mut cliques = 0;
        loop {
            let Some(v) = remaining.iter().next() else {
                break;
            };
            remaining.remove(v);
            let mut clique = vec![v];
            // Extend by candidates adjacent to every clique member.
            let nbrs: Vec<Vertex> = self
                .g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| remaining.contains(w))
                .collect();
            for w in nbrs {
                if remaining.contains(w) && clique.iter().all(|&c| self.g.has_edge(c, w)) {
                    remaining.remove(w);
                    clique.push(w);
                }
            }
            cliques += 1;
        }
        cliques
    }
}
