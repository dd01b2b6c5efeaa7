//! Exact decision search for KT orientations of arbitrary graphs, an
//! exhaustive counter usable as a ground-truth oracle, and the
//! coloring-based constructive orientation.

use crate::graph::{Graph, Vertex};
use crate::orientation::Orientation;
use crate::verify::verify_kt;
use thiserror::Error;

/// Default node budget for [`solve_exact`].
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("graph has {m} edges; exhaustive counting is guarded at {limit}")]
    TooManyEdges { m: usize, limit: usize },
    #[error("coloring is not proper: vertices {0} and {1} share color {2}")]
    ImproperColoring(Vertex, Vertex, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Found(Orientation),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Decision nodes explored; diagnostics only.
    pub nodes_explored: u64,
}

impl SolveOutcome {
    pub fn found(&self) -> Option<&Orientation> {
        match &self.status {
            SolveStatus::Found(d) => Some(d),
            SolveStatus::None => None,
        }
    }
}

/// Which pruning rules the backtracker applies. Disabling rules never changes
/// the verdict, only the number of nodes explored; leaves are always checked
/// with the full verifier.
#[derive(Clone, Copy, Debug)]
pub struct Propagation {
    /// Reject graphs containing a triangle outright.
    pub triangles: bool,
    /// In a four-cycle, any oriented edge forces its cycle neighbors so that
    /// every cycle vertex becomes a source or a sink within the cycle.
    pub four_cycles: bool,
    /// Incremental directed-cycle and two-path detection on the partially
    /// oriented subgraph.
    pub incremental: bool,
}

impl Default for Propagation {
    fn default() -> Self {
        Propagation {
            triangles: true,
            four_cycles: true,
            incremental: true,
        }
    }
}

/// Complete backtracking over edge directions. `None` is returned only after
/// the full search tree is refuted; every `Found` orientation passes
/// [`verify_kt`] before being returned.
pub fn solve_exact(g: &Graph, budget: Option<u64>) -> Result<SolveOutcome, SolveError> {
    solve_exact_with(g, budget, Propagation::default())
}

pub fn solve_exact_with(
    g: &Graph,
    budget: Option<u64>,
    rules: Propagation,
) -> Result<SolveOutcome, SolveError> {
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    if rules.triangles && g.has_triangle() {
        return Ok(SolveOutcome {
            status: SolveStatus::None,
            nodes_explored: 0,
        });
    }
    let mut search = Search::new(g, rules, budget);
    let found = search.run()?;
    let status = match found {
        Some(forward) => {
            let d = Orientation::new(g.clone(), forward).expect("forward vector matches");
            assert!(verify_kt(&d).is_kt(), "found orientations must verify");
            SolveStatus::Found(d)
        }
        None => SolveStatus::None,
    };
    Ok(SolveOutcome {
        status,
        nodes_explored: search.nodes,
    })
}

const UNSET: u8 = 2;

struct Search<'g> {
    g: &'g Graph,
    rules: Propagation,
    budget: u64,
    nodes: u64,
    /// Static decision order: edges by number of four-cycles containing them,
    /// descending, then by edge index.
    order: Vec<usize>,
    /// Per edge, the four-cycles (by index) containing it.
    cycles_of_edge: Vec<Vec<usize>>,
    /// Four-cycles as edge-index quads in cyclic order a-b, b-c, c-d, d-a.
    cycles: Vec<[usize; 4]>,
    /// Per edge: 0 = reverse, 1 = forward, UNSET.
    state: Vec<u8>,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    trail: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, rules: Propagation, budget: u64) -> Self {
        let cycle_walks = g.four_cycles();
        let mut cycles = Vec::with_capacity(cycle_walks.len());
        let mut cycles_of_edge = vec![Vec::new(); g.m()];
        for walk in &cycle_walks {
            let quad = [
                g.edge_index(walk[0], walk[1]).unwrap(),
                g.edge_index(walk[1], walk[2]).unwrap(),
                g.edge_index(walk[2], walk[3]).unwrap(),
                g.edge_index(walk[3], walk[0]).unwrap(),
            ];
            let ci = cycles.len();
            for e in quad {
                cycles_of_edge[e].push(ci);
            }
            cycles.push(quad);
        }
        let mut order: Vec<usize> = (0..g.m()).collect();
        order.sort_by_key(|&e| (std::cmp::Reverse(cycles_of_edge[e].len()), e));
        Search {
            g,
            rules,
            budget,
            nodes: 0,
            order,
            cycles_of_edge,
            cycles,
            state: vec![UNSET; g.m()],
            out: vec![Vec::new(); g.n() as usize + 1],
            inn: vec![Vec::new(); g.n() as usize + 1],
            trail: Vec::new(),
        }
    }

    fn arc(&self, edge: usize, dir: u8) -> (Vertex, Vertex) {
        let (u, v) = self.g.edges()[edge];
        if dir == 1 {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Assigns an edge direction, maintaining the arc adjacency. Returns
    /// false on an immediate conflict from the incremental checks.
    fn assign(&mut self, edge: usize, dir: u8) -> bool {
        debug_assert_eq!(self.state[edge], UNSET);
        self.state[edge] = dir;
        let (t, h) = self.arc(edge, dir);
        self.out[t as usize].push(h);
        self.inn[h as usize].push(t);
        self.trail.push(edge);
        if self.rules.incremental {
            // A directed cycle through the new arc needs a path h -> t.
            if self.reaches(h, t) {
                return false;
            }
            // Cheap pair checks around the new arc: a second path t -> h, a
            // duplicated pair ending at h, or one starting from t.
            if self.count_paths_from(t, h) >= 2 {
                return false;
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let edge = self.trail.pop().unwrap();
            let (t, h) = self.arc(edge, self.state[edge]);
            self.state[edge] = UNSET;
            self.out[t as usize].pop();
            self.inn[h as usize].pop();
        }
    }

    fn reaches(&self, from: Vertex, to: Vertex) -> bool {
        if from == to {
            return true;
        }
        let mut seen = vec![false; self.g.n() as usize + 1];
        let mut stack = vec![from];
        seen[from as usize] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.out[v as usize] {
                if w == to {
                    return true;
                }
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Saturating count of directed paths from `s` to `goal` in the current
    /// partial digraph (acyclic by invariant), via memoized DFS.
    fn count_paths_from(&self, s: Vertex, goal: Vertex) -> u8 {
        let mut memo = vec![u8::MAX; self.g.n() as usize + 1];
        self.count_rec(s, goal, &mut memo)
    }

    fn count_rec(&self, v: Vertex, goal: Vertex, memo: &mut [u8]) -> u8 {
        if v == goal {
            return 1;
        }
        if memo[v as usize] != u8::MAX {
            return memo[v as usize];
        }
        let mut total = 0u8;
        for &w in &self.out[v as usize] {
            total = (total + self.count_rec(w, goal, memo)).min(2);
            if total >= 2 {
                break;
            }
        }
        memo[v as usize] = total;
        total
    }

    /// Full two-path check over the partial digraph: for every source, count
    /// saturated paths to every vertex. The partial digraph is acyclic by
    /// invariant, so a topological order exists.
    fn partial_conflict(&self) -> bool {
        let n = self.g.n() as usize;
        let mut indeg = vec![0u32; n + 1];
        for v in 1..=n {
            for &w in &self.out[v] {
                indeg[w as usize] += 1;
            }
        }
        let mut queue: Vec<Vertex> = (1..=self.g.n())
            .filter(|&v| indeg[v as usize] == 0)
            .collect();
        let mut order = Vec::with_capacity(n);
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            order.push(v);
            for &w in &self.out[v as usize] {
                indeg[w as usize] -= 1;
                if indeg[w as usize] == 0 {
                    queue.push(w);
                }
            }
        }
        debug_assert_eq!(order.len(), n, "partial digraph must stay acyclic");
        let mut count = vec![0u8; n + 1];
        for s in 1..=self.g.n() {
            if self.inn[s as usize].is_empty() && !self.out[s as usize].is_empty() {
                for c in count.iter_mut() {
                    *c = 0;
                }
                count[s as usize] = 1;
                for &v in &order {
                    let c = count[v as usize];
                    if c == 0 {
                        continue;
                    }
                    for &w in &self.out[v as usize] {
                        let nw = (count[w as usize] + c).min(2);
                        if nw >= 2 && w != s {
                            return true;
                        }
                        count[w as usize] = nw;
                    }
                }
            }
        }
        false
    }

    fn run(&mut self) -> Result<Option<Vec<bool>>, SolveError> {
        self.descend(0)
    }

    fn next_unassigned(&self, from: usize) -> Option<usize> {
        self.order[from..]
            .iter()
            .position(|&e| self.state[e] == UNSET)
            .map(|p| from + p)
    }

    fn descend(&mut self, order_pos: usize) -> Result<Option<Vec<bool>>, SolveError> {
        let Some(pos) = self.next_unassigned(order_pos) else {
            // All edges oriented: final full verification at the leaf.
            let forward: Vec<bool> = self.state.iter().map(|&s| s == 1).collect();
            let d = Orientation::new(self.g.clone(), forward.clone()).unwrap();
            return Ok(if verify_kt(&d).is_kt() {
                Some(forward)
            } else {
                None
            });
        };
        let edge = self.order[pos];
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::BudgetExceeded {
                budget: self.budget,
            });
        }
        for dir in [1u8, 0u8] {
            let mark = self.trail.len();
            if self.propagate(edge, dir) && !(self.rules.incremental && self.partial_conflict()) {
                if let Some(found) = self.descend(pos + 1)? {
                    return Ok(Some(found));
                }
            }
            self.undo_to(mark);
        }
        Ok(None)
    }

    /// Assigns `edge := dir` and closes under the four-cycle rule. Returns
    /// false when a conflict arises.
    fn propagate(&mut self, edge: usize, dir: u8) -> bool {
        if !self.assign(edge, dir) {
            return false;
        }
        if !self.rules.four_cycles {
            return true;
        }
        let mut queue = vec![edge];
        while let Some(e) = queue.pop() {
            for ci in 0..self.cycles_of_edge[e].len() {
                let cycle = self.cycles[self.cycles_of_edge[e][ci]];
                let slot = cycle.iter().position(|&x| x == e).unwrap();
                // Neighbors of e in the cyclic order share one endpoint each;
                // the shared vertex must be a source or sink within the cycle.
                for other in [cycle[(slot + 1) % 4], cycle[(slot + 3) % 4]] {
                    let shared = self
                        .shared_vertex(e, other)
                        .expect("cycle neighbors share a vertex");
                    let (t, _) = self.arc(e, self.state[e]);
                    let leaves_shared = t == shared;
                    // Forced: the other edge also leaves (or also enters) the
                    // shared vertex.
                    let (ou, ov) = self.g.edges()[other];
                    let forced = if leaves_shared {
                        if ou == shared {
                            1
                        } else {
                            debug_assert_eq!(ov, shared);
                            0
                        }
                    } else if ou == shared {
                        0
                    } else {
                        1
                    };
                    match self.state[other] {
                        s if s == UNSET => {
                            if !self.assign(other, forced) {
                                return false;
                            }
                            queue.push(other);
                        }
                        s if s == forced => {}
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    fn shared_vertex(&self, e1: usize, e2: usize) -> Option<Vertex> {
        let (a, b) = self.g.edges()[e1];
        let (c, d) = self.g.edges()[e2];
        if a == c || a == d {
            Some(a)
        } else if b == c || b == d {
            Some(b)
        } else {
            None
        }
    }
}

/// Exhaustive count of KT orientations over all `2^m` direction choices,
/// guarded to at most 24 edges.
pub fn count_kt_orientations(g: &Graph) -> Result<u64, SolveError> {
    const LIMIT: usize = 24;
    if g.m() > LIMIT {
        return Err(SolveError::TooManyEdges {
            m: g.m(),
            limit: LIMIT,
        });
    }
    let mut count = 0;
    for mask in 0..1u64 << g.m() {
        if verify_kt(&Orientation::from_mask(g.clone(), mask)).is_kt() {
            count += 1;
        }
    }
    Ok(count)
}

/// Directs each edge from lower to higher color under a proper coloring. If
/// the girth is at least `2k - 1` for a `k`-coloring the result is a KT
/// orientation; it is returned unverified either way.
pub fn orient_by_coloring(g: &Graph, coloring: &[u32]) -> Result<Orientation, SolveError> {
    assert_eq!(coloring.len(), g.n() as usize, "one color per vertex");
    let color = |v: Vertex| coloring[v as usize - 1];
    let mut forward = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        if color(u) == color(v) {
            return Err(SolveError::ImproperColoring(u, v, color(u)));
        }
        forward.push(color(u) < color(v));
    }
    Ok(Orientation::new(g.clone(), forward).expect("length matches"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_ladder, gen_named, NamedGraph};

    fn cycle(n: u32) -> Graph {
        gen_named(NamedGraph::Cycle(n))
    }

    #[test]
    fn triangle_has_no_orientation() {
        let k3 = Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let out = solve_exact(&k3, None).unwrap();
        assert_eq!(out.status, SolveStatus::None);
    }

    #[test]
    fn c5_and_bipartite_graphs_are_solvable() {
        for g in [cycle(5), gen_ladder(4).0, gen_named(NamedGraph::Cube)] {
            let out = solve_exact(&g, None).unwrap();
            let d = out.found().expect("orientation exists");
            assert!(verify_kt(d).is_kt());
        }
    }

    #[test]
    fn counts_on_small_cycles_and_ladders() {
        assert_eq!(count_kt_orientations(&cycle(4)).unwrap(), 2);
        assert_eq!(count_kt_orientations(&cycle(5)).unwrap(), 10);
        let k3 = Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(count_kt_orientations(&k3).unwrap(), 0);
        for k in 1..=6 {
            assert_eq!(
                count_kt_orientations(&gen_ladder(k).0).unwrap(),
                2,
                "k-ladder {k}"
            );
        }
    }

    #[test]
    fn count_guard() {
        let g = gen_ladder(9).0; // 25 edges
        assert!(matches!(
            count_kt_orientations(&g),
            Err(SolveError::TooManyEdges { .. })
        ));
    }

    #[test]
    fn budget_is_reported() {
        let g = gen_named(NamedGraph::Petersen);
        assert_eq!(
            solve_exact(&g, Some(0)),
            Err(SolveError::BudgetExceeded { budget: 0 })
        );
    }

    #[test]
    fn orient_by_coloring_examples() {
        let c4 = cycle(4);
        let d = orient_by_coloring(&c4, &[1, 2, 1, 2]).unwrap();
        assert!(verify_kt(&d).is_kt());
        assert!(d.has_arc(1, 2) && d.has_arc(3, 2));

        let c5 = cycle(5);
        let d = orient_by_coloring(&c5, &[1, 2, 1, 2, 3]).unwrap();
        assert!(verify_kt(&d).is_kt());
        let (out, inn) = (d.out_adjacency(), d.in_adjacency());
        let extremal = (1..=5)
            .filter(|&v| out[v as usize].is_empty() || inn[v as usize].is_empty())
            .count();
        assert!(
            extremal >= 4,
            "KT cycle orientations have at least 4 sources/sinks"
        );

        assert!(matches!(
            orient_by_coloring(&c4, &[1, 2, 1, 1]),
            Err(SolveError::ImproperColoring(..))
        ));
    }

    #[test]
    fn deterministic_node_counts() {
        let g = gen_named(NamedGraph::Petersen);
        let a = solve_exact(&g, None).unwrap();
        let b = solve_exact(&g, None).unwrap();
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.status, b.status);
    }
}
