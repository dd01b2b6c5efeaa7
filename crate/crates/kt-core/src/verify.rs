//! Polynomial-time verification that an orientation is a KT orientation,
//! with witness extraction when it is not.
//!
//! The check is: acyclicity first, then, per source vertex, a dynamic program
//! over a topological order counting directed paths with counts saturated at
//! two. Saturation preserves the "at most one path" decision without
//! overflow, which matters for the near-thousand-vertex family graphs.

use crate::graph::Vertex;
use crate::orientation::{Orientation, WitnessPair};

/// Outcome of the acyclicity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acyclicity {
    /// A topological order of all vertices.
    Acyclic { order: Vec<Vertex> },
    /// A directed cycle `v0 -> v1 -> ... -> v0`.
    HasCycle { cycle: Vec<Vertex> },
}

impl Acyclicity {
    pub fn is_acyclic(&self) -> bool {
        matches!(self, Acyclicity::Acyclic { .. })
    }
}

/// Kahn's algorithm; on failure a directed cycle is recovered by walking
/// in-neighbors among the leftover vertices.
pub fn is_acyclic(d: &Orientation) -> Acyclicity {
    let n = d.n() as usize;
    let out = d.out_adjacency();
    let mut indeg = vec![0u32; n + 1];
    for (_, h) in d.arcs() {
        indeg[h as usize] += 1;
    }
    let mut queue: std::collections::VecDeque<Vertex> =
        (1..=d.n()).filter(|&v| indeg[v as usize] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &out[v as usize] {
            indeg[w as usize] -= 1;
            if indeg[w as usize] == 0 {
                queue.push_back(w);
            }
        }
    }
    if order.len() == n {
        return Acyclicity::Acyclic { order };
    }
    // Every leftover vertex has an in-neighbor among the leftovers; walking
    // backwards must revisit a vertex, closing a cycle.
    let processed: std::collections::HashSet<Vertex> = order.iter().copied().collect();
    let inn = d.in_adjacency();
    let start = (1..=d.n())
        .find(|v| !processed.contains(v))
        .expect("a leftover vertex exists");
    let mut seen_at = std::collections::HashMap::new();
    let mut walk = vec![start];
    seen_at.insert(start, 0usize);
    loop {
        let v = *walk.last().unwrap();
        let prev = *inn[v as usize]
            .iter()
            .find(|w| !processed.contains(w))
            .expect("leftover vertices keep positive in-degree");
        if let Some(&pos) = seen_at.get(&prev) {
            let mut cycle: Vec<Vertex> = walk[pos..].to_vec();
            cycle.push(prev);
            cycle.reverse(); // the walk followed in-neighbors; reverse to arc direction
            cycle.pop(); // drop the duplicated closing vertex
            return Acyclicity::HasCycle { cycle };
        }
        seen_at.insert(prev, walk.len());
        walk.push(prev);
    }
}

/// Result of [`verify_kt`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyResult {
    IsKt,
    NotKt(WitnessPair),
}

impl VerifyResult {
    pub fn is_kt(&self) -> bool {
        matches!(self, VerifyResult::IsKt)
    }

    pub fn witness(&self) -> Option<&WitnessPair> {
        match self {
            VerifyResult::IsKt => None,
            VerifyResult::NotKt(w) => Some(w),
        }
    }
}

/// Decides whether `d` is a KT orientation: acyclic, and every unordered pair
/// of vertices joined by at most one directed path in total. When it is not,
/// returns a directed cycle or a minimal pair of internally disjoint directed
/// paths, found from the first offending pair in vertex-id order.
pub fn verify_kt(d: &Orientation) -> VerifyResult {
    let order = match is_acyclic(d) {
        Acyclicity::HasCycle { cycle } => {
            return VerifyResult::NotKt(WitnessPair::DirectedCycle { vertices: cycle })
        }
        Acyclicity::Acyclic { order } => order,
    };
    let n = d.n() as usize;
    let out = d.out_adjacency();
    let mut pos = vec![0u32; n + 1];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i as u32;
    }
    // In a DAG at most one direction of each pair carries paths, so scanning
    // ordered pairs per source covers the unordered-pair condition.
    let mut count = vec![0u8; n + 1];
    for s in 1..=d.n() {
        for c in count.iter_mut() {
            *c = 0;
        }
        count[s as usize] = 1;
        for &v in &order[pos[s as usize] as usize..] {
            let c = count[v as usize];
            if c == 0 {
                continue;
            }
            for &w in &out[v as usize] {
                count[w as usize] = (count[w as usize] + c).min(2);
            }
        }
        let offending = (1..=d.n())
            .filter(|&t| t != s && count[t as usize] >= 2)
            .min();
        if let Some(t) = offending {
            let (u, v, path_a, path_b) = minimal_disjoint_pair(&out, &order, &pos, s, t);
            return VerifyResult::NotKt(WitnessPair::TwoPaths {
                u,
                v,
                path_a,
                path_b,
            });
        }
    }
    VerifyResult::IsKt
}

/// Starting from a pair known to carry at least two directed paths, follows
/// the minimization argument: take two distinct paths of minimal total
/// length; if their interiors meet at `z`, recurse into the sub-pair whose
/// prefixes (or suffixes) already differ. Total length strictly decreases, so
/// this terminates with an internally disjoint pair.
fn minimal_disjoint_pair(
    out: &[Vec<Vertex>],
    order: &[Vertex],
    pos: &[u32],
    s0: Vertex,
    t0: Vertex,
) -> (Vertex, Vertex, Vec<Vertex>, Vec<Vertex>) {
    let (mut s, mut t) = (s0, t0);
    loop {
        let (pa, pb) = two_shortest_paths(out, order, pos, s, t);
        let inner_b: std::collections::HashSet<Vertex> =
            pb[1..pb.len() - 1].iter().copied().collect();
        let shared = pa[1..pa.len() - 1]
            .iter()
            .copied()
            .find(|z| inner_b.contains(z));
        match shared {
            None => return (s, t, pa, pb),
            Some(z) => {
                let cut = |p: &[Vertex]| {
                    let i = p.iter().position(|&x| x == z).unwrap();
                    (p[..=i].to_vec(), p[i..].to_vec())
                };
                let (pre_a, suf_a) = cut(&pa);
                let (pre_b, suf_b) = cut(&pb);
                if pre_a != pre_b {
                    t = z;
                } else {
                    debug_assert_ne!(suf_a, suf_b);
                    s = z;
                }
            }
        }
    }
}

/// Two distinct directed paths from `s` to `t` with the two smallest lengths,
/// via a 2-best dynamic program over the topological order. In a DAG every
/// directed walk is a path, so length-ranked reconstruction is sound.
/// Panics if fewer than two paths exist.
fn two_shortest_paths(
    out: &[Vec<Vertex>],
    order: &[Vertex],
    pos: &[u32],
    s: Vertex,
    t: Vertex,
) -> (Vec<Vertex>, Vec<Vertex>) {
    // Per vertex, up to two entries (length, predecessor, predecessor slot).
    const NONE: (u32, Vertex, u8) = (u32::MAX, 0, 0);
    let mut best = vec![[NONE; 2]; out.len()];
    best[s as usize][0] = (0, 0, 0);
    for &v in &order[pos[s as usize] as usize..] {
        for slot in 0..2 {
            let (len, _, _) = best[v as usize][slot];
            if len == u32::MAX {
                continue;
            }
            let cand = (len + 1, v, slot as u8);
            for &w in &out[v as usize] {
                let b = &mut best[w as usize];
                // Insertion keeping the two smallest, ties by discovery order.
                if cand.0 < b[0].0 {
                    b[1] = b[0];
                    b[0] = cand;
                } else if cand.0 < b[1].0 {
                    b[1] = cand;
                }
            }
        }
    }
    let reconstruct = |slot: usize| -> Vec<Vertex> {
        let mut path = vec![t];
        let (mut v, mut sl) = (t, slot);
        loop {
            let (_, pred, pred_slot) = best[v as usize][sl];
            if pred == 0 {
                break;
            }
            path.push(pred);
            v = pred;
            sl = pred_slot as usize;
        }
        path.reverse();
        path
    };
    assert!(
        best[t as usize][1].0 != u32::MAX,
        "caller guarantees two paths exist"
    );
    (reconstruct(0), reconstruct(1))
}

/// Result of [`simplify_source_sink`].
pub struct Simplified {
    pub orientation: Orientation,
    /// Removed vertices, in original ids, in removal order (sorted per round).
    pub removed: Vec<Vertex>,
    /// New-to-old vertex map for the surviving orientation (slot 0 unused).
    pub retained: Vec<Vertex>,
}

/// Repeatedly removes vertices that are sources or sinks all of whose
/// neighbors are sources or sinks; the result is KT iff the input is. Useful
/// both as a test utility and to shrink instances before verification.
pub fn simplify_source_sink(d: &Orientation) -> Simplified {
    let n = d.n() as usize;
    let mut alive = vec![true; n + 1];
    let mut removed = Vec::new();
    loop {
        let mut indeg = vec![0u32; n + 1];
        let mut outdeg = vec![0u32; n + 1];
        for (t, h) in d.arcs() {
            if alive[t as usize] && alive[h as usize] {
                outdeg[t as usize] += 1;
                indeg[h as usize] += 1;
            }
        }
        let extremal = |v: Vertex| indeg[v as usize] == 0 || outdeg[v as usize] == 0;
        let mut round = Vec::new();
        for v in 1..=d.n() {
            if !alive[v as usize] || !extremal(v) {
                continue;
            }
            let ok = d
                .graph()
                .neighbors(v)
                .iter()
                .filter(|&&w| alive[w as usize])
                .all(|&w| extremal(w));
            if ok {
                round.push(v);
            }
        }
        if round.is_empty() {
            break;
        }
        for &v in &round {
            alive[v as usize] = false;
        }
        removed.extend(round);
    }
    let keep: Vec<Vertex> = (1..=d.n()).filter(|&v| alive[v as usize]).collect();
    let (orientation, retained) = d.sub_orientation(&keep);
    Simplified {
        orientation,
        removed,
        retained,
    }
}
