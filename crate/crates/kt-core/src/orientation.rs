//! Orientations: a direction for every edge of a base graph.

use crate::graph::{Graph, Vertex};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientationError {
    #[error("direction vector has {got} entries for {expected} edges")]
    LengthMismatch { got: usize, expected: usize },
    #[error("arc ({0}, {1}) does not correspond to an edge of the base graph")]
    NotAnEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) received two directions")]
    DuplicateArc(Vertex, Vertex),
    #[error("edge ({0}, {1}) received no direction")]
    MissingArc(Vertex, Vertex),
    #[error("({0}, {1}) is not an arc of the orientation")]
    NotAnArc(Vertex, Vertex),
}

/// An orientation of a [`Graph`]: every base edge carries exactly one
/// direction. `forward[i]` means the i-th normalized edge `(u, v)` is
/// directed `u -> v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Orientation {
    graph: Graph,
    forward: Vec<bool>,
}

impl std::fmt::Debug for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Orientation({:?})", self.arcs().collect::<Vec<_>>())
    }
}

impl Orientation {
    pub fn new(graph: Graph, forward: Vec<bool>) -> Result<Orientation, OrientationError> {
        if forward.len() != graph.m() {
            return Err(OrientationError::LengthMismatch {
                got: forward.len(),
                expected: graph.m(),
            });
        }
        Ok(Orientation { graph, forward })
    }

    /// Orientation from an explicit arc list; every base edge must appear
    /// exactly once, in either direction.
    pub fn from_arcs(
        graph: Graph,
        arcs: &[(Vertex, Vertex)],
    ) -> Result<Orientation, OrientationError> {
        let mut forward: Vec<Option<bool>> = vec![None; graph.m()];
        for &(t, h) in arcs {
            let idx = graph
                .edge_index(t, h)
                .ok_or(OrientationError::NotAnEdge(t, h))?;
            if forward[idx].is_some() {
                return Err(OrientationError::DuplicateArc(t, h));
            }
            forward[idx] = Some(t < h);
        }
        for (idx, f) in forward.iter().enumerate() {
            if f.is_none() {
                let (u, v) = graph.edges()[idx];
                return Err(OrientationError::MissingArc(u, v));
            }
        }
        let forward = forward.into_iter().map(|f| f.unwrap()).collect();
        Ok(Orientation { graph, forward })
    }

    /// Orientation from a bitmask over the edge order; bit i set means edge i
    /// is directed low-id to high-id. Only usable for graphs with at most 64
    /// edges; intended for exhaustive enumeration.
    pub fn from_mask(graph: Graph, mask: u64) -> Orientation {
        let forward = (0..graph.m()).map(|i| mask >> i & 1 == 1).collect();
        Orientation { graph, forward }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> u32 {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    /// Whether edge index `idx` is directed low-id to high-id.
    pub fn is_forward(&self, idx: usize) -> bool {
        self.forward[idx]
    }

    /// The arc of edge index `idx`, as (tail, head).
    pub fn arc(&self, idx: usize) -> (Vertex, Vertex) {
        let (u, v) = self.graph.edges()[idx];
        if self.forward[idx] {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// All arcs in edge-index order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.m()).map(|i| self.arc(i))
    }

    /// Whether `t -> h` is an arc.
    pub fn has_arc(&self, t: Vertex, h: Vertex) -> bool {
        match self.graph.edge_index(t, h) {
            Some(idx) => self.arc(idx) == (t, h),
            None => false,
        }
    }

    /// Out-neighbor lists, indexable by vertex id (slot 0 unused).
    pub fn out_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.n() as usize + 1];
        for (t, h) in self.arcs() {
            out[t as usize].push(h);
        }
        out
    }

    /// In-neighbor lists, indexable by vertex id (slot 0 unused).
    pub fn in_adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut inn = vec![Vec::new(); self.n() as usize + 1];
        for (t, h) in self.arcs() {
            inn[h as usize].push(t);
        }
        inn
    }

    /// Every edge direction flipped. An involution.
    pub fn reverse(&self) -> Orientation {
        Orientation {
            graph: self.graph.clone(),
            forward: self.forward.iter().map(|f| !f).collect(),
        }
    }

    /// Restriction to the induced subgraph on `verts`, with the new-to-old
    /// vertex map.
    pub fn sub_orientation(&self, verts: &[Vertex]) -> (Orientation, Vec<Vertex>) {
        let (sub, map) = self.graph.induced_subgraph(verts);
        let mut old_to_new = vec![0u32; self.n() as usize + 1];
        for (new, &old) in map.iter().enumerate().skip(1) {
            old_to_new[old as usize] = new as u32;
        }
        let forward = sub
            .edges()
            .iter()
            .map(|&(nu, nv)| {
                let (ou, ov) = (map[nu as usize], map[nv as usize]);
                let idx = self.graph.edge_index(ou, ov).expect("edge exists in base");
                // The normalized order may flip under renumbering.
                let (t, _) = self.arc(idx);
                t == ou
            })
            .collect();
        (
            Orientation {
                graph: sub,
                forward,
            },
            map,
        )
    }
}

/// A certificate that an orientation is not KT: either a directed cycle, or
/// two internally disjoint directed paths between the same pair of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessPair {
    /// `vertices[0] -> vertices[1] -> ... -> vertices[k-1] -> vertices[0]`.
    DirectedCycle { vertices: Vec<Vertex> },
    /// Two distinct directed paths from `u` to `v` (inclusive endpoints)
    /// whose interiors are disjoint.
    TwoPaths {
        u: Vertex,
        v: Vertex,
        path_a: Vec<Vertex>,
        path_b: Vec<Vertex>,
    },
}

impl WitnessPair {
    /// Checks that the witness replays in `d`: each claimed arc exists and the
    /// structural side conditions hold.
    pub fn replays_in(&self, d: &Orientation) -> bool {
        match self {
            WitnessPair::DirectedCycle { vertices } => {
                vertices.len() >= 2
                    && vertices
                        .iter()
                        .zip(vertices.iter().cycle().skip(1))
                        .all(|(&a, &b)| d.has_arc(a, b))
            }
            WitnessPair::TwoPaths {
                u,
                v,
                path_a,
                path_b,
            } => {
                let ok_path = |p: &[Vertex]| {
                    p.len() >= 2
                        && p.first() == Some(u)
                        && p.last() == Some(v)
                        && p.windows(2).all(|w| d.has_arc(w[0], w[1]))
                };
                let interior = |p: &[Vertex]| p[1..p.len() - 1].to_vec();
                ok_path(path_a)
                    && ok_path(path_b)
                    && path_a != path_b
                    && interior(path_a)
                        .iter()
                        .all(|x| !interior(path_b).contains(x))
            }
        }
    }
}

/// The result of gluing two orientations at an arc.
pub struct Glued {
    pub orientation: Orientation,
    /// Old-to-new vertex map for the first orientation (slot 0 unused).
    pub map1: Vec<Vertex>,
    /// Old-to-new vertex map for the second orientation (slot 0 unused).
    pub map2: Vec<Vertex>,
}

/// Disjoint union of `d1` and `d2` with the arc `e1 = x -> y` of `d1`
/// identified with the arc `e2 = x' -> y'` of `d2` (x with x', y with y'; the
/// identified arc is kept once). Vertices of `d1` keep their ids; the
/// remaining vertices of `d2` follow in id order.
pub fn glue_at_edge(
    d1: &Orientation,
    e1: (Vertex, Vertex),
    d2: &Orientation,
    e2: (Vertex, Vertex),
) -> Result<Glued, OrientationError> {
    if !d1.has_arc(e1.0, e1.1) {
        return Err(OrientationError::NotAnArc(e1.0, e1.1));
    }
    if !d2.has_arc(e2.0, e2.1) {
        return Err(OrientationError::NotAnArc(e2.0, e2.1));
    }
    let n1 = d1.n();
    let map1: Vec<Vertex> = (0..=n1).collect();
    let mut map2 = vec![0u32; d2.n() as usize + 1];
    map2[e2.0 as usize] = e1.0;
    map2[e2.1 as usize] = e1.1;
    let mut next = n1;
    for v in 1..=d2.n() {
        if map2[v as usize] == 0 {
            next += 1;
            map2[v as usize] = next;
        }
    }
    let mut arcs: Vec<(Vertex, Vertex)> = d1.arcs().collect();
    for (t, h) in d2.arcs() {
        if (t, h) == e2 {
            continue; // identified with e1, kept once
        }
        arcs.push((map2[t as usize], map2[h as usize]));
    }
    let graph = Graph::from_edges(next, &arcs).expect("glued edges are valid");
    let orientation = Orientation::from_arcs(graph, &arcs)?;
    Ok(Glued {
        orientation,
        map1,
        map2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4_alternating() -> Orientation {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        Orientation::from_arcs(g, &[(1, 2), (3, 2), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn from_arcs_validates() {
        let g = Graph::from_edges(2, &[(1, 2)]).unwrap();
        assert!(Orientation::from_arcs(g.clone(), &[(1, 2)]).is_ok());
        assert_eq!(
            Orientation::from_arcs(g.clone(), &[(2, 1), (1, 2)]),
            Err(OrientationError::DuplicateArc(1, 2))
        );
        assert_eq!(
            Orientation::from_arcs(g, &[]),
            Err(OrientationError::MissingArc(1, 2))
        );
    }

    #[test]
    fn reverse_is_involution() {
        let d = c4_alternating();
        assert_eq!(d.reverse().reverse(), d);
        assert!(d.reverse().has_arc(2, 1));
    }

    #[test]
    fn reverse_swaps_sources_and_sinks() {
        let d = c4_alternating();
        let out = d.out_adjacency();
        let rev_out = d.reverse().out_adjacency();
        // Sources 1, 3 become sinks and vice versa.
        assert_eq!(out[1].len(), 2);
        assert_eq!(rev_out[1].len(), 0);
        assert_eq!(rev_out[2].len(), 2);
    }

    #[test]
    fn glue_two_single_arcs() {
        let g = Graph::from_edges(2, &[(1, 2)]).unwrap();
        let d = Orientation::from_arcs(g, &[(1, 2)]).unwrap();
        let glued = glue_at_edge(&d, (1, 2), &d, (1, 2)).unwrap();
        assert_eq!(glued.orientation.n(), 2);
        assert_eq!(glued.orientation.m(), 1);
        assert!(glued.orientation.has_arc(1, 2));
    }

    #[test]
    fn glue_counts() {
        let a = c4_alternating();
        let b = c4_alternating();
        let glued = glue_at_edge(&a, (1, 2), &b, (3, 2)).unwrap();
        assert_eq!(glued.orientation.n(), 6); // 4 + 4 - 2
        assert_eq!(glued.orientation.m(), 7); // 4 + 4 - 1
        assert_eq!(glued.map2[3], 1);
        assert_eq!(glued.map2[2], 2);
        // Gluing two KT orientations at an arc stays KT.
        assert!(crate::verify::verify_kt(&glued.orientation).is_kt());
    }

    #[test]
    fn glue_rejects_non_arcs() {
        let d = c4_alternating();
        assert!(glue_at_edge(&d, (2, 1), &d, (1, 2)).is_err());
        assert!(glue_at_edge(&d, (1, 3), &d, (1, 2)).is_err());
    }

    #[test]
    fn sub_orientation_preserves_arc_directions() {
        // Arcs chosen against the normalized edge order, so renumbering must
        // not flip them.
        let g = Graph::from_edges(5, &[(1, 3), (2, 3), (3, 5), (4, 5)]).unwrap();
        let d = Orientation::from_arcs(g, &[(3, 1), (2, 3), (5, 3), (4, 5)]).unwrap();
        let (sub, map) = d.sub_orientation(&[2, 3, 5]);
        assert_eq!(map, vec![0, 2, 3, 5]);
        assert!(sub.has_arc(1, 2)); // old 2 -> 3
        assert!(sub.has_arc(3, 2)); // old 5 -> 3
        assert_eq!(sub.m(), 2);
    }

    #[test]
    fn witness_replay() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let d = Orientation::from_arcs(g, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let w = WitnessPair::TwoPaths {
            u: 1,
            v: 4,
            path_a: vec![1, 2, 3, 4],
            path_b: vec![1, 4],
        };
        assert!(w.replays_in(&d));
        let bad = WitnessPair::TwoPaths {
            u: 1,
            v: 4,
            path_a: vec![1, 3, 4],
            path_b: vec![1, 4],
        };
        assert!(!bad.replays_in(&d));
    }
}
