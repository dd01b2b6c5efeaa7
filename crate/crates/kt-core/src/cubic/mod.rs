//! Polynomial-time KT-orientation decision for graphs of maximum degree at
//! most three.
//!
//! Outline: reject triangles; split at bridges into 2-edge-connected pieces;
//! per piece, build the hypergraph whose hyperedges are the four-cycles.
//! With at most four hypergraph components the piece is brute-forced from
//! the per-component KT orientations (at most eight each) and the at most
//! eight cross edges. Otherwise each nontrivial component is contracted to
//! an edge over its unique bipartition, the contraction is 3-colored, the
//! coloring is lifted back (it then 2-colors every four-cycle), the color
//! orientation is applied, and the exceptional ladder chords are oriented
//! arbitrarily.

mod brooks;
mod classify;

pub use brooks::brooks_three_color;
pub use classify::{
    classify_component, ComponentClass, ComponentTag, ExtraEdge, Role, TwoExtraEdges,
};

use crate::graph::{Graph, Vertex};
use crate::orientation::Orientation;
use crate::solve::{orient_by_coloring, SolveError, SolveOutcome, SolveStatus};
use crate::verify::verify_kt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CubicError {
    #[error("vertex {v} has degree {degree}; this solver requires maximum degree 3")]
    DegreeTooHigh { v: Vertex, degree: usize },
    #[error("graph contains a triangle")]
    HasTriangle,
    #[error("graph is not connected")]
    NotConnected,
    #[error("K4 is not 3-colorable")]
    IsK4,
    #[error("coloring is not proper: vertices {0} and {1} share color {2}")]
    ImproperColoring(Vertex, Vertex, u32),
    #[error("four-cycle {cycle:?} uses three colors")]
    ThreeColoredFourCycle { cycle: [Vertex; 4] },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// The hypergraph with one 4-vertex hyperedge per four-cycle of the base
/// graph, and its vertex components (vertices in no hyperedge are singleton
/// components).
#[derive(Clone, Debug)]
pub struct FourCycleHypergraph {
    pub base: Graph,
    /// Four-cycles as closed walks (consecutive vertices adjacent).
    pub hyperedges: Vec<[Vertex; 4]>,
    /// Components as sorted vertex lists, ordered by minimum vertex.
    pub components: Vec<Vec<Vertex>>,
    /// Component index per vertex (slot 0 unused).
    pub comp_of: Vec<usize>,
    /// Hyperedge indices per component.
    pub hyperedges_of: Vec<Vec<usize>>,
}

impl FourCycleHypergraph {
    pub fn nontrivial_components(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.components.len()).filter(|&c| !self.hyperedges_of[c].is_empty())
    }

    /// Whether the normalized edge lies on some four-cycle.
    pub fn edge_in_four_cycle(&self, e: (Vertex, Vertex)) -> bool {
        let key = (e.0.min(e.1), e.0.max(e.1));
        self.hyperedges.iter().any(|walk| {
            (0..4).any(|i| {
                let (a, b) = (walk[i], walk[(i + 1) % 4]);
                (a.min(b), a.max(b)) == key
            })
        })
    }
}

/// Builds the four-cycle hypergraph of a triangle-free graph of maximum
/// degree at most three.
pub fn four_cycle_hypergraph(g: &Graph) -> Result<FourCycleHypergraph, CubicError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 3) {
        return Err(CubicError::DegreeTooHigh {
            v,
            degree: g.degree(v),
        });
    }
    if g.has_triangle() {
        return Err(CubicError::HasTriangle);
    }
    let hyperedges = g.four_cycles();
    // Union-find over shared vertices.
    let mut parent: Vec<u32> = (0..=g.n()).collect();
    fn find(parent: &mut [u32], v: u32) -> u32 {
        let mut root = v;
        while parent[root as usize] != root {
            root = parent[root as usize];
        }
        let mut cur = v;
        while parent[cur as usize] != root {
            let next = parent[cur as usize];
            parent[cur as usize] = root;
            cur = next;
        }
        root
    }
    for walk in &hyperedges {
        for i in 1..4 {
            let (a, b) = (find(&mut parent, walk[0]), find(&mut parent, walk[i]));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut comp_of = vec![usize::MAX; g.n() as usize + 1];
    let mut components: Vec<Vec<Vertex>> = Vec::new();
    for v in 1..=g.n() {
        let r = find(&mut parent, v);
        if comp_of[r as usize] == usize::MAX {
            comp_of[r as usize] = components.len();
            components.push(Vec::new());
        }
        let c = comp_of[r as usize];
        comp_of[v as usize] = c;
        components[c].push(v);
    }
    let mut hyperedges_of = vec![Vec::new(); components.len()];
    for (i, walk) in hyperedges.iter().enumerate() {
        hyperedges_of[comp_of[walk[0] as usize]].push(i);
    }
    Ok(FourCycleHypergraph {
        base: g.clone(),
        hyperedges,
        components,
        comp_of,
        hyperedges_of,
    })
}

/// All KT orientations of a classified component's induced subgraph (at most
/// eight): one seed four-cycle edge fixes every four-cycle edge by
/// propagation, the at most two remaining edges are enumerated, and the
/// candidates are filtered with the verifier. Deterministic order.
pub fn component_kt_orientations(class: &ComponentClass) -> Vec<Orientation> {
    let sub = &class.subgraph;
    let faces = sub.four_cycles();
    debug_assert!(!faces.is_empty());
    let mut in_cycle = vec![false; sub.m()];
    let mut face_edges: Vec<[usize; 4]> = Vec::with_capacity(faces.len());
    for walk in &faces {
        let quad = [
            sub.edge_index(walk[0], walk[1]).unwrap(),
            sub.edge_index(walk[1], walk[2]).unwrap(),
            sub.edge_index(walk[2], walk[3]).unwrap(),
            sub.edge_index(walk[3], walk[0]).unwrap(),
        ];
        for e in quad {
            in_cycle[e] = true;
        }
        face_edges.push(quad);
    }
    let free: Vec<usize> = (0..sub.m()).filter(|&e| !in_cycle[e]).collect();
    debug_assert!(free.len() <= 2, "at most two edges outside four-cycles");
    let seed = (0..sub.m())
        .find(|&e| in_cycle[e])
        .expect("a four-cycle edge exists");

    let mut result = Vec::new();
    for seed_dir in [1u8, 0u8] {
        let Some(state) = propagate_four_cycles(sub, &face_edges, seed, seed_dir) else {
            continue;
        };
        for mask in 0..1u32 << free.len() {
            let mut forward = Vec::with_capacity(sub.m());
            for e in 0..sub.m() {
                let dir = if in_cycle[e] {
                    state[e]
                } else {
                    let bit = free.iter().position(|&f| f == e).unwrap();
                    (mask >> bit & 1) as u8
                };
                forward.push(dir == 1);
            }
            let d = Orientation::new(sub.clone(), forward).expect("length matches");
            if verify_kt(&d).is_kt() {
                result.push(d);
            }
        }
    }
    debug_assert!(result.len() <= 8);
    result
}

/// Orients `seed` and closes under the rule that every four-cycle vertex is
/// a source or sink within its cycle. Returns the per-edge direction state
/// (for cycle edges), or `None` on conflict.
fn propagate_four_cycles(
    g: &Graph,
    face_edges: &[[usize; 4]],
    seed: usize,
    seed_dir: u8,
) -> Option<Vec<u8>> {
    const UNSET: u8 = 2;
    let mut state = vec![UNSET; g.m()];
    let mut faces_of_edge = vec![Vec::new(); g.m()];
    for (fi, quad) in face_edges.iter().enumerate() {
        for &e in quad {
            faces_of_edge[e].push(fi);
        }
    }
    state[seed] = seed_dir;
    let mut queue = vec![seed];
    while let Some(e) = queue.pop() {
        for &fi in &faces_of_edge[e] {
            let quad = face_edges[fi];
            let slot = quad.iter().position(|&x| x == e).unwrap();
            for other in [quad[(slot + 1) % 4], quad[(slot + 3) % 4]] {
                let (eu, ev) = g.edges()[e];
                let (ou, ov) = g.edges()[other];
                let shared = if eu == ou || eu == ov { eu } else { ev };
                let tail = if state[e] == 1 { eu } else { ev };
                let leaves_shared = tail == shared;
                let forced = if leaves_shared == (ou == shared) {
                    1
                } else {
                    0
                };
                match state[other] {
                    s if s == UNSET => {
                        state[other] = forced;
                        queue.push(other);
                    }
                    s if s == forced => {}
                    _ => return None,
                }
            }
        }
    }
    Some(state)
}

/// An exceptional edge: the extra chord of a ladder component matching the
/// parity rule (odd k with v1 vk, even k with v1 wk), lying on no four-cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalEdge {
    /// Normalized base edge.
    pub edge: (Vertex, Vertex),
    /// Component index within the hypergraph.
    pub component: usize,
    pub ladder_len: u32,
}

/// Finds all exceptional edges given the per-component classifications
/// (pairs of component index and class).
pub fn find_exceptional_edges(
    h: &FourCycleHypergraph,
    classes: &[(usize, ComponentClass)],
) -> Vec<ExceptionalEdge> {
    let mut out = Vec::new();
    for &(comp, ref class) in classes {
        let ComponentTag::LadderPlusOneEdge { k, extra } = class.tag else {
            continue;
        };
        let matches_parity = match extra {
            ExtraEdge::V1Vk => k % 2 == 1,
            ExtraEdge::V1Wk => k % 2 == 0,
        };
        if !matches_parity {
            continue;
        }
        let v1 = class.base_vertex(Role::V(1)).unwrap();
        let other = match extra {
            ExtraEdge::V1Vk => class.base_vertex(Role::V(k)).unwrap(),
            ExtraEdge::V1Wk => class.base_vertex(Role::W(k)).unwrap(),
        };
        let edge = (v1.min(other), v1.max(other));
        debug_assert!(
            !h.edge_in_four_cycle(edge),
            "exceptional edges avoid four-cycles"
        );
        out.push(ExceptionalEdge {
            edge,
            component: comp,
            ladder_len: k,
        });
    }
    out
}

/// Orients each edge from lower to higher color, after checking that the
/// graph is triangle-free, the coloring proper, and every four-cycle
/// 2-colored — under which the result is guaranteed KT.
pub fn orient_two_colored_four_cycles(
    g: &Graph,
    coloring: &[u32],
) -> Result<Orientation, CubicError> {
    if g.has_triangle() {
        return Err(CubicError::HasTriangle);
    }
    for walk in g.four_cycles() {
        let mut cols: Vec<u32> = walk.iter().map(|&v| coloring[v as usize - 1]).collect();
        cols.sort_unstable();
        cols.dedup();
        if cols.len() != 2 {
            return Err(CubicError::ThreeColoredFourCycle { cycle: walk });
        }
    }
    match orient_by_coloring(g, coloring) {
        Ok(d) => Ok(d),
        Err(SolveError::ImproperColoring(u, v, c)) => Err(CubicError::ImproperColoring(u, v, c)),
        Err(e) => Err(CubicError::Internal(format!("unexpected error: {e}"))),
    }
}

/// Classification table produced alongside [`solve_cubic_with_report`].
#[derive(Clone, Debug, Default)]
pub struct CubicReport {
    pub lines: Vec<String>,
}

/// Decides KT orientability for a graph of maximum degree at most three.
pub fn solve_cubic(g: &Graph) -> Result<SolveOutcome, CubicError> {
    solve_cubic_inner(g, None)
}

/// As [`solve_cubic`], also returning the hypergraph component
/// classification table.
pub fn solve_cubic_with_report(g: &Graph) -> Result<(SolveOutcome, CubicReport), CubicError> {
    let mut report = CubicReport::default();
    let outcome = solve_cubic_inner(g, Some(&mut report))?;
    Ok((outcome, report))
}

fn solve_cubic_inner(
    g: &Graph,
    mut report: Option<&mut CubicReport>,
) -> Result<SolveOutcome, CubicError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 3) {
        return Err(CubicError::DegreeTooHigh {
            v,
            degree: g.degree(v),
        });
    }
    if g.has_triangle() {
        return Ok(SolveOutcome {
            status: SolveStatus::None,
            nodes_explored: 0,
        });
    }
    let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
    let mut nodes = 0u64;
    for comp in g.connected_components() {
        let (cg, cmap) = g.induced_subgraph(&comp);
        let bridges = cg.bridges();
        let pruned: Vec<(Vertex, Vertex)> = cg
            .edges()
            .iter()
            .copied()
            .filter(|e| !bridges.contains(e))
            .collect();
        let cut = Graph::from_edges(cg.n(), &pruned).expect("subset of valid edges");
        for piece in cut.connected_components() {
            let (pg, pmap) = cg.induced_subgraph(&piece);
            match solve_piece(&pg, &mut nodes, report.as_deref_mut(), |v| {
                cmap[pmap[v as usize] as usize]
            })? {
                Some(piece_arcs) => {
                    arcs.extend(piece_arcs.iter().map(|&(t, h)| {
                        (
                            cmap[pmap[t as usize] as usize],
                            cmap[pmap[h as usize] as usize],
                        )
                    }));
                }
                None => {
                    return Ok(SolveOutcome {
                        status: SolveStatus::None,
                        nodes_explored: nodes,
                    })
                }
            }
        }
        // Bridges join otherwise disconnected KT pieces and lie on no cycle,
        // so any direction is safe; orient low to high.
        arcs.extend(
            bridges
                .iter()
                .map(|&(u, v)| (cmap[u as usize], cmap[v as usize])),
        );
    }
    let d = Orientation::from_arcs(g.clone(), &arcs)
        .map_err(|e| CubicError::Internal(format!("assembled arcs malformed: {e}")))?;
    assert!(verify_kt(&d).is_kt(), "assembled orientation must verify");
    Ok(SolveOutcome {
        status: SolveStatus::Found(d),
        nodes_explored: nodes,
    })
}

/// Solves one bridgeless piece, returning arcs in the piece's own ids.
/// `to_base` renders base-graph vertex ids for the report.
fn solve_piece(
    pg: &Graph,
    nodes: &mut u64,
    mut report: Option<&mut CubicReport>,
    to_base: impl Fn(Vertex) -> Vertex,
) -> Result<Option<Vec<(Vertex, Vertex)>>, CubicError> {
    if pg.m() == 0 {
        return Ok(Some(Vec::new()));
    }
    let h = four_cycle_hypergraph(pg)?;
    let total = h.components.len();
    let mut classes: Vec<(usize, ComponentClass)> = Vec::new();
    for c in h.nontrivial_components() {
        let class = classify_component(&h, c)?;
        if let Some(rep) = report.as_deref_mut() {
            let verts: Vec<String> = h.components[c]
                .iter()
                .map(|&v| to_base(v).to_string())
                .collect();
            let labels: Vec<String> = class
                .labeling
                .iter()
                .map(|&(r, v)| format!("{r}={}", to_base(v)))
                .collect();
            rep.lines.push(format!(
                "component {{{}}}: {} [{}]",
                verts.join(" "),
                class.tag,
                labels.join(" ")
            ));
        }
        classes.push((c, class));
    }
    if let Some(rep) = report {
        let singletons = total - classes.len();
        rep.lines.push(format!(
            "piece with {} vertices: {} hypergraph component(s) ({} nontrivial, {} singleton)",
            pg.n(),
            total,
            classes.len(),
            singletons
        ));
    }
    if total <= 4 {
        brute_force_piece(pg, &h, &classes, nodes)
    } else {
        contraction_piece(pg, &h, &classes).map(Some)
    }
}

/// At most four hypergraph components: enumerate the per-component KT
/// orientations times all orientations of the at most eight cross edges.
fn brute_force_piece(
    pg: &Graph,
    h: &FourCycleHypergraph,
    classes: &[(usize, ComponentClass)],
    nodes: &mut u64,
) -> Result<Option<Vec<(Vertex, Vertex)>>, CubicError> {
    let lists: Vec<Vec<Orientation>> = classes
        .iter()
        .map(|(_, class)| component_kt_orientations(class))
        .collect();
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(None);
    }
    let cross: Vec<(Vertex, Vertex)> = pg
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| h.comp_of[u as usize] != h.comp_of[v as usize])
        .collect();
    if cross.len() > 8 {
        return Err(CubicError::Internal(format!(
            "{} cross edges with {} components; the bound of 8 is violated",
            cross.len(),
            h.components.len()
        )));
    }
    let mut choice = vec![0usize; lists.len()];
    loop {
        for mask in 0..1u32 << cross.len() {
            *nodes += 1;
            let mut arcs: Vec<(Vertex, Vertex)> = Vec::with_capacity(pg.m());
            for (li, (_, class)) in classes.iter().enumerate() {
                let d = &lists[li][choice[li]];
                arcs.extend(
                    d.arcs()
                        .map(|(t, h2)| (class.to_base[t as usize], class.to_base[h2 as usize])),
                );
            }
            for (bit, &(u, v)) in cross.iter().enumerate() {
                if mask >> bit & 1 == 0 {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
            let d = Orientation::from_arcs(pg.clone(), &arcs)
                .map_err(|e| CubicError::Internal(format!("piece arcs malformed: {e}")))?;
            if verify_kt(&d).is_kt() {
                return Ok(Some(d.arcs().collect()));
            }
        }
        // Odometer over the component orientation lists.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(None);
            }
            choice[i] += 1;
            if choice[i] < lists[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Which bipartition side of its component a contracted vertex stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Where a vertex of the contracted graph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A singleton-component vertex of the original piece.
    Original(Vertex),
    /// One side of a contracted nontrivial component.
    SideVertex { component: usize, side: Side },
}

/// The contraction G' of a piece: each nontrivial hypergraph component is
/// replaced by an edge over its unique bipartition, with sides lacking
/// outside neighbors deleted. Always maximum degree at most 3.
pub struct ContractedGraph {
    pub graph: Graph,
    /// Provenance per contracted vertex (slot 0 unused).
    pub provenance: Vec<Provenance>,
    /// Per component index, its surviving side vertices (A, B).
    pub side_vertex: Vec<[Option<Vertex>; 2]>,
    /// Per original vertex, 0 (side A) or 1 (side B) within its component;
    /// meaningful only for vertices of nontrivial components.
    pub side_of: Vec<u8>,
    /// Contracted id per original singleton vertex (slot 0 unused).
    pub original_id: Vec<Vertex>,
}

/// Contracts every nontrivial component of `g_star` (the piece minus its
/// exceptional edges) following the side-deletion rules. `is_nontrivial`
/// flags the components to contract.
pub fn contract_components(
    g_star: &Graph,
    h: &FourCycleHypergraph,
    is_nontrivial: &[bool],
) -> Result<ContractedGraph, CubicError> {
    let internal = |msg: String| CubicError::Internal(msg);
    // Per nontrivial component: the unique bipartition of its induced
    // subgraph, as base-id sides. Side A holds the component's minimum
    // vertex (the convention Graph::bipartition already follows).
    let mut side_of = vec![u8::MAX; g_star.n() as usize + 1];
    for (c, comp) in h.components.iter().enumerate() {
        if !is_nontrivial[c] {
            continue;
        }
        let (sub, map) = g_star.induced_subgraph(comp);
        if !sub.is_connected() {
            return Err(internal(format!(
                "component {c} is disconnected after chord removal"
            )));
        }
        let Some((a, b)) = sub.bipartition() else {
            return Err(internal(format!(
                "component {c} is not bipartite after chord removal"
            )));
        };
        for v in a {
            side_of[map[v as usize] as usize] = 0;
        }
        for v in b {
            side_of[map[v as usize] as usize] = 1;
        }
    }
    // A side vertex survives only with neighbors outside its component.
    let mut side_has_outside = vec![[false; 2]; h.components.len()];
    for &(u, v) in g_star.edges() {
        let (cu, cv) = (h.comp_of[u as usize], h.comp_of[v as usize]);
        if cu != cv {
            if is_nontrivial[cu] {
                side_has_outside[cu][side_of[u as usize] as usize] = true;
            }
            if is_nontrivial[cv] {
                side_has_outside[cv][side_of[v as usize] as usize] = true;
            }
        }
    }
    let mut next = 0u32;
    let mut provenance: Vec<Provenance> = vec![Provenance::Original(0)]; // slot 0
    let mut original_id = vec![0u32; g_star.n() as usize + 1];
    let mut side_vertex = vec![[None, None]; h.components.len()];
    for (ci, comp) in h.components.iter().enumerate() {
        if is_nontrivial[ci] {
            for s in 0..2 {
                if side_has_outside[ci][s] {
                    next += 1;
                    side_vertex[ci][s] = Some(next);
                    let side = if s == 0 { Side::A } else { Side::B };
                    provenance.push(Provenance::SideVertex {
                        component: ci,
                        side,
                    });
                }
            }
            if side_vertex[ci] == [None, None] {
                return Err(internal(format!(
                    "component {ci} has no outside neighbors in a multi-component piece"
                )));
            }
        } else {
            next += 1;
            original_id[comp[0] as usize] = next;
            provenance.push(Provenance::Original(comp[0]));
        }
    }
    let repr = |v: Vertex| -> Option<Vertex> {
        let c = h.comp_of[v as usize];
        if is_nontrivial[c] {
            side_vertex[c][side_of[v as usize] as usize]
        } else {
            Some(original_id[v as usize])
        }
    };
    let mut gp_edges: Vec<(Vertex, Vertex)> = Vec::new();
    for &(u, v) in g_star.edges() {
        if h.comp_of[u as usize] == h.comp_of[v as usize] {
            continue;
        }
        let (Some(a), Some(b)) = (repr(u), repr(v)) else {
            return Err(internal("cross edge touches a deleted side".into()));
        };
        gp_edges.push((a, b));
    }
    for pair in &side_vertex {
        if let [Some(a), Some(b)] = pair {
            gp_edges.push((*a, *b));
        }
    }
    let graph = Graph::from_edges(next, &gp_edges).expect("contracted edges are valid");
    if graph.max_degree() > 3 {
        return Err(internal("contracted graph exceeds degree 3".into()));
    }
    Ok(ContractedGraph {
        graph,
        provenance,
        side_vertex,
        side_of,
        original_id,
    })
}

/// Five or more hypergraph components: remove exceptional edges, contract
/// each nontrivial component over its unique bipartition, 3-color the
/// contraction, lift, orient, and restore the exceptional edges.
fn contraction_piece(
    pg: &Graph,
    h: &FourCycleHypergraph,
    classes: &[(usize, ComponentClass)],
) -> Result<Vec<(Vertex, Vertex)>, CubicError> {
    let internal = |msg: String| CubicError::Internal(msg);
    let exceptional = find_exceptional_edges(h, classes);
    let exceptional_set: std::collections::HashSet<(Vertex, Vertex)> =
        exceptional.iter().map(|e| e.edge).collect();
    let star_edges: Vec<(Vertex, Vertex)> = pg
        .edges()
        .iter()
        .copied()
        .filter(|e| !exceptional_set.contains(e))
        .collect();
    let g_star = Graph::from_edges(pg.n(), &star_edges).expect("subset of valid edges");
    let is_nontrivial: Vec<bool> = {
        let mut t = vec![false; h.components.len()];
        for &(c, _) in classes {
            t[c] = true;
        }
        t
    };
    let contracted = contract_components(&g_star, h, &is_nontrivial)?;
    let gp = &contracted.graph;
    if gp.n() <= 4 {
        return Err(internal(
            "contracted graph must have more than 4 vertices".into(),
        ));
    }
    if !gp.is_connected() {
        return Err(internal("contracted graph must stay connected".into()));
    }
    let gp_colors = brooks_three_color(gp)?;

    // Lift the coloring back to the piece. Deleted sides take the smallest
    // color distinct from their partner's.
    let color_of_side = |ci: usize, s: usize| -> u32 {
        match contracted.side_vertex[ci][s] {
            Some(id) => gp_colors[id as usize - 1],
            None => {
                let partner =
                    contracted.side_vertex[ci][1 - s].expect("at least one side survives");
                let pc = gp_colors[partner as usize - 1];
                (1..=3).find(|&c| c != pc).unwrap()
            }
        }
    };
    let mut lifted = vec![0u32; pg.n() as usize];
    for v in 1..=pg.n() {
        let c = h.comp_of[v as usize];
        lifted[v as usize - 1] = if is_nontrivial[c] {
            color_of_side(c, contracted.side_of[v as usize] as usize)
        } else {
            gp_colors[contracted.original_id[v as usize] as usize - 1]
        };
    }
    let d_star = orient_two_colored_four_cycles(&g_star, &lifted)?;
    let mut arcs: Vec<(Vertex, Vertex)> = d_star.arcs().collect();
    // Any direction works for exceptional edges; orient low to high.
    arcs.extend(exceptional.iter().map(|e| e.edge));
    Ok(arcs)
}
