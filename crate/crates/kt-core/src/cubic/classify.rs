//! Nine-way classification of a four-cycle-hypergraph component.
//!
//! For a connected triangle-free graph of maximum degree three, the subgraph
//! induced by a component of the four-cycle hypergraph is one of: a ladder,
//! a ladder with one or two end chords, K_{2,3}, K_{3,3}, K_{3,3} minus an
//! edge, a cube, a cube minus a vertex, or a cube minus an edge. The
//! classifier reconstructs an explicit labeling and checks it replays as an
//! isomorphism before returning.

use super::{CubicError, FourCycleHypergraph};
use crate::graph::{Graph, Vertex};
use std::collections::BTreeSet;

/// Canonical role names used in component labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Role {
    V(u32),
    W(u32),
    X(u32),
    Y(u32),
}

impl std::fmt::Display for Role {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Role::V(i) => write!(f, "v{i}"),
            Role::W(i) => write!(f, "w{i}"),
            Role::X(i) => write!(f, "x{i}"),
            Role::Y(i) => write!(f, "y{i}"),
        }
    }
}

/// Which chord a ladder-plus-one-edge component carries, after normalizing
/// the side swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtraEdge {
    V1Wk,
    V1Vk,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoExtraEdges {
    /// v1 vk and w1 wk: two closing rails.
    Rails,
    /// v1 wk and w1 vk: crossed chords.
    Cross,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentTag {
    CubeMinusEdge,
    CubeMinusVertex,
    Ladder(u32),
    LadderPlusOneEdge { k: u32, extra: ExtraEdge },
    K23,
    K33MinusEdge,
    LadderPlusTwoEdges { k: u32, extra: TwoExtraEdges },
    Cube,
    K33,
}

impl std::fmt::Display for ComponentTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComponentTag::CubeMinusEdge => write!(f, "cube-minus-edge"),
            ComponentTag::CubeMinusVertex => write!(f, "cube-minus-vertex"),
            ComponentTag::Ladder(k) => write!(f, "{k}-ladder"),
            ComponentTag::LadderPlusOneEdge {
                k,
                extra: ExtraEdge::V1Wk,
            } => {
                write!(f, "{k}-ladder+v1w{k}")
            }
            ComponentTag::LadderPlusOneEdge {
                k,
                extra: ExtraEdge::V1Vk,
            } => {
                write!(f, "{k}-ladder+v1v{k}")
            }
            ComponentTag::K23 => write!(f, "K23"),
            ComponentTag::K33MinusEdge => write!(f, "K33-e"),
            ComponentTag::LadderPlusTwoEdges {
                k,
                extra: TwoExtraEdges::Rails,
            } => {
                write!(f, "{k}-ladder+rails")
            }
            ComponentTag::LadderPlusTwoEdges {
                k,
                extra: TwoExtraEdges::Cross,
            } => {
                write!(f, "{k}-ladder+cross")
            }
            ComponentTag::Cube => write!(f, "cube"),
            ComponentTag::K33 => write!(f, "K33"),
        }
    }
}

impl ComponentTag {
    /// Canonical role list of the pattern.
    pub fn roles(&self) -> Vec<Role> {
        let vw = |k: u32, drop_wk: bool| {
            let mut r: Vec<Role> = (1..=k).map(Role::V).collect();
            r.extend((1..=if drop_wk { k - 1 } else { k }).map(Role::W));
            r
        };
        match *self {
            ComponentTag::Ladder(k)
            | ComponentTag::LadderPlusOneEdge { k, .. }
            | ComponentTag::LadderPlusTwoEdges { k, .. } => vw(k, false),
            ComponentTag::Cube | ComponentTag::CubeMinusEdge => vw(4, false),
            ComponentTag::CubeMinusVertex => vw(4, true),
            ComponentTag::K23 => vec![Role::X(1), Role::X(2), Role::Y(1), Role::Y(2), Role::Y(3)],
            ComponentTag::K33 | ComponentTag::K33MinusEdge => {
                vec![
                    Role::X(1),
                    Role::X(2),
                    Role::X(3),
                    Role::Y(1),
                    Role::Y(2),
                    Role::Y(3),
                ]
            }
        }
    }

    /// Edges of the canonical pattern, as role pairs.
    pub fn pattern_edges(&self) -> Vec<(Role, Role)> {
        use Role::{V, W, X, Y};
        let ladder = |k: u32| {
            let mut e = Vec::new();
            for i in 1..=k {
                e.push((V(i), W(i)));
            }
            for i in 1..k {
                e.push((V(i), V(i + 1)));
                e.push((W(i), W(i + 1)));
            }
            e
        };
        // The cube is a 4-ladder closed by both rails.
        let cube = || {
            let mut e = ladder(4);
            e.push((V(1), V(4)));
            e.push((W(1), W(4)));
            e
        };
        let biclique = |xs: u32, missing: Option<(u32, u32)>| {
            let mut e = Vec::new();
            for i in 1..=xs {
                for j in 1..=3 {
                    if missing != Some((i, j)) {
                        e.push((X(i), Y(j)));
                    }
                }
            }
            e
        };
        match *self {
            ComponentTag::Ladder(k) => ladder(k),
            ComponentTag::LadderPlusOneEdge { k, extra } => {
                let mut e = ladder(k);
                e.push(match extra {
                    ExtraEdge::V1Wk => (V(1), W(k)),
                    ExtraEdge::V1Vk => (V(1), V(k)),
                });
                e
            }
            ComponentTag::LadderPlusTwoEdges { k, extra } => {
                let mut e = ladder(k);
                match extra {
                    TwoExtraEdges::Rails => {
                        e.push((V(1), V(k)));
                        e.push((W(1), W(k)));
                    }
                    TwoExtraEdges::Cross => {
                        e.push((V(1), W(k)));
                        e.push((W(1), V(k)));
                    }
                }
                e
            }
            ComponentTag::Cube => cube(),
            ComponentTag::CubeMinusEdge => {
                cube().into_iter().filter(|&e| e != (V(4), W(4))).collect()
            }
            ComponentTag::CubeMinusVertex => cube()
                .into_iter()
                .filter(|&(a, b)| a != W(4) && b != W(4))
                .collect(),
            ComponentTag::K23 => biclique(2, None),
            ComponentTag::K33 => biclique(3, None),
            ComponentTag::K33MinusEdge => biclique(3, Some((3, 3))),
        }
    }
}

/// A classified component: the tag, an explicit labeling into base vertex
/// ids, and the induced subgraph with its new-to-old map.
#[derive(Clone, Debug)]
pub struct ComponentClass {
    pub tag: ComponentTag,
    /// Role to base-graph vertex id, sorted by role.
    pub labeling: Vec<(Role, Vertex)>,
    pub subgraph: Graph,
    /// New-to-old map from subgraph ids to base ids (slot 0 unused).
    pub to_base: Vec<Vertex>,
}

impl ComponentClass {
    pub fn base_vertex(&self, role: Role) -> Option<Vertex> {
        self.labeling
            .iter()
            .find(|&&(r, _)| r == role)
            .map(|&(_, v)| v)
    }

    /// The pattern edges mapped through the labeling, normalized and sorted;
    /// equal to the component's induced edge set by construction.
    pub fn mapped_pattern_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<(Vertex, Vertex)> = self
            .tag
            .pattern_edges()
            .iter()
            .map(|&(a, b)| {
                let u = self.base_vertex(a).expect("role present");
                let v = self.base_vertex(b).expect("role present");
                (u.min(v), u.max(v))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Classifies one component (which must contain at least one hyperedge) of a
/// four-cycle hypergraph. The labeling is constructed by pattern growth for
/// the ladder families and by a small deterministic isomorphism search for
/// the fixed patterns, and is verified by edge-set comparison before
/// returning.
pub fn classify_component(
    h: &FourCycleHypergraph,
    comp_idx: usize,
) -> Result<ComponentClass, CubicError> {
    let verts = &h.components[comp_idx];
    if h.hyperedges_of[comp_idx].is_empty() {
        return Err(CubicError::Internal(format!(
            "component {comp_idx} has no hyperedge; classification is undefined"
        )));
    }
    let (sub, to_base) = h.base.induced_subgraph(verts);
    let (nc, mc) = (sub.n(), sub.m());
    let faces = sub.four_cycles();
    let fixed = |tag: ComponentTag| fixed_pattern_class(tag, &sub, &to_base);
    let class = match (nc, mc) {
        (4, 4) => ladder_family_class(&sub, &to_base, &faces)?,
        (5, 6) => fixed(ComponentTag::K23)?,
        (6, 7) => ladder_family_class(&sub, &to_base, &faces)?,
        (6, 8) => fixed(ComponentTag::K33MinusEdge)?,
        (6, 9) => fixed(ComponentTag::K33)?,
        (7, 9) => fixed(ComponentTag::CubeMinusVertex)?,
        (8, 12) if sub.bipartition().is_some() => fixed(ComponentTag::Cube)?,
        (8, 11) if faces.len() == 4 => fixed(ComponentTag::CubeMinusEdge)?,
        _ => ladder_family_class(&sub, &to_base, &faces)?,
    };
    // Replay the labeling as an isomorphism.
    let mut induced: Vec<(Vertex, Vertex)> = sub
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (to_base[u as usize], to_base[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    induced.sort_unstable();
    if class.mapped_pattern_edges() != induced {
        return Err(CubicError::Internal(format!(
            "labeling for component {comp_idx} does not replay as an isomorphism"
        )));
    }
    Ok(class)
}

fn fixed_pattern_class(
    tag: ComponentTag,
    sub: &Graph,
    to_base: &[Vertex],
) -> Result<ComponentClass, CubicError> {
    let roles = tag.roles();
    let index_of = |r: Role| roles.iter().position(|&x| x == r).unwrap() as u32 + 1;
    let pattern: Vec<(u32, u32)> = tag
        .pattern_edges()
        .iter()
        .map(|&(a, b)| (index_of(a), index_of(b)))
        .collect();
    let iso = find_isomorphism(roles.len() as u32, &pattern, sub).ok_or_else(|| {
        CubicError::Internal(format!("component does not match expected pattern {tag}"))
    })?;
    let labeling = roles
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, to_base[iso[i + 1] as usize]))
        .collect();
    Ok(ComponentClass {
        tag,
        labeling,
        subgraph: sub.clone(),
        to_base: to_base.to_vec(),
    })
}

/// Deterministic backtracking graph isomorphism for the small fixed
/// patterns; returns the pattern-to-target vertex map (slot 0 unused).
fn find_isomorphism(pn: u32, pattern_edges: &[(u32, u32)], target: &Graph) -> Option<Vec<Vertex>> {
    if pn != target.n() || pattern_edges.len() != target.m() {
        return None;
    }
    let mut padj = vec![vec![false; pn as usize + 1]; pn as usize + 1];
    let mut pdeg = vec![0usize; pn as usize + 1];
    for &(a, b) in pattern_edges {
        padj[a as usize][b as usize] = true;
        padj[b as usize][a as usize] = true;
        pdeg[a as usize] += 1;
        pdeg[b as usize] += 1;
    }
    let mut map = vec![0u32; pn as usize + 1];
    let mut used = vec![false; target.n() as usize + 1];
    fn go(
        p: u32,
        pn: u32,
        padj: &[Vec<bool>],
        pdeg: &[usize],
        target: &Graph,
        map: &mut [u32],
        used: &mut [bool],
    ) -> bool {
        if p > pn {
            return true;
        }
        for t in 1..=target.n() {
            if used[t as usize] || target.degree(t) != pdeg[p as usize] {
                continue;
            }
            let consistent =
                (1..p).all(|q| padj[p as usize][q as usize] == target.has_edge(t, map[q as usize]));
            if consistent {
                map[p as usize] = t;
                used[t as usize] = true;
                if go(p + 1, pn, padj, pdeg, target, map, used) {
                    return true;
                }
                used[t as usize] = false;
                map[p as usize] = 0;
            }
        }
        false
    }
    if go(1, pn, &padj, &pdeg, target, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

/// Handles the parametric ladder family: a plain k-ladder, a k-ladder with
/// one end chord, or a k-ladder with two end chords. The face graph (faces
/// adjacent when they share an edge) is a path for the first two and a cycle
/// for the third.
fn ladder_family_class(
    sub: &Graph,
    to_base: &[Vertex],
    faces: &[[Vertex; 4]],
) -> Result<ComponentClass, CubicError> {
    let internal = |msg: String| CubicError::Internal(msg);
    let sets: Vec<BTreeSet<Vertex>> = faces.iter().map(|f| f.iter().copied().collect()).collect();
    let nf = faces.len();
    if nf == 0 {
        return Err(internal(
            "ladder family needs at least one four-cycle".into(),
        ));
    }
    let mut adj = vec![Vec::new(); nf];
    for i in 0..nf {
        for j in i + 1..nf {
            let shared = sets[i].intersection(&sets[j]).count();
            match shared {
                0 => {}
                2 => {
                    adj[i].push(j);
                    adj[j].push(i);
                }
                _ => {
                    return Err(internal(format!(
                        "four-cycles share {shared} vertices; expected a ladder family"
                    )))
                }
            }
        }
    }
    // Order the faces along the path, or around the cycle with the closing
    // face dropped.
    let face_key = |i: usize| sets[i].iter().copied().collect::<Vec<_>>();
    let (ordered, closing): (Vec<usize>, bool) = if nf == 1 {
        (vec![0], false)
    } else if let Some(start) = (0..nf)
        .filter(|&i| adj[i].len() == 1)
        .min_by_key(|&i| face_key(i))
    {
        // Path: walk from the chosen endpoint.
        let mut order = vec![start];
        let mut prev = usize::MAX;
        loop {
            let cur = *order.last().unwrap();
            let Some(&next) = adj[cur].iter().find(|&&x| x != prev) else {
                break;
            };
            prev = cur;
            order.push(next);
        }
        if order.len() != nf || adj.iter().any(|a| a.len() > 2) {
            return Err(internal("face graph is not a path".into()));
        }
        (order, false)
    } else {
        // Cycle: every face has exactly two neighbors.
        if adj.iter().any(|a| a.len() != 2) {
            return Err(internal("face graph is neither a path nor a cycle".into()));
        }
        let start = (0..nf).min_by_key(|&i| face_key(i)).unwrap();
        let first = *adj[start].iter().min_by_key(|&&i| face_key(i)).unwrap();
        let mut order = vec![start, first];
        while order.len() < nf {
            let cur = *order.last().unwrap();
            let prev = order[order.len() - 2];
            let next = *adj[cur].iter().find(|&&x| x != prev).unwrap();
            order.push(next);
        }
        (order, true)
    };
    let ladder_faces: &[usize] = if closing {
        &ordered[..nf - 1]
    } else {
        &ordered
    };
    let k = ladder_faces.len() + 1;

    // Rungs: the shared pairs between consecutive faces, plus the outer
    // pairs of the first and last faces.
    let shared_pair =
        |a: usize, b: usize| -> Vec<Vertex> { sets[a].intersection(&sets[b]).copied().collect() };
    let mut rungs: Vec<Vec<Vertex>> = Vec::with_capacity(k);
    if ladder_faces.len() == 1 {
        // A single face is a 2-ladder; its rungs are two opposite edges of
        // the walk [a, b, c, d]: rung 1 = (a, b), rung 2 = (d, c).
        let f = faces[ladder_faces[0]];
        rungs.push(vec![f[0], f[1]]);
        rungs.push(vec![f[3], f[2]]);
    } else {
        let first_shared: BTreeSet<Vertex> = shared_pair(ladder_faces[0], ladder_faces[1])
            .into_iter()
            .collect();
        rungs.push(
            sets[ladder_faces[0]]
                .difference(&first_shared)
                .copied()
                .collect(),
        );
        for i in 0..ladder_faces.len() - 1 {
            rungs.push(shared_pair(ladder_faces[i], ladder_faces[i + 1]));
        }
        let last_shared: BTreeSet<Vertex> = shared_pair(ladder_faces[k - 3], ladder_faces[k - 2])
            .into_iter()
            .collect();
        rungs.push(
            sets[ladder_faces[k - 2]]
                .difference(&last_shared)
                .copied()
                .collect(),
        );
    }
    for r in &rungs {
        if r.len() != 2 || !sub.has_edge(r[0], r[1]) {
            return Err(internal("rung reconstruction failed".into()));
        }
    }

    // Assign sides: v1 is the smaller end of the first rung; each later rung
    // is split by adjacency to the previous v.
    let mut v = vec![rungs[0][0].min(rungs[0][1])];
    let mut w = vec![rungs[0][0].max(rungs[0][1])];
    for r in rungs.iter().skip(1) {
        let (a, b) = (r[0], r[1]);
        let prev_v = *v.last().unwrap();
        let prev_w = *w.last().unwrap();
        let (nv, nw) = if sub.has_edge(a, prev_v) && sub.has_edge(b, prev_w) {
            (a, b)
        } else if sub.has_edge(b, prev_v) && sub.has_edge(a, prev_w) {
            (b, a)
        } else {
            return Err(internal("rails do not connect consecutive rungs".into()));
        };
        v.push(nv);
        w.push(nw);
    }

    // Extras: edges outside the ladder itself.
    let mut ladder_edges = BTreeSet::new();
    for i in 0..k {
        ladder_edges.insert((v[i].min(w[i]), v[i].max(w[i])));
    }
    for i in 0..k - 1 {
        ladder_edges.insert((v[i].min(v[i + 1]), v[i].max(v[i + 1])));
        ladder_edges.insert((w[i].min(w[i + 1]), w[i].max(w[i + 1])));
    }
    let extras: Vec<(Vertex, Vertex)> = sub
        .edges()
        .iter()
        .copied()
        .filter(|e| !ladder_edges.contains(e))
        .collect();

    let ends = |a: Vertex, b: Vertex| (a.min(b), a.max(b));
    let e_v1vk = ends(v[0], v[k - 1]);
    let e_w1wk = ends(w[0], w[k - 1]);
    let e_v1wk = ends(v[0], w[k - 1]);
    let e_w1vk = ends(w[0], v[k - 1]);
    let mut swap_sides = false;
    let tag = match extras.as_slice() {
        [] => ComponentTag::Ladder(k as u32),
        [e] if *e == e_v1vk => ComponentTag::LadderPlusOneEdge {
            k: k as u32,
            extra: ExtraEdge::V1Vk,
        },
        [e] if *e == e_w1wk => {
            swap_sides = true;
            ComponentTag::LadderPlusOneEdge {
                k: k as u32,
                extra: ExtraEdge::V1Vk,
            }
        }
        [e] if *e == e_v1wk => ComponentTag::LadderPlusOneEdge {
            k: k as u32,
            extra: ExtraEdge::V1Wk,
        },
        [e] if *e == e_w1vk => {
            swap_sides = true;
            ComponentTag::LadderPlusOneEdge {
                k: k as u32,
                extra: ExtraEdge::V1Wk,
            }
        }
        [a, b] => {
            let pair: BTreeSet<(Vertex, Vertex)> = [*a, *b].into_iter().collect();
            if pair == [e_v1vk, e_w1wk].into_iter().collect() {
                ComponentTag::LadderPlusTwoEdges {
                    k: k as u32,
                    extra: TwoExtraEdges::Rails,
                }
            } else if pair == [e_v1wk, e_w1vk].into_iter().collect() {
                ComponentTag::LadderPlusTwoEdges {
                    k: k as u32,
                    extra: TwoExtraEdges::Cross,
                }
            } else {
                return Err(internal(format!("unexpected chord pair {a:?}, {b:?}")));
            }
        }
        other => {
            return Err(internal(format!(
                "{} extra edges on a {k}-ladder",
                other.len()
            )));
        }
    };
    if swap_sides {
        std::mem::swap(&mut v, &mut w);
    }
    let mut labeling = Vec::with_capacity(2 * k);
    for i in 0..k {
        labeling.push((Role::V(i as u32 + 1), to_base[v[i] as usize]));
        labeling.push((Role::W(i as u32 + 1), to_base[w[i] as usize]));
    }
    labeling.sort();
    Ok(ComponentClass {
        tag,
        labeling,
        subgraph: sub.clone(),
        to_base: to_base.to_vec(),
    })
}
