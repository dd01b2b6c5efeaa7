//! Constructive three-coloring for connected graphs of maximum degree three
//! (other than K4).

use super::CubicError;
use crate::graph::{Graph, Vertex};

/// A proper 3-coloring (colors 1..=3, indexed by vertex - 1).
///
/// Strategy: with a vertex of degree below three, greedy coloring in reverse
/// BFS order from it suffices. A 3-regular graph is split at a bridge and the
/// halves' colors aligned; a bridgeless 3-regular graph is 2-connected, and
/// there is a vertex r with two nonadjacent neighbors u, w whose removal
/// keeps the graph connected: pre-coloring u and w alike and finishing in
/// reverse BFS order from r leaves a free color everywhere.
pub fn brooks_three_color(g: &Graph) -> Result<Vec<u32>, CubicError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) > 3) {
        return Err(CubicError::DegreeTooHigh {
            v,
            degree: g.degree(v),
        });
    }
    if !g.is_connected() {
        return Err(CubicError::NotConnected);
    }
    if g.n() == 4 && g.m() == 6 {
        return Err(CubicError::IsK4);
    }
    let mut colors = vec![0u32; g.n() as usize];
    color_connected(g, &mut colors)?;
    debug_assert!(g
        .edges()
        .iter()
        .all(|&(u, v)| colors[u as usize - 1] != colors[v as usize - 1]));
    Ok(colors)
}

fn color_connected(g: &Graph, colors: &mut [u32]) -> Result<(), CubicError> {
    if g.n() == 0 {
        return Ok(());
    }
    if let Some(root) = g.vertices().find(|&v| g.degree(v) < 3) {
        greedy_reverse_bfs(g, root, &[], colors);
        return Ok(());
    }
    // 3-regular from here on.
    if let Some(&(x, y)) = g.bridges().first() {
        return split_at_bridge(g, (x, y), colors);
    }
    // Bridgeless cubic graphs are 2-connected; search for the Lovász triple.
    for r in g.vertices() {
        let nbrs = g.neighbors(r);
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                let (u, w) = (nbrs[i], nbrs[j]);
                if g.has_edge(u, w) || !connected_without(g, u, w) {
                    continue;
                }
                colors[u as usize - 1] = 1;
                colors[w as usize - 1] = 1;
                greedy_reverse_bfs(g, r, &[u, w], colors);
                return Ok(());
            }
        }
    }
    Err(CubicError::Internal(
        "no admissible precoloring triple in a 3-regular graph".into(),
    ))
}

fn split_at_bridge(
    g: &Graph,
    bridge: (Vertex, Vertex),
    colors: &mut [u32],
) -> Result<(), CubicError> {
    let pruned: Vec<(Vertex, Vertex)> =
        g.edges().iter().copied().filter(|&e| e != bridge).collect();
    let cut = Graph::from_edges(g.n(), &pruned).expect("subset of valid edges");
    for comp in cut.connected_components() {
        let (sub, map) = cut.induced_subgraph(&comp);
        let mut sub_colors = vec![0u32; sub.n() as usize];
        color_connected(&sub, &mut sub_colors)?;
        for v in 1..=sub.n() {
            colors[map[v as usize] as usize - 1] = sub_colors[v as usize - 1];
        }
    }
    let (cx, cy) = (colors[bridge.0 as usize - 1], colors[bridge.1 as usize - 1]);
    if cx == cy {
        // Recolor y's side: swap cy with the smallest other color throughout.
        let other = (1..=3).find(|&c| c != cx).unwrap();
        let y_side: Vec<Vertex> = {
            let comps = cut.connected_components();
            comps.into_iter().find(|c| c.contains(&bridge.1)).unwrap()
        };
        for &v in &y_side {
            let c = &mut colors[v as usize - 1];
            if *c == cy {
                *c = other;
            } else if *c == other {
                *c = cy;
            }
        }
    }
    Ok(())
}

/// Whether `g` minus vertices `a` and `b` is connected.
fn connected_without(g: &Graph, a: Vertex, b: Vertex) -> bool {
    if g.n() <= 3 {
        return true;
    }
    let start = g.vertices().find(|&v| v != a && v != b).unwrap();
    let mut seen = vec![false; g.n() as usize + 1];
    seen[start as usize] = true;
    let mut stack = vec![start];
    let mut visited = 1u32;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if w != a && w != b && !seen[w as usize] {
                seen[w as usize] = true;
                visited += 1;
                stack.push(w);
            }
        }
    }
    visited == g.n() - 2
}

/// Colors `g` greedily in reverse BFS order from `root`, skipping the
/// pre-colored vertices in `skip` (which are excluded from the traversal).
fn greedy_reverse_bfs(g: &Graph, root: Vertex, skip: &[Vertex], colors: &mut [u32]) {
    let mut excluded = vec![false; g.n() as usize + 1];
    for &v in skip {
        excluded[v as usize] = true;
    }
    let mut order = Vec::new();
    let mut seen = vec![false; g.n() as usize + 1];
    seen[root as usize] = true;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in g.neighbors(v) {
            if !seen[w as usize] && !excluded[w as usize] {
                seen[w as usize] = true;
                queue.push_back(w);
            }
        }
    }
    for &v in order.iter().rev() {
        let mut used = [false; 4];
        for &w in g.neighbors(v) {
            let c = colors[w as usize - 1];
            if c != 0 {
                used[c as usize] = true;
            }
        }
        let c = (1..=3)
            .find(|&c| !used[c as usize])
            .expect("a color is free");
        colors[v as usize - 1] = c;
    }
}
