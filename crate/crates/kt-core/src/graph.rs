//! Simple undirected graphs with 1-based contiguous vertex ids.
//!
//! Graphs are immutable after construction; adjacency lists are built once,
//! kept sorted, and shared freely. All renumbering operations return explicit
//! old-to-new maps so downstream artifacts (orientation files, reduction
//! sidecars) stay stable.

use thiserror::Error;

/// 1-based vertex id.
pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: Vertex, n: u32 },
}

/// A finite simple undirected graph.
///
/// Vertices are `1..=n`. Edges are stored normalized (`u < v`) and sorted
/// lexicographically; the position of an edge in that order is its *edge
/// index*, used by [`crate::orientation::Orientation`] to attach directions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u32,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.edges.len(),
            self.edges
        )
    }
}

impl Graph {
    /// Builds a graph from an edge list. Pairs are normalized and
    /// deduplicated; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: u32, pairs: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            for x in [u, v] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange { v: x, n });
                }
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![Vec::new(); n as usize + 1];
        for &(u, v) in &edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// The empty graph on `n` vertices.
    pub fn empty(n: u32) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n as usize + 1],
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        1..=self.n
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Index of the normalized edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Whether some triple of vertices induces a triangle.
    pub fn triangle(&self) -> Option<[Vertex; 3]> {
        for &(u, v) in &self.edges {
            // Merge-scan the two sorted neighbor lists for a common vertex.
            let (a, b) = (self.neighbors(u), self.neighbors(v));
            let (mut i, mut j) = (0, 0);
            while i < a.len() && j < b.len() {
                match a[i].cmp(&b[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return Some([u, v, a[i]]),
                }
            }
        }
        None
    }

    pub fn has_triangle(&self) -> bool {
        self.triangle().is_some()
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n as usize + 1];
        let mut comps = Vec::new();
        for s in 1..=self.n {
            if seen[s as usize] {
                continue;
            }
            let mut comp = vec![s];
            seen[s as usize] = true;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// Induced subgraph on `verts` (deduplicated, sorted), together with the
    /// new-to-old vertex map (`map[new as usize] = old`, slot 0 unused).
    pub fn induced_subgraph(&self, verts: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut keep: Vec<Vertex> = verts.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut old_to_new = vec![0u32; self.n as usize + 1];
        for (i, &v) in keep.iter().enumerate() {
            old_to_new[v as usize] = i as u32 + 1;
        }
        let mut pairs = Vec::new();
        for &(u, v) in &self.edges {
            let (nu, nv) = (old_to_new[u as usize], old_to_new[v as usize]);
            if nu != 0 && nv != 0 {
                pairs.push((nu, nv));
            }
        }
        let g = Graph::from_edges(keep.len() as u32, &pairs).expect("induced edges are valid");
        let mut map = vec![0u32; keep.len() + 1];
        for (i, &v) in keep.iter().enumerate() {
            map[i + 1] = v;
        }
        (g, map)
    }

    /// All bridges, as normalized edges in lexicographic order, via a single
    /// iterative lowpoint traversal.
    pub fn bridges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.n as usize;
        let mut visit = vec![0u32; n + 1]; // 0 = unvisited, else 1-based clock
        let mut low = vec![u32::MAX; n + 1];
        let mut clock = 0u32;
        let mut out = Vec::new();
        for root in 1..=self.n {
            if visit[root as usize] != 0 {
                continue;
            }
            // Stack frames: (vertex, parent edge index or usize::MAX, next neighbor cursor).
            let mut stack: Vec<(Vertex, usize, usize)> = vec![(root, usize::MAX, 0)];
            clock += 1;
            visit[root as usize] = clock;
            low[root as usize] = clock;
            loop {
                let (v, pe, next) = {
                    let Some(frame) = stack.last_mut() else { break };
                    let (v, pe) = (frame.0, frame.1);
                    if frame.2 < self.adj[v as usize].len() {
                        let w = self.adj[v as usize][frame.2];
                        frame.2 += 1;
                        (v, pe, Some(w))
                    } else {
                        (v, pe, None)
                    }
                };
                match next {
                    Some(w) => {
                        let ei = self.edge_index(v, w).expect("adjacency matches edges");
                        if ei == pe {
                            continue; // skip the tree edge to the parent
                        }
                        if visit[w as usize] != 0 {
                            low[v as usize] = low[v as usize].min(visit[w as usize]);
                        } else {
                            clock += 1;
                            visit[w as usize] = clock;
                            low[w as usize] = clock;
                            stack.push((w, ei, 0));
                        }
                    }
                    None => {
                        stack.pop();
                        if let Some(&(p, _, _)) = stack.last() {
                            low[p as usize] = low[p as usize].min(low[v as usize]);
                            if low[v as usize] > visit[p as usize] {
                                out.push((p.min(v), p.max(v)));
                            }
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Length of a shortest cycle, or `None` for forests. BFS from every
    /// vertex; the minimum over all roots is exact.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; self.n as usize + 1];
        let mut parent = vec![0u32; self.n as usize + 1];
        for root in 1..=self.n {
            for d in dist.iter_mut() {
                *d = u32::MAX;
            }
            dist[root as usize] = 0;
            parent[root as usize] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        parent[w as usize] = v;
                        queue.push_back(w);
                    } else if parent[v as usize] != w {
                        let cand = dist[v as usize] + dist[w as usize] + 1;
                        if best.is_none_or(|b| cand < b) {
                            best = Some(cand);
                        }
                    }
                }
            }
        }
        best
    }

    /// Two-coloring by BFS. Per connected component, the class containing the
    /// lowest vertex id goes into the first set. `None` when an odd cycle
    /// exists.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        let mut color = vec![u8::MAX; self.n as usize + 1];
        let mut a = Vec::new();
        let mut b = Vec::new();
        for root in 1..=self.n {
            if color[root as usize] != u8::MAX {
                continue;
            }
            color[root as usize] = 0;
            a.push(root);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - color[v as usize];
                        if color[w as usize] == 0 {
                            a.push(w);
                        } else {
                            b.push(w);
                        }
                        queue.push_back(w);
                    } else if color[w as usize] == color[v as usize] {
                        return None;
                    }
                }
            }
        }
        a.sort_unstable();
        b.sort_unstable();
        Some((a, b))
    }

    /// All four-cycles, each as a closed walk `[a, b, c, d]` with consecutive
    /// vertices adjacent. Each cycle is listed once, with `a` its minimum
    /// vertex and `b < d`.
    pub fn four_cycles(&self) -> Vec<[Vertex; 4]> {
        let mut out = Vec::new();
        // A four-cycle a-b-c-d is determined by the opposite pair {a, c}
        // together with two of their common neighbors. Chords are allowed;
        // in triangle-free graphs every four-cycle is induced anyway.
        for a in 1..=self.n {
            for c in a + 1..=self.n {
                let (na, nc) = (self.neighbors(a), self.neighbors(c));
                let mut common = Vec::new();
                let (mut i, mut j) = (0, 0);
                while i < na.len() && j < nc.len() {
                    match na[i].cmp(&nc[j]) {
                        std::cmp::Ordering::Less => i += 1,
                        std::cmp::Ordering::Greater => j += 1,
                        std::cmp::Ordering::Equal => {
                            common.push(na[i]);
                            i += 1;
                            j += 1;
                        }
                    }
                }
                for x in 0..common.len() {
                    for y in x + 1..common.len() {
                        let (b, d) = (common[x], common[y]);
                        // Canonical form: minimum vertex first, smaller
                        // neighbor second; dedupe against the {b, d} pairing.
                        if a < b.min(d) {
                            out.push([a, b.min(d), c, b.max(d)]);
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::from_edges(3, &[(1, 2), (2, 3)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn construction_normalizes_and_dedupes() {
        let g = Graph::from_edges(3, &[(2, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(g.neighbors(2), &[1, 3]);
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::SelfLoop(1))
        );
        assert_eq!(
            Graph::from_edges(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { v: 4, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1)]),
            Err(GraphError::VertexOutOfRange { v: 0, n: 2 })
        );
    }

    #[test]
    fn triangle_detection() {
        let k3 = Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(k3.has_triangle());
        assert!(!c4().has_triangle());
    }

    #[test]
    fn bridges_on_paths_and_cycles() {
        assert_eq!(path3().bridges(), vec![(1, 2), (2, 3)]);
        assert!(c4().bridges().is_empty());
    }

    #[test]
    fn bridges_two_squares_joined() {
        // Two C4s joined by one edge; only the joining edge is a bridge.
        let g = Graph::from_edges(
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
                (4, 5),
            ],
        )
        .unwrap();
        assert_eq!(g.bridges(), vec![(4, 5)]);
    }

    #[test]
    fn girth_small_cases() {
        let k3 = Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(k3.girth(), Some(3));
        assert_eq!(c4().girth(), Some(4));
        assert_eq!(path3().girth(), None);
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(c4().bipartition(), Some((vec![1, 3], vec![2, 4])));
        let c5 = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert_eq!(c5.bipartition(), None);
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(5, &[(1, 2), (4, 5)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![vec![1, 2], vec![3], vec![4, 5]]
        );
        assert!(!g.is_connected());
        assert!(c4().is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let (sub, map) = c4().induced_subgraph(&[2, 3, 4]);
        assert_eq!(sub.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(map, vec![0, 2, 3, 4]);
    }

    #[test]
    fn four_cycles_enumeration() {
        assert_eq!(c4().four_cycles(), vec![[1, 2, 3, 4]]);
        let c5 = Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert!(c5.four_cycles().is_empty());
        // K4 has three four-cycles.
        let k4 = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert_eq!(k4.four_cycles().len(), 3);
    }
}
