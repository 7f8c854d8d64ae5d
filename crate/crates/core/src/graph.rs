//! Immutable simple undirected graphs, all-pairs hop distances, and the
//! item/coordinate primitives shared by every other module.
//!
//! Vertices are dense indices `0..n`. Human-readable names ("a_3", "v_0")
//! live in an optional side map so arbitrary input graphs need no labels.
//! All distances are exact integers (hops); there is no floating point
//! anywhere in the crate.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be at least 2, got {0}")]
    TooFewVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range 0..{n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LandmarkError {
    #[error("landmark sequence is empty")]
    EmptyLandmarks,
    #[error("duplicate landmark {0}")]
    DuplicateLandmark(usize),
    #[error("landmark index {index} out of range 0..{n}")]
    IndexOutOfRange { index: usize, n: usize },
}

/// Bidirectional vertex-index <-> name map.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labels {
    names: Vec<Option<String>>,
    by_name: HashMap<String, usize>,
}

impl Labels {
    pub fn new(n: usize) -> Self {
        Labels {
            names: vec![None; n],
            by_name: HashMap::new(),
        }
    }

    pub fn set(&mut self, vertex: usize, name: impl Into<String>) {
        let name = name.into();
        if let Some(Some(old)) = self.names.get(vertex) {
            self.by_name.remove(old);
        }
        self.by_name.insert(name.clone(), vertex);
        self.names[vertex] = Some(name);
    }

    pub fn get(&self, vertex: usize) -> Option<&str> {
        self.names.get(vertex).and_then(|s| s.as_deref())
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.by_name.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.iter().all(|s| s.is_none())
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &str)> {
        self.names
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.as_deref().map(|s| (i, s)))
    }
}

/// Immutable simple undirected connected graph.
///
/// Edges are stored canonically as `(min, max)` pairs sorted
/// lexicographically; adjacency lists are sorted. Construction validates
/// simplicity and connectivity, so every accessor can assume both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    labels: Option<Labels>,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: each edge as (min, max), sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n {
            return false;
        }
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    /// Label of `v` if present, else the index rendered as text.
    pub fn vertex_name(&self, v: usize) -> String {
        self.labels
            .as_ref()
            .and_then(|l| l.get(v))
            .map(str::to_owned)
            .unwrap_or_else(|| v.to_string())
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.labels.as_ref().and_then(|l| l.lookup(name))
    }

    /// True when the graph is a path: exactly two vertices of degree 1 and
    /// all others of degree 2.
    pub fn is_path(&self) -> bool {
        let mut deg1 = 0;
        for v in 0..self.n {
            match self.degree(v) {
                1 => deg1 += 1,
                2 => {}
                _ => return false,
            }
        }
        deg1 == 2
    }
}

/// Build and validate a graph from an edge list.
///
/// Edges are canonicalized to (min, max) and sorted; input order is
/// irrelevant. Rejects self-loops, duplicate edges (in either orientation),
/// out-of-range endpoints, and disconnected input.
pub fn build_graph(
    n: usize,
    edge_pairs: &[(usize, usize)],
    labels: Option<Labels>,
) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::TooFewVertices(n));
    }
    let mut edges = Vec::with_capacity(edge_pairs.len());
    for &(u, v) in edge_pairs {
        if u >= n {
            return Err(GraphError::IndexOutOfRange { index: u, n });
        }
        if v >= n {
            return Err(GraphError::IndexOutOfRange { index: v, n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.sort_unstable();
    for w in edges.windows(2) {
        if w[0] == w[1] {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
    }

    let mut adjacency = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adjacency[u].push(v);
        adjacency[v].push(u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }

    // Connectivity: BFS from 0; report the smallest unreachable vertex.
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    seen[0] = true;
    queue.push_back(0);
    while let Some(u) = queue.pop_front() {
        for &v in &adjacency[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(GraphError::Disconnected(v));
    }

    Ok(Graph {
        n,
        adjacency,
        edges,
        labels,
    })
}

/// Dense table of pairwise shortest-path lengths in hops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Largest entry (the graph diameter).
    pub fn diameter(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }
}

/// Breadth-first search from every vertex. Every entry is finite because
/// connectivity is enforced at construction.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = std::collections::VecDeque::with_capacity(n);
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &v in g.neighbors(u) {
                if row[v] == u32::MAX {
                    row[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, dist }
}

/// An element of the mixed domain V ∪ E: either a vertex or an edge.
///
/// The derived ordering is the canonical item order: all vertices by index,
/// then all edges in canonical edge-list (lexicographic) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Item {
    Vertex(usize),
    Edge(usize, usize),
}

impl Item {
    pub fn edge(u: usize, v: usize) -> Item {
        Item::Edge(u.min(v), u.max(v))
    }

    /// Human-readable description using the graph's labels when present.
    pub fn describe(&self, g: &Graph) -> String {
        match *self {
            Item::Vertex(v) => g.vertex_name(v),
            Item::Edge(u, v) => format!("{}-{}", g.vertex_name(u), g.vertex_name(v)),
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Item::Vertex(v) => write!(f, "{v}"),
            Item::Edge(u, v) => write!(f, "{u}-{v}"),
        }
    }
}

/// Distance from an item to a vertex: `d(v,w)` for a vertex item,
/// `min(d(u,w), d(v,w))` for an edge item.
#[inline]
pub fn item_distance(dm: &DistanceMatrix, item: Item, w: usize) -> u32 {
    match item {
        Item::Vertex(v) => dm.get(v, w),
        Item::Edge(u, v) => dm.get(u, w).min(dm.get(v, w)),
    }
}

fn validate_landmarks(n: usize, landmarks: &[usize]) -> Result<(), LandmarkError> {
    if landmarks.is_empty() {
        return Err(LandmarkError::EmptyLandmarks);
    }
    let mut seen = vec![false; n];
    for &w in landmarks {
        if w >= n {
            return Err(LandmarkError::IndexOutOfRange { index: w, n });
        }
        if seen[w] {
            return Err(LandmarkError::DuplicateLandmark(w));
        }
        seen[w] = true;
    }
    Ok(())
}

/// Coordinate vector of an item with respect to an ordered landmark
/// sequence: entry i is `item_distance(item, landmarks[i])`.
pub fn coordinate_vector(
    dm: &DistanceMatrix,
    item: Item,
    landmarks: &[usize],
) -> Result<Vec<u32>, LandmarkError> {
    validate_landmarks(dm.vertex_count(), landmarks)?;
    Ok(landmarks
        .iter()
        .map(|&w| item_distance(dm, item, w))
        .collect())
}

/// Degree/bridge summary used by generators and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructuralReport {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub is_bridgeless: bool,
}

/// Degrees from adjacency; bridgelessness via DFS lowlink.
pub fn structural_report(g: &Graph) -> StructuralReport {
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    StructuralReport {
        min_degree,
        max_degree,
        is_regular: min_degree == max_degree,
        is_bridgeless: find_bridges(g).is_empty(),
    }
}

/// All bridges, as canonical (min, max) pairs. Iterative Tarjan lowlink.
pub fn find_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![usize::MAX; n];
    let mut bridges = Vec::new();
    let mut counter = 0;
    // explicit stack of (vertex, parent-edge-skipped flag, neighbor cursor)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&mut (u, parent, ref mut cursor)) = stack.last_mut() {
            if *cursor < g.neighbors(u).len() {
                let v = g.neighbors(u)[*cursor];
                *cursor += 1;
                if v == parent {
                    // skip one parent edge occurrence (graphs are simple,
                    // so a single skip is exact)
                    continue;
                }
                if order[v] == usize::MAX {
                    order[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    stack.push((v, u, 0));
                } else {
                    low[u] = low[u].min(order[v]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > order[p] {
                        bridges.push((p.min(u), p.max(u)));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}
