//! Vertex-colored simple graphs and the constructions on them.
//!
//! Vertices are numbered from 1, so vertex `k` corresponds to the basis
//! vector `e_k` of the colored adjacency matrix.

mod json;

use std::collections::{BTreeSet, VecDeque};

pub use json::{ColorJson, GraphJson, VertexJson};

use crate::error::{Error, Result};
use crate::ratfun::RatFun;
use crate::symlinalg::{inverse_entry, SymMatrix};

/// The self-loop weight of a vertex.
///
/// `Z` puts `-z` on the diagonal, `W` puts `-w`, and `General(r)` puts `-r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Z,
    W,
    General(RatFun),
}

impl Color {
    /// A general color, folded back to `Z` or `W` when `r` is exactly `z` or `w`.
    pub fn general(r: RatFun) -> Color {
        if r == RatFun::z() {
            Color::Z
        } else if r == RatFun::w() {
            Color::W
        } else {
            Color::General(r)
        }
    }

    /// The loop weight `r` itself (the diagonal entry is `-r`).
    pub fn weight(&self) -> RatFun {
        match self {
            Color::Z => RatFun::z(),
            Color::W => RatFun::w(),
            Color::General(r) => r.clone(),
        }
    }

    pub fn diagonal(&self) -> RatFun {
        -self.weight()
    }

    pub fn is_general(&self) -> bool {
        matches!(self, Color::General(_))
    }
}

/// A bijection of `{1, ..., n}`, stored as the list of images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "image of {} is {v}, outside 1..={n}",
                    i + 1
                )));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("{v} is hit twice")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("swap({a},{b}) on {n} points")));
        }
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }
}

/// A simple undirected graph with colored vertices and a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    colors: Vec<Color>,
    edges: BTreeSet<(usize, usize)>,
    root: usize,
}

impl ColoredGraph {
    /// Validates and builds a graph. Edges are unordered pairs of 1-based
    /// vertex indices; self-loops and repeated edges are rejected.
    pub fn new(
        colors: Vec<Color>,
        edges: impl IntoIterator<Item = (usize, usize)>,
        root: usize,
    ) -> Result<Self> {
        let n = colors.len();
        if n == 0 {
            return Err(Error::graph("vertices", "graph has no vertices"));
        }
        if root == 0 || root > n {
            return Err(Error::graph("root", format!("root {root} is not a vertex")));
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::graph("edges", format!("[{i},{j}] names a missing vertex")));
            }
            if i == j {
                return Err(Error::graph("edges", format!("self-loop at vertex {i}")));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(Error::graph("edges", format!("duplicate edge [{i},{j}]")));
            }
        }
        Ok(ColoredGraph {
            colors,
            edges: set,
            root,
        })
    }

    pub fn single(color: Color) -> Self {
        ColoredGraph {
            colors: vec![color],
            edges: BTreeSet::new(),
            root: 1,
        }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn color(&self, v: usize) -> &Color {
        &self.colors[v - 1]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    /// Edges as `(i, j)` with `i < j`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn with_root(&self, root: usize) -> Result<Self> {
        self.check_vertex(root, "root")?;
        Ok(ColoredGraph {
            root,
            ..self.clone()
        })
    }

    pub fn with_color(&self, v: usize, color: Color) -> Result<Self> {
        self.check_vertex(v, "vertex")?;
        let mut g = self.clone();
        g.colors[v - 1] = color;
        Ok(g)
    }

    /// Vertices colored `W`, ascending.
    pub fn w_vertices(&self) -> Vec<usize> {
        self.vertices_colored(&Color::W)
    }

    /// Vertices colored `Z`, ascending.
    pub fn z_vertices(&self) -> Vec<usize> {
        self.vertices_colored(&Color::Z)
    }

    fn vertices_colored(&self, c: &Color) -> Vec<usize> {
        (1..=self.len()).filter(|&v| self.color(v) == c).collect()
    }

    /// True when every vertex is colored `Z` or `W`.
    pub fn is_zw_colored(&self) -> bool {
        self.colors.iter().all(|c| !c.is_general())
    }

    pub(crate) fn check_vertex(&self, v: usize, field: &str) -> Result<()> {
        if v == 0 || v > self.len() {
            return Err(Error::graph(field, format!("{v} is not a vertex of a {}-vertex graph", self.len())));
        }
        Ok(())
    }

    /// `A_G - zY - w(I - Y)`, generalized to arbitrary loop weights.
    pub fn colored_adjacency(&self) -> SymMatrix {
        let n = self.len();
        let mut m = SymMatrix::zeros(n);
        for (i, c) in self.colors.iter().enumerate() {
            m.set(i, i, c.diagonal());
        }
        for &(i, j) in &self.edges {
            m.set(i - 1, j - 1, RatFun::one());
            m.set(j - 1, i - 1, RatFun::one());
        }
        m
    }

    /// The plain 0/1 adjacency matrix as integers.
    pub fn adjacency_counts(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut a = vec![vec![0; n]; n];
        for &(i, j) in &self.edges {
            a[i - 1][j - 1] = 1;
            a[j - 1][i - 1] = 1;
        }
        a
    }

    /// Transports colors, edges and root along `phi`.
    pub fn relabel(&self, phi: &Permutation) -> Result<Self> {
        if phi.len() != self.len() {
            return Err(Error::InvalidPermutation(format!(
                "permutation of {} points applied to a {}-vertex graph",
                phi.len(),
                self.len()
            )));
        }
        let mut colors = vec![Color::Z; self.len()];
        for (i, c) in self.colors.iter().enumerate() {
            colors[phi.apply(i + 1) - 1] = c.clone();
        }
        let edges = self.edges.iter().map(|&(i, j)| (phi.apply(i), phi.apply(j)));
        ColoredGraph::new(colors, edges, phi.apply(self.root))
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize], root: usize) -> Result<Self> {
        let mut pos = vec![0usize; self.len() + 1];
        for (k, &v) in vertices.iter().enumerate() {
            self.check_vertex(v, "vertices")?;
            pos[v] = k + 1;
        }
        let colors = vertices.iter().map(|&v| self.color(v).clone()).collect();
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(i, j)| pos[i] != 0 && pos[j] != 0)
            .map(|&(i, j)| (pos[i], pos[j]))
            .collect();
        if pos[root] == 0 {
            return Err(Error::graph("root", "root not among induced vertices"));
        }
        ColoredGraph::new(colors, edges, pos[root])
    }

    /// Disjoint union; vertices of `h` follow those of `self`, root stays.
    pub fn disjoint_union(&self, h: &ColoredGraph) -> Self {
        let n = self.len();
        let mut colors = self.colors.clone();
        colors.extend(h.colors.iter().cloned());
        let mut edges = self.edges.clone();
        edges.extend(h.edges.iter().map(|&(i, j)| (i + n, j + n)));
        ColoredGraph {
            colors,
            edges,
            root: self.root,
        }
    }

    /// Breadth-first shortest-path length; `None` when disconnected.
    pub fn distance(&self, i: usize, j: usize) -> Option<usize> {
        self.bfs(i)[j - 1]
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency_lists();
        let mut dist = vec![None; self.len()];
        dist[s - 1] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v - 1].expect("queued vertices have a distance");
            for &u in &adj[v - 1] {
                if dist[u - 1].is_none() {
                    dist[u - 1] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.len()];
        for &(i, j) in &self.edges {
            adj[i - 1].push(j);
            adj[j - 1].push(i);
        }
        adj
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 1..=self.len() {
            if seen[s - 1] {
                continue;
            }
            let block: Vec<usize> = self
                .bfs(s)
                .iter()
                .enumerate()
                .filter_map(|(k, d)| d.map(|_| k + 1))
                .collect();
            for &v in &block {
                seen[v - 1] = true;
            }
            out.push(block);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }
}

/// Joins `g` and `h` at their roots.
///
/// The product keeps `g`'s numbering; `h`'s non-root vertices follow in
/// ascending order and `h`'s root is identified with `g`'s root.
pub fn star_product(g: &ColoredGraph, h: &ColoredGraph) -> Result<ColoredGraph> {
    if g.color(g.root) != h.color(h.root) {
        return Err(Error::IncompatibleRoots);
    }
    Ok(attach(g, h, g.root))
}

/// Star-merges a copy of `h` at vertex `at` of `g` (roots are not checked).
fn attach(g: &ColoredGraph, h: &ColoredGraph, at: usize) -> ColoredGraph {
    let mut map = vec![0usize; h.len() + 1];
    let mut colors = g.colors.clone();
    for v in 1..=h.len() {
        if v == h.root {
            map[v] = at;
        } else {
            colors.push(h.color(v).clone());
            map[v] = colors.len();
        }
    }
    let mut edges = g.edges.clone();
    edges.extend(h.edges.iter().map(|&(i, j)| {
        let (a, b) = (map[i], map[j]);
        (a.min(b), a.max(b))
    }));
    ColoredGraph {
        colors,
        edges,
        root: g.root,
    }
}

/// Attaches a fresh copy of `h` at every `Z`-colored vertex of `g`, in
/// ascending order of the attachment vertex.
pub fn comb_product_z(g: &ColoredGraph, h: &ColoredGraph) -> Result<ColoredGraph> {
    if h.color(h.root) != &Color::Z {
        return Err(Error::IncompatibleCombRoot);
    }
    Ok(g.z_vertices()
        .into_iter()
        .fold(g.clone(), |acc, v| attach(&acc, h, v)))
}

/// The pendant piece `K` of a decomposition `g = H * K` at `cut`: the
/// subgraph induced on `cut` followed by `k_subgraph` in ascending order,
/// rooted at `cut`.
pub fn pendant(g: &ColoredGraph, cut: usize, k_subgraph: &[usize]) -> Result<ColoredGraph> {
    check_retraction(g, cut, k_subgraph)?;
    let mut verts = vec![cut];
    let mut rest: Vec<usize> = k_subgraph.to_vec();
    rest.sort_unstable();
    verts.extend(rest);
    g.induced(&verts, cut)
}

fn check_retraction(g: &ColoredGraph, cut: usize, k_subgraph: &[usize]) -> Result<()> {
    g.check_vertex(cut, "cut")?;
    let mut inside = vec![false; g.len() + 1];
    for &v in k_subgraph {
        g.check_vertex(v, "subgraph")?;
        if v == cut {
            return Err(Error::InvalidRetraction("cut vertex listed in the subgraph".into()));
        }
        if std::mem::replace(&mut inside[v], true) {
            return Err(Error::InvalidRetraction(format!("vertex {v} listed twice")));
        }
    }
    if inside[g.root] {
        return Err(Error::InvalidRetraction("root lies inside the retracted subgraph".into()));
    }
    for (i, j) in g.edges() {
        let crossing = (inside[i] && !inside[j] && j != cut) || (inside[j] && !inside[i] && i != cut);
        if crossing {
            return Err(Error::InvalidRetraction(format!(
                "edge [{i},{j}] leaves the subgraph away from the cut vertex"
            )));
        }
    }
    Ok(())
}

/// Deletes `k_subgraph` and recolors `cut` so that its diagonal entry becomes
/// `g_K = 1/f_K`, the reciprocal representing function of the pendant piece.
/// Remaining vertices keep their relative order.
pub fn retract(g: &ColoredGraph, cut: usize, k_subgraph: &[usize]) -> Result<ColoredGraph> {
    let k = pendant(g, cut, k_subgraph)?;
    let f_k = inverse_entry(&k.colored_adjacency(), 0)?;
    let g_k = f_k.reciprocal()?;
    let keep: Vec<usize> = (1..=g.len()).filter(|v| !k_subgraph.contains(v)).collect();
    let h = g.induced(&keep, g.root)?;
    let new_cut = keep.iter().position(|&v| v == cut).expect("cut is kept") + 1;
    h.with_color(new_cut, Color::general(-g_k))
}
