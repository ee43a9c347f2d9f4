//! Seeded random instances for property suites and examples.
//!
//! Every generator takes an explicit RNG so runs are reproducible from a seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Color, ColoredGraph, Permutation};

/// Edges of a random connected graph on `1..=n`: a random spanning tree plus
/// each remaining pair independently with probability `extra`.
pub fn connected_edges(rng: &mut impl Rng, n: usize, extra: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let v = order[i];
        edges.push((parent.min(v), parent.max(v)));
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if !edges.contains(&(i, j)) && rng.gen_bool(extra) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges
}

fn random_color(rng: &mut impl Rng) -> Color {
    if rng.gen_bool(0.5) {
        Color::Z
    } else {
        Color::W
    }
}

/// Connected `{z, w}`-colored graph with `n` vertices and a random root.
pub fn zw_graph(rng: &mut impl Rng, n: usize) -> ColoredGraph {
    let colors = (0..n).map(|_| random_color(rng)).collect();
    let edges = connected_edges(rng, n, 0.3);
    let root = rng.gen_range(1..=n);
    ColoredGraph::new(colors, edges, root).expect("generated graph is valid")
}

/// Connected graph with exactly one `w` vertex and a random root.
pub fn single_w_graph(rng: &mut impl Rng, n: usize) -> ColoredGraph {
    let mut colors = vec![Color::Z; n];
    colors[rng.gen_range(0..n)] = Color::W;
    let edges = connected_edges(rng, n, 0.3);
    let root = rng.gen_range(1..=n);
    ColoredGraph::new(colors, edges, root).expect("generated graph is valid")
}

/// Connected graph with every vertex colored `z`.
pub fn all_z_graph(rng: &mut impl Rng, n: usize) -> ColoredGraph {
    let edges = connected_edges(rng, n, 0.3);
    let root = rng.gen_range(1..=n);
    ColoredGraph::new(vec![Color::Z; n], edges, root).expect("generated graph is valid")
}

/// A random permutation of `1..=n`.
pub fn permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("a shuffle is a bijection")
}

/// `(G, H)` with matching root colors and `|G| + |H| - 1 <= max_vertices`.
pub fn star_pair(rng: &mut impl Rng, max_vertices: usize) -> (ColoredGraph, ColoredGraph) {
    let ng = rng.gen_range(1..=max_vertices.saturating_sub(1).max(1));
    let nh = rng.gen_range(1..=(max_vertices + 1 - ng).max(1));
    let g = zw_graph(rng, ng);
    let mut h = zw_graph(rng, nh);
    h = h.with_color(h.root(), g.color(g.root()).clone()).expect("root is a vertex");
    (g, h)
}

/// `(G, H)` with `H` rooted at a `z` vertex and the z-comb product of size
/// at most `max_vertices`. With `all_z`, both graphs are entirely
/// `z`-colored.
pub fn comb_pair(rng: &mut impl Rng, max_vertices: usize, all_z: bool) -> (ColoredGraph, ColoredGraph) {
    loop {
        let ng = rng.gen_range(1..=max_vertices.min(4));
        let nh = rng.gen_range(1..=3);
        let g = if all_z { all_z_graph(rng, ng) } else { zw_graph(rng, ng) };
        let mut h = if all_z { all_z_graph(rng, nh) } else { zw_graph(rng, nh) };
        h = h.with_color(h.root(), Color::Z).expect("root is a vertex");
        if ng + g.z_vertices().len() * (nh - 1) <= max_vertices {
            return (g, h);
        }
    }
}

/// A connected graph with a pendant piece: vertex `cut` separates the
/// `subgraph` vertices from the rest, which contains the root.
#[derive(Clone, Debug)]
pub struct PendantInstance {
    pub graph: ColoredGraph,
    pub cut: usize,
    pub subgraph: Vec<usize>,
}

/// Random pendant instance with at most `max_vertices` vertices, labels
/// shuffled so the pendant piece is not always last.
pub fn pendant_instance(rng: &mut impl Rng, max_vertices: usize) -> PendantInstance {
    let max_vertices = max_vertices.max(2);
    let core = rng.gen_range(1..max_vertices);
    let extra = rng.gen_range(1..=max_vertices - core);
    let n = core + extra;
    let mut edges = connected_edges(rng, core, 0.3);
    let cut = rng.gen_range(1..=core);
    // Piece on `cut` plus the new vertices, cut relabeled as vertex 1 there.
    let piece = connected_edges(rng, extra + 1, 0.3);
    let lift = |v: usize| if v == 1 { cut } else { core + v - 1 };
    edges.extend(piece.into_iter().map(|(a, b)| {
        let (a, b) = (lift(a), lift(b));
        (a.min(b), a.max(b))
    }));
    let colors = (0..n).map(|_| random_color(rng)).collect();
    let root = rng.gen_range(1..=core);
    let g = ColoredGraph::new(colors, edges, root).expect("generated graph is valid");
    let phi = permutation(rng, n);
    let mut subgraph: Vec<usize> = (core + 1..=n).map(|v| phi.apply(v)).collect();
    subgraph.sort_unstable();
    PendantInstance {
        graph: g.relabel(&phi).expect("permutation has the graph's size"),
        cut: phi.apply(cut),
        subgraph,
    }
}

/// A random strictly decreasing chain of vertex sets from `1..=n` down to
/// `{k}`, excluding the full set itself.
pub fn schur_chain(rng: &mut impl Rng, n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = (1..=n).filter(|&v| v != k).collect();
    rest.shuffle(rng);
    let mut chain = Vec::new();
    while !rest.is_empty() {
        let drop = rng.gen_range(1..=rest.len());
        rest.truncate(rest.len() - drop);
        let mut set = rest.clone();
        set.push(k);
        set.sort_unstable();
        chain.push(set);
    }
    chain
}
