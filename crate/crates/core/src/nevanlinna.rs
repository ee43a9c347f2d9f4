//! Representing functions `f_G^k = (A_G^-1)_{(k,k)}` and the product
//! identities they satisfy.
//!
//! Every verifier returns both sides of its identity together with the
//! outcome of an exact comparison, so a failing case can be inspected.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{comb_product_z, retract, star_product, ColoredGraph, Permutation};
use crate::ratfun::{RatFun, Var};
use crate::symlinalg::{inverse_entry, schur_reduce};

/// `f_G^k` for a vertex `k` (1-based).
pub fn representing_function(g: &ColoredGraph, k: usize) -> Result<RatFun> {
    g.check_vertex(k, "vertex")?;
    inverse_entry(&g.colored_adjacency(), k - 1)
}

/// `f_G` at the graph's root.
pub fn root_function(g: &ColoredGraph) -> Result<RatFun> {
    representing_function(g, g.root())
}

/// The reciprocal Cauchy transform `g_G^k = 1 / f_G^k`.
pub fn reciprocal_transform(g: &ColoredGraph, k: usize) -> Result<RatFun> {
    representing_function(g, k)?.reciprocal()
}

/// A representing function together with the graph and vertex it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentingFunction {
    pub f: RatFun,
    pub graph: ColoredGraph,
    pub vertex: usize,
}

impl RepresentingFunction {
    pub fn compute(graph: &ColoredGraph, vertex: usize) -> Result<Self> {
        Ok(RepresentingFunction {
            f: representing_function(graph, vertex)?,
            graph: graph.clone(),
            vertex,
        })
    }

    pub fn at_root(graph: &ColoredGraph) -> Result<Self> {
        Self::compute(graph, graph.root())
    }
}

/// Both sides of an identity and whether they agree exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub lhs: RatFun,
    pub rhs: RatFun,
    pub equal: bool,
}

impl IdentityReport {
    fn new(lhs: RatFun, rhs: RatFun) -> Self {
        let equal = lhs == rhs;
        IdentityReport { lhs, rhs, equal }
    }
}

/// `g_{G*H} = g_G + g_H - g_0`, where `g_0` is the reciprocal transform of
/// the one-vertex graph carrying the shared root color, i.e. the root's
/// diagonal entry.
pub fn verify_star_identity(g: &ColoredGraph, h: &ColoredGraph) -> Result<IdentityReport> {
    let product = star_product(g, h)?;
    let lhs = reciprocal_transform(&product, product.root())?;
    let g0 = g.color(g.root()).diagonal();
    let rhs = &(&reciprocal_transform(g, g.root())? + &reciprocal_transform(h, h.root())?) - &g0;
    Ok(IdentityReport::new(lhs, rhs))
}

/// `f_{G |>_z H}(z, w) = f_G(-g_H(z, w), w)`.
pub fn verify_comb_identity(g: &ColoredGraph, h: &ColoredGraph) -> Result<IdentityReport> {
    let comb = comb_product_z(g, h)?;
    let lhs = root_function(&comb)?;
    let minus_g_h = -reciprocal_transform(h, h.root())?;
    let rhs = root_function(g)?.substitute(Var::Z, &minus_g_h)?;
    Ok(IdentityReport::new(lhs, rhs))
}

/// `f_G = f_{H'}` where `H'` is `G` with the pendant piece at `cut` retracted.
pub fn verify_retract_identity(
    g: &ColoredGraph,
    cut: usize,
    k_subgraph: &[usize],
) -> Result<IdentityReport> {
    let reduced = retract(g, cut, k_subgraph)?;
    Ok(IdentityReport::new(root_function(g)?, root_function(&reduced)?))
}

/// `f_G^k = f_{phi(G)}^{phi(k)}`.
pub fn verify_relabel_invariance(
    g: &ColoredGraph,
    phi: &Permutation,
    k: usize,
) -> Result<IdentityReport> {
    let h = g.relabel(phi)?;
    Ok(IdentityReport::new(
        representing_function(g, k)?,
        representing_function(&h, phi.apply(k))?,
    ))
}

/// Adding a component disconnected from the root leaves `f_G` unchanged.
pub fn verify_component_invariance(
    g: &ColoredGraph,
    extra: &ColoredGraph,
) -> Result<IdentityReport> {
    Ok(IdentityReport::new(
        root_function(g)?,
        root_function(&g.disjoint_union(extra))?,
    ))
}

/// `f_G^k` computed through a chain of Schur complements.
///
/// `chain` lists nested vertex sets (original 1-based labels), each of which
/// must contain `k`; the colored adjacency matrix is reduced onto each in
/// turn before the final inverse entry is taken.
pub fn representing_function_via_schur(
    g: &ColoredGraph,
    k: usize,
    chain: &[Vec<usize>],
) -> Result<RatFun> {
    g.check_vertex(k, "vertex")?;
    let mut m = g.colored_adjacency();
    let mut labels: Vec<usize> = (1..=g.len()).collect();
    for set in chain {
        let mut set = set.clone();
        set.sort_unstable();
        set.dedup();
        if !set.contains(&k) {
            return Err(Error::InvalidArgument(format!(
                "Schur chain step {set:?} drops vertex {k}"
            )));
        }
        let positions = set
            .iter()
            .map(|v| {
                labels.iter().position(|l| l == v).ok_or_else(|| {
                    Error::InvalidArgument(format!("Schur chain step is not nested: {v} already eliminated"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        m = schur_reduce(&m, &positions)?;
        labels = set;
    }
    let pos = labels
        .iter()
        .position(|&l| l == k)
        .expect("chain keeps k");
    inverse_entry(&m, pos)
}

/// Direct inverse entry versus the Schur chain.
pub fn verify_schur_path(
    g: &ColoredGraph,
    k: usize,
    chain: &[Vec<usize>],
) -> Result<IdentityReport> {
    Ok(IdentityReport::new(
        representing_function(g, k)?,
        representing_function_via_schur(g, k, chain)?,
    ))
}
