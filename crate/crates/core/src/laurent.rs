//! Expansions at `z = inf` and the contact order of level curves.
//!
//! Series here are in `1/z` with coefficients that are rational functions of
//! the other variables, typically `lambda`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::nevanlinna::root_function;
use crate::ratfun::{Polynomial, RatFun, RatFunJson, Var};
use crate::symlinalg::inverse_entry_at;

/// A truncated series `sum_{k = k0}^{N} c_k z^{-k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries {
    start_order: i64,
    coeffs: Vec<RatFun>,
    truncation: i64,
}

impl LaurentSeries {
    /// Lowest power of `1/z` stored (negative for a polynomial part).
    pub fn start_order(&self) -> i64 {
        self.start_order
    }

    /// Terms up to and including `z^{-N}` are exact.
    pub fn truncation(&self) -> i64 {
        self.truncation
    }

    /// Stored coefficients, `coeffs()[i]` multiplying `z^{-(k0 + i)}`.
    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    /// Coefficient of `z^{-k}`; zero below the start order.
    ///
    /// Panics if `k` lies beyond the truncation order.
    pub fn coefficient(&self, k: i64) -> RatFun {
        assert!(k <= self.truncation, "coefficient {k} beyond truncation {}", self.truncation);
        if k < self.start_order {
            return RatFun::zero();
        }
        self.coeffs[(k - self.start_order) as usize].clone()
    }

    /// Nonzero terms as `(k, c_k)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &RatFun)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.start_order + i as i64, c))
    }

    /// Order of vanishing at infinity: the smallest `k` with `c_k != 0`.
    pub fn first_nonzero_order(&self) -> Result<i64> {
        self.terms()
            .next()
            .map(|(k, _)| k)
            .ok_or(Error::OrderExceedsTruncation)
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            start_order: self.start_order,
            truncation: self.truncation,
            coeffs: self.coeffs.iter().map(RatFun::to_json).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesJson {
    pub start_order: i64,
    pub truncation: i64,
    pub coeffs: Vec<RatFunJson>,
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.terms() {
            if c.is_polynomial() {
                write!(f, "({})*z^{} + ", c.num(), -k)?;
            } else {
                write!(f, "(({})/({}))*z^{} + ", c.num(), c.den(), -k)?;
            }
        }
        write!(f, "O(z^-{})", self.truncation + 1)
    }
}

/// Expands `r` at `z = inf` up to and including `z^{-N}`.
///
/// With `z = 1/u` the numerator and denominator become polynomials in `u`
/// whose coefficients are free of `z`; power-series division then runs on
/// polynomial numerators `d_m = c_m * q0^{m+1}`, so the only divisions are
/// the final normalizations by powers of the leading coefficient `q0`.
pub fn expand_at_infinity(r: &RatFun, truncation: i64) -> LaurentSeries {
    let p = reversed(r.num(), Var::Z);
    let q = reversed(r.den(), Var::Z);
    let start_order = if r.is_zero() {
        0
    } else {
        r.den().degree_in(Var::Z) as i64 - r.num().degree_in(Var::Z) as i64
    };
    let count = (truncation - start_order + 1).max(0) as usize;
    let q0 = q[0].clone();
    let mut q0_pows = vec![Polynomial::one()];
    let mut d: Vec<Polynomial> = Vec::with_capacity(count);
    let mut coeffs = Vec::with_capacity(count);
    for m in 0..count {
        while q0_pows.len() <= m + 1 {
            let next = q0_pows.last().expect("nonempty") * &q0;
            q0_pows.push(next);
        }
        let mut dm = match p.get(m) {
            Some(pm) => pm * &q0_pows[m],
            None => Polynomial::zero(),
        };
        for j in 1..=m.min(q.len() - 1) {
            if q[j].is_zero() || d[m - j].is_zero() {
                continue;
            }
            dm -= &(&(&q[j] * &d[m - j]) * &q0_pows[j - 1]);
        }
        coeffs.push(RatFun::new(dm.clone(), q0_pows[m + 1].clone()).expect("q0 is nonzero"));
        d.push(dm);
    }
    LaurentSeries {
        start_order,
        coeffs,
        truncation,
    }
}

/// Coefficients of `v^{deg}, v^{deg-1}, ..., v^0`.
fn reversed(p: &Polynomial, v: Var) -> Vec<Polynomial> {
    let mut c = p.coeffs_in(v);
    c.reverse();
    if c.is_empty() {
        c.push(Polynomial::zero());
    }
    c
}

/// Series of the walk generating function `W_ij = (A - zI)^{-1}_{(i,j)}`,
/// ignoring vertex colors.
pub fn walk_generating_series(
    g: &ColoredGraph,
    i: usize,
    j: usize,
    truncation: i64,
) -> Result<LaurentSeries> {
    g.check_vertex(i, "from")?;
    g.check_vertex(j, "to")?;
    let all_z = ColoredGraph::new(vec![Color::Z; g.len()], g.edges(), g.root())?;
    let w = inverse_entry_at(&all_z.colored_adjacency(), i - 1, j - 1)?;
    Ok(expand_at_infinity(&w, truncation))
}

/// The solved level set `w = Lambda_lambda(z)` of `f(z, w) = lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelCurve {
    pub lambda_fn: RatFun,
}

impl LevelCurve {
    /// `f(z, Lambda_lambda(z))`, which normalizes to `lambda`.
    pub fn back_substitute(&self, f: &RatFun) -> Result<RatFun> {
        f.substitute(Var::W, &self.lambda_fn)
    }
}

/// Solves `(a + b w) / (c + d w) = lambda` for `w`.
pub fn level_curve(f: &RatFun) -> Result<LevelCurve> {
    if f.contains(Var::Lambda) {
        return Err(Error::InvalidArgument(
            "level curves need a function of z and w only".into(),
        ));
    }
    if f.num().degree_in(Var::W) > 1 || f.den().degree_in(Var::W) > 1 {
        return Err(Error::MultipleWVertices);
    }
    let split = |p: &Polynomial| {
        let mut c = p.coeffs_in(Var::W);
        c.resize(2, Polynomial::zero());
        (c[0].clone(), c[1].clone())
    };
    let (alpha, beta) = split(f.num());
    let (gamma, delta) = split(f.den());
    let lambda = Polynomial::lambda();
    let num = &(&lambda * &gamma) - &alpha;
    let den = &beta - &(&lambda * &delta);
    if den.is_zero() {
        return Err(Error::DegenerateLevelCurve);
    }
    Ok(LevelCurve {
        lambda_fn: RatFun::new(num, den)?,
    })
}

/// Truncation order used for contact computations on `f`.
pub fn contact_truncation(f: &RatFun) -> i64 {
    2 * f.den().degree_in(Var::Z) as i64 + 4
}

/// Order of vanishing at infinity of `Lambda_lambda - Lambda_mu`: the first
/// power of `1/z` whose coefficient depends on `lambda`.
pub fn contact_order(f: &RatFun) -> Result<u32> {
    let curve = level_curve(f)?;
    let series = expand_at_infinity(&curve.lambda_fn, contact_truncation(f));
    for (k, c) in series.terms() {
        if !c.derivative(Var::Lambda).is_zero() {
            return u32::try_from(k).map_err(|_| Error::NegativeContactOrder);
        }
    }
    Err(Error::ContactOrderExceedsBound)
}

/// Contact order next to twice the root-to-`w` distance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContactReport {
    pub order: u32,
    pub distance: usize,
    pub consistent: bool,
}

/// Checks that the contact order at the root is twice the distance to the
/// unique `w`-colored vertex.
pub fn verify_contact_theorem(g: &ColoredGraph) -> Result<ContactReport> {
    if !g.is_zw_colored() {
        return Err(Error::ContactPrecondition("all vertices must be colored z or w".into()));
    }
    let ws = g.w_vertices();
    if ws.len() != 1 {
        return Err(Error::WVertexCount(ws.len()));
    }
    let distance = g.distance(g.root(), ws[0]).ok_or_else(|| {
        Error::ContactPrecondition("the w vertex is not reachable from the root".into())
    })?;
    let order = contact_order(&root_function(g)?)?;
    Ok(ContactReport {
        order,
        distance,
        consistent: order as usize == 2 * distance,
    })
}
