//! Floating-point oracles for exact results.
//!
//! Rational functions are evaluated in `Complex<f64>`, the Pick and inner
//! properties are sampled, and representing functions are compared with an
//! LU solve of the colored adjacency matrix.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph};
use crate::nevanlinna::root_function;
use crate::ratfun::{Polynomial, RatFun, Var};

/// Denominators smaller than this in modulus are treated as poles.
pub const POLE_GUARD: f64 = 1e-12;
/// Tolerance for the sign and reality checks on sampled values.
pub const PICK_TOLERANCE: f64 = 1e-9;

const MAX_REDRAWS: usize = 1000;

/// Evaluates a polynomial at a complex point.
pub fn eval_poly(p: &Polynomial, z: Complex64, w: Complex64, lambda: Complex64) -> Complex64 {
    let point = [z, w, lambda];
    let mut acc = Complex64::zero();
    for (m, c) in p.terms() {
        let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        for (v, x) in [Var::Z, Var::W, Var::Lambda].into_iter().zip(point) {
            let e = m.exp(v);
            if e > 0 {
                t *= x.powu(e);
            }
        }
        acc += t;
    }
    acc
}

/// Evaluates `num / den`, refusing points where `|den| <= 1e-12`.
pub fn eval_complex(r: &RatFun, z: Complex64, w: Complex64, lambda: Complex64) -> Result<Complex64> {
    let den = eval_poly(r.den(), z, w, lambda);
    if den.norm() <= POLE_GUARD {
        return Err(Error::PoleProximity);
    }
    Ok(eval_poly(r.num(), z, w, lambda) / den)
}

/// A point of the upper half-plane with `Re in [-5, 5]`, `Im in (0, 5]`.
pub fn upper_point(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-5.0..=5.0), 5.0 - rng.gen_range(0.0..5.0))
}

/// A real point in `[-5, 5]`.
pub fn real_point(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-5.0..=5.0), 0.0)
}

/// Outcome of sampling the Pick and inner properties.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SampleReport {
    /// Samples drawn in each of the two regions.
    pub samples: usize,
    /// Smallest `Im f` seen in the upper bi-half-plane.
    pub worst_imag: f64,
    /// Largest `|Im f|` seen at real points.
    pub worst_residual: f64,
    pub seed: u64,
    pub pass: bool,
}

/// Samples `f_G` on `count` points of the upper bi-half-plane and `count`
/// real points away from poles.
pub fn pick_property_sample(g: &ColoredGraph, count: usize, seed: u64) -> Result<SampleReport> {
    if !g.is_zw_colored() {
        return Err(Error::PickNotAsserted);
    }
    let f = root_function(g)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_imag = f64::INFINITY;
    for _ in 0..count {
        let v = draw(&mut rng, &f, upper_point)?;
        worst_imag = worst_imag.min(v.im);
    }
    let mut worst_residual = 0.0f64;
    for _ in 0..count {
        let v = draw(&mut rng, &f, real_point)?;
        worst_residual = worst_residual.max(v.im.abs());
    }
    if count == 0 {
        worst_imag = 0.0;
    }
    Ok(SampleReport {
        samples: count,
        worst_imag,
        worst_residual,
        seed,
        pass: worst_imag >= -PICK_TOLERANCE && worst_residual <= PICK_TOLERANCE,
    })
}

fn draw(
    rng: &mut ChaCha8Rng,
    f: &RatFun,
    point: fn(&mut ChaCha8Rng) -> Complex64,
) -> Result<Complex64> {
    for _ in 0..MAX_REDRAWS {
        let (z, w) = (point(rng), point(rng));
        match eval_complex(f, z, w, Complex64::zero()) {
            Err(Error::PoleProximity) => continue,
            other => return other,
        }
    }
    Err(Error::PoleProximity)
}

/// `((A - z_Y)^{-1})_{(k,k)}` by LU with partial pivoting.
pub fn resolvent_oracle(g: &ColoredGraph, k: usize, z: Complex64, w: Complex64) -> Result<Complex64> {
    g.check_vertex(k, "vertex")?;
    let n = g.len();
    let mut diag = Vec::with_capacity(n);
    for c in g.colors() {
        diag.push(match c {
            Color::Z => -z,
            Color::W => -w,
            Color::General(r) => {
                if r.contains(Var::Lambda) {
                    return Err(Error::InvalidArgument("vertex colors may not involve lambda".into()));
                }
                -eval_complex(r, z, w, Complex64::zero())?
            }
        });
    }
    let mut m = DMatrix::from_diagonal(&DVector::from_vec(diag));
    for (i, j) in g.edges() {
        m[(i - 1, j - 1)] = Complex64::new(1.0, 0.0);
        m[(j - 1, i - 1)] = Complex64::new(1.0, 0.0);
    }
    let lu = m.lu();
    let u = lu.u();
    let pivots: Vec<f64> = u.diagonal().iter().map(|p| p.norm()).collect();
    let largest = pivots.iter().cloned().fold(0.0, f64::max);
    if pivots.iter().any(|&p| p <= largest * 1e-14 || p == 0.0) {
        return Err(Error::NumericallySingular);
    }
    let mut e = DVector::zeros(n);
    e[k - 1] = Complex64::new(1.0, 0.0);
    let x = lu.solve(&e).ok_or(Error::NumericallySingular)?;
    Ok(x[k - 1])
}

/// `|a - b| / max(1, |b|)`.
pub fn relative_error(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Largest relative difference between `a` and `b` over `count` seeded
/// points `(z, w)` of the upper bi-half-plane, `lambda = 0`.
pub fn numeric_agreement(a: &RatFun, b: &RatFun, count: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..count {
        let (z, w) = (upper_point(&mut rng), upper_point(&mut rng));
        let va = eval_complex(a, z, w, Complex64::zero())?;
        let vb = eval_complex(b, z, w, Complex64::zero())?;
        worst = worst.max(relative_error(va, vb));
    }
    Ok(worst)
}

/// Largest relative gap between the exact partial derivative in `v` and a
/// central difference with step `1e-5`, over `count` seeded points where
/// all three evaluations avoid poles.
pub fn derivative_check(r: &RatFun, v: Var, count: usize, seed: u64) -> Result<f64> {
    const STEP: f64 = 1e-5;
    let d = r.derivative(v);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut done = 0;
    for _ in 0..count * MAX_REDRAWS {
        if done == count {
            break;
        }
        let mut point = [upper_point(&mut rng), upper_point(&mut rng), upper_point(&mut rng)];
        let at = |p: [Complex64; 3], f: &RatFun| eval_complex(f, p[0], p[1], p[2]);
        let Ok(exact) = at(point, &d) else { continue };
        let i = v.index();
        let x = point[i];
        point[i] = x + STEP;
        let Ok(hi) = at(point, r) else { continue };
        point[i] = x - STEP;
        let Ok(lo) = at(point, r) else { continue };
        worst = worst.max(relative_error((hi - lo) / (2.0 * STEP), exact));
        done += 1;
    }
    if done < count {
        return Err(Error::PoleProximity);
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nevanlinna::representing_function;

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn zw(colors: &str, edges: &[(usize, usize)], root: usize) -> ColoredGraph {
        let cs = colors
            .chars()
            .map(|c| if c == 'z' { Color::Z } else { Color::W })
            .collect();
        ColoredGraph::new(cs, edges.iter().copied(), root).unwrap()
    }

    #[test]
    fn evaluation() {
        let i = c(0.0, 1.0);
        assert!((eval_complex(&rf("-1/z"), i, i, i).unwrap() - i).norm() < 1e-15);
        let v = eval_complex(&rf("w/(1 - z*w)"), i, i, i).unwrap();
        assert!((v - c(0.0, 0.5)).norm() < 1e-15);
        assert_eq!(eval_complex(&rf("1/(z - 1)"), c(1.0, 0.0), i, i), Err(Error::PoleProximity));
        let v = eval_complex(&rf("lambda^2 + 3*w"), i, c(2.0, 0.0), c(0.0, 2.0)).unwrap();
        assert!((v - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn resolvent_examples() {
        let v = resolvent_oracle(&ColoredGraph::single(Color::Z), 1, c(0.0, 2.0), c(0.0, 1.0)).unwrap();
        assert!((v - c(0.0, 0.5)).norm() < 1e-15);
        let g = zw("zwzzzw", &[(1, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)], 1);
        let (z, w) = (c(0.0, 1.0), c(0.0, 2.0));
        for k in 1..=6 {
            let exact = eval_complex(&representing_function(&g, k).unwrap(), z, w, Complex64::zero()).unwrap();
            assert!(relative_error(resolvent_oracle(&g, k, z, w).unwrap(), exact) < 1e-8);
        }
        let edge = zw("zz", &[(1, 2)], 1);
        assert_eq!(resolvent_oracle(&edge, 1, c(1.0, 0.0), c(0.0, 1.0)), Err(Error::NumericallySingular));
    }

    #[test]
    fn pick_sampling() {
        let r = pick_property_sample(&zw("zw", &[(1, 2)], 1), 1000, 7).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.worst_imag >= 0.0);
        assert_eq!(r, pick_property_sample(&zw("zw", &[(1, 2)], 1), 1000, 7).unwrap());
        assert!(pick_property_sample(&ColoredGraph::single(Color::Z), 200, 1).unwrap().pass);
        let general = ColoredGraph::single(Color::general(rf("z + 1")));
        assert_eq!(pick_property_sample(&general, 10, 1), Err(Error::PickNotAsserted));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(r#"{"samples":1000,"worstImag":"#), "{json}");
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for s in ["w/(1 - z*w)", "(z^3 - lambda*w)/(z^2 + w^2 + 1)", "lambda/(1 + lambda*z)"] {
            for v in [Var::Z, Var::W, Var::Lambda] {
                assert!(derivative_check(&rf(s), v, 20, 3).unwrap() < 1e-5);
            }
        }
    }

    #[test]
    fn agreement_detects_differences() {
        assert!(numeric_agreement(&rf("1/z + 1/w"), &rf("(z + w)/(z*w)"), 10, 0).unwrap() < 1e-12);
        assert!(numeric_agreement(&rf("1/z"), &rf("1/w"), 10, 0).unwrap() > 1e-3);
    }
}
