//! Multivariate gcd over `Z[z, w, lambda]`.
//!
//! A heuristic evaluation gcd is tried first: one variable is set to a large
//! integer `xi`, the gcd of the images is found recursively and lifted back
//! by `xi`-adic expansion, and the candidate is accepted only if it divides
//! both inputs. With `xi > 2 min(|a|, |b|) + 1` a candidate that passes is the
//! gcd. When the heuristic gives up, the polynomial is viewed as univariate
//! in one variable, contents are split off recursively and the primitive
//! parts are reduced with a primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::{Monomial, Polynomial, Var};
use crate::error::{Error, Result};

/// Greatest common divisor, normalized to a positive leading coefficient.
///
/// The integer content is part of the result: `gcd(4z, 6) = 2`.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    Ok(gcd(a, b))
}

fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if let Some(g) = trivial_gcd(a, b) {
        return g;
    }
    heuristic_gcd(a, b).unwrap_or_else(|| prs_gcd(a, b))
}

fn trivial_gcd(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    if a.is_zero() {
        return Some(b.clone().with_positive_lead());
    }
    if b.is_zero() {
        return Some(a.clone().with_positive_lead());
    }
    if a == b {
        return Some(a.clone().with_positive_lead());
    }
    if a.is_one() || b.is_one() {
        return Some(Polynomial::one());
    }
    if a.is_constant() || b.is_constant() {
        return Some(Polynomial::constant(a.content().gcd(&b.content())));
    }
    None
}

const HEURISTIC_ATTEMPTS: usize = 6;

/// Evaluation gcd; `None` when no evaluation point gave a verified candidate.
fn heuristic_gcd(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    if let Some(g) = trivial_gcd(a, b) {
        return Some(g);
    }
    let (ca, cb) = (a.content(), b.content());
    let c = ca.gcd(&cb);
    let p = a.div_scalar_exact(&ca);
    let q = b.div_scalar_exact(&cb);
    let v = Var::ALL
        .into_iter()
        .filter(|&v| p.contains(v) || q.contains(v))
        .max_by_key(|&v| p.degree_in(v).max(q.degree_in(v)))?;
    let mut xi = BigInt::from(2) * p.max_norm().min(q.max_norm()) + 29;
    for _ in 0..HEURISTIC_ATTEMPTS {
        let (pe, qe) = (p.eval_var(v, &xi), q.eval_var(v, &xi));
        if !pe.is_zero() && !qe.is_zero() {
            let image = heuristic_gcd(&pe, &qe)?;
            let lifted = xi_adic_lift(&image, v, &xi);
            if !lifted.is_zero() {
                let h = lifted.div_scalar_exact(&lifted.content()).with_positive_lead();
                if p.div_exact(&h).is_some() && q.div_exact(&h).is_some() {
                    return Some(h.scale(&c));
                }
            }
        }
        xi = &xi * 73794 / 27011 + 1;
    }
    None
}

/// Rebuilds `h(v)` from `h(xi)` using balanced digits in base `xi`.
fn xi_adic_lift(image: &Polynomial, v: Var, xi: &BigInt) -> Polynomial {
    let half = xi / 2;
    let mut rest = image.clone();
    let mut out = Polynomial::zero();
    let mut e = 0;
    while !rest.is_zero() {
        let mut digit = Polynomial::zero();
        for (m, c) in rest.terms() {
            let mut r = c.mod_floor(xi);
            if r > half {
                r -= xi;
            }
            if !r.is_zero() {
                digit = &digit + &Polynomial::term(r, *m);
            }
        }
        rest = (&rest - &digit).div_scalar_exact(xi);
        out = &out + &digit.mul_monomial(&Monomial::var_pow(v, e));
        e += 1;
    }
    out
}

/// Content-and-primitive-part gcd by pseudo-remainder sequences.
fn prs_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.clone().with_positive_lead();
    }
    if b.is_zero() {
        return a.clone().with_positive_lead();
    }
    if a == b {
        return a.clone().with_positive_lead();
    }
    if a.is_one() || b.is_one() {
        return Polynomial::one();
    }
    let Some(v) = Var::ALL.into_iter().find(|&v| a.contains(v) || b.contains(v)) else {
        let ca = a.as_constant().unwrap_or_default();
        let cb = b.as_constant().unwrap_or_default();
        return Polynomial::constant(ca.gcd(&cb));
    };
    if !a.contains(v) {
        return gcd(a, &content_in(b, v));
    }
    if !b.contains(v) {
        return gcd(&content_in(a, v), b);
    }
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let mut p = div(a, &ca);
    let mut q = div(b, &cb);
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        if q.degree_in(v) == 0 {
            // a nonzero remainder free of v makes the primitive gcd trivial
            p = Polynomial::one();
            break;
        }
        let r = pseudo_rem(&p, &q, v);
        p = q;
        q = if r.is_zero() { r } else { primitive_in(&r, v) };
    }
    let g = primitive_in(&p, v);
    (&c * &g).with_positive_lead()
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub(crate) fn content_in(p: &Polynomial, v: Var) -> Polynomial {
    let mut coeffs = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero());
    let Some(first) = coeffs.next() else {
        return Polynomial::zero();
    };
    let mut g = first.with_positive_lead();
    for c in coeffs {
        if g.is_one() {
            break;
        }
        g = gcd(&g, &c);
    }
    g
}

fn primitive_in(p: &Polynomial, v: Var) -> Polynomial {
    let c = content_in(p, v);
    div(p, &c).with_positive_lead()
}

fn div(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if b.is_one() {
        return a.clone();
    }
    a.div_exact(b)
        .expect("gcd factor divides its multiple exactly")
}

/// Sparse pseudo-remainder of `a` by `b` in the variable `v`.
pub(crate) fn pseudo_rem(a: &Polynomial, b: &Polynomial, v: Var) -> Polynomial {
    let db = b.degree_in(v);
    let lb = b.lc_in(v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.lc_in(v);
        let shift = Monomial::var_pow(v, dr - db);
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
    }
    r
}
