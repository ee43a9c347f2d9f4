//! Determinants of `z`-colored paths ("sticks").
//!
//! `T_n = det S_n` obeys `T_n = -z T_{n-1} - T_{n-2}` with `T_0 = 1`,
//! `T_1 = -z`, and is the coefficient of `x^n` in `1 / (1 + z x + x^2)`.
//! Up to sign these are Chebyshev polynomials of the second kind.

use crate::error::{Error, Result};
use crate::ratfun::{Polynomial, RatFun};
use crate::symlinalg::{determinant, SymMatrix};

/// `T_0, ..., T_maxN`, and whether the three derivations agreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StickFamily {
    pub max_n: usize,
    pub dets: Vec<Polynomial>,
    pub agree: bool,
}

impl StickFamily {
    /// Rows `n,T_n` as printed by the command-line table.
    pub fn table(&self) -> String {
        self.dets
            .iter()
            .enumerate()
            .map(|(n, t)| format!("{n},{t}\n"))
            .collect()
    }
}

/// Tridiagonal matrix with `-z` on the diagonal and `1` beside it.
pub fn stick_matrix(n: usize) -> Result<SymMatrix> {
    if n < 1 {
        return Err(Error::InvalidArgument("a stick needs at least one vertex".into()));
    }
    let mut m = SymMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, -RatFun::z());
        if i + 1 < n {
            m.set(i, i + 1, RatFun::one());
            m.set(i + 1, i, RatFun::one());
        }
    }
    Ok(m)
}

/// `T_n` by exact elimination on `S_n`.
pub fn stick_by_determinant(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    let d = determinant(&stick_matrix(n).expect("n >= 1"));
    debug_assert!(d.is_polynomial());
    d.num().clone()
}

/// `T_0, ..., T_maxN` by the three-term recurrence.
pub fn stick_by_recurrence(max_n: usize) -> Vec<Polynomial> {
    let mz = -Polynomial::z();
    let mut t = vec![Polynomial::one(), mz.clone()];
    for n in 2..=max_n {
        let next = &(&mz * &t[n - 1]) - &t[n - 2];
        t.push(next);
    }
    t.truncate(max_n + 1);
    t
}

/// First `count` coefficients of `1 / a(x)` for a power series `a` with
/// `a_0 = 1`.
pub fn invert_unit_series(a: &[Polynomial], count: usize) -> Vec<Polynomial> {
    assert!(a.first().is_some_and(Polynomial::is_one), "series must start with 1");
    let mut b: Vec<Polynomial> = Vec::with_capacity(count);
    for n in 0..count {
        if n == 0 {
            b.push(Polynomial::one());
            continue;
        }
        let mut bn = Polynomial::zero();
        for j in 1..=n.min(a.len() - 1) {
            bn -= &(&a[j] * &b[n - j]);
        }
        b.push(bn);
    }
    b
}

/// `T_0, ..., T_maxN` as coefficients of `1 / (1 + z x + x^2)`.
pub fn stick_by_series(max_n: usize) -> Vec<Polynomial> {
    invert_unit_series(&[Polynomial::one(), Polynomial::z(), Polynomial::one()], max_n + 1)
}

/// All stick determinants up to `max_n`, cross-checked three ways.
pub fn stick_determinants(max_n: usize) -> StickFamily {
    let dets = stick_by_recurrence(max_n);
    let series = stick_by_series(max_n);
    let agree = series == dets
        && dets
            .iter()
            .enumerate()
            .all(|(n, t)| stick_by_determinant(n) == *t);
    StickFamily { max_n, dets, agree }
}
