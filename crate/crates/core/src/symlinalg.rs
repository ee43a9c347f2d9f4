//! Exact linear algebra over the field of rational functions.
//!
//! Matrix indices in this module are 0-based.

use std::fmt;

use crate::error::{Error, Result};
use crate::ratfun::{poly_gcd, Polynomial, RatFun};

/// A square matrix of rational functions, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SymMatrix {
    n: usize,
    entries: Vec<RatFun>,
}

impl SymMatrix {
    pub fn new(n: usize, entries: Vec<RatFun>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "{} entries for a {n}x{n} matrix",
                entries.len()
            )));
        }
        Ok(SymMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<RatFun>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("rows of unequal length".into()));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            entries: vec![RatFun::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, RatFun::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFun {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RatFun) {
        self.entries[i * self.n + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[RatFun]> {
        self.entries.chunks(self.n.max(1)).take(self.n)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SymMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        SymMatrix {
            n: rows.len(),
            entries,
        }
    }

    fn check_index(&self, k: usize) -> Result<()> {
        if k >= self.n {
            return Err(Error::IndexOutOfRange {
                index: k,
                size: self.n,
            });
        }
        Ok(())
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Exact determinant.
///
/// Each column is scaled by the lcm of its entry denominators so the matrix
/// lives over `Z[z, w, lambda]`, then fraction-free Bareiss elimination runs
/// with the first nonzero pivot in each column.
pub fn determinant(m: &SymMatrix) -> RatFun {
    let n = m.n;
    if n == 0 {
        return RatFun::one();
    }
    let mut scale = Polynomial::one();
    let mut a: Vec<Vec<Polynomial>> = vec![Vec::with_capacity(n); n];
    for j in 0..n {
        let mut l = Polynomial::one();
        for i in 0..n {
            let d = m.get(i, j).den();
            if !d.is_one() {
                let g = poly_gcd(&l, d).expect("nonzero");
                l = &l * &d.div_exact(&g).expect("gcd divides");
            }
        }
        for (i, row) in a.iter_mut().enumerate() {
            let e = m.get(i, j);
            let factor = if l.is_one() {
                Polynomial::one()
            } else {
                l.div_exact(e.den()).expect("lcm is a multiple")
            };
            row.push(&factor * e.num());
        }
        scale = &scale * &l;
    }
    let det = bareiss(a);
    RatFun::new(det, scale).expect("column scales are nonzero")
}

/// Fraction-free elimination over the polynomial ring.
pub(crate) fn bareiss(mut a: Vec<Vec<Polynomial>>) -> Polynomial {
    let n = a.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Polynomial::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                let t = &(&row[j] * &pivot_row[k]) - &(&row[k] * &pivot_row[j]);
                row[j] = if prev.is_one() {
                    t
                } else {
                    t.div_exact(&prev).expect("Bareiss division is exact")
                };
            }
            row[k] = Polynomial::zero();
        }
        prev = top[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn without(n: usize, k: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != k).collect()
}

/// `(m^-1)_{(k,k)} = det(minor_kk) / det(m)`.
pub fn inverse_entry(m: &SymMatrix, k: usize) -> Result<RatFun> {
    inverse_entry_at(m, k, k)
}

/// `(m^-1)_{(i,j)}` via the adjugate.
pub fn inverse_entry_at(m: &SymMatrix, i: usize, j: usize) -> Result<RatFun> {
    m.check_index(i)?;
    m.check_index(j)?;
    let det = determinant(m);
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let minor = m.submatrix(&without(m.n, j), &without(m.n, i));
    let cof = determinant(&minor);
    let cof = if (i + j) % 2 == 1 { -cof } else { cof };
    cof.checked_div(&det)
}

/// Schur complement `m11 - m12 m22^-1 m21` onto the indices in `keep`.
///
/// `keep` is sorted and deduplicated; entry `(a, b)` of the result refers to
/// the `a`-th and `b`-th kept index. Entries are computed with Sylvester's
/// bordered-determinant identity
/// `S_ab = det([[m_ab, m_aC], [m_Cb, m_CC]]) / det(m_CC)`,
/// where `C` is the complement of `keep`.
pub fn schur_reduce(m: &SymMatrix, keep: &[usize]) -> Result<SymMatrix> {
    let mut keep = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    for &k in &keep {
        m.check_index(k)?;
    }
    let rest: Vec<usize> = (0..m.n).filter(|i| keep.binary_search(i).is_err()).collect();
    if rest.is_empty() {
        return Ok(m.submatrix(&keep, &keep));
    }
    let block_det = determinant(&m.submatrix(&rest, &rest));
    if block_det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let r = keep.len();
    let mut out = SymMatrix::zeros(r);
    let symmetric = m.is_symmetric();
    for a in 0..r {
        for b in 0..r {
            if symmetric && b < a {
                let v = out.get(b, a).clone();
                out.set(a, b, v);
                continue;
            }
            let mut rows = vec![keep[a]];
            rows.extend_from_slice(&rest);
            let mut cols = vec![keep[b]];
            cols.extend_from_slice(&rest);
            let bordered = determinant(&m.submatrix(&rows, &cols));
            out.set(a, b, bordered.checked_div(&block_det)?);
        }
    }
    Ok(out)
}
