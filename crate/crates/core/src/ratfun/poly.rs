//! Sparse multivariate polynomials over the integers in `z`, `w` and `lambda`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// One of the three polynomial variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z,
    W,
    Lambda,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Z, Var::W, Var::Lambda];

    pub fn index(self) -> usize {
        match self {
            Var::Z => 0,
            Var::W => 1,
            Var::Lambda => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::W => "w",
            Var::Lambda => "lambda",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::W => "w",
            Var::Lambda => "\\lambda",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector `(e_z, e_w, e_lambda)`.
///
/// Ordered graded-lexicographically with `z > w > lambda`, so the greatest
/// monomial of a polynomial is its leading monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = [0; 3];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0; 3];
        for i in 0..3 {
            out[i] = self.0[i].checked_sub(other.0[i])?;
        }
        Some(Monomial(out))
    }

    fn without(&self, v: Var) -> Monomial {
        let mut m = self.0;
        m[v.index()] = 0;
        Monomial(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `z`, `w`, `lambda` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn var(v: Var) -> Self {
        Self::term(1, Monomial::var(v))
    }

    pub fn z() -> Self {
        Self::var(Var::Z)
    }

    pub fn w() -> Self {
        Self::var(Var::W)
    }

    pub fn lambda() -> Self {
        Self::var(Var::Lambda)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from arbitrary terms; repeated monomials are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value when the polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            self.terms.get(&Monomial::ONE).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.leading_term().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    /// Degree in `v`; the zero polynomial has degree 0.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Positive gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide them exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    debug_assert!((x % c).is_zero());
                    (*m, x / c)
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Sign-normalized copy with a positive leading coefficient.
    pub fn with_positive_lead(self) -> Polynomial {
        if self.leading_coefficient().is_negative() {
            -self
        } else {
            self
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self -= c * m * d`
    fn sub_scaled(&mut self, d: &Polynomial, c: &BigInt, m: &Monomial) {
        for (k, x) in &d.terms {
            self.add_term(k.mul(m), -(x * c));
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[z, w, lambda]`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = d.leading_term()?;
        let (lm, lc) = (*lm, lc.clone());
        if d.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let (q, r) = c.div_rem(&lc);
                if !r.is_zero() {
                    return None;
                }
                terms.insert(m.checked_div(&lm)?, q);
            }
            return Some(Polynomial { terms });
        }
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(&lm)?;
            let (qc, r) = c.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            rem.sub_scaled(d, &qc, &qm);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients of `v^0, v^1, ...` as polynomials free of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Polynomial> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut out = vec![Polynomial::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            out[m.exp(v) as usize]
                .terms
                .insert(m.without(v), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[Polynomial]) -> Polynomial {
        let mut p = Polynomial::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var_pow(v, i as u32);
            for (m, x) in &c.terms {
                p.add_term(m.mul(&shift), x.clone());
            }
        }
        p
    }

    /// Leading coefficient with respect to `v`, as a polynomial free of `v`.
    pub fn lc_in(&self, v: Var) -> Polynomial {
        let d = self.degree_in(v);
        let mut p = Polynomial::zero();
        for (m, c) in &self.terms {
            if m.exp(v) == d {
                p.terms.insert(m.without(v), c.clone());
            }
        }
        p
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        let mut p = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                let mut k = m.0;
                k[v.index()] -= 1;
                p.add_term(Monomial(k), c * BigInt::from(e));
            }
        }
        p
    }

    /// Replaces `v` by the polynomial `s`.
    pub fn substitute(&self, v: Var, s: &Polynomial) -> Polynomial {
        let coeffs = self.coeffs_in(v);
        let mut acc = Polynomial::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * s) + c;
        }
        acc
    }

    /// Evaluates with `v` set to a fixed integer.
    pub fn eval_var(&self, v: Var, x: &BigInt) -> Polynomial {
        let mut pows = vec![BigInt::one()];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while pows.len() <= e {
                let next = pows.last().expect("nonempty") * x;
                pows.push(next);
            }
            out.add_term(m.without(v), c * &pows[e]);
        }
        out
    }

    /// Largest absolute value of a coefficient.
    pub fn max_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub(crate) fn fmt_with(
        &self,
        f: &mut dyn fmt::Write,
        var_name: fn(Var) -> &'static str,
        latex: bool,
    ) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
                continue;
            }
            let mut first = true;
            if !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str(if latex { " " } else { "*" })?;
                }
                first = false;
                f.write_str(var_name(v))?;
                if e > 1 {
                    if latex {
                        write!(f, "^{{{e}}}")?;
                    } else {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_latex(&self) -> String {
        let mut s = String::new();
        self.fmt_with(&mut s, Var::latex, true).expect("string write");
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, Var::name, false)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(c)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -self.clone()
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
