use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gcd::poly_gcd;
use super::parse::parse_ratfun;
use super::poly::{Polynomial, Var};
use crate::error::{Error, Result};

/// A normalized quotient of two polynomials.
///
/// Numerator and denominator are coprime in `Z[z, w, lambda]` (integer
/// content included) and the denominator has a positive leading coefficient
/// under the canonical monomial order, so structural equality is equality of
/// rational functions. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Polynomial,
    den: Polynomial,
}

impl RatFun {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return RatFun { num, den };
        }
        let g = poly_gcd(&num, &den).expect("denominator is nonzero");
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.leading_coefficient().is_negative() {
            num = -num;
            den = -den;
        }
        RatFun { num, den }
    }

    pub fn zero() -> Self {
        RatFun {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RatFun {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Polynomial::var(v))
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

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn into_parts(self) -> (Polynomial, Polynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.num.contains(v) || self.den.contains(v)
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(
            &self.num * &rhs.den,
            &self.den * &rhs.num,
        ))
    }

    /// `den/num`, normalized.
    pub fn reciprocal(&self) -> Result<RatFun> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading_coefficient().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(RatFun { num, den })
    }

    pub fn pow(&self, e: u32) -> RatFun {
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Composition `self|_{v <- s}`, computed on homogenized numerator and
    /// denominator so no intermediate fractions appear.
    pub fn substitute(&self, v: Var, s: &RatFun) -> Result<RatFun> {
        if !self.contains(v) {
            return Ok(self.clone());
        }
        let d = self.num.degree_in(v).max(self.den.degree_in(v));
        let powers_u: Vec<Polynomial> = powers(&s.num, d);
        let powers_v: Vec<Polynomial> = powers(&s.den, d);
        let homogenize = |p: &Polynomial| {
            let mut acc = Polynomial::zero();
            for (i, c) in p.coeffs_in(v).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc += &(&(c * &powers_u[i]) * &powers_v[d as usize - i]);
            }
            acc
        };
        let den = homogenize(&self.den);
        if den.is_zero() {
            return Err(Error::DegenerateSubstitution);
        }
        Ok(Self::normalized(homogenize(&self.num), den))
    }

    /// Partial derivative by the quotient rule.
    pub fn derivative(&self, v: Var) -> RatFun {
        if !self.contains(v) {
            return RatFun::zero();
        }
        let num = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        Self::normalized(num, self.den.pow(2))
    }

    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }

    pub fn to_json(&self) -> RatFunJson {
        RatFunJson {
            num: self.num.to_string(),
            den: self.den.to_string(),
        }
    }

    pub fn from_json(j: &RatFunJson) -> Result<RatFun> {
        let num = parse_ratfun(&j.num)?;
        let den = parse_ratfun(&j.den)?;
        num.checked_div(&den)
    }
}

fn powers(p: &Polynomial, d: u32) -> Vec<Polynomial> {
    let mut out = Vec::with_capacity(d as usize + 1);
    out.push(Polynomial::one());
    for i in 0..d as usize {
        let next = &out[i] * p;
        out.push(next);
    }
    out
}

/// Wire form `{ "num": "...", "den": "..." }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunJson {
    pub num: String,
    pub den: String,
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = RatFunJson::deserialize(d)?;
        RatFun::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl std::str::FromStr for RatFun {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ratfun(s)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl From<Polynomial> for RatFun {
    fn from(p: Polynomial) -> Self {
        RatFun::from_poly(p)
    }
}

impl From<i64> for RatFun {
    fn from(c: i64) -> Self {
        RatFun::constant(c)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFun::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let g = poly_gcd(&self.den, &rhs.den).expect("denominators are nonzero");
        let (ls, rs) = if g.is_one() {
            (rhs.den.clone(), self.den.clone())
        } else {
            (
                rhs.den.div_exact(&g).expect("gcd divides"),
                self.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &ls) + &(&rhs.num * &rs);
        RatFun::normalized(num, &self.den * &ls)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        // cross-cancel first to keep the products small
        let g1 = poly_gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = poly_gcd(&rhs.num, &self.den).expect("nonzero");
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = &n1 * &n2;
        let mut den = &d1 * &d2;
        if den.leading_coefficient().is_negative() {
            num = -num;
            den = -den;
        }
        RatFun { num, den }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { (&self).$m(&rhs) }
        }
        impl $tr<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun { (&self).$m(rhs) }
        }
        impl $tr<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for RatFun {
    fn sum<I: Iterator<Item = RatFun>>(iter: I) -> RatFun {
        iter.fold(RatFun::zero(), |a, b| &a + &b)
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::one()
    }
}

impl num_traits::Zero for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFun {
        s.parse().unwrap()
    }

    #[test]
    fn star_example_sum() {
        let g_g = rf("(w^3*z - 2*w^2 - 2*w*z)/(2*w - w^3)");
        let g_h = rf("(-w*z^2 + w + 2*z + 2)/(w*z - 1)");
        let expected = rf("(-2*w^3*z^2 + w^3 + 5*w^2*z + 2*w^2 + 4*w*z^2 - 4*w - 6*z - 4)/((w^2 - 2)*(w*z - 1))");
        assert_eq!(&g_g + &g_h, expected);
    }

    #[test]
    fn identities() {
        let a = rf("(z + w)/(z*w - 1)");
        assert_eq!(&a + &RatFun::zero(), a);
        assert_eq!(&a * &a.reciprocal().unwrap(), RatFun::one());
        assert_eq!(a.checked_div(&RatFun::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(
            rf("(w*z - 1)/(-w*z^2 + w + 2*z + 2)").reciprocal().unwrap(),
            rf("(-w*z^2 + w + 2*z + 2)/(w*z - 1)")
        );
        assert_eq!(RatFun::one().reciprocal().unwrap(), RatFun::one());
        assert_eq!(rf("-1/z").reciprocal().unwrap(), rf("-z"));
        assert_eq!(RatFun::zero().reciprocal(), Err(Error::DivisionByZero));
    }

    #[test]
    fn normalization_fixes_sign_and_content() {
        let f = RatFun::new(Polynomial::constant(2), -Polynomial::z().scale(&BigInt::from(4))).unwrap();
        assert_eq!(f.to_string(), "(-1)/(2*z)");
        assert_eq!(rf("(2*z + 2)/(4*z + 4)").to_string(), "(1)/(2)");
        assert!(RatFun::new(Polynomial::one(), Polynomial::zero()).is_err());
    }

    #[test]
    fn substitution_examples() {
        let f = rf("w/(1 - z*w)");
        assert_eq!(f.substitute(Var::Z, &rf("-w")).unwrap(), rf("w/(1 + w^2)"));
        assert_eq!(f.substitute(Var::Lambda, &rf("z")).unwrap(), f);
        assert_eq!(rf("-1/z").substitute(Var::Z, &rf("z + 1")).unwrap(), rf("-1/(z + 1)"));
        assert_eq!(
            rf("1/(z - w)").substitute(Var::Z, &rf("w")),
            Err(Error::DegenerateSubstitution)
        );
    }

    #[test]
    fn derivative_examples() {
        let f = rf("lambda/(1 + lambda*z)");
        assert_eq!(f.derivative(Var::Lambda), rf("1/(1 + lambda*z)^2"));
        assert_eq!(rf("z/(w + 1)").derivative(Var::Lambda), RatFun::zero());
        assert_eq!(rf("z^2").derivative(Var::Z), rf("2*z"));
    }

    #[test]
    fn latex_and_json() {
        let f = rf("w/(1 - z*w)");
        assert_eq!(f.to_string(), "(-w)/(z*w - 1)");
        assert_eq!(f.to_latex(), "\\frac{-w}{z w - 1}");
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"{"num":"-w","den":"z*w - 1"}"#);
        let back: RatFun = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
    }
}
