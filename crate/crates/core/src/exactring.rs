//! Exact coefficient rings: arbitrary-precision rationals and jets
//! (polynomials in a formal parameter ξ truncated above degree `D`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Always normalized: lowest terms, positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`; panics on `d == 0`, so only use it with literal denominators.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders as `"p/q"`, always with an explicit denominator.
pub fn fmt_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, d)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero(format!("rational literal {s:?}")));
            }
            Ok(Rational::new(p, d))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

pub fn rational_inv(r: &Rational) -> Result<Rational> {
    if r.is_zero() {
        Err(Error::DivisionByZero("inverse of 0".into()))
    } else {
        Ok(r.recip())
    }
}

/// Coefficient ring used by every matrix in the crate.
///
/// Methods take references so that big-number temporaries are only created
/// where needed.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One + 'static {
    fn from_rational(r: &Rational) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rational) -> Self;
    fn try_inv(&self) -> Result<Self>;
    /// Degree-0 part (the value at ξ = 0).
    fn constant_term(&self) -> Rational;
    /// Highest retained power of ξ; 0 for plain rationals.
    fn truncation_order() -> usize;
    fn to_json(&self) -> Value;

    fn add_assign_ref(&mut self, o: &Self) {
        *self = self.add_ref(o);
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_inv(&self) -> Result<Self> {
        rational_inv(self)
    }
    fn constant_term(&self) -> Rational {
        self.clone()
    }
    fn truncation_order() -> usize {
        0
    }
    fn to_json(&self) -> Value {
        Value::String(fmt_rational(self))
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
}

/// Truncated polynomial `c_0 + c_1 ξ + … + c_D ξ^D`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Jet<const D: usize> {
    c: Vec<Rational>,
}

impl<const D: usize> Jet<D> {
    /// Coefficients beyond degree `D` are dropped; missing ones are zero.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        assert!(D >= 1, "jets need truncation order D >= 1");
        coeffs.resize(D + 1, Rational::zero());
        Jet { c: coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&n| int(n)).collect())
    }

    pub fn constant(r: Rational) -> Self {
        Self::new(vec![r])
    }

    /// The formal parameter ξ itself.
    pub fn xi() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `r·ξ`.
    pub fn xi_times(r: &Rational) -> Self {
        Self::new(vec![Rational::zero(), r.clone()])
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.c
    }
}

/// Inverse of a jet with nonzero constant term, by the recursion
/// `b_0 = 1/a_0`, `b_k = −(Σ_{i=1..k} a_i b_{k−i}) / a_0`.
pub fn jet_invert<const D: usize>(a: &Jet<D>) -> Result<Jet<D>> {
    if a.c[0].is_zero() {
        return Err(Error::NotInvertible);
    }
    let a0inv = a.c[0].recip();
    let mut b = vec![Rational::zero(); D + 1];
    b[0] = a0inv.clone();
    for k in 1..=D {
        let mut s = Rational::zero();
        for i in 1..=k {
            s += &a.c[i] * &b[k - i];
        }
        b[k] = -(s * &a0inv);
    }
    Ok(Jet { c: b })
}

impl<const D: usize> fmt::Debug for Jet<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<const D: usize> fmt::Display for Jet<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})ξ")?,
                _ => write!(f, "({c})ξ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<const D: usize> Add for &Jet<D> {
    type Output = Jet<D>;
    fn add(self, o: &Jet<D>) -> Jet<D> {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }
}

impl<const D: usize> Sub for &Jet<D> {
    type Output = Jet<D>;
    fn sub(self, o: &Jet<D>) -> Jet<D> {
        Jet { c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() }
    }
}

impl<const D: usize> Mul for &Jet<D> {
    type Output = Jet<D>;
    fn mul(self, o: &Jet<D>) -> Jet<D> {
        let mut c = vec![Rational::zero(); D + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(D + 1 - i) {
                if !b.is_zero() {
                    c[i + j] += a * b;
                }
            }
        }
        Jet { c }
    }
}

impl<const D: usize> Neg for &Jet<D> {
    type Output = Jet<D>;
    fn neg(self) -> Jet<D> {
        Jet { c: self.c.iter().map(|a| -a).collect() }
    }
}

impl<const D: usize> Add for Jet<D> {
    type Output = Jet<D>;
    fn add(self, o: Jet<D>) -> Jet<D> {
        &self + &o
    }
}

impl<const D: usize> Sub for Jet<D> {
    type Output = Jet<D>;
    fn sub(self, o: Jet<D>) -> Jet<D> {
        &self - &o
    }
}

impl<const D: usize> Mul for Jet<D> {
    type Output = Jet<D>;
    fn mul(self, o: Jet<D>) -> Jet<D> {
        &self * &o
    }
}

impl<const D: usize> Neg for Jet<D> {
    type Output = Jet<D>;
    fn neg(self) -> Jet<D> {
        -&self
    }
}

impl<const D: usize> Zero for Jet<D> {
    fn zero() -> Self {
        Jet::new(vec![])
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
}

impl<const D: usize> One for Jet<D> {
    fn one() -> Self {
        Jet::constant(Rational::one())
    }
}

impl<const D: usize> Scalar for Jet<D> {
    fn from_rational(r: &Rational) -> Self {
        Jet::constant(r.clone())
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        Jet { c: self.c.iter().map(|a| a * r).collect() }
    }
    fn try_inv(&self) -> Result<Self> {
        jet_invert(self)
    }
    fn constant_term(&self) -> Rational {
        self.c[0].clone()
    }
    fn truncation_order() -> usize {
        D
    }
    fn to_json(&self) -> Value {
        Value::Array(self.c.iter().map(|r| Value::String(fmt_rational(r))).collect())
    }
    fn add_assign_ref(&mut self, o: &Self) {
        for (a, b) in self.c.iter_mut().zip(&o.c) {
            *a += b;
        }
    }
}

/// Sign of a rational as −1, 0, 1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["3/4", "-7/2", "0/1", "5/1"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("6/8").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn jet_inverse_examples() {
        let a = Jet::<2>::from_ints(&[1, 1]);
        assert_eq!(jet_invert(&a).unwrap(), Jet::from_ints(&[1, -1, 1]));
        let b = Jet::<1>::from_ints(&[2]);
        assert_eq!(jet_invert(&b).unwrap(), Jet::constant(q(1, 2)));
        let c = Jet::<2>::from_ints(&[1, 3, 1]);
        let ci = jet_invert(&c).unwrap();
        assert_eq!(ci, Jet::from_ints(&[1, -3, 8]));
        assert_eq!(&ci * &c, Jet::one());
        assert_eq!(jet_invert(&Jet::<2>::xi()), Err(Error::NotInvertible));
    }

    #[test]
    fn jet_truncates() {
        let x = Jet::<2>::xi();
        let x2 = &x * &x;
        assert_eq!(x2, Jet::from_ints(&[0, 0, 1]));
        assert!((&x2 * &x).is_zero());
    }
}
