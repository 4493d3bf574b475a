//! Univariate polynomials with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The zero polynomial is the empty coefficient list and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = RationalPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    /// Monic product of `(x - r)` over `roots`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots
            .into_iter()
            .fold(Self::constant(Rational::one()), |acc, r| {
                acc * Self::linear(-r, Rational::one())
            })
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        let lead = self
            .leading()
            .ok_or_else(|| Error::Domain("zero polynomial has no monic form".into()))?;
        let inv = lead.recip()?;
        Ok(self.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i as i64)
                .collect(),
        )
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("polynomial division by zero".into()))?;
        let lead_inv = divisor.coeffs[dd].recip()?;
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &(&c * dc);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor. Its roots are exactly the common roots
    /// of `self` and `other`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("gcd of two zero polynomials".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // keeping the remainder monic bounds coefficient growth
            b = if r.is_zero() { r } else { r.monic()? };
        }
        a.monic()
    }

    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient. Returns ascending integer coefficients.
    pub fn to_primitive_integer(&self) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::Domain("zero polynomial".into()));
        }
        let l = super::lcm_of_denominators(&self.coeffs);
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().is_some_and(|c| c.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let div = content * sign;
        for c in &mut ints {
            *c = &*c / &div;
        }
        Ok(ints)
    }

    pub fn from_integers(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self + &rhs
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self - &rhs
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Mul for RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: RationalPolynomial) -> RationalPolynomial {
        &self * &rhs
    }
}

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, z};

    fn poly(cs: &[i64]) -> RationalPolynomial {
        RationalPolynomial::new(cs.iter().map(|&c| z(c)).collect())
    }

    #[test]
    fn evaluate_examples() {
        let p = poly(&[-1, 0, 1]);
        assert_eq!(p.evaluate(&z(1)), z(0));
        assert_eq!(p.evaluate(&z(3)), z(8));
        assert_eq!(RationalPolynomial::zero().evaluate(&q(7, 3)), z(0));
    }

    #[test]
    fn trailing_zeros_dropped() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert!(poly(&[0]).is_zero());
    }

    #[test]
    fn gcd_examples() {
        let a = RationalPolynomial::from_roots(&[z(1), z(2)]);
        let b = RationalPolynomial::from_roots(&[z(1), z(3)]);
        assert_eq!(a.gcd(&b).unwrap(), poly(&[-1, 1]));

        let s = poly(&[1, 0, 1]);
        assert_eq!(s.gcd(&s).unwrap(), s);
        let s2 = s.scale(&z(3));
        assert_eq!(s2.gcd(&s2).unwrap(), s);

        let c = RationalPolynomial::from_roots(&[z(5)]);
        assert_eq!(a.gcd(&c).unwrap(), poly(&[1]));

        assert!(RationalPolynomial::zero()
            .gcd(&RationalPolynomial::zero())
            .is_err());
        assert_eq!(RationalPolynomial::zero().gcd(&s2).unwrap(), s);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[3, -2, 0, 5, 1]);
        let b = RationalPolynomial::new(vec![q(1, 2), z(0), z(3)]);
        let (qt, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&qt * &b) + &r, a);
    }

    #[test]
    fn primitive_integer_form() {
        let p = RationalPolynomial::new(vec![q(-1, 2), q(-3, 4)]);
        let ints = p.to_primitive_integer().unwrap();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(3)]);
    }

    #[test]
    fn monic_preserves_roots() {
        let p = RationalPolynomial::from_roots(&[q(1, 3), z(-2)]).scale(&q(-7, 5));
        let m = p.monic().unwrap();
        assert_eq!(m.leading(), Some(&z(1)));
        assert_eq!(m.evaluate(&q(1, 3)), z(0));
        assert_eq!(m.evaluate(&z(-2)), z(0));
    }
}
