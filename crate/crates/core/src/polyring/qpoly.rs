use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense polynomial in `q` with exact integer coefficients, ascending by power.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

pub(crate) static QPOLY_ZERO: QPoly = QPoly { coeffs: Vec::new() };

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = QPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        debug_assert!(self.is_canonical());
    }

    pub(crate) fn is_canonical(&self) -> bool {
        self.coeffs.last().is_none_or(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c))
    }

    /// `p(q^r)` for `r >= 1`.
    pub fn subst_q_power(&self, r: usize) -> Self {
        assert!(r >= 1, "substitution q -> q^r needs r >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); r * (self.coeffs.len() - 1) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[r * i] = c.clone();
        }
        QPoly { coeffs }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Long division. Fails with `DivisionNotExact` when a quotient
    /// coefficient is not integral.
    pub fn div_rem(&self, den: &QPoly) -> Result<(QPoly, QPoly)> {
        let lead = den.leading_coeff().ok_or(Error::DivisionByZero)?;
        let dd = den.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return Err(Error::DivisionNotExact);
            }
            let c = top / lead;
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn div_exact(&self, den: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::DivisionNotExact)
        }
    }

    pub fn pow(&self, e: u32) -> QPoly {
        (0..e).fold(QPoly::one(), |acc, _| &acc * self)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl From<BigInt> for QPoly {
    fn from(c: BigInt) -> Self {
        QPoly::constant(c)
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &'a $ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(QPoly, Add, add);
forward_owned_binop!(QPoly, Sub, sub);
forward_owned_binop!(QPoly, Mul, mul);

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// Writes `c0 + c1*q + ...` with a variable name, skipping zero terms.
pub(crate) fn fmt_univariate(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[BigInt],
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
        }
        first = false;
        match k {
            0 => write!(f, "{mag}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{var}")?;
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_univariate(f, &self.coeffs, "q")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn add_sub_mul_examples() {
        assert_eq!(p(&[1, 1]) + p(&[1]), p(&[2, 1]));
        assert_eq!(p(&[1, 1]) * p(&[1, 1, 1]), p(&[1, 2, 2, 1]));
        let a = p(&[3, 0, -2, 5]);
        let z = &a - &a;
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let a = p(&[1, 2, 0, 0]);
        assert_eq!(a.coeffs().len(), 2);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(QPoly::zero().degree(), None);
        let s = p(&[1, 0, 3]) + p(&[0, 0, -3]);
        assert_eq!(s, p(&[1]));
    }

    #[test]
    fn subst_examples() {
        assert_eq!(p(&[1, 1]).subst_q_power(2), p(&[1, 0, 1]));
        assert_eq!(p(&[4, -1, 7]).subst_q_power(1), p(&[4, -1, 7]));
        assert_eq!(
            p(&[1, 1, 1]).subst_q_power(3),
            p(&[1, 0, 0, 1, 0, 0, 1])
        );
    }

    #[test]
    fn division() {
        let num = p(&[1, 2, 2, 1]);
        assert_eq!(num.div_exact(&p(&[1, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(num.div_exact(&p(&[1, 0, 1])), Err(Error::DivisionNotExact));
        assert_eq!(num.div_exact(&QPoly::zero()), Err(Error::DivisionByZero));
        // non-integral quotient coefficient
        assert_eq!(p(&[1, 1]).div_rem(&p(&[0, 2])), Err(Error::DivisionNotExact));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, 1, 1]).to_string(), "2 + q + q^2");
        assert_eq!(p(&[0, -1, 3]).to_string(), "-q + 3*q^2");
        assert_eq!(QPoly::zero().to_string(), "0");
    }
}
