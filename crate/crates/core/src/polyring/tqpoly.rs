use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::Zero;

use super::qpoly::{forward_owned_binop, QPoly, QPOLY_ZERO};
use crate::error::{Error, Result};

/// Polynomial in `t` whose coefficients are polynomials in `q`.
///
/// Orientation is always t-outer, q-inner: `tcoeffs[k]` is the coefficient
/// of `t^k`. No trailing zero coefficient is stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TQPoly {
    tcoeffs: Vec<QPoly>,
}

impl TQPoly {
    pub fn zero() -> Self {
        TQPoly { tcoeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QPoly::one())
    }

    pub fn constant(c: QPoly) -> Self {
        Self::from_qpolys(vec![c])
    }

    /// `t^k`.
    pub fn t_power(k: usize) -> Self {
        Self::term(QPoly::one(), k)
    }

    /// `c * t^k`.
    pub fn term(c: QPoly, k: usize) -> Self {
        let mut tcoeffs = vec![QPoly::zero(); k + 1];
        tcoeffs[k] = c;
        Self::from_qpolys(tcoeffs)
    }

    pub fn from_qpolys(tcoeffs: Vec<QPoly>) -> Self {
        let mut p = TQPoly { tcoeffs };
        p.normalize();
        p
    }

    /// Builds from a nested ascending array: `rows[k][j]` is the coefficient
    /// of `t^k q^j`.
    pub fn from_nested<R, C>(rows: impl IntoIterator<Item = R>) -> Self
    where
        R: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        Self::from_qpolys(rows.into_iter().map(QPoly::from_coeffs).collect())
    }

    /// A polynomial in `t` alone, with integer coefficients.
    pub fn from_t_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_qpolys(coeffs.into_iter().map(QPoly::constant).collect())
    }

    fn normalize(&mut self) {
        while self.tcoeffs.last().is_some_and(QPoly::is_zero) {
            self.tcoeffs.pop();
        }
        debug_assert!(self.is_canonical());
    }

    pub(crate) fn is_canonical(&self) -> bool {
        self.tcoeffs.last().is_none_or(|c| !c.is_zero())
            && self.tcoeffs.iter().all(QPoly::is_canonical)
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.tcoeffs
    }

    /// Coefficient of `t^k` (the zero polynomial beyond the degree).
    pub fn coeff(&self, k: usize) -> &QPoly {
        self.tcoeffs.get(k).unwrap_or(&QPOLY_ZERO)
    }

    /// Same as [`TQPoly::coeff`] but accepts negative indices, which are zero.
    pub fn coeff_signed(&self, k: i64) -> &QPoly {
        usize::try_from(k).map_or(&QPOLY_ZERO, |k| self.coeff(k))
    }

    pub fn degree(&self) -> Option<usize> {
        self.tcoeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.tcoeffs.is_empty()
    }

    /// Multiply by `t^k`.
    pub fn shift_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut tcoeffs = vec![QPoly::zero(); k];
        tcoeffs.extend(self.tcoeffs.iter().cloned());
        TQPoly { tcoeffs }
    }

    /// Multiply every coefficient by a polynomial in `q`.
    pub fn scale(&self, c: &QPoly) -> Self {
        Self::from_qpolys(self.tcoeffs.iter().map(|a| a * c).collect())
    }

    pub fn subst_q_power(&self, r: usize) -> Self {
        Self::from_qpolys(self.tcoeffs.iter().map(|a| a.subst_q_power(r)).collect())
    }

    /// Value at `t = 1`, a polynomial in `q`.
    pub fn eval_t_one(&self) -> QPoly {
        self.tcoeffs.iter().cloned().sum()
    }

    /// Value at `q = 1`, as integer coefficients of `t`.
    pub fn eval_q_one(&self) -> Vec<BigInt> {
        self.tcoeffs.iter().map(QPoly::eval_one).collect()
    }

    /// Long division in `t`. Every quotient coefficient must divide exactly in
    /// `Z[q]`, otherwise `DivisionNotExact`.
    pub fn div_rem(&self, den: &TQPoly) -> Result<(TQPoly, TQPoly)> {
        let lead = den.tcoeffs.last().ok_or(Error::DivisionByZero)?;
        let dd = den.tcoeffs.len() - 1;
        let mut rem = self.tcoeffs.clone();
        if rem.len() <= dd {
            return Ok((TQPoly::zero(), self.clone()));
        }
        let mut quot = vec![QPoly::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            if rem[i + dd].is_zero() {
                continue;
            }
            let c = rem[i + dd].div_exact(lead)?;
            for (j, dc) in den.tcoeffs.iter().enumerate() {
                rem[i + j] -= &(&c * dc);
            }
            quot[i] = c;
        }
        Ok((TQPoly::from_qpolys(quot), TQPoly::from_qpolys(rem)))
    }

    /// Exact quotient `num / den`; a nonzero remainder is `DivisionNotExact`.
    pub fn exact_div(&self, den: &TQPoly) -> Result<TQPoly> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::DivisionNotExact)
        }
    }

    pub fn pow(&self, e: u32) -> TQPoly {
        (0..e).fold(TQPoly::one(), |acc, _| &acc * self)
    }

    /// Nested ascending coefficient arrays, `[t^0 coeffs, t^1 coeffs, ...]`.
    pub fn to_nested(&self) -> Vec<Vec<BigInt>> {
        self.tcoeffs.iter().map(|c| c.coeffs().to_vec()).collect()
    }
}

/// `num / den` in `Z[q][t]`, requiring a zero remainder.
pub fn tq_exact_div(num: &TQPoly, den: &TQPoly) -> Result<TQPoly> {
    num.exact_div(den)
}

impl<'a> Add<&'a TQPoly> for &'a TQPoly {
    type Output = TQPoly;
    fn add(self, rhs: &TQPoly) -> TQPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a TQPoly> for &'a TQPoly {
    type Output = TQPoly;
    fn sub(self, rhs: &TQPoly) -> TQPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a TQPoly> for &'a TQPoly {
    type Output = TQPoly;
    fn mul(self, rhs: &TQPoly) -> TQPoly {
        if self.is_zero() || rhs.is_zero() {
            return TQPoly::zero();
        }
        let mut tcoeffs = vec![QPoly::zero(); self.tcoeffs.len() + rhs.tcoeffs.len() - 1];
        for (i, a) in self.tcoeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.tcoeffs.iter().enumerate() {
                tcoeffs[i + j] += &(a * b);
            }
        }
        TQPoly::from_qpolys(tcoeffs)
    }
}

impl Neg for &TQPoly {
    type Output = TQPoly;
    fn neg(self) -> TQPoly {
        TQPoly {
            tcoeffs: self.tcoeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&TQPoly> for TQPoly {
    fn add_assign(&mut self, rhs: &TQPoly) {
        if self.tcoeffs.len() < rhs.tcoeffs.len() {
            self.tcoeffs.resize(rhs.tcoeffs.len(), QPoly::zero());
        }
        for (a, b) in self.tcoeffs.iter_mut().zip(&rhs.tcoeffs) {
            *a += b;
        }
        self.normalize();
    }
}

impl SubAssign<&TQPoly> for TQPoly {
    fn sub_assign(&mut self, rhs: &TQPoly) {
        if self.tcoeffs.len() < rhs.tcoeffs.len() {
            self.tcoeffs.resize(rhs.tcoeffs.len(), QPoly::zero());
        }
        for (a, b) in self.tcoeffs.iter_mut().zip(&rhs.tcoeffs) {
            *a -= b;
        }
        self.normalize();
    }
}

forward_owned_binop!(TQPoly, Add, add);
forward_owned_binop!(TQPoly, Sub, sub);
forward_owned_binop!(TQPoly, Mul, mul);

impl std::iter::Sum for TQPoly {
    fn sum<I: Iterator<Item = TQPoly>>(iter: I) -> TQPoly {
        iter.fold(TQPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl From<QPoly> for TQPoly {
    fn from(c: QPoly) -> Self {
        TQPoly::constant(c)
    }
}

impl fmt::Display for TQPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.tcoeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let simple = c.coeffs().len() == 1;
            match (k, simple) {
                (0, _) => write!(f, "{c}")?,
                (_, true) if c.is_one() => {}
                (_, true) => write!(f, "{c}*")?,
                (_, false) => write!(f, "({c})*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Zero for TQPoly {
    fn zero() -> Self {
        TQPoly::zero()
    }
    fn is_zero(&self) -> bool {
        TQPoly::is_zero(self)
    }
}
