//! Exact evaluation at primitive roots of unity, realized as reduction
//! modulo the cyclotomic polynomial.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;

use super::qpoly::{fmt_univariate, QPoly};
use super::tqpoly::TQPoly;

/// The `d`-th cyclotomic polynomial, via
/// `(q^d - 1) / prod_{e | d, e < d} Phi_e`.
pub fn cyclotomic(d: usize) -> QPoly {
    assert!(d >= 1, "cyclotomic order must be positive");
    let mut num = QPoly::monomial(1, d) - QPoly::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        num = num
            .div_exact(&cyclotomic(e))
            .expect("cyclotomic factors divide q^d - 1");
    }
    num
}

/// An element of `Z[q] / Phi_d`, i.e. an integer polynomial evaluated at a
/// primitive `d`-th root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicElem {
    order: usize,
    residue: QPoly,
}

impl CyclotomicElem {
    pub fn zero(order: usize) -> Self {
        CyclotomicElem {
            order,
            residue: QPoly::zero(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Reduced representative, of degree below `deg(Phi_d)`.
    pub fn residue(&self) -> &QPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// For `d = 1, 2` the residue ring is `Z`; this returns the integer value.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.residue.degree() {
            None => Some(BigInt::from(0)),
            Some(0) => Some(self.residue.coeff(0)),
            _ => None,
        }
    }
}

pub fn eval_at_root(p: &QPoly, d: usize) -> CyclotomicElem {
    let (_, residue) = p
        .div_rem(&cyclotomic(d))
        .expect("cyclotomic polynomials are monic");
    CyclotomicElem { order: d, residue }
}

impl<'a> Add<&'a CyclotomicElem> for &'a CyclotomicElem {
    type Output = CyclotomicElem;
    fn add(self, rhs: &CyclotomicElem) -> CyclotomicElem {
        assert_eq!(self.order, rhs.order, "mixed root orders");
        CyclotomicElem {
            order: self.order,
            residue: &self.residue + &rhs.residue,
        }
    }
}

impl<'a> Mul<&'a CyclotomicElem> for &'a CyclotomicElem {
    type Output = CyclotomicElem;
    fn mul(self, rhs: &CyclotomicElem) -> CyclotomicElem {
        assert_eq!(self.order, rhs.order, "mixed root orders");
        eval_at_root(&(&self.residue * &rhs.residue), self.order)
    }
}

impl fmt::Display for CyclotomicElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_univariate(f, self.residue.coeffs(), "w")
    }
}

/// Polynomial in `t` over `Z[q] / Phi_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloTPoly {
    order: usize,
    coeffs: Vec<CyclotomicElem>,
}

impl CycloTPoly {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[CyclotomicElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// Coefficient-wise reduction of a bivariate polynomial at `q = w_d`.
pub fn tq_eval_q(p: &TQPoly, d: usize) -> CycloTPoly {
    let mut coeffs: Vec<CyclotomicElem> =
        p.coeffs().iter().map(|c| eval_at_root(c, d)).collect();
    while coeffs.last().is_some_and(CyclotomicElem::is_zero) {
        coeffs.pop();
    }
    CycloTPoly { order: d, coeffs }
}

impl fmt::Display for CycloTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            if k > 0 {
                write!(f, "*t^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn root_evaluation_examples() {
        assert_eq!(eval_at_root(&p(&[2, 1, 1]), 2).as_integer(), Some(2.into()));
        assert_eq!(eval_at_root(&p(&[0, 0, 0, 1]), 4).residue(), &p(&[0, -1]));
        assert!(eval_at_root(&QPoly::zero(), 5).is_zero());
        // d = 1 is evaluation at q = 1
        assert_eq!(eval_at_root(&p(&[3, -1, 4]), 1).as_integer(), Some(6.into()));
    }

    #[test]
    fn bivariate_at_minus_one() {
        let a3 = TQPoly::from_nested(vec![vec![1], vec![2, 1, 1], vec![1]]);
        let at = tq_eval_q(&a3, 2);
        let expect = tq_eval_q(&TQPoly::from_t_coeffs([1, 2, 1]), 2);
        assert_eq!(at, expect);
        assert_eq!(tq_eval_q(&a3, 1), tq_eval_q(&TQPoly::from_t_coeffs([1, 4, 1]), 1));
    }
}
