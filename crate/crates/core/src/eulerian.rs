//! q-Eulerian polynomials `A_n(t,q)` and their r-colored analogues.
//!
//! Rows are produced by the coefficient recurrence obtained from clearing the
//! denominator of the exponential generating function:
//!
//! ```text
//! (1 - t) A_n = (1 - t^{rn}) - sum_{k=1..n} [n k]_{q^r} (t^{rk} - t) A_{n-k},   A_0 = 0
//! ```
//!
//! followed by an exact division by `1 - t`. For `r = 1` the `k = 1` term
//! vanishes; for `r >= 2` it does not.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{tq_eval_q, CycloTPoly, QPoly, TQPoly};
use crate::qfunctions::q_binomial;

/// Memoized rows `A_0^{(r)}, A_1^{(r)}, ...` for one color count `r`.
#[derive(Debug, Clone)]
pub struct EulerianTable {
    r: usize,
    rows: Vec<TQPoly>,
}

impl EulerianTable {
    pub fn new(r: usize) -> Self {
        assert!(r >= 1, "color count must be positive");
        EulerianTable {
            r,
            rows: vec![TQPoly::zero()],
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of rows computed so far.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn grow_to(&mut self, n: usize) -> Result<()> {
        let one_minus_t = TQPoly::from_t_coeffs([1, -1]);
        let r = self.r;
        while self.rows.len() <= n {
            let m = self.rows.len();
            let mut rhs = TQPoly::one() - TQPoly::t_power(r * m);
            for k in 1..=m {
                let prev = &self.rows[m - k];
                if prev.is_zero() {
                    continue;
                }
                let binom = q_binomial(m, k as i64).subst_q_power(r);
                let factor = TQPoly::t_power(r * k) - TQPoly::t_power(1);
                rhs -= &(&factor * prev).scale(&binom);
            }
            let row = rhs.exact_div(&one_minus_t)?;
            self.rows.push(row);
        }
        Ok(())
    }

    pub fn row(&mut self, n: usize) -> Result<&TQPoly> {
        self.grow_to(n)?;
        Ok(&self.rows[n])
    }

    /// Coefficient `A_{n,k}^{(r)}(q)`; zero outside `0 <= k <= rn - 1`.
    pub fn number(&mut self, n: usize, k: i64) -> Result<QPoly> {
        Ok(self.row(n)?.coeff_signed(k).clone())
    }

    /// Replaces a computed row. Used by fault-injection harnesses to check
    /// that the verifier reports counterexamples.
    pub fn override_row(&mut self, n: usize, row: TQPoly) -> Result<()> {
        self.grow_to(n)?;
        self.rows[n] = row;
        Ok(())
    }
}

/// `A_n^{(r)}(t,q)`; for `r = 1` this is `A_n(t,q)`.
pub fn eulerian_tq(n: usize, r: usize) -> Result<TQPoly> {
    let mut table = EulerianTable::new(r);
    table.row(n).cloned()
}

/// `A_{n,k}^{(r)}(q)`, zero when `k` is out of range or `n = 0`.
pub fn eulerian_number(n: usize, k: i64, r: usize) -> Result<QPoly> {
    Ok(eulerian_tq(n, r)?.coeff_signed(k).clone())
}

/// Classical Eulerian number `A_{n,k}` with the convention `A_{0,0} = 0`.
pub fn classical_eulerian(n: usize, k: i64) -> Result<BigInt> {
    Ok(eulerian_number(n, k, 1)?.eval_one())
}

/// Classical Eulerian polynomial `A_n(t)` as a `t`-polynomial with constant
/// coefficients.
pub fn classical_eulerian_poly(n: usize) -> Result<TQPoly> {
    Ok(TQPoly::from_t_coeffs(eulerian_tq(n, 1)?.eval_q_one()))
}

/// Whether coefficient `k` equals coefficient `rn - 1 - k` for all `k`.
pub fn is_palindromic(row: &TQPoly, n: usize, r: usize) -> bool {
    if n == 0 {
        return row.is_zero();
    }
    let top = r * n - 1;
    row.degree().is_none_or(|d| d <= top) && (0..=top).all(|k| row.coeff(k) == row.coeff(top - k))
}

/// Both sides of `A_n(t, w_d) = A_{n/d}(t) (1 + t + ... + t^{d-1})^{n/d}`,
/// reduced modulo `Phi_d`.
pub fn root_specialization_pair(n: usize, d: usize) -> Result<(CycloTPoly, CycloTPoly)> {
    if n == 0 || d == 0 || !n.is_multiple_of(d) {
        return Err(Error::NotDivisor { n, d });
    }
    let k = n / d;
    let lhs = tq_eval_q(&eulerian_tq(n, 1)?, d);
    let block = TQPoly::from_t_coeffs(vec![1; d]);
    let rhs_poly = &classical_eulerian_poly(k)? * &block.pow(k as u32);
    Ok((lhs, tq_eval_q(&rhs_poly, d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn small_rows() {
        assert_eq!(
            eulerian_tq(3, 1).unwrap(),
            TQPoly::from_nested(vec![vec![1], vec![2, 1, 1], vec![1]])
        );
        for r in 1..=3 {
            assert!(eulerian_tq(0, r).unwrap().is_zero());
        }
        assert_eq!(
            eulerian_tq(2, 2).unwrap(),
            TQPoly::from_nested(vec![vec![1], vec![2, 0, 1], vec![2, 0, 1], vec![1]])
        );
        assert_eq!(eulerian_tq(1, 2).unwrap(), TQPoly::from_t_coeffs([1, 1]));
    }

    #[test]
    fn listed_numbers() {
        assert!(eulerian_number(0, 0, 1).unwrap().is_zero());
        assert_eq!(eulerian_number(1, 0, 1).unwrap(), QPoly::one());
        assert_eq!(eulerian_number(2, 0, 1).unwrap(), QPoly::one());
        assert_eq!(eulerian_number(2, 1, 1).unwrap(), QPoly::one());
        assert_eq!(eulerian_number(3, 0, 1).unwrap(), QPoly::one());
        assert_eq!(eulerian_number(3, 1, 1).unwrap(), p(&[2, 1, 1]));
        assert_eq!(eulerian_number(3, 2, 1).unwrap(), QPoly::one());
        assert!(eulerian_number(5, -1, 1).unwrap().is_zero());
        assert!(eulerian_number(3, 3, 1).unwrap().is_zero());
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_eulerian(3, 1).unwrap(), 4.into());
        assert_eq!(classical_eulerian(4, 1).unwrap(), 11.into());
        assert_eq!(classical_eulerian(0, 0).unwrap(), 0.into());
        let triangle: [&[i64]; 5] = [&[1], &[1, 1], &[1, 4, 1], &[1, 11, 11, 1], &[1, 26, 66, 26, 1]];
        for (i, expected) in triangle.iter().enumerate() {
            let n = i + 1;
            let got: Vec<BigInt> = eulerian_tq(n, 1).unwrap().eval_q_one();
            let want: Vec<BigInt> = expected.iter().map(|&v| v.into()).collect();
            assert_eq!(got, want, "row {n}");
        }
    }

    #[test]
    fn rows_are_palindromic_with_bounded_degree() {
        for r in 1..=3 {
            for n in 0..=9 / r {
                let row = eulerian_tq(n, r).unwrap();
                assert!(is_palindromic(&row, n, r), "n={n} r={r}");
                for c in row.coeffs() {
                    assert!(c.has_nonnegative_coeffs());
                }
            }
        }
    }

    #[test]
    fn wreath_product_cardinality() {
        for r in 1..=3usize {
            for n in 1..=9 / r {
                let total = eulerian_tq(n, r).unwrap().eval_t_one().eval_one();
                let fact: BigInt = (1..=n).map(BigInt::from).product();
                assert_eq!(total, BigInt::from(r).pow(n as u32) * fact);
            }
        }
    }

    #[test]
    fn root_specialization_examples() {
        let (l, r) = root_specialization_pair(4, 2).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, tq_eval_q(&TQPoly::from_t_coeffs([1, 3, 3, 1]), 2));
        let (l, r) = root_specialization_pair(3, 3).unwrap();
        assert_eq!(l, r);
        assert_eq!(l, tq_eval_q(&TQPoly::from_t_coeffs([1, 1, 1]), 3));
        let (l, r) = root_specialization_pair(5, 1).unwrap();
        assert_eq!(l, r);
        assert_eq!(
            root_specialization_pair(5, 2),
            Err(Error::NotDivisor { n: 5, d: 2 })
        );
    }

    #[test]
    fn a4_at_minus_one_cross_check() {
        let a4 = tq_eval_q(&eulerian_tq(4, 1).unwrap(), 2);
        let oracle = &classical_eulerian_poly(2).unwrap() * &TQPoly::from_t_coeffs([1, 2, 1]);
        assert_eq!(a4, tq_eval_q(&oracle, 2));
    }
}
