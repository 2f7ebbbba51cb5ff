//! q-shifted factorials, Gaussian binomials and multinomials, Rogers–Szegő
//! polynomials and the hook weight block `t + t^2 + ... + t^(m-1)`.

use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::polyring::{QPoly, TQPoly};

/// `(q;q)_n = (1-q)(1-q^2)...(1-q^n)`.
pub fn q_poch(n: usize) -> QPoly {
    (1..=n).fold(QPoly::one(), |acc, i| {
        &acc * &(QPoly::one() - QPoly::monomial(1, i))
    })
}

/// Rows of the q-Pascal triangle, grown on demand.
#[derive(Debug, Clone)]
pub struct QBinomialTable {
    rows: Vec<Vec<QPoly>>,
}

impl Default for QBinomialTable {
    fn default() -> Self {
        QBinomialTable {
            rows: vec![vec![QPoly::one()]],
        }
    }
}

impl QBinomialTable {
    pub fn new() -> Self {
        Self::default()
    }

    fn grow_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let m = self.rows.len();
            let prev = &self.rows[m - 1];
            // [m k] = [m-1 k-1] + q^k [m-1 k]
            let row = (0..=m)
                .map(|k| {
                    let mut c = if k > 0 { prev[k - 1].clone() } else { QPoly::zero() };
                    if k < m {
                        c += &prev[k].shift(k);
                    }
                    c
                })
                .collect();
            self.rows.push(row);
        }
    }

    pub fn get(&mut self, n: usize, k: i64) -> QPoly {
        match usize::try_from(k) {
            Ok(k) if k <= n => {
                self.grow_to(n);
                self.rows[n][k].clone()
            }
            _ => QPoly::zero(),
        }
    }
}

thread_local! {
    static QBINOMIALS: RefCell<QBinomialTable> = RefCell::new(QBinomialTable::new());
}

/// Gaussian binomial `[n k]_q`; zero when `k < 0` or `k > n`.
pub fn q_binomial(n: usize, k: i64) -> QPoly {
    QBINOMIALS.with(|t| t.borrow_mut().get(n, k))
}

/// `[n; a_0, ..., a_k]_q`, the product of successive Gaussian binomials.
pub fn q_multinomial(n: usize, parts: &[usize]) -> Result<QPoly> {
    let sum: usize = parts.iter().sum();
    if sum != n {
        return Err(Error::PartsSumMismatch { n, sum });
    }
    let mut acc = QPoly::one();
    let mut running = 0;
    for &a in parts {
        running += a;
        acc = &acc * &q_binomial(running, a as i64);
    }
    Ok(acc)
}

/// `H_n(t;q) = sum_i [n i]_q t^i`.
pub fn rogers_szego(n: usize) -> TQPoly {
    TQPoly::from_qpolys((0..=n).map(|i| q_binomial(n, i as i64)).collect())
}

/// `P_m(t) = t + t^2 + ... + t^(m-1)`: one term per hook on an `m`-set.
pub fn hook_weight_block(m: usize) -> Result<TQPoly> {
    if m < 2 {
        return Err(Error::MTooSmall(m));
    }
    Ok((1..m).map(TQPoly::t_power).sum())
}
