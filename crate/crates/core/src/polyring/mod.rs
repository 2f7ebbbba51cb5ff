//! Exact dense polynomials over the integers: univariate in `q`, bivariate in
//! `t` (outer) and `q` (inner), and reduction at roots of unity.

mod cyclotomic;
mod qpoly;
mod tqpoly;

pub use cyclotomic::{cyclotomic, eval_at_root, tq_eval_q, CycloTPoly, CyclotomicElem};
pub use qpoly::QPoly;
pub use tqpoly::{tq_exact_div, TQPoly};

/// Coefficient domain: arbitrary precision, so arithmetic never wraps.
pub type Integer = num_bigint::BigInt;

/// `p(q^r)`.
pub fn subst_q_power(p: &QPoly, r: usize) -> QPoly {
    p.subst_q_power(r)
}
