//! Sweep-and-check engine. Every check is an exact equality; failures are
//! collected as witnesses carrying both evaluated sides and never abort a
//! sweep.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::eulerian::{is_palindromic, EulerianTable};
use crate::hookmaps::{
    colored_distribution, enumerate_two_pix, enumerate_two_pix_colored, lemma2_involution,
    lemma4_map, th5_map, two_pix_colored_gf, two_pix_gf,
};
use crate::permstats::{distribution, symmetric_group, DistributionKind};
use crate::polyring::{eval_at_root, tq_eval_q, CycloTPoly, QPoly, TQPoly};
use crate::qfunctions::{q_binomial, rogers_szego};

/// Largest color count swept by the colored families.
pub const MAX_COLORS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Th1,
    CoeffIdentity,
    RogersSzego,
    EqMa,
    RootSpecialization,
    Cgk,
    QBinomialParity,
    Equidistribution,
    RowSymmetry,
    WreathCardinality,
    Lemma2,
    Lemma3,
    Lemma4,
    ColoredDistribution,
    ColoredLemma3,
    Prop5,
}

impl IdentityId {
    pub const ALL: [IdentityId; 16] = [
        IdentityId::Th1,
        IdentityId::CoeffIdentity,
        IdentityId::RogersSzego,
        IdentityId::EqMa,
        IdentityId::RootSpecialization,
        IdentityId::Cgk,
        IdentityId::QBinomialParity,
        IdentityId::Equidistribution,
        IdentityId::RowSymmetry,
        IdentityId::WreathCardinality,
        IdentityId::Lemma2,
        IdentityId::Lemma3,
        IdentityId::Lemma4,
        IdentityId::ColoredDistribution,
        IdentityId::ColoredLemma3,
        IdentityId::Prop5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Th1 => "th1",
            IdentityId::CoeffIdentity => "coeff",
            IdentityId::RogersSzego => "rs",
            IdentityId::EqMa => "eqma",
            IdentityId::RootSpecialization => "root",
            IdentityId::Cgk => "cgk",
            IdentityId::QBinomialParity => "qbinom-parity",
            IdentityId::Equidistribution => "equidistribution",
            IdentityId::RowSymmetry => "symmetry",
            IdentityId::WreathCardinality => "wreath",
            IdentityId::Lemma2 => "lemma2",
            IdentityId::Lemma3 => "lemma3",
            IdentityId::Lemma4 => "lemma4",
            IdentityId::ColoredDistribution => "prop",
            IdentityId::ColoredLemma3 => "colored-lemma3",
            IdentityId::Prop5 => "prop5",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One fully evaluated side of a checked equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Side {
    Int(BigInt),
    Poly(QPoly),
    TPoly(TQPoly),
    Root(CycloTPoly),
    Text(String),
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Int(v) => write!(f, "{v}"),
            Side::Poly(p) => write!(f, "{p}"),
            Side::TPoly(p) => write!(f, "{p}"),
            Side::Root(p) => write!(f, "{p}"),
            Side::Text(s) => f.write_str(s),
        }
    }
}

impl From<QPoly> for Side {
    fn from(p: QPoly) -> Self {
        Side::Poly(p)
    }
}

impl From<TQPoly> for Side {
    fn from(p: TQPoly) -> Self {
        Side::TPoly(p)
    }
}

impl From<CycloTPoly> for Side {
    fn from(p: CycloTPoly) -> Self {
        Side::Root(p)
    }
}

impl From<BigInt> for Side {
    fn from(v: BigInt) -> Self {
        Side::Int(v)
    }
}

impl From<usize> for Side {
    fn from(v: usize) -> Self {
        Side::Int(v.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub params: Vec<(String, i64)>,
    /// Which sub-check failed, and the object involved when there is one.
    pub note: Option<String>,
    pub lhs: Side,
    pub rhs: Side,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    /// Human-readable description of the swept parameter range.
    pub params: String,
    pub cases: usize,
    pub status: Status,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    fn skipped(identity: IdentityId, params: impl Into<String>) -> Self {
        VerificationReport {
            identity,
            params: params.into(),
            cases: 0,
            status: Status::Skipped,
            witnesses: Vec::new(),
        }
    }

    fn errored(identity: IdentityId, params: impl Into<String>, err: &Error) -> Self {
        VerificationReport {
            identity,
            params: params.into(),
            cases: 1,
            status: Status::Fail,
            witnesses: vec![Witness {
                params: Vec::new(),
                note: Some(format!("error: {err}")),
                lhs: Side::Text(err.to_string()),
                rhs: Side::Text("no error".into()),
            }],
        }
    }
}

struct ReportBuilder {
    identity: IdentityId,
    params: String,
    cases: usize,
    witnesses: Vec<Witness>,
}

impl ReportBuilder {
    fn new(identity: IdentityId, params: impl Into<String>) -> Self {
        ReportBuilder {
            identity,
            params: params.into(),
            cases: 0,
            witnesses: Vec::new(),
        }
    }

    fn check<S: Into<Side> + PartialEq>(
        &mut self,
        params: &[(&str, i64)],
        note: Option<String>,
        lhs: S,
        rhs: S,
    ) {
        self.cases += 1;
        if lhs != rhs {
            self.witnesses.push(Witness {
                params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                note,
                lhs: lhs.into(),
                rhs: rhs.into(),
            });
        }
    }

    fn finish(self) -> VerificationReport {
        let status = if self.witnesses.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            identity: self.identity,
            params: self.params,
            cases: self.cases,
            status,
            witnesses: self.witnesses,
        }
    }
}

/// Per-family size bounds for [`verify_all`]. A zero bound skips the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest `a + b`.
    pub th1: usize,
    pub coeff: usize,
    pub rs: usize,
    /// Largest `rn`.
    pub eqma: usize,
    pub root: usize,
    /// Largest `c + d`.
    pub cgk: usize,
    /// Largest `n` in `[2n, k]_{-1}`.
    pub parity: usize,
    pub equidistribution: usize,
    /// Largest `rn` for the row symmetry and cardinality checks.
    pub rows: usize,
    pub lemma2: usize,
    pub lemma3: usize,
    pub lemma4: usize,
    /// Largest `rn`.
    pub prop: usize,
    pub colored_lemma3: usize,
    pub prop5: usize,
}

impl Budget {
    /// `max_n` for every uncolored family, `max_rn` for every colored one.
    pub fn uniform(max_n: usize, max_rn: usize) -> Self {
        Budget {
            th1: max_n,
            coeff: max_n,
            rs: max_n,
            eqma: max_rn,
            root: max_n,
            cgk: max_n,
            parity: max_n,
            equidistribution: max_n,
            rows: max_rn,
            lemma2: max_n,
            lemma3: max_n,
            lemma4: max_n,
            prop: max_rn,
            colored_lemma3: max_rn,
            prop5: max_rn,
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::uniform(7, 7)
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn to_i64(v: usize) -> i64 {
    v as i64
}

/// Holds memoized Eulerian tables so sweeps share rows.
#[derive(Debug, Default, Clone)]
pub struct Verifier {
    tables: BTreeMap<usize, EulerianTable>,
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// Table for `r` colors; callers may override rows to inject faults.
    pub fn table_mut(&mut self, r: usize) -> &mut EulerianTable {
        self.tables.entry(r).or_insert_with(|| EulerianTable::new(r))
    }

    fn a(&mut self, n: usize, k: i64, r: usize) -> Result<QPoly> {
        self.table_mut(r).number(n, k)
    }

    fn row(&mut self, n: usize, r: usize) -> Result<TQPoly> {
        self.table_mut(r).row(n).cloned()
    }

    fn classical(&mut self, n: usize, k: i64) -> Result<BigInt> {
        Ok(self.a(n, k, 1)?.eval_one())
    }

    /// Both sides of `sum_k [a+b k]_q A_{k,a-1} = sum_k [a+b k]_q A_{k,b-1}`.
    pub fn th1_sides(&mut self, a: usize, b: usize) -> Result<(QPoly, QPoly)> {
        let n = a + b;
        let mut lhs = QPoly::zero();
        let mut rhs = QPoly::zero();
        for k in 0..=n {
            let binom = q_binomial(n, k as i64);
            lhs += &(&binom * &self.a(k, a as i64 - 1, 1)?);
            rhs += &(&binom * &self.a(k, b as i64 - 1, 1)?);
        }
        Ok((lhs, rhs))
    }

    pub fn th1(&mut self, a: usize, b: usize) -> Result<VerificationReport> {
        self.sweep_th1_over([(a, b)], format!("a={a},b={b}"))
    }

    pub fn sweep_th1(&mut self, max_sum: usize) -> Result<VerificationReport> {
        let pairs: Vec<(usize, usize)> = (1..max_sum)
            .flat_map(|a| (1..=max_sum - a).map(move |b| (a, b)))
            .collect();
        self.sweep_th1_over(pairs, format!("a,b>=1, a+b<={max_sum}"))
    }

    fn sweep_th1_over(
        &mut self,
        pairs: impl IntoIterator<Item = (usize, usize)>,
        params: String,
    ) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::Th1, params);
        for (a, b) in pairs {
            if a == 0 || b == 0 {
                return Err(Error::InvalidParameter("a and b must be positive".into()));
            }
            let (l, r) = self.th1_sides(a, b)?;
            rep.check(&[("a", to_i64(a)), ("b", to_i64(b))], None, l, r);
        }
        Ok(rep.finish())
    }

    /// `sum_k [n k] A_{n-k,i-k} - sum_k [n k] A_{n-k,i-1}` and the expected
    /// constant (1 if `i = 0 != n`, -1 if `i = n != 0`, else 0).
    pub fn coeff_sides(&mut self, n: usize, i: i64) -> Result<(QPoly, QPoly)> {
        let mut lhs = QPoly::zero();
        for k in 0..=n {
            let binom = q_binomial(n, k as i64);
            lhs += &(&binom * &self.a(n - k, i - k as i64, 1)?);
            lhs -= &(&binom * &self.a(n - k, i - 1, 1)?);
        }
        let expected = if i == 0 && n != 0 {
            1
        } else if i == n as i64 && n != 0 {
            -1
        } else {
            0
        };
        Ok((lhs, QPoly::constant(expected)))
    }

    pub fn coeff_identity(&mut self, n: usize, i: i64) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::CoeffIdentity, format!("n={n},i={i}"));
        let (l, r) = self.coeff_sides(n, i)?;
        rep.check(&[("n", to_i64(n)), ("i", i)], None, l, r);
        Ok(rep.finish())
    }

    pub fn sweep_coeff(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep =
            ReportBuilder::new(IdentityId::CoeffIdentity, format!("0<=i<=n<={max_n}"));
        for n in 0..=max_n {
            for i in 0..=n as i64 {
                let (l, r) = self.coeff_sides(n, i)?;
                rep.check(&[("n", to_i64(n)), ("i", i)], None, l, r);
            }
        }
        Ok(rep.finish())
    }

    /// Both sides of the Rogers–Szegő weighted coefficient identity.
    pub fn rs_sides(&mut self, n: usize, i: i64) -> Result<(QPoly, QPoly)> {
        let mut lhs = QPoly::zero();
        for k in 0..=n {
            let weight = &rogers_szego(k).eval_t_one() * &q_binomial(n, k as i64);
            lhs += &(&weight * &self.a(n - k, i - k as i64, 1)?);
            lhs -= &(&weight * &self.a(n - k, i - 2, 1)?);
        }
        let h_n = rogers_szego(n).eval_t_one();
        let mut rhs = &q_binomial(n, i) - &q_binomial(n, i - 1);
        let ni = n as i64;
        if i == 1 && ni != 1 {
            rhs += &h_n;
        } else if i == ni && ni != 1 {
            rhs -= &h_n;
        }
        Ok((lhs, rhs))
    }

    pub fn rs_multline(&mut self, n: usize, i: i64) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::RogersSzego, format!("n={n},i={i}"));
        let (l, r) = self.rs_sides(n, i)?;
        rep.check(&[("n", to_i64(n)), ("i", i)], None, l, r);
        Ok(rep.finish())
    }

    pub fn sweep_rs(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::RogersSzego, format!("0<=i<=n<={max_n}"));
        for n in 0..=max_n {
            for i in 0..=n as i64 {
                let (l, r) = self.rs_sides(n, i)?;
                rep.check(&[("n", to_i64(n)), ("i", i)], None, l, r);
            }
        }
        Ok(rep.finish())
    }

    /// Both sides of the colored symmetry
    /// `sum_k [n k]_{q^r} A^{(r)}_{k,rn-i-1} = sum_k [n k]_{q^r} A^{(r)}_{k,i-1}`.
    pub fn eqma_sides(&mut self, n: usize, r: usize, i: usize) -> Result<(QPoly, QPoly)> {
        if n == 0 || r == 0 || i == 0 {
            return Err(Error::InvalidParameter("n, r and i must be positive".into()));
        }
        let rn = r * n;
        if i == rn {
            return Err(Error::IndexExcluded(i));
        }
        let mut lhs = QPoly::zero();
        let mut rhs = QPoly::zero();
        for k in 0..=n {
            let binom = q_binomial(n, k as i64).subst_q_power(r);
            lhs += &(&binom * &self.a(k, rn as i64 - i as i64 - 1, r)?);
            rhs += &(&binom * &self.a(k, i as i64 - 1, r)?);
        }
        Ok((lhs, rhs))
    }

    pub fn eq_ma(&mut self, n: usize, r: usize, i: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::EqMa, format!("n={n},r={r},i={i}"));
        let (l, rr) = self.eqma_sides(n, r, i)?;
        rep.check(&[("n", to_i64(n)), ("r", to_i64(r)), ("i", to_i64(i))], None, l, rr);
        Ok(rep.finish())
    }

    pub fn sweep_eqma(&mut self, max_rn: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(
            IdentityId::EqMa,
            format!("r<={MAX_COLORS}, rn<={max_rn}, 1<=i<rn"),
        );
        for r in 1..=MAX_COLORS {
            for n in 1..=max_rn / r {
                for i in 1..r * n {
                    let (l, rr) = self.eqma_sides(n, r, i)?;
                    rep.check(&[("n", to_i64(n)), ("r", to_i64(r)), ("i", to_i64(i))], None, l, rr);
                }
            }
        }
        Ok(rep.finish())
    }

    /// `A_n(t, w_d)` and `A_{n/d}(t) (1 + ... + t^{d-1})^{n/d}` in `Z[w_d][t]`.
    pub fn root_sides(&mut self, n: usize, d: usize) -> Result<(CycloTPoly, CycloTPoly)> {
        if n == 0 || d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NotDivisor { n, d });
        }
        let k = n / d;
        let lhs = tq_eval_q(&self.row(n, 1)?, d);
        let classical = TQPoly::from_t_coeffs(self.row(k, 1)?.eval_q_one());
        let block = TQPoly::from_t_coeffs(vec![1; d]);
        Ok((lhs, tq_eval_q(&(&classical * &block.pow(k as u32)), d)))
    }

    pub fn root_specialization(&mut self, n: usize, d: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::RootSpecialization, format!("n={n},d={d}"));
        let (l, r) = self.root_sides(n, d)?;
        rep.check(&[("n", to_i64(n)), ("d", to_i64(d))], None, l, r);
        Ok(rep.finish())
    }

    pub fn sweep_root(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep =
            ReportBuilder::new(IdentityId::RootSpecialization, format!("d|n, 1<=n<={max_n}"));
        for n in 1..=max_n {
            for d in (1..=n).filter(|d| n % d == 0) {
                let (l, r) = self.root_sides(n, d)?;
                rep.check(&[("n", to_i64(n)), ("d", to_i64(d))], None, l, r);
            }
        }
        Ok(rep.finish())
    }

    /// `sum_k C(big, k) sum_{i+j=target} C(k, i) A_{k,j}` over classical
    /// Eulerian numbers.
    fn cgk_side(&mut self, big: usize, target: usize) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for k in 0..=big {
            let mut inner = BigInt::zero();
            for i in 0..=target.min(k) {
                inner += binomial(k, i) * self.classical(k, (target - i) as i64)?;
            }
            total += binomial(big, k) * inner;
        }
        Ok(total)
    }

    /// `((first_lhs, first_rhs), (second_lhs, second_rhs))` for the two
    /// integer identities obtained at `q = -1`.
    pub fn cgk_sides(&mut self, c: usize, d: usize) -> Result<((BigInt, BigInt), (BigInt, BigInt))> {
        if c == 0 || d == 0 {
            return Err(Error::InvalidParameter("c and d must be positive".into()));
        }
        let first = (
            self.cgk_side(c + d, 2 * c - 1)?,
            self.cgk_side(c + d, 2 * d - 1)?,
        );
        let second = (
            self.cgk_side(c + d - 1, 2 * (c - 1))?,
            self.cgk_side(c + d - 1, 2 * (d - 1))?,
        );
        Ok((first, second))
    }

    fn check_cgk(&mut self, rep: &mut ReportBuilder, c: usize, d: usize) -> Result<()> {
        let ((l1, r1), (l2, r2)) = self.cgk_sides(c, d)?;
        let params = [("c", to_i64(c)), ("d", to_i64(d))];
        rep.check(&params, Some("binomial(c+d, k), i+j = 2c-1 vs 2d-1".into()), l1, r1);
        rep.check(&params, Some("binomial(c+d-1, k), i+j = 2(c-1) vs 2(d-1)".into()), l2, r2);
        Ok(())
    }

    pub fn cgk_qm1(&mut self, c: usize, d: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::Cgk, format!("c={c},d={d}"));
        self.check_cgk(&mut rep, c, d)?;
        Ok(rep.finish())
    }

    pub fn sweep_cgk(&mut self, max_sum: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::Cgk, format!("c,d>=1, c+d<={max_sum}"));
        for c in 1..max_sum {
            for d in 1..=max_sum - c {
                self.check_cgk(&mut rep, c, d)?;
            }
        }
        Ok(rep.finish())
    }

    /// `[2n, 2k+1]_{-1} = 0` and `[2n, 2k]_{-1} = C(n, k)`.
    pub fn sweep_parity(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep =
            ReportBuilder::new(IdentityId::QBinomialParity, format!("1<=n<={max_n}"));
        for n in 1..=max_n {
            for j in 0..=2 * n {
                let at = eval_at_root(&q_binomial(2 * n, j as i64), 2)
                    .as_integer()
                    .expect("residues mod q+1 are integers");
                let expected = if j % 2 == 1 { BigInt::zero() } else { binomial(n, j / 2) };
                rep.check(&[("n", to_i64(n)), ("k", to_i64(j))], None, at, expected);
            }
        }
        Ok(rep.finish())
    }

    /// Recurrence = `(maj - exc, exc)` sum = `(inv - lec, lec)` sum.
    pub fn sweep_equidistribution(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep =
            ReportBuilder::new(IdentityId::Equidistribution, format!("0<=n<={max_n}"));
        for n in 0..=max_n {
            let row = self.row(n, 1)?;
            let p = [("n", to_i64(n))];
            rep.check(&p, Some("recurrence vs maj-exc".into()), row.clone(), distribution(n, DistributionKind::MajExc));
            rep.check(&p, Some("recurrence vs inv-lec".into()), row, distribution(n, DistributionKind::InvLec));
        }
        Ok(rep.finish())
    }

    /// Palindromic rows of `A_n^{(r)}` with `t`-degree at most `rn - 1`, and
    /// nonnegative coefficients.
    pub fn sweep_symmetry(&mut self, max_rn: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(
            IdentityId::RowSymmetry,
            format!("r<={MAX_COLORS}, rn<={max_rn}"),
        );
        for r in 1..=MAX_COLORS {
            for n in 0..=max_rn / r {
                let row = self.row(n, r)?;
                let p = [("n", to_i64(n)), ("r", to_i64(r))];
                let reversed = if n == 0 {
                    TQPoly::zero()
                } else {
                    TQPoly::from_qpolys((0..r * n).rev().map(|k| row.coeff(k).clone()).collect())
                };
                debug_assert_eq!(row == reversed, is_palindromic(&row, n, r));
                let nonneg = row.coeffs().iter().all(QPoly::has_nonnegative_coeffs);
                rep.check(&p, Some("nonnegative coefficients".into()), Side::Text(nonneg.to_string()), Side::Text("true".into()));
                rep.check(&p, Some("row vs reversed row".into()), row, reversed);
            }
        }
        Ok(rep.finish())
    }

    /// `A_n^{(r)}(1,1) = r^n n!`.
    pub fn sweep_wreath(&mut self, max_rn: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(
            IdentityId::WreathCardinality,
            format!("r<={MAX_COLORS}, 1<=rn<={max_rn}"),
        );
        for r in 1..=MAX_COLORS {
            for n in 1..=max_rn / r {
                let total = self.row(n, r)?.eval_t_one().eval_one();
                let fact: BigInt = (1..=n).map(BigInt::from).product();
                let expected = BigInt::from(r).pow(n as u32) * fact;
                rep.check(&[("n", to_i64(n)), ("r", to_i64(r))], None, total, expected);
            }
        }
        Ok(rep.finish())
    }

    /// Involution, lec complement to `n - 1`, and `inv - lec` preservation for
    /// every permutation of `[n]`.
    pub fn sweep_lemma2(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::Lemma2, format!("1<=n<={max_n}"));
        for n in 1..=max_n {
            let p = [("n", to_i64(n))];
            for w in symmetric_group(n) {
                let s = lemma2_involution(&w)?;
                let back = lemma2_involution(&s)?;
                let note = |what: &str| Some(format!("{what} at pi = {w}, sigma = {s}"));
                rep.check(&p, note("involution"), Side::Text(back.to_string()), Side::Text(w.to_string()));
                rep.check(&p, note("lec complement"), Side::from(w.lec() + s.lec()), Side::from(n - 1));
                rep.check(&p, note("inv - lec"), Side::from(s.inv() - s.lec()), Side::from(w.inv() - w.lec()));
            }
        }
        Ok(rep.finish())
    }

    /// Two-pix generating function by `lec` equals `sum_k [n k] A_{k,s}`.
    pub fn sweep_lemma3(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::Lemma3, format!("1<=n<={max_n}, all s"));
        for n in 1..=max_n {
            for s in 0..=n {
                let mut expected = QPoly::zero();
                for k in 0..=n {
                    expected += &(&q_binomial(n, k as i64) * &self.a(k, s as i64, 1)?);
                }
                rep.check(&[("n", to_i64(n)), ("s", to_i64(s))], None, two_pix_gf(n, s), expected);
            }
        }
        Ok(rep.finish())
    }

    /// Self-inverse bijection `{lec = s} <-> {lec = n-2-s}` preserving
    /// `inv - lec`; the top class `lec = n - 1` must be rejected.
    pub fn sweep_lemma4(&mut self, max_n: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(IdentityId::Lemma4, format!("1<=n<={max_n}"));
        for n in 1..=max_n {
            let p = [("n", to_i64(n))];
            let mut domain = 0usize;
            let mut images = BTreeSet::new();
            for v in enumerate_two_pix(n) {
                let note = |what: &str| Some(format!("{what} at v = {v}"));
                if v.lec() + 1 == n {
                    let rejected = matches!(lemma4_map(&v), Err(Error::LecOutOfRange { .. }));
                    rep.check(&p, note("top class rejected"), Side::Text(rejected.to_string()), Side::Text("true".into()));
                    continue;
                }
                domain += 1;
                let u = match lemma4_map(&v) {
                    Ok(u) => u,
                    Err(e) => {
                        rep.check(&p, note("map defined"), Side::Text(e.to_string()), Side::Text("ok".into()));
                        continue;
                    }
                };
                let back = lemma4_map(&u).map(|b| b.to_string()).unwrap_or_else(|e| e.to_string());
                rep.check(&p, note("involution"), Side::Text(back), Side::Text(v.to_string()));
                rep.check(&p, note("lec complement"), Side::from(u.lec() + v.lec()), Side::from(n - 2));
                rep.check(&p, note("inv - lec"), Side::from(u.inv_minus_lec()), Side::from(v.inv_minus_lec()));
                images.insert((u.sigma().to_vec(), u.p2().to_vec()));
            }
            rep.check(&p, Some("injective on its domain".into()), Side::from(images.len()), Side::from(domain));
        }
        Ok(rep.finish())
    }

    /// Colored distribution over `W_{n,r}` equals `A_n^{(r)}(t,q)`.
    pub fn sweep_prop(&mut self, max_rn: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(
            IdentityId::ColoredDistribution,
            format!("r<={MAX_COLORS}, 1<=rn<={max_rn}"),
        );
        for r in 1..=MAX_COLORS {
            for n in 1..=max_rn / r {
                let row = self.row(n, r)?;
                rep.check(&[("n", to_i64(n)), ("r", to_i64(r))], None, colored_distribution(n, r), row);
            }
        }
        Ok(rep.finish())
    }

    /// Colored two-pix generating function equals
    /// `sum_k [n k]_{q^r} A^{(r)}_{k,s}`.
    pub fn sweep_colored_lemma3(&mut self, max_rn: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(
            IdentityId::ColoredLemma3,
            format!("r<={MAX_COLORS}, 1<=rn<={max_rn}, all s"),
        );
        for r in 1..=MAX_COLORS {
            for n in 1..=max_rn / r {
                for s in 0..=r * n {
                    let mut expected = QPoly::zero();
                    for k in 0..=n {
                        let binom = q_binomial(n, k as i64).subst_q_power(r);
                        expected += &(&binom * &self.a(k, s as i64, r)?);
                    }
                    let got = two_pix_colored_gf(n, r, s);
                    rep.check(&[("n", to_i64(n)), ("r", to_i64(r)), ("s", to_i64(s))], None, got, expected);
                }
            }
        }
        Ok(rep.finish())
    }

    /// The colored bijection: self-inverse, complements `lec_r` to `rn - 2`,
    /// preserves `inv_r - lec_r`, injective, rejects `lec_r = rn - 1`.
    pub fn sweep_prop5(&mut self, max_rn: usize) -> Result<VerificationReport> {
        let mut rep = ReportBuilder::new(
            IdentityId::Prop5,
            format!("r<={MAX_COLORS}, 1<=rn<={max_rn}"),
        );
        for r in 1..=MAX_COLORS {
            for n in 1..=max_rn / r {
                let rn = r * n;
                let p = [("n", to_i64(n)), ("r", to_i64(r))];
                let mut domain = 0usize;
                let mut images = BTreeSet::new();
                for v in enumerate_two_pix_colored(n, r) {
                    let note = |what: &str| Some(format!("{what} at v = {v}"));
                    if v.lec_r() + 1 == rn {
                        let rejected = matches!(th5_map(&v), Err(Error::LecOutOfRange { .. }));
                        rep.check(&p, note("top class rejected"), Side::Text(rejected.to_string()), Side::Text("true".into()));
                        continue;
                    }
                    domain += 1;
                    let u = match th5_map(&v) {
                        Ok(u) => u,
                        Err(e) => {
                            rep.check(&p, note("map defined"), Side::Text(e.to_string()), Side::Text("ok".into()));
                            continue;
                        }
                    };
                    let back = th5_map(&u).map(|b| b.to_string()).unwrap_or_else(|e| e.to_string());
                    rep.check(&p, note("involution"), Side::Text(back), Side::Text(v.to_string()));
                    rep.check(&p, note("lec_r complement"), Side::from(u.lec_r() + v.lec_r()), Side::from(rn - 2));
                    rep.check(&p, note("inv_r - lec_r"), Side::from(u.inv_minus_lec()), Side::from(v.inv_minus_lec()));
                    images.insert(u.to_string());
                }
                rep.check(&p, Some("injective on its domain".into()), Side::from(images.len()), Side::from(domain));
            }
        }
        Ok(rep.finish())
    }

    /// Runs the sweep for one family at the given bound; zero is skipped.
    pub fn sweep(&mut self, id: IdentityId, bound: usize) -> VerificationReport {
        if bound == 0 {
            return VerificationReport::skipped(id, "budget 0");
        }
        let result = match id {
            IdentityId::Th1 => self.sweep_th1(bound),
            IdentityId::CoeffIdentity => self.sweep_coeff(bound),
            IdentityId::RogersSzego => self.sweep_rs(bound),
            IdentityId::EqMa => self.sweep_eqma(bound),
            IdentityId::RootSpecialization => self.sweep_root(bound),
            IdentityId::Cgk => self.sweep_cgk(bound),
            IdentityId::QBinomialParity => self.sweep_parity(bound),
            IdentityId::Equidistribution => self.sweep_equidistribution(bound),
            IdentityId::RowSymmetry => self.sweep_symmetry(bound),
            IdentityId::WreathCardinality => self.sweep_wreath(bound),
            IdentityId::Lemma2 => self.sweep_lemma2(bound),
            IdentityId::Lemma3 => self.sweep_lemma3(bound),
            IdentityId::Lemma4 => self.sweep_lemma4(bound),
            IdentityId::ColoredDistribution => self.sweep_prop(bound),
            IdentityId::ColoredLemma3 => self.sweep_colored_lemma3(bound),
            IdentityId::Prop5 => self.sweep_prop5(bound),
        };
        result.unwrap_or_else(|e| VerificationReport::errored(id, format!("bound {bound}"), &e))
    }

    pub fn verify_all(&mut self, budget: &Budget) -> Vec<VerificationReport> {
        IdentityId::ALL
            .into_iter()
            .map(|id| self.sweep(id, budget.bound(id)))
            .collect()
    }
}

impl Budget {
    pub fn bound(&self, id: IdentityId) -> usize {
        match id {
            IdentityId::Th1 => self.th1,
            IdentityId::CoeffIdentity => self.coeff,
            IdentityId::RogersSzego => self.rs,
            IdentityId::EqMa => self.eqma,
            IdentityId::RootSpecialization => self.root,
            IdentityId::Cgk => self.cgk,
            IdentityId::QBinomialParity => self.parity,
            IdentityId::Equidistribution => self.equidistribution,
            IdentityId::RowSymmetry | IdentityId::WreathCardinality => self.rows,
            IdentityId::Lemma2 => self.lemma2,
            IdentityId::Lemma3 => self.lemma3,
            IdentityId::Lemma4 => self.lemma4,
            IdentityId::ColoredDistribution => self.prop,
            IdentityId::ColoredLemma3 => self.colored_lemma3,
            IdentityId::Prop5 => self.prop5,
        }
    }
}

pub fn verify_th1(a: usize, b: usize) -> Result<VerificationReport> {
    Verifier::new().th1(a, b)
}

pub fn verify_coeff_identity(n: usize, i: i64) -> Result<VerificationReport> {
    Verifier::new().coeff_identity(n, i)
}

pub fn verify_rs_multline(n: usize, i: i64) -> Result<VerificationReport> {
    Verifier::new().rs_multline(n, i)
}

pub fn verify_eq_ma(n: usize, r: usize, i: usize) -> Result<VerificationReport> {
    Verifier::new().eq_ma(n, r, i)
}

pub fn verify_root_specialization(n: usize, d: usize) -> Result<VerificationReport> {
    Verifier::new().root_specialization(n, d)
}

pub fn verify_cgk_qm1(c: usize, d: usize) -> Result<VerificationReport> {
    Verifier::new().cgk_qm1(c, d)
}

pub fn verify_all(budget: &Budget) -> Vec<VerificationReport> {
    Verifier::new().verify_all(budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_coeffs(c.iter().copied())
    }

    #[test]
    fn th1_examples() {
        let mut v = Verifier::new();
        let (l, r) = v.th1_sides(1, 2).unwrap();
        assert_eq!(l, p(&[3, 2, 2]));
        assert_eq!(r, p(&[3, 2, 2]));
        assert!(verify_th1(3, 3).unwrap().passed());
        let (l, r) = v.th1_sides(1, 3).unwrap();
        assert_eq!(l.eval_one(), 15.into());
        assert_eq!(r.eval_one(), 15.into());
        assert!(verify_th1(0, 2).is_err());
    }

    #[test]
    fn coeff_examples() {
        let mut v = Verifier::new();
        assert_eq!(v.coeff_sides(2, 0).unwrap(), (QPoly::one(), QPoly::one()));
        assert_eq!(v.coeff_sides(0, 0).unwrap(), (QPoly::zero(), QPoly::zero()));
        assert_eq!(v.coeff_sides(3, 1).unwrap().0, QPoly::zero());
        assert!(verify_coeff_identity(3, 1).unwrap().passed());
        assert_eq!(v.coeff_sides(4, 4).unwrap().0, QPoly::constant(-1));
    }

    #[test]
    fn rs_examples() {
        let mut v = Verifier::new();
        assert_eq!(v.rs_sides(2, 1).unwrap(), (p(&[3, 2]), p(&[3, 2])));
        assert_eq!(v.rs_sides(2, 5).unwrap(), (QPoly::zero(), QPoly::zero()));
        assert!(verify_rs_multline(3, 3).unwrap().passed());
        assert!(verify_rs_multline(2, -4).unwrap().passed());
    }

    #[test]
    fn eqma_examples() {
        let mut v = Verifier::new();
        assert_eq!(v.eqma_sides(1, 2, 1).unwrap(), (QPoly::one(), QPoly::one()));
        assert!(verify_eq_ma(2, 2, 2).unwrap().passed());
        assert_eq!(verify_eq_ma(2, 2, 4), Err(Error::IndexExcluded(4)));
        // r = 1 reduces to the symmetric identity
        for n in 2..=6 {
            for i in 1..n {
                let ma = v.eqma_sides(n, 1, i).unwrap();
                let th1 = v.th1_sides(i, n - i).unwrap();
                assert_eq!(ma.0, th1.1);
                assert_eq!(ma.1, th1.0);
            }
        }
    }

    #[test]
    fn root_examples() {
        assert!(verify_root_specialization(4, 2).unwrap().passed());
        assert!(verify_root_specialization(7, 1).unwrap().passed());
        assert!(verify_root_specialization(6, 3).unwrap().passed());
        assert_eq!(
            verify_root_specialization(6, 4),
            Err(Error::NotDivisor { n: 6, d: 4 })
        );
    }

    #[test]
    fn cgk_examples() {
        let mut v = Verifier::new();
        let ((l1, r1), _) = v.cgk_sides(1, 2).unwrap();
        assert_eq!(l1, 19.into());
        assert_eq!(r1, 19.into());
        let (_, (l2, r2)) = v.cgk_sides(2, 1).unwrap();
        assert_eq!(l2, r2);
        assert!(verify_cgk_qm1(3, 3).unwrap().passed());
    }

    #[test]
    fn zero_budget_skips() {
        let budget = Budget {
            lemma4: 0,
            ..Budget::uniform(3, 3)
        };
        let reports = verify_all(&budget);
        assert_eq!(reports.len(), IdentityId::ALL.len());
        for r in &reports {
            if r.identity == IdentityId::Lemma4 {
                assert_eq!(r.status, Status::Skipped);
            } else {
                assert!(r.passed(), "{}: {:?}", r.identity, r.witnesses);
            }
        }
    }

    #[test]
    fn injected_fault_is_reported_with_both_sides() {
        let mut v = Verifier::new();
        v.table_mut(1).grow_to(8).unwrap();
        let mut row = v.table_mut(1).row(4).unwrap().clone();
        row += &TQPoly::term(QPoly::q(), 1);
        v.table_mut(1).override_row(4, row).unwrap();
        let rep = v.sweep_th1(6).unwrap();
        assert!(rep.failed());
        let w = &rep.witnesses[0];
        assert_ne!(w.lhs, w.rhs);
        assert!(w.params.iter().any(|(k, _)| k == "a"));
        let rep = v.sweep_equidistribution(5).unwrap();
        assert!(rep.failed());
        assert!(rep.witnesses.iter().all(|w| w.params == vec![("n".to_string(), 4)]));
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(IdentityId::from_name(id.name()), Some(id));
        }
    }
}
