//! Command-line front end. Every command writes one JSON document
//! `{schema_version, kind, payload}`; tables may instead be written as CSV.
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::eulerian::eulerian_tq;
use crate::hookmaps::{
    enumerate_colored, enumerate_two_pix, enumerate_two_pix_colored, lemma2_involution,
    lemma4_map, th5_map, TwoPix, TwoPixColored,
};
use crate::notation::{parse_colored_word, parse_word, split_components};
use crate::permstats::{Letter, Perm};
use crate::polyring::{CycloTPoly, QPoly, TQPoly};
use crate::verifier::{Budget, IdentityId, Side, Status, VerificationReport, Verifier};

pub const SCHEMA_VERSION: &str = "1";
const VARIABLES: [&str; 2] = ["t", "q"];

#[derive(Parser, Debug)]
#[command(name = "qeuler", version, about = "Exact q-Eulerian polynomials and hook-factorization maps")]
struct Cli {
    /// Output format; csv is accepted for tables only.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients of A_n^(r)(t,q), t-major.
    Eulerian {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// Hook factorization and lec of a permutation word.
    Hookfact { word: String },
    /// exc, des, maj, inv and lec of a word.
    Stats { word: String },
    /// Apply one of the bijections to an object.
    Map {
        #[arg(value_enum)]
        which: MapKind,
        /// A word for lemma2; `p1|tau_1|...|p2` for lemma4 and th5.
        object: String,
        #[arg(long, default_value_t = 1)]
        r: usize,
    },
    /// List combinatorial objects with their statistics.
    Enumerate {
        #[arg(value_enum)]
        what: EnumKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        r: usize,
        /// Keep only objects with this lec (lec_r when colored).
        #[arg(long)]
        s: Option<usize>,
    },
    /// Sweep one identity family, or all of them.
    Verify {
        family: String,
        /// Bound for the uncolored families.
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Bound on rn for the colored families.
        #[arg(long, default_value_t = 7)]
        max_rn: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapKind {
    Lemma2,
    Lemma4,
    Th5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    Twopix,
    Colored,
}

/// A finished command: the document plus an optional CSV rendering.
struct Output {
    kind: &'static str,
    payload: Value,
    csv: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
    failed: bool,
}

impl Output {
    fn object(payload: Value) -> Self {
        Output {
            kind: "object",
            payload,
            csv: None,
            failed: false,
        }
    }
}

pub fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn bigint_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| Error::InvalidParameter(format!("non-integer coefficient {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad integer {s:?}"))),
        other => Err(Error::InvalidParameter(format!("bad coefficient {other}"))),
    }
}

pub fn qpoly_to_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_to_json).collect())
}

/// Parses an ascending coefficient array, rejecting trailing zeros.
pub fn qpoly_from_json(v: &Value) -> Result<QPoly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::InvalidParameter("expected a coefficient array".into()))?;
    let coeffs = arr.iter().map(bigint_from_json).collect::<Result<Vec<_>>>()?;
    if coeffs.last().is_some_and(|c| *c == BigInt::from(0)) {
        return Err(Error::InvalidParameter("trailing zero coefficient".into()));
    }
    Ok(QPoly::from_coeffs(coeffs))
}

/// `{"variables": ["t","q"], "coefficients": [[...], ...]}`, `t`-outer.
pub fn tqpoly_to_json(p: &TQPoly) -> Value {
    json!({
        "variables": VARIABLES,
        "coefficients": p.coeffs().iter().map(qpoly_to_json).collect::<Vec<_>>(),
    })
}

pub fn tqpoly_from_json(v: &Value) -> Result<TQPoly> {
    if v.get("variables") != Some(&json!(VARIABLES)) {
        return Err(Error::InvalidParameter(
            "variables must be [\"t\", \"q\"] (t outer)".into(),
        ));
    }
    let rows = v
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidParameter("missing coefficients".into()))?;
    let rows = rows.iter().map(qpoly_from_json).collect::<Result<Vec<_>>>()?;
    if rows.last().is_some_and(QPoly::is_zero) {
        return Err(Error::InvalidParameter("trailing zero t-coefficient".into()));
    }
    Ok(TQPoly::from_qpolys(rows))
}

fn cyclo_to_json(p: &CycloTPoly) -> Value {
    json!({
        "variables": ["t", "w"],
        "root_order": p.order(),
        "coefficients": p.coeffs().iter().map(|c| qpoly_to_json(c.residue())).collect::<Vec<_>>(),
    })
}

fn side_to_json(s: &Side) -> Value {
    match s {
        Side::Int(v) => bigint_to_json(v),
        Side::Poly(p) => qpoly_to_json(p),
        Side::TPoly(p) => tqpoly_to_json(p),
        Side::Root(p) => cyclo_to_json(p),
        Side::Text(t) => json!(t),
    }
}

pub fn report_to_json(rep: &VerificationReport) -> Value {
    let witnesses: Vec<Value> = rep
        .witnesses
        .iter()
        .map(|w| {
            let params: Map<String, Value> =
                w.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            json!({
                "params": params,
                "note": w.note,
                "lhs": side_to_json(&w.lhs),
                "rhs": side_to_json(&w.rhs),
                "lhs_text": w.lhs.to_string(),
                "rhs_text": w.rhs.to_string(),
            })
        })
        .collect();
    json!({
        "identity": rep.identity.name(),
        "params": rep.params,
        "cases": rep.cases,
        "status": rep.status.name(),
        "witnesses": witnesses,
    })
}

fn word_json(w: &[Letter]) -> Value {
    json!(w)
}

fn parse_perm(s: &str) -> Result<Perm> {
    Perm::new(parse_word(s)?)
}

fn parse_two_pix(s: &str) -> Result<TwoPix> {
    let parts = split_components(s);
    if parts.len() < 2 {
        return Err(Error::InvalidWord(format!(
            "{s:?}: expected p1|tau_1|...|tau_k|p2"
        )));
    }
    let words = parts.iter().map(|p| parse_word(p)).collect::<Result<Vec<_>>>()?;
    let (p1, rest) = words.split_first().unwrap();
    let (p2, hooks) = rest.split_last().unwrap();
    TwoPix::from_components(p1, hooks, p2)
}

fn parse_two_pix_colored(s: &str, r: usize) -> Result<TwoPixColored> {
    let parts = split_components(s);
    if parts.len() < 2 {
        return Err(Error::InvalidWord(format!(
            "{s:?}: expected p1|tau_1|...|tau_k|p2"
        )));
    }
    let words = parts
        .iter()
        .map(|p| parse_colored_word(p))
        .collect::<Result<Vec<_>>>()?;
    let (p1, rest) = words.split_first().unwrap();
    let (p2, hooks) = rest.split_last().unwrap();
    TwoPixColored::from_words(r, p1, hooks, p2)
}

fn eulerian_cmd(n: usize, r: usize) -> Result<Output> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let row = eulerian_tq(n, r)?;
    let mut rows = Vec::new();
    for (k, c) in row.coeffs().iter().enumerate() {
        for (j, a) in c.coeffs().iter().enumerate() {
            rows.push(vec![k.to_string(), j.to_string(), a.to_string()]);
        }
    }
    let mut payload = tqpoly_to_json(&row);
    payload["n"] = json!(n);
    payload["r"] = json!(r);
    Ok(Output {
        kind: "table",
        payload,
        csv: Some((vec!["t_power", "q_power", "coefficient"], rows)),
        failed: false,
    })
}

fn hookfact_cmd(word: &str) -> Result<Output> {
    let w = parse_perm(word)?;
    let f = w.hook_factorization();
    Ok(Output::object(json!({
        "word": word_json(w.letters()),
        "prefix": word_json(&f.prefix),
        "hooks": f.hooks,
        "lec": f.lec(),
        "factorization": f.to_string(),
    })))
}

fn stats_cmd(word: &str) -> Result<Output> {
    let w = parse_perm(word)?;
    let exc = match w.exc() {
        Ok(e) => json!(e),
        Err(Error::ExcUndefined) => Value::Null,
        Err(e) => return Err(e),
    };
    Ok(Output::object(json!({
        "word": word_json(w.letters()),
        "exc": exc,
        "des": w.des(),
        "maj": w.maj(),
        "inv": w.inv(),
        "lec": w.lec(),
    })))
}

fn map_cmd(which: MapKind, object: &str, r: usize) -> Result<Output> {
    let payload = match which {
        MapKind::Lemma2 => {
            let w = parse_perm(object)?;
            let s = lemma2_involution(&w)?;
            json!({
                "map": "lemma2",
                "input": {"word": word_json(w.letters()), "lec": w.lec(), "inv": w.inv()},
                "output": {"word": word_json(s.letters()), "lec": s.lec(), "inv": s.inv()},
            })
        }
        MapKind::Lemma4 => {
            let v = parse_two_pix(object)?;
            let u = lemma4_map(&v)?;
            let describe = |x: &TwoPix| {
                json!({
                    "object": x.to_string(),
                    "components": x.components(),
                    "inv": x.inv(),
                    "lec": x.lec(),
                    "inv_minus_lec": x.inv_minus_lec(),
                })
            };
            json!({"map": "lemma4", "input": describe(&v), "output": describe(&u)})
        }
        MapKind::Th5 => {
            let v = parse_two_pix_colored(object, r)?;
            let u = th5_map(&v)?;
            let describe = |x: &TwoPixColored| {
                json!({
                    "object": x.to_string(),
                    "inv_r": x.inv_r(),
                    "lec_r": x.lec_r(),
                    "inv_minus_lec": x.inv_minus_lec(),
                })
            };
            json!({"map": "th5", "r": r, "input": describe(&v), "output": describe(&u)})
        }
    };
    Ok(Output::object(payload))
}

fn enumerate_cmd(what: EnumKind, n: usize, r: usize, s: Option<usize>) -> Result<Output> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    if n > 9 || r * n > 9 {
        return Err(Error::InvalidParameter(
            "enumeration is limited to rn <= 9".into(),
        ));
    }
    // (object, lec, inv) triples in enumeration order
    let all: Vec<(String, usize, usize)> = match (what, r) {
        (EnumKind::Twopix, 1) => enumerate_two_pix(n)
            .map(|v| (v.to_string(), v.lec(), v.inv()))
            .collect(),
        (EnumKind::Twopix, _) => enumerate_two_pix_colored(n, r)
            .iter()
            .map(|v| (v.to_string(), v.lec_r(), v.inv_r()))
            .collect(),
        (EnumKind::Colored, _) => enumerate_colored(n, r)
            .iter()
            .map(|w| (w.to_string(), w.lec_r(), w.inv_r()))
            .collect(),
    };
    let rows: Vec<(String, usize, usize)> = all
        .into_iter()
        .filter(|(_, lec, _)| s.is_none_or(|s| *lec == s))
        .collect();
    let mut gf: Vec<i64> = Vec::new();
    for (_, lec, inv) in &rows {
        let e = inv - lec;
        if gf.len() <= e {
            gf.resize(e + 1, 0);
        }
        gf[e] += 1;
    }
    let payload = json!({
        "what": match what { EnumKind::Twopix => "twopix", EnumKind::Colored => "colored" },
        "n": n,
        "r": r,
        "s": s,
        "count": rows.len(),
        "inv_minus_lec_distribution": gf,
        "rows": rows
            .iter()
            .map(|(o, lec, inv)| json!({"object": o, "lec": lec, "inv": inv, "inv_minus_lec": inv - lec}))
            .collect::<Vec<_>>(),
    });
    let csv_rows = rows
        .iter()
        .map(|(o, lec, inv)| vec![o.clone(), lec.to_string(), inv.to_string(), (inv - lec).to_string()])
        .collect();
    Ok(Output {
        kind: "table",
        payload,
        csv: Some((vec!["object", "lec", "inv", "inv_minus_lec"], csv_rows)),
        failed: false,
    })
}

fn is_colored(id: IdentityId) -> bool {
    matches!(
        id,
        IdentityId::EqMa
            | IdentityId::RowSymmetry
            | IdentityId::WreathCardinality
            | IdentityId::ColoredDistribution
            | IdentityId::ColoredLemma3
            | IdentityId::Prop5
    )
}

fn verify_cmd(family: &str, max_n: usize, max_rn: usize) -> Result<Output> {
    let mut verifier = Verifier::new();
    let reports = if family == "all" {
        verifier.verify_all(&Budget::uniform(max_n, max_rn))
    } else {
        let id = IdentityId::from_name(family).ok_or_else(|| {
            let names: Vec<&str> = IdentityId::ALL.iter().map(|i| i.name()).collect();
            Error::InvalidParameter(format!(
                "unknown family {family:?}; expected all or one of {}",
                names.join(", ")
            ))
        })?;
        let bound = if is_colored(id) { max_rn } else { max_n };
        vec![verifier.sweep(id, bound)]
    };
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    let payload = json!({
        "status": if failed { "fail" } else { "pass" },
        "max_n": max_n,
        "max_rn": max_rn,
        "reports": reports.iter().map(report_to_json).collect::<Vec<_>>(),
    });
    Ok(Output {
        kind: "report",
        payload,
        csv: None,
        failed,
    })
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Eulerian { n, r } => eulerian_cmd(*n, *r),
        Command::Hookfact { word } => hookfact_cmd(word),
        Command::Stats { word } => stats_cmd(word),
        Command::Map { which, object, r } => map_cmd(*which, object, *r),
        Command::Enumerate { what, n, r, s } => enumerate_cmd(*what, *n, *r, *s),
        Command::Verify {
            family,
            max_n,
            max_rn,
        } => verify_cmd(family, *max_n, *max_rn),
    }
}

fn write_csv(out: &mut dyn Write, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let target: &mut dyn Write = if informational { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if informational { 0 } else { 2 };
        }
    };
    let output = match dispatch(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let written = match cli.format {
        Format::Json => {
            let doc = json!({
                "schema_version": SCHEMA_VERSION,
                "kind": output.kind,
                "payload": output.payload,
            });
            serde_json::to_string_pretty(&doc)
                .map_err(std::io::Error::other)
                .and_then(|s| writeln!(out, "{s}"))
        }
        Format::Csv => match &output.csv {
            Some((header, rows)) => write_csv(out, header, rows),
            None => {
                let _ = writeln!(err, "error: csv output is only available for tables");
                return 2;
            }
        },
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    if output.failed {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::render_word;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("qeuler").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn tqpoly_json_round_trip() {
        let p = eulerian_tq(4, 2).unwrap();
        assert_eq!(tqpoly_from_json(&tqpoly_to_json(&p)).unwrap(), p);
        let swapped = json!({"variables": ["q", "t"], "coefficients": [[1]]});
        assert!(tqpoly_from_json(&swapped).is_err());
        let trailing = json!({"variables": ["t", "q"], "coefficients": [[1, 0]]});
        assert!(tqpoly_from_json(&trailing).is_err());
    }

    #[test]
    fn large_coefficients_become_strings() {
        let big = BigInt::from(i64::MAX) * 4;
        let v = bigint_to_json(&big);
        assert!(v.is_string());
        assert_eq!(bigint_from_json(&v).unwrap(), big);
    }

    #[test]
    fn render_word_round_trips_through_parse() {
        for w in [vec![12], vec![1, 3, 4, 14], vec![6, 3, 8, 9]] {
            let s = render_word(&w, false);
            assert_eq!(parse_word(&s).unwrap(), w);
        }
    }

    #[test]
    fn csv_only_for_tables() {
        let (code, _, err) = run_args(&["--format", "csv", "stats", "213"]);
        assert_eq!(code, 2);
        assert!(err.contains("csv"));
        let (code, out, _) = run_args(&["--format", "csv", "eulerian", "--n", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("t_power,q_power,coefficient"));
        assert!(out.contains("1,2,1"));
    }
}
