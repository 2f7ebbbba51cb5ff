use qeuler::polyring::{QPoly, TQPoly};
use qeuler::verifier::{verify_all, Budget, IdentityId, Side, Status, Verifier};
use qeuler::Error;

#[test]
fn perturbed_coefficient_is_caught_everywhere_it_matters() {
    let mut v = Verifier::new();
    let mut row = v.table_mut(1).row(3).unwrap().clone();
    // A_{3,1} = 2 + q + q^2 becomes 2 + 2q + q^2
    row += &TQPoly::term(QPoly::q(), 1);
    v.table_mut(1).override_row(3, row).unwrap();

    let reports = v.verify_all(&Budget::uniform(5, 5));
    let failed: Vec<IdentityId> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| r.identity)
        .collect();
    for id in [
        IdentityId::Th1,
        IdentityId::CoeffIdentity,
        IdentityId::Equidistribution,
        IdentityId::Lemma3,
        IdentityId::ColoredDistribution,
    ] {
        assert!(failed.contains(&id), "{id} did not notice the fault");
    }
    for rep in reports.iter().filter(|r| r.status == Status::Fail) {
        assert!(!rep.witnesses.is_empty());
        for w in &rep.witnesses {
            assert_ne!(w.lhs, w.rhs);
            assert!(!w.params.is_empty());
        }
    }

    let eq = reports
        .iter()
        .find(|r| r.identity == IdentityId::Equidistribution)
        .unwrap();
    let w = &eq.witnesses[0];
    assert_eq!(w.params, vec![("n".to_string(), 3)]);
    match (&w.lhs, &w.rhs) {
        (Side::TPoly(l), Side::TPoly(r)) => {
            assert_eq!(l.coeff(1), &QPoly::from_coeffs([2, 2, 1]));
            assert_eq!(r.coeff(1), &QPoly::from_coeffs([2, 1, 1]));
        }
        other => panic!("unexpected sides {other:?}"),
    }
}

#[test]
fn default_budget_passes_in_order() {
    let reports = verify_all(&Budget::default());
    let ids: Vec<IdentityId> = reports.iter().map(|r| r.identity).collect();
    assert_eq!(ids, IdentityId::ALL.to_vec());
    for r in &reports {
        assert!(r.passed(), "{}: {:?}", r.identity, r.witnesses.first());
        assert!(r.witnesses.is_empty());
        assert!(r.cases > 0);
    }
}

#[test]
fn reports_are_deterministic() {
    let b = Budget::uniform(5, 6);
    assert_eq!(verify_all(&b), verify_all(&b));
}

#[test]
fn parameter_errors() {
    let mut v = Verifier::new();
    assert_eq!(v.eq_ma(3, 2, 6).unwrap_err(), Error::IndexExcluded(6));
    assert_eq!(
        v.root_specialization(5, 2).unwrap_err(),
        Error::NotDivisor { n: 5, d: 2 }
    );
    assert!(v.cgk_qm1(0, 1).is_err());
}

#[test]
fn root_witness_at_q_minus_one() {
    let mut v = Verifier::new();
    let (l, r) = v.root_sides(4, 2).unwrap();
    assert_eq!(l, r);
    let ints: Vec<_> = l.coeffs().iter().map(|c| c.as_integer().unwrap()).collect();
    assert_eq!(ints, vec![1.into(), 3.into(), 3.into(), 1.into()]);
}
