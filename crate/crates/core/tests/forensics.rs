use oddzeta::forensics::{forensics, ForensicsReport, Verdict, FORMULA_IDS, TYPO_THRESHOLD};
use oddzeta::Real;

fn tol() -> Real {
    Real::parse("1e-30", 50).unwrap()
}

fn one(id: &str) -> ForensicsReport {
    forensics(&[id], &tol()).unwrap().remove(0)
}

#[test]
fn verdict_invariants_hold_for_every_formula() {
    let t = tol();
    let reports = forensics(&["all"], &t).unwrap();
    assert_eq!(reports.len(), FORMULA_IDS.len());
    for r in &reports {
        println!(
            "{:<13} {:<14} dev={} corrected={}",
            r.formula_id,
            r.verdict.id(),
            r.deviation.to_sci(4),
            r.corrected_residual
                .as_ref()
                .map_or("-".to_string(), |c| c.to_sci(3))
        );
        match r.verdict {
            Verdict::Exact => assert!(r.deviation <= t, "{}", r.formula_id),
            Verdict::SuspectedTypo => {
                assert!(r.deviation.gt_f64(TYPO_THRESHOLD), "{}", r.formula_id);
                assert!(r.oracle_value.is_finite() && r.formula_value.is_finite());
            }
            Verdict::Approximation => {}
        }
    }
}

#[test]
fn prime_power_decomposition_is_an_approximation() {
    let r = one("eq16");
    assert_eq!(r.verdict, Verdict::Approximation);
    // the gap is the odd-composite sum at s = 2, about 0.0153
    assert!((r.deviation.to_f64() - 0.015340).abs() < 1e-5);
}

#[test]
fn digamma_identity_is_a_typo_with_corrected_residual() {
    let r = one("eq42");
    assert_eq!(r.verdict, Verdict::SuspectedTypo);
    let c = r.corrected_residual.unwrap();
    assert!(c <= tol(), "{c}");
}

#[test]
fn even_closed_form_is_exact() {
    assert_eq!(one("eq2").verdict, Verdict::Exact);
}

#[test]
fn flat_series_is_a_typo() {
    let r = one("eq52");
    assert_eq!(r.verdict, Verdict::SuspectedTypo);
    assert!(r.deviation.gt_f64(0.1));
    assert!(r.corrected_residual.unwrap().lt_f64(1e-25));
}
