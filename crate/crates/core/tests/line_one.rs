use oddzeta::line_one::{
    digamma_gap_check, eta_zero_scan, hurwitz_expansion_check, mellin_check, residue_probe,
    uniform_norm_probe, zeta_line_one, zeta_line_one_flat, zeta_line_one_integral, LineOneMethod,
    NormLemma,
};
use oddzeta::zeta::{zeta_euler_maclaurin, zeta_oracle};
use oddzeta::{Cplx, Real, ZetaError};

const DIGITS: u32 = 50;

fn r(x: f64) -> Real {
    Real::from_f64(x, DIGITS)
}

fn tol(text: &str) -> Real {
    Real::parse(text, DIGITS).unwrap()
}

fn oracle_on_line(b: f64) -> Cplx {
    zeta_oracle(&Cplx::from_f64(1.0, b, DIGITS), &tol("1e-30")).unwrap()
}

#[test]
fn eta_method_matches_oracle() {
    for b in [1.0, 14.134725] {
        let p = zeta_line_one(&r(b), &tol("1e-25")).unwrap();
        assert_eq!(p.method, LineOneMethod::Eta);
        assert!(p.est_error.lt_f64(1e-25));
        let d = (&p.value - &oracle_on_line(b)).norm();
        assert!(d.lt_f64(1e-15), "b = {b}: {d}");
    }
}

#[test]
fn conjugate_symmetry() {
    for b in [1.0, 5.0] {
        let up = zeta_line_one(&r(b), &tol("1e-25")).unwrap().value;
        let down = zeta_line_one(&r(-b), &tol("1e-25")).unwrap().value;
        assert!((&up.conj() - &down).norm().lt_f64(1e-14));
    }
}

#[test]
fn pole_at_zero() {
    assert!(matches!(
        zeta_line_one(&r(0.0), &tol("1e-20")),
        Err(ZetaError::Pole(_))
    ));
}

#[test]
fn flat_series_is_not_zeta_on_the_line() {
    let b = r(1.0);
    let flat = zeta_line_one_flat(&b, 40).unwrap();
    assert_eq!(flat.method, LineOneMethod::Flat);
    // (1 − 2^{1−ib}) ζ(ib)/(1 − 2^{−ib}) with ζ(ib) from Euler–Maclaurin
    let ib = Cplx::from_f64(0.0, 1.0, DIGITS);
    let zeta_ib = zeta_euler_maclaurin(&ib, &tol("1e-30")).unwrap();
    let two = r(2.0);
    let one = Cplx::one(DIGITS);
    let num = &one - &Cplx::real_pow(&two, &(&one - &ib));
    let den = &one - &Cplx::real_pow(&two, &(-&ib));
    let expected = &(&num * &zeta_ib) / &den;
    assert!((&flat.value - &expected).norm().lt_f64(1e-8));
    assert!((&flat.value - &oracle_on_line(1.0)).norm().gt_f64(0.1));
}

#[test]
fn flat_series_degenerate_on_zero_line() {
    let b1 = &(&Real::pi(DIGITS) * 2.0) / &Real::ln2(DIGITS);
    assert!(matches!(
        zeta_line_one_flat(&b1, 40),
        Err(ZetaError::Degenerate(_))
    ));
}

#[test]
fn integral_method_matches_eta_method() {
    let t = tol("1e-12");
    for b in [1.0, 5.0] {
        let i = zeta_line_one_integral(&r(b), &t).unwrap();
        assert_eq!(i.method, LineOneMethod::Integral);
        let e = zeta_line_one(&r(b), &tol("1e-25")).unwrap();
        let d = (&i.value - &e.value).norm();
        assert!(d.lt_f64(1e-8), "b = {b}: {d}");
    }
}

#[test]
fn integral_normalization_is_unity_at_one() {
    // the prefactor was fixed by this comparison and is not refitted
    let i = zeta_line_one_integral(&r(1.0), &tol("1e-14"))
        .unwrap()
        .value;
    let ratio = &oracle_on_line(1.0) / &i;
    assert!((&ratio - &Cplx::one(DIGITS)).norm().lt_f64(1e-12));
}

#[test]
fn integral_small_ordinate_grows_like_pole() {
    let b = 0.01;
    let i = zeta_line_one_integral(&r(b), &tol("1e-10")).unwrap().value;
    // |ζ(1+ib)| ≈ 1/|b| with O(γ) correction
    let m = i.norm().to_f64();
    assert!((m * b - 1.0).abs() < 0.01, "{m}");
    let e = zeta_line_one(&r(b), &tol("1e-20")).unwrap().value;
    assert!((&i - &e).norm().lt_f64(1e-8));
}

#[test]
fn mellin_formula_with_damping() {
    let d = mellin_check(&r(0.5), 3, &r(1e-3)).unwrap();
    assert!(d.lt_f64(1e-10), "{d}");
    let d = mellin_check(&r(0.5), 1, &r(1e-2)).unwrap();
    assert!(d.lt_f64(1e-10), "{d}");
    assert!(matches!(
        mellin_check(&r(0.5), 1, &r(0.0)),
        Err(ZetaError::Precondition(_))
    ));
}

#[test]
fn corrected_digamma_identity() {
    let t = tol("1e-30");
    for x in [0.5, 1.0, 2.0, 10.0] {
        let res = digamma_gap_check(&r(x), &t).unwrap();
        assert!(res.lt_f64(1e-20), "x = {x}: {res}");
    }
    let res = digamma_gap_check(&r(1e-6), &t).unwrap();
    assert!(res.lt_f64(1e-5));
}

#[test]
fn hurwitz_expansion() {
    let d = hurwitz_expansion_check(&r(1.0), 40).unwrap();
    assert!(d.lt_f64(1e-10), "{d}");
    let d2 = hurwitz_expansion_check(&r(1.0), 2).unwrap();
    let d3 = hurwitz_expansion_check(&r(1.0), 3).unwrap();
    assert!(d3 < d2);
    // deviation tracks the first omitted term 2ζ(K+1, 1)/2^{K+1} ≈ 2^{−K}
    let d20 = hurwitz_expansion_check(&r(1.0), 20).unwrap().to_f64();
    assert!(
        d20 > 0.5 * 2f64.powi(-20) && d20 < 2.0 * 2f64.powi(-20),
        "{d20}"
    );
}

#[test]
fn hurwitz_expansion_does_not_converge_at_zero() {
    // the n = 0 terms are (−1)^k: partial sums oscillate about the Abel value
    for k in [39, 40, 80] {
        let d = hurwitz_expansion_check(&r(0.0), k).unwrap();
        assert!(d.gt_f64(0.5), "K = {k}: {d}");
    }
}

#[test]
fn eta_vanishes_on_zero_line() {
    let t = tol("1e-20");
    for k in 1..=2 {
        let z = eta_zero_scan(k, &t).unwrap();
        let expect_b = 2.0 * k as f64 * std::f64::consts::PI / std::f64::consts::LN_2;
        assert!((z.b.to_f64() - expect_b).abs() < 1e-12);
        assert!(z.eta_abs.lt_f64(1e-12), "k = {k}: {}", z.eta_abs);
        assert!(z.zeta_abs.is_finite() && z.zeta_abs.is_positive());
    }
    assert!(matches!(
        eta_zero_scan(0, &t),
        Err(ZetaError::Precondition(_))
    ));
}

#[test]
fn residue_limit() {
    let p2 = residue_probe(&r(1e-2)).unwrap().to_f64();
    let p3 = residue_probe(&r(1e-3)).unwrap().to_f64();
    assert!(p2 < 6e-3, "{p2}");
    assert!(p3 < 6e-4, "{p3}");
    let ratio = p2 / p3;
    assert!((8.0..=12.0).contains(&ratio), "{ratio}");
}

#[test]
fn norm_probe_examples() {
    let p = uniform_norm_probe(NormLemma::ExpansionPower, 10, 2, &r(1.0), 200).unwrap();
    assert!((p.bound.to_f64() - 0.0025).abs() < 1e-15);
    assert!(p.holds());
    let p = uniform_norm_probe(NormLemma::PairedKernel, 5, 2, &r(1.0), 200).unwrap();
    assert!((p.bound.to_f64() - 1.0 / 132.0).abs() < 1e-15);
    assert!(p.holds());
    let p = uniform_norm_probe(NormLemma::MellinKernel, 100, 2, &r(1.0), 200).unwrap();
    assert!((p.bound.to_f64() - 1.0 / 101.0).abs() < 1e-15);
    assert!(p.holds());
}

#[test]
fn norm_probe_cross_product() {
    for lemma in NormLemma::ALL {
        for n in [1, 10, 100] {
            for k in [2, 3, 4] {
                let p = uniform_norm_probe(lemma, n, k, &r(1.0), 400).unwrap();
                assert!(p.holds(), "{lemma:?} n={n} k={k}");
                let q = uniform_norm_probe(lemma, 2 * n, k, &r(1.0), 400).unwrap();
                assert!(q.bound < p.bound);
                if lemma != NormLemma::MellinKernel {
                    // Lemma 2 bounds at least halve when n doubles
                    assert!(q.bound <= &p.bound * 0.525, "{lemma:?} n={n} k={k}");
                }
            }
        }
    }
}
