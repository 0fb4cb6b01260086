use oddzeta::numerics::{Cplx, Rat, Real};
use oddzeta::zeta::{
    bernoulli, euler_product, zeta_dirichlet, zeta_eta_real, zeta_euler_maclaurin,
    zeta_even_closed, zeta_even_recurrence, zeta_negative_int, zeta_oracle, Convention,
};
use oddzeta::ZetaError;
use rug::{Integer, Rational};

fn tol(text: &str, digits: u32) -> Real {
    Real::parse(text, digits).unwrap()
}

fn r(x: i64, digits: u32) -> Real {
    Real::from_i64(x, digits)
}

/// Akiyama–Tanigawa algorithm; yields B_n with B_1 = +1/2.
fn akiyama_tanigawa(n: usize) -> Rational {
    let mut a: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a.push(Rational::from((1, m as u32 + 1)));
        for j in (1..=m).rev() {
            let diff = Rational::from(&a[j - 1] - &a[j]);
            a[j - 1] = diff * Integer::from(j);
        }
    }
    a[0].clone()
}

#[test]
fn bernoulli_matches_akiyama_tanigawa_up_to_60() {
    for n in 0..=60 {
        let oracle = Rat::from(akiyama_tanigawa(n));
        assert_eq!(bernoulli(n, Convention::B1PlusHalf), oracle, "B_{n}");
    }
    assert_eq!(bernoulli(4, Convention::B1MinusHalf), Rat::new(-1, 30));
}

#[test]
fn dirichlet_examples() {
    let t = tol("1e-40", 50);
    let pi = Real::pi(50);
    let z2 = zeta_dirichlet(&r(2, 50), &t).unwrap();
    assert!(z2.converged);
    assert!((z2.real_value() - &(&pi.square() / 6.0)).abs() <= t);
    let z4 = zeta_dirichlet(&r(4, 50), &t).unwrap();
    assert!((z4.real_value() - &(&pi.powi(4) / 90.0)).abs() <= t);
    assert!(matches!(
        zeta_dirichlet(&r(1, 50), &t),
        Err(ZetaError::Domain(_))
    ));
}

#[test]
fn eta_examples() {
    let t = tol("1e-30", 50);
    let z2 = zeta_eta_real(&r(2, 50), &t).unwrap();
    let d2 = zeta_dirichlet(&r(2, 50), &t).unwrap();
    assert!((z2.real_value() - d2.real_value()).abs() <= t);

    let half = Real::from_f64(0.5, 50);
    let zh = zeta_eta_real(&half, &t).unwrap();
    let oracle = zeta_euler_maclaurin(&Cplx::from_real(half.clone()), &t).unwrap();
    assert!((zh.real_value() - &oracle.re).abs() <= &t * 10.0);
    assert!((zh.real_value().to_f64() + 1.4603545088).abs() < 1e-9);

    let z3 = zeta_eta_real(&r(3, 50), &t).unwrap();
    let d3 = zeta_dirichlet(&r(3, 50), &t).unwrap();
    assert!((z3.real_value() - d3.real_value()).abs() <= &t * 10.0);
    assert!((z3.real_value().to_f64() - 1.2020569032).abs() < 1e-10);
}

#[test]
fn euler_product_examples() {
    let t = tol("1e-30", 40);
    let z2 = zeta_dirichlet(&r(2, 40), &t).unwrap();
    let e2 = euler_product(&r(2, 40), 100_000).unwrap();
    assert!((&e2 - z2.real_value()).abs().lt_f64(1e-5));
    assert!(e2 < *z2.real_value());

    let z3 = zeta_dirichlet(&r(3, 40), &t).unwrap();
    let e3 = euler_product(&r(3, 40), 100_000).unwrap();
    assert!((&e3 - z3.real_value()).abs().lt_f64(1e-10));
}

#[test]
fn method_agreement() {
    let t = tol("1e-30", 50);
    for s in [2i64, 3, 4, 6, 11] {
        let sr = r(s, 50);
        let d = zeta_dirichlet(&sr, &t).unwrap().value.re;
        let e = zeta_eta_real(&sr, &t).unwrap().value.re;
        let o = zeta_oracle(&Cplx::from_real(sr.clone()), &t).unwrap().re;
        let p = euler_product(&sr, 1_000_000).unwrap();
        assert!((&d - &e).abs().lt_f64(1e-12), "s={s} dirichlet/eta");
        assert!((&d - &o).abs().lt_f64(1e-12), "s={s} dirichlet/oracle");
        // The product omits every prime above the bound. The relative
        // deficit is about Σ_{p>B} p^{-s} ≈ B^{1-s}/((s-1) ln B): 7e-8 at
        // s = 2, 4e-14 at s = 3.
        let b = 1.0e6f64;
        let deficit = d.to_f64() * b.powf(1.0 - s as f64) / ((s as f64 - 1.0) * b.ln());
        let gap = (&d - &p).to_f64();
        assert!(gap >= 0.0, "s={s}: the truncated product must undershoot");
        if s == 2 {
            assert!(gap <= 1.2 * deficit, "s=2 gap {gap:e} vs {deficit:e}");
            assert!(gap >= 0.8 * deficit, "s=2 gap {gap:e} vs {deficit:e}");
        } else {
            assert!(gap < 1e-12, "s={s} dirichlet/euler gap {gap:e}");
        }
    }
}

#[test]
fn even_closed_forms() {
    let pi = Real::pi(50);
    let z2 = zeta_even_closed(2, 50).unwrap();
    assert!((&z2 - &(&pi.square() / 6.0)).abs().lt_f64(1e-48));
    assert!((z2.to_f64() - 1.6449340668).abs() < 1e-10);
    let z4 = zeta_even_closed(4, 50).unwrap();
    assert!((&z4 - &(&pi.powi(4) / 90.0)).abs().lt_f64(1e-48));
    let t = tol("1e-35", 50);
    let d20 = zeta_dirichlet(&r(20, 50), &t).unwrap();
    let c20 = zeta_even_closed(20, 50).unwrap();
    assert!((&c20 - d20.real_value()).abs().lt_f64(1e-30));
}

#[test]
fn recurrence_matches_closed_form() {
    let digits = 50;
    let bound = 10f64.powi(-(digits as i32 - 8));
    for two_k in (2..=40).step_by(2) {
        let a = zeta_even_recurrence(two_k, digits).unwrap();
        let b = zeta_even_closed(two_k, digits).unwrap();
        assert!((&a - &b).abs().lt_f64(bound), "2k={two_k}");
    }
}

#[test]
fn negative_integer_values() {
    assert_eq!(zeta_negative_int(1), Rat::new(-1, 12));
    assert_eq!(zeta_negative_int(0), Rat::new(-1, 2));
    for m in 1..=10 {
        assert_eq!(zeta_negative_int(2 * m), Rat::zero());
    }
}

#[test]
fn oracle_examples() {
    let t = tol("1e-30", 50);
    let z3 = zeta_oracle(&Cplx::from_f64(3.0, 0.0, 50), &t).unwrap();
    assert!((z3.re.to_f64() - 1.2020569032).abs() < 1e-10);
    let z = zeta_oracle(&Cplx::from_f64(1.0, 1.0, 50), &t).unwrap();
    assert!((z.re.to_f64() - 0.5821580597520036).abs() < 1e-14);
    assert!((z.im.to_f64() + 0.9268485643308071).abs() < 1e-14);
}
