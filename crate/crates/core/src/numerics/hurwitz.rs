use super::cplx::Cplx;
use super::euler_maclaurin::em_tail;
use super::real::Real;
use crate::error::{Result, ZetaError};

/// Largest direct block tried before giving up.
const MAX_BLOCK: usize = 1 << 20;

/// Hurwitz zeta `ζ(s, α) = Σ_{n≥0} (n+α)^{-s}` for real `s > 1`, `α > 0`.
///
/// The first `N` terms are summed directly. The rest comes from the
/// Euler–Maclaurin tail at `N + α`. `N` doubles until the tail's last
/// correction is below `tol`.
pub fn hurwitz_zeta(s: &Real, alpha: &Real, tol: &Real) -> Result<Real> {
    if !s.gt_f64(1.0) {
        return Err(ZetaError::Domain(format!(
            "Hurwitz zeta series diverges for s <= 1 (got {})",
            s.to_sci(10)
        )));
    }
    if !alpha.is_positive() {
        return Err(ZetaError::Domain("Hurwitz zeta requires alpha > 0".into()));
    }
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = s.digits().max(alpha.digits()).max(tol.digits());
    let work = digits + 5;
    let s = s.with_digits(work);
    let alpha = alpha.with_digits(work);
    let inner_tol = tol.with_digits(work) * 0.1;
    let sc = Cplx::from_real(s.clone());
    let neg_s = -&s;
    let mut block = (digits as usize).max(10);
    let mut head = Real::zero(work);
    let mut done = 0usize;
    loop {
        for n in done..block {
            let base = &alpha + (n as f64);
            head = &head + &base.pow(&neg_s);
        }
        done = block;
        let a = &alpha + (block as f64);
        let tail = em_tail(&sc, &a, &inner_tol);
        if tail.ok {
            return Ok((&head + &tail.value.re).with_digits(digits));
        }
        if block >= MAX_BLOCK {
            return Err(ZetaError::accuracy(
                "Hurwitz zeta tail",
                tail.last_term.to_f64(),
            ));
        }
        block *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(s: f64, alpha: f64, n: usize) -> f64 {
        // partial sum with the integral tail and its first correction
        let head: f64 = (0..n).rev().map(|k| (k as f64 + alpha).powf(-s)).sum();
        let a = n as f64 + alpha;
        head + a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s)
    }

    #[test]
    fn reduces_to_zeta_two() {
        let tol = Real::parse("1e-40", 50).unwrap();
        let v = hurwitz_zeta(&Real::from_i64(2, 50), &Real::one(50), &tol).unwrap();
        let expect = &Real::pi(50).square() / 6.0;
        assert!((&v - &expect).abs() <= tol);
    }

    #[test]
    fn half_shift_is_scaled_zeta() {
        let tol = Real::parse("1e-40", 50).unwrap();
        let v = hurwitz_zeta(&Real::from_i64(2, 50), &Real::from_f64(0.5, 50), &tol).unwrap();
        let expect = &Real::pi(50).square() / 2.0;
        assert!((&v - &expect).abs() <= tol);
        assert!((v.to_f64() - brute(2.0, 0.5, 200_000)).abs() < 1e-12);
    }

    #[test]
    fn third_shift_matches_brute_force() {
        let tol = Real::parse("1e-30", 40).unwrap();
        let third = Real::one(40) / 3.0;
        let v = hurwitz_zeta(&Real::from_i64(4, 40), &third, &tol).unwrap();
        let b = brute(4.0, 1.0 / 3.0, 10_000);
        assert!((v.to_f64() - b).abs() < 1e-13, "{v} vs {b}");
    }

    #[test]
    fn divergent_exponent_is_domain_error() {
        let tol = Real::parse("1e-10", 20).unwrap();
        let r = hurwitz_zeta(&Real::one(20), &Real::one(20), &tol);
        assert!(matches!(r, Err(ZetaError::Domain(_))));
    }
}
