use serde::Serialize;

use super::eval::{digamma_gap, eta, zeta_line_one};
use crate::error::{Result, ZetaError};
use crate::numerics::{
    accelerate_alternating_to_tol, hurwitz_zeta, integrate_semiaxis, Cplx, Real, DEFAULT_DIGITS,
};
use crate::zeta::zeta_oracle;

/// Relative deviation between the numerically integrated Mellin transform
/// `∫_0^∞ x^{ε−1−ib}/(x+n) dx` and the standard closed form
/// `π n^{ε−ib−1}/sin(π(ε−ib))`.
///
/// The damping `ε > 0` makes the integral absolutely convergent; at `ε = 0`
/// the closed form becomes `π n^{−1−ib}/(−i sinh(πb))`, which is what the
/// `ε → 0` trend of this check supports.
pub fn mellin_check(b: &Real, n: u64, eps: &Real) -> Result<Real> {
    if b.is_zero() {
        return Err(ZetaError::Precondition("b must be non-zero".into()));
    }
    if n == 0 {
        return Err(ZetaError::Precondition("n must be at least 1".into()));
    }
    if !eps.is_positive() || eps.gt_f64(0.1) {
        return Err(ZetaError::Precondition(format!(
            "damping must lie in (0, 0.1] (got {})",
            eps.to_sci(6)
        )));
    }
    let digits = b.digits().max(eps.digits()).max(30);
    let b = b.with_digits(digits);
    let eps = eps.with_digits(digits);
    let n_r = Real::from_u64(n, digits);
    let pi = Real::pi(digits);

    // a = ε − ib; closed form π n^{a−1}/sin(πa)
    let a = Cplx::new(eps.clone(), -&b);
    let closed = &Cplx::real_pow(&n_r, &(&a - &Real::one(digits))).scale(&pi) / &a.scale(&pi).sin();
    let expo = Cplx::new(Real::from_i64(-1, digits), -&b);
    let f = |x: &Real| &Cplx::real_pow(x, &expo) / &Cplx::from_real(x + &n_r);
    let tol = &closed.norm() * &Real::pow10(-(digits as i32) + 10, digits);
    let numeric = integrate_semiaxis(f, &eps, &tol)?;
    Ok(&(&numeric - &closed).norm() / &closed.norm())
}

/// Residual of the alternating-harmonic identity
/// `Σ_{n≥1} (−1)^n/(x+n) = −½ (Ψ(x/2 + 1) − Ψ((x+1)/2))`.
///
/// This is the form that holds numerically: there is no `x^{−1}` factor on
/// the left, and the sign is opposite to the one obtained by dropping it.
pub fn digamma_gap_check(x: &Real, tol: &Real) -> Result<Real> {
    if !x.is_positive() {
        return Err(ZetaError::Domain(format!(
            "identity is checked for x > 0 (got {})",
            x.to_sci(10)
        )));
    }
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = tol.digits().max(x.digits());
    let work = digits + 10;
    let x = x.with_digits(work);
    let acc_tol = &tol.with_digits(work) * 0.01;
    // Σ (−1)^{n−1}/(x+n), so the identity's left side is its negative
    let alt =
        accelerate_alternating_to_tol(|n| Cplx::from_real((&x + n as f64).recip()), &acc_tol)?;
    let gap = digamma_gap(&x)?;
    let residual = (&(&gap * 0.5) - &alt.value.re).abs();
    Ok(residual.with_digits(digits))
}

/// The truncated expansion `2 Σ_{k=2}^{K} Σ_{n≥0} (−1/(2n+x+1))^k` of the
/// digamma gap `Ψ(x/2+1) − Ψ((x+1)/2)`.
///
/// The inner sum is `(−1)^k 2^{−k} ζ(k, (x+1)/2)` and is taken from the
/// Hurwitz zeta function, which truncates the series with an
/// Euler–Maclaurin tail.
pub fn hurwitz_expansion(x: &Real, big_k: u32) -> Result<Real> {
    if x.is_negative() {
        return Err(ZetaError::Precondition(format!(
            "x must be non-negative (got {})",
            x.to_sci(10)
        )));
    }
    if big_k < 2 {
        return Err(ZetaError::Precondition("K must be at least 2".into()));
    }
    let digits = x.digits().max(DEFAULT_DIGITS);
    let work = digits + 10;
    let x = x.with_digits(work);
    let alpha = &(&x + 1.0) * 0.5;
    let tol = Real::pow10(-(work as i32) + 5, work);
    let half = Real::from_f64(0.5, work);
    let mut sum = Real::zero(work);
    for k in 2..=big_k {
        let h = hurwitz_zeta(&Real::from_u64(u64::from(k), work), &alpha, &tol)?;
        let t = &h * &half.powi(k as i32);
        sum = if k % 2 == 0 { &sum + &t } else { &sum - &t };
    }
    Ok((&sum * 2.0).with_digits(digits))
}

/// Deviation between the digamma gap and [`hurwitz_expansion`].
///
/// For `x > 0` the deviation decays like the first omitted `k`-term,
/// roughly `(1/(x+1))^K`. At `x = 0` the expansion sits on the boundary of
/// its disc of convergence: the `n = 0` terms are `±1`, and the deviation
/// does not decay.
pub fn hurwitz_expansion_check(x: &Real, big_k: u32) -> Result<Real> {
    let expansion = hurwitz_expansion(x, big_k)?;
    let digits = expansion.digits();
    let gap = digamma_gap(&x.with_digits(digits + 10))?;
    Ok((&gap - &expansion).abs().with_digits(digits))
}

/// The alternating series at a zero of `1 − 2^{1−s}` on `Re(s) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EtaZero {
    pub k: i64,
    /// `b_k = 2kπ/ln 2`.
    pub b: Real,
    /// `|η(1 + i b_k)|`.
    pub eta_abs: Real,
    /// `|ζ(1 + i b_k)|` from the Euler–Maclaurin oracle.
    pub zeta_abs: Real,
}

/// `|η(1 + i b_k)|` at `b_k = 2kπ/ln 2`, together with `|ζ|` there.
///
/// `η(s) = (1 − 2^{1−s}) ζ(s)` and the prefactor vanishes at these points,
/// so `η` vanishes while `ζ` itself stays finite and non-zero.
pub fn eta_zero_scan(k: i64, tol: &Real) -> Result<EtaZero> {
    if k == 0 {
        return Err(ZetaError::Precondition(
            "k = 0 is the pole at s = 1, not an eta zero".into(),
        ));
    }
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = tol.digits();
    let work = digits + 10;
    let b = &(&Real::pi(work) * (2.0 * k as f64)) / &Real::ln2(work);
    let s = Cplx::new(Real::one(work), b.clone());
    let eta_abs = eta(&s, &(&tol.with_digits(work) * 0.01))?.value.norm();
    let zeta_abs = zeta_oracle(&s, &tol.with_digits(work))?.norm();
    Ok(EtaZero {
        k,
        b: b.with_digits(digits),
        eta_abs: eta_abs.with_digits(digits),
        zeta_abs: zeta_abs.with_digits(digits),
    })
}

/// `|ib·ζ(1+ib) − 1|` for `0 < |b| ≤ 0.1`.
///
/// From `ζ(1+ε) = 1/ε + γ + O(ε)` the probe is about `γ|b|`, so it decays
/// linearly as `b → 0`.
pub fn residue_probe(b: &Real) -> Result<Real> {
    if b.is_zero() || b.abs().gt_f64(0.1) {
        return Err(ZetaError::Precondition(format!(
            "residue probe needs 0 < |b| <= 0.1 (got {})",
            b.to_sci(6)
        )));
    }
    let digits = b.digits().max(DEFAULT_DIGITS);
    let tol = Real::pow10(-(digits as i32) + 20, digits);
    let z = zeta_line_one(&b.with_digits(digits), &tol)?.value;
    let ib_z = z.scale(&b.with_digits(digits)).mul_i();
    Ok((&ib_z - &Real::one(digits)).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preconditions() {
        let b = Real::from_f64(0.5, 30);
        assert!(matches!(
            mellin_check(&b, 3, &Real::zero(30)),
            Err(ZetaError::Precondition(_))
        ));
        assert!(matches!(
            mellin_check(&b, 3, &Real::from_f64(0.2, 30)),
            Err(ZetaError::Precondition(_))
        ));
        assert!(matches!(
            hurwitz_expansion_check(&Real::one(30), 1),
            Err(ZetaError::Precondition(_))
        ));
        assert!(matches!(
            eta_zero_scan(0, &Real::parse("1e-20", 30).unwrap()),
            Err(ZetaError::Precondition(_))
        ));
        assert!(matches!(
            residue_probe(&Real::from_f64(0.5, 30)),
            Err(ZetaError::Precondition(_))
        ));
        assert!(matches!(
            digamma_gap_check(&Real::zero(30), &Real::parse("1e-20", 30).unwrap()),
            Err(ZetaError::Domain(_))
        ));
    }

    #[test]
    fn expansion_improves_from_two_to_three_terms() {
        let x = Real::one(30);
        let d2 = hurwitz_expansion_check(&x, 2).unwrap();
        let d3 = hurwitz_expansion_check(&x, 3).unwrap();
        assert!(d3 < d2);
    }
}
