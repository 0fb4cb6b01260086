use serde::Serialize;

use crate::error::{Result, ZetaError};
use crate::exec::Exec;
use crate::numerics::{
    accelerate_alternating, accelerate_alternating_to_tol, digamma, integrate_interval, Cplx, Real,
    SeriesResult, MAX_ACCEL_ORDER,
};

/// Below this `|b|` the ordinate is treated as the pole at `s = 1`.
pub const POLE_THRESHOLD: f64 = 1e-6;
/// Below this `|1 − 2^{−ib}|` evaluators refuse rather than amplify rounding
/// noise; this happens on the line `b = 2kπ/ln 2`.
pub const DEGENERACY_THRESHOLD: f64 = 1e-12;
/// Successive acceleration orders of the flat series must agree this well.
pub const FLAT_AGREEMENT: f64 = 1e-8;
/// Ordinate range accepted by [`zeta_line_one_integral`].
pub const INTEGRAL_B_RANGE: (f64, f64) = (1e-3, 50.0);

/// How a [`LineOnePoint`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineOneMethod {
    /// Accelerated alternating series `η(1+ib)/(1 − 2^{−ib})`.
    Eta,
    /// Abel-regularized `Σ (−1)^{n−1} n^{−ib}/(1 − 2^{−ib})`, the series left
    /// after the factor `n^{−1}` is dropped. It is not `ζ(1+ib)`.
    Flat,
    /// Mellin integral of the digamma gap.
    Integral,
}

impl LineOneMethod {
    pub fn id(self) -> &'static str {
        match self {
            LineOneMethod::Eta => "eta",
            LineOneMethod::Flat => "flat",
            LineOneMethod::Integral => "integral",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        [
            LineOneMethod::Eta,
            LineOneMethod::Flat,
            LineOneMethod::Integral,
        ]
        .into_iter()
        .find(|m| m.id() == id)
    }
}

/// A value on the line `Re(s) = 1`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineOnePoint {
    pub b: Real,
    pub value: Cplx,
    pub method: LineOneMethod,
    /// Acceleration order, or quadrature panels for the integral method.
    pub terms_used: usize,
    pub est_error: Real,
}

pub(super) fn check_pole(b: &Real) -> Result<()> {
    if b.abs().lt_f64(POLE_THRESHOLD) {
        Err(ZetaError::Pole("simple pole at s = 1".into()))
    } else {
        Ok(())
    }
}

/// `1 − 2^{−ib} = 2 sin²(θ/2) + i sin θ` with `θ = b ln 2`, free of
/// cancellation near the zeros.
pub(super) fn one_minus_two_pow_neg_ib(b: &Real) -> Cplx {
    let theta = b * &Real::ln2(b.digits());
    let half = (&theta * 0.5).sin();
    Cplx::new(&half.square() * 2.0, theta.sin())
}

fn checked_prefactor(b: &Real) -> Result<Cplx> {
    let den = one_minus_two_pow_neg_ib(b);
    if den.norm().lt_f64(DEGENERACY_THRESHOLD) {
        return Err(ZetaError::Degenerate(format!(
            "|1 - 2^(-ib)| < {DEGENERACY_THRESHOLD:e} at b = {} (b is a multiple of 2π/ln 2)",
            b.to_sci(12)
        )));
    }
    Ok(den)
}

/// `η(s) = Σ (−1)^{n−1} n^{−s}`, accelerated until the estimate meets `tol`
/// relative to `max(1, |η|)`.
pub(super) fn eta(s: &Cplx, tol: &Real) -> Result<SeriesResult> {
    accelerate_alternating_to_tol(|n| Cplx::n_pow_neg(n as u64, s), tol)
}

/// `ζ(1+ib)` from the alternating series, `η(1+ib)/(1 − 2^{−ib})`.
///
/// The sign convention `(−1)^{n−1}` is the one for which the real-axis
/// analogue `η(s)/(1 − 2^{1−s})` reproduces `ζ(s)` for `s > 1`.
pub fn zeta_line_one(b: &Real, tol: &Real) -> Result<LineOnePoint> {
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    check_pole(b)?;
    let digits = tol.digits().max(b.digits());
    let work = digits + 10;
    let b_w = b.with_digits(work);
    let den = checked_prefactor(&b_w)?;
    let den_abs = den.norm();
    let s = Cplx::new(Real::one(work), b_w.clone());
    // the acceleration criterion is relative to max(1, |η|); tighten once if
    // |η| turns out large enough to matter
    let mut eta_tol = &(&tol.with_digits(work) * &den_abs) * 0.25;
    let mut r = eta(&s, &eta_tol)?;
    let scale = r.value.norm().max_f64(1.0);
    if scale.gt_f64(1.0) {
        eta_tol = &eta_tol / &scale;
        r = eta(&s, &eta_tol)?;
    }
    let value = &r.value / &den;
    let est_error = &r.trunc_estimate / &den_abs;
    if est_error > *tol {
        return Err(ZetaError::accuracy("zeta on Re(s) = 1", est_error.to_f64()));
    }
    Ok(LineOnePoint {
        b: b.clone(),
        value: value.with_digits(digits),
        method: LineOneMethod::Eta,
        terms_used: r.terms_used,
        est_error: est_error.with_digits(digits),
    })
}

/// Abel-regularized value of `−1/(1 − 2^{−ib}) Σ_{n≥1} (−1)^n n^{−ib}`.
///
/// The terms have unit modulus, so the series has no classical sum; the
/// alternating-series acceleration assigns it its Abel value
/// `η(ib)/(1 − 2^{−ib}) = (1 − 2^{1−ib}) ζ(ib)/(1 − 2^{−ib})`. The order
/// starts at `order` and grows by half until two successive orders agree
/// to [`FLAT_AGREEMENT`].
pub fn zeta_line_one_flat(b: &Real, order: usize) -> Result<LineOnePoint> {
    check_pole(b)?;
    let digits = b.digits();
    let work = digits + 10;
    let b_w = b.with_digits(work);
    let den = checked_prefactor(&b_w)?;
    let s = Cplx::new(Real::zero(work), b_w);
    let tol = Real::pow10(-(work as i32), work);
    let coeff = |n: usize| Cplx::n_pow_neg(n as u64, &s);
    let mut order = order.max(4);
    let mut previous = accelerate_alternating(coeff, order, &tol)?.value;
    loop {
        let next = order + order / 2;
        if next > MAX_ACCEL_ORDER {
            return Err(ZetaError::accuracy(
                "Abel-regularized flat series",
                f64::INFINITY,
            ));
        }
        let current = accelerate_alternating(coeff, next, &tol)?.value;
        let diff = (&current - &previous).norm();
        order = next;
        if diff.lt_f64(FLAT_AGREEMENT) {
            let value = &current / &den;
            return Ok(LineOnePoint {
                b: b.clone(),
                value: value.with_digits(digits),
                method: LineOneMethod::Flat,
                terms_used: order,
                est_error: (&diff / &den.norm()).with_digits(digits),
            });
        }
        previous = current;
    }
}

/// The digamma gap `D(x) = Ψ(x/2 + 1) − Ψ((x+1)/2)`.
///
/// `D(x) = 2 Σ_{n≥1} (−1)^{n−1}/(x+n)`, so `D(0) = 2 ln 2` and `D(x) ~ 1/x`.
pub fn digamma_gap(x: &Real) -> Result<Real> {
    let half = x * 0.5;
    Ok(&digamma(&(&half + 1.0))? - &digamma(&(&half + 0.5))?)
}

/// `ζ(1+ib)` from the Mellin integral of the digamma gap.
///
/// Termwise, `∫_0^∞ x^{−1−ib}/(x+n) dx = π n^{−1−ib}/sin(−iπb)`, the
/// Abel-regularized value at the edge of absolute convergence. Summed with
/// alternating signs this gives
///
/// `ζ(1+ib) = −i sinh(πb) / (2π (1 − 2^{−ib})) · I`,
/// `I = ∫_{−∞}^{∞} D(e^u) e^{−ibu} du`.
///
/// The integral is split at `u = 0`. On the left, `D(0)` is subtracted and its
/// regularized contribution `D(0)/(−ib)` is added back analytically; both
/// halves then decay like `e^{−|u|}`. The prefactor was fixed once by
/// matching the eta method at `b = 1` (the ratio is exactly 1) and is used
/// unchanged for every `b`. It replaces the `sinh(ibπ)/(2π)` factor obtained
/// with the Mellin formula's `sin`/`sinh` swapped.
///
/// `sinh(πb)` amplifies absolute errors in `I`, so about `π|b|/ln 10` extra
/// digits are carried.
pub fn zeta_line_one_integral(b: &Real, tol: &Real) -> Result<LineOnePoint> {
    zeta_line_one_integral_with(b, tol, Exec::default())
}

pub fn zeta_line_one_integral_with(b: &Real, tol: &Real, exec: Exec) -> Result<LineOnePoint> {
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let b_abs = b.abs().to_f64();
    let (lo, hi) = INTEGRAL_B_RANGE;
    if !(lo..=hi).contains(&b_abs) {
        return Err(ZetaError::Precondition(format!(
            "integral method needs |b| in [{lo:e}, {hi}] (got {})",
            b.to_sci(10)
        )));
    }
    let digits = tol.digits().max(b.digits());
    let extra = (std::f64::consts::PI * b_abs / std::f64::consts::LN_10).ceil() as u32;
    let work = digits + extra + 10;
    let b_w = b.with_digits(work);
    let den = checked_prefactor(&b_w)?;
    let pi = Real::pi(work);
    let sinh_pb = (&pi * &b_w).sinh();
    // |ζ| = |sinh(πb)|·|I| / (2π|den|); three pieces share the budget
    let tol_i =
        &(&(&tol.with_digits(work) * &(&(&pi * 2.0) * &den.norm())) / &sinh_pb.abs()) * 0.25;

    let d0 = &Real::ln2(work) * 2.0;
    // |D(x) − D(0)| ≤ 4x and |D(x)| ≤ 4/x bound the two truncated tails by 4e^{−U}
    let cut = (&Real::from_f64(16.0, work) / &tol_i).ln();
    let neg_cut = -&cut;
    let zero = Real::zero(work);
    let phase = |u: &Real| {
        let (s, c) = (&b_w * u).sin_cos();
        Cplx::new(c, -s)
    };
    let left = |u: &Real| match digamma_gap(&u.exp()) {
        Ok(d) => phase(u).scale(&(&d - &d0)),
        Err(_) => Cplx::new(Real::infinity(work), Real::zero(work)),
    };
    let right = |u: &Real| match digamma_gap(&u.exp()) {
        Ok(d) => phase(u).scale(&d),
        Err(_) => Cplx::new(Real::infinity(work), Real::zero(work)),
    };
    let panels = ((cut.to_f64() * (1.0 + b_abs)) / 4.0).ceil().max(4.0) as usize;
    let ql = integrate_interval(&left, &neg_cut, &zero, &tol_i, panels, exec)?;
    let qr = integrate_interval(&right, &zero, &cut, &tol_i, panels, exec)?;
    if !ql.value.is_finite() || !qr.value.is_finite() {
        return Err(ZetaError::accuracy("digamma-gap integral", f64::INFINITY));
    }
    // D(0)/(−ib) = i·D(0)/b
    let boundary = Cplx::new(Real::zero(work), &d0 / &b_w);
    let integral = &(&ql.value + &qr.value) + &boundary;

    let factor = &Cplx::new(Real::zero(work), -&sinh_pb) / &den.scale(&(&pi * 2.0));
    let value = &factor * &integral;
    let err_i = &(&ql.err + &qr.err) + &(&tol_i * 2.0);
    let est_error = &err_i * &factor.norm();
    Ok(LineOnePoint {
        b: b.clone(),
        value: value.with_digits(digits),
        method: LineOneMethod::Integral,
        terms_used: ql.panels + qr.panels,
        est_error: est_error.with_digits(digits),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol(text: &str) -> Real {
        Real::parse(text, 30).unwrap()
    }

    #[test]
    fn prefactor_matches_direct_power() {
        let b = Real::from_f64(2.5, 30);
        let direct = &Cplx::one(30)
            - &Cplx::real_pow(&Real::from_i64(2, 30), &Cplx::new(Real::zero(30), -&b));
        assert!((&direct - &one_minus_two_pow_neg_ib(&b))
            .norm()
            .lt_f64(1e-28));
    }

    #[test]
    fn pole_and_degeneracy_errors() {
        let t = tol("1e-20");
        assert!(matches!(
            zeta_line_one(&Real::zero(30), &t),
            Err(ZetaError::Pole(_))
        ));
        let b1 = &(&Real::pi(30) * 2.0) / &Real::ln2(30);
        assert!(matches!(
            zeta_line_one(&b1, &t),
            Err(ZetaError::Degenerate(_))
        ));
        assert!(matches!(
            zeta_line_one_flat(&b1, 40),
            Err(ZetaError::Degenerate(_))
        ));
    }

    #[test]
    fn digamma_gap_endpoints() {
        let d0 = digamma_gap(&Real::zero(30)).unwrap();
        assert!((&d0 - &(&Real::ln2(30) * 2.0)).abs().lt_f64(1e-28));
        // D(1) = Ψ(3/2) − Ψ(1) = 2 − 2 ln 2
        let d1 = digamma_gap(&Real::one(30)).unwrap();
        assert!((&d1 - &(2.0 - &(&Real::ln2(30) * 2.0))).abs().lt_f64(1e-28));
    }

    #[test]
    fn integral_range_enforced() {
        let t = tol("1e-10");
        for b in [1e-4, 60.0] {
            assert!(matches!(
                zeta_line_one_integral(&Real::from_f64(b, 30), &t),
                Err(ZetaError::Precondition(_))
            ));
        }
    }

    #[test]
    fn method_ids_round_trip() {
        for m in [
            LineOneMethod::Eta,
            LineOneMethod::Flat,
            LineOneMethod::Integral,
        ] {
            assert_eq!(LineOneMethod::from_id(m.id()), Some(m));
        }
        assert_eq!(LineOneMethod::from_id("sum"), None);
    }
}
