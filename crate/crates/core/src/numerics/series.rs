use serde::Serialize;

use super::cplx::Cplx;
use super::real::Real;
use crate::error::{Result, ZetaError};

/// Outcome of summing any series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: Cplx,
    pub terms_used: usize,
    /// Estimated bound on the truncation error.
    pub trunc_estimate: Real,
    pub converged: bool,
}

impl SeriesResult {
    pub fn real_value(&self) -> &Real {
        &self.value.re
    }
}

/// Consecutive small terms required before `sum_series` stops.
const STOP_WINDOW: usize = 3;

/// Sums `Σ_{n≥1} term(n)`.
///
/// Summation stops once the last three terms are each below
/// `tol·max(1, |partial|)`. The truncation estimate extrapolates the tail
/// from the largest magnitude ratio `r` observed over that window. It uses
/// the larger of a geometric and a power-law model, and is infinite when
/// `r ≥ 1`. `converged` means the estimate is at most `tol`. Algebraically
/// decaying series therefore stop with an honest but large estimate and
/// `converged == false`.
pub fn sum_series<F>(term: F, tol: &Real, max_terms: usize) -> Result<SeriesResult>
where
    F: Fn(usize) -> Cplx,
{
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = tol.digits();
    let mut partial = Cplx::zero(digits);
    let mut mags: Vec<Real> = Vec::with_capacity(STOP_WINDOW + 1);
    let mut stopped = false;
    let mut n = 0usize;
    while n < max_terms {
        n += 1;
        let t = term(n);
        if !t.is_finite() {
            return Err(ZetaError::NonFinite { index: n });
        }
        let m = t.norm();
        partial = &partial + &t;
        mags.push(m);
        if mags.len() > STOP_WINDOW + 1 {
            mags.remove(0);
        }
        if n >= STOP_WINDOW {
            let scale = tol * &partial.norm().max_f64(1.0);
            let window = &mags[mags.len() - STOP_WINDOW..];
            if window.iter().all(|m| m < &scale) {
                stopped = true;
                break;
            }
        }
    }
    let trunc = tail_estimate(&mags, n, digits);
    let converged = stopped && trunc <= *tol;
    Ok(SeriesResult {
        value: partial,
        terms_used: n,
        trunc_estimate: trunc,
        converged,
    })
}

/// Bound on the omitted tail after `n` terms, given the last few term
/// magnitudes. Two models are fitted to the largest observed ratio `r`:
/// geometric, `last·r/(1−r)`, and power law `C·k^{−p}` with
/// `p = −ln r / ln(n/(n−1))`, bounded by `last·n/(p−1)`. The larger is
/// returned, so both geometric and algebraic decay are bounded from above.
fn tail_estimate(mags: &[Real], n: usize, digits: u32) -> Real {
    let Some(last) = mags.last() else {
        return Real::zero(digits);
    };
    if last.is_zero() {
        return Real::zero(digits);
    }
    let mut ratio = Real::zero(digits);
    for w in mags.windows(2) {
        if w[0].is_zero() {
            return Real::infinity(digits);
        }
        let r = &w[1] / &w[0];
        ratio = ratio.max(&r);
    }
    if mags.len() < 2 || n < 2 || !ratio.lt_f64(1.0) {
        return Real::infinity(digits);
    }
    let geometric = last * &(&ratio / &(1.0 - &ratio));
    if ratio.is_zero() {
        return geometric;
    }
    let nf = n as f64;
    let step = Real::from_f64(nf / (nf - 1.0), digits).ln();
    let p = &(-&ratio.ln()) / &step;
    if !p.gt_f64(1.0) {
        return Real::infinity(digits);
    }
    let algebraic = &(last * nf) / &(&p - 1.0);
    geometric.max(&algebraic)
}

/// Largest acceleration order accepted by [`accelerate_alternating`].
pub const MAX_ACCEL_ORDER: usize = 4096;

/// Acceleration order for a `target_digits` result on a totally monotone
/// coefficient sequence; each order buys `log10(3+√8) ≈ 0.77` digits.
pub fn order_for_digits(target_digits: u32) -> usize {
    ((f64::from(target_digits) * 1.31).ceil() as usize).max(4)
}

/// Accelerated value of `Σ_{n≥1} (−1)^{n−1} coeff(n)` using the
/// Chebyshev-weighted resummation of Cohen, Rodriguez Villegas and Zagier.
///
/// The error estimate is `|S(order) − S(order−4)|` computed from the same
/// coefficients. It overestimates the true error of `S(order)`. Working
/// precision is `tol.digits()`; `converged` compares the estimate with
/// `tol·max(1, |value|)`.
pub fn accelerate_alternating<F>(coeff: F, order: usize, tol: &Real) -> Result<SeriesResult>
where
    F: Fn(usize) -> Cplx,
{
    if order < 4 {
        return Err(ZetaError::Precondition(format!(
            "acceleration order {order} below minimum 4"
        )));
    }
    if order > MAX_ACCEL_ORDER {
        return Err(ZetaError::Config(format!(
            "acceleration order {order} exceeds table capacity {MAX_ACCEL_ORDER}"
        )));
    }
    let digits = tol.digits();
    let coeffs: Vec<Cplx> = (1..=order)
        .map(|k| {
            let c = coeff(k);
            if c.is_finite() {
                Ok(c)
            } else {
                Err(ZetaError::NonFinite { index: k })
            }
        })
        .collect::<Result<_>>()?;
    let value = weighted_alternating_sum(&coeffs, order, digits);
    let lower = weighted_alternating_sum(&coeffs, order - 4, digits);
    let trunc = (&value - &lower).norm();
    let scale = tol * &value.norm().max_f64(1.0);
    let converged = trunc <= scale;
    Ok(SeriesResult {
        value,
        terms_used: order,
        trunc_estimate: trunc,
        converged,
    })
}

/// Ramps the acceleration order until the estimate meets `tol` (relative to
/// `max(1, |value|)`), starting from the order suited to `tol.digits()`.
pub fn accelerate_alternating_to_tol<F>(coeff: F, tol: &Real) -> Result<SeriesResult>
where
    F: Fn(usize) -> Cplx,
{
    let mut order = order_for_digits(tol.digits());
    loop {
        let r = accelerate_alternating(&coeff, order, tol)?;
        if r.converged {
            return Ok(r);
        }
        let next = order + order / 2;
        if next > MAX_ACCEL_ORDER {
            return Err(ZetaError::accuracy(
                "alternating-series acceleration",
                r.trunc_estimate.to_f64(),
            ));
        }
        order = next;
    }
}

/// Cohen–Rodriguez Villegas–Zagier weights applied to the first `n`
/// coefficients. `n == 0` yields zero.
fn weighted_alternating_sum(coeffs: &[Cplx], n: usize, digits: u32) -> Cplx {
    if n == 0 {
        return Cplx::zero(digits);
    }
    let three_plus_sqrt8 = &Real::from_i64(8, digits).sqrt() + 3.0;
    let dn = three_plus_sqrt8.powi(n as i32);
    let d = &(&dn + &dn.recip()) * 0.5;
    let mut b = Real::from_i64(-1, digits);
    let mut c = -&d;
    let mut s = Cplx::zero(digits);
    let nf = n as f64;
    for (k, a) in coeffs.iter().take(n).enumerate() {
        c = &b - &c;
        s = &s + &a.scale(&c);
        let kf = k as f64;
        b = &(&b * ((kf + nf) * (kf - nf))) / ((kf + 0.5) * (kf + 1.0));
    }
    &s / &d
}
