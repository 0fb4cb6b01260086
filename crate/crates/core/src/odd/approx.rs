use serde::Serialize;

use super::trace::ZetaNode;
use crate::error::{Result, ZetaError};
use crate::exec::Exec;
use crate::numerics::Real;
use crate::prime_tail::{t_closed, t_direct};
use crate::zeta::{zeta_dirichlet, zeta_even_closed, zeta_even_recurrence};

/// Which prime-tail incarnation feeds the f-ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FMode {
    /// Closed form `ζ(s)(1 − 2^{−s}) − 1 + 1/(2^s − 1)`.
    Closed,
    /// Sum over primes.
    Direct,
}

/// One evaluation of `f(s) = [t(2s)/ζ(2s)] / [t(2s+1)/ζ(2s+1)]`.
///
/// `f_closed` is always computed (it is cheap); `f_direct` only in
/// [`FMode::Direct`], because the prime sum dominates the cost.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FRatioSample {
    pub s: u32,
    pub f_closed: Real,
    pub f_direct: Option<Real>,
    /// `ζ(2s)` used in both ratios.
    pub zeta_even: Real,
    /// `ζ(2s+1)` used in both ratios.
    pub zeta_odd: Real,
}

impl FRatioSample {
    /// The value selected by `mode`.
    pub fn f(&self, mode: FMode) -> Option<&Real> {
        match mode {
            FMode::Closed => Some(&self.f_closed),
            FMode::Direct => self.f_direct.as_ref(),
        }
    }
}

/// One row of the odd-argument error table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalRow {
    pub argument: u32,
    pub formula_value: Real,
    pub reference_value: Real,
    pub abs_diff: Real,
}

fn check_s(s: u32) -> Result<()> {
    if s >= 1 {
        Ok(())
    } else {
        Err(ZetaError::Domain(
            "odd-argument index s must be >= 1".into(),
        ))
    }
}

/// Digits lost to the `2^{−2s}` cancellation in the tail ratios.
fn cancellation_digits(s: u32) -> u32 {
    (f64::from(2 * s + 1) * std::f64::consts::LOG10_2).ceil() as u32
}

/// `f(s)` with reference `ζ(2s)` (Bernoulli closed form) and `ζ(2s+1)`
/// (Dirichlet series at working precision).
pub fn f_ratio(s: u32, mode: FMode, tol: &Real) -> Result<FRatioSample> {
    check_s(s)?;
    let digits = tol.digits();
    let work = digits + cancellation_digits(s) + 10;
    let even_arg = Real::from_i64(2 * i64::from(s), work);
    let odd_arg = Real::from_i64(2 * i64::from(s) + 1, work);
    let zeta_even = zeta_even_closed(2 * i64::from(s), work)?;
    let zeta_odd = zeta_dirichlet(&odd_arg, &Real::pow10(-(work as i32 - 2), work))?
        .value
        .re;
    let ratio = |t_even: &Real, t_odd: &Real| &(t_even / &zeta_even) / &(t_odd / &zeta_odd);
    let f_closed = ratio(&t_closed(&even_arg)?, &t_closed(&odd_arg)?).with_digits(digits);
    let f_direct = match mode {
        FMode::Closed => None,
        FMode::Direct => {
            let t_even = t_direct(&even_arg.with_digits(digits), tol)?.value.re;
            let t_odd = t_direct(&odd_arg.with_digits(digits), tol)?.value.re;
            Some(ratio(&t_even, &t_odd).with_digits(digits))
        }
    };
    Ok(FRatioSample {
        s,
        f_closed,
        f_direct,
        zeta_even: zeta_even.with_digits(digits),
        zeta_odd: zeta_odd.with_digits(digits),
    })
}

/// Solves `t(2s)/ζ(2s) = f·t(2s+1)/ζ(2s+1)` for `ζ(2s+1)` with the
/// closed-form tail on both sides:
///
/// `ζ(2s+1) = B / ((1 − 2^{−(2s+1)}) − A/f)`, where
/// `A = 1 − 2^{−2s} − (1 − 1/(2^{2s} − 1))/ζ(2s)` and
/// `B = (2^{2s+1} − 2)/(2^{2s+1} − 1)`.
fn odd_from_even(s: u32, f: &Real, zeta_even: &Real, work: u32) -> Result<Real> {
    if !f.is_positive() {
        return Err(ZetaError::Domain("f must be positive".into()));
    }
    let f = f.with_digits(work);
    let two = Real::from_i64(2, work);
    let p_even = two.powi(2 * s as i32);
    let p_odd = &p_even * 2.0;
    let a = &(1.0 - &p_even.recip()) - &(&(1.0 - &(&p_even - 1.0).recip()) / zeta_even);
    let b = &(&p_odd - 2.0) / &(&p_odd - 1.0);
    let den = &(1.0 - &p_odd.recip()) - &(&a / &f);
    if den.abs().lt_f64(1e-30) {
        return Err(ZetaError::Degenerate(format!(
            "denominator vanishes for s = {s}, f = {}",
            f.to_sci(12)
        )));
    }
    Ok(&b / &den)
}

/// `ζ(2s+1)` from `ζ(2s)` (Bernoulli closed form) and the constant `f`.
/// The working precision is that of `f`.
pub fn zeta_odd_closed(s: u32, f: &Real) -> Result<Real> {
    Ok(zeta_odd_closed_traced(s, f)?.0)
}

/// [`zeta_odd_closed`] together with every zeta value it consumed.
pub fn zeta_odd_closed_traced(s: u32, f: &Real) -> Result<(Real, Vec<ZetaNode>)> {
    check_s(s)?;
    let digits = f.digits();
    let work = digits + cancellation_digits(s) + 10;
    let zeta_even = zeta_even_closed(2 * i64::from(s), work)?;
    let v = odd_from_even(s, f, &zeta_even, work)?;
    Ok((v.with_digits(digits), vec![ZetaNode::Even(2 * s)]))
}

/// Same as [`zeta_odd_closed`] with `ζ(2k)` from the Bernoulli-free
/// recurrence.
pub fn zeta_odd_bernoulli_free(k: u32, f: &Real) -> Result<Real> {
    check_s(k)?;
    let digits = f.digits();
    let work = digits + cancellation_digits(k) + 10;
    let zeta_even = zeta_even_recurrence(2 * i64::from(k), work)?;
    Ok(odd_from_even(k, f, &zeta_even, work)?.with_digits(digits))
}

/// `ζ(2s+1) ≈ f · t(2s+1)/t(2s) · ζ(2s)` with true prime sums.
pub fn zeta_odd_prime(s: u32, f: &Real, tol: &Real) -> Result<Real> {
    check_s(s)?;
    let digits = f.digits().max(tol.digits());
    let work = digits + 10;
    let t_even = t_direct(&Real::from_i64(2 * i64::from(s), digits), tol)?
        .value
        .re;
    let t_odd = t_direct(&Real::from_i64(2 * i64::from(s) + 1, digits), tol)?
        .value
        .re;
    let zeta_even = zeta_even_closed(2 * i64::from(s), work)?;
    let v = &(&(&f.with_digits(work) * &t_odd) / &t_even) * &zeta_even;
    Ok(v.with_digits(digits))
}

/// Rows for odd arguments `3, 5, …, max_arg`: [`zeta_odd_closed`] against
/// the Dirichlet series at `tol`.
pub fn odd_error_table(max_arg: u32, f: &Real, tol: &Real) -> Result<Vec<EvalRow>> {
    odd_error_table_with(max_arg, f, tol, Exec::default())
}

/// [`odd_error_table`] with an explicit execution strategy; rows are
/// computed independently and returned in argument order.
pub fn odd_error_table_with(
    max_arg: u32,
    f: &Real,
    tol: &Real,
    exec: Exec,
) -> Result<Vec<EvalRow>> {
    if max_arg < 3 || max_arg.is_multiple_of(2) {
        return Err(ZetaError::Domain(format!(
            "max_arg must be an odd integer >= 3 (got {max_arg})"
        )));
    }
    let digits = f.digits().max(tol.digits());
    let f = f.with_digits(digits);
    let args: Vec<u32> = (3..=max_arg).step_by(2).collect();
    exec.try_map(&args, |&arg| {
        let formula_value = zeta_odd_closed((arg - 1) / 2, &f)?;
        let reference_value = zeta_dirichlet(&Real::from_i64(i64::from(arg), digits), tol)?
            .value
            .re;
        let abs_diff = (&formula_value - &reference_value).abs();
        Ok(EvalRow {
            argument: arg,
            formula_value,
            reference_value,
            abs_diff,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_three_row() {
        let v = zeta_odd_closed(1, &Real::from_i64(2, 30)).unwrap();
        assert!((v.to_f64() - 1.219884961).abs() < 1e-8);
    }

    #[test]
    fn non_positive_f_rejected() {
        assert!(matches!(
            zeta_odd_closed(1, &Real::zero(30)),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            zeta_odd_closed(0, &Real::from_i64(2, 30)),
            Err(ZetaError::Domain(_))
        ));
    }

    #[test]
    fn degenerate_denominator() {
        // A/f = 1 − 2^{-3} makes the denominator vanish
        let digits = 40;
        let z2 = zeta_even_closed(2, digits + 20).unwrap();
        let a = &(1.0 - &Real::from_f64(0.25, digits + 20))
            - &(&(1.0 - &(Real::one(digits + 20) / 3.0)) / &z2);
        let f = &a / &(1.0 - &Real::from_f64(0.125, digits + 20));
        let r = zeta_odd_closed(1, &f.with_digits(digits));
        assert!(matches!(r, Err(ZetaError::Degenerate(_))), "{r:?}");
    }

    #[test]
    fn table_rejects_even_max() {
        let tol = Real::parse("1e-20", 30).unwrap();
        assert!(odd_error_table(8, &Real::from_i64(2, 30), &tol).is_err());
        assert!(odd_error_table(1, &Real::from_i64(2, 30), &tol).is_err());
    }
}
