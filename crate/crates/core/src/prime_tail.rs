//! The prime-tail sum `t(s) = Σ_p 1/(p^s − 1)`, its closed-form
//! approximation, and the gap between the two.
//!
//! Expanding `1/(p^s − 1) = Σ_k p^{−ks}` shows `t(s)` is the sum of `m^{−s}`
//! over prime powers `m`. The closed form
//! `ζ(s)(1 − 2^{−s}) − 1 + 1/(2^s − 1)` instead sums over *all* odd `m ≥ 3`
//! plus the powers of 2. It therefore over-counts by exactly
//! `Σ m^{−s}` over odd `m` that are not prime powers (15, 21, 33, 35, …).

use serde::Serialize;

use crate::error::{Result, ZetaError};
use crate::exec::Exec;
use crate::numerics::{Cplx, Real, SeriesResult};
use crate::primes::primes_between_with;
use crate::zeta::{integer_exponent, recip_prime_power_minus_one, zeta_dirichlet};

/// First prime cutoff tried by [`t_direct`].
pub const INITIAL_PRIME_CUTOFF: u64 = 100_000;
/// Default largest prime cutoff; about 1.07 million primes.
pub const DEFAULT_PRIME_CAP: u64 = 1 << 24;

/// Both incarnations of `t(s)` and their difference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailSum {
    pub s: Real,
    pub direct: SeriesResult,
    pub closed: Real,
    /// `closed − direct.value`.
    pub gap: Real,
}

fn check_s(s: &Real) -> Result<()> {
    if s.gt_f64(1.0) {
        Ok(())
    } else {
        Err(ZetaError::Domain(format!(
            "t(s) diverges for s <= 1 (got {})",
            s.to_sci(10)
        )))
    }
}

/// Bound on `Σ_{n>P} 1/(n^s − 1) ≤ P^{1−s}/((s−1)(1 − P^{−s}))`.
fn tail_bound(cutoff: u64, s: &Real) -> Real {
    let p = Real::from_u64(cutoff, s.digits());
    let p_pow = p.pow(&(1.0 - s));
    let shrink = 1.0 - &(&p_pow / &p);
    &(&p_pow / &(s - 1.0)) / &shrink
}

/// `t(s) = Σ_p 1/(p^s − 1)` summed over primes, with the prime cutoff
/// doubling from 10^5 until the tail bound is below `tol` or the cutoff
/// reaches [`DEFAULT_PRIME_CAP`].
pub fn t_direct(s: &Real, tol: &Real) -> Result<SeriesResult> {
    t_direct_with(s, tol, DEFAULT_PRIME_CAP, Exec::default())
}

/// [`t_direct`] with an explicit cutoff cap and execution strategy. Hitting
/// the cap returns the partial sum with `converged == false`.
pub fn t_direct_with(s: &Real, tol: &Real, cap: u64, exec: Exec) -> Result<SeriesResult> {
    check_s(s)?;
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = s.digits().max(tol.digits());
    let work = digits + 10;
    let s_w = s.with_digits(work);
    let s_int = integer_exponent(&s_w);
    let mut sum = Real::zero(work);
    let mut lo = 0u64;
    let mut cutoff = INITIAL_PRIME_CUTOFF.min(cap.max(2));
    let mut terms = 0usize;
    loop {
        let primes = primes_between_with(lo, cutoff, exec);
        terms += primes.len();
        let chunks: Vec<&[u64]> = primes.chunks(8192).collect();
        let partials = exec.map(&chunks, |chunk| {
            chunk.iter().rev().fold(Real::zero(work), |acc, &p| {
                &acc + &recip_prime_power_minus_one(p, &s_w, s_int)
            })
        });
        // add the smallest-magnitude chunks first
        for part in partials.into_iter().rev() {
            sum = &part + &sum;
        }
        let bound = tail_bound(cutoff, &s_w);
        if bound <= *tol || cutoff >= cap {
            let converged = bound <= *tol;
            return Ok(SeriesResult {
                value: Cplx::from_real(sum.with_digits(digits)),
                terms_used: terms,
                trunc_estimate: bound.with_digits(digits),
                converged,
            });
        }
        lo = cutoff + 1;
        cutoff = cutoff.saturating_mul(2).min(cap);
    }
}

/// Closed-form `t(s) ≈ ζ(s)(1 − 2^{−s}) − 1 + 1/(2^s − 1)`.
///
/// The leading terms cancel to about `3^{−s}`, so `ζ(s)` is evaluated with
/// `s·log10 2` extra digits.
pub fn t_closed(s: &Real) -> Result<Real> {
    check_s(s)?;
    let digits = s.digits();
    let extra = (s.to_f64() * std::f64::consts::LOG10_2).ceil().min(1.0e4) as u32;
    let work = digits + extra + 10;
    let s_w = s.with_digits(work);
    let zeta = zeta_dirichlet(&s_w, &Real::pow10(-(work as i32 - 2), work))?;
    let two_s = Real::from_i64(2, work).pow(&s_w);
    let value = &(&(zeta.real_value() * &(1.0 - &two_s.recip())) - 1.0) + &(&two_s - 1.0).recip();
    Ok(value.with_digits(digits))
}

/// [`t_direct`], [`t_closed`] and their gap at one `s`.
pub fn tail_sum(s: &Real, tol: &Real) -> Result<TailSum> {
    let direct = t_direct(s, tol)?;
    let closed = t_closed(s)?;
    let gap = &closed - &direct.value.re;
    Ok(TailSum {
        s: s.clone(),
        direct,
        closed,
        gap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain() {
        let tol = Real::parse("1e-10", 20).unwrap();
        assert!(matches!(
            t_direct(&Real::one(20), &tol),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            t_closed(&Real::one(20)),
            Err(ZetaError::Domain(_))
        ));
    }

    #[test]
    fn large_s_is_dominated_by_two() {
        let tol = Real::parse("1e-40", 50).unwrap();
        let s = Real::from_i64(30, 50);
        let t = t_direct(&s, &tol).unwrap();
        assert!(t.converged);
        let two = Real::from_i64(2, 50).powi(-30);
        let three = Real::from_i64(3, 50).powi(-30);
        assert!((&t.value.re - &two).abs() <= &three * 3.0);
    }

    #[test]
    fn closed_form_at_two() {
        let v = t_closed(&Real::from_i64(2, 40)).unwrap();
        let expect = &(&(&(&Real::pi(40).square() / 6.0) * 0.75) - 1.0) + &(Real::one(40) / 3.0);
        assert!((&v - &expect).abs().lt_f64(1e-38));
        assert!((v.to_f64() - 0.5670338834).abs() < 1e-10);
    }
}
