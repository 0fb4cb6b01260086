use rug::ops::Pow;
use rug::Integer;

use crate::error::{Result, ZetaError};
use crate::exec::Exec;
use crate::numerics::{accelerate_alternating_to_tol, em_tail, Cplx, Real, SeriesResult};
use crate::primes::primes_up_to;

/// Largest head length tried by [`zeta_dirichlet`].
const MAX_HEAD: usize = 1 << 20;

/// Threshold on `|1 − 2^{1−s}|` below which the eta route is refused.
pub const ETA_DEGENERACY: f64 = 1e-20;

fn check_tol(tol: &Real) -> Result<()> {
    if tol.is_positive() {
        Ok(())
    } else {
        Err(ZetaError::Precondition("tolerance must be positive".into()))
    }
}

/// `ζ(s) = Σ n^{-s}` for real `s > 1`.
///
/// The series is summed directly up to `N − 1`; the remainder `Σ_{n≥N}` is
/// the Euler–Maclaurin tail, whose first omitted correction is reported as
/// `trunc_estimate`. The bare integral bound `N^{1−s}/(s−1)` would need
/// `N ≈ 10^30` terms at `s = 2` for a 30-digit result, so the head is kept
/// short and the tail carries the accuracy.
pub fn zeta_dirichlet(s: &Real, tol: &Real) -> Result<SeriesResult> {
    if !s.gt_f64(1.0) {
        return Err(ZetaError::Domain(format!(
            "Dirichlet series diverges for s <= 1 (got {})",
            s.to_sci(10)
        )));
    }
    check_tol(tol)?;
    let digits = s.digits().max(tol.digits());
    let work = digits + 5;
    let s_w = s.with_digits(work);
    let sc = Cplx::from_real(s_w.clone());
    let neg_s = -&s_w;
    let tail_tol = tol.with_digits(work) * 0.5;
    let mut n_head = (digits as usize).max(10);
    let mut head = Real::zero(work);
    let mut done = 1usize;
    loop {
        for n in done..n_head {
            head = &head + &Real::from_u64(n as u64, work).pow(&neg_s);
        }
        done = n_head;
        let tail = em_tail(&sc, &Real::from_u64(n_head as u64, work), &tail_tol);
        if tail.ok || n_head >= MAX_HEAD {
            let value = (&head + &tail.value.re).with_digits(digits);
            let trunc = tail.last_term.with_digits(digits);
            let converged = tail.ok && trunc <= *tol;
            return Ok(SeriesResult {
                value: Cplx::from_real(value),
                terms_used: n_head - 1,
                trunc_estimate: trunc,
                converged,
            });
        }
        n_head *= 2;
    }
}

/// `ζ(s) = η(s)/(1 − 2^{1−s})` for real `s > 0`, `s ≠ 1`, with the eta
/// series `Σ (−1)^{n−1} n^{-s}` accelerated.
pub fn zeta_eta_real(s: &Real, tol: &Real) -> Result<SeriesResult> {
    if !s.is_positive() {
        return Err(ZetaError::Domain(format!(
            "eta series route requires s > 0 (got {})",
            s.to_sci(10)
        )));
    }
    check_tol(tol)?;
    let digits = s.digits().max(tol.digits());
    let work = digits + 10;
    let s_w = s.with_digits(work);
    let two = Real::from_i64(2, work);
    let prefactor = 1.0 - &two.pow(&(1.0 - &s_w));
    if prefactor.abs().lt_f64(ETA_DEGENERACY) {
        return Err(ZetaError::Pole(format!(
            "1 - 2^(1-s) vanishes at s = {}",
            s.to_sci(10)
        )));
    }
    let eta_tol = &(&tol.with_digits(work) * &prefactor.abs()) * 0.5;
    let neg_s = Cplx::from_real(-&s_w);
    let eta = accelerate_alternating_to_tol(
        |n| Cplx::from_real(Real::from_u64(n as u64, work).pow(&neg_s.re)),
        &eta_tol,
    )?;
    let value = (&eta.value.re / &prefactor).with_digits(digits);
    let trunc = (&eta.trunc_estimate / &prefactor.abs()).with_digits(digits);
    let converged = trunc <= *tol;
    Ok(SeriesResult {
        value: Cplx::from_real(value),
        terms_used: eta.terms_used,
        trunc_estimate: trunc,
        converged,
    })
}

/// `s` as a small positive integer exponent, if it is one exactly.
pub(crate) fn integer_exponent(s: &Real) -> Option<u32> {
    s.to_i64_exact()
        .filter(|&k| (1..=4096).contains(&k))
        .map(|k| k as u32)
}

/// `1/(p^s − 1)` at the precision of `s`; exact integer power when `s` is a
/// small integer.
pub(crate) fn recip_prime_power_minus_one(p: u64, s: &Real, s_int: Option<u32>) -> Real {
    let digits = s.digits();
    match s_int {
        Some(k) => {
            let pk = Integer::from(p).pow(k) - 1u32;
            Real::from_integer(&pk, digits).recip()
        }
        None => (&Real::from_u64(p, digits).pow(s) - 1.0).recip(),
    }
}

/// Truncated Euler product `∏_{p ≤ bound} p^s/(p^s − 1)`.
pub fn euler_product(s: &Real, prime_bound: u64) -> Result<Real> {
    euler_product_with(s, prime_bound, Exec::default())
}

/// [`euler_product`] with an explicit execution strategy; the prime list is
/// split into contiguous chunks whose partial products are multiplied in
/// order.
pub fn euler_product_with(s: &Real, prime_bound: u64, exec: Exec) -> Result<Real> {
    if !s.gt_f64(1.0) {
        return Err(ZetaError::Domain(format!(
            "Euler product diverges for s <= 1 (got {})",
            s.to_sci(10)
        )));
    }
    if prime_bound < 2 {
        return Err(ZetaError::Domain(
            "Euler product needs prime_bound >= 2".into(),
        ));
    }
    let digits = s.digits();
    let work = digits + 10;
    let s_w = s.with_digits(work);
    let s_int = integer_exponent(&s_w);
    let primes = primes_up_to(prime_bound);
    let chunks: Vec<&[u64]> = primes.chunks(4096).collect();
    let partials = exec.map(&chunks, |chunk| {
        chunk.iter().fold(Real::one(work), |acc, &p| {
            &acc * &(&recip_prime_power_minus_one(p, &s_w, s_int) + 1.0)
        })
    });
    let product = partials
        .into_iter()
        .fold(Real::one(work), |acc, x| &acc * &x);
    Ok(product.with_digits(digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_and_domain() {
        let tol = Real::parse("1e-20", 30).unwrap();
        assert!(matches!(
            zeta_dirichlet(&Real::one(30), &tol),
            Err(ZetaError::Domain(_))
        ));
        assert!(matches!(
            zeta_eta_real(&Real::one(30), &tol),
            Err(ZetaError::Pole(_))
        ));
        assert!(matches!(
            zeta_eta_real(&Real::zero(30), &tol),
            Err(ZetaError::Domain(_))
        ));
    }

    #[test]
    fn euler_product_single_factor() {
        let v = euler_product(&Real::from_i64(2, 30), 2).unwrap();
        assert!((&v - &(Real::from_i64(4, 30) / 3.0)).abs().lt_f64(1e-28));
    }
}
