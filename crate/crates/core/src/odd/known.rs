use super::literature::{even_zeta, interior_sum};
use crate::error::{Result, ZetaError};
use crate::numerics::Real;

/// Classical rapidly convergent series for `ζ(3)`, `ζ(5)` and `ζ(7)`:
///
/// * `ζ(3) = −(4π²/7) Σ_{k≥0} ζ(2k)/((2k+1)(2k+2)2^{2k})`, with `ζ(0) = −1/2`;
/// * `ζ(5) = 12 Σ 1/(n⁵ sinh πn) − (39/20) Σ 1/(n⁵(e^{2πn}−1)) + (1/20) Σ 1/(n⁵(e^{2πn}+1))`;
/// * `ζ(7) = (19/56700) π⁷ − 2 Σ 1/(n⁷(e^{2πn}−1))`.
///
/// All interior sums converge geometrically. The working precision is that
/// of `tol`.
pub fn zeta_known_ref(target: u32, tol: &Real) -> Result<Real> {
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = tol.digits();
    let work = digits + 10;
    let inner_tol = tol.with_digits(work) * 0.01;
    let pi = Real::pi(work);
    let two_pi = &pi * 2.0;
    let value = match target {
        3 => {
            let s = interior_sum("zeta(3) even-zeta series", 0, &inner_tol, |k| {
                let den = ((2 * k + 1) * (2 * k + 2)) as f64;
                Ok(&(&even_zeta(k, work)? / den) / &Real::from_i64(4, work).powi(k as i32))
            })?;
            &(&(&pi.square() * -4.0) / 7.0) * &s
        }
        5 => {
            let n5 = |n: usize| Real::from_u64(n as u64, work).powi(5);
            let sinh_sum = interior_sum("zeta(5) sinh series", 1, &inner_tol, |n| {
                Ok((&n5(n) * &(&pi * n as f64).sinh()).recip())
            })?;
            let minus_sum = interior_sum("zeta(5) e^(2 pi n)-1 series", 1, &inner_tol, |n| {
                Ok((&n5(n) * &(&(&two_pi * n as f64).exp() - 1.0)).recip())
            })?;
            let plus_sum = interior_sum("zeta(5) e^(2 pi n)+1 series", 1, &inner_tol, |n| {
                Ok((&n5(n) * &(&(&two_pi * n as f64).exp() + 1.0)).recip())
            })?;
            &(&(&sinh_sum * 12.0) - &(&(&minus_sum * 39.0) / 20.0)) + &(&plus_sum / 20.0)
        }
        7 => {
            let series = interior_sum("zeta(7) e^(2 pi n)-1 series", 1, &inner_tol, |n| {
                let n7 = Real::from_u64(n as u64, work).powi(7);
                Ok((&n7 * &(&(&two_pi * n as f64).exp() - 1.0)).recip())
            })?;
            &(&(&pi.powi(7) * 19.0) / 56700.0) - &(&series * 2.0)
        }
        other => {
            return Err(ZetaError::Domain(format!(
                "reference series exist for 3, 5 and 7 only (got {other})"
            )))
        }
    };
    Ok(value.with_digits(digits))
}
