use super::real::Real;
use crate::error::{Result, ZetaError};
use crate::zeta::bernoulli::bernoulli_real;

/// Digamma function `Ψ(x) = Γ'(x)/Γ(x)` for `x > 0`.
///
/// The argument is shifted upward with `Ψ(x) = Ψ(x+1) − 1/x` until it is at
/// least `max(20, digits/2)`. Then the asymptotic series
/// `ln y − 1/(2y) − Σ B_{2k}/(2k·y^{2k})` is summed until its terms drop
/// below the working epsilon. A cut at 20 with ten terms only reaches about
/// 25 digits, so the cut and the term count both scale with precision.
pub fn digamma(x: &Real) -> Result<Real> {
    if !x.is_positive() {
        return Err(ZetaError::Domain(format!(
            "digamma requires x > 0 (got {})",
            x.to_sci(10)
        )));
    }
    let digits = x.digits();
    let work = digits + 5;
    let threshold = (f64::from(digits) * 0.5).max(20.0);
    let mut y = x.with_digits(work);
    let mut shift = Real::zero(work);
    while y.lt_f64(threshold) {
        shift = &shift + &y.recip();
        y = &y + 1.0;
    }
    let eps = Real::pow10(-(work as i32), work);
    let y_inv_sq = y.square().recip();
    let mut acc = &y.ln() - &(&y * 2.0).recip();
    let mut ypow = y_inv_sq.clone();
    for k in 1..200usize {
        let b = bernoulli_real(2 * k, work);
        let term = &(&b * &ypow) / (2.0 * k as f64);
        acc = &acc - &term;
        if term.abs() < eps {
            break;
        }
        ypow = &ypow * &y_inv_sq;
    }
    Ok((&acc - &shift).with_digits(digits))
}
