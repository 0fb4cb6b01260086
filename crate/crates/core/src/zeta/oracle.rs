use crate::error::{Result, ZetaError};
use crate::numerics::{Cplx, Real};
use crate::zeta::bernoulli::even_bernoulli_over_factorial;

/// Bernoulli corrections used by the Euler–Maclaurin oracle.
pub const ORACLE_CORRECTIONS: usize = 12;
/// Largest cut-off `N` tried before the oracle gives up.
const MAX_CUTOFF: u64 = 1 << 18;

/// Independent complex evaluator of `ζ(s)` for `Re(s) > 0`, `s ≠ 1`, by
/// Euler–Maclaurin summation.
///
/// Used to audit every other evaluator; it shares no code path with the eta
/// series.
pub fn zeta_oracle(s: &Cplx, tol: &Real) -> Result<Cplx> {
    if !s.re.is_positive() {
        return Err(ZetaError::Domain(format!(
            "oracle requires Re(s) > 0 (got {})",
            s.re.to_sci(10)
        )));
    }
    zeta_euler_maclaurin(s, tol)
}

/// Euler–Maclaurin evaluation of `ζ(s)` for `Re(s) ≥ 0`, `s ≠ 1`:
///
/// `Σ_{n<N} n^{−s} + N^{1−s}/(s−1) + ½N^{−s} + Σ_{j=1}^{12} B_{2j}/(2j)! (s)_{2j−1} N^{−s−2j+1}`
///
/// with `N = max(50, ⌈10|Im s|⌉)`, doubled until two successive values
/// agree to `tol`.
pub fn zeta_euler_maclaurin(s: &Cplx, tol: &Real) -> Result<Cplx> {
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    if s.re.is_negative() {
        return Err(ZetaError::Domain(format!(
            "Euler-Maclaurin oracle requires Re(s) >= 0 (got {})",
            s.re.to_sci(10)
        )));
    }
    let digits = s.digits().max(tol.digits());
    let work = digits + 10;
    let s_w = s.with_digits(work);
    let s_minus_1 = &s_w - 1.0;
    if s_minus_1.norm().lt_f64(1e-30) {
        return Err(ZetaError::Pole("s is within 1e-30 of the pole at 1".into()));
    }
    let coeffs = even_bernoulli_over_factorial(ORACLE_CORRECTIONS, work);
    let mut cutoff = (10.0 * s.im.abs().to_f64()).ceil().max(50.0) as u64;
    let mut head = Cplx::zero(work);
    let mut summed_to = 1u64;
    let mut previous: Option<Cplx> = None;
    loop {
        for n in summed_to..cutoff {
            head = &head + &Cplx::n_pow_neg(n, &s_w);
        }
        summed_to = cutoff;
        let value = &head + &em_fixed(&s_w, &s_minus_1, cutoff, &coeffs);
        if let Some(prev) = previous {
            let diff = (&value - &prev).norm();
            if diff <= *tol {
                return Ok(value.with_digits(digits));
            }
            if cutoff >= MAX_CUTOFF {
                return Err(ZetaError::accuracy("Euler-Maclaurin oracle", diff.to_f64()));
            }
        }
        previous = Some(value);
        cutoff *= 2;
    }
}

/// Remainder `Σ_{n≥N} n^{−s}` with a fixed number of corrections.
fn em_fixed(s: &Cplx, s_minus_1: &Cplx, cutoff: u64, coeffs: &[Real]) -> Cplx {
    let digits = s.digits();
    let n = Real::from_u64(cutoff, digits);
    let n_neg_s = Cplx::n_pow_neg(cutoff, s);
    let mut acc = &n_neg_s.scale(&n) / s_minus_1;
    acc = &acc + &n_neg_s.scale(&Real::from_f64(0.5, digits));
    let n_inv = n.recip();
    let n_inv_sq = n_inv.square();
    let mut poch = s.clone();
    let mut pow = n_neg_s.scale(&n_inv);
    for (idx, c) in coeffs.iter().enumerate() {
        let j = (idx + 1) as f64;
        acc = &acc + &(&poch * &pow).scale(c);
        poch = &poch * &(&(s + (2.0 * j - 1.0)) * &(s + 2.0 * j));
        pow = pow.scale(&n_inv_sq);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two() {
        let tol = Real::parse("1e-40", 50).unwrap();
        let v = zeta_oracle(&Cplx::from_f64(2.0, 0.0, 50), &tol).unwrap();
        let expect = &Real::pi(50).square() / 6.0;
        assert!((&v.re - &expect).abs() <= tol);
        assert!(v.im.abs() <= tol);
    }

    #[test]
    fn pole_and_domain() {
        let tol = Real::parse("1e-20", 30).unwrap();
        assert!(matches!(
            zeta_oracle(&Cplx::from_f64(1.0, 0.0, 30), &tol),
            Err(ZetaError::Pole(_))
        ));
        assert!(matches!(
            zeta_oracle(&Cplx::from_f64(0.0, 1.0, 30), &tol),
            Err(ZetaError::Domain(_))
        ));
        assert!(zeta_euler_maclaurin(&Cplx::from_f64(0.0, 1.0, 30), &tol).is_ok());
    }

    #[test]
    fn zeta_at_zero_is_minus_half() {
        let tol = Real::parse("1e-25", 30).unwrap();
        let v = zeta_euler_maclaurin(&Cplx::zero(30), &tol).unwrap();
        assert!((&v.re + 0.5).abs().lt_f64(1e-25));
    }
}
