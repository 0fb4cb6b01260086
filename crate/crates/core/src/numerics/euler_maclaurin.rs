//! Euler–Maclaurin tail of `Σ_{n≥0} (a+n)^{-s}`.

use super::cplx::Cplx;
use super::real::Real;
use crate::zeta::bernoulli::even_bernoulli_over_factorial;

/// Largest number of Bernoulli corrections tried by [`em_tail`].
pub(crate) const MAX_CORRECTIONS: usize = 80;

/// Tail value and the magnitude of the last correction used.
pub(crate) struct EmTail {
    pub value: Cplx,
    pub last_term: Real,
    /// `false` when the corrections started growing before reaching `tol`.
    pub ok: bool,
}

/// `∫_a^∞ x^{-s} dx + ½a^{-s} + Σ_j B_{2j}/(2j)! · (s)_{2j−1} · a^{−s−2j+1}`,
/// which equals `Σ_{n≥0} (a+n)^{-s}` up to the first omitted correction.
///
/// Corrections are added until one falls below `tol` (success) or a
/// correction exceeds its predecessor (the asymptotic series has turned).
pub(crate) fn em_tail(s: &Cplx, a: &Real, tol: &Real) -> EmTail {
    let digits = s.digits().max(a.digits()).max(tol.digits());
    let a_neg_s = Cplx::real_pow(a, &(-s));
    let s_minus_1 = s - 1.0;
    let integral = &a_neg_s.scale(a) / &s_minus_1;
    let mut value = &integral + &a_neg_s.scale(&Real::from_f64(0.5, digits));
    let coeffs = even_bernoulli_over_factorial(MAX_CORRECTIONS, digits);
    let a_inv = a.recip();
    let a_inv_sq = a_inv.square();
    let mut poch = s.clone();
    let mut apow = a_neg_s.scale(&a_inv);
    let mut prev: Option<Real> = None;
    for (idx, c) in coeffs.iter().enumerate() {
        let j = (idx + 1) as f64;
        let term = (&poch * &apow).scale(c);
        let mag = term.norm();
        if let Some(p) = &prev {
            if mag > *p {
                return EmTail {
                    value,
                    last_term: p.clone(),
                    ok: false,
                };
            }
        }
        value = &value + &term;
        if mag < *tol {
            return EmTail {
                value,
                last_term: mag,
                ok: true,
            };
        }
        prev = Some(mag);
        poch = &poch * &(&(s + (2.0 * j - 1.0)) * &(s + 2.0 * j));
        apow = apow.scale(&a_inv_sq);
    }
    EmTail {
        value,
        last_term: prev.unwrap_or_else(|| Real::zero(digits)),
        ok: false,
    }
}
