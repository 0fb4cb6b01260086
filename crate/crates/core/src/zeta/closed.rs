use rug::Integer;

use crate::error::{Result, ZetaError};
use crate::numerics::{Rat, Real};
use crate::zeta::bernoulli::{bernoulli, Convention};

fn even_half(two_n: i64) -> Result<u32> {
    if two_n < 2 || two_n % 2 != 0 {
        return Err(ZetaError::Domain(format!(
            "expected an even integer >= 2 (got {two_n})"
        )));
    }
    u32::try_from(two_n / 2).map_err(|_| ZetaError::Domain("argument too large".into()))
}

/// `ζ(2n) = (−1)^{n+1} B_{2n} (2π)^{2n} / (2·(2n)!)` with the rational
/// coefficient formed exactly.
pub fn zeta_even_closed(two_n: i64, digits: u32) -> Result<Real> {
    let n = even_half(two_n)?;
    let work = digits + 10;
    let b = bernoulli(2 * n as usize, Convention::B1MinusHalf);
    let fact = Integer::from(Integer::factorial(2 * n));
    let numer = b.numer().clone() * Integer::from(Integer::u_pow_u(2, 2 * n));
    let mut coeff = Rat::from_integers(numer, b.denom().clone() * fact * 2u32);
    if n % 2 == 0 {
        coeff = -coeff;
    }
    let pi_pow = Real::pi(work).powi(2 * n as i32);
    Ok((&coeff.to_real(work) * &pi_pow).with_digits(digits))
}

/// `ζ(−n) = −B_{n+1}/(n+1)` exactly, using `B_1 = +1/2` so that
/// `ζ(0) = −1/2`.
pub fn zeta_negative_int(n: u64) -> Rat {
    let b = bernoulli(n as usize + 1, Convention::B1PlusHalf);
    -(b / Rat::from_int(n as i64 + 1))
}

/// `ζ(2k)` from `ζ(2), …, ζ(2k−2)` without Bernoulli numbers:
///
/// `ζ(2k) = (−1)^{k+1} π^{2k} [ k/(2k+1)! + Σ_{j=0}^{k−2} (−1/π²)^{j+1} ζ(2j+2)/(2k−2j−1)! ]`,
///
/// starting from `ζ(2) = π²/6`.
pub fn zeta_even_recurrence(two_k: i64, digits: u32) -> Result<Real> {
    let k = even_half(two_k)? as usize;
    let work = digits + 10;
    let table = even_recurrence_table(k, work);
    Ok(table[k - 1].with_digits(digits))
}

/// `[ζ(2), ζ(4), …, ζ(2k)]` by the Bernoulli-free recurrence.
fn even_recurrence_table(k: usize, work: u32) -> Vec<Real> {
    let pi = Real::pi(work);
    let pi_sq = pi.square();
    let neg_inv_pi_sq = -&pi_sq.recip();
    // inv_fact[m] = 1/m!
    let mut inv_fact = vec![Real::one(work)];
    for m in 1..=(2 * k + 1) {
        let next = &inv_fact[m - 1] / (m as f64);
        inv_fact.push(next);
    }
    // scaled[j] = (−1/π²)^{j+1} ζ(2j+2)
    let mut scaled: Vec<Real> = Vec::with_capacity(k);
    let mut zetas: Vec<Real> = Vec::with_capacity(k);
    let mut pi_pow = Real::one(work);
    let mut neg_pow = Real::one(work);
    for kk in 1..=k {
        pi_pow = &pi_pow * &pi_sq;
        let mut bracket = &inv_fact[2 * kk + 1] * (kk as f64);
        for (j, sc) in scaled.iter().enumerate().take(kk.saturating_sub(1)) {
            bracket = &bracket + &(sc * &inv_fact[2 * kk - 2 * j - 1]);
        }
        let mut z = &bracket * &pi_pow;
        if kk % 2 == 0 {
            z = -z;
        }
        neg_pow = &neg_pow * &neg_inv_pi_sq;
        scaled.push(&neg_pow * &z);
        zetas.push(z);
    }
    zetas
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_even_values() {
        let pi = Real::pi(40);
        let z2 = zeta_even_closed(2, 40).unwrap();
        assert!((&z2 - &(&pi.square() / 6.0)).abs().lt_f64(1e-38));
        let z4 = zeta_even_closed(4, 40).unwrap();
        assert!((&z4 - &(&pi.powi(4) / 90.0)).abs().lt_f64(1e-38));
        let r4 = zeta_even_recurrence(4, 40).unwrap();
        assert!((&r4 - &z4).abs().lt_f64(1e-38));
        let r2 = zeta_even_recurrence(2, 40).unwrap();
        assert!((&r2 - &z2).abs().lt_f64(1e-38));
    }

    #[test]
    fn odd_argument_is_domain_error() {
        assert!(matches!(zeta_even_closed(3, 30), Err(ZetaError::Domain(_))));
        assert!(matches!(zeta_even_closed(0, 30), Err(ZetaError::Domain(_))));
        assert!(matches!(
            zeta_even_recurrence(-2, 30),
            Err(ZetaError::Domain(_))
        ));
    }

    #[test]
    fn negative_integers() {
        assert_eq!(zeta_negative_int(0), Rat::new(-1, 2));
        assert_eq!(zeta_negative_int(1), Rat::new(-1, 12));
        assert_eq!(zeta_negative_int(3), Rat::new(1, 120));
        for m in 1..=10 {
            assert!(zeta_negative_int(2 * m).is_zero());
        }
    }
}
