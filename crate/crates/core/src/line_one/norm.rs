use serde::{Serialize, Serializer};

use crate::error::{Result, ZetaError};
use crate::numerics::{Cplx, Real};

/// Function families whose uniform convergence justifies exchanging sums
/// and integrals on the way to `ζ(1+ib)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormLemma {
    /// `x^{−ib}/(x(x+n))` on `[1, ∞)`; bound `1/(n+1)`. Identifier `1`.
    MellinKernel,
    /// `(−1/(2n+x+1))^k` on `[0, ∞)`; bound `(1/(2n))^k`. Identifier `2i`.
    ExpansionPower,
    /// `x^{−ib}/((2n+x+1)(2n+x+2))` on `[0, ∞)`; bound
    /// `1/((2n+1)(2n+2))`. Identifier `2ii`.
    PairedKernel,
}

impl NormLemma {
    pub const ALL: [NormLemma; 3] = [
        NormLemma::MellinKernel,
        NormLemma::ExpansionPower,
        NormLemma::PairedKernel,
    ];

    pub fn id(self) -> &'static str {
        match self {
            NormLemma::MellinKernel => "1",
            NormLemma::ExpansionPower => "2i",
            NormLemma::PairedKernel => "2ii",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        NormLemma::ALL.into_iter().find(|l| l.id() == id)
    }

    /// Analytic sup-norm bound for index `n` and power `k`.
    pub fn bound(self, n: u32, k: u32, digits: u32) -> Real {
        let n = f64::from(n);
        let one = Real::one(digits);
        match self {
            NormLemma::MellinKernel => &one / (n + 1.0),
            NormLemma::ExpansionPower => (&one / (2.0 * n)).powi(k as i32),
            NormLemma::PairedKernel => &one / ((2.0 * n + 1.0) * (2.0 * n + 2.0)),
        }
    }
}

impl Serialize for NormLemma {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Grid supremum of `|f_n|` next to its analytic bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormProbe {
    pub lemma: NormLemma,
    pub n: u32,
    /// Power in the `2i` family; recorded but unused by the others.
    pub k: u32,
    pub grid_sup: Real,
    pub bound: Real,
}

impl NormProbe {
    /// `grid_sup ≤ bound·(1 + 1e-6)`.
    pub fn holds(&self) -> bool {
        self.grid_sup <= &self.bound * (1.0 + 1e-6)
    }
}

/// Working precision of the probes; the comparison needs only a few digits.
const PROBE_DIGITS: u32 = 30;
/// Largest abscissa on the grid.
const X_MAX: f64 = 1e6;
/// Smallest positive abscissa on the grid.
const X_MIN: f64 = 1e-6;

/// Grid supremum of the chosen family at index `n`.
///
/// The grid is logarithmic: `[1, 10^6]` for the Lemma 1 family, which is
/// probed only on `[1, ∞)` where its bound applies, and `{0} ∪ [10^{−6},
/// 10^6]` for the Lemma 2 families. At `x = 0` the factor `x^{−ib}` is taken
/// at its limiting modulus 1.
pub fn uniform_norm_probe(
    lemma: NormLemma,
    n: u32,
    k: u32,
    b: &Real,
    grid: usize,
) -> Result<NormProbe> {
    if n == 0 {
        return Err(ZetaError::Precondition("n must be at least 1".into()));
    }
    if grid < 100 {
        return Err(ZetaError::Precondition(format!(
            "grid must have at least 100 points (got {grid})"
        )));
    }
    if lemma == NormLemma::ExpansionPower && k < 2 {
        return Err(ZetaError::Precondition("k must be at least 2".into()));
    }
    let digits = PROBE_DIGITS;
    let b = b.with_digits(digits);
    let neg_ib = Cplx::new(Real::zero(digits), -&b);
    let nf = f64::from(n);
    let xs: Vec<Real> = match lemma {
        NormLemma::MellinKernel => log_grid(1.0, X_MAX, grid, digits),
        _ => std::iter::once(Real::zero(digits))
            .chain(log_grid(X_MIN, X_MAX, grid - 1, digits))
            .collect(),
    };
    let oscillation = |x: &Real| -> Real {
        if x.is_zero() {
            Real::one(digits)
        } else {
            Cplx::real_pow(x, &neg_ib).norm()
        }
    };
    let grid_sup = xs
        .iter()
        .map(|x| match lemma {
            NormLemma::MellinKernel => &oscillation(x) / &(x * &(x + nf)),
            NormLemma::ExpansionPower => (x + (2.0 * nf + 1.0)).recip().powi(k as i32),
            NormLemma::PairedKernel => {
                &oscillation(x) / &(&(x + (2.0 * nf + 1.0)) * &(x + (2.0 * nf + 2.0)))
            }
        })
        .fold(Real::zero(digits), |m, v| m.max(&v));
    Ok(NormProbe {
        lemma,
        n,
        k,
        grid_sup,
        bound: lemma.bound(n, k, digits),
    })
}

/// `count` points spaced evenly in `ln x` over `[lo, hi]`.
fn log_grid(lo: f64, hi: f64, count: usize, digits: u32) -> Vec<Real> {
    let ln_lo = Real::from_f64(lo, digits).ln();
    let span = &Real::from_f64(hi, digits).ln() - &ln_lo;
    (0..count)
        .map(|i| (&ln_lo + &(&span * (i as f64 / (count - 1) as f64))).exp())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for l in NormLemma::ALL {
            assert_eq!(NormLemma::from_id(l.id()), Some(l));
        }
        assert_eq!(NormLemma::from_id("3"), None);
    }

    #[test]
    fn grid_endpoints() {
        let g = log_grid(1.0, 1e6, 101, 30);
        assert!((&g[0] - 1.0).abs().lt_f64(1e-25));
        assert!((&g[100] - 1e6).abs().lt_f64(1e-18));
    }

    #[test]
    fn small_grid_rejected() {
        let r = uniform_norm_probe(NormLemma::PairedKernel, 1, 2, &Real::one(30), 50);
        assert!(matches!(r, Err(ZetaError::Precondition(_))));
    }
}
