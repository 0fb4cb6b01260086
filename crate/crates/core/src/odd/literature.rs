use serde::Serialize;

use super::trace::ZetaNode;
use crate::error::{Result, ZetaError};
use crate::numerics::{accelerate_alternating_to_tol, hurwitz_zeta, Cplx, Real};
use crate::zeta::zeta_even_closed;

/// Term budget for one interior series.
const INTERIOR_BUDGET: usize = 100_000;
/// Consecutive terms below tolerance required to stop an interior series.
const INTERIOR_WINDOW: usize = 3;

/// Classical representations of `ζ(2n+1)` that consume lower odd values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LiteratureVariant {
    /// Gamma-ratio series `Σ (2 − 2^{1−2k}) Γ(2k) ζ(2k)/Γ(2n+2k+2)` plus a
    /// finite sum over `ζ(2n−2k+1)`. Identifier `eq23`.
    GammaRatio,
    /// `log 2 + Σ ζ(2k)/((k+n)2^{2k})` with a finite odd-zeta correction.
    /// Identifier `eq24`.
    LogTwo,
    /// `log 3 + 2Σ ζ(2k)/((k+n)3^{2k})` with odd-zeta and `ζ(2j, 1/3)`
    /// corrections. Identifier `eq25`.
    LogThree,
    /// `log 2 + 2Σ ζ(2k)/((k+n)4^{2k})` with odd-zeta and `ζ(2j, 1/4)`
    /// corrections. Identifier `eq26`.
    LogTwoQuarter,
}

impl LiteratureVariant {
    pub const ALL: [LiteratureVariant; 4] = [
        LiteratureVariant::GammaRatio,
        LiteratureVariant::LogTwo,
        LiteratureVariant::LogThree,
        LiteratureVariant::LogTwoQuarter,
    ];

    /// Stable identifier used by reports and the command line.
    pub fn id(self) -> &'static str {
        match self {
            LiteratureVariant::GammaRatio => "eq23",
            LiteratureVariant::LogTwo => "eq24",
            LiteratureVariant::LogThree => "eq25",
            LiteratureVariant::LogTwoQuarter => "eq26",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.id() == id)
    }
}

/// `ζ(2k)` for `k ≥ 0`, with `ζ(0) = −1/2`.
pub(super) fn even_zeta(k: usize, work: u32) -> Result<Real> {
    if k == 0 {
        Ok(Real::from_f64(-0.5, work))
    } else {
        zeta_even_closed(2 * k as i64, work)
    }
}

/// `Σ_{k≥start} term(k)`, stopping once three consecutive terms are below
/// `tol` in magnitude.
pub(super) fn interior_sum<F>(name: &str, start: usize, tol: &Real, mut term: F) -> Result<Real>
where
    F: FnMut(usize) -> Result<Real>,
{
    let mut acc = Real::zero(tol.digits());
    let mut small = 0usize;
    for k in start..start + INTERIOR_BUDGET {
        let t = term(k)?;
        if !t.is_finite() {
            return Err(ZetaError::NonFinite { index: k });
        }
        small = if t.abs() < *tol { small + 1 } else { 0 };
        acc = &acc + &t;
        if small >= INTERIOR_WINDOW {
            return Ok(acc);
        }
    }
    Err(ZetaError::accuracy(
        format!("interior series '{name}' did not settle within {INTERIOR_BUDGET} terms"),
        f64::NAN,
    ))
}

/// `ζ(2n+1)` by the chosen classical representation.
///
/// Lower odd values `ζ(3), …, ζ(2n−1)` are computed by the same
/// representation, bottom-up, each level at a ten times tighter tolerance
/// than the level above so that errors do not stack.
pub fn zeta_odd_literature(n: u32, variant: LiteratureVariant, tol: &Real) -> Result<Real> {
    Ok(zeta_odd_literature_traced(n, variant, tol)?.0)
}

/// [`zeta_odd_literature`] together with the zeta values consumed by the
/// top-level evaluation.
pub fn zeta_odd_literature_traced(
    n: u32,
    variant: LiteratureVariant,
    tol: &Real,
) -> Result<(Real, Vec<ZetaNode>)> {
    if n == 0 {
        return Err(ZetaError::Domain("index n must be >= 1".into()));
    }
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = tol.digits();
    let work = digits + 2 * n + 10;
    let mut odd: Vec<Real> = Vec::with_capacity(n as usize);
    let mut nodes = Vec::new();
    for level in 1..=n {
        let level_tol = &tol.with_digits(work) * &Real::pow10(-((n - level) as i32), work);
        nodes.clear();
        let v = evaluate(
            level,
            variant,
            Form::Corrected,
            &level_tol,
            &odd,
            work,
            &mut nodes,
        )?;
        odd.push(v);
    }
    let value = odd.pop().expect("n >= 1 levels").with_digits(digits);
    Ok((value, nodes))
}

/// The representation exactly as typeset, evaluated at the top level with
/// correct lower odd values.
///
/// Three transcriptions differ from the identities that hold:
///
/// * `eq23` prints the finite sum's summand as
///   `((2^{2k−2m} − 1) − π^{2k} ζ(2m−2k+1))/Γ(2k+2)`; the true summand is
///   `(−1)^k (2^{2k−2m} − 1) π^{2k} ζ(2m−2k+1)/Γ(2k+2)`.
/// * `eq24` prints the odd-zeta correction outside the bracket that carries
///   the prefactor.
/// * `eq26` omits the factor 2 in front of `Σ ζ(2k)/((k+n)4^{2k})`.
///
/// `eq25` is correct as printed. For `n = 1` the finite sums are empty, so
/// `eq23` and `eq24` agree with the true value there.
pub fn zeta_odd_literature_printed(n: u32, variant: LiteratureVariant, tol: &Real) -> Result<Real> {
    if n == 0 {
        return Err(ZetaError::Domain("index n must be >= 1".into()));
    }
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = tol.digits();
    let work = digits + 2 * n + 10;
    let lower_tol = &tol.with_digits(work) * 0.1;
    let mut odd: Vec<Real> = Vec::with_capacity(n as usize);
    for j in 1..n {
        odd.push(zeta_odd_literature(j, variant, &lower_tol)?.with_digits(work));
    }
    let mut nodes = Vec::new();
    let v = evaluate(
        n,
        variant,
        Form::Printed,
        &tol.with_digits(work),
        &odd,
        work,
        &mut nodes,
    )?;
    Ok(v.with_digits(digits))
}

/// Which transcription of a representation to evaluate.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Form {
    Corrected,
    Printed,
}

/// One level; `odd[j−1]` holds `ζ(2j+1)` for `j < n`.
fn evaluate(
    n: u32,
    variant: LiteratureVariant,
    form: Form,
    tol: &Real,
    odd: &[Real],
    work: u32,
    nodes: &mut Vec<ZetaNode>,
) -> Result<Real> {
    match variant {
        LiteratureVariant::GammaRatio => gamma_ratio(n, form, tol, odd, work, nodes),
        LiteratureVariant::LogTwo => log_base(n, LogForm::Two, form, tol, odd, work, nodes),
        LiteratureVariant::LogThree => log_base(n, LogForm::Three, form, tol, odd, work, nodes),
        LiteratureVariant::LogTwoQuarter => {
            log_base(n, LogForm::TwoQuarter, form, tol, odd, work, nodes)
        }
    }
}

fn factorial(n: u32, work: u32) -> Real {
    (2..=n).fold(Real::one(work), |acc, k| &acc * f64::from(k))
}

fn sign(k: u32) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

#[derive(Clone, Copy)]
enum LogForm {
    Two,
    Three,
    TwoQuarter,
}

/// The three `log`-type representations share the skeleton
/// `(−1)^{n−1} (2π)^{2n} / ((2n)! D) · (S + R − T)`.
fn log_base(
    n: u32,
    log_form: LogForm,
    form: Form,
    tol: &Real,
    odd: &[Real],
    work: u32,
    nodes: &mut Vec<ZetaNode>,
) -> Result<Real> {
    let two_pi = &Real::pi(work) * 2.0;
    let fact_2n = factorial(2 * n, work);
    let two = Real::from_i64(2, work);
    let three = Real::from_i64(3, work);
    let (den, log, series_scale, ratio, r_base) = match log_form {
        LogForm::Two => (
            &two.powi(2 * n as i32 + 1) - 1.0,
            Real::ln2(work),
            1.0,
            4.0,
            2.0,
        ),
        LogForm::Three => (
            &three.powi(2 * n as i32 + 1) - 1.0,
            three.ln(),
            2.0,
            9.0,
            3.0,
        ),
        LogForm::TwoQuarter => (
            &(&two.powi(4 * n as i32 + 1) + &two.powi(2 * n as i32)) - 1.0,
            Real::ln2(work),
            if form == Form::Printed { 1.0 } else { 2.0 },
            16.0,
            2.0,
        ),
    };
    let pre = &(&two_pi.powi(2 * n as i32) / &(&fact_2n * &den)) * sign(n - 1);
    let inner_tol = &(tol * 0.01) / &pre.abs().max_f64(1.0);

    let ratio_r = Real::from_f64(ratio, work);
    let series = interior_sum("even-zeta series", 0, &inner_tol, |k| {
        nodes.push(ZetaNode::Even(2 * k as u32));
        let z = even_zeta(k, work)?;
        Ok(&z / &(&ratio_r.powi(k as i32) * (k as f64 + f64::from(n))))
    })?;
    let s_part = &log + &(&series * series_scale);

    let base = Real::from_f64(r_base, work);
    let mut r_part = Real::zero(work);
    for j in 1..n {
        nodes.push(ZetaNode::Odd(2 * j + 1));
        let c = &(&base.powi(2 * j as i32) - 1.0) / &two_pi.powi(2 * j as i32);
        let t = &(&(&c * &odd[j as usize - 1]) / &factorial(2 * n - 2 * j, work)) * sign(j);
        r_part = &r_part + &t;
    }
    r_part = &r_part * &fact_2n;

    let t_part = match log_form {
        LogForm::Two => Real::zero(work),
        LogForm::Three | LogForm::TwoQuarter => {
            let (num, den_alpha) = match log_form {
                LogForm::Three => (1u32, 3u32),
                _ => (1, 4),
            };
            let alpha = &Real::one(work) / f64::from(den_alpha);
            let h_tol = &inner_tol * 0.01;
            let mut acc = Real::zero(work);
            for j in 1..=n {
                nodes.push(ZetaNode::Hurwitz {
                    s: 2 * j,
                    num,
                    den: den_alpha,
                });
                nodes.push(ZetaNode::Even(2 * j));
                let h = hurwitz_zeta(&Real::from_i64(2 * i64::from(j), work), &alpha, &h_tol)?;
                let z = zeta_even_closed(2 * i64::from(j), work)?;
                let p = two.powi(2 * j as i32);
                let bracket = match log_form {
                    LogForm::Three => &(&h * 2.0) - &(&(&three.powi(2 * j as i32) - 1.0) * &z),
                    _ => &h - &(&(&(&p * 0.5) * &(&p - 1.0)) * &z),
                };
                let t = &(&bracket
                    / &(&factorial(2 * n - 2 * j + 1, work) * &two_pi.powi(2 * j as i32 - 1)))
                    * sign(j);
                acc = &acc + &t;
            }
            let acc = &acc * &fact_2n;
            match log_form {
                LogForm::Three => &acc / &three.sqrt(),
                _ => acc,
            }
        }
    };
    if form == Form::Printed && matches!(log_form, LogForm::Two) {
        return Ok(&(&pre * &s_part) + &r_part);
    }
    Ok(&pre * &(&(&s_part + &r_part) - &t_part))
}

/// Gamma-ratio representation
///
/// `ζ(2m+1) = (−1)^m π^{2m}/(1 − 2^{−2m}) · [−log 2/Γ(2m+2) + Σ_{k≥1} (2 − 2^{1−2k}) ζ(2k) g(2k)]
///          + 1/(1 − 2^{−2m}) Σ_{k=1}^{m−1} (−1)^k (2^{2k−2m} − 1) π^{2k} ζ(2m−2k+1)/Γ(2k+2)`
///
/// with `g(x) = Γ(x)/Γ(x+2m+2)`. The main series decays only like
/// `k^{−2m−2}`, so it is split as `ζ(2k) = 1 + (ζ(2k) − 1)`. The parts with
/// `ζ(2k) − 1` or `2^{1−2k}` decay geometrically. The remaining
/// `2Σ_k g(2k)` is half of `Σ_{j≥2} g(j)`, which telescopes to
/// `1/((2m+1)(2m+2)!)`, plus half of the alternating `Σ_{j≥2} (−1)^j g(j)`,
/// which is accelerated.
fn gamma_ratio(
    m: u32,
    form: Form,
    tol: &Real,
    odd: &[Real],
    work: u32,
    nodes: &mut Vec<ZetaNode>,
) -> Result<Real> {
    let pi = Real::pi(work);
    let pi_sq = pi.square();
    let two = Real::from_i64(2, work);
    let quarter_m = two.powi(-2 * m as i32);
    let one_minus = 1.0 - &quarter_m;
    let pre = &(&pi_sq.powi(m as i32) / &one_minus) * sign(m);
    let inner_tol = &(tol * 0.01) / &pre.abs().max_f64(1.0);
    let k = 2 * m + 1;
    let g = |x: f64| -> Real {
        (0..=k)
            .fold(Real::one(work), |acc, i| &acc * (x + f64::from(i)))
            .recip()
    };

    let telescoped = (&factorial(k + 1, work) * f64::from(k)).recip();
    let alternating =
        accelerate_alternating_to_tol(|i| Cplx::from_real(g(i as f64 + 1.0)), &inner_tol)?
            .value
            .re;
    let g_even_sum = &(&telescoped + &alternating) * 0.5;

    let geometric = interior_sum("gamma-ratio geometric part", 1, &inner_tol, |kk| {
        nodes.push(ZetaNode::Even(2 * kk as u32));
        let z = zeta_even_closed(2 * kk as i64, work)?;
        let w = two.powi(1 - 2 * kk as i32);
        let gk = g(2.0 * kk as f64);
        // (2 − w)(ζ − 1) g − w g
        let t = &(&(&(2.0 - &w) * &(&z - 1.0)) - &w) * &gk;
        Ok(t)
    })?;
    let main =
        &(&(&g_even_sum * 2.0) + &geometric) - &(&Real::ln2(work) / &factorial(2 * m + 1, work));

    let mut second = Real::zero(work);
    for kk in 1..m {
        nodes.push(ZetaNode::Odd(2 * (m - kk) + 1));
        let coeff = &two.powi(2 * kk as i32 - 2 * m as i32) - 1.0;
        let odd_value = &odd[(m - kk) as usize - 1];
        let numerator = match form {
            Form::Corrected => &(&(&coeff * &pi_sq.powi(kk as i32)) * odd_value) * sign(kk),
            Form::Printed => &coeff - &(&pi_sq.powi(kk as i32) * odd_value),
        };
        let t = &numerator / &factorial(2 * kk + 1, work);
        second = &second + &t;
    }
    Ok(&(&pre * &main) + &(&second / &one_minus))
}
