//! Adaptive quadrature at arbitrary precision.
//!
//! Each panel is integrated with a fixed 20-point Gauss–Legendre rule. Its
//! error estimate compares that value with the sum of the same rule on the
//! two halves, and the halves are what the caller gets back. Panels whose
//! estimate exceeds their share of the tolerance are bisected, one level at a
//! time, and each level is evaluated through [`Exec`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::cplx::Cplx;
use super::real::{bits_for, Real};
use crate::error::{Result, ZetaError};
use crate::exec::Exec;

const GL_POINTS: usize = 20;
/// Default panel budget for one adaptive integration.
pub const MAX_PANELS: usize = 200_000;

type NodeTable = Arc<Vec<(Real, Real)>>;

/// Gauss–Legendre nodes and weights on `[-1, 1]` at working precision,
/// memoized per (points, binary precision).
fn gauss_legendre(points: usize, digits: u32) -> NodeTable {
    static CACHE: OnceLock<Mutex<HashMap<(usize, u32), NodeTable>>> = OnceLock::new();
    let key = (points, bits_for(digits));
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("node cache poisoned").get(&key) {
        return Arc::clone(t);
    }
    let table = Arc::new(compute_gauss_legendre(points, digits));
    cache
        .lock()
        .expect("node cache poisoned")
        .insert(key, Arc::clone(&table));
    table
}

fn compute_gauss_legendre(n: usize, digits: u32) -> Vec<(Real, Real)> {
    let work = digits + 10;
    let eps = Real::pow10(-(work as i32) + 2, work);
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut x = Real::from_f64(guess, work);
        let deriv = loop {
            let (p, dp) = legendre_with_derivative(n, &x);
            let dx = &p / &dp;
            x = &x - &dx;
            if dx.abs() < eps {
                break legendre_with_derivative(n, &x).1;
            }
        };
        let w = 2.0 / &(&(1.0 - &x.square()) * &deriv.square());
        out.push((x.with_digits(digits), w.with_digits(digits)));
    }
    out
}

fn legendre_with_derivative(n: usize, x: &Real) -> (Real, Real) {
    let mut p0 = Real::one(x.digits());
    let mut p1 = x.clone();
    for k in 2..=n {
        let kf = k as f64;
        let p2 = &(&(&(x * &p1) * (2.0 * kf - 1.0)) - &(&p0 * (kf - 1.0))) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = &(&(x * &p1) - &p0) * (n as f64) / &(&x.square() - 1.0);
    (p1, dp)
}

fn gl_rule<G>(g: &G, a: &Real, b: &Real, nodes: &[(Real, Real)]) -> Result<Cplx>
where
    G: Fn(&Real) -> Cplx,
{
    let half = &(b - a) * 0.5;
    let mid = &(a + b) * 0.5;
    let mut acc = Cplx::zero(a.digits());
    for (x, w) in nodes {
        let t = &mid + &(&half * x);
        let v = g(&t);
        if !v.is_finite() {
            return Err(ZetaError::Accuracy {
                context: format!("non-finite integrand at {}", t.to_sci(12)),
                achieved: f64::INFINITY,
            });
        }
        acc = &acc + &v.scale(w);
    }
    Ok(acc.scale(&half))
}

struct Panel {
    a: Real,
    b: Real,
    left: Cplx,
    right: Cplx,
    err: Real,
}

impl Panel {
    fn value(&self) -> Cplx {
        &self.left + &self.right
    }
}

fn refine<G>(g: &G, a: Real, b: Real, whole: &Cplx, nodes: &[(Real, Real)]) -> Result<Panel>
where
    G: Fn(&Real) -> Cplx,
{
    let m = &(&a + &b) * 0.5;
    let left = gl_rule(g, &a, &m, nodes)?;
    let right = gl_rule(g, &m, &b, nodes)?;
    let err = (&(&left + &right) - whole).norm();
    Ok(Panel {
        a,
        b,
        left,
        right,
        err,
    })
}

/// Outcome of an adaptive integration: value and estimated absolute error.
#[derive(Debug, Clone)]
pub struct Quadrature {
    pub value: Cplx,
    pub err: Real,
    pub panels: usize,
}

/// Adaptive integral of `g` over `[a, b]` to absolute error `tol`, starting
/// from `initial` equal panels.
pub fn integrate_interval<G>(
    g: &G,
    a: &Real,
    b: &Real,
    tol: &Real,
    initial: usize,
    exec: Exec,
) -> Result<Quadrature>
where
    G: Fn(&Real) -> Cplx + Sync + Send,
{
    if !tol.is_positive() {
        return Err(ZetaError::Precondition("tolerance must be positive".into()));
    }
    let digits = a.digits().max(b.digits()).max(tol.digits());
    let nodes = gauss_legendre(GL_POINTS, digits);
    let initial = initial.max(1);
    let width = &(b - a) / (initial as f64);
    let bounds: Vec<(Real, Real)> = (0..initial)
        .map(|i| {
            let lo = a + &(&width * (i as f64));
            let hi = if i + 1 == initial {
                b.clone()
            } else {
                a + &(&width * ((i + 1) as f64))
            };
            (lo, hi)
        })
        .collect();
    let mut panels: Vec<Panel> = exec.try_map(&bounds, |(lo, hi)| {
        let whole = gl_rule(g, lo, hi, &nodes)?;
        refine(g, lo.clone(), hi.clone(), &whole, &nodes)
    })?;

    loop {
        let total_err: Real = panels
            .iter()
            .fold(Real::zero(digits), |acc, p| &acc + &p.err);
        if total_err <= *tol {
            let value = panels
                .iter()
                .fold(Cplx::zero(digits), |acc, p| &acc + &p.value());
            return Ok(Quadrature {
                value,
                err: total_err,
                panels: panels.len(),
            });
        }
        if panels.len() >= MAX_PANELS {
            return Err(ZetaError::accuracy(
                format!("adaptive quadrature ({} panels)", panels.len()),
                total_err.to_f64(),
            ));
        }
        let share = tol / (panels.len() as f64);
        let mut split: Vec<(Real, Real, Cplx)> = Vec::new();
        let mut keep: Vec<Panel> = Vec::with_capacity(panels.len());
        for p in panels {
            if p.err > share {
                let m = &(&p.a + &p.b) * 0.5;
                split.push((p.a.clone(), m.clone(), p.left.clone()));
                split.push((m, p.b.clone(), p.right.clone()));
            } else {
                keep.push(p);
            }
        }
        if split.is_empty() {
            // every panel is under its share, yet the total is not; bisect the worst
            let worst = keep
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).expect("finite errors"))
                .map(|(i, _)| i)
                .expect("at least one panel");
            let p = keep.swap_remove(worst);
            let m = &(&p.a + &p.b) * 0.5;
            split.push((p.a.clone(), m.clone(), p.left.clone()));
            split.push((m, p.b.clone(), p.right.clone()));
        }
        let children = exec.try_map(&split, |(lo, hi, whole)| {
            refine(g, lo.clone(), hi.clone(), whole, &nodes)
        })?;
        keep.extend(children);
        keep.sort_by(|x, y| x.a.partial_cmp(&y.a).expect("finite bounds"));
        panels = keep;
    }
}

/// Integral over `(0, ∞)` of `x^damping · f(x)` to absolute error `tol`.
///
/// `(0, 1]` is integrated in `u = ln x`. `[1, ∞)` is integrated in
/// `v = 1/x`. The `u`-range is cut at a point `U` below which the
/// integrand's tail either falls under the tolerance, or is measurably a
/// single exponential `C·e^{λu}`; in the latter case the tail `g(U)/λ` is
/// added analytically.
pub fn integrate_semiaxis<F>(f: F, damping: &Real, tol: &Real) -> Result<Cplx>
where
    F: Fn(&Real) -> Cplx + Sync + Send,
{
    integrate_semiaxis_with(f, damping, tol, Exec::default())
}

pub fn integrate_semiaxis_with<F>(f: F, damping: &Real, tol: &Real, exec: Exec) -> Result<Cplx>
where
    F: Fn(&Real) -> Cplx + Sync + Send,
{
    if damping.is_negative() {
        return Err(ZetaError::Precondition(
            "damping must be non-negative".into(),
        ));
    }
    let digits = tol.digits();
    let one_plus_d = damping + 1.0;
    let g_inner = |u: &Real| {
        let x = u.exp();
        f(&x).scale(&(u * &one_plus_d).exp())
    };
    let two_plus_d = damping + 2.0;
    let g_outer = |v: &Real| {
        if v.is_zero() {
            return Cplx::zero(digits);
        }
        let x = v.recip();
        f(&x).scale(&(-(&v.ln() * &two_plus_d)).exp())
    };

    let quarter = tol * 0.25;
    let (cut, tail) = locate_left_cut(&g_inner, &quarter, digits)?;
    let zero = Real::zero(digits);
    let panels = ((cut.abs().to_f64() / 2.0).ceil() as usize).clamp(4, 4096);
    let inner = integrate_interval(&g_inner, &cut, &zero, &quarter, panels, exec)?;
    let outer = integrate_interval(&g_outer, &zero, &Real::one(digits), &(tol * 0.5), 8, exec)?;
    Ok(&(&inner.value + &tail) + &outer.value)
}

/// Furthest left cut tried before giving up.
const MAX_LEFT_CUT: f64 = 1.0e7;

/// Chooses the left end `U < 0` of the `u`-range and the tail estimate for
/// `(-∞, U]`.
fn locate_left_cut<G>(g: &G, tol: &Real, digits: u32) -> Result<(Real, Cplx)>
where
    G: Fn(&Real) -> Cplx,
{
    let mut u = Real::from_i64(-8, digits);
    loop {
        let gu = g(&u);
        let mag = gu.norm();
        if mag.is_zero() || mag < *tol {
            // require the decay to persist one unit further out
            let further = g(&(&u - 1.0)).norm();
            if further <= mag || further < *tol {
                return Ok((u, Cplx::zero(digits)));
            }
        }
        if let Some(tail) = exponential_tail(g, &u, tol) {
            return Ok((u, tail));
        }
        let next = &u * 2.0;
        if next.abs().gt_f64(MAX_LEFT_CUT) {
            return Err(ZetaError::accuracy(
                "semi-axis quadrature: integrand does not decay as x -> 0",
                mag.to_f64(),
            ));
        }
        u = next;
    }
}

/// Tail `∫_{-∞}^{U} g` when `g` behaves as a single decaying exponential on
/// a short stencil left of `U`, accurate to `tol`.
fn exponential_tail<G>(g: &G, u: &Real, tol: &Real) -> Option<Cplx>
where
    G: Fn(&Real) -> Cplx,
{
    let h = 0.125;
    let g0 = g(u);
    let g1 = g(&(u - h));
    let g2 = g(&(u - 2.0 * h));
    if g0.is_zero() || g1.is_zero() || g2.is_zero() {
        return None;
    }
    let lambda1 = (&g0 / &g1).ln().scale(&Real::from_f64(1.0 / h, u.digits()));
    let lambda2 = (&g1 / &g2).ln().scale(&Real::from_f64(1.0 / h, u.digits()));
    if !lambda1.re.is_positive() {
        return None;
    }
    let tail = &g0 / &lambda1;
    let lam_sq = lambda1.norm().square();
    let drift = &(&(&lambda1 - &lambda2).norm() * &g0.norm()) / &lam_sq;
    // drift bounds the error of the single-exponential model over the tail
    if &drift * 64.0 <= *tol {
        Some(tail)
    } else {
        None
    }
}
