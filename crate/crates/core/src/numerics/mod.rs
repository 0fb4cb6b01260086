//! Arbitrary-precision scalars and the shared evaluation machinery.

mod cplx;
mod digamma;
mod euler_maclaurin;
mod hurwitz;
mod quad;
mod rat;
mod real;
mod series;

pub use cplx::Cplx;
pub use digamma::digamma;
pub(crate) use euler_maclaurin::em_tail;
pub use hurwitz::hurwitz_zeta;
pub use quad::{
    integrate_interval, integrate_semiaxis, integrate_semiaxis_with, Quadrature, MAX_PANELS,
};
pub use rat::Rat;
pub use real::{Real, DEFAULT_DIGITS, MIN_DIGITS};
pub use series::{
    accelerate_alternating, accelerate_alternating_to_tol, order_for_digits, sum_series,
    SeriesResult, MAX_ACCEL_ORDER,
};
