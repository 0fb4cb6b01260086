//! High-precision evaluators for the Riemann zeta function.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`] — arbitrary-precision scalars, series summation,
//!   alternating-series acceleration, adaptive quadrature, digamma and
//!   Hurwitz zeta.
//! * [`primes`] — segmented sieve and an incremental prime stream.
//! * [`zeta`] — reference evaluators: Dirichlet series, eta series, Euler
//!   product, Bernoulli closed forms and an Euler–Maclaurin oracle.
//! * [`prime_tail`] — the prime sum `t(s) = Σ_p 1/(p^s − 1)` and its
//!   closed-form approximation.
//! * [`odd`] — the f-ratio, closed-form odd-argument approximations and
//!   classical rapidly convergent representations.
//! * [`line_one`] — `ζ(1+ib)` and numeric audits of the identities used to
//!   reach it.
//! * [`forensics`] — per-formula comparison of printed identities against
//!   oracles.
//!
//! Every loop that fans out over rows, primes or panels goes through
//! [`Exec`], which selects rayon or a sequential loop.

pub mod error;
pub mod exec;
pub mod forensics;
pub mod line_one;
pub mod numerics;
pub mod odd;
pub mod prime_tail;
pub mod primes;
pub mod zeta;

pub use error::{Result, ZetaError};
pub use exec::Exec;
pub use numerics::{Cplx, Rat, Real, SeriesResult};
