//! `ζ(1+ib)` and numeric audits of the chain of identities that leads to it.
//!
//! * [`zeta_line_one`] — accelerated alternating series, the reference
//!   method on the line.
//! * [`zeta_line_one_integral`] — the Mellin integral of the digamma gap,
//!   with its prefactor fixed against the series.
//! * [`zeta_line_one_flat`] — the Abel-regularized series obtained when the
//!   factor `n^{−1}` is dropped; it is *not* `ζ(1+ib)`.
//! * [`mellin_check`], [`digamma_gap_check`], [`hurwitz_expansion_check`] —
//!   the individual identities, each against an independent evaluation.
//! * [`eta_zero_scan`], [`residue_probe`] — behaviour on the line
//!   `b = 2kπ/ln 2` and near the pole.
//! * [`uniform_norm_probe`] — grid suprema against analytic decay bounds.

mod audit;
mod eval;
mod norm;

pub use audit::{
    digamma_gap_check, eta_zero_scan, hurwitz_expansion, hurwitz_expansion_check, mellin_check,
    residue_probe, EtaZero,
};
pub use eval::{
    digamma_gap, zeta_line_one, zeta_line_one_flat, zeta_line_one_integral,
    zeta_line_one_integral_with, LineOneMethod, LineOnePoint, DEGENERACY_THRESHOLD, FLAT_AGREEMENT,
    INTEGRAL_B_RANGE, POLE_THRESHOLD,
};
pub use norm::{uniform_norm_probe, NormLemma, NormProbe};
