//! Odd-argument zeta values.
//!
//! * [`f_ratio`] — the linking constant
//!   `f(s) = [t(2s)/ζ(2s)] / [t(2s+1)/ζ(2s+1)]`, which tends to 2.
//! * [`zeta_odd_closed`] — `ζ(2s+1)` solved from that relation with the
//!   closed-form prime tail on both sides; it needs only `ζ(2s)` and `f`.
//! * [`zeta_odd_prime`] — the same relation with true prime sums.
//! * [`zeta_known_ref`] — classical fast series for `ζ(3)`, `ζ(5)`, `ζ(7)`.
//! * [`zeta_odd_literature`] — four classical representations that recurse
//!   on lower odd values.

mod approx;
mod known;
mod literature;
mod trace;

pub use approx::{
    f_ratio, odd_error_table, odd_error_table_with, zeta_odd_bernoulli_free, zeta_odd_closed,
    zeta_odd_closed_traced, zeta_odd_prime, EvalRow, FMode, FRatioSample,
};
pub use known::zeta_known_ref;
pub use literature::{
    zeta_odd_literature, zeta_odd_literature_printed, zeta_odd_literature_traced, LiteratureVariant,
};
pub use trace::ZetaNode;
