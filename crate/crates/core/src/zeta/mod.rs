//! Classical reference evaluators of `ζ`.

pub mod bernoulli;
mod closed;
mod oracle;
mod series;

pub use bernoulli::{bernoulli, BernoulliTable, Convention};
pub use closed::{zeta_even_closed, zeta_even_recurrence, zeta_negative_int};
pub use oracle::{zeta_euler_maclaurin, zeta_oracle, ORACLE_CORRECTIONS};
pub use series::{
    euler_product, euler_product_with, zeta_dirichlet, zeta_eta_real, ETA_DEGENERACY,
};
pub(crate) use series::{integer_exponent, recip_prime_power_minus_one};
