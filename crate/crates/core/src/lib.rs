//! Exact continued fractions of formal Laurent series in `Q((T^{-1}))`.
//!
//! The crate is organized bottom-up:
//!
//! - [`rat`] and [`poly`]: exact rationals and dense polynomials over them.
//! - [`laurent`]: truncated series `Σ c_i T^{-i}` backed by lazy sources.
//! - [`cf`]: polynomial Euclid, continuants, convergents and certification.
//! - [`word`]: the two-letter word `W` and the series `θ = Σ w_i T^{-i}`.
//! - [`theorem`]: closed forms for the partial quotients of `θ` and the
//!   identities that tie them to the expansion.
//! - [`cli`]: the command-line driver.

pub mod cf;
pub mod cli;
pub mod laurent;
pub mod poly;
pub mod rat;
pub mod theorem;
pub mod word;

pub use cf::{certify_by_doubling, continuant, expand, CfError, CfExpansion, Precision};
pub use laurent::{CoefficientSource, TruncatedSeries};
pub use poly::Poly;
pub use rat::Rat;
pub use word::theta_source;
