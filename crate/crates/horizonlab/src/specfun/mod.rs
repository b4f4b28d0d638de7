//! Complex special functions backing the closed-form oracles: log-Gamma, the
//! Gauss hypergeometric function and Legendre functions of complex degree.

mod gamma;
mod hyp2f1;
mod legendre;

pub use gamma::{gamma, gamma_ln, gamma_recip};
pub use hyp2f1::hyp2f1;
pub use legendre::{ferrers_p, legendre_p_x, legendre_q};
