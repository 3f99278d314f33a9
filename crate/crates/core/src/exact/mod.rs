//! Exact arithmetic substrate: rationals, multivariate polynomials over Q in
//! {x, lam, mu1, mu2, tau}, reduced fractions with the derivation d/dx, and
//! the gcd / square-free / resultant kernels.
//!
//! Every value is immutable after construction and every operation is pure.

mod det;
mod frac;
mod gcd;
mod monomial;
mod mpoly;
mod rational;
mod vars;

pub use det::{bareiss_det, uni_resultant};
pub use frac::{mpoly_subst, Frac};
pub use gcd::{mpoly_gcd, mpoly_lcm, squarefree_part};
pub use monomial::Monomial;
pub use mpoly::{MPoly, PolyError};
pub use rational::{rat, rat_int, rat_gcd, Rational};
pub use vars::{MonoOrder, Var};
