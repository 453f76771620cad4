//! Exact computations with polynomial integro-differential operators and
//! brute-force checks of quotient-ring criteria on finite rings.
//!
//! The crate has two halves. [`i1`], [`regularity`] and [`ore`] compute in
//! the algebra `I₁ = K⟨∂, ∫, x⟩` over `K = ℚ` and in the skew field of
//! fractions of the Weyl algebra. [`finring`], [`finloc`] and [`criteria`]
//! work with rings given by addition and multiplication tables.

pub mod criteria;
pub mod finloc;
pub mod finring;
pub mod guards;
pub mod i1;
pub mod numeric;
pub mod ore;
pub mod regularity;

mod error;

pub use error::Error;
pub use guards::Guards;
