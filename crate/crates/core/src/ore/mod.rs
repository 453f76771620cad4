//! The skew field `Q(A₁)` as left fractions over `K(H)[∂^{±1}; σ]`, and
//! the maps from `I₁` into it.

mod euclid;
mod fraction;
mod skew;

pub use euclid::{clear_left_denominators, divmod_right, lclm_gcrd, LclmGcrd};
pub use fraction::{
    lift_to_i1, localize_i1, project_a1d, reexpress_with_regular_denominator, SkewFraction,
    DEFAULT_RFDEG_GUARD,
};
pub use skew::{SkewCoeff, SkewLaurent, SkewLaurentPolyH, SkewLaurentRF};
