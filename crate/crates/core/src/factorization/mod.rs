//! Outer functions, Pythagorean mates and factorizations.

mod outer;
mod pair;
mod stability;

pub use outer::{outer_from_log_modulus, outer_power};
pub use pair::{
    non_extremality_margin, non_extremality_margin_with, pythagorean_factorize, pythagorean_factorize_sampled,
    pythagorean_mate, quotient_mate_sampled, BlaschkeSpec, Factorization, PythagoreanPair, EXTREME_THRESHOLD,
    MARGIN_FLOOR,
};
pub use stability::{stability_experiment, StabilityRow, StabilityTable};
