//! The mate equation, membership diagnostics and multiplier certification
//! for de Branges–Rovnyak spaces with non-extreme symbol.

mod mate;
mod multiplier;

pub use mate::{
    membership_diagnostic, solve_mate, MateSolution, Membership, MembershipConfig, MembershipReport, CONDITION_CAP,
};
pub use multiplier::{
    lotto_sarason_check, mate_linearity_residual, toeplitz_preimage, MultiplierConfig, MultiplierReport,
    MultiplierStep, MultiplierVerdict, Preimage,
};
