//! Lower-bound graph generators.

mod chappell_gimbel;
mod gnp;
mod weighted;

pub use chappell_gimbel::{chappell_gimbel_parts, construct_chappell_gimbel, CgParams};
pub use gnp::sample_gnp_half;
pub use weighted::{
    block_count, eps_hat, eps_hat_for_blocks, homogeneity_threshold_weighted, sample_weighted,
    weighted_params, WeightedBlockParams,
};
