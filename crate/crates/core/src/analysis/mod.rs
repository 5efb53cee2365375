//! Minimum distances, falsely-decodable statistics and list-size bounds.

pub mod bounds;
pub mod mindist;
pub mod stats;

pub use bounds::{
    asymptotic_exponent, binomial_cdf, binomial_cdf_exact, bound_chain, kl_divergence,
    mceliece_swanson_bound, mceliece_swanson_exact, BoundChain,
};
pub use mindist::{ball_count, brute_min_distance, min_pairwise_distance, EvaluationCode, ENUMERATION_BUDGET};
pub use stats::{falsely_decodable_stats, ListSizeStats, StatsMode};
