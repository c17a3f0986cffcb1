//! Randomized law-verification campaigns for sequential effect algebras:
//! seeded case generators, entropy-law and axiom campaigns, the log-sum
//! inequality fuzzer, Bayes-property probes, and scripted scenario
//! reproductions.
//!
//! Determinism contract: every campaign derives one independent RNG stream
//! per trial from (master seed, trial index), so reports are bit-identical
//! regardless of worker count or scheduling, and any failing trial can be
//! reproduced standalone from its index.

pub mod axioms;
pub mod bayes;
pub mod campaign;
pub mod gen;
pub mod logsum;
pub mod scenario;

pub use axioms::{check_sea_axioms, AxiomsConfig, AxiomsReport};
pub use bayes::check_bayes;
pub use campaign::{
    run_theorem_campaign, CampaignConfig, CampaignReport, ConfigError, InstanceKind, LawStats,
};
pub use gen::{
    gen_random_boolean_partition, gen_random_density, gen_random_effect,
    gen_random_effect_partition, gen_random_fuzzy_partition, gen_random_projection, trial_rng,
    GenError,
};
pub use logsum::{check_log_sum, run_logsum_fuzz, LogSumConfig, LogSumReport};
pub use scenario::{scenario_example_2_3, scenario_nondistributivity, ScenarioRecord};
