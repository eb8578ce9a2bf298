//! Exact analysis of correlated perfect equilibria in finite normal-form games.
//!
//! A correlated equilibrium is *correlated perfect* when it is the limit of
//! completely mixed correlated strategies along which every recommendation in
//! its product support remains a best response. The test depends only on the
//! product support and is decided by a single linear program over deviation
//! plans ([`certify_support`]). Either outcome comes with a certificate: a
//! refuting dual vector with strictly positive aggregate gain, or a weighting
//! `μ` from which an explicit supporting sequence is built ([`find_mu`]).
//!
//! All arithmetic is exact ([`Rational`]); there is no floating point.

pub mod certify;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod game;
pub mod lp;
pub mod pdce;
pub mod poly;
pub mod random;
pub mod rational;
pub mod sequence;

pub use certify::{
    aggregate_gain, certify_support, deviation_gain, find_dual_violation, is_cpe, is_dual_vector, is_restricted,
    CpeVerdict, DeviationPlan, DualVectorProfile, GainWitness, Refutation,
};
pub use classify::{
    ce_with_exact_support, classify_all_supports, maximal_cpe_supports, maximal_elements, SupportClassification,
    DEFAULT_SUPPORT_CAP,
};
pub use error::{Error, Result};
pub use game::{
    conditional_deviation_value, find_ce_violation, is_completely_mixed, is_correlated_equilibrium, marginal,
    product_distribution, product_support, weakly_dominated_strategies, CeViolation, CorrelatedStrategy, Game,
    MixedProfile, ProductSupport, Shape,
};
pub use lp::{FarkasCertificate, Feasibility, LinearProgram, LpOutcome, Relation};
pub use pdce::{pdce_check, perceived_distribution, PdceReport, PerceivedDistribution, TrembleFamily, TrembleGain};
pub use poly::EpsPolynomial;
pub use rational::Rational;
pub use sequence::{
    find_mu, find_sequence_violation, supporting_sequence_term, verify_parametric_sequence, verify_sequence_term,
    MuCertificate, MuOutcome, MuVector, ParametricDistribution, ParametricReport,
};
