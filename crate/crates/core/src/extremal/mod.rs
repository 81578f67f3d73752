//! Constructions, bound formulas, the exact Turán oracle and structural checks.

pub mod bounds;
pub mod checks;
pub mod constructions;
pub mod homogeneous;
pub mod oracle;

pub use bounds::{bound_sigma_lower, bound_tau_lower, critical_formula, phi2};
pub use checks::{
    certify_construction_free, missing_vs_non_m_check, tree_shadow_bound_check, Construction,
    FreenessReport, Inequality, MissingReport,
};
pub use constructions::{gen_c, gen_s, gen_standard};
pub use homogeneous::{
    centralized_check, classify, homogeneous_check, homogeneous_extract, Case, Classification,
    Extraction, HomogeneityReport,
};
pub use oracle::{turan_oracle, OracleResult};
