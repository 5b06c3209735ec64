//! Finitely presented groups: the orbifold braid-group presentations,
//! coset enumeration and abelianization.

mod abelian;
mod central;
mod enumerate;
mod presentation;
mod spec;
mod word;

pub use abelian::{abelianization, smith_diagonal, AbelianInvariants};
pub use central::{central_extension_check, CentralExtensionReport, CheckStatus};
pub use enumerate::{
    enumerate, todd_coxeter, CosetTable, Enumeration, EnumerationStats, Outcome, Strategy,
    DEFAULT_MAX_COSETS,
};
pub use presentation::{
    presentation_b1, presentation_b2_abc, presentation_b2_abcd, presentation_bn,
    presentation_triangle, MixedConvention, Presentation,
};
pub use spec::GroupSpec;
pub use word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("braid groups need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("weight list must not be empty")]
    EmptyWeights,
    #[error("weights must be positive")]
    BadWeight,
    #[error("generator name {0:?} must be nonempty lowercase without spaces")]
    BadGeneratorName(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
}
