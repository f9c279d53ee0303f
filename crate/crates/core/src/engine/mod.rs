//! Exact-sequence machinery: fiber groups, boundary maps, extension problems
//! and the certificates that resolve them.

mod compute;
mod five_term;
mod homs;
mod resolve;
mod trace;

pub use compute::{compute_pi, compute_pi_traced};
pub use five_term::{five_term, ExtensionProblem};
pub use homs::{boundary_hom, induced_hom, pi_of_skeleton, suspend_wedge, FiberPi};
pub use resolve::{comparisons, resolve_extension, Comparison, ComparisonKind, Resolution};
pub use trace::{replay, DerivationTrace, Step};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::{AlgebraError, CanonicalGroup};
use crate::spaces::{SpaceError, SpaceId};
use crate::toda::{Toda, TodaError};

/// Extension certificates, tried in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rule {
    R1TrivialKernel,
    R2TrivialCokernel,
    R3Split,
    R4Suspension,
    R5Comparison,
    R6Literature,
    R7Enumeration,
}

impl Rule {
    pub const ALL: [Rule; 7] = [
        Rule::R1TrivialKernel,
        Rule::R2TrivialCokernel,
        Rule::R3Split,
        Rule::R4Suspension,
        Rule::R5Comparison,
        Rule::R6Literature,
        Rule::R7Enumeration,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Rule::R1TrivialKernel => "R1",
            Rule::R2TrivialCokernel => "R2",
            Rule::R3Split => "R3",
            Rule::R4Suspension => "R4",
            Rule::R5Comparison => "R5",
            Rule::R6Literature => "R6",
            Rule::R7Enumeration => "R7",
        }
    }

    /// The rules that prove a non-trivial splitting.
    pub fn splitting_certificates() -> [Rule; 3] {
        [Rule::R4Suspension, Rule::R5Comparison, Rule::R6Literature]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    /// Sign in `[i4, i4] = sign * (2 nu4 - Sigma nu')`.
    pub square_sign: i64,
    pub disabled: BTreeSet<Rule>,
    /// Largest finite parameter `r`, `s` accepted.
    pub exponent_cap: u32,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { square_sign: 1, disabled: BTreeSet::new(), exponent_cap: 64 }
    }
}

impl EngineConfig {
    pub fn with_sign(mut self, sign: i64) -> Self {
        self.square_sign = sign;
        self
    }

    pub fn without(mut self, rules: impl IntoIterator<Item = Rule>) -> Self {
        self.disabled.extend(rules);
        self
    }

    pub fn enabled(&self, rule: Rule) -> bool {
        !self.disabled.contains(&rule)
    }

    pub fn toda(&self) -> Toda {
        Toda::with_sign(self.square_sign)
    }
}

/// An extension problem no enabled certificate could settle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbiguousReport {
    pub space: SpaceId,
    pub dim: u32,
    pub coker: CanonicalGroup,
    pub ker: CanonicalGroup,
    pub candidates: Vec<CanonicalGroup>,
}

impl std::fmt::Display for AmbiguousReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let c: Vec<String> = self.candidates.iter().map(|g| g.pretty()).collect();
        write!(
            f,
            "pi_{}({}) is an extension of {} by {}; candidates {{{}}}",
            self.dim,
            self.space,
            self.ker.pretty(),
            self.coker.pretty(),
            c.join(", ")
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Toda(#[from] TodaError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("out of range: {0}")]
    Range(String),
    #[error("ambiguous extension: {0}")]
    Ambiguous(Box<AmbiguousReport>),
    #[error("exactness audit failed: {0}")]
    Audit(String),
    #[error("certificate inconsistent with enumeration: {0}")]
    Certificate(String),
    #[error("replay mismatch: {0}")]
    Replay(String),
}

impl EngineError {
    /// Whether the failure means "outside the supported range" rather than a defect.
    pub fn is_range(&self) -> bool {
        matches!(
            self,
            EngineError::Range(_)
                | EngineError::Toda(TodaError::OutOfCatalog(_))
                | EngineError::Toda(TodaError::NonSuspension(_))
                | EngineError::Space(SpaceError::UncataloguedCrossTerm(..))
        )
    }
}
