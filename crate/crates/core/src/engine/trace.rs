use serde::{Deserialize, Serialize};

use super::compute::compute_pi_traced;
use super::{EngineConfig, EngineError};
use crate::abelian::CanonicalGroup;
use crate::spaces::SpaceId;

/// One derivation step. Sub-derivations used by certificates sit one level deeper.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub depth: usize,
    pub rule: String,
    pub citation: String,
    pub before: Vec<String>,
    pub after: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationTrace {
    pub space: SpaceId,
    pub dim: u32,
    pub config: EngineConfig,
    pub steps: Vec<Step>,
    pub result: CanonicalGroup,
}

impl DerivationTrace {
    /// Indented plain-text rendering.
    pub fn render(&self) -> String {
        let mut out = format!("pi_{}({})\n", self.dim, self.space);
        for s in &self.steps {
            let pad = "  ".repeat(s.depth + 1);
            out.push_str(&format!("{pad}[{}] {}\n", s.rule, s.citation));
            for b in &s.before {
                out.push_str(&format!("{pad}    {b}\n"));
            }
            out.push_str(&format!("{pad}    => {}\n", s.after));
        }
        out.push_str(&format!("result: {}\n", self.result.pretty()));
        out
    }
}

/// Re-runs the derivation recorded in `t` and checks it step for step.
pub fn replay(t: &DerivationTrace) -> Result<CanonicalGroup, EngineError> {
    let again = compute_pi_traced(&t.space, t.dim, &t.config)?;
    if let Some(i) = (0..t.steps.len().max(again.steps.len())).find(|&i| t.steps.get(i) != again.steps.get(i)) {
        return Err(EngineError::Replay(format!("step {i} differs")));
    }
    if again.result != t.result {
        return Err(EngineError::Replay(format!("result {} != recorded {}", again.result, t.result)));
    }
    Ok(again.result)
}
