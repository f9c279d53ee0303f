use super::five_term::{five_term, ExtensionProblem};
use super::resolve::{resolve_extension, Resolution};
use super::trace::{DerivationTrace, Step};
use super::{EngineConfig, EngineError};
use crate::abelian::{subtract_summand, CanonicalGroup};
use crate::spaces::{hilton_cross_terms, SpaceId};
use crate::toda::pi_sphere;

fn step(depth: usize, rule: &str, citation: &str, before: Vec<String>, after: String) -> Step {
    Step { depth, rule: rule.to_string(), citation: citation.to_string(), before, after }
}

/// Builds and resolves the pinch-sequence problem for a space given by a cofibration.
pub(crate) fn solve_direct(
    space: &SpaceId,
    m: u32,
    cfg: &EngineConfig,
    depth: usize,
    steps: &mut Vec<Step>,
) -> Result<(Resolution, ExtensionProblem), EngineError> {
    let p = five_term(&cfg.toda(), space, m)?;
    let fiber = p.fiber.canonical_form();
    steps.push(step(
        depth,
        "sequence",
        "exact sequence of the pinch fibration",
        vec![
            format!("pi_{m}({space})"),
            format!("f = {}", p.cofibration.describe()),
            format!("fiber skeleton {}", p.skeleton),
            format!("pi_{m}(F) = <{}> = {}", p.fiber.generators.join(", "), fiber.pretty()),
            format!("ker generated by {}", p.ker.generators.join(", ")),
        ],
        format!("0 -> {} -> pi_{m} -> {} -> 0", p.coker_group().pretty(), p.ker_group().pretty()),
    ));
    let res = resolve_extension(&p, cfg, depth, steps)?;
    Ok((res, p))
}

fn compute_inner(space: &SpaceId, m: u32, cfg: &EngineConfig, depth: usize, steps: &mut Vec<Step>) -> Result<CanonicalGroup, EngineError> {
    space.validate()?;
    if let SpaceId::Sphere { d } = *space {
        let g = pi_sphere(m, d)?.presented().canonical_form();
        steps.push(step(depth, "catalog", "homotopy of spheres", vec![format!("pi_{m}(S^{d})")], g.pretty()));
        return Ok(g);
    }
    if m < space.bottom() {
        steps.push(step(depth, "connectivity", "below the bottom cell", vec![format!("pi_{m}({space})")], "0".into()));
        return Ok(CanonicalGroup::trivial());
    }
    if let Some(parent) = space.wedge_parent() {
        let parts = parent.wedge_reduction();
        let cross = hilton_cross_terms(&parts, m)?;
        let total = compute_inner(&parent, m, cfg, depth + 1, steps)?;
        let mut known = Vec::new();
        for s in parts.iter().skip(1).chain(&cross) {
            known.push(compute_inner(s, m, cfg, depth + 1, steps)?);
        }
        let known_sum = CanonicalGroup::sum_all(&known);
        let g = subtract_summand(&total, &known_sum)?;
        let names: Vec<String> = parts.iter().skip(1).chain(&cross).map(|s| s.to_string()).collect();
        steps.push(step(
            depth,
            "extract",
            "wedge decomposition and Hilton summands",
            vec![format!("pi_{m}({parent}) = {}", total.pretty()), format!("minus pi_{m} of {} = {}", names.join(", "), known_sum.pretty())],
            g.pretty(),
        ));
        return Ok(g);
    }
    Ok(solve_direct(space, m, cfg, depth, steps)?.0.group)
}

/// `pi_m(space)` with its derivation.
pub fn compute_pi_traced(space: &SpaceId, m: u32, cfg: &EngineConfig) -> Result<DerivationTrace, EngineError> {
    if space.max_param() > cfg.exponent_cap {
        return Err(EngineError::Range(format!("{space}: parameter above the cap {}", cfg.exponent_cap)));
    }
    let mut steps = Vec::new();
    let result = compute_inner(space, m, cfg, 0, &mut steps)?;
    Ok(DerivationTrace { space: *space, dim: m, config: cfg.clone(), steps, result })
}

pub fn compute_pi(space: &SpaceId, m: u32, cfg: &EngineConfig) -> Result<CanonicalGroup, EngineError> {
    Ok(compute_pi_traced(space, m, cfg)?.result)
}
