use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::compute::solve_direct;
use super::five_term::ExtensionProblem;
use super::homs::suspend_wedge;
use super::trace::Step;
use super::{AmbiguousReport, EngineConfig, EngineError, Rule};
use crate::abelian::{extension_candidates, CanonicalGroup, GroupHom, IntMatrix};
use crate::james::CofibrationSpec;
use crate::spaces::{ExtNat, SpaceId};
use crate::toda::{literature_fact, Class, Element, Toda};

const MAX_DEPTH: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub group: CanonicalGroup,
    pub rule: Rule,
    /// Whether the sequence is known to split.
    pub split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComparisonKind {
    /// A map of cofibrations: `mu_x: X' -> X` and `mu_y: Y' -> Y` with `f mu_x = mu_y f'`.
    Cofibration { mu_x: Vec<Element>, mu_y: Vec<Element> },
    /// Precomposition with `eta` from one dimension lower.
    Eta,
}

/// A problem that maps into the one being solved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub source: SpaceId,
    pub source_dim: u32,
    pub kind: ComparisonKind,
}

impl Comparison {
    fn describe(&self) -> String {
        match &self.kind {
            ComparisonKind::Eta => format!("o eta from pi_{}({})", self.source_dim, self.source),
            ComparisonKind::Cofibration { mu_x, mu_y } => {
                let r = |v: &[Element]| v.iter().map(|e| e.render()).collect::<Vec<_>>().join(", ");
                format!("from pi_{}({}) via ({}; {})", self.source_dim, self.source, r(mu_x), r(mu_y))
            }
        }
    }
}

fn incl(dims: &[u32], idx: usize) -> Element {
    Element::inclusion(dims, idx)
}

/// The catalogued comparison maps into `pi_m(space)`.
pub fn comparisons(space: &SpaceId, m: u32) -> Vec<Comparison> {
    let cof = |source: SpaceId, mu_x: Vec<Element>, mu_y: Vec<Element>| Comparison {
        source,
        source_dim: m,
        kind: ComparisonKind::Cofibration { mu_x, mu_y },
    };
    let wedge = [5, 4];
    let via_j2 = |r: ExtNat| cof(SpaceId::Moore { k: 4, r }, vec![incl(&wedge, 1)], vec![incl(&wedge, 1)]);
    match *space {
        SpaceId::Moore { k: 4, r: ExtNat::Fin(r) } if r >= 2 && m == 8 => {
            let deg = incl(&[4], 0).scale(&(BigInt::one() << (r - 1)));
            vec![cof(SpaceId::Moore { k: 4, r: ExtNat::Fin(1) }, vec![incl(&[4], 0)], vec![deg])]
        }
        SpaceId::Moore { k, r: ExtNat::Fin(r) } if k >= 5 && r >= 2 && m == k + 3 => {
            vec![Comparison { source: *space, source_dim: m - 1, kind: ComparisonKind::Eta }]
        }
        SpaceId::Crs { n: 4, r, .. } if m == 7 => vec![via_j2(r)],
        SpaceId::Crs { n: 4, r: ExtNat::Inf, .. } if m == 8 => vec![via_j2(ExtNat::Inf)],
        SpaceId::Crs { n: 4, r, s: ExtNat::Fin(1) } if m == 8 => vec![via_j2(r)],
        SpaceId::Crs { n: 4, r, s } if m == 8 => {
            let top = match s {
                ExtNat::Fin(s) => incl(&wedge, 0).scale(&(BigInt::one() << (s - 1))),
                ExtNat::Inf => Element::zero(5, &wedge),
            };
            let id = vec![incl(&wedge, 0), incl(&wedge, 1)];
            vec![cof(SpaceId::Crs { n: 4, r, s: ExtNat::Fin(1) }, id, vec![top, incl(&wedge, 1)])]
        }
        _ => Vec::new(),
    }
}

/// `kappa` restricted to kernels: whether it is defined, injective, and onto.
struct KappaCheck {
    injective: bool,
    iso: bool,
}

fn check_kappa(
    top: &ExtensionProblem,
    bot: &ExtensionProblem,
    kappa: impl Fn(&Element) -> Result<Element, EngineError>,
) -> Result<Option<KappaCheck>, EngineError> {
    let mut cols = Vec::new();
    for e in top.kernel_elements() {
        let img = kappa(&e)?;
        if !bot.in_kernel(&img)? {
            return Ok(None);
        }
        cols.push(img.coords(&bot.sigma_x)?);
    }
    let h = GroupHom::new(
        top.ker.clone(),
        bot.sigma_x.presented(),
        IntMatrix::from_columns(bot.sigma_x.basis.len(), &cols),
    )?;
    let injective = h.is_injective();
    let target = bot.ker_group();
    let iso = injective && target.is_finite() && h.image() == target;
    Ok(Some(KappaCheck { injective, iso }))
}

/// Verifies `f mu_x = mu_y f'` on every summand of `X'`.
fn square_commutes(
    toda: &Toda,
    src: &CofibrationSpec,
    dst: &CofibrationSpec,
    mu_x: &[Element],
    mu_y: &[Element],
) -> Result<bool, EngineError> {
    let my = CofibrationSpec::new(src.y_dims.clone(), dst.y_dims.clone(), mu_y.to_vec())?;
    for (b, fb) in src.components.iter().enumerate() {
        let left = dst.apply(toda, &mu_x[b])?;
        let right = my.apply(toda, fb)?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

struct Ctx<'a> {
    p: &'a ExtensionProblem,
    cfg: &'a EngineConfig,
    depth: usize,
    steps: &'a mut Vec<Step>,
}

impl Ctx<'_> {
    fn sub(&mut self, space: &SpaceId, m: u32) -> Option<(Resolution, ExtensionProblem)> {
        if self.depth >= MAX_DEPTH {
            return None;
        }
        let mut sub_steps = Vec::new();
        match solve_direct(space, m, self.cfg, self.depth + 1, &mut sub_steps) {
            Ok(res) => {
                self.steps.extend(sub_steps);
                Some(res)
            }
            Err(_) => None,
        }
    }

    fn suspension(&mut self) -> Result<Option<String>, EngineError> {
        let Some(low) = self.p.space.desuspend() else { return Ok(None) };
        if low.bottom() < 4 {
            return Ok(None);
        }
        let Some((res, lp)) = self.sub(&low, self.p.dim - 1) else { return Ok(None) };
        if !res.split {
            return Ok(None);
        }
        let Some(k) = check_kappa(&lp, self.p, |e| Ok(suspend_wedge(e)))? else { return Ok(None) };
        Ok(k.iso.then(|| format!("pi_{}({}) splits and suspension is an isomorphism on kernels", self.p.dim - 1, low)))
    }

    fn comparison(&mut self, cmp: &Comparison) -> Result<Option<String>, EngineError> {
        let toda = self.cfg.toda();
        let Some((res, top)) = self.sub(&cmp.source, cmp.source_dim) else { return Ok(None) };
        if !res.split {
            return Ok(None);
        }
        let check = match &cmp.kind {
            ComparisonKind::Eta => check_kappa(&top, self.p, |e| {
                Ok(toda.compose(e, &Element::sphere_class(e.m, Class::Eta))?)
            })?,
            ComparisonKind::Cofibration { mu_x, mu_y } => {
                if !square_commutes(&toda, &top.cofibration, &self.p.cofibration, mu_x, mu_y)? {
                    return Err(EngineError::Certificate(format!("comparison square fails: {}", cmp.describe())));
                }
                let sx: Vec<Element> = mu_x.iter().map(suspend_wedge).collect();
                let smu = CofibrationSpec::new(top.cofibration.sigma_x_dims(), self.p.cofibration.sigma_x_dims(), sx)?;
                check_kappa(&top, self.p, |e| Ok(smu.apply(&toda, e)?))?
            }
        };
        let Some(k) = check else { return Ok(None) };
        if !k.injective {
            return Ok(None);
        }
        if k.iso {
            return Ok(Some(format!("{}: top row splits, kernel map is an isomorphism", cmp.describe())));
        }
        let top_ker = top.ker_group();
        let bot_ker = self.p.ker_group();
        let bot_coker = self.p.coker_group();
        if top_ker.is_cyclic() && top_ker.is_finite() && bot_ker.is_cyclic() && bot_coker.is_finite() {
            let a = top_ker.torsion_exponents.first().copied().unwrap_or(0);
            if bot_coker.exponent() <= a {
                return Ok(Some(format!(
                    "{}: top row splits, kernel map injective, exponent of {} is at most |{}|",
                    cmp.describe(),
                    bot_coker.pretty(),
                    top_ker.pretty()
                )));
            }
        }
        Ok(None)
    }
}

/// Resolves the extension problem with the enabled certificates, in rule order.
pub fn resolve_extension(
    p: &ExtensionProblem,
    cfg: &EngineConfig,
    depth: usize,
    steps: &mut Vec<Step>,
) -> Result<Resolution, EngineError> {
    let coker = p.coker_group();
    let ker = p.ker_group();
    let direct = coker.direct_sum(&ker);
    let candidates = extension_candidates(&coker, &ker).ok();
    let both_finite = coker.is_finite() && ker.is_finite();
    let mut ctx = Ctx { p, cfg, depth, steps };

    let mut fired: Option<(Rule, CanonicalGroup, bool, String, String)> = None;
    let on = |r: Rule| cfg.enabled(r);
    if on(Rule::R1TrivialKernel) && ker.is_trivial() {
        fired = Some((Rule::R1TrivialKernel, coker.clone(), true, "kernel is trivial".into(), String::new()));
    } else if on(Rule::R2TrivialCokernel) && coker.is_trivial() {
        fired = Some((Rule::R2TrivialCokernel, ker.clone(), true, "cokernel is trivial".into(), String::new()));
    } else if on(Rule::R3Split) && ker.torsion_exponents.is_empty() {
        fired = Some((Rule::R3Split, direct.clone(), true, "kernel is free".into(), String::new()));
    } else if on(Rule::R3Split) && p.cofibration.is_null() {
        fired = Some((Rule::R3Split, direct.clone(), true, "null attaching map, the pinch has a section".into(), String::new()));
    }
    if fired.is_none() && on(Rule::R4Suspension) {
        if let Some(why) = ctx.suspension()? {
            fired = Some((Rule::R4Suspension, direct.clone(), true, why, "suspension transfer".into()));
        }
    }
    if fired.is_none() && on(Rule::R5Comparison) {
        for cmp in comparisons(&p.space, p.dim) {
            if let Some(why) = ctx.comparison(&cmp)? {
                fired = Some((Rule::R5Comparison, direct.clone(), true, why, "comparison of extensions".into()));
                break;
            }
        }
    }
    if fired.is_none() && on(Rule::R6Literature) {
        if let Some(f) = literature_fact(&p.space, p.dim) {
            let split = both_finite && f.group == direct;
            fired = Some((Rule::R6Literature, f.group, split, "certified value".into(), f.citation));
        }
    }
    if fired.is_none() && on(Rule::R7Enumeration) {
        if let Some(c) = &candidates {
            if c.len() == 1 {
                let g = c[0].clone();
                let split = both_finite && g == direct;
                fired = Some((Rule::R7Enumeration, g, split, "unique extension".into(), String::new()));
            }
        }
    }
    let Some((rule, group, split, why, citation)) = fired else {
        return Err(EngineError::Ambiguous(Box::new(AmbiguousReport {
            space: p.space,
            dim: p.dim,
            coker,
            ker,
            candidates: candidates.unwrap_or_default(),
        })));
    };
    if let Some(c) = &candidates {
        if !c.contains(&group) {
            return Err(EngineError::Certificate(format!(
                "{} gives {} for pi_{}({}), not among the extensions of {} by {}",
                rule.tag(),
                group.pretty(),
                p.dim,
                p.space,
                ker.pretty(),
                coker.pretty()
            )));
        }
    }
    steps.push(Step {
        depth,
        rule: rule.tag().to_string(),
        citation: if citation.is_empty() { "exact sequence of the pinch fibration".into() } else { citation },
        before: vec![format!("coker {}", coker.pretty()), format!("ker {}", ker.pretty()), why],
        after: group.pretty(),
    });
    Ok(Resolution { group, rule, split })
}
