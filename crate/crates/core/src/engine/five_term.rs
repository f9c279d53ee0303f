use num_bigint::BigInt;

use super::homs::{boundary_hom, pi_of_skeleton};
use super::EngineError;
use crate::abelian::{cokernel, kernel, CanonicalGroup, GroupHom, PresentedGroup};
use crate::james::{skeleton, CofibrationSpec, FiberSkeleton};
use crate::spaces::SpaceId;
use crate::toda::{Element, Toda, WedgeGroup};

/// `0 -> coker d_m -> pi_m(C_f) -> ker d_{m-1} -> 0` for the pinch `C_f -> Sigma X`.
#[derive(Clone, Debug)]
pub struct ExtensionProblem {
    pub space: SpaceId,
    pub dim: u32,
    pub cofibration: CofibrationSpec,
    pub skeleton: FiberSkeleton,
    /// `pi_m(F)`.
    pub fiber: PresentedGroup,
    pub coker: PresentedGroup,
    pub ker: PresentedGroup,
    /// Inclusion of the kernel into `pi_m(Sigma X)`.
    pub ker_incl: GroupHom,
    /// `pi_m(Sigma X)` with its symbols.
    pub sigma_x: WedgeGroup,
    /// `d_{m-1}: pi_m(Sigma X) -> pi_{m-1}(F)`.
    pub boundary_below: GroupHom,
}

impl ExtensionProblem {
    pub fn coker_group(&self) -> CanonicalGroup {
        self.coker.canonical_form()
    }

    pub fn ker_group(&self) -> CanonicalGroup {
        self.ker.canonical_form()
    }

    /// Generators of the kernel as classes in `pi_m(Sigma X)`.
    pub fn kernel_elements(&self) -> Vec<Element> {
        self.ker_incl.matrix.columns().iter().map(|c| self.sigma_x.element(c)).collect()
    }

    /// Whether a class of `pi_m(Sigma X)` lies in the kernel of `d_{m-1}`.
    pub fn in_kernel(&self, e: &Element) -> Result<bool, EngineError> {
        let v = e.coords(&self.sigma_x)?;
        Ok(self.boundary_below.target.is_zero_element(&self.boundary_below.apply(&v)))
    }
}

/// Checks `|source| = |image| * |kernel|` and `|target| = |image| * |coker|` on ranks and orders.
fn audit(h: &GroupHom, what: &str) -> Result<(), EngineError> {
    let src = h.source.canonical_form();
    let tgt = h.target.canonical_form();
    let img = h.image();
    let ker = kernel(h).0.canonical_form();
    let cok = cokernel(h).0.canonical_form();
    let fail = |msg: String| Err(EngineError::Audit(format!("{what}: {msg}")));
    if src.free_rank != img.free_rank + ker.free_rank || tgt.free_rank != img.free_rank + cok.free_rank {
        return fail(format!("ranks {src} / {img} / {ker} / {tgt} / {cok}"));
    }
    let ord = |g: &CanonicalGroup| g.order().unwrap_or_else(|| BigInt::from(0));
    if src.is_finite() && ord(&src) != ord(&img) * ord(&ker) {
        return fail(format!("|{src}| != |{img}| * |{ker}|"));
    }
    if tgt.is_finite() && ord(&tgt) != ord(&img) * ord(&cok) {
        return fail(format!("|{tgt}| != |{img}| * |{cok}|"));
    }
    Ok(())
}

/// Builds the extension problem for `pi_m` of `space`.
pub fn five_term(toda: &Toda, space: &SpaceId, m: u32) -> Result<ExtensionProblem, EngineError> {
    let c = space.cofibration()?;
    if c.x_dims.is_empty() || m == 0 {
        return Err(EngineError::Range(format!("{space} has no pinch sequence in dimension {m}")));
    }
    let sk = skeleton(toda, &c, m + 1)?;
    let fm = pi_of_skeleton(toda, &sk, m)?;
    let (_, d_m) = boundary_hom(toda, &c, &fm)?;
    audit(&d_m, &format!("d_{m}"))?;
    let (coker, _) = cokernel(&d_m);
    let fm1 = pi_of_skeleton(toda, &sk, m - 1)?;
    let (sigma_x, d_below) = boundary_hom(toda, &c, &fm1)?;
    audit(&d_below, &format!("d_{}", m - 1))?;
    let (ker, ker_incl) = kernel(&d_below);
    Ok(ExtensionProblem {
        space: *space,
        dim: m,
        cofibration: c,
        skeleton: sk,
        fiber: fm.group,
        coker,
        ker,
        ker_incl,
        sigma_x,
        boundary_below: d_below,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::ExtNat;

    fn fin(r: u32) -> ExtNat {
        ExtNat::Fin(r)
    }

    #[test]
    fn stable_moore_has_no_cokernel() {
        let t = Toda::default();
        for r in 1..=4 {
            let p = five_term(&t, &SpaceId::Moore { k: 6, r: fin(r) }, 10).unwrap();
            assert!(p.coker_group().is_trivial());
            assert_eq!(p.ker_group(), CanonicalGroup::cyclic(r.min(3)));
        }
    }

    #[test]
    fn chang_seven_nine() {
        let t = Toda::default();
        for r in 1..=4 {
            for s in 1..=4 {
                let p = five_term(&t, &SpaceId::Crs { n: 5, r: fin(r), s: fin(s) }, 9).unwrap();
                assert_eq!(p.coker_group(), CanonicalGroup::new(0, vec![1, s.min(3)]));
                assert_eq!(p.ker_group(), CanonicalGroup::cyclic((r + 1).min(3)));
            }
        }
    }

    #[test]
    fn null_map_gives_wedge_terms() {
        let t = Toda::default();
        let p = five_term(&t, &SpaceId::Moore { k: 5, r: ExtNat::Inf }, 8).unwrap();
        assert_eq!(p.coker_group(), CanonicalGroup::cyclic(3));
        assert_eq!(p.ker_group(), CanonicalGroup::cyclic(1));
    }

    #[test]
    fn kernel_elements_lie_in_kernel() {
        let t = Toda::default();
        let p = five_term(&t, &SpaceId::Moore { k: 4, r: fin(2) }, 8).unwrap();
        for e in p.kernel_elements() {
            assert!(p.in_kernel(&e).unwrap());
        }
    }
}
