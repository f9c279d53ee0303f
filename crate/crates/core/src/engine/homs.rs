use num_bigint::BigInt;
use num_traits::Zero;

use super::EngineError;
use crate::abelian::{kernel, GroupHom, IntMatrix, PresentedGroup};
use crate::james::{CofibrationSpec, FiberSkeleton};
use crate::toda::{desuspend, pi_wedge, suspend, Element, Gen, Toda, TodaError, WedgeGroup};

/// `pi_m` of a fiber skeleton: the homotopy of its base wedge modulo the
/// attaching relations, plus free lifts of any cells attached by torsion classes.
#[derive(Clone, Debug)]
pub struct FiberPi {
    pub m: u32,
    pub base: WedgeGroup,
    pub lifts: Vec<String>,
    pub group: PresentedGroup,
}

impl FiberPi {
    /// Coordinates of the image of `e`, a class in `pi_m` of a sub-wedge of the base.
    pub fn coords(&self, e: &Element) -> Result<Vec<BigInt>, EngineError> {
        let mut v = rehome(e, &self.base.dims).coords(&self.base)?;
        v.extend(self.lifts.iter().map(|_| BigInt::zero()));
        Ok(v)
    }
}

/// Reads `e` in a wedge whose first summands are the ones `e` lives on.
fn rehome(e: &Element, dims: &[u32]) -> Element {
    debug_assert!(dims.starts_with(&e.dims));
    Element::from_terms(e.m, dims, e.terms.iter().map(|(g, c)| (*g, c.clone())))
}

fn matrix_of(target: &WedgeGroup, images: &[Vec<BigInt>]) -> IntMatrix {
    IntMatrix::from_columns(target.basis.len(), images)
}

/// `Sigma` applied to a class in a wedge of spheres. Whitehead products suspend to zero.
pub fn suspend_wedge(e: &Element) -> Element {
    let dims: Vec<u32> = e.dims.iter().map(|d| d + 1).collect();
    let mut out = Element::zero(e.m + 1, &dims);
    for (g, c) in &e.terms {
        if let Gen::Incl { idx, class } = *g {
            for (d, k) in suspend(class, e.dims[idx]) {
                out.add_term(Gen::Incl { idx, class: d }, c * BigInt::from(k));
            }
        }
    }
    out
}

/// The class `xi` in `pi_m(X)` with `Sigma xi = g`, for a basis symbol `g` of `pi_{m+1}(Sigma X)`.
fn desuspend_gen(g: Gen, x_dims: &[u32], m: u32) -> Result<Element, EngineError> {
    let sx: Vec<u32> = x_dims.iter().map(|d| d + 1).collect();
    if let Gen::Incl { idx, class } = g {
        if let Some(c0) = desuspend(class, sx[idx]) {
            if suspend(c0, x_dims[idx]) == vec![(class, 1)] {
                return Ok(Element::from_gen(m, x_dims, Gen::Incl { idx, class: c0 }));
            }
        }
    }
    Err(TodaError::NonSuspension(format!("{} in pi_{}", g.render(&sx), m + 1)).into())
}

/// `f_*: pi_m(X) -> pi_m(Y)`.
pub fn induced_hom(toda: &Toda, c: &CofibrationSpec, m: u32) -> Result<GroupHom, EngineError> {
    let src = pi_wedge(m, &c.x_dims)?;
    let tgt = pi_wedge(m, &c.y_dims)?;
    let cols = (0..src.basis.len())
        .map(|i| Ok(c.apply(toda, &src.basis_element(i))?.coords(&tgt)?))
        .collect::<Result<Vec<_>, EngineError>>()?;
    Ok(GroupHom::new(src.presented(), tgt.presented(), matrix_of(&tgt, &cols))?)
}

/// `pi_k` of the fiber, read off the skeleton as the cofiber of its attaching map.
pub fn pi_of_skeleton(toda: &Toda, sk: &FiberSkeleton, k: u32) -> Result<FiberPi, EngineError> {
    if k >= sk.valid_below() {
        return Err(EngineError::Range(format!(
            "pi_{k} of the fiber needs cells beyond the skeleton {sk} (valid below {})",
            sk.valid_below()
        )));
    }
    let bdims = sk.wedge_dims();
    let base = pi_wedge(k, &bdims)?;
    let mut group = base.presented();
    let mut lifts = Vec::new();
    if !sk.cells.is_empty() {
        let wdims: Vec<u32> = sk.cells.iter().map(|c| c.dim - 1).collect();
        let bmin = bdims.iter().copied().min().unwrap_or(0);
        let wmin = wdims.iter().copied().min().unwrap_or(0);
        if k + 1 >= wmin + bmin {
            return Err(EngineError::Range(format!(
                "pi_{k} of the skeleton {sk} is beyond the cofibration range {}",
                wmin + bmin - 2
            )));
        }
        let gamma = |j: u32, target: &WedgeGroup| -> Result<(WedgeGroup, IntMatrix), EngineError> {
            let src = pi_wedge(j, &wdims)?;
            let mut cols = Vec::new();
            for g in &src.basis {
                let Gen::Incl { idx, class } = *g else {
                    return Err(EngineError::Range(format!("Whitehead products among cells in pi_{j}")));
                };
                let att = rehome(&sk.cells[idx].attaching, &bdims);
                let img = toda.compose(&att, &Element::sphere_class(wdims[idx], class))?;
                cols.push(img.coords(target)?);
            }
            Ok((src, matrix_of(target, &cols)))
        };
        let (_, image) = gamma(k, &base)?;
        group = group.with_relations(&image);
        if k > 0 {
            let lower = pi_wedge(k - 1, &bdims)?;
            let (src, mat) = gamma(k - 1, &lower)?;
            let h = GroupHom::new(src.presented(), lower.presented(), mat)?;
            let (kg, _) = kernel(&h);
            let kc = kg.canonical_form();
            if !kc.torsion_exponents.is_empty() {
                return Err(EngineError::Range(format!(
                    "cells of {sk} attached by classes killed in pi_{}: torsion kernel {}",
                    k - 1,
                    kc.pretty()
                )));
            }
            if kc.free_rank > 0 {
                lifts = if kg.num_generators() == kc.free_rank {
                    kg.generators.iter().map(|g| format!("lift({g})")).collect()
                } else {
                    (1..=kc.free_rank).map(|i| format!("lift{i}")).collect()
                };
                group = group.direct_sum(&PresentedGroup::free(lifts.clone()));
            }
        }
    }
    Ok(FiberPi { m: k, base, lifts, group })
}

/// `d: pi_{m+1}(Sigma X) -> pi_m(F)`, defined on suspensions by `d(Sigma xi) = j(f o xi)`.
pub fn boundary_hom(
    toda: &Toda,
    c: &CofibrationSpec,
    fiber: &FiberPi,
) -> Result<(WedgeGroup, GroupHom), EngineError> {
    let m = fiber.m;
    let sx = pi_wedge(m + 1, &c.sigma_x_dims())?;
    let mut cols = Vec::new();
    for g in &sx.basis {
        let xi = desuspend_gen(*g, &c.x_dims, m)?;
        cols.push(fiber.coords(&c.apply(toda, &xi)?)?);
    }
    let matrix = IntMatrix::from_columns(fiber.group.num_generators(), &cols);
    let h = GroupHom::new(sx.presented(), fiber.group.clone(), matrix)?;
    Ok((sx, h))
}
