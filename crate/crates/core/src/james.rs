//! Low skeleta of the homotopy fiber of a pinch map `C_f -> Sigma X`.
//!
//! The fiber has the homotopy type of the relative James construction
//! `J(M_f, X)`. Its first filtration is `Y`, and the second adds one cell of
//! dimension `p + q` for every pair of a `Y`-sphere `S^p` and an `X`-sphere
//! `S^q`, attached by the Whitehead product `[j_p, f o j_q]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::toda::{wedge_name, Element, Gen, Toda, TodaError};

/// A map `f: X -> Y` between wedges of spheres, one component per `X`-summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofibrationSpec {
    pub x_dims: Vec<u32>,
    pub y_dims: Vec<u32>,
    /// `components[b]` lies in `pi_{x_dims[b]}(Y)`.
    pub components: Vec<Element>,
}

impl CofibrationSpec {
    pub fn new(x_dims: Vec<u32>, y_dims: Vec<u32>, components: Vec<Element>) -> Result<Self, TodaError> {
        if components.len() != x_dims.len() {
            return Err(TodaError::DimensionMismatch("one component per source sphere".into()));
        }
        for (c, &q) in components.iter().zip(&x_dims) {
            if c.m != q || c.dims != y_dims {
                return Err(TodaError::DimensionMismatch(format!(
                    "component {} should lie in pi_{q}({})",
                    c.render(),
                    wedge_name(&y_dims)
                )));
            }
        }
        Ok(CofibrationSpec { x_dims, y_dims, components })
    }

    pub fn is_null(&self) -> bool {
        self.components.iter().all(Element::is_zero)
    }

    pub fn sigma_x_dims(&self) -> Vec<u32> {
        self.x_dims.iter().map(|d| d + 1).collect()
    }

    /// Lowest sphere dimension of `X` and of `Y`.
    pub fn connectivities(&self) -> (u32, u32) {
        let m1 = self.x_dims.iter().copied().min().unwrap_or(u32::MAX);
        let m2 = self.y_dims.iter().copied().min().unwrap_or(u32::MAX);
        (m1, m2)
    }

    /// `f o xi` for `xi` in `pi_m(X)`.
    pub fn apply(&self, toda: &Toda, xi: &Element) -> Result<Element, TodaError> {
        if xi.dims != self.x_dims {
            return Err(TodaError::DimensionMismatch("element is not in pi_*(X)".into()));
        }
        let mut out = Element::zero(xi.m, &self.y_dims);
        for (g, c) in &xi.terms {
            let image = match *g {
                Gen::Incl { idx, class } => {
                    toda.compose(&self.components[idx], &Element::sphere_class(self.x_dims[idx], class))?
                }
                Gen::Bracket { a, b, class } => {
                    let w = toda.whitehead(&self.components[a], &self.components[b])?;
                    toda.compose(&w, &Element::sphere_class(w.m, class))?
                }
            };
            out = out.add(&image.scale(c))?;
        }
        Ok(out)
    }

    pub fn describe(&self) -> String {
        let comps: Vec<String> = self.components.iter().map(|c| c.render()).collect();
        format!("{} -> {}: ({})", wedge_name(&self.x_dims), wedge_name(&self.y_dims), comps.join(", "))
    }
}

/// A cell of the second James filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub dim: u32,
    pub y_idx: usize,
    pub x_idx: usize,
    /// Attaching class in `pi_{dim-1}(Y)`.
    pub attaching: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberSkeleton {
    pub base: Vec<u32>,
    pub cells: Vec<Cell>,
    /// Dimensions of cells whose attaching maps vanish; they split off as spheres.
    pub split: Vec<u32>,
    /// Cells of dimension at most this are present.
    pub up_to: u32,
    /// First dimension in which the third filtration has cells.
    pub third_filtration: u32,
}

impl FiberSkeleton {
    /// `pi_k` of the skeleton agrees with `pi_k` of the fiber for `k` below this bound.
    pub fn valid_below(&self) -> u32 {
        (self.up_to).min(self.third_filtration - 1)
    }

    /// The base wedge with the split-off spheres appended.
    pub fn wedge_dims(&self) -> Vec<u32> {
        let mut d = self.base.clone();
        d.extend(&self.split);
        d
    }
}

impl fmt::Display for FiberSkeleton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = format!("({})", wedge_name(&self.wedge_dims()));
        if !self.cells.is_empty() {
            let w: Vec<u32> = self.cells.iter().map(|c| c.dim - 1).collect();
            let g: Vec<String> = self.cells.iter().map(|c| c.attaching.render()).collect();
            s.push_str(&format!(" U_g C({}); g = ({})", wedge_name(&w), g.join(", ")));
        }
        f.write_str(&s)
    }
}

/// All cells of the second filtration of dimension at most `up_to`, with their
/// attaching classes `[j_a, f o j_b]`.
pub fn j2_attaching(toda: &Toda, c: &CofibrationSpec, up_to: u32) -> Result<Vec<Cell>, TodaError> {
    let mut cells = Vec::new();
    for (a, &p) in c.y_dims.iter().enumerate() {
        for (b, &q) in c.x_dims.iter().enumerate() {
            let dim = p + q;
            if dim > up_to {
                continue;
            }
            let ja = Element::inclusion(&c.y_dims, a);
            let attaching = toda.whitehead(&ja, &c.components[b])?;
            cells.push(Cell { dim, y_idx: a, x_idx: b, attaching });
        }
    }
    cells.sort_by_key(|cell| (cell.dim, cell.y_idx, cell.x_idx));
    Ok(cells)
}

/// Cells through dimension `up_to`, simplified.
pub fn skeleton(toda: &Toda, c: &CofibrationSpec, up_to: u32) -> Result<FiberSkeleton, TodaError> {
    let (qmin, pmin) = c.connectivities();
    let third_filtration = pmin.saturating_add(qmin.saturating_mul(2));
    if up_to >= third_filtration {
        return Err(TodaError::OutOfCatalog(format!(
            "skeleton through dimension {up_to} meets the third James filtration (cells from dimension {third_filtration})"
        )));
    }
    let cells = j2_attaching(toda, c, up_to)?;
    Ok(simplify_skeleton(FiberSkeleton {
        base: c.y_dims.clone(),
        cells,
        split: Vec::new(),
        up_to,
        third_filtration,
    }))
}

/// Splits off cells with null attaching maps as wedge summands.
pub fn simplify_skeleton(mut s: FiberSkeleton) -> FiberSkeleton {
    let (null, live): (Vec<Cell>, Vec<Cell>) = s.cells.into_iter().partition(|c| c.attaching.is_zero());
    s.split.extend(null.iter().map(|c| c.dim));
    s.split.sort_unstable();
    s.cells = live;
    s
}
