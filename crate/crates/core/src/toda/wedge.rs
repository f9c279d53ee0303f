//! Homotopy groups of wedges of spheres and elements in them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::sphere::{sphere_basis, Class};
use super::TodaError;
use crate::abelian::PresentedGroup;

/// Basis symbol of `pi_m` of a wedge of spheres `S^{d_0} v S^{d_1} v ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    /// `j_idx o class`, the class living on `S^{d_idx}`.
    Incl { idx: usize, class: Class },
    /// `[j_a, j_b] o class` with `a < b`, the class living on `S^{d_a + d_b - 1}`.
    Bracket { a: usize, b: usize, class: Class },
}

impl Gen {
    pub fn class(self) -> Class {
        match self {
            Gen::Incl { class, .. } | Gen::Bracket { class, .. } => class,
        }
    }

    /// Dimension of the sphere the class lives on.
    pub fn sphere(self, dims: &[u32]) -> u32 {
        match self {
            Gen::Incl { idx, .. } => dims[idx],
            Gen::Bracket { a, b, .. } => dims[a] + dims[b] - 1,
        }
    }

    pub fn order(self, dims: &[u32]) -> Option<u64> {
        self.class().order(self.sphere(dims))
    }

    pub fn render(self, dims: &[u32]) -> String {
        let n = self.sphere(dims);
        let tail = match self.class() {
            Class::Iota => String::new(),
            c => format!("∘{}", c.name(n)),
        };
        match self {
            Gen::Incl { idx, class } => {
                if dims.len() == 1 {
                    class.name(n)
                } else {
                    format!("j{}{}", idx + 1, tail)
                }
            }
            Gen::Bracket { a, b, .. } => format!("[j{},j{}]{}", a + 1, b + 1, tail),
        }
    }
}

/// A formal integer combination of basis symbols in `pi_m(W)`, reduced modulo
/// the orders of the symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Element {
    pub m: u32,
    pub dims: Vec<u32>,
    pub terms: BTreeMap<Gen, BigInt>,
}

impl Element {
    pub fn zero(m: u32, dims: &[u32]) -> Self {
        Element { m, dims: dims.to_vec(), terms: BTreeMap::new() }
    }

    pub fn from_gen(m: u32, dims: &[u32], g: Gen) -> Self {
        Self::from_terms(m, dims, [(g, BigInt::one())])
    }

    /// `j_idx o iota`, the inclusion of a wedge summand.
    pub fn inclusion(dims: &[u32], idx: usize) -> Self {
        Self::from_gen(dims[idx], dims, Gen::Incl { idx, class: Class::Iota })
    }

    /// A class on a single sphere `S^n`.
    pub fn sphere_class(n: u32, class: Class) -> Self {
        Self::from_gen(n + class.stem(), &[n], Gen::Incl { idx: 0, class })
    }

    pub fn from_terms(m: u32, dims: &[u32], terms: impl IntoIterator<Item = (Gen, BigInt)>) -> Self {
        let mut e = Self::zero(m, dims);
        for (g, c) in terms {
            e.add_term(g, c);
        }
        e
    }

    pub fn add_term(&mut self, g: Gen, c: BigInt) {
        let entry = self.terms.entry(g).or_insert_with(BigInt::zero);
        *entry += c;
        let reduced = match g.order(&self.dims) {
            Some(o) => entry.mod_floor(&BigInt::from(o)),
            None => entry.clone(),
        };
        if reduced.is_zero() {
            self.terms.remove(&g);
        } else {
            *entry = reduced;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, g: Gen) -> BigInt {
        self.terms.get(&g).cloned().unwrap_or_default()
    }

    fn check_same(&self, other: &Element) -> Result<(), TodaError> {
        if self.m != other.m || self.dims != other.dims {
            return Err(TodaError::DimensionMismatch(format!(
                "adding elements of pi_{}({}) and pi_{}({})",
                self.m,
                wedge_name(&self.dims),
                other.m,
                wedge_name(&other.dims)
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element, TodaError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> Element {
        Self::from_terms(self.m, &self.dims, self.terms.iter().map(|(g, c)| (*g, c * k)))
    }

    pub fn neg(&self) -> Element {
        self.scale(&BigInt::from(-1))
    }

    /// Coordinates over the basis of `group`.
    pub fn coords(&self, group: &WedgeGroup) -> Result<Vec<BigInt>, TodaError> {
        if self.m != group.m || self.dims != group.dims {
            return Err(TodaError::DimensionMismatch(format!("element of pi_{} in pi_{}", self.m, group.m)));
        }
        let mut v = vec![BigInt::zero(); group.basis.len()];
        for (g, c) in &self.terms {
            let i = group.index_of(*g).ok_or_else(|| {
                TodaError::OutOfCatalog(format!("{} is not a basis symbol of pi_{}", g.render(&self.dims), self.m))
            })?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (g, c) in &self.terms {
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}·"));
            }
            out.push_str(&g.render(&self.dims));
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn wedge_name(dims: &[u32]) -> String {
    if dims.is_empty() {
        return "*".to_string();
    }
    dims.iter().map(|d| format!("S{d}")).collect::<Vec<_>>().join(" v ")
}

/// `pi_m` of a wedge of spheres with its catalog basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeGroup {
    pub m: u32,
    pub dims: Vec<u32>,
    pub basis: Vec<Gen>,
}

impl WedgeGroup {
    pub fn index_of(&self, g: Gen) -> Option<usize> {
        self.basis.iter().position(|&b| b == g)
    }

    pub fn orders(&self) -> Vec<BigInt> {
        self.basis.iter().map(|g| g.order(&self.dims).map(BigInt::from).unwrap_or_default()).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.basis.iter().map(|g| g.render(&self.dims)).collect()
    }

    pub fn presented(&self) -> PresentedGroup {
        PresentedGroup::from_orders(self.names(), &self.orders())
    }

    pub fn element(&self, coords: &[BigInt]) -> Element {
        Element::from_terms(self.m, &self.dims, self.basis.iter().copied().zip(coords.iter().cloned()))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::from_gen(self.m, &self.dims, self.basis[i])
    }
}

/// `pi_m(S^n)` with its named generators.
pub fn pi_sphere(m: u32, n: u32) -> Result<WedgeGroup, TodaError> {
    pi_wedge(m, &[n])
}

/// `pi_m(S^{d_0} v S^{d_1} v ...)` in the range where only inclusions and
/// single Whitehead brackets contribute.
pub fn pi_wedge(m: u32, dims: &[u32]) -> Result<WedgeGroup, TodaError> {
    let k = dims.len();
    // next Hilton factors are the triple brackets
    for a in 0..k {
        for b in a + 1..k {
            for c in a..k {
                let d = dims[a] + dims[b] + dims[c] - 2;
                if m >= d {
                    return Err(TodaError::OutOfCatalog(format!(
                        "pi_{m}({}) meets a triple Whitehead product on S^{d}",
                        wedge_name(dims)
                    )));
                }
            }
        }
    }
    let mut basis = Vec::new();
    for (idx, &d) in dims.iter().enumerate() {
        basis.extend(sphere_basis(d, m)?.into_iter().map(|class| Gen::Incl { idx, class }));
    }
    for a in 0..k {
        for b in a + 1..k {
            let d = dims[a] + dims[b] - 1;
            basis.extend(sphere_basis(d, m)?.into_iter().map(|class| Gen::Bracket { a, b, class }));
        }
    }
    Ok(WedgeGroup { m, dims: dims.to_vec(), basis })
}
