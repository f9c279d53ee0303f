use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{column_basis, integer_kernel, snf, IntMatrix};
use super::AlgebraError;

/// Isomorphism class of a finitely generated 2-local abelian group:
/// `Z_(2)^free_rank + sum Z/2^e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalGroup {
    pub free_rank: usize,
    /// Exponents `e >= 1`, sorted descending.
    pub torsion_exponents: Vec<u32>,
}

impl CanonicalGroup {
    pub fn trivial() -> Self {
        CanonicalGroup { free_rank: 0, torsion_exponents: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        CanonicalGroup { free_rank: rank, torsion_exponents: Vec::new() }
    }

    /// `Z/2^e`; `e == 0` gives the trivial group.
    pub fn cyclic(e: u32) -> Self {
        Self::new(0, vec![e])
    }

    /// Normalizes: drops zero exponents and sorts descending.
    pub fn new(free_rank: usize, exponents: Vec<u32>) -> Self {
        let mut torsion_exponents: Vec<u32> = exponents.into_iter().filter(|&e| e > 0).collect();
        torsion_exponents.sort_unstable_by(|a, b| b.cmp(a));
        CanonicalGroup { free_rank, torsion_exponents }
    }

    pub fn direct_sum(&self, other: &CanonicalGroup) -> CanonicalGroup {
        let mut e = self.torsion_exponents.clone();
        e.extend_from_slice(&other.torsion_exponents);
        Self::new(self.free_rank + other.free_rank, e)
    }

    pub fn sum_all<'a>(groups: impl IntoIterator<Item = &'a CanonicalGroup>) -> CanonicalGroup {
        groups.into_iter().fold(Self::trivial(), |acc, g| acc.direct_sum(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion_exponents.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Number of cyclic summands.
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion_exponents.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    /// Order as a power of two, for finite groups.
    pub fn log2_order(&self) -> Option<u64> {
        self.is_finite().then(|| self.torsion_exponents.iter().map(|&e| e as u64).sum())
    }

    pub fn order(&self) -> Option<BigInt> {
        self.log2_order().map(|k| BigInt::one() << k)
    }

    /// Largest torsion exponent (0 for torsion-free groups).
    pub fn exponent(&self) -> u32 {
        self.torsion_exponents.first().copied().unwrap_or(0)
    }

    /// Compact form `Z2 + Z8 + Z(2)`; the trivial group renders as `0`.
    pub fn pretty(&self) -> String {
        if self.is_trivial() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = self
            .torsion_exponents
            .iter()
            .rev()
            .map(|&e| match (BigInt::one() << e).to_u64() {
                Some(v) if e < 20 => format!("Z{v}"),
                _ => format!("Z(2^{e})"),
            })
            .collect();
        parts.extend(std::iter::repeat_n("Z(2)".to_string(), self.free_rank));
        parts.join(" + ")
    }
}

impl fmt::Display for CanonicalGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// 2-adic valuation of a nonzero integer.
pub(crate) fn two_valuation(d: &BigInt) -> u32 {
    debug_assert!(!d.is_zero());
    d.trailing_zeros().unwrap_or(0) as u32
}

/// Abelian group `Z^gens / (column span of relations)`, read 2-locally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentedGroup {
    pub generators: Vec<String>,
    pub relations: IntMatrix,
}

impl PresentedGroup {
    pub fn new(generators: Vec<String>, relations: IntMatrix) -> Result<Self, AlgebraError> {
        if relations.rows() != generators.len() {
            return Err(AlgebraError::Shape(format!(
                "relation matrix has {} rows for {} generators",
                relations.rows(),
                generators.len()
            )));
        }
        Ok(PresentedGroup { generators, relations })
    }

    pub fn free(generators: Vec<String>) -> Self {
        let n = generators.len();
        PresentedGroup { generators, relations: IntMatrix::zeros(n, 0) }
    }

    pub fn trivial() -> Self {
        Self::free(Vec::new())
    }

    /// Direct sum of cyclic groups; an order of zero means a free summand.
    pub fn from_orders(generators: Vec<String>, orders: &[BigInt]) -> Self {
        assert_eq!(generators.len(), orders.len());
        let cols: Vec<Vec<BigInt>> = orders
            .iter()
            .enumerate()
            .filter(|(_, o)| !o.is_zero())
            .map(|(i, o)| {
                let mut c = vec![BigInt::zero(); orders.len()];
                c[i] = o.clone();
                c
            })
            .collect();
        let relations = IntMatrix::from_columns(generators.len(), &cols);
        PresentedGroup { generators, relations }
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Invariant factors of the relation matrix with odd parts discarded.
    pub fn canonical_form(&self) -> CanonicalGroup {
        let n = self.generators.len();
        let d = snf(&self.relations).diagonal();
        let mut free = n - d.len().min(n);
        let mut exps = Vec::new();
        for x in &d {
            if x.is_zero() {
                free += 1;
            } else {
                exps.push(two_valuation(x));
            }
        }
        CanonicalGroup::new(free, exps)
    }

    /// The same generators with extra relation columns appended.
    pub fn with_relations(&self, extra: &IntMatrix) -> PresentedGroup {
        PresentedGroup { generators: self.generators.clone(), relations: self.relations.hconcat(extra) }
    }

    pub fn direct_sum(&self, other: &PresentedGroup) -> PresentedGroup {
        let mut generators = self.generators.clone();
        generators.extend(other.generators.iter().cloned());
        PresentedGroup { generators, relations: self.relations.block_diag(&other.relations) }
    }

    /// Whether `v` (coordinates over the generators) is zero in the 2-localized group.
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        let col = IntMatrix::from_columns(self.generators.len(), &[v.to_vec()]);
        self.with_relations(&col).canonical_form() == self.canonical_form()
    }

    /// Renders a coordinate vector as a formal combination of generator names.
    pub fn render_element(&self, v: &[BigInt]) -> String {
        render_combination(&self.generators, v)
    }
}

pub(crate) fn render_combination(names: &[String], v: &[BigInt]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
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
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Homomorphism between presented groups, given on generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupHom {
    pub source: PresentedGroup,
    pub target: PresentedGroup,
    /// target-generators x source-generators
    pub matrix: IntMatrix,
}

impl GroupHom {
    /// Checks shapes and that every source relation maps to zero 2-locally.
    pub fn new(source: PresentedGroup, target: PresentedGroup, matrix: IntMatrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != target.num_generators() || matrix.cols() != source.num_generators() {
            return Err(AlgebraError::Shape(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.num_generators(),
                source.num_generators()
            )));
        }
        let images = matrix.mul(&source.relations)?;
        if !images.is_zero() && target.with_relations(&images).canonical_form() != target.canonical_form() {
            let bad = images
                .columns()
                .into_iter()
                .find(|c| !target.is_zero_element(c))
                .map(|c| target.render_element(&c))
                .unwrap_or_default();
            return Err(AlgebraError::IllDefined(format!("a source relation maps to {bad}")));
        }
        Ok(GroupHom { source, target, matrix })
    }

    pub fn identity(g: &PresentedGroup) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), matrix: IntMatrix::identity(g.num_generators()) }
    }

    pub fn zero(source: PresentedGroup, target: PresentedGroup) -> Self {
        let matrix = IntMatrix::zeros(target.num_generators(), source.num_generators());
        GroupHom { source, target, matrix }
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom, AlgebraError> {
        let matrix = self.matrix.mul(&first.matrix)?;
        GroupHom::new(first.source.clone(), self.target.clone(), matrix)
    }

    /// Image, presented as the source modulo the kernel.
    pub fn image(&self) -> CanonicalGroup {
        let incl = kernel(self).1;
        self.source.with_relations(&incl.matrix).canonical_form()
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).0.canonical_form().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        cokernel(self).0.canonical_form().is_trivial()
    }
}

/// Kernel of `h` on the 2-localized groups, with its inclusion into the source.
pub fn kernel(h: &GroupHom) -> (PresentedGroup, GroupHom) {
    let a = h.source.num_generators();
    let b_rel = &h.target.relations;
    // {x : h x in span(target relations)}
    let neg_rel = IntMatrix::from_columns(
        b_rel.rows(),
        &b_rel.columns().into_iter().map(|c| c.into_iter().map(|x| -x).collect()).collect::<Vec<_>>(),
    );
    let stacked = h.matrix.hconcat(&neg_rel);
    let ker = integer_kernel(&stacked);
    let lattice = ker.row_slice(0, a);
    let spanning = lattice.hconcat(&h.source.relations);
    let (basis, coords) = column_basis(&spanning);
    let k = basis.cols();
    let rel_idx: Vec<usize> = (lattice.cols()..spanning.cols()).collect();
    let rel_coords = coords.select_columns(&rel_idx);
    let names: Vec<String> = (0..k).map(|j| render_combination(&h.source.generators, &basis.column(j))).collect();
    let kgroup = PresentedGroup { generators: names, relations: rel_coords };
    let incl = GroupHom { source: kgroup.clone(), target: h.source.clone(), matrix: basis };
    (kgroup, incl)
}

/// Cokernel of `h`: the target with the image columns appended as relations.
pub fn cokernel(h: &GroupHom) -> (PresentedGroup, GroupHom) {
    let c = h.target.with_relations(&h.matrix);
    let proj = GroupHom {
        source: h.target.clone(),
        target: c.clone(),
        matrix: IntMatrix::identity(h.target.num_generators()),
    };
    (c, proj)
}

/// Solves `X + H = G` for `X` using uniqueness of decompositions.
pub fn subtract_summand(g: &CanonicalGroup, h: &CanonicalGroup) -> Result<CanonicalGroup, AlgebraError> {
    let err = || AlgebraError::NotASummand(h.pretty(), g.pretty());
    if h.free_rank > g.free_rank {
        return Err(err());
    }
    let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
    for &e in &g.torsion_exponents {
        *counts.entry(e).or_default() += 1;
    }
    for &e in &h.torsion_exponents {
        let c = counts.entry(e).or_default();
        *c -= 1;
        if *c < 0 {
            return Err(err());
        }
    }
    let exps = counts.into_iter().flat_map(|(e, c)| std::iter::repeat_n(e, c as usize)).collect();
    Ok(CanonicalGroup::new(g.free_rank - h.free_rank, exps))
}
