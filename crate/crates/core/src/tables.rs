//! Closed-form tables of `pi_{n+3}` and `pi_{n+4}`, and their regeneration by the engine.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abelian::CanonicalGroup;
use crate::engine::{compute_pi, EngineConfig, EngineError};
use crate::spaces::{ExtNat, SpaceId};
use crate::toda::pi_sphere;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    MooreN,
    MooreN1,
    CEta,
    Cr,
    Cs,
    Crs,
}

impl Family {
    pub const ALL: [Family; 6] = [Family::MooreN, Family::MooreN1, Family::CEta, Family::Cr, Family::Cs, Family::Crs];

    pub fn header(self) -> &'static str {
        match self {
            Family::MooreN => "M_{2^r}^n",
            Family::MooreN1 => "M_{2^r}^{n+1}",
            Family::CEta => "C_eta^{n+2}",
            Family::Cr => "C_r^{n+2}",
            Family::Cs => "C^{n+2,s}",
            Family::Crs => "C_r^{n+2,s}",
        }
    }

    fn uses_r(self) -> bool {
        matches!(self, Family::MooreN | Family::MooreN1 | Family::Cr | Family::Crs)
    }

    fn uses_s(self) -> bool {
        matches!(self, Family::Cs | Family::Crs)
    }

    pub fn space(self, n: u32, r: ExtNat, s: ExtNat) -> Option<SpaceId> {
        let id = match self {
            Family::MooreN => SpaceId::Moore { k: n, r },
            Family::MooreN1 => SpaceId::Moore { k: n + 1, r },
            Family::CEta => SpaceId::CEta { n },
            Family::Cr => SpaceId::Cr { n, r },
            Family::Cs => SpaceId::Cs { n, s },
            Family::Crs => SpaceId::Crs { n, r, s },
        };
        id.validate().is_ok().then_some(id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Row {
    N3,
    N4,
    N5,
    Stable,
}

/// Which of the two tables: stem 3 or stem 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Which {
    One,
    Two,
}

impl Which {
    pub fn stem(self) -> u32 {
        match self {
            Which::One => 3,
            Which::Two => 4,
        }
    }

    pub fn rows(self) -> &'static [Row] {
        match self {
            Which::One => &[Row::N3, Row::N4, Row::Stable],
            Which::Two => &[Row::N3, Row::N4, Row::N5, Row::Stable],
        }
    }

    pub fn parse(s: &str) -> Option<Which> {
        match s {
            "1" => Some(Which::One),
            "2" => Some(Which::Two),
            _ => None,
        }
    }
}

impl Row {
    pub fn label(self, which: Which) -> &'static str {
        match (self, which) {
            (Row::N3, _) => "n=3",
            (Row::N4, _) => "n=4",
            (Row::N5, _) => "n=5",
            (Row::Stable, Which::One) => "n>=5",
            (Row::Stable, Which::Two) => "n>=6",
        }
    }

    /// Values of `n` at which the row is derived; the `n = 3` row is reference data only.
    pub fn dims(self, which: Which) -> Vec<u32> {
        match (self, which) {
            (Row::N3, _) => vec![3],
            (Row::N4, _) => vec![4],
            (Row::N5, _) => vec![5],
            (Row::Stable, Which::One) => vec![5, 6],
            (Row::Stable, Which::Two) => vec![6, 7],
        }
    }
}

fn g(exps: &[u32]) -> CanonicalGroup {
    CanonicalGroup::new(0, exps.to_vec())
}

/// The closed form for finite parameters.
pub fn formula(which: Which, row: Row, fam: Family, r: u32, s: u32) -> CanonicalGroup {
    let e = u32::from(r == 1);
    let twos = |k: u32| vec![1; k as usize];
    let cat = |mut a: Vec<u32>, b: &[u32]| {
        a.extend_from_slice(b);
        g(&a)
    };
    use Family::*;
    match (which, row, fam) {
        (Which::One, Row::N3, MooreN) if r <= 2 => cat(twos(2 - e), &[r + 1]),
        (Which::One, Row::N3, MooreN) => g(&[1, 2, r]),
        (Which::One, _, MooreN1) if r == 1 => g(&[2]),
        (Which::One, _, MooreN1) => g(&[1, 1]),
        (Which::One, Row::N3, CEta) => g(&[1]),
        (Which::One, Row::N3, Cr) => cat(twos(2 - e), &[r + e]),
        (Which::One, Row::N3, Cs) => g(&[1, 1, s]),
        (Which::One, Row::N3, Crs) => cat(twos(3 - e), &[r.min(s), r + e]),
        (Which::One, Row::N4, MooreN) => g(&[1, r + 1, (r - 1).min(2)]),
        (Which::One, Row::N4, CEta) => CanonicalGroup::new(1, vec![1]),
        (Which::One, Row::N4, Cr) => cat(twos(2 - e), &[r + 1]),
        (Which::One, Row::N4, Cs) => CanonicalGroup::new(1, vec![1, 1]),
        (Which::One, Row::N4, Crs) => cat(twos(3 - e), &[r + 1]),
        (Which::One, _, MooreN) => g(&[1, r.min(3)]),
        (Which::One, _, CEta) => g(&[2]),
        (Which::One, _, Cr) => g(&[1, r.min(2)]),
        (Which::One, _, Cs) => g(&[1, 2]),
        (Which::One, _, Crs) => g(&[1, 1, r.min(2)]),

        (Which::Two, Row::N3, MooreN) => cat(twos(2), if r == 1 { &[] } else { &[2] }),
        (Which::Two, Row::N3, MooreN1) => g(&[1, r + 1, (r - 1).min(2)]),
        (Which::Two, Row::N3, CEta) => CanonicalGroup::free(1),
        (Which::Two, Row::N3, Cr) => g(&[2, r + 1]),
        (Which::Two, Row::N3, Cs) => g(&[s.min(2), s + 2]),
        (Which::Two, Row::N3, Crs) => g(&[2, s + 2, (s - e).min(2), (r + 1).min(s + 1)]),
        (Which::Two, Row::N4, MooreN) => cat(twos(2 - e), &[r.min(3)]),
        (Which::Two, Row::N4 | Row::N5, MooreN1) => g(&[1, r.min(3)]),
        (Which::Two, Row::N4 | Row::N5, CEta) => g(&[1]),
        (Which::Two, Row::N4 | Row::N5, Cr) => g(&[1, (r + 1).min(3)]),
        (Which::Two, Row::N4, Cs) => g(&[1, s.min(3), s + 1]),
        (Which::Two, Row::N4, Crs) => g(&[1, r.min(s + 1), (r + 1).min(3), s.min(3)]),
        (Which::Two, Row::N5, MooreN) => g(&[1, r.min(3)]),
        (Which::Two, Row::N5, Cs) => g(&[1, s.min(3)]),
        (Which::Two, Row::N5, Crs) => g(&[1, (r + 1).min(3), s.min(3)]),
        (Which::Two, Row::Stable, MooreN) => g(&[r.min(3)]),
        (Which::Two, Row::Stable, MooreN1) => g(&[1, r.min(3)]),
        (Which::Two, Row::Stable, CEta) => CanonicalGroup::trivial(),
        (Which::Two, Row::Stable, Cr) => g(&[(r + 1).min(3)]),
        (Which::Two, Row::Stable, Cs) => g(&[s.min(3)]),
        (Which::Two, Row::Stable, Crs) => g(&[(r + 1).min(3), s.min(3)]),
    }
}

fn sphere(m: u32, d: u32) -> Option<CanonicalGroup> {
    pi_sphere(m, d).ok().map(|w| w.presented().canonical_form())
}

/// Expected value of a cell. Infinite parameters are read through the wedge
/// decompositions, with the Hilton summand in dimension `2n`.
pub fn expected(which: Which, row: Row, n: u32, fam: Family, r: ExtNat, s: ExtNat) -> Option<CanonicalGroup> {
    let m = n + which.stem();
    let rf = r.finite().unwrap_or(1);
    let sf = s.finite().unwrap_or(1);
    match (fam, r, s) {
        (Family::MooreN | Family::MooreN1, ExtNat::Inf, _) => {
            let k = if fam == Family::MooreN { n } else { n + 1 };
            crate::toda::pi_wedge(m, &[k, k + 1]).ok().map(|w| w.presented().canonical_form())
        }
        (Family::Crs, ExtNat::Inf, ExtNat::Inf) => None,
        (Family::Crs, ExtNat::Inf, _) | (Family::Crs, _, ExtNat::Inf) if row == Row::N3 => None,
        (Family::Crs, ExtNat::Inf, _) => {
            let mut parts = vec![formula(which, row, Family::Cs, rf, sf), sphere(m, n + 1)?];
            if m == 2 * n {
                parts.push(CanonicalGroup::free(1));
            }
            Some(CanonicalGroup::sum_all(&parts))
        }
        (Family::Crs, _, ExtNat::Inf) => {
            let mut parts = vec![formula(which, row, Family::Cr, rf, sf), sphere(m, n + 1)?];
            if m == 2 * n {
                parts.push(CanonicalGroup::cyclic(rf));
            }
            Some(CanonicalGroup::sum_all(&parts))
        }
        (Family::Cr, ExtNat::Inf, _) | (Family::Cs, _, ExtNat::Inf) => None,
        _ => Some(formula(which, row, fam, rf, sf)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellResult {
    pub table: u32,
    pub row: String,
    pub n: u32,
    pub family: Family,
    pub r: Option<ExtNat>,
    pub s: Option<ExtNat>,
    pub space: String,
    pub dim: u32,
    pub expected: Option<CanonicalGroup>,
    /// `None` for reference rows.
    pub derived: Option<Result<CanonicalGroup, String>>,
}

impl CellResult {
    pub fn is_reference(&self) -> bool {
        self.derived.is_none()
    }

    pub fn matches(&self) -> bool {
        match (&self.derived, &self.expected) {
            (None, _) => true,
            (Some(Ok(d)), Some(e)) => d == e,
            _ => false,
        }
    }

    pub fn params(&self) -> String {
        let mut v = Vec::new();
        if let Some(r) = self.r {
            v.push(format!("r={r}"));
        }
        if let Some(s) = self.s {
            v.push(format!("s={s}"));
        }
        v.join(",")
    }
}

struct CellSpec {
    which: Which,
    row: Row,
    n: u32,
    fam: Family,
    r: Option<ExtNat>,
    s: Option<ExtNat>,
    space: SpaceId,
}

fn cell_specs(which: Which, rs: &[ExtNat], ss: &[ExtNat]) -> Vec<CellSpec> {
    let one = [ExtNat::Fin(1)];
    let mut out = Vec::new();
    for &row in which.rows() {
        for n in row.dims(which) {
            for fam in Family::ALL {
                let rr: Vec<Option<ExtNat>> = if fam.uses_r() { rs.iter().map(|&x| Some(x)).collect() } else { vec![None] };
                let sv: Vec<Option<ExtNat>> = if fam.uses_s() { ss.iter().map(|&x| Some(x)).collect() } else { vec![None] };
                for &r in &rr {
                    for &s in &sv {
                        let rv = r.unwrap_or(one[0]);
                        let svv = s.unwrap_or(one[0]);
                        if row == Row::N3 && (rv.is_inf() || svv.is_inf()) {
                            continue;
                        }
                        if let Some(space) = fam.space(n, rv, svv) {
                            out.push(CellSpec { which, row, n, fam, r, s, space });
                        }
                    }
                }
            }
        }
    }
    out
}

/// Regenerates a table over the given parameter ranges. Cells are computed in
/// parallel; the output order is fixed.
pub fn generate(which: Which, rs: &[ExtNat], ss: &[ExtNat], cfg: &EngineConfig) -> Vec<CellResult> {
    let specs = cell_specs(which, rs, ss);
    specs
        .par_iter()
        .map(|c| {
            let m = c.n + which.stem();
            let r = c.r.unwrap_or(ExtNat::Fin(1));
            let s = c.s.unwrap_or(ExtNat::Fin(1));
            let derived = (c.row != Row::N3)
                .then(|| compute_pi(&c.space, m, cfg).map_err(|e: EngineError| e.to_string()));
            CellResult {
                table: which.stem() - 2,
                row: c.row.label(c.which).to_string(),
                n: c.n,
                family: c.fam,
                r: c.r,
                s: c.s,
                space: c.space.to_string(),
                dim: m,
                expected: expected(which, c.row, c.n, c.fam, r, s),
                derived,
            }
        })
        .collect()
}

/// `pi_{n+4}(M^{n+1})` read from the second table must equal `pi_{(n+1)+3}(M^{n+1})` from the first.
pub fn suspension_consistency(t1: &[CellResult], t2: &[CellResult]) -> Vec<String> {
    let mut problems = Vec::new();
    for c2 in t2.iter().filter(|c| c.family == Family::MooreN1 && !c.is_reference()) {
        let partner = t1
            .iter()
            .find(|c1| c1.family == Family::MooreN && c1.n == c2.n + 1 && c1.r == c2.r && !c1.is_reference());
        if let Some(c1) = partner {
            if c1.derived != c2.derived || c1.expected != c2.expected {
                problems.push(format!("{} in dimension {}: {:?} vs {:?}", c2.space, c2.dim, c2.derived, c1.derived));
            }
        }
    }
    problems
}

fn render_value(c: &CellResult) -> String {
    let exp = c.expected.as_ref().map(|g| g.pretty()).unwrap_or_else(|| "-".into());
    match &c.derived {
        None => format!("{exp} (reference, not derived)"),
        Some(Ok(d)) if c.matches() => d.pretty(),
        Some(Ok(d)) => format!("{} MISMATCH expected {exp}", d.pretty()),
        Some(Err(e)) => format!("ERROR {e}"),
    }
}

/// Markdown layout: one row per `n`-class, one column per family.
pub fn render_markdown(which: Which, cells: &[CellResult]) -> String {
    let mut out = format!("## pi_{{n+{}}}\n\n| |", which.stem());
    for f in Family::ALL {
        out.push_str(&format!(" {} |", f.header()));
    }
    out.push_str("\n|---|");
    out.push_str(&"---|".repeat(Family::ALL.len()));
    out.push('\n');
    for &row in which.rows() {
        let label = row.label(which);
        let n0 = row.dims(which)[0];
        if !cells.iter().any(|c| c.row == label) {
            continue;
        }
        out.push_str(&format!("| {label} |"));
        for f in Family::ALL {
            let entries: Vec<String> = cells
                .iter()
                .filter(|c| c.row == label && c.n == n0 && c.family == f)
                .map(|c| {
                    let p = c.params();
                    if p.is_empty() { render_value(c) } else { format!("{p}: {}", render_value(c)) }
                })
                .collect();
            out.push_str(&format!(" {} |", entries.join("<br>")));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formulas_spot_checks() {
        assert_eq!(formula(Which::One, Row::N4, Family::MooreN, 1, 1), g(&[1, 2]));
        assert_eq!(formula(Which::Two, Row::N4, Family::MooreN, 1, 1), g(&[1, 1]));
        assert_eq!(formula(Which::Two, Row::N4, Family::Crs, 1, 1), g(&[1, 1, 2, 1]));
        assert_eq!(formula(Which::One, Row::Stable, Family::Crs, 3, 1), g(&[1, 1, 2]));
    }

    #[test]
    fn infinite_cells_use_wedges() {
        let e = expected(Which::Two, Row::N4, 4, Family::Crs, ExtNat::Fin(2), ExtNat::Inf).unwrap();
        assert_eq!(e, CanonicalGroup::new(0, vec![1, 3, 3, 2]));
        assert!(expected(Which::Two, Row::N4, 4, Family::Cr, ExtNat::Inf, ExtNat::Fin(1)).is_none());
    }
}
