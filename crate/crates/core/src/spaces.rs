//! The indecomposable (n-1)-connected complexes of dimension at most n+2.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::james::CofibrationSpec;
use crate::toda::{Class, Element, Gen};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpaceError {
    #[error("cannot parse space id {0:?}: {1}")]
    Parse(String, String),
    #[error("invalid space: {0}")]
    Invalid(String),
    #[error("no catalogued cross terms for {0} in dimension {1}")]
    UncataloguedCrossTerm(String, u32),
}

/// A positive integer or infinity. `2^inf` is read as 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExtNat {
    Fin(u32),
    Inf,
}

impl ExtNat {
    pub fn is_inf(self) -> bool {
        self == ExtNat::Inf
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Fin(k) => Some(k),
            ExtNat::Inf => None,
        }
    }

    /// `2^self`, with `2^inf = 0`.
    pub fn pow2(self) -> BigInt {
        match self {
            ExtNat::Fin(k) => BigInt::one() << k,
            ExtNat::Inf => BigInt::zero(),
        }
    }

    /// 1 when the value is 1, else 0 (including infinity).
    pub fn epsilon(self) -> u32 {
        u32::from(self == ExtNat::Fin(1))
    }

    /// `min(self, b)` as a finite number.
    pub fn min_with(self, b: u32) -> u32 {
        match self {
            ExtNat::Fin(k) => k.min(b),
            ExtNat::Inf => b,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(k) => write!(f, "{k}"),
            ExtNat::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(ExtNat::Inf),
            t => match t.parse::<u32>() {
                Ok(k) if k >= 1 => Ok(ExtNat::Fin(k)),
                _ => Err(format!("expected a positive integer or inf, got {t:?}")),
            },
        }
    }
}

/// Identifier of a space. Chang complexes are indexed by their bottom cell `n`,
/// Moore spaces by their bottom cell `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpaceId {
    Sphere { d: u32 },
    /// `M^k_{2^r}`: the cone of the degree `2^r` map on `S^k`.
    Moore { k: u32, r: ExtNat },
    /// `C_eta^{n+2}`: the cone of `eta_n`.
    CEta { n: u32 },
    /// `C_r^{n+2}`.
    Cr { n: u32, r: ExtNat },
    /// `C^{n+2,s}`.
    Cs { n: u32, s: ExtNat },
    /// `C_r^{n+2,s}`.
    Crs { n: u32, r: ExtNat, s: ExtNat },
}

impl SpaceId {
    /// Dimension of the bottom cell.
    pub fn bottom(&self) -> u32 {
        match *self {
            SpaceId::Sphere { d } => d,
            SpaceId::Moore { k, .. } => k,
            SpaceId::CEta { n } | SpaceId::Cr { n, .. } | SpaceId::Cs { n, .. } | SpaceId::Crs { n, .. } => n,
        }
    }

    pub fn validate(&self) -> Result<(), SpaceError> {
        let bad = |msg: &str| Err(SpaceError::Invalid(format!("{self}: {msg}")));
        match *self {
            SpaceId::Sphere { d: 0 } => bad("sphere dimension must be positive"),
            SpaceId::Moore { k, .. } if k < 2 => bad("Moore spaces need k >= 2"),
            SpaceId::CEta { n } | SpaceId::Cr { n, .. } | SpaceId::Cs { n, .. } | SpaceId::Crs { n, .. } if n < 3 => {
                bad("Chang complexes need n >= 3")
            }
            SpaceId::Cr { r: ExtNat::Inf, .. } => bad("C_inf^{n+2} is not an elementary Chang complex"),
            SpaceId::Cs { s: ExtNat::Inf, .. } => bad("C^{n+2,inf} is not an elementary Chang complex"),
            SpaceId::Crs { r: ExtNat::Inf, s: ExtNat::Inf, .. } => bad("at most one parameter may be infinite"),
            _ => Ok(()),
        }
    }

    /// Largest finite parameter, for the exponent cap.
    pub fn max_param(&self) -> u32 {
        let f = |e: ExtNat| e.finite().unwrap_or(0);
        match *self {
            SpaceId::Moore { r, .. } | SpaceId::Cr { r, .. } => f(r),
            SpaceId::Cs { s, .. } => f(s),
            SpaceId::Crs { r, s, .. } => f(r).max(f(s)),
            _ => 0,
        }
    }

    /// The cofibration `X -> Y -> C_f` presenting the space.
    pub fn cofibration(&self) -> Result<CofibrationSpec, SpaceError> {
        self.validate()?;
        let wrap = |r: Result<CofibrationSpec, _>| r.map_err(|e| SpaceError::Invalid(format!("{self}: {e}")));
        match *self {
            SpaceId::Sphere { d } => wrap(CofibrationSpec::new(vec![], vec![d], vec![])),
            SpaceId::Moore { k, r } => {
                let f = Element::inclusion(&[k], 0).scale(&r.pow2());
                wrap(CofibrationSpec::new(vec![k], vec![k], vec![f]))
            }
            SpaceId::CEta { n } => {
                let f = Element::sphere_class(n, Class::Eta);
                wrap(CofibrationSpec::new(vec![n + 1], vec![n], vec![f]))
            }
            SpaceId::Cr { n, r } => {
                let eta = Element::sphere_class(n, Class::Eta);
                let deg = Element::inclusion(&[n], 0).scale(&r.pow2());
                wrap(CofibrationSpec::new(vec![n + 1, n], vec![n], vec![eta, deg]))
            }
            SpaceId::Cs { n, s } => {
                let y = [n + 1, n];
                wrap(CofibrationSpec::new(vec![n + 1], y.to_vec(), vec![chang_top(n, s)]))
            }
            SpaceId::Crs { n, r, s } => {
                let y = [n + 1, n];
                let f2 = Element::inclusion(&y, 1).scale(&r.pow2());
                wrap(CofibrationSpec::new(y.to_vec(), y.to_vec(), vec![chang_top(n, s), f2]))
            }
        }
    }

    /// Indecomposable wedge summands of a space with an infinite parameter.
    pub fn wedge_reduction(&self) -> Vec<SpaceId> {
        match *self {
            SpaceId::Moore { k, r: ExtNat::Inf } => vec![SpaceId::Sphere { d: k }, SpaceId::Sphere { d: k + 1 }],
            SpaceId::Crs { n, r, s: ExtNat::Inf } => vec![SpaceId::Cr { n, r }, SpaceId::Sphere { d: n + 1 }],
            SpaceId::Crs { n, r: ExtNat::Inf, s } => vec![SpaceId::Cs { n, s }, SpaceId::Sphere { d: n + 1 }],
            other => vec![other],
        }
    }

    /// The same family with bottom cell one lower, if that still makes sense.
    pub fn desuspend(&self) -> Option<SpaceId> {
        let low = match *self {
            SpaceId::Sphere { d } => SpaceId::Sphere { d: d.checked_sub(1)? },
            SpaceId::Moore { k, r } => SpaceId::Moore { k: k.checked_sub(1)?, r },
            SpaceId::CEta { n } => SpaceId::CEta { n: n.checked_sub(1)? },
            SpaceId::Cr { n, r } => SpaceId::Cr { n: n.checked_sub(1)?, r },
            SpaceId::Cs { n, s } => SpaceId::Cs { n: n.checked_sub(1)?, s },
            SpaceId::Crs { n, r, s } => SpaceId::Crs { n: n.checked_sub(1)?, r, s },
        };
        low.validate().is_ok().then_some(low)
    }

    /// The space with an infinite parameter that splits off this one as a wedge summand.
    pub fn wedge_parent(&self) -> Option<SpaceId> {
        match *self {
            SpaceId::Cr { n, r } => Some(SpaceId::Crs { n, r, s: ExtNat::Inf }),
            SpaceId::Cs { n, s } => Some(SpaceId::Crs { n, r: ExtNat::Inf, s }),
            _ => None,
        }
    }
}

/// `2^s j1 + j2 o eta_n` in `pi_{n+1}(S^{n+1} v S^n)`.
fn chang_top(n: u32, s: ExtNat) -> Element {
    let y = [n + 1, n];
    let eta = Element::from_gen(n + 1, &y, Gen::Incl { idx: 1, class: Class::Eta });
    Element::inclusion(&y, 0).scale(&s.pow2()).add(&eta).expect("same group")
}

/// Extra Hilton summands in `pi_m(A v S^{n+1})` beyond `pi_m(A) + pi_m(S^{n+1})`,
/// for `A` a Chang complex with bottom cell `n`.
///
/// The first cross term is `pi_m` of a complex with bottom cell `2n`, so it vanishes
/// for `m < 2n`; at `m = 2n` only the cases with `n = 4` are catalogued.
pub fn hilton_cross_terms(summands: &[SpaceId], m: u32) -> Result<Vec<SpaceId>, SpaceError> {
    let name = || summands.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" v ");
    let [a, SpaceId::Sphere { d }] = summands else {
        return Err(SpaceError::UncataloguedCrossTerm(name(), m));
    };
    let n = a.bottom();
    if *d != n + 1 || !matches!(a, SpaceId::Cr { .. } | SpaceId::Cs { .. }) {
        return Err(SpaceError::UncataloguedCrossTerm(name(), m));
    }
    if m < 2 * n {
        return Ok(Vec::new());
    }
    match (*a, m) {
        (SpaceId::Cr { n: 4, r }, 8) => Ok(vec![SpaceId::Cr { n: 8, r }]),
        (SpaceId::Cs { n: 4, s }, 8) => Ok(vec![SpaceId::Cs { n: 8, s }]),
        _ => Err(SpaceError::UncataloguedCrossTerm(name(), m)),
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceId::Sphere { d } => write!(f, "S^{{{d}}}"),
            SpaceId::Moore { k, r } => write!(f, "M{r}^{{{k}}}"),
            SpaceId::CEta { n } => write!(f, "Ceta^{{{}}}", n + 2),
            SpaceId::Cr { n, r } => write!(f, "C{r}^{{{}}}", n + 2),
            SpaceId::Cs { n, s } => write!(f, "C^{{{},{s}}}", n + 2),
            SpaceId::Crs { n, r, s } => write!(f, "C{r}^{{{},{s}}}", n + 2),
        }
    }
}

impl FromStr for SpaceId {
    type Err = SpaceError;

    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = |msg: &str| SpaceError::Parse(input.to_string(), msg.to_string());
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, sup) = s.split_once('^').ok_or_else(|| err("expected '^'"))?;
        let sup = sup.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(sup);
        let mut dims = sup.split(',');
        let top: u32 = dims.next().unwrap_or("").parse().map_err(|_| err("bad dimension"))?;
        let second: Option<ExtNat> = dims.next().map(|t| t.parse()).transpose().map_err(|e: String| err(&e))?;
        if dims.next().is_some() {
            return Err(err("too many superscripts"));
        }
        let param = |p: &str| -> Result<Option<ExtNat>, SpaceError> {
            let p = p.strip_prefix('_').unwrap_or(p);
            let p = p.strip_prefix('{').and_then(|t| t.strip_suffix('}')).unwrap_or(p);
            if p.is_empty() {
                Ok(None)
            } else {
                p.parse().map(Some).map_err(|e: String| err(&e))
            }
        };
        let below = |k: u32| top.checked_sub(k).ok_or_else(|| err("dimension too small"));
        let id = if let Some(rest) = head.strip_prefix("Ceta") {
            if !rest.is_empty() || second.is_some() {
                return Err(err("Ceta takes no parameters"));
            }
            SpaceId::CEta { n: below(2)? }
        } else if let Some(rest) = head.strip_prefix('C') {
            let n = below(2)?;
            match (param(rest)?, second) {
                (Some(r), Some(s)) => SpaceId::Crs { n, r, s },
                (Some(r), None) => SpaceId::Cr { n, r },
                (None, Some(s)) => SpaceId::Cs { n, s },
                (None, None) => return Err(err("Chang complexes need r or s")),
            }
        } else if let Some(rest) = head.strip_prefix('M') {
            let r = param(rest)?.ok_or_else(|| err("Moore spaces need r"))?;
            if second.is_some() {
                return Err(err("Moore spaces take one dimension"));
            }
            SpaceId::Moore { k: top, r }
        } else if head == "S" {
            if second.is_some() {
                return Err(err("spheres take one dimension"));
            }
            SpaceId::Sphere { d: top }
        } else {
            return Err(err("unknown family"));
        };
        id.validate()?;
        Ok(id)
    }
}
