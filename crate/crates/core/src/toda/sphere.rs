//! Generators of `pi_m(S^n)` for stems 0 through 4, localized at 2.

use serde::{Deserialize, Serialize};

use super::TodaError;

/// A named generator of a homotopy group of a sphere. The sphere dimension is
/// carried separately; e.g. `Nu` on `S^4` is `nu_4`, on `S^7` it is `nu_7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    Iota,
    Eta,
    Eta2,
    Nu,
    NuPrime,
    SigmaNuPrime,
    NuPrimeEta,
    SigmaNuPrimeEta,
    NuEta,
}

/// An integer combination of classes on a fixed sphere.
pub type Combo = Vec<(Class, i64)>;

pub const MAX_STEM: u32 = 4;

impl Class {
    pub fn stem(self) -> u32 {
        match self {
            Class::Iota => 0,
            Class::Eta => 1,
            Class::Eta2 => 2,
            Class::Nu | Class::NuPrime | Class::SigmaNuPrime => 3,
            Class::NuPrimeEta | Class::SigmaNuPrimeEta | Class::NuEta => 4,
        }
    }

    /// Whether the class exists on `S^n`.
    pub fn lives_on(self, n: u32) -> bool {
        match self {
            Class::Iota => n >= 1,
            Class::Eta | Class::Eta2 => n >= 3,
            Class::Nu => n >= 4,
            Class::NuPrime | Class::NuPrimeEta => n == 3,
            Class::SigmaNuPrime | Class::SigmaNuPrimeEta => n == 4,
            Class::NuEta => n == 4 || n == 5,
        }
    }

    /// Order of the class on `S^n`; `None` for infinite order.
    pub fn order(self, n: u32) -> Option<u64> {
        match self {
            Class::Iota => None,
            Class::Nu if n == 4 => None,
            Class::Nu => Some(8),
            Class::NuPrime | Class::SigmaNuPrime => Some(4),
            _ => Some(2),
        }
    }

    /// Whether the class is a suspension on `S^n`.
    pub fn is_suspension(self, n: u32) -> bool {
        match self {
            Class::Nu => n >= 5,
            Class::NuPrime | Class::NuPrimeEta => false,
            Class::NuEta => n >= 5,
            _ => true,
        }
    }

    /// Hopf invariant of the class on `S^n`, as a class on `S^{2n-1}`.
    pub fn hopf(self, n: u32) -> Result<Option<Class>, TodaError> {
        match (self, n) {
            (Class::Nu, 4) => Ok(Some(Class::Iota)),
            (Class::NuEta, 4) => Ok(Some(Class::Eta)),
            (Class::NuPrime, 3) | (Class::NuPrimeEta, 3) => {
                Err(TodaError::OutOfCatalog("Hopf invariant of a class on S^3".into()))
            }
            _ => Ok(None),
        }
    }

    pub fn name(self, n: u32) -> String {
        match self {
            Class::Iota => format!("iota{n}"),
            Class::Eta => format!("eta{n}"),
            Class::Eta2 => format!("eta{n}^2"),
            Class::Nu => format!("nu{n}"),
            Class::NuPrime => "nu'".to_string(),
            Class::SigmaNuPrime => "SigmaNu'".to_string(),
            Class::NuPrimeEta => "nu'∘eta6".to_string(),
            Class::SigmaNuPrimeEta => "SigmaNu'∘eta7".to_string(),
            Class::NuEta => format!("nu{n}∘eta{}", n + 3),
        }
    }
}

/// Catalog basis of `pi_m(S^n)`.
pub fn sphere_basis(n: u32, m: u32) -> Result<Vec<Class>, TodaError> {
    if m < n {
        return Ok(Vec::new());
    }
    let stem = m - n;
    if stem > MAX_STEM {
        return Err(TodaError::OutOfCatalog(format!("pi_{m}(S^{n}) has stem {stem}")));
    }
    if n < 3 && stem > 0 {
        return Err(TodaError::OutOfCatalog(format!("pi_{m}(S^{n})")));
    }
    let all = [
        Class::Iota,
        Class::Eta,
        Class::Eta2,
        Class::Nu,
        Class::NuPrime,
        Class::SigmaNuPrime,
        Class::NuPrimeEta,
        Class::SigmaNuPrimeEta,
        Class::NuEta,
    ];
    Ok(all.into_iter().filter(|c| c.stem() == stem && c.lives_on(n)).collect())
}

/// `Sigma(c)` for a class `c` on `S^n`, as a combination on `S^{n+1}`.
pub fn suspend(c: Class, n: u32) -> Combo {
    match (c, n) {
        (Class::NuPrime, 3) => vec![(Class::SigmaNuPrime, 1)],
        (Class::SigmaNuPrime, 4) => vec![(Class::Nu, 2)],
        (Class::NuPrimeEta, 3) => vec![(Class::SigmaNuPrimeEta, 1)],
        (Class::SigmaNuPrimeEta, 4) => Vec::new(),
        (Class::NuEta, 5) => Vec::new(),
        _ => vec![(c, 1)],
    }
}

/// A class on `S^{n-1}` whose suspension is `c` on `S^n`, if there is one.
pub fn desuspend(c: Class, n: u32) -> Option<Class> {
    match (c, n) {
        (Class::SigmaNuPrime, 4) => Some(Class::NuPrime),
        (Class::SigmaNuPrimeEta, 4) => Some(Class::NuPrimeEta),
        (Class::Nu, 4) | (Class::NuPrime, _) | (Class::NuPrimeEta, _) => None,
        (Class::Eta | Class::Eta2, n) if n <= 3 => None,
        (Class::Iota, n) if n <= 1 => None,
        (c, n) if c.lives_on(n - 1) => Some(c),
        _ => None,
    }
}

/// The composite `a o h`, where `a` is a class on `S^n` and `h` a class on the
/// source sphere of `a`. The result is a combination on `S^n`.
pub fn compose_classes(a: Class, n: u32, h: Class) -> Result<Combo, TodaError> {
    let out = |v: Combo| Ok(v);
    if h == Class::Iota {
        return out(vec![(a, 1)]);
    }
    if a == Class::Iota {
        return out(vec![(h, 1)]);
    }
    if a.stem() + h.stem() > MAX_STEM {
        return Err(TodaError::OutOfCatalog(format!(
            "composite {} o {} has stem {}",
            a.name(n),
            h.name(n + a.stem()),
            a.stem() + h.stem()
        )));
    }
    let eta_cubed = |n: u32| -> Result<Combo, TodaError> {
        match n {
            3 => Ok(vec![(Class::NuPrime, 2)]),
            4 => Ok(vec![(Class::SigmaNuPrime, 2)]),
            _ => Ok(vec![(Class::Nu, 4)]),
        }
    };
    match (a, h) {
        (Class::Eta, Class::Eta) => out(vec![(Class::Eta2, 1)]),
        (Class::Eta, Class::Eta2) | (Class::Eta2, Class::Eta) => eta_cubed(n),
        // eta^4 = eta o 4 nu = 0
        (Class::Eta2, Class::Eta2) => out(Vec::new()),
        (Class::Eta, Class::Nu) => match n {
            3 => out(vec![(Class::NuPrimeEta, 1)]),
            4 => out(vec![(Class::SigmaNuPrimeEta, 1)]),
            _ => out(Vec::new()),
        },
        (Class::Nu, Class::Eta) => match n {
            4 | 5 => out(vec![(Class::NuEta, 1)]),
            _ => out(Vec::new()),
        },
        (Class::NuPrime, Class::Eta) => out(vec![(Class::NuPrimeEta, 1)]),
        (Class::SigmaNuPrime, Class::Eta) => out(vec![(Class::SigmaNuPrimeEta, 1)]),
        _ => Err(TodaError::OutOfCatalog(format!(
            "composite {} o {}",
            a.name(n),
            h.name(n + a.stem())
        ))),
    }
}
