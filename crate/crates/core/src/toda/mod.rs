//! Composition calculus for low stems of spheres and wedges of spheres.

mod literature;
mod sphere;
mod wedge;

pub use literature::{literature_fact, LiteratureFact};
pub use sphere::{compose_classes, desuspend, sphere_basis, suspend, Class, Combo, MAX_STEM};
pub use wedge::{pi_sphere, pi_wedge, wedge_name, Element, Gen, WedgeGroup};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TodaError {
    #[error("outside the catalog: {0}")]
    OutOfCatalog(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cannot distribute over a sum: {0} is not a suspension")]
    NonSuspension(String),
}

/// The composition calculus, parametrized by the sign in `[iota4, iota4] = ±(2 nu4 - Sigma nu')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Toda {
    pub square_sign: i64,
}

impl Default for Toda {
    fn default() -> Self {
        Toda { square_sign: 1 }
    }
}

fn big(k: i64) -> BigInt {
    BigInt::from(k)
}

/// Re-homes a class on a single sphere into summand `idx` of a wedge.
pub fn embed(e: &Element, dims: &[u32], idx: usize) -> Element {
    assert_eq!(e.dims.len(), 1);
    assert_eq!(e.dims[0], dims[idx]);
    Element::from_terms(
        e.m,
        dims,
        e.terms.iter().map(|(g, c)| (Gen::Incl { idx, class: g.class() }, c.clone())),
    )
}

/// Iterated suspension of a class combination on a single sphere.
pub fn suspend_element(e: &Element, times: u32) -> Element {
    assert_eq!(e.dims.len(), 1);
    let mut cur = e.clone();
    for _ in 0..times {
        let n = cur.dims[0];
        let mut next = Element::zero(cur.m + 1, &[n + 1]);
        for (g, c) in &cur.terms {
            for (d, k) in suspend(g.class(), n) {
                next.add_term(Gen::Incl { idx: 0, class: d }, c * big(k));
            }
        }
        cur = next;
    }
    cur
}

impl Toda {
    pub fn with_sign(square_sign: i64) -> Self {
        Toda { square_sign }
    }

    /// `[iota_n, iota_n]` in `pi_{2n-1}(S^n)`.
    pub fn whitehead_square(&self, n: u32) -> Result<Element, TodaError> {
        let m = 2 * n - 1;
        match n {
            3 => Ok(Element::zero(m, &[3])),
            4 => Ok(Element::from_terms(
                m,
                &[4],
                [
                    (Gen::Incl { idx: 0, class: Class::Nu }, big(2 * self.square_sign)),
                    (Gen::Incl { idx: 0, class: Class::SigmaNuPrime }, big(-self.square_sign)),
                ],
            )),
            5 => Ok(Element::sphere_class(5, Class::NuEta)),
            _ => Err(TodaError::OutOfCatalog(format!("[iota{n},iota{n}] has stem {}", n - 1))),
        }
    }

    fn compose_gen(&self, g: Gen, dims: &[u32], m: u32, h: Class) -> Result<Element, TodaError> {
        let n = g.sphere(dims);
        let combo = compose_classes(g.class(), n, h)?;
        let k = m + h.stem();
        Ok(Element::from_terms(
            k,
            dims,
            combo.into_iter().map(|(c, coef)| {
                let gen = match g {
                    Gen::Incl { idx, .. } => Gen::Incl { idx, class: c },
                    Gen::Bracket { a, b, .. } => Gen::Bracket { a, b, class: c },
                };
                (gen, big(coef))
            }),
        ))
    }

    /// `alpha o h` for a single class `h` on the source sphere of `alpha`.
    fn compose_class(&self, alpha: &Element, h: Class) -> Result<Element, TodaError> {
        let q = alpha.m;
        if h == Class::Iota {
            return Ok(alpha.clone());
        }
        let k = q + h.stem();
        if h.is_suspension(q) || alpha.is_zero() {
            let mut out = Element::zero(k, &alpha.dims);
            for (g, c) in &alpha.terms {
                out = out.add(&self.compose_gen(*g, &alpha.dims, q, h)?.scale(c))?;
            }
            return Ok(out);
        }
        if alpha.terms.len() == 1 {
            let (g, c) = alpha.terms.iter().next().expect("one term");
            let pre = self.left_degree_compose(c, &Element::sphere_class(q, h))?;
            let mut out = Element::zero(k, &alpha.dims);
            for (d, e) in &pre.terms {
                out = out.add(&self.compose_gen(*g, &alpha.dims, q, d.class())?.scale(e))?;
            }
            return Ok(out);
        }
        Err(TodaError::NonSuspension(h.name(q)))
    }

    /// `alpha o beta` with `alpha` in `pi_q(W)` and `beta` in `pi_k(S^q)`.
    pub fn compose(&self, alpha: &Element, beta: &Element) -> Result<Element, TodaError> {
        if beta.dims != [alpha.m] {
            return Err(TodaError::DimensionMismatch(format!(
                "composing pi_{}(..) with a map into {}",
                alpha.m,
                wedge_name(&beta.dims)
            )));
        }
        let mut out = Element::zero(beta.m, &alpha.dims);
        for (h, d) in &beta.terms {
            out = out.add(&self.compose_class(alpha, h.class())?.scale(d))?;
        }
        Ok(out)
    }

    /// `(k iota_n) o alpha = k alpha + binom(k,2) [iota_n, iota_n] o H(alpha)` for `alpha` on `S^n`.
    pub fn left_degree_compose(&self, k: &BigInt, alpha: &Element) -> Result<Element, TodaError> {
        if alpha.dims.len() != 1 {
            return Err(TodaError::DimensionMismatch("degree maps act on a single sphere".into()));
        }
        let n = alpha.dims[0];
        let binom: BigInt = k * (k - BigInt::one()) / big(2);
        let mut out = alpha.scale(k);
        for (g, c) in &alpha.terms {
            if let Some(h) = g.class().hopf(n)? {
                if binom.is_zero() {
                    continue;
                }
                let sq = self.whitehead_square(n)?;
                let term = self.compose(&sq, &Element::sphere_class(2 * n - 1, h))?;
                out = out.add(&term.scale(&(c * &binom)))?;
            }
        }
        Ok(out)
    }

    /// `Sigma(a' ^ b')` where `a = Sigma a'` is a class on `S^{pa}` and `b = Sigma b'` a class on `S^{pb}`.
    fn smash(&self, a: Class, pa: u32, b: Class, pb: u32) -> Result<Element, TodaError> {
        let p = pa + a.stem();
        let left = suspend_element(&Element::sphere_class(pa, a), pb - 1);
        let right = suspend_element(&Element::sphere_class(pb, b), p - 1);
        self.compose(&left, &right)
    }

    fn bracket_gens(&self, g: Gen, h: Gen, dims: &[u32], p: u32, q: u32) -> Result<Element, TodaError> {
        let (Gen::Incl { idx: a, class: ca }, Gen::Incl { idx: b, class: cb }) = (g, h) else {
            return Err(TodaError::OutOfCatalog("iterated Whitehead products".into()));
        };
        let (pa, pb) = (dims[a], dims[b]);
        for (c, n) in [(ca, pa), (cb, pb)] {
            if !c.is_suspension(n) {
                return Err(TodaError::NonSuspension(c.name(n)));
            }
        }
        if a > b {
            let sign = if (p * q).is_multiple_of(2) { 1 } else { -1 };
            return Ok(self.bracket_gens(h, g, dims, q, p)?.scale(&big(sign)));
        }
        let gamma = self.smash(ca, pa, cb, pb)?;
        let m = p + q - 1;
        if a == b {
            let sq = self.whitehead_square(pa)?;
            let on_sphere = self.compose(&sq, &gamma)?;
            return Ok(embed(&on_sphere, dims, a));
        }
        Ok(Element::from_terms(
            m,
            dims,
            gamma.terms.iter().map(|(t, c)| (Gen::Bracket { a, b, class: t.class() }, c.clone())),
        ))
    }

    /// The Whitehead product `[x, y]`, expanded bilinearly.
    pub fn whitehead(&self, x: &Element, y: &Element) -> Result<Element, TodaError> {
        if x.dims != y.dims {
            return Err(TodaError::DimensionMismatch("Whitehead product of different wedges".into()));
        }
        let m = x.m + y.m - 1;
        let mut out = Element::zero(m, &x.dims);
        for (g, c) in &x.terms {
            for (h, d) in &y.terms {
                let t = self.bracket_gens(*g, *h, &x.dims, x.m, y.m)?;
                out = out.add(&t.scale(&(c * d)))?;
            }
        }
        Ok(out)
    }
}
