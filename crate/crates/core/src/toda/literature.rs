//! Homotopy groups imported from the literature rather than derived.

use serde::{Deserialize, Serialize};

use crate::abelian::CanonicalGroup;
use crate::spaces::{ExtNat, SpaceId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiteratureFact {
    pub space: SpaceId,
    pub dim: u32,
    pub group: CanonicalGroup,
    pub citation: String,
}

/// A certified value of `pi_dim(space)`, if one is on file.
pub fn literature_fact(space: &SpaceId, dim: u32) -> Option<LiteratureFact> {
    let fact = |group: CanonicalGroup, citation: &str| {
        Some(LiteratureFact { space: *space, dim, group, citation: citation.to_string() })
    };
    match *space {
        SpaceId::Moore { k, r: ExtNat::Fin(r) } if k >= 5 && dim == k + 2 => {
            let g = if r == 1 { CanonicalGroup::cyclic(2) } else { CanonicalGroup::new(0, vec![1, 1]) };
            fact(g, "Baues, (n-1)-connected (n+3)-dimensional polyhedra")
        }
        SpaceId::Moore { k: 4, r: ExtNat::Fin(r) } if dim == 7 => {
            let g = CanonicalGroup::new(0, vec![1, r + 1, (r - 1).min(2)]);
            fact(g, "homotopy of mod 2^r Moore spaces, prior computation")
        }
        SpaceId::Moore { k, r: ExtNat::Fin(1) } if k >= 5 && dim == k + 3 => {
            fact(CanonicalGroup::new(0, vec![1, 1]), "Wu, mod 2 Moore spaces")
        }
        SpaceId::Moore { k: 4, r: ExtNat::Fin(1) } if dim == 8 => {
            fact(CanonicalGroup::new(0, vec![1, 1]), "Wu, mod 2 Moore spaces")
        }
        SpaceId::CEta { n: 4 } if dim == 7 => fact(CanonicalGroup::new(1, vec![1]), "Mukai, the mapping cone of eta"),
        SpaceId::CEta { n } if n >= 5 && dim == n + 3 => fact(CanonicalGroup::cyclic(2), "Mukai, the mapping cone of eta"),
        SpaceId::CEta { n: 4 } if dim == 8 => fact(CanonicalGroup::cyclic(1), "Mukai, the mapping cone of eta"),
        _ => None,
    }
}
