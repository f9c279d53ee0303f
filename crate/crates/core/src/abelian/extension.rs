use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{CanonicalGroup, PresentedGroup};
use super::matrix::IntMatrix;
use super::AlgebraError;

/// Middle group `E` of `0 -> sub -> E -> Z/2^a -> 0` whose class sends the generator of
/// the quotient to `sum 2^{v_i} c_i`, where `c_i` runs over the cyclic summands of `sub`
/// (torsion first, largest exponent first, then free ones). A valuation at or above the
/// order of the summand stands for a zero coefficient.
pub fn extension_middle_group(sub: &CanonicalGroup, a: u32, valuations: &[u32]) -> CanonicalGroup {
    let g = sub.rank();
    assert_eq!(valuations.len(), g, "one valuation per summand");
    let mut cols: Vec<Vec<BigInt>> = Vec::new();
    for (i, &e) in sub.torsion_exponents.iter().enumerate() {
        let mut c = vec![BigInt::zero(); g + 1];
        c[i] = BigInt::one() << e;
        cols.push(c);
    }
    let mut lift = vec![BigInt::zero(); g + 1];
    for (i, &v) in valuations.iter().enumerate() {
        let order = sub.torsion_exponents.get(i).copied();
        if order.is_none_or(|e| v < e) {
            lift[i] = -(BigInt::one() << v);
        }
    }
    lift[g] = BigInt::one() << a;
    cols.push(lift);
    let gens = (0..=g).map(|i| format!("g{i}")).collect();
    PresentedGroup::new(gens, IntMatrix::from_columns(g + 1, &cols))
        .expect("shape")
        .canonical_form()
}

/// All isomorphism types of `E` in `0 -> sub -> E -> quot -> 0`, sorted and deduplicated.
///
/// `quot` must be trivial, free, or cyclic.
pub fn extension_candidates(sub: &CanonicalGroup, quot: &CanonicalGroup) -> Result<Vec<CanonicalGroup>, AlgebraError> {
    if quot.torsion_exponents.is_empty() {
        return Ok(vec![sub.direct_sum(quot)]);
    }
    if !quot.is_cyclic() {
        return Err(AlgebraError::NonCyclicKernel(quot.pretty()));
    }
    let a = quot.torsion_exponents[0];
    let bounds: Vec<u32> = sub
        .torsion_exponents
        .iter()
        .map(|&e| e.min(a))
        .chain(std::iter::repeat_n(a, sub.free_rank))
        .collect();
    let mut out = BTreeSet::new();
    let mut vals = vec![0u32; bounds.len()];
    loop {
        out.insert(extension_middle_group(sub, a, &vals));
        // odometer over 0..=bound per summand
        let mut i = 0;
        while i < vals.len() && vals[i] == bounds[i] {
            vals[i] = 0;
            i += 1;
        }
        if i == vals.len() {
            break;
        }
        vals[i] += 1;
    }
    Ok(out.into_iter().collect())
}
