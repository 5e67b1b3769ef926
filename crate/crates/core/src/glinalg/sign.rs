//! Koszul signs for permuting graded factors.

use super::scalar::Scalar;
use crate::Error;

/// Parity of `sum over inversions (i, j) of deg[perm[i]] * deg[perm[j]]`.
///
/// `perm[k]` is the old position of the factor that lands at position `k`
/// (0-based), i.e. the new word is `old[perm[0]], old[perm[1]], ...`.
pub fn koszul_parity(perm: &[usize], degrees: &[i64]) -> Result<bool, Error> {
    if perm.len() != degrees.len() {
        return Err(Error::Argument(format!(
            "permutation of length {} against {} degrees",
            perm.len(),
            degrees.len()
        )));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::Argument(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    let mut odd = false;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] && degrees[perm[i]] * degrees[perm[j]] % 2 != 0 {
                odd = !odd;
            }
        }
    }
    Ok(odd)
}

/// `+1` or `-1`: the sign picked up by reordering graded factors.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> Result<Scalar, Error> {
    Ok(if koszul_parity(perm, degrees)? {
        -Scalar::one()
    } else {
        Scalar::one()
    })
}

/// Same as [`koszul_sign`] with 1-based indices, the convention used on the
/// command line and in fixture files.
pub fn koszul_sign_1based(perm: &[usize], degrees: &[i64]) -> Result<Scalar, Error> {
    let zero: Vec<usize> = perm
        .iter()
        .map(|&p| {
            p.checked_sub(1)
                .ok_or_else(|| Error::Argument("1-based permutation contains 0".into()))
        })
        .collect::<Result<_, _>>()?;
    koszul_sign(&zero, degrees)
}
