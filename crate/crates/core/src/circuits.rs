//! The generator set, support-minimal circuits and the orthogonality-based
//! circuits used for oriented matroids.
//!
//! `X` lies in the generator set when `X o Y != Y` for every covector `Y`.
//! `X o Y == Y` holds exactly when `Y` agrees with `X` on the support of `X`
//! (outside the support composition returns `Y` unchanged), so `X` is a
//! generator iff its sign pattern on its own support is realized by no
//! covector. Circuits are therefore the unrealized full patterns on the
//! inclusion-minimal supports whose pattern set is incomplete.
//!
//! Such "deficient" supports are upward closed: if the pattern `p` on `S` is
//! unrealized and `S ⊆ T`, every extension of `p` to `T` is unrealized too,
//! since restricting a realizing covector to `S` would realize `p`. The
//! enumeration below visits supports by size and skips supersets of the
//! minimal deficient supports already found.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::com::{require_com, Com};
use crate::error::{Error, Result};
use crate::sign::{sign_patterns, IndexSet, SignVector};

/// Circuits together with the inclusion-minimal supports that carry them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitSet {
    pub n: usize,
    pub circuits: Vec<SignVector>,
    pub minimal_deficient_supports: Vec<IndexSet>,
}

impl CircuitSet {
    pub fn contains(&self, x: &SignVector) -> bool {
        self.circuits.binary_search(x).is_ok()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignVector> {
        self.circuits.iter()
    }

    /// Nonzero circuits `X` with `-X` also a circuit, one representative per
    /// pair: the one positive at the minimum of its support under `rank`
    /// (`rank[i]` is the position of `i` in a linear order).
    pub fn signed_pairs(&self, rank: &[usize]) -> Vec<SignVector> {
        self.circuits
            .iter()
            .filter(|x| !x.is_zero() && self.contains(&x.negate()))
            .filter(|x| {
                let m = x.support().iter().min_by_key(|&i| rank[i]).expect("nonzero");
                x.get(m) == crate::sign::Sign::Plus
            })
            .copied()
            .collect()
    }

    pub fn supports(&self) -> Vec<IndexSet> {
        self.minimal_deficient_supports.clone()
    }
}

/// `true` iff no covector agrees with `x` on the support of `x`.
pub fn in_generator_set(l: &Com, x: &SignVector) -> Result<bool> {
    l.check_vector(x)?;
    Ok(!l.iter().any(|y| x.conforms_to(y)))
}

/// Restrictions to `s` of the covectors that are nonzero on all of `s`.
pub fn realized_patterns(l: &Com, s: IndexSet) -> Result<BTreeSet<SignVector>> {
    if let Some(i) = s.difference(IndexSet::full(l.n())).iter().next() {
        return Err(Error::IndexOutOfRange { index: i, n: l.n() });
    }
    Ok(l
        .iter()
        .filter(|y| s.is_subset(y.support()))
        .map(|y| y.restrict(s))
        .collect())
}

fn pattern_count(l: &Com, s: IndexSet) -> usize {
    let mut seen: Vec<u64> = l
        .iter()
        .filter(|y| s.is_subset(y.support()))
        .map(|y| y.plus().intersection(s).mask())
        .collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Support-minimal generators, found by a size-ordered scan over supports.
pub fn circuits(l: &Com) -> CircuitSet {
    let n = l.n();
    let mut minimal: Vec<IndexSet> = Vec::new();
    let mut found: Vec<SignVector> = Vec::new();
    for size in 0..=n {
        for s in subsets_of_size(n, size) {
            if minimal.iter().any(|m| m.is_subset(s)) {
                continue;
            }
            if pattern_count(l, s) == 1usize << size {
                continue;
            }
            let realized = realized_patterns(l, s).expect("s within ground set");
            found.extend(sign_patterns(n, s).filter(|p| !realized.contains(p)));
            minimal.push(s);
        }
    }
    found.sort_unstable();
    minimal.sort_unstable();
    CircuitSet {
        n,
        circuits: found,
        minimal_deficient_supports: minimal,
    }
}

/// All `size`-element subsets of `{0..n-1}` in increasing mask order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = IndexSet> {
    let limit: u128 = 1u128 << n;
    let mut next: Option<u128> = (size <= n).then(|| (1u128 << size) - 1);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack: next integer with the same popcount.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < limit).then_some(nxt)
        };
        Some(IndexSet::from_mask(cur as u64))
    })
}

/// Supports are disjoint, or they meet with both an agreeing and an opposing coordinate.
pub fn orthogonal(x: &SignVector, y: &SignVector) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(orthogonal_unchecked(x, y))
}

fn orthogonal_unchecked(x: &SignVector, y: &SignVector) -> bool {
    if x.support().is_disjoint(y.support()) {
        return true;
    }
    let agree = x.plus().intersection(y.plus()).union(x.minus().intersection(y.minus()));
    let oppose = x.separator_unchecked(y);
    !agree.is_empty() && !oppose.is_empty()
}

/// Support-minimal nonzero signed sets orthogonal to every covector.
/// Requires an oriented matroid.
pub fn om_circuits(l: &Com) -> Result<CircuitSet> {
    require_com(l)?;
    if !l.contains_zero() {
        return Err(Error::Precondition("om_circuits needs an oriented matroid".into()));
    }
    let n = l.n();
    let mut minimal: Vec<IndexSet> = Vec::new();
    let mut found: Vec<SignVector> = Vec::new();
    for size in 1..=n {
        for s in subsets_of_size(n, size) {
            if minimal.iter().any(|m| m.is_subset(s)) {
                continue;
            }
            let here: Vec<SignVector> = sign_patterns(n, s)
                .filter(|x| l.iter().all(|y| orthogonal_unchecked(x, y)))
                .collect();
            if !here.is_empty() {
                found.extend(here);
                minimal.push(s);
            }
        }
    }
    found.sort_unstable();
    minimal.sort_unstable();
    Ok(CircuitSet {
        n,
        circuits: found,
        minimal_deficient_supports: minimal,
    })
}
