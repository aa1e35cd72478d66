//! Linear orders, broken circuits and NBC sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::circuits::{circuits, CircuitSet};
use crate::com::{coloops, require_com, topes, Com};
use crate::error::{Error, Result};
use crate::minors::{contract, delete};
use crate::sign::{IndexSet, SignVector};

/// A linear order on `{0..n-1}`; `perm` lists the elements from smallest to largest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearOrder {
    perm: Vec<usize>,
    #[serde(skip)]
    rank: Vec<usize>,
}

impl LinearOrder {
    pub fn new(perm: Vec<usize>) -> Result<LinearOrder> {
        let n = perm.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &e) in perm.iter().enumerate() {
            if e >= n {
                return Err(Error::IndexOutOfRange { index: e, n });
            }
            if rank[e] != usize::MAX {
                return Err(Error::Parse(format!("element {e} repeated in order")));
            }
            rank[e] = pos;
        }
        Ok(LinearOrder { perm, rank })
    }

    pub fn natural(n: usize) -> LinearOrder {
        LinearOrder::new((0..n).collect()).expect("identity is a permutation")
    }

    /// The natural order with `i` moved to the top.
    pub fn with_max(n: usize, i: usize) -> Result<LinearOrder> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut perm: Vec<usize> = (0..n).filter(|&e| e != i).collect();
        perm.push(i);
        LinearOrder::new(perm)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Position of each element in the order.
    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    pub fn max_element(&self) -> Option<usize> {
        self.perm.last().copied()
    }

    pub fn min_of(&self, s: IndexSet) -> Option<usize> {
        s.iter().min_by_key(|&i| self.rank[i])
    }

    /// The induced order after removing `i` and shifting higher labels down.
    pub fn without(&self, i: usize) -> LinearOrder {
        let perm = self
            .perm
            .iter()
            .filter(|&&e| e != i)
            .map(|&e| if e > i { e - 1 } else { e })
            .collect();
        LinearOrder::new(perm).expect("restriction of a permutation")
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses the comma-separated form `2,0,1`.
impl FromStr for LinearOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<LinearOrder> {
        let s = s.trim();
        if s.is_empty() {
            return LinearOrder::new(Vec::new());
        }
        let perm = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad order entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearOrder::new(perm)
    }
}

/// The support of `x` minus its minimum under `order`.
pub fn broken_circuit(x: &SignVector, order: &LinearOrder) -> Result<IndexSet> {
    if x.n() != order.n() {
        return Err(Error::SizeMismatch {
            left: x.n(),
            right: order.n(),
        });
    }
    let m = order
        .min_of(x.support())
        .ok_or_else(|| Error::Precondition("broken circuit of the zero signed set".into()))?;
    Ok(x.support().without(m))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NbcFamily {
    pub order: LinearOrder,
    pub sets: Vec<IndexSet>,
    /// `counts[k]` is the number of NBC sets of size `k`; no trailing zeros.
    pub counts: Vec<usize>,
}

impl NbcFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: IndexSet) -> bool {
        self.sets.binary_search(&s).is_ok()
    }
}

/// Minimal sets whose supersets are not NBC: circuit supports and broken
/// circuits of nonzero `±X` pairs.
pub fn blocking_sets(c: &CircuitSet, order: &LinearOrder) -> Vec<IndexSet> {
    let mut blockers: Vec<IndexSet> = c.minimal_deficient_supports.clone();
    for x in c.iter().filter(|x| !x.is_zero() && c.contains(&x.negate())) {
        blockers.push(broken_circuit(x, order).expect("nonzero circuit"));
    }
    blockers.sort_unstable();
    blockers.dedup();
    // Keep inclusion-minimal blockers only.
    let minimal: Vec<IndexSet> = blockers
        .iter()
        .filter(|b| !blockers.iter().any(|o| o != *b && o.is_subset(**b)))
        .copied()
        .collect();
    minimal
}

pub fn nbc_sets(l: &Com, order: &LinearOrder) -> Result<NbcFamily> {
    nbc_sets_with(l, order, &circuits(l))
}

/// NBC sets from precomputed circuits, by a depth-first scan that adds
/// elements in increasing label order and abandons any branch containing a
/// blocking set (the NBC condition is closed under taking subsets).
pub fn nbc_sets_with(l: &Com, order: &LinearOrder, c: &CircuitSet) -> Result<NbcFamily> {
    if order.n() != l.n() {
        return Err(Error::SizeMismatch {
            left: l.n(),
            right: order.n(),
        });
    }
    let blockers = blocking_sets(c, order);
    let blocked = |s: IndexSet| blockers.iter().any(|b| b.is_subset(s));
    let mut sets = Vec::new();
    if !blocked(IndexSet::EMPTY) {
        let mut stack = vec![(IndexSet::EMPTY, 0usize)];
        sets.push(IndexSet::EMPTY);
        while let Some((s, start)) = stack.pop() {
            for e in start..l.n() {
                let t = s.with(e);
                if !blocked(t) {
                    sets.push(t);
                    stack.push((t, e + 1));
                }
            }
        }
    }
    sets.sort_unstable();
    let mut counts = vec![0usize; sets.last().map_or(0, |s| s.len() + 1)];
    for s in &sets {
        counts[s.len()] += 1;
    }
    Ok(NbcFamily {
        order: order.clone(),
        sets,
        counts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NbcTopeReport {
    pub nbc: usize,
    pub topes: usize,
    pub holds: bool,
}

/// `|N| = |tau|`.
pub fn verify_nbc_tope(l: &Com, order: &LinearOrder) -> Result<NbcTopeReport> {
    require_com(l)?;
    let nbc = nbc_sets(l, order)?.len();
    let topes = topes(l).len();
    Ok(NbcTopeReport {
        nbc,
        topes,
        holds: nbc == topes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NbcRecursionReport {
    pub element: usize,
    pub nbc: usize,
    pub deletion_nbc: usize,
    pub contraction_nbc: usize,
    /// NBC sets of the deletion are exactly the NBC sets avoiding `i`.
    pub deletion_matches: bool,
    /// NBC sets of the contraction plus `i` are exactly the NBC sets containing `i`.
    pub contraction_matches: bool,
    pub holds: bool,
}

/// Deletion/contraction recursion for NBC sets at the maximal element of `order`.
pub fn verify_nbc_recursion(l: &Com, order: &LinearOrder) -> Result<NbcRecursionReport> {
    require_com(l)?;
    let i = order
        .max_element()
        .ok_or_else(|| Error::Precondition("empty ground set has no maximal element".into()))?;
    if coloops(l).contains(i) {
        return Err(Error::Coloop(i));
    }
    let family = nbc_sets(l, order)?;
    let minor_order = order.without(i);
    let del = nbc_sets(&delete(l, i)?, &minor_order)?;
    let con = nbc_sets(&contract(l, i)?, &minor_order)?;

    let without_i: BTreeSet<IndexSet> = family
        .sets
        .iter()
        .filter(|s| !s.contains(i))
        .map(|s| s.squeeze(i))
        .collect();
    let with_i: BTreeSet<IndexSet> = family.sets.iter().filter(|s| s.contains(i)).copied().collect();
    let del_set: BTreeSet<IndexSet> = del.sets.iter().copied().collect();
    let con_lifted: BTreeSet<IndexSet> = con.sets.iter().map(|s| s.spread(i).with(i)).collect();

    let deletion_matches = del_set == without_i;
    let contraction_matches = con_lifted == with_i;
    Ok(NbcRecursionReport {
        element: i,
        nbc: family.len(),
        deletion_nbc: del.len(),
        contraction_nbc: con.len(),
        deletion_matches,
        contraction_matches,
        holds: deletion_matches && contraction_matches && family.len() == del.len() + con.len(),
    })
}
