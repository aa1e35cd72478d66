//! Deletion and contraction at a single element, walls and the tope
//! trichotomy, and checkers for how circuits and topes behave under minors.
//!
//! Minors live on `{0..n-2}`: elements above the removed one shift down by
//! one. [`LabeledCom`] tracks original labels across iterated minors.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::circuits::{circuits, in_generator_set, realized_patterns, subsets_of_size, CircuitSet};
use crate::com::{coloops, require_com, topes, Com};
use crate::error::{Error, Result};
use crate::sign::{sign_patterns, IndexSet, Sign, SignVector};

/// Forgets coordinate `i`.
pub fn delete(l: &Com, i: usize) -> Result<Com> {
    l.check_index(i)?;
    Com::new(l.n() - 1, l.iter().map(|x| x.project(i)))
}

/// Keeps the covectors vanishing at `i`, then forgets `i`.
pub fn contract(l: &Com, i: usize) -> Result<Com> {
    l.check_index(i)?;
    Com::new(
        l.n() - 1,
        l.iter().filter(|x| x.get(i).is_zero()).map(|x| x.project(i)),
    )
}

/// A COM together with the original label of each of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledCom {
    pub com: Com,
    pub labels: Vec<usize>,
}

impl LabeledCom {
    pub fn new(com: Com) -> LabeledCom {
        let labels = (0..com.n()).collect();
        LabeledCom { com, labels }
    }

    fn position(&self, label: usize) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or(Error::IndexOutOfRange {
                index: label,
                n: self.com.n(),
            })
    }

    fn drop_label(&self, pos: usize) -> Vec<usize> {
        let mut labels = self.labels.clone();
        labels.remove(pos);
        labels
    }

    /// Deletes the element carrying original label `label`.
    pub fn delete(&self, label: usize) -> Result<LabeledCom> {
        let pos = self.position(label)?;
        Ok(LabeledCom {
            com: delete(&self.com, pos)?,
            labels: self.drop_label(pos),
        })
    }

    /// Contracts the element carrying original label `label`.
    pub fn contract(&self, label: usize) -> Result<LabeledCom> {
        let pos = self.position(label)?;
        Ok(LabeledCom {
            com: contract(&self.com, pos)?,
            labels: self.drop_label(pos),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorReport {
    pub element: usize,
    pub deletion: Com,
    pub contraction: Com,
    /// `(|tau|, |tau'|, |tau''|)`
    pub tope_counts: (usize, usize, usize),
}

pub fn minor_report(l: &Com, i: usize) -> Result<MinorReport> {
    let deletion = delete(l, i)?;
    let contraction = contract(l, i)?;
    let tope_counts = (topes(l).len(), topes(&deletion).len(), topes(&contraction).len());
    Ok(MinorReport {
        element: i,
        deletion,
        contraction,
        tope_counts,
    })
}

/// `i` is a wall of the tope `x` when zeroing coordinate `i` gives a covector.
pub fn is_wall(l: &Com, x: &SignVector, i: usize) -> Result<bool> {
    l.check_vector(x)?;
    l.check_index(i)?;
    if !x.is_full() || !l.contains(x) {
        return Err(Error::NotATope(x.word()));
    }
    Ok(l.contains(&x.with_sign(i, Sign::Zero)))
}

/// Topes split by whether `i` is a wall, and by the sign at `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TopeTrichotomy {
    pub wall_plus: Vec<SignVector>,
    pub wall_minus: Vec<SignVector>,
    pub not_wall: Vec<SignVector>,
}

pub fn tope_trichotomy(l: &Com, i: usize) -> Result<TopeTrichotomy> {
    l.check_index(i)?;
    if coloops(l).contains(i) {
        return Err(Error::Coloop(i));
    }
    let mut out = TopeTrichotomy::default();
    for x in topes(l) {
        if !l.contains(&x.with_sign(i, Sign::Zero)) {
            out.not_wall.push(x);
        } else if x.get(i) == Sign::Plus {
            out.wall_plus.push(x);
        } else {
            out.wall_minus.push(x);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopeRecursionReport {
    pub element: usize,
    pub topes: usize,
    pub deletion_topes: usize,
    pub contraction_topes: usize,
    /// `pi` maps the wall topes with `+` at `i` bijectively onto the contraction's topes.
    pub contraction_bijection: bool,
    /// `pi` maps the remaining topes bijectively onto the deletion's topes.
    pub deletion_bijection: bool,
    pub holds: bool,
}

fn is_bijection_onto(sources: &[SignVector], i: usize, targets: &[SignVector]) -> bool {
    let images: Vec<SignVector> = sources.iter().map(|x| x.project(i)).collect();
    let image_set: BTreeSet<SignVector> = images.iter().copied().collect();
    let target_set: BTreeSet<SignVector> = targets.iter().copied().collect();
    image_set.len() == images.len() && image_set == target_set
}

pub fn verify_tope_recursion(l: &Com, i: usize) -> Result<TopeRecursionReport> {
    require_com(l)?;
    let parts = tope_trichotomy(l, i)?;
    let tau = topes(l);
    let tau_del = topes(&delete(l, i)?);
    let tau_con = topes(&contract(l, i)?);
    let contraction_bijection = is_bijection_onto(&parts.wall_plus, i, &tau_con);
    let rest: Vec<SignVector> = parts.wall_minus.iter().chain(&parts.not_wall).copied().collect();
    let deletion_bijection = is_bijection_onto(&rest, i, &tau_del);
    Ok(TopeRecursionReport {
        element: i,
        topes: tau.len(),
        deletion_topes: tau_del.len(),
        contraction_topes: tau_con.len(),
        contraction_bijection,
        deletion_bijection,
        holds: contraction_bijection && deletion_bijection && tau.len() == tau_del.len() + tau_con.len(),
    })
}

/// Support-minimal elements of `{ pi(X) : X in G }` for the generator set `G` of `l`.
///
/// `Z = pi(X)` for some generator `X` iff one of the two extensions of `Z`
/// with a nonzero sign at `i` is a generator (an extension by zero that is a
/// generator forces both nonzero extensions to be generators as well).
pub fn projected_generator_minima(l: &Com, i: usize) -> Result<Vec<SignVector>> {
    l.check_index(i)?;
    let m = l.n() - 1;
    let mut minimal: Vec<IndexSet> = Vec::new();
    let mut found = Vec::new();
    for size in 0..=m {
        for s in subsets_of_size(m, size) {
            if minimal.iter().any(|t| t.is_subset(s)) {
                continue;
            }
            let here: Vec<SignVector> = sign_patterns(m, s)
                .filter(|z| {
                    let lifted = z.extend_zero(i);
                    [Sign::Plus, Sign::Minus].iter().any(|&sg| {
                        in_generator_set(l, &lifted.with_sign(i, sg)).expect("sizes agree")
                    })
                })
                .collect();
            if !here.is_empty() {
                found.extend(here);
                minimal.push(s);
            }
        }
    }
    found.sort_unstable();
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitMinorReport {
    pub element: usize,
    /// Deletion circuits are the circuits vanishing at `i`, projected.
    pub deletion_law: bool,
    /// Contraction circuits are the support-minimal projections of generators
    /// (checked only when `i` is not a coloop).
    pub contraction_law: Option<bool>,
    /// Circuits whose support contains `i` project to contraction circuits.
    pub projection_law: Option<bool>,
    pub holds: bool,
}

pub fn verify_circuit_minor_laws(l: &Com, i: usize) -> Result<CircuitMinorReport> {
    require_com(l)?;
    l.check_index(i)?;
    let c = circuits(l);
    let c_del = circuits(&delete(l, i)?);
    let expected_del: Vec<SignVector> = {
        let mut v: Vec<SignVector> = c.iter().filter(|x| x.get(i).is_zero()).map(|x| x.project(i)).collect();
        v.sort_unstable();
        v
    };
    let deletion_law = c_del.circuits == expected_del;

    let (contraction_law, projection_law) = if coloops(l).contains(i) {
        (None, None)
    } else {
        let c_con = circuits(&contract(l, i)?);
        let minima = projected_generator_minima(l, i)?;
        let law2 = c_con.circuits == minima;
        let law3 = c
            .iter()
            .filter(|x| x.support().contains(i))
            .all(|x| c_con.contains(&x.project(i)));
        (Some(law2), Some(law3))
    };
    Ok(CircuitMinorReport {
        element: i,
        deletion_law,
        contraction_law,
        projection_law,
        holds: deletion_law && contraction_law.unwrap_or(true) && projection_law.unwrap_or(true),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointCovectorReport {
    /// `(X, Y)` with `±X` circuits and `Y` a covector avoiding the support of `X`.
    pub witnesses: Vec<(SignVector, SignVector)>,
    pub missing: Vec<SignVector>,
    pub holds: bool,
}

/// Every nonzero `±X` circuit pair admits a covector with support disjoint from `X`.
pub fn verify_disjoint_covector(l: &Com) -> Result<DisjointCovectorReport> {
    require_com(l)?;
    let c = circuits(l);
    let mut witnesses = Vec::new();
    let mut missing = Vec::new();
    for x in c.iter().filter(|x| !x.is_zero() && c.contains(&x.negate())) {
        match l.iter().find(|y| y.support().is_disjoint(x.support())) {
            Some(y) => witnesses.push((*x, *y)),
            None => missing.push(*x),
        }
    }
    Ok(DisjointCovectorReport {
        holds: missing.is_empty(),
        witnesses,
        missing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftReport {
    pub element: usize,
    /// `(X'', X)`: contraction circuit and a lifted circuit with `±X` in `C`.
    pub lifts: Vec<(SignVector, SignVector)>,
    pub missing: Vec<SignVector>,
    pub holds: bool,
}

/// Every nonzero `±X''` pair of contraction circuits lifts to a `±X` pair.
pub fn verify_lift(l: &Com, i: usize) -> Result<LiftReport> {
    require_com(l)?;
    l.check_index(i)?;
    let c = circuits(l);
    let c_con = circuits(&contract(l, i)?);
    let mut lifts = Vec::new();
    let mut missing = Vec::new();
    for xc in c_con.iter().filter(|x| !x.is_zero() && c_con.contains(&x.negate())) {
        let lift = c
            .iter()
            .find(|x| x.project(i) == *xc && c.contains(&x.negate()));
        match lift {
            Some(x) => lifts.push((*xc, *x)),
            None => missing.push(*xc),
        }
    }
    Ok(LiftReport {
        element: i,
        holds: missing.is_empty(),
        lifts,
        missing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanExtensionReport {
    pub subset: IndexSet,
    pub patterns: usize,
    pub extended: usize,
    pub holds: bool,
}

/// Every full sign pattern on `j` extends to a covector, provided `j`
/// contains no circuit support.
pub fn verify_boolean_extension(l: &Com, j: IndexSet) -> Result<BooleanExtensionReport> {
    verify_boolean_extension_with(l, j, &circuits(l))
}

pub(crate) fn verify_boolean_extension_with(
    l: &Com,
    j: IndexSet,
    c: &CircuitSet,
) -> Result<BooleanExtensionReport> {
    require_com(l)?;
    if let Some(s) = c.minimal_deficient_supports.iter().find(|s| s.is_subset(j)) {
        return Err(Error::Precondition(format!("{j} contains the circuit support {s}")));
    }
    let extended = realized_patterns(l, j)?.len();
    let patterns = 1usize << j.len();
    Ok(BooleanExtensionReport {
        subset: j,
        patterns,
        extended,
        holds: extended == patterns,
    })
}
