//! The per-instance theorem suite behind `verify`.

use comat::minors::{
    verify_boolean_extension, verify_circuit_minor_laws, verify_disjoint_covector, verify_lift,
    verify_tope_recursion, BooleanExtensionReport, CircuitMinorReport, DisjointCovectorReport, LiftReport,
    TopeRecursionReport,
};
use comat::nbc::{NbcRecursionReport, NbcTopeReport};
use comat::{
    check_com, circuits, coloops, is_oriented_matroid, om_circuits, topes, verify_nbc_recursion, verify_nbc_tope,
    verify_presentation, AxiomWitness, Com, FiltrationReport, IndexSet, LinearOrder, Result, SignVector,
};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct ElementReport {
    pub element: usize,
    pub topes: TopeRecursionReport,
    pub nbc: NbcRecursionReport,
    pub circuit_minors: CircuitMinorReport,
    pub lift: LiftReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub covectors: usize,
    pub is_com: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AxiomWitness>,
    pub circuits: Vec<SignVector>,
    pub coloops: IndexSet,
    pub nbc_topes: Option<NbcTopeReport>,
    pub elements: Vec<ElementReport>,
    pub disjoint_covector: Option<DisjointCovectorReport>,
    pub boolean_extension: Vec<BooleanExtensionReport>,
    pub presentation: Option<FiltrationReport>,
    /// `circuits == om_circuits`; present only when the zero covector is.
    pub om_circuits_agree: Option<bool>,
    pub failures: Vec<String>,
    pub holds: bool,
}

/// Subsets of size at most 2 that contain no circuit support.
fn small_independent_sets(n: usize, supports: &[IndexSet]) -> Vec<IndexSet> {
    let mut out = vec![IndexSet::default()];
    for i in 0..n {
        out.push(IndexSet::singleton(i));
        for j in i + 1..n {
            out.push(IndexSet::singleton(i).with(j));
        }
    }
    out.retain(|j| !supports.iter().any(|s| s.is_subset(*j)));
    out
}

/// Runs every check on `l`; only malformed input (wrong order size) is an error.
pub fn verify_com(l: &Com, order: &LinearOrder) -> Result<VerifyReport> {
    if order.n() != l.n() {
        return Err(comat::Error::SizeMismatch {
            left: order.n(),
            right: l.n(),
        });
    }
    let mut report = VerifyReport {
        n: l.n(),
        covectors: l.len(),
        is_com: true,
        witness: None,
        circuits: Vec::new(),
        coloops: IndexSet::default(),
        nbc_topes: None,
        elements: Vec::new(),
        disjoint_covector: None,
        boolean_extension: Vec::new(),
        presentation: None,
        om_circuits_agree: None,
        failures: Vec::new(),
        holds: false,
    };
    if let Err(w) = check_com(l) {
        report.is_com = false;
        report.failures.push(format!("not a COM: {w}"));
        report.witness = Some(w);
        return Ok(report);
    }
    let fail = &mut report.failures;

    let c = circuits(l);
    report.circuits = c.circuits.clone();
    report.coloops = coloops(l);

    let nt = verify_nbc_tope(l, order)?;
    if !nt.holds {
        fail.push(format!("{} NBC sets but {} topes", nt.nbc, nt.topes));
    }
    if !report.coloops.is_empty() && (nt.nbc != 0 || !topes(l).is_empty()) {
        fail.push("coloop present but NBC sets or topes are nonempty".into());
    }
    report.nbc_topes = Some(nt);

    for i in 0..l.n() {
        if report.coloops.contains(i) {
            continue;
        }
        let e = ElementReport {
            element: i,
            topes: verify_tope_recursion(l, i)?,
            nbc: verify_nbc_recursion(l, &order_with_max(order, i))?,
            circuit_minors: verify_circuit_minor_laws(l, i)?,
            lift: verify_lift(l, i)?,
        };
        if !e.topes.holds {
            fail.push(format!("tope recursion fails at {i}"));
        }
        if !e.nbc.holds {
            fail.push(format!("NBC recursion fails at {i}"));
        }
        if !e.circuit_minors.holds {
            fail.push(format!("circuit minor laws fail at {i}"));
        }
        if !e.lift.holds {
            fail.push(format!("circuit lift fails at {i}"));
        }
        report.elements.push(e);
    }

    let dc = verify_disjoint_covector(l)?;
    if !dc.holds {
        fail.push(format!("no disjoint covector for {:?}", dc.missing));
    }
    report.disjoint_covector = Some(dc);

    for j in small_independent_sets(l.n(), &c.minimal_deficient_supports) {
        let b = verify_boolean_extension(l, j)?;
        if !b.holds {
            fail.push(format!("only {} of {} patterns on {j} extend", b.extended, b.patterns));
        }
        report.boolean_extension.push(b);
    }

    let p = verify_presentation(l, order)?;
    fail.extend(p.failures.iter().cloned());
    report.presentation = Some(p);

    if is_oriented_matroid(l)? {
        let agree = om_circuits(l)? == c;
        if !agree {
            fail.push("circuits differ from orthogonality circuits".into());
        }
        report.om_circuits_agree = Some(agree);
    }

    report.holds = report.failures.is_empty();
    Ok(report)
}

/// `order` with `i` moved to the top, other elements keeping their relative order.
pub fn order_with_max(order: &LinearOrder, i: usize) -> LinearOrder {
    let mut perm: Vec<usize> = order.perm().iter().copied().filter(|&k| k != i).collect();
    perm.push(i);
    LinearOrder::new(perm).expect("still a permutation")
}
