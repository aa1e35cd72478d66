//! Covector sets of rational hyperplane arrangements restricted to an open
//! polyhedral region.
//!
//! A signed set `X` is a covector when the region meets the intersection of
//! the open half-spaces selected by the nonzero signs of `X` and the
//! hyperplanes where `X` is zero.

mod feasibility;
mod json;

use std::collections::BTreeSet;

use crate::com::Com;
use crate::error::{Error, Result};
use crate::scalar::OrderedField;
use crate::sign::{sign_patterns, IndexSet, Sign, SignVector, MAX_GROUND_SET};

pub use feasibility::{feasible_point, strictly_feasible};

/// The cooriented hyperplane `a.x = b`; its positive side is `a.x > b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Hyperplane<F> {
    pub a: Vec<F>,
    pub b: F,
}

impl<F: OrderedField> Hyperplane<F> {
    pub fn new(a: Vec<F>, b: F) -> Result<Hyperplane<F>> {
        if a.iter().all(|v| v.is_zero()) {
            return Err(Error::Precondition("hyperplane with zero normal vector".into()));
        }
        Ok(Hyperplane { a, b })
    }

    pub fn side(&self, p: &[F]) -> Sign {
        let v = dot(&self.a, p) - self.b.clone();
        sign_of(&v)
    }

    /// The row `s * a . x > s * b` selecting the open side `s`.
    fn strict_row(&self, s: Sign) -> (Vec<F>, F) {
        match s {
            Sign::Plus => (self.a.clone(), self.b.clone()),
            Sign::Minus => (self.a.iter().map(|v| -v.clone()).collect(), -self.b.clone()),
            Sign::Zero => unreachable!("zero side is an equality"),
        }
    }
}

/// The strict inequality `c.x > d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Strict<F> {
    pub c: Vec<F>,
    pub d: F,
}

impl<F: OrderedField> Strict<F> {
    pub fn holds_at(&self, p: &[F]) -> bool {
        dot(&self.c, p) > self.d
    }
}

/// An open polyhedron; the empty list is the whole space.
#[derive(Clone, Debug, PartialEq)]
pub struct OpenRegion<F> {
    pub strict: Vec<Strict<F>>,
}

impl<F: OrderedField> OpenRegion<F> {
    pub fn whole_space() -> OpenRegion<F> {
        OpenRegion { strict: Vec::new() }
    }

    pub fn contains(&self, p: &[F]) -> bool {
        self.strict.iter().all(|s| s.holds_at(p))
    }
}

/// Hyperplanes (repeats allowed) in `F^dim` together with an open region.
#[derive(Clone, Debug, PartialEq)]
pub struct Arrangement<F> {
    dim: usize,
    hyperplanes: Vec<Hyperplane<F>>,
    region: OpenRegion<F>,
}

impl<F: OrderedField> Arrangement<F> {
    pub fn new(dim: usize, hyperplanes: Vec<Hyperplane<F>>, region: OpenRegion<F>) -> Result<Arrangement<F>> {
        if hyperplanes.len() > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(hyperplanes.len()));
        }
        let lens = hyperplanes
            .iter()
            .map(|h| h.a.len())
            .chain(region.strict.iter().map(|s| s.c.len()));
        for len in lens {
            if len != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    found: len,
                });
            }
        }
        if hyperplanes.iter().any(|h| h.a.iter().all(|v| v.is_zero())) {
            return Err(Error::Precondition("hyperplane with zero normal vector".into()));
        }
        Ok(Arrangement {
            dim,
            hyperplanes,
            region,
        })
    }

    /// Builds from small integer data: `(a, b)` per hyperplane and `(c, d)` per inequality.
    pub fn from_integers(dim: usize, hyperplanes: &[(&[i64], i64)], region: &[(&[i64], i64)]) -> Result<Arrangement<F>> {
        let conv = |v: &[i64]| v.iter().map(|&x| F::from_i64(x)).collect::<Vec<F>>();
        let hs = hyperplanes
            .iter()
            .map(|(a, b)| Hyperplane::new(conv(a), F::from_i64(*b)))
            .collect::<Result<Vec<_>>>()?;
        let strict = region
            .iter()
            .map(|(c, d)| Strict {
                c: conv(c),
                d: F::from_i64(*d),
            })
            .collect();
        Arrangement::new(dim, hs, OpenRegion { strict })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane<F>] {
        &self.hyperplanes
    }

    pub fn region(&self) -> &OpenRegion<F> {
        &self.region
    }

    /// Drops hyperplane `i`; geometrically the deletion minor.
    pub fn delete(&self, i: usize) -> Result<Arrangement<F>> {
        if i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, n: self.n() });
        }
        let mut hs = self.hyperplanes.clone();
        hs.remove(i);
        Ok(Arrangement {
            dim: self.dim,
            hyperplanes: hs,
            region: self.region.clone(),
        })
    }

    fn region_rows(&self) -> Vec<(Vec<F>, F)> {
        self.region.strict.iter().map(|s| (s.c.clone(), s.d.clone())).collect()
    }

    /// The system cutting out `H_X` inside the region, for the coordinates in `s`.
    fn system_for(&self, x: &SignVector, s: IndexSet) -> (Vec<(Vec<F>, F)>, Vec<(Vec<F>, F)>) {
        let mut eqs = Vec::new();
        let mut st = self.region_rows();
        for i in s.iter() {
            let h = &self.hyperplanes[i];
            match x.get(i) {
                Sign::Zero => eqs.push((h.a.clone(), h.b.clone())),
                sg => st.push(h.strict_row(sg)),
            }
        }
        (eqs, st)
    }

    fn check_point(&self, p: &[F]) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                found: p.len(),
            });
        }
        Ok(())
    }

    fn check_vector(&self, x: &SignVector) -> Result<()> {
        if x.n() != self.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: x.n(),
            });
        }
        Ok(())
    }
}

fn dot<F: OrderedField>(a: &[F], p: &[F]) -> F {
    a.iter().zip(p).fold(F::zero(), |s, (x, y)| s + x.clone() * y.clone())
}

fn sign_of<F: OrderedField>(v: &F) -> Sign {
    if v.is_positive() {
        Sign::Plus
    } else if v.is_negative() {
        Sign::Minus
    } else {
        Sign::Zero
    }
}

/// `X_H = sign(a_H . p - b_H)` for a point of the region.
pub fn sign_vector_at_point<F: OrderedField>(arr: &Arrangement<F>, p: &[F]) -> Result<SignVector> {
    arr.check_point(p)?;
    if !arr.region.contains(p) {
        return Err(Error::PointOutsideRegion);
    }
    let signs: Vec<Sign> = arr.hyperplanes.iter().map(|h| h.side(p)).collect();
    SignVector::from_signs(&signs)
}

/// A point of `H_X` inside the region, if `X` is a covector.
pub fn covector_witness<F: OrderedField>(arr: &Arrangement<F>, x: &SignVector) -> Result<Option<Vec<F>>> {
    arr.check_vector(x)?;
    let (eqs, st) = arr.system_for(x, IndexSet::full(arr.n()));
    feasible_point(arr.dim, &eqs, &st)
}

/// A point of the region, if it is nonempty.
pub fn region_point<F: OrderedField>(arr: &Arrangement<F>) -> Option<Vec<F>> {
    feasible_point(arr.dim, &[], &arr.region_rows()).expect("dimensions validated")
}

/// `true` iff some point of the region lies on every hyperplane.
pub fn has_common_point<F: OrderedField>(arr: &Arrangement<F>) -> bool {
    covector_witness(arr, &SignVector::zero(arr.n()))
        .expect("sizes match")
        .is_some()
}

/// All covectors, by depth-first search over sign prefixes in hyperplane
/// order; a prefix is abandoned as soon as its partial system is infeasible.
pub fn covectors<F: OrderedField>(arr: &Arrangement<F>) -> Com {
    let n = arr.n();
    let mut found = Vec::new();
    let mut eqs: Vec<(Vec<F>, F)> = Vec::new();
    let mut st = arr.region_rows();
    if strictly_feasible(arr.dim, &eqs, &st).expect("dimensions validated") {
        let mut signs = Vec::with_capacity(n);
        search(arr, &mut signs, &mut eqs, &mut st, &mut found);
    }
    Com::new(n, found).expect("ground set size validated")
}

fn search<F: OrderedField>(
    arr: &Arrangement<F>,
    signs: &mut Vec<Sign>,
    eqs: &mut Vec<(Vec<F>, F)>,
    st: &mut Vec<(Vec<F>, F)>,
    found: &mut Vec<SignVector>,
) {
    let k = signs.len();
    if k == arr.n() {
        found.push(SignVector::from_signs(signs).expect("at most 64 coordinates"));
        return;
    }
    let h = &arr.hyperplanes[k];
    for s in [Sign::Minus, Sign::Zero, Sign::Plus] {
        if s == Sign::Zero {
            eqs.push((h.a.clone(), h.b.clone()));
        } else {
            st.push(h.strict_row(s));
        }
        if strictly_feasible(arr.dim, eqs, st).expect("dimensions validated") {
            signs.push(s);
            search(arr, signs, eqs, st, found);
            signs.pop();
        }
        if s == Sign::Zero {
            eqs.pop();
        } else {
            st.pop();
        }
    }
}

/// Minimal sign conditions whose open half-space intersection misses the
/// region, computed geometrically (no covector enumeration): for supports in
/// increasing size, the full patterns `p` on `S` with
/// `region ∩ {sign(a_i.x - b_i) = p_i, i in S}` empty, on inclusion-minimal `S`.
pub fn geometric_circuits<F: OrderedField>(arr: &Arrangement<F>) -> Vec<SignVector> {
    let n = arr.n();
    let mut minimal: Vec<IndexSet> = Vec::new();
    let mut found = BTreeSet::new();
    for size in 0..=n {
        for s in crate::circuits::subsets_of_size(n, size) {
            if minimal.iter().any(|m| m.is_subset(s)) {
                continue;
            }
            let missing: Vec<SignVector> = sign_patterns(n, s)
                .filter(|p| {
                    let (eqs, st) = arr.system_for(p, s);
                    !strictly_feasible(arr.dim, &eqs, &st).expect("dimensions validated")
                })
                .collect();
            if !missing.is_empty() {
                minimal.push(s);
                found.extend(missing);
            }
        }
    }
    found.into_iter().collect()
}
