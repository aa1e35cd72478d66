//! Covector sets and the two COM axioms (face symmetry, strong elimination).

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sign::{IndexSet, Sign, SignVector, MAX_GROUND_SET};

/// A finite set of signed sets on a common ground set `{0..n-1}`.
///
/// Covectors are kept sorted in the canonical sign-word order and
/// deduplicated, so two `Com`s are equal iff their covector sets are.
/// A `Com` need not satisfy the axioms; [`is_com`] certifies that. The
/// axiom check result is cached on first use.
#[derive(Clone)]
pub struct Com {
    n: usize,
    covectors: Vec<SignVector>,
    axioms: OnceLock<std::result::Result<(), AxiomWitness>>,
}

impl PartialEq for Com {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covectors == other.covectors
    }
}

impl Eq for Com {}

impl Hash for Com {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.covectors.hash(state);
    }
}

impl Com {
    pub fn new(n: usize, covectors: impl IntoIterator<Item = SignVector>) -> Result<Com> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut covectors: Vec<SignVector> = covectors.into_iter().collect();
        if let Some(bad) = covectors.iter().find(|x| x.n() != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: bad.n(),
            });
        }
        covectors.sort_unstable();
        covectors.dedup();
        Ok(Com {
            n,
            covectors,
            axioms: OnceLock::new(),
        })
    }

    /// Builds a `Com` from sign words; every word must have length `n`.
    pub fn from_words<S: AsRef<str>>(n: usize, words: &[S]) -> Result<Com> {
        let vecs = words
            .iter()
            .map(|w| SignVector::parse(w.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Com::new(n, vecs)
    }

    pub fn empty(n: usize) -> Com {
        Com {
            n,
            covectors: Vec::new(),
            axioms: OnceLock::new(),
        }
    }

    /// Every signed set on `n` elements.
    pub fn full_cube(n: usize) -> Com {
        let covectors = IndexSet::full(n)
            .subsets()
            .flat_map(|supp| crate::sign::sign_patterns(n, supp))
            .collect::<Vec<_>>();
        Com::new(n, covectors).expect("cube vectors share the ground set")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn len(&self) -> usize {
        self.covectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covectors.is_empty()
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        x.n() == self.n && self.covectors.binary_search(x).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&SignVector::zero(self.n))
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SignVector> {
        self.covectors.iter()
    }

    pub(crate) fn check_vector(&self, x: &SignVector) -> Result<()> {
        if x.n() != self.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: x.n(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        Ok(())
    }
}

impl fmt::Debug for Com {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Com(n={}, {{", self.n)?;
        for (k, x) in self.covectors.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("})")
    }
}

impl<'a> IntoIterator for &'a Com {
    type Item = &'a SignVector;
    type IntoIter = std::slice::Iter<'a, SignVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.covectors.iter()
    }
}

#[derive(Serialize, Deserialize)]
struct ComFile {
    n: usize,
    covectors: Vec<String>,
}

impl Serialize for Com {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ComFile {
            n: self.n,
            covectors: self.covectors.iter().map(|x| x.word()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Com {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let file = ComFile::deserialize(deserializer)?;
        for w in &file.covectors {
            if w.chars().count() != file.n {
                return Err(serde::de::Error::custom(format!(
                    "sign word {w:?} has length {}, expected {}",
                    w.chars().count(),
                    file.n
                )));
            }
        }
        Com::from_words(file.n, &file.covectors).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomKind {
    FsViolation,
    SeViolation,
}

/// A counterexample to one of the COM axioms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomWitness {
    pub kind: AxiomKind,
    pub x: SignVector,
    pub y: SignVector,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<usize>,
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.i) {
            (AxiomKind::FsViolation, _) => {
                write!(f, "face symmetry fails: X={} Y={}, X o -Y not a covector", self.x, self.y)
            }
            (AxiomKind::SeViolation, Some(i)) => write!(
                f,
                "strong elimination fails: X={} Y={} at i={i}, no eliminating covector",
                self.x, self.y
            ),
            (AxiomKind::SeViolation, None) => write!(f, "strong elimination fails: X={} Y={}", self.x, self.y),
        }
    }
}

/// Checks `X o -Y in L` for all pairs; returns the first failure in
/// canonical `(X, Y)` scan order.
pub fn check_face_symmetry(l: &Com) -> std::result::Result<(), AxiomWitness> {
    for x in l {
        for y in l {
            let z = x.compose_unchecked(&y.negate());
            if !l.contains(&z) {
                return Err(AxiomWitness {
                    kind: AxiomKind::FsViolation,
                    x: *x,
                    y: *y,
                    i: None,
                });
            }
        }
    }
    Ok(())
}

/// Checks strong elimination; returns the first failing pair `X <= Y` in
/// canonical scan order with the smallest failing `i`. The condition is
/// symmetric in `X` and `Y` (off the separator `X o Y = Y o X`), so the
/// witness is oriented with `X_i = +`.
pub fn check_strong_elimination(l: &Com) -> std::result::Result<(), AxiomWitness> {
    let cov = l.covectors();
    for (k, x) in cov.iter().enumerate() {
        for y in &cov[k + 1..] {
            let sep = x.separator_unchecked(y);
            if sep.is_empty() {
                continue;
            }
            let target = x.compose_unchecked(y);
            let fixed = IndexSet::full(l.n()).difference(sep);
            // One pass over L marks every i in Sep that some candidate Z zeroes.
            let mut eliminated = IndexSet::EMPTY;
            for z in l {
                if z.restrict(fixed) == target.restrict(fixed) {
                    eliminated = eliminated.union(z.zero_set().intersection(sep));
                    if eliminated == sep {
                        break;
                    }
                }
            }
            if let Some(i) = sep.difference(eliminated).iter().next() {
                let (x, y) = if x.get(i) == Sign::Plus { (x, y) } else { (y, x) };
                return Err(AxiomWitness {
                    kind: AxiomKind::SeViolation,
                    x: *x,
                    y: *y,
                    i: Some(i),
                });
            }
        }
    }
    Ok(())
}

/// Both axioms; face symmetry is reported first.
pub fn check_com(l: &Com) -> std::result::Result<(), AxiomWitness> {
    *l.axioms.get_or_init(|| {
        check_face_symmetry(l)?;
        check_strong_elimination(l)
    })
}

pub fn is_com(l: &Com) -> bool {
    check_com(l).is_ok()
}

pub(crate) fn require_com(l: &Com) -> Result<()> {
    check_com(l).map_err(Error::NotCom)
}

/// A COM containing the zero signed set.
pub fn is_oriented_matroid(l: &Com) -> Result<bool> {
    require_com(l)?;
    Ok(l.contains_zero())
}

/// Elements at which every covector vanishes (all of them when `L` is empty).
pub fn coloops(l: &Com) -> IndexSet {
    let used = l.iter().fold(IndexSet::EMPTY, |acc, x| acc.union(x.support()));
    IndexSet::full(l.n()).difference(used)
}

/// Covectors that are nonzero in every coordinate, in canonical order.
pub fn topes(l: &Com) -> Vec<SignVector> {
    l.iter().filter(|x| x.is_full()).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn com(n: usize, words: &[&str]) -> Com {
        Com::from_words(n, words).unwrap()
    }

    fn sv(w: &str) -> SignVector {
        SignVector::parse(w).unwrap()
    }

    #[test]
    fn com_is_canonical() {
        let a = com(2, &["+0", "--", "+0", "0-"]);
        let b = com(2, &["0-", "--", "+0"]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        assert!(Com::from_words(2, &["+"]).is_err());
    }

    #[test]
    fn face_symmetry_examples() {
        let w = check_face_symmetry(&com(2, &["00", "++"])).unwrap_err();
        assert_eq!((w.kind, w.x, w.y), (AxiomKind::FsViolation, sv("00"), sv("++")));
        assert!(check_face_symmetry(&com(1, &["+", "0", "-"])).is_ok());
        assert!(check_face_symmetry(&Com::empty(3)).is_ok());
    }

    #[test]
    fn strong_elimination_examples() {
        let w = check_strong_elimination(&com(1, &["+", "-"])).unwrap_err();
        assert_eq!((w.kind, w.x, w.y, w.i), (AxiomKind::SeViolation, sv("+"), sv("-"), Some(0)));
        assert!(check_strong_elimination(&com(1, &["+", "0", "-"])).is_ok());
        assert!(check_strong_elimination(&Com::empty(2)).is_ok());
    }

    #[test]
    fn is_com_examples() {
        assert!(is_com(&com(1, &["+", "0", "-"])));
        assert!(!is_com(&com(1, &["+", "-"])));
        assert!(!is_com(&com(2, &["00", "++"])));
    }

    #[test]
    fn oriented_matroid_examples() {
        assert!(is_oriented_matroid(&com(1, &["+", "0", "-"])).unwrap());
        assert!(!is_oriented_matroid(&com(1, &["+"])).unwrap());
        assert!(is_oriented_matroid(&Com::full_cube(2)).unwrap());
        assert_eq!(Com::full_cube(2).len(), 9);
        assert!(is_oriented_matroid(&com(1, &["+", "-"])).is_err());
    }

    #[test]
    fn coloop_examples() {
        assert_eq!(coloops(&com(1, &["0"])).to_vec(), vec![0]);
        assert!(coloops(&com(1, &["+", "0", "-"])).is_empty());
        assert_eq!(coloops(&com(2, &["0+", "0-"])).to_vec(), vec![0]);
        assert_eq!(coloops(&Com::empty(3)).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn tope_examples() {
        assert_eq!(topes(&com(1, &["+", "0", "-"])), vec![sv("-"), sv("+")]);
        assert!(topes(&com(1, &["0"])).is_empty());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let l = com(3, &["+-0", "000", "-+0"]);
        let text = serde_json::to_string(&l).unwrap();
        assert_eq!(text, r#"{"n":3,"covectors":["-+0","000","+-0"]}"#);
        let back: Com = serde_json::from_str(&text).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Com>(r#"{"n":2,"covectors":["+"]}"#).is_err());
        assert!(serde_json::from_str::<Com>(r#"{"n":1,"covectors":["x"]}"#).is_err());
    }
}
