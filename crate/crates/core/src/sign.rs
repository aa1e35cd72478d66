//! Signed sets over the ground set `{0..n-1}` and unsigned index sets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set; signed sets are stored as two `u64` masks.
pub const MAX_GROUND_SET: usize = 64;

/// One coordinate of a signed set. The derived order is `Minus < Zero < Plus`,
/// which is the character order used for canonical sorting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }
}

/// Serialized as its character `-`, `0` or `+`.
impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_char(self.to_char())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Removes bit `i` from `mask`, shifting higher bits down by one.
fn squeeze(mask: u64, i: usize) -> u64 {
    let low = mask & full_mask(i);
    let high = if i + 1 >= 64 { 0 } else { mask >> (i + 1) };
    low | (high << i)
}

/// Inserts a zero bit at position `i`, shifting bits at `i` and above up by one.
fn spread(mask: u64, i: usize) -> u64 {
    let low = mask & full_mask(i);
    let high = if i >= 64 { 0 } else { mask >> i };
    low | (high << (i + 1))
}

/// An unsigned subset of `{0..63}`.
///
/// The `Ord` implementation is the canonical order used for every list of
/// index sets in this crate: by cardinality, then lexicographically on the
/// increasing element lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_mask(mask: u64) -> IndexSet {
        IndexSet(mask)
    }

    pub fn full(n: usize) -> IndexSet {
        IndexSet(full_mask(n))
    }

    pub fn singleton(i: usize) -> IndexSet {
        IndexSet(1u64 << i)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn with(self, i: usize) -> IndexSet {
        IndexSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> IndexSet {
        IndexSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: IndexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn max_element(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Drops coordinate `i` and renumbers the elements above it.
    pub fn squeeze(self, i: usize) -> IndexSet {
        IndexSet(squeeze(self.0, i))
    }

    /// Inverse of [`IndexSet::squeeze`] on sets not containing `i`.
    pub fn spread(self, i: usize) -> IndexSet {
        IndexSet(spread(self.0, i))
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let m = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == m { None } else { Some((cur.wrapping_sub(m)) & m) };
            Some(IndexSet(cur))
        })
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        IndexSet(iter.into_iter().fold(0u64, |m, i| m | (1u64 << i)))
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let elems = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = elems.iter().find(|&&i| i >= MAX_GROUND_SET) {
            return Err(serde::de::Error::custom(format!("index {bad} out of range")));
        }
        Ok(elems.into_iter().collect())
    }
}

/// A signed set `X = (X+, X-)` on the ground set `{0..n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignVector {
    n: usize,
    plus: u64,
    minus: u64,
}

impl SignVector {
    pub fn new(n: usize, plus: IndexSet, minus: IndexSet) -> Result<SignVector> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let full = IndexSet::full(n);
        if let Some(i) = plus.union(minus).difference(full).iter().next() {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        if let Some(i) = plus.intersection(minus).iter().next() {
            return Err(Error::NotDisjoint(i));
        }
        Ok(SignVector {
            n,
            plus: plus.mask(),
            minus: minus.mask(),
        })
    }

    /// Internal constructor; callers guarantee disjoint, in-range masks.
    pub(crate) fn from_masks(n: usize, plus: u64, minus: u64) -> SignVector {
        debug_assert!(plus & minus == 0);
        debug_assert!((plus | minus) & !full_mask(n) == 0);
        SignVector { n, plus, minus }
    }

    pub fn zero(n: usize) -> SignVector {
        SignVector::from_masks(n, 0, 0)
    }

    pub fn from_signs(signs: &[Sign]) -> Result<SignVector> {
        let n = signs.len();
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge(n));
        }
        let mut plus = 0u64;
        let mut minus = 0u64;
        for (i, s) in signs.iter().enumerate() {
            match s {
                Sign::Plus => plus |= 1 << i,
                Sign::Minus => minus |= 1 << i,
                Sign::Zero => {}
            }
        }
        Ok(SignVector::from_masks(n, plus, minus))
    }

    /// Parses a sign word over `+`, `-`, `0` (one character per coordinate).
    pub fn parse(word: &str) -> Result<SignVector> {
        let signs = word
            .chars()
            .map(|c| {
                Sign::from_char(c)
                    .ok_or_else(|| Error::Parse(format!("invalid sign character {c:?} in {word:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignVector::from_signs(&signs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn plus(&self) -> IndexSet {
        IndexSet(self.plus)
    }

    pub fn minus(&self) -> IndexSet {
        IndexSet(self.minus)
    }

    pub fn support(&self) -> IndexSet {
        IndexSet(self.plus | self.minus)
    }

    pub fn zero_set(&self) -> IndexSet {
        IndexSet(!(self.plus | self.minus) & full_mask(self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.plus | self.minus == 0
    }

    /// Nonzero in every coordinate.
    pub fn is_full(&self) -> bool {
        self.plus | self.minus == full_mask(self.n)
    }

    pub fn get(&self, i: usize) -> Sign {
        let bit = 1u64 << i;
        if self.plus & bit != 0 {
            Sign::Plus
        } else if self.minus & bit != 0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    pub fn with_sign(&self, i: usize, s: Sign) -> SignVector {
        let bit = 1u64 << i;
        let (mut plus, mut minus) = (self.plus & !bit, self.minus & !bit);
        match s {
            Sign::Plus => plus |= bit,
            Sign::Minus => minus |= bit,
            Sign::Zero => {}
        }
        SignVector::from_masks(self.n, plus, minus)
    }

    fn check_same_size(&self, other: &SignVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `(X o Y)_i = X_i` if `X_i != 0`, else `Y_i`.
    pub fn compose(&self, other: &SignVector) -> Result<SignVector> {
        self.check_same_size(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignVector) -> SignVector {
        let supp = self.plus | self.minus;
        SignVector::from_masks(
            self.n,
            self.plus | (other.plus & !supp),
            self.minus | (other.minus & !supp),
        )
    }

    pub fn negate(&self) -> SignVector {
        SignVector::from_masks(self.n, self.minus, self.plus)
    }

    /// Coordinates where both are nonzero with opposite signs.
    pub fn separator(&self, other: &SignVector) -> Result<IndexSet> {
        self.check_same_size(other)?;
        Ok(self.separator_unchecked(other))
    }

    pub(crate) fn separator_unchecked(&self, other: &SignVector) -> IndexSet {
        IndexSet((self.plus & other.minus) | (self.minus & other.plus))
    }

    /// `true` iff `Y_i = X_i` for every `i` in the support of `self`,
    /// i.e. `self o other == other`.
    pub fn conforms_to(&self, other: &SignVector) -> bool {
        self.plus & !other.plus == 0 && self.minus & !other.minus == 0
    }

    /// Keeps only the coordinates in `s`; the rest become zero.
    pub fn restrict(&self, s: IndexSet) -> SignVector {
        SignVector::from_masks(self.n, self.plus & s.0, self.minus & s.0)
    }

    /// Forgets coordinate `i`; the result lives on a ground set of size `n-1`
    /// with elements above `i` shifted down.
    pub fn project(&self, i: usize) -> SignVector {
        SignVector::from_masks(self.n - 1, squeeze(self.plus, i), squeeze(self.minus, i))
    }

    /// Extends by zero at a new coordinate `i` (inverse of [`SignVector::project`]).
    pub fn extend_zero(&self, i: usize) -> SignVector {
        SignVector::from_masks(self.n + 1, spread(self.plus, i), spread(self.minus, i))
    }

    pub fn word(&self) -> String {
        (0..self.n).map(|i| self.get(i).to_char()).collect()
    }
}

impl Neg for SignVector {
    type Output = SignVector;

    fn neg(self) -> SignVector {
        self.negate()
    }
}

impl PartialOrd for SignVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ground-set size first, then lexicographic over coordinates with `- < 0 < +`.
impl Ord for SignVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let diff = (self.plus ^ other.plus) | (self.minus ^ other.minus);
            if diff == 0 {
                Ordering::Equal
            } else {
                let i = diff.trailing_zeros() as usize;
                self.get(i).cmp(&other.get(i))
            }
        })
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.word())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SignVector::parse(s)
    }
}

impl Serialize for SignVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.word())
    }
}

impl<'de> Deserialize<'de> for SignVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let word = String::deserialize(deserializer)?;
        SignVector::parse(&word).map_err(serde::de::Error::custom)
    }
}

/// The `2^|support|` signed sets on ground size `n` whose support is exactly `support`.
pub fn sign_patterns(n: usize, support: IndexSet) -> impl Iterator<Item = SignVector> {
    support
        .subsets()
        .map(move |plus| SignVector::from_masks(n, plus.mask(), support.mask() & !plus.mask()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(w: &str) -> SignVector {
        SignVector::parse(w).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(sv("+0").compose(&sv("--")).unwrap(), sv("+-"));
        assert_eq!(sv("00+-").compose(&sv("+--+")).unwrap(), sv("+-+-"));
        let x = sv("+0-");
        assert_eq!(x.compose(&x).unwrap(), x);
        assert!(sv("+").compose(&sv("+-")).is_err());
    }

    #[test]
    fn negate_examples() {
        assert_eq!(sv("+-0").negate(), sv("-+0"));
        assert_eq!(-(-sv("+-0+")), sv("+-0+"));
        assert_eq!(-sv("00"), sv("00"));
    }

    #[test]
    fn separator_examples() {
        assert_eq!(sv("+-0").separator(&sv("--+")).unwrap().to_vec(), vec![0]);
        assert!(sv("+-0").separator(&sv("+-0")).unwrap().is_empty());
        assert_eq!(sv("++").separator(&sv("--")).unwrap().to_vec(), vec![0, 1]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(SignVector::parse("+x").is_err());
        assert!(SignVector::parse("+\u{2212}").is_err());
        assert_eq!(SignVector::parse("").unwrap().n(), 0);
        assert!(SignVector::new(2, IndexSet::singleton(0), IndexSet::singleton(0)).is_err());
        assert!(SignVector::new(2, IndexSet::singleton(2), IndexSet::EMPTY).is_err());
    }

    #[test]
    fn canonical_order_is_sign_lexicographic() {
        let mut words: Vec<SignVector> = ["+0", "-+", "00", "0-", "--"].iter().map(|w| sv(w)).collect();
        words.sort();
        let sorted: Vec<String> = words.iter().map(|w| w.word()).collect();
        assert_eq!(sorted, ["--", "-+", "0-", "00", "+0"]);
    }

    #[test]
    fn project_and_extend_are_inverse() {
        let x = sv("+-0+");
        assert_eq!(x.project(1), sv("+0+"));
        assert_eq!(x.project(3), sv("+-0"));
        assert_eq!(sv("+0+").extend_zero(1), sv("+00+"));
        assert_eq!(x.with_sign(1, Sign::Zero).project(1).extend_zero(1), x.with_sign(1, Sign::Zero));
    }

    #[test]
    fn index_set_order_and_subsets() {
        let mut sets: Vec<IndexSet> = vec![
            [0, 2].into_iter().collect(),
            IndexSet::EMPTY,
            [1].into_iter().collect(),
            [0, 1].into_iter().collect(),
            [0].into_iter().collect(),
        ];
        sets.sort();
        let shown: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
        assert_eq!(shown, ["{}", "{0}", "{1}", "{0,1}", "{0,2}"]);
        let s: IndexSet = [1, 3, 4].into_iter().collect();
        assert_eq!(s.subsets().count(), 8);
        assert!(s.subsets().all(|t| t.is_subset(s)));
        assert_eq!(s.squeeze(2).to_vec(), vec![1, 2, 3]);
        assert_eq!(s.squeeze(2).spread(2), s);
    }

    #[test]
    fn sign_patterns_cover_support() {
        let s: IndexSet = [0, 2].into_iter().collect();
        let pats: Vec<String> = sign_patterns(3, s).map(|x| x.word()).collect();
        assert_eq!(pats.len(), 4);
        assert!(pats.iter().all(|w| w.as_bytes()[1] == b'0' && !w.contains("00")));
    }
}
