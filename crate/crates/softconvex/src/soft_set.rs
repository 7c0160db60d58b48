//! Soft sets: total maps from parameters to subsets of the universe, stored
//! as packed membership bits in canonical space order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::space::Space;

/// A soft set on a [`Space`]: one subset of the universe per parameter.
///
/// The membership bits are stored row-major (one row per parameter, element
/// order within each row matching the universe order), so equality is exact
/// structural equality and the derived order is the canonical enumeration
/// order: interpreting the bits as a binary counter puts the null soft set
/// first and the absolute soft set last.
#[derive(Clone)]
pub struct SoftSet {
    space: Arc<Space>,
    bits: Vec<u64>,
}

impl SoftSet {
    /// The null soft set `Φ_E`: empty at every parameter.
    pub fn null(space: &Arc<Space>) -> SoftSet {
        SoftSet {
            space: Arc::clone(space),
            bits: vec![0; space.parameter_count() * space.words_per_row()],
        }
    }

    /// The absolute soft set `X_E`: the whole universe at every parameter.
    pub fn absolute(space: &Arc<Space>) -> SoftSet {
        let wpr = space.words_per_row();
        let mut bits = vec![u64::MAX; space.parameter_count() * wpr];
        let mask = space.last_word_mask();
        for row in 0..space.parameter_count() {
            bits[row * wpr + wpr - 1] &= mask;
        }
        SoftSet {
            space: Arc::clone(space),
            bits,
        }
    }

    /// Builds a soft set from a total assignment given as
    /// `(parameter, elements)` pairs.
    ///
    /// Every parameter of the space must appear exactly once and every listed
    /// element must belong to the universe; anything else is an error rather
    /// than a default.
    pub fn from_pairs(space: &Arc<Space>, assignment: &[(&str, &[&str])]) -> Result<SoftSet> {
        let mut seen = vec![false; space.parameter_count()];
        let mut set = SoftSet::null(space);
        for (param, elems) in assignment {
            let p = space.parameter_position(param)?;
            if seen[p] {
                return Err(Error::DuplicateParameter((*param).to_string()));
            }
            seen[p] = true;
            for name in *elems {
                let e = space.element_position(name)?;
                set.set_bit(p, e);
            }
        }
        if let Some(p) = seen.iter().position(|s| !s) {
            return Err(Error::MissingParameter(space.parameters()[p].clone()));
        }
        Ok(set)
    }

    /// Map-based variant of [`SoftSet::from_pairs`].
    pub fn from_map(space: &Arc<Space>, assignment: &BTreeMap<String, Vec<String>>) -> Result<SoftSet> {
        let pairs: Vec<(&str, Vec<&str>)> = assignment
            .iter()
            .map(|(k, v)| (k.as_str(), v.iter().map(String::as_str).collect()))
            .collect();
        let borrowed: Vec<(&str, &[&str])> =
            pairs.iter().map(|(k, v)| (*k, v.as_slice())).collect();
        SoftSet::from_pairs(space, &borrowed)
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn is_null(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    pub fn is_absolute(&self) -> bool {
        *self == SoftSet::absolute(&self.space)
    }

    /// Membership of one element at one parameter.
    pub fn contains(&self, param: &str, elem: &str) -> Result<bool> {
        let p = self.space.parameter_position(param)?;
        let e = self.space.element_position(elem)?;
        Ok(self.get_bit(p, e))
    }

    /// The subset assigned to `param`, in universe order.
    pub fn slice(&self, param: &str) -> Result<Vec<&str>> {
        let p = self.space.parameter_position(param)?;
        Ok(self.slice_at(p))
    }

    pub(crate) fn slice_at(&self, p: usize) -> Vec<&str> {
        (0..self.space.element_count())
            .filter(|&e| self.get_bit(p, e))
            .map(|e| self.space.universe()[e].as_str())
            .collect()
    }

    /// The assignment as an ordered map, for serialization and display.
    pub fn to_map(&self) -> BTreeMap<String, Vec<String>> {
        self.space
            .parameters()
            .iter()
            .enumerate()
            .map(|(p, name)| {
                (
                    name.clone(),
                    self.slice_at(p).into_iter().map(String::from).collect(),
                )
            })
            .collect()
    }

    fn word(&self, p: usize, e: usize) -> usize {
        p * self.space.words_per_row() + e / 64
    }

    /// `self(e_p) ⊆ other(e_p)` for the single parameter at position `p`.
    pub(crate) fn row_is_subset(&self, other: &SoftSet, p: usize) -> bool {
        let wpr = self.space.words_per_row();
        let range = p * wpr..(p + 1) * wpr;
        self.bits[range.clone()]
            .iter()
            .zip(&other.bits[range])
            .all(|(a, b)| a & !b == 0)
    }

    /// In-place intersection of one parameter row with `other`'s row.
    pub(crate) fn row_intersect_from(&mut self, other: &SoftSet, p: usize) {
        let wpr = self.space.words_per_row();
        for w in p * wpr..(p + 1) * wpr {
            self.bits[w] &= other.bits[w];
        }
    }

    pub(crate) fn get_bit(&self, p: usize, e: usize) -> bool {
        self.bits[self.word(p, e)] >> (e % 64) & 1 == 1
    }

    pub(crate) fn set_bit(&mut self, p: usize, e: usize) {
        let w = self.word(p, e);
        self.bits[w] |= 1u64 << (e % 64);
    }

    fn zip_with(&self, other: &SoftSet, f: impl Fn(u64, u64) -> u64) -> Result<SoftSet> {
        Space::ensure_same(&self.space, &other.space)?;
        Ok(SoftSet {
            space: Arc::clone(&self.space),
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        })
    }

    /// Parameter-wise union.
    pub fn union(&self, other: &SoftSet) -> Result<SoftSet> {
        self.zip_with(other, |a, b| a | b)
    }

    /// Parameter-wise intersection.
    pub fn intersect(&self, other: &SoftSet) -> Result<SoftSet> {
        self.zip_with(other, |a, b| a & b)
    }

    /// Parameter-wise difference `self(e) \ other(e)`.
    pub fn difference(&self, other: &SoftSet) -> Result<SoftSet> {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Parameter-wise complement within the universe.
    pub fn complement(&self) -> SoftSet {
        let absolute = SoftSet::absolute(&self.space);
        SoftSet {
            space: Arc::clone(&self.space),
            bits: self
                .bits
                .iter()
                .zip(&absolute.bits)
                .map(|(a, full)| !a & full)
                .collect(),
        }
    }

    /// Soft inclusion: `self(e) ⊆ other(e)` for every parameter.
    pub fn is_subset(&self, other: &SoftSet) -> Result<bool> {
        Space::ensure_same(&self.space, &other.space)?;
        Ok(self
            .bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0))
    }

    /// Canonical enumeration index when the space has at most 63 membership
    /// bits: bit `k` of the index is the membership bit of element `k % |X|`
    /// at parameter `k / |X|`.
    pub fn canonical_index(&self) -> Option<u64> {
        let n = self.space.bit_count();
        if n > 63 {
            return None;
        }
        let nx = self.space.element_count();
        let mut idx = 0u64;
        for p in 0..self.space.parameter_count() {
            for e in 0..nx {
                if self.get_bit(p, e) {
                    idx |= 1u64 << (p * nx + e);
                }
            }
        }
        Some(idx)
    }

    /// Inverse of [`SoftSet::canonical_index`].
    pub fn from_canonical_index(space: &Arc<Space>, index: u64) -> Result<SoftSet> {
        let n = space.bit_count();
        if n > 63 {
            return Err(Error::BudgetExceeded(format!(
                "canonical indexing needs |X|*|E| <= 63, space has {n} bits"
            )));
        }
        if index >> n != 0 {
            return Err(Error::BudgetExceeded(format!(
                "index {index} out of range for a {n}-bit space"
            )));
        }
        let nx = space.element_count();
        let mut set = SoftSet::null(space);
        for p in 0..space.parameter_count() {
            for e in 0..nx {
                if index >> (p * nx + e) & 1 == 1 {
                    set.set_bit(p, e);
                }
            }
        }
        Ok(set)
    }

    /// Comparison key in canonical enumeration order: later parameters are
    /// more significant, and within one row higher words are more significant.
    fn cmp_bits(&self, other: &SoftSet) -> Ordering {
        debug_assert_eq!(self.bits.len(), other.bits.len());
        for (a, b) in self.bits.iter().rev().zip(other.bits.iter().rev()) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
            && (Arc::ptr_eq(&self.space, &other.space) || self.space == other.space)
    }
}

impl Eq for SoftSet {}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_bits(other).then_with(|| {
            if Arc::ptr_eq(&self.space, &other.space) || self.space == other.space {
                Ordering::Equal
            } else {
                (self.space.universe(), self.space.parameters())
                    .cmp(&(other.space.universe(), other.space.parameters()))
            }
        })
    }
}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
        self.space.element_count().hash(state);
        self.space.parameter_count().hash(state);
    }
}

impl fmt::Display for SoftSet {
    /// Renders like `{(e1,∅),(e2,{x2})}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (p, name) in self.space.parameters().iter().enumerate() {
            if p > 0 {
                write!(f, ",")?;
            }
            let elems = self.slice_at(p);
            if elems.is_empty() {
                write!(f, "({name},∅)")?;
            } else {
                write!(f, "({name},{{{}}})", elems.join(","))?;
            }
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SoftSet{self}")
    }
}

/// Renders a crisp subset of a universe like `{x1,x2}`, with `∅` for empty.
pub fn format_crisp<S: AsRef<str>>(elems: &[S]) -> String {
    if elems.is_empty() {
        "∅".to_string()
    } else {
        format!(
            "{{{}}}",
            elems
                .iter()
                .map(AsRef::as_ref)
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}
