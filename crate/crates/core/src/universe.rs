//! Finite labeled universes and the subset algebra every operator works in.
//!
//! A [`Universe`] is a cheap handle (an `Arc`) over an ordered list of
//! distinct labels. Two handles are the *same* universe only when they were
//! cloned from one another; structurally identical universes built
//! separately are distinct, and their subsets cannot be combined.
//!
//! A [`Subset`] is a bit mask over the universe's dense indices. The binary
//! operators `|`, `&`, `-` and unary `!` are implemented for `&Subset` and
//! panic when the operands come from different universes; the `try_*`
//! methods report [`GotasError::MixedUniverse`] instead.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::sync::Arc;

use crate::error::{GotasError, Result};

const WORD_BITS: usize = 64;

#[derive(Debug)]
struct UniverseInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// Ordered finite set of labeled elements with stable indices.
#[derive(Debug, Clone)]
pub struct Universe {
    inner: Arc<UniverseInner>,
}

impl Universe {
    /// Builds a universe whose element `i` is `labels[i]`.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(GotasError::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(GotasError::DuplicateLabel(label.clone()));
            }
        }
        Ok(Self {
            inner: Arc::new(UniverseInner { labels, index }),
        })
    }

    /// Universe labeled `0`, `1`, ... `n-1`. Handy for generated spaces.
    pub fn numbered(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.inner.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner
            .index
            .get(label)
            .copied()
            .ok_or_else(|| GotasError::UnknownLabel(label.to_string()))
    }

    /// True when `other` is a handle to this very universe.
    pub fn same_as(&self, other: &Universe) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    pub fn empty(&self) -> Subset {
        Subset {
            universe: self.clone(),
            words: vec![0; word_count(self.len())],
        }
    }

    pub fn full(&self) -> Subset {
        let mut s = self.empty();
        for i in 0..self.len() {
            s.set(i);
        }
        s
    }

    /// Subset containing exactly the named elements. Order and repetition
    /// in `labels` are irrelevant.
    pub fn subset<I, S>(&self, labels: I) -> Result<Subset>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut s = self.empty();
        for label in labels {
            s.set(self.index_of(label.as_ref())?);
        }
        Ok(s)
    }

    pub fn subset_from_indices<I>(&self, indices: I) -> Result<Subset>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = self.empty();
        for i in indices {
            if i >= self.len() {
                return Err(GotasError::IndexOutOfRange {
                    index: i,
                    size: self.len(),
                });
            }
            s.set(i);
        }
        Ok(s)
    }

    /// Subset whose members are the set bits of `mask` (bit `i` ↔ element `i`).
    pub fn subset_from_mask(&self, mask: u64) -> Result<Subset> {
        let n = self.len();
        if n < WORD_BITS && mask >> n != 0 {
            let index = WORD_BITS - 1 - mask.leading_zeros() as usize;
            return Err(GotasError::IndexOutOfRange { index, size: n });
        }
        let mut s = self.empty();
        s.words[0] = mask;
        Ok(s)
    }

    /// Every subset of the universe, in mask order (∅ first, U last).
    pub fn powerset(&self) -> Result<impl Iterator<Item = Subset> + '_> {
        let n = self.len();
        if n >= WORD_BITS {
            return Err(GotasError::CapExceeded {
                size: n,
                cap: WORD_BITS - 1,
            });
        }
        Ok((0..1u64 << n).map(move |m| {
            let mut s = self.empty();
            s.words[0] = m;
            s
        }))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Universe {}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// Membership mask over a [`Universe`].
#[derive(Clone)]
pub struct Subset {
    universe: Universe,
    words: Vec<u64>,
}

impl Subset {
    fn set(&mut self, i: usize) {
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe.len() && self.words[i / WORD_BITS] & (1 << (i % WORD_BITS)) != 0
    }

    pub fn contains_label(&self, label: &str) -> Result<bool> {
        Ok(self.contains(self.universe.index_of(label)?))
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe.len()
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe.len()).filter(move |&i| self.contains(i))
    }

    pub fn labels(&self) -> Vec<&str> {
        self.iter().map(|i| self.universe.label(i)).collect()
    }

    /// Low 64 bits of the mask; exact for universes of at most 64 elements.
    pub fn mask(&self) -> u64 {
        self.words[0]
    }

    pub fn same_universe(&self, other: &Subset) -> bool {
        self.universe.same_as(&other.universe)
    }

    fn check(&self, other: &Subset) -> Result<()> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(GotasError::MixedUniverse)
        }
    }

    fn zip_with(&self, other: &Subset, f: impl Fn(u64, u64) -> u64) -> Subset {
        Subset {
            universe: self.universe.clone(),
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn try_union(&self, other: &Subset) -> Result<Subset> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a | b))
    }

    pub fn try_intersect(&self, other: &Subset) -> Result<Subset> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a & b))
    }

    pub fn try_difference(&self, other: &Subset) -> Result<Subset> {
        self.check(other)?;
        Ok(self.zip_with(other, |a, b| a & !b))
    }

    pub fn try_is_subset(&self, other: &Subset) -> Result<bool> {
        self.check(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0))
    }

    pub fn union(&self, other: &Subset) -> Subset {
        self.try_union(other).expect("union of subsets from different universes")
    }

    pub fn intersect(&self, other: &Subset) -> Subset {
        self.try_intersect(other)
            .expect("intersection of subsets from different universes")
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        self.try_difference(other)
            .expect("difference of subsets from different universes")
    }

    /// Complement relative to the owning universe.
    pub fn complement(&self) -> Subset {
        let n = self.universe.len();
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        let tail = n % WORD_BITS;
        if tail != 0 {
            *words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        Subset {
            universe: self.universe.clone(),
            words,
        }
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.try_is_subset(other)
            .expect("inclusion test between subsets from different universes")
    }

    pub fn is_superset(&self, other: &Subset) -> bool {
        other.is_subset(self)
    }

    /// Order used for display: by cardinality, then lexicographically by
    /// member indices.
    pub fn canonical_cmp(&self, other: &Subset) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialEq for Subset {
    fn eq(&self, other: &Self) -> bool {
        self.same_universe(other) && self.words == other.words
    }
}

impl Eq for Subset {}

impl Hash for Subset {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `{a, c}` notation; the empty set renders as `∅`.
impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (k, label) in self.labels().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            f.write_str(label)?;
        }
        f.write_str("}")
    }
}

impl BitOr for &Subset {
    type Output = Subset;
    fn bitor(self, rhs: &Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for &Subset {
    type Output = Subset;
    fn bitand(self, rhs: &Subset) -> Subset {
        self.intersect(rhs)
    }
}

impl Sub for &Subset {
    type Output = Subset;
    fn sub(self, rhs: &Subset) -> Subset {
        self.difference(rhs)
    }
}

impl Not for &Subset {
    type Output = Subset;
    fn not(self) -> Subset {
        self.complement()
    }
}
