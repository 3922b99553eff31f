use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitXor, BitXorAssign};

use crate::graph::EdgeId;

const WORD: usize = u64::BITS as usize;

/// A set of edge ids, i.e. a vector of GF(2)^E.
///
/// Stored as a bit vector with no trailing zero words, so equal sets have
/// equal representations. The order is by size first, then lexicographic on
/// the ascending id sequence.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    words: Vec<u64>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        let (w, b) = (e / WORD, e % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        let (w, b) = (e / WORD, e % WORD);
        let Some(word) = self.words.get_mut(w) else {
            return false;
        };
        let had = *word >> b & 1 == 1;
        *word &= !(1 << b);
        self.trim();
        had
    }

    /// Adds `e` if absent, removes it if present.
    pub fn toggle(&mut self, e: EdgeId) {
        let (w, b) = (e / WORD, e % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << b;
        self.trim();
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.words
            .get(e / WORD)
            .is_some_and(|w| w >> (e % WORD) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Smallest member.
    pub fn first(&self) -> Option<EdgeId> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn sym_diff(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        out.sym_diff_assign(other);
        out
    }

    pub fn sym_diff_assign(&mut self, other: &EdgeSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.trim();
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = EdgeSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        out.trim();
        out
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.clone();
        for (a, b) in out.words.iter_mut().zip(&short.words) {
            *a |= b;
        }
        out
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.words.iter().enumerate().all(|(i, &a)| {
            let b = other.words.get(i).copied().unwrap_or(0);
            a & !b == 0
        })
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }
}

/// X + Y, the symmetric difference.
pub fn sym_diff(x: &EdgeSet, y: &EdgeSet) -> EdgeSet {
    x.sym_diff(y)
}

impl BitXor for &EdgeSet {
    type Output = EdgeSet;

    fn bitxor(self, rhs: &EdgeSet) -> EdgeSet {
        self.sym_diff(rhs)
    }
}

impl BitXorAssign<&EdgeSet> for EdgeSet {
    fn bitxor_assign(&mut self, rhs: &EdgeSet) {
        self.sym_diff_assign(rhs);
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSet::new();
        s.extend(iter);
        s
    }
}

impl Extend<EdgeId> for EdgeSet {
    fn extend<I: IntoIterator<Item = EdgeId>>(&mut self, iter: I) {
        for e in iter {
            self.insert(e);
        }
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space-separated ascending ids.
impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}
