//! Sparse exact-integer linear combinations over an ordered basis.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Coefficient ring. Arithmetic is checked; overflow surfaces as [`Error::Overflow`].
pub type Coeff = i64;

pub(crate) fn checked_add(a: Coeff, b: Coeff) -> Result<Coeff> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: Coeff, b: Coeff) -> Result<Coeff> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// A finite formal sum `Σ c_k · k` with no stored zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Coeff>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: Ord> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(key: K, coeff: Coeff) -> Self {
        let mut out = Self::new();
        if coeff != 0 {
            out.terms.insert(key, coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Coeff> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Coeff> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Coeff) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                let c = checked_add(*slot.get(), coeff)?;
                if c == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = c;
                }
            }
        }
        Ok(())
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &LinComb<K>, scale: Coeff) -> Result<()>
    where
        K: Clone,
    {
        if scale == 0 {
            return Ok(());
        }
        for (k, &c) in other.iter() {
            self.add_term(k.clone(), checked_mul(c, scale)?)?;
        }
        Ok(())
    }

    pub fn scaled(&self, scale: Coeff) -> Result<Self>
    where
        K: Clone,
    {
        let mut out = Self::new();
        out.add_scaled(self, scale)?;
        Ok(out)
    }

    /// Apply `f` to every key, summing coefficients of keys that collide.
    pub fn map_keys<L: Ord>(&self, mut f: impl FnMut(&K) -> L) -> Result<LinComb<L>> {
        let mut out = LinComb::new();
        for (k, &c) in self.iter() {
            out.add_term(f(k), c)?;
        }
        Ok(out)
    }

    pub fn into_vec(self) -> Vec<(K, Coeff)> {
        self.terms.into_iter().collect()
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Coeff);
    type IntoIter = btree_map::IntoIter<K, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, K, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord> FromIterator<(K, Coeff)> for LinComb<K> {
    /// Panics on overflow; use [`LinComb::add_term`] where overflow is plausible.
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut out = LinComb::new();
        for (k, c) in iter {
            out.add_term(k, c).expect("coefficient overflow");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_key() {
        let mut v = LinComb::singleton(3u8, 2);
        v.add_term(3, -2).unwrap();
        assert!(v.is_zero());
        assert!(LinComb::singleton(1u8, 0).is_zero());
    }

    #[test]
    fn overflow_is_reported() {
        let mut v = LinComb::singleton(0u8, Coeff::MAX);
        assert_eq!(v.add_term(0, 1), Err(Error::Overflow));
        assert_eq!(v.scaled(2), Err(Error::Overflow));
    }
}
