//! Finite integer combinations of basis elements with checked arithmetic.

use std::collections::btree_map::{self, BTreeMap};

use crate::error::{Error, Result};
use crate::shape::Partition;

/// A finite `Σ c_i e_i` over an ordered basis. Zero coefficients are never
/// stored, so two combinations are equal iff their maps are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCombination<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for LinearCombination<K> {
    fn default() -> Self {
        LinearCombination { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinearCombination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(key, 1);
        LinearCombination { terms }
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

    pub fn coeff(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, i64> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, i64> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: i64) -> Result<()> {
        if coeff == 0 {
            return Ok(());
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(coeff).ok_or(Error::Overflow)?;
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: i64) -> Result<()> {
        for (key, &c) in &other.terms {
            self.add_term(key.clone(), c.checked_mul(factor).ok_or(Error::Overflow)?)?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, 1)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, -1)?;
        Ok(out)
    }

    pub fn scaled(&self, factor: i64) -> Result<Self> {
        let mut out = Self::zero();
        out.add_scaled(self, factor)?;
        Ok(out)
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for LinearCombination<K> {
    /// Panics on coefficient overflow; use [`LinearCombination::add_term`]
    /// where overflow is possible.
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c).expect("coefficient overflow");
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinearCombination<K> {
    type Item = (&'a K, &'a i64);
    type IntoIter = btree_map::Iter<'a, K, i64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

/// An element of `H*(G)` in the Schubert basis.
pub type CohomClass = LinearCombination<Partition>;

/// A basis element `q^degree σ_partition` of `QH*(G)`. Orders by degree
/// first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuantumBasis {
    pub degree: u32,
    pub partition: Partition,
}

/// An element of `QH*(G) = H*(G)[q]` in the basis `q^d σ_λ`.
pub type QuantumClass = LinearCombination<QuantumBasis>;

impl QuantumClass {
    pub fn schubert(partition: Partition, degree: u32) -> Self {
        Self::basis(QuantumBasis { degree, partition })
    }

    /// Embeds a classical class at q-degree `degree`.
    pub fn from_classical(class: &CohomClass, degree: u32) -> Self {
        class
            .iter()
            .map(|(p, &c)| (QuantumBasis { degree, partition: p.clone() }, c))
            .collect()
    }

    /// Multiplies by `q^shift`.
    pub fn shifted(&self, shift: u32) -> Self {
        self.iter()
            .map(|(b, &c)| (QuantumBasis { degree: b.degree + shift, partition: b.partition.clone() }, c))
            .collect()
    }

    /// The coefficient of `q^degree`, as a classical class.
    pub fn degree_part(&self, degree: u32) -> CohomClass {
        self.iter()
            .filter(|(b, _)| b.degree == degree)
            .map(|(b, &c)| (b.partition.clone(), c))
            .collect()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.keys().map(|b| b.degree).max()
    }

    pub fn coeff_of(&self, partition: &Partition, degree: u32) -> i64 {
        self.coeff(&QuantumBasis { degree, partition: partition.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::Shape;

    #[test]
    fn cancellation_removes_terms() {
        let s = Shape::new(4, 2).unwrap();
        let a = CohomClass::basis(s.special(1).unwrap());
        let diff = a.checked_sub(&a).unwrap();
        assert!(diff.is_zero());
        assert_eq!(diff, CohomClass::zero());
    }

    #[test]
    fn overflow_is_reported() {
        let s = Shape::new(4, 2).unwrap();
        let mut a = CohomClass::basis(s.zero_partition()).scaled(i64::MAX).unwrap();
        assert_eq!(a.add_term(s.zero_partition(), 1), Err(Error::Overflow));
        assert_eq!(a.scaled(2), Err(Error::Overflow));
    }

    #[test]
    fn quantum_degree_parts() {
        let s = Shape::new(4, 2).unwrap();
        let mut q = QuantumClass::schubert(s.special(1).unwrap(), 0);
        q.add_term(QuantumBasis { degree: 2, partition: s.zero_partition() }, 3).unwrap();
        assert_eq!(q.max_degree(), Some(2));
        assert_eq!(q.shifted(1).max_degree(), Some(3));
        assert_eq!(q.degree_part(2).coeff(&s.zero_partition()), 3);
        assert!(q.degree_part(1).is_zero());
    }
}
