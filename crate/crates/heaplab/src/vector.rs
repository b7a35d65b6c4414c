//! The free vector space over splits, with exact rational coefficients.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::Zero;

/// Exact scalar type. All weights at desk scale are tiny rationals, so
/// 64-bit numerators and denominators suffice; overflow panics instead
/// of degrading silently.
pub type Scalar = Rational64;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(n)
}

/// A finite formal combination of splits with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitVector<K: Ord + Clone> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord + Clone> Default for SplitVector<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> SplitVector<K> {
    pub fn zero() -> Self {
        SplitVector {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(k: K) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(k, int(1));
        SplitVector { terms }
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

    pub fn coeff(&self, k: &K) -> Scalar {
        self.terms.get(k).copied().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&mut self, other: &SplitVector<K>) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), *c);
        }
    }

    pub fn sub(&mut self, other: &SplitVector<K>) {
        for (k, c) in other.iter() {
            self.add_term(k.clone(), -*c);
        }
    }

    pub fn scaled(&self, s: Scalar) -> SplitVector<K> {
        let mut out = SplitVector::zero();
        if s.is_zero() {
            return out;
        }
        for (k, c) in self.iter() {
            out.terms.insert(k.clone(), *c * s);
        }
        out
    }
}
