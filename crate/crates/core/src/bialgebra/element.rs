use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Ring;

/// Identity of a structure; elements remember which structure they belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraId(u64);

impl AlgebraId {
    pub(crate) fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        AlgebraId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

pub(crate) fn ensure_same(a: AlgebraId, b: AlgebraId) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// Adds `c` into `map[key]`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: Ord, F: Ring>(map: &mut BTreeMap<K, F>, key: K, c: F) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

macro_rules! sparse_element {
    ($name:ident, $key:ty, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq)]
        pub struct $name<F: Ring> {
            pub(crate) algebra: AlgebraId,
            pub(crate) terms: BTreeMap<$key, F>,
        }

        impl<F: Ring> $name<F> {
            pub fn zero(algebra: AlgebraId) -> Self {
                $name {
                    algebra,
                    terms: BTreeMap::new(),
                }
            }

            pub fn from_terms(algebra: AlgebraId, terms: impl IntoIterator<Item = ($key, F)>) -> Self {
                let mut out = Self::zero(algebra);
                for (k, c) in terms {
                    accumulate(&mut out.terms, k, c);
                }
                out
            }

            pub fn algebra_id(&self) -> AlgebraId {
                self.algebra
            }

            pub fn terms(&self) -> &BTreeMap<$key, F> {
                &self.terms
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

            pub fn coeff(&self, key: &$key) -> Option<&F> {
                self.terms.get(key)
            }

            pub fn add_term(&mut self, key: $key, c: F) {
                accumulate(&mut self.terms, key, c);
            }

            pub fn try_add(&self, other: &Self) -> Result<Self> {
                ensure_same(self.algebra, other.algebra)?;
                let mut out = self.clone();
                for (k, c) in &other.terms {
                    accumulate(&mut out.terms, k.clone(), c.clone());
                }
                Ok(out)
            }

            pub fn try_sub(&self, other: &Self) -> Result<Self> {
                ensure_same(self.algebra, other.algebra)?;
                let mut out = self.clone();
                for (k, c) in &other.terms {
                    accumulate(&mut out.terms, k.clone(), -c.clone());
                }
                Ok(out)
            }

            pub fn scale(&self, s: &F) -> Self {
                let mut out = Self::zero(self.algebra);
                for (k, c) in &self.terms {
                    accumulate(&mut out.terms, k.clone(), c.clone() * s);
                }
                out
            }

            pub fn neg(&self) -> Self {
                $name {
                    algebra: self.algebra,
                    terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
                }
            }
        }
    };
}

sparse_element!(AlgElement, usize, "Element of an algebra, sparse over the basis.");
sparse_element!(
    TensorElement,
    (usize, usize),
    "Element of A ⊗ A, sparse over pairs of basis indices."
);
sparse_element!(
    Tensor3,
    (usize, usize, usize),
    "Element of A ⊗ A ⊗ A, sparse over triples of basis indices."
);

impl<F: Ring> TensorElement<F> {
    /// The flip a ⊗ b ↦ b ⊗ a.
    pub fn flip(&self) -> Self {
        TensorElement {
            algebra: self.algebra,
            terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
        }
    }
}

/// A linear endomorphism given by its values on the basis.
#[derive(Debug, Clone, PartialEq)]
pub struct EndoMap<F: Ring> {
    pub(crate) algebra: AlgebraId,
    pub(crate) images: Vec<AlgElement<F>>,
}

impl<F: Ring> EndoMap<F> {
    pub fn new(algebra: AlgebraId, images: Vec<AlgElement<F>>) -> Result<Self> {
        let dim = images.len();
        for (i, im) in images.iter().enumerate() {
            ensure_same(algebra, im.algebra)?;
            if let Some((&k, _)) = im.terms.iter().next_back() {
                if k >= dim {
                    return Err(Error::SizeMismatch(format!(
                        "image of basis {i} uses index {k} >= {dim}"
                    )));
                }
            }
        }
        Ok(EndoMap { algebra, images })
    }

    pub fn algebra_id(&self) -> AlgebraId {
        self.algebra
    }

    pub fn images(&self) -> &[AlgElement<F>] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &AlgElement<F> {
        &self.images[i]
    }

    pub fn apply(&self, a: &AlgElement<F>) -> Result<AlgElement<F>> {
        ensure_same(self.algebra, a.algebra)?;
        let mut out = AlgElement::zero(self.algebra);
        for (&i, c) in &a.terms {
            for (&k, d) in &self.images[i].terms {
                accumulate(&mut out.terms, k, d.clone() * c);
            }
        }
        Ok(out)
    }

    /// (σ ⊗ σ)(T).
    pub fn apply_tensor(&self, t: &TensorElement<F>) -> Result<TensorElement<F>> {
        ensure_same(self.algebra, t.algebra)?;
        let mut out = TensorElement::zero(self.algebra);
        for (&(a, b), c) in &t.terms {
            for (&k, d) in &self.images[a].terms {
                let dc = d.clone() * c;
                for (&l, e) in &self.images[b].terms {
                    accumulate(&mut out.terms, (k, l), e.clone() * &dc);
                }
            }
        }
        Ok(out)
    }

    pub fn compose(&self, other: &EndoMap<F>) -> Result<EndoMap<F>> {
        ensure_same(self.algebra, other.algebra)?;
        let images = other
            .images
            .iter()
            .map(|im| self.apply(im))
            .collect::<Result<Vec<_>>>()?;
        Ok(EndoMap {
            algebra: self.algebra,
            images,
        })
    }
}
