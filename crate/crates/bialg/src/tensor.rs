//! Sparse storage and index algebra for structure tensors.
//!
//! Both tensors of a Lie bialgebra are antisymmetric in one index pair:
//! the bracket tensor `c^k_{ij}` in its lower pair, the cocommutator
//! tensor `f^{lm}_n` in its upper pair. Storage keeps only the canonical
//! (first < second) component; reads apply the sign. Indices are 1-based
//! throughout, matching the usual subscript conventions.

use crate::scalar::Scalar;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TensorError {
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("antisymmetry violation: nonzero entry at equal indices ({i}, {i})")]
    EqualIndices { i: usize },
}

/// Shared sparse representation: `(a, b, c) -> Scalar` with `a < b` and
/// antisymmetry in `(a, b)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewTensor {
    dim: usize,
    entries: BTreeMap<(usize, usize, usize), Scalar>,
}

impl SkewTensor {
    pub fn new(dim: usize) -> Self {
        assert!(dim > 0, "tensor dimension must be positive");
        SkewTensor {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, index: usize) -> Result<(), TensorError> {
        if index == 0 || index > self.dim {
            Err(TensorError::IndexOutOfRange {
                index,
                dim: self.dim,
            })
        } else {
            Ok(())
        }
    }

    /// Entry with the antisymmetry sign applied. Equal skew indices read
    /// as zero. Panics on out-of-range indices; range-checked input goes
    /// through [`SkewTensor::set`].
    pub fn get(&self, a: usize, b: usize, c: usize) -> Scalar {
        for idx in [a, b, c] {
            self.check_index(idx)
                .unwrap_or_else(|e| panic!("tensor read: {e}"));
        }
        if a == b {
            return Scalar::zero();
        }
        let (lo, hi, flip) = if a < b { (a, b, false) } else { (b, a, true) };
        match self.entries.get(&(lo, hi, c)) {
            None => Scalar::zero(),
            Some(v) if flip => -v,
            Some(v) => v.clone(),
        }
    }

    /// Store a component, canonicalizing the skew pair (a swap negates
    /// the value). Setting zero deletes the entry.
    pub fn set(&mut self, a: usize, b: usize, c: usize, value: Scalar) -> Result<(), TensorError> {
        for idx in [a, b, c] {
            self.check_index(idx)?;
        }
        if a == b {
            return if value.is_zero() {
                Ok(())
            } else {
                Err(TensorError::EqualIndices { i: a })
            };
        }
        let (lo, hi, v) = if a < b {
            (a, b, value)
        } else {
            (b, a, -value)
        };
        if v.is_zero() {
            self.entries.remove(&(lo, hi, c));
        } else {
            self.entries.insert((lo, hi, c), v);
        }
        Ok(())
    }

    /// Accumulate into a component (used when assembling tensors from
    /// several sums that may hit the same slot).
    pub fn add_to(&mut self, a: usize, b: usize, c: usize, value: Scalar) -> Result<(), TensorError> {
        let current = {
            for idx in [a, b, c] {
                self.check_index(idx)?;
            }
            if a == b {
                Scalar::zero()
            } else {
                self.get(a, b, c)
            }
        };
        self.set(a, b, c, &current + &value)
    }

    /// Canonical entries, each visited exactly once, in index order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(a, b, c), v)| (a, b, c, v))
    }

    pub fn num_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}

macro_rules! skew_wrapper {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Debug)]
        pub struct $name(SkewTensor);

        impl $name {
            pub fn new(dim: usize) -> Self {
                $name(SkewTensor::new(dim))
            }

            pub fn dim(&self) -> usize {
                self.0.dim()
            }

            pub fn get(&self, a: usize, b: usize, c: usize) -> Scalar {
                self.0.get(a, b, c)
            }

            pub fn set(
                &mut self,
                a: usize,
                b: usize,
                c: usize,
                value: Scalar,
            ) -> Result<(), TensorError> {
                self.0.set(a, b, c, value)
            }

            pub fn add_to(
                &mut self,
                a: usize,
                b: usize,
                c: usize,
                value: Scalar,
            ) -> Result<(), TensorError> {
                self.0.add_to(a, b, c, value)
            }

            pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
                self.0.iter()
            }

            pub fn num_entries(&self) -> usize {
                self.0.num_entries()
            }

            pub fn is_zero(&self) -> bool {
                self.0.is_zero()
            }
        }
    };
}

skew_wrapper! {
    /// Bracket tensor `c^k_{ij}`: `[X_i, X_j] = c^k_{ij} X_k`, stored as
    /// `(i, j, k)` with `i < j`.
    CommutatorTensor
}

skew_wrapper! {
    /// Cocommutator tensor `f^{lm}_n`: `eta(X_n) = f^{lm}_n X_l (x) X_m`,
    /// stored as `(l, m, n)` with `l < m`. A single wedge component
    /// `eta(X_n) = v a^b` (with `a^b = a(x)b - b(x)a`) stores `f^{ab}_n = v`.
    CocommutatorTensor
}

/// Reinterpret the cocommutator as the bracket tensor of the dual algebra:
/// `{x^i, x^j} = f^{ij}_k x^k`. Pure index bookkeeping; the storage layout
/// is identical.
pub fn transpose_roles(f: &CocommutatorTensor) -> CommutatorTensor {
    CommutatorTensor(f.0.clone())
}

/// Inverse of [`transpose_roles`]: read a bracket tensor as the
/// cocommutator of the dual bialgebra.
pub fn transpose_roles_back(c: &CommutatorTensor) -> CocommutatorTensor {
    CocommutatorTensor(c.0.clone())
}

/// Dense-keyed tensor of arbitrary rank over the same scalar ring, with no
/// symmetry imposed. Holds defect tensors and r-matrix symmetric parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GenericTensor {
    dim: usize,
    rank: usize,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl GenericTensor {
    pub fn new(dim: usize, rank: usize) -> Self {
        GenericTensor {
            dim,
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        assert_eq!(idx.len(), self.rank);
        self.entries.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_to(&mut self, idx: &[usize], value: Scalar) {
        assert_eq!(idx.len(), self.rank);
        assert!(idx.iter().all(|&i| i >= 1 && i <= self.dim));
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(idx.to_vec()) {
            Entry::Vacant(v) => {
                v.insert(value);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &value;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }
}
