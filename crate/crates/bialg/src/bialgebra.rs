//! Lie bialgebra axioms and coboundary machinery.
//!
//! A bialgebra is a pair of structure tensors `(c, f)` such that `c` is a
//! Lie bracket, the transpose of `f` is a Lie bracket on the dual, and the
//! two satisfy the cocycle compatibility condition. All checks are exact;
//! a defect report is empty exactly when the identity holds.

use crate::scalar::{rational, Scalar};
use crate::tensor::{transpose_roles, CocommutatorTensor, CommutatorTensor, GenericTensor};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// A Lie bialgebra presented by structure tensors in a fixed basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieBialgebra {
    pub name: String,
    pub names: Vec<String>,
    pub params: Vec<String>,
    pub c: CommutatorTensor,
    pub f: CocommutatorTensor,
    /// Dual generator labels; defaults to lowercased primal labels.
    pub dual_names: Vec<String>,
}

impl LieBialgebra {
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        params: Vec<String>,
        c: CommutatorTensor,
        f: CocommutatorTensor,
    ) -> Self {
        assert_eq!(c.dim(), f.dim(), "tensor dimensions must agree");
        assert_eq!(names.len(), c.dim(), "one label per generator");
        let dual_names = names.iter().map(|n| n.to_lowercase()).collect();
        LieBialgebra {
            name: name.into(),
            names,
            params,
            c,
            f,
            dual_names,
        }
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn validate(&self) -> Vec<DefectReport> {
        vec![
            check_jacobi(&self.c),
            co_jacobi(&self.f),
            check_cocycle(&self.c, &self.f).expect("dimensions agree by construction"),
        ]
    }

    pub fn is_valid(&self) -> bool {
        self.validate().iter().all(DefectReport::is_empty)
    }
}

/// An element of `g (x) g` presented by its full square of components; no
/// symmetry is imposed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RMatrix {
    dim: usize,
    entries: std::collections::BTreeMap<(usize, usize), Scalar>,
}

impl RMatrix {
    pub fn new(dim: usize) -> Self {
        RMatrix {
            dim,
            entries: Default::default(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i >= 1 && i <= self.dim && j >= 1 && j <= self.dim);
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert!(i >= 1 && i <= self.dim && j >= 1 && j <= self.dim);
        if value.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), value);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: Scalar) {
        let current = self.get(i, j);
        self.set(i, j, &current + &value);
    }

    /// Add `v * (X_i ^ X_j)`, i.e. `v` at `(i, j)` and `-v` at `(j, i)`.
    pub fn add_wedge(&mut self, i: usize, j: usize, v: Scalar) {
        self.add_to(i, j, v.clone());
        self.add_to(j, i, -v);
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Symmetric part as a rank-2 tensor, `(r^{ij} + r^{ji}) / 2`.
    pub fn symmetric_part(&self) -> GenericTensor {
        let half = Scalar::from_rational(rational(1, 2));
        let mut out = GenericTensor::new(self.dim, 2);
        for (i, j, v) in self.iter() {
            out.add_to(&[i, j], &half * v);
            out.add_to(&[j, i], &half * v);
        }
        out
    }

    /// Antisymmetric part, `(r^{ij} - r^{ji}) / 2`.
    pub fn antisymmetric_part(&self) -> RMatrix {
        let half = Scalar::from_rational(rational(1, 2));
        let mut out = RMatrix::new(self.dim);
        for (i, j, v) in self.iter() {
            out.add_to(i, j, &half * v);
            out.add_to(j, i, -(&half * v));
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DefectKind {
    Jacobi,
    CoJacobi,
    Cocycle,
    Cybe,
    AdInvariance,
}

impl fmt::Display for DefectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = match self {
            DefectKind::Jacobi => "jacobi",
            DefectKind::CoJacobi => "co-jacobi",
            DefectKind::Cocycle => "cocycle",
            DefectKind::Cybe => "cybe",
            DefectKind::AdInvariance => "ad-invariance",
        };
        f.write_str(label)
    }
}

/// Exact record of where an identity fails: empty list iff it holds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DefectReport {
    pub kind: DefectKind,
    pub violations: Vec<(Vec<usize>, Scalar)>,
}

impl DefectReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Jacobi identity of a bracket tensor. Violations carry `(i, j, k, l)`
/// with `i < j < k` and the value of the cyclic sum
/// `sum_m (c^m_{ij} c^l_{mk} + c^m_{jk} c^l_{mi} + c^m_{ki} c^l_{mj})`.
pub fn check_jacobi(c: &CommutatorTensor) -> DefectReport {
    let n = c.dim();
    let mut violations = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                for l in 1..=n {
                    let mut total = Scalar::zero();
                    for m in 1..=n {
                        total = total
                            + &c.get(i, j, m) * &c.get(m, k, l)
                            + &c.get(j, k, m) * &c.get(m, i, l)
                            + &c.get(k, i, m) * &c.get(m, j, l);
                    }
                    if !total.is_zero() {
                        violations.push((vec![i, j, k, l], total));
                    }
                }
            }
        }
    }
    DefectReport {
        kind: DefectKind::Jacobi,
        violations,
    }
}

/// Co-Jacobi: the transpose of the cocommutator must be a Lie bracket on
/// the dual space.
pub fn co_jacobi(f: &CocommutatorTensor) -> DefectReport {
    let mut report = check_jacobi(&transpose_roles(f));
    report.kind = DefectKind::CoJacobi;
    report
}

/// Cocycle compatibility between bracket and cocommutator. Violations
/// carry `(a, b, i, j)` with `a < b`, `i < j` and the value of
/// `sum_k (f^{ab}_k c^k_{ij} - f^{ak}_i c^b_{kj} - f^{kb}_i c^a_{kj}
///         - f^{ak}_j c^b_{ik} - f^{kb}_j c^a_{ik})`.
///
/// Only index combinations built from indices that appear in some nonzero
/// entry are evaluated: every term in the defect is a product of an `f`
/// entry and a `c` entry, so a combination with an untouched index is
/// structurally zero. A dense oracle cross-checks this in the tests.
pub fn check_cocycle(c: &CommutatorTensor, f: &CocommutatorTensor) -> Result<DefectReport, DimensionMismatch> {
    if c.dim() != f.dim() {
        return Err(DimensionMismatch {
            left: c.dim(),
            right: f.dim(),
        });
    }
    let mut active: BTreeSet<usize> = BTreeSet::new();
    for (i, j, k, _) in c.iter() {
        active.extend([i, j, k]);
    }
    for (l, m, o, _) in f.iter() {
        active.extend([l, m, o]);
    }

    let mut violations = Vec::new();
    for &a in &active {
        for &b in active.iter().filter(|&&b| b > a) {
            for &i in &active {
                for &j in active.iter().filter(|&&j| j > i) {
                    let value = cocycle_defect_at(c, f, a, b, i, j);
                    if !value.is_zero() {
                        violations.push((vec![a, b, i, j], value));
                    }
                }
            }
        }
    }
    Ok(DefectReport {
        kind: DefectKind::Cocycle,
        violations,
    })
}

pub(crate) fn cocycle_defect_at(
    c: &CommutatorTensor,
    f: &CocommutatorTensor,
    a: usize,
    b: usize,
    i: usize,
    j: usize,
) -> Scalar {
    let n = c.dim();
    let mut value = Scalar::zero();
    for k in 1..=n {
        value = value + &f.get(a, b, k) * &c.get(i, j, k)
            - &f.get(a, k, i) * &c.get(k, j, b)
            - &f.get(k, b, i) * &c.get(k, j, a)
            - &f.get(a, k, j) * &c.get(i, k, b)
            - &f.get(k, b, j) * &c.get(i, k, a);
    }
    value
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("dimension mismatch: {left} vs {right}")]
pub struct DimensionMismatch {
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Error)]
pub enum CoboundaryError {
    #[error("cocommutator from r-matrix is not skew-symmetric at {0:?}; the symmetric part of the r-matrix is not ad-invariant")]
    NotSkew(Vec<(usize, usize, usize)>),
    #[error(transparent)]
    Dimension(#[from] DimensionMismatch),
}

/// Cocommutator induced by an r-matrix through the adjoint action:
/// `f^{ab}_k = sum_i (c^a_{ki} r^{ib} + c^b_{ki} r^{ai})`.
///
/// Errors if the result is not skew in `(a, b)`, which signals that the
/// symmetric part of the r-matrix is not ad-invariant.
pub fn cocommutator_from_rmatrix(
    c: &CommutatorTensor,
    rho: &RMatrix,
) -> Result<CocommutatorTensor, CoboundaryError> {
    if c.dim() != rho.dim() {
        return Err(DimensionMismatch {
            left: c.dim(),
            right: rho.dim(),
        }
        .into());
    }
    let n = c.dim();
    let component = |a: usize, b: usize, k: usize| {
        let mut v = Scalar::zero();
        for i in 1..=n {
            v = v + &c.get(k, i, a) * &rho.get(i, b) + &c.get(k, i, b) * &rho.get(a, i);
        }
        v
    };

    let mut bad = Vec::new();
    let mut f = CocommutatorTensor::new(n);
    for k in 1..=n {
        for a in 1..=n {
            // diagonal components must vanish for a skew result
            if !component(a, a, k).is_zero() {
                bad.push((a, a, k));
            }
        }
        for a in 1..=n {
            for b in (a + 1)..=n {
                let upper = component(a, b, k);
                let lower = component(b, a, k);
                if upper != -&lower {
                    bad.push((a, b, k));
                } else {
                    f.set(a, b, k, upper).expect("indices in range");
                }
            }
        }
    }
    if bad.is_empty() {
        Ok(f)
    } else {
        Err(CoboundaryError::NotSkew(bad))
    }
}

/// Schouten bracket `[[r, r]] = [r_12, r_13] + [r_12, r_23] + [r_13, r_23]`
/// in components:
/// `T^{abc} = sum_{s,t} (r^{sb} r^{tc} c^a_{st} + r^{as} r^{tc} c^b_{st}
///                       + r^{as} r^{bt} c^c_{st})`.
/// The zero tensor means the r-matrix solves the classical Yang-Baxter
/// equation.
pub fn schouten_defect(c: &CommutatorTensor, rho: &RMatrix) -> GenericTensor {
    let n = c.dim();
    let mut out = GenericTensor::new(n, 3);
    // Drive the sums from nonzero c entries: every term carries one
    // c^x_{st} factor, so (s, t) ranges over stored pairs (both orders).
    let mut pairs: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    for (s, t, u, v) in c.iter() {
        pairs.push((s, t, u, v.clone()));
        pairs.push((t, s, u, -v));
    }
    for (s, t, u, cval) in &pairs {
        for x in 1..=n {
            for y in 1..=n {
                // c^a_{st}: a = u, b = x, c = y
                out.add_to(&[*u, x, y], &(&rho.get(*s, x) * &rho.get(*t, y)) * cval);
                // c^b_{st}: a = x, b = u, c = y
                out.add_to(&[x, *u, y], &(&rho.get(x, *s) * &rho.get(*t, y)) * cval);
                // c^c_{st}: a = x, b = y, c = u
                out.add_to(&[x, y, *u], &(&rho.get(x, *s) * &rho.get(y, *t)) * cval);
            }
        }
    }
    out
}

/// Ad-invariance of a rank-2 or rank-3 tensor under the bracket `c`: for
/// every generator index `k`, the adjoint action on each slot must cancel.
/// Violations carry `(k, indices...)`.
pub fn check_ad_invariance(c: &CommutatorTensor, tensor: &GenericTensor) -> DefectReport {
    assert!(
        tensor.rank() == 2 || tensor.rank() == 3,
        "ad-invariance is defined here for rank 2 and 3"
    );
    let n = c.dim();
    assert_eq!(n, tensor.dim());
    let rank = tensor.rank();
    let mut violations = Vec::new();
    for k in 1..=n {
        for flat in 0..n.pow(rank as u32) {
            let mut idx = Vec::with_capacity(rank);
            let mut rest = flat;
            for _ in 0..rank {
                idx.push(rest % n + 1);
                rest /= n;
            }
            let mut value = Scalar::zero();
            for s in 1..=n {
                for slot in 0..rank {
                    let mut inner = idx.clone();
                    inner[slot] = s;
                    value = value + &c.get(k, s, idx[slot]) * &tensor.get(&inner);
                }
            }
            if !value.is_zero() {
                let mut key = vec![k];
                key.extend_from_slice(&idx);
                violations.push((key, value));
            }
        }
    }
    violations.sort_by(|a, b| a.0.cmp(&b.0));
    DefectReport {
        kind: DefectKind::AdInvariance,
        violations,
    }
}
