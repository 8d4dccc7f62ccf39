//! The classical double of a Lie bialgebra.
//!
//! The double lives on `g + g*` with basis `X_1..X_N, x^1..x^N` (dual
//! generators at indices `N+1..2N`). Its bracket blocks are
//!
//! ```text
//! [X_i, X_j] = c^k_{ij} X_k
//! [x^i, x^j] = f^{ij}_k x^k
//! [x^i, X_j] = c^i_{jk} x^k - f^{ik}_j X_k
//! ```
//!
//! and its Jacobi identity holds exactly when the base pair is a Lie
//! bialgebra. The double carries a canonical pairing, a canonical
//! r-matrix solving the classical Yang-Baxter equation, and a canonical
//! cocommutator, so the whole construction iterates.

use crate::bialgebra::{DefectReport, LieBialgebra, RMatrix};
use crate::scalar::Scalar;
use crate::tensor::{CocommutatorTensor, CommutatorTensor};
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleAlgebra {
    pub base: LieBialgebra,
    /// 2N-dimensional bracket tensor.
    pub c: CommutatorTensor,
    /// 2N labels: base names followed by dual names.
    pub names: Vec<String>,
}

#[derive(Debug, Error)]
#[error("refusing to build the double of an invalid bialgebra; failed checks: {}",
        .failures.iter().map(|r| r.kind.to_string()).collect::<Vec<_>>().join(", "))]
pub struct InvalidBialgebra {
    pub failures: Vec<DefectReport>,
}

/// Assemble the 2N bracket tensor from the three blocks, without
/// validating the input pair. [`build_double`] is the checked entry
/// point; this raw form exists so the cocycle <-> Jacobi equivalence can
/// be probed on invalid pairs.
pub fn assemble_double_tensor(c: &CommutatorTensor, f: &CocommutatorTensor) -> CommutatorTensor {
    assert_eq!(c.dim(), f.dim());
    let n = c.dim();
    let mut out = CommutatorTensor::new(2 * n);
    for (i, j, k, v) in c.iter() {
        out.set(i, j, k, v.clone()).expect("primal block in range");
    }
    for (i, j, k, v) in f.iter() {
        out.set(n + i, n + j, n + k, v.clone())
            .expect("dual block in range");
    }
    // Mixed block [x^i, X_j] = c^i_{jk} x^k - f^{ik}_j X_k.
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let coadj = c.get(j, k, i);
                if !coadj.is_zero() {
                    out.add_to(n + i, j, n + k, coadj).expect("in range");
                }
                let back = f.get(i, k, j);
                if !back.is_zero() {
                    out.add_to(n + i, j, k, -back).expect("in range");
                }
            }
        }
    }
    out
}

/// Construct the classical double, refusing invalid input: every
/// downstream statement about the double assumes the Jacobi identity.
pub fn build_double(base: &LieBialgebra) -> Result<DoubleAlgebra, InvalidBialgebra> {
    let failures: Vec<DefectReport> = base
        .validate()
        .into_iter()
        .filter(|r| !r.is_empty())
        .collect();
    if !failures.is_empty() {
        return Err(InvalidBialgebra { failures });
    }
    let c = assemble_double_tensor(&base.c, &base.f);
    let mut names = base.names.clone();
    names.extend(base.dual_names.iter().cloned());
    Ok(DoubleAlgebra {
        base: base.clone(),
        c,
        names,
    })
}

impl DoubleAlgebra {
    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    /// Canonical inner product: `<x^i, X_j> = delta^i_j`, both blocks
    /// isotropic.
    pub fn pairing(&self, a: usize, b: usize) -> Scalar {
        let n2 = self.dim();
        assert!(a >= 1 && a <= n2 && b >= 1 && b <= n2, "index out of range");
        let n = self.base_dim();
        let mixed = (a <= n) != (b <= n);
        if mixed && (a.abs_diff(b) == n) {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    /// Canonical r-matrix `r = X_i (x) x^i`.
    pub fn canonical_rmatrix(&self) -> RMatrix {
        let n = self.base_dim();
        let mut r = RMatrix::new(2 * n);
        for i in 1..=n {
            r.set(i, n + i, Scalar::one());
        }
        r
    }

    /// Canonical cocommutator of the double, induced by the canonical
    /// r-matrix: `delta(X_i) = f^{jk}_i X_j ^ X_k` on the primal block and
    /// `delta(x^i) = c^i_{jk} x^k ^ x^j` on the dual block. The dual
    /// generators carry the opposite of the dual bialgebra's cocommutator;
    /// with the plus sign the pair would fail the cocycle condition
    /// (direct computation on the Euclidean double), so the double
    /// contains `g*` with reversed cocommutator.
    pub fn cocommutator(&self) -> CocommutatorTensor {
        let n = self.base_dim();
        let mut out = CocommutatorTensor::new(2 * n);
        for (j, k, i, v) in self.base.f.iter() {
            out.set(j, k, i, v.clone()).expect("in range");
        }
        for (j, k, i, v) in self.base.c.iter() {
            out.set(n + j, n + k, n + i, -v).expect("in range");
        }
        out
    }

    /// The double seen as a bialgebra of dimension 2N, ready for another
    /// round of doubling.
    pub fn as_bialgebra(&self) -> LieBialgebra {
        let mut b = LieBialgebra::new(
            format!("double({})", self.base.name),
            self.names.clone(),
            self.base.params.clone(),
            self.c.clone(),
            self.cocommutator(),
        );
        // Starring instead of lowercasing keeps the labels distinct on
        // iterated doubles, where half of them are lowercase already.
        b.dual_names = self.names.iter().map(|n| format!("{n}*")).collect();
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{check_jacobi, cocommutator_from_rmatrix, schouten_defect};
    use crate::scalar::Scalar;
    use crate::tensor::{transpose_roles, transpose_roles_back};

    fn z() -> Scalar {
        Scalar::param("z")
    }

    fn e2() -> LieBialgebra {
        let mut c = CommutatorTensor::new(3);
        c.set(1, 2, 3, Scalar::one()).unwrap();
        c.set(1, 3, 2, -Scalar::one()).unwrap();
        let mut f = CocommutatorTensor::new(3);
        f.set(1, 3, 1, z()).unwrap();
        f.set(2, 3, 2, z()).unwrap();
        LieBialgebra::new(
            "e2",
            vec!["J12".into(), "P1".into(), "P2".into()],
            vec!["z".into()],
            c,
            f,
        )
    }

    /// Bracket of two basis elements of the double as a coefficient
    /// vector over the 2N basis.
    fn bracket(d: &DoubleAlgebra, a: usize, b: usize) -> Vec<Scalar> {
        (1..=d.dim()).map(|k| d.c.get(a, b, k)).collect()
    }

    fn coeffs(pairs: &[(usize, Scalar)], dim: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); dim];
        for (i, s) in pairs {
            v[i - 1] = s.clone();
        }
        v
    }

    #[test]
    fn e2_double_mixed_brackets() {
        // Basis: 1=J12, 2=P1, 3=P2, 4=j12, 5=p1, 6=p2.
        let d = build_double(&e2()).unwrap();
        // [p1, P1] = -z P2
        assert_eq!(bracket(&d, 5, 2), coeffs(&[(3, -z())], 6));
        // [p2, P1] = -j12 + z P1
        assert_eq!(bracket(&d, 6, 2), coeffs(&[(4, -Scalar::one()), (2, z())], 6));
        // [p2, J12] = p1 + z J12 (direct evaluation of the mixed-block
        // formula with c^3_{12} = 1 and f^{13}_1 = z)
        assert_eq!(bracket(&d, 6, 1), coeffs(&[(5, Scalar::one()), (1, z())], 6));
        // [j12, J12] = -z P2, [p1, P2] = j12
        assert_eq!(bracket(&d, 4, 1), coeffs(&[(3, -z())], 6));
        assert_eq!(bracket(&d, 5, 3), coeffs(&[(4, Scalar::one())], 6));
    }

    #[test]
    fn trivial_cocommutator_gives_semidirect_structure() {
        let mut b = e2();
        b.f = CocommutatorTensor::new(3);
        let d = build_double(&b).unwrap();
        // x-block abelian
        for i in 4..=6 {
            for j in 4..=6 {
                for k in 1..=6 {
                    assert!(d.c.get(i, j, k).is_zero());
                }
            }
        }
        // [x^i, X_j] = c^i_{jk} x^k: [p2, J12] = p1
        assert_eq!(bracket(&d, 6, 1), coeffs(&[(5, Scalar::one())], 6));
    }

    #[test]
    fn double_of_e2_satisfies_jacobi() {
        let d = build_double(&e2()).unwrap();
        assert!(check_jacobi(&d.c).is_empty());
    }

    #[test]
    fn invalid_input_is_refused() {
        let mut b = e2();
        b.f.set(2, 3, 2, -z()).unwrap();
        let err = build_double(&b).unwrap_err();
        assert!(err
            .failures
            .iter()
            .any(|r| r.kind == crate::bialgebra::DefectKind::Cocycle));
    }

    #[test]
    fn pairing_blocks() {
        let d = build_double(&e2()).unwrap();
        assert_eq!(d.pairing(4, 1), Scalar::one()); // <x^1, X_1>
        assert_eq!(d.pairing(1, 2), Scalar::zero()); // <X_1, X_2>
        assert_eq!(d.pairing(5, 6), Scalar::zero()); // <x^2, x^3>
        assert_eq!(d.pairing(2, 5), Scalar::one()); // symmetric
        assert_eq!(d.pairing(4, 2), Scalar::zero());
    }

    #[test]
    fn pairing_is_ad_invariant_on_e2_double() {
        // <[a,b], c> + <b, [a,c]> = 0 for all basis triples.
        let d = build_double(&e2()).unwrap();
        let n2 = d.dim();
        for a in 1..=n2 {
            for b in 1..=n2 {
                for c in 1..=n2 {
                    let mut total = Scalar::zero();
                    for k in 1..=n2 {
                        total = total
                            + &d.c.get(a, b, k) * &d.pairing(k, c)
                            + &d.c.get(a, c, k) * &d.pairing(b, k);
                    }
                    assert!(total.is_zero(), "pairing not invariant at ({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn canonical_rmatrix_entries() {
        let d = build_double(&e2()).unwrap();
        let r = d.canonical_rmatrix();
        for i in 1..=3 {
            assert_eq!(r.get(i, 3 + i), Scalar::one());
        }
        assert_eq!(r.iter().count(), 3);
    }

    #[test]
    fn canonical_rmatrix_solves_cybe() {
        let d = build_double(&e2()).unwrap();
        assert!(schouten_defect(&d.c, &d.canonical_rmatrix()).is_zero());
    }

    #[test]
    fn one_dimensional_abelian_double() {
        let b = LieBialgebra::new(
            "point",
            vec!["X1".into()],
            vec![],
            CommutatorTensor::new(1),
            CocommutatorTensor::new(1),
        );
        let d = build_double(&b).unwrap();
        let r = d.canonical_rmatrix();
        assert_eq!(r.get(1, 2), Scalar::one());
        assert!(schouten_defect(&d.c, &r).is_zero());
    }

    #[test]
    fn double_cocommutator_values() {
        let d = build_double(&e2()).unwrap();
        let delta = d.cocommutator();
        // delta(J12) = z J12 ^ P2
        assert_eq!(delta.get(1, 3, 1), z());
        // delta(j12) = 0
        assert!((1..=6)
            .flat_map(|j| (1..=6).map(move |k| (j, k)))
            .all(|(j, k)| delta.get(j, k, 4).is_zero()));
        // delta(p2) = p1 ^ j12: the dual generators sit inside the double
        // with the sign of their cocommutator reversed.
        assert_eq!(delta.get(4, 5, 6), -Scalar::one());
        // delta(p1) = j12 ^ p2
        assert_eq!(delta.get(4, 6, 5), Scalar::one());
    }

    #[test]
    fn cocommutator_matches_canonical_rmatrix() {
        let d = build_double(&e2()).unwrap();
        let from_r = cocommutator_from_rmatrix(&d.c, &d.canonical_rmatrix()).unwrap();
        assert_eq!(from_r, d.cocommutator());
    }

    #[test]
    fn double_is_a_valid_bialgebra_and_iterates() {
        let d = build_double(&e2()).unwrap();
        let b6 = d.as_bialgebra();
        assert!(b6.is_valid());
        let d12 = build_double(&b6).unwrap();
        assert_eq!(d12.dim(), 12);
        assert!(check_jacobi(&d12.c).is_empty());
    }

    #[test]
    fn trivial_base_cocommutator_gives_trivial_primal_block() {
        let mut b = e2();
        b.f = CocommutatorTensor::new(3);
        let d = build_double(&b).unwrap();
        let delta = d.cocommutator();
        for i in 1..=3 {
            for j in 1..=6 {
                for k in 1..=6 {
                    assert!(delta.get(j, k, i).is_zero());
                }
            }
        }
    }

    #[test]
    fn sub_bialgebra_embeddings() {
        let base = e2();
        let d = build_double(&base).unwrap();
        let b6 = d.as_bialgebra();
        let n = 3;
        // Restriction to 1..N recovers (c, f).
        for a in 1..=n {
            for b in 1..=n {
                for k in 1..=n {
                    assert_eq!(b6.c.get(a, b, k), base.c.get(a, b, k));
                    assert_eq!(b6.f.get(a, b, k), base.f.get(a, b, k));
                }
            }
        }
        // Restriction to N+1..2N recovers the dual algebra transpose_roles(f)
        // carrying the reversed cocommutator, minus the transpose of c.
        let dual_c = transpose_roles(&base.f);
        let dual_f = transpose_roles_back(&base.c);
        for a in 1..=n {
            for b in 1..=n {
                for k in 1..=n {
                    assert_eq!(b6.c.get(n + a, n + b, n + k), dual_c.get(a, b, k));
                    assert_eq!(b6.f.get(n + a, n + b, n + k), -dual_f.get(a, b, k));
                }
            }
        }
    }
}
