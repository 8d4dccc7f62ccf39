// Not every suite uses every helper.
#![allow(dead_code)]

//! Shared fixtures for the integration tests: catalog shortcuts, a
//! seeded generator of random valid bialgebras (seed algebras moved
//! through random unimodular basis changes, which preserve the axioms
//! and keep all arithmetic in integers), and random exponent maps.

use bialg::catalog::{self, CatalogItem};
use bialg::contraction::ExponentMap;
use bialg::scalar::Scalar;
use bialg::tensor::{CocommutatorTensor, CommutatorTensor};
use bialg::LieBialgebra;
use rand::Rng;

pub fn catalog_bialgebra(key: &str) -> LieBialgebra {
    match catalog::find(key).expect("catalog entry").item {
        CatalogItem::Algebra(doc) => doc.to_bialgebra().expect("catalog entry materializes"),
        CatalogItem::Map(_) => panic!("{key} is a map entry"),
    }
}

pub fn e2() -> LieBialgebra {
    catalog_bialgebra("e2")
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("X{i}")).collect()
}

fn bialgebra(
    label: &str,
    dim: usize,
    params: &[&str],
    c_entries: &[(usize, usize, usize, i64)],
    f_entries: &[(usize, usize, usize, i64)],
) -> LieBialgebra {
    let mut c = CommutatorTensor::new(dim);
    for &(i, j, k, v) in c_entries {
        c.set(i, j, k, Scalar::from_int(v)).unwrap();
    }
    let mut f = CocommutatorTensor::new(dim);
    for &(i, j, k, v) in f_entries {
        f.set(i, j, k, Scalar::from_int(v)).unwrap();
    }
    LieBialgebra::new(
        label,
        names(dim),
        params.iter().map(|s| s.to_string()).collect(),
        c,
        f,
    )
}

/// Seed pool of valid bialgebras per dimension, spanning abelian, purely
/// primal, purely dual, and genuinely coupled pairs.
pub fn seeds(dim: usize) -> Vec<LieBialgebra> {
    let mut pool = vec![bialgebra("abelian", dim, &[], &[], &[])];
    match dim {
        2 => {
            pool.push(bialgebra("aff1", 2, &[], &[(1, 2, 2, 1)], &[]));
            pool.push(bialgebra("aff1-dual", 2, &[], &[], &[(1, 2, 2, 1)]));
            // Self-dual pairing of the affine line with its mirror
            // cocommutator; passes the cocycle condition.
            pool.push(bialgebra(
                "aff1-pair",
                2,
                &[],
                &[(1, 2, 2, 1)],
                &[(1, 2, 1, 1)],
            ));
        }
        3 => {
            pool.push(bialgebra("heisenberg", 3, &[], &[(1, 2, 3, 1)], &[]));
            pool.push(bialgebra(
                "so3",
                3,
                &[],
                &[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)],
                &[],
            ));
            pool.push(bialgebra(
                "e2-int",
                3,
                &[],
                &[(1, 2, 3, 1), (1, 3, 2, -1)],
                &[(1, 3, 1, 1), (2, 3, 2, 1)],
            ));
            pool.push(bialgebra(
                "e2-dual",
                3,
                &[],
                &[(1, 3, 1, 1), (2, 3, 2, 1)],
                &[(1, 2, 3, 1), (1, 3, 2, -1)],
            ));
        }
        4 => {
            pool.push(bialgebra("heisenberg+1", 4, &[], &[(1, 2, 3, 1)], &[]));
            pool.push(bialgebra(
                "so3+1",
                4,
                &[],
                &[(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)],
                &[],
            ));
            // Double of the affine line: [X1,X2]=X2 with dual block
            // [x1,x2]=0 and mixed block from the formulas.
            let aff = bialgebra("aff1", 2, &[], &[(1, 2, 2, 1)], &[]);
            let d = bialg::build_double(&aff).expect("aff1 is valid");
            pool.push(d.as_bialgebra());
        }
        _ => {}
    }
    for b in &pool {
        assert!(b.is_valid(), "seed {} is not a valid bialgebra", b.name);
    }
    pool
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Change basis by an integer matrix with integer inverse:
/// `Y_i = A^a_i X_a`. Both tensors transform covariantly, so validity is
/// preserved exactly.
pub fn change_basis(b: &LieBialgebra, a: &[Vec<i64>], ainv: &[Vec<i64>]) -> LieBialgebra {
    let n = b.dim();
    let at = |m: &[Vec<i64>], r: usize, c: usize| Scalar::from_int(m[r - 1][c - 1]);
    let mut c_new = CommutatorTensor::new(n);
    for (p, q, r, v) in b.c.iter() {
        // c~^k_{ij} = A^p_i A^q_j c^r_{pq} (A^-1)^k_r
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in 1..=n {
                    let coeff = &(&at(a, p, i) * &at(a, q, j)) * &at(ainv, k, r);
                    let swapped = &(&at(a, p, j) * &at(a, q, i)) * &at(ainv, k, r);
                    let total = &(&coeff - &swapped) * v;
                    c_new.add_to(i, j, k, total).unwrap();
                }
            }
        }
    }
    let mut f_new = CocommutatorTensor::new(n);
    for (p, q, r, v) in b.f.iter() {
        // f~^{lm}_n = (A^-1)^l_p (A^-1)^m_q f^{pq}_r A^r_n
        for l in 1..=n {
            for m in (l + 1)..=n {
                for nn in 1..=n {
                    let coeff = &(&at(ainv, l, p) * &at(ainv, m, q)) * &at(a, r, nn);
                    let swapped = &(&at(ainv, l, q) * &at(ainv, m, p)) * &at(a, r, nn);
                    let total = &(&coeff - &swapped) * v;
                    f_new.add_to(l, m, nn, total).unwrap();
                }
            }
        }
    }
    let mut out = LieBialgebra::new(
        format!("{}~", b.name),
        b.names.clone(),
        b.params.clone(),
        c_new,
        f_new,
    );
    out.dual_names = b.dual_names.clone();
    out
}

/// A random valid bialgebra of the given dimension: a random seed pushed
/// through a few random integer shears (determinant one, exact integer
/// inverse).
pub fn random_bialgebra(rng: &mut impl Rng, dim: usize) -> LieBialgebra {
    let pool = seeds(dim);
    let seed = pool[rng.gen_range(0..pool.len())].clone();
    let mut a = identity(dim);
    let mut ainv = identity(dim);
    if dim >= 2 {
        for _ in 0..3 {
            let i = rng.gen_range(0..dim);
            let mut j = rng.gen_range(0..dim);
            while j == i {
                j = rng.gen_range(0..dim);
            }
            let lambda: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let mut shear = identity(dim);
            shear[i][j] = lambda;
            let mut shear_inv = identity(dim);
            shear_inv[i][j] = -lambda;
            a = matmul(&shear, &a);
            ainv = matmul(&ainv, &shear_inv);
        }
    }
    change_basis(&seed, &a, &ainv)
}

pub fn random_exponents(rng: &mut impl Rng, dim: usize) -> ExponentMap {
    ExponentMap((0..dim).map(|_| rng.gen_range(-2..=2)).collect())
}
