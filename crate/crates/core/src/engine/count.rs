//! Exact host-tree counting.
//!
//! A host tree picks, independently for every basic set `B`, an admissible
//! edge set: a spanning tree of the multigraph on `A(B)` with
//! `|A_i ∩ B| · |A_j ∩ B|` parallel edges between components `A_i` and
//! `A_j`. Each factor is a Laplacian minor determinant.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use super::basis::{basic_sets, BasicSetRecord};
use crate::error::Result;
use crate::exec::Exec;
use crate::hypergraph::Hypergraph;

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn bareiss_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Number of `B`-admissible edge sets.
pub fn admissible_count(record: &BasicSetRecord) -> BigUint {
    let sizes: Vec<BigInt> = record
        .parts()
        .iter()
        .map(|p| BigInt::from(p.len()))
        .collect();
    let k = sizes.len();
    if k <= 1 {
        return BigUint::one();
    }
    let total: BigInt = sizes.iter().sum();
    // Laplacian with the last row and column removed.
    let minor: Vec<Vec<BigInt>> = (0..k - 1)
        .map(|i| {
            (0..k - 1)
                .map(|j| {
                    if i == j {
                        &sizes[i] * (&total - &sizes[i])
                    } else {
                        -(&sizes[i] * &sizes[j])
                    }
                })
                .collect()
        })
        .collect();
    let det = bareiss_determinant(minor);
    debug_assert!(!det.is_negative());
    det.to_biguint().expect("Laplacian minors are nonnegative")
}

pub fn count_host_trees(h: &Hypergraph) -> Result<BigUint> {
    count_host_trees_with(h, Exec::default())
}

pub fn count_host_trees_with(h: &Hypergraph, exec: Exec) -> Result<BigUint> {
    let basis = basic_sets(h)?;
    let factors = exec.map(&basis.records, admissible_count);
    Ok(factors.into_iter().product())
}
