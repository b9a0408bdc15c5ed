//! Image of the degree-one characteristic map modulo p, inside
//! `Ch^1 = F_p h_1 + ... + F_p h_n` where `h_i = c_1(L(omega_i))`.

use crate::cocenter::LatticeChoice;
use crate::error::{Error, Result};
use crate::liealg::RootSystem;
use serde::{Deserialize, Serialize};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// A subspace of `F_p^n` held as a reduced row-echelon basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subspace {
    pub ambient: usize,
    pub p: u64,
    pub basis: Vec<Vec<u64>>,
}

impl Subspace {
    /// Span of integer vectors reduced modulo p.
    pub fn span(p: u64, ambient: usize, vectors: &[Vec<i64>]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::DimensionMismatch { expected: ambient, got: v.len() });
            }
            rows.push(v.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect());
        }
        Ok(Subspace { ambient, p, basis: rref(rows, p) })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.iter().position(|&x| x != 0).expect("basis rows are nonzero"))
            .collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.iter().map(|&x| x.rem_euclid(self.p as i64) as u64).collect());
        rref(rows, self.p).len() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.p == other.p
            && self.ambient == other.ambient
            && self
                .basis
                .iter()
                .all(|r| other.contains(&r.iter().map(|&x| x as i64).collect::<Vec<_>>()))
    }
}

fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Span modulo p of `c_1(L(lambda))` for `lambda` running over generators
/// of the character lattice: every simple root plus the fundamental weights
/// designated by the lattice choice.
pub fn charmap_image(rs: &RootSystem, choice: LatticeChoice, p: u64) -> Result<Subspace> {
    let n = rs.rank();
    let mut gens: Vec<Vec<i64>> = (1..=n)
        .map(|i| rs.simple_root_as_weight(i).map(|w| w.0))
        .collect::<Result<_>>()?;
    gens.extend(choice.weights(rs)?.into_iter().map(|w| w.0));
    Subspace::span(p, n, &gens)
}

/// Number `s` of degree-one generators of `Ch^*(G_0)`.
pub fn degree_one_generator_count(rs: &RootSystem, choice: LatticeChoice, p: u64) -> Result<usize> {
    Ok(rs.rank() - charmap_image(rs, choice, p)?.dim())
}
