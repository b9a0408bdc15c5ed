//! Root systems of classical type and exhaustive Weyl group enumeration.
//!
//! Nodes are numbered as in Bourbaki and every public index is 1-based.
//! Weights are written in the basis of fundamental weights, roots in the
//! basis of simple roots. The Cartan matrix entry `(i, j)` is
//! `<alpha_i^vee, alpha_j>`, so the j-th column is `alpha_j` in weight
//! coordinates.

use crate::error::{Error, Result};
use crate::matrix::{det_and_adjugate, unimodular_inverse, IntMatrix};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

/// Enough for the 5,160,960 elements of W(D_8).
pub const DEFAULT_WEYL_CAP: usize = 6_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidArgument(format!("unknown family {other:?}"))),
        }
    }
}

macro_rules! lattice_vec {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            /// The i-th basis vector (1-based).
            pub fn basis(rank: usize, i: usize) -> Self {
                let mut v = vec![0; rank];
                v[i - 1] = 1;
                $name(v)
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&x| x == 0)
            }

            pub fn scale(&self, k: i64) -> Self {
                $name(self.0.iter().map(|x| x * k).collect())
            }
        }

        impl Add for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Sub for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                assert_eq!(self.0.len(), rhs.0.len());
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }
    };
}

lattice_vec!(WeightVec);
lattice_vec!(RootVec);

impl WeightVec {
    pub fn fundamental(rank: usize, i: usize) -> Self {
        Self::basis(rank, i)
    }
}

impl RootVec {
    pub fn simple(rank: usize, i: usize) -> Self {
        Self::basis(rank, i)
    }
}

/// A Weyl group element, stored as its integer matrix on the simple-root
/// basis. Column `k` is `w(alpha_k)`. Entries of such matrices are root
/// coordinates, which stay tiny for classical types, so `i8` suffices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeylRepr")]
pub struct WeylElement {
    rank: usize,
    matrix: Box<[i8]>,
}

#[derive(Deserialize)]
struct WeylRepr {
    rank: usize,
    matrix: Vec<i8>,
}

impl TryFrom<WeylRepr> for WeylElement {
    type Error = Error;

    fn try_from(r: WeylRepr) -> Result<Self> {
        if r.matrix.len() != r.rank * r.rank {
            return Err(Error::DimensionMismatch { expected: r.rank * r.rank, got: r.matrix.len() });
        }
        Ok(WeylElement { rank: r.rank, matrix: r.matrix.into_boxed_slice() })
    }
}

impl WeylElement {
    fn from_matrix(m: &IntMatrix) -> Self {
        let matrix = m
            .as_flat()
            .iter()
            .map(|&x| i8::try_from(x).expect("Weyl matrix entry out of i8 range"))
            .collect();
        WeylElement { rank: m.rows(), matrix }
    }

    pub fn identity(rank: usize) -> Self {
        Self::from_matrix(&IntMatrix::identity(rank))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[i8] {
        &self.matrix
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_flat(
            self.rank,
            self.rank,
            self.matrix.iter().map(|&x| x as i64).collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// Image of the k-th simple root (1-based).
    pub fn image_of_simple_root(&self, k: usize) -> RootVec {
        let n = self.rank;
        RootVec((0..n).map(|i| self.matrix[i * n + (k - 1)] as i64).collect())
    }

    /// Right descents: the k with `w(alpha_k)` negative.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&k| is_negative(self.image_of_simple_root(k).coords()))
            .collect()
    }

    /// A reduced word `[i_1, ..., i_l]` with `w = s_{i_1} ... s_{i_l}`,
    /// recovered by peeling off the smallest right descent each step.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(&k) = w.right_descents().first() {
            rev.push(k);
            w = rs.right_mul_simple(&w, k - 1);
        }
        rev.reverse();
        rev
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        self.reduced_word(rs).len()
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        assert_eq!(self.rank, other.rank);
        Self::from_matrix(&self.matrix().mul(&other.matrix()))
    }

    pub fn inverse(&self) -> WeylElement {
        let inv = unimodular_inverse(&self.matrix()).expect("Weyl matrices are unimodular");
        Self::from_matrix(&inv)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{:?}", self.matrix())
    }
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().all(|&x| x <= 0) && v.iter().any(|&x| x < 0)
}

#[derive(Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    cartan: IntMatrix,
    cartan_det: i64,
    cartan_adj: IntMatrix,
}

impl PartialEq for RootSystem {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family && self.rank == other.rank
    }
}

impl Eq for RootSystem {}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({self})")
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let unsupported = |reason| Error::UnsupportedRootSystem {
            family: family.letter(),
            rank,
            reason,
        };
        let min_rank = match family {
            Family::A => 1,
            Family::B => 2,
            Family::D => 3,
            _ => return Err(unsupported("only types A, B and D are implemented")),
        };
        if rank < min_rank {
            return Err(unsupported("rank below the minimum for this family"));
        }
        if rank > 16 {
            return Err(unsupported("rank above 16 is not supported"));
        }
        let cartan = cartan_for(family, rank);
        let (cartan_det, cartan_adj) = det_and_adjugate(&cartan);
        Ok(RootSystem { family, rank, cartan, cartan_det, cartan_adj })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn cartan_determinant(&self) -> i64 {
        self.cartan_det
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank })
        } else {
            Ok(())
        }
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.rank {
            Err(Error::DimensionMismatch { expected: self.rank, got })
        } else {
            Ok(())
        }
    }

    /// `alpha_i` written in fundamental weights: the i-th Cartan column.
    pub fn simple_root_as_weight(&self, i: usize) -> Result<WeightVec> {
        self.check_index(i)?;
        Ok(WeightVec(self.cartan.column(i - 1)))
    }

    /// Converts a root-lattice vector to weight coordinates.
    pub fn root_to_weight(&self, v: &RootVec) -> Result<WeightVec> {
        self.check_dim(v.rank())?;
        Ok(WeightVec(self.cartan.mul_vec(v.coords())))
    }

    /// `s_i(v) = v - v_i * alpha_i`.
    pub fn reflect(&self, i: usize, v: &WeightVec) -> Result<WeightVec> {
        self.check_index(i)?;
        self.check_dim(v.rank())?;
        let alpha = self.simple_root_as_weight(i)?;
        Ok(v - &alpha.scale(v.0[i - 1]))
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank)
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        Ok(self.right_mul_simple(&self.identity(), i - 1))
    }

    /// `w * s_i` for a 0-based generator index. Column j of the product is
    /// `w(alpha_j) - a_ij * w(alpha_i)`.
    pub(crate) fn right_mul_simple(&self, w: &WeylElement, i: usize) -> WeylElement {
        let n = self.rank;
        let mut m = w.matrix.clone();
        for j in 0..n {
            let a = self.cartan[(i, j)];
            if a == 0 {
                continue;
            }
            for r in 0..n {
                let v = m[r * n + j] as i64 - a * w.matrix[r * n + i] as i64;
                m[r * n + j] = v as i8;
            }
        }
        WeylElement { rank: n, matrix: m }
    }

    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            _ => unreachable!("rejected at construction"),
        }
    }

    /// All elements of W exactly once, identity first, ordered by length
    /// and then lexicographically by matrix entries.
    ///
    /// Breadth-first search over right multiplication by simple reflections.
    /// Right multiplication changes length by exactly one, so deduplication
    /// only needs the previous and the current layer.
    pub fn enumerate_weyl(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let order = self.weyl_order();
        if order > cap as u128 {
            return Err(Error::CapExceeded { cap, order });
        }
        let mut out = vec![self.identity()];
        let mut previous: HashSet<WeylElement> = HashSet::new();
        let mut layer = vec![self.identity()];
        while !layer.is_empty() {
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for w in &layer {
                for i in 0..self.rank {
                    let v = self.right_mul_simple(w, i);
                    if !previous.contains(&v) && seen.insert(v.clone()) {
                        next.push(v);
                    }
                }
            }
            if out.len() + next.len() > cap {
                return Err(Error::CapExceeded { cap, order });
            }
            next.sort_by(|a, b| a.matrix.cmp(&b.matrix));
            out.extend(next.iter().cloned());
            previous = layer.into_iter().collect();
            layer = next;
        }
        debug_assert_eq!(out.len() as u128, order);
        Ok(out)
    }

    /// The longest element, built by multiplying on the right by any
    /// simple reflection that still increases length.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        while let Some(k) = (1..=self.rank).find(|&k| !is_negative(w.image_of_simple_root(k).coords())) {
            w = self.right_mul_simple(&w, k - 1);
        }
        w
    }

    pub fn act<V: WeylAction>(&self, w: &WeylElement, v: &V) -> Result<V> {
        V::act_by(self, w, v)
    }

    pub fn is_negative_root(&self, v: &RootVec) -> bool {
        is_negative(v.coords())
    }

    pub fn is_positive_root(&self, v: &RootVec) -> bool {
        v.coords().iter().all(|&x| x >= 0) && v.coords().iter().any(|&x| x > 0)
    }

    fn weight_action(&self, w: &WeylElement, v: &WeightVec) -> WeightVec {
        // w acts on weights by A M A^{-1}; A^{-1} = adj / det.
        let scaled = self.cartan_adj.mul_vec(v.coords());
        let moved = w.matrix().mul_vec(&scaled);
        let back = self.cartan.mul_vec(&moved);
        WeightVec(
            back.into_iter()
                .map(|x| {
                    debug_assert_eq!(x % self.cartan_det, 0);
                    x / self.cartan_det
                })
                .collect(),
        )
    }
}

/// Vectors the Weyl group acts on.
pub trait WeylAction: Sized {
    fn act_by(rs: &RootSystem, w: &WeylElement, v: &Self) -> Result<Self>;
}

impl WeylAction for RootVec {
    fn act_by(rs: &RootSystem, w: &WeylElement, v: &Self) -> Result<Self> {
        rs.check_dim(w.rank())?;
        rs.check_dim(v.rank())?;
        Ok(RootVec(w.matrix().mul_vec(v.coords())))
    }
}

impl WeylAction for WeightVec {
    fn act_by(rs: &RootSystem, w: &WeylElement, v: &Self) -> Result<Self> {
        rs.check_dim(w.rank())?;
        rs.check_dim(v.rank())?;
        Ok(rs.weight_action(w, v))
    }
}

fn cartan_for(family: Family, n: usize) -> IntMatrix {
    let mut c = IntMatrix::identity(n);
    for i in 0..n {
        c[(i, i)] = 2;
    }
    let mut link = |i: usize, j: usize, a_ij: i64, a_ji: i64| {
        c[(i, j)] = a_ij;
        c[(j, i)] = a_ji;
    };
    match family {
        Family::A => {
            for i in 0..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n is short: <alpha_n^vee, alpha_{n-1}> = -2.
            link(n - 2, n - 1, -1, -2);
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        _ => unreachable!(),
    }
    c
}
