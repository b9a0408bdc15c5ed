//! The cocenter `Lambda_w / Lambda_r` and the intermediate character
//! lattices between root and weight lattice.
//!
//! Intermediate lattices are only ever represented by their image in the
//! cocenter; nothing downstream needs an explicit lattice basis.

use crate::error::{Error, Result};
use crate::liealg::{Family, RootSystem, WeightVec};
use crate::matrix::{smith_normal_form, IntMatrix};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Coordinates modulo the invariant factors of the owning group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CocenterElement(pub Vec<i64>);

impl CocenterElement {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for CocenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeChoice {
    Adjoint,
    SimplyConnected,
    SpecialOrthogonal,
    /// `omega_{n-1}` lies in the character lattice.
    HalfSpinPlus,
    /// `omega_n` lies in the character lattice.
    HalfSpinMinus,
}

impl LatticeChoice {
    pub const ALL: [LatticeChoice; 5] = [
        LatticeChoice::Adjoint,
        LatticeChoice::SimplyConnected,
        LatticeChoice::SpecialOrthogonal,
        LatticeChoice::HalfSpinPlus,
        LatticeChoice::HalfSpinMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LatticeChoice::Adjoint => "adjoint",
            LatticeChoice::SimplyConnected => "simply_connected",
            LatticeChoice::SpecialOrthogonal => "special_orthogonal",
            LatticeChoice::HalfSpinPlus => "half_spin_plus",
            LatticeChoice::HalfSpinMinus => "half_spin_minus",
        }
    }

    /// Fundamental weights (1-based) that, together with the roots,
    /// generate the character lattice.
    pub fn fundamental_generators(self, rs: &RootSystem) -> Result<Vec<usize>> {
        let n = rs.rank();
        let invalid = || Error::InvalidLatticeChoice {
            choice: self.name().to_string(),
            system: rs.to_string(),
        };
        match self {
            LatticeChoice::Adjoint => Ok(vec![]),
            LatticeChoice::SimplyConnected => Ok((1..=n).collect()),
            LatticeChoice::SpecialOrthogonal => match rs.family() {
                Family::B | Family::D => Ok(vec![1]),
                _ => Err(invalid()),
            },
            LatticeChoice::HalfSpinPlus | LatticeChoice::HalfSpinMinus => {
                if rs.family() != Family::D || n % 2 != 0 {
                    return Err(invalid());
                }
                let idx = if self == LatticeChoice::HalfSpinPlus { n - 1 } else { n };
                Ok(vec![idx])
            }
        }
    }

    pub fn weights(self, rs: &RootSystem) -> Result<Vec<WeightVec>> {
        Ok(self
            .fundamental_generators(rs)?
            .into_iter()
            .map(|i| WeightVec::fundamental(rs.rank(), i))
            .collect())
    }
}

impl fmt::Display for LatticeChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LatticeChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "adjoint" | "ad" => Ok(LatticeChoice::Adjoint),
            "simply_connected" | "sc" => Ok(LatticeChoice::SimplyConnected),
            "special_orthogonal" | "so" => Ok(LatticeChoice::SpecialOrthogonal),
            "half_spin_plus" | "hs+" | "hs_plus" => Ok(LatticeChoice::HalfSpinPlus),
            "half_spin_minus" | "hs_" | "hs_minus" => Ok(LatticeChoice::HalfSpinMinus),
            other => Err(Error::InvalidArgument(format!("unknown lattice choice {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CocenterGroup {
    system: RootSystem,
    factors: Vec<i64>,
    /// Rows of the left Smith transform belonging to nontrivial factors.
    projection: IntMatrix,
    generators: Vec<CocenterElement>,
}

/// Smith normal form of the Cartan matrix: `U A V = D`, and a weight
/// `lambda` lies in `A Z^n` iff `U lambda` lies in `D Z^n`, so the class of
/// `lambda` is `(U lambda)_i mod d_i` over the factors `d_i > 1`.
pub fn cocenter(rs: &RootSystem) -> CocenterGroup {
    let n = rs.rank();
    let smith = smith_normal_form(rs.cartan_matrix());
    let keep: Vec<usize> = (0..n).filter(|&i| smith.diag[i] != 1).collect();
    let factors: Vec<i64> = keep.iter().map(|&i| smith.diag[i]).collect();
    debug_assert!(factors.iter().all(|&d| d > 1), "Cartan matrices are nonsingular");
    let projection = IntMatrix::from_rows(
        &keep.iter().map(|&i| smith.left.row(i).to_vec()).collect::<Vec<_>>(),
    );
    let mut group = CocenterGroup {
        system: rs.clone(),
        factors,
        projection,
        generators: Vec::new(),
    };
    group.generators = (1..=n)
        .map(|i| group.project(&WeightVec::fundamental(n, i)))
        .collect();
    group
}

impl CocenterGroup {
    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().map(|&d| d as u64).product()
    }

    pub fn zero(&self) -> CocenterElement {
        CocenterElement(vec![0; self.factors.len()])
    }

    fn reduce(&self, v: Vec<i64>) -> CocenterElement {
        CocenterElement(v.into_iter().zip(&self.factors).map(|(x, d)| x.rem_euclid(*d)).collect())
    }

    fn project(&self, v: &WeightVec) -> CocenterElement {
        if self.factors.is_empty() {
            return self.zero();
        }
        self.reduce(self.projection.mul_vec(v.coords()))
    }

    /// The class of `omega_i` (1-based).
    pub fn generator(&self, i: usize) -> Result<&CocenterElement> {
        self.generators
            .get(i.wrapping_sub(1))
            .ok_or(Error::IndexOutOfRange { index: i, rank: self.system.rank() })
    }

    pub fn generators(&self) -> &[CocenterElement] {
        &self.generators
    }

    pub fn weight_class(&self, v: &WeightVec) -> Result<CocenterElement> {
        if v.rank() != self.system.rank() {
            return Err(Error::DimensionMismatch { expected: self.system.rank(), got: v.rank() });
        }
        Ok(self.project(v))
    }

    pub fn add(&self, a: &CocenterElement, b: &CocenterElement) -> CocenterElement {
        self.reduce(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn scale(&self, a: &CocenterElement, k: i64) -> CocenterElement {
        self.reduce(a.0.iter().map(|x| x * k).collect())
    }

    pub fn element_order(&self, a: &CocenterElement) -> u64 {
        let mut k = 1;
        let mut acc = a.clone();
        while !acc.is_zero() {
            acc = self.add(&acc, a);
            k += 1;
        }
        k
    }

    /// Every element, in lexicographic order of coordinates.
    pub fn elements(&self) -> Vec<CocenterElement> {
        let mut out = vec![Vec::new()];
        for &d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(CocenterElement).collect()
    }

    /// Sorted list of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[CocenterElement]) -> Vec<CocenterElement> {
        let mut set: BTreeSet<CocenterElement> = BTreeSet::from([self.zero()]);
        let mut frontier = vec![self.zero()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// The subgroup `T / Lambda_r` for a lattice choice.
    pub fn lattice_subgroup(&self, choice: LatticeChoice) -> Result<Vec<CocenterElement>> {
        let idx = choice.fundamental_generators(&self.system)?;
        let gens: Vec<CocenterElement> =
            idx.iter().map(|&i| self.generators[i - 1].clone()).collect();
        if matches!(choice, LatticeChoice::HalfSpinPlus | LatticeChoice::HalfSpinMinus)
            && gens.iter().any(|g| self.element_order(g) != 2)
        {
            return Err(Error::InvalidLatticeChoice {
                choice: choice.name().to_string(),
                system: self.system.to_string(),
            });
        }
        Ok(self.subgroup_generated(&gens))
    }

    /// `dim_{F_p} (C / H) (x) F_p` for the subgroup `H` generated by `gens`:
    /// the number of invariant factors of the relation matrix
    /// `[diag(d) | gens]` that are divisible by `p`.
    pub fn quotient_p_rank(&self, gens: &[CocenterElement], p: u64) -> usize {
        let k = self.factors.len();
        if k == 0 {
            return 0;
        }
        let cols = k + gens.len();
        let mut rel = IntMatrix::zeros(k, cols);
        for (i, &d) in self.factors.iter().enumerate() {
            rel[(i, i)] = d;
        }
        for (j, g) in gens.iter().enumerate() {
            for i in 0..k {
                rel[(i, k + j)] = g.0[i];
            }
        }
        let smith = smith_normal_form(&rel);
        smith.diag.iter().filter(|&&d| d % p as i64 == 0).count()
    }

    pub fn lattice_quotient_p_rank(&self, choice: LatticeChoice, p: u64) -> Result<usize> {
        let gens = self.lattice_subgroup(choice)?;
        Ok(self.quotient_p_rank(&gens, p))
    }
}
