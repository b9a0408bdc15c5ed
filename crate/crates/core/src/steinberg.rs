//! Steinberg weights `rho_w = sum over k in D(w) of w^{-1}(omega_k)`, where
//! `D(w)` is the set of simple roots sent to negative roots by `w^{-1}`.
//! The line bundles of these weights form Steinberg's basis of `K_0` of the
//! split flag variety.

use crate::cocenter::{cocenter, CocenterElement, CocenterGroup};
use crate::error::Result;
use crate::liealg::{RootSystem, WeightVec, WeylElement};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SteinbergEntry {
    pub w: WeylElement,
    /// Reduced word of `w`, 1-based generators.
    pub word: Vec<usize>,
    pub descent_set: Vec<usize>,
    pub rho: WeightVec,
    pub cls: CocenterElement,
}

/// Builds the entry for a single Weyl element.
pub fn steinberg_entry(rs: &RootSystem, cg: &CocenterGroup, w: &WeylElement) -> SteinbergEntry {
    let n = rs.rank();
    let inv = w.inverse();
    let descent_set: Vec<usize> = (1..=n)
        .filter(|&k| rs.is_negative_root(&inv.image_of_simple_root(k)))
        .collect();
    let sum_omega = descent_set
        .iter()
        .fold(WeightVec::zero(n), |acc, &k| &acc + &WeightVec::fundamental(n, k));
    let rho = rs.act(&inv, &sum_omega).expect("dimensions agree");
    // W acts trivially on the cocenter, so the class is the sum of the
    // classes of the omega_k.
    let cls = descent_set
        .iter()
        .fold(cg.zero(), |acc, &k| cg.add(&acc, &cg.generators()[k - 1]));
    SteinbergEntry { w: w.clone(), word: w.reduced_word(rs), descent_set, rho, cls }
}

/// One entry per Weyl element, in the deterministic enumeration order.
pub fn steinberg_table(rs: &RootSystem, cap: usize) -> Result<Vec<SteinbergEntry>> {
    let cg = cocenter(rs);
    let elements = rs.enumerate_weyl(cap)?;
    Ok(elements.iter().map(|w| steinberg_entry(rs, &cg, w)).collect())
}

/// The entries for the simple reflections `s_1, ..., s_n`.
pub fn special_elements(rs: &RootSystem) -> Vec<SteinbergEntry> {
    let cg = cocenter(rs);
    (1..=rs.rank())
        .map(|i| steinberg_entry(rs, &cg, &rs.simple_reflection(i).expect("valid index")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::{Family, DEFAULT_WEYL_CAP};
    use std::collections::HashSet;

    #[test]
    fn identity_and_longest_entries_d4() {
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        let table = steinberg_table(&d4, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(table.len(), 192);
        assert!(table[0].descent_set.is_empty());
        assert!(table[0].rho.is_zero());
        let last = table.last().unwrap();
        assert_eq!(last.descent_set, vec![1, 2, 3, 4]);
        assert_eq!(last.rho, WeightVec(vec![-1, -1, -1, -1]));
        let distinct: HashSet<_> = table.iter().map(|e| e.rho.clone()).collect();
        assert_eq!(distinct.len(), 192);
    }

    #[test]
    fn special_elements_match_simple_reflections() {
        let d4 = RootSystem::new(Family::D, 4).unwrap();
        let cg = cocenter(&d4);
        for (i, e) in special_elements(&d4).iter().enumerate() {
            let i = i + 1;
            assert_eq!(e.descent_set, vec![i]);
            let expect = &WeightVec::fundamental(4, i) - &d4.simple_root_as_weight(i).unwrap();
            assert_eq!(e.rho, expect);
            assert_eq!(&e.cls, cg.generator(i).unwrap());
            assert_eq!(e.word, vec![i]);
        }
    }

    #[test]
    fn a1_table() {
        let a1 = RootSystem::new(Family::A, 1).unwrap();
        let specials = special_elements(&a1);
        assert_eq!(specials.len(), 1);
        assert_eq!(specials[0].rho, WeightVec(vec![-1]));
        let table = steinberg_table(&a1, 10).unwrap();
        let rhos: Vec<_> = table.iter().map(|e| e.rho.clone()).collect();
        assert_eq!(rhos, vec![WeightVec(vec![0]), WeightVec(vec![-1])]);
    }
}
