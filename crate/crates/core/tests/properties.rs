use jinv_core::chow::{admissible_tuples, is_admissible, kac_signature, poincare_polynomial, GroupLabel};
use jinv_core::charmap::{charmap_image, degree_one_generator_count};
use jinv_core::classify::{classify_triple, InvolutionProfile, IsotropyStatus};
use jinv_core::liealg::{Family, RootSystem, RootVec, WeightVec, WeylElement};
use jinv_core::titsbounds::{common_index, degree_one_bounds, IndexProfile};
use jinv_core::{cocenter, involution_signature, LatticeChoice};
use proptest::prelude::*;

fn system() -> impl Strategy<Value = RootSystem> {
    prop_oneof![
        (1usize..=6).prop_map(|n| RootSystem::new(Family::A, n).unwrap()),
        (2usize..=6).prop_map(|n| RootSystem::new(Family::B, n).unwrap()),
        (3usize..=6).prop_map(|n| RootSystem::new(Family::D, n).unwrap()),
    ]
}

fn word_element(rs: &RootSystem, word: &[usize]) -> WeylElement {
    word.iter().fold(rs.identity(), |w, &i| {
        w.compose(&rs.simple_reflection(i % rs.rank() + 1).unwrap())
    })
}

fn with_data() -> impl Strategy<Value = (RootSystem, Vec<usize>, Vec<i64>, usize)> {
    system().prop_flat_map(|rs| {
        let n = rs.rank();
        (
            Just(rs),
            prop::collection::vec(0usize..n, 0..20),
            prop::collection::vec(-6i64..=6, n),
            1usize..=n,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reflections_are_involutions((rs, _, lam, i) in with_data()) {
        let v = WeightVec(lam);
        let once = rs.reflect(i, &v).unwrap();
        prop_assert_eq!(rs.reflect(i, &once).unwrap(), v);
        let s = rs.simple_reflection(i).unwrap();
        prop_assert!(s.compose(&s).is_identity());
    }

    #[test]
    fn roots_have_a_sign((rs, word, _, k) in with_data()) {
        let w = word_element(&rs, &word);
        let img: RootVec = w.image_of_simple_root(k);
        prop_assert!(rs.is_positive_root(&img) != rs.is_negative_root(&img));
        let longer = w.compose(&rs.simple_reflection(k).unwrap());
        prop_assert_eq!(rs.is_negative_root(&img), longer.length(&rs) < w.length(&rs));
    }

    #[test]
    fn reduced_words_rebuild_the_element((rs, word, _, _) in with_data()) {
        let w = word_element(&rs, &word);
        let red = w.reduced_word(&rs);
        prop_assert_eq!(red.len(), w.length(&rs));
        prop_assert!(red.len() <= word.len());
        let back = red.iter().fold(rs.identity(), |acc, &i| acc.compose(&rs.simple_reflection(i).unwrap()));
        prop_assert_eq!(back, w);
    }

    #[test]
    fn weight_class_is_weyl_invariant((rs, word, lam, _) in with_data()) {
        let cg = cocenter(&rs);
        let w = word_element(&rs, &word);
        let v = WeightVec(lam);
        let moved = rs.act(&w, &v).unwrap();
        prop_assert_eq!(cg.weight_class(&moved).unwrap(), cg.weight_class(&v).unwrap());
        // roots lie in the trivial class
        let r = rs.root_to_weight(&w.image_of_simple_root(1)).unwrap();
        prop_assert!(cg.weight_class(&r).unwrap().is_zero());
    }

    #[test]
    fn charmap_rank_nullity_and_nesting(rs in system()) {
        let n = rs.rank();
        let adj = charmap_image(&rs, LatticeChoice::Adjoint, 2).unwrap();
        let sc = charmap_image(&rs, LatticeChoice::SimplyConnected, 2).unwrap();
        prop_assert!(adj.is_subspace_of(&sc));
        prop_assert_eq!(sc.dim(), n);
        for choice in LatticeChoice::ALL {
            if let Ok(img) = charmap_image(&rs, choice, 2) {
                prop_assert!(adj.is_subspace_of(&img));
                prop_assert!(img.is_subspace_of(&sc));
                prop_assert_eq!(img.dim() + degree_one_generator_count(&rs, choice, 2).unwrap(), n);
            }
        }
    }
}

#[test]
fn weyl_orders_follow_formulas() {
    let fact = |n: u128| (1..=n).product::<u128>();
    for n in 1..=6usize {
        let rs = RootSystem::new(Family::A, n).unwrap();
        assert_eq!(rs.weyl_order(), fact(n as u128 + 1));
        assert_eq!(rs.enumerate_weyl(1_000_000).unwrap().len() as u128, rs.weyl_order());
    }
    for n in 2..=6usize {
        let rs = RootSystem::new(Family::B, n).unwrap();
        assert_eq!(rs.weyl_order(), (1u128 << n) * fact(n as u128));
        assert_eq!(rs.enumerate_weyl(1_000_000).unwrap().len() as u128, rs.weyl_order());
    }
    for n in 3..=6usize {
        let rs = RootSystem::new(Family::D, n).unwrap();
        assert_eq!(rs.weyl_order(), (1u128 << (n - 1)) * fact(n as u128));
        assert_eq!(rs.enumerate_weyl(1_000_000).unwrap().len() as u128, rs.weyl_order());
    }
}

fn signatures() -> Vec<jinv_core::KacSignature> {
    let mut out = Vec::new();
    for n in 4..=16 {
        out.push(kac_signature(GroupLabel::So(n)).unwrap());
    }
    for n in 7..=14 {
        out.push(kac_signature(GroupLabel::Spin(n)).unwrap());
    }
    for n in [4, 6, 8] {
        out.push(kac_signature(GroupLabel::SpinHalf(n)).unwrap());
    }
    for n in 2..=8 {
        out.push(kac_signature(GroupLabel::Pgo(n)).unwrap());
    }
    out
}

#[test]
fn poincare_sum_degree_and_symmetry() {
    for sig in signatures() {
        for j in admissible_tuples(&sig).unwrap() {
            let poly = poincare_polynomial(&sig, &j).unwrap();
            let sum: u64 = poly.iter().sum();
            assert_eq!(sum, 1u64 << j.0.iter().sum::<u32>());
            let deg: u32 = sig.d.iter().zip(&j.0).map(|(d, &ji)| d * ((1 << ji) - 1)).sum();
            assert_eq!(poly.len() as u32, deg + 1);
            let rev: Vec<u64> = poly.iter().rev().copied().collect();
            assert_eq!(poly, rev, "{} {j}", sig.group);
        }
    }
}

#[test]
fn admissible_lists_are_consistent() {
    for sig in signatures() {
        let list = admissible_tuples(&sig).unwrap();
        assert!(list.iter().all(|j| is_admissible(&sig, j)));
        assert!(list[0].is_trivial());
        assert_eq!(list.last().unwrap().0, sig.k, "maximal tuple admissible for {}", sig.group);
        let total: usize = sig.k.iter().map(|&k| k as usize + 1).product();
        assert!(list.len() <= total);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bounds_stay_within_caps(n in 2usize..=8, a in 0u32..5, p in 0u32..5, m in 0u32..5) {
        let Ok(profile) = IndexProfile::new(n, a, p, m) else { return Ok(()) };
        let sig = involution_signature(n as u32).unwrap();
        let b = degree_one_bounds(&profile, &sig).unwrap();
        for (iv, &k) in b.intervals.iter().zip(&b.caps) {
            prop_assert!(iv.lo <= iv.hi && iv.hi <= k);
        }
        let ii_j = common_index(&profile);
        prop_assert!(ii_j <= a.max(p).max(m));
    }

    #[test]
    fn triples_land_in_bounds(ii in prop::array::uniform3(0u32..=3), aniso in any::<bool>()) {
        let mut s = ii;
        s.sort();
        let status = if aniso { IsotropyStatus::Anisotropic } else { IsotropyStatus::IsotropicNonhyperbolic };
        let Ok(t) = classify_triple(&InvolutionProfile::new(8, s[0], s[1], s[2], Some(status))) else {
            return Ok(());
        };
        let sig = involution_signature(4).unwrap();
        // each member sees the other two as its Clifford components
        for (idx, m) in t.members.iter().enumerate() {
            let others: Vec<u32> = (0..3).filter(|&k| k != idx).map(|k| s[k]).collect();
            let profile = IndexProfile::new(4, s[idx], others[0], others[1]).unwrap();
            prop_assert!(is_admissible(&sig, &m.j));
            prop_assert!(degree_one_bounds(&profile, &sig).unwrap().contains(&m.j));
        }
    }
}
