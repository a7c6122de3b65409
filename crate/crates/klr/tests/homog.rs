use klr::homog::{
    all_components, build_s, component, enc, enc1, enc2, hook_dimension, ComponentCache, DEFAULT_COMPONENT_GUARD,
};
use klr::klr::verify_relations;
use klr::words::Word;
use klr::{CartanDatum, CartanType, KlrError, RootVector};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;

const E8_WORD: [u8; 22] = [1, 3, 4, 5, 6, 7, 8, 2, 4, 5, 6, 7, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2];

fn binom(n: u64, k: i64) -> i64 {
    if k < 0 || k as u64 > n {
        return 0;
    }
    let mut r: u64 = 1;
    for i in 0..k as u64 {
        r = r * (n - i) / (i + 1);
    }
    r as i64
}

#[test]
fn d5_highest_root() {
    let d = CartanDatum::new(CartanType::D, 5).unwrap();
    let c = component(&d, &Word(vec![1, 3, 4, 5, 2, 3, 4]), DEFAULT_COMPONENT_GUARD).unwrap();
    let mut got: Vec<Vec<u8>> = c.members.iter().map(|w| w.0.clone()).collect();
    got.sort();
    let mut expect = vec![
        vec![1, 3, 4, 5, 2, 3, 4],
        vec![1, 3, 4, 2, 5, 3, 4],
        vec![1, 3, 2, 4, 5, 3, 4],
        vec![1, 3, 4, 2, 3, 5, 4],
        vec![1, 3, 2, 4, 3, 5, 4],
    ];
    expect.sort();
    assert_eq!(got, expect);
    assert!(c.homogeneous && c.strongly_homogeneous);
    assert_eq!(hook_dimension(&c).unwrap(), BigInt::from(5));
    let s = build_s(&d, &c).unwrap();
    assert_eq!(s.dim(), 5);
    assert!(verify_relations(&s).passed());
}

#[test]
fn type_d_dimension_formula() {
    for rank in 4..=6u8 {
        let d = CartanDatum::new(CartanType::D, rank as usize).unwrap();
        for m in 2..=rank {
            for n in m + 1..=rank {
                let mut w: Vec<u8> = vec![1];
                w.extend(3..=n);
                w.extend(2..=m);
                let c = component(&d, &Word(w), DEFAULT_COMPONENT_GUARD).unwrap();
                let (m, n) = (m as i64, n as i64);
                let f = binom((m + n - 3) as u64, m - 1) - binom((m + n - 3) as u64, m - 2);
                assert_eq!(c.size() as i64, f, "gamma({m},{n}) in D{rank}");
            }
        }
    }
}

#[test]
fn e8_strongly_homogeneous() {
    let d = CartanDatum::new(CartanType::E, 8).unwrap();
    let c = component(&d, &Word(E8_WORD.to_vec()), DEFAULT_COMPONENT_GUARD).unwrap();
    assert_eq!(c.weight, RootVector(vec![1, 3, 3, 5, 4, 3, 2, 1]));
    assert!(c.strongly_homogeneous);
    assert_eq!(c.size(), 33592);
    assert_eq!(hook_dimension(&c).unwrap(), BigInt::from(33592));
    let mut heights: Vec<u32> = c.phi.iter().map(|b| b.height()).collect();
    heights.sort();
    assert_eq!(heights, vec![1, 2, 3, 3, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 7, 8, 8, 9, 9, 10, 11, 22]);
}

#[test]
fn small_components() {
    let d = CartanDatum::new(CartanType::A, 2).unwrap();
    let c = component(&d, &Word(vec![1, 2]), DEFAULT_COMPONENT_GUARD).unwrap();
    assert_eq!(c.size(), 1);
    let s = build_s(&d, &c).unwrap();
    assert_eq!(s.dim(), 1);
    assert!(s.psi[0].as_ref().unwrap().is_zero());

    let d = CartanDatum::new(CartanType::A, 4).unwrap();
    let c = component(&d, &Word(vec![1, 2, 3, 4]), DEFAULT_COMPONENT_GUARD).unwrap();
    assert_eq!(hook_dimension(&c).unwrap(), BigInt::from(1));
}

#[test]
fn non_simply_laced_rejected() {
    let d = CartanDatum::new(CartanType::B, 2).unwrap();
    assert!(matches!(component(&d, &Word(vec![1, 2]), 10), Err(KlrError::NotSimplyLaced)));
}

#[test]
fn non_homogeneous_rejected() {
    let d = CartanDatum::new(CartanType::A, 2).unwrap();
    let c = component(&d, &Word(vec![1, 1, 2]), DEFAULT_COMPONENT_GUARD).unwrap();
    assert!(!c.homogeneous);
    assert!(matches!(build_s(&d, &c), Err(KlrError::NotHomogeneous)));
    assert!(hook_dimension(&c).is_err());
}

/// Every homogeneous component in small simply-laced types gives a module
/// of dimension `|C|`; flags agree on all members; `w_C` does not depend on the member.
#[test]
fn homogeneous_components_small_types() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for (ty, rank, h) in [(CartanType::A, 3, 6), (CartanType::A, 4, 5), (CartanType::D, 4, 6), (CartanType::D, 5, 5)] {
        let d = CartanDatum::new(ty, rank).unwrap();
        for alpha in klr::goodlyndon::weights_up_to(rank, h) {
            for c in all_components(&d, &alpha, 1_000_000).unwrap() {
                for w in &c.members {
                    assert_eq!(enc(&d, &w.0), c.homogeneous);
                    assert_eq!(enc1(&d, &w.0) && enc2(&d, &w.0), c.strongly_homogeneous);
                }
                if c.strongly_homogeneous {
                    assert!(c.homogeneous);
                    assert_eq!(hook_dimension(&c).unwrap(), BigInt::from(c.size()));
                }
                if c.homogeneous {
                    let s = build_s(&d, &c).unwrap();
                    assert_eq!(s.dim(), c.size());
                    let rep = verify_relations(&s);
                    assert!(rep.passed(), "{}: {rep}", c.representative);
                    for w in c.members.choose_multiple(&mut rng, 3) {
                        assert_eq!(klr::homog::weyl_matrix(&d, w), c.w_c);
                    }
                }
            }
        }
    }
}

#[test]
fn cache_persists_components() {
    let dir = std::env::temp_dir().join(format!("klr-cache-test-{}", std::process::id()));
    let d = CartanDatum::new(CartanType::D, 5).unwrap();
    let w = Word(vec![1, 3, 4, 5, 2, 3, 4]);
    let first = ComponentCache::new(Some(dir.clone())).get(&d, &w, 100).unwrap();
    let again = ComponentCache::new(Some(dir.clone())).get(&d, &Word(vec![1, 3, 2, 4, 3, 5, 4]), 100).unwrap();
    assert_eq!(first, again);
    let _ = std::fs::remove_dir_all(dir);
}
