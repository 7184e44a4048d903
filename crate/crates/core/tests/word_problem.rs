use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sbia::models::{evaluation_profile, oracle_distinguish};
use sbia::partitions::enumerate_all;
use sbia::terms::random::{equivalent_variant, random_term};
use sbia::{
    embed_in_product, evaluate, normalize, oracle_equal, Assignment, FreeAlgebra, NormalForm,
    ProductModel, Sbia, Universe,
};

// Image of x_i in the product of primitive algebras indexed by supports:
// the coordinate of α is 1 + (block of i) when i ∈ dom(α), else 0.
fn generator_images(n: u32) -> Assignment<Vec<u32>> {
    let supports = enumerate_all(Universe::new(n));
    Assignment::from_values((1..=n).map(|i| {
        supports
            .iter()
            .map(|a| {
                a.blocks()
                    .iter()
                    .position(|b| b.contains(&i))
                    .map_or(0, |k| k as u32 + 1)
            })
            .collect::<Vec<u32>>()
    }))
}

#[test]
fn normal_forms_agree_with_the_oracle_on_random_pairs() {
    for n in 1..=3u32 {
        let mut rng = ChaCha8Rng::seed_from_u64(11 + n as u64);
        let u = Universe::new(n);
        for _ in 0..300 {
            let a = random_term(&mut rng, n, 4);
            let b = random_term(&mut rng, n, 4);
            let by_nf = normalize(&a, u).unwrap() == normalize(&b, u).unwrap();
            assert_eq!(by_nf, oracle_equal(&a, &b, n).unwrap(), "{a}  vs  {b}");
        }
    }
}

#[test]
fn rewritten_terms_stay_equal() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for n in 2..=3u32 {
        let u = Universe::new(n);
        for _ in 0..200 {
            let a = random_term(&mut rng, n, 4);
            let b = equivalent_variant(&mut rng, &a, n, 4);
            assert_eq!(
                normalize(&a, u).unwrap(),
                normalize(&b, u).unwrap(),
                "{a}  vs  {b}"
            );
            assert_eq!(oracle_distinguish(&a, &b, n).unwrap(), None, "{a}  vs  {b}");
        }
    }
}

#[test]
fn normal_form_matches_evaluation_in_the_product() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 1..=3u32 {
        let product = ProductModel::canonical(Universe::new(n));
        let gens = generator_images(n);
        for _ in 0..200 {
            let t = random_term(&mut rng, n, 5);
            let expected = evaluate(&t, &product, &gens).unwrap();
            assert!(product.contains(&expected));
            assert_eq!(
                embed_in_product(&normalize(&t, Universe::new(n)).unwrap()),
                expected,
                "{t}"
            );
        }
    }
}

#[test]
fn printed_normal_forms_normalize_to_themselves() {
    for n in 1..=2u32 {
        for e in FreeAlgebra::new(Universe::new(n)).elements() {
            assert_eq!(normalize(&e.to_term(), Universe::new(n)).unwrap(), e, "{e}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let alg = FreeAlgebra::new(Universe::new(3));
    for _ in 0..100 {
        let e = alg.random_element(&mut rng);
        assert_eq!(normalize(&e.to_term(), Universe::new(3)).unwrap(), e);
    }
}

#[test]
fn json_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let alg = FreeAlgebra::new(Universe::new(4));
    for _ in 0..50 {
        let e = alg.random_element(&mut rng);
        assert_eq!(NormalForm::from_json(&e.to_json()).unwrap(), e);
    }
}

#[test]
fn enlarging_the_universe_commutes_with_normalization() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let t = random_term(&mut rng, 2, 4);
        let small = normalize(&t, Universe::new(2)).unwrap();
        let big = normalize(&t, Universe::new(4)).unwrap();
        assert_eq!(small.extend_support(Universe::new(4)).unwrap(), big, "{t}");
        assert_eq!(
            small
                .extend_support(Universe::new(3))
                .unwrap()
                .extend_support(Universe::new(4))
                .unwrap(),
            big
        );
    }
}

#[test]
fn profiles_separate_all_elements_for_two_generators() {
    // Distinct normal forms have distinct evaluation profiles in 3_L.
    let alg = FreeAlgebra::new(Universe::new(2));
    let mut profiles = std::collections::BTreeSet::new();
    for e in alg.elements() {
        profiles.insert(evaluation_profile(&e.to_term(), 2).unwrap());
    }
    assert_eq!(profiles.len(), 24);
    assert_eq!(
        alg.zero(),
        normalize(&"x1 \\ x1".parse().unwrap(), Universe::new(2)).unwrap()
    );
}
