//! The monad on pairs of categories that glues the second component onto the
//! first by coproduct: frozen coproduct sizes, the full law battery on
//! fixture pairs, and naturality along a non-identity map of pairs.

mod common;

use std::collections::BTreeMap;

use comma_kit::catalog::{chain, discrete, monoid_z2, one, parallel_pair, square, two, walking_iso};
use comma_kit::category::{coproduct, validate_category, validate_functor};
use comma_kit::normal::check_pair_monad_laws;
use comma_kit::{FinCategory, Functor, DEFAULT_MORPHISM_BUDGET};

#[test]
fn coproducts_sum_sizes_and_keep_the_summands_disjoint() {
    let (sum, inl, inr) = coproduct(&two(), &chain(2)).unwrap();
    assert_eq!(sum.object_count(), 2 + 3);
    assert_eq!(sum.morphism_count(), 3 + 6);
    assert!(validate_category(&sum).passed());
    assert!(validate_functor(&inl).passed());
    assert!(validate_functor(&inr).passed());
    for x in two().objects() {
        for y in chain(2).objects() {
            let lx = inl.ob(x).unwrap().to_string();
            let ry = inr.ob(y).unwrap().to_string();
            assert!(sum.hom(&lx, &ry).unwrap().is_empty(), "cross arrow {lx} -> {ry}");
            assert!(sum.hom(&ry, &lx).unwrap().is_empty(), "cross arrow {ry} -> {lx}");
        }
    }
}

#[test]
fn pair_monad_laws_hold_on_identity_pairs_of_fixtures() {
    let cats: Vec<FinCategory> = vec![
        one(),
        two(),
        chain(2),
        square(),
        walking_iso(),
        parallel_pair(),
        monoid_z2(),
        discrete(2),
    ];
    for x in &cats {
        for a in &cats {
            let rep = check_pair_monad_laws(
                &Functor::identity(x),
                &Functor::identity(a),
                DEFAULT_MORPHISM_BUDGET,
            )
            .unwrap();
            assert!(rep.passed(), "({}, {}):\n{}", x.name, a.name, rep.render());
        }
    }
}

#[test]
fn the_flip_is_an_involution_and_exchanges_with_the_unit() {
    let rep = check_pair_monad_laws(
        &Functor::identity(&two()),
        &Functor::identity(&chain(2)),
        DEFAULT_MORPHISM_BUDGET,
    )
    .unwrap();
    for label in ["flip-involution", "flip-exchange"] {
        let item = rep.find(label).unwrap_or_else(|| panic!("missing {label}"));
        assert!(item.passed, "{label}: {:?}", item.witnesses);
    }
}

#[test]
fn pair_monad_naturality_holds_along_a_nonidentity_map_of_pairs() {
    // (f, g) : (two, chain2) -> (chain2, two) with f the endpoint embedding
    // and g the monotone collapse of the middle.
    let f = Functor::new(
        "endpoints",
        two(),
        chain(2),
        BTreeMap::from([("0".to_string(), "0".to_string()), ("1".to_string(), "2".to_string())]),
        BTreeMap::from([("u".to_string(), "le_0_2".to_string())]),
    )
    .unwrap();
    let g = Functor::new(
        "collapse",
        chain(2),
        two(),
        BTreeMap::from([
            ("0".to_string(), "0".to_string()),
            ("1".to_string(), "0".to_string()),
            ("2".to_string(), "1".to_string()),
        ]),
        BTreeMap::from([
            ("le_0_1".to_string(), "id_0".to_string()),
            ("le_1_2".to_string(), "u".to_string()),
            ("le_0_2".to_string(), "u".to_string()),
        ]),
    )
    .unwrap();
    assert!(validate_functor(&f).passed());
    assert!(validate_functor(&g).passed());
    let rep = check_pair_monad_laws(&f, &g, DEFAULT_MORPHISM_BUDGET).unwrap();
    assert!(rep.passed(), "{}", rep.render());
    for label in ["mult-naturality", "unit-naturality"] {
        assert!(rep.find(label).is_some(), "missing {label}");
    }
}
