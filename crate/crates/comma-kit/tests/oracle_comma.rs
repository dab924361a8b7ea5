//! Counting oracles for the comma construction. Object and morphism totals
//! are recomputed from nothing but the hom tables of the inputs, then
//! compared against the materialized category; a few small cases are frozen
//! by hand on top of that.

mod common;

use std::collections::BTreeMap;

use comma_kit::catalog::{chain, one, random_poset_category, square, two, walking_iso};
use comma_kit::category::{compose_functors, validate_functor};
use comma_kit::comma::{arrow_category, comma, unit_nu};
use comma_kit::{Functor, DEFAULT_MORPHISM_BUDGET};

use common::{comma_morphism_oracle, comma_object_oracle, random_monotone_functor};

fn point_into_two(pick: &str) -> Functor {
    Functor::new(
        format!("pick{pick}"),
        one(),
        two(),
        BTreeMap::from([("*".to_string(), pick.to_string())]),
        BTreeMap::new(),
    )
    .unwrap()
}

#[test]
fn comma_counts_match_the_hom_table_oracles_on_random_monotone_maps() {
    for seed in 0..12u64 {
        let a = random_poset_category(seed.wrapping_mul(7).wrapping_add(1), 3 + (seed % 4) as usize);
        let x = random_poset_category(seed.wrapping_mul(7).wrapping_add(2), 3 + ((seed + 2) % 4) as usize);
        let g = random_monotone_functor(seed, &a, &x);
        let bundle = comma(&g, DEFAULT_MORPHISM_BUDGET).unwrap();
        assert_eq!(
            bundle.total.object_count(),
            comma_object_oracle(&g),
            "object count off for seed {seed}"
        );
        assert_eq!(
            bundle.total.morphism_count(),
            comma_morphism_oracle(&g),
            "morphism count off for seed {seed}"
        );
    }
}

#[test]
fn comma_of_the_point_picking_the_top_of_two_has_two_objects_three_arrows() {
    let g = point_into_two("1");
    let bundle = comma(&g, DEFAULT_MORPHISM_BUDGET).unwrap();
    assert_eq!(bundle.total.object_count(), 2);
    assert_eq!(bundle.total.morphism_count(), 3);
    // Picking the bottom instead leaves only the identity over 0.
    let g0 = point_into_two("0");
    let bundle0 = comma(&g0, DEFAULT_MORPHISM_BUDGET).unwrap();
    assert_eq!(bundle0.total.object_count(), 1);
    assert_eq!(bundle0.total.morphism_count(), 1);
}

#[test]
fn arrow_category_sizes_are_frozen_for_the_small_fixtures() {
    // Objects are the morphisms of the base; arrows are commuting squares.
    let cases: [(&str, usize, usize); 3] = [
        ("two", 3, 6),
        ("chain2", 6, 20),
        ("walking_iso", 4, 16),
    ];
    for (name, objs, mors) in cases {
        let cat = match name {
            "two" => two(),
            "chain2" => chain(2),
            _ => walking_iso(),
        };
        let ar = arrow_category(&cat, DEFAULT_MORPHISM_BUDGET).unwrap();
        assert_eq!(ar.total.object_count(), objs, "{name}: objects");
        assert_eq!(ar.total.morphism_count(), mors, "{name}: morphisms");
        assert_eq!(ar.total.object_count(), cat.morphism_count(), "{name}: base arrows");
    }
}

#[test]
fn arrow_category_counts_match_the_square_oracle_on_nonthin_bases() {
    for cat in [square(), walking_iso(), comma_kit::catalog::parallel_pair(), comma_kit::catalog::monoid_z2()] {
        let id = Functor::identity(&cat);
        let ar = arrow_category(&cat, DEFAULT_MORPHISM_BUDGET).unwrap();
        assert_eq!(ar.total.object_count(), comma_object_oracle(&id), "{}: objects", cat.name);
        assert_eq!(ar.total.morphism_count(), comma_morphism_oracle(&id), "{}: morphisms", cat.name);
    }
}

#[test]
fn comma_projections_are_functors_and_the_unit_is_a_section_of_both() {
    for cat in [two(), chain(2), square()] {
        let ar = arrow_category(&cat, DEFAULT_MORPHISM_BUDGET).unwrap();
        assert!(validate_functor(&ar.d0).passed());
        assert!(validate_functor(&ar.d1).passed());
        let nu = unit_nu(&cat, &ar).unwrap();
        assert!(validate_functor(&nu).passed(), "{}: unit functor", cat.name);
        let idc = Functor::identity(&cat);
        assert!(
            compose_functors(&ar.d0, &nu).unwrap().extensionally_equal(&idc),
            "{}: d0 ∘ nu",
            cat.name
        );
        assert!(
            compose_functors(&ar.d1, &nu).unwrap().extensionally_equal(&idc),
            "{}: d1 ∘ nu",
            cat.name
        );
    }
}

#[test]
fn comma_object_and_morphism_ids_decode_back_to_their_parts() {
    let g = point_into_two("1");
    let bundle = comma(&g, DEFAULT_MORPHISM_BUDGET).unwrap();
    for obj in bundle.total.objects() {
        let (x, f, a) = bundle.object_parts(obj).unwrap();
        assert_eq!(bundle.object_id(x, f, a).unwrap(), obj);
    }
    for m in bundle.total.morphism_ids() {
        let (u, v) = bundle.morphism_parts(m).unwrap();
        assert!(g.target.has_morphism(u));
        assert!(g.source.has_morphism(v));
    }
}
