//! Lifting contracts for split coalgebras: the Kleisli lifts and their
//! squares over the forgetful functors, the Eilenberg–Moore lift against the
//! distributive-law route, and the two pentagon identities of the generated
//! law itself.

mod common;

use comma_kit::catalog::{int_coalg, random_poset_coalgebra, square};
use comma_kit::coalgebra::identity_coalgebra;
use comma_kit::liftings::{
    check_dist_law, check_em_lifts, check_kleisli_lifts, dist_law_kappa, is_split,
    split_factorizations,
};
use comma_kit::DEFAULT_MORPHISM_BUDGET;

#[test]
fn the_interior_coalgebra_is_split_with_both_factorizations() {
    let co = int_coalg();
    let split = is_split(&co);
    assert!(split.passed(), "{}", split.render());
    assert!(split.find("splitrho").is_some());
    assert!(split.find("splitzeta").is_some());
    let fact = split_factorizations(&co);
    assert!(fact.passed(), "{}", fact.render());
    assert!(fact.find("splitrhofact").is_some());
    assert!(fact.find("splitchifact").is_some());
}

#[test]
fn kleisli_lifts_commute_with_the_projections_on_split_fixtures() {
    for co in [
        identity_coalgebra(&square()).unwrap(),
        int_coalg(),
        random_poset_coalgebra(21, 5).unwrap(),
    ] {
        assert!(is_split(&co).passed(), "{}: fixture must be split", co.name);
        let rep = check_kleisli_lifts(&co, DEFAULT_MORPHISM_BUDGET).unwrap();
        assert!(rep.passed(), "{}:\n{}", co.name, rep.render());
        for label in ["k-lift", "k-u-square", "k-f-square", "h-lift", "h-u-square", "h-f-square"] {
            assert!(rep.find(label).is_some(), "{}: missing {label}", co.name);
        }
    }
}

#[test]
fn em_lifts_agree_with_the_distributive_law_route() {
    for co in [
        identity_coalgebra(&square()).unwrap(),
        int_coalg(),
        random_poset_coalgebra(22, 5).unwrap(),
    ] {
        let rep = check_em_lifts(&co, DEFAULT_MORPHISM_BUDGET).unwrap();
        assert!(rep.passed(), "{}:\n{}", co.name, rep.render());
        for label in ["em-lift", "em-u-square", "em-distlaw-agreement"] {
            assert!(rep.find(label).is_some(), "{}: missing {label}", co.name);
        }
    }
}

#[test]
fn the_generated_distributive_law_passes_both_pentagons() {
    for co in [
        identity_coalgebra(&square()).unwrap(),
        int_coalg(),
        random_poset_coalgebra(23, 5).unwrap(),
    ] {
        let law = dist_law_kappa(&co).unwrap();
        let rep = check_dist_law(&co, &law);
        assert!(rep.passed(), "{}:\n{}", co.name, rep.render());
        for label in ["kappacomp", "kappa-naturality", "gendist1", "gendist2"] {
            assert!(rep.find(label).is_some(), "{}: missing {label}", co.name);
        }
    }
}

#[test]
fn mutated_coalgebras_break_at_least_one_lifting_check() {
    // Retype one θ component of the interior coalgebra: the lifting batteries
    // run against the stored components, so at least one square must notice.
    let mutated = common::retype_one_theta(&int_coalg(), 2).unwrap();
    let kl = check_kleisli_lifts(&mutated, DEFAULT_MORPHISM_BUDGET);
    let em = check_em_lifts(&mutated, DEFAULT_MORPHISM_BUDGET);
    let broken = match (&kl, &em) {
        (Ok(a), Ok(b)) => !a.passed() || !b.passed(),
        // A retyped component may make the lift itself unbuildable.
        _ => true,
    };
    assert!(broken, "retyped interior passed both lift batteries");
}
