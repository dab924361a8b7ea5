//! The coalgebra validator's report contract: every equation label shows up
//! exactly once per run, the classifier sorts the fixtures correctly, and a
//! single retyped component never slips through.

mod common;

use comma_kit::catalog::{chain, int_coalg, random_poset_coalgebra};
use comma_kit::coalgebra::{
    classify, derive_coalgebras, derive_comonads, identity_coalgebra, check_interpretations,
    validate_coalgebra, validate_comonad_coalgebra, verify_derived_cubes, ColaxDCoalgebra,
    LEDGER_LABELS,
};
use comma_kit::comonad::validate_comonad;
use comma_kit::CheckReport;

use common::{coalgebra_corpus, retype_one_theta};

fn assert_ledger_once(rep: &CheckReport) {
    for label in LEDGER_LABELS {
        let hits = rep.items.iter().filter(|i| i.label == label).count();
        assert_eq!(hits, 1, "{}: label {label} appears {hits} times", rep.subject);
    }
    // One structural item, one naturality item per transformation, and the
    // equation ledger: nothing else belongs in the report.
    assert_eq!(rep.items.len(), 1 + 14 + LEDGER_LABELS.len(), "{}", rep.subject);
}

#[test]
fn every_equation_label_appears_exactly_once_per_report() {
    for co in [
        identity_coalgebra(&chain(2)).unwrap(),
        int_coalg(),
        random_poset_coalgebra(11, 5).unwrap(),
    ] {
        let rep = validate_coalgebra(&co);
        assert!(rep.passed(), "{}:\n{}", co.name, rep.render());
        assert_ledger_once(&rep);
    }
}

#[test]
fn the_ledger_layout_survives_a_failing_run() {
    let mutated = retype_one_theta(&int_coalg(), 5).unwrap();
    let rep = validate_coalgebra(&mutated);
    assert!(!rep.passed());
    assert_ledger_once(&rep);
    // Failures carry a witness naming the offending site.
    for item in rep.failures() {
        assert!(!item.witnesses.is_empty(), "{}: bare failure", item.label);
    }
}

#[test]
fn identity_coalgebras_classify_as_strict_and_thin_interiors_do_not() {
    let idc = identity_coalgebra(&chain(2)).unwrap();
    let kinds = classify(&idc).unwrap();
    for k in ["colax", "normal", "pseudo", "strict"] {
        assert!(kinds.contains(&k), "identity lacks {k}: {kinds:?}");
    }
    let kinds = classify(&int_coalg()).unwrap();
    assert!(kinds.contains(&"colax"));
    assert!(!kinds.contains(&"normal"), "interior counits are not identities");
}

#[test]
fn every_theta_retyping_in_the_small_corpus_is_reported() {
    for (i, co) in coalgebra_corpus(10).iter().enumerate() {
        let Some(mutated) = retype_one_theta(co, i as u64) else {
            panic!("{}: no retypable component", co.name);
        };
        let rep = validate_coalgebra(&mutated);
        assert!(!rep.passed(), "{}: retyping went unreported", co.name);
    }
}

#[test]
fn derived_comonads_and_coalgebra_families_validate_on_the_fixtures() {
    for co in [identity_coalgebra(&chain(2)).unwrap(), int_coalg()] {
        let (c, q) = derive_comonads(&co);
        let rc = validate_comonad(&c);
        assert!(rc.passed(), "{}: C side\n{}", co.name, rc.render());
        let rq = validate_comonad(&q);
        assert!(rq.passed(), "{}: Q side\n{}", co.name, rq.render());
        let families = derive_coalgebras(&co).unwrap();
        let expected = 2 * co.x_cat().object_count() + 2 * co.a_cat().object_count();
        assert_eq!(families.len(), expected, "{}: two coalgebras per object per side", co.name);
        for fam in &families {
            let rep = validate_comonad_coalgebra(fam);
            assert!(rep.passed(), "{}/{}:\n{}", co.name, fam.carrier, rep.render());
        }
        let interp = check_interpretations(&co);
        assert!(interp.passed(), "{}:\n{}", co.name, interp.render());
    }
}

#[test]
fn the_sixteen_derived_cube_faces_commute_on_the_fixtures() {
    for co in [identity_coalgebra(&chain(2)).unwrap(), int_coalg()] {
        let rep = verify_derived_cubes(&co);
        assert!(rep.passed(), "{}:\n{}", co.name, rep.render());
        assert_eq!(rep.items.len(), 16, "{}: eight faces per side", co.name);
    }
}

#[test]
fn validation_reports_are_deterministic_across_reruns() {
    let co: ColaxDCoalgebra = random_poset_coalgebra(3, 5).unwrap();
    let a = validate_coalgebra(&co).render();
    let b = validate_coalgebra(&co).render();
    assert_eq!(a, b);
}
