//! Property tests: the printer and parser are mutually inverse on generated
//! documents, comma sizes always match the hom-sum, functor counts between
//! chains follow the binomial closed form, and sampled coalgebras always
//! validate.

mod common;

use comma_kit::catalog::{
    chain, fixture, monoid_z2, random_poset_category, random_poset_coalgebra, Fixture,
};
use comma_kit::coalgebra::validate_coalgebra;
use comma_kit::comma::comma;
use comma_kit::doc::{fixture_document, parse, print, Document};
use comma_kit::{Functor, NatTrans, DEFAULT_MORPHISM_BUDGET};
use proptest::prelude::*;

use common::{comma_object_oracle, random_monotone_functor};

/// A seeded document mixing the block kinds: always a couple of categories,
/// usually a functor and a transformation, sometimes a full record block.
fn document_for_seed(seed: u64) -> Document {
    match seed % 5 {
        // A full coalgebra document, record block included.
        0 => {
            let co = random_poset_coalgebra(seed / 5, 4 + (seed % 3) as usize).unwrap();
            fixture_document(&Fixture::Coalgebra(co)).unwrap()
        }
        // A comonad or adjunction record.
        1 => {
            let name = if seed % 2 == 0 { "int2_comonad" } else { "gal_adjunction" };
            fixture_document(&fixture(name).unwrap()).unwrap()
        }
        // Categories plus a functor and its identity transformation. The
        // non-thin monoid keeps explicit compose lines in the mix.
        _ => {
            let a = random_poset_category(seed.wrapping_mul(3).wrapping_add(1), 3 + (seed % 3) as usize);
            let x = random_poset_category(seed.wrapping_mul(3).wrapping_add(2), 3 + ((seed + 1) % 3) as usize);
            let g = random_monotone_functor(seed, &a, &x);
            let mut doc = Document::default();
            doc.add_category(a).unwrap();
            doc.add_category(x).unwrap();
            if seed % 3 == 2 {
                doc.add_category(monoid_z2()).unwrap();
            }
            doc.nats.push(NatTrans::identity_on(&g).unwrap());
            doc.add_functor(g).unwrap();
            doc
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn printed_documents_parse_back_to_the_same_bytes(seed in any::<u64>()) {
        let doc = document_for_seed(seed);
        let text = print(&doc);
        let reparsed = parse(&text).expect("printed documents parse");
        prop_assert_eq!(print(&reparsed), text);
    }
}

proptest! {
    #[test]
    fn comma_object_counts_always_equal_the_hom_sum(seed in any::<u64>()) {
        let a = random_poset_category(seed.wrapping_mul(5).wrapping_add(1), 3 + (seed % 4) as usize);
        let x = random_poset_category(seed.wrapping_mul(5).wrapping_add(2), 3 + ((seed + 1) % 4) as usize);
        let g = random_monotone_functor(seed, &a, &x);
        let bundle = comma(&g, DEFAULT_MORPHISM_BUDGET).unwrap();
        prop_assert_eq!(bundle.total.object_count(), comma_object_oracle(&g));
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k.min(n - k) {
        r = r * (n - i) / (i + 1);
    }
    r
}

proptest! {
    #[test]
    fn functor_counts_between_chains_follow_the_binomial_form(a in 0usize..=3, b in 0usize..=3) {
        // Monotone maps from an (a+1)-chain to a (b+1)-chain are multisets:
        // C(a+b+1, a+1) of them.
        let found = comma_kit::catalog::enumerate_functors(&chain(a), &chain(b), DEFAULT_MORPHISM_BUDGET)
            .unwrap()
            .len();
        prop_assert_eq!(found, binomial(a + b + 1, a + 1));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn sampled_poset_coalgebras_always_validate(seed in any::<u64>(), n in 3usize..=6) {
        let co = random_poset_coalgebra(seed, n).unwrap();
        let rep = validate_coalgebra(&co);
        prop_assert!(rep.passed(), "{}:\n{}", co.name, rep.render());
    }
}

proptest! {
    #[test]
    fn printing_is_stable_under_reconstruction(seed in any::<u64>()) {
        // Parsing materializes fresh tables; printing those again must not
        // reorder anything.
        let doc = document_for_seed(seed);
        let once = print(&doc);
        let twice = print(&parse(&once).unwrap());
        let thrice = print(&parse(&twice).unwrap());
        prop_assert_eq!(twice, thrice);
    }
}

#[test]
fn identity_functors_round_trip_even_with_no_morphism_entries() {
    let cat = chain(3);
    let f = Functor::identity(&cat);
    let mut doc = Document::default();
    doc.add_category(cat).unwrap();
    doc.add_functor(f).unwrap();
    let text = print(&doc);
    let back = parse(&text).unwrap();
    assert_eq!(print(&back), text);
    assert!(back.functor("id(chain3)").is_ok());
}
