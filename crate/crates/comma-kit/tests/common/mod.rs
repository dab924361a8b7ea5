//! Helpers shared across the integration tests: seeded samplers for monotone
//! maps between random posets, counting oracles that work straight off the
//! hom tables (so they cannot inherit a bug from the constructions they
//! check), and a mutation harness for coalgebra components.
#![allow(dead_code)]

use std::collections::BTreeMap;

use comma_kit::catalog::{chain, gal_adjunction, int_coalg, random_poset_coalgebra};
use comma_kit::coalgebra::{CoalgebraComponents, ColaxDCoalgebra};
use comma_kit::normal::{from_adjunction, to_general};
use comma_kit::{FinCategory, Functor, NatTrans};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Sample a monotone map between two thin categories, presented as a functor.
/// Rejection sampling over object assignments, with the constant map at the
/// first object as a last-resort fallback, so a functor always comes back.
pub fn random_monotone_functor(seed: u64, a: &FinCategory, b: &FinCategory) -> Functor {
    let aobjs: Vec<String> = a.objects().map(|s| s.to_string()).collect();
    let bobjs: Vec<String> = b.objects().map(|s| s.to_string()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for attempt in 0..200usize {
        let assign: BTreeMap<String, String> = if attempt == 199 {
            aobjs.iter().map(|o| (o.clone(), bobjs[0].clone())).collect()
        } else {
            aobjs
                .iter()
                .map(|o| (o.clone(), bobjs[rng.gen_range(0..bobjs.len())].clone()))
                .collect()
        };
        let mut mor = BTreeMap::new();
        for (s, t, m) in a.morphism_triples() {
            match b.hom(&assign[s], &assign[t]).unwrap().first() {
                Some(img) => {
                    mor.insert(m.to_string(), img.to_string());
                }
                None => continue 'attempt,
            }
        }
        return Functor::new(format!("map{seed}"), a.clone(), b.clone(), assign, mor).unwrap();
    }
    unreachable!("the constant assignment is always monotone");
}

/// Objects of the comma category at G, counted without building it:
/// one object per triple (x, f : x -> G(a), a), so the total is the sum of
/// the hom-set sizes |Hom(x, G(a))| over all pairs.
pub fn comma_object_oracle(g: &Functor) -> usize {
    let xcat = &g.target;
    let acat = &g.source;
    let mut n = 0;
    for x in xcat.objects() {
        for a in acat.objects() {
            n += xcat.hom(x, g.ob(a).unwrap()).unwrap().len();
        }
    }
    n
}

/// Morphisms of the comma category at G, counted as commuting squares over
/// the raw hom tables: for objects (x, f, a) and (x', f', a'), one morphism
/// per pair (u : x -> x', v : a -> a') with G(v) ∘ f = f' ∘ u.
pub fn comma_morphism_oracle(g: &Functor) -> usize {
    let xcat = &g.target;
    let acat = &g.source;
    let mut objs: Vec<(String, String, String)> = Vec::new();
    for x in xcat.objects() {
        for a in acat.objects() {
            for f in xcat.hom(x, g.ob(a).unwrap()).unwrap() {
                objs.push((x.to_string(), f.to_string(), a.to_string()));
            }
        }
    }
    let mut count = 0;
    for (x, f, a) in &objs {
        for (x2, f2, a2) in &objs {
            for u in xcat.hom(x, x2).unwrap() {
                for v in acat.hom(a, a2).unwrap() {
                    let left = xcat.compose(g.mor(v).unwrap(), f).unwrap();
                    let right = xcat.compose(f2, u).unwrap();
                    if left == right {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Whether a monotone map G : A -> X between posets has a left adjoint,
/// decided by the least-element criterion: every x must have a least a with
/// x ≤ G(a). Reads only hom emptiness, nothing from the adjunction search.
pub fn poset_left_adjoint_exists(g: &Functor) -> bool {
    let xcat = &g.target;
    let acat = &g.source;
    for x in xcat.objects() {
        let cands: Vec<&str> = acat
            .objects()
            .filter(|a| !xcat.hom(x, g.ob(a).unwrap()).unwrap().is_empty())
            .collect();
        let has_least = cands
            .iter()
            .any(|a0| cands.iter().all(|a| !acat.hom(a0, a).unwrap().is_empty()));
        if !has_least {
            return false;
        }
    }
    true
}

/// Read the component tables back out of an assembled coalgebra.
pub fn components_of(co: &ColaxDCoalgebra) -> CoalgebraComponents {
    let grab = |nt: &NatTrans| -> BTreeMap<String, String> {
        nt.component_entries()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    };
    CoalgebraComponents {
        eta: grab(&co.eta),
        chi: grab(&co.chi),
        omega: grab(&co.omega),
        eps: grab(&co.eps),
        zeta0: grab(&co.zeta0),
        zeta1: grab(&co.zeta1),
        theta100: grab(&co.theta100),
        theta110: grab(&co.theta110),
        theta101: grab(&co.theta101),
        theta111: grab(&co.theta111),
        theta000: grab(&co.theta000),
        theta010: grab(&co.theta010),
        theta001: grab(&co.theta001),
        theta011: grab(&co.theta011),
    }
}

/// Replace one seeded θ component with a different morphism of its host
/// category and reassemble. The family and object are sampled from the seed;
/// when the sampled slot has no alternative morphism the scan walks forward
/// until one does. Returns None only if no θ component anywhere can change.
pub fn retype_one_theta(co: &ColaxDCoalgebra, seed: u64) -> Option<ColaxDCoalgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nats: [(&str, &NatTrans); 8] = [
        ("theta100", &co.theta100),
        ("theta110", &co.theta110),
        ("theta101", &co.theta101),
        ("theta111", &co.theta111),
        ("theta000", &co.theta000),
        ("theta010", &co.theta010),
        ("theta001", &co.theta001),
        ("theta011", &co.theta011),
    ];
    let fam_off = rng.gen_range(0..nats.len());
    for i in 0..nats.len() {
        let (tag, nt) = nats[(fam_off + i) % nats.len()];
        let host = &nt.src_functor.target;
        let keys: Vec<String> = nt.component_entries().map(|(k, _)| k.to_string()).collect();
        if keys.is_empty() {
            continue;
        }
        let key_off = rng.gen_range(0..keys.len());
        for j in 0..keys.len() {
            let key = &keys[(key_off + j) % keys.len()];
            let cur = nt.at(key).unwrap();
            let Some(alt) = host.morphism_ids().find(|m| *m != cur) else {
                continue;
            };
            let mut comps = components_of(co);
            let table = match tag {
                "theta100" => &mut comps.theta100,
                "theta110" => &mut comps.theta110,
                "theta101" => &mut comps.theta101,
                "theta111" => &mut comps.theta111,
                "theta000" => &mut comps.theta000,
                "theta010" => &mut comps.theta010,
                "theta001" => &mut comps.theta001,
                _ => &mut comps.theta011,
            };
            table.insert(key.clone(), alt.to_string());
            let mutated = ColaxDCoalgebra::from_components(
                format!("{}_retyped", co.name),
                co.g.clone(),
                co.c.clone(),
                co.k.clone(),
                co.h.clone(),
                co.q.clone(),
                comps,
            )
            .expect("a retyped component table still assembles");
            return Some(mutated);
        }
    }
    None
}

/// The shared validation corpus: the identity coalgebra, the interior
/// fixture, the Galois reflection embedded as a coalgebra, and `n_random`
/// sampled poset coalgebras of 4 to 6 objects.
pub fn coalgebra_corpus(n_random: u64) -> Vec<ColaxDCoalgebra> {
    let mut out = Vec::new();
    out.push(comma_kit::coalgebra::identity_coalgebra(&chain(2)).unwrap());
    out.push(int_coalg());
    let gal = gal_adjunction();
    let omega = NatTrans::identity_on(&gal.right).unwrap();
    let chi = NatTrans::identity_on(&gal.right).unwrap();
    out.push(to_general(&from_adjunction(&gal, &omega, &chi).unwrap()).unwrap());
    for seed in 0..n_random {
        let n = 4 + (seed % 3) as usize;
        out.push(random_poset_coalgebra(seed, n).unwrap());
    }
    out
}
