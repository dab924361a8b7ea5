//! Built-in example categories and structures, exhaustive functor
//! enumeration, and seeded random samplers for posets, coalgebras on them,
//! and reflections onto closure fixpoints.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{Functor, NatTrans};
use crate::coalgebra::{CoalgebraComponents, ColaxDCoalgebra};
use crate::comonad::{Adjunction, Comonad};
use crate::normal::{from_adjunction, NormalColaxCoalgebra};
use crate::{Error, FinCategory, Result};

/// The terminal category: one object, one identity.
pub fn one() -> FinCategory {
    let mut c = FinCategory::new("one");
    c.add_object("*").unwrap();
    c
}

/// The walking arrow: two objects and the single morphism between them.
pub fn two() -> FinCategory {
    let mut c = FinCategory::new("two");
    c.add_object("0").unwrap();
    c.add_object("1").unwrap();
    c.add_morphism("u", "0", "1").unwrap();
    c
}

/// Two objects with inverse morphisms between them.
pub fn walking_iso() -> FinCategory {
    let mut c = FinCategory::new("walking_iso");
    c.add_object("a").unwrap();
    c.add_object("b").unwrap();
    c.add_morphism("s", "a", "b").unwrap();
    c.add_morphism("t", "b", "a").unwrap();
    c.set_compose("t", "s", "id_a").unwrap();
    c.set_compose("s", "t", "id_b").unwrap();
    c
}

/// n isolated objects.
pub fn discrete(n: usize) -> FinCategory {
    let mut c = FinCategory::new(format!("discrete{n}"));
    for i in 0..n {
        c.add_object(&i.to_string()).unwrap();
    }
    c
}

/// The linear order 0 < 1 < … < n as a category.
pub fn chain(n: usize) -> FinCategory {
    let mut c = FinCategory::new(format!("chain{n}"));
    for i in 0..=n {
        c.add_object(&i.to_string()).unwrap();
    }
    for i in 0..=n {
        for j in (i + 1)..=n {
            c.add_morphism(&format!("le_{i}_{j}"), &i.to_string(), &j.to_string())
                .unwrap();
        }
    }
    for i in 0..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                c.set_compose(
                    &format!("le_{j}_{k}"),
                    &format!("le_{i}_{j}"),
                    &format!("le_{i}_{k}"),
                )
                .unwrap();
            }
        }
    }
    c
}

/// Two objects with two parallel morphisms between them.
pub fn parallel_pair() -> FinCategory {
    let mut c = FinCategory::new("parallel_pair");
    c.add_object("0").unwrap();
    c.add_object("1").unwrap();
    c.add_morphism("u", "0", "1").unwrap();
    c.add_morphism("v", "0", "1").unwrap();
    c
}

/// The commuting square: the poset 2×2.
pub fn square() -> FinCategory {
    let mut c = FinCategory::new("square");
    for o in ["00", "01", "10", "11"] {
        c.add_object(o).unwrap();
    }
    c.add_morphism("le_00_01", "00", "01").unwrap();
    c.add_morphism("le_00_10", "00", "10").unwrap();
    c.add_morphism("le_01_11", "01", "11").unwrap();
    c.add_morphism("le_10_11", "10", "11").unwrap();
    c.add_morphism("le_00_11", "00", "11").unwrap();
    c.set_compose("le_01_11", "le_00_01", "le_00_11").unwrap();
    c.set_compose("le_10_11", "le_00_10", "le_00_11").unwrap();
    c
}

/// The two-element group as a one-object category.
pub fn monoid_z2() -> FinCategory {
    let mut c = FinCategory::new("monoid_z2");
    c.add_object("*").unwrap();
    c.add_morphism("s", "*", "*").unwrap();
    c.set_compose("s", "s", "id_*").unwrap();
    c
}

/// The unique morphism src -> tgt in a thin category, or the identity.
fn thin_arrow<'a>(cat: &'a FinCategory, src: &str, tgt: &str) -> Result<&'a str> {
    if src == tgt {
        return cat.id_of(src);
    }
    cat.hom(src, tgt)?
        .first()
        .copied()
        .ok_or_else(|| {
            Error::Construction(format!(
                "no morphism {src} -> {tgt} in `{}`",
                cat.name
            ))
        })
}

/// Turn an object map between thin categories into a functor, sending each
/// morphism to the unique morphism between the image objects.
fn thin_functor(
    name: impl Into<String>,
    src: &FinCategory,
    tgt: &FinCategory,
    obj_map: &BTreeMap<String, String>,
) -> Result<Functor> {
    let mut mor_map = BTreeMap::new();
    for m in src.non_identity_morphisms() {
        let s = &obj_map[src.src(m)?];
        let t = &obj_map[src.tgt(m)?];
        mor_map.insert(m.to_string(), thin_arrow(tgt, s, t)?.to_string());
    }
    Functor::new(name, src.clone(), tgt.clone(), obj_map.clone(), mor_map)
}

/// The comonad on chain2 whose endofunctor rounds 1 down to 0 and fixes 0
/// and 2.
pub fn int2_comonad() -> Comonad {
    let cat = chain(2);
    let obj_map: BTreeMap<String, String> = [("0", "0"), ("1", "0"), ("2", "2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let endo = thin_functor("int2", &cat, &cat, &obj_map).unwrap();
    let comult_comps: BTreeMap<String, String> = [("0", "id_0"), ("1", "id_0"), ("2", "id_2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let counit_comps: BTreeMap<String, String> = [("0", "id_0"), ("1", "le_0_1"), ("2", "id_2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    let tt = crate::category::compose_functors(&endo, &endo).unwrap();
    let comult = NatTrans::new("tau[int2]", endo.clone(), tt, comult_comps).unwrap();
    let counit = NatTrans::new(
        "zeta[int2]",
        endo.clone(),
        Functor::identity(&cat),
        counit_comps,
    )
    .unwrap();
    Comonad {
        name: "int2".into(),
        endo,
        comult,
        counit,
    }
}

/// The Galois reflection of chain2 onto chain1: the left adjoint collapses
/// 2 onto 1, the right adjoint embeds 1 as 2.
pub fn gal_adjunction() -> Adjunction {
    let x = chain(2);
    let a = chain(1);
    let k_obj: BTreeMap<String, String> = [("0", "0"), ("1", "1"), ("2", "1")]
        .into_iter()
        .map(|(s, t)| (s.to_string(), t.to_string()))
        .collect();
    let g_obj: BTreeMap<String, String> = [("0", "0"), ("1", "2")]
        .into_iter()
        .map(|(s, t)| (s.to_string(), t.to_string()))
        .collect();
    let left = thin_functor("galK", &x, &a, &k_obj).unwrap();
    let right = thin_functor("galG", &a, &x, &g_obj).unwrap();
    let unit_comps: BTreeMap<String, String> = [("0", "id_0"), ("1", "le_1_2"), ("2", "id_2")]
        .into_iter()
        .map(|(s, t)| (s.to_string(), t.to_string()))
        .collect();
    let counit_comps: BTreeMap<String, String> = [("0", "id_0"), ("1", "id_1")]
        .into_iter()
        .map(|(s, t)| (s.to_string(), t.to_string()))
        .collect();
    let unit = NatTrans::new(
        "unit[gal]",
        Functor::identity(&x),
        crate::category::compose_functors(&right, &left).unwrap(),
        unit_comps,
    )
    .unwrap();
    let counit = NatTrans::new(
        "counit[gal]",
        crate::category::compose_functors(&left, &right).unwrap(),
        Functor::identity(&a),
        counit_comps,
    )
    .unwrap();
    Adjunction {
        name: "gal".into(),
        left,
        right,
        unit,
        counit,
    }
}

/// Build a coalgebra over a thin category with G the identity, the four
/// functors given by object maps, and every component the unique arrow its
/// boundary demands. Fails when some required arrow is missing, which makes
/// it double as the validity test for sampled object maps.
fn thin_coalgebra(
    name: impl Into<String>,
    p: &FinCategory,
    c_map: &BTreeMap<String, String>,
    k_map: &BTreeMap<String, String>,
    h_map: &BTreeMap<String, String>,
    q_map: &BTreeMap<String, String>,
) -> Result<ColaxDCoalgebra> {
    let name = name.into();
    let c = thin_functor(format!("C({name})"), p, p, c_map)?;
    let k = thin_functor(format!("K({name})"), p, p, k_map)?;
    let h = thin_functor(format!("H({name})"), p, p, h_map)?;
    let q = thin_functor(format!("Q({name})"), p, p, q_map)?;
    let g = Functor::identity(p);

    let table = |of: &dyn Fn(&str) -> Result<(String, String)>| -> Result<BTreeMap<String, String>> {
        p.objects()
            .map(|o| {
                let (s, t) = of(o)?;
                Ok((o.to_string(), thin_arrow(p, &s, &t)?.to_string()))
            })
            .collect()
    };
    let at = |m: &BTreeMap<String, String>, o: &str| m[o].clone();

    let comps = CoalgebraComponents {
        eta: table(&|o| Ok((at(c_map, o), at(k_map, o))))?,
        chi: table(&|o| Ok((at(h_map, o), at(q_map, o))))?,
        omega: table(&|o| Ok((at(c_map, o), at(h_map, o))))?,
        eps: table(&|o| Ok((at(k_map, o), at(q_map, o))))?,
        zeta0: table(&|o| Ok((at(q_map, o), o.to_string())))?,
        zeta1: table(&|o| Ok((at(c_map, o), o.to_string())))?,
        theta100: table(&|o| Ok((at(c_map, o), at(c_map, &at(c_map, o)))))?,
        theta110: table(&|o| Ok((at(k_map, o), at(k_map, &at(c_map, o)))))?,
        theta101: table(&|o| Ok((at(c_map, o), at(h_map, &at(k_map, o)))))?,
        theta111: table(&|o| Ok((at(k_map, o), at(q_map, &at(k_map, o)))))?,
        theta000: table(&|o| Ok((at(h_map, o), at(c_map, &at(h_map, o)))))?,
        theta010: table(&|o| Ok((at(q_map, o), at(k_map, &at(h_map, o)))))?,
        theta001: table(&|o| Ok((at(h_map, o), at(h_map, &at(q_map, o)))))?,
        theta011: table(&|o| Ok((at(q_map, o), at(q_map, &at(q_map, o)))))?,
    };
    ColaxDCoalgebra::from_components(name, g, c, k, h, q, comps)
}

/// The coalgebra on chain2 with G the identity and all four functors the
/// rounding endofunctor of `int2_comonad`. Colax but not normal.
pub fn int_coalg() -> ColaxDCoalgebra {
    let cat = chain(2);
    let m: BTreeMap<String, String> = [("0", "0"), ("1", "0"), ("2", "2")]
        .into_iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    thin_coalgebra("int", &cat, &m, &m, &m, &m).unwrap()
}

/// The normal coalgebra carried by the Galois reflection, with H = G and
/// identity factorization.
pub fn gal_normal() -> NormalColaxCoalgebra {
    let adj = gal_adjunction();
    let omega = NatTrans::identity_on(&adj.right).unwrap();
    let chi = NatTrans::identity_on(&adj.right).unwrap();
    from_adjunction(&adj, &omega, &chi).unwrap()
}

/// What a named fixture denotes.
pub enum Fixture {
    Category(FinCategory),
    Comonad(Comonad),
    Adjunction(Adjunction),
    Coalgebra(ColaxDCoalgebra),
    Normal(NormalColaxCoalgebra),
}

/// The names `fixture` accepts, with one representative for the two
/// parametric families (`chain<n>` and `discrete<n>` work for any n).
pub fn fixture_names() -> &'static [&'static str] {
    &[
        "one",
        "two",
        "walking_iso",
        "discrete2",
        "chain2",
        "parallel_pair",
        "square",
        "monoid_z2",
        "int2_comonad",
        "gal_adjunction",
        "int_coalg",
        "gal_normal",
    ]
}

/// Look a fixture up by name.
pub fn fixture(name: &str) -> Result<Fixture> {
    if let Some(n) = name.strip_prefix("chain").and_then(|s| s.parse::<usize>().ok()) {
        if n > 40 {
            return Err(Error::BudgetExceeded(format!("chain{n} is too long")));
        }
        return Ok(Fixture::Category(chain(n)));
    }
    if let Some(n) = name
        .strip_prefix("discrete")
        .and_then(|s| s.parse::<usize>().ok())
    {
        if n > 400 {
            return Err(Error::BudgetExceeded(format!("discrete{n} is too wide")));
        }
        return Ok(Fixture::Category(discrete(n)));
    }
    match name {
        "one" => Ok(Fixture::Category(one())),
        "two" => Ok(Fixture::Category(two())),
        "walking_iso" => Ok(Fixture::Category(walking_iso())),
        "parallel_pair" => Ok(Fixture::Category(parallel_pair())),
        "square" => Ok(Fixture::Category(square())),
        "monoid_z2" => Ok(Fixture::Category(monoid_z2())),
        "int2_comonad" => Ok(Fixture::Comonad(int2_comonad())),
        "gal_adjunction" => Ok(Fixture::Adjunction(gal_adjunction())),
        "int_coalg" => Ok(Fixture::Coalgebra(int_coalg())),
        "gal_normal" => Ok(Fixture::Normal(gal_normal())),
        _ => Err(Error::Construction(format!("no fixture named `{name}`"))),
    }
}

/// Enumerate every functor from `a` to `b` by backtracking over object and
/// morphism images, pruning on composition as soon as a composable pair is
/// fully assigned.
pub fn enumerate_functors(a: &FinCategory, b: &FinCategory, budget: usize) -> Result<Vec<Functor>> {
    let objs: Vec<&str> = a.objects().collect();
    let mors: Vec<&str> = a.non_identity_morphisms().collect();
    let b_objs: Vec<&str> = b.objects().collect();
    if b_objs.is_empty() {
        return Ok(if objs.is_empty() {
            vec![Functor::new(
                format!("F0({}>{})", a.name, b.name),
                a.clone(),
                b.clone(),
                BTreeMap::new(),
                BTreeMap::new(),
            )?]
        } else {
            Vec::new()
        });
    }

    // Every composable triple g∘f = h among non-identity morphisms.
    let mut triples: Vec<(&str, &str, &str)> = Vec::new();
    for &f in &mors {
        for &g in &mors {
            if a.tgt(f)? != a.src(g)? {
                continue;
            }
            triples.push((g, f, a.compose(g, f)?));
        }
    }

    let mut found = Vec::new();
    let mut steps = 0usize;
    let mut obj_map: BTreeMap<String, String> = BTreeMap::new();
    let mut mor_map: BTreeMap<String, String> = BTreeMap::new();

    // The image of any morphism that is already determined: assigned if
    // non-identity, forced if an identity.
    fn image_of(
        a: &FinCategory,
        obj_map: &BTreeMap<String, String>,
        mor_map: &BTreeMap<String, String>,
        m: &str,
    ) -> Result<Option<String>> {
        let s = a.src(m)?;
        if a.id_of(s)? == m {
            return Ok(obj_map.get(s).map(|o| format!("id_{o}")));
        }
        Ok(mor_map.get(m).cloned())
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_mors(
        a: &FinCategory,
        b: &FinCategory,
        mors: &[&str],
        triples: &[(&str, &str, &str)],
        obj_map: &mut BTreeMap<String, String>,
        mor_map: &mut BTreeMap<String, String>,
        ix: usize,
        steps: &mut usize,
        budget: usize,
        found: &mut Vec<Functor>,
    ) -> Result<()> {
        if ix == mors.len() {
            let f = Functor::new(
                format!("F{}({}>{})", found.len(), a.name, b.name),
                a.clone(),
                b.clone(),
                obj_map.clone(),
                mor_map.clone(),
            )?;
            found.push(f);
            return Ok(());
        }
        let m = mors[ix];
        let bs = obj_map[a.src(m)?].clone();
        let bt = obj_map[a.tgt(m)?].clone();
        for cand in b.hom(&bs, &bt)? {
            *steps += 1;
            if *steps > budget {
                return Err(Error::BudgetExceeded(format!(
                    "functor enumeration {} -> {} passed {budget} steps",
                    a.name, b.name
                )));
            }
            mor_map.insert(m.to_string(), cand.to_string());
            let mut ok = true;
            for (g, f, h) in triples {
                if *g != m && *f != m && *h != m {
                    continue;
                }
                let (ig, if_, ih) = (
                    image_of(a, obj_map, mor_map, g)?,
                    image_of(a, obj_map, mor_map, f)?,
                    image_of(a, obj_map, mor_map, h)?,
                );
                if let (Some(ig), Some(if_), Some(ih)) = (ig, if_, ih) {
                    if b.compose(&ig, &if_)? != ih {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                assign_mors(a, b, mors, triples, obj_map, mor_map, ix + 1, steps, budget, found)?;
            }
            mor_map.remove(m);
        }
        Ok(())
    }

    fn assign_objs(
        a: &FinCategory,
        b: &FinCategory,
        objs: &[&str],
        b_objs: &[&str],
        mors: &[&str],
        triples: &[(&str, &str, &str)],
        obj_map: &mut BTreeMap<String, String>,
        mor_map: &mut BTreeMap<String, String>,
        ix: usize,
        steps: &mut usize,
        budget: usize,
        found: &mut Vec<Functor>,
    ) -> Result<()> {
        if ix == objs.len() {
            return assign_mors(a, b, mors, triples, obj_map, mor_map, 0, steps, budget, found);
        }
        for cand in b_objs {
            obj_map.insert(objs[ix].to_string(), cand.to_string());
            assign_objs(
                a, b, objs, b_objs, mors, triples, obj_map, mor_map, ix + 1, steps, budget, found,
            )?;
            obj_map.remove(objs[ix]);
        }
        Ok(())
    }

    assign_objs(
        a,
        b,
        &objs,
        &b_objs,
        &mors,
        &triples,
        &mut obj_map,
        &mut mor_map,
        0,
        &mut steps,
        budget,
        &mut found,
    )?;
    Ok(found)
}

/// A random poset category on n objects: a random relation on indices i < j,
/// transitively closed, with one morphism per related pair.
pub fn random_poset_category(seed: u64, n: usize) -> FinCategory {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        for j in (i + 1)..n {
            le[i][j] = rng.gen_bool(0.4);
        }
    }
    // Transitive closure; indices already order a linear extension.
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][k] && le[k][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let mut c = FinCategory::new(format!("poset{seed}x{n}"));
    for i in 0..n {
        c.add_object(&i.to_string()).unwrap();
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if le[i][j] {
                c.add_morphism(&format!("le_{i}_{j}"), &i.to_string(), &j.to_string())
                    .unwrap();
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if le[i][j] && le[j][k] {
                    c.set_compose(
                        &format!("le_{j}_{k}"),
                        &format!("le_{i}_{j}"),
                        &format!("le_{i}_{k}"),
                    )
                    .unwrap();
                }
            }
        }
    }
    c
}

fn below(p: &FinCategory, x: &str, y: &str) -> bool {
    x == y || p.hom(x, y).map(|h| !h.is_empty()).unwrap_or(false)
}

/// A random interior operator on a thin category: monotone, deflationary,
/// idempotent, built by assigning images in linear-extension order and then
/// iterating to idempotence.
fn random_interior(p: &FinCategory, rng: &mut ChaCha8Rng) -> BTreeMap<String, String> {
    let objs: Vec<&str> = p.objects().collect();
    let mut f: BTreeMap<String, String> = BTreeMap::new();
    for (ix, &x) in objs.iter().enumerate() {
        let mut cands: Vec<&str> = Vec::new();
        'cand: for &c in &objs {
            if !below(p, c, x) {
                continue;
            }
            for &y in &objs[..ix] {
                if below(p, y, x) && !below(p, &f[y], c) {
                    continue 'cand;
                }
            }
            cands.push(c);
        }
        // x itself always qualifies, so cands is never empty.
        let pick = cands[rng.gen_range(0..cands.len())];
        f.insert(x.to_string(), pick.to_string());
    }
    // Iterate to idempotence; deflationary maps stabilize.
    loop {
        let g: BTreeMap<String, String> = f
            .iter()
            .map(|(k, v)| (k.clone(), f[v].clone()))
            .collect();
        if g == f {
            return f;
        }
        f = g;
    }
}

/// Sample a valid coalgebra on a random poset. Most draws propose four
/// independent interior operators with the composite repairs K = Q∘K₀∘C and
/// H = C∘H₀∘Q and are rejected unless every component arrow exists; every
/// fourth attempt collapses all four functors to a single interior operator,
/// which always succeeds, so sampling terminates.
pub fn random_poset_coalgebra(seed: u64, n: usize) -> Result<ColaxDCoalgebra> {
    let p = random_poset_category(seed, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x9e3779b97f4a7c15));
    let compose_maps = |outer: &BTreeMap<String, String>,
                        inner: &BTreeMap<String, String>|
     -> BTreeMap<String, String> {
        inner
            .iter()
            .map(|(k, v)| (k.clone(), outer[v].clone()))
            .collect()
    };
    for attempt in 0..64usize {
        let name = format!("rand{seed}n{n}");
        let candidate = if attempt % 4 == 3 {
            let t = random_interior(&p, &mut rng);
            thin_coalgebra(name, &p, &t, &t, &t, &t)
        } else {
            let c = random_interior(&p, &mut rng);
            let q = random_interior(&p, &mut rng);
            let k0 = random_interior(&p, &mut rng);
            let h0 = random_interior(&p, &mut rng);
            let k = compose_maps(&q, &compose_maps(&k0, &c));
            let h = compose_maps(&c, &compose_maps(&h0, &q));
            thin_coalgebra(name, &p, &c, &k, &h, &q)
        };
        match candidate {
            Ok(co) => {
                if crate::coalgebra::validate_coalgebra(&co).passed() {
                    return Ok(co);
                }
            }
            Err(Error::Construction(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted(
        64,
        format!("no valid coalgebra on poset{seed}x{n}"),
    ))
}

/// A random closure operator: monotone, inflationary, idempotent. Returns
/// None when a draw paints itself into a corner (no common upper bound).
fn random_closure(p: &FinCategory, rng: &mut ChaCha8Rng) -> Option<BTreeMap<String, String>> {
    let objs: Vec<&str> = p.objects().collect();
    let mut f: BTreeMap<String, String> = BTreeMap::new();
    for (ix, &x) in objs.iter().enumerate() {
        let mut cands: Vec<&str> = Vec::new();
        'cand: for &c in &objs {
            if !below(p, x, c) {
                continue;
            }
            for &y in &objs[..ix] {
                if below(p, y, x) && !below(p, &f[y], c) {
                    continue 'cand;
                }
            }
            cands.push(c);
        }
        if cands.is_empty() {
            return None;
        }
        let pick = cands[rng.gen_range(0..cands.len())];
        f.insert(x.to_string(), pick.to_string());
    }
    loop {
        let g: BTreeMap<String, String> = f
            .iter()
            .map(|(k, v)| (k.clone(), f[v].clone()))
            .collect();
        if g == f {
            return Some(f);
        }
        f = g;
    }
}

/// The full subcategory of a thin category on a set of objects.
fn thin_subcategory(p: &FinCategory, keep: &BTreeSet<String>, name: String) -> Result<FinCategory> {
    let mut sub = FinCategory::new(name);
    for o in p.objects() {
        if keep.contains(o) {
            sub.add_object(o)?;
        }
    }
    let kept: Vec<&str> = p
        .non_identity_morphisms()
        .filter(|m| {
            p.src(m).map(|s| keep.contains(s)).unwrap_or(false)
                && p.tgt(m).map(|t| keep.contains(t)).unwrap_or(false)
        })
        .collect();
    for m in &kept {
        sub.add_morphism(m, p.src(m)?, p.tgt(m)?)?;
    }
    for f in &kept {
        for g in &kept {
            if p.tgt(f)? != p.src(g)? {
                continue;
            }
            let h = p.compose(g, f)?;
            let h_in_sub = if sub.has_morphism(h) {
                h.to_string()
            } else {
                // The composite collapsed to an identity of a kept object.
                sub.id_of(p.src(f)?)?.to_string()
            };
            sub.set_compose(g, f, &h_in_sub)?;
        }
    }
    Ok(sub)
}

/// Sample a reflection of a random poset onto the fixpoints of a random
/// closure operator: the inclusion of the fixpoint subposet has the closure
/// as left adjoint, with identity counit. Every fourth attempt falls back to
/// the identity closure.
pub fn random_reflection(seed: u64, n: usize) -> Result<Adjunction> {
    let p = random_poset_category(seed, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(0x5851f42d4c957f2d));
    for attempt in 0..64usize {
        let closure = if attempt % 4 == 3 {
            Some(
                p.objects()
                    .map(|o| (o.to_string(), o.to_string()))
                    .collect(),
            )
        } else {
            random_closure(&p, &mut rng)
        };
        let Some(cl) = closure else { continue };
        let fix: BTreeSet<String> = cl
            .iter()
            .filter(|(k, v)| k == v)
            .map(|(k, _)| k.clone())
            .collect();
        let a = thin_subcategory(&p, &fix, format!("fix{seed}n{n}"))?;
        let g_obj: BTreeMap<String, String> =
            a.objects().map(|o| (o.to_string(), o.to_string())).collect();
        let right = thin_functor(format!("incl{seed}n{n}"), &a, &p, &g_obj)?;
        let left = thin_functor(format!("cl{seed}n{n}"), &p, &a, &cl)?;
        let unit_comps: BTreeMap<String, String> = p
            .objects()
            .map(|o| Ok((o.to_string(), thin_arrow(&p, o, &cl[o])?.to_string())))
            .collect::<Result<_>>()?;
        let counit_comps: BTreeMap<String, String> = a
            .objects()
            .map(|o| Ok((o.to_string(), a.id_of(o)?.to_string())))
            .collect::<Result<_>>()?;
        let unit = NatTrans::new(
            format!("unit[refl{seed}n{n}]"),
            Functor::identity(&p),
            crate::category::compose_functors(&right, &left)?,
            unit_comps,
        )?;
        let counit = NatTrans::new(
            format!("counit[refl{seed}n{n}]"),
            crate::category::compose_functors(&left, &right)?,
            Functor::identity(&a),
            counit_comps,
        )?;
        return Ok(Adjunction {
            name: format!("refl{seed}n{n}"),
            left,
            right,
            unit,
            counit,
        });
    }
    Err(Error::SamplingExhausted(
        64,
        format!("no reflection on poset{seed}x{n}"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate_category;
    use crate::coalgebra::{classify, validate_coalgebra};
    use crate::comonad::{check_adjunction, validate_comonad};
    use crate::normal::validate_normal;
    use crate::DEFAULT_MORPHISM_BUDGET as BUDGET;

    #[test]
    fn every_fixture_category_is_lawful() {
        for name in fixture_names() {
            if let Fixture::Category(c) = fixture(name).unwrap() {
                let report = validate_category(&c);
                assert!(report.passed(), "{name}: {}", report.render());
            }
        }
    }

    #[test]
    fn int2_is_a_comonad_and_int_a_colax_coalgebra() {
        let report = validate_comonad(&int2_comonad());
        assert!(report.passed(), "{}", report.render());
        let co = int_coalg();
        let report = validate_coalgebra(&co);
        assert!(report.passed(), "{}", report.render());
        assert_eq!(classify(&co).unwrap(), vec!["colax"]);
    }

    #[test]
    fn gal_is_an_adjunction_and_gal_normal_passes() {
        let report = check_adjunction(&gal_adjunction());
        assert!(report.passed(), "{}", report.render());
        let report = validate_normal(&gal_normal());
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn functor_count_between_chains_matches_the_binomial_oracle() {
        // Monotone maps chain(m) -> chain(n) are counted by C(m+n+1, m+1).
        let count = enumerate_functors(&chain(1), &chain(2), BUDGET).unwrap().len();
        assert_eq!(count, 6);
        let count = enumerate_functors(&chain(2), &chain(2), BUDGET).unwrap().len();
        assert_eq!(count, 10);
    }

    #[test]
    fn sampled_poset_coalgebras_validate() {
        for seed in 0..8u64 {
            let co = random_poset_coalgebra(seed, 5).unwrap();
            let report = validate_coalgebra(&co);
            assert!(report.passed(), "seed {seed}: {}", report.render());
        }
    }

    #[test]
    fn sampled_reflections_are_adjunctions() {
        for seed in 0..8u64 {
            let adj = random_reflection(seed, 5).unwrap();
            let report = check_adjunction(&adj);
            assert!(report.passed(), "seed {seed}: {}", report.render());
        }
    }
}
