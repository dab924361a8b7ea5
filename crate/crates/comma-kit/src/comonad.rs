//! Comonads on a single finite category, their Eilenberg–Moore and Kleisli
//! categories, adjunctions, and an exhaustive adjunction finder.
//!
//! Carrier objects of the Eilenberg–Moore category are written `(X|x)` for a
//! coaction x : X -> T(X); Kleisli morphisms are written `f@X>Y` for an
//! underlying f : T(X) -> Y. Identities use the reserved `id_` scheme in
//! both cases.

use std::collections::BTreeMap;

use crate::category::{
    compose_functors, validate_functor, validate_nat_trans, FinCategory, Functor, NatTrans,
};
use crate::report::CheckReport;
use crate::{Error, Result};

/// A comonad (T, τ, ζ) on the source of its endofunctor.
#[derive(Debug, Clone)]
pub struct Comonad {
    pub name: String,
    pub endo: Functor,
    /// τ : T ⇒ T∘T
    pub comult: NatTrans,
    /// ζ : T ⇒ Id
    pub counit: NatTrans,
}

/// An adjunction left ⊣ right with unit Id ⇒ right∘left and counit
/// left∘right ⇒ Id.
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub name: String,
    pub left: Functor,
    pub right: Functor,
    pub unit: NatTrans,
    pub counit: NatTrans,
}

/// Check the comonad laws: T is an endofunctor, τ and ζ are natural with the
/// right boundaries, both counit triangles collapse, and τ is coassociative.
pub fn validate_comonad(c: &Comonad) -> CheckReport {
    let mut report = CheckReport::new(format!("comonad {}", c.name));
    let t = &c.endo;
    let cat = &t.source;

    let mut w = Vec::new();
    if !t.source.same_presentation(&t.target) {
        w.push("endofunctor has different source and target".into());
    }
    for item in validate_functor(t).failures() {
        w.push(format!("{}: {}", item.label, item.witnesses.join("; ")));
    }
    report.push_outcome("endofunctor", w);

    let mut w = Vec::new();
    match (compose_functors(t, t), Ok::<_, Error>(Functor::identity(cat))) {
        (Ok(tt), Ok(ident)) => {
            if !c.comult.src_functor.extensionally_equal(t)
                || !c.comult.tgt_functor.extensionally_equal(&tt)
            {
                w.push("comultiplication does not run T ⇒ T∘T".into());
            }
            if !c.counit.src_functor.extensionally_equal(t)
                || !c.counit.tgt_functor.extensionally_equal(&ident)
            {
                w.push("counit does not run T ⇒ Id".into());
            }
        }
        _ => w.push("endofunctor does not self-compose".into()),
    }
    report.push_outcome("boundaries", w);

    report.absorb("comult-", validate_nat_trans(&c.comult));
    report.absorb("counit-", validate_nat_trans(&c.counit));

    let eq = |label: &str, lhs: &dyn Fn(&str) -> Result<String>, rhs: &dyn Fn(&str) -> Result<String>, report: &mut CheckReport| {
        let mut w = Vec::new();
        for o in cat.objects() {
            match (lhs(o), rhs(o)) {
                (Ok(l), Ok(r)) => {
                    if l != r {
                        w.push(format!("at `{o}`: `{l}` vs `{r}`"));
                    }
                }
                (Err(e), _) | (_, Err(e)) => w.push(format!("at `{o}`: {e}")),
            }
            if w.len() >= 5 {
                break;
            }
        }
        report.push_outcome(label, w);
    };

    eq(
        "counit-left",
        &|o| Ok(cat.compose(t.mor(c.counit.at(o)?)?, c.comult.at(o)?)?.to_string()),
        &|o| Ok(format!("id_{}", t.ob(o)?)),
        &mut report,
    );
    eq(
        "counit-right",
        &|o| Ok(cat.compose(c.counit.at(t.ob(o)?)?, c.comult.at(o)?)?.to_string()),
        &|o| Ok(format!("id_{}", t.ob(o)?)),
        &mut report,
    );
    eq(
        "coassociativity",
        &|o| Ok(cat.compose(t.mor(c.comult.at(o)?)?, c.comult.at(o)?)?.to_string()),
        &|o| Ok(cat.compose(c.comult.at(t.ob(o)?)?, c.comult.at(o)?)?.to_string()),
        &mut report,
    );

    report
}

/// Check the triangle identities of an adjunction along with naturality of
/// its unit and counit.
pub fn check_adjunction(a: &Adjunction) -> CheckReport {
    let mut report = CheckReport::new(format!("adjunction {}", a.name));
    let l = &a.left;
    let r = &a.right;

    let mut w = Vec::new();
    if !l.source.same_presentation(&r.target) || !l.target.same_presentation(&r.source) {
        w.push("left and right functors do not run between the same two categories".into());
    }
    match (compose_functors(r, l), compose_functors(l, r)) {
        (Ok(rl), Ok(lr)) => {
            if !a.unit.src_functor.extensionally_equal(&Functor::identity(&l.source))
                || !a.unit.tgt_functor.extensionally_equal(&rl)
            {
                w.push("unit does not run Id ⇒ right∘left".into());
            }
            if !a.counit.src_functor.extensionally_equal(&lr)
                || !a.counit.tgt_functor.extensionally_equal(&Functor::identity(&r.source))
            {
                w.push("counit does not run left∘right ⇒ Id".into());
            }
        }
        _ => w.push("adjunction functors do not compose".into()),
    }
    report.push_outcome("boundaries", w);

    report.absorb("unit-", validate_nat_trans(&a.unit));
    report.absorb("counit-", validate_nat_trans(&a.counit));

    let mut w = Vec::new();
    for x in l.source.objects() {
        let outcome = (|| -> Result<(String, String)> {
            let lhs = l
                .target
                .compose(a.counit.at(l.ob(x)?)?, l.mor(a.unit.at(x)?)?)?
                .to_string();
            Ok((lhs, format!("id_{}", l.ob(x)?)))
        })();
        match outcome {
            Ok((lhs, rhs)) => {
                if lhs != rhs {
                    w.push(format!("at `{x}`: `{lhs}` vs `{rhs}`"));
                }
            }
            Err(e) => w.push(format!("at `{x}`: {e}")),
        }
        if w.len() >= 5 {
            break;
        }
    }
    report.push_outcome("triangle-left", w);

    let mut w = Vec::new();
    for y in r.source.objects() {
        let outcome = (|| -> Result<(String, String)> {
            let composed = r
                .target
                .compose(r.mor(a.counit.at(y)?)?, a.unit.at(r.ob(y)?)?)?
                .to_string();
            Ok((composed, format!("id_{}", r.ob(y)?)))
        })();
        match outcome {
            Ok((lhs, rhs)) => {
                if lhs != rhs {
                    w.push(format!("at `{y}`: `{lhs}` vs `{rhs}`"));
                }
            }
            Err(e) => w.push(format!("at `{y}`: {e}")),
        }
        if w.len() >= 5 {
            break;
        }
    }
    report.push_outcome("triangle-right", w);

    report
}

/// The Eilenberg–Moore category of a comonad with its forgetful/cofree
/// adjunction and lookup tables for carriers and underlying morphisms.
#[derive(Debug, Clone)]
pub struct EmBundle {
    pub comonad: Comonad,
    pub total: FinCategory,
    /// (X|x) ↦ X, underlying on morphisms.
    pub forgetful: Functor,
    /// X ↦ (T(X)|τ_X), f ↦ T(f).
    pub cofree: Functor,
    /// forgetful ⊣ cofree.
    pub adjunction: Adjunction,
    obj_parts: BTreeMap<String, (String, String)>,
    obj_ix: BTreeMap<(String, String), String>,
    mor_under: BTreeMap<String, String>,
    mor_ix: BTreeMap<(String, String, String), String>,
}

impl EmBundle {
    pub fn object_id(&self, carrier: &str, coaction: &str) -> Result<&str> {
        self.obj_ix
            .get(&(carrier.to_string(), coaction.to_string()))
            .map(|s| s.as_str())
            .ok_or_else(|| {
                Error::UnknownObject(format!("({carrier}|{coaction})"), self.total.name.clone())
            })
    }

    pub fn object_parts(&self, id: &str) -> Result<(&str, &str)> {
        self.obj_parts
            .get(id)
            .map(|(c, x)| (c.as_str(), x.as_str()))
            .ok_or_else(|| Error::UnknownObject(id.to_string(), self.total.name.clone()))
    }

    pub fn morphism_id(&self, src: &str, tgt: &str, underlying: &str) -> Result<&str> {
        self.mor_ix
            .get(&(src.to_string(), tgt.to_string(), underlying.to_string()))
            .map(|s| s.as_str())
            .ok_or_else(|| {
                Error::UnknownMorphism(
                    format!("{underlying}@{src}>{tgt}"),
                    self.total.name.clone(),
                )
            })
    }

    pub fn underlying(&self, id: &str) -> Result<&str> {
        self.mor_under
            .get(id)
            .map(|s| s.as_str())
            .ok_or_else(|| Error::UnknownMorphism(id.to_string(), self.total.name.clone()))
    }
}

/// Build the Eilenberg–Moore category by exhaustively scanning for coactions
/// satisfying the counit and coassociativity laws, and morphisms commuting
/// with them.
pub fn em_category(c: &Comonad, budget: usize) -> Result<EmBundle> {
    let t = &c.endo;
    let cat = &t.source;
    let name = format!("em({})", c.name);
    let mut total = FinCategory::new(name.clone());

    let mut obj_parts = BTreeMap::new();
    let mut obj_ix = BTreeMap::new();
    let mut order = Vec::new();
    for x in cat.objects() {
        for co in cat.hom(x, t.ob(x)?)? {
            let counit_ok = cat.compose(c.counit.at(x)?, co)? == cat.id_of(x)?;
            let coassoc = cat.compose(c.comult.at(x)?, co)? == cat.compose(t.mor(co)?, co)?;
            if !(counit_ok && coassoc) {
                continue;
            }
            let id = format!("({x}|{co})");
            if order.len() >= budget {
                return Err(Error::BudgetExceeded(format!(
                    "{name} needs more than {budget} objects"
                )));
            }
            total.add_object(&id)?;
            obj_parts.insert(id.clone(), (x.to_string(), co.to_string()));
            obj_ix.insert((x.to_string(), co.to_string()), id.clone());
            order.push(id);
        }
    }

    let mut mor_under = BTreeMap::new();
    let mut mor_ix = BTreeMap::new();
    for o in &order {
        let (x, _) = obj_parts[o].clone();
        mor_under.insert(format!("id_{o}"), format!("id_{x}"));
        mor_ix.insert((o.clone(), o.clone(), format!("id_{x}")), format!("id_{o}"));
    }
    let mut nonid = Vec::new();
    for src in &order {
        let (x, xc) = obj_parts[src].clone();
        for tgt in &order {
            let (y, yc) = obj_parts[tgt].clone();
            for f in cat.hom(&x, &y)? {
                if cat.is_identity(f)? && src == tgt {
                    continue;
                }
                if cat.compose(&yc, f)? != cat.compose(t.mor(f)?, &xc)? {
                    continue;
                }
                // Same guard as the Kleisli construction: never let an
                // identity underlying morphism produce a reserved id.
                let id = if f.starts_with("id_") {
                    format!("({f})@{src}>{tgt}")
                } else {
                    format!("{f}@{src}>{tgt}")
                };
                if total.morphism_count() >= budget {
                    return Err(Error::BudgetExceeded(format!(
                        "{name} needs more than {budget} morphisms"
                    )));
                }
                total.add_morphism(&id, src, tgt)?;
                mor_under.insert(id.clone(), f.to_string());
                mor_ix.insert((src.clone(), tgt.clone(), f.to_string()), id.clone());
                nonid.push((id, src.clone(), tgt.clone()));
            }
        }
    }
    for (m1, src1, tgt1) in &nonid {
        for (m2, src2, tgt2) in &nonid {
            if src2 != tgt1 {
                continue;
            }
            let under = cat.compose(&mor_under[m2], &mor_under[m1])?.to_string();
            let h = mor_ix
                .get(&(src1.clone(), tgt2.clone(), under))
                .ok_or_else(|| {
                    Error::Construction(format!("composite of `{m2}` . `{m1}` leaves {name}"))
                })?;
            total.set_compose(m2, m1, h)?;
        }
    }

    let forgetful = {
        let obj_map = order
            .iter()
            .map(|o| (o.clone(), obj_parts[o].0.clone()))
            .collect();
        let mor_map = nonid
            .iter()
            .map(|(m, _, _)| (m.clone(), mor_under[m].clone()))
            .collect();
        Functor::new(format!("u[{name}]"), total.clone(), cat.clone(), obj_map, mor_map)?
    };
    let cofree = {
        let mut obj_map = BTreeMap::new();
        for x in cat.objects() {
            let carrier = t.ob(x)?;
            let coaction = c.comult.at(x)?;
            let img = obj_ix
                .get(&(carrier.to_string(), coaction.to_string()))
                .ok_or_else(|| {
                    Error::Construction(format!(
                        "cofree image of `{x}` is not a recognized coaction"
                    ))
                })?;
            obj_map.insert(x.to_string(), img.clone());
        }
        let mut mor_map = BTreeMap::new();
        for f in cat.non_identity_morphisms() {
            let src = &obj_map[cat.src(f)?];
            let tgt = &obj_map[cat.tgt(f)?];
            let under = t.mor(f)?;
            let img = mor_ix
                .get(&(src.clone(), tgt.clone(), under.to_string()))
                .ok_or_else(|| {
                    Error::Construction(format!("cofree image of `{f}` is not a coalgebra map"))
                })?;
            mor_map.insert(f.to_string(), img.clone());
        }
        Functor::new(format!("f[{name}]"), cat.clone(), total.clone(), obj_map, mor_map)?
    };

    let adjunction = {
        let mut unit_components = BTreeMap::new();
        for o in &order {
            let (x, co) = obj_parts[o].clone();
            let tgt_obj = obj_ix[&(t.ob(&x)?.to_string(), c.comult.at(&x)?.to_string())].clone();
            unit_components.insert(o.clone(), mor_ix[&(o.clone(), tgt_obj, co)].clone());
        }
        let unit = NatTrans::new(
            format!("emunit({})", c.name),
            Functor::identity(&total),
            compose_functors(&cofree, &forgetful)?,
            unit_components,
        )?;
        let counit_components = cat
            .objects()
            .map(|x| Ok((x.to_string(), c.counit.at(x)?.to_string())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let counit = NatTrans::new(
            format!("emcounit({})", c.name),
            compose_functors(&forgetful, &cofree)?,
            Functor::identity(cat),
            counit_components,
        )?;
        Adjunction {
            name: format!("em({})", c.name),
            left: forgetful.clone(),
            right: cofree.clone(),
            unit,
            counit,
        }
    };

    Ok(EmBundle {
        comonad: c.clone(),
        total,
        forgetful,
        cofree,
        adjunction,
        obj_parts,
        obj_ix,
        mor_under,
        mor_ix,
    })
}

/// The Kleisli category of a comonad with its underlying/embedding
/// adjunction and lookup tables.
#[derive(Debug, Clone)]
pub struct KleisliBundle {
    pub comonad: Comonad,
    pub total: FinCategory,
    /// X ↦ T(X), f̃ ↦ T(f)∘τ.
    pub underlying: Functor,
    /// X ↦ X, f ↦ f∘ζ.
    pub embed: Functor,
    /// underlying ⊣ embed.
    pub adjunction: Adjunction,
    mor_under: BTreeMap<String, String>,
    mor_ix: BTreeMap<(String, String, String), String>,
}

impl KleisliBundle {
    pub fn morphism_id(&self, src: &str, tgt: &str, underlying: &str) -> Result<&str> {
        self.mor_ix
            .get(&(src.to_string(), tgt.to_string(), underlying.to_string()))
            .map(|s| s.as_str())
            .ok_or_else(|| {
                Error::UnknownMorphism(
                    format!("{underlying}@{src}>{tgt}"),
                    self.total.name.clone(),
                )
            })
    }

    pub fn underlying_of(&self, id: &str) -> Result<&str> {
        self.mor_under
            .get(id)
            .map(|s| s.as_str())
            .ok_or_else(|| Error::UnknownMorphism(id.to_string(), self.total.name.clone()))
    }
}

/// Build the Kleisli category: objects of the base, morphisms X -> Y the
/// base morphisms T(X) -> Y, composed through the comultiplication.
pub fn kleisli_category(c: &Comonad, budget: usize) -> Result<KleisliBundle> {
    let t = &c.endo;
    let cat = &t.source;
    let name = format!("kl({})", c.name);
    let mut total = FinCategory::new(name.clone());

    let mut mor_under = BTreeMap::new();
    let mut mor_ix = BTreeMap::new();
    for x in cat.objects() {
        total.add_object(x)?;
    }
    for x in cat.objects() {
        let ident = format!("id_{x}");
        let zeta = c.counit.at(x)?.to_string();
        mor_under.insert(ident.clone(), zeta.clone());
        mor_ix.insert((x.to_string(), x.to_string(), zeta), ident);
    }
    let mut nonid = Vec::new();
    for x in cat.objects() {
        let zeta = c.counit.at(x)?;
        for y in cat.objects() {
            for f in cat.hom(t.ob(x)?, y)? {
                if x == y && f == zeta {
                    continue; // reserved for the Kleisli identity
                }
                // Parenthesize an identity underlying morphism so the id
                // never collides with the reserved `id_` prefix: hom(T(x), y)
                // can contain identities even when x ≠ y.
                let id = if f.starts_with("id_") {
                    format!("({f})@{x}>{y}")
                } else {
                    format!("{f}@{x}>{y}")
                };
                if total.morphism_count() >= budget {
                    return Err(Error::BudgetExceeded(format!(
                        "{name} needs more than {budget} morphisms"
                    )));
                }
                total.add_morphism(&id, x, y)?;
                mor_under.insert(id.clone(), f.to_string());
                mor_ix.insert((x.to_string(), y.to_string(), f.to_string()), id.clone());
                nonid.push((id, x.to_string(), y.to_string()));
            }
        }
    }
    for (m1, src1, tgt1) in &nonid {
        for (m2, src2, tgt2) in &nonid {
            if src2 != tgt1 {
                continue;
            }
            let f = &mor_under[m1];
            let g = &mor_under[m2];
            let under = cat
                .compose_seq(&[g, t.mor(f)?, c.comult.at(src1)?])?
                .to_string();
            let h = mor_ix
                .get(&(src1.clone(), tgt2.clone(), under))
                .ok_or_else(|| {
                    Error::Construction(format!("composite of `{m2}` . `{m1}` leaves {name}"))
                })?;
            total.set_compose(m2, m1, h)?;
        }
    }

    let underlying = {
        let obj_map = cat
            .objects()
            .map(|x| Ok((x.to_string(), t.ob(x)?.to_string())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let mut mor_map = BTreeMap::new();
        for (m, src, _) in &nonid {
            let img = cat.compose(t.mor(&mor_under[m])?, c.comult.at(src)?)?;
            mor_map.insert(m.clone(), img.to_string());
        }
        Functor::new(format!("u[{name}]"), total.clone(), cat.clone(), obj_map, mor_map)?
    };
    let embed = {
        let obj_map = cat
            .objects()
            .map(|x| (x.to_string(), x.to_string()))
            .collect();
        let mut mor_map = BTreeMap::new();
        for f in cat.non_identity_morphisms() {
            let (x, y) = (cat.src(f)?, cat.tgt(f)?);
            let under = cat.compose(f, c.counit.at(x)?)?.to_string();
            let img = mor_ix
                .get(&(x.to_string(), y.to_string(), under.clone()))
                .cloned()
                .unwrap_or_else(|| format!("id_{x}"));
            // The fallback fires exactly when f∘ζ is the identity's
            // underlying morphism and x == y, i.e. the image is id_x.
            mor_map.insert(f.to_string(), img);
        }
        Functor::new(format!("f[{name}]"), cat.clone(), total.clone(), obj_map, mor_map)?
    };

    let lookup = |src: &str, tgt: &str, under: &str| -> String {
        mor_ix
            .get(&(src.to_string(), tgt.to_string(), under.to_string()))
            .cloned()
            .unwrap_or_else(|| format!("id_{src}"))
    };
    let adjunction = {
        let mut unit_components = BTreeMap::new();
        for x in cat.objects() {
            let tx = t.ob(x)?;
            unit_components.insert(x.to_string(), lookup(x, tx, &format!("id_{tx}")));
        }
        let unit = NatTrans::new(
            format!("klunit({})", c.name),
            Functor::identity(&total),
            compose_functors(&embed, &underlying)?,
            unit_components,
        )?;
        let counit_components = cat
            .objects()
            .map(|x| Ok((x.to_string(), c.counit.at(x)?.to_string())))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let counit = NatTrans::new(
            format!("klcounit({})", c.name),
            compose_functors(&underlying, &embed)?,
            Functor::identity(cat),
            counit_components,
        )?;
        Adjunction {
            name: format!("kl({})", c.name),
            left: underlying.clone(),
            right: embed.clone(),
            unit,
            counit,
        }
    };

    Ok(KleisliBundle {
        comonad: c.clone(),
        total,
        underlying,
        embed,
        adjunction,
        mor_under,
        mor_ix,
    })
}

/// The comparison functor from the Kleisli category into the Eilenberg–Moore
/// category: X ↦ (T(X)|τ_X) and f̃ ↦ T(f)∘τ.
pub fn comparison_functor(kl: &KleisliBundle, em: &EmBundle) -> Result<Functor> {
    let c = &kl.comonad;
    let t = &c.endo;
    let cat = &t.source;
    let mut obj_map = BTreeMap::new();
    for x in cat.objects() {
        obj_map.insert(
            x.to_string(),
            em.object_id(t.ob(x)?, c.comult.at(x)?)?.to_string(),
        );
    }
    let mut mor_map = BTreeMap::new();
    for m in kl.total.non_identity_morphisms() {
        let x = kl.total.src(m)?;
        let under = cat.compose(t.mor(kl.underlying_of(m)?)?, c.comult.at(x)?)?;
        let src = &obj_map[x];
        let tgt = &obj_map[kl.total.tgt(m)?];
        mor_map.insert(m.to_string(), em.morphism_id(src, tgt, under)?.to_string());
    }
    Functor::new(
        format!("compare({})", c.name),
        kl.total.clone(),
        em.total.clone(),
        obj_map,
        mor_map,
    )
}

/// All natural transformations F ⇒ G, found by assigning components in
/// object order and pruning with the naturality squares available so far.
pub fn enumerate_nat_trans(f: &Functor, g: &Functor, budget: usize) -> Result<Vec<NatTrans>> {
    let cat = &f.target;
    let src = &f.source;
    let objects: Vec<&str> = src.objects().collect();
    let mut found = Vec::new();
    let mut partial: BTreeMap<String, String> = BTreeMap::new();
    let mut steps = 0usize;

    fn assign(
        ix: usize,
        objects: &[&str],
        f: &Functor,
        g: &Functor,
        cat: &FinCategory,
        src: &FinCategory,
        partial: &mut BTreeMap<String, String>,
        found: &mut Vec<BTreeMap<String, String>>,
        steps: &mut usize,
        budget: usize,
    ) -> Result<()> {
        if ix == objects.len() {
            found.push(partial.clone());
            return Ok(());
        }
        let o = objects[ix];
        let candidates: Vec<String> = cat
            .hom(f.ob(o)?, g.ob(o)?)?
            .into_iter()
            .map(|s| s.to_string())
            .collect();
        'cand: for cand in candidates {
            *steps += 1;
            if *steps > budget {
                return Err(Error::BudgetExceeded(format!(
                    "transformation search between `{}` and `{}` exceeds {budget} steps",
                    f.name, g.name
                )));
            }
            partial.insert(o.to_string(), cand.clone());
            for (a, b, m) in src.morphism_triples() {
                let (ca, cb) = match (partial.get(a), partial.get(b)) {
                    (Some(ca), Some(cb)) => (ca, cb),
                    _ => continue,
                };
                let lhs = cat.compose(g.mor(m)?, ca)?;
                let rhs = cat.compose(cb, f.mor(m)?)?;
                if lhs != rhs {
                    partial.remove(o);
                    continue 'cand;
                }
            }
            assign(ix + 1, objects, f, g, cat, src, partial, found, steps, budget)?;
            partial.remove(o);
        }
        Ok(())
    }

    let mut raw = Vec::new();
    assign(
        0, &objects, f, g, cat, src, &mut partial, &mut raw, &mut steps, budget,
    )?;
    for (n, comps) in raw.into_iter().enumerate() {
        found.push(NatTrans::new(
            format!("cand{n}({}|{})", f.name, g.name),
            f.clone(),
            g.clone(),
            comps,
        )?);
    }
    Ok(found)
}

/// Exhaustively search for unit/counit data exhibiting left ⊣ right. Returns
/// the first pair (in enumeration order) passing both triangle identities.
pub fn search_adjunction(left: &Functor, right: &Functor, budget: usize) -> Result<Option<Adjunction>> {
    if !left.source.same_presentation(&right.target)
        || !left.target.same_presentation(&right.source)
    {
        return Ok(None);
    }
    let rl = compose_functors(right, left)?;
    let lr = compose_functors(left, right)?;
    let units = enumerate_nat_trans(&Functor::identity(&left.source), &rl, budget)?;
    let counits = enumerate_nat_trans(&lr, &Functor::identity(&right.source), budget)?;
    if units.len().saturating_mul(counits.len()) > budget {
        return Err(Error::BudgetExceeded(format!(
            "adjunction search between `{}` and `{}` has too many candidate pairs",
            left.name, right.name
        )));
    }
    for unit in &units {
        for counit in &counits {
            let cand = Adjunction {
                name: format!("({}|{})", left.name, right.name),
                left: left.clone(),
                right: right.clone(),
                unit: unit.clone(),
                counit: counit.clone(),
            };
            if check_adjunction(&cand).passed() {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_MORPHISM_BUDGET as BUDGET;

    fn walking_arrow() -> FinCategory {
        let mut c = FinCategory::new("two");
        c.add_object("0").unwrap();
        c.add_object("1").unwrap();
        c.add_morphism("u", "0", "1").unwrap();
        c
    }

    fn identity_comonad(cat: &FinCategory) -> Comonad {
        let endo = Functor::identity(cat);
        Comonad {
            name: format!("id({})", cat.name),
            comult: NatTrans::identity_on(&endo).unwrap(),
            counit: NatTrans::identity_on(&endo).unwrap(),
            endo,
        }
    }

    #[test]
    fn identity_comonad_is_lawful() {
        let c = identity_comonad(&walking_arrow());
        let report = validate_comonad(&c);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn em_of_identity_comonad_recovers_the_base() {
        let c = identity_comonad(&walking_arrow());
        let em = em_category(&c, BUDGET).unwrap();
        assert_eq!(em.total.object_count(), 2);
        assert_eq!(em.total.morphism_count(), 3);
        let report = check_adjunction(&em.adjunction);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn kleisli_of_identity_comonad_recovers_the_base() {
        let c = identity_comonad(&walking_arrow());
        let kl = kleisli_category(&c, BUDGET).unwrap();
        assert_eq!(kl.total.object_count(), 2);
        assert_eq!(kl.total.morphism_count(), 3);
        let report = check_adjunction(&kl.adjunction);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn comparison_functor_commutes_with_forgetful() {
        let c = identity_comonad(&walking_arrow());
        let em = em_category(&c, BUDGET).unwrap();
        let kl = kleisli_category(&c, BUDGET).unwrap();
        let j = comparison_functor(&kl, &em).unwrap();
        let via_em = compose_functors(&em.forgetful, &j).unwrap();
        assert!(via_em.extensionally_equal(&kl.underlying));
    }

    #[test]
    fn search_recovers_the_em_adjunction() {
        let c = identity_comonad(&walking_arrow());
        let em = em_category(&c, BUDGET).unwrap();
        let found = search_adjunction(&em.forgetful, &em.cofree, BUDGET).unwrap();
        assert!(found.is_some());
    }
}
