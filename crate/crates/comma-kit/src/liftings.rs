//! Liftings induced by a colax coalgebra: the K and H functors lifted to the
//! Kleisli categories of the two derived comonads, split-coalgebra checks,
//! the distributive law generated by the coalgebra, the lifting of K to
//! Eilenberg–Moore categories, and the square comparing the Kleisli and
//! Eilenberg–Moore adjunctions of a single comonad.

use std::collections::BTreeMap;

use crate::category::{compose_functors, validate_functor, validate_nat_trans, Functor, NatTrans};
use crate::coalgebra::{derive_comonads, ColaxDCoalgebra};
use crate::comonad::{
    comparison_functor, em_category, kleisli_category, Comonad, EmBundle, KleisliBundle,
};
use crate::report::CheckReport;
use crate::Result;

/// Lift K to a functor between Kleisli categories, sending X to K(X) and a
/// Kleisli arrow with underlying f : C(X) -> Y to the arrow underlain by
/// ζ⁰_{K(Y)} ∘ QK(f) ∘ Q(θ¹¹⁰_X).
pub fn kleisli_lift_k(
    co: &ColaxDCoalgebra,
    klc: &KleisliBundle,
    klq: &KleisliBundle,
) -> Result<Functor> {
    let ac = co.a_cat();
    let mut obj_map = BTreeMap::new();
    for x in klc.total.objects() {
        obj_map.insert(x.to_string(), co.k.ob(x)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for m in klc.total.morphism_ids() {
        let (x, y) = (klc.total.src(m)?, klc.total.tgt(m)?);
        let f = klc.underlying_of(m)?;
        let under = ac.compose_seq(&[
            co.zeta0.at(co.k.ob(y)?)?,
            co.q.mor(co.k.mor(f)?)?,
            co.q.mor(co.theta110.at(x)?)?,
        ])?;
        let image = klq.morphism_id(&obj_map[x], &obj_map[y], &under)?;
        mor_map.insert(m.to_string(), image.to_string());
    }
    Functor::new(
        format!("kliftK({})", co.name),
        klc.total.clone(),
        klq.total.clone(),
        obj_map,
        mor_map,
    )
}

/// Lift H to a functor between Kleisli categories the other way, sending A
/// to H(A) and an arrow with underlying a : Q(A) -> B to the arrow underlain
/// by ζ¹_{H(B)} ∘ CH(a) ∘ C(θ⁰⁰¹_A).
pub fn kleisli_lift_h(
    co: &ColaxDCoalgebra,
    klq: &KleisliBundle,
    klc: &KleisliBundle,
) -> Result<Functor> {
    let xc = co.x_cat();
    let mut obj_map = BTreeMap::new();
    for a in klq.total.objects() {
        obj_map.insert(a.to_string(), co.h.ob(a)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for m in klq.total.morphism_ids() {
        let (a, b) = (klq.total.src(m)?, klq.total.tgt(m)?);
        let f = klq.underlying_of(m)?;
        let under = xc.compose_seq(&[
            co.zeta1.at(co.h.ob(b)?)?,
            co.c.mor(co.h.mor(f)?)?,
            co.c.mor(co.theta001.at(a)?)?,
        ])?;
        let image = klc.morphism_id(&obj_map[a], &obj_map[b], &under)?;
        mor_map.insert(m.to_string(), image.to_string());
    }
    Functor::new(
        format!("kliftH({})", co.name),
        klq.total.clone(),
        klc.total.clone(),
        obj_map,
        mor_map,
    )
}

fn fold_failures(rep: &CheckReport, out: &mut Vec<String>) {
    for item in rep.failures() {
        out.push(format!("{}: {}", item.label, item.witnesses.join("; ")));
    }
}

/// Build both Kleisli liftings and check them: each lift must be a functor,
/// it must commute with the underlying functors of the two Kleisli
/// adjunctions, and it must commute with the embeddings.
pub fn check_kleisli_lifts(co: &ColaxDCoalgebra, budget: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("kleisli liftings of {}", co.name));
    let (cm, qm) = derive_comonads(co);
    let klc = kleisli_category(&cm, budget)?;
    let klq = kleisli_category(&qm, budget)?;

    let square = |lift: Result<Functor>,
                  lift_label: &str,
                  u_label: &str,
                  f_label: &str,
                  plain: &Functor,
                  u_src: &Functor,
                  u_tgt: &Functor,
                  f_src: &Functor,
                  f_tgt: &Functor,
                  report: &mut CheckReport| {
        match lift {
            Ok(l) => {
                let mut w = Vec::new();
                fold_failures(&validate_functor(&l), &mut w);
                report.push_outcome(lift_label, w);

                let mut w = Vec::new();
                match (compose_functors(u_tgt, &l), compose_functors(plain, u_src)) {
                    (Ok(via_lift), Ok(via_base)) => {
                        if !via_lift.extensionally_equal(&via_base) {
                            w.push(format!(
                                "`{}` and `{}` disagree",
                                via_lift.name, via_base.name
                            ));
                        }
                    }
                    _ => w.push("the two composites do not typecheck".into()),
                }
                report.push_outcome(u_label, w);

                let mut w = Vec::new();
                match (compose_functors(&l, f_src), compose_functors(f_tgt, plain)) {
                    (Ok(via_lift), Ok(via_base)) => {
                        if !via_lift.extensionally_equal(&via_base) {
                            w.push(format!(
                                "`{}` and `{}` disagree",
                                via_lift.name, via_base.name
                            ));
                        }
                    }
                    _ => w.push("the two composites do not typecheck".into()),
                }
                report.push_outcome(f_label, w);
            }
            Err(e) => {
                report.push_outcome(lift_label, vec![format!("does not assemble: {e}")]);
                report.push_outcome(u_label, vec!["lift did not assemble".into()]);
                report.push_outcome(f_label, vec!["lift did not assemble".into()]);
            }
        }
    };

    // For the K lift: underlying_Q ∘ K̃ = K ∘ underlying_C and
    // K̃ ∘ embed_C = embed_Q ∘ K.
    square(
        kleisli_lift_k(co, &klc, &klq),
        "k-lift",
        "k-u-square",
        "k-f-square",
        &co.k,
        &klc.underlying,
        &klq.underlying,
        &klc.embed,
        &klq.embed,
        &mut report,
    );
    // Mirrored for the H lift.
    square(
        kleisli_lift_h(co, &klq, &klc),
        "h-lift",
        "h-u-square",
        "h-f-square",
        &co.h,
        &klq.underlying,
        &klc.underlying,
        &klq.embed,
        &klc.embed,
        &mut report,
    );
    Ok(report)
}

fn eq_over(
    objs: &[String],
    lhs: &dyn Fn(&str) -> Result<String>,
    rhs: &dyn Fn(&str) -> Result<String>,
) -> Vec<String> {
    let mut w = Vec::new();
    for o in objs {
        match (lhs(o), rhs(o)) {
            (Ok(l), Ok(r)) => {
                if l != r {
                    w.push(format!("at `{o}`: `{l}` vs `{r}`"));
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                w.push(format!("at `{o}` the equation does not typecheck: {e}"));
            }
        }
        if w.len() >= 3 {
            break;
        }
    }
    w
}

/// Check whether the coalgebra is split: the K image of the C comultiplication
/// is the θ¹¹⁰ comparison, and the counit comparison collapses through ε.
pub fn is_split(co: &ColaxDCoalgebra) -> CheckReport {
    let mut report = CheckReport::new(format!("split check for {}", co.name));
    let ac = co.a_cat();
    let x_objs: Vec<String> = co.x_cat().objects().map(|s| s.to_string()).collect();
    report.push_outcome(
        "splitrho",
        eq_over(
            &x_objs,
            &|x| Ok(co.k.mor(co.theta100.at(x)?)?.to_string()),
            &|x| Ok(co.theta110.at(co.c.ob(x)?)?.to_string()),
        ),
    );
    report.push_outcome(
        "splitzeta",
        eq_over(
            &x_objs,
            &|x| {
                ac.compose_seq(&[
                    co.zeta0.at(co.k.ob(x)?)?,
                    co.eps.at(co.k.ob(x)?)?,
                    co.k.mor(co.eta.at(x)?)?,
                ])
            },
            &|x| Ok(co.k.mor(co.zeta1.at(x)?)?.to_string()),
        ),
    );
    report
}

/// Check the two factorizations that hold in the split case: η and χ are
/// recovered from the θ comparisons through χ and the counit ζ⁰.
pub fn split_factorizations(co: &ColaxDCoalgebra) -> CheckReport {
    let mut report = CheckReport::new(format!("split factorizations of {}", co.name));
    let xc = co.x_cat();
    let x_objs: Vec<String> = xc.objects().map(|s| s.to_string()).collect();
    let a_objs: Vec<String> = co.a_cat().objects().map(|s| s.to_string()).collect();
    report.push_outcome(
        "splitrhofact",
        eq_over(
            &x_objs,
            &|x| {
                let kx = co.k.ob(x)?;
                xc.compose_seq(&[
                    co.g.mor(co.zeta0.at(kx)?)?,
                    co.chi.at(kx)?,
                    co.theta101.at(x)?,
                ])
            },
            &|x| Ok(co.eta.at(x)?.to_string()),
        ),
    );
    report.push_outcome(
        "splitchifact",
        eq_over(
            &a_objs,
            &|a| {
                let qa = co.q.ob(a)?;
                xc.compose_seq(&[
                    co.g.mor(co.zeta0.at(qa)?)?,
                    co.chi.at(qa)?,
                    co.theta001.at(a)?,
                ])
            },
            &|a| Ok(co.chi.at(a)?.to_string()),
        ),
    );
    report
}

/// A distributive law of K over the two derived comonads: a transformation
/// κ : K∘C ⇒ Q∘K compatible with the counits and comultiplications.
#[derive(Debug, Clone)]
pub struct DistributiveLaw {
    pub name: String,
    /// K : X -> A, the functor being rewritten past the comonads.
    pub carrier: Functor,
    /// The comonad (C, θ¹⁰⁰, ζ¹) on the source.
    pub upper: Comonad,
    /// The comonad (Q, θ⁰¹¹, ζ⁰) on the target.
    pub lower: Comonad,
    /// κ : K∘C ⇒ Q∘K.
    pub kappa: NatTrans,
}

/// The distributive law a coalgebra generates: κ_X := ε_{K(X)} ∘ K(η_X).
pub fn dist_law_kappa(co: &ColaxDCoalgebra) -> Result<DistributiveLaw> {
    let ac = co.a_cat();
    let (upper, lower) = derive_comonads(co);
    let mut components = BTreeMap::new();
    for x in co.x_cat().objects() {
        let comp = ac.compose(co.eps.at(co.k.ob(x)?)?, co.k.mor(co.eta.at(x)?)?)?;
        components.insert(x.to_string(), comp.to_string());
    }
    let kappa = NatTrans::new(
        format!("kappa[{}]", co.name),
        compose_functors(&co.k, &co.c)?,
        compose_functors(&co.q, &co.k)?,
        components,
    )?;
    Ok(DistributiveLaw {
        name: format!("distlaw[{}]", co.name),
        carrier: co.k.clone(),
        upper,
        lower,
        kappa,
    })
}

/// Check a distributive law against the coalgebra that claims to generate
/// it: the components must be the canonical composites, κ must be natural,
/// and the two compatibility laws with counits and comultiplications hold.
pub fn check_dist_law(co: &ColaxDCoalgebra, law: &DistributiveLaw) -> CheckReport {
    let mut report = CheckReport::new(format!("distributive law {}", law.name));
    let ac = co.a_cat();
    let x_objs: Vec<String> = co.x_cat().objects().map(|s| s.to_string()).collect();

    report.push_outcome(
        "kappacomp",
        eq_over(
            &x_objs,
            &|x| Ok(law.kappa.at(x)?.to_string()),
            &|x| {
                ac.compose_seq(&[co.eps.at(co.k.ob(x)?)?, co.k.mor(co.eta.at(x)?)?])
            },
        ),
    );

    let mut w = Vec::new();
    fold_failures(&validate_nat_trans(&law.kappa), &mut w);
    report.push_outcome("kappa-naturality", w);

    report.push_outcome(
        "gendist1",
        eq_over(
            &x_objs,
            &|x| ac.compose_seq(&[co.zeta0.at(co.k.ob(x)?)?, law.kappa.at(x)?]),
            &|x| Ok(co.k.mor(co.zeta1.at(x)?)?.to_string()),
        ),
    );
    report.push_outcome(
        "gendist2",
        eq_over(
            &x_objs,
            &|x| ac.compose_seq(&[co.theta011.at(co.k.ob(x)?)?, law.kappa.at(x)?]),
            &|x| {
                ac.compose_seq(&[
                    co.q.mor(law.kappa.at(x)?)?,
                    law.kappa.at(co.c.ob(x)?)?,
                    co.k.mor(co.theta100.at(x)?)?,
                ])
            },
        ),
    );
    report
}

/// Lift K to the Eilenberg–Moore categories: a C-coalgebra (X|x) goes to
/// (K(X) | κ_X ∘ K(x)) and a morphism goes to its K image.
pub fn em_lift_k(co: &ColaxDCoalgebra, em_c: &EmBundle, em_q: &EmBundle) -> Result<Functor> {
    let ac = co.a_cat();
    let mut obj_map = BTreeMap::new();
    for o in em_c.total.objects() {
        let (carrier, coaction) = em_c.object_parts(o)?;
        let kx = co.k.ob(carrier)?;
        let lifted = ac.compose_seq(&[
            co.eps.at(kx)?,
            co.k.mor(co.eta.at(carrier)?)?,
            co.k.mor(coaction)?,
        ])?;
        obj_map.insert(o.to_string(), em_q.object_id(kx, &lifted)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for m in em_c.total.non_identity_morphisms() {
        let under = co.k.mor(em_c.underlying(m)?)?;
        let src = &obj_map[em_c.total.src(m)?];
        let tgt = &obj_map[em_c.total.tgt(m)?];
        mor_map.insert(m.to_string(), em_q.morphism_id(src, tgt, under)?.to_string());
    }
    Functor::new(
        format!("emliftK({})", co.name),
        em_c.total.clone(),
        em_q.total.clone(),
        obj_map,
        mor_map,
    )
}

/// The same Eilenberg–Moore lifting, but built from a distributive law value
/// rather than from the coalgebra directly.
pub fn lift_from_distlaw(
    law: &DistributiveLaw,
    em_c: &EmBundle,
    em_q: &EmBundle,
) -> Result<Functor> {
    let k = &law.carrier;
    let ac = &k.target;
    let mut obj_map = BTreeMap::new();
    for o in em_c.total.objects() {
        let (carrier, coaction) = em_c.object_parts(o)?;
        let kx = k.ob(carrier)?;
        let lifted = ac.compose(law.kappa.at(carrier)?, k.mor(coaction)?)?;
        obj_map.insert(o.to_string(), em_q.object_id(kx, lifted)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for m in em_c.total.non_identity_morphisms() {
        let under = k.mor(em_c.underlying(m)?)?;
        let src = &obj_map[em_c.total.src(m)?];
        let tgt = &obj_map[em_c.total.tgt(m)?];
        mor_map.insert(m.to_string(), em_q.morphism_id(src, tgt, under)?.to_string());
    }
    Functor::new(
        format!("emlift({})", law.name),
        em_c.total.clone(),
        em_q.total.clone(),
        obj_map,
        mor_map,
    )
}

/// Build and check the Eilenberg–Moore lifting: it must be a functor, agree
/// with the lifting generated by the distributive law, and commute with the
/// forgetful functors.
pub fn check_em_lifts(co: &ColaxDCoalgebra, budget: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("eilenberg-moore lifting of {}", co.name));
    let (cm, qm) = derive_comonads(co);
    let em_c = em_category(&cm, budget)?;
    let em_q = em_category(&qm, budget)?;

    let lift = em_lift_k(co, &em_c, &em_q);
    match lift {
        Ok(l) => {
            let mut w = Vec::new();
            fold_failures(&validate_functor(&l), &mut w);
            report.push_outcome("em-lift", w);

            let mut w = Vec::new();
            match (
                compose_functors(&em_q.forgetful, &l),
                compose_functors(&co.k, &em_c.forgetful),
            ) {
                (Ok(via_lift), Ok(via_base)) => {
                    if !via_lift.extensionally_equal(&via_base) {
                        w.push("forgetting the lift is not K on carriers".into());
                    }
                }
                _ => w.push("the two composites do not typecheck".into()),
            }
            report.push_outcome("em-u-square", w);

            let mut w = Vec::new();
            match dist_law_kappa(co).and_then(|law| lift_from_distlaw(&law, &em_c, &em_q)) {
                Ok(via_law) => {
                    if !l.extensionally_equal(&via_law) {
                        w.push("the coalgebra lifting and the distributive-law lifting disagree".into());
                    }
                }
                Err(e) => w.push(format!("distributive-law route does not assemble: {e}")),
            }
            report.push_outcome("em-distlaw-agreement", w);
        }
        Err(e) => {
            report.push_outcome("em-lift", vec![format!("does not assemble: {e}")]);
            report.push_outcome("em-u-square", vec!["lift did not assemble".into()]);
            report.push_outcome("em-distlaw-agreement", vec!["lift did not assemble".into()]);
        }
    }
    Ok(report)
}

/// Which filling of the Kleisli-to-Eilenberg–Moore square to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareVariant {
    /// Identity fillings on the strict sides, counit and comultiplication
    /// on the others.
    Identity,
    /// Fillings twisted once by the comultiplication.
    C,
}

/// Check the square comparing the Kleisli and Eilenberg–Moore adjunctions of
/// one comonad through the comparison functor, with one of two fillings.
/// Every filling is validated as a natural transformation between composite
/// functors, and the comparison must commute strictly with both adjoints.
pub fn adjoint_square(c: &Comonad, variant: SquareVariant, budget: usize) -> Result<CheckReport> {
    let tag = match variant {
        SquareVariant::Identity => "identity",
        SquareVariant::C => "c",
    };
    let mut report = CheckReport::new(format!("adjoint square ({tag}) for {}", c.name));
    let kl = kleisli_category(c, budget)?;
    let em = em_category(c, budget)?;
    let t = &c.endo;
    let cat = &t.source;

    let mut comparison_w = Vec::new();
    let j = match comparison_functor(&kl, &em) {
        Ok(j) => {
            fold_failures(&validate_functor(&j), &mut comparison_w);
            match compose_functors(&em.forgetful, &j) {
                Ok(u_via_j) => {
                    if !u_via_j.extensionally_equal(&kl.underlying) {
                        comparison_w.push("forgetful ∘ comparison differs from the Kleisli underlying functor".into());
                    }
                }
                Err(e) => comparison_w.push(format!("{e}")),
            }
            match compose_functors(&j, &kl.embed) {
                Ok(j_via_embed) => {
                    if !j_via_embed.extensionally_equal(&em.cofree) {
                        comparison_w.push("comparison ∘ embed differs from the cofree functor".into());
                    }
                }
                Err(e) => comparison_w.push(format!("{e}")),
            }
            Some(j)
        }
        Err(e) => {
            comparison_w.push(format!("does not assemble: {e}"));
            None
        }
    };
    report.push_outcome("comparison", comparison_w);

    let Some(j) = j else {
        for label in ["theta11", "theta12", "theta21", "theta22"] {
            report.push_outcome(label, vec!["comparison did not assemble".into()]);
        }
        return Ok(report);
    };

    let push_nat =
        |label: &str, nat: Result<NatTrans>, report: &mut CheckReport| match nat {
            Ok(n) => {
                let mut w = Vec::new();
                fold_failures(&validate_nat_trans(&n), &mut w);
                report.push_outcome(label, w);
            }
            Err(e) => report.push_outcome(label, vec![format!("does not assemble: {e}")]),
        };

    let ids_at = |f: &Functor| -> Result<BTreeMap<String, String>> {
        f.source
            .objects()
            .map(|o| Ok((o.to_string(), format!("id_{}", f.ob(o)?))))
            .collect()
    };

    match variant {
        SquareVariant::Identity => {
            // theta11: identity comparison between the Kleisli underlying
            // functor and the forgetful functor after J.
            let nat = compose_functors(&em.forgetful, &j).and_then(|uj| {
                let comps = ids_at(&kl.underlying)?;
                NatTrans::new(format!("theta11[{}]", c.name), kl.underlying.clone(), uj, comps)
            });
            push_nat("theta11", nat, &mut report);

            // theta12: the counit, read off the composite underlying∘embed.
            let nat = compose_functors(&kl.underlying, &kl.embed).and_then(|ue| {
                let comps = cat
                    .objects()
                    .map(|x| Ok((x.to_string(), c.counit.at(x)?.to_string())))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                NatTrans::new(
                    format!("theta12[{}]", c.name),
                    ue,
                    Functor::identity(cat),
                    comps,
                )
            });
            push_nat("theta12", nat, &mut report);

            // theta21: the comultiplication as a family of Eilenberg–Moore
            // morphisms out of the cofree objects.
            let nat = compose_functors(&em.cofree, t).and_then(|ct| {
                let comps = cat
                    .objects()
                    .map(|x| {
                        let src = em.object_id(t.ob(x)?, c.comult.at(x)?)?;
                        let tgt_obj = em.object_id(
                            t.ob(t.ob(x)?)?,
                            c.comult.at(t.ob(x)?)?,
                        )?;
                        Ok((
                            x.to_string(),
                            em.morphism_id(src, tgt_obj, c.comult.at(x)?)?.to_string(),
                        ))
                    })
                    .collect::<Result<BTreeMap<_, _>>>()?;
                NatTrans::new(format!("theta21[{}]", c.name), em.cofree.clone(), ct, comps)
            });
            push_nat("theta21", nat, &mut report);

            // theta22: identity comparison between J∘embed and cofree.
            let nat = compose_functors(&j, &kl.embed).and_then(|je| {
                let comps = ids_at(&em.cofree)?;
                NatTrans::new(format!("theta22[{}]", c.name), je, em.cofree.clone(), comps)
            });
            push_nat("theta22", nat, &mut report);
        }
        SquareVariant::C => {
            // theta11: the comultiplication indexed over Kleisli objects.
            let nat = compose_functors(t, &kl.underlying).and_then(|tu| {
                let comps = cat
                    .objects()
                    .map(|x| Ok((x.to_string(), c.comult.at(x)?.to_string())))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                NatTrans::new(
                    format!("theta11[{}]", c.name),
                    kl.underlying.clone(),
                    tu,
                    comps,
                )
            });
            push_nat("theta11", nat, &mut report);

            // theta12: identity comparison underlying∘embed ⇒ T.
            let nat = compose_functors(&kl.underlying, &kl.embed).and_then(|ue| {
                let comps = ids_at(t)?;
                NatTrans::new(format!("theta12[{}]", c.name), ue, t.clone(), comps)
            });
            push_nat("theta12", nat, &mut report);

            // theta21: the twice-iterated comultiplication as Eilenberg–Moore
            // morphisms.
            let nat = compose_functors(t, t)
                .and_then(|tt| compose_functors(&em.cofree, &tt))
                .and_then(|ctt| {
                    let comps = cat
                        .objects()
                        .map(|x| {
                            let tx = t.ob(x)?;
                            let ttx = t.ob(tx)?;
                            let under = cat.compose(c.comult.at(tx)?, c.comult.at(x)?)?;
                            let src = em.object_id(tx, c.comult.at(x)?)?;
                            let tgt_obj = em.object_id(t.ob(ttx)?, c.comult.at(ttx)?)?;
                            Ok((
                                x.to_string(),
                                em.morphism_id(src, tgt_obj, under)?.to_string(),
                            ))
                        })
                        .collect::<Result<BTreeMap<_, _>>>()?;
                    NatTrans::new(format!("theta21[{}]", c.name), em.cofree.clone(), ctt, comps)
                });
            push_nat("theta21", nat, &mut report);

            // theta22: the comultiplication from J∘embed to cofree∘T.
            let nat = compose_functors(&em.cofree, t).and_then(|ct| {
                let je = compose_functors(&j, &kl.embed)?;
                let comps = cat
                    .objects()
                    .map(|x| {
                        let tx = t.ob(x)?;
                        let src = em.object_id(tx, c.comult.at(x)?)?;
                        let tgt_obj = em.object_id(t.ob(tx)?, c.comult.at(tx)?)?;
                        Ok((
                            x.to_string(),
                            em.morphism_id(src, tgt_obj, c.comult.at(x)?)?.to_string(),
                        ))
                    })
                    .collect::<Result<BTreeMap<_, _>>>()?;
                NatTrans::new(format!("theta22[{}]", c.name), je, ct, comps)
            });
            push_nat("theta22", nat, &mut report);
        }
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::identity_coalgebra;
    use crate::DEFAULT_MORPHISM_BUDGET as BUDGET;

    fn chain2() -> crate::FinCategory {
        let mut c = crate::FinCategory::new("chain2");
        for o in ["0", "1", "2"] {
            c.add_object(o).unwrap();
        }
        c.add_morphism("le_0_1", "0", "1").unwrap();
        c.add_morphism("le_1_2", "1", "2").unwrap();
        c.add_morphism("le_0_2", "0", "2").unwrap();
        c.set_compose("le_1_2", "le_0_1", "le_0_2").unwrap();
        c
    }

    #[test]
    fn kleisli_lifts_of_identity_coalgebra_check_out() {
        let co = identity_coalgebra(&chain2()).unwrap();
        let report = check_kleisli_lifts(&co, BUDGET).unwrap();
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn identity_coalgebra_is_split_with_factorizations() {
        let co = identity_coalgebra(&chain2()).unwrap();
        assert!(is_split(&co).passed());
        assert!(split_factorizations(&co).passed());
    }

    #[test]
    fn distributive_law_of_identity_coalgebra_checks_out() {
        let co = identity_coalgebra(&chain2()).unwrap();
        let law = dist_law_kappa(&co).unwrap();
        let report = check_dist_law(&co, &law);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn em_lift_agrees_with_distributive_law_route() {
        let co = identity_coalgebra(&chain2()).unwrap();
        let report = check_em_lifts(&co, BUDGET).unwrap();
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn both_adjoint_square_variants_validate() {
        let cat = chain2();
        let ident = Functor::identity(&cat);
        let comult = NatTrans::identity_on(&ident).unwrap();
        let counit = NatTrans::identity_on(&ident).unwrap();
        let c = Comonad {
            name: "idco".into(),
            endo: ident,
            comult,
            counit,
        };
        for v in [SquareVariant::Identity, SquareVariant::C] {
            let report = adjoint_square(&c, v, BUDGET).unwrap();
            assert!(report.passed(), "{}", report.render());
        }
    }
}
