//! Normal colax coalgebras: the degenerate case where both comparison
//! comonads are identities. These are exactly adjunctions K ⊣ G dressed with
//! a factorization H of G, so the module also provides the two translation
//! directions, a Frobenius check, a brute-force left-adjoint search through
//! universal arrows, and the monad on pairs of categories whose structure
//! maps mirror the arrow construction.

use std::collections::BTreeMap;

use crate::category::{
    compose_functors, validate_category, validate_functor, validate_nat_trans, Functor, NatTrans,
};
use crate::coalgebra::{validate_coalgebra, CoalgebraComponents, ColaxDCoalgebra};
use crate::comonad::{search_adjunction, Adjunction};
use crate::report::CheckReport;
use crate::{Error, Result};

/// A normal colax coalgebra: functors G, K, H with unit ϱ : Id ⇒ G∘K,
/// counit ε : K∘G ⇒ Id, a factorization ω : G ⇒ H with retraction
/// χ : H ⇒ G, and the two comparison transformations θ into H∘K and K∘H.
#[derive(Debug, Clone)]
pub struct NormalColaxCoalgebra {
    pub name: String,
    /// G : A -> X.
    pub g: Functor,
    /// K : X -> A.
    pub k: Functor,
    /// H : A -> X.
    pub h: Functor,
    /// ϱ : Id_X ⇒ G∘K.
    pub rho: NatTrans,
    /// ε : K∘G ⇒ Id_A.
    pub eps: NatTrans,
    /// ω : G ⇒ H.
    pub omega: NatTrans,
    /// χ : H ⇒ G.
    pub chi: NatTrans,
    /// θ¹⁰¹ : Id_X ⇒ H∘K.
    pub theta101: NatTrans,
    /// θ⁰¹⁰ : Id_A ⇒ K∘H.
    pub theta010: NatTrans,
}

/// Raw component tables for building a normal coalgebra.
#[derive(Debug, Clone, Default)]
pub struct NormalComponents {
    pub rho: BTreeMap<String, String>,
    pub eps: BTreeMap<String, String>,
    pub omega: BTreeMap<String, String>,
    pub chi: BTreeMap<String, String>,
    pub theta101: BTreeMap<String, String>,
    pub theta010: BTreeMap<String, String>,
}

impl NormalColaxCoalgebra {
    /// Assemble the transformations from component tables. Only totality is
    /// enforced here; `validate_normal` runs the actual laws, so malformed
    /// candidates can still be constructed and then reported against.
    pub fn from_components(
        name: impl Into<String>,
        g: Functor,
        k: Functor,
        h: Functor,
        comps: NormalComponents,
    ) -> Result<Self> {
        let name = name.into();
        if !g.source.same_presentation(&k.target) || !g.target.same_presentation(&k.source) {
            return Err(Error::Boundary(format!(
                "`{}` and `{}` do not run between the same two categories",
                g.name, k.name
            )));
        }
        if !h.source.same_presentation(&g.source) || !h.target.same_presentation(&g.target) {
            return Err(Error::Boundary(format!(
                "`{}` does not have the shape of `{}`",
                h.name, g.name
            )));
        }
        let id_x = Functor::identity(&k.source);
        let id_a = Functor::identity(&g.source);
        let nt = |tag: &str, src: Functor, tgt: Functor, comps: BTreeMap<String, String>| {
            NatTrans::new(format!("{tag}[{name}]"), src, tgt, comps)
        };
        let rho = nt("rho", id_x.clone(), compose_functors(&g, &k)?, comps.rho)?;
        let eps = nt("eps", compose_functors(&k, &g)?, id_a.clone(), comps.eps)?;
        let omega = nt("omega", g.clone(), h.clone(), comps.omega)?;
        let chi = nt("chi", h.clone(), g.clone(), comps.chi)?;
        let theta101 = nt("theta101", id_x, compose_functors(&h, &k)?, comps.theta101)?;
        let theta010 = nt("theta010", id_a, compose_functors(&k, &h)?, comps.theta010)?;
        Ok(NormalColaxCoalgebra {
            name,
            g,
            k,
            h,
            rho,
            eps,
            omega,
            chi,
            theta101,
            theta010,
        })
    }

    pub fn x_cat(&self) -> &crate::FinCategory {
        &self.k.source
    }

    pub fn a_cat(&self) -> &crate::FinCategory {
        &self.g.source
    }
}

/// The normal coalgebra carried by any category: G = K = H = Id with every
/// transformation an identity.
pub fn identity_normal(cat: &crate::FinCategory) -> Result<NormalColaxCoalgebra> {
    let ident = Functor::identity(cat);
    let ids: BTreeMap<String, String> = cat
        .objects()
        .map(|o| Ok((o.to_string(), cat.id_of(o)?.to_string())))
        .collect::<Result<_>>()?;
    NormalColaxCoalgebra::from_components(
        format!("id-normal({})", cat.name),
        ident.clone(),
        ident.clone(),
        ident,
        NormalComponents {
            rho: ids.clone(),
            eps: ids.clone(),
            omega: ids.clone(),
            chi: ids.clone(),
            theta101: ids.clone(),
            theta010: ids,
        },
    )
}

/// Flatten a normal coalgebra into the general shape: both comparison
/// comonads become identities and all remaining components are identities.
pub fn to_general(n: &NormalColaxCoalgebra) -> Result<ColaxDCoalgebra> {
    let xc = n.x_cat();
    let ac = n.a_cat();
    let ids_on = |cat: &crate::FinCategory| -> Result<BTreeMap<String, String>> {
        cat.objects()
            .map(|o| Ok((o.to_string(), cat.id_of(o)?.to_string())))
            .collect()
    };
    let ids_after = |f: &Functor| -> Result<BTreeMap<String, String>> {
        f.source
            .objects()
            .map(|o| Ok((o.to_string(), f.target.id_of(f.ob(o)?)?.to_string())))
            .collect()
    };
    let comp_table = |t: &NatTrans| -> BTreeMap<String, String> {
        t.component_entries()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect()
    };
    let comps = CoalgebraComponents {
        eta: comp_table(&n.rho),
        chi: comp_table(&n.chi),
        omega: comp_table(&n.omega),
        eps: comp_table(&n.eps),
        zeta0: ids_on(ac)?,
        zeta1: ids_on(xc)?,
        theta100: ids_on(xc)?,
        theta110: ids_after(&n.k)?,
        theta101: comp_table(&n.theta101),
        theta111: ids_after(&n.k)?,
        theta000: ids_after(&n.h)?,
        theta010: comp_table(&n.theta010),
        theta001: ids_after(&n.h)?,
        theta011: ids_on(ac)?,
    };
    ColaxDCoalgebra::from_components(
        format!("general({})", n.name),
        n.g.clone(),
        Functor::identity(xc),
        n.k.clone(),
        n.h.clone(),
        Functor::identity(ac),
        comps,
    )
}

/// The labels `validate_normal` reports, in order, after the structural and
/// naturality items.
pub const NORMAL_LABELS: [&str; 12] = [
    "normalcoh",
    "normalcoh2",
    "normalthetaeq1X",
    "normalthetaeq2X",
    "normalthetaeq3X",
    "normalthetaeq1A",
    "normalthetaeq2A",
    "normalthetaeq4A",
    "normalthetacompeq1",
    "normalthetacompeq2",
    "normalthetaX111",
    "normalthetaA010",
];

/// Run every law of a normal colax coalgebra: functor and naturality
/// structure, the twelve coherence equations, and agreement with the general
/// validator applied to the flattened coalgebra.
pub fn validate_normal(n: &NormalColaxCoalgebra) -> CheckReport {
    let mut report = CheckReport::new(format!("normal coalgebra {}", n.name));
    let xc = n.x_cat();
    let ac = n.a_cat();

    let mut w = Vec::new();
    for f in [&n.g, &n.k, &n.h] {
        for item in validate_functor(f).failures() {
            w.push(format!("{}: {}", f.name, item.witnesses.join("; ")));
        }
    }
    report.push_outcome("structural", w);

    for (tag, t) in [
        ("rho", &n.rho),
        ("eps", &n.eps),
        ("omega", &n.omega),
        ("chi", &n.chi),
        ("theta101", &n.theta101),
        ("theta010", &n.theta010),
    ] {
        let mut w = Vec::new();
        for item in validate_nat_trans(t).failures() {
            w.push(format!("{}: {}", item.label, item.witnesses.join("; ")));
        }
        report.push_outcome(format!("{tag}-naturality"), w);
    }

    let x_objs: Vec<String> = xc.objects().map(|s| s.to_string()).collect();
    let a_objs: Vec<String> = ac.objects().map(|s| s.to_string()).collect();
    let eq = |label: &str,
              objs: &[String],
              lhs: &dyn Fn(&str) -> Result<String>,
              rhs: &dyn Fn(&str) -> Result<String>,
              report: &mut CheckReport| {
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
        report.push_outcome(label, w);
    };

    // G(ε_A) ∘ ϱ_{G(A)} = 1 and χ_A ∘ ω_A = 1: both composites around the
    // adjunction collapse on G.
    eq(
        "normalcoh",
        &a_objs,
        &|a| xc.compose_seq(&[n.g.mor(n.eps.at(a)?)?, n.rho.at(n.g.ob(a)?)?]),
        &|a| Ok(xc.id_of(n.g.ob(a)?)?.to_string()),
        &mut report,
    );
    eq(
        "normalcoh2",
        &a_objs,
        &|a| xc.compose_seq(&[n.chi.at(a)?, n.omega.at(a)?]),
        &|a| Ok(xc.id_of(n.g.ob(a)?)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetaeq1X",
        &x_objs,
        &|x| xc.compose_seq(&[n.chi.at(n.k.ob(x)?)?, n.theta101.at(x)?]),
        &|x| Ok(n.rho.at(x)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetaeq2X",
        &x_objs,
        &|x| xc.compose_seq(&[n.omega.at(n.k.ob(x)?)?, n.rho.at(x)?]),
        &|x| Ok(n.theta101.at(x)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetaeq3X",
        &x_objs,
        &|x| ac.compose_seq(&[n.eps.at(n.k.ob(x)?)?, n.k.mor(n.rho.at(x)?)?]),
        &|x| Ok(ac.id_of(n.k.ob(x)?)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetaeq1A",
        &a_objs,
        &|a| Ok(n.rho.at(n.h.ob(a)?)?.to_string()),
        &|a| xc.compose_seq(&[n.g.mor(n.theta010.at(a)?)?, n.chi.at(a)?]),
        &mut report,
    );
    eq(
        "normalthetaeq2A",
        &a_objs,
        &|a| xc.compose_seq(&[n.omega.at(a)?, n.chi.at(a)?]),
        &|a| Ok(xc.id_of(n.h.ob(a)?)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetaeq4A",
        &a_objs,
        &|a| ac.compose_seq(&[n.eps.at(a)?, n.k.mor(n.chi.at(a)?)?, n.theta010.at(a)?]),
        &|a| Ok(ac.id_of(a)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetacompeq1",
        &a_objs,
        &|a| Ok(n.k.mor(n.omega.at(a)?)?.to_string()),
        &|a| ac.compose_seq(&[n.theta010.at(a)?, n.eps.at(a)?]),
        &mut report,
    );
    eq(
        "normalthetacompeq2",
        &a_objs,
        &|a| xc.compose_seq(&[n.h.mor(n.eps.at(a)?)?, n.theta101.at(n.g.ob(a)?)?]),
        &|a| Ok(n.omega.at(a)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetaX111",
        &x_objs,
        &|x| Ok(n.k.mor(n.theta101.at(x)?)?.to_string()),
        &|x| Ok(n.theta010.at(n.k.ob(x)?)?.to_string()),
        &mut report,
    );
    eq(
        "normalthetaA010",
        &a_objs,
        &|a| Ok(n.h.mor(n.theta010.at(a)?)?.to_string()),
        &|a| Ok(n.theta101.at(n.h.ob(a)?)?.to_string()),
        &mut report,
    );

    let mut w = Vec::new();
    match to_general(n) {
        Ok(co) => {
            for item in validate_coalgebra(&co).failures() {
                w.push(format!("{}: {}", item.label, item.witnesses.join("; ")));
                if w.len() >= 6 {
                    break;
                }
            }
        }
        Err(e) => w.push(format!("does not flatten: {e}")),
    }
    report.push_outcome("general-embedding", w);

    report
}

/// Dress an adjunction K ⊣ G as a normal coalgebra. ω and χ supply the
/// factorization of G through H; θ¹⁰¹ is forced as ω_{K(X)} ∘ ϱ_X, and
/// θ⁰¹⁰_A is found by scanning hom(A, KH(A)) for a component satisfying the
/// two laws that pin it down, taking the first in morphism order.
pub fn from_adjunction(
    adj: &Adjunction,
    omega: &NatTrans,
    chi: &NatTrans,
) -> Result<NormalColaxCoalgebra> {
    let k = adj.left.clone();
    let g = adj.right.clone();
    let h = omega.tgt_functor.clone();
    if !omega.src_functor.extensionally_equal(&g) {
        return Err(Error::Boundary(format!(
            "`{}` does not start at `{}`",
            omega.name, g.name
        )));
    }
    if !chi.src_functor.extensionally_equal(&h) || !chi.tgt_functor.extensionally_equal(&g) {
        return Err(Error::Boundary(format!(
            "`{}` does not run `{}` back to `{}`",
            chi.name, h.name, g.name
        )));
    }
    let xc = &k.source;
    let ac = &g.source;

    let mut theta101 = BTreeMap::new();
    for x in xc.objects() {
        let comp = xc.compose(omega.at(k.ob(x)?)?, adj.unit.at(x)?)?;
        theta101.insert(x.to_string(), comp.to_string());
    }

    let mut theta010 = BTreeMap::new();
    for a in ac.objects() {
        let kha = k.ob(h.ob(a)?)?;
        let mut found = None;
        for t in ac.hom(a, kha)? {
            let retracts =
                ac.compose_seq(&[adj.counit.at(a)?, k.mor(chi.at(a)?)?, t])? == *ac.id_of(a)?;
            let lifts = xc.compose(g.mor(t)?, chi.at(a)?)? == adj.unit.at(h.ob(a)?)?;
            if retracts && lifts {
                found = Some(t.to_string());
                break;
            }
        }
        match found {
            Some(t) => {
                theta010.insert(a.to_string(), t);
            }
            None => {
                return Err(Error::Construction(format!(
                    "no comparison component at `{a}`: nothing in hom({a}, {kha}) satisfies both laws"
                )));
            }
        }
    }

    NormalColaxCoalgebra::from_components(
        format!("normal({})", adj.name),
        g,
        k,
        h,
        NormalComponents {
            rho: adj
                .unit
                .component_entries()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            eps: adj
                .counit
                .component_entries()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            omega: omega
                .component_entries()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            chi: chi
                .component_entries()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
            theta101,
            theta010,
        },
    )
}

/// Strip a normal coalgebra back to its adjunction K ⊣ G.
pub fn to_adjunction(n: &NormalColaxCoalgebra) -> Adjunction {
    Adjunction {
        name: format!("adj({})", n.name),
        left: n.k.clone(),
        right: n.g.clone(),
        unit: n.rho.clone(),
        counit: n.eps.clone(),
    }
}

/// Check whether `left ⊣ right`, `right ⊣ left`, or both hold, searching
/// exhaustively for the units and counits.
pub fn check_frobenius(left: &Functor, right: &Functor, budget: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("frobenius check for {} and {}", left.name, right.name));
    let fwd = search_adjunction(left, right, budget)?;
    let bwd = search_adjunction(right, left, budget)?;
    report.push_outcome(
        "left-adjoint",
        if fwd.is_some() {
            Vec::new()
        } else {
            vec![format!("no adjunction `{}` ⊣ `{}`", left.name, right.name)]
        },
    );
    report.push_outcome(
        "right-adjoint",
        if bwd.is_some() {
            Vec::new()
        } else {
            vec![format!("no adjunction `{}` ⊣ `{}`", right.name, left.name)]
        },
    );
    report.push_outcome(
        "frobenius",
        if fwd.is_some() && bwd.is_some() {
            Vec::new()
        } else {
            vec!["the two functors are not adjoint on both sides".into()]
        },
    );
    Ok(report)
}

/// Find the left adjoint of G by constructing a universal arrow at every
/// object: a pair (a, u : x -> G(a)) through which every arrow into the image
/// of G factors uniquely. Returns None when some object has no universal
/// arrow, so G has no left adjoint.
pub fn brute_force_left_adjoint(g: &Functor, budget: usize) -> Result<Option<Adjunction>> {
    let ac = &g.source;
    let xc = &g.target;
    let mut steps = 0usize;
    let bump = |steps: &mut usize| -> Result<()> {
        *steps += 1;
        if *steps > budget {
            return Err(Error::BudgetExceeded(format!(
                "universal-arrow search for `{}` passed {budget} steps",
                g.name
            )));
        }
        Ok(())
    };

    let mut k_ob = BTreeMap::new();
    let mut unit = BTreeMap::new();
    'next_x: for x in xc.objects() {
        for a in ac.objects() {
            'next_u: for u in xc.hom(x, g.ob(a)?)? {
                for b in ac.objects() {
                    for v in xc.hom(x, g.ob(b)?)? {
                        let mut hits = 0usize;
                        for w in ac.hom(a, b)? {
                            bump(&mut steps)?;
                            if xc.compose(g.mor(w)?, u)? == v {
                                hits += 1;
                            }
                        }
                        if hits != 1 {
                            continue 'next_u;
                        }
                    }
                }
                k_ob.insert(x.to_string(), a.to_string());
                unit.insert(x.to_string(), u.to_string());
                continue 'next_x;
            }
        }
        return Ok(None);
    }

    // Extend to morphisms through the universal property: K(f) is the unique
    // arrow whose G image translates one universal arrow into the other.
    let mut k_mor = BTreeMap::new();
    for m in xc.non_identity_morphisms() {
        let (x, y) = (xc.src(m)?, xc.tgt(m)?);
        let v = xc.compose(&unit[y], m)?.to_string();
        let mut image = None;
        for w in ac.hom(&k_ob[x], &k_ob[y])? {
            bump(&mut steps)?;
            if xc.compose(g.mor(w)?, &unit[x])? == v {
                image = Some(w.to_string());
                break;
            }
        }
        match image {
            Some(w) => {
                k_mor.insert(m.to_string(), w);
            }
            None => {
                return Err(Error::Construction(format!(
                    "universal arrow at `{x}` does not extend `{m}`"
                )));
            }
        }
    }
    let k = Functor::new(
        format!("ladj({})", g.name),
        xc.clone(),
        ac.clone(),
        k_ob.clone(),
        k_mor,
    )?;

    let mut counit = BTreeMap::new();
    for a in ac.objects() {
        let ga = g.ob(a)?;
        let mut comp = None;
        for w in ac.hom(&k_ob[ga], a)? {
            bump(&mut steps)?;
            if xc.compose(g.mor(w)?, &unit[ga])? == xc.id_of(ga)? {
                comp = Some(w.to_string());
                break;
            }
        }
        match comp {
            Some(w) => {
                counit.insert(a.to_string(), w);
            }
            None => {
                return Err(Error::Construction(format!(
                    "universal arrow at `{ga}` yields no counit at `{a}`"
                )));
            }
        }
    }

    let unit_nat = NatTrans::new(
        format!("unit[ladj({})]", g.name),
        Functor::identity(xc),
        compose_functors(g, &k)?,
        unit,
    )?;
    let counit_nat = NatTrans::new(
        format!("counit[ladj({})]", g.name),
        compose_functors(&k, g)?,
        Functor::identity(ac),
        counit,
    )?;
    Ok(Some(Adjunction {
        name: format!("ladj({})", g.name),
        left: k,
        right: g.clone(),
        unit: unit_nat,
        counit: counit_nat,
    }))
}

// ---------------------------------------------------------------------------
// The monad on pairs of categories sending (X, Y) to (X, X+Y).
// ---------------------------------------------------------------------------

fn inj_mor(tag: &str, cat: &crate::FinCategory, m: &str) -> Result<String> {
    let s = cat.src(m)?;
    if cat.id_of(s)? == m {
        Ok(format!("id_{tag}{s}"))
    } else {
        Ok(format!("{tag}{m}"))
    }
}

/// The coproduct of two categories, with objects and morphisms tagged `l_`
/// and `r_`.
pub fn coproduct(
    x: &crate::FinCategory,
    y: &crate::FinCategory,
    budget: usize,
) -> Result<crate::FinCategory> {
    if x.morphism_count() + y.morphism_count() > budget {
        return Err(Error::BudgetExceeded(format!(
            "coproduct of `{}` and `{}` needs more than {budget} morphisms",
            x.name, y.name
        )));
    }
    let mut total = crate::FinCategory::new(format!("({}+{})", x.name, y.name));
    for (tag, part) in [("l_", x), ("r_", y)] {
        for o in part.objects() {
            total.add_object(&format!("{tag}{o}"))?;
        }
        for m in part.non_identity_morphisms() {
            total.add_morphism(&format!("{tag}{m}"), &format!("{tag}{}", part.src(m)?), &format!("{tag}{}", part.tgt(m)?))?;
        }
        for f in part.non_identity_morphisms() {
            for g2 in part.non_identity_morphisms() {
                if part.tgt(f)? != part.src(g2)? {
                    continue;
                }
                let h = part.compose(g2, f)?;
                total.set_compose(
                    &format!("{tag}{g2}"),
                    &format!("{tag}{f}"),
                    &inj_mor(tag, part, h)?,
                )?;
            }
        }
    }
    Ok(total)
}

fn surgery(
    name: String,
    src: &crate::FinCategory,
    tgt: &crate::FinCategory,
    rule: &dyn Fn(&str) -> String,
) -> Result<Functor> {
    let obj_map = src
        .objects()
        .map(|o| (o.to_string(), rule(o)))
        .collect::<BTreeMap<_, _>>();
    let mut mor_map = BTreeMap::new();
    for m in src.non_identity_morphisms() {
        mor_map.insert(m.to_string(), rule(m));
    }
    Functor::new(name, src.clone(), tgt.clone(), obj_map, mor_map)
}

fn mult_name(s: &str) -> String {
    if let Some(rest) = s.strip_prefix("r_l_") {
        format!("l_{rest}")
    } else if let Some(rest) = s.strip_prefix("r_r_") {
        format!("r_{rest}")
    } else {
        s.to_string()
    }
}

fn unit_image_name(s: &str) -> String {
    if let Some(rest) = s.strip_prefix("r_") {
        format!("r_r_{rest}")
    } else {
        s.to_string()
    }
}

fn flip_name(s: &str) -> String {
    if let Some(rest) = s.strip_prefix("r_l_") {
        format!("l_{rest}")
    } else if s.strip_prefix("r_r_").is_some() {
        s.to_string()
    } else {
        format!("r_{s}")
    }
}

/// The second components of the structure maps of the pair monad at one pair
/// (X, Y), all as functors between iterated coproducts.
pub struct PairMonadPieces {
    /// X+Y, the second component of T(X, Y).
    pub xy: crate::FinCategory,
    /// X+(X+Y).
    pub xxy: crate::FinCategory,
    /// X+(X+(X+Y)).
    pub xxxy: crate::FinCategory,
    /// Multiplication X+(X+Y) -> X+Y.
    pub mult: Functor,
    /// The T image of the unit, X+Y -> X+(X+Y).
    pub t_unit: Functor,
    /// The unit at T, X+Y -> X+(X+Y): the right injection.
    pub unit_t: Functor,
    /// The involution of X+(X+Y) exchanging the two X summands.
    pub flip: Functor,
    /// The T image of the multiplication, X+(X+(X+Y)) -> X+(X+Y).
    pub t_mult: Functor,
    /// The multiplication at T, X+(X+(X+Y)) -> X+(X+Y).
    pub mult_t: Functor,
    /// The plain unit second component Y -> X+Y.
    pub unit: Functor,
}

/// Materialize the structure maps at one pair.
pub fn pair_monad_pieces(
    x: &crate::FinCategory,
    y: &crate::FinCategory,
    budget: usize,
) -> Result<PairMonadPieces> {
    let xy = coproduct(x, y, budget)?;
    let xxy = coproduct(x, &xy, budget)?;
    let xxxy = coproduct(x, &xxy, budget)?;
    let mult = surgery(format!("mult({})", xy.name), &xxy, &xy, &mult_name)?;
    let t_unit = surgery(format!("tunit({})", xy.name), &xy, &xxy, &unit_image_name)?;
    let unit_t = surgery(format!("unitt({})", xy.name), &xy, &xxy, &|s| {
        format!("r_{s}")
    })?;
    let flip = surgery(format!("flip({})", xy.name), &xxy, &xxy, &flip_name)?;
    let t_mult = surgery(format!("tmult({})", xy.name), &xxxy, &xxy, &|s| {
        if let Some(rest) = s.strip_prefix("r_") {
            format!("r_{}", mult_name(rest))
        } else {
            s.to_string()
        }
    })?;
    let mult_t = surgery(format!("multt({})", xy.name), &xxxy, &xxy, &mult_name)?;
    let unit = surgery(format!("unit({})", xy.name), y, &xy, &|s| format!("r_{s}"))?;
    Ok(PairMonadPieces {
        xy,
        xxy,
        xxxy,
        mult,
        t_unit,
        unit_t,
        flip,
        t_mult,
        mult_t,
        unit,
    })
}

/// The second component of the T image of a pair morphism (f, g): the
/// coproduct functor f+g.
pub fn coproduct_functor(
    f: &Functor,
    g: &Functor,
    src_cop: &crate::FinCategory,
    tgt_cop: &crate::FinCategory,
) -> Result<Functor> {
    let mut obj_map = BTreeMap::new();
    for o in f.source.objects() {
        obj_map.insert(format!("l_{o}"), format!("l_{}", f.ob(o)?));
    }
    for o in g.source.objects() {
        obj_map.insert(format!("r_{o}"), format!("r_{}", g.ob(o)?));
    }
    let mut mor_map = BTreeMap::new();
    for m in f.source.non_identity_morphisms() {
        mor_map.insert(format!("l_{m}"), inj_mor("l_", &f.target, f.mor(m)?)?);
    }
    for m in g.source.non_identity_morphisms() {
        mor_map.insert(format!("r_{m}"), inj_mor("r_", &g.target, g.mor(m)?)?);
    }
    Functor::new(
        format!("({}+{})", f.name, g.name),
        src_cop.clone(),
        tgt_cop.clone(),
        obj_map,
        mor_map,
    )
}

/// Check the monad laws of the pair monad at the source and target pairs of
/// a pair morphism (f, g), the involution identities of the summand flip,
/// and naturality of multiplication and unit along (f, g).
pub fn check_pair_monad_laws(f: &Functor, g: &Functor, budget: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("pair monad at ({}, {})", f.name, g.name));
    let src = pair_monad_pieces(&f.source, &g.source, budget)?;
    let tgt = pair_monad_pieces(&f.target, &g.target, budget)?;

    let mut w = Vec::new();
    for (side, p) in [("source", &src), ("target", &tgt)] {
        for cat in [&p.xy, &p.xxy, &p.xxxy] {
            for item in validate_category(cat).failures() {
                w.push(format!("{side} {}: {}", cat.name, item.witnesses.join("; ")));
            }
        }
        for func in [&p.mult, &p.t_unit, &p.unit_t, &p.flip, &p.t_mult, &p.mult_t, &p.unit] {
            for item in validate_functor(func).failures() {
                w.push(format!("{side} {}: {}", func.name, item.witnesses.join("; ")));
            }
        }
    }
    report.push_outcome("structural", w);

    let pair_eq = |label: &str,
                   check: &dyn Fn(&PairMonadPieces) -> Result<Vec<String>>,
                   report: &mut CheckReport| {
        let mut w = Vec::new();
        for (side, p) in [("source", &src), ("target", &tgt)] {
            match check(p) {
                Ok(mut ws) => w.extend(ws.drain(..).map(|s| format!("{side} pair: {s}"))),
                Err(e) => w.push(format!("{side} pair does not assemble: {e}")),
            }
        }
        report.push_outcome(label, w);
    };

    let ext = |lhs: &Functor, rhs: &Functor| -> Vec<String> {
        if lhs.extensionally_equal(rhs) {
            Vec::new()
        } else {
            vec![format!("`{}` and `{}` disagree", lhs.name, rhs.name)]
        }
    };

    pair_eq(
        "assoc",
        &|p| {
            Ok(ext(
                &compose_functors(&p.mult, &p.t_mult)?,
                &compose_functors(&p.mult, &p.mult_t)?,
            ))
        },
        &mut report,
    );
    pair_eq(
        "left-unit",
        &|p| {
            Ok(ext(
                &compose_functors(&p.mult, &p.t_unit)?,
                &Functor::identity(&p.xy),
            ))
        },
        &mut report,
    );
    pair_eq(
        "right-unit",
        &|p| {
            Ok(ext(
                &compose_functors(&p.mult, &p.unit_t)?,
                &Functor::identity(&p.xy),
            ))
        },
        &mut report,
    );
    pair_eq(
        "flip-involution",
        &|p| {
            Ok(ext(
                &compose_functors(&p.flip, &p.flip)?,
                &Functor::identity(&p.xxy),
            ))
        },
        &mut report,
    );
    pair_eq(
        "flip-exchange",
        &|p| {
            let mut w = ext(&compose_functors(&p.flip, &p.t_unit)?, &p.unit_t);
            w.extend(ext(&compose_functors(&p.flip, &p.unit_t)?, &p.t_unit));
            w.extend(ext(&compose_functors(&p.mult, &p.flip)?, &p.mult));
            Ok(w)
        },
        &mut report,
    );

    // Naturality along (f, g): the squares against multiplication and unit.
    let t1 = coproduct_functor(f, g, &src.xy, &tgt.xy)?;
    let t2 = coproduct_functor(f, &t1, &src.xxy, &tgt.xxy)?;
    let mut w = Vec::new();
    match (
        compose_functors(&tgt.mult, &t2),
        compose_functors(&t1, &src.mult),
    ) {
        (Ok(lhs), Ok(rhs)) => w.extend(ext(&lhs, &rhs)),
        _ => w.push("multiplication square does not assemble".into()),
    }
    report.push_outcome("mult-naturality", w);

    let mut w = Vec::new();
    match (
        compose_functors(&t1, &src.unit),
        compose_functors(&tgt.unit, g),
    ) {
        (Ok(lhs), Ok(rhs)) => w.extend(ext(&lhs, &rhs)),
        _ => w.push("unit square does not assemble".into()),
    }
    report.push_outcome("unit-naturality", w);

    Ok(report)
}
