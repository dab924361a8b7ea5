//! The comma category of a functor, its projections, and the comonad
//! structure this construction carries on the square 2-category.
//!
//! For G : A -> X the comma category has objects (X|f|A) with f : X -> G(A)
//! and morphisms (x|a) : (X|f|A) -> (X'|f'|A') subject to G(a)∘f = f'∘x.
//! The endofunctor sends a square (U, β, F) : P -> G to the induced functor
//! between comma categories; its counit is the square (d1, δ, d0) over the
//! identity on the comma category, and its comultiplication is the section
//! X ↦ (X|id|X) into the comma category of the identity functor.

use std::collections::BTreeMap;

use crate::category::{
    compose_functors, validate_category, validate_functor, validate_nat_trans, ColaxCell,
    FinCategory, Functor, NatTrans,
};
use crate::report::CheckReport;
use crate::{Error, Result};

/// A comma category bundled with its projections and the canonical
/// transformation d1 ⇒ G∘d0 whose component at (X|f|A) is f itself.
#[derive(Debug, Clone)]
pub struct CommaBundle {
    pub total: FinCategory,
    /// Projection to the source of G: (X|f|A) ↦ A, (x|a) ↦ a.
    pub d0: Functor,
    /// Projection to the target of G: (X|f|A) ↦ X, (x|a) ↦ x.
    pub d1: Functor,
    /// d1 ⇒ G∘d0 with component f at (X|f|A).
    pub delta: NatTrans,
    /// The functor the comma category was built from.
    pub base: Functor,
    /// object id -> (X part, f part, A part)
    obj_parts: BTreeMap<String, (String, String, String)>,
    /// (x, f, a) -> object id
    obj_ix: BTreeMap<(String, String, String), String>,
    /// morphism id -> (x part, a part); identities included
    mor_parts: BTreeMap<String, (String, String)>,
    /// (src id, tgt id, x, a) -> morphism id; identities included
    mor_ix: BTreeMap<(String, String, String, String), String>,
}

impl CommaBundle {
    pub fn object_id(&self, x: &str, f: &str, a: &str) -> Result<&str> {
        self.obj_ix
            .get(&(x.to_string(), f.to_string(), a.to_string()))
            .map(|s| s.as_str())
            .ok_or_else(|| {
                Error::UnknownObject(format!("({x}|{f}|{a})"), self.total.name.clone())
            })
    }

    pub fn object_parts(&self, id: &str) -> Result<(&str, &str, &str)> {
        self.obj_parts
            .get(id)
            .map(|(x, f, a)| (x.as_str(), f.as_str(), a.as_str()))
            .ok_or_else(|| Error::UnknownObject(id.to_string(), self.total.name.clone()))
    }

    pub fn morphism_id(&self, src: &str, tgt: &str, x: &str, a: &str) -> Result<&str> {
        self.mor_ix
            .get(&(src.to_string(), tgt.to_string(), x.to_string(), a.to_string()))
            .map(|s| s.as_str())
            .ok_or_else(|| {
                Error::UnknownMorphism(
                    format!("({x}|{a})@{src}>{tgt}"),
                    self.total.name.clone(),
                )
            })
    }

    pub fn morphism_parts(&self, id: &str) -> Result<(&str, &str)> {
        self.mor_parts
            .get(id)
            .map(|(x, a)| (x.as_str(), a.as_str()))
            .ok_or_else(|| Error::UnknownMorphism(id.to_string(), self.total.name.clone()))
    }
}

/// Build the comma category of `g`, with projections and the canonical
/// transformation. Fails with a budget error once the object or morphism
/// count would exceed `budget`.
pub fn comma(g: &Functor, budget: usize) -> Result<CommaBundle> {
    let a_cat = &g.source;
    let x_cat = &g.target;
    let name = format!("comma({})", g.name);
    let mut total = FinCategory::new(name.clone());

    let mut obj_parts = BTreeMap::new();
    let mut obj_ix = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            for f in x_cat.hom(x, g.ob(a)?)? {
                let id = format!("({x}|{f}|{a})");
                if order.len() >= budget {
                    return Err(Error::BudgetExceeded(format!(
                        "{name} needs more than {budget} objects"
                    )));
                }
                total.add_object(&id)?;
                obj_parts.insert(id.clone(), (x.to_string(), f.to_string(), a.to_string()));
                obj_ix.insert((x.to_string(), f.to_string(), a.to_string()), id.clone());
                order.push(id);
            }
        }
    }

    let mut mor_parts = BTreeMap::new();
    let mut mor_ix = BTreeMap::new();
    for o in &order {
        let (x, _, a) = obj_parts[o].clone();
        let ident = format!("id_{o}");
        mor_parts.insert(ident.clone(), (format!("id_{x}"), format!("id_{a}")));
        mor_ix.insert(
            (o.clone(), o.clone(), format!("id_{x}"), format!("id_{a}")),
            ident,
        );
    }
    let mut nonid: Vec<(String, String, String)> = Vec::new(); // (id, src, tgt)
    for src in &order {
        let (x, f, a) = obj_parts[src].clone();
        for tgt in &order {
            let (x2, f2, a2) = obj_parts[tgt].clone();
            for xm in x_cat.hom(&x, &x2)? {
                for am in a_cat.hom(&a, &a2)? {
                    if x_cat.is_identity(xm)? && a_cat.is_identity(am)? && src == tgt {
                        continue;
                    }
                    let lhs = x_cat.compose(g.mor(am)?, &f)?;
                    let rhs = x_cat.compose(&f2, xm)?;
                    if lhs != rhs {
                        continue;
                    }
                    let id = format!("({xm}|{am})@{src}>{tgt}");
                    if total.morphism_count() >= budget {
                        return Err(Error::BudgetExceeded(format!(
                            "{name} needs more than {budget} morphisms"
                        )));
                    }
                    total.add_morphism(&id, src, tgt)?;
                    mor_parts.insert(id.clone(), (xm.to_string(), am.to_string()));
                    mor_ix.insert(
                        (src.clone(), tgt.clone(), xm.to_string(), am.to_string()),
                        id.clone(),
                    );
                    nonid.push((id, src.clone(), tgt.clone()));
                }
            }
        }
    }

    // Composition table over non-identity pairs; composites that collapse to
    // an identity pair land on the reserved identity morphism.
    let mut by_src: BTreeMap<&str, Vec<&(String, String, String)>> = BTreeMap::new();
    for entry in &nonid {
        by_src.entry(entry.1.as_str()).or_default().push(entry);
    }
    for (m1, src1, tgt1) in &nonid {
        if let Some(nexts) = by_src.get(tgt1.as_str()) {
            for (m2, _, tgt2) in nexts.iter() {
                let (x1, a1) = mor_parts[m1].clone();
                let (x2, a2) = mor_parts[m2].clone();
                let xc = x_cat.compose(&x2, &x1)?.to_string();
                let ac = a_cat.compose(&a2, &a1)?.to_string();
                let key = (src1.clone(), tgt2.clone(), xc, ac);
                let h = mor_ix.get(&key).ok_or_else(|| {
                    Error::Construction(format!(
                        "composite of `{m2}` . `{m1}` leaves {name}"
                    ))
                })?;
                total.set_compose(m2, m1, h)?;
            }
        }
    }

    let d0 = {
        let obj_map = order
            .iter()
            .map(|o| (o.clone(), obj_parts[o].2.clone()))
            .collect();
        let mor_map = nonid
            .iter()
            .map(|(m, _, _)| (m.clone(), mor_parts[m].1.clone()))
            .collect();
        Functor::new(format!("d0[{name}]"), total.clone(), a_cat.clone(), obj_map, mor_map)?
    };
    let d1 = {
        let obj_map = order
            .iter()
            .map(|o| (o.clone(), obj_parts[o].0.clone()))
            .collect();
        let mor_map = nonid
            .iter()
            .map(|(m, _, _)| (m.clone(), mor_parts[m].0.clone()))
            .collect();
        Functor::new(format!("d1[{name}]"), total.clone(), x_cat.clone(), obj_map, mor_map)?
    };
    let delta = {
        let components = order
            .iter()
            .map(|o| (o.clone(), obj_parts[o].1.clone()))
            .collect();
        NatTrans::new(
            format!("delta[{name}]"),
            d1.clone(),
            compose_functors(g, &d0)?,
            components,
        )?
    };

    Ok(CommaBundle {
        total,
        d0,
        d1,
        delta,
        base: g.clone(),
        obj_parts,
        obj_ix,
        mor_parts,
        mor_ix,
    })
}

/// The arrow category of `cat`: the comma category of its identity functor.
pub fn arrow_category(cat: &FinCategory, budget: usize) -> Result<CommaBundle> {
    comma(&Functor::identity(cat), budget)
}

/// The section t ↦ (t|id_t|t) of both projections of `arrows`, which must be
/// the arrow category of `cat`.
pub fn unit_nu(cat: &FinCategory, arrows: &CommaBundle) -> Result<Functor> {
    let mut obj_map = BTreeMap::new();
    for t in cat.objects() {
        let ident = cat.id_of(t)?;
        obj_map.insert(t.to_string(), arrows.object_id(t, ident, t)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for m in cat.non_identity_morphisms() {
        let (s, t) = (cat.src(m)?, cat.tgt(m)?);
        let src = arrows.object_id(s, cat.id_of(s)?, s)?;
        let tgt = arrows.object_id(t, cat.id_of(t)?, t)?;
        mor_map.insert(m.to_string(), arrows.morphism_id(src, tgt, m, m)?.to_string());
    }
    Functor::new(format!("nu({})", cat.name), cat.clone(), arrows.total.clone(), obj_map, mor_map)
}

/// The functor into the comma category induced by a square (U, β, F) : P -> G
/// out of the square's own corner: E ↦ (U(P(E)) | β_E | F(E)) on objects and
/// e ↦ (U(P(e)) | F(e)) on morphisms.
pub fn factor_through_comma(cell: &ColaxCell, tgt_comma: &CommaBundle) -> Result<Functor> {
    if !tgt_comma.base.extensionally_equal(&cell.codomain) {
        return Err(Error::Boundary(format!(
            "`{}` is not the comma category of the codomain of `{}`",
            tgt_comma.total.name, cell.name
        )));
    }
    let corner = &cell.domain.source;
    let mut obj_map = BTreeMap::new();
    for e in corner.objects() {
        let x = cell.bottom.ob(cell.domain.ob(e)?)?;
        let a = cell.top.ob(e)?;
        obj_map.insert(
            e.to_string(),
            tgt_comma.object_id(x, cell.fill.at(e)?, a)?.to_string(),
        );
    }
    let mut mor_map = BTreeMap::new();
    for m in corner.non_identity_morphisms() {
        let src = &obj_map[corner.src(m)?];
        let tgt = &obj_map[corner.tgt(m)?];
        let x = cell.bottom.mor(cell.domain.mor(m)?)?;
        let a = cell.top.mor(m)?;
        mor_map.insert(
            m.to_string(),
            tgt_comma.morphism_id(src, tgt, x, a)?.to_string(),
        );
    }
    Functor::new(
        format!("fac({})", cell.name),
        corner.clone(),
        tgt_comma.total.clone(),
        obj_map,
        mor_map,
    )
}

/// The functor induced on comma categories by a square (U, β, F) : P -> G:
/// objects (B|p|E) ↦ (U(B) | β_E∘U(p) | F(E)), morphisms (u|e) ↦ (U(u)|F(e)).
pub fn d_on_onecell(
    cell: &ColaxCell,
    src_comma: &CommaBundle,
    tgt_comma: &CommaBundle,
) -> Result<Functor> {
    if !src_comma.base.extensionally_equal(&cell.domain) {
        return Err(Error::Boundary(format!(
            "`{}` is not the comma category of the domain of `{}`",
            src_comma.total.name, cell.name
        )));
    }
    if !tgt_comma.base.extensionally_equal(&cell.codomain) {
        return Err(Error::Boundary(format!(
            "`{}` is not the comma category of the codomain of `{}`",
            tgt_comma.total.name, cell.name
        )));
    }
    let x_cat = &cell.codomain.target;
    let mut obj_map = BTreeMap::new();
    for o in src_comma.total.objects() {
        let (b, p, e) = src_comma.object_parts(o)?;
        let img_x = cell.bottom.ob(b)?;
        let img_f = x_cat.compose(cell.fill.at(e)?, cell.bottom.mor(p)?)?;
        let img_a = cell.top.ob(e)?;
        obj_map.insert(o.to_string(), tgt_comma.object_id(img_x, img_f, img_a)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for m in src_comma.total.non_identity_morphisms() {
        let (u, e) = src_comma.morphism_parts(m)?;
        let src = &obj_map[src_comma.total.src(m)?];
        let tgt = &obj_map[src_comma.total.tgt(m)?];
        mor_map.insert(
            m.to_string(),
            tgt_comma
                .morphism_id(src, tgt, cell.bottom.mor(u)?, cell.top.mor(e)?)?
                .to_string(),
        );
    }
    Functor::new(
        format!("D({})", cell.name),
        src_comma.total.clone(),
        tgt_comma.total.clone(),
        obj_map,
        mor_map,
    )
}

/// Promote `d_on_onecell` to a square: the induced functor sits on top and
/// bottom of an identity fill.
pub fn d_cell(
    cell: &ColaxCell,
    src_comma: &CommaBundle,
    tgt_comma: &CommaBundle,
) -> Result<ColaxCell> {
    let f = d_on_onecell(cell, src_comma, tgt_comma)?;
    let mut fill = BTreeMap::new();
    for o in src_comma.total.objects() {
        fill.insert(o.to_string(), format!("id_{}", f.ob(o)?));
    }
    ColaxCell::build(
        format!("Dcell({})", cell.name),
        Functor::identity(&src_comma.total),
        Functor::identity(&tgt_comma.total),
        f.clone(),
        f,
        fill,
    )
}

/// The comma-category transformation induced by a 2-cell (θ, τ) between
/// parallel squares: its component at (B|p|E) is the pair (θ_B | τ_E).
pub fn d_on_twocell(
    bottom: &NatTrans,
    top: &NatTrans,
    src_cell: &ColaxCell,
    tgt_cell: &ColaxCell,
    src_comma: &CommaBundle,
    tgt_comma: &CommaBundle,
) -> Result<NatTrans> {
    let fsrc = d_on_onecell(src_cell, src_comma, tgt_comma)?;
    let ftgt = d_on_onecell(tgt_cell, src_comma, tgt_comma)?;
    let mut components = BTreeMap::new();
    for o in src_comma.total.objects() {
        let (b, _, e) = src_comma.object_parts(o)?;
        let comp = tgt_comma.morphism_id(fsrc.ob(o)?, ftgt.ob(o)?, bottom.at(b)?, top.at(e)?)?;
        components.insert(o.to_string(), comp.to_string());
    }
    NatTrans::new(
        format!("D({}|{})", bottom.name, top.name),
        fsrc,
        ftgt,
        components,
    )
}

/// The counit square at G: (d1, δ, d0) from the identity on the comma
/// category down to G.
pub fn counit_cell(bundle: &CommaBundle) -> Result<ColaxCell> {
    let mut fill = BTreeMap::new();
    for o in bundle.total.objects() {
        let (_, f, _) = bundle.object_parts(o)?;
        fill.insert(o.to_string(), f.to_string());
    }
    ColaxCell::build(
        format!("counit({})", bundle.base.name),
        Functor::identity(&bundle.total),
        bundle.base.clone(),
        bundle.d0.clone(),
        bundle.d1.clone(),
        fill,
    )
}

/// The comultiplication section ξ : comma(G) -> comma(G)², where the square
/// is the arrow category of the comma category.
pub fn comultiplication_xi(bundle: &CommaBundle, square: &CommaBundle) -> Result<Functor> {
    unit_nu(&bundle.total, square)
}

/// The multiplication comma(G)² -> comma(G): an arrow-category object
/// ((X|f|A), (x|a), (X'|f'|A')) collapses to (X | f'∘x | A'), and a square
/// (u, v) between arrows collapses to the pair (x part of u | a part of v).
pub fn multiplication(bundle: &CommaBundle, square: &CommaBundle) -> Result<Functor> {
    let x_cat = &bundle.base.target;
    let mut obj_map = BTreeMap::new();
    for o in square.total.objects() {
        let (src_obj, m, tgt_obj) = square.object_parts(o)?;
        let (x, _, _) = bundle.object_parts(src_obj)?;
        let (_, f2, a2) = bundle.object_parts(tgt_obj)?;
        let (xm, _) = bundle.morphism_parts(m)?;
        let collapsed = x_cat.compose(f2, xm)?;
        obj_map.insert(o.to_string(), bundle.object_id(x, collapsed, a2)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for sm in square.total.non_identity_morphisms() {
        let (u, v) = square.morphism_parts(sm)?;
        let (ux, _) = bundle.morphism_parts(u)?;
        let (_, va) = bundle.morphism_parts(v)?;
        let src = &obj_map[square.total.src(sm)?];
        let tgt = &obj_map[square.total.tgt(sm)?];
        mor_map.insert(sm.to_string(), bundle.morphism_id(src, tgt, ux, va)?.to_string());
    }
    Functor::new(
        format!("mu[{}]", bundle.total.name),
        square.total.clone(),
        bundle.total.clone(),
        obj_map,
        mor_map,
    )
}

/// Check the comonad structure carried by the comma construction at `g`:
/// the comma category and its projections are well formed, the counit laws
/// hold against the multiplication and both projections, and the
/// comultiplication is coassociative (checked inside the doubly iterated
/// comma category).
pub fn check_comonad_laws(g: &Functor, budget: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("comma comonad of {}", g.name));
    let bundle = comma(g, budget)?;

    let cat_report = validate_category(&bundle.total);
    report.push_outcome(
        "comma-category",
        cat_report
            .failures()
            .map(|i| format!("{}: {}", i.label, i.witnesses.join("; ")))
            .collect(),
    );
    for (label, rep) in [
        ("d0", validate_functor(&bundle.d0)),
        ("d1", validate_functor(&bundle.d1)),
        ("delta", validate_nat_trans(&bundle.delta)),
    ] {
        report.push_outcome(
            label,
            rep.failures()
                .map(|i| format!("{}: {}", i.label, i.witnesses.join("; ")))
                .collect(),
        );
    }

    let square = arrow_category(&bundle.total, budget)?;
    let xi = comultiplication_xi(&bundle, &square)?;
    let mu = multiplication(&bundle, &square)?;

    // Counit against the multiplication: collapsing after the identity
    // section must be the identity.
    let mut w = Vec::new();
    let left = compose_functors(&mu, &xi)?;
    let ident = Functor::identity(&bundle.total);
    if !left.extensionally_equal(&ident) {
        for o in bundle.total.objects() {
            if left.ob(o)? != o {
                w.push(format!("object `{o}` collapses to `{}`", left.ob(o)?));
                break;
            }
        }
        for m in bundle.total.morphism_ids() {
            if left.mor(m)? != m {
                w.push(format!("morphism `{m}` collapses to `{}`", left.mor(m)?));
                break;
            }
        }
        if w.is_empty() {
            w.push("multiplication ∘ section differs from the identity".into());
        }
    }
    report.push_outcome("counit-left", w);

    // Counit against both projections of the square, and the canonical
    // transformation of the square restricted along the section.
    let mut w = Vec::new();
    for (proj, nm) in [(&square.d0, "inner"), (&square.d1, "outer")] {
        let composite = compose_functors(proj, &xi)?;
        if !composite.extensionally_equal(&ident) {
            w.push(format!("{nm} projection does not retract the section"));
        }
    }
    for o in bundle.total.objects() {
        let comp = square.delta.at(xi.ob(o)?)?;
        if comp != bundle.total.id_of(o)? {
            w.push(format!("canonical component at the section of `{o}` is `{comp}`"));
            break;
        }
    }
    report.push_outcome("counit-right", w);

    // Coassociativity: both ways of iterating the section into the cube
    // agree. The cube is the arrow category of the square.
    let cube = arrow_category(&square.total, budget)?;
    let xi_cell = ColaxCell::build(
        format!("xicell({})", g.name),
        Functor::identity(&bundle.total),
        Functor::identity(&square.total),
        xi.clone(),
        xi.clone(),
        bundle
            .total
            .objects()
            .map(|o| Ok((o.to_string(), format!("id_{}", xi.ob(o)?))))
            .collect::<Result<BTreeMap<_, _>>>()?,
    )?;
    let d_xi = d_on_onecell(&xi_cell, &square, &cube)?;
    let xi_square = unit_nu(&square.total, &cube)?;
    let lhs = compose_functors(&d_xi, &xi)?;
    let rhs = compose_functors(&xi_square, &xi)?;
    let mut w = Vec::new();
    if !lhs.extensionally_equal(&rhs) {
        for o in bundle.total.objects() {
            if lhs.ob(o)? != rhs.ob(o)? {
                w.push(format!(
                    "object `{o}`: `{}` vs `{}`",
                    lhs.ob(o)?,
                    rhs.ob(o)?
                ));
                break;
            }
        }
        if w.is_empty() {
            w.push("iterated sections disagree on a morphism".into());
        }
    }
    report.push_outcome("coassociativity", w);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_MORPHISM_BUDGET as BUDGET;

    fn terminal() -> FinCategory {
        let mut c = FinCategory::new("one");
        c.add_object("*").unwrap();
        c
    }

    fn walking_arrow() -> FinCategory {
        let mut c = FinCategory::new("two");
        c.add_object("0").unwrap();
        c.add_object("1").unwrap();
        c.add_morphism("u", "0", "1").unwrap();
        c
    }

    fn pick_one(cat: FinCategory, obj: &str) -> Functor {
        let one = terminal();
        let obj_map = [("*".to_string(), obj.to_string())].into_iter().collect();
        Functor::new(format!("pick{obj}"), one, cat, obj_map, BTreeMap::new()).unwrap()
    }

    #[test]
    fn comma_of_point_at_top_of_arrow() {
        let bundle = comma(&pick_one(walking_arrow(), "1"), BUDGET).unwrap();
        assert_eq!(bundle.total.object_count(), 2);
        assert_eq!(bundle.total.morphism_count(), 3);
        assert!(validate_category(&bundle.total).passed());
        assert!(validate_functor(&bundle.d0).passed());
        assert!(validate_functor(&bundle.d1).passed());
        assert!(validate_nat_trans(&bundle.delta).passed());
    }

    #[test]
    fn arrow_category_of_walking_arrow() {
        let bundle = arrow_category(&walking_arrow(), BUDGET).unwrap();
        assert_eq!(bundle.total.object_count(), 3);
        assert_eq!(bundle.total.morphism_count(), 6);
        assert!(validate_category(&bundle.total).passed());
    }

    #[test]
    fn multiplication_agrees_with_induced_functor_of_counit() {
        let g = pick_one(walking_arrow(), "1");
        let bundle = comma(&g, BUDGET).unwrap();
        let square = arrow_category(&bundle.total, BUDGET).unwrap();
        let direct = multiplication(&bundle, &square).unwrap();
        let via_cell = d_on_onecell(&counit_cell(&bundle).unwrap(), &square, &bundle).unwrap();
        assert!(direct.extensionally_equal(&via_cell));
    }

    #[test]
    fn comonad_laws_hold_for_identity_on_walking_arrow() {
        let g = Functor::identity(&walking_arrow());
        let report = check_comonad_laws(&g, BUDGET).unwrap();
        assert!(report.passed(), "{}", report.render());
    }
}
