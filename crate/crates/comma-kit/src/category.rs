//! Finite categories presented by explicit tables, plus functors, natural
//! transformations, and the colax-square calculus between them.
//!
//! Identifiers are opaque strings. Every object `o` owns the reserved
//! identity morphism `id_<o>`; composites involving identities are filled in
//! automatically, while every other composable pair must be given explicitly.
//! All collections iterate in insertion order, so a category built twice from
//! the same data is identical component for component. Validators never
//! repair a broken structure — they report each violated law with a witness.

use std::collections::BTreeMap;

use crate::report::CheckReport;
use crate::{Error, Result};

/// One morphism record: its id and the indices of its endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Mor {
    id: String,
    src: usize,
    tgt: usize,
}

/// A finite category: objects, morphisms, chosen identities, and a total
/// composition table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    pub name: String,
    objects: Vec<String>,
    morphisms: Vec<Mor>,
    obj_ix: BTreeMap<String, usize>,
    mor_ix: BTreeMap<String, usize>,
    /// object index -> index of its identity morphism
    identity: Vec<usize>,
    /// (g, f) -> g∘f, keyed by morphism indices with tgt(f) = src(g)
    compose: BTreeMap<(usize, usize), usize>,
}

impl FinCategory {
    pub fn new(name: impl Into<String>) -> Self {
        FinCategory {
            name: name.into(),
            objects: Vec::new(),
            morphisms: Vec::new(),
            obj_ix: BTreeMap::new(),
            mor_ix: BTreeMap::new(),
            identity: Vec::new(),
            compose: BTreeMap::new(),
        }
    }

    /// Add an object together with its reserved identity morphism `id_<id>`.
    pub fn add_object(&mut self, id: &str) -> Result<()> {
        if self.obj_ix.contains_key(id) || self.mor_ix.contains_key(id) {
            return Err(Error::DuplicateId(id.to_string(), self.name.clone()));
        }
        let ident = format!("id_{id}");
        if self.mor_ix.contains_key(&ident) || self.obj_ix.contains_key(&ident) {
            return Err(Error::DuplicateId(ident, self.name.clone()));
        }
        let oix = self.objects.len();
        self.objects.push(id.to_string());
        self.obj_ix.insert(id.to_string(), oix);
        let mix = self.morphisms.len();
        self.morphisms.push(Mor {
            id: ident.clone(),
            src: oix,
            tgt: oix,
        });
        self.mor_ix.insert(ident, mix);
        self.identity.push(mix);
        self.compose.insert((mix, mix), mix);
        Ok(())
    }

    /// Add a non-identity morphism. Composites with identities are recorded
    /// immediately; all other composites must be provided via `set_compose`.
    pub fn add_morphism(&mut self, id: &str, src: &str, tgt: &str) -> Result<()> {
        if id.starts_with("id_") {
            return Err(Error::Construction(format!(
                "morphism id `{id}` uses the reserved identity prefix `id_`"
            )));
        }
        if self.mor_ix.contains_key(id) || self.obj_ix.contains_key(id) {
            return Err(Error::DuplicateId(id.to_string(), self.name.clone()));
        }
        let s = self.obj_index(src)?;
        let t = self.obj_index(tgt)?;
        let mix = self.morphisms.len();
        self.morphisms.push(Mor {
            id: id.to_string(),
            src: s,
            tgt: t,
        });
        self.mor_ix.insert(id.to_string(), mix);
        self.compose.insert((self.identity[t], mix), mix);
        self.compose.insert((mix, self.identity[s]), mix);
        Ok(())
    }

    /// Record g∘f = h. Boundaries are checked; conflicting entries are
    /// rejected rather than overwritten.
    pub fn set_compose(&mut self, g: &str, f: &str, h: &str) -> Result<()> {
        let gi = self.mor_index(g)?;
        let fi = self.mor_index(f)?;
        let hi = self.mor_index(h)?;
        if self.morphisms[fi].tgt != self.morphisms[gi].src {
            return Err(Error::Boundary(format!(
                "`{g}` . `{f}` is not composable in `{}`",
                self.name
            )));
        }
        if self.morphisms[hi].src != self.morphisms[fi].src
            || self.morphisms[hi].tgt != self.morphisms[gi].tgt
        {
            return Err(Error::Boundary(format!(
                "`{h}` does not have the boundary of `{g}` . `{f}` in `{}`",
                self.name
            )));
        }
        if let Some(&prev) = self.compose.get(&(gi, fi)) {
            if prev != hi {
                return Err(Error::Construction(format!(
                    "conflicting composite for `{g}` . `{f}` in `{}`: `{}` vs `{h}`",
                    self.name, self.morphisms[prev].id
                )));
            }
            return Ok(());
        }
        self.compose.insert((gi, fi), hi);
        Ok(())
    }

    pub fn has_object(&self, id: &str) -> bool {
        self.obj_ix.contains_key(id)
    }

    pub fn has_morphism(&self, id: &str) -> bool {
        self.mor_ix.contains_key(id)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(|s| s.as_str())
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = &str> {
        self.morphisms.iter().map(|m| m.id.as_str())
    }

    pub fn non_identity_morphisms(&self) -> impl Iterator<Item = &str> {
        self.morphisms
            .iter()
            .enumerate()
            .filter(|(ix, _)| !self.identity.contains(ix))
            .map(|(_, m)| m.id.as_str())
    }

    pub fn is_identity(&self, m: &str) -> Result<bool> {
        let ix = self.mor_index(m)?;
        Ok(self.identity.contains(&ix))
    }

    pub fn id_of(&self, obj: &str) -> Result<&str> {
        let oix = self.obj_index(obj)?;
        Ok(&self.morphisms[self.identity[oix]].id)
    }

    pub fn src(&self, m: &str) -> Result<&str> {
        let ix = self.mor_index(m)?;
        Ok(&self.objects[self.morphisms[ix].src])
    }

    pub fn tgt(&self, m: &str) -> Result<&str> {
        let ix = self.mor_index(m)?;
        Ok(&self.objects[self.morphisms[ix].tgt])
    }

    /// g∘f, i.e. "first f, then g".
    pub fn compose(&self, g: &str, f: &str) -> Result<&str> {
        let gi = self.mor_index(g)?;
        let fi = self.mor_index(f)?;
        if self.morphisms[fi].tgt != self.morphisms[gi].src {
            return Err(Error::Boundary(format!(
                "`{g}` . `{f}` is not composable in `{}`",
                self.name
            )));
        }
        match self.compose.get(&(gi, fi)) {
            Some(&h) => Ok(&self.morphisms[h].id),
            None => Err(Error::Construction(format!(
                "no composite recorded for `{g}` . `{f}` in `{}`",
                self.name
            ))),
        }
    }

    /// Compose a sequence right to left: `compose_seq(&[h, g, f])` = h∘g∘f.
    pub fn compose_seq(&self, ids: &[&str]) -> Result<String> {
        let mut iter = ids.iter().rev();
        let first = iter
            .next()
            .ok_or_else(|| Error::Construction("empty composition sequence".into()))?;
        let mut acc = first.to_string();
        for g in iter {
            acc = self.compose(g, &acc)?.to_string();
        }
        Ok(acc)
    }

    /// All morphisms x -> y in insertion order.
    pub fn hom(&self, x: &str, y: &str) -> Result<Vec<&str>> {
        let xi = self.obj_index(x)?;
        let yi = self.obj_index(y)?;
        Ok(self
            .morphisms
            .iter()
            .filter(|m| m.src == xi && m.tgt == yi)
            .map(|m| m.id.as_str())
            .collect())
    }

    /// Every (src id, tgt id, morphism id) triple in insertion order.
    pub fn morphism_triples(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.morphisms.iter().map(move |m| {
            (
                self.objects[m.src].as_str(),
                self.objects[m.tgt].as_str(),
                m.id.as_str(),
            )
        })
    }

    /// Recorded composites as (g, f, h) id triples in table order.
    pub fn compose_entries(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.compose.iter().map(move |(&(g, f), &h)| {
            (
                self.morphisms[g].id.as_str(),
                self.morphisms[f].id.as_str(),
                self.morphisms[h].id.as_str(),
            )
        })
    }

    /// Structural equality ignoring the category name.
    pub fn same_presentation(&self, other: &FinCategory) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.compose == other.compose
    }

    fn obj_index(&self, id: &str) -> Result<usize> {
        self.obj_ix
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownObject(id.to_string(), self.name.clone()))
    }

    fn mor_index(&self, id: &str) -> Result<usize> {
        self.mor_ix
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownMorphism(id.to_string(), self.name.clone()))
    }
}

/// Check the category laws: boundary consistency of the table, totality over
/// composable pairs, identity laws, and associativity. Violations are
/// reported with the offending morphism triple, never repaired.
pub fn validate_category(c: &FinCategory) -> CheckReport {
    let mut report = CheckReport::new(format!("category {}", c.name));

    let mut w = Vec::new();
    for (ox, obj) in c.objects.iter().enumerate() {
        let m = &c.morphisms[c.identity[ox]];
        if m.src != ox || m.tgt != ox {
            w.push(format!("identity of `{obj}` has boundary {} -> {}", c.objects[m.src], c.objects[m.tgt]));
        }
    }
    report.push_outcome("identity-boundaries", w);

    let mut w = Vec::new();
    for (&(g, f), &h) in &c.compose {
        let (mg, mf, mh) = (&c.morphisms[g], &c.morphisms[f], &c.morphisms[h]);
        if mf.tgt != mg.src {
            w.push(format!("table entry `{}` . `{}` is not composable", mg.id, mf.id));
        } else if mh.src != mf.src || mh.tgt != mg.tgt {
            w.push(format!(
                "composite of `{}` . `{}` is `{}` with the wrong boundary",
                mg.id, mf.id, mh.id
            ));
        }
    }
    report.push_outcome("compose-boundaries", w);

    // Group morphisms by source object once; reused by the totality and
    // associativity sweeps.
    let mut by_src: Vec<Vec<usize>> = vec![Vec::new(); c.objects.len()];
    for (ix, m) in c.morphisms.iter().enumerate() {
        by_src[m.src].push(ix);
    }

    let mut w = Vec::new();
    for (fi, mf) in c.morphisms.iter().enumerate() {
        for &gi in &by_src[mf.tgt] {
            if !c.compose.contains_key(&(gi, fi)) {
                w.push(format!(
                    "no composite recorded for `{}` . `{}`",
                    c.morphisms[gi].id, mf.id
                ));
            }
        }
    }
    report.push_outcome("compose-totality", w);

    let mut w = Vec::new();
    for (fi, mf) in c.morphisms.iter().enumerate() {
        let lid = c.identity[mf.tgt];
        if c.compose.get(&(lid, fi)) != Some(&fi) {
            w.push(format!("id . `{}` differs from `{}`", mf.id, mf.id));
        }
    }
    report.push_outcome("left-identity", w);

    let mut w = Vec::new();
    for (fi, mf) in c.morphisms.iter().enumerate() {
        let rid = c.identity[mf.src];
        if c.compose.get(&(fi, rid)) != Some(&fi) {
            w.push(format!("`{}` . id differs from `{}`", mf.id, mf.id));
        }
    }
    report.push_outcome("right-identity", w);

    let mut w = Vec::new();
    'outer: for (&(g, f), &gf) in &c.compose {
        for &h in &by_src[c.morphisms[g].tgt] {
            let left = c.compose.get(&(h, gf));
            let hg = match c.compose.get(&(h, g)) {
                Some(&hg) => hg,
                None => continue, // totality violation already reported
            };
            let right = c.compose.get(&(hg, f));
            if left.is_some() && right.is_some() && left != right {
                w.push(format!(
                    "associativity fails on `{}` . `{}` . `{}`",
                    c.morphisms[h].id, c.morphisms[g].id, c.morphisms[f].id
                ));
                if w.len() >= 5 {
                    break 'outer;
                }
            }
        }
    }
    report.push_outcome("associativity", w);

    report
}

/// A functor presented by total object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub name: String,
    pub source: FinCategory,
    pub target: FinCategory,
    obj_map: BTreeMap<String, String>,
    mor_map: BTreeMap<String, String>,
}

impl Functor {
    /// Build a functor. The object map must be total over the source; images
    /// of identities are filled in as `id_<F(a)>` when not given explicitly.
    /// Boundary and functoriality violations are left for `validate_functor`.
    pub fn new(
        name: impl Into<String>,
        source: FinCategory,
        target: FinCategory,
        obj_map: BTreeMap<String, String>,
        mut mor_map: BTreeMap<String, String>,
    ) -> Result<Self> {
        let name = name.into();
        for o in obj_map.keys() {
            if !source.has_object(o) {
                return Err(Error::UnknownObject(o.clone(), source.name.clone()));
            }
        }
        for o in source.objects() {
            if !obj_map.contains_key(o) {
                return Err(Error::Construction(format!(
                    "functor `{name}` has no image for object `{o}`"
                )));
            }
        }
        for m in mor_map.keys() {
            if !source.has_morphism(m) {
                return Err(Error::UnknownMorphism(m.clone(), source.name.clone()));
            }
        }
        for o in source.objects() {
            let ident = source.id_of(o)?.to_string();
            mor_map
                .entry(ident)
                .or_insert_with(|| format!("id_{}", obj_map[o]));
        }
        for m in source.morphism_ids() {
            if !mor_map.contains_key(m) {
                return Err(Error::Construction(format!(
                    "functor `{name}` has no image for morphism `{m}`"
                )));
            }
        }
        Ok(Functor {
            name,
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub fn identity(cat: &FinCategory) -> Functor {
        let obj_map = cat.objects().map(|o| (o.to_string(), o.to_string())).collect();
        let mor_map = cat
            .morphism_ids()
            .map(|m| (m.to_string(), m.to_string()))
            .collect();
        Functor {
            name: format!("id({})", cat.name),
            source: cat.clone(),
            target: cat.clone(),
            obj_map,
            mor_map,
        }
    }

    pub fn ob(&self, o: &str) -> Result<&str> {
        self.obj_map
            .get(o)
            .map(|s| s.as_str())
            .ok_or_else(|| Error::UnknownObject(o.to_string(), self.source.name.clone()))
    }

    pub fn mor(&self, m: &str) -> Result<&str> {
        self.mor_map
            .get(m)
            .map(|s| s.as_str())
            .ok_or_else(|| Error::UnknownMorphism(m.to_string(), self.source.name.clone()))
    }

    pub fn obj_entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.obj_map.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn mor_entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.mor_map.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    /// Same source and target presentation and pointwise equal maps.
    pub fn extensionally_equal(&self, other: &Functor) -> bool {
        self.source.same_presentation(&other.source)
            && self.target.same_presentation(&other.target)
            && self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
    }
}

/// g2∘g1: apply g1 first.
pub fn compose_functors(g2: &Functor, g1: &Functor) -> Result<Functor> {
    if !g1.target.same_presentation(&g2.source) {
        return Err(Error::Boundary(format!(
            "cannot compose functors `{}` . `{}`: middle categories differ",
            g2.name, g1.name
        )));
    }
    let mut obj_map = BTreeMap::new();
    for o in g1.source.objects() {
        let mid = g1.ob(o)?;
        obj_map.insert(o.to_string(), g2.ob(mid)?.to_string());
    }
    let mut mor_map = BTreeMap::new();
    for m in g1.source.morphism_ids() {
        let mid = g1.mor(m)?;
        mor_map.insert(m.to_string(), g2.mor(mid)?.to_string());
    }
    Ok(Functor {
        name: format!("({}.{})", g2.name, g1.name),
        source: g1.source.clone(),
        target: g2.target.clone(),
        obj_map,
        mor_map,
    })
}

/// Check object/morphism images exist, boundaries are preserved, identities
/// map to identities, and every recorded composite is preserved.
pub fn validate_functor(f: &Functor) -> CheckReport {
    let mut report = CheckReport::new(format!("functor {}", f.name));

    let mut w = Vec::new();
    for (o, img) in f.obj_entries() {
        if !f.target.has_object(img) {
            w.push(format!("object `{o}` maps to unknown `{img}`"));
        }
    }
    report.push_outcome("object-images", w);

    let mut w = Vec::new();
    for (src, tgt, m) in f.source.morphism_triples() {
        let img = match f.mor_map.get(m) {
            Some(img) => img,
            None => {
                w.push(format!("morphism `{m}` has no image"));
                continue;
            }
        };
        if !f.target.has_morphism(img) {
            w.push(format!("morphism `{m}` maps to unknown `{img}`"));
            continue;
        }
        let (es, et) = (f.obj_map.get(src), f.obj_map.get(tgt));
        if es.map(|s| s.as_str()) != Some(f.target.src(img).unwrap_or(""))
            || et.map(|t| t.as_str()) != Some(f.target.tgt(img).unwrap_or(""))
        {
            w.push(format!(
                "image of `{m}`: `{img}` does not run {} -> {}",
                es.map(|s| s.as_str()).unwrap_or("?"),
                et.map(|t| t.as_str()).unwrap_or("?")
            ));
        }
    }
    report.push_outcome("morphism-images", w);

    let mut w = Vec::new();
    for o in f.source.objects() {
        let ident = f.source.id_of(o).expect("object exists");
        let expected = f.obj_map.get(o).map(|img| format!("id_{img}"));
        if f.mor_map.get(ident).cloned() != expected {
            w.push(format!("identity of `{o}` is not sent to the identity of its image"));
        }
    }
    report.push_outcome("preserves-identities", w);

    let mut w = Vec::new();
    for (g, fe, h) in f.source.compose_entries() {
        let (ig, iff, ih) = match (f.mor_map.get(g), f.mor_map.get(fe), f.mor_map.get(h)) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => continue, // totality violation already reported
        };
        match f.target.compose(ig, iff) {
            Ok(composite) => {
                if composite != ih {
                    w.push(format!(
                        "composite of `{g}` . `{fe}` maps to `{composite}`, expected `{ih}`"
                    ));
                }
            }
            Err(e) => w.push(format!("images of `{g}` . `{fe}` do not compose: {e}")),
        }
        if w.len() >= 5 {
            break;
        }
    }
    report.push_outcome("preserves-composition", w);

    report
}

/// A natural transformation presented by its components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    pub name: String,
    pub src_functor: Functor,
    pub tgt_functor: Functor,
    components: BTreeMap<String, String>,
}

impl NatTrans {
    /// Build a transformation; component boundaries and naturality are left
    /// for `validate_nat_trans`.
    pub fn new(
        name: impl Into<String>,
        src_functor: Functor,
        tgt_functor: Functor,
        components: BTreeMap<String, String>,
    ) -> Result<Self> {
        let name = name.into();
        for o in components.keys() {
            if !src_functor.source.has_object(o) {
                return Err(Error::UnknownObject(o.clone(), src_functor.source.name.clone()));
            }
        }
        for o in src_functor.source.objects() {
            if !components.contains_key(o) {
                return Err(Error::Construction(format!(
                    "transformation `{name}` has no component at `{o}`"
                )));
            }
        }
        Ok(NatTrans {
            name,
            src_functor,
            tgt_functor,
            components,
        })
    }

    pub fn identity_on(f: &Functor) -> Result<NatTrans> {
        let mut components = BTreeMap::new();
        for o in f.source.objects() {
            components.insert(o.to_string(), format!("id_{}", f.ob(o)?));
        }
        Ok(NatTrans {
            name: format!("iota({})", f.name),
            src_functor: f.clone(),
            tgt_functor: f.clone(),
            components,
        })
    }

    pub fn at(&self, o: &str) -> Result<&str> {
        self.components
            .get(o)
            .map(|s| s.as_str())
            .ok_or_else(|| Error::UnknownObject(o.to_string(), self.src_functor.source.name.clone()))
    }

    pub fn component_entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.components.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn extensionally_equal(&self, other: &NatTrans) -> bool {
        self.src_functor.extensionally_equal(&other.src_functor)
            && self.tgt_functor.extensionally_equal(&other.tgt_functor)
            && self.components == other.components
    }
}

/// Check functor compatibility, component boundaries α_a : F(a) -> G(a), and
/// the naturality square G(m)∘α_a = α_b∘F(m) for every m : a -> b.
pub fn validate_nat_trans(n: &NatTrans) -> CheckReport {
    let mut report = CheckReport::new(format!("nat {}", n.name));
    let f = &n.src_functor;
    let g = &n.tgt_functor;

    let mut w = Vec::new();
    if !f.source.same_presentation(&g.source) {
        w.push("source functors disagree on their domain".to_string());
    }
    if !f.target.same_presentation(&g.target) {
        w.push("source functors disagree on their codomain".to_string());
    }
    report.push_outcome("parallel-functors", w);

    let cat = &f.target;
    let mut w = Vec::new();
    for (o, comp) in n.component_entries() {
        if !cat.has_morphism(comp) {
            w.push(format!("component at `{o}` is unknown morphism `{comp}`"));
            continue;
        }
        let (fs, gs) = (f.ob(o).unwrap_or("?"), g.ob(o).unwrap_or("?"));
        let ok = cat.src(comp).map(|s| s == fs).unwrap_or(false)
            && cat.tgt(comp).map(|t| t == gs).unwrap_or(false);
        if !ok {
            w.push(format!(
                "component at `{o}`: `{comp}` does not run {fs} -> {gs}"
            ));
        }
    }
    report.push_outcome("component-boundaries", w);

    let mut w = Vec::new();
    for (a, b, m) in f.source.morphism_triples() {
        let lhs = (|| -> Result<String> {
            let gm = g.mor(m)?;
            let ca = n.at(a)?;
            Ok(cat.compose(gm, ca)?.to_string())
        })();
        let rhs = (|| -> Result<String> {
            let cb = n.at(b)?;
            let fm = f.mor(m)?;
            Ok(cat.compose(cb, fm)?.to_string())
        })();
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => {
                if l != r {
                    w.push(format!("naturality fails at `{m}`: `{l}` vs `{r}`"));
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                w.push(format!("naturality square at `{m}` does not typecheck: {e}"));
            }
        }
        if w.len() >= 5 {
            break;
        }
    }
    report.push_outcome("naturality", w);

    report
}

/// β∘α vertically: α : F ⇒ G then β : G ⇒ H.
pub fn vertical_compose(beta: &NatTrans, alpha: &NatTrans) -> Result<NatTrans> {
    if !alpha.tgt_functor.extensionally_equal(&beta.src_functor) {
        return Err(Error::Boundary(format!(
            "cannot compose `{}` * `{}`: middle functors differ",
            beta.name, alpha.name
        )));
    }
    let cat = &alpha.src_functor.target;
    let mut components = BTreeMap::new();
    for o in alpha.src_functor.source.objects() {
        let a = alpha.at(o)?;
        let b = beta.at(o)?;
        components.insert(o.to_string(), cat.compose(b, a)?.to_string());
    }
    Ok(NatTrans {
        name: format!("({}*{})", beta.name, alpha.name),
        src_functor: alpha.src_functor.clone(),
        tgt_functor: beta.tgt_functor.clone(),
        components,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Whisker a transformation with a functor. `Left` post-composes: the
/// component at X is F(α_X). `Right` pre-composes: the component at X is
/// α_{F(X)}.
pub fn whisker(side: Side, f: &Functor, alpha: &NatTrans) -> Result<NatTrans> {
    match side {
        Side::Left => {
            if !alpha.src_functor.target.same_presentation(&f.source) {
                return Err(Error::Boundary(format!(
                    "cannot whisker `{}` after `{}`",
                    f.name, alpha.name
                )));
            }
            let src = compose_functors(f, &alpha.src_functor)?;
            let tgt = compose_functors(f, &alpha.tgt_functor)?;
            let mut components = BTreeMap::new();
            for o in alpha.src_functor.source.objects() {
                components.insert(o.to_string(), f.mor(alpha.at(o)?)?.to_string());
            }
            Ok(NatTrans {
                name: format!("({}.{})", f.name, alpha.name),
                src_functor: src,
                tgt_functor: tgt,
                components,
            })
        }
        Side::Right => {
            if !f.target.same_presentation(&alpha.src_functor.source) {
                return Err(Error::Boundary(format!(
                    "cannot whisker `{}` before `{}`",
                    f.name, alpha.name
                )));
            }
            let src = compose_functors(&alpha.src_functor, f)?;
            let tgt = compose_functors(&alpha.tgt_functor, f)?;
            let mut components = BTreeMap::new();
            for o in f.source.objects() {
                components.insert(o.to_string(), alpha.at(f.ob(o)?)?.to_string());
            }
            Ok(NatTrans {
                name: format!("({}.{})", alpha.name, f.name),
                src_functor: src,
                tgt_functor: tgt,
                components,
            })
        }
    }
}

/// A colax square from P : E -> B to G : A -> X: functors F : E -> A (top)
/// and U : B -> X (bottom) with a fill β : U∘P ⇒ G∘F.
#[derive(Debug, Clone)]
pub struct ColaxCell {
    pub name: String,
    pub domain: Functor,
    pub codomain: Functor,
    pub top: Functor,
    pub bottom: Functor,
    pub fill: NatTrans,
}

impl ColaxCell {
    /// Assemble a cell from its boundary functors and per-object fill
    /// components; the fill transformation is built over the canonical
    /// composites U∘P and G∘F.
    pub fn build(
        name: impl Into<String>,
        domain: Functor,
        codomain: Functor,
        top: Functor,
        bottom: Functor,
        fill_components: BTreeMap<String, String>,
    ) -> Result<ColaxCell> {
        let name = name.into();
        let up = compose_functors(&bottom, &domain)?;
        let gf = compose_functors(&codomain, &top)?;
        let fill = NatTrans::new(format!("fill({name})"), up, gf, fill_components)?;
        Ok(ColaxCell {
            name,
            domain,
            codomain,
            top,
            bottom,
            fill,
        })
    }

    /// The identity cell on G: identity top and bottom, identity fill.
    pub fn identity_cell(g: &Functor) -> Result<ColaxCell> {
        let top = Functor::identity(&g.source);
        let bottom = Functor::identity(&g.target);
        let mut fill_components = BTreeMap::new();
        for o in g.source.objects() {
            fill_components.insert(o.to_string(), format!("id_{}", g.ob(o)?));
        }
        ColaxCell::build(format!("iota({})", g.name), g.clone(), g.clone(), top, bottom, fill_components)
    }
}

/// Validate a cell: functor boundaries, fill boundaries, fill naturality.
pub fn validate_cell(c: &ColaxCell) -> CheckReport {
    let mut report = CheckReport::new(format!("cell {}", c.name));

    let mut w = Vec::new();
    if !c.top.source.same_presentation(&c.domain.source) {
        w.push("top functor does not start at the domain's source".into());
    }
    if !c.top.target.same_presentation(&c.codomain.source) {
        w.push("top functor does not land in the codomain's source".into());
    }
    if !c.bottom.source.same_presentation(&c.domain.target) {
        w.push("bottom functor does not start at the domain's target".into());
    }
    if !c.bottom.target.same_presentation(&c.codomain.target) {
        w.push("bottom functor does not land in the codomain's target".into());
    }
    report.push_outcome("boundaries", w);

    let mut w = Vec::new();
    match (
        compose_functors(&c.bottom, &c.domain),
        compose_functors(&c.codomain, &c.top),
    ) {
        (Ok(up), Ok(gf)) => {
            if !c.fill.src_functor.extensionally_equal(&up) {
                w.push("fill does not start at bottom∘domain".into());
            }
            if !c.fill.tgt_functor.extensionally_equal(&gf) {
                w.push("fill does not end at codomain∘top".into());
            }
        }
        _ => w.push("boundary functors do not compose".into()),
    }
    report.push_outcome("fill-boundaries", w);

    report.absorb("fill-", validate_nat_trans(&c.fill));
    report
}

/// Paste c2 after c1. The composite fill at E is β₂_{F₁(E)} ∘ U₂(β₁_E).
pub fn compose_colax_cells(c2: &ColaxCell, c1: &ColaxCell) -> Result<ColaxCell> {
    if !c1.codomain.extensionally_equal(&c2.domain) {
        return Err(Error::Boundary(format!(
            "cannot paste `{}` after `{}`: middle functor differs",
            c2.name, c1.name
        )));
    }
    let top = compose_functors(&c2.top, &c1.top)?;
    let bottom = compose_functors(&c2.bottom, &c1.bottom)?;
    let cat = &c2.codomain.target;
    let mut fill_components = BTreeMap::new();
    for e in c1.domain.source.objects() {
        let lower = c2.bottom.mor(c1.fill.at(e)?)?;
        let upper = c2.fill.at(c1.top.ob(e)?)?;
        fill_components.insert(e.to_string(), cat.compose(upper, lower)?.to_string());
    }
    ColaxCell::build(
        format!("({}.{})", c2.name, c1.name),
        c1.domain.clone(),
        c2.codomain.clone(),
        top,
        bottom,
        fill_components,
    )
}

/// A 2-cell between parallel colax squares: transformations θ (bottom) and τ
/// (top) subject to the exchange law against the two fills.
#[derive(Debug, Clone)]
pub struct SquareTwoCell {
    pub name: String,
    pub source: ColaxCell,
    pub target: ColaxCell,
    pub top: NatTrans,
    pub bottom: NatTrans,
}

/// Check a 2-cell: the squares must be parallel, θ : U ⇒ V and τ : F ⇒ F'
/// must be natural with the right boundaries, and for every object E of the
/// shared domain source the exchange law G(τ_E)∘β_E = γ_E∘θ_{P(E)} must hold.
pub fn check_two_cell(t: &SquareTwoCell) -> CheckReport {
    let mut report = CheckReport::new(format!("two-cell {}", t.name));

    let mut w = Vec::new();
    if !t.source.domain.extensionally_equal(&t.target.domain) {
        w.push("source and target squares have different domains".into());
    }
    if !t.source.codomain.extensionally_equal(&t.target.codomain) {
        w.push("source and target squares have different codomains".into());
    }
    if !t.bottom.src_functor.extensionally_equal(&t.source.bottom)
        || !t.bottom.tgt_functor.extensionally_equal(&t.target.bottom)
    {
        w.push("bottom transformation does not run from the source's bottom functor to the target's".into());
    }
    if !t.top.src_functor.extensionally_equal(&t.source.top)
        || !t.top.tgt_functor.extensionally_equal(&t.target.top)
    {
        w.push("top transformation does not run from the source's top functor to the target's".into());
    }
    report.push_outcome("boundaries", w);

    report.absorb("top-", validate_nat_trans(&t.top));
    report.absorb("bottom-", validate_nat_trans(&t.bottom));

    let g = &t.source.codomain;
    let p = &t.source.domain;
    let cat = &g.target;
    let mut w = Vec::new();
    for e in p.source.objects() {
        let eq = (|| -> Result<(String, String)> {
            let lhs = cat
                .compose(g.mor(t.top.at(e)?)?, t.source.fill.at(e)?)?
                .to_string();
            let rhs = cat
                .compose(t.target.fill.at(e)?, t.bottom.at(p.ob(e)?)?)?
                .to_string();
            Ok((lhs, rhs))
        })();
        match eq {
            Ok((l, r)) => {
                if l != r {
                    w.push(format!("exchange fails at `{e}`: `{l}` vs `{r}`"));
                }
            }
            Err(e2) => w.push(format!("exchange at `{e}` does not typecheck: {e2}")),
        }
        if w.len() >= 5 {
            break;
        }
    }
    report.push_outcome("exchange", w);

    report
}

/// Disjoint union of two categories. Objects and non-identity morphisms of
/// the left summand are prefixed `l_`, those of the right `r_`; identities
/// keep the reserved scheme. Returns the sum with its two injections.
pub fn coproduct(a: &FinCategory, b: &FinCategory) -> Result<(FinCategory, Functor, Functor)> {
    let mut sum = FinCategory::new(format!("({}+{})", a.name, b.name));
    for (side, cat) in [("l", a), ("r", b)] {
        for o in cat.objects() {
            sum.add_object(&format!("{side}_{o}"))?;
        }
        for m in cat.non_identity_morphisms() {
            let tagged = format!("{side}_{m}");
            sum.add_morphism(&tagged, &format!("{side}_{}", cat.src(m)?), &format!("{side}_{}", cat.tgt(m)?))?;
        }
        for (g, f, h) in cat.compose_entries() {
            if cat.is_identity(g)? || cat.is_identity(f)? {
                continue;
            }
            let tag = |m: &str| -> Result<String> {
                Ok(if cat.is_identity(m)? {
                    format!("id_{side}_{}", cat.src(m)?)
                } else {
                    format!("{side}_{m}")
                })
            };
            sum.set_compose(&tag(g)?, &tag(f)?, &tag(h)?)?;
        }
    }
    let inj = |side: &str, cat: &FinCategory| -> Result<Functor> {
        let obj_map = cat
            .objects()
            .map(|o| (o.to_string(), format!("{side}_{o}")))
            .collect();
        let mut mor_map = BTreeMap::new();
        for m in cat.non_identity_morphisms() {
            mor_map.insert(m.to_string(), format!("{side}_{m}"));
        }
        Functor::new(
            format!("in{side}({}+{})", a.name, b.name),
            cat.clone(),
            sum.clone(),
            obj_map,
            mor_map,
        )
    };
    let left = inj("l", a)?;
    let right = inj("r", b)?;
    Ok((sum, left, right))
}
