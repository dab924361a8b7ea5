//! A plain-text document format for categories and the structures over
//! them. Parsing is token-based and mostly layout-insensitive; printing is
//! canonical, so a printed document parses back to a byte-identical reprint.
//!
//! Identities are never written: each `category` block implies `id_<o>` for
//! every object, and declaring a morphism with the `id_` prefix is rejected.
//! Functor blocks may omit images for identity morphisms. Blocks reference
//! earlier blocks by name. Line blocks (`category`, `functor`, `nat`) close
//! with `end`; record blocks (`cell`, `comonad`, `adjunction`, `coalgebra`,
//! `normal`) wrap their items in `{ … } end`, where an item is either a
//! functor reference `KEY = NAME` or a component entry `tag at OBJ = MOR`.
//! Commas between items are optional separators; `#` starts a comment.

use std::collections::BTreeMap;

use crate::catalog::Fixture;
use crate::category::{
    compose_functors, validate_category, validate_cell, validate_functor, validate_nat_trans,
    ColaxCell, Functor, NatTrans,
};
use crate::coalgebra::{validate_coalgebra, CoalgebraComponents, ColaxDCoalgebra};
use crate::comonad::{check_adjunction, validate_comonad, Adjunction, Comonad};
use crate::normal::{validate_normal, NormalColaxCoalgebra, NormalComponents};
use crate::report::CheckReport;
use crate::{Error, FinCategory, Result};

/// Everything a document can define, in definition order.
#[derive(Debug, Default, Clone)]
pub struct Document {
    pub categories: Vec<FinCategory>,
    pub functors: Vec<Functor>,
    pub nats: Vec<NatTrans>,
    pub cells: Vec<ColaxCell>,
    pub comonads: Vec<Comonad>,
    pub adjunctions: Vec<Adjunction>,
    pub coalgebras: Vec<ColaxDCoalgebra>,
    pub normals: Vec<NormalColaxCoalgebra>,
}

macro_rules! lookup {
    ($fn_name:ident, $field:ident, $ty:ty, $what:literal) => {
        pub fn $fn_name(&self, name: &str) -> Result<&$ty> {
            self.$field
                .iter()
                .find(|x| x.name == name)
                .ok_or_else(|| Error::Construction(format!(concat!("no ", $what, " named `{}`"), name)))
        }
    };
}

impl Document {
    lookup!(category, categories, FinCategory, "category");
    lookup!(functor, functors, Functor, "functor");
    lookup!(nat, nats, NatTrans, "transformation");
    lookup!(cell, cells, ColaxCell, "cell");
    lookup!(comonad, comonads, Comonad, "comonad");
    lookup!(adjunction, adjunctions, Adjunction, "adjunction");
    lookup!(coalgebra, coalgebras, ColaxDCoalgebra, "coalgebra");
    lookup!(normal, normals, NormalColaxCoalgebra, "normal coalgebra");

    /// Add a category, deduplicating by name when the presentation agrees.
    pub fn add_category(&mut self, c: FinCategory) -> Result<()> {
        if let Some(prev) = self.categories.iter().find(|x| x.name == c.name) {
            if prev.same_presentation(&c) {
                return Ok(());
            }
            return Err(Error::DuplicateId(c.name, "document".into()));
        }
        self.categories.push(c);
        Ok(())
    }

    /// Add a functor, deduplicating by name when the maps agree.
    pub fn add_functor(&mut self, f: Functor) -> Result<()> {
        if let Some(prev) = self.functors.iter().find(|x| x.name == f.name) {
            if prev.extensionally_equal(&f) {
                return Ok(());
            }
            return Err(Error::DuplicateId(f.name, "document".into()));
        }
        self.functors.push(f);
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Tokenizing
// ---------------------------------------------------------------------------

struct Tok {
    line: usize,
    s: String,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Split one whitespace-delimited word into tokens: braces and `=` are
/// their own tokens (with `=>` kept whole), everything else is a name run.
/// Names never contain braces, `=` or `,`, so this cannot cut a name.
fn split_word(out: &mut Vec<Tok>, line: usize, word: &str) {
    let mut run = String::new();
    let mut chars = word.chars().peekable();
    while let Some(ch) = chars.next() {
        match ch {
            '{' | '}' => {
                if !run.is_empty() {
                    out.push(Tok { line, s: std::mem::take(&mut run) });
                }
                out.push(Tok { line, s: ch.to_string() });
            }
            '=' => {
                if !run.is_empty() {
                    out.push(Tok { line, s: std::mem::take(&mut run) });
                }
                if chars.peek() == Some(&'>') {
                    chars.next();
                    out.push(Tok { line, s: "=>".into() });
                } else {
                    out.push(Tok { line, s: "=".into() });
                }
            }
            _ => run.push(ch),
        }
    }
    if !run.is_empty() {
        out.push(Tok { line, s: run });
    }
}

fn tokenize(text: &str) -> Vec<Tok> {
    let mut out = Vec::new();
    for (ix, raw_line) in text.lines().enumerate() {
        let line = ix + 1;
        let content = raw_line.split('#').next().unwrap_or("").replace(',', " ");
        for word in content.split_whitespace() {
            split_word(&mut out, line, word);
        }
    }
    out
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    last_line: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Result<&'a Tok> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t)
            }
            None => Err(perr(self.last_line, "unexpected end of document")),
        }
    }

    fn expect(&mut self, want: &str) -> Result<usize> {
        let t = self.next()?;
        if t.s != want {
            return Err(perr(t.line, format!("expected `{want}`, found `{}`", t.s)));
        }
        Ok(t.line)
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        let t = self.next()?;
        if matches!(t.s.as_str(), "{" | "}" | "=") {
            return Err(perr(t.line, format!("expected a name, found `{}`", t.s)));
        }
        Ok((t.line, &t.s))
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parse a document. Blocks may only reference blocks defined above them;
/// every construction error is reported with the line it was triggered on.
pub fn parse(text: &str) -> Result<Document> {
    let toks = tokenize(text);
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        last_line: toks.last().map(|t| t.line).unwrap_or(1),
    };
    let mut doc = Document::default();
    while let Some(t) = p.peek() {
        match t.s.as_str() {
            "category" => parse_category(&mut p, &mut doc)?,
            "functor" => parse_functor(&mut p, &mut doc)?,
            "nat" => parse_nat(&mut p, &mut doc)?,
            "cell" => parse_cell(&mut p, &mut doc)?,
            "comonad" => parse_comonad(&mut p, &mut doc)?,
            "adjunction" => parse_adjunction(&mut p, &mut doc)?,
            "coalgebra" => parse_coalgebra(&mut p, &mut doc)?,
            "normal" => parse_normal(&mut p, &mut doc)?,
            other => {
                return Err(perr(t.line, format!("unknown block `{other}`")));
            }
        }
    }
    Ok(doc)
}

fn parse_category(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("category")?;
    let (name_line, name) = p.ident()?;
    if doc.categories.iter().any(|c| c.name == name) {
        return Err(perr(name_line, format!("category `{name}` defined twice")));
    }
    let mut cat = FinCategory::new(name);
    loop {
        let t = p.next()?;
        match t.s.as_str() {
            "object" => {
                let (line, o) = p.ident()?;
                cat.add_object(o).map_err(|e| perr(line, e.to_string()))?;
            }
            "morphism" => {
                let (line, m) = p.ident()?;
                p.expect(":")?;
                let (_, s) = p.ident()?;
                p.expect("->")?;
                let (_, tg) = p.ident()?;
                cat.add_morphism(m, s, tg).map_err(|e| perr(line, e.to_string()))?;
            }
            "compose" => {
                let (line, g) = p.ident()?;
                p.expect(".")?;
                let (_, f) = p.ident()?;
                p.expect("=")?;
                let (_, h) = p.ident()?;
                cat.set_compose(g, f, h).map_err(|e| perr(line, e.to_string()))?;
            }
            "end" => break,
            other => {
                return Err(perr(
                    t.line,
                    format!("expected `object`, `morphism`, `compose` or `end`, found `{other}`"),
                ));
            }
        }
    }
    doc.categories.push(cat);
    Ok(())
}

fn parse_functor(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("functor")?;
    let (name_line, name) = p.ident()?;
    if doc.functors.iter().any(|f| f.name == name) {
        return Err(perr(name_line, format!("functor `{name}` defined twice")));
    }
    p.expect(":")?;
    let (src_line, src_name) = p.ident()?;
    p.expect("->")?;
    let (tgt_line, tgt_name) = p.ident()?;
    let src = doc
        .category(src_name)
        .map_err(|_| perr(src_line, format!("unknown category `{src_name}`")))?
        .clone();
    let tgt = doc
        .category(tgt_name)
        .map_err(|_| perr(tgt_line, format!("unknown category `{tgt_name}`")))?
        .clone();
    let mut obj_map = BTreeMap::new();
    let mut mor_map = BTreeMap::new();
    loop {
        let t = p.next()?;
        match t.s.as_str() {
            "obj" => {
                let (line, o) = p.ident()?;
                p.expect("|->")?;
                let (vline, v) = p.ident()?;
                if !tgt.has_object(v) {
                    return Err(perr(vline, format!("unknown object `{v}` in `{tgt_name}`")));
                }
                if obj_map.insert(o.to_string(), v.to_string()).is_some() {
                    return Err(perr(line, format!("object `{o}` mapped twice")));
                }
            }
            "mor" => {
                let (line, m) = p.ident()?;
                p.expect("|->")?;
                let (vline, v) = p.ident()?;
                if !tgt.has_morphism(v) {
                    return Err(perr(vline, format!("unknown morphism `{v}` in `{tgt_name}`")));
                }
                if mor_map.insert(m.to_string(), v.to_string()).is_some() {
                    return Err(perr(line, format!("morphism `{m}` mapped twice")));
                }
            }
            "end" => break,
            other => {
                return Err(perr(
                    t.line,
                    format!("expected `obj`, `mor` or `end`, found `{other}`"),
                ));
            }
        }
    }
    let f = Functor::new(name, src, tgt, obj_map, mor_map)
        .map_err(|e| perr(name_line, e.to_string()))?;
    doc.functors.push(f);
    Ok(())
}

fn parse_nat(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("nat")?;
    let (name_line, name) = p.ident()?;
    if doc.nats.iter().any(|n| n.name == name) {
        return Err(perr(name_line, format!("transformation `{name}` defined twice")));
    }
    p.expect(":")?;
    let (fline, fname) = p.ident()?;
    p.expect("=>")?;
    let (gline, gname) = p.ident()?;
    let f = doc
        .functor(fname)
        .map_err(|_| perr(fline, format!("unknown functor `{fname}`")))?
        .clone();
    let g = doc
        .functor(gname)
        .map_err(|_| perr(gline, format!("unknown functor `{gname}`")))?
        .clone();
    let mut comps = BTreeMap::new();
    loop {
        let t = p.next()?;
        match t.s.as_str() {
            "at" => {
                let (line, o) = p.ident()?;
                p.expect("=")?;
                let (vline, v) = p.ident()?;
                if !f.target.has_morphism(v) {
                    return Err(perr(
                        vline,
                        format!("unknown morphism `{v}` in `{}`", f.target.name),
                    ));
                }
                if comps.insert(o.to_string(), v.to_string()).is_some() {
                    return Err(perr(line, format!("component at `{o}` given twice")));
                }
            }
            "end" => break,
            other => {
                return Err(perr(t.line, format!("expected `at` or `end`, found `{other}`")));
            }
        }
    }
    let n = NatTrans::new(name, f, g, comps).map_err(|e| perr(name_line, e.to_string()))?;
    doc.nats.push(n);
    Ok(())
}

/// Accumulated contents of a `{ … } end` record: functor references keyed by
/// their uppercase-or-word keys, and per-tag component tables.
struct Record {
    name_line: usize,
    name: String,
    refs: BTreeMap<String, (usize, String)>,
    tables: BTreeMap<String, BTreeMap<String, String>>,
}

/// Parse `NAME { KEY = NAME … tag at OBJ = MOR … } end`. `ref_keys` lists
/// the required functor references, `tags` the component tables (optional;
/// a tag never mentioned yields an empty table).
fn parse_record(p: &mut Parser, ref_keys: &[&str], tags: &[&str]) -> Result<Record> {
    let (name_line, name) = p.ident()?;
    p.expect("{")?;
    let mut refs: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut tables: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
    loop {
        let t = p.next()?;
        if t.s == "}" {
            p.expect("end")?;
            break;
        }
        let key = t.s.as_str();
        if ref_keys.contains(&key) {
            p.expect("=")?;
            let (vline, v) = p.ident()?;
            if refs.insert(key.to_string(), (vline, v.to_string())).is_some() {
                return Err(perr(t.line, format!("`{key}` given twice")));
            }
        } else if tags.contains(&key) {
            p.expect("at")?;
            let (oline, o) = p.ident()?;
            p.expect("=")?;
            let (_, v) = p.ident()?;
            let table = tables.entry(key.to_string()).or_default();
            if table.insert(o.to_string(), v.to_string()).is_some() {
                return Err(perr(oline, format!("`{key} at {o}` given twice")));
            }
        } else {
            return Err(perr(t.line, format!("unknown entry `{key}`")));
        }
    }
    for k in ref_keys {
        if !refs.contains_key(*k) {
            return Err(perr(name_line, format!("missing `{k}` in `{name}`")));
        }
    }
    Ok(Record {
        name_line,
        name: name.to_string(),
        refs,
        tables,
    })
}

impl Record {
    fn functor(&self, doc: &Document, key: &str) -> Result<Functor> {
        let (line, v) = &self.refs[key];
        doc.functor(v)
            .cloned()
            .map_err(|_| perr(*line, format!("unknown functor `{v}`")))
    }

    fn table(&mut self, tag: &str) -> BTreeMap<String, String> {
        self.tables.remove(tag).unwrap_or_default()
    }
}

fn parse_cell(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("cell")?;
    let mut rec = parse_record(p, &["domain", "codomain", "top", "bottom"], &["fill"])?;
    if doc.cells.iter().any(|c| c.name == rec.name) {
        return Err(perr(rec.name_line, format!("cell `{}` defined twice", rec.name)));
    }
    let cell = ColaxCell::build(
        rec.name.clone(),
        rec.functor(doc, "domain")?,
        rec.functor(doc, "codomain")?,
        rec.functor(doc, "top")?,
        rec.functor(doc, "bottom")?,
        rec.table("fill"),
    )
    .map_err(|e| perr(rec.name_line, e.to_string()))?;
    doc.cells.push(cell);
    Ok(())
}

fn parse_comonad(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("comonad")?;
    let mut rec = parse_record(p, &["T"], &["comult", "counit"])?;
    if doc.comonads.iter().any(|c| c.name == rec.name) {
        return Err(perr(rec.name_line, format!("comonad `{}` defined twice", rec.name)));
    }
    let name = rec.name.clone();
    let endo = rec.functor(doc, "T")?;
    let line = rec.name_line;
    let tt = compose_functors(&endo, &endo).map_err(|e| perr(line, e.to_string()))?;
    let comult = NatTrans::new(format!("tau[{name}]"), endo.clone(), tt, rec.table("comult"))
        .map_err(|e| perr(line, e.to_string()))?;
    let counit = NatTrans::new(
        format!("zeta[{name}]"),
        endo.clone(),
        Functor::identity(&endo.source),
        rec.table("counit"),
    )
    .map_err(|e| perr(line, e.to_string()))?;
    doc.comonads.push(Comonad {
        name,
        endo,
        comult,
        counit,
    });
    Ok(())
}

fn parse_adjunction(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("adjunction")?;
    let mut rec = parse_record(p, &["left", "right"], &["unit", "counit"])?;
    if doc.adjunctions.iter().any(|a| a.name == rec.name) {
        return Err(perr(rec.name_line, format!("adjunction `{}` defined twice", rec.name)));
    }
    let name = rec.name.clone();
    let left = rec.functor(doc, "left")?;
    let right = rec.functor(doc, "right")?;
    let line = rec.name_line;
    let rl = compose_functors(&right, &left).map_err(|e| perr(line, e.to_string()))?;
    let lr = compose_functors(&left, &right).map_err(|e| perr(line, e.to_string()))?;
    let unit = NatTrans::new(
        format!("unit[{name}]"),
        Functor::identity(&left.source),
        rl,
        rec.table("unit"),
    )
    .map_err(|e| perr(line, e.to_string()))?;
    let counit = NatTrans::new(
        format!("counit[{name}]"),
        lr,
        Functor::identity(&right.source),
        rec.table("counit"),
    )
    .map_err(|e| perr(line, e.to_string()))?;
    doc.adjunctions.push(Adjunction {
        name,
        left,
        right,
        unit,
        counit,
    });
    Ok(())
}

const COALGEBRA_TAGS: [&str; 14] = [
    "eta", "chi", "omega", "eps", "zeta0", "zeta1", "theta100", "theta110", "theta101",
    "theta111", "theta000", "theta010", "theta001", "theta011",
];

fn parse_coalgebra(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("coalgebra")?;
    let mut rec = parse_record(p, &["G", "C", "K", "H", "Q"], &COALGEBRA_TAGS)?;
    if doc.coalgebras.iter().any(|c| c.name == rec.name) {
        return Err(perr(rec.name_line, format!("coalgebra `{}` defined twice", rec.name)));
    }
    let comps = CoalgebraComponents {
        eta: rec.table("eta"),
        chi: rec.table("chi"),
        omega: rec.table("omega"),
        eps: rec.table("eps"),
        zeta0: rec.table("zeta0"),
        zeta1: rec.table("zeta1"),
        theta100: rec.table("theta100"),
        theta110: rec.table("theta110"),
        theta101: rec.table("theta101"),
        theta111: rec.table("theta111"),
        theta000: rec.table("theta000"),
        theta010: rec.table("theta010"),
        theta001: rec.table("theta001"),
        theta011: rec.table("theta011"),
    };
    let co = ColaxDCoalgebra::from_components(
        rec.name.clone(),
        rec.functor(doc, "G")?,
        rec.functor(doc, "C")?,
        rec.functor(doc, "K")?,
        rec.functor(doc, "H")?,
        rec.functor(doc, "Q")?,
        comps,
    )
    .map_err(|e| perr(rec.name_line, e.to_string()))?;
    doc.coalgebras.push(co);
    Ok(())
}

const NORMAL_TAGS: [&str; 6] = ["rho", "eps", "omega", "chi", "theta101", "theta010"];

fn parse_normal(p: &mut Parser, doc: &mut Document) -> Result<()> {
    p.expect("normal")?;
    let mut rec = parse_record(p, &["G", "K", "H"], &NORMAL_TAGS)?;
    if doc.normals.iter().any(|n| n.name == rec.name) {
        return Err(perr(
            rec.name_line,
            format!("normal coalgebra `{}` defined twice", rec.name),
        ));
    }
    let comps = NormalComponents {
        rho: rec.table("rho"),
        eps: rec.table("eps"),
        omega: rec.table("omega"),
        chi: rec.table("chi"),
        theta101: rec.table("theta101"),
        theta010: rec.table("theta010"),
    };
    let n = NormalColaxCoalgebra::from_components(
        rec.name.clone(),
        rec.functor(doc, "G")?,
        rec.functor(doc, "K")?,
        rec.functor(doc, "H")?,
        comps,
    )
    .map_err(|e| perr(rec.name_line, e.to_string()))?;
    doc.normals.push(n);
    Ok(())
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

fn push_components(out: &mut String, tag: &str, n: &NatTrans) {
    for (o, v) in n.component_entries() {
        out.push_str(&format!("{tag} at {o} = {v}\n"));
    }
}

fn print_category(c: &FinCategory, out: &mut String) {
    out.push_str(&format!("category {}\n", c.name));
    for o in c.objects() {
        out.push_str(&format!("object {o}\n"));
    }
    for m in c.non_identity_morphisms() {
        out.push_str(&format!(
            "morphism {m} : {} -> {}\n",
            c.src(m).unwrap_or("?"),
            c.tgt(m).unwrap_or("?")
        ));
    }
    let mut entries: Vec<(String, String, String)> = c
        .compose_entries()
        .filter(|(g, f, _)| !g.starts_with("id_") && !f.starts_with("id_"))
        .map(|(g, f, h)| (g.to_string(), f.to_string(), h.to_string()))
        .collect();
    entries.sort();
    for (g, f, h) in entries {
        out.push_str(&format!("compose {g} . {f} = {h}\n"));
    }
    out.push_str("end\n");
}

fn print_functor(f: &Functor, out: &mut String) {
    out.push_str(&format!(
        "functor {} : {} -> {}\n",
        f.name, f.source.name, f.target.name
    ));
    for (o, v) in f.obj_entries() {
        out.push_str(&format!("obj {o} |-> {v}\n"));
    }
    for (m, v) in f.mor_entries() {
        if m.starts_with("id_") {
            continue;
        }
        out.push_str(&format!("mor {m} |-> {v}\n"));
    }
    out.push_str("end\n");
}

fn print_nat(n: &NatTrans, out: &mut String) {
    out.push_str(&format!(
        "nat {} : {} => {}\n",
        n.name, n.src_functor.name, n.tgt_functor.name
    ));
    for (o, v) in n.component_entries() {
        out.push_str(&format!("at {o} = {v}\n"));
    }
    out.push_str("end\n");
}

/// Print a document in canonical form.
pub fn print(doc: &Document) -> String {
    let mut blocks: Vec<String> = Vec::new();
    for c in &doc.categories {
        let mut s = String::new();
        print_category(c, &mut s);
        blocks.push(s);
    }
    for f in &doc.functors {
        let mut s = String::new();
        print_functor(f, &mut s);
        blocks.push(s);
    }
    for n in &doc.nats {
        let mut s = String::new();
        print_nat(n, &mut s);
        blocks.push(s);
    }
    for c in &doc.cells {
        let mut s = format!(
            "cell {} {{\ndomain = {}\ncodomain = {}\ntop = {}\nbottom = {}\n",
            c.name, c.domain.name, c.codomain.name, c.top.name, c.bottom.name
        );
        push_components(&mut s, "fill", &c.fill);
        s.push_str("} end\n");
        blocks.push(s);
    }
    for m in &doc.comonads {
        let mut s = format!("comonad {} {{\nT = {}\n", m.name, m.endo.name);
        push_components(&mut s, "comult", &m.comult);
        push_components(&mut s, "counit", &m.counit);
        s.push_str("} end\n");
        blocks.push(s);
    }
    for a in &doc.adjunctions {
        let mut s = format!(
            "adjunction {} {{\nleft = {}\nright = {}\n",
            a.name, a.left.name, a.right.name
        );
        push_components(&mut s, "unit", &a.unit);
        push_components(&mut s, "counit", &a.counit);
        s.push_str("} end\n");
        blocks.push(s);
    }
    for co in &doc.coalgebras {
        let mut s = format!(
            "coalgebra {} {{\nG = {}\nC = {}\nK = {}\nH = {}\nQ = {}\n",
            co.name, co.g.name, co.c.name, co.k.name, co.h.name, co.q.name
        );
        for (tag, nat) in [
            ("eta", &co.eta),
            ("chi", &co.chi),
            ("omega", &co.omega),
            ("eps", &co.eps),
            ("zeta0", &co.zeta0),
            ("zeta1", &co.zeta1),
            ("theta100", &co.theta100),
            ("theta110", &co.theta110),
            ("theta101", &co.theta101),
            ("theta111", &co.theta111),
            ("theta000", &co.theta000),
            ("theta010", &co.theta010),
            ("theta001", &co.theta001),
            ("theta011", &co.theta011),
        ] {
            push_components(&mut s, tag, nat);
        }
        s.push_str("} end\n");
        blocks.push(s);
    }
    for n in &doc.normals {
        let mut s = format!(
            "normal {} {{\nG = {}\nK = {}\nH = {}\n",
            n.name, n.g.name, n.k.name, n.h.name
        );
        for (tag, nat) in [
            ("rho", &n.rho),
            ("eps", &n.eps),
            ("omega", &n.omega),
            ("chi", &n.chi),
            ("theta101", &n.theta101),
            ("theta010", &n.theta010),
        ] {
            push_components(&mut s, tag, nat);
        }
        s.push_str("} end\n");
        blocks.push(s);
    }
    blocks.join("\n")
}

/// Package a fixture as a document carrying its categories and functors.
pub fn fixture_document(f: &Fixture) -> Result<Document> {
    let mut doc = Document::default();
    match f {
        Fixture::Category(c) => doc.add_category(c.clone())?,
        Fixture::Comonad(m) => {
            doc.add_category(m.endo.source.clone())?;
            doc.add_functor(m.endo.clone())?;
            doc.comonads.push(m.clone());
        }
        Fixture::Adjunction(a) => {
            doc.add_category(a.left.source.clone())?;
            doc.add_category(a.left.target.clone())?;
            doc.add_functor(a.left.clone())?;
            doc.add_functor(a.right.clone())?;
            doc.adjunctions.push(a.clone());
        }
        Fixture::Coalgebra(co) => {
            doc.add_category(co.x_cat().clone())?;
            doc.add_category(co.a_cat().clone())?;
            for f in [&co.g, &co.c, &co.k, &co.h, &co.q] {
                doc.add_functor(f.clone())?;
            }
            doc.coalgebras.push(co.clone());
        }
        Fixture::Normal(n) => {
            doc.add_category(n.x_cat().clone())?;
            doc.add_category(n.a_cat().clone())?;
            for f in [&n.g, &n.k, &n.h] {
                doc.add_functor(f.clone())?;
            }
            doc.normals.push(n.clone());
        }
    }
    Ok(doc)
}

/// Package a comma construction as a document: both base categories, the
/// total category, the base functor, the two projections, their composite,
/// and the canonical transformation between them.
pub fn comma_document(bundle: &crate::comma::CommaBundle) -> Result<Document> {
    let mut doc = Document::default();
    doc.add_category(bundle.base.source.clone())?;
    doc.add_category(bundle.base.target.clone())?;
    doc.add_category(bundle.total.clone())?;
    doc.add_functor(bundle.base.clone())?;
    doc.add_functor(bundle.d0.clone())?;
    doc.add_functor(bundle.d1.clone())?;
    doc.add_functor(bundle.delta.tgt_functor.clone())?;
    doc.nats.push(bundle.delta.clone());
    Ok(doc)
}

/// Package a Kleisli construction as a document: the comonad's own blocks,
/// the total category, both canonical functors, and their adjunction.
pub fn kleisli_document(bundle: &crate::comonad::KleisliBundle) -> Result<Document> {
    let mut doc = fixture_document(&Fixture::Comonad(bundle.comonad.clone()))?;
    doc.add_category(bundle.total.clone())?;
    doc.add_functor(bundle.underlying.clone())?;
    doc.add_functor(bundle.embed.clone())?;
    doc.add_functor(bundle.adjunction.left.clone())?;
    doc.add_functor(bundle.adjunction.right.clone())?;
    doc.adjunctions.push(bundle.adjunction.clone());
    Ok(doc)
}

/// Package an Eilenberg–Moore construction as a document, mirroring
/// [`kleisli_document`] with the forgetful/cofree pair.
pub fn em_document(bundle: &crate::comonad::EmBundle) -> Result<Document> {
    let mut doc = fixture_document(&Fixture::Comonad(bundle.comonad.clone()))?;
    doc.add_category(bundle.total.clone())?;
    doc.add_functor(bundle.forgetful.clone())?;
    doc.add_functor(bundle.cofree.clone())?;
    doc.add_functor(bundle.adjunction.left.clone())?;
    doc.add_functor(bundle.adjunction.right.clone())?;
    doc.adjunctions.push(bundle.adjunction.clone());
    Ok(doc)
}

/// Validate everything a document defines, one report per item.
pub fn validate_document(doc: &Document) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    for c in &doc.categories {
        reports.push(validate_category(c));
    }
    for f in &doc.functors {
        reports.push(validate_functor(f));
    }
    for n in &doc.nats {
        reports.push(validate_nat_trans(n));
    }
    for c in &doc.cells {
        reports.push(validate_cell(c));
    }
    for m in &doc.comonads {
        reports.push(validate_comonad(m));
    }
    for a in &doc.adjunctions {
        reports.push(check_adjunction(a));
    }
    for co in &doc.coalgebras {
        reports.push(validate_coalgebra(co));
    }
    for n in &doc.normals {
        reports.push(validate_normal(n));
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fixture, fixture_names};

    #[test]
    fn every_fixture_document_round_trips_byte_for_byte() {
        for name in fixture_names() {
            let doc = fixture_document(&fixture(name).unwrap()).unwrap();
            let printed = print(&doc);
            let reparsed = parse(&printed).unwrap_or_else(|e| panic!("{name}: {e}\n{printed}"));
            assert_eq!(printed, print(&reparsed), "{name}");
            for rep in validate_document(&reparsed) {
                assert!(rep.passed(), "{name}: {}", rep.render());
            }
        }
    }

    #[test]
    fn explicit_identity_declarations_are_rejected() {
        let text = "category c\nobject x\nmorphism id_x : x -> x\nend\n";
        match parse(text) {
            Err(Error::Parse { line, msg }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("id_"), "{msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_references_report_their_line() {
        let text = "category c\nobject x\nend\n\nfunctor F : c -> d\nobj x |-> x\nend\n";
        match parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 5),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn commas_and_glued_equals_signs_are_accepted() {
        let text = "\
category c
object x
object y
morphism f : x -> y
end

functor F : c -> c
obj x |-> x
obj y |-> y
mor f |-> f
end

nat t : F => F
at x=id_x, at y=id_y
end

cell w { domain=F, codomain=F, top=F, bottom=F, fill at x=id_x, fill at y=id_y } end
";
        let doc = parse(text).unwrap();
        assert_eq!(doc.nats.len(), 1);
        assert_eq!(doc.cells.len(), 1);
        let printed = print(&doc);
        assert_eq!(printed, print(&parse(&printed).unwrap()));
        for rep in validate_document(&doc) {
            assert!(rep.passed(), "{}", rep.render());
        }
    }
}
