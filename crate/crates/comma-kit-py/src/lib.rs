//! Python bindings for the finite-category kit: documents in the plain-text
//! format, validation reports, and the constructions (comma and arrow
//! categories, comonad law checks, coalgebra checks and derivations, Kleisli
//! and Eilenberg–Moore categories, liftings, distributive laws, and the
//! adjunction round trip for normal coalgebras).
//!
//! Budget-style failures raise `RuntimeError`; everything else — parse
//! errors, unknown names, boundary mismatches — raises `ValueError`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use comma_kit::catalog::{fixture, fixture_names, random_poset_coalgebra, Fixture};
use comma_kit::coalgebra::{
    classify, validate_coalgebra, verify_derived_cubes, LEDGER_LABELS,
};
use comma_kit::comma::{arrow_category, check_comonad_laws, comma};
use comma_kit::comonad::{em_category, kleisli_category};
use comma_kit::doc::{
    comma_document, em_document, fixture_document, kleisli_document, parse as parse_doc,
    print as print_doc, validate_document, Document,
};
use comma_kit::dot::category_to_dot;
use comma_kit::liftings::{
    check_dist_law, check_em_lifts, check_kleisli_lifts, dist_law_kappa, is_split,
    split_factorizations,
};
use comma_kit::normal::{
    brute_force_left_adjoint, check_frobenius, check_pair_monad_laws, from_adjunction,
    to_adjunction, to_general, validate_normal,
};
use comma_kit::{
    CheckReport, Error, FinCategory, Functor, NatTrans, DEFAULT_MORPHISM_BUDGET,
};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded(_) | Error::SamplingExhausted(..) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn budget_or_default(budget: Option<usize>) -> usize {
    budget.unwrap_or(DEFAULT_MORPHISM_BUDGET)
}

/// A finite category: objects, morphisms, and the composition table.
#[pyclass(name = "Category", skip_from_py_object)]
#[derive(Clone)]
struct PyCategory {
    inner: FinCategory,
}

#[pymethods]
impl PyCategory {
    #[getter]
    fn name(&self) -> &str {
        &self.inner.name
    }

    fn objects(&self) -> Vec<String> {
        self.inner.objects().map(|s| s.to_string()).collect()
    }

    fn morphisms(&self) -> Vec<String> {
        self.inner.morphism_ids().map(|s| s.to_string()).collect()
    }

    fn object_count(&self) -> usize {
        self.inner.object_count()
    }

    fn morphism_count(&self) -> usize {
        self.inner.morphism_count()
    }

    fn src(&self, m: &str) -> PyResult<String> {
        self.inner.src(m).map(|s| s.to_string()).map_err(to_py_err)
    }

    fn tgt(&self, m: &str) -> PyResult<String> {
        self.inner.tgt(m).map(|s| s.to_string()).map_err(to_py_err)
    }

    /// Every morphism from `x` to `y`, in insertion order.
    fn hom(&self, x: &str, y: &str) -> PyResult<Vec<String>> {
        Ok(self
            .inner
            .hom(x, y)
            .map_err(to_py_err)?
            .into_iter()
            .map(|s| s.to_string())
            .collect())
    }

    /// The composite g ∘ f.
    fn compose(&self, g: &str, f: &str) -> PyResult<String> {
        self.inner.compose(g, f).map(|s| s.to_string()).map_err(to_py_err)
    }

    /// Graphviz source for the category.
    fn to_dot(&self) -> String {
        category_to_dot(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Category({}: {} objects, {} morphisms)",
            self.inner.name,
            self.inner.object_count(),
            self.inner.morphism_count()
        )
    }
}

/// The outcome of one check battery: a subject line and labeled items, each
/// with a pass flag and any witnesses for failures.
#[pyclass(name = "Report", skip_from_py_object)]
#[derive(Clone)]
struct PyReport {
    #[pyo3(get)]
    subject: String,
    items: Vec<(String, bool, Vec<String>)>,
    text: String,
}

impl From<CheckReport> for PyReport {
    fn from(rep: CheckReport) -> Self {
        let text = rep.render();
        PyReport {
            subject: rep.subject.clone(),
            items: rep
                .items
                .iter()
                .map(|i| (i.label.clone(), i.passed, i.witnesses.clone()))
                .collect(),
            text,
        }
    }
}

#[pymethods]
impl PyReport {
    fn passed(&self) -> bool {
        self.items.iter().all(|(_, ok, _)| *ok)
    }

    /// All items as (label, passed, witnesses) triples.
    fn items(&self) -> Vec<(String, bool, Vec<String>)> {
        self.items.clone()
    }

    /// Only the failing items.
    fn failures(&self) -> Vec<(String, Vec<String>)> {
        self.items
            .iter()
            .filter(|(_, ok, _)| !ok)
            .map(|(label, _, w)| (label.clone(), w.clone()))
            .collect()
    }

    fn render(&self) -> &str {
        &self.text
    }

    fn __str__(&self) -> &str {
        &self.text
    }

    fn __repr__(&self) -> String {
        format!(
            "Report({}: {} items, {})",
            self.subject,
            self.items.len(),
            if self.passed() { "pass" } else { "FAIL" }
        )
    }
}

/// A document in the plain-text format: named categories, functors,
/// transformations, and the record blocks built over them.
#[pyclass(name = "Document", skip_from_py_object)]
#[derive(Clone, Default)]
struct PyDocument {
    inner: Document,
}

impl PyDocument {
    fn wrap(inner: Document) -> Self {
        PyDocument { inner }
    }

    fn functor_named(&self, name: &str) -> PyResult<&Functor> {
        self.inner.functor(name).map_err(to_py_err)
    }
}

#[pymethods]
impl PyDocument {
    /// Parse a document from text. Raises ValueError with the line number on
    /// malformed input.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyDocument::wrap(parse_doc(text).map_err(to_py_err)?))
    }

    /// Look up a built-in fixture as a document.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let f = fixture(name).map_err(to_py_err)?;
        Ok(PyDocument::wrap(fixture_document(&f).map_err(to_py_err)?))
    }

    /// Canonical text for the document; parsing it back reprints these bytes.
    fn print(&self) -> String {
        print_doc(&self.inner)
    }

    /// Validate every block, one report each.
    fn validate(&self) -> Vec<PyReport> {
        validate_document(&self.inner).into_iter().map(Into::into).collect()
    }

    fn category(&self, name: &str) -> PyResult<PyCategory> {
        Ok(PyCategory {
            inner: self.inner.category(name).map_err(to_py_err)?.clone(),
        })
    }

    fn category_names(&self) -> Vec<String> {
        self.inner.categories.iter().map(|c| c.name.clone()).collect()
    }

    fn functor_names(&self) -> Vec<String> {
        self.inner.functors.iter().map(|f| f.name.clone()).collect()
    }

    fn nat_names(&self) -> Vec<String> {
        self.inner.nats.iter().map(|n| n.name.clone()).collect()
    }

    fn comonad_names(&self) -> Vec<String> {
        self.inner.comonads.iter().map(|c| c.name.clone()).collect()
    }

    fn adjunction_names(&self) -> Vec<String> {
        self.inner.adjunctions.iter().map(|a| a.name.clone()).collect()
    }

    fn coalgebra_names(&self) -> Vec<String> {
        self.inner.coalgebras.iter().map(|c| c.name.clone()).collect()
    }

    fn normal_names(&self) -> Vec<String> {
        self.inner.normals.iter().map(|n| n.name.clone()).collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "Document({} categories, {} functors, {} nats, {} records)",
            self.inner.categories.len(),
            self.inner.functors.len(),
            self.inner.nats.len(),
            self.inner.cells.len()
                + self.inner.comonads.len()
                + self.inner.adjunctions.len()
                + self.inner.coalgebras.len()
                + self.inner.normals.len(),
        )
    }
}

/// Names of the built-in fixtures.
#[pyfunction]
#[pyo3(name = "fixture_names")]
fn fixture_names_py() -> Vec<&'static str> {
    fixture_names().to_vec()
}

/// The labels of every coalgebra coherence equation, in report order.
#[pyfunction]
fn ledger_labels() -> Vec<&'static str> {
    LEDGER_LABELS.to_vec()
}

/// Parse a document from text.
#[pyfunction]
#[pyo3(name = "parse")]
fn parse_py(text: &str) -> PyResult<PyDocument> {
    PyDocument::parse(text)
}

/// Look up a built-in fixture as a document.
#[pyfunction]
#[pyo3(name = "fixture")]
fn fixture_py(name: &str) -> PyResult<PyDocument> {
    PyDocument::fixture(name)
}

/// Build the comma category of a named functor; the result document carries
/// the total category, both projections, and the canonical transformation.
#[pyfunction]
#[pyo3(signature = (doc, functor, budget=None))]
fn comma_of(doc: PyRef<'_, PyDocument>, functor: &str, budget: Option<usize>) -> PyResult<PyDocument> {
    let g = doc.functor_named(functor)?;
    let bundle = comma(g, budget_or_default(budget)).map_err(to_py_err)?;
    Ok(PyDocument::wrap(comma_document(&bundle).map_err(to_py_err)?))
}

/// Build the arrow category of a named category.
#[pyfunction]
#[pyo3(signature = (doc, category, budget=None))]
fn arrow_of(doc: PyRef<'_, PyDocument>, category: &str, budget: Option<usize>) -> PyResult<PyDocument> {
    let cat = doc.inner.category(category).map_err(to_py_err)?;
    let bundle = arrow_category(cat, budget_or_default(budget)).map_err(to_py_err)?;
    Ok(PyDocument::wrap(comma_document(&bundle).map_err(to_py_err)?))
}

/// Check the comonad laws of the comma construction over a named functor.
#[pyfunction]
#[pyo3(signature = (doc, functor, budget=None))]
fn comonad_laws(doc: PyRef<'_, PyDocument>, functor: &str, budget: Option<usize>) -> PyResult<PyReport> {
    let g = doc.functor_named(functor)?;
    Ok(check_comonad_laws(g, budget_or_default(budget)).map_err(to_py_err)?.into())
}

/// Check every coherence equation of a named colax coalgebra.
#[pyfunction]
fn coalgebra_check(doc: PyRef<'_, PyDocument>, name: &str) -> PyResult<PyReport> {
    let co = doc.inner.coalgebra(name).map_err(to_py_err)?;
    Ok(validate_coalgebra(co).into())
}

/// Check the sixteen derived compatibility cubes of a named coalgebra.
#[pyfunction]
fn derived_cubes(doc: PyRef<'_, PyDocument>, name: &str) -> PyResult<PyReport> {
    let co = doc.inner.coalgebra(name).map_err(to_py_err)?;
    Ok(verify_derived_cubes(co).into())
}

/// Which refinements a named coalgebra satisfies, from colax up to strict.
#[pyfunction]
fn coalgebra_classify(doc: PyRef<'_, PyDocument>, name: &str) -> PyResult<Vec<&'static str>> {
    let co = doc.inner.coalgebra(name).map_err(to_py_err)?;
    classify(co).map_err(to_py_err)
}

/// Build the Kleisli category of a named comonad, with its adjunction.
#[pyfunction]
#[pyo3(signature = (doc, comonad, budget=None))]
fn kleisli(doc: PyRef<'_, PyDocument>, comonad: &str, budget: Option<usize>) -> PyResult<PyDocument> {
    let c = doc.inner.comonad(comonad).map_err(to_py_err)?;
    let bundle = kleisli_category(c, budget_or_default(budget)).map_err(to_py_err)?;
    Ok(PyDocument::wrap(kleisli_document(&bundle).map_err(to_py_err)?))
}

/// Build the Eilenberg–Moore category of a named comonad.
#[pyfunction]
#[pyo3(signature = (doc, comonad, budget=None))]
fn em(doc: PyRef<'_, PyDocument>, comonad: &str, budget: Option<usize>) -> PyResult<PyDocument> {
    let c = doc.inner.comonad(comonad).map_err(to_py_err)?;
    let bundle = em_category(c, budget_or_default(budget)).map_err(to_py_err)?;
    Ok(PyDocument::wrap(em_document(&bundle).map_err(to_py_err)?))
}

/// Check the Kleisli liftings of a named coalgebra's K and H.
#[pyfunction]
#[pyo3(signature = (doc, coalgebra, budget=None))]
fn lift_kleisli(doc: PyRef<'_, PyDocument>, coalgebra: &str, budget: Option<usize>) -> PyResult<PyReport> {
    let co = doc.inner.coalgebra(coalgebra).map_err(to_py_err)?;
    Ok(check_kleisli_lifts(co, budget_or_default(budget)).map_err(to_py_err)?.into())
}

/// Check the Eilenberg–Moore lifting of a named coalgebra's K against the
/// distributive-law route.
#[pyfunction]
#[pyo3(signature = (doc, coalgebra, budget=None))]
fn lift_em(doc: PyRef<'_, PyDocument>, coalgebra: &str, budget: Option<usize>) -> PyResult<PyReport> {
    let co = doc.inner.coalgebra(coalgebra).map_err(to_py_err)?;
    Ok(check_em_lifts(co, budget_or_default(budget)).map_err(to_py_err)?.into())
}

/// Build the distributive law a named coalgebra generates and check it.
#[pyfunction]
fn dist_law(doc: PyRef<'_, PyDocument>, coalgebra: &str) -> PyResult<PyReport> {
    let co = doc.inner.coalgebra(coalgebra).map_err(to_py_err)?;
    let law = dist_law_kappa(co).map_err(to_py_err)?;
    Ok(check_dist_law(co, &law).into())
}

/// Check whether a named coalgebra is split, with the factorizations.
#[pyfunction]
fn split(doc: PyRef<'_, PyDocument>, coalgebra: &str) -> PyResult<PyReport> {
    let co = doc.inner.coalgebra(coalgebra).map_err(to_py_err)?;
    let mut rep = CheckReport::new(format!("split analysis of {}", co.name));
    rep.absorb("", is_split(co));
    rep.absorb("", split_factorizations(co));
    Ok(rep.into())
}

/// Check every law of a named normal colax coalgebra.
#[pyfunction]
fn normal_check(doc: PyRef<'_, PyDocument>, name: &str) -> PyResult<PyReport> {
    let n = doc.inner.normal(name).map_err(to_py_err)?;
    Ok(validate_normal(n).into())
}

/// Embed a named normal coalgebra as a full colax coalgebra document.
#[pyfunction]
fn normal_to_general(doc: PyRef<'_, PyDocument>, name: &str) -> PyResult<PyDocument> {
    let n = doc.inner.normal(name).map_err(to_py_err)?;
    let co = to_general(n).map_err(to_py_err)?;
    Ok(PyDocument::wrap(fixture_document(&Fixture::Coalgebra(co)).map_err(to_py_err)?))
}

/// Dress a named adjunction as a normal colax coalgebra, with identity
/// factorization through H = G.
#[pyfunction]
#[pyo3(name = "from_adjunction")]
fn from_adjunction_py(doc: PyRef<'_, PyDocument>, adjunction: &str) -> PyResult<PyDocument> {
    let adj = doc.inner.adjunction(adjunction).map_err(to_py_err)?;
    let omega = NatTrans::identity_on(&adj.right).map_err(to_py_err)?;
    let chi = NatTrans::identity_on(&adj.right).map_err(to_py_err)?;
    let n = from_adjunction(adj, &omega, &chi).map_err(to_py_err)?;
    Ok(PyDocument::wrap(fixture_document(&Fixture::Normal(n)).map_err(to_py_err)?))
}

/// Recover the adjunction a named normal coalgebra carries.
#[pyfunction]
#[pyo3(name = "to_adjunction")]
fn to_adjunction_py(doc: PyRef<'_, PyDocument>, name: &str) -> PyResult<PyDocument> {
    let n = doc.inner.normal(name).map_err(to_py_err)?;
    let adj = to_adjunction(n);
    Ok(PyDocument::wrap(fixture_document(&Fixture::Adjunction(adj)).map_err(to_py_err)?))
}

/// Check whether named K is simultaneously left and right adjoint to G.
#[pyfunction]
#[pyo3(signature = (doc, k, g, budget=None))]
fn frobenius(doc: PyRef<'_, PyDocument>, k: &str, g: &str, budget: Option<usize>) -> PyResult<PyReport> {
    let kf = doc.functor_named(k)?;
    let gf = doc.functor_named(g)?;
    Ok(check_frobenius(kf, gf, budget_or_default(budget)).map_err(to_py_err)?.into())
}

/// Search for a left adjoint of a named functor by universal arrows; returns
/// the adjunction as a document, or None when some object has no universal
/// arrow into the image.
#[pyfunction]
#[pyo3(signature = (doc, functor, budget=None))]
fn find_left_adjoint(doc: PyRef<'_, PyDocument>, functor: &str, budget: Option<usize>) -> PyResult<Option<PyDocument>> {
    let g = doc.functor_named(functor)?;
    match brute_force_left_adjoint(g, budget_or_default(budget)).map_err(to_py_err)? {
        Some(adj) => Ok(Some(PyDocument::wrap(
            fixture_document(&Fixture::Adjunction(adj)).map_err(to_py_err)?,
        ))),
        None => Ok(None),
    }
}

/// Check the pair-of-categories monad laws at a pair of named categories.
#[pyfunction]
#[pyo3(signature = (doc, x, a, budget=None))]
fn pair_monad_laws(doc: PyRef<'_, PyDocument>, x: &str, a: &str, budget: Option<usize>) -> PyResult<PyReport> {
    let xc = doc.inner.category(x).map_err(to_py_err)?;
    let ac = doc.inner.category(a).map_err(to_py_err)?;
    let rep = check_pair_monad_laws(
        &Functor::identity(xc),
        &Functor::identity(ac),
        budget_or_default(budget),
    )
    .map_err(to_py_err)?;
    Ok(rep.into())
}

/// Sample a colax coalgebra over a random poset, as a document.
#[pyfunction]
fn random_coalgebra(seed: u64, size: usize) -> PyResult<PyDocument> {
    let co = random_poset_coalgebra(seed, size).map_err(to_py_err)?;
    Ok(PyDocument::wrap(fixture_document(&Fixture::Coalgebra(co)).map_err(to_py_err)?))
}

/// Graphviz source for a named category of a document.
#[pyfunction]
fn to_dot(doc: PyRef<'_, PyDocument>, category: &str) -> PyResult<String> {
    Ok(category_to_dot(doc.inner.category(category).map_err(to_py_err)?))
}

#[pymodule]
fn comma_kit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCategory>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyDocument>()?;
    m.add_function(wrap_pyfunction!(fixture_names_py, m)?)?;
    m.add_function(wrap_pyfunction!(ledger_labels, m)?)?;
    m.add_function(wrap_pyfunction!(parse_py, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_py, m)?)?;
    m.add_function(wrap_pyfunction!(comma_of, m)?)?;
    m.add_function(wrap_pyfunction!(arrow_of, m)?)?;
    m.add_function(wrap_pyfunction!(comonad_laws, m)?)?;
    m.add_function(wrap_pyfunction!(coalgebra_check, m)?)?;
    m.add_function(wrap_pyfunction!(derived_cubes, m)?)?;
    m.add_function(wrap_pyfunction!(coalgebra_classify, m)?)?;
    m.add_function(wrap_pyfunction!(kleisli, m)?)?;
    m.add_function(wrap_pyfunction!(em, m)?)?;
    m.add_function(wrap_pyfunction!(lift_kleisli, m)?)?;
    m.add_function(wrap_pyfunction!(lift_em, m)?)?;
    m.add_function(wrap_pyfunction!(dist_law, m)?)?;
    m.add_function(wrap_pyfunction!(split, m)?)?;
    m.add_function(wrap_pyfunction!(normal_check, m)?)?;
    m.add_function(wrap_pyfunction!(normal_to_general, m)?)?;
    m.add_function(wrap_pyfunction!(from_adjunction_py, m)?)?;
    m.add_function(wrap_pyfunction!(to_adjunction_py, m)?)?;
    m.add_function(wrap_pyfunction!(frobenius, m)?)?;
    m.add_function(wrap_pyfunction!(find_left_adjoint, m)?)?;
    m.add_function(wrap_pyfunction!(pair_monad_laws, m)?)?;
    m.add_function(wrap_pyfunction!(random_coalgebra, m)?)?;
    m.add_function(wrap_pyfunction!(to_dot, m)?)?;
    Ok(())
}
