//! Command-line front end: load documents, run constructions and checks,
//! print reports. Exit codes: 0 when every requested check passed, 1 when a
//! check failed, 2 on input, parse, or budget errors.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use comma_kit::catalog::{fixture, fixture_names, random_poset_coalgebra, Fixture};
use comma_kit::category::{validate_category, validate_functor, validate_nat_trans, Functor, NatTrans};
use comma_kit::coalgebra::{
    check_interpretations, derive_coalgebras, derive_comonads, validate_coalgebra,
    verify_derived_cubes,
};
use comma_kit::comma::{arrow_category, check_comonad_laws, comma, CommaBundle};
use comma_kit::comonad::{check_adjunction, em_category, kleisli_category, validate_comonad};
use comma_kit::doc::{
    comma_document, em_document, fixture_document, kleisli_document, parse, print as print_doc,
    validate_document, Document,
};
use comma_kit::dot::category_to_dot;
use comma_kit::liftings::{
    check_dist_law, check_em_lifts, check_kleisli_lifts, dist_law_kappa, is_split,
    split_factorizations,
};
use comma_kit::normal::{
    brute_force_left_adjoint, check_frobenius, check_pair_monad_laws, from_adjunction,
    to_adjunction, validate_normal,
};
use comma_kit::report::{CheckItem, CheckReport};
use comma_kit::{Error, Result, DEFAULT_MORPHISM_BUDGET};

/// Finite-category computation kit: comma categories, comonads, colax
/// coalgebras and their liftings, checked exhaustively.
#[derive(Parser)]
#[command(name = "comma-kit", version, max_term_width = 100)]
struct Cli {
    /// Emit reports as a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Skip validating every block of a loaded document up front.
    #[arg(long, global = true)]
    no_validate: bool,

    #[command(subcommand)]
    cmd: Cmd,
}

/// FILE arguments accept a path, `-` for standard input, or `builtin(NAME)`
/// for a built-in fixture (see `fixtures list`).
#[derive(Subcommand)]
enum Cmd {
    /// Check every block of a document.
    Validate { file: String },
    /// Build the comma category of a functor, with projections.
    Comma {
        file: String,
        #[arg(long)]
        functor: String,
        /// Write the construction as a document.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the arrow category of a category.
    Arrow {
        file: String,
        #[arg(long)]
        category: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the comonad laws of the comma construction over a functor.
    ComonadLaws {
        file: String,
        #[arg(long)]
        functor: String,
    },
    /// Check every coherence equation of a colax coalgebra.
    CoalgebraCheck {
        file: String,
        #[arg(long)]
        name: String,
        /// Also check the eight derived compatibility cubes on each side.
        #[arg(long)]
        derived_cubes: bool,
    },
    /// Derive the two comonads and the comonad-coalgebra families carried
    /// by a colax coalgebra.
    CoalgebraDerive {
        file: String,
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Kleisli category of a comonad.
    Kleisli {
        file: String,
        #[arg(long)]
        comonad: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Eilenberg-Moore category of a comonad.
    Em {
        file: String,
        #[arg(long)]
        comonad: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the Kleisli liftings of a coalgebra's K and H.
    LiftKleisli {
        file: String,
        #[arg(long)]
        coalgebra: String,
    },
    /// Check the Eilenberg-Moore lifting of a coalgebra's K.
    LiftEm {
        file: String,
        #[arg(long)]
        coalgebra: String,
    },
    /// Build and check the distributive law induced by a coalgebra.
    Distlaw {
        file: String,
        #[arg(long)]
        coalgebra: String,
    },
    /// Check whether a coalgebra is split, with the factorizations.
    Split {
        file: String,
        #[arg(long)]
        coalgebra: String,
    },
    /// Check every law of a normal colax coalgebra.
    NormalCheck {
        file: String,
        #[arg(long)]
        name: String,
    },
    /// Dress an adjunction as a normal colax coalgebra and check it.
    FromAdjunction {
        file: String,
        #[arg(long)]
        adjunction: String,
        /// Transformation G => H factoring the comparison (defaults to the
        /// identity on the right adjoint).
        #[arg(long)]
        omega: Option<String>,
        /// Transformation H => G in the other direction (same default).
        #[arg(long)]
        chi: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the adjunction underlying a normal colax coalgebra.
    ToAdjunction {
        file: String,
        #[arg(long)]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether K is simultaneously left and right adjoint to G.
    Frobenius {
        file: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        k: String,
    },
    /// Search for a left adjoint of a functor by universal arrows.
    FindLeftAdjoint {
        file: String,
        #[arg(long)]
        functor: String,
        /// Search budget (overrides COMMA_KIT_BUDGET).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the pair-of-categories monad laws at a pair of categories.
    Ar {
        file: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// List or emit the built-in fixtures.
    Fixtures {
        #[command(subcommand)]
        cmd: FixturesCmd,
    },
    /// Sample a coalgebra over a random poset and check it.
    RandomCoalgebra {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a category as a graph description.
    Dot {
        file: String,
        #[arg(long)]
        category: String,
    },
}

#[derive(Subcommand)]
enum FixturesCmd {
    /// List the built-in fixture names.
    List,
    /// Print a fixture in the document format.
    Emit {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    };
    std::process::exit(code);
}

/// Write to stdout, dying with the conventional SIGPIPE status when the
/// reader has gone away instead of panicking mid-report.
fn put(s: impl AsRef<str>) {
    use std::io::Write;
    if std::io::stdout().write_all(s.as_ref().as_bytes()).is_err() {
        std::process::exit(141);
    }
}

fn putln(s: impl AsRef<str>) {
    put(format!("{}\n", s.as_ref()));
}

/// The size budget: COMMA_KIT_BUDGET when set, the library default otherwise.
fn env_budget() -> Result<usize> {
    match std::env::var("COMMA_KIT_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Construction(format!("COMMA_KIT_BUDGET is not a number: `{s}`"))),
        Err(_) => Ok(DEFAULT_MORPHISM_BUDGET),
    }
}

fn load(file: &str) -> Result<Document> {
    if let Some(name) = file
        .strip_prefix("builtin(")
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| file.strip_prefix("builtin:"))
    {
        return fixture_document(&fixture(name)?);
    }
    let text = if file == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::Construction(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file)
            .map_err(|e| Error::Construction(format!("reading `{file}`: {e}")))?
    };
    parse(&text)
}

/// Load a document and, unless disabled, validate every block, reporting
/// the failing ones. `Err(code)` in the inner result is a ready exit code.
fn load_checked(
    file: &str,
    no_validate: bool,
    json: bool,
) -> Result<std::result::Result<Document, i32>> {
    let doc = load(file)?;
    if !no_validate {
        let failing: Vec<CheckReport> = validate_document(&doc)
            .into_iter()
            .filter(|r| !r.passed())
            .collect();
        if !failing.is_empty() {
            let code = emit(
                Some(format!("document {file}: invalid blocks")),
                &failing,
                json,
            );
            return Ok(Err(code));
        }
    }
    Ok(Ok(doc))
}

/// Print reports (text or JSON) and turn them into an exit code.
fn emit(banner: Option<String>, reports: &[CheckReport], json: bool) -> i32 {
    if json {
        let records: Vec<serde_json::Value> = reports
            .iter()
            .flat_map(|r| {
                r.items.iter().map(move |i| {
                    serde_json::json!({
                        "subject": r.subject,
                        "label": i.label,
                        "verdict": if i.passed { "pass" } else { "fail" },
                        "witness": i.witnesses.join("; "),
                    })
                })
            })
            .collect();
        let subject = banner
            .or_else(|| reports.first().map(|r| r.subject.clone()))
            .unwrap_or_default();
        putln(
            serde_json::json!({ "subject": subject, "records": records }).to_string(),
        );
    } else {
        if let Some(b) = &banner {
            putln(b);
        }
        for (ix, r) in reports.iter().enumerate() {
            if ix > 0 || banner.is_some() {
                putln("");
            }
            put(r.render());
        }
    }
    if reports.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}

fn write_out(doc: &Document, path: Option<&Path>) -> Result<()> {
    if let Some(path) = path {
        std::fs::write(path, print_doc(doc))
            .map_err(|e| Error::Construction(format!("writing `{}`: {e}", path.display())))?;
    }
    Ok(())
}

fn comma_reports(bundle: &CommaBundle) -> Vec<CheckReport> {
    vec![
        validate_category(&bundle.total),
        validate_functor(&bundle.d0),
        validate_functor(&bundle.d1),
        validate_nat_trans(&bundle.delta),
    ]
}

fn counts(c: &comma_kit::FinCategory) -> (usize, usize) {
    (c.objects().count(), c.morphism_ids().count())
}

fn run(cli: Cli) -> Result<i32> {
    let json = cli.json;
    let no_validate = cli.no_validate;
    let budget = env_budget()?;
    macro_rules! doc {
        ($file:expr) => {
            match load_checked($file, no_validate, json)? {
                Ok(doc) => doc,
                Err(code) => return Ok(code),
            }
        };
    }

    match cli.cmd {
        Cmd::Validate { file } => {
            let doc = load(&file)?;
            let reports = validate_document(&doc);
            Ok(emit(Some(format!("document {file}")), &reports, json))
        }

        Cmd::Comma { file, functor, out } => {
            let doc = doc!(&file);
            let g = doc.functor(&functor)?;
            let bundle = comma(g, budget)?;
            let (o, m) = counts(&bundle.total);
            write_out(&comma_document(&bundle)?, out.as_deref())?;
            Ok(emit(
                Some(format!("{}: {o} objects, {m} morphisms", bundle.total.name)),
                &comma_reports(&bundle),
                json,
            ))
        }

        Cmd::Arrow { file, category, out } => {
            let doc = doc!(&file);
            let cat = doc.category(&category)?;
            let bundle = arrow_category(cat, budget)?;
            let (o, m) = counts(&bundle.total);
            write_out(&comma_document(&bundle)?, out.as_deref())?;
            Ok(emit(
                Some(format!("{}: {o} objects, {m} morphisms", bundle.total.name)),
                &comma_reports(&bundle),
                json,
            ))
        }

        Cmd::ComonadLaws { file, functor } => {
            let doc = doc!(&file);
            let g = doc.functor(&functor)?;
            let report = check_comonad_laws(g, budget)?;
            Ok(emit(None, &[report], json))
        }

        Cmd::CoalgebraCheck {
            file,
            name,
            derived_cubes,
        } => {
            let doc = doc!(&file);
            let co = doc.coalgebra(&name)?;
            let mut report = validate_coalgebra(co);
            if derived_cubes {
                report.absorb("", verify_derived_cubes(co));
            }
            Ok(emit(None, &[report], json))
        }

        Cmd::CoalgebraDerive { file, name, out } => {
            let doc = doc!(&file);
            let co = doc.coalgebra(&name)?;
            let (cm_c, cm_q) = derive_comonads(co);
            let families = derive_coalgebras(co)?;
            if let Some(path) = &out {
                let mut outdoc = Document::default();
                outdoc.add_category(co.x_cat().clone())?;
                outdoc.add_category(co.a_cat().clone())?;
                outdoc.add_functor(co.c.clone())?;
                outdoc.add_functor(co.q.clone())?;
                outdoc.comonads.push(cm_c.clone());
                outdoc.comonads.push(cm_q.clone());
                write_out(&outdoc, Some(path))?;
            }
            if !json {
                for fam in &families {
                    putln(format!(
                        "coalgebra ({}|{}) over {}",
                        fam.carrier, fam.coaction, fam.comonad.name
                    ));
                }
            }
            let reports = vec![
                validate_comonad(&cm_c),
                validate_comonad(&cm_q),
                check_interpretations(co),
            ];
            Ok(emit(
                Some(format!(
                    "derived from {}: comonads {} and {}, {} comonad-coalgebras",
                    co.name,
                    cm_c.name,
                    cm_q.name,
                    families.len()
                )),
                &reports,
                json,
            ))
        }

        Cmd::Kleisli { file, comonad, out } => {
            let doc = doc!(&file);
            let c = doc.comonad(&comonad)?;
            let bundle = kleisli_category(c, budget)?;
            let (o, m) = counts(&bundle.total);
            if let Some(path) = &out {
                write_out(&kleisli_document(&bundle)?, Some(path))?;
            }
            let reports = vec![
                validate_category(&bundle.total),
                validate_functor(&bundle.underlying),
                validate_functor(&bundle.embed),
                check_adjunction(&bundle.adjunction),
            ];
            Ok(emit(
                Some(format!("{}: {o} objects, {m} morphisms", bundle.total.name)),
                &reports,
                json,
            ))
        }

        Cmd::Em { file, comonad, out } => {
            let doc = doc!(&file);
            let c = doc.comonad(&comonad)?;
            let bundle = em_category(c, budget)?;
            let (o, m) = counts(&bundle.total);
            if let Some(path) = &out {
                write_out(&em_document(&bundle)?, Some(path))?;
            }
            let reports = vec![
                validate_category(&bundle.total),
                validate_functor(&bundle.forgetful),
                validate_functor(&bundle.cofree),
                check_adjunction(&bundle.adjunction),
            ];
            Ok(emit(
                Some(format!("{}: {o} objects, {m} morphisms", bundle.total.name)),
                &reports,
                json,
            ))
        }

        Cmd::LiftKleisli { file, coalgebra } => {
            let doc = doc!(&file);
            let co = doc.coalgebra(&coalgebra)?;
            let report = check_kleisli_lifts(co, budget)?;
            Ok(emit(None, &[report], json))
        }

        Cmd::LiftEm { file, coalgebra } => {
            let doc = doc!(&file);
            let co = doc.coalgebra(&coalgebra)?;
            let report = check_em_lifts(co, budget)?;
            Ok(emit(None, &[report], json))
        }

        Cmd::Distlaw { file, coalgebra } => {
            let doc = doc!(&file);
            let co = doc.coalgebra(&coalgebra)?;
            let law = dist_law_kappa(co)?;
            let report = check_dist_law(co, &law);
            Ok(emit(None, &[report], json))
        }

        Cmd::Split { file, coalgebra } => {
            let doc = doc!(&file);
            let co = doc.coalgebra(&coalgebra)?;
            let reports = vec![is_split(co), split_factorizations(co)];
            Ok(emit(
                Some(format!("split analysis of {}", co.name)),
                &reports,
                json,
            ))
        }

        Cmd::NormalCheck { file, name } => {
            let doc = doc!(&file);
            let n = doc.normal(&name)?;
            let report = validate_normal(n);
            Ok(emit(None, &[report], json))
        }

        Cmd::FromAdjunction {
            file,
            adjunction,
            omega,
            chi,
            out,
        } => {
            let doc = doc!(&file);
            let adj = doc.adjunction(&adjunction)?;
            let default = NatTrans::identity_on(&adj.right)?;
            let omega = match &omega {
                Some(name) => doc.nat(name)?.clone(),
                None => default.clone(),
            };
            let chi = match &chi {
                Some(name) => doc.nat(name)?.clone(),
                None => default,
            };
            match from_adjunction(adj, &omega, &chi) {
                Ok(n) => {
                    write_out(&fixture_document(&Fixture::Normal(n.clone()))?, out.as_deref())?;
                    Ok(emit(None, &[validate_normal(&n)], json))
                }
                Err(Error::Construction(msg)) => {
                    let mut r = CheckReport::new(format!("normal coalgebra from {}", adj.name));
                    r.push(CheckItem::fail("construction", msg));
                    Ok(emit(None, &[r], json))
                }
                Err(e) => Err(e),
            }
        }

        Cmd::ToAdjunction { file, name, out } => {
            let doc = doc!(&file);
            let n = doc.normal(&name)?;
            let adj = to_adjunction(n);
            write_out(
                &fixture_document(&Fixture::Adjunction(adj.clone()))?,
                out.as_deref(),
            )?;
            Ok(emit(None, &[check_adjunction(&adj)], json))
        }

        Cmd::Frobenius { file, g, k } => {
            let doc = doc!(&file);
            let g = doc.functor(&g)?;
            let k = doc.functor(&k)?;
            let report = check_frobenius(k, g, budget)?;
            Ok(emit(None, &[report], json))
        }

        Cmd::FindLeftAdjoint {
            file,
            functor,
            budget: flag_budget,
            out,
        } => {
            let doc = doc!(&file);
            let g = doc.functor(&functor)?;
            let budget = flag_budget.unwrap_or(budget);
            let mut report = CheckReport::new(format!("left adjoint search for {}", g.name));
            match brute_force_left_adjoint(g, budget)? {
                Some(adj) => {
                    report.push(CheckItem::pass("exists"));
                    report.absorb("", check_adjunction(&adj));
                    write_out(
                        &fixture_document(&Fixture::Adjunction(adj.clone()))?,
                        out.as_deref(),
                    )?;
                    Ok(emit(Some(format!("found {}", adj.name)), &[report], json))
                }
                None => {
                    report.push(CheckItem::fail(
                        "exists",
                        "some object admits no universal arrow into the image",
                    ));
                    Ok(emit(None, &[report], json))
                }
            }
        }

        Cmd::Ar { file, x, y } => {
            let doc = doc!(&file);
            let x = doc.category(&x)?;
            let y = doc.category(&y)?;
            let f = Functor::identity(x);
            let g = Functor::identity(y);
            let report = check_pair_monad_laws(&f, &g, budget)?;
            Ok(emit(None, &[report], json))
        }

        Cmd::Fixtures { cmd } => match cmd {
            FixturesCmd::List => {
                for name in fixture_names() {
                    putln(name);
                }
                Ok(0)
            }
            FixturesCmd::Emit { name, out } => {
                let doc = fixture_document(&fixture(&name)?)?;
                match &out {
                    Some(_) => write_out(&doc, out.as_deref())?,
                    None => put(print_doc(&doc)),
                }
                Ok(0)
            }
        },

        Cmd::RandomCoalgebra { seed, size, out } => {
            let co = random_poset_coalgebra(seed, size)?;
            write_out(
                &fixture_document(&Fixture::Coalgebra(co.clone()))?,
                out.as_deref(),
            )?;
            Ok(emit(
                Some(format!(
                    "sampled {} over {}",
                    co.name,
                    co.x_cat().name
                )),
                &[validate_coalgebra(&co)],
                json,
            ))
        }

        Cmd::Dot { file, category } => {
            let doc = doc!(&file);
            let cat = doc.category(&category)?;
            put(category_to_dot(cat));
            Ok(0)
        }
    }
}
