//! Structured pass/fail reports. Every check in this crate produces one
//! labelled item per verified law, and a failing item always carries a
//! witness string naming the first site where the law broke.

use serde::Serialize;

/// One verified law: its label, whether it held, and counterexample sites.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub label: String,
    pub passed: bool,
    /// Counterexample sites, empty when the law held. Each entry names the
    /// object/morphism where the equation failed and the two sides observed.
    pub witnesses: Vec<String>,
}

impl CheckItem {
    pub fn pass(label: impl Into<String>) -> Self {
        CheckItem {
            label: label.into(),
            passed: true,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(label: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckItem {
            label: label.into(),
            passed: false,
            witnesses: vec![witness.into()],
        }
    }
}

/// A bundle of check items about one subject (a category, a functor, a
/// coalgebra, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub subject: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            items: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| !i.passed)
    }

    /// Record the outcome of one law checked over many sites. `witnesses`
    /// holds every failing site (empty means the law passed everywhere).
    pub fn push_outcome(&mut self, label: impl Into<String>, witnesses: Vec<String>) {
        self.items.push(CheckItem {
            label: label.into(),
            passed: witnesses.is_empty(),
            witnesses,
        });
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    /// Append all items of `other`, prefixing their labels.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            item.label = format!("{prefix}{}", item.label);
            self.items.push(item);
        }
    }

    pub fn find(&self, label: &str) -> Option<&CheckItem> {
        self.items.iter().find(|i| i.label == label)
    }

    /// Human-readable one-line-per-item rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("subject: {}\n", self.subject));
        for item in &self.items {
            if item.passed {
                out.push_str(&format!("  pass  {}\n", item.label));
            } else {
                out.push_str(&format!("  FAIL  {}", item.label));
                if let Some(w) = item.witnesses.first() {
                    out.push_str(&format!("  [{w}]"));
                }
                out.push('\n');
            }
        }
        out
    }
}
