use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Outcome of a check: verdict, optional 1-based witness and the nonzero
/// expansion at the witness, plus free-form data and sub-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub check: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expansion: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub sufficient_only: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub data: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Report>,
}

impl Report {
    pub fn pass(check: impl Into<String>) -> Report {
        Report::verdict(check, true)
    }

    pub fn verdict(check: impl Into<String>, pass: bool) -> Report {
        Report {
            check: check.into(),
            pass,
            witness: None,
            expansion: None,
            sufficient_only: false,
            data: BTreeMap::new(),
            children: Vec::new(),
        }
    }

    pub fn fail(check: impl Into<String>, witness: Vec<usize>, expansion: impl Into<String>) -> Report {
        Report {
            witness: Some(witness),
            expansion: Some(expansion.into()),
            ..Report::verdict(check, false)
        }
    }

    /// Passes iff every child passes.
    pub fn all(check: impl Into<String>, children: Vec<Report>) -> Report {
        Report {
            pass: children.iter().all(|c| c.pass),
            children,
            ..Report::verdict(check, true)
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Report {
        self.data.insert(key.into(), value.to_string());
        self
    }

    pub fn push(&mut self, child: Report) {
        self.pass &= child.pass;
        self.children.push(child);
    }

    /// First failing report in depth-first order.
    pub fn first_failure(&self) -> Option<&Report> {
        if self.pass {
            return None;
        }
        self.children
            .iter()
            .find_map(|c| c.first_failure())
            .or(Some(self))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(&mut out, 0);
        out
    }

    fn write_text(&self, out: &mut String, depth: usize) {
        let pad = "  ".repeat(depth);
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        out.push_str(&format!("{pad}{}: {verdict}", self.check));
        if self.sufficient_only {
            out.push_str(" (sufficient condition only)");
        }
        out.push('\n');
        if let Some(w) = &self.witness {
            let w: Vec<String> = w.iter().map(|i| i.to_string()).collect();
            out.push_str(&format!("{pad}  witness: ({})\n", w.join(",")));
        }
        if let Some(e) = &self.expansion {
            out.push_str(&format!("{pad}  expansion: {e}\n"));
        }
        for (k, v) in &self.data {
            out.push_str(&format!("{pad}  {k}: {v}\n"));
        }
        for c in &self.children {
            c.write_text(out, depth + 1);
        }
    }
}
