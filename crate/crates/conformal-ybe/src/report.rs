//! Per-axiom verdicts with first-counterexample reporting.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Duration;

/// A counterexample: the generator tuple (lexicographically first failing
/// one) and the nonzero residual, printed in canonical monomial order.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Counterexample {
    pub generators: Vec<String>,
    pub residual: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportItem {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl ReportItem {
    pub fn pass(axiom: &str) -> Self {
        ReportItem {
            axiom: axiom.to_string(),
            passed: true,
            counterexample: None,
        }
    }

    pub fn fail(axiom: &str, generators: Vec<String>, residual: String) -> Self {
        ReportItem {
            axiom: axiom.to_string(),
            passed: false,
            counterexample: Some(Counterexample {
                generators,
                residual,
            }),
        }
    }
}

/// Deterministic check report: stable item order, canonical residual text.
/// Timing is carried separately so machine-readable output stays
/// byte-identical across runs.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub items: Vec<ReportItem>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn overall(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn push(&mut self, item: ReportItem) {
        self.items.push(item);
    }

    pub fn merge(&mut self, other: Report) {
        self.items.extend(other.items);
        self.elapsed += other.elapsed;
    }

    pub fn item(&self, axiom: &str) -> Option<&ReportItem> {
        self.items.iter().find(|i| i.axiom == axiom)
    }

    /// Scans residuals in tuple order, recording the first failure.
    ///
    /// `tuples` must already be in lexicographic generator order; `residual`
    /// returns `None` for a passing tuple and the printed residual otherwise.
    pub fn check_axiom<T: Clone>(
        &mut self,
        axiom: &str,
        tuples: impl Iterator<Item = T>,
        names: impl Fn(&T) -> Vec<String>,
        mut residual: impl FnMut(&T) -> Option<String>,
    ) {
        for t in tuples {
            if let Some(res) = residual(&t) {
                self.push(ReportItem::fail(axiom, names(&t), res));
                return;
            }
        }
        self.push(ReportItem::pass(axiom));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(
                f,
                "  {:<28} {}",
                item.axiom,
                if item.passed { "pass" } else { "FAIL" }
            )?;
            if let Some(ce) = &item.counterexample {
                writeln!(f, "    at ({})", ce.generators.join(", "))?;
                writeln!(f, "    residual: {}", ce.residual)?;
            }
        }
        write!(
            f,
            "overall: {}",
            if self.overall() { "pass" } else { "FAIL" }
        )
    }
}

/// Iterates all `k`-tuples over `0..n` in lexicographic order.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * n);
        for t in &out {
            for i in 0..n {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}
