//! Per-element verification reports shared by the checkers.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementCheck {
    pub element: String,
    pub passed: bool,
    /// The root order `d` at which the check failed, when it is per-divisor.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_divisor: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ElementCheck {
    pub fn pass(element: impl Into<String>) -> Self {
        Self {
            element: element.into(),
            passed: true,
            failing_divisor: None,
            detail: None,
        }
    }

    pub fn fail(element: impl Into<String>, failing_divisor: Option<u64>, detail: impl Into<String>) -> Self {
        Self {
            element: element.into(),
            passed: false,
            failing_divisor,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checks: Vec<ElementCheck>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: ElementCheck) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ElementCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// The first failure in check order.
    pub fn witness(&self) -> Option<&ElementCheck> {
        self.failures().next()
    }

    /// Append another report's checks, prefixing element names with its name.
    pub fn absorb(&mut self, other: CheckReport) {
        for mut c in other.checks {
            c.element = format!("{}:{}", other.name, c.element);
            self.checks.push(c);
        }
    }
}
