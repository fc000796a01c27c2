use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub relation: String,
    pub witness: Vec<usize>,
}

/// Outcome of checking a family of identities.
///
/// `passed` is true exactly when `failures` is empty. Failures are kept in a
/// canonical order (relation name, then witness) so that reports do not depend
/// on how the work was scheduled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub passed: bool,
    pub failures: Vec<Failure>,
    pub relations_checked: usize,
}

impl Default for CheckReport {
    fn default() -> Self {
        CheckReport { passed: true, failures: Vec::new(), relations_checked: 0 }
    }
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fail(&mut self, relation: impl Into<String>, witness: Vec<usize>) {
        self.failures.push(Failure { relation: relation.into(), witness });
        self.passed = false;
    }

    pub fn tick(&mut self, count: usize) {
        self.relations_checked += count;
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.relations_checked += other.relations_checked;
        self.failures.extend(other.failures);
        self.passed = self.failures.is_empty();
    }

    /// Sorts failures into canonical order. Call once all failures are in.
    pub fn finish(mut self) -> Self {
        self.failures.sort();
        self.failures.dedup();
        self.passed = self.failures.is_empty();
        self
    }

    pub fn failed(&self, relation: &str) -> bool {
        self.failures.iter().any(|f| f.relation == relation)
    }

    pub fn failed_relations(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.failures.iter().map(|f| f.relation.as_str()).collect();
        names.dedup();
        names
    }
}
