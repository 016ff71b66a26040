use serde::Serialize;

/// One named claim evaluated on one semigroup. Names are prefixed with the
/// theorem id they belong to, e.g. `prop2.1/4:a=>b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
        }
    }

    /// Theorem id part of the name (everything before the first `/`).
    pub fn theorem(&self) -> &str {
        self.name.split('/').next().unwrap_or("")
    }
}

/// Collects checks; `imp` records an implication, `iff` both directions.
#[derive(Debug, Default)]
pub(crate) struct Checks(pub Vec<Check>);

impl Checks {
    pub fn claim(&mut self, name: &str, ok: bool) {
        self.0.push(Check::new(name, ok));
    }

    pub fn imp(&mut self, name: &str, premise: bool, conclusion: bool) {
        self.0.push(Check::new(name, !premise || conclusion));
    }

    pub fn iff(&mut self, name: &str, a: bool, b: bool) {
        self.imp(&format!("{name}:=>"), a, b);
        self.imp(&format!("{name}:<="), b, a);
    }

    pub fn into_vec(self) -> Vec<Check> {
        self.0
    }
}
