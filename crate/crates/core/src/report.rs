use std::fmt;

/// Outcome of one exhaustively checked identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub witness: Option<Vec<usize>>,
}

impl Check {
    pub fn new(name: impl Into<String>, witness: Option<Vec<usize>>) -> Self {
        Check {
            name: name.into(),
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// A named list of identity checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, witness: Option<Vec<usize>>) {
        self.checks.push(Check::new(name, witness));
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(Check::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "ok    {}", c.name)?,
                Some(w) => writeln!(f, "FAIL  {} at {:?}", c.name, w)?,
            }
        }
        Ok(())
    }
}
