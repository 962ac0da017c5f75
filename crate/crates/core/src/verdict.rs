use std::fmt;

/// Maximum number of failure messages kept per check.
const KEEP: usize = 8;

/// Outcome of one named exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub examples: Vec<String>,
}

impl Verdict {
    pub fn new(name: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            checked: 0,
            failed: 0,
            examples: Vec::new(),
        }
    }

    pub fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < KEEP {
                self.examples.push(detail());
            }
        }
    }

    pub fn merge(&mut self, other: Verdict) {
        self.checked += other.checked;
        self.failed += other.failed;
        for e in other.examples {
            if self.examples.len() < KEEP {
                self.examples.push(e);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked", self.name, self.checked)?;
        if self.failed > 0 {
            write!(f, ", {} failed", self.failed)?;
        }
        f.write_str(")")?;
        for e in &self.examples {
            write!(f, "\n    {e}")?;
        }
        Ok(())
    }
}
