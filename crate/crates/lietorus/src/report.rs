//! Verification reports: named pass/fail checks with witnesses.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub window: i64,
    pub atoms_checked: usize,
}

impl Report {
    pub fn new(window: i64) -> Report {
        Report { checks: Vec::new(), window, atoms_checked: 0 }
    }

    pub fn pass(&mut self, name: &str, info: Value) {
        self.checks.push(Check { name: name.to_string(), status: Status::Pass, witness: info });
    }

    pub fn fail(&mut self, name: &str, witness: Value) {
        self.checks.push(Check { name: name.to_string(), status: Status::Fail, witness });
    }

    /// Records a check from the tally of a sweep: `tested` cases, the number of
    /// failures and the first failing witness.
    pub fn tally(&mut self, name: &str, tested: usize, failures: usize, first: Option<Value>) {
        match first {
            Some(w) if failures > 0 => self.fail(name, json!({"failures": failures, "tested": tested, "example": w})),
            _ => self.pass(name, json!({"tested": tested})),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        self.atoms_checked += other.atoms_checked;
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let s = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{s} {}", c.name));
            if c.status == Status::Fail {
                out.push_str(&format!("  {}", c.witness));
            }
            out.push('\n');
        }
        out.push_str(&format!("window {} atoms_checked {}\n", self.window, self.atoms_checked));
        out
    }
}
