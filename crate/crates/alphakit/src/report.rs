//! Named-check reports, serializable to JSON and CSV.

use serde::{Deserialize, Serialize};

/// One named check: a measured value against a bound at a tolerance.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NamedCheck {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub tol: f64,
    pub passed: bool,
    /// Soft checks are recorded but never fail a run (used where the
    /// measured quantity is reported for audit rather than asserted).
    #[serde(default)]
    pub soft: bool,
}

impl NamedCheck {
    /// Hard check: `value ≤ bound + tol`.
    pub fn upper(name: &str, value: f64, bound: f64, tol: f64) -> Self {
        Self { name: name.into(), value, bound, tol, passed: value <= bound + tol, soft: false }
    }

    /// Hard check: `value ≥ bound - tol`.
    pub fn lower(name: &str, value: f64, bound: f64, tol: f64) -> Self {
        Self { name: name.into(), value, bound, tol, passed: value >= bound - tol, soft: false }
    }

    pub fn soft(mut self) -> Self {
        self.soft = true;
        self
    }
}

/// Full verification report: configuration echo plus one entry per check.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub alpha: f64,
    pub seed: u64,
    pub rel_tol: f64,
    pub checks: Vec<NamedCheck>,
    /// True iff every hard (non-soft) check passed.
    pub all_passed: bool,
}

impl VerificationReport {
    pub fn new(alpha: f64, seed: u64, rel_tol: f64, checks: Vec<NamedCheck>) -> Self {
        let all_passed = checks.iter().all(|c| c.passed || c.soft);
        Self { alpha, seed, rel_tol, checks, all_passed }
    }

    pub fn hard_failures(&self) -> impl Iterator<Item = &NamedCheck> {
        self.checks.iter().filter(|c| !c.passed && !c.soft)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// CSV with the same fields, one row per check.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,value,bound,tol,passed,soft\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                c.name, c.value, c.bound, c.tol, c.passed, c.soft
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_fail_logic() {
        let checks = vec![
            NamedCheck::upper("a", 1.0, 2.0, 0.0),
            NamedCheck::lower("b", 1.0, 2.0, 0.0).soft(),
        ];
        let rep = VerificationReport::new(1.0, 7, 1e-12, checks);
        assert!(rep.all_passed, "soft failures must not fail the run");
        assert_eq!(rep.hard_failures().count(), 0);

        let checks = vec![NamedCheck::upper("a", 3.0, 2.0, 0.5)];
        let rep = VerificationReport::new(1.0, 7, 1e-12, checks);
        assert!(!rep.all_passed);
    }

    #[test]
    fn json_roundtrip() {
        let rep = VerificationReport::new(
            0.5,
            42,
            1e-12,
            vec![NamedCheck::upper("x", 0.1, 1.0, 1e-9)],
        );
        let s = rep.to_json();
        let back: VerificationReport = serde_json::from_str(&s).unwrap();
        assert_eq!(rep, back);
        assert!(rep.to_csv().contains("x,0.1,1,"));
    }
}
