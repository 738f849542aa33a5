use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::verdict::{AxiomReport, Check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Informational step (printed data); never affects the summary.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    /// Stable identifier of the condition being checked.
    pub check: String,
    /// Human-readable name, including the test objects involved.
    pub detail: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall time of the stage that produced this step.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verdict: Verdict,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub steps: Vec<Step>,
    pub summary: Summary,
}

/// Turns a check name into a stable identifier: "F⊣G zigzag on F(V)" becomes
/// "fg-zigzag-on-f-v".
pub fn slug(name: &str) -> String {
    let mut out = String::new();
    let mut dash = false;
    for c in name.replace("⁻¹", "⁻").chars() {
        let letters = match c {
            'δ' | 'Δ' => Some("delta"),
            'ε' => Some("eps"),
            'θ' => Some("theta"),
            'φ' => Some("phi"),
            'ψ' | 'Ψ' => Some("psi"),
            '⁰' => Some("0"),
            '¹' => Some("1"),
            '²' => Some("2"),
            _ => None,
        };
        if c.is_ascii_alphanumeric() || letters.is_some() {
            if dash && !out.is_empty() {
                out.push('-');
            }
            dash = false;
            match letters {
                Some(w) => out.push_str(w),
                None => out.push(c.to_ascii_lowercase()),
            }
        } else if let Some(word) = match c {
            '⁻' => Some("inv"),
            '∘' => Some("o"),
            _ => None,
        } {
            if !out.is_empty() {
                out.push('-');
            }
            out.push_str(word);
            dash = true;
        } else if c != '⊣' {
            dash = true;
        }
    }
    out
}

/// Collects steps stage by stage.
#[derive(Debug)]
pub struct ReportBuilder {
    subject: String,
    steps: Vec<Step>,
    stable: bool,
}

impl ReportBuilder {
    pub fn new(subject: impl Into<String>, stable: bool) -> Self {
        ReportBuilder {
            subject: subject.into(),
            steps: Vec::new(),
            stable,
        }
    }

    pub fn set_subject(&mut self, subject: impl Into<String>) {
        self.subject = subject.into();
    }

    fn timing(&self, start: Instant) -> Option<u64> {
        (!self.stable).then(|| start.elapsed().as_millis() as u64)
    }

    pub fn push(&mut self, check: impl Into<String>, c: Check, start: Instant) {
        let timing_ms = self.timing(start);
        self.steps.push(Step {
            check: check.into(),
            detail: c.name,
            verdict: if c.passed { Verdict::Pass } else { Verdict::Fail },
            witness: c.witness,
            timing_ms,
        });
    }

    /// Adds every check of a report with id `prefix-<slug of name>`.
    pub fn extend(&mut self, prefix: &str, r: AxiomReport, start: Instant) {
        for c in r.checks {
            let id = format!("{prefix}-{}", slug(&c.name));
            self.push(id, c, start);
        }
    }

    pub fn extend_with(&mut self, r: AxiomReport, start: Instant, id: impl Fn(&str) -> String) {
        for c in r.checks {
            let name = id(&c.name);
            self.push(name, c, start);
        }
    }

    pub fn info(&mut self, check: impl Into<String>, detail: impl Into<String>, value: impl Into<String>) {
        self.steps.push(Step {
            check: check.into(),
            detail: detail.into(),
            verdict: Verdict::Info,
            witness: Some(value.into()),
            timing_ms: None,
        });
    }

    pub fn fail(&mut self, check: impl Into<String>, detail: impl Into<String>, witness: impl Into<String>, start: Instant) {
        let c = Check::fail(detail, witness);
        self.push(check, c, start);
    }

    pub fn has_failures(&self) -> bool {
        self.steps.iter().any(|s| s.verdict == Verdict::Fail)
    }

    pub fn finish(self) -> VerificationReport {
        let passed = self.steps.iter().filter(|s| s.verdict == Verdict::Pass).count();
        let failed = self.steps.iter().filter(|s| s.verdict == Verdict::Fail).count();
        VerificationReport {
            subject: self.subject,
            steps: self.steps,
            summary: Summary {
                verdict: if failed == 0 { Verdict::Pass } else { Verdict::Fail },
                passed,
                failed,
            },
        }
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.summary.verdict == Verdict::Pass
    }

    pub fn step(&self, check: &str) -> Option<&Step> {
        self.steps.iter().find(|s| s.check == check)
    }

    pub fn steps_with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Step> + 'a {
        self.steps.iter().filter(move |s| s.check.starts_with(prefix))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subject: {}", self.subject)?;
        for s in &self.steps {
            let mark = match s.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Info => "INFO",
            };
            write!(f, "{mark} [{}] {}", s.check, s.detail)?;
            if let Some(w) = &s.witness {
                write!(f, ": {w}")?;
            }
            if let Some(t) = s.timing_ms {
                write!(f, " ({t} ms)")?;
            }
            writeln!(f)?;
        }
        let v = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "summary: {v} ({} passed, {} failed)",
            self.summary.passed, self.summary.failed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slugs() {
        assert_eq!(slug("F⊣G zigzag on F(V)"), "fg-zigzag-on-f-v");
        assert_eq!(slug("counit multiplicative"), "counit-multiplicative");
        assert_eq!(slug("  (x)  "), "x");
        assert_eq!(slug("antipode inverse (S∘S⁻¹)"), "antipode-inverse-s-o-s-inv");
        assert_eq!(slug("δ¹ = δ²"), "delta1-delta2");
    }

    #[test]
    fn summary_ignores_info() {
        let mut b = ReportBuilder::new("s", true);
        let t = Instant::now();
        b.push("a", Check::pass("a"), t);
        b.info("i", "data", "1 ⊗ 1");
        let r = b.finish();
        assert!(r.passed());
        assert_eq!((r.summary.passed, r.summary.failed), (1, 0));
        assert!(r.steps[0].timing_ms.is_none());
    }
}
