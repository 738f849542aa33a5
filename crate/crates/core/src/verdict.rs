//! Named pass/fail checks with witnesses in basis-label notation.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::linalg::op::split_index;
use crate::linalg::{Op, SparseVec};
use crate::scalar::CycScalar;

/// Basis labels of a tensor product of labelled spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    factors: Vec<Arc<Vec<String>>>,
}

impl Space {
    pub fn new(labels: Vec<String>) -> Self {
        Space {
            factors: vec![Arc::new(labels)],
        }
    }

    pub fn from_shared(labels: Arc<Vec<String>>) -> Self {
        Space {
            factors: vec![labels],
        }
    }

    /// The one-dimensional ground space.
    pub fn unit() -> Self {
        Space::new(vec!["1".to_string()])
    }

    pub fn tensor(&self, other: &Space) -> Space {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Space { factors }
    }

    pub fn tensor_all(spaces: &[&Space]) -> Space {
        Space {
            factors: spaces.iter().flat_map(|s| s.factors.iter().cloned()).collect(),
        }
    }

    /// Collapses the factors into one labelled space.
    pub fn flatten(&self) -> Space {
        Space::new((0..self.dim()).map(|i| self.label(i)).collect())
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|f| f.len()).product()
    }

    pub fn label(&self, idx: usize) -> String {
        if self.factors.len() == 1 {
            return self.factors[0][idx].clone();
        }
        let dims: Vec<usize> = self.factors.iter().map(|f| f.len()).collect();
        let mut multi = vec![0; dims.len()];
        split_index(idx, &dims, &mut multi);
        multi
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f[i].clone())
            .collect::<Vec<_>>()
            .join(" ⊗ ")
    }

    pub fn format(&self, v: &SparseVec) -> String {
        format_vec(v, |i| self.label(i))
    }
}

pub fn format_vec(v: &SparseVec, label: impl Fn(usize) -> String) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let text = format_coeff(c);
        let lab = label(i);
        let term = match text.as_str() {
            "1" => lab,
            "-1" => format!("-{lab}"),
            _ => format!("{text}·{lab}"),
        };
        if k == 0 {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

fn format_coeff(c: &CycScalar) -> String {
    let s = c.to_string();
    if c.as_rational().is_some() {
        s
    } else {
        format!("({s})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        }
    }

    /// `None` means pass.
    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    /// Appends `other` with each check name prefixed.
    pub fn extend_prefixed(&mut self, prefix: &str, other: AxiomReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.get(name).map(|c| c.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{mark} {}", c.name)?;
            if let Some(w) = &c.witness {
                write!(f, ": {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compares two composites column by column and reports the first input
/// basis vector on which they disagree.
pub fn compare_ops(name: &str, lhs: &Op<'_>, rhs: &Op<'_>, dom: &Space, cod: &Space) -> Check {
    match lhs.first_difference(rhs) {
        Ok(None) => Check::pass(name),
        Ok(Some((_, col))) => {
            let l = lhs.apply_basis(col);
            let r = rhs.apply_basis(col);
            Check::fail(
                name,
                format!(
                    "{} ↦ {} but {}",
                    dom.label(col),
                    cod.format(&l),
                    cod.format(&r)
                ),
            )
        }
        Err(e) => Check::fail(name, format!("shape error: {e}")),
    }
}
