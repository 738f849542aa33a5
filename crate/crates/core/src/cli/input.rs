//! The JSON input format: algebras, morphisms and modules as sparse tensors
//! with exact scalars.
//!
//! ```json
//! {
//!   "scalars": {"order": "1"},
//!   "algebras": {"kC2": {"labels": ["1", "g"], "mult": {...}, ...}},
//!   "morphisms": {"unit": {"source": "k", "target": "kC2", "map": {...}}},
//!   "modules": {"sign": {"algebra": "kC2", "labels": ["v"], "action": {...}}}
//! }
//! ```
//!
//! Each tensor is `{"rows": r, "cols": c, "entries": [[i, j, scalar], ...]}`
//! and a scalar is either a rational string such as `"-3/2"` or
//! `{"order": ℓ, "coeffs": [["num", "den"], ...]}` in the power basis of ζ_ℓ.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use crate::hopf::{HopfAlgebra, HopfData, HopfMorphism};
use crate::linalg::LinMap;
use crate::rep::ModuleRep;
use crate::verdict::Space;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Order {
    Text(String),
    Number(u32),
}

impl Order {
    pub fn value(&self) -> Result<u32> {
        match self {
            Order::Number(n) => Ok(*n),
            Order::Text(s) => s.trim().parse().with_context(|| format!("bad scalar order {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scalars {
    pub order: Order,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraEntry {
    pub labels: Vec<String>,
    pub mult: LinMap,
    pub unit: LinMap,
    pub comult: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<LinMap>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub source: String,
    pub target: String,
    pub map: LinMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleEntry {
    pub algebra: String,
    pub labels: Vec<String>,
    pub action: LinMap,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalars: Option<Scalars>,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraEntry>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismEntry>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleEntry>,
}

impl AlgebraEntry {
    pub fn from_algebra(h: &HopfAlgebra) -> Self {
        let d = h.to_data();
        AlgebraEntry {
            labels: d.labels,
            mult: d.mult,
            unit: d.unit,
            comult: d.comult,
            counit: d.counit,
            antipode: d.antipode,
            antipode_inv: d.antipode_inv,
        }
    }

    fn to_data(&self, name: &str) -> HopfData {
        HopfData {
            name: name.to_string(),
            labels: self.labels.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            antipode_inv: self.antipode_inv.clone(),
        }
    }
}

impl InputFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: InputFile = serde_json::from_str(text).map_err(|e| anyhow!("parse error: {e}"))?;
        if let Some(s) = &file.scalars {
            if s.order.value()? == 0 {
                bail!("scalar order must be positive");
            }
        }
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in {}", path.display()))
    }

    fn entry(&self, name: &str) -> Result<&AlgebraEntry> {
        self.algebras.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.algebras.keys().map(String::as_str).collect();
            anyhow!("no algebra named {name:?} (available: {})", known.join(", "))
        })
    }

    /// Only shapes are validated, so broken algebras can still be reported on.
    pub fn algebra_unchecked(&self, name: &str) -> Result<HopfAlgebra> {
        Ok(HopfAlgebra::new_unchecked(self.entry(name)?.to_data(name))?)
    }

    pub fn algebra(&self, name: &str) -> Result<HopfAlgebra> {
        Ok(HopfAlgebra::new(self.entry(name)?.to_data(name))?)
    }

    pub fn morphism(&self, name: &str) -> Result<HopfMorphism> {
        let m = self.morphisms.get(name).ok_or_else(|| anyhow!("no morphism named {name:?}"))?;
        let source = Arc::new(self.algebra(&m.source)?);
        let target = Arc::new(self.algebra(&m.target)?);
        Ok(HopfMorphism::new(name, source, target, m.map.clone())?)
    }

    /// Modules whose algebra has the same structure tensors as `over`.
    pub fn modules_over(&self, over: &Arc<HopfAlgebra>) -> Result<Vec<(String, ModuleRep)>> {
        let mut out = Vec::new();
        for (name, m) in &self.modules {
            let alg = self
                .algebra_unchecked(&m.algebra)
                .with_context(|| format!("module {name:?}"))?;
            if alg != **over {
                continue;
            }
            let rep = ModuleRep::new(Arc::clone(over), Space::new(m.labels.clone()), m.action.clone())
                .with_context(|| format!("module {name:?}"))?;
            out.push((name.clone(), rep));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cyclic;

    #[test]
    fn round_trip() {
        let c3 = cyclic(3).unwrap();
        let mut f = InputFile::default();
        f.algebras.insert("kC3".into(), AlgebraEntry::from_algebra(&c3));
        let text = serde_json::to_string_pretty(&f).unwrap();
        let back = InputFile::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.algebra("kC3").unwrap(), c3);
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = InputFile::parse("{\n  \"algebras\": {\n    \"x\": [}\n}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn unknown_names_are_errors() {
        let f = InputFile::default();
        assert!(f.algebra("nope").is_err());
        assert!(f.morphism("nope").is_err());
    }
}
