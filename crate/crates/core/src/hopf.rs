//! Finite-dimensional Hopf algebras given by structure constants.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{Accum, LinMap, LinalgError, Op, SparseVec};
use crate::scalar::CycScalar;
use crate::verdict::{compare_ops, AxiomReport, Space};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("{tensor} has shape {found:?}, expected {expected:?}")]
    Shape {
        tensor: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("expected {expected} basis labels, found {found}")]
    Labels { expected: usize, found: usize },
    #[error("antipode of {0} is not invertible")]
    AntipodeNotInvertible(String),
    #[error("{name} fails axioms:\n{report}")]
    Axioms { name: String, report: AxiomReport },
    #[error("morphism {name} is not a Hopf morphism:\n{report}")]
    Morphism { name: String, report: AxiomReport },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Structure tensors of a Hopf algebra on a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub mult: LinMap,
    pub unit: LinMap,
    pub comult: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inv: Option<LinMap>,
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    name: String,
    space: Space,
    mult: LinMap,
    unit: LinMap,
    comult: LinMap,
    counit: LinMap,
    antipode: LinMap,
    antipode_inv: LinMap,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
            && self.antipode_inv == other.antipode_inv
    }
}

fn expect_shape(tensor: &'static str, m: &LinMap, expected: (usize, usize)) -> Result<(), HopfError> {
    if m.shape() != expected {
        return Err(HopfError::Shape {
            tensor,
            expected,
            found: m.shape(),
        });
    }
    Ok(())
}

impl HopfAlgebra {
    /// Validates shapes and every Hopf axiom. A missing antipode inverse is
    /// computed by matrix inversion.
    pub fn new(data: HopfData) -> Result<Self, HopfError> {
        let h = Self::new_unchecked(data)?;
        let report = check_hopf_axioms(&h);
        if !report.all_pass() {
            return Err(HopfError::Axioms {
                name: h.name.clone(),
                report,
            });
        }
        Ok(h)
    }

    /// Checks shapes only; for deliberately broken algebras in tests.
    pub fn new_unchecked(data: HopfData) -> Result<Self, HopfError> {
        let n = data.labels.len();
        if n == 0 {
            return Err(HopfError::Labels {
                expected: 1,
                found: 0,
            });
        }
        expect_shape("mult", &data.mult, (n, n * n))?;
        expect_shape("unit", &data.unit, (n, 1))?;
        expect_shape("comult", &data.comult, (n * n, n))?;
        expect_shape("counit", &data.counit, (1, n))?;
        expect_shape("antipode", &data.antipode, (n, n))?;
        let antipode_inv = match data.antipode_inv {
            Some(s) => {
                expect_shape("antipode_inv", &s, (n, n))?;
                s
            }
            None => data
                .antipode
                .inverse()
                .map_err(|_| HopfError::AntipodeNotInvertible(data.name.clone()))?,
        };
        Ok(HopfAlgebra {
            name: data.name,
            space: Space::new(data.labels),
            mult: data.mult,
            unit: data.unit,
            comult: data.comult,
            counit: data.counit,
            antipode: data.antipode,
            antipode_inv,
        })
    }

    pub fn to_data(&self) -> HopfData {
        HopfData {
            name: self.name.clone(),
            labels: self.labels(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            antipode_inv: Some(self.antipode_inv.clone()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.unit.rows()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.space.label(i)).collect()
    }

    pub fn label(&self, i: usize) -> String {
        self.space.label(i)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn antipode_inv(&self) -> &LinMap {
        &self.antipode_inv
    }

    pub fn one(&self) -> SparseVec {
        self.unit.column(0).clone()
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(self.dim(), i)
    }

    pub fn format(&self, v: &SparseVec) -> String {
        self.space.format(v)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.mult.column(i * self.dim() + j)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut acc = Accum::new(n);
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                acc.add_scaled(&(x * y), self.mul_basis(i, j));
            }
        }
        acc.finish()
    }

    pub fn coproduct(&self, a: &SparseVec) -> SparseVec {
        self.comult.apply(a)
    }

    /// (Δ⊗id)Δ(a) in H⊗H⊗H.
    pub fn coproduct3(&self, a: &SparseVec) -> SparseVec {
        let n = self.dim();
        Op::kron(vec![Op::map(&self.comult), Op::id(n)]).apply(&self.comult.apply(a))
    }

    pub fn counit_of(&self, a: &SparseVec) -> CycScalar {
        self.counit.apply(a).get(0)
    }

    pub fn antipode_of(&self, a: &SparseVec) -> SparseVec {
        self.antipode.apply(a)
    }

    pub fn antipode_inv_of(&self, a: &SparseVec) -> SparseVec {
        self.antipode_inv.apply(a)
    }

    /// x ↦ a·x
    pub fn left_mult(&self, a: &SparseVec) -> LinMap {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.mul(a, &self.basis(j)))
    }

    /// x ↦ x·a
    pub fn right_mult(&self, a: &SparseVec) -> LinMap {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.mul(&self.basis(j), a))
    }

    /// Whether a is invertible in H.
    pub fn is_unit(&self, a: &SparseVec) -> bool {
        self.left_mult(a).rank() == self.dim()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        let tau = LinMap::tensor_permutation(&[n, n], &[1, 0]);
        tau.compose(&self.comult).is_ok_and(|t| t == self.comult)
    }
}

/// Runs every Hopf axiom independently, each with a witness on failure.
pub fn check_hopf_axioms(h: &HopfAlgebra) -> AxiomReport {
    let n = h.dim();
    let sp = h.space();
    let one = Space::unit();
    let sp2 = sp.tensor(sp);
    let sp3 = sp2.tensor(sp);
    let m = Op::map(&h.mult);
    let u = Op::map(&h.unit);
    let d = Op::map(&h.comult);
    let e = Op::map(&h.counit);
    let s = Op::map(&h.antipode);
    let si = Op::map(&h.antipode_inv);
    let id = || Op::id(n);
    let mut r = AxiomReport::new();

    r.push(compare_ops(
        "associativity",
        &Op::seq(vec![Op::kron(vec![m.clone(), id()]), m.clone()]),
        &Op::seq(vec![Op::kron(vec![id(), m.clone()]), m.clone()]),
        &sp3,
        sp,
    ));
    r.push(compare_ops(
        "left unitality",
        &Op::seq(vec![Op::kron(vec![u.clone(), id()]), m.clone()]),
        &id(),
        sp,
        sp,
    ));
    r.push(compare_ops(
        "right unitality",
        &Op::seq(vec![Op::kron(vec![id(), u.clone()]), m.clone()]),
        &id(),
        sp,
        sp,
    ));
    r.push(compare_ops(
        "coassociativity",
        &Op::seq(vec![d.clone(), Op::kron(vec![d.clone(), id()])]),
        &Op::seq(vec![d.clone(), Op::kron(vec![id(), d.clone()])]),
        sp,
        &sp3,
    ));
    r.push(compare_ops(
        "left counitality",
        &Op::seq(vec![d.clone(), Op::kron(vec![e.clone(), id()])]),
        &id(),
        sp,
        sp,
    ));
    r.push(compare_ops(
        "right counitality",
        &Op::seq(vec![d.clone(), Op::kron(vec![id(), e.clone()])]),
        &id(),
        sp,
        sp,
    ));
    r.push(compare_ops(
        "comultiplication is multiplicative",
        &Op::seq(vec![m.clone(), d.clone()]),
        &Op::seq(vec![
            Op::kron(vec![d.clone(), d.clone()]),
            Op::perm(&[n, n, n, n], &[0, 2, 1, 3]),
            Op::kron(vec![m.clone(), m.clone()]),
        ]),
        &sp2,
        &sp2,
    ));
    r.push(compare_ops(
        "comultiplication is unital",
        &Op::seq(vec![u.clone(), d.clone()]),
        &Op::kron(vec![u.clone(), u.clone()]),
        &one,
        &sp2,
    ));
    r.push(compare_ops(
        "counit is multiplicative",
        &Op::seq(vec![m.clone(), e.clone()]),
        &Op::kron(vec![e.clone(), e.clone()]),
        &sp2,
        &one,
    ));
    r.push(compare_ops(
        "counit is unital",
        &Op::seq(vec![u.clone(), e.clone()]),
        &Op::id(1),
        &one,
        &one,
    ));
    r.push(compare_ops(
        "left antipode",
        &Op::seq(vec![d.clone(), Op::kron(vec![s.clone(), id()]), m.clone()]),
        &Op::seq(vec![e.clone(), u.clone()]),
        sp,
        sp,
    ));
    r.push(compare_ops(
        "right antipode",
        &Op::seq(vec![d.clone(), Op::kron(vec![id(), s.clone()]), m.clone()]),
        &Op::seq(vec![e.clone(), u.clone()]),
        sp,
        sp,
    ));
    r.push(compare_ops(
        "antipode inverse (S∘S⁻¹)",
        &Op::seq(vec![si.clone(), s.clone()]),
        &id(),
        sp,
        sp,
    ));
    r.push(compare_ops(
        "antipode inverse (S⁻¹∘S)",
        &Op::seq(vec![s, si]),
        &id(),
        sp,
        sp,
    ));
    r
}

/// H* with the transposed structure tensors; basis labels get a `*`.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    HopfAlgebra::new(HopfData {
        name: format!("{}*", h.name),
        labels: h.labels().iter().map(|l| format!("{l}*")).collect(),
        mult: h.comult.transpose(),
        unit: h.counit.transpose(),
        comult: h.mult.transpose(),
        counit: h.unit.transpose(),
        antipode: h.antipode.transpose(),
        antipode_inv: Some(h.antipode_inv.transpose()),
    })
}

#[derive(Clone, Debug)]
pub struct HopfMorphism {
    name: String,
    source: Arc<HopfAlgebra>,
    target: Arc<HopfAlgebra>,
    map: LinMap,
}

impl HopfMorphism {
    pub fn new(
        name: impl Into<String>,
        source: Arc<HopfAlgebra>,
        target: Arc<HopfAlgebra>,
        map: LinMap,
    ) -> Result<Self, HopfError> {
        let phi = Self::new_unchecked(name, source, target, map)?;
        let report = check_morphism(&phi);
        if !report.all_pass() {
            return Err(HopfError::Morphism {
                name: phi.name.clone(),
                report,
            });
        }
        Ok(phi)
    }

    pub fn new_unchecked(
        name: impl Into<String>,
        source: Arc<HopfAlgebra>,
        target: Arc<HopfAlgebra>,
        map: LinMap,
    ) -> Result<Self, HopfError> {
        expect_shape("morphism", &map, (target.dim(), source.dim()))?;
        Ok(HopfMorphism {
            name: name.into(),
            source,
            target,
            map,
        })
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> Self {
        let n = h.dim();
        HopfMorphism {
            name: format!("id_{}", h.name()),
            source: Arc::clone(&h),
            target: h,
            map: LinMap::identity(n),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &Arc<HopfAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HopfAlgebra> {
        &self.target
    }

    pub fn map(&self) -> &LinMap {
        &self.map
    }

    pub fn apply(&self, k: &SparseVec) -> SparseVec {
        self.map.apply(k)
    }
}

pub fn check_morphism(phi: &HopfMorphism) -> AxiomReport {
    let (k, h) = (phi.source.as_ref(), phi.target.as_ref());
    let ks = k.space();
    let hs = h.space();
    let f = Op::map(&phi.map);
    let mut r = AxiomReport::new();
    r.push(compare_ops(
        "multiplicative",
        &Op::seq(vec![Op::map(&k.mult), f.clone()]),
        &Op::seq(vec![Op::kron(vec![f.clone(), f.clone()]), Op::map(&h.mult)]),
        &ks.tensor(ks),
        hs,
    ));
    r.push(compare_ops(
        "unital",
        &Op::seq(vec![Op::map(&k.unit), f.clone()]),
        &Op::map(&h.unit),
        &Space::unit(),
        hs,
    ));
    r.push(compare_ops(
        "comultiplicative",
        &Op::seq(vec![Op::map(&k.comult), Op::kron(vec![f.clone(), f.clone()])]),
        &Op::seq(vec![f.clone(), Op::map(&h.comult)]),
        ks,
        &hs.tensor(hs),
    ));
    r.push(compare_ops(
        "counital",
        &Op::seq(vec![f.clone(), Op::map(&h.counit)]),
        &Op::map(&k.counit),
        ks,
        &Space::unit(),
    ));
    r.push(compare_ops(
        "commutes with antipode",
        &Op::seq(vec![Op::map(&k.antipode), f.clone()]),
        &Op::seq(vec![f, Op::map(&h.antipode)]),
        ks,
        hs,
    ));
    r
}
