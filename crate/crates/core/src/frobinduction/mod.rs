//! Frobenius data for a Hopf algebra extension φ: K → H and the induction
//! functor Ind_φ = H⊗_K (−) built from it.

mod induced;
mod monoidal;

use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::{HopfAlgebra, HopfMorphism};
use crate::linalg::{Accum, Echelon, LinMap, LinalgError, MPoly, Op, PivotRule, SparseVec};
use crate::rep::RepError;
use crate::scalar::CycScalar;
use crate::verdict::{AxiomReport, Check};

pub use induced::Induced;
pub use monoidal::{FrobeniusAlgebra, MutualInverseReport, ProjSide, ProjectionMorphisms};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobError {
    #[error("{name} is not free as a {side} K-module (greedy basis reached rank {found} of {dim})")]
    NotFree {
        name: String,
        side: &'static str,
        found: usize,
        dim: usize,
    },
    #[error("not a Frobenius morphism: {0}")]
    NotFrobenius(String),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Which comodule conditions a trace must satisfy on top of K-bilinearity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Constraint {
    None,
    Right,
    Left,
    Bi,
}

impl Constraint {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "none" => Some(Constraint::None),
            "right" => Some(Constraint::Right),
            "left" => Some(Constraint::Left),
            "bi" => Some(Constraint::Bi),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Constraint::None => "none",
            Constraint::Right => "right",
            Constraint::Left => "left",
            Constraint::Bi => "bi",
        }
    }
}

/// Order in which standard basis vectors are offered to the greedy
/// K-basis search (1_H is always offered first).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BasisOrder {
    #[default]
    Forward,
    Reverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Hand {
    Left,
    Right,
}

/// φ: K → H together with a left K-basis h_i (H = ⊕ φ(K)h_i) and a right
/// K-basis b_i (H = ⊕ b_iφ(K)).
#[derive(Debug, Clone)]
pub struct Extension {
    phi: HopfMorphism,
    left_basis: Vec<SparseVec>,
    left_coords: LinMap,
    right_basis: Vec<SparseVec>,
    right_coords: LinMap,
}

fn greedy_basis(
    phi: &HopfMorphism,
    hand: Hand,
    order: BasisOrder,
) -> Result<(Vec<SparseVec>, LinMap), FrobError> {
    let h = phi.target();
    let (nh, nk) = (h.dim(), phi.source().dim());
    let images: Vec<SparseVec> = (0..nk).map(|a| phi.apply(&SparseVec::basis(nk, a))).collect();
    let mut candidates = vec![h.one()];
    let mut idx: Vec<usize> = (0..nh).collect();
    if order == BasisOrder::Reverse {
        idx.reverse();
    }
    candidates.extend(idx.into_iter().map(|i| h.basis(i)).filter(|v| *v != h.one()));

    let mut ech = Echelon::new(nh, PivotRule::First);
    let mut basis = Vec::new();
    let mut columns = Vec::new();
    for c in candidates {
        if ech.rank() == nh {
            break;
        }
        let span: Vec<SparseVec> = images
            .iter()
            .map(|k| match hand {
                Hand::Left => h.mul(k, &c),
                Hand::Right => h.mul(&c, k),
            })
            .collect();
        let mut trial = ech.clone();
        for v in &span {
            trial.insert(v.clone(), None);
        }
        if trial.rank() == ech.rank() + nk {
            ech = trial;
            basis.push(c);
            columns.extend(span);
        }
    }
    if ech.rank() < nh {
        return Err(FrobError::NotFree {
            name: phi.name().to_string(),
            side: if hand == Hand::Left { "left" } else { "right" },
            found: ech.rank(),
            dim: nh,
        });
    }
    let coords = LinMap::from_columns(nh, columns).inverse()?;
    Ok((basis, coords))
}

impl Extension {
    pub fn new(phi: HopfMorphism) -> Result<Self, FrobError> {
        Self::with_order(phi, BasisOrder::Forward)
    }

    pub fn with_order(phi: HopfMorphism, order: BasisOrder) -> Result<Self, FrobError> {
        let (left_basis, left_coords) = greedy_basis(&phi, Hand::Left, order)?;
        let (right_basis, right_coords) = greedy_basis(&phi, Hand::Right, order)?;
        Ok(Extension {
            phi,
            left_basis,
            left_coords,
            right_basis,
            right_coords,
        })
    }

    pub fn phi(&self) -> &HopfMorphism {
        &self.phi
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        self.phi.target()
    }

    pub fn k(&self) -> &Arc<HopfAlgebra> {
        self.phi.source()
    }

    /// Rank of H as a K-module.
    pub fn rank(&self) -> usize {
        self.left_basis.len()
    }

    /// h_i with H = ⊕ φ(K)h_i.
    pub fn left_basis(&self) -> &[SparseVec] {
        &self.left_basis
    }

    /// b_i with H = ⊕ b_iφ(K); the carrier basis of induced modules.
    pub fn right_basis(&self) -> &[SparseVec] {
        &self.right_basis
    }

    /// H → K^r, x ↦ (k_i) with x = Σ φ(k_i)h_i; index i·dim K + a.
    pub fn left_coords(&self) -> &LinMap {
        &self.left_coords
    }

    /// H → K^r, x ↦ (k_i) with x = Σ b_iφ(k_i).
    pub fn right_coords(&self) -> &LinMap {
        &self.right_coords
    }

    fn split_coords(&self, v: &SparseVec) -> Vec<SparseVec> {
        let nk = self.k().dim();
        let mut out = vec![Vec::new(); self.rank()];
        for (t, c) in v.iter() {
            out[t / nk].push((t % nk, c.clone()));
        }
        out.into_iter().map(|e| SparseVec::from_entries(nk, e)).collect()
    }

    /// The k_i with x = Σ φ(k_i)h_i.
    pub fn left_coords_of(&self, x: &SparseVec) -> Vec<SparseVec> {
        self.split_coords(&self.left_coords.apply(x))
    }

    /// The k_i with x = Σ b_iφ(k_i).
    pub fn right_coords_of(&self, x: &SparseVec) -> Vec<SparseVec> {
        self.split_coords(&self.right_coords.apply(x))
    }

    pub fn bimodule_trace_space(&self) -> Vec<LinMap> {
        self.trace_space(Constraint::None)
    }

    /// Basis of K-bimodule maps H → K satisfying the given comodule
    /// conditions.
    pub fn trace_space(&self, constraint: Constraint) -> Vec<LinMap> {
        let sys = TraceSystem::new(self);
        let (nh, nk) = (self.h().dim(), self.k().dim());
        let columns: Vec<SparseVec> = (0..nh * nk)
            .map(|p| sys.residual(&trace_from_vec(nk, nh, &SparseVec::basis(nh * nk, p)), constraint))
            .collect();
        let rows = columns.first().map_or(0, SparseVec::dim);
        LinMap::from_columns(rows, columns)
            .kernel()
            .columns()
            .iter()
            .map(|v| normalize_trace(&trace_from_vec(nk, nh, v)))
            .collect()
    }

    /// Whether t is a K-bimodule map satisfying `constraint`.
    pub fn satisfies(&self, t: &LinMap, constraint: Constraint) -> bool {
        TraceSystem::new(self).residual(t, constraint).is_zero()
    }

    /// θ_K: H → K^r, x ↦ (t(h_i x))_i; bijective iff t is a Frobenius morphism.
    pub fn theta_k(&self, t: &LinMap) -> LinMap {
        let h = self.h();
        let nk = self.k().dim();
        LinMap::from_fn(self.rank() * nk, h.dim(), |a| {
            let x = h.basis(a);
            let parts: Vec<SparseVec> = self.left_basis.iter().map(|hi| t.apply(&h.mul(hi, &x))).collect();
            concat(&parts)
        })
    }

    pub fn is_frobenius(&self, t: &LinMap) -> bool {
        self.theta_k(t).rank() == self.h().dim()
    }

    /// Searches the constrained trace space for a Frobenius morphism.
    pub fn frobenius_decision(self: &Arc<Self>, constraint: Constraint) -> Result<Decision, FrobError> {
        let space = self.trace_space(constraint);
        let d = space.len();
        let found = |t: LinMap, path: DecisionPath| -> Result<Decision, FrobError> {
            let datum = FrobeniusDatum::new(Arc::clone(self), normalize_trace(&t))?;
            Ok(Decision {
                constraint,
                space_dim: d,
                path,
                datum: Some(datum),
            })
        };
        let none = |path: DecisionPath| Decision {
            constraint,
            space_dim: d,
            path,
            datum: None,
        };
        if d == 0 {
            return Ok(none(DecisionPath::EmptySpace));
        }
        if d == 1 {
            return if self.is_frobenius(&space[0]) {
                found(space[0].clone(), DecisionPath::Generator { index: 0 })
            } else {
                Ok(none(DecisionPath::Generator { index: 0 }))
            };
        }
        for (i, t) in space.iter().enumerate() {
            if self.is_frobenius(t) {
                return found(t.clone(), DecisionPath::Generator { index: i });
            }
        }
        let combine = |coeffs: &[i64]| -> LinMap {
            let mut acc = LinMap::zero(self.k().dim(), self.h().dim());
            for (c, t) in coeffs.iter().zip(&space) {
                if *c != 0 {
                    acc = acc.add(&t.scale(&CycScalar::from_int(*c))).expect("same shape");
                }
            }
            acc
        };
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let mut tries: Vec<Vec<i64>> = vec![vec![1; d]];
        tries.extend((0..8).map(|_| (0..d).map(|_| rng.gen_range(-3..=3)).collect()));
        for coeffs in tries {
            let t = combine(&coeffs);
            if self.is_frobenius(&t) {
                return found(t, DecisionPath::Combination { coeffs });
            }
        }
        if self.h().dim() <= 32 && d <= 4 {
            let det = self.symbolic_theta_det(&space);
            return match det.nonzero_point() {
                None => Ok(none(DecisionPath::SymbolicDeterminant {
                    identically_zero: true,
                    witness: None,
                })),
                Some(pt) => found(
                    combine(&pt),
                    DecisionPath::SymbolicDeterminant {
                        identically_zero: false,
                        witness: Some(pt),
                    },
                ),
            };
        }
        // Each variable appears with degree ≤ dim H in det θ_K, so a
        // polynomial vanishing on this grid vanishes identically.
        let side = self.h().dim() as i64 + 1;
        let mut pt = vec![0i64; d];
        let mut tested = 0u64;
        loop {
            tested += 1;
            let t = combine(&pt);
            if !t.is_zero() && self.is_frobenius(&t) {
                return found(t, DecisionPath::Grid { points_tested: tested, witness: Some(pt) });
            }
            let mut k = 0;
            loop {
                if k == d {
                    return Ok(none(DecisionPath::Grid { points_tested: tested, witness: None }));
                }
                pt[k] += 1;
                if pt[k] < side {
                    break;
                }
                pt[k] = 0;
                k += 1;
            }
        }
    }

    /// det θ_K as a polynomial in the coordinates of Σ t_s·space[s].
    pub fn symbolic_theta_det(&self, space: &[LinMap]) -> MPoly {
        let d = space.len();
        let n = self.h().dim();
        let mats: Vec<LinMap> = space.iter().map(|t| self.theta_k(t)).collect();
        let m: Vec<Vec<MPoly>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let coeffs: Vec<CycScalar> = mats.iter().map(|m| m.get(r, c)).collect();
                        MPoly::linear(&coeffs)
                    })
                    .collect()
            })
            .collect();
        MPoly::det(d, m)
    }
}

fn concat(parts: &[SparseVec]) -> SparseVec {
    let total: usize = parts.iter().map(SparseVec::dim).sum();
    let mut offset = 0;
    let mut entries = Vec::new();
    for p in parts {
        entries.extend(p.iter().map(|(i, c)| (offset + i, c.clone())));
        offset += p.dim();
    }
    SparseVec::from_entries(total, entries)
}

/// Trace with t(e_a) = Σ_c v[a·n_K + c] e_c.
fn trace_from_vec(nk: usize, nh: usize, v: &SparseVec) -> LinMap {
    let mut cols = vec![Vec::new(); nh];
    for (p, c) in v.iter() {
        cols[p / nk].push((p % nk, c.clone()));
    }
    LinMap::from_columns(nk, cols.into_iter().map(|e| SparseVec::from_entries(nk, e)).collect())
}

/// Scales so that the first nonzero entry (column-major) is 1.
pub fn normalize_trace(t: &LinMap) -> LinMap {
    match t.columns().iter().find_map(|c| c.entries().first()) {
        Some((_, lead)) => t.scale(&lead.inv().expect("nonzero")),
        None => t.clone(),
    }
}

/// Precomputed products and coproducts for the trace constraints.
struct TraceSystem<'a> {
    ext: &'a Extension,
    left: Vec<Vec<SparseVec>>,
    right: Vec<Vec<SparseVec>>,
    k_right: LinMap,
    k_left: LinMap,
}

impl<'a> TraceSystem<'a> {
    fn new(ext: &'a Extension) -> Self {
        let (h, k) = (ext.h(), ext.k());
        let images: Vec<SparseVec> = (0..k.dim()).map(|a| ext.phi.apply(&k.basis(a))).collect();
        let left = images
            .iter()
            .map(|ka| (0..h.dim()).map(|b| h.mul(ka, &h.basis(b))).collect())
            .collect();
        let right = images
            .iter()
            .map(|ka| (0..h.dim()).map(|b| h.mul(&h.basis(b), ka)).collect())
            .collect();
        let phi = ext.phi.map();
        let k_right = Op::seq(vec![Op::map(k.comult()), Op::kron(vec![Op::id(k.dim()), Op::map(phi)])]).materialize();
        let k_left = Op::seq(vec![Op::map(k.comult()), Op::kron(vec![Op::map(phi), Op::id(k.dim())])]).materialize();
        TraceSystem {
            ext,
            left,
            right,
            k_right,
            k_left,
        }
    }

    fn residual(&self, t: &LinMap, constraint: Constraint) -> SparseVec {
        let (h, k) = (self.ext.h(), self.ext.k());
        let mut parts = Vec::new();
        for (a, row) in self.left.iter().enumerate() {
            let ka = k.basis(a);
            for (b, prod) in row.iter().enumerate() {
                let tb = t.column(b);
                parts.push(t.apply(prod).sub(&k.mul(&ka, tb)));
                parts.push(t.apply(&self.right[a][b]).sub(&k.mul(tb, &ka)));
            }
        }
        let nh = h.dim();
        if matches!(constraint, Constraint::Right | Constraint::Bi) {
            let lhs = Op::kron(vec![Op::map(t), Op::id(nh)]);
            for b in 0..nh {
                let l = lhs.apply(h.comult().column(b));
                parts.push(l.sub(&self.k_right.apply(t.column(b))));
            }
        }
        if matches!(constraint, Constraint::Left | Constraint::Bi) {
            let lhs = Op::kron(vec![Op::id(nh), Op::map(t)]);
            for b in 0..nh {
                let l = lhs.apply(h.comult().column(b));
                parts.push(l.sub(&self.k_left.apply(t.column(b))));
            }
        }
        concat(&parts)
    }
}

/// How frobenius_decision reached its verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecisionPath {
    EmptySpace,
    Generator { index: usize },
    Combination { coeffs: Vec<i64> },
    SymbolicDeterminant { identically_zero: bool, witness: Option<Vec<i64>> },
    Grid { points_tested: u64, witness: Option<Vec<i64>> },
}

impl DecisionPath {
    pub fn describe(&self) -> String {
        match self {
            DecisionPath::EmptySpace => "constrained trace space is zero".into(),
            DecisionPath::Generator { index } => format!("tested generator {index} of the trace space"),
            DecisionPath::Combination { coeffs } => format!("combination {coeffs:?} of the generators"),
            DecisionPath::SymbolicDeterminant { identically_zero: true, .. } => {
                "det θ_K vanishes identically on the trace space (symbolic expansion)".into()
            }
            DecisionPath::SymbolicDeterminant { witness, .. } => {
                format!("det θ_K is a nonzero polynomial; witness point {:?}", witness.as_deref().unwrap_or(&[]))
            }
            DecisionPath::Grid { points_tested, witness: None } => {
                format!("det θ_K vanishes on all {points_tested} grid points, hence identically")
            }
            DecisionPath::Grid { witness: Some(w), .. } => format!("grid witness {w:?}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Decision {
    pub constraint: Constraint,
    pub space_dim: usize,
    pub path: DecisionPath,
    pub datum: Option<FrobeniusDatum>,
}

/// A Frobenius morphism tr: H → K with dual bases δ_i, h_i:
/// x = Σ φ(tr(xδ_i))h_i = Σ δ_iφ(tr(h_i x)).
#[derive(Debug, Clone)]
pub struct FrobeniusDatum {
    ext: Arc<Extension>,
    trace: LinMap,
    delta: Vec<SparseVec>,
}

/// Serializable summary of a datum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusDatumData {
    pub phi: String,
    pub trace: LinMap,
    pub h_basis: Vec<String>,
    pub delta_basis: Vec<String>,
}

impl FrobeniusDatum {
    pub fn new(ext: Arc<Extension>, trace: LinMap) -> Result<Self, FrobError> {
        if trace.shape() != (ext.k().dim(), ext.h().dim()) {
            return Err(FrobError::NotFrobenius(format!("trace has shape {:?}", trace.shape())));
        }
        if !ext.satisfies(&trace, Constraint::None) {
            return Err(FrobError::NotFrobenius("trace is not a K-bimodule map".into()));
        }
        let theta = ext.theta_k(&trace);
        let inv = theta
            .inverse()
            .map_err(|_| FrobError::NotFrobenius("θ_K is not bijective".into()))?;
        let k = ext.k();
        let one_k = k.one();
        let nk = k.dim();
        let delta = (0..ext.rank())
            .map(|i| {
                let f = SparseVec::from_entries(ext.rank() * nk, one_k.iter().map(|(c, x)| (i * nk + c, x.clone())));
                inv.apply(&f)
            })
            .collect();
        let datum = FrobeniusDatum { ext, trace, delta };
        let report = datum.check_dual_bases_identity();
        if !report.all_pass() {
            return Err(FrobError::NotFrobenius(format!("dual basis identities fail:\n{report}")));
        }
        Ok(datum)
    }

    pub fn extension(&self) -> &Arc<Extension> {
        &self.ext
    }

    pub fn h(&self) -> &Arc<HopfAlgebra> {
        self.ext.h()
    }

    pub fn k(&self) -> &Arc<HopfAlgebra> {
        self.ext.k()
    }

    pub fn trace(&self) -> &LinMap {
        &self.trace
    }

    pub fn h_basis(&self) -> &[SparseVec] {
        self.ext.left_basis()
    }

    pub fn delta_basis(&self) -> &[SparseVec] {
        &self.delta
    }

    pub fn tr(&self, x: &SparseVec) -> SparseVec {
        self.trace.apply(x)
    }

    /// The same datum with trace λ·tr (dual basis scales by λ⁻¹).
    pub fn scaled(&self, lambda: &CycScalar) -> Result<Self, FrobError> {
        FrobeniusDatum::new(Arc::clone(&self.ext), self.trace.scale(lambda))
    }

    pub fn to_data(&self) -> FrobeniusDatumData {
        let h = self.h();
        FrobeniusDatumData {
            phi: self.ext.phi.name().to_string(),
            trace: self.trace.clone(),
            h_basis: self.h_basis().iter().map(|v| h.format(v)).collect(),
            delta_basis: self.delta.iter().map(|v| h.format(v)).collect(),
        }
    }

    fn check_dual_bases_identity(&self) -> AxiomReport {
        let h = self.h();
        let phi = self.ext.phi();
        let mut first = None;
        let mut second = None;
        for a in 0..h.dim() {
            let x = h.basis(a);
            let mut s1 = Accum::new(h.dim());
            let mut s2 = Accum::new(h.dim());
            for (hi, di) in self.h_basis().iter().zip(&self.delta) {
                let t1 = phi.apply(&self.tr(&h.mul(&x, di)));
                s1.add_scaled(&CycScalar::one(), &h.mul(&t1, hi));
                let t2 = phi.apply(&self.tr(&h.mul(hi, &x)));
                s2.add_scaled(&CycScalar::one(), &h.mul(di, &t2));
            }
            let (s1, s2) = (s1.finish(), s2.finish());
            if first.is_none() && s1 != x {
                first = Some(format!("{} ↦ {}", h.label(a), h.format(&s1)));
            }
            if second.is_none() && s2 != x {
                second = Some(format!("{} ↦ {}", h.label(a), h.format(&s2)));
            }
        }
        let mut r = AxiomReport::new();
        r.push(Check::from_witness("x = Σ φ(tr(xδ_i))h_i", first));
        r.push(Check::from_witness("x = Σ δ_iφ(tr(h_i x))", second));
        r
    }

    /// Both dual-basis identities, plus Σ δ_i ⊗ h_i x = Σ xδ_i ⊗ h_i in H⊗_K H.
    pub fn check_dual_bases(&self) -> Result<AxiomReport, FrobError> {
        let mut r = self.check_dual_bases_identity();
        let h = self.h();
        let hh = self.ext.induce(&crate::rep::ModuleRep::regular(Arc::clone(h)).restrict(self.ext.phi())?)?;
        let mut witness = None;
        for a in 0..h.dim() {
            let x = h.basis(a);
            let mut lhs = Accum::new(hh.dim());
            let mut rhs = Accum::new(hh.dim());
            for (hi, di) in self.h_basis().iter().zip(&self.delta) {
                lhs.add_scaled(&CycScalar::one(), &hh.project(di, &h.mul(hi, &x)));
                rhs.add_scaled(&CycScalar::one(), &hh.project(&h.mul(&x, di), hi));
            }
            let (l, rr) = (lhs.finish(), rhs.finish());
            if l != rr {
                witness = Some(format!(
                    "x = {}: {} ≠ {}",
                    h.label(a),
                    hh.space().format(&l),
                    hh.space().format(&rr)
                ));
                break;
            }
        }
        r.push(Check::from_witness("Σ δ_i ⊗ h_i x = Σ xδ_i ⊗ h_i in H⊗_K H", witness));
        Ok(r)
    }

    /// h ↦ tr(hc) for a unit c commuting with φ(K).
    pub fn twisted_trace(&self, c: &SparseVec) -> LinMap {
        let h = self.h();
        LinMap::from_fn(self.k().dim(), h.dim(), |a| self.tr(&h.mul(&h.basis(a), c)))
    }
}
