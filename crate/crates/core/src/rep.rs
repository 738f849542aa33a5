//! Modules, comodules and Yetter–Drinfeld modules over a Hopf algebra.

use std::sync::Arc;

use thiserror::Error;

use crate::hopf::{HopfAlgebra, HopfMorphism};
use crate::linalg::{LinMap, LinalgError, Op, SparseVec};
use crate::scalar::{cyc_root, CycScalar};
use crate::verdict::{compare_ops, AxiomReport, Check, Space};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{what} has shape {found:?}, expected {expected:?}")]
    Shape {
        what: &'static str,
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("algebra mismatch: {left} vs {right}")]
    AlgebraMismatch { left: String, right: String },
    #[error("{name} fails axioms:\n{report}")]
    Axioms { name: String, report: AxiomReport },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn expect_shape(what: &'static str, m: &LinMap, expected: (usize, usize)) -> Result<(), RepError> {
    if m.shape() != expected {
        return Err(RepError::Shape {
            what,
            expected,
            found: m.shape(),
        });
    }
    Ok(())
}

pub(crate) fn same_algebra(a: &Arc<HopfAlgebra>, b: &Arc<HopfAlgebra>) -> Result<(), RepError> {
    if Arc::ptr_eq(a, b) || **a == **b {
        Ok(())
    } else {
        Err(RepError::AlgebraMismatch {
            left: a.name().to_string(),
            right: b.name().to_string(),
        })
    }
}

/// (Δ⊗id)∘Δ as a lazy op H → H⊗H⊗H.
pub fn coproduct3_op(h: &HopfAlgebra) -> Op<'_> {
    Op::seq(vec![
        Op::map(h.comult()),
        Op::kron(vec![Op::map(h.comult()), Op::id(h.dim())]),
    ])
}

/// Left module: `action` realises H⊗V → V.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    algebra: Arc<HopfAlgebra>,
    space: Space,
    action: LinMap,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        *self.algebra == *other.algebra && self.action == other.action
    }
}

impl ModuleRep {
    pub fn new(algebra: Arc<HopfAlgebra>, space: Space, action: LinMap) -> Result<Self, RepError> {
        let m = Self::new_unchecked(algebra, space, action)?;
        let report = check_module(&m);
        if !report.all_pass() {
            return Err(RepError::Axioms {
                name: format!("module over {}", m.algebra.name()),
                report,
            });
        }
        Ok(m)
    }

    pub fn new_unchecked(algebra: Arc<HopfAlgebra>, space: Space, action: LinMap) -> Result<Self, RepError> {
        let d = space.dim();
        expect_shape("action", &action, (d, algebra.dim() * d))?;
        Ok(ModuleRep { algebra, space, action })
    }

    /// 𝟙: h acts by ε(h).
    pub fn trivial(algebra: Arc<HopfAlgebra>) -> Self {
        let action = algebra.counit().clone();
        ModuleRep {
            algebra,
            space: Space::unit(),
            action,
        }
    }

    pub fn regular(algebra: Arc<HopfAlgebra>) -> Self {
        let action = algebra.mult().clone();
        let space = algebra.space().clone();
        ModuleRep { algebra, space, action }
    }

    /// One-dimensional module where basis element i acts by `values[i]`.
    pub fn character(algebra: Arc<HopfAlgebra>, label: &str, values: Vec<CycScalar>) -> Result<Self, RepError> {
        let n = algebra.dim();
        if values.len() != n {
            return Err(RepError::Shape {
                what: "character",
                expected: (1, n),
                found: (1, values.len()),
            });
        }
        let action = LinMap::from_columns(1, values.into_iter().map(|c| SparseVec::from_entries(1, [(0, c)])).collect());
        Self::new(algebra, Space::new(vec![label.to_string()]), action)
    }

    /// The characters χ_j(g^i) = ζ_ℓ^{ij} of a cyclic group algebra whose
    /// basis is 1, g, …, g^{ℓ−1}.
    pub fn cyclic_characters(algebra: Arc<HopfAlgebra>) -> Result<Vec<Self>, RepError> {
        let l = algebra.dim();
        if l > 1 {
            let g = algebra.basis(1);
            let mut cur = algebra.one();
            for i in 0..l {
                if cur != algebra.basis(i) || algebra.counit_of(&cur) != CycScalar::one() {
                    return Err(RepError::Unsupported(format!(
                        "{} is not a cyclic group algebra in the basis 1, g, …, g^{}",
                        algebra.name(),
                        l - 1
                    )));
                }
                cur = algebra.mul(&cur, &g);
            }
        }
        let z = cyc_root(l as u32);
        (0..l)
            .map(|j| {
                let values = (0..l).map(|i| z.pow((i * j % l) as u64)).collect();
                Self::character(Arc::clone(&algebra), &format!("χ{j}"), values)
            })
            .collect()
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn act(&self, h: &SparseVec, v: &SparseVec) -> SparseVec {
        self.action.apply(&h.kron(v))
    }

    /// The matrix of h acting on V.
    pub fn matrix_of(&self, h: &SparseVec) -> LinMap {
        LinMap::from_fn(self.dim(), self.dim(), |j| self.act(h, &SparseVec::basis(self.dim(), j)))
    }

    /// Same module with the basis relabelled (dimension must agree).
    pub fn with_space(mut self, space: Space) -> Self {
        assert_eq!(space.dim(), self.dim());
        self.space = space;
        self
    }

    /// V⊗W with h(v⊗w) = h₁v⊗h₂w.
    pub fn tensor(&self, other: &ModuleRep) -> Result<ModuleRep, RepError> {
        same_algebra(&self.algebra, &other.algebra)?;
        let (n, a, b) = (self.algebra.dim(), self.dim(), other.dim());
        let action = Op::seq(vec![
            Op::kron(vec![Op::map(self.algebra.comult()), Op::id(a * b)]),
            Op::perm(&[n, n, a, b], &[0, 2, 1, 3]),
            Op::kron(vec![Op::map(&self.action), Op::map(&other.action)]),
        ])
        .materialize();
        Ok(ModuleRep {
            algebra: Arc::clone(&self.algebra),
            space: self.space.tensor(&other.space),
            action,
        })
    }

    /// Restriction along φ: K → H of an H-module.
    pub fn restrict(&self, phi: &HopfMorphism) -> Result<ModuleRep, RepError> {
        same_algebra(phi.target(), &self.algebra)?;
        let action = Op::seq(vec![
            Op::kron(vec![Op::map(phi.map()), Op::id(self.dim())]),
            Op::map(&self.action),
        ])
        .materialize();
        Ok(ModuleRep {
            algebra: Arc::clone(phi.source()),
            space: self.space.clone(),
            action,
        })
    }
}

pub fn check_module(m: &ModuleRep) -> AxiomReport {
    let h = m.algebra.as_ref();
    let d = m.dim();
    let hs = h.space();
    let mut r = AxiomReport::new();
    r.push(compare_ops(
        "module associativity",
        &Op::seq(vec![Op::kron(vec![Op::map(h.mult()), Op::id(d)]), Op::map(&m.action)]),
        &Op::seq(vec![
            Op::kron(vec![Op::id(h.dim()), Op::map(&m.action)]),
            Op::map(&m.action),
        ]),
        &Space::tensor_all(&[hs, hs, &m.space]),
        &m.space,
    ));
    r.push(compare_ops(
        "module unitality",
        &Op::seq(vec![Op::kron(vec![Op::map(h.unit()), Op::id(d)]), Op::map(&m.action)]),
        &Op::id(d),
        &m.space,
        &m.space,
    ));
    r
}

/// Checks f∘act_M = act_N∘(id⊗f).
pub fn check_module_morphism(name: &str, f: &LinMap, m: &ModuleRep, n: &ModuleRep) -> Check {
    if f.shape() != (n.dim(), m.dim()) {
        return Check::fail(name, format!("shape {:?}, expected {:?}", f.shape(), (n.dim(), m.dim())));
    }
    let h = m.algebra.dim();
    compare_ops(
        name,
        &Op::seq(vec![Op::map(&m.action), Op::map(f)]),
        &Op::seq(vec![Op::kron(vec![Op::id(h), Op::map(f)]), Op::map(&n.action)]),
        &m.algebra.space().tensor(&m.space),
        &n.space,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Comodule: left coaction V → H⊗V or right coaction V → V⊗H.
#[derive(Clone, Debug)]
pub struct ComoduleRep {
    algebra: Arc<HopfAlgebra>,
    space: Space,
    side: Side,
    coaction: LinMap,
}

impl ComoduleRep {
    pub fn new(algebra: Arc<HopfAlgebra>, space: Space, side: Side, coaction: LinMap) -> Result<Self, RepError> {
        let c = Self::new_unchecked(algebra, space, side, coaction)?;
        let report = check_comodule(&c);
        if !report.all_pass() {
            return Err(RepError::Axioms {
                name: format!("comodule over {}", c.algebra.name()),
                report,
            });
        }
        Ok(c)
    }

    pub fn new_unchecked(algebra: Arc<HopfAlgebra>, space: Space, side: Side, coaction: LinMap) -> Result<Self, RepError> {
        let d = space.dim();
        expect_shape("coaction", &coaction, (algebra.dim() * d, d))?;
        Ok(ComoduleRep {
            algebra,
            space,
            side,
            coaction,
        })
    }

    /// v ↦ 1⊗v (or v⊗1).
    pub fn trivial(algebra: Arc<HopfAlgebra>, space: Space, side: Side) -> Self {
        let one = algebra.one();
        let d = space.dim();
        let coaction = LinMap::from_fn(algebra.dim() * d, d, |j| {
            let v = SparseVec::basis(d, j);
            match side {
                Side::Left => one.kron(&v),
                Side::Right => v.kron(&one),
            }
        });
        ComoduleRep {
            algebra,
            space,
            side,
            coaction,
        }
    }

    /// H coacting on itself by Δ.
    pub fn regular(algebra: Arc<HopfAlgebra>, side: Side) -> Self {
        let coaction = algebra.comult().clone();
        let space = algebra.space().clone();
        ComoduleRep {
            algebra,
            space,
            side,
            coaction,
        }
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }
}

pub fn check_comodule(c: &ComoduleRep) -> AxiomReport {
    let h = c.algebra.as_ref();
    let (n, d) = (h.dim(), c.dim());
    let hs = h.space();
    let delta = Op::map(&c.coaction);
    let mut r = AxiomReport::new();
    let (counit_side, lhs, rhs, cod) = match c.side {
        Side::Left => (
            Op::seq(vec![delta.clone(), Op::kron(vec![Op::map(h.counit()), Op::id(d)])]),
            Op::seq(vec![delta.clone(), Op::kron(vec![Op::map(h.comult()), Op::id(d)])]),
            Op::seq(vec![delta.clone(), Op::kron(vec![Op::id(n), delta.clone()])]),
            Space::tensor_all(&[hs, hs, &c.space]),
        ),
        Side::Right => (
            Op::seq(vec![delta.clone(), Op::kron(vec![Op::id(d), Op::map(h.counit())])]),
            Op::seq(vec![delta.clone(), Op::kron(vec![Op::id(d), Op::map(h.comult())])]),
            Op::seq(vec![delta.clone(), Op::kron(vec![delta.clone(), Op::id(n)])]),
            Space::tensor_all(&[&c.space, hs, hs]),
        ),
    };
    r.push(compare_ops("comodule counitality", &counit_side, &Op::id(d), &c.space, &c.space));
    r.push(compare_ops("comodule coassociativity", &lhs, &rhs, &c.space, &cod));
    r
}

/// Left module with a compatible left coaction v ↦ v⁽⁻¹⁾⊗v⁽⁰⁾.
#[derive(Clone, Debug)]
pub struct YDModule {
    module: ModuleRep,
    coaction: LinMap,
}

impl YDModule {
    pub fn new(module: ModuleRep, coaction: LinMap) -> Result<Self, RepError> {
        let y = Self::new_unchecked(module, coaction)?;
        let report = check_yd(&y);
        if !report.all_pass() {
            return Err(RepError::Axioms {
                name: format!("YD module over {}", y.algebra().name()),
                report,
            });
        }
        Ok(y)
    }

    pub fn new_unchecked(module: ModuleRep, coaction: LinMap) -> Result<Self, RepError> {
        let d = module.dim();
        expect_shape("coaction", &coaction, (module.algebra.dim() * d, d))?;
        Ok(YDModule { module, coaction })
    }

    /// A module with coaction v ↦ 1⊗v.
    pub fn with_trivial_coaction(module: ModuleRep) -> Result<Self, RepError> {
        let c = ComoduleRep::trivial(Arc::clone(&module.algebra), module.space.clone(), Side::Left);
        Self::new(module, c.coaction)
    }

    /// A module graded by a single grouplike g: v ↦ g⊗v.
    pub fn graded(module: ModuleRep, grade: &SparseVec) -> Result<Self, RepError> {
        let d = module.dim();
        let coaction = LinMap::from_fn(module.algebra.dim() * d, d, |j| grade.kron(&SparseVec::basis(d, j)));
        Self::new(module, coaction)
    }

    /// H with the regular action and the adjoint coaction h ↦ h₁S(h₃)⊗h₂.
    pub fn adjoint(algebra: Arc<HopfAlgebra>) -> Result<Self, RepError> {
        let n = algebra.dim();
        let coaction = Op::seq(vec![
            coproduct3_op(&algebra),
            Op::kron(vec![Op::id(n), Op::id(n), Op::map(algebra.antipode())]),
            Op::perm(&[n, n, n], &[0, 2, 1]),
            Op::kron(vec![Op::map(algebra.mult()), Op::id(n)]),
        ])
        .materialize();
        Self::new(ModuleRep::regular(algebra), coaction)
    }

    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.module.algebra
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn space(&self) -> &Space {
        &self.module.space
    }

    pub fn action(&self) -> &LinMap {
        &self.module.action
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn comodule(&self) -> ComoduleRep {
        ComoduleRep {
            algebra: Arc::clone(&self.module.algebra),
            space: self.module.space.clone(),
            side: Side::Left,
            coaction: self.coaction.clone(),
        }
    }

    /// V⊗W with the tensor action and v⊗w ↦ v⁽⁻¹⁾w⁽⁻¹⁾⊗v⁽⁰⁾⊗w⁽⁰⁾.
    pub fn tensor(&self, other: &YDModule) -> Result<YDModule, RepError> {
        let module = self.module.tensor(&other.module)?;
        let h = self.algebra();
        let (n, a, b) = (h.dim(), self.dim(), other.dim());
        let coaction = Op::seq(vec![
            Op::kron(vec![Op::map(&self.coaction), Op::map(&other.coaction)]),
            Op::perm(&[n, a, n, b], &[0, 2, 1, 3]),
            Op::kron(vec![Op::map(h.mult()), Op::id(a * b)]),
        ])
        .materialize();
        Ok(YDModule { module, coaction })
    }
}

pub fn check_yd(y: &YDModule) -> AxiomReport {
    let h = y.algebra().as_ref();
    let (n, d) = (h.dim(), y.dim());
    let hs = h.space();
    let vs = y.space();
    let dom = hs.tensor(vs);
    let act = Op::map(y.action());
    let delta = Op::map(&y.coaction);
    let mut r = AxiomReport::new();
    r.extend(check_module(&y.module));
    r.extend(check_comodule(&y.comodule()));

    // h₁v⁽⁻¹⁾ ⊗ h₂v⁽⁰⁾ = (h₁v)⁽⁻¹⁾h₂ ⊗ (h₁v)⁽⁰⁾
    let lhs = Op::seq(vec![
        Op::kron(vec![Op::map(h.comult()), delta.clone()]),
        Op::perm(&[n, n, n, d], &[0, 2, 1, 3]),
        Op::kron(vec![Op::map(h.mult()), act.clone()]),
    ]);
    let rhs = Op::seq(vec![
        Op::kron(vec![Op::map(h.comult()), Op::id(d)]),
        Op::perm(&[n, n, d], &[1, 0, 2]),
        Op::kron(vec![Op::id(n), act.clone()]),
        Op::kron(vec![Op::id(n), delta.clone()]),
        Op::perm(&[n, n, d], &[1, 0, 2]),
        Op::kron(vec![Op::map(h.mult()), Op::id(d)]),
    ]);
    r.push(compare_ops("yd condition", &lhs, &rhs, &dom, &dom));

    // δ(hv) = h₁v⁽⁻¹⁾S(h₃) ⊗ h₂v⁽⁰⁾
    let lhs2 = Op::seq(vec![act.clone(), delta.clone()]);
    let rhs2 = Op::seq(vec![
        Op::kron(vec![coproduct3_op(h), delta]),
        Op::kron(vec![Op::id(n), Op::id(n), Op::map(h.antipode()), Op::id(n * d)]),
        Op::perm(&[n, n, n, n, d], &[0, 3, 2, 1, 4]),
        Op::kron(vec![Op::map(h.mult()), Op::id(n), Op::id(n * d)]),
        Op::kron(vec![Op::map(h.mult()), act]),
    ]);
    r.push(compare_ops("yd condition (coaction of hv)", &lhs2, &rhs2, &dom, &dom));
    r
}

/// c^V_W: V⊗W → W⊗V, v⊗w ↦ v⁽⁻¹⁾w ⊗ v⁽⁰⁾.
pub fn yd_braiding(v: &YDModule, w: &ModuleRep) -> Result<LinMap, RepError> {
    same_algebra(v.algebra(), w.algebra())?;
    let (n, a, b) = (v.algebra().dim(), v.dim(), w.dim());
    Ok(Op::seq(vec![
        Op::kron(vec![Op::map(&v.coaction), Op::id(b)]),
        Op::perm(&[n, a, b], &[0, 2, 1]),
        Op::kron(vec![Op::map(&w.action), Op::id(a)]),
    ])
    .materialize())
}

/// H-linearity and invertibility of c^V_W.
pub fn check_braiding(v: &YDModule, w: &ModuleRep) -> Result<AxiomReport, RepError> {
    let c = yd_braiding(v, w)?;
    let vw = v.module.tensor(w)?;
    let wv = w.tensor(&v.module)?;
    let mut r = AxiomReport::new();
    r.push(check_module_morphism("braiding is H-linear", &c, &vw, &wv));
    let full = c.rank() == c.rows() && c.rows() == c.cols();
    r.push(if full {
        Check::pass("braiding is invertible")
    } else {
        Check::fail("braiding is invertible", format!("rank {} of {}", c.rank(), c.cols()))
    });
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cyclic, cyclic_into_taft, s3, taft};

    fn arc(h: HopfAlgebra) -> Arc<HopfAlgebra> {
        Arc::new(h)
    }

    #[test]
    fn trivial_and_regular_modules() {
        let t = arc(taft(3).unwrap());
        assert!(check_module(&ModuleRep::trivial(Arc::clone(&t))).all_pass());
        assert!(check_module(&ModuleRep::regular(t)).all_pass());
    }

    #[test]
    fn tensor_with_trivial_is_unchanged() {
        let t = arc(taft(2).unwrap());
        let reg = ModuleRep::regular(Arc::clone(&t));
        let m = reg.tensor(&ModuleRep::trivial(t)).unwrap();
        assert_eq!(m.action(), reg.action());
    }

    #[test]
    fn tensor_of_regular_c2_by_hand() {
        // g(a⊗b) = ga⊗gb; index a·2+b
        let c2 = arc(cyclic(2).unwrap());
        let reg = ModuleRep::regular(Arc::clone(&c2));
        let m = reg.tensor(&reg).unwrap();
        let g = c2.basis(1);
        let expected = LinMap::from_triples(4, 4, [(3, 0, CycScalar::one()), (2, 1, CycScalar::one()), (1, 2, CycScalar::one()), (0, 3, CycScalar::one())]).unwrap();
        assert_eq!(m.matrix_of(&g), expected);
        assert!(check_module(&m).all_pass());
    }

    #[test]
    fn tensor_is_strictly_associative() {
        let t = arc(taft(2).unwrap());
        let reg = ModuleRep::regular(Arc::clone(&t));
        let triv = ModuleRep::trivial(t);
        let left = reg.tensor(&triv).unwrap().tensor(&reg).unwrap();
        let right = reg.tensor(&triv.tensor(&reg).unwrap()).unwrap();
        assert_eq!(left.action(), right.action());
    }

    #[test]
    fn restriction_to_cyclic_subalgebra() {
        let phi = cyclic_into_taft(3, 1).unwrap();
        let reg = ModuleRep::regular(Arc::clone(phi.target()));
        let res = reg.restrict(&phi).unwrap();
        assert_eq!(res.dim(), 9);
        assert!(check_module(&res).all_pass());
        let id = HopfMorphism::identity(Arc::clone(phi.target()));
        assert_eq!(reg.restrict(&id).unwrap().action(), reg.action());
        let triv = ModuleRep::trivial(Arc::clone(phi.target()));
        let tensored = reg.tensor(&triv).unwrap().restrict(&phi).unwrap();
        let separately = res.tensor(&triv.restrict(&phi).unwrap()).unwrap();
        assert_eq!(tensored.action(), separately.action());
    }

    #[test]
    fn algebra_mismatch_is_an_error() {
        let a = ModuleRep::regular(arc(cyclic(2).unwrap()));
        let b = ModuleRep::regular(arc(cyclic(3).unwrap()));
        assert!(matches!(a.tensor(&b), Err(RepError::AlgebraMismatch { .. })));
    }

    #[test]
    fn bad_action_is_rejected() {
        let c2 = arc(cyclic(2).unwrap());
        let err = ModuleRep::character(c2, "bad", vec![CycScalar::one(), CycScalar::from_int(2)]).unwrap_err();
        assert!(matches!(err, RepError::Axioms { .. }));
    }

    #[test]
    fn cyclic_characters_are_modules() {
        let c3 = arc(cyclic(3).unwrap());
        let chars = ModuleRep::cyclic_characters(c3).unwrap();
        assert_eq!(chars.len(), 3);
        assert!(ModuleRep::cyclic_characters(arc(s3().unwrap())).is_err());
    }

    #[test]
    fn comodules() {
        let t = arc(taft(3).unwrap());
        for side in [Side::Left, Side::Right] {
            assert!(check_comodule(&ComoduleRep::regular(Arc::clone(&t), side)).all_pass());
            assert!(check_comodule(&ComoduleRep::trivial(Arc::clone(&t), Space::unit(), side)).all_pass());
        }
        let bad = ComoduleRep::new_unchecked(Arc::clone(&t), t.space().clone(), Side::Left, LinMap::zero(81, 9)).unwrap();
        assert_eq!(check_comodule(&bad).passed("comodule counitality"), Some(false));
    }

    #[test]
    fn adjoint_yd_modules_and_both_forms_agree() {
        for h in [cyclic(2).unwrap(), taft(2).unwrap(), taft(3).unwrap(), s3().unwrap()] {
            let y = YDModule::adjoint(arc(h)).unwrap();
            let r = check_yd(&y);
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn yd_forms_agree_on_failures() {
        // regular Taft action with trivial coaction is not YD
        let t = arc(taft(2).unwrap());
        let c = ComoduleRep::trivial(Arc::clone(&t), t.space().clone(), Side::Left);
        let y = YDModule::new_unchecked(ModuleRep::regular(t), c.coaction().clone()).unwrap();
        let r = check_yd(&y);
        assert_eq!(r.passed("yd condition"), Some(false));
        assert_eq!(r.passed("yd condition (coaction of hv)"), Some(false));
    }

    #[test]
    fn trivial_coaction_braiding_is_flip() {
        let c3 = arc(cyclic(3).unwrap());
        let v = YDModule::with_trivial_coaction(ModuleRep::regular(Arc::clone(&c3))).unwrap();
        let w = ModuleRep::regular(c3);
        let c = yd_braiding(&v, &w).unwrap();
        assert_eq!(c, LinMap::tensor_permutation(&[3, 3], &[1, 0]));
    }

    #[test]
    fn adjoint_braiding_is_linear_and_invertible() {
        for h in [cyclic(2).unwrap(), taft(2).unwrap()] {
            let h = arc(h);
            let v = YDModule::adjoint(Arc::clone(&h)).unwrap();
            let r = check_braiding(&v, &ModuleRep::regular(h)).unwrap();
            assert!(r.all_pass(), "{r}");
        }
    }

    #[test]
    fn braiding_hexagon() {
        let h = arc(taft(2).unwrap());
        let v = YDModule::adjoint(Arc::clone(&h)).unwrap();
        let w = ModuleRep::regular(Arc::clone(&h));
        let u = ModuleRep::trivial(Arc::clone(&h))
            .tensor(&ModuleRep::regular(Arc::clone(&h)))
            .unwrap();
        let c_wu = yd_braiding(&v, &w.tensor(&u).unwrap()).unwrap();
        let (a, b, c) = (v.dim(), w.dim(), u.dim());
        let step1 = yd_braiding(&v, &w).unwrap().kron(&LinMap::identity(c));
        let step2 = LinMap::identity(b).kron(&yd_braiding(&v, &u).unwrap());
        assert_eq!(step2.compose(&step1).unwrap(), c_wu);
        assert_eq!(c_wu.shape(), (a * b * c, a * b * c));
    }

    #[test]
    fn braiding_is_natural() {
        // right multiplication by any element is a left-module map H → H
        let h = arc(taft(2).unwrap());
        let v = YDModule::adjoint(Arc::clone(&h)).unwrap();
        let w = ModuleRep::regular(Arc::clone(&h));
        let x = h.basis(1).add(&h.basis(2));
        let f = h.right_mult(&x);
        assert!(check_module_morphism("f", &f, &w, &w).passed);
        let c = yd_braiding(&v, &w).unwrap();
        let lhs = f.kron(&LinMap::identity(v.dim())).compose(&c).unwrap();
        let rhs = c.compose(&LinMap::identity(v.dim()).kron(&f)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn graded_characters_of_cyclic_group() {
        let c3 = arc(cyclic(3).unwrap());
        for chi in ModuleRep::cyclic_characters(Arc::clone(&c3)).unwrap() {
            for g in 0..3 {
                let y = YDModule::graded(chi.clone(), &c3.basis(g)).unwrap();
                assert!(check_yd(&y).all_pass());
            }
        }
    }
}
