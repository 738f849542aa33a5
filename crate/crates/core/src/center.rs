//! Induction on Yetter–Drinfeld modules: the Ind-model coaction δ¹, the
//! coaction δ² read off from the G⊣F projection-formula half-braiding, and
//! braided lax/oplax checks.

use thiserror::Error;

use crate::frobinduction::{FrobError, FrobeniusDatum, Induced, ProjSide};
use crate::linalg::{Accum, LinMap, LinalgError, Op, SparseVec};
use crate::rep::{check_yd, coproduct3_op, same_algebra, yd_braiding, ModuleRep, RepError, YDModule};
use crate::verdict::{compare_ops, AxiomReport, Check, Space};

#[derive(Debug, Error)]
pub enum CenterError {
    #[error("input is not a Yetter–Drinfeld module over K:\n{0}")]
    InvalidInput(AxiomReport),
    #[error("{side} projection formula morphisms are not mutual inverses: {witness}")]
    Precondition { side: &'static str, witness: String },
    #[error(transparent)]
    Frob(#[from] FrobError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn side_name(side: ProjSide) -> &'static str {
    match side {
        ProjSide::Left => "left",
        ProjSide::Right => "right",
    }
}

/// Ind_φ(V) for a YD module V over K, with the two H-coactions.
#[derive(Debug, Clone)]
pub struct CenterImage {
    pub datum: FrobeniusDatum,
    pub source: YDModule,
    pub induced: Induced,
    /// δ¹(h⊗v) = h₁φ(v⁽⁻¹⁾)S(h₃) ⊗ (h₂⊗v⁽⁰⁾)
    pub carrier_l: YDModule,
    /// δ²(x) = c^{FX}_H(x⊗1) with c^{FX} built from the G⊣F projections.
    pub carrier_r: YDModule,
}

/// Outcome of comparing δ¹ with δ².
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelComparison {
    Equal,
    Distinct {
        basis: String,
        delta1: String,
        delta2: String,
    },
}

impl ModelComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, ModelComparison::Equal)
    }

    pub fn describe(&self) -> String {
        match self {
            ModelComparison::Equal => "δ¹ = δ²".into(),
            ModelComparison::Distinct { basis, delta1, delta2 } => {
                format!("δ¹({basis}) = {delta1} but δ²({basis}) = {delta2}")
            }
        }
    }
}

/// The coaction x ↦ c_H(x⊗1) of a half-braiding c_H: X⊗H → H⊗X.
fn coaction_from_half_braiding(c: &LinMap, one: &SparseVec, d: usize) -> LinMap {
    LinMap::from_fn(c.rows(), d, |x| c.apply(&SparseVec::basis(d, x).kron(one)))
}

/// δ¹ on Ind(V) computed from the closed formula.
pub fn ind_coaction(datum: &FrobeniusDatum, v: &YDModule, fv: &Induced) -> LinMap {
    let h = datum.h();
    let ext = datum.extension();
    let phi = ext.phi();
    let (n, nk, d) = (h.dim(), datum.k().dim(), v.dim());
    let antipodes: Vec<SparseVec> = (0..n).map(|s| h.antipode_of(&h.basis(s))).collect();
    let cop3 = coproduct3_op(h);
    LinMap::from_fn(n * fv.dim(), fv.dim(), |col| {
        let (a, j) = (col / d, col % d);
        let d3 = cop3.apply(&ext.right_basis()[a]);
        let coact = v.coaction().column(j);
        let mut acc = Accum::new(n * fv.dim());
        for (t, c) in d3.iter() {
            let (p, q, s) = (t / (n * n), (t / n) % n, t % n);
            for (u, c2) in coact.iter() {
                let (kk, jj) = (u / d, u % d);
                debug_assert!(kk < nk);
                let left = h.mul(&h.mul(&h.basis(p), phi.map().column(kk)), &antipodes[s]);
                if left.is_zero() {
                    continue;
                }
                let right = fv.project(&h.basis(q), &SparseVec::basis(d, jj));
                acc.add_scaled(&(c * c2), &left.kron(&right));
            }
        }
        acc.finish()
    })
}

/// c^X_{GA}: X⊗GA → GA⊗X for a YD module X over K and an H-module A.
fn restricted_braiding(datum: &FrobeniusDatum, x: &YDModule, a: &ModuleRep) -> Result<LinMap, CenterError> {
    let ga = a.restrict(datum.extension().phi())?;
    Ok(yd_braiding(x, &ga)?)
}

/// δ² = (lproj^{G⊣F})⁻¹ ∘ F(c^X_{GH}) ∘ rproj^{G⊣F}, read at x⊗1.
pub fn right_model_coaction(datum: &FrobeniusDatum, x: &YDModule) -> Result<LinMap, CenterError> {
    let h = datum.h();
    let reg = ModuleRep::regular(std::sync::Arc::clone(h));
    let pm = datum.projection_morphisms(x.module(), &reg)?;
    let fc = datum.extension().ind_map(&restricted_braiding(datum, x, &reg)?);
    let c = pm.lproj_gf_inv.compose(&fc.compose(&pm.rproj_gf)?)?;
    Ok(coaction_from_half_braiding(&c, &h.one(), pm.fv_w.dim() / h.dim()))
}

/// lproj^{F⊣G} ∘ F(c^X_{GH}) ∘ (rproj^{F⊣G})⁻¹, read at x⊗1.
pub fn left_model_coaction(datum: &FrobeniusDatum, x: &YDModule) -> Result<LinMap, CenterError> {
    let h = datum.h();
    let reg = ModuleRep::regular(std::sync::Arc::clone(h));
    let pm = datum.projection_morphisms(x.module(), &reg)?;
    let fc = datum.extension().ind_map(&restricted_braiding(datum, x, &reg)?);
    let c = pm.lproj_fg.compose(&fc.compose(&pm.rproj_fg_inv)?)?;
    Ok(coaction_from_half_braiding(&c, &h.one(), pm.fv_w.dim() / h.dim()))
}

pub fn z_induce(datum: &FrobeniusDatum, v: &YDModule) -> Result<CenterImage, CenterError> {
    same_algebra(v.algebra(), datum.k())?;
    let input = check_yd(v);
    if !input.all_pass() {
        return Err(CenterError::InvalidInput(input));
    }
    let fv = datum.induce(v.module())?;
    let delta1 = ind_coaction(datum, v, &fv);
    let delta2 = right_model_coaction(datum, v)?;
    Ok(CenterImage {
        datum: datum.clone(),
        source: v.clone(),
        carrier_l: YDModule::new_unchecked(fv.module().clone(), delta1)?,
        carrier_r: YDModule::new_unchecked(fv.module().clone(), delta2)?,
        induced: fv,
    })
}

impl CenterImage {
    /// Coaction codomain H⊗Ind(V).
    pub fn coaction_space(&self) -> Space {
        self.datum.h().space().tensor(self.induced.space())
    }

    /// Both carriers are YD modules over H on the same H-module.
    pub fn check(&self) -> AxiomReport {
        let mut r = AxiomReport::new();
        r.extend_prefixed("δ¹: ", check_yd(&self.carrier_l));
        r.extend_prefixed("δ²: ", check_yd(&self.carrier_r));
        r.push(if self.carrier_l.module() == self.carrier_r.module() {
            Check::pass("carriers share the H-module")
        } else {
            Check::fail("carriers share the H-module", "actions differ")
        });
        r
    }

    pub fn compare_models(&self) -> ModelComparison {
        let (c1, c2) = (self.carrier_l.coaction(), self.carrier_r.coaction());
        let space = self.coaction_space();
        for x in 0..self.induced.dim() {
            if c1.column(x) != c2.column(x) {
                return ModelComparison::Distinct {
                    basis: self.induced.space().label(x),
                    delta1: space.format(c1.column(x)),
                    delta2: space.format(c2.column(x)),
                };
            }
        }
        ModelComparison::Equal
    }
}

/// (id⊗f)∘δ_M = δ_N∘f for a linear map f between left comodules.
fn comodule_morphism_check(name: &str, f: &LinMap, m: &YDModule, n: &YDModule) -> Check {
    let nh = m.algebra().dim();
    let dom = m.space();
    let cod = m.algebra().space().tensor(n.space());
    compare_ops(
        name,
        &Op::seq(vec![Op::map(m.coaction()), Op::kron(vec![Op::id(nh), Op::map(f)])]),
        &Op::seq(vec![Op::map(f), Op::map(n.coaction())]),
        dom,
        &cod,
    )
}

/// Checks the braided Frobenius monoidal structure of Ind_φ on the given YD
/// modules. Both projection formulas must be mutual inverses.
pub fn check_braided_frobenius(datum: &FrobeniusDatum, vs: &[YDModule]) -> Result<AxiomReport, CenterError> {
    let testset = datum.default_testset();
    for side in [ProjSide::Right, ProjSide::Left] {
        let mi = datum.check_mutual_inverse(side, &testset)?;
        if !mi.passed() {
            let witness = mi
                .report
                .failures()
                .next()
                .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))
                .unwrap_or_default();
            return Err(CenterError::Precondition {
                side: side_name(side),
                witness,
            });
        }
    }

    let images: Vec<CenterImage> = vs.iter().map(|v| z_induce(datum, v)).collect::<Result<_, _>>()?;
    let mut r = AxiomReport::new();
    for (i, img) in images.iter().enumerate() {
        r.extend_prefixed(&format!("[V{i}] "), img.check());
        let cmp = img.compare_models();
        r.push(Check::from_witness(
            format!("[V{i}] δ¹ = δ²"),
            (!cmp.is_equal()).then(|| cmp.describe()),
        ));
    }
    for (i, (x, ix)) in vs.iter().zip(&images).enumerate() {
        for (j, (y, iy)) in vs.iter().zip(&images).enumerate() {
            let tag = format!("[V{i},V{j}]");
            let xy = x.tensor(y)?;
            let yx = y.tensor(x)?;
            let (fx, fy) = (&ix.induced, &iy.induced);
            let ixy = z_induce(datum, &xy)?;
            let fxy = &ixy.induced;
            let fyx = datum.induce(yx.module())?;

            let lax_xy = datum.lax(fx, fy, fxy);
            let lax_yx = datum.lax(fy, fx, &fyx);
            let oplax_xy = datum.oplax(fxy, fx, fy);
            let oplax_yx = datum.oplax(&fyx, fy, fx);
            let psi_h = yd_braiding(&ix.carrier_l, iy.carrier_l.module())?;
            let f_psi_k = datum.extension().ind_map(&yd_braiding(x, y.module())?);
            let fxfy = fx.space().tensor(fy.space());
            let fyfx = fy.space().tensor(fx.space());

            r.push(compare_ops(
                &format!("lax braided {tag}"),
                &Op::seq(vec![Op::map(&psi_h), Op::map(&lax_yx)]),
                &Op::seq(vec![Op::map(&lax_xy), Op::map(&f_psi_k)]),
                &fxfy,
                fyx.space(),
            ));
            r.push(compare_ops(
                &format!("oplax braided {tag}"),
                &Op::seq(vec![Op::map(&f_psi_k), Op::map(&oplax_yx)]),
                &Op::seq(vec![Op::map(&oplax_xy), Op::map(&psi_h)]),
                fxy.space(),
                &fyfx,
            ));

            let tensor_img = ix.carrier_l.tensor(&iy.carrier_l)?;
            r.push(comodule_morphism_check(
                &format!("lax is an H-comodule map {tag}"),
                &lax_xy,
                &tensor_img,
                &ixy.carrier_l,
            ));
            r.push(comodule_morphism_check(
                &format!("oplax is an H-comodule map {tag}"),
                &oplax_xy,
                &ixy.carrier_l,
                &tensor_img,
            ));

            let fm = datum.check_frobenius_monoidal(x.module(), y.module(), x.module())?;
            for (k, c) in fm.checks.into_iter().enumerate() {
                let id = if k == 0 { "frobmon1" } else { "frobmon2" };
                r.push(Check {
                    name: format!("{id} {tag}"),
                    ..c
                });
            }
        }
    }
    Ok(r)
}

/// F(𝟙) as an algebra in YD(H): Frobenius axioms plus commutativity and
/// cocommutativity for the braiding of the δ¹ carrier.
pub fn check_yd_frobenius_algebra(datum: &FrobeniusDatum) -> Result<AxiomReport, CenterError> {
    let one = YDModule::with_trivial_coaction(datum.trivial_k())?;
    let img = z_induce(datum, &one)?;
    let alg = datum.frobenius_algebra()?;
    let psi = yd_braiding(&img.carrier_l, img.carrier_l.module())?;
    let mut r = AxiomReport::new();
    r.extend(check_yd(&img.carrier_l));
    r.extend(alg.check(Some(&psi)));
    Ok(r)
}
