//! Adjunction data, lax/oplax structure, projection formulas and Frobenius
//! monoidal checks for Ind_φ.

use std::sync::Arc;

use super::{Constraint, FrobError, FrobeniusDatum, Induced};
use crate::hopf::HopfAlgebra;
use crate::linalg::{Accum, LinMap, Op, SparseVec};
use crate::rep::{check_module_morphism, ModuleRep};
use crate::scalar::CycScalar;
use crate::verdict::{compare_ops, AxiomReport, Check, Space};

type Terms = Vec<(usize, usize, CycScalar)>;

fn coproduct_terms(h: &HopfAlgebra, x: &SparseVec) -> Terms {
    let n = h.dim();
    h.coproduct(x).iter().map(|(t, c)| (t / n, t % n, c.clone())).collect()
}

/// Matrices of the K-elements tr(e_x b_a) acting on V, indexed [a][x].
fn trace_action_table(d: &FrobeniusDatum, v: &ModuleRep) -> Vec<Vec<Option<LinMap>>> {
    let h = d.h();
    d.ext
        .right_basis()
        .iter()
        .map(|b| {
            (0..h.dim())
                .map(|x| {
                    let t = d.tr(&h.mul(&h.basis(x), b));
                    (!t.is_zero()).then(|| v.matrix_of(&t))
                })
                .collect()
        })
        .collect()
}

fn act_col(m: &Option<LinMap>, j: usize) -> Option<&SparseVec> {
    m.as_ref().map(|m| m.column(j)).filter(|c| !c.is_zero())
}

fn identity_check(name: &str, f: &LinMap, space: &Space) -> Check {
    let id = LinMap::identity(space.dim());
    compare_ops(name, &Op::map(f), &Op::map(&id), space, space)
}

fn compose(name: &str, g: &LinMap, f: &LinMap) -> Result<LinMap, FrobError> {
    g.compose(f).map_err(|e| FrobError::NotFrobenius(format!("{name}: {e}")))
}

/// The eight projection-formula maps for a K-module V and H-module W.
#[derive(Debug, Clone)]
pub struct ProjectionMorphisms {
    /// W⊗F(V) → F(GW⊗V)
    pub lproj_gf: LinMap,
    pub lproj_gf_inv: LinMap,
    /// F(V)⊗W → F(V⊗GW)
    pub rproj_gf: LinMap,
    pub rproj_gf_inv: LinMap,
    /// F(GW⊗V) → W⊗F(V)
    pub lproj_fg: LinMap,
    pub lproj_fg_inv: LinMap,
    /// F(V⊗GW) → F(V)⊗W
    pub rproj_fg: LinMap,
    pub rproj_fg_inv: LinMap,
    pub w_fv: Space,
    pub f_gw_v: Space,
    pub fv_w: Space,
    pub f_v_gw: Space,
}

impl ProjectionMorphisms {
    /// Every claimed inverse pair composes to the identity on both sides.
    pub fn check_inverses(&self) -> AxiomReport {
        let mut r = AxiomReport::new();
        let pairs = [
            ("lproj G⊣F", &self.lproj_gf, &self.lproj_gf_inv, &self.w_fv, &self.f_gw_v),
            ("rproj G⊣F", &self.rproj_gf, &self.rproj_gf_inv, &self.fv_w, &self.f_v_gw),
            ("lproj F⊣G", &self.lproj_fg, &self.lproj_fg_inv, &self.f_gw_v, &self.w_fv),
            ("rproj F⊣G", &self.rproj_fg, &self.rproj_fg_inv, &self.f_v_gw, &self.fv_w),
        ];
        for (name, f, g, dom, cod) in pairs {
            let gf = Op::seq(vec![Op::map(f), Op::map(g)]);
            let fg = Op::seq(vec![Op::map(g), Op::map(f)]);
            r.push(compare_ops(&format!("{name}: inverse after map"), &gf, &Op::id(dom.dim()), dom, dom));
            r.push(compare_ops(&format!("{name}: map after inverse"), &fg, &Op::id(cod.dim()), cod, cod));
        }
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjSide {
    Left,
    Right,
}

/// Result of comparing the G⊣F and F⊣G projection formula morphisms.
#[derive(Debug, Clone)]
pub struct MutualInverseReport {
    pub side: ProjSide,
    /// Composites of the projection morphisms are identities on the test set.
    pub maps: bool,
    /// The element criterion in H⊗_K(K⊗H) resp. H⊗_K(H⊗K).
    pub element: bool,
    /// tr is a right (resp. left) H-comodule map.
    pub comodule: bool,
    pub report: AxiomReport,
}

impl MutualInverseReport {
    pub fn passed(&self) -> bool {
        self.maps
    }

    pub fn criteria_agree(&self) -> bool {
        self.maps == self.element && self.element == self.comodule
    }
}

/// Algebra and coalgebra structure on F(𝟙).
#[derive(Debug, Clone)]
pub struct FrobeniusAlgebra {
    pub object: Induced,
    pub mult: LinMap,
    pub unit: LinMap,
    pub comult: LinMap,
    pub counit: LinMap,
}

impl FrobeniusAlgebra {
    pub fn dim(&self) -> usize {
        self.object.dim()
    }

    /// Algebra, coalgebra and Frobenius axioms; with a braiding Ψ on F(𝟙)⊗F(𝟙)
    /// also m∘Ψ = m and Ψ∘Δ = Δ.
    pub fn check(&self, braiding: Option<&LinMap>) -> AxiomReport {
        let n = self.dim();
        let a = self.object.space();
        let aa = a.tensor(a);
        let aaa = aa.tensor(a);
        let (m, u, dl, e) = (
            Op::map(&self.mult),
            Op::map(&self.unit),
            Op::map(&self.comult),
            Op::map(&self.counit),
        );
        let id = || Op::id(n);
        let mut r = AxiomReport::new();
        r.push(compare_ops(
            "associativity",
            &Op::seq(vec![Op::kron(vec![m.clone(), id()]), m.clone()]),
            &Op::seq(vec![Op::kron(vec![id(), m.clone()]), m.clone()]),
            &aaa,
            a,
        ));
        r.push(compare_ops(
            "left unitality",
            &Op::seq(vec![Op::kron(vec![u.clone(), id()]), m.clone()]),
            &id(),
            a,
            a,
        ));
        r.push(compare_ops(
            "right unitality",
            &Op::seq(vec![Op::kron(vec![id(), u.clone()]), m.clone()]),
            &id(),
            a,
            a,
        ));
        r.push(compare_ops(
            "coassociativity",
            &Op::seq(vec![dl.clone(), Op::kron(vec![dl.clone(), id()])]),
            &Op::seq(vec![dl.clone(), Op::kron(vec![id(), dl.clone()])]),
            a,
            &aaa,
        ));
        r.push(compare_ops(
            "left counitality",
            &Op::seq(vec![dl.clone(), Op::kron(vec![e.clone(), id()])]),
            &id(),
            a,
            a,
        ));
        r.push(compare_ops(
            "right counitality",
            &Op::seq(vec![dl.clone(), Op::kron(vec![id(), e.clone()])]),
            &id(),
            a,
            a,
        ));
        let delta_m = Op::seq(vec![m.clone(), dl.clone()]);
        r.push(compare_ops(
            "Frobenius (m⊗id)(id⊗Δ) = Δm",
            &Op::seq(vec![Op::kron(vec![id(), dl.clone()]), Op::kron(vec![m.clone(), id()])]),
            &delta_m,
            &aa,
            &aa,
        ));
        r.push(compare_ops(
            "Frobenius (id⊗m)(Δ⊗id) = Δm",
            &Op::seq(vec![Op::kron(vec![dl.clone(), id()]), Op::kron(vec![id(), m.clone()])]),
            &delta_m,
            &aa,
            &aa,
        ));
        if let Some(psi) = braiding {
            r.push(compare_ops(
                "commutative (m∘Ψ = m)",
                &Op::seq(vec![Op::map(psi), m.clone()]),
                &m,
                &aa,
                a,
            ));
            r.push(compare_ops(
                "cocommutative (Ψ∘Δ = Δ)",
                &Op::seq(vec![dl.clone(), Op::map(psi)]),
                &dl,
                a,
                &aa,
            ));
        }
        r
    }
}

impl FrobeniusDatum {
    fn h_terms(&self) -> Vec<Terms> {
        self.h_basis().iter().map(|hi| coproduct_terms(self.h(), hi)).collect()
    }

    fn b_terms(&self) -> Vec<Terms> {
        self.ext
            .right_basis()
            .iter()
            .map(|b| coproduct_terms(self.h(), b))
            .collect()
    }

    fn basis_action(w: &ModuleRep) -> Vec<LinMap> {
        let h = w.algebra();
        (0..h.dim()).map(|x| w.matrix_of(&h.basis(x))).collect()
    }

    /// Σ_i proj(δ_i ⊗ w_i) for the given H⊗... summands w_i.
    fn sum_delta(&self, target: &Induced, parts: &[SparseVec]) -> SparseVec {
        let mut acc = Accum::new(target.dim());
        for (di, w) in self.delta.iter().zip(parts) {
            if !w.is_zero() {
                acc.add_scaled(&CycScalar::one(), &target.project(di, w));
            }
        }
        acc.finish()
    }

    // ---- adjunctions ----

    /// unit^{F⊣G}_V: V → GF(V), v ↦ 1⊗v.
    pub fn unit_fg(&self, fv: &Induced) -> LinMap {
        let one = self.h().one();
        let d = fv.source().dim();
        LinMap::from_fn(fv.dim(), d, |j| fv.project(&one, &SparseVec::basis(d, j)))
    }

    /// counit^{F⊣G}_W: FG(W) → W, h⊗w ↦ hw.
    pub fn counit_fg(&self, fgw: &Induced, w: &ModuleRep) -> LinMap {
        let d = w.dim();
        let b = self.ext.right_basis();
        LinMap::from_fn(d, fgw.dim(), |col| w.act(&b[col / d], &SparseVec::basis(d, col % d)))
    }

    /// unit^{G⊣F}_W: W → FG(W), w ↦ Σ δ_i ⊗ h_i w.
    pub fn unit_gf(&self, fgw: &Induced, w: &ModuleRep) -> LinMap {
        let d = w.dim();
        LinMap::from_fn(fgw.dim(), d, |j| {
            let wj = SparseVec::basis(d, j);
            let parts: Vec<SparseVec> = self.h_basis().iter().map(|hi| w.act(hi, &wj)).collect();
            self.sum_delta(fgw, &parts)
        })
    }

    /// counit^{G⊣F}_V: GF(V) → V, h⊗v ↦ tr(h)v.
    pub fn counit_gf(&self, fv: &Induced) -> LinMap {
        let v = fv.source();
        let d = v.dim();
        let b = self.ext.right_basis();
        LinMap::from_fn(d, fv.dim(), |col| v.act(&self.tr(&b[col / d]), &SparseVec::basis(d, col % d)))
    }

    /// Zigzag identities and linearity of the four units and counits.
    pub fn check_adjunctions(&self, v: &ModuleRep, w: &ModuleRep) -> Result<AxiomReport, FrobError> {
        let phi = self.ext.phi();
        let fv = self.induce(v)?;
        let gfv = fv.module().restrict(phi)?;
        let fgfv = self.induce(&gfv)?;
        let gw = w.restrict(phi)?;
        let fgw = self.induce(&gw)?;

        let unit_fg_v = self.unit_fg(&fv);
        let unit_fg_gw = self.unit_fg(&fgw);
        let counit_fg_w = self.counit_fg(&fgw, w);
        let counit_fg_fv = self.counit_fg(&fgfv, fv.module());
        let unit_gf_w = self.unit_gf(&fgw, w);
        let unit_gf_fv = self.unit_gf(&fgfv, fv.module());
        let counit_gf_v = self.counit_gf(&fv);
        let counit_gf_gw = self.counit_gf(&fgw);

        let mut r = AxiomReport::new();
        r.push(check_module_morphism("unit F⊣G is K-linear", &unit_fg_v, v, &gfv));
        r.push(check_module_morphism("counit F⊣G is H-linear", &counit_fg_w, fgw.module(), w));
        r.push(check_module_morphism("unit G⊣F is H-linear", &unit_gf_w, w, fgw.module()));
        r.push(check_module_morphism("counit G⊣F is K-linear", &counit_gf_v, &gfv, v));

        let z1 = compose("zigzag", &counit_fg_fv, &self.ext.ind_map(&unit_fg_v))?;
        r.push(identity_check("F⊣G zigzag on F(V)", &z1, fv.space()));
        let z2 = compose("zigzag", &counit_fg_w, &unit_fg_gw)?;
        r.push(identity_check("F⊣G zigzag on G(W)", &z2, gw.space()));
        let z3 = compose("zigzag", &counit_gf_gw, &unit_gf_w)?;
        r.push(identity_check("G⊣F zigzag on G(W)", &z3, gw.space()));
        let z4 = compose("zigzag", &self.ext.ind_map(&counit_gf_v), &unit_gf_fv)?;
        r.push(identity_check("G⊣F zigzag on F(V)", &z4, fv.space()));
        Ok(r)
    }

    // ---- lax and oplax structure ----

    /// lax_{V,U}: F(V)⊗F(U) → F(V⊗U),
    /// (h⊗v)⊗(g⊗u) ↦ Σ δ_i ⊗ (tr((h_i)₁h)v ⊗ tr((h_i)₂g)u).
    pub fn lax(&self, fv: &Induced, fu: &Induced, fvu: &Induced) -> LinMap {
        let (v, u) = (fv.source(), fu.source());
        let (dv, du) = (v.dim(), u.dim());
        let tv = trace_action_table(self, v);
        let tu = trace_action_table(self, u);
        let hterms = self.h_terms();
        let ncols = fv.dim() * fu.dim();
        LinMap::from_fn(fvu.dim(), ncols, |col| {
            let (left, right) = (col / fu.dim(), col % fu.dim());
            let (a, j) = (left / dv, left % dv);
            let (c, k) = (right / du, right % du);
            let parts: Vec<SparseVec> = hterms
                .iter()
                .map(|terms| {
                    let mut acc = Accum::new(dv * du);
                    for (p, q, coef) in terms {
                        if let (Some(x), Some(y)) = (act_col(&tv[a][*p], j), act_col(&tu[c][*q], k)) {
                            acc.add_scaled(coef, &x.kron(y));
                        }
                    }
                    acc.finish()
                })
                .collect();
            self.sum_delta(fvu, &parts)
        })
    }

    /// oplax_{V,U}: F(V⊗U) → F(V)⊗F(U), h⊗(v⊗u) ↦ (h₁⊗v)⊗(h₂⊗u).
    pub fn oplax(&self, fvu: &Induced, fv: &Induced, fu: &Induced) -> LinMap {
        let (dv, du) = (fv.source().dim(), fu.source().dim());
        let h = self.h();
        let bterms = self.b_terms();
        LinMap::from_fn(fv.dim() * fu.dim(), fvu.dim(), |col| {
            let (a, rest) = (col / (dv * du), col % (dv * du));
            let (vj, uk) = (SparseVec::basis(dv, rest / du), SparseVec::basis(du, rest % du));
            let mut acc = Accum::new(fv.dim() * fu.dim());
            for (p, q, coef) in &bterms[a] {
                let x = fv.project(&h.basis(*p), &vj);
                let y = fu.project(&h.basis(*q), &uk);
                acc.add_scaled(coef, &x.kron(&y));
            }
            acc.finish()
        })
    }

    /// lax₀: 𝟙 → F(𝟙), 1 ↦ Σ δ_i ⊗ ε(h_i).
    pub fn lax0(&self, f1: &Induced) -> LinMap {
        let h = self.h();
        let parts: Vec<SparseVec> = self
            .h_basis()
            .iter()
            .map(|hi| SparseVec::from_entries(1, [(0, h.counit_of(hi))]))
            .collect();
        LinMap::from_columns(f1.dim(), vec![self.sum_delta(f1, &parts)])
    }

    /// oplax₀: F(𝟙) → 𝟙, h⊗1 ↦ ε(h).
    pub fn oplax0(&self, f1: &Induced) -> LinMap {
        let h = self.h();
        debug_assert_eq!(f1.dim(), self.ext.rank());
        LinMap::from_columns(
            1,
            self.ext
                .right_basis()
                .iter()
                .map(|b| SparseVec::from_entries(1, [(0, h.counit_of(b))]))
                .collect(),
        )
    }

    /// lax/oplax maps for modules, inducing as needed.
    pub fn lax_for(&self, v: &ModuleRep, u: &ModuleRep) -> Result<LinMap, FrobError> {
        Ok(self.lax(&self.induce(v)?, &self.induce(u)?, &self.induce(&v.tensor(u)?)?))
    }

    pub fn oplax_for(&self, v: &ModuleRep, u: &ModuleRep) -> Result<LinMap, FrobError> {
        Ok(self.oplax(&self.induce(&v.tensor(u)?)?, &self.induce(v)?, &self.induce(u)?))
    }

    pub fn trivial_k(&self) -> ModuleRep {
        ModuleRep::trivial(Arc::clone(self.k()))
    }

    /// (Co)associativity, (co)unitality and H-linearity of lax and oplax.
    pub fn check_lax_oplax(&self, x: &ModuleRep, y: &ModuleRep, z: &ModuleRep) -> Result<AxiomReport, FrobError> {
        let one = self.trivial_k();
        let fx = self.induce(x)?;
        let fy = self.induce(y)?;
        let fz = self.induce(z)?;
        let xy = x.tensor(y)?;
        let yz = y.tensor(z)?;
        let fxy = self.induce(&xy)?;
        let fyz = self.induce(&yz)?;
        let fxyz = self.induce(&xy.tensor(z)?)?;
        let f1 = self.induce(&one)?;
        let f1x = self.induce(&one.tensor(x)?)?;
        let fx1 = self.induce(&x.tensor(&one)?)?;

        let lax_xy = self.lax(&fx, &fy, &fxy);
        let lax_yz = self.lax(&fy, &fz, &fyz);
        let lax_xy_z = self.lax(&fxy, &fz, &fxyz);
        let lax_x_yz = self.lax(&fx, &fyz, &fxyz);
        let oplax_xy = self.oplax(&fxy, &fx, &fy);
        let oplax_yz = self.oplax(&fyz, &fy, &fz);
        let oplax_xy_z = self.oplax(&fxyz, &fxy, &fz);
        let oplax_x_yz = self.oplax(&fxyz, &fx, &fyz);
        let lax0 = self.lax0(&f1);
        let oplax0 = self.oplax0(&f1);
        let lax_1x = self.lax(&f1, &fx, &f1x);
        let lax_x1 = self.lax(&fx, &f1, &fx1);
        let oplax_1x = self.oplax(&f1x, &f1, &fx);
        let oplax_x1 = self.oplax(&fx1, &fx, &f1);

        let (sx, sy, sz) = (fx.space(), fy.space(), fz.space());
        let sxyz = Space::tensor_all(&[sx, sy, sz]);
        let (dx, dz) = (fx.dim(), fz.dim());
        let mut r = AxiomReport::new();
        r.push(compare_ops(
            "lax associativity",
            &Op::seq(vec![Op::kron(vec![Op::map(&lax_xy), Op::id(dz)]), Op::map(&lax_xy_z)]),
            &Op::seq(vec![Op::kron(vec![Op::id(dx), Op::map(&lax_yz)]), Op::map(&lax_x_yz)]),
            &sxyz,
            fxyz.space(),
        ));
        r.push(compare_ops(
            "lax left unitality",
            &Op::seq(vec![Op::kron(vec![Op::map(&lax0), Op::id(dx)]), Op::map(&lax_1x)]),
            &Op::id(dx),
            sx,
            sx,
        ));
        r.push(compare_ops(
            "lax right unitality",
            &Op::seq(vec![Op::kron(vec![Op::id(dx), Op::map(&lax0)]), Op::map(&lax_x1)]),
            &Op::id(dx),
            sx,
            sx,
        ));
        r.push(compare_ops(
            "oplax coassociativity",
            &Op::seq(vec![Op::map(&oplax_xy_z), Op::kron(vec![Op::map(&oplax_xy), Op::id(dz)])]),
            &Op::seq(vec![Op::map(&oplax_x_yz), Op::kron(vec![Op::id(dx), Op::map(&oplax_yz)])]),
            fxyz.space(),
            &sxyz,
        ));
        r.push(compare_ops(
            "oplax left counitality",
            &Op::seq(vec![Op::map(&oplax_1x), Op::kron(vec![Op::map(&oplax0), Op::id(dx)])]),
            &Op::id(dx),
            sx,
            sx,
        ));
        r.push(compare_ops(
            "oplax right counitality",
            &Op::seq(vec![Op::map(&oplax_x1), Op::kron(vec![Op::id(dx), Op::map(&oplax0)])]),
            &Op::id(dx),
            sx,
            sx,
        ));
        let fxfy = fx.module().tensor(fy.module())?;
        r.push(check_module_morphism("lax is H-linear", &lax_xy, &fxfy, fxy.module()));
        r.push(check_module_morphism("oplax is H-linear", &oplax_xy, fxy.module(), &fxfy));
        let unit_h = ModuleRep::trivial(Arc::clone(self.h()));
        r.push(check_module_morphism("lax₀ is H-linear", &lax0, &unit_h, f1.module()));
        r.push(check_module_morphism("oplax₀ is H-linear", &oplax0, f1.module(), &unit_h));
        Ok(r)
    }

    /// Both Frobenius compatibility diagrams for F(X), F(Y), F(Z).
    pub fn check_frobenius_monoidal(&self, x: &ModuleRep, y: &ModuleRep, z: &ModuleRep) -> Result<AxiomReport, FrobError> {
        let fx = self.induce(x)?;
        let fy = self.induce(y)?;
        let fz = self.induce(z)?;
        let xy = x.tensor(y)?;
        let yz = y.tensor(z)?;
        let fxy = self.induce(&xy)?;
        let fyz = self.induce(&yz)?;
        let fxyz = self.induce(&xy.tensor(z)?)?;
        let (dx, dz) = (fx.dim(), fz.dim());

        let lax_xy = self.lax(&fx, &fy, &fxy);
        let lax_yz = self.lax(&fy, &fz, &fyz);
        let lax_x_yz = self.lax(&fx, &fyz, &fxyz);
        let lax_xy_z = self.lax(&fxy, &fz, &fxyz);
        let oplax_yz = self.oplax(&fyz, &fy, &fz);
        let oplax_xy = self.oplax(&fxy, &fx, &fy);
        let oplax_xy_z = self.oplax(&fxyz, &fxy, &fz);
        let oplax_x_yz = self.oplax(&fxyz, &fx, &fyz);

        let mut r = AxiomReport::new();
        r.push(compare_ops(
            "Frobenius monoidal: (lax⊗id)(id⊗oplax) = oplax∘lax on F(X)⊗F(Y⊗Z)",
            &Op::seq(vec![
                Op::kron(vec![Op::id(dx), Op::map(&oplax_yz)]),
                Op::kron(vec![Op::map(&lax_xy), Op::id(dz)]),
            ]),
            &Op::seq(vec![Op::map(&lax_x_yz), Op::map(&oplax_xy_z)]),
            &fx.space().tensor(fyz.space()),
            &fxy.space().tensor(fz.space()),
        ));
        r.push(compare_ops(
            "Frobenius monoidal: (id⊗lax)(oplax⊗id) = oplax∘lax on F(X⊗Y)⊗F(Z)",
            &Op::seq(vec![
                Op::kron(vec![Op::map(&oplax_xy), Op::id(dz)]),
                Op::kron(vec![Op::id(dx), Op::map(&lax_yz)]),
            ]),
            &Op::seq(vec![Op::map(&lax_xy_z), Op::map(&oplax_x_yz)]),
            &fxy.space().tensor(fz.space()),
            &fx.space().tensor(fyz.space()),
        ));
        Ok(r)
    }

    // ---- projection formulas ----

    pub fn projection_morphisms(&self, v: &ModuleRep, w: &ModuleRep) -> Result<ProjectionMorphisms, FrobError> {
        let h = self.h();
        let phi = self.ext.phi();
        let gw = w.restrict(phi)?;
        let fv = self.induce(v)?;
        let f_gw_v = self.induce(&gw.tensor(v)?)?;
        let f_v_gw = self.induce(&v.tensor(&gw)?)?;
        let (dv, dw) = (v.dim(), w.dim());
        let tv = trace_action_table(self, v);
        let hact = Self::basis_action(w);
        let hterms = self.h_terms();
        let bterms = self.b_terms();
        let r = self.ext.rank();
        let fvd = fv.dim();

        // w⊗(b_c⊗v) ↦ Σ δ_i ⊗ ((h_i)₁w ⊗ tr((h_i)₂b_c)v)
        let lproj_gf = LinMap::from_fn(f_gw_v.dim(), dw * fvd, |col| {
            let (wi, rest) = (col / fvd, col % fvd);
            let (c, j) = (rest / dv, rest % dv);
            let parts: Vec<SparseVec> = hterms
                .iter()
                .map(|terms| {
                    let mut acc = Accum::new(dw * dv);
                    for (p, q, coef) in terms {
                        if let Some(y) = act_col(&tv[c][*q], j) {
                            acc.add_scaled(coef, &hact[*p].column(wi).kron(y));
                        }
                    }
                    acc.finish()
                })
                .collect();
            self.sum_delta(&f_gw_v, &parts)
        });
        // (b_a⊗v)⊗w ↦ Σ δ_i ⊗ (tr((h_i)₁b_a)v ⊗ (h_i)₂w)
        let rproj_gf = LinMap::from_fn(f_v_gw.dim(), fvd * dw, |col| {
            let (left, wi) = (col / dw, col % dw);
            let (a, j) = (left / dv, left % dv);
            let parts: Vec<SparseVec> = hterms
                .iter()
                .map(|terms| {
                    let mut acc = Accum::new(dv * dw);
                    for (p, q, coef) in terms {
                        if let Some(x) = act_col(&tv[a][*p], j) {
                            acc.add_scaled(coef, &x.kron(hact[*q].column(wi)));
                        }
                    }
                    acc.finish()
                })
                .collect();
            self.sum_delta(&f_v_gw, &parts)
        });
        // b_a⊗(w⊗v) ↦ (b_a)₁w ⊗ ((b_a)₂⊗v)
        let lproj_fg = LinMap::from_fn(dw * fvd, r * dw * dv, |col| {
            let (a, rest) = (col / (dw * dv), col % (dw * dv));
            let (wi, j) = (rest / dv, rest % dv);
            let vj = SparseVec::basis(dv, j);
            let mut acc = Accum::new(dw * fvd);
            for (p, q, coef) in &bterms[a] {
                acc.add_scaled(coef, &hact[*p].column(wi).kron(&fv.project(&h.basis(*q), &vj)));
            }
            acc.finish()
        });
        // w⊗(b_a⊗v) ↦ (b_a)₂ ⊗ (S⁻¹((b_a)₁)w ⊗ v)
        let lproj_fg_inv = LinMap::from_fn(f_gw_v.dim(), dw * fvd, |col| {
            let (wi, rest) = (col / fvd, col % fvd);
            let (a, j) = (rest / dv, rest % dv);
            let vj = SparseVec::basis(dv, j);
            let w0 = SparseVec::basis(dw, wi);
            let mut acc = Accum::new(f_gw_v.dim());
            for (p, q, coef) in &bterms[a] {
                let sw = w.act(&h.antipode_inv_of(&h.basis(*p)), &w0);
                if !sw.is_zero() {
                    acc.add_scaled(coef, &f_gw_v.project(&h.basis(*q), &sw.kron(&vj)));
                }
            }
            acc.finish()
        });
        // b_a⊗(v⊗w) ↦ ((b_a)₁⊗v) ⊗ (b_a)₂w
        let rproj_fg = LinMap::from_fn(fvd * dw, r * dv * dw, |col| {
            let (a, rest) = (col / (dv * dw), col % (dv * dw));
            let (j, wi) = (rest / dw, rest % dw);
            let vj = SparseVec::basis(dv, j);
            let mut acc = Accum::new(fvd * dw);
            for (p, q, coef) in &bterms[a] {
                acc.add_scaled(coef, &fv.project(&h.basis(*p), &vj).kron(hact[*q].column(wi)));
            }
            acc.finish()
        });
        // (b_a⊗v)⊗w ↦ (b_a)₁ ⊗ (v ⊗ S((b_a)₂)w)
        let rproj_fg_inv = LinMap::from_fn(f_v_gw.dim(), fvd * dw, |col| {
            let (left, wi) = (col / dw, col % dw);
            let (a, j) = (left / dv, left % dv);
            let vj = SparseVec::basis(dv, j);
            let w0 = SparseVec::basis(dw, wi);
            let mut acc = Accum::new(f_v_gw.dim());
            for (p, q, coef) in &bterms[a] {
                let sw = w.act(&h.antipode_of(&h.basis(*q)), &w0);
                if !sw.is_zero() {
                    acc.add_scaled(coef, &f_v_gw.project(&h.basis(*p), &vj.kron(&sw)));
                }
            }
            acc.finish()
        });
        let lproj_gf_inv = lproj_gf.inverse()?;
        let rproj_gf_inv = rproj_gf.inverse()?;
        Ok(ProjectionMorphisms {
            lproj_gf,
            lproj_gf_inv,
            rproj_gf,
            rproj_gf_inv,
            lproj_fg,
            lproj_fg_inv,
            rproj_fg,
            rproj_fg_inv,
            w_fv: w.space().tensor(fv.space()),
            f_gw_v: f_gw_v.space().clone(),
            fv_w: fv.space().tensor(w.space()),
            f_v_gw: f_v_gw.space().clone(),
        })
    }

    /// Regular K and H, plus the characters of K when K is cyclic.
    pub fn default_testset(&self) -> Vec<(ModuleRep, ModuleRep)> {
        let k = Arc::clone(self.k());
        let w = ModuleRep::regular(Arc::clone(self.h()));
        let mut out = vec![(ModuleRep::regular(Arc::clone(&k)), w.clone())];
        if let Ok(chars) = ModuleRep::cyclic_characters(k) {
            out.extend(chars.into_iter().map(|c| (c, w.clone())));
        }
        out
    }

    /// Σ δ_i ⊗ (tr((h_i)₁) ⊗ (h_i)₂) = 1⊗(1⊗1) in H⊗_K(K⊗H) (right), and
    /// Σ δ_i ⊗ ((h_i)₁ ⊗ tr((h_i)₂)) = 1⊗(1⊗1) in H⊗_K(H⊗K) (left).
    pub fn element_condition(&self, side: ProjSide) -> Result<Check, FrobError> {
        let (h, k) = (self.h(), self.k());
        let kreg = ModuleRep::regular(Arc::clone(k));
        let gh = ModuleRep::regular(Arc::clone(h)).restrict(self.ext.phi())?;
        let (target, name) = match side {
            ProjSide::Right => (self.induce(&kreg.tensor(&gh)?)?, "Σ δ_i ⊗ (tr((h_i)₁) ⊗ (h_i)₂) = 1 ⊗ (1 ⊗ 1)"),
            ProjSide::Left => (self.induce(&gh.tensor(&kreg)?)?, "Σ δ_i ⊗ ((h_i)₁ ⊗ tr((h_i)₂)) = 1 ⊗ (1 ⊗ 1)"),
        };
        let parts: Vec<SparseVec> = self
            .h_terms()
            .iter()
            .map(|terms| {
                let mut acc = Accum::new(h.dim() * k.dim());
                for (p, q, coef) in terms {
                    let v = match side {
                        ProjSide::Right => self.tr(&h.basis(*p)).kron(&h.basis(*q)),
                        ProjSide::Left => h.basis(*p).kron(&self.tr(&h.basis(*q))),
                    };
                    acc.add_scaled(coef, &v);
                }
                acc.finish()
            })
            .collect();
        let lhs = self.sum_delta(&target, &parts);
        let ones = match side {
            ProjSide::Right => k.one().kron(&h.one()),
            ProjSide::Left => h.one().kron(&k.one()),
        };
        let rhs = target.project(&h.one(), &ones);
        Ok(if lhs == rhs {
            Check::pass(name)
        } else {
            Check::fail(
                name,
                format!("{} ≠ {}", target.space().format(&lhs), target.space().format(&rhs)),
            )
        })
    }

    /// Compares rproj^{G⊣F} with (rproj^{F⊣G})⁻¹ (resp. lproj) on each test
    /// pair, and cross-checks against the element and comodule criteria.
    pub fn check_mutual_inverse(
        &self,
        side: ProjSide,
        testset: &[(ModuleRep, ModuleRep)],
    ) -> Result<MutualInverseReport, FrobError> {
        let mut report = AxiomReport::new();
        for (v, w) in testset {
            let pm = self.projection_morphisms(v, w)?;
            let tag = format!(" [V = {}, W = {}]", v.space().label(0), w.space().label(0));
            let (gf, fg, a, b, name) = match side {
                ProjSide::Right => (&pm.rproj_gf, &pm.rproj_fg, &pm.f_v_gw, &pm.fv_w, "rproj"),
                ProjSide::Left => (&pm.lproj_gf, &pm.lproj_fg, &pm.f_gw_v, &pm.w_fv, "lproj"),
            };
            report.push(compare_ops(
                &format!("{name}^{{G⊣F}} ∘ {name}^{{F⊣G}} = id{tag}"),
                &Op::seq(vec![Op::map(fg), Op::map(gf)]),
                &Op::id(a.dim()),
                a,
                a,
            ));
            report.push(compare_ops(
                &format!("{name}^{{F⊣G}} ∘ {name}^{{G⊣F}} = id{tag}"),
                &Op::seq(vec![Op::map(gf), Op::map(fg)]),
                &Op::id(b.dim()),
                b,
                b,
            ));
        }
        let maps = report.all_pass();
        let element_check = self.element_condition(side)?;
        let element = element_check.passed;
        report.push(element_check);
        let constraint = match side {
            ProjSide::Right => Constraint::Right,
            ProjSide::Left => Constraint::Left,
        };
        let comodule = self.ext.satisfies(&self.trace, constraint);
        let cname = match side {
            ProjSide::Right => "tr is a right H-comodule map",
            ProjSide::Left => "tr is a left H-comodule map",
        };
        report.push(if comodule {
            Check::pass(cname)
        } else {
            Check::fail(cname, self.comodule_witness(side))
        });
        Ok(MutualInverseReport {
            side,
            maps,
            element,
            comodule,
            report,
        })
    }

    /// First basis element where the comodule condition fails.
    pub fn comodule_witness(&self, side: ProjSide) -> String {
        let (h, k) = (self.h(), self.k());
        let (nh, nk) = (h.dim(), k.dim());
        let phi = self.ext.phi().map();
        for b in 0..nh {
            let x = h.basis(b);
            let dx = h.coproduct(&x);
            let t = self.tr(&x);
            let (lhs, rhs, space) = match side {
                ProjSide::Right => (
                    Op::kron(vec![Op::map(&self.trace), Op::id(nh)]).apply(&dx),
                    Op::kron(vec![Op::id(nk), Op::map(phi)]).apply(&k.coproduct(&t)),
                    k.space().tensor(h.space()),
                ),
                ProjSide::Left => (
                    Op::kron(vec![Op::id(nh), Op::map(&self.trace)]).apply(&dx),
                    Op::kron(vec![Op::map(phi), Op::id(nk)]).apply(&k.coproduct(&t)),
                    h.space().tensor(k.space()),
                ),
            };
            if lhs != rhs {
                return format!("{}: {} ≠ {}", h.label(b), space.format(&lhs), space.format(&rhs));
            }
        }
        "none".into()
    }

    // ---- Frobenius algebra F(𝟙) ----

    pub fn frobenius_algebra(&self) -> Result<FrobeniusAlgebra, FrobError> {
        let f1 = self.induce(&self.trivial_k())?;
        let mult = self.lax(&f1, &f1, &f1);
        let comult = self.oplax(&f1, &f1, &f1);
        let unit = self.lax0(&f1);
        let counit = self.oplax0(&f1);
        Ok(FrobeniusAlgebra {
            object: f1,
            mult,
            unit,
            comult,
            counit,
        })
    }
}
