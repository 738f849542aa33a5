use std::sync::Arc;

use super::{Extension, FrobError, FrobeniusDatum};
use crate::linalg::{LinMap, Op, SparseVec};
use crate::rep::{same_algebra, ModuleRep};
use crate::verdict::Space;

/// Ind(V) = H⊗_K V on the basis b_i ⊗ v_j (index i·dim V + j), where b_i is
/// the right K-basis of H.
#[derive(Debug, Clone)]
pub struct Induced {
    source: ModuleRep,
    module: ModuleRep,
    proj: LinMap,
}

impl Induced {
    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn space(&self) -> &Space {
        self.module.space()
    }

    pub fn action(&self) -> &LinMap {
        self.module.action()
    }

    /// The quotient map H⊗V → H⊗_K V.
    pub fn proj(&self) -> &LinMap {
        &self.proj
    }

    /// The class of h ⊗ v.
    pub fn project(&self, h: &SparseVec, v: &SparseVec) -> SparseVec {
        self.proj.apply(&h.kron(v))
    }
}

impl Extension {
    pub fn induce(&self, v: &ModuleRep) -> Result<Induced, FrobError> {
        same_algebra(v.algebra(), self.k())?;
        let h = self.h();
        let (nh, r, d) = (h.dim(), self.rank(), v.dim());
        let nk = self.k().dim();
        // h⊗v = Σ b_iφ(k_i)⊗v ↦ Σ b_i ⊗ k_i v
        let proj = Op::seq(vec![
            Op::kron(vec![Op::map(self.right_coords()), Op::id(d)]),
            Op::kron(vec![Op::id(r), Op::map(v.action())]),
        ]);
        debug_assert_eq!(proj.dim_in(), nh * d);
        debug_assert_eq!(r * nk, nh);
        let proj = proj.materialize();
        let emb = LinMap::from_columns(nh, self.right_basis().to_vec());
        let action = Op::seq(vec![
            Op::kron(vec![Op::id(nh), Op::map(&emb), Op::id(d)]),
            Op::kron(vec![Op::map(h.mult()), Op::id(d)]),
            Op::map(&proj),
        ])
        .materialize();
        let labels = self.right_basis().iter().map(|b| h.format(b)).collect();
        let space = Space::new(labels).tensor(v.space());
        let module = ModuleRep::new_unchecked(Arc::clone(h), space, action)?;
        Ok(Induced {
            source: v.clone(),
            module,
            proj,
        })
    }

    /// Ind(f) for a K-module map f.
    pub fn ind_map(&self, f: &LinMap) -> LinMap {
        LinMap::identity(self.rank()).kron(f)
    }

    /// Hom_K(H, V) with (x·f)(g) = f(gx), stored as (f(h_i))_i on the
    /// basis [h_i] ⊗ v_j.
    pub fn coinduce(&self, v: &ModuleRep) -> Result<ModuleRep, FrobError> {
        same_algebra(v.algebra(), self.k())?;
        let h = self.h();
        let (nh, r, d) = (h.dim(), self.rank(), v.dim());
        // coords[a][m][i] = k with h_m x_a = Σ_i φ(k_i) h_i
        let coords: Vec<Vec<Vec<SparseVec>>> = (0..nh)
            .map(|a| {
                let x = h.basis(a);
                self.left_basis()
                    .iter()
                    .map(|hm| self.left_coords_of(&h.mul(hm, &x)))
                    .collect()
            })
            .collect();
        let action = LinMap::from_fn(r * d, nh * r * d, |col| {
            let (a, rest) = (col / (r * d), col % (r * d));
            let (i, j) = (rest / d, rest % d);
            let vj = SparseVec::basis(d, j);
            let mut entries = Vec::new();
            for (m, cm) in coords[a].iter().enumerate() {
                let img = v.act(&cm[i], &vj);
                entries.extend(img.iter().map(|(t, c)| (m * d + t, c.clone())));
            }
            SparseVec::from_entries(r * d, entries)
        });
        let labels = self.left_basis().iter().map(|b| format!("[{}]", h.format(b))).collect();
        Ok(ModuleRep::new_unchecked(Arc::clone(h), Space::new(labels).tensor(v.space()), action)?)
    }
}

impl FrobeniusDatum {
    pub fn induce(&self, v: &ModuleRep) -> Result<Induced, FrobError> {
        self.ext.induce(v)
    }

    /// θ_V: Ind(V) → CoInd(V), b⊗v ↦ (h_i ↦ tr(h_i b)v).
    pub fn theta(&self, v: &ModuleRep) -> Result<LinMap, FrobError> {
        same_algebra(v.algebra(), self.k())?;
        let h = self.h();
        let (r, d) = (self.ext.rank(), v.dim());
        let traces: Vec<Vec<SparseVec>> = self
            .ext
            .right_basis()
            .iter()
            .map(|b| self.h_basis().iter().map(|hi| self.tr(&h.mul(hi, b))).collect())
            .collect();
        Ok(LinMap::from_fn(r * d, r * d, |col| {
            let (a, j) = (col / d, col % d);
            let vj = SparseVec::basis(d, j);
            let mut entries = Vec::new();
            for (i, t) in traces[a].iter().enumerate() {
                entries.extend(v.act(t, &vj).iter().map(|(s, c)| (i * d + s, c.clone())));
            }
            SparseVec::from_entries(r * d, entries)
        }))
    }

    /// θ_V⁻¹(f) = Σ δ_i ⊗ f(h_i).
    pub fn theta_inv(&self, v: &ModuleRep) -> Result<LinMap, FrobError> {
        let ind = self.induce(v)?;
        Ok(self.theta_inv_on(&ind))
    }

    pub(crate) fn theta_inv_on(&self, ind: &Induced) -> LinMap {
        let d = ind.source().dim();
        LinMap::from_fn(ind.dim(), self.ext.rank() * d, |col| {
            let (i, j) = (col / d, col % d);
            ind.project(&self.delta[i], &SparseVec::basis(d, j))
        })
    }
}
