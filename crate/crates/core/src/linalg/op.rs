//! Lazy composites of linear maps, evaluated one column at a time.
//!
//! Axiom checks over tensor powers (coassociativity lands in n³ dimensions)
//! never build the composite matrix; each side is applied to one basis vector
//! at a time and compared.

use std::borrow::Cow;

use super::{Accum, LinMap, LinalgError, SparseVec};
use crate::scalar::CycScalar;

#[derive(Clone, Debug)]
pub enum Op<'a> {
    Map(&'a LinMap),
    Owned(LinMap),
    Id(usize),
    /// Tensor product of the factors, rightmost index fastest.
    Kron(Vec<Op<'a>>),
    /// Output factor t is input factor `perm[t]`; `dims` are the input dims.
    Perm { dims: Vec<usize>, perm: Vec<usize> },
    /// Applied left to right: `Seq([f, g])` is g∘f.
    Seq(Vec<Op<'a>>),
}

impl<'a> Op<'a> {
    pub fn map(m: &'a LinMap) -> Self {
        Op::Map(m)
    }

    pub fn id(n: usize) -> Self {
        Op::Id(n)
    }

    pub fn kron(factors: Vec<Op<'a>>) -> Self {
        Op::Kron(factors)
    }

    pub fn seq(steps: Vec<Op<'a>>) -> Self {
        Op::Seq(steps)
    }

    pub fn perm(dims: &[usize], perm: &[usize]) -> Self {
        Op::Perm {
            dims: dims.to_vec(),
            perm: perm.to_vec(),
        }
    }

    /// `other ∘ self`
    pub fn then(self, other: Op<'a>) -> Op<'a> {
        match self {
            Op::Seq(mut steps) => {
                steps.push(other);
                Op::Seq(steps)
            }
            first => Op::Seq(vec![first, other]),
        }
    }

    pub fn dim_in(&self) -> usize {
        match self {
            Op::Map(m) => m.cols(),
            Op::Owned(m) => m.cols(),
            Op::Id(n) => *n,
            Op::Kron(fs) => fs.iter().map(Op::dim_in).product(),
            Op::Perm { dims, .. } => dims.iter().product(),
            Op::Seq(steps) => steps.first().map_or(0, Op::dim_in),
        }
    }

    pub fn dim_out(&self) -> usize {
        match self {
            Op::Map(m) => m.rows(),
            Op::Owned(m) => m.rows(),
            Op::Id(n) => *n,
            Op::Kron(fs) => fs.iter().map(Op::dim_out).product(),
            Op::Perm { dims, .. } => dims.iter().product(),
            Op::Seq(steps) => steps.last().map_or(0, Op::dim_out),
        }
    }

    /// Checks that consecutive steps have matching dimensions.
    pub fn validate(&self) -> Result<(), LinalgError> {
        match self {
            Op::Kron(fs) => fs.iter().try_for_each(Op::validate),
            Op::Seq(steps) => {
                for s in steps {
                    s.validate()?;
                }
                for w in steps.windows(2) {
                    if w[0].dim_out() != w[1].dim_in() {
                        return Err(LinalgError::Shape {
                            op: "seq",
                            left: (w[0].dim_out(), w[0].dim_in()),
                            right: (w[1].dim_out(), w[1].dim_in()),
                        });
                    }
                }
                Ok(())
            }
            Op::Perm { dims, perm } => {
                let mut seen = vec![false; dims.len()];
                for &p in perm {
                    if p >= dims.len() || seen[p] {
                        return Err(LinalgError::Shape {
                            op: "perm",
                            left: (dims.len(), perm.len()),
                            right: (p, p),
                        });
                    }
                    seen[p] = true;
                }
                if perm.len() != dims.len() {
                    return Err(LinalgError::Shape {
                        op: "perm",
                        left: (dims.len(), dims.len()),
                        right: (perm.len(), perm.len()),
                    });
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn apply_basis(&self, i: usize) -> Cow<'_, SparseVec> {
        match self {
            Op::Map(m) => Cow::Borrowed(m.column(i)),
            Op::Owned(m) => Cow::Borrowed(m.column(i)),
            Op::Id(n) => Cow::Owned(SparseVec::basis(*n, i)),
            _ => Cow::Owned(self.apply(&SparseVec::basis(self.dim_in(), i))),
        }
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        assert_eq!(x.dim(), self.dim_in(), "op applied to vector of wrong dimension");
        match self {
            Op::Map(m) => m.apply(x),
            Op::Owned(m) => m.apply(x),
            Op::Id(_) => x.clone(),
            Op::Seq(steps) => {
                let mut v = x.clone();
                for s in steps {
                    v = s.apply(&v);
                }
                v
            }
            Op::Perm { dims, perm } => {
                let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
                let mut multi = vec![0usize; dims.len()];
                let entries = x.iter().map(|(idx, c)| {
                    split_index(idx, dims, &mut multi);
                    let mut out = 0usize;
                    for (t, &p) in perm.iter().enumerate() {
                        out = out * out_dims[t] + multi[p];
                    }
                    (out, c.clone())
                });
                SparseVec::from_entries(self.dim_out(), entries.collect::<Vec<_>>())
            }
            Op::Kron(fs) => {
                let in_dims: Vec<usize> = fs.iter().map(Op::dim_in).collect();
                let out_dims: Vec<usize> = fs.iter().map(Op::dim_out).collect();
                let mut acc = Accum::new(self.dim_out());
                let mut multi = vec![0usize; fs.len()];
                for (idx, c) in x.iter() {
                    split_index(idx, &in_dims, &mut multi);
                    let mut terms: Vec<(usize, CycScalar)> = vec![(0, c.clone())];
                    for (t, f) in fs.iter().enumerate() {
                        let img = f.apply_basis(multi[t]);
                        if img.is_zero() {
                            terms.clear();
                            break;
                        }
                        let mut next = Vec::with_capacity(terms.len() * img.nnz());
                        for (base, coeff) in &terms {
                            for (j, y) in img.iter() {
                                let v = if y.is_one() { coeff.clone() } else { coeff * y };
                                next.push((base * out_dims[t] + j, v));
                            }
                        }
                        terms = next;
                    }
                    for (i, v) in &terms {
                        acc.add(*i, v);
                    }
                }
                acc.finish()
            }
        }
    }

    pub fn materialize(&self) -> LinMap {
        match self {
            Op::Map(m) => (*m).clone(),
            Op::Owned(m) => m.clone(),
            _ => LinMap::from_fn(self.dim_out(), self.dim_in(), |j| {
                self.apply_basis(j).into_owned()
            }),
        }
    }

    /// First (row, column) where the two composites differ.
    pub fn first_difference(&self, other: &Op<'_>) -> Result<Option<(usize, usize)>, LinalgError> {
        self.validate()?;
        other.validate()?;
        if self.dim_in() != other.dim_in() || self.dim_out() != other.dim_out() {
            return Err(LinalgError::Shape {
                op: "compare",
                left: (self.dim_out(), self.dim_in()),
                right: (other.dim_out(), other.dim_in()),
            });
        }
        for j in 0..self.dim_in() {
            let a = self.apply_basis(j);
            let b = other.apply_basis(j);
            if let Some(i) = a.first_difference(&b) {
                return Ok(Some((i, j)));
            }
        }
        Ok(None)
    }
}

/// Mixed-radix decomposition, last factor fastest.
pub fn split_index(mut idx: usize, dims: &[usize], out: &mut [usize]) {
    for t in (0..dims.len()).rev() {
        out[t] = idx % dims[t];
        idx /= dims[t];
    }
}

pub fn join_index(multi: &[usize], dims: &[usize]) -> usize {
    multi.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> LinMap {
        LinMap::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| CycScalar::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn lazy_matches_materialized() {
        let f = m(&[&[1, 2], &[0, 1], &[3, 0]]);
        let g = m(&[&[0, 1], &[1, 1]]);
        let lazy = Op::kron(vec![Op::map(&f), Op::id(2), Op::map(&g)]);
        let eager = f.kron(&LinMap::identity(2)).kron(&g);
        assert_eq!(lazy.materialize(), eager);
        let composite = Op::seq(vec![Op::map(&g), Op::map(&f)]);
        assert_eq!(composite.materialize(), f.compose(&g).unwrap());
    }

    #[test]
    fn perm_of_three_factors() {
        let dims = [2, 3, 2];
        let p = Op::perm(&dims, &[2, 0, 1]);
        // (a,b,c) ↦ (c,a,b)
        let x = SparseVec::basis(12, join_index(&[1, 2, 0], &dims));
        let y = p.apply(&x);
        assert_eq!(y, SparseVec::basis(12, join_index(&[0, 1, 2], &[2, 2, 3])));
    }

    #[test]
    fn shape_errors_are_reported() {
        let f = m(&[&[1, 2]]);
        let bad = Op::seq(vec![Op::map(&f), Op::map(&f)]);
        assert!(bad.validate().is_err());
        assert!(Op::perm(&[2, 2], &[0, 0]).validate().is_err());
    }
}
