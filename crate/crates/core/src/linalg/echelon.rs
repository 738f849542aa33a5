use std::collections::HashMap;

use super::{Accum, SparseVec};
use crate::scalar::CycScalar;

/// Which coordinate of a new vector becomes its pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    First,
    Last,
}

#[derive(Debug, Clone)]
struct Pivot {
    coord: usize,
    vec: SparseVec,
    track: Option<SparseVec>,
}

/// Incremental Gauss–Jordan basis of a subspace.
///
/// Every stored vector has a 1 at its own pivot coordinate and 0 at all other
/// pivot coordinates, so reducing a vector needs a single pass. An optional
/// tracking vector records each basis vector as a combination of the inserted
/// inputs.
#[derive(Debug, Clone)]
pub struct Echelon {
    dim: usize,
    rule: PivotRule,
    pivots: Vec<Pivot>,
    by_coord: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(dim: usize, rule: PivotRule) -> Self {
        Echelon {
            dim,
            rule,
            pivots: Vec::new(),
            by_coord: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn coefficients(&self, v: &SparseVec) -> Vec<(usize, CycScalar)> {
        v.iter()
            .filter_map(|(i, c)| self.by_coord.get(&i).map(|&p| (p, c.clone())))
            .collect()
    }

    /// Residual of `v` after removing its component in the span.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let coeffs = self.coefficients(v);
        if coeffs.is_empty() {
            return v.clone();
        }
        let mut acc = Accum::new(self.dim);
        acc.add_scaled(&CycScalar::one(), v);
        for (p, c) in &coeffs {
            acc.add_scaled(&-c, &self.pivots[*p].vec);
        }
        acc.finish()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns the reduced tracking vector when `v` was already
    /// in the span (a kernel relation among the inputs).
    pub fn insert(&mut self, v: SparseVec, track: Option<SparseVec>) -> Option<SparseVec> {
        assert_eq!(v.dim(), self.dim, "echelon dimension mismatch");
        let coeffs = self.coefficients(&v);
        let mut acc = Accum::new(self.dim);
        acc.add_scaled(&CycScalar::one(), &v);
        let mut tacc = track.as_ref().map(|t| {
            let mut a = Accum::new(t.dim());
            a.add_scaled(&CycScalar::one(), t);
            a
        });
        for (p, c) in &coeffs {
            let neg = -c;
            acc.add_scaled(&neg, &self.pivots[*p].vec);
            if let (Some(ta), Some(pt)) = (tacc.as_mut(), self.pivots[*p].track.as_ref()) {
                ta.add_scaled(&neg, pt);
            }
        }
        let residual = acc.finish();
        let rtrack = tacc.map(Accum::finish);
        if residual.is_zero() {
            return rtrack;
        }
        let (coord, lead) = match self.rule {
            PivotRule::First => residual.entries().first().cloned().unwrap(),
            PivotRule::Last => residual.entries().last().cloned().unwrap(),
        };
        let inv = lead.inv().expect("pivot is nonzero");
        let vec = residual.scale(&inv);
        let track = rtrack.map(|t| t.scale(&inv));
        for p in &mut self.pivots {
            let c = p.vec.get(coord);
            if c.is_zero() {
                continue;
            }
            p.vec = p.vec.sub(&vec.scale(&c));
            if let (Some(pt), Some(t)) = (p.track.as_mut(), track.as_ref()) {
                *pt = pt.sub(&t.scale(&c));
            }
        }
        self.by_coord.insert(coord, self.pivots.len());
        self.pivots.push(Pivot { coord, vec, track });
        None
    }

    /// Expresses `v` through the tracking vectors, if `v` lies in the span.
    pub fn solve(&self, v: &SparseVec, track_dim: usize) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        let mut acc = Accum::new(track_dim);
        for (p, c) in self.coefficients(v) {
            let t = self.pivots[p].track.as_ref().expect("echelon built without tracking");
            acc.add_scaled(&c, t);
        }
        Some(acc.finish())
    }

    /// Coordinates that are not pivots, in increasing order.
    pub fn free_coordinates(&self) -> Vec<usize> {
        (0..self.dim).filter(|i| !self.by_coord.contains_key(i)).collect()
    }

    pub fn pivot_coordinates(&self) -> Vec<usize> {
        self.pivots.iter().map(|p| p.coord).collect()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.pivots.iter().map(|p| &p.vec)
    }
}
