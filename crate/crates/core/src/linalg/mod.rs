//! Exact sparse linear algebra over [`CycScalar`].
//!
//! Tensor products of spaces use a single ordering convention: the basis of
//! V⊗W is (v_i ⊗ w_j) ordered with j varying fastest, i.e. index i·dim(W)+j.
//! The same convention applies to any number of factors.

mod echelon;
pub mod op;
pub mod poly;

use std::collections::HashMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::{CycScalar, ScalarError};

pub use echelon::{Echelon, PivotRule};
pub use op::Op;
pub use poly::{bareiss_det, BareissRing, MPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("linear system has no solution")]
    NoSolution,
    #[error("map is not invertible")]
    NotInvertible,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A vector with sorted, nonzero entries.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseVec {
    dim: usize,
    entries: Vec<(usize, CycScalar)>,
}

impl SparseVec {
    pub fn zero(dim: usize) -> Self {
        SparseVec {
            dim,
            entries: Vec::new(),
        }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        assert!(i < dim, "basis index {i} out of range for dimension {dim}");
        SparseVec {
            dim,
            entries: vec![(i, CycScalar::one())],
        }
    }

    /// Accepts entries in any order; duplicates are summed and zeros dropped.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, CycScalar)>) -> Self {
        let mut acc = Accum::new(dim);
        for (i, c) in entries {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn from_dense(values: Vec<CycScalar>) -> Self {
        let dim = values.len();
        SparseVec {
            dim,
            entries: values
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, CycScalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &CycScalar)> {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn get(&self, i: usize) -> CycScalar {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => CycScalar::zero(),
        }
    }

    pub fn to_dense(&self) -> Vec<CycScalar> {
        let mut out = vec![CycScalar::zero(); self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return SparseVec::zero(self.dim);
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        SparseVec {
            dim: self.dim,
            entries: self.entries.iter().map(|(i, c)| (*i, -c)).collect(),
        }
    }

    fn merge(&self, other: &Self, subtract: bool) -> Self {
        assert_eq!(self.dim, other.dim, "vector dimension mismatch");
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, if subtract { -y } else { y.clone() }));
                        b.next();
                    } else {
                        let s = if subtract { x - y } else { x + y };
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, if subtract { -y } else { y.clone() }));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec {
            dim: self.dim,
            entries: out,
        }
    }

    /// Kronecker product a⊗b, index i·dim(b)+j.
    pub fn kron(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other.dim + j, x * y));
            }
        }
        SparseVec {
            dim: self.dim * other.dim,
            entries,
        }
    }

    /// Smallest index where the two vectors differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let d = self.sub(other);
        d.entries.first().map(|(i, _)| *i)
    }

    /// Keeps only coordinates in `keep`, re-indexed by position in `keep`.
    pub fn restrict(&self, keep: &[usize]) -> Self {
        let pos: HashMap<usize, usize> = keep.iter().enumerate().map(|(p, &i)| (i, p)).collect();
        SparseVec::from_entries(
            keep.len(),
            self.entries
                .iter()
                .filter_map(|(i, c)| pos.get(i).map(|&p| (p, c.clone()))),
        )
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[dim {}:", self.dim)?;
        for (i, c) in &self.entries {
            write!(f, " {i}:({c})")?;
        }
        write!(f, "]")
    }
}

/// Hash-based accumulator for linear combinations of sparse vectors.
pub struct Accum {
    dim: usize,
    map: HashMap<usize, CycScalar>,
}

impl Accum {
    pub fn new(dim: usize) -> Self {
        Accum {
            dim,
            map: HashMap::new(),
        }
    }

    pub fn add(&mut self, i: usize, c: &CycScalar) {
        assert!(i < self.dim, "index {i} out of range for dimension {}", self.dim);
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(x) => *x += c,
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, c: &CycScalar, v: &SparseVec) {
        assert_eq!(v.dim, self.dim, "vector dimension mismatch");
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            for (i, x) in &v.entries {
                self.add(*i, x);
            }
        } else {
            for (i, x) in &v.entries {
                self.add(*i, &(x * c));
            }
        }
    }

    pub fn finish(self) -> SparseVec {
        let mut entries: Vec<(usize, CycScalar)> =
            self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        entries.sort_by_key(|(i, _)| *i);
        SparseVec {
            dim: self.dim,
            entries,
        }
    }
}

/// A linear map stored column by column.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

/// Result of [`LinMap::coequalizer`]: the quotient projection and a section.
#[derive(Debug, Clone)]
pub struct Coequalizer {
    pub proj: LinMap,
    pub sect: LinMap,
}

impl LinMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        LinMap {
            rows,
            cols,
            columns: vec![SparseVec::zero(rows); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        LinMap {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| SparseVec::basis(n, i)).collect(),
        }
    }

    /// Panics if a column has the wrong dimension.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        for c in &columns {
            assert_eq!(c.dim, rows, "column dimension mismatch");
        }
        LinMap {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize) -> SparseVec) -> Self {
        Self::from_columns(rows, (0..cols).map(f).collect())
    }

    /// Builds from (row, col, value) triples; duplicates are summed.
    pub fn from_triples(
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, CycScalar)>,
    ) -> Result<Self, LinalgError> {
        let mut per_col: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(LinalgError::Shape {
                    op: "from_triples",
                    left: (rows, cols),
                    right: (r, c),
                });
            }
            per_col[c].push((r, v));
        }
        Ok(LinMap {
            rows,
            cols,
            columns: per_col
                .into_iter()
                .map(|e| SparseVec::from_entries(rows, e))
                .collect(),
        })
    }

    /// Row-major dense input.
    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let triples = rows.into_iter().enumerate().flat_map(|(i, row)| {
            assert_eq!(row.len(), c, "ragged matrix");
            row.into_iter().enumerate().map(move |(j, v)| (i, j, v))
        });
        Self::from_triples(r, c, triples).expect("indices in range")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> CycScalar {
        self.columns[c].get(r)
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &CycScalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (i, j, c)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(|c| c.nnz()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self
                .columns
                .iter()
                .enumerate()
                .all(|(j, c)| c.entries.len() == 1 && c.entries[0].0 == j && c.entries[0].1.is_one())
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        assert_eq!(x.dim, self.cols, "apply: vector dimension mismatch");
        if x.nnz() == 1 && x.entries[0].1.is_one() {
            return self.columns[x.entries[0].0].clone();
        }
        let mut acc = Accum::new(self.rows);
        for (j, c) in &x.entries {
            acc.add_scaled(c, &self.columns[*j]);
        }
        acc.finish()
    }

    /// self ∘ g
    pub fn compose(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        if self.cols != g.rows {
            return Err(LinalgError::Shape {
                op: "compose",
                left: self.shape(),
                right: g.shape(),
            });
        }
        Ok(LinMap {
            rows: self.rows,
            cols: g.cols,
            columns: g.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn kron(&self, g: &LinMap) -> LinMap {
        let mut columns = Vec::with_capacity(self.cols * g.cols);
        for a in &self.columns {
            for b in &g.columns {
                columns.push(a.kron(b));
            }
        }
        LinMap {
            rows: self.rows * g.rows,
            cols: self.cols * g.cols,
            columns,
        }
    }

    pub fn transpose(&self) -> LinMap {
        let mut per_row: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in &col.entries {
                per_row[*i].push((j, c.clone()));
            }
        }
        LinMap {
            rows: self.cols,
            cols: self.rows,
            columns: per_row
                .into_iter()
                .map(|entries| SparseVec {
                    dim: self.cols,
                    entries,
                })
                .collect(),
        }
    }

    pub fn add(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        self.zip(g, "add", |a, b| a.add(b))
    }

    pub fn sub(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        self.zip(g, "sub", |a, b| a.sub(b))
    }

    fn zip(
        &self,
        g: &LinMap,
        op: &'static str,
        f: impl Fn(&SparseVec, &SparseVec) -> SparseVec,
    ) -> Result<LinMap, LinalgError> {
        if self.shape() != g.shape() {
            return Err(LinalgError::Shape {
                op,
                left: self.shape(),
                right: g.shape(),
            });
        }
        Ok(LinMap {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&g.columns)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &CycScalar) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// First (column, row) in column-major order where the maps differ.
    pub fn first_difference(&self, g: &LinMap) -> Result<Option<(usize, usize)>, LinalgError> {
        if self.shape() != g.shape() {
            return Err(LinalgError::Shape {
                op: "compare",
                left: self.shape(),
                right: g.shape(),
            });
        }
        Ok(self
            .columns
            .iter()
            .zip(&g.columns)
            .enumerate()
            .find_map(|(j, (a, b))| a.first_difference(b).map(|i| (i, j))))
    }

    fn column_echelon(&self, rule: PivotRule, track: bool) -> (Echelon, Vec<SparseVec>) {
        let mut ech = Echelon::new(self.rows, rule);
        let mut kernel = Vec::new();
        for (j, col) in self.columns.iter().enumerate() {
            let t = track.then(|| SparseVec::basis(self.cols, j));
            if let Some(k) = ech.insert(col.clone(), t) {
                kernel.push(k);
            }
        }
        (ech, kernel)
    }

    pub fn rank(&self) -> usize {
        self.column_echelon(PivotRule::First, false).0.rank()
    }

    /// Columns form a basis of ker(self).
    pub fn kernel(&self) -> LinMap {
        let (_, kernel) = self.column_echelon(PivotRule::First, true);
        LinMap::from_columns(self.cols, kernel)
    }

    /// Finds x with self∘x = b.
    pub fn solve(&self, b: &LinMap) -> Result<LinMap, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::Shape {
                op: "solve",
                left: self.shape(),
                right: b.shape(),
            });
        }
        let (ech, _) = self.column_echelon(PivotRule::First, true);
        let columns = b
            .columns
            .iter()
            .map(|col| ech.solve(col, self.cols).ok_or(LinalgError::NoSolution))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinMap::from_columns(self.cols, columns))
    }

    pub fn inverse(&self) -> Result<LinMap, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape {
                op: "inverse",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let (ech, kernel) = self.column_echelon(PivotRule::First, true);
        if !kernel.is_empty() {
            return Err(LinalgError::NotInvertible);
        }
        let columns = (0..self.rows)
            .map(|i| {
                ech.solve(&SparseVec::basis(self.rows, i), self.cols)
                    .ok_or(LinalgError::NotInvertible)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LinMap::from_columns(self.cols, columns))
    }

    /// Fraction-free determinant.
    pub fn det(&self) -> Result<CycScalar, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::Shape {
                op: "det",
                left: self.shape(),
                right: self.shape(),
            });
        }
        let mut dense: Vec<Vec<CycScalar>> = vec![vec![CycScalar::zero(); self.cols]; self.rows];
        for (i, j, c) in self.triples() {
            dense[i][j] = c.clone();
        }
        if dense.is_empty() {
            return Ok(CycScalar::one());
        }
        Ok(bareiss_det(dense))
    }

    /// Quotient of the codomain by the image of `self`.
    ///
    /// Pivots are taken at the last nonzero coordinate, so the surviving
    /// quotient coordinates are the earliest standard basis vectors possible.
    pub fn coequalizer(&self) -> Coequalizer {
        let (ech, _) = self.column_echelon(PivotRule::Last, false);
        let keep = ech.free_coordinates();
        let q = keep.len();
        let proj = LinMap::from_fn(q, self.rows, |i| {
            ech.reduce(&SparseVec::basis(self.rows, i)).restrict(&keep)
        });
        let sect = LinMap::from_fn(self.rows, q, |t| SparseVec::basis(self.rows, keep[t]));
        Coequalizer { proj, sect }
    }

    /// Permutation of tensor factors: the factor at output position t is the
    /// input factor `perm[t]`.
    pub fn tensor_permutation(dims: &[usize], perm: &[usize]) -> LinMap {
        let op = Op::Perm {
            dims: dims.to_vec(),
            perm: perm.to_vec(),
        };
        op.materialize()
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{}", self.rows, self.cols)?;
        for (i, j, c) in self.triples() {
            writeln!(f, "  ({i},{j}) = {c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct LinMapRepr {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, CycScalar)>,
}

impl Serialize for LinMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LinMapRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self.triples().map(|(i, j, c)| (i, j, c.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LinMapRepr::deserialize(d)?;
        LinMap::from_triples(repr.rows, repr.cols, repr.entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cyc_root;
    use proptest::prelude::*;

    fn int(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> LinMap {
        LinMap::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn compose_examples() {
        let f = mat(&[&[1, 2], &[3, 4]]);
        let g = mat(&[&[0, 1], &[-1, 5]]);
        // hand product
        assert_eq!(f.compose(&g).unwrap(), mat(&[&[-2, 11], &[-4, 23]]));
        assert_eq!(LinMap::identity(2).compose(&f).unwrap(), f);
        assert!(LinMap::zero(3, 2).compose(&f).unwrap().is_zero());
        let err = f.compose(&LinMap::zero(3, 3)).unwrap_err();
        assert_eq!(
            err,
            LinalgError::Shape {
                op: "compose",
                left: (2, 2),
                right: (3, 3)
            }
        );
    }

    #[test]
    fn kron_examples() {
        assert_eq!(
            LinMap::identity(2).kron(&LinMap::identity(3)),
            LinMap::identity(6)
        );
        let f = mat(&[&[1, 2], &[3, 4]]);
        assert_eq!(f.kron(&LinMap::identity(1)), f);
        let k = f.kron(&mat(&[&[0, 1], &[1, 0]]));
        // rightmost index fastest: entry ((0,1),(0,0)) = f00 * g10 = 1
        assert_eq!(k.get(1, 0), int(1));
        assert_eq!(k.get(2, 1), int(3));
        assert_eq!(k.get(3, 2), int(4));
    }

    #[test]
    fn rank_kernel_inverse() {
        let z = cyc_root(3);
        let m = LinMap::from_rows(vec![
            vec![CycScalar::one(), z.clone()],
            vec![z.pow(2), CycScalar::one()],
        ]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        assert!(m.compose(&k).unwrap().is_zero());
        assert_eq!(m.inverse(), Err(LinalgError::NotInvertible));
        assert_eq!(m.det().unwrap(), CycScalar::zero());

        let zero = LinMap::zero(3, 3);
        assert_eq!(zero.kernel().rank(), 3);
        assert_eq!(LinMap::identity(4).inverse().unwrap(), LinMap::identity(4));

        let f = mat(&[&[2, 1, 0], &[0, 1, 1], &[1, 0, 3]]);
        let inv = f.inverse().unwrap();
        assert!(f.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&f).unwrap().is_identity());
        assert_eq!(f.det().unwrap(), int(7));
    }

    #[test]
    fn solve_and_no_solution() {
        let f = mat(&[&[1, 1], &[2, 2]]);
        let b = mat(&[&[3], &[6]]);
        let x = f.solve(&b).unwrap();
        assert_eq!(f.compose(&x).unwrap(), b);
        assert_eq!(f.solve(&mat(&[&[1], &[0]])), Err(LinalgError::NoSolution));
    }

    #[test]
    fn coequalizer_examples() {
        let c = LinMap::zero(3, 1).coequalizer();
        assert!(c.proj.is_identity());
        let full = LinMap::identity(2).coequalizer();
        assert_eq!(full.proj.rows(), 0);
        let rel = mat(&[&[1], &[-1]]);
        let c = rel.coequalizer();
        assert_eq!(c.proj.rows(), 1);
        assert_eq!(c.proj.column(0), c.proj.column(1));
        assert!(c.proj.compose(&c.sect).unwrap().is_identity());
        assert!(c.proj.compose(&rel).unwrap().is_zero());
    }

    #[test]
    fn permutation_maps() {
        // swap on 2⊗3
        let p = LinMap::tensor_permutation(&[2, 3], &[1, 0]);
        assert_eq!(p.shape(), (6, 6));
        // e_(1,2) = index 5 goes to e_(2,1) = index 2*2+1 = 5
        assert_eq!(p.column(5), &SparseVec::basis(6, 5));
        // e_(0,1) = index 1 goes to e_(1,0) = index 2
        assert_eq!(p.column(1), &SparseVec::basis(6, 2));
        let back = LinMap::tensor_permutation(&[3, 2], &[1, 0]);
        assert!(back.compose(&p).unwrap().is_identity());
    }

    #[test]
    fn serde_round_trip() {
        let z = cyc_root(5);
        let m = LinMap::from_rows(vec![vec![z.clone(), int(0)], vec![int(-2), z.pow(3)]]);
        let json = serde_json::to_string(&m).unwrap();
        let back: LinMap = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let bad = r#"{"rows":1,"cols":1,"entries":[[1,0,"1"]]}"#;
        assert!(serde_json::from_str::<LinMap>(bad).is_err());
    }

    fn arb_map(rows: usize, cols: usize) -> impl Strategy<Value = LinMap> {
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..4], rows * cols).prop_map(
            move |vals| {
                LinMap::from_triples(
                    rows,
                    cols,
                    vals.into_iter()
                        .enumerate()
                        .map(|(k, v)| (k / cols, k % cols, CycScalar::from_int(v))),
                )
                .unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn compose_associative(f in arb_map(2, 3), g in arb_map(3, 4), h in arb_map(4, 2)) {
            prop_assert_eq!(
                f.compose(&g).unwrap().compose(&h).unwrap(),
                f.compose(&g.compose(&h).unwrap()).unwrap()
            );
        }

        #[test]
        fn kron_interchange(f in arb_map(2, 3), f2 in arb_map(3, 2), g in arb_map(2, 2), g2 in arb_map(2, 3)) {
            prop_assert_eq!(
                f.kron(&g).compose(&f2.kron(&g2)).unwrap(),
                f.compose(&f2).unwrap().kron(&g.compose(&g2).unwrap())
            );
        }

        #[test]
        fn rank_nullity(f in arb_map(4, 5)) {
            let k = f.kernel();
            prop_assert_eq!(f.rank() + k.cols(), f.cols());
            prop_assert!(f.compose(&k).unwrap().is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn coequalizer_properties(rel in arb_map(5, 3)) {
            let c = rel.coequalizer();
            prop_assert!(c.proj.compose(&c.sect).unwrap().is_identity());
            prop_assert!(c.proj.compose(&rel).unwrap().is_zero());
            // ker(proj) = im(rel): dimensions agree and im(rel) ⊆ ker(proj)
            prop_assert_eq!(c.proj.kernel().cols(), rel.rank());
            prop_assert_eq!(c.proj.rank(), c.proj.rows());
        }

        #[test]
        fn inverse_round_trip(f in arb_map(3, 3)) {
            match f.inverse() {
                Ok(inv) => {
                    prop_assert!(f.compose(&inv).unwrap().is_identity());
                    prop_assert!(!f.det().unwrap().is_zero());
                }
                Err(e) => {
                    prop_assert_eq!(e, LinalgError::NotInvertible);
                    prop_assert!(f.det().unwrap().is_zero());
                    prop_assert!(f.rank() < 3);
                }
            }
        }
    }
}
