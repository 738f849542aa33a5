//! Multivariate polynomials over [`CycScalar`] and a generic fraction-free
//! determinant.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::CycScalar;

/// A commutative ring where exact division by a known divisor is available.
pub trait BareissRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / d`, assuming the division is exact.
    fn div_exact(&self, d: &Self) -> Self;
}

impl BareissRing for CycScalar {
    fn zero_like(&self) -> Self {
        CycScalar::zero()
    }
    fn one_like(&self) -> Self {
        CycScalar::one()
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.checked_div(d).expect("Bareiss divisor is a previous nonzero pivot")
    }
}

/// Bareiss elimination with row swaps. Every division is exact.
/// Panics on an empty matrix, whose determinant has no sample element to
/// take the ring identity from.
pub fn bareiss_det<R: BareissRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    assert!(n > 0, "determinant of an empty matrix");
    let zero = m[0][0].zero_like();
    let mut prev = m[0][0].one_like();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return zero;
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        if k + 1 == n {
            break;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = row[j].mul(&pivot_row[k]).sub(&lead.mul(&pivot_row[j]));
                row[j] = if v.is_zero() { v } else { v.div_exact(&prev) };
            }
            row[k] = zero.clone();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Sparse polynomial in `nvars` variables; monomials ordered lexicographically
/// with variable 0 most significant.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, CycScalar>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: CycScalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.terms.insert(e, CycScalar::one());
        p
    }

    /// Σ_i c_i x_i
    pub fn linear(coeffs: &[CycScalar]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CycScalar)> {
        self.terms.iter()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[CycScalar]) -> CycScalar {
        assert_eq!(point.len(), self.nvars, "evaluation point has wrong arity");
        let mut total = CycScalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k as u64);
                }
            }
            total += &t;
        }
        total
    }

    /// A point of the grid {0..=deg}^nvars where the polynomial is nonzero,
    /// if the polynomial is nonzero.
    pub fn nonzero_point(&self) -> Option<Vec<i64>> {
        if self.terms.is_empty() {
            return None;
        }
        let bounds: Vec<u32> = (0..self.nvars).map(|v| self.degree_in(v)).collect();
        let mut cur = vec![0u32; self.nvars];
        loop {
            let pt: Vec<CycScalar> = cur.iter().map(|&x| CycScalar::from_int(x as i64)).collect();
            if !self.evaluate(&pt).is_zero() {
                return Some(cur.iter().map(|&x| x as i64).collect());
            }
            let mut v = 0;
            loop {
                if v == self.nvars {
                    unreachable!("a nonzero polynomial has a nonzero point on its degree grid");
                }
                if cur[v] < bounds[v] {
                    cur[v] += 1;
                    break;
                }
                cur[v] = 0;
                v += 1;
            }
        }
    }

    fn leading(&self) -> Option<(&Vec<u32>, &CycScalar)> {
        self.terms.iter().next_back()
    }
}

impl BareissRing for MPoly {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.nvars)
    }
    fn one_like(&self) -> Self {
        MPoly::constant(self.nvars, CycScalar::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn mul(&self, other: &Self) -> Self {
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
    fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn div_exact(&self, d: &Self) -> Self {
        let (de, dc) = d.leading().expect("division by the zero polynomial");
        let (de, dc_inv) = (de.clone(), dc.inv().expect("nonzero leading coefficient"));
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.nvars);
        while let Some((re, rc)) = rem.leading() {
            let e: Vec<u32> = re
                .iter()
                .zip(&de)
                .map(|(a, b)| a.checked_sub(*b).expect("inexact polynomial division"))
                .collect();
            let mut term = MPoly::zero(self.nvars);
            term.terms.insert(e, rc * &dc_inv);
            rem = rem.sub(&term.mul(d));
            for (k, v) in term.terms {
                quot.add_term(k, v);
            }
        }
        quot
    }
}

impl MPoly {
    /// Symbolic determinant of a square matrix with polynomial entries.
    pub fn det(nvars: usize, m: Vec<Vec<MPoly>>) -> MPoly {
        if m.is_empty() {
            return MPoly::constant(nvars, CycScalar::one());
        }
        bareiss_det(m)
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})·{}", mono.join("·"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    #[test]
    fn scalar_bareiss() {
        let m = vec![
            vec![int(2), int(1), int(0)],
            vec![int(0), int(1), int(1)],
            vec![int(1), int(0), int(3)],
        ];
        assert_eq!(bareiss_det(m), int(7));
        let swap = vec![vec![int(0), int(1)], vec![int(1), int(0)]];
        assert_eq!(bareiss_det(swap), int(-1));
    }

    #[test]
    fn symbolic_det_of_generic_2x2() {
        // [[x, y], [y, x]] has determinant x² − y²
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let d = MPoly::det(2, vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]]);
        let expected = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(d, expected);
        let pt = d.nonzero_point().unwrap();
        let v: Vec<CycScalar> = pt.iter().map(|&a| int(a)).collect();
        assert!(!d.evaluate(&v).is_zero());
    }

    #[test]
    fn symbolic_det_identically_zero() {
        let x = MPoly::var(1, 0);
        let z = MPoly::zero(1);
        let d = MPoly::det(1, vec![vec![x.clone(), z.clone()], vec![x.clone(), z]]);
        assert!(d.terms.is_empty());
        assert_eq!(d.nonzero_point(), None);
    }

    #[test]
    fn symbolic_det_3x3_matches_expansion() {
        // [[x,1,0],[1,x,1],[0,1,x]] = x³ − 2x
        let x = MPoly::var(1, 0);
        let one = MPoly::constant(1, int(1));
        let zero = MPoly::zero(1);
        let m = vec![
            vec![x.clone(), one.clone(), zero.clone()],
            vec![one.clone(), x.clone(), one.clone()],
            vec![zero, one, x.clone()],
        ];
        let d = MPoly::det(1, m);
        let expected = x.mul(&x).mul(&x).sub(&x.add(&x));
        assert_eq!(d, expected);
    }
}
