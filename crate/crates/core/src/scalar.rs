//! Exact arithmetic in the rationals and in cyclotomic fields ℚ(ζ_ℓ).
//!
//! An element of ℚ(ζ_ℓ) is stored as a polynomial in ζ_ℓ of degree below
//! φ(ℓ), reduced modulo the ℓ-th cyclotomic polynomial Φ_ℓ. That reduced form
//! is unique, so equality is a coefficient comparison once both operands live
//! in the same field. Operands of different orders are embedded into
//! ℚ(ζ_lcm) before any operation.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("malformed scalar: {0}")]
    Parse(String),
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> usize {
    assert!(n > 0, "euler_phi(0) is undefined");
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (lowest degree first) of the monic integer polynomial Φ_n.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n > 0, "cyclotomic polynomial of order 0");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    // Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let den = cyclotomic_polynomial(d);
        num = exact_monic_div(&num, &den);
    }
    let poly = Arc::new(num);
    cyclotomic_cache()
        .write()
        .unwrap()
        .insert(n, Arc::clone(&poly));
    poly
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// An element of ℚ(ζ_order) in reduced form.
#[derive(Clone)]
pub struct CycScalar {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycScalar {
            order: 1,
            coeffs: vec![q],
        }
    }

    /// Builds an element of ℚ(ζ_order) from arbitrary polynomial coefficients
    /// in ζ_order; the input is reduced modulo Φ_order.
    pub fn from_poly(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order > 0, "cyclotomic order must be positive");
        CycScalar {
            order,
            coeffs: reduce(order, coeffs),
        }
    }

    /// Rational embedded into ℚ(ζ_order).
    pub fn rational_in(order: u32, q: BigRational) -> Self {
        Self::from_poly(order, vec![q])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Embeds into ℚ(ζ_target); `target` must be a multiple of the order.
    pub fn embed(&self, target: u32) -> Self {
        assert!(
            target.is_multiple_of(self.order),
            "cannot embed order {} into order {}",
            self.order,
            target
        );
        if target == self.order {
            return self.clone();
        }
        let m = (target / self.order) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * m] = c.clone();
        }
        Self::from_poly(target, poly)
    }

    fn align(a: &Self, b: &Self) -> (Self, Self) {
        let l = a.order.lcm(&b.order);
        (a.embed(l), b.embed(l))
    }

    pub fn pow(&self, exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycScalar::rational_in(self.order, BigRational::one());
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, exp: i64) -> Result<Self, ScalarError> {
        if exp >= 0 {
            Ok(self.pow(exp as u64))
        } else {
            Ok(self.inv()?.pow(exp.unsigned_abs()))
        }
    }

    /// Multiplicative inverse via extended Euclid in ℚ[x] modulo Φ_ℓ.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(CycScalar::rational_in(self.order, q.recip()));
        }
        let modulus: Vec<BigRational> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let a = trim(self.coeffs.clone());
        // Invariant: s * a ≡ r (mod Φ).
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
        while !(r1.len() == 1 && !r1[0].is_zero()) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.len() == 1 && r1[0].is_zero() {
                // gcd is nonconstant; impossible for a nonzero element of a field
                return Err(ScalarError::DivisionByZero);
            }
        }
        let c = r1[0].recip();
        let inv: Vec<BigRational> = s1.into_iter().map(|x| x * &c).collect();
        Ok(CycScalar::from_poly(self.order, inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }
}

/// The canonical primitive ℓ-th root of unity ζ_ℓ = x mod Φ_ℓ.
pub fn cyc_root(order: u32) -> CycScalar {
    assert!(order >= 1, "root of unity of order 0");
    let mut poly = vec![BigRational::zero(); 2];
    poly[1] = BigRational::one();
    CycScalar::from_poly(order, poly)
}

/// Gaussian binomial coefficient (n choose k)_q via the q-Pascal rule
/// (n k) = (n-1 k-1) + q^k (n-1 k).
pub fn qbinom(n: u32, k: i64, q: &CycScalar) -> Result<CycScalar, ScalarError> {
    if k < 0 || k > n as i64 {
        return Err(ScalarError::Domain(format!(
            "q-binomial index k={k} outside 0..={n}"
        )));
    }
    let k = k as usize;
    let one = CycScalar::rational_in(q.order(), BigRational::one());
    let mut row = vec![one.clone()];
    for m in 1..=n as usize {
        let mut next = vec![one.clone(); m + 1];
        for j in 1..m {
            next[j] = &row[j - 1] + &(&q.pow(j as u64) * &row[j]);
        }
        row = next;
    }
    Ok(row[k].clone())
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut rem = trim(a.to_vec());
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![BigRational::zero()], rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    rem.truncate(db.max(1));
    (trim(quot), trim(rem))
}

fn reduce(order: u32, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let deg = euler_phi(order);
    if poly.len() > deg {
        let phi = cyclotomic_polynomial(order);
        for i in (deg..poly.len()).rev() {
            if poly[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut poly[i], BigRational::zero());
            for (j, pj) in phi.iter().take(deg).enumerate() {
                if !pj.is_zero() {
                    poly[i - deg + j] -= &c * BigRational::from_integer(pj.clone());
                }
            }
        }
        poly.truncate(deg);
    }
    poly.resize(deg, BigRational::zero());
    poly
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = CycScalar::align(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycScalar {}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        if self.order != rhs.order {
            let (a, b) = CycScalar::align(self, rhs);
            return &a + &b;
        }
        CycScalar {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(x, y)| x + y)
                .collect(),
        }
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        if self.order != rhs.order {
            let (a, b) = CycScalar::align(self, rhs);
            return &a - &b;
        }
        CycScalar {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(x, y)| x - y)
                .collect(),
        }
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        if self.order != rhs.order {
            let (a, b) = CycScalar::align(self, rhs);
            return &a * &b;
        }
        if self.coeffs.len() == 1 {
            return CycScalar {
                order: self.order,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        if let Some(q) = self.as_rational() {
            return rhs.scale_rational(q);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scale_rational(q);
        }
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        CycScalar {
            order: self.order,
            coeffs: reduce(self.order, prod),
        }
    }
}

impl CycScalar {
    fn scale_rational(&self, q: &BigRational) -> CycScalar {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        if self.order == rhs.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl From<i64> for CycScalar {
    fn from(n: i64) -> Self {
        CycScalar::from_int(n)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", fmt_rational(q));
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let root = match i {
                0 => String::new(),
                1 => format!("ζ{}", self.order),
                _ => format!("ζ{}^{}", self.order, i),
            };
            if i == 0 {
                write!(f, "{}", fmt_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{}·{root}", fmt_rational(&mag))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    order: u32,
    coeffs: Vec<(String, String)>,
}

/// Wire form: `{"order": ℓ, "coeffs": [["num","den"], ...]}`. A bare
/// rational string such as `"-3/2"` is also accepted on input.
#[derive(Deserialize)]
#[serde(untagged)]
enum ScalarInput {
    Full(ScalarRepr),
    Text(String),
    Int(i64),
}

pub fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = n
        .parse()
        .map_err(|_| ScalarError::Parse(format!("bad numerator {n:?}")))?;
    let den: BigInt = d
        .parse()
        .map_err(|_| ScalarError::Parse(format!("bad denominator {d:?}")))?;
    if den.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ScalarRepr {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| (c.numer().to_string(), c.denom().to_string()))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match ScalarInput::deserialize(d)? {
            ScalarInput::Full(repr) => {
                if repr.order == 0 {
                    return Err(D::Error::custom("scalar order must be positive"));
                }
                if repr.coeffs.len() > euler_phi(repr.order) {
                    return Err(D::Error::custom(format!(
                        "order {} allows at most {} coefficients",
                        repr.order,
                        euler_phi(repr.order)
                    )));
                }
                let coeffs = repr
                    .coeffs
                    .iter()
                    .map(|(n, dn)| parse_rational(&format!("{n}/{dn}")))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(D::Error::custom)?;
                Ok(CycScalar::from_poly(repr.order, coeffs))
            }
            ScalarInput::Text(t) => parse_rational(&t)
                .map(CycScalar::from_rational)
                .map_err(D::Error::custom),
            ScalarInput::Int(n) => Ok(CycScalar::from_int(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials_small() {
        let as_i64 = |n| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.try_into().unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        assert!(cyc_root(1).is_one());
        let z4 = cyc_root(4);
        assert_eq!(&z4 * &z4, CycScalar::from_int(-1));
        let z3 = cyc_root(3);
        let s = &(&CycScalar::one() + &z3) + &z3.pow(2);
        assert!(s.is_zero());
        for l in 1..=12u32 {
            let z = cyc_root(l);
            assert!(z.pow(l as u64).is_one());
            for k in 1..l {
                assert!(!z.pow(k as u64).is_one(), "ζ_{l}^{k} = 1");
            }
        }
    }

    #[test]
    fn inverse_of_one_plus_zeta3() {
        let z3 = cyc_root(3);
        let a = &CycScalar::one() + &z3;
        let inv = a.inv().unwrap();
        assert_eq!(inv, -z3.clone());
        // multiply back
        assert!((&a * &inv).is_one());
        assert!(CycScalar::one().inv().unwrap().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(CycScalar::zero().inv(), Err(ScalarError::DivisionByZero));
        let z5 = cyc_root(5);
        let zero = &z5 - &z5;
        assert_eq!(zero.inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mixed_orders_embed() {
        // ζ_6^2 = ζ_3
        let z6 = cyc_root(6);
        assert_eq!(z6.pow(2), cyc_root(3));
        // -1 in Q(ζ_2) equals -1 in Q
        assert_eq!(cyc_root(2), CycScalar::from_int(-1));
        let sum = &cyc_root(3) + &cyc_root(4);
        assert_eq!(sum.order(), 12);
        assert_eq!(&sum - &cyc_root(4), cyc_root(3));
    }

    #[test]
    fn qbinom_examples() {
        let z3 = cyc_root(3);
        for n in 0..6 {
            assert!(qbinom(n, 0, &z3).unwrap().is_one());
        }
        assert_eq!(qbinom(2, 1, &z3).unwrap(), &CycScalar::one() + &z3);
        // product formula: (3 choose 1)_q = (1 - q^3)/(1 - q), which vanishes at ζ_3
        let q = cyc_root(3);
        let v = qbinom(3, 1, &q).unwrap();
        assert!(v.is_zero());
        let one = CycScalar::one();
        let product = (&one - &q.pow(3)).checked_div(&(&one - &q)).unwrap();
        assert_eq!(v, product);
        assert!(qbinom(3, 4, &q).is_err());
        assert!(qbinom(3, -1, &q).is_err());
    }

    #[test]
    fn qbinom_at_one_is_binomial() {
        let one = CycScalar::one();
        for n in 0..=12u32 {
            let mut b: i64 = 1;
            for k in 0..=n as i64 {
                assert_eq!(qbinom(n, k, &one).unwrap(), CycScalar::from_int(b));
                b = b * (n as i64 - k) / (k + 1);
            }
        }
    }

    #[test]
    fn qbinom_matches_product_formula() {
        // (n k)_q = ∏_{i<k} (1 - q^{n-i}) / (1 - q^{i+1}) for q with q^j ≠ 1 on the range used
        let q = cyc_root(7);
        let one = CycScalar::one();
        for n in 0..6u32 {
            for k in 0..=n {
                let mut num = one.clone();
                let mut den = one.clone();
                for i in 0..k {
                    num = &num * &(&one - &q.pow((n - i) as u64));
                    den = &den * &(&one - &q.pow((i + 1) as u64));
                }
                assert_eq!(
                    qbinom(n, k as i64, &q).unwrap(),
                    num.checked_div(&den).unwrap()
                );
            }
        }
    }

    #[test]
    fn serde_round_trip() {
        let z5 = cyc_root(5);
        let x = &(&z5 * &CycScalar::from_ratio(-3, 7).unwrap()) + &CycScalar::from_int(2);
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.contains("\"order\":5"));
        let back: CycScalar = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        let r: CycScalar = serde_json::from_str("\"-3/2\"").unwrap();
        assert_eq!(r, CycScalar::from_ratio(-3, 2).unwrap());
        assert!(serde_json::from_str::<CycScalar>("\"1/0\"").is_err());
    }

    fn arb_scalar(order: u32) -> impl Strategy<Value = CycScalar> {
        prop::collection::vec((-20i64..20, 1i64..6), euler_phi(order)).prop_map(move |cs| {
            CycScalar::from_poly(
                order,
                cs.into_iter()
                    .map(|(n, d)| BigRational::new(n.into(), d.into()))
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(5), b in arb_scalar(5), c in arb_scalar(5)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a * &CycScalar::zero()).is_zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn embedding_commutes(a in arb_scalar(3), b in arb_scalar(3)) {
            let (ea, eb) = (a.embed(12), b.embed(12));
            prop_assert_eq!((&a * &b).embed(12), &ea * &eb);
            prop_assert_eq!((&a + &b).embed(12), &ea + &eb);
            if !a.is_zero() {
                prop_assert_eq!(a.inv().unwrap().embed(12), ea.inv().unwrap());
            }
        }
    }
}
