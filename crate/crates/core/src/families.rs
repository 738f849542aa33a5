//! Built-in Hopf algebras: group algebras, Taft algebras, the small quantum
//! group u_ε(sl₂), duals, and the standard inclusions between them.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::hopf::{dual_hopf, HopfAlgebra, HopfData, HopfError, HopfMorphism};
use crate::linalg::{LinMap, Op, SparseVec};
use crate::scalar::{cyc_root, CycScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("parameter out of range: {0}")]
    Param(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// Parameters of a built-in family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Group { name: String, labels: Vec<String>, table: Vec<Vec<usize>> },
    Cyclic { l: u32 },
    Taft { l: u32, s: u32 },
    Uqsl2 { l: u32, s: u32 },
    DualOf(Box<FamilySpec>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<HopfAlgebra, FamilyError> {
        match self {
            FamilySpec::Group { name, labels, table } => group_algebra(name, labels.clone(), table),
            FamilySpec::Cyclic { l } => cyclic(*l),
            FamilySpec::Taft { l, s } => taft_with(*l, *s),
            FamilySpec::Uqsl2 { l, s } => uqsl2_with(*l, *s),
            FamilySpec::DualOf(inner) => Ok(dual_hopf(&inner.build()?)?),
        }
    }
}

/// "1", "g", "g^2 x" style monomial labels; generators with exponent 0 are
/// omitted.
pub fn monomial_label(gens: &[&str], exps: &[usize]) -> String {
    let parts: Vec<String> = gens
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| if e == 1 { g.to_string() } else { format!("{g}^{e}") })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

fn mul_elem(mult: &LinMap, x: &SparseVec, y: &SparseVec) -> SparseVec {
    mult.apply(&x.kron(y))
}

/// Product in H⊗H: (a⊗b)(c⊗d) = ac⊗bd.
fn mul_tensor(mult: &LinMap, n: usize, x: &SparseVec, y: &SparseVec) -> SparseVec {
    Op::seq(vec![
        Op::perm(&[n, n, n, n], &[0, 2, 1, 3]),
        Op::kron(vec![Op::map(mult), Op::map(mult)]),
    ])
    .apply(&x.kron(y))
}

fn pow_elem(mult: &LinMap, one: &SparseVec, x: &SparseVec, k: usize) -> SparseVec {
    (0..k).fold(one.clone(), |acc, _| mul_elem(mult, &acc, x))
}

fn pow_tensor(mult: &LinMap, n: usize, one2: &SparseVec, x: &SparseVec, k: usize) -> SparseVec {
    (0..k).fold(one2.clone(), |acc, _| mul_tensor(mult, n, &acc, x))
}

/// Group algebra from a Cayley table (`table[a][b]` is the index of a·b).
pub fn group_algebra(name: &str, labels: Vec<String>, table: &[Vec<usize>]) -> Result<HopfAlgebra, FamilyError> {
    let n = table.len();
    if n == 0 {
        return Err(FamilyError::NotAGroup("empty table".into()));
    }
    if labels.len() != n {
        return Err(FamilyError::Param(format!("{} labels for {n} elements", labels.len())));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(FamilyError::NotAGroup(format!("row {} has length {}", labels[a], row.len())));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(FamilyError::NotAGroup(format!("entry {bad} out of range in row {}", labels[a])));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(FamilyError::NotAGroup(format!(
                        "({}·{})·{} ≠ {}·({}·{})",
                        labels[a], labels[b], labels[c], labels[a], labels[b], labels[c]
                    )));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or_else(|| FamilyError::NotAGroup("no identity element".into()))?;
    let mut inv = vec![0; n];
    for a in 0..n {
        inv[a] = (0..n)
            .find(|&b| table[a][b] == e && table[b][a] == e)
            .ok_or_else(|| FamilyError::NotAGroup(format!("{} has no inverse", labels[a])))?;
    }
    let one = CycScalar::one;
    let mult = LinMap::from_triples(
        n,
        n * n,
        (0..n).flat_map(|a| (0..n).map(move |b| (table[a][b], a * n + b, one()))),
    )
    .expect("indices checked");
    let data = HopfData {
        name: name.to_string(),
        labels,
        mult,
        unit: LinMap::from_triples(n, 1, [(e, 0, one())]).unwrap(),
        comult: LinMap::from_triples(n * n, n, (0..n).map(|g| (g * n + g, g, one()))).unwrap(),
        counit: LinMap::from_triples(1, n, (0..n).map(|g| (0, g, one()))).unwrap(),
        antipode: LinMap::from_triples(n, n, (0..n).map(|g| (inv[g], g, one()))).unwrap(),
        antipode_inv: Some(LinMap::from_triples(n, n, (0..n).map(|g| (inv[g], g, one()))).unwrap()),
    };
    Ok(HopfAlgebra::new(data)?)
}

pub fn cyclic_table(l: usize) -> Vec<Vec<usize>> {
    (0..l).map(|a| (0..l).map(|b| (a + b) % l).collect()).collect()
}

pub fn cyclic_labels(l: usize, gen: &str) -> Vec<String> {
    (0..l).map(|i| monomial_label(&[gen], &[i])).collect()
}

/// kC_ℓ with generator g.
pub fn cyclic(l: u32) -> Result<HopfAlgebra, FamilyError> {
    if l == 0 {
        return Err(FamilyError::Param("cyclic group order must be positive".into()));
    }
    group_algebra(&format!("kC{l}"), cyclic_labels(l as usize, "g"), &cyclic_table(l as usize))
}

/// The one-dimensional Hopf algebra k.
pub fn ground_field() -> HopfAlgebra {
    group_algebra("k", vec!["1".into()], &[vec![0]]).expect("trivial group")
}

/// Elements of S_3 as permutations of {1,2,3}, with labels.
pub fn s3_elements() -> (Vec<String>, Vec<[usize; 3]>) {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [2, 1, 0],
        [0, 2, 1],
    ];
    let labels = ["1", "(123)", "(132)", "(12)", "(13)", "(23)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    (labels, perms)
}

/// Cayley table of S_3 under (στ)(x) = σ(τ(x)).
pub fn s3_table() -> Vec<Vec<usize>> {
    let (_, perms) = s3_elements();
    let index: HashMap<[usize; 3], usize> = perms.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index[&[s[t[0]], s[t[1]], s[t[2]]]])
                .collect()
        })
        .collect()
}

pub fn s3() -> Result<HopfAlgebra, FamilyError> {
    let (labels, _) = s3_elements();
    group_algebra("kS3", labels, &s3_table())
}

fn check_root_params(l: u32, s: u32) -> Result<CycScalar, FamilyError> {
    if num_integer::gcd(l, s) != 1 {
        return Err(FamilyError::Param(format!(
            "ζ_{l}^{s} is not a primitive {l}-th root of unity"
        )));
    }
    Ok(cyc_root(l).pow(s as u64))
}

/// Taft algebra T_ℓ(ζ_ℓ).
pub fn taft(l: u32) -> Result<HopfAlgebra, FamilyError> {
    taft_with(l, 1)
}

/// Taft algebra T_ℓ(ε) with ε = ζ_ℓ^s: basis g^i x^j at index i·ℓ+j,
/// gx = εxg, g^ℓ = 1, x^ℓ = 0, Δ(x) = x⊗1 + g⊗x, S(x) = −g⁻¹x.
pub fn taft_with(l: u32, s: u32) -> Result<HopfAlgebra, FamilyError> {
    if l < 2 {
        return Err(FamilyError::Param(format!("Taft algebra needs ℓ ≥ 2, got {l}")));
    }
    let eps = check_root_params(l, s)?;
    let lu = l as usize;
    let n = lu * lu;
    let idx = |i: usize, j: usize| (i % lu) * lu + j;
    // (g^a x^b)(g^c x^d) = ε^{-bc} g^{a+c} x^{b+d}
    let eps_inv = eps.inv().expect("root of unity");
    let mut triples = Vec::new();
    for a in 0..lu {
        for b in 0..lu {
            for c in 0..lu {
                for d in 0..lu {
                    if b + d < lu {
                        triples.push((idx(a + c, b + d), idx(a, b) * n + idx(c, d), eps_inv.pow((b * c) as u64)));
                    }
                }
            }
        }
    }
    let mult = LinMap::from_triples(n, n * n, triples).unwrap();
    let one = SparseVec::basis(n, 0);
    let g = SparseVec::basis(n, idx(1, 0));
    let x = SparseVec::basis(n, idx(0, 1));
    let g_inv = SparseVec::basis(n, idx(lu - 1, 0));
    let one2 = one.kron(&one);
    let dg = g.kron(&g);
    let dx = x.kron(&one).add(&g.kron(&x));
    let s_x = mul_elem(&mult, &g_inv, &x).neg();
    let si_x = mul_elem(&mult, &x, &g_inv).neg();
    let mut comult = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    let mut antipode_inv = Vec::with_capacity(n);
    for i in 0..lu {
        for j in 0..lu {
            let d = mul_tensor(&mult, n, &pow_tensor(&mult, n, &one2, &dg, i), &pow_tensor(&mult, n, &one2, &dx, j));
            comult.push(d);
            // S and S⁻¹ are anti-multiplicative
            let gi = pow_elem(&mult, &one, &g_inv, i);
            antipode.push(mul_elem(&mult, &pow_elem(&mult, &one, &s_x, j), &gi));
            antipode_inv.push(mul_elem(&mult, &pow_elem(&mult, &one, &si_x, j), &gi));
        }
    }
    let labels = (0..lu)
        .flat_map(|i| (0..lu).map(move |j| monomial_label(&["g", "x"], &[i, j])))
        .collect();
    let data = HopfData {
        name: if s == 1 { format!("T{l}") } else { format!("T{l}(ζ{l}^{s})") },
        labels,
        mult,
        unit: LinMap::from_columns(n, vec![one]),
        comult: LinMap::from_columns(n * n, comult),
        counit: LinMap::from_triples(1, n, (0..lu).map(|i| (0, idx(i, 0), CycScalar::one()))).unwrap(),
        antipode: LinMap::from_columns(n, antipode),
        antipode_inv: Some(LinMap::from_columns(n, antipode_inv)),
    };
    Ok(HopfAlgebra::new(data)?)
}

pub fn uqsl2(l: u32) -> Result<HopfAlgebra, FamilyError> {
    uqsl2_with(l, 1)
}

/// Left multiplication by generators on the PBW basis f^i k^j e^m.
struct Pbw {
    l: usize,
    eps: CycScalar,
    lambda: CycScalar,
    memo_e: HashMap<usize, SparseVec>,
}

impl Pbw {
    fn dim(&self) -> usize {
        self.l * self.l * self.l
    }

    fn idx(&self, i: usize, j: usize, m: usize) -> usize {
        (i * self.l + (j % self.l)) * self.l + m
    }

    fn split(&self, t: usize) -> (usize, usize, usize) {
        (t / (self.l * self.l), (t / self.l) % self.l, t % self.l)
    }

    fn eps_pow(&self, k: i64) -> CycScalar {
        let l = self.l as i64;
        self.eps.pow(k.rem_euclid(l) as u64)
    }

    fn left_k(&self, v: &SparseVec, inverse: bool) -> SparseVec {
        // k f^i = ε^{-2i} f^i k
        SparseVec::from_entries(
            self.dim(),
            v.iter().map(|(t, c)| {
                let (i, j, m) = self.split(t);
                let (sign, jj) = if inverse { (2, j + self.l - 1) } else { (-2, j + 1) };
                (self.idx(i, jj, m), c * &self.eps_pow(sign * i as i64))
            }),
        )
    }

    fn left_f(&self, v: &SparseVec) -> SparseVec {
        SparseVec::from_entries(
            self.dim(),
            v.iter().filter_map(|(t, c)| {
                let (i, j, m) = self.split(t);
                (i + 1 < self.l).then(|| (self.idx(i + 1, j, m), c.clone()))
            }),
        )
    }

    fn left_e_basis(&mut self, t: usize) -> SparseVec {
        if let Some(v) = self.memo_e.get(&t) {
            return v.clone();
        }
        let (a, b, c) = self.split(t);
        let out = if a == 0 {
            // e k^b = ε^{-2b} k^b e
            if c + 1 < self.l {
                SparseVec::basis(self.dim(), self.idx(0, b, c + 1)).scale(&self.eps_pow(-2 * b as i64))
            } else {
                SparseVec::zero(self.dim())
            }
        } else {
            // e f^a X = f (e f^{a-1} X) + λ (k − k⁻¹) f^{a-1} X
            let lower = self.idx(a - 1, b, c);
            let inner = self.left_e_basis(lower);
            let first = self.left_f(&inner);
            let base = SparseVec::basis(self.dim(), lower);
            let comm = self.left_k(&base, false).sub(&self.left_k(&base, true)).scale(&self.lambda);
            first.add(&comm)
        };
        self.memo_e.insert(t, out.clone());
        out
    }

    fn left_e(&mut self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero(self.dim());
        for (t, c) in v.iter() {
            out = out.add(&self.left_e_basis(t).scale(c));
        }
        out
    }

    /// (f^i k^j e^m)·y
    fn mul_basis(&mut self, t: usize, y: &SparseVec) -> SparseVec {
        let (i, j, m) = self.split(t);
        let mut v = y.clone();
        for _ in 0..m {
            v = self.left_e(&v);
        }
        for _ in 0..j {
            v = self.left_k(&v, false);
        }
        for _ in 0..i {
            v = self.left_f(&v);
        }
        v
    }
}

/// Small quantum group u_ε(sl₂), ε = ζ_ℓ^s, ℓ odd ≥ 3, on the PBW basis
/// f^i k^j e^m (index i·ℓ² + j·ℓ + m) with
/// ke = ε²ek, kf = ε⁻²fk, ef − fe = (k − k⁻¹)/(ε − ε⁻¹),
/// Δ(e) = 1⊗e + e⊗k, Δ(f) = k⁻¹⊗f + f⊗1, Δ(k) = k⊗k,
/// S(e) = −ek⁻¹, S(f) = −kf, S(k) = k⁻¹.
pub fn uqsl2_with(l: u32, s: u32) -> Result<HopfAlgebra, FamilyError> {
    if l < 3 || l.is_multiple_of(2) {
        return Err(FamilyError::Param(format!("u_ε(sl2) needs odd ℓ ≥ 3, got {l}")));
    }
    let eps = check_root_params(l, s)?;
    let lambda = (&eps - &eps.inv().unwrap()).inv().expect("ε² ≠ 1");
    let lu = l as usize;
    let mut pbw = Pbw {
        l: lu,
        eps,
        lambda,
        memo_e: HashMap::new(),
    };
    let n = pbw.dim();
    let mut columns = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            columns.push(pbw.mul_basis(a, &SparseVec::basis(n, b)));
        }
    }
    let mult = LinMap::from_columns(n, columns);
    let one = SparseVec::basis(n, 0);
    let one2 = one.kron(&one);
    let e = SparseVec::basis(n, pbw.idx(0, 0, 1));
    let f = SparseVec::basis(n, pbw.idx(1, 0, 0));
    let k = SparseVec::basis(n, pbw.idx(0, 1, 0));
    let k_inv = SparseVec::basis(n, pbw.idx(0, lu - 1, 0));
    let de = one.kron(&e).add(&e.kron(&k));
    let df = k_inv.kron(&f).add(&f.kron(&one));
    let dk = k.kron(&k);
    let s_e = mul_elem(&mult, &e, &k_inv).neg();
    let s_f = mul_elem(&mult, &k, &f).neg();
    let si_e = mul_elem(&mult, &k_inv, &e).neg();
    let si_f = mul_elem(&mult, &f, &k).neg();
    let mut comult = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    let mut antipode_inv = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for t in 0..n {
        let (i, j, m) = pbw.split(t);
        let d = mul_tensor(
            &mult,
            n,
            &mul_tensor(&mult, n, &pow_tensor(&mult, n, &one2, &df, i), &pow_tensor(&mult, n, &one2, &dk, j)),
            &pow_tensor(&mult, n, &one2, &de, m),
        );
        comult.push(d);
        let anti = |x_e: &SparseVec, x_f: &SparseVec| {
            let se = pow_elem(&mult, &one, x_e, m);
            let sk = pow_elem(&mult, &one, &k_inv, j);
            let sf = pow_elem(&mult, &one, x_f, i);
            mul_elem(&mult, &mul_elem(&mult, &se, &sk), &sf)
        };
        antipode.push(anti(&s_e, &s_f));
        antipode_inv.push(anti(&si_e, &si_f));
        labels.push(monomial_label(&["f", "k", "e"], &[i, j, m]));
    }
    let data = HopfData {
        name: if s == 1 { format!("u{l}(sl2)") } else { format!("u{l}(sl2; ζ{l}^{s})") },
        labels,
        mult,
        unit: LinMap::from_columns(n, vec![one]),
        comult: LinMap::from_columns(n * n, comult),
        counit: LinMap::from_triples(1, n, (0..lu).map(|j| (0, pbw.idx(0, j, 0), CycScalar::one()))).unwrap(),
        antipode: LinMap::from_columns(n, antipode),
        antipode_inv: Some(LinMap::from_columns(n, antipode_inv)),
    };
    Ok(HopfAlgebra::new(data)?)
}

/// Inclusion of group algebras sending element a of K to `images[a]` in G.
pub fn subgroup_inclusion(
    k: Arc<HopfAlgebra>,
    g: Arc<HopfAlgebra>,
    images: &[usize],
) -> Result<HopfMorphism, FamilyError> {
    if images.len() != k.dim() || images.iter().any(|&i| i >= g.dim()) {
        return Err(FamilyError::Param("subgroup image list does not fit".into()));
    }
    let map = LinMap::from_triples(
        g.dim(),
        k.dim(),
        images.iter().enumerate().map(|(a, &b)| (b, a, CycScalar::one())),
    )
    .unwrap();
    let name = format!("{} ⊂ {}", k.name(), g.name());
    Ok(HopfMorphism::new(name, k, g, map)?)
}

/// k ↪ H
pub fn unit_inclusion(h: Arc<HopfAlgebra>) -> Result<HopfMorphism, FamilyError> {
    let k = Arc::new(ground_field());
    let map = h.unit().clone();
    let name = format!("k ⊂ {}", h.name());
    Ok(HopfMorphism::new(name, k, h, map)?)
}

fn power_map(k: &HopfAlgebra, h: &HopfAlgebra, gen: &SparseVec) -> LinMap {
    let mut cur = h.one();
    let mut cols = Vec::with_capacity(k.dim());
    for _ in 0..k.dim() {
        cols.push(cur.clone());
        cur = h.mul(&cur, gen);
    }
    LinMap::from_columns(h.dim(), cols)
}

/// kC_ℓ ↪ T_ℓ(ζ_ℓ^s), g ↦ g.
pub fn cyclic_into_taft(l: u32, s: u32) -> Result<HopfMorphism, FamilyError> {
    let k = Arc::new(cyclic(l)?);
    let h = Arc::new(taft_with(l, s)?);
    let g = h.basis(l as usize);
    let map = power_map(&k, &h, &g);
    let name = format!("{} ⊂ {}", k.name(), h.name());
    Ok(HopfMorphism::new(name, k, h, map)?)
}

/// kC_ℓ ↪ u_ε(sl₂), g ↦ k.
pub fn cyclic_into_uqsl2(l: u32, s: u32) -> Result<HopfMorphism, FamilyError> {
    let k = Arc::new(cyclic(l)?);
    let h = Arc::new(uqsl2_with(l, s)?);
    let gen = h.basis(l as usize);
    let map = power_map(&k, &h, &gen);
    let name = format!("{} ⊂ {}", k.name(), h.name());
    Ok(HopfMorphism::new(name, k, h, map)?)
}

/// Group algebra by short name: `cN` or `s3`.
pub fn named_group(name: &str) -> Result<HopfAlgebra, FamilyError> {
    let lower = name.to_ascii_lowercase();
    if lower == "s3" {
        return s3();
    }
    if let Some(n) = lower.strip_prefix('c').and_then(|r| r.parse::<u32>().ok()) {
        return cyclic(n);
    }
    Err(FamilyError::Param(format!("unknown group {name:?}; expected cN or s3")))
}

/// The inclusion K ⊂ G for named groups: cM ⊂ cN (M | N), c3 ⊂ s3,
/// c2 ⊂ s3 (onto ⟨(12)⟩) and c1 ⊂ anything.
pub fn named_subgroup(g: &str, k: &str) -> Result<HopfMorphism, FamilyError> {
    let gh = Arc::new(named_group(g)?);
    let kh = Arc::new(named_group(k)?);
    let (gl, kl) = (g.to_ascii_lowercase(), k.to_ascii_lowercase());
    let m = kh.dim();
    let images: Vec<usize> = if m == 1 {
        vec![0]
    } else if gl == "s3" && m == 3 {
        vec![0, 1, 2]
    } else if gl == "s3" && m == 2 {
        vec![0, 3]
    } else if gl.starts_with('c') && kl.starts_with('c') && gh.dim() % m == 0 {
        let step = gh.dim() / m;
        (0..m).map(|a| a * step).collect()
    } else {
        return Err(FamilyError::Param(format!("no built-in inclusion {k} ⊂ {g}")));
    };
    subgroup_inclusion(kh, gh, &images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_hopf_axioms, check_morphism};
    use crate::scalar::qbinom;

    #[test]
    fn group_algebras_validate() {
        let c2 = cyclic(2).unwrap();
        assert_eq!(c2.dim(), 2);
        assert!(check_hopf_axioms(&c2).all_pass());
        let s = s3().unwrap();
        assert_eq!(s.dim(), 6);
        assert!(!s.is_commutative());
        assert!(s.is_cocommutative());
    }

    #[test]
    fn broken_table_is_rejected() {
        // a·b defined as a − b mod 3 is not associative
        let table: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + 3 - b) % 3).collect()).collect();
        let err = group_algebra("bad", cyclic_labels(3, "g"), &table).unwrap_err();
        assert!(matches!(err, FamilyError::NotAGroup(_)));
    }

    #[test]
    fn taft_dimensions_and_coproduct() {
        let t2 = taft(2).unwrap();
        assert_eq!(t2.dim(), 4);
        let t3 = taft(3).unwrap();
        assert_eq!(t3.dim(), 9);
        // Δ(x²) = x²⊗1 + (1+ε⁻¹) g x⊗x + g²⊗x², since xg = ε⁻¹gx
        let x2 = t3.basis(2);
        let d = t3.coproduct(&x2);
        let n = 9;
        let (one, x, xx, gx, g2) = (0, 1, 2, 4, 6);
        let eps = cyc_root(3);
        assert_eq!(d.get(xx * n + one), CycScalar::one());
        assert_eq!(d.get(g2 * n + xx), CycScalar::one());
        assert_eq!(d.get(gx * n + x), qbinom(2, 1, &eps.inv().unwrap()).unwrap());
        assert_eq!(d.nnz(), 3);
    }

    #[test]
    fn corrupted_taft_antipode_fails_only_antipode_axioms() {
        let mut data = taft(3).unwrap().to_data();
        data.antipode = LinMap::identity(9);
        data.antipode_inv = Some(LinMap::identity(9));
        let broken = HopfAlgebra::new_unchecked(data).unwrap();
        let r = check_hopf_axioms(&broken);
        for c in &r.checks {
            let antipode_axiom = c.name == "left antipode" || c.name == "right antipode";
            assert_eq!(c.passed, !antipode_axiom, "{}", c.name);
        }
        assert!(r.get("left antipode").unwrap().witness.is_some());
    }

    #[test]
    fn uqsl2_at_three() {
        let u = uqsl2(3).unwrap();
        assert_eq!(u.dim(), 27);
        assert!(uqsl2(4).is_err());
        assert!(uqsl2(1).is_err());
        // ef − fe = (k − k⁻¹)/(ε − ε⁻¹)
        let (e, f, k, kinv) = (u.basis(1), u.basis(9), u.basis(3), u.basis(6));
        let lhs = u.mul(&e, &f).sub(&u.mul(&f, &e));
        let eps = cyc_root(3);
        let lam = (&eps - &eps.inv().unwrap()).inv().unwrap();
        assert_eq!(lhs, k.sub(&kinv).scale(&lam));
        // ke = ε² ek
        assert_eq!(u.mul(&k, &e), u.mul(&e, &k).scale(&eps.pow(2)));
    }

    #[test]
    fn uqsl2_top_coproduct_term() {
        // (tr⊗id)Δ(e²f²) has the k²⊗k² term coming from f²e² ⊗ k²
        let u = uqsl2(3).unwrap();
        let e = u.basis(1);
        let f = u.basis(9);
        let e2f2 = u.mul(&u.mul(&e, &e), &u.mul(&f, &f));
        let d = u.coproduct(&e2f2);
        let top = 2 * 9 + 2; // f^2 e^2
        let k2 = 2 * 3; // k^2
        assert_eq!(d.get(top * 27 + k2), CycScalar::one());
    }

    #[test]
    fn standard_morphisms_validate() {
        for phi in [
            cyclic_into_taft(3, 1).unwrap(),
            cyclic_into_uqsl2(3, 1).unwrap(),
            unit_inclusion(Arc::new(cyclic(3).unwrap())).unwrap(),
            named_subgroup("c4", "c2").unwrap(),
            named_subgroup("s3", "c3").unwrap(),
        ] {
            assert!(check_morphism(&phi).all_pass(), "{}", phi.name());
        }
    }

    #[test]
    fn g_to_x_is_not_a_morphism() {
        let k = Arc::new(cyclic(3).unwrap());
        let h = Arc::new(taft(3).unwrap());
        let x = h.basis(1);
        let map = power_map(&k, &h, &x);
        let phi = HopfMorphism::new_unchecked("bad", k, h, map).unwrap();
        let r = check_morphism(&phi);
        assert_eq!(r.passed("multiplicative"), Some(false));
    }

    #[test]
    fn primitivity_enforced() {
        assert!(taft_with(4, 2).is_err());
        assert!(taft_with(5, 2).is_ok());
    }
}
