//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use hopfrob::center::{check_braided_frobenius, check_yd_frobenius_algebra, z_induce, ModelComparison};
use hopfrob::families::{
    cyclic, cyclic_into_taft, cyclic_into_uqsl2, named_subgroup, s3, taft, unit_inclusion, uqsl2,
};
use hopfrob::frobinduction::{normalize_trace, Constraint, DecisionPath, Extension, FrobeniusDatum, ProjSide};
use hopfrob::hopf::{check_hopf_axioms, dual_hopf, HopfAlgebra, HopfMorphism};
use hopfrob::linalg::{LinMap, SparseVec};
use hopfrob::rep::{ModuleRep, YDModule};
use hopfrob::scalar::CycScalar;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ext(phi: HopfMorphism) -> Arc<Extension> {
    Arc::new(Extension::new(phi).expect("free extension"))
}

fn decide(e: &Arc<Extension>, c: Constraint) -> Result<FrobeniusDatum, String> {
    let d = e.frobenius_decision(c).map_err(|err| err.to_string())?;
    d.datum
        .ok_or_else(|| format!("no Frobenius morphism for {} ({})", e.phi().name(), d.path.describe()))
}

/// Characters of K if it is cyclic, otherwise the trivial module; plus K itself.
fn k_modules(d: &FrobeniusDatum) -> Vec<ModuleRep> {
    let k = Arc::clone(d.k());
    let mut out = ModuleRep::cyclic_characters(Arc::clone(&k)).unwrap_or_else(|_| vec![ModuleRep::trivial(Arc::clone(&k))]);
    out.push(ModuleRep::regular(k));
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut algebras: Vec<HopfAlgebra> = vec![s3().unwrap()];
    algebras.extend((2..=6).map(|l| cyclic(l).unwrap()));
    algebras.extend([2, 3, 5].map(|l| taft(l).unwrap()));
    algebras.push(uqsl2(3).unwrap());
    let mut count = 0;
    for h in &algebras {
        let dual = dual_hopf(h).map_err(|e| format!("dual of {}: {e}", h.name()))?;
        for a in [h, &dual] {
            let r = check_hopf_axioms(a);
            ensure!(r.all_pass(), "{} fails:\n{r}", a.name());
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("{count} algebras in {:.1}s", elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    for l in [2, 3] {
        let e = ext(cyclic_into_taft(l, 1).unwrap());
        let d = e.frobenius_decision(Constraint::None).map_err(|err| err.to_string())?;
        ensure!(d.datum.is_none(), "T_{l}: unexpected Frobenius morphism");
        ensure!(
            d.path == DecisionPath::SymbolicDeterminant { identically_zero: true, witness: None },
            "T_{l}: decided by {}",
            d.path.describe()
        );
    }
    Ok("no Frobenius morphism for l = 2, 3 (determinant vanishes identically)".into())
}

/// tr(f^i e^j k^a) = δ_{i,2}δ_{j,2} k^{2+a}, written in the PBW basis f^i k^a e^j.
fn uqsl2_trace_oracle(h: &HopfAlgebra, k: &HopfAlgebra) -> LinMap {
    let (f, kk, e) = (h.basis(9), h.basis(3), h.basis(1));
    let pow = |x: &SparseVec, n: usize| (0..n).fold(h.one(), |acc, _| h.mul(&acc, x));
    let mut cols = Vec::new();
    let mut values = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for a in 0..3 {
                cols.push(h.mul(&h.mul(&pow(&f, i), &pow(&e, j)), &pow(&kk, a)));
                values.push(if i == 2 && j == 2 { k.basis((2 + a) % 3) } else { SparseVec::zero(3) });
            }
        }
    }
    let change = LinMap::from_columns(27, cols).inverse().expect("f^i e^j k^a is a basis");
    LinMap::from_columns(3, values).compose(&change).unwrap()
}

fn criterion_3() -> Outcome {
    let e = ext(cyclic_into_uqsl2(3, 1).unwrap());
    let (h, k) = (e.h(), e.k());
    let right = e.trace_space(Constraint::Right);
    ensure!(right.len() == 1, "right trace space has dimension {}", right.len());
    let oracle = uqsl2_trace_oracle(h, k);
    ensure!(
        normalize_trace(&right[0]) == normalize_trace(&oracle),
        "right trace differs from tr(f^i e^j) = δ_(i,2)δ_(j,2)k²"
    );
    ensure!(!e.satisfies(&right[0], Constraint::Left), "trace is also a left comodule map");

    let d = FrobeniusDatum::new(Arc::clone(&e), right[0].clone()).map_err(|err| err.to_string())?;
    let ts = d.default_testset();
    let r = d.check_mutual_inverse(ProjSide::Right, &ts).map_err(|err| err.to_string())?;
    ensure!(r.passed(), "right mutual-inverse fails:\n{}", r.report);
    let l = d.check_mutual_inverse(ProjSide::Left, &ts[..1]).map_err(|err| err.to_string())?;
    ensure!(!l.passed(), "left mutual-inverse unexpectedly passes");
    let witness = l
        .report
        .failures()
        .next()
        .and_then(|c| c.witness.clone())
        .ok_or("left failure has no witness")?;

    let chars = ModuleRep::cyclic_characters(Arc::clone(k)).unwrap();
    let mut triples = 0;
    for x in &chars {
        for y in &chars {
            for z in &chars {
                let r = d.check_frobenius_monoidal(x, y, z).map_err(|err| err.to_string())?;
                ensure!(r.all_pass(), "Frobenius monoidal fails:\n{r}");
                triples += 1;
            }
        }
    }

    let reg = YDModule::with_trivial_coaction(ModuleRep::regular(Arc::clone(k))).unwrap();
    let img = z_induce(&d, &reg).map_err(|err| err.to_string())?;
    let k_inv = h.antipode_of(&h.basis(3));
    let k_inv2 = h.mul(&k_inv, &k_inv);
    let one = img.induced.project(&h.one(), &k.one());
    let x = one.entries()[0].0;
    ensure!(
        img.carrier_r.coaction().column(x) == &k_inv2.kron(&one),
        "δ²(1⊗1) = {}",
        img.coaction_space().format(img.carrier_r.coaction().column(x))
    );
    match img.compare_models() {
        ModelComparison::Distinct { basis, delta2, .. } => {
            ensure!(basis == "1 ⊗ 1" && delta2 == "k ⊗ 1 ⊗ 1", "first difference at {basis}: {delta2}");
        }
        ModelComparison::Equal => return Err("δ¹ = δ²".into()),
    }
    Ok(format!(
        "right trace unique, left witness {witness}; {triples} character triples; δ²(1⊗1) = k⁻²⊗(1⊗1)"
    ))
}

/// tr(g) = g for g ∈ K, 0 otherwise.
fn coset_indicator(e: &Extension) -> LinMap {
    let (h, k) = (e.h(), e.k());
    LinMap::from_fn(k.dim(), h.dim(), |col| {
        (0..k.dim())
            .find(|&j| e.phi().apply(&k.basis(j)) == h.basis(col))
            .map_or(SparseVec::zero(k.dim()), |j| k.basis(j))
    })
}

fn single_basis_index(v: &SparseVec) -> Option<usize> {
    match v.entries() {
        [(i, c)] if *c == CycScalar::one() => Some(*i),
        _ => None,
    }
}

fn criterion_4() -> Outcome {
    for (g, sub) in [("c4", "c2"), ("s3", "c3")] {
        let e = ext(named_subgroup(g, sub).unwrap());
        let (h, k) = (e.h(), e.k());
        let d = decide(&e, Constraint::Bi)?;
        ensure!(d.trace() == &coset_indicator(&e), "{g}/{sub}: trace is not the coset indicator");

        let mut covered = vec![0usize; h.dim()];
        for (hi, di) in d.h_basis().iter().zip(d.delta_basis()) {
            single_basis_index(hi).ok_or_else(|| format!("{g}/{sub}: h_i = {} is not a group element", h.format(hi)))?;
            ensure!(di == &h.antipode_of(hi), "{g}/{sub}: δ_i = {} is not {}⁻¹", h.format(di), h.format(hi));
            for j in 0..k.dim() {
                let p = single_basis_index(&h.mul(hi, &e.phi().apply(&k.basis(j)))).unwrap();
                covered[p] += 1;
            }
        }
        ensure!(covered.iter().all(|&c| c == 1), "{g}/{sub}: h_i do not represent the cosets");
        ensure!(d.check_dual_bases().unwrap().all_pass(), "{g}/{sub}: dual bases");

        let ts = d.default_testset();
        for side in [ProjSide::Right, ProjSide::Left] {
            let r = d.check_mutual_inverse(side, &ts).map_err(|err| err.to_string())?;
            ensure!(r.passed(), "{g}/{sub}: mutual inverse {side:?}:\n{}", r.report);
        }

        let chars = ModuleRep::cyclic_characters(Arc::clone(k)).unwrap();
        let gen = k.basis(1);
        let vs = vec![
            YDModule::graded(chars[1].clone(), &k.one()).unwrap(),
            YDModule::graded(chars[0].clone(), &gen).unwrap(),
            YDModule::graded(chars[1].clone(), &gen).unwrap(),
        ];
        let r = check_braided_frobenius(&d, &vs).map_err(|err| err.to_string())?;
        ensure!(r.all_pass(), "{g}/{sub}: braided checks:\n{r}");
        let reg = YDModule::with_trivial_coaction(ModuleRep::regular(Arc::clone(k))).unwrap();
        for v in vs.iter().chain([&reg]) {
            let img = z_induce(&d, v).map_err(|err| err.to_string())?;
            ensure!(img.compare_models().is_equal(), "{g}/{sub}: {}", img.compare_models().describe());
        }
    }
    Ok("c2 ⊂ c4 and c3 ⊂ s3: coset indicator, both sides, 3 YD modules each".into())
}

/// λ(h₁)h₂ = λ(h)1 (right) or h₁λ(h₂) = λ(h)1 (left) for every basis h.
fn is_integral(h: &HopfAlgebra, lambda: &LinMap, right: bool) -> bool {
    let n = h.dim();
    (0..n).all(|b| {
        let mut acc = SparseVec::zero(n);
        for (t, c) in h.coproduct(&h.basis(b)).iter() {
            let (p, q) = (t / n, t % n);
            let (scalar_of, keep) = if right { (p, q) } else { (q, p) };
            let s = lambda.apply(&h.basis(scalar_of)).get(0);
            acc = acc.add(&h.basis(keep).scale(&(&s * c)));
        }
        acc == h.one().scale(&lambda.apply(&h.basis(b)).get(0))
    })
}

fn criterion_5() -> Outcome {
    let c3 = Arc::new(cyclic(3).unwrap());
    let d = decide(&ext(unit_inclusion(Arc::clone(&c3)).unwrap()), Constraint::Right)?;
    ensure!(is_integral(&c3, d.trace(), true), "kC3: trace is not a right integral");
    let fa = d.frobenius_algebra().map_err(|err| err.to_string())?.check(None);
    ensure!(fa.all_pass(), "kC3: Frobenius algebra:\n{fa}");
    let yd = check_yd_frobenius_algebra(&d).map_err(|err| err.to_string())?;
    ensure!(yd.all_pass(), "kC3: YD Frobenius algebra:\n{yd}");

    let t2 = Arc::new(taft(2).unwrap());
    let d = decide(&ext(unit_inclusion(Arc::clone(&t2)).unwrap()), Constraint::Right)?;
    ensure!(is_integral(&t2, d.trace(), true), "T2: trace is not a right integral");
    ensure!(!is_integral(&t2, d.trace(), false), "T2: trace is also a left integral");
    let fa = d.frobenius_algebra().map_err(|err| err.to_string())?.check(None);
    ensure!(fa.all_pass(), "T2: Frobenius algebra:\n{fa}");
    let yd = check_yd_frobenius_algebra(&d).map_err(|err| err.to_string())?;
    let comm = yd.get("commutative (m∘Ψ = m)").ok_or("no commutativity check")?;
    ensure!(!comm.passed, "T2: induced algebra is YD-commutative");
    Ok(format!(
        "kC3 YD-commutative; T2 not ({})",
        comm.witness.clone().unwrap_or_default()
    ))
}

/// Basis of {x ∈ H : xφ(b) = φ(b)x for all b ∈ K}.
fn centralizer(e: &Extension) -> Vec<SparseVec> {
    let (h, k) = (e.h(), e.k());
    let n = h.dim();
    let map = LinMap::from_fn(n * k.dim(), n, |col| {
        let x = h.basis(col);
        let mut blocks = Vec::new();
        for j in 0..k.dim() {
            let y = e.phi().apply(&k.basis(j));
            blocks.push(h.mul(&x, &y).sub(&h.mul(&y, &x)));
        }
        SparseVec::from_dense(blocks.iter().flat_map(|b| (0..n).map(|i| b.get(i))).collect())
    });
    map.kernel().columns().to_vec()
}

fn random_commuting_units(e: &Extension, rng: &mut StdRng, count: usize) -> Vec<SparseVec> {
    let h = e.h();
    let basis = centralizer(e);
    let mut out = Vec::new();
    while out.len() < count {
        let c = basis.iter().fold(SparseVec::zero(h.dim()), |acc, b| {
            acc.add(&b.scale(&CycScalar::from_int(rng.gen_range(-3..=3))))
        });
        if h.is_unit(&c) {
            out.push(c);
        }
    }
    out
}

fn property_suite(name: &str, d: &FrobeniusDatum, rng: &mut StdRng) -> Result<usize, String> {
    let e = d.extension();
    let h = d.h();
    let mods = k_modules(d);
    let w = ModuleRep::regular(Arc::clone(h));
    let mut checks = 0;
    let mut run = |what: &str, r: hopfrob::verdict::AxiomReport| -> Result<(), String> {
        checks += r.checks.len();
        if r.all_pass() {
            Ok(())
        } else {
            Err(format!("{name}: {what}:\n{r}"))
        }
    };
    for v in &mods {
        run("zigzags", d.check_adjunctions(v, &w).map_err(|err| err.to_string())?)?;
        let fv = d.induce(v).map_err(|err| err.to_string())?;
        ensure!(fv.dim() == e.rank() * v.dim(), "{name}: dim Ind V = {} ≠ {}·{}", fv.dim(), e.rank(), v.dim());
    }
    let small: Vec<&ModuleRep> = mods.iter().filter(|m| m.dim() == 1).collect();
    for x in &small {
        for y in &small {
            for z in &small {
                run("lax/oplax", d.check_lax_oplax(x, y, z).map_err(|err| err.to_string())?)?;
            }
        }
    }
    run("dual bases", d.check_dual_bases().map_err(|err| err.to_string())?)?;
    let ts = d.default_testset();
    for side in [ProjSide::Right, ProjSide::Left] {
        let r = d.check_mutual_inverse(side, &ts).map_err(|err| err.to_string())?;
        ensure!(
            r.criteria_agree(),
            "{name}: {side:?} criteria disagree (maps {}, element {}, comodule {})",
            r.maps,
            r.element,
            r.comodule
        );
        checks += 1;
    }
    for c in random_commuting_units(e, rng, 3) {
        let t = d.twisted_trace(&c);
        ensure!(
            e.satisfies(&t, Constraint::None) && e.is_frobenius(&t),
            "{name}: twisting by {} does not give a Frobenius morphism",
            h.format(&c)
        );
        checks += 1;
    }
    let right = e.trace_space(Constraint::Right);
    ensure!(right.len() == 1, "{name}: right trace space has dimension {}", right.len());
    if e.satisfies(d.trace(), Constraint::Right) {
        ensure!(normalize_trace(d.trace()) == right[0], "{name}: right trace not unique up to scalar");
    }
    Ok(checks + 1)
}

fn criterion_6() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let data: Vec<(&str, Arc<Extension>, Constraint)> = vec![
        ("u(sl2) ⊃ kC3", ext(cyclic_into_uqsl2(3, 1).unwrap()), Constraint::Right),
        ("kC4 ⊃ kC2", ext(named_subgroup("c4", "c2").unwrap()), Constraint::Bi),
        ("kS3 ⊃ kC3", ext(named_subgroup("s3", "c3").unwrap()), Constraint::Bi),
        ("kC3 ⊃ k", ext(unit_inclusion(Arc::new(cyclic(3).unwrap())).unwrap()), Constraint::Right),
        ("T2 ⊃ k", ext(unit_inclusion(Arc::new(taft(2).unwrap())).unwrap()), Constraint::Right),
    ];
    let mut total = 0;
    for (name, e, c) in &data {
        let d = decide(e, *c)?;
        total += property_suite(name, &d, &mut rng)?;
    }
    Ok(format!("{} data, {total} checks", data.len()))
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("Hopf axioms of all families and their duals", criterion_1),
        ("Taft extensions have no Frobenius morphism", criterion_2),
        ("u(sl2) right side passes, left side fails", criterion_3),
        ("group extensions", criterion_4),
        ("unit inclusions and integrals", criterion_5),
        ("property suites on every datum", criterion_6),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {title} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {title} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
