//! The `hopfrob` command line: selectors for algebras and morphisms, the
//! verification pipelines, and report rendering.

pub mod input;
pub mod report;

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::center::{check_braided_frobenius, check_yd_frobenius_algebra, z_induce, CenterError};
use crate::families::{
    cyclic, cyclic_into_taft, cyclic_into_uqsl2, ground_field, group_algebra, named_group, named_subgroup, taft_with,
    unit_inclusion, uqsl2_with,
};
use crate::frobinduction::{Constraint, Extension, FrobError, FrobeniusDatum, ProjSide};
use crate::hopf::{check_hopf_axioms, check_morphism, dual_hopf, HopfAlgebra, HopfMorphism};
use crate::rep::{check_yd, ModuleRep, YDModule};
use crate::verdict::{AxiomReport, Check};

pub use input::InputFile;
pub use report::{ReportBuilder, Step, Verdict, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "hopfrob", version, about = "Exact checks for Frobenius monoidal induction along Hopf algebra morphisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Hopf algebra axioms of one algebra.
    CheckHopf(CommonArgs),
    /// Decide whether a Frobenius morphism H → K exists.
    Frobenius(CommonArgs),
    /// Verify that induction is a Frobenius monoidal functor.
    FrobMonoidal(CommonArgs),
    /// Verify the induced functor on Yetter–Drinfeld modules.
    Center(CommonArgs),
    /// Run every stage in order.
    Report(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cyclic,
    Taft,
    Uqsl2,
    Group,
    Ground,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyPair {
    TaftCyclic,
    Uqsl2Cyclic,
    Group,
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstraintArg {
    None,
    Right,
    Left,
    Bi,
}

impl From<ConstraintArg> for Constraint {
    fn from(c: ConstraintArg) -> Self {
        match c {
            ConstraintArg::None => Constraint::None,
            ConstraintArg::Right => Constraint::Right,
            ConstraintArg::Left => Constraint::Left,
            ConstraintArg::Bi => Constraint::Bi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Testset {
    Regular,
    Characters,
    File,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Built-in algebra family (check-hopf, and the target of --family-pair unit).
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Built-in morphism φ: K → H.
    #[arg(long, value_enum)]
    pub family_pair: Option<FamilyPair>,
    /// Order ℓ of the cyclic group / root of unity.
    #[arg(long, default_value_t = 3)]
    pub l: u32,
    /// Exponent s of the root of unity ζ_ℓ^s.
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    /// Group name (cN or s3) for --family group and --family-pair group.
    #[arg(long)]
    pub g: Option<String>,
    /// Subgroup name for --family-pair group.
    #[arg(long)]
    pub k: Option<String>,
    /// Text file with a group multiplication table.
    #[arg(long)]
    pub cayley: Option<PathBuf>,
    /// JSON input file with algebras, morphisms and modules.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Name of the algebra (check-hopf) or morphism (other commands) in --file.
    #[arg(long)]
    pub name: Option<String>,
    /// Replace the selected algebra by its dual.
    #[arg(long)]
    pub dual: bool,
    /// Comodule condition imposed on the trace.
    #[arg(long, value_enum)]
    pub constraint: Option<ConstraintArg>,
    /// Modules used by the monoidal and center checks.
    #[arg(long, value_enum)]
    pub testset: Option<Testset>,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
    /// Omit timings so output is reproducible.
    #[arg(long)]
    pub stable: bool,
}

impl CommonArgs {
    /// Defaults suitable for tests and library use.
    pub fn new() -> Self {
        CommonArgs {
            family: None,
            family_pair: None,
            l: 3,
            s: 1,
            g: None,
            k: None,
            cayley: None,
            file: None,
            name: None,
            dual: false,
            constraint: None,
            testset: None,
            json: false,
            stable: true,
        }
    }

    fn input(&self) -> Result<Option<InputFile>> {
        self.file.as_deref().map(InputFile::load).transpose()
    }

    fn constraint_or(&self, default: Constraint) -> Constraint {
        self.constraint.map(Constraint::from).unwrap_or(default)
    }
}

impl Default for CommonArgs {
    fn default() -> Self {
        Self::new()
    }
}

/// Reads a multiplication table: an optional first line of labels, then one
/// row of 0-based indices per element.
pub fn parse_cayley(text: &str) -> Result<(Vec<String>, Vec<Vec<usize>>)> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let Some(first) = lines.first() else {
        bail!("empty multiplication table");
    };
    let first_numeric = first.split_whitespace().all(|t| t.parse::<usize>().is_ok());
    let (labels, rows) = if first_numeric {
        (None, &lines[..])
    } else {
        (Some(first.split_whitespace().map(String::from).collect::<Vec<_>>()), &lines[1..])
    };
    let table = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.split_whitespace()
                .map(|t| t.parse::<usize>().with_context(|| format!("row {}: bad entry {t:?}", i + 1)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let n = table.len();
    let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
    if labels.len() != n {
        bail!("{} labels for {n} rows", labels.len());
    }
    Ok((labels, table))
}

fn family_algebra(family: Family, args: &CommonArgs) -> Result<HopfAlgebra> {
    Ok(match family {
        Family::Cyclic => cyclic(args.l)?,
        Family::Taft => taft_with(args.l, args.s)?,
        Family::Uqsl2 => uqsl2_with(args.l, args.s)?,
        Family::Ground => ground_field(),
        Family::Group => match (&args.g, &args.cayley) {
            (Some(g), _) => named_group(g)?,
            (None, Some(path)) => cayley_algebra(path)?,
            (None, None) => bail!("--family group needs --g or --cayley"),
        },
    })
}

fn cayley_algebra(path: &Path) -> Result<HopfAlgebra> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let (labels, table) = parse_cayley(&text).with_context(|| format!("in {}", path.display()))?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "G".into());
    Ok(group_algebra(&format!("k{name}"), labels, &table)?)
}

/// The algebra for check-hopf, validated only for shapes when read from a file.
pub fn select_algebra(args: &CommonArgs) -> Result<HopfAlgebra> {
    let h = if let Some(file) = args.input()? {
        let name = match (&args.name, file.algebras.len()) {
            (Some(n), _) => n.clone(),
            (None, 1) => file.algebras.keys().next().cloned().unwrap_or_default(),
            (None, _) => bail!("--file with several algebras needs --name"),
        };
        file.algebra_unchecked(&name)?
    } else if let Some(f) = args.family {
        family_algebra(f, args)?
    } else if let Some(path) = &args.cayley {
        cayley_algebra(path)?
    } else {
        bail!("select an algebra with --family, --cayley or --file");
    };
    if args.dual {
        Ok(dual_hopf(&h)?)
    } else {
        Ok(h)
    }
}

/// The morphism φ: K → H for the pipeline commands.
pub fn select_pair(args: &CommonArgs) -> Result<HopfMorphism> {
    let phi = match args.family_pair {
        Some(FamilyPair::TaftCyclic) => cyclic_into_taft(args.l, args.s)?,
        Some(FamilyPair::Uqsl2Cyclic) => cyclic_into_uqsl2(args.l, args.s)?,
        Some(FamilyPair::Group) => {
            let (Some(g), Some(k)) = (&args.g, &args.k) else {
                bail!("--family-pair group needs --g and --k");
            };
            named_subgroup(g, k)?
        }
        Some(FamilyPair::Unit) => {
            let h = match (args.family, &args.cayley, args.input()?) {
                (Some(f), _, _) => family_algebra(f, args)?,
                (None, Some(p), _) => cayley_algebra(p)?,
                (None, None, Some(file)) => {
                    let name = args.name.as_deref().context("--family-pair unit with --file needs --name")?;
                    file.algebra(name)?
                }
                _ => bail!("--family-pair unit needs --family, --cayley or --file"),
            };
            let h = if args.dual { dual_hopf(&h)? } else { h };
            unit_inclusion(Arc::new(h))?
        }
        None => {
            let file = args.input()?.context("select a morphism with --family-pair or --file")?;
            let name = match (&args.name, file.morphisms.len()) {
                (Some(n), _) => n.clone(),
                (None, 1) => file.morphisms.keys().next().cloned().unwrap_or_default(),
                (None, _) => bail!("--file with several morphisms needs --name"),
            };
            file.morphism(&name)?
        }
    };
    Ok(phi)
}

/// Named K-modules for the monoidal checks.
fn k_modules(datum: &FrobeniusDatum, args: &CommonArgs) -> Result<Vec<(String, ModuleRep)>> {
    let k = Arc::clone(datum.k());
    let trivial = ("𝟙".to_string(), ModuleRep::trivial(Arc::clone(&k)));
    Ok(match args.testset.unwrap_or(Testset::Characters) {
        Testset::Regular => vec![trivial, ("K".into(), ModuleRep::regular(k))],
        Testset::Characters => match ModuleRep::cyclic_characters(Arc::clone(&k)) {
            Ok(chars) => chars.into_iter().enumerate().map(|(i, c)| (format!("χ{i}"), c)).collect(),
            Err(_) => vec![trivial],
        },
        Testset::File => {
            let file = args.input()?.context("--testset file needs --file")?;
            let mods = file.modules_over(&k)?;
            if mods.is_empty() {
                bail!("--file has no modules over {}", k.name());
            }
            mods
        }
    })
}

/// (V, W) pairs: each K-module against the regular H-module.
fn module_pairs(datum: &FrobeniusDatum, mods: &[(String, ModuleRep)]) -> Vec<(ModuleRep, ModuleRep)> {
    let w = ModuleRep::regular(Arc::clone(datum.h()));
    mods.iter().map(|(_, v)| (v.clone(), w.clone())).collect()
}

/// Triples whose tensor product is at most as large as K.
fn module_triples(datum: &FrobeniusDatum, mods: &[(String, ModuleRep)]) -> Vec<[usize; 3]> {
    let cap = datum.k().dim().max(1);
    let n = mods.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mods[a].1.dim() * mods[b].1.dim() * mods[c].1.dim() <= cap {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// YD modules over K for the center checks.
fn yd_modules(datum: &FrobeniusDatum, args: &CommonArgs) -> Result<Vec<(String, YDModule)>> {
    let k = Arc::clone(datum.k());
    let regular = || -> Result<(String, YDModule)> {
        Ok(("K".into(), YDModule::with_trivial_coaction(ModuleRep::regular(Arc::clone(&k)))?))
    };
    Ok(match args.testset.unwrap_or(Testset::Characters) {
        Testset::Regular => vec![regular()?],
        Testset::Characters => {
            let mut out = Vec::new();
            if k.is_cocommutative() {
                out.push(regular()?);
            }
            if let Ok(chars) = ModuleRep::cyclic_characters(Arc::clone(&k)) {
                let g = if k.dim() > 1 { k.basis(1) } else { k.one() };
                for (i, c) in chars.into_iter().enumerate() {
                    out.push((format!("χ{i}"), YDModule::graded(c, &g)?));
                }
            }
            out
        }
        Testset::File => k_modules(datum, args)?
            .into_iter()
            .map(|(n, m)| Ok((n, YDModule::with_trivial_coaction(m)?)))
            .collect::<Result<_>>()?,
    })
}

fn tag(names: &[&str]) -> String {
    format!(" [{}]", names.join(", "))
}

/// Stable identifiers for the named checks of the library.
fn check_id(prefix: &str, name: &str) -> String {
    let mut stripped = String::new();
    let mut depth = 0usize;
    for ch in name.chars() {
        match ch {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ if depth == 0 => stripped.push(ch),
            _ => {}
        }
    }
    let base = stripped.trim();
    if base.starts_with("Frobenius monoidal: (lax⊗id)") || base.starts_with("frobmon1") {
        return "frobmon1".into();
    }
    if base.starts_with("Frobenius monoidal: (id⊗lax)") || base.starts_with("frobmon2") {
        return "frobmon2".into();
    }
    if base.contains("zigzag") {
        let side = if base.starts_with("F⊣G") { "fg" } else { "gf" };
        return format!("zigzag-{side}");
    }
    format!("{prefix}-{}", report::slug(base))
}

fn push_report(b: &mut ReportBuilder, prefix: &str, suffix: &str, r: AxiomReport, start: Instant) {
    for mut c in r.checks {
        let id = check_id(prefix, &c.name);
        c.name.push_str(suffix);
        b.push(id, c, start);
    }
}

/// Summarizes a report as one step named `id`.
fn push_summary(b: &mut ReportBuilder, id: &str, detail: &str, r: &AxiomReport, start: Instant) {
    let witness = r
        .failures()
        .next()
        .map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()));
    b.push(id, Check::from_witness(detail, witness), start);
}

fn hopf_stage(b: &mut ReportBuilder, prefix: &str, h: &HopfAlgebra) -> bool {
    let t = Instant::now();
    let r = check_hopf_axioms(h);
    let ok = r.all_pass();
    push_report(b, prefix, &format!(" ({})", h.name()), r, t);
    ok
}

pub fn cmd_check_hopf(args: &CommonArgs) -> Result<VerificationReport> {
    let h = select_algebra(args)?;
    let mut b = ReportBuilder::new(format!("Hopf axioms of {} (dim {})", h.name(), h.dim()), args.stable);
    hopf_stage(&mut b, "hopf", &h);
    Ok(b.finish())
}

fn subject(phi: &HopfMorphism, c: Constraint) -> String {
    format!(
        "φ: {} → {} ({}), constraint {}",
        phi.source().name(),
        phi.target().name(),
        phi.name(),
        c.as_str()
    )
}

/// Morphism checks, freeness and the Frobenius decision. Returns the datum
/// when one exists.
fn frobenius_stage(b: &mut ReportBuilder, phi: HopfMorphism, c: Constraint) -> Result<Option<FrobeniusDatum>> {
    let t = Instant::now();
    let mr = check_morphism(&phi);
    let ok = mr.all_pass();
    push_report(b, "morphism", "", mr, t);
    if !ok {
        return Ok(None);
    }
    let t = Instant::now();
    let ext = match Extension::new(phi) {
        Ok(e) => Arc::new(e),
        Err(e @ FrobError::NotFree { .. }) => {
            b.fail("free", "H is a free K-module on both sides", e.to_string(), t);
            return Ok(None);
        }
        Err(e) => return Err(e.into()),
    };
    b.push(
        "free",
        Check::pass(format!("H is a free K-module on both sides (rank {})", ext.rank())),
        t,
    );
    let t = Instant::now();
    let decision = ext.frobenius_decision(c)?;
    b.info("trace-space", "dimension of the constrained trace space", decision.space_dim.to_string());
    b.info("decision-path", "search path", decision.path.describe());
    let found = "a Frobenius morphism exists";
    let Some(datum) = decision.datum else {
        b.fail("frobenius-morphism", found, format!("none: {}", decision.path.describe()), t);
        return Ok(None);
    };
    b.push("frobenius-morphism", Check::pass(found), t);

    let (h, k) = (datum.h(), datum.k());
    let traces: Vec<String> = (0..h.dim())
        .filter_map(|x| {
            let v = datum.tr(&h.basis(x));
            (!v.is_zero()).then(|| format!("tr({}) = {}", h.label(x), k.format(&v)))
        })
        .collect();
    b.info("trace", "nonzero values of tr on the basis of H", traces.join("; "));
    let data = datum.to_data();
    b.info("h-basis", "left K-basis h_i", data.h_basis.join(", "));
    b.info("delta-basis", "dual basis δ_i", data.delta_basis.join(", "));

    let t = Instant::now();
    let dual = datum.check_dual_bases()?;
    push_report(b, "dual-bases", "", dual, t);
    for side in [Constraint::Right, Constraint::Left] {
        let yes = ext.satisfies(datum.trace(), side);
        b.info(
            format!("comodule-{}", side.as_str()),
            format!("tr is a {} H-comodule map", side.as_str()),
            if yes { "yes" } else { "no" },
        );
    }
    Ok(Some(datum))
}

pub fn cmd_frobenius(args: &CommonArgs) -> Result<VerificationReport> {
    let phi = select_pair(args)?;
    let c = args.constraint_or(Constraint::None);
    let mut b = ReportBuilder::new(subject(&phi, c), args.stable);
    frobenius_stage(&mut b, phi, c)?;
    Ok(b.finish())
}

fn sides_for(c: Constraint) -> Vec<ProjSide> {
    match c {
        Constraint::Left => vec![ProjSide::Left],
        Constraint::Bi => vec![ProjSide::Right, ProjSide::Left],
        Constraint::None | Constraint::Right => vec![ProjSide::Right],
    }
}

fn side_str(s: ProjSide) -> &'static str {
    match s {
        ProjSide::Left => "left",
        ProjSide::Right => "right",
    }
}

fn mutual_inverse_stage(
    b: &mut ReportBuilder,
    datum: &FrobeniusDatum,
    side: ProjSide,
    pairs: &[(ModuleRep, ModuleRep)],
) -> Result<bool> {
    let t = Instant::now();
    let mi = datum.check_mutual_inverse(side, pairs)?;
    let s = side_str(side);
    let (maps, rest): (Vec<Check>, Vec<Check>) = mi.report.checks.iter().cloned().partition(|c| c.name.contains("proj"));
    let maps = AxiomReport { checks: maps };
    push_summary(
        b,
        &format!("mutual-inverse-{s}"),
        &format!("{s} projection formula morphisms are mutual inverses on the test set"),
        &maps,
        t,
    );
    for c in rest {
        let id = if c.name.contains("comodule") {
            format!("comodule-map-{s}")
        } else {
            format!("element-condition-{s}")
        };
        b.push(id, c, t);
    }
    b.push(
        format!("criteria-agree-{s}"),
        Check::from_witness(
            format!("map, element and comodule criteria agree ({s})"),
            (!mi.criteria_agree()).then(|| format!("maps {}, element {}, comodule {}", mi.maps, mi.element, mi.comodule)),
        ),
        t,
    );
    Ok(mi.passed())
}

fn monoidal_stage(b: &mut ReportBuilder, datum: &FrobeniusDatum, c: Constraint, args: &CommonArgs) -> Result<()> {
    let mods = k_modules(datum, args)?;
    let pairs = module_pairs(datum, &mods);
    for side in sides_for(c) {
        mutual_inverse_stage(b, datum, side, &pairs)?;
    }

    let w = ModuleRep::regular(Arc::clone(datum.h()));
    for (name, v) in &mods {
        let t = Instant::now();
        let r = datum.check_adjunctions(v, &w)?;
        push_report(b, "adjunction", &tag(&[name, "H"]), r, t);
    }
    for [x, y, z] in module_triples(datum, &mods) {
        let (mx, my, mz) = (&mods[x], &mods[y], &mods[z]);
        let names = tag(&[&mx.0, &my.0, &mz.0]);
        let t = Instant::now();
        let r = datum.check_lax_oplax(&mx.1, &my.1, &mz.1)?;
        push_report(b, "monoidal", &names, r, t);
        let t = Instant::now();
        let r = datum.check_frobenius_monoidal(&mx.1, &my.1, &mz.1)?;
        push_report(b, "frobmon", &names, r, t);
    }
    let t = Instant::now();
    let alg = datum.frobenius_algebra()?;
    push_report(b, "frobalg", " [F(𝟙)]", alg.check(None), t);
    Ok(())
}

pub fn cmd_frob_monoidal(args: &CommonArgs) -> Result<VerificationReport> {
    let phi = select_pair(args)?;
    let c = args.constraint_or(Constraint::Right);
    let mut b = ReportBuilder::new(subject(&phi, c), args.stable);
    if let Some(datum) = frobenius_stage(&mut b, phi, c)? {
        monoidal_stage(&mut b, &datum, c, args)?;
    }
    Ok(b.finish())
}

fn center_stage(b: &mut ReportBuilder, datum: &FrobeniusDatum, args: &CommonArgs) -> Result<()> {
    let pairs = datum.default_testset();
    for side in [ProjSide::Right, ProjSide::Left] {
        mutual_inverse_stage(b, datum, side, &pairs)?;
    }
    let yds = yd_modules(datum, args)?;
    for (name, v) in &yds {
        let t = Instant::now();
        let img = z_induce(datum, v)?;
        let suffix = tag(&[name]);
        push_summary(b, "yd-delta1", &format!("δ¹ makes Ind(V) a YD module{suffix}"), &check_yd(&img.carrier_l), t);
        push_summary(b, "yd-delta2", &format!("δ² makes Ind(V) a YD module{suffix}"), &check_yd(&img.carrier_r), t);
        let cmp = img.compare_models();
        b.push(
            "compare-models",
            Check::from_witness(format!("δ¹ = δ²{suffix}"), (!cmp.is_equal()).then(|| cmp.describe())),
            t,
        );
    }
    let t = Instant::now();
    let vs: Vec<YDModule> = yds.iter().map(|(_, v)| v.clone()).collect();
    match check_braided_frobenius(datum, &vs) {
        Ok(r) => {
            let names: Vec<&str> = yds.iter().map(|(n, _)| n.as_str()).collect();
            for mut c in r.checks {
                for (i, n) in names.iter().enumerate() {
                    c.name = c.name.replace(&format!("V{i}]"), &format!("{n}]")).replace(&format!("[V{i},"), &format!("[{n},"));
                }
                let id = check_id("braided", &c.name);
                b.push(id, c, t);
            }
        }
        Err(CenterError::Precondition { side, witness }) => {
            b.fail(
                "braided-precondition",
                "both projection formulas are mutual inverses",
                format!("{side} side fails: {witness}"),
                t,
            );
        }
        Err(e) => return Err(e.into()),
    }
    let t = Instant::now();
    let r = check_yd_frobenius_algebra(datum)?;
    push_report(b, "yd-frobalg", " [F(𝟙)]", r, t);
    Ok(())
}

pub fn cmd_center(args: &CommonArgs) -> Result<VerificationReport> {
    let phi = select_pair(args)?;
    let c = args.constraint_or(Constraint::Right);
    let mut b = ReportBuilder::new(subject(&phi, c), args.stable);
    if let Some(datum) = frobenius_stage(&mut b, phi, c)? {
        center_stage(&mut b, &datum, args)?;
    }
    Ok(b.finish())
}

pub fn cmd_report(args: &CommonArgs) -> Result<VerificationReport> {
    let phi = select_pair(args)?;
    let c = args.constraint_or(Constraint::Right);
    let mut b = ReportBuilder::new(subject(&phi, c), args.stable);
    let ok_k = hopf_stage(&mut b, "hopf-source", phi.source());
    let ok_h = hopf_stage(&mut b, "hopf-target", phi.target());
    if !(ok_k && ok_h) {
        return Ok(b.finish());
    }
    let Some(datum) = frobenius_stage(&mut b, phi, c)? else {
        return Ok(b.finish());
    };
    monoidal_stage(&mut b, &datum, c, args)?;
    center_stage(&mut b, &datum, args)?;
    Ok(b.finish())
}

pub fn execute(command: &Command) -> Result<(VerificationReport, &CommonArgs)> {
    Ok(match command {
        Command::CheckHopf(a) => (cmd_check_hopf(a)?, a),
        Command::Frobenius(a) => (cmd_frobenius(a)?, a),
        Command::FrobMonoidal(a) => (cmd_frob_monoidal(a)?, a),
        Command::Center(a) => (cmd_center(a)?, a),
        Command::Report(a) => (cmd_report(a)?, a),
    })
}

/// Prints the report and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    let (report, args) = execute(&cli.command)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{report}");
    }
    Ok(if report.passed() { 0 } else { 1 })
}
