//! Command-line front end. Every command prints one JSON document on
//! standard output; failures print `{"error", "message"}` on standard error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::coefficients::{
    bullet, extend_from_subcomplex, extend_morphism, extend_system_and_map, from_twist, is_equivalent, pullback, twist,
    twist_classes, CoefficientSystem, Morphism, PairMorphism,
};
use crate::complex::{cylinder, polarize, product, validate_data, ComplexData, DeltaComplex, Polarization};
use crate::corpus::{Corpus, Kind};
use crate::error::{Error, Result};
use crate::homotopy::{correction_class, ends_agree_in_homology, lift_zeta, Homotopy};
use crate::io::{read_json, Loader, MorphismData, SystemData, TwistData};
use crate::segal::{bar, conjugation_sign, default_depth, OrientationChar};
use crate::sign::Sign;
use crate::twisted::{cap, degree, duality_map, fundamental_twist, induced_map, TwistedChainComplex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "twistkit", version, about = "Local integer coefficient systems on finite Delta-complexes")]
struct Cli {
    /// Read corpus entries from this directory instead of the bundled copy.
    #[arg(long, global = true, env = "TWISTKIT_CORPUS")]
    corpus_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    /// One `path: value` line per leaf, groups written as `Z + Z/2`.
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a complex, and optionally a system, map or group, for well-formedness.
    Validate(ValidateArgs),
    /// Twisted homology or cohomology in one degree.
    Homology(HomologyArgs),
    /// The gauged twist class of a system, or all classes with `--list`.
    Twist(TwistArgs),
    /// Decide whether two systems are isomorphic and give a morphism.
    Equiv(EquivArgs),
    /// The system with a given twist and base values.
    FromTwist(FromTwistArgs),
    /// Extend a system from a subcomplex.
    ExtendSystem(ExtendSystemArgs),
    /// Extend a morphism from a subcomplex.
    ExtendMorphism(ExtendMorphismArgs),
    /// Pull a system back along a simplicial map.
    Pullback(PullbackArgs),
    /// The shuffle product of two complexes, with the product system if given.
    Product(ProductArgs),
    /// The cylinder X × [0,1] with its vertex and vertical-edge tables.
    Cylinder(ComplexArg),
    /// Cap product of a cochain with a chain.
    Cap(CapArgs),
    /// The fundamental twist and cycle of a closed pseudomanifold.
    Fundamental(FundamentalArgs),
    /// Check that capping with the fundamental class is an isomorphism.
    Duality(DualityArgs),
    /// Degree of a map between closed pseudomanifolds of equal dimension.
    Degree(DegreeArgs),
    /// Correction class of a homotopy and the factorization check.
    HomotopyCf(HomotopyArgs),
    /// Homology of the truncated twisted bar complex.
    Bar(BarArgs),
    /// The sign by which conjugation acts on twisted group homology.
    ConjSign(ConjSignArgs),
    /// Randomized square-zero check over the corpus.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args, Debug)]
struct ComplexArg {
    /// Corpus name or JSON file.
    #[arg(long)]
    complex: String,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[arg(long)]
    complex: Option<String>,
    /// `trivial`, `w1` or a system file; needs `--complex`.
    #[arg(long)]
    system: Option<String>,
    #[arg(long)]
    map: Option<String>,
    #[arg(long)]
    group: Option<String>,
}

#[derive(Args, Debug)]
struct HomologyArgs {
    #[arg(long)]
    complex: String,
    #[arg(long, default_value = "trivial")]
    system: String,
    #[arg(long)]
    degree: usize,
    #[arg(long)]
    cohomology: bool,
}

#[derive(Args, Debug)]
struct TwistArgs {
    #[arg(long)]
    complex: String,
    #[arg(long, default_value = "trivial")]
    system: String,
    /// Comma-separated polarization base vertices, one per component.
    #[arg(long, value_delimiter = ',')]
    bases: Option<Vec<usize>>,
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct EquivArgs {
    #[arg(long)]
    complex: String,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Args, Debug)]
struct FromTwistArgs {
    #[arg(long)]
    complex: String,
    /// Twist file; defaults to the zero class.
    #[arg(long)]
    twist: Option<String>,
    /// Values at the polarization bases, as a sign list or file.
    #[arg(long, allow_hyphen_values = true)]
    base_values: Option<String>,
    #[arg(long, value_delimiter = ',')]
    bases: Option<Vec<usize>>,
}

#[derive(Args, Debug)]
struct ExtendSystemArgs {
    #[arg(long)]
    complex: String,
    /// Subcomplex file `{"simplices": [[dim, id], ...]}`.
    #[arg(long)]
    sub: String,
    /// System on the whole complex whose restriction is the given one on A.
    #[arg(long)]
    sub_system: String,
    /// Extend with this twist.
    #[arg(long, conflicts_with_all = ["along", "zeta"])]
    twist: Option<String>,
    /// Extend along a system on X together with a morphism on A.
    #[arg(long, requires = "zeta")]
    along: Option<String>,
    /// Vertex signs of the morphism, indexed by vertices of X.
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
}

#[derive(Args, Debug)]
struct ExtendMorphismArgs {
    #[arg(long)]
    complex: String,
    #[arg(long)]
    sub: String,
    #[arg(long)]
    source: String,
    #[arg(long)]
    target: String,
    /// Vertex signs on A, indexed by vertices of X (entries off A are ignored).
    #[arg(long, allow_hyphen_values = true)]
    zeta: String,
    /// Anchor path file `[{"start": v, "steps": [...]}, ...]`.
    #[arg(long)]
    anchors: Option<String>,
}

#[derive(Args, Debug)]
struct PullbackArgs {
    #[arg(long)]
    map: String,
    /// System on the target of the map.
    #[arg(long, default_value = "trivial")]
    system: String,
}

#[derive(Args, Debug)]
struct ProductArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    #[arg(long, requires = "right_system")]
    left_system: Option<String>,
    #[arg(long, requires = "left_system")]
    right_system: Option<String>,
}

#[derive(Args, Debug)]
struct CapArgs {
    #[arg(long)]
    complex: String,
    /// System of the cochain.
    #[arg(long, default_value = "trivial")]
    cochain_system: String,
    /// System of the chain.
    #[arg(long, default_value = "trivial")]
    chain_system: String,
    /// Integer list or JSON file of cochain values.
    #[arg(long, allow_hyphen_values = true)]
    cochain: String,
    #[arg(long)]
    r: usize,
    #[arg(long, allow_hyphen_values = true)]
    chain: String,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
struct FundamentalArgs {
    #[arg(long)]
    complex: String,
    /// Defaults to the top dimension.
    #[arg(long)]
    dimension: Option<usize>,
}

#[derive(Args, Debug)]
struct DualityArgs {
    #[arg(long)]
    complex: String,
    #[arg(long, conflicts_with = "system")]
    all_twists: bool,
    #[arg(long)]
    system: Option<String>,
    /// Only this r; defaults to every 0 ≤ r ≤ m.
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Args, Debug)]
struct DegreeArgs {
    #[arg(long)]
    map: String,
    /// Expected source complex.
    #[arg(long)]
    source: Option<String>,
    /// Expected target complex.
    #[arg(long)]
    target: Option<String>,
    #[arg(long, conflicts_with = "negate", allow_hyphen_values = true)]
    zeta: Option<String>,
    /// Use −ζ in place of the default morphism.
    #[arg(long)]
    negate: bool,
}

#[derive(Args, Debug)]
struct HomotopyArgs {
    /// Map file whose source is `{"cylinder": X}`.
    #[arg(long)]
    map: String,
    #[arg(long, default_value = "trivial")]
    source_system: String,
    #[arg(long, default_value = "trivial")]
    target_system: String,
    #[arg(long, allow_hyphen_values = true)]
    zeta0: Option<String>,
    /// Defaults to `ζ0`.
    #[arg(long, allow_hyphen_values = true)]
    zeta1: Option<String>,
}

#[derive(Args, Debug)]
struct BarArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value = "trivial")]
    char: String,
    #[arg(long)]
    depth: usize,
}

#[derive(Args, Debug)]
struct ConjSignArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value = "trivial")]
    char: String,
    /// Element name.
    #[arg(long)]
    element: String,
    #[arg(long)]
    degree: usize,
    #[arg(long)]
    depth: Option<usize>,
}

#[derive(Args, Debug)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let body = json!({"error": "Usage", "message": e.render().to_string().trim_end()});
                    let _ = writeln!(err, "{}", body);
                    EXIT_VALIDATION
                }
            };
        }
    };
    let corpus = match &cli.corpus_dir {
        Some(d) => Corpus::from_dir(d),
        None => Corpus::embedded(),
    };
    let loader = Loader::new(corpus);
    match dispatch(&loader, cli.command) {
        Ok(Outcome { value, code }) => {
            match cli.format {
                Format::Json => {
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializable"));
                }
                Format::Table => {
                    let mut lines = Vec::new();
                    table_lines(&value, "", &mut lines);
                    for line in lines {
                        let _ = writeln!(out, "{line}");
                    }
                }
            }
            code
        }
        Err(e) => {
            let body = json!({"error": e.kind(), "message": e.to_string()});
            let _ = writeln!(err, "{}", body);
            if e.is_validation() {
                EXIT_VALIDATION
            } else {
                EXIT_MATH
            }
        }
    }
}

struct Outcome {
    value: Value,
    code: i32,
}

fn ok(value: impl Serialize) -> Result<Outcome> {
    Ok(Outcome { value: serde_json::to_value(value)?, code: EXIT_OK })
}

fn dispatch(loader: &Loader, command: Command) -> Result<Outcome> {
    match command {
        Command::Validate(a) => validate(loader, a),
        Command::Homology(a) => {
            let x = loader.complex_named(&a.complex)?;
            let system = loader.system(&x, &a.system)?;
            let chain = TwistedChainComplex::new(&system);
            ok(if a.cohomology { chain.cohomology(a.degree)? } else { chain.homology(a.degree)? })
        }
        Command::Twist(a) => twist_cmd(loader, a),
        Command::Equiv(a) => {
            let x = loader.complex_named(&a.complex)?;
            let (l0, l1) = (loader.system(&x, &a.left)?, loader.system(&x, &a.right)?);
            let p = polarize(&x, None)?;
            let m = is_equivalent(&l0, &l1);
            ok(json!({
                "equivalent": m.is_some(),
                "left_twist": TwistData::from_class(&twist(&l0, &p)),
                "right_twist": TwistData::from_class(&twist(&l1, &p)),
                "morphism": m.map(|m| MorphismData { vertex_signs: m.signs().to_vec() }),
            }))
        }
        Command::FromTwist(a) => {
            let x = loader.complex_named(&a.complex)?;
            let p = polarize(&x, a.bases.as_deref())?;
            let omega = match &a.twist {
                Some(t) => loader.twist(&x, t)?,
                None => crate::coefficients::TwistClass::zero(x.clone(), p.clone()),
            };
            let f = match &a.base_values {
                Some(s) => signs(s)?,
                None => vec![Sign::Plus; x.vertex_count()],
            };
            let f = spread_base_values(&p, &f)?;
            ok(system_data(&from_twist(&p, &omega, &f)?))
        }
        Command::ExtendSystem(a) => {
            let x = loader.complex_named(&a.complex)?;
            let sub = loader.subcomplex(&x, &a.sub)?;
            let l_a = loader.system(&x, &a.sub_system)?.restrict(&sub)?;
            match (&a.twist, &a.along) {
                (Some(t), None) => {
                    let omega = loader.twist(&x, t)?;
                    ok(system_data(&extend_from_subcomplex(&sub, &l_a, &omega)?))
                }
                (None, Some(along)) => {
                    let l0 = loader.system(&x, along)?;
                    let z = signs(a.zeta.as_deref().expect("clap requires zeta"))?;
                    check_len(&z, x.vertex_count(), "zeta")?;
                    let zeta = Morphism::new(l0.restrict(&sub)?, l_a, local_signs(&sub, &z))?;
                    let (l1, big) = extend_system_and_map(&l0, &sub, zeta.target(), &zeta)?;
                    ok(json!({"system": system_data(&l1), "morphism": {"vertex_signs": big.signs()}}))
                }
                _ => Err(Error::InvalidInput("give exactly one of --twist or --along".into())),
            }
        }
        Command::ExtendMorphism(a) => {
            let x = loader.complex_named(&a.complex)?;
            let sub = loader.subcomplex(&x, &a.sub)?;
            let (l0, l1) = (loader.system(&x, &a.source)?, loader.system(&x, &a.target)?);
            let z = signs(&a.zeta)?;
            check_len(&z, x.vertex_count(), "zeta")?;
            let zeta_a = Morphism::new(l0.restrict(&sub)?, l1.restrict(&sub)?, local_signs(&sub, &z))?;
            let anchors = match &a.anchors {
                Some(path) => loader.anchors(&x, path)?,
                None => Vec::new(),
            };
            let ext = extend_morphism(&sub, &l0, &l1, &zeta_a, &anchors)?;
            ok(json!({"vertex_signs": ext.morphism.signs(), "route": ext.route}))
        }
        Command::Pullback(a) => {
            let f = loader.map(&a.map)?.map;
            let system = loader.system(f.target(), &a.system)?;
            ok(system_data(&pullback(&f, &system)?))
        }
        Command::Product(a) => {
            let (x, y) = (loader.complex_named(&a.left)?, loader.complex_named(&a.right)?);
            let prod = product(&x, &y);
            let cells: Vec<Vec<Value>> = (0..=prod.complex().dim())
                .map(|n| (0..prod.complex().count(n)).map(|k| serde_json::to_value(prod.cell(n, k)).expect("cell")).collect())
                .collect();
            let mut value = json!({"complex": prod.complex().to_data(), "cells": cells});
            if let (Some(ls), Some(rs)) = (&a.left_system, &a.right_system) {
                let system = bullet(&loader.system(&x, ls)?, &loader.system(&y, rs)?, &prod)?;
                value["system"] = serde_json::to_value(system_data(&system))?;
            }
            ok(value)
        }
        Command::Cylinder(a) => {
            let x = loader.complex_named(&a.complex)?;
            let c = cylinder(&x)?;
            let vertices: Vec<[usize; 2]> = (0..x.vertex_count()).map(|v| [c.vertex(v, 0), c.vertex(v, 1)]).collect();
            let vertical: Vec<usize> = (0..x.vertex_count()).map(|v| c.vertical_edge(v)).collect();
            ok(json!({"complex": c.complex().to_data(), "vertices": vertices, "vertical_edges": vertical}))
        }
        Command::Cap(a) => {
            let x = loader.complex_named(&a.complex)?;
            let (l0, l1) = (loader.system(&x, &a.cochain_system)?, loader.system(&x, &a.chain_system)?);
            let phi = integers(&a.cochain)?;
            let c = integers(&a.chain)?;
            let result = cap(&l0, &l1, &phi, a.r, &c, a.n)?;
            ok(json!({"degree": a.n - a.r, "system": system_data(&l0.edgewise_product(&l1)?), "chain": result}))
        }
        Command::Fundamental(a) => {
            let x = loader.complex_named(&a.complex)?;
            let m = a.dimension.unwrap_or(x.dim());
            let fd = fundamental_twist(&x, m)?.ok_or_else(|| Error::NoFundamentalClass(format!("no twist has H_{m} ≅ Z")))?;
            ok(fd)
        }
        Command::Duality(a) => duality(loader, a),
        Command::Degree(a) => degree_cmd(loader, a),
        Command::HomotopyCf(a) => homotopy_cf(loader, a),
        Command::Bar(a) => {
            let g = loader.group(&a.group)?;
            let w = loader.character(&g, &a.char)?;
            let b = bar(&g, &w, a.depth)?;
            let ranks: Vec<usize> = (0..=a.depth).map(|k| b.rank(k)).collect();
            let homology = (0..a.depth).map(|n| b.homology(n).map(|h| h.invariants().clone())).collect::<Result<Vec<_>>>()?;
            ok(json!({
                "group": a.group,
                "char": w.signs(),
                "depth": a.depth,
                "ranks": ranks,
                "homology": homology,
            }))
        }
        Command::ConjSign(a) => {
            let g = loader.group(&a.group)?;
            let w = loader.character(&g, &a.char)?;
            let e = g.element(&a.element)?;
            let depth = a.depth.unwrap_or(default_depth(a.degree));
            ok(conjugation_sign(&g, &w, e, a.degree, depth)?)
        }
        Command::Selfcheck(a) => selfcheck(loader, a),
    }
}

fn group_text(v: &Value) -> Option<String> {
    let rank = v.get("rank")?.as_u64()? as usize;
    let torsion = v.get("torsion")?.as_array()?.iter().map(Value::as_i64).collect::<Option<Vec<_>>>()?;
    Some(crate::twisted::Invariants { rank, torsion }.to_string())
}

fn table_lines(v: &Value, path: &str, lines: &mut Vec<String>) {
    let join = |key: &str| if path.is_empty() { key.to_string() } else { format!("{path}.{key}") };
    match v {
        Value::Object(map) => {
            if let Some(g) = group_text(v) {
                lines.push(format!("{}: {g}", if path.is_empty() { "group" } else { path }));
                return;
            }
            for (k, x) in map {
                table_lines(x, &join(k), lines);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                table_lines(x, &format!("{path}[{i}]"), lines);
            }
        }
        other => lines.push(format!("{}: {other}", if path.is_empty() { "value" } else { path })),
    }
}

fn validate(loader: &Loader, a: ValidateArgs) -> Result<Outcome> {
    let mut report = serde_json::Map::new();
    let mut failed = None;
    if let Some(c) = &a.complex {
        let data = raw_complex(loader, c)?;
        let violations = validate_data(&data)?;
        if violations.is_empty() {
            let x = DeltaComplex::from_data(&data)?;
            report.insert(
                "complex".into(),
                json!({
                    "valid": true,
                    "simplices": x.counts(),
                    "components": x.component_count(),
                    "euler_characteristic": x.euler_characteristic(),
                }),
            );
            if let Some(s) = &a.system {
                let x = Arc::new(x);
                match loader.system(&x, s) {
                    Ok(sys) => {
                        report.insert("system".into(), json!({"valid": true, "trivial": sys.is_trivial()}));
                    }
                    Err(e) if e.is_validation() => {
                        report.insert("system".into(), json!({"valid": false, "error": e.kind(), "message": e.to_string()}));
                        failed.get_or_insert(e);
                    }
                    Err(e) => return Err(e),
                }
            }
        } else {
            report.insert("complex".into(), json!({"valid": false, "violations": violations}));
            failed = Some(Error::InvalidComplex(format!("{} violated invariant(s)", violations.len())));
        }
    } else if a.system.is_some() {
        return Err(Error::InvalidInput("--system needs --complex".into()));
    }
    if let Some(m) = &a.map {
        match loader.map(m) {
            Ok(f) => {
                report.insert("map".into(), json!({"valid": true, "vertex_map": f.map.vertex_map()}));
            }
            Err(e) if e.is_validation() => {
                report.insert("map".into(), json!({"valid": false, "error": e.kind(), "message": e.to_string()}));
                failed.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    if let Some(g) = &a.group {
        match loader.group(g) {
            Ok(g) => {
                report.insert(
                    "group".into(),
                    json!({"valid": true, "order": g.order(), "abelian": g.is_abelian(), "characters": OrientationChar::all(&g).len()}),
                );
            }
            Err(e) if e.is_validation() => {
                report.insert("group".into(), json!({"valid": false, "error": e.kind(), "message": e.to_string()}));
                failed.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
    }
    if report.is_empty() {
        return Err(Error::InvalidInput("nothing to validate".into()));
    }
    report.insert("valid".into(), json!(failed.is_none()));
    Ok(Outcome { value: Value::Object(report), code: if failed.is_some() { EXIT_VALIDATION } else { EXIT_OK } })
}

fn raw_complex(loader: &Loader, c: &str) -> Result<ComplexData> {
    if c.contains('/') || c.ends_with(".json") {
        read_json(Path::new(c))
    } else {
        Ok(serde_json::from_str(&loader.corpus().text(Kind::Complex, c)?)?)
    }
}

fn twist_cmd(loader: &Loader, a: TwistArgs) -> Result<Outcome> {
    let x = loader.complex_named(&a.complex)?;
    let p = polarize(&x, a.bases.as_deref())?;
    if a.list {
        let classes: Vec<Value> = twist_classes(&x, &p)
            .iter()
            .enumerate()
            .map(|(i, w)| {
                json!({
                    "index": i,
                    "twist": TwistData::from_class(w),
                    "edge_signs": from_twist(&p, w, &vec![Sign::Plus; x.vertex_count()]).map(|s| s.signs().to_vec()).ok(),
                })
            })
            .collect();
        return ok(json!({"forest_edges": p.forest_edges(), "classes": classes}));
    }
    let system = loader.system(&x, &a.system)?;
    let w = twist(&system, &p);
    let index = twist_classes(&x, &p).iter().position(|c| *c == w);
    ok(json!({"twist": TwistData::from_class(&w), "class_index": index, "is_zero": w.is_zero()}))
}

fn duality(loader: &Loader, a: DualityArgs) -> Result<Outcome> {
    let x = loader.complex_named(&a.complex)?;
    let m = x.dim();
    let fd = fundamental_twist(&x, m)?.ok_or_else(|| Error::NoFundamentalClass(format!("no twist has H_{m} ≅ Z")))?;
    let others: Vec<CoefficientSystem> = match &a.system {
        Some(s) => vec![loader.system(&x, s)?],
        None if a.all_twists => {
            let p = polarize(&x, None)?;
            twist_classes(&x, &p)
                .iter()
                .map(|w| from_twist(&p, w, &vec![Sign::Plus; x.vertex_count()]))
                .collect::<Result<_>>()?
        }
        None => vec![CoefficientSystem::trivial(x.clone())],
    };
    let rs: Vec<usize> = match a.r {
        Some(r) if r <= m => vec![r],
        Some(r) => return Err(Error::DegreeMismatch(format!("r = {r} exceeds dimension {m}"))),
        None => (0..=m).collect(),
    };
    let mut checks = Vec::new();
    let mut all = true;
    for (i, other) in others.iter().enumerate() {
        for &r in &rs {
            let map = duality_map(&fd, other, r)?;
            let iso = map.is_isomorphism()?;
            let same_type = map.source == map.target;
            all &= iso && same_type;
            checks.push(json!({
                "system": i,
                "r": r,
                "cohomology": map.source,
                "homology": map.target,
                "same_type": same_type,
                "isomorphism": iso,
            }));
        }
    }
    ok(json!({"fundamental": fd, "checks": checks, "all_isomorphisms": all}))
}

fn degree_cmd(loader: &Loader, a: DegreeArgs) -> Result<Outcome> {
    let f = loader.map(&a.map)?.map;
    for (given, actual, what) in [(&a.source, f.source(), "source"), (&a.target, f.target(), "target")] {
        if let Some(name) = given {
            if *loader.complex_named(name)? != **actual {
                return Err(Error::InvalidInput(format!("map {what} is not `{name}`")));
            }
        }
    }
    let fm = fundamental_twist(f.source(), f.source().dim())?.ok_or_else(|| Error::NoFundamentalClass("source".into()))?;
    let fnn = fundamental_twist(f.target(), f.source().dim())?.ok_or_else(|| Error::NoFundamentalClass("target".into()))?;
    let zeta = match (&a.zeta, a.negate) {
        (Some(z), _) => Some(signs(z)?),
        (None, true) => {
            let pulled = pullback(&f, &fnn.system)?;
            let z = is_equivalent(&fm.system, &pulled).ok_or(Error::TwistNotPreserved)?;
            Some(z.signs().iter().map(|&s| -s).collect())
        }
        (None, false) => None,
    };
    let d = degree(&f, zeta.as_deref(), &fm, &fnn)?;
    ok(json!({"degree": d}))
}

fn homotopy_cf(loader: &Loader, a: HomotopyArgs) -> Result<Outcome> {
    let loaded = loader.map(&a.map)?;
    let cyl = loaded
        .cylinder
        .ok_or_else(|| Error::InvalidInput("homotopy source must be declared as {\"cylinder\": X}".into()))?;
    let h = Homotopy::new(cyl, loaded.map)?;
    let x = h.base().clone();
    let lx = loader.system(&x, &a.source_system)?;
    let ly = loader.system(h.map().target(), &a.target_system)?;
    let zeta0 = match &a.zeta0 {
        Some(z) => signs(z)?,
        None => is_equivalent(&lx, &pullback(h.start(), &ly)?)
            .ok_or_else(|| Error::InvalidInput("Λ_X is not isomorphic to f0*Λ_Y; pass --zeta0".into()))?
            .signs()
            .to_vec(),
    };
    let zeta1 = match &a.zeta1 {
        Some(z) => signs(z)?,
        None => zeta0.clone(),
    };
    let lift = lift_zeta(&h, &lx, &ly, &zeta0)?;
    let c = correction_class(&h, &lx, &ly, &zeta0, &zeta1)?;
    let tracks: Vec<Sign> = (0..x.vertex_count()).map(|v| h.track_sign(&ly, v)).collect();
    let agree = (0..=x.dim()).map(|n| ends_agree_in_homology(&h, &lx, &ly, &zeta0, &zeta1, n)).collect::<Result<Vec<_>>>()?;
    // the induced maps of both ends, for inspection
    let p0 = PairMorphism::new(h.start().clone(), lx.clone(), ly.clone(), zeta0.clone())?;
    let p1 = PairMorphism::new(h.end().clone(), lx.clone(), ly.clone(), zeta1.clone())?;
    let maps = (0..=x.dim())
        .map(|n| Ok(json!({"degree": n, "start": induced_map(&p0, n)?, "end": induced_map(&p1, n)?})))
        .collect::<Result<Vec<_>>>()?;
    ok(json!({
        "track_signs": tracks,
        "lift_end": (0..x.vertex_count()).map(|v| lift.at(h.cylinder().vertex(v, 1))).collect::<Vec<_>>(),
        "correction": c.component_signs(),
        "factorization_holds": agree,
        "induced": maps,
    }))
}

fn selfcheck(loader: &Loader, a: SelfcheckArgs) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let names = loader.corpus().names(Kind::Complex)?;
    let complexes = names.iter().map(|n| loader.complex_named(n)).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for trial in 0..a.count {
        let i = rng.gen_range(0..complexes.len());
        let x = &complexes[i];
        let system = random_system(x, &mut rng)?;
        if let Some(n) = TwistedChainComplex::new(&system).square_zero_violation() {
            failures.push(json!({"trial": trial, "complex": names[i], "degree": n}));
        }
    }
    let passed = failures.is_empty();
    Ok(Outcome {
        value: json!({"seed": a.seed, "count": a.count, "passed": passed, "failures": failures}),
        code: if passed { EXIT_OK } else { EXIT_MATH },
    })
}

/// A uniformly random system: random twist, random base values, random gauge.
pub fn random_system(x: &Arc<DeltaComplex>, rng: &mut impl Rng) -> Result<CoefficientSystem> {
    let p = polarize(x, None)?;
    let classes = twist_classes(x, &p);
    let w = &classes[rng.gen_range(0..classes.len())];
    let base = from_twist(&p, w, &vec![Sign::Plus; x.vertex_count()])?;
    let gauge: Vec<Sign> = (0..x.vertex_count()).map(|_| Sign::from_bit(rng.gen())).collect();
    let signs = (0..x.edge_count())
        .map(|e| {
            let (a, b) = x.edge_endpoints(e);
            gauge[a] * base.sign(e) * gauge[b]
        })
        .collect();
    CoefficientSystem::new(x.clone(), signs)
}

/// Base values are given either per component or per vertex.
fn spread_base_values(p: &Polarization, f: &[Sign]) -> Result<Vec<Sign>> {
    let n = p.vertex_count();
    if f.len() == n {
        return Ok(f.to_vec());
    }
    let bases = p.bases();
    if f.len() != bases.len() {
        return Err(Error::InvalidInput(format!("expected {} base values or {n} vertex values, got {}", bases.len(), f.len())));
    }
    let mut out = vec![Sign::Plus; n];
    for (&b, &s) in bases.iter().zip(f) {
        out[b] = s;
    }
    Ok(out)
}

fn local_signs(sub: &crate::complex::Subcomplex, z: &[Sign]) -> Vec<Sign> {
    sub.parent_ids(0).iter().map(|&v| z[v]).collect()
}

fn check_len<T>(v: &[T], n: usize, what: &str) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{what} has {} entries, expected {n}", v.len())))
    }
}

fn system_data(s: &CoefficientSystem) -> SystemData {
    SystemData { complex: None, edge_signs: s.signs().to_vec() }
}

fn is_file(s: &str) -> bool {
    s.ends_with(".json") || Path::new(s).is_file()
}

/// A comma-separated sign list such as `1,-1,+1`, or a file holding
/// `{"vertex_signs": [...]}` or a bare array.
fn signs(s: &str) -> Result<Vec<Sign>> {
    if is_file(s) {
        let v: Value = read_json(Path::new(s))?;
        let arr = v.get("vertex_signs").cloned().unwrap_or(v);
        return Ok(serde_json::from_value(arr)?);
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .ok()
                .and_then(Sign::from_i64)
                .ok_or_else(|| Error::Parse(format!("`{t}` is not a sign")))
        })
        .collect()
}

/// A comma-separated integer list or a file holding a JSON array.
fn integers(s: &str) -> Result<Vec<i64>> {
    if is_file(s) {
        return read_json(Path::new(s));
    }
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("`{t}` is not an integer"))))
        .collect()
}
