use std::io::Read;
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use latcover::cones::{hilbert_basis, is_very_ample, sebo_triangulation};
use latcover::cover::{
    boundary_cover, ellipsoid_cover_3d_report, symmetric_cover_3d, verify_boundary_neighbourhood,
    verify_cover_or_subdivide, CoverScope, CoverVerdict, UnimodularCover, VerifyMethod,
};
use latcover::ellipsoid::{
    build_qd_family, corner_inequality_solutions, descent_chain, ellipsoid_lattice_points, half_integer_ray_range,
    stack, stack_squared_semi_axis, verify_counterexample, EllipsoidalSet,
};
use latcover::exact::{format_rational, parse_rational, rat, AffineLattice, RatVector};
use latcover::json::{
    nums, ConeJson, CoverJson, EllipsoidJson, EllipsoidalSetJson, LatticeJson, Num, PolytopeJson,
};
use latcover::normality::{degree_bound, is_normal};
use latcover::polytope::LatticePolytope;
use latcover::Error;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::corpus;

/// Exact lattice-polytope computations: Hilbert bases, normality, unimodular
/// covers and ellipsoidal lattice sets. Inputs and outputs are JSON with
/// numbers written as exact strings.
#[derive(Debug, Parser)]
#[command(name = "latcover", version)]
pub struct Cli {
    /// Output style
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for the random corpus generators
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Upper bound on worker threads
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Summary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CoverMethod {
    Chain,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CorpusKind {
    /// ellipsoids in space with 4 to 40 lattice points
    Ellipsoids,
    /// the same with centers in (1/2) Z^3
    HalfEllipsoids,
    /// normal 3-polytopes with at most 40 lattice points
    NormalPolytopes,
    /// lattice tetrahedra that are not very ample
    NonVeryAmple,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert basis of a pointed cone
    HilbertBasis { input: Option<PathBuf> },
    /// Unimodular triangulation of a 3-cone by Hilbert basis rays
    SeboTriangulate { input: Option<PathBuf> },
    /// Normality of a lattice polytope, with a witness when it fails
    IsNormal { input: Option<PathBuf> },
    /// Very ampleness, with a vertex and escaping Hilbert element when it fails
    IsVeryAmple { input: Option<PathBuf> },
    /// The group generated by differences of lattice points
    Gp { input: Option<PathBuf> },
    /// Lattice points of an ellipsoid
    EllipsoidPoints {
        input: Option<PathBuf>,
        /// only the points on the surface
        #[arg(long)]
        surface: bool,
    },
    /// Vertices, facets and lattice points of a hull
    Hull { input: Option<PathBuf> },
    /// Unimodular cover of a boundary neighbourhood of a very ample 3-polytope
    BoundaryCover { input: Option<PathBuf> },
    /// Unimodular cover of the hull of the lattice points of a 3-ellipsoid
    CoverEllipsoid3 {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CoverMethod::Chain)]
        method: CoverMethod,
    },
    /// Exact check that a family of simplices covers its target
    VerifyCover { input: Option<PathBuf> },
    /// Chain of ellipsoidal sets down to a single point
    PeelChain { input: Option<PathBuf> },
    /// The half-integer family in dimension d
    BuildQd {
        #[arg(long)]
        d: usize,
    },
    /// Non-normality certificate of the half-integer family in even dimension d
    VerifyCounterexample {
        #[arg(long)]
        d: usize,
    },
    /// Two stacked copies of an ellipsoidal set one dimension up
    Stack {
        input: Option<PathBuf>,
        /// height semi-axis, strictly between 1/2 and 3/2
        #[arg(long, default_value = "1")]
        b: String,
    },
    /// Seeded random inputs
    Corpus {
        #[arg(long, value_enum)]
        kind: CorpusKind,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// The envelope written for every command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub diagnostics: Vec<String>,
}

impl CommandResult {
    fn ok(payload: Value) -> Self {
        Self { status: Status::Ok, payload, diagnostics: Vec::new() }
    }

    fn verdict(holds: bool, payload: Value) -> Self {
        Self { status: if holds { Status::Ok } else { Status::Fail }, payload, diagnostics: Vec::new() }
    }

    fn error(message: String) -> Self {
        Self { status: Status::Error, payload: Value::Null, diagnostics: vec![message] }
    }

    fn summary(&self) -> String {
        let mut out = format!("status: {}\n", serde_json::to_value(self.status).expect("serializable").as_str().unwrap_or("?"));
        if let Value::Object(map) = &self.payload {
            for (k, v) in map {
                let shown = match v {
                    Value::Array(a) => format!("[{} items]", a.len()),
                    Value::Object(o) => format!("{{{} fields}}", o.len()),
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                out.push_str(&format!("{k}: {shown}\n"));
            }
        }
        for d in &self.diagnostics {
            out.push_str(&format!("note: {d}\n"));
        }
        out
    }
}

/// What a run prints and how it exits.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (program name first) and runs the command, reading input
/// from the named file or from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let result = execute(&cli, stdin).unwrap_or_else(|e| CommandResult::error(format!("{e:#}")));
    let stdout = match cli.format {
        Format::Json => serde_json::to_string_pretty(&result).expect("serializable") + "\n",
        Format::Summary => result.summary(),
    };
    Outcome { stdout, stderr: String::new(), code: result.status.exit_code() }
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> anyhow::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            stdin.read_to_string(&mut text).context("reading standard input")?;
        }
    }
    Ok(text)
}

fn parse<T: serde::de::DeserializeOwned>(path: &Option<PathBuf>, stdin: &mut dyn Read) -> anyhow::Result<T> {
    let text = read_input(path, stdin)?;
    serde_json::from_str(&text).context("malformed input JSON")
}

/// An ellipsoid with an optional lattice (default `Z^d`).
#[derive(Debug, Deserialize)]
struct EllipsoidInput {
    #[serde(rename = "A")]
    a: Vec<Vec<Num>>,
    center: Vec<Num>,
    #[serde(default)]
    lattice: Option<LatticeJson>,
}

impl EllipsoidInput {
    fn into_parts(self) -> anyhow::Result<(latcover::ellipsoid::Ellipsoid, AffineLattice)> {
        let e = EllipsoidJson { a: self.a, center: self.center }.to_ellipsoid()?;
        let lattice = match self.lattice {
            Some(l) => l.to_lattice()?,
            None => AffineLattice::standard(e.dim()),
        };
        Ok((e, lattice))
    }
}

/// An ellipsoidal set, given either as a bundle or as an ellipsoid whose
/// lattice points it consists of.
fn read_set(path: &Option<PathBuf>, stdin: &mut dyn Read) -> anyhow::Result<EllipsoidalSet> {
    let value: Value = parse(path, stdin)?;
    if value.get("certificate").is_some() {
        let bundle: EllipsoidalSetJson = serde_json::from_value(value).context("malformed ellipsoidal set")?;
        Ok(bundle.to_set()?)
    } else {
        let input: EllipsoidInput = serde_json::from_value(value).context("malformed ellipsoid")?;
        let (e, lattice) = input.into_parts()?;
        Ok(EllipsoidalSet::from_ellipsoid(e, &lattice))
    }
}

/// A cover, either bare or inside the envelope written by the cover
/// commands.
fn read_cover(path: &Option<PathBuf>, stdin: &mut dyn Read) -> anyhow::Result<UnimodularCover> {
    let mut value: Value = parse(path, stdin)?;
    if let Some(inner) = value.get_mut("payload").map(Value::take) {
        value = inner;
    }
    if let Some(inner) = value.get_mut("cover").map(Value::take) {
        value = inner;
    }
    let cover: CoverJson = serde_json::from_value(value).context("malformed cover")?;
    Ok(cover.to_cover()?)
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn point(lattice: &AffineLattice, y: &[i64]) -> Vec<Num> {
    nums(&lattice.from_coords(y))
}

fn points(v: &[RatVector]) -> Vec<Vec<Num>> {
    v.iter().map(|x| nums(x)).collect()
}

fn verdict_json(v: &CoverVerdict) -> Value {
    json!({
        "covered": v.covered,
        "resolved": v.resolved,
        "method": match v.method { VerifyMethod::Arrangement => "arrangement", VerifyMethod::Subdivision => "subdivision" },
        "witness": v.witness.as_ref().map(|w| nums(w)),
    })
}

fn cover_payload(cover: &UnimodularCover) -> Value {
    json!({
        "cover": CoverJson::from(cover),
        "simplices": cover.len(),
        "verified": cover.verified,
        "repairs": cover.repairs,
    })
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> anyhow::Result<CommandResult> {
    Ok(match &cli.command {
        Command::HilbertBasis { input } => {
            let cone = parse::<ConeJson>(input, stdin)?.to_cone()?;
            let hb = hilbert_basis(&cone)?;
            CommandResult::ok(json!({
                "rays": cone.rays(),
                "hilbert_basis": hb.elements,
                "size": hb.len(),
                "verified": hb.verify(&cone),
            }))
        }
        Command::SeboTriangulate { input } => {
            let cone = parse::<ConeJson>(input, stdin)?.to_cone()?;
            let t = sebo_triangulation(&cone)?;
            let hb = hilbert_basis(&cone)?;
            CommandResult::ok(json!({
                "rays": t.rays,
                "pieces": t.pieces,
                "all_unimodular": t.cones().iter().all(|c| c.is_unimodular()),
                "rays_in_hilbert_basis": t.rays.iter().all(|r| hb.contains(r)),
            }))
        }
        Command::IsNormal { input } => {
            let p = parse::<PolytopeJson>(input, stdin)?.to_polytope()?;
            let r = is_normal(&p);
            CommandResult::verdict(
                r.is_normal,
                json!({
                    "normal": r.is_normal,
                    "lattice_points": p.num_lattice_points(),
                    "degree_bound": degree_bound(&p),
                    "witness": r.witness.map(|(c, x)| json!({ "c": c, "point": nums(&x) })),
                }),
            )
        }
        Command::IsVeryAmple { input } => {
            let p = parse::<PolytopeJson>(input, stdin)?.to_polytope()?;
            let r = is_very_ample(&p);
            let witness = r.witness.map(|(v, h)| {
                let l = p.lattice();
                let y = l.to_coords(&v).expect("vertex is a lattice point");
                let index = p.vertex_coords().iter().position(|w| *w == y);
                json!({
                    "vertex_index": index,
                    "vertex": nums(&v),
                    "hilbert": h,
                    "point": point(l, &add(&y, &h)),
                })
            });
            CommandResult::verdict(r.is_very_ample, json!({ "very_ample": r.is_very_ample, "witness": witness }))
        }
        Command::Gp { input } => {
            let p = parse::<PolytopeJson>(input, stdin)?.to_polytope()?;
            let g = p.gp();
            let basis: Vec<Vec<String>> = (0..g.rank())
                .map(|i| g.hnf_basis().row(i).iter().map(|x| x.to_string()).collect())
                .collect();
            CommandResult::ok(json!({
                "rank": g.rank(),
                "index": g.index_in_parent().map(|i| i.to_string()),
                "is_lattice": g.is_parent(),
                "hnf_basis": basis,
                "ambient_basis": points(&g.ambient_basis()),
            }))
        }
        Command::EllipsoidPoints { input, surface } => {
            let (e, lattice) = parse::<EllipsoidInput>(input, stdin)?.into_parts()?;
            let pts = ellipsoid_lattice_points(&e, &lattice, !surface);
            CommandResult::ok(json!({ "count": pts.len(), "points": points(&pts) }))
        }
        Command::Hull { input } => {
            let p = parse::<PolytopeJson>(input, stdin)?.to_polytope()?;
            CommandResult::ok(json!({
                "polytope": PolytopeJson::new(&p, true),
                "dim": p.dim(),
                "lattice_points": points(&p.lattice_points()),
            }))
        }
        Command::BoundaryCover { input } => {
            let p = parse::<PolytopeJson>(input, stdin)?.to_polytope()?;
            match boundary_cover(&p) {
                Ok(cover) if cover.verified => CommandResult::ok(cover_payload(&cover)),
                Ok(cover) => {
                    let v = verify_boundary_neighbourhood(&p, &cover.simplices, &rat(15, 16))?;
                    let mut payload = cover_payload(&cover);
                    payload["verdict"] = verdict_json(&v);
                    CommandResult::verdict(false, payload)
                }
                Err(Error::NotVeryAmple { vertex, hilbert }) => {
                    let y = p.lattice().to_coords(&vertex)?;
                    CommandResult::verdict(
                        false,
                        json!({
                            "very_ample": false,
                            "witness": {
                                "vertex": nums(&vertex),
                                "hilbert": hilbert,
                                "point": point(p.lattice(), &add(&y, &hilbert)),
                            },
                        }),
                    )
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::CoverEllipsoid3 { input, method } => {
            let (e, lattice) = parse::<EllipsoidInput>(input, stdin)?.into_parts()?;
            if lattice != AffineLattice::standard(3) {
                bail!("covers are computed over the standard lattice of space");
            }
            match method {
                CoverMethod::Chain => {
                    let report = ellipsoid_cover_3d_report(&e)?;
                    let mut payload = cover_payload(&report.cover);
                    payload["chain"] = json!(report.chain);
                    CommandResult::verdict(report.cover.verified, payload)
                }
                CoverMethod::Symmetric => {
                    let cover = symmetric_cover_3d(&e)?;
                    CommandResult::verdict(cover.verified, cover_payload(&cover))
                }
            }
        }
        Command::VerifyCover { input } => {
            let cover = read_cover(input, stdin)?;
            if let Some(bad) = cover.simplices.iter().position(|s| {
                !s.is_unimodular() || !s.vertex_coords().iter().all(|v| cover.target.contains_coords(v))
            }) {
                return Ok(CommandResult::verdict(
                    false,
                    json!({ "covered": false, "invalid_simplex": bad, "reason": "not unimodular or not inside the target" }),
                ));
            }
            let verdict = match cover.scope {
                CoverScope::Full => verify_cover_or_subdivide(&cover.target, &cover.simplices)?,
                CoverScope::BoundaryNeighbourhood => {
                    verify_boundary_neighbourhood(&cover.target, &cover.simplices, &rat(15, 16))?
                }
            };
            if !verdict.resolved {
                bail!("the subdivision fallback reached its depth bound without a verdict");
            }
            CommandResult::verdict(verdict.covered, verdict_json(&verdict))
        }
        Command::PeelChain { input } => {
            let set = read_set(input, stdin)?;
            let chain = descent_chain(&set)?;
            let steps: Vec<Value> = chain
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let removed = chain.get(i + 1).and_then(|next| {
                        s.point_coords().iter().find(|y| !next.contains_coords(y)).map(|y| point(s.lattice(), y))
                    });
                    json!({
                        "size": s.len(),
                        "certificate": EllipsoidJson::from(s.certificate()),
                        "verified": s.verify(),
                        "removed": removed,
                    })
                })
                .collect();
            CommandResult::ok(json!({ "length": steps.len(), "steps": steps }))
        }
        Command::BuildQd { d } => {
            let fam = build_qd_family(*d)?;
            let (lo, hi) = half_integer_ray_range(*d);
            CommandResult::verdict(
                fam.delta_is_facet && fam.delta_is_empty,
                json!({
                    "d": d,
                    "lattice": LatticeJson::from(&fam.lattice),
                    "ball": EllipsoidJson::from(&fam.ball),
                    "p_lattice_points": fam.p.num_lattice_points(),
                    "q_lattice_points": fam.q.num_lattice_points(),
                    "delta_vertices": points(&fam.delta.vertices()),
                    "beta": nums(&fam.beta),
                    "delta_is_facet": fam.delta_is_facet,
                    "delta_is_empty": fam.delta_is_empty,
                    "ray_range": [lo, hi],
                    "corner_inequality_solutions": corner_inequality_solutions(*d).len(),
                }),
            )
        }
        Command::VerifyCounterexample { d } => {
            let r = verify_counterexample(*d)?;
            let confirmed = r.target_in_dilate && !r.representable && r.gp_is_lattice && !r.is_normal;
            CommandResult::verdict(
                confirmed,
                json!({
                    "d": r.d,
                    "lattice_points": r.lattice_points,
                    "c": r.c,
                    "target": nums(&r.target),
                    "target_in_dilate": r.target_in_dilate,
                    "representable": r.representable,
                    "gp_is_lattice": r.gp_is_lattice,
                    "is_normal": r.is_normal,
                    "normality_exhaustive": r.normality_exhaustive,
                    "witness": r.witness.map(|(c, x)| json!({ "c": c, "point": nums(&x) })),
                }),
            )
        }
        Command::Stack { input, b } => {
            let b = parse_rational(b).context("parsing --b")?;
            let set = read_set(input, stdin)?;
            let stacked = stack(&set, &b)?;
            CommandResult::ok(json!({
                "set": EllipsoidalSetJson::from(&stacked),
                "size": stacked.len(),
                "a_squared": format_rational(&stack_squared_semi_axis(&b)),
                "verified": stacked.verify(),
            }))
        }
        Command::Corpus { kind, count } => {
            let mut rng = corpus::rng(cli.seed);
            let items: Vec<Value> = (0..*count)
                .map(|_| match kind {
                    CorpusKind::Ellipsoids => json!(EllipsoidJson::from(&corpus::ellipsoid_3d(&mut rng, false))),
                    CorpusKind::HalfEllipsoids => json!(EllipsoidJson::from(&corpus::ellipsoid_3d(&mut rng, true))),
                    CorpusKind::NormalPolytopes => json!(PolytopeJson::new(&corpus::normal_polytope_3d(&mut rng), false)),
                    CorpusKind::NonVeryAmple => json!(PolytopeJson::new(&corpus::non_very_ample_3d(&mut rng), false)),
                })
                .collect();
            CommandResult::ok(json!({ "seed": cli.seed, "items": items }))
        }
    })
}

/// Reads a polytope in the JSON format, for callers outside the binary.
pub fn polytope_from_str(text: &str) -> anyhow::Result<LatticePolytope> {
    Ok(serde_json::from_str::<PolytopeJson>(text)?.to_polytope()?)
}
