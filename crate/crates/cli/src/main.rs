//! `splitwidth`: exact intersection cuts, relaxations, split closures and closure proofs.
//!
//! Every verb reads and writes versioned JSON (`"v": 1`). Errors go to stderr as JSON with
//! exit code 64 (parse), 65 (semantic), 69 (budget) or 1 (internal). `prove` exits 2 when the
//! inequality is not proved within the round limit.

mod dto;
mod error;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use serde_json::{json, Value};
use splitwidth_core::closure_prover::{
    closure_hrep, enumerate_split_sets, example_milp, iterated_closure, project_tight, violated_faces,
    width_size_of_inequality, BodyFamily, FaceKind, FaceRecord, Method, ObjectiveValue, ProofTrace, StopReason,
    DEFAULT_FACE_BUDGET, DEFAULT_SPLIT_BUDGET,
};
use splitwidth_core::corpus::{rng, DEFAULT_SEED};
use splitwidth_core::cutlib::{classify_cut, dominance_certificate, dominates, Certificate, Cut};
use splitwidth_core::exact_kernel::rational::{format_rat, ExtRat, Rat};
use splitwidth_core::exact_kernel::{canonicalize, hrep_to_vrep, vrep_to_hrep, HRep, KernelError, VRep};
use splitwidth_core::lattice_free::{make_simplex_body, max_facet_width, width_along, SplitBody};
use splitwidth_core::polyhedron::{default_box, mixed_integer_hull, Instance, DEFAULT_BOX_MARGIN, DEFAULT_ENUMERATION_BUDGET};
use splitwidth_core::relaxation::{is_trivial, relax_balas, relax_vertices_detailed, Provenance};

use dto::{read_document, strs, versioned, BodyDto, CutDto, CutsDto, FamilyDto, PolyDto};
use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "splitwidth", version, about = "Exact split-closure and intersection-cut toolkit")]
struct Cli {
    /// Which forms of each output polyhedron to print.
    #[arg(long, value_enum, global = true, default_value_t = Emit::Both)]
    emit: Emit,
    /// Relaxation path.
    #[arg(long, value_enum, global = true, default_value_t = MethodArg::Vertices)]
    method: MethodArg,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Lattice-point enumeration budget.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Emit {
    Vrep,
    Hrep,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Vertices,
    Balas,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// R(L,P) for one body, with its intersection points.
    Relax {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        body: PathBuf,
        /// Random points of each path's result checked against the other path.
        #[arg(long, default_value_t = 0)]
        check: usize,
    },
    /// Intersection of R(L,P) over a finite family.
    Closure {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, conflicts_with = "splits")]
        family: Option<PathBuf>,
        /// Use all split sets with coefficients bounded by this value.
        #[arg(long)]
        splits: Option<u64>,
    },
    /// Whether the first cut dominates the second on P.
    Dominate {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        first: PathBuf,
        #[arg(long)]
        second: PathBuf,
    },
    /// Dominance certificate for a candidate cut against a family of cuts.
    Certify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        candidate: PathBuf,
    },
    /// Facet widths of a body.
    Width {
        #[arg(long)]
        body: PathBuf,
    },
    /// Faces of the tight projection of a cut, classified violated or safe.
    Faces {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        cut: PathBuf,
        /// Candidate bodies for the width-size bound.
        #[arg(long, conflicts_with = "splits")]
        candidates: Option<PathBuf>,
        #[arg(long)]
        splits: Option<u64>,
    },
    /// Iterated closures until the cut holds, plus face analysis.
    Prove {
        /// Use the built-in example with p integer variables.
        #[arg(long, conflicts_with_all = ["instance", "cut"])]
        example_p: Option<usize>,
        #[arg(long, requires = "cut")]
        instance: Option<PathBuf>,
        #[arg(long, requires = "instance")]
        cut: Option<PathBuf>,
        /// Comma-separated: `simplex`, `splits`, or a family file.
        #[arg(long, default_value = "simplex")]
        family: String,
        /// Coefficient bound for `splits`.
        #[arg(long, default_value_t = 2)]
        bound: u64,
        /// Keep only family members with max-facet-width at most this value.
        #[arg(long)]
        max_width: Option<String>,
        #[arg(long, default_value_t = 3)]
        rounds: usize,
    },
    /// Split sets with bounded coefficients.
    EnumerateSplits {
        /// Offsets are ranged over this instance; otherwise only offset 0 is used.
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long, required_unless_present = "instance")]
        dim: Option<usize>,
        /// 1-based, comma-separated.
        #[arg(long, value_delimiter = ',', required_unless_present = "instance")]
        integer_vars: Vec<usize>,
        #[arg(long)]
        bound: u64,
    },
    /// The example MILP with p integer variables.
    Example {
        #[arg(long)]
        p: usize,
    },
    /// Convex hull of the mixed-integer points, by enumeration.
    OracleHull {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOX_MARGIN)]
        margin: i64,
    },
}

struct Outcome {
    report: Value,
    code: u8,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report: versioned(report), code: 0 }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let err = CliError::Parse(e.to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(err.exit_code() as u8);
        }
    };
    match run(&cli).and_then(|out| emit(&out.report).map(|_| out.code)) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn emit(report: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(report).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}").map_err(|e| CliError::Internal(e.to_string()))
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Relax { instance, body, check } => relax(cli, instance, body, *check),
        Command::Closure { instance, family, splits } => closure(cli, instance, family.as_deref(), *splits),
        Command::Dominate { instance, first, second } => dominate(instance, first, second),
        Command::Certify { instance, family, candidate } => certify(instance, family, candidate),
        Command::Width { body } => width(body),
        Command::Faces { instance, cut, candidates, splits } => faces(cli, instance, cut, candidates.as_deref(), *splits),
        Command::Prove { example_p, instance, cut, family, bound, max_width, rounds } => {
            let (inst, objective) = match (example_p, instance, cut) {
                (Some(p), _, _) => {
                    let ex = example_milp(*p)?;
                    (ex.instance, ex.target)
                }
                (None, Some(i), Some(c)) => (load_instance(i)?, load_cut(c)?),
                _ => return Err(CliError::Parse("give --example-p or both --instance and --cut".into())),
            };
            let fam = build_family(&inst, family, *bound, max_width.as_deref())?;
            prove(cli, &inst, &objective, &fam, *rounds)
        }
        Command::EnumerateSplits { instance, dim, integer_vars, bound } => {
            let (dim, iv, vrep) = match instance {
                Some(path) => {
                    let inst = load_instance(path)?;
                    (inst.dim(), inst.integer_vars.clone(), Some(inst.vrep))
                }
                None => {
                    let dim = dim.expect("required by clap");
                    let dto = PolyDto { dim, integer_vars: Some(integer_vars.clone()), ..Default::default() };
                    (dim, dto.integer_vars()?, None)
                }
            };
            let fam = enumerate_split_sets(dim, &iv, *bound, vrep.as_ref(), DEFAULT_SPLIT_BUDGET)?;
            Ok(Outcome::ok(family_json(&fam)))
        }
        Command::Example { p } => {
            let ex = example_milp(*p)?;
            let iv = ex.instance.integer_vars.clone();
            Ok(Outcome::ok(json!({
                "p": ex.p,
                "instance": PolyDto::from_vrep(&ex.instance.vrep, Some(&iv)),
                "hrep": PolyDto::from_hrep(&ex.hrep, Some(&iv)),
                "target": CutDto::from_cut(&ex.target),
                "body": BodyDto::from_body(&ex.body),
            })))
        }
        Command::OracleHull { instance, margin } => {
            let inst = load_instance(instance)?;
            let bx = default_box(&inst, *margin)?;
            let hull = mixed_integer_hull(&inst, &bx, cli.budget)?;
            let h = match &hull {
                Some(v) => vrep_to_hrep(v)?,
                None => HRep::empty(inst.dim()),
            };
            Ok(Outcome::ok(json!({
                "box": { "lo": bx.lo.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                         "hi": bx.hi.iter().map(|x| x.to_string()).collect::<Vec<_>>() },
                "empty": hull.is_none(),
                "hull": poly_json(&h, &inst.integer_vars, cli.emit)?,
            })))
        }
    }
}

fn load_instance(path: &Path) -> Result<Instance, CliError> {
    read_document::<PolyDto>(path)?.instance()
}

fn load_body(path: &Path) -> Result<SplitBody, CliError> {
    read_document::<BodyDto>(path)?.body()
}

fn load_cut(path: &Path) -> Result<Cut, CliError> {
    read_document::<CutDto>(path)?.cut()
}

fn load_family(path: &Path) -> Result<BodyFamily, CliError> {
    let dto: FamilyDto = read_document(path)?;
    let bodies = dto.bodies.iter().map(BodyDto::body).collect::<Result<Vec<_>, _>>()?;
    let label = dto.label.unwrap_or_else(|| path.display().to_string());
    Ok(BodyFamily::new(label, bodies)?)
}

fn check_body_fits(inst: &Instance, l: &SplitBody) -> Result<(), CliError> {
    if l.dim != inst.dim() {
        return Err(CliError::Semantic(format!("body has dim {}, instance has dim {}", l.dim, inst.dim())));
    }
    if l.integer_vars.iter().any(|j| !inst.integer_vars.contains(j)) {
        return Err(CliError::Semantic("body uses coordinates that are not integer variables of the instance".into()));
    }
    Ok(())
}

fn vrep_of(h: &HRep) -> Result<VRep, CliError> {
    if h.is_canonical_empty() {
        return Ok(VRep::new(h.dim, Vec::new(), Vec::new()));
    }
    match hrep_to_vrep(h) {
        Ok(v) => Ok(v),
        Err(KernelError::Empty) => Ok(VRep::new(h.dim, Vec::new(), Vec::new())),
        Err(e) => Err(e.into()),
    }
}

/// `{"hrep": ..., "vrep": ...}` as selected by `--emit`; each part is a polyhedron document body.
fn poly_json(h: &HRep, iv: &[usize], emit: Emit) -> Result<Value, CliError> {
    let mut out = serde_json::Map::new();
    if emit != Emit::Vrep {
        out.insert("hrep".into(), json!(PolyDto::from_hrep(h, Some(iv))));
    }
    if emit != Emit::Hrep {
        out.insert("vrep".into(), json!(PolyDto::from_vrep(&vrep_of(h)?, Some(iv))));
    }
    Ok(Value::Object(out))
}

fn family_json(f: &BodyFamily) -> Value {
    json!({
        "label": f.label,
        "declared_width": f.declared_width.to_string(),
        "bodies": f.bodies.iter().map(BodyDto::from_body).collect::<Vec<_>>(),
    })
}

fn optimum_str(o: &ObjectiveValue) -> String {
    match o {
        ObjectiveValue::Finite(v) => format_rat(v),
        ObjectiveValue::Unbounded => "-inf".into(),
        ObjectiveValue::Empty => "empty".into(),
    }
}

fn relax(cli: &Cli, instance: &Path, body: &Path, check: usize) -> Result<Outcome, CliError> {
    let inst = load_instance(instance)?;
    let l = load_body(body)?;
    check_body_fits(&inst, &l)?;
    let p = &inst.vrep;
    let iv = &inst.integer_vars;
    let mut report = serde_json::Map::new();
    report.insert("trivial".into(), json!(is_trivial(&l, p)?));
    let mut vertex_h = None;
    let mut balas_h = None;
    if cli.method != MethodArg::Balas {
        let r = relax_vertices_detailed(&l, p)?;
        let h = r.hrep()?;
        let points: Vec<Value> = r
            .points
            .iter()
            .map(|ip| {
                let from = match ip.from {
                    Provenance::Ray { inside, ray } => json!({ "kind": "ray", "inside": inside + 1, "ray": ray + 1 }),
                    Provenance::Vertex { inside, outside } => {
                        json!({ "kind": "vertex", "inside": inside + 1, "outside": outside + 1 })
                    }
                };
                json!({ "from": from, "scalar": format_rat(&ip.scalar), "point": strs(&ip.point) })
            })
            .collect();
        report.insert(
            "vertices_path".into(),
            json!({
                "inside": r.split.inside.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "outside": r.split.outside.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "intersection_points": points,
                "relaxation": poly_json(&h, iv, cli.emit)?,
            }),
        );
        vertex_h = Some(h);
    }
    if cli.method != MethodArg::Vertices {
        let h = relax_balas(&l, p)?;
        report.insert("balas_path".into(), json!({ "relaxation": poly_json(&h, iv, cli.emit)? }));
        balas_h = Some(h);
    }
    if let (Some(a), Some(b)) = (&vertex_h, &balas_h) {
        report.insert("paths_agree".into(), json!(a == b));
        if check > 0 {
            let mut r = rng(cli.seed);
            let failures = sample_check(&mut r, &vrep_of(a)?, b, check) + sample_check(&mut r, &vrep_of(b)?, a, check);
            report.insert("check".into(), json!({ "seed": cli.seed, "samples": 2 * check, "failures": failures }));
        }
    }
    Ok(Outcome::ok(Value::Object(report)))
}

/// Random points of `v` (convex weights on vertices plus nonnegative ray multiples) not in `h`.
fn sample_check(r: &mut impl Rng, v: &VRep, h: &HRep, n: usize) -> usize {
    if v.vertices.is_empty() {
        return 0;
    }
    let mut failures = 0;
    for _ in 0..n {
        let w: Vec<u32> = v.vertices.iter().map(|_| r.gen_range(0..8)).collect();
        let total: u32 = w.iter().sum::<u32>().max(1);
        let mut x = vec![Rat::from(0); v.dim];
        if w.iter().all(|&k| k == 0) {
            x = v.vertices[0].clone();
        } else {
            for (vert, &k) in v.vertices.iter().zip(&w) {
                for (xi, vi) in x.iter_mut().zip(vert) {
                    *xi += Rat::from(k) / Rat::from(total) * vi;
                }
            }
        }
        for ray in &v.rays {
            let t = Rat::from(r.gen_range(0..4u32));
            for (xi, ri) in x.iter_mut().zip(ray) {
                *xi += &t * ri;
            }
        }
        if !h.contains(&x) {
            failures += 1;
        }
    }
    failures
}

fn closure(cli: &Cli, instance: &Path, family: Option<&Path>, splits: Option<u64>) -> Result<Outcome, CliError> {
    let inst = load_instance(instance)?;
    let fam = match (family, splits) {
        (Some(path), _) => load_family(path)?,
        (None, Some(b)) => enumerate_split_sets(inst.dim(), &inst.integer_vars, b, Some(&inst.vrep), DEFAULT_SPLIT_BUDGET)?,
        (None, None) => return Err(CliError::Parse("give --family or --splits".into())),
    };
    for l in &fam.bodies {
        check_body_fits(&inst, l)?;
    }
    let mut report = serde_json::Map::new();
    report.insert("family".into(), json!({ "label": fam.label, "size": fam.len(), "declared_width": fam.declared_width.to_string() }));
    let h = match cli.method {
        MethodArg::Vertices => closure_hrep(&inst.vrep, &fam, Method::Vertices)?,
        MethodArg::Balas => closure_hrep(&inst.vrep, &fam, Method::Balas)?,
        MethodArg::Both => {
            let a = closure_hrep(&inst.vrep, &fam, Method::Vertices)?;
            let b = closure_hrep(&inst.vrep, &fam, Method::Balas)?;
            report.insert("paths_agree".into(), json!(a == b));
            a
        }
    };
    report.insert("closure".into(), poly_json(&h, &inst.integer_vars, cli.emit)?);
    Ok(Outcome::ok(Value::Object(report)))
}

fn classification_json(p: &VRep, c: &Cut) -> Result<Value, CliError> {
    let cl = classify_cut(p, c)?;
    Ok(json!({
        "cut_off": cl.cut_off.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "nonnegative": cl.nonnegative,
        "is_cut": cl.is_cut,
    }))
}

fn dominate(instance: &Path, first: &Path, second: &Path) -> Result<Outcome, CliError> {
    let inst = load_instance(instance)?;
    let (c1, c2) = (load_cut(first)?, load_cut(second)?);
    Ok(Outcome::ok(json!({
        "first": classification_json(&inst.vrep, &c1)?,
        "second": classification_json(&inst.vrep, &c2)?,
        "first_dominates_second": dominates(&inst.vrep, &c1, &c2)?,
        "second_dominates_first": dominates(&inst.vrep, &c2, &c1)?,
    })))
}

fn certify(instance: &Path, family: &Path, candidate: &Path) -> Result<Outcome, CliError> {
    let inst = load_instance(instance)?;
    let cuts: CutsDto = read_document(family)?;
    let fam = cuts.cuts.iter().map(CutDto::cut).collect::<Result<Vec<_>, _>>()?;
    let cand = load_cut(candidate)?;
    let vc = classify_cut(&inst.vrep, &cand)?.cut_off;
    let cert = match dominance_certificate(&inst.vrep, &vc, &fam, &cand)? {
        Certificate::Dominated { weights, combined, dual_objective } => json!({
            "kind": "dominated",
            "weights": strs(&weights),
            "combined": CutDto::from_cut(&combined),
            "dual_objective": format_rat(&dual_objective),
        }),
        Certificate::Invalid { witness, value } => json!({
            "kind": "invalid",
            "witness": strs(&witness),
            "value": format_rat(&value),
        }),
    };
    Ok(Outcome::ok(json!({
        "cut_off": vc.iter().map(|i| i + 1).collect::<Vec<_>>(),
        "certificate": cert,
    })))
}

fn width(body: &Path) -> Result<Outcome, CliError> {
    let l = load_body(body)?;
    let per_facet = l.facets.iter().map(|f| Ok(width_along(&l, &f.pi)?.to_string())).collect::<Result<Vec<_>, CliError>>()?;
    Ok(Outcome::ok(json!({
        "max_facet_width": max_facet_width(&l)?.to_string(),
        "facet_widths": per_facet,
    })))
}

fn face_json(i: usize, f: &FaceRecord) -> Value {
    json!({
        "index": i + 1,
        "kind": match f.kind { FaceKind::Violated => "violated", FaceKind::Safe => "safe" },
        "dimension": f.dimension,
        "tight_rows": f.tight_rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
        "face": PolyDto::from_hrep(&f.face, None),
        "lattice_free": f.lattice_free,
        "span_coefficients": f.span_coefficients.as_ref().map(|c| strs(c)),
        "violating_point": f.violating_point.as_ref().map(|x| strs(x)),
        "cross_check_agrees": f.cross_check_agrees,
    })
}

const WIDTH_LABEL: &str = "width-size upper bound (candidate-restricted)";

fn width_json(value: &ExtRat, per_face: &[(usize, Option<ExtRat>)]) -> Value {
    json!({
        "label": WIDTH_LABEL,
        "value": value.to_string(),
        "per_face": per_face
            .iter()
            .map(|(i, w)| json!({ "face": i + 1, "width_size": w.as_ref().map(|w| w.to_string()) }))
            .collect::<Vec<_>>(),
    })
}

fn faces(
    cli: &Cli,
    instance: &Path,
    cut: &Path,
    candidates: Option<&Path>,
    splits: Option<u64>,
) -> Result<Outcome, CliError> {
    let inst = load_instance(instance)?;
    let c = load_cut(cut)?;
    let tp = project_tight(&inst, &c, None, cli.budget)?;
    let records = violated_faces(&tp, &inst, &c, None, cli.budget, DEFAULT_FACE_BUDGET)?;
    let mut report = serde_json::Map::new();
    report.insert("projection".into(), json!(PolyDto::from_hrep(&tp.px, None)));
    report.insert("outer".into(), json!(PolyDto::from_hrep(&tp.outer, Some(&inst.integer_vars))));
    report.insert("m_eq".into(), json!(tp.m_eq.iter().map(|r| r + 1).collect::<Vec<_>>()));
    report.insert("faces".into(), json!(records.iter().enumerate().map(|(i, f)| face_json(i, f)).collect::<Vec<_>>()));
    let cands = match (candidates, splits) {
        (Some(path), _) => Some(load_family(path)?),
        (None, Some(b)) => Some(enumerate_split_sets(inst.dim(), &inst.integer_vars, b, Some(&inst.vrep), DEFAULT_SPLIT_BUDGET)?),
        (None, None) => None,
    };
    if let Some(fam) = cands {
        for l in &fam.bodies {
            check_body_fits(&inst, l)?;
        }
        let iw = width_size_of_inequality(&records, &fam, None, cli.budget)?;
        let per: Vec<(usize, Option<ExtRat>)> = iw.per_face.iter().map(|(i, ws)| (*i, Some(ws.size.clone()))).collect();
        report.insert("width_size".into(), width_json(&iw.value, &per));
    }
    Ok(Outcome::ok(Value::Object(report)))
}

fn build_family(inst: &Instance, spec: &str, bound: u64, max_width: Option<&str>) -> Result<BodyFamily, CliError> {
    let mut fam: Option<BodyFamily> = None;
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let next = match part {
            "simplex" => {
                let s = make_simplex_body(inst.p())?.lifted(inst.dim(), &inst.integer_vars)?;
                BodyFamily::new(format!("S^{}", inst.p()), vec![s])?
            }
            "splits" => enumerate_split_sets(inst.dim(), &inst.integer_vars, bound, Some(&inst.vrep), DEFAULT_SPLIT_BUDGET)?,
            path => load_family(Path::new(path))?,
        };
        fam = Some(match fam {
            None => next,
            Some(f) => f.union(&next)?,
        });
    }
    let mut fam = fam.ok_or_else(|| CliError::Parse("empty --family".into()))?;
    for l in &fam.bodies {
        check_body_fits(inst, l)?;
    }
    if let Some(w) = max_width {
        fam = fam.restricted_to_width(&dto::rat(w)?)?;
    }
    if fam.is_empty() {
        return Err(CliError::Semantic("family is empty".into()));
    }
    Ok(fam)
}

fn prove(cli: &Cli, inst: &Instance, objective: &Cut, fam: &BodyFamily, rounds: usize) -> Result<Outcome, CliError> {
    let method = match cli.method {
        MethodArg::Vertices | MethodArg::Both => Method::Vertices,
        MethodArg::Balas => Method::Balas,
    };
    let trace: ProofTrace = iterated_closure(&inst.vrep, fam, objective, rounds, method)?;
    let mut notes: Vec<String> = Vec::new();
    let mut faces_out = Value::Null;
    let mut width_out = Value::Null;
    match project_tight(inst, objective, None, cli.budget) {
        Ok(tp) => {
            let records = violated_faces(&tp, inst, objective, None, cli.budget, DEFAULT_FACE_BUDGET)?;
            let iw = width_size_of_inequality(&records, fam, None, cli.budget)?;
            let per: Vec<(usize, Option<ExtRat>)> = iw.per_face.iter().map(|(i, ws)| (*i, Some(ws.size.clone()))).collect();
            faces_out = json!(records
                .iter()
                .enumerate()
                .filter(|(_, f)| f.kind == FaceKind::Violated)
                .map(|(i, f)| face_json(i, f))
                .collect::<Vec<_>>());
            width_out = width_json(&iw.value, &per);
        }
        Err(e) => notes.push(format!("face analysis skipped: {e}")),
    }
    let rounds_json: Vec<Value> = trace
        .rounds
        .iter()
        .enumerate()
        .map(|(k, r)| {
            let h = canonicalize(&r.hrep).unwrap_or_else(|_| r.hrep.clone());
            json!({
                "round": k,
                "optimum": optimum_str(&r.optimum),
                "polyhedron": PolyDto::from_hrep(&h, Some(&inst.integer_vars)),
            })
        })
        .collect();
    let report = json!({
        "proved": trace.proved,
        "rounds_used": trace.rounds_used,
        "stop": match trace.stop {
            StopReason::Proved => "proved",
            StopReason::Stalled => "stalled",
            StopReason::MaxRounds => "max_rounds",
        },
        "objective": CutDto::from_cut(objective),
        "family": { "label": fam.label, "size": fam.len(), "declared_width": trace.family_width.to_string() },
        "rounds": rounds_json,
        "violated_faces": faces_out,
        "width_size_bound": width_out,
        "notes": notes,
    });
    Ok(Outcome { report: versioned(report), code: if trace.proved { 0 } else { 2 } })
}
