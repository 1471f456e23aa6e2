//! Closures over finite body families, iterated closures, the face analysis of the
//! projection `P^x(delta, delta0)`, and the example MILP family.

use std::collections::BTreeSet;

use malachite_base::num::arithmetic::traits::{Ceiling, Floor};
use rayon::prelude::*;
use thiserror::Error;

use crate::cutlib::{Cut, CutError};
use crate::exact_kernel::hrep::{HRep, Row, VRep};
use crate::exact_kernel::linalg::dot;
use crate::exact_kernel::lp::{lp_solve, LpStatus, Sense};
use crate::exact_kernel::rational::{ints_to_rats, is_zero, one, zero, ExtRat, Int, Rat};
use crate::exact_kernel::{canonicalize, hrep_to_vrep, project, span_membership, vrep_to_hrep, KernelError};
use crate::lattice_free::{
    bounding_box, lattice_free_hrep, make_simplex_body, make_split_set, max_facet_width, primitive_directions,
    relative_interior_point, width_size_over_family, BodyError, SplitBody, WidthSize,
};
use crate::polyhedron::{default_box, mixed_integer_minimum, IntBox, Instance, MipValue, PolyError, DEFAULT_BOX_MARGIN};
use crate::relaxation::{relax_balas, relax_vertices, relaxation_hrep, RelaxError};

pub const DEFAULT_SPLIT_BUDGET: usize = 100_000;
pub const DEFAULT_FACE_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("coefficient bound must be at least 1")]
    ZeroBound,
    #[error("family would have {count} members, budget is {budget}")]
    BudgetExceeded { count: usize, budget: usize },
    #[error("at least one round is required")]
    ZeroRounds,
    #[error("closure is not pointed")]
    NonPointed,
    #[error("bodies of different dimensions in one family")]
    MixedDimensions,
    #[error("right-hand side {claimed} is not the mixed-integer optimum {actual}")]
    NotOptimal { claimed: String, actual: String },
    #[error("projection is not the convex hull of its lattice points")]
    HullAssumption,
    #[error("cannot verify at desk scale: {0}")]
    Unverifiable(String),
    #[error("p must be at least 1")]
    BadP,
    #[error(transparent)]
    Relax(#[from] RelaxError),
    #[error(transparent)]
    Body(#[from] BodyError),
    #[error(transparent)]
    Cut(#[from] CutError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodyFamily {
    pub bodies: Vec<SplitBody>,
    pub label: String,
    /// Largest max-facet-width among members; zero for the empty family.
    pub declared_width: ExtRat,
}

impl BodyFamily {
    pub fn new(label: impl Into<String>, bodies: Vec<SplitBody>) -> Result<Self, ClosureError> {
        if bodies.windows(2).any(|w| w[0].dim != w[1].dim) {
            return Err(ClosureError::MixedDimensions);
        }
        let widths: Vec<Result<ExtRat, BodyError>> = bodies.par_iter().map(max_facet_width).collect();
        let mut declared_width = ExtRat::Finite(zero());
        for w in widths {
            declared_width = declared_width.max(w?);
        }
        Ok(BodyFamily { bodies, label: label.into(), declared_width })
    }

    /// Members whose max-facet-width is at most `w`.
    pub fn restricted_to_width(&self, w: &Rat) -> Result<BodyFamily, ClosureError> {
        let mut keep = Vec::new();
        for b in &self.bodies {
            if max_facet_width(b)? <= ExtRat::Finite(w.clone()) {
                keep.push(b.clone());
            }
        }
        BodyFamily::new(format!("{} (width <= {})", self.label, w), keep)
    }

    pub fn union(&self, other: &BodyFamily) -> Result<BodyFamily, ClosureError> {
        let mut bodies = self.bodies.clone();
        for b in &other.bodies {
            if !bodies.contains(b) {
                bodies.push(b.clone());
            }
        }
        BodyFamily::new(format!("{} + {}", self.label, other.label), bodies)
    }

    pub fn len(&self) -> usize {
        self.bodies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bodies.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Vertices,
    Balas,
}

/// H-form of `R(L,P)` by the chosen construction.
pub fn relaxation_hrep_by(l: &SplitBody, p: &VRep, method: Method) -> Result<HRep, ClosureError> {
    Ok(match method {
        Method::Vertices => relaxation_hrep(&relax_vertices(l, p)?)?,
        Method::Balas => relax_balas(l, p)?,
    })
}

/// Canonical H-form of the intersection of `R(L,P)` over the family.
pub fn closure_hrep(p: &VRep, f: &BodyFamily, method: Method) -> Result<HRep, ClosureError> {
    let parts: Vec<Result<HRep, ClosureError>> = f.bodies.par_iter().map(|l| relaxation_hrep_by(l, p, method)).collect();
    let mut h = vrep_to_hrep(p)?;
    for part in parts {
        h = h.intersect(&part?);
    }
    Ok(canonicalize(&h)?)
}

fn hrep_as_vrep(h: &HRep) -> Result<VRep, ClosureError> {
    match hrep_to_vrep(h) {
        Ok(v) => Ok(v),
        Err(KernelError::Empty) => Ok(VRep::new(h.dim, Vec::new(), Vec::new())),
        Err(KernelError::NonPointed) => Err(ClosureError::NonPointed),
        Err(e) => Err(e.into()),
    }
}

/// Closure as a V-form; no vertices means empty.
pub fn closure(p: &VRep, f: &BodyFamily, method: Method) -> Result<VRep, ClosureError> {
    hrep_as_vrep(&closure_hrep(p, f, method)?)
}

/// Split sets `pi0 <= pi·x <= pi0 + 1` with primitive `pi` of sup-norm at most `bound` on the
/// integer coordinates. With P, `pi0` ranges over `[floor min pi·v, ceil max pi·v]` on P's
/// vertices; without P only `pi0 = 0` is used.
pub fn enumerate_split_sets(
    dim: usize,
    integer_vars: &[usize],
    bound: u64,
    p: Option<&VRep>,
    budget: usize,
) -> Result<BodyFamily, ClosureError> {
    if bound == 0 {
        return Err(ClosureError::ZeroBound);
    }
    let dirs = primitive_directions(integer_vars.len(), bound);
    let mut specs: Vec<(Vec<Int>, Int)> = Vec::new();
    for d in dirs {
        let mut pi = vec![Int::from(0); dim];
        for (k, &j) in integer_vars.iter().enumerate() {
            pi[j] = d[k].clone();
        }
        let (lo, hi) = match p {
            Some(p) if !p.vertices.is_empty() => {
                let pr = ints_to_rats(&pi);
                let vals: Vec<Rat> = p.vertices.iter().map(|v| dot(&pr, v)).collect();
                let lo = Int::try_from(vals.iter().min().unwrap().clone().floor()).unwrap();
                let hi = Int::try_from(vals.iter().max().unwrap().clone().ceiling()).unwrap();
                (lo, hi)
            }
            _ => (Int::from(0), Int::from(0)),
        };
        let mut o = lo;
        while o <= hi {
            specs.push((pi.clone(), o.clone()));
            if specs.len() > budget {
                return Err(ClosureError::BudgetExceeded { count: specs.len(), budget });
            }
            o += Int::from(1);
        }
    }
    let mut bodies = Vec::with_capacity(specs.len());
    for (pi, o) in specs {
        bodies.push(make_split_set(dim, integer_vars, &pi, &o)?);
    }
    let label = format!("split sets, |pi| <= {bound}");
    let mut f = BodyFamily::new(label, bodies)?;
    f.bodies.dedup();
    Ok(f)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectiveValue {
    Finite(Rat),
    Unbounded,
    Empty,
}

impl ObjectiveValue {
    fn proves(&self, delta0: &Rat) -> bool {
        match self {
            ObjectiveValue::Finite(v) => v >= delta0,
            ObjectiveValue::Empty => true,
            ObjectiveValue::Unbounded => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub hrep: HRep,
    /// `min delta·x` over this round's polyhedron.
    pub optimum: ObjectiveValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    Proved,
    Stalled,
    MaxRounds,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    /// Round 0 is P itself.
    pub rounds: Vec<Round>,
    pub proved: bool,
    pub rounds_used: usize,
    pub stop: StopReason,
    pub family_width: ExtRat,
    pub violated_faces: Vec<FaceRecord>,
    pub width_size_bound: Option<ExtRat>,
}

fn objective_over(h: &HRep, c: &Cut) -> Result<ObjectiveValue, ClosureError> {
    let out = lp_solve(&c.delta, Sense::Min, h)?;
    Ok(match out.status {
        LpStatus::Optimal => ObjectiveValue::Finite(out.optimum().clone()),
        LpStatus::Unbounded => ObjectiveValue::Unbounded,
        LpStatus::Infeasible => ObjectiveValue::Empty,
    })
}

/// `P^0 = P`, `P^k = closure(P^{k-1}, F)` until the cut holds, the polyhedron repeats, or
/// `max_rounds` closures have been taken.
pub fn iterated_closure(
    p: &VRep,
    f: &BodyFamily,
    objective: &Cut,
    max_rounds: usize,
    method: Method,
) -> Result<ProofTrace, ClosureError> {
    if max_rounds == 0 {
        return Err(ClosureError::ZeroRounds);
    }
    let mut h = vrep_to_hrep(p)?;
    let mut cur = p.clone();
    let optimum = objective_over(&h, objective)?;
    let mut proved = optimum.proves(&objective.delta0);
    let mut rounds = vec![Round { hrep: h.clone(), optimum }];
    let mut stop = if proved { StopReason::Proved } else { StopReason::MaxRounds };
    while !proved && rounds.len() <= max_rounds {
        let next = closure_hrep(&cur, f, method)?;
        let optimum = objective_over(&next, objective)?;
        proved = optimum.proves(&objective.delta0);
        let same = next == h;
        rounds.push(Round { hrep: next.clone(), optimum });
        if proved {
            stop = StopReason::Proved;
            break;
        }
        if same {
            stop = StopReason::Stalled;
            break;
        }
        cur = hrep_as_vrep(&next)?;
        h = next;
    }
    Ok(ProofTrace {
        rounds_used: rounds.len() - 1,
        rounds,
        proved,
        stop,
        family_width: f.declared_width.clone(),
        violated_faces: Vec::new(),
        width_size_bound: None,
    })
}

/// `P^x(delta, delta0)` with the outer description it is indexed against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TightProjection {
    /// Canonical, in the integer-coordinate space.
    pub px: HRep,
    /// Canonical H-form of P; rows are its inequalities followed by its equations.
    pub outer: HRep,
    /// Rows tight on all of `P(delta, delta0)`.
    pub m_eq: Vec<usize>,
}

impl TightProjection {
    pub fn rows(&self) -> Vec<Row> {
        self.outer.ineqs.iter().chain(&self.outer.eqs).cloned().collect()
    }
}

fn reversed(c: &Cut) -> (Vec<Rat>, Rat) {
    (c.delta.iter().map(|x| -x).collect(), -&c.delta0)
}

/// Rows of `outer` tight on every point of `set` (max-slack LP equal to zero); equations always.
fn tight_rows(outer: &HRep, set: &HRep) -> Result<Vec<usize>, ClosureError> {
    let m = outer.ineqs.len();
    let checks: Vec<Result<bool, KernelError>> = outer
        .ineqs
        .par_iter()
        .map(|r| {
            let out = lp_solve(&r.a, Sense::Max, set)?;
            Ok(out.status == LpStatus::Optimal && *out.optimum() == r.b)
        })
        .collect();
    let mut tight = Vec::new();
    for (i, c) in checks.into_iter().enumerate() {
        if c? {
            tight.push(i);
        }
    }
    tight.extend(m..m + outer.eqs.len());
    Ok(tight)
}

/// Projection onto the integer coordinates of `{(x,y) in P : delta·(x,y) = delta0}` after
/// checking that `delta0` is the mixed-integer optimum and that the projection of
/// `{delta·(x,y) <= delta0}` is the hull of its lattice points.
pub fn project_tight(inst: &Instance, c: &Cut, bx: Option<&IntBox>, budget: u64) -> Result<TightProjection, ClosureError> {
    let owned;
    let bx = match bx {
        Some(b) => b,
        None => {
            owned = default_box(inst, DEFAULT_BOX_MARGIN)?;
            &owned
        }
    };
    match mixed_integer_minimum(inst, &c.delta, bx, budget)? {
        MipValue::Finite(v) if v == c.delta0 => {}
        other => {
            let actual = match other {
                MipValue::Finite(v) => v.to_string(),
                MipValue::Unbounded => "-inf".into(),
                MipValue::Infeasible => "infeasible".into(),
            };
            return Err(ClosureError::NotOptimal { claimed: c.delta0.to_string(), actual });
        }
    }
    let outer = vrep_to_hrep(&inst.vrep)?;
    let (nd, nd0) = reversed(c);
    let mut below = outer.clone();
    below.push_ge(nd, nd0);
    let mut level = outer.clone();
    level.push_eq(c.delta.clone(), c.delta0.clone());

    let px_below = project(&below, &inst.integer_vars)?;
    let px = project(&level, &inst.integer_vars)?;
    let hull_box = bounding_box(&px_below)
        .map_err(|e| ClosureError::Unverifiable(e.to_string()))?
        .ok_or_else(|| ClosureError::Unverifiable("projection is unbounded".into()))?;
    if hull_box.size() > budget as u128 {
        return Err(ClosureError::Unverifiable("projection box exceeds budget".into()));
    }
    let lattice: Vec<Vec<Rat>> = hull_box
        .points()
        .into_iter()
        .map(|z| ints_to_rats(&z))
        .filter(|x| px_below.contains(x))
        .collect();
    if lattice.is_empty() {
        return Err(ClosureError::HullAssumption);
    }
    let hull = vrep_to_hrep(&VRep::new(inst.p(), lattice, Vec::new()))?;
    if hull != px_below || px != px_below {
        return Err(ClosureError::HullAssumption);
    }
    let m_eq = tight_rows(&outer, &below)?;
    Ok(TightProjection { px, outer, m_eq })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceKind {
    Violated,
    Safe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceRecord {
    /// Row indices of the outer description tight on the whole face (contains `M^=`).
    pub tight_rows: Vec<usize>,
    /// Canonical, in the integer-coordinate space.
    pub face: HRep,
    pub dimension: usize,
    pub kind: FaceKind,
    /// Checked for violated faces only.
    pub lattice_free: Option<bool>,
    /// Coefficients expressing the continuous part of delta in the span of the tight rows.
    pub span_coefficients: Option<Vec<Rat>>,
    /// A point of P over the face's relative interior that violates the cut.
    pub violating_point: Option<Vec<Rat>>,
    /// Whether the span test and the direct LP test agree.
    pub cross_check_agrees: bool,
}

fn face_dimension(face: &HRep) -> usize {
    face.dim - crate::exact_kernel::linalg::rank(&face.eqs.iter().map(|r| r.a.clone()).collect::<Vec<_>>(), face.dim)
}

/// All nonempty faces of a canonical polyhedron, by recursive facet fixing.
fn enumerate_faces(px: &HRep, budget: usize) -> Result<Vec<HRep>, ClosureError> {
    let start = canonicalize(px)?;
    if start.is_canonical_empty() {
        return Ok(Vec::new());
    }
    let mut seen: BTreeSet<Vec<Row>> = BTreeSet::new();
    let key = |h: &HRep| -> Vec<Row> { h.eqs.iter().chain(&h.ineqs).cloned().collect() };
    seen.insert(key(&start));
    let mut out = vec![start.clone()];
    let mut frontier = vec![start];
    while let Some(f) = frontier.pop() {
        for r in &f.ineqs {
            let mut g = f.clone();
            g.ineqs.retain(|x| x != r);
            g.eqs.push(r.clone());
            let g = canonicalize(&g)?;
            if g.is_canonical_empty() || !seen.insert(key(&g)) {
                continue;
            }
            if out.len() >= budget {
                return Err(ClosureError::BudgetExceeded { count: out.len() + 1, budget });
            }
            out.push(g.clone());
            frontier.push(g);
        }
    }
    out.sort_by(|a, b| face_dimension(b).cmp(&face_dimension(a)).then_with(|| key(a).cmp(&key(b))));
    Ok(out)
}

fn lift_face(inst: &Instance, face: &HRep) -> HRep {
    let n = inst.dim();
    let mut h = HRep::new(n);
    let spread = |a: &[Rat]| -> Vec<Rat> {
        let mut v = vec![zero(); n];
        for (k, &j) in inst.integer_vars.iter().enumerate() {
            v[j] = a[k].clone();
        }
        v
    };
    for r in &face.ineqs {
        h.push_ge(spread(&r.a), r.b.clone());
    }
    for r in &face.eqs {
        h.push_eq(spread(&r.a), r.b.clone());
    }
    h
}

/// Classification of every nonempty face of `P^x(delta, delta0)` by the span test on the
/// continuous parts of the tight rows, cross-checked by an LP over the face's relative interior.
pub fn violated_faces(
    tp: &TightProjection,
    inst: &Instance,
    c: &Cut,
    bx: Option<&IntBox>,
    budget: u64,
    face_budget: usize,
) -> Result<Vec<FaceRecord>, ClosureError> {
    let faces = enumerate_faces(&tp.px, face_budget)?;
    let cont = inst.continuous_vars();
    let dy: Vec<Rat> = cont.iter().map(|&j| c.delta[j].clone()).collect();
    let rows = tp.rows();
    let (nd, nd0) = reversed(c);
    let mut below = tp.outer.clone();
    below.push_ge(nd, nd0);

    let records: Vec<Result<FaceRecord, ClosureError>> = faces
        .par_iter()
        .map(|face| {
            let set = below.intersect(&lift_face(inst, face));
            let tight_rows = tight_rows(&tp.outer, &set)?;
            let (in_span, span_coefficients) = if cont.is_empty() {
                (true, Some(Vec::new()))
            } else {
                let gens: Vec<Vec<Rat>> =
                    tight_rows.iter().map(|&i| cont.iter().map(|&j| rows[i].a[j].clone()).collect()).collect();
                let sm = span_membership(&dy, &gens)?;
                (sm.member, sm.coefficients)
            };
            let kind = if in_span { FaceKind::Safe } else { FaceKind::Violated };

            let xbar = relative_interior_point(face)?;
            let mut fixed = HRep::new(inst.dim());
            fixed.ineqs = tp.outer.ineqs.clone();
            fixed.eqs = tp.outer.eqs.clone();
            for (k, &j) in inst.integer_vars.iter().enumerate() {
                let mut e = vec![zero(); inst.dim()];
                e[j] = one();
                fixed.push_eq(e, xbar[k].clone());
            }
            let out = lp_solve(&c.delta, Sense::Min, &fixed)?;
            let violating_point = match out.status {
                LpStatus::Optimal if *out.optimum() < c.delta0 => Some(out.point().to_vec()),
                LpStatus::Unbounded => {
                    let base = lp_solve(&vec![zero(); inst.dim()], Sense::Min, &fixed)?.witness_point.unwrap();
                    let ray = out.witness_ray.unwrap();
                    let gap = &c.delta0 - c.value(&base);
                    let step = if gap > 0 { gap / -c.value(&ray) + one() } else { one() };
                    Some(base.iter().zip(&ray).map(|(a, r)| a + &step * r).collect())
                }
                _ => None,
            };
            let cross_check_agrees = violating_point.is_some() == (kind == FaceKind::Violated);
            let lattice_free = if kind == FaceKind::Violated {
                let owned;
                let b = match bx {
                    Some(b) => b,
                    None => {
                        owned = bounding_box(face)?.ok_or(BodyError::NeedsExplicitBox)?;
                        &owned
                    }
                };
                Some(lattice_free_hrep(face, b, budget)?.free)
            } else {
                None
            };
            Ok(FaceRecord {
                tight_rows,
                face: face.clone(),
                dimension: face_dimension(face),
                kind,
                lattice_free,
                span_coefficients: if in_span { span_coefficients } else { None },
                violating_point,
                cross_check_agrees,
            })
        })
        .collect();
    records.into_iter().collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityWidth {
    /// Candidate-restricted upper bound; zero when no face is violated.
    pub value: ExtRat,
    /// Per violated face (index into the face list).
    pub per_face: Vec<(usize, WidthSize)>,
}

pub fn width_size_of_inequality(
    faces: &[FaceRecord],
    candidates: &BodyFamily,
    bx: Option<&IntBox>,
    budget: u64,
) -> Result<InequalityWidth, ClosureError> {
    let mut value = ExtRat::Finite(zero());
    let mut per_face = Vec::new();
    for (i, f) in faces.iter().enumerate() {
        if f.kind != FaceKind::Violated {
            continue;
        }
        let ws = width_size_over_family(&f.face, &candidates.bodies, bx, budget)?;
        value = value.max(ws.size.clone());
        per_face.push((i, ws));
    }
    Ok(InequalityWidth { value, per_face })
}

/// Face analysis of the inequality plus an iterated closure run.
pub fn prove(
    inst: &Instance,
    family: &BodyFamily,
    objective: &Cut,
    max_rounds: usize,
    method: Method,
    candidates: Option<&BodyFamily>,
    budget: u64,
) -> Result<ProofTrace, ClosureError> {
    let mut trace = iterated_closure(&inst.vrep, family, objective, max_rounds, method)?;
    let tp = project_tight(inst, objective, None, budget)?;
    let faces = violated_faces(&tp, inst, objective, None, budget, DEFAULT_FACE_BUDGET)?;
    let cands = candidates.unwrap_or(family);
    trace.width_size_bound = Some(width_size_of_inequality(&faces, cands, None, budget)?.value);
    trace.violated_faces = faces.into_iter().filter(|f| f.kind == FaceKind::Violated).collect();
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleMilp {
    pub p: usize,
    pub instance: Instance,
    pub hrep: HRep,
    /// `-y >= 0`.
    pub target: Cut,
    /// `S^p` on the x coordinates.
    pub body: SplitBody,
}

/// `-x_i + y <= 0`, `sum x + y <= p`, `y >= 0` over `(x, y)` with x integral.
pub fn example_milp(p: usize) -> Result<ExampleMilp, ClosureError> {
    if p == 0 {
        return Err(ClosureError::BadP);
    }
    let n = p + 1;
    let mut h = HRep::new(n);
    for i in 0..p {
        let mut a = vec![zero(); n];
        a[i] = one();
        a[p] = -one();
        h.push_ge(a, zero());
    }
    let mut a = vec![-one(); n];
    a[p] = -one();
    h.push_ge(a, -Rat::from(p as u64));
    let mut a = vec![zero(); n];
    a[p] = one();
    h.push_ge(a, zero());
    let hrep = canonicalize(&h)?;
    let vrep = hrep_to_vrep(&hrep)?;
    let integer_vars: Vec<usize> = (0..p).collect();
    let mut delta = vec![zero(); n];
    delta[p] = -one();
    let target = Cut::new(delta, zero())?;
    let body = make_simplex_body(p)?.lifted(n, &integer_vars)?;
    Ok(ExampleMilp { p, instance: Instance::new(vrep, integer_vars), hrep, target, body })
}

/// Whether every row of `inner`'s vertices and rays satisfies `outer` (V-form inside H-form).
pub fn vrep_within(inner: &VRep, outer: &HRep) -> bool {
    inner.vertices.iter().all(|v| outer.contains(v))
        && inner.rays.iter().all(|r| {
            outer.ineqs.iter().all(|row| dot(&row.a, r) >= 0) && outer.eqs.iter().all(|row| is_zero(&dot(&row.a, r)))
        })
}

/// Exact inclusion of H-polyhedra by one LP per row of `outer`.
pub fn hrep_within(inner: &HRep, outer: &HRep) -> Result<bool, ClosureError> {
    if !inner.is_feasible() {
        return Ok(true);
    }
    for r in &outer.ineqs {
        let out = lp_solve(&r.a, Sense::Min, inner)?;
        if out.status != LpStatus::Optimal || *out.optimum() < r.b {
            return Ok(false);
        }
    }
    for r in &outer.eqs {
        for s in [Sense::Min, Sense::Max] {
            let out = lp_solve(&r.a, s, inner)?;
            if out.status != LpStatus::Optimal || *out.optimum() != r.b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn int_vec(xs: &[i64]) -> Vec<Int> {
    xs.iter().map(|&x| Int::from(x)).collect()
}
