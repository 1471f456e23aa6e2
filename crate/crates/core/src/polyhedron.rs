//! Mixed-integer sets given by a V-representation plus integer-constrained coordinates,
//! and brute-force oracles for their mixed-integer points.

use malachite_base::num::arithmetic::traits::{Ceiling, Floor};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact_kernel::hrep::{HRep, VRep};
use crate::exact_kernel::linalg::dot;
use crate::exact_kernel::lp::{lp_solve, LpStatus, Sense};
use crate::exact_kernel::rational::{from_int, is_integer, is_zero, zero, Int, Rat};
use crate::exact_kernel::{hrep_to_vrep, vrep_to_hrep, KernelError};

pub const DEFAULT_ENUMERATION_BUDGET: u64 = 250_000;
pub const DEFAULT_BOX_MARGIN: i64 = 1;

/// `conv(vertices) + cone(rays)` with the coordinates in `integer_vars` (0-based, sorted)
/// constrained to be integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    pub vrep: VRep,
    pub integer_vars: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationIssue {
    NoVertices,
    NoIntegerVars,
    IntegerVarOutOfRange(usize),
    DuplicateIntegerVar(usize),
    WrongLength { what: &'static str, index: usize, len: usize },
    NonIntegerRay(usize),
    ZeroRay(usize),
    DuplicateVertex(usize),
    DuplicateRay(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid instance: {0:?}")]
    Invalid(Vec<ValidationIssue>),
    #[error("enumeration box has {size} lattice points, budget is {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
    #[error("polyhedron is unbounded along an integer coordinate; an explicit box is required")]
    NeedsExplicitBox,
    #[error("polyhedron is unbounded along an integer coordinate beyond the box")]
    UnboundedIntegerDirection,
    #[error("box has {found} coordinates, expected {expected}")]
    BoxDimension { expected: usize, found: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Integer bounds on the integer-constrained coordinates, in `integer_vars` order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntBox {
    pub lo: Vec<Int>,
    pub hi: Vec<Int>,
}

impl IntBox {
    pub fn size(&self) -> u128 {
        let mut s: u128 = 1;
        for (l, h) in self.lo.iter().zip(&self.hi) {
            if h < l {
                return 0;
            }
            let w = u128::try_from(&(h - l + Int::from(1))).unwrap_or(u128::MAX);
            s = s.saturating_mul(w);
        }
        s
    }

    pub fn points(&self) -> Vec<Vec<Int>> {
        if self.size() == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = self.lo.clone();
        loop {
            out.push(cur.clone());
            let mut k = 0;
            loop {
                if k == cur.len() {
                    return out;
                }
                if cur[k] < self.hi[k] {
                    cur[k] += Int::from(1);
                    break;
                }
                cur[k] = self.lo[k].clone();
                k += 1;
            }
        }
    }

    pub fn contains(&self, z: &[Int]) -> bool {
        z.iter().zip(self.lo.iter().zip(&self.hi)).all(|(x, (l, h))| l <= x && x <= h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedIntegerPointSet {
    pub points: Vec<Vec<Rat>>,
    pub exhausted_box: IntBox,
}

impl Instance {
    pub fn new(vrep: VRep, integer_vars: Vec<usize>) -> Self {
        Instance { vrep, integer_vars }
    }

    pub fn dim(&self) -> usize {
        self.vrep.dim
    }

    pub fn p(&self) -> usize {
        self.integer_vars.len()
    }

    pub fn q(&self) -> usize {
        self.dim() - self.p()
    }

    pub fn continuous_vars(&self) -> Vec<usize> {
        (0..self.dim()).filter(|j| !self.integer_vars.contains(j)).collect()
    }

    pub fn is_integer_var(&self, j: usize) -> bool {
        self.integer_vars.contains(&j)
    }

    pub fn hrep(&self) -> Result<HRep, PolyError> {
        Ok(vrep_to_hrep(&self.vrep)?)
    }

    /// Whether a point is integral on the integer-constrained coordinates.
    pub fn is_mixed_integer(&self, x: &[Rat]) -> bool {
        self.integer_vars.iter().all(|&j| is_integer(&x[j]))
    }

    /// Assembles a full point from integer and continuous parts.
    pub fn embed(&self, z: &[Int], y: &[Rat]) -> Vec<Rat> {
        let mut x = vec![zero(); self.dim()];
        for (k, &j) in self.integer_vars.iter().enumerate() {
            x[j] = from_int(&z[k]);
        }
        for (k, j) in self.continuous_vars().into_iter().enumerate() {
            x[j] = y[k].clone();
        }
        x
    }
}

pub fn validate(inst: &Instance) -> ValidationReport {
    let mut issues = Vec::new();
    let n = inst.dim();
    let v = &inst.vrep;
    if v.vertices.is_empty() {
        issues.push(ValidationIssue::NoVertices);
    }
    if inst.integer_vars.is_empty() {
        issues.push(ValidationIssue::NoIntegerVars);
    }
    let mut seen = Vec::new();
    for &j in &inst.integer_vars {
        if j >= n {
            issues.push(ValidationIssue::IntegerVarOutOfRange(j));
        }
        if seen.contains(&j) {
            issues.push(ValidationIssue::DuplicateIntegerVar(j));
        }
        seen.push(j);
    }
    for (i, p) in v.vertices.iter().enumerate() {
        if p.len() != n {
            issues.push(ValidationIssue::WrongLength { what: "vertex", index: i, len: p.len() });
        } else if v.vertices[..i].contains(p) {
            issues.push(ValidationIssue::DuplicateVertex(i));
        }
    }
    for (i, r) in v.rays.iter().enumerate() {
        if r.len() != n {
            issues.push(ValidationIssue::WrongLength { what: "ray", index: i, len: r.len() });
            continue;
        }
        if !r.iter().all(is_integer) {
            issues.push(ValidationIssue::NonIntegerRay(i));
        }
        if r.iter().all(is_zero) {
            issues.push(ValidationIssue::ZeroRay(i));
        } else if v.rays[..i].contains(r) {
            issues.push(ValidationIssue::DuplicateRay(i));
        }
    }
    ValidationReport { issues }
}

fn checked(inst: &Instance) -> Result<(), PolyError> {
    let rep = validate(inst);
    if rep.is_valid() {
        Ok(())
    } else {
        Err(PolyError::Invalid(rep.issues))
    }
}

/// Integer bounding box of the vertices on the integer coordinates, widened by `margin`.
pub fn default_box(inst: &Instance, margin: i64) -> Result<IntBox, PolyError> {
    checked(inst)?;
    if inst.vrep.rays.iter().any(|r| inst.integer_vars.iter().any(|&j| !is_zero(&r[j]))) {
        return Err(PolyError::NeedsExplicitBox);
    }
    let m = Int::from(margin);
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for &j in &inst.integer_vars {
        let min = inst.vrep.vertices.iter().map(|v| &v[j]).min().unwrap();
        let max = inst.vrep.vertices.iter().map(|v| &v[j]).max().unwrap();
        lo.push(Int::try_from(min.clone().floor()).unwrap() - &m);
        hi.push(Int::try_from(max.clone().ceiling()).unwrap() + &m);
    }
    Ok(IntBox { lo, hi })
}

/// H-representation of the fiber `{y : (z, y) in P}` over the continuous coordinates.
pub fn fiber(inst: &Instance, h: &HRep, z: &[Int]) -> HRep {
    let cont = inst.continuous_vars();
    let mut f = HRep::new(cont.len());
    let shift = |a: &[Rat], b: &Rat| -> (Vec<Rat>, Rat) {
        let mut rhs = b.clone();
        for (k, &j) in inst.integer_vars.iter().enumerate() {
            if !is_zero(&a[j]) {
                rhs -= &a[j] * from_int(&z[k]);
            }
        }
        (cont.iter().map(|&j| a[j].clone()).collect(), rhs)
    };
    for r in &h.ineqs {
        let (a, b) = shift(&r.a, &r.b);
        f.push_ge(a, b);
    }
    for r in &h.eqs {
        let (a, b) = shift(&r.a, &r.b);
        f.push_eq(a, b);
    }
    f
}

fn check_box(inst: &Instance, bx: &IntBox, budget: u64) -> Result<(), PolyError> {
    if bx.lo.len() != inst.p() || bx.hi.len() != inst.p() {
        return Err(PolyError::BoxDimension { expected: inst.p(), found: bx.lo.len() });
    }
    let size = bx.size();
    if size > budget as u128 {
        return Err(PolyError::BudgetExceeded { size, budget });
    }
    Ok(())
}

/// All lattice points of the box that lift to a point of P, each with one feasible
/// continuous completion (a vertex of its fiber).
pub fn enumerate_mixed_integer_points(inst: &Instance, bx: &IntBox, budget: u64) -> Result<MixedIntegerPointSet, PolyError> {
    checked(inst)?;
    check_box(inst, bx, budget)?;
    let h = inst.hrep()?;
    let q = inst.q();
    let found: Vec<Option<Vec<Rat>>> = bx
        .points()
        .par_iter()
        .map(|z| {
            if q == 0 {
                let x = inst.embed(z, &[]);
                return h.contains(&x).then_some(x);
            }
            let f = fiber(inst, &h, z);
            let out = lp_solve(&vec![zero(); q], Sense::Min, &f).expect("fiber dimensions agree");
            (out.status == LpStatus::Optimal).then(|| inst.embed(z, out.point()))
        })
        .collect();
    Ok(MixedIntegerPointSet { points: found.into_iter().flatten().collect(), exhausted_box: bx.clone() })
}

/// Convex hull of the mixed-integer points of P within the box, plus the rays of P.
/// `None` when there are no mixed-integer points in the box.
pub fn mixed_integer_hull(inst: &Instance, bx: &IntBox, budget: u64) -> Result<Option<VRep>, PolyError> {
    checked(inst)?;
    check_box(inst, bx, budget)?;
    if inst.vrep.rays.iter().any(|r| inst.integer_vars.iter().any(|&j| !is_zero(&r[j]))) {
        return Err(PolyError::UnboundedIntegerDirection);
    }
    let h = inst.hrep()?;
    let q = inst.q();
    let parts: Vec<Result<Vec<Vec<Rat>>, KernelError>> = bx
        .points()
        .par_iter()
        .map(|z| {
            if q == 0 {
                let x = inst.embed(z, &[]);
                return Ok(if h.contains(&x) { vec![x] } else { Vec::new() });
            }
            match hrep_to_vrep(&fiber(inst, &h, z)) {
                Ok(fv) => Ok(fv.vertices.iter().map(|y| inst.embed(z, y)).collect()),
                Err(KernelError::Empty) => Ok(Vec::new()),
                Err(e) => Err(e),
            }
        })
        .collect();
    let mut pts = Vec::new();
    for p in parts {
        pts.extend(p?);
    }
    if pts.is_empty() {
        return Ok(None);
    }
    let raw = VRep::new(inst.dim(), pts, inst.vrep.rays.clone());
    let hull = hrep_to_vrep(&vrep_to_hrep(&raw)?)?;
    Ok(Some(hull))
}

/// Optimum of a linear objective over the mixed-integer points in the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MipValue {
    Infeasible,
    Unbounded,
    Finite(Rat),
}

/// `min c·x` over mixed-integer points of P whose integer part lies in the box.
pub fn mixed_integer_minimum(inst: &Instance, c: &[Rat], bx: &IntBox, budget: u64) -> Result<MipValue, PolyError> {
    checked(inst)?;
    check_box(inst, bx, budget)?;
    if c.len() != inst.dim() {
        return Err(PolyError::Kernel(KernelError::DimensionMismatch { expected: inst.dim(), found: c.len() }));
    }
    let h = inst.hrep()?;
    let cont = inst.continuous_vars();
    let cy: Vec<Rat> = cont.iter().map(|&j| c[j].clone()).collect();
    let vals: Vec<MipValue> = bx
        .points()
        .par_iter()
        .map(|z| {
            let base = dot(c, &inst.embed(z, &vec![zero(); cont.len()]));
            if cont.is_empty() {
                let x = inst.embed(z, &[]);
                return if h.contains(&x) { MipValue::Finite(base) } else { MipValue::Infeasible };
            }
            let out = lp_solve(&cy, Sense::Min, &fiber(inst, &h, z)).expect("fiber dimensions agree");
            match out.status {
                LpStatus::Optimal => MipValue::Finite(base + out.optimum()),
                LpStatus::Unbounded => MipValue::Unbounded,
                LpStatus::Infeasible => MipValue::Infeasible,
            }
        })
        .collect();
    let mut best = MipValue::Infeasible;
    for v in vals {
        best = match (best, v) {
            (MipValue::Unbounded, _) | (_, MipValue::Unbounded) => MipValue::Unbounded,
            (MipValue::Infeasible, x) | (x, MipValue::Infeasible) => x,
            (MipValue::Finite(a), MipValue::Finite(b)) => MipValue::Finite(a.min(b)),
        };
    }
    Ok(best)
}

/// Whether a point of R^n satisfies `delta·x >= delta0` for every listed point.
pub fn all_satisfy(points: &[Vec<Rat>], delta: &[Rat], delta0: &Rat) -> bool {
    points.iter().all(|x| dot(delta, x) >= *delta0)
}
