//! Bodies with integral facets supported on the integer coordinates, and their widths.

use malachite_base::num::arithmetic::traits::{Ceiling, Floor};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact_kernel::hrep::{implicit_equalities, HRep, Row};
use crate::exact_kernel::linalg::dot;
use crate::exact_kernel::lp::{lp_solve, LpStatus, Sense};
use crate::exact_kernel::rational::{
    from_int, gcd_ints, int_abs, ints_to_rats, is_neg, is_pos, one, zero, ExtRat, Int, Rat,
};
use crate::exact_kernel::{canonicalize, hrep_to_vrep, KernelError};
use crate::polyhedron::IntBox;

pub const DEFAULT_LATTICE_BUDGET: u64 = 250_000;

/// One facet `pi·x >= pi0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub pi: Vec<Int>,
    pub pi0: Int,
}

/// `{x : pi^k·x >= pi0^k}` with integral, gcd-normalized facets supported on `integer_vars`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitBody {
    pub dim: usize,
    pub integer_vars: Vec<usize>,
    pub facets: Vec<Facet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BodyError {
    #[error("facet {0} has a zero normal on the integer coordinates")]
    ZeroFacet(usize),
    #[error("facet {0} is supported off the integer coordinates")]
    SupportOffIntegerVars(usize),
    #[error("facet {0} has the wrong length")]
    FacetLength(usize),
    #[error("split direction must be nonzero")]
    ZeroDirection,
    #[error("split direction is not primitive (gcd {0})")]
    NotPrimitive(String),
    #[error("measuring vector must be nonzero and supported on the integer coordinates")]
    BadVector,
    #[error("body is empty")]
    Empty,
    #[error("set is empty")]
    EmptySet,
    #[error("set is not lattice point free; interior lattice point {0:?}")]
    NotLatticeFree(Vec<String>),
    #[error("set is unbounded; an explicit box is required")]
    NeedsExplicitBox,
    #[error("box has {size} lattice points, budget is {budget}")]
    BudgetExceeded { size: u128, budget: u64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

impl SplitBody {
    pub fn new(dim: usize, integer_vars: Vec<usize>, facets: Vec<(Vec<Int>, Int)>) -> Result<Self, BodyError> {
        let mut out = Vec::with_capacity(facets.len());
        for (k, (pi, pi0)) in facets.into_iter().enumerate() {
            if pi.len() != dim {
                return Err(BodyError::FacetLength(k));
            }
            if (0..dim).any(|j| !integer_vars.contains(&j) && pi[j] != 0) {
                return Err(BodyError::SupportOffIntegerVars(k));
            }
            if pi.iter().all(|x| *x == 0) {
                return Err(BodyError::ZeroFacet(k));
            }
            let g = Int::from(gcd_ints(pi.iter().chain(std::iter::once(&pi0))));
            out.push(Facet { pi: pi.iter().map(|x| x / &g).collect(), pi0: pi0 / &g });
        }
        out.sort();
        out.dedup();
        let mut iv = integer_vars;
        iv.sort();
        iv.dedup();
        Ok(SplitBody { dim, integer_vars: iv, facets: out })
    }

    pub fn hrep(&self) -> HRep {
        let mut h = HRep::new(self.dim);
        for f in &self.facets {
            h.push_ge(ints_to_rats(&f.pi), from_int(&f.pi0));
        }
        h
    }

    /// The body as a subset of the integer-coordinate space.
    pub fn hrep_integer_space(&self) -> HRep {
        let mut h = HRep::new(self.integer_vars.len());
        for f in &self.facets {
            h.push_ge(self.integer_vars.iter().map(|&j| from_int(&f.pi[j])).collect(), from_int(&f.pi0));
        }
        h
    }

    pub fn facet_slack(&self, k: usize, x: &[Rat]) -> Rat {
        let f = &self.facets[k];
        dot(&ints_to_rats(&f.pi), x) - from_int(&f.pi0)
    }

    /// Strict satisfaction of every facet.
    pub fn interior_contains(&self, x: &[Rat]) -> bool {
        (0..self.facets.len()).all(|k| is_pos(&self.facet_slack(k, x)))
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        (0..self.facets.len()).all(|k| !is_neg(&self.facet_slack(k, x)))
    }

    /// Re-embeds a body living on all coordinates of R^p into R^dim, coordinate k
    /// going to `integer_vars[k]`.
    pub fn lifted(&self, dim: usize, integer_vars: &[usize]) -> Result<SplitBody, BodyError> {
        if integer_vars.len() != self.dim {
            return Err(BodyError::DimensionMismatch { expected: self.dim, found: integer_vars.len() });
        }
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut pi = vec![Int::from(0); dim];
                for (k, &j) in integer_vars.iter().enumerate() {
                    pi[j] = f.pi[k].clone();
                }
                (pi, f.pi0.clone())
            })
            .collect();
        SplitBody::new(dim, integer_vars.to_vec(), facets)
    }

    pub fn is_empty(&self) -> bool {
        !self.hrep().is_feasible()
    }
}

/// `{x : pi0 <= pi·x <= pi0 + 1}`.
pub fn make_split_set(dim: usize, integer_vars: &[usize], pi: &[Int], pi0: &Int) -> Result<SplitBody, BodyError> {
    if pi.len() != dim {
        return Err(BodyError::DimensionMismatch { expected: dim, found: pi.len() });
    }
    if pi.iter().all(|x| *x == 0) {
        return Err(BodyError::ZeroDirection);
    }
    let g = gcd_ints(pi.iter());
    if g != 1u32 {
        return Err(BodyError::NotPrimitive(g.to_string()));
    }
    let neg: Vec<Int> = pi.iter().map(|x| -x).collect();
    SplitBody::new(
        dim,
        integer_vars.to_vec(),
        vec![(pi.to_vec(), pi0.clone()), (neg, -(pi0 + Int::from(1)))],
    )
}

/// `S^p = {x in R^p : x >= 0, sum x <= p}` with every coordinate integer.
pub fn make_simplex_body(p: usize) -> Result<SplitBody, BodyError> {
    if p == 0 {
        return Err(BodyError::ZeroDirection);
    }
    let mut facets = Vec::new();
    for i in 0..p {
        let mut e = vec![Int::from(0); p];
        e[i] = Int::from(1);
        facets.push((e, Int::from(0)));
    }
    facets.push((vec![Int::from(-1); p], -Int::from(p as u64)));
    SplitBody::new(p, (0..p).collect(), facets)
}

/// `max v·x - min v·x` over the body.
pub fn width_along(l: &SplitBody, v: &[Int]) -> Result<ExtRat, BodyError> {
    if v.len() != l.dim || v.iter().all(|x| *x == 0) {
        return Err(BodyError::BadVector);
    }
    if (0..l.dim).any(|j| !l.integer_vars.contains(&j) && v[j] != 0) {
        return Err(BodyError::BadVector);
    }
    let h = l.hrep();
    let c = ints_to_rats(v);
    let hi = lp_solve(&c, Sense::Max, &h)?;
    match hi.status {
        LpStatus::Infeasible => return Err(BodyError::Empty),
        LpStatus::Unbounded => return Ok(ExtRat::PlusInfinity),
        LpStatus::Optimal => {}
    }
    let lo = lp_solve(&c, Sense::Min, &h)?;
    match lo.status {
        LpStatus::Optimal => Ok(ExtRat::Finite(hi.optimum() - lo.optimum())),
        _ => Ok(ExtRat::PlusInfinity),
    }
}

pub fn max_facet_width(l: &SplitBody) -> Result<ExtRat, BodyError> {
    if l.is_empty() {
        return Err(BodyError::Empty);
    }
    let widths: Vec<Result<ExtRat, BodyError>> = l.facets.par_iter().map(|f| width_along(l, &f.pi)).collect();
    let mut best = ExtRat::Finite(zero());
    for w in widths {
        best = best.max(w?);
    }
    Ok(best)
}

/// Whether every recession direction of the body is a lineality direction.
pub fn recession_is_linear(l: &SplitBody) -> Result<bool, BodyError> {
    let mut cone = HRep::new(l.dim);
    for f in &l.facets {
        cone.push_ge(ints_to_rats(&f.pi), zero());
    }
    for f in &l.facets {
        let out = lp_solve(&ints_to_rats(&f.pi), Sense::Max, &cone)?;
        if out.status != LpStatus::Optimal || is_pos(out.optimum()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFreeReport {
    pub free: bool,
    /// A lattice point in the relative interior, when one exists in the box.
    pub witness: Option<Vec<Int>>,
}

/// Integer box covering a bounded set, or `None` if unbounded.
pub fn bounding_box(h: &HRep) -> Result<Option<IntBox>, BodyError> {
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for j in 0..h.dim {
        let mut e = vec![zero(); h.dim];
        e[j] = one();
        let a = lp_solve(&e, Sense::Min, h)?;
        let b = lp_solve(&e, Sense::Max, h)?;
        if a.status == LpStatus::Infeasible {
            return Err(BodyError::EmptySet);
        }
        if a.status != LpStatus::Optimal || b.status != LpStatus::Optimal {
            return Ok(None);
        }
        lo.push(Int::try_from(a.optimum().clone().floor()).unwrap());
        hi.push(Int::try_from(b.optimum().clone().ceiling()).unwrap());
    }
    Ok(Some(IntBox { lo, hi }))
}

/// Lattice points of the relative interior of `q` inside the box.
/// The relative interior is strict satisfaction of all inequalities that are not implicit equalities.
pub fn lattice_free_hrep(q: &HRep, bx: &IntBox, budget: u64) -> Result<LatticeFreeReport, BodyError> {
    let size = bx.size();
    if size > budget as u128 {
        return Err(BodyError::BudgetExceeded { size, budget });
    }
    if bx.lo.len() != q.dim {
        return Err(BodyError::DimensionMismatch { expected: q.dim, found: bx.lo.len() });
    }
    let c = canonicalize(q)?;
    if c.is_canonical_empty() {
        return Ok(LatticeFreeReport { free: true, witness: None });
    }
    let witness = bx.points().into_par_iter().find_first(|z| {
        let x = ints_to_rats(z);
        c.eqs.iter().all(|r| r.slack(&x) == 0) && c.ineqs.iter().all(|r| is_pos(&r.slack(&x)))
    });
    Ok(LatticeFreeReport { free: witness.is_none(), witness })
}

/// Lattice-point-freeness of the body in the integer-coordinate space.
pub fn is_lattice_point_free(l: &SplitBody, bx: Option<&IntBox>, budget: u64) -> Result<LatticeFreeReport, BodyError> {
    let h = l.hrep_integer_space();
    let owned;
    let bx = match bx {
        Some(b) => b,
        None => {
            owned = bounding_box(&h)?.ok_or(BodyError::NeedsExplicitBox)?;
            &owned
        }
    };
    lattice_free_hrep(&h, bx, budget)
}

/// A point in the relative interior of a nonempty set: the vertex average plus the
/// averaged ray sum for pointed sets, an LP-built point otherwise.
pub fn relative_interior_point(q: &HRep) -> Result<Vec<Rat>, BodyError> {
    match hrep_to_vrep(q) {
        Ok(v) => {
            let nv = Rat::from(v.vertices.len() as u64);
            let nr = Rat::from(v.rays.len() as u64 + 1);
            let mut x = vec![zero(); q.dim];
            for p in &v.vertices {
                for (xi, pi) in x.iter_mut().zip(p) {
                    *xi += pi / &nv;
                }
            }
            for r in &v.rays {
                for (xi, ri) in x.iter_mut().zip(r) {
                    *xi += ri / &nr;
                }
            }
            Ok(x)
        }
        Err(KernelError::Empty) => Err(BodyError::EmptySet),
        Err(KernelError::NonPointed) => lp_relative_interior_point(q),
        Err(e) => Err(e.into()),
    }
}

fn lp_relative_interior_point(q: &HRep) -> Result<Vec<Rat>, BodyError> {
    let implicit = implicit_equalities(q);
    let mut pts: Vec<Vec<Rat>> = Vec::new();
    for (i, r) in q.ineqs.iter().enumerate() {
        if implicit.contains(&i) {
            continue;
        }
        if pts.iter().any(|p| is_pos(&r.slack(p))) {
            continue;
        }
        let out = lp_solve(&r.a, Sense::Max, q)?;
        let p = match out.status {
            LpStatus::Optimal => out.witness_point.unwrap(),
            LpStatus::Unbounded => {
                let base = lp_solve(&vec![zero(); q.dim], Sense::Min, q)?.witness_point.unwrap();
                let ray = out.witness_ray.unwrap();
                base.iter().zip(&ray).map(|(a, b)| a + b).collect()
            }
            LpStatus::Infeasible => return Err(BodyError::EmptySet),
        };
        pts.push(p);
    }
    if pts.is_empty() {
        let out = lp_solve(&vec![zero(); q.dim], Sense::Min, q)?;
        return out.witness_point.ok_or(BodyError::EmptySet);
    }
    let k = Rat::from(pts.len() as u64);
    let mut x = vec![zero(); q.dim];
    for p in &pts {
        for (xi, pi) in x.iter_mut().zip(p) {
            *xi += pi / &k;
        }
    }
    Ok(x)
}

/// `ri(Q) ⊆ int(L)` for Q in the integer-coordinate space: Q ⊆ L by per-facet LPs and
/// one relative interior point of Q strictly inside L.
pub fn contains_relative_interior(q: &HRep, l: &SplitBody) -> Result<bool, BodyError> {
    let lh = l.hrep_integer_space();
    if q.dim != lh.dim {
        return Err(BodyError::DimensionMismatch { expected: lh.dim, found: q.dim });
    }
    if !q.is_feasible() {
        return Err(BodyError::EmptySet);
    }
    for r in &lh.ineqs {
        let out = lp_solve(&r.a, Sense::Min, q)?;
        if out.status != LpStatus::Optimal || *out.optimum() < r.b {
            return Ok(false);
        }
    }
    let x = relative_interior_point(q)?;
    Ok(lh.ineqs.iter().all(|r: &Row| is_pos(&r.slack(&x))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidthSize {
    /// Upper bound on the width size, restricted to the supplied candidates.
    pub size: ExtRat,
    pub argmin: Option<SplitBody>,
}

/// Smallest max-facet-width among candidates whose interior contains `ri(q)`.
pub fn width_size_over_family(
    q: &HRep,
    candidates: &[SplitBody],
    bx: Option<&IntBox>,
    budget: u64,
) -> Result<WidthSize, BodyError> {
    let owned;
    let bx = match bx {
        Some(b) => b,
        None => {
            owned = bounding_box(q)?.ok_or(BodyError::NeedsExplicitBox)?;
            &owned
        }
    };
    let rep = lattice_free_hrep(q, bx, budget)?;
    if let Some(w) = rep.witness {
        return Err(BodyError::NotLatticeFree(w.iter().map(|x| x.to_string()).collect()));
    }
    let evals: Vec<Result<Option<ExtRat>, BodyError>> = candidates
        .par_iter()
        .map(|l| {
            if contains_relative_interior(q, l)? {
                Ok(Some(max_facet_width(l)?))
            } else {
                Ok(None)
            }
        })
        .collect();
    let mut best: Option<(ExtRat, usize)> = None;
    for (i, e) in evals.into_iter().enumerate() {
        if let Some(w) = e? {
            if best.as_ref().is_none_or(|(b, _)| w < *b) {
                best = Some((w, i));
            }
        }
    }
    Ok(match best {
        Some((w, i)) => WidthSize { size: w, argmin: Some(candidates[i].clone()) },
        None => WidthSize { size: ExtRat::PlusInfinity, argmin: None },
    })
}

/// Primitive integer vectors of R^p with sup-norm at most `bound`, one per sign class
/// (first nonzero entry positive), sorted.
pub fn primitive_directions(p: usize, bound: u64) -> Vec<Vec<Int>> {
    let b = bound as i64;
    let mut out = Vec::new();
    let mut cur = vec![-b; p];
    loop {
        let first = cur.iter().find(|&&x| x != 0);
        if let Some(&f) = first {
            if f > 0 {
                let v: Vec<Int> = cur.iter().map(|&x| Int::from(x)).collect();
                if gcd_ints(v.iter()) == 1u32 {
                    out.push(v);
                }
            }
        }
        let mut k = 0;
        loop {
            if k == p {
                out.sort();
                return out;
            }
            if cur[k] < b {
                cur[k] += 1;
                break;
            }
            cur[k] = -b;
            k += 1;
        }
    }
}

pub fn int_norm_inf(v: &[Int]) -> Int {
    v.iter().map(|x| Int::from(int_abs(x))).max().unwrap_or(Int::from(0))
}
