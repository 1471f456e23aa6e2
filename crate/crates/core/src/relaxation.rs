//! The relaxation `R(L,P) = conv{x in P : x not in int(L)}`, its boundary intersection
//! scalars, the intersection cut, and two constructions of `R(L,P)`.

use rayon::prelude::*;
use thiserror::Error;

use crate::exact_kernel::hrep::{canonicalize, canonicalize_vrep, HRep, VRep};
use crate::exact_kernel::linalg::{combination, dot, sub};
use crate::exact_kernel::lp::{LpStatus, Program, Rel, Sense};
use crate::exact_kernel::rational::{from_int, ints_to_rats, is_neg, one, zero, ExtRat, Rat};
use crate::exact_kernel::{project, vrep_to_hrep, KernelError};
use crate::lattice_free::{recession_is_linear, BodyError, Facet, SplitBody};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelaxError {
    #[error("no vertex of P lies in the interior of the body")]
    NoInsideVertices,
    #[error("weights are not a convex combination on the inside vertices")]
    BadLambda,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vertex {0} is not outside the interior of the body")]
    NotOutside(usize),
    #[error("the body's recession cone is not a linear space")]
    NonLinearRecession,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Body(#[from] BodyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BodySplit {
    /// Vertices in the open interior of L.
    pub inside: Vec<usize>,
    pub outside: Vec<usize>,
    /// Rays along which the halfline from an inside vertex never leaves L.
    pub ray_escape: Vec<usize>,
}

fn check_dim(l: &SplitBody, p: &VRep) -> Result<(), RelaxError> {
    if l.dim != p.dim {
        return Err(RelaxError::DimensionMismatch { expected: p.dim, found: l.dim });
    }
    Ok(())
}

pub fn body_split(l: &SplitBody, p: &VRep) -> Result<BodySplit, RelaxError> {
    check_dim(l, p)?;
    let (inside, outside): (Vec<usize>, Vec<usize>) =
        (0..p.vertices.len()).partition(|&i| l.interior_contains(&p.vertices[i]));
    let mut ray_escape = Vec::new();
    if let Some(&i) = inside.first() {
        for (j, r) in p.rays.iter().enumerate() {
            if halfline_sup(l, &p.vertices[i], r, false).is_infinite() {
                ray_escape.push(j);
            }
        }
    }
    Ok(BodySplit { inside, outside, ray_escape })
}

/// `sup{t >= 0 : base + t d in L}`, optionally capped at 1, as a one-variable LP.
fn halfline_sup(l: &SplitBody, base: &[Rat], d: &[Rat], capped: bool) -> ExtRat {
    let mut prog = Program::new(1, Sense::Max);
    prog.nonneg[0] = true;
    prog.objective = vec![one()];
    for f in &l.facets {
        let pi = ints_to_rats(&f.pi);
        prog.row(vec![dot(&pi, d)], Rel::Ge, from_int(&f.pi0) - dot(&pi, base));
    }
    if capped {
        prog.row(vec![one()], Rel::Le, one());
    }
    let out = prog.solve();
    match out.status {
        LpStatus::Optimal => ExtRat::Finite(out.optimum().clone()),
        LpStatus::Unbounded => ExtRat::PlusInfinity,
        LpStatus::Infeasible => unreachable!("base point lies in the body"),
    }
}

/// `v_lambda` over the inside vertices (in `inside` order).
pub fn inside_point(p: &VRep, split: &BodySplit, lambda_in: &[Rat]) -> Result<Vec<Rat>, RelaxError> {
    if split.inside.is_empty() {
        return Err(RelaxError::NoInsideVertices);
    }
    if lambda_in.len() != split.inside.len() || lambda_in.iter().any(is_neg) || lambda_in.iter().sum::<Rat>() != 1 {
        return Err(RelaxError::BadLambda);
    }
    let pts: Vec<Vec<Rat>> = split.inside.iter().map(|&i| p.vertices[i].clone()).collect();
    Ok(combination(lambda_in, &pts, p.dim))
}

/// `alpha_j(L, lambda) = sup{a : v_lambda + a r^j in L}`.
pub fn alpha_boundary(l: &SplitBody, p: &VRep, lambda_in: &[Rat], j: usize) -> Result<ExtRat, RelaxError> {
    let split = body_split(l, p)?;
    let r = p.rays.get(j).ok_or(RelaxError::IndexOutOfRange(j))?;
    let base = inside_point(p, &split, lambda_in)?;
    Ok(halfline_sup(l, &base, r, false))
}

/// `beta_k(L, lambda) = sup{b : v_lambda + b (v^k - v_lambda) in L}`, in (0,1].
pub fn beta_boundary(l: &SplitBody, p: &VRep, lambda_in: &[Rat], k: usize) -> Result<Rat, RelaxError> {
    let split = body_split(l, p)?;
    let vk = p.vertices.get(k).ok_or(RelaxError::IndexOutOfRange(k))?;
    if !split.outside.contains(&k) {
        return Err(RelaxError::NotOutside(k));
    }
    let base = inside_point(p, &split, lambda_in)?;
    Ok(halfline_sup(l, &base, &sub(vk, &base), true).finite().clone())
}

/// `sum_j mu_j / alpha_j + sum_k eps_k / beta_k >= 1` in the lifted space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedCut {
    pub lambda: Vec<Rat>,
    pub inside: Vec<usize>,
    pub outside: Vec<usize>,
    /// Per ray of P.
    pub alpha: Vec<ExtRat>,
    /// Per outside vertex, in `outside` order.
    pub beta: Vec<Rat>,
}

impl LiftedCut {
    pub fn mu_coefficients(&self) -> Vec<Rat> {
        self.alpha.iter().map(ExtRat::recip).collect()
    }

    pub fn eps_coefficients(&self) -> Vec<Rat> {
        self.beta.iter().map(|b| one() / b).collect()
    }

    pub fn lhs(&self, eps: &[Rat], mu: &[Rat]) -> Rat {
        dot(&self.eps_coefficients(), eps) + dot(&self.mu_coefficients(), mu)
    }
}

pub fn intersection_cut(l: &SplitBody, p: &VRep, lambda_in: &[Rat]) -> Result<LiftedCut, RelaxError> {
    let split = body_split(l, p)?;
    let base = inside_point(p, &split, lambda_in)?;
    let alpha = p.rays.par_iter().map(|r| halfline_sup(l, &base, r, false)).collect();
    let beta = split
        .outside
        .par_iter()
        .map(|&k| halfline_sup(l, &base, &sub(&p.vertices[k], &base), true).finite().clone())
        .collect();
    Ok(LiftedCut { lambda: lambda_in.to_vec(), inside: split.inside, outside: split.outside, alpha, beta })
}

/// Point of `P(lambda)`: `v_lambda + sum eps_k (v^k - v_lambda) + sum mu_j r^j`.
pub fn lifted_point(p: &VRep, cut: &LiftedCut, eps: &[Rat], mu: &[Rat]) -> Vec<Rat> {
    let pts: Vec<Vec<Rat>> = cut.inside.iter().map(|&i| p.vertices[i].clone()).collect();
    let base = combination(&cut.lambda, &pts, p.dim);
    let mut x = base.clone();
    for (e, &k) in eps.iter().zip(&cut.outside) {
        for (xi, (vk, b)) in x.iter_mut().zip(p.vertices[k].iter().zip(&base)) {
            *xi += e * (vk - b);
        }
    }
    for (m, r) in mu.iter().zip(&p.rays) {
        for (xi, ri) in x.iter_mut().zip(r) {
            *xi += m * ri;
        }
    }
    x
}

/// Smallest cut left-hand side over all lifted representations of `x` in `P(lambda)`;
/// `None` when `x` is not in `P(lambda)`.
pub fn min_lifted_lhs(p: &VRep, cut: &LiftedCut, x: &[Rat]) -> Option<Rat> {
    let pts: Vec<Vec<Rat>> = cut.inside.iter().map(|&i| p.vertices[i].clone()).collect();
    let base = combination(&cut.lambda, &pts, p.dim);
    let no = cut.outside.len();
    let ne = p.rays.len();
    let mut prog = Program::new(no + ne, Sense::Min);
    prog.nonneg = vec![true; no + ne];
    prog.objective = cut.eps_coefficients();
    prog.objective.extend(cut.mu_coefficients());
    for c in 0..p.dim {
        let mut a: Vec<Rat> = cut.outside.iter().map(|&k| &p.vertices[k][c] - &base[c]).collect();
        a.extend(p.rays.iter().map(|r| r[c].clone()));
        prog.row(a, Rel::Eq, &x[c] - &base[c]);
    }
    let mut s = vec![one(); no];
    s.resize(no + ne, zero());
    prog.row(s, Rel::Le, one());
    let out = prog.solve();
    match out.status {
        LpStatus::Optimal => Some(out.optimum().clone()),
        _ => None,
    }
}

/// Where an intersection point came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Ray { inside: usize, ray: usize },
    Vertex { inside: usize, outside: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub from: Provenance,
    pub scalar: Rat,
    pub point: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relaxation {
    pub split: BodySplit,
    pub points: Vec<IntersectionPoint>,
    /// No vertices means `R(L,P)` is empty.
    pub vrep: VRep,
}

impl Relaxation {
    pub fn is_empty(&self) -> bool {
        self.vrep.vertices.is_empty()
    }

    pub fn hrep(&self) -> Result<HRep, KernelError> {
        relaxation_hrep(&self.vrep)
    }
}

/// H-form of a V-form, with no vertices meaning the empty set.
pub fn relaxation_hrep(v: &VRep) -> Result<HRep, KernelError> {
    if v.vertices.is_empty() {
        return Ok(HRep::empty(v.dim));
    }
    vrep_to_hrep(v)
}

/// Intersection points at unit weights, outside vertices, and the rays of P, filtered
/// for extremality.
pub fn relax_vertices_detailed(l: &SplitBody, p: &VRep) -> Result<Relaxation, RelaxError> {
    let split = body_split(l, p)?;
    if split.inside.is_empty() {
        let vrep = canonicalize_vrep(p)?;
        return Ok(Relaxation { split, points: Vec::new(), vrep });
    }
    let per_vertex: Vec<Vec<IntersectionPoint>> = split
        .inside
        .par_iter()
        .map(|&i| {
            let vi = &p.vertices[i];
            let mut pts = Vec::new();
            for &k in &split.outside {
                let d = sub(&p.vertices[k], vi);
                let b = halfline_sup(l, vi, &d, true).finite().clone();
                let point = vi.iter().zip(&d).map(|(a, x)| a + &b * x).collect();
                pts.push(IntersectionPoint { from: Provenance::Vertex { inside: i, outside: k }, scalar: b, point });
            }
            for (j, r) in p.rays.iter().enumerate() {
                if let ExtRat::Finite(a) = halfline_sup(l, vi, r, false) {
                    let point = vi.iter().zip(r).map(|(x, y)| x + &a * y).collect();
                    pts.push(IntersectionPoint { from: Provenance::Ray { inside: i, ray: j }, scalar: a, point });
                }
            }
            pts
        })
        .collect();
    let points: Vec<IntersectionPoint> = per_vertex.into_iter().flatten().collect();
    let mut cand: Vec<Vec<Rat>> = split.outside.iter().map(|&k| p.vertices[k].clone()).collect();
    cand.extend(points.iter().map(|q| q.point.clone()));
    let vrep = if cand.is_empty() {
        VRep::new(p.dim, Vec::new(), Vec::new())
    } else {
        canonicalize_vrep(&VRep::new(p.dim, cand, p.rays.clone()))?
    };
    Ok(Relaxation { split, points, vrep })
}

pub fn relax_vertices(l: &SplitBody, p: &VRep) -> Result<VRep, RelaxError> {
    Ok(relax_vertices_detailed(l, p)?.vrep)
}

/// Projection of the disjunctive system `x = sum x^i`, `x^i in lambda^i P`,
/// `pi^i·x^i <= lambda^i pi0^i`, `sum lambda = 1`, `lambda >= 0` onto x.
pub fn relax_balas(l: &SplitBody, p: &VRep) -> Result<HRep, RelaxError> {
    check_dim(l, p)?;
    if !recession_is_linear(l)? {
        return Err(RelaxError::NonLinearRecession);
    }
    relax_balas_hrep(l, &vrep_to_hrep(p)?)
}

/// As `relax_balas`, from an H-form of P.
pub fn relax_balas_hrep(l: &SplitBody, ph: &HRep) -> Result<HRep, RelaxError> {
    let n = ph.dim;
    // disjuncts P ∩ {pi·x <= pi0}; empty ones contribute nothing to the hull
    let pieces: Vec<&Facet> = l
        .facets
        .iter()
        .filter(|f| {
            let mut h = ph.clone();
            h.push_le(ints_to_rats(&f.pi), from_int(&f.pi0));
            h.is_feasible()
        })
        .collect();
    let nf = pieces.len();
    if nf == 0 {
        return Ok(HRep::empty(n));
    }
    if nf == 1 {
        let mut h = ph.clone();
        h.push_le(ints_to_rats(&pieces[0].pi), from_int(&pieces[0].pi0));
        return Ok(canonicalize(&h)?);
    }
    // variables: x (n), then x^i (n each), then lambda (nf)
    let total = n + nf * n + nf;
    let xi = |i: usize, c: usize| n + i * n + c;
    let lam = |i: usize| n + nf * n + i;
    let mut h = HRep::new(total);
    for c in 0..n {
        let mut a = vec![zero(); total];
        a[c] = one();
        for i in 0..nf {
            a[xi(i, c)] = -one();
        }
        h.push_eq(a, zero());
    }
    for (i, f) in pieces.iter().enumerate() {
        for r in &ph.ineqs {
            let mut a = vec![zero(); total];
            for c in 0..n {
                a[xi(i, c)] = r.a[c].clone();
            }
            a[lam(i)] = -r.b.clone();
            h.push_ge(a, zero());
        }
        for r in &ph.eqs {
            let mut a = vec![zero(); total];
            for c in 0..n {
                a[xi(i, c)] = r.a[c].clone();
            }
            a[lam(i)] = -r.b.clone();
            h.push_eq(a, zero());
        }
        let mut a = vec![zero(); total];
        for c in 0..n {
            a[xi(i, c)] = -from_int(&f.pi[c]);
        }
        a[lam(i)] = from_int(&f.pi0);
        h.push_ge(a, zero());
        let mut a = vec![zero(); total];
        a[lam(i)] = one();
        h.push_ge(a, zero());
    }
    let mut a = vec![zero(); total];
    for i in 0..nf {
        a[lam(i)] = one();
    }
    h.push_eq(a, one());
    let keep: Vec<usize> = (0..n).collect();
    Ok(project(&h, &keep)?)
}

/// No vertex of P lies in int(L).
pub fn is_trivial(l: &SplitBody, p: &VRep) -> Result<bool, RelaxError> {
    Ok(body_split(l, p)?.inside.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::hrep::in_hull;
    use crate::exact_kernel::rational::{ivec, rat, ri, rvec};
    use crate::exact_kernel::Int;
    use crate::lattice_free::make_split_set;

    fn p2() -> VRep {
        VRep::new(2, vec![rvec(&[(1, 2), (1, 2)]), rvec(&[(5, 2), (1, 2)]), rvec(&[(1, 2), (5, 2)])], vec![])
    }

    fn p3() -> VRep {
        VRep::new(2, vec![rvec(&[(1, 2), (1, 2)])], vec![ivec(&[1, 0]), ivec(&[1, 1])])
    }

    fn split_x1() -> SplitBody {
        make_split_set(2, &[0, 1], &[Int::from(1), Int::from(0)], &Int::from(0)).unwrap()
    }

    #[test]
    fn boundary_scalars() {
        let l = split_x1();
        // P2: inside vertices 0 and 2; weights on vertex 0
        assert_eq!(beta_boundary(&l, &p2(), &[ri(1), ri(0)], 1).unwrap(), rat(1, 4));
        assert_eq!(alpha_boundary(&l, &p3(), &[ri(1)], 1).unwrap(), ExtRat::Finite(rat(1, 2)));
        let up = VRep::new(2, vec![rvec(&[(1, 2), (1, 2)])], vec![ivec(&[0, 1])]);
        assert_eq!(alpha_boundary(&l, &up, &[ri(1)], 0).unwrap(), ExtRat::PlusInfinity);
        assert_eq!(body_split(&l, &up).unwrap().ray_escape, vec![0]);
        assert_eq!(beta_boundary(&l, &p2(), &[ri(1), ri(0)], 0), Err(RelaxError::NotOutside(0)));
    }

    #[test]
    fn lifted_cut_coefficients() {
        let l = split_x1();
        let c = intersection_cut(&l, &p2(), &[ri(1), ri(0)]).unwrap();
        assert_eq!(c.outside, vec![1]);
        assert_eq!(c.eps_coefficients(), vec![ri(4)]);
        let c = intersection_cut(&l, &p3(), &[ri(1)]).unwrap();
        assert_eq!(c.mu_coefficients(), vec![ri(2), ri(2)]);
        let far = make_split_set(2, &[0, 1], &[Int::from(1), Int::from(0)], &Int::from(5)).unwrap();
        assert_eq!(intersection_cut(&far, &p2(), &[]), Err(RelaxError::NoInsideVertices));
    }

    #[test]
    fn relaxation_both_paths() {
        let l = split_x1();
        let r = relax_vertices(&l, &p2()).unwrap();
        let expect = VRep::new(2, vec![rvec(&[(5, 2), (1, 2)]), rvec(&[(1, 1), (1, 2)]), ivec(&[1, 2])], vec![]).normalized();
        assert_eq!(r, expect);
        assert_eq!(relax_balas(&l, &p2()).unwrap(), vrep_to_hrep(&expect).unwrap());

        let r = relax_vertices(&l, &p3()).unwrap();
        let expect = VRep::new(2, vec![rvec(&[(1, 1), (1, 2)]), ivec(&[1, 1])], vec![ivec(&[1, 0]), ivec(&[1, 1])]).normalized();
        assert_eq!(r, expect);
        assert_eq!(relax_balas(&l, &p3()).unwrap(), vrep_to_hrep(&expect).unwrap());
    }

    #[test]
    fn trivial_and_swallowed() {
        let far = make_split_set(2, &[0, 1], &[Int::from(1), Int::from(0)], &Int::from(5)).unwrap();
        assert!(is_trivial(&far, &p2()).unwrap());
        assert_eq!(relax_vertices(&far, &p2()).unwrap(), canonicalize_vrep(&p2()).unwrap());
        assert_eq!(relax_balas(&far, &p2()).unwrap(), vrep_to_hrep(&p2()).unwrap());
        assert!(!is_trivial(&split_x1(), &p2()).unwrap());

        // a small triangle strictly inside the split: R is empty
        let tiny = VRep::new(2, vec![rvec(&[(1, 4), (0, 1)]), rvec(&[(3, 4), (0, 1)]), rvec(&[(1, 2), (1, 1)])], vec![]);
        let rel = relax_vertices_detailed(&split_x1(), &tiny).unwrap();
        assert!(rel.is_empty());
        assert_eq!(rel.hrep().unwrap(), HRep::empty(2));
        assert_eq!(relax_balas(&split_x1(), &tiny).unwrap(), HRep::empty(2));
    }

    #[test]
    fn non_linear_recession_is_refused() {
        let cone = SplitBody::new(2, vec![0, 1], vec![(vec![Int::from(1), Int::from(0)], Int::from(0))]).unwrap();
        assert_eq!(relax_balas(&cone, &p2()), Err(RelaxError::NonLinearRecession));
    }

    #[test]
    fn beta_hull_and_lifted_validity() {
        let l = split_x1();
        let p = p2();
        let lam = [rat(1, 3), rat(2, 3)];
        let c = intersection_cut(&l, &p, &lam).unwrap();
        let split = body_split(&l, &p).unwrap();
        let base = inside_point(&p, &split, &lam).unwrap();
        let b = &c.beta[0];
        let x: Vec<Rat> = base.iter().zip(&p.vertices[1]).map(|(a, v)| a + b * (v - a)).collect();
        let mut gens = vec![p.vertices[1].clone()];
        for &i in &split.inside {
            let bi = beta_boundary(&l, &p, &(0..2).map(|a| if split.inside[a] == i { ri(1) } else { ri(0) }).collect::<Vec<_>>(), 1).unwrap();
            gens.push(p.vertices[i].iter().zip(&p.vertices[1]).map(|(a, v)| a + &bi * (v - a)).collect());
        }
        assert!(in_hull(&x, &gens, &[]));
        // mixed-integer points (1,1), (1,2), (2,1)
        for z in [ivec(&[1, 1]), ivec(&[1, 2]), ivec(&[2, 1])] {
            if let Some(v) = min_lifted_lhs(&p, &c, &z) {
                assert!(v >= ri(1));
            }
        }
    }
}
