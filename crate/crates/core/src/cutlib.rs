//! Cuts `delta·x >= delta0` over a V-polyhedron: classification, intersection scalars,
//! the cut polyhedron, dominance and its LP certificate.

use thiserror::Error;

use crate::exact_kernel::hrep::{canonicalize_vrep, HRep, VRep};
use crate::exact_kernel::linalg::{combination, dot, is_zero_vec, sub};
use crate::exact_kernel::lp::{lp_solve, LpStatus, Program, Rel, Sense};
use crate::exact_kernel::rational::{
    gcd_ints, is_neg, is_pos, is_zero, one, rats_to_ints, to_integer, zero, ExtRat, Int, Rat,
};
use crate::exact_kernel::{hrep_to_vrep, vrep_to_hrep, KernelError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("cut normal is zero")]
    ZeroDelta,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("inequality is not a non-negative cut (negative on ray {0})")]
    NotNonNegative(usize),
    #[error("weights are not a convex combination on the cut-off vertices")]
    BadLambda,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("cut-off vertex sets differ: {expected:?} vs {found:?}")]
    CutOffMismatch { expected: Vec<usize>, found: Vec<usize> },
    #[error("the family defines an empty set")]
    EmptyQ,
    #[error("empty family")]
    EmptyFamily,
    #[error("the cut removes all of P")]
    EmptyCutPolyhedron,
    #[error("cut coefficients are not integral")]
    NonIntegral,
    #[error("direction is not increasing for the cut")]
    NonPositiveDirection,
    #[error("point already satisfies the cut")]
    NotViolated,
    #[error("certificate weights sum to zero")]
    DegenerateWeights,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// `delta·x >= delta0`. Integral cuts are stored divided by the gcd of all coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cut {
    pub delta: Vec<Rat>,
    pub delta0: Rat,
}

impl Cut {
    pub fn new(delta: Vec<Rat>, delta0: Rat) -> Result<Self, CutError> {
        if is_zero_vec(&delta) {
            return Err(CutError::ZeroDelta);
        }
        let mut all = delta.clone();
        all.push(delta0.clone());
        if let Some(ints) = rats_to_ints(&all) {
            let g = Rat::from(gcd_ints(ints.iter()));
            return Ok(Cut { delta: delta.iter().map(|x| x / &g).collect(), delta0: delta0 / g });
        }
        Ok(Cut { delta, delta0 })
    }

    pub fn dim(&self) -> usize {
        self.delta.len()
    }

    pub fn value(&self, x: &[Rat]) -> Rat {
        dot(&self.delta, x)
    }

    pub fn holds(&self, x: &[Rat]) -> bool {
        self.value(x) >= self.delta0
    }

    pub fn is_integral(&self) -> bool {
        self.delta.iter().chain(std::iter::once(&self.delta0)).all(|x| to_integer(x).is_some())
    }

    fn check_dim(&self, p: &VRep) -> Result<(), CutError> {
        if self.dim() != p.dim {
            return Err(CutError::DimensionMismatch { expected: p.dim, found: self.dim() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutClassification {
    /// Vertices with `delta·v < delta0`.
    pub cut_off: Vec<usize>,
    pub satisfied: Vec<usize>,
    /// `delta·r >= 0` for every ray.
    pub nonnegative: bool,
    pub is_cut: bool,
}

pub fn classify_cut(p: &VRep, c: &Cut) -> Result<CutClassification, CutError> {
    c.check_dim(p)?;
    let (cut_off, satisfied): (Vec<usize>, Vec<usize>) = (0..p.vertices.len()).partition(|&i| !c.holds(&p.vertices[i]));
    let nonnegative = p.rays.iter().all(|r| !is_neg(&c.value(r)));
    let is_cut = !cut_off.is_empty();
    Ok(CutClassification { cut_off, satisfied, nonnegative, is_cut })
}

fn require_nonnegative(p: &VRep, c: &Cut) -> Result<CutClassification, CutError> {
    let cl = classify_cut(p, c)?;
    if let Some(j) = p.rays.iter().position(|r| is_neg(&c.value(r))) {
        return Err(CutError::NotNonNegative(j));
    }
    Ok(cl)
}

/// `v_lambda = sum lambda_i v^i` over the cut-off vertices (in `cut_off` order).
pub fn lambda_point(p: &VRep, cut_off: &[usize], lambda_c: &[Rat]) -> Result<Vec<Rat>, CutError> {
    if lambda_c.len() != cut_off.len()
        || cut_off.is_empty()
        || lambda_c.iter().any(is_neg)
        || lambda_c.iter().sum::<Rat>() != 1
    {
        return Err(CutError::BadLambda);
    }
    let pts: Vec<Vec<Rat>> = cut_off.iter().map(|&i| p.vertices[i].clone()).collect();
    Ok(combination(lambda_c, &pts, p.dim))
}

fn alpha_at(c: &Cut, base: &[Rat], r: &[Rat]) -> ExtRat {
    let t = c.value(r);
    if is_pos(&t) {
        ExtRat::Finite((&c.delta0 - c.value(base)) / t)
    } else {
        ExtRat::PlusInfinity
    }
}

fn beta_at(c: &Cut, base: &[Rat], vk: &[Rat]) -> ExtRat {
    if !c.holds(vk) {
        return ExtRat::PlusInfinity;
    }
    ExtRat::Finite((&c.delta0 - c.value(base)) / c.value(&sub(vk, base)))
}

/// Step along ray `j` from `v_lambda` to the cut hyperplane.
pub fn alpha_prime(p: &VRep, c: &Cut, lambda_c: &[Rat], j: usize) -> Result<ExtRat, CutError> {
    let cl = require_nonnegative(p, c)?;
    let r = p.rays.get(j).ok_or(CutError::IndexOutOfRange(j))?;
    let base = lambda_point(p, &cl.cut_off, lambda_c)?;
    Ok(alpha_at(c, &base, r))
}

/// Fraction of the segment from `v_lambda` to vertex `k` at which the cut hyperplane is met.
pub fn beta_prime(p: &VRep, c: &Cut, lambda_c: &[Rat], k: usize) -> Result<ExtRat, CutError> {
    let cl = require_nonnegative(p, c)?;
    let vk = p.vertices.get(k).ok_or(CutError::IndexOutOfRange(k))?;
    let base = lambda_point(p, &cl.cut_off, lambda_c)?;
    Ok(beta_at(c, &base, vk))
}

/// `alpha'_{i,j}` and `beta'_{i,k}` at the unit weights of each cut-off vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionProfile {
    pub cut_off: Vec<usize>,
    /// `alpha[a][j]` for the a-th cut-off vertex and ray j.
    pub alpha: Vec<Vec<ExtRat>>,
    /// `beta[a][k]` for every vertex k; infinite on cut-off vertices.
    pub beta: Vec<Vec<ExtRat>>,
}

pub fn intersection_profile(p: &VRep, c: &Cut) -> Result<IntersectionProfile, CutError> {
    let cl = require_nonnegative(p, c)?;
    let alpha = cl.cut_off.iter().map(|&i| p.rays.iter().map(|r| alpha_at(c, &p.vertices[i], r)).collect()).collect();
    let beta = cl
        .cut_off
        .iter()
        .map(|&i| p.vertices.iter().map(|vk| beta_at(c, &p.vertices[i], vk)).collect())
        .collect();
    Ok(IntersectionProfile { cut_off: cl.cut_off, alpha, beta })
}

/// Candidate vertices of `{x in P : cut}`: satisfied vertices and the finite intersection points.
pub fn cut_polyhedron_candidates(p: &VRep, c: &Cut) -> Result<Vec<Vec<Rat>>, CutError> {
    let cl = require_nonnegative(p, c)?;
    let mut out: Vec<Vec<Rat>> = cl.satisfied.iter().map(|&k| p.vertices[k].clone()).collect();
    for &i in &cl.cut_off {
        let vi = &p.vertices[i];
        for &k in &cl.satisfied {
            if let ExtRat::Finite(b) = beta_at(c, vi, &p.vertices[k]) {
                out.push(vi.iter().zip(&p.vertices[k]).map(|(a, bk)| a + &b * (bk - a)).collect());
            }
        }
        for r in &p.rays {
            if let ExtRat::Finite(a) = alpha_at(c, vi, r) {
                out.push(vi.iter().zip(r).map(|(x, y)| x + &a * y).collect());
            }
        }
    }
    Ok(out)
}

/// `{x in P : delta·x >= delta0}` from its candidate vertices, filtered by exact extremality LPs.
pub fn cut_polyhedron_vertices(p: &VRep, c: &Cut) -> Result<VRep, CutError> {
    let cand = cut_polyhedron_candidates(p, c)?;
    if cand.is_empty() {
        return Err(CutError::EmptyCutPolyhedron);
    }
    Ok(canonicalize_vrep(&VRep::new(p.dim, cand, p.rays.clone()))?)
}

/// The same set through the H-representation of P.
pub fn cut_polyhedron_via_hrep(p: &VRep, c: &Cut) -> Result<VRep, CutError> {
    require_nonnegative(p, c)?;
    let mut h = vrep_to_hrep(p)?;
    h.push_ge(c.delta.clone(), c.delta0.clone());
    match hrep_to_vrep(&h) {
        Err(KernelError::Empty) => Err(CutError::EmptyCutPolyhedron),
        other => Ok(other?),
    }
}

fn same_cut_off(p: &VRep, c1: &Cut, c2: &Cut) -> Result<(IntersectionProfile, IntersectionProfile), CutError> {
    let a = intersection_profile(p, c1)?;
    let b = intersection_profile(p, c2)?;
    if a.cut_off != b.cut_off {
        return Err(CutError::CutOffMismatch { expected: a.cut_off, found: b.cut_off });
    }
    Ok((a, b))
}

/// Componentwise reciprocal comparison of intersection scalars; requires equal cut-off sets.
pub fn dominates(p: &VRep, c1: &Cut, c2: &Cut) -> Result<bool, CutError> {
    let (a, b) = same_cut_off(p, c1, c2)?;
    let alpha_ok = a.alpha.iter().flatten().zip(b.alpha.iter().flatten()).all(|(x, y)| x.recip() <= y.recip());
    let beta_ok = a
        .beta
        .iter()
        .zip(&b.beta)
        .all(|(ra, rb)| (0..p.vertices.len()).filter(|k| !a.cut_off.contains(k)).all(|k| ra[k].recip() <= rb[k].recip()));
    Ok(alpha_ok && beta_ok)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Convex weights on the family whose combination dominates the candidate.
    Dominated { weights: Vec<Rat>, combined: Cut, dual_objective: Rat },
    /// A point of Q(V^c) violating the candidate.
    Invalid { witness: Vec<Rat>, value: Rat },
}

fn q_hrep(p: &VRep, family: &[Cut]) -> Result<HRep, CutError> {
    let mut h = vrep_to_hrep(p)?;
    for c in family {
        h.push_ge(c.delta.clone(), c.delta0.clone());
    }
    Ok(h)
}

/// Certificate for the candidate against `Q(V^c) = {x in P : every family cut}`.
///
/// Valid candidates get weights from the dual of `min delta·x over Q(V^c)` written over
/// the cut-off vertices; variables `(w, z, u0)` with `u = -delta`.
pub fn dominance_certificate(p: &VRep, vc: &[usize], family: &[Cut], candidate: &Cut) -> Result<Certificate, CutError> {
    if family.is_empty() {
        return Err(CutError::EmptyFamily);
    }
    for c in family.iter().chain(std::iter::once(candidate)) {
        let cl = require_nonnegative(p, c)?;
        if cl.cut_off != vc {
            return Err(CutError::CutOffMismatch { expected: vc.to_vec(), found: cl.cut_off });
        }
    }
    let q = q_hrep(p, family)?;
    let primal = lp_solve(&candidate.delta, Sense::Min, &q)?;
    match primal.status {
        LpStatus::Infeasible => return Err(CutError::EmptyQ),
        LpStatus::Unbounded => {
            let base = lp_solve(&vec![zero(); p.dim], Sense::Min, &q)?.witness_point.unwrap();
            let ray = primal.witness_ray.unwrap();
            let gap = &candidate.delta0 - candidate.value(&base);
            let step = if is_pos(&gap) { gap / -candidate.value(&ray) + one() } else { one() };
            let witness: Vec<Rat> = base.iter().zip(&ray).map(|(a, r)| a + &step * r).collect();
            let value = candidate.value(&witness);
            return Ok(Certificate::Invalid { witness, value });
        }
        LpStatus::Optimal => {
            if *primal.optimum() < candidate.delta0 {
                return Ok(Certificate::Invalid { witness: primal.point().to_vec(), value: primal.optimum().clone() });
            }
        }
    }

    let m = family.len();
    let nc = vc.len();
    let satisfied: Vec<usize> = (0..p.vertices.len()).filter(|k| !vc.contains(k)).collect();
    // columns: w (m), z (nc), u0 (1)
    let nv = m + nc + 1;
    let mut prog = Program::new(nv, Sense::Max);
    for k in 0..m + nc {
        prog.nonneg[k] = true;
    }
    prog.objective = family.iter().map(|c| c.delta0.clone()).collect();
    prog.objective.extend(std::iter::repeat_n(zero(), nc));
    prog.objective.push(one());
    for (a, &i) in vc.iter().enumerate() {
        let vi = &p.vertices[i];
        let mut row: Vec<Rat> = family.iter().map(|c| c.value(vi)).collect();
        row.extend((0..nc).map(|b| if a == b { one() } else { zero() }));
        row.push(one());
        prog.row(row, Rel::Le, candidate.value(vi));
        for &k in &satisfied {
            let d = sub(&p.vertices[k], vi);
            let mut row: Vec<Rat> = family.iter().map(|c| c.value(&d)).collect();
            row.extend((0..nc).map(|b| if a == b { -one() } else { zero() }));
            row.push(zero());
            prog.row(row, Rel::Le, candidate.value(&d));
        }
    }
    for r in &p.rays {
        let mut row: Vec<Rat> = family.iter().map(|c| c.value(r)).collect();
        row.extend(std::iter::repeat_n(zero(), nc + 1));
        prog.row(row, Rel::Le, candidate.value(r));
    }
    let dual = prog.solve();
    if dual.status != LpStatus::Optimal {
        // strong duality with a bounded primal rules this out
        return Err(CutError::Kernel(KernelError::Empty));
    }
    let sol = dual.point();
    let total: Rat = sol[..m].iter().sum();
    if is_zero(&total) {
        return Err(CutError::DegenerateWeights);
    }
    let weights: Vec<Rat> = sol[..m].iter().map(|w| w / &total).collect();
    let mut delta = vec![zero(); p.dim];
    let mut delta0 = zero();
    for (w, c) in weights.iter().zip(family) {
        for (d, x) in delta.iter_mut().zip(&c.delta) {
            *d += w * x;
        }
        delta0 += w * &c.delta0;
    }
    Ok(Certificate::Dominated { weights, combined: Cut::new(delta, delta0)?, dual_objective: dual.optimum().clone() })
}

/// `alpha' = s / (g t)` for an integral cut, a rational point and an integral direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaDecomposition {
    pub s: Int,
    pub t: Int,
    /// Product of the denominators of the point's coordinates.
    pub g: Int,
}

impl AlphaDecomposition {
    pub fn alpha(&self) -> Rat {
        Rat::from(self.s.clone()) / (Rat::from(self.g.clone()) * Rat::from(self.t.clone()))
    }

    /// `s < g w`, the bound as stated for bodies of max-facet-width at most `w`.
    pub fn stated_bound_holds(&self, w: &Rat) -> bool {
        self.s.clone() < Rat::from(self.g.clone()) * w
    }

    /// `s < g w t`, equivalent to `alpha' < w`.
    pub fn scaled_bound_holds(&self, w: &Rat) -> bool {
        self.s.clone() < Rat::from(self.g.clone()) * w * Rat::from(self.t.clone())
    }
}

pub fn alpha_decomposition(v: &[Rat], r: &[Rat], c: &Cut) -> Result<AlphaDecomposition, CutError> {
    if v.len() != c.dim() || r.len() != c.dim() {
        return Err(CutError::DimensionMismatch { expected: c.dim(), found: v.len().min(r.len()) });
    }
    let delta = rats_to_ints(&c.delta).ok_or(CutError::NonIntegral)?;
    let delta0 = to_integer(&c.delta0).ok_or(CutError::NonIntegral)?;
    let rr = rats_to_ints(r).ok_or(CutError::NonIntegral)?;
    let t: Int = delta.iter().zip(&rr).map(|(a, b)| a * b).sum();
    if t <= 0 {
        return Err(CutError::NonPositiveDirection);
    }
    if c.holds(v) {
        return Err(CutError::NotViolated);
    }
    let qs: Vec<Int> = v.iter().map(|x| Int::from(x.denominator_ref().clone())).collect();
    let ps: Vec<Int> = v.iter().zip(&qs).map(|(x, q)| to_integer(&(x * Rat::from(q.clone()))).unwrap()).collect();
    let g: Int = qs.iter().product();
    let mut s = &g * &delta0;
    for m in 0..v.len() {
        let dm = &g / &qs[m];
        s -= dm * &ps[m] * &delta[m];
    }
    Ok(AlphaDecomposition { s, t, g })
}

/// Point of `P^l(lambda^c)`: `v_lambda + sum eps_k (v^k - v_lambda) + sum mu_j r^j`,
/// with `eps` indexed by satisfied vertices.
pub fn lifted_point(p: &VRep, c: &Cut, lambda_c: &[Rat], eps: &[Rat], mu: &[Rat]) -> Result<Vec<Rat>, CutError> {
    let cl = require_nonnegative(p, c)?;
    if eps.len() != cl.satisfied.len() || mu.len() != p.rays.len() {
        return Err(CutError::DimensionMismatch { expected: cl.satisfied.len() + p.rays.len(), found: eps.len() + mu.len() });
    }
    let base = lambda_point(p, &cl.cut_off, lambda_c)?;
    let mut x = base.clone();
    for (e, &k) in eps.iter().zip(&cl.satisfied) {
        for (xi, (vk, b)) in x.iter_mut().zip(p.vertices[k].iter().zip(&base)) {
            *xi += e * (vk - b);
        }
    }
    for (m, r) in mu.iter().zip(&p.rays) {
        for (xi, ri) in x.iter_mut().zip(r) {
            *xi += m * ri;
        }
    }
    Ok(x)
}

/// `sum mu_j / alpha'_j + sum eps_k / beta'_k` for the given lifted coordinates.
pub fn lifted_value(p: &VRep, c: &Cut, lambda_c: &[Rat], eps: &[Rat], mu: &[Rat]) -> Result<Rat, CutError> {
    let cl = require_nonnegative(p, c)?;
    let mut s = zero();
    for (e, &k) in eps.iter().zip(&cl.satisfied) {
        s += e * beta_prime(p, c, lambda_c, k)?.recip();
    }
    for (j, m) in mu.iter().enumerate() {
        s += m * alpha_prime(p, c, lambda_c, j)?.recip();
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::rational::{ivec, rat, ri, rvec};

    pub fn p2() -> VRep {
        VRep::new(2, vec![rvec(&[(1, 2), (1, 2)]), rvec(&[(5, 2), (1, 2)]), rvec(&[(1, 2), (5, 2)])], vec![])
    }

    pub fn p3() -> VRep {
        VRep::new(2, vec![rvec(&[(1, 2), (1, 2)])], vec![ivec(&[1, 0]), ivec(&[1, 1])])
    }

    fn cut(d: &[i64], d0: Rat) -> Cut {
        Cut::new(ivec(d), d0).unwrap()
    }

    #[test]
    fn normalization() {
        let c = cut(&[2, 4], ri(6));
        assert_eq!(c.delta, ivec(&[1, 2]));
        assert_eq!(c.delta0, ri(3));
        let c = Cut::new(rvec(&[(1, 2), (1, 1)]), ri(1)).unwrap();
        assert_eq!(c.delta, rvec(&[(1, 2), (1, 1)]));
        assert_eq!(Cut::new(ivec(&[0, 0]), ri(1)), Err(CutError::ZeroDelta));
    }

    #[test]
    fn classification() {
        let cl = classify_cut(&p2(), &cut(&[1, 0], ri(1))).unwrap();
        assert_eq!(cl.cut_off, vec![0, 2]);
        assert_eq!(cl.satisfied, vec![1]);
        assert!(cl.nonnegative && cl.is_cut);
        assert!(!classify_cut(&p2(), &cut(&[1, 0], ri(0))).unwrap().is_cut);
        assert!(!classify_cut(&p3(), &cut(&[-1, 0], ri(0))).unwrap().nonnegative);
    }

    #[test]
    fn intersection_scalars() {
        let c = cut(&[1, 0], ri(1));
        assert_eq!(alpha_prime(&p3(), &c, &[ri(1)], 0).unwrap(), ExtRat::Finite(rat(1, 2)));
        assert_eq!(alpha_prime(&p3(), &c, &[ri(1)], 1).unwrap(), ExtRat::Finite(rat(1, 2)));
        assert_eq!(beta_prime(&p2(), &c, &[ri(1), ri(0)], 1).unwrap(), ExtRat::Finite(rat(1, 4)));
        assert_eq!(beta_prime(&p2(), &c, &[ri(1), ri(0)], 2).unwrap(), ExtRat::PlusInfinity);
        assert_eq!(beta_prime(&p2(), &c, &[ri(1), ri(1)], 1), Err(CutError::BadLambda));
        assert_eq!(alpha_prime(&p3(), &cut(&[-1, 0], ri(0)), &[ri(1)], 0), Err(CutError::NotNonNegative(0)));
    }

    #[test]
    fn cut_polyhedron() {
        let c = cut(&[1, 0], ri(1));
        let got = cut_polyhedron_vertices(&p2(), &c).unwrap();
        let expect = VRep::new(2, vec![rvec(&[(5, 2), (1, 2)]), rvec(&[(1, 1), (1, 2)]), ivec(&[1, 2])], vec![]).normalized();
        assert_eq!(got, expect);
        assert_eq!(cut_polyhedron_via_hrep(&p2(), &c).unwrap(), expect);

        let got = cut_polyhedron_vertices(&p3(), &c).unwrap();
        let expect = VRep::new(2, vec![rvec(&[(1, 1), (1, 2)]), ivec(&[1, 1])], vec![ivec(&[1, 0]), ivec(&[1, 1])]).normalized();
        assert_eq!(got, expect);
        assert_eq!(cut_polyhedron_via_hrep(&p3(), &c).unwrap(), expect);

        let none = cut(&[1, 0], ri(0));
        assert_eq!(cut_polyhedron_vertices(&p2(), &none).unwrap(), canonicalize_vrep(&p2()).unwrap());
        assert_eq!(cut_polyhedron_vertices(&p2(), &cut(&[1, 0], ri(5))), Err(CutError::EmptyCutPolyhedron));
    }

    #[test]
    fn dominance() {
        let c1 = cut(&[1, 0], ri(1));
        let c2 = Cut::new(ivec(&[1, 1]), rat(3, 2)).unwrap();
        let a2 = intersection_profile(&p3(), &c2).unwrap();
        assert_eq!(a2.alpha, vec![vec![ExtRat::Finite(rat(1, 2)), ExtRat::Finite(rat(1, 4))]]);
        assert!(dominates(&p3(), &c1, &c2).unwrap());
        assert!(!dominates(&p3(), &c2, &c1).unwrap());
        assert!(dominates(&p3(), &c1, &c1).unwrap());
        let other = cut(&[0, 1], ri(1));
        assert!(matches!(dominates(&p2(), &c1, &other), Err(CutError::CutOffMismatch { .. })));
        // oracle: dominance iff inclusion of the cut polyhedra
        let q1 = vrep_to_hrep(&cut_polyhedron_vertices(&p3(), &c1).unwrap()).unwrap();
        let q2 = cut_polyhedron_vertices(&p3(), &c2).unwrap();
        assert!(cut_polyhedron_vertices(&p3(), &c1).unwrap().vertices.iter().all(|x| c2.holds(x)));
        assert!(!q2.vertices.iter().all(|x| q1.contains(x)));
    }

    #[test]
    fn certificates() {
        let fam = vec![cut(&[1, 0], ri(1))];
        let cand = Cut::new(ivec(&[1, 1]), rat(3, 2)).unwrap();
        match dominance_certificate(&p3(), &[0], &fam, &cand).unwrap() {
            Certificate::Dominated { weights, combined, dual_objective } => {
                assert_eq!(weights, vec![ri(1)]);
                assert_eq!(combined, fam[0]);
                assert!(dual_objective >= cand.delta0);
                assert!(dominates(&p3(), &combined, &cand).unwrap());
            }
            other => panic!("{other:?}"),
        }
        match dominance_certificate(&p3(), &[0], &fam, &fam[0]).unwrap() {
            Certificate::Dominated { weights, .. } => assert_eq!(weights, vec![ri(1)]),
            other => panic!("{other:?}"),
        }
        let bad = cut(&[1, 0], ri(2));
        match dominance_certificate(&p3(), &[0], &fam, &bad).unwrap() {
            Certificate::Invalid { witness, value } => {
                assert_eq!(value, ri(1));
                assert_eq!(witness[0], ri(1));
                assert!(fam[0].holds(&witness) && !bad.holds(&witness));
            }
            other => panic!("{other:?}"),
        }
        // two-member family: x1 >= 1 and x2 >= 1 on P3; candidate x1 + x2 >= 2
        let fam = vec![cut(&[1, 0], ri(1)), cut(&[1, 2], ri(3))];
        let cand = cut(&[1, 1], ri(2));
        match dominance_certificate(&p3(), &[0], &fam, &cand).unwrap() {
            Certificate::Dominated { weights, combined, .. } => {
                assert_eq!(weights.iter().sum::<Rat>(), ri(1));
                assert!(dominates(&p3(), &combined, &cand).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decomposition() {
        let d = alpha_decomposition(&rvec(&[(1, 2), (1, 2)]), &ivec(&[1, 0]), &cut(&[1, 0], ri(1))).unwrap();
        assert_eq!((d.s.clone(), d.t.clone(), d.g.clone()), (Int::from(2), Int::from(1), Int::from(4)));
        assert_eq!(d.alpha(), rat(1, 2));
        let d = alpha_decomposition(&rvec(&[(1, 3), (0, 1)]), &ivec(&[1, 0]), &cut(&[3, 0], ri(2))).unwrap();
        assert_eq!((d.s.clone(), d.t.clone(), d.g.clone()), (Int::from(3), Int::from(3), Int::from(3)));
        assert_eq!(d.alpha(), rat(1, 3));
        let d = alpha_decomposition(&ivec(&[0, 0]), &ivec(&[1, 1]), &cut(&[1, 1], ri(3))).unwrap();
        assert_eq!(d.g, Int::from(1));
        assert_eq!(d.alpha(), rat(3, 2));
        assert_eq!(
            alpha_decomposition(&ivec(&[0]), &ivec(&[1]), &Cut::new(rvec(&[(1, 2)]), ri(1)).unwrap()),
            Err(CutError::NonIntegral)
        );
        assert_eq!(alpha_decomposition(&ivec(&[0]), &ivec(&[-1]), &cut(&[1], ri(1))), Err(CutError::NonPositiveDirection));
    }

    #[test]
    fn stated_bound_counterexample() {
        // v = 1/2 inside L = [0,1] (w = 1), ray 1, cut 10x >= 9 is valid at v + alpha(L) r = 1
        let d = alpha_decomposition(&rvec(&[(1, 2)]), &ivec(&[1]), &cut(&[10], ri(9))).unwrap();
        assert_eq!((d.s.clone(), d.t.clone(), d.g.clone()), (Int::from(8), Int::from(10), Int::from(2)));
        assert_eq!(d.alpha(), rat(2, 5));
        assert!(d.alpha() <= rat(1, 2));
        assert!(!d.stated_bound_holds(&ri(1)));
        assert!(d.scaled_bound_holds(&ri(1)));
    }

    #[test]
    fn lifted_identity_on_p2() {
        let c = cut(&[1, 0], ri(1));
        let lam = [rat(1, 3), rat(2, 3)];
        for e in [rat(0, 1), rat(1, 8), rat(1, 4), rat(1, 2), ri(1)] {
            let x = lifted_point(&p2(), &c, &lam, std::slice::from_ref(&e), &[]).unwrap();
            let s = lifted_value(&p2(), &c, &lam, &[e], &[]).unwrap();
            assert_eq!(c.holds(&x), s >= ri(1));
        }
    }
}
