use super::linalg::{dot, is_zero_vec, rref};
use super::lp::{lp_solve, LpStatus, Program, Rel, Sense};
use super::rational::{is_neg, is_pos, is_zero, one, primitive_rat, zero, Rat};
use super::KernelError;

/// One row `a·x >= b` (inequality) or `a·x = b` (equation).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Row {
    pub a: Vec<Rat>,
    pub b: Rat,
}

impl Row {
    pub fn new(a: Vec<Rat>, b: Rat) -> Self {
        Row { a, b }
    }

    pub fn slack(&self, x: &[Rat]) -> Rat {
        dot(&self.a, x) - &self.b
    }

    fn as_vec(&self) -> Vec<Rat> {
        let mut v = self.a.clone();
        v.push(self.b.clone());
        v
    }

    fn from_vec(mut v: Vec<Rat>) -> Self {
        let b = v.pop().unwrap();
        Row { a: v, b }
    }
}

/// Rational polyhedron `{x : a·x >= b for ineqs, a·x = b for eqs}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HRep {
    pub dim: usize,
    pub ineqs: Vec<Row>,
    pub eqs: Vec<Row>,
}

/// Rational polyhedron `conv(vertices) + cone(rays)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

impl HRep {
    pub fn new(dim: usize) -> Self {
        HRep { dim, ineqs: Vec::new(), eqs: Vec::new() }
    }

    /// The canonical empty set: the single row `0 >= 1`.
    pub fn empty(dim: usize) -> Self {
        HRep { dim, ineqs: vec![Row::new(vec![zero(); dim], one())], eqs: Vec::new() }
    }

    pub fn is_canonical_empty(&self) -> bool {
        self.eqs.is_empty() && self.ineqs.len() == 1 && is_zero_vec(&self.ineqs[0].a) && is_pos(&self.ineqs[0].b)
    }

    pub fn push_ge(&mut self, a: Vec<Rat>, b: Rat) {
        self.ineqs.push(Row::new(a, b));
    }

    pub fn push_le(&mut self, a: Vec<Rat>, b: Rat) {
        self.ineqs.push(Row::new(a.iter().map(|x| -x).collect(), -b));
    }

    pub fn push_eq(&mut self, a: Vec<Rat>, b: Rat) {
        self.eqs.push(Row::new(a, b));
    }

    pub fn check_dims(&self) -> Result<(), KernelError> {
        for r in self.ineqs.iter().chain(&self.eqs) {
            if r.a.len() != self.dim {
                return Err(KernelError::DimensionMismatch { expected: self.dim, found: r.a.len() });
            }
        }
        Ok(())
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        self.ineqs.iter().all(|r| !is_neg(&r.slack(x))) && self.eqs.iter().all(|r| is_zero(&r.slack(x)))
    }

    pub fn intersect(&self, other: &HRep) -> HRep {
        assert_eq!(self.dim, other.dim);
        let mut h = self.clone();
        h.ineqs.extend(other.ineqs.iter().cloned());
        h.eqs.extend(other.eqs.iter().cloned());
        h
    }

    pub fn is_feasible(&self) -> bool {
        let out = lp_solve(&vec![zero(); self.dim], Sense::Min, self).expect("consistent dimensions");
        out.status != LpStatus::Infeasible
    }

    /// Syntactic normal form without any LP:
    /// equations in integer-primitive reduced echelon form (first nonzero positive),
    /// inequalities reduced modulo the equation pivots, integer-primitive, deduplicated
    /// and sorted. Trivial rows are dropped; a contradictory row yields [`HRep::empty`].
    pub fn canonical_form_unchecked(&self) -> HRep {
        let n = self.dim;
        let mut eq_rows: Vec<Vec<Rat>> = self.eqs.iter().map(Row::as_vec).collect();
        let pivots = rref(&mut eq_rows, n + 1);
        if pivots.last() == Some(&n) {
            return HRep::empty(n);
        }
        let mut ineqs = Vec::with_capacity(self.ineqs.len());
        for r in &self.ineqs {
            let mut v = r.as_vec();
            for (er, &pc) in eq_rows.iter().zip(&pivots) {
                if is_zero(&v[pc]) {
                    continue;
                }
                let f = v[pc].clone();
                for (x, y) in v.iter_mut().zip(er) {
                    if !is_zero(y) {
                        *x -= &f * y;
                    }
                }
            }
            if is_zero_vec(&v[..n]) {
                if is_pos(&v[n]) {
                    return HRep::empty(n);
                }
                continue;
            }
            ineqs.push(Row::from_vec(primitive_rat(&v)));
        }
        ineqs.sort();
        ineqs.dedup();
        let mut eqs: Vec<Row> = eq_rows.iter().map(|v| Row::from_vec(primitive_rat(v))).collect();
        eqs.sort();
        HRep { dim: n, ineqs, eqs }
    }
}

/// LP-based canonical form: implicit equalities become equations, redundant
/// inequalities are removed, then [`HRep::canonical_form_unchecked`] is applied.
/// Two polyhedra are equal iff their canonical forms are syntactically equal.
pub fn canonicalize(h: &HRep) -> Result<HRep, KernelError> {
    h.check_dims()?;
    let n = h.dim;
    let mut cur = h.canonical_form_unchecked();
    if cur.is_canonical_empty() {
        return Ok(cur);
    }
    if !cur.is_feasible() {
        return Ok(HRep::empty(n));
    }
    let implicit = implicit_equalities(&cur);
    if !implicit.is_empty() {
        let mut next = HRep::new(n);
        next.eqs = cur.eqs.clone();
        for (i, r) in cur.ineqs.iter().enumerate() {
            if implicit.contains(&i) {
                next.eqs.push(r.clone());
            } else {
                next.ineqs.push(r.clone());
            }
        }
        cur = next.canonical_form_unchecked();
    }
    // Redundancy: drop a row when the remaining rows already imply it.
    let mut keep: Vec<bool> = vec![true; cur.ineqs.len()];
    for i in 0..cur.ineqs.len() {
        let mut rest = HRep::new(n);
        rest.eqs = cur.eqs.clone();
        rest.ineqs = cur
            .ineqs
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && keep[k])
            .map(|(_, r)| r.clone())
            .collect();
        let out = lp_solve(&cur.ineqs[i].a, Sense::Min, &rest)?;
        if out.status == LpStatus::Optimal && *out.optimum() >= cur.ineqs[i].b {
            keep[i] = false;
        }
    }
    let mut ineqs = Vec::new();
    for (r, k) in cur.ineqs.into_iter().zip(keep) {
        if k {
            ineqs.push(r);
        }
    }
    Ok(HRep { dim: n, ineqs, eqs: cur.eqs })
}

/// Indices of inequalities that hold with equality on the whole (nonempty) set.
pub fn implicit_equalities(h: &HRep) -> Vec<usize> {
    let n = h.dim;
    let m = h.ineqs.len();
    let mut undecided: Vec<usize> = (0..m).collect();
    loop {
        if undecided.is_empty() {
            return Vec::new();
        }
        // max sum y_i subject to a_i x - b_i >= y_i for undecided rows, 0 <= y_i <= 1
        let k = undecided.len();
        let mut prog = Program::new(n + k, Sense::Max);
        for j in n..n + k {
            prog.nonneg[j] = true;
            prog.objective[j] = one();
        }
        for (i, r) in h.ineqs.iter().enumerate() {
            let mut a = r.a.clone();
            a.resize(n + k, zero());
            if let Some(pos) = undecided.iter().position(|&u| u == i) {
                a[n + pos] = -one();
                let mut cap = vec![zero(); n + k];
                cap[n + pos] = one();
                prog.row(cap, Rel::Le, one());
            }
            prog.row(a, Rel::Ge, r.b.clone());
        }
        for r in &h.eqs {
            let mut a = r.a.clone();
            a.resize(n + k, zero());
            prog.row(a, Rel::Eq, r.b.clone());
        }
        let out = prog.solve();
        assert_eq!(out.status, LpStatus::Optimal, "feasible set expected");
        if is_zero(out.optimum()) {
            return undecided;
        }
        let y = &out.point()[n..];
        undecided = undecided.iter().zip(y).filter(|(_, yi)| is_zero(yi)).map(|(&u, _)| u).collect();
    }
}

impl VRep {
    pub fn new(dim: usize, vertices: Vec<Vec<Rat>>, rays: Vec<Vec<Rat>>) -> Self {
        VRep { dim, vertices, rays }
    }

    pub fn check_dims(&self) -> Result<(), KernelError> {
        for v in self.vertices.iter().chain(&self.rays) {
            if v.len() != self.dim {
                return Err(KernelError::DimensionMismatch { expected: self.dim, found: v.len() });
            }
        }
        Ok(())
    }

    /// Rays made integer-primitive, zero rays dropped, both lists sorted and deduplicated.
    pub fn normalized(&self) -> VRep {
        let mut vertices = self.vertices.clone();
        vertices.sort();
        vertices.dedup();
        let mut rays: Vec<Vec<Rat>> = self.rays.iter().filter(|r| !is_zero_vec(r)).map(|r| primitive_rat(r)).collect();
        rays.sort();
        rays.dedup();
        VRep { dim: self.dim, vertices, rays }
    }

    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }
}

/// True iff x is a convex combination of `points` plus a conic combination of `rays`.
pub fn in_hull(x: &[Rat], points: &[Vec<Rat>], rays: &[Vec<Rat>]) -> bool {
    hull_weights(x, points, rays).is_some()
}

/// Weights (lambda, mu) with x = sum lambda_i p_i + sum mu_j r_j, lambda convex, mu >= 0.
pub fn hull_weights(x: &[Rat], points: &[Vec<Rat>], rays: &[Vec<Rat>]) -> Option<(Vec<Rat>, Vec<Rat>)> {
    if points.is_empty() {
        return None;
    }
    let n = x.len();
    let np = points.len();
    let nr = rays.len();
    let mut prog = Program::new(np + nr, Sense::Min);
    prog.nonneg = vec![true; np + nr];
    for c in 0..n {
        let mut a: Vec<Rat> = points.iter().map(|p| p[c].clone()).collect();
        a.extend(rays.iter().map(|r| r[c].clone()));
        prog.row(a, Rel::Eq, x[c].clone());
    }
    let mut s = vec![one(); np];
    s.resize(np + nr, zero());
    prog.row(s, Rel::Eq, one());
    let out = prog.solve();
    if out.status != LpStatus::Optimal {
        return None;
    }
    let w = out.witness_point.unwrap();
    Some((w[..np].to_vec(), w[np..].to_vec()))
}

/// Irredundant canonical V-representation: one LP per generator.
pub fn canonicalize_vrep(v: &VRep) -> Result<VRep, KernelError> {
    v.check_dims()?;
    let v = v.normalized();
    let mut rays = v.rays.clone();
    let mut i = 0;
    while i < rays.len() {
        let r = rays[i].clone();
        let others: Vec<Vec<Rat>> = rays.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, x)| x.clone()).collect();
        if in_cone(&r, &others) {
            rays.remove(i);
        } else {
            i += 1;
        }
    }
    let mut verts = v.vertices.clone();
    let mut i = 0;
    while i < verts.len() {
        let p = verts[i].clone();
        let others: Vec<Vec<Rat>> = verts.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, x)| x.clone()).collect();
        if in_hull(&p, &others, &rays) {
            verts.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(VRep { dim: v.dim, vertices: verts, rays })
}

pub fn in_cone(x: &[Rat], rays: &[Vec<Rat>]) -> bool {
    if is_zero_vec(x) {
        return true;
    }
    if rays.is_empty() {
        return false;
    }
    let n = x.len();
    let mut prog = Program::new(rays.len(), Sense::Min);
    prog.nonneg = vec![true; rays.len()];
    for c in 0..n {
        prog.row(rays.iter().map(|r| r[c].clone()).collect(), Rel::Eq, x[c].clone());
    }
    prog.solve().status == LpStatus::Optimal
}
