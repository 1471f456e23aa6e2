//! Dense two-phase primal simplex over exact rationals with Bland's rule.

use super::hrep::HRep;
use super::linalg::{dot, nullspace, rank};
use super::rational::{is_neg, is_pos, is_zero, one, zero, Rat};
use super::KernelError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Ge,
    Le,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub optimum: Option<Rat>,
    pub witness_point: Option<Vec<Rat>>,
    pub witness_ray: Option<Vec<Rat>>,
    /// Row multipliers `u` of an optimal solution: `sum u_i b_i` is the optimum and
    /// `sum u_i a_i` matches the objective on free variables (bounds it on nonnegative ones).
    pub duals: Option<Vec<Rat>>,
}

impl LpOutcome {
    fn infeasible() -> Self {
        LpOutcome { status: LpStatus::Infeasible, optimum: None, witness_point: None, witness_ray: None, duals: None }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    pub fn optimum(&self) -> &Rat {
        self.optimum.as_ref().expect("optimal outcome carries an optimum")
    }

    pub fn point(&self) -> &[Rat] {
        self.witness_point.as_deref().expect("optimal outcome carries a point")
    }
}

/// A linear program over variables that are either free or nonnegative.
#[derive(Debug, Clone)]
pub struct Program {
    pub nvars: usize,
    pub nonneg: Vec<bool>,
    pub rows: Vec<(Vec<Rat>, Rel, Rat)>,
    pub objective: Vec<Rat>,
    pub sense: Sense,
}

impl Program {
    pub fn new(nvars: usize, sense: Sense) -> Self {
        Program { nvars, nonneg: vec![false; nvars], rows: Vec::new(), objective: vec![zero(); nvars], sense }
    }

    pub fn row(&mut self, a: Vec<Rat>, rel: Rel, b: Rat) -> &mut Self {
        debug_assert_eq!(a.len(), self.nvars);
        self.rows.push((a, rel, b));
        self
    }

    pub fn solve(&self) -> LpOutcome {
        Simplex::build(self).run()
    }
}

const NONE: usize = usize::MAX;

struct Simplex<'a> {
    prog: &'a Program,
    /// Column index of the positive and negative part of each variable.
    pos_col: Vec<usize>,
    neg_col: Vec<usize>,
    ncols: usize,
    first_artificial: usize,
    /// m rows of ncols + 1 entries; the last entry is the right-hand side.
    t: Vec<Vec<Rat>>,
    basis: Vec<usize>,
    /// Per original row: the column that starts as its unit vector, and whether the row was negated.
    unit_col: Vec<usize>,
    negated: Vec<bool>,
}

impl<'a> Simplex<'a> {
    fn build(prog: &'a Program) -> Self {
        let n = prog.nvars;
        let mut pos_col = Vec::with_capacity(n);
        let mut neg_col = Vec::with_capacity(n);
        let mut c = 0;
        for j in 0..n {
            pos_col.push(c);
            c += 1;
            if prog.nonneg[j] {
                neg_col.push(NONE);
            } else {
                neg_col.push(c);
                c += 1;
            }
        }
        let m = prog.rows.len();
        let mut slack_col = vec![NONE; m];
        for (i, (_, rel, _)) in prog.rows.iter().enumerate() {
            if *rel != Rel::Eq {
                slack_col[i] = c;
                c += 1;
            }
        }
        // Decide which rows need an artificial variable.
        let mut negated = Vec::with_capacity(m);
        let mut rows: Vec<(Vec<Rat>, Rat, Option<usize>)> = Vec::with_capacity(m);
        for (i, (a, rel, b)) in prog.rows.iter().enumerate() {
            let mut dense = vec![zero(); c];
            for j in 0..n {
                if is_zero(&a[j]) {
                    continue;
                }
                dense[pos_col[j]] = a[j].clone();
                if neg_col[j] != NONE {
                    dense[neg_col[j]] = -&a[j];
                }
            }
            match rel {
                Rel::Ge => dense[slack_col[i]] = -one(),
                Rel::Le => dense[slack_col[i]] = one(),
                Rel::Eq => {}
            }
            let mut rhs = b.clone();
            negated.push(is_neg(&rhs));
            if is_neg(&rhs) {
                for x in dense.iter_mut() {
                    if !is_zero(x) {
                        *x = -&*x;
                    }
                }
                rhs = -rhs;
            }
            let basic_slack = if slack_col[i] != NONE && dense[slack_col[i]] == 1 { Some(slack_col[i]) } else { None };
            rows.push((dense, rhs, basic_slack));
        }
        let first_artificial = c;
        let nart = rows.iter().filter(|r| r.2.is_none()).count();
        let ncols = c + nart;
        let mut t = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_art = first_artificial;
        let mut unit_col = Vec::with_capacity(m);
        for (mut dense, rhs, basic_slack) in rows {
            dense.resize(ncols, zero());
            match basic_slack {
                Some(s) => basis.push(s),
                None => {
                    dense[next_art] = one();
                    basis.push(next_art);
                    next_art += 1;
                }
            }
            unit_col.push(*basis.last().unwrap());
            dense.push(rhs);
            t.push(dense);
        }
        Simplex { prog, pos_col, neg_col, ncols, first_artificial, t, basis, unit_col, negated }
    }

    fn pivot(&mut self, r: usize, c: usize, obj: &mut [Rat]) {
        let inv = one() / &self.t[r][c];
        for x in self.t[r].iter_mut() {
            if !is_zero(x) {
                *x *= &inv;
            }
        }
        let nz: Vec<usize> = (0..=self.ncols).filter(|&j| !is_zero(&self.t[r][j])).collect();
        let prow = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for &j in &nz {
                row[j] -= &f * &prow[j];
            }
        }
        if !is_zero(&obj[c]) {
            let f = obj[c].clone();
            for &j in &nz {
                obj[j] -= &f * &prow[j];
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes the reduced-cost row `obj` (last entry holds minus the objective value).
    /// Returns the entering column on unboundedness.
    fn iterate(&mut self, obj: &mut [Rat], allowed: usize) -> Option<usize> {
        loop {
            let e = (0..allowed).find(|&j| is_neg(&obj[j]))?;
            let mut best: Option<(usize, Rat)> = None;
            for i in 0..self.t.len() {
                let a = &self.t[i][e];
                if !is_pos(a) {
                    continue;
                }
                let ratio = &self.t[i][self.ncols] / a;
                best = match best {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            match best {
                None => return Some(e),
                Some((r, _)) => self.pivot(r, e, obj),
            }
        }
    }

    fn reduced_costs(&self, cost: &[Rat]) -> Vec<Rat> {
        let mut obj = cost.to_vec();
        obj.push(zero());
        for (i, &b) in self.basis.iter().enumerate() {
            if is_zero(&cost[b]) {
                continue;
            }
            let cb = cost[b].clone();
            for (o, t) in obj.iter_mut().zip(&self.t[i]) {
                if !is_zero(t) {
                    *o -= &cb * t;
                }
            }
        }
        obj
    }

    fn run(mut self) -> LpOutcome {
        // Phase one.
        if self.first_artificial < self.ncols {
            let mut cost = vec![zero(); self.ncols];
            for c in cost.iter_mut().skip(self.first_artificial) {
                *c = one();
            }
            let mut obj = self.reduced_costs(&cost);
            let unb = self.iterate(&mut obj, self.ncols);
            debug_assert!(unb.is_none());
            if !is_zero(&obj[self.ncols]) {
                return LpOutcome::infeasible();
            }
            // Drive remaining artificial variables out of the basis.
            let mut i = 0;
            while i < self.t.len() {
                if self.basis[i] >= self.first_artificial {
                    match (0..self.first_artificial).find(|&j| !is_zero(&self.t[i][j])) {
                        Some(j) => {
                            let mut dummy = vec![zero(); self.ncols + 1];
                            self.pivot(i, j, &mut dummy);
                            i += 1;
                        }
                        None => {
                            self.t.remove(i);
                            self.basis.remove(i);
                        }
                    }
                } else {
                    i += 1;
                }
            }
        }
        // Phase two.
        let mut cost = vec![zero(); self.ncols];
        for j in 0..self.prog.nvars {
            let mut cj = self.prog.objective[j].clone();
            if self.prog.sense == Sense::Max {
                cj = -cj;
            }
            if self.neg_col[j] != NONE {
                cost[self.neg_col[j]] = -&cj;
            }
            cost[self.pos_col[j]] = cj;
        }
        let mut obj = self.reduced_costs(&cost);
        let allowed = self.first_artificial;
        match self.iterate(&mut obj, allowed) {
            Some(e) => {
                let mut d = vec![zero(); self.ncols];
                d[e] = one();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !is_zero(&self.t[i][e]) {
                        d[b] = -&self.t[i][e];
                    }
                }
                LpOutcome {
                    status: LpStatus::Unbounded,
                    optimum: None,
                    witness_point: None,
                    witness_ray: Some(self.to_original(&d)),
                    duals: None,
                }
            }
            None => {
                let mut sol = vec![zero(); self.ncols];
                for (i, &b) in self.basis.iter().enumerate() {
                    sol[b] = self.t[i][self.ncols].clone();
                }
                let x = self.to_original(&sol);
                let opt = dot(&self.prog.objective, &x);
                // The unit columns have zero cost, so their reduced costs are minus the multipliers.
                let duals = (0..self.prog.rows.len())
                    .map(|i| {
                        let mut u = -&obj[self.unit_col[i]];
                        if self.negated[i] {
                            u = -u;
                        }
                        if self.prog.sense == Sense::Max {
                            u = -u;
                        }
                        u
                    })
                    .collect();
                LpOutcome {
                    status: LpStatus::Optimal,
                    optimum: Some(opt),
                    witness_point: Some(x),
                    witness_ray: None,
                    duals: Some(duals),
                }
            }
        }
    }

    fn to_original(&self, sol: &[Rat]) -> Vec<Rat> {
        (0..self.prog.nvars)
            .map(|j| {
                let p = sol[self.pos_col[j]].clone();
                if self.neg_col[j] == NONE {
                    p
                } else {
                    p - &sol[self.neg_col[j]]
                }
            })
            .collect()
    }
}

/// Optimizes over an H-representation in free variables. An optimal witness is moved
/// to a vertex whenever the feasible set has one.
pub fn lp_solve(objective: &[Rat], sense: Sense, constraints: &HRep) -> Result<LpOutcome, KernelError> {
    let n = constraints.dim;
    if objective.len() != n {
        return Err(KernelError::DimensionMismatch { expected: n, found: objective.len() });
    }
    constraints.check_dims()?;
    let mut prog = Program::new(n, sense);
    prog.objective = objective.to_vec();
    for r in &constraints.ineqs {
        prog.row(r.a.clone(), Rel::Ge, r.b.clone());
    }
    for r in &constraints.eqs {
        prog.row(r.a.clone(), Rel::Eq, r.b.clone());
    }
    let mut out = prog.solve();
    if out.status == LpStatus::Optimal {
        let x = purify(constraints, out.witness_point.take().unwrap());
        debug_assert_eq!(dot(objective, &x), *out.optimum());
        out.witness_point = Some(x);
    }
    Ok(out)
}

/// Slides an optimal point along directions in the null space of its tight rows until
/// it becomes a vertex or a line is found. The objective is constant along these directions.
fn purify(h: &HRep, mut x: Vec<Rat>) -> Vec<Rat> {
    let n = h.dim;
    loop {
        let mut tight: Vec<Vec<Rat>> = h.eqs.iter().map(|r| r.a.clone()).collect();
        let mut loose = Vec::new();
        for (i, r) in h.ineqs.iter().enumerate() {
            if dot(&r.a, &x) == r.b {
                tight.push(r.a.clone());
            } else {
                loose.push(i);
            }
        }
        if rank(&tight, n) == n {
            return x;
        }
        let d = nullspace(&tight, n).swap_remove(0);
        let step = |dir: &[Rat]| -> Option<Rat> {
            let mut best: Option<Rat> = None;
            for &i in &loose {
                let r = &h.ineqs[i];
                let ad = dot(&r.a, dir);
                if is_neg(&ad) {
                    let t = (dot(&r.a, &x) - &r.b) / -ad;
                    if best.as_ref().is_none_or(|b| t < *b) {
                        best = Some(t);
                    }
                }
            }
            best
        };
        let (dir, t) = match step(&d) {
            Some(t) => (d, t),
            None => {
                let nd: Vec<Rat> = d.iter().map(|v| -v).collect();
                match step(&nd) {
                    Some(t) => (nd, t),
                    None => return x,
                }
            }
        };
        for (xi, di) in x.iter_mut().zip(&dir) {
            *xi += &t * di;
        }
    }
}
