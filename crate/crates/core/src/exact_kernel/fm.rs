//! Fourier–Motzkin projection with LP redundancy pruning.

use std::collections::BTreeSet;

use super::convert::hrep_to_vrep;
use super::hrep::{canonicalize, implicit_equalities, HRep, Row, VRep};
use super::linalg::{dot, is_zero_vec, rank, sub};
use super::lp::{LpStatus, Program, Rel, Sense};
use super::rational::{is_neg, is_pos, is_zero, primitive_rat, Rat};
use super::KernelError;

/// Row count above which intermediate systems are pruned by LP.
const LP_PRUNE_THRESHOLD: usize = 16;

struct FmRow {
    a: Vec<Rat>,
    b: Rat,
}

/// Projection of `h` onto the coordinates in `keep` (in that order).
pub fn project(h: &HRep, keep: &[usize]) -> Result<HRep, KernelError> {
    h.check_dims()?;
    let n = h.dim;
    let c = h.canonical_form_unchecked();
    if c.is_canonical_empty() || !c.is_feasible() {
        return Ok(HRep::empty(keep.len()));
    }
    let c = with_implicit_equalities(c);
    let z = strict_point(&c);
    // Generators of the system, when pointed, decide facets of every intermediate projection.
    let gens = hrep_to_vrep(&c).ok();
    let mut elim: Vec<usize> = (0..n).filter(|j| !keep.contains(j)).collect();

    // Substitute equations that involve eliminated variables.
    let mut eqs: Vec<Row> = c.eqs.clone();
    let mut ineqs: Vec<Row> = c.ineqs.clone();
    let mut kept_eqs: Vec<Row> = Vec::new();
    while let Some(e) = eqs.pop() {
        let Some(&j) = elim.iter().find(|&&j| !is_zero(&e.a[j])) else {
            kept_eqs.push(e);
            continue;
        };
        let substitute = |r: &mut Row| {
            if is_zero(&r.a[j]) {
                return;
            }
            let f = &r.a[j] / &e.a[j];
            for (x, y) in r.a.iter_mut().zip(&e.a) {
                *x -= &f * y;
            }
            r.b -= &f * &e.b;
        };
        eqs.iter_mut().for_each(substitute);
        ineqs.iter_mut().for_each(substitute);
        kept_eqs.iter_mut().for_each(substitute);
        elim.retain(|&k| k != j);
    }

    let mut rows: Vec<FmRow> = ineqs.into_iter().map(|r| FmRow { a: r.a, b: r.b }).collect();

    while !elim.is_empty() {
        // Pick the variable producing the fewest rows.
        let (pick, _) = elim
            .iter()
            .enumerate()
            .map(|(k, &j)| {
                let p = rows.iter().filter(|r| is_pos(&r.a[j])).count() as i64;
                let q = rows.iter().filter(|r| is_neg(&r.a[j])).count() as i64;
                (k, p * q - p - q)
            })
            .min_by_key(|&(k, s)| (s, k))
            .unwrap();
        let j = elim.remove(pick);
        let mut next: Vec<FmRow> = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for r in rows {
            if is_pos(&r.a[j]) {
                pos.push(r);
            } else if is_neg(&r.a[j]) {
                neg.push(r);
            } else {
                next.push(r);
            }
        }
        for p in &pos {
            for q in &neg {
                let cp = p.a[j].clone();
                let cq = -&q.a[j];
                let mut v: Vec<Rat> = p.a.iter().zip(&q.a).map(|(x, y)| &cq * x + &cp * y).collect();
                v.push(&cq * &p.b + &cp * &q.b);
                let v = primitive_rat(&v);
                let mut a = v;
                let b = a.pop().unwrap();
                next.push(FmRow { a, b });
            }
        }
        let mut next = tightest_per_direction(next);
        let remaining: Vec<usize> = (0..n).filter(|j| keep.contains(j) || elim.contains(j)).collect();
        if let Some(g) = &gens {
            next = prune_by_generators(next, g, &remaining);
        } else if next.len() > LP_PRUNE_THRESHOLD {
            next = prune(next, &kept_eqs, n, &z)?;
        }
        rows = next;
    }

    let mut out = HRep::new(keep.len());
    for r in rows {
        out.push_ge(keep.iter().map(|&k| r.a[k].clone()).collect(), r.b);
    }
    for e in kept_eqs {
        out.push_eq(keep.iter().map(|&k| e.a[k].clone()).collect(), e.b);
    }
    canonicalize(&out)
}

/// Moves the implicit equalities of a feasible system into its equations.
fn with_implicit_equalities(c: HRep) -> HRep {
    let implicit = implicit_equalities(&c);
    if implicit.is_empty() {
        return c;
    }
    let mut out = HRep::new(c.dim);
    out.eqs = c.eqs;
    for (i, r) in c.ineqs.into_iter().enumerate() {
        if implicit.contains(&i) {
            out.eqs.push(r);
        } else {
            out.ineqs.push(r);
        }
    }
    out
}

/// A point satisfying every inequality strictly, for a system without implicit equalities.
fn strict_point(c: &HRep) -> Vec<Rat> {
    let n = c.dim;
    let mut prog = Program::new(n + 1, Sense::Max);
    prog.objective[n] = Rat::from(1);
    let mut cap = vec![Rat::from(0); n + 1];
    cap[n] = Rat::from(1);
    prog.row(cap, Rel::Le, Rat::from(1));
    for r in &c.ineqs {
        let mut a = r.a.clone();
        a.push(Rat::from(-1));
        prog.row(a, Rel::Ge, r.b.clone());
    }
    for r in &c.eqs {
        let mut a = r.a.clone();
        a.push(Rat::from(0));
        prog.row(a, Rel::Eq, r.b.clone());
    }
    let out = prog.solve();
    debug_assert!(out.is_optimal() && is_pos(out.optimum()));
    out.point()[..n].to_vec()
}

fn slack(r: &FmRow, x: &[Rat]) -> Rat {
    let mut s = -&r.b;
    for (a, xi) in r.a.iter().zip(x) {
        if !is_zero(a) {
            s += a * xi;
        }
    }
    s
}

/// Whether `target` is implied by `rows[set]` and the equations: for a feasible system, iff
/// some `y >= 0` (free on equations) has `sum y_k a_k = a` and `sum y_k b_k >= b`.
fn implied_by(target: &FmRow, rows: &[FmRow], set: &[usize], eqs: &[Row], live: &[usize]) -> bool {
    let nv = set.len() + eqs.len();
    let mut prog = Program::new(nv, Sense::Max);
    for k in 0..set.len() {
        prog.nonneg[k] = true;
    }
    prog.objective = set.iter().map(|&k| rows[k].b.clone()).chain(eqs.iter().map(|e| e.b.clone())).collect();
    for &j in live {
        let a: Vec<Rat> = set.iter().map(|&k| rows[k].a[j].clone()).chain(eqs.iter().map(|e| e.a[j].clone())).collect();
        prog.row(a, Rel::Eq, target.a[j].clone());
    }
    let out = prog.solve();
    match out.status {
        LpStatus::Optimal => *out.optimum() >= target.b,
        LpStatus::Unbounded => true,
        LpStatus::Infeasible => false,
    }
}

/// Minimizes `rows[i]` over the confirmed rows and the equations, capped below at `b_i - 1`.
/// Returns a minimizer violating row `i`, or `None` when the confirmed rows imply it.
///
/// Solved in dual form (one constraint per live column); the minimizer is read off the
/// multipliers of those constraints and checked.
fn violator(i: usize, rows: &[FmRow], confirmed: &[usize], eqs: &[Row], live: &[usize], z: &[Rat]) -> Option<Vec<Rat>> {
    let t = &rows[i];
    let k = confirmed.len();
    let mut prog = Program::new(k + 1 + eqs.len(), Sense::Max);
    for v in 0..=k {
        prog.nonneg[v] = true;
    }
    prog.objective = confirmed
        .iter()
        .map(|&c| rows[c].b.clone())
        .chain(std::iter::once(&t.b - Rat::from(1)))
        .chain(eqs.iter().map(|e| e.b.clone()))
        .collect();
    for &j in live {
        let a: Vec<Rat> = confirmed
            .iter()
            .map(|&c| rows[c].a[j].clone())
            .chain(std::iter::once(t.a[j].clone()))
            .chain(eqs.iter().map(|e| e.a[j].clone()))
            .collect();
        prog.row(a, Rel::Eq, t.a[j].clone());
    }
    let out = prog.solve();
    debug_assert!(out.is_optimal());
    if *out.optimum() >= t.b {
        return None;
    }
    let mut x = z.to_vec();
    for (&j, u) in live.iter().zip(out.duals.as_ref().expect("optimal")) {
        x[j] = u.clone();
    }
    let ok = is_neg(&slack(t, &x))
        && confirmed.iter().all(|&c| !is_neg(&slack(&rows[c], &x)))
        && eqs.iter().all(|e| e.slack(&x) == 0);
    if ok {
        Some(x)
    } else {
        primal_violator(i, rows, confirmed, eqs, live, z)
    }
}

fn primal_violator(i: usize, rows: &[FmRow], confirmed: &[usize], eqs: &[Row], live: &[usize], z: &[Rat]) -> Option<Vec<Rat>> {
    let t = &rows[i];
    let mut prog = Program::new(live.len(), Sense::Min);
    prog.objective = live.iter().map(|&j| t.a[j].clone()).collect();
    let pick = |a: &[Rat]| live.iter().map(|&j| a[j].clone()).collect::<Vec<_>>();
    prog.row(pick(&t.a), Rel::Ge, &t.b - Rat::from(1));
    for &k in confirmed {
        prog.row(pick(&rows[k].a), Rel::Ge, rows[k].b.clone());
    }
    for e in eqs {
        prog.row(pick(&e.a), Rel::Eq, e.b.clone());
    }
    let out = prog.solve();
    if *out.optimum() >= t.b {
        return None;
    }
    let mut x = z.to_vec();
    for (&j, v) in live.iter().zip(out.point()) {
        x[j] = v.clone();
    }
    Some(x)
}

/// Drops rows implied by the remaining ones (Clarkson's method). `z` satisfies every row
/// strictly unless the row is implied by the equations. Candidate facets are found by
/// shooting a ray from `z` towards a point outside the confirmed rows.
fn prune(rows: Vec<FmRow>, eqs: &[Row], n: usize, z: &[Rat]) -> Result<Vec<FmRow>, KernelError> {
    let live: Vec<usize> = (0..n)
        .filter(|&j| rows.iter().any(|r| !is_zero(&r.a[j])) || eqs.iter().any(|e| !is_zero(&e.a[j])))
        .collect();
    #[derive(Clone, Copy, PartialEq)]
    enum State {
        Open,
        Kept,
        Dropped,
    }
    let sz: Vec<Rat> = rows.iter().map(|r| slack(r, z)).collect();
    let mut state: Vec<State> = sz.iter().map(|s| if is_pos(s) { State::Open } else { State::Dropped }).collect();
    let mut confirmed: Vec<usize> = Vec::new();
    for i in 0..rows.len() {
        while state[i] == State::Open {
            let Some(x) = violator(i, &rows, &confirmed, eqs, &live, z) else {
                state[i] = State::Dropped;
                break;
            };
            // first rows crossed on the segment from z to x
            let mut best: Option<Rat> = None;
            let mut hit: Vec<usize> = Vec::new();
            for k in 0..rows.len() {
                if state[k] != State::Open {
                    continue;
                }
                let sx = slack(&rows[k], &x);
                if !is_neg(&sx) {
                    continue;
                }
                let t = &sz[k] / (&sz[k] - &sx);
                match &best {
                    Some(b) if t > *b => {}
                    Some(b) if t == *b => hit.push(k),
                    _ => {
                        best = Some(t);
                        hit = vec![k];
                    }
                }
            }
            if hit.len() == 1 {
                state[hit[0]] = State::Kept;
                confirmed.push(hit[0]);
                continue;
            }
            for k in hit {
                let others: Vec<usize> = (0..rows.len()).filter(|&o| o != k && state[o] != State::Dropped).collect();
                if implied_by(&rows[k], &rows, &others, eqs, &live) {
                    state[k] = State::Dropped;
                } else {
                    state[k] = State::Kept;
                    confirmed.push(k);
                }
            }
        }
    }
    Ok(rows.into_iter().zip(state).filter(|(_, s)| *s == State::Kept).map(|(r, _)| r).collect())
}

/// Keeps one row per facet of the projection onto `coords`, using generators of the
/// unprojected set: a valid row defines a facet iff its tight generators span a face of
/// codimension one.
fn prune_by_generators(rows: Vec<FmRow>, gens: &VRep, coords: &[usize]) -> Vec<FmRow> {
    let restrict = |v: &[Rat]| coords.iter().map(|&j| v[j].clone()).collect::<Vec<_>>();
    let pts: Vec<Vec<Rat>> = gens.vertices.iter().map(|v| restrict(v)).collect();
    let rays: Vec<Vec<Rat>> = gens.rays.iter().map(|r| restrict(r)).filter(|r| !is_zero_vec(r)).collect();
    let span = |points: &[&Vec<Rat>], dirs: &[&Vec<Rat>]| -> usize {
        let mut m: Vec<Vec<Rat>> = points[1..].iter().map(|p| sub(p, points[0])).collect();
        m.extend(dirs.iter().map(|d| d.to_vec()));
        rank(&m, coords.len())
    };
    let dq = span(&pts.iter().collect::<Vec<_>>(), &rays.iter().collect::<Vec<_>>());
    if dq == 0 {
        return Vec::new();
    }
    let mut seen: BTreeSet<(Vec<usize>, Vec<usize>)> = BTreeSet::new();
    let mut out = Vec::new();
    for r in rows {
        let a = restrict(&r.a);
        let tp: Vec<usize> = (0..pts.len()).filter(|&k| dot(&a, &pts[k]) == r.b).collect();
        debug_assert!(pts.iter().all(|p| dot(&a, p) >= r.b));
        if tp.is_empty() {
            continue;
        }
        let tr: Vec<usize> = (0..rays.len()).filter(|&k| is_zero(&dot(&a, &rays[k]))).collect();
        let tps: Vec<&Vec<Rat>> = tp.iter().map(|&k| &pts[k]).collect();
        let trs: Vec<&Vec<Rat>> = tr.iter().map(|&k| &rays[k]).collect();
        if span(&tps, &trs) + 1 == dq && seen.insert((tp, tr)) {
            out.push(r);
        }
    }
    out
}

/// Keeps, for each direction of `a`, only the row with the largest right-hand side.
fn tightest_per_direction(rows: Vec<FmRow>) -> Vec<FmRow> {
    let mut keyed: Vec<(Vec<Rat>, FmRow)> = rows
        .into_iter()
        .map(|r| {
            let dir = primitive_rat(&r.a);
            let k = r.a.iter().zip(&dir).find(|(x, _)| !is_zero(x)).map(|(x, d)| x / d);
            let b = match k {
                Some(k) => &r.b / k,
                None => r.b.clone(),
            };
            (dir.clone(), FmRow { a: dir, b })
        })
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| y.1.b.cmp(&x.1.b)));
    keyed.dedup_by(|x, y| x.0 == y.0);
    keyed.into_iter().map(|(_, r)| r).collect()
}
