//! Seeded random instances, bodies, cut families and halfline cases.

use malachite_base::num::arithmetic::traits::Floor;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cutlib::{classify_cut, Cut};
use crate::exact_kernel::hrep::VRep;
use crate::exact_kernel::linalg::dot;
use crate::exact_kernel::rational::{from_int, gcd_ints, ints_to_rats, is_neg, is_pos, Int, Rat};
use crate::exact_kernel::{hrep_to_vrep, vrep_to_hrep};
use crate::lattice_free::{make_split_set, SplitBody};
use crate::polyhedron::Instance;

pub const DEFAULT_SEED: u64 = 0x5EED_2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub max_dim: usize,
    pub max_vertices: usize,
    pub max_rays: usize,
    pub max_denominator: i64,
    /// Coordinates are drawn from `[-coord_range, coord_range]`.
    pub coord_range: i64,
    pub body_coeff: i64,
    pub bodies_per_instance: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_dim: 3,
            max_vertices: 5,
            max_rays: 2,
            max_denominator: 4,
            coord_range: 3,
            body_coeff: 3,
            bodies_per_instance: 2,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R, range: i64, max_den: i64) -> Rat {
    let d = rng.gen_range(1..=max_den);
    let n = rng.gen_range(-range * d..=range * d);
    Rat::from(n) / Rat::from(d)
}

fn random_int_vec<R: Rng>(rng: &mut R, len: usize, bound: i64) -> Vec<Int> {
    loop {
        let v: Vec<Int> = (0..len).map(|_| Int::from(rng.gen_range(-bound..=bound))).collect();
        if v.iter().any(|x| *x != 0) {
            return v;
        }
    }
}

/// A pointed instance in canonical V-form with at least one integer variable.
pub fn random_instance<R: Rng>(rng: &mut R, cfg: &CorpusConfig, bounded: bool) -> Instance {
    loop {
        let dim = rng.gen_range(1..=cfg.max_dim);
        let nv = rng.gen_range(1..=cfg.max_vertices);
        let vertices: Vec<Vec<Rat>> = (0..nv)
            .map(|_| (0..dim).map(|_| random_rational(rng, cfg.coord_range, cfg.max_denominator)).collect())
            .collect();
        let nr = if bounded { 0 } else { rng.gen_range(0..=cfg.max_rays) };
        let rays: Vec<Vec<Rat>> = (0..nr).map(|_| ints_to_rats(&random_int_vec(rng, dim, 1))).collect();
        let raw = VRep::new(dim, vertices, rays);
        let Ok(h) = vrep_to_hrep(&raw) else { continue };
        let Ok(vrep) = hrep_to_vrep(&h) else { continue };
        let mut vars: Vec<usize> = (0..dim).collect();
        vars.shuffle(rng);
        let p = rng.gen_range(1..=dim);
        let mut integer_vars = vars[..p].to_vec();
        integer_vars.sort();
        return Instance::new(vrep, integer_vars);
    }
}

fn minors_gcd_one(a: &[Int], b: &[Int]) -> bool {
    let mut minors = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            minors.push(&a[i] * &b[j] - &a[j] * &b[i]);
        }
    }
    gcd_ints(minors.iter()) == 1u32
}

/// A split set or, when there are at least two integer variables, a unimodular image of
/// `S^2` (a body of max-facet-width 2). Coefficients stay within `coeff`.
pub fn random_body<R: Rng>(rng: &mut R, dim: usize, integer_vars: &[usize], coeff: i64) -> SplitBody {
    let p = integer_vars.len();
    let spread = |v: &[Int]| -> Vec<Int> {
        let mut out = vec![Int::from(0); dim];
        for (k, &j) in integer_vars.iter().enumerate() {
            out[j] = v[k].clone();
        }
        out
    };
    if p >= 2 && coeff >= 2 && rng.gen_bool(0.4) {
        loop {
            let a = random_int_vec(rng, p, 1);
            let b = random_int_vec(rng, p, 1);
            if !minors_gcd_one(&a, &b) {
                continue;
            }
            let s: Vec<Int> = a.iter().zip(&b).map(|(x, y)| -(x + y)).collect();
            let a0 = Int::from(rng.gen_range(-2..=1));
            let b0 = Int::from(rng.gen_range(-2..=1));
            let s0 = -(&a0 + &b0 + Int::from(2));
            return SplitBody::new(dim, integer_vars.to_vec(), vec![(spread(&a), a0), (spread(&b), b0), (spread(&s), s0)])
                .expect("nonzero integral facets");
        }
    }
    loop {
        let pi = random_int_vec(rng, p, coeff);
        if gcd_ints(pi.iter()) != 1u32 {
            continue;
        }
        let pi0 = Int::from(rng.gen_range(-coeff..coeff));
        return make_split_set(dim, integer_vars, &spread(&pi), &pi0).expect("primitive direction");
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusCase {
    pub instance: Instance,
    pub bodies: Vec<SplitBody>,
}

pub fn instance_corpus(seed: u64, count: usize, cfg: &CorpusConfig, bounded: bool) -> Vec<CorpusCase> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let instance = random_instance(&mut r, cfg, bounded);
            let bodies = (0..cfg.bodies_per_instance)
                .map(|_| random_body(&mut r, instance.dim(), &instance.integer_vars, cfg.body_coeff))
                .collect();
            CorpusCase { instance, bodies }
        })
        .collect()
}

/// A family of cuts and a candidate sharing the cut-off vertex set `vc` on a polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceCase {
    pub p: VRep,
    pub vc: Vec<usize>,
    pub family: Vec<Cut>,
    pub candidate: Cut,
}

/// A cut along `delta` cutting off exactly the `k` vertices with smallest value, if the
/// values separate there. The right-hand side sits at a random point of the gap, the top
/// end included.
pub fn cut_off_lowest<R: Rng>(rng: &mut R, p: &VRep, delta: Vec<Rat>, k: usize) -> Option<(Cut, Vec<usize>)> {
    let mut vals: Vec<(Rat, usize)> = p.vertices.iter().enumerate().map(|(i, v)| (dot(&delta, v), i)).collect();
    vals.sort();
    let lo = vals[k - 1].0.clone();
    let hi = vals[k].0.clone();
    if lo >= hi {
        return None;
    }
    let t = Rat::from(rng.gen_range(1..=4i64)) / Rat::from(4);
    let delta0 = &lo + t * (hi - &lo);
    let c = Cut::new(delta, delta0).ok()?;
    let vc = classify_cut(p, &c).ok()?.cut_off;
    Some((c, vc))
}

pub fn dominance_corpus(seed: u64, count: usize, cfg: &CorpusConfig) -> Vec<DominanceCase> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let inst = random_instance(&mut r, cfg, true);
        let p = inst.vrep;
        if p.vertices.len() < 2 {
            continue;
        }
        let k = r.gen_range(1..p.vertices.len());
        let delta = ints_to_rats(&random_int_vec(&mut r, p.dim, 3));
        let Some((candidate, vc)) = cut_off_lowest(&mut r, &p, delta, k) else { continue };
        let m = r.gen_range(1..=3);
        let mut family = Vec::new();
        for _ in 0..200 {
            if family.len() == m {
                break;
            }
            let delta = ints_to_rats(&random_int_vec(&mut r, p.dim, 3));
            if let Some((c, cvc)) = cut_off_lowest(&mut r, &p, delta, k) {
                if cvc == vc {
                    family.push(c);
                }
            }
        }
        if family.is_empty() {
            continue;
        }
        out.push(DominanceCase { p, vc, family, candidate });
    }
    out
}

/// A point strictly inside a body, an integral direction leaving it, and an integral cut
/// violated at the point and valid at the exit point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalflineCase {
    pub body: SplitBody,
    pub v: Vec<Rat>,
    pub r: Vec<Rat>,
    /// `sup{a : v + a r in L}`.
    pub alpha_body: Rat,
    pub cut: Cut,
}

/// `sup{a : v + a r in L}`, `None` when unbounded.
pub fn exit_scalar(l: &SplitBody, v: &[Rat], r: &[Rat]) -> Option<Rat> {
    let mut best: Option<Rat> = None;
    for f in &l.facets {
        let pi = ints_to_rats(&f.pi);
        let pr = dot(&pi, r);
        if is_neg(&pr) {
            let a = (dot(&pi, v) - from_int(&f.pi0)) / -pr;
            if best.as_ref().is_none_or(|b| a < *b) {
                best = Some(a);
            }
        }
    }
    best
}

pub fn halfline_corpus(seed: u64, count: usize, cfg: &CorpusConfig) -> Vec<HalflineCase> {
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let dim = r.gen_range(1..=cfg.max_dim);
        let iv: Vec<usize> = (0..dim).collect();
        let body = random_body(&mut r, dim, &iv, cfg.body_coeff);
        let v: Vec<Rat> = (0..dim).map(|_| random_rational(&mut r, cfg.coord_range, cfg.max_denominator)).collect();
        if !body.interior_contains(&v) {
            continue;
        }
        let dir = ints_to_rats(&random_int_vec(&mut r, dim, 2));
        let Some(alpha_body) = exit_scalar(&body, &v, &dir) else { continue };
        let exit: Vec<Rat> = v.iter().zip(&dir).map(|(a, b)| a + &alpha_body * b).collect();
        let delta = random_int_vec(&mut r, dim, 3);
        let dr = ints_to_rats(&delta);
        if !is_pos(&dot(&dr, &dir)) {
            continue;
        }
        let lo = Int::try_from(dot(&dr, &v).floor()).unwrap() + Int::from(1);
        let hi = Int::try_from(dot(&dr, &exit).floor()).unwrap();
        if lo > hi {
            continue;
        }
        let span = i64::try_from(&(&hi - &lo)).unwrap_or(0);
        let delta0 = &lo + Int::from(r.gen_range(0..=span));
        let cut = Cut::new(dr, from_int(&delta0)).expect("nonzero delta");
        out.push(HalflineCase { body, v, r: dir, alpha_body, cut });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::rational::ExtRat;
    use crate::lattice_free::{is_lattice_point_free, max_facet_width};
    use crate::polyhedron::IntBox;

    #[test]
    fn deterministic() {
        let cfg = CorpusConfig::default();
        assert_eq!(instance_corpus(7, 5, &cfg, false), instance_corpus(7, 5, &cfg, false));
        assert_ne!(instance_corpus(7, 5, &cfg, false), instance_corpus(8, 5, &cfg, false));
    }

    #[test]
    fn bodies_are_lattice_free_with_small_width() {
        let cfg = CorpusConfig::default();
        for case in instance_corpus(1, 40, &cfg, false) {
            for b in &case.bodies {
                let w = max_facet_width(b).unwrap();
                assert!(w == ExtRat::Finite(Rat::from(1)) || w == ExtRat::Finite(Rat::from(2)), "{b:?}");
                let bx = IntBox { lo: vec![Int::from(-6); b.integer_vars.len()], hi: vec![Int::from(6); b.integer_vars.len()] };
                assert!(is_lattice_point_free(b, Some(&bx), 1_000_000).unwrap().free);
            }
            assert!(case.instance.vrep.rays.len() <= cfg.max_rays);
            assert!(case.instance.vrep.vertices.len() <= cfg.max_vertices);
        }
    }

    #[test]
    fn dominance_cases_share_cut_off_sets() {
        for case in dominance_corpus(3, 20, &CorpusConfig::default()) {
            for c in case.family.iter().chain(std::iter::once(&case.candidate)) {
                assert_eq!(classify_cut(&case.p, c).unwrap().cut_off, case.vc);
            }
        }
    }

    #[test]
    fn halfline_cases_meet_hypotheses() {
        for case in halfline_corpus(4, 50, &CorpusConfig::default()) {
            assert!(!case.cut.holds(&case.v));
            let exit: Vec<Rat> = case.v.iter().zip(&case.r).map(|(a, b)| a + &case.alpha_body * b).collect();
            assert!(case.cut.holds(&exit));
            assert!(case.body.contains(&exit) && !case.body.interior_contains(&exit));
        }
    }
}
