//! Double description method for polyhedral cones `{z : A z >= 0}`.

use fixedbitset::FixedBitSet;

use super::linalg::dot;
use super::rational::{is_neg, is_pos, is_zero, primitive_rat, Rat};

/// Generators of a cone: a lineality basis and extreme rays modulo lineality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerators {
    pub lineality: Vec<Vec<Rat>>,
    pub rays: Vec<Vec<Rat>>,
}

struct Ray {
    v: Vec<Rat>,
    zeros: FixedBitSet,
}

/// Extreme rays and lineality of `{z in R^d : row·z >= 0 for all rows}`.
/// Rays are integer-primitive and sorted.
pub fn cone_generators(rows: &[Vec<Rat>], d: usize) -> ConeGenerators {
    let m = rows.len();
    let mut lin: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            let mut e = vec![Rat::from(0); d];
            e[i] = Rat::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    let mut processed = FixedBitSet::with_capacity(m);

    for (idx, a) in rows.iter().enumerate() {
        if let Some(k) = lin.iter().position(|l| !is_zero(&dot(a, l))) {
            let mut lk = lin.swap_remove(k);
            let mut s = dot(a, &lk);
            if is_neg(&s) {
                lk.iter_mut().for_each(|x| *x = -&*x);
                s = -s;
            }
            for l in lin.iter_mut() {
                let f = dot(a, l) / &s;
                if !is_zero(&f) {
                    for (x, y) in l.iter_mut().zip(&lk) {
                        *x -= &f * y;
                    }
                }
            }
            for r in rays.iter_mut() {
                let f = dot(a, &r.v) / &s;
                if !is_zero(&f) {
                    for (x, y) in r.v.iter_mut().zip(&lk) {
                        *x -= &f * y;
                    }
                    r.v = primitive_rat(&r.v);
                }
                r.zeros.insert(idx);
            }
            rays.push(Ray { v: primitive_rat(&lk), zeros: processed.clone() });
            processed.insert(idx);
            continue;
        }

        let vals: Vec<Rat> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| is_pos(&vals[i])).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| is_neg(&vals[i])).collect();
        processed.insert(idx);
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if is_zero(v) {
                    r.zeros.insert(idx);
                }
            }
            continue;
        }
        let min_common = d.saturating_sub(lin.len() + 2);
        let mut new_rays: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                if common.count_ones(..) < min_common {
                    continue;
                }
                let adjacent = (0..rays.len()).all(|r| r == p || r == q || !common.is_subset(&rays[r].zeros));
                if !adjacent {
                    continue;
                }
                let sp = &vals[p];
                let sq = -&vals[q];
                let v: Vec<Rat> = rays[q].v.iter().zip(&rays[p].v).map(|(x, y)| sp * x + &sq * y).collect();
                common.insert(idx);
                new_rays.push(Ray { v: primitive_rat(&v), zeros: common });
            }
        }
        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + new_rays.len());
        for (mut r, v) in rays.into_iter().zip(vals) {
            if is_neg(&v) {
                continue;
            }
            if is_zero(&v) {
                r.zeros.insert(idx);
            }
            kept.push(r);
        }
        kept.extend(new_rays);
        rays = kept;
    }

    let mut out_rays: Vec<Vec<Rat>> = rays.into_iter().map(|r| r.v).collect();
    out_rays.sort();
    out_rays.dedup();
    let lineality = lin.into_iter().map(|l| primitive_rat(&l)).collect();
    ConeGenerators { lineality, rays: out_rays }
}
