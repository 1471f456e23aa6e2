use super::dd::cone_generators;
use super::hrep::{HRep, Row, VRep};
use super::linalg::is_zero_vec;
use super::rational::{is_pos, is_zero, one, primitive_rat, zero, Rat};
use super::KernelError;

/// Facet description of `conv(vertices) + cone(rays)`, canonical and irredundant.
pub fn vrep_to_hrep(v: &VRep) -> Result<HRep, KernelError> {
    v.check_dims()?;
    if v.vertices.is_empty() {
        return Err(KernelError::NoVertices);
    }
    let n = v.dim;
    // Valid rows (a, b) form the cone a·v - b >= 0, a·r >= 0.
    let mut rows = Vec::with_capacity(v.vertices.len() + v.rays.len());
    for p in &v.vertices {
        let mut r = p.clone();
        r.push(-one());
        rows.push(r);
    }
    for ray in &v.rays {
        let mut r = ray.clone();
        r.push(zero());
        rows.push(r);
    }
    let g = cone_generators(&rows, n + 1);
    let split = |mut z: Vec<Rat>| {
        let b = z.pop().unwrap();
        Row::new(z, b)
    };
    let mut h = HRep::new(n);
    h.eqs = g.lineality.into_iter().map(split).collect();
    h.ineqs = g.rays.into_iter().map(split).collect();
    Ok(h.canonical_form_unchecked())
}

/// Vertices and extreme rays of a pointed polyhedron.
pub fn hrep_to_vrep(h: &HRep) -> Result<VRep, KernelError> {
    h.check_dims()?;
    let n = h.dim;
    let c = h.canonical_form_unchecked();
    if c.is_canonical_empty() {
        return Err(KernelError::Empty);
    }
    // Homogenize: (x, t) with a·x - b t >= 0, t >= 0; equations as two inequalities.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut t_row = vec![zero(); n];
    t_row.push(one());
    rows.push(t_row);
    for r in &c.eqs {
        let mut z = r.a.clone();
        z.push(-&r.b);
        rows.push(z.iter().map(|x| -x).collect());
        rows.push(z);
    }
    for r in &c.ineqs {
        let mut z = r.a.clone();
        z.push(-&r.b);
        rows.push(z);
    }
    let g = cone_generators(&rows, n + 1);
    if !g.rays.iter().any(|z| is_pos(&z[n])) {
        return Err(KernelError::Empty);
    }
    if !g.lineality.is_empty() {
        return Err(KernelError::NonPointed);
    }
    let mut vertices = Vec::new();
    let mut rays = Vec::new();
    for z in g.rays {
        let t = z[n].clone();
        if is_zero(&t) {
            let r = z[..n].to_vec();
            if !is_zero_vec(&r) {
                rays.push(primitive_rat(&r));
            }
        } else {
            vertices.push(z[..n].iter().map(|x| x / &t).collect());
        }
    }
    Ok(VRep::new(n, vertices, rays).normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_kernel::hrep::canonicalize;
    use crate::exact_kernel::rational::{ivec, rat, ri, rvec};

    #[test]
    fn unit_simplex() {
        let v = VRep::new(2, vec![ivec(&[0, 0]), ivec(&[1, 0]), ivec(&[0, 1])], vec![]);
        let h = vrep_to_hrep(&v).unwrap();
        let mut expect = HRep::new(2);
        expect.push_ge(ivec(&[1, 0]), ri(0));
        expect.push_ge(ivec(&[0, 1]), ri(0));
        expect.push_le(ivec(&[1, 1]), ri(1));
        assert_eq!(h, expect.canonical_form_unchecked());
        assert_eq!(hrep_to_vrep(&h).unwrap(), v.normalized());
    }

    #[test]
    fn translated_orthant() {
        let v = VRep::new(2, vec![rvec(&[(1, 2), (1, 2)])], vec![ivec(&[1, 0]), ivec(&[0, 1])]);
        let h = vrep_to_hrep(&v).unwrap();
        assert_eq!(h.ineqs, vec![Row::new(ivec(&[0, 2]), ri(1)), Row::new(ivec(&[2, 0]), ri(1))]);
        assert!(h.eqs.is_empty());
        assert_eq!(hrep_to_vrep(&h).unwrap(), v.normalized());
    }

    #[test]
    fn lower_dimensional_polytope() {
        let v = VRep::new(3, vec![ivec(&[0, 0, 1]), ivec(&[1, 0, 1]), ivec(&[0, 1, 1])], vec![]);
        let h = vrep_to_hrep(&v).unwrap();
        assert_eq!(h.eqs, vec![Row::new(ivec(&[0, 0, 1]), ri(1))]);
        assert_eq!(h.ineqs.len(), 3);
        assert_eq!(h, canonicalize(&h).unwrap());
        assert_eq!(hrep_to_vrep(&h).unwrap(), v.normalized());
    }

    #[test]
    fn single_point() {
        let v = VRep::new(2, vec![rvec(&[(1, 3), (-2, 5)])], vec![]);
        let h = vrep_to_hrep(&v).unwrap();
        assert_eq!(h.eqs.len(), 2);
        assert!(h.ineqs.is_empty());
        assert_eq!(hrep_to_vrep(&h).unwrap(), v);
    }

    #[test]
    fn empty_and_non_pointed() {
        let mut h = HRep::new(1);
        h.push_ge(ivec(&[1]), ri(1));
        h.push_le(ivec(&[1]), ri(0));
        assert_eq!(hrep_to_vrep(&h), Err(KernelError::Empty));
        let mut h = HRep::new(2);
        h.push_ge(ivec(&[1, 0]), ri(0));
        assert_eq!(hrep_to_vrep(&h), Err(KernelError::NonPointed));
        let mut h = HRep::new(2);
        h.push_ge(ivec(&[1, 0]), rat(1, 2));
        h.push_le(ivec(&[1, 0]), rat(1, 3));
        assert_eq!(hrep_to_vrep(&h), Err(KernelError::Empty));
    }

    #[test]
    fn no_vertices_is_an_error() {
        assert_eq!(vrep_to_hrep(&VRep::new(2, vec![], vec![ivec(&[1, 0])])), Err(KernelError::NoVertices));
    }
}
