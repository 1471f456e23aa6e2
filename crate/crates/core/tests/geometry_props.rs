use proptest::prelude::*;

use splitwidth_core::closure_prover::{closure_hrep, hrep_within, vrep_within, BodyFamily, Method};
use splitwidth_core::corpus::{random_body, random_instance, rng, CorpusConfig};
use splitwidth_core::exact_kernel::rational::rat;
use splitwidth_core::exact_kernel::{hrep_to_vrep, project, vrep_to_hrep, Rat, VRep};
use splitwidth_core::polyhedron::{default_box, enumerate_mixed_integer_points};
use splitwidth_core::relaxation::{is_trivial, relax_balas, relax_vertices, relaxation_hrep};

fn point(dim: usize) -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec((-5i64..=5, 1i64..=2), dim).prop_map(|v| v.into_iter().map(|(n, d)| rat(n, d)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Many vertices in R^4 give intermediate systems large enough to be pruned by LP.
    #[test]
    fn projection_of_4d_hull_is_its_shadow(pts in prop::collection::vec(point(4), 5..=12)) {
        let v = VRep::new(4, pts, vec![]);
        let h = vrep_to_hrep(&v).unwrap();
        let shadow = VRep::new(2, v.vertices.iter().map(|x| vec![x[0].clone(), x[3].clone()]).collect(), vec![]);
        prop_assert_eq!(project(&h, &[0, 3]).unwrap(), vrep_to_hrep(&shadow).unwrap());
    }

    #[test]
    fn relaxation_paths_agree_and_are_valid(seed in any::<u64>(), bounded in any::<bool>()) {
        let mut r = rng(seed);
        let cfg = CorpusConfig::default();
        let inst = random_instance(&mut r, &cfg, bounded);
        let l = random_body(&mut r, inst.dim(), &inst.integer_vars, cfg.body_coeff);
        let rv = relax_vertices(&l, &inst.vrep).unwrap();
        let hv = relaxation_hrep(&rv).unwrap();
        let p = vrep_to_hrep(&inst.vrep).unwrap();
        prop_assert!(hrep_within(&hv, &p).unwrap());
        if let Ok(hb) = relax_balas(&l, &inst.vrep) {
            prop_assert_eq!(&hv, &hb);
        }
        if is_trivial(&l, &inst.vrep).unwrap() {
            prop_assert_eq!(&hv, &p);
        }
        if bounded {
            let bx = default_box(&inst, 0).unwrap();
            let pts = enumerate_mixed_integer_points(&inst, &bx, 100_000).unwrap();
            for x in &pts.points {
                prop_assert!(hv.contains(x));
            }
        }
    }

    #[test]
    fn larger_families_give_smaller_closures(seed in any::<u64>()) {
        let mut r = rng(seed);
        let cfg = CorpusConfig::default();
        let inst = random_instance(&mut r, &cfg, true);
        let bodies: Vec<_> = (0..3).map(|_| random_body(&mut r, inst.dim(), &inst.integer_vars, cfg.body_coeff)).collect();
        let small = BodyFamily::new("first", bodies[..1].to_vec()).unwrap();
        let large = BodyFamily::new("all", bodies).unwrap();
        let a = closure_hrep(&inst.vrep, &small, Method::Vertices).unwrap();
        let b = closure_hrep(&inst.vrep, &large, Method::Vertices).unwrap();
        prop_assert!(hrep_within(&b, &a).unwrap());
        if !b.is_canonical_empty() {
            prop_assert!(vrep_within(&hrep_to_vrep(&b).unwrap(), &a));
        }
    }
}
