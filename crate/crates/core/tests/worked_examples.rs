use weylcalc::oracle;
use weylcalc::{AffineWeyl, DimEngine, DimValue, GammaDescriptor, Kappa, QVec, StraightClass};

fn g(name: &str) -> AffineWeyl {
    AffineWeyl::preset(name).unwrap()
}

fn class(g: &AffineWeyl, kappa: &[i64], nu: &[i64]) -> StraightClass {
    g.resolve_class(&Kappa(kappa.to_vec()), &QVec::from_int(nu)).unwrap()
}

#[test]
fn sl2_group_law() {
    let sl2 = g("SL2");
    let s = sl2.from_affine_word(&[1]).unwrap();
    let w = sl2.mul(&sl2.translation(&[1]).unwrap(), &s);
    assert_eq!(sl2.inv(&w), w);
    assert_eq!(sl2.length(&sl2.translation(&[1]).unwrap()), 2);
    let s1s0 = sl2.from_affine_word(&[1, 0]).unwrap();
    assert_eq!(s1s0, sl2.translation(&[-1]).unwrap());
    assert_eq!(sl2.generator_by_label(0).unwrap().element, w);
}

#[test]
fn newton_points_and_straightness() {
    let sl2 = g("SL2");
    let s = sl2.from_affine_word(&[1]).unwrap();
    let t = sl2.translation(&[1]).unwrap();
    assert!(sl2.newton_point(&sl2.mul(&t, &s)).0.is_zero());
    assert_eq!(sl2.newton_point(&t), (QVec::from_int(&[1]), QVec::from_int(&[1])));
    let tm = sl2.translation(&[-1]).unwrap();
    assert_eq!(sl2.newton_point(&tm), (QVec::from_int(&[-1]), QVec::from_int(&[1])));
    assert!(sl2.is_straight(&sl2.identity()));
    assert!(!sl2.is_straight(&s));
    assert!(sl2.is_straight(&tm));
    assert_eq!(sl2.defect_of(&t), 0);

    let pgl2 = g("PGL2");
    let tau = pgl2.omega_elements().unwrap()[1].clone();
    assert_eq!(pgl2.length(&tau), 0);
    assert_eq!(pgl2.defect_of(&tau), 1);
    assert_eq!(pgl2.kappa_w(&tau), Kappa(vec![1]));
}

#[test]
fn eta_decompositions() {
    let sl2 = g("SL2");
    let d = sl2.datum();
    let s1 = d.fw_simple(0);
    let w = sl2.mul(&sl2.translation(&[2]).unwrap(), &sl2.from_finite(&s1));
    let e = sl2.eta_decomposition(&w).unwrap();
    assert!(e.x.is_identity());
    assert_eq!(e.mu, vec![2]);
    assert_eq!((e.y.clone(), e.eta.clone()), (s1.clone(), s1.clone()));
    let e = sl2.eta_decomposition(&sl2.from_finite(&s1)).unwrap();
    assert_eq!((e.x, e.mu, e.y.is_identity(), e.eta), (s1.clone(), vec![0], true, s1));
}

#[test]
fn omega_of_pgl3_is_cyclic_of_order_three() {
    let pgl3 = g("PGL3");
    let om = pgl3.omega_elements().unwrap();
    assert_eq!(om.len(), 3);
    for a in &om {
        for b in &om {
            assert!(om.contains(&pgl3.mul(a, b)));
        }
    }
    assert_eq!(g("SL2").omega_elements().unwrap(), vec![g("SL2").identity()]);
}

#[test]
fn reduction_and_decomposition() {
    let sl2 = g("SL2");
    let s1 = sl2.from_affine_word(&[1]).unwrap();
    let w = sl2.from_affine_word(&[0, 1, 0]).unwrap();
    let (m, path) = sl2.reduce_to_min(&w).unwrap();
    assert_eq!((m.clone(), path.len()), (s1.clone(), 1));
    assert_eq!(sl2.approx_closure(&s1).unwrap().len(), 1);

    let d = sl2.ux_decompose(&s1).unwrap();
    assert_eq!((d.u, d.x, d.k), (s1.clone(), sl2.identity(), vec![1]));
    let pgl2 = g("PGL2");
    let tau = pgl2.omega_elements().unwrap()[1].clone();
    let d = pgl2.ux_decompose(&tau).unwrap();
    assert_eq!((d.u, d.x, d.k.is_empty()), (pgl2.identity(), tau.clone(), true));

    assert_eq!(sl2.straight_class_of(&s1).unwrap(), class(&sl2, &[0], &[0]));
    let c = sl2.straight_class_of(&sl2.translation(&[-1]).unwrap()).unwrap();
    assert_eq!((c.length, c.defect), (2, 0));
    let c = pgl2.straight_class_of(&tau).unwrap();
    assert_eq!((c.kappa.0.clone(), c.nu_bar.is_zero(), c.length, c.defect), (vec![1], true, 0, 1));
}

#[test]
fn straight_class_enumeration() {
    assert_eq!(g("SL2").enumerate_straight_classes(2).unwrap().len(), 2);
    assert_eq!(g("PGL2").enumerate_straight_classes(0).unwrap().len(), 2);
    assert_eq!(g("PGL3").enumerate_straight_classes(0).unwrap().len(), 3);
}

#[test]
fn spherical_subsets_and_p_alcoves() {
    let sl2 = g("SL2");
    assert!(sl2.is_spherical(&[]));
    assert!(!sl2.is_spherical(&[0, 1]));
    assert!(g("SL3").is_spherical(&[0, 1]));
    let tm = sl2.translation(&[-1]).unwrap();
    assert!(sl2.p_alcove_test(&tm, &QVec::from_int(&[-1])));
    let w = sl2.mul(&sl2.translation(&[1]).unwrap(), &sl2.from_affine_word(&[1]).unwrap());
    assert!(sl2.p_alcove_test(&w, &QVec::zero(1)));
}

#[test]
fn flag_dimensions() {
    let e = DimEngine::new(g("SL2"));
    let sl2 = e.group();
    let basic = class(sl2, &[0], &[0]);
    let s1 = sl2.from_affine_word(&[1]).unwrap();
    let s0s1s0 = sl2.from_affine_word(&[0, 1, 0]).unwrap();
    let tm = sl2.translation(&[-1]).unwrap();
    assert_eq!(e.dim_x_flag(&s1, &basic).unwrap(), DimValue::Finite(1));
    assert_eq!(e.dim_x_flag(&tm, &basic).unwrap(), DimValue::Empty);
    assert_eq!(e.dim_x_flag(&s0s1s0, &basic).unwrap(), DimValue::Finite(2));
    assert_eq!(e.virtual_dimension(&s0s1s0, &basic).unwrap().integral().unwrap(), 2);
    let top = class(sl2, &[0], &[1]);
    assert_eq!(e.virtual_dimension(&tm, &top).unwrap().integral().unwrap(), 0);
    assert_eq!(e.dim_x_flag(&tm, &top).unwrap(), DimValue::Finite(0));
    for d in 0..4 {
        let gd = GammaDescriptor::with_springer_dim(basic.clone(), d);
        assert_eq!(e.dim_y_flag(&s1, &gd).unwrap(), DimValue::Finite(1 + d));
        assert_eq!(e.dim_y_flag(&tm, &gd).unwrap(), DimValue::Empty);
    }
}

#[test]
fn grassmannian_dimensions() {
    let e = DimEngine::new(g("SL2"));
    let basic = class(e.group(), &[0], &[0]);
    let top = class(e.group(), &[0], &[1]);
    assert_eq!(e.dim_x_grass(&[1], &basic).unwrap(), DimValue::Finite(1));
    assert_eq!(e.dim_x_grass(&[1], &top).unwrap(), DimValue::Finite(0));
    assert_eq!(e.dim_y_grass(&[1], &GammaDescriptor::with_springer_dim(basic, 0)).unwrap(), DimValue::Finite(1));
    assert_eq!(e.dim_y_grass(&[1], &GammaDescriptor::with_springer_dim(top.clone(), 2)).unwrap(), DimValue::Finite(2));
    assert_eq!(GammaDescriptor::with_invariants(top, 3, 3).resolve_springer_dim().unwrap(), 1);

    let p = DimEngine::new(g("PGL2"));
    let odd = class(p.group(), &[1], &[0]);
    assert_eq!(p.dim_x_grass(&[2], &odd).unwrap(), DimValue::Empty);
    assert_eq!(GammaDescriptor::with_invariants(odd, 1, 0).resolve_springer_dim().unwrap(), 1);
}

#[test]
fn oracle_examples() {
    let sl2 = g("SL2");
    assert_eq!(oracle::cayley_ball(&sl2, 3).unwrap().len(), 7);
    let w = sl2.from_affine_word(&[0, 1, 0]).unwrap();
    assert_eq!(oracle::brute_min_length(&sl2, &w, 2).unwrap(), 1);
    let tm = sl2.translation(&[-1]).unwrap();
    assert!(oracle::brute_straight_check(&sl2, &tm, 12));
    assert_eq!(oracle::brute_min_length(&sl2, &tm, 4).unwrap(), 2);
}

#[test]
fn reduction_reaches_exactly_the_profile_classes() {
    let e = DimEngine::new(g("PGL2"));
    let pg = e.group();
    let classes = pg.enumerate_straight_classes(2).unwrap();
    for w in pg.elements_by_length(4).unwrap().into_iter().flatten() {
        let profile = e.profile(&w).unwrap();
        for c in &classes {
            assert_eq!(!e.dim_x_flag(&w, c).unwrap().is_empty(), profile.contains_key(c));
        }
    }
}
