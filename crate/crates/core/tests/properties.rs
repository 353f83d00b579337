use std::sync::OnceLock;

use num_rational::Rational64;
use proptest::prelude::*;
use weylcalc::oracle;
use weylcalc::rational::dot;
use weylcalc::{AffineRoot, AffineWeyl, AffineWeylElt, DimEngine, DimValue, GammaDescriptor, QVec};

const NAMES: [&str; 6] = ["SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4"];

fn engines() -> &'static Vec<DimEngine> {
    static E: OnceLock<Vec<DimEngine>> = OnceLock::new();
    E.get_or_init(|| NAMES.iter().map(|n| DimEngine::new(AffineWeyl::preset(n).unwrap())).collect())
}

fn omega(g: &AffineWeyl) -> Vec<AffineWeylElt> {
    g.omega_elements().unwrap_or_else(|_| vec![g.identity()])
}

/// `s_{i_1} ... s_{i_k} τ` from raw indices, reduced into range.
fn element(g: &AffineWeyl, word: &[usize], tau: usize) -> AffineWeylElt {
    let gens = g.simple_reflections();
    let om = omega(g);
    let mut w = om[tau % om.len()].clone();
    for &i in word.iter().rev() {
        w = g.mul(&gens[i % gens.len()].element, &w);
    }
    w
}

fn arb_word(max: usize) -> impl Strategy<Value = (Vec<usize>, usize)> {
    (prop::collection::vec(0usize..8, 0..max), 0usize..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn group_law(gi in 0..NAMES.len(), a in arb_word(8), b in arb_word(8), c in arb_word(8)) {
        let g = engines()[gi].group();
        let (a, b, c) = (element(g, &a.0, a.1), element(g, &b.0, b.1), element(g, &c.0, c.1));
        prop_assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
        prop_assert_eq!(g.mul(&a, &g.inv(&a)), g.identity());
        prop_assert_eq!(g.mul(&g.inv(&a), &a), g.identity());
    }

    #[test]
    fn kappa_is_additive(gi in 0..NAMES.len(), a in arb_word(8), b in arb_word(8)) {
        let g = engines()[gi].group();
        let d = g.datum();
        let (a, b) = (element(g, &a.0, a.1), element(g, &b.0, b.1));
        let sum: Vec<i64> = a.lambda.iter().zip(&b.lambda).map(|(x, y)| x + y).collect();
        prop_assert_eq!(d.kappa_class(&sum), d.kappa_class(&g.mul(&a, &b).lambda));
        prop_assert_eq!(g.kappa_w(&g.mul(&a, &b)), d.kappa_class(&sum));
    }

    #[test]
    fn kappa_vanishes_on_coroots(gi in 0..NAMES.len(), coeffs in prop::collection::vec(-3i64..=3, 3)) {
        let d = engines()[gi].group().datum();
        let mut v = vec![0; d.rank()];
        for (c, cor) in coeffs.iter().zip(d.simple_coroots()) {
            for (x, y) in v.iter_mut().zip(cor) {
                *x += c * y;
            }
        }
        prop_assert_eq!(d.kappa_class(&v), d.kappa_class(&vec![0; d.rank()]));
    }

    #[test]
    fn length_symmetries(gi in 0..NAMES.len(), w in arb_word(10), t1 in 0usize..6, t2 in 0usize..6) {
        let g = engines()[gi].group();
        let w = element(g, &w.0, w.1);
        let om = omega(g);
        let (a, b) = (&om[t1 % om.len()], &om[t2 % om.len()]);
        prop_assert_eq!(g.length(&w), g.length(&g.inv(&w)));
        prop_assert_eq!(g.length(&g.mul(&g.mul(a, &w), b)), g.length(&w));
        prop_assert_eq!(g.length(&w), g.length_by_inversions(&w));
    }

    #[test]
    fn generator_conjugation_changes_length_by_even_step(gi in 0..NAMES.len(), w in arb_word(10), s in 0usize..8) {
        let g = engines()[gi].group();
        let w = element(g, &w.0, w.1);
        let s = s % g.simple_reflections().len();
        let diff = g.length(&g.conj_by_generator(&w, s)) as i64 - g.length(&w) as i64;
        prop_assert!([-2, 0, 2].contains(&diff), "{}", diff);
    }

    #[test]
    fn newton_point_invariance(gi in 0..NAMES.len(), w in arb_word(8), h in arb_word(6)) {
        let g = engines()[gi].group();
        let (w, h) = (element(g, &w.0, w.1), element(g, &h.0, h.1));
        let (nu, nu_bar) = g.newton_point(&w);
        prop_assert_eq!(g.newton_point(&g.inv(&w)).0, nu.neg());
        prop_assert_eq!(g.newton_point(&g.conj(&h, &w)).1, nu_bar.clone());
        prop_assert!(g.datum().is_dominant(&nu_bar));
    }

    #[test]
    fn reduction_preserves_class_invariants(gi in 0..NAMES.len(), w in arb_word(8)) {
        let g = engines()[gi].group();
        let w = element(g, &w.0, w.1);
        let (m, path) = g.reduce_to_min(&w).unwrap();
        prop_assert!(g.length(&m) <= g.length(&w));
        prop_assert_eq!(g.kappa_w(&m), g.kappa_w(&w));
        prop_assert_eq!(g.newton_point(&m).1, g.newton_point(&w).1);
        let mut prev = g.length(&w);
        for step in &path {
            prop_assert!(g.length(&step.after) <= prev);
            prev = g.length(&step.after);
        }
        let d = g.ux_decompose(&m).unwrap();
        prop_assert_eq!(g.length(&d.u) + g.length(&d.x), g.length(&m));
        prop_assert!(g.is_straight(&d.x));
        prop_assert_eq!(g.kappa_w(&d.x), g.kappa_w(&m));
        prop_assert_eq!(g.straight_class_of(&m).unwrap(), g.class_of_straight(&d.x));
        prop_assert!(g.p_alcove_test(&m, &g.newton_point(&m).0));
    }

    #[test]
    fn straight_class_fields(gi in 0..NAMES.len(), w in arb_word(8)) {
        let g = engines()[gi].group();
        let w = element(g, &w.0, w.1);
        let c = g.straight_class_of(&w).unwrap();
        prop_assert_eq!(Rational64::from(c.length as i64), c.nu_bar.pair(g.datum().two_rho()));
        if g.is_straight(&w) {
            prop_assert_eq!(c.defect, g.defect_of(&w));
            prop_assert_eq!(c.length, g.length(&w));
        }
    }

    #[test]
    fn alcove_orientation(gi in 0..NAMES.len(), w in arb_word(8), root in 0usize..16) {
        let g = engines()[gi].group();
        let w = element(g, &w.0, w.1);
        let roots = g.all_roots();
        let a = AffineRoot { alpha: roots[root % roots.len()].clone(), k: 0 };
        let b = g.act_on_root(&w, &a);
        let half = g.alcove_point().scale(Rational64::new(1, 2));
        let value = half.pair(&b.alpha) + Rational64::from(b.k);
        prop_assert_ne!(value, Rational64::from(0));
        prop_assert_eq!(value > Rational64::from(0), g.is_positive_root(&b));
    }

    #[test]
    fn virtual_dimension_bound(gi in 0..NAMES.len(), w in arb_word(7), ci in 0usize..32) {
        let engine = &engines()[gi];
        let g = engine.group();
        let w = element(g, &w.0, w.1);
        let classes = g.enumerate_straight_classes(4).unwrap();
        let c = &classes[ci % classes.len()];
        let x = engine.dim_x_flag(&w, c).unwrap();
        if let DimValue::Finite(d) = x {
            prop_assert!(2 * d as i64 <= engine.virtual_dimension(&w, c).unwrap().twice);
        }
        for sd in 0..3u64 {
            let y = engine.dim_y_flag(&w, &GammaDescriptor::with_springer_dim(c.clone(), sd)).unwrap();
            prop_assert_eq!(y, x.plus(sd));
        }
        if let Some(alts) = engine.alternative_profiles(&w).unwrap() {
            let base = engine.profile(&w).unwrap();
            for p in alts {
                prop_assert_eq!(&p, &*base);
            }
        }
    }

    #[test]
    fn minimal_elements_have_base_dimension(gi in 0..NAMES.len(), w in arb_word(8)) {
        let engine = &engines()[gi];
        let g = engine.group();
        let (m, _) = g.reduce_to_min(&element(g, &w.0, w.1)).unwrap();
        let c = g.straight_class_of(&m).unwrap();
        prop_assert_eq!(engine.dim_x_flag(&m, &c).unwrap(), DimValue::Finite((g.length(&m) - c.length) as u64));
    }

    #[test]
    fn dominant_rep_is_reflection_invariant(gi in 0..NAMES.len(), num in prop::collection::vec(-6i64..=6, 3), den in 1i64..4) {
        let d = engines()[gi].group().datum();
        let nu = QVec::new(num[..d.rank()].to_vec(), den);
        let rep = d.dominant_rep(&nu);
        for i in 0..d.semisimple_rank() {
            prop_assert_eq!(d.dominant_rep(&nu.apply(d.reflection(i))), rep.clone());
        }
    }

    #[test]
    fn element_spec_round_trip(gi in 0..NAMES.len(), w in arb_word(10)) {
        let g = engines()[gi].group();
        let w = element(g, &w.0, w.1);
        let spec = g.to_spec(&w);
        let text = serde_json::to_string(&spec).unwrap();
        prop_assert_eq!(g.from_spec(&serde_json::from_str(&text).unwrap()).unwrap(), w);
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for name in ["SL2", "SL3", "Sp4"] {
        let d = weylcalc::RootDatum::preset(name).unwrap();
        let mut grid = Vec::new();
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                let v = QVec::new([a, b][..d.rank()].to_vec(), 2);
                if d.is_dominant(&v) && !grid.contains(&v) {
                    grid.push(v);
                }
            }
        }
        let leq = |x: &QVec, y: &QVec| d.dominance_leq(x, y).unwrap();
        for x in &grid {
            assert!(leq(x, x));
            for y in &grid {
                if leq(x, y) && leq(y, x) {
                    assert_eq!(x, y);
                }
                for z in &grid {
                    if leq(x, y) && leq(y, z) {
                        assert!(leq(x, z), "{name}");
                    }
                }
            }
        }
    }
}

#[test]
fn rho_pairs_to_one_with_simple_coroots() {
    for name in NAMES {
        let d = weylcalc::RootDatum::preset(name).unwrap();
        for c in d.simple_coroots() {
            assert_eq!(dot(d.two_rho(), c), 2, "{name}");
            assert_eq!(d.rho_pairing(&QVec::from_int(c)), Rational64::from(1));
        }
    }
}

#[test]
fn finite_elements_permute_roots() {
    for name in ["SL3", "Sp4", "SL4"] {
        let d = weylcalc::RootDatum::preset(name).unwrap();
        let pos = d.positive_roots();
        for w in d.enumerate_w0().unwrap() {
            let mut negated = 0;
            for a in pos {
                // Functionals transform by α ↦ α ∘ w^{-1}.
                let image: Vec<i64> = (0..d.rank())
                    .map(|j| (0..d.rank()).map(|k| a[k] * w.inverse_matrix()[k * d.rank() + j]).sum())
                    .collect();
                let neg: Vec<i64> = image.iter().map(|x| -x).collect();
                if pos.contains(&neg) {
                    negated += 1;
                } else {
                    assert!(pos.contains(&image), "{name}");
                }
            }
            assert_eq!(negated, d.fw_length(&w));
            assert_eq!(d.fw_reduced_word(&w).len(), d.fw_length(&w));
        }
    }
}

#[test]
fn ball_distances_are_graded() {
    for name in ["SL2", "PGL2", "SL3"] {
        let g = AffineWeyl::preset(name).unwrap();
        let ball = oracle::cayley_ball(&g, 5).unwrap();
        for (w, &d) in &ball.distances {
            assert!(ball.distances.contains_key(&g.inv(w)), "{name}: not closed under inverse");
            for s in g.simple_reflections() {
                if let Some(&e) = ball.distances.get(&g.mul(&s.element, w)) {
                    assert_eq!((d as i64 - e as i64).abs(), 1, "{name}");
                }
            }
        }
    }
}
