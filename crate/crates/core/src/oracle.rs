//! Brute-force ground truth on small balls of the Cayley graph.
//!
//! Nothing here uses the length formula to *build* its answer except where
//! a length is the quantity being minimized; distances come from breadth
//! first search over `S̃` only.

use std::collections::{BTreeMap, BTreeSet};

use crate::affweyl::{AffineWeyl, AffineWeylElt};
use crate::dims::{DimEngine, DimValue};
use crate::classes::StraightClass;
use crate::error::{Error, Result};
use crate::finiteweyl::FiniteWeylElt;
use crate::rootdata::RootDatum;

/// Elements within Cayley distance `radius`, with their distances. Elements
/// of `Ω` sit at distance 0, and `d(w τ) = d(w)` for `τ ∈ Ω`.
#[derive(Clone, Debug)]
pub struct Ball {
    pub radius: usize,
    pub distances: BTreeMap<AffineWeylElt, usize>,
}

impl Ball {
    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = &AffineWeylElt> {
        self.distances.keys()
    }

    pub fn within(&self, r: usize) -> impl Iterator<Item = &AffineWeylElt> {
        self.distances.iter().filter(move |(_, &d)| d <= r).map(|(w, _)| w)
    }
}

/// Length-zero elements characterized without the length formula: `τ`
/// with `τ S̃ τ^{-1} = S̃`. Falls back to the identity when `π_1` is infinite.
pub fn omega_by_normalizer(group: &AffineWeyl) -> Result<Vec<AffineWeylElt>> {
    let candidates = match group.omega_elements() {
        Ok(om) => om,
        Err(Error::InfinitePi1) => return Ok(vec![group.identity()]),
        Err(e) => return Err(e),
    };
    let gens: BTreeSet<&AffineWeylElt> = group.simple_reflections().iter().map(|g| &g.element).collect();
    for tau in &candidates {
        for s in &gens {
            if !gens.contains(&group.conj(tau, s)) {
                return Err(Error::Internal(format!("{tau:?} does not normalize the simple reflections")));
            }
        }
    }
    Ok(candidates)
}

/// Breadth-first ball over left multiplication by `S̃`.
pub fn cayley_ball(group: &AffineWeyl, radius: usize) -> Result<Ball> {
    let mut distances: BTreeMap<AffineWeylElt, usize> = BTreeMap::new();
    let mut layer: Vec<AffineWeylElt> = omega_by_normalizer(group)?;
    for w in &layer {
        distances.insert(w.clone(), 0);
    }
    for d in 1..=radius {
        let mut next = Vec::new();
        for w in &layer {
            for s in group.simple_reflections() {
                let c = group.mul(&s.element, w);
                if !distances.contains_key(&c) {
                    if distances.len() >= group.budget() {
                        return Err(Error::ExplorationBudgetExceeded { budget: group.budget() });
                    }
                    distances.insert(c.clone(), d);
                    next.push(c);
                }
            }
        }
        layer = next;
    }
    Ok(Ball { radius, distances })
}

/// `min ℓ(g w g^{-1})` over `g` in the ball of the given radius.
pub fn brute_min_length(group: &AffineWeyl, w: &AffineWeylElt, radius: usize) -> Result<usize> {
    let ball = cayley_ball(group, radius)?;
    brute_min_length_in(group, w, &ball)
}

/// As [`brute_min_length`], reusing a prebuilt ball.
pub fn brute_min_length_in(group: &AffineWeyl, w: &AffineWeylElt, ball: &Ball) -> Result<usize> {
    let mut at_radius = usize::MAX;
    let mut inside = usize::MAX;
    for (g, &d) in &ball.distances {
        let l = group.length(&group.conj(g, w));
        at_radius = at_radius.min(l);
        if d < ball.radius {
            inside = inside.min(l);
        }
    }
    if ball.radius > 0 && at_radius < inside {
        return Err(Error::Inconclusive { radius: ball.radius });
    }
    Ok(at_radius)
}

/// `ℓ(w^n) = n ℓ(w)` for `n = 1..=n_max`.
pub fn brute_straight_check(group: &AffineWeyl, w: &AffineWeylElt, n_max: usize) -> bool {
    let l = group.length(w);
    let mut p = group.identity();
    (1..=n_max).all(|n| {
        p = group.mul(&p, w);
        group.length(&p) == n * l
    })
}

/// `dim X_μ(b)` through the projection `Fl → Gr`, whose fibers have
/// dimension `ℓ(w_0)`: the maximum of `dim X_w(b)` over `W_0 t^μ W_0`.
pub fn grass_by_fibration(engine: &DimEngine, mu: &[i64], class: &StraightClass) -> Result<DimValue> {
    let g = engine.group();
    let w0 = g.datum().enumerate_w0()?;
    let t = g.translation(mu)?;
    let mut double_coset = BTreeSet::new();
    for a in &w0 {
        let at = g.mul(&g.from_finite(a), &t);
        for b in &w0 {
            double_coset.insert(g.mul(&at, &g.from_finite(b)));
        }
    }
    let mut best = DimValue::Empty;
    for w in &double_coset {
        best = best.max(engine.dim_x_flag(w, class)?);
    }
    let lw0 = g.datum().fw_length(&g.datum().fw_longest()) as u64;
    match best {
        DimValue::Empty => Ok(DimValue::Empty),
        DimValue::Finite(d) if d >= lw0 => Ok(DimValue::Finite(d - lw0)),
        DimValue::Finite(d) => Err(Error::Internal(format!("fibre dimension {lw0} exceeds total {d}"))),
    }
}

/// The full `δ`-twisted conjugacy class `{g w δ(g)^{-1}}` in `W_0`.
pub fn twisted_class(datum: &RootDatum, w: &FiniteWeylElt) -> Result<BTreeSet<FiniteWeylElt>> {
    let mut out = BTreeSet::new();
    for g in datum.enumerate_w0()? {
        let dg = datum.fw_delta(&g);
        out.insert(datum.fw_compose(&datum.fw_compose(&g, w)?, &datum.fw_inverse(&dg)?)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> AffineWeyl {
        AffineWeyl::preset(name).unwrap()
    }

    #[test]
    fn ball_sizes() {
        let g = group("SL2");
        assert_eq!(cayley_ball(&g, 0).unwrap().len(), 1);
        assert_eq!(cayley_ball(&g, 3).unwrap().len(), 7);
        assert_eq!(cayley_ball(&group("PGL2"), 0).unwrap().len(), 2);
        assert_eq!(cayley_ball(&group("SL3"), 2).unwrap().len(), 10);
    }

    #[test]
    fn distance_is_length() {
        for name in ["SL2", "PGL2", "Sp4"] {
            let g = group(name);
            for (w, &d) in &cayley_ball(&g, 4).unwrap().distances {
                assert_eq!(g.length(w), d, "{name}");
            }
        }
    }

    #[test]
    fn minimal_lengths() {
        let g = group("SL2");
        let w = g.from_affine_word(&[0, 1, 0]).unwrap();
        assert_eq!(brute_min_length(&g, &w, 2).unwrap(), 1);
        assert_eq!(brute_min_length(&g, &w, 1), Err(Error::Inconclusive { radius: 1 }));
        assert_eq!(brute_min_length(&g, &g.identity(), 3).unwrap(), 0);
        let t = g.translation(&[-1]).unwrap();
        assert_eq!(brute_min_length(&g, &t, 3).unwrap(), 2);
    }

    #[test]
    fn straight_checks() {
        let g = group("SL2");
        assert!(brute_straight_check(&g, &g.translation(&[-1]).unwrap(), 12));
        assert!(!brute_straight_check(&g, &g.from_affine_word(&[1]).unwrap(), 2));
        let p = group("PGL2");
        for tau in p.omega_elements().unwrap() {
            assert!(brute_straight_check(&p, &tau, 7));
        }
    }

    #[test]
    fn infinite_pi1_ball() {
        let g = group("GL2");
        let ball = cayley_ball(&g, 2).unwrap();
        assert_eq!(ball.len(), 5);
    }

    #[test]
    fn twisted_classes_partition() {
        let d = RootDatum::preset("A2-twisted").unwrap();
        let mut seen = BTreeSet::new();
        let mut total = 0;
        for w in d.enumerate_w0().unwrap() {
            if seen.contains(&w) {
                continue;
            }
            let c = twisted_class(&d, &w).unwrap();
            total += c.len();
            seen.extend(c);
        }
        assert_eq!(total, 6);
    }
}
