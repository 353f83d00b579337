//! Conjugacy combinatorics in `W̃`: reduction to minimal length, the `≈`
//! relation, the `u·x` decomposition of minimal length elements, straight
//! conjugacy classes and the P-alcove condition.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::affweyl::{AffineRoot, AffineWeyl, AffineWeylElt};
use crate::cyclic::{self, Step};
use crate::error::{Error, Result};
use crate::rational::{dot, QVec};
use crate::rootdata::Kappa;

/// A straight conjugacy class, identified by `(κ, ν̄)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StraightClass {
    pub kappa: Kappa,
    #[serde(rename = "nu")]
    pub nu_bar: QVec,
    pub length: usize,
    pub defect: usize,
}

impl PartialEq for StraightClass {
    fn eq(&self, other: &Self) -> bool {
        self.kappa == other.kappa && self.nu_bar == other.nu_bar
    }
}

impl Eq for StraightClass {}

impl Hash for StraightClass {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.kappa.hash(state);
        self.nu_bar.hash(state);
    }
}

impl PartialOrd for StraightClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for StraightClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.nu_bar.cmp(&other.nu_bar))
            .then_with(|| self.kappa.cmp(&other.kappa))
    }
}

impl std::fmt::Display for StraightClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(κ={:?}, ν̄={}, ℓ={}, def={})", self.kappa.0, self.nu_bar, self.length, self.defect)
    }
}

/// `w_min ≈ witness = u·x` with `x` straight, `u ∈ W_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UxDecomposition {
    pub w_min: AffineWeylElt,
    pub witness: AffineWeylElt,
    pub u: AffineWeylElt,
    pub x: AffineWeylElt,
    /// Labels of `K ⊂ S̃`.
    pub k: Vec<usize>,
    pub class: StraightClass,
}

impl AffineWeyl {
    /// The straight class of a straight element.
    pub fn class_of_straight(&self, x: &AffineWeylElt) -> StraightClass {
        debug_assert!(self.is_straight(x));
        StraightClass {
            kappa: self.kappa_w(x),
            nu_bar: self.newton_point(x).1,
            length: self.length(x),
            defect: self.defect_of(x),
        }
    }

    /// Reduces `w` to a minimal length element of its conjugacy class by
    /// non-increasing conjugations `w ↦ s w s`.
    pub fn reduce_to_min(&self, w: &AffineWeylElt) -> Result<(AffineWeylElt, Vec<Step<AffineWeylElt>>)> {
        cyclic::reduce_to_min(self, w, self.budget())
    }

    /// The `≈`-class of `w`: closure under length-preserving `w ↦ s w s`.
    pub fn approx_closure(&self, w: &AffineWeylElt) -> Result<BTreeSet<AffineWeylElt>> {
        cyclic::level_closure(self, w, self.budget())
    }

    /// Whether some `s ∈ S̃` has `ℓ(s w s) < ℓ(w)` for a `w' ≈ w`; returns
    /// that `w'` and the position of `s`.
    pub fn find_descent(&self, w: &AffineWeylElt) -> Result<Option<(AffineWeylElt, usize)>> {
        Ok(match cyclic::find_descent(self, w, self.budget())? {
            cyclic::Descent::Minimal(_) => None,
            cyclic::Descent::Found { generator, from, .. } => Some((from, generator)),
        })
    }

    /// Connected components (as sets of generator positions) of the graph
    /// joining non-commuting simple reflections.
    pub fn diagram_components(&self) -> Vec<Vec<usize>> {
        let gens = self.simple_reflections();
        let n = gens.len();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut [usize], i: usize) -> usize {
            if c[i] != i {
                c[i] = find(c, c[i]);
            }
            c[i]
        }
        for a in 0..n {
            for b in a + 1..n {
                let (sa, sb) = (&gens[a].element, &gens[b].element);
                if self.mul(sa, sb) != self.mul(sb, sa) {
                    let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                    comp[ra.max(rb)] = ra.min(rb);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            let r = find(&mut comp, i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().collect()
    }

    /// `W_K` is finite iff `K` misses a node of every affine component.
    /// `k` holds generator positions.
    pub fn is_spherical(&self, k: &[usize]) -> bool {
        self.diagram_components().iter().all(|c| c.iter().any(|i| !k.contains(i)))
    }

    /// Spherical subsets of `S̃` (as generator positions), by size, then
    /// lexicographically.
    pub fn spherical_subsets(&self) -> Vec<Vec<usize>> {
        let n = self.simple_reflections().len();
        let mut out: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|k| self.is_spherical(k))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Minimal element of `W_K w` by greedy left descent.
    fn left_k_minimal(&self, w: &AffineWeylElt, k: &[usize]) -> AffineWeylElt {
        let gens = self.simple_reflections();
        let mut m = w.clone();
        let mut len = self.length(&m);
        'outer: loop {
            for &i in k {
                let c = self.mul(&gens[i].element, &m);
                let lc = self.length(&c);
                if lc < len {
                    m = c;
                    len = lc;
                    continue 'outer;
                }
            }
            return m;
        }
    }

    /// Finds `w'' ≈ w_min` and spherical `K` with `w'' = u x`, `u ∈ W_K`,
    /// `x` straight, `x ∈ ^K W̃^K` and `Ad(x) K = K`.
    pub fn ux_decompose(&self, w_min: &AffineWeylElt) -> Result<UxDecomposition> {
        let gens = self.simple_reflections();
        let closure = self.approx_closure(w_min)?;
        let subsets = self.spherical_subsets();
        for w2 in &closure {
            for k in &subsets {
                let x = self.left_k_minimal(w2, k);
                if !self.is_straight(&x) {
                    continue;
                }
                let lx = self.length(&x);
                let right_minimal = k.iter().all(|&i| self.length(&self.mul(&x, &gens[i].element)) > lx);
                if !right_minimal {
                    continue;
                }
                let stable = k.iter().all(|&i| {
                    let c = self.conj(&x, &gens[i].element);
                    k.iter().any(|&j| gens[j].element == c)
                });
                if !stable {
                    continue;
                }
                let u = self.mul(w2, &self.inv(&x));
                let class = self.class_of_straight(&x);
                if class.kappa != self.kappa_w(w_min) {
                    return Err(Error::Internal("κ(x) differs from κ(w_min)".into()));
                }
                return Ok(UxDecomposition {
                    w_min: w_min.clone(),
                    witness: w2.clone(),
                    u,
                    x,
                    k: k.iter().map(|&i| gens[i].label).collect(),
                    class,
                });
            }
        }
        Err(Error::DecompositionNotFound(format!("{w_min:?}")))
    }

    /// The straight class `C` with `I ẇ I ⊂ {C}` for `w` of minimal length,
    /// after reducing `w`.
    pub fn straight_class_of(&self, w: &AffineWeylElt) -> Result<StraightClass> {
        let (w_min, _) = self.reduce_to_min(w)?;
        Ok(self.ux_decompose(&w_min)?.class)
    }

    /// All elements of length at most `max_len`, grouped by length.
    pub fn elements_by_length(&self, max_len: usize) -> Result<Vec<Vec<AffineWeylElt>>> {
        let mut layers = vec![self.omega_elements_or_identity()?];
        let mut count = layers[0].len();
        for len in 1..=max_len {
            let mut next = BTreeSet::new();
            for w in &layers[len - 1] {
                for g in self.simple_reflections() {
                    let c = self.mul(&g.element, w);
                    if self.length(&c) == len {
                        next.insert(c);
                    }
                }
            }
            count += next.len();
            if count > self.budget() {
                return Err(Error::ExplorationBudgetExceeded { budget: self.budget() });
            }
            layers.push(next.into_iter().collect());
        }
        Ok(layers)
    }

    /// `Ω` when `π_1` is finite; otherwise only the identity, which is enough
    /// to generate `W_af`.
    pub(crate) fn omega_elements_or_identity(&self) -> Result<Vec<AffineWeylElt>> {
        match self.omega_elements() {
            Ok(om) => Ok(om),
            Err(Error::InfinitePi1) => Ok(vec![self.identity()]),
            Err(e) => Err(e),
        }
    }

    /// Straight classes met by elements of length at most `max_len`.
    pub fn enumerate_straight_classes(&self, max_len: usize) -> Result<Vec<StraightClass>> {
        let mut found = BTreeSet::new();
        for layer in self.elements_by_length(max_len)? {
            for w in layer {
                if self.is_straight(&w) {
                    found.insert(self.class_of_straight(&w));
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// Resolves a class from `(κ, ν)`; `ν` may be any Weyl conjugate.
    pub fn resolve_class(&self, kappa: &Kappa, nu: &QVec) -> Result<StraightClass> {
        if nu.len() != self.rank() {
            return Err(Error::UnknownClass(format!("ν has {} coordinates", nu.len())));
        }
        let nu_bar = self.datum().dominant_rep(nu);
        let len = nu_bar.pair(self.datum().two_rho());
        if !len.is_integer() {
            return Err(Error::UnknownClass(format!("<2ρ, ν̄> = {len} is not an integer")));
        }
        let len = len.to_integer();
        if len < 0 {
            return Err(Error::Internal("negative <2ρ, ν̄>".into()));
        }
        let layers = self.elements_by_length(len as usize)?;
        for w in &layers[len as usize] {
            if &self.kappa_w(w) == kappa && self.is_straight(w) && self.newton_point(w).1 == nu_bar {
                return Ok(self.class_of_straight(w));
            }
        }
        Err(Error::UnknownClass(format!("no straight element with κ = {:?}, ν̄ = {nu_bar}", kappa.0)))
    }

    /// The P-alcove condition for `P = P_ν`.
    pub fn p_alcove_test(&self, w: &AffineWeylElt, nu: &QVec) -> bool {
        if w.u.act(nu.numerator()) != nu.numerator() {
            return false;
        }
        let window = self
            .all_roots()
            .iter()
            .map(|a| dot(a, &w.lambda).abs())
            .max()
            .unwrap_or(0)
            + 1;
        let w_inv = self.inv(w);
        let zero = Rational64::from_integer(0);
        for alpha in self.all_roots() {
            if nu.pair(&alpha) <= zero {
                continue;
            }
            for k in -window..=window {
                let a = AffineRoot { alpha: alpha.clone(), k };
                if self.is_positive_root(&self.act_on_root(&w_inv, &a)) && !self.is_positive_root(&a) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affweyl::ElementSpec;

    fn group(name: &str) -> AffineWeyl {
        AffineWeyl::preset(name).unwrap()
    }

    fn el(g: &AffineWeyl, lambda: &[i64], word: &[usize]) -> AffineWeylElt {
        g.from_spec(&ElementSpec { lambda: lambda.to_vec(), word: word.to_vec() }).unwrap()
    }

    fn class(kappa: i64, nu: &[i64], length: usize, defect: usize) -> StraightClass {
        StraightClass { kappa: Kappa(vec![kappa]), nu_bar: QVec::from_int(nu), length, defect }
    }

    #[test]
    fn reduce_s0s1s0() {
        let g = group("SL2");
        let w = g.from_affine_word(&[0, 1, 0]).unwrap();
        let (m, path) = g.reduce_to_min(&w).unwrap();
        assert_eq!(m, g.from_affine_word(&[1]).unwrap());
        assert_eq!(path.len(), 1);
        assert_eq!(g.simple_reflections()[path[0].generator].label, 0);
    }

    #[test]
    fn closures() {
        let g = group("SL2");
        assert_eq!(g.approx_closure(&g.identity()).unwrap().len(), 1);
        let s1 = g.from_affine_word(&[1]).unwrap();
        assert_eq!(g.approx_closure(&s1).unwrap(), BTreeSet::from([s1]));
        let c = g.approx_closure(&g.translation(&[-1]).unwrap()).unwrap();
        assert!(c.contains(&g.translation(&[1]).unwrap()));
    }

    #[test]
    fn spherical() {
        let g = group("SL2");
        assert!(g.is_spherical(&[]));
        assert!(!g.is_spherical(&[0, 1]));
        let g3 = group("SL3");
        assert!(g3.is_spherical(&[0, 1]));
        assert!(!g3.is_spherical(&[0, 1, 2]));
        assert_eq!(g3.spherical_subsets().len(), 7);
    }

    #[test]
    fn ux_examples() {
        let g = group("SL2");
        let s1 = g.from_affine_word(&[1]).unwrap();
        let d = g.ux_decompose(&s1).unwrap();
        assert_eq!((d.u, d.x, d.k), (s1, g.identity(), vec![1]));

        let p = group("PGL2");
        let tau = el(&p, &[1], &[1]);
        let d = p.ux_decompose(&tau).unwrap();
        assert_eq!((d.u, d.x, d.k), (p.identity(), tau, vec![]));

        let t = g.translation(&[-1]).unwrap();
        let d = g.ux_decompose(&t).unwrap();
        assert_eq!((d.u, d.x, d.k.len()), (g.identity(), t, 0));
    }

    #[test]
    fn classes_of_elements() {
        let g = group("SL2");
        let c = g.straight_class_of(&g.from_affine_word(&[1]).unwrap()).unwrap();
        assert_eq!((c.clone(), c.length, c.defect), (class(0, &[0], 0, 0), 0, 0));
        let c = g.straight_class_of(&g.from_affine_word(&[1, 0]).unwrap()).unwrap();
        assert_eq!((c.clone(), c.length, c.defect), (class(0, &[1], 2, 0), 2, 0));
        let p = group("PGL2");
        let c = p.straight_class_of(&el(&p, &[1], &[1])).unwrap();
        assert_eq!((c.clone(), c.length, c.defect), (class(1, &[0], 0, 1), 0, 1));
    }

    #[test]
    fn census() {
        let p = group("PGL2");
        let got = p.enumerate_straight_classes(2).unwrap();
        let want = [class(0, &[0], 0, 0), class(1, &[0], 0, 1), class(1, &[1], 1, 0), class(0, &[2], 2, 0)];
        assert_eq!(got, want);
        for (a, b) in got.iter().zip(&want) {
            assert_eq!((a.length, a.defect), (b.length, b.defect));
        }
        let g = group("SL2");
        assert_eq!(g.enumerate_straight_classes(2).unwrap(), [class(0, &[0], 0, 0), class(0, &[1], 2, 0)]);
        assert_eq!(group("PGL3").enumerate_straight_classes(0).unwrap().len(), 3);
    }

    #[test]
    fn resolve() {
        let g = group("SL2");
        let c = g.resolve_class(&Kappa(vec![0]), &QVec::from_int(&[-1])).unwrap();
        assert_eq!((c.length, c.defect), (2, 0));
        assert!(matches!(g.resolve_class(&Kappa(vec![0]), &QVec::new(vec![1], 2)), Err(Error::UnknownClass(_))));
        let p = group("PGL2");
        assert_eq!(p.resolve_class(&Kappa(vec![1]), &QVec::from_int(&[0])).unwrap().defect, 1);
    }

    #[test]
    fn p_alcove_examples() {
        let g = group("SL2");
        let t = g.translation(&[-1]).unwrap();
        assert!(g.p_alcove_test(&t, &QVec::from_int(&[-1])));
        let w = el(&g, &[1], &[1]);
        assert!(g.p_alcove_test(&w, &QVec::from_int(&[0])));
        // s_1 does not fix a nonzero ν.
        assert!(!g.p_alcove_test(&g.from_affine_word(&[1]).unwrap(), &QVec::from_int(&[1])));
    }

    #[test]
    fn layers_count() {
        // Infinite dihedral group: 1, 2, 2, 2, ...
        let sizes: Vec<usize> = group("SL2").elements_by_length(4).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 2, 2, 2, 2]);
        let sizes: Vec<usize> = group("SL3").elements_by_length(3).unwrap().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 6, 9]);
    }
}
