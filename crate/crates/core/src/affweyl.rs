//! The extended affine Weyl group `W̃ = X ⋊ W_0`.
//!
//! An element `t^λ u` acts on affine roots by
//! `t^λ u · (α, k) = (uα, k + <uα, λ>)`, and an affine root is positive when
//! it is positive on the base alcove `{v : -1 < <α, v> < 0 for α > 0}`. With
//! these conventions `s_0 = t^{θ^vee} s_θ` has length one, the coset-minimal
//! elements of `W_0 \ W̃` are `t^μ y` with `μ` dominant, and
//!
//! ```text
//! ℓ(t^λ u) = Σ_{α>0, u^{-1}α>0} |<α, λ>| + Σ_{α>0, u^{-1}α<0} |<α, λ> - 1|.
//! ```

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::cyclic::ConjugationSystem;
use crate::error::{Error, Result};
use crate::finiteweyl::FiniteWeylElt;
use crate::rational::{big, dot, solve, QVec};
use crate::rootdata::{Kappa, RootDatum};

/// Default node budget for closures and ball searches.
pub const DEFAULT_BUDGET: usize = 1_000_000;

/// `t^λ u`. Ordered and hashed by `(λ, matrix of u)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElt {
    pub lambda: Vec<i64>,
    pub u: FiniteWeylElt,
}

impl AffineWeylElt {
    pub fn rank(&self) -> usize {
        self.lambda.len()
    }
}

impl fmt::Debug for AffineWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{:?}·{:?}", self.lambda, self.u)
    }
}

/// JSON form of an element: translation part plus a word (1-based finite
/// simple indices) for the finite part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElementSpec {
    pub lambda: Vec<i64>,
    pub word: Vec<usize>,
}

/// A simple reflection of `W̃` with its label: finite `s_i` carries label
/// `i` (1-based); the affine reflection of the first component carries
/// label 0 and further components `n + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub label: usize,
    pub element: AffineWeylElt,
    /// Irreducible component of the affine diagram.
    pub component: usize,
}

/// The affine function `v ↦ <α, v> + k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    pub alpha: Vec<i64>,
    pub k: i64,
}

/// `w = x · t^μ · y` with `μ` dominant and `t^μ y` minimal in `W_0 t^μ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaDecomposition {
    pub x: FiniteWeylElt,
    pub mu: Vec<i64>,
    pub y: FiniteWeylElt,
    /// `η(w) = y x`.
    pub eta: FiniteWeylElt,
}

/// A root datum together with the derived affine structure: `S̃`, `Ω`, the
/// base alcove point, and the exploration budget.
pub struct AffineWeyl {
    datum: Arc<RootDatum>,
    generators: Vec<Generator>,
    alcove_point: QVec,
    omega: OnceLock<Result<Vec<AffineWeylElt>>>,
    budget: usize,
}

impl fmt::Debug for AffineWeyl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AffineWeyl").field("datum", &self.datum.name()).finish()
    }
}

impl AffineWeyl {
    pub fn new(datum: RootDatum) -> Self {
        Self::from_arc(Arc::new(datum))
    }

    pub fn from_arc(datum: Arc<RootDatum>) -> Self {
        let n = datum.semisimple_rank();
        let r = datum.rank();
        let mut generators = Vec::new();
        for (c, comp) in datum.components().iter().enumerate() {
            let theta = datum.highest_roots()[c];
            let theta_check = datum.positive_coroots()[theta].clone();
            let theta_fn = &datum.positive_roots()[theta];
            // s_θ(v) = v - <θ, v> θ^vee
            let mut m = vec![0; r * r];
            for a in 0..r {
                for b in 0..r {
                    m[a * r + b] = i64::from(a == b) - theta_check[a] * theta_fn[b];
                }
            }
            let s_theta = FiniteWeylElt::from_parts(r, m.clone(), m);
            let label = if c == 0 { 0 } else { n + c };
            generators.push(Generator {
                label,
                element: AffineWeylElt { lambda: theta_check, u: s_theta },
                component: c,
            });
            for &i in comp {
                generators.push(Generator {
                    label: i + 1,
                    element: AffineWeylElt { lambda: vec![0; r], u: datum.fw_simple(i) },
                    component: c,
                });
            }
        }
        generators.sort_by_key(|g| g.label);

        // -ρ^vee / (H + 1) lies in the open base alcove, H the largest height.
        let max_height: i64 = datum
            .positive_root_coefficients()
            .iter()
            .map(|c| c.iter().sum::<i64>())
            .max()
            .unwrap_or(0);
        let alcove_point = QVec::new(
            datum.two_rho_check().iter().map(|x| -x).collect(),
            2 * (max_height + 1),
        );

        AffineWeyl { datum, generators, alcove_point, omega: OnceLock::new(), budget: DEFAULT_BUDGET }
    }

    pub fn preset(name: &str) -> Result<Self> {
        Ok(Self::new(RootDatum::preset(name)?))
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn datum_arc(&self) -> Arc<RootDatum> {
        self.datum.clone()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn identity(&self) -> AffineWeylElt {
        AffineWeylElt { lambda: vec![0; self.rank()], u: self.datum.fw_identity() }
    }

    pub fn translation(&self, lambda: &[i64]) -> Result<AffineWeylElt> {
        if lambda.len() != self.rank() {
            return Err(Error::DatumMismatch { left: lambda.len(), right: self.rank() });
        }
        Ok(AffineWeylElt { lambda: lambda.to_vec(), u: self.datum.fw_identity() })
    }

    pub fn from_finite(&self, u: &FiniteWeylElt) -> AffineWeylElt {
        AffineWeylElt { lambda: vec![0; self.rank()], u: u.clone() }
    }

    /// `t^λ · s_{word[0]} s_{word[1]} ...` with 1-based finite indices.
    pub fn from_spec(&self, spec: &ElementSpec) -> Result<AffineWeylElt> {
        if spec.lambda.len() != self.rank() {
            return Err(Error::InvalidElement(format!(
                "lambda has {} coordinates, lattice rank is {}",
                spec.lambda.len(),
                self.rank()
            )));
        }
        let word = spec
            .word
            .iter()
            .map(|&i| i.checked_sub(1))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| Error::InvalidElement("finite word indices are 1-based".into()))?;
        Ok(AffineWeylElt { lambda: spec.lambda.clone(), u: self.datum.fw_from_word(&word)? })
    }

    pub fn to_spec(&self, w: &AffineWeylElt) -> ElementSpec {
        ElementSpec {
            lambda: w.lambda.clone(),
            word: self.datum.fw_reduced_word(&w.u).into_iter().map(|i| i + 1).collect(),
        }
    }

    /// Product of simple reflections given by labels (see [`Generator`]).
    pub fn from_affine_word(&self, labels: &[usize]) -> Result<AffineWeylElt> {
        let mut w = self.identity();
        for &l in labels {
            let g = self
                .generator_by_label(l)
                .ok_or_else(|| Error::InvalidElement(format!("no simple reflection labelled {l}")))?;
            w = self.mul(&w, &g.element);
        }
        Ok(w)
    }

    pub fn generator_by_label(&self, label: usize) -> Option<&Generator> {
        self.generators.iter().find(|g| g.label == label)
    }

    /// `S̃`, sorted by label.
    pub fn simple_reflections(&self) -> &[Generator] {
        &self.generators
    }

    fn check(&self, a: &AffineWeylElt) -> Result<()> {
        if a.rank() != self.rank() || a.u.rank() != self.rank() {
            return Err(Error::DatumMismatch { left: a.rank(), right: self.rank() });
        }
        Ok(())
    }

    /// `(t^λ u)(t^μ v) = t^{λ + u(μ)} uv`.
    pub fn mul(&self, a: &AffineWeylElt, b: &AffineWeylElt) -> AffineWeylElt {
        let um = a.u.act(&b.lambda);
        AffineWeylElt {
            lambda: a.lambda.iter().zip(&um).map(|(x, y)| x + y).collect(),
            u: a.u.mul(&b.u),
        }
    }

    pub fn aw_mul(&self, a: &AffineWeylElt, b: &AffineWeylElt) -> Result<AffineWeylElt> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// `(t^λ u)^{-1} = t^{-u^{-1}(λ)} u^{-1}`.
    pub fn inv(&self, a: &AffineWeylElt) -> AffineWeylElt {
        AffineWeylElt {
            lambda: a.u.act_inv(&a.lambda).iter().map(|x| -x).collect(),
            u: a.u.inverse(),
        }
    }

    pub fn aw_inv(&self, a: &AffineWeylElt) -> Result<AffineWeylElt> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub fn pow(&self, a: &AffineWeylElt, n: usize) -> AffineWeylElt {
        (0..n).fold(self.identity(), |acc, _| self.mul(&acc, a))
    }

    /// `g w g^{-1}`.
    pub fn conj(&self, g: &AffineWeylElt, w: &AffineWeylElt) -> AffineWeylElt {
        self.mul(&self.mul(g, w), &self.inv(g))
    }

    /// `s w s` for the generator at position `g` of [`Self::simple_reflections`].
    pub fn conj_by_generator(&self, w: &AffineWeylElt, g: usize) -> AffineWeylElt {
        let s = &self.generators[g].element;
        self.mul(&self.mul(s, w), s)
    }

    /// Iwahori–Matsumoto length.
    pub fn length(&self, w: &AffineWeylElt) -> usize {
        let d = &self.datum;
        let mut total = 0i64;
        for (a, c) in d.positive_roots().iter().zip(d.positive_coroots()) {
            let m = dot(a, &w.lambda);
            let positive = matches!(d.coroot_sign(&w.u.act_inv(c)), Some((_, true)));
            total += if positive { m.abs() } else { (m - 1).abs() };
        }
        total as usize
    }

    /// Newton point `ν_w` and its dominant representative `ν̄_w`.
    pub fn newton_point(&self, w: &AffineWeylElt) -> (QVec, QVec) {
        let n = self.datum.fw_order(&w.u);
        let mut sum = vec![0i64; self.rank()];
        let mut cur = w.lambda.clone();
        for _ in 0..n {
            sum.iter_mut().zip(&cur).for_each(|(s, c)| *s += c);
            cur = w.u.act(&cur);
        }
        let nu = QVec::new(sum, n as i64);
        let nu_bar = self.datum.dominant_rep(&nu);
        (nu, nu_bar)
    }

    /// `<2ρ, ν̄_w>`.
    pub fn newton_length(&self, w: &AffineWeylElt) -> Rational64 {
        self.newton_point(w).1.pair(self.datum.two_rho())
    }

    /// Straight iff `ℓ(w) = <2ρ, ν̄_w>`.
    pub fn is_straight(&self, w: &AffineWeylElt) -> bool {
        Rational64::from_integer(self.length(w) as i64) == self.newton_length(w)
    }

    /// `dim V - dim V_w` for `V_w = {v : u(v) + λ = v + ν_w}`.
    pub fn defect_of(&self, w: &AffineWeylElt) -> usize {
        let r = self.rank();
        let (nu, _) = self.newton_point(w);
        let m = w.u.matrix();
        let a: Vec<Vec<_>> = (0..r)
            .map(|i| (0..r).map(|j| big(m[i * r + j] - i64::from(i == j))).collect())
            .collect();
        let rhs: Vec<_> = nu.sub(&QVec::from_int(&w.lambda)).to_big();
        let sol = solve(&a, &rhs).expect("ν_w - λ lies in the image of u - 1");
        r - sol.nullity
    }

    /// `κ(w)`: the class of the translation part in `X / Q^vee`.
    pub fn kappa_w(&self, w: &AffineWeylElt) -> Kappa {
        self.datum.kappa_class(&w.lambda)
    }

    /// Greedy descent on the left by finite simple reflections.
    fn left_w0_minimal(&self, w: &AffineWeylElt) -> AffineWeylElt {
        let mut m = w.clone();
        let mut len = self.length(&m);
        'outer: loop {
            for g in &self.generators {
                if g.label == 0 || g.label > self.datum.semisimple_rank() {
                    continue;
                }
                let c = self.mul(&g.element, &m);
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

    /// The decomposition `w = x t^μ y` and `η(w) = yx`.
    pub fn eta_decomposition(&self, w: &AffineWeylElt) -> Result<EtaDecomposition> {
        let m = self.left_w0_minimal(w);
        if !self.datum.is_dominant(&QVec::from_int(&m.lambda)) {
            return Err(Error::DecompositionFailure(format!(
                "coset-minimal element {m:?} has non-dominant translation"
            )));
        }
        let x = self.mul(w, &self.inv(&m));
        if x.lambda.iter().any(|&c| c != 0) {
            return Err(Error::DecompositionFailure(format!("x = {x:?} is not in W_0")));
        }
        let eta = m.u.mul(&x.u);
        Ok(EtaDecomposition { x: x.u, mu: m.lambda, y: m.u, eta })
    }

    /// Length-zero elements, one per class of `X / Q^vee`, sorted by class.
    pub fn omega_elements(&self) -> Result<Vec<AffineWeylElt>> {
        self.omega.get_or_init(|| self.compute_omega()).clone()
    }

    fn compute_omega(&self) -> Result<Vec<AffineWeylElt>> {
        let reps = self.datum.kappa_representatives()?;
        let mut by_class = BTreeMap::new();
        for lam in reps {
            let tau = self.descend_to_omega(&self.translation(&lam)?);
            if self.length(&tau) != 0 {
                return Err(Error::Internal(format!("{tau:?} did not reach length zero")));
            }
            if by_class.insert(self.kappa_w(&tau), tau).is_some() {
                return Err(Error::Internal("two Omega elements share a class".into()));
            }
        }
        Ok(by_class.into_values().collect())
    }

    /// Strips simple reflections off the left until length zero.
    pub fn descend_to_omega(&self, w: &AffineWeylElt) -> AffineWeylElt {
        self.affine_word(w).1
    }

    /// A reduced expression `w = s_{l_1} ... s_{l_k} τ` with `τ ∈ Ω`, as labels.
    pub fn affine_word(&self, w: &AffineWeylElt) -> (Vec<usize>, AffineWeylElt) {
        let mut m = w.clone();
        let mut len = self.length(&m);
        let mut word = Vec::new();
        'outer: while len > 0 {
            for g in &self.generators {
                let c = self.mul(&g.element, &m);
                let lc = self.length(&c);
                if lc < len {
                    word.push(g.label);
                    m = c;
                    len = lc;
                    continue 'outer;
                }
            }
            unreachable!("positive-length element without a left descent");
        }
        (word, m)
    }

    /// The affine-root action `w · (α, k)`.
    pub fn act_on_root(&self, w: &AffineWeylElt, a: &AffineRoot) -> AffineRoot {
        // (uα)(v) = α(u^{-1} v): row vector α times the matrix of u^{-1}.
        let r = self.rank();
        let inv = w.u.inverse_matrix();
        let ua: Vec<i64> = (0..r).map(|b| (0..r).map(|i| a.alpha[i] * inv[i * r + b]).sum()).collect();
        let k = a.k + dot(&ua, &w.lambda);
        AffineRoot { alpha: ua, k }
    }

    /// Positivity on the base alcove, evaluated at its interior point.
    pub fn is_positive_root(&self, a: &AffineRoot) -> bool {
        Self::positive_at(a, &self.alcove_point)
    }

    pub(crate) fn positive_at(a: &AffineRoot, point: &QVec) -> bool {
        point.pair(&a.alpha) + a.k > Rational64::from_integer(0)
    }

    pub fn alcove_point(&self) -> &QVec {
        &self.alcove_point
    }

    /// All roots `±α`, α positive.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let pos = self.datum.positive_roots();
        pos.iter().cloned().chain(pos.iter().map(|a| a.iter().map(|x| -x).collect())).collect()
    }

    /// `ℓ(w)` counted as positive affine roots sent to negative ones.
    pub fn length_by_inversions(&self, w: &AffineWeylElt) -> usize {
        let mut count = 0;
        for alpha in self.all_roots() {
            let probe = self.act_on_root(w, &AffineRoot { alpha: alpha.clone(), k: 0 });
            let bound = probe.k.abs() + 2;
            for k in -bound..=bound {
                let a = AffineRoot { alpha: alpha.clone(), k };
                if self.is_positive_root(&a) && !self.is_positive_root(&self.act_on_root(w, &a)) {
                    count += 1;
                }
            }
        }
        count
    }
}

impl ConjugationSystem for AffineWeyl {
    type Elt = AffineWeylElt;

    fn generator_count(&self) -> usize {
        self.generators.len()
    }

    fn conjugate(&self, e: &AffineWeylElt, g: usize) -> AffineWeylElt {
        self.conj_by_generator(e, g)
    }

    fn length(&self, e: &AffineWeylElt) -> usize {
        AffineWeyl::length(self, e)
    }
}

/// Orders elements by length, then key.
pub fn by_length(group: &AffineWeyl) -> impl Fn(&AffineWeylElt, &AffineWeylElt) -> Ordering + '_ {
    move |a, b| group.length(a).cmp(&group.length(b)).then_with(|| a.cmp(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> AffineWeyl {
        AffineWeyl::preset("SL2").unwrap()
    }

    fn pgl2() -> AffineWeyl {
        AffineWeyl::preset("PGL2").unwrap()
    }

    fn el(g: &AffineWeyl, lambda: &[i64], word: &[usize]) -> AffineWeylElt {
        g.from_spec(&ElementSpec { lambda: lambda.to_vec(), word: word.to_vec() }).unwrap()
    }

    #[test]
    fn translations_commute() {
        let g = sl2();
        let t = g.translation(&[1]).unwrap();
        assert_eq!(g.aw_mul(&t, &t).unwrap(), g.translation(&[2]).unwrap());
    }

    #[test]
    fn t_alpha_s_is_an_involution() {
        let g = sl2();
        let w = el(&g, &[1], &[1]);
        assert_eq!(g.aw_inv(&w).unwrap(), w);
        assert_eq!(g.mul(&w, &w), g.identity());
    }

    #[test]
    fn lengths() {
        let g = sl2();
        assert_eq!(g.length(&g.identity()), 0);
        assert_eq!(g.length(&g.translation(&[1]).unwrap()), 2);
        let p = pgl2();
        assert_eq!(p.length(&el(&p, &[1], &[1])), 0);
        for s in g.simple_reflections() {
            assert_eq!(g.length(&s.element), 1);
        }
    }

    #[test]
    fn generator_counts() {
        assert_eq!(sl2().simple_reflections().len(), 2);
        assert_eq!(AffineWeyl::preset("SL3").unwrap().simple_reflections().len(), 3);
        assert_eq!(AffineWeyl::preset("Sp4").unwrap().simple_reflections().len(), 3);
        let g = sl2();
        let s0 = &g.simple_reflections()[0];
        assert_eq!(s0.label, 0);
        assert_eq!(s0.element, el(&g, &[1], &[1]));
    }

    #[test]
    fn newton_points() {
        let g = sl2();
        let (nu, _) = g.newton_point(&el(&g, &[1], &[1]));
        assert!(nu.is_zero());
        let (nu, nb) = g.newton_point(&g.translation(&[1]).unwrap());
        assert_eq!((nu.clone(), nb), (QVec::from_int(&[1]), QVec::from_int(&[1])));
        // s_1 s_0 = t^{-α^vee}
        let w = g.from_affine_word(&[1, 0]).unwrap();
        assert_eq!(w, g.translation(&[-1]).unwrap());
        let (nu, nb) = g.newton_point(&w);
        assert_eq!(nu, QVec::from_int(&[-1]));
        assert_eq!(nb, QVec::from_int(&[1]));
    }

    #[test]
    fn straightness() {
        let g = sl2();
        assert!(g.is_straight(&g.identity()));
        assert!(!g.is_straight(&el(&g, &[0], &[1])));
        assert!(g.is_straight(&g.translation(&[-1]).unwrap()));
    }

    #[test]
    fn defects() {
        let g = sl2();
        assert_eq!(g.defect_of(&g.identity()), 0);
        assert_eq!(g.defect_of(&g.translation(&[1]).unwrap()), 0);
        let p = pgl2();
        assert_eq!(p.defect_of(&el(&p, &[1], &[1])), 1);
    }

    #[test]
    fn kappa_of_elements() {
        let p = pgl2();
        for s in p.simple_reflections() {
            assert_eq!(p.kappa_w(&s.element), Kappa(vec![0]));
        }
        assert_eq!(p.kappa_w(&el(&p, &[1], &[1])), Kappa(vec![1]));
    }

    #[test]
    fn eta_examples() {
        let g = sl2();
        let s1 = g.datum().fw_simple(0);
        let id = g.datum().fw_identity();

        let w = el(&g, &[2], &[1]);
        assert_eq!(g.from_affine_word(&[0, 1, 0]).unwrap(), w);
        let e = g.eta_decomposition(&w).unwrap();
        assert_eq!((e.x, e.mu, e.y, e.eta), (id.clone(), vec![2], s1.clone(), s1.clone()));

        let e = g.eta_decomposition(&el(&g, &[0], &[1])).unwrap();
        assert_eq!((e.x, e.mu, e.y, e.eta), (s1.clone(), vec![0], id.clone(), s1));

        let e = g.eta_decomposition(&g.translation(&[3]).unwrap()).unwrap();
        assert!(e.x.is_identity() && e.y.is_identity() && e.eta.is_identity());
    }

    #[test]
    fn omega() {
        assert_eq!(sl2().omega_elements().unwrap(), vec![sl2().identity()]);
        let p = pgl2();
        assert_eq!(p.omega_elements().unwrap(), vec![p.identity(), el(&p, &[1], &[1])]);
        let g = AffineWeyl::preset("PGL3").unwrap();
        let om = g.omega_elements().unwrap();
        assert_eq!(om.len(), 3);
        for a in &om {
            assert_eq!(g.length(a), 0);
            for b in &om {
                assert!(om.contains(&g.mul(a, b)));
            }
        }
        let gl2 = AffineWeyl::preset("GL2").unwrap();
        assert_eq!(gl2.omega_elements(), Err(Error::InfinitePi1));
    }

    #[test]
    fn inversion_count_matches_formula() {
        for name in ["SL2", "PGL2", "SL3", "PGL3", "Sp4", "GL2"] {
            let g = AffineWeyl::preset(name).unwrap();
            let mut frontier = vec![g.identity()];
            for _ in 0..4 {
                let mut next = Vec::new();
                for w in &frontier {
                    assert_eq!(g.length(w), g.length_by_inversions(w), "{name} {w:?}");
                    for s in g.simple_reflections() {
                        next.push(g.mul(&s.element, w));
                    }
                }
                frontier = next;
            }
        }
    }

    #[test]
    fn positivity_is_constant_on_the_alcove() {
        let g = AffineWeyl::preset("Sp4").unwrap();
        let other = g.alcove_point().scale(Rational64::new(1, 2));
        for alpha in g.all_roots() {
            for k in -3..=3 {
                let a = AffineRoot { alpha: alpha.clone(), k };
                assert_eq!(g.is_positive_root(&a), AffineWeyl::positive_at(&a, &other));
            }
        }
    }

    #[test]
    fn mismatched_rank() {
        let a = sl2();
        let b = AffineWeyl::preset("SL3").unwrap();
        assert!(matches!(b.aw_mul(&a.identity(), &b.identity()), Err(Error::DatumMismatch { .. })));
    }
}
