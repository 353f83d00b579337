//! The finite Weyl group `W_0` acting on `X`, and its `δ`-twisted
//! conjugation combinatorics (cyclic shift, minimal length elements,
//! supports).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::cyclic::{self, ConjugationSystem, Step};
use crate::error::{Error, Result};
use crate::rational::{identity, mat_mul, mat_vec};
use crate::rootdata::RootDatum;

/// Default cap on `|W_0|` for enumeration.
pub const W0_CAP: usize = 10_000_000;

/// An element of `W_0`, stored as its matrix on `X` (row-major) along with
/// the inverse matrix. Identity, ordering and hashing use the matrix only.
#[derive(Clone)]
pub struct FiniteWeylElt {
    rank: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
}

impl FiniteWeylElt {
    pub fn identity(rank: usize) -> Self {
        FiniteWeylElt { rank, mat: identity(rank), inv: identity(rank) }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &[i64] {
        &self.inv
    }

    pub fn is_identity(&self) -> bool {
        self.mat == identity(self.rank)
    }

    /// `w(v)` for `v ∈ X`.
    pub fn act(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.mat, v)
    }

    /// `w^{-1}(v)`.
    pub fn act_inv(&self, v: &[i64]) -> Vec<i64> {
        mat_vec(&self.inv, v)
    }

    pub fn inverse(&self) -> FiniteWeylElt {
        FiniteWeylElt { rank: self.rank, mat: self.inv.clone(), inv: self.mat.clone() }
    }

    /// Group law, panicking on a rank mismatch. See [`RootDatum::fw_compose`].
    pub fn mul(&self, other: &FiniteWeylElt) -> FiniteWeylElt {
        assert_eq!(self.rank, other.rank, "rank mismatch");
        FiniteWeylElt {
            rank: self.rank,
            mat: mat_mul(&self.mat, &other.mat, self.rank),
            inv: mat_mul(&other.inv, &self.inv, self.rank),
        }
    }

    pub(crate) fn from_parts(rank: usize, mat: Vec<i64>, inv: Vec<i64>) -> Self {
        FiniteWeylElt { rank, mat, inv }
    }
}

impl PartialEq for FiniteWeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for FiniteWeylElt {}

impl Hash for FiniteWeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl Ord for FiniteWeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mat.cmp(&other.mat)
    }
}

impl PartialOrd for FiniteWeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FiniteWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W0{:?}", self.mat)
    }
}

/// A step of the twisted reduction, in finite Weyl elements.
pub type FiniteStep = Step<FiniteWeylElt>;

impl RootDatum {
    pub fn fw_identity(&self) -> FiniteWeylElt {
        FiniteWeylElt::identity(self.rank())
    }

    /// The simple reflection `s_i` (0-based index).
    pub fn fw_simple(&self, i: usize) -> FiniteWeylElt {
        let m = self.reflection(i).to_vec();
        FiniteWeylElt { rank: self.rank(), mat: m.clone(), inv: m }
    }

    /// Product of simple reflections `s_{w[0]} s_{w[1]} ...` (0-based).
    pub fn fw_from_word(&self, word: &[usize]) -> Result<FiniteWeylElt> {
        let n = self.semisimple_rank();
        let mut e = self.fw_identity();
        for &i in word {
            if i >= n {
                return Err(Error::InvalidElement(format!("simple index {} out of range", i + 1)));
            }
            e = e.mul(&self.fw_simple(i));
        }
        Ok(e)
    }

    fn check_rank(&self, a: &FiniteWeylElt) -> Result<()> {
        if a.rank != self.rank() {
            return Err(Error::DatumMismatch { left: a.rank, right: self.rank() });
        }
        Ok(())
    }

    pub fn fw_compose(&self, a: &FiniteWeylElt, b: &FiniteWeylElt) -> Result<FiniteWeylElt> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        Ok(a.mul(b))
    }

    pub fn fw_inverse(&self, a: &FiniteWeylElt) -> Result<FiniteWeylElt> {
        self.check_rank(a)?;
        Ok(a.inverse())
    }

    /// Whether `w(α_i) < 0`, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn fw_is_right_descent(&self, w: &FiniteWeylElt, i: usize) -> bool {
        let img = w.act(&self.simple_coroots()[i]);
        matches!(self.coroot_sign(&img), Some((_, false)))
    }

    /// Whether `w^{-1}(α_i) < 0`, i.e. `ℓ(s_i w) < ℓ(w)`.
    pub fn fw_is_left_descent(&self, w: &FiniteWeylElt, i: usize) -> bool {
        let img = w.act_inv(&self.simple_coroots()[i]);
        matches!(self.coroot_sign(&img), Some((_, false)))
    }

    /// Number of positive roots sent to negative roots.
    pub fn fw_length(&self, w: &FiniteWeylElt) -> usize {
        self.positive_coroots()
            .iter()
            .filter(|c| matches!(self.coroot_sign(&w.act(c)), Some((_, false))))
            .count()
    }

    /// Canonical reduced word (0-based), peeling off the smallest right
    /// descent at each step.
    pub fn fw_reduced_word(&self, w: &FiniteWeylElt) -> Vec<usize> {
        self.reduced_word_by(w, |ds| ds.into_iter().min())
    }

    /// A second reduced word, peeling off the largest right descent.
    pub fn fw_reduced_word_alt(&self, w: &FiniteWeylElt) -> Vec<usize> {
        self.reduced_word_by(w, |ds| ds.into_iter().max())
    }

    fn reduced_word_by(
        &self,
        w: &FiniteWeylElt,
        pick: impl Fn(Vec<usize>) -> Option<usize>,
    ) -> Vec<usize> {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        loop {
            let descents: Vec<usize> = (0..self.semisimple_rank())
                .filter(|&i| self.fw_is_right_descent(&cur, i))
                .collect();
            let Some(i) = pick(descents) else { break };
            rev.push(i);
            cur = cur.mul(&self.fw_simple(i));
        }
        rev.reverse();
        rev
    }

    /// Multiplicative order.
    pub fn fw_order(&self, w: &FiniteWeylElt) -> usize {
        let id = identity(self.rank());
        let mut m = w.mat.clone();
        let mut k = 1;
        while m != id {
            m = mat_mul(&m, &w.mat, self.rank());
            k += 1;
        }
        k
    }

    /// All of `W_0` in BFS order from the identity (right multiplication).
    pub fn enumerate_w0(&self) -> Result<Vec<FiniteWeylElt>> {
        self.enumerate_w0_capped(W0_CAP)
    }

    pub fn enumerate_w0_capped(&self, cap: usize) -> Result<Vec<FiniteWeylElt>> {
        let mut seen: HashSet<FiniteWeylElt> = HashSet::from([self.fw_identity()]);
        let mut order = vec![self.fw_identity()];
        let mut q = VecDeque::from([self.fw_identity()]);
        while let Some(w) = q.pop_front() {
            for i in 0..self.semisimple_rank() {
                let v = w.mul(&self.fw_simple(i));
                if seen.insert(v.clone()) {
                    if seen.len() > cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    order.push(v.clone());
                    q.push_back(v);
                }
            }
        }
        Ok(order)
    }

    /// The longest element `w_0`.
    pub fn fw_longest(&self) -> FiniteWeylElt {
        let mut w = self.fw_identity();
        while let Some(i) = (0..self.semisimple_rank()).find(|&i| !self.fw_is_right_descent(&w, i)) {
            w = w.mul(&self.fw_simple(i));
        }
        w
    }

    /// `δ(w) = g w g^{-1}` on `W_0`.
    pub fn fw_delta(&self, w: &FiniteWeylElt) -> FiniteWeylElt {
        let word: Vec<usize> = self.fw_reduced_word(w).iter().map(|&i| self.delta_index(i)).collect();
        self.fw_from_word(&word).expect("delta permutes simple indices")
    }

    /// The twisted cyclic shift `s_i · w · δ(s_i)`.
    pub fn delta_conjugate(&self, w: &FiniteWeylElt, i: usize) -> FiniteWeylElt {
        self.fw_simple(i).mul(w).mul(&self.fw_simple(self.delta_index(i)))
    }

    /// Reduces `w` by non-increasing twisted cyclic shifts to a minimal
    /// length element of its `δ`-conjugacy class.
    pub fn delta_reduce_to_min(&self, w: &FiniteWeylElt) -> (FiniteWeylElt, Vec<FiniteStep>) {
        // Level sets of a finite group are bounded by |W_0|.
        cyclic::reduce_to_min(&TwistedW0(self), w, usize::MAX)
            .expect("finite level sets cannot exceed an unbounded budget")
    }

    /// Support: the simple indices occurring in a reduced word.
    pub fn supp(&self, w: &FiniteWeylElt) -> BTreeSet<usize> {
        let s: BTreeSet<usize> = self.fw_reduced_word(w).into_iter().collect();
        debug_assert_eq!(s, self.fw_reduced_word_alt(w).into_iter().collect());
        s
    }

    /// Union of the `δ`-orbit of the support.
    pub fn supp_delta(&self, w: &FiniteWeylElt) -> BTreeSet<usize> {
        let mut out = self.supp(w);
        let mut frontier: Vec<usize> = out.iter().copied().collect();
        while let Some(i) = frontier.pop() {
            let j = self.delta_index(i);
            if out.insert(j) {
                frontier.push(j);
            }
        }
        out
    }

    pub fn is_elliptic_delta(&self, w: &FiniteWeylElt) -> bool {
        self.supp_delta(w).len() == self.semisimple_rank()
    }
}

/// `W_0` with `δ`-twisted conjugation by the finite simple reflections.
pub struct TwistedW0<'a>(pub &'a RootDatum);

impl ConjugationSystem for TwistedW0<'_> {
    type Elt = FiniteWeylElt;

    fn generator_count(&self) -> usize {
        self.0.semisimple_rank()
    }

    fn conjugate(&self, e: &FiniteWeylElt, g: usize) -> FiniteWeylElt {
        self.0.delta_conjugate(e, g)
    }

    fn length(&self, e: &FiniteWeylElt) -> usize {
        self.0.fw_length(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl3() -> RootDatum {
        RootDatum::preset("SL3").unwrap()
    }

    #[test]
    fn involution() {
        let d = sl3();
        let s = d.fw_simple(0);
        assert!(d.fw_compose(&s, &s).unwrap().is_identity());
    }

    #[test]
    fn coxeter_element_has_order_three() {
        let d = sl3();
        let c = d.fw_compose(&d.fw_simple(0), &d.fw_simple(1)).unwrap();
        assert_eq!(d.fw_length(&c), 2);
        assert_eq!(d.fw_order(&c), 3);
    }

    #[test]
    fn inverses_over_w_a2() {
        let d = sl3();
        for w in d.enumerate_w0().unwrap() {
            assert!(d.fw_compose(&w, &d.fw_inverse(&w).unwrap()).unwrap().is_identity());
        }
    }

    #[test]
    fn group_orders() {
        for (name, order, max_len) in [("SL2", 2, 1), ("SL3", 6, 3), ("Sp4", 8, 4), ("SL4", 24, 6)] {
            let d = RootDatum::preset(name).unwrap();
            let all = d.enumerate_w0().unwrap();
            assert_eq!(all.len(), order, "{name}");
            assert_eq!(all.iter().map(|w| d.fw_length(w)).max(), Some(max_len));
            assert_eq!(d.fw_length(&d.fw_longest()), max_len);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let d = RootDatum::preset("SL4").unwrap();
        assert_eq!(d.enumerate_w0_capped(10), Err(Error::GroupTooLarge { cap: 10 }));
    }

    #[test]
    fn reduced_words_have_length_many_letters() {
        let d = RootDatum::preset("Sp4").unwrap();
        for w in d.enumerate_w0().unwrap() {
            let word = d.fw_reduced_word(&w);
            assert_eq!(word.len(), d.fw_length(&w));
            assert_eq!(d.fw_from_word(&word).unwrap(), w);
            assert_eq!(d.fw_from_word(&d.fw_reduced_word_alt(&w)).unwrap(), w);
        }
    }

    #[test]
    fn rank_mismatch() {
        let a = RootDatum::preset("SL2").unwrap();
        let b = sl3();
        let err = b.fw_compose(&a.fw_simple(0), &b.fw_simple(0)).unwrap_err();
        assert_eq!(err, Error::DatumMismatch { left: 1, right: 2 });
    }

    #[test]
    fn supports() {
        let d = sl3();
        let id = d.fw_identity();
        assert!(d.supp_delta(&id).is_empty());
        assert!(!d.is_elliptic_delta(&id));
        let s1 = d.fw_simple(0);
        assert_eq!(d.supp_delta(&s1), BTreeSet::from([0]));
        assert!(!d.is_elliptic_delta(&s1));

        let t = RootDatum::preset("A2-twisted").unwrap();
        assert_eq!(t.supp_delta(&t.fw_simple(0)), BTreeSet::from([0, 1]));
        assert!(t.is_elliptic_delta(&t.fw_simple(0)));
    }

    #[test]
    fn length_zero_is_fixed() {
        let d = sl3();
        let (w, path) = d.delta_reduce_to_min(&d.fw_identity());
        assert!(w.is_identity());
        assert!(path.is_empty());
    }

    #[test]
    fn twisted_shift_changes_length_by_even_amounts() {
        for name in ["SL3", "A2-twisted", "Sp4", "A3-twisted"] {
            let d = RootDatum::preset(name).unwrap();
            for w in d.enumerate_w0().unwrap() {
                for i in 0..d.semisimple_rank() {
                    let diff = d.fw_length(&d.delta_conjugate(&w, i)) as i64 - d.fw_length(&w) as i64;
                    assert!([-2, 0, 2].contains(&diff), "{name}");
                }
            }
        }
    }

    #[test]
    fn delta_is_an_automorphism() {
        let d = RootDatum::preset("A2-twisted").unwrap();
        let s1 = d.fw_simple(0);
        assert_eq!(d.fw_delta(&s1), d.fw_simple(1));
        // δ(w) agrees with conjugation by the lattice matrix.
        let g = &d.delta().unwrap().lattice;
        for w in d.enumerate_w0().unwrap() {
            let dw = d.fw_delta(&w);
            let lhs = mat_mul(g, w.matrix(), 2);
            let rhs = mat_mul(dw.matrix(), g, 2);
            assert_eq!(lhs, rhs);
        }
    }
}
