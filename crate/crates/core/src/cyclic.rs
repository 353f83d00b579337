//! Cyclic-shift reduction shared by the finite (twisted) and affine Weyl
//! groups: explore the set reachable by length-preserving conjugations by
//! simple reflections, and descend as soon as a conjugate gets shorter.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};

/// A group with a finite generating set of simple reflections and a
/// (possibly twisted) conjugation `e ↦ s e δ(s)`.
pub trait ConjugationSystem {
    type Elt: Clone + Ord + Hash;

    fn generator_count(&self) -> usize;

    /// `s_g · e · δ(s_g)`.
    fn conjugate(&self, e: &Self::Elt, g: usize) -> Self::Elt;

    fn length(&self, e: &Self::Elt) -> usize;
}

/// One move `before --s--> after`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step<E> {
    pub generator: usize,
    pub before: E,
    pub after: E,
}

/// Outcome of searching the length level set of an element.
#[derive(Clone, Debug)]
pub enum Descent<E> {
    /// No conjugate in the level set is shorter: the element is of minimal
    /// length in its class, and this is its full `≈`-closure.
    Minimal(BTreeSet<E>),
    /// `path` leads by length-preserving moves to `from`, and
    /// conjugating `from` by `generator` drops the length.
    Found { path: Vec<Step<E>>, generator: usize, from: E, to: E },
}

/// Searches the level set of `w` (smallest key first) for a strict descent.
pub fn find_descent<S: ConjugationSystem>(
    sys: &S,
    w: &S::Elt,
    budget: usize,
) -> Result<Descent<S::Elt>> {
    let len = sys.length(w);
    let mut parent: HashMap<S::Elt, (S::Elt, usize)> = HashMap::new();
    let mut visited: BTreeSet<S::Elt> = BTreeSet::from([w.clone()]);
    let mut frontier: BTreeSet<S::Elt> = BTreeSet::from([w.clone()]);
    while let Some(e) = frontier.pop_first() {
        for g in 0..sys.generator_count() {
            let c = sys.conjugate(&e, g);
            let lc = sys.length(&c);
            if lc < len {
                let path = unwind(&parent, w, &e);
                return Ok(Descent::Found { path, generator: g, from: e, to: c });
            }
            if lc == len && !visited.contains(&c) {
                if visited.len() >= budget {
                    return Err(Error::ExplorationBudgetExceeded { budget });
                }
                visited.insert(c.clone());
                parent.insert(c.clone(), (e.clone(), g));
                frontier.insert(c);
            }
        }
    }
    Ok(Descent::Minimal(visited))
}

fn unwind<E: Clone + Ord + Hash>(parent: &HashMap<E, (E, usize)>, root: &E, end: &E) -> Vec<Step<E>> {
    let mut steps = Vec::new();
    let mut cur = end.clone();
    while &cur != root {
        let (prev, g) = parent[&cur].clone();
        steps.push(Step { generator: g, before: prev.clone(), after: cur });
        cur = prev;
    }
    steps.reverse();
    steps
}

/// All elements reachable from `w` by length-preserving conjugations.
pub fn level_closure<S: ConjugationSystem>(
    sys: &S,
    w: &S::Elt,
    budget: usize,
) -> Result<BTreeSet<S::Elt>> {
    let len = sys.length(w);
    let mut visited = BTreeSet::from([w.clone()]);
    let mut frontier = vec![w.clone()];
    while let Some(e) = frontier.pop() {
        for g in 0..sys.generator_count() {
            let c = sys.conjugate(&e, g);
            if sys.length(&c) == len && !visited.contains(&c) {
                if visited.len() >= budget {
                    return Err(Error::ExplorationBudgetExceeded { budget });
                }
                visited.insert(c.clone());
                frontier.push(c);
            }
        }
    }
    Ok(visited)
}

/// Walks `w` down to a minimal-length element of its class by non-increasing
/// conjugations, recording every move.
pub fn reduce_to_min<S: ConjugationSystem>(
    sys: &S,
    w: &S::Elt,
    budget: usize,
) -> Result<(S::Elt, Vec<Step<S::Elt>>)> {
    let mut current = w.clone();
    let mut path = Vec::new();
    loop {
        match find_descent(sys, &current, budget)? {
            Descent::Minimal(_) => return Ok((current, path)),
            Descent::Found { path: walk, generator, from, to } => {
                path.extend(walk);
                path.push(Step { generator, before: from, after: to.clone() });
                current = to;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Conjugation in the symmetric group S_3 by adjacent transpositions;
    /// length = inversion count.
    struct S3;

    impl ConjugationSystem for S3 {
        type Elt = [u8; 3];
        fn generator_count(&self) -> usize {
            2
        }
        fn conjugate(&self, e: &[u8; 3], g: usize) -> [u8; 3] {
            let sw = |i: usize| if i == g { g + 1 } else if i == g + 1 { g } else { i };
            let mut out = [0u8; 3];
            for (i, o) in out.iter_mut().enumerate() {
                *o = sw(e[sw(i)] as usize) as u8;
            }
            out
        }
        fn length(&self, e: &[u8; 3]) -> usize {
            (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| e[i] > e[j]).count()
        }
    }

    #[test]
    fn longest_element_reduces_to_a_reflection() {
        let (w, path) = reduce_to_min(&S3, &[2, 1, 0], 100).unwrap();
        assert_eq!(S3.length(&w), 1);
        assert!(!path.is_empty());
        for step in &path {
            assert_eq!(S3.conjugate(&step.before, step.generator), step.after);
            assert!(S3.length(&step.after) <= S3.length(&step.before));
        }
    }

    #[test]
    fn closure_of_coxeter_elements() {
        let c = level_closure(&S3, &[1, 2, 0], 100).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let err = level_closure(&S3, &[1, 2, 0], 1).unwrap_err();
        assert_eq!(err, Error::ExplorationBudgetExceeded { budget: 1 });
    }
}
