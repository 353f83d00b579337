//! Root data: the coweight lattice `X`, simple roots and coroots, the
//! derived positive system, dominance order and the class map `X -> X/Q^vee`.
//!
//! Everything here is exact. Lattice vectors are `Vec<i64>` in the fixed
//! basis of `X`; roots are integral linear functionals on `X`, stored as
//! row vectors in the dual basis.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rational::{big, dot, is_nonneg, solve, QVec};
use crate::snf::{smith, Smith};

/// Hard cap on the number of roots produced by reflection closure.
pub const ROOT_CAP: usize = 10_000;

/// A diagram automorphism: a permutation of the simple indices together with
/// the lattice automorphism of `X` realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAutomorphism {
    /// `perm[i]` is the image of simple index `i` (0-based).
    pub perm: Vec<usize>,
    /// Row-major `rank × rank` integer matrix.
    pub lattice: Vec<i64>,
}

/// The class of a coweight in `X / Q^vee`, in Smith coordinates.
///
/// Coordinate `i` is reduced modulo the `i`-th invariant factor for the
/// torsion/trivial part and left free for the central directions, so the
/// vector always has `rank` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Kappa(pub Vec<i64>);

impl fmt::Display for Kappa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Delta as it appears in a config file. Indices are 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeltaConfig {
    pub perm: Vec<usize>,
    pub lattice_matrix: Vec<Vec<i64>>,
}

/// Root datum config document (JSON).
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatumConfig {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub rank: Option<usize>,
    #[serde(default)]
    pub cartan: Option<Vec<Vec<i64>>>,
    /// `rank × n`: column `i` is the simple coroot `α_i^vee`.
    #[serde(default)]
    pub coroots: Option<Vec<Vec<i64>>>,
    /// `n × rank`: row `i` is the simple root `α_i`.
    #[serde(default)]
    pub roots: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub delta: Option<DeltaConfig>,
}

pub const PRESETS: &[&str] = &[
    "SL2", "PGL2", "GL2", "SL3", "PGL3", "Sp4", "SL4", "A2-twisted", "A3-twisted",
];

/// Returns the embedded config of a named preset.
pub fn preset_config(name: &str) -> Option<DatumConfig> {
    let cfg = |rank: usize, roots: Vec<Vec<i64>>, coroots: Vec<Vec<i64>>| DatumConfig {
        name: Some(name.to_string()),
        rank: Some(rank),
        roots: Some(roots),
        coroots: Some(coroots),
        ..Default::default()
    };
    let a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
    let id3 = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
    Some(match name {
        "SL2" => cfg(1, vec![vec![2]], vec![vec![1]]),
        "PGL2" => cfg(1, vec![vec![1]], vec![vec![2]]),
        "GL2" => cfg(2, vec![vec![1, -1]], vec![vec![1], vec![-1]]),
        "SL3" => cfg(2, vec![vec![2, -1], vec![-1, 2]], vec![vec![1, 0], vec![0, 1]]),
        "PGL3" => cfg(2, vec![vec![1, 0], vec![0, 1]], vec![vec![2, -1], vec![-1, 2]]),
        "Sp4" => cfg(2, vec![vec![2, -1], vec![-2, 2]], vec![vec![1, 0], vec![0, 1]]),
        "SL4" => cfg(3, a3, id3),
        "A2-twisted" => DatumConfig {
            delta: Some(DeltaConfig { perm: vec![2, 1], lattice_matrix: vec![vec![0, 1], vec![1, 0]] }),
            ..cfg(2, vec![vec![2, -1], vec![-1, 2]], vec![vec![1, 0], vec![0, 1]])
        },
        "A3-twisted" => DatumConfig {
            delta: Some(DeltaConfig {
                perm: vec![3, 2, 1],
                lattice_matrix: vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]],
            }),
            ..cfg(3, a3, id3)
        },
        _ => return None,
    })
}

/// A validated root datum with all derived data populated. Immutable.
#[derive(Clone, Debug)]
pub struct RootDatum {
    name: String,
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    pos_roots: Vec<Vec<i64>>,
    pos_coroots: Vec<Vec<i64>>,
    /// Coefficients of each positive root in the simple roots.
    pos_root_coeffs: Vec<Vec<i64>>,
    two_rho: Vec<i64>,
    two_rho_check: Vec<i64>,
    delta: Option<DiagramAutomorphism>,
    /// Coroot vector -> (positive root index, is positive).
    coroot_lookup: HashMap<Vec<i64>, (usize, bool)>,
    components: Vec<Vec<usize>>,
    highest_roots: Vec<usize>,
    reflections: Vec<Vec<i64>>,
    smith: Smith,
    hash: String,
}

/// Parses a JSON config document (or a bare preset name) into a root datum.
pub fn build_root_datum(config: &str) -> Result<RootDatum> {
    let trimmed = config.trim();
    if let Some(cfg) = preset_config(trimmed) {
        return RootDatum::from_config(&cfg);
    }
    if !trimmed.starts_with('{') {
        return Err(Error::MalformedConfig(format!("{trimmed:?} is neither a preset nor a JSON config")));
    }
    let cfg: DatumConfig =
        serde_json::from_str(trimmed).map_err(|e| Error::MalformedConfig(e.to_string()))?;
    RootDatum::from_config(&cfg)
}

impl RootDatum {
    pub fn preset(name: &str) -> Result<RootDatum> {
        let cfg = preset_config(name)
            .ok_or_else(|| Error::MalformedConfig(format!("unknown preset {name:?}")))?;
        RootDatum::from_config(&cfg)
    }

    pub fn from_config(cfg: &DatumConfig) -> Result<RootDatum> {
        if let Some(p) = &cfg.preset {
            let base = preset_config(p)
                .ok_or_else(|| Error::MalformedConfig(format!("unknown preset {p:?}")))?;
            return RootDatum::from_config(&base);
        }
        let malformed = |m: &str| Error::MalformedConfig(m.to_string());

        // Without explicit roots/coroots, X is the coroot lattice.
        let (roots, coroots_cols) = match (&cfg.roots, &cfg.coroots, &cfg.cartan) {
            (Some(r), Some(c), _) => {
                let n = r.len();
                let rank = cfg.rank.unwrap_or(c.len());
                if c.len() != rank || c.iter().any(|row| row.len() != n) {
                    return Err(malformed("coroots must be a rank x n matrix"));
                }
                let cols = (0..n).map(|i| c.iter().map(|row| row[i]).collect()).collect();
                (r.clone(), cols)
            }
            (None, None, Some(a)) => {
                let n = a.len();
                let cols: Vec<Vec<i64>> =
                    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
                (a.clone(), cols)
            }
            _ => return Err(malformed("need roots and coroots, or a cartan matrix alone")),
        };
        let n = roots.len();
        let rank = cfg.rank.unwrap_or(coroots_cols.first().map_or(0, |c: &Vec<i64>| c.len()));
        if rank == 0 {
            return Err(malformed("rank must be positive"));
        }
        if roots.iter().any(|r| r.len() != rank) || coroots_cols.iter().any(|c| c.len() != rank) {
            return Err(malformed("root/coroot dimensions disagree with rank"));
        }
        if n > rank {
            return Err(malformed("more simple roots than the lattice rank"));
        }

        let cartan: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| dot(&roots[i], &coroots_cols[j])).collect()).collect();
        if let Some(given) = &cfg.cartan {
            if given.len() != n || given.iter().any(|r| r.len() != n) {
                return Err(malformed("cartan must be n x n"));
            }
            if roots.len() == n && cfg.roots.is_some() && *given != cartan {
                return Err(malformed("cartan disagrees with <roots, coroots>"));
            }
        }
        check_finite_type(&cartan)?;

        let (pos_root_coeffs, pos_coroot_coeffs) = positive_system(&cartan)?;
        let combine = |coeffs: &Vec<i64>, basis: &[Vec<i64>]| -> Vec<i64> {
            let mut v = vec![0; rank];
            for (c, b) in coeffs.iter().zip(basis) {
                for (x, y) in v.iter_mut().zip(b) {
                    *x += c * y;
                }
            }
            v
        };
        let pos_roots: Vec<Vec<i64>> = pos_root_coeffs.iter().map(|c| combine(c, &roots)).collect();
        let pos_coroots: Vec<Vec<i64>> =
            pos_coroot_coeffs.iter().map(|c| combine(c, &coroots_cols)).collect();

        let mut two_rho = vec![0; rank];
        let mut two_rho_check = vec![0; rank];
        for (a, c) in pos_roots.iter().zip(&pos_coroots) {
            two_rho.iter_mut().zip(a).for_each(|(x, y)| *x += y);
            two_rho_check.iter_mut().zip(c).for_each(|(x, y)| *x += y);
        }

        let mut coroot_lookup = HashMap::new();
        for (i, c) in pos_coroots.iter().enumerate() {
            coroot_lookup.insert(c.clone(), (i, true));
            coroot_lookup.insert(c.iter().map(|x| -x).collect(), (i, false));
        }

        let components = dynkin_components(&cartan);
        let highest_roots = components
            .iter()
            .map(|comp| {
                (0..pos_root_coeffs.len())
                    .filter(|&k| {
                        (0..n).all(|i| pos_root_coeffs[k][i] == 0 || comp.contains(&i))
                    })
                    .max_by_key(|&k| (pos_root_coeffs[k].iter().sum::<i64>(), std::cmp::Reverse(k)))
                    .expect("component has roots")
            })
            .collect();

        let reflections = (0..n)
            .map(|i| {
                let mut m = vec![0; rank * rank];
                for a in 0..rank {
                    for b in 0..rank {
                        m[a * rank + b] = i64::from(a == b) - coroots_cols[i][a] * roots[i][b];
                    }
                }
                m
            })
            .collect();

        let coroot_matrix: Vec<Vec<i64>> =
            (0..rank).map(|a| (0..n).map(|i| coroots_cols[i][a]).collect()).collect();
        let smith = smith(&coroot_matrix);

        let delta = match &cfg.delta {
            None => None,
            Some(d) => Some(check_delta(d, &roots, &coroots_cols, &cartan, rank)?),
        };

        let mut datum = RootDatum {
            name: cfg.name.clone().unwrap_or_else(|| "custom".to_string()),
            rank,
            simple_roots: roots,
            simple_coroots: coroots_cols,
            cartan,
            pos_roots,
            pos_coroots,
            pos_root_coeffs,
            two_rho,
            two_rho_check,
            delta,
            coroot_lookup,
            components,
            highest_roots,
            reflections,
            smith,
            hash: String::new(),
        };
        datum.hash = datum.compute_hash();
        Ok(datum)
    }

    fn compute_hash(&self) -> String {
        let doc = serde_json::json!({
            "rank": self.rank,
            "roots": self.simple_roots,
            "coroots": self.simple_coroots,
            "delta": self.delta.as_ref().map(|d| (d.perm.clone(), d.lattice.clone())),
        });
        hex::encode(Sha256::digest(doc.to_string().as_bytes()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank of the lattice `X`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos_roots
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.pos_coroots
    }

    pub fn positive_root_coefficients(&self) -> &[Vec<i64>] {
        &self.pos_root_coeffs
    }

    /// `2ρ` as an integral functional.
    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// `2ρ^vee` as a lattice vector.
    pub fn two_rho_check(&self) -> &[i64] {
        &self.two_rho_check
    }

    pub fn rho(&self) -> QVec {
        QVec::new(self.two_rho.clone(), 2)
    }

    pub fn rho_check(&self) -> QVec {
        QVec::new(self.two_rho_check.clone(), 2)
    }

    /// `<ρ, ν>`.
    pub fn rho_pairing(&self, nu: &QVec) -> Rational64 {
        nu.pair(&self.two_rho) / 2
    }

    pub fn delta(&self) -> Option<&DiagramAutomorphism> {
        self.delta.as_ref()
    }

    /// Irreducible components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Index into [`Self::positive_roots`] of the highest root of each component.
    pub fn highest_roots(&self) -> &[usize] {
        &self.highest_roots
    }

    /// Matrix of the simple reflection `s_i` acting on `X`.
    pub fn reflection(&self, i: usize) -> &[i64] {
        &self.reflections[i]
    }

    /// Classifies a lattice vector as ± a positive coroot.
    pub fn coroot_sign(&self, v: &[i64]) -> Option<(usize, bool)> {
        self.coroot_lookup.get(v).copied()
    }

    /// Hex SHA-256 of the defining data; versions persisted caches.
    pub fn hash(&self) -> &str {
        &self.hash
    }

    pub fn is_dominant(&self, nu: &QVec) -> bool {
        self.simple_roots.iter().all(|a| dot(a, nu.numerator()) >= 0)
    }

    /// The unique dominant element of the `W_0`-orbit of `nu`.
    pub fn dominant_rep(&self, nu: &QVec) -> QVec {
        let mut v = nu.numerator().to_vec();
        loop {
            let Some(i) = self.simple_roots.iter().position(|a| dot(a, &v) < 0) else {
                break;
            };
            let c = dot(&self.simple_roots[i], &v);
            for (x, y) in v.iter_mut().zip(&self.simple_coroots[i]) {
                *x -= c * y;
            }
        }
        QVec::new(v, nu.denominator())
    }

    /// Coordinates of `v` in the simple coroots, if `v` lies in their span.
    pub fn coroot_coordinates(&self, v: &QVec) -> Option<Vec<BigRational>> {
        let n = self.semisimple_rank();
        let a: Vec<Vec<BigRational>> = (0..self.rank)
            .map(|r| (0..n).map(|i| big(self.simple_coroots[i][r])).collect())
            .collect();
        solve(&a, &v.to_big()).map(|s| s.particular)
    }

    /// Dominance order on dominant rational coweights.
    pub fn dominance_leq(&self, nu1: &QVec, nu2: &QVec) -> Result<bool> {
        for nu in [nu1, nu2] {
            if !self.is_dominant(nu) {
                return Err(Error::NotDominant(nu.to_string()));
            }
        }
        Ok(self
            .coroot_coordinates(&nu2.sub(nu1))
            .is_some_and(|c| c.iter().all(is_nonneg)))
    }

    /// Class of `lambda` in `X / Q^vee`.
    pub fn kappa_class(&self, lambda: &[i64]) -> Kappa {
        let y = crate::rational::mat_vec(&self.smith.row_transform, lambda);
        Kappa(
            y.iter()
                .enumerate()
                .map(|(i, &yi)| match self.smith.diagonal.get(i) {
                    Some(&d) if d != 0 => yi.rem_euclid(d),
                    _ => yi,
                })
                .collect(),
        )
    }

    /// Whether `X / Q^vee` is finite.
    pub fn pi1_is_finite(&self) -> bool {
        self.semisimple_rank() == self.rank
    }

    /// Invariant factors of `X / Q^vee` greater than one, and its free rank.
    pub fn pi1_structure(&self) -> (Vec<i64>, usize) {
        let torsion = self.smith.diagonal.iter().copied().filter(|&d| d > 1).collect();
        (torsion, self.rank - self.semisimple_rank())
    }

    pub fn pi1_description(&self) -> String {
        let (torsion, free) = self.pi1_structure();
        let mut parts: Vec<String> = torsion.iter().map(|d| format!("Z/{d}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), free));
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join(" x ")
        }
    }

    /// A representative lattice vector for every class of a finite `X/Q^vee`.
    pub fn kappa_representatives(&self) -> Result<Vec<Vec<i64>>> {
        if !self.pi1_is_finite() {
            return Err(Error::InfinitePi1);
        }
        let r = self.rank;
        let d = &self.smith.diagonal;
        // Solve U·λ = y for each y in the box prod [0, d_i).
        let u: Vec<Vec<BigRational>> = (0..r)
            .map(|i| (0..r).map(|j| big(self.smith.row_transform[i * r + j])).collect())
            .collect();
        let mut reps = Vec::new();
        let mut y = vec![0i64; r];
        loop {
            let target: Vec<BigRational> = y.iter().map(|&x| big(x)).collect();
            let sol = solve(&u, &target).ok_or_else(|| Error::Internal("singular U".into()))?;
            let lam = sol
                .particular
                .iter()
                .map(|x| {
                    x.to_integer().try_into().map_err(|_| Error::Internal("overflow".into()))
                })
                .collect::<Result<Vec<i64>>>()?;
            reps.push(lam);
            let mut k = 0;
            loop {
                if k == r {
                    return Ok(reps);
                }
                y[k] += 1;
                if y[k] < d[k] {
                    break;
                }
                y[k] = 0;
                k += 1;
            }
        }
    }

    /// Applies `δ` to a lattice vector (identity when absent).
    pub fn delta_apply(&self, v: &[i64]) -> Vec<i64> {
        match &self.delta {
            Some(d) => crate::rational::mat_vec(&d.lattice, v),
            None => v.to_vec(),
        }
    }

    /// `δ` on simple indices (identity when absent).
    pub fn delta_index(&self, i: usize) -> usize {
        self.delta.as_ref().map_or(i, |d| d.perm[i])
    }
}

fn dynkin_components(cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(i) = q.pop_front() {
            for j in 0..n {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    q.push_back(j);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Rejects anything but finite-type (generalized) Cartan matrices.
fn check_finite_type(a: &[Vec<i64>]) -> Result<()> {
    let n = a.len();
    for i in 0..n {
        if a[i][i] != 2 {
            return Err(Error::NotFiniteType(format!("a[{i}][{i}] = {} != 2", a[i][i])));
        }
        for j in 0..n {
            if i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0)) {
                return Err(Error::NotFiniteType(format!("bad off-diagonal entry at ({i},{j})")));
            }
        }
    }
    // Symmetrize: d_i a_ij = d_j a_ji.
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    for s in 0..n {
        if d[s].is_some() {
            continue;
        }
        d[s] = Some(big(1));
        let mut q = VecDeque::from([s]);
        while let Some(i) = q.pop_front() {
            for j in 0..n {
                if i != j && a[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * big(a[i][j]) / big(a[j][i]));
                    q.push_back(j);
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(Option::unwrap).collect();
    let b: Vec<Vec<BigRational>> =
        (0..n).map(|i| (0..n).map(|j| &d[i] * big(a[i][j])).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            if b[i][j] != b[j][i] {
                return Err(Error::NotFiniteType("not symmetrizable".into()));
            }
        }
    }
    // Sylvester's criterion via Gaussian elimination without pivoting:
    // all pivots positive iff all leading principal minors positive.
    let mut m = b;
    for k in 0..n {
        if !m[k][k].is_positive() {
            return Err(Error::NotFiniteType(
                "symmetrized Cartan matrix is not positive definite".into(),
            ));
        }
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let v = &f * &m[k][j];
                m[i][j] -= v;
            }
        }
    }
    Ok(())
}

type RootCoeffs = Vec<Vec<i64>>;

/// Positive roots and matching coroots in simple coordinates, by reflection
/// closure. Sorted by height, then lexicographically.
fn positive_system(a: &[Vec<i64>]) -> Result<(RootCoeffs, RootCoeffs)> {
    let n = a.len();
    let unit = |i: usize| (0..n).map(|k| i64::from(k == i)).collect::<Vec<i64>>();
    let mut seen: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    let mut q = VecDeque::new();
    for i in 0..n {
        seen.insert(unit(i), unit(i));
        q.push_back((unit(i), unit(i)));
    }
    while let Some((c, d)) = q.pop_front() {
        for j in 0..n {
            let pr: i64 = (0..n).map(|k| c[k] * a[k][j]).sum();
            let pc: i64 = (0..n).map(|k| a[j][k] * d[k]).sum();
            let mut c2 = c.clone();
            c2[j] -= pr;
            let mut d2 = d.clone();
            d2[j] -= pc;
            if !seen.contains_key(&c2) {
                if seen.len() >= ROOT_CAP {
                    return Err(Error::NotFiniteType(format!("more than {ROOT_CAP} roots")));
                }
                seen.insert(c2.clone(), d2.clone());
                q.push_back((c2, d2));
            }
        }
    }
    let mut pos: Vec<(Vec<i64>, Vec<i64>)> =
        seen.into_iter().filter(|(c, _)| c.iter().all(|&x| x >= 0)).collect();
    pos.sort_by(|x, y| {
        let hx: i64 = x.0.iter().sum();
        let hy: i64 = y.0.iter().sum();
        hx.cmp(&hy).then_with(|| y.0.cmp(&x.0))
    });
    Ok(pos.into_iter().unzip())
}

fn check_delta(
    d: &DeltaConfig,
    roots: &[Vec<i64>],
    coroots: &[Vec<i64>],
    cartan: &[Vec<i64>],
    rank: usize,
) -> Result<DiagramAutomorphism> {
    let bad = |m: String| Error::BadAutomorphism(m);
    let n = roots.len();
    if d.perm.len() != n || d.lattice_matrix.len() != rank {
        return Err(bad("delta has the wrong shape".into()));
    }
    let perm: Vec<usize> = d
        .perm
        .iter()
        .map(|&p| p.checked_sub(1).filter(|&p| p < n))
        .collect::<Option<_>>()
        .ok_or_else(|| bad("perm entries must be 1-based simple indices".into()))?;
    let mut sorted = perm.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(bad("perm is not a permutation".into()));
    }
    if d.lattice_matrix.iter().any(|r| r.len() != rank) {
        return Err(bad("lattice_matrix must be rank x rank".into()));
    }
    let g: Vec<i64> = d.lattice_matrix.iter().flatten().copied().collect();
    let gb: Vec<Vec<BigRational>> =
        d.lattice_matrix.iter().map(|r| r.iter().map(|&x| big(x)).collect()).collect();
    if crate::rational::rank(&gb) != rank || det_abs(&gb) != big(1) {
        return Err(bad("lattice_matrix is not invertible over Z".into()));
    }
    for i in 0..n {
        let gi = crate::rational::mat_vec(&g, &coroots[i]);
        if gi != coroots[perm[i]] {
            return Err(bad(format!("g(α_{}^vee) != α_{}^vee", i + 1, perm[i] + 1)));
        }
        // (α_{π(i)} ∘ g)(x) = α_{π(i)}(g x): row vector times g.
        let composed: Vec<i64> =
            (0..rank).map(|b| (0..rank).map(|a| roots[perm[i]][a] * g[a * rank + b]).sum()).collect();
        if composed != roots[i] {
            return Err(bad(format!("α_{} ∘ g != α_{}", perm[i] + 1, i + 1)));
        }
        for j in 0..n {
            if cartan[perm[i]][perm[j]] != cartan[i][j] {
                return Err(bad("perm does not preserve the Cartan matrix".into()));
            }
        }
    }
    Ok(DiagramAutomorphism { perm, lattice: g })
}

fn det_abs(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = big(1);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigRational::from_integer(BigInt::from(0));
        };
        a.swap(k, p);
        det *= a[k][k].clone();
        for i in k + 1..n {
            let f = &a[i][k] / &a[k][k];
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det.abs()
}
