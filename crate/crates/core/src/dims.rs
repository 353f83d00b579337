//! Nonemptiness and dimension of `X_w(b)` and `Y_w(γ)`.
//!
//! `[b]` and `{γ}` enter only through their straight class `C`; for `Y` the
//! dimension of the affine Springer fiber `Y_γ` is an input.
//!
//! The flag-variety evaluator computes, for each element, its whole
//! *profile*: the map `C ↦ dim X_w(C)` over the classes where `X_w` is
//! nonempty. Profiles satisfy the same reduction recursion as the
//! dimensions themselves, so one memo table serves every class.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, RwLock};

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::affweyl::{AffineWeyl, AffineWeylElt, ElementSpec};
use crate::classes::StraightClass;
use crate::error::{Error, Result};
use crate::finiteweyl::FiniteWeylElt;
use crate::rational::QVec;

/// Bumped whenever the cache file layout or its semantics change.
pub const CACHE_VERSION: u32 = 1;

/// `dim ∅ = −∞`, absorbing under `+ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DimValue {
    Empty,
    Finite(u64),
}

impl DimValue {
    pub fn plus(self, n: u64) -> DimValue {
        match self {
            DimValue::Empty => DimValue::Empty,
            DimValue::Finite(d) => DimValue::Finite(d + n),
        }
    }

    pub fn max(self, other: DimValue) -> DimValue {
        match (self, other) {
            (DimValue::Empty, x) | (x, DimValue::Empty) => x,
            (DimValue::Finite(a), DimValue::Finite(b)) => DimValue::Finite(a.max(b)),
        }
    }

    pub fn is_empty(self) -> bool {
        self == DimValue::Empty
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            DimValue::Empty => None,
            DimValue::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Empty => f.write_str("empty"),
            DimValue::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl Serialize for DimValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DimValue::Empty => s.serialize_str("empty"),
            DimValue::Finite(d) => s.serialize_u64(*d),
        }
    }
}

impl<'de> Deserialize<'de> for DimValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(DimValue::Finite(n)),
            Raw::S(s) if s == "empty" => Ok(DimValue::Empty),
            Raw::S(s) => Err(serde::de::Error::custom(format!("expected \"empty\" or an integer, got {s:?}"))),
        }
    }
}

/// The data of `{γ}` needed here: its straight class and either `dim Y_γ`
/// or the pair `(d(γ), c(γ))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaDescriptor {
    #[serde(rename = "class")]
    pub straight_class: StraightClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub springer_dim: Option<u64>,
    #[serde(default, rename = "d", skip_serializing_if = "Option::is_none")]
    pub d_gamma: Option<i64>,
    #[serde(default, rename = "c", skip_serializing_if = "Option::is_none")]
    pub c_gamma: Option<i64>,
}

impl GammaDescriptor {
    pub fn with_springer_dim(straight_class: StraightClass, springer_dim: u64) -> Self {
        GammaDescriptor { straight_class, springer_dim: Some(springer_dim), d_gamma: None, c_gamma: None }
    }

    pub fn with_invariants(straight_class: StraightClass, d: i64, c: i64) -> Self {
        GammaDescriptor { straight_class, springer_dim: None, d_gamma: Some(d), c_gamma: Some(c) }
    }

    /// `dim Y_γ`, checking consistency when both forms are given.
    pub fn resolve_springer_dim(&self) -> Result<u64> {
        let derived = match (self.d_gamma, self.c_gamma) {
            (Some(_), Some(_)) => Some(springer_dim_from_invariants(self)?),
            (None, None) => None,
            _ => return Err(Error::HypothesisViolated("d(γ) and c(γ) must be given together".into())),
        };
        match (self.springer_dim, derived) {
            (Some(a), Some(b)) if a != b => Err(Error::HypothesisViolated(format!(
                "springer_dim = {a} but (d, c) give {b}"
            ))),
            (Some(a), _) => Ok(a),
            (None, Some(b)) => Ok(b),
            (None, None) => Err(Error::HypothesisViolated("neither springer_dim nor (d, c) given".into())),
        }
    }
}

/// `dim Y_γ = <ρ, ν̄> + ½ def(C) + ½ (d(γ) - c(γ))`.
pub fn springer_dim_from_invariants(gd: &GammaDescriptor) -> Result<u64> {
    let (Some(d), Some(c)) = (gd.d_gamma, gd.c_gamma) else {
        return Err(Error::HypothesisViolated("d(γ) and c(γ) are required".into()));
    };
    let class = &gd.straight_class;
    let twice = class.length as i64 + class.defect as i64 + d - c;
    if twice % 2 != 0 {
        return Err(Error::NonIntegralDimension(format!("dim Y_γ = {twice}/2")));
    }
    if twice < 0 {
        return Err(Error::NegativeDimension(format!("dim Y_γ = {}", twice / 2)));
    }
    Ok((twice / 2) as u64)
}

/// `d_w(C)` as an exact half-integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VirtualDim {
    pub twice: i64,
}

impl VirtualDim {
    pub fn value(self) -> Rational64 {
        Rational64::new(self.twice, 2)
    }

    pub fn integral(self) -> Result<i64> {
        if self.twice % 2 == 0 {
            Ok(self.twice / 2)
        } else {
            Err(Error::NonIntegralHalf { twice: self.twice })
        }
    }
}

impl fmt::Display for VirtualDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Serialize for VirtualDim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.twice % 2 == 0 {
            s.serialize_i64(self.twice / 2)
        } else {
            s.serialize_str(&self.to_string())
        }
    }
}

/// Pointwise dimensions over straight classes; absent means empty.
pub type Profile = BTreeMap<StraightClass, u64>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheStats {
    pub hits: usize,
    pub misses: usize,
    pub entries: usize,
    pub loaded: usize,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    datum_hash: String,
    entries: Vec<CacheEntry>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    w: ElementSpec,
    profile: Vec<(StraightClass, u64)>,
}

/// Dimension evaluator for one root datum, with a shared memo table.
pub struct DimEngine {
    group: Arc<AffineWeyl>,
    memo: RwLock<HashMap<AffineWeylElt, Arc<Profile>>>,
    hits: AtomicUsize,
    misses: AtomicUsize,
    loaded: AtomicUsize,
}

impl fmt::Debug for DimEngine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DimEngine").field("group", &self.group).field("stats", &self.stats()).finish()
    }
}

impl DimEngine {
    pub fn new(group: AffineWeyl) -> Self {
        Self::from_arc(Arc::new(group))
    }

    pub fn from_arc(group: Arc<AffineWeyl>) -> Self {
        DimEngine {
            group,
            memo: RwLock::new(HashMap::new()),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
            loaded: AtomicUsize::new(0),
        }
    }

    pub fn group(&self) -> &AffineWeyl {
        &self.group
    }

    pub fn stats(&self) -> CacheStats {
        CacheStats {
            hits: self.hits.load(Ordering::Relaxed),
            misses: self.misses.load(Ordering::Relaxed),
            entries: self.memo.read().expect("memo lock").len(),
            loaded: self.loaded.load(Ordering::Relaxed),
        }
    }

    fn lookup(&self, w: &AffineWeylElt) -> Option<Arc<Profile>> {
        self.memo.read().expect("memo lock").get(w).cloned()
    }

    fn store<'a>(&self, keys: impl IntoIterator<Item = &'a AffineWeylElt>, p: &Arc<Profile>) {
        let mut memo = self.memo.write().expect("memo lock");
        for k in keys {
            memo.entry(k.clone()).or_insert_with(|| p.clone());
        }
    }

    /// `C ↦ dim X_w(C)` for every class with `X_w(C) ≠ ∅`.
    pub fn profile(&self, w: &AffineWeylElt) -> Result<Arc<Profile>> {
        if let Some(p) = self.lookup(w) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(p);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let g = &*self.group;
        match crate::cyclic::find_descent(g, w, g.budget())? {
            crate::cyclic::Descent::Minimal(closure) => {
                let d = g.ux_decompose(w)?;
                let p = Arc::new(Profile::from([(d.class, g.length(&d.u) as u64)]));
                self.store(&closure, &p);
                Ok(p)
            }
            crate::cyclic::Descent::Found { path, generator, from, to } => {
                let s = &g.simple_reflections()[generator].element;
                let p = Arc::new(self.combine(&g.mul(s, &from), &to)?);
                self.store(std::iter::once(w).chain(path.iter().map(|st| &st.after)), &p);
                Ok(p)
            }
        }
    }

    /// `max(profile(a), profile(b)) + 1`.
    fn combine(&self, a: &AffineWeylElt, b: &AffineWeylElt) -> Result<Profile> {
        let mut out: Profile = (*self.profile(a)?).clone();
        for (c, &d) in self.profile(b)?.iter() {
            let e = out.entry(c.clone()).or_insert(d);
            *e = (*e).max(d);
        }
        out.values_mut().for_each(|d| *d += 1);
        Ok(out)
    }

    /// Every profile obtainable from a descent `(w', s)` with `w' ≈ w`; all
    /// of them must agree. Returns `None` for minimal `w`.
    pub fn alternative_profiles(&self, w: &AffineWeylElt) -> Result<Option<Vec<Profile>>> {
        let g = &*self.group;
        let len = g.length(w);
        let closure = g.approx_closure(w)?;
        let mut out = Vec::new();
        for w1 in &closure {
            for s in g.simple_reflections() {
                let sw = g.mul(&s.element, w1);
                let sws = g.mul(&sw, &s.element);
                if g.length(&sws) + 2 == len {
                    out.push(self.combine(&sw, &sws)?);
                }
            }
        }
        Ok(if out.is_empty() { None } else { Some(out) })
    }

    /// `dim X_w(b)` for `[b]` in the class `C`.
    pub fn dim_x_flag(&self, w: &AffineWeylElt, class: &StraightClass) -> Result<DimValue> {
        Ok(self.profile(w)?.get(class).map_or(DimValue::Empty, |&d| DimValue::Finite(d)))
    }

    /// `d_w(C) = ½ (ℓ(w) + ℓ(η(w)) - def(C) - ℓ(C))`.
    pub fn virtual_dimension(&self, w: &AffineWeylElt, class: &StraightClass) -> Result<VirtualDim> {
        let g = &*self.group;
        let eta = g.eta_decomposition(w)?.eta;
        let twice = g.length(w) as i64 + g.datum().fw_length(&eta) as i64
            - class.defect as i64
            - class.length as i64;
        // The same number written with <ρ, ν̄> in place of ℓ(C)/2.
        let rho_nu = g.datum().rho_pairing(&class.nu_bar);
        let d_b = Rational64::new(twice + class.length as i64, 2) - rho_nu;
        if d_b != Rational64::new(twice, 2) {
            return Err(Error::Internal(format!("ℓ(C) = {} but 2<ρ, ν̄> = {}", class.length, rho_nu * 2)));
        }
        Ok(VirtualDim { twice })
    }

    fn check_dominant(&self, mu: &[i64]) -> Result<()> {
        if mu.len() != self.group.rank() {
            return Err(Error::DatumMismatch { left: mu.len(), right: self.group.rank() });
        }
        if !self.group.datum().is_dominant(&QVec::from_int(mu)) {
            return Err(Error::NotDominant(format!("{mu:?}")));
        }
        Ok(())
    }

    /// Whether `X_μ(b) ≠ ∅`: `κ(μ) = κ(C)` and `ν̄ ≤ μ`.
    fn grass_nonempty(&self, mu: &[i64], class: &StraightClass) -> Result<bool> {
        let d = self.group.datum();
        Ok(d.kappa_class(mu) == class.kappa && d.dominance_leq(&class.nu_bar, &QVec::from_int(mu))?)
    }

    /// `dim X_μ(b) = <ρ, μ - ν̄> - ½ def(C)` in the affine Grassmannian.
    pub fn dim_x_grass(&self, mu: &[i64], class: &StraightClass) -> Result<DimValue> {
        self.check_dominant(mu)?;
        if !self.grass_nonempty(mu, class)? {
            return Ok(DimValue::Empty);
        }
        let two_rho_mu: i64 = crate::rational::dot(self.group.datum().two_rho(), mu);
        let twice = two_rho_mu - class.length as i64 - class.defect as i64;
        if twice % 2 != 0 || twice < 0 {
            return Err(Error::NonIntegralDimension(format!("dim X_μ(b) = {twice}/2")));
        }
        Ok(DimValue::Finite((twice / 2) as u64))
    }

    /// `dim Y_w(γ) = dim X_w(b) + dim Y_γ`.
    pub fn dim_y_flag(&self, w: &AffineWeylElt, gd: &GammaDescriptor) -> Result<DimValue> {
        let springer = gd.resolve_springer_dim()?;
        Ok(self.dim_x_flag(w, &gd.straight_class)?.plus(springer))
    }

    /// `dim Y_μ(γ) = <ρ, μ - ν̄> - ½ def(C) + dim Y_γ`.
    pub fn dim_y_grass(&self, mu: &[i64], gd: &GammaDescriptor) -> Result<DimValue> {
        let springer = gd.resolve_springer_dim()?;
        Ok(self.dim_x_grass(mu, &gd.straight_class)?.plus(springer))
    }

    /// `w = x t^μ y` for superregular `μ`: nonempty iff `κ(μ) = κ(γ)` and
    /// `supp(yx) = S`, with dimension `d_w(C) + dim Y_γ`.
    pub fn dim_y_superregular(
        &self,
        x: &FiniteWeylElt,
        mu: &[i64],
        y: &FiniteWeylElt,
        gd: &GammaDescriptor,
    ) -> Result<DimValue> {
        let g = &*self.group;
        let d = g.datum();
        self.check_dominant(mu)?;
        let class = &gd.straight_class;
        for (i, a) in d.simple_roots().iter().enumerate() {
            if crate::rational::dot(a, mu) < 2 {
                return Err(Error::HypothesisViolated(format!("<α_{}, μ> < 2", i + 1)));
            }
        }
        let shifted = class.nu_bar.add(&QVec::from_int(d.two_rho_check()));
        if !d.dominance_leq(&shifted, &QVec::from_int(mu))? {
            return Err(Error::HypothesisViolated("ν̄ + 2ρ^vee ≤ μ fails".into()));
        }
        let springer = gd.resolve_springer_dim()?;

        let w = g.mul(&g.mul(&g.from_finite(x), &g.translation(mu)?), &g.from_finite(y));
        let eta = g.eta_decomposition(&w)?;
        if (&eta.x, eta.mu.as_slice(), &eta.y) != (x, mu, y) {
            return Err(Error::DecompositionFailure("x t^μ y is not in canonical form".into()));
        }

        let full = d.supp(&eta.eta).len() == d.semisimple_rank();
        let value = if d.kappa_class(mu) == class.kappa && full {
            let vd = self.virtual_dimension(&w, class)?.integral()?;
            let vd = u64::try_from(vd).map_err(|_| Error::NegativeDimension(format!("d_w(C) = {vd}")))?;
            DimValue::Finite(vd + springer)
        } else {
            DimValue::Empty
        };
        let flag = self.dim_y_flag(&w, gd)?;
        if flag != value {
            return Err(Error::Internal(format!("superregular formula gives {value}, reduction gives {flag}")));
        }
        Ok(value)
    }

    /// `<cache_dir>/weylcalc-<datum hash>.json`.
    pub fn cache_path(&self, dir: &Path) -> PathBuf {
        dir.join(format!("weylcalc-{}.json", &self.group.datum().hash()[..16]))
    }

    /// Loads a cache file; stale or foreign files are ignored. Returns the
    /// number of entries loaded.
    pub fn load_cache(&self, dir: &Path) -> Result<usize> {
        let path = self.cache_path(dir);
        let Ok(text) = fs::read_to_string(&path) else {
            return Ok(0);
        };
        let Ok(file) = serde_json::from_str::<CacheFile>(&text) else {
            return Ok(0);
        };
        if file.version != CACHE_VERSION || file.datum_hash != self.group.datum().hash() {
            return Ok(0);
        }
        let g = &*self.group;
        let mut memo = self.memo.write().expect("memo lock");
        let mut n = 0;
        for e in file.entries {
            let w = g.from_spec(&e.w)?;
            memo.entry(w).or_insert_with(|| {
                n += 1;
                Arc::new(e.profile.into_iter().collect())
            });
        }
        self.loaded.fetch_add(n, Ordering::Relaxed);
        Ok(n)
    }

    /// Writes the memo table, entries sorted by element.
    pub fn save_cache(&self, dir: &Path) -> Result<PathBuf> {
        let g = &*self.group;
        let memo = self.memo.read().expect("memo lock");
        let mut entries: Vec<CacheEntry> = memo
            .iter()
            .map(|(w, p)| CacheEntry { w: g.to_spec(w), profile: p.iter().map(|(c, &d)| (c.clone(), d)).collect() })
            .collect();
        entries.sort_by(|a, b| a.w.cmp(&b.w));
        let file = CacheFile { version: CACHE_VERSION, datum_hash: g.datum().hash().to_string(), entries };
        fs::create_dir_all(dir)?;
        let path = self.cache_path(dir);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&file).map_err(|e| Error::Io(e.to_string()))?)?;
        fs::rename(&tmp, &path)?;
        Ok(path)
    }
}
