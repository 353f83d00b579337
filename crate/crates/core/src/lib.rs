//! Exact combinatorics of extended affine Weyl groups.
//!
//! The crate computes lengths, Newton points, Kottwitz invariants, straight
//! conjugacy classes and defects in `W̃ = X ⋊ W_0`, and uses them to decide
//! nonemptiness and compute dimensions of affine Deligne–Lusztig varieties
//! `X_w(b)` and affine Lusztig varieties `Y_w(γ)`. Both `[b]` and `{γ}` are
//! encoded purely combinatorially, through their straight conjugacy class.
//!
//! Modules, bottom up:
//! - [`rootdata`]: root data, dominance, `X / Q^vee`;
//! - [`finiteweyl`]: `W_0` and twisted cyclic shift;
//! - [`affweyl`]: `W̃`, length, `ν`, `κ`, defect, `η`, `Ω`;
//! - [`classes`]: minimal length elements, `≈`, straight classes, P-alcoves;
//! - [`dims`]: dimension evaluators;
//! - [`oracle`]: brute-force ground truth on small balls;
//! - [`cli`]: the `weylcalc` front end.

pub mod affweyl;
pub mod classes;
pub mod cli;
pub mod cyclic;
pub mod dims;
pub mod error;
pub mod finiteweyl;
pub mod oracle;
pub mod rational;
pub mod rootdata;
pub mod snf;

pub use classes::{StraightClass, UxDecomposition};
pub use dims::{DimEngine, DimValue, GammaDescriptor};
pub use affweyl::{AffineRoot, AffineWeyl, AffineWeylElt, ElementSpec, EtaDecomposition, Generator};


pub use error::{Error, Result};
pub use finiteweyl::FiniteWeylElt;
pub use rational::QVec;
pub use rootdata::{build_root_datum, Kappa, RootDatum};
