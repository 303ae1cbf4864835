//! Exact computational Lie theory for Weyl modules.
//!
//! The crate decides, for a split simple simply connected group and a
//! dominant weight, whether the Weyl module stays irreducible over every
//! field. Two independent routes are provided and cross-checked:
//!
//! * [`classify`] — a constructive classifier built from Levi restriction
//!   and a small table of base cases, producing replayable witness chains;
//! * [`jantzen`] — the Jantzen sum formula evaluated symbolically over
//!   Euler characteristics, used as a per-characteristic oracle.
//!
//! Supporting layers: [`root_data`] (root systems of all simple types with
//! exact integer/rational arithmetic), [`weight_lattice`] (dominance order,
//! minuscule weights, Weyl orbits), [`characters`] (Weyl dimension formula,
//! Freudenthal multiplicities, Euler characteristics), and [`killing`]
//! (reduced Killing form Gram matrices and discriminants on character
//! lattices of isogeny quotients).
//!
//! No floating point is used anywhere: weights are integer vectors, forms
//! are exact rationals, and dimensions are big integers.

pub mod characters;
pub mod classify;
pub mod error;
pub mod jantzen;
pub mod killing;
pub mod linalg;
pub mod root_data;
pub mod sweep;
pub mod verify;
pub mod weight_lattice;

pub use error::{Error, Result};
pub use root_data::{cartan_matrix, Family, LeviComponent, Root, RootSystem, RootSystemType, Weight};
pub use weight_lattice::{OrbitSummary, DEFAULT_ORBIT_CAP};
pub use characters::{DimCache, Euler, MultiplicityTable, VirtualCharacter};
pub use jantzen::{JantzenReport, JantzenTerm};
pub use classify::{BaseReason, ChainStep, QmCase, Verdict};
pub use killing::{LatticeForm, KillingReport, QuotientSpec};
pub use verify::{run_acceptance, CheckResult, VerifyConfig};
