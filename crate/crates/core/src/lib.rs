//! Topological arrangements of nonsingular degree-6 curves on the five
//! diffeomorphism types of nonsingular real cubic surfaces.
//!
//! A quadric cuts a degree-6 curve on a cubic surface; up to homeomorphism
//! of the pair (surface, curve) there are exactly 376 arrangement types:
//! 31 on RP2 ⊔ S2, 17 on RP2, 157 on 7RP2, 113 on 5RP2 and 58 on 3RP2.
//! This crate enumerates the structural candidates, applies the known
//! restrictions (the Harnack bound, a double-cover bound on components of
//! non-positive Euler characteristic, and a ledger of congruences), and
//! checks the result against an embedded catalog with construction
//! provenance for every admitted type.
//!
//! Modules:
//! * [`surfaces`] — surface types, χ arithmetic, the cubic ambients;
//! * [`codes`] — the nested-oval and half-pair code notations;
//! * [`schemes`] — schemes, region decompositions, sign colorings,
//!   half-pair validation;
//! * [`restrictions`] — the rule engine with attributed verdicts;
//! * [`enumerator`] — candidate generation and classification;
//! * [`catalog`] — ground-truth lists, constructions, closure checking;
//! * [`export`] — the JSON schema.

pub mod catalog;
pub mod codes;
pub mod enumerator;
pub mod export;
pub mod restrictions;
pub mod schemes;
pub mod surfaces;

pub use catalog::{closure_check, ground_truth, verify, CatalogEntry, ConstructionRecord, Method};
pub use codes::{canonicalize_on_sphere, parse_forest, parse_pair, OvalForest, PairCode};
pub use enumerator::{candidates, classify, counts, Classification};
pub use restrictions::{evaluate, explain, Rule, RuleId, RuleSet, Verdict};
pub use schemes::{
    colorings, regions_of, validate_pair, FamilyShape, HalfPair, PairError, Scheme,
};
pub use surfaces::{CompactSurface, CubicAmbient, SurfaceKind};
