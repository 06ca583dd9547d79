//! JSON export of a classified ambient.
//!
//! Schema (keys always sorted, scheme order deterministic):
//!
//! ```json
//! {
//!   "ambient": "7RP2",
//!   "chi": -5,
//!   "schemes": [
//!     {
//!       "b0": 3, "chi_minus": 0, "chi_plus": -5,
//!       "code": "<1 u 3T2_2, S2_2 u RP2_1>",
//!       "construction": {"method": "CubicParallelCopy", "source": null},
//!       "family": "exceptional", "params": null,
//!       "rules": [], "status": "admitted"
//!     }
//!   ]
//! }
//! ```
//!
//! `params` carries (α, β, γ) for family schemes and is null otherwise;
//! `chi_plus`/`chi_minus` are null on the positive-χ ambients where the sign
//! decomposition is not part of the code; `rules` lists the violated rule
//! ids of excluded schemes; `construction` is null for excluded schemes.

use serde::Serialize;

use crate::catalog::{ground_truth, positive_family_label, CatalogEntry};
use crate::enumerator::{candidates, family_label};
use crate::restrictions::RuleSet;
use crate::schemes::{family_shape, FamilyShape, Scheme};
use crate::surfaces::CubicAmbient;

// Field order is alphabetical so serialized keys come out sorted.

#[derive(Debug, Clone, Serialize)]
pub struct AmbientExport {
    pub ambient: String,
    pub chi: i64,
    pub schemes: Vec<SchemeExport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SchemeExport {
    pub b0: u32,
    pub chi_minus: Option<i64>,
    pub chi_plus: Option<i64>,
    pub code: String,
    pub construction: Option<ConstructionExport>,
    pub family: String,
    pub params: Option<ParamsExport>,
    pub rules: Vec<String>,
    pub status: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionExport {
    pub method: String,
    pub source: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ParamsExport {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
}

fn scheme_family(scheme: &Scheme) -> String {
    if scheme.ambient().has_positive_chi() {
        positive_family_label(scheme)
    } else {
        family_label(scheme.ambient(), scheme)
    }
}

fn scheme_params(scheme: &Scheme) -> Option<ParamsExport> {
    match scheme.pair().and_then(family_shape) {
        Some(FamilyShape::Generic { alpha, beta, gamma, .. }) => {
            Some(ParamsExport { alpha, beta, gamma })
        }
        _ => None,
    }
}

/// Classifies an ambient and renders every candidate scheme.
pub fn export_ambient(ambient: CubicAmbient, rules: &RuleSet) -> AmbientExport {
    let truth = ground_truth(ambient);
    let construction_of = |scheme: &Scheme| -> Option<ConstructionExport> {
        truth
            .iter()
            .find(|e: &&CatalogEntry| e.scheme == *scheme)
            .map(|e| ConstructionExport {
                method: e.construction.method.as_str().to_string(),
                source: e.construction.source.clone(),
            })
    };

    let schemes = candidates(ambient)
        .into_iter()
        .map(|scheme| {
            let verdict = rules.evaluate(&scheme);
            let (chi_plus, chi_minus) = match scheme.chi_sides() {
                Some((p, m)) => (Some(p), Some(m)),
                None => (None, None),
            };
            SchemeExport {
                b0: scheme.b0(),
                chi_minus,
                chi_plus,
                code: scheme.code(),
                construction: if verdict.is_admitted() { construction_of(&scheme) } else { None },
                family: scheme_family(&scheme),
                params: scheme_params(&scheme),
                rules: verdict.violated.iter().map(|id| id.as_str().to_string()).collect(),
                status: verdict.status_str().to_string(),
            }
        })
        .collect();

    AmbientExport { ambient: ambient.as_str().to_string(), chi: ambient.chi(), schemes }
}
