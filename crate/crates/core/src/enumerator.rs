//! Candidate generation and classification.
//!
//! Positive-χ ambients: every canonical oval forest with at most 5 ovals in
//! total (the Harnack bound doubles as a generator bound; the rule still
//! exists so reports can cite it). Sphere forests are canonicalized, so each
//! arrangement appears exactly once.
//!
//! Negative-χ ambients: every family instance
//! ⟨α ⊔ Big_{β+γ}, β ⊔ kRP2_{α+γ}⟩ with Big a sphere, jT2 or 2jRP2, k ≥ 1
//! determined by χ additivity and α + β + γ ≤ 5, plus the two exceptional
//! pairs and the empty scheme.

use std::collections::{BTreeMap, BTreeSet};

use crate::codes::{canonicalize_on_sphere, OvalForest, OvalNode};
use crate::restrictions::{RuleSet, Verdict};
use crate::schemes::{
    empty_scheme, exceptional_scheme, family_scheme, family_shape, minus_crosscaps_for,
    FamilyShape, Scheme,
};
use crate::surfaces::{CubicAmbient, SurfaceKind};

/// All canonical rooted forests with exactly `n` ovals.
pub fn rooted_forests(n: u32) -> Vec<OvalForest> {
    fn build(n: u32) -> BTreeSet<OvalForest> {
        if n == 0 {
            return BTreeSet::from([OvalForest::empty()]);
        }
        let mut out = BTreeSet::new();
        for first_tree_size in 1..=n {
            for children in build(first_tree_size - 1) {
                let tree = OvalNode::with_children(children);
                for rest in build(n - first_tree_size) {
                    let mut nodes = rest.nodes().to_vec();
                    nodes.push(tree.clone());
                    out.insert(OvalForest::new(nodes));
                }
            }
        }
        out
    }
    build(n).into_iter().collect()
}

/// All arrangements of `n` circles on the sphere, as canonical codes.
pub fn sphere_forests(n: u32) -> Vec<OvalForest> {
    let classes: BTreeSet<OvalForest> =
        rooted_forests(n).iter().map(canonicalize_on_sphere).collect();
    classes.into_iter().collect()
}

/// The big components available on a negative-χ ambient, in family order:
/// orientable by genus, then nonorientable by crosscap count.
pub fn available_bigs(ambient: CubicAmbient) -> Vec<SurfaceKind> {
    let mut bigs = Vec::new();
    for genus in 0..=3 {
        let big = SurfaceKind::orientable(genus);
        if minus_crosscaps_for(ambient, big, 1) >= 1 {
            bigs.push(big);
        }
    }
    for crosscaps in [2, 4, 6] {
        let big = SurfaceKind::nonorientable(crosscaps);
        if minus_crosscaps_for(ambient, big, 1) >= 1 {
            bigs.push(big);
        }
    }
    bigs
}

/// 1-based family index of a pair shape in the ambient's catalog numbering.
pub fn family_index(ambient: CubicAmbient, shape: &FamilyShape) -> usize {
    let bigs = available_bigs(ambient);
    match shape {
        FamilyShape::Generic { big, .. } => {
            bigs.iter().position(|b| b == big).map(|i| i + 1).unwrap_or(0)
        }
        FamilyShape::Exceptional { .. } => bigs.len() + 1,
        FamilyShape::Empty => bigs.len() + 2,
    }
}

/// Family label used in reports and the JSON export.
pub fn family_label(ambient: CubicAmbient, scheme: &Scheme) -> String {
    match scheme.pair().and_then(family_shape) {
        Some(FamilyShape::Exceptional { .. }) => "exceptional".to_string(),
        Some(FamilyShape::Empty) => "empty".to_string(),
        Some(shape @ FamilyShape::Generic { .. }) => family_index(ambient, &shape).to_string(),
        None => "other".to_string(),
    }
}

/// The structural candidate space of an ambient, deterministically ordered:
/// by canonical code text for forest schemes, by (family, α, β, γ) for pairs.
pub fn candidates(ambient: CubicAmbient) -> Vec<Scheme> {
    match ambient {
        CubicAmbient::ProjectivePlane => {
            let mut schemes: Vec<Scheme> = (0..=5)
                .flat_map(rooted_forests)
                .map(Scheme::on_projective_plane)
                .collect();
            schemes.sort_by_key(Scheme::code);
            schemes
        }
        CubicAmbient::ProjectivePlaneAndSphere => {
            let mut schemes = Vec::new();
            for rp2_count in 0..=5 {
                for s2_count in 0..=(5 - rp2_count) {
                    for rp2 in rooted_forests(rp2_count) {
                        for s2 in sphere_forests(s2_count) {
                            schemes.push(Scheme::on_plane_and_sphere(rp2.clone(), s2));
                        }
                    }
                }
            }
            schemes.sort_by_key(Scheme::code);
            schemes.dedup();
            schemes
        }
        _ => {
            let mut schemes = Vec::new();
            for big in available_bigs(ambient) {
                for alpha in 0..=4u32 {
                    for beta in 0..=4u32 {
                        for gamma in 1..=5u32 {
                            if alpha + beta + gamma > 5 {
                                continue;
                            }
                            if minus_crosscaps_for(ambient, big, gamma) < 1 {
                                continue;
                            }
                            schemes.push(family_scheme(ambient, big, alpha, beta, gamma));
                        }
                    }
                }
            }
            schemes.push(exceptional_scheme(ambient, true));
            schemes.push(exceptional_scheme(ambient, false));
            schemes.push(empty_scheme(ambient));
            schemes
        }
    }
}

/// A classified candidate space.
#[derive(Debug, Clone)]
pub struct Classification {
    pub admitted: Vec<Scheme>,
    pub excluded: Vec<(Scheme, Verdict)>,
}

/// Partitions the candidates of an ambient by the rule set.
pub fn classify(ambient: CubicAmbient, rules: &RuleSet) -> Classification {
    let mut admitted = Vec::new();
    let mut excluded = Vec::new();
    for scheme in candidates(ambient) {
        let verdict = rules.evaluate(&scheme);
        if verdict.is_admitted() {
            admitted.push(scheme);
        } else {
            excluded.push((scheme, verdict));
        }
    }
    Classification { admitted, excluded }
}

/// Per-ambient candidate and verdict counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmbientCounts {
    pub structural: usize,
    pub admitted: usize,
    pub excluded: usize,
}

/// Counts for all five ambients plus the grand admitted total.
pub fn counts(rules: &RuleSet) -> (BTreeMap<CubicAmbient, AmbientCounts>, usize) {
    let mut by_ambient = BTreeMap::new();
    let mut total = 0;
    for ambient in CubicAmbient::ALL {
        let classification = classify(ambient, rules);
        let entry = AmbientCounts {
            structural: classification.admitted.len() + classification.excluded.len(),
            admitted: classification.admitted.len(),
            excluded: classification.excluded.len(),
        };
        total += entry.admitted;
        by_ambient.insert(ambient, entry);
    }
    (by_ambient, total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::parse_forest;

    #[test]
    fn rooted_forest_counts_match_the_tree_numbers() {
        // Rooted forests on n unlabeled nodes = rooted trees on n+1 nodes.
        let expected = [1, 1, 2, 4, 9, 20];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(rooted_forests(n as u32).len(), *want, "n = {n}");
        }
    }

    #[test]
    fn sphere_class_counts_match_the_unrooted_tree_numbers() {
        // Circle arrangements on the sphere with n circles = trees on n+1 nodes.
        let expected = [1, 1, 1, 2, 3, 6];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(sphere_forests(n as u32).len(), *want, "n = {n}");
        }
    }

    #[test]
    fn available_bigs_per_ambient() {
        assert_eq!(available_bigs(CubicAmbient::SevenCrosscaps).len(), 7);
        assert_eq!(available_bigs(CubicAmbient::FiveCrosscaps).len(), 5);
        assert_eq!(available_bigs(CubicAmbient::ThreeCrosscaps).len(), 3);
        // No 2T2 family on 3RP2: k = 1 − 2γ < 1.
        assert!(!available_bigs(CubicAmbient::ThreeCrosscaps)
            .contains(&SurfaceKind::orientable(2)));
    }

    #[test]
    fn sphere_family_candidates_on_seven_crosscaps_number_34() {
        let sphere_family: Vec<Scheme> = candidates(CubicAmbient::SevenCrosscaps)
            .into_iter()
            .filter(|s| {
                matches!(
                    s.pair().and_then(crate::schemes::family_shape),
                    Some(FamilyShape::Generic { big, .. }) if big == SurfaceKind::sphere()
                )
            })
            .collect();
        // 15 + 10 + 6 + 3 instances for γ = 1, 2, 3, 4.
        assert_eq!(sphere_family.len(), 34);
    }

    #[test]
    fn rp2_candidates_include_the_depth_three_chain() {
        let chain = Scheme::on_projective_plane(parse_forest("<1<1<1>>>").unwrap());
        assert!(candidates(CubicAmbient::ProjectivePlane).contains(&chain));
    }

    #[test]
    fn candidate_codes_are_unique() {
        for ambient in CubicAmbient::ALL {
            let mut codes: Vec<String> =
                candidates(ambient).iter().map(Scheme::code).collect();
            let before = codes.len();
            codes.sort();
            codes.dedup();
            assert_eq!(codes.len(), before, "duplicate candidates on {ambient}");
        }
    }

    #[test]
    fn structural_candidate_counts() {
        assert_eq!(candidates(CubicAmbient::ProjectivePlane).len(), 37);
        assert_eq!(candidates(CubicAmbient::ProjectivePlaneAndSphere).len(), 82);
        assert_eq!(candidates(CubicAmbient::SevenCrosscaps).len(), 179);
        assert_eq!(candidates(CubicAmbient::FiveCrosscaps).len(), 114);
        assert_eq!(candidates(CubicAmbient::ThreeCrosscaps).len(), 58);
    }

    #[test]
    fn region_decompositions_satisfy_chi_and_incidence_invariants() {
        use crate::schemes::{raw_coloring_count, regions_of};
        for ambient in [CubicAmbient::ProjectivePlane, CubicAmbient::ProjectivePlaneAndSphere] {
            let components = if ambient.is_connected() { 1 } else { 2 };
            for scheme in candidates(ambient) {
                let regions = regions_of(&scheme).unwrap();
                assert_eq!(regions.total_chi(), ambient.chi(), "{}", scheme.code());
                assert_eq!(
                    regions.boundary_incidences(),
                    2 * scheme.b0(),
                    "{}",
                    scheme.code()
                );
                assert_eq!(raw_coloring_count(&scheme), 1 << components, "{}", scheme.code());
            }
        }
    }

    #[test]
    fn classification_counts_match_the_catalog_sizes() {
        let rules = RuleSet::standard();
        let expected = [
            (CubicAmbient::ProjectivePlaneAndSphere, 31),
            (CubicAmbient::ProjectivePlane, 17),
            (CubicAmbient::SevenCrosscaps, 157),
            (CubicAmbient::FiveCrosscaps, 113),
            (CubicAmbient::ThreeCrosscaps, 58),
        ];
        for (ambient, want) in expected {
            assert_eq!(classify(ambient, &rules).admitted.len(), want, "{ambient}");
        }
        let (_, total) = counts(&rules);
        assert_eq!(total, 376);
    }

    #[test]
    fn per_family_admitted_counts_on_seven_crosscaps() {
        let rules = RuleSet::standard();
        let classification = classify(CubicAmbient::SevenCrosscaps, &rules);
        let mut per_family = BTreeMap::new();
        for scheme in &classification.admitted {
            *per_family
                .entry(family_label(CubicAmbient::SevenCrosscaps, scheme))
                .or_insert(0usize) += 1;
        }
        let generic: Vec<usize> =
            (1..=7).map(|i| per_family.get(&i.to_string()).copied().unwrap_or(0)).collect();
        assert_eq!(generic, vec![28, 29, 22, 8, 30, 25, 12]);
        assert_eq!(per_family.get("exceptional"), Some(&2));
        assert_eq!(per_family.get("empty"), Some(&1));
    }
}
