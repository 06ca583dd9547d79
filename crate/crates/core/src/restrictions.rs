//! The rule engine: every named exclusion predicate with applicability
//! guards and citations, evaluated into an attributed verdict.
//!
//! Rules are pure predicates over schemes. A scheme is admitted when every
//! applicable rule holds; otherwise the verdict lists all violated rule ids
//! (a set — evaluation order never matters). Rule ids are stable strings
//! exposed in the JSON export and the CLI explain output.

use std::collections::BTreeSet;
use std::fmt;

use crate::schemes::{
    bounding_surface_chis, colorings, family_shape, FamilyShape, HalfPair, Scheme,
};
use crate::surfaces::{CompactSurface, CubicAmbient, SurfaceKind};

// ---------------------------------------------------------------------------
// Rule identity and outcome
// ---------------------------------------------------------------------------

/// Stable identifiers of the exclusion rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Harnack,
    LemmaA,
    T1Cong,
    T3Rkgk,
    T3Cong74dT2,
    T3Cong74d2T2,
    T3Brown3T2,
    T3Ff3T2,
    T3Cong74c2Rp2,
    T3Cong74cb6Rp2,
    T4Ff2T2,
    StructK,
    /// Reserved for fault-injection in tests.
    Custom(&'static str),
}

impl RuleId {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Harnack => "HARNACK",
            RuleId::LemmaA => "LEMMA-A",
            RuleId::T1Cong => "T1-CONG",
            RuleId::T3Rkgk => "T3-RKGK",
            RuleId::T3Cong74dT2 => "T3-74D-T2",
            RuleId::T3Cong74d2T2 => "T3-74D-2T2",
            RuleId::T3Brown3T2 => "T3-BROWN-3T2",
            RuleId::T3Ff3T2 => "T3-FF-3T2",
            RuleId::T3Cong74c2Rp2 => "T3-74C-2RP2",
            RuleId::T3Cong74cb6Rp2 => "T3-74CB-6RP2",
            RuleId::T4Ff2T2 => "T4-FF-2T2",
            RuleId::StructK => "STRUCT-K",
            RuleId::Custom(name) => name,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of checking one rule against one scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub passed: bool,
    pub details: String,
}

impl RuleOutcome {
    fn pass(details: impl Into<String>) -> Self {
        RuleOutcome { passed: true, details: details.into() }
    }

    fn fail(details: impl Into<String>) -> Self {
        RuleOutcome { passed: false, details: details.into() }
    }
}

/// One named restriction: an applicability guard and a verdict predicate.
#[derive(Clone)]
pub struct Rule {
    pub id: RuleId,
    pub citation: &'static str,
    applies: fn(&Scheme) -> bool,
    check: fn(&Scheme) -> RuleOutcome,
}

impl Rule {
    pub fn new(
        id: RuleId,
        citation: &'static str,
        applies: fn(&Scheme) -> bool,
        check: fn(&Scheme) -> RuleOutcome,
    ) -> Self {
        Rule { id, citation, applies, check }
    }

    pub fn applies_to(&self, scheme: &Scheme) -> bool {
        (self.applies)(scheme)
    }

    pub fn check(&self, scheme: &Scheme) -> RuleOutcome {
        (self.check)(scheme)
    }
}

impl fmt::Debug for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rule").field("id", &self.id).finish()
    }
}

/// Admitted, or excluded with the set of violated rule ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub violated: Vec<RuleId>,
}

impl Verdict {
    pub fn is_admitted(&self) -> bool {
        self.violated.is_empty()
    }

    pub fn status_str(&self) -> &'static str {
        if self.is_admitted() {
            "admitted"
        } else {
            "excluded"
        }
    }
}

// ---------------------------------------------------------------------------
// The standard rule set
// ---------------------------------------------------------------------------

/// Ordered collection of rules; evaluation is order-independent.
#[derive(Debug, Clone)]
pub struct RuleSet {
    rules: Vec<Rule>,
}

impl RuleSet {
    /// The full ledger of restrictions.
    pub fn standard() -> RuleSet {
        RuleSet {
            rules: vec![
                Rule::new(
                    RuleId::Harnack,
                    "Harnack bound: a real curve of genus 4 has at most 5 connected components",
                    |_| true,
                    harnack_check,
                ),
                Rule::new(
                    RuleId::LemmaA,
                    "double-cover eigenspace bound: B+ carries at most one component of \
                     non-positive Euler characteristic, and so does B- except for \
                     B- = S2_2 u RP2_1 with cores dual to w1 (forcing B+ orientable)",
                    |_| true,
                    lemma_a_check,
                ),
                Rule::new(
                    RuleId::T1Cong,
                    "congruence for curves bounding in a surface dual to w2 of its \
                     complexification: some B1 with ∂B1 = A has χ(B1) ≡ 5 (mod 8) for \
                     M-curves, ≡ 4 or 6 (mod 8) for (M−1)-curves",
                    |s| {
                        s.ambient() == CubicAmbient::ProjectivePlaneAndSphere
                            && matches!(s.b0(), 4 | 5)
                    },
                    t1_cong_check,
                ),
                Rule::new(
                    RuleId::T3Rkgk,
                    "Rokhlin and Kharlamov–Gudkov–Krakhnov congruences: χ(B+) ≡ 3 (mod 8) \
                     for M-curves, ≡ 2 or 4 (mod 8) for (M−1)-curves",
                    |s| {
                        matches_generic(s, CubicAmbient::SevenCrosscaps, SurfaceKind::sphere())
                            .is_some_and(|(a, b, g)| g == 1 && (3..=4).contains(&(a + b)))
                    },
                    t3_rkgk_check,
                ),
                Rule::new(
                    RuleId::T3Cong74dT2,
                    "mod-4 congruence for M-curves whose positive part carries one handle",
                    |s| {
                        matches_generic(s, CubicAmbient::SevenCrosscaps, SurfaceKind::orientable(1))
                            .is_some_and(|(a, b, g)| g == 1 && a + b == 4)
                    },
                    t3_74d_t2_check,
                ),
                Rule::new(
                    RuleId::T3Cong74d2T2,
                    "mod-4 congruence for M-curves whose positive part carries two handles",
                    |s| {
                        matches_generic(s, CubicAmbient::SevenCrosscaps, SurfaceKind::orientable(2))
                            .is_some_and(|(a, b, g)| g == 1 && a + b == 4)
                    },
                    t3_74d_2t2_check,
                ),
                Rule::new(
                    RuleId::T3Brown3T2,
                    "Brown invariant of the Guillou–Marin form: χ(B-) ≡ 3 + B (mod 8) with \
                     B ≡ 1 for M-curves and B ≡ 0 or 2 for (M−1)-curves; (α,β) = (1,1) is \
                     ruled out for type II by the same congruence and for type I by the \
                     complex orientation formula",
                    |s| {
                        matches_generic(s, CubicAmbient::SevenCrosscaps, SurfaceKind::orientable(3))
                            .is_some_and(|(a, b, _)| (3..=4).contains(&(a + b)) || (a, b) == (1, 1))
                    },
                    t3_brown_3t2_check,
                ),
                Rule::new(
                    RuleId::T3Ff3T2,
                    "complex orientation formula: F = (quotient of the complex curve) ∪ B+ \
                     is orientable in S4, so F·F = 6 − 2χ(B+) must vanish",
                    |s| {
                        matches_generic(s, CubicAmbient::SevenCrosscaps, SurfaceKind::orientable(3))
                            .is_some_and(|(a, b, _)| (a, b) == (4, 0))
                    },
                    t3_ff_3t2_check,
                ),
                Rule::new(
                    RuleId::T3Cong74c2Rp2,
                    "characteristic-surface congruence excluding a nonorientable B+ of \
                     Euler characteristic −1 for M-curves",
                    |s| {
                        matches_generic(s, CubicAmbient::SevenCrosscaps, SurfaceKind::nonorientable(2))
                            .is_some_and(|(a, b, g)| (a, b, g) == (2, 2, 1))
                    },
                    t3_74c_2rp2_check,
                ),
                Rule::new(
                    RuleId::T3Cong74cb6Rp2,
                    "characteristic-surface congruences applied to B-: χ(B-) = −1 \
                     nonorientable is excluded, and two neighbouring M-curve shapes fall \
                     to the companion mod-4 congruence",
                    |s| {
                        matches_generic(s, CubicAmbient::SevenCrosscaps, SurfaceKind::nonorientable(6))
                            .is_some_and(|(a, b, _)| [(2, 1), (3, 1), (2, 2)].contains(&(a, b)))
                    },
                    t3_74cb_6rp2_check,
                ),
                Rule::new(
                    RuleId::T4Ff2T2,
                    "complex orientation formula in a negative definite quotient: F \
                     orientable forces F·F = 6 − 2χ(B+) ≤ 0",
                    |s| {
                        matches_generic(s, CubicAmbient::FiveCrosscaps, SurfaceKind::orientable(2))
                            .is_some_and(|(a, b, _)| (a, b) == (4, 0))
                    },
                    t4_ff_2t2_check,
                ),
                Rule::new(
                    RuleId::StructK,
                    "χ additivity determines the crosscap count k of the negative big \
                     component; k ≥ 1 is required for it to exist",
                    |s| {
                        !s.ambient().has_positive_chi()
                            && s.pair().and_then(family_shape).is_some_and(|f| {
                                matches!(f, FamilyShape::Generic { .. })
                            })
                    },
                    struct_k_check,
                ),
            ],
        }
    }

    /// Standard rules plus an extra one (fault injection in tests).
    pub fn with_rule(mut self, rule: Rule) -> RuleSet {
        self.rules.push(rule);
        self
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Runs every applicable rule and collects all violations.
    pub fn evaluate(&self, scheme: &Scheme) -> Verdict {
        let mut violated: Vec<RuleId> = self
            .rules
            .iter()
            .filter(|rule| rule.applies_to(scheme) && !rule.check(scheme).passed)
            .map(|rule| rule.id)
            .collect();
        violated.sort();
        violated.dedup();
        Verdict { violated }
    }

    /// Per-rule report with the computed quantities.
    pub fn explain(&self, scheme: &Scheme) -> Explanation {
        let reports = self
            .rules
            .iter()
            .filter(|rule| rule.applies_to(scheme))
            .map(|rule| {
                let outcome = rule.check(scheme);
                RuleReport {
                    id: rule.id,
                    citation: rule.citation,
                    passed: outcome.passed,
                    details: outcome.details,
                }
            })
            .collect();
        Explanation {
            code: scheme.code(),
            ambient: scheme.ambient(),
            b0: scheme.b0(),
            verdict: self.evaluate(scheme),
            reports,
        }
    }
}

/// Evaluates a scheme against the standard rule set.
pub fn evaluate(scheme: &Scheme) -> Verdict {
    RuleSet::standard().evaluate(scheme)
}

/// Explains a scheme against the standard rule set.
pub fn explain(scheme: &Scheme) -> Explanation {
    RuleSet::standard().explain(scheme)
}

/// One line of an explanation.
#[derive(Debug, Clone)]
pub struct RuleReport {
    pub id: RuleId,
    pub citation: &'static str,
    pub passed: bool,
    pub details: String,
}

/// Human-readable report of every applicable rule.
#[derive(Debug, Clone)]
pub struct Explanation {
    pub code: String,
    pub ambient: CubicAmbient,
    pub b0: u32,
    pub verdict: Verdict,
    pub reports: Vec<RuleReport>,
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "scheme {} on {} (b0 = {})", self.code, self.ambient, self.b0)?;
        if self.verdict.is_admitted() {
            writeln!(f, "verdict: admitted")?;
        } else {
            let ids: Vec<&str> = self.verdict.violated.iter().map(|id| id.as_str()).collect();
            writeln!(f, "verdict: excluded [{}]", ids.join(", "))?;
        }
        for report in &self.reports {
            writeln!(
                f,
                "  [{}] {}: {}",
                if report.passed { "pass" } else { "FAIL" },
                report.id,
                report.details
            )?;
            writeln!(f, "         ({})", report.citation)?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Rule predicates
// ---------------------------------------------------------------------------

/// (α, β, γ) of a generic family scheme with the given ambient and big part.
fn matches_generic(
    scheme: &Scheme,
    ambient: CubicAmbient,
    big_kind: SurfaceKind,
) -> Option<(u32, u32, u32)> {
    if scheme.ambient() != ambient {
        return None;
    }
    match scheme.pair().and_then(family_shape) {
        Some(FamilyShape::Generic { big, alpha, beta, gamma, .. }) if big == big_kind => {
            Some((alpha, beta, gamma))
        }
        _ => None,
    }
}

fn harnack_check(scheme: &Scheme) -> RuleOutcome {
    let b0 = scheme.b0();
    if b0 <= 5 {
        RuleOutcome::pass(format!("b0 = {b0} ≤ 5"))
    } else {
        RuleOutcome::fail(format!("b0 = {b0} > 5"))
    }
}

fn non_positive_count(side: &[CompactSurface]) -> usize {
    side.iter().filter(|s| s.euler_characteristic() <= 0).count()
}

fn is_exceptional_minus(pair: &HalfPair) -> bool {
    pair.minus.len() == 2
        && pair.minus.contains(&CompactSurface::annulus())
        && pair.minus.contains(&CompactSurface::moebius_band())
}

fn lemma_a_pair_ok(pair: &HalfPair) -> bool {
    if non_positive_count(&pair.plus) > 1 {
        return false;
    }
    if non_positive_count(&pair.minus) <= 1 {
        return true;
    }
    // Exceptional minus side: exactly an annulus and a Möbius band, whose
    // cores are dual to w1 of the ambient; cutting along them leaves an
    // orientable complement. On the projective-plane component the Möbius
    // region is necessarily the outermost one.
    is_exceptional_minus(pair) && pair.plus.iter().all(|s| s.is_orientable())
}

fn side_debug(side: &[CompactSurface]) -> String {
    let names: Vec<String> = side.iter().map(|s| s.to_string()).collect();
    format!("{{{}}}", names.join(", "))
}

fn lemma_a_check(scheme: &Scheme) -> RuleOutcome {
    let pairs = colorings(scheme);
    if pairs.is_empty() {
        return RuleOutcome::fail(
            "no sign assignment satisfies the parity conventions with B- nonorientable"
                .to_string(),
        );
    }
    for pair in &pairs {
        if lemma_a_pair_ok(pair) {
            return RuleOutcome::pass(format!(
                "{} admissible coloring(s); witness B+ = {}, B- = {}",
                pairs.len(),
                side_debug(&pair.plus),
                side_debug(&pair.minus)
            ));
        }
    }
    RuleOutcome::fail(format!(
        "all {} admissible coloring(s) put two components of non-positive χ on one side \
         without the exceptional shape, e.g. B+ = {}, B- = {}",
        pairs.len(),
        side_debug(&pairs[0].plus),
        side_debug(&pairs[0].minus)
    ))
}

fn t1_cong_check(scheme: &Scheme) -> RuleOutcome {
    let b0 = scheme.b0();
    let chis = bounding_surface_chis(scheme);
    let residues: BTreeSet<i64> = chis.iter().map(|c| c.rem_euclid(8)).collect();
    let needed: &[i64] = if b0 == 5 { &[5] } else { &[4, 6] };
    let passed = needed.iter().any(|n| residues.contains(n));
    let detail = format!(
        "b0 = {b0}; bounding-surface χ values {:?} have residues {:?} (mod 8); need one of {:?}",
        chis, residues, needed
    );
    if passed {
        RuleOutcome::pass(detail)
    } else {
        RuleOutcome::fail(detail)
    }
}

fn generic_params(scheme: &Scheme) -> (i64, i64, u32) {
    match scheme.pair().and_then(family_shape) {
        Some(FamilyShape::Generic { alpha, beta, gamma, .. }) => {
            (i64::from(alpha), i64::from(beta), gamma)
        }
        _ => unreachable!("guarded by applicability"),
    }
}

fn t3_rkgk_check(scheme: &Scheme) -> RuleOutcome {
    let (alpha, beta, _) = generic_params(scheme);
    let chi_plus = alpha - beta + 1;
    let residue = chi_plus.rem_euclid(8);
    let (needed, passed): (&str, bool) = if alpha + beta == 4 {
        ("3", residue == 3)
    } else {
        ("2 or 4", residue == 2 || residue == 4)
    };
    let detail =
        format!("χ(B+) = α−β+1 = {chi_plus} ≡ {residue} (mod 8); need {needed}");
    if passed {
        RuleOutcome::pass(detail)
    } else {
        RuleOutcome::fail(detail)
    }
}

fn mod4_check(value: i64, label: &str) -> RuleOutcome {
    let residue = value.rem_euclid(4);
    let detail = format!("{label} = {value} ≡ {residue} (mod 4); need 3");
    if residue == 3 {
        RuleOutcome::pass(detail)
    } else {
        RuleOutcome::fail(detail)
    }
}

fn t3_74d_t2_check(scheme: &Scheme) -> RuleOutcome {
    let (alpha, beta, _) = generic_params(scheme);
    mod4_check(alpha - beta - 1, "α−β−1")
}

fn t3_74d_2t2_check(scheme: &Scheme) -> RuleOutcome {
    let (alpha, beta, _) = generic_params(scheme);
    mod4_check(alpha - beta - 3, "α−β−3")
}

fn t3_brown_3t2_check(scheme: &Scheme) -> RuleOutcome {
    let (alpha, beta, _) = generic_params(scheme);
    if (alpha, beta) == (1, 1) {
        // Both halves of the (1,1) argument; E = D- ∪ (non-disk part of B+),
        // so χ(E) = χ(B+) − α + 1 = χ(B+) here.
        let chi_plus = scheme.chi_sides().map(|(p, _)| p).unwrap_or(0);
        let chi_e = chi_plus - alpha + 1;
        let base = 6 - 2 * (1 + chi_e + 1);
        return RuleOutcome::fail(format!(
            "type II: β−α ≡ 0 (mod 8) contradicts the Brown-invariant congruence; \
             type I: G.G = 6 − 2(χ(D+)+χ(E)+χ(D−)) ± 4 ∈ {{{}, {}}}, but G bounds in S4 \
             so G.G = 0",
            base + 4,
            base - 4
        ));
    }
    let diff = beta - alpha;
    let residue = diff.rem_euclid(8);
    let (needed, passed): (&str, bool) = if alpha + beta == 4 {
        ("4", residue == 4)
    } else {
        ("3 or 5", residue == 3 || residue == 5)
    };
    let detail = format!("β−α = {diff} ≡ {residue} (mod 8); need {needed}");
    if passed {
        RuleOutcome::pass(detail)
    } else {
        RuleOutcome::fail(detail)
    }
}

/// Half the self-intersection of the complexified cubic in its quotient.
const HALF_CB_SELF_INTERSECTION: i64 = 6;

fn t3_ff_3t2_check(scheme: &Scheme) -> RuleOutcome {
    let chi_plus = scheme.chi_sides().map(|(p, _)| p).unwrap_or(0);
    let ff = HALF_CB_SELF_INTERSECTION - 2 * chi_plus;
    RuleOutcome::fail(format!(
        "F·F = 6 − 2χ(B+) = 6 − 2·({chi_plus}) = {ff} ≠ 0 although F is orientable in S4"
    ))
}

fn t3_74c_2rp2_check(scheme: &Scheme) -> RuleOutcome {
    let chi_plus = scheme.chi_sides().map(|(p, _)| p).unwrap_or(0);
    RuleOutcome::fail(format!(
        "χ(B+) = {chi_plus} with B+ nonorientable, excluded for M-curves"
    ))
}

fn t3_74cb_6rp2_check(scheme: &Scheme) -> RuleOutcome {
    let (alpha, beta, _) = generic_params(scheme);
    if (alpha, beta) == (2, 1) {
        let chi_minus = scheme.chi_sides().map(|(_, m)| m).unwrap_or(0);
        RuleOutcome::fail(format!(
            "χ(B-) = β−α = {chi_minus} with B- nonorientable, excluded for this (M−2)-curve"
        ))
    } else {
        RuleOutcome::fail(format!(
            "(α, β) = ({alpha}, {beta}) falls to the companion mod-4 congruence on B-"
        ))
    }
}

fn t4_ff_2t2_check(scheme: &Scheme) -> RuleOutcome {
    let chi_plus = scheme.chi_sides().map(|(p, _)| p).unwrap_or(0);
    let ff = HALF_CB_SELF_INTERSECTION - 2 * chi_plus;
    RuleOutcome::fail(format!(
        "F·F = 6 − 2χ(B+) = 6 − 2·({chi_plus}) = {ff} > 0, impossible in a negative \
         definite quotient"
    ))
}

fn struct_k_check(scheme: &Scheme) -> RuleOutcome {
    match scheme.pair().and_then(family_shape) {
        Some(FamilyShape::Generic { minus_crosscaps, .. }) => {
            if minus_crosscaps >= 1 {
                RuleOutcome::pass(format!("k = {minus_crosscaps} ≥ 1"))
            } else {
                RuleOutcome::fail(format!("k = {minus_crosscaps} < 1"))
            }
        }
        _ => RuleOutcome::pass("not a generic family scheme".to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schemes::{family_scheme, Scheme};
    use crate::surfaces::SurfaceKind;

    fn scheme(ambient: CubicAmbient, text: &str) -> Scheme {
        Scheme::parse(ambient, text).unwrap()
    }

    #[test]
    fn rkgk_excludes_family_one_031() {
        let s = family_scheme(CubicAmbient::SevenCrosscaps, SurfaceKind::sphere(), 0, 3, 1);
        let verdict = evaluate(&s);
        assert_eq!(verdict.violated, vec![RuleId::T3Rkgk]);
        let explanation = explain(&s);
        let report = explanation.reports.iter().find(|r| r.id == RuleId::T3Rkgk).unwrap();
        assert!(report.details.contains("≡ 6 (mod 8)"), "details: {}", report.details);
    }

    #[test]
    fn empty_scheme_on_seven_crosscaps_is_admitted() {
        let s = scheme(CubicAmbient::SevenCrosscaps, "<0, 7RP2>");
        assert!(evaluate(&s).is_admitted());
    }

    #[test]
    fn ff_excludes_two_handles_on_five_crosscaps() {
        let s = scheme(CubicAmbient::FiveCrosscaps, "<4 u 2T2_1, 0 u RP2_5>");
        assert_eq!(evaluate(&s).violated, vec![RuleId::T4Ff2T2]);
    }

    #[test]
    fn t1_cong_excludes_nest_with_two_inner_ovals() {
        let s = scheme(CubicAmbient::ProjectivePlaneAndSphere, "<2 u 1<2>>@RP2 | <>@S2");
        assert_eq!(evaluate(&s).violated, vec![RuleId::T1Cong]);
        let chis = bounding_surface_chis(&s);
        assert_eq!(chis.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn lemma_a_on_nested_chains() {
        let chain3 = scheme(CubicAmbient::ProjectivePlane, "<1<1<1>>>");
        assert!(evaluate(&chain3).is_admitted());

        let chain4 = scheme(CubicAmbient::ProjectivePlane, "<1<1<1<1>>>>");
        assert_eq!(evaluate(&chain4).violated, vec![RuleId::LemmaA]);

        let deep_two = scheme(CubicAmbient::ProjectivePlane, "<1<1<2>>>");
        assert_eq!(evaluate(&deep_two).violated, vec![RuleId::LemmaA]);
    }

    #[test]
    fn explain_five_flat_ovals_reports_side_chis() {
        let s = scheme(CubicAmbient::ProjectivePlaneAndSphere, "<5>@RP2 | <>@S2");
        let explanation = explain(&s);
        assert!(explanation.verdict.is_admitted());
        let chis = bounding_surface_chis(&s);
        assert_eq!(chis.into_iter().collect::<Vec<_>>(), vec![-4, -2, 5, 7]);
        let report = explanation.reports.iter().find(|r| r.id == RuleId::T1Cong).unwrap();
        assert!(report.passed);
        assert!(report.details.contains("5"), "details: {}", report.details);
    }

    #[test]
    fn explain_empty_scheme_on_rp2_has_no_congruence_rules() {
        let s = scheme(CubicAmbient::ProjectivePlane, "<>");
        let explanation = explain(&s);
        assert!(explanation.verdict.is_admitted());
        assert!(explanation.reports.iter().all(|r| r.id != RuleId::T1Cong));
        let lemma = explanation.reports.iter().find(|r| r.id == RuleId::LemmaA).unwrap();
        assert!(lemma.passed);
    }

    #[test]
    fn brown_one_one_reports_both_orientation_values() {
        let s =
            family_scheme(CubicAmbient::SevenCrosscaps, SurfaceKind::orientable(3), 1, 1, 1);
        let explanation = explain(&s);
        assert_eq!(explanation.verdict.violated, vec![RuleId::T3Brown3T2]);
        let report =
            explanation.reports.iter().find(|r| r.id == RuleId::T3Brown3T2).unwrap();
        assert!(report.details.contains("16"), "details: {}", report.details);
        assert!(report.details.contains("8"), "details: {}", report.details);
    }

    #[test]
    fn harnack_fires_on_oversized_schemes() {
        let s = scheme(CubicAmbient::ProjectivePlane, "<6>");
        assert_eq!(evaluate(&s).violated, vec![RuleId::Harnack]);
    }

    #[test]
    fn evaluation_is_order_independent() {
        let standard = RuleSet::standard();
        let mut reversed_rules = standard.rules().to_vec();
        reversed_rules.reverse();
        let reversed = RuleSet { rules: reversed_rules };
        for (ambient, text) in [
            (CubicAmbient::ProjectivePlane, "<1<1<1<1>>>>"),
            (CubicAmbient::FiveCrosscaps, "<4 u 2T2_1, 0 u RP2_5>"),
            (CubicAmbient::ProjectivePlaneAndSphere, "<1 u 1<2>>@RP2 | <>@S2"),
        ] {
            let s = scheme(ambient, text);
            assert_eq!(standard.evaluate(&s), reversed.evaluate(&s), "{text}");
        }
    }
}
