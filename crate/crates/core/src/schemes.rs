//! The scheme model: an ambient cubic surface type together with arrangement
//! data, plus the bookkeeping derived from it.
//!
//! On the two positive-χ ambients every oval bounds a disk and a scheme is a
//! nesting forest per component (`<...>@RP2`, optionally `| <...>@S2`). On
//! the connected negative-χ ambients a scheme is a half-pair code describing
//! the two sides B+ and B− of the curve.
//!
//! Derived data:
//! * [`regions_of`] — the complement regions of the curve, with depth and
//!   component tags (forest schemes only);
//! * [`colorings`] — the admissible sign decompositions into half-pairs,
//!   honoring the parity conventions χ(B+) ≡ b0, χ(B−) ≡ 1 + b0 (mod 2) and
//!   the nonorientability of B−;
//! * [`validate_pair`] — structural validation of a half-pair code against
//!   an ambient;
//! * [`family_shape`] — the (big, α, β, γ) parameterization of a pair.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::codes::{
    canonicalize_on_sphere, parse_forest, parse_pair, CodeError, MinusBig, OvalForest, OvalNode,
    PairCode,
};
use crate::surfaces::{CompactSurface, CubicAmbient, SurfaceKind};

// ---------------------------------------------------------------------------
// Scheme
// ---------------------------------------------------------------------------

/// Which component of the ambient a region lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentTag {
    Rp2,
    S2,
}

/// Arrangement data of a scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SchemeData {
    /// Oval forests on RP2 and (for the non-connected cubic) on S2.
    Forests { rp2: OvalForest, s2: Option<OvalForest> },
    /// Half-pair code on a connected negative-χ cubic.
    Pair(PairCode),
}

/// An ambient cubic type plus arrangement data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scheme {
    ambient: CubicAmbient,
    data: SchemeData,
}

/// Scheme-level errors (construction and text parsing).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error("scheme text does not fit ambient {ambient}: {message}")]
    AmbientMismatch { ambient: CubicAmbient, message: String },
}

impl Scheme {
    /// Scheme on the connected cubic RP2.
    pub fn on_projective_plane(forest: OvalForest) -> Scheme {
        Scheme {
            ambient: CubicAmbient::ProjectivePlane,
            data: SchemeData::Forests { rp2: forest, s2: None },
        }
    }

    /// Scheme on RP2 ⊔ S2; the sphere forest is canonicalized.
    pub fn on_plane_and_sphere(rp2: OvalForest, s2: OvalForest) -> Scheme {
        Scheme {
            ambient: CubicAmbient::ProjectivePlaneAndSphere,
            data: SchemeData::Forests { rp2, s2: Some(canonicalize_on_sphere(&s2)) },
        }
    }

    /// Scheme on a connected negative-χ cubic; the pair must validate.
    pub fn on_negative(ambient: CubicAmbient, pair: PairCode) -> Result<Scheme, PairError> {
        validate_pair(&pair, ambient)?;
        Ok(Scheme { ambient, data: SchemeData::Pair(pair) })
    }

    pub fn ambient(&self) -> CubicAmbient {
        self.ambient
    }

    pub fn data(&self) -> &SchemeData {
        &self.data
    }

    pub fn pair(&self) -> Option<&PairCode> {
        match &self.data {
            SchemeData::Pair(pair) => Some(pair),
            SchemeData::Forests { .. } => None,
        }
    }

    pub fn forests(&self) -> Option<(&OvalForest, Option<&OvalForest>)> {
        match &self.data {
            SchemeData::Forests { rp2, s2 } => Some((rp2, s2.as_ref())),
            SchemeData::Pair(_) => None,
        }
    }

    /// Number of connected components of the curve.
    pub fn b0(&self) -> u32 {
        match &self.data {
            SchemeData::Forests { rp2, s2 } => {
                rp2.oval_count() + s2.as_ref().map_or(0, OvalForest::oval_count)
            }
            SchemeData::Pair(pair) => pair.plus_boundaries(),
        }
    }

    /// χ(B+) and χ(B−) where determined (pair schemes only).
    pub fn chi_sides(&self) -> Option<(i64, i64)> {
        self.pair().map(|p| (p.chi_plus(), p.chi_minus()))
    }

    /// Canonical text form: `FOREST@RP2 [ | FOREST@S2 ]` or a pair code.
    pub fn code(&self) -> String {
        match &self.data {
            SchemeData::Forests { rp2, s2: None } => format!("{rp2}@RP2"),
            SchemeData::Forests { rp2, s2: Some(s2) } => format!("{rp2}@RP2 | {s2}@S2"),
            SchemeData::Pair(pair) => pair.to_string(),
        }
    }

    /// Parses the text form of a scheme for the given ambient. A bare forest
    /// is accepted for RP2; RP2 ⊔ S2 wants both tagged parts.
    pub fn parse(ambient: CubicAmbient, text: &str) -> Result<Scheme, SchemeError> {
        match ambient {
            CubicAmbient::ProjectivePlane => {
                let body = strip_tag(text.trim(), "@RP2").unwrap_or_else(|| text.trim());
                Ok(Scheme::on_projective_plane(parse_forest(body)?))
            }
            CubicAmbient::ProjectivePlaneAndSphere => {
                let mut rp2 = None;
                let mut s2 = None;
                for part in text.split('|') {
                    let part = part.trim();
                    if let Some(body) = strip_tag(part, "@RP2") {
                        rp2 = Some(parse_forest(body)?);
                    } else if let Some(body) = strip_tag(part, "@S2") {
                        s2 = Some(parse_forest(body)?);
                    } else {
                        return Err(SchemeError::AmbientMismatch {
                            ambient,
                            message: format!("part {part:?} lacks an @RP2 or @S2 tag"),
                        });
                    }
                }
                match (rp2, s2) {
                    (Some(rp2), Some(s2)) => Ok(Scheme::on_plane_and_sphere(rp2, s2)),
                    _ => Err(SchemeError::AmbientMismatch {
                        ambient,
                        message: "expected both an @RP2 and an @S2 part".to_string(),
                    }),
                }
            }
            _ => {
                let pair = parse_pair(text)?;
                Ok(Scheme::on_negative(ambient, pair)?)
            }
        }
    }
}

fn strip_tag<'a>(part: &'a str, tag: &str) -> Option<&'a str> {
    part.strip_suffix(tag).map(str::trim)
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

// ---------------------------------------------------------------------------
// Region decomposition
// ---------------------------------------------------------------------------

/// One complementary region of the curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub surface: CompactSurface,
    pub depth: u32,
    pub component: ComponentTag,
}

/// The complement regions of a forest scheme; adjacency is implied by depth
/// parity (regions at depths d and d+1 meet along ovals at depth d+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionDecomposition {
    pub regions: Vec<Region>,
}

impl RegionDecomposition {
    pub fn total_chi(&self) -> i64 {
        self.regions.iter().map(|r| r.surface.euler_characteristic()).sum()
    }

    pub fn boundary_incidences(&self) -> u32 {
        self.regions.iter().map(|r| r.surface.punctures()).sum()
    }
}

fn forest_regions(forest: &OvalForest, component: ComponentTag, out: &mut Vec<Region>) {
    let top = forest.nodes().len() as u32;
    let outer_kind = match component {
        ComponentTag::Rp2 => SurfaceKind::nonorientable(1),
        ComponentTag::S2 => SurfaceKind::sphere(),
    };
    out.push(Region { surface: CompactSurface::new(outer_kind, top), depth: 0, component });

    fn walk(nodes: &[OvalNode], depth: u32, component: ComponentTag, out: &mut Vec<Region>) {
        for node in nodes {
            let punctures = 1 + node.children().nodes().len() as u32;
            out.push(Region {
                surface: CompactSurface::new(SurfaceKind::sphere(), punctures),
                depth,
                component,
            });
            walk(node.children().nodes(), depth + 1, component, out);
        }
    }
    walk(forest.nodes(), 1, component, out);
}

/// Complement regions of a positive-χ scheme; `None` for pair schemes.
pub fn regions_of(scheme: &Scheme) -> Option<RegionDecomposition> {
    let (rp2, s2) = scheme.forests()?;
    let mut regions = Vec::new();
    forest_regions(rp2, ComponentTag::Rp2, &mut regions);
    if let Some(s2) = s2 {
        forest_regions(s2, ComponentTag::S2, &mut regions);
    }
    Some(RegionDecomposition { regions })
}

// ---------------------------------------------------------------------------
// Half-pairs and colorings
// ---------------------------------------------------------------------------

/// The two sides of the curve: B+ where the quadric polynomial is ≥ 0 and B−
/// where it is ≤ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfPair {
    pub plus: Vec<CompactSurface>,
    pub minus: Vec<CompactSurface>,
}

impl HalfPair {
    pub fn chi_plus(&self) -> i64 {
        self.plus.iter().map(|s| s.euler_characteristic()).sum()
    }

    pub fn chi_minus(&self) -> i64 {
        self.minus.iter().map(|s| s.euler_characteristic()).sum()
    }

    pub fn plus_boundaries(&self) -> u32 {
        self.plus.iter().map(|s| s.punctures()).sum()
    }

    pub fn minus_boundaries(&self) -> u32 {
        self.minus.iter().map(|s| s.punctures()).sum()
    }

    pub fn minus_is_nonorientable(&self) -> bool {
        self.minus.iter().any(|s| !s.is_orientable())
    }

    fn sorted(mut self) -> Self {
        self.plus.sort();
        self.minus.sort();
        self
    }
}

/// Per-component partition of regions used when enumerating sign choices.
enum ComponentSides {
    /// Component carries curve: the two alternating halves.
    Curve([Vec<CompactSurface>; 2]),
    /// Closed component without curve: goes to one side whole.
    Free(CompactSurface),
}

fn component_sides(scheme: &Scheme) -> Vec<ComponentSides> {
    let (rp2, s2) = scheme.forests().expect("forest scheme");
    let mut components = Vec::new();
    for (forest, tag) in
        std::iter::once((rp2, ComponentTag::Rp2)).chain(s2.map(|f| (f, ComponentTag::S2)))
    {
        if forest.is_empty() {
            let kind = match tag {
                ComponentTag::Rp2 => SurfaceKind::nonorientable(1),
                ComponentTag::S2 => SurfaceKind::sphere(),
            };
            components.push(ComponentSides::Free(CompactSurface::closed(kind)));
        } else {
            let mut regions = Vec::new();
            forest_regions(forest, tag, &mut regions);
            let mut halves: [Vec<CompactSurface>; 2] = [Vec::new(), Vec::new()];
            for region in regions {
                halves[(region.depth % 2) as usize].push(region.surface);
            }
            components.push(ComponentSides::Curve(halves));
        }
    }
    components
}

/// Every way of putting the regions on two sides so that the sides alternate
/// across each oval, as (plus, minus) candidate pairs, before any filtering.
fn raw_assignments(scheme: &Scheme) -> Vec<HalfPair> {
    let components = component_sides(scheme);
    let mut out = Vec::new();
    for mask in 0u32..(1 << components.len()) {
        let mut pair = HalfPair { plus: Vec::new(), minus: Vec::new() };
        for (index, component) in components.iter().enumerate() {
            let flip = mask & (1 << index) != 0;
            match component {
                ComponentSides::Curve(halves) => {
                    let (to_plus, to_minus) =
                        if flip { (&halves[1], &halves[0]) } else { (&halves[0], &halves[1]) };
                    pair.plus.extend(to_plus.iter().copied());
                    pair.minus.extend(to_minus.iter().copied());
                }
                ComponentSides::Free(surface) => {
                    if flip {
                        pair.minus.push(*surface);
                    } else {
                        pair.plus.push(*surface);
                    }
                }
            }
        }
        out.push(pair.sorted());
    }
    out
}

/// Number of unfiltered sign assignments (2 per ambient component).
pub fn raw_coloring_count(scheme: &Scheme) -> usize {
    match scheme.data() {
        SchemeData::Forests { .. } => raw_assignments(scheme).len(),
        SchemeData::Pair(_) => 1,
    }
}

/// Admissible half-pairs of a scheme. For forest schemes these are the sign
/// assignments satisfying χ(B+) ≡ b0, χ(B−) ≡ 1 + b0 (mod 2) with B−
/// nonorientable; for pair schemes the decomposition is already determined.
pub fn colorings(scheme: &Scheme) -> Vec<HalfPair> {
    match scheme.data() {
        SchemeData::Pair(pair) => vec![HalfPair {
            plus: pair.plus_components(),
            minus: pair.minus_components(),
        }
        .sorted()],
        SchemeData::Forests { .. } => {
            let b0 = i64::from(scheme.b0());
            raw_assignments(scheme)
                .into_iter()
                .filter(|pair| {
                    pair.chi_plus().rem_euclid(2) == b0.rem_euclid(2)
                        && pair.chi_minus().rem_euclid(2) == (b0 + 1).rem_euclid(2)
                        && pair.minus_is_nonorientable()
                })
                .collect()
        }
    }
}

/// χ values of every subsurface of the ambient with boundary exactly the
/// curve: each sign assignment contributes its plus side, and both sides are
/// reached because assignments come in complementary pairs.
pub fn bounding_surface_chis(scheme: &Scheme) -> BTreeSet<i64> {
    match scheme.data() {
        SchemeData::Pair(pair) => [pair.chi_plus(), pair.chi_minus()].into_iter().collect(),
        SchemeData::Forests { .. } => {
            raw_assignments(scheme).iter().map(HalfPair::chi_plus).collect()
        }
    }
}

// ---------------------------------------------------------------------------
// Pair validation
// ---------------------------------------------------------------------------

/// Why a half-pair code fails to be a scheme on a given ambient.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairError {
    #[error("ChiMismatch: χ(B+) + χ(B−) = {got}, the ambient requires {expected}")]
    ChiMismatch { got: i64, expected: i64 },
    #[error("BoundaryMismatch: B+ has {plus} boundary circles but B− has {minus}")]
    BoundaryMismatch { plus: u32, minus: u32 },
    #[error("ParityViolation: χ(B+) = {chi_plus} must be ≡ b0 = {b0} (mod 2)")]
    ParityViolation { chi_plus: i64, b0: u32 },
    #[error("OrientabilityViolation: B− has no nonorientable component")]
    OrientabilityViolation,
    #[error("ShapeViolation: {0}")]
    ShapeViolation(String),
}

/// Checks a half-pair code against an ambient and returns the half-pair.
///
/// Beyond χ additivity, boundary matching, the parity convention and the
/// nonorientability of B−, this verifies the gluing is realizable on a
/// connected ambient: closed components only occur for the empty curve, and
/// the non-disk components must share at least one boundary circle (γ ≥ 1).
pub fn validate_pair(pair: &PairCode, ambient: CubicAmbient) -> Result<HalfPair, PairError> {
    if ambient.has_positive_chi() {
        return Err(PairError::ShapeViolation(format!(
            "pair codes describe curves on the connected negative-χ cubics, not {ambient}"
        )));
    }

    let empty_curve = pair.plus_disks() == 0
        && pair.plus_big().is_none()
        && pair.minus_disks() == 0
        && matches!(pair.minus_big(), MinusBig::Single(s) if s.is_closed());

    if !empty_curve {
        if let Some(big) = pair.plus_big() {
            if big.is_closed() {
                return Err(PairError::ShapeViolation(
                    "a closed component of B+ would disconnect the ambient".to_string(),
                ));
            }
        }
        if let MinusBig::Single(big) = pair.minus_big() {
            if big.is_closed() {
                return Err(PairError::ShapeViolation(
                    "a closed component of B− is only possible for the empty curve".to_string(),
                ));
            }
        }
    }

    let (plus_b, minus_b) = (pair.plus_boundaries(), pair.minus_boundaries());
    if plus_b != minus_b {
        return Err(PairError::BoundaryMismatch { plus: plus_b, minus: minus_b });
    }
    let b0 = plus_b;

    let half_pair = HalfPair {
        plus: pair.plus_components(),
        minus: pair.minus_components(),
    };
    if !half_pair.minus_is_nonorientable() {
        return Err(PairError::OrientabilityViolation);
    }

    let (chi_plus, chi_minus) = (pair.chi_plus(), pair.chi_minus());
    if chi_plus + chi_minus != ambient.chi() {
        return Err(PairError::ChiMismatch { got: chi_plus + chi_minus, expected: ambient.chi() });
    }
    if chi_plus.rem_euclid(2) != i64::from(b0).rem_euclid(2) {
        return Err(PairError::ParityViolation { chi_plus, b0 });
    }

    check_connectivity(pair)?;
    Ok(half_pair.sorted())
}

fn check_connectivity(pair: &PairCode) -> Result<(), PairError> {
    match (pair.plus_big(), pair.minus_big()) {
        (_, MinusBig::ExceptionalPair) => {
            if pair.minus_disks() != 0 {
                return Err(PairError::ShapeViolation(
                    "the exceptional minus side is exactly S2_2 u RP2_1, with no disks".to_string(),
                ));
            }
            match pair.plus_big() {
                Some(big) if big.punctures() >= 2 => Ok(()),
                _ => Err(PairError::ShapeViolation(
                    "the exceptional minus side needs a non-disk B+ component meeting both its pieces"
                        .to_string(),
                )),
            }
        }
        (Some(plus), MinusBig::Single(minus)) if !minus.is_closed() => {
            // γ = boundary circles shared by the two non-disk components.
            let gamma = i64::from(plus.punctures()) - i64::from(pair.minus_disks());
            if gamma < 1 {
                return Err(PairError::ShapeViolation(
                    "the two non-disk components share no boundary circle (γ < 1)".to_string(),
                ));
            }
            Ok(())
        }
        (Some(_), MinusBig::None) => Err(PairError::ShapeViolation(
            "capping a non-disk B+ by disks alone disconnects the ambient".to_string(),
        )),
        (None, MinusBig::Single(minus)) if !minus.is_closed() => {
            if pair.minus_disks() != 0 {
                return Err(PairError::ShapeViolation(
                    "disk-to-disk gluings split off spheres; B− disks need non-disk B+".to_string(),
                ));
            }
            Ok(())
        }
        (None, MinusBig::Single(_)) => Ok(()), // empty curve, checked earlier
        (None, MinusBig::None) => Err(PairError::ShapeViolation(
            "disks alone cannot assemble a negative-χ ambient".to_string(),
        )),
        (Some(_), MinusBig::Single(_)) => Ok(()), // closed case rejected earlier
    }
}

// ---------------------------------------------------------------------------
// Family parameterization
// ---------------------------------------------------------------------------

/// The parameter shape of a pair scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyShape {
    /// ⟨α ⊔ Big_{β+γ}, β ⊔ kRP2_{α+γ}⟩.
    Generic { big: SurfaceKind, alpha: u32, beta: u32, gamma: u32, minus_crosscaps: u32 },
    /// ⟨1 ⊔ nT2_2, S2_2 u RP2_1⟩ (annulus core null-homologous) or
    /// ⟨(n−1)T2_3, S2_2 u RP2_1⟩ (essential core).
    Exceptional { annulus_core_null_homologous: bool },
    /// ⟨0, kRP2⟩.
    Empty,
}

/// Recovers the family parameters of a pair code, if it has family shape.
pub fn family_shape(pair: &PairCode) -> Option<FamilyShape> {
    match (pair.plus_big(), pair.minus_big()) {
        (_, MinusBig::ExceptionalPair) => {
            let big = pair.plus_big()?;
            match (pair.plus_disks(), big.punctures()) {
                (1, 2) => Some(FamilyShape::Exceptional { annulus_core_null_homologous: true }),
                (0, 3) => Some(FamilyShape::Exceptional { annulus_core_null_homologous: false }),
                _ => None,
            }
        }
        (None, MinusBig::Single(minus)) if minus.is_closed() => {
            (pair.plus_disks() == 0 && pair.minus_disks() == 0 && !minus.is_orientable())
                .then_some(FamilyShape::Empty)
        }
        (Some(big), MinusBig::Single(minus)) => {
            if minus.is_orientable() {
                return None;
            }
            let beta = pair.minus_disks();
            let gamma = big.punctures().checked_sub(beta).filter(|&g| g >= 1)?;
            let alpha = pair.plus_disks();
            (minus.punctures() == alpha + gamma).then_some(FamilyShape::Generic {
                big: big.kind(),
                alpha,
                beta,
                gamma,
                minus_crosscaps: minus.kind().genus(),
            })
        }
        (None, MinusBig::Single(minus)) => {
            // All B+ components are disks: the degenerate Big = S2, γ = 1 case
            // (a once-punctured sphere folded into the disk count).
            if minus.is_orientable() || pair.minus_disks() != 0 || pair.plus_disks() == 0 {
                return None;
            }
            (minus.punctures() == pair.plus_disks()).then_some(FamilyShape::Generic {
                big: SurfaceKind::sphere(),
                alpha: pair.plus_disks() - 1,
                beta: 0,
                gamma: 1,
                minus_crosscaps: minus.kind().genus(),
            })
        }
        _ => None,
    }
}

/// Crosscap count of the minus big component forced by χ additivity.
pub fn minus_crosscaps_for(ambient: CubicAmbient, big: SurfaceKind, gamma: u32) -> i64 {
    big.chi_closed() + 2 - 2 * i64::from(gamma) - ambient.chi()
}

/// Builds the family scheme ⟨α ⊔ Big_{β+γ}, β ⊔ kRP2_{α+γ}⟩ on `ambient`.
pub fn family_scheme(
    ambient: CubicAmbient,
    big: SurfaceKind,
    alpha: u32,
    beta: u32,
    gamma: u32,
) -> Scheme {
    let k = minus_crosscaps_for(ambient, big, gamma);
    assert!(k >= 1, "family instance with k = {k} < 1");
    let pair = PairCode::new(
        alpha,
        Some(CompactSurface::new(big, beta + gamma)),
        beta,
        MinusBig::Single(CompactSurface::new(
            SurfaceKind::nonorientable(k as u32),
            alpha + gamma,
        )),
    );
    Scheme::on_negative(ambient, pair).expect("family instances are valid schemes")
}

/// Builds one of the two exceptional schemes on a connected negative ambient.
pub fn exceptional_scheme(ambient: CubicAmbient, annulus_core_null_homologous: bool) -> Scheme {
    let n = ambient.handles().expect("exceptional schemes live on the negative-χ cubics");
    let pair = if annulus_core_null_homologous {
        PairCode::new(
            1,
            Some(CompactSurface::new(SurfaceKind::orientable(n), 2)),
            0,
            MinusBig::ExceptionalPair,
        )
    } else {
        PairCode::new(
            0,
            Some(CompactSurface::new(SurfaceKind::orientable(n - 1), 3)),
            0,
            MinusBig::ExceptionalPair,
        )
    };
    Scheme::on_negative(ambient, pair).expect("exceptional pairs are valid schemes")
}

/// Builds the empty-curve scheme ⟨0, kRP2⟩ on a connected negative ambient.
pub fn empty_scheme(ambient: CubicAmbient) -> Scheme {
    let k = ambient.crosscap_count().expect("empty pair schemes live on the negative-χ cubics");
    let pair = PairCode::new(
        0,
        None,
        0,
        MinusBig::Single(CompactSurface::closed(SurfaceKind::nonorientable(k))),
    );
    Scheme::on_negative(ambient, pair).expect("the empty scheme is a valid scheme")
}
