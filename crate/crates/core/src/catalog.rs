//! Embedded ground-truth catalog and construction provenance.
//!
//! The admitted type lists for the five ambients are stored as data
//! (parametric families plus explicit per-(α, β) γ-tables for the 7RP2
//! case), independently of the enumerator, so the rule engine can be tested
//! against them. Each entry carries a construction record: how a curve with
//! that arrangement is produced, and from which source (a Polotovskii
//! conic-quartic code, or a named plane sextic whose ovals get collapsed).
//!
//! [`closure_check`] verifies the oval-removal closure: removing a quartic
//! oval disjoint from the conic realizes every (α′ ≤ α, β′ ≤ β) instance of
//! a constructed (α, β) cell with the same γ, so the downward closure of the
//! tabulated maximal cells together with the special-method entries must
//! cover the whole admitted list. On 5RP2 and 3RP2 the source cells are the
//! 7RP2 cells with one (resp. two) handles removed from either side — the
//! same conic-quartic pair meeting in 6 (resp. 4) real points — plus two
//! quartic-with-two-lines perturbations on 5RP2.

use std::fmt;

use crate::enumerator::{available_bigs, classify};
use crate::restrictions::RuleSet;
use crate::schemes::{
    empty_scheme, exceptional_scheme, family_scheme, family_shape, minus_crosscaps_for,
    FamilyShape, Scheme, SchemeData,
};
use crate::codes::OvalForest;
use crate::surfaces::{CubicAmbient, SurfaceKind};

// ---------------------------------------------------------------------------
// Construction records
// ---------------------------------------------------------------------------

/// How an arrangement is realized by an algebraic curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Perturbing a union of two plane sections of the cubic.
    PlaneSectionsPerturbation,
    /// Plane sections of the revolution cubic x² + y² = z(z² − 1).
    SurfaceOfRevolution,
    /// Perturbing a plane together with an ellipsoid.
    PlaneEllipsoidPerturbation,
    /// Smoothing a union of a quartic and a conic; the source code names the
    /// arrangement in Polotovskii's catalog when they meet in real points.
    QuarticConicSmoothing,
    /// Collapsing empty ovals of a plane sextic to isolated double points.
    OvalCollapse,
    /// Collapsing ovals of the Gudkov sextic <5 u 1<5>>.
    GudkovCurveCollapse,
    /// Smoothing a two-component plane cubic against a parallel copy.
    CubicParallelCopy,
    /// Perturbing a union of a quartic and two lines.
    QuarticTwoLines,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::PlaneSectionsPerturbation => "PlaneSectionsPerturbation",
            Method::SurfaceOfRevolution => "SurfaceOfRevolution",
            Method::PlaneEllipsoidPerturbation => "PlaneEllipsoidPerturbation",
            Method::QuarticConicSmoothing => "QuarticConicSmoothing",
            Method::OvalCollapse => "OvalCollapse",
            Method::GudkovCurveCollapse => "GudkovCurveCollapse",
            Method::CubicParallelCopy => "CubicParallelCopy",
            Method::QuarticTwoLines => "QuarticTwoLines",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Construction provenance of one catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionRecord {
    pub method: Method,
    pub source: Option<String>,
}

impl ConstructionRecord {
    fn new(method: Method, source: Option<&str>) -> Self {
        ConstructionRecord { method, source: source.map(str::to_string) }
    }
}

/// A ground-truth admitted type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub scheme: Scheme,
    pub family: String,
    pub construction: ConstructionRecord,
}

/// Checks the conic-quartic code grammar `( digits ) ... [ digit ]`. The
/// bracketed smoothing index is optional: one tabulated code carries none.
pub fn is_polotovskii_code(code: &str) -> bool {
    let bytes = code.as_bytes();
    let mut pos = 0;
    let mut groups = 0;
    while pos < bytes.len() && bytes[pos] == b'(' {
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == start || pos >= bytes.len() || bytes[pos] != b')' {
            return false;
        }
        pos += 1;
        groups += 1;
    }
    if groups == 0 {
        return false;
    }
    pos == bytes.len()
        || (pos + 3 == bytes.len()
            && bytes[pos] == b'['
            && bytes[pos + 1].is_ascii_digit()
            && bytes[pos + 2] == b']')
}

// ---------------------------------------------------------------------------
// Transcribed admitted lists
// ---------------------------------------------------------------------------

const S2: SurfaceKind = SurfaceKind::sphere();
const T2: SurfaceKind = SurfaceKind::orientable(1);
const TWO_T2: SurfaceKind = SurfaceKind::orientable(2);
const THREE_T2: SurfaceKind = SurfaceKind::orientable(3);
const TWO_RP2: SurfaceKind = SurfaceKind::nonorientable(2);
const FOUR_RP2: SurfaceKind = SurfaceKind::nonorientable(4);
const SIX_RP2: SurfaceKind = SurfaceKind::nonorientable(6);

/// Admitted γ values per (α, β) cell of one 7RP2 family.
type GammaRow = (u32, u32, &'static [u32]);

const SEVEN_F1_SPHERE: &[GammaRow] = &[
    (0, 0, &[1, 2, 3, 4]),
    (0, 1, &[1, 2, 3, 4]),
    (0, 2, &[1, 2, 3]),
    (0, 3, &[2]),
    (1, 0, &[1, 2, 3, 4]),
    (1, 1, &[1, 2, 3]),
    (1, 2, &[2]),
    (2, 0, &[1, 2, 3]),
    (2, 1, &[1, 2]),
    (3, 0, &[1, 2]),
    (3, 1, &[1]),
];

const SEVEN_F2_TORUS: &[GammaRow] = &[
    (0, 0, &[1, 2, 3]),
    (0, 1, &[1, 2, 3]),
    (0, 2, &[1, 2, 3]),
    (0, 3, &[1, 2]),
    (0, 4, &[1]),
    (1, 0, &[1, 2, 3]),
    (1, 1, &[1, 2, 3]),
    (1, 2, &[1, 2]),
    (2, 0, &[1, 2, 3]),
    (2, 1, &[1, 2]),
    (2, 2, &[1]),
    (3, 0, &[1, 2]),
    (4, 0, &[1]),
];

const SEVEN_F3_TWO_TORI: &[GammaRow] = &[
    (0, 0, &[1, 2]),
    (0, 1, &[1, 2]),
    (0, 2, &[1, 2]),
    (0, 3, &[1, 2]),
    (1, 0, &[1, 2]),
    (1, 1, &[1, 2]),
    (1, 2, &[1, 2]),
    (1, 3, &[1]),
    (2, 0, &[1, 2]),
    (2, 1, &[1, 2]),
    (3, 0, &[1, 2]),
    (3, 1, &[1]),
];

const SEVEN_F4_THREE_TORI: &[GammaRow] = &[
    (0, 0, &[1]),
    (0, 1, &[1]),
    (0, 2, &[1]),
    (0, 3, &[1]),
    (0, 4, &[1]),
    (1, 0, &[1]),
    (2, 0, &[1]),
    (3, 0, &[1]),
];

const SEVEN_F5_TWO_CROSSCAPS: &[GammaRow] = &[
    (0, 0, &[1, 2, 3]),
    (0, 1, &[1, 2, 3]),
    (0, 2, &[1, 2, 3]),
    (0, 3, &[1, 2]),
    (0, 4, &[1]),
    (1, 0, &[1, 2, 3]),
    (1, 1, &[1, 2, 3]),
    (1, 2, &[1, 2]),
    (1, 3, &[1]),
    (2, 0, &[1, 2, 3]),
    (2, 1, &[1, 2]),
    (3, 0, &[1, 2]),
    (3, 1, &[1]),
    (4, 0, &[1]),
];

const SEVEN_F6_FOUR_CROSSCAPS: &[GammaRow] = &[
    (0, 0, &[1, 2]),
    (0, 1, &[1, 2]),
    (0, 2, &[1, 2]),
    (0, 3, &[1, 2]),
    (0, 4, &[1]),
    (1, 0, &[1, 2]),
    (1, 1, &[1, 2]),
    (1, 2, &[1, 2]),
    (1, 3, &[1]),
    (2, 0, &[1, 2]),
    (2, 1, &[1, 2]),
    (2, 2, &[1]),
    (3, 0, &[1, 2]),
    (3, 1, &[1]),
    (4, 0, &[1]),
];

const SEVEN_F7_SIX_CROSSCAPS: &[GammaRow] = &[
    (0, 0, &[1]),
    (0, 1, &[1]),
    (0, 2, &[1]),
    (0, 3, &[1]),
    (0, 4, &[1]),
    (1, 0, &[1]),
    (1, 1, &[1]),
    (1, 2, &[1]),
    (1, 3, &[1]),
    (2, 0, &[1]),
    (3, 0, &[1]),
    (4, 0, &[1]),
];

fn seven_crosscap_tables() -> [(SurfaceKind, &'static [GammaRow]); 7] {
    [
        (S2, SEVEN_F1_SPHERE),
        (T2, SEVEN_F2_TORUS),
        (TWO_T2, SEVEN_F3_TWO_TORI),
        (THREE_T2, SEVEN_F4_THREE_TORI),
        (TWO_RP2, SEVEN_F5_TWO_CROSSCAPS),
        (FOUR_RP2, SEVEN_F6_FOUR_CROSSCAPS),
        (SIX_RP2, SEVEN_F7_SIX_CROSSCAPS),
    ]
}

// ---------------------------------------------------------------------------
// Construction cells
// ---------------------------------------------------------------------------

/// A tabulated construction: the maximal (α, β) realized for a family and γ.
#[derive(Debug, Clone, Copy)]
struct Cell {
    big: SurfaceKind,
    alpha: u32,
    beta: u32,
    gamma: u32,
    method: Method,
    source: Option<&'static str>,
}

const fn code_cell(
    big: SurfaceKind,
    alpha: u32,
    beta: u32,
    gamma: u32,
    code: &'static str,
) -> Cell {
    Cell { big, alpha, beta, gamma, method: Method::QuarticConicSmoothing, source: Some(code) }
}

const GUDKOV_SEXTIC: &str = "<5 u 1<5>>";

/// The tabulated constructions on 7RP2, in table reading order.
const SEVEN_CELLS: &[Cell] = &[
    // Family 1: big = S2.
    code_cell(S2, 0, 1, 4, "(12)(34)(56)(78)"),
    code_cell(S2, 0, 2, 3, "(1867)(3452)[2]"),
    Cell {
        big: S2,
        alpha: 0,
        beta: 2,
        gamma: 1,
        method: Method::OvalCollapse,
        source: Some("<6 u 1<2>>"),
    },
    code_cell(S2, 0, 3, 2, "(18276543)[3]"),
    code_cell(S2, 1, 0, 4, "(12)(34)(56)(78)"),
    code_cell(S2, 1, 1, 3, "(1678)(2345)[1]"),
    code_cell(S2, 1, 2, 2, "(18723456)[2]"),
    code_cell(S2, 2, 0, 3, "(145678)(23)[0]"),
    code_cell(S2, 2, 1, 2, "(12345678)[1]"),
    code_cell(S2, 3, 0, 2, "(12387456)[0]"),
    code_cell(S2, 3, 1, 1, "(12345678)[1]"),
    // Family 2: big = T2.
    code_cell(T2, 0, 2, 3, "(1876)(2345)[2]"),
    code_cell(T2, 0, 3, 2, "(18743256)[3]"),
    code_cell(T2, 0, 4, 1, "(18276543)[3]"),
    code_cell(T2, 1, 1, 3, "(187654)(23)[1]"),
    code_cell(T2, 1, 2, 2, "(18723456)[2]"),
    code_cell(T2, 2, 0, 3, "(1867)(3452)[2]"),
    code_cell(T2, 2, 1, 2, "(18765234)[1]"),
    code_cell(T2, 2, 2, 1, "(18723456)[2]"),
    code_cell(T2, 3, 0, 2, "(12387456)[0]"),
    code_cell(T2, 4, 0, 1, "(12387456)[0]"),
    // Family 3: big = 2T2.
    code_cell(TWO_T2, 0, 3, 2, "(18743256)[3]"),
    code_cell(TWO_T2, 1, 2, 2, "(18765432)[2]"),
    code_cell(TWO_T2, 1, 3, 1, "(18234765)[2]"),
    code_cell(TWO_T2, 2, 1, 2, "(18765234)[1]"),
    code_cell(TWO_T2, 3, 0, 2, "(18276543)[3]"),
    code_cell(TWO_T2, 3, 1, 1, "(18765234)[1]"),
    // Family 4: big = 3T2.
    code_cell(THREE_T2, 3, 0, 1, "(18276543)[3]"),
    code_cell(THREE_T2, 0, 4, 1, "(18234567)[3]"),
    // Family 5: big = 2RP2.
    code_cell(TWO_RP2, 0, 2, 3, "(1867)(3452)[2]"),
    code_cell(TWO_RP2, 0, 3, 2, "(18276543)[3]"),
    Cell {
        big: TWO_RP2,
        alpha: 0,
        beta: 4,
        gamma: 1,
        method: Method::GudkovCurveCollapse,
        source: Some(GUDKOV_SEXTIC),
    },
    code_cell(TWO_RP2, 1, 1, 3, "(1845)(23)(67)[0]"),
    code_cell(TWO_RP2, 1, 2, 2, "(18723456)[2]"),
    code_cell(TWO_RP2, 1, 3, 1, "(18723456)[2]"),
    code_cell(TWO_RP2, 2, 0, 3, "(1845)(3672)[0]"),
    code_cell(TWO_RP2, 2, 1, 2, "(18432765)[1]"),
    code_cell(TWO_RP2, 3, 0, 2, "(12387456)[0]"),
    code_cell(TWO_RP2, 3, 1, 1, "(12387456)[0]"),
    code_cell(TWO_RP2, 4, 0, 1, "(16254378)[0]"),
    // Family 6: big = 4RP2.
    code_cell(FOUR_RP2, 0, 3, 2, "(18437625)[3]"),
    code_cell(FOUR_RP2, 0, 4, 1, "(18437625)[3]"),
    code_cell(FOUR_RP2, 1, 2, 2, "(18432765)[1]"),
    code_cell(FOUR_RP2, 1, 3, 1, "(18437625)[3]"),
    code_cell(FOUR_RP2, 2, 1, 2, "(18765234)[1]"),
    code_cell(FOUR_RP2, 2, 2, 1, "(18765234)[1]"),
    code_cell(FOUR_RP2, 3, 0, 2, "(18276345)[0]"),
    code_cell(FOUR_RP2, 3, 1, 1, "(18276345)[0]"),
    code_cell(FOUR_RP2, 4, 0, 1, "(18276345)[0]"),
    // Family 7: big = 6RP2.
    Cell {
        big: SIX_RP2,
        alpha: 4,
        beta: 0,
        gamma: 1,
        method: Method::GudkovCurveCollapse,
        source: Some(GUDKOV_SEXTIC),
    },
    code_cell(SIX_RP2, 1, 3, 1, "(18765432)[2]"),
    code_cell(SIX_RP2, 0, 4, 1, "(18234567)[3]"),
];

/// Removes `steps` handles from a big part, if possible: jT2 loses handles,
/// 2jRP2 loses crosscap pairs (2jRP2 = (2j−2)RP2 # T2).
fn remove_handles(big: SurfaceKind, steps: u32) -> Option<SurfaceKind> {
    if big.is_orientable() {
        big.genus().checked_sub(steps).map(SurfaceKind::orientable)
    } else {
        let crosscaps = big.genus().checked_sub(2 * steps)?;
        (crosscaps >= 2).then(|| SurfaceKind::nonorientable(crosscaps))
    }
}

/// Source cells for a smaller ambient: the conic-quartic constructions on
/// 7RP2 re-run with fewer real intersection points, which removes `removals`
/// handles distributed over the two sides.
fn derived_cells(target: CubicAmbient, removals: u32) -> Vec<Cell> {
    let mut cells = Vec::new();
    for cell in SEVEN_CELLS {
        if cell.method != Method::QuarticConicSmoothing {
            continue;
        }
        // Handles removed from the plus big; the rest lower k on the minus side.
        for from_plus in 0..=removals {
            let Some(big) = remove_handles(cell.big, from_plus) else { continue };
            if minus_crosscaps_for(target, big, cell.gamma) < 1 {
                continue;
            }
            let duplicate = cells.iter().any(|c: &Cell| {
                c.big == big && c.alpha == cell.alpha && c.beta == cell.beta && c.gamma == cell.gamma
            });
            if !duplicate {
                cells.push(Cell { big, ..*cell });
            }
        }
    }
    cells
}

/// The two 5RP2 arrangements not reachable from the conic-quartic pairs.
const FIVE_TWO_LINE_CELLS: &[Cell] = &[
    Cell { big: S2, alpha: 1, beta: 3, gamma: 1, method: Method::QuarticTwoLines, source: None },
    Cell {
        big: TWO_T2,
        alpha: 2,
        beta: 2,
        gamma: 1,
        method: Method::QuarticTwoLines,
        source: None,
    },
];

fn construction_cells(ambient: CubicAmbient) -> Vec<Cell> {
    match ambient {
        CubicAmbient::SevenCrosscaps => SEVEN_CELLS.to_vec(),
        CubicAmbient::FiveCrosscaps => {
            let mut cells = derived_cells(ambient, 1);
            cells.extend_from_slice(FIVE_TWO_LINE_CELLS);
            cells
        }
        CubicAmbient::ThreeCrosscaps => derived_cells(ambient, 2),
        _ => Vec::new(),
    }
}

fn covering_cell(
    cells: &[Cell],
    big: SurfaceKind,
    alpha: u32,
    beta: u32,
    gamma: u32,
) -> Option<&Cell> {
    let covers = |cell: &&Cell| {
        cell.big == big && cell.gamma == gamma && alpha <= cell.alpha && beta <= cell.beta
    };
    // Oval removal applies directly to the conic-quartic cells; the collapse
    // cells also admit smaller instances by collapsing other oval subsets.
    cells
        .iter()
        .filter(|c| c.method == Method::QuarticConicSmoothing)
        .find(covers)
        .or_else(|| cells.iter().find(covers))
}

// ---------------------------------------------------------------------------
// Ground truth
// ---------------------------------------------------------------------------

fn entry(scheme: Scheme, family: impl Into<String>, record: ConstructionRecord) -> CatalogEntry {
    CatalogEntry { scheme, family: family.into(), construction: record }
}

fn plane_and_sphere_entries() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    // a: <α u 1<1>> beside an empty sphere, α ≤ 3.
    for alpha in 0..=3 {
        let method = if alpha == 0 {
            Method::SurfaceOfRevolution
        } else {
            Method::PlaneSectionsPerturbation
        };
        entries.push(entry(
            Scheme::on_plane_and_sphere(OvalForest::flat_with_nest(alpha, 1), OvalForest::empty()),
            "a",
            ConstructionRecord::new(method, None),
        ));
    }
    // b: <1<α>> beside an empty sphere, 2 ≤ α ≤ 4.
    for alpha in 2..=4 {
        entries.push(entry(
            Scheme::on_plane_and_sphere(
                OvalForest::flat_with_nest(0, alpha),
                OvalForest::empty(),
            ),
            "b",
            ConstructionRecord::new(Method::PlaneEllipsoidPerturbation, None),
        ));
    }
    // c: <α> and <β> with α + β ≤ 5.
    for alpha in 0..=5 {
        for beta in 0..=(5 - alpha) {
            entries.push(entry(
                Scheme::on_plane_and_sphere(OvalForest::flat(alpha), OvalForest::flat(beta)),
                "c",
                ConstructionRecord::new(Method::PlaneEllipsoidPerturbation, None),
            ));
        }
    }
    // d, e, f: cut on the revolution cubic x² + y² = z(z² − 1).
    entries.push(entry(
        Scheme::on_plane_and_sphere(OvalForest::chain(3), OvalForest::empty()),
        "d",
        ConstructionRecord::new(Method::SurfaceOfRevolution, None),
    ));
    entries.push(entry(
        Scheme::on_plane_and_sphere(OvalForest::flat_with_nest(0, 1), OvalForest::flat(1)),
        "e",
        ConstructionRecord::new(Method::SurfaceOfRevolution, None),
    ));
    entries.push(entry(
        Scheme::on_plane_and_sphere(OvalForest::empty(), OvalForest::flat_with_nest(1, 1)),
        "f",
        ConstructionRecord::new(Method::SurfaceOfRevolution, None),
    ));
    entries
}

fn projective_plane_entries() -> Vec<CatalogEntry> {
    let mut entries = Vec::new();
    // a: <α u 1<β>> with α + β ≤ 4 (β = 0 degenerates to α + 1 empty ovals).
    for alpha in 0..=4 {
        for beta in 0..=(4 - alpha) {
            entries.push(entry(
                Scheme::on_projective_plane(OvalForest::flat_with_nest(alpha, beta)),
                "a",
                ConstructionRecord::new(Method::QuarticConicSmoothing, None),
            ));
        }
    }
    entries.push(entry(
        Scheme::on_projective_plane(OvalForest::chain(3)),
        "b",
        ConstructionRecord::new(Method::QuarticConicSmoothing, None),
    ));
    entries.push(entry(
        Scheme::on_projective_plane(OvalForest::empty()),
        "c",
        ConstructionRecord::new(Method::QuarticConicSmoothing, None),
    ));
    entries
}

fn negative_entry(
    ambient: CubicAmbient,
    cells: &[Cell],
    big: SurfaceKind,
    family: usize,
    alpha: u32,
    beta: u32,
    gamma: u32,
) -> CatalogEntry {
    let scheme = family_scheme(ambient, big, alpha, beta, gamma);
    let cell = covering_cell(cells, big, alpha, beta, gamma).unwrap_or_else(|| {
        panic!("no construction covers {} on {ambient}", scheme.code())
    });
    entry(
        scheme,
        family.to_string(),
        ConstructionRecord::new(cell.method, cell.source),
    )
}

fn special_entries(ambient: CubicAmbient, entries: &mut Vec<CatalogEntry>) {
    entries.push(entry(
        exceptional_scheme(ambient, true),
        "exceptional",
        ConstructionRecord::new(Method::CubicParallelCopy, None),
    ));
    entries.push(entry(
        exceptional_scheme(ambient, false),
        "exceptional",
        ConstructionRecord::new(Method::CubicParallelCopy, None),
    ));
    entries.push(entry(
        empty_scheme(ambient),
        "empty",
        ConstructionRecord::new(Method::OvalCollapse, None),
    ));
}

fn seven_crosscap_entries() -> Vec<CatalogEntry> {
    let ambient = CubicAmbient::SevenCrosscaps;
    let cells = construction_cells(ambient);
    let mut entries = Vec::new();
    for (family_index, (big, rows)) in seven_crosscap_tables().into_iter().enumerate() {
        for &(alpha, beta, gammas) in rows {
            for &gamma in gammas {
                entries.push(negative_entry(
                    ambient,
                    &cells,
                    big,
                    family_index + 1,
                    alpha,
                    beta,
                    gamma,
                ));
            }
        }
    }
    special_entries(ambient, &mut entries);
    entries
}

fn parametric_negative_entries(ambient: CubicAmbient) -> Vec<CatalogEntry> {
    let cells = construction_cells(ambient);
    let mut entries = Vec::new();
    for (index, big) in available_bigs(ambient).into_iter().enumerate() {
        for alpha in 0..=4u32 {
            for beta in 0..=4u32 {
                for gamma in 1..=5u32 {
                    if alpha + beta + gamma > 5 {
                        continue;
                    }
                    if minus_crosscaps_for(ambient, big, gamma) < 1 {
                        continue;
                    }
                    // The lone parameter exception: <4 u 2T2_1, RP2_5> does
                    // not occur on 5RP2.
                    if ambient == CubicAmbient::FiveCrosscaps
                        && big == TWO_T2
                        && (alpha, beta) == (4, 0)
                    {
                        continue;
                    }
                    entries.push(negative_entry(
                        ambient,
                        &cells,
                        big,
                        index + 1,
                        alpha,
                        beta,
                        gamma,
                    ));
                }
            }
        }
    }
    special_entries(ambient, &mut entries);
    entries
}

/// The transcribed admitted list for an ambient.
pub fn ground_truth(ambient: CubicAmbient) -> Vec<CatalogEntry> {
    match ambient {
        CubicAmbient::ProjectivePlaneAndSphere => plane_and_sphere_entries(),
        CubicAmbient::ProjectivePlane => projective_plane_entries(),
        CubicAmbient::SevenCrosscaps => seven_crosscap_entries(),
        CubicAmbient::FiveCrosscaps | CubicAmbient::ThreeCrosscaps => {
            parametric_negative_entries(ambient)
        }
    }
}

/// Ground-truth entries for all five ambients.
pub fn full_catalog() -> Vec<CatalogEntry> {
    CubicAmbient::ALL.into_iter().flat_map(ground_truth).collect()
}

/// Structural family label of a forest scheme (catalog item letter).
pub fn positive_family_label(scheme: &Scheme) -> String {
    let SchemeData::Forests { rp2, s2 } = scheme.data() else {
        return "other".to_string();
    };
    let is_flat = |f: &OvalForest| f.nodes().iter().all(|n| n.children().is_empty());
    let flat_with_single_nest = |f: &OvalForest| -> Option<(u32, u32)> {
        let nests: Vec<_> = f.nodes().iter().filter(|n| !n.children().is_empty()).collect();
        match nests.len() {
            0 => Some((f.oval_count().saturating_sub(1), 0)),
            1 if is_flat(nests[0].children()) => {
                Some((f.oval_count() - 1 - nests[0].children().oval_count(),
                      nests[0].children().oval_count()))
            }
            _ => None,
        }
    };
    match s2 {
        None => {
            if rp2.is_empty() {
                "c".to_string()
            } else if *rp2 == OvalForest::chain(3) {
                "b".to_string()
            } else if flat_with_single_nest(rp2).is_some() {
                "a".to_string()
            } else {
                "other".to_string()
            }
        }
        Some(s2) => {
            if is_flat(rp2) && is_flat(s2) {
                "c".to_string()
            } else if s2.is_empty() && *rp2 == OvalForest::chain(3) {
                "d".to_string()
            } else if s2.is_empty() && *rp2 == OvalForest::flat_with_nest(0, 1) {
                "a".to_string()
            } else if s2.is_empty() {
                match flat_with_single_nest(rp2) {
                    Some((_, 1)) => "a".to_string(),
                    Some((0, beta)) if beta >= 2 => "b".to_string(),
                    _ => "other".to_string(),
                }
            } else if *s2 == OvalForest::flat(1) && *rp2 == OvalForest::flat_with_nest(0, 1) {
                "e".to_string()
            } else if rp2.is_empty() && *s2 == OvalForest::flat_with_nest(1, 1) {
                "f".to_string()
            } else {
                "other".to_string()
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Closure check and verification
// ---------------------------------------------------------------------------

/// Coverage report of the oval-removal closure.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub ambient: CubicAmbient,
    pub checked: usize,
    pub uncovered: Vec<String>,
}

impl ClosureReport {
    pub fn pass(&self) -> bool {
        self.uncovered.is_empty()
    }
}

impl fmt::Display for ClosureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            write!(f, "{}: construction closure covers all {} admitted types", self.ambient, self.checked)
        } else {
            write!(
                f,
                "{}: {} of {} admitted types lack a construction: {}",
                self.ambient,
                self.uncovered.len(),
                self.checked,
                self.uncovered.join(", ")
            )
        }
    }
}

/// Verifies that the downward closure of the construction cells, together
/// with the special-method entries, covers the admitted list. Only the
/// negative-χ ambients carry construction tables.
pub fn closure_check(ambient: CubicAmbient) -> Option<ClosureReport> {
    if ambient.has_positive_chi() {
        return None;
    }
    let cells = construction_cells(ambient);
    let entries = ground_truth(ambient);
    let mut uncovered = Vec::new();
    for catalog_entry in &entries {
        let covered = match catalog_entry.scheme.pair().and_then(family_shape) {
            Some(FamilyShape::Generic { big, alpha, beta, gamma, .. }) => {
                covering_cell(&cells, big, alpha, beta, gamma).is_some()
            }
            // The exceptional pairs come from the cubic-with-parallel-copy
            // smoothing and the empty curve from collapsing every oval.
            Some(FamilyShape::Exceptional { .. }) | Some(FamilyShape::Empty) => true,
            None => false,
        };
        if !covered {
            uncovered.push(catalog_entry.scheme.code());
        }
    }
    Some(ClosureReport { ambient, checked: entries.len(), uncovered })
}

/// Set comparison of the enumerator's admitted list against the catalog.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub ambient: CubicAmbient,
    pub expected: usize,
    pub actual: usize,
    /// Ground-truth types the classifier wrongly excluded.
    pub missing: Vec<String>,
    /// Classifier-admitted types absent from the ground truth.
    pub extra: Vec<String>,
}

impl VerifyReport {
    pub fn pass(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass() {
            write!(f, "{}: {}/{} admitted types match", self.ambient, self.actual, self.expected)
        } else {
            write!(
                f,
                "{}: mismatch ({} admitted vs {} expected); over-excluded: [{}]; unexpected: [{}]",
                self.ambient,
                self.actual,
                self.expected,
                self.missing.join(", "),
                self.extra.join(", ")
            )
        }
    }
}

/// Compares `classify(ambient)` against the ground truth as sets.
pub fn verify(ambient: CubicAmbient, rules: &RuleSet) -> VerifyReport {
    let expected: Vec<String> =
        ground_truth(ambient).iter().map(|e| e.scheme.code()).collect();
    let actual: Vec<String> =
        classify(ambient, rules).admitted.iter().map(Scheme::code).collect();
    let missing: Vec<String> =
        expected.iter().filter(|code| !actual.contains(code)).cloned().collect();
    let extra: Vec<String> =
        actual.iter().filter(|code| !expected.contains(code)).cloned().collect();
    VerifyReport { ambient, expected: expected.len(), actual: actual.len(), missing, extra }
}
