//! Every cataloged half-pair code validates, and every single-field
//! mutation of one is rejected.

use sextic_schemes::catalog::ground_truth;
use sextic_schemes::codes::{MinusBig, PairCode};
use sextic_schemes::schemes::validate_pair;
use sextic_schemes::surfaces::{CompactSurface, CubicAmbient, SurfaceKind};

const NEGATIVE_AMBIENTS: [CubicAmbient; 3] = [
    CubicAmbient::SevenCrosscaps,
    CubicAmbient::FiveCrosscaps,
    CubicAmbient::ThreeCrosscaps,
];

/// ±1 tweaks of one numeric field of a surface.
fn surface_mutations(surface: CompactSurface) -> Vec<CompactSurface> {
    let mut out = Vec::new();
    let (kind, punctures) = (surface.kind(), surface.punctures());
    out.push(CompactSurface::new(kind, punctures + 1));
    if punctures > 0 {
        out.push(CompactSurface::new(kind, punctures - 1));
    }
    let genus = kind.genus();
    if kind.is_orientable() {
        out.push(CompactSurface::new(SurfaceKind::orientable(genus + 1), punctures));
        if genus > 0 {
            out.push(CompactSurface::new(SurfaceKind::orientable(genus - 1), punctures));
        }
    } else {
        out.push(CompactSurface::new(SurfaceKind::nonorientable(genus + 1), punctures));
        if genus > 1 {
            out.push(CompactSurface::new(SurfaceKind::nonorientable(genus - 1), punctures));
        }
    }
    out
}

fn mutations(pair: &PairCode) -> Vec<PairCode> {
    let mut out = Vec::new();
    out.push(PairCode::new(
        pair.plus_disks() + 1,
        pair.plus_big(),
        pair.minus_disks(),
        pair.minus_big(),
    ));
    if pair.plus_disks() > 0 {
        out.push(PairCode::new(
            pair.plus_disks() - 1,
            pair.plus_big(),
            pair.minus_disks(),
            pair.minus_big(),
        ));
    }
    out.push(PairCode::new(
        pair.plus_disks(),
        pair.plus_big(),
        pair.minus_disks() + 1,
        pair.minus_big(),
    ));
    if pair.minus_disks() > 0 {
        out.push(PairCode::new(
            pair.plus_disks(),
            pair.plus_big(),
            pair.minus_disks() - 1,
            pair.minus_big(),
        ));
    }
    if let Some(big) = pair.plus_big() {
        for mutated in surface_mutations(big) {
            out.push(PairCode::new(
                pair.plus_disks(),
                Some(mutated),
                pair.minus_disks(),
                pair.minus_big(),
            ));
        }
    }
    if let MinusBig::Single(big) = pair.minus_big() {
        for mutated in surface_mutations(big) {
            out.push(PairCode::new(
                pair.plus_disks(),
                pair.plus_big(),
                pair.minus_disks(),
                MinusBig::Single(mutated),
            ));
        }
    }
    out
}

#[test]
fn cataloged_pairs_validate_and_single_field_mutations_fail() {
    let mut pairs_checked = 0;
    let mut mutations_checked = 0;
    for ambient in NEGATIVE_AMBIENTS {
        for entry in ground_truth(ambient) {
            let pair = entry.scheme.pair().expect("negative entries are pairs");
            validate_pair(pair, ambient).unwrap_or_else(|e| {
                panic!("cataloged pair {} rejected: {e}", entry.scheme.code())
            });
            pairs_checked += 1;
            for mutated in mutations(pair) {
                assert!(
                    validate_pair(&mutated, ambient).is_err(),
                    "mutation {mutated} of {} wrongly accepted on {ambient}",
                    entry.scheme.code()
                );
                mutations_checked += 1;
            }
        }
    }
    assert_eq!(pairs_checked, 157 + 113 + 58);
    assert!(mutations_checked > 2000, "only {mutations_checked} mutations exercised");
}
