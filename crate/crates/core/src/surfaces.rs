//! Surface types and Euler characteristic arithmetic.
//!
//! [`SurfaceKind`] is the homeomorphism type of a closed connected surface in
//! canonical form: pure handles when orientable, pure crosscaps when not.
//! [`CompactSurface`] is a closed surface with some number of open disks
//! removed (its punctures). [`CubicAmbient`] enumerates the five
//! diffeomorphism types of nonsingular real cubic surfaces.
//!
//! Tokens are ASCII: `S2`, `T2`, `3T2`, `RP2`, `7RP2`, with punctures appended
//! as `_k`. So `S2_2` is an annulus, `RP2_1` a Möbius band, `3T2_2` a genus-3
//! orientable surface with two boundary circles.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Error from the surface token parser, with the byte offset of the problem.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid surface token at byte {offset}: {message}")]
pub struct TokenError {
    pub offset: usize,
    pub message: String,
}

impl TokenError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        TokenError { offset, message: message.into() }
    }
}

// ---------------------------------------------------------------------------
// Closed surface kinds
// ---------------------------------------------------------------------------

/// Homeomorphism type of a closed connected surface.
///
/// `genus` counts handles when orientable and crosscaps when nonorientable,
/// so the nonorientable `genus` of `kRP2` is `k` and χ = 2 − k. Mixed
/// handle/crosscap presentations are normalized at construction via
/// [`SurfaceKind::normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceKind {
    orientable: bool,
    genus: u32,
}

impl SurfaceKind {
    pub const fn sphere() -> Self {
        SurfaceKind { orientable: true, genus: 0 }
    }

    pub const fn orientable(genus: u32) -> Self {
        SurfaceKind { orientable: true, genus }
    }

    /// Nonorientable surface with `crosscaps` ≥ 1 crosscaps.
    pub const fn nonorientable(crosscaps: u32) -> Self {
        assert!(crosscaps >= 1, "a nonorientable surface has at least one crosscap");
        SurfaceKind { orientable: false, genus: crosscaps }
    }

    /// Canonical form of a connected sum of `handles` tori and `crosscaps`
    /// projective planes. One crosscap absorbs handles: RP2 # nT2 = (2n+1)RP2.
    pub fn normalize(handles: u32, crosscaps: u32) -> Self {
        if crosscaps == 0 {
            SurfaceKind::orientable(handles)
        } else {
            SurfaceKind::nonorientable(crosscaps + 2 * handles)
        }
    }

    pub fn is_orientable(self) -> bool {
        self.orientable
    }

    /// Handle count when orientable, crosscap count when nonorientable.
    pub fn genus(self) -> u32 {
        self.genus
    }

    pub fn chi_closed(self) -> i64 {
        if self.orientable {
            2 - 2 * i64::from(self.genus)
        } else {
            2 - i64::from(self.genus)
        }
    }
}

// ---------------------------------------------------------------------------
// Compact surfaces with boundary
// ---------------------------------------------------------------------------

/// A closed surface with `punctures` open disks removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompactSurface {
    kind: SurfaceKind,
    punctures: u32,
}

impl CompactSurface {
    pub const fn new(kind: SurfaceKind, punctures: u32) -> Self {
        CompactSurface { kind, punctures }
    }

    pub const fn closed(kind: SurfaceKind) -> Self {
        CompactSurface { kind, punctures: 0 }
    }

    pub const fn disk() -> Self {
        CompactSurface::new(SurfaceKind::sphere(), 1)
    }

    pub const fn annulus() -> Self {
        CompactSurface::new(SurfaceKind::sphere(), 2)
    }

    pub const fn moebius_band() -> Self {
        CompactSurface::new(SurfaceKind::nonorientable(1), 1)
    }

    pub fn kind(self) -> SurfaceKind {
        self.kind
    }

    pub fn punctures(self) -> u32 {
        self.punctures
    }

    pub fn is_closed(self) -> bool {
        self.punctures == 0
    }

    pub fn is_disk(self) -> bool {
        self == CompactSurface::disk()
    }

    pub fn is_orientable(self) -> bool {
        self.kind.is_orientable()
    }

    /// χ = 2 − 2g − k (orientable genus g) or 2 − g − k (g crosscaps),
    /// with k punctures.
    pub fn euler_characteristic(self) -> i64 {
        self.kind.chi_closed() - i64::from(self.punctures)
    }
}

pub fn euler_characteristic(surface: CompactSurface) -> i64 {
    surface.euler_characteristic()
}

impl fmt::Display for CompactSurface {
    /// Canonical token: `S2`, `T2`/`nT2`, `RP2`/`nRP2`, plus `_k` punctures.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind.orientable, self.kind.genus) {
            (true, 0) => write!(f, "S2")?,
            (true, 1) => write!(f, "T2")?,
            (true, g) => write!(f, "{g}T2")?,
            (false, 1) => write!(f, "RP2")?,
            (false, k) => write!(f, "{k}RP2")?,
        }
        if self.punctures > 0 {
            write!(f, "_{}", self.punctures)?;
        }
        Ok(())
    }
}

/// Parses a surface token. Grammar:
/// `SURF := ( "S2" | "T2" | INT "T2" | "RP2" | INT "RP2" ) [ "_" INT ]`.
pub fn parse_surface(text: &str) -> Result<CompactSurface, TokenError> {
    let (surface, rest) = parse_surface_prefix(text)?;
    if rest < text.len() {
        return Err(TokenError::new(rest, format!("unexpected trailing input {:?}", &text[rest..])));
    }
    Ok(surface)
}

/// Parses a leading surface token, returning it with the offset just past it.
pub(crate) fn parse_surface_prefix(text: &str) -> Result<(CompactSurface, usize), TokenError> {
    let bytes = text.as_bytes();
    let mut pos = 0;

    let count_start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    let count: Option<u32> = if pos > count_start {
        let digits = &text[count_start..pos];
        Some(
            digits
                .parse()
                .map_err(|_| TokenError::new(count_start, format!("count {digits:?} out of range")))?,
        )
    } else {
        None
    };

    let kind = if text[pos..].starts_with("T2") {
        pos += 2;
        match count {
            None | Some(1) => SurfaceKind::orientable(1),
            Some(0) => return Err(TokenError::new(count_start, "surface count must be positive")),
            Some(g) => SurfaceKind::orientable(g),
        }
    } else if text[pos..].starts_with("RP2") {
        pos += 3;
        match count {
            None | Some(1) => SurfaceKind::nonorientable(1),
            Some(0) => return Err(TokenError::new(count_start, "surface count must be positive")),
            Some(k) => SurfaceKind::nonorientable(k),
        }
    } else if text[pos..].starts_with("S2") {
        if count.is_some() {
            return Err(TokenError::new(count_start, "S2 does not take a count prefix"));
        }
        pos += 2;
        SurfaceKind::sphere()
    } else {
        return Err(TokenError::new(pos, "expected S2, T2 or RP2"));
    };

    let punctures = if pos < bytes.len() && bytes[pos] == b'_' {
        pos += 1;
        let digit_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if pos == digit_start {
            return Err(TokenError::new(digit_start, "expected puncture count after '_'"));
        }
        text[digit_start..pos]
            .parse()
            .map_err(|_| TokenError::new(digit_start, "puncture count out of range"))?
    } else {
        0
    };

    Ok((CompactSurface::new(kind, punctures), pos))
}

impl FromStr for CompactSurface {
    type Err = TokenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_surface(s)
    }
}

// ---------------------------------------------------------------------------
// Cubic surface ambients
// ---------------------------------------------------------------------------

/// The five diffeomorphism types of a nonsingular real cubic surface.
///
/// The connected types are RP2 and RP2 # nT2 = (2n+1)RP2 for n = 1, 2, 3; the
/// remaining type is the disjoint union RP2 ⊔ S2. Their Euler characteristics
/// are 1, −1, −3, −5 and 3 — all odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CubicAmbient {
    /// RP2 ⊔ S2, χ = 3.
    ProjectivePlaneAndSphere,
    /// RP2, χ = 1.
    ProjectivePlane,
    /// 3RP2 = RP2 # T2, χ = −1.
    ThreeCrosscaps,
    /// 5RP2 = RP2 # 2T2, χ = −3.
    FiveCrosscaps,
    /// 7RP2 = RP2 # 3T2, χ = −5.
    SevenCrosscaps,
}

impl CubicAmbient {
    pub const ALL: [CubicAmbient; 5] = [
        CubicAmbient::ProjectivePlaneAndSphere,
        CubicAmbient::ProjectivePlane,
        CubicAmbient::SevenCrosscaps,
        CubicAmbient::FiveCrosscaps,
        CubicAmbient::ThreeCrosscaps,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CubicAmbient::ProjectivePlaneAndSphere => "RP2+S2",
            CubicAmbient::ProjectivePlane => "RP2",
            CubicAmbient::ThreeCrosscaps => "3RP2",
            CubicAmbient::FiveCrosscaps => "5RP2",
            CubicAmbient::SevenCrosscaps => "7RP2",
        }
    }

    pub fn chi(self) -> i64 {
        match self {
            CubicAmbient::ProjectivePlaneAndSphere => 3,
            CubicAmbient::ProjectivePlane => 1,
            CubicAmbient::ThreeCrosscaps => -1,
            CubicAmbient::FiveCrosscaps => -3,
            CubicAmbient::SevenCrosscaps => -5,
        }
    }

    pub fn is_connected(self) -> bool {
        !matches!(self, CubicAmbient::ProjectivePlaneAndSphere)
    }

    pub fn has_positive_chi(self) -> bool {
        self.chi() > 0
    }

    /// Crosscap count of the connected negative-χ types (3, 5 or 7).
    pub fn crosscap_count(self) -> Option<u32> {
        match self {
            CubicAmbient::ThreeCrosscaps => Some(3),
            CubicAmbient::FiveCrosscaps => Some(5),
            CubicAmbient::SevenCrosscaps => Some(7),
            _ => None,
        }
    }

    /// Handle count n in the presentation RP2 # nT2 of the negative-χ types.
    pub fn handles(self) -> Option<u32> {
        self.crosscap_count().map(|k| (k - 1) / 2)
    }
}

impl fmt::Display for CubicAmbient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown cubic surface type {0:?}; expected one of RP2+S2, RP2, 3RP2, 5RP2, 7RP2")]
pub struct AmbientParseError(pub String);

impl FromStr for CubicAmbient {
    type Err = AmbientParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "RP2+S2" | "RP2uS2" => Ok(CubicAmbient::ProjectivePlaneAndSphere),
            "RP2" => Ok(CubicAmbient::ProjectivePlane),
            "3RP2" => Ok(CubicAmbient::ThreeCrosscaps),
            "5RP2" => Ok(CubicAmbient::FiveCrosscaps),
            "7RP2" => Ok(CubicAmbient::SevenCrosscaps),
            other => Err(AmbientParseError(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent χ oracle: realize the closed surface as an identified
    /// polygon, count vertex classes after edge identification, and take
    /// V − E + F. Punctures each remove one open disk (χ drops by one per
    /// removed face of a finer CW structure).
    mod oracle {
        #[derive(Clone, Copy, PartialEq)]
        struct Letter {
            id: u32,
            inverse: bool,
        }

        fn polygon_word(orientable: bool, genus: u32) -> Vec<Letter> {
            let mut word = Vec::new();
            if orientable {
                if genus == 0 {
                    // a a^-1
                    word.push(Letter { id: 0, inverse: false });
                    word.push(Letter { id: 0, inverse: true });
                } else {
                    for g in 0..genus {
                        let a = 2 * g;
                        let b = 2 * g + 1;
                        word.push(Letter { id: a, inverse: false });
                        word.push(Letter { id: b, inverse: false });
                        word.push(Letter { id: a, inverse: true });
                        word.push(Letter { id: b, inverse: true });
                    }
                }
            } else {
                for c in 0..genus {
                    word.push(Letter { id: c, inverse: false });
                    word.push(Letter { id: c, inverse: false });
                }
            }
            word
        }

        struct UnionFind(Vec<usize>);

        impl UnionFind {
            fn new(n: usize) -> Self {
                UnionFind((0..n).collect())
            }

            fn find(&mut self, x: usize) -> usize {
                if self.0[x] != x {
                    let root = self.find(self.0[x]);
                    self.0[x] = root;
                }
                self.0[x]
            }

            fn union(&mut self, a: usize, b: usize) {
                let (ra, rb) = (self.find(a), self.find(b));
                self.0[ra] = rb;
            }

            fn classes(&mut self, n: usize) -> usize {
                let mut roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
                roots.sort_unstable();
                roots.dedup();
                roots.len()
            }
        }

        pub fn chi(orientable: bool, genus: u32, punctures: u32) -> i64 {
            let word = polygon_word(orientable, genus);
            let n = word.len();
            // Polygon corners 0..n; edge i runs from corner i to corner i+1 mod n.
            let mut uf = UnionFind::new(n);
            for i in 0..n {
                for j in (i + 1)..n {
                    if word[i].id != word[j].id {
                        continue;
                    }
                    let (i_end, j_end) = ((i + 1) % n, (j + 1) % n);
                    if word[i].inverse == word[j].inverse {
                        uf.union(i, j);
                        uf.union(i_end, j_end);
                    } else {
                        uf.union(i, j_end);
                        uf.union(i_end, j);
                    }
                }
            }
            let vertices = uf.classes(n) as i64;
            let edges = (n / 2) as i64;
            let faces = 1i64;
            vertices - edges + faces - i64::from(punctures)
        }
    }

    #[test]
    fn chi_annulus_is_zero() {
        assert_eq!(CompactSurface::annulus().euler_characteristic(), 0);
    }

    #[test]
    fn chi_of_closed_seven_crosscaps_is_minus_five() {
        let mixed = SurfaceKind::normalize(3, 1);
        assert_eq!(mixed, SurfaceKind::nonorientable(7));
        assert_eq!(CompactSurface::closed(mixed).euler_characteristic(), -5);
    }

    #[test]
    fn chi_of_punctured_five_crosscaps_matches_polygon_oracle() {
        // 5RP2 with 5 punctures: oracle value frozen from the polygon count.
        let s = CompactSurface::new(SurfaceKind::nonorientable(5), 5);
        assert_eq!(oracle::chi(false, 5, 5), -8);
        assert_eq!(s.euler_characteristic(), -8);
    }

    #[test]
    fn chi_formula_agrees_with_polygon_oracle_on_small_surfaces() {
        for genus in 0..=4u32 {
            for punctures in 0..=5u32 {
                let s = CompactSurface::new(SurfaceKind::orientable(genus), punctures);
                assert_eq!(
                    s.euler_characteristic(),
                    oracle::chi(true, genus, punctures),
                    "orientable genus {genus}, {punctures} punctures"
                );
            }
        }
        for crosscaps in 1..=8u32 {
            for punctures in 0..=5u32 {
                let s = CompactSurface::new(SurfaceKind::nonorientable(crosscaps), punctures);
                assert_eq!(
                    s.euler_characteristic(),
                    oracle::chi(false, crosscaps, punctures),
                    "{crosscaps} crosscaps, {punctures} punctures"
                );
            }
        }
    }

    #[test]
    fn normalize_examples() {
        // One crosscap plus three handles = seven crosscaps.
        assert_eq!(SurfaceKind::normalize(3, 1), SurfaceKind::nonorientable(7));
        // Orientable input is untouched.
        assert_eq!(SurfaceKind::normalize(2, 0), SurfaceKind::orientable(2));
        // Two crosscaps plus one handle = four crosscaps; the presentation
        // χ = 2 − 2·1 − 2 = −2 is preserved.
        let n = SurfaceKind::normalize(1, 2);
        assert_eq!(n, SurfaceKind::nonorientable(4));
        assert_eq!(n.chi_closed(), -2);
    }

    #[test]
    fn normalize_preserves_chi_and_orientability() {
        for handles in 0..=4u32 {
            for crosscaps in 0..=6u32 {
                let norm = SurfaceKind::normalize(handles, crosscaps);
                let chi_presentation = 2 - 2 * i64::from(handles) - i64::from(crosscaps);
                assert_eq!(norm.chi_closed(), chi_presentation);
                assert_eq!(norm.is_orientable(), crosscaps == 0);
            }
        }
    }

    #[test]
    fn token_round_trips() {
        for token in ["S2", "S2_2", "T2", "3T2_2", "RP2_1", "7RP2", "5RP2_5"] {
            let surface = parse_surface(token).unwrap();
            assert_eq!(surface.to_string(), token, "canonical token must round-trip");
        }
        assert_eq!(parse_surface("S2_2").unwrap(), CompactSurface::annulus());
        assert_eq!(
            parse_surface("7RP2").unwrap(),
            CompactSurface::closed(SurfaceKind::nonorientable(7))
        );
        assert_eq!(
            parse_surface("3T2_2").unwrap(),
            CompactSurface::new(SurfaceKind::orientable(3), 2)
        );
    }

    #[test]
    fn non_canonical_count_prefix_prints_canonically() {
        assert_eq!(parse_surface("1T2").unwrap().to_string(), "T2");
        assert_eq!(parse_surface("1RP2_1").unwrap().to_string(), "RP2_1");
    }

    #[test]
    fn token_errors_carry_offsets() {
        assert_eq!(parse_surface("XYZ").unwrap_err().offset, 0);
        assert_eq!(parse_surface("0T2").unwrap_err().offset, 0);
        assert_eq!(parse_surface("2S2").unwrap_err().offset, 0);
        assert_eq!(parse_surface("S2_").unwrap_err().offset, 3);
        assert_eq!(parse_surface("S2_2x").unwrap_err().offset, 4);
    }

    #[test]
    fn puncturing_decrements_chi() {
        let kinds = [
            SurfaceKind::sphere(),
            SurfaceKind::orientable(3),
            SurfaceKind::nonorientable(1),
            SurfaceKind::nonorientable(6),
        ];
        for kind in kinds {
            for punctures in 0..6u32 {
                let a = CompactSurface::new(kind, punctures);
                let b = CompactSurface::new(kind, punctures + 1);
                assert_eq!(b.euler_characteristic(), a.euler_characteristic() - 1);
            }
        }
    }

    #[test]
    fn ambient_chi_values_are_odd() {
        let expected = [3, 1, -5, -3, -1];
        for (ambient, chi) in CubicAmbient::ALL.iter().zip(expected) {
            assert_eq!(ambient.chi(), chi);
            assert_eq!(ambient.chi().rem_euclid(2), 1, "{ambient} must have odd χ");
        }
    }

    #[test]
    fn ambient_names_round_trip() {
        for ambient in CubicAmbient::ALL {
            assert_eq!(ambient.as_str().parse::<CubicAmbient>().unwrap(), ambient);
        }
        assert!("RP3".parse::<CubicAmbient>().is_err());
    }
}
