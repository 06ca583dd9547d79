//! The two code notations for topological arrangements.
//!
//! **Nested-oval forest codes** describe collections of two-sided circles on
//! RP2 or S2. `n` stands for n disjoint empty ovals and `1<A>` for an oval
//! whose interior contains the collection `A`; `u` replaces the disjoint
//! union symbol. Grammar:
//!
//! ```text
//! FOREST := "<" BODY ">"
//! BODY   := ε | TERM { "u" TERM }
//! TERM   := INT | "1<" BODY ">"          (INT ≥ 1)
//! ```
//!
//! Examples: `<>`, `<3>`, `<3 u 1<1>>`, `<1<1<1>>>`.
//!
//! **Half-pair codes** describe curves on the connected negative-χ cubics by
//! the topological types of the two sides B+ and B− of the curve:
//!
//! ```text
//! PAIR     := "<" SIDE "," SIDE ">"
//! SIDE     := INT | SURFLIST | INT "u" SURFLIST
//! SURFLIST := SURF { "u" SURF }
//! ```
//!
//! The integer counts disk components; at most one non-disk component per
//! side is representable, except for the exceptional minus side
//! `S2_2 u RP2_1` (annulus plus Möbius band). `<0, 7RP2>` denotes the empty
//! curve with the whole ambient on the g ≤ 0 side.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::surfaces::{parse_surface_prefix, CompactSurface};

/// Error from the code parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("illegal surface list {found:?}: only the exceptional minus side \"S2_2 u RP2_1\" may have two non-disk components")]
    IllegalSurfaceList { found: String },
}

impl CodeError {
    fn parse(offset: usize, message: impl Into<String>) -> Self {
        CodeError::Parse { offset, message: message.into() }
    }
}

// ---------------------------------------------------------------------------
// Oval forests
// ---------------------------------------------------------------------------

/// A nesting forest of ovals, kept in canonical child order: empty ovals
/// first, then nested terms sorted by (oval count, printed subcode).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OvalForest {
    nodes: Vec<OvalNode>,
}

/// One oval together with the forest inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OvalNode {
    children: OvalForest,
}

impl OvalNode {
    pub fn empty() -> Self {
        OvalNode { children: OvalForest::empty() }
    }

    pub fn with_children(children: OvalForest) -> Self {
        OvalNode { children }
    }

    pub fn children(&self) -> &OvalForest {
        &self.children
    }

    pub fn oval_count(&self) -> u32 {
        1 + self.children.oval_count()
    }

    fn sort_key(&self) -> (u32, String) {
        (self.oval_count(), self.term_string())
    }

    fn term_string(&self) -> String {
        if self.children.is_empty() {
            "1".to_string()
        } else {
            format!("1<{}>", self.children.body_string())
        }
    }
}

impl OvalForest {
    pub fn empty() -> Self {
        OvalForest { nodes: Vec::new() }
    }

    /// Canonicalizing constructor: sorts children recursively.
    pub fn new(nodes: Vec<OvalNode>) -> Self {
        let mut forest = OvalForest { nodes };
        forest.sort();
        forest
    }

    /// n disjoint empty ovals.
    pub fn flat(n: u32) -> Self {
        OvalForest { nodes: (0..n).map(|_| OvalNode::empty()).collect() }
    }

    /// ⟨alpha ⊔ 1⟨beta⟩⟩: alpha empty ovals beside one oval containing beta
    /// empty ovals. With beta = 0 this degenerates to alpha + 1 empty ovals.
    pub fn flat_with_nest(alpha: u32, beta: u32) -> Self {
        let mut nodes: Vec<OvalNode> = (0..alpha).map(|_| OvalNode::empty()).collect();
        nodes.push(OvalNode::with_children(OvalForest::flat(beta)));
        OvalForest::new(nodes)
    }

    /// A single chain of `depth` nested ovals.
    pub fn chain(depth: u32) -> Self {
        let mut forest = OvalForest::empty();
        for _ in 0..depth {
            forest = OvalForest::new(vec![OvalNode::with_children(forest)]);
        }
        forest
    }

    pub fn nodes(&self) -> &[OvalNode] {
        &self.nodes
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn oval_count(&self) -> u32 {
        self.nodes.iter().map(OvalNode::oval_count).sum()
    }

    /// Number of (oval, strictly enclosing oval) pairs.
    pub fn nesting_pairs(&self) -> u32 {
        fn walk(forest: &OvalForest, depth: u32) -> u32 {
            forest.nodes.iter().map(|n| depth + walk(&n.children, depth + 1)).sum()
        }
        walk(self, 0)
    }

    fn sort(&mut self) {
        for node in &mut self.nodes {
            node.children.sort();
        }
        self.nodes.sort_by_cached_key(OvalNode::sort_key);
    }

    fn body_string(&self) -> String {
        let empties = self.nodes.iter().filter(|n| n.children.is_empty()).count();
        let mut terms = Vec::new();
        if empties > 0 {
            terms.push(empties.to_string());
        }
        for node in self.nodes.iter().filter(|n| !n.children.is_empty()) {
            terms.push(node.term_string());
        }
        terms.join(" u ")
    }
}

impl fmt::Display for OvalForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.body_string())
    }
}

pub fn print_forest(forest: &OvalForest) -> String {
    forest.to_string()
}

// ---------------------------------------------------------------------------
// Forest parser
// ---------------------------------------------------------------------------

struct ForestParser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> ForestParser<'a> {
    fn new(text: &'a str) -> Self {
        ForestParser { text, pos: 0 }
    }

    fn bytes(&self) -> &[u8] {
        self.text.as_bytes()
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes().get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), CodeError> {
        match self.peek() {
            Some(b) if b == byte => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(CodeError::parse(self.pos, format!("expected {:?}", byte as char))),
        }
    }

    fn parse_int(&mut self) -> Result<u32, CodeError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(CodeError::parse(start, "expected an oval count"));
        }
        let digits = &self.text[start..self.pos];
        let value: u32 = digits
            .parse()
            .map_err(|_| CodeError::parse(start, format!("oval count {digits:?} out of range")))?;
        if value == 0 {
            return Err(CodeError::parse(start, "oval count must be positive"));
        }
        Ok(value)
    }

    fn parse_forest(&mut self) -> Result<OvalForest, CodeError> {
        self.expect(b'<')?;
        let body = self.parse_body()?;
        self.expect(b'>')?;
        Ok(body)
    }

    fn parse_body(&mut self) -> Result<OvalForest, CodeError> {
        let mut nodes = Vec::new();
        if self.peek() == Some(b'>') {
            return Ok(OvalForest::empty());
        }
        loop {
            self.parse_term(&mut nodes)?;
            match self.peek() {
                Some(b'u') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(OvalForest::new(nodes))
    }

    fn parse_term(&mut self, nodes: &mut Vec<OvalNode>) -> Result<(), CodeError> {
        let start = self.pos;
        let count = self.parse_int()?;
        if self.peek() == Some(b'<') {
            if count != 1 {
                return Err(CodeError::parse(start, "only \"1<\" may open a nested term"));
            }
            self.pos += 1;
            let children = self.parse_body()?;
            self.expect(b'>')?;
            nodes.push(OvalNode::with_children(children));
        } else {
            for _ in 0..count {
                nodes.push(OvalNode::empty());
            }
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<(), CodeError> {
        self.skip_ws();
        if self.pos < self.text.len() {
            return Err(CodeError::parse(
                self.pos,
                format!("unexpected trailing input {:?}", &self.text[self.pos..]),
            ));
        }
        Ok(())
    }
}

/// Parses a nested-oval forest code such as `<3 u 1<1>>`.
pub fn parse_forest(text: &str) -> Result<OvalForest, CodeError> {
    let mut parser = ForestParser::new(text);
    let forest = parser.parse_forest()?;
    parser.finish()?;
    Ok(forest)
}

// ---------------------------------------------------------------------------
// Canonical codes on the sphere
// ---------------------------------------------------------------------------

/// Canonicalizes a forest read on S2, where the outer region is a choice:
/// among all re-rootings of the region tree the code minimizing the number
/// of nested (oval, enclosing oval) pairs is selected, ties broken by the
/// lexicographically smallest printed code.
pub fn canonicalize_on_sphere(forest: &OvalForest) -> OvalForest {
    // Region tree: one vertex per complementary region, one edge per oval.
    // Vertex 0 is the outer region of the given rooted forest.
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new()];

    fn add_regions(forest: &OvalForest, parent: usize, adjacency: &mut Vec<Vec<usize>>) {
        for node in forest.nodes() {
            let id = adjacency.len();
            adjacency.push(Vec::new());
            adjacency[parent].push(id);
            adjacency[id].push(parent);
            add_regions(node.children(), id, adjacency);
        }
    }
    add_regions(forest, 0, &mut adjacency);

    fn forest_from(adjacency: &[Vec<usize>], root: usize, parent: Option<usize>) -> OvalForest {
        let nodes = adjacency[root]
            .iter()
            .filter(|&&next| Some(next) != parent)
            .map(|&next| OvalNode::with_children(forest_from(adjacency, next, Some(root))))
            .collect();
        OvalForest::new(nodes)
    }

    (0..adjacency.len())
        .map(|root| forest_from(&adjacency, root, None))
        .map(|candidate| (candidate.nesting_pairs(), candidate.to_string(), candidate))
        .min()
        .map(|(_, _, best)| best)
        .unwrap_or_else(OvalForest::empty)
}

// ---------------------------------------------------------------------------
// Half-pair codes
// ---------------------------------------------------------------------------

/// Non-disk part of the minus side of a pair code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MinusBig {
    None,
    Single(CompactSurface),
    /// The exceptional minus side S2_2 ⊔ RP2_1.
    ExceptionalPair,
}

/// A half-pair code ⟨j ⊔ F, n ⊔ G⟩: j and n count disk components of B+ and
/// B−, F and G are the non-disk components (if any). Canonical form folds a
/// once-punctured sphere (which is a disk) into the disk count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairCode {
    plus_disks: u32,
    plus_big: Option<CompactSurface>,
    minus_disks: u32,
    minus_big: MinusBig,
}

impl PairCode {
    pub fn new(
        plus_disks: u32,
        plus_big: Option<CompactSurface>,
        minus_disks: u32,
        minus_big: MinusBig,
    ) -> Self {
        let mut code = PairCode { plus_disks, plus_big, minus_disks, minus_big };
        if code.plus_big == Some(CompactSurface::disk()) {
            code.plus_big = None;
            code.plus_disks += 1;
        }
        if code.minus_big == MinusBig::Single(CompactSurface::disk()) {
            code.minus_big = MinusBig::None;
            code.minus_disks += 1;
        }
        code
    }

    pub fn plus_disks(&self) -> u32 {
        self.plus_disks
    }

    pub fn plus_big(&self) -> Option<CompactSurface> {
        self.plus_big
    }

    pub fn minus_disks(&self) -> u32 {
        self.minus_disks
    }

    pub fn minus_big(&self) -> MinusBig {
        self.minus_big
    }

    pub fn plus_components(&self) -> Vec<CompactSurface> {
        let mut parts: Vec<CompactSurface> =
            (0..self.plus_disks).map(|_| CompactSurface::disk()).collect();
        parts.extend(self.plus_big);
        parts
    }

    pub fn minus_components(&self) -> Vec<CompactSurface> {
        let mut parts: Vec<CompactSurface> =
            (0..self.minus_disks).map(|_| CompactSurface::disk()).collect();
        match self.minus_big {
            MinusBig::None => {}
            MinusBig::Single(s) => parts.push(s),
            MinusBig::ExceptionalPair => {
                parts.push(CompactSurface::annulus());
                parts.push(CompactSurface::moebius_band());
            }
        }
        parts
    }

    pub fn plus_boundaries(&self) -> u32 {
        self.plus_disks + self.plus_big.map_or(0, |s| s.punctures())
    }

    pub fn minus_boundaries(&self) -> u32 {
        self.minus_disks
            + match self.minus_big {
                MinusBig::None => 0,
                MinusBig::Single(s) => s.punctures(),
                MinusBig::ExceptionalPair => 3,
            }
    }

    pub fn chi_plus(&self) -> i64 {
        self.plus_components().iter().map(|s| s.euler_characteristic()).sum()
    }

    pub fn chi_minus(&self) -> i64 {
        self.minus_components().iter().map(|s| s.euler_characteristic()).sum()
    }
}

fn side_string(disks: u32, big: Option<&CompactSurface>, exceptional: bool) -> String {
    if exceptional {
        return if disks == 0 {
            "S2_2 u RP2_1".to_string()
        } else {
            format!("{disks} u S2_2 u RP2_1")
        };
    }
    match big {
        None => disks.to_string(),
        Some(surface) if disks == 0 && surface.is_closed() => surface.to_string(),
        Some(surface) => format!("{disks} u {surface}"),
    }
}

impl fmt::Display for PairCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let plus = side_string(self.plus_disks, self.plus_big.as_ref(), false);
        let minus = match self.minus_big {
            MinusBig::None => side_string(self.minus_disks, None, false),
            MinusBig::Single(ref s) => side_string(self.minus_disks, Some(s), false),
            MinusBig::ExceptionalPair => side_string(self.minus_disks, None, true),
        };
        write!(f, "<{plus}, {minus}>")
    }
}

struct ParsedSide {
    disks: u32,
    surfaces: Vec<CompactSurface>,
}

fn parse_side(text: &str, base: usize) -> Result<ParsedSide, CodeError> {
    let mut disks = 0u32;
    let mut surfaces = Vec::new();
    let mut offset = 0usize;
    for (index, piece) in text.split('u').enumerate() {
        let trimmed = piece.trim();
        let piece_offset = base + offset + (piece.len() - piece.trim_start().len());
        if trimmed.is_empty() {
            return Err(CodeError::parse(piece_offset, "empty side component"));
        }
        if trimmed.bytes().all(|b| b.is_ascii_digit()) {
            if index != 0 {
                return Err(CodeError::parse(
                    piece_offset,
                    "a disk count may only open a side",
                ));
            }
            disks = trimmed.parse().map_err(|_| {
                CodeError::parse(piece_offset, format!("disk count {trimmed:?} out of range"))
            })?;
        } else {
            let (surface, used) = parse_surface_prefix(trimmed).map_err(|e| {
                CodeError::parse(piece_offset + e.offset, e.message)
            })?;
            if used < trimmed.len() {
                return Err(CodeError::parse(
                    piece_offset + used,
                    format!("unexpected trailing input {:?}", &trimmed[used..]),
                ));
            }
            surfaces.push(surface);
        }
        offset += piece.len() + 1;
    }
    Ok(ParsedSide { disks, surfaces })
}

fn is_exceptional_list(surfaces: &[CompactSurface]) -> bool {
    surfaces.len() == 2
        && surfaces.contains(&CompactSurface::annulus())
        && surfaces.contains(&CompactSurface::moebius_band())
}

/// Parses a half-pair code such as `<1 u 3T2_2, S2_2 u RP2_1>` or `<0, 7RP2>`.
pub fn parse_pair(text: &str) -> Result<PairCode, CodeError> {
    let trimmed_end = text.trim_end();
    let open = text.find('<').ok_or_else(|| CodeError::parse(0, "expected '<'"))?;
    if text[..open].trim() != "" {
        return Err(CodeError::parse(0, "expected '<'"));
    }
    if !trimmed_end.ends_with('>') {
        return Err(CodeError::parse(text.len(), "expected '>'"));
    }
    let close = trimmed_end.len() - 1;
    let inner = &text[open + 1..close];
    let comma = inner
        .find(',')
        .ok_or_else(|| CodeError::parse(open + 1, "expected ',' between the two sides"))?;
    let (plus_text, minus_text) = (&inner[..comma], &inner[comma + 1..]);
    if minus_text.contains(',') {
        return Err(CodeError::parse(
            open + 1 + comma + 1 + minus_text.find(',').unwrap(),
            "a pair code has exactly two sides",
        ));
    }

    let plus = parse_side(plus_text, open + 1)?;
    let minus = parse_side(minus_text, open + 1 + comma + 1)?;

    let plus_big = match plus.surfaces.len() {
        0 => None,
        1 => Some(plus.surfaces[0]),
        _ => {
            return Err(CodeError::IllegalSurfaceList { found: plus_text.trim().to_string() });
        }
    };
    let minus_big = match minus.surfaces.len() {
        0 => MinusBig::None,
        1 => MinusBig::Single(minus.surfaces[0]),
        2 if is_exceptional_list(&minus.surfaces) => MinusBig::ExceptionalPair,
        _ => {
            return Err(CodeError::IllegalSurfaceList { found: minus_text.trim().to_string() });
        }
    };

    Ok(PairCode::new(plus.disks, plus_big, minus.disks, minus_big))
}

/// All boundary circles of one side of a pair, as a multiset check helper.
pub fn boundary_counts(pair: &PairCode) -> (u32, u32) {
    (pair.plus_boundaries(), pair.minus_boundaries())
}

/// Distinct χ values over the components of a side (used in reports).
pub fn side_chi_set(components: &[CompactSurface]) -> BTreeSet<i64> {
    components.iter().map(|s| s.euler_characteristic()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surfaces::SurfaceKind;

    fn forest(text: &str) -> OvalForest {
        parse_forest(text).unwrap()
    }

    #[test]
    fn parse_forest_examples() {
        let f = forest("<3 u 1<1>>");
        assert_eq!(f.oval_count(), 5);
        assert_eq!(f, OvalForest::flat_with_nest(3, 1));

        assert_eq!(forest("<>"), OvalForest::empty());

        let chain = forest("<1<1<1>>>");
        assert_eq!(chain, OvalForest::chain(3));
        assert_eq!(chain.oval_count(), 3);
    }

    #[test]
    fn print_forest_examples() {
        assert_eq!(OvalForest::flat(2).to_string(), "<2>");
        assert_eq!(OvalForest::chain(3).to_string(), "<1<1<1>>>");
        assert_eq!(OvalForest::flat_with_nest(1, 1).to_string(), "<1 u 1<1>>");
    }

    #[test]
    fn empty_forest_prints_angle_brackets_only() {
        assert_eq!(OvalForest::empty().to_string(), "<>");
    }

    #[test]
    fn parse_is_canonicalizing() {
        // Same forest written with terms in another order.
        assert_eq!(forest("<1<1> u 2>"), forest("<2 u 1<1>>"));
        assert_eq!(forest("<1<2> u 1 u 1<1>>").to_string(), "<1 u 1<1> u 1<2>>");
    }

    #[test]
    fn forest_parse_errors() {
        match parse_forest("<0>") {
            Err(CodeError::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_forest("<2<1>>").is_err(), "only 1< opens a nest");
        assert!(parse_forest("<1<1>").is_err(), "unbalanced brackets");
        assert!(parse_forest("<1> x").is_err(), "trailing input");
        assert!(parse_forest("<-1>").is_err(), "negative counts are rejected");
    }

    #[test]
    fn sphere_canonicalization_examples() {
        // Two nested ovals on the sphere admit an unnested rooting.
        assert_eq!(canonicalize_on_sphere(&OvalForest::chain(2)), forest("<2>"));
        // Already minimal.
        let f = forest("<1 u 1<1>>");
        assert_eq!(canonicalize_on_sphere(&f), f);
        // Depth-3 chain of 3 ovals re-roots to <1 u 1<1>>.
        assert_eq!(canonicalize_on_sphere(&OvalForest::chain(3)), forest("<1 u 1<1>>"));
    }

    #[test]
    fn sphere_canonicalization_is_idempotent_and_preserves_count() {
        for text in ["<>", "<4>", "<2 u 1<2>>", "<1<1<1<1>>>>", "<1<1> u 1<2>>", "<1 u 1<1 u 1<1>>>"] {
            let f = forest(text);
            let canonical = canonicalize_on_sphere(&f);
            assert_eq!(canonical.oval_count(), f.oval_count());
            assert_eq!(canonicalize_on_sphere(&canonical), canonical);
            assert!(canonical.nesting_pairs() <= f.nesting_pairs());
        }
    }

    #[test]
    fn single_nest_on_sphere_flattens() {
        assert_eq!(canonicalize_on_sphere(&forest("<1<3>>")), forest("<4>"));
    }

    #[test]
    fn pair_codec_exceptional() {
        let pair = parse_pair("<1 u 3T2_2, S2_2 u RP2_1>").unwrap();
        assert_eq!(pair.plus_disks(), 1);
        assert_eq!(
            pair.plus_big(),
            Some(CompactSurface::new(SurfaceKind::orientable(3), 2))
        );
        assert_eq!(pair.minus_big(), MinusBig::ExceptionalPair);
        assert_eq!(pair.to_string(), "<1 u 3T2_2, S2_2 u RP2_1>");
    }

    #[test]
    fn pair_codec_empty_curve() {
        let pair = parse_pair("<0, 7RP2>").unwrap();
        assert_eq!(pair.plus_disks(), 0);
        assert_eq!(pair.plus_big(), None);
        assert_eq!(
            pair.minus_big(),
            MinusBig::Single(CompactSurface::closed(SurfaceKind::nonorientable(7)))
        );
        assert_eq!(pair.to_string(), "<0, 7RP2>");
    }

    #[test]
    fn pair_codec_family_instance() {
        // Family ⟨α ⊔ S2_{β+γ}, β ⊔ kRP2_{α+γ}⟩ at (α, β, γ) = (2, 1, 2) on
        // 7RP2: k = 9 − 2γ = 5, punctures β+γ = 3 and α+γ = 4. χ additivity:
        // χ+ = 2 + (2−3) = 1, χ− = 1 + (2−5−4) = −6, total −5.
        let pair = parse_pair("<2 u S2_3, 1 u 5RP2_4>").unwrap();
        assert_eq!(pair.chi_plus(), 1);
        assert_eq!(pair.chi_minus(), -6);
        assert_eq!(pair.chi_plus() + pair.chi_minus(), -5);
        assert_eq!(boundary_counts(&pair), (5, 5));
        assert_eq!(pair.to_string(), "<2 u S2_3, 1 u 5RP2_4>");
    }

    #[test]
    fn once_punctured_sphere_folds_into_disks() {
        let pair = parse_pair("<2 u S2_1, 0 u 3RP2_3>").unwrap();
        assert_eq!(pair.plus_disks(), 3);
        assert_eq!(pair.plus_big(), None);
        assert_eq!(pair.to_string(), "<3, 0 u 3RP2_3>");
    }

    #[test]
    fn zero_disk_side_with_punctured_big_prints_explicit_zero() {
        let pair = parse_pair("<2T2_3, S2_2 u RP2_1>").unwrap();
        assert_eq!(pair.to_string(), "<0 u 2T2_3, S2_2 u RP2_1>");
    }

    #[test]
    fn pair_parse_rejects_other_surface_lists() {
        assert!(matches!(
            parse_pair("<1 u T2_1 u T2_1, 0 u RP2_1>"),
            Err(CodeError::IllegalSurfaceList { .. })
        ));
        assert!(matches!(
            parse_pair("<0, S2_2 u 3RP2_1>"),
            Err(CodeError::IllegalSurfaceList { .. })
        ));
        // The exceptional list is only legal on the minus side.
        assert!(matches!(
            parse_pair("<S2_2 u RP2_1, 0 u RP2_1>"),
            Err(CodeError::IllegalSurfaceList { .. })
        ));
    }

    #[test]
    fn pair_parse_errors_carry_offsets() {
        match parse_pair("<1 u XY, 0>") {
            Err(CodeError::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_pair("<1, 2, 3>").is_err());
        assert!(parse_pair("<1>").is_err());
    }

    #[test]
    fn exceptional_side_accepts_either_order() {
        let a = parse_pair("<0 u 2T2_3, S2_2 u RP2_1>").unwrap();
        let b = parse_pair("<0 u 2T2_3, RP2_1 u S2_2>").unwrap();
        assert_eq!(a, b);
    }
}
