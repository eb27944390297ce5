//! Combinatorial fundamental polygons.
//!
//! A surface symbol is the edge word of a marked polygon; gluing `n` copies
//! of the fundamental polygon of `Λ` along the surface-group identifications
//! yields the closed non-orientable surface `N_g` together with the deck
//! action of the cyclic cover. Curves on the glued surface are cyclic chord
//! sequences with exact rational endpoints.

mod complex;
mod curves;

pub use curves::{
    complement_profile, curve_properties, deck_image, intersection_count, is_standard_pair,
    ComplementProfile, CurveDiagram, CurveProperties, StandardPairType,
};

pub use complex::Classification;
pub(crate) use complex::{EdgePair, Homology1, Occ, PolyComplex, Subdivision};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::nec::{
    is_admissible, presentation, Epimorphism, GenKind, Generator, NecSignature, Sign,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("malformed surface symbol: {0}")]
    MalformedSymbol(String),
    #[error("symbol is not closed: reflection-boundary edge {0}")]
    NotClosed(String),
    #[error("epimorphism is not admissible for this signature")]
    NotAdmissible,
    #[error("deck generator residue {0} does not generate Z_{1}")]
    GeneratorNotPrimitive(u64, u64),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("degenerate curve: chord with coinciding endpoints")]
    DegenerateCurve,
    #[error("curves are not in general position: {0}")]
    NotInGeneralPosition(String),
    #[error("internal complex error: {0}")]
    Complex(String),
}

/// Decoration of an edge token: `x1` plain, `x1'` primed, `a1*` starred.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Decoration {
    Plain,
    Prime,
    Star,
}

/// A directed boundary edge of a marked polygon.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeToken {
    pub label: String,
    pub decoration: Decoration,
}

impl EdgeToken {
    pub fn parse(tok: &str) -> Result<Self, PolygonError> {
        let (label, decoration) = if let Some(l) = tok.strip_suffix('\'') {
            (l, Decoration::Prime)
        } else if let Some(l) = tok.strip_suffix('*') {
            (l, Decoration::Star)
        } else {
            (tok, Decoration::Plain)
        };
        if label.is_empty() || label.contains(|c: char| c.is_whitespace()) {
            return Err(PolygonError::MalformedSymbol(format!("bad token {tok:?}")));
        }
        Ok(EdgeToken { label: label.to_string(), decoration })
    }
}

impl fmt::Display for EdgeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.decoration {
            Decoration::Plain => write!(f, "{}", self.label),
            Decoration::Prime => write!(f, "{}'", self.label),
            Decoration::Star => write!(f, "{}*", self.label),
        }
    }
}

/// The cyclic edge-identification word of a marked polygon.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSymbol {
    tokens: Vec<EdgeToken>,
}

impl SurfaceSymbol {
    /// Parses whitespace-separated tokens like `"x1 x1' a1 a1*"`.
    pub fn parse(text: &str) -> Result<Self, PolygonError> {
        let tokens = text
            .split_whitespace()
            .map(EdgeToken::parse)
            .collect::<Result<Vec<_>, _>>()?;
        if tokens.is_empty() {
            return Err(PolygonError::MalformedSymbol("empty symbol".into()));
        }
        let sym = SurfaceSymbol { tokens };
        sym.label_kinds()?;
        Ok(sym)
    }

    pub fn tokens(&self) -> &[EdgeToken] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Position of a token given by its display form, e.g. `"x1'"`.
    pub fn position(&self, token_text: &str) -> Option<usize> {
        let t = EdgeToken::parse(token_text).ok()?;
        self.tokens.iter().position(|x| *x == t)
    }

    /// Label pairing kinds: for each label, the positions of its occurrences
    /// and the pairing kind. Errors on labels seen with inconsistent
    /// decorations or more than twice.
    fn label_kinds(&self) -> Result<BTreeMap<String, LabelPairing>, PolygonError> {
        let mut map: BTreeMap<String, Vec<(usize, Decoration)>> = BTreeMap::new();
        for (i, t) in self.tokens.iter().enumerate() {
            map.entry(t.label.clone()).or_default().push((i, t.decoration));
        }
        let mut out = BTreeMap::new();
        for (label, occs) in map {
            let pairing = match occs.as_slice() {
                [(i, Decoration::Plain)] => LabelPairing::ReflectionBoundary(*i),
                [(i, Decoration::Plain), (j, Decoration::Prime)]
                | [(j, Decoration::Prime), (i, Decoration::Plain)] => {
                    LabelPairing::Orientable(*i, *j)
                }
                [(i, Decoration::Plain), (j, Decoration::Star)]
                | [(j, Decoration::Star), (i, Decoration::Plain)] => {
                    LabelPairing::NonOrientable(*i, *j)
                }
                _ => {
                    return Err(PolygonError::MalformedSymbol(format!(
                        "label {label:?} has an invalid occurrence pattern"
                    )))
                }
            };
            out.insert(label, pairing);
        }
        Ok(out)
    }
}

impl fmt::Display for SurfaceSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.tokens.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum LabelPairing {
    /// plain at .0, primed at .1
    Orientable(usize, usize),
    /// plain at .0, starred at .1
    NonOrientable(usize, usize),
    ReflectionBoundary(usize),
}

/// Classifies the closed surface obtained by identifying the symbol's edges.
pub fn classify_symbol(sym: &SurfaceSymbol) -> Result<Classification, PolygonError> {
    let kinds = sym.label_kinds()?;
    let mut pairs = Vec::new();
    for (label, k) in kinds {
        match k {
            LabelPairing::Orientable(i, j) => {
                pairs.push(EdgePair { occs: [(0, i), (0, j)], flip: false })
            }
            LabelPairing::NonOrientable(i, j) => {
                pairs.push(EdgePair { occs: [(0, i), (0, j)], flip: true })
            }
            LabelPairing::ReflectionBoundary(_) => return Err(PolygonError::NotClosed(label)),
        }
    }
    let complex = PolyComplex::new(vec![sym.len()], pairs).map_err(PolygonError::Complex)?;
    complex.classify().map_err(PolygonError::Complex)
}

/// The marked-polygon surface symbol of an NEC signature.
///
/// Sign `+`: `ξ_1ξ_1'…ξ_rξ_r' ε_1γ_1ε_1'…ε_kγ_kε_k' α_1β_1'α_1'β_1…`;
/// sign `-`: the same `ξ`/`ε` prefix followed by `α_1α_1*…α_hα_h*`.
pub fn surface_symbol(sig: &NecSignature) -> SurfaceSymbol {
    let mut tokens = Vec::new();
    let tok = |label: String, d: Decoration| EdgeToken { label, decoration: d };
    for i in 1..=sig.r() {
        tokens.push(tok(format!("x{i}"), Decoration::Plain));
        tokens.push(tok(format!("x{i}"), Decoration::Prime));
    }
    for j in 1..=sig.k() {
        tokens.push(tok(format!("e{j}"), Decoration::Plain));
        tokens.push(tok(format!("g{j}"), Decoration::Plain));
        tokens.push(tok(format!("e{j}"), Decoration::Prime));
    }
    match sig.sign() {
        Sign::Plus => {
            for l in 1..=sig.h() {
                tokens.push(tok(format!("a{l}"), Decoration::Plain));
                tokens.push(tok(format!("b{l}"), Decoration::Prime));
                tokens.push(tok(format!("a{l}"), Decoration::Prime));
                tokens.push(tok(format!("b{l}"), Decoration::Plain));
            }
        }
        Sign::Minus => {
            for l in 1..=sig.h() {
                tokens.push(tok(format!("a{l}"), Decoration::Plain));
                tokens.push(tok(format!("a{l}"), Decoration::Star));
            }
        }
    }
    SurfaceSymbol { tokens }
}

/// `n` glued copies of the fundamental polygon of `Λ`: the fundamental
/// domain `D = P ∪ ỹP ∪ … ∪ ỹ^{n-1}P` of `Γ = ker θ` with all boundary
/// identifications induced by `Γ`, plus the deck action `copy i → copy i+1`.
#[derive(Debug, Clone)]
pub struct GluedSurface {
    sig: NecSignature,
    n: u64,
    symbol: SurfaceSymbol,
    complex: PolyComplex,
}

impl GluedSurface {
    pub fn copies(&self) -> u64 {
        self.n
    }

    pub fn symbol(&self) -> &SurfaceSymbol {
        &self.symbol
    }

    pub fn signature(&self) -> &NecSignature {
        &self.sig
    }

    pub(crate) fn complex(&self) -> &PolyComplex {
        &self.complex
    }

    /// Resolves `(copy, token-text)` to an internal occurrence.
    pub(crate) fn occ(&self, copy: u64, token_text: &str) -> Result<Occ, PolygonError> {
        if copy >= self.n {
            return Err(PolygonError::InvalidCurve(format!("copy {copy} out of range")));
        }
        let pos = self
            .symbol
            .position(token_text)
            .ok_or_else(|| PolygonError::InvalidCurve(format!("unknown edge {token_text:?}")))?;
        Ok((copy as usize, pos))
    }

    /// The identified partner of a boundary item and the flip bit.
    pub fn pairing(
        &self,
        copy: u64,
        token_text: &str,
    ) -> Result<(u64, String, bool), PolygonError> {
        let o = self.occ(copy, token_text)?;
        let (p, flip) = self.complex.partner(o);
        Ok((p.0 as u64, self.symbol.tokens()[p.1].to_string(), flip))
    }

    /// Classification of the assembled closed surface.
    pub fn classify(&self) -> Result<Classification, PolygonError> {
        self.complex.classify().map_err(PolygonError::Complex)
    }

    /// The deck image of an occurrence (copy shift by +1 mod n).
    pub(crate) fn deck_occ(&self, o: Occ) -> Occ {
        (((o.0 as u64 + 1) % self.n) as usize, o.1)
    }

    /// `H^1(N_g; Z_2)` with the intersection form, plus the matrix of the
    /// deck generator acting on it.
    pub(crate) fn deck_homology_action(&self) -> (Homology1, Vec<crate::linalg2::BitVec>) {
        let sub = Subdivision::new(self.complex.clone());
        let h = sub.homology();
        let n = self.n;
        // Pushforward along the deck map y needs preimages: y^{-1} shifts by -1.
        let preimage = sub.sub_edge_map(&|o: Occ| (((o.0 as u64 + n - 1) % n) as usize, o.1));
        let m = h.induced_matrix(&preimage);
        (h, m)
    }
}

/// Assembles the fundamental domain of `Γ = ker θ` from `n` polygon copies.
///
/// `y_residue` is `θ(ỹ)` for the chosen generating coset `ỹΓ`; it must be a
/// unit mod `n`. Copy `i` is `ỹ^i P`, and the generator-edge action table
/// pairs the primed (or starred) edge of generator `z` in copy `i` with the
/// plain edge in copy `i - θ(z)·u^{-1}`; reflection axes `γ_j` pair copy `i`
/// with copy `i + n/2` pointwise.
pub fn assemble_fundamental_domain(
    sig: &NecSignature,
    theta: &Epimorphism,
    y_residue: u64,
) -> Result<GluedSurface, PolygonError> {
    let n = theta.n();
    let u = y_residue % n.max(1);
    if n == 1 {
        if sig.r() != 0 || sig.k() != 0 {
            return Err(PolygonError::NotAdmissible);
        }
    } else if !is_admissible(sig, theta).map_err(|_| PolygonError::NotAdmissible)? {
        return Err(PolygonError::NotAdmissible);
    }
    let u_inv = mod_inverse(u, n).ok_or(PolygonError::GeneratorNotPrimitive(u, n))?;

    let symbol = surface_symbol(sig);
    let pres = presentation(sig);
    let mut pairs = Vec::new();
    for (src_txt, dst_txt, gen, flip) in generator_edge_table(sig) {
        let src = symbol.position(&src_txt).expect("token in symbol");
        let dst = symbol.position(&dst_txt).expect("token in symbol");
        let v = theta.images()[pres.position(gen).expect("generator present")];
        let shift = (v as u128 * u_inv as u128 % n as u128) as u64;
        for i in 0..n {
            let j = (i + n - shift) % n;
            if src == dst {
                // reflection axis: pair copy i with copy j once
                if i < j {
                    pairs.push(EdgePair { occs: [(i as usize, src), (j as usize, dst)], flip });
                }
                if i == j {
                    // c_j in Γ would leave boundary in the quotient
                    return Err(PolygonError::NotAdmissible);
                }
            } else {
                pairs.push(EdgePair { occs: [(i as usize, src), (j as usize, dst)], flip });
            }
        }
    }
    let face_lens = vec![symbol.len(); n as usize];
    let complex = PolyComplex::new(face_lens, pairs).map_err(PolygonError::Complex)?;
    Ok(GluedSurface { sig: sig.clone(), n, symbol, complex })
}

/// Per generator: (source edge, target edge, generator, flip bit). The
/// source is the edge the generator maps onto the target: `x_i(ξ_i') = ξ_i`,
/// `e_j(ε_j') = ε_j`, `a_l(α_l') = α_l`, `b_l(β_l') = β_l`, `d_l(α_l*) = α_l`,
/// and `c_j` reflects along `γ_j`.
fn generator_edge_table(sig: &NecSignature) -> Vec<(String, String, Generator, bool)> {
    let mut out = Vec::new();
    for i in 1..=sig.r() {
        out.push((
            format!("x{i}'"),
            format!("x{i}"),
            Generator { kind: GenKind::Elliptic, index: i },
            false,
        ));
    }
    for j in 1..=sig.k() {
        out.push((
            format!("e{j}'"),
            format!("e{j}"),
            Generator { kind: GenKind::Connector, index: j },
            false,
        ));
        out.push((
            format!("g{j}"),
            format!("g{j}"),
            Generator { kind: GenKind::Reflection, index: j },
            true,
        ));
    }
    match sig.sign() {
        Sign::Plus => {
            for l in 1..=sig.h() {
                out.push((
                    format!("a{l}'"),
                    format!("a{l}"),
                    Generator { kind: GenKind::HandleA, index: l },
                    false,
                ));
                out.push((
                    format!("b{l}'"),
                    format!("b{l}"),
                    Generator { kind: GenKind::HandleB, index: l },
                    false,
                ));
            }
        }
        Sign::Minus => {
            for l in 1..=sig.h() {
                out.push((
                    format!("a{l}*"),
                    format!("a{l}"),
                    Generator { kind: GenKind::Glide, index: l },
                    true,
                ));
            }
        }
    }
    out
}

fn mod_inverse(u: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (n as i128, (u % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nec::{hurwitz_riemann_genus, NecSignature, Sign};

    fn sig(h: u64, sign: Sign, periods: &[u64], k: u64) -> NecSignature {
        NecSignature::new(h, sign, periods.to_vec(), k).unwrap()
    }

    #[test]
    fn classify_symbol_examples() {
        let torus = SurfaceSymbol::parse("a b a' b'").unwrap();
        let c = classify_symbol(&torus).unwrap();
        assert_eq!((c.orientable, c.genus, c.euler_characteristic), (true, 1, 0));

        let rp2 = SurfaceSymbol::parse("a a*").unwrap();
        let c = classify_symbol(&rp2).unwrap();
        assert_eq!((c.orientable, c.genus, c.euler_characteristic), (false, 1, 1));

        let klein = SurfaceSymbol::parse("a a* b b*").unwrap();
        let c = classify_symbol(&klein).unwrap();
        assert_eq!((c.orientable, c.genus, c.euler_characteristic), (false, 2, 0));

        let open = SurfaceSymbol::parse("e1 g1 e1'").unwrap();
        assert!(matches!(classify_symbol(&open), Err(PolygonError::NotClosed(_))));

        assert!(SurfaceSymbol::parse("a a a").is_err());
        assert!(SurfaceSymbol::parse("a' a*").is_err());
        assert!(SurfaceSymbol::parse("").is_err());
    }

    #[test]
    fn surface_symbol_matches_presentation_shapes() {
        let s = surface_symbol(&sig(1, Sign::Minus, &[5], 0));
        assert_eq!(s.to_string(), "x1 x1' a1 a1*");
        let s = surface_symbol(&sig(0, Sign::Plus, &[], 1));
        assert_eq!(s.to_string(), "e1 g1 e1'");
        let s = surface_symbol(&sig(1, Sign::Plus, &[], 0));
        assert_eq!(s.to_string(), "a1 b1' a1' b1");
        let s = surface_symbol(&sig(1, Sign::Minus, &[2, 2], 1));
        assert_eq!(s.to_string(), "x1 x1' x2 x2' e1 g1 e1' a1 a1*");
    }

    #[test]
    fn symbol_text_roundtrip() {
        for s in ["x1 x1' a1 a1*", "e1 g1 e1'", "a1 b1' a1' b1"] {
            let sym = SurfaceSymbol::parse(s).unwrap();
            assert_eq!(sym.to_string(), s);
        }
    }

    #[test]
    fn identity_cover_is_the_polygon_itself() {
        let s = sig(3, Sign::Minus, &[], 0);
        let theta = Epimorphism::trivial_cover(&s);
        let d = assemble_fundamental_domain(&s, &theta, 0).unwrap();
        assert_eq!(d.copies(), 1);
        let c = d.classify().unwrap();
        let direct = classify_symbol(&surface_symbol(&s)).unwrap();
        assert_eq!(c, direct);
        assert_eq!(c.genus, 3);
        assert!(!c.orientable);
    }

    #[test]
    fn free_involution_cover_matches_hurwitz_riemann() {
        let s = sig(5, Sign::Minus, &[], 0);
        let g = hurwitz_riemann_genus(&s, 2).unwrap();
        assert_eq!(g, 8);
        for theta in crate::nec::enumerate_epimorphisms(&s, 2).unwrap() {
            let d = assemble_fundamental_domain(&s, &theta, 1).unwrap();
            let c = d.classify().unwrap();
            assert!(!c.orientable);
            assert_eq!(c.genus, 8);
        }
    }

    #[test]
    fn odd_prime_cover_matches_hurwitz_riemann() {
        for r in 1..=3u64 {
            let s = sig(1, Sign::Minus, &vec![3; r as usize], 0);
            let Ok(g) = hurwitz_riemann_genus(&s, 3) else { continue };
            for theta in crate::nec::enumerate_epimorphisms(&s, 3).unwrap() {
                let d = assemble_fundamental_domain(&s, &theta, 1).unwrap();
                let c = d.classify().unwrap();
                assert!(!c.orientable, "r={r}");
                assert_eq!(c.genus, g, "r={r}");
            }
        }
    }

    #[test]
    fn reflection_signature_cover() {
        // (1; +; []; {()}) with n=2: quotient is orientable with one oval
        let s = sig(1, Sign::Plus, &[], 1);
        let g = hurwitz_riemann_genus(&s, 2).unwrap();
        assert_eq!(g, 4);
        let thetas = crate::nec::enumerate_epimorphisms(&s, 2).unwrap();
        assert!(!thetas.is_empty());
        for theta in thetas {
            let d = assemble_fundamental_domain(&s, &theta, 1).unwrap();
            let c = d.classify().unwrap();
            assert!(!c.orientable);
            assert_eq!(c.genus, 4);
        }
    }

    #[test]
    fn non_unit_deck_residue_rejected() {
        let s = sig(1, Sign::Minus, &[2, 2, 2, 2], 0);
        let theta = crate::nec::enumerate_epimorphisms(&s, 2).unwrap().remove(0);
        assert!(matches!(
            assemble_fundamental_domain(&s, &theta, 0),
            Err(PolygonError::GeneratorNotPrimitive(0, 2))
        ));
    }

    #[test]
    fn deck_homology_action_is_involutive_for_n2() {
        let s = sig(1, Sign::Plus, &[], 1);
        let theta = crate::nec::enumerate_epimorphisms(&s, 2).unwrap().remove(0);
        let d = assemble_fundamental_domain(&s, &theta, 1).unwrap();
        let (h, m) = d.deck_homology_action();
        assert_eq!(h.rank(), 4);
        // m^2 = identity
        let g = h.rank();
        for i in 0..g {
            let mut sq = crate::linalg2::BitVec::zeros(g);
            for j in m[i].ones() {
                sq.xor_assign(&m[j]);
            }
            for j in 0..g {
                assert_eq!(sq.get(j), i == j);
            }
        }
    }
}
