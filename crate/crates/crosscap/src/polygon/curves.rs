//! Curves on a glued fundamental domain as cyclic chord sequences.
//!
//! A chord crosses one polygon copy from a boundary point to a boundary
//! point; consecutive chords are linked through the edge identifications.
//! All positions are exact rationals, chords are realized as straight
//! segments between boundary points placed on a convex (parabola) arc, so
//! crossing counts and complement regions are computed exactly.


use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{GluedSurface, Occ, PolygonError};

type Q = Ratio<i64>;
type Q128 = Ratio<i128>;

/// One chord: crosses the interior of `copy` from `entry` to `exit`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chord {
    pub copy: u64,
    /// entry boundary point: (edge token text, position in (0,1))
    pub entry: (String, Q),
    /// exit boundary point
    pub exit: (String, Q),
}

/// A closed curve as a cyclic sequence of chords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveDiagram {
    chords: Vec<Chord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveProperties {
    pub simple: bool,
    pub two_sided: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementProfile {
    pub connected: bool,
    pub non_orientable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardPairType {
    Type1,
    Type2,
    None,
}

impl CurveDiagram {
    pub fn new(chords: Vec<Chord>) -> Self {
        CurveDiagram { chords }
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// Parses the fixture format: a JSON list of
    /// `{"copy": c, "in": [edge, num, den], "out": [edge, num, den]}`.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, PolygonError> {
        let arr = value
            .as_array()
            .ok_or_else(|| PolygonError::InvalidCurve("expected a JSON array".into()))?;
        let mut chords = Vec::new();
        for item in arr {
            let copy = item
                .get("copy")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| PolygonError::InvalidCurve("chord without copy".into()))?;
            let endpoint = |key: &str| -> Result<(String, Q), PolygonError> {
                let t = item
                    .get(key)
                    .and_then(|v| v.as_array())
                    .ok_or_else(|| PolygonError::InvalidCurve(format!("chord without {key}")))?;
                if t.len() != 3 {
                    return Err(PolygonError::InvalidCurve(format!(
                        "{key} must be [edge, num, den]"
                    )));
                }
                let edge = t[0]
                    .as_str()
                    .ok_or_else(|| PolygonError::InvalidCurve("edge must be a string".into()))?;
                let num = t[1]
                    .as_i64()
                    .ok_or_else(|| PolygonError::InvalidCurve("bad numerator".into()))?;
                let den = t[2]
                    .as_i64()
                    .filter(|&d| d != 0)
                    .ok_or_else(|| PolygonError::InvalidCurve("bad denominator".into()))?;
                Ok((edge.to_string(), Q::new(num, den)))
            };
            chords.push(Chord { copy, entry: endpoint("in")?, exit: endpoint("out")? });
        }
        if chords.is_empty() {
            return Err(PolygonError::InvalidCurve("empty chord list".into()));
        }
        Ok(CurveDiagram { chords })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arr: Vec<serde_json::Value> = self
            .chords
            .iter()
            .map(|c| {
                serde_json::json!({
                    "copy": c.copy,
                    "in": [c.entry.0, *c.entry.1.numer(), *c.entry.1.denom()],
                    "out": [c.exit.0, *c.exit.1.numer(), *c.exit.1.denom()],
                })
            })
            .collect();
        serde_json::Value::Array(arr)
    }
}

/// An endpoint resolved against a glued surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Endpoint {
    occ: Occ,
    t: Q,
}

/// Canonical surface point of a boundary point: the identified edge id plus
/// the position measured on the pair's side-0 occurrence.
fn canonical_point(glued: &GluedSurface, p: Endpoint) -> (usize, Q) {
    let complex = glued.complex();
    let (edge, side) = complex.pair_of(p.occ);
    if side == 0 {
        (edge, p.t)
    } else {
        let flip = complex.pairs[edge].flip;
        (edge, if flip { p.t } else { Q::from_integer(1) - p.t })
    }
}

struct ResolvedCurve {
    /// chords as endpoint pairs, aligned with the diagram's chord list
    segs: Vec<(Endpoint, Endpoint)>,
    /// junction surface points, one per chord transition
    junctions: Vec<(usize, Q)>,
    /// flip parity accumulated around the curve
    flip_parity: bool,
}

fn resolve(glued: &GluedSurface, curve: &CurveDiagram) -> Result<ResolvedCurve, PolygonError> {
    let complex = glued.complex();
    let mut segs = Vec::new();
    for ch in curve.chords() {
        let eo = glued.occ(ch.copy, &ch.entry.0)?;
        let xo = glued.occ(ch.copy, &ch.exit.0)?;
        for t in [ch.entry.1, ch.exit.1] {
            if t <= Q::from_integer(0) || t >= Q::from_integer(1) {
                return Err(PolygonError::InvalidCurve(format!("position {t} not in (0,1)")));
            }
        }
        segs.push((Endpoint { occ: eo, t: ch.entry.1 }, Endpoint { occ: xo, t: ch.exit.1 }));
    }
    let n = segs.len();
    let mut junctions = Vec::new();
    let mut flip_parity = false;
    for i in 0..n {
        let exit = segs[i].1;
        let entry = segs[(i + 1) % n].0;
        let (partner, flip) = complex.partner(exit.occ);
        if partner != entry.occ {
            return Err(PolygonError::InvalidCurve(format!(
                "chord {i} exits an edge not identified with the next entry"
            )));
        }
        let expect = if flip { exit.t } else { Q::from_integer(1) - exit.t };
        if expect != entry.t {
            return Err(PolygonError::InvalidCurve(format!(
                "chord {i} exit position does not match next entry under the identification"
            )));
        }
        flip_parity ^= flip;
        junctions.push(canonical_point(glued, exit));
    }
    // degenerate chords: a zero-length chord on one boundary point
    for (a, b) in &segs {
        if a == b {
            return Err(PolygonError::DegenerateCurve);
        }
    }
    // the curve must pass through pairwise distinct boundary points
    let mut seen = junctions.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != junctions.len() {
        return Err(PolygonError::InvalidCurve("curve revisits a boundary point".into()));
    }
    Ok(ResolvedCurve { segs, junctions, flip_parity })
}

/// Circular boundary coordinate within a face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct BCoord {
    pos: usize,
    t: Q,
}

fn bcoord(p: Endpoint) -> BCoord {
    BCoord { pos: p.occ.1, t: p.t }
}

/// Do chords `(a1,a2)` and `(b1,b2)` cross inside the face? For straight
/// chords between boundary points in convex position this is exactly the
/// interleaving test.
fn chords_cross(a: (BCoord, BCoord), b: (BCoord, BCoord)) -> bool {
    let (a1, a2) = if a.0 < a.1 { (a.0, a.1) } else { (a.1, a.0) };
    let inside = |x: BCoord| a1 < x && x < a2;
    inside(b.0) != inside(b.1)
}

/// The deck image of a curve: every chord's copy index shifted by +1 mod n.
pub fn deck_image(curve: &CurveDiagram, glued: &GluedSurface) -> CurveDiagram {
    let n = glued.copies();
    CurveDiagram {
        chords: curve
            .chords
            .iter()
            .map(|c| Chord {
                copy: (c.copy + 1) % n,
                entry: c.entry.clone(),
                exit: c.exit.clone(),
            })
            .collect(),
    }
}

/// Simplicity (no self-crossings) and two-sidedness (even flip parity).
pub fn curve_properties(
    curve: &CurveDiagram,
    glued: &GluedSurface,
) -> Result<CurveProperties, PolygonError> {
    let r = resolve(glued, curve)?;
    let simple = count_crossings(&r.segs, &r.segs, true) == 0;
    Ok(CurveProperties { simple, two_sided: !r.flip_parity })
}

fn count_crossings(
    a: &[(Endpoint, Endpoint)],
    b: &[(Endpoint, Endpoint)],
    same: bool,
) -> usize {
    let mut count = 0;
    for (i, sa) in a.iter().enumerate() {
        for (j, sb) in b.iter().enumerate() {
            if same && j <= i {
                continue;
            }
            if sa.0.occ.0 != sb.0.occ.0 {
                continue;
            }
            if chords_cross((bcoord(sa.0), bcoord(sa.1)), (bcoord(sb.0), bcoord(sb.1))) {
                count += 1;
            }
        }
    }
    count
}

/// Transverse crossing count of the given representatives.
pub fn intersection_count(
    c1: &CurveDiagram,
    c2: &CurveDiagram,
    glued: &GluedSurface,
) -> Result<usize, PolygonError> {
    let r1 = resolve(glued, c1)?;
    let r2 = resolve(glued, c2)?;
    let mut all = r1.junctions.clone();
    all.extend(r2.junctions.iter().cloned());
    let total = all.len();
    all.sort();
    all.dedup();
    if all.len() != total {
        return Err(PolygonError::NotInGeneralPosition(
            "curves share a boundary point".into(),
        ));
    }
    Ok(count_crossings(&r1.segs, &r2.segs, false))
}

// ---------------------------------------------------------------------------
// Complement regions
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy)]
struct Pt {
    x: Q128,
    y: Q128,
}

fn pt(x: Q128, y: Q128) -> Pt {
    Pt { x, y }
}

fn cross(o: Pt, a: Pt, b: Pt) -> Q128 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Face-local arrangement node.
#[derive(Debug, Clone)]
struct ArrNode {
    p: Pt,
}

struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    odd: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), parity: vec![false; n], odd: vec![false; n] }
    }
    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] == x {
            (x, false)
        } else {
            let (r, p) = self.find(self.parent[x]);
            self.parent[x] = r;
            self.parity[x] ^= p;
            (r, self.parity[x])
        }
    }
    fn union(&mut self, a: usize, b: usize, rel: bool) {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            if pa ^ pb != rel {
                self.odd[ra] = true;
            }
        } else {
            self.parent[ra] = rb;
            self.parity[ra] = pa ^ pb ^ rel;
            self.odd[rb] |= self.odd[ra];
        }
    }
}

/// Cuts the surface along all chords of all curves and reports whether the
/// complement is connected and whether (some component) is non-orientable.
pub fn complement_profile(
    curves: &[CurveDiagram],
    glued: &GluedSurface,
) -> Result<ComplementProfile, PolygonError> {
    let complex = glued.complex();
    let mut resolved = Vec::new();
    for c in curves {
        resolved.push(resolve(glued, c)?);
    }
    // general position across all curves
    {
        let mut all: Vec<(usize, Q)> = Vec::new();
        for r in &resolved {
            all.extend(r.junctions.iter().cloned());
        }
        let total = all.len();
        all.sort();
        all.dedup();
        if all.len() != total {
            return Err(PolygonError::NotInGeneralPosition(
                "two curves share a boundary point".into(),
            ));
        }
    }

    let n_faces = complex.n_faces();
    let mut chords_by_face: Vec<Vec<(BCoord, BCoord)>> = vec![Vec::new(); n_faces];
    for r in &resolved {
        for (a, b) in &r.segs {
            chords_by_face[a.occ.0].push((bcoord(*a), bcoord(*b)));
        }
    }

    // Global region bookkeeping: intervals[occ index] = sorted list of
    // (lo, hi, region) sub-intervals of that occurrence's boundary edge.
    let total_occs = complex.total_occurrences();
    let mut intervals: Vec<Vec<(Q, Q, usize)>> = vec![Vec::new(); total_occs];
    let mut n_regions = 0usize;

    for f in 0..n_faces {
        let len = complex.face_lens[f];
        let chords = &chords_by_face[f];
        if chords.is_empty() {
            let region = n_regions;
            n_regions += 1;
            for pos in 0..len {
                intervals[complex.occ_index((f, pos))].push((
                    Q::from_integer(0),
                    Q::from_integer(1),
                    region,
                ));
            }
            continue;
        }
        let face_regions =
            face_arrangement(len, chords).map_err(PolygonError::Complex)?;
        for (pos, lo, hi, local_region) in face_regions.intervals {
            intervals[complex.occ_index((f, pos))].push((lo, hi, n_regions + local_region));
        }
        n_regions += face_regions.n_regions;
    }

    // Glue intervals across edge identifications.
    let mut dsu = ParityDsu::new(n_regions);
    for p in &complex.pairs {
        let i1 = complex.occ_index(p.occs[0]);
        let i2 = complex.occ_index(p.occs[1]);
        let list1 = &intervals[i1];
        let list2 = &intervals[i2];
        if list1.len() != list2.len() {
            return Err(PolygonError::Complex(
                "interval subdivisions disagree across an identification".into(),
            ));
        }
        let m = list1.len();
        for (idx, &(lo, hi, r1)) in list1.iter().enumerate() {
            let (lo2, hi2, r2) = if p.flip {
                list2[idx]
            } else {
                let (l2, h2, r2) = list2[m - 1 - idx];
                (Q::from_integer(1) - h2, Q::from_integer(1) - l2, r2)
            };
            if (lo, hi) != (lo2, hi2) {
                return Err(PolygonError::Complex(
                    "interval endpoints disagree across an identification".into(),
                ));
            }
            dsu.union(r1, r2, p.flip);
        }
    }

    let (root0, _) = dsu.find(0);
    let mut connected = true;
    let mut non_orientable = false;
    for r in 0..n_regions {
        let (root, _) = dsu.find(r);
        if root != root0 {
            connected = false;
        }
    }
    let mut roots: Vec<usize> = (0..n_regions).map(|r| dsu.find(r).0).collect();
    roots.sort_unstable();
    roots.dedup();
    for r in roots {
        if dsu.odd[r] {
            non_orientable = true;
        }
    }
    Ok(ComplementProfile { connected, non_orientable })
}

struct FaceRegions {
    n_regions: usize,
    /// (occurrence position, lo, hi, local region id)
    intervals: Vec<(usize, Q, Q, usize)>,
}

/// Subdivides one polygon face by its chords and extracts the regions with
/// the region bordering each boundary interval.
fn face_arrangement(len: usize, chords: &[(BCoord, BCoord)]) -> Result<FaceRegions, String> {
    // Real boundary nodes: every polygon corner plus every chord endpoint,
    // circularly ordered; a synthetic node between consecutive real nodes
    // keeps chords off the hull.
    let mut coords: Vec<BCoord> = (0..len).map(|pos| BCoord { pos, t: Q::from_integer(0) }).collect();
    for (a, b) in chords {
        coords.push(*a);
        coords.push(*b);
    }
    coords.sort();
    coords.dedup();
    let m = coords.len();
    let node_of = |c: BCoord| -> usize { coords.binary_search(&c).expect("known boundary node") };

    // parabola placement: real node i at x = 2i, synthetic node i at 2i+1
    let hull_n = 2 * m;
    let mut nodes: Vec<ArrNode> = Vec::with_capacity(hull_n);
    for i in 0..hull_n {
        let x = Q128::from_integer(i as i128);
        nodes.push(ArrNode { p: pt(x, x * x) });
    }
    let real = |i: usize| 2 * i;

    // chord crossing points
    #[derive(Clone)]
    struct ChordData {
        a: usize,
        b: usize,
        // (parameter along the chord, node id)
        cuts: Vec<(Q128, usize)>,
    }
    let mut cdata: Vec<ChordData> = chords
        .iter()
        .map(|&(a, b)| ChordData { a: real(node_of(a)), b: real(node_of(b)), cuts: Vec::new() })
        .collect();
    for i in 0..cdata.len() {
        for j in i + 1..cdata.len() {
            let (a1, a2) = (nodes[cdata[i].a].p, nodes[cdata[i].b].p);
            let (b1, b2) = (nodes[cdata[j].a].p, nodes[cdata[j].b].p);
            let d = cross(a1, a2, b2) - cross(a1, a2, b1);
            // interleaving test on hull indices
            let ii = (cdata[i].a.min(cdata[i].b), cdata[i].a.max(cdata[i].b));
            let inside = |x: usize| ii.0 < x && x < ii.1;
            if inside(cdata[j].a) == inside(cdata[j].b) {
                continue;
            }
            if d == Q128::from_integer(0) {
                return Err("degenerate chord crossing".into());
            }
            // meet point: a1 + s (a2 - a1)
            let s = cross(a1, b2, b1) / d;
            let p = pt(a1.x + s * (a2.x - a1.x), a1.y + s * (a2.y - a1.y));
            let id = nodes.len();
            nodes.push(ArrNode { p });
            let t_on = |c: &ChordData| -> Q128 {
                let (p1, p2) = (nodes[c.a].p, nodes[c.b].p);
                if p1.x != p2.x {
                    (p.x - p1.x) / (p2.x - p1.x)
                } else {
                    (p.y - p1.y) / (p2.y - p1.y)
                }
            };
            let (ti, tj) = (t_on(&cdata[i]), t_on(&cdata[j]));
            cdata[i].cuts.push((ti, id));
            cdata[j].cuts.push((tj, id));
        }
    }

    // edge list: hull arcs + chord segments
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 0..hull_n {
        edges.push((i, (i + 1) % hull_n));
    }
    for c in &mut cdata {
        c.cuts.sort_by(|x, y| x.0.cmp(&y.0));
        let mut prev = c.a;
        for &(_, id) in &c.cuts {
            edges.push((prev, id));
            prev = id;
        }
        edges.push((prev, c.b));
    }
    // distinct crossing points sanity
    {
        let mut seen: Vec<(Q128, Q128)> = nodes.iter().map(|n| (n.p.x, n.p.y)).collect();
        seen.sort();
        let before = seen.len();
        seen.dedup();
        if seen.len() != before {
            return Err("coincident arrangement nodes".into());
        }
    }

    // half-edge rotation and face tracing
    let nh = 2 * edges.len();
    let he_from = |h: usize| -> usize {
        let (u, v) = edges[h / 2];
        if h % 2 == 0 {
            u
        } else {
            v
        }
    };
    let he_to = |h: usize| -> usize {
        let (u, v) = edges[h / 2];
        if h % 2 == 0 {
            v
        } else {
            u
        }
    };
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
    for h in 0..nh {
        out_edges[he_from(h)].push(h);
    }
    // counterclockwise angular order around each node
    for (v, list) in out_edges.iter_mut().enumerate() {
        let origin = nodes[v].p;
        list.sort_by(|&h1, &h2| {
            let d1 = nodes[he_to(h1)].p;
            let d2 = nodes[he_to(h2)].p;
            angle_cmp(origin, d1, d2)
        });
    }
    let mut pos_in_rotation = vec![0usize; nh];
    for list in &out_edges {
        for (i, &h) in list.iter().enumerate() {
            pos_in_rotation[h] = i;
        }
    }
    let next_he = |h: usize| -> usize {
        let r = h ^ 1; // reverse
        let v = he_from(r);
        let list = &out_edges[v];
        let i = pos_in_rotation[r];
        // previous in ccw order = next clockwise
        list[(i + list.len() - 1) % list.len()]
    };

    let mut face_of = vec![usize::MAX; nh];
    let mut areas: Vec<Q128> = Vec::new();
    let mut n_faces = 0usize;
    for h0 in 0..nh {
        if face_of[h0] != usize::MAX {
            continue;
        }
        let mut area = Q128::from_integer(0);
        let mut h = h0;
        loop {
            face_of[h] = n_faces;
            let (a, b) = (nodes[he_from(h)].p, nodes[he_to(h)].p);
            area += a.x * b.y - a.y * b.x;
            h = next_he(h);
            if h == h0 {
                break;
            }
        }
        areas.push(area);
        n_faces += 1;
    }
    // outer face: negative signed area
    let outer = (0..n_faces)
        .find(|&f| areas[f] < Q128::from_integer(0))
        .ok_or("no outer face found")?;
    let mut region_of_face = vec![usize::MAX; n_faces];
    let mut n_regions = 0usize;
    for f in 0..n_faces {
        if f != outer {
            region_of_face[f] = n_regions;
            n_regions += 1;
        }
    }

    // boundary intervals: hull arc from real node i spans [coord_i, coord_{i+1})
    let mut intervals = Vec::new();
    for i in 0..m {
        let c1 = coords[i];
        let c2w = coords[(i + 1) % m];
        // the arc from real node i to synthetic node i, directed ccw, has the
        // interior region on its left
        let h = 2 * real(i); // half-edge (2i -> 2i+1) is edge index 2i, dir 0
        let f = face_of[h];
        if f == outer {
            return Err("hull arc traced on the outer face".into());
        }
        let region = region_of_face[f];
        // split the span at the corner if it wraps into the next occurrence
        let (lo_pos, lo_t) = (c1.pos, c1.t);
        let hi = if c2w.pos == lo_pos && c2w > c1 {
            c2w.t
        } else {
            Q::from_integer(1)
        };
        intervals.push((lo_pos, lo_t, hi, region));
        // when the next real node is on a later occurrence, whole edges in
        // between belong to the same region
        let next_pos = if c2w > c1 { c2w.pos } else { c2w.pos + len };
        if !(c2w.pos == lo_pos && c2w > c1) {
            let mut p = lo_pos + 1;
            while p < next_pos {
                intervals.push((p % len, Q::from_integer(0), Q::from_integer(1), region));
                p += 1;
            }
            if c2w.t != Q::from_integer(0) {
                intervals.push((c2w.pos, Q::from_integer(0), c2w.t, region));
            }
        }
    }
    Ok(FaceRegions { n_regions, intervals })
}

/// Counterclockwise comparison of directions `o→a` and `o→b`.
fn angle_cmp(o: Pt, a: Pt, b: Pt) -> std::cmp::Ordering {
    let zero = Q128::from_integer(0);
    let half = |p: Pt| -> u8 {
        let (dx, dy) = (p.x - o.x, p.y - o.y);
        if dy > zero || (dy == zero && dx > zero) {
            0
        } else {
            1
        }
    };
    let (ha, hb) = (half(a), half(b));
    if ha != hb {
        return ha.cmp(&hb);
    }
    let c = cross(o, a, b);
    if c > zero {
        std::cmp::Ordering::Less
    } else if c < zero {
        std::cmp::Ordering::Greater
    } else {
        std::cmp::Ordering::Equal
    }
}

/// Certifies a standard pair: `Type1` when the representatives cross exactly
/// once; `Type2` when they are disjoint, the complement of the union is
/// connected and non-orientable, and each curve alone is non-separating.
pub fn is_standard_pair(
    c: &CurveDiagram,
    d: &CurveDiagram,
    glued: &GluedSurface,
) -> Result<StandardPairType, PolygonError> {
    for (name, curve) in [("first", c), ("second", d)] {
        let props = curve_properties(curve, glued)?;
        if !props.simple {
            return Err(PolygonError::InvalidCurve(format!("{name} curve is not simple")));
        }
        if !props.two_sided {
            return Err(PolygonError::InvalidCurve(format!("{name} curve is not two-sided")));
        }
    }
    let i = intersection_count(c, d, glued)?;
    if i == 1 {
        return Ok(StandardPairType::Type1);
    }
    if i != 0 {
        return Ok(StandardPairType::None);
    }
    let both = complement_profile(&[c.clone(), d.clone()], glued)?;
    if !(both.connected && both.non_orientable) {
        return Ok(StandardPairType::None);
    }
    let c_alone = complement_profile(std::slice::from_ref(c), glued)?;
    let d_alone = complement_profile(std::slice::from_ref(d), glued)?;
    if c_alone.connected && d_alone.connected {
        Ok(StandardPairType::Type2)
    } else {
        Ok(StandardPairType::None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nec::{Epimorphism, NecSignature, Sign};
    use crate::polygon::assemble_fundamental_domain;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    /// Identity cover of the torus word is not expressible (the signature
    /// machinery only makes non-orientable covers), so tests use the
    /// (1;+;[];{}) quotient only through glued surfaces; plain symbols are
    /// exercised through a one-copy Klein bottle.
    fn klein_identity() -> GluedSurface {
        let s = NecSignature::new(2, Sign::Minus, vec![], 0).unwrap();
        let theta = Epimorphism::trivial_cover(&s);
        assemble_fundamental_domain(&s, &theta, 0).unwrap()
    }

    #[test]
    fn chord_through_klein_core() {
        // Klein bottle a1 a1* a2 a2*: chord across a1/a1* is the core of a
        // crosscap: one-sided, simple.
        let glued = klein_identity();
        let c = CurveDiagram::new(vec![Chord {
            copy: 0,
            entry: ("a1".into(), q(1, 2)),
            exit: ("a1*".into(), q(1, 2)),
        }]);
        let p = curve_properties(&c, &glued).unwrap();
        assert!(p.simple);
        assert!(!p.two_sided, "crosscap core is one-sided");
        // cutting along the core of a crosscap leaves a connected surface
        let comp = complement_profile(&[c], &glued).unwrap();
        assert!(comp.connected);
    }

    /// Boundary of a Möbius neighbourhood of the a1-core: crosses the a1
    /// edge twice, two-sided and separating.
    fn mobius_boundary(t1: Q, t2: Q) -> CurveDiagram {
        CurveDiagram::new(vec![
            Chord { copy: 0, entry: ("a1".into(), t1), exit: ("a1".into(), t2) },
            Chord { copy: 0, entry: ("a1*".into(), t2), exit: ("a1*".into(), t1) },
        ])
    }

    #[test]
    fn two_sided_curve_on_klein() {
        let glued = klein_identity();
        let c = mobius_boundary(q(1, 3), q(2, 3));
        let p = curve_properties(&c, &glued).unwrap();
        assert!(p.simple);
        assert!(p.two_sided, "two flipped crossings cancel");
    }

    #[test]
    fn degenerate_and_invalid_curves() {
        let glued = klein_identity();
        // exit not identified with next entry
        let c = CurveDiagram::new(vec![Chord {
            copy: 0,
            entry: ("a1".into(), q(1, 2)),
            exit: ("a2".into(), q(1, 2)),
        }]);
        assert!(matches!(
            curve_properties(&c, &glued),
            Err(PolygonError::InvalidCurve(_))
        ));
        // position out of range
        let c = CurveDiagram::new(vec![Chord {
            copy: 0,
            entry: ("a1".into(), q(3, 2)),
            exit: ("a1*".into(), q(3, 2)),
        }]);
        assert!(matches!(curve_properties(&c, &glued), Err(PolygonError::InvalidCurve(_))));
    }

    #[test]
    fn crosscap_cores_cross_and_disjoint_cases() {
        let glued = klein_identity();
        let core = |label: &str, t: Q| {
            CurveDiagram::new(vec![Chord {
                copy: 0,
                entry: (label.to_string(), t),
                exit: (format!("{label}*"), t),
            }])
        };
        // a push-off of a one-sided curve meets it exactly once
        assert_eq!(intersection_count(&core("a1", q(1, 3)), &core("a1", q(2, 3)), &glued).unwrap(), 1);
        // cores of different crosscaps are disjoint
        assert_eq!(intersection_count(&core("a1", q(1, 2)), &core("a2", q(1, 2)), &glued).unwrap(), 0);
    }

    #[test]
    fn mobius_boundary_meets_core_twice() {
        // The Möbius boundary crosses the enclosed core twice (its class is
        // null-homologous, so the parity is 0 but the honest count is 2).
        let glued = klein_identity();
        let c1 = mobius_boundary(q(1, 4), q(3, 4));
        let c2 = CurveDiagram::new(vec![Chord {
            copy: 0,
            entry: ("a1".into(), q(1, 2)),
            exit: ("a1*".into(), q(1, 2)),
        }]);
        assert_eq!(intersection_count(&c1, &c2, &glued).unwrap(), 2);
    }

    #[test]
    fn general_position_violation_detected() {
        let glued = klein_identity();
        let c1 = CurveDiagram::new(vec![Chord {
            copy: 0,
            entry: ("a1".into(), q(1, 2)),
            exit: ("a1*".into(), q(1, 2)),
        }]);
        assert!(matches!(
            intersection_count(&c1, &c1, &glued),
            Err(PolygonError::NotInGeneralPosition(_))
        ));
    }

    #[test]
    fn complement_of_separating_cut() {
        // Cutting the Klein bottle along the Möbius boundary of the a1-core
        // leaves two Möbius bands: disconnected, non-orientable pieces.
        let glued = klein_identity();
        let c = mobius_boundary(q(1, 3), q(2, 3));
        let comp = complement_profile(&[c], &glued).unwrap();
        assert!(!comp.connected);
        assert!(comp.non_orientable);
        // the core itself does not separate
        let core = CurveDiagram::new(vec![Chord {
            copy: 0,
            entry: ("a1".into(), q(1, 2)),
            exit: ("a1*".into(), q(1, 2)),
        }]);
        let comp = complement_profile(&[core], &glued).unwrap();
        assert!(comp.connected);
    }

    #[test]
    fn curve_json_roundtrip() {
        let c = CurveDiagram::new(vec![Chord {
            copy: 1,
            entry: ("x1".into(), q(1, 3)),
            exit: ("x1'".into(), q(2, 3)),
        }]);
        let js = c.to_json();
        assert_eq!(CurveDiagram::from_json(&js).unwrap(), c);
    }
}
