//! Polygon complexes: closed surfaces built from marked polygons with
//! identified edges, their classification, and the induced action of a
//! cell-permuting homeomorphism on `H^1(-; Z_2)` with the intersection form.

use crate::linalg2::{kernel_basis, BitVec, Echelon};

/// A boundary-edge occurrence: face index and position in the face word.
pub(crate) type Occ = (usize, usize);

/// An identified edge pair. `flip = false` means the head-to-tail
/// (orientable, `ζζ'`) identification, `flip = true` the same-direction
/// (`αα*` or reflection-axis) identification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct EdgePair {
    pub occs: [Occ; 2],
    pub flip: bool,
}

/// A closed-surface complex: `faces[f]` has `face_lens[f]` boundary edges,
/// every occurrence belongs to exactly one pair.
#[derive(Debug, Clone)]
pub(crate) struct PolyComplex {
    pub face_lens: Vec<usize>,
    pub pairs: Vec<EdgePair>,
    occ_offset: Vec<usize>,
    occ_pair: Vec<(usize, u8)>,
    vertex_of_corner: Vec<usize>,
    n_vertices: usize,
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
            r
        } else {
            x
        }
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Union-find with a Z_2 weight on each node relative to its root.
struct ParityDsu {
    parent: Vec<usize>,
    parity: Vec<bool>,
    odd_cycle: Vec<bool>,
}

impl ParityDsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), parity: vec![false; n], odd_cycle: vec![false; n] }
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
                self.odd_cycle[ra] = true;
            }
        } else {
            self.parent[ra] = rb;
            self.parity[ra] = pa ^ pb ^ rel;
            self.odd_cycle[rb] |= self.odd_cycle[ra];
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub orientable: bool,
    pub genus: u64,
    pub euler_characteristic: i64,
}

impl PolyComplex {
    /// Validates that the pairs form a perfect matching on all occurrences
    /// and precomputes vertex classes.
    pub fn new(face_lens: Vec<usize>, pairs: Vec<EdgePair>) -> Result<Self, String> {
        let mut occ_offset = vec![0usize; face_lens.len() + 1];
        for (f, &len) in face_lens.iter().enumerate() {
            if len == 0 {
                return Err("empty face".into());
            }
            occ_offset[f + 1] = occ_offset[f] + len;
        }
        let total = occ_offset[face_lens.len()];
        let occ_id = |o: Occ| -> Result<usize, String> {
            if o.0 >= face_lens.len() || o.1 >= face_lens[o.0] {
                return Err(format!("occurrence {o:?} out of range"));
            }
            Ok(occ_offset[o.0] + o.1)
        };
        let mut occ_pair = vec![(usize::MAX, 0u8); total];
        for (e, p) in pairs.iter().enumerate() {
            for (side, &o) in p.occs.iter().enumerate() {
                let id = occ_id(o)?;
                if occ_pair[id].0 != usize::MAX {
                    return Err(format!("occurrence {o:?} identified twice"));
                }
                occ_pair[id] = (e, side as u8);
            }
            if p.occs[0] == p.occs[1] {
                return Err(format!("occurrence {:?} identified with itself", p.occs[0]));
            }
        }
        if occ_pair.iter().any(|&(e, _)| e == usize::MAX) {
            return Err("not a closed surface: unpaired boundary edge".into());
        }

        // Corner j of face f sits at the start of edge occurrence j. The
        // head-to-tail rule identifies start(o1) with end(o2); the
        // same-direction rule identifies start with start, end with end.
        let mut dsu = Dsu::new(total);
        let start = |o: Occ| occ_offset[o.0] + o.1;
        let end = |o: Occ| occ_offset[o.0] + (o.1 + 1) % face_lens[o.0];
        for p in &pairs {
            let (o1, o2) = (p.occs[0], p.occs[1]);
            if p.flip {
                dsu.union(start(o1), start(o2));
                dsu.union(end(o1), end(o2));
            } else {
                dsu.union(start(o1), end(o2));
                dsu.union(end(o1), start(o2));
            }
        }
        let mut vertex_of_corner = vec![usize::MAX; total];
        let mut n_vertices = 0;
        for c in 0..total {
            let r = dsu.find(c);
            if vertex_of_corner[r] == usize::MAX {
                vertex_of_corner[r] = n_vertices;
                n_vertices += 1;
            }
            vertex_of_corner[c] = vertex_of_corner[r];
        }
        Ok(Self { face_lens, pairs, occ_offset, occ_pair, vertex_of_corner, n_vertices })
    }

    pub fn occ_index(&self, o: Occ) -> usize {
        self.occ_offset[o.0] + o.1
    }

    pub fn total_occurrences(&self) -> usize {
        *self.occ_offset.last().unwrap()
    }

    /// The pair id and side of an occurrence.
    pub fn pair_of(&self, o: Occ) -> (usize, u8) {
        self.occ_pair[self.occ_index(o)]
    }

    /// The occurrence glued to `o` and the flip bit of that identification.
    pub fn partner(&self, o: Occ) -> (Occ, bool) {
        let (e, side) = self.pair_of(o);
        let p = &self.pairs[e];
        (p.occs[1 - side as usize], p.flip)
    }

    pub fn n_edges(&self) -> usize {
        self.pairs.len()
    }

    pub fn n_faces(&self) -> usize {
        self.face_lens.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    fn is_connected(&self) -> bool {
        if self.n_faces() == 0 {
            return false;
        }
        let mut dsu = Dsu::new(self.n_faces());
        for p in &self.pairs {
            dsu.union(p.occs[0].0, p.occs[1].0);
        }
        let r = dsu.find(0);
        (1..self.n_faces()).all(|f| dsu.find(f) == r)
    }

    /// Euler characteristic, orientability and genus of the closed surface.
    pub fn classify(&self) -> Result<Classification, String> {
        if !self.is_connected() {
            return Err("complex is not connected".into());
        }
        let chi =
            self.n_vertices as i64 - self.n_edges() as i64 + self.n_faces() as i64;
        // Orientable iff the face orientations can be chosen so that every
        // identification is head-to-tail: parity union-find over faces.
        let mut dsu = ParityDsu::new(self.n_faces());
        for p in &self.pairs {
            dsu.union(p.occs[0].0, p.occs[1].0, p.flip);
        }
        let (root, _) = dsu.find(0);
        let orientable = !dsu.odd_cycle[root];
        let genus = if orientable {
            debug_assert!(chi % 2 == 0);
            ((2 - chi) / 2) as u64
        } else {
            (2 - chi) as u64
        };
        Ok(Classification { orientable, genus, euler_characteristic: chi })
    }
}

/// The `Z_2` cohomology package of a closed polygon complex: a basis of
/// `H^1`, the intersection pairing and the one-sidedness functional in that
/// basis, and the matrix of a cell-permuting map.
#[derive(Debug, Clone)]
pub(crate) struct Homology1 {
    /// Chosen cocycle representatives (coordinates over subdivision 1-cells).
    pub basis: Vec<BitVec>,
    /// Gram matrix of the mod-2 intersection pairing, `gram[i][j]`.
    pub gram: Vec<BitVec>,
    /// `q[i] = <basis_i, basis_i>`, the one-sidedness functional.
    pub q: BitVec,
    coboundaries: Echelon,
    pub tri_front_back: Vec<(usize, usize)>,
    n_sub_edges: usize,
}

/// Barycentric-style subdivision: two triangles per occurrence, vertices
/// ranked corner < edge midpoint < face center so the triangles carry a
/// consistent vertex order for the cup product.
pub(crate) struct Subdivision {
    pub complex: PolyComplex,
    n_sub_vertices: usize,
    pub n_sub_edges: usize,
    /// Per occurrence: sub-edge ids (start half, end half, mid-center).
    half_start: Vec<usize>,
    half_end: Vec<usize>,
    mid_center: Vec<usize>,
    corner_center: Vec<usize>,
    /// Triangles as (front edge, back edge, third edge) = ((c,m),(m,z),(c,z)).
    pub tris: Vec<(usize, usize, usize)>,
    sub_edge_ends: Vec<(usize, usize)>,
}

impl Subdivision {
    pub fn new(complex: PolyComplex) -> Self {
        let total = complex.total_occurrences();
        let nv = complex.n_vertices();
        let ne = complex.n_edges();
        let nf = complex.n_faces();
        let n_sub_vertices = nv + ne + nf;
        let vert_corner = |c: usize| c;
        let vert_mid = |e: usize| nv + e;
        let vert_center = |f: usize| nv + ne + f;

        // Sub-edges: two halves per identified edge, one mid-center edge per
        // occurrence, one corner-center edge per corner.
        let mut half_start = vec![usize::MAX; total];
        let mut half_end = vec![usize::MAX; total];
        let mut sub_edge_ends: Vec<(usize, usize)> = Vec::new();
        for (e, p) in complex.pairs.iter().enumerate() {
            let (o1, o2) = (p.occs[0], p.occs[1]);
            let i1 = complex.occ_index(o1);
            let i2 = complex.occ_index(o2);
            let start_v = |o: Occ| complex.vertex_of_corner[complex.occ_index(o)];
            let end_v = |o: Occ| {
                complex.vertex_of_corner
                    [complex.occ_offset[o.0] + (o.1 + 1) % complex.face_lens[o.0]]
            };
            let s_id = sub_edge_ends.len();
            sub_edge_ends.push((vert_corner(start_v(o1)), vert_mid(e)));
            let e_id = sub_edge_ends.len();
            sub_edge_ends.push((vert_corner(end_v(o1)), vert_mid(e)));
            half_start[i1] = s_id;
            half_end[i1] = e_id;
            if p.flip {
                half_start[i2] = s_id;
                half_end[i2] = e_id;
            } else {
                half_start[i2] = e_id;
                half_end[i2] = s_id;
            }
        }
        let mut mid_center = vec![usize::MAX; total];
        let mut corner_center = vec![usize::MAX; total];
        for f in 0..nf {
            for pos in 0..complex.face_lens[f] {
                let o = complex.occ_index((f, pos));
                let (e, _) = complex.occ_pair[o];
                mid_center[o] = sub_edge_ends.len();
                sub_edge_ends.push((vert_mid(e), vert_center(f)));
                corner_center[o] = sub_edge_ends.len();
                sub_edge_ends
                    .push((vert_corner(complex.vertex_of_corner[o]), vert_center(f)));
            }
        }

        // Triangles per occurrence: (start corner, mid, center) and
        // (end corner, mid, center); fronts are the corner-mid halves.
        let mut tris = Vec::with_capacity(2 * total);
        for f in 0..nf {
            for pos in 0..complex.face_lens[f] {
                let o = complex.occ_index((f, pos));
                let o_next = complex.occ_index((f, (pos + 1) % complex.face_lens[f]));
                tris.push((half_start[o], mid_center[o], corner_center[o]));
                tris.push((half_end[o], mid_center[o], corner_center[o_next]));
            }
        }
        let n_sub_edges = sub_edge_ends.len();
        Subdivision {
            complex,
            n_sub_vertices,
            n_sub_edges,
            half_start,
            half_end,
            mid_center,
            corner_center,
            tris,
            sub_edge_ends,
        }
    }

    /// The image of each sub-edge under a map sending occurrence `o` of each
    /// face to `occ_map(o)` (a bijection of occurrences respecting pairs).
    pub fn sub_edge_map(&self, occ_map: &dyn Fn(Occ) -> Occ) -> Vec<usize> {
        let c = &self.complex;
        let mut out = vec![usize::MAX; self.n_sub_edges];
        for f in 0..c.n_faces() {
            for pos in 0..c.face_lens[f] {
                let o = (f, pos);
                let oi = c.occ_index(o);
                let o2 = occ_map(o);
                let oi2 = c.occ_index(o2);
                out[self.half_start[oi]] = self.half_start[oi2];
                out[self.half_end[oi]] = self.half_end[oi2];
                out[self.mid_center[oi]] = self.mid_center[oi2];
                out[self.corner_center[oi]] = self.corner_center[oi2];
            }
        }
        debug_assert!(out.iter().all(|&x| x != usize::MAX));
        out
    }

    /// Computes `H^1(-; Z_2)` with the cup-product intersection pairing.
    pub fn homology(&self) -> Homology1 {
        let n = self.n_sub_edges;
        // Cocycles: for each triangle, the sum of its three edges vanishes.
        let mut constraints = Vec::with_capacity(self.tris.len());
        for &(a, b, c) in &self.tris {
            let mut row = BitVec::zeros(n);
            // a triangle may repeat an edge only if degenerate; ours never do
            row.set(a, !row.get(a));
            row.set(b, !row.get(b));
            row.set(c, !row.get(c));
            constraints.push(row);
        }
        let cocycles = kernel_basis(&constraints, n);
        // Coboundaries: star of each subdivision vertex.
        let mut coboundaries = Echelon::new();
        let mut star = vec![BitVec::zeros(n); self.n_sub_vertices];
        for (e, &(u, v)) in self.sub_edge_ends.iter().enumerate() {
            let cur = star[u].get(e);
            star[u].set(e, !cur);
            let cur = star[v].get(e);
            star[v].set(e, !cur);
        }
        for s in star {
            coboundaries.insert(s);
        }
        // Select representatives of H^1 = cocycles / coboundaries.
        let mut chosen: Vec<BitVec> = Vec::new();
        let mut span = coboundaries.clone();
        for z in cocycles {
            if span.insert(z.clone()) {
                chosen.push(z);
            }
        }
        let g = chosen.len();
        let mut gram = vec![BitVec::zeros(g); g];
        let mut q = BitVec::zeros(g);
        let fronts_backs: Vec<(usize, usize)> =
            self.tris.iter().map(|&(a, b, _)| (a, b)).collect();
        for i in 0..g {
            for j in 0..g {
                let mut acc = false;
                for &(fr, bk) in &fronts_backs {
                    acc ^= chosen[i].get(fr) & chosen[j].get(bk);
                }
                if acc {
                    gram[i].set(j, true);
                }
            }
        }
        for i in 0..g {
            if gram[i].get(i) {
                q.set(i, true);
            }
        }
        // The cup product is symmetric on classes; check it landed that way.
        for i in 0..g {
            for j in 0..g {
                debug_assert_eq!(gram[i].get(j), gram[j].get(i));
            }
        }
        Homology1 {
            basis: chosen,
            gram,
            q,
            coboundaries,
            tri_front_back: fronts_backs,
            n_sub_edges: n,
        }
    }
}

impl Homology1 {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Matrix (rows = images) of the map induced on `H^1` by pushing
    /// cochains forward along the cell map `sub_edge_map` (image of each
    /// sub-edge under the *inverse* homeomorphism).
    pub fn induced_matrix(&self, sub_edge_preimage: &[usize]) -> Vec<BitVec> {
        let g = self.rank();
        let mut rows = Vec::with_capacity(g);
        for b in &self.basis {
            let mut img = BitVec::zeros(self.n_sub_edges);
            for e in 0..self.n_sub_edges {
                if b.get(sub_edge_preimage[e]) {
                    img.set(e, !img.get(e));
                }
            }
            let coeff = crate::linalg2::coordinates_mod(&self.basis, &self.coboundaries, &img)
                .expect("image of a cocycle class must be a cocycle class");
            let mut row = BitVec::zeros(g);
            for (j, &c) in coeff.iter().enumerate() {
                if c {
                    row.set(j, true);
                }
            }
            rows.push(row);
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_face(word_pairs: &[(usize, usize, bool)], len: usize) -> PolyComplex {
        let pairs = word_pairs
            .iter()
            .map(|&(a, b, flip)| EdgePair { occs: [(0, a), (0, b)], flip })
            .collect();
        PolyComplex::new(vec![len], pairs).unwrap()
    }

    #[test]
    fn classify_classic_words() {
        // torus a b a' b'
        let torus = one_face(&[(0, 2, false), (1, 3, false)], 4);
        let c = torus.classify().unwrap();
        assert_eq!(c, Classification { orientable: true, genus: 1, euler_characteristic: 0 });

        // projective plane a a*
        let rp2 = one_face(&[(0, 1, true)], 2);
        let c = rp2.classify().unwrap();
        assert_eq!(c, Classification { orientable: false, genus: 1, euler_characteristic: 1 });

        // klein bottle a a* b b*
        let klein = one_face(&[(0, 1, true), (2, 3, true)], 4);
        let c = klein.classify().unwrap();
        assert_eq!(c, Classification { orientable: false, genus: 2, euler_characteristic: 0 });

        // sphere a a'
        let sphere = one_face(&[(0, 1, false)], 2);
        let c = sphere.classify().unwrap();
        assert_eq!(c, Classification { orientable: true, genus: 0, euler_characteristic: 2 });
    }

    #[test]
    fn homology_of_torus_and_klein() {
        let torus = one_face(&[(0, 2, false), (1, 3, false)], 4);
        let h = Subdivision::new(torus).homology();
        assert_eq!(h.rank(), 2);
        // symplectic pairing, no one-sided classes
        assert!(h.q.is_zero());
        assert!(h.gram[0].get(1) && h.gram[1].get(0));
        assert!(!h.gram[0].get(0) && !h.gram[1].get(1));

        let klein = one_face(&[(0, 1, true), (2, 3, true)], 4);
        let h = Subdivision::new(klein).homology();
        assert_eq!(h.rank(), 2);
        // odd form: there is a one-sided class
        assert!(!h.q.is_zero());
    }

    #[test]
    fn homology_rank_matches_genus() {
        // N_3 = a a* b b* c c*
        let n3 = one_face(&[(0, 1, true), (2, 3, true), (4, 5, true)], 6);
        assert_eq!(n3.classify().unwrap().genus, 3);
        let h = Subdivision::new(n3).homology();
        assert_eq!(h.rank(), 3);
        // Gram must be nondegenerate: rows independent.
        let mut e = Echelon::new();
        for r in &h.gram {
            assert!(e.insert(r.clone()));
        }
    }
}
