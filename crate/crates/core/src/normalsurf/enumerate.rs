//! Exhaustive enumeration of normal curves.
//!
//! A normal curve crosses each edge and each boundary face at most once, so
//! the search space is finite. The walk alternates crossing points and faces;
//! candidate curves are grown depth-first with the embeddedness (chord
//! non-crossing) constraint enforced incrementally, and deduplicated by
//! requiring the start point to be the minimal crossing point of the curve
//! with a canonical starting face.
//!
//! Crossing points are packed into integers: interior edges first, then the
//! boundary edges in vertex-side order. On the boundary cycle of an interior
//! face, edges and rectangle sides alternate, so the condition forbidding a
//! segment between an interior edge and an adjacent boundary edge is exactly
//! "no segment between cyclically consecutive positions".

use super::{CrossPoint, FaceRef, Segment, SurfaceCurve};
use crate::polyhedra::{PEdgeId, TruncatedPolyhedron};

/// Result of an enumeration run.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub curves: Vec<SurfaceCurve>,
    /// True when the length limit cut the search short; the list is then a
    /// partial enumeration.
    pub truncated: bool,
}

/// Enumerate every normal curve on the truncated polyhedron with at most
/// `max_len` crossings, in a deterministic order.
pub fn enumerate_normal_curves(c: &TruncatedPolyhedron, max_len: usize) -> Enumeration {
    let mut walker = Walker::new(c, max_len, false);
    walker.run();
    let mut curves: Vec<SurfaceCurve> = walker
        .found
        .iter()
        .map(|trail| walker.decode(trail))
        .collect();
    curves.sort_by_key(curve_sort_key);
    Enumeration { curves, truncated: walker.truncated }
}

/// Enumerate normal curves that cross only interior edges (never meeting the
/// boundary faces), returning the edge sequences. Used by the angled-
/// structure verification.
pub fn enumerate_interior_normal_curves(
    c: &TruncatedPolyhedron,
    max_len: usize,
) -> Vec<Vec<PEdgeId>> {
    let mut walker = Walker::new(c, max_len, true);
    walker.run();
    let mut out: Vec<Vec<PEdgeId>> = walker
        .found
        .iter()
        .map(|trail| trail.iter().map(|&(p, _)| p).collect())
        .collect();
    out.sort();
    out
}

fn curve_sort_key(curve: &SurfaceCurve) -> (usize, Vec<(CrossPoint, FaceRef)>) {
    let pts: Vec<(CrossPoint, FaceRef)> = curve
        .segments
        .iter()
        .map(|s| (s.enter.unwrap(), s.face))
        .collect();
    (pts.len(), pts)
}

struct Walker<'a> {
    c: &'a TruncatedPolyhedron,
    max_len: usize,
    interior_only: bool,
    n_edges: usize,
    /// All faces: interior faces first, then one boundary face per vertex.
    faces: Vec<FaceRef>,
    /// Packed point ids around each face, in cyclic order.
    cycles: Vec<Vec<usize>>,
    /// The two face indices on either side of each point.
    point_faces: Vec<[usize; 2]>,
    /// Position of a point on a face's cycle (dense lookup).
    position: Vec<Vec<usize>>, // [face][point] with usize::MAX for absent

    used: Vec<bool>,
    bface_used: Vec<bool>,
    chords: Vec<Vec<(usize, usize)>>,
    /// (point, face index entered after that point)
    trail: Vec<(usize, usize)>,
    found: Vec<Vec<(usize, usize)>>,
    truncated: bool,
}

impl<'a> Walker<'a> {
    fn new(c: &'a TruncatedPolyhedron, max_len: usize, interior_only: bool) -> Self {
        let n_edges = c.edges.len();
        let n_points = n_edges + 4 * c.vertices.len();
        let side_id = |v: usize, k: usize| n_edges + 4 * v + k;

        let mut faces: Vec<FaceRef> = (0..c.faces.len()).map(FaceRef::Interior).collect();
        let n_interior = faces.len();
        faces.extend((0..c.vertices.len()).map(FaceRef::Boundary));

        let mut cycles = vec![Vec::new(); faces.len()];
        for (fi, face) in c.faces.iter().enumerate() {
            let mut cyc = Vec::with_capacity(2 * face.ring.len());
            for &(e, v) in &face.ring {
                cyc.push(e);
                let k = c.vertices[v].faces.iter().position(|&f| f == fi).unwrap();
                cyc.push(side_id(v, k));
            }
            cycles[fi] = cyc;
        }
        for (v, _) in c.vertices.iter().enumerate() {
            cycles[n_interior + v] = (0..4).map(|k| side_id(v, k)).collect();
        }

        let mut point_faces = vec![[usize::MAX; 2]; n_points];
        for (e, edge) in c.edges.iter().enumerate() {
            point_faces[e] = [edge.white, edge.shaded];
        }
        for (v, vert) in c.vertices.iter().enumerate() {
            for k in 0..4 {
                point_faces[side_id(v, k)] = [vert.faces[k], n_interior + v];
            }
        }

        let mut position = vec![vec![usize::MAX; n_points]; faces.len()];
        for (fi, cyc) in cycles.iter().enumerate() {
            for (i, &p) in cyc.iter().enumerate() {
                position[fi][p] = i;
            }
        }

        Walker {
            c,
            max_len,
            interior_only,
            n_edges,
            faces,
            cycles,
            point_faces,
            position,
            used: vec![false; n_points],
            bface_used: vec![false; c.vertices.len()],
            chords: vec![Vec::new(); c.faces.len() + c.vertices.len()],
            trail: Vec::new(),
            found: Vec::new(),
            truncated: false,
        }
    }

    fn run(&mut self) {
        let n_interior_faces = self.c.faces.len();
        let start_limit = if self.interior_only {
            self.n_edges
        } else {
            self.point_faces.len()
        };
        for p0 in 0..start_limit {
            for side in 0..2 {
                let f0 = self.point_faces[p0][side];
                if self.interior_only && f0 >= n_interior_faces {
                    continue;
                }
                self.used[p0] = true;
                if f0 >= n_interior_faces {
                    self.bface_used[f0 - n_interior_faces] = true;
                }
                self.trail.push((p0, f0));
                self.extend(p0, f0);
                self.trail.pop();
                if f0 >= n_interior_faces {
                    self.bface_used[f0 - n_interior_faces] = false;
                }
                self.used[p0] = false;
            }
        }
    }

    fn extend(&mut self, p: usize, face: usize) {
        let n_interior_faces = self.c.faces.len();
        let cycle_len = self.cycles[face].len();
        let p_pos = self.position[face][p];
        debug_assert_ne!(p_pos, usize::MAX);
        let p0 = self.trail[0].0;
        let interior_face = face < n_interior_faces;
        for q_pos in 0..cycle_len {
            if q_pos == p_pos {
                continue;
            }
            // a segment between an interior edge and an adjacent boundary
            // edge is exactly a segment between consecutive cycle positions
            if interior_face {
                let diff = (q_pos + cycle_len - p_pos) % cycle_len;
                if diff == 1 || diff == cycle_len - 1 {
                    continue;
                }
            }
            let q = self.cycles[face][q_pos];
            let chord = (p_pos.min(q_pos), q_pos.max(p_pos));
            if self.chords[face]
                .iter()
                .any(|&c0| super::chords_cross(c0, chord, cycle_len))
            {
                continue;
            }
            if q == p0 {
                // closing: must arrive on the other side of the start point
                let f0 = self.trail[0].1;
                if face != f0 && self.point_faces[p0].contains(&face) && self.trail.len() >= 2 {
                    // canonical emission: the starting face is the smaller
                    if f0 < face {
                        self.found.push(self.trail.clone());
                    }
                }
                continue;
            }
            if q < p0 || self.used[q] {
                continue;
            }
            if self.interior_only && q >= self.n_edges {
                continue;
            }
            if self.trail.len() >= self.max_len {
                self.truncated = true;
                continue;
            }
            let next_face = self.other_face(q, face);
            if self.interior_only && next_face >= n_interior_faces {
                continue;
            }
            if next_face >= n_interior_faces {
                let v = next_face - n_interior_faces;
                if self.bface_used[v] {
                    continue;
                }
                self.bface_used[v] = true;
            }
            self.used[q] = true;
            self.chords[face].push(chord);
            self.trail.push((q, next_face));

            self.extend(q, next_face);

            self.trail.pop();
            self.chords[face].pop();
            self.used[q] = false;
            if next_face >= n_interior_faces {
                self.bface_used[next_face - n_interior_faces] = false;
            }
        }
    }

    fn other_face(&self, p: usize, f: usize) -> usize {
        let [a, b] = self.point_faces[p];
        if a == f {
            b
        } else {
            a
        }
    }

    fn decode(&self, trail: &[(usize, usize)]) -> SurfaceCurve {
        let n = trail.len();
        let point = |id: usize| -> CrossPoint {
            if id < self.n_edges {
                CrossPoint::Edge(id)
            } else {
                let v = (id - self.n_edges) / 4;
                let k = (id - self.n_edges) % 4;
                CrossPoint::Side { vertex: v, on_face: self.c.vertices[v].faces[k] }
            }
        };
        let segments: Vec<Segment> = (0..n)
            .map(|i| {
                let (p, f) = trail[i];
                let (q, _) = trail[(i + 1) % n];
                Segment { face: self.faces[f], enter: Some(point(p)), exit: Some(point(q)) }
            })
            .collect();
        SurfaceCurve::closed(segments)
    }
}
