//! Normal and admissible curves and disks in the truncated polyhedra, their
//! combinatorial areas, and the certified length bounds they yield.
//!
//! Curves are stored combinatorially: a segment is a chord of one face with
//! endpoints on crossing points, which are either interior edges or boundary
//! edges (the sides of the boundary rectangles). Combinatorial area follows
//! the right-angled external-angle formula
//! `a(D) = sum(eps) + pi * |bD on dM| - 2 pi + 3 pi * |bD off dP|`, every
//! term an exact multiple of pi/6, so strict threshold comparisons are sound.

mod arcs;
mod disks;
mod enumerate;
mod surface;

pub use arcs::{progressive_arc_bound, CuspArc, CuspArcSegment, ProgressiveType};
pub use disks::{
    bigon_annulus, boundary_bigon_curve, face_parallel_triangle, parallel_triangle_pair,
    vertex_link_curve, vertex_link_torus,
};
pub use enumerate::{
    enumerate_interior_normal_curves, enumerate_normal_curves, Enumeration,
};
pub use surface::{gauss_bonnet, GaussBonnetReport, GluedSurface, Join, SegAddr};

use crate::angle::Angle;
use crate::error::SurfaceError;
use crate::polyhedra::{
    FaceColor, PEdgeId, PFaceId, PolyId, TruncatedPolyhedron, VertexId,
};
use crate::slopes::{LengthBound, Provenance, SlopeCoords};
use serde::{Deserialize, Serialize};

/// A face of the truncated polyhedron: interior, or the boundary rectangle
/// at an ideal vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FaceRef {
    Interior(PFaceId),
    Boundary(VertexId),
}

/// Where a curve crosses the 1-skeleton: an interior edge, or a boundary
/// edge (the side of a boundary rectangle lying on an interior face).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CrossPoint {
    Edge(PEdgeId),
    Side { vertex: VertexId, on_face: PFaceId },
}

/// The two faces on either side of a crossing point.
pub fn point_faces(c: &TruncatedPolyhedron, p: CrossPoint) -> [FaceRef; 2] {
    match p {
        CrossPoint::Edge(e) => [
            FaceRef::Interior(c.edges[e].white),
            FaceRef::Interior(c.edges[e].shaded),
        ],
        CrossPoint::Side { vertex, on_face } => {
            [FaceRef::Interior(on_face), FaceRef::Boundary(vertex)]
        }
    }
}

/// One arc of intersection between a curve and a single face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub face: FaceRef,
    /// `None` marks a free end inside the face (only at the two ends of an
    /// open arc, where the boundary continues into the polyhedron interior).
    pub enter: Option<CrossPoint>,
    pub exit: Option<CrossPoint>,
}

/// A curve on the boundary of a truncated polyhedron: a cyclic (closed) or
/// open sequence of segments, consecutive segments sharing their crossing
/// point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceCurve {
    pub segments: Vec<Segment>,
    pub closed: bool,
}

impl SurfaceCurve {
    pub fn closed(segments: Vec<Segment>) -> SurfaceCurve {
        SurfaceCurve { segments, closed: true }
    }

    pub fn open(segments: Vec<Segment>) -> SurfaceCurve {
        SurfaceCurve { segments, closed: false }
    }

    /// Crossing events along the curve (each interior point once).
    pub fn crossings(&self) -> impl Iterator<Item = CrossPoint> + '_ {
        let skip_first = usize::from(!self.closed);
        self.segments
            .iter()
            .skip(skip_first)
            .filter_map(|s| s.enter)
    }

    pub fn interior_edge_crossings(&self) -> usize {
        self.crossings()
            .filter(|p| matches!(p, CrossPoint::Edge(_)))
            .count()
    }

    pub fn boundary_segments(&self) -> usize {
        self.segments
            .iter()
            .filter(|s| matches!(s.face, FaceRef::Boundary(_)))
            .count()
    }

    fn check_structure(&self, c: &TruncatedPolyhedron) -> Result<(), SurfaceError> {
        if self.segments.is_empty() {
            return Err(SurfaceError::BadReference("curve with no segments".into()));
        }
        let bad = |msg: String| Err(SurfaceError::BadReference(msg));
        let valid_point = |p: CrossPoint| match p {
            CrossPoint::Edge(e) => e < c.edges.len(),
            CrossPoint::Side { vertex, on_face } => {
                vertex < c.vertices.len()
                    && c.vertices[vertex].faces.contains(&on_face)
            }
        };
        let valid_face = |f: FaceRef| match f {
            FaceRef::Interior(i) => i < c.faces.len(),
            FaceRef::Boundary(v) => v < c.vertices.len(),
        };
        for (i, s) in self.segments.iter().enumerate() {
            if !valid_face(s.face) {
                return bad(format!("segment {i} face out of range"));
            }
            for p in [s.enter, s.exit].into_iter().flatten() {
                if !valid_point(p) {
                    return bad(format!("segment {i} references a bad crossing point"));
                }
                if !point_faces(c, p).contains(&s.face) {
                    return bad(format!("segment {i} endpoint not on its face"));
                }
            }
        }
        let n = self.segments.len();
        let pairs: Vec<(usize, usize)> = if self.closed {
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        } else {
            (0..n - 1).map(|i| (i, i + 1)).collect()
        };
        for (i, j) in pairs {
            let (a, b) = (self.segments[i], self.segments[j]);
            match (a.exit, b.enter) {
                (Some(p), Some(q)) if p == q => {
                    let fs = point_faces(c, p);
                    if !(fs.contains(&a.face) && fs.contains(&b.face) && a.face != b.face) {
                        return bad(format!("segments {i},{j} do not sit on both sides of their crossing"));
                    }
                }
                _ => return bad(format!("segments {i},{j} do not share a crossing point")),
            }
        }
        if self.closed {
            if self.segments.iter().any(|s| s.enter.is_none() || s.exit.is_none()) {
                return Err(SurfaceError::NotClosed);
            }
        } else {
            if self.segments[0].enter.is_some() || self.segments[n - 1].exit.is_some() {
                return bad("open arc must have free ends at both ends".into());
            }
            for (i, s) in self.segments.iter().enumerate() {
                if (i > 0 && s.enter.is_none()) || (i + 1 < n && s.exit.is_none()) {
                    return bad("free end in the middle of an arc".into());
                }
            }
        }
        Ok(())
    }
}

/// Outcome of the normality check: the numbered conditions are checked in
/// order, and simplicity (embeddedness face by face) afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalCheck {
    Normal,
    Violates { condition: u8, detail: String },
    NotSimple { detail: String },
}

impl NormalCheck {
    pub fn is_normal(&self) -> bool {
        matches!(self, NormalCheck::Normal)
    }
}

/// Check the normal-curve conditions for a closed curve on the boundary of
/// the truncated polyhedron:
/// 1. transverse to the edges (guaranteed by the representation),
/// 2. no segment returns to the edge it came from, nor runs between an
///    interior edge and an adjacent boundary edge,
/// 3. the curve does not lie in a single face,
/// 4. each edge (interior or boundary) is crossed at most once,
/// 5. each boundary face is met at most once.
pub fn is_normal(curve: &SurfaceCurve, c: &TruncatedPolyhedron) -> Result<NormalCheck, SurfaceError> {
    if !curve.closed {
        return Err(SurfaceError::NotClosed);
    }
    curve.check_structure(c)?;
    if let Some(v) = condition_2(curve, c) {
        return Ok(v);
    }
    let first_face = curve.segments[0].face;
    if curve.segments.iter().all(|s| s.face == first_face) {
        return Ok(NormalCheck::Violates { condition: 3, detail: "curve lies in one face".into() });
    }
    if let Some(v) = condition_4(curve) {
        return Ok(v);
    }
    let mut bfaces: Vec<VertexId> = curve
        .segments
        .iter()
        .filter_map(|s| match s.face {
            FaceRef::Boundary(v) => Some(v),
            _ => None,
        })
        .collect();
    bfaces.sort_unstable();
    for w in bfaces.windows(2) {
        if w[0] == w[1] {
            return Ok(NormalCheck::Violates {
                condition: 5,
                detail: format!("boundary face at vertex {} met twice", w[0]),
            });
        }
    }
    if let Some(detail) = interleaving(curve, c) {
        return Ok(NormalCheck::NotSimple { detail });
    }
    Ok(NormalCheck::Normal)
}

/// Condition 2 for every segment of a (closed or open) curve.
fn condition_2(curve: &SurfaceCurve, c: &TruncatedPolyhedron) -> Option<NormalCheck> {
    for (i, s) in curve.segments.iter().enumerate() {
        let (p, q) = match (s.enter, s.exit) {
            (Some(p), Some(q)) => (p, q),
            _ => continue,
        };
        if p == q {
            return Some(NormalCheck::Violates {
                condition: 2,
                detail: format!("segment {i} has both endpoints on one edge"),
            });
        }
        if let FaceRef::Interior(_) = s.face {
            let adjacent = |e: PEdgeId, v: VertexId, on_face: PFaceId| -> bool {
                let vert = &c.vertices[v];
                let k = vert.faces.iter().position(|&f| f == on_face).unwrap();
                vert.edges[k] == e || vert.edges[(k + 1) % 4] == e
            };
            let viol = match (p, q) {
                (CrossPoint::Edge(e), CrossPoint::Side { vertex, on_face })
                | (CrossPoint::Side { vertex, on_face }, CrossPoint::Edge(e)) => {
                    adjacent(e, vertex, on_face)
                }
                _ => false,
            };
            if viol {
                return Some(NormalCheck::Violates {
                    condition: 2,
                    detail: format!("segment {i} joins an interior edge to an adjacent boundary edge"),
                });
            }
        }
    }
    None
}

fn condition_4(curve: &SurfaceCurve) -> Option<NormalCheck> {
    let mut pts: Vec<CrossPoint> = curve.crossings().collect();
    pts.sort_unstable();
    for w in pts.windows(2) {
        if w[0] == w[1] {
            return Some(NormalCheck::Violates {
                condition: 4,
                detail: format!("edge crossed twice: {:?}", w[0]),
            });
        }
    }
    None
}

/// Cyclic boundary positions of a face; used for embeddedness checks.
pub(crate) fn face_positions(c: &TruncatedPolyhedron, f: FaceRef) -> Vec<CrossPoint> {
    match f {
        FaceRef::Interior(fi) => {
            let mut out = Vec::new();
            for &(e, v) in &c.faces[fi].ring {
                out.push(CrossPoint::Edge(e));
                out.push(CrossPoint::Side { vertex: v, on_face: fi });
            }
            out
        }
        FaceRef::Boundary(v) => c.vertices[v]
            .faces
            .iter()
            .map(|&fi| CrossPoint::Side { vertex: v, on_face: fi })
            .collect(),
    }
}

/// Detect crossing chords among the curve's segments within each face.
fn interleaving(curve: &SurfaceCurve, c: &TruncatedPolyhedron) -> Option<String> {
    let mut by_face: std::collections::BTreeMap<FaceRef, Vec<(usize, usize)>> = Default::default();
    for s in &curve.segments {
        let (p, q) = match (s.enter, s.exit) {
            (Some(p), Some(q)) => (p, q),
            _ => continue,
        };
        let cycle = face_positions(c, s.face);
        let pos = |x: CrossPoint| cycle.iter().position(|&y| y == x);
        if let (Some(a), Some(b)) = (pos(p), pos(q)) {
            by_face.entry(s.face).or_default().push((a, b));
        }
    }
    for (f, chords) in by_face {
        let m = face_positions(c, f).len();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if chords_cross(chords[i], chords[j], m) {
                    return Some(format!("segments cross inside face {f:?}"));
                }
            }
        }
    }
    None
}

pub(crate) fn chords_cross(a: (usize, usize), b: (usize, usize), m: usize) -> bool {
    let between = |x: usize, lo: usize, hi: usize| -> bool {
        // strictly inside the cyclic interval (lo, hi)
        let span = (hi + m - lo) % m;
        let off = (x + m - lo) % m;
        off > 0 && off < span
    };
    let &(a1, a2) = &a;
    let (lo, hi) = (a1, a2);
    let inside_b1 = between(b.0, lo, hi);
    let inside_b2 = between(b.1, lo, hi);
    inside_b1 != inside_b2
}

/// The boundary of an admissible disk: a closed curve on the polyhedron
/// boundary, or arcs joined through the polyhedron interior in the cyclic
/// order given (one interior arc between consecutive surface arcs).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiskBoundary {
    Closed(SurfaceCurve),
    Arcs(Vec<SurfaceCurve>),
}

/// An immersed disk in one polyhedron, described by its boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleDisk {
    pub poly: PolyId,
    pub boundary: DiskBoundary,
}

impl AdmissibleDisk {
    pub fn normal(poly: PolyId, curve: SurfaceCurve) -> AdmissibleDisk {
        AdmissibleDisk { poly, boundary: DiskBoundary::Closed(curve) }
    }

    /// Number of arcs of the boundary through the polyhedron interior.
    pub fn interior_arc_count(&self) -> usize {
        match &self.boundary {
            DiskBoundary::Closed(_) => 0,
            DiskBoundary::Arcs(v) => v.len(),
        }
    }

    pub fn pieces(&self) -> Vec<&SurfaceCurve> {
        match &self.boundary {
            DiskBoundary::Closed(c) => vec![c],
            DiskBoundary::Arcs(v) => v.iter().collect(),
        }
    }

    /// All segments, in boundary order, with a flat index.
    pub fn segments(&self) -> Vec<Segment> {
        self.pieces().iter().flat_map(|p| p.segments.iter().copied()).collect()
    }

    pub fn interior_edge_crossings(&self) -> usize {
        self.pieces().iter().map(|p| p.interior_edge_crossings()).sum()
    }

    pub fn boundary_segment_count(&self) -> usize {
        self.pieces().iter().map(|p| p.boundary_segments()).sum()
    }
}

/// Outcome of the admissibility check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdmissibleCheck {
    Admissible,
    Violates { condition: u8, detail: String },
}

impl AdmissibleCheck {
    pub fn is_admissible(&self) -> bool {
        matches!(self, AdmissibleCheck::Admissible)
    }
}

/// Check the admissibility conditions:
/// 1. interior arcs end inside interior faces,
/// 2. the boundary on the polyhedron is a closed curve or a set of arcs,
/// 3. a closed boundary satisfies normal conditions 1-3,
/// 4. arc components satisfy normal conditions 1-2,
/// 5. each segment is embedded in its face (guaranteed per segment; a
///    segment degenerating to one edge fails condition 2 instead).
pub fn is_admissible(
    disk: &AdmissibleDisk,
    c: &TruncatedPolyhedron,
) -> Result<AdmissibleCheck, SurfaceError> {
    match &disk.boundary {
        DiskBoundary::Closed(curve) => {
            if !curve.closed {
                return Err(SurfaceError::NotClosed);
            }
            curve.check_structure(c)?;
            if let Some(NormalCheck::Violates { condition, detail }) = condition_2(curve, c) {
                return Ok(AdmissibleCheck::Violates { condition, detail });
            }
            let f0 = curve.segments[0].face;
            if curve.segments.iter().all(|s| s.face == f0) {
                return Ok(AdmissibleCheck::Violates {
                    condition: 3,
                    detail: "boundary lies in one face".into(),
                });
            }
            Ok(AdmissibleCheck::Admissible)
        }
        DiskBoundary::Arcs(arcs) => {
            if arcs.is_empty() {
                return Err(SurfaceError::BadReference("disk with no boundary arcs".into()));
            }
            for (i, arc) in arcs.iter().enumerate() {
                if arc.closed {
                    return Err(SurfaceError::BadReference(format!(
                        "arc component {i} is closed"
                    )));
                }
                arc.check_structure(c)?;
                // interior arcs attach at the free ends, which must lie
                // inside interior faces
                let first = arc.segments.first().unwrap();
                let last = arc.segments.last().unwrap();
                for s in [first, last] {
                    if matches!(s.face, FaceRef::Boundary(_)) {
                        return Ok(AdmissibleCheck::Violates {
                            condition: 1,
                            detail: format!("interior arc endpoint on a boundary face (arc {i})"),
                        });
                    }
                }
                if let Some(NormalCheck::Violates { condition, detail }) = condition_2(arc, c) {
                    return Ok(AdmissibleCheck::Violates { condition, detail });
                }
            }
            Ok(AdmissibleCheck::Admissible)
        }
    }
}

/// Combinatorial area of an admissible disk: `pi/2` per interior-edge
/// crossing, `pi` per boundary-face segment, `-2 pi`, and `3 pi` per
/// interior arc. Exact.
pub fn comb_area(disk: &AdmissibleDisk) -> Angle {
    let edges = disk.interior_edge_crossings() as i64;
    let bsegs = disk.boundary_segment_count() as i64;
    let arcs = disk.interior_arc_count() as i64;
    Angle::PI_2 * edges + Angle::PI * bsegs - Angle::TWO_PI + Angle::pi_times(3) * arcs
}

/// The special disk classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiskClass {
    /// Cuts off a boundary face; area 0.
    VertexLink,
    /// Cuts off an interior edge; area 0.
    BoundaryBigon,
    /// Ideal triangle parallel to a shaded face; area pi.
    IdealTriangleS,
    /// Ideal triangle parallel to a white face; area pi.
    IdealTriangleW,
    /// Ideal triangle parallel to no face (all three interior faces white);
    /// area pi.
    IdealTriangleN,
    Generic,
}

/// The interior edge a segment runs parallel to, if any: both endpoints are
/// boundary edges flanking one edge of the segment's face.
pub fn edge_parallel(seg: &Segment, c: &TruncatedPolyhedron) -> Option<PEdgeId> {
    let fi = match seg.face {
        FaceRef::Interior(fi) => fi,
        FaceRef::Boundary(_) => return None,
    };
    let (p, q) = match (seg.enter?, seg.exit?) {
        (
            CrossPoint::Side { vertex: u, on_face: fu },
            CrossPoint::Side { vertex: v, on_face: fv },
        ) if fu == fi && fv == fi => (u, v),
        _ => return None,
    };
    let flanks = |vertex: VertexId, e: PEdgeId| -> bool {
        let vert = &c.vertices[vertex];
        let k = vert.faces.iter().position(|&f| f == fi).unwrap();
        vert.edges[k] == e || vert.edges[(k + 1) % 4] == e
    };
    c.faces[fi]
        .ring
        .iter()
        .map(|&(e, _)| e)
        .find(|&e| {
            let ends = c.edges[e].ends;
            (ends == [p, q] || ends == [q, p]) && flanks(p, e) && flanks(q, e)
        })
}

/// Classify an admissible disk. Vertex links and boundary bigons are the two
/// zero-area classes; ideal triangles split into types S, W, N by the
/// face-parallelism of their segments.
pub fn classify_disk(disk: &AdmissibleDisk, c: &TruncatedPolyhedron) -> DiskClass {
    let curve = match &disk.boundary {
        DiskBoundary::Closed(curve) => curve,
        DiskBoundary::Arcs(_) => return DiskClass::Generic,
    };
    let edge_crossings: Vec<PEdgeId> = curve
        .crossings()
        .filter_map(|p| match p {
            CrossPoint::Edge(e) => Some(e),
            _ => None,
        })
        .collect();
    let bsegs = curve.boundary_segments();

    // vertex link: exactly the four edges at one vertex, no boundary faces
    if bsegs == 0 && edge_crossings.len() == 4 && curve.segments.len() == 4 {
        let mut sorted = edge_crossings.clone();
        sorted.sort_unstable();
        if c.vertices.iter().any(|v| {
            let mut ve = v.edges;
            ve.sort_unstable();
            ve.to_vec() == sorted
        }) {
            return DiskClass::VertexLink;
        }
    }

    // boundary bigon: no edge crossings, two boundary segments, and the two
    // interior segments parallel to a common edge whose ends carry the
    // boundary segments
    if edge_crossings.is_empty() && bsegs == 2 && curve.segments.len() == 4 {
        let mut parallels = curve
            .segments
            .iter()
            .filter(|s| matches!(s.face, FaceRef::Interior(_)))
            .map(|s| edge_parallel(s, c));
        if let (Some(Some(e1)), Some(Some(e2))) = (parallels.next(), parallels.next()) {
            if e1 == e2 {
                let mut bverts: Vec<VertexId> = curve
                    .segments
                    .iter()
                    .filter_map(|s| match s.face {
                        FaceRef::Boundary(v) => Some(v),
                        _ => None,
                    })
                    .collect();
                bverts.sort_unstable();
                let mut ends = c.edges[e1].ends.to_vec();
                ends.sort_unstable();
                if bverts == ends {
                    return DiskClass::BoundaryBigon;
                }
            }
        }
    }

    // ideal triangle: three boundary segments, no interior edges
    if edge_crossings.is_empty() && bsegs == 3 && curve.segments.len() == 6 {
        let interior_segs: Vec<&Segment> = curve
            .segments
            .iter()
            .filter(|s| matches!(s.face, FaceRef::Interior(_)))
            .collect();
        let parallels: Vec<Option<PEdgeId>> =
            interior_segs.iter().map(|s| edge_parallel(s, c)).collect();
        let n_parallel = parallels.iter().flatten().count();
        if n_parallel >= 2 {
            // the triangle is parallel to the face across the paralleled
            // edges; a representative may have one segment isotoped into
            // that face itself, so take the face at least two segments
            // vote for
            let mut across: Vec<PFaceId> = Vec::new();
            for (s, par) in interior_segs.iter().zip(&parallels) {
                if let (FaceRef::Interior(fi), Some(e)) = (s.face, par) {
                    let edge = &c.edges[*e];
                    across.push(if edge.white == fi { edge.shaded } else { edge.white });
                }
            }
            across.sort_unstable();
            let majority = across
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0]);
            if let Some(f) = majority {
                return match c.faces[f].color {
                    FaceColor::Shaded => DiskClass::IdealTriangleS,
                    FaceColor::White => DiskClass::IdealTriangleW,
                };
            }
        } else if n_parallel == 0 {
            let all_white = interior_segs.iter().all(|s| match s.face {
                FaceRef::Interior(fi) => c.faces[fi].color == FaceColor::White,
                _ => false,
            });
            if all_white {
                return DiskClass::IdealTriangleN;
            }
        }
    }

    DiskClass::Generic
}

/// Length of a boundary segment relative to its disk:
/// `a(D) / |bD on dM|`, an exact rational multiple of pi.
pub fn relative_length(disk: &AdmissibleDisk) -> Result<Angle, SurfaceError> {
    let n = disk.boundary_segment_count();
    if n == 0 {
        return Err(SurfaceError::NoBoundarySegments);
    }
    let a = comb_area(disk);
    Ok(Angle::pi_frac(a.pi_num(), a.pi_den() * n as i64))
}

/// Certified combinatorial length lower bound for a nontrivial slope on a
/// cusp: `n pi / 3`, strict for crossing-circle cusps.
pub fn comb_length_lower_bound(
    torus: &crate::polyhedra::CuspTorus,
    coords: &SlopeCoords,
) -> Result<LengthBound, SurfaceError> {
    if !coords.nontrivial {
        return Err(SurfaceError::TrivialSlope);
    }
    let matches = match (coords.provenance, &torus.kind) {
        (Provenance::CrossingCircle, crate::polyhedra::CuspKind::CrossingCircle { .. }) => true,
        (Provenance::KnotStrand, crate::polyhedra::CuspKind::KnotStrand { .. }) => true,
        _ => false,
    };
    if !matches {
        return Err(SurfaceError::BadReference("slope coordinates are for a different cusp kind".into()));
    }
    let n = torus.n as i64;
    Ok(LengthBound::Combinatorial {
        value: Angle::pi_frac(n, 3),
        strict: torus.is_crossing_circle(),
    })
}
