//! Surfaces glued from admissible disks, and the combinatorial Gauss-Bonnet
//! identity `a(F) = -2 pi chi(F) + 2 pi Length(bF off dM)`, where the length
//! term counts the arcs of the surface boundary running through polyhedron
//! interiors. The Euler characteristic is computed from the quotient cell
//! structure, so the identity is checked exactly.

use super::{is_admissible, AdmissibleDisk, CrossPoint, DiskBoundary, FaceRef, Segment};
use crate::angle::Angle;
use crate::error::SurfaceError;
use crate::polyhedra::Decomposition;
use serde::{Deserialize, Serialize};

/// Address of one face-segment of one disk (flat index over the disk's
/// boundary pieces in order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegAddr {
    pub disk: usize,
    pub segment: usize,
}

/// A gluing of two interior-face segments across a face pairing. The gluing
/// reverses boundary orientation, so the start of one segment matches the
/// end of the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Join {
    pub a: SegAddr,
    pub b: SegAddr,
}

/// A surface assembled from admissible disks.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GluedSurface {
    pub disks: Vec<AdmissibleDisk>,
    pub joins: Vec<Join>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GaussBonnetReport {
    pub area: Angle,
    pub euler: i64,
    /// Arcs of the surface boundary through polyhedron interiors.
    pub interior_boundary_arcs: usize,
    pub lhs: Angle,
    pub rhs: Angle,
    pub holds: bool,
    /// False when interior-face segments remain unglued: the identity is not
    /// expected to hold for such incomplete bookkeeping, and `holds` then
    /// reports the raw comparison only.
    pub complete: bool,
    pub unglued_interior_segments: usize,
}

struct DiskCells {
    /// (piece, index-within-piece) per flat segment index.
    seg_loc: Vec<(usize, usize)>,
    /// Segments per piece.
    piece_sizes: Vec<usize>,
    closed: bool,
    corner_base: usize,
    corner_count: usize,
}

impl DiskCells {
    fn new(disk: &AdmissibleDisk, corner_base: usize) -> DiskCells {
        let (piece_sizes, closed): (Vec<usize>, bool) = match &disk.boundary {
            DiskBoundary::Closed(c) => (vec![c.segments.len()], true),
            DiskBoundary::Arcs(v) => (v.iter().map(|a| a.segments.len()).collect(), false),
        };
        let mut seg_loc = Vec::new();
        for (p, &m) in piece_sizes.iter().enumerate() {
            for i in 0..m {
                seg_loc.push((p, i));
            }
        }
        let corner_count = if closed {
            piece_sizes[0]
        } else {
            piece_sizes.iter().map(|m| m + 1).sum()
        };
        DiskCells { seg_loc, piece_sizes, closed, corner_base, corner_count }
    }

    /// Global ids of the start and end corners of a flat segment.
    fn corners(&self, seg: usize) -> (usize, usize) {
        let (piece, i) = self.seg_loc[seg];
        if self.closed {
            let m = self.piece_sizes[0];
            (self.corner_base + i, self.corner_base + (i + 1) % m)
        } else {
            let offset: usize = self.piece_sizes[..piece].iter().map(|m| m + 1).sum();
            (self.corner_base + offset + i, self.corner_base + offset + i + 1)
        }
    }
}

/// Compute the combinatorial Gauss-Bonnet data for a glued surface and check
/// the identity exactly.
pub fn gauss_bonnet(
    dec: &Decomposition,
    surface: &GluedSurface,
) -> Result<GaussBonnetReport, SurfaceError> {
    let c = &dec.complex;
    for (i, disk) in surface.disks.iter().enumerate() {
        match is_admissible(disk, c)? {
            super::AdmissibleCheck::Admissible => {}
            super::AdmissibleCheck::Violates { condition, detail } => {
                return Err(SurfaceError::GluingMismatch(format!(
                    "disk {i} is not admissible (condition {condition}: {detail})"
                )))
            }
        }
    }

    let all_segments: Vec<Vec<Segment>> =
        surface.disks.iter().map(|d| d.segments()).collect();

    // validate joins against the face pairings
    let mut joined = vec![Vec::new(); surface.disks.len()];
    let mut orientations = Vec::with_capacity(surface.joins.len());
    for (ji, join) in surface.joins.iter().enumerate() {
        let seg_of = |addr: SegAddr| -> Result<Segment, SurfaceError> {
            all_segments
                .get(addr.disk)
                .and_then(|v| v.get(addr.segment))
                .copied()
                .ok_or_else(|| SurfaceError::GluingMismatch(format!("join {ji}: bad address")))
        };
        let (sa, sb) = (seg_of(join.a)?, seg_of(join.b)?);
        let (pa, pb) = (surface.disks[join.a.disk].poly, surface.disks[join.b.disk].poly);
        let (fa, fb) = match (sa.face, sb.face) {
            (FaceRef::Interior(fa), FaceRef::Interior(fb)) => (fa, fb),
            _ => {
                return Err(SurfaceError::GluingMismatch(format!(
                    "join {ji}: only interior-face segments glue"
                )))
            }
        };
        let pairing = dec
            .gluing
            .across((pa, fa))
            .filter(|p| p.b == (pb, fb))
            .ok_or_else(|| {
                SurfaceError::GluingMismatch(format!(
                    "join {ji}: faces are not glued to each other"
                ))
            })?;
        let map_point = |p: Option<CrossPoint>| -> Option<CrossPoint> {
            p.map(|p| match p {
                CrossPoint::Edge(e) => CrossPoint::Edge(pairing.map_edge(e).unwrap_or(usize::MAX)),
                CrossPoint::Side { vertex, .. } => CrossPoint::Side {
                    vertex: pairing.map_vertex(vertex).unwrap_or(usize::MAX),
                    on_face: fb,
                },
            })
        };
        // the two listings may traverse the shared segment in either
        // direction; record which so the corners identify correctly
        let reversed = if map_point(sa.enter) == sb.exit && map_point(sa.exit) == sb.enter {
            true
        } else if map_point(sa.enter) == sb.enter && map_point(sa.exit) == sb.exit {
            false
        } else {
            return Err(SurfaceError::GluingMismatch(format!(
                "join {ji}: segment endpoints do not correspond under the gluing"
            )));
        };
        orientations.push(reversed);
        for addr in [join.a, join.b] {
            if joined[addr.disk].contains(&addr.segment) {
                return Err(SurfaceError::GluingMismatch(format!(
                    "join {ji}: segment glued twice"
                )));
            }
            joined[addr.disk].push(addr.segment);
        }
    }

    // cell structure
    let mut corner_base = 0;
    let cells: Vec<DiskCells> = surface
        .disks
        .iter()
        .map(|d| {
            let dc = DiskCells::new(d, corner_base);
            corner_base += dc.corner_count;
            dc
        })
        .collect();
    let mut parent: Vec<usize> = (0..corner_base).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for (join, &reversed) in surface.joins.iter().zip(&orientations) {
        let (a_start, a_end) = cells[join.a.disk].corners(join.a.segment);
        let (b_start, b_end) = cells[join.b.disk].corners(join.b.segment);
        if reversed {
            union(&mut parent, a_start, b_end);
            union(&mut parent, a_end, b_start);
        } else {
            union(&mut parent, a_start, b_start);
            union(&mut parent, a_end, b_end);
        }
    }
    let mut roots: Vec<usize> = (0..corner_base).map(|x| find(&mut parent, x)).collect();
    roots.sort_unstable();
    roots.dedup();
    let v = roots.len() as i64;

    let total_segments: usize = all_segments.iter().map(|v| v.len()).sum();
    let interior_arcs: usize = surface.disks.iter().map(|d| d.interior_arc_count()).sum();
    let e = (total_segments - surface.joins.len()) as i64 + interior_arcs as i64;
    let f = surface.disks.len() as i64;
    let euler = v - e + f;

    let area = surface.disks.iter().map(super::comb_area).fold(Angle::ZERO, |a, b| a + b);
    let lhs = area;
    let rhs = Angle::pi_times(-2) * euler + Angle::TWO_PI * interior_arcs as i64;

    let interior_total: usize = all_segments
        .iter()
        .map(|segs| {
            segs.iter()
                .filter(|s| matches!(s.face, FaceRef::Interior(_)))
                .count()
        })
        .sum();
    let unglued = interior_total - 2 * surface.joins.len();

    Ok(GaussBonnetReport {
        area,
        euler,
        interior_boundary_arcs: interior_arcs,
        lhs,
        rhs,
        holds: lhs == rhs,
        complete: unglued == 0,
        unglued_interior_segments: unglued,
    })
}
