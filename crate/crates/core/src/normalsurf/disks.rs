//! Constructors for the standard disks and glued test surfaces: vertex
//! links, boundary bigons, face-parallel ideal triangles, and the closed
//! surfaces they assemble into.

use super::{
    AdmissibleDisk, CrossPoint, FaceRef, GluedSurface, Join, SegAddr, Segment, SurfaceCurve,
};
use crate::polyhedra::{
    CuspTorus, Decomposition, PEdgeId, PFaceId, PolyId, TruncatedPolyhedron, VertexId,
};

/// The normal curve encircling the boundary face at a vertex: it crosses the
/// four incident edges through the four faces around the vertex.
pub fn vertex_link_curve(c: &TruncatedPolyhedron, v: VertexId) -> SurfaceCurve {
    let vert = &c.vertices[v];
    let segments = (0..4)
        .map(|k| Segment {
            face: FaceRef::Interior(vert.faces[k]),
            enter: Some(CrossPoint::Edge(vert.edges[k])),
            exit: Some(CrossPoint::Edge(vert.edges[(k + 1) % 4])),
        })
        .collect();
    SurfaceCurve::closed(segments)
}

/// The normal curve cutting off an interior edge: it runs parallel to the
/// edge through its two faces and crosses the boundary faces at its ends.
pub fn boundary_bigon_curve(c: &TruncatedPolyhedron, e: PEdgeId) -> SurfaceCurve {
    let edge = &c.edges[e];
    let [u, v] = edge.ends;
    let (f, g) = (edge.white, edge.shaded);
    SurfaceCurve::closed(vec![
        Segment {
            face: FaceRef::Interior(f),
            enter: Some(CrossPoint::Side { vertex: u, on_face: f }),
            exit: Some(CrossPoint::Side { vertex: v, on_face: f }),
        },
        Segment {
            face: FaceRef::Boundary(v),
            enter: Some(CrossPoint::Side { vertex: v, on_face: f }),
            exit: Some(CrossPoint::Side { vertex: v, on_face: g }),
        },
        Segment {
            face: FaceRef::Interior(g),
            enter: Some(CrossPoint::Side { vertex: v, on_face: g }),
            exit: Some(CrossPoint::Side { vertex: u, on_face: g }),
        },
        Segment {
            face: FaceRef::Boundary(u),
            enter: Some(CrossPoint::Side { vertex: u, on_face: g }),
            exit: Some(CrossPoint::Side { vertex: u, on_face: f }),
        },
    ])
}

/// The ideal triangle parallel to a triangular face: one segment alongside
/// each edge (in the face across it) and one boundary segment at each
/// corner. `None` if the face is not a triangle.
pub fn face_parallel_triangle(c: &TruncatedPolyhedron, f: PFaceId) -> Option<SurfaceCurve> {
    let ring = &c.faces[f].ring;
    if ring.len() != 3 {
        return None;
    }
    let across = |e: PEdgeId| -> PFaceId {
        let edge = &c.edges[e];
        if edge.white == f {
            edge.shaded
        } else {
            edge.white
        }
    };
    let mut segments = Vec::with_capacity(6);
    for i in 0..3 {
        let (e_i, v_i) = ring[i];
        let v_prev = ring[(i + 2) % 3].1;
        let a_i = across(e_i);
        let a_next = across(ring[(i + 1) % 3].0);
        segments.push(Segment {
            face: FaceRef::Interior(a_i),
            enter: Some(CrossPoint::Side { vertex: v_prev, on_face: a_i }),
            exit: Some(CrossPoint::Side { vertex: v_i, on_face: a_i }),
        });
        segments.push(Segment {
            face: FaceRef::Boundary(v_i),
            enter: Some(CrossPoint::Side { vertex: v_i, on_face: a_i }),
            exit: Some(CrossPoint::Side { vertex: v_i, on_face: a_next }),
        });
    }
    Some(SurfaceCurve::closed(segments))
}

/// The boundary-parallel torus over a cusp: one vertex link per tile, glued
/// side by side. Its area and Euler characteristic both vanish.
pub fn vertex_link_torus(dec: &Decomposition, cusp: &CuspTorus) -> GluedSurface {
    let disks: Vec<AdmissibleDisk> = cusp
        .tiles
        .iter()
        .map(|t| AdmissibleDisk::normal(t.poly, vertex_link_curve(&dec.complex, t.vertex)))
        .collect();
    let mut joins = Vec::new();
    for (ti, nbrs) in cusp.neighbors.iter().enumerate() {
        for (side, &(tj, side_j)) in nbrs.iter().enumerate() {
            if (tj, side_j) < (ti, side) {
                continue;
            }
            joins.push(Join {
                a: SegAddr { disk: ti, segment: side },
                b: SegAddr { disk: tj, segment: side_j },
            });
        }
    }
    GluedSurface { disks, joins }
}

/// The tube of boundary bigons around a glued edge class: one bigon per
/// edge instance, glued cyclically. An annulus of area zero.
pub fn bigon_annulus(dec: &Decomposition, class: &[(PolyId, PEdgeId)]) -> GluedSurface {
    let disks: Vec<AdmissibleDisk> = class
        .iter()
        .map(|&(p, e)| AdmissibleDisk {
            poly: p,
            boundary: super::DiskBoundary::Closed(boundary_bigon_curve(&dec.complex, e)),
        })
        .collect();
    // bigon segment 0 lies in the white face, segment 2 in the shaded face
    let mut joins = Vec::new();
    for (i, &(p, e)) in class.iter().enumerate() {
        for (seg, face) in [(0usize, dec.complex.edges[e].white), (2, dec.complex.edges[e].shaded)] {
            let pairing = dec.gluing.across((p, face)).expect("face glued");
            let e2 = pairing.map_edge(e).expect("edge in pairing");
            let j = class
                .iter()
                .position(|&(q, x)| (q, x) == (pairing.b.0, e2))
                .expect("glued edge stays in its class");
            let seg_j = if seg == 0 { 0 } else { 2 };
            if (j, seg_j) < (i, seg) {
                continue;
            }
            joins.push(Join {
                a: SegAddr { disk: i, segment: seg },
                b: SegAddr { disk: j, segment: seg_j },
            });
        }
    }
    GluedSurface { disks, joins }
}

/// Two parallel copies of a triangular face, one in each polyhedron, glued
/// along their three face segments: a three-holed sphere of area 2 pi.
pub fn parallel_triangle_pair(dec: &Decomposition, f: PFaceId) -> Option<GluedSurface> {
    let curve = face_parallel_triangle(&dec.complex, f)?;
    // the interior segments (even indices) lie in the faces across the
    // triangle's edges; those faces must glue P1 to P2 identically
    for i in [0usize, 2, 4] {
        let face = match curve.segments[i].face {
            FaceRef::Interior(fi) => fi,
            _ => return None,
        };
        let pairing = dec.gluing.across((PolyId::P1, face))?;
        if pairing.b.0 != PolyId::P2 || pairing.b.1 != face {
            return None;
        }
    }
    let disks = vec![
        AdmissibleDisk::normal(PolyId::P1, curve.clone()),
        AdmissibleDisk::normal(PolyId::P2, curve),
    ];
    let joins = [0usize, 2, 4]
        .into_iter()
        .map(|i| Join {
            a: SegAddr { disk: 0, segment: i },
            b: SegAddr { disk: 1, segment: i },
        })
        .collect();
    Some(GluedSurface { disks, joins })
}
