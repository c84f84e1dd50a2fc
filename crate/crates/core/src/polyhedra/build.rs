//! Construction of the two-polyhedron decomposition.
//!
//! The flat augmented link is never drawn: its combinatorics are derived from
//! the diagram by smoothing every twist region to two parallel strands and
//! replacing the region with a transverse crossing-disk chord. Strand arcs
//! between chords become ideal vertices, each chord contributes one circle
//! vertex, six interior edges (three chord segments, two sides each) and two
//! shaded triangles, and the white faces are read off a small auxiliary
//! rotation system for the flattened picture.

use super::*;
use crate::augment::AugmentedLink;
use crate::diagram::{dart, dart_crossing, dart_slot, Dart, LinkDiagram, TwistRegion};
use crate::error::PolyhedraError;
use std::collections::BTreeMap;

/// Per-region chord dart layout in the auxiliary map: ten darts starting at
/// `10 * region`.
const DA0: usize = 0; // at puncture A toward the arc at end 0
const DMA: usize = 1; // at puncture A toward puncture B
const DA3: usize = 2; // at puncture A toward the arc at end 3
const DTA: usize = 3; // at puncture A toward tip 1
const DA1: usize = 4; // at puncture B toward the arc at end 1
const DTB: usize = 5; // at puncture B toward tip 2
const DA2: usize = 6; // at puncture B toward the arc at end 2
const DMB: usize = 7; // at puncture B toward puncture A
const TT1: usize = 8; // at tip 1 toward puncture A
const TT2: usize = 9; // at tip 2 toward puncture B

/// Rotation (counterclockwise) in the auxiliary map.
fn aux_sigma(d: usize) -> usize {
    let (r, k) = (d / 10, d % 10);
    let next = match k {
        DA0 => DMA,
        DMA => DA3,
        DA3 => DTA,
        DTA => DA0,
        DA1 => DTB,
        DTB => DA2,
        DA2 => DMB,
        DMB => DA1,
        TT1 => TT1,
        TT2 => TT2,
        _ => unreachable!(),
    };
    10 * r + next
}

/// End index (0..4) of the arc dart `k` within its region.
fn arc_dart_end(k: usize) -> Option<usize> {
    match k {
        DA0 => Some(0),
        DA1 => Some(1),
        DA2 => Some(2),
        DA3 => Some(3),
        _ => None,
    }
}

fn end_arc_dart(end: usize) -> usize {
    match end {
        0 => DA0,
        1 => DA1,
        2 => DA2,
        3 => DA3,
        _ => unreachable!(),
    }
}

pub(super) fn build(link: &AugmentedLink) -> Result<Decomposition, PolyhedraError> {
    let d = link.base();
    let regions = link.regions();
    let t = regions.len();
    let fail = |msg: String| PolyhedraError::InvalidStructure(msg);

    for r in regions {
        if r.cyclic {
            return Err(fail("cyclic twist region in a multi-region diagram".into()));
        }
    }

    // smoothing partner slots per crossing
    let partner = smoothing_partners(d, regions);

    // map diagram end-darts to (region, end index)
    let mut end_of: BTreeMap<Dart, (usize, usize)> = BTreeMap::new();
    for (ri, r) in regions.iter().enumerate() {
        for (k, &e) in r.ends.iter().enumerate() {
            end_of.insert(e, (ri, k));
        }
    }

    // internal flat pairing sanity: ends 0 and 3 join, as do 1 and 2
    for (ri, r) in regions.iter().enumerate() {
        let exit = walk_through_region(d, &partner, &end_of, r.ends[0]);
        if end_of.get(&exit) != Some(&(ri, 3)) {
            return Err(fail(format!("region {ri} internal smoothing does not pair ends 0-3")));
        }
    }

    // strand arcs: walks from end to end through smoothed crossings
    let mut arc_of_end: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut arc_ends: Vec<[(usize, usize); 2]> = Vec::new();
    for (ri, r) in regions.iter().enumerate() {
        for k in 0..4 {
            if arc_of_end.contains_key(&(ri, k)) {
                continue;
            }
            let target = walk_outward(d, &partner, &end_of, r.ends[k])?;
            if target == (ri, k) {
                return Err(fail(format!("strand arc at region {ri} end {k} closes on itself")));
            }
            let id = arc_ends.len();
            arc_of_end.insert((ri, k), id);
            arc_of_end.insert(target, id);
            arc_ends.push([(ri, k), target]);
        }
    }
    if arc_ends.len() != 2 * t {
        return Err(fail(format!("expected 2t strand arcs, found {}", arc_ends.len())));
    }

    // vertex ids: circle vertex per region, then arc vertices
    let circle_vertex = |ri: usize| ri;
    let arc_vertex = |a: usize| t + a;
    let n_vertices = 3 * t;

    // edge ids: six per region, [side][segment]
    let edge_id = |ri: usize, side: usize, seg: usize| 6 * ri + 3 * side + seg;
    let n_edges = 6 * t;

    // face ids: two shaded per region first, whites appended after traversal
    let tri_id = |ri: usize, side: usize| 2 * ri + side;

    let mut edges: Vec<InteriorEdge> = (0..n_edges)
        .map(|e| {
            let (ri, rest) = (e / 6, e % 6);
            let (side, seg) = (rest / 3, rest % 3);
            let (a0, a1, a2, a3) = region_arcs(&arc_of_end, ri);
            let ends = match (side, seg) {
                (0, 0) => [circle_vertex(ri), arc_vertex(a0)],
                (0, 1) => [arc_vertex(a0), arc_vertex(a1)],
                (0, 2) => [arc_vertex(a1), circle_vertex(ri)],
                (1, 0) => [circle_vertex(ri), arc_vertex(a3)],
                (1, 1) => [arc_vertex(a3), arc_vertex(a2)],
                (1, 2) => [arc_vertex(a2), circle_vertex(ri)],
                _ => unreachable!(),
            };
            InteriorEdge {
                ends,
                white: usize::MAX,
                shaded: tri_id(ri, side),
                region: ri,
                segment: match seg {
                    0 => ChordSegment::TipA,
                    1 => ChordSegment::Middle,
                    _ => ChordSegment::TipB,
                },
                side,
            }
        })
        .collect();
    for e in &edges {
        if e.ends[0] == e.ends[1] {
            return Err(fail("chord segment copy degenerates to a loop".into()));
        }
    }

    let mut faces: Vec<InteriorFace> = Vec::with_capacity(3 * t + 2);
    for ri in 0..t {
        let (a0, a1, a2, a3) = region_arcs(&arc_of_end, ri);
        faces.push(InteriorFace {
            color: FaceColor::Shaded,
            ring: vec![
                (edge_id(ri, 0, 0), arc_vertex(a0)),
                (edge_id(ri, 0, 1), arc_vertex(a1)),
                (edge_id(ri, 0, 2), circle_vertex(ri)),
            ],
        });
        faces.push(InteriorFace {
            color: FaceColor::Shaded,
            ring: vec![
                (edge_id(ri, 1, 0), arc_vertex(a3)),
                (edge_id(ri, 1, 1), arc_vertex(a2)),
                (edge_id(ri, 1, 2), circle_vertex(ri)),
            ],
        });
    }

    // auxiliary map traversal for the white faces
    let aux_theta = |dart: usize| -> usize {
        let (ri, k) = (dart / 10, dart % 10);
        match k {
            DTA => 10 * ri + TT1,
            TT1 => 10 * ri + DTA,
            DMA => 10 * ri + DMB,
            DMB => 10 * ri + DMA,
            DTB => 10 * ri + TT2,
            TT2 => 10 * ri + DTB,
            _ => {
                // arc dart: jump to the arc's other endpoint
                let end = arc_dart_end(k).unwrap();
                let arc = arc_of_end[&(ri, end)];
                let [p, q] = arc_ends[arc];
                let (rj, ej) = if p == (ri, end) { q } else { p };
                10 * rj + end_arc_dart(ej)
            }
        }
    };
    // which interior edge a chord dart contributes to the face holding it
    let chord_edge = |dart: usize| -> Option<PEdgeId> {
        let (ri, k) = (dart / 10, dart % 10);
        match k {
            TT1 => Some(edge_id(ri, 0, 0)),
            DTA => Some(edge_id(ri, 1, 0)),
            DMA => Some(edge_id(ri, 0, 1)),
            DMB => Some(edge_id(ri, 1, 1)),
            DTB => Some(edge_id(ri, 0, 2)),
            TT2 => Some(edge_id(ri, 1, 2)),
            _ => None,
        }
    };

    let mut seen = vec![false; 10 * t];
    for start in 0..10 * t {
        if seen[start] {
            continue;
        }
        // collect the orbit of sigma . theta
        let mut orbit = Vec::new();
        let mut cur = start;
        loop {
            seen[cur] = true;
            orbit.push(cur);
            cur = aux_sigma(aux_theta(cur));
            if cur == start {
                break;
            }
        }
        // orbits consisting only of arc darts cannot occur: rotations
        // alternate arc and chord darts at every puncture
        let face_id = faces.len();
        let mut items: Vec<Result<PEdgeId, VertexId>> = Vec::new();
        for (i, &dd) in orbit.iter().enumerate() {
            if let Some(e) = chord_edge(dd) {
                // a chord dart followed directly by another chord dart wraps
                // a tip: the circle vertex passes between them
                items.push(Ok(e));
                let next = orbit[(i + 1) % orbit.len()];
                if chord_edge(next).is_some() {
                    items.push(Err(circle_vertex(dd / 10)));
                }
            } else {
                let (ri, k) = (dd / 10, dd % 10);
                let arc = arc_of_end[&(ri, arc_dart_end(k).unwrap())];
                items.push(Err(arc_vertex(arc)));
            }
        }
        if items.len() % 2 != 0 {
            return Err(fail("white face boundary does not alternate".into()));
        }
        // rotate so an edge item comes first, then pair (edge, vertex)
        let first_edge = items
            .iter()
            .position(|it| it.is_ok())
            .ok_or_else(|| fail("white face without edges".into()))?;
        items.rotate_left(first_edge);
        let mut ring = Vec::with_capacity(items.len() / 2);
        for pair in items.chunks(2) {
            match (pair[0], pair[1]) {
                (Ok(e), Err(v)) => ring.push((e, v)),
                _ => return Err(fail("white face boundary does not alternate".into())),
            }
        }
        for &(e, _) in &ring {
            if edges[e].white != usize::MAX {
                return Err(fail(format!("edge {e} bounded by two white faces")));
            }
            edges[e].white = face_id;
        }
        faces.push(InteriorFace { color: FaceColor::White, ring });
    }
    if edges.iter().any(|e| e.white == usize::MAX) {
        return Err(fail("edge with no white face".into()));
    }
    if faces.len() != 3 * t + 2 {
        return Err(fail(format!("expected 3t+2 faces, got {}", faces.len())));
    }

    // ideal vertices with their cyclic edge and face lists
    let mut vertices = Vec::with_capacity(n_vertices);
    for ri in 0..t {
        let (r1, r3) = (edge_id(ri, 0, 0), edge_id(ri, 0, 2));
        let (l1, l3) = (edge_id(ri, 1, 0), edge_id(ri, 1, 2));
        if edges[r3].white != edges[l3].white || edges[r1].white != edges[l1].white {
            return Err(fail(format!("tip wrap faces of region {ri} do not match")));
        }
        vertices.push(IdealVertex {
            kind: VertexKind::CrossingCircle { region: ri },
            edges: [r1, r3, l3, l1],
            faces: [tri_id(ri, 0), edges[r3].white, tri_id(ri, 1), edges[l1].white],
        });
    }
    for (a, ends) in arc_ends.iter().enumerate() {
        // per endpoint: the chord edges after/before the arc dart in rotation
        let attach = |(ri, end): (usize, usize)| -> (PEdgeId, PEdgeId, PFaceId) {
            // (after, before, shaded)
            match end {
                0 => (edge_id(ri, 0, 1), edge_id(ri, 0, 0), tri_id(ri, 0)),
                1 => (edge_id(ri, 0, 2), edge_id(ri, 0, 1), tri_id(ri, 0)),
                2 => (edge_id(ri, 1, 1), edge_id(ri, 1, 2), tri_id(ri, 1)),
                3 => (edge_id(ri, 1, 0), edge_id(ri, 1, 1), tri_id(ri, 1)),
                _ => unreachable!(),
            }
        };
        let (ax, bx, tx) = attach(ends[0]);
        let (ay, by, ty) = attach(ends[1]);
        // the white face holding the arc on each side spans between the ends
        let fx = edges[bx].white;
        let fy = edges[by].white;
        if fx != edges[ay].white || fy != edges[ax].white {
            return Err(fail(format!("arc {a} flanking faces do not match")));
        }
        vertices.push(IdealVertex {
            kind: VertexKind::StrandArc { arc: a },
            edges: [ax, bx, ay, by],
            faces: [tx, fx, ty, fy],
        });
    }

    let complex = TruncatedPolyhedron { vertices, edges, faces };

    // gluing
    let mut shaded = Vec::new();
    for (ri, circle) in link.circles().iter().enumerate() {
        let (a0, a1, a2, a3) = region_arcs(&arc_of_end, ri);
        let (t0, t1) = (tri_id(ri, 0), tri_id(ri, 1));
        let (r1, r2, r3) = (edge_id(ri, 0, 0), edge_id(ri, 0, 1), edge_id(ri, 0, 2));
        let (l1, l2, l3) = (edge_id(ri, 1, 0), edge_id(ri, 1, 1), edge_id(ri, 1, 2));
        let v = circle_vertex(ri);
        if circle.half_twist == 0 {
            // fold the two sides of the half-disk together in each polyhedron
            for p in [PolyId::P1, PolyId::P2] {
                shaded.push(FacePairing {
                    a: (p, t0),
                    b: (p, t1),
                    edge_map: vec![(r1, l1), (r2, l2), (r3, l3)],
                    vertex_map: vec![
                        (v, v),
                        (arc_vertex(a0), arc_vertex(a3)),
                        (arc_vertex(a1), arc_vertex(a2)),
                    ],
                });
            }
        } else {
            // a half twist glues across the polyhedra, shifting the
            // correspondence one corner along the disk
            shaded.push(FacePairing {
                a: (PolyId::P1, t0),
                b: (PolyId::P2, t1),
                edge_map: vec![(r1, l3), (r2, l2), (r3, l1)],
                vertex_map: vec![
                    (v, v),
                    (arc_vertex(a0), arc_vertex(a2)),
                    (arc_vertex(a1), arc_vertex(a3)),
                ],
            });
            shaded.push(FacePairing {
                a: (PolyId::P1, t1),
                b: (PolyId::P2, t0),
                edge_map: vec![(l1, r3), (l2, r2), (l3, r1)],
                vertex_map: vec![
                    (v, v),
                    (arc_vertex(a3), arc_vertex(a1)),
                    (arc_vertex(a2), arc_vertex(a0)),
                ],
            });
        }
    }
    let mut white = Vec::new();
    for (fi, f) in complex.faces.iter().enumerate() {
        if f.color == FaceColor::White {
            white.push(FacePairing {
                a: (PolyId::P1, fi),
                b: (PolyId::P2, fi),
                edge_map: f.ring.iter().map(|&(e, _)| (e, e)).collect(),
                vertex_map: f.ring.iter().map(|&(_, v)| (v, v)).collect(),
            });
        }
    }
    let gluing = Gluing { shaded, white };

    // region geometry
    let region_geom: Vec<RegionGeometry> = (0..t)
        .map(|ri| {
            let (a0, a1, a2, a3) = region_arcs(&arc_of_end, ri);
            RegionGeometry {
                circle_vertex: circle_vertex(ri),
                edges: [
                    [edge_id(ri, 0, 0), edge_id(ri, 0, 1), edge_id(ri, 0, 2)],
                    [edge_id(ri, 1, 0), edge_id(ri, 1, 1), edge_id(ri, 1, 2)],
                ],
                triangles: [tri_id(ri, 0), tri_id(ri, 1)],
                end_arcs: [
                    arc_vertex(a0),
                    arc_vertex(a1),
                    arc_vertex(a2),
                    arc_vertex(a3),
                ],
            }
        })
        .collect();

    // knot components of the augmented link: follow arcs through regions,
    // pairing ends by the parity of the remaining crossings
    let components = knot_components(d, link, regions, &arc_of_end, &arc_ends, t)?;

    let dec = Decomposition { link: link.clone(), complex, gluing, regions: region_geom, components };
    dec.validate_structure()?;
    Ok(dec)
}

fn region_arcs(arc_of_end: &BTreeMap<(usize, usize), usize>, ri: usize) -> (usize, usize, usize, usize) {
    (
        arc_of_end[&(ri, 0)],
        arc_of_end[&(ri, 1)],
        arc_of_end[&(ri, 2)],
        arc_of_end[&(ri, 3)],
    )
}

/// Smoothing partner slots for every crossing: the two strands run through
/// without crossing, in the direction aligned with the bigon chain.
fn smoothing_partners(d: &LinkDiagram, regions: &[TwistRegion]) -> Vec<[usize; 4]> {
    let mut partner = vec![[0usize; 4]; d.crossing_count()];
    for r in regions {
        for &c in &r.crossings {
            let anchor = (0..4)
                .find(|&p| {
                    let (e1, e2) = (d.edge_at(c, p), d.edge_at(c, (p + 1) % 4));
                    if e1 == e2 {
                        return false;
                    }
                    let fs1 = d.edge_faces(e1);
                    let fs2 = d.edge_faces(e2);
                    fs1.iter().any(|f| fs2.contains(f) && d.faces()[*f].is_bigon())
                })
                .unwrap_or(0);
            // pair anchor with anchor+3 and anchor+1 with anchor+2
            let mut map = [0usize; 4];
            map[anchor] = (anchor + 3) % 4;
            map[(anchor + 3) % 4] = anchor;
            map[(anchor + 1) % 4] = (anchor + 2) % 4;
            map[(anchor + 2) % 4] = (anchor + 1) % 4;
            partner[c] = map;
        }
    }
    partner
}

/// Follow the smoothed strand from an outward end dart until it enters some
/// region at one of its end darts.
fn walk_outward(
    d: &LinkDiagram,
    partner: &[[usize; 4]],
    end_of: &BTreeMap<Dart, (usize, usize)>,
    start: Dart,
) -> Result<(usize, usize), PolyhedraError> {
    let mut cur = start;
    let mut steps = 0;
    loop {
        let arrived = d.opposite(cur);
        if let Some(&re) = end_of.get(&arrived) {
            return Ok(re);
        }
        let (c, s) = (dart_crossing(arrived), dart_slot(arrived));
        cur = dart(c, partner[c][s]);
        steps += 1;
        if steps > 4 * d.crossing_count() {
            return Err(PolyhedraError::InvalidStructure("smoothed walk does not terminate".into()));
        }
    }
}

/// Follow the smoothed strand inward through a region from one of its ends;
/// the result is the end dart the strand leaves through.
fn walk_through_region(
    d: &LinkDiagram,
    partner: &[[usize; 4]],
    end_of: &BTreeMap<Dart, (usize, usize)>,
    end: Dart,
) -> Dart {
    let (c, s) = (dart_crossing(end), dart_slot(end));
    let mut exit = dart(c, partner[c][s]);
    let mut steps = 0;
    while !end_of.contains_key(&exit) {
        let arrived = d.opposite(exit);
        let (c2, s2) = (dart_crossing(arrived), dart_slot(arrived));
        exit = dart(c2, partner[c2][s2]);
        steps += 1;
        assert!(steps <= 4 * d.crossing_count(), "region walk does not terminate");
    }
    exit
}

/// Components of the augmented link's knot part: cycles of arcs where each
/// region joins its ends 0-3 and 1-2 when flat, 0-2 and 1-3 when it keeps a
/// half twist.
fn knot_components(
    d: &LinkDiagram,
    link: &AugmentedLink,
    regions: &[TwistRegion],
    arc_of_end: &BTreeMap<(usize, usize), usize>,
    arc_ends: &[[(usize, usize); 2]],
    t: usize,
) -> Result<Vec<KnotComponent>, PolyhedraError> {
    let half_twisted: Vec<bool> = link.circles().iter().map(|c| c.half_twist != 0).collect();
    let j_partner = |ri: usize, end: usize| -> usize {
        if half_twisted[ri] {
            [2, 3, 0, 1][end]
        } else {
            [3, 2, 1, 0][end]
        }
    };
    let mut seen: BTreeMap<(usize, usize), bool> = BTreeMap::new();
    let mut components = Vec::new();
    for ri in 0..t {
        for e in 0..4 {
            if seen.contains_key(&(ri, e)) {
                continue;
            }
            let mut arcs = Vec::new();
            let mut passes = Vec::new();
            let mut cur = (ri, e);
            loop {
                seen.insert(cur, true);
                let arc = arc_of_end[&cur];
                arcs.push(t + arc);
                let [p, q] = arc_ends[arc];
                let other = if p == cur { q } else { p };
                seen.insert(other, true);
                passes.push(other.0);
                cur = (other.0, j_partner(other.0, other.1));
                if cur == (ri, e) {
                    break;
                }
            }
            let comp = d.edge_component(d.edge_of_dart(regions[ri].ends[e]));
            // every end dart along the cycle lies on the same diagram component
            for &(rj, ej) in arcs
                .iter()
                .map(|a| &arc_ends[a - t])
                .flatten()
            {
                let c2 = d.edge_component(d.edge_of_dart(regions[rj].ends[ej]));
                if c2 != comp {
                    return Err(PolyhedraError::InvalidStructure(
                        "augmented component mixes diagram components".into(),
                    ));
                }
            }
            components.push(KnotComponent {
                diagram_component: comp,
                arcs,
                region_passes: passes,
            });
        }
    }
    Ok(components)
}
