//! Combinatorial ideal polyhedra for augmented link exteriors.
//!
//! Cutting the exterior of a (flat) augmented link along the projection plane
//! and along the crossing disks produces two identical ideal polyhedra. Their
//! faces two-color: white faces come from regions of the projection plane,
//! shaded faces are the crossing-disk halves and are always triangles. Every
//! interior edge lies between one white and one shaded face and carries
//! dihedral angle pi/2; after gluing, each edge class is 4-valent with angle
//! sum 2 pi. Truncating the ideal vertices leaves one rectangular boundary
//! face per vertex, and those rectangles tile the cusp tori.
//!
//! The polyhedra here are purely combinatorial: the right-angled structure is
//! carried as labels, not solved geometry, which is all the downstream length
//! estimates need.

mod build;
mod cusp;

pub use cusp::{CuspKind, CuspTorus, Dir, LatticeVec, Longitude, SCoeff, Tile};

use crate::angle::Angle;
use crate::augment::AugmentedLink;
use crate::error::PolyhedraError;
use serde::{Deserialize, Serialize};

pub type VertexId = usize;
pub type PEdgeId = usize;
pub type PFaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FaceColor {
    White,
    Shaded,
}

/// What an ideal vertex truncates to: one boundary rectangle each.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexKind {
    /// The collapsed crossing circle of a twist region.
    CrossingCircle { region: usize },
    /// A strand arc of the flat link running between two crossing disks.
    StrandArc { arc: usize },
}

/// An ideal vertex of the truncated polyhedron. The four incident edges and
/// the four faces between them are stored in a consistent cyclic order, so
/// `faces[k]` lies between `edges[k]` and `edges[(k+1) % 4]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealVertex {
    pub kind: VertexKind,
    pub edges: [PEdgeId; 4],
    pub faces: [PFaceId; 4],
}

/// Which of the three segments of a crossing-disk chord an edge copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordSegment {
    TipA = 0,
    Middle = 1,
    TipB = 2,
}

/// An interior edge: one side of one chord segment of one crossing disk.
/// Interior angle pi/2, external angle pi/2.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InteriorEdge {
    pub ends: [VertexId; 2],
    pub white: PFaceId,
    pub shaded: PFaceId,
    pub region: usize,
    pub segment: ChordSegment,
    /// 0 = the side of the chord holding the region's first two ends,
    /// 1 = the other side.
    pub side: usize,
}

/// An interior face. The ring lists boundary incidences in cyclic order:
/// entry `(e, v)` is an edge followed by the vertex after it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InteriorFace {
    pub color: FaceColor,
    pub ring: Vec<(PEdgeId, VertexId)>,
}

impl InteriorFace {
    pub fn degree(&self) -> usize {
        self.ring.len()
    }
}

/// The combinatorial truncated ideal polyhedron. The decomposition consists
/// of two instances of this complex (`PolyId::P1`, `PolyId::P2`), mirror
/// images of each other glued along their faces.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TruncatedPolyhedron {
    pub vertices: Vec<IdealVertex>,
    pub edges: Vec<InteriorEdge>,
    pub faces: Vec<InteriorFace>,
}

impl TruncatedPolyhedron {
    /// Every interior edge carries this dihedral angle.
    pub fn interior_angle(&self) -> Angle {
        Angle::PI_2
    }

    /// External angle `pi - alpha` of every interior edge.
    pub fn external_angle(&self) -> Angle {
        Angle::PI_2
    }

    pub fn shaded_face_count(&self) -> usize {
        self.faces.iter().filter(|f| f.color == FaceColor::Shaded).count()
    }

    pub fn white_face_count(&self) -> usize {
        self.faces.iter().filter(|f| f.color == FaceColor::White).count()
    }

    /// Index `k` such that `faces[k]` at vertex `v` sits between
    /// `edges[k]` and `edges[k+1]`.
    pub fn side_index(&self, v: VertexId, face: PFaceId) -> Option<usize> {
        self.vertices[v].faces.iter().position(|&f| f == face)
    }
}

/// The two polyhedron instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PolyId {
    P1,
    P2,
}

impl PolyId {
    pub fn other(self) -> PolyId {
        match self {
            PolyId::P1 => PolyId::P2,
            PolyId::P2 => PolyId::P1,
        }
    }
}

/// A face identification, with explicit edge and vertex correspondences.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacePairing {
    pub a: (PolyId, PFaceId),
    pub b: (PolyId, PFaceId),
    pub edge_map: Vec<(PEdgeId, PEdgeId)>,
    pub vertex_map: Vec<(VertexId, VertexId)>,
}

impl FacePairing {
    pub fn map_edge(&self, e: PEdgeId) -> Option<PEdgeId> {
        self.edge_map
            .iter()
            .find_map(|&(x, y)| if x == e { Some(y) } else { None })
    }

    pub fn map_vertex(&self, v: VertexId) -> Option<VertexId> {
        self.vertex_map
            .iter()
            .find_map(|&(x, y)| if x == v { Some(y) } else { None })
    }
}

/// Face pairings reassembling the link exterior from the two polyhedra.
///
/// White faces always glue `P1` to `P2` by the identity. Shaded faces glue
/// the two halves of each crossing disk: within each polyhedron for a flat
/// region, across the polyhedra with a one-corner shift for a half-twisted
/// region.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Gluing {
    pub shaded: Vec<FacePairing>,
    pub white: Vec<FacePairing>,
}

impl Gluing {
    pub fn pairings(&self) -> impl Iterator<Item = &FacePairing> {
        self.shaded.iter().chain(self.white.iter())
    }

    /// The pairing whose `a` or `b` face is the given one; the result is
    /// oriented so that the given face is on the `a` side.
    pub fn across(&self, face: (PolyId, PFaceId)) -> Option<FacePairing> {
        for p in self.pairings() {
            if p.a == face {
                return Some(p.clone());
            }
            if p.b == face {
                return Some(FacePairing {
                    a: p.b,
                    b: p.a,
                    edge_map: p.edge_map.iter().map(|&(x, y)| (y, x)).collect(),
                    vertex_map: p.vertex_map.iter().map(|&(x, y)| (y, x)).collect(),
                });
            }
        }
        None
    }
}

/// Bookkeeping for each twist region inside the complex.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionGeometry {
    pub circle_vertex: VertexId,
    /// Edge ids by `[side][segment]`.
    pub edges: [[PEdgeId; 3]; 2],
    /// Shaded faces: `triangles[0]` on side 0, `triangles[1]` on side 1.
    pub triangles: [PFaceId; 2],
    /// Arc vertices at the four region ends, in end order `e0, e1, e2, e3`.
    pub end_arcs: [VertexId; 4],
}

/// One knot component of the augmented link (same strands as the original
/// link), as a cyclic sequence of region passes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct KnotComponent {
    /// Component id of the underlying diagram component.
    pub diagram_component: usize,
    /// Strand-arc vertices along this component, in traversal order.
    pub arcs: Vec<VertexId>,
    /// Twist regions passed, with multiplicity (one entry per arc-to-arc
    /// passage).
    pub region_passes: Vec<usize>,
}

impl KnotComponent {
    /// Number of twist regions passed, counted with multiplicity.
    pub fn multiplicity(&self) -> usize {
        self.region_passes.len()
    }
}

/// The full decomposition: two mirror polyhedra, their gluing, and the
/// provenance maps tying vertices back to the augmented link.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub link: AugmentedLink,
    pub complex: TruncatedPolyhedron,
    pub gluing: Gluing,
    pub regions: Vec<RegionGeometry>,
    pub components: Vec<KnotComponent>,
}

impl Decomposition {
    pub fn p1(&self) -> &TruncatedPolyhedron {
        &self.complex
    }

    pub fn p2(&self) -> &TruncatedPolyhedron {
        &self.complex
    }

    /// Glued edge classes, each a sorted list of `(poly, edge)` instances.
    /// In a valid decomposition every class has exactly four members.
    pub fn edge_classes(&self) -> Vec<Vec<(PolyId, PEdgeId)>> {
        let n = self.complex.edges.len();
        let idx = |p: PolyId, e: PEdgeId| -> usize {
            match p {
                PolyId::P1 => e,
                PolyId::P2 => n + e,
            }
        };
        let mut parent: Vec<usize> = (0..2 * n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in self.gluing.pairings() {
            for &(ea, eb) in &p.edge_map {
                let (x, y) = (idx(p.a.0, ea), idx(p.b.0, eb));
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let mut classes: std::collections::BTreeMap<usize, Vec<(PolyId, PEdgeId)>> =
            Default::default();
        for p in [PolyId::P1, PolyId::P2] {
            for e in 0..n {
                let root = find(&mut parent, idx(p, e));
                classes.entry(root).or_default().push((p, e));
            }
        }
        classes.into_values().collect()
    }

    /// Angle sum around a glued edge class: `pi/2` per member.
    pub fn edge_class_angle_sum(&self, class: &[(PolyId, PEdgeId)]) -> Angle {
        Angle::PI_2 * class.len() as i64
    }

    /// Assemble the cusp tori. See [`cusp`] for the lattice conventions.
    pub fn cusp_tori(&self) -> Result<Vec<CuspTorus>, PolyhedraError> {
        cusp::assemble_cusps(self)
    }

    /// Check that the identity map on the shared complex is a color- and
    /// incidence-preserving isomorphism between the two instances (the
    /// reflection pairing through the projection plane).
    pub fn verify_isomorphic(&self) -> bool {
        // both instances share the complex; verify the structure is
        // self-consistent so the identity really is an isomorphism
        self.validate_structure().is_ok()
    }

    /// Structural invariants of the polyhedra and gluing.
    pub fn validate_structure(&self) -> Result<(), PolyhedraError> {
        let c = &self.complex;
        let t = self.link.region_count();
        let fail = |msg: String| Err(PolyhedraError::InvalidStructure(msg));

        // Euler count for the ideal polyhedron on the sphere
        let (v, e, f) = (c.vertices.len(), c.edges.len(), c.faces.len());
        if v + f != e + 2 {
            return fail(format!("Euler count fails: V={v} E={e} F={f}"));
        }
        if v != 3 * t || e != 6 * t {
            return fail(format!("expected 3t vertices and 6t edges, got V={v} E={e}, t={t}"));
        }
        if c.shaded_face_count() != 2 * t {
            return fail(format!("expected 2t shaded faces, got {}", c.shaded_face_count()));
        }
        // faces: shaded are triangles, all faces have >= 3 sides, no repeats
        for (fi, face) in c.faces.iter().enumerate() {
            if face.degree() < 3 {
                return fail(format!("face {fi} has {} sides", face.degree()));
            }
            if face.color == FaceColor::Shaded && face.degree() != 3 {
                return fail(format!("shaded face {fi} is not a triangle"));
            }
            let mut vs: Vec<VertexId> = face.ring.iter().map(|&(_, v)| v).collect();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != face.degree() {
                return fail(format!("face {fi} repeats a vertex"));
            }
            // ring consistency: consecutive (edge, vertex) entries chain up
            for i in 0..face.ring.len() {
                let (e1, v1) = face.ring[i];
                let (e2, _) = face.ring[(i + 1) % face.ring.len()];
                if !c.edges[e1].ends.contains(&v1) || !c.edges[e2].ends.contains(&v1) {
                    return fail(format!("face {fi} ring breaks at position {i}"));
                }
            }
        }
        // edges: distinct endpoints, one white and one shaded side
        for (ei, edge) in c.edges.iter().enumerate() {
            if edge.ends[0] == edge.ends[1] {
                return fail(format!("edge {ei} is a loop"));
            }
            if c.faces[edge.white].color != FaceColor::White
                || c.faces[edge.shaded].color != FaceColor::Shaded
            {
                return fail(format!("edge {ei} face colors wrong"));
            }
        }
        // vertices: rectangular boundary faces with alternating colors and
        // opposite faces of equal color
        for (vi, vert) in c.vertices.iter().enumerate() {
            for k in 0..4 {
                let f = vert.faces[k];
                let (e1, e2) = (vert.edges[k], vert.edges[(k + 1) % 4]);
                let on = |e: PEdgeId| c.edges[e].white == f || c.edges[e].shaded == f;
                if !on(e1) || !on(e2) {
                    return fail(format!("vertex {vi} side {k} not between its edges"));
                }
                if !c.edges[e1].ends.contains(&vi) {
                    return fail(format!("vertex {vi} lists a non-incident edge"));
                }
            }
            let colors: Vec<FaceColor> = vert.faces.iter().map(|&f| c.faces[f].color).collect();
            if colors[0] != colors[2] || colors[1] != colors[3] || colors[0] == colors[1] {
                return fail(format!("vertex {vi} boundary face colors do not alternate"));
            }
        }
        // gluing: white pairings P1-P2, every edge class 4-valent with
        // angle sum 2 pi
        for p in &self.gluing.white {
            if p.a.0 == p.b.0 {
                return fail("white pairing within one polyhedron".into());
            }
        }
        for class in self.edge_classes() {
            if class.len() != 4 {
                return fail(format!("edge class {:?} is {}-valent", class, class.len()));
            }
            if self.edge_class_angle_sum(&class) != Angle::TWO_PI {
                return fail("edge class angle sum is not 2 pi".into());
            }
        }
        Ok(())
    }

    /// JSON dump of the polyhedra and gluing, for debugging and SVG export.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "link": self.link.to_json(),
            "polyhedron": self.complex,
            "gluing": self.gluing,
            "edge_classes": self.edge_classes().iter().map(|cl| {
                cl.iter().map(|(p, e)| serde_json::json!([format!("{p:?}"), e])).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

/// Build the two-polyhedron decomposition of the augmented link exterior.
pub fn decompose(link: &AugmentedLink) -> Result<Decomposition, PolyhedraError> {
    build::build(link)
}

/// Report from the angled-structure verification.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AngledReport {
    /// Edge-class angle sums, all required to be exactly 2 pi.
    pub edge_classes_checked: usize,
    /// Normal curves meeting only interior edges, with their external-angle
    /// sums in units of pi/2 and whether each is a vertex link.
    pub curves: Vec<CurveCheck>,
    /// True when enumeration was cut off by the length bound.
    pub truncated: bool,
    pub violations: Vec<String>,
}

impl AngledReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurveCheck {
    /// Interior edges crossed, in traversal order.
    pub edges: Vec<PEdgeId>,
    /// External angle sum as a multiple of pi/2.
    pub angle_sum_half_pi: usize,
    pub is_vertex_link: bool,
}

/// Verify the angled-decomposition conditions: angle sum 2 pi around every
/// glued edge, and external-angle sum at least 2 pi over every normal curve
/// meeting only interior edges, with equality exactly for vertex links.
///
/// Enumeration is exhaustive when the polyhedron has at most 30 interior
/// edges; larger instances are truncated at `max_curve_len` crossings and the
/// report says so. Since every external angle is pi/2, any curve crossing
/// five or more edges passes automatically; the decisive checks are the short
/// curves.
pub fn verify_angled(dec: &Decomposition, max_curve_len: usize) -> AngledReport {
    let mut violations = Vec::new();
    let mut n_classes = 0;
    for class in dec.edge_classes() {
        n_classes += 1;
        if dec.edge_class_angle_sum(&class) != Angle::TWO_PI {
            violations.push(format!(
                "edge class {:?} has angle sum {}",
                class,
                dec.edge_class_angle_sum(&class)
            ));
        }
    }

    let exhaustive = dec.complex.edges.len() <= 30;
    let limit = if exhaustive { dec.complex.edges.len() } else { max_curve_len };
    let raw = crate::normalsurf::enumerate_interior_normal_curves(&dec.complex, limit);
    let mut curves = Vec::new();
    for edges in raw {
        let is_vertex_link = curve_is_vertex_link(&dec.complex, &edges);
        let sum = edges.len();
        if sum < 4 {
            violations.push(format!(
                "normal curve through edges {edges:?} has angle sum {}pi/2 < 2pi",
                sum
            ));
        } else if sum == 4 && !is_vertex_link {
            violations.push(format!(
                "normal curve through edges {edges:?} meets the 2pi bound without encircling a vertex"
            ));
        }
        curves.push(CurveCheck { edges, angle_sum_half_pi: sum, is_vertex_link });
    }
    AngledReport {
        edge_classes_checked: n_classes,
        curves,
        truncated: !exhaustive,
        violations,
    }
}

/// A 4-edge curve encircles a vertex when its edges are exactly the four
/// edges at one vertex.
fn curve_is_vertex_link(c: &TruncatedPolyhedron, edges: &[PEdgeId]) -> bool {
    if edges.len() != 4 {
        return false;
    }
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    c.vertices.iter().any(|v| {
        let mut ve = v.edges;
        ve.sort_unstable();
        ve.to_vec() == sorted
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::augment;
    use crate::families;

    fn decomposition_of(d: &crate::diagram::LinkDiagram) -> Decomposition {
        decompose(&augment(d).unwrap()).unwrap()
    }

    #[test]
    fn two_region_decomposition_is_the_octahedron() {
        // the flat augmentation of a double twist diagram decomposes into
        // ideal octahedra: 6 vertices, 12 edges, 8 triangular faces
        let d = families::double_twist(6, 6).unwrap();
        let dec = decomposition_of(&d);
        let c = &dec.complex;
        assert_eq!(c.vertices.len(), 6);
        assert_eq!(c.edges.len(), 12);
        assert_eq!(c.faces.len(), 8);
        assert_eq!(c.shaded_face_count(), 4);
        assert_eq!(c.white_face_count(), 4);
        assert!(c.faces.iter().all(|f| f.degree() == 3));
        dec.validate_structure().unwrap();
    }

    #[test]
    fn shaded_count_and_euler_on_family() {
        for d in [
            families::pretzel(&[2, 2, 2]).unwrap(),
            families::pretzel(&[4, 1, 3]).unwrap(),
            families::pretzel(&[6, 7, 6, 7]).unwrap(),
            families::double_twist(7, 6).unwrap(),
            families::double_twist(3, 4).unwrap(),
        ] {
            let dec = decomposition_of(&d);
            let t = dec.link.region_count();
            assert_eq!(dec.complex.shaded_face_count(), 2 * t, "{}", d.label());
            assert_eq!(dec.complex.white_face_count(), t + 2, "{}", d.label());
            dec.validate_structure().unwrap();
            assert!(dec.verify_isomorphic());
        }
    }

    #[test]
    fn every_glued_edge_class_is_four_valent() {
        let d = families::pretzel(&[4, 1, 3]).unwrap();
        let dec = decomposition_of(&d);
        for class in dec.edge_classes() {
            assert_eq!(class.len(), 4);
            assert_eq!(dec.edge_class_angle_sum(&class), Angle::TWO_PI);
            // two shaded-side and two white-side instances around each class:
            // each member contributes one of each; the four faces around the
            // glued edge alternate white and shaded
            let shaded_sides: usize = class.len() / 2;
            assert_eq!(shaded_sides, 2);
        }
    }

    #[test]
    fn angled_verification_passes_on_octahedron() {
        let d = families::double_twist(6, 6).unwrap();
        let dec = decomposition_of(&d);
        let report = verify_angled(&dec, 12);
        assert!(report.passed(), "violations: {:?}", report.violations);
        assert!(!report.truncated);
        // vertex links exist (one per boundary face) and meet 2 pi exactly
        let links = report.curves.iter().filter(|c| c.is_vertex_link).count();
        assert_eq!(links, 6);
        assert!(report
            .curves
            .iter()
            .all(|c| c.angle_sum_half_pi > 4 || c.is_vertex_link));
        // curves crossing five or more edges clear the bound automatically
        assert!(report
            .curves
            .iter()
            .filter(|c| c.edges.len() >= 5)
            .all(|c| c.angle_sum_half_pi >= 5));
    }

    #[test]
    fn angled_verification_on_three_regions() {
        let d = families::pretzel(&[2, 2, 2]).unwrap();
        let dec = decomposition_of(&d);
        let report = verify_angled(&dec, 18);
        assert!(report.passed(), "violations: {:?}", report.violations);
        let links = report.curves.iter().filter(|c| c.is_vertex_link).count();
        assert_eq!(links, dec.complex.vertices.len());
    }
}
