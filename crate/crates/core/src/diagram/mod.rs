//! Link diagrams as 4-valent planar maps with over/under data.
//!
//! A diagram is stored as a combinatorial map: every crossing carries four
//! half-edge slots in a fixed counterclockwise cyclic order, and edges pair
//! slots. The strand running through slots 0 and 2 is the understrand, the
//! strand through slots 1 and 3 is the overstrand (the usual PD convention,
//! with slot 0 the incoming understrand). Faces come from rotation-system
//! traversal, and the Euler count `V - E + F = 2` is what certifies that the
//! rotation system is actually planar.

mod parse;
mod predicates;

pub use parse::{parse_collection, parse_diagram, parse_diagram_json, PdJson};
pub use predicates::{
    is_prime, is_twist_reduced, Primality, PrimalityWitness, TwistReduced, TwistReducedWitness,
};

use crate::error::DiagramError;
use serde::{Deserialize, Serialize};

/// Index of a crossing.
pub type CrossingId = usize;
/// Index of an edge.
pub type EdgeId = usize;
/// A dart (half-edge): `4 * crossing + slot`, pointing out of its crossing.
pub type Dart = usize;

#[inline]
pub fn dart(c: CrossingId, slot: usize) -> Dart {
    4 * c + slot
}

#[inline]
pub fn dart_crossing(d: Dart) -> CrossingId {
    d / 4
}

#[inline]
pub fn dart_slot(d: Dart) -> usize {
    d % 4
}

/// Next slot counterclockwise at the same crossing.
#[inline]
fn sigma(d: Dart) -> Dart {
    4 * (d / 4) + (d % 4 + 1) % 4
}

/// A face of the diagram: a cyclic sequence of darts, one per (edge, side)
/// incidence on its boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    darts: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    pub fn is_bigon(&self) -> bool {
        self.darts.len() == 2
    }

    pub fn is_monogon(&self) -> bool {
        self.darts.len() == 1
    }
}

/// A maximal chain of bigons: the crossings of one twist region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistRegion {
    /// Crossings in chain order (arbitrary but deterministic start for cyclic
    /// chains).
    pub crossings: Vec<CrossingId>,
    /// Sign of the twisting, taken from the first crossing of the chain under
    /// the orientation convention of [`LinkDiagram::crossing_sign`].
    pub handedness: i8,
    /// Components of the two strand passes through the region (understrand
    /// then overstrand of the first crossing in chain order).
    pub strands: [usize; 2],
    /// True when the bigon chain closes up on itself (closed 2-braid). Such a
    /// region has no free ends.
    pub cyclic: bool,
    /// For a non-cyclic region: the four outgoing darts in counterclockwise
    /// order around the collapsed region (two at each end crossing).
    pub ends: Vec<Dart>,
}

impl TwistRegion {
    /// Number of crossings in the region.
    pub fn count(&self) -> usize {
        self.crossings.len()
    }
}

/// Per-component count of twist regions visited, with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentStats {
    pub component: usize,
    /// Number of region passes made by this component; the sum over all
    /// components is `2t`.
    pub multiplicity: usize,
}

/// A link diagram: 4-valent planar map, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    label: String,
    /// Edge id in each of the four slots of each crossing.
    crossings: Vec<[EdgeId; 4]>,
    /// The two darts of each edge, smaller dart first.
    edges: Vec<[Dart; 2]>,
    edge_component: Vec<usize>,
    n_components: usize,
    faces: Vec<Face>,
    dart_face: Vec<usize>,
    /// Dart is traversed by the canonical orientation of its component.
    forward: Vec<bool>,
}

impl LinkDiagram {
    /// Build a diagram from PD rows: one `[a, b, c, d]` per crossing, edge
    /// labels listed counterclockwise starting at the incoming understrand.
    pub fn from_pd(rows: &[[u64; 4]], label: impl Into<String>) -> Result<Self, DiagramError> {
        let label = label.into();
        if rows.is_empty() {
            return Err(DiagramError::NoCrossings);
        }
        let n = rows.len();

        // pair slots by edge label
        let mut by_label: std::collections::BTreeMap<u64, Vec<Dart>> = Default::default();
        for (c, row) in rows.iter().enumerate() {
            for (s, &lab) in row.iter().enumerate() {
                by_label.entry(lab).or_default().push(dart(c, s));
            }
        }
        let mut theta = vec![usize::MAX; 4 * n];
        let mut edges = Vec::with_capacity(2 * n);
        let mut dart_edge = vec![usize::MAX; 4 * n];
        for (lab, darts) in &by_label {
            if darts.len() != 2 {
                return Err(DiagramError::EdgeLabelCount { label: *lab, count: darts.len() });
            }
            let (d0, d1) = (darts[0], darts[1]);
            theta[d0] = d1;
            theta[d1] = d0;
            dart_edge[d0] = edges.len();
            dart_edge[d1] = edges.len();
            edges.push([d0, d1]);
        }

        let crossings: Vec<[EdgeId; 4]> = (0..n)
            .map(|c| [0, 1, 2, 3].map(|s| dart_edge[dart(c, s)]))
            .collect();

        // faces: orbits of sigma . theta
        let mut dart_face = vec![usize::MAX; 4 * n];
        let mut faces = Vec::new();
        for start in 0..4 * n {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                dart_face[d] = faces.len();
                cycle.push(d);
                d = sigma(theta[d]);
                if d == start {
                    break;
                }
            }
            faces.push(Face { darts: cycle });
        }
        // planarity, per graph component: V - E + F = 2 must hold on each
        // (a split diagram is a disjoint union of planar maps)
        {
            let mut comp = vec![usize::MAX; n];
            let mut n_comp = 0;
            for start in 0..n {
                if comp[start] != usize::MAX {
                    continue;
                }
                comp[start] = n_comp;
                let mut stack = vec![start];
                while let Some(c) = stack.pop() {
                    for s in 0..4 {
                        let other = theta[dart(c, s)] / 4;
                        if comp[other] == usize::MAX {
                            comp[other] = n_comp;
                            stack.push(other);
                        }
                    }
                }
                n_comp += 1;
            }
            for g in 0..n_comp {
                let v = comp.iter().filter(|&&x| x == g).count();
                let e = edges.iter().filter(|d| comp[d[0] / 4] == g).count();
                let f = faces
                    .iter()
                    .filter(|face| comp[face.darts[0] / 4] == g)
                    .count();
                if v + f != e + 2 {
                    return Err(DiagramError::NonPlanar { v, e, f });
                }
            }
        }

        // components: strand-following
        let mut comp_of_dart = vec![usize::MAX; 4 * n];
        let mut n_components = 0;
        for start in 0..4 * n {
            if comp_of_dart[start] != usize::MAX {
                continue;
            }
            let id = n_components;
            n_components += 1;
            // flood both directions and the partner darts
            let mut stack = vec![start];
            while let Some(d) = stack.pop() {
                if comp_of_dart[d] != usize::MAX {
                    continue;
                }
                comp_of_dart[d] = id;
                stack.push(theta[d]);
                // continue the strand through the crossing
                let through = 4 * (d / 4) + (d % 4 + 2) % 4;
                stack.push(through);
            }
        }
        let edge_component: Vec<usize> = edges.iter().map(|e| comp_of_dart[e[0]]).collect();

        // canonical orientation: forward orbit from the least dart of each component
        let mut forward = vec![false; 4 * n];
        let mut seen_comp = vec![false; n_components];
        for start in 0..4 * n {
            let comp = comp_of_dart[start];
            if seen_comp[comp] {
                continue;
            }
            seen_comp[comp] = true;
            let mut d = start;
            loop {
                forward[d] = true;
                // cross the edge, then pass through the crossing
                let arrived = theta[d];
                d = 4 * (arrived / 4) + (arrived % 4 + 2) % 4;
                if d == start {
                    break;
                }
            }
        }

        Ok(LinkDiagram {
            label,
            crossings,
            edges,
            edge_component,
            n_components,
            faces,
            dart_face,
            forward,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn set_label(&mut self, label: impl Into<String>) {
        self.label = label.into();
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn component_count(&self) -> usize {
        self.n_components
    }

    /// Edge occupying the given slot of a crossing.
    pub fn edge_at(&self, c: CrossingId, slot: usize) -> EdgeId {
        self.crossings[c][slot % 4]
    }

    pub fn edge_of_dart(&self, d: Dart) -> EdgeId {
        self.crossings[dart_crossing(d)][dart_slot(d)]
    }

    /// The dart at the other end of the same edge.
    pub fn opposite(&self, d: Dart) -> Dart {
        let [a, b] = self.edges[self.edge_of_dart(d)];
        if a == d {
            b
        } else {
            a
        }
    }

    pub fn edge_darts(&self, e: EdgeId) -> [Dart; 2] {
        self.edges[e]
    }

    pub fn edge_component(&self, e: EdgeId) -> usize {
        self.edge_component[e]
    }

    /// Faces of the rotation system. `V - E + F = 2` is guaranteed.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Face on the side of the given dart (the face whose boundary walk
    /// leaves the crossing along `d`).
    pub fn face_of_dart(&self, d: Dart) -> usize {
        self.dart_face[d]
    }

    /// The two faces on either side of an edge. For a connected diagram these
    /// are always distinct.
    pub fn edge_faces(&self, e: EdgeId) -> [usize; 2] {
        let [a, b] = self.edges[e];
        [self.dart_face[a], self.dart_face[b]]
    }

    /// Face touching the corner of crossing `c` between slots `k` and `k+1`.
    pub fn corner_face(&self, c: CrossingId, k: usize) -> usize {
        self.dart_face[dart(c, (k + 1) % 4)]
    }

    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.crossings.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for s in 0..4 {
                let other = dart_crossing(self.opposite(dart(c, s)));
                if !seen[other] {
                    seen[other] = true;
                    count += 1;
                    stack.push(other);
                }
            }
        }
        count == self.crossings.len()
    }

    /// Sign of a crossing under the canonical component orientations:
    /// positive when the overstrand arrow is the understrand arrow rotated
    /// counterclockwise by a quarter turn.
    pub fn crossing_sign(&self, c: CrossingId) -> i8 {
        let under_out2 = self.forward[dart(c, 2)];
        let over_out3 = self.forward[dart(c, 3)];
        if under_out2 == over_out3 {
            1
        } else {
            -1
        }
    }

    /// Maximal bigon chains. Every crossing belongs to exactly one region.
    pub fn twist_regions(&self) -> Vec<TwistRegion> {
        let n = self.crossings.len();
        // union crossings joined by a bigon face
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut bigons: Vec<(usize, CrossingId, CrossingId)> = Vec::new();
        for (fi, face) in self.faces.iter().enumerate() {
            if face.is_bigon() {
                let c1 = dart_crossing(face.darts[0]);
                let c2 = dart_crossing(face.darts[1]);
                bigons.push((fi, c1, c2));
                let (r1, r2) = (find(&mut parent, c1), find(&mut parent, c2));
                if r1 != r2 {
                    parent[r1] = r2;
                }
            }
        }

        let mut members: std::collections::BTreeMap<usize, Vec<CrossingId>> = Default::default();
        for c in 0..n {
            let r = find(&mut parent, c);
            members.entry(r).or_default().push(c);
        }
        // bigon adjacency per crossing
        let mut adj: Vec<Vec<(CrossingId, usize)>> = vec![Vec::new(); n];
        for &(fi, c1, c2) in &bigons {
            adj[c1].push((c2, fi));
            if c1 != c2 {
                adj[c2].push((c1, fi));
            }
        }

        let mut regions = Vec::new();
        for (_, crossings) in members {
            let a = crossings.len();
            let b = bigons
                .iter()
                .filter(|&&(_, c1, _)| crossings.contains(&c1))
                .count();
            let cyclic = b >= a && a > 0 && b > 0;
            let ordered = if cyclic || a == 1 {
                crossings.clone()
            } else {
                // walk the path chain from its least end
                let end = *crossings
                    .iter()
                    .filter(|&&c| adj[c].len() == 1)
                    .min()
                    .expect("path chain has two ends");
                let mut ordered = vec![end];
                let mut prev = usize::MAX;
                let mut cur = end;
                while ordered.len() < a {
                    let (next, _) = *adj[cur]
                        .iter()
                        .find(|&&(c, _)| c != prev)
                        .expect("chain continues");
                    ordered.push(next);
                    prev = cur;
                    cur = next;
                }
                ordered
            };

            let first = ordered[0];
            let strands = [
                self.edge_component[self.edge_at(first, 0)],
                self.edge_component[self.edge_at(first, 1)],
            ];
            let handedness = self.crossing_sign(first);
            let ends = if cyclic {
                Vec::new()
            } else if a == 1 {
                vec![dart(first, 0), dart(first, 1), dart(first, 2), dart(first, 3)]
            } else {
                let last = *ordered.last().unwrap();
                let first_pair = self.chain_slot_pair(first, ordered[1]);
                let last_pair = self.chain_slot_pair(last, ordered[a - 2]);
                vec![
                    dart(first, (first_pair + 2) % 4),
                    dart(first, (first_pair + 3) % 4),
                    dart(last, (last_pair + 2) % 4),
                    dart(last, (last_pair + 3) % 4),
                ]
            };
            regions.push(TwistRegion { crossings: ordered, handedness, strands, cyclic, ends });
        }
        regions
    }

    /// The slot `x` of `c` such that slots `x, x+1` hold the two bigon edges
    /// toward the neighboring chain crossing `other`.
    fn chain_slot_pair(&self, c: CrossingId, other: CrossingId) -> usize {
        for x in 0..4 {
            let (e1, e2) = (self.edge_at(c, x), self.edge_at(c, (x + 1) % 4));
            if e1 == e2 {
                continue;
            }
            let to_other = |e: EdgeId| {
                let [d1, d2] = self.edges[e];
                (dart_crossing(d1) == c && dart_crossing(d2) == other)
                    || (dart_crossing(d2) == c && dart_crossing(d1) == other)
            };
            if to_other(e1) && to_other(e2) {
                // the two edges must co-bound a bigon between c and other
                let fs1 = self.edge_faces(e1);
                let fs2 = self.edge_faces(e2);
                let shared_bigon = fs1
                    .iter()
                    .any(|f| fs2.contains(f) && self.faces[*f].is_bigon());
                if shared_bigon {
                    return x;
                }
            }
        }
        panic!("no bigon slot pair from crossing {c} toward {other}");
    }

    /// Per-component region-visit counts. The multiplicities sum to `2t`.
    pub fn component_stats(&self, regions: &[TwistRegion]) -> Vec<ComponentStats> {
        let mut mult = vec![0usize; self.n_components];
        for r in regions {
            mult[r.strands[0]] += 1;
            mult[r.strands[1]] += 1;
        }
        mult.into_iter()
            .enumerate()
            .map(|(component, multiplicity)| ComponentStats { component, multiplicity })
            .collect()
    }

    /// PD rows with 1-based edge ids as labels. Inverse of [`from_pd`] up to
    /// relabeling.
    pub fn to_pd_rows(&self) -> Vec<[u64; 4]> {
        self.crossings
            .iter()
            .map(|row| row.map(|e| e as u64 + 1))
            .collect()
    }

    /// Canonical one-line PD text for this diagram.
    pub fn to_pd_string(&self) -> String {
        let terms: Vec<String> = self
            .to_pd_rows()
            .iter()
            .map(|r| format!("X({},{},{},{})", r[0], r[1], r[2], r[3]))
            .collect();
        terms.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    pub(crate) const TREFOIL_PD: [[u64; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];

    #[test]
    fn trefoil_basics() {
        let d = LinkDiagram::from_pd(&TREFOIL_PD, "trefoil").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.edge_count(), 6);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.faces().len(), 5);
        assert!(d.is_connected());
    }

    #[test]
    fn trefoil_is_one_cyclic_region() {
        let d = LinkDiagram::from_pd(&TREFOIL_PD, "trefoil").unwrap();
        let regions = d.twist_regions();
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].count(), 3);
        assert!(regions[0].cyclic);
        let stats = d.component_stats(&regions);
        assert_eq!(stats.len(), 1);
        assert_eq!(stats[0].multiplicity, 2);
    }

    #[test]
    fn empty_pd_is_rejected() {
        assert!(matches!(
            LinkDiagram::from_pd(&[], "empty"),
            Err(DiagramError::NoCrossings)
        ));
    }

    #[test]
    fn bad_edge_label_multiplicity() {
        let rows = [[1, 2, 3, 4], [1, 2, 3, 5]];
        assert!(matches!(
            LinkDiagram::from_pd(&rows, "bad"),
            Err(DiagramError::EdgeLabelCount { .. })
        ));
    }

    #[test]
    fn nonplanar_rotation_rejected() {
        // virtual-trefoil style rotation: one crossing with interleaved loops
        let rows = [[1, 2, 1, 2]];
        assert!(matches!(
            LinkDiagram::from_pd(&rows, "virtual"),
            Err(DiagramError::NonPlanar { .. })
        ));
    }

    #[test]
    fn kink_unknot_has_monogon_and_bigon() {
        let d = LinkDiagram::from_pd(&[[1, 2, 2, 1]], "kink").unwrap();
        let degs: Vec<usize> = d.faces().iter().map(|f| f.degree()).collect();
        let mut sorted = degs.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 1, 2]);
    }

    #[test]
    fn euler_formula_on_small_corpus() {
        for d in families::small_corpus() {
            let (v, e, f) = (d.crossing_count(), d.edge_count(), d.faces().len());
            assert_eq!(v + f, e + 2, "Euler fails for {}", d.label());
            let total: usize = d.faces().iter().map(|f| f.degree()).sum();
            assert_eq!(total, 2 * e, "face degrees must cover each edge twice");
        }
    }

    #[test]
    fn twist_regions_partition_crossings() {
        for d in families::small_corpus() {
            let regions = d.twist_regions();
            let mut seen = vec![false; d.crossing_count()];
            for r in &regions {
                for &c in &r.crossings {
                    assert!(!seen[c], "crossing in two regions ({})", d.label());
                    seen[c] = true;
                }
            }
            assert!(seen.iter().all(|&s| s), "region misses a crossing ({})", d.label());
            let stats = d.component_stats(&regions);
            let sum: usize = stats.iter().map(|s| s.multiplicity).sum();
            assert_eq!(sum, 2 * regions.len(), "pass count is 2t ({})", d.label());
        }
    }

    #[test]
    fn pretzel_4_1_3_matches_expected_structure() {
        // three twist regions holding 2, 1/2, and 1 1/2 full twists
        let d = families::pretzel(&[4, 1, 3]).unwrap();
        let mut counts: Vec<usize> = d.twist_regions().iter().map(|r| r.count()).collect();
        counts.sort_unstable();
        assert_eq!(counts, vec![1, 3, 4]);
        assert_eq!(d.component_count(), 1);
        let regions = d.twist_regions();
        let stats = d.component_stats(&regions);
        assert_eq!(stats.iter().map(|s| s.multiplicity).sum::<usize>(), 6);
        // bigon chains of lengths 3, 0, 2 respectively
        let mut bigons_per_region: Vec<usize> = regions.iter().map(|r| r.count() - 1).collect();
        bigons_per_region.sort_unstable();
        assert_eq!(bigons_per_region, vec![0, 2, 3]);
    }

    #[test]
    fn no_bigon_diagram_gives_singleton_regions() {
        // figure-eight-like rotation with no bigons: use the 4_1 standard PD
        let rows = [[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]];
        let d = LinkDiagram::from_pd(&rows, "4_1").unwrap();
        let has_bigons = d.faces().iter().any(|f| f.is_bigon());
        let regions = d.twist_regions();
        if !has_bigons {
            assert_eq!(regions.len(), d.crossing_count());
            assert!(regions.iter().all(|r| r.count() == 1));
        } else {
            // the standard 4_1 actually has two clasp regions of two crossings
            assert_eq!(regions.len(), 2);
            assert!(regions.iter().all(|r| r.count() == 2));
        }
    }

    #[test]
    fn region_maximality_merging_any_two_regions_breaks_chain() {
        for d in families::small_corpus() {
            let regions = d.twist_regions();
            // merging two distinct regions never yields a bigon chain: no bigon
            // face joins crossings of different regions
            let mut region_of = vec![usize::MAX; d.crossing_count()];
            for (i, r) in regions.iter().enumerate() {
                for &c in &r.crossings {
                    region_of[c] = i;
                }
            }
            for f in d.faces() {
                if f.is_bigon() {
                    let c1 = dart_crossing(f.darts()[0]);
                    let c2 = dart_crossing(f.darts()[1]);
                    assert_eq!(region_of[c1], region_of[c2], "bigon across regions ({})", d.label());
                }
            }
        }
    }
}
