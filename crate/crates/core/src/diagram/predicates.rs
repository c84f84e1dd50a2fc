//! Primality and twist-reducedness.
//!
//! Both predicates quantify over simple closed curves in the projection
//! plane; the curves are handled dually as closed face-edge walks. A curve
//! meeting the diagram in two edge points corresponds to a pair of edges
//! co-bounding the same two faces. A curve meeting it in four points, two
//! adjacent to each of two crossings, corresponds to a pair of crossing
//! corners whose flanking edges open onto the same pair of faces.

use super::{dart, dart_crossing, CrossingId, EdgeId, LinkDiagram, TwistRegion};
use crate::error::PredicateError;
use std::collections::BTreeMap;

/// Outcome of the primality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Primality {
    Prime,
    NotPrime(PrimalityWitness),
}

impl Primality {
    pub fn is_prime(&self) -> bool {
        matches!(self, Primality::Prime)
    }
}

/// Why a diagram fails to be prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimalityWitness {
    /// A face with a single boundary edge.
    Monogon { face: usize },
    /// Two edges co-bounding the same two faces: a simple closed curve
    /// through those faces cuts both edges and has crossings on both sides.
    TwoCut { edges: [EdgeId; 2], faces: [usize; 2] },
}

/// Check primality. Requires a connected diagram.
pub fn is_prime(d: &LinkDiagram) -> Result<Primality, PredicateError> {
    if !d.is_connected() {
        return Err(PredicateError::Disconnected);
    }
    for (fi, face) in d.faces().iter().enumerate() {
        if face.is_monogon() {
            return Ok(Primality::NotPrime(PrimalityWitness::Monogon { face: fi }));
        }
    }
    // group edges by the unordered pair of faces on their two sides
    let mut seen: BTreeMap<(usize, usize), EdgeId> = BTreeMap::new();
    for e in 0..d.edge_count() {
        let [f1, f2] = d.edge_faces(e);
        let key = (f1.min(f2), f1.max(f2));
        if let Some(&prev) = seen.get(&key) {
            return Ok(Primality::NotPrime(PrimalityWitness::TwoCut {
                edges: [prev, e],
                faces: [key.0, key.1],
            }));
        }
        seen.insert(key, e);
    }
    Ok(Primality::Prime)
}

/// Outcome of the twist-reducedness check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistReduced {
    Reduced,
    NotReduced(TwistReducedWitness),
}

impl TwistReduced {
    pub fn is_reduced(&self) -> bool {
        matches!(self, TwistReduced::Reduced)
    }
}

/// A 4-point curve that bounds more than a row of bigons on both sides: the
/// two crossings it passes, the edges it cuts, and the faces its side arcs
/// run through.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReducedWitness {
    pub crossings: [CrossingId; 2],
    pub cut_edges: Vec<EdgeId>,
    pub corner_faces: [usize; 2],
    pub side_faces: [usize; 2],
}

/// Check twist-reducedness. Requires a connected, prime diagram.
pub fn is_twist_reduced(d: &LinkDiagram) -> Result<TwistReduced, PredicateError> {
    match is_prime(d)? {
        Primality::Prime => {}
        Primality::NotPrime(_) => return Err(PredicateError::NotPrime),
    }
    let regions = d.twist_regions();
    let region_of = region_index(d, &regions);

    // For each corner, the unordered pair of faces across its two flanking
    // edges. A matching pair at two different crossings is a candidate curve.
    let mut buckets: BTreeMap<(usize, usize), Vec<(CrossingId, usize)>> = BTreeMap::new();
    for c in 0..d.crossing_count() {
        for k in 0..4 {
            let corner = d.corner_face(c, k);
            let (e1, e2) = (d.edge_at(c, k), d.edge_at(c, (k + 1) % 4));
            let a1 = across(d, e1, corner);
            let a2 = across(d, e2, corner);
            let key = (a1.min(a2), a1.max(a2));
            buckets.entry(key).or_default().push((c, k));
        }
    }

    for (key, corners) in &buckets {
        for (i, &(c1, k1)) in corners.iter().enumerate() {
            for &(c2, k2) in &corners[i + 1..] {
                if c1 == c2 {
                    continue;
                }
                let mut cut: Vec<EdgeId> = vec![
                    d.edge_at(c1, k1),
                    d.edge_at(c1, (k1 + 1) % 4),
                    d.edge_at(c2, k2),
                    d.edge_at(c2, (k2 + 1) % 4),
                ];
                cut.sort_unstable();
                cut.dedup();
                if !curve_bounds_bigon_row(d, &regions, &region_of, c1, c2, &cut) {
                    return Ok(TwistReduced::NotReduced(TwistReducedWitness {
                        crossings: [c1, c2],
                        cut_edges: cut,
                        corner_faces: [d.corner_face(c1, k1), d.corner_face(c2, k2)],
                        side_faces: [key.0, key.1],
                    }));
                }
            }
        }
    }
    Ok(TwistReduced::Reduced)
}

/// Face on the other side of `e` from the face `from`.
fn across(d: &LinkDiagram, e: EdgeId, from: usize) -> usize {
    let [f1, f2] = d.edge_faces(e);
    if f1 == from {
        f2
    } else {
        f1
    }
}

fn region_index(d: &LinkDiagram, regions: &[TwistRegion]) -> Vec<usize> {
    let mut idx = vec![usize::MAX; d.crossing_count()];
    for (i, r) in regions.iter().enumerate() {
        for &c in &r.crossings {
            idx[c] = i;
        }
    }
    idx
}

/// Decide whether the candidate curve through crossings `c1`, `c2` (cutting
/// the given edges) is harmless: one of its sides must either contain no
/// crossings at all or be exactly a row of bigons joining `c1` to `c2`.
fn curve_bounds_bigon_row(
    d: &LinkDiagram,
    regions: &[TwistRegion],
    region_of: &[usize],
    c1: CrossingId,
    c2: CrossingId,
    cut: &[EdgeId],
) -> bool {
    let n = d.crossing_count();
    // components of the diagram after removing the cut edges
    let mut comp = vec![usize::MAX; n];
    let mut next_comp = 0;
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = next_comp;
        next_comp += 1;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(c) = stack.pop() {
            for s in 0..4 {
                let e = d.edge_at(c, s);
                if cut.contains(&e) {
                    continue;
                }
                let other = dart_crossing(d.opposite(dart(c, s)));
                if comp[other] == usize::MAX {
                    comp[other] = id;
                    stack.push(other);
                }
            }
        }
    }

    let with_crossings: Vec<CrossingId> = (0..n)
        .filter(|&c| comp[c] == comp[c1] || comp[c] == comp[c2])
        .collect();
    let without: Vec<CrossingId> = (0..n)
        .filter(|&c| comp[c] != comp[c1] && comp[c] != comp[c2])
        .collect();
    // the side away from the two crossings may be empty: trivial curve
    if without.is_empty() {
        return true;
    }
    // otherwise one of the two sides, together with the two crossings (which
    // can sit just outside the curve), must be a consecutive piece of one
    // bigon chain whose extreme crossings are exactly c1 and c2
    let r = region_of[c1];
    if region_of[c2] != r {
        return false;
    }
    for side in [&with_crossings, &without] {
        if side.iter().any(|&c| region_of[c] != r) {
            continue;
        }
        let mut span: Vec<CrossingId> = side.to_vec();
        span.push(c1);
        span.push(c2);
        span.sort_unstable();
        span.dedup();
        if chain_segment_between(&regions[r], &span, c1, c2) {
            return true;
        }
    }
    false
}

/// Is `span` a consecutive segment of the region's chain with extreme
/// crossings `c1` and `c2`?
pub(crate) fn chain_segment_between(
    region: &TwistRegion,
    span: &[CrossingId],
    c1: CrossingId,
    c2: CrossingId,
) -> bool {
    let chain = &region.crossings;
    let m = chain.len();
    let pos: Vec<usize> = {
        let mut pos: Vec<usize> = span
            .iter()
            .filter_map(|&c| chain.iter().position(|&x| x == c))
            .collect();
        if pos.len() != span.len() {
            return false;
        }
        pos.sort_unstable();
        pos
    };
    let is_interval_with_ends = |positions: &[usize]| -> bool {
        let consecutive = positions.windows(2).all(|w| w[1] == w[0] + 1);
        if !consecutive {
            return false;
        }
        let (lo, hi) = (positions[0], *positions.last().unwrap());
        let ends = [chain[lo], chain[hi]];
        ends == [c1, c2] || ends == [c2, c1]
    };
    if is_interval_with_ends(&pos) {
        return true;
    }
    if region.cyclic && pos.len() < m {
        // rotate the chain so the span becomes a plain interval
        for shift in 1..m {
            let shifted: Vec<usize> = {
                let mut s: Vec<usize> = pos.iter().map(|&p| (p + shift) % m).collect();
                s.sort_unstable();
                s
            };
            if shifted.windows(2).all(|w| w[1] == w[0] + 1) {
                let lo = (shifted[0] + m - shift) % m;
                let hi = (*shifted.last().unwrap() + m - shift) % m;
                let ends = [chain[lo], chain[hi]];
                return ends == [c1, c2] || ends == [c2, c1];
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn trefoil_is_prime_and_reduced() {
        let d = families::trefoil();
        assert!(is_prime(&d).unwrap().is_prime());
        assert!(is_twist_reduced(&d).unwrap().is_reduced());
    }

    #[test]
    fn kink_fails_primality_with_monogon() {
        let d = families::kink_unknot();
        match is_prime(&d).unwrap() {
            Primality::NotPrime(PrimalityWitness::Monogon { .. }) => {}
            other => panic!("expected monogon witness, got {other:?}"),
        }
    }

    #[test]
    fn connected_sum_fails_with_two_cut() {
        let d = families::braid_connected_sum(3, 3).unwrap();
        match is_prime(&d).unwrap() {
            Primality::NotPrime(PrimalityWitness::TwoCut { edges, .. }) => {
                // the two middle arcs co-bound the middle and outer faces
                assert_ne!(edges[0], edges[1]);
            }
            other => panic!("expected 2-cut witness, got {other:?}"),
        }
    }

    #[test]
    fn flype_configuration_is_not_twist_reduced() {
        // two single crossings separated by larger boxes can be merged by a
        // flype around either box
        let d = families::pretzel(&[1, 2, 1, 2]).unwrap();
        assert!(is_prime(&d).unwrap().is_prime());
        match is_twist_reduced(&d).unwrap() {
            TwistReduced::NotReduced(w) => {
                assert_ne!(w.crossings[0], w.crossings[1]);
            }
            TwistReduced::Reduced => panic!("P(1,2,1,2) must not be twist-reduced"),
        }
    }

    #[test]
    fn pretzels_and_double_twists_are_reduced() {
        for d in [
            families::pretzel(&[2, 2, 2]).unwrap(),
            families::pretzel(&[4, 1, 3]).unwrap(),
            families::pretzel(&[3, 2, 3]).unwrap(),
            families::double_twist(2, 2).unwrap(),
            families::double_twist(6, 7).unwrap(),
            families::closed_two_braid(5).unwrap(),
        ] {
            assert!(is_prime(&d).unwrap().is_prime(), "{} not prime", d.label());
            assert!(
                is_twist_reduced(&d).unwrap().is_reduced(),
                "{} not twist-reduced",
                d.label()
            );
        }
    }

    #[test]
    fn bigon_rows_produce_no_witness() {
        // curves around part of a twist region bound bigon rows and are fine
        let d = families::pretzel(&[5, 2, 2]).unwrap();
        assert!(is_twist_reduced(&d).unwrap().is_reduced());
    }

    #[test]
    fn split_diagram_rejected() {
        // two disjoint trefoils in one PD line
        let rows = [
            [1, 4, 2, 5],
            [3, 6, 4, 1],
            [5, 2, 6, 3],
            [7, 10, 8, 11],
            [9, 12, 10, 7],
            [11, 8, 12, 9],
        ];
        let d = LinkDiagram::from_pd(&rows, "split").unwrap();
        assert!(!d.is_connected());
        assert_eq!(is_prime(&d), Err(PredicateError::Disconnected));
        assert_eq!(is_twist_reduced(&d), Err(PredicateError::Disconnected));
    }

    #[test]
    fn twist_reduced_requires_prime() {
        let d = families::braid_connected_sum(3, 3).unwrap();
        assert_eq!(is_twist_reduced(&d), Err(PredicateError::NotPrime));
    }
}
