//! Brute-force reference checks for the diagram predicates.
//!
//! These deliberately avoid the indexing shortcuts of the main predicate code:
//! they enumerate raw edge pairs and corner 4-tuples, validate each candidate
//! curve arc by arc, and report every witness found. They exist to be run
//! against [`crate::diagram::is_prime`] and [`crate::diagram::is_twist_reduced`]
//! over a corpus, and back the `oracle` CLI subcommand.

use crate::diagram::{dart, dart_crossing, CrossingId, EdgeId, LinkDiagram};

/// All primality violations found by exhaustive search: monogon faces plus
/// every unordered edge pair that co-bounds two common faces.
pub fn prime_violations(d: &LinkDiagram) -> Vec<String> {
    let mut out = Vec::new();
    for (fi, f) in d.faces().iter().enumerate() {
        if f.degree() == 1 {
            out.push(format!("monogon face {fi}"));
        }
    }
    let n = d.edge_count();
    for e1 in 0..n {
        for e2 in e1 + 1..n {
            // a curve crossing exactly e1 and e2 alternates between two
            // faces, each bordering both edges
            let [a1, a2] = d.edge_faces(e1);
            let [b1, b2] = d.edge_faces(e2);
            let same = (a1 == b1 && a2 == b2) || (a1 == b2 && a2 == b1);
            if same && a1 != a2 {
                out.push(format!("edges {e1},{e2} co-bound faces {},{}", a1.min(a2), a1.max(a2)));
            }
        }
    }
    out
}

/// All twist-reducedness violations found by exhaustive corner enumeration.
pub fn twist_reduced_violations(d: &LinkDiagram) -> Vec<String> {
    let regions = d.twist_regions();
    let mut region_of = vec![usize::MAX; d.crossing_count()];
    for (i, r) in regions.iter().enumerate() {
        for &c in &r.crossings {
            region_of[c] = i;
        }
    }

    let other_face = |e: EdgeId, f: usize| -> usize {
        let [f1, f2] = d.edge_faces(e);
        if f1 == f {
            f2
        } else {
            f1
        }
    };

    let mut out = Vec::new();
    let n = d.crossing_count();
    for c1 in 0..n {
        for c2 in c1 + 1..n {
            for k1 in 0..4 {
                for k2 in 0..4 {
                    // curve: corner arc at c1, side arc, corner arc at c2, side arc
                    let (a1, a2) = (d.edge_at(c1, k1), d.edge_at(c1, (k1 + 1) % 4));
                    let (b1, b2) = (d.edge_at(c2, k2), d.edge_at(c2, (k2 + 1) % 4));
                    let g1 = d.corner_face(c1, k1);
                    let g2 = d.corner_face(c2, k2);
                    let (x1, x2) = (other_face(a1, g1), other_face(a2, g1));
                    let (y1, y2) = (other_face(b1, g2), other_face(b2, g2));
                    // the two side arcs must each run inside a single face
                    let direct = x2 == y1 && x1 == y2;
                    let swapped = x2 == y2 && x1 == y1;
                    if !(direct || swapped) {
                        continue;
                    }
                    let mut cut = vec![a1, a2, b1, b2];
                    cut.sort_unstable();
                    cut.dedup();
                    if !side_is_trivial(d, &regions, &region_of, c1, c2, &cut) {
                        out.push(format!(
                            "crossings {c1},{c2} corners {k1},{k2} cut {:?}",
                            cut
                        ));
                    }
                }
            }
        }
    }
    out
}

/// One side of the curve must be empty of crossings, or be exactly a bigon
/// row joining the two crossings.
fn side_is_trivial(
    d: &LinkDiagram,
    regions: &[crate::diagram::TwistRegion],
    region_of: &[usize],
    c1: CrossingId,
    c2: CrossingId,
    cut: &[EdgeId],
) -> bool {
    let n = d.crossing_count();
    let mut seen = vec![false; n];
    let mut stack = vec![c1, c2];
    seen[c1] = true;
    seen[c2] = true;
    while let Some(c) = stack.pop() {
        for s in 0..4 {
            if cut.contains(&d.edge_at(c, s)) {
                continue;
            }
            let o = dart_crossing(d.opposite(dart(c, s)));
            if !seen[o] {
                seen[o] = true;
                stack.push(o);
            }
        }
    }
    let with_crossings: Vec<usize> = (0..n).filter(|&c| seen[c]).collect();
    let without: Vec<usize> = (0..n).filter(|&c| !seen[c]).collect();
    if without.is_empty() {
        return true; // other side has no crossings
    }
    let r = region_of[c1];
    if region_of[c2] != r {
        return false;
    }
    for side in [&with_crossings, &without] {
        if side.iter().any(|&c| region_of[c] != r) {
            continue;
        }
        let mut span = side.to_vec();
        span.push(c1);
        span.push(c2);
        span.sort_unstable();
        span.dedup();
        if row_between(&regions[r], &span, c1, c2) {
            return true;
        }
    }
    false
}

/// Walk the chain from c1 toward c2 in both directions; the span is a bigon
/// row exactly when one walk reaches c2 having covered the span.
fn row_between(
    region: &crate::diagram::TwistRegion,
    span: &[usize],
    c1: usize,
    c2: usize,
) -> bool {
    let chain = &region.crossings;
    let m = chain.len();
    let start = chain.iter().position(|&x| x == c1).unwrap();
    for dir in [1usize, m - 1] {
        let mut visited = vec![c1];
        let mut pos = start;
        for _ in 0..m {
            if chain[pos] == c2 {
                break;
            }
            if !region.cyclic {
                if dir == 1 && pos + 1 == m {
                    break;
                }
                if dir != 1 && pos == 0 {
                    break;
                }
            }
            pos = (pos + dir) % m;
            visited.push(chain[pos]);
        }
        if *visited.last().unwrap() == c2 {
            let mut v = visited.clone();
            v.sort_unstable();
            v.dedup();
            if v.as_slice() == span {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{is_prime, is_twist_reduced};
    use crate::families;

    #[test]
    fn oracle_agrees_with_predicates_on_corpus() {
        for d in families::small_corpus() {
            if !d.is_connected() {
                continue;
            }
            let fast = is_prime(&d).unwrap().is_prime();
            let slow = prime_violations(&d).is_empty();
            assert_eq!(fast, slow, "prime disagreement on {}", d.label());
            if fast {
                let fast_tr = is_twist_reduced(&d).unwrap().is_reduced();
                let slow_tr = twist_reduced_violations(&d).is_empty();
                assert_eq!(fast_tr, slow_tr, "twist-reduced disagreement on {}", d.label());
            }
        }
    }
}
