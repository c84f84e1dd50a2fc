//! Constructors for standard diagram families.
//!
//! These build PD rows directly with a fixed planar layout and are used by the
//! test corpus, the benchmarks, and the verification CLI. Slot geometry for a
//! box crossing (chirality A): slot 0 = up-left, 1 = down-left, 2 = down-right,
//! 3 = up-right, so the understrand runs up-left to down-right.

use crate::diagram::LinkDiagram;
use crate::error::DiagramError;

struct LabelAlloc(u64);

impl LabelAlloc {
    fn fresh(&mut self) -> u64 {
        self.0 += 1;
        self.0
    }
}

/// Pretzel diagram `P(a_1, ..., a_t)`: vertical twist boxes side by side,
/// closed cyclically along the top and bottom.
///
/// For `t >= 3` with all `a_i >= 2` this is a prime, twist-reduced diagram
/// with `t` twist regions of the given sizes. Boxes of size 1 flanked by
/// larger boxes stay separate regions; `P(a, b)` degenerates to the closed
/// 2-braid on `a + b` crossings.
pub fn pretzel(sizes: &[u32]) -> Result<LinkDiagram, DiagramError> {
    assert!(!sizes.is_empty() && sizes.iter().all(|&a| a > 0), "box sizes must be positive");
    let t = sizes.len();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0usize, |acc, &a| {
            let o = *acc;
            *acc += a as usize;
            Some(o)
        })
        .collect();
    let total: usize = sizes.iter().map(|&a| a as usize).sum();
    let mut rows = vec![[0u64; 4]; total];
    let mut alloc = LabelAlloc(0);
    let c = |i: usize, j: usize| offsets[i] + j;

    for (i, &a) in sizes.iter().enumerate() {
        let a = a as usize;
        for j in 0..a.saturating_sub(1) {
            let left = alloc.fresh();
            rows[c(i, j)][1] = left; // down-left
            rows[c(i, j + 1)][0] = left; // up-left
            let right = alloc.fresh();
            rows[c(i, j)][2] = right; // down-right
            rows[c(i, j + 1)][3] = right; // up-right
        }
    }
    for i in 0..t {
        let next = (i + 1) % t;
        let top = alloc.fresh();
        rows[c(i, 0)][3] = top; // up-right of box i
        rows[c(next, 0)][0] = top; // up-left of box i+1
        let last_i = sizes[i] as usize - 1;
        let last_n = sizes[next] as usize - 1;
        let bottom = alloc.fresh();
        rows[c(i, last_i)][2] = bottom; // down-right
        rows[c(next, last_n)][1] = bottom; // down-left
    }
    let name = format!(
        "P({})",
        sizes.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",")
    );
    LinkDiagram::from_pd(&rows, name)
}

/// Closed 2-braid on `n` crossings (the standard `(2, n)` torus diagram):
/// a single cyclic twist region.
pub fn closed_two_braid(n: u32) -> Result<LinkDiagram, DiagramError> {
    pretzel(&vec![1; n as usize])
}

/// Double twist diagram `D(a, b)`: a vertical box of `a` crossings clasped by
/// a horizontal box of `b` crossings. For `a, b >= 2` this is prime and
/// twist-reduced with exactly two twist regions; `D(2, 2)` is the standard
/// figure-eight diagram up to mirror image.
pub fn double_twist(a: u32, b: u32) -> Result<LinkDiagram, DiagramError> {
    assert!(a > 0 && b > 0);
    let (a, b) = (a as usize, b as usize);
    let mut rows = vec![[0u64; 4]; a + b];
    let mut alloc = LabelAlloc(0);
    let ca = |j: usize| j; // vertical box
    let cb = |j: usize| a + j; // horizontal box

    // vertical box: down-left to next up-left, down-right to next up-right
    for j in 0..a - 1 {
        let left = alloc.fresh();
        rows[ca(j)][1] = left;
        rows[ca(j + 1)][0] = left;
        let right = alloc.fresh();
        rows[ca(j)][2] = right;
        rows[ca(j + 1)][3] = right;
    }
    // horizontal box: down-right to next down-left, up-right to next up-left
    for j in 0..b - 1 {
        let low = alloc.fresh();
        rows[cb(j)][2] = low;
        rows[cb(j + 1)][1] = low;
        let high = alloc.fresh();
        rows[cb(j)][3] = high;
        rows[cb(j + 1)][0] = high;
    }
    // clasp wiring
    let e = alloc.fresh(); // B left-bottom to A top-left
    rows[cb(0)][1] = e;
    rows[ca(0)][0] = e;
    let e = alloc.fresh(); // B right-bottom to A top-right
    rows[cb(b - 1)][2] = e;
    rows[ca(0)][3] = e;
    let e = alloc.fresh(); // B left-top around to A bottom-left
    rows[cb(0)][0] = e;
    rows[ca(a - 1)][1] = e;
    let e = alloc.fresh(); // B right-top around to A bottom-right
    rows[cb(b - 1)][3] = e;
    rows[ca(a - 1)][2] = e;

    LinkDiagram::from_pd(&rows, format!("D({a},{b})"))
}

/// Connected sum of two closed 2-braids `(2, a) # (2, b)`: two vertical boxes
/// closed on their outer sides and joined by two parallel middle arcs. Not a
/// prime diagram; the middle arcs are the 2-cut witness.
pub fn braid_connected_sum(a: u32, b: u32) -> Result<LinkDiagram, DiagramError> {
    assert!(a > 0 && b > 0);
    let (a, b) = (a as usize, b as usize);
    let mut rows = vec![[0u64; 4]; a + b];
    let mut alloc = LabelAlloc(0);
    let ca = |j: usize| j;
    let cb = |j: usize| a + j;

    for j in 0..a - 1 {
        let left = alloc.fresh();
        rows[ca(j)][1] = left;
        rows[ca(j + 1)][0] = left;
        let right = alloc.fresh();
        rows[ca(j)][2] = right;
        rows[ca(j + 1)][3] = right;
    }
    for j in 0..b - 1 {
        let left = alloc.fresh();
        rows[cb(j)][1] = left;
        rows[cb(j + 1)][0] = left;
        let right = alloc.fresh();
        rows[cb(j)][2] = right;
        rows[cb(j + 1)][3] = right;
    }
    let e = alloc.fresh(); // close A on the left
    rows[ca(0)][0] = e;
    rows[ca(a - 1)][1] = e;
    let e = alloc.fresh(); // close B on the right
    rows[cb(0)][3] = e;
    rows[cb(b - 1)][2] = e;
    let e = alloc.fresh(); // top middle arc
    rows[ca(0)][3] = e;
    rows[cb(0)][0] = e;
    let e = alloc.fresh(); // bottom middle arc
    rows[ca(a - 1)][2] = e;
    rows[cb(b - 1)][1] = e;

    LinkDiagram::from_pd(&rows, format!("(2,{a})#(2,{b})"))
}

/// The standard trefoil PD code.
pub fn trefoil() -> LinkDiagram {
    LinkDiagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], "3_1").unwrap()
}

/// The standard figure-eight PD code.
pub fn figure_eight() -> LinkDiagram {
    LinkDiagram::from_pd(
        &[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]],
        "4_1",
    )
    .unwrap()
}

/// The standard 6-crossing Borromean rings diagram (no bigons): three
/// circles in the symmetric arrangement, each passing alternately over and
/// under its two neighbors.
pub fn borromean_rings() -> LinkDiagram {
    let mut d = crate::diagram::parse_diagram(
        "gauss L6a4: O1 U3 O2 U4 ; U1 O5 U2 O6 ; O3 U5 O4 U6",
    )
    .unwrap();
    d.set_label("L6a4");
    d
}

/// One-crossing unknot diagram (a single kink; contains a monogon).
pub fn kink_unknot() -> LinkDiagram {
    LinkDiagram::from_pd(&[[1, 2, 2, 1]], "kink").unwrap()
}

/// A deterministic corpus of small diagrams (at most 8 crossings each) used
/// by the predicate oracles and structural tests.
pub fn small_corpus() -> Vec<LinkDiagram> {
    let mut out = vec![
        trefoil(),
        figure_eight(),
        borromean_rings(),
        kink_unknot(),
    ];
    for n in 2..=7 {
        out.push(closed_two_braid(n).unwrap());
    }
    for sizes in [
        &[2, 2, 2][..],
        &[3, 2, 2],
        &[2, 1, 2],
        &[4, 1, 3],
        &[3, 2, 3],
        &[1, 2, 1, 2],
        &[1, 3, 1, 2],
        &[2, 2, 2, 2],
    ] {
        out.push(pretzel(sizes).unwrap());
    }
    for (a, b) in [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2), (4, 4), (5, 3)] {
        out.push(double_twist(a, b).unwrap());
    }
    for (a, b) in [(3, 3), (2, 2), (3, 2)] {
        out.push(braid_connected_sum(a, b).unwrap());
    }
    out
}
