//! Cusp cross-sections: boundary rectangles tiled into tori.
//!
//! Truncating the ideal vertices leaves one rectangle per vertex per
//! polyhedron. Rectangles meet along the face gluings; flooding outward from
//! a base rectangle assigns every tile of a cusp integer lattice coordinates
//! in the `(w, s)` basis, where `s` is a step parallel to a shaded face and
//! `w` a step parallel to a white face (crossing a shaded side of a rectangle
//! is a `w`-step, crossing a white side an `s`-step). Revisits of a tile
//! produce the deck-transformation lattice of the torus, from which the
//! meridian and longitude are read off:
//!
//! - crossing circle, no half twist: meridian `w`, longitude `2s`;
//! - crossing circle with a half twist: meridian `w +- s`, longitude `2s`;
//! - knot strand through `n` region passes: meridian `2s`, longitude
//!   `n w + k s` with `k` an undetermined integer.

use super::*;
use crate::error::PolyhedraError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Axis direction in the cusp lattice plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dir {
    Wp,
    Sp,
    Wn,
    Sn,
}

impl Dir {
    /// Rotate by `q` counterclockwise quarter turns.
    fn rot(self, q: i8) -> Dir {
        const CCW: [Dir; 4] = [Dir::Wp, Dir::Sp, Dir::Wn, Dir::Sn];
        let i = CCW.iter().position(|&d| d == self).unwrap() as i8;
        CCW[(i + q).rem_euclid(4) as usize]
    }

    fn neg(self) -> Dir {
        self.rot(2)
    }

    fn unit(self) -> (i64, i64) {
        match self {
            Dir::Wp => (1, 0),
            Dir::Sp => (0, 1),
            Dir::Wn => (-1, 0),
            Dir::Sn => (0, -1),
        }
    }

    pub fn is_w_axis(self) -> bool {
        matches!(self, Dir::Wp | Dir::Wn)
    }
}

/// An integer vector in the `(w, s)` lattice basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeVec {
    pub w: i64,
    pub s: i64,
}

/// The `s`-coefficient of a knot-strand longitude is undetermined: the
/// gluing pins down a longitude only up to meridian twisting, and fixing it
/// would need linking numbers the polyhedra do not carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SCoeff {
    Known(i64),
    Unknown { representative: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Longitude {
    pub w: i64,
    pub s: SCoeff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CuspKind {
    CrossingCircle { region: usize },
    /// Index into [`Decomposition::components`].
    KnotStrand { component: usize },
}

/// One boundary rectangle placed in the cusp lattice.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Tile {
    pub poly: PolyId,
    pub vertex: VertexId,
    /// Cell coordinates: the tile spans `[w, w+1] x [s, s+1]`.
    pub cell: (i64, i64),
    /// Outward direction crossed through side 0; sides then follow
    /// counterclockwise (`handed = 1`) or clockwise (`handed = -1`).
    pub dir0: Dir,
    pub handed: i8,
}

impl Tile {
    pub fn side_dir(&self, side: usize) -> Dir {
        self.dir0.rot(self.handed * side as i8)
    }
}

/// A cusp torus: tiles with lattice frames, the deck lattice, and the
/// meridian/longitude in the `(w, s)` basis.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CuspTorus {
    pub kind: CuspKind,
    pub tiles: Vec<Tile>,
    /// `neighbors[t][side] = (tile, entering side)`.
    pub neighbors: Vec<[(usize, usize); 4]>,
    /// Lattice basis in Hermite form: `[(a, b), (0, c)]` with `a, c > 0`.
    pub lattice: [LatticeVec; 2],
    pub meridian: LatticeVec,
    pub longitude: Longitude,
    /// Slope-counting parameter: crossings in the region for a crossing
    /// circle, region passes (with multiplicity) for a knot strand.
    pub n: usize,
}

impl CuspTorus {
    pub fn is_crossing_circle(&self) -> bool {
        matches!(self.kind, CuspKind::CrossingCircle { .. })
    }

    pub fn tile_index(&self, poly: PolyId, vertex: VertexId) -> Option<usize> {
        self.tiles
            .iter()
            .position(|t| t.poly == poly && t.vertex == vertex)
    }
}

pub(super) fn assemble_cusps(dec: &Decomposition) -> Result<Vec<CuspTorus>, PolyhedraError> {
    let c = &dec.complex;
    let mut visited: BTreeMap<(PolyId, VertexId), bool> = BTreeMap::new();
    let mut tori = Vec::new();
    for p in [PolyId::P1, PolyId::P2] {
        for v in 0..c.vertices.len() {
            if visited.contains_key(&(p, v)) {
                continue;
            }
            let torus = flood_torus(dec, (p, v))?;
            for t in &torus.tiles {
                visited.insert((t.poly, t.vertex), true);
            }
            tori.push(torus);
        }
    }
    // one torus per diagram component plus one per twist region
    let expected = dec.components.len() + dec.link.region_count();
    if tori.len() != expected {
        return Err(PolyhedraError::NonTorusBoundary(format!(
            "found {} boundary tori, expected {}",
            tori.len(),
            expected
        )));
    }
    Ok(tori)
}

/// Neighbor of a tile across one of its sides, with the entering side index.
fn neighbor_across(
    dec: &Decomposition,
    poly: PolyId,
    vertex: VertexId,
    side: usize,
) -> Result<(PolyId, VertexId, usize, bool), PolyhedraError> {
    let c = &dec.complex;
    let vert = &c.vertices[vertex];
    let face = vert.faces[side];
    let (ea, eb) = (vert.edges[side], vert.edges[(side + 1) % 4]);
    let pairing = dec
        .gluing
        .across((poly, face))
        .ok_or_else(|| PolyhedraError::NonTorusBoundary(format!("face {face} unglued")))?;
    let (p2, _f2) = pairing.b;
    let v2 = pairing
        .map_vertex(vertex)
        .ok_or_else(|| PolyhedraError::NonTorusBoundary("vertex not in pairing".into()))?;
    let (ea2, eb2) = (
        pairing.map_edge(ea).ok_or_else(|| PolyhedraError::NonTorusBoundary("edge not in pairing".into()))?,
        pairing.map_edge(eb).ok_or_else(|| PolyhedraError::NonTorusBoundary("edge not in pairing".into()))?,
    );
    let vert2 = &c.vertices[v2];
    let side2 = (0..4)
        .find(|&k| {
            vert2.faces[k] == pairing.b.1 && {
                let (x, y) = (vert2.edges[k], vert2.edges[(k + 1) % 4]);
                (x == ea2 && y == eb2) || (x == eb2 && y == ea2)
            }
        })
        .ok_or_else(|| PolyhedraError::NonTorusBoundary("no matching side across gluing".into()))?;
    // does the first corner edge of the receiving side match the image of
    // the first corner edge of the crossed side?
    let first_matches = vert2.edges[side2] == ea2;
    Ok((p2, v2, side2, first_matches))
}

fn flood_torus(
    dec: &Decomposition,
    base: (PolyId, VertexId),
) -> Result<CuspTorus, PolyhedraError> {
    let c = &dec.complex;
    let shaded_side = |v: VertexId, k: usize| {
        c.faces[c.vertices[v].faces[k]].color == FaceColor::Shaded
    };
    // base frame: a shaded side faces +w
    let k0 = (0..4)
        .find(|&k| shaded_side(base.1, k))
        .expect("vertex with no shaded side");
    let base_tile = Tile {
        poly: base.0,
        vertex: base.1,
        cell: (0, 0),
        dir0: Dir::Wp.rot(-(k0 as i8)),
        handed: 1,
    };

    let mut tiles: Vec<Tile> = vec![base_tile];
    let mut index: BTreeMap<(PolyId, VertexId), usize> = BTreeMap::new();
    index.insert(base, 0);
    let mut translations: Vec<(i64, i64)> = Vec::new();
    let mut queue = vec![0usize];
    let mut neighbors: Vec<[(usize, usize); 4]> = vec![[(usize::MAX, 4); 4]];

    while let Some(ti) = queue.pop() {
        for side in 0..4 {
            let tile = tiles[ti].clone();
            let dir = tile.side_dir(side);
            // shaded sides move along w, white sides along s
            if shaded_side(tile.vertex, side) != dir.is_w_axis() {
                return Err(PolyhedraError::NonTorusBoundary(
                    "side color does not match lattice axis".into(),
                ));
            }
            let (p2, v2, side2, first_matches) =
                neighbor_across(dec, tile.poly, tile.vertex, side)?;
            let (dx, dy) = dir.unit();
            let cell2 = (tile.cell.0 + dx, tile.cell.1 + dy);
            let handed2 = if first_matches { -tile.handed } else { tile.handed };
            // dirs2[side2] = dir.neg() and dirs2[k] = rot(dir0, handed2 * k)
            let dir0_2 = dir.neg().rot(-(handed2 * side2 as i8));
            match index.get(&(p2, v2)) {
                None => {
                    let new_idx = tiles.len();
                    tiles.push(Tile { poly: p2, vertex: v2, cell: cell2, dir0: dir0_2, handed: handed2 });
                    neighbors.push([(usize::MAX, 4); 4]);
                    index.insert((p2, v2), new_idx);
                    neighbors[ti][side] = (new_idx, side2);
                    queue.push(new_idx);
                }
                Some(&old) => {
                    let t_old = &tiles[old];
                    if t_old.dir0 != dir0_2 || t_old.handed != handed2 {
                        return Err(PolyhedraError::NonTorusBoundary(
                            "tile frames disagree around a loop".into(),
                        ));
                    }
                    let delta = (cell2.0 - t_old.cell.0, cell2.1 - t_old.cell.1);
                    if delta != (0, 0) {
                        translations.push(delta);
                    }
                    neighbors[ti][side] = (old, side2);
                }
            }
        }
    }

    let lattice = hermite_basis(&translations).ok_or_else(|| {
        PolyhedraError::NonTorusBoundary("deck transformations do not span a lattice".into())
    })?;
    let det = lattice[0].w * lattice[1].s;
    if det != tiles.len() as i64 {
        return Err(PolyhedraError::NonTorusBoundary(format!(
            "lattice determinant {det} does not match {} tiles",
            tiles.len()
        )));
    }

    // identify the cusp
    let circle_region = tiles.iter().find_map(|t| match c.vertices[t.vertex].kind {
        VertexKind::CrossingCircle { region } => Some(region),
        VertexKind::StrandArc { .. } => None,
    });
    let (kind, meridian, longitude, n) = match circle_region {
        Some(region) => {
            if tiles.len() != 2 {
                return Err(PolyhedraError::NonTorusBoundary(format!(
                    "crossing circle cusp with {} tiles",
                    tiles.len()
                )));
            }
            let circle = dec.link.circles()[region];
            if lattice[0].w != 1 || lattice[1].s != 2 {
                return Err(PolyhedraError::NonTorusBoundary(
                    "crossing circle lattice is not [(1, *), (0, 2)]".into(),
                ));
            }
            let shear = lattice[0].s.rem_euclid(2);
            if (shear == 1) != (circle.half_twist != 0) {
                return Err(PolyhedraError::NonTorusBoundary(
                    "meridian shear does not match the half-twist flag".into(),
                ));
            }
            let meridian = LatticeVec { w: 1, s: if shear == 0 { 0 } else { circle.half_twist as i64 } };
            (
                CuspKind::CrossingCircle { region },
                meridian,
                Longitude { w: 0, s: SCoeff::Known(2) },
                circle.crossings,
            )
        }
        None => {
            // knot strand cusp: match the arc set against a component
            let mut arc_vertices: Vec<VertexId> =
                tiles.iter().map(|t| t.vertex).collect();
            arc_vertices.sort_unstable();
            arc_vertices.dedup();
            let comp_idx = dec
                .components
                .iter()
                .position(|k| {
                    let mut a = k.arcs.clone();
                    a.sort_unstable();
                    a.dedup();
                    a == arc_vertices
                })
                .ok_or_else(|| {
                    PolyhedraError::NonTorusBoundary(
                        "knot cusp does not match any component's arcs".into(),
                    )
                })?;
            let n = dec.components[comp_idx].multiplicity();
            if tiles.len() != 2 * n {
                return Err(PolyhedraError::NonTorusBoundary(format!(
                    "knot cusp has {} tiles, expected 2n = {}",
                    tiles.len(),
                    2 * n
                )));
            }
            if lattice[1].s != 2 || lattice[0].w != n as i64 {
                return Err(PolyhedraError::NonTorusBoundary(
                    "knot cusp lattice is not [(n, k), (0, 2)]".into(),
                ));
            }
            (
                CuspKind::KnotStrand { component: comp_idx },
                LatticeVec { w: 0, s: 2 },
                Longitude { w: n as i64, s: SCoeff::Unknown { representative: lattice[0].s } },
                n,
            )
        }
    };

    Ok(CuspTorus { kind, tiles, neighbors, lattice, meridian, longitude, n })
}

/// Hermite basis `[(a, b), (0, c)]`, `a, c > 0`, `0 <= b < c`, of the lattice
/// generated by the given vectors. `None` if they do not span rank 2.
fn hermite_basis(gens: &[(i64, i64)]) -> Option<[LatticeVec; 2]> {
    fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
        if b == 0 {
            (a.abs(), a.signum(), 0)
        } else {
            let (d, x, y) = egcd(b, a % b);
            (d, y, x - (a / b) * y)
        }
    }
    fn gcd(a: i64, b: i64) -> i64 {
        egcd(a, b).0
    }
    let mut row1: Option<(i64, i64)> = None;
    let mut c2: i64 = 0;
    for &(w, s) in gens {
        if w == 0 {
            c2 = gcd(c2, s.abs());
            continue;
        }
        match row1 {
            None => row1 = Some((w, s)),
            Some((w1, s1)) => {
                let (d, x, y) = egcd(w1, w);
                let combined = (d, x * s1 + y * s);
                let leftover = (w1 / d) * s - (w / d) * s1;
                c2 = gcd(c2, leftover.abs());
                row1 = Some(combined);
            }
        }
    }
    let (mut a, mut b) = row1?;
    if c2 == 0 {
        return None;
    }
    if a < 0 {
        a = -a;
        b = -b;
    }
    b = b.rem_euclid(c2);
    Some([LatticeVec { w: a, s: b }, LatticeVec { w: 0, s: c2 }])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::augment;
    use crate::families;
    use crate::polyhedra::decompose;

    fn cusps_of(d: &crate::diagram::LinkDiagram) -> (Decomposition, Vec<CuspTorus>) {
        let dec = decompose(&augment(d).unwrap()).unwrap();
        let cusps = dec.cusp_tori().unwrap();
        (dec, cusps)
    }

    #[test]
    fn flat_crossing_circle_cusps_have_meridian_w() {
        // all regions even: fully flat, no shears
        let d = families::double_twist(6, 6).unwrap();
        let (_dec, cusps) = cusps_of(&d);
        let circles: Vec<_> = cusps.iter().filter(|t| t.is_crossing_circle()).collect();
        assert_eq!(circles.len(), 2);
        for t in circles {
            assert_eq!(t.tiles.len(), 2);
            assert_eq!(t.meridian, LatticeVec { w: 1, s: 0 });
            assert_eq!(t.longitude, Longitude { w: 0, s: SCoeff::Known(2) });
        }
    }

    #[test]
    fn half_twisted_circle_shears_meridian() {
        let d = families::double_twist(7, 6).unwrap();
        let (dec, cusps) = cusps_of(&d);
        let odd_region = dec
            .link
            .circles()
            .iter()
            .position(|c| c.half_twist != 0)
            .unwrap();
        let t = cusps
            .iter()
            .find(|t| t.kind == CuspKind::CrossingCircle { region: odd_region })
            .unwrap();
        assert_eq!(t.meridian.w, 1);
        assert_eq!(t.meridian.s.abs(), 1);
        assert_eq!(t.longitude, Longitude { w: 0, s: SCoeff::Known(2) });
        assert_eq!(t.n, 7);
    }

    #[test]
    fn knot_cusp_is_a_2_by_n_block() {
        let d = families::double_twist(6, 6).unwrap();
        let (dec, cusps) = cusps_of(&d);
        let knots: Vec<_> = cusps.iter().filter(|t| !t.is_crossing_circle()).collect();
        assert_eq!(knots.len(), 1);
        let t = knots[0];
        // a knot passes each of the two regions twice: n = 4
        assert_eq!(t.n, 4);
        assert_eq!(t.tiles.len(), 8);
        assert_eq!(t.meridian, LatticeVec { w: 0, s: 2 });
        assert_eq!(t.longitude.w, 4);
        assert!(matches!(t.longitude.s, SCoeff::Unknown { .. }));
        let _ = dec;
    }

    #[test]
    fn cusp_count_is_components_plus_regions() {
        for d in [
            families::pretzel(&[2, 2, 2]).unwrap(),
            families::pretzel(&[4, 1, 3]).unwrap(),
            families::double_twist(7, 7).unwrap(),
            families::pretzel(&[7, 6, 7, 6]).unwrap(),
        ] {
            let (dec, cusps) = cusps_of(&d);
            let t = dec.link.region_count();
            assert_eq!(cusps.len(), d.component_count() + t, "{}", d.label());
            for cusp in &cusps {
                match cusp.kind {
                    CuspKind::CrossingCircle { .. } => assert_eq!(cusp.tiles.len(), 2),
                    CuspKind::KnotStrand { component } => {
                        let n = dec.components[component].multiplicity();
                        assert_eq!(cusp.tiles.len(), 2 * n);
                    }
                }
            }
        }
    }

    #[test]
    fn knot_multiplicities_match_component_stats() {
        for d in [
            families::pretzel(&[4, 1, 3]).unwrap(),
            families::double_twist(7, 6).unwrap(),
            families::pretzel(&[2, 2, 2]).unwrap(),
        ] {
            let (dec, cusps) = cusps_of(&d);
            let regions = d.twist_regions();
            let stats = d.component_stats(&regions);
            for cusp in cusps.iter().filter(|t| !t.is_crossing_circle()) {
                if let CuspKind::KnotStrand { component } = cusp.kind {
                    let diag_comp = dec.components[component].diagram_component;
                    assert_eq!(
                        cusp.n,
                        stats[diag_comp].multiplicity,
                        "{}: component {diag_comp}",
                        d.label()
                    );
                }
            }
        }
    }

    #[test]
    fn hermite_basis_examples() {
        let b = hermite_basis(&[(2, 0), (1, -1), (0, 2)]).unwrap();
        assert_eq!(b[0], LatticeVec { w: 1, s: 1 });
        assert_eq!(b[1], LatticeVec { w: 0, s: 2 });
        let b = hermite_basis(&[(4, 1), (0, 2)]).unwrap();
        assert_eq!(b[0], LatticeVec { w: 4, s: 1 });
        assert_eq!(b[1], LatticeVec { w: 0, s: 2 });
        assert!(hermite_basis(&[(1, 0)]).is_none());
    }
}
