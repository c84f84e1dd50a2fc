//! Progressive arcs on cusp tori and their certified length contribution.
//!
//! Cut the universal cover of a cusp torus into strips along the meridional
//! lattice lines (white lines on a crossing-circle cusp, shaded lines on a
//! knot-strand cusp). A simplicial arc spanning one strip from wall to wall
//! is progressive, and any inward extension of it picks up combinatorial
//! length at least pi/3: the cheapest extensions are a single ideal triangle
//! (one longitudinal segment, or two diagonals), with boundary bigons free
//! but unable to progress across a strip on their own.

use crate::angle::Angle;
use crate::error::SurfaceError;
use crate::polyhedra::{CuspTorus, Dir};
use serde::{Deserialize, Serialize};

/// An arc on one cusp torus: each entry is a tile index with the sides the
/// arc enters and leaves through. Endpoints lie on the entry side of the
/// first segment and the exit side of the last.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspArc {
    pub segments: Vec<CuspArcSegment>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspArcSegment {
    pub tile: usize,
    pub enter: usize,
    pub exit: usize,
}

/// The three shapes of a progressive arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProgressiveType {
    /// A single longitudinal segment.
    Longitudinal,
    /// Two diagonal segments through adjacent tiles.
    TwoDiagonals,
    /// Two diagonals with meridional segments between them.
    DiagonalsWithMeridionals,
}

/// Verify that the arc is simplicial and progressive, classify its shape,
/// and return the certified combinatorial length lower bound pi/3.
pub fn progressive_arc_bound(
    torus: &CuspTorus,
    arc: &CuspArc,
) -> Result<(Angle, ProgressiveType), SurfaceError> {
    if arc.segments.is_empty() {
        return Err(SurfaceError::NotSimplicial("empty arc".into()));
    }
    for (i, s) in arc.segments.iter().enumerate() {
        if s.tile >= torus.tiles.len() || s.enter > 3 || s.exit > 3 {
            return Err(SurfaceError::NotSimplicial(format!("segment {i} out of range")));
        }
        if s.enter == s.exit {
            return Err(SurfaceError::NotSimplicial(format!(
                "segment {i} has both endpoints on one edge"
            )));
        }
    }
    for (i, w) in arc.segments.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        if torus.neighbors[a.tile][a.exit] != (b.tile, b.enter) {
            return Err(SurfaceError::NotSimplicial(format!(
                "segments {i},{} do not meet across a tile side",
                i + 1
            )));
        }
    }

    // the strip axis is the meridional direction: w on a crossing-circle
    // cusp, s on a knot-strand cusp; strips are bounded by the walls of the
    // other axis
    let wall_is_w_axis = !torus.is_crossing_circle();

    // lift the arc, tracking tile cells
    let mut cells = Vec::with_capacity(arc.segments.len());
    let first = arc.segments[0];
    let mut cell = (0i64, 0i64);
    cells.push((cell, first.tile));
    for w in arc.segments.windows(2) {
        let t = &torus.tiles[w[0].tile];
        let (dx, dy) = unit(t.side_dir(w[0].exit));
        cell = (cell.0 + dx, cell.1 + dy);
        cells.push((cell, w[1].tile));
    }

    let strip_of = |c: (i64, i64)| if wall_is_w_axis { c.0 } else { c.1 };
    let strip0 = strip_of(cells[0].0);
    if cells.iter().any(|&(c, _)| strip_of(c) != strip0) {
        return Err(SurfaceError::NotProgressive(
            "arc leaves its vertical strip".into(),
        ));
    }

    // endpoint walls, in lifted coordinates
    let wall_in = {
        let t = &torus.tiles[first.tile];
        let d = t.side_dir(first.enter);
        if d.is_w_axis() != wall_is_w_axis {
            return Err(SurfaceError::NotProgressive(
                "arc endpoint is not on a strip wall".into(),
            ));
        }
        lifted_wall(cells[0].0, d, wall_is_w_axis)
    };
    let last = *arc.segments.last().unwrap();
    let wall_out = {
        let t = &torus.tiles[last.tile];
        let d = t.side_dir(last.exit);
        if d.is_w_axis() != wall_is_w_axis {
            return Err(SurfaceError::NotProgressive(
                "arc endpoint is not on a strip wall".into(),
            ));
        }
        lifted_wall(cells.last().unwrap().0, d, wall_is_w_axis)
    };
    if (wall_in - wall_out).abs() != 1 {
        return Err(SurfaceError::NotProgressive(
            "arc endpoints are not on opposite sides of the strip".into(),
        ));
    }

    // classify segment shapes
    #[derive(PartialEq, Clone, Copy, Debug)]
    enum Shape {
        Longitudinal,
        Meridional,
        Diagonal,
    }
    let shapes: Vec<Shape> = arc
        .segments
        .iter()
        .map(|s| {
            let t = &torus.tiles[s.tile];
            let (de, dx) = (t.side_dir(s.enter), t.side_dir(s.exit));
            if de.is_w_axis() != dx.is_w_axis() {
                Shape::Diagonal
            } else if de.is_w_axis() == wall_is_w_axis {
                Shape::Longitudinal
            } else {
                Shape::Meridional
            }
        })
        .collect();

    let ty = match shapes.as_slice() {
        [Shape::Longitudinal] => ProgressiveType::Longitudinal,
        [Shape::Diagonal, Shape::Diagonal] => ProgressiveType::TwoDiagonals,
        [Shape::Diagonal, mid @ .., Shape::Diagonal]
            if !mid.is_empty() && mid.iter().all(|&s| s == Shape::Meridional) =>
        {
            ProgressiveType::DiagonalsWithMeridionals
        }
        _ => {
            return Err(SurfaceError::NotProgressive(format!(
                "segment pattern {shapes:?} is not a progressive shape"
            )))
        }
    };
    Ok((Angle::PI_3, ty))
}

fn unit(d: Dir) -> (i64, i64) {
    match d {
        Dir::Wp => (1, 0),
        Dir::Sp => (0, 1),
        Dir::Wn => (-1, 0),
        Dir::Sn => (0, -1),
    }
}

/// Lifted coordinate of the wall a side lies on, along the wall axis.
fn lifted_wall(cell: (i64, i64), d: Dir, wall_is_w_axis: bool) -> i64 {
    let base = if wall_is_w_axis { cell.0 } else { cell.1 };
    match d {
        Dir::Wp | Dir::Sp => base + 1,
        Dir::Wn | Dir::Sn => base,
    }
}
