//! Surgery-curve coordinates in the cusp lattice basis and the two
//! slope-length threshold checks.
//!
//! On a crossing-circle cusp the only filling of interest is the recovery
//! slope `1/s`, whose curve is `w + sigma * a * s` for a region of `a`
//! crossings. On a knot-strand cusp any nontrivial slope takes at least
//! `n` steps along the white faces (`n` the region passes of the strand),
//! with the `s`-coefficient left symbolic because the true longitude is
//! pinned down only up to meridian twists.
//!
//! Geometric bounds use the maximal-cusp normalization where a shaded step
//! has length exactly 1 and a white step length at least 1, with the two
//! directions perpendicular; every comparison against the 6-Theorem
//! threshold is an integer radicand comparison, never floating point.

use crate::angle::Angle;
use crate::error::SlopeError;
use crate::polyhedra::{CuspKind, CuspTorus, Decomposition};
use serde::{Deserialize, Serialize};

/// Which side of the link a slope lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    CrossingCircle,
    KnotStrand,
}

/// A slope requested on a cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlopeSpec {
    /// The `1/s` filling restoring the removed full twists (crossing
    /// circles only).
    Recovery,
    /// A concrete `p/q` slope in the meridian-longitude basis of the cusp.
    Rational { p: i64, q: i64 },
    /// Any nontrivial slope (knot strands): the reported data is valid for
    /// every choice.
    AnyNontrivial,
}

/// The `s`-coefficient of a surgery curve; symbolic for knot strands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SCoeffValue {
    Exact(i64),
    Wildcard,
}

/// Surgery-curve coordinates in the `(w, s)` lattice basis of one cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeCoords {
    /// Index of the cusp torus this slope lives on.
    pub cusp: usize,
    pub w_coeff: i64,
    pub s_coeff: SCoeffValue,
    pub provenance: Provenance,
    pub nontrivial: bool,
}

/// An exact length value `sqrt(A n^2 + B)`; `B = 0, A = 1` is the integer
/// `n` itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeomBound {
    pub coeff_sq: i64,
    pub constant: i64,
    pub n: i64,
}

impl GeomBound {
    pub fn radicand(&self) -> i64 {
        self.coeff_sq * self.n * self.n + self.constant
    }

    /// Exact comparison `value > c` via radicands (`c >= 0`).
    pub fn exceeds(&self, c: i64) -> bool {
        self.radicand() > c * c
    }

    pub fn display(&self) -> String {
        if self.coeff_sq == 1 && self.constant == 0 {
            format!("{}", self.n.abs())
        } else {
            format!("sqrt({})", self.radicand())
        }
    }
}

/// A certified lower bound for the length of a slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LengthBound {
    /// Lower bound for the geometric length on the maximal cusp.
    Geometric { value: GeomBound },
    /// Lower bound `value` for the combinatorial length; `strict` records
    /// whether the bound is known to be strict.
    Combinatorial { value: Angle, strict: bool },
}

impl LengthBound {
    pub fn display(&self) -> String {
        match self {
            LengthBound::Geometric { value } => value.display(),
            LengthBound::Combinatorial { value, .. } => value.to_string(),
        }
    }

    pub fn is_strict(&self) -> bool {
        matches!(self, LengthBound::Combinatorial { strict: true, .. })
    }
}

/// Compute the surgery-curve coordinates for a slope on a cusp.
///
/// Crossing circles accept only their recovery slope; using the meridian
/// `w + h s` and longitude `2 s` from the cusp data, the recovery curve is
/// `w + sigma a s`. Knot strands accept any nontrivial slope `p/q`
/// (nontrivial means `q != 0`): the curve `p (2s) + q (n w + k s)` has
/// `w`-coefficient `q n` and symbolic `s`-coefficient.
pub fn surgery_coords(
    dec: &Decomposition,
    cusps: &[CuspTorus],
    cusp: usize,
    slope: SlopeSpec,
) -> Result<SlopeCoords, SlopeError> {
    let torus = &cusps[cusp];
    match torus.kind {
        CuspKind::CrossingCircle { region } => {
            let circle = dec.link.circles()[region];
            let s = circle.removed_full_twists;
            match slope {
                SlopeSpec::Recovery => {}
                SlopeSpec::Rational { p, q } if p == 1 && q == s && s != 0 => {}
                _ => return Err(SlopeError::NotRecoverySlope),
            }
            if s == 0 {
                // nothing was removed: no filling, no surgery curve
                return Err(SlopeError::TrivialSlope);
            }
            let sigma = i64::from(dec.link.regions()[region].handedness);
            let a = circle.crossings as i64;
            // mu + s * lambda = (w + h s) + s (2 s) = w + sigma a s
            Ok(SlopeCoords {
                cusp,
                w_coeff: 1,
                s_coeff: SCoeffValue::Exact(sigma * a),
                provenance: Provenance::CrossingCircle,
                nontrivial: true,
            })
        }
        CuspKind::KnotStrand { .. } => {
            let n = torus.n as i64;
            match slope {
                SlopeSpec::AnyNontrivial => Ok(SlopeCoords {
                    cusp,
                    w_coeff: n,
                    s_coeff: SCoeffValue::Wildcard,
                    provenance: Provenance::KnotStrand,
                    nontrivial: true,
                }),
                SlopeSpec::Rational { p, q } => {
                    if q == 0 {
                        return Err(SlopeError::TrivialSlope);
                    }
                    let _ = p; // the s-coefficient 2p + qk stays symbolic
                    Ok(SlopeCoords {
                        cusp,
                        w_coeff: q.abs() * n,
                        s_coeff: SCoeffValue::Wildcard,
                        provenance: Provenance::KnotStrand,
                        nontrivial: true,
                    })
                }
                SlopeSpec::Recovery => Err(SlopeError::NotRecoverySlope),
            }
        }
    }
}

/// Geometric length lower bound for a surgery curve, from `l(s) = 1`,
/// `l(w) >= 1`, and perpendicularity of the two steps.
pub fn geometric_length_bound(coords: &SlopeCoords) -> Result<LengthBound, SlopeError> {
    if !coords.nontrivial {
        return Err(SlopeError::TrivialSlope);
    }
    let value = match coords.s_coeff {
        SCoeffValue::Exact(s) => {
            // length^2 >= w^2 * l(w)^2 + s^2 >= w^2 + s^2
            GeomBound { coeff_sq: 1, constant: coords.w_coeff * coords.w_coeff, n: s }
        }
        SCoeffValue::Wildcard => {
            // valid for every s-coefficient: length >= |w|
            GeomBound { coeff_sq: 1, constant: 0, n: coords.w_coeff.abs() }
        }
    };
    Ok(LengthBound::Geometric { value })
}

/// Verdict of a filling check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurgeryVerdict {
    /// All boundary tori filled along sufficiently long slopes: the result
    /// is irreducible, atoroidal, not Seifert fibered, and has infinite
    /// word-hyperbolic fundamental group.
    Hyperbolike,
    /// A proper subset filled along sufficiently long slopes: the result is
    /// hyperbolic (with boundary).
    Hyperbolic,
    Inconclusive { failing: Vec<usize>, reason: String },
}

impl SurgeryVerdict {
    pub fn certified(&self) -> bool {
        !matches!(self, SurgeryVerdict::Inconclusive { .. })
    }
}

/// The 6-Theorem check: filling every cusp along slopes of geometric length
/// strictly greater than 6 yields a hyperbolike manifold. Comparisons are
/// exact radicand comparisons.
pub fn six_theorem_check(
    bounds: &[LengthBound],
    all_cusps_filled: bool,
) -> Result<SurgeryVerdict, SlopeError> {
    if bounds.is_empty() {
        return Err(SlopeError::EmptyFillingSet);
    }
    if !all_cusps_filled {
        return Ok(SurgeryVerdict::Inconclusive {
            failing: Vec::new(),
            reason: "the 6-Theorem requires a slope on every boundary torus".into(),
        });
    }
    let mut failing = Vec::new();
    for (i, b) in bounds.iter().enumerate() {
        match b {
            LengthBound::Geometric { value } => {
                if !value.exceeds(6) {
                    failing.push(i);
                }
            }
            LengthBound::Combinatorial { .. } => return Err(SlopeError::MissingBound(i)),
        }
    }
    if failing.is_empty() {
        Ok(SurgeryVerdict::Hyperbolike)
    } else {
        Ok(SurgeryVerdict::Inconclusive {
            failing,
            reason: "geometric length not certified greater than 6".into(),
        })
    }
}

/// The 2-pi threshold check on combinatorial lengths: all cusps filled gives
/// a hyperbolike manifold, a proper subset a hyperbolic one. A bound of
/// exactly 2 pi passes only when flagged strict.
pub fn two_pi_check(
    bounds: &[LengthBound],
    all_cusps_filled: bool,
) -> Result<SurgeryVerdict, SlopeError> {
    if bounds.is_empty() {
        return Err(SlopeError::EmptyFillingSet);
    }
    let mut failing = Vec::new();
    for (i, b) in bounds.iter().enumerate() {
        match b {
            LengthBound::Combinatorial { value, strict } => {
                let over = *value > Angle::TWO_PI || (*value == Angle::TWO_PI && *strict);
                if !over {
                    failing.push(i);
                }
            }
            LengthBound::Geometric { .. } => return Err(SlopeError::MissingBound(i)),
        }
    }
    if !failing.is_empty() {
        return Ok(SurgeryVerdict::Inconclusive {
            failing,
            reason: "combinatorial length not certified greater than 2 pi".into(),
        });
    }
    Ok(if all_cusps_filled {
        SurgeryVerdict::Hyperbolike
    } else {
        SurgeryVerdict::Hyperbolic
    })
}
