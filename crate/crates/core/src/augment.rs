//! Augmented links: a crossing circle around every twist region.
//!
//! Augmenting trades a complicated diagram for a simple link: each twist
//! region keeps at most one crossing (its parity), full twists are traded for
//! a `1/s` surgery slope on the new crossing circle, and the original link is
//! recovered by filling every circle along its recovery slope. Every Dehn
//! filling of the original link is in particular a filling of the augmented
//! one.

use crate::diagram::{is_prime, is_twist_reduced, LinkDiagram, TwistRegion};
use crate::error::AugmentError;
use serde::{Deserialize, Serialize};

/// The circle added around one twist region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingCircle {
    /// Index of the twist region this circle encircles.
    pub region: usize,
    /// Number of crossings `a` in the region.
    pub crossings: usize,
    /// Half-twist left after removing full twists: 0 when `a` is even,
    /// otherwise the region's handedness.
    pub half_twist: i8,
    /// Signed number `s` of full twists removed; `2|s| + |half_twist| = a`.
    pub removed_full_twists: i64,
}

impl CrossingCircle {
    /// The filling slope `1/s` on this circle that restores the removed
    /// twists, or `None` when no filling is needed (`s = 0`).
    pub fn recovery_slope(&self) -> Option<(i64, i64)> {
        if self.removed_full_twists == 0 {
            None
        } else {
            Some((1, self.removed_full_twists))
        }
    }
}

/// A diagram together with one crossing circle per twist region.
#[derive(Debug, Clone)]
pub struct AugmentedLink {
    base: LinkDiagram,
    regions: Vec<TwistRegion>,
    circles: Vec<CrossingCircle>,
    flat: bool,
}

impl AugmentedLink {
    pub fn base(&self) -> &LinkDiagram {
        &self.base
    }

    pub fn regions(&self) -> &[TwistRegion] {
        &self.regions
    }

    pub fn circles(&self) -> &[CrossingCircle] {
        &self.circles
    }

    /// Number of twist regions (= number of crossing circles).
    pub fn region_count(&self) -> usize {
        self.circles.len()
    }

    /// True when every half-twist has been suppressed (the fully flat link).
    pub fn is_flat(&self) -> bool {
        self.flat
    }

    /// The flat view: same circles with all half-twists suppressed. In the
    /// flat link every knot strand lies in the projection plane.
    pub fn flat(&self) -> AugmentedLink {
        let circles = self
            .circles
            .iter()
            .map(|c| CrossingCircle { half_twist: 0, ..*c })
            .collect();
        AugmentedLink { base: self.base.clone(), regions: self.regions.clone(), circles, flat: true }
    }

    /// Recovery slopes per circle; `None` marks circles needing no filling.
    pub fn recovery_slopes(&self) -> Vec<(usize, Option<(i64, i64)>)> {
        self.circles
            .iter()
            .map(|c| (c.region, c.recovery_slope()))
            .collect()
    }

    /// JSON form: `{base, circles:[{region, s, half_twist}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base": {
                "crossings": self.base.to_pd_rows(),
                "label": self.base.label(),
            },
            "circles": self.circles.iter().map(|c| serde_json::json!({
                "region": c.region,
                "crossings": c.crossings,
                "s": c.removed_full_twists,
                "half_twist": c.half_twist,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Augment a diagram. Requires connected, prime, twist-reduced, and at least
/// two twist regions; each failure is reported as its own error.
pub fn augment(d: &LinkDiagram) -> Result<AugmentedLink, AugmentError> {
    match is_prime(d) {
        Ok(p) if p.is_prime() => {}
        Ok(_) => return Err(AugmentError::NotPrime),
        Err(_) => return Err(AugmentError::Disconnected),
    }
    match is_twist_reduced(d) {
        Ok(t) if t.is_reduced() => {}
        Ok(_) => return Err(AugmentError::NotTwistReduced),
        Err(_) => return Err(AugmentError::NotPrime),
    }
    let regions = d.twist_regions();
    if regions.len() < 2 {
        return Err(AugmentError::TooFewTwistRegions);
    }
    let circles = regions
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let a = r.count();
            let odd = a % 2 == 1;
            CrossingCircle {
                region: i,
                crossings: a,
                half_twist: if odd { r.handedness } else { 0 },
                removed_full_twists: i64::from(r.handedness) * (a as i64 / 2),
            }
        })
        .collect();
    let flat = d.twist_regions().iter().all(|r| r.count() % 2 == 0);
    Ok(AugmentedLink { base: d.clone(), regions, circles, flat })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn full_and_half_twist_bookkeeping() {
        // a = 7 leaves a half twist over 3 removed full twists; a = 6 is flat
        let d = families::double_twist(7, 6).unwrap();
        let a = augment(&d).unwrap();
        assert_eq!(a.region_count(), 2);
        for c in a.circles() {
            assert_eq!(
                2 * c.removed_full_twists.unsigned_abs() as usize + c.half_twist.unsigned_abs() as usize,
                c.crossings
            );
            match c.crossings {
                7 => {
                    assert_eq!(c.removed_full_twists.abs(), 3);
                    assert_eq!(c.half_twist.abs(), 1);
                    assert_eq!(c.recovery_slope(), Some((1, c.removed_full_twists)));
                }
                6 => {
                    assert_eq!(c.removed_full_twists.abs(), 3);
                    assert_eq!(c.half_twist, 0);
                }
                other => panic!("unexpected region size {other}"),
            }
        }
    }

    #[test]
    fn nine_crossings_gives_s_four() {
        let d = families::double_twist(9, 6).unwrap();
        let a = augment(&d).unwrap();
        let c9 = a.circles().iter().find(|c| c.crossings == 9).unwrap();
        assert_eq!(c9.removed_full_twists.abs(), 4);
        assert_eq!(c9.half_twist.abs(), 1);
    }

    #[test]
    fn single_crossing_region_needs_no_filling() {
        let d = families::pretzel(&[4, 1, 3]).unwrap();
        let a = augment(&d).unwrap();
        let c1 = a.circles().iter().find(|c| c.crossings == 1).unwrap();
        assert_eq!(c1.removed_full_twists, 0);
        assert_eq!(c1.recovery_slope(), None);
        assert_eq!(c1.half_twist.abs(), 1);
    }

    #[test]
    fn trefoil_is_rejected_as_single_region() {
        let err = augment(&families::trefoil()).unwrap_err();
        assert_eq!(err, AugmentError::TooFewTwistRegions);
    }

    #[test]
    fn preconditions_reported_distinctly() {
        assert_eq!(
            augment(&families::braid_connected_sum(3, 3).unwrap()).unwrap_err(),
            AugmentError::NotPrime
        );
        assert_eq!(
            augment(&families::pretzel(&[1, 2, 1, 2]).unwrap()).unwrap_err(),
            AugmentError::NotTwistReduced
        );
    }

    #[test]
    fn flat_view_suppresses_half_twists() {
        let d = families::pretzel(&[4, 1, 3]).unwrap();
        let a = augment(&d).unwrap();
        assert!(!a.is_flat());
        let flat = a.flat();
        assert!(flat.is_flat());
        assert!(flat.circles().iter().all(|c| c.half_twist == 0));
        // round trip invariant still recorded on the original
        for c in a.circles() {
            assert_eq!(
                c.crossings,
                2 * c.removed_full_twists.unsigned_abs() as usize
                    + c.half_twist.unsigned_abs() as usize
            );
        }
    }
}
