//! Exact angles as rational multiples of pi.
//!
//! Every angle and combinatorial area in this crate is a rational multiple of
//! pi (in practice a multiple of pi/6, the common refinement of the pi/2 unit
//! coming from right-angled edges and the pi/3 unit coming from ideal
//! triangles). Verdicts hinge on strict versus non-strict comparisons with
//! 2*pi, so these are kept exact; no floating point is involved anywhere.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// A rational multiple of pi, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Angle {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Angle {
    pub const ZERO: Angle = Angle { num: 0, den: 1 };
    pub const PI: Angle = Angle { num: 1, den: 1 };
    pub const TWO_PI: Angle = Angle { num: 2, den: 1 };
    pub const PI_2: Angle = Angle { num: 1, den: 2 };
    pub const PI_3: Angle = Angle { num: 1, den: 3 };
    pub const PI_6: Angle = Angle { num: 1, den: 6 };

    /// `num/den * pi`. Panics if `den == 0`.
    pub fn pi_frac(num: i64, den: i64) -> Angle {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let (num, den) = (num * sign, den * sign);
        let g = gcd(num, den).max(1);
        Angle { num: num / g, den: den / g }
    }

    pub fn pi_times(n: i64) -> Angle {
        Angle { num: n, den: 1 }
    }

    /// Numerator of the reduced fraction `self / pi`.
    pub fn pi_num(&self) -> i64 {
        self.num
    }

    /// Denominator of the reduced fraction `self / pi`.
    pub fn pi_den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// True if this angle is an integer multiple of pi/6.
    pub fn is_multiple_of_pi_6(&self) -> bool {
        6 % self.den == 0
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (-1, 1) => write!(f, "-pi"),
            (n, 1) => write!(f, "{}pi", n),
            (1, d) => write!(f, "pi/{}", d),
            (-1, d) => write!(f, "-pi/{}", d),
            (n, d) => write!(f, "{}pi/{}", n, d),
        }
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Angle({})", self)
    }
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle::pi_frac(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)
    }
}

impl AddAssign for Angle {
    fn add_assign(&mut self, rhs: Angle) {
        *self = *self + rhs;
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle::pi_frac(self.num * rhs.den - rhs.num * self.den, self.den * rhs.den)
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle { num: -self.num, den: self.den }
    }
}

impl Mul<i64> for Angle {
    type Output = Angle;
    fn mul(self, rhs: i64) -> Angle {
        Angle::pi_frac(self.num * rhs, self.den)
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Angle) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Angle {
    fn cmp(&self, other: &Angle) -> Ordering {
        // denominators are positive, so cross-multiplication preserves order
        let lhs = i128::from(self.num) * i128::from(other.den);
        let rhs = i128::from(other.num) * i128::from(self.den);
        lhs.cmp(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_equality() {
        assert_eq!(Angle::pi_frac(2, 6), Angle::PI_3);
        assert_eq!(Angle::pi_frac(-3, -6), Angle::PI_2);
        assert_eq!(Angle::pi_frac(4, 2), Angle::TWO_PI);
    }

    #[test]
    fn arithmetic() {
        assert_eq!(Angle::PI_2 + Angle::PI_2, Angle::PI);
        assert_eq!(Angle::PI_3 * 6, Angle::TWO_PI);
        assert_eq!(Angle::PI - Angle::PI_2, Angle::PI_2);
        assert_eq!(Angle::PI_2 * 4 - Angle::TWO_PI, Angle::ZERO);
    }

    #[test]
    fn ordering_is_exact() {
        // 7pi/3 > 2pi but 6pi/3 == 2pi
        assert!(Angle::pi_frac(7, 3) > Angle::TWO_PI);
        assert_eq!(Angle::pi_frac(6, 3), Angle::TWO_PI);
        assert!(Angle::pi_frac(5, 3) < Angle::TWO_PI);
    }

    #[test]
    fn display() {
        assert_eq!(Angle::pi_frac(7, 3).to_string(), "7pi/3");
        assert_eq!(Angle::PI.to_string(), "pi");
        assert_eq!(Angle::ZERO.to_string(), "0");
        assert_eq!(Angle::pi_times(2).to_string(), "2pi");
    }
}
