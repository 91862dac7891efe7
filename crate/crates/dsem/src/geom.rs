//! Exact arithmetic over Q(√3) and planar points for patch embeddings.
//!
//! Tilings whose faces are triangles, squares, hexagons and 12-gons have all
//! edge directions at multiples of 30°, so unit-edge patches embed with
//! coordinates of the form a + b·√3 with rational a, b. Everything here is
//! exact; floats appear only in rendering.

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element a + b·√3 of Q(√3).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Ext {
    pub a: Rational64,
    pub b: Rational64,
}

impl Ext {
    pub const fn raw(a: Rational64, b: Rational64) -> Ext {
        Ext { a, b }
    }

    pub fn from_int(n: i64) -> Ext {
        Ext {
            a: Rational64::new_raw(n, 1),
            b: Rational64::new_raw(0, 1),
        }
    }

    pub fn rational(n: i64, d: i64) -> Ext {
        Ext {
            a: Rational64::new(n, d),
            b: Rational64::new_raw(0, 1),
        }
    }

    /// n/d · √3
    pub fn sqrt3(n: i64, d: i64) -> Ext {
        Ext {
            a: Rational64::new_raw(0, 1),
            b: Rational64::new(n, d),
        }
    }

    pub fn zero() -> Ext {
        Ext::from_int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Sign of a + b√3, computed exactly.
    pub fn signum(&self) -> i32 {
        if self.a.is_zero() && self.b.is_zero() {
            return 0;
        }
        if !self.a.is_negative() && !self.b.is_negative() {
            return 1;
        }
        if !self.a.is_positive() && !self.b.is_positive() {
            return -1;
        }
        // a and b have opposite signs: compare a² with 3b²
        let a2 = self.a * self.a;
        let b23 = self.b * self.b * Rational64::new(3, 1);
        match a2.cmp(&b23) {
            Ordering::Equal => 0, // impossible for nonzero (√3 is irrational)
            Ordering::Greater => {
                if self.a.is_negative() {
                    -1
                } else {
                    1
                }
            }
            Ordering::Less => {
                if self.b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = |q: Rational64| *q.numer() as f64 / *q.denom() as f64;
        r(self.a) + r(self.b) * 3f64.sqrt()
    }

    pub fn inv(&self) -> Ext {
        // 1/(a + b√3) = (a − b√3)/(a² − 3b²)
        let d = self.a * self.a - self.b * self.b * Rational64::new(3, 1);
        assert!(!d.is_zero(), "division by zero in Q(sqrt3)");
        Ext {
            a: self.a / d,
            b: -self.b / d,
        }
    }
}

impl PartialOrd for Ext {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ext {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum().cmp(&0)
    }
}

impl Add for Ext {
    type Output = Ext;
    fn add(self, o: Ext) -> Ext {
        Ext {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl Sub for Ext {
    type Output = Ext;
    fn sub(self, o: Ext) -> Ext {
        Ext {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Mul for Ext {
    type Output = Ext;
    fn mul(self, o: Ext) -> Ext {
        Ext {
            a: self.a * o.a + Rational64::new(3, 1) * self.b * o.b,
            b: self.a * o.b + self.b * o.a,
        }
    }
}

impl Div for Ext {
    type Output = Ext;
    fn div(self, o: Ext) -> Ext {
        self * o.inv()
    }
}

impl Neg for Ext {
    type Output = Ext;
    fn neg(self) -> Ext {
        Ext {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}r3", self.a, self.b)
    }
}

/// Exact planar point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Pt {
    pub x: Ext,
    pub y: Ext,
}

impl Pt {
    pub fn origin() -> Pt {
        Pt {
            x: Ext::zero(),
            y: Ext::zero(),
        }
    }

    pub fn cross(&self, o: &Pt) -> Ext {
        self.x * o.y - self.y * o.x
    }

    pub fn norm2(&self) -> Ext {
        self.x * self.x + self.y * self.y
    }

    /// Deterministic total order for tie-breaking.
    pub fn key(&self) -> (Rational64, Rational64, Rational64, Rational64) {
        (self.x.a, self.x.b, self.y.a, self.y.b)
    }
}

impl Add for Pt {
    type Output = Pt;
    fn add(self, o: Pt) -> Pt {
        Pt {
            x: self.x + o.x,
            y: self.y + o.y,
        }
    }
}

impl Sub for Pt {
    type Output = Pt;
    fn sub(self, o: Pt) -> Pt {
        Pt {
            x: self.x - o.x,
            y: self.y - o.y,
        }
    }
}

impl Neg for Pt {
    type Output = Pt;
    fn neg(self) -> Pt {
        Pt {
            x: -self.x,
            y: -self.y,
        }
    }
}

/// Unit vector at k·30°, for k in 0..12.
pub fn unit_dir(k: u8) -> Pt {
    let h = Ext::rational(1, 2);
    let s = Ext::sqrt3(1, 2);
    let one = Ext::from_int(1);
    let z = Ext::zero();
    let (x, y) = match k % 12 {
        0 => (one, z),
        1 => (s, h),
        2 => (h, s),
        3 => (z, one),
        4 => (-h, s),
        5 => (-s, h),
        6 => (-one, z),
        7 => (-s, -h),
        8 => (-h, -s),
        9 => (z, -one),
        10 => (h, -s),
        11 => (s, -h),
        _ => unreachable!(),
    };
    Pt { x, y }
}

/// Whether a polygon size keeps directions on the 30° grid.
pub fn embeddable_size(s: u32) -> bool {
    matches!(s, 3 | 4 | 6 | 12)
}

/// Left turn, in 30° units, at each corner when walking a regular s-gon
/// counterclockwise (the exterior angle).
pub fn ccw_turn_units(s: u32) -> u8 {
    debug_assert!(embeddable_size(s));
    (12 / s) as u8
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_and_order() {
        let x = Ext::rational(-3, 2) + Ext::sqrt3(1, 1); // √3 − 1.5 > 0
        assert_eq!(x.signum(), 1);
        let y = Ext::from_int(2) - Ext::sqrt3(1, 1); // 2 − √3 > 0
        assert_eq!(y.signum(), 1);
        let z = Ext::sqrt3(1, 1) - Ext::from_int(2);
        assert_eq!(z.signum(), -1);
        assert!(Ext::sqrt3(1, 1) > Ext::from_int(1));
        assert!(Ext::sqrt3(1, 1) < Ext::from_int(2));
    }

    #[test]
    fn field_ops() {
        let x = Ext::rational(1, 2) + Ext::sqrt3(3, 2);
        let y = x * x.inv();
        assert_eq!(y, Ext::from_int(1));
        assert_eq!((x - x).signum(), 0);
    }

    #[test]
    fn walking_a_polygon_closes() {
        for s in [3u32, 4, 6, 12] {
            let mut p = Pt::origin();
            let mut dir = 0u8;
            for _ in 0..s {
                p = p + unit_dir(dir);
                dir = (dir + ccw_turn_units(s)) % 12;
            }
            assert_eq!(p, Pt::origin(), "size {s}");
            assert_eq!(dir, 0);
        }
    }
}
