use core::fmt;
use core::ops::{Add, Neg, Sub};

use alloc::vec::Vec;

/// A point of the integer lattice `Z^2`.
///
/// The derived ordering is lexicographic by `(x, y)`; polygons use it to pick
/// the first vertex of their cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// `self × other`, the z-component of the cross product.
    pub fn cross(self, other: LatticePoint) -> i64 {
        self.x * other.y - self.y * other.x
    }

    pub fn dot(self, other: LatticePoint) -> i64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm2(self) -> i64 {
        self.dot(self)
    }

    /// Number of lattice steps along the vector, `gcd(|x|, |y|)`.
    pub fn lattice_length(self) -> i64 {
        num_integer::gcd(self.x, self.y)
    }

    /// The vector divided by its lattice length. The zero vector is returned
    /// unchanged.
    pub fn primitive(self) -> LatticePoint {
        let g = self.lattice_length();
        if g == 0 {
            self
        } else {
            LatticePoint::new(self.x / g, self.y / g)
        }
    }

    pub fn scale(self, k: i64) -> LatticePoint {
        LatticePoint::new(self.x * k, self.y * k)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint::new(x, y)
    }
}

impl From<LatticePoint> for (i64, i64) {
    fn from(p: LatticePoint) -> Self {
        (p.x, p.y)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation of the turn `a -> b -> c`: positive for counterclockwise,
/// negative for clockwise, zero when collinear.
pub fn orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> i64 {
    (b - a).cross(c - a)
}

/// A finite set of lattice points, stored sorted and without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LatticeSet {
    points: Vec<LatticePoint>,
}

impl LatticeSet {
    pub fn new(points: impl IntoIterator<Item = LatticePoint>) -> Self {
        let mut points: Vec<LatticePoint> = points.into_iter().collect();
        points.sort_unstable();
        points.dedup();
        LatticeSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LatticePoint> + '_ {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn into_vec(self) -> Vec<LatticePoint> {
        self.points
    }
}

impl FromIterator<LatticePoint> for LatticeSet {
    fn from_iter<I: IntoIterator<Item = LatticePoint>>(iter: I) -> Self {
        LatticeSet::new(iter)
    }
}

/// A point with half-integer coordinates, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfPoint {
    pub x2: i64,
    pub y2: i64,
}

impl HalfPoint {
    pub fn is_lattice(self) -> bool {
        self.x2 % 2 == 0 && self.y2 % 2 == 0
    }

    pub fn to_lattice(self) -> Option<LatticePoint> {
        self.is_lattice()
            .then(|| LatticePoint::new(self.x2 / 2, self.y2 / 2))
    }
}

impl fmt::Display for HalfPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |v: i64, f: &mut fmt::Formatter<'_>| {
            if v % 2 == 0 {
                write!(f, "{}", v / 2)
            } else {
                write!(f, "{}/2", v)
            }
        };
        f.write_str("(")?;
        part(self.x2, f)?;
        f.write_str(", ")?;
        part(self.y2, f)?;
        f.write_str(")")
    }
}
