use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Roots;

use super::point::LatticePoint;
use crate::error::{Error, Result};

/// Regions of the disc `x^2 + y^2 <= tau2` scanned for primitive vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// `x <= 0` and `y >= 0`.
    QuarterNegXPosY,
    /// `x > 0`.
    OpenHalfPosX,
}

impl Region {
    fn admits(self, p: LatticePoint) -> bool {
        match self {
            Region::QuarterNegXPosY => p.x <= 0 && p.y >= 0,
            Region::OpenHalfPosX => p.x > 0,
        }
    }
}

/// Compares polar angles in `(-π, π]` exactly.
pub fn cmp_polar_angle(a: LatticePoint, b: LatticePoint) -> Ordering {
    fn class(p: LatticePoint) -> u8 {
        match (p.y.signum(), p.x.signum()) {
            (-1, _) => 0,
            (0, 1) => 1,
            (1, _) => 2,
            _ => 3,
        }
    }
    class(a)
        .cmp(&class(b))
        .then_with(|| 0.cmp(&a.cross(b)))
}

/// All primitive vectors with `x^2 + y^2 <= tau2` in `region`, sorted by
/// polar angle.
pub fn primitive_vectors(tau2: i64, region: Region) -> Result<Vec<LatticePoint>> {
    if tau2 < 1 {
        return Err(Error::invalid("tau2 must be at least 1"));
    }
    let r = tau2.sqrt();
    let mut out: Vec<LatticePoint> = (-r..=r)
        .flat_map(|x| (-r..=r).map(move |y| LatticePoint::new(x, y)))
        .filter(|&p| p.norm2() <= tau2 && p.lattice_length() == 1 && region.admits(p))
        .collect();
    out.sort_by(|&a, &b| cmp_polar_angle(a, b));
    Ok(out)
}
