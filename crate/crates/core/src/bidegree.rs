use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A bidegree `(s, w)`: internal degree and motivic weight.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct Bidegree {
    pub s: i32,
    pub w: i32,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree { s: 0, w: 0 };
    /// Bidegree of `Sq1`.
    pub const SQ1: Bidegree = Bidegree { s: 1, w: 0 };
    /// Bidegree of `Sq2`.
    pub const SQ2: Bidegree = Bidegree { s: 2, w: 1 };
    /// Bidegree of `τ`.
    pub const TAU: Bidegree = Bidegree { s: 0, w: 1 };

    pub const fn new(s: i32, w: i32) -> Self {
        Self { s, w }
    }

    pub fn scale(self, k: i32) -> Self {
        Self::new(self.s * k, self.w * k)
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.s + rhs.s, self.w + rhs.w)
    }
}

impl AddAssign for Bidegree {
    fn add_assign(&mut self, rhs: Bidegree) {
        *self = *self + rhs;
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, rhs: Bidegree) -> Bidegree {
        Bidegree::new(self.s - rhs.s, self.w - rhs.w)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.s, -self.w)
    }
}

impl From<(i32, i32)> for Bidegree {
    fn from((s, w): (i32, i32)) -> Self {
        Self::new(s, w)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.w)
    }
}
