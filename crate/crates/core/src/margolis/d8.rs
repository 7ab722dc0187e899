//! The group algebra `F2[D8]` and the images of `Sq1 ↦ 1 + x`,
//! `Sq2 ↦ 1 + y`.
//!
//! `D8` is generated by involutions `x`, `y` with `(xy)^4 = 1`. Elements are
//! written `r^i s^e` with `r = xy`, `s = x`, using `s r = r^{-1} s`; then
//! `x = r^0 s`, `y = x·r = r^3 s`.

use crate::linalg::{BitVec, Echelon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct GroupElement {
    rotation: u8,
    reflection: bool,
}

impl GroupElement {
    const IDENTITY: GroupElement = GroupElement {
        rotation: 0,
        reflection: false,
    };

    fn index(self) -> usize {
        self.rotation as usize + 4 * self.reflection as usize
    }

    fn from_index(k: usize) -> Self {
        GroupElement {
            rotation: (k % 4) as u8,
            reflection: k >= 4,
        }
    }

    fn mul(self, other: GroupElement) -> GroupElement {
        let turn = if self.reflection {
            (4 - other.rotation) % 4
        } else {
            other.rotation
        };
        GroupElement {
            rotation: (self.rotation + turn) % 4,
            reflection: self.reflection ^ other.reflection,
        }
    }
}

/// An element of `F2[D8]` as a subset of the eight group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebra(BitVec);

impl GroupAlgebra {
    pub fn zero() -> Self {
        GroupAlgebra(BitVec::zeros(8))
    }

    pub fn one() -> Self {
        Self::basis(GroupElement::IDENTITY)
    }

    fn basis(g: GroupElement) -> Self {
        GroupAlgebra(BitVec::unit(8, g.index()))
    }

    /// The generator `x`.
    pub fn x() -> Self {
        Self::basis(GroupElement {
            rotation: 0,
            reflection: true,
        })
    }

    /// The generator `y`.
    pub fn y() -> Self {
        Self::basis(GroupElement {
            rotation: 3,
            reflection: true,
        })
    }

    pub fn add(&self, other: &GroupAlgebra) -> GroupAlgebra {
        let mut v = self.0.clone();
        v.xor_assign(&other.0);
        GroupAlgebra(v)
    }

    pub fn mul(&self, other: &GroupAlgebra) -> GroupAlgebra {
        let mut v = BitVec::zeros(8);
        for a in self.0.ones() {
            for b in other.0.ones() {
                v.toggle(
                    GroupElement::from_index(a)
                        .mul(GroupElement::from_index(b))
                        .index(),
                );
            }
        }
        GroupAlgebra(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn vector(&self) -> &BitVec {
        &self.0
    }
}

/// Dimension of the subalgebra generated by `1 + x` and `1 + y`.
pub fn d8_subalgebra_dimension() -> usize {
    let gens = [
        GroupAlgebra::one().add(&GroupAlgebra::x()),
        GroupAlgebra::one().add(&GroupAlgebra::y()),
    ];
    let mut span = Echelon::new(8, 0);
    let mut frontier = vec![GroupAlgebra::one()];
    span.insert(GroupAlgebra::one().vector());
    while let Some(a) = frontier.pop() {
        for g in &gens {
            let p = a.mul(g);
            if span.insert(p.vector()) {
                frontier.push(p);
            }
        }
    }
    span.rank()
}

/// Checks that `S1 = 1 + x`, `S2 = 1 + y` satisfy the `τ = 0` relations of
/// `A(1)` and generate all of `F2[D8]`.
pub fn verify_d8_presentation() -> bool {
    let x = GroupAlgebra::x();
    let y = GroupAlgebra::y();
    let one = GroupAlgebra::one();
    let xy = x.mul(&y);
    let xy4 = xy.mul(&xy).mul(&xy).mul(&xy);
    let group_ok = x.mul(&x) == one && y.mul(&y) == one && xy4 == one && xy.mul(&xy) != one;

    let s1 = one.add(&x);
    let s2 = one.add(&y);
    let s12 = s1.mul(&s2);
    let s21 = s2.mul(&s1);
    group_ok
        && s1.mul(&s1).is_zero()
        && s2.mul(&s2).is_zero()
        && s12.mul(&s12) == s21.mul(&s21)
        && !s12.mul(&s12).is_zero()
        && d8_subalgebra_dimension() == 8
}
