//! Picard-group bookkeeping: joker powers, generator signatures, and the
//! coordinate solver for `Σ^{a,b} Ω^c J^d`.

use std::fmt;
use std::ops::{Add, Neg};
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::margolis::{is_invertible, Signature};
use crate::module::{catalog, dual, suspend, tensor, A1Module};
use crate::stable::{loop_module, loop_power};

/// Coordinates `(a, b, c, d)` of the class of `Σ^{a,b} Ω^c J^d`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PicardCoordinates {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl PicardCoordinates {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::default()
    }
}

impl Add for PicardCoordinates {
    type Output = PicardCoordinates;
    fn add(self, r: PicardCoordinates) -> PicardCoordinates {
        PicardCoordinates::new(self.a + r.a, self.b + r.b, self.c + r.c, self.d + r.d)
    }
}

impl Neg for PicardCoordinates {
    type Output = PicardCoordinates;
    fn neg(self) -> PicardCoordinates {
        PicardCoordinates::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl fmt::Display for PicardCoordinates {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// `J^{⊗d}`, with `DJ` in place of `J` for negative `d`.
pub fn joker_power(d: i32) -> Result<A1Module> {
    let factor = if d >= 0 {
        catalog::joker()
    } else {
        dual(&catalog::joker())
    };
    let mut acc = catalog::unit();
    for k in 0..d.unsigned_abs() {
        acc = if k == 0 {
            factor.clone()
        } else {
            tensor(&acc, &factor)?
        };
    }
    Ok(acc.with_name(format!("J^{d}")))
}

pub fn signature(m: &A1Module) -> Result<Signature> {
    is_invertible(m)?.ok_or(Error::NotInvertible)
}

/// Signatures of `Σ^{1,0}M2`, `Σ^{0,1}M2`, `ΩM2` and `J`, as rows in `Z^6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorLattice {
    pub rows: [[i64; 6]; 4],
}

type Q = Ratio<i64>;

impl GeneratorLattice {
    /// Computes every row from the modules themselves.
    pub fn compute() -> Result<Self> {
        let unit = catalog::unit();
        let rows = [
            signature(&suspend(&unit, 1, 0))?.to_vector(),
            signature(&suspend(&unit, 0, 1))?.to_vector(),
            signature(&loop_module(&unit)?)?.to_vector(),
            signature(&catalog::joker())?.to_vector(),
        ];
        Ok(Self { rows })
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<Q>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..6 {
            let Some(p) = (rank..m.len()).find(|&r| m[r][col] != Q::from_integer(0)) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != Q::from_integer(0) {
                    let f = row[col] / pivot[col];
                    for (x, &v) in row.iter_mut().zip(&pivot) {
                        *x -= f * v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// The unique `(a, b, c, d)` with `a·r0 + b·r1 + c·r2 + d·r3 = v`.
    pub fn solve(&self, v: [i64; 6]) -> Result<PicardCoordinates> {
        let zero = Q::from_integer(0);
        // Augmented 6×5 system with the rows as columns.
        let mut m: Vec<Vec<Q>> = (0..6)
            .map(|i| {
                let mut row: Vec<Q> = self.rows.iter().map(|r| Q::from_integer(r[i])).collect();
                row.push(Q::from_integer(v[i]));
                row
            })
            .collect();
        for col in 0..4 {
            let pivot_row = col;
            let p = (pivot_row..6)
                .find(|&r| m[r][col] != zero)
                .ok_or_else(|| Error::Internal("generator lattice is degenerate".into()))?;
            m.swap(pivot_row, p);
            let lead = m[pivot_row][col];
            for x in m[pivot_row].iter_mut() {
                *x /= lead;
            }
            let pivot = m[pivot_row].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != pivot_row && row[col] != zero {
                    let f = row[col];
                    for (x, &v) in row.iter_mut().zip(&pivot) {
                        *x -= f * v;
                    }
                }
            }
        }
        let inconsistent =
            || Error::LatticeInconsistency(format!("{:?}", Signature::from_vector(v)));
        if m[4..].iter().any(|row| row[4] != zero) {
            return Err(inconsistent());
        }
        let mut x = [0i64; 4];
        for (k, slot) in x.iter_mut().enumerate() {
            let q = m[k][4];
            if !q.is_integer() {
                return Err(inconsistent());
            }
            *slot = q.to_integer();
        }
        Ok(PicardCoordinates::new(x[0], x[1], x[2], x[3]))
    }
}

/// The lattice, computed on first use.
pub fn generator_lattice() -> Result<&'static GeneratorLattice> {
    static LATTICE: OnceLock<std::result::Result<GeneratorLattice, Error>> = OnceLock::new();
    LATTICE
        .get_or_init(|| {
            let l = GeneratorLattice::compute()?;
            if l.rank() != 4 {
                return Err(Error::Internal(format!(
                    "generator lattice has rank {}",
                    l.rank()
                )));
            }
            Ok(l)
        })
        .as_ref()
        .map_err(Clone::clone)
}

/// `Σ^{a,b} Ω^c J^d`.
pub fn picard_element(p: PicardCoordinates) -> Result<A1Module> {
    let narrow = |x: i64| {
        i32::try_from(x).map_err(|_| Error::Internal(format!("coordinate {x} out of range")))
    };
    let base = loop_power(&joker_power(narrow(p.d)?)?, narrow(p.c)?)?;
    Ok(suspend(&base, narrow(p.a)?, narrow(p.b)?))
}

pub fn picard_coordinates(m: &A1Module) -> Result<PicardCoordinates> {
    let sig = signature(m)?;
    generator_lattice()?.solve(sig.to_vector())
}

/// Invertible with zero coordinates. By injectivity of the lattice this is
/// the same as a zero signature.
pub fn is_stably_trivial(m: &A1Module) -> Result<bool> {
    Ok(is_invertible(m)? == Some(Signature::ZERO))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solver_inverts_generators() {
        let l = generator_lattice().unwrap();
        for (k, row) in l.rows.iter().enumerate() {
            let mut expect = [0i64; 4];
            expect[k] = 1;
            let got = l.solve(*row).unwrap();
            assert_eq!([got.a, got.b, got.c, got.d], expect);
        }
    }

    #[test]
    fn solver_rejects_off_lattice_vectors() {
        let l = generator_lattice().unwrap();
        // Q0 and Sq2 classes must differ by an even internal degree.
        assert!(matches!(
            l.solve([1, 0, 0, 0, 0, 0]),
            Err(Error::LatticeInconsistency(_))
        ));
    }

    #[test]
    fn joker_power_zero_is_unit() {
        assert_eq!(joker_power(0).unwrap().basis(), catalog::unit().basis());
        assert_eq!(
            joker_power(-1).unwrap().basis(),
            dual(&catalog::joker()).basis()
        );
    }

    #[test]
    fn coordinates_serialize_flat() {
        let s = serde_json::to_string(&PicardCoordinates::new(0, 0, 0, 0)).unwrap();
        assert_eq!(s, r#"{"a":0,"b":0,"c":0,"d":0}"#);
    }
}
